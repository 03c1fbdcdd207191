use std::sync::OnceLock;

use proptest::prelude::*;
use sixlines::catalog::{build_catalog, Catalog};
use sixlines::divisor::DivisorLiteral;
use sixlines::lattice::{gram_matrix, DivisorClass, Rational, RANK};

fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| build_catalog(true))
}

fn class() -> impl Strategy<Value = DivisorClass> {
    prop::array::uniform16(-20i64..=20).prop_map(DivisorClass::from_doubled)
}

fn gram_pairing(a: &DivisorClass, b: &DivisorClass) -> Rational {
    let g = gram_matrix();
    let mut s = 0i64;
    for i in 0..RANK {
        for j in 0..RANK {
            s += a.doubled()[i] * g.entry(i, j) * b.doubled()[j];
        }
    }
    Rational::new(s, 4)
}

proptest! {
    #[test]
    fn pairing_is_symmetric_and_bilinear(a in class(), b in class(), c in class(), k in -5i64..=5) {
        prop_assert_eq!(a.pairing(&b), b.pairing(&a));
        prop_assert_eq!((a.clone() + b.clone()).pairing(&c), a.pairing(&c) + b.pairing(&c));
        prop_assert_eq!((k * a.clone()).pairing(&b), Rational::from_integer(k) * a.pairing(&b));
    }

    #[test]
    fn pairing_matches_gram_matrix(a in class(), b in class()) {
        prop_assert_eq!(a.pairing(&b), gram_pairing(&a, &b));
    }

    #[test]
    fn integer_curve_combinations_have_even_square(
        picks in prop::collection::vec((0usize..603, -3i64..=3), 1..8)
    ) {
        let cat = catalog();
        let d: DivisorClass = picks.iter().map(|&(i, m)| m * cat.curve(i).cls.clone()).sum();
        let sq = d.square();
        prop_assert!(sq.is_integer());
        prop_assert_eq!(sq.to_integer() % 2, 0);
    }

    #[test]
    fn divisor_json_round_trip(picks in prop::collection::btree_map(0usize..603, 1i64..=9, 1..10)) {
        let cat = catalog();
        let names: Vec<(String, i64)> = picks.iter().map(|(&i, &m)| (cat.curve(i).name.to_string(), m)).collect();
        let lit = DivisorLiteral::from_terms(names.iter().map(|(n, m)| (n.as_str(), *m))).unwrap();
        let again = DivisorLiteral::from_json(&lit.to_json()).unwrap();
        prop_assert_eq!(again.to_json(), lit.to_json());
        let expected: DivisorClass = picks.iter().map(|(&i, &m)| m * cat.curve(i).cls.clone()).sum();
        prop_assert_eq!(lit.class().unwrap(), expected);
    }
}

#[test]
fn audit_attributes_every_rejection_once() {
    use sixlines::classify::{rule_audit, EnumerationMode};
    for mode in [EnumerationMode::Infinite, EnumerationMode::Finite] {
        let a = rule_audit(mode);
        let killed: usize = a.rules.iter().map(|r| r.killed.len()).sum();
        assert_eq!(killed + a.survivors.len(), a.universe);
        assert_eq!(a.overshoot, a.arithmetic_pass - a.survivors.len());
    }
}
