mod common;

use common::{alternates, brute_force_kernel, criterion_diagrams, cycle_gram};
use sixlines::fiber::{
    labelling_is_valid, null_vector, recognize, valid_labellings, AffineDiagram, DualGraph, FiberLabel,
    KodairaType, RecognitionResult,
};

#[test]
fn null_vectors_match_brute_force() {
    for d in criterion_diagrams() {
        let g = DualGraph::of_diagram(d);
        let brute = brute_force_kernel(&d.gram(), 6).unwrap_or_else(|| panic!("{d}: no kernel vector"));
        assert_eq!(null_vector(&g).unwrap(), brute, "{d}");
        assert_eq!(d.multiplicities(), brute, "{d}");
    }
}

#[test]
fn brute_force_finds_nothing_for_finite_diagrams() {
    // A_3 and D_4 chains are negative definite.
    let a3 = vec![vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -2]];
    assert_eq!(brute_force_kernel(&a3, 10), None);
    let d4 = DualGraph::of_diagram(AffineDiagram::D(4)).subgraph(&[0, 1, 2, 3]);
    assert_eq!(brute_force_kernel(d4.gram(), 10), None);
}

#[test]
fn recognition_of_whole_diagrams() {
    for d in criterion_diagrams() {
        let r = recognize(&DualGraph::of_diagram(d)).unwrap();
        let expected = match d {
            AffineDiagram::A(1) => FiberLabel::I2OrIII,
            AffineDiagram::A(2) => FiberLabel::I3OrIV,
            AffineDiagram::A(n) => FiberLabel::Type(KodairaType::I(n + 1)),
            AffineDiagram::D(n) => FiberLabel::Type(KodairaType::IStar(n - 4)),
            AffineDiagram::E6 => FiberLabel::Type(KodairaType::IVStar),
            AffineDiagram::E7 => FiberLabel::Type(KodairaType::IIIStar),
            AffineDiagram::E8 => FiberLabel::Type(KodairaType::IIStar),
        };
        assert_eq!(r.label(), Some(expected), "{d}");
        assert_eq!(r.multiplicities(), Some(d.multiplicities().as_slice()), "{d}");
    }
}

#[test]
fn proper_subgraphs_are_partial() {
    for d in criterion_diagrams() {
        let g = DualGraph::of_diagram(d);
        let n = g.len();
        if n < 3 {
            continue;
        }
        for drop in 0..n {
            let keep: Vec<usize> = (0..n).filter(|&v| v != drop).collect();
            let sub = g.subgraph(&keep);
            if !sub.is_connected() {
                continue;
            }
            match recognize(&sub).unwrap() {
                RecognitionResult::Partial { completions } => {
                    assert!(completions.iter().any(|c| c.diagram == d), "{d} minus {drop}");
                }
                other => panic!("{d} minus {drop}: {other:?}"),
            }
        }
    }
}

#[test]
fn odd_cycles_admit_no_labelling() {
    for n in 3..=12 {
        let gram = cycle_gram(n);
        let mut valid = 0;
        for mask in 0u32..(1 << n) {
            let lab: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            let ok = labelling_is_valid(&gram, &lab);
            assert_eq!(ok, alternates(&lab), "n={n} mask={mask:b}");
            valid += ok as usize;
        }
        assert_eq!(valid, if n % 2 == 0 { 2 } else { 0 }, "n={n}");
        assert_eq!(valid_labellings(&gram).len(), valid, "n={n}");
    }
}
