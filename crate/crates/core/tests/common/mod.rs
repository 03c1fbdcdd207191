#![allow(dead_code)]

use sixlines::fiber::AffineDiagram;

/// Smallest positive integer vector `v` with `G v = 0` and entries at most
/// `bound`, found by depth-first search over the entries in order. A row
/// is checked as soon as all of its nonzero columns are assigned.
pub fn brute_force_kernel(gram: &[Vec<i64>], bound: i64) -> Option<Vec<i64>> {
    let n = gram.len();
    let last_col: Vec<usize> =
        (0..n).map(|i| (0..n).filter(|&j| gram[i][j] != 0).max().unwrap_or(0)).collect();
    let mut v = vec![0; n];
    fn dfs(k: usize, gram: &[Vec<i64>], last: &[usize], bound: i64, v: &mut Vec<i64>) -> bool {
        let n = gram.len();
        if k == n {
            return true;
        }
        for x in 1..=bound {
            v[k] = x;
            let ok = (0..n).filter(|&i| last[i] == k).all(|i| (0..=k).map(|j| gram[i][j] * v[j]).sum::<i64>() == 0);
            if ok && dfs(k + 1, gram, last, bound, v) {
                return true;
            }
        }
        v[k] = 0;
        false
    }
    dfs(0, gram, &last_col, bound, &mut v).then_some(v)
}

/// The affine diagrams of the criterion: `Ã_1..Ã_11`, `D̃_4..D̃_10`, `Ẽ_6..Ẽ_8`.
pub fn criterion_diagrams() -> Vec<AffineDiagram> {
    let mut v: Vec<AffineDiagram> = (1..=11).map(AffineDiagram::A).collect();
    v.extend((4..=10).map(AffineDiagram::D));
    v.extend([AffineDiagram::E6, AffineDiagram::E7, AffineDiagram::E8]);
    v
}

/// Gram matrix of an `n`-cycle of (-2)-curves meeting transversally.
pub fn cycle_gram(n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; n]; n];
    for i in 0..n {
        g[i][i] = -2;
        g[i][(i + 1) % n] += 1;
        g[(i + 1) % n][i] += 1;
    }
    g
}

/// Whether a labelling alternates special and ordinary around a cycle,
/// as odd intersection numbers force.
pub fn alternates(special: &[bool]) -> bool {
    let n = special.len();
    (0..n).all(|i| special[i] != special[(i + 1) % n])
}
