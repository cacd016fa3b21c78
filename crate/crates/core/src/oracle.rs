//! Exhaustive maximum k-cut.

use crate::error::{input, Error, Result};
use crate::hypergraph::{Hypergraph, KCut};
use crate::kway::CutState;

/// Largest `k^n` the exhaustive search accepts.
pub const MAX_ASSIGNMENTS: u64 = 100_000_000;

/// Exact maximum k-cut by enumerating every assignment with vertex 0 pinned
/// to part 0. Assignments are visited in lexicographic order and only strict
/// improvements replace the incumbent, so the returned assignment is the
/// lexicographically smallest optimum.
pub fn brute_force_max_kcut(h: &Hypergraph, k: usize) -> Result<KCut> {
    if !(2..=64).contains(&k) {
        return input(format!("part count {k} outside 2..=64"));
    }
    let n = h.vertex_count();
    let total = (k as u64).checked_pow(n as u32).filter(|&t| t <= MAX_ASSIGNMENTS);
    if total.is_none() {
        return Err(Error::Capacity(format!("{k}^{n} assignments exceeds the exhaustive limit of {MAX_ASSIGNMENTS}")));
    }
    if n == 0 {
        return KCut::evaluate(h, Vec::new(), k);
    }

    let mut state = CutState::new(h, vec![0; n], k);
    let mut best_value = state.value();
    let mut best = state.assignment().to_vec();
    // odometer step over positions n-1 .. 1
    while let Some(pos) = (1..n).rev().find(|&i| state.assignment()[i] + 1 < k) {
        let next = state.assignment()[pos] + 1;
        state.relocate(pos, next);
        for j in (pos + 1)..n {
            state.relocate(j, 0);
        }
        if state.value() > best_value {
            best_value = state.value();
            best.copy_from_slice(state.assignment());
        }
    }
    KCut::evaluate(h, best, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Rational;
    use itertools::Itertools;

    fn naive(h: &Hypergraph, k: usize) -> u64 {
        let n = h.vertex_count();
        (0..n).map(|_| 0..k).multi_cartesian_product().map(|a| h.cut_size(&a, k).unwrap()).max().unwrap_or(0)
    }

    #[test]
    fn oracle_examples() {
        let single = Hypergraph::from_edges(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(brute_force_max_kcut(&single, 3).unwrap().cut_value(), 1);

        let k5 = Hypergraph::from_edges(2, 5, (0..5).combinations(2)).unwrap();
        let cut = brute_force_max_kcut(&k5, 2).unwrap();
        assert_eq!(cut.cut_value(), 6);
        assert_eq!(cut.assignment(), &[0, 0, 0, 1, 1]);

        let c35 = Hypergraph::from_edges(3, 5, (0..5).combinations(3)).unwrap();
        let cut = brute_force_max_kcut(&c35, 3).unwrap();
        assert_eq!(cut.cut_value(), naive(&c35, 3));
        // a triple is cut only with one vertex per part, so the best split is 1+2+2
        assert_eq!(cut.cut_value(), 4);
        assert_eq!(cut.surplus(), Rational::new(16, 9));
        assert!(cut.surplus() <= Rational::from_integer(25));
    }

    #[test]
    fn oracle_matches_naive_enumeration() {
        let h = Hypergraph::new(3, 6, [(vec![0, 1, 2], 2), (vec![1, 3, 5], 1), (vec![2, 4, 5], 3), (vec![0, 3, 4], 1)])
            .unwrap();
        for k in 2..=3 {
            let cut = brute_force_max_kcut(&h, k).unwrap();
            assert_eq!(cut.cut_value(), naive(&h, k));
            assert_eq!(cut.cut_value(), h.cut_size(cut.assignment(), k).unwrap());
        }
    }

    #[test]
    fn oracle_guards() {
        let big = Hypergraph::empty(3, 30).unwrap();
        assert!(matches!(brute_force_max_kcut(&big, 3), Err(Error::Capacity(_))));
        let h = Hypergraph::empty(3, 3).unwrap();
        assert!(brute_force_max_kcut(&h, 1).is_err());
        let none = Hypergraph::empty(3, 0).unwrap();
        assert_eq!(brute_force_max_kcut(&none, 3).unwrap().cut_value(), 0);
    }
}
