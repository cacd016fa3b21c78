use hypercut::rounding::{local_search_1flip, quadratic_surplus};
use hypercut::solver::sample_and_reduce;
use hypercut::spectral::{negative_eigenspace_psd, DEFAULT_TOL};
use hypercut::{
    best_bipartition, eigen_decompose, energy, random_cut_coefficient, Hypergraph, KCut, Rational, SymmetricMatrix,
};
use itertools::Itertools;
use proptest::prelude::*;

fn arb_hypergraph(r: usize, max_n: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (r..=max_n).prop_flat_map(move |n| {
        let edge = (proptest::sample::subsequence((0..n).collect::<Vec<_>>(), r), 1u64..=3);
        proptest::collection::vec(edge, 0..=max_edges)
            .prop_map(move |edges| Hypergraph::new(r, n, edges).expect("valid edges"))
    })
}

fn arb_assigned(r: usize, max_n: usize, max_edges: usize, k: usize) -> impl Strategy<Value = (Hypergraph, Vec<usize>)> {
    arb_hypergraph(r, max_n, max_edges).prop_flat_map(move |h| {
        let n = h.vertex_count();
        (Just(h), proptest::collection::vec(0..k, n))
    })
}

fn arb_symmetric(max_n: usize) -> impl Strategy<Value = SymmetricMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(-5.0f64..5.0, n * n)
            .prop_map(move |raw| SymmetricMatrix::from_fn(n, |i, j| raw[i * n + j]))
    })
}

fn arb_pair(max_n: usize) -> impl Strategy<Value = (SymmetricMatrix, SymmetricMatrix)> {
    (1..=max_n).prop_flat_map(|n| {
        let cells = proptest::collection::vec(-5.0f64..5.0, n * n);
        (cells.clone(), cells).prop_map(move |(a, b)| {
            (SymmetricMatrix::from_fn(n, |i, j| a[i * n + j]), SymmetricMatrix::from_fn(n, |i, j| b[i * n + j]))
        })
    })
}

fn eigenvalues(a: &SymmetricMatrix) -> Vec<f64> {
    eigen_decompose(a, DEFAULT_TOL).unwrap().eigenvalues().to_vec()
}

fn spectral_slack(a: &SymmetricMatrix) -> f64 {
    1e-8 * (1.0 + a.frobenius()) * a.dim() as f64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cut_never_exceeds_edge_count((h, a) in arb_assigned(3, 9, 12, 3)) {
        let cut = h.cut_size(&a, 3).unwrap();
        prop_assert!(cut <= h.edge_count());
        let kc = KCut::evaluate(&h, a, 3).unwrap();
        let expected = Rational::from_integer(i128::from(cut))
            - random_cut_coefficient(3, 3).unwrap() * Rational::from_integer(i128::from(h.edge_count()));
        prop_assert_eq!(kc.surplus(), expected);
    }

    #[test]
    fn averaging_identity_is_exact(h in arb_hypergraph(3, 6, 8), k in 2usize..=3) {
        let n = h.vertex_count();
        let total: u64 = (0..n).map(|_| 0..k).multi_cartesian_product().map(|a| h.cut_size(&a, k).unwrap()).sum();
        let count = (k as i128).pow(n as u32);
        let mean = Rational::new(i128::from(total), count);
        prop_assert_eq!(mean, random_cut_coefficient(3, k).unwrap() * Rational::from_integer(i128::from(h.edge_count())));
    }

    #[test]
    fn text_round_trip(h in arb_hypergraph(4, 10, 10)) {
        let back = Hypergraph::parse(&h.to_text()).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(back.to_text(), h.to_text());
    }

    #[test]
    fn underlying_edge_count(h in arb_hypergraph(5, 9, 8), q in 2usize..5) {
        let g = h.underlying_multigraph(q).unwrap();
        let choose = (0..q).fold(1u64, |acc, i| acc * (5 - i) as u64 / (i + 1) as u64);
        prop_assert_eq!(g.edge_count(), choose * h.edge_count());
    }

    #[test]
    fn exactly_two_subsets_are_cut((h, a) in arb_assigned(4, 8, 10, 3)) {
        let lower = h.underlying_multigraph(3).unwrap();
        prop_assert_eq!(lower.cut_size(&a, 3).unwrap(), 2 * h.cut_size(&a, 3).unwrap());
    }

    #[test]
    fn reduction_identity((h, a) in arb_assigned(3, 9, 14, 3)) {
        let x: Vec<usize> = (0..h.vertex_count()).filter(|&v| a[v] == 0).collect();
        let red = sample_and_reduce(&h, &x).unwrap();
        let in_z: Vec<bool> = red.remaining().iter().map(|&v| a[v] == 2).collect();
        let local: Vec<usize> = in_z.iter().map(|&z| usize::from(z)).collect();
        let pair_cut = red.graph().cut_size(&local, 2).unwrap();
        prop_assert_eq!(red.lift(&in_z), a.clone());
        prop_assert_eq!(h.cut_size(&a, 3).unwrap(), pair_cut);
    }

    #[test]
    fn decomposition_reconstructs(a in arb_symmetric(12)) {
        let e = eigen_decompose(&a, DEFAULT_TOL).unwrap();
        let slack = spectral_slack(&a);
        prop_assert!(e.orthonormality_error() <= 1e-9 * a.dim() as f64);
        prop_assert!(e.reconstruct().combine(1.0, &a, -1.0).frobenius() <= slack);
        prop_assert!(e.eigenvalues().windows(2).all(|w| w[0] >= w[1]));
        let sum_sq: f64 = e.eigenvalues().iter().map(|l| l * l).sum();
        prop_assert!((sum_sq.sqrt() - a.frobenius()).abs() <= slack);
        prop_assert!((e.eigenvalues().iter().sum::<f64>() - a.trace()).abs() <= slack);
    }

    #[test]
    fn weyl_inequalities((a, b) in arb_pair(10)) {
        let (la, lb, ls) = (eigenvalues(&a), eigenvalues(&b), eigenvalues(&a.combine(1.0, &b, 1.0)));
        let n = la.len();
        let slack = spectral_slack(&a) + spectral_slack(&b);
        for i in 0..n {
            for j in 0..n - i {
                prop_assert!(ls[i + j] <= la[i] + lb[j] + slack);
            }
        }
    }

    #[test]
    fn cauchy_interlacing(a in arb_symmetric(10), mask in proptest::collection::vec(any::<bool>(), 10)) {
        let n = a.dim();
        let idx: Vec<usize> = (0..n).filter(|&i| mask[i]).collect();
        prop_assume!(!idx.is_empty());
        let (la, lb) = (eigenvalues(&a), eigenvalues(&a.principal_submatrix(&idx)));
        let slack = spectral_slack(&a);
        for (i, &l) in lb.iter().enumerate() {
            prop_assert!(la[i] + slack >= l);
            prop_assert!(l + slack >= la[i + n - idx.len()]);
        }
    }

    #[test]
    fn energy_is_subadditive((a, b) in arb_pair(12)) {
        let sum = energy(&a.combine(1.0, &b, 1.0)).unwrap();
        let slack = spectral_slack(&a) + spectral_slack(&b);
        prop_assert!(sum <= energy(&a).unwrap() + energy(&b).unwrap() + slack);
    }

    #[test]
    fn spectral_quantities_are_basis_invariant(a in arb_symmetric(9), perm_seed in any::<u64>()) {
        let n = a.dim();
        let mut perm: Vec<usize> = (0..n).collect();
        // a cheap deterministic shuffle is enough to scramble the rotation order
        let mut s = perm_seed | 1;
        for i in (1..n).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let pa = SymmetricMatrix::from_fn(n, |i, j| a.get(perm[i], perm[j]));
        let (ea, ep) = (eigen_decompose(&a, DEFAULT_TOL).unwrap(), eigen_decompose(&pa, DEFAULT_TOL).unwrap());
        let slack = spectral_slack(&a);
        for (x, y) in ea.eigenvalues().iter().zip(ep.eigenvalues()) {
            prop_assert!((x - y).abs() <= slack);
        }
        prop_assert!((ea.energy() - ep.energy()).abs() <= slack * n as f64);
        // the projector is a function of the eigenspace, not of the chosen basis,
        // provided no eigenvalue sits next to the cut-off
        let gap = ea.eigenvalues().iter().map(|l| (l - ea.negative_threshold()).abs()).fold(f64::INFINITY, f64::min);
        prop_assume!(gap > 1e-6);
        let (xa, xp) = (negative_eigenspace_psd(&ea), negative_eigenspace_psd(&ep));
        for i in 0..n {
            for j in 0..n {
                prop_assert!((xa.get(perm[i], perm[j]) - xp.get(i, j)).abs() <= 1e-6);
            }
        }
    }

    #[test]
    fn local_search_never_decreases(h in arb_hypergraph(2, 12, 30), signs in proptest::collection::vec(any::<bool>(), 12)) {
        let a = h.adjacency().unwrap();
        let x: Vec<i8> = (0..h.vertex_count()).map(|i| if signs[i] { 1 } else { -1 }).collect();
        let out = local_search_1flip(&a, &x).unwrap();
        prop_assert!(out.value() >= quadratic_surplus(&a, &x) - 1e-9);
        for i in 0..x.len() {
            let mut y = out.signs().to_vec();
            y[i] = -y[i];
            prop_assert!(quadratic_surplus(&a, &y) <= out.value() + 1e-9);
        }
        // a 1-flip local optimum cuts at least half of every vertex's edges
        prop_assert!(out.value() >= -1e-9);
    }

    #[test]
    fn bipartition_value_is_cut_minus_half(h in arb_hypergraph(2, 10, 25), seed in any::<u64>()) {
        let a = h.adjacency().unwrap();
        let best = best_bipartition(&a, 20, seed).unwrap();
        let cut = h.cut_size(&best.assignment(), 2).unwrap() as f64;
        prop_assert!((best.value() - (cut - h.edge_count() as f64 / 2.0)).abs() <= 1e-9);
        prop_assert!((best.cut_weight(&a) - cut).abs() <= 1e-9);
        prop_assert!(best.value() >= -1e-9);
    }
}
