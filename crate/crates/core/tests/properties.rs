use num_bigint::BigInt;
use proptest::prelude::*;
use rdd_core::roman::{brute_force_min_rdf, enumerate_min_rdfs, is_valid_rdf};
use rdd_core::spectral::poly_roots_check;
use rdd_core::{
    all_pairs_distances, build_mrdd, char_poly, disjoint_union, eigenvalues, min_roman_domination,
    Graph, JacobiOptions, RomanDominatingFunction,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
        for &j in g.neighbors(i) {
            row[j] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.vertex_count(), &edges).unwrap()
}

fn relabel_rdf(f: &RomanDominatingFunction, perm: &[usize]) -> RomanDominatingFunction {
    let map = |s: &[usize]| {
        let mut out: Vec<_> = s.iter().map(|&v| perm[v]).collect();
        out.sort_unstable();
        out
    };
    RomanDominatingFunction {
        v0: map(&f.v0),
        v1: map(&f.v1),
        v2: map(&f.v2),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bfs_matches_floyd_warshall(g in graph(10)) {
        let dm = all_pairs_distances(&g);
        let fw = floyd_warshall(&g);
        for (i, row) in fw.iter().enumerate() {
            for (j, &d) in row.iter().enumerate() {
                prop_assert_eq!(dm.get(i, j), d);
            }
        }
    }

    #[test]
    fn solver_matches_brute_force(g in graph(9)) {
        let (w, f) = min_roman_domination(&g).unwrap();
        prop_assert_eq!(w, brute_force_min_rdf(&g).unwrap());
        prop_assert!(is_valid_rdf(&g, &f));
        prop_assert_eq!(f.weight(), w);
        let e = enumerate_min_rdfs(&g, 4096).unwrap();
        prop_assert_eq!(&e.rdfs[0], &f);
        for h in &e.rdfs {
            prop_assert!(is_valid_rdf(&g, h) && h.weight() == w);
        }
        // strictly increasing (V2, V1) order, no repeats
        for pair in e.rdfs.windows(2) {
            prop_assert!((&pair[0].v2, &pair[0].v1) < (&pair[1].v2, &pair[1].v1));
        }
    }

    #[test]
    fn charpoly_is_relabeling_invariant((g, perm) in graph_with_perm(8)) {
        let (w, f) = min_roman_domination(&g).unwrap();
        let h = relabel(&g, &perm);
        let fh = relabel_rdf(&f, &perm);
        prop_assert!(is_valid_rdf(&h, &fh));
        prop_assert_eq!(min_roman_domination(&h).unwrap().0, w);
        let pg = char_poly(&build_mrdd(&all_pairs_distances(&g), &f).unwrap()).unwrap();
        let ph = char_poly(&build_mrdd(&all_pairs_distances(&h), &fh).unwrap()).unwrap();
        prop_assert_eq!(pg, ph);
    }

    /// The two top coefficients are the exact forms of the moment identities:
    /// `c_{n-1} = -tr A` and `c_{n-2} = ((tr A)² - tr A²)/2`.
    #[test]
    fn leading_coefficients_are_moments(g in graph(9)) {
        let (w, f) = min_roman_domination(&g).unwrap();
        let a = build_mrdd(&all_pairs_distances(&g), &f).unwrap();
        let p = char_poly(&a).unwrap();
        let n = g.vertex_count();
        let c = p.coeffs();
        prop_assert_eq!(&c[n], &BigInt::from(1));
        prop_assert_eq!(&c[n - 1], &BigInt::from(-(w as i64)));
        if n >= 2 {
            let tr = w as i64;
            let tr2: i64 = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| a.get(i, j).pow(2)).sum();
            prop_assert_eq!(&c[n - 2], &BigInt::from((tr * tr - tr2) / 2));
        }
    }

    #[test]
    fn eigenvalues_are_roots_and_sum_to_trace(g in graph(10)) {
        let (w, f) = min_roman_domination(&g).unwrap();
        let a = build_mrdd(&all_pairs_distances(&g), &f).unwrap();
        let s = eigenvalues(&a, JacobiOptions::default()).unwrap();
        let p = char_poly(&a).unwrap();
        prop_assert!(poly_roots_check(&p, &s, 1e-6).pass);
        let n = g.vertex_count() as f64;
        prop_assert!((s.sum() - w as f64).abs() < n * 1e-9);
        prop_assert!((s.sum_of_squares() - a.frobenius_squared() as f64).abs() < n * 1e-8);
        prop_assert!(s.eigenvalues.windows(2).all(|p| p[0] >= p[1]));
        prop_assert!(s.energy >= s.spectral_radius() - 1e-12);
    }

    #[test]
    fn union_charpoly_is_product(g in graph(6), h in graph(6)) {
        let (_, fg) = min_roman_domination(&g).unwrap();
        let (_, fh) = min_roman_domination(&h).unwrap();
        let ag = build_mrdd(&all_pairs_distances(&g), &fg).unwrap();
        let ah = build_mrdd(&all_pairs_distances(&h), &fh).unwrap();
        let u = disjoint_union(&g, &h);
        let (wu, _) = min_roman_domination(&u).unwrap();
        prop_assert_eq!(wu, fg.weight() + fh.weight());
        let block = ag.block_diagonal(&ah);
        let shift = g.vertex_count();
        let lift = |a: &[usize], b: &[usize]| a.iter().copied().chain(b.iter().map(|v| v + shift)).collect();
        let fu = RomanDominatingFunction { v0: lift(&fg.v0, &fh.v0), v1: lift(&fg.v1, &fh.v1), v2: lift(&fg.v2, &fh.v2) };
        prop_assert_eq!(&build_mrdd(&all_pairs_distances(&u), &fu).unwrap(), &block);
        prop_assert_eq!(char_poly(&block).unwrap(), char_poly(&ag).unwrap().mul(&char_poly(&ah).unwrap()));
    }

    #[test]
    fn edge_list_round_trips(g in graph(12)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}
