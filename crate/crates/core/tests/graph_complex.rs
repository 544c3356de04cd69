use gckit_core::complex::{
    bracket, bracket_graphs, cocycle_kernel, differential, insert, is_cocycle, parse_graph_sum,
    GraphSum,
};
use gckit_core::corpus;
use gckit_core::graphs::{automorphisms, canonicalize, is_zero_graph};
use gckit_core::{Rational, Sign, UnorientedGraph};
use proptest::prelude::*;

fn sum(g: &UnorientedGraph) -> GraphSum {
    GraphSum::from_graph(g)
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn parity(perm: &[usize]) -> Sign {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    Sign::from_parity(inv)
}

/// Automorphisms by trying every vertex permutation, with the sign of the
/// induced edge permutation.
fn brute_force_automorphisms(g: &UnorientedGraph) -> Vec<Sign> {
    let key = |u: usize, v: usize| if u < v { (u, v) } else { (v, u) };
    let mut out = Vec::new();
    for p in all_permutations(g.vertex_count()) {
        let image: Option<Vec<usize>> = g
            .edges()
            .iter()
            .map(|&(u, v)| g.edges().iter().position(|&e| e == key(p[u], p[v])))
            .collect();
        if let Some(image) = image {
            out.push(parity(&image));
        }
    }
    out
}

#[test]
fn automorphism_groups() {
    let path = automorphisms(&corpus::path3());
    assert_eq!(path.len(), 2);
    let mut signs: Vec<Sign> = path.iter().map(|a| a.edge_sign).collect();
    signs.sort_by_key(|s| s.to_i64());
    assert_eq!(signs, [Sign::Minus, Sign::Plus]);

    let edge = automorphisms(&corpus::edge());
    assert_eq!(edge.len(), 2);
    assert!(edge.iter().all(|a| a.edge_sign == Sign::Plus));

    let tetra = corpus::tetrahedron();
    let mut found: Vec<i64> = automorphisms(&tetra)
        .iter()
        .map(|a| a.edge_sign.to_i64())
        .collect();
    let mut oracle: Vec<i64> = brute_force_automorphisms(&tetra)
        .iter()
        .map(|s| s.to_i64())
        .collect();
    found.sort_unstable();
    oracle.sort_unstable();
    assert_eq!(oracle.len(), 24);
    assert_eq!(found, oracle);
}

#[test]
fn single_edge_is_canonical() {
    let c = canonicalize(&corpus::edge());
    assert_eq!(c.graph, corpus::edge());
    assert_eq!(c.sign, Sign::Plus);
    assert!(!c.is_zero);
}

#[test]
fn insertion_gradings() {
    let e = corpus::edge();
    let t = corpus::tetrahedron();
    assert!(insert(&e, &e).is_empty());
    for s in [insert(&e, &t), insert(&t, &e)] {
        assert!(!s.is_empty());
        assert!(s.bigradings().into_iter().all(|b| b == (5, 7)));
    }
}

#[test]
fn brackets_that_vanish() {
    let e = corpus::edge();
    let t = corpus::tetrahedron();
    assert!(bracket_graphs(&e, &e).is_empty());
    assert!(bracket_graphs(&t, &t).is_empty());
    assert_eq!(bracket_graphs(&e, &t), differential(&sum(&t)));
    assert!(differential(&sum(&t)).is_empty());
    assert!(differential(&sum(&e)).is_empty());
}

#[test]
fn the_wheel_alone_is_not_a_cocycle() {
    let w = sum(&corpus::pentagon_wheel());
    let d = differential(&w);
    assert!(!d.is_empty());
    assert!(d.bigradings().into_iter().all(|b| b == (7, 11)));
    assert!(!is_cocycle(&w));
}

#[test]
fn cocycle_cases() {
    assert!(is_cocycle(&sum(&corpus::tetrahedron())));
    // the zero graph is the zero sum
    assert!(sum(&corpus::path3()).is_empty());
    assert!(is_cocycle(&sum(&corpus::path3())));
    assert!(cocycle_kernel(3, 4, true).is_empty());
}

#[test]
fn pentagon_cocycle() {
    let k = cocycle_kernel(6, 10, true);
    assert_eq!(k.len(), 1);
    let gamma = &k[0];
    assert_eq!(gamma.len(), 2);
    assert!(is_cocycle(gamma));
    let wheel = canonicalize(&corpus::pentagon_wheel()).graph;
    let other = gamma
        .iter()
        .map(|(g, _)| g)
        .find(|g| **g != wheel)
        .unwrap()
        .clone();
    assert!(other.degrees().iter().all(|&d| d >= 3));
    assert!(!is_cocycle(&sum(&wheel)));
    assert!(!is_cocycle(&sum(&other)));
}

#[test]
fn mixed_sums_parse_and_bracket() {
    let s =
        parse_graph_sum("1 * g 2 1 : 1 2\n1/2 * g 4 6 : 1 2, 1 3, 1 4, 2 3, 2 4, 3 4\n").unwrap();
    assert_eq!(s.bigradings().len(), 2);
    // bilinear expansion: d of the edge part vanishes, d of the tetrahedron too
    assert!(differential(&s).is_empty());
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = UnorientedGraph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let m = pairs.len();
            (
                Just(n),
                prop::sample::subsequence(pairs, 1..=m).prop_shuffle(),
            )
        })
        .prop_map(|(n, edges)| UnorientedGraph::from_zero_based(n, edges).unwrap())
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn graph_and_perm() -> impl Strategy<Value = (UnorientedGraph, Vec<usize>)> {
    graph_strategy(6).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), perm_strategy(n))
    })
}

fn graph_and_edge_perm() -> impl Strategy<Value = (UnorientedGraph, Vec<usize>)> {
    graph_strategy(6).prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), perm_strategy(m))
    })
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(g in graph_strategy(6)) {
        let c = canonicalize(&g);
        let again = canonicalize(&c.graph);
        prop_assert_eq!(&again.graph, &c.graph);
        prop_assert_eq!(again.sign, Sign::Plus);
        prop_assert_eq!(again.is_zero, c.is_zero);
    }

    #[test]
    fn relabeling_vertices_keeps_the_signed_form((g, p) in graph_and_perm()) {
        let h = g.relabel_vertices(&p).unwrap();
        let (cg, ch) = (canonicalize(&g), canonicalize(&h));
        prop_assert_eq!(cg.graph, ch.graph);
        prop_assert_eq!(cg.is_zero, ch.is_zero);
        if !cg.is_zero {
            prop_assert_eq!(cg.sign, ch.sign);
        }
    }

    #[test]
    fn reordering_edges_costs_its_parity((g, p) in graph_and_edge_perm()) {
        let h = g.permute_edges(&p).unwrap();
        let (cg, ch) = (canonicalize(&g), canonicalize(&h));
        prop_assert_eq!(&cg.graph, &ch.graph);
        if !cg.is_zero {
            prop_assert_eq!(ch.sign, cg.sign * parity(&p));
        }
    }

    #[test]
    fn zero_graphs_have_balanced_automorphisms(g in graph_strategy(5)) {
        let signs = brute_force_automorphisms(&g);
        let odd = signs.iter().filter(|s| s.is_negative()).count();
        prop_assert_eq!(is_zero_graph(&g), 2 * odd == signs.len());
        prop_assert_eq!(automorphisms(&g).len(), signs.len());
    }

    #[test]
    fn insertion_adds_gradings(a in graph_strategy(4), b in graph_strategy(4)) {
        let want = (a.vertex_count() + b.vertex_count() - 1, a.edge_count() + b.edge_count());
        prop_assert!(insert(&a, &b).bigradings().into_iter().all(|x| x == want));
    }

    #[test]
    fn bracket_is_graded_antisymmetric(a in graph_strategy(4), b in graph_strategy(4)) {
        let ab = bracket_graphs(&a, &b);
        let ba = bracket_graphs(&b, &a);
        let sign = -Sign::from_parity(a.edge_count() * b.edge_count());
        prop_assert_eq!(ab, ba.scaled(&sign.to_rational()));
    }

    #[test]
    fn differential_squares_to_zero(g in graph_strategy(5)) {
        prop_assert!(differential(&differential(&sum(&g))).is_empty());
    }

    #[test]
    fn graph_sum_text_round_trip(gs in prop::collection::vec((graph_strategy(5), -5i64..=5, 1i64..=4), 0..4)) {
        let mut s = GraphSum::new();
        for (g, num, den) in &gs {
            s.add_term(g, Rational::new((*num).into(), (*den).into()));
        }
        prop_assert_eq!(parse_graph_sum(&s.to_text()).unwrap(), s);
    }
}

#[test]
fn jacobi_identity_on_small_graphs() {
    let samples = [
        corpus::point(),
        corpus::edge(),
        corpus::tetrahedron(),
        UnorientedGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap(),
        UnorientedGraph::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap(),
    ];
    let deg = |g: &UnorientedGraph| g.edge_count();
    for a in &samples {
        for b in &samples {
            for c in &samples {
                if a.vertex_count() + b.vertex_count() + c.vertex_count() > 9 {
                    continue;
                }
                let (sa, sb, sc) = (sum(a), sum(b), sum(c));
                // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
                let lhs = bracket(&sa, &bracket(&sb, &sc));
                let mut rhs = bracket(&bracket(&sa, &sb), &sc);
                let sign = Sign::from_parity(deg(a) * deg(b)).to_rational();
                rhs.add_sum(&bracket(&sb, &bracket(&sa, &sc)), &sign);
                assert_eq!(lhs, rhs, "Jacobi fails on {a}, {b}, {c}");
            }
        }
    }
}
