use proptest::prelude::*;

use sgqft::algebra::{rat, Rational};
use sgqft::calculus::{abstract_free_energy, op_attach, op_cut, op_d, op_glue_leg, GraphSum};
use sgqft::graphs::{canonicalize, enumerate_stable, EnumOptions, StableGraph};

/// |Aut| by trying every bijection of half-edges that preserves the edge
/// involution, the set of legs, vertex incidence and vertex genera. For a
/// connected graph the vertex map is determined by the half-edge map.
fn brute_force_aut(g: &StableGraph) -> u128 {
    let h = g.num_half_edges();
    let mut partner = vec![usize::MAX; h];
    for &(a, b) in g.pairs() {
        partner[a] = b;
        partner[b] = a;
    }
    fn extend(
        g: &StableGraph,
        partner: &[usize],
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        vmap: &mut Vec<Option<usize>>,
    ) -> u128 {
        let i = sigma.len();
        if i == partner.len() {
            return 1;
        }
        let mut count = 0;
        for x in 0..partner.len() {
            if used[x] || (partner[i] == usize::MAX) != (partner[x] == usize::MAX) {
                continue;
            }
            if partner[i] != usize::MAX && partner[i] < i && sigma[partner[i]] != partner[x] {
                continue;
            }
            let (v, w) = (g.owner(i), g.owner(x));
            if g.genera()[v] != g.genera()[w] {
                continue;
            }
            let fresh = match vmap[v] {
                Some(u) if u != w => continue,
                Some(_) => false,
                None => {
                    if vmap.contains(&Some(w)) {
                        continue;
                    }
                    true
                }
            };
            if fresh {
                vmap[v] = Some(w);
            }
            used[x] = true;
            sigma.push(x);
            count += extend(g, partner, sigma, used, vmap);
            sigma.pop();
            used[x] = false;
            if fresh {
                vmap[v] = None;
            }
        }
        count
    }
    extend(g, &partner, &mut Vec::new(), &mut vec![false; h], &mut vec![None; g.num_vertices()])
}

fn small_graph() -> impl Strategy<Value = StableGraph> {
    (1usize..=3)
        .prop_flat_map(|nv| {
            (
                prop::collection::vec(0u32..=2, nv),
                prop::collection::vec((0..nv, 0..nv), 0..=4),
                prop::collection::vec(0..nv, 0..=3),
            )
        })
        .prop_filter_map("too many half-edges or disconnected", |(genera, edges, legs)| {
            if 2 * edges.len() + legs.len() > 8 {
                return None;
            }
            StableGraph::from_edges(&genera, &edges, &legs).ok().filter(|g| g.is_connected())
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn relabelled() -> impl Strategy<Value = (StableGraph, StableGraph)> {
    small_graph().prop_flat_map(|g| {
        let (nv, nh) = (g.num_vertices(), g.num_half_edges());
        (Just(g), permutation(nv), permutation(nh)).prop_map(|(g, vp, hp)| {
            let p = g.permuted(&vp, &hp);
            (g, p)
        })
    })
}

fn some_sums() -> Vec<GraphSum> {
    [(0, 3), (0, 4), (1, 1), (1, 2), (2, 0), (2, 1)]
        .iter()
        .map(|&(g, n)| abstract_free_energy(g, n, 1).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn automorphisms_agree_with_brute_force(g in small_graph()) {
        let (_, aut) = canonicalize(&g).unwrap();
        prop_assert_eq!(aut, brute_force_aut(&g));
    }

    #[test]
    fn canonical_key_is_invariant((g, p) in relabelled()) {
        let (k1, a1) = canonicalize(&g).unwrap();
        let (k2, a2) = canonicalize(&p).unwrap();
        prop_assert_eq!(k1, k2);
        prop_assert_eq!(a1, a2);
    }

    #[test]
    fn operators_are_linear(i in 0usize..6, j in 0usize..6, p in -5i64..=5, q in 1i64..=4) {
        let sums = some_sums();
        let c = rat(p, q);
        let (a, b) = (&sums[i], &sums[j]);
        let combo = a.add(&b.scale(&c));
        for op in [op_cut, op_attach, op_glue_leg, op_d] {
            let lhs = op(&combo).unwrap();
            let rhs = op(a).unwrap().add(&op(b).unwrap().scale(&c));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn enumeration_is_closed_and_complete_for_small_types() {
    for g in 0..=2u32 {
        for n in 0..=3u32 {
            if 2 * g + n <= 2 || (g == 2 && n == 3) {
                continue;
            }
            let classes = enumerate_stable(g, n, EnumOptions::default()).unwrap();
            let mut keys = Vec::new();
            for (gr, aut) in &classes {
                assert!(gr.is_connected() && gr.is_stable());
                assert_eq!((gr.genus(), gr.num_legs()), (g as i64, n as usize));
                assert_eq!(*aut, brute_force_aut(gr));
                keys.push(canonicalize(gr).unwrap().0);
            }
            keys.sort();
            keys.dedup();
            assert_eq!(keys.len(), classes.len(), "duplicate classes at ({}, {})", g, n);
            // Adding a leg anywhere stays inside the family of type (g, n + 1).
            let bigger = enumerate_stable(g, n + 1, EnumOptions::default()).unwrap();
            let bigger_keys: Vec<_> = bigger.iter().map(|(gr, _)| canonicalize(gr).unwrap().0).collect();
            for (gr, _) in &classes {
                for v in 0..gr.num_vertices() {
                    let k = canonicalize(&gr.add_leg(v, 0)).unwrap().0;
                    assert!(bigger_keys.contains(&k));
                }
            }
        }
    }
}

#[test]
fn free_energy_coefficients_are_inverse_automorphism_orders() {
    let f = abstract_free_energy(2, 1, 1).unwrap();
    let total: Rational = f.coefficients().into_iter().sum();
    let classes = enumerate_stable(2, 1, EnumOptions::default()).unwrap();
    let expected: Rational = classes.iter().map(|(_, a)| Rational::new(1.into(), (*a).into())).sum();
    assert_eq!(total, expected);
}
