//! Exhaustive test corpora: connected graphs and simplicial complexes on
//! small vertex sets, one representative per isomorphism class. All the
//! invariants verified against these corpora are preserved by relabeling
//! variables, so class representatives give exhaustive coverage.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::combinat::Graph;
use crate::simplicial::SimplicialComplex;

/// All connected graphs on exactly `n` labeled vertices, reduced to one
/// representative per isomorphism class, deterministically ordered.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((2..=7).contains(&n), "corpus generator supports 2..=7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    let m = pairs.len();
    let pair_index = |a: usize, b: usize| -> usize {
        pairs
            .binary_search(&(a.min(b), a.max(b)))
            .expect("pair present")
    };
    // edge-index relabeling for every permutation of the vertices
    let perm_maps: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .map(|sigma| {
            pairs
                .iter()
                .map(|&(a, b)| pair_index(sigma[a], sigma[b]))
                .collect()
        })
        .collect();

    let mut canon: BTreeSet<u32> = BTreeSet::new();
    for mask in 1u32..(1 << m) {
        if !mask_connected(mask, &pairs, n) {
            continue;
        }
        let best = perm_maps
            .iter()
            .map(|map| {
                let mut img = 0u32;
                for i in 0..m {
                    if mask & (1 << i) != 0 {
                        img |= 1 << map[i];
                    }
                }
                img
            })
            .min()
            .unwrap();
        canon.insert(best);
    }
    canon
        .into_iter()
        .map(|mask| {
            let edges = (0..m).filter(|i| mask & (1 << i) != 0).map(|i| pairs[i]).collect();
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

fn mask_connected(mask: u32, pairs: &[(usize, usize)], n: usize) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if mask & (1 << i) != 0 {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            parent[ra] = rb;
        }
    }
    let root = find(&mut parent, 0);
    (1..n).all(|v| find(&mut parent, v) == root)
}

/// All simplicial complexes on ground set `[r]` (facet antichains over the
/// subsets of `[r]`, the void complex included), one representative per
/// isomorphism class, deterministically ordered.
pub fn complexes_up_to_iso(r: usize) -> Vec<SimplicialComplex> {
    assert!((1..=5).contains(&r), "corpus generator supports 1..=5 vertices");
    let mut subsets: Vec<u32> = (0..(1u32 << r)).collect();
    subsets.sort_unstable_by_key(|m| (m.count_ones(), *m));

    let mut antichains: Vec<Vec<u32>> = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(start: usize, subsets: &[u32], current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(current.clone());
        for i in start..subsets.len() {
            let m = subsets[i];
            let comparable = current
                .iter()
                .any(|&c| c & m == c || c & m == m);
            if !comparable {
                current.push(m);
                rec(i + 1, subsets, current, out);
                current.pop();
            }
        }
    }
    rec(0, &subsets, &mut current, &mut antichains);

    let perms: Vec<Vec<usize>> = (0..r).permutations(r).collect();
    let mut canon: BTreeSet<Vec<u32>> = BTreeSet::new();
    for family in &antichains {
        let best = perms
            .iter()
            .map(|sigma| {
                let mut imgs: Vec<u32> = family
                    .iter()
                    .map(|&f| {
                        let mut img = 0u32;
                        for i in 0..r {
                            if f & (1 << i) != 0 {
                                img |= 1 << sigma[i];
                            }
                        }
                        img
                    })
                    .collect();
                imgs.sort_unstable();
                imgs
            })
            .min()
            .unwrap();
        canon.insert(best);
    }
    canon
        .into_iter()
        .map(|facets| {
            SimplicialComplex::generated_by(r, facets)
        })
        .collect()
}
