//! Graphs, hypergraphs and posets together with the monomial ideals they
//! induce: edge ideals, cover ideals, square-free Veronese ideals and the
//! poset construction in doubled variables. The extremal quantities here
//! (ordered matching number, chromatic number, unimodularity) are exhaustive
//! searches with pruning and hard desk-scale caps.

use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::sets;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 || n > 32 {
            return Err(Error::SizeCap(format!("vertex count {n} outside 1..=32")));
        }
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= n {
                return Err(Error::IndexOutOfRange { index: a, arity: n });
            }
            if b >= n {
                return Err(Error::IndexOutOfRange { index: b, arity: n });
            }
            if a == b {
                return Err(Error::BadParameter(format!("loop at vertex {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        let before = norm.len();
        norm.dedup();
        if norm.len() != before {
            return Err(Error::BadParameter("duplicate edge".into()));
        }
        Ok(Self { n, edges: norm })
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Self::new(n, edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    fn adjacency(&self) -> Vec<u32> {
        let mut adj = vec![0u32; self.n];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for u in sets::bits(adj[v]) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_girth().is_none()
    }

    /// Length of a shortest odd cycle, absent exactly for bipartite graphs.
    /// Breadth-first levels from each root: an edge inside one level closes
    /// an odd walk of length `d(u) + d(v) + 1`, and the shortest odd closed
    /// walk is a cycle.
    pub fn odd_girth(&self) -> Option<usize> {
        let adj = self.adjacency();
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for u in sets::bits(adj[v]) {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    }
                }
            }
            for &(a, b) in &self.edges {
                if dist[a] != usize::MAX && dist[a] == dist[b] {
                    let len = dist[a] + dist[b] + 1;
                    best = Some(best.map_or(len, |c| c.min(len)));
                }
            }
        }
        best
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::new(
            self.n,
            self.edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        )
    }

    /// Largest ordered matching: a matching `{a_i, b_i}` whose left ends are
    /// independent and never adjacent to an earlier right end. Exhaustive
    /// over oriented edge sequences.
    pub fn ordered_matching_number(&self) -> Result<usize> {
        if self.edges.is_empty() {
            return Err(Error::EdgelessGraph);
        }
        let adj = self.adjacency();
        fn extend(
            g: &Graph,
            adj: &[u32],
            used: u32,
            a_mask: u32,
            b_mask: u32,
            depth: usize,
            best: &mut usize,
        ) {
            *best = (*best).max(depth);
            for &(x, y) in &g.edges {
                if used & (1 << x) != 0 || used & (1 << y) != 0 {
                    continue;
                }
                for (a, b) in [(x, y), (y, x)] {
                    // left ends stay independent, and a new left end may not
                    // see a previous right end
                    if adj[a] & a_mask != 0 || adj[a] & b_mask != 0 {
                        continue;
                    }
                    extend(
                        g,
                        adj,
                        used | (1 << a) | (1 << b),
                        a_mask | (1 << a),
                        b_mask | (1 << b),
                        depth + 1,
                        best,
                    );
                }
            }
        }
        let mut best = 0;
        extend(self, &adj, 0, 0, 0, 0, &mut best);
        Ok(best)
    }
}

/// Square-free degree-two ideal of the edges.
pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal> {
    if g.edges.is_empty() {
        return Err(Error::EdgelessGraph);
    }
    let gens = g
        .edges
        .iter()
        .map(|&(a, b)| {
            let mut e = vec![0u64; g.n];
            e[a] = 1;
            e[b] = 1;
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(g.n, gens)
}

/// Ideal of the minimal vertex covers, one square-free generator per cover.
pub fn cover_ideal(h: &Hypergraph) -> Result<MonomialIdeal> {
    if h.edges.is_empty() {
        return Err(Error::EdgelessGraph);
    }
    let covers = sets::minimal_transversals(sets::full_mask(h.n), &h.edges);
    let gens = covers
        .into_iter()
        .map(|c| {
            let e = (0..h.n).map(|j| u64::from(c & (1 << j) != 0)).collect();
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(h.n, gens)
}

pub fn cover_ideal_of_graph(g: &Graph) -> Result<MonomialIdeal> {
    cover_ideal(&g.to_hypergraph()?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    /// Edge masks, an antichain, each with at least two vertices.
    edges: Vec<u32>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 || n > 32 {
            return Err(Error::SizeCap(format!("vertex count {n} outside 1..=32")));
        }
        let mut masks = Vec::with_capacity(edges.len());
        for e in &edges {
            for &v in e {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, arity: n });
                }
            }
            let m = sets::mask_of(e);
            if m.count_ones() < 2 {
                return Err(Error::BadParameter(format!(
                    "hyperedge {e:?} has fewer than two vertices"
                )));
            }
            masks.push(m);
        }
        masks.sort_unstable();
        masks.dedup();
        for i in 0..masks.len() {
            for j in 0..masks.len() {
                if i != j && masks[i] & masks[j] == masks[i] {
                    return Err(Error::BadParameter(
                        "hyperedge set is not an antichain".into(),
                    ));
                }
            }
        }
        Ok(Self { n, edges: masks })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_masks(&self) -> &[u32] {
        &self.edges
    }

    /// Least number of color classes such that no edge is monochromatic.
    pub fn chromatic_number(&self) -> usize {
        if self.edges.is_empty() {
            return 1;
        }
        'outer: for t in 1..=self.n {
            let mut colors = vec![usize::MAX; self.n];
            if self.try_color(0, t, &mut colors, 0) {
                return t;
            }
            if t == self.n {
                break 'outer;
            }
        }
        self.n
    }

    fn try_color(&self, v: usize, t: usize, colors: &mut Vec<usize>, used: usize) -> bool {
        if v == self.n {
            return true;
        }
        // symmetry pruning: a fresh color class may open at most once
        let limit = (used + 1).min(t);
        for c in 0..limit {
            colors[v] = c;
            let ok = self.edges.iter().all(|&e| {
                if e & (1 << v) == 0 {
                    return true;
                }
                // only reject once the whole edge is colored alike
                sets::bits(e).any(|u| colors[u] != c)
            });
            if ok && self.try_color(v + 1, t, colors, used.max(c + 1)) {
                return true;
            }
        }
        colors[v] = usize::MAX;
        false
    }

    /// Every square submatrix of the incidence matrix has determinant in
    /// `{−1, 0, 1}`, checked exhaustively. Capped at an 8×8 incidence matrix.
    pub fn is_unimodular(&self) -> Result<bool> {
        let v = self.n;
        let e = self.edges.len();
        if v > 8 || e > 8 {
            return Err(Error::SizeCap(format!(
                "{v}×{e} incidence matrix exceeds the 8×8 unimodularity cap"
            )));
        }
        let inc: Vec<Vec<i128>> = (0..v)
            .map(|row| {
                self.edges
                    .iter()
                    .map(|&m| i128::from(m & (1 << row) != 0))
                    .collect()
            })
            .collect();
        let rows: Vec<usize> = (0..v).collect();
        let cols: Vec<usize> = (0..e).collect();
        for k in 1..=v.min(e) {
            for rsel in sets::k_subsets(&rows, k) {
                for csel in sets::k_subsets(&cols, k) {
                    let sub: Vec<Vec<i128>> = sets::bits(rsel)
                        .map(|ri| sets::bits(csel).map(|ci| inc[ri][ci]).collect())
                        .collect();
                    let d = linalg::det_bigint(&sub);
                    if d.magnitude() > &num_bigint::BigUint::from(1u32) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// All square-free monomials of degree `d` in `r` variables.
pub fn veronese_ideal(r: usize, d: usize) -> Result<MonomialIdeal> {
    if !(2..=r).contains(&d) {
        return Err(Error::BadParameter(format!(
            "need 2 ≤ d ≤ r, got d = {d}, r = {r}"
        )));
    }
    if r > 32 {
        return Err(Error::SizeCap(format!("arity {r} > 32")));
    }
    let vars: Vec<usize> = (0..r).collect();
    let gens = sets::k_subsets(&vars, d)
        .into_iter()
        .map(|m| Monomial::new((0..r).map(|j| u64::from(m & (1 << j) != 0)).collect()))
        .collect();
    MonomialIdeal::new(r, gens)
}

/// A finite poset on `{0, …, k−1}` given by its order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    k: usize,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self> {
        let k = leq.len();
        if k == 0 || leq.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidPoset("relation matrix must be square and nonempty".into()));
        }
        for i in 0..k {
            if !leq[i][i] {
                return Err(Error::InvalidPoset(format!("not reflexive at {i}")));
            }
            for j in 0..k {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidPoset(format!("not antisymmetric at ({i},{j})")));
                }
                for l in 0..k {
                    if leq[i][j] && leq[j][l] && !leq[i][l] {
                        return Err(Error::InvalidPoset(format!(
                            "not transitive at ({i},{j},{l})"
                        )));
                    }
                }
            }
        }
        Ok(Self { k, leq })
    }

    /// Reflexive-transitive closure of the given `i ≤ j` pairs.
    pub fn from_leq_pairs(k: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![vec![false; k]; k];
        for i in 0..k {
            leq[i][i] = true;
        }
        for &(i, j) in pairs {
            if i >= k || j >= k {
                return Err(Error::InvalidPoset(format!("pair ({i},{j}) out of range")));
            }
            leq[i][j] = true;
        }
        for m in 0..k {
            for i in 0..k {
                for j in 0..k {
                    if leq[i][m] && leq[m][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        Self::new(leq)
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Longest chain length minus one.
    pub fn rank(&self) -> usize {
        let mut order: Vec<usize> = (0..self.k).collect();
        // sort by number of elements below: a linear extension
        order.sort_by_key(|&i| (0..self.k).filter(|&j| self.leq[j][i]).count());
        let mut height = vec![0usize; self.k];
        for &i in &order {
            for &j in &order {
                if j != i && self.leq[j][i] {
                    height[i] = height[i].max(height[j] + 1);
                }
            }
        }
        height.into_iter().max().unwrap_or(0)
    }

    /// All down-closed subsets, as masks, ascending.
    pub fn poset_ideals(&self) -> Vec<u32> {
        if self.k > 16 {
            return Vec::new();
        }
        (0u32..(1 << self.k))
            .filter(|&s| {
                sets::bits(s).all(|j| {
                    (0..self.k).all(|i| !self.leq[i][j] || s & (1 << i) != 0)
                })
            })
            .collect()
    }
}

/// The square-free ideal in `2k` variables with one generator per poset
/// ideal `I`: the product of `x_i` over `I` times `y_i` over the complement.
/// Returns the ideal together with the rank of the poset.
pub fn poset_ideal_hp(p: &Poset) -> Result<(MonomialIdeal, usize)> {
    let k = p.size();
    if k > 8 {
        return Err(Error::SizeCap(format!("poset size {k} > 8")));
    }
    let gens = p
        .poset_ideals()
        .into_iter()
        .map(|s| {
            let mut e = vec![0u64; 2 * k];
            for i in 0..k {
                if s & (1 << i) != 0 {
                    e[i] = 1;
                } else {
                    e[k + i] = 1;
                }
            }
            Monomial::new(e)
        })
        .collect();
    Ok((MonomialIdeal::new(2 * k, gens)?, p.rank()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_ideals_of_cycles() {
        let c4 = Graph::cycle(4);
        let i = edge_ideal(&c4).unwrap();
        assert_eq!(
            i,
            MonomialIdeal::from_exponents(
                4,
                &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]],
            )
            .unwrap()
        );
        assert_eq!(edge_ideal(&Graph::cycle(5)).unwrap().num_generators(), 5);
        let single = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(edge_ideal(&single).unwrap().num_generators(), 1);
        assert!(edge_ideal(&Graph::new(3, vec![]).unwrap()).is_err());
    }

    #[test]
    fn cover_ideals_of_cycles() {
        let c4 = Graph::cycle(4);
        assert_eq!(
            cover_ideal_of_graph(&c4).unwrap(),
            MonomialIdeal::from_exponents(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]).unwrap()
        );
        let single = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(
            cover_ideal_of_graph(&single).unwrap(),
            MonomialIdeal::from_exponents(2, &[&[1, 0], &[0, 1]]).unwrap()
        );
        let j5 = cover_ideal_of_graph(&Graph::cycle(5)).unwrap();
        assert_eq!(j5.num_generators(), 5);
        assert!(j5.generators().iter().all(|g| g.total_degree() == 3));
    }

    #[test]
    fn cover_ideal_agrees_with_edge_prime_intersection() {
        for g in [Graph::cycle(4), Graph::cycle(5), Graph::complete(4)] {
            let n = g.vertex_count();
            let mut acc: Option<MonomialIdeal> = None;
            for &(a, b) in g.edges() {
                let p = MonomialIdeal::new(
                    n,
                    vec![Monomial::variable(n, a), Monomial::variable(n, b)],
                )
                .unwrap();
                acc = Some(match acc {
                    None => p,
                    Some(x) => x.intersect(&p).unwrap(),
                });
            }
            assert_eq!(cover_ideal_of_graph(&g).unwrap(), acc.unwrap());
        }
    }

    #[test]
    fn bipartite_and_odd_girth() {
        assert!(Graph::cycle(4).is_bipartite());
        assert_eq!(Graph::cycle(4).odd_girth(), None);
        assert!(!Graph::cycle(5).is_bipartite());
        assert_eq!(Graph::cycle(5).odd_girth(), Some(5));
        assert_eq!(Graph::complete(4).odd_girth(), Some(3));

        // triangle plus square, disjoint
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        edges.extend([(3, 4), (4, 5), (5, 6), (3, 6)]);
        let g = Graph::new(7, edges).unwrap();
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.odd_girth(), Some(3));
    }

    #[test]
    fn ordered_matching_numbers() {
        assert_eq!(Graph::cycle(5).ordered_matching_number().unwrap(), 2);
        assert_eq!(Graph::cycle(4).ordered_matching_number().unwrap(), 1);
        let single = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(single.ordered_matching_number().unwrap(), 1);
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(Graph::cycle(5).to_hypergraph().unwrap().chromatic_number(), 3);
        assert_eq!(Graph::cycle(4).to_hypergraph().unwrap().chromatic_number(), 2);
        let tri = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(tri.chromatic_number(), 2);
    }

    #[test]
    fn unimodularity() {
        assert!(Graph::cycle(4).to_hypergraph().unwrap().is_unimodular().unwrap());
        assert!(!Graph::cycle(3).to_hypergraph().unwrap().is_unimodular().unwrap());
        let single = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        assert!(single.is_unimodular().unwrap());
        assert!(Graph::complete(9).to_hypergraph().unwrap().is_unimodular().is_err());
    }

    #[test]
    fn veronese_generators() {
        assert_eq!(veronese_ideal(4, 2).unwrap().num_generators(), 6);
        assert_eq!(veronese_ideal(5, 3).unwrap().num_generators(), 10);
        assert!(veronese_ideal(3, 1).is_err());
        assert!(veronese_ideal(2, 3).is_err());
    }

    #[test]
    fn poset_constructions() {
        let antichain = Poset::from_leq_pairs(2, &[]).unwrap();
        let (hp, rank) = poset_ideal_hp(&antichain).unwrap();
        assert_eq!(hp.num_generators(), 4);
        assert_eq!(rank, 0);

        let chain = Poset::from_leq_pairs(2, &[(0, 1)]).unwrap();
        let (hp, rank) = poset_ideal_hp(&chain).unwrap();
        assert_eq!(hp.num_generators(), 3);
        assert_eq!(rank, 1);

        assert!(Poset::from_leq_pairs(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn hypergraph_validation() {
        assert!(Hypergraph::new(3, vec![vec![0]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 1], vec![0, 1, 2]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).is_ok());
        assert!(Graph::new(2, vec![(0, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 1), (1, 0)]).is_err());
    }
}
