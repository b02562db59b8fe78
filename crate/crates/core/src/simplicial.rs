//! Simplicial complexes on a small ground set, stored by their facet
//! antichain as bitmasks. Carries the complex of an ideal, links, the
//! degree complexes attached to powers / integral closures / symbolic powers,
//! exact reduced homology over a chosen field, and the matroid and
//! complete-intersection predicates.
//!
//! The void complex (no faces at all) and the empty complex `{∅}` are
//! distinct values: the former has no facets, the latter has the single
//! facet `∅`. Ground sets are capped at 16 vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::polyhedra::NewtonPolyhedron;
use crate::sets;

pub const MAX_GROUND: usize = 16;

/// Coefficient field for homology: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChar {
    Zero,
    Prime(u64),
}

impl FieldChar {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldChar::Zero => Ok(()),
            FieldChar::Prime(p) => {
                if p < 2 || !is_prime(p) {
                    Err(Error::CompositeCharacteristic(p))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn as_u64(&self) -> u64 {
        match *self {
            FieldChar::Zero => 0,
            FieldChar::Prime(p) => p,
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn rank(rows: &[Vec<i64>], field: FieldChar) -> usize {
    match field {
        FieldChar::Zero => linalg::rank_char0(rows),
        FieldChar::Prime(p) => linalg::rank_mod_p(rows, p),
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    /// Strict constructor: the facet list must already be an antichain.
    pub fn new(ground: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if ground == 0 || ground > MAX_GROUND {
            return Err(Error::SizeCap(format!(
                "ground set size {ground} outside 1..={MAX_GROUND}"
            )));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in &facets {
            for &v in f {
                if v >= ground {
                    return Err(Error::IndexOutOfRange { index: v, arity: ground });
                }
            }
            masks.push(sets::mask_of(f));
        }
        masks.sort_unstable();
        for i in 0..masks.len() {
            for j in 0..masks.len() {
                if i != j && masks[i] & masks[j] == masks[i] {
                    return Err(Error::BadParameter(
                        "facet list is not an antichain".into(),
                    ));
                }
            }
        }
        Ok(Self { ground, facets: masks })
    }

    /// The complex generated by an arbitrary family of faces.
    pub fn generated_by(ground: usize, faces: Vec<u32>) -> Self {
        Self {
            ground,
            facets: sets::maximal_masks(faces),
        }
    }

    /// The complex whose minimal non-faces are `nonfaces`, within the
    /// vertices of `ground_mask`. An empty non-face makes the complex void.
    pub(crate) fn from_nonfaces(ground: usize, ground_mask: u32, nonfaces: &[u32]) -> Self {
        if nonfaces.iter().any(|&n| n == 0) {
            return Self::void(ground);
        }
        let facets = sets::minimal_transversals(ground_mask, nonfaces)
            .into_iter()
            .map(|t| ground_mask & !t)
            .collect::<Vec<_>>();
        let mut facets = facets;
        facets.sort_unstable();
        Self { ground, facets }
    }

    /// The complex with no faces at all.
    pub fn void(ground: usize) -> Self {
        Self { ground, facets: Vec::new() }
    }

    /// The complex whose only face is the empty set.
    pub fn empty_complex(ground: usize) -> Self {
        Self { ground, facets: vec![0] }
    }

    pub fn full_simplex(ground: usize) -> Self {
        Self {
            ground,
            facets: vec![sets::full_mask(ground)],
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [0]
    }

    /// Dimension: `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i64 - 1)
            .max()
    }

    pub fn facet_masks(&self) -> &[u32] {
        &self.facets
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| sets::to_indices(m)).collect()
    }

    pub fn contains_face(&self, face: u32) -> bool {
        self.facets.iter().any(|&f| face & f == face)
    }

    /// All faces, sorted by (cardinality, mask value).
    pub fn all_faces(&self) -> Vec<u32> {
        let mut seen = BTreeSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut v: Vec<u32> = seen.into_iter().collect();
        v.sort_unstable_by_key(|m| (m.count_ones(), *m));
        v
    }

    pub fn faces_of_card(&self, card: usize) -> Vec<u32> {
        let vertices: Vec<usize> = sets::bits(self.facets.iter().fold(0, |a, &f| a | f)).collect();
        sets::k_subsets(&vertices, card)
            .into_iter()
            .filter(|&m| self.contains_face(m))
            .collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        match self.dim() {
            None => Vec::new(),
            Some(d) => (0..=(d + 1) as usize)
                .map(|c| self.faces_of_card(c).len())
                .collect(),
        }
    }

    /// `link(F) = { G ⊆ ground∖F : F ∪ G ∈ Δ }`, given by its facets.
    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let fm = sets::mask_of(face);
        if !self.contains_face(fm) {
            return Err(Error::FaceNotInComplex(format!("{face:?}")));
        }
        let facets = self
            .facets
            .iter()
            .filter(|&&h| fm & h == fm)
            .map(|&h| h & !fm)
            .collect::<Vec<_>>();
        let mut facets = facets;
        facets.sort_unstable();
        Ok(SimplicialComplex { ground: self.ground, facets })
    }

    /// Exchange property over all face pairs: for faces `F, G` with
    /// `|F| > |G|` some `a ∈ F∖G` keeps `G ∪ {a}` a face. Matroid complexes
    /// are pure, so unequal facet sizes fail fast.
    pub fn is_matroid(&self) -> bool {
        let sizes: BTreeSet<u32> = self.facets.iter().map(|f| f.count_ones()).collect();
        if sizes.len() > 1 {
            return false;
        }
        let faces = self.all_faces();
        let face_set: BTreeSet<u32> = faces.iter().copied().collect();
        for &f in &faces {
            for &g in &faces {
                if f.count_ones() <= g.count_ones() {
                    continue;
                }
                let candidates = f & !g;
                let ok = sets::bits(candidates).any(|a| face_set.contains(&(g | (1 << a))));
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn shape(&self) -> DeltaShape {
        if self.is_void() {
            DeltaShape::Void
        } else {
            DeltaShape::Generated {
                gens: self.facets.clone(),
            }
        }
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_void() {
            return write!(f, "<void complex on {}>", self.ground);
        }
        write!(f, "<")?;
        for (i, m) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (t, v) in sets::bits(*m).enumerate() {
                if t > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", v + 1)?;
            }
            write!(f, "}}")?;
        }
        write!(f, ">")
    }
}

/// A degree complex in one of two dual presentations: by minimal non-faces or
/// by a generating family of faces. Only the faces matter; this shape feeds
/// the homology kernel without materializing the facet antichain.
#[derive(Clone, Debug)]
pub(crate) enum DeltaShape {
    Void,
    NonFaces { ground: u32, mins: Vec<u32> },
    Generated { gens: Vec<u32> },
}

impl DeltaShape {
    pub(crate) fn is_face(&self, f: u32) -> bool {
        match self {
            DeltaShape::Void => false,
            DeltaShape::NonFaces { ground, mins } => {
                f & ground == f && !mins.iter().any(|&m| m & f == m)
            }
            DeltaShape::Generated { gens } => gens.iter().any(|&g| f & g == f),
        }
    }

    /// Is this exactly the complex `{∅}`?
    pub(crate) fn is_just_empty(&self) -> bool {
        match self {
            DeltaShape::Void => false,
            DeltaShape::NonFaces { ground, mins } => {
                // every vertex of the ground must be a (singleton) non-face
                !mins.iter().any(|&m| m == 0)
                    && sets::bits(*ground).all(|v| mins.contains(&(1 << v)))
            }
            DeltaShape::Generated { gens } => !gens.is_empty() && gens.iter().all(|&g| g == 0),
        }
    }

    fn vertex_mask(&self) -> u32 {
        match self {
            DeltaShape::Void => 0,
            DeltaShape::NonFaces { ground, .. } => *ground,
            DeltaShape::Generated { gens } => gens.iter().fold(0, |a, &g| a | g),
        }
    }

    fn faces_of_card(&self, card: usize) -> Vec<u32> {
        if matches!(self, DeltaShape::Void) {
            return Vec::new();
        }
        if card == 0 {
            // the empty face, present in every nonvoid complex
            return vec![0];
        }
        let vertices: Vec<usize> = sets::bits(self.vertex_mask()).collect();
        sets::k_subsets(&vertices, card)
            .into_iter()
            .filter(|&m| self.is_face(m))
            .collect()
    }

    /// Dimension of reduced homology in homological degree `k`.
    pub(crate) fn betti(&self, k: i64, field: FieldChar) -> u64 {
        if matches!(self, DeltaShape::Void) || k < -1 {
            return 0;
        }
        if k == -1 {
            return u64::from(self.is_just_empty());
        }
        let card = (k + 1) as usize;
        let mid = self.faces_of_card(card);
        if mid.is_empty() {
            return 0;
        }
        let below = self.faces_of_card(card - 1);
        let above = self.faces_of_card(card + 1);
        let rank_down = boundary_rank(&mid, &below, field);
        let rank_up = boundary_rank(&above, &mid, field);
        (mid.len() - rank_down - rank_up) as u64
    }
}

/// Rank of the simplicial boundary map from the span of `upper` (faces of
/// cardinality c+1) to the span of `lower` (cardinality c).
pub(crate) fn boundary_rank(upper: &[u32], lower: &[u32], field: FieldChar) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|&u| {
            let mut row = vec![0i64; lower.len()];
            for (pos, v) in sets::bits(u).enumerate() {
                let target = u & !(1 << v);
                if let Ok(idx) = lower.binary_search(&target) {
                    row[idx] = if pos % 2 == 0 { 1 } else { -1 };
                }
            }
            row
        })
        .collect();
    rank(&rows, field)
}

/// Dimensions of reduced homology groups, indexed from degree −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyDims {
    dims: Vec<u64>,
}

impl HomologyDims {
    /// `H̃_i`; zero outside the stored range.
    pub fn betti(&self, i: i64) -> u64 {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Dims for `i = −1, 0, …, dim`.
    pub fn all(&self) -> &[u64] {
        &self.dims
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(idx, &d)| {
                let sign = if idx % 2 == 0 { -1 } else { 1 }; // idx 0 is degree −1
                sign * d as i64
            })
            .sum()
    }
}

/// Exact reduced homology over the given field, degrees −1 through `dim D`.
/// The void complex has no homology at all; `{∅}` is one-dimensional in
/// degree −1.
pub fn reduced_homology_dims(d: &SimplicialComplex, field: FieldChar) -> Result<HomologyDims> {
    field.validate()?;
    let shape = d.shape();
    let dims = match d.dim() {
        None => Vec::new(),
        Some(top) => (-1..=top).map(|k| shape.betti(k, field)).collect(),
    };
    Ok(HomologyDims { dims })
}

/// The complex of all variable subsets whose product avoids the radical.
pub fn delta_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_proper() {
        return Err(Error::UnitIdeal);
    }
    let r = ideal.arity();
    if r > MAX_GROUND {
        return Err(Error::SizeCap(format!("arity {r} > {MAX_GROUND}")));
    }
    let supports = ideal.radical_supports()?;
    Ok(SimplicialComplex::from_nonfaces(
        r,
        sets::full_mask(r),
        &supports,
    ))
}

/// Stanley–Reisner ideal of a complex: the square-free ideal generated by
/// its minimal non-faces. Inverse to `delta_of_ideal` on square-free ideals.
pub fn stanley_reisner_ideal(d: &SimplicialComplex) -> Result<MonomialIdeal> {
    let r = d.ground();
    let mut gens = Vec::new();
    for mask in 0u32..(1 << r) {
        if d.contains_face(mask) {
            continue;
        }
        let minimal = sets::bits(mask).all(|v| d.contains_face(mask & !(1 << v)));
        if minimal {
            let exps = (0..r)
                .map(|j| u64::from(mask & (1 << j) != 0))
                .collect();
            gens.push(Monomial::new(exps));
        }
    }
    MonomialIdeal::new(r, gens)
}

/// Per-generator violation masks of `x^α` against the generators of `ideal`,
/// restricted to the coordinates outside `cs`. An empty mask means the
/// monomial lies in the localized ideal for every face, i.e. the degree
/// complex is void.
pub(crate) fn violation_shape(ideal: &MonomialIdeal, cs: u32, alpha: &[i64]) -> DeltaShape {
    let r = ideal.arity();
    let ground = sets::full_mask(r) & !cs;
    let mut raw: Vec<u32> = Vec::with_capacity(ideal.num_generators());
    for g in ideal.generators() {
        let mut w = 0u32;
        for j in sets::bits(ground) {
            if g.exponent(j) as i128 > alpha[j] as i128 {
                w |= 1 << j;
            }
        }
        if w == 0 {
            return DeltaShape::Void;
        }
        raw.push(w);
    }
    DeltaShape::NonFaces {
        ground,
        mins: sets::minimal_masks(raw),
    }
}

/// The degree complex of `x^α`: faces `F` disjoint from the co-support of
/// `α` such that `x^α` stays outside the ideal localized at `F` together
/// with the co-support.
pub fn delta_alpha(ideal: &MonomialIdeal, alpha: &[i64]) -> Result<SimplicialComplex> {
    let r = ideal.arity();
    if alpha.len() != r {
        return Err(Error::ArityMismatch { expected: r, got: alpha.len() });
    }
    if r > MAX_GROUND {
        return Err(Error::SizeCap(format!("arity {r} > {MAX_GROUND}")));
    }
    let cs = alpha
        .iter()
        .enumerate()
        .fold(0u32, |m, (j, &a)| if a < 0 { m | (1 << j) } else { m });
    match violation_shape(ideal, cs, alpha) {
        DeltaShape::Void => Ok(SimplicialComplex::void(r)),
        DeltaShape::NonFaces { ground, mins } => {
            Ok(SimplicialComplex::from_nonfaces(r, ground, &mins))
        }
        DeltaShape::Generated { .. } => unreachable!(),
    }
}

/// Degree complex of `x^α` for the integral closure of the `n`-th power,
/// read off the Newton polyhedron: generated by the complements of the
/// supports of the violated facet normals.
pub fn delta_alpha_closure(
    np: &NewtonPolyhedron,
    n: u64,
    alpha: &[u64],
) -> Result<SimplicialComplex> {
    let r = np.arity();
    if alpha.len() != r {
        return Err(Error::ArityMismatch { expected: r, got: alpha.len() });
    }
    if r > MAX_GROUND {
        return Err(Error::SizeCap(format!("arity {r} > {MAX_GROUND}")));
    }
    let full = sets::full_mask(r);
    let gens: Vec<u32> = np
        .facets()
        .iter()
        .filter(|f| {
            let dot: u128 = f
                .normal
                .iter()
                .zip(alpha)
                .map(|(&a, &v)| a as u128 * v as u128)
                .sum();
            dot < n as u128 * f.offset as u128
        })
        .map(|f| full & !f.support_mask())
        .collect();
    Ok(SimplicialComplex::generated_by(r, gens))
}

/// Degree complex of `x^α` for the `n`-th symbolic power of a square-free
/// ideal with complex `d`: generated by the facets whose complements carry
/// total `α`-weight at most `n − 1`.
pub fn delta_alpha_symbolic(
    d: &SimplicialComplex,
    n: u64,
    alpha: &[u64],
) -> Result<SimplicialComplex> {
    let r = d.ground();
    if alpha.len() != r {
        return Err(Error::ArityMismatch { expected: r, got: alpha.len() });
    }
    if n == 0 {
        return Err(Error::BadParameter("symbolic power exponent must be ≥ 1".into()));
    }
    let gens: Vec<u32> = d
        .facet_masks()
        .iter()
        .filter(|&&f| {
            let outside: u128 = (0..r)
                .filter(|&i| f & (1 << i) == 0)
                .map(|i| alpha[i] as u128)
                .sum();
            outside <= n as u128 - 1
        })
        .copied()
        .collect();
    Ok(SimplicialComplex::generated_by(r, gens))
}

/// Square-free complete intersections: the supports of the minimal
/// generators are pairwise disjoint.
pub fn is_complete_intersection(ideal: &MonomialIdeal) -> Result<bool> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    if ideal.arity() > 32 {
        return Err(Error::SizeCap(format!("arity {} > 32", ideal.arity())));
    }
    let masks: Vec<u32> = ideal
        .generators()
        .iter()
        .map(Monomial::support_mask)
        .collect();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
