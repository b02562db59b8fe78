//! Exact computation of invariants of powers of monomial ideals: associated
//! primes, depth and Cohen–Macaulayness, integral closures via Newton
//! polyhedra, symbolic powers, and the graph, hypergraph and poset
//! constructions whose ideals exhibit the stability phenomena this library
//! measures. All arithmetic is exact; every analysis is deterministic.

pub mod assoc;
pub mod cohomology;
pub mod combinat;
pub mod corpus;
pub mod error;
mod linalg;
pub mod monomial;
pub mod polyhedra;
mod sets;
pub mod simplicial;

pub use assoc::{ass, ass_profile, min_primes, persistence_check, AssProfile, PrimeSet};
pub use cohomology::{
    depth_koszul_oracle, depth_profile, depth_takayama, stability_bounds, symbolic_power,
    DepthProfile, DepthReport, PowerKind, StabilityBounds, Witness,
};
pub use error::{Error, Result};
pub use monomial::{MaxExponents, Monomial, MonomialIdeal};
pub use polyhedra::{
    analytic_spread, integral_closure_power, newton_polyhedron, Facet, MixedRegion,
    NewtonPolyhedron,
};
pub use simplicial::{
    delta_alpha, delta_alpha_closure, delta_alpha_symbolic, delta_of_ideal,
    is_complete_intersection, reduced_homology_dims, stanley_reisner_ideal, FieldChar,
    HomologyDims, SimplicialComplex,
};
