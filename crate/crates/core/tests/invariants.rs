//! Cross-cutting invariants on randomized instances: arithmetic identities,
//! membership agreement with brute-force oracles, degree-complex closed
//! forms against the explicit route, and the profile fast paths against the
//! generic depth search.

mod common;

use common::{box_points, convex_combination_oracle, random_ideal, random_squarefree_ideal, rng};
use rand::Rng;

use idealis_core::monomial::{Monomial, MonomialIdeal};
use idealis_core::polyhedra::{integral_closure_power, newton_polyhedron, nph_coefficient_bound_holds};
use idealis_core::simplicial::{delta_alpha, delta_of_ideal, reduced_homology_dims};
use idealis_core::{
    ass, depth_profile, depth_takayama, min_primes, symbolic_power, FieldChar, PowerKind,
};

#[test]
fn power_is_additive() {
    let mut rng = rng(11);
    for _ in 0..40 {
        let i = random_ideal(&mut rng, 3, 4, 3);
        for a in 1..=2u64 {
            for b in 1..=2u64 {
                let lhs = i.power(a + b).unwrap();
                let rhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "I = {i}");
            }
        }
    }
}

#[test]
fn intersection_quotient_saturation_match_membership() {
    let mut rng = rng(12);
    for _ in 0..60 {
        let r = rng.gen_range(1..=4usize);
        let i = random_ideal(&mut rng, r, 4, 3);
        let j = {
            let mut j = random_ideal(&mut rng, r, 4, 3);
            while j.arity() != i.arity() {
                j = random_ideal(&mut rng, r, 4, 3);
            }
            j
        };
        let r = i.arity();
        let rho_bound = 5u64;
        let points = box_points(r, rho_bound);

        let both = i.intersect(&j).unwrap();
        for p in &points {
            let m = Monomial::new(p.clone());
            assert_eq!(both.contains(&m), i.contains(&m) && j.contains(&m));
        }

        let f = Monomial::new((0..r).map(|_| rng.gen_range(0..=2u64)).collect());
        let q = i.quotient(&f).unwrap();
        for p in &points {
            let m = Monomial::new(p.clone());
            let mf = m.checked_mul(&f).unwrap();
            assert_eq!(q.contains(&m), i.contains(&mf));
        }

        // saturation by all variables: membership is stable multiplication
        // by every high power of the variable prime
        let vars: Vec<usize> = (0..r).collect();
        let sat = i.saturate(&vars).unwrap();
        let k: u64 = i
            .max_exponents()
            .values()
            .iter()
            .sum::<u64>()
            + 1;
        for p in &points {
            let m = Monomial::new(p.clone());
            let in_sat_oracle = degree_k_products_all_inside(&i, &m, &vars, k);
            assert_eq!(sat.contains(&m), in_sat_oracle, "I = {i}, m = {m}");
        }
    }
}

/// Does `m · g ∈ I` hold for every degree-`k` monomial `g` in the given
/// variables?
fn degree_k_products_all_inside(
    ideal: &MonomialIdeal,
    m: &Monomial,
    vars: &[usize],
    k: u64,
) -> bool {
    let r = ideal.arity();
    fn rec(
        ideal: &MonomialIdeal,
        m: &Monomial,
        vars: &[usize],
        pos: usize,
        left: u64,
        acc: &mut Vec<u64>,
        r: usize,
    ) -> bool {
        if pos == vars.len() - 1 {
            acc[vars[pos]] = left;
            let g = Monomial::new(acc.clone());
            let prod = m.checked_mul(&g).unwrap();
            acc[vars[pos]] = 0;
            return ideal.contains(&prod);
        }
        for take in 0..=left {
            acc[vars[pos]] = take;
            let ok = rec(ideal, m, vars, pos + 1, left - take, acc, r);
            acc[vars[pos]] = 0;
            if !ok {
                return false;
            }
        }
        true
    }
    let mut acc = vec![0u64; r];
    rec(ideal, m, vars, 0, k, &mut acc, r)
}

#[test]
fn radical_identities() {
    let mut rng = rng(13);
    for _ in 0..60 {
        let i = random_ideal(&mut rng, 4, 4, 4);
        let rad = i.radical();
        assert_eq!(rad.radical(), rad);
        for n in 1..=3 {
            assert_eq!(i.power(n).unwrap().radical(), rad);
        }
    }
}

#[test]
fn newton_membership_matches_convex_combinations() {
    let mut rng = rng(14);
    for _ in 0..40 {
        let i = random_ideal(&mut rng, 3, 5, 5);
        let np = newton_polyhedron(&i).unwrap();
        let d = i.max_degree();
        for f in np.facets() {
            assert!(nph_coefficient_bound_holds(&f.normal, d), "I = {i}");
        }
        let r = i.arity();
        let points: Vec<&[u64]> = i.generators().iter().map(|g| g.exponents()).collect();
        let n = rng.gen_range(1..=2u64);
        for x in box_points(r, 7) {
            let by_facets = {
                let xi: Vec<i64> = x.iter().map(|&v| v as i64).collect();
                np.contains_scaled(n, &xi)
            };
            let by_combinations = convex_combination_oracle(&points, n, &x);
            assert_eq!(by_facets, by_combinations, "I = {i}, n = {n}, x = {x:?}");
        }
    }
}

#[test]
fn closure_contains_power_and_is_multiplicative() {
    let mut rng = rng(15);
    for _ in 0..25 {
        let i = random_ideal(&mut rng, 3, 4, 3);
        let np = newton_polyhedron(&i).unwrap();
        for n in 1..=3u64 {
            let power = i.power(n).unwrap();
            let closure = integral_closure_power(&i, n).unwrap();
            for g in power.generators() {
                assert!(closure.contains(g), "I = {i}, n = {n}");
            }
            // closure of the explicit power, in one step, is the same ideal
            let via_power = integral_closure_power(&power, 1).unwrap();
            assert_eq!(closure, via_power, "I = {i}, n = {n}");
            // and membership is readable off the dilated polyhedron
            for g in via_power.generators() {
                let x: Vec<i64> = g.exponents().iter().map(|&v| v as i64).collect();
                assert!(np.contains_scaled(n, &x));
            }
        }
    }
}

#[test]
fn delta_alpha_is_a_subcomplex_of_delta() {
    let mut rng = rng(16);
    for _ in 0..60 {
        let i = random_ideal(&mut rng, 4, 4, 3);
        let delta = delta_of_ideal(&i).unwrap();
        let r = i.arity();
        let alpha: Vec<i64> = (0..r).map(|_| rng.gen_range(-2..=3i64)).collect();
        let da = delta_alpha(&i, &alpha).unwrap();
        for fm in da.facet_masks() {
            assert!(delta.contains_face(*fm), "I = {i}, alpha = {alpha:?}");
        }
    }
}

#[test]
fn delta_alpha_sees_only_the_cosupport_sign_pattern() {
    let mut rng = rng(17);
    for _ in 0..60 {
        let i = random_ideal(&mut rng, 4, 4, 3);
        let r = i.arity();
        let alpha: Vec<i64> = (0..r).map(|_| rng.gen_range(-3..=3i64)).collect();
        let squashed: Vec<i64> = alpha.iter().map(|&a| if a < 0 { -1 } else { a }).collect();
        assert_eq!(
            delta_alpha(&i, &alpha).unwrap(),
            delta_alpha(&i, &squashed).unwrap()
        );
    }
}

#[test]
fn homology_satisfies_euler_characteristic() {
    let mut rng = rng(18);
    for _ in 0..40 {
        let i = random_ideal(&mut rng, 4, 4, 2);
        let d = delta_of_ideal(&i).unwrap();
        let h = reduced_homology_dims(&d, FieldChar::Zero).unwrap();
        let chi_faces: i64 = d
            .f_vector()
            .iter()
            .enumerate()
            .map(|(c, &cnt)| if c % 2 == 0 { -(cnt as i64) } else { cnt as i64 })
            .sum();
        assert_eq!(h.reduced_euler_characteristic(), chi_faces);
    }
}

#[test]
fn closure_profile_matches_generic_depth_search() {
    let mut rng = rng(19);
    for trial in 0..12 {
        let i = random_ideal(&mut rng, 3, 4, 3);
        let prof = depth_profile(&i, PowerKind::Closure, 3, FieldChar::Zero).unwrap();
        for n in 1..=3u64 {
            let explicit = integral_closure_power(&i, n).unwrap();
            let direct = depth_takayama(&explicit, FieldChar::Zero).unwrap();
            assert_eq!(
                prof.entries[n as usize - 1].depth, direct.depth,
                "trial {trial}, I = {i}, n = {n}"
            );
            assert_eq!(prof.entries[n as usize - 1].dim, direct.dim);
        }
    }
}

#[test]
fn symbolic_profile_matches_generic_depth_search() {
    let mut rng = rng(20);
    for trial in 0..12 {
        let i = random_squarefree_ideal(&mut rng, 4, 4);
        let prof = depth_profile(&i, PowerKind::Symbolic, 3, FieldChar::Zero).unwrap();
        for n in 1..=3u64 {
            let explicit = symbolic_power(&i, n).unwrap();
            let direct = depth_takayama(&explicit, FieldChar::Zero).unwrap();
            assert_eq!(
                prof.entries[n as usize - 1].depth, direct.depth,
                "trial {trial}, I = {i}, n = {n}"
            );
        }
    }
}

#[test]
fn ordinary_profile_matches_generic_depth_search() {
    let mut rng = rng(21);
    for _ in 0..12 {
        let i = random_ideal(&mut rng, 3, 3, 2);
        let prof = depth_profile(&i, PowerKind::Ordinary, 3, FieldChar::Zero).unwrap();
        for n in 1..=3u64 {
            let direct = depth_takayama(&i.power(n).unwrap(), FieldChar::Zero).unwrap();
            assert_eq!(prof.entries[n as usize - 1].depth, direct.depth);
        }
    }
}

#[test]
fn maximal_ideal_membership_in_ass_is_depth_zero() {
    let mut rng = rng(22);
    for _ in 0..60 {
        let i = random_ideal(&mut rng, 4, 4, 3);
        let a = ass(&i).unwrap();
        let rep = depth_takayama(&i, FieldChar::Zero).unwrap();
        assert_eq!(a.contains_maximal(), rep.depth == 0, "I = {i}");
    }
}

#[test]
fn minimal_primes_sit_in_every_ass_set() {
    let mut rng = rng(23);
    for _ in 0..30 {
        let i = random_ideal(&mut rng, 4, 3, 2);
        let mins = min_primes(&i).unwrap();
        for n in 1..=3u64 {
            let a = ass(&i.power(n).unwrap()).unwrap();
            assert!(mins.is_subset(&a), "I = {i}, n = {n}");
        }
    }
}

#[test]
fn depth_witnesses_reverify() {
    let mut rng = rng(24);
    for _ in 0..30 {
        let i = random_ideal(&mut rng, 4, 4, 3);
        let rep = depth_takayama(&i, FieldChar::Zero).unwrap();
        let w = rep.witness.unwrap();
        let complex = delta_alpha(&i, &w.multidegree).unwrap();
        let h = reduced_homology_dims(&complex, FieldChar::Zero).unwrap();
        let cs = w.multidegree.iter().filter(|&&a| a < 0).count();
        let k = w.cohomological_degree as i64 - cs as i64 - 1;
        assert!(h.betti(k) > 0, "I = {i}, witness = {w:?}");
        assert_eq!(w.cohomological_degree, rep.depth);
        assert!(rep.depth <= rep.dim);
        assert_eq!(rep.cohen_macaulay, rep.depth == rep.dim);
    }
}
