mod common;

use std::time::Instant;

use idealis_core::combinat::{cover_ideal_of_graph, edge_ideal, Graph};
use idealis_core::monomial::MonomialIdeal;
use idealis_core::{
    analytic_spread, ass_profile, depth_profile, FieldChar, PowerKind,
};

fn ideal(r: usize, rows: &[&[u64]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(r, rows).unwrap()
}

#[test]
fn probe_final_example() {
    for d in [3u64, 4] {
        let i = ideal(3, &[&[d, 0, 0], &[1, d - 2, 1], &[0, d - 1, 1]]);
        let t = Instant::now();
        let prof = depth_profile(&i, PowerKind::Closure, d + 1, FieldChar::Zero).unwrap();
        println!(
            "final example d={d}: depths={:?} dim={} ell={} height={} ({:?})",
            prof.entries.iter().map(|e| e.depth).collect::<Vec<_>>(),
            prof.entries[0].dim,
            analytic_spread(&i).unwrap(),
            i.height().unwrap(),
            t.elapsed()
        );
    }
}

#[test]
fn probe_small_cycles() {
    let c3 = edge_ideal(&Graph::cycle(3)).unwrap();
    let prof = ass_profile(&c3, PowerKind::Ordinary, 4).unwrap();
    for n in 1..=4 {
        println!("C3 n={n}: m in ass = {}", prof.entry(n).contains_maximal());
    }
    let c5 = edge_ideal(&Graph::cycle(5)).unwrap();
    let t = Instant::now();
    let prof = ass_profile(&c5, PowerKind::Ordinary, 5).unwrap();
    for n in 1..=5 {
        println!("C5 n={n}: m in ass = {}", prof.entry(n).contains_maximal());
    }
    println!("C5 profile in {:?}", t.elapsed());
}

#[test]
fn probe_k6_ass_timing() {
    let k6 = edge_ideal(&Graph::complete(6)).unwrap();
    let t = Instant::now();
    let p4 = k6.power(4).unwrap();
    println!("K6^4 has {} gens ({:?})", p4.num_generators(), t.elapsed());
    let t = Instant::now();
    let prof = ass_profile(&k6, PowerKind::Ordinary, 4).unwrap();
    println!(
        "K6 ass profile n<=4 in {:?}, astab={}, |ass(4)|={}",
        t.elapsed(),
        prof.observed_astab,
        prof.entry(4).len()
    );
}

#[test]
fn probe_cover_ideal_symbolic() {
    for g in [Graph::cycle(5), Graph::cycle(6), Graph::complete(5)] {
        let j = cover_ideal_of_graph(&g).unwrap();
        let nu = g.ordered_matching_number().unwrap();
        let r = g.vertex_count();
        let t = Instant::now();
        let prof = depth_profile(&j, PowerKind::Symbolic, (2 * nu as u64) + 2, FieldChar::Zero).unwrap();
        println!(
            "cover {r} vertices: nu0={nu} depths={:?} expect tail {} ({:?})",
            prof.entries.iter().map(|e| e.depth).collect::<Vec<_>>(),
            r - nu - 1,
            t.elapsed()
        );
    }
}

#[test]
fn probe_poset_hp() {
    use idealis_core::combinat::{poset_ideal_hp, Poset};
    for (name, p) in [
        ("antichain2", Poset::from_leq_pairs(2, &[]).unwrap()),
        ("chain2", Poset::from_leq_pairs(2, &[(0, 1)]).unwrap()),
        ("chain3", Poset::from_leq_pairs(3, &[(0, 1), (1, 2)]).unwrap()),
        ("vee", Poset::from_leq_pairs(3, &[(0, 1), (0, 2)]).unwrap()),
    ] {
        let (hp, rank) = poset_ideal_hp(&p).unwrap();
        let t = Instant::now();
        let prof = depth_profile(&hp, PowerKind::Ordinary, rank as u64 + 2, FieldChar::Zero).unwrap();
        println!(
            "H_P {name}: rank={rank} k={} depths={:?} dstab_obs={} ({:?})",
            p.size(),
            prof.entries.iter().map(|e| e.depth).collect::<Vec<_>>(),
            prof.observed_dstab,
            t.elapsed()
        );
    }
}

#[test]
fn probe_veronese() {
    use idealis_core::combinat::veronese_ideal;
    for (r, d) in [(5usize, 2usize), (6, 2), (6, 5)] {
        let i = veronese_ideal(r, d).unwrap();
        let t = Instant::now();
        let prof = depth_profile(&i, PowerKind::Ordinary, 4, FieldChar::Zero).unwrap();
        println!(
            "veronese({r},{d}): depths={:?} ({:?})",
            prof.entries.iter().map(|e| e.depth).collect::<Vec<_>>(),
            t.elapsed()
        );
    }
}
