//! Bitmask utilities for subsets of variables, shared by the complex, prime
//! and cover machinery. Ground sets are capped at 32 elements (`u32` masks);
//! the callers that enumerate `2^r` objects impose tighter caps of their own.

/// Iterate the set bits of `mask`, ascending.
pub(crate) fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask & (1 << i) != 0)
}

pub(crate) fn mask_of(indices: &[usize]) -> u32 {
    indices.iter().fold(0u32, |m, &i| m | (1 << i))
}

pub(crate) fn full_mask(r: usize) -> u32 {
    if r == 32 {
        u32::MAX
    } else {
        (1u32 << r) - 1
    }
}

pub(crate) fn to_indices(mask: u32) -> Vec<usize> {
    bits(mask).collect()
}

/// Keep only the inclusion-minimal masks of `v`, deduplicated.
pub(crate) fn minimal_masks(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable_by_key(|m| (m.count_ones(), *m));
    v.dedup();
    let mut kept: Vec<u32> = Vec::new();
    for m in v {
        if !kept.iter().any(|k| k & m == *k) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keep only the inclusion-maximal masks of `v`, deduplicated.
pub(crate) fn maximal_masks(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable_by_key(|m| std::cmp::Reverse((m.count_ones(), *m)));
    v.dedup();
    let mut kept: Vec<u32> = Vec::new();
    for m in v {
        if !kept.iter().any(|k| k & m == m) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// All inclusion-minimal subsets of `ground` meeting every set in `families`.
///
/// If `families` is empty the empty set is the unique minimal transversal.
/// If some family member is empty there is no transversal at all.
pub(crate) fn minimal_transversals(ground: u32, families: &[u32]) -> Vec<u32> {
    if families.iter().any(|&f| f == 0) {
        return Vec::new();
    }
    let mut result = Vec::new();
    let mut sub = ground;
    // enumerate all submasks of `ground`, 0 included
    loop {
        if families.iter().all(|&f| f & sub != 0) {
            // minimality: every chosen element has a private family member
            let minimal = bits(sub).all(|v| {
                let without = sub & !(1 << v);
                families.iter().any(|&f| f & without == 0)
            });
            if minimal {
                result.push(sub);
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & ground;
    }
    result.sort_unstable();
    result
}

/// Lexicographic combinations: all `k`-subsets of `items`, as masks.
pub(crate) fn k_subsets(items: &[usize], k: usize) -> Vec<u32> {
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| 1u32 << items[i]).sum());
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transversals_of_two_triples() {
        // families {1,3,4} and {2,4} on ground {1,2,3,4} (0-based bits 0..4)
        let fams = [mask_of(&[0, 2, 3]), mask_of(&[1, 3])];
        let t = minimal_transversals(full_mask(4), &fams);
        assert_eq!(
            t,
            vec![mask_of(&[0, 1]), mask_of(&[1, 2]), mask_of(&[3])]
        );
    }

    #[test]
    fn transversals_empty_family() {
        assert_eq!(minimal_transversals(full_mask(3), &[]), vec![0]);
        assert!(minimal_transversals(full_mask(3), &[0]).is_empty());
    }

    #[test]
    fn minimal_and_maximal() {
        let v = vec![0b011, 0b001, 0b110, 0b111];
        assert_eq!(minimal_masks(v.clone()), vec![0b001, 0b110]);
        assert_eq!(maximal_masks(v), vec![0b111]);
    }

    #[test]
    fn k_subsets_order() {
        let s = k_subsets(&[0, 1, 2], 2);
        assert_eq!(s, vec![0b011, 0b101, 0b110]);
        assert_eq!(k_subsets(&[0, 1], 3), Vec::<u32>::new());
        assert_eq!(k_subsets(&[2], 0), vec![0]);
    }
}
