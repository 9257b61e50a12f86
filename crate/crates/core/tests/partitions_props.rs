use std::collections::BTreeSet;

use superjack::partitions::{enumerate_hooks, partitions_of, SizeMode};
use superjack::{HookParams, Partition};

/// Partitions of `n` by sorting every composition of `n`.
fn brute_force(n: usize) -> BTreeSet<Vec<usize>> {
    if n == 0 {
        return BTreeSet::from([vec![]]);
    }
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for bit in 0..n - 1 {
            if mask & (1 << bit) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(parts);
    }
    out
}

fn hp(p: usize, q: usize) -> HookParams {
    HookParams::new(p, q).unwrap()
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=10 {
        let ours: BTreeSet<Vec<usize>> = partitions_of(n).iter().map(|l| l.parts().to_vec()).collect();
        assert_eq!(ours, brute_force(n), "n = {n}");
        assert_eq!(partitions_of(n).len(), brute_force(n).len());
    }
}

#[test]
fn hook_enumeration_against_filter() {
    for p in 1..=3 {
        for q in 1..=3 {
            let h = hp(p, q);
            let mut cumulative = 0;
            for d in 0..=10 {
                let exact = enumerate_hooks(h, d, SizeMode::Exact);
                let expected: Vec<Vec<usize>> = brute_force(d)
                    .into_iter()
                    .filter(|parts| parts.get(p).copied().unwrap_or(0) <= q)
                    .collect();
                let got: BTreeSet<Vec<usize>> = exact.iter().map(|l| l.parts().to_vec()).collect();
                assert_eq!(got, expected.into_iter().collect(), "{h} d={d}");
                cumulative += exact.len();
                let up_to = enumerate_hooks(h, d, SizeMode::UpTo);
                assert_eq!(up_to.len(), cumulative);
                assert!(up_to.windows(2).all(|w| w[0] < w[1]), "sorted and duplicate free");
                assert!(up_to.iter().all(|l| l.is_hook(h)));
            }
        }
    }
}

#[test]
fn transpose_is_an_involution_and_swaps_hooks() {
    for n in 0..=8 {
        for l in partitions_of(n) {
            let t = l.transpose();
            assert_eq!(t.transpose(), l);
            assert_eq!(t.size(), l.size());
            for p in 1..=3 {
                for q in 1..=3 {
                    assert_eq!(l.is_hook(hp(p, q)), t.is_hook(hp(q, p)), "{l} at ({p},{q})");
                }
            }
        }
    }
}

#[test]
fn containment_is_a_partial_order() {
    let all: Vec<Partition> = enumerate_hooks(hp(2, 2), 5, SizeMode::UpTo);
    for a in &all {
        assert!(a.contains(a));
        assert!(a.contains(&Partition::empty()));
        for b in &all {
            if a.contains(b) && b.contains(a) {
                assert_eq!(a, b);
            }
            for c in &all {
                if a.contains(b) && b.contains(c) {
                    assert!(a.contains(c));
                }
            }
        }
    }
}

#[test]
fn serialization_forms() {
    let l: Partition = "3,1".parse().unwrap();
    assert_eq!(serde_json::to_string(&l).unwrap(), "\"3,1\"");
    let e: Partition = serde_json::from_str("\"∅\"").unwrap();
    assert!(e.is_empty());
    let e: Partition = serde_json::from_str("\"\"").unwrap();
    assert!(e.is_empty());
}
