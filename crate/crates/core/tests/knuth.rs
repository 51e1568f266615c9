use std::collections::{BTreeMap, BTreeSet};

use plactic::knuth::{fiber, fibers_of_perm, knuth_class, knuth_path, neighbors, verify_connectivity, Rule};
use plactic::{maxword, minword, phi, Bpd, Permutation, PlacticBiword};

#[test]
fn moves_preserve_phi() {
    for len in 0..=4 {
        for q in PlacticBiword::all(len, 4) {
            let d = phi(&q);
            for (r, mv) in neighbors(&q) {
                assert_eq!(phi(&r), d, "{q} -> {r} by {mv:?}");
                assert_eq!(r.len(), q.len());
                let (mut a, mut b) = (q.top(), r.top());
                a.sort_unstable();
                b.sort_unstable();
                assert_eq!(a, b);
                let changed = q.bottom().iter().zip(r.bottom()).filter(|(x, y)| *x != y).count();
                match mv.rule {
                    Rule::R1 | Rule::R2 => assert_eq!(changed, 0),
                    Rule::R3 | Rule::R4 => assert_eq!(changed, 1),
                }
            }
        }
    }
}

#[test]
fn fibers_are_knuth_classes_in_s4() {
    for p in Permutation::all(4) {
        let report = verify_connectivity(&p);
        assert!(report.ok, "{p}: {:?}", report.fibers);
        assert_eq!(report.fibers.len(), Bpd::all(&p).len());
    }
}

#[test]
fn fiber_partition_matches_direct_count() {
    for p in Permutation::all(4) {
        let n = p.size().max(2);
        let direct = PlacticBiword::all(p.length(), n - 1).into_iter().filter(|q| *phi(q).perm() == p).count();
        let total: usize = fibers_of_perm(&p).values().map(Vec::len).sum();
        assert_eq!(total, direct, "{p}");
    }
}

#[test]
fn simple_transpositions_have_singleton_fibers() {
    for k in 1..=4 {
        let p = Permutation::simple(k);
        for d in Bpd::all(&p) {
            let f = fiber(&d);
            assert_eq!(f.len(), 1);
            assert_eq!(f[0], maxword(&d));
        }
    }
    assert_eq!(fiber(&Bpd::identity(0)), vec![PlacticBiword::empty()]);
}

#[test]
fn maxword_and_minword_are_unique_in_their_fibers() {
    for p in Permutation::all(4) {
        let maxcode = p.maxcode();
        let code = p.code();
        let multiset = |q: &PlacticBiword| {
            let mut m = BTreeMap::new();
            for k in q.bottom() {
                *m.entry(k).or_insert(0) += 1;
            }
            m
        };
        let want_max: BTreeMap<usize, usize> =
            (1..maxcode.len()).filter(|&i| maxcode[i] > 0).map(|i| (i, maxcode[i])).collect();
        let want_min: BTreeMap<usize, usize> =
            (0..code.len()).filter(|&i| code[i] > 0).map(|i| (i + 1, code[i])).collect();
        for (d, words) in fibers_of_perm(&p) {
            let maxes: Vec<_> = words.iter().filter(|q| multiset(q) == want_max).collect();
            let mins: Vec<_> = words.iter().filter(|q| multiset(q) == want_min).collect();
            assert_eq!(maxes, vec![&maxword(&d)]);
            assert_eq!(mins, vec![&minword(&d)]);
        }
    }
}

#[test]
fn example_words_are_connected() {
    let max = PlacticBiword::from_rows(&[7, 6, 5, 4, 2, 1, 2, 1, 3, 2], &[7, 7, 7, 7, 7, 7, 6, 6, 4, 4]).unwrap();
    let min = PlacticBiword::from_rows(&[7, 2, 6, 5, 1, 2, 4, 1, 3, 2], &[7, 6, 6, 5, 4, 4, 4, 3, 3, 2]).unwrap();
    let path = knuth_path(&max, &min, 2_000_000).unwrap().expect("maxword and minword are Knuth equivalent");
    let steps = plactic::knuth::follow_path(&max, &path).unwrap();
    assert_eq!(steps.last(), Some(&min));
    let d = phi(&max);
    assert!(steps.iter().all(|q| phi(q) == d));
}

#[test]
fn classes_stay_in_label_range() {
    for p in Permutation::all(4) {
        let bound = p.size().saturating_sub(1).max(1);
        for d in Bpd::all(&p) {
            let class: BTreeSet<PlacticBiword> = knuth_class(&maxword(&d)).unwrap();
            assert!(class.iter().all(|q| q.bottom().iter().all(|&k| (1..=bound).contains(&k))));
        }
    }
}
