use std::collections::BTreeSet;

use plactic::insertion::{
    all_orders, grassmannian_to_ssyt, insert, phi_in_order, phi_left, phi_right, reverse_insert, ssyt_to_bpd,
    try_insert,
};
use plactic::tableau::insert_word;
use plactic::{
    inverse_left, inverse_right, left_insert, maxword, minword, phi, right_insert, Biletter, Bpd, Permutation,
    PlacticBiword, Side,
};
use proptest::prelude::*;

fn left_defined(p: &Permutation, k: usize) -> bool {
    p.d2().map_or(true, |d| d <= k)
}

#[test]
fn monk_bijection_right_and_left() {
    for side in [Side::Right, Side::Left] {
        for p in Permutation::all(4) {
            let source = Bpd::all(&p);
            for k in (1..=3).filter(|&k| side == Side::Right || left_defined(&p, k)) {
                let mut image = BTreeSet::new();
                for d in &source {
                    for a in 1..=k {
                        let out = insert(d, Biletter::new(a, k).unwrap(), side);
                        assert_eq!(out.result.weight(), d.weight().mul(&plactic::Monomial::var(a)));
                        assert_eq!(out.cover.label, k);
                        assert!(out.cover.alpha <= k && k < out.cover.beta);
                        assert!(image.insert(out.result.trimmed()), "{side:?} insertion not injective");
                    }
                }
                let target: BTreeSet<Bpd> = p
                    .k_bruhat_covers(k)
                    .iter()
                    .flat_map(|c| Bpd::all(&p.transpose(c.alpha, c.beta)))
                    .map(|d| d.trimmed())
                    .collect();
                assert_eq!(image, target, "{side:?} insertion into {p} with k = {k}");
            }
        }
    }
}

#[test]
fn build_order_independence() {
    for len in 0..=4 {
        let orders = all_orders(len);
        for q in PlacticBiword::all(len, 4) {
            let d = phi(&q);
            for order in &orders {
                assert_eq!(phi_in_order(&q, order), d, "{q} in order {order:?}");
            }
        }
    }
}

#[test]
fn inverse_round_trips() {
    for len in 0..=3 {
        for q in PlacticBiword::all(len, 3) {
            let (d, ch) = phi_left(&q);
            assert_eq!(inverse_left(&d, &ch).unwrap(), q);
            let (d, ch) = phi_right(&q);
            assert_eq!(inverse_right(&d, &ch).unwrap(), q);
        }
    }
}

#[test]
fn reverse_single_steps() {
    for p in Permutation::all(4) {
        for d in Bpd::all(&p) {
            for k in 1..=4 {
                for a in 1..=k {
                    for side in [Side::Right, Side::Left] {
                        if side == Side::Left && !left_defined(&p, k) {
                            continue;
                        }
                        let out = insert(&d, Biletter::new(a, k).unwrap(), side);
                        let (back, letter) = reverse_insert(&out.result, &out.cover, side).unwrap();
                        assert_eq!((back, letter), (d.clone(), a));
                    }
                }
            }
        }
    }
}

#[test]
fn left_insertion_domain() {
    let d = Bpd::rothe(&"1243".parse().unwrap());
    let b = Biletter::new(1, 1).unwrap();
    assert!(matches!(try_insert(&d, b, Side::Left), Err(plactic::Error::LeftInsertionDomain { k: 1, descent: 3 })));
    assert!(try_insert(&d, b, Side::Right).is_ok());
}

#[test]
fn single_biletter_words() {
    for k in 1..=5 {
        for b in 1..=k {
            let q = PlacticBiword::from_rows(&[b], &[k]).unwrap();
            let d = phi(&q);
            assert_eq!(*d.perm(), Permutation::simple(k));
            assert_eq!(maxword(&d), q);
            assert_eq!(minword(&d), q);
        }
    }
    assert_eq!(phi(&PlacticBiword::empty()), Bpd::identity(0));
    assert!(maxword(&Bpd::identity(3)).is_empty());
    assert!(minword(&Bpd::identity(3)).is_empty());
}

#[test]
fn maxword_and_minword_label_multisets() {
    for n in 1..=5 {
        for p in Permutation::all(n) {
            let code = p.code();
            let maxcode = p.maxcode();
            for d in Bpd::all(&p) {
                let mx = maxword(&d);
                let mn = minword(&d);
                assert_eq!(phi(&mx), d);
                assert_eq!(phi(&mn), d);
                for i in 1..=n {
                    let count = |q: &PlacticBiword| q.bottom().iter().filter(|&&k| k == i).count();
                    assert_eq!(count(&mx), maxcode.get(i).copied().unwrap_or(0), "maxword of {p}");
                    assert_eq!(count(&mn), code.get(i - 1).copied().unwrap_or(0), "minword of {p}");
                }
            }
        }
    }
}

#[test]
fn grassmannian_words_follow_schensted() {
    for k in 1..=4 {
        for len in 0..=4 {
            for q in PlacticBiword::all(len, k).into_iter().filter(|q| q.bottom().iter().all(|&x| x == k)) {
                let word = q.top();
                let t = insert_word(&word);
                let d = phi(&q);
                assert!(d.perm().is_grassmannian());
                if len > 0 {
                    assert_eq!(d.perm().shape_of(k).unwrap(), t.shape());
                }
                assert_eq!(ssyt_to_bpd(&t, k).unwrap(), d);
                assert_eq!(grassmannian_to_ssyt(&d, k).unwrap(), t);
            }
        }
    }
}

#[test]
fn grassmannian_small_cases() {
    let d = ssyt_to_bpd(&plactic::Ssyt::new(vec![vec![2]]).unwrap(), 3).unwrap();
    assert_eq!(*d.perm(), Permutation::simple(3));
    assert_eq!(d.blank_rows(), vec![2]);
    assert_eq!(ssyt_to_bpd(&plactic::Ssyt::empty(), 3).unwrap(), Bpd::identity(0));
    let tableaux: BTreeSet<Bpd> =
        (1..=3).map(|b| ssyt_to_bpd(&plactic::Ssyt::new(vec![vec![b]]).unwrap(), 3).unwrap()).collect();
    assert_eq!(tableaux, Bpd::all(&Permutation::simple(3)).into_iter().collect());
    assert!(ssyt_to_bpd(&plactic::Ssyt::new(vec![vec![4]]).unwrap(), 3).is_err());
}

fn biword_strategy() -> impl Strategy<Value = PlacticBiword> {
    prop::collection::vec((1usize..=5, 0usize..5), 0..=7).prop_map(|raw| {
        let mut labels: Vec<usize> = raw.iter().map(|&(k, _)| k).collect();
        labels.sort_unstable_by(|a, b| b.cmp(a));
        let letters = labels.iter().zip(&raw).map(|(&k, &(_, a))| Biletter::new(a % k + 1, k).unwrap()).collect();
        PlacticBiword::new(letters).unwrap()
    })
}

proptest! {
    #[test]
    fn weight_is_product_of_letters(q in biword_strategy()) {
        let d = phi(&q);
        let mut counts = vec![0; 6];
        for a in q.top() {
            counts[a - 1] += 1;
        }
        prop_assert_eq!(d.weight(), plactic::Monomial::new(counts));
        prop_assert_eq!(d.perm().length(), q.len());
    }

    #[test]
    fn insertion_sides_agree_on_words(q in biword_strategy()) {
        let (left, _) = phi_left(&q);
        let (right, _) = phi_right(&q);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn single_insertion_adds_one_blank(q in biword_strategy(), a in 1usize..=5, k in 1usize..=5) {
        let a = a.min(k);
        let d = phi(&q);
        let b = Biletter::new(a, k).unwrap();
        let mut outs = vec![right_insert(&d, b)];
        if left_defined(d.perm(), k) {
            outs.push(left_insert(b, &d));
        }
        for out in outs {
            let mut expected = d.blank_rows();
            expected.push(a);
            expected.sort_unstable();
            prop_assert_eq!(out.result.blank_rows(), expected);
            prop_assert_eq!(out.result.perm().clone(), d.perm().transpose(out.cover.alpha, out.cover.beta));
            prop_assert_eq!(out.result.perm().length(), d.perm().length() + 1);
        }
    }
}
