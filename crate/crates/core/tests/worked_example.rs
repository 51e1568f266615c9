use plactic::insertion::{ch_left, ch_right, maxword_chain, minword_chain, phi_left, phi_right};
use plactic::{maxword, minword, phi, Permutation, PlacticBiword};

fn q(top: &[usize], bottom: &[usize]) -> PlacticBiword {
    PlacticBiword::from_rows(top, bottom).unwrap()
}

fn example_maxword() -> PlacticBiword {
    q(&[7, 6, 5, 4, 2, 1, 2, 1, 3, 2], &[7, 7, 7, 7, 7, 7, 6, 6, 4, 4])
}

fn example_minword() -> PlacticBiword {
    q(&[7, 2, 6, 5, 1, 2, 4, 1, 3, 2], &[7, 6, 6, 5, 4, 4, 4, 3, 3, 2])
}

fn perms(list: &[&str]) -> Vec<Permutation> {
    list.iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn maxword_and_minword_share_a_pipe_dream() {
    let d = phi(&example_maxword());
    println!("{d}");
    assert_eq!(d.perm().to_string(), "13574862");
    assert_eq!(phi(&example_minword()), d);
    assert_eq!(maxword(&d), example_maxword());
    assert_eq!(minword(&d), example_minword());
}

#[test]
fn recording_chains() {
    let (_, right) = phi_right(&example_maxword());
    // The printed chain has 12346875 in fourth place; it is not a cover of
    // 12345786, while 12346785 is.
    let expected = perms(&[
        "12345678", "12345687", "12345786", "12346785", "12356784", "12456783", "13456782", "13456872", "13457862",
        "13475862", "13574862",
    ]);
    assert_eq!(right.perms(), expected);
    assert_eq!(right.labels(), vec![7, 7, 7, 7, 7, 7, 6, 6, 4, 4]);
    assert_eq!(right, maxword_chain(&"13574862".parse().unwrap()));
    assert_eq!(ch_right(&example_maxword()), right);

    let (_, left) = phi_left(&example_minword());
    let expected = perms(&[
        "12345678", "13245678", "13425678", "13524678", "13542678", "13562478", "13572468", "13574268", "13574628",
        "13574826", "13574862",
    ]);
    assert_eq!(left.perms(), expected);
    assert_eq!(left.labels(), vec![2, 3, 3, 4, 4, 4, 5, 6, 6, 7]);
    assert_eq!(left, minword_chain(&"13574862".parse().unwrap()));
    assert_eq!(ch_left(&example_minword()), left);
}
