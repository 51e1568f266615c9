//! Shared inputs for the benchmarks.

use plactic::{maxword, Bpd, Permutation, PlacticBiword};

/// Maxwords of every pipe dream of `w`.
pub fn maxwords(w: &str) -> Vec<PlacticBiword> {
    let p: Permutation = w.parse().expect("valid permutation");
    Bpd::all(&p).iter().map(maxword).collect()
}
