//! Brute-force checks of the main statements on small permutations.
//!
//! Each check returns a [`CheckReport`] instead of panicking so that callers
//! can print a summary table.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bpd::Bpd;
use crate::insertion::{all_orders, maxword, minword, phi, phi_in_order, phi_left, phi_right, right_insert};
use crate::insertion::{Biletter, PlacticBiword};
use crate::knuth::{follow_path, knuth_path, neighbors, verify_connectivity};
use crate::perm::{DecoratedChain, Permutation};
use crate::poly::Monomial;
use crate::schubert::{
    admissible_left_chains, admissible_right_chains, chain_counts, expand_schubert_with, has_separated_descents,
    product_of_grassmannian_lines, schubert_bpd, schubert_divdiff, separated_descent_constant_with, SchubertCache,
};

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

fn timed(name: &str, f: impl FnOnce() -> std::result::Result<String, String>) -> CheckReport {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckReport { name: name.to_string(), passed, detail, seconds: start.elapsed().as_secs_f64() }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn perms_up_to(max_n: usize) -> Vec<Permutation> {
    Permutation::all(max_n)
}

/// The running example: a pipe dream of 13574862 with its maxword and minword.
pub mod example {
    use super::*;

    pub fn perm() -> Permutation {
        "13574862".parse().unwrap()
    }

    pub fn maxword() -> PlacticBiword {
        PlacticBiword::from_rows(&[7, 6, 5, 4, 2, 1, 2, 1, 3, 2], &[7, 7, 7, 7, 7, 7, 6, 6, 4, 4]).unwrap()
    }

    pub fn minword() -> PlacticBiword {
        PlacticBiword::from_rows(&[7, 2, 6, 5, 1, 2, 4, 1, 3, 2], &[7, 6, 6, 5, 4, 4, 4, 3, 3, 2]).unwrap()
    }

    /// Right recording chain of the maxword. The fourth permutation is
    /// 12346785; 12346875 is not a cover of its predecessor.
    pub fn maxword_chain() -> &'static str {
        "12345678 <7 12345687 <7 12345786 <7 12346785 <7 12356784 <7 12456783 <7 13456782 \
         <6 13456872 <6 13457862 <4 13475862 <4 13574862"
    }

    pub fn minword_chain() -> &'static str {
        "12345678 <2 13245678 <3 13425678 <3 13524678 <4 13542678 <4 13562478 <4 13572468 \
         <5 13574268 <6 13574628 <6 13574826 <7 13574862"
    }

    pub fn pipe_dream() -> Bpd {
        phi(&maxword())
    }

    /// Maxword of the pipe dream after inserting ⟨1/4⟩.
    pub fn extended_maxword() -> PlacticBiword {
        PlacticBiword::from_rows(&[7, 6, 5, 4, 3, 2, 1, 2, 1, 2, 1], &[7, 7, 7, 7, 7, 7, 7, 6, 6, 4, 4]).unwrap()
    }

    /// The sequence of equivalent biwords leading from `maxword·⟨1/4⟩` to
    /// [`extended_maxword`].
    pub fn extension_steps() -> Vec<PlacticBiword> {
        let rows: [(&[usize], &[usize]); 12] = [
            (&[7, 6, 5, 4, 2, 1, 2, 1, 3, 2, 1], &[7, 7, 7, 7, 7, 7, 6, 6, 4, 4, 4]),
            (&[7, 6, 5, 4, 2, 1, 2, 1, 3, 2, 1], &[7, 6, 6, 6, 6, 6, 6, 6, 4, 4, 4]),
            (&[7, 2, 6, 5, 4, 2, 1, 1, 3, 2, 1], &[7, 6, 6, 5, 5, 5, 5, 5, 4, 4, 4]),
            (&[7, 2, 6, 5, 4, 2, 1, 3, 1, 2, 1], &[7, 6, 6, 5, 5, 5, 5, 4, 4, 4, 4]),
            (&[7, 2, 6, 5, 4, 2, 1, 3, 1, 2, 1], &[7, 6, 6, 5, 4, 4, 4, 4, 4, 4, 4]),
            (&[7, 2, 6, 5, 4, 3, 2, 1, 2, 1, 1], &[7, 6, 6, 5, 4, 4, 4, 4, 4, 4, 4]),
            (&[7, 2, 6, 5, 4, 3, 2, 1, 2, 1, 1], &[7, 6, 6, 5, 4, 4, 4, 4, 4, 4, 4]),
            (&[7, 2, 6, 5, 4, 3, 2, 1, 2, 1, 1], &[7, 6, 6, 5, 5, 5, 5, 5, 4, 4, 4]),
            (&[7, 2, 6, 5, 4, 3, 2, 1, 2, 1, 1], &[7, 6, 6, 5, 5, 5, 5, 5, 4, 4, 4]),
            (&[7, 2, 6, 5, 4, 3, 2, 1, 1, 2, 1], &[7, 6, 6, 5, 5, 5, 5, 5, 5, 4, 4]),
            (&[7, 6, 5, 4, 3, 2, 1, 2, 1, 2, 1], &[7, 6, 6, 6, 6, 6, 6, 6, 6, 4, 4]),
            (&[7, 6, 5, 4, 3, 2, 1, 2, 1, 2, 1], &[7, 7, 7, 7, 7, 7, 7, 6, 6, 4, 4]),
        ];
        rows.iter().map(|(t, b)| PlacticBiword::from_rows(t, b).unwrap()).collect()
    }
}

/// Maxword, minword and both recording chains of the running example.
pub fn check_running_example() -> CheckReport {
    timed("running example maxword/minword", || {
        let d = example::pipe_dream();
        ensure(*d.perm() == example::perm(), || format!("φ(maxword) has permutation {}", d.perm()))?;
        let mx = maxword(&d);
        let mn = minword(&d);
        ensure(mx.to_string() == example::maxword().to_string(), || format!("maxword {mx}"))?;
        ensure(mn.to_string() == example::minword().to_string(), || format!("minword {mn}"))?;
        ensure(phi(&mn) == d, || "minword builds a different pipe dream".into())?;
        let (_, right) = phi_right(&mx);
        let (_, left) = phi_left(&mn);
        ensure(right.to_string() == example::maxword_chain(), || format!("right chain {right}"))?;
        ensure(left.to_string() == example::minword_chain(), || format!("left chain {left}"))?;
        Ok(format!("maxword {mx}; minword {mn}"))
    })
}

/// Inserting ⟨1/4⟩ after the maxword, then walking to the new maxword.
pub fn check_extension_example() -> CheckReport {
    timed("extension by <1/4>", || {
        let start = example::maxword().concat(&PlacticBiword::from_rows(&[1], &[4]).unwrap()).unwrap();
        let d = phi(&start);
        let target = example::extended_maxword();
        ensure(maxword(&d) == target, || format!("maxword after insertion is {}", maxword(&d)))?;
        let path = knuth_path(&start, &target, 5_000_000)
            .map_err(|e| e.to_string())?
            .ok_or("no Knuth path to the new maxword")?;
        let walk = follow_path(&start, &path).ok_or("path does not apply")?;
        ensure(walk.iter().all(|q| phi(q) == d), || "a step along the path changes φ".into())?;
        let steps = example::extension_steps();
        let agree = steps.iter().filter(|q| phi(q) == d).count();
        Ok(format!(
            "permutation {}; path of {} moves; {agree}/{} listed intermediate biwords build the same pipe dream",
            d.perm(),
            path.len(),
            steps.len()
        ))
    })
}

/// Every fiber over `S_n`, `n <= max_n`, is one Knuth class containing the
/// maxword and the minword; `extra` adds further permutations.
pub fn check_connectivity(max_n: usize, extra: &[Permutation]) -> CheckReport {
    timed("fibers are Knuth classes", || {
        let mut perms = perms_up_to(max_n);
        perms.extend(extra.iter().cloned());
        let reports: Vec<_> = perms.par_iter().map(verify_connectivity).collect();
        let fibers: usize = reports.iter().map(|r| r.fibers.len()).sum();
        let words: usize = reports.iter().flat_map(|r| &r.fibers).map(|f| f.size).sum();
        let diameter = reports.iter().flat_map(|r| &r.fibers).map(|f| f.diameter).max().unwrap_or(0);
        if let Some(bad) = reports.iter().find(|r| !r.ok) {
            return Err(format!("{} has a disconnected or incomplete fiber", bad.perm));
        }
        Ok(format!("{} permutations, {fibers} fibers, {words} words, max diameter {diameter}", perms.len()))
    })
}

/// All build orders give the same pipe dream.
pub fn check_associativity(max_len: usize, max_k: usize) -> CheckReport {
    timed("build order independence", || {
        let mut count = 0;
        for len in 0..=max_len {
            let orders = all_orders(len);
            let words = PlacticBiword::all(len, max_k);
            let bad = words.par_iter().find_any(|q| {
                let d = phi(q);
                !orders.iter().all(|o| phi_in_order(q, o) == d)
            });
            if let Some(q) = bad {
                return Err(format!("{q} depends on the build order"));
            }
            count += words.len() * orders.len();
        }
        Ok(format!("{count} (word, order) pairs"))
    })
}

/// Every Knuth move preserves φ.
pub fn check_soundness(max_len: usize, max_k: usize) -> CheckReport {
    timed("Knuth moves preserve φ", || {
        let words: Vec<PlacticBiword> = (0..=max_len).flat_map(|l| PlacticBiword::all(l, max_k)).collect();
        let results: Vec<std::result::Result<usize, String>> = words
            .par_iter()
            .map(|q| {
                let d = phi(q);
                let moves = neighbors(q);
                match moves.iter().find(|(r, _)| phi(r) != d) {
                    Some((r, mv)) => Err(format!("{q} -> {r} by {mv:?} changes φ")),
                    None => Ok(moves.len()),
                }
            })
            .collect();
        let mut edges = 0;
        for r in results {
            edges += r?;
        }
        Ok(format!("{} words, {edges} directed edges", words.len()))
    })
}

/// BPD weights against divided differences, droop closure against exhaustive
/// search.
pub fn check_oracles(poly_n: usize, enum_n: usize) -> CheckReport {
    timed("independent oracles agree", || {
        let perms = perms_up_to(poly_n);
        if let Some(p) = perms.par_iter().find_any(|p| schubert_bpd(p) != schubert_divdiff(p)) {
            return Err(format!("Schubert polynomials of {p} disagree"));
        }
        let small = perms_up_to(enum_n);
        if let Some(p) = small.par_iter().find_any(|p| Bpd::all(p) != Bpd::all_exhaustive(p)) {
            return Err(format!("pipe dream enumerations of {p} disagree"));
        }
        Ok(format!("{} polynomials, {} enumerations", perms.len(), small.len()))
    })
}

/// Single-letter right insertion is a bijection onto the k-covers.
pub fn check_monk(max_n: usize) -> CheckReport {
    timed("Monk bijection", || {
        let mut pairs = 0;
        for p in perms_up_to(max_n) {
            let source = Bpd::all(&p);
            for k in 1..max_n.max(2) {
                let mut image = BTreeSet::new();
                for d in &source {
                    for a in 1..=k {
                        let out = right_insert(d, Biletter { a, k });
                        ensure(out.result.weight() == d.weight().mul(&Monomial::var(a)), || {
                            format!("weight not multiplied by x{a} for {d:?}")
                        })?;
                        ensure(image.insert(out.result.trimmed()), || format!("{p}, k = {k}: not injective"))?;
                        pairs += 1;
                    }
                }
                let target: BTreeSet<Bpd> = p
                    .k_bruhat_covers(k)
                    .iter()
                    .flat_map(|c| Bpd::all(&p.transpose(c.alpha, c.beta)))
                    .map(|d| d.trimmed())
                    .collect();
                ensure(image == target, || format!("{p}, k = {k}: not onto the covers"))?;
            }
        }
        Ok(format!("{pairs} insertions"))
    })
}

/// `S_{k_1} ... S_{k_m}` expands with chain counts as coefficients.
pub fn check_product_identity(max_k: usize, max_m: usize) -> CheckReport {
    timed("product of S_k counts chains", || {
        let mut cache = SchubertCache::new();
        let mut vectors = 0;
        for m in 0..=max_m as u32 {
            for idx in 0..max_k.pow(m) {
                let labels: Vec<usize> = (0..m).map(|t| idx / max_k.pow(t) % max_k + 1).collect();
                let f = product_of_grassmannian_lines(&labels);
                let expansion = expand_schubert_with(&f, &mut cache).map_err(|e| e.to_string())?;
                let counts: BTreeMap<Permutation, i64> =
                    chain_counts(&labels).into_iter().map(|(p, c)| (p, c as i64)).collect();
                ensure(expansion == counts, || format!("labels {labels:?}"))?;
                vectors += 1;
            }
        }
        Ok(format!("{vectors} label vectors"))
    })
}

/// The pair-counting rule for separated descents against expansion, for every
/// pipe dream of σ and every admissible pair of chains.
pub fn check_structure_constants(max_n: usize) -> CheckReport {
    timed("separated-descent structure constants", || {
        let perms = perms_up_to(max_n);
        let mut cache = SchubertCache::new();
        let mut jobs = Vec::new();
        for p in &perms {
            for r in perms.iter().filter(|r| has_separated_descents(p, r)) {
                let f = &cache.get(p) * &cache.get(r);
                let expansion = expand_schubert_with(&f, &mut cache).map_err(|e| e.to_string())?;
                let mut targets: BTreeSet<Permutation> = expansion.keys().cloned().collect();
                targets.extend(perms.iter().filter(|s| s.length() == p.length() + r.length()).cloned());
                for s in targets {
                    let want = expansion.get(&s).copied().unwrap_or(0) as u64;
                    jobs.push((p.clone(), r.clone(), s, want));
                }
            }
        }
        let triples = jobs.len();
        let counts: Vec<std::result::Result<usize, String>> = jobs
            .par_iter()
            .map(|(p, r, s, want)| {
                let left: Vec<DecoratedChain> = admissible_left_chains(p);
                let right: Vec<DecoratedChain> = admissible_right_chains(r);
                ensure(!left.is_empty() && !right.is_empty(), || format!("no admissible chain for {p}, {r}"))?;
                let mut n = 0;
                for d in Bpd::all(s) {
                    for cp in &left {
                        for cr in &right {
                            let got = separated_descent_constant_with(p, r, &d, cp, cr).map_err(|e| e.to_string())?;
                            ensure(got == *want, || format!("c({p},{r};{s}) = {want} but counted {got}"))?;
                            n += 1;
                        }
                    }
                }
                Ok(n)
            })
            .collect();
        let mut choices = 0;
        for c in counts {
            choices += c?;
        }
        Ok(format!("{triples} triples, {choices} choices of (D, chains)"))
    })
}

/// Runs every check at the given size; `sample` adds permutations to the
/// connectivity check.
pub fn run_all(max_n: usize, sample: &[Permutation]) -> Vec<CheckReport> {
    vec![
        check_running_example(),
        check_extension_example(),
        check_connectivity(max_n, sample),
        check_associativity(max_n, max_n),
        check_soundness(max_n, max_n),
        check_oracles(max_n + 1, max_n),
        check_monk(max_n),
        check_product_identity(max_n - 1, max_n),
        check_structure_constants(max_n),
    ]
}
