use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use plactic::insertion::{phi_left, phi_right, try_insert};
use plactic::knuth::{self, knuth_graph};
use plactic::schubert::{
    admissible_left_chains, admissible_right_chains, chain_counts, count_chains, expand_schubert_with,
    has_separated_descents, schubert_bpd, schubert_divdiff, separated_descent_constant_with, SchubertCache,
};
use plactic::verify::{self, CheckReport};
use plactic::{maxword, minword, Biletter, Bpd, Permutation, PlacticBiword, Side};

#[derive(Parser)]
#[command(name = "plactic", version, about = "Plactic biwords and insertion for bumpless pipe dreams")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the pipe dreams of a permutation.
    Bpds {
        #[arg(long)]
        perm: Permutation,
    },
    /// Validate and render a pipe dream file.
    Render {
        #[arg(long)]
        bpd: String,
    },
    /// Insert a biword into a pipe dream letter by letter.
    Insert {
        /// Biword JSON, inline or a file path.
        #[arg(long)]
        biword: String,
        /// Pipe dream to start from; the identity if omitted.
        #[arg(long)]
        bpd: Option<String>,
        #[arg(long, value_enum, default_value_t = Order::Left)]
        order: Order,
    },
    /// The pipe dream of a biword with both recording chains.
    Phi {
        #[arg(long)]
        biword: String,
    },
    /// The maxword of a pipe dream (of every pipe dream of --perm if --bpd is omitted).
    Maxword {
        #[arg(long)]
        perm: Option<Permutation>,
        #[arg(long)]
        bpd: Option<String>,
    },
    /// The minword of a pipe dream (of every pipe dream of --perm if --bpd is omitted).
    Minword {
        #[arg(long)]
        perm: Option<Permutation>,
        #[arg(long)]
        bpd: Option<String>,
    },
    /// The generalized Knuth class of a biword.
    KnuthClass {
        #[arg(long)]
        biword: String,
        /// Write the move graph in Graphviz format.
        #[arg(long)]
        dot: Option<String>,
        #[arg(long, default_value_t = knuth::DEFAULT_CLASS_LIMIT)]
        limit: usize,
    },
    /// Every biword that builds the given pipe dream.
    Fiber {
        #[arg(long)]
        bpd: String,
    },
    /// Count chains from the identity with a given label sequence.
    Chains {
        /// Comma-separated labels k1,k2,...
        #[arg(long, value_delimiter = ',')]
        labels: Vec<usize>,
        /// Restrict to chains ending here.
        #[arg(long)]
        perm: Option<Permutation>,
    },
    /// The Schubert polynomial of a permutation.
    Schubert {
        #[arg(long)]
        perm: Permutation,
        #[arg(long, value_enum, default_value_t = Method::Bpd)]
        method: Method,
    },
    /// Structure constants c^σ_{π,ρ} for separated descents, by the pair-counting rule and by expansion.
    Constants {
        #[arg(long)]
        pi: Permutation,
        #[arg(long)]
        rho: Permutation,
    },
    /// Run brute-force verification suites.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Check only this permutation (connectivity suite).
        #[arg(long)]
        perm: Option<Permutation>,
        /// Number of extra random permutations of S_{max_n + 1} for the connectivity suite.
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Also write the JSON report to this file.
        #[arg(long = "report")]
        report: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    /// Read right to left, inserting on the left.
    Left,
    /// Read left to right, inserting on the right.
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Bpd,
    Divdiff,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Example,
    Extension,
    Connectivity,
    Associativity,
    Soundness,
    Oracles,
    Monk,
    Products,
    Constants,
}

enum Failure {
    Input(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_arg(s: &str) -> Result<String, Failure> {
    if s.trim_start().starts_with(['{', '[']) || s.contains('\n') {
        Ok(s.to_string())
    } else {
        fs::read_to_string(s).map_err(|e| Failure::Input(format!("{s}: {e}")))
    }
}

fn read_biword(s: &str) -> Result<PlacticBiword, Failure> {
    Ok(serde_json::from_str(&read_arg(s)?)?)
}

/// Pipe dream from a text file (rows of `. + r j - |`) or a JSON list of rows.
fn read_bpd(s: &str) -> Result<Bpd, Failure> {
    let text = read_arg(s)?;
    if text.trim_start().starts_with('[') {
        Ok(serde_json::from_str(&text)?)
    } else {
        Ok(text.parse()?)
    }
}

fn pipe_dreams(perm: &Option<Permutation>, bpd: &Option<String>) -> Result<Vec<Bpd>, Failure> {
    match (perm, bpd) {
        (_, Some(path)) => {
            let d = read_bpd(path)?;
            if let Some(p) = perm {
                if d.perm() != p {
                    return Err(Failure::Input(format!("pipe dream has permutation {}, not {p}", d.perm())));
                }
            }
            Ok(vec![d])
        }
        (Some(p), None) => Ok(Bpd::all(p)),
        (None, None) => Err(Failure::Input("give --perm or --bpd".into())),
    }
}

fn emit(out: &mut impl Write, json: bool, value: serde_json::Value, text: impl FnOnce() -> String) -> Outcome {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
    } else {
        write!(out, "{}", text())?;
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Bpds { perm } => {
            let ds = Bpd::all(&perm);
            emit(out, json, json!({ "perm": perm, "count": ds.len(), "bpds": ds }), || {
                let mut s = String::new();
                for d in &ds {
                    s.push_str(&format!("{}\n\n", d.render()));
                }
                s.push_str(&format!("{} pipe dreams of {perm}\n", ds.len()));
                s
            })
        }
        Command::Render { bpd } => {
            let d = read_bpd(&bpd)?;
            let weight = d.weight().to_string();
            emit(out, json, json!({ "perm": d.perm(), "weight": weight, "bpd": d }), || {
                format!("{}\nperm {}\nweight {weight}\n", d.render(), d.perm())
            })
        }
        Command::Insert { biword, bpd, order } => {
            let q = read_biword(&biword)?;
            let mut d = match bpd {
                Some(path) => read_bpd(&path)?,
                None => Bpd::identity(0),
            };
            let mut letters: Vec<Biletter> = q.letters().to_vec();
            let side = match order {
                Order::Left => {
                    letters.reverse();
                    Side::Left
                }
                Order::Right => Side::Right,
            };
            let mut steps = Vec::new();
            let mut lines = String::new();
            for b in letters {
                let o = try_insert(&d, b, side)?;
                lines.push_str(&format!(
                    "<{}/{}>  t({},{})  {}\n",
                    b.a,
                    b.k,
                    o.cover.alpha,
                    o.cover.beta,
                    o.result.perm()
                ));
                steps.push(json!({
                    "letter": { "a": b.a, "k": b.k },
                    "alpha": o.cover.alpha,
                    "beta": o.cover.beta,
                    "perm": o.result.perm(),
                    "bpd": o.result,
                }));
                d = o.result;
            }
            emit(out, json, json!({ "steps": steps, "bpd": d, "perm": d.perm() }), || {
                format!("{lines}{}\nperm {}\n", d.render(), d.perm())
            })
        }
        Command::Phi { biword } => {
            let q = read_biword(&biword)?;
            let (d, left) = phi_left(&q);
            let (d_right, right) = phi_right(&q);
            if d != d_right {
                return Err(Failure::Verification);
            }
            emit(out, json, json!({ "bpd": d, "perm": d.perm(), "left_chain": left, "right_chain": right }), || {
                format!("{}\nperm {}\nleft chain  {left}\nright chain {right}\n", d.render(), d.perm())
            })
        }
        Command::Maxword { perm, bpd } => {
            let ds = pipe_dreams(&perm, &bpd)?;
            let words: Vec<PlacticBiword> = ds.iter().map(maxword).collect();
            let chain = ds.first().map(|d| plactic::insertion::maxword_chain(d.perm()));
            word_listing(out, json, &ds, &words, chain)
        }
        Command::Minword { perm, bpd } => {
            let ds = pipe_dreams(&perm, &bpd)?;
            let words: Vec<PlacticBiword> = ds.iter().map(minword).collect();
            let chain = ds.first().map(|d| plactic::insertion::minword_chain(d.perm()));
            word_listing(out, json, &ds, &words, chain)
        }
        Command::KnuthClass { biword, dot, limit } => {
            let q = read_biword(&biword)?;
            let g = knuth_graph(&q, limit)?;
            if let Some(path) = dot {
                fs::write(&path, g.to_dot())?;
            }
            emit(
                out,
                json,
                json!({ "size": g.nodes.len(), "edges": g.edges.len(), "diameter": g.diameter(), "class": g.nodes }),
                || {
                    let mut s: String = g.nodes.iter().map(|w| format!("{w}\n")).collect();
                    s.push_str(&format!("{} biwords, {} edges\n", g.nodes.len(), g.edges.len()));
                    s
                },
            )
        }
        Command::Fiber { bpd } => {
            let d = read_bpd(&bpd)?;
            let words = knuth::fiber(&d);
            emit(out, json, json!({ "perm": d.perm(), "size": words.len(), "words": words }), || {
                let mut s: String = words.iter().map(|w| format!("{w}\n")).collect();
                s.push_str(&format!("{} biwords\n", words.len()));
                s
            })
        }
        Command::Chains { labels, perm } => {
            let counts: Vec<(Permutation, u64)> = match perm {
                Some(p) => vec![(p.clone(), count_chains(&p, &labels))],
                None => chain_counts(&labels).into_iter().collect(),
            };
            let rows: Vec<_> = counts.iter().map(|(p, c)| json!({ "perm": p, "count": c })).collect();
            emit(out, json, json!({ "labels": labels, "chains": rows }), || {
                counts.iter().map(|(p, c)| format!("{p} {c}\n")).collect()
            })
        }
        Command::Schubert { perm, method } => {
            let f = match method {
                Method::Bpd => schubert_bpd(&perm),
                Method::Divdiff => schubert_divdiff(&perm),
            };
            let terms: Vec<_> =
                f.terms().map(|(m, c)| json!({ "exponents": m.exponents(), "coefficient": c })).collect();
            emit(out, json, json!({ "perm": perm, "terms": terms }), || format!("{f}\n"))
        }
        Command::Constants { pi, rho } => constants(out, json, &pi, &rho),
        Command::Verify { suite, max_n, perm, samples, seed, report } => {
            if max_n == 0 {
                return Err(Failure::Input("--max-n must be positive".into()));
            }
            let reports = verification(suite, max_n, perm, samples, seed);
            let ok = reports.iter().all(|r| r.passed);
            let value = json!({ "ok": ok, "checks": reports });
            if let Some(path) = report {
                fs::write(&path, serde_json::to_string_pretty(&value)?)?;
            }
            emit(out, json, value, || {
                reports
                    .iter()
                    .map(|r| {
                        let status = if r.passed { "PASS" } else { "FAIL" };
                        format!("{status}  {:<40} {:>8.2}s  {}\n", r.name, r.seconds, r.detail)
                    })
                    .collect()
            })?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn word_listing(
    out: &mut impl Write,
    json: bool,
    ds: &[Bpd],
    words: &[PlacticBiword],
    chain: Option<plactic::DecoratedChain>,
) -> Outcome {
    let rows: Vec<_> = ds.iter().zip(words).map(|(d, w)| json!({ "bpd": d, "word": w })).collect();
    let value = if ds.len() == 1 {
        json!({ "word": words[0], "chain": chain })
    } else {
        json!({ "chain": chain, "words": rows })
    };
    emit(out, json, value, || {
        let mut s = String::new();
        for (d, w) in ds.iter().zip(words) {
            if ds.len() > 1 {
                s.push_str(&format!("{}\n", d.render()));
            }
            s.push_str(&format!("{w}\n"));
            if ds.len() > 1 {
                s.push('\n');
            }
        }
        if let Some(c) = &chain {
            s.push_str(&format!("chain {c}\n"));
        }
        s
    })
}

fn constants(out: &mut impl Write, json: bool, pi: &Permutation, rho: &Permutation) -> Outcome {
    if !has_separated_descents(pi, rho) {
        return Err(Failure::Input(plactic::Error::DescentConditionViolated.to_string()));
    }
    let mut cache = SchubertCache::new();
    let product = &cache.get(pi) * &cache.get(rho);
    let expansion = expand_schubert_with(&product, &mut cache)?;
    let ch_pi = admissible_left_chains(pi).into_iter().next().ok_or(plactic::Error::NoAdmissibleChain)?;
    let ch_rho = admissible_right_chains(rho).into_iter().next().ok_or(plactic::Error::NoAdmissibleChain)?;
    let mut rows = Vec::new();
    let mut all_match = true;
    for (sigma, &coef) in &expansion {
        let counted = separated_descent_constant_with(pi, rho, &Bpd::rothe(sigma), &ch_pi, &ch_rho)?;
        all_match &= counted as i64 == coef;
        rows.push((sigma.clone(), coef, counted));
    }
    let value = json!({
        "pi": pi,
        "rho": rho,
        "chain_pi": ch_pi,
        "chain_rho": ch_rho,
        "constants": rows.iter().map(|(s, e, c)| json!({ "sigma": s, "expansion": e, "counted": c })).collect::<Vec<_>>(),
    });
    emit(out, json, value, || {
        let mut s = format!("chain for {pi}: {ch_pi}\nchain for {rho}: {ch_rho}\n");
        for (sigma, e, c) in &rows {
            s.push_str(&format!("{sigma} {e} {c}\n"));
        }
        s
    })?;
    if all_match {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn verification(suite: Suite, max_n: usize, perm: Option<Permutation>, samples: usize, seed: u64) -> Vec<CheckReport> {
    let sample = || {
        let mut pool: Vec<Permutation> =
            Permutation::all(max_n + 1).into_iter().filter(|p| p.size() > max_n && p.length() <= 6).collect();
        pool.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        pool.truncate(samples);
        pool
    };
    match suite {
        Suite::All => verify::run_all(max_n, &sample()),
        Suite::Example => vec![verify::check_running_example()],
        Suite::Extension => vec![verify::check_extension_example()],
        Suite::Connectivity => match perm {
            Some(p) => vec![verify::check_connectivity(0, &[p])],
            None => vec![verify::check_connectivity(max_n, &sample())],
        },
        Suite::Associativity => vec![verify::check_associativity(max_n, max_n)],
        Suite::Soundness => vec![verify::check_soundness(max_n, max_n)],
        Suite::Oracles => vec![verify::check_oracles(max_n + 1, max_n)],
        Suite::Monk => vec![verify::check_monk(max_n)],
        Suite::Products => vec![verify::check_product_identity(max_n.saturating_sub(1).max(1), max_n)],
        Suite::Constants => vec![verify::check_structure_constants(max_n)],
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
