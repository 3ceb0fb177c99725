use std::fs;
use std::path::Path;
use std::time::Instant;

use biscount::colsub::count_induced;
use biscount::fptcount::BoundedCounter;
use biscount::fptras::{fptras_is_k_with_budget, parse_rational, DEFAULT_SAMPLE_BUDGET, GENERATOR};
use biscount::graph::{
    parse_bipartite, parse_coloured, random_bipartite_with_budget, random_bounded_degree_bipartite,
    random_coloured_with_budget, serialize_bipartite, serialize_coloured,
};
use biscount::homcount::count_hom;
use biscount::oracle::{Brute, Guards};
use biscount::reductions::{
    cliques_via_complement, clique_gadget_identity, domsets_via_lis, maxis_via_maxlis, rainbow_via_is_k,
    BoundedDegreeOracle, CountingOracle, ExhaustiveOracle, Outcome,
};
use biscount::{BipartiteGraph, ColouredGraph, Count, MaxDegree};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::*;
use crate::report::{csv_line, sha256_hex, RunReport};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

impl From<biscount::Error> for CliError {
    fn from(e: biscount::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// What a command wants printed, and whether it counts as success.
pub enum Output {
    Report(RunReport),
    Text(String),
    /// Report printed, then exit 2.
    Failed(RunReport, Vec<String>),
}

fn read_input(path: &Path) -> CliResult<(String, String)> {
    let bytes = fs::read(path).map_err(|e| CliError::Compute(format!("{}: {e}", path.display())))?;
    let digest = sha256_hex(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| CliError::Compute(format!("{}: not UTF-8", path.display())))?;
    Ok((text, digest))
}

fn load_bis(path: &Path) -> CliResult<(BipartiteGraph, String)> {
    let (text, digest) = read_input(path)?;
    let g = parse_bipartite(&text).map_err(|e| CliError::Compute(format!("{}: {e}", path.display())))?;
    Ok((g, digest))
}

fn load_col(path: &Path) -> CliResult<(ColouredGraph, String)> {
    let (text, digest) = read_input(path)?;
    let g = parse_coloured(&text).map_err(|e| CliError::Compute(format!("{}: {e}", path.display())))?;
    Ok((g, digest))
}

fn need(v: Option<usize>, flag: &str, what: &str) -> CliResult<usize> {
    v.ok_or_else(|| CliError::Usage(format!("{what} needs --{flag}")))
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

pub fn gen(argv: Vec<String>, a: &GenArgs) -> CliResult<Output> {
    let start = Instant::now();
    let budget = a.max_edges.unwrap_or(usize::MAX);
    let (text, vertices, edges) = match a.kind {
        GraphKind::Bis => {
            let g = random_bipartite_with_budget(a.left, a.right, a.delta, budget, a.seed);
            (serialize_bipartite(&g), g.n(), g.edge_count())
        }
        GraphKind::Col => {
            if a.colours == 0 {
                return Err(CliError::Usage("--colours must be at least 1".into()));
            }
            let g = random_coloured_with_budget(a.n, a.colours, a.delta, budget, a.seed);
            (serialize_coloured(&g), g.n(), g.edge_count())
        }
    };
    let Some(out) = &a.out else {
        return Ok(Output::Text(text));
    };
    fs::write(out, &text).map_err(|e| CliError::Compute(format!("{}: {e}", out.display())))?;
    let mut r = RunReport::new(argv, "chacha8-proposal");
    r.seed = Some(a.seed);
    r.push("file", out.display());
    r.push("vertices", vertices);
    r.push("edges", edges);
    r.push("output_digest", sha256_hex(text.as_bytes()));
    r.millis = millis(start);
    Ok(Output::Report(r))
}

pub fn count(argv: Vec<String>, a: &CountArgs) -> CliResult<Output> {
    let (g, digest) = load_bis(&a.file)?;
    let brute = Brute::new(Guards::from_env());
    let delta = a.delta.unwrap_or_else(|| g.max_degree());
    let alg = match a.alg {
        Algorithm::Brute => "brute".to_string(),
        Algorithm::Bounded => format!("bounded-degree delta={delta}"),
    };
    let mut r = RunReport::new(argv, alg);
    r.input_digest = Some(digest);
    let start = Instant::now();
    let bounded = || BoundedCounter::new(&g, delta);
    match a.problem {
        Problem::Is => {
            let v = match a.alg {
                Algorithm::Brute => brute.is(&g)?,
                Algorithm::Bounded => {
                    let c = bounded()?;
                    let mut total = Count::zero();
                    for l in 0..=g.n_left() {
                        total += c.lis(l)?;
                    }
                    total
                }
            };
            r.push("result", v);
        }
        Problem::Isk => {
            let k = need(a.k, "k", "isk")?;
            let v = match a.alg {
                Algorithm::Brute => brute.is_k(&g, k)?,
                Algorithm::Bounded => bounded()?.is_k(k)?,
            };
            r.push("result", v);
        }
        Problem::Lis => {
            let l = need(a.l, "l", "lis")?;
            let v = match a.alg {
                Algorithm::Brute => brute.lis(&g, l)?,
                Algorithm::Bounded => bounded()?.lis(l)?,
            };
            r.push("result", v);
        }
        Problem::Maxlis => {
            let l = need(a.l, "l", "maxlis")?;
            let (size, v) = match a.alg {
                Algorithm::Brute => brute.maxlis(&g, l)?,
                Algorithm::Bounded => bounded()?.maxlis(l)?,
            };
            r.push("size", size);
            r.push("count", v);
        }
        Problem::Nlr => {
            let l = need(a.l, "l", "nlr")?;
            if l > g.n_left() {
                return Err(CliError::Compute(format!("l = {l} exceeds |U| = {}", g.n_left())));
            }
            let top = delta.saturating_mul(l).min(g.n_right());
            let rs: Vec<usize> = match a.r {
                Some(r) => vec![r],
                None => (0..=top).collect(),
            };
            let values: Vec<Count> = match a.alg {
                Algorithm::Brute => rs.iter().map(|&r| brute.n_lr(&g, l, r)).collect::<Result<_, _>>()?,
                Algorithm::Bounded => {
                    let p = bounded()?.profile(l)?;
                    rs.iter().map(|&r| p.get(r)).collect()
                }
            };
            if a.r.is_some() {
                r.push("result", &values[0]);
            } else {
                for (rr, v) in rs.iter().zip(values) {
                    r.push(format!("r={rr}"), v);
                }
            }
        }
    }
    r.millis = millis(start);
    Ok(Output::Report(r))
}

pub fn approx(argv: Vec<String>, a: &ApproxArgs) -> CliResult<Output> {
    let (g, digest) = load_bis(&a.file)?;
    let eps = parse_rational(&a.eps).map_err(|e| CliError::Usage(e.to_string()))?;
    let start = Instant::now();
    let res = fptras_is_k_with_budget(&g, a.k, &eps, a.seed, a.budget.unwrap_or(DEFAULT_SAMPLE_BUDGET))?;
    let mut r = RunReport::new(argv, format!("fptras {GENERATOR}"));
    r.input_digest = Some(digest);
    r.seed = Some(a.seed);
    r.push("result", &res.estimate);
    r.push("approx", format!("{:.6}", res.estimate_f64()));
    r.push("samples", res.samples);
    r.push("hits", res.hits);
    r.push("epsilon", &res.epsilon);
    r.millis = millis(start);
    Ok(Output::Report(r))
}

pub fn reduce(argv: Vec<String>, a: &ReduceArgs) -> CliResult<Output> {
    let guards = Guards::from_env();
    let oracle: Box<dyn CountingOracle> = match a.oracle {
        Algorithm::Brute => Box::new(ExhaustiveOracle::new(guards)),
        Algorithm::Bounded => Box::new(BoundedDegreeOracle { delta: a.delta }),
    };
    let start = Instant::now();
    let (outcome, digest): (Outcome, String) = match a.pipeline {
        Pipeline::Maxis => {
            let (g, d) = load_bis(&a.file)?;
            (maxis_via_maxlis(&g, oracle.as_ref())?, d)
        }
        Pipeline::Domset => {
            let k = need(a.k, "k", "domset")?;
            let (g, d) = load_col(&a.file)?;
            (domsets_via_lis(g.graph(), k, oracle.as_ref())?, d)
        }
        Pipeline::Rainbow => {
            let (g, d) = load_col(&a.file)?;
            (rainbow_via_is_k(a.t.unwrap_or(1), &g, oracle.as_ref())?, d)
        }
        Pipeline::CliqueGadget => {
            let (g, d) = load_col(&a.file)?;
            (clique_gadget_identity(g.graph(), a.k.unwrap_or(3), oracle.as_ref())?, d)
        }
        Pipeline::CliqueComplement => {
            let k = need(a.k, "k", "clique-complement")?;
            let (g, d) = load_bis(&a.file)?;
            (cliques_via_complement(&g, k, &Brute::new(guards))?, d)
        }
    };
    let trace = serde_json::to_value(&outcome.trace).expect("trace serializes");
    if let Some(path) = &a.trace {
        let mut text = serde_json::to_string_pretty(&trace).expect("trace serializes");
        text.push('\n');
        fs::write(path, text).map_err(|e| CliError::Compute(format!("{}: {e}", path.display())))?;
    }
    let mut r = RunReport::new(argv, format!("{} via {}", outcome.trace.reduction, outcome.trace.oracle));
    r.input_digest = Some(digest);
    r.push("result", &outcome.value);
    r.push("oracle_queries", outcome.trace.oracle_answers.len());
    r.trace = Some(trace);
    r.millis = millis(start);
    Ok(Output::Report(r))
}

fn random_bis(n: usize, delta: usize, rng: &mut ChaCha8Rng) -> BipartiteGraph {
    let nl = n / 2;
    let nr = n - nl;
    let budget = rng.gen_range(0..=nl * nr);
    random_bipartite_with_budget(nl, nr, delta, budget, rng.gen())
}

fn random_col(n: usize, delta: usize, rng: &mut ChaCha8Rng) -> ColouredGraph {
    let q = rng.gen_range(1..=3);
    let budget = rng.gen_range(0..=n * delta / 2);
    random_coloured_with_budget(n, q, delta, budget, rng.gen())
}

/// One cross-check; `Ok(None)` on agreement, `Ok(Some(msg))` on a mismatch.
fn verify_once(a: &VerifyArgs, brute: &Brute, rng: &mut ChaCha8Rng) -> CliResult<Option<String>> {
    let delta = a.delta;
    let k = a.k.unwrap_or(2);
    let l = a.l.unwrap_or(2);
    let mismatch = |what: String, fast: String, slow: String| {
        if fast == slow {
            None
        } else {
            Some(format!("{what}: bounded {fast}, brute {slow}"))
        }
    };
    Ok(match a.problem {
        VerifyProblem::Hom | VerifyProblem::Ind => {
            let g = random_col(a.n, delta, rng);
            let pn = rng.gen_range(1..=4);
            let h = random_col(pn, delta, rng);
            let (fast, slow) = if a.problem == VerifyProblem::Hom {
                (count_hom(&h, &g)?, brute.hom(&h, &g)?)
            } else {
                (count_induced(&h, &g, delta)?, brute.ind(&h, &g)?)
            };
            mismatch(format!("pattern {:?} host {:?}", h, g), fast.to_string(), slow.to_string())
        }
        p => {
            let g = random_bis(a.n, delta, rng);
            let c = BoundedCounter::new(&g, delta)?;
            let what = serialize_bipartite(&g).replace('\n', " ");
            match p {
                VerifyProblem::Is => {
                    let mut fast = Count::zero();
                    for ll in 0..=g.n_left() {
                        fast += c.lis(ll)?;
                    }
                    mismatch(what, fast.to_string(), brute.is(&g)?.to_string())
                }
                VerifyProblem::Isk => mismatch(what, c.is_k(k)?.to_string(), brute.is_k(&g, k)?.to_string()),
                VerifyProblem::Lis if l <= g.n_left() => {
                    mismatch(what, c.lis(l)?.to_string(), brute.lis(&g, l)?.to_string())
                }
                VerifyProblem::Maxlis if l <= g.n_left() => {
                    mismatch(what, format!("{:?}", c.maxlis(l)?), format!("{:?}", brute.maxlis(&g, l)?))
                }
                VerifyProblem::Nlr if l <= g.n_left() => {
                    let p = c.profile(l)?;
                    let fast: Vec<String> = (0..=g.n_right()).map(|r| p.get(r).to_string()).collect();
                    let slow: Vec<String> = (0..=g.n_right())
                        .map(|r| brute.n_lr(&g, l, r).map(|v| v.to_string()))
                        .collect::<Result<_, _>>()?;
                    mismatch(what, fast.join(","), slow.join(","))
                }
                _ => return Err(CliError::Usage(format!("l = {l} exceeds the left side of {}-vertex instances", a.n))),
            }
        }
    })
}

pub fn verify(argv: Vec<String>, a: &VerifyArgs) -> CliResult<Output> {
    if a.trials == 0 {
        return Err(CliError::Usage("--trials must be positive".into()));
    }
    let brute = Brute::new(Guards::from_env());
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let start = Instant::now();
    let mut failures = Vec::new();
    for i in 0..a.trials {
        if let Some(msg) = verify_once(a, &brute, &mut rng)? {
            failures.push(format!("trial {i}: {msg}"));
        }
    }
    let mut r = RunReport::new(argv, format!("bounded-degree delta={} vs brute", a.delta));
    r.seed = Some(a.seed);
    r.push("agreement", format!("{}/{} agree", a.trials - failures.len(), a.trials));
    r.push("mismatches", failures.len());
    r.millis = millis(start);
    Ok(if failures.is_empty() { Output::Report(r) } else { Output::Failed(r, failures) })
}

pub fn bench(a: &BenchArgs) -> CliResult<Output> {
    if a.gadget == 0 {
        return Err(CliError::Usage("--gadget must be positive".into()));
    }
    let gadget = random_bounded_degree_bipartite(a.gadget, a.gadget, a.delta, a.seed);
    let header = ["n", "m", "delta", "param", "algorithm", "millis", "result_digest"].map(String::from);
    let mut out = csv_line(&header);
    out.push('\n');
    for &n in &a.sizes {
        let g = gadget.repeat((n / (2 * a.gadget)).max(1));
        let start = Instant::now();
        let c = BoundedCounter::new(&g, a.delta)?;
        let result = match a.problem {
            Problem::Is => return Err(CliError::Usage("bench supports isk, lis, maxlis and nlr".into())),
            Problem::Isk => c.is_k(a.param)?.to_string(),
            Problem::Lis => c.lis(a.param)?.to_string(),
            Problem::Maxlis => format!("{:?}", c.maxlis(a.param)?),
            Problem::Nlr => serde_json::to_string(&c.profile(a.param)?).expect("profile serializes"),
        };
        let row = [
            g.n().to_string(),
            g.edge_count().to_string(),
            a.delta.to_string(),
            a.param.to_string(),
            format!("bounded-{:?}", a.problem).to_lowercase(),
            format!("{:.3}", millis(start)),
            sha256_hex(result.as_bytes())[..16].to_string(),
        ];
        out.push_str(&csv_line(&row));
        out.push('\n');
    }
    Ok(Output::Text(out))
}
