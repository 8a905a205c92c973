//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 on success (and on `stability`/`verify` only when
//! certified / all green), 2 when a pipeline ran but did not certify,
//! 1 on usage or input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::time::Instant;

use surplab::extraction::{
    self, density_increment_step, extract_balanced, master_chain, PipelineParams,
};
use surplab::generators::{self, Family, GraphSpec};
use surplab::graph::Graph;
use surplab::spectral;
use surplab::stability::{stability_certificate, StabilityStatus};
use surplab::surplus::{self, Witness};

use crate::report::{
    sha256_hex, to_json_string, CertSummary, CertTolerances, Findings, InputInfo, LowRankSummary,
    OracleSummary, Report, Timing, SCHEMA,
};
use crate::suites;

#[derive(Parser)]
#[command(
    name = "surplab",
    version,
    about = "Spectral certificates, dense-subgraph extraction and clique-union stability for graph cuts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the full JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Worker threads for the parallel reductions (deterministic for any
    /// count).
    #[arg(long, global = true, env = "SURPLAB_WORKERS")]
    pub workers: Option<usize>,
}

#[derive(Args)]
pub struct InputArgs {
    /// Graph file (`n <N>` header optional, one `u v` edge per line, `#`
    /// comments).
    #[arg(long, value_name = "PATH", conflicts_with = "gen")]
    pub input: Option<PathBuf>,
    /// Inline generator spec as JSON, e.g.
    /// '{"family":"gnp","n":30,"p":0.5,"seed":1}'.
    #[arg(long, value_name = "JSON")]
    pub gen: Option<String>,
}

#[derive(Args)]
pub struct ParamArgs {
    /// Density-increment exponent (0 < eps < 1/4).
    #[arg(long, default_value_t = 0.2)]
    pub eps: f64,
    /// Density target exponent for the increment iteration.
    #[arg(long, default_value_t = 0.03)]
    pub alpha: f64,
    /// Clique-target exponent for pulling (target n^(1-delta)).
    #[arg(long, default_value_t = 0.5)]
    pub delta: f64,
    /// Balance parameter; defaults to 4 log2 n at the point of use.
    #[arg(long = "C", value_name = "C")]
    pub c_balance: Option<f64>,
    /// Auxiliary exponent above eps (defaults to 1.1 eps).
    #[arg(long)]
    pub eps0: Option<f64>,
    /// Auxiliary exponent above alpha (defaults to 1.1 alpha).
    #[arg(long)]
    pub alpha0: Option<f64>,
    /// Vertex cap for the exhaustive MaxCut oracle.
    #[arg(long, default_value_t = 24)]
    pub exact_limit: usize,
    /// Vertex cap for exact maximum-clique search.
    #[arg(long, default_value_t = 64)]
    pub clique_limit: usize,
    /// Minimum size of pulled cliques (combined with n^(1-delta)).
    #[arg(long, default_value_t = 2)]
    pub clique_target: usize,
    /// Sparse threshold for block classification.
    #[arg(long, default_value_t = 0.25)]
    pub theta_lo: f64,
    /// Dense threshold for block classification.
    #[arg(long, default_value_t = 0.75)]
    pub theta_hi: f64,
    /// Dense-subgraph strategy for the master chain's first stage.
    #[arg(long, default_value = "peel")]
    pub dense_finder: String,
}

impl ParamArgs {
    pub fn build(&self) -> Result<PipelineParams, String> {
        let mut p = PipelineParams::new(self.eps, self.alpha, self.delta)
            .map_err(|e| e.to_string())?;
        if self.eps0.is_some() || self.alpha0.is_some() {
            p = p
                .with_eps0_alpha0(
                    self.eps0.unwrap_or(1.1 * self.eps),
                    self.alpha0.unwrap_or(1.1 * self.alpha),
                )
                .map_err(|e| e.to_string())?;
        }
        p = p
            .with_c_balance(self.c_balance)
            .and_then(|p| p.with_exact_limit(self.exact_limit))
            .and_then(|p| p.with_clique_exact_limit(self.clique_limit))
            .and_then(|p| p.with_clique_target(self.clique_target))
            .and_then(|p| p.with_thetas(self.theta_lo, self.theta_hi))
            .and_then(|p| p.with_dense_finder(&self.dense_finder))
            .map_err(|e| e.to_string())?;
        Ok(p)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtractMode {
    Step,
    Iterate,
    Balanced,
    Master,
}

#[derive(Subcommand)]
pub enum Command {
    /// Maximum cut: exhaustive up to the exact limit, local search beyond.
    Maxcut {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 24)]
        exact_limit: usize,
        /// Seed for the local-search fallback.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        #[arg(long, default_value_t = 64)]
        max_passes: usize,
    },
    /// Eigenvalues, power sums with their identities, interlacing and
    /// principal-eigenvector bounds.
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Surplus lower-bound certificates: eigenvalue test matrices, the
    /// low-rank relaxation with rounding, and the spectral upper bound.
    Certify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 8)]
        rank: usize,
        #[arg(long, default_value_t = 400)]
        iters: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 24)]
        exact_limit: usize,
    },
    /// Density increment (single step or iterated), balanced peeling, or
    /// the full master chain.
    Extract {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "master")]
        mode: ExtractMode,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Certify closeness to a disjoint union of cliques; exit 0 only when
    /// certified.
    Stability {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Generate a graph family deterministically and write it out.
    Gen {
        #[command(flatten)]
        family: GenArgs,
        /// Output path; stdout when omitted.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run a seeded property-verification suite; exit 0 only when every
    /// case passes.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
pub struct GenArgs {
    /// gnp | complete | empty | disjoint_cliques | perturbed_clique_union |
    /// two_overlapping_cliques | complete_bipartite | turan | paley |
    /// clique_minus_matching
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    /// Comma-separated clique sizes, e.g. 15,15,15,15.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    #[arg(long)]
    pub flips: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub c: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl GenArgs {
    pub fn to_spec(&self) -> Result<GraphSpec, String> {
        let need_n = || self.n.ok_or_else(|| "missing --n".to_string());
        let family = match self.family.as_str() {
            "gnp" => Family::Gnp {
                n: need_n()?,
                p: self.p.ok_or("missing --p")?,
            },
            "complete" => Family::Complete { n: need_n()? },
            "empty" => Family::Empty { n: need_n()? },
            "disjoint_cliques" => Family::DisjointCliques {
                sizes: self.sizes.clone().ok_or("missing --sizes")?,
            },
            "perturbed_clique_union" => Family::PerturbedCliqueUnion {
                sizes: self.sizes.clone().ok_or("missing --sizes")?,
                flips: self.flips.ok_or("missing --flips")?,
            },
            "two_overlapping_cliques" => Family::TwoOverlappingCliques {
                a: self.a.ok_or("missing --a")?,
                b: self.b.ok_or("missing --b")?,
                c: self.c.ok_or("missing --c")?,
            },
            "complete_bipartite" => Family::CompleteBipartite {
                a: self.a.ok_or("missing --a")?,
                b: self.b.ok_or("missing --b")?,
            },
            "turan" => Family::Turan {
                n: need_n()?,
                r: self.r.ok_or("missing --r")?,
            },
            "paley" => Family::Paley {
                q: self.q.ok_or("missing --q")?,
            },
            "clique_minus_matching" => Family::CliqueMinusMatching { n: need_n()? },
            other => return Err(format!("unknown family `{other}`")),
        };
        Ok(GraphSpec::new(family, self.seed))
    }
}

fn load_graph(input: &InputArgs) -> Result<(Graph, InputInfo), String> {
    match (&input.input, &input.gen) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let g = Graph::from_text(&text)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            let info = InputInfo {
                source: path.display().to_string(),
                sha256: sha256_hex(text.as_bytes()),
                n: g.n(),
                m: g.m(),
            };
            Ok((g, info))
        }
        (None, Some(json)) => {
            let spec: GraphSpec =
                serde_json::from_str(json).map_err(|e| format!("bad --gen spec: {e}"))?;
            let g = generators::generate(&spec).map_err(|e| e.to_string())?;
            let canonical = serde_json::to_string(&spec).expect("spec serializes");
            let info = InputInfo {
                source: format!("gen:{canonical}"),
                sha256: sha256_hex(canonical.as_bytes()),
                n: g.n(),
                m: g.m(),
            };
            Ok((g, info))
        }
        (None, None) => Err("provide --input FILE or --gen JSON".into()),
        (Some(_), Some(_)) => Err("--input and --gen are mutually exclusive".into()),
    }
}

fn write_report(path: Option<&Path>, report: &Report) -> Result<(), String> {
    if let Some(path) = path {
        let json = to_json_string(report).map_err(|e| e.to_string())?;
        std::fs::write(path, json).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

fn make_report(command: &str, input: Option<InputInfo>, findings: Findings, started: Instant) -> Report {
    Report {
        schema: SCHEMA,
        tool_version: env!("CARGO_PKG_VERSION"),
        command: command.into(),
        input,
        findings,
        timing: Timing {
            seconds: started.elapsed().as_secs_f64(),
        },
    }
}

/// Runs a parsed invocation; the returned code is the process exit code.
pub fn run(cli: Cli) -> Result<i32, String> {
    let started = Instant::now();
    let workers = cli.workers.unwrap_or(1).max(1);
    let json_path = cli.json.clone();

    match cli.command {
        Command::Maxcut {
            input,
            exact_limit,
            seed,
            restarts,
            max_passes,
        } => {
            let (g, info) = load_graph(&input)?;
            let result = if g.n() <= exact_limit {
                surplus::maxcut_exact_workers(&g, exact_limit, workers)
                    .map_err(|e| e.to_string())?
            } else {
                surplus::maxcut_local_search_workers(&g, seed, restarts, max_passes, workers)
            };
            let surplus_val = result.surplus(&g);
            println!("graph: n={} m={} ({})", g.n(), g.m(), info.source);
            println!(
                "maxcut value: {} (method {:?}, exact {})",
                result.value, result.method, result.exact
            );
            println!("surplus: {surplus_val}");
            let findings = Findings::Maxcut {
                method: format!("{:?}", result.method).to_lowercase(),
                value: result.value,
                surplus: surplus_val,
                exact: result.exact,
                cut: result.cut,
                exact_limit,
            };
            write_report(json_path.as_deref(), &make_report("maxcut", Some(info), findings, started))?;
            Ok(0)
        }

        Command::Spectrum { input } => {
            let (g, info) = load_graph(&input)?;
            let dec = spectral::eigendecompose_graph(&g).map_err(|e| e.to_string())?;
            let ps = spectral::power_sums(&dec, &g).ok();
            let ids = ps.as_ref().map(|p| spectral::power_sum_identities(p, &g));
            let weyl = spectral::weyl_check(&g, spectral::WEYL_TOL).map_err(|e| e.to_string())?;
            let principal = spectral::principal_vector_check(&g, &dec);
            println!("graph: n={} m={} ({})", g.n(), g.m(), info.source);
            println!(
                "eigenvalues: lambda_1 = {:.6}, lambda_n = {:.6} (residual tol {:.3e})",
                dec.eigenvalues().first().copied().unwrap_or(0.0),
                dec.lambda_min(),
                dec.residual_tol
            );
            if let Some(p) = &ps {
                println!(
                    "power sums: P1={:.6} N1={:.6} N2={:.6} T={:.6} (identities ok)",
                    p.p1, p.n1, p.n2, p.t
                );
            }
            println!(
                "interlacing: ok={} max slack {:.3e}",
                weyl.ok, weyl.max_slack
            );
            println!(
                "principal entries: applicable={} violations={}",
                principal.applicable,
                principal.violations.len()
            );
            let findings = Findings::Spectrum {
                eigenvalues: dec.eigenvalues().to_vec(),
                residual_tol: dec.residual_tol,
                power_sums: ps,
                identities: ids,
                weyl,
                principal,
            };
            write_report(json_path.as_deref(), &make_report("spectrum", Some(info), findings, started))?;
            Ok(0)
        }

        Command::Certify {
            input,
            rank,
            iters,
            seed,
            exact_limit,
        } => {
            let (g, info) = load_graph(&input)?;
            let upper = surplus::surplus_upper_bound_lambda(&g).map_err(|e| e.to_string())?;
            let certs = surplus::certificates_neg_eigen(&g).map_err(|e| e.to_string())?;
            let a = surplab::SymMatrix::from_graph(&g);
            let summaries: Vec<CertSummary> = certs
                .iter()
                .map(|c| {
                    let detail = match &c.witness {
                        Witness::TestMatrix { matrix, .. } => {
                            Some(surplus::check_test_matrix(&a, matrix, c.bound))
                        }
                        _ => None,
                    };
                    CertSummary {
                        kind: c.kind,
                        target: c.target,
                        bound: c.bound,
                        feasibility_checked: c.feasibility_checked,
                        psd_min_eigenvalue: detail.map(|d| d.psd_min_eigenvalue),
                        max_diag: detail.map(|d| d.max_diag),
                        bound_gap: detail.map(|d| d.bound_gap),
                    }
                })
                .collect();
            let low = surplus::surp_star_lowrank(&g, rank, seed, iters);
            let oracle = if g.n() <= exact_limit {
                let mc = surplus::maxcut_exact_workers(&g, exact_limit, workers)
                    .map_err(|e| e.to_string())?;
                Some(OracleSummary {
                    maxcut: mc.value,
                    surplus: mc.surplus(&g),
                })
            } else {
                None
            };
            println!("graph: n={} m={} ({})", g.n(), g.m(), info.source);
            println!("surplus upper bound |lambda_n| n/4: {upper}");
            for c in &summaries {
                println!(
                    "certificate {:?} -> {:?} bound {} (feasible: {})",
                    c.kind, c.target, c.bound, c.feasibility_checked
                );
            }
            let rounding_ratio =
                (low.certificate.bound > 0.0).then(|| low.cut_surplus / low.certificate.bound);
            println!(
                "low-rank relaxation (rank {rank}): bound {}, rounded cut surplus {}{}",
                low.certificate.bound,
                low.cut_surplus,
                rounding_ratio
                    .map(|r| format!(" (ratio {r:.4})"))
                    .unwrap_or_default()
            );
            if let Some(o) = &oracle {
                println!("oracle: maxcut {} surplus {}", o.maxcut, o.surplus);
            }
            let findings = Findings::Certify {
                upper_bound_lambda: upper,
                certificates: summaries,
                lowrank: LowRankSummary {
                    rank,
                    iterations: low.iterations,
                    bound: low.certificate.bound,
                    feasibility_checked: low.certificate.feasibility_checked,
                    rounded_cut_surplus: low.cut_surplus,
                    rounding_trials: low.rounding_trials,
                    rounding_ratio,
                },
                oracle,
                tolerances: CertTolerances::default(),
            };
            write_report(json_path.as_deref(), &make_report("certify", Some(info), findings, started))?;
            Ok(0)
        }

        Command::Extract {
            input,
            mode,
            params,
        } => {
            let (g, info) = load_graph(&input)?;
            let p = params.build()?;
            let (mode_name, step, trace, balanced, master) = match mode {
                ExtractMode::Step => {
                    let s = density_increment_step(&g, &p).map_err(|e| e.to_string())?;
                    println!(
                        "step: kept {}/{} vertices, density {} -> {}",
                        s.selected.len(),
                        g.n(),
                        s.old_density,
                        s.new_density
                    );
                    ("step", Some(s), None, None, None)
                }
                ExtractMode::Iterate => {
                    let tr =
                        extraction::density_increment_iterate(&g, &p).map_err(|e| e.to_string())?;
                    println!(
                        "iterate: {} stage(s), final n = {}, final density {:.6} ({})",
                        tr.steps.len(),
                        tr.steps.last().map(|s| s.n).unwrap_or(0),
                        tr.steps.last().map(|s| s.density).unwrap_or(0.0),
                        tr.steps.last().map(|s| s.note.clone()).unwrap_or_default()
                    );
                    ("iterate", None, Some(tr), None, None)
                }
                ExtractMode::Balanced => {
                    let c = p.c_for(g.n());
                    let b = extract_balanced(&g, c).map_err(|e| e.to_string())?;
                    println!(
                        "balanced: kept {}/{} vertices at C = {:.3} (balance ok: {})",
                        b.kept.len(),
                        g.n(),
                        c,
                        b.postconditions.balance_ok
                    );
                    ("balanced", None, None, Some(b), None)
                }
                ExtractMode::Master => {
                    let m = master_chain(&g, &p).map_err(|e| e.to_string())?;
                    for s in &m.stages {
                        println!(
                            "stage {}: n={} density={:.6} met={} ({})",
                            s.name, s.n, s.density, s.met, s.note
                        );
                    }
                    println!(
                        "clique: size {} (exact: {}), reference target {:.3}",
                        m.clique.len(),
                        m.clique_exact,
                        m.target_size
                    );
                    ("master", None, None, None, Some(m))
                }
            };
            let findings = Findings::Extract {
                mode: mode_name.into(),
                params: p,
                step,
                trace,
                balanced,
                master,
            };
            write_report(json_path.as_deref(), &make_report("extract", Some(info), findings, started))?;
            Ok(0)
        }

        Command::Stability { input, params } => {
            let (g, info) = load_graph(&input)?;
            let p = params.build()?;
            let report = stability_certificate(&g, &p).map_err(|e| e.to_string())?;
            let certified = matches!(report.status, StabilityStatus::Certified);
            println!("graph: n={} m={} ({})", g.n(), g.m(), info.source);
            println!(
                "cliques pulled: {} covering {}/{} vertices",
                report.cliques.len(),
                report.covered,
                g.n()
            );
            match &report.status {
                StabilityStatus::Certified => println!(
                    "status: certified, edit distance {} (closeness {})",
                    report.edit_distance.unwrap_or(0),
                    report.closeness.unwrap_or(0.0)
                ),
                StabilityStatus::AmbiguousFailure { i, j } => {
                    println!("status: not certified — ambiguous block between cliques {i} and {j}")
                }
                StabilityStatus::CherryFailure { i, j, k } => println!(
                    "status: not certified — induced two-edge path ({i}, {j}, {k}) in the clique graph"
                ),
                StabilityStatus::ResidualTooLarge { covered, n } => println!(
                    "status: not certified — clique cover too small ({covered} of {n} vertices)"
                ),
            }
            println!(
                "eigenvalue gate: lambda_n = {:.6}, surplus upper bound {:.6}",
                report.gate.lambda_min, report.gate.surplus_upper_bound
            );
            let findings = Findings::Stability { params: p, report };
            write_report(json_path.as_deref(), &make_report("stability", Some(info), findings, started))?;
            Ok(if certified { 0 } else { 2 })
        }

        Command::Gen { family, out } => {
            let spec = family.to_spec()?;
            let g = generators::generate(&spec).map_err(|e| e.to_string())?;
            let text = g.to_text();
            match &out {
                Some(path) => {
                    std::fs::write(path, &text)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    println!("wrote n={} m={} to {}", g.n(), g.m(), path.display());
                }
                None => print!("{text}"),
            }
            let findings = Findings::Gen {
                spec,
                n: g.n(),
                m: g.m(),
                out: out.as_ref().map(|p| p.display().to_string()),
            };
            write_report(json_path.as_deref(), &make_report("gen", None, findings, started))?;
            Ok(0)
        }

        Command::Verify { suite, count, seed } => {
            let outcomes = suites::run(&suite, count, seed)?;
            let mut total_cases = 0;
            let mut total_passed = 0;
            for o in &outcomes {
                total_cases += o.cases;
                total_passed += o.passed;
                println!(
                    "suite {}: {}/{} pass — {}",
                    o.suite, o.passed, o.cases, o.note
                );
                for f in &o.failures {
                    println!("    FAIL {f}");
                }
            }
            let all_passed = total_passed == total_cases;
            println!(
                "verify: {total_passed}/{total_cases} checks passed ({})",
                if all_passed { "ok" } else { "FAILURES" }
            );
            let findings = Findings::Verify {
                seed,
                count,
                suites: outcomes,
                total_cases,
                total_passed,
                all_passed,
            };
            write_report(json_path.as_deref(), &make_report("verify", None, findings, started))?;
            Ok(if all_passed { 0 } else { 2 })
        }
    }
}
