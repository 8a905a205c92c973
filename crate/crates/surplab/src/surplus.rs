//! MaxCut, the surplus, and machine-checkable lower-bound certificates.
//!
//! The surplus of a graph is mc(G) - m/2. Two objectives get certified
//! here. `surp` is the surplus itself; a certificate is a concrete cut.
//! `surp_star` is its semidefinite relaxation, max of -<A, X> over PSD X
//! with diagonal at most 1; a certificate is a feasible test matrix or a
//! low-rank factor. Every certificate carries its witness and can be
//! re-checked from scratch.

use crate::graph::{Cut, Graph, GraphError, VertexSet};
use crate::rng::DetRng;
use crate::spectral::{self, SpectralError, SymMatrix};
use serde::Serialize;
use thiserror::Error;

/// PSD slack allowed on certificate witnesses.
pub const CERT_PSD_TOL: f64 = 1e-8;
/// Diagonal slack allowed on certificate witnesses.
pub const CERT_DIAG_TOL: f64 = 1e-8;
/// Agreement required between a certificate bound and its recomputation.
pub const CERT_BOUND_TOL: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum SurplusError {
    #[error("exhaustive search limited to {limit} vertices, graph has {n}; use local search")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MaxCutMethod {
    Exact,
    LocalSearch,
}

#[derive(Debug, Clone, Serialize)]
pub struct MaxCutResult {
    pub value: f64,
    #[serde(skip)]
    pub cut: Cut,
    pub method: MaxCutMethod,
    pub exact: bool,
}

impl MaxCutResult {
    pub fn surplus(&self, g: &Graph) -> f64 {
        self.value - g.m() as f64 / 2.0
    }
}

/// Edwards bound m/2 + (sqrt(8m + 1) - 1)/8, attained by odd cliques.
pub fn edwards_bound(m: usize) -> f64 {
    m as f64 / 2.0 + ((8.0 * m as f64 + 1.0).sqrt() - 1.0) / 8.0
}

// ---------------------------------------------------------------------------
// exhaustive MaxCut

/// True when `a` is lexicographically smaller than `b` read as side
/// sequences (side of vertex 0 first).
fn side_seq_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    if d == 0 {
        return false;
    }
    a & (d & d.wrapping_neg()) == 0
}

/// Exhaustive MaxCut over all 2^(n-1) cuts (vertex 0 pinned to side 0),
/// Gray-code incremental. Ties break to the lexicographically smallest
/// side sequence, so the result is identical for any worker count.
pub fn maxcut_exact(g: &Graph, limit: usize) -> Result<MaxCutResult, SurplusError> {
    maxcut_exact_workers(g, limit, 1)
}

pub fn maxcut_exact_workers(
    g: &Graph,
    limit: usize,
    workers: usize,
) -> Result<MaxCutResult, SurplusError> {
    let n = g.n();
    if n > limit {
        return Err(SurplusError::TooLarge { n, limit });
    }
    if n > 63 {
        return Err(SurplusError::TooLarge { n, limit: 63 });
    }
    if n <= 1 {
        return Ok(MaxCutResult {
            value: 0.0,
            cut: Cut::all_zero(n),
            method: MaxCutMethod::Exact,
            exact: true,
        });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let degs: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let total: u64 = 1u64 << (n - 1);
    let workers = workers.max(1).min(total as usize);

    // Gray-code walk over counters in [from, to): moving from counter k-1
    // to k flips the side of vertex trailing_zeros(k) + 1.
    let scan = |from: u64, to: u64| -> (u64, u64) {
        let mut mask = gray(from) << 1;
        let mut cut = cut_of_mask(&rows, mask, n);
        let (mut best, mut best_mask) = (cut, mask);
        for k in (from + 1)..to {
            let v = (k.trailing_zeros() as usize) + 1;
            let inter = (rows[v] & mask).count_ones() as u64;
            if mask >> v & 1 == 0 {
                cut = cut + degs[v] - 2 * inter;
                mask |= 1 << v;
            } else {
                cut = cut + 2 * inter - degs[v];
                mask &= !(1 << v);
            }
            if cut > best || (cut == best && side_seq_less(mask, best_mask)) {
                best = cut;
                best_mask = mask;
            }
        }
        (best, best_mask)
    };

    let (best, best_mask) = if workers == 1 {
        scan(0, total)
    } else {
        let chunk = total.div_ceil(workers as u64);
        let ranges: Vec<(u64, u64)> = (0..workers as u64)
            .map(|w| (w * chunk, ((w + 1) * chunk).min(total)))
            .filter(|(from, to)| from < to)
            .collect();
        let scan = &scan;
        let mut results = vec![(0u64, 0u64); ranges.len()];
        std::thread::scope(|s| {
            let mut handles = Vec::new();
            for &(from, to) in &ranges {
                handles.push(s.spawn(move || scan(from, to)));
            }
            for (slot, h) in handles.into_iter().enumerate() {
                results[slot] = h.join().expect("maxcut worker panicked");
            }
        });
        results
            .into_iter()
            .reduce(|(bv, bm), (v, m)| {
                if v > bv || (v == bv && side_seq_less(m, bm)) {
                    (v, m)
                } else {
                    (bv, bm)
                }
            })
            .expect("at least one range")
    };

    Ok(MaxCutResult {
        value: best as f64,
        cut: Cut::from_mask(best_mask, n),
        method: MaxCutMethod::Exact,
        exact: true,
    })
}

fn gray(k: u64) -> u64 {
    k ^ (k >> 1)
}

fn cut_of_mask(rows: &[u64], mask: u64, n: usize) -> u64 {
    let mut cut = 0;
    for v in 0..n {
        if mask >> v & 1 == 0 {
            cut += (rows[v] & mask).count_ones() as u64;
        }
    }
    cut
}

// ---------------------------------------------------------------------------
// local search

/// Majority-placement greedy cut: processes vertices in order, placing
/// each on the side that cuts at least half of its back edges, so the cut
/// has size at least m/2.
pub fn greedy_cut(g: &Graph) -> Cut {
    let n = g.n();
    let mut side = vec![false; n];
    for v in 0..n {
        let mut to0 = 0i64;
        let mut to1 = 0i64;
        for u in g.neighbors(v) {
            if u < v {
                if side[u] {
                    to1 += 1;
                } else {
                    to0 += 1;
                }
            }
        }
        // joining side 1 cuts the edges to side 0 and vice versa
        side[v] = to0 >= to1;
    }
    Cut::new(side).normalized()
}

/// Seeded multi-restart 1-flip local search. Never exact, but the value
/// is always at least m/2 because the greedy cut is among the candidates.
pub fn maxcut_local_search(g: &Graph, seed: u64, restarts: usize, max_passes: usize) -> MaxCutResult {
    maxcut_local_search_workers(g, seed, restarts, max_passes, 1)
}

/// Restarts partitioned over worker threads; each restart draws from its
/// own stream, so the winner is the same for any worker count.
pub fn maxcut_local_search_workers(
    g: &Graph,
    seed: u64,
    restarts: usize,
    max_passes: usize,
    workers: usize,
) -> MaxCutResult {
    let n = g.n();

    let run_restart = |r: usize| -> (u64, Cut) {
        let mut rng = DetRng::with_stream(seed, r as u64);
        let mut side: Vec<bool> = (0..n).map(|_| rng.next_bool(0.5)).collect();
        local_polish(g, &mut side, max_passes);
        let cut = Cut::new(side).normalized();
        let val = g.evaluate_cut(&cut).expect("own cut").cut_size;
        (val, cut)
    };
    let better = |a: &(u64, Cut), b: &(u64, Cut)| -> bool {
        a.0 > b.0 || (a.0 == b.0 && cut_lex_less(&a.1, &b.1))
    };

    let greedy = greedy_cut(g);
    let mut best = (g.evaluate_cut(&greedy).expect("own cut").cut_size, greedy);

    let workers = workers.max(1).min(restarts.max(1));
    if workers == 1 {
        for r in 0..restarts {
            let cand = run_restart(r);
            if better(&cand, &best) {
                best = cand;
            }
        }
    } else {
        let run_restart = &run_restart;
        let mut results: Vec<Option<(u64, Cut)>> = vec![None; workers];
        std::thread::scope(|s| {
            let mut handles = Vec::new();
            for w in 0..workers {
                handles.push(s.spawn(move || {
                    let mut local: Option<(u64, Cut)> = None;
                    for r in (w..restarts).step_by(workers) {
                        let cand = run_restart(r);
                        if local.as_ref().is_none_or(|b| better(&cand, b)) {
                            local = Some(cand);
                        }
                    }
                    local
                }));
            }
            for (slot, h) in handles.into_iter().enumerate() {
                results[slot] = h.join().expect("local search worker panicked");
            }
        });
        for cand in results.into_iter().flatten() {
            if better(&cand, &best) {
                best = cand;
            }
        }
    }
    MaxCutResult {
        value: best.0 as f64,
        cut: best.1,
        method: MaxCutMethod::LocalSearch,
        exact: false,
    }
}

/// Repeated 1-flip improvement passes; flips only on strict gain, so it
/// terminates at a local optimum.
fn local_polish(g: &Graph, side: &mut [bool], max_passes: usize) {
    for _ in 0..max_passes {
        let mut improved = false;
        for v in 0..g.n() {
            let mut same = 0i64;
            let mut other = 0i64;
            for u in g.neighbors(v) {
                if side[u] == side[v] {
                    same += 1;
                } else {
                    other += 1;
                }
            }
            if same > other {
                side[v] = !side[v];
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
}

fn cut_lex_less(a: &Cut, b: &Cut) -> bool {
    a.side() < b.side()
}

// ---------------------------------------------------------------------------
// spectral upper bound

/// Upper bound |lambda_n| * n / 4 on the surplus from the smallest
/// adjacency eigenvalue.
pub fn surplus_upper_bound_lambda(g: &Graph) -> Result<f64, SurplusError> {
    if g.n() == 0 {
        return Ok(0.0);
    }
    let dec = spectral::eigendecompose_graph(g)?;
    Ok(dec.lambda_min().abs() * g.n() as f64 / 4.0)
}

// ---------------------------------------------------------------------------
// certificates

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertKind {
    NegEigenSum,
    NegEigenSquares,
    NegEigenCubes,
    LowRankFactor,
    ExplicitCut,
    BiasedCut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Surp,
    SurpStar,
}

#[derive(Debug, Clone)]
pub enum Witness {
    /// A PSD test matrix with diagonal at most 1.
    TestMatrix {
        matrix: SymMatrix,
        description: String,
    },
    /// A geometric-mean combination of two test-matrix certificates.
    Pair(Box<SurplusCertificate>, Box<SurplusCertificate>),
    /// Low-rank factor V (n rows of dimension `rank`), X = V V^T.
    Factor { rank: usize, rows: Vec<Vec<f64>> },
    Cut(Cut),
    BiasedCut {
        cut: Cut,
        x: VertexSet,
        y: VertexSet,
        bias: f64,
    },
}

/// A lower bound on `surp` or `surp_star` with the witness that proves it.
#[derive(Debug, Clone)]
pub struct SurplusCertificate {
    pub kind: CertKind,
    pub bound: f64,
    pub target: Target,
    pub witness: Witness,
    pub feasibility_checked: bool,
}

/// Result of re-checking a test-matrix witness from scratch.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FeasibilityReport {
    pub psd_min_eigenvalue: f64,
    pub max_diag: f64,
    /// |(-<A, X>) - bound|
    pub bound_gap: f64,
    pub ok: bool,
}

/// Verifies a test matrix: PSD within tolerance, diagonal at most 1 +
/// tolerance, and -<A, X> reproducing the bound.
pub fn check_test_matrix(a: &SymMatrix, x: &SymMatrix, bound: f64) -> FeasibilityReport {
    let verdict = spectral::psd_check(x, CERT_PSD_TOL);
    let max_diag = x.diag().iter().fold(f64::NEG_INFINITY, |m, &d| m.max(d));
    let inner = -x.inner(a).expect("orders match");
    let bound_gap = (inner - bound).abs();
    FeasibilityReport {
        psd_min_eigenvalue: verdict.min_eigenvalue,
        max_diag,
        bound_gap,
        ok: verdict.psd && max_diag <= 1.0 + CERT_DIAG_TOL && bound_gap <= CERT_BOUND_TOL,
    }
}

/// The three negative-eigenvalue certificates for `surp_star`:
///
/// * sum: X = sum of v_i v_i^T over negative eigenvalues, bound sum |l_i|;
/// * cubes: X = beta * sum l_i^2 v_i v_i^T with beta = 1/(100(D+1)) where D
///   is the complement's maximum degree, bound beta * sum |l_i|^3 — if the
///   measured diagonal exceeds 1 the matrix and bound are rescaled to stay
///   feasible;
/// * squares: the geometric mean of the two bounds above (valid because
///   both factors are certified lower bounds and by Cauchy-Schwarz their
///   product dominates (sum l_i^2)^2 * beta).
///
/// Every certificate is feasibility-checked before being returned.
pub fn certificates_neg_eigen(g: &Graph) -> Result<Vec<SurplusCertificate>, SurplusError> {
    if g.n() < 2 {
        return Ok(Vec::new());
    }
    let a = SymMatrix::from_graph(g);
    let dec = spectral::eigendecompose(&a, spectral::default_tol(&a))?;
    let neg = dec.negative_indices();

    let bound_sum: f64 = neg.iter().map(|&i| -dec.lambda(i)).sum();
    let x_sum = dec.outer_sum(|i, _| neg.binary_search(&i).ok().map(|_| 1.0));
    let rep_sum = check_test_matrix(&a, &x_sum, bound_sum);
    let cert_sum = SurplusCertificate {
        kind: CertKind::NegEigenSum,
        bound: bound_sum,
        target: Target::SurpStar,
        witness: Witness::TestMatrix {
            matrix: x_sum,
            description: "sum of outer products over negative eigenvalues".into(),
        },
        feasibility_checked: rep_sum.ok,
    };

    let delta_comp = (0..g.n())
        .map(|v| g.n() - 1 - g.degree(v))
        .max()
        .unwrap_or(0);
    let beta = 1.0 / (100.0 * (delta_comp as f64 + 1.0));
    let mut x_cubes = dec.outer_sum(|i, l| neg.binary_search(&i).ok().map(|_| beta * l * l));
    let mut bound_cubes: f64 = beta * neg.iter().map(|&i| (-dec.lambda(i)).powi(3)).sum::<f64>();
    let max_diag = x_cubes.diag().iter().fold(0.0f64, |m, &d| m.max(d));
    if max_diag > 1.0 {
        x_cubes.scale(1.0 / max_diag);
        bound_cubes /= max_diag;
    }
    let rep_cubes = check_test_matrix(&a, &x_cubes, bound_cubes);
    let cert_cubes = SurplusCertificate {
        kind: CertKind::NegEigenCubes,
        bound: bound_cubes,
        target: Target::SurpStar,
        witness: Witness::TestMatrix {
            matrix: x_cubes,
            description: "squared-eigenvalue-weighted outer products, scaled to unit diagonal"
                .into(),
        },
        feasibility_checked: rep_cubes.ok,
    };

    let bound_squares = (bound_sum * bound_cubes).sqrt();
    let cert_squares = SurplusCertificate {
        kind: CertKind::NegEigenSquares,
        bound: bound_squares,
        target: Target::SurpStar,
        feasibility_checked: cert_sum.feasibility_checked && cert_cubes.feasibility_checked,
        witness: Witness::Pair(Box::new(cert_sum.clone()), Box::new(cert_cubes.clone())),
    };

    Ok(vec![cert_sum, cert_squares, cert_cubes])
}

// ---------------------------------------------------------------------------
// low-rank relaxation

#[derive(Debug, Clone)]
pub struct LowRankOutcome {
    pub certificate: SurplusCertificate,
    pub cut: Cut,
    pub cut_surplus: f64,
    pub iterations: usize,
    pub rounding_trials: usize,
}

/// Projected gradient ascent on -<A, V V^T> over factors V with row norms
/// at most 1 (every iterate is feasible, so the final value is always a
/// valid `surp_star` lower bound), followed by random-hyperplane rounding
/// with 1-flip polishing to produce the best explicit cut found.
pub fn surp_star_lowrank(g: &Graph, rank: usize, seed: u64, iters: usize) -> LowRankOutcome {
    let n = g.n();
    let r = rank.max(1);
    let mut rng = DetRng::with_stream(seed, 0);
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..r).map(|_| 2.0 * rng.next_unit() - 1.0).collect())
        .collect();
    for row in &mut v {
        clip_row(row);
    }
    let step = 1.0 / (2.0 * (g.max_degree() as f64 + 1.0));

    let objective = |v: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for (a, b) in g.edges() {
            s += dot(&v[a], &v[b]);
        }
        -2.0 * s
    };

    for _ in 0..iters {
        // gradient of -<A, VV^T> w.r.t. row u is -2 * sum of neighbor rows
        let mut grad: Vec<Vec<f64>> = vec![vec![0.0; r]; n];
        for (a, b) in g.edges() {
            for k in 0..r {
                grad[a][k] += v[b][k];
                grad[b][k] += v[a][k];
            }
        }
        for u in 0..n {
            for k in 0..r {
                v[u][k] -= 2.0 * step * grad[u][k];
            }
            clip_row(&mut v[u]);
        }
    }
    let bound = objective(&v);

    // feasibility is the row-norm cap; the bound itself is recomputable
    // from the witness factor by any consumer
    let feasible = v.iter().all(|row| dot(row, row) <= 1.0 + CERT_DIAG_TOL);
    let certificate = SurplusCertificate {
        kind: CertKind::LowRankFactor,
        bound,
        target: Target::SurpStar,
        witness: Witness::Factor {
            rank: r,
            rows: v.clone(),
        },
        feasibility_checked: feasible,
    };

    // hyperplane rounding
    let mut best_cut = greedy_cut(g);
    let mut best = g
        .evaluate_cut(&best_cut)
        .expect("own cut")
        .surplus;
    let trials = iters.max(1);
    let mut round_rng = DetRng::with_stream(seed, 1);
    for _ in 0..trials {
        let dir: Vec<f64> = (0..r).map(|_| round_rng.next_gaussian()).collect();
        let mut side: Vec<bool> = v.iter().map(|row| dot(row, &dir) < 0.0).collect();
        local_polish(g, &mut side, 4);
        let cut = Cut::new(side).normalized();
        let s = g.evaluate_cut(&cut).expect("own cut").surplus;
        if s > best || (s == best && cut_lex_less(&cut, &best_cut)) {
            best = s;
            best_cut = cut;
        }
    }

    LowRankOutcome {
        certificate,
        cut: best_cut,
        cut_surplus: best,
        iterations: iters,
        rounding_trials: trials,
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn clip_row(row: &mut [f64]) {
    let norm = dot(row, row).sqrt();
    if norm > 1.0 {
        for x in row.iter_mut() {
            *x /= norm;
        }
    }
}

// ---------------------------------------------------------------------------
// biased partition cut

#[derive(Debug, Clone)]
pub struct BiasedCutOutcome {
    pub certificate: SurplusCertificate,
    /// Edge count inside the X side.
    pub a: u64,
    /// Edge count crossing between X and Y.
    pub b: u64,
    /// Edge count inside the Y side.
    pub c: u64,
    /// Analytic lower bound b^2/(4 n^2) - c for the surplus.
    pub lemma_bound: f64,
    /// Expected surplus b^2/(8a) - c/2 of the biased sampling branch.
    pub expected_surplus: Option<f64>,
    pub bias: Option<f64>,
}

/// Cut certificate from an unbalanced partition (X, Y). When the edge
/// count inside X is
/// at most half the crossing count, the plain cut (X, Y) already works;
/// otherwise X is split by biased sampling (each vertex kept on the X
/// side with probability 1/2 + b/(4a)) and the best of `samples` draws is
/// returned. The analytic bound b^2/(4 n^2) - c holds for the true
/// surplus either way.
pub fn biased_partition_cut(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    seed: u64,
    samples: usize,
) -> Result<BiasedCutOutcome, SurplusError> {
    let n = g.n();
    let mut seen = vec![false; n];
    for v in x.iter().chain(y.iter()) {
        if v >= n {
            return Err(GraphError::IndexOutOfRange { index: v, n }.into());
        }
        if seen[v] {
            return Err(GraphError::OverlappingSets(v).into());
        }
        seen[v] = true;
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(GraphError::NotAPartition(format!("vertex {v} not covered")).into());
    }

    let a = g.edges_within(x);
    let b = g.bipartite_edges(x, y)?;
    let c = g.edges_within(y);
    let lemma_bound = if n == 0 {
        0.0
    } else {
        (b as f64).powi(2) / (4.0 * (n as f64).powi(2)) - c as f64
    };

    if 2 * a <= b {
        let side: Vec<bool> = (0..n).map(|v| y.contains(v)).collect();
        let cut = Cut::new(side);
        let stats = g.evaluate_cut(&cut)?;
        let certificate = SurplusCertificate {
            kind: CertKind::ExplicitCut,
            bound: stats.surplus,
            target: Target::Surp,
            witness: Witness::Cut(cut),
            feasibility_checked: true,
        };
        return Ok(BiasedCutOutcome {
            certificate,
            a,
            b,
            c,
            lemma_bound,
            expected_surplus: None,
            bias: None,
        });
    }

    let p = b as f64 / (4.0 * a as f64);
    let expected = (b as f64).powi(2) / (8.0 * a as f64) - c as f64 / 2.0;
    let mut best: Option<(f64, Cut)> = None;
    for s in 0..samples.max(1) {
        let mut rng = DetRng::with_stream(seed, s as u64);
        let mut side = vec![true; n];
        for v in x.iter() {
            // stay on the X side of the cut with probability 1/2 + p
            side[v] = !rng.next_bool(0.5 + p);
        }
        let cut = Cut::new(side);
        let surplus = g.evaluate_cut(&cut)?.surplus;
        let better = match &best {
            None => true,
            Some((bs, bc)) => surplus > *bs || (surplus == *bs && cut_lex_less(&cut, bc)),
        };
        if better {
            best = Some((surplus, cut));
        }
    }
    let (surplus, cut) = best.expect("at least one sample");
    let certificate = SurplusCertificate {
        kind: CertKind::BiasedCut,
        bound: surplus,
        target: Target::Surp,
        witness: Witness::BiasedCut {
            cut,
            x: x.clone(),
            y: y.clone(),
            bias: p,
        },
        feasibility_checked: true,
    };
    Ok(BiasedCutOutcome {
        certificate,
        a,
        b,
        c,
        lemma_bound,
        expected_surplus: Some(expected),
        bias: Some(p),
    })
}

// ---------------------------------------------------------------------------
// two overlapping cliques

#[derive(Debug, Clone)]
pub struct TwoCliqueOutcome {
    pub graph: Graph,
    pub cut: Cut,
    pub cut_surplus: f64,
    /// min(a^2, b^2, c^2) / 4
    pub bound: f64,
}

/// Builds the union of two cliques (private sides a and b, intersection
/// c) together with an explicit cut certifying surplus at least
/// min(a^2, b^2, c^2)/4.
///
/// The cut is built on the graph truncated so both private sides have
/// size min(a, b): if c <= min(a, b), floor((min+c)/2) vertices of each
/// private side cross; otherwise floor((min+c)/2) vertices of the
/// intersection cross. The truncated vertices are then re-attached one at
/// a time on whichever side cuts more of their back edges, which can only
/// add surplus, so the certified bound survives at full size.
pub fn two_clique_cut(a: usize, b: usize, c: usize) -> TwoCliqueOutcome {
    let g = crate::generators::union_of_two_cliques(a, b, c);
    let n = a + b + c;
    let s = a.min(b);

    let side_a: Vec<usize> = (0..a).collect();
    let side_b: Vec<usize> = (a..a + b).collect();
    let inter: Vec<usize> = (a + b..n).collect();
    let kept_a = &side_a[..s];
    let kept_b = &side_b[..s];
    let extras: Vec<usize> = side_a[s..].iter().chain(&side_b[s..]).copied().collect();

    let u_size = (s + c) / 2;
    let mut side = vec![true; n];
    if c <= s {
        for &v in kept_a.iter().take(u_size).chain(kept_b.iter().take(u_size)) {
            side[v] = false;
        }
    } else {
        for &v in inter.iter().take(u_size) {
            side[v] = false;
        }
    }

    // re-attach truncated vertices by majority over already-placed ones
    let mut placed = vec![true; n];
    for &v in &extras {
        placed[v] = false;
    }
    for &v in &extras {
        let mut cut_if_side1 = 0i64; // edges to placed side-0 vertices
        let mut cut_if_side0 = 0i64;
        for u in g.neighbors(v) {
            if placed[u] {
                if side[u] {
                    cut_if_side0 += 1;
                } else {
                    cut_if_side1 += 1;
                }
            }
        }
        side[v] = cut_if_side1 >= cut_if_side0;
        placed[v] = true;
    }

    let cut = Cut::new(side);
    let cut_surplus = g.evaluate_cut(&cut).expect("own cut").surplus;
    let min = a.min(b).min(c) as f64;
    TwoCliqueOutcome {
        graph: g,
        cut,
        cut_surplus,
        bound: min * min / 4.0,
    }
}
