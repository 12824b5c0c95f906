//! Batch audits over fixed families plus seeded random connected instances,
//! and an enumeration oracle that cross-validates the closed-form operator
//! against literal expanded-edge sums and dense-tensor contraction.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::{full_report, SpectralReport};
use crate::error::{Error, Result};
use crate::expansion::{
    edge_expansion, edge_sum_from, edge_sum_total, enumerate_edge_sum_from,
    enumerate_edge_sum_total,
};
use crate::families::{complete_uniform, generalized_power, star};
use crate::graph::Hypergraph;
use crate::operator::{apply, materialize_dense};
use crate::solver::SolverConfig;

/// A hypergraph with a stable display name for suite reports.
#[derive(Clone, Debug)]
pub struct NamedInstance {
    pub name: String,
    pub hypergraph: Hypergraph,
}

fn named(name: impl Into<String>, hypergraph: Hypergraph) -> NamedInstance {
    NamedInstance {
        name: name.into(),
        hypergraph,
    }
}

/// The deterministic instance catalog every audit runs on: stars, complete
/// uniform hypergraphs, generalized powers of stars and regular bases,
/// mixed-cardinality instances, sparse cycles and paths, a chorded cycle
/// that sits near (but off) several equality cases, and a pendant-augmented
/// dense instance whose spectral radius is large enough to exercise the
/// conditional bound comparison.
pub fn fixed_families() -> Vec<NamedInstance> {
    let mut out = Vec::new();
    for n in 3..=10 {
        out.push(named(format!("star_{n}"), star(n).expect("star sizes are valid")));
    }
    for n in 3..=6 {
        out.push(named(
            format!("complete_{n}_2"),
            complete_uniform(n, 2).expect("complete graph sizes are valid"),
        ));
    }
    for n in 4..=6 {
        out.push(named(
            format!("complete_{n}_3"),
            complete_uniform(n, 3).expect("complete 3-uniform sizes are valid"),
        ));
    }

    let star_bases = [(3usize, star(3).unwrap()), (4, star(4).unwrap())];
    for (n, base) in &star_bases {
        for r in 2..=6 {
            out.push(named(
                format!("power_star_{n}_s1_r{r}"),
                generalized_power(base, 1, r).expect("r >= k*s holds"),
            ));
        }
        for r in 4..=6 {
            out.push(named(
                format!("power_star_{n}_s2_r{r}"),
                generalized_power(base, 2, r).expect("r >= k*s holds"),
            ));
        }
    }

    let k4 = complete_uniform(4, 2).unwrap();
    for r in 2..=4 {
        out.push(named(
            format!("power_complete_4_2_s1_r{r}"),
            generalized_power(&k4, 1, r).expect("r >= k*s holds"),
        ));
    }
    for r in [4, 6] {
        out.push(named(
            format!("power_complete_4_2_s2_r{r}"),
            generalized_power(&k4, 2, r).expect("r >= k*s holds"),
        ));
    }
    let k4_3 = complete_uniform(4, 3).unwrap();
    for r in 3..=5 {
        out.push(named(
            format!("power_complete_4_3_s1_r{r}"),
            generalized_power(&k4_3, 1, r).expect("r >= k*s holds"),
        ));
    }
    out.push(named(
        "power_complete_4_3_s2_r6",
        generalized_power(&k4_3, 2, 6).expect("r >= k*s holds"),
    ));

    out.push(named(
        "mixed_pair",
        Hypergraph::new(3, vec![vec![0, 1], vec![0, 1, 2]]).unwrap(),
    ));
    out.push(named(
        "triangle_with_triple",
        Hypergraph::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]).unwrap(),
    ));
    out.push(named(
        "bowtie",
        Hypergraph::new(
            5,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![0, 4],
                vec![3, 4],
            ],
        )
        .unwrap(),
    ));
    out.push(named(
        "path_4",
        Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap(),
    ));
    out.push(named(
        "cycle_4",
        Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap(),
    ));
    out.push(named(
        "cycle_6_chord",
        Hypergraph::new(
            6,
            vec![
                vec![0, 1],
                vec![1, 2],
                vec![2, 3],
                vec![3, 4],
                vec![4, 5],
                vec![0, 5],
                vec![0, 3],
            ],
        )
        .unwrap(),
    ));
    let mut pendant_edges: Vec<Vec<usize>> = complete_uniform(5, 3).unwrap().edges().to_vec();
    pendant_edges.push(vec![0, 5, 6]);
    out.push(named(
        "complete_5_3_pendant",
        Hypergraph::new(7, pendant_edges).unwrap(),
    ));
    out.push(named(
        "path_3_order_3",
        Hypergraph::parse("%k=3\n0 1\n1 2\n").unwrap(),
    ));
    out
}

/// Draws one connected instance with n in 3..=10 and edge sizes in 2..=4,
/// deterministically from the given stream.
pub fn random_connected(rng: &mut ChaCha8Rng) -> Hypergraph {
    for _ in 0..1000 {
        let n = rng.gen_range(3..=10usize);
        let max_size = rng.gen_range(2..=4usize.min(n));
        let target = rng.gen_range(n - 1..=2 * n);
        let mut chosen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut attempts = 0;
        while chosen.len() < target && attempts < 60 * target {
            attempts += 1;
            let size = rng.gen_range(2..=max_size);
            let mut verts = BTreeSet::new();
            while verts.len() < size {
                verts.insert(rng.gen_range(0..n));
            }
            chosen.insert(verts.into_iter().collect());
        }
        let edges: Vec<Vec<usize>> = chosen.into_iter().collect();
        if edges.is_empty() {
            continue;
        }
        if let Ok(h) = Hypergraph::new(n, edges) {
            if h.is_connected() {
                return h;
            }
        }
    }
    unreachable!("connected instances on 3..=10 vertices are abundant")
}

/// Audit configuration: a seed and the number of random instances appended
/// after the fixed catalog.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    pub solver: SolverConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            count: 100,
            solver: SolverConfig::default(),
        }
    }
}

/// One audited instance, condensed.
#[derive(Clone, Debug)]
pub struct InstanceSummary {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub order: usize,
    pub uniform: bool,
    pub rho: f64,
    pub iterations: usize,
    pub checks: usize,
    pub violations: usize,
    pub worst_slack: f64,
    pub worst_check: String,
    pub failed: Vec<String>,
}

fn summarize(name: &str, report: &SpectralReport) -> InstanceSummary {
    let mut worst_slack = f64::INFINITY;
    let mut worst_check = String::new();
    for check in &report.checks {
        if check.slack < worst_slack {
            worst_slack = check.slack;
            worst_check = check.name.to_string();
        }
    }
    InstanceSummary {
        name: name.to_string(),
        n: report.n,
        m: report.m,
        order: report.order,
        uniform: report.uniform,
        rho: report.rho,
        iterations: report.iterations,
        checks: report.checks.len(),
        violations: report.violations(),
        worst_slack,
        worst_check,
        failed: report
            .checks
            .iter()
            .filter(|c| !c.satisfied)
            .map(|c| c.name.to_string())
            .collect(),
    }
}

/// The merged result of auditing the whole catalog.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub seed: u64,
    pub count: usize,
    pub instances: Vec<InstanceSummary>,
    pub total_checks: usize,
    pub total_violations: usize,
    pub worst_slack: f64,
    pub worst_instance: String,
    pub worst_check: String,
}

impl SuiteOutcome {
    pub fn all_satisfied(&self) -> bool {
        self.total_violations == 0
    }
}

/// Runs every check on the fixed catalog plus `count` random instances and
/// merges the summaries in instance order.
pub fn run_audit(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let mut instances = fixed_families();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..cfg.count {
        instances.push(named(format!("random_{i:03}"), random_connected(&mut rng)));
    }

    let mut summaries = Vec::with_capacity(instances.len());
    for instance in &instances {
        let report = full_report(&instance.hypergraph, &cfg.solver)?;
        summaries.push(summarize(&instance.name, &report));
    }

    let total_checks = summaries.iter().map(|s| s.checks).sum();
    let total_violations = summaries.iter().map(|s| s.violations).sum();
    let mut worst_slack = f64::INFINITY;
    let mut worst_instance = String::new();
    let mut worst_check = String::new();
    for s in &summaries {
        if s.worst_slack < worst_slack {
            worst_slack = s.worst_slack;
            worst_instance = s.name.clone();
            worst_check = s.worst_check.clone();
        }
    }
    Ok(SuiteOutcome {
        seed: cfg.seed,
        count: cfg.count,
        instances: summaries,
        total_checks,
        total_violations,
        worst_slack,
        worst_instance,
        worst_check,
    })
}

/// Runs the full report on every catalog instance, returning the reports in
/// instance order (used by equality sweeps that need per-check detail).
pub fn run_reports(cfg: &SuiteConfig) -> Result<Vec<(String, SpectralReport)>> {
    let mut instances = fixed_families();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..cfg.count {
        instances.push(named(format!("random_{i:03}"), random_connected(&mut rng)));
    }
    instances
        .into_iter()
        .map(|inst| Ok((inst.name, full_report(&inst.hypergraph, &cfg.solver)?)))
        .collect()
}

/// Oracle configuration: number of random positive vectors and the seed.
#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub trials: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { trials: 20, seed: 0 }
    }
}

/// Worst relative deviations between the closed-form operator and its
/// independent re-computations.
#[derive(Clone, Debug)]
pub struct OracleOutcome {
    pub trials: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub order: usize,
    /// Closed-form per-vertex edge sums vs literal expanded-edge enumeration.
    pub from_deviation: f64,
    /// Closed-form per-edge totals vs literal expanded-edge enumeration.
    pub total_deviation: f64,
    /// Per-edge total vs the sum of its per-vertex splits.
    pub split_deviation: f64,
    /// Implicit apply vs dense-tensor contraction; None when the dense
    /// tensor exceeds the materialization cap.
    pub dense_deviation: Option<f64>,
    pub max_deviation: f64,
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

/// Cross-validates every closed-form edge sum and the implicit apply against
/// enumeration and dense contraction on `trials` random positive vectors.
/// Fails if any edge is too large to enumerate.
pub fn cross_validate(h: &Hypergraph, cfg: &OracleConfig) -> Result<OracleOutcome> {
    if h.m() == 0 {
        return Err(Error::NoEdges);
    }
    let k = h.order();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let dense = match materialize_dense(h) {
        Ok(t) => Some(t),
        Err(Error::DenseCap { .. }) => None,
        Err(e) => return Err(e),
    };

    let mut from_dev: f64 = 0.0;
    let mut total_dev: f64 = 0.0;
    let mut split_dev: f64 = 0.0;
    let mut dense_dev: Option<f64> = dense.as_ref().map(|_| 0.0);

    for _ in 0..cfg.trials {
        let x: Vec<f64> = (0..h.n()).map(|_| rng.gen_range(0.1..1.0)).collect();
        for edge in h.edges() {
            let info = edge_expansion(edge.len(), k)?;
            let weight = info.weight_f64;
            let closed_total = edge_sum_total(edge, &x, k)?;
            let brute_total = enumerate_edge_sum_total(edge, &x, k)?;
            total_dev = total_dev.max(rel(weight * closed_total, weight * brute_total));

            let mut split = 0.0;
            for &v in edge {
                let closed = edge_sum_from(edge, v, &x, k)?;
                let brute = enumerate_edge_sum_from(edge, v, &x, k)?;
                from_dev = from_dev.max(rel(closed, brute));
                split += x[v] * closed;
            }
            split_dev = split_dev.max(rel(split, closed_total));
        }
        if let Some(tensor) = &dense {
            let implicit = apply(h, &x)?;
            let contracted = tensor.apply(&x)?;
            let scale = implicit
                .iter()
                .chain(contracted.iter())
                .fold(1e-300f64, |a, &b| a.max(b.abs()));
            let dev = implicit
                .iter()
                .zip(&contracted)
                .map(|(a, b)| (a - b).abs() / scale)
                .fold(0.0f64, f64::max);
            dense_dev = dense_dev.map(|d| d.max(dev));
        }
    }

    let max_deviation = from_dev
        .max(total_dev)
        .max(split_dev)
        .max(dense_dev.unwrap_or(0.0));
    Ok(OracleOutcome {
        trials: cfg.trials,
        seed: cfg.seed,
        n: h.n(),
        m: h.m(),
        order: k,
        from_deviation: from_dev,
        total_deviation: total_dev,
        split_deviation: split_dev,
        dense_deviation: dense_dev,
        max_deviation,
    })
}
