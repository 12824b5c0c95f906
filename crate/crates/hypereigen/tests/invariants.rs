//! Property tests: algebraic identities of the tensor operator, format
//! round trips, connectivity against a reachability oracle, and solver
//! self-consistency from independent starting points and operator routes.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypereigen::graph::Hypergraph;
use hypereigen::operator::{apply, materialize_dense, quadratic_form};
use hypereigen::solver::{solve_principal, SolverConfig};
use hypereigen::suite::random_connected;

fn connected_instance(seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_connected(&mut rng)
}

/// Any valid instance, connected or not, possibly with isolated vertices.
fn arbitrary_instance(seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let n = rng.gen_range(2..=8usize);
        let m = rng.gen_range(1..=6usize);
        let mut edges = Vec::new();
        for _ in 0..m {
            let size = rng.gen_range(2..=3usize.min(n));
            let mut verts = std::collections::BTreeSet::new();
            while verts.len() < size {
                verts.insert(rng.gen_range(0..n));
            }
            edges.push(verts.into_iter().collect::<Vec<_>>());
        }
        edges.sort();
        edges.dedup();
        if let Ok(h) = Hypergraph::new(n, edges) {
            return h;
        }
    }
}

fn positive_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(0.05..1.0)).collect()
}

fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The operator is homogeneous of degree k-1: apply(c*x) = c^(k-1) * apply(x).
    #[test]
    fn apply_is_homogeneous(seed in any::<u64>(), scale in 0.2f64..3.0) {
        let h = connected_instance(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
        let x = positive_vector(&mut rng, h.n());
        let scaled: Vec<f64> = x.iter().map(|v| v * scale).collect();
        let y = apply(&h, &x).unwrap();
        let y_scaled = apply(&h, &scaled).unwrap();
        let factor = scale.powi(h.order() as i32 - 1);
        for i in 0..h.n() {
            prop_assert!(
                rel_diff(y_scaled[i], factor * y[i]) <= 1e-11,
                "entry {i}: {} vs {}", y_scaled[i], factor * y[i]
            );
        }
    }

    /// The quadratic form equals the inner product with the applied vector.
    #[test]
    fn quadratic_form_matches_inner_product(seed in any::<u64>()) {
        let h = connected_instance(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6a09e667f3bcc909);
        let x = positive_vector(&mut rng, h.n());
        let q = quadratic_form(&h, &x).unwrap();
        let y = apply(&h, &x).unwrap();
        let inner: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        prop_assert!(
            rel_diff(q, inner) <= 1e-10,
            "quadratic form {q} vs inner product {inner}"
        );
    }

    /// Serializing and reparsing reproduces the instance exactly, including
    /// isolated vertices and the tensor order.
    #[test]
    fn text_round_trip_is_identity(seed in any::<u64>()) {
        let h = arbitrary_instance(seed);
        let text = h.to_text();
        let back = Hypergraph::parse(&text).unwrap();
        prop_assert_eq!(back.n(), h.n());
        prop_assert_eq!(back.order(), h.order());
        prop_assert_eq!(back.edges(), h.edges());
        prop_assert_eq!(back.to_text(), text);
    }

    /// Component counting agrees with a boolean transitive-closure oracle.
    #[test]
    fn connectivity_matches_reachability_closure(seed in any::<u64>()) {
        let h = arbitrary_instance(seed);
        let n = h.n();
        let mut reach = vec![vec![false; n]; n];
        for (v, row) in reach.iter_mut().enumerate() {
            row[v] = true;
        }
        for edge in h.edges() {
            for &a in edge {
                for &b in edge {
                    reach[a][b] = true;
                }
            }
        }
        for mid in 0..n {
            for a in 0..n {
                if reach[a][mid] {
                    for b in 0..n {
                        if reach[mid][b] {
                            reach[a][b] = true;
                        }
                    }
                }
            }
        }
        let mut components = 0usize;
        let mut assigned = vec![false; n];
        for v in 0..n {
            if !assigned[v] {
                components += 1;
                for w in 0..n {
                    if reach[v][w] {
                        assigned[w] = true;
                    }
                }
            }
        }
        let connectivity = h.connectivity();
        prop_assert_eq!(connectivity.count, components);
        prop_assert_eq!(h.is_connected(), components <= 1);
        // Component labels must be constant on every edge.
        for edge in h.edges() {
            for &v in edge {
                prop_assert_eq!(
                    connectivity.component[v],
                    connectivity.component[edge[0]]
                );
            }
        }
    }

    /// Two solves from independent starting vectors land on the same
    /// eigenpair: the positive eigenvector of a connected instance is unique.
    #[test]
    fn solver_start_independence(seed in any::<u64>()) {
        let h = connected_instance(seed);
        let tight = SolverConfig { tolerance: 1e-11, ..SolverConfig::default() };
        let from_uniform = solve_principal(&h, &tight).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xbb67ae8584caa73b);
        let start = positive_vector(&mut rng, h.n());
        let from_random = solve_principal(
            &h,
            &SolverConfig { start: Some(start), ..tight.clone() },
        )
        .unwrap();
        prop_assert!(
            (from_uniform.rho - from_random.rho).abs() <= 1e-8,
            "rho {} vs {}", from_uniform.rho, from_random.rho
        );
        for i in 0..h.n() {
            prop_assert!(
                (from_uniform.vector.get(i) - from_random.vector.get(i)).abs() <= 1e-8,
                "entry {i}: {} vs {}",
                from_uniform.vector.get(i),
                from_random.vector.get(i)
            );
        }
    }

    /// The converged bracket contains rho, and the Collatz ratios of the
    /// returned vector reproduce it.
    #[test]
    fn bracket_soundness(seed in any::<u64>()) {
        let h = connected_instance(seed);
        let pair = solve_principal(&h, &SolverConfig::default()).unwrap();
        let (lo, hi) = pair.bracket;
        prop_assert!(lo <= pair.rho && pair.rho <= hi);
        prop_assert!(hi - lo <= 1e-10 * pair.rho.max(1.0) + 1e-12);
        let x = pair.vector.as_slice();
        let y = apply(&h, x).unwrap();
        let k = h.order() as i32;
        let mut ratio_lo = f64::INFINITY;
        let mut ratio_hi = f64::NEG_INFINITY;
        for i in 0..h.n() {
            let ratio = y[i] / x[i].powi(k - 1);
            ratio_lo = ratio_lo.min(ratio);
            ratio_hi = ratio_hi.max(ratio);
        }
        // Ratios recomputed from the final vector match the recorded
        // bracket up to roundoff.
        prop_assert!(ratio_lo >= lo - 1e-9 && ratio_hi <= hi + 1e-9);
        // The degree extremes always sandwich the spectral radius.
        let degrees = h.degrees();
        prop_assert!(pair.rho >= degrees.min as f64 - 1e-9);
        prop_assert!(pair.rho <= degrees.max as f64 + 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The implicit solver agrees with a power iteration driven by the
    /// explicitly materialized dense tensor.
    #[test]
    fn solver_matches_dense_power_iteration(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = loop {
            let candidate = random_connected(&mut rng);
            if candidate.n() <= 5 && candidate.order() <= 3 {
                break candidate;
            }
        };
        let pair = solve_principal(
            &h,
            &SolverConfig { tolerance: 1e-12, ..SolverConfig::default() },
        )
        .unwrap();

        let tensor = materialize_dense(&h).unwrap();
        let n = h.n();
        let k = h.order();
        let shift = h.degrees().max as f64;
        let mut x = vec![(n as f64).powf(-1.0 / k as f64); n];
        let mut rho_dense = f64::NAN;
        for _ in 0..200_000 {
            let y = tensor.apply(&x).unwrap();
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for i in 0..n {
                let ratio = y[i] / x[i].powi(k as i32 - 1);
                lo = lo.min(ratio);
                hi = hi.max(ratio);
            }
            if hi - lo <= 1e-12 {
                rho_dense = x.iter().zip(&y).map(|(a, b)| a * b).sum();
                break;
            }
            let mut z: Vec<f64> = (0..n)
                .map(|i| (y[i] + shift * x[i].powi(k as i32 - 1)).powf(1.0 / (k as f64 - 1.0)))
                .collect();
            let norm = z
                .iter()
                .map(|v| v.powi(k as i32))
                .sum::<f64>()
                .powf(1.0 / k as f64);
            for v in &mut z {
                *v /= norm;
            }
            x = z;
        }
        prop_assert!(rho_dense.is_finite(), "dense iteration did not converge");
        prop_assert!(
            (pair.rho - rho_dense).abs() <= 1e-8,
            "rho {} vs dense {}", pair.rho, rho_dense
        );
        for i in 0..n {
            prop_assert!(
                (pair.vector.get(i) - x[i]).abs() <= 1e-8,
                "entry {i}: {} vs dense {}", pair.vector.get(i), x[i]
            );
        }
    }
}
