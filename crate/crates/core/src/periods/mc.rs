//! Monte Carlo evaluation of ∫_Δ Ψ_Γ^{−D/2} over the standard simplex,
//! and a deterministic adaptive-quadrature reference for three-edge graphs.
//!
//! The simplex carries the normalized measure of total volume 1, realized
//! by Dirichlet(1,…,1) sampling (normalized exponentials). Batches use
//! independent, deterministically derived generator streams and are reduced
//! in a fixed order, so an estimate depends only on (samples, seed).

use super::PeriodsError;
use crate::budget;
use crate::exactalg::MultiPoly;
use crate::graphzeta::{kirchhoff, Graph};
use num::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The measure convention attached to every estimate.
pub const CONVENTION_NOTE: &str = "simplex measure normalized to volume 1 \
(Dirichlet(1,...,1) sampling); multiply by 1/(|E|-1)! for the Lebesgue \
delta-slice convention";

const BATCHES: u64 = 8;

/// A Monte Carlo estimate with its error model and provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
    pub warning: Option<String>,
}

impl McEstimate {
    pub fn to_json_string(&self) -> String {
        serde_json::json!({
            "estimate": self.mean,
            "std_error": self.std_error,
            "samples": self.samples,
            "seed": self.seed,
            "warning": self.warning,
            "convention": CONVENTION_NOTE,
        })
        .to_string()
    }
}

type CompiledPoly = Vec<(f64, Vec<(usize, u32)>)>;

fn compile(psi: &MultiPoly) -> CompiledPoly {
    psi.terms()
        .map(|(m, c)| {
            let vars: Vec<(usize, u32)> = m
                .0
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(i, &e)| (i, e))
                .collect();
            (c.to_f64().expect("coefficient fits f64"), vars)
        })
        .collect()
}

fn eval_compiled(terms: &CompiledPoly, x: &[f64]) -> f64 {
    terms
        .iter()
        .map(|(c, vars)| {
            c * vars
                .iter()
                .map(|&(i, e)| x[i].powi(e as i32))
                .product::<f64>()
        })
        .sum()
}

struct BatchStats {
    sum: f64,
    sum_sq: f64,
    good: u64,
    bad: u64,
}

fn run_batch(
    terms: &CompiledPoly,
    nvars: usize,
    exponent: f64,
    count: u64,
    seed: u64,
    stream: u64,
) -> BatchStats {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut x = vec![0.0f64; nvars];
    let mut stats = BatchStats {
        sum: 0.0,
        sum_sq: 0.0,
        good: 0,
        bad: 0,
    };
    for _ in 0..count {
        let mut total = 0.0;
        for xi in x.iter_mut() {
            let u: f64 = rng.gen();
            *xi = -(1.0 - u).ln();
            total += *xi;
        }
        if total <= 0.0 {
            stats.bad += 1;
            continue;
        }
        for xi in x.iter_mut() {
            *xi /= total;
        }
        let value = eval_compiled(terms, &x).powf(exponent);
        if value.is_finite() {
            stats.sum += value;
            stats.sum_sq += value * value;
            stats.good += 1;
        } else {
            stats.bad += 1;
        }
    }
    stats
}

/// Estimates ∫_Δ Ψ_Γ^{−D/2} for the graph's Kirchhoff polynomial under the
/// volume-1 simplex measure. Deterministic for fixed (samples, seed); a
/// warning is attached when the superficial convergence bound
/// |E| − b₁·D/2 > 0 fails.
pub fn feynman_j(g: &Graph, d: f64, samples: u64, seed: u64) -> Result<McEstimate, PeriodsError> {
    if !d.is_finite() {
        return Err(PeriodsError::Unsupported(format!(
            "dimension must be finite, got {d}"
        )));
    }
    if samples < 2 {
        return Err(PeriodsError::Unsupported(
            "need at least 2 samples for an error estimate".into(),
        ));
    }
    budget::check(samples as u128 * g.edge_count() as u128)?;
    let psi = kirchhoff(g)?;
    let terms = compile(&psi);
    let nvars = psi.nvars();
    let exponent = -d / 2.0;
    let superficial = g.edge_count() as f64 - g.b1() as f64 * d / 2.0;
    let warning = if superficial <= 0.0 {
        Some(format!(
            "superficial convergence bound violated: |E| - b1*D/2 = {superficial}; \
the integral may diverge"
        ))
    } else {
        None
    };

    let batches = BATCHES.min(samples);
    let base = samples / batches;
    let extra = samples % batches;
    let results: Vec<BatchStats> = std::thread::scope(|scope| {
        let terms = &terms;
        let handles: Vec<_> = (0..batches)
            .map(|b| {
                let count = base + u64::from(b < extra);
                scope.spawn(move || run_batch(terms, nvars, exponent, count, seed, b))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("batch panicked"))
            .collect()
    });

    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut good = 0u64;
    let mut bad = 0u64;
    for s in results {
        sum += s.sum;
        sum_sq += s.sum_sq;
        good += s.good;
        bad += s.bad;
    }
    if bad * 1000 > samples {
        return Err(PeriodsError::BadSamples {
            bad,
            total: samples,
        });
    }
    let n = good as f64;
    let mean = sum / n;
    let variance = ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0);
    Ok(McEstimate {
        mean,
        std_error: (variance / n).sqrt(),
        samples,
        seed,
        warning,
    })
}

/// Central finite difference (J(D+h) − J(D−h)) / 2h with common random
/// numbers; a convenience for probing the D-dependence, not a period
/// extraction.
pub fn feynman_j_slope(
    g: &Graph,
    d: f64,
    h: f64,
    samples: u64,
    seed: u64,
) -> Result<f64, PeriodsError> {
    if !(h > 0.0) {
        return Err(PeriodsError::Unsupported(
            "finite-difference step must be positive".into(),
        ));
    }
    let up = feynman_j(g, d + h, samples, seed)?;
    let down = feynman_j(g, d - h, samples, seed)?;
    Ok((up.mean - down.mean) / (2.0 * h))
}

/// Deterministic adaptive quadrature of ∫_Δ Ψ_Γ^{−D/2} for graphs with
/// exactly three edges, in the chart x₃ = 1 − x₁ − x₂ over the triangle;
/// the independent reference for the Monte Carlo path.
pub fn feynman_j_quadrature(g: &Graph, d: f64, tol: f64) -> Result<f64, PeriodsError> {
    if g.edge_count() != 3 {
        return Err(PeriodsError::Unsupported(format!(
            "quadrature reference needs exactly 3 edges, got {}",
            g.edge_count()
        )));
    }
    if !(tol > 0.0) {
        return Err(PeriodsError::Unsupported(
            "quadrature tolerance must be positive".into(),
        ));
    }
    let terms = compile(&kirchhoff(g)?);
    let exponent = -d / 2.0;
    let f = |x1: f64, x2: f64| eval_compiled(&terms, &[x1, x2, 1.0 - x1 - x2]).powf(exponent);
    let value = adapt_triangles(&f, tol / 2.0)?;
    // normalized measure: the chart triangle has Lebesgue area 1/2
    Ok(2.0 * value)
}

type Point = (f64, f64);

struct Cell {
    error: f64,
    order: u64,
    fine: f64,
    depth: u32,
    corners: [Point; 3],
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error && self.order == other.order
    }
}

impl Eq for Cell {}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // max-heap on the error estimate; insertion order breaks ties so
        // the refinement sequence is deterministic
        self.error
            .total_cmp(&other.error)
            .then(other.order.cmp(&self.order))
    }
}

fn mid(a: Point, b: Point) -> Point {
    ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0)
}

// 6-point Dunavant rule (weight, major, minor barycentric coordinates),
// exact for polynomials of degree 4; each row contributes its 3 cyclic
// placements of the major coordinate
const FINE_RULE: [(f64, f64, f64); 2] = [
    (0.223_381_589_678_011, 0.108_103_018_168_070, 0.445_948_490_915_965),
    (0.109_951_743_655_322, 0.816_847_572_980_459, 0.091_576_213_509_771),
];

fn make_cell(f: &impl Fn(f64, f64) -> f64, corners: [Point; 3], order: u64, depth: u32) -> Cell {
    let [a, b, c] = corners;
    let area = ((b.0 - a.0) * (c.1 - a.1) - (c.0 - a.0) * (b.1 - a.1)).abs() / 2.0;
    let (mab, mbc, mca) = (mid(a, b), mid(b, c), mid(c, a));
    // edge-midpoint rule, exact through degree 2
    let coarse = area * (f(mab.0, mab.1) + f(mbc.0, mbc.1) + f(mca.0, mca.1)) / 3.0;
    let mut fine = 0.0;
    for &(w, major, minor) in &FINE_RULE {
        for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
            let x = major * p.0 + minor * (q.0 + r.0);
            let y = major * p.1 + minor * (q.1 + r.1);
            fine += w * f(x, y);
        }
    }
    fine *= area;
    Cell {
        error: (fine - coarse).abs(),
        order,
        fine,
        depth,
        corners,
    }
}

// Deeper cells put evaluation points within ~2^-44 of a corner, where the
// barycentric coordinate 1-x1-x2 loses all significant digits and the
// integrand estimate is pure rounding noise.
const MAX_CELL_DEPTH: u32 = 44;

/// Globally adaptive quadrature over the chart triangle: the cell where the
/// midpoint rule and the degree-4 rule disagree most is split into four
/// congruent children until the summed disagreement is below `tol`. Work
/// concentrates at the integrable corner singularities, whose cell estimates
/// shrink geometrically with depth.
fn adapt_triangles(f: &impl Fn(f64, f64) -> f64, tol: f64) -> Result<f64, PeriodsError> {
    let mut heap = std::collections::BinaryHeap::new();
    let mut order = 0u64;
    heap.push(make_cell(f, [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)], order, 0));
    let mut heap_error: f64 = heap.peek().expect("nonempty").error;
    // cells at the depth cap stop refining; their value and residual error
    // estimate are carried so the tolerance accounting stays honest
    let mut frozen_sum = 0.0f64;
    let mut frozen_error = 0.0f64;
    let mut splits = 0u64;
    while heap_error + frozen_error > tol {
        if !(heap_error + frozen_error).is_finite() {
            return Err(PeriodsError::Unsupported(
                "quadrature hit a non-finite integrand value".into(),
            ));
        }
        if frozen_error > tol {
            return Err(PeriodsError::Unsupported(format!(
                "quadrature cannot reach tolerance {tol:e}: residual error {frozen_error:e} \
                 at the depth cap"
            )));
        }
        if heap.len() > 400_000 {
            return Err(PeriodsError::Unsupported(format!(
                "quadrature did not reach tolerance {tol:e} within the cell limit \
                 (reached {:e}, frozen {frozen_error:e})",
                heap_error + frozen_error
            )));
        }
        let worst = heap.pop().expect("heap is nonempty");
        heap_error -= worst.error;
        if !worst.fine.is_finite() || !worst.error.is_finite() {
            return Err(PeriodsError::Unsupported(
                "quadrature hit a non-finite integrand value".into(),
            ));
        }
        if worst.depth >= MAX_CELL_DEPTH {
            frozen_sum += worst.fine;
            frozen_error += worst.error;
            continue;
        }
        let [a, b, c] = worst.corners;
        let (mab, mbc, mca) = (mid(a, b), mid(b, c), mid(c, a));
        for corners in [
            [a, mab, mca],
            [mab, b, mbc],
            [mca, mbc, c],
            [mab, mbc, mca],
        ] {
            order += 1;
            let cell = make_cell(f, corners, order, worst.depth + 1);
            heap_error += cell.error;
            heap.push(cell);
        }
        splits += 1;
        if splits % 4096 == 0 {
            // resynchronize the incrementally tracked error against drift
            heap_error = heap.iter().map(|c| c.error).sum();
        }
    }
    Ok(frozen_sum + heap.iter().map(|c| c.fine).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn banana(edges: usize) -> Graph {
        Graph::new(2, vec![(0, 1); edges]).unwrap()
    }

    fn triangle() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn two_banana_is_exactly_one_with_zero_error() {
        let est = feynman_j(&banana(2), 2.0, 20_000, 7).unwrap();
        assert_eq!(est.mean, 1.0);
        assert!(est.std_error < 1e-12, "se = {}", est.std_error);
        assert!(est.warning.is_none());
        // at d = 4 the superficial degree is exactly zero: the value is still
        // the exact constant but the estimate carries the convergence warning
        let boundary = feynman_j(&banana(2), 4.0, 1_000, 7).unwrap();
        assert_eq!(boundary.mean, 1.0);
        assert!(boundary.warning.is_some());
    }

    #[test]
    fn triangle_graph_is_exactly_one_under_the_volume_convention() {
        let est = feynman_j(&triangle(), 4.0, 20_000, 11).unwrap();
        assert_eq!(est.mean, 1.0);
        assert!(est.std_error < 1e-12);
    }

    #[test]
    fn identical_seeds_reproduce_bit_identical_estimates() {
        let a = feynman_j(&banana(3), 3.0, 50_000, 42).unwrap();
        let b = feynman_j(&banana(3), 3.0, 50_000, 42).unwrap();
        assert_eq!(a, b);
        let c = feynman_j(&banana(3), 3.0, 50_000, 43).unwrap();
        assert_ne!(a.mean, c.mean);
    }

    #[test]
    fn three_banana_warns_at_the_superficial_boundary() {
        let est = feynman_j(&banana(3), 3.0, 1_000, 1).unwrap();
        assert!(est.warning.is_some());
        let est = feynman_j(&banana(3), 2.0, 1_000, 1).unwrap();
        assert!(est.warning.is_none());
    }

    #[test]
    fn monte_carlo_agrees_with_quadrature_on_the_three_banana() {
        let reference = feynman_j_quadrature(&banana(3), 3.0, 1e-5).unwrap();
        // closed form: the chart integral reduces to 16*int_0^{pi/2}
        // d(theta)/(4 - 3 sin^2 theta) = 4*pi
        let exact = 4.0 * std::f64::consts::PI;
        assert!(
            (reference - exact).abs() < 1e-3,
            "quadrature {reference} vs closed form {exact}"
        );
        let est = feynman_j(&banana(3), 3.0, 100_000, 42).unwrap();
        assert!(
            (est.mean - reference).abs() < 3.0 * est.std_error,
            "MC {} +- {} vs quadrature {reference}",
            est.mean,
            est.std_error
        );
    }

    #[test]
    fn quadrature_reproduces_the_constant_integrand() {
        let v = feynman_j_quadrature(&triangle(), 4.0, 1e-9).unwrap();
        assert!((v - 1.0).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn doubling_samples_shrinks_the_error_like_root_two() {
        // d = 1.5 keeps the integrand square-integrable, so the reported
        // standard error follows the 1/sqrt(n) model it claims to follow
        let small = feynman_j(&banana(3), 1.5, 40_000, 5).unwrap();
        let big = feynman_j(&banana(3), 1.5, 80_000, 5).unwrap();
        let ratio = big.std_error / small.std_error;
        let root_half = std::f64::consts::FRAC_1_SQRT_2;
        assert!(
            ratio > root_half * 0.8 && ratio < root_half * 1.2,
            "ratio {ratio}"
        );
    }

    #[test]
    fn slope_of_a_constant_integrand_is_zero() {
        let s = feynman_j_slope(&banana(2), 3.0, 0.25, 5_000, 9).unwrap();
        assert_eq!(s, 0.0);
    }

    #[test]
    fn guards_reject_bad_inputs() {
        assert!(feynman_j(&banana(2), f64::NAN, 100, 0).is_err());
        assert!(feynman_j(&banana(2), 2.0, 1, 0).is_err());
        assert!(feynman_j_quadrature(&banana(2), 2.0, 1e-6).is_err());
        assert!(feynman_j_slope(&banana(2), 2.0, 0.0, 100, 0).is_err());
    }

    #[test]
    fn estimates_serialize_with_the_convention_note() {
        let est = feynman_j(&banana(2), 2.0, 100, 3).unwrap();
        let json = est.to_json_string();
        assert!(json.contains("\"estimate\":1.0"));
        assert!(json.contains("volume 1"));
    }
}
