//! Numerical substrate: dense complex eigensolver, periodic quadrature and
//! ordered matrix products.
//!
//! Everything here is pure and shared-state free; callers may invoke any
//! routine concurrently.

use ndarray::Array2;
use ndarray_linalg::error::LinalgError;
use ndarray_linalg::Eig;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Eigenvalues (and right eigenvectors, column-wise) of a general complex
/// matrix. Every returned pair satisfies `‖M v − λ v‖₂ ≤ tol·‖M‖_F` for the
/// tolerance passed to [`eig_general`].
#[derive(Debug, Clone)]
pub struct EigenResult {
    pub eigenvalues: Vec<Complex64>,
    pub eigenvectors: Option<Array2<Complex64>>,
}

/// Frobenius norm.
pub fn frobenius_norm(m: &Array2<Complex64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Dense non-symmetric eigendecomposition (balanced Hessenberg + shifted QR
/// via LAPACK `zgeev`). Eigenvalue ordering is unspecified; callers sort.
///
/// `tol` bounds the accepted relative residual `‖M v − λ v‖₂ / ‖M‖_F` of
/// every returned eigenpair; a pair that exceeds it is reported as an error
/// rather than silently returned.
pub fn eig_general(m: &Array2<Complex64>, tol: f64) -> Result<EigenResult> {
    let (rows, cols) = m.dim();
    if rows != cols {
        return Err(Error::NonSquare { rows, cols });
    }
    if rows == 0 {
        return Err(Error::invalid("matrix", "empty matrix has no spectrum"));
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite("eigensolver input"));
    }

    let (values, vectors) = m.eig().map_err(|e| match e {
        LinalgError::Lapack(lax::error::Error::LapackComputationalFailure { return_code }) => {
            Error::NoConvergence { code: return_code }
        }
        other => Error::invalid("eigensolver", other.to_string()),
    })?;

    let norm = frobenius_norm(m);
    let bound = tol * norm;
    for (idx, lambda) in values.iter().enumerate() {
        let v = vectors.column(idx);
        let mv = m.dot(&v);
        let residual = mv
            .iter()
            .zip(v.iter())
            .map(|(a, b)| (a - lambda * b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if residual > bound {
            return Err(Error::ResidualExceeded {
                index: idx,
                residual,
                bound,
            });
        }
    }

    Ok(EigenResult {
        eigenvalues: values.to_vec(),
        eigenvectors: Some(vectors),
    })
}

// 5-point Gauss-Legendre nodes/weights on [-1, 1]; closed forms, so no
// tabulated constants to mistype.
fn gl5() -> [(f64, f64); 5] {
    let a = (10.0f64 / 7.0).sqrt();
    let inner = (5.0 - 2.0 * a).sqrt() / 3.0;
    let outer = (5.0 + 2.0 * a).sqrt() / 3.0;
    let w0 = 128.0 / 225.0;
    let wi = (322.0 + 13.0 * 70.0f64.sqrt()) / 900.0;
    let wo = (322.0 - 13.0 * 70.0f64.sqrt()) / 900.0;
    [
        (0.0, w0),
        (-inner, wi),
        (inner, wi),
        (-outer, wo),
        (outer, wo),
    ]
}

fn gl5_panel(f: &impl Fn(f64) -> f64, a: f64, b: f64, nodes: &[(f64, f64); 5]) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (x, w) in nodes {
        acc += w * f(mid + half * x);
    }
    acc * half
}

const MAX_QUAD_DEPTH: usize = 48;

fn adaptive(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: usize,
    nodes: &[(f64, f64); 5],
) -> Result<f64> {
    let mid = 0.5 * (a + b);
    let left = gl5_panel(f, a, mid, nodes);
    let right = gl5_panel(f, mid, b, nodes);
    let refined = left + right;
    if (refined - whole).abs() <= tol || (b - a).abs() < f64::EPSILON * (a.abs() + b.abs() + 1.0) {
        return Ok(refined);
    }
    if depth >= MAX_QUAD_DEPTH {
        return Err(Error::QuadratureDepth { tol });
    }
    let half_tol = 0.5 * tol;
    Ok(adaptive(f, a, mid, left, half_tol, depth + 1, nodes)?
        + adaptive(f, mid, b, right, half_tol, depth + 1, nodes)?)
}

/// Adaptive composite Gauss-Legendre integral of `f` over `[a, b]` to
/// absolute tolerance `tol`, with mandatory panel splits at the declared
/// `breakpoints` (jump or kink locations of the integrand).
pub fn integrate(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    tol: f64,
) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::NonFinite("integration bounds"));
    }
    if b < a {
        return Err(Error::invalid("integration bounds", "b < a"));
    }
    if b == a {
        return Ok(0.0);
    }
    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|p| *p > a && *p < b)
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    cuts.insert(0, a);
    cuts.push(b);

    let nodes = gl5();
    let total_len = b - a;
    let mut acc = 0.0;
    for pair in cuts.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        if hi - lo <= 0.0 {
            continue;
        }
        let piece_tol = (tol * (hi - lo) / total_len).max(f64::MIN_POSITIVE);
        let whole = gl5_panel(&f, lo, hi, &nodes);
        acc += adaptive(&f, lo, hi, whole, piece_tol, 0, &nodes)?;
    }
    Ok(acc)
}

/// Period average `(1/T) ∫₀ᵀ f dt` to absolute tolerance `tol`, splitting
/// panels at the declared breakpoints.
pub fn integrate_periodic(
    f: impl Fn(f64) -> f64,
    period: f64,
    breakpoints: &[f64],
    tol: f64,
) -> Result<f64> {
    if !(period > 0.0) || !period.is_finite() {
        return Err(Error::NonPositivePeriod(period));
    }
    Ok(integrate(f, 0.0, period, breakpoints, tol * period)? / period)
}

/// Period average of a complex-valued integrand (real and imaginary parts
/// integrated independently to the same tolerance).
pub fn integrate_periodic_complex(
    f: impl Fn(f64) -> Complex64,
    period: f64,
    breakpoints: &[f64],
    tol: f64,
) -> Result<Complex64> {
    let re = integrate_periodic(|t| f(t).re, period, breakpoints, tol)?;
    let im = integrate_periodic(|t| f(t).im, period, breakpoints, tol)?;
    Ok(Complex64::new(re, im))
}

/// Ordered product of the factors as written: `factors[0] · factors[1] · …`,
/// so the rightmost entry acts first on a state vector.
pub fn matmul_chain(factors: &[Array2<Complex64>]) -> Result<Array2<Complex64>> {
    let first = factors
        .first()
        .ok_or_else(|| Error::invalid("matrix product", "empty factor list"))?;
    let mut acc = first.clone();
    for f in &factors[1..] {
        if acc.ncols() != f.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                acc.nrows(),
                acc.ncols(),
                f.nrows(),
                f.ncols()
            )));
        }
        acc = acc.dot(f);
    }
    Ok(acc)
}

/// Fold a real (quasi-)energy into the principal window `(-ω/2, ω/2]`.
pub fn fold_frequency(x: f64, omega: f64) -> f64 {
    let folded = x - omega * (x / omega - 0.5).ceil();
    // Guard against rounding pushing the result just past the open edge.
    if folded <= -0.5 * omega {
        folded + omega
    } else {
        folded
    }
}

/// Sort complex values by real part, ties broken by imaginary part.
pub fn sort_complex(values: &mut [Complex64]) {
    values.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

pub(crate) fn complex_order(a: &Complex64, b: &Complex64) -> std::cmp::Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

#[cfg(test)]
pub(crate) fn identity(n: usize) -> Array2<Complex64> {
    Array2::eye(n)
}

#[cfg(test)]
pub(crate) fn max_abs_diff(a: &Array2<Complex64>, b: &Array2<Complex64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
