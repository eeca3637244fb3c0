//! Spectral perturbations: rank-one and rank-r eigenvalue replacement,
//! Perron vector extraction with the symmetric choice for centrosymmetric
//! matrices, companion realization of zero-sum lists, diagonal similarity to
//! constant row sums, and nonnegative realization with a prescribed diagonal.

use crate::centro::{is_centrosymmetric, CentroMatrix};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::spectra::SpectrumList;

/// Perron root and a nonnegative eigenvector, normalized to unit max entry.
#[derive(Clone, Debug)]
pub struct PerronData {
    pub value: f64,
    pub vector: Vec<f64>,
    /// Whether the vector is fixed by the flip, max|v - Jv| <= 1e-10 max|v|.
    pub symmetric: bool,
}

/// Matrix with constant row sums `alpha`; `e` is an eigenvector for `alpha`.
#[derive(Clone, Debug)]
pub struct RowSumForm {
    pub matrix: DenseMatrix,
    pub alpha: f64,
}

fn rayleigh(m: &DenseMatrix, v: &[f64]) -> f64 {
    let mv = m.matvec(v);
    let num: f64 = v.iter().zip(&mv).map(|(a, b)| a * b).sum();
    let den: f64 = v.iter().map(|a| a * a).sum();
    num / den
}

fn eigen_residual(m: &DenseMatrix, v: &[f64], lambda: f64) -> f64 {
    let mv = m.matvec(v);
    mv.iter()
        .zip(v)
        .map(|(a, b)| (a - lambda * b).abs())
        .fold(0.0, f64::max)
}

/// Rank-one update `M + v qᵀ` that moves the eigenvalue of `v` by `vᵀq` and
/// leaves the rest of the spectrum unchanged.
pub fn brauer_update(m: &DenseMatrix, v: &[f64], q: &[f64]) -> Result<DenseMatrix> {
    let n = m.order();
    if v.len() != n || q.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "matrix order {n} vs vector lengths {} and {}",
            v.len(),
            q.len()
        )));
    }
    let vmax = v.iter().fold(0.0_f64, |a, b| a.max(b.abs()));
    if vmax == 0.0 {
        return Err(Error::NotAnEigenvector {
            residual: f64::INFINITY,
        });
    }
    let lambda = rayleigh(m, v);
    let residual = eigen_residual(m, v, lambda);
    if residual > 1e-9 * (1.0 + lambda.abs()) * vmax {
        return Err(Error::NotAnEigenvector { residual });
    }
    Ok(m.add_outer(v, q))
}

/// Rank-r update `M + X Cmat` replacing the eigenvalues carried by the
/// columns of X with those of `Ω + Cmat X`.
pub fn rado_update(m: &DenseMatrix, x: &DenseMatrix, cmat: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.order();
    let r = x.n_cols();
    if x.n_rows() != n || cmat.n_rows() != r || cmat.n_cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "M is {n}x{n}, X is {}x{}, C is {}x{}",
            x.n_rows(),
            x.n_cols(),
            cmat.n_rows(),
            cmat.n_cols()
        )));
    }
    let rank = x.rank(1e-9 * x.max_abs().max(1.0));
    if rank != r {
        return Err(Error::RankDeficientX { rank, expected: r });
    }
    for k in 0..r {
        let col: Vec<f64> = (0..n).map(|i| x[(i, k)]).collect();
        let cmax = col.iter().fold(0.0_f64, |a, b| a.max(b.abs()));
        if cmax == 0.0 {
            return Err(Error::NotAnEigenvector {
                residual: f64::INFINITY,
            });
        }
        let lambda = rayleigh(m, &col);
        let residual = eigen_residual(m, &col, lambda);
        if residual > 1e-9 * (1.0 + lambda.abs()) * cmax {
            return Err(Error::NotAnEigenvector { residual });
        }
    }
    Ok(m.add(&x.matmul(cmat)))
}

/// Power iteration with a diagonal shift that breaks eigenvalue-magnitude
/// ties for nonnegative matrices. The matrix is normalized to unit largest
/// entry first so the shift keeps its effect at every scale, and convergence
/// is componentwise so the tiny components of lopsided Perron vectors come
/// out to full relative accuracy.
pub fn perron_vector(m: &DenseMatrix) -> Result<PerronData> {
    let n = m.order();
    let margin = m.min_entry();
    if margin < 0.0 {
        return Err(Error::NegativeEntryInList(margin));
    }
    let scale = m.max_abs();
    let work = if scale > 0.0 {
        m.scale(1.0 / scale)
    } else {
        m.clone()
    };
    let shift = work.diagonal().iter().fold(0.0_f64, |a, &b| a.max(b)) + 1.0;
    let mut v = vec![1.0; n];
    let cap = (100 * n * n).max(20_000);
    let mut converged = false;
    for _ in 0..cap {
        let mut w = work.matvec(&v);
        for i in 0..n {
            w[i] += shift * v[i];
        }
        let norm = w.iter().fold(0.0_f64, |a, b| a.max(b.abs()));
        for wi in &mut w {
            *wi /= norm;
        }
        let ok = w
            .iter()
            .zip(&v)
            .all(|(&new, &old)| (new - old).abs() <= 1e-12 * new.max(1e-12));
        v = w;
        if ok {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure(
            "power iteration did not settle within the iteration cap".into(),
        ));
    }

    let mut value = rayleigh(m, &v);
    if value.abs() <= 1e-14 * m.max_abs() {
        value = value.max(0.0);
    }

    // the symmetric representative exists for centrosymmetric matrices;
    // averaging selects it inside the Perron eigenspace
    let mut symmetric = false;
    if is_centrosymmetric(m) == 0.0 {
        let mut sym: Vec<f64> = (0..n).map(|i| (v[i] + v[n - 1 - i]) / 2.0).collect();
        let smax = sym.iter().fold(0.0_f64, |a, b| a.max(b.abs()));
        if smax > 0.0 {
            for s in &mut sym {
                *s /= smax;
            }
            let resid = eigen_residual(m, &sym, value);
            if resid <= 1e-9 * value.abs().max(1e-3 * m.max_abs()).max(1e-300) {
                v = sym;
                symmetric = true;
            }
        }
    }

    let residual = eigen_residual(m, &v, value);
    let tol = 1e-9 * value.abs().max(1e-3 * m.max_abs());
    if residual > tol {
        return Err(Error::ConvergenceFailure(format!(
            "Perron residual {residual:e} exceeds {tol:e}"
        )));
    }
    if !symmetric {
        let dev = (0..n)
            .map(|i| (v[i] - v[n - 1 - i]).abs())
            .fold(0.0, f64::max);
        symmetric = dev <= 1e-10;
    }
    Ok(PerronData {
        value,
        vector: v,
        symmetric,
    })
}

/// Adds `eps / (vᵀv) · v vᵀ` for the symmetric Perron vector v, raising the
/// Perron eigenvalue by `eps` while keeping the matrix centrosymmetric and
/// nonnegative; the rest of the spectrum is untouched.
pub fn perron_bump(c: &CentroMatrix, eps: f64) -> Result<CentroMatrix> {
    assert!(eps >= 0.0, "bump must be nonnegative");
    if eps == 0.0 {
        return Ok(c.clone());
    }
    let m = c.matrix();
    let n = c.order();
    let pd = perron_vector(m)?;
    // bit-exact symmetrization keeps the rank-one term exactly centrosymmetric
    let mut v: Vec<f64> = (0..n)
        .map(|i| (pd.vector[i] + pd.vector[n - 1 - i]) / 2.0)
        .collect();
    let vmax = v.iter().fold(0.0_f64, |a, b| a.max(b.abs()));
    if vmax == 0.0 {
        return Err(Error::PerronVectorNotSymmetric {
            residual: f64::INFINITY,
        });
    }
    for x in &mut v {
        *x /= vmax;
    }
    let residual = eigen_residual(m, &v, pd.value);
    if residual > 1e-8 * (1.0 + pd.value.abs()) {
        return Err(Error::PerronVectorNotSymmetric { residual });
    }
    let vtv: f64 = v.iter().map(|a| a * a).sum();
    let s = eps / vtv;
    let mut out = m.clone();
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] += s * v[i] * v[j];
        }
    }
    CentroMatrix::new(out)
}

/// Companion matrix of `∏ (x - λ_i)` for a conjugate-closed zero-sum list,
/// valid when every non-leading polynomial coefficient is nonpositive; the
/// result is then nonnegative with zero diagonal. Fails loudly otherwise so
/// callers never receive a silently patched matrix.
pub fn companion_realize(list: &SpectrumList) -> Result<DenseMatrix> {
    let n = list.len();
    assert!(n >= 1, "empty list");
    let scale = 1.0 + list.max_modulus();
    let sum = list.sum();
    if sum.abs() > 1e-10 * scale * n as f64 {
        return Err(Error::ConditionViolation {
            construction: "companion realization",
            condition: "zero-sum",
            detail: format!("list sums to {sum}, expected 0"),
        });
    }

    // expand over real linear and conjugate-pair quadratic factors, ascending
    // degree, so coefficients stay exactly real
    let mut coeffs = vec![1.0_f64];
    for &r in list.reals() {
        let mut next = vec![0.0; coeffs.len() + 1];
        for (d, &c) in coeffs.iter().enumerate() {
            next[d] += c * (-r);
            next[d + 1] += c;
        }
        coeffs = next;
    }
    for &(a, b) in list.pairs() {
        let (p, q) = (-2.0 * a, a * a + b * b);
        let mut next = vec![0.0; coeffs.len() + 2];
        for (d, &c) in coeffs.iter().enumerate() {
            next[d] += c * q;
            next[d + 1] += c * p;
            next[d + 2] += c;
        }
        coeffs = next;
    }
    debug_assert_eq!(coeffs.len(), n + 1);

    let cmax = coeffs.iter().fold(1.0_f64, |a, b| a.max(b.abs()));
    let tol = 1e-10 * cmax;
    for (degree, &c) in coeffs.iter().enumerate().take(n) {
        if c > tol {
            return Err(Error::CompanionNotNonnegative { degree, coeff: c });
        }
    }
    let mut out = DenseMatrix::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        out[(i, i + 1)] = 1.0;
    }
    for j in 0..n {
        out[(n - 1, j)] = (-coeffs[j]).max(0.0);
    }
    // trace must vanish exactly; the trailing coefficient is the negated sum
    out[(n - 1, n - 1)] = 0.0;
    Ok(out)
}

/// Diagonal similarity by the Perron vector, giving a cospectral matrix with
/// every row summing to the spectral radius. The diagonal is unchanged.
pub fn to_row_sum_form(m: &DenseMatrix) -> Result<RowSumForm> {
    let n = m.order();
    let pd = perron_vector(m)?;
    if pd.vector.iter().any(|&x| x <= 1e-12) {
        return Err(Error::ZeroPerronComponent);
    }
    let mut out = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = if i == j {
                m[(i, j)]
            } else {
                m[(i, j)] * pd.vector[j] / pd.vector[i]
            };
        }
    }
    let alpha = pd.value;
    let worst = out
        .row_sums()
        .iter()
        .map(|s| (s - alpha).abs())
        .fold(0.0, f64::max);
    if worst > 1e-10 * (1.0 + alpha.abs()) {
        return Err(Error::ConvergenceFailure(format!(
            "row sums deviate from the spectral radius by {worst:e}"
        )));
    }
    Ok(RowSumForm { matrix: out, alpha })
}

/// Nonnegative matrix with the given spectrum and exactly the prescribed
/// diagonal, for lists whose tail sits in the admissible region. Pipeline:
/// companion of the zero-sum working list, row-sum normalization, then a
/// rank-one update with `q = diag`.
pub fn realize_with_diagonal(list: &SpectrumList, diag: &[f64]) -> Result<DenseMatrix> {
    let n = list.len();
    if diag.len() != n {
        return Err(Error::InvalidDiagonal(format!(
            "{} entries for an order-{n} spectrum",
            diag.len()
        )));
    }
    if let Some(&bad) = diag.iter().find(|&&w| w < 0.0) {
        return Err(Error::InvalidDiagonal(format!("negative entry {bad}")));
    }
    let head = list.perron().ok_or(Error::NoPerronHead)?;
    let spectrum_sum = list.sum();
    let diag_sum: f64 = diag.iter().sum();
    if (diag_sum - spectrum_sum).abs() > 1e-10 * (1.0 + spectrum_sum.abs()) {
        return Err(Error::DiagonalSumMismatch {
            diag_sum,
            spectrum_sum,
        });
    }
    if spectrum_sum < -1e-10 * (1.0 + head.abs()) {
        return Err(Error::SpectrumSumNegative(spectrum_sum));
    }

    let tail_reals = list.reals()[1..].to_vec();
    let pairs = list.pairs().to_vec();
    let beta = -(spectrum_sum - head);
    let scale = 1.0 + list.max_modulus();

    let base = if beta.abs() <= 1e-12 * scale {
        // zero working head forces an all-zero tail for admissible lists
        let tail_mod = tail_reals
            .iter()
            .map(|r| r.abs())
            .chain(pairs.iter().map(|&(a, b)| a.hypot(b)))
            .fold(0.0, f64::max);
        if tail_mod > 1e-9 * scale {
            return Err(Error::ConditionViolation {
                construction: "prescribed-diagonal realization",
                condition: "dominant working head",
                detail: format!("working head {beta} cannot dominate tail modulus {tail_mod}"),
            });
        }
        DenseMatrix::zeros(n, n)
    } else if beta < 0.0 {
        return Err(Error::ConditionViolation {
            construction: "prescribed-diagonal realization",
            condition: "dominant working head",
            detail: format!("negated tail sum {beta} is negative"),
        });
    } else {
        // work on the list normalized to unit head so the companion's Perron
        // vector is well scaled, then undo the scaling on the block
        let mut working_reals = vec![1.0];
        working_reals.extend(tail_reals.iter().map(|r| r / beta));
        let working = SpectrumList::from_parts(
            working_reals,
            pairs.iter().map(|&(a, b)| (a / beta, b / beta)).collect(),
        );
        if working.perron() != Some(1.0) {
            return Err(Error::ConditionViolation {
                construction: "prescribed-diagonal realization",
                condition: "dominant working head",
                detail: format!(
                    "negated tail sum {beta} is below the tail modulus {}",
                    beta * working.max_modulus()
                ),
            });
        }
        let companion = companion_realize(&working)?;
        to_row_sum_form(&companion)?.matrix.scale(beta)
    };

    brauer_update(&base, &vec![1.0; n], diag)
}
