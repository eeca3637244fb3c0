//! Dense real eigenvalue solver: balancing, Householder reduction to
//! Hessenberg form, then Francis double-shift QR with 2x2 trailing-block
//! extraction of complex pairs. Eigenvalues only; sized for small matrices.
//!
//! The QR stage follows the classic Algol/EISPACK `hqr` scheme, including the
//! exceptional ad hoc shifts taken after 10 and 30 stalled sweeps.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::spectra::ComplexVal;

const MAX_ITERS_PER_ROOT: usize = 100;

/// Eigenvalues of a square real matrix as an unsorted multiset.
///
/// ```
/// use centro_core::{eigenvalues, DenseMatrix};
///
/// let rotation = DenseMatrix::from_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]);
/// let mut vals = eigenvalues(&rotation).unwrap();
/// vals.sort_by(|a, b| b.im.partial_cmp(&a.im).unwrap());
/// assert!((vals[0].im - 1.0).abs() < 1e-12);
/// assert!((vals[1].im + 1.0).abs() < 1e-12);
/// ```
pub fn eigenvalues(m: &DenseMatrix) -> Result<Vec<ComplexVal>> {
    assert!(m.is_square(), "eigenvalues need a square matrix");
    let n = m.order();
    assert!(n >= 1, "empty matrix");
    if !m.all_finite() {
        return Err(Error::ConvergenceFailure(
            "matrix has non-finite entries".into(),
        ));
    }
    let values = match n {
        1 => vec![ComplexVal::real(m[(0, 0)])],
        2 => eig2(m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]).to_vec(),
        _ => {
            let mut h = m.clone();
            balance(&mut h);
            hessenberg(&mut h);
            francis_qr(&mut h)?
        }
    };
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::ConvergenceFailure(
            "iteration produced non-finite eigenvalues".into(),
        ));
    }
    Ok(values)
}

/// Closed-form eigenvalues of a 2x2 block.
fn eig2(a: f64, b: f64, c: f64, d: f64) -> [ComplexVal; 2] {
    let p = (a - d) / 2.0;
    let q = p * p + b * c;
    let mid = (a + d) / 2.0;
    if q >= 0.0 {
        let z = q.sqrt();
        let z = if p >= 0.0 { p + z } else { p - z };
        let l1 = d + z;
        // second root from the product to avoid cancellation
        let l2 = if z != 0.0 { d - b * c / z } else { mid };
        [ComplexVal::real(l1), ComplexVal::real(l2)]
    } else {
        let z = (-q).sqrt();
        [ComplexVal::new(mid, z), ComplexVal::new(mid, -z)]
    }
}

/// Parlett-Reinsch diagonal scaling; a similarity, so eigenvalues are kept.
fn balance(h: &mut DenseMatrix) {
    const RADIX: f64 = 2.0;
    let n = h.order();
    loop {
        let mut done = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    r += h[(i, j)].abs();
                    c += h[(j, i)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut c_scaled = c;
            let g = r / RADIX;
            while c_scaled < g {
                f *= RADIX;
                c_scaled *= RADIX * RADIX;
            }
            let g = r * RADIX;
            while c_scaled > g {
                f /= RADIX;
                c_scaled /= RADIX * RADIX;
            }
            if (c_scaled + r) / f < 0.95 * s {
                done = false;
                let g = 1.0 / f;
                for j in 0..n {
                    h[(i, j)] *= g;
                }
                for j in 0..n {
                    h[(j, i)] *= f;
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Householder similarity reduction to upper Hessenberg form.
fn hessenberg(h: &mut DenseMatrix) {
    let n = h.order();
    let mut ort = vec![0.0; n];
    for m in 1..n.saturating_sub(1) {
        let mut scale = 0.0;
        for i in m..n {
            scale += h[(i, m - 1)].abs();
        }
        if scale == 0.0 {
            continue;
        }
        let mut hsum = 0.0;
        for i in (m..n).rev() {
            ort[i] = h[(i, m - 1)] / scale;
            hsum += ort[i] * ort[i];
        }
        let mut g = hsum.sqrt();
        if ort[m] > 0.0 {
            g = -g;
        }
        hsum -= ort[m] * g;
        ort[m] -= g;

        for j in m..n {
            let mut f = 0.0;
            for i in (m..n).rev() {
                f += ort[i] * h[(i, j)];
            }
            f /= hsum;
            for i in m..n {
                h[(i, j)] -= f * ort[i];
            }
        }
        for i in 0..n {
            let mut f = 0.0;
            for j in (m..n).rev() {
                f += ort[j] * h[(i, j)];
            }
            f /= hsum;
            for j in m..n {
                h[(i, j)] -= f * ort[j];
            }
        }
        h[(m, m - 1)] = scale * g;
        for i in m + 1..n {
            h[(i, m - 1)] = 0.0;
        }
    }
}

/// Double-shift QR on a Hessenberg matrix; returns the eigenvalue multiset.
fn francis_qr(hm: &mut DenseMatrix) -> Result<Vec<ComplexVal>> {
    let nn = hm.order();
    let h = |m: &DenseMatrix, i: isize, j: isize| m[(i as usize, j as usize)];
    let eps = f64::EPSILON;

    let mut values: Vec<ComplexVal> = Vec::with_capacity(nn);
    let mut norm = 0.0;
    for i in 0..nn {
        for j in i.saturating_sub(1)..nn {
            norm += hm[(i, j)].abs();
        }
    }
    if norm == 0.0 {
        return Ok(vec![ComplexVal::real(0.0); nn]);
    }

    let mut n = nn as isize - 1;
    let mut exshift = 0.0;
    let mut iter = 0usize;
    let (mut p, mut q, mut r, mut s, mut z);
    let (mut x, mut y, mut w);

    while n >= 0 {
        // find a small subdiagonal element
        let mut l = n;
        while l > 0 {
            s = h(hm, l - 1, l - 1).abs() + h(hm, l, l).abs();
            if s == 0.0 {
                s = norm;
            }
            if h(hm, l, l - 1).abs() < eps * s {
                break;
            }
            l -= 1;
        }

        if l == n {
            // one root found
            values.push(ComplexVal::real(h(hm, n, n) + exshift));
            n -= 1;
            iter = 0;
        } else if l == n - 1 {
            // two roots found
            let a = h(hm, n - 1, n - 1) + exshift;
            let b = h(hm, n - 1, n);
            let c = h(hm, n, n - 1);
            let d = h(hm, n, n) + exshift;
            let roots = eig2(a, b, c, d);
            values.push(roots[0]);
            values.push(roots[1]);
            n -= 2;
            iter = 0;
        } else {
            // form shift
            x = h(hm, n, n);
            y = h(hm, n - 1, n - 1);
            w = h(hm, n, n - 1) * h(hm, n - 1, n);

            if iter == 10 || iter == 20 {
                // exceptional shift
                exshift += x;
                for i in 0..=n {
                    hm[(i as usize, i as usize)] -= x;
                }
                s = h(hm, n, n - 1).abs() + h(hm, n - 1, n - 2).abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            if iter == 30 {
                s = (y - x) / 2.0;
                s = s * s + w;
                if s > 0.0 {
                    s = s.sqrt();
                    if y < x {
                        s = -s;
                    }
                    s = x - w / ((y - x) / 2.0 + s);
                    for i in 0..=n {
                        hm[(i as usize, i as usize)] -= s;
                    }
                    exshift += s;
                    x = 0.964;
                    y = x;
                    w = x;
                }
            }

            iter += 1;
            if iter > MAX_ITERS_PER_ROOT {
                return Err(Error::ConvergenceFailure(format!(
                    "QR iteration stalled with {} eigenvalues left",
                    n + 1
                )));
            }

            // two consecutive small subdiagonals
            let mut m = n - 2;
            loop {
                z = h(hm, m, m);
                r = x - z;
                s = y - z;
                p = (r * s - w) / h(hm, m + 1, m) + h(hm, m, m + 1);
                q = h(hm, m + 1, m + 1) - z - r - s;
                r = h(hm, m + 2, m + 1);
                s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                if h(hm, m, m - 1).abs() * (q.abs() + r.abs())
                    < eps
                        * (p.abs()
                            * (h(hm, m - 1, m - 1).abs() + z.abs() + h(hm, m + 1, m + 1).abs()))
                {
                    break;
                }
                m -= 1;
            }
            for i in m + 2..=n {
                hm[(i as usize, (i - 2) as usize)] = 0.0;
                if i > m + 2 {
                    hm[(i as usize, (i - 3) as usize)] = 0.0;
                }
            }

            // double QR sweep on rows l..n, columns m..n
            for k in m..n {
                let notlast = k != n - 1;
                if k != m {
                    p = h(hm, k, k - 1);
                    q = h(hm, k + 1, k - 1);
                    r = if notlast { h(hm, k + 2, k - 1) } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x == 0.0 {
                        continue;
                    }
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = (p * p + q * q + r * r).sqrt();
                if p < 0.0 {
                    s = -s;
                }
                if s == 0.0 {
                    continue;
                }
                if k != m {
                    hm[(k as usize, (k - 1) as usize)] = -s * x;
                } else if l != m {
                    let v = h(hm, k, k - 1);
                    hm[(k as usize, (k - 1) as usize)] = -v;
                }
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;

                for j in k as usize..nn {
                    let mut pp = hm[(k as usize, j)] + q * hm[(k as usize + 1, j)];
                    if notlast {
                        pp += r * hm[(k as usize + 2, j)];
                        hm[(k as usize + 2, j)] -= pp * z;
                    }
                    hm[(k as usize, j)] -= pp * x;
                    hm[(k as usize + 1, j)] -= pp * y;
                }
                let top = n.min(k + 3) as usize;
                for i in 0..=top {
                    let mut pp = x * hm[(i, k as usize)] + y * hm[(i, k as usize + 1)];
                    if notlast {
                        pp += z * hm[(i, k as usize + 2)];
                        hm[(i, k as usize + 2)] -= pp * r;
                    }
                    hm[(i, k as usize)] -= pp;
                    hm[(i, k as usize + 1)] -= pp * q;
                }
            }
        }
    }
    Ok(values)
}
