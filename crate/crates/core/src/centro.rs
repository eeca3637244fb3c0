//! Counteridentity algebra: assembling, splitting and reducing centrosymmetric
//! matrices in both parities.
//!
//! An order-n matrix C is centrosymmetric when `c[i][j] == c[n-1-i][n-1-j]`,
//! i.e. `JCJ == C` for the flip matrix J. Every such matrix decomposes into
//! half-order blocks, and an orthogonal similarity turns it into a direct sum
//! of two half-order matrices whose spectra partition the spectrum of C.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// Flip (exchange) matrix: ones on the antidiagonal. Jᵀ = J, J² = I.
pub fn counteridentity(n: usize) -> DenseMatrix {
    let mut j = DenseMatrix::zeros(n, n);
    for i in 0..n {
        j[(i, n - 1 - i)] = 1.0;
    }
    j
}

/// Reverse the row order of `m` (multiply by J from the left).
pub fn flip_rows(m: &DenseMatrix) -> DenseMatrix {
    let (r, c) = (m.n_rows(), m.n_cols());
    let mut out = DenseMatrix::zeros(r, c);
    for i in 0..r {
        for j in 0..c {
            out[(i, j)] = m[(r - 1 - i, j)];
        }
    }
    out
}

/// Rotate `m` by 180 degrees (JMJ).
pub fn rotate_half_turn(m: &DenseMatrix) -> DenseMatrix {
    let (r, c) = (m.n_rows(), m.n_cols());
    let mut out = DenseMatrix::zeros(r, c);
    for i in 0..r {
        for j in 0..c {
            out[(i, j)] = m[(r - 1 - i, c - 1 - j)];
        }
    }
    out
}

/// Largest deviation from the centrosymmetry relation, 0 for an exact instance.
pub fn is_centrosymmetric(m: &DenseMatrix) -> f64 {
    let n = m.order();
    let mut residual = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            residual = residual.max((m[(i, j)] - m[(n - 1 - i, n - 1 - j)]).abs());
        }
    }
    residual
}

/// Smallest entry; nonnegative matrices have margin >= 0.
pub fn is_nonnegative(m: &DenseMatrix) -> f64 {
    m.min_entry()
}

/// Square matrix with an exactly verified centrosymmetry flag.
#[derive(Clone, Debug, PartialEq)]
pub struct CentroMatrix {
    mat: DenseMatrix,
}

impl CentroMatrix {
    /// Wraps a matrix after checking the symmetry relation holds exactly.
    pub fn new(mat: DenseMatrix) -> Result<Self> {
        let residual = is_centrosymmetric(&mat);
        if residual != 0.0 {
            return Err(Error::NotCentrosymmetric { residual });
        }
        Ok(Self { mat })
    }

    pub fn order(&self) -> usize {
        self.mat.order()
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> DenseMatrix {
        self.mat
    }

    pub fn is_even_order(&self) -> bool {
        self.order().is_multiple_of(2)
    }

    pub fn blocks(&self) -> CentroBlocks {
        split(self)
    }
}

/// Half-order blocks of an even-order centrosymmetric matrix
/// `[[A, JBJ], [B, JAJ]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CentroBlocksEven {
    pub a: DenseMatrix,
    pub b: DenseMatrix,
}

/// Blocks of an odd-order centrosymmetric matrix
/// `[[A, x, JBJ], [yᵀ, c, yᵀJ], [B, Jx, JAJ]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CentroBlocksOdd {
    pub a: DenseMatrix,
    pub b: DenseMatrix,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub c: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CentroBlocks {
    Even(CentroBlocksEven),
    Odd(CentroBlocksOdd),
}

/// Assemble `[[A, JBJ], [B, JAJ]]`; entries are copied, never recomputed, so
/// the result is exactly centrosymmetric.
pub fn assemble_even(blocks: &CentroBlocksEven) -> Result<CentroMatrix> {
    let m = blocks.a.order();
    if blocks.b.n_rows() != m || blocks.b.n_cols() != m || !blocks.a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "blocks must be square and of equal order: A is {}x{}, B is {}x{}",
            blocks.a.n_rows(),
            blocks.a.n_cols(),
            blocks.b.n_rows(),
            blocks.b.n_cols()
        )));
    }
    let n = 2 * m;
    let mut c = DenseMatrix::zeros(n, n);
    for i in 0..m {
        for j in 0..m {
            let a = blocks.a[(i, j)];
            let b = blocks.b[(i, j)];
            c[(i, j)] = a;
            c[(n - 1 - i, n - 1 - j)] = a; // JAJ
            c[(m + i, j)] = b;
            c[(m - 1 - i, n - 1 - j)] = b; // JBJ
        }
    }
    Ok(CentroMatrix { mat: c })
}

/// Assemble the odd-order form with middle row `[yᵀ, c, yᵀJ]` and middle
/// column `[x; c; Jx]`.
pub fn assemble_odd(blocks: &CentroBlocksOdd) -> Result<CentroMatrix> {
    let m = blocks.a.order();
    if blocks.b.n_rows() != m
        || blocks.b.n_cols() != m
        || blocks.x.len() != m
        || blocks.y.len() != m
    {
        return Err(Error::DimensionMismatch(format!(
            "odd blocks must agree on order {m}: B {}x{}, x len {}, y len {}",
            blocks.b.n_rows(),
            blocks.b.n_cols(),
            blocks.x.len(),
            blocks.y.len()
        )));
    }
    let n = 2 * m + 1;
    let mut c = DenseMatrix::zeros(n, n);
    for i in 0..m {
        for j in 0..m {
            let a = blocks.a[(i, j)];
            let b = blocks.b[(i, j)];
            c[(i, j)] = a;
            c[(n - 1 - i, n - 1 - j)] = a;
            c[(m + 1 + i, j)] = b;
            c[(m - 1 - i, n - 1 - j)] = b;
        }
        let xi = blocks.x[i];
        c[(i, m)] = xi;
        c[(n - 1 - i, m)] = xi; // Jx
        let yi = blocks.y[i];
        c[(m, i)] = yi;
        c[(m, n - 1 - i)] = yi; // yᵀJ
    }
    c[(m, m)] = blocks.c;
    Ok(CentroMatrix { mat: c })
}

/// Read the half-order blocks back out; exact inverse of assembly.
pub fn split(c: &CentroMatrix) -> CentroBlocks {
    let n = c.order();
    let mat = c.matrix();
    if n.is_multiple_of(2) {
        let m = n / 2;
        CentroBlocks::Even(CentroBlocksEven {
            a: mat.submatrix(0, m, 0, m),
            b: mat.submatrix(m, n, 0, m),
        })
    } else {
        let m = n / 2;
        let a = mat.submatrix(0, m, 0, m);
        let b = mat.submatrix(m + 1, n, 0, m);
        let x = (0..m).map(|i| mat[(i, m)]).collect();
        let y = (0..m).map(|i| mat[(m, i)]).collect();
        CentroBlocks::Odd(CentroBlocksOdd {
            a,
            b,
            x,
            y,
            c: mat[(m, m)],
        })
    }
}

/// Orthogonal-similarity reduction to a pair of half-order matrices whose
/// spectra together give the spectrum of C.
///
/// Even order 2m: `(A + JB, A - JB)`.
/// Odd order 2m+1: `([[c, √2·yᵀ], [√2·x, A + JB]], A - JB)`; the scalar sits
/// in the top-left corner of the first factor.
///
/// For nonnegative C the spectral radius is attained by the first factor.
pub fn reduce(c: &CentroMatrix) -> (DenseMatrix, DenseMatrix) {
    match split(c) {
        CentroBlocks::Even(CentroBlocksEven { a, b }) => {
            let jb = flip_rows(&b);
            (a.add(&jb), a.sub(&jb))
        }
        CentroBlocks::Odd(CentroBlocksOdd { a, b, x, y, c }) => {
            let m = a.order();
            let jb = flip_rows(&b);
            let plus_core = a.add(&jb);
            let minus = a.sub(&jb);
            let s = std::f64::consts::SQRT_2;
            let mut plus = DenseMatrix::zeros(m + 1, m + 1);
            plus[(0, 0)] = c;
            for i in 0..m {
                plus[(0, 1 + i)] = s * y[i];
                plus[(1 + i, 0)] = s * x[i];
                for j in 0..m {
                    plus[(1 + i, 1 + j)] = plus_core[(i, j)];
                }
            }
            (plus, minus)
        }
    }
}

/// Rebuild the centrosymmetric matrix whose reduction is `(mplus, mminus)`.
///
/// Accepts `|mplus| == |mminus|` (even target) or `|mplus| == |mminus| + 1`
/// (odd target, scalar in the top-left corner of `mplus`).
pub fn inverse_reduce(mplus: &DenseMatrix, mminus: &DenseMatrix) -> Result<CentroMatrix> {
    if !mplus.is_square() || !mminus.is_square() {
        return Err(Error::DimensionMismatch("factors must be square".into()));
    }
    let p = mplus.order();
    let q = mminus.order();
    if p == q {
        // A = (Mplus + Mminus)/2, B = J(Mplus - Mminus)/2
        let a = mplus.add(mminus).scale(0.5);
        let b = flip_rows(&mplus.sub(mminus)).scale(0.5);
        assemble_even(&CentroBlocksEven { a, b })
    } else if p == q + 1 {
        let m = q;
        let s = std::f64::consts::SQRT_2;
        let c = mplus[(0, 0)];
        let y: Vec<f64> = (0..m).map(|i| mplus[(0, 1 + i)] / s).collect();
        let x: Vec<f64> = (0..m).map(|i| mplus[(1 + i, 0)] / s).collect();
        let plus_core = mplus.submatrix(1, p, 1, p);
        let a = plus_core.add(mminus).scale(0.5);
        let b = flip_rows(&plus_core.sub(mminus)).scale(0.5);
        assemble_odd(&CentroBlocksOdd { a, b, x, y, c })
    } else {
        Err(Error::DimensionMismatch(format!(
            "incompatible factor orders {p} and {q}"
        )))
    }
}
