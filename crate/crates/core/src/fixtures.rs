//! Bundled reference data: two worked realization instances with their
//! printed matrices, used by the CLI fixtures command and the verification
//! suites. Entries are exact decimals.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::spectra::{ComplexVal, SpectrumList};

/// A reference instance: a target spectrum with printed matrices that carry
/// it (or a related working spectrum).
pub struct Fixture {
    pub name: &'static str,
    pub spectrum: Vec<ComplexVal>,
    /// Labeled matrices with the spectrum each one is expected to carry.
    pub matrices: Vec<FixtureMatrix>,
}

pub struct FixtureMatrix {
    pub label: &'static str,
    pub matrix: DenseMatrix,
    pub spectrum: Vec<ComplexVal>,
}

fn c(re: f64, im: f64) -> ComplexVal {
    ComplexVal::new(re, im)
}

fn scaled(rows: &[Vec<f64>], denom: f64) -> DenseMatrix {
    DenseMatrix::from_rows(rows).scale(1.0 / denom)
}

/// Spectrum 1: one dominant real, three negative reals, three pairs.
pub fn spectrum_one() -> Vec<ComplexVal> {
    vec![
        c(20.0, 0.0),
        c(-1.0, 0.0),
        c(-2.0, 0.0),
        c(-3.0, 0.0),
        c(-2.0, 2.0),
        c(-2.0, -2.0),
        c(-3.0, 1.0),
        c(-3.0, -1.0),
        c(-1.0, 1.0),
        c(-1.0, -1.0),
    ]
}

/// Working spectrum for the first instance: leading value lowered to the
/// negated tail sum.
pub fn spectrum_one_working() -> Vec<ComplexVal> {
    let mut s = spectrum_one();
    s[0] = c(18.0, 0.0);
    s
}

/// Spectrum 2: two positive reals, one pair with positive real part, one
/// negative pair repeated.
pub fn spectrum_two() -> Vec<ComplexVal> {
    vec![
        c(10.0, 0.0),
        c(3.0, 0.0),
        c(1.0, 1.0),
        c(1.0, -1.0),
        c(-2.0, 2.0),
        c(-2.0, -2.0),
        c(-2.0, 2.0),
        c(-2.0, -2.0),
    ]
}

/// 10x10 centrosymmetric nonnegative matrix carrying spectrum one; entries
/// are tenths.
pub fn matrix_one_final() -> DenseMatrix {
    scaled(
        &[
            vec![2.0, 22.0, 27.0, 17.0, 17.0, 17.0, 17.0, 27.0, 22.0, 32.0],
            vec![22.0, 2.0, 22.0, 17.0, 17.0, 17.0, 17.0, 32.0, 32.0, 22.0],
            vec![27.0, 27.0, 2.0, 17.0, 17.0, 17.0, 17.0, 32.0, 17.0, 27.0],
            vec![37.0, 22.0, 27.0, 2.0, 2.0, 12.0, 12.0, 27.0, 22.0, 37.0],
            vec![17.0, 22.0, 27.0, 32.0, 2.0, 12.0, 22.0, 27.0, 22.0, 17.0],
            vec![17.0, 22.0, 27.0, 22.0, 12.0, 2.0, 32.0, 27.0, 22.0, 17.0],
            vec![37.0, 22.0, 27.0, 12.0, 12.0, 2.0, 2.0, 27.0, 22.0, 37.0],
            vec![27.0, 17.0, 32.0, 17.0, 17.0, 17.0, 17.0, 2.0, 27.0, 27.0],
            vec![22.0, 32.0, 32.0, 17.0, 17.0, 17.0, 17.0, 22.0, 2.0, 22.0],
            vec![32.0, 22.0, 27.0, 17.0, 17.0, 17.0, 17.0, 27.0, 22.0, 2.0],
        ],
        10.0,
    )
}

/// 10x10 centrosymmetric nonnegative matrix carrying the working spectrum
/// (head 18); entries are halves. Adding 1/5 to every entry gives the final
/// matrix above.
pub fn matrix_one_working() -> DenseMatrix {
    scaled(
        &[
            vec![0.0, 4.0, 5.0, 3.0, 3.0, 3.0, 3.0, 5.0, 4.0, 6.0],
            vec![4.0, 0.0, 4.0, 3.0, 3.0, 3.0, 3.0, 6.0, 6.0, 4.0],
            vec![5.0, 5.0, 0.0, 3.0, 3.0, 3.0, 3.0, 6.0, 3.0, 5.0],
            vec![7.0, 4.0, 5.0, 0.0, 0.0, 2.0, 2.0, 5.0, 4.0, 7.0],
            vec![3.0, 4.0, 5.0, 6.0, 0.0, 2.0, 4.0, 5.0, 4.0, 3.0],
            vec![3.0, 4.0, 5.0, 4.0, 2.0, 0.0, 6.0, 5.0, 4.0, 3.0],
            vec![7.0, 4.0, 5.0, 2.0, 2.0, 0.0, 0.0, 5.0, 4.0, 7.0],
            vec![5.0, 3.0, 6.0, 3.0, 3.0, 3.0, 3.0, 0.0, 5.0, 5.0],
            vec![4.0, 6.0, 6.0, 3.0, 3.0, 3.0, 3.0, 4.0, 0.0, 4.0],
            vec![6.0, 4.0, 5.0, 3.0, 3.0, 3.0, 3.0, 5.0, 4.0, 0.0],
        ],
        2.0,
    )
}

/// 5x5 zero-diagonal constant-row-sum block used inside the first instance;
/// spectrum {7, -1, -2, -2±2i}.
pub fn matrix_one_rowsum_block() -> DenseMatrix {
    DenseMatrix::from_rows(&[
        vec![0.0, 1.0, 2.0, 2.0, 2.0],
        vec![1.0, 0.0, 2.0, 2.0, 2.0],
        vec![2.0, 1.0, 0.0, 2.0, 2.0],
        vec![4.0, 1.0, 2.0, 0.0, 0.0],
        vec![0.0, 1.0, 2.0, 4.0, 0.0],
    ])
}

pub fn spectrum_one_rowsum_block() -> Vec<ComplexVal> {
    vec![
        c(7.0, 0.0),
        c(-1.0, 0.0),
        c(-2.0, 0.0),
        c(-2.0, 2.0),
        c(-2.0, -2.0),
    ]
}

/// The rank-one updated block with diagonal (3, 3, 3, 1, 1); spectrum
/// {18, -1, -2, -2±2i}.
pub fn matrix_one_diagonal_block() -> DenseMatrix {
    DenseMatrix::from_rows(&[
        vec![3.0, 4.0, 5.0, 3.0, 3.0],
        vec![4.0, 3.0, 5.0, 3.0, 3.0],
        vec![5.0, 4.0, 3.0, 3.0, 3.0],
        vec![7.0, 4.0, 5.0, 1.0, 1.0],
        vec![3.0, 4.0, 5.0, 5.0, 1.0],
    ])
}

pub fn spectrum_one_diagonal_block() -> Vec<ComplexVal> {
    vec![
        c(18.0, 0.0),
        c(-1.0, 0.0),
        c(-2.0, 0.0),
        c(-2.0, 2.0),
        c(-2.0, -2.0),
    ]
}

/// 8x8 centrosymmetric nonnegative matrix carrying spectrum two.
pub fn matrix_two_final() -> DenseMatrix {
    DenseMatrix::from_rows(&[
        vec![0.0, 0.0, 4.0, 1.0, 0.0, 0.0, 0.0, 3.0],
        vec![2.0, 0.0, 2.0, 1.0, 0.0, 0.0, 0.0, 3.0],
        vec![0.0, 4.0, 0.0, 1.0, 0.0, 0.0, 0.0, 3.0],
        vec![5.5, 0.0, 0.0, 3.5, 2.5, 0.0, 0.0, 6.5],
        vec![6.5, 0.0, 0.0, 2.5, 3.5, 0.0, 0.0, 5.5],
        vec![3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 4.0, 0.0],
        vec![3.0, 0.0, 0.0, 0.0, 1.0, 2.0, 0.0, 2.0],
        vec![3.0, 0.0, 0.0, 0.0, 1.0, 4.0, 0.0, 0.0],
    ])
}

/// 4x4 center block of the second instance: spectrum {10, 3, 1±i}, diagonal
/// (4, 7/2, 7/2, 4).
pub fn matrix_two_center() -> DenseMatrix {
    DenseMatrix::from_rows(&[
        vec![4.0, 1.0, 0.0, 3.0],
        vec![5.5, 3.5, 2.5, 6.5],
        vec![6.5, 2.5, 3.5, 5.5],
        vec![3.0, 0.0, 1.0, 4.0],
    ])
}

pub fn spectrum_two_center() -> Vec<ComplexVal> {
    vec![c(10.0, 0.0), c(3.0, 0.0), c(1.0, 1.0), c(1.0, -1.0)]
}

/// 3x3 side block of the second instance: row sums 4, spectrum {4, -2±2i}.
pub fn matrix_two_side_block() -> DenseMatrix {
    DenseMatrix::from_rows(&[
        vec![0.0, 0.0, 4.0],
        vec![2.0, 0.0, 2.0],
        vec![0.0, 4.0, 0.0],
    ])
}

pub fn spectrum_two_side_block() -> Vec<ComplexVal> {
    vec![c(4.0, 0.0), c(-2.0, 2.0), c(-2.0, -2.0)]
}

pub fn fixture(name: &str) -> Result<Fixture> {
    match name {
        "example1" => Ok(Fixture {
            name: "example1",
            spectrum: spectrum_one(),
            matrices: vec![
                FixtureMatrix {
                    label: "final",
                    matrix: matrix_one_final(),
                    spectrum: spectrum_one(),
                },
                FixtureMatrix {
                    label: "working",
                    matrix: matrix_one_working(),
                    spectrum: spectrum_one_working(),
                },
                FixtureMatrix {
                    label: "rowsum-block",
                    matrix: matrix_one_rowsum_block(),
                    spectrum: spectrum_one_rowsum_block(),
                },
                FixtureMatrix {
                    label: "diagonal-block",
                    matrix: matrix_one_diagonal_block(),
                    spectrum: spectrum_one_diagonal_block(),
                },
            ],
        }),
        "example2" => Ok(Fixture {
            name: "example2",
            spectrum: spectrum_two(),
            matrices: vec![
                FixtureMatrix {
                    label: "final",
                    matrix: matrix_two_final(),
                    spectrum: spectrum_two(),
                },
                FixtureMatrix {
                    label: "center",
                    matrix: matrix_two_center(),
                    spectrum: spectrum_two_center(),
                },
                FixtureMatrix {
                    label: "side-block",
                    matrix: matrix_two_side_block(),
                    spectrum: spectrum_two_side_block(),
                },
            ],
        }),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

pub fn fixture_names() -> &'static [&'static str] {
    &["example1", "example2"]
}

/// Target spectrum of a fixture as a validated list.
pub fn fixture_spectrum(name: &str) -> Result<SpectrumList> {
    SpectrumList::new(&fixture(name)?.spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centro::{is_centrosymmetric, is_nonnegative};

    #[test]
    fn bundled_matrices_are_exactly_centrosymmetric() {
        for name in fixture_names() {
            let f = fixture(name).unwrap();
            for fm in &f.matrices {
                if fm.matrix.order() >= 2 && fm.label.contains("final") {
                    assert_eq!(
                        is_centrosymmetric(&fm.matrix),
                        0.0,
                        "{name}/{label}",
                        label = fm.label
                    );
                }
                assert!(is_nonnegative(&fm.matrix) >= 0.0);
            }
        }
    }

    #[test]
    fn working_plus_uniform_bump_gives_final() {
        let diff = matrix_one_final()
            .sub(&matrix_one_working())
            .sub(&DenseMatrix::from_vec(10, 10, vec![0.2; 100]));
        assert!(diff.max_abs() < 1e-15);
    }

    #[test]
    fn unknown_fixture_errors() {
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture(_))));
    }
}
