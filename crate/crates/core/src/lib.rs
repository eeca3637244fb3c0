//! Constructive realization of prescribed spectra by centrosymmetric
//! matrices.
//!
//! Given a conjugate-closed list of complex numbers, the crate builds a real,
//! nonnegative, or strictly positive centrosymmetric matrix carrying that
//! list as its spectrum, when one of the implemented constructions applies:
//!
//! - any conjugate-closed list of length >= 3 has a real centrosymmetric
//!   carrier assembled from rotation blocks;
//! - descending nonnegative real lists realize through half-sum diagonal
//!   blocks, and strictly dominated ones through a positive similarity basis;
//! - lists whose tail lies in the region `Re <= 0, |Re| >= |Im|` realize
//!   through a companion/row-sum/rank-one pipeline, except for the structural
//!   obstruction (exactly one real entry with an odd number of pairs);
//! - explicit block partitions realize through mirrored constant-row-sum
//!   blocks and a rank-p0 update, with order-4 closed forms for prescribed
//!   diagonals.
//!
//! Every construction is checked against a built-in dense eigenvalue oracle
//! (`verify`), which is implemented in-repo so results stay auditable.
//!
//! ```
//! use centro_core::{auto_realize, verify_realization, ComplexVal, MatchTolerance, SpectrumList};
//!
//! let list = SpectrumList::new(&[
//!     ComplexVal::real(6.0),
//!     ComplexVal::real(-1.0),
//!     ComplexVal::new(-2.0, 1.0),
//!     ComplexVal::new(-2.0, -1.0),
//! ])
//! .unwrap();
//!
//! let realization = auto_realize(&list, None).unwrap();
//! let report = verify_realization(&realization, &list, MatchTolerance::default()).unwrap();
//! assert!(report.accepted);
//! assert_eq!(report.centro_residual, 0.0);
//! assert!(report.nonneg_margin >= 0.0);
//! ```

pub mod centro;
pub mod error;
pub mod fixtures;
pub mod matrix;
pub mod perturb;
pub mod realize;
pub mod spectra;
pub mod verify;

pub use centro::{
    assemble_even, assemble_odd, counteridentity, flip_rows, inverse_reduce, is_centrosymmetric,
    is_nonnegative, reduce, rotate_half_turn, split, CentroBlocks, CentroBlocksEven,
    CentroBlocksOdd, CentroMatrix,
};
pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use perturb::{
    brauer_update, companion_realize, perron_bump, perron_vector, rado_update,
    realize_with_diagonal, to_row_sum_form, PerronData, RowSumForm,
};
pub use realize::{
    auto_realize, check_obstruction, perfect_matrix, perfect_similarity_diagonal,
    realize_4x4_diag_complex, realize_4x4_diag_real, realize_4x4_real, realize_nonneg_real,
    realize_partitioned, realize_positive, realize_real_centro, realize_suleimanova, DiagonalSpec,
    Provenance, Realization, RealizationKind, SubRealizers,
};
pub use spectra::{
    classify, split_for_real_centro, split_suleimanova, ComplexVal, Partition, SpectrumList,
    SplitParity, SuleimanovaKind, SuleimanovaTag,
};
pub use verify::{
    eigenvalues, match_multisets, match_spectra, verify_realization, MatchTolerance,
    RealizationReport, SpectrumMatch,
};
