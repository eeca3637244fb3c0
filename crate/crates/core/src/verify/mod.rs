//! Independent verification: dense eigenvalue oracle, min-max multiset
//! matching, and structured reports for every construction.

mod assign;
mod eigen;

pub use eigen::eigenvalues;

use crate::centro::{is_centrosymmetric, is_nonnegative};
use crate::error::{Error, Result};
use crate::realize::{Provenance, Realization, RealizationKind};
use crate::spectra::{ComplexVal, SpectrumList};

/// Scale-aware acceptance tolerance: absolute below the cutoff modulus,
/// relative above it.
#[derive(Clone, Copy, Debug)]
pub struct MatchTolerance {
    pub abs: f64,
    pub rel: f64,
    pub abs_cutoff: f64,
}

impl Default for MatchTolerance {
    fn default() -> Self {
        Self {
            abs: 1e-8,
            rel: 1e-10,
            abs_cutoff: 100.0,
        }
    }
}

impl MatchTolerance {
    pub fn absolute(abs: f64) -> Self {
        Self {
            abs,
            ..Self::default()
        }
    }

    pub fn for_target(&self, target: ComplexVal) -> f64 {
        let m = target.abs();
        if m <= self.abs_cutoff {
            self.abs
        } else {
            self.rel * m
        }
    }
}

/// Bijection between a target and a computed spectrum minimizing the largest
/// pair distance.
#[derive(Clone, Debug)]
pub struct SpectrumMatch {
    /// (target, computed, distance) per matched pair.
    pub matched_pairs: Vec<(ComplexVal, ComplexVal, f64)>,
    pub max_distance: f64,
    pub matched: bool,
}

/// Optimal min-max matching of the computed multiset onto the target list.
pub fn match_spectra(
    target: &SpectrumList,
    computed: &[ComplexVal],
    tol: MatchTolerance,
) -> Result<SpectrumMatch> {
    match_multisets(&target.values(), computed, tol)
}

/// Min-max matching between two raw multisets; the first argument carries
/// the tolerance scale.
pub fn match_multisets(
    targets: &[ComplexVal],
    computed: &[ComplexVal],
    tol: MatchTolerance,
) -> Result<SpectrumMatch> {
    if targets.len() != computed.len() {
        return Err(Error::CardinalityMismatch(targets.len(), computed.len()));
    }
    if targets.is_empty() {
        return Ok(SpectrumMatch {
            matched_pairs: Vec::new(),
            max_distance: 0.0,
            matched: true,
        });
    }
    let cost: Vec<Vec<f64>> = targets
        .iter()
        .map(|t| computed.iter().map(|c| t.dist(*c)).collect())
        .collect();
    let assignment = assign::bottleneck_assignment(&cost);
    let mut pairs = Vec::with_capacity(targets.len());
    let mut max_distance = 0.0_f64;
    let mut matched = true;
    for (i, &j) in assignment.iter().enumerate() {
        let d = cost[i][j];
        max_distance = max_distance.max(d);
        if d > tol.for_target(targets[i]) {
            matched = false;
        }
        pairs.push((targets[i], computed[j], d));
    }
    Ok(SpectrumMatch {
        matched_pairs: pairs,
        max_distance,
        matched,
    })
}

/// Everything recomputed fresh from the raw matrix of a realization.
#[derive(Clone, Debug)]
pub struct RealizationReport {
    pub spectrum: SpectrumMatch,
    pub centro_residual: f64,
    pub nonneg_margin: f64,
    pub provenance: Provenance,
    /// Spectrum matched, centrosymmetry exact, and the margin appropriate for
    /// the claimed kind.
    pub accepted: bool,
}

pub fn verify_realization(
    realization: &Realization,
    target: &SpectrumList,
    tol: MatchTolerance,
) -> Result<RealizationReport> {
    let mat = realization.matrix.matrix();
    let computed = eigenvalues(mat)?;
    let spectrum = match_spectra(target, &computed, tol)?;
    let centro_residual = is_centrosymmetric(mat);
    let nonneg_margin = is_nonnegative(mat);
    let margin_ok = match realization.kind {
        RealizationKind::RealCentro => true,
        RealizationKind::NonnegCentro => nonneg_margin >= 0.0,
        RealizationKind::PositiveCentro => nonneg_margin > 0.0,
    };
    let accepted = spectrum.matched && centro_residual == 0.0 && margin_ok;
    Ok(RealizationReport {
        spectrum,
        centro_residual,
        nonneg_margin,
        provenance: realization.provenance.clone(),
        accepted,
    })
}
