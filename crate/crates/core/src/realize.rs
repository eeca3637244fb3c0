//! End-to-end constructions: from an eigenvalue list (optionally with a
//! prescribed diagonal) to a centrosymmetric matrix that carries it, plus the
//! structural obstruction test and an automatic dispatcher.

use crate::centro::{
    assemble_even, inverse_reduce, is_centrosymmetric, rotate_half_turn, CentroBlocksEven,
    CentroMatrix,
};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::perturb::{perron_bump, perron_vector, rado_update, realize_with_diagonal};
use crate::spectra::{
    classify, split_for_real_centro, split_suleimanova, ComplexVal, Partition, SpectrumList,
    SplitParity, SuleimanovaKind,
};
use crate::verify::{eigenvalues, match_spectra, MatchTolerance};

/// Prescribed diagonal entries; nonnegative, palindromic when the target is
/// centrosymmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalSpec {
    entries: Vec<f64>,
}

impl DiagonalSpec {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|e| !e.is_finite() || **e < 0.0) {
            return Err(Error::InvalidDiagonal(format!("entry {bad}")));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.entries.len();
        (0..n / 2).all(|i| self.entries[i] == self.entries[n - 1 - i])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealizationKind {
    /// Real centrosymmetric, entries of any sign.
    RealCentro,
    /// Centrosymmetric with margin >= 0.
    NonnegCentro,
    /// Centrosymmetric with margin > 0.
    PositiveCentro,
}

/// Which construction produced a matrix, and from which partition.
#[derive(Clone, Debug, PartialEq)]
pub struct Provenance {
    pub construction: String,
    pub partition: Option<String>,
}

impl Provenance {
    fn new(construction: &str) -> Self {
        Self {
            construction: construction.to_string(),
            partition: None,
        }
    }

    fn with_partition(construction: &str, partition: String) -> Self {
        Self {
            construction: construction.to_string(),
            partition: Some(partition),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub matrix: CentroMatrix,
    pub kind: RealizationKind,
    pub provenance: Provenance,
}

fn fmt_value(v: ComplexVal) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else if v.im > 0.0 {
        format!("{}+{}i", v.re, v.im)
    } else {
        format!("{}-{}i", v.re, -v.im)
    }
}

fn fmt_list(list: &SpectrumList) -> String {
    let vals: Vec<String> = list.values().into_iter().map(fmt_value).collect();
    format!("{{{}}}", vals.join(", "))
}

fn fmt_two_way(p: &Partition) -> String {
    format!(
        "{} / {}",
        fmt_list(&p.sublists[0]),
        fmt_list(&p.sublists[1])
    )
}

/// `[[a, -b], [b, a]]`, the real carrier of the pair a ± ib.
fn rotation_block(a: f64, b: f64) -> DenseMatrix {
    DenseMatrix::from_rows(&[vec![a, -b], vec![b, a]])
}

/// Direct sum of the scalar reals and one rotation block per conjugate pair,
/// in canonical order; the standard real matrix carrying a self-conjugate
/// list.
fn real_carrier(list: &SpectrumList) -> DenseMatrix {
    let mut blocks: Vec<DenseMatrix> = list
        .reals()
        .iter()
        .map(|&r| DenseMatrix::from_rows(&[vec![r]]))
        .collect();
    for &(a, b) in list.pairs() {
        blocks.push(rotation_block(a, b));
    }
    DenseMatrix::direct_sum(&blocks)
}

fn require_all_real(list: &SpectrumList, construction: &'static str) -> Result<()> {
    if !list.is_all_real() {
        return Err(Error::ConditionViolation {
            construction,
            condition: "all-real",
            detail: format!("list has {} conjugate pairs", list.pairs().len()),
        });
    }
    Ok(())
}

/// Real centrosymmetric realization of any conjugate-closed list with
/// n >= 3; entries may be negative.
pub fn realize_real_centro(list: &SpectrumList) -> Result<Realization> {
    let partition = split_for_real_centro(list)?;
    let mplus = real_carrier(&partition.sublists[0]);
    let mminus = real_carrier(&partition.sublists[1]);
    let matrix = inverse_reduce(&mplus, &mminus)?;
    Ok(Realization {
        matrix,
        kind: RealizationKind::RealCentro,
        provenance: Provenance::with_partition("real-centro", fmt_two_way(&partition)),
    })
}

/// Nonnegative centrosymmetric realization of a descending list of
/// nonnegative reals via the half-sum / half-difference diagonal forms.
pub fn realize_nonneg_real(list: &SpectrumList) -> Result<Realization> {
    require_all_real(list, "nonnegative-real")?;
    let vals = list.reals();
    if let Some(&bad) = vals.iter().find(|&&v| v < 0.0) {
        return Err(Error::NegativeEntryInList(bad));
    }
    let n = vals.len();
    let (mplus, mminus) = if n.is_multiple_of(2) {
        let m = n / 2;
        (DenseMatrix::diag(&vals[..m]), DenseMatrix::diag(&vals[m..]))
    } else {
        let half = n / 2; // ceil(n/2) = half + 1 values on the plus side
        let mut plus_vals = vec![vals[half]];
        plus_vals.extend_from_slice(&vals[..half]);
        (
            DenseMatrix::diag(&plus_vals),
            DenseMatrix::diag(&vals[half + 1..]),
        )
    };
    let matrix = inverse_reduce(&mplus, &mminus)?;
    Ok(Realization {
        matrix,
        kind: RealizationKind::NonnegCentro,
        provenance: Provenance::new("nonneg-real"),
    })
}

/// The ±1/0 basis matrix whose similarity action turns a strictly dominated
/// diagonal into a positive matrix with constant row sums.
pub fn perfect_matrix(n: usize) -> DenseMatrix {
    assert!(n >= 1);
    let mut p = DenseMatrix::zeros(n, n);
    for j in 0..n {
        p[(0, j)] = 1.0;
    }
    for i in 1..n {
        for j in 0..n - i {
            p[(i, j)] = 1.0;
        }
        p[(i, n - i)] = -1.0;
    }
    p
}

/// Closed form for the diagonal of `P D P⁻¹` with `D = diag(lams)` strictly
/// dominated by its first entry: the last entry is the mean of the two
/// leading eigenvalues and each step toward the top halves the leading
/// weights and pulls in the next eigenvalue.
#[allow(clippy::needless_range_loop)] // positional weights, indices are the math
pub fn perfect_similarity_diagonal(lams: &[f64]) -> Vec<f64> {
    let m = lams.len();
    assert!(m >= 1);
    if m == 1 {
        return vec![lams[0]];
    }
    let mut d = vec![0.0; m];
    for j in (1..m).rev() {
        let k = m - 1 - j; // steps above the bottom-right corner
        let mut val = (lams[0] + lams[1]) / 2f64.powi(k as i32 + 1);
        for t in 2..2 + k {
            val += lams[t] / 2f64.powi((k + 2 - t) as i32);
        }
        d[j] = val;
    }
    d[0] = d[1];
    d
}

fn positive_half_block(vals: &[f64]) -> DenseMatrix {
    let p = perfect_matrix(vals.len());
    p.matmul(&DenseMatrix::diag(vals)).matmul(&p.inverse())
}

/// Strictly positive centrosymmetric realization of a nonnegative real list
/// whose leading value is strictly dominant.
pub fn realize_positive(list: &SpectrumList) -> Result<Realization> {
    require_all_real(list, "positive")?;
    let vals = list.reals();
    if let Some(&bad) = vals.iter().find(|&&v| v < 0.0) {
        return Err(Error::NegativeEntryInList(bad));
    }
    let n = vals.len();
    if n >= 2 && vals[0] <= vals[1] {
        return Err(Error::PerronNotStrict(vals[0]));
    }
    let matrix = if n == 1 {
        CentroMatrix::new(DenseMatrix::from_rows(&[vec![vals[0]]]))?
    } else if n.is_multiple_of(2) {
        let m = n / 2;
        let mplus = positive_half_block(&vals[..m]);
        let mminus = DenseMatrix::diag(&vals[m..]);
        inverse_reduce(&mplus, &mminus)?
    } else {
        let m = n / 2;
        let q = positive_half_block(&vals[..m + 1]);
        // move the trailing row and column first so the scalar corner of the
        // bordered factor carries q's bottom-right entry
        let mut mplus = DenseMatrix::zeros(m + 1, m + 1);
        mplus[(0, 0)] = q[(m, m)];
        for i in 0..m {
            mplus[(0, 1 + i)] = q[(m, i)];
            mplus[(1 + i, 0)] = q[(i, m)];
            for j in 0..m {
                mplus[(1 + i, 1 + j)] = q[(i, j)];
            }
        }
        let mminus = DenseMatrix::diag(&vals[m + 1..]);
        inverse_reduce(&mplus, &mminus)?
    };
    let kind = if vals[0] > 0.0 {
        RealizationKind::PositiveCentro
    } else {
        RealizationKind::NonnegCentro
    };
    Ok(Realization {
        matrix,
        kind,
        provenance: Provenance::new("positive"),
    })
}

/// True when the list has exactly one real entry and an odd number of
/// conjugate pairs; such a list is never the spectrum of a centrosymmetric
/// nonnegative matrix.
pub fn check_obstruction(list: &SpectrumList) -> bool {
    list.reals().len() == 1 && list.pairs().len() % 2 == 1 && !list.pairs().is_empty()
}

/// Nonnegative centrosymmetric realization of an admissible-tail list with
/// nonnegative sum: split around the negated tail sum, realize the minus
/// factor as a rotation-block carrier, give the plus factor the negated
/// carrier diagonal, then raise the leading eigenvalue back by the list sum.
pub fn realize_suleimanova(list: &SpectrumList) -> Result<Realization> {
    let tag = classify(list);
    if tag.kind == SuleimanovaKind::NotSuleimanova {
        return Err(Error::ConditionViolation {
            construction: "suleimanova",
            condition: "tail-region",
            detail: "an entry past the leading one leaves Re <= 0, |Re| >= |Im|".into(),
        });
    }
    if check_obstruction(list) {
        return Err(Error::ObstructedList);
    }
    let sum = list.sum();
    let head = list.reals()[0];
    if sum < -1e-10 * (1.0 + head.abs()) {
        return Err(Error::SpectrumSumNegative(sum));
    }
    let eps = sum.max(0.0);

    let partition = split_suleimanova(list, &tag)?;
    let mminus = real_carrier(&partition.sublists[1]);
    let mut omega: Vec<f64> = Vec::new();
    if partition.parity == SplitParity::Odd {
        omega.push(0.0);
    }
    omega.extend(
        mminus
            .diagonal()
            .iter()
            .map(|&d| if d == 0.0 { 0.0 } else { -d }),
    );
    let mplus = realize_with_diagonal(&partition.sublists[0], &omega)?;
    let base = inverse_reduce(&mplus, &mminus)?;
    let matrix = perron_bump(&base, eps)?;
    Ok(Realization {
        matrix,
        kind: RealizationKind::NonnegCentro,
        provenance: Provenance::with_partition("suleimanova", fmt_two_way(&partition)),
    })
}

/// Caller-supplied realizing matrices for the block-partition construction;
/// anything left `None` is built with the bundled pipelines.
#[derive(Clone, Debug, Default)]
pub struct SubRealizers {
    /// Overrides for the side blocks, one slot per anchored sublist.
    pub side: Vec<Option<DenseMatrix>>,
    /// Override for the middle block of an odd partition.
    pub middle: Option<DenseMatrix>,
    /// Override for the central realizer carrying the first sublist with the
    /// palindromic anchor diagonal.
    pub center: Option<DenseMatrix>,
}

impl SubRealizers {
    pub fn none() -> Self {
        Self::default()
    }
}

fn oracle_spectrum_matches(m: &DenseMatrix, want: &SpectrumList) -> Result<bool> {
    let computed = eigenvalues(m)?;
    if computed.len() != want.len() {
        return Ok(false);
    }
    Ok(match_spectra(want, &computed, MatchTolerance::default())?.matched)
}

fn gamma_list(anchor: f64, tail: &SpectrumList) -> SpectrumList {
    let mut reals = vec![anchor];
    reals.extend_from_slice(tail.reals());
    SpectrumList::from_parts(reals, tail.pairs().to_vec())
}

/// Builds a nonnegative constant-row-sum block with spectrum {anchor} ∪ tail.
fn build_side_block(anchor: f64, tail: &SpectrumList) -> Result<DenseMatrix> {
    let gamma = gamma_list(anchor, tail);
    let n = gamma.len();
    let uniform = (anchor + tail.sum()) / n as f64;
    realize_with_diagonal(&gamma, &vec![uniform; n]).map_err(|e| Error::ConditionViolation {
        construction: "partitioned",
        condition: "i",
        detail: format!("no row-sum realizer for {}: {e}", fmt_list(&gamma)),
    })
}

fn validate_side_block(m: &DenseMatrix, anchor: f64, tail: &SpectrumList) -> Result<()> {
    let gamma = gamma_list(anchor, tail);
    let n = gamma.len();
    let fail = |detail: String| Error::ConditionViolation {
        construction: "partitioned",
        condition: "i",
        detail,
    };
    if m.order() != n {
        return Err(fail(format!(
            "supplied block is order {}, need {n}",
            m.order()
        )));
    }
    if m.min_entry() < 0.0 {
        return Err(fail(format!("supplied block has entry {}", m.min_entry())));
    }
    let worst = m
        .row_sums()
        .iter()
        .map(|s| (s - anchor).abs())
        .fold(0.0, f64::max);
    if worst > 1e-9 * (1.0 + anchor.abs()) {
        return Err(fail(format!(
            "row sums deviate from the anchor by {worst:e}"
        )));
    }
    if !oracle_spectrum_matches(m, &gamma)? {
        return Err(fail(format!(
            "supplied block spectrum is not {}",
            fmt_list(&gamma)
        )));
    }
    Ok(())
}

/// Builds the order-p0 centrosymmetric nonnegative center with spectrum
/// `lambda0` and the palindromic anchor diagonal. Closed forms exist for
/// p0 in {1, 2, 4}; other orders need a caller-supplied matrix.
fn build_center(lambda0: &SpectrumList, omega: &[f64]) -> Result<DenseMatrix> {
    let p0 = lambda0.len();
    let fail = |detail: String| Error::ConditionViolation {
        construction: "partitioned",
        condition: "ii",
        detail,
    };
    match p0 {
        1 => {
            let head = lambda0.reals()[0];
            if omega[0] > head {
                return Err(fail(format!(
                    "order-1 center has diagonal {head} below the anchor {}",
                    omega[0]
                )));
            }
            Ok(DenseMatrix::from_rows(&[vec![head]]))
        }
        2 => {
            if !lambda0.is_all_real() {
                return Err(fail("order-2 center needs two real values".into()));
            }
            let (l1, l2) = (lambda0.reals()[0], lambda0.reals()[1]);
            let need = (l1 + l2) / 2.0;
            if (omega[0] - need).abs() > 1e-12 * (1.0 + need.abs()) {
                return Err(fail(format!(
                    "order-2 center forces the anchor {need}, got {}",
                    omega[0]
                )));
            }
            let t = (l1 - l2) / 2.0;
            Ok(DenseMatrix::from_rows(&[
                vec![omega[0], t],
                vec![t, omega[0]],
            ]))
        }
        4 => {
            let spec = DiagonalSpec::new(vec![omega[0], omega[1], omega[1], omega[0]])?;
            let r = if lambda0.is_all_real() {
                realize_4x4_diag_real(lambda0, &spec)
            } else {
                realize_4x4_diag_complex(lambda0, &spec)
            };
            r.map(|real| real.matrix.into_matrix())
                .map_err(|e| fail(format!("no closed-form center: {e}")))
        }
        _ => Err(fail(format!(
            "no built-in prescribed-diagonal centrosymmetric realizer of order {p0}; supply one"
        ))),
    }
}

fn validate_center(m: &DenseMatrix, lambda0: &SpectrumList, omega: &[f64]) -> Result<()> {
    let p0 = lambda0.len();
    let fail = |detail: String| Error::ConditionViolation {
        construction: "partitioned",
        condition: "ii",
        detail,
    };
    if m.order() != p0 {
        return Err(fail(format!("center is order {}, need {p0}", m.order())));
    }
    if is_centrosymmetric(m) != 0.0 {
        return Err(fail("center is not exactly centrosymmetric".into()));
    }
    if m.min_entry() < 0.0 {
        return Err(fail(format!("center has entry {}", m.min_entry())));
    }
    for (i, &w) in omega.iter().enumerate() {
        if m[(i, i)] < w {
            return Err(fail(format!(
                "center diagonal {} at position {i} is below the anchor {w}",
                m[(i, i)]
            )));
        }
    }
    if !oracle_spectrum_matches(m, lambda0)? {
        return Err(fail(format!(
            "center spectrum is not {}",
            fmt_list(lambda0)
        )));
    }
    Ok(())
}

/// Realizes a list from an explicit block partition: side blocks with
/// constant row sums, a mirrored block-diagonal direct sum, and a rank-p0
/// update that swaps the anchor eigenvalues for the first sublist.
///
/// `partition.sublists[0]` is the central sublist (leading value first);
/// each further sublist appears twice in the list, mirrored, except the
/// middle one of an odd partition which appears once. `partition.anchors`
/// holds one anchor per non-central sublist.
pub fn realize_partitioned(
    list: &SpectrumList,
    partition: &Partition,
    realizers: &SubRealizers,
) -> Result<Realization> {
    let fail_shape = |detail: String| Error::ConditionViolation {
        construction: "partitioned",
        condition: "partition",
        detail,
    };
    if partition.sublists.is_empty() {
        return Err(fail_shape("no central sublist".into()));
    }
    let lambda0 = &partition.sublists[0];
    let p0 = lambda0.len();
    if p0 == 0 {
        return Err(fail_shape("central sublist is empty".into()));
    }
    let expected_parity = if p0.is_multiple_of(2) {
        SplitParity::Even
    } else {
        SplitParity::Odd
    };
    if partition.parity != expected_parity {
        return Err(fail_shape(format!(
            "parity flag does not match central size {p0}"
        )));
    }
    let head = list.perron().ok_or(Error::NoPerronHead)?;
    let sum = list.sum();
    if sum < -1e-10 * (1.0 + head.abs()) {
        return Err(Error::SpectrumSumNegative(sum));
    }
    if lambda0.perron() != Some(head) {
        return Err(fail_shape(
            "central sublist must carry the leading value".into(),
        ));
    }

    let side_count = p0 / 2;
    let has_middle = p0 % 2 == 1;
    let expected_sublists = 1 + side_count + usize::from(has_middle);
    if partition.sublists.len() != expected_sublists {
        return Err(fail_shape(format!(
            "expected {expected_sublists} sublists for central size {p0}, got {}",
            partition.sublists.len()
        )));
    }
    if partition.anchors.len() != side_count + usize::from(has_middle) {
        return Err(fail_shape(format!(
            "expected {} anchors, got {}",
            side_count + usize::from(has_middle),
            partition.anchors.len()
        )));
    }
    for &w in &partition.anchors {
        if !(0.0..=head + 1e-12 * (1.0 + head.abs())).contains(&w) {
            return Err(Error::ConditionViolation {
                construction: "partitioned",
                condition: "anchor-range",
                detail: format!("anchor {w} outside [0, {head}]"),
            });
        }
    }

    // the partition must cover the list: Λ0 + each side sublist twice + middle
    {
        let mut reals = lambda0.reals().to_vec();
        let mut pairs = lambda0.pairs().to_vec();
        for s in &partition.sublists[1..=side_count] {
            for _ in 0..2 {
                reals.extend_from_slice(s.reals());
                pairs.extend_from_slice(s.pairs());
            }
        }
        if has_middle {
            let mid = &partition.sublists[side_count + 1];
            reals.extend_from_slice(mid.reals());
            pairs.extend_from_slice(mid.pairs());
        }
        let union = SpectrumList::from_parts(reals, pairs);
        if !union.same_multiset(list) {
            return Err(fail_shape("sublists do not cover the list".into()));
        }
    }

    // side blocks
    let mut side_blocks: Vec<DenseMatrix> = Vec::with_capacity(side_count);
    for k in 0..side_count {
        let tail = &partition.sublists[1 + k];
        let anchor = partition.anchors[k];
        let block = match realizers.side.get(k).and_then(|o| o.as_ref()) {
            Some(m) => {
                validate_side_block(m, anchor, tail)?;
                m.clone()
            }
            None => build_side_block(anchor, tail)?,
        };
        side_blocks.push(block);
    }

    // middle block for odd central size
    let middle_block = if has_middle {
        let tail = &partition.sublists[side_count + 1];
        let anchor = partition.anchors[side_count];
        let gamma = gamma_list(anchor, tail);
        let block = match &realizers.middle {
            Some(m) => {
                if m.order() != gamma.len() {
                    return Err(Error::MiddleBlockParityMismatch {
                        expected: gamma.len(),
                        found: m.order(),
                    });
                }
                if is_centrosymmetric(m) != 0.0 || m.min_entry() < 0.0 {
                    return Err(Error::ConditionViolation {
                        construction: "partitioned",
                        condition: "i",
                        detail: "middle block must be centrosymmetric nonnegative".into(),
                    });
                }
                if !oracle_spectrum_matches(m, &gamma)? {
                    return Err(Error::ConditionViolation {
                        construction: "partitioned",
                        condition: "i",
                        detail: format!("middle block spectrum is not {}", fmt_list(&gamma)),
                    });
                }
                m.clone()
            }
            None => auto_centro_realizer(&gamma)
                .map_err(|e| Error::ConditionViolation {
                    construction: "partitioned",
                    condition: "i",
                    detail: format!(
                        "no centrosymmetric realizer for the middle list {}: {e}",
                        fmt_list(&gamma)
                    ),
                })?
                .matrix
                .into_matrix(),
        };
        Some(block)
    } else {
        None
    };

    // center with the palindromic anchor diagonal
    let mut omega_diag: Vec<f64> = partition.anchors[..side_count].to_vec();
    if has_middle {
        omega_diag.push(partition.anchors[side_count]);
    }
    for k in (0..side_count).rev() {
        omega_diag.push(partition.anchors[k]);
    }
    let center = match &realizers.center {
        Some(m) => {
            validate_center(m, lambda0, &omega_diag)?;
            m.clone()
        }
        None => build_center(lambda0, &omega_diag)?,
    };

    // block-diagonal carrier and its anchor eigenvector matrix
    let mut blocks: Vec<DenseMatrix> = side_blocks.clone();
    if let Some(mid) = &middle_block {
        blocks.push(mid.clone());
    }
    for b in side_blocks.iter().rev() {
        blocks.push(rotate_half_turn(b));
    }
    let carrier = DenseMatrix::direct_sum(&blocks);
    let n = carrier.order();
    if n != list.len() {
        return Err(fail_shape(format!(
            "blocks assemble to order {n}, list has {} values",
            list.len()
        )));
    }

    let offsets: Vec<usize> = {
        let mut off = Vec::with_capacity(blocks.len());
        let mut acc = 0;
        for b in &blocks {
            off.push(acc);
            acc += b.order();
        }
        off
    };

    let center_minus_omega = {
        let mut d = center.clone();
        for (i, &w) in omega_diag.iter().enumerate() {
            d[(i, i)] -= w;
        }
        if d.min_entry() < 0.0 {
            return Err(Error::ConditionViolation {
                construction: "partitioned",
                condition: "ii",
                detail: format!(
                    "center minus the anchor diagonal has entry {}",
                    d.min_entry()
                ),
            });
        }
        d
    };

    let middle_even_order = middle_block.as_ref().is_some_and(|m| m.order() % 2 == 0);

    // X columns follow the block layout one-to-one; the anchor diagonal
    // mirrors it
    let mut x = DenseMatrix::zeros(n, p0);
    let mut middle_vector: Option<Vec<f64>> = None;
    if let Some(mid) = &middle_block {
        let pd = perron_vector(mid)?;
        let mut v = pd.vector.clone();
        let mo = mid.order();
        // bit-symmetric representative
        for i in 0..mo / 2 {
            let avg = (v[i] + v[mo - 1 - i]) / 2.0;
            v[i] = avg;
            v[mo - 1 - i] = avg;
        }
        let resid = {
            let mv = mid.matvec(&v);
            mv.iter()
                .zip(&v)
                .map(|(a, b)| (a - pd.value * b).abs())
                .fold(0.0, f64::max)
        };
        if resid > 1e-8 * (1.0 + pd.value.abs()) {
            return Err(Error::PerronVectorNotSymmetric { residual: resid });
        }
        middle_vector = Some(v);
    }

    for col in 0..p0 {
        let off = offsets[col];
        let sz = blocks[col].order();
        let is_middle = has_middle && col == side_count;
        if is_middle {
            let v = middle_vector.as_ref().expect("middle vector built above");
            if middle_even_order {
                let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
                for i in 0..sz {
                    x[(off + i, col)] = v[i] / norm;
                }
            } else {
                let center_entry = v[sz / 2];
                if center_entry <= 1e-9 {
                    return Err(Error::ConditionViolation {
                        construction: "partitioned",
                        condition: "i",
                        detail: "middle Perron vector vanishes at its center".into(),
                    });
                }
                for i in 0..sz {
                    x[(off + i, col)] = v[i] / center_entry;
                }
            }
        } else if middle_even_order {
            let norm = (sz as f64).sqrt();
            for i in 0..sz {
                x[(off + i, col)] = 1.0 / norm;
            }
        } else {
            for i in 0..sz {
                x[(off + i, col)] = 1.0;
            }
        }
    }

    // anchor eigenvalue check before the rank-p0 step
    {
        let mut omega_full = DenseMatrix::zeros(p0, p0);
        for (i, &w) in omega_diag.iter().enumerate() {
            omega_full[(i, i)] = w;
        }
        let resid = carrier.matmul(&x).sub(&x.matmul(&omega_full)).max_abs();
        let wmax = omega_diag.iter().fold(0.0_f64, |a, &b| a.max(b.abs()));
        if resid > 1e-10 * (1.0 + wmax) {
            return Err(Error::ConditionViolation {
                construction: "partitioned",
                condition: "i",
                detail: format!("anchor eigenvector residual {resid:e}"),
            });
        }
    }

    let updated = if middle_even_order {
        // normalized columns: apply the center perturbation symmetrically
        rado_update(&carrier, &x, &center_minus_omega.matmul(&x.transpose()))?
    } else {
        // place each center column at one slot of its block: the first slot
        // on the left half, the last on the mirrored half, the exact middle
        // slot for the middle block
        let mut cmat = DenseMatrix::zeros(p0, n);
        for col in 0..p0 {
            let off = offsets[col];
            let sz = blocks[col].order();
            let slot = if has_middle && col == side_count {
                off + sz / 2
            } else if col < side_count {
                off
            } else {
                off + sz - 1
            };
            for i in 0..p0 {
                cmat[(i, slot)] = center_minus_omega[(i, col)];
            }
        }
        rado_update(&carrier, &x, &cmat)?
    };

    let matrix = CentroMatrix::new(updated)?;
    let partition_note = format!(
        "central={}; sides=[{}]{}",
        fmt_list(lambda0),
        partition.sublists[1..=side_count]
            .iter()
            .map(fmt_list)
            .collect::<Vec<_>>()
            .join(", "),
        if has_middle {
            format!("; middle={}", fmt_list(&partition.sublists[side_count + 1]))
        } else {
            String::new()
        }
    );
    Ok(Realization {
        matrix,
        kind: RealizationKind::NonnegCentro,
        provenance: Provenance::with_partition("partitioned", partition_note),
    })
}

/// Nonnegative centrosymmetric realization of four reals, dispatching on the
/// sign pattern; covers every realizable list of four reals.
pub fn realize_4x4_real(list: &SpectrumList) -> Result<Realization> {
    if !list.is_all_real() || list.len() != 4 {
        return Err(Error::NotRealizable4x4(format!(
            "needs four real values, got {} reals and {} pairs",
            list.reals().len(),
            list.pairs().len()
        )));
    }
    let v = list.reals();
    let (l1, l2, l3, l4) = (v[0], v[1], v[2], v[3]);
    let scale = 1.0 + l1.abs();
    if l1 + l4 < -1e-12 * scale {
        return Err(Error::NotRealizable4x4(format!(
            "leading value {l1} does not dominate |{l4}|"
        )));
    }
    let sum = l1 + l2 + l3 + l4;
    if sum < -1e-12 * scale {
        return Err(Error::NotRealizable4x4(format!("sum {sum} is negative")));
    }

    let (mplus, mminus, case) = if l4 >= 0.0 {
        (
            DenseMatrix::diag(&[l1, l2]),
            DenseMatrix::diag(&[l3, l4]),
            "all-nonnegative",
        )
    } else if l2 <= 0.0 {
        let inner = realize_suleimanova(list)?;
        return Ok(Realization {
            matrix: inner.matrix,
            kind: inner.kind,
            provenance: Provenance::new("4x4(suleimanova)"),
        });
    } else if l3 >= 0.0 || l2 + l3 >= 0.0 {
        // single negative value, or two with a nonnegative middle sum: pair
        // the most negative against the leading value
        (
            DenseMatrix::diag(&[l1, l2]),
            DenseMatrix::diag(&[l4, l3]),
            "one-negative-pairing",
        )
    } else {
        let mplus = DenseMatrix::from_rows(&[
            vec![-l3, 1.0],
            vec![(-l3) * (l1 + l2 + l3) - l1 * l2, l1 + l2 + l3],
        ]);
        (mplus, DenseMatrix::diag(&[l3, l4]), "negative-middle-sum")
    };
    let matrix = inverse_reduce(&mplus, &mminus)?;
    Ok(Realization {
        matrix,
        kind: RealizationKind::NonnegCentro,
        provenance: Provenance::with_partition("4x4", case.to_string()),
    })
}

fn palindromic_pair(omega: &DiagonalSpec) -> Result<(f64, f64)> {
    if omega.len() != 4 {
        return Err(Error::InvalidDiagonal(format!(
            "need four entries, got {}",
            omega.len()
        )));
    }
    if !omega.is_palindromic() {
        return Err(Error::InvalidDiagonal(
            "diagonal must read the same forwards and backwards".into(),
        ));
    }
    Ok((omega.entries()[0], omega.entries()[1]))
}

/// 4x4 centrosymmetric nonnegative matrix with prescribed real spectrum and
/// diagonal (w1, w2, w2, w1), built from explicit half-order blocks.
pub fn realize_4x4_diag_real(list: &SpectrumList, omega: &DiagonalSpec) -> Result<Realization> {
    const NAME: &str = "4x4-diag-real";
    if !list.is_all_real() || list.len() != 4 {
        return Err(Error::ConditionViolation {
            construction: NAME,
            condition: "shape",
            detail: "needs four real values".into(),
        });
    }
    let v = list.reals();
    let (l1, l2, l3, l4) = (v[0], v[1], v[2], v[3]);
    let sum = l1 + l2 + l3 + l4;
    let scale = 1.0 + l1.abs();
    if sum < -1e-12 * scale || l1 + l4 < -1e-12 * scale {
        return Err(Error::NotRealizable4x4(
            "nonnegative sum and a dominant leading value are necessary".into(),
        ));
    }
    let (w1, w2) = palindromic_pair(omega)?;
    let violation = |condition: &'static str, detail: String| Error::ConditionViolation {
        construction: NAME,
        condition,
        detail,
    };
    if !(0.0..=l1).contains(&w1) || !(0.0..=l1).contains(&w2) {
        return Err(violation(
            "i",
            format!("diagonal ({w1}, {w2}) outside [0, {l1}]"),
        ));
    }
    if (w1 + w2 - sum / 2.0).abs() > 1e-12 * (1.0 + sum.abs()) {
        return Err(violation(
            "ii",
            format!("{w1} + {w2} must equal half the spectrum sum {}", sum / 2.0),
        ));
    }
    if w1 < l3 || w2 < l4 {
        return Err(violation(
            "iii",
            format!("need {w1} >= {l3} and {w2} >= {l4}"),
        ));
    }
    let product = (2.0 * w1 - l3) * (2.0 * w2 - l4);
    if product < l1 * l2 {
        return Err(violation(
            "iv",
            format!(
                "({}) * ({}) = {product} < {}",
                2.0 * w1 - l3,
                2.0 * w2 - l4,
                l1 * l2
            ),
        ));
    }
    let h = product - l1 * l2;
    let a = DenseMatrix::from_rows(&[vec![w1, 0.5], vec![h / 2.0, w2]]);
    let b = DenseMatrix::from_rows(&[vec![h / 2.0, w2 - l4], vec![w1 - l3, 0.5]]);
    let matrix = assemble_even(&CentroBlocksEven { a, b })?;
    Ok(Realization {
        matrix,
        kind: RealizationKind::NonnegCentro,
        provenance: Provenance::new(NAME),
    })
}

/// 4x4 centrosymmetric nonnegative matrix with spectrum {l1, l2, a ± ib} and
/// diagonal (w1, w2, w2, w1).
pub fn realize_4x4_diag_complex(list: &SpectrumList, omega: &DiagonalSpec) -> Result<Realization> {
    const NAME: &str = "4x4-diag-complex";
    if list.pairs().is_empty() {
        return Err(Error::NotStrictlyComplex);
    }
    if list.reals().len() != 2 || list.pairs().len() != 1 {
        return Err(Error::ConditionViolation {
            construction: NAME,
            condition: "shape",
            detail: "needs two real values and one conjugate pair".into(),
        });
    }
    let (l1, l2) = (list.reals()[0], list.reals()[1]);
    let (a, b) = list.pairs()[0];
    let violation = |condition: &'static str, detail: String| Error::ConditionViolation {
        construction: NAME,
        condition,
        detail,
    };
    if l1 + l2 - 2.0 * a.abs() < 0.0 {
        return Err(violation(
            "precondition-sum",
            format!("{l1} + {l2} - 2|{a}| is negative"),
        ));
    }
    if l1 - l2 - 2.0 * b < 0.0 {
        return Err(violation(
            "precondition-gap",
            format!("{l1} - {l2} - 2*{b} is negative"),
        ));
    }
    let (w1, w2) = palindromic_pair(omega)?;
    if !(0.0..=l1).contains(&w1) || !(0.0..=l1).contains(&w2) {
        return Err(violation(
            "i",
            format!("diagonal ({w1}, {w2}) outside [0, {l1}]"),
        ));
    }
    let need = (l1 + l2 + 2.0 * a) / 2.0;
    if (w1 + w2 - need).abs() > 1e-12 * (1.0 + need.abs()) {
        return Err(violation("ii", format!("{w1} + {w2} must equal {need}")));
    }
    let product = (2.0 * w1 - a) * (2.0 * w2 - a);
    if product < l1 * l2 + b * b {
        return Err(violation("iii", format!("{product} < {}", l1 * l2 + b * b)));
    }
    if w1 < a || w2 < a {
        return Err(violation("iv", format!("need {w1} >= {a} and {w2} >= {a}")));
    }
    let h_minus = product - l1 * l2 - b * b;
    let h_plus = product - l1 * l2 + b * b;
    let amat = DenseMatrix::from_rows(&[vec![w1, 1.0], vec![h_minus / 2.0, w2]]);
    let bmat = DenseMatrix::from_rows(&[vec![h_plus / 2.0, w2 - a], vec![w1 - a, 0.0]]);
    let matrix = assemble_even(&CentroBlocksEven { a: amat, b: bmat })?;
    Ok(Realization {
        matrix,
        kind: RealizationKind::NonnegCentro,
        provenance: Provenance::new(NAME),
    })
}

/// Centrosymmetric nonnegative realizer for small lists, used for middle
/// blocks of odd partitions.
fn auto_centro_realizer(list: &SpectrumList) -> Result<Realization> {
    if list.is_all_real() && list.reals().iter().all(|&x| x >= 0.0) {
        return realize_nonneg_real(list);
    }
    realize_suleimanova(list)
}

fn lambda0_anchor_candidates(lo: f64, hi: f64, mid: f64) -> Vec<f64> {
    let clamp = |x: f64| x.clamp(lo, hi);
    let mut cands = vec![clamp(mid), clamp(lo), clamp(hi), clamp((lo + hi) / 2.0)];
    cands.dedup_by(|a, b| a == b);
    cands
}

/// Heuristic block partitions for the dispatcher: central sublists of size 4
/// or 2 built from the leading value plus largest-modulus entries, remainder
/// split into mirrored halves.
fn heuristic_partitions(list: &SpectrumList) -> Vec<(Partition, SubRealizers)> {
    let Some(head) = list.perron() else {
        return Vec::new();
    };
    let tail_reals: Vec<f64> = list.reals()[1..].to_vec();
    let pairs: Vec<(f64, f64)> = list.pairs().to_vec();
    let mut out = Vec::new();

    // candidate central sublists of size 4: head + 3 reals, or head + real + pair,
    // ordered by how large the chosen companions are
    let mut candidates: Vec<(f64, SpectrumList)> = Vec::new();
    for i in 0..tail_reals.len() {
        for j in i + 1..tail_reals.len() {
            for k in j + 1..tail_reals.len() {
                let vals = vec![head, tail_reals[i], tail_reals[j], tail_reals[k]];
                let weight = vals[1..].iter().map(|v| v.abs()).sum::<f64>();
                candidates.push((weight, SpectrumList::from_parts(vals, Vec::new())));
            }
        }
    }
    for &real in &tail_reals {
        for (pk, &p) in pairs.iter().enumerate() {
            // skip duplicate pair values
            if pairs[..pk].contains(&p) {
                continue;
            }
            let weight = real.abs() + 2.0 * p.0.hypot(p.1);
            candidates.push((weight, SpectrumList::from_parts(vec![head, real], vec![p])));
        }
    }
    candidates.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());

    for (_, lambda0) in candidates {
        if let Some(entry) = partition_with_center(list, &lambda0, head) {
            out.push(entry);
        }
    }

    // size-2 central sublists: head plus one real; the anchor is forced
    for &r in &tail_reals {
        let lambda0 = SpectrumList::from_parts(vec![head, r], Vec::new());
        if let Some(entry) = partition_with_center(list, &lambda0, head) {
            out.push(entry);
        }
    }
    out
}

/// Tries to complete a chosen central sublist into a full partition: the
/// remainder must split into two identical halves, which are then packed
/// into anchored sublists.
fn partition_with_center(
    list: &SpectrumList,
    lambda0: &SpectrumList,
    head: f64,
) -> Option<(Partition, SubRealizers)> {
    let p0 = lambda0.len();
    // remainder = list minus lambda0, exact multiset subtraction
    let mut reals = list.reals().to_vec();
    for r in lambda0.reals() {
        let pos = reals.iter().position(|x| x == r)?;
        reals.remove(pos);
    }
    let mut prs = list.pairs().to_vec();
    for p in lambda0.pairs() {
        let pos = prs.iter().position(|x| x == p)?;
        prs.remove(pos);
    }

    // halve the remainder; every value needs even multiplicity
    let mut half_reals = Vec::new();
    while let Some(r) = reals.pop() {
        let pos = reals.iter().position(|x| *x == r)?;
        reals.remove(pos);
        half_reals.push(r);
    }
    let mut half_pairs = Vec::new();
    while let Some(p) = prs.pop() {
        let pos = prs.iter().position(|x| *x == p)?;
        prs.remove(pos);
        half_pairs.push(p);
    }
    let half = SpectrumList::from_parts(half_reals, half_pairs);

    let side_count = p0 / 2;
    let packings: Vec<Vec<SpectrumList>> = if side_count == 1 {
        vec![vec![half.clone()]]
    } else {
        // all in the first slot, or split across the two slots
        let mut options = vec![vec![half.clone(), SpectrumList::from_parts(vec![], vec![])]];
        if half.len() >= 2 {
            let r_half = half.reals().len() / 2;
            let p_half = half.pairs().len() / 2;
            options.push(vec![
                SpectrumList::from_parts(
                    half.reals()[..r_half].to_vec(),
                    half.pairs()[..p_half].to_vec(),
                ),
                SpectrumList::from_parts(
                    half.reals()[r_half..].to_vec(),
                    half.pairs()[p_half..].to_vec(),
                ),
            ]);
        }
        options
    };

    for packing in packings {
        let lows: Vec<f64> = packing.iter().map(|s| (-s.sum()).max(0.0)).collect();
        let anchors = match p0 {
            2 => {
                let need = lambda0.reals().iter().sum::<f64>() / 2.0;
                if need < lows[0] || need > head {
                    continue;
                }
                vec![need]
            }
            4 => {
                let s = lambda0.sum() / 2.0;
                let lo = lows[0].max(s - head);
                let hi = head.min(s - lows[1]);
                if lows[0] + lows[1] > s || lo > hi {
                    continue;
                }
                let mut found = None;
                for w1 in lambda0_anchor_candidates(lo, hi, s / 2.0) {
                    let w2 = s - w1;
                    if w2 < lows[1] || w2 > head {
                        continue;
                    }
                    let omega = vec![w1, w2, w2, w1];
                    let spec = DiagonalSpec::new(omega).ok()?;
                    let ok = if lambda0.is_all_real() {
                        realize_4x4_diag_real(lambda0, &spec).is_ok()
                    } else {
                        realize_4x4_diag_complex(lambda0, &spec).is_ok()
                    };
                    if ok {
                        found = Some(vec![w1, w2]);
                        break;
                    }
                }
                match found {
                    Some(a) => a,
                    None => continue,
                }
            }
            _ => continue,
        };
        let mut sublists = vec![lambda0.clone()];
        sublists.extend(packing);
        let partition = Partition {
            sublists,
            anchors,
            parity: if p0.is_multiple_of(2) {
                SplitParity::Even
            } else {
                SplitParity::Odd
            },
        };
        return Some((partition, SubRealizers::none()));
    }
    None
}

/// Tries the constructions in a fixed order and returns the first success:
/// obstruction test, nonnegative-real, positive, admissible-tail, the 4x4
/// closed forms, heuristic block partitions, then the signed real fallback.
pub fn auto_realize(list: &SpectrumList, diagonal: Option<&DiagonalSpec>) -> Result<Realization> {
    let mut attempts: Vec<String> = Vec::new();

    if check_obstruction(list) {
        return Err(Error::ObstructedList);
    }

    if let Some(omega) = diagonal {
        if list.len() == 4 {
            let r = if list.is_all_real() {
                realize_4x4_diag_real(list, omega)
            } else {
                realize_4x4_diag_complex(list, omega)
            };
            match r {
                Ok(real) => return Ok(real),
                Err(e) => attempts.push(format!("4x4-diag: {e}")),
            }
        } else {
            attempts.push("prescribed diagonal: only order-4 closed forms are available".into());
        }
        return Err(Error::NoApplicableConstruction { attempts });
    }

    let all_real = list.is_all_real();
    let nonneg = all_real && list.reals().iter().all(|&x| x >= 0.0);
    if nonneg {
        match realize_nonneg_real(list) {
            Ok(r) => return Ok(r),
            Err(e) => attempts.push(format!("nonneg-real: {e}")),
        }
        match realize_positive(list) {
            Ok(r) => return Ok(r),
            Err(e) => attempts.push(format!("positive: {e}")),
        }
    } else {
        attempts.push("nonneg-real: list is not nonnegative real".into());
    }

    let tag = classify(list);
    if tag.kind != SuleimanovaKind::NotSuleimanova {
        match realize_suleimanova(list) {
            Ok(r) => return Ok(r),
            Err(e) => attempts.push(format!("suleimanova: {e}")),
        }
    } else {
        attempts.push("suleimanova: tail leaves the admissible region".into());
    }

    if list.len() == 4 {
        if all_real {
            match realize_4x4_real(list) {
                Ok(r) => return Ok(r),
                Err(e) => attempts.push(format!("4x4: {e}")),
            }
        } else if list.reals().len() == 2 && list.pairs().len() == 1 {
            // derive a feasible diagonal for the closed form
            let (l1, l2) = (list.reals()[0], list.reals()[1]);
            let a = list.pairs()[0].0;
            let s = (l1 + l2 + 2.0 * a) / 2.0;
            if s >= 0.0 && l1 > 0.0 {
                let half = (s / 2.0).clamp(0.0, l1);
                let spec = DiagonalSpec::new(vec![half, s - half, s - half, half])
                    .expect("nonnegative by clamping");
                match realize_4x4_diag_complex(list, &spec) {
                    Ok(r) => return Ok(r),
                    Err(e) => attempts.push(format!("4x4-diag: {e}")),
                }
            } else {
                attempts.push("4x4-diag: no admissible diagonal for this trace".into());
            }
        }
    }

    for (partition, realizers) in heuristic_partitions(list) {
        match realize_partitioned(list, &partition, &realizers) {
            Ok(r) => return Ok(r),
            Err(e) => attempts.push(format!("partitioned: {e}")),
        }
    }
    if attempts.iter().all(|a| !a.starts_with("partitioned")) {
        attempts.push("partitioned: no feasible heuristic partition".into());
    }

    if list.len() >= 3 {
        match realize_real_centro(list) {
            Ok(r) => return Ok(r),
            Err(e) => attempts.push(format!("real-centro: {e}")),
        }
    } else if list.len() == 2 && all_real {
        let mplus = DenseMatrix::diag(&list.reals()[..1]);
        let mminus = DenseMatrix::diag(&list.reals()[1..]);
        let matrix = inverse_reduce(&mplus, &mminus)?;
        let kind = if matrix.matrix().min_entry() >= 0.0 {
            RealizationKind::NonnegCentro
        } else {
            RealizationKind::RealCentro
        };
        return Ok(Realization {
            matrix,
            kind,
            provenance: Provenance::new("real-centro"),
        });
    } else if list.len() == 1 {
        let v = list.reals()[0];
        let matrix = CentroMatrix::new(DenseMatrix::from_rows(&[vec![v]]))?;
        let kind = if v > 0.0 {
            RealizationKind::PositiveCentro
        } else if v == 0.0 {
            RealizationKind::NonnegCentro
        } else {
            RealizationKind::RealCentro
        };
        return Ok(Realization {
            matrix,
            kind,
            provenance: Provenance::new("real-centro"),
        });
    } else {
        attempts.push(
            "real-centro: order-2 lists with a conjugate pair have no centrosymmetric carrier"
                .into(),
        );
    }

    Err(Error::NoApplicableConstruction { attempts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centro::{is_nonnegative, reduce};
    use crate::verify::{eigenvalues, match_spectra, MatchTolerance};

    fn list(values: &[(f64, f64)]) -> SpectrumList {
        let vals: Vec<ComplexVal> = values
            .iter()
            .map(|&(re, im)| ComplexVal::new(re, im))
            .collect();
        SpectrumList::new(&vals).unwrap()
    }

    fn check(real: &Realization, target: &SpectrumList, tol: f64) {
        let m = real.matrix.matrix();
        assert_eq!(is_centrosymmetric(m), 0.0, "centrosymmetry must be exact");
        let computed = eigenvalues(m).unwrap();
        let mtc = match_spectra(target, &computed, MatchTolerance::absolute(tol)).unwrap();
        assert!(mtc.matched, "spectrum off by {:e}", mtc.max_distance);
        match real.kind {
            RealizationKind::NonnegCentro => assert!(is_nonnegative(m) >= 0.0),
            RealizationKind::PositiveCentro => assert!(is_nonnegative(m) > 0.0),
            RealizationKind::RealCentro => {}
        }
    }

    #[test]
    fn real_centro_rotation_only() {
        let l = list(&[(1.0, 0.0), (0.0, 1.0), (0.0, -1.0)]);
        let r = realize_real_centro(&l).unwrap();
        assert_eq!(r.matrix.order(), 3);
        check(&r, &l, 1e-10);
    }

    #[test]
    fn real_centro_even_mixed() {
        let l = list(&[(2.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.0, -1.0)]);
        let r = realize_real_centro(&l).unwrap();
        check(&r, &l, 1e-10);
    }

    #[test]
    fn real_centro_all_real_triple() {
        let l = list(&[(3.0, 0.0), (2.0, 0.0), (1.0, 0.0)]);
        let r = realize_real_centro(&l).unwrap();
        check(&r, &l, 1e-10);
    }

    #[test]
    fn nonneg_real_even() {
        let l = list(&[(4.0, 0.0), (3.0, 0.0), (2.0, 0.0), (1.0, 0.0)]);
        let r = realize_nonneg_real(&l).unwrap();
        // exact diagonal construction: A = diag(3, 2)
        let m = r.matrix.matrix();
        assert_eq!(m[(0, 0)], 3.0);
        assert_eq!(m[(1, 1)], 2.0);
        check(&r, &l, 1e-12);
    }

    #[test]
    fn nonneg_real_repeated_odd() {
        let l = list(&[(5.0, 0.0), (5.0, 0.0), (5.0, 0.0)]);
        let r = realize_nonneg_real(&l).unwrap();
        assert_eq!(r.matrix.matrix()[(1, 1)], 5.0);
        check(&r, &l, 1e-12);
    }

    #[test]
    fn nonneg_real_odd_bordered_shape() {
        // {3, 2, 1}: middle slot takes the middle value, halves pair up
        let l = list(&[(3.0, 0.0), (2.0, 0.0), (1.0, 0.0)]);
        let r = realize_nonneg_real(&l).unwrap();
        let expected = DenseMatrix::from_rows(&[
            vec![2.0, 0.0, 1.0],
            vec![0.0, 2.0, 0.0],
            vec![1.0, 0.0, 2.0],
        ]);
        assert_eq!(r.matrix.matrix(), &expected);
    }

    #[test]
    fn nonneg_real_pair_one_zero() {
        let l = list(&[(1.0, 0.0), (0.0, 0.0)]);
        let r = realize_nonneg_real(&l).unwrap();
        let expected = DenseMatrix::from_rows(&[vec![0.5, 0.5], vec![0.5, 0.5]]);
        assert_eq!(r.matrix.matrix(), &expected);
    }

    #[test]
    fn nonneg_real_rejects_negative() {
        let l = list(&[(2.0, 0.0), (-1.0, 0.0)]);
        assert!(matches!(
            realize_nonneg_real(&l),
            Err(Error::NegativeEntryInList(-1.0))
        ));
    }

    #[test]
    fn perfect_matrix_order3() {
        let p = perfect_matrix(3);
        let expected = DenseMatrix::from_rows(&[
            vec![1.0, 1.0, 1.0],
            vec![1.0, 1.0, -1.0],
            vec![1.0, -1.0, 0.0],
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn perfect_similarity_mean_corner() {
        // order 2: the diagonal is the mean of the two eigenvalues
        let q = positive_half_block(&[6.0, 2.0]);
        assert!((q[(0, 0)] - 4.0).abs() < 1e-12);
        assert!((q[(1, 1)] - 4.0).abs() < 1e-12);
        let closed = perfect_similarity_diagonal(&[6.0, 2.0]);
        assert_eq!(closed, vec![4.0, 4.0]);
    }

    #[test]
    fn positive_realization_even() {
        let l = list(&[(6.0, 0.0), (2.0, 0.0), (1.0, 0.0), (0.0, 0.0)]);
        let r = realize_positive(&l).unwrap();
        assert_eq!(r.kind, RealizationKind::PositiveCentro);
        check(&r, &l, 1e-9);
    }

    #[test]
    fn positive_realization_odd() {
        let l = list(&[(7.0, 0.0), (3.0, 0.0), (2.0, 0.0), (1.0, 0.0), (0.5, 0.0)]);
        let r = realize_positive(&l).unwrap();
        check(&r, &l, 1e-9);
    }

    #[test]
    fn positive_rejects_tied_head() {
        let l = list(&[(4.0, 0.0), (4.0, 0.0), (1.0, 0.0)]);
        assert!(matches!(
            realize_positive(&l),
            Err(Error::PerronNotStrict(_))
        ));
    }

    #[test]
    fn obstruction_detection() {
        assert!(check_obstruction(&list(&[
            (4.0, 0.0),
            (-2.0, 2.0),
            (-2.0, -2.0)
        ])));
        assert!(!check_obstruction(&list(&[
            (4.0, 0.0),
            (1.0, 0.0),
            (-2.0, 2.0),
            (-2.0, -2.0)
        ])));
        // four reals and three pairs: not obstructed
        assert!(!check_obstruction(&list(&[
            (20.0, 0.0),
            (-1.0, 0.0),
            (-2.0, 0.0),
            (-3.0, 0.0),
            (-2.0, 2.0),
            (-2.0, -2.0),
            (-3.0, 1.0),
            (-3.0, -1.0),
            (-1.0, 1.0),
            (-1.0, -1.0),
        ])));
    }

    #[test]
    fn suleimanova_real_quadruple() {
        let l = list(&[(6.0, 0.0), (-1.0, 0.0), (-2.0, 0.0), (-3.0, 0.0)]);
        let r = realize_suleimanova(&l).unwrap();
        check(&r, &l, 1e-9);
    }

    #[test]
    fn suleimanova_degenerate_zeros() {
        let l = list(&[(0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        let r = realize_suleimanova(&l).unwrap();
        assert_eq!(r.matrix.matrix(), &DenseMatrix::zeros(4, 4));
    }

    #[test]
    fn suleimanova_obstructed() {
        let l = list(&[(4.0, 0.0), (-2.0, 2.0), (-2.0, -2.0)]);
        assert!(matches!(
            realize_suleimanova(&l),
            Err(Error::ObstructedList)
        ));
    }

    #[test]
    fn suleimanova_odd_list() {
        // one real, two pairs: order 5 with the bordered construction
        let l = list(&[
            (8.0, 0.0),
            (-2.0, 1.0),
            (-2.0, -1.0),
            (-1.0, 1.0),
            (-1.0, -1.0),
        ]);
        let r = realize_suleimanova(&l).unwrap();
        assert_eq!(r.matrix.order(), 5);
        check(&r, &l, 1e-9);
    }

    #[test]
    fn suleimanova_rejects_negative_sum() {
        let l = list(&[(2.0, 0.0), (-1.5, 0.0), (-1.5, 0.0)]);
        assert!(matches!(
            realize_suleimanova(&l),
            Err(Error::SpectrumSumNegative(_))
        ));
    }

    #[test]
    fn four_by_four_all_cases() {
        for vals in [
            [4.0, 3.0, 2.0, 1.0],    // all nonnegative
            [6.0, -1.0, -2.0, -3.0], // admissible tail
            [3.0, 2.0, 1.0, -3.0],   // one negative
            [4.0, 2.0, -1.0, -4.0],  // two negative, middle sum positive
            [5.0, 2.0, -3.0, -4.0],  // two negative, middle sum negative
        ] {
            let l = list(&vals.map(|v| (v, 0.0)));
            let r = realize_4x4_real(&l).unwrap();
            check(&r, &l, 1e-9);
        }
    }

    #[test]
    fn four_by_four_case4_matches_closed_form() {
        let l = list(&[(5.0, 0.0), (2.0, 0.0), (-3.0, 0.0), (-4.0, 0.0)]);
        let r = realize_4x4_real(&l).unwrap();
        let m = r.matrix.matrix();
        // A = [[0, 1], [-(l2+l3)(l1+l3), sum]] / 2 = [[0, 0.5], [1, 0]]
        assert_eq!(m[(0, 0)], 0.0);
        assert_eq!(m[(0, 1)], 0.5);
        assert_eq!(m[(1, 0)], 1.0);
        assert_eq!(m[(1, 1)], 0.0);
        check(&r, &l, 1e-10);
    }

    #[test]
    fn four_by_four_rejects_negative_sum() {
        let l = list(&[(3.0, 0.0), (-1.0, 0.0), (-2.0, 0.0), (-3.0, 0.0)]);
        assert!(matches!(
            realize_4x4_real(&l),
            Err(Error::NotRealizable4x4(_))
        ));
    }

    #[test]
    fn diag_real_closed_form() {
        let l = list(&[(4.0, 0.0), (3.0, 0.0), (2.0, 0.0), (1.0, 0.0)]);
        let omega = DiagonalSpec::new(vec![3.0, 2.0, 2.0, 3.0]).unwrap();
        let r = realize_4x4_diag_real(&l, &omega).unwrap();
        let m = r.matrix.matrix();
        assert_eq!(m.diagonal(), vec![3.0, 2.0, 2.0, 3.0]);
        check(&r, &l, 1e-9);
    }

    #[test]
    fn diag_real_named_violations() {
        let l = list(&[(4.0, 0.0), (3.0, 0.0), (2.0, 0.0), (1.0, 0.0)]);
        let cases: Vec<(Vec<f64>, &str)> = vec![
            (vec![5.0, 0.0, 0.0, 5.0], "i"),
            (vec![3.0, 2.5, 2.5, 3.0], "ii"),
            (vec![1.5, 3.5, 3.5, 1.5], "iii"),
            (vec![2.0, 3.0, 3.0, 2.0], "iv"),
        ];
        for (entries, want) in cases {
            let omega = DiagonalSpec::new(entries).unwrap();
            match realize_4x4_diag_real(&l, &omega) {
                Err(Error::ConditionViolation { condition, .. }) => assert_eq!(condition, want),
                other => panic!("expected violation {want}, got {other:?}"),
            }
        }
    }

    #[test]
    fn diag_real_boundary_product() {
        // {2, 0, 0, 0} with diagonal (1, 0, 0, 1): the product condition
        // holds with equality
        let l = list(&[(2.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        let omega = DiagonalSpec::new(vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        let r = realize_4x4_diag_real(&l, &omega).unwrap();
        assert_eq!(r.matrix.matrix().diagonal(), vec![1.0, 0.0, 0.0, 1.0]);
        check(&r, &l, 1e-10);
    }

    #[test]
    fn diag_real_suleimanova_always_feasible() {
        // admissible tail: conditions iii and iv hold automatically
        let l = list(&[(6.0, 0.0), (-1.0, 0.0), (-1.0, 0.0), (-2.0, 0.0)]);
        let s = l.sum() / 2.0;
        let omega = DiagonalSpec::new(vec![s / 2.0, s / 2.0, s / 2.0, s / 2.0]).unwrap();
        let r = realize_4x4_diag_real(&l, &omega).unwrap();
        check(&r, &l, 1e-9);
    }

    #[test]
    fn diag_complex_closed_form_fixture() {
        let l = list(&[(10.0, 0.0), (3.0, 0.0), (1.0, 1.0), (1.0, -1.0)]);
        let omega = DiagonalSpec::new(vec![4.0, 3.5, 3.5, 4.0]).unwrap();
        let r = realize_4x4_diag_complex(&l, &omega).unwrap();
        let expected = DenseMatrix::from_rows(&[
            vec![4.0, 1.0, 0.0, 3.0],
            vec![5.5, 3.5, 2.5, 6.5],
            vec![6.5, 2.5, 3.5, 5.5],
            vec![3.0, 0.0, 1.0, 4.0],
        ]);
        assert_eq!(r.matrix.matrix(), &expected);
        check(&r, &l, 1e-9);
    }

    #[test]
    fn diag_complex_rejects_real_list() {
        let l = list(&[(4.0, 0.0), (3.0, 0.0), (2.0, 0.0), (1.0, 0.0)]);
        let omega = DiagonalSpec::new(vec![3.0, 2.0, 2.0, 3.0]).unwrap();
        assert!(matches!(
            realize_4x4_diag_complex(&l, &omega),
            Err(Error::NotStrictlyComplex)
        ));
    }

    #[test]
    fn partitioned_fixture_shape() {
        // central {10, 3, 1±i}, one side {-2±2i} twice, anchors (4, 3.5)
        let l = list(&[
            (10.0, 0.0),
            (3.0, 0.0),
            (1.0, 1.0),
            (1.0, -1.0),
            (-2.0, 2.0),
            (-2.0, -2.0),
            (-2.0, 2.0),
            (-2.0, -2.0),
        ]);
        let partition = Partition {
            sublists: vec![
                list(&[(10.0, 0.0), (3.0, 0.0), (1.0, 1.0), (1.0, -1.0)]),
                list(&[(-2.0, 2.0), (-2.0, -2.0)]),
                SpectrumList::from_parts(vec![], vec![]),
            ],
            anchors: vec![4.0, 3.5],
            parity: SplitParity::Even,
        };
        let r = realize_partitioned(&l, &partition, &SubRealizers::none()).unwrap();
        assert_eq!(r.matrix.order(), 8);
        check(&r, &l, 1e-8);
    }

    #[test]
    fn partitioned_all_in_center() {
        // every side sublist empty: the result is the center itself
        let l = list(&[(4.0, 0.0), (3.0, 0.0), (2.0, 0.0), (1.0, 0.0)]);
        let partition = Partition {
            sublists: vec![
                l.clone(),
                SpectrumList::from_parts(vec![], vec![]),
                SpectrumList::from_parts(vec![], vec![]),
            ],
            anchors: vec![3.0, 2.0],
            parity: SplitParity::Even,
        };
        let r = realize_partitioned(&l, &partition, &SubRealizers::none()).unwrap();
        assert_eq!(r.matrix.order(), 4);
        assert_eq!(r.matrix.matrix().diagonal(), vec![3.0, 2.0, 2.0, 3.0]);
        check(&r, &l, 1e-9);
    }

    #[test]
    fn partitioned_even_center_order2() {
        // central {8, 2}, side {-1, -2±2i} twice: order 8
        let l = list(&[
            (8.0, 0.0),
            (2.0, 0.0),
            (-1.0, 0.0),
            (-1.0, 0.0),
            (-2.0, 2.0),
            (-2.0, -2.0),
            (-2.0, 2.0),
            (-2.0, -2.0),
        ]);
        let partition = Partition {
            sublists: vec![
                list(&[(8.0, 0.0), (2.0, 0.0)]),
                list(&[(-1.0, 0.0), (-2.0, 2.0), (-2.0, -2.0)]),
            ],
            anchors: vec![5.0],
            parity: SplitParity::Even,
        };
        let r = realize_partitioned(&l, &partition, &SubRealizers::none()).unwrap();
        assert_eq!(r.matrix.order(), 8);
        check(&r, &l, 1e-8);
    }

    #[test]
    fn partitioned_odd_center_middle_odd_order() {
        // central {6}, middle {4, -2, -2}: order 3 + 0 sides
        let l = list(&[(6.0, 0.0), (-2.0, 0.0), (-2.0, 0.0)]);
        let partition = Partition {
            sublists: vec![list(&[(6.0, 0.0)]), list(&[(-2.0, 0.0), (-2.0, 0.0)])],
            anchors: vec![4.0],
            parity: SplitParity::Odd,
        };
        let r = realize_partitioned(&l, &partition, &SubRealizers::none()).unwrap();
        assert_eq!(r.matrix.order(), 3);
        check(&r, &l, 1e-8);
    }

    #[test]
    fn partitioned_odd_center_middle_even_order() {
        // central {3}, middle {1, -1}: normalized-column variant
        let l = list(&[(3.0, 0.0), (-1.0, 0.0)]);
        let partition = Partition {
            sublists: vec![list(&[(3.0, 0.0)]), list(&[(-1.0, 0.0)])],
            anchors: vec![1.0],
            parity: SplitParity::Odd,
        };
        let r = realize_partitioned(&l, &partition, &SubRealizers::none()).unwrap();
        let expected = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]);
        assert!(r.matrix.matrix().sub(&expected).max_abs() < 1e-12);
        check(&r, &l, 1e-10);
    }

    #[test]
    fn partitioned_odd_center_with_sides_and_even_middle() {
        // central size 3 needs a supplied center; sides {-0.5, -1.5}
        // mirrored, middle {-2} carried by an order-2 block
        let l = list(&[
            (4.0, 0.0),
            (1.0, 0.0),
            (1.0, 0.0),
            (-0.5, 0.0),
            (-1.5, 0.0),
            (-0.5, 0.0),
            (-1.5, 0.0),
            (-2.0, 0.0),
        ]);
        let partition = Partition {
            sublists: vec![
                list(&[(4.0, 0.0), (1.0, 0.0), (1.0, 0.0)]),
                list(&[(-0.5, 0.0), (-1.5, 0.0)]),
                list(&[(-2.0, 0.0)]),
            ],
            anchors: vec![2.0, 2.0],
            parity: SplitParity::Odd,
        };
        let realizers = SubRealizers {
            side: vec![None],
            middle: None,
            center: Some(DenseMatrix::from_rows(&[
                vec![2.0, 1.0, 1.0],
                vec![1.0, 2.0, 1.0],
                vec![1.0, 1.0, 2.0],
            ])),
        };
        let r = realize_partitioned(&l, &partition, &realizers).unwrap();
        assert_eq!(r.matrix.order(), 8);
        check(&r, &l, 1e-8);
    }

    #[test]
    fn partitioned_rejects_wrong_middle_order() {
        let l = list(&[(6.0, 0.0), (-2.0, 0.0), (-2.0, 0.0)]);
        let partition = Partition {
            sublists: vec![list(&[(6.0, 0.0)]), list(&[(-2.0, 0.0), (-2.0, 0.0)])],
            anchors: vec![4.0],
            parity: SplitParity::Odd,
        };
        let realizers = SubRealizers {
            side: vec![],
            middle: Some(DenseMatrix::diag(&[4.0, -2.0])),
            center: None,
        };
        assert!(matches!(
            realize_partitioned(&l, &partition, &realizers),
            Err(Error::MiddleBlockParityMismatch {
                expected: 3,
                found: 2
            })
        ));
    }

    #[test]
    fn partitioned_rejects_bad_cover() {
        let l = list(&[(4.0, 0.0), (3.0, 0.0), (2.0, 0.0), (1.0, 0.0)]);
        let partition = Partition {
            sublists: vec![list(&[(4.0, 0.0), (3.0, 0.0)]), list(&[(2.0, 0.0)])],
            anchors: vec![2.0],
            parity: SplitParity::Even,
        };
        assert!(matches!(
            realize_partitioned(&l, &partition, &SubRealizers::none()),
            Err(Error::ConditionViolation {
                condition: "partition",
                ..
            })
        ));
    }

    #[test]
    fn auto_realize_dispatch() {
        // nonnegative reals go through the diagonal construction
        let l = list(&[(4.0, 0.0), (3.0, 0.0), (2.0, 0.0), (1.0, 0.0)]);
        let r = auto_realize(&l, None).unwrap();
        assert_eq!(r.provenance.construction, "nonneg-real");

        // admissible tail goes through the split pipeline
        let l = list(&[(6.0, 0.0), (-1.0, 0.0), (-2.0, 0.0), (-3.0, 0.0)]);
        let r = auto_realize(&l, None).unwrap();
        assert_eq!(r.provenance.construction, "suleimanova");
        check(&r, &l, 1e-9);

        // obstructed lists fail fast
        let l = list(&[(4.0, 0.0), (-2.0, 2.0), (-2.0, -2.0)]);
        assert!(matches!(auto_realize(&l, None), Err(Error::ObstructedList)));
    }

    #[test]
    fn auto_realize_partitioned_path() {
        let l = list(&[
            (10.0, 0.0),
            (3.0, 0.0),
            (1.0, 1.0),
            (1.0, -1.0),
            (-2.0, 2.0),
            (-2.0, -2.0),
            (-2.0, 2.0),
            (-2.0, -2.0),
        ]);
        let r = auto_realize(&l, None).unwrap();
        assert_eq!(r.provenance.construction, "partitioned");
        assert_eq!(r.kind, RealizationKind::NonnegCentro);
        check(&r, &l, 1e-8);
    }

    #[test]
    fn auto_realize_real_fallback() {
        // mixed-sign list with no nonnegative construction: real fallback
        let l = list(&[(1.0, 0.0), (0.5, 0.0), (0.9, 1.0), (0.9, -1.0)]);
        let r = auto_realize(&l, None).unwrap();
        assert_eq!(r.provenance.construction, "real-centro");
        assert_eq!(r.kind, RealizationKind::RealCentro);
        check(&r, &l, 1e-10);
    }

    #[test]
    fn auto_realize_no_construction_for_bare_pair() {
        let l = list(&[(1.0, 1.0), (1.0, -1.0)]);
        assert!(matches!(
            auto_realize(&l, None),
            Err(Error::NoApplicableConstruction { .. })
        ));
    }

    #[test]
    fn reduce_of_fixture_partition_sides() {
        // the minus factor of a suleimanova split carries the second sublist
        let l = list(&[(6.0, 0.0), (-1.0, 0.0), (-2.0, 0.0), (-3.0, 0.0)]);
        let r = realize_suleimanova(&l).unwrap();
        let (plus, minus) = reduce(&r.matrix);
        let plus_vals = eigenvalues(&plus).unwrap();
        let minus_vals = eigenvalues(&minus).unwrap();
        let all: Vec<ComplexVal> = plus_vals.into_iter().chain(minus_vals).collect();
        let mtc = match_spectra(&l, &all, MatchTolerance::absolute(1e-9)).unwrap();
        assert!(mtc.matched);
    }
}
