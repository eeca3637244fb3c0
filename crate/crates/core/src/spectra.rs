//! Eigenvalue lists: conjugate-closure bookkeeping, Suleimanova-type
//! classification, and the sublist partitions the constructions consume.

use crate::error::{Error, Result};

/// Relative tolerance for treating an imaginary part as zero and for pairing
/// near-conjugate inputs. Inputs are user-given, so this only has to absorb
/// serialization round-trip noise.
pub const PAIRING_TOL: f64 = 1e-12;

/// Complex value with finite components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexVal {
    pub re: f64,
    pub im: f64,
}

impl ComplexVal {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub fn conj(self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn dist(self, other: Self) -> f64 {
        (self.re - other.re).hypot(self.im - other.im)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    fn near_real(self) -> bool {
        self.im.abs() <= PAIRING_TOL * (1.0 + self.abs())
    }
}

/// Conjugate-closed multiset of eigenvalues in canonical order: reals sorted
/// descending, then conjugate pairs sorted by descending real part, then
/// descending imaginary part, each stored as (z, z̄).
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumList {
    reals: Vec<f64>,
    pairs: Vec<(f64, f64)>, // (a, b) with b > 0 representing a ± ib
}

impl SpectrumList {
    pub fn new(values: &[ComplexVal]) -> Result<Self> {
        for v in values {
            if !v.is_finite() {
                return Err(Error::NotConjugateClosed(format!(
                    "non-finite entry {} + {}i",
                    v.re, v.im
                )));
            }
        }
        let mut reals: Vec<f64> = Vec::new();
        let mut upper: Vec<ComplexVal> = Vec::new();
        let mut lower: Vec<ComplexVal> = Vec::new();
        for &v in values {
            if v.near_real() {
                reals.push(v.re);
            } else if v.im > 0.0 {
                upper.push(v);
            } else {
                lower.push(v);
            }
        }
        if upper.len() != lower.len() {
            return Err(Error::NotConjugateClosed(format!(
                "{} entries above the real axis vs {} below",
                upper.len(),
                lower.len()
            )));
        }
        let mut pairs = Vec::with_capacity(upper.len());
        let mut used = vec![false; lower.len()];
        for z in &upper {
            let tol = PAIRING_TOL * (1.0 + z.abs());
            let mut best: Option<(usize, f64)> = None;
            for (k, w) in lower.iter().enumerate() {
                if used[k] {
                    continue;
                }
                let d_re = (z.re - w.re).abs();
                let d_im = (z.im + w.im).abs();
                if d_re <= tol && d_im <= tol {
                    let d = d_re.max(d_im);
                    if best.is_none_or(|(_, bd)| d < bd) {
                        best = Some((k, d));
                    }
                }
            }
            match best {
                Some((k, _)) => {
                    used[k] = true;
                    let w = lower[k];
                    // midpoint keeps exact inputs exact
                    pairs.push(((z.re + w.re) / 2.0, (z.im - w.im) / 2.0));
                }
                None => {
                    return Err(Error::NotConjugateClosed(format!(
                        "no conjugate partner for {} + {}i",
                        z.re, z.im
                    )))
                }
            }
        }
        Ok(Self::from_parts(reals, pairs))
    }

    /// Builds from already-separated parts; sorts into canonical order.
    pub fn from_parts(mut reals: Vec<f64>, mut pairs: Vec<(f64, f64)>) -> Self {
        reals.sort_by(|x, y| y.partial_cmp(x).unwrap());
        pairs.sort_by(|p, q| {
            q.0.partial_cmp(&p.0)
                .unwrap()
                .then(q.1.partial_cmp(&p.1).unwrap())
        });
        Self { reals, pairs }
    }

    pub fn from_reals(values: &[f64]) -> Self {
        Self::from_parts(values.to_vec(), Vec::new())
    }

    pub fn len(&self) -> usize {
        self.reals.len() + 2 * self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reals.is_empty() && self.pairs.is_empty()
    }

    pub fn reals(&self) -> &[f64] {
        &self.reals
    }

    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    pub fn is_all_real(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Canonical value sequence (reals first, then z, z̄ per pair).
    pub fn values(&self) -> Vec<ComplexVal> {
        let mut out: Vec<ComplexVal> = self.reals.iter().map(|&r| ComplexVal::real(r)).collect();
        for &(a, b) in &self.pairs {
            out.push(ComplexVal::new(a, b));
            out.push(ComplexVal::new(a, -b));
        }
        out
    }

    /// Sum of the list; real because the list is conjugate-closed.
    pub fn sum(&self) -> f64 {
        let mut s: f64 = self.reals.iter().sum();
        for &(a, _) in &self.pairs {
            s += 2.0 * a;
        }
        s
    }

    pub fn max_modulus(&self) -> f64 {
        let mut m: f64 = 0.0;
        for &r in &self.reals {
            m = m.max(r.abs());
        }
        for &(a, b) in &self.pairs {
            m = m.max(a.hypot(b));
        }
        m
    }

    /// Leading real entry when it weakly dominates every modulus in the list.
    pub fn perron(&self) -> Option<f64> {
        let &head = self.reals.first()?;
        let slack = PAIRING_TOL * (1.0 + head.abs());
        (head + slack >= self.max_modulus()).then_some(head)
    }

    /// Multiset equality, comparing canonical values bit-exactly.
    pub fn same_multiset(&self, other: &SpectrumList) -> bool {
        self.reals == other.reals && self.pairs == other.pairs
    }
}

/// Where a list sits relative to the admissible tail region
/// `Re λ <= 0, |Re λ| >= |Im λ|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuleimanovaKind {
    RealSuleimanova,
    ComplexSuleimanova,
    NotSuleimanova,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuleimanovaTag {
    pub kind: SuleimanovaKind,
    pub r_real: usize,
    pub m_pairs: usize,
}

/// Classifies a conjugate-closed list. The tag reflects membership of every
/// entry past the leading real one; counts are exact. Invariant under input
/// permutation because the list is stored canonically.
pub fn classify(list: &SpectrumList) -> SuleimanovaTag {
    let r_real = list.reals().len();
    let m_pairs = list.pairs().len();
    let in_region = |re: f64, im: f64| re <= 0.0 && re.abs() >= im.abs();

    let kind = match list.perron() {
        None => SuleimanovaKind::NotSuleimanova,
        Some(_) => {
            let tail_ok = list.reals()[1..].iter().all(|&r| in_region(r, 0.0))
                && list.pairs().iter().all(|&(a, b)| in_region(a, b));
            if !tail_ok {
                SuleimanovaKind::NotSuleimanova
            } else if m_pairs == 0 {
                SuleimanovaKind::RealSuleimanova
            } else {
                SuleimanovaKind::ComplexSuleimanova
            }
        }
    };
    SuleimanovaTag {
        kind,
        r_real,
        m_pairs,
    }
}

/// Parity of the target matrix order a partition feeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitParity {
    Even,
    Odd,
}

/// Sublists with per-sublist anchors. Two-way construction splits leave
/// `anchors` empty; the block-partition scheme fills one anchor per sublist.
#[derive(Clone, Debug, PartialEq)]
pub struct Partition {
    pub sublists: Vec<SpectrumList>,
    pub anchors: Vec<f64>,
    pub parity: SplitParity,
}

impl Partition {
    /// Multiset union of all sublists, for exactness checks.
    pub fn union(&self) -> SpectrumList {
        let mut reals = Vec::new();
        let mut pairs = Vec::new();
        for s in &self.sublists {
            reals.extend_from_slice(s.reals());
            pairs.extend_from_slice(s.pairs());
        }
        SpectrumList::from_parts(reals, pairs)
    }
}

fn take_split(list: &SpectrumList, r1: usize, m1: usize, parity: SplitParity) -> Partition {
    let reals = list.reals();
    let pairs = list.pairs();
    let lambda1 = SpectrumList::from_parts(reals[..r1].to_vec(), pairs[..m1].to_vec());
    let lambda2 = SpectrumList::from_parts(reals[r1..].to_vec(), pairs[m1..].to_vec());
    Partition {
        sublists: vec![lambda1, lambda2],
        anchors: Vec::new(),
        parity,
    }
}

/// Two-way split used by the real (possibly signed) centrosymmetric
/// construction. Sublist sizes follow the parity of n and of the pair count;
/// ties are resolved by filling the first sublist in canonical order.
pub fn split_for_real_centro(list: &SpectrumList) -> Result<Partition> {
    let n = list.len();
    if n < 3 {
        return Err(Error::OrderTooSmall(n, 3));
    }
    let r = list.reals().len();
    let m = list.pairs().len();
    if n.is_multiple_of(2) {
        if m.is_multiple_of(2) {
            Ok(take_split(list, r / 2, m / 2, SplitParity::Even))
        } else if r >= 2 {
            Ok(take_split(list, r / 2 + 1, (m - 1) / 2, SplitParity::Even))
        } else {
            // Both half-order factors are real matrices of odd order, so each
            // contributes a real eigenvalue the list does not have.
            Err(Error::UnsplittableList(
                "even-length list with an odd number of pairs needs at least two real entries"
                    .into(),
            ))
        }
    } else if m.is_multiple_of(2) {
        Ok(take_split(list, r.div_ceil(2), m / 2, SplitParity::Odd))
    } else {
        Ok(take_split(
            list,
            (r - 1) / 2,
            m.div_ceil(2),
            SplitParity::Odd,
        ))
    }
}

/// Split for the Suleimanova-type nonnegative construction. The returned
/// partition covers the working list in which the leading entry is replaced
/// by the negated tail real-part sum; the first sublist carries that head.
pub fn split_suleimanova(list: &SpectrumList, tag: &SuleimanovaTag) -> Result<Partition> {
    if tag.kind == SuleimanovaKind::NotSuleimanova {
        return Err(Error::UnsplittableList(
            "list tail leaves the region Re <= 0, |Re| >= |Im|".into(),
        ));
    }
    let r = tag.r_real;
    let m = tag.m_pairs;
    if r == 1 && m % 2 == 1 {
        return Err(Error::ObstructedList);
    }
    let head = list.reals()[0];
    let replacement = -(list.sum() - head);
    let tail_reals = &list.reals()[1..];
    let pairs = list.pairs();

    // (reals in sublist 1 including the replacement head, pairs in sublist 1)
    let (r1, m1, parity) = if m.is_multiple_of(2) {
        if r.is_multiple_of(2) {
            (r / 2, m / 2, SplitParity::Even)
        } else {
            (r.div_ceil(2), m / 2, SplitParity::Odd)
        }
    } else if r.is_multiple_of(2) {
        (r / 2 + 1, (m - 1) / 2, SplitParity::Even)
    } else {
        // Smallest pair count that keeps both sublists self-conjugate with
        // the head in the first one; the construction accepts any such split.
        let target = (r + 2 * m).div_ceil(2);
        let mut found = None;
        for cand_m1 in 0..=m {
            if target < 2 * cand_m1 {
                break;
            }
            let cand_r1 = target - 2 * cand_m1;
            if (1..=r).contains(&cand_r1) {
                found = Some((cand_r1, cand_m1));
                break;
            }
        }
        let (r1, m1) = found.ok_or_else(|| {
            Error::UnsplittableList(format!(
                "no self-conjugate split of sizes {}/{} for r={r}, m={m}",
                target,
                r + 2 * m - target
            ))
        })?;
        (r1, m1, SplitParity::Odd)
    };

    let mut reals1 = vec![replacement];
    reals1.extend_from_slice(&tail_reals[..r1 - 1]);
    let lambda1 = SpectrumList::from_parts(reals1, pairs[..m1].to_vec());
    let lambda2 = SpectrumList::from_parts(tail_reals[r1 - 1..].to_vec(), pairs[m1..].to_vec());
    Ok(Partition {
        sublists: vec![lambda1, lambda2],
        anchors: Vec::new(),
        parity,
    })
}
