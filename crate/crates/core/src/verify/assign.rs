//! Min-max (bottleneck) assignment between two equal-size point sets:
//! binary search over the distinct distances, feasibility checked with
//! augmenting-path bipartite matching.

/// Returns, for each row, the matched column of a perfect matching that
/// minimizes the largest selected cost. `cost` is a square matrix given as
/// rows. Complexity is fine for the small spectra handled here.
pub fn bottleneck_assignment(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    if n == 0 {
        return Vec::new();
    }
    debug_assert!(cost.iter().all(|row| row.len() == n));

    let mut thresholds: Vec<f64> = cost.iter().flatten().copied().collect();
    thresholds.sort_by(|a, b| a.partial_cmp(b).unwrap());
    thresholds.dedup();

    let mut lo = 0usize;
    let mut hi = thresholds.len() - 1;
    debug_assert!(perfect_matching(cost, thresholds[hi]).is_some());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if perfect_matching(cost, thresholds[mid]).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    perfect_matching(cost, thresholds[lo]).expect("feasible at upper bound")
}

/// Kuhn's augmenting-path matching restricted to edges with cost <= limit.
fn perfect_matching(cost: &[Vec<f64>], limit: f64) -> Option<Vec<usize>> {
    let n = cost.len();
    let mut col_of_row = vec![usize::MAX; n];
    let mut row_of_col = vec![usize::MAX; n];

    fn try_augment(
        row: usize,
        cost: &[Vec<f64>],
        limit: f64,
        seen: &mut [bool],
        col_of_row: &mut [usize],
        row_of_col: &mut [usize],
    ) -> bool {
        let n = cost.len();
        for col in 0..n {
            if cost[row][col] <= limit && !seen[col] {
                seen[col] = true;
                if row_of_col[col] == usize::MAX
                    || try_augment(row_of_col[col], cost, limit, seen, col_of_row, row_of_col)
                {
                    col_of_row[row] = col;
                    row_of_col[col] = row;
                    return true;
                }
            }
        }
        false
    }

    for row in 0..n {
        let mut seen = vec![false; n];
        if !try_augment(
            row,
            cost,
            limit,
            &mut seen,
            &mut col_of_row,
            &mut row_of_col,
        ) {
            return None;
        }
    }
    Some(col_of_row)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_cost(cost: &[Vec<f64>], assign: &[usize]) -> f64 {
        assign
            .iter()
            .enumerate()
            .map(|(i, &j)| cost[i][j])
            .fold(0.0, f64::max)
    }

    fn brute_force_minmax(cost: &[Vec<f64>]) -> f64 {
        let n = cost.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = f64::INFINITY;
        permute(&mut perm, 0, &mut |p| {
            let m = p
                .iter()
                .enumerate()
                .map(|(i, &j)| cost[i][j])
                .fold(0.0, f64::max);
            if m < best {
                best = m;
            }
        });
        best
    }

    fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, f);
            perm.swap(k, i);
        }
    }

    #[test]
    fn identity_is_optimal() {
        let cost = vec![
            vec![0.0, 5.0, 5.0],
            vec![5.0, 0.0, 5.0],
            vec![5.0, 5.0, 0.0],
        ];
        let a = bottleneck_assignment(&cost);
        assert_eq!(a, vec![0, 1, 2]);
        assert_eq!(max_cost(&cost, &a), 0.0);
    }

    #[test]
    fn near_swap_chooses_min_max() {
        // min-sum would take (0->0, 1->1) with max 2.0; min-max prefers the swap
        let cost = vec![vec![0.1, 1.0], vec![1.1, 2.0]];
        let a = bottleneck_assignment(&cost);
        assert!((max_cost(&cost, &a) - brute_force_minmax(&cost)).abs() < 1e-15);
    }

    #[test]
    fn matches_brute_force_small() {
        // small deterministic pseudo-random matrices
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for n in 2..=6 {
            for _ in 0..20 {
                let cost: Vec<Vec<f64>> =
                    (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
                let a = bottleneck_assignment(&cost);
                let got = max_cost(&cost, &a);
                let want = brute_force_minmax(&cost);
                assert!(
                    (got - want).abs() < 1e-12,
                    "n={n}: bottleneck {got} vs brute force {want}"
                );
            }
        }
    }
}
