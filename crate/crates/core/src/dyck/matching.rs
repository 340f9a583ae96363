use std::collections::BTreeSet;

use super::DyckError;

/// Pair the indices of `r` with those of `s` by the cycle lemma.
///
/// Whichever of the two sets avoids `n` supplies the up steps of a periodic
/// path on `1..n-1`; the other set (minus `n`) supplies the down steps.
/// After rotating past the last minimum, the first up step is left over and
/// is paired with `n`, and the rest are matched like brackets. Output pairs
/// are `(r, s)`, ordered by their up index with the pair containing `n` last.
pub fn cycle_lemma_pairing(r: &[u32], s: &[u32], n: u32) -> Result<Vec<(u32, u32)>, DyckError> {
    let rset: BTreeSet<u32> = r.iter().copied().collect();
    let sset: BTreeSet<u32> = s.iter().copied().collect();
    if n == 0 || n % 2 == 1 {
        return Err(DyckError::BadPartition(format!("n = {n} must be positive and even")));
    }
    if rset.len() != r.len() || sset.len() != s.len() {
        return Err(DyckError::BadPartition("repeated index".into()));
    }
    if rset.len() != n as usize / 2 || sset.len() != n as usize / 2 {
        return Err(DyckError::BadPartition("both sides need n/2 indices".into()));
    }
    if !rset.is_disjoint(&sset) || rset.union(&sset).any(|&v| v == 0 || v > n) {
        return Err(DyckError::BadPartition(format!("sets must partition 1..={n}")));
    }
    let n_in_r = rset.contains(&n);
    let ups = if n_in_r { &sset } else { &rset };

    let m = n as usize - 1;
    let delta = |i: usize| if ups.contains(&(i as u32 + 1)) { 1i32 } else { -1 };
    let mut h = 0;
    let mut best = (0, 0usize);
    for j in 0..m {
        if h <= best.0 {
            best = (h, j);
        }
        h += delta(j);
    }
    let start = best.1;

    let mut stack: Vec<u32> = Vec::new();
    let mut matched = Vec::new();
    let leftover = start as u32 + 1;
    for off in 1..m {
        let i = (start + off) % m;
        let label = i as u32 + 1;
        if delta(i) > 0 {
            stack.push(label);
        } else {
            let up = stack.pop().ok_or_else(|| DyckError::BadPartition("cycle lemma failed".into()))?;
            matched.push((up, label));
        }
    }
    matched.sort_unstable();
    matched.push((leftover, n));
    if n_in_r {
        for p in &mut matched {
            *p = (p.1, p.0);
        }
    }
    Ok(matched)
}

/// Number of crossing pairs of arcs when the points sit on a line.
pub fn crossing_number(pairs: &[(u32, u32)]) -> usize {
    let arcs: Vec<(u32, u32)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let mut count = 0;
    for (i, &(a, b)) in arcs.iter().enumerate() {
        for &(c, d) in &arcs[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                count += 1;
            }
        }
    }
    count
}
