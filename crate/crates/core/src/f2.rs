//! Small dense linear algebra over `F_2`. Vectors are `Vec<u8>` of 0/1.

/// Basis of the left kernel `{c : c·M = 0}` of an `n × m` matrix given by rows.
pub fn left_kernel(rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    // augmented rows [M | I]
    let mut aug: Vec<Vec<u8>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut a = r.clone();
            a.extend((0..n).map(|j| u8::from(i == j)));
            a
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..m {
        let Some(r) = (pivot_row..n).find(|&r| aug[r][col] == 1) else {
            continue;
        };
        aug.swap(pivot_row, r);
        for r in 0..n {
            if r != pivot_row && aug[r][col] == 1 {
                let (src, dst) = if r < pivot_row {
                    let (lo, hi) = aug.split_at_mut(pivot_row);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = aug.split_at_mut(r);
                    (&lo[pivot_row], &mut hi[0])
                };
                xor_into(dst, src);
            }
        }
        pivot_row += 1;
    }
    aug[pivot_row..].iter().map(|a| a[m..].to_vec()).collect()
}

/// Reduced row echelon form with pivots taken left to right.
pub fn echelon(mut vs: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
    let n = vs.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<u8>> = Vec::new();
    for col in 0..n {
        let Some(i) = vs.iter().position(|v| v[col] == 1) else {
            continue;
        };
        let pivot = vs.swap_remove(i);
        for v in vs.iter_mut().chain(out.iter_mut()) {
            if v[col] == 1 {
                xor_into(v, &pivot);
            }
        }
        out.push(pivot);
    }
    out
}

pub fn xor_into(dst: &mut [u8], src: &[u8]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

pub fn xor(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

pub fn dot(a: &[u8], b: &[u8]) -> u8 {
    a.iter().zip(b).fold(0, |acc, (x, y)| acc ^ (x & y))
}

pub fn rank(rows: &[Vec<u8>]) -> usize {
    rows.len() - left_kernel(rows).len()
}

/// Some `c` with `c·M = target`, free variables set to zero.
pub fn solve_left(rows: &[Vec<u8>], target: &[u8]) -> Option<Vec<u8>> {
    let n = rows.len();
    let m = target.len();
    // transpose: M^T c = target
    let mut aug: Vec<Vec<u8>> = (0..m)
        .map(|j| {
            let mut r: Vec<u8> = rows.iter().map(|row| row[j]).collect();
            r.push(target[j]);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..n {
        let Some(r) = (pr..m).find(|&r| aug[r][col] == 1) else {
            continue;
        };
        aug.swap(pr, r);
        let pivot = aug[pr].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != pr && row[col] == 1 {
                xor_into(row, &pivot);
            }
        }
        pivots.push(col);
        pr += 1;
    }
    if aug[pr..].iter().any(|r| r[n] == 1) {
        return None;
    }
    let mut c = vec![0u8; n];
    for (i, &col) in pivots.iter().enumerate() {
        c[col] = aug[i][n];
    }
    Some(c)
}

/// All `2^k` vectors of length `k` in binary counting order.
pub fn all_vectors(k: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u64..1 << k).map(move |mask| (0..k).map(|i| ((mask >> i) & 1) as u8).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat_mul_left(c: &[u8], rows: &[Vec<u8>]) -> Vec<u8> {
        let m = rows.first().map_or(0, Vec::len);
        let mut out = vec![0u8; m];
        for (ci, r) in c.iter().zip(rows) {
            if *ci == 1 {
                xor_into(&mut out, r);
            }
        }
        out
    }

    proptest! {
        #[test]
        fn kernel_vectors_annihilate(bits in proptest::collection::vec(0u8..2, 1..40), n in 1usize..6) {
            let m = bits.len().div_ceil(n).max(1);
            let rows: Vec<Vec<u8>> = (0..n)
                .map(|i| (0..m).map(|j| bits.get(i * m + j).copied().unwrap_or(0)).collect())
                .collect();
            let ker = left_kernel(&rows);
            for c in &ker {
                prop_assert!(mat_mul_left(c, &rows).iter().all(|&b| b == 0));
            }
            prop_assert_eq!(rank(&ker), ker.len());
            prop_assert!(rank(&rows) <= m.min(n));
            for target in all_vectors(m).take(8) {
                if let Some(c) = solve_left(&rows, &target) {
                    prop_assert_eq!(mat_mul_left(&c, &rows), target);
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        let rows = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        assert_eq!(left_kernel(&rows), vec![vec![1, 1, 1]]);
        assert_eq!(rank(&rows), 2);
        assert_eq!(solve_left(&rows, &[1, 1]), Some(vec![1, 1, 0]));
        assert_eq!(solve_left(&[vec![1, 1]], &[1, 0]), None);
        assert!(left_kernel(&[]).is_empty());
    }
}
