//! Linear algebra over a prime field F_q, q < 2³¹.

pub(crate) fn mod_pow(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    acc
}

pub(crate) fn mod_inv(a: u64, q: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(q));
    mod_pow(a, q - 2, q)
}

pub(crate) fn primitive_root(q: u64) -> u64 {
    let factors = crate::util::prime_divisors((q - 1) as u128);
    (2..q).find(|&g| factors.iter().all(|&r| mod_pow(g, (q - 1) / r, q) != 1)).expect("prime field has a generator")
}

/// Row-reduces in place; returns pivot columns.
pub(crate) fn rref(rows: &mut Vec<Vec<u64>>, q: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = mod_inv(rows[r][c], q);
        for x in rows[r].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + q - f * rows[r][j] % q) % q;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of {x : M x = 0} for a square matrix M.
pub(crate) fn nullspace(m: &[Vec<u64>], q: u64) -> Vec<Vec<u64>> {
    let n = m.first().map_or(0, Vec::len);
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, q);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = (q - rows[r][f]) % q;
            }
            v
        })
        .collect()
}

pub(crate) fn determinant(m: &[Vec<u64>], q: u64) -> u64 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = 1u64;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| a[i][c] != 0) else { return 0 };
        if p != c {
            a.swap(p, c);
            det = (q - det) % q;
        }
        det = det * a[c][c] % q;
        let inv = mod_inv(a[c][c], q);
        for i in c + 1..n {
            if a[i][c] != 0 {
                let f = a[i][c] * inv % q;
                for j in c..n {
                    a[i][j] = (a[i][j] + q - f * a[c][j] % q) % q;
                }
            }
        }
    }
    det
}

/// Roots in F_q of det(M − λI), found from the interpolated characteristic polynomial.
pub(crate) fn eigenvalues(m: &[Vec<u64>], q: u64) -> Vec<u64> {
    let n = m.len();
    let eval_at = |lambda: u64| {
        let shifted: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { (m[i][j] + q - lambda) % q } else { m[i][j] }).collect())
            .collect();
        determinant(&shifted, q)
    };
    // Too few field elements to interpolate through: test each one.
    if n as u64 >= q {
        return (0..q).filter(|&x| eval_at(x) == 0).collect();
    }
    // Newton interpolation through λ = 0..n.
    let ys: Vec<u64> = (0..=n as u64).map(eval_at).collect();
    let mut coef = ys.clone();
    for level in 1..=n {
        for i in (level..=n).rev() {
            let diff = (coef[i] + q - coef[i - 1]) % q;
            coef[i] = diff * mod_inv(level as u64, q) % q;
        }
    }
    let poly_at = |x: u64| {
        let mut acc = coef[n];
        for i in (0..n).rev() {
            acc = (acc * ((x + q - i as u64 % q) % q) + coef[i]) % q;
        }
        acc
    };
    (0..q).filter(|&x| poly_at(x) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_helpers() {
        assert_eq!(mod_inv(3, 7), 5);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(mod_pow(2, 10, 1000), 24);
    }

    #[test]
    fn eigen_and_nullspace() {
        let q = 31;
        let m = vec![vec![2, 1, 0], vec![0, 2, 0], vec![0, 0, 5]];
        let mut ev = eigenvalues(&m, q);
        ev.sort();
        assert_eq!(ev, vec![2, 5]);
        let shifted = vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 3]];
        assert_eq!(nullspace(&shifted, q), vec![vec![1, 0, 0]]);
        assert_eq!(determinant(&m, q), 20);
    }

    #[test]
    fn eigenvalues_when_dimension_exceeds_field() {
        // diag(1, 2, 2, 0, 1, 1, 2, 0, 0) over F_3
        let d = [1, 2, 2, 0, 1, 1, 2, 0, 0];
        let m: Vec<Vec<u64>> = (0..9).map(|i| (0..9).map(|j| if i == j { d[i] } else { 0 }).collect()).collect();
        assert_eq!(eigenvalues(&m, 3), vec![0, 1, 2]);
    }
}
