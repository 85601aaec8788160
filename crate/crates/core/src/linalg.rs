//! Exact dense linear algebra over a scalar field.
//!
//! Matrices are row-major `Vec<Vec<S>>`.  Everything here is elementary
//! Gaussian elimination at the small dimensions (≤ 16) this crate works
//! in; no pivoting strategy beyond "first nonzero" is needed because the
//! arithmetic is exact.

use crate::scalar::{Rat, Scalar};
use num_traits::ToPrimitive;

pub type Matrix<S> = Vec<Vec<S>>;

pub fn identity<S: Scalar>(n: usize) -> Matrix<S> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { S::one() } else { S::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = S::zero();
                    for t in 0..k {
                        acc = acc + a[i][t].clone() * b[t][j].clone();
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<S: Scalar>(a: &Matrix<S>, x: &[S]) -> Vec<S> {
    a.iter()
        .map(|row| {
            let mut acc = S::zero();
            for (aij, xj) in row.iter().zip(x) {
                acc = acc + aij.clone() * xj.clone();
            }
            acc
        })
        .collect()
}

/// Reduced row echelon form; returns the nonzero rows.
pub fn rref<S: Scalar>(rows: &[Vec<S>]) -> Matrix<S> {
    let mut m: Matrix<S> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(r) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = S::one() / m[pivot_row][col].clone();
        for c in col..cols {
            m[pivot_row][c] = m[pivot_row][c].clone() * inv.clone();
        }
        for r2 in 0..m.len() {
            if r2 != pivot_row && !m[r2][col].is_zero() {
                let f = m[r2][col].clone();
                for c in col..cols {
                    m[r2][c] = m[r2][c].clone() - f.clone() * m[pivot_row][c].clone();
                }
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    m.truncate(pivot_row);
    m
}

pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    rref(rows).len()
}

/// Basis of the right null space `{x : A x = 0}`.
pub fn kernel<S: Scalar>(a: &Matrix<S>) -> Vec<Vec<S>> {
    let cols = a.first().map_or(0, |r| r.len());
    let r = rref(a);
    // Identify pivot columns.
    let mut pivots = Vec::new();
    for row in &r {
        if let Some(c) = (0..cols).find(|&c| !row[c].is_zero()) {
            pivots.push(c);
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![S::zero(); cols];
        v[free] = S::one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = S::zero() - row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Inverse via Gauss-Jordan; `None` if singular.
pub fn invert<S: Scalar>(a: &Matrix<S>) -> Option<Matrix<S>> {
    let n = a.len();
    let mut aug: Matrix<S> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let r = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, r);
        let inv = S::one() / aug[col][col].clone();
        for c in 0..2 * n {
            aug[col][c] = aug[col][c].clone() * inv.clone();
        }
        for r2 in 0..n {
            if r2 != col && !aug[r2][col].is_zero() {
                let f = aug[r2][col].clone();
                for c in 0..2 * n {
                    aug[r2][c] = aug[r2][c].clone() - f.clone() * aug[col][c].clone();
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant by fraction-free-ish Gaussian elimination (field scalars,
/// so plain elimination is fine).
pub fn det<S: Scalar>(a: &Matrix<S>) -> S {
    let n = a.len();
    let mut m = a.clone();
    let mut sign = false;
    let mut result = S::one();
    for col in 0..n {
        let Some(r) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return S::zero();
        };
        if r != col {
            m.swap(col, r);
            sign = !sign;
        }
        result = result * m[col][col].clone();
        let inv = S::one() / m[col][col].clone();
        for r2 in col + 1..n {
            if !m[r2][col].is_zero() {
                let f = m[r2][col].clone() * inv.clone();
                for c in col..n {
                    m[r2][c] = m[r2][c].clone() - f.clone() * m[col][c].clone();
                }
            }
        }
    }
    if sign {
        S::zero() - result
    } else {
        result
    }
}

/// Span membership: is `v` in the row span of `basis` (given in RREF)?
pub fn in_span<S: Scalar>(rref_basis: &Matrix<S>, v: &[S]) -> bool {
    let mut v = v.to_vec();
    for row in rref_basis {
        let Some(p) = (0..row.len()).find(|&c| !row[c].is_zero()) else {
            continue;
        };
        if !v[p].is_zero() {
            let f = v[p].clone();
            for c in 0..v.len() {
                v[c] = v[c].clone() - f.clone() * row[c].clone();
            }
        }
    }
    v.iter().all(|x| x.is_zero())
}

/// Intersection of two row-span subspaces.
pub fn intersect<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    // x in span(A) ∩ span(B)  ⇔  x = u·A = v·B; solve [Aᵀ | −Bᵀ] null space.
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let cols = a[0].len();
    let stacked: Matrix<S> = (0..cols)
        .map(|c| {
            let mut row: Vec<S> = a.iter().map(|r| r[c].clone()).collect();
            row.extend(b.iter().map(|r| S::zero() - r[c].clone()));
            row
        })
        .collect();
    let null = kernel(&stacked);
    let vectors: Matrix<S> = null
        .iter()
        .map(|uv| {
            (0..cols)
                .map(|c| {
                    let mut acc = S::zero();
                    for (i, row) in a.iter().enumerate() {
                        acc = acc + uv[i].clone() * row[c].clone();
                    }
                    acc
                })
                .collect()
        })
        .collect();
    rref(&vectors)
}

/// Characteristic polynomial coefficients `c_0 + c_1 x + … + x^n` via the
/// Faddeev–LeVerrier recursion (exact, field scalars).
pub fn char_poly<S: Scalar>(a: &Matrix<S>) -> Vec<S> {
    let n = a.len();
    let mut m = identity::<S>(n);
    let mut coeffs = vec![S::zero(); n + 1];
    coeffs[n] = S::one();
    let mut am: Matrix<S>;
    let mut current = m.clone();
    for k in 1..=n {
        am = mat_mul(a, &current);
        // c_{n−k} = −tr(A·M_{k−1}) / k
        let mut tr = S::zero();
        for i in 0..n {
            tr = tr + am[i][i].clone();
        }
        let kk = S::from_rat(&Rat::from_integer(num_bigint::BigInt::from(k as i64)));
        let c = S::zero() - tr / kk;
        coeffs[n - k] = c.clone();
        // M_k = A·M_{k−1} + c I
        m = am;
        for i in 0..n {
            m[i][i] = m[i][i].clone() + c.clone();
        }
        current = m.clone();
    }
    coeffs
}

/// Evaluate a polynomial with coefficients `c_0 + c_1 x + …` at `x`.
pub fn poly_eval<S: Scalar>(coeffs: &[S], x: &S) -> S {
    let mut acc = S::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

/// All real roots of a rational polynomial that happen to be rational,
/// found numerically (Durand–Kerner) and certified by exact evaluation
/// after a continued-fraction snap.  Roots are deduplicated.
pub fn certified_rational_roots(coeffs: &[Rat]) -> Vec<Rat> {
    use crate::scalar::rationalize;
    // Strip leading zeros and trailing zero coefficients (roots at 0).
    let mut c = coeffs.to_vec();
    while c.last().map_or(false, |x| x.is_zero()) {
        c.pop();
    }
    let mut roots = Vec::new();
    let mut low = 0usize;
    while low < c.len() && c[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Rat::from_integer(0.into()));
        c.drain(..low);
    }
    if c.len() <= 1 {
        return roots;
    }
    let f: Vec<f64> = c.iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    let n = f.len() - 1;
    // Durand–Kerner on monic normalization, complex arithmetic by hand.
    let lead = f[n];
    let mono: Vec<f64> = f.iter().map(|x| x / lead).collect();
    let mut re = vec![0.0f64; n];
    let mut im = vec![0.0f64; n];
    for k in 0..n {
        // Distinct starting points on a circle.
        let ang = 0.9 + 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
        let r = 1.0 + mono.iter().map(|x| x.abs()).fold(0.0, f64::max);
        re[k] = r * ang.cos();
        im[k] = r * ang.sin();
    }
    for _ in 0..200 {
        let mut delta: f64 = 0.0;
        for k in 0..n {
            // p(z_k)
            let (mut pr, mut pi) = (0.0f64, 0.0f64);
            for c in mono.iter().rev() {
                let nr = pr * re[k] - pi * im[k] + c;
                let ni = pr * im[k] + pi * re[k];
                pr = nr;
                pi = ni;
            }
            // ∏_{j≠k} (z_k − z_j)
            let (mut qr, mut qi) = (1.0f64, 0.0f64);
            for j in 0..n {
                if j != k {
                    let dr = re[k] - re[j];
                    let di = im[k] - im[j];
                    let nr = qr * dr - qi * di;
                    let ni = qr * di + qi * dr;
                    qr = nr;
                    qi = ni;
                }
            }
            let denom = qr * qr + qi * qi;
            if denom < 1e-300 {
                continue;
            }
            let sr = (pr * qr + pi * qi) / denom;
            let si = (pi * qr - pr * qi) / denom;
            re[k] -= sr;
            im[k] -= si;
            delta = delta.max(sr.hypot(si));
        }
        if delta < 1e-14 {
            break;
        }
    }
    for k in 0..n {
        if im[k].abs() > 1e-6 * (1.0 + re[k].abs()) {
            continue;
        }
        // Multiple roots are only resolved to about sqrt(machine eps), so
        // snap against a ladder of denominator bounds and certify exactly.
        let mut bound = 1u64;
        for _ in 0..13 {
            let cand = rationalize(re[k], bound);
            if poly_eval(&c, &cand).is_zero() {
                if !roots.contains(&cand) {
                    roots.push(cand);
                }
                break;
            }
            bound = bound.saturating_mul(10);
        }
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rint(x)).collect())
            .collect()
    }

    #[test]
    fn rref_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let r = rref(&a);
        assert_eq!(r.len(), 2);
        assert!(in_span(&r, &[rint(1), rint(3), rint(4)]));
        assert!(!in_span(&r, &[rint(0), rint(0), rint(1)]));
    }

    #[test]
    fn kernel_and_inverse() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let k = kernel(&a);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&a, &k[0]).iter().all(|x| x.is_zero()));
        assert!(invert(&a).is_none());
        let b = m(&[&[2, 1], &[1, 1]]);
        let bi = invert(&b).unwrap();
        assert_eq!(mat_mul(&b, &bi), identity::<Rat>(2));
        assert_eq!(det(&b), rint(1));
        assert_eq!(det(&a), rint(0));
    }

    #[test]
    fn char_poly_of_diagonal() {
        // diag(1,2): (x−1)(x−2) = 2 − 3x + x².
        let a = m(&[&[1, 0], &[0, 2]]);
        assert_eq!(char_poly(&a), vec![rint(2), rint(-3), rint(1)]);
    }

    #[test]
    fn certified_roots_rational_and_irrational() {
        // (x − 1/2)(x − 3)·2 = 2x² − 7x + 3.
        let p = vec![rint(3), rint(-7), rint(2)];
        assert_eq!(certified_rational_roots(&p), vec![rat(1, 2), rint(3)]);
        // x² − 2 has no rational roots.
        let q = vec![rint(-2), rint(0), rint(1)];
        assert!(certified_rational_roots(&q).is_empty());
        // x³ − x² = x²(x−1): roots 0 and 1.
        let r = vec![rint(0), rint(0), rint(-1), rint(1)];
        assert_eq!(certified_rational_roots(&r), vec![rint(0), rint(1)]);
    }

    #[test]
    fn intersection_of_spans() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = m(&[&[0, 1, 1], &[0, 0, 1]]);
        let i = intersect(&a, &b);
        assert_eq!(i, m(&[&[0, 1, 0]]));
    }
}
