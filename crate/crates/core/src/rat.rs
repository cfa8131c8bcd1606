//! Exact rational scalars and small exact linear algebra.
//!
//! Every coordinate in this crate is a [`Rat`] — a reduced fraction with
//! 128-bit numerator and denominator. The helpers here cover the handful of
//! linear-algebra routines the crate needs (Gauss–Jordan inversion, linear
//! solves, primitive integer null vectors) on the tiny matrices that arise
//! from Cartan data, where exactness matters far more than asymptotics.

use crate::error::{Error, Result};
use num::rational::Ratio;
use num::{One, Signed, Zero};

/// Exact rational scalar used for all weight coordinates and levels.
pub type Rat = Ratio<i128>;

/// Shorthand for an integer as a [`Rat`].
pub fn rat(n: i128) -> Rat {
    Rat::from_integer(n)
}

/// Shorthand for the reduced fraction `p/q`. Panics if `q == 0`.
pub fn ratq(p: i128, q: i128) -> Rat {
    Rat::new(p, q)
}

/// Parse `"p"` or `"p/q"` (optionally signed) into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::Parse(format!("expected a rational like `3` or `-1/2`, got `{s}`"));
    let (num_s, den_s) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let p: i128 = num_s.parse().map_err(|_| bad())?;
    let q: i128 = den_s.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(Rat::new(p, q))
}

/// Format a rational as `p` (integer) or `p/q` (reduced, `q > 0`).
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True if the rational is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// The integer value of `r`, or an error naming `context` if it is not one.
pub fn to_integer(r: &Rat, context: &str) -> Result<i128> {
    if is_integer(r) {
        Ok(*r.numer())
    } else {
        Err(Error::Parse(format!("{context}: `{}` is not an integer", fmt_rat(r))))
    }
}

// ---- Vectors ----

/// Componentwise `x + c·y`.
pub fn axpy(x: &[Rat], c: Rat, y: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| *a + c * *b).collect()
}

/// Plain dot product.
pub fn dot(x: &[Rat], y: &[Rat]) -> Rat {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| *a * *b).fold(Rat::zero(), |s, t| s + t)
}

/// Convert an integer vector to rationals.
pub fn to_rats(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&n| rat(n as i128)).collect()
}

// ---- Matrices (row-major `Vec<Vec<Rat>>`) ----

/// Matrix–vector product `A·x`.
pub fn mat_vec(a: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    a.iter().map(|row| dot(row, x)).collect()
}

/// Matrix product `A·B`.
pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut s = Rat::zero();
            for t in 0..k {
                s += a[i][t] * b[t][j];
            }
            out[i][j] = s;
        }
    }
    out
}

/// Exact inverse of a square matrix by Gauss–Jordan elimination with
/// partial (first nonzero) pivoting. Errors if the matrix is singular.
pub fn mat_inv(a: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            debug_assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Parse("singular matrix in inversion".into()))?;
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..2 * n {
                    let sub = f * m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solve `A·x = b` exactly for square nonsingular `A`.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Result<Vec<Rat>> {
    let inv = mat_inv(a)?;
    Ok(mat_vec(&inv, b))
}

/// The unique (up to sign) primitive positive integer vector `v` with
/// `A·v = 0`, for an integer matrix with a one-dimensional kernel whose
/// kernel contains a strictly positive vector. Used to read marks and
/// comarks off an affine Cartan matrix.
pub fn primitive_positive_null(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = a.len();
    // Reduce the rational matrix to row-echelon form.
    let mut m: Vec<Vec<Rat>> =
        a.iter().map(|row| row.iter().map(|&x| rat(x as i128)).collect()).collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..n {
        if let Some(pr) = (r..n).find(|&i| !m[i][c].is_zero()) {
            m.swap(r, pr);
            let p = m[r][c];
            for x in m[r].iter_mut() {
                *x /= p;
            }
            for i in 0..n {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c];
                    for j in 0..n {
                        let sub = f * m[r][j];
                        m[i][j] -= sub;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    if free.len() != 1 {
        return Err(Error::Parse(format!(
            "kernel dimension {} != 1 in null-vector computation",
            free.len()
        )));
    }
    let fc = free[0];
    let mut v = vec![Rat::zero(); n];
    v[fc] = Rat::one();
    for (row, &pc) in pivot_cols.iter().enumerate() {
        v[pc] = -m[row][fc];
    }
    // Clear denominators and divide by the gcd.
    let lcm = v.iter().fold(1i128, |l, x| num::integer::lcm(l, *x.denom()));
    let mut ints: Vec<i128> = v.iter().map(|x| (*x * rat(lcm)).to_integer()).collect();
    let g = ints.iter().fold(0i128, |g, &x| num::integer::gcd(g, x));
    if g != 0 {
        for x in ints.iter_mut() {
            *x /= g;
        }
    }
    if ints.iter().all(|&x| x <= 0) {
        for x in ints.iter_mut() {
            *x = -*x;
        }
    }
    if ints.iter().any(|&x| x <= 0) {
        return Err(Error::Parse("null vector is not strictly positive".into()));
    }
    Ok(ints.into_iter().map(|x| x as i64).collect())
}

/// True if `A·v = 0` for an integer matrix and integer vector.
pub fn is_null_vector(a: &[Vec<i64>], v: &[i64]) -> bool {
    a.iter().all(|row| row.iter().zip(v).map(|(&x, &y)| x * y).sum::<i64>() == 0)
}

/// Sign of a rational: -1, 0, or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "3", "-7", "1/2", "-5/3", "10/4"] {
            let r = parse_rat(s).unwrap();
            let t = fmt_rat(&r);
            assert_eq!(parse_rat(&t).unwrap(), r, "round trip failed for {s}");
        }
        assert_eq!(fmt_rat(&parse_rat("10/4").unwrap()), "5/2", "must reduce");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1/2/3").is_err());
    }

    #[test]
    fn inverse_of_cartan_a2() {
        let a = vec![vec![rat(2), rat(-1)], vec![rat(-1), rat(2)]];
        let inv = mat_inv(&a).unwrap();
        assert_eq!(inv[0][0], ratq(2, 3));
        assert_eq!(inv[0][1], ratq(1, 3));
        let id = mat_mul(&a, &inv);
        assert_eq!(id[0][0], rat(1));
        assert_eq!(id[0][1], rat(0));
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let a = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert!(mat_inv(&a).is_err());
    }

    #[test]
    fn null_vector_of_affine_a1() {
        // The order-2 affine matrix [[2,-2],[-2,2]] has kernel (1,1).
        let a = vec![vec![2, -2], vec![-2, 2]];
        assert_eq!(primitive_positive_null(&a).unwrap(), vec![1, 1]);
    }

    #[test]
    fn null_vector_of_a2_twisted() {
        // [[2,-1],[-4,2]] kills (1,2) on the right; its transpose kills (2,1).
        let a = vec![vec![2, -1], vec![-4, 2]];
        assert_eq!(primitive_positive_null(&a).unwrap(), vec![1, 2]);
        let at = vec![vec![2, -4], vec![-1, 2]];
        assert_eq!(primitive_positive_null(&at).unwrap(), vec![2, 1]);
    }

    #[test]
    fn solve_small_system() {
        let a = vec![vec![rat(2), rat(-1)], vec![rat(-1), rat(2)]];
        let x = solve(&a, &[rat(1), rat(0)]).unwrap();
        assert_eq!(x, vec![ratq(2, 3), ratq(1, 3)]);
    }
}
