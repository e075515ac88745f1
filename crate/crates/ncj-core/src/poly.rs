//! Univariate polynomials (coefficients low → high): characteristic polynomials and
//! roots in the base field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::field::{Field, Scalar};
use crate::linalg::Matrix;

/// Largest prime for which roots are found by exhaustive search.
pub const EXHAUSTIVE_PRIME_LIMIT: u64 = 1 << 20;
/// Largest |coefficient| whose divisors are enumerated in the rational root test.
const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

pub fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut r = x.field().zero();
    for c in poly.iter().rev() {
        r = &(&r * x) + c;
    }
    r
}

fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.len() > 1 && p.last().map_or(false, Scalar::is_zero) {
        p.pop();
    }
    p
}

/// Characteristic polynomial det(x·I − M), monic, via Hessenberg reduction.
pub fn charpoly(m: &Matrix) -> Vec<Scalar> {
    assert_eq!(m.rows, m.cols, "charpoly of a non-square matrix");
    let n = m.rows;
    let f = m.field;
    let mut h: Vec<Vec<Scalar>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    for k in 1..n.saturating_sub(1) {
        let Some(piv) = (k..n).find(|&i| !h[i][k - 1].is_zero()) else { continue };
        if piv != k {
            h.swap(piv, k);
            for row in h.iter_mut() {
                row.swap(piv, k);
            }
        }
        let inv = h[k][k - 1].inv().unwrap();
        for i in k + 1..n {
            if h[i][k - 1].is_zero() {
                continue;
            }
            let t = &h[i][k - 1] * &inv;
            for j in 0..n {
                let d = &t * &h[k][j];
                h[i][j] = &h[i][j] - &d;
            }
            for row in h.iter_mut() {
                let d = &t * &row[i];
                row[k] = &row[k] + &d;
            }
        }
    }
    // p_m(x) = (x − h_{m−1,m−1}) p_{m−1} − Σ_i (Π subdiagonal) h_{m−i−1,m−1} p_{m−i−1}
    let mut ps: Vec<Vec<Scalar>> = vec![vec![f.one()]];
    for mm in 1..=n {
        let prev = &ps[mm - 1];
        let mut p = vec![f.zero(); mm + 1];
        for (d, c) in prev.iter().enumerate() {
            p[d + 1] = &p[d + 1] + c;
            p[d] = &p[d] - &(c * &h[mm - 1][mm - 1]);
        }
        let mut t = f.one();
        for i in 1..mm {
            t = &t * &h[mm - i][mm - i - 1];
            let coef = &t * &h[mm - i - 1][mm - 1];
            if coef.is_zero() {
                continue;
            }
            for (d, c) in ps[mm - i - 1].iter().enumerate() {
                p[d] = &p[d] - &(&coef * c);
            }
        }
        ps.push(p);
    }
    ps.pop().unwrap()
}

/// Divides by (x − r); the remainder must vanish.
fn deflate(p: &[Scalar], r: &Scalar) -> Vec<Scalar> {
    let n = p.len() - 1;
    let mut q = vec![r.field().zero(); n];
    let mut carry = r.field().zero();
    for d in (1..=n).rev() {
        carry = &(&carry * r) + &p[d];
        q[d - 1] = carry.clone();
    }
    q
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > DIVISOR_LIMIT {
        return None;
    }
    let mut ds = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            ds.push(BigInt::from(d));
            if d * d != n {
                ds.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(ds)
}

/// Roots with multiplicity, plus the leftover factor with no roots found in the field.
/// `complete` is false when the search was abandoned (huge coefficients or primes).
#[derive(Clone, Debug)]
pub struct Roots {
    pub roots: Vec<(Scalar, usize)>,
    pub rest: Vec<Scalar>,
    pub complete: bool,
}

pub fn roots(poly: &[Scalar], field: Field) -> Roots {
    let mut p = trim(poly.to_vec());
    let mut found: Vec<(Scalar, usize)> = Vec::new();
    let mut take = |p: &mut Vec<Scalar>, r: Scalar| {
        let mut k = 0;
        while p.len() > 1 && eval(p, &r).is_zero() {
            *p = deflate(p, &r);
            k += 1;
        }
        if k > 0 {
            found.push((r, k));
        }
    };
    let complete = match field {
        Field::Prime(q) => {
            if q > EXHAUSTIVE_PRIME_LIMIT {
                take(&mut p, field.zero());
                false
            } else {
                for v in 0..q {
                    if p.len() <= 1 {
                        break;
                    }
                    take(&mut p, field.int(v as i64));
                }
                true
            }
        }
        Field::Rational => {
            take(&mut p, field.zero());
            if p.len() <= 1 {
                true
            } else {
                // integer coefficients
                let den = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.as_rational().unwrap().denom()));
                let ints: Vec<BigInt> =
                    p.iter().map(|c| (c.as_rational().unwrap() * BigRational::from_integer(den.clone())).to_integer()).collect();
                match (divisors(&ints[0]), divisors(ints.last().unwrap())) {
                    (Some(num), Some(dens)) => {
                        let mut cands: Vec<BigRational> = Vec::new();
                        for a in &num {
                            for b in &dens {
                                for s in [a.clone(), -a.clone()] {
                                    let c = BigRational::new(s, b.clone());
                                    if !cands.contains(&c) {
                                        cands.push(c);
                                    }
                                }
                            }
                        }
                        cands.sort_by(|x, y| x.abs().cmp(&y.abs()).then(x.cmp(y)));
                        for c in cands {
                            if p.len() <= 1 {
                                break;
                            }
                            take(&mut p, Scalar::Q(c));
                        }
                        true
                    }
                    _ => false,
                }
            }
        }
    };
    Roots { roots: found, rest: p, complete }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn charpoly_small() {
        let m = Matrix::from_ints(Q, &[&[2, 1], &[1, 2]]);
        // x² − 4x + 3
        assert_eq!(charpoly(&m), vec![Q.int(3), Q.int(-4), Q.one()]);
        let j = Matrix::from_ints(Q, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(charpoly(&j), vec![Q.int(-1), Q.zero(), Q.zero(), Q.one()]);
    }

    #[test]
    fn rational_roots_and_leftover() {
        // (x − 1/2)² (x² + 1)
        let p = vec![Q.ratio(1, 4), Q.int(-1), Q.ratio(5, 4), Q.int(-1), Q.one()];
        let r = roots(&p, Q);
        assert_eq!(r.roots, vec![(Q.half(), 2)]);
        assert_eq!(r.rest, vec![Q.one(), Q.zero(), Q.one()]);
        let f7 = Field::prime(7).unwrap();
        let r = roots(&[f7.int(-2), f7.zero(), f7.one()], f7);
        assert_eq!(r.roots.len(), 2);
    }
}
