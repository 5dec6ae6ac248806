//! Dominant eigenvalues of small non-negative integer matrices.
//!
//! The characteristic polynomial is computed exactly. The largest real root
//! is isolated by bisection whose every step is certified by a Sturm
//! sequence, and is reported in closed form when it is an integer or a
//! quadratic surd.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Upper bound on the width of a certified interval: `2^-41 < 1e-12`.
pub const INTERVAL_BITS: u32 = 41;

/// An exact real number `(p + q·√r) / d` with `r` square-free, `d > 0` and
/// `gcd(p, q, d) = 1`. Rationals have `q = 0` and `r = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub d: BigInt,
}

impl QuadSurd {
    pub fn integer(v: impl Into<BigInt>) -> QuadSurd {
        QuadSurd {
            p: v.into(),
            q: BigInt::zero(),
            r: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// `(p + q·√r) / d`, reduced. Requires `r ≥ 0` and `d ≠ 0`.
    pub fn new(p: BigInt, q: BigInt, r: BigInt, d: BigInt) -> QuadSurd {
        assert!(!r.is_negative() && !d.is_zero());
        let (mut p, mut q, mut r, mut d) = (p, q, r, d);
        if r.is_zero() || q.is_zero() {
            q = BigInt::zero();
            r = BigInt::zero();
        } else {
            let (s, rest) = split_square(&r);
            q *= s;
            r = rest;
            if r.is_one() {
                p += &q;
                q = BigInt::zero();
                r = BigInt::zero();
            }
        }
        if d.is_negative() {
            p = -p;
            q = -q;
            d = -d;
        }
        let g = p.gcd(&q).gcd(&d);
        if !g.is_zero() && !g.is_one() {
            p /= &g;
            q /= &g;
            d /= &g;
        }
        QuadSurd { p, q, r, d }
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.d.is_one()
    }

    pub fn to_f64(&self) -> f64 {
        let f = |x: &BigInt| x.to_f64().unwrap_or(f64::NAN);
        (f(&self.p) + f(&self.q) * f(&self.r).sqrt()) / f(&self.d)
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, x: &BigRational) -> Ordering {
        // Compare q√r with x·d - p, both sides scaled by x's denominator.
        let lhs_q = &self.q * x.denom();
        let rhs = x.numer() * &self.d - &self.p * x.denom();
        if self.q.is_zero() {
            return BigInt::zero().cmp(&rhs);
        }
        match (lhs_q.is_negative(), rhs.is_negative()) {
            (false, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            (false, false) => (&lhs_q * &lhs_q * &self.r).cmp(&(&rhs * &rhs)),
            (true, true) => (&rhs * &rhs).cmp(&(&lhs_q * &lhs_q * &self.r)),
        }
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = if self.q.is_zero() {
            self.p.to_string()
        } else {
            let root = if self.q.is_one() {
                format!("√{}", self.r)
            } else if self.q == -BigInt::one() {
                format!("-√{}", self.r)
            } else {
                format!("{}√{}", self.q, self.r)
            };
            if self.p.is_zero() {
                root
            } else if self.q.is_negative() {
                format!("{}{}", self.p, root)
            } else {
                format!("{}+{}", self.p, root)
            }
        };
        if self.d.is_one() {
            f.write_str(&num)
        } else if self.q.is_zero() || self.p.is_zero() {
            write!(f, "{num}/{}", self.d)
        } else {
            write!(f, "({num})/{}", self.d)
        }
    }
}

/// Writes `r = s² · rest` with `rest` square-free, by trial division. Very
/// large `r` is returned unsplit.
fn split_square(r: &BigInt) -> (BigInt, BigInt) {
    let Some(mut rest) = r.to_u64() else {
        return (BigInt::one(), r.clone());
    };
    let mut s: u64 = 1;
    let mut f: u64 = 2;
    while f.saturating_mul(f) <= rest {
        while rest % (f * f) == 0 {
            rest /= f * f;
            s *= f;
        }
        f += 1;
    }
    (BigInt::from(s), BigInt::from(rest))
}

/// Coefficients of `det(xI - A)`, lowest degree first; the last one is 1.
pub fn characteristic_polynomial(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.dim();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut mk = IntMatrix::zeros(n);
    for k in 1..=n {
        mk = &(a * &mk) + &scaled_identity(n, &c[n - k + 1]);
        let am = a * &mk;
        let trace: BigInt = (0..n).map(|i| am[(i, i)].clone()).sum();
        c[n - k] = -trace / BigInt::from(k);
    }
    c
}

fn scaled_identity(n: usize, s: &BigInt) -> IntMatrix {
    let mut m = IntMatrix::zeros(n);
    for i in 0..n {
        m[(i, i)] = s.clone();
    }
    m
}

/// Human-readable polynomial, highest degree first.
pub fn polynomial_to_string(c: &[BigInt]) -> String {
    let mut out = String::new();
    for (deg, coef) in c.iter().enumerate().rev() {
        if coef.is_zero() {
            continue;
        }
        let mag = coef.abs();
        if out.is_empty() {
            if coef.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if coef.is_negative() { " - " } else { " + " });
        }
        let show_mag = !mag.is_one() || deg == 0;
        if show_mag {
            out.push_str(&mag.to_string());
        }
        match deg {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{deg}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

type Poly = Vec<BigRational>;

fn to_rational_poly(c: &[BigInt]) -> Poly {
    c.iter().cloned().map(BigRational::from_integer).collect()
}

fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &[BigRational]) -> Poly {
    let mut d: Poly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    if d.is_empty() {
        d.push(BigRational::zero());
    }
    d
}

fn is_zero_poly(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn remainder(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut r: Poly = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db && !is_zero_poly(&r) {
        let dr = r.len() - 1;
        let factor = &r[dr] / lead;
        for (i, c) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = &r[idx] - &factor * c;
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut r);
    r
}

/// Sturm sequence `p, p', -rem(p, p'), …`, each member scaled by a
/// positive constant to integer coefficients. Members are evaluated at
/// dyadic points `a / 2^k`, so no rationals are needed during bisection.
struct Sturm {
    seq: Vec<Vec<BigInt>>,
}

impl Sturm {
    fn new(p: &[BigRational]) -> Sturm {
        let mut seq = vec![p.to_vec()];
        let d = derivative(p);
        if !is_zero_poly(&d) {
            seq.push(d);
            loop {
                let n = seq.len();
                let r = remainder(&seq[n - 2], &seq[n - 1]);
                if is_zero_poly(&r) {
                    break;
                }
                seq.push(r.into_iter().map(|c| -c).collect());
            }
        }
        Sturm {
            seq: seq.iter().map(|p| integer_multiple(p)).collect(),
        }
    }

    fn variations(signs: impl Iterator<Item = Sign>) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for s in signs.filter(|&s| s != Sign::NoSign) {
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in `(a / 2^k, ∞)`. The point must not be a root.
    fn roots_above(&self, a: &BigInt, k: u32) -> usize {
        let at_x = Sturm::variations(self.seq.iter().map(|p| dyadic_sign(p, a, k)));
        let at_inf =
            Sturm::variations(self.seq.iter().map(|p| p.last().expect("non-empty").sign()));
        at_x - at_inf
    }
}

/// `p` times the lcm of its denominators.
fn integer_multiple(p: &[BigRational]) -> Vec<BigInt> {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect()
}

/// Sign of `p(a / 2^k)`, from `2^(k·deg) p(a / 2^k)` by Horner's rule.
fn dyadic_sign(p: &[BigInt], a: &BigInt, k: u32) -> Sign {
    let d = p.len() - 1;
    let mut h = p[d].clone();
    for (step, c) in p[..d].iter().rev().enumerate() {
        h = h * a + (c << (k as usize * (step + 1)));
    }
    h.sign()
}

/// Divides out `(x - r)` as often as it divides `p`.
fn deflate(p: &[BigRational], r: &BigRational) -> Poly {
    let mut p = p.to_vec();
    while p.len() > 1 && eval(&p, r).is_zero() {
        let n = p.len() - 1;
        let mut q = vec![BigRational::zero(); n];
        let mut carry = BigRational::zero();
        for i in (0..n).rev() {
            carry = &p[i + 1] + &carry * r;
            q[i] = carry.clone();
        }
        p = q;
    }
    p
}

fn integer_roots(p: &[BigRational]) -> Option<Vec<BigInt>> {
    let lead = p.last()?;
    let scale = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c / lead * BigRational::from_integer(scale.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let mut ints = ints;
    if ints.iter().all(Zero::is_zero) {
        return Some(roots);
    }
    while ints.len() > 1 && ints[0].is_zero() {
        roots.push(BigInt::zero());
        ints.remove(0);
    }
    let c0 = ints[0].abs().to_u64()?;
    if c0 > 1_000_000_000_000 {
        return None;
    }
    let poly = to_rational_poly(&ints);
    let mut d: u64 = 1;
    while d * d <= c0 {
        if c0 % d == 0 {
            for cand in [d, c0 / d] {
                for s in [BigInt::from(cand), -BigInt::from(cand)] {
                    if !roots.contains(&s)
                        && eval(&poly, &BigRational::from_integer(s.clone())).is_zero()
                    {
                        roots.push(s);
                    }
                }
            }
        }
        d += 1;
    }
    Some(roots)
}

/// A certified largest real root of a characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    /// `det(xI - A)`, lowest degree first.
    pub char_poly: Vec<BigInt>,
    /// The root lies in `[lo, hi]`.
    pub lo: BigRational,
    pub hi: BigRational,
    /// Closed form when the root is an integer or a quadratic surd.
    pub exact: Option<QuadSurd>,
}

impl Spectrum {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> f64 {
        ((&self.lo + &self.hi) / BigInt::from(2))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Best `f64` value: the closed form if known, else the midpoint.
    pub fn value(&self) -> f64 {
        match &self.exact {
            Some(q) => q.to_f64(),
            None => self.midpoint(),
        }
    }

    /// Whether the root is certified to be strictly greater than `x`.
    pub fn exceeds(&self, x: &BigRational) -> bool {
        match &self.exact {
            Some(q) => q.cmp_rational(x) == Ordering::Greater,
            None => self.lo > *x,
        }
    }

    pub fn describe(&self) -> String {
        match &self.exact {
            Some(q) => q.to_string(),
            None => format!(
                "[{:.15}, {:.15}]",
                self.lo.to_f64().unwrap_or(f64::NAN),
                self.hi.to_f64().unwrap_or(f64::NAN)
            ),
        }
    }
}

/// The Perron root of a 2×2 or 3×3 irreducible non-negative matrix.
pub fn dominant_eigenvalue(a: &IntMatrix) -> Result<Spectrum> {
    if !(2..=3).contains(&a.dim()) {
        return Err(Error::DegenerateSize(a.dim()));
    }
    if !a.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    if !is_irreducible(a) {
        return Err(Error::Reducible);
    }
    perron_root(a)
}

/// `(I + A)^n` has no zero entry.
pub fn is_irreducible(a: &IntMatrix) -> bool {
    let n = a.dim();
    let mut b = a.clone();
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] = if a[(i, j)].is_positive() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
    }
    (&IntMatrix::identity(n) + &b).pow(n as u64).is_positive()
}

/// The largest real eigenvalue (the spectral radius) of any non-negative
/// square matrix.
pub fn perron_root(a: &IntMatrix) -> Result<Spectrum> {
    let n = a.dim();
    if n == 0 {
        return Err(Error::DegenerateSize(0));
    }
    if !a.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    let char_poly = characteristic_polynomial(a);
    let p = to_rational_poly(&char_poly);

    let max_diag = (0..n).map(|i| a[(i, i)].clone()).max().expect("n > 0");
    let max_row = a.row_sums().into_iter().max().expect("n > 0");
    let lo_int = max_diag - 1;
    let hi_int = max_row + 1;

    // The largest integer root in range, if any; everything above it is a
    // root of the deflated polynomial.
    let mut top_int = None;
    let mut x: BigInt = &hi_int - 1;
    while x >= lo_int {
        if eval(&p, &BigRational::from_integer(x.clone())).is_zero() {
            top_int = Some(x.clone());
            break;
        }
        x -= 1;
    }
    // Bisection runs on numerators over 2^k.
    let (work, mut lo) = match &top_int {
        Some(r) => (
            deflate(&p, &BigRational::from_integer(r.clone())),
            r.clone(),
        ),
        None => (p.clone(), lo_int),
    };
    let mut hi = hi_int;
    let sturm = Sturm::new(&work);

    if work.len() == 1 || sturm.roots_above(&lo, 0) == 0 {
        let r = top_int.expect("a non-negative matrix has a real eigenvalue at least its diagonal");
        return Ok(Spectrum {
            char_poly,
            lo: BigRational::from_integer(r.clone()),
            hi: BigRational::from_integer(r.clone()),
            exact: Some(QuadSurd::integer(r)),
        });
    }

    let mut k: u32 = 0;
    while (&hi - &lo) << INTERVAL_BITS as usize > BigInt::one() << k as usize {
        lo <<= 1;
        hi <<= 1;
        k += 1;
        let mid: BigInt = (&lo + &hi) >> 1;
        // `mid` is never a root: the range holds no integer roots of
        // `work`, and a monic integer polynomial has no other rational
        // roots.
        if sturm.roots_above(&mid, k) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let denom = BigInt::one() << k as usize;
    let lo = BigRational::new(lo, denom.clone());
    let hi = BigRational::new(hi, denom);

    let exact = quadratic_form(&work, &lo, &hi);
    Ok(Spectrum {
        char_poly,
        lo,
        hi,
        exact,
    })
}

/// Closed form of the root in `[lo, hi]` when deflating integer roots
/// leaves a quadratic.
fn quadratic_form(p: &[BigRational], lo: &BigRational, hi: &BigRational) -> Option<QuadSurd> {
    let mut q = p.to_vec();
    for r in integer_roots(p)? {
        q = deflate(&q, &BigRational::from_integer(r));
    }
    if q.len() != 3 {
        return None;
    }
    let a = &q[2];
    let b = (&q[1] / a).clone();
    let c = (&q[0] / a).clone();
    if !b.is_integer() || !c.is_integer() {
        return None;
    }
    let (b, c) = (b.to_integer(), c.to_integer());
    let disc = &b * &b - BigInt::from(4) * &c;
    if disc.is_negative() {
        return None;
    }
    let root = QuadSurd::new(-b, BigInt::one(), disc, BigInt::from(2));
    let inside =
        root.cmp_rational(lo) != Ordering::Less && root.cmp_rational(hi) != Ordering::Greater;
    inside.then_some(root)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn characteristic_polynomial_of_example_matrix() {
        let a = m(&[vec![3, 1, 1], vec![1, 3, 1], vec![1, 3, 3]]);
        assert_eq!(characteristic_polynomial(&a), ints(&[-16, 22, -9, 1]));
        assert_eq!(
            polynomial_to_string(&characteristic_polynomial(&a)),
            "x^3 - 9x^2 + 22x - 16"
        );
    }

    #[test]
    fn dominant_root_is_certified_and_exact() {
        let a = m(&[vec![3, 1, 1], vec![1, 3, 1], vec![1, 3, 3]]);
        let s = dominant_eigenvalue(&a).unwrap();
        assert_eq!(
            s.exact,
            Some(QuadSurd::new(7.into(), 1.into(), 17.into(), 2.into()))
        );
        assert_eq!(s.exact.as_ref().unwrap().to_string(), "(7+√17)/2");
        assert!(s.width() <= BigRational::new(1.into(), BigInt::from(10).pow(12)));
        let theta = (7.0 + 17f64.sqrt()) / 2.0;
        assert!((s.midpoint() - theta).abs() < 1e-12);
        let p = to_rational_poly(&s.char_poly);
        assert!(eval(&p, &s.lo).is_negative() != eval(&p, &s.hi).is_negative());
    }

    #[test]
    fn integer_roots_are_exact() {
        let s = dominant_eigenvalue(&m(&[vec![2, 1], vec![1, 2]])).unwrap();
        assert_eq!(s.exact, Some(QuadSurd::integer(3)));
        assert_eq!(s.lo, s.hi);
        let s = perron_root(&m(&[vec![4]])).unwrap();
        assert_eq!(s.exact, Some(QuadSurd::integer(4)));
        let s = perron_root(&m(&[vec![0, 0], vec![0, 0]])).unwrap();
        assert_eq!(s.exact, Some(QuadSurd::integer(0)));
    }

    #[test]
    fn errors() {
        assert_eq!(
            dominant_eigenvalue(&IntMatrix::identity(3)),
            Err(Error::Reducible)
        );
        assert_eq!(
            dominant_eigenvalue(&IntMatrix::identity(4)),
            Err(Error::DegenerateSize(4))
        );
        assert_eq!(
            dominant_eigenvalue(&m(&[vec![1, -1], vec![1, 1]])),
            Err(Error::NegativeEntry)
        );
    }

    #[test]
    fn cubic_without_closed_form() {
        // Characteristic polynomial x^3 - 2x^2 - x + 1, no rational roots.
        let a = m(&[vec![2, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]);
        let s = perron_root(&a).unwrap();
        assert!(s.exact.is_none());
        let p = to_rational_poly(&s.char_poly);
        assert!(eval(&p, &s.lo).is_negative() && eval(&p, &s.hi).is_positive());
    }

    #[test]
    fn surd_reduction_and_comparison() {
        let l = QuadSurd::new(10.into(), 1.into(), 68.into(), 2.into());
        assert_eq!(l, QuadSurd::new(5.into(), 1.into(), 17.into(), 1.into()));
        assert_eq!(l.to_string(), "5+√17");
        assert_eq!(
            QuadSurd::new(10.into(), 1.into(), 64.into(), 2.into()),
            QuadSurd::integer(9)
        );
        let x = BigRational::from_integer(9.into());
        assert_eq!(l.cmp_rational(&x), Ordering::Greater);
        assert_eq!(QuadSurd::integer(9).cmp_rational(&x), Ordering::Equal);
        let neg = QuadSurd::new(1.into(), (-1).into(), 2.into(), 1.into());
        assert_eq!(neg.cmp_rational(&BigRational::zero()), Ordering::Less);
        assert_eq!(neg.to_string(), "1-√2");
    }
}
