//! Exact barycentric geometry on the unit triangle `P1 P2 P3`.
//!
//! Points are homogeneous coordinates `(α1, α2, α3)` with `Σ α_i = 1`, stored
//! as arbitrary-precision rationals. Floats appear only in [`CartPoint`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::index::{Orient, TriIndex};

/// A point of the unit triangle in exact homogeneous coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaryPoint(pub [BigRational; 3]);

/// A point in the plane with `P1 = (0,0)`, `P2 = (1,0)`, `P3 = (1/2, √3/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartPoint {
    pub x: f64,
    pub y: f64,
}

fn ratio(n: u64, d: u64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl BaryPoint {
    /// Builds a point from three rationals; `None` unless they lie in
    /// `[0,1]` and sum to one.
    pub fn new(a: [BigRational; 3]) -> Option<BaryPoint> {
        let sum = &a[0] + &a[1] + &a[2];
        let in_range = a
            .iter()
            .all(|x| !x.is_negative() && *x <= BigRational::one());
        (sum.is_one() && in_range).then_some(BaryPoint(a))
    }

    /// Builds `(n1/d, n2/d, n3/d)`.
    pub fn from_ratios(n: [u64; 3], d: u64) -> Option<BaryPoint> {
        BaryPoint::new([ratio(n[0], d), ratio(n[1], d), ratio(n[2], d)])
    }

    /// The vertex `P_i` (zero-based `i`).
    pub fn vertex(i: usize) -> BaryPoint {
        let mut a = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ];
        a[i] = BigRational::one();
        BaryPoint(a)
    }

    pub fn centroid() -> BaryPoint {
        let third = ratio(1, 3);
        BaryPoint([third.clone(), third.clone(), third])
    }

    pub fn coord(&self, i: usize) -> &BigRational {
        &self.0[i]
    }

    /// Mirror image in the median through `P_i`: swaps the two coordinates
    /// other than `i`.
    pub fn swapped_except(&self, i: usize) -> BaryPoint {
        let (a, b) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let mut c = self.0.clone();
        c.swap(a, b);
        BaryPoint(c)
    }

    /// Cartesian image, rounded to `f64` at the end.
    pub fn to_cart(&self) -> CartPoint {
        let a2 = self.0[1].to_f64().unwrap_or(f64::NAN);
        let a3 = self.0[2].to_f64().unwrap_or(f64::NAN);
        CartPoint {
            x: a2 + 0.5 * a3,
            y: a3 * 3f64.sqrt() / 2.0,
        }
    }

    /// Exact squared Euclidean distance. For a difference vector `d` with
    /// `Σ d_i = 0` on a unit-side equilateral triangle this is
    /// `-(d1 d2 + d1 d3 + d2 d3)`.
    pub fn dist_sq(&self, other: &BaryPoint) -> BigRational {
        let d: Vec<BigRational> = (0..3).map(|i| &self.0[i] - &other.0[i]).collect();
        -(&d[0] * &d[1] + &d[0] * &d[2] + &d[1] * &d[2])
    }

    /// Least common denominator of the three coordinates.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }
}

impl fmt::Display for BaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Exact determinant test: `true` iff the three points are collinear.
pub fn collinear(a: &BaryPoint, b: &BaryPoint, c: &BaryPoint) -> bool {
    let m = [&a.0, &b.0, &c.0];
    let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    det.is_zero()
}

/// The vertices `(A1, A2, A3)` of triangle `t` at scale `s`, where `A_i` is
/// the image of `P_i`.
pub fn vertices(t: &TriIndex, s: u64) -> [BaryPoint; 3] {
    std::array::from_fn(|i| {
        let c = std::array::from_fn(|j| {
            let k = t.k[j];
            let num = match (t.orient, i == j) {
                (Orient::Up, true) | (Orient::Down, false) => k + 1,
                _ => k,
            };
            ratio(num, s)
        });
        BaryPoint(c)
    })
}

/// The projection map onto `t` at scale `s`, i.e. the affine map sending
/// `P_i` to the vertex `A_i` of `t`.
pub fn project_point(t: &TriIndex, s: u64, p: &BaryPoint) -> BaryPoint {
    let s = BigRational::from_integer(BigInt::from(s));
    let c = std::array::from_fn(|i| {
        let k = BigRational::from_integer(BigInt::from(t.k[i]));
        let num = match t.orient {
            Orient::Up => k + &p.0[i],
            Orient::Down => k + BigRational::one() - &p.0[i],
        };
        num / &s
    });
    BaryPoint(c)
}

/// The subdivision triangle at scale `s` whose vertices are exactly `vs`,
/// in order.
pub fn locate_triangle(vs: &[BaryPoint; 3], s: u64) -> Option<TriIndex> {
    let scale = BigRational::from_integer(BigInt::from(s));
    let scaled = |i: usize, j: usize| &vs[i].0[j] * &scale;
    let mut lo = [0u64; 3];
    let mut hi = [0u64; 3];
    for j in 0..3 {
        let column: Vec<BigRational> = (0..3).map(|i| scaled(i, j)).collect();
        let min = column.iter().min()?;
        let max = column.iter().max()?;
        if !min.is_integer() || !max.is_integer() {
            return None;
        }
        lo[j] = min.to_integer().to_u64()?;
        hi[j] = max.to_integer().to_u64()?;
    }
    let up = TriIndex {
        orient: Orient::Up,
        k: lo,
    };
    if up.is_valid(s) && vertices(&up, s) == *vs {
        return Some(up);
    }
    let down = TriIndex {
        orient: Orient::Down,
        k: hi.map(|h| h.wrapping_sub(1)),
    };
    (down.is_valid(s) && vertices(&down, s) == *vs).then_some(down)
}

/// Whether `p` lies in the closed triangle `t` at scale `s`.
pub fn contains_point(t: &TriIndex, s: u64, p: &BaryPoint) -> bool {
    (0..3).all(|i| {
        let scaled = &p.0[i] * BigRational::from_integer(BigInt::from(s));
        match t.orient {
            Orient::Up => scaled >= BigRational::from_integer(BigInt::from(t.k[i])),
            Orient::Down => scaled <= BigRational::from_integer(BigInt::from(t.k[i] + 1)),
        }
    })
}

/// Whether triangle `inner` at scale `inner_scale` lies inside `outer` at
/// scale `outer_scale`.
pub fn contains_triangle(
    outer: &TriIndex,
    outer_scale: u64,
    inner: &TriIndex,
    inner_scale: u64,
) -> bool {
    vertices(inner, inner_scale)
        .iter()
        .all(|v| contains_point(outer, outer_scale, v))
}
