//! Points of `N = Z^3`, forms in `M = Hom(N, Z)` and the integer helpers both
//! of them need.

use core::fmt;
use core::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;

/// Extended Euclid: returns `(g, s, t)` with `g = gcd(a, b) >= 0` and
/// `s*a + t*b = g`. `gcd_ext(0, 0)` is `(0, 0, 0)`.
pub fn gcd_ext(a: &Int, b: &Int) -> (Int, Int, Int) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Int::one(), Int::zero());
    let (mut old_t, mut t) = (Int::zero(), Int::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = core::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = core::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = core::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else if old_r.is_zero() {
        (Int::zero(), Int::zero(), Int::zero())
    } else {
        (old_r, old_s, old_t)
    }
}

/// Non-negative gcd of a slice of integers; 0 for an all-zero slice.
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a Int>) -> Int {
    values.into_iter().fold(Int::zero(), |acc, v| acc.gcd(v))
}

pub(crate) fn int(v: i64) -> Int {
    Int::from(v)
}

macro_rules! vec3_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name {
            pub coords: [Int; 3],
        }

        impl $name {
            pub fn new(x: Int, y: Int, z: Int) -> Self {
                Self { coords: [x, y, z] }
            }

            pub fn zero() -> Self {
                Self::new(Int::zero(), Int::zero(), Int::zero())
            }

            pub fn is_zero(&self) -> bool {
                self.coords.iter().all(Zero::is_zero)
            }

            /// Gcd of the coordinates; 0 only for the zero vector.
            pub fn content(&self) -> Int {
                gcd_all(&self.coords)
            }

            /// The vector divided by the gcd of its coordinates.
            pub fn primitive(&self) -> Result<Self> {
                let g = self.content();
                if g.is_zero() {
                    return Err(Error::NoPrimitiveDirection);
                }
                Ok(self.map(|c| c / &g))
            }

            pub fn is_primitive(&self) -> bool {
                self.content().is_one()
            }

            pub fn scale(&self, k: &Int) -> Self {
                self.map(|c| c * k)
            }

            fn map(&self, f: impl Fn(&Int) -> Int) -> Self {
                Self::new(f(&self.coords[0]), f(&self.coords[1]), f(&self.coords[2]))
            }

            /// Coordinates as `i64`, if they all fit.
            pub fn to_i64(&self) -> Option<[i64; 3]> {
                use num_traits::ToPrimitive;
                Some([
                    self.coords[0].to_i64()?,
                    self.coords[1].to_i64()?,
                    self.coords[2].to_i64()?,
                ])
            }
        }

        impl From<[i64; 3]> for $name {
            fn from(c: [i64; 3]) -> Self {
                Self::new(int(c[0]), int(c[1]), int(c[2]))
            }
        }

        impl From<[Int; 3]> for $name {
            fn from(coords: [Int; 3]) -> Self {
                Self { coords }
            }
        }

        impl Index<usize> for $name {
            type Output = Int;
            fn index(&self, i: usize) -> &Int {
                &self.coords[i]
            }
        }

        impl<'a> Add<&'a $name> for &'a $name {
            type Output = $name;
            fn add(self, rhs: &'a $name) -> $name {
                $name::new(
                    &self.coords[0] + &rhs.coords[0],
                    &self.coords[1] + &rhs.coords[1],
                    &self.coords[2] + &rhs.coords[2],
                )
            }
        }

        impl<'a> Sub<&'a $name> for &'a $name {
            type Output = $name;
            fn sub(self, rhs: &'a $name) -> $name {
                $name::new(
                    &self.coords[0] - &rhs.coords[0],
                    &self.coords[1] - &rhs.coords[1],
                    &self.coords[2] - &rhs.coords[2],
                )
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                self.map(|c| -c)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({}, {}, {})", self.coords[0], self.coords[1], self.coords[2])
            }
        }
    };
}

vec3_type!(
    /// An element of the lattice `N = Z^3`.
    LatticePoint
);

vec3_type!(
    /// An element of the dual lattice `M = Hom(N, Z)`.
    DualVector
);

impl DualVector {
    /// The duality pairing `<self, p>`.
    pub fn pair(&self, p: &LatticePoint) -> Int {
        dot(&self.coords, &p.coords)
    }
}

impl LatticePoint {
    /// Cross product of two points, read as a linear form vanishing on both.
    pub fn cross(&self, other: &LatticePoint) -> DualVector {
        DualVector::from(cross3(&self.coords, &other.coords))
    }

    /// Lexicographic minimum/maximum of two points.
    pub fn ordered<'a>(
        a: &'a LatticePoint,
        b: &'a LatticePoint,
    ) -> (&'a LatticePoint, &'a LatticePoint) {
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

pub(crate) fn dot(a: &[Int; 3], b: &[Int; 3]) -> Int {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub(crate) fn cross3(a: &[Int; 3], b: &[Int; 3]) -> [Int; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// `det(a | b | c)` for three column vectors.
pub fn det_columns(a: &LatticePoint, b: &LatticePoint, c: &LatticePoint) -> Int {
    dot(&a.cross(b).coords, &c.coords)
}
