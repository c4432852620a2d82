use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::geometry::Vec2;

/// An exact vector of `Z²`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticeVector {
    pub x: i64,
    pub y: i64,
}

impl From<[i64; 2]> for LatticeVector {
    fn from([x, y]: [i64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<LatticeVector> for [i64; 2] {
    fn from(v: LatticeVector) -> Self {
        [v.x, v.y]
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl LatticeVector {
    pub const ZERO: Self = Self { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn gcd(self) -> i64 {
        self.x.gcd(&self.y)
    }

    /// `gcd(|x|, |y|) = 1`. The zero vector is not primitive.
    pub fn is_primitive(self) -> bool {
        self.gcd() == 1
    }

    pub fn cross(self, other: Self) -> i128 {
        self.x as i128 * other.y as i128 - self.y as i128 * other.x as i128
    }

    pub fn dot(self, other: Self) -> i128 {
        self.x as i128 * other.x as i128 + self.y as i128 * other.y as i128
    }

    pub fn norm_sq(self) -> i128 {
        self.dot(self)
    }

    /// Positive multiple of `other` (both non-zero).
    pub fn same_direction(self, other: Self) -> bool {
        self.cross(other) == 0 && self.dot(other) > 0
    }

    pub fn to_vec2(self) -> Vec2 {
        Vec2::new(self.x as f64, self.y as f64)
    }

    /// 0 for angles in `[0, π)`, 1 for `[π, 2π)`.
    fn half(self) -> u8 {
        if self.y > 0 || (self.y == 0 && self.x > 0) {
            0
        } else {
            1
        }
    }
}

impl Add for LatticeVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for LatticeVector {
    fn add_assign(&mut self, o: Self) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for LatticeVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for LatticeVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl Sum for LatticeVector {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a LatticeVector> for LatticeVector {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.copied().sum()
    }
}

/// Anticlockwise angular order starting at angle 0 (inclusive), computed with
/// exact integer arithmetic. Vectors with the same direction are ordered by
/// increasing length.
pub fn slope_cmp(a: LatticeVector, b: LatticeVector) -> Ordering {
    a.half()
        .cmp(&b.half())
        .then_with(|| 0.cmp(&a.cross(b)))
        .then_with(|| a.norm_sq().cmp(&b.norm_sq()))
}

/// Sorts by [`slope_cmp`]. Zero vectors have no slope and must not be passed.
pub fn slope_order(vectors: impl IntoIterator<Item = LatticeVector>) -> Vec<LatticeVector> {
    let mut v: Vec<LatticeVector> = vectors.into_iter().collect();
    debug_assert!(v.iter().all(|z| !z.is_zero()), "zero vector has no slope");
    v.sort_by(|a, b| slope_cmp(*a, *b));
    v
}
