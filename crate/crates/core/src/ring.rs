//! Exact arithmetic in ℤ[√2] with overflow-checked 128-bit components.

use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// The element `a + b√2` of ℤ[√2].
///
/// Since 1 and √2 are linearly independent over ℚ, the pair `(a, b)` is the
/// unique representation, so derived equality is equality of real numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub a: i128,
    pub b: i128,
}

impl QuadInt {
    pub const ZERO: QuadInt = QuadInt { a: 0, b: 0 };
    pub const ONE: QuadInt = QuadInt { a: 1, b: 0 };

    pub const fn new(a: i128, b: i128) -> Self {
        QuadInt { a, b }
    }

    pub const fn from_int(a: i128) -> Self {
        QuadInt { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn checked_add(self, rhs: QuadInt) -> Result<QuadInt> {
        Ok(QuadInt {
            a: self.a.checked_add(rhs.a).ok_or(Error::Overflow("QuadInt::add"))?,
            b: self.b.checked_add(rhs.b).ok_or(Error::Overflow("QuadInt::add"))?,
        })
    }

    pub fn checked_sub(self, rhs: QuadInt) -> Result<QuadInt> {
        Ok(QuadInt {
            a: self.a.checked_sub(rhs.a).ok_or(Error::Overflow("QuadInt::sub"))?,
            b: self.b.checked_sub(rhs.b).ok_or(Error::Overflow("QuadInt::sub"))?,
        })
    }

    pub fn checked_neg(self) -> Result<QuadInt> {
        Ok(QuadInt {
            a: self.a.checked_neg().ok_or(Error::Overflow("QuadInt::neg"))?,
            b: self.b.checked_neg().ok_or(Error::Overflow("QuadInt::neg"))?,
        })
    }

    /// `(a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2`.
    pub fn checked_mul(self, rhs: QuadInt) -> Result<QuadInt> {
        const SITE: &str = "QuadInt::mul";
        let ac = self.a.checked_mul(rhs.a).ok_or(Error::Overflow(SITE))?;
        let bd = self.b.checked_mul(rhs.b).ok_or(Error::Overflow(SITE))?;
        let ad = self.a.checked_mul(rhs.b).ok_or(Error::Overflow(SITE))?;
        let bc = self.b.checked_mul(rhs.a).ok_or(Error::Overflow(SITE))?;
        let two_bd = bd.checked_mul(2).ok_or(Error::Overflow(SITE))?;
        Ok(QuadInt {
            a: ac.checked_add(two_bd).ok_or(Error::Overflow(SITE))?,
            b: ad.checked_add(bc).ok_or(Error::Overflow(SITE))?,
        })
    }

    /// Exact sign of the real number `a + b√2`.
    ///
    /// With mixed signs the larger of `a²` and `2b²` decides; the squares are
    /// compared as 256-bit unsigned integers so this never overflows.
    pub fn sign(self) -> i8 {
        let sa = self.a.signum() as i8;
        let sb = self.b.signum() as i8;
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sb == 0 {
            return sa;
        }
        let a2 = square_wide(self.a.unsigned_abs());
        let b2 = square_wide(self.b.unsigned_abs());
        // 2b² as a 256-bit value: shift left by one across the limbs.
        let two_b2 = (b2.0 << 1 | b2.1 >> 127, b2.1 << 1);
        match a2.cmp(&two_b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            // a² = 2b² forces a = b = 0 because √2 is irrational.
            Ordering::Equal => unreachable!("a^2 = 2b^2 with nonzero integers"),
        }
    }

    /// Largest absolute component, for magnitude bookkeeping.
    pub fn max_abs_component(self) -> u128 {
        self.a.unsigned_abs().max(self.b.unsigned_abs())
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * core::f64::consts::SQRT_2
    }
}

/// Full 256-bit square of a 128-bit value, as `(high, low)` limbs.
fn square_wide(x: u128) -> (u128, u128) {
    mul_wide(x, x)
}

fn mul_wide(x: u128, y: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (x1, x0) = (x >> 64, x & MASK);
    let (y1, y0) = (y >> 64, y & MASK);
    let p00 = x0 * y0;
    let p01 = x0 * y1;
    let p10 = x1 * y0;
    let p11 = x1 * y1;
    let mid = (p00 >> 64) + (p01 & MASK) + (p10 & MASK);
    let low = (p00 & MASK) | (mid << 64);
    let high = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (high, low)
}

impl From<i128> for QuadInt {
    fn from(a: i128) -> Self {
        QuadInt::from_int(a)
    }
}

/// Renders as `a+b*sqrt2`, e.g. `8+4*sqrt2`, `-2-4*sqrt2`, `3+0*sqrt2`.
impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < 0 {
            write!(f, "{}-{}*sqrt2", self.a, self.b.unsigned_abs())
        } else {
            write!(f, "{}+{}*sqrt2", self.a, self.b)
        }
    }
}
