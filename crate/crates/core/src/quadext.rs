//! Scalars `a + b*sqrt(D)` of a quadratic extension of the rationals.
//!
//! The radicand travels with every scalar. A scalar with vanishing radical
//! part is plain rational and carries radicand zero, so rationals mix freely
//! with any extension; two nonrational scalars interoperate only when their
//! radicands agree, and mixing distinct radicands is a hard panic rather
//! than a coercion.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{self, exact_sqrt, format_rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    rational_part: Rat,
    radical_part: Rat,
    radicand: Rat,
}

impl QuadExt {
    /// Builds `a + b*sqrt(d)`. A zero radical part or a perfect-square
    /// radicand collapses to a plain rational.
    pub fn new(a: Rat, b: Rat, d: Rat) -> Self {
        if b.is_zero() || d.is_zero() {
            return Self::from_rat(a);
        }
        if let Some(s) = exact_sqrt(&d) {
            return Self::from_rat(a + b * s);
        }
        QuadExt {
            rational_part: a,
            radical_part: b,
            radicand: d,
        }
    }

    pub fn from_rat(a: Rat) -> Self {
        QuadExt {
            rational_part: a,
            radical_part: Rat::zero(),
            radicand: Rat::zero(),
        }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: Rat) -> Self {
        Self::new(Rat::zero(), Rat::one(), d)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.rational_part
    }

    pub fn radical_part(&self) -> &Rat {
        &self.radical_part
    }

    pub fn radicand(&self) -> &Rat {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radical_part.is_zero()
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.rational_part)
    }

    /// Radicand shared by two scalars, treating rationals as wildcards.
    fn joint_radicand(&self, other: &Self) -> Rat {
        if self.is_rational() {
            other.radicand.clone()
        } else if other.is_rational() {
            self.radicand.clone()
        } else if self.radicand == other.radicand {
            self.radicand.clone()
        } else {
            panic!(
                "{}",
                Error::RadicandMismatch(
                    format_rat(&self.radicand),
                    format_rat(&other.radicand)
                )
            );
        }
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            rational_part: self.rational_part.clone(),
            radical_part: -self.radical_part.clone(),
            radicand: self.radicand.clone(),
        }
    }

    /// Field norm `a^2 - b^2 d`.
    pub fn norm(&self) -> Rat {
        &self.rational_part * &self.rational_part
            - &self.radical_part * &self.radical_part * &self.radicand
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::ExtDivisionByZero);
        }
        Ok(QuadExt::new(
            &self.rational_part / &n,
            -&self.radical_part / &n,
            self.radicand.clone(),
        ))
    }

    /// Exact sign as -1, 0, or 1. Requires a positive radicand (a real
    /// embedding) when the radical part is nonzero.
    pub fn sign(&self) -> i32 {
        if self.radical_part.is_zero() {
            return rat::sign(&self.rational_part);
        }
        assert!(
            rat::sign(&self.radicand) > 0,
            "sign of a quadratic-extension scalar needs a positive radicand"
        );
        let sa = rat::sign(&self.rational_part);
        let sb = rat::sign(&self.radical_part);
        if sa == sb || sa == 0 {
            return sb;
        }
        if sb == 0 {
            return sa;
        }
        // Opposite signs: compare a^2 against b^2 d.
        let a2 = &self.rational_part * &self.rational_part;
        let b2d = &self.radical_part * &self.radical_part * &self.radicand;
        match a2.cmp(&b2d) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", format_rat(&self.rational_part))
        } else {
            write!(
                f,
                "{} + {}*sqrt({})",
                format_rat(&self.rational_part),
                format_rat(&self.radical_part),
                format_rat(&self.radicand)
            )
        }
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        let d = self.joint_radicand(&rhs);
        QuadExt::new(
            self.rational_part + rhs.rational_part,
            self.radical_part + rhs.radical_part,
            d,
        )
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        self + (-rhs)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            rational_part: -self.rational_part,
            radical_part: -self.radical_part,
            radicand: self.radicand,
        }
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        let d = self.joint_radicand(&rhs);
        let a = &self.rational_part * &rhs.rational_part
            + &self.radical_part * &rhs.radical_part * &d;
        let b = &self.rational_part * &rhs.radical_part
            + &self.radical_part * &rhs.rational_part;
        QuadExt::new(a, b, d)
    }
}

impl Div for QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: QuadExt) -> QuadExt {
        let inv = rhs.inverse().expect("division by zero quadratic-extension scalar");
        self * inv
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::from_rat(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.radical_part.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::from_rat(Rat::one())
    }
}

impl From<Rat> for QuadExt {
    fn from(r: Rat) -> Self {
        QuadExt::from_rat(r)
    }
}
