//! Univariate polynomials with exact coefficients, and Sturm-sequence real
//! root counting over intervals of the real line.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Ring;
use crate::rat::{self, format_rat, Rat};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`,
/// trailing zeros stripped so the zero polynomial has an empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type UniPoly = Poly<Rat>;

impl<T: Ring> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                // i * c without requiring From<usize>
                let mut acc = T::zero();
                for _ in 0..i {
                    acc = acc + c.clone();
                }
                acc
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Coefficient-wise map into another scalar type.
    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Ring> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Ring> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Ring> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", format_rat(c))?,
                1 => write!(f, "({})*x", format_rat(c))?,
                _ => write!(f, "({})*x^{}", format_rat(c), i)?,
            }
        }
        Ok(())
    }
}

/// Interval endpoint for root counting.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

/// Outcome of a distinct-root count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootCount {
    pub distinct: usize,
    /// True when some root in the interval is a multiple root of the input.
    pub has_multiple: bool,
}

impl UniPoly {
    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn divmod(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = Rat::one() / divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading().unwrap() * &lead_inv;
            quot[rd - dd] = f.clone();
            let sub = divisor.scale(&f) * UniPoly::monomial(Rat::one(), rd - dd);
            rem = rem - sub;
        }
        (UniPoly::from_coeffs(quot), rem)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        if let Some(lc) = a.leading() {
            let inv = Rat::one() / lc.clone();
            a = a.scale(&inv);
        }
        a
    }

    /// The square-free part `p / gcd(p, p')`, monic up to the leading sign.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.divmod(&g).0
    }

    fn sign_at(&self, x: &Rat) -> i32 {
        rat::sign(&self.eval(x))
    }

    fn sign_at_bound(&self, b: &Bound) -> i32 {
        match b {
            Bound::Finite(x) => self.sign_at(x),
            Bound::PosInf => self.leading().map_or(0, rat::sign),
            Bound::NegInf => match self.degree() {
                None => 0,
                Some(d) => {
                    let s = rat::sign(self.leading().unwrap());
                    if d % 2 == 0 {
                        s
                    } else {
                        -s
                    }
                }
            },
        }
    }

    fn sturm_chain(&self) -> Vec<UniPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let len = chain.len();
            if chain[len - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[len - 1].degree() == Some(0) {
                break;
            }
            let (_, r) = chain[len - 2].divmod(&chain[len - 1]);
            chain.push(-r);
        }
        chain
    }

    fn sign_variations(chain: &[UniPoly], b: &Bound) -> usize {
        let mut last = 0;
        let mut variations = 0;
        for p in chain {
            let s = p.sign_at_bound(b);
            if s != 0 {
                if last != 0 && s != last {
                    variations += 1;
                }
                last = s;
            }
        }
        variations
    }

    /// Exact count of distinct real roots in the open interval `(lo, hi)`,
    /// by Sturm's theorem applied to the square-free part. The companion
    /// flag reports whether any counted root is a multiple root of `self`.
    pub fn sturm_count(&self, lo: &Bound, hi: &Bound) -> Result<RootCount> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sf = self.squarefree_part();
        let distinct = if sf.degree() == Some(0) {
            0
        } else {
            let chain = sf.sturm_chain();
            let va = Self::sign_variations(&chain, lo);
            let vb = Self::sign_variations(&chain, hi);
            // With zeros skipped, the variation count at a point equals the
            // right-limit count, so V(lo) - V(hi) counts roots in (lo, hi]
            // and a root exactly at hi must be discarded.
            let at_hi = match hi {
                Bound::Finite(x) => (sf.sign_at(x) == 0) as usize,
                _ => 0,
            };
            va - vb - at_hi
        };
        let mut has_multiple = false;
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) >= 1 {
            let gsf = g.squarefree_part();
            if gsf.degree().unwrap_or(0) >= 1 {
                let chain = gsf.sturm_chain();
                let va = Self::sign_variations(&chain, lo);
                let vb = Self::sign_variations(&chain, hi);
                let at_hi = match hi {
                    Bound::Finite(x) => (gsf.sign_at(x) == 0) as usize,
                    _ => 0,
                };
                has_multiple = va - vb - at_hi > 0;
            }
        }
        Ok(RootCount {
            distinct,
            has_multiple,
        })
    }

    /// Count of distinct real roots over the whole line.
    pub fn real_root_count(&self) -> Result<RootCount> {
        self.sturm_count(&Bound::NegInf, &Bound::PosInf)
    }

    /// Total number of real roots counted with multiplicity.
    pub fn real_roots_with_multiplicity(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut total = 0;
        let mut g = self.clone();
        while g.degree().unwrap_or(0) >= 1 {
            total += g.real_root_count()?.distinct;
            g = g.gcd(&g.derivative());
        }
        Ok(total)
    }
}

/// `prod (x - r)` over the given roots.
pub fn poly_from_roots(roots: &[Rat]) -> UniPoly {
    roots.iter().fold(UniPoly::one(), |acc, r| {
        acc * UniPoly::from_coeffs(vec![-r.clone(), Rat::one()])
    })
}
