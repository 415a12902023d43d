//! Trigonometric polynomials `sum c_k cos(kt) + s_k sin(kt)` with rational
//! coefficients, with exact root counting on one period of the circle via
//! the half-angle substitution `z = tan(t/2)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{format_rat, Rat};
use crate::unipoly::{RootCount, UniPoly};

/// Map from frequency to `(cosine coefficient, sine coefficient)`; frequency
/// zero stores the constant term in the cosine slot.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TrigPoly {
    terms: BTreeMap<u32, (Rat, Rat)>,
}

impl TrigPoly {
    pub fn constant(c: Rat) -> Self {
        let mut p = TrigPoly::default();
        p.add_term(0, c, Rat::zero());
        p
    }

    /// `c * cos(k t)`
    pub fn cos_term(k: u32, c: Rat) -> Self {
        let mut p = TrigPoly::default();
        p.add_term(k as i64, c, Rat::zero());
        p
    }

    /// `s * sin(k t)`
    pub fn sin_term(k: u32, s: Rat) -> Self {
        let mut p = TrigPoly::default();
        p.add_term(k as i64, Rat::zero(), s);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat, &Rat)> {
        self.terms.iter().map(|(&k, (c, s))| (k, c, s))
    }

    pub fn max_frequency(&self) -> u32 {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    /// Folds a signed frequency into the nonnegative-frequency normal form
    /// (`cos(-kt) = cos(kt)`, `sin(-kt) = -sin(kt)`), dropping zero terms.
    fn add_term(&mut self, freq: i64, dc: Rat, ds: Rat) {
        let (k, dc, ds) = if freq < 0 {
            ((-freq) as u32, dc, -ds)
        } else {
            (freq as u32, dc, ds)
        };
        let entry = self
            .terms
            .entry(k)
            .or_insert_with(|| (Rat::zero(), Rat::zero()));
        entry.0 += dc;
        if k != 0 {
            entry.1 += ds;
        }
        let (c, s) = &self.terms[&k];
        if c.is_zero() && s.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn derivative(&self) -> TrigPoly {
        let mut out = TrigPoly::default();
        for (k, c, s) in self.terms() {
            if k == 0 {
                continue;
            }
            let kr = Rat::from_integer(k.into());
            out.add_term(k as i64, &kr * s, -(&kr * c));
        }
        out
    }

    /// Exact value at `t = pi`: `sum c_k (-1)^k`.
    pub fn eval_at_pi(&self) -> Rat {
        let mut acc = Rat::zero();
        for (k, c, _) in self.terms() {
            if k % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Order of vanishing at `t = pi` (0 when the value is nonzero).
    pub fn multiplicity_at_pi(&self) -> usize {
        let mut p = self.clone();
        let bound = 2 * self.max_frequency() as usize + 2;
        for m in 0..=bound {
            if !p.eval_at_pi().is_zero() {
                return m;
            }
            p = p.derivative();
        }
        panic!("trigonometric polynomial vanishes to infinite order at pi");
    }

    /// Numerator polynomial of the half-angle substitution: with
    /// `z = tan(t/2)` and `N` the maximal frequency,
    /// `self(t) * (1 + z^2)^N` is the returned polynomial in `z`.
    pub fn half_angle_poly(&self) -> UniPoly {
        let n = self.max_frequency();
        let one_plus_z2 =
            UniPoly::from_coeffs(vec![Rat::one(), Rat::zero(), Rat::one()]);
        // (C_k, S_k): numerators of cos(kt), sin(kt) over (1+z^2)^k,
        // via (C + iS) -> (C + iS) * ((1 - z^2) + 2iz).
        let re0 = UniPoly::from_coeffs(vec![Rat::one(), Rat::zero(), -Rat::one()]);
        let im0 = UniPoly::from_coeffs(vec![Rat::zero(), Rat::from_integer(2.into())]);
        let mut ck = UniPoly::one();
        let mut sk = UniPoly::zero();
        let mut acc = UniPoly::zero();
        let mut scale = {
            // (1+z^2)^(N-k) for k = 0
            let mut s = UniPoly::one();
            for _ in 0..n {
                s = s * one_plus_z2.clone();
            }
            s
        };
        for k in 0..=n {
            if let Some((c, s)) = self.terms.get(&k) {
                acc = acc
                    + ck.scale(c) * scale.clone()
                    + sk.scale(s) * scale.clone();
            }
            if k < n {
                let next_c = ck.clone() * re0.clone() - sk.clone() * im0.clone();
                let next_s = sk.clone() * re0.clone() + ck.clone() * im0.clone();
                ck = next_c;
                sk = next_s;
                scale = scale.divmod(&one_plus_z2).0;
            }
        }
        acc
    }

    /// Exact count of distinct roots in one period `[0, 2*pi)`. Rejects the
    /// identically-zero input. The count never exceeds twice the maximal
    /// frequency.
    pub fn root_count(&self) -> Result<RootCount> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let at_pi = self.eval_at_pi().is_zero();
        let mult_at_pi = at_pi && self.multiplicity_at_pi() > 1;
        let p = self.half_angle_poly();
        let interior = if p.is_zero() {
            // The whole chart contribution vanished: only possible when the
            // polynomial is supported at t = pi alone, which cannot happen
            // for a nonzero trigonometric polynomial.
            unreachable!("half-angle polynomial of a nonzero trigonometric polynomial is zero")
        } else if p.degree() == Some(0) {
            RootCount {
                distinct: 0,
                has_multiple: false,
            }
        } else {
            p.real_root_count()?
        };
        Ok(RootCount {
            distinct: interior.distinct + at_pi as usize,
            has_multiple: interior.has_multiple || mult_at_pi,
        })
    }

    /// Total number of roots in `[0, 2*pi)` counted with multiplicity.
    pub fn roots_with_multiplicity(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.half_angle_poly();
        let interior = if p.degree().unwrap_or(0) >= 1 {
            p.real_roots_with_multiplicity()?
        } else {
            0
        };
        Ok(interior + self.multiplicity_at_pi())
    }
}

impl Add for TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: TrigPoly) -> TrigPoly {
        let mut out = self;
        for (k, (c, s)) in rhs.terms {
            out.add_term(k as i64, c, s);
        }
        out
    }
}

impl Sub for TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: TrigPoly) -> TrigPoly {
        self + (-rhs)
    }
}

impl Neg for TrigPoly {
    type Output = TrigPoly;
    fn neg(mut self) -> TrigPoly {
        for (c, s) in self.terms.values_mut() {
            *c = -c.clone();
            *s = -s.clone();
        }
        self
    }
}

impl Mul for TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: TrigPoly) -> TrigPoly {
        let half = Rat::new(1.into(), 2.into());
        let mut out = TrigPoly::default();
        for (j, cj, sj) in self.terms() {
            for (k, ck, sk) in rhs.terms() {
                let (j, k) = (j as i64, k as i64);
                // product-to-sum identities
                let cc = &(cj * ck) * &half;
                out.add_term(j + k, cc.clone(), Rat::zero());
                out.add_term(j - k, cc, Rat::zero());
                let ss = &(sj * sk) * &half;
                out.add_term(j - k, ss.clone(), Rat::zero());
                out.add_term(j + k, -ss, Rat::zero());
                let sc = &(sj * ck) * &half;
                out.add_term(j + k, Rat::zero(), sc.clone());
                out.add_term(j - k, Rat::zero(), sc);
                let cs = &(cj * sk) * &half;
                out.add_term(j + k, Rat::zero(), cs.clone());
                out.add_term(j - k, Rat::zero(), -cs);
            }
        }
        out
    }
}

impl Zero for TrigPoly {
    fn zero() -> Self {
        TrigPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for TrigPoly {
    fn one() -> Self {
        TrigPoly::constant(Rat::one())
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c, s) in self.terms() {
            for (coeff, kind) in [(c, "cos"), (s, "sin")] {
                if coeff.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if k == 0 {
                    write!(f, "{}", format_rat(coeff))?;
                } else {
                    write!(f, "({})*{}({}t)", format_rat(coeff), kind, k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};
    use rand::{Rng, SeedableRng};

    #[test]
    fn root_counts_basic() {
        let cos_t = TrigPoly::cos_term(1, rat_i(1));
        assert_eq!(cos_t.root_count().unwrap().distinct, 2);
        let cos_2t = TrigPoly::cos_term(2, rat_i(1));
        assert_eq!(cos_2t.root_count().unwrap().distinct, 4);
        let shifted = TrigPoly::constant(rat_i(3)) + TrigPoly::cos_term(1, rat_i(1));
        assert_eq!(shifted.root_count().unwrap().distinct, 0);
        assert!(TrigPoly::zero().root_count().is_err());
    }

    #[test]
    fn root_at_pi_counted_exactly() {
        // 1 + cos t vanishes only at pi, to order 2
        let p = TrigPoly::constant(rat_i(1)) + TrigPoly::cos_term(1, rat_i(1));
        let c = p.root_count().unwrap();
        assert_eq!((c.distinct, c.has_multiple), (1, true));
        assert_eq!(p.roots_with_multiplicity().unwrap(), 2);
    }

    #[test]
    fn product_to_sum() {
        // sin^2 + cos^2 = 1
        let s = TrigPoly::sin_term(1, rat_i(1));
        let c = TrigPoly::cos_term(1, rat_i(1));
        let sum = s.clone() * s + c.clone() * c;
        assert_eq!(sum, TrigPoly::one());
        // sin t * cos t = sin(2t)/2
        let s = TrigPoly::sin_term(1, rat_i(1));
        let c = TrigPoly::cos_term(1, rat_i(1));
        assert_eq!(s * c, TrigPoly::sin_term(2, rat(1, 2)));
    }

    #[test]
    fn derivative_rules() {
        let c = TrigPoly::cos_term(1, rat_i(1));
        assert_eq!(c.derivative(), TrigPoly::sin_term(1, rat_i(-1)));
        let s = TrigPoly::sin_term(3, rat_i(2));
        assert_eq!(s.derivative(), TrigPoly::cos_term(3, rat_i(6)));
    }

    #[test]
    fn count_bounded_by_twice_max_frequency() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..60 {
            let mut p = TrigPoly::zero();
            for k in 0..=rng.gen_range(1..4u32) {
                p = p + TrigPoly::cos_term(k, rat_i(rng.gen_range(-3..4)))
                    + TrigPoly::sin_term(k, rat_i(rng.gen_range(-3..4)));
            }
            if p.is_zero() {
                continue;
            }
            let c = p.root_count().unwrap();
            assert!(c.distinct <= 2 * p.max_frequency() as usize);
        }
    }
}
