//! Sparse multivariate polynomials over the rationals.
//!
//! Exponent vectors are stored with trailing zeros trimmed, so a polynomial
//! in the variables `x0..x6` interoperates with one mentioning only `x0`;
//! variables are identified by index and named only at display time.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rat::{format_rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Vec<u32>, Rat>,
}

fn trim(mut exps: Vec<u32>) -> Vec<u32> {
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

impl MultiPoly {
    pub fn constant(c: Rat) -> Self {
        let mut p = MultiPoly::default();
        p.add_to(Vec::new(), c);
        p
    }

    /// The variable with the given index.
    pub fn var(i: usize) -> Self {
        let mut exps = vec![0; i + 1];
        exps[i] = 1;
        let mut p = MultiPoly::default();
        p.add_to(exps, Rat::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_to(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let exps = trim(exps);
        let entry = self.terms.entry(exps.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return MultiPoly::default();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * s))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    /// Degree in one variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|e| e.get(var).copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `x_var^power` as a polynomial in the other variables.
    pub fn coeff_of(&self, var: usize, power: u32) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (e, c) in &self.terms {
            if e.get(var).copied().unwrap_or(0) == power {
                let mut e = e.clone();
                if var < e.len() {
                    e[var] = 0;
                }
                out.add_to(e, c.clone());
            }
        }
        out
    }

    /// Substitutes a polynomial for one variable.
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> MultiPoly {
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one()];
        let mut out = MultiPoly::default();
        for (e, c) in &self.terms {
            let k = e.get(var).copied().unwrap_or(0) as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap().clone() * value.clone();
                powers.push(next);
            }
            let mut e = e.clone();
            if var < e.len() {
                e[var] = 0;
            }
            let mut mono = MultiPoly::default();
            mono.add_to(e, c.clone());
            out = out + mono * powers[k].clone();
        }
        out
    }

    pub fn substitute_rat(&self, var: usize, value: &Rat) -> MultiPoly {
        self.substitute(var, &MultiPoly::constant(value.clone()))
    }

    /// The value of a variable-free polynomial.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Renders with the given variable names, highest-degree terms last in
    /// the map's deterministic order.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mut piece = format_rat(c);
            for (i, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let name = names.get(i).copied().unwrap_or("?");
                if p == 1 {
                    piece.push_str(&format!("*{name}"));
                } else {
                    piece.push_str(&format!("*{name}^{p}"));
                }
            }
            parts.push(piece);
        }
        parts.join(" + ")
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        let mut out = self;
        for (e, c) in rhs.terms {
            out.add_to(e, c);
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let n = e1.len().max(e2.len());
                let mut e = vec![0u32; n];
                for (i, item) in e.iter_mut().enumerate() {
                    *item = e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0);
                }
                out.add_to(e, c1 * c2);
            }
        }
        out
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(Rat::one())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 8] = ["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"];
        write!(f, "{}", self.to_string_with(&NAMES))
    }
}
