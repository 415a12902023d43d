//! Total positivity for unit upper-triangular matrices: minor enumeration,
//! reduced-word factorizations of the totally positive cone, TP chains of
//! flags, and limits of lines under the `exp(tN)` flow.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Mat, MatQ};
use crate::projective::{plucker_of_rows, FlagM, Line, LineP3, PluckerVec};
use crate::rat::{self, Rat};
use crate::unipoly::UniPoly;

/// Exhaustive minor enumeration is kept to small sizes on purpose.
pub const TP_SIZE_BOUND: usize = 6;

/// Unit-diagonal upper-triangular matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct UniUpper {
    mat: MatQ,
}

impl UniUpper {
    pub fn new(mat: MatQ) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::NotUnitUpper);
        }
        let n = mat.rows();
        for i in 0..n {
            if !mat.at(i, i).is_one() {
                return Err(Error::NotUnitUpper);
            }
            for j in 0..i {
                if !mat.at(i, j).is_zero() {
                    return Err(Error::NotUnitUpper);
                }
            }
        }
        Ok(UniUpper { mat })
    }

    pub fn identity(n: usize) -> Self {
        UniUpper {
            mat: MatQ::identity(n),
        }
    }

    pub fn mat(&self) -> &MatQ {
        &self.mat
    }

    pub fn size(&self) -> usize {
        self.mat.rows()
    }

    pub fn mul(&self, other: &UniUpper) -> UniUpper {
        UniUpper {
            mat: self.mat.mul(&other.mat),
        }
    }
}

/// A minor that failed the positivity or nonnegativity requirement.
#[derive(Clone, Debug, PartialEq)]
pub struct MinorViolation {
    /// Zero-based row index set.
    pub rows: Vec<usize>,
    /// Zero-based column index set.
    pub cols: Vec<usize>,
    pub value: Rat,
}

/// A minor of a unit upper-triangular matrix with sorted row set `I` and
/// column set `J` is not forced to vanish by triangularity exactly when
/// `i_r <= j_r` for every position.
pub fn minor_is_structural(rows: &[usize], cols: &[usize]) -> bool {
    rows.iter().zip(cols).all(|(i, j)| i <= j)
}

fn scan_minors(
    m: &UniUpper,
    strict: bool,
) -> Result<Option<MinorViolation>> {
    let n = m.size();
    if n > TP_SIZE_BOUND {
        return Err(Error::SizeAboveBound {
            max: TP_SIZE_BOUND,
            got: n,
        });
    }
    for k in 1..=n {
        for rows in (0..n).combinations(k) {
            for cols in (0..n).combinations(k) {
                let structural = minor_is_structural(&rows, &cols);
                if strict && !structural {
                    continue;
                }
                let value = m.mat.minor_matrix(&rows, &cols).det()?;
                let bad = if strict {
                    rat::sign(&value) <= 0
                } else {
                    rat::sign(&value) < 0
                };
                if bad {
                    return Ok(Some(MinorViolation { rows, cols, value }));
                }
            }
        }
    }
    Ok(None)
}

/// Totally positive: every minor not forced to vanish by triangularity is
/// strictly positive.
pub fn is_tp(m: &UniUpper) -> Result<bool> {
    Ok(scan_minors(m, true)?.is_none())
}

/// First violated structural minor, if any.
pub fn tp_violation(m: &UniUpper) -> Result<Option<MinorViolation>> {
    scan_minors(m, true)
}

/// Totally nonnegative: every minor is `>= 0`.
pub fn is_tnn(m: &UniUpper) -> Result<bool> {
    Ok(scan_minors(m, false)?.is_none())
}

/// Identity plus `tau` at position `(i, i+1)`, one-based row index.
pub fn elementary(n: usize, i: usize, tau: &Rat) -> Result<UniUpper> {
    if i < 1 || i > n - 1 {
        return Err(Error::ElementaryIndex(i, n - 1));
    }
    let mut m = MatQ::identity(n);
    m.set(i - 1, i, tau.clone());
    UniUpper::new(m)
}

/// A word in the simple transpositions `1..m-1` evaluating to the longest
/// permutation of `m` letters in the minimal number of letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    m: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(m: usize, letters: Vec<usize>) -> Result<Self> {
        let expected_len = m * (m - 1) / 2;
        let check = || -> bool {
            if letters.len() != expected_len {
                return false;
            }
            let mut perm: Vec<usize> = (0..m).collect();
            for &i in &letters {
                if i < 1 || i > m - 1 {
                    return false;
                }
                perm.swap(i - 1, i);
            }
            perm == (0..m).rev().collect::<Vec<_>>()
        };
        if !check() {
            return Err(Error::NotReducedWord {
                len: letters.len(),
                m,
            });
        }
        Ok(ReducedWord { m, letters })
    }

    /// The staircase word `(1), (2,1), (3,2,1), ...`
    pub fn standard(m: usize) -> Self {
        let mut letters = Vec::new();
        for r in 1..m {
            for i in (1..=r).rev() {
                letters.push(i);
            }
        }
        Self::new(m, letters).expect("staircase word is reduced")
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Ordered product of elementary matrices along a reduced word with
/// strictly positive parameters; lands in the totally positive cone.
pub fn product_along_word(word: &ReducedWord, params: &[Rat]) -> Result<UniUpper> {
    if params.len() != word.len() {
        return Err(Error::DimensionMismatch(format!(
            "word of length {} with {} parameters",
            word.len(),
            params.len()
        )));
    }
    for p in params {
        if rat::sign(p) <= 0 {
            return Err(Error::NonpositiveParameter(rat::format_rat(p)));
        }
    }
    let mut acc = UniUpper::identity(word.size());
    for (&i, tau) in word.letters().iter().zip(params) {
        acc = acc.mul(&elementary(word.size(), i, tau)?);
    }
    Ok(acc)
}

/// A base flag together with unit upper-triangular transition steps.
#[derive(Clone, Debug)]
pub struct TPChain {
    pub base: FlagM,
    pub steps: Vec<UniUpper>,
}

/// Outcome of verifying a chain: either every step is totally positive or
/// the first offending step and minor are reported.
#[derive(Clone, Debug)]
pub enum ChainVerdict {
    TotallyPositive,
    Violation {
        step: usize,
        minor: MinorViolation,
    },
}

pub fn chain_verify(chain: &TPChain) -> Result<ChainVerdict> {
    for (idx, step) in chain.steps.iter().enumerate() {
        if let Some(minor) = tp_violation(step)? {
            return Ok(ChainVerdict::Violation { step: idx, minor });
        }
    }
    Ok(ChainVerdict::TotallyPositive)
}

/// Tangent lines carried by a chain: for each accumulated flag
/// `base * M_1 * ... * M_k` the line spanned by its first two rows. With
/// `closed_up` the Grassmannian limit of the last line under the `exp(tN)`
/// flow is appended.
pub fn chain_to_tangent_lines(chain: &TPChain, closed_up: bool) -> Result<Vec<LineP3>> {
    let mut frame = chain.base.frame().clone();
    let mut lines = Vec::new();
    let first_two = |m: &MatQ| -> Result<LineP3> {
        Line::new(Mat::from_rows(vec![m.row(0), m.row(1)]))
    };
    lines.push(first_two(&frame)?);
    for step in &chain.steps {
        frame = frame.mul(step.mat());
        lines.push(first_two(&frame)?);
    }
    if closed_up {
        let last = lines.last().expect("nonempty").clone();
        lines.push(line_limit_under_flow(&last));
    }
    Ok(lines)
}

/// Grassmannian limit of `l * exp(tN)` as `t -> +infinity`: the Pluecker
/// coordinates are polynomials in `t` and the limit is the vector of their
/// top-degree coefficients.
pub fn line_limit_under_flow(l: &LineP3) -> LineP3 {
    // exp(tN) with polynomial entries in t
    let mut exp_tn: Mat<UniPoly> = Mat::identity(4);
    for i in 0..4 {
        for j in i + 1..4 {
            let k = j - i;
            let fact: u64 = (1..=k as u64).product();
            exp_tn.set(i, j, UniPoly::monomial(Rat::new(1.into(), fact.into()), k));
        }
    }
    let rows = l.span().row_vecs();
    let poly_row = |r: &[Rat]| -> Vec<UniPoly> {
        (0..4)
            .map(|j| {
                (0..4).fold(UniPoly::zero(), |acc, i| {
                    acc + exp_tn.at(i, j).scale(&r[i])
                })
            })
            .collect()
    };
    let r1 = poly_row(&rows[0]);
    let r2 = poly_row(&rows[1]);
    let minors = plucker_of_rows(&r1, &r2);
    let top = minors
        .iter()
        .filter_map(|p| p.degree())
        .max()
        .expect("a line has a nonzero Pluecker vector");
    let leading: [Rat; 6] = minors
        .iter()
        .map(|p| p.coeff(top))
        .collect::<Vec<_>>()
        .try_into()
        .unwrap();
    PluckerVec::new(leading)
        .expect("top-degree Pluecker vector stays on the Grassmannian")
        .to_line()
}
