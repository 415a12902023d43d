//! The Wronski map on polynomial subspaces, osculating lines of the cubic
//! coefficient space, and an exact inverse-Wronski solver for pencils of
//! cubics via reduction to the four-lines problem.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{det_cofactor, Field, Mat};
use crate::projective::{Line, LineP3};
use crate::quadext::QuadExt;
use crate::rat::{format_rat, rat_i, Rat};
use crate::schubert::{four_lines_solve, FourLinesReport};
use crate::unipoly::Poly;

/// A linear subspace of polynomials of degree at most `degree_bound`,
/// presented by an independent basis. Two subspaces are equal when the row
/// spans of their coefficient matrices coincide.
#[derive(Clone, Debug)]
pub struct PolySubspace<T> {
    basis: Vec<Poly<T>>,
    degree_bound: usize,
}

pub type PolySubspaceQ = PolySubspace<Rat>;

impl<T: Field> PolySubspace<T> {
    pub fn new(basis: Vec<Poly<T>>, degree_bound: usize) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::DependentBasis());
        }
        for p in &basis {
            if p.degree().unwrap_or(0) > degree_bound {
                return Err(Error::DegreeBound(degree_bound));
            }
        }
        let s = PolySubspace {
            basis,
            degree_bound,
        };
        if s.coeff_matrix().rank() != s.basis.len() {
            return Err(Error::DependentBasis());
        }
        Ok(s)
    }

    pub fn basis(&self) -> &[Poly<T>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// Rows are the coefficient vectors of the basis, padded to the degree
    /// bound.
    pub fn coeff_matrix(&self) -> Mat<T> {
        Mat::from_rows(
            self.basis
                .iter()
                .map(|p| (0..=self.degree_bound).map(|k| p.coeff(k)).collect())
                .collect(),
        )
    }

    /// Determinant of the matrix whose `r`-th row is the `(r-1)`-st
    /// derivative of the basis. A basis change multiplies the result by the
    /// change-of-basis determinant; the degree never exceeds
    /// `dim * (degree_bound - dim + 1)`.
    pub fn wronskian(&self) -> Poly<T> {
        let k1 = self.basis.len();
        let mut rows: Vec<Vec<Poly<T>>> = vec![self.basis.to_vec()];
        for r in 1..k1 {
            rows.push(rows[r - 1].iter().map(|p| p.derivative()).collect());
        }
        // transpose: column per basis element, row per derivative order
        let w = det_cofactor(&Mat::from_rows(rows)).expect("square Wronskian matrix");
        let bound = k1 * (self.degree_bound + 1 - k1);
        assert!(
            w.degree().unwrap_or(0) <= bound,
            "Wronskian degree exceeds the dimension bound"
        );
        w
    }
}

impl<T: Field> PartialEq for PolySubspace<T> {
    fn eq(&self, other: &Self) -> bool {
        self.degree_bound == other.degree_bound
            && self.dim() == other.dim()
            && self.coeff_matrix().rref().0 == other.coeff_matrix().rref().0
    }
}

/// The line in the coefficient space of cubics (basis `1, x, x^2, x^3`)
/// spanned by `(x-t)^2` and `(x-t)^3`: the pencil of cubics vanishing to
/// order two at `t`.
pub fn vanishing_line(t: &Rat) -> LineP3 {
    let t2 = t * t;
    let t3 = &t2 * t;
    Line::from_points(
        vec![t2.clone(), -(t * rat_i(2)), Rat::one(), Rat::zero()],
        vec![-t3, t2 * rat_i(3), -(t * rat_i(3)), Rat::one()],
    )
    .expect("independent for every t")
}

/// Result of the inverse Wronski problem for four distinct roots.
#[derive(Clone, Debug)]
pub struct InverseWronskiReport {
    /// The underlying four-lines computation on the vanishing lines.
    pub four_lines: FourLinesReport,
    /// The solution pencils of cubics, one per real transversal.
    pub subspaces: Vec<PolySubspace<QuadExt>>,
    /// Every subspace's Wronskian is proportional to `prod (x - t_i)`.
    pub wronskian_verified: bool,
}

fn poly_from_ext_coeffs(row: &[QuadExt]) -> Poly<QuadExt> {
    Poly::from_coeffs(row.to_vec())
}

/// Proportionality of two nonzero polynomials by cross-multiplying leading
/// coefficients.
fn proportional(p: &Poly<QuadExt>, q: &Poly<QuadExt>) -> bool {
    match (p.leading(), q.leading()) {
        (Some(lp), Some(lq)) => p.scale(lq) == q.scale(lp),
        _ => false,
    }
}

/// Finds the 2-dimensional subspaces of cubics whose Wronskian vanishes
/// exactly at the four given parameters: solves the four-lines problem on
/// the vanishing lines and reads each transversal's span as a pair of
/// coefficient vectors.
pub fn inverse_wronski4(ts: &[Rat; 4]) -> Result<InverseWronskiReport> {
    for i in 0..4 {
        for j in i + 1..4 {
            if ts[i] == ts[j] {
                return Err(Error::RepeatedParameter(format_rat(&ts[i])));
            }
        }
    }
    let lines: Vec<LineP3> = ts.iter().map(vanishing_line).collect();
    let four_lines = four_lines_solve(&lines[0], &lines[1], &lines[2], &lines[3])?;
    let target: Poly<QuadExt> = ts.iter().fold(Poly::one(), |acc, t| {
        acc * Poly::from_coeffs(vec![
            QuadExt::from_rat(-t.clone()),
            QuadExt::one(),
        ])
    });
    let mut subspaces = Vec::new();
    let mut wronskian_verified = true;
    for transversal in &four_lines.transversals {
        let rows = transversal.span().row_vecs();
        let s = PolySubspace::new(
            vec![poly_from_ext_coeffs(&rows[0]), poly_from_ext_coeffs(&rows[1])],
            3,
        )?;
        wronskian_verified &= proportional(&s.wronskian(), &target);
        subspaces.push(s);
    }
    Ok(InverseWronskiReport {
        four_lines,
        subspaces,
        wronskian_verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::lines_skew;
    use crate::rat::rat;
    use crate::unipoly::UniPoly;
    use rand::{Rng, SeedableRng};

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    #[test]
    fn wronskian_examples() {
        let s = PolySubspaceQ::new(vec![up(&[1]), up(&[0, 1])], 3).unwrap();
        assert_eq!(s.wronskian(), UniPoly::one());
        let full = PolySubspaceQ::new(
            vec![up(&[1]), up(&[0, 1]), up(&[0, 0, 1]), up(&[0, 0, 0, 1])],
            3,
        )
        .unwrap();
        assert_eq!(full.wronskian(), UniPoly::constant(rat_i(12)));
        // {(x-t)^2, (x-t)^3} -> (x-t)^4 up to scale
        let t = rat(5, 3);
        let lin = UniPoly::from_coeffs(vec![-t.clone(), Rat::one()]);
        let sq = lin.clone() * lin.clone();
        let cube = sq.clone() * lin.clone();
        let s = PolySubspaceQ::new(vec![sq, cube], 3).unwrap();
        let w = s.wronskian();
        let quart = lin.clone() * lin.clone() * lin.clone() * lin;
        assert_eq!(w.scale(quart.leading().unwrap()), quart.scale(w.leading().unwrap()));
    }

    #[test]
    fn subspace_validation() {
        assert!(matches!(
            PolySubspaceQ::new(vec![up(&[1, 1]), up(&[2, 2])], 3),
            Err(Error::DependentBasis())
        ));
        assert!(matches!(
            PolySubspaceQ::new(vec![up(&[0, 0, 0, 0, 1])], 3),
            Err(Error::DegreeBound(3))
        ));
    }

    #[test]
    fn basis_covariance() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..30 {
            let p = up(&[
                rng.gen_range(-4..5),
                rng.gen_range(-4..5),
                rng.gen_range(-4..5),
                1,
            ]);
            let q = up(&[rng.gen_range(-4..5), rng.gen_range(-4..5), 1]);
            let s = PolySubspaceQ::new(vec![p.clone(), q.clone()], 3).unwrap();
            let (a, b, c, d) = (
                rat_i(rng.gen_range(-3..4)),
                rat_i(rng.gen_range(-3..4)),
                rat_i(rng.gen_range(-3..4)),
                rat_i(rng.gen_range(-3..4)),
            );
            let det = &a * &d - &b * &c;
            if det.is_zero() {
                continue;
            }
            let changed = PolySubspaceQ::new(
                vec![
                    p.scale(&a) + q.scale(&b),
                    p.scale(&c) + q.scale(&d),
                ],
                3,
            )
            .unwrap();
            assert_eq!(changed.wronskian(), s.wronskian().scale(&det));
            assert_eq!(changed, s);
        }
    }

    #[test]
    fn vanishing_line_examples() {
        let l0 = vanishing_line(&Rat::zero());
        let e34 = Line::from_points(
            vec![rat_i(0), rat_i(0), rat_i(1), rat_i(0)],
            vec![rat_i(0), rat_i(0), rat_i(0), rat_i(1)],
        )
        .unwrap();
        assert_eq!(l0, e34);
        // distinct parameters give skew lines
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for _ in 0..50 {
            let s = rat(rng.gen_range(-10..11), rng.gen_range(1..5));
            let t = rat(rng.gen_range(-10..11), rng.gen_range(1..5));
            assert_eq!(
                lines_skew(&vanishing_line(&s), &vanishing_line(&t)),
                s != t
            );
        }
    }

    #[test]
    fn inverse_wronski_at_small_integers() {
        let report = inverse_wronski4(&[rat_i(0), rat_i(1), rat_i(2), rat_i(3)]).unwrap();
        assert_eq!(report.four_lines.real_count, 2);
        assert_eq!(report.subspaces.len(), 2);
        assert!(report.wronskian_verified);
        assert!(report.subspaces[0] != report.subspaces[1]);
    }

    #[test]
    fn repeated_parameter_rejected() {
        assert!(matches!(
            inverse_wronski4(&[rat_i(0), rat_i(1), rat_i(1), rat_i(3)]),
            Err(Error::RepeatedParameter(_))
        ));
    }

    #[test]
    fn roundtrip_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        for _ in 0..15 {
            let mut ts: Vec<Rat> = Vec::new();
            while ts.len() < 4 {
                let t = rat(rng.gen_range(-12..13), rng.gen_range(1..4));
                if !ts.contains(&t) {
                    ts.push(t);
                }
            }
            let ts: [Rat; 4] = ts.try_into().unwrap();
            let report = inverse_wronski4(&ts).unwrap();
            assert_eq!(report.four_lines.real_count, 2, "roots {ts:?}");
            assert!(report.wronskian_verified);
            assert!(report.subspaces[0] != report.subspaces[1]);
        }
    }
}
