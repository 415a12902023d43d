//! Lines and flags in projective 3-space, Pluecker coordinates, flag
//! transversality, and the rational normal curve with its osculating data.
//!
//! The rational normal curve is parametrized as `(1, t, t^2/2, t^3/6)` so
//! that its osculating frames are exactly the one-parameter group
//! `exp(t N)` of unit upper-triangular matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Field, Mat, MatQ, Ring};
use crate::rat::{primitive_vector, Rat};
use crate::trigpoly::TrigPoly;
use crate::unipoly::{Bound, UniPoly};

/// A projective line as the row span of a rank-2 `2x4` matrix. The span is
/// kept as given; equality compares reduced row-echelon forms.
#[derive(Clone, Debug)]
pub struct Line<T> {
    span: Mat<T>,
}

pub type LineP3 = Line<Rat>;

impl<T: Field> Line<T> {
    pub fn new(span: Mat<T>) -> Result<Self> {
        if span.rows() != 2 || span.cols() != 4 {
            return Err(Error::DimensionMismatch(format!(
                "line span must be 2x4, got {}x{}",
                span.rows(),
                span.cols()
            )));
        }
        let r = span.rank();
        if r != 2 {
            return Err(Error::NotALine(r));
        }
        Ok(Line { span })
    }

    pub fn from_points(a: Vec<T>, b: Vec<T>) -> Result<Self> {
        Self::new(Mat::from_rows(vec![a, b]))
    }

    pub fn span(&self) -> &Mat<T> {
        &self.span
    }

    /// Reduced row-echelon canonical form of the span.
    pub fn canonical(&self) -> Mat<T> {
        self.span.rref().0
    }
}

impl<T: Field> PartialEq for Line<T> {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

/// True iff the lines have no common point: the stacked `4x4` determinant
/// is nonzero.
pub fn lines_skew<T: Field>(l1: &Line<T>, l2: &Line<T>) -> bool {
    let stacked = l1.span().stack(l2.span());
    !stacked.det().expect("4x4 stack is square").is_zero()
}

/// The six `2x2` minors of a pair of rows, in the order
/// `(p12, p13, p14, p23, p24, p34)`.
pub fn plucker_of_rows<T: Ring>(a: &[T], b: &[T]) -> [T; 6] {
    let minor = |i: usize, j: usize| a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
    [
        minor(0, 1),
        minor(0, 2),
        minor(0, 3),
        minor(1, 2),
        minor(1, 3),
        minor(2, 3),
    ]
}

/// Pluecker coordinates canonicalized to a primitive integer vector with
/// positive first nonzero entry. Construction asserts the quadric relation
/// `p12 p34 - p13 p24 + p14 p23 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVec {
    v: [Rat; 6],
}

impl PluckerVec {
    pub fn new(raw: [Rat; 6]) -> Result<Self> {
        if raw.iter().all(|x| x.is_zero()) {
            return Err(Error::Invalid("zero Pluecker vector".into()));
        }
        let canon = primitive_vector(&raw);
        let v: [Rat; 6] = canon.try_into().expect("six entries");
        let rel = &v[0] * &v[5] - &v[1] * &v[4] + &v[2] * &v[3];
        assert!(
            rel.is_zero(),
            "Pluecker quadric relation violated: internal bug"
        );
        Ok(PluckerVec { v })
    }

    pub fn coords(&self) -> &[Rat; 6] {
        &self.v
    }

    /// The bilinear pairing whose vanishing detects incident lines.
    pub fn pairing(&self, other: &PluckerVec) -> Rat {
        let p = &self.v;
        let q = &other.v;
        &p[0] * &q[5] - &p[1] * &q[4] + &p[2] * &q[3] + &p[5] * &q[0] - &p[4] * &q[1]
            + &p[3] * &q[2]
    }

    /// Recovers a line from its Pluecker vector via the rank-2
    /// antisymmetric matrix `P_ij = a_i b_j - a_j b_i`, whose rows span the
    /// line.
    pub fn to_line(&self) -> LineP3 {
        let p = &self.v;
        let z = Rat::zero;
        let m = Mat::from_rows(vec![
            vec![z(), p[0].clone(), p[1].clone(), p[2].clone()],
            vec![-p[0].clone(), z(), p[3].clone(), p[4].clone()],
            vec![-p[1].clone(), -p[3].clone(), z(), p[5].clone()],
            vec![-p[2].clone(), -p[4].clone(), -p[5].clone(), z()],
        ]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots.len(), 2, "Pluecker matrix must have rank 2");
        Line::new(Mat::from_rows(vec![r.row(0), r.row(1)])).expect("rank-2 span")
    }
}

/// Pluecker coordinates of a rational line.
pub fn plucker(l: &LineP3) -> PluckerVec {
    let rows = l.span().row_vecs();
    PluckerVec::new(plucker_of_rows(&rows[0], &rows[1])).expect("valid line")
}

/// A complete oriented flag as a full-rank square frame matrix; the `i`-th
/// flag subspace is the span of the first `i` rows.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagM {
    frame: MatQ,
}

impl FlagM {
    pub fn new(frame: MatQ) -> Result<Self> {
        if !frame.is_square() || frame.det()?.is_zero() {
            return Err(Error::SingularFlag);
        }
        Ok(FlagM { frame })
    }

    pub fn frame(&self) -> &MatQ {
        &self.frame
    }

    pub fn dim(&self) -> usize {
        self.frame.rows()
    }

    /// Matrix of the first `i` rows.
    pub fn leading_rows(&self, i: usize) -> MatQ {
        Mat::from_rows((0..i).map(|r| self.frame.row(r)).collect())
    }
}

/// Complete-flag transversality: every pair of subspaces, one from each
/// flag, meets in the minimal dimension. It suffices to check that the
/// stacked `(i+j) x m` matrices have full rank for all `i + j <= m`.
pub fn flags_transversal(f1: &FlagM, f2: &FlagM) -> Result<bool> {
    let m = f1.dim();
    if m != f2.dim() {
        return Err(Error::DimensionMismatch(format!(
            "flags of dimension {} and {}",
            m,
            f2.dim()
        )));
    }
    for i in 1..m {
        for j in 1..=(m - i) {
            let stacked = f1.leading_rows(i).stack(&f2.leading_rows(j));
            if stacked.rank() != i + j {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Osculating frame of the rational normal curve: `exp(t N)` with entries
/// `t^(j-i)/(j-i)!`.
pub fn rnc_osc_flag(t: &Rat) -> FlagM {
    let mut frame = MatQ::identity(4);
    for i in 0..4 {
        for j in i + 1..4 {
            let k = j - i;
            let mut val = Rat::one();
            for _ in 0..k {
                val *= t;
            }
            frame.set(i, j, val / Rat::from_integer(factorial(k)));
        }
    }
    FlagM::new(frame).expect("exp(tN) is unimodular")
}

/// Tangent line of the rational normal curve at parameter `t`.
pub fn rnc_tangent_line(t: &Rat) -> LineP3 {
    let f = rnc_osc_flag(t);
    Line::new(f.leading_rows(2)).expect("osculating rows are independent")
}

/// Osculating plane (3x4 row span) at parameter `t`.
pub fn rnc_osc_plane(t: &Rat) -> MatQ {
    rnc_osc_flag(t).leading_rows(3)
}

/// Coordinate functions of the rational normal curve `(1, t, t^2/2, t^3/6)`.
pub fn rnc_coords() -> [UniPoly; 4] {
    [
        UniPoly::one(),
        UniPoly::x(),
        UniPoly::monomial(Rat::new(1.into(), 2.into()), 2),
        UniPoly::monomial(Rat::new(1.into(), 6.into()), 3),
    ]
}

/// A parametric curve in projective 3-space: either four polynomial
/// coordinates, four trigonometric ones, or the built-in rational normal
/// curve.
#[derive(Clone, Debug, PartialEq)]
pub enum CurveSpec {
    Rnc,
    Polynomial([UniPoly; 4]),
    Trigonometric([TrigPoly; 4]),
}

impl CurveSpec {
    /// Validates the no-common-real-zero invariant of the coordinates.
    pub fn polynomial(coords: [UniPoly; 4]) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::CurveBasePoint);
        }
        let mut g = UniPoly::zero();
        for c in &coords {
            if !c.is_zero() {
                g = if g.is_zero() { c.clone() } else { g.gcd(c) };
            }
        }
        if g.degree().unwrap_or(0) >= 1 && g.real_root_count()?.distinct > 0 {
            return Err(Error::CurveBasePoint);
        }
        Ok(CurveSpec::Polynomial(coords))
    }

    pub fn trigonometric(coords: [TrigPoly; 4]) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::CurveBasePoint);
        }
        // Common real zero iff the half-angle numerators share a real root
        // or all coordinates vanish at t = pi.
        if coords.iter().all(|c| c.eval_at_pi().is_zero()) {
            return Err(Error::CurveBasePoint);
        }
        let mut g = UniPoly::zero();
        for c in &coords {
            if !c.is_zero() {
                let h = c.half_angle_poly();
                if h.is_zero() {
                    continue;
                }
                g = if g.is_zero() { h } else { g.gcd(&h) };
            }
        }
        if g.degree().unwrap_or(0) >= 1 && g.real_root_count()?.distinct > 0 {
            return Err(Error::CurveBasePoint);
        }
        Ok(CurveSpec::Trigonometric(coords))
    }

    pub fn is_trigonometric(&self) -> bool {
        matches!(self, CurveSpec::Trigonometric(_))
    }

    /// Componentwise derivative, staying in the same coordinate family.
    pub fn derivative(&self) -> CurveSpec {
        match self {
            CurveSpec::Rnc => {
                CurveSpec::Polynomial(rnc_coords().map(|c| c.derivative()))
            }
            CurveSpec::Polynomial(cs) => {
                CurveSpec::Polynomial(cs.clone().map(|c| c.derivative()))
            }
            CurveSpec::Trigonometric(cs) => {
                CurveSpec::Trigonometric(cs.clone().map(|c| c.derivative()))
            }
        }
    }

    /// Homogeneous point at a rational parameter (polynomial curves only).
    pub fn eval(&self, t: &Rat) -> Result<[Rat; 4]> {
        let coords = match self {
            CurveSpec::Rnc => rnc_coords(),
            CurveSpec::Polynomial(cs) => cs.clone(),
            CurveSpec::Trigonometric(_) => {
                return Err(Error::Invalid(
                    "exact evaluation of a trigonometric curve at a rational parameter".into(),
                ))
            }
        };
        let point = coords.map(|c| c.eval(t));
        if point.iter().all(|x| x.is_zero()) {
            return Err(Error::EvalAtBasePoint);
        }
        Ok(point)
    }
}

/// Curve, first derivative: used by the incidence determinant.
pub fn curve_jet2(c: &CurveSpec) -> (CurveSpec, CurveSpec) {
    (c.clone(), c.derivative())
}

/// Checks that the squarefree interval machinery sees no roots of a
/// polynomial on the whole line; convenience for nondegeneracy tests.
pub fn has_no_real_roots(p: &UniPoly) -> Result<bool> {
    Ok(p.sturm_count(&Bound::NegInf, &Bound::PosInf)?.distinct == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};
    use rand::{Rng, SeedableRng};

    pub fn line_i(rows: [[i64; 4]; 2]) -> LineP3 {
        Line::new(Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_i(x)).collect())
                .collect(),
        ))
        .unwrap()
    }

    fn l1() -> LineP3 {
        line_i([[1, 0, 0, 0], [0, 1, 0, 0]])
    }

    fn l2() -> LineP3 {
        Line::new(Mat::from_rows(vec![
            vec![rat_i(1), rat_i(1), rat(1, 2), rat(1, 6)],
            vec![rat_i(0), rat_i(1), rat_i(1), rat(1, 2)],
        ]))
        .unwrap()
    }

    fn l4() -> LineP3 {
        line_i([[0, 0, 1, 0], [0, 0, 0, 1]])
    }

    #[test]
    fn skewness_examples() {
        assert!(lines_skew(&l1(), &l4()));
        assert!(lines_skew(&l1(), &l2()));
        assert!(!lines_skew(&l1(), &l1()));
    }

    #[test]
    fn plucker_examples() {
        let p = plucker(&l1());
        assert_eq!(
            p.coords(),
            &[rat_i(1), rat_i(0), rat_i(0), rat_i(0), rat_i(0), rat_i(0)]
        );
        let p = plucker(&l4());
        assert_eq!(
            p.coords(),
            &[rat_i(0), rat_i(0), rat_i(0), rat_i(0), rat_i(0), rat_i(1)]
        );
        // l2: minors of its span matrix, cleared to primitive integers
        let p = plucker(&l2());
        assert_eq!(
            p.coords(),
            &[rat_i(12), rat_i(12), rat_i(6), rat_i(6), rat_i(4), rat_i(1)]
        );
    }

    #[test]
    fn plucker_invariant_under_row_mixing() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let base = l2();
        let p0 = plucker(&base);
        for _ in 0..50 {
            let (a, b, c, d) = (
                rat_i(rng.gen_range(-5..6)),
                rat_i(rng.gen_range(-5..6)),
                rat_i(rng.gen_range(-5..6)),
                rat_i(rng.gen_range(-5..6)),
            );
            if (&a * &d - &b * &c).is_zero() {
                continue;
            }
            let rows = base.span().row_vecs();
            let r1: Vec<Rat> = (0..4).map(|j| &a * &rows[0][j] + &b * &rows[1][j]).collect();
            let r2: Vec<Rat> = (0..4).map(|j| &c * &rows[0][j] + &d * &rows[1][j]).collect();
            let mixed = Line::new(Mat::from_rows(vec![r1, r2])).unwrap();
            assert_eq!(plucker(&mixed), p0);
            assert_eq!(mixed, base);
        }
    }

    #[test]
    fn skew_iff_pairing_nonzero() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let random_line = |rng: &mut rand_chacha::ChaCha8Rng| loop {
            let rows: Vec<Vec<Rat>> = (0..2)
                .map(|_| (0..4).map(|_| rat_i(rng.gen_range(-4..5))).collect())
                .collect();
            if let Ok(l) = Line::new(Mat::from_rows(rows)) {
                return l;
            }
        };
        for _ in 0..1000 {
            let la = random_line(&mut rng);
            let lb = random_line(&mut rng);
            let skew = lines_skew(&la, &lb);
            let pairing = plucker(&la).pairing(&plucker(&lb));
            assert_eq!(skew, !pairing.is_zero());
        }
    }

    #[test]
    fn plucker_roundtrip_to_line() {
        for l in [l1(), l2(), l4(), rnc_tangent_line(&rat(7, 3))] {
            assert_eq!(plucker(&l).to_line(), l);
        }
    }

    #[test]
    fn transversality_examples() {
        let plus = FlagM::new(MatQ::identity(4)).unwrap();
        let minus = FlagM::new(Mat::from_rows(vec![
            vec![rat_i(0), rat_i(0), rat_i(0), rat_i(1)],
            vec![rat_i(0), rat_i(0), rat_i(1), rat_i(0)],
            vec![rat_i(0), rat_i(1), rat_i(0), rat_i(0)],
            vec![rat_i(1), rat_i(0), rat_i(0), rat_i(0)],
        ]))
        .unwrap();
        assert!(flags_transversal(&plus, &minus).unwrap());
        assert!(!flags_transversal(&plus, &plus).unwrap());
        let f0 = rnc_osc_flag(&rat_i(0));
        let f1 = rnc_osc_flag(&rat_i(1));
        assert!(flags_transversal(&f0, &f1).unwrap());
    }

    #[test]
    fn osc_flag_group_law_and_m12() {
        let s = rat(2, 3);
        let t = rat(-7, 5);
        let sum = rnc_osc_flag(&(&s + &t));
        let prod = rnc_osc_flag(&s).frame().mul(rnc_osc_flag(&t).frame());
        assert_eq!(sum.frame(), &prod);
        // exp(N) at t = 1 is the first transition matrix of the
        // counterexample configuration
        let m12 = rnc_osc_flag(&rat_i(1));
        assert_eq!(m12.frame().row(0), vec![rat_i(1), rat_i(1), rat(1, 2), rat(1, 6)]);
        assert_eq!(m12.frame().row(1), vec![rat_i(0), rat_i(1), rat_i(1), rat(1, 2)]);
    }

    #[test]
    fn tangent_line_at_zero_is_l1() {
        assert_eq!(rnc_tangent_line(&rat_i(0)), l1());
    }

    #[test]
    fn osc_rows_are_derivatives() {
        // row i of exp(tN) equals the (i-1)-st derivative of the curve,
        // checked symbolically via the polynomial coordinates
        let coords = rnc_coords();
        for t in [rat_i(0), rat(3, 2), rat(-5, 7)] {
            let f = rnc_osc_flag(&t);
            let mut jet = coords.clone();
            for i in 0..4 {
                let row = f.frame().row(i);
                let vals: Vec<Rat> = jet.iter().map(|c| c.eval(&t)).collect();
                assert_eq!(row, vals);
                jet = jet.map(|c| c.derivative());
            }
        }
    }

    #[test]
    fn random_osculating_flags_transversal() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let s = rat(rng.gen_range(-20..21), rng.gen_range(1..6));
            let t = rat(rng.gen_range(-20..21), rng.gen_range(1..6));
            if s == t {
                continue;
            }
            assert!(flags_transversal(&rnc_osc_flag(&s), &rnc_osc_flag(&t)).unwrap());
        }
    }

    #[test]
    fn curve_eval_examples() {
        let rnc = CurveSpec::Rnc;
        assert_eq!(
            rnc.eval(&rat_i(2)).unwrap(),
            [rat_i(1), rat_i(2), rat_i(2), rat(4, 3)]
        );
        let d = rnc.derivative();
        if let CurveSpec::Polynomial(cs) = &d {
            let at0: Vec<Rat> = cs.iter().map(|c| c.eval(&rat_i(0))).collect();
            assert_eq!(at0, vec![rat_i(0), rat_i(1), rat_i(0), rat_i(0)]);
        } else {
            panic!("derivative of the rational normal curve is polynomial");
        }
        let trig = CurveSpec::trigonometric([
            TrigPoly::cos_term(1, rat_i(1)),
            TrigPoly::sin_term(1, rat_i(1)),
            TrigPoly::cos_term(2, rat_i(1)),
            TrigPoly::sin_term(2, rat_i(1)),
        ])
        .unwrap();
        if let CurveSpec::Trigonometric(cs) = trig.derivative() {
            assert_eq!(cs[0], TrigPoly::sin_term(1, rat_i(-1)));
        } else {
            panic!("derivative stays trigonometric");
        }
    }

    #[test]
    fn curve_base_point_rejected() {
        // all four coordinates vanish at t = 1
        let f = UniPoly::from_coeffs(vec![rat_i(-1), rat_i(1)]);
        let coords = [f.clone(), f.clone(), f.clone(), f];
        assert!(matches!(
            CurveSpec::polynomial(coords),
            Err(Error::CurveBasePoint)
        ));
    }
}
