//! The four-lines problem in projective 3-space: the unique quadric through
//! three pairwise skew lines, its restriction to a fourth line, the exact
//! discriminant deciding how many real transversals exist, and the
//! transversal lines themselves over a quadratic extension. Also the
//! factorial formula for the degree of a Grassmannian.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Mat, MatQ, Ring};
use crate::multipoly::MultiPoly;
use crate::projective::{lines_skew, Line, LineP3};
use crate::quadext::QuadExt;
use crate::rat::{self, exact_sqrt, format_rat, primitive_vector, rat, rat_i, Rat};
use crate::totalpos::{TPChain, UniUpper};
use crate::unipoly::UniPoly;

/// A quadric surface as the coefficient vector of
/// `sum_{i<=j} c_ij x_i x_j` in the monomial order
/// `x1^2, x1x2, x1x3, x1x4, x2^2, x2x3, x2x4, x3^2, x3x4, x4^2`,
/// canonicalized to a primitive integer vector with positive first nonzero
/// entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadric {
    coeffs: [Rat; 10],
}

/// Index pairs `(i, j)`, `i <= j`, matching the coefficient order.
pub const QUADRIC_MONOMIALS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

impl Quadric {
    pub fn new(raw: [Rat; 10]) -> Result<Self> {
        if raw.iter().all(|c| c.is_zero()) {
            return Err(Error::Invalid("zero quadric".into()));
        }
        let canon = primitive_vector(&raw);
        Ok(Quadric {
            coeffs: canon.try_into().expect("ten entries"),
        })
    }

    pub fn coeffs(&self) -> &[Rat; 10] {
        &self.coeffs
    }

    /// Symmetric Gram matrix: `x^T Q x` equals the quadric's value.
    pub fn matrix(&self) -> MatQ {
        let mut m = MatQ::zero(4, 4);
        let half = rat(1, 2);
        for (idx, &(i, j)) in QUADRIC_MONOMIALS.iter().enumerate() {
            if i == j {
                m.set(i, i, self.coeffs[idx].clone());
            } else {
                m.set(i, j, &self.coeffs[idx] * &half);
                m.set(j, i, &self.coeffs[idx] * &half);
            }
        }
        m
    }

    pub fn eval(&self, x: &[Rat; 4]) -> Rat {
        QUADRIC_MONOMIALS
            .iter()
            .zip(&self.coeffs)
            .fold(Rat::zero(), |acc, (&(i, j), c)| acc + c * &x[i] * &x[j])
    }
}

impl std::fmt::Display for Quadric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (idx, &(i, j)) in QUADRIC_MONOMIALS.iter().enumerate() {
            let c = &self.coeffs[idx];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = if i == j {
                format!("x{}^2", i + 1)
            } else {
                format!("x{}*x{}", i + 1, j + 1)
            };
            write!(f, "({})*{}", format_rat(c), mono)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Row of the linear system: the ten monomial values at a point.
fn monomial_row(x: &[Rat]) -> Vec<Rat> {
    QUADRIC_MONOMIALS
        .iter()
        .map(|&(i, j)| &x[i] * &x[j])
        .collect()
}

fn check_pairwise_skew(lines: &[&LineP3]) -> Result<()> {
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if !lines_skew(lines[i], lines[j]) {
                return Err(Error::NotSkew(i + 1, j + 1));
            }
        }
    }
    Ok(())
}

/// The unique quadric (up to scale) containing three pairwise skew lines.
///
/// Each line imposes three linear conditions (vanishing of the quadratic
/// restriction at the parameters 0, 1 and the chart-infinity point); the
/// resulting 9x10 system must have a one-dimensional kernel.
pub fn quadric_through_three(l1: &LineP3, l2: &LineP3, l3: &LineP3) -> Result<Quadric> {
    check_pairwise_skew(&[l1, l2, l3])?;
    let mut rows = Vec::with_capacity(9);
    for l in [l1, l2, l3] {
        let span = l.span().row_vecs();
        let sum: Vec<Rat> = (0..4).map(|j| &span[0][j] + &span[1][j]).collect();
        rows.push(monomial_row(&span[0]));
        rows.push(monomial_row(&span[1]));
        rows.push(monomial_row(&sum));
    }
    let system = Mat::from_rows(rows);
    let kernel = system.kernel_primitive();
    if kernel.len() != 1 {
        return Err(Error::DegenerateQuadricSystem(kernel.len()));
    }
    Quadric::new(kernel.into_iter().next().unwrap().try_into().expect("ten coefficients"))
}

/// Restriction of a symmetric form to the parametrized line `p + u q`:
/// returns `(A, B, C)` with value `A u^2 + B u + C`.
pub fn restrict_to_chart<T: Ring>(gram: &Mat<T>, p: &[T], q: &[T]) -> (T, T, T) {
    let bilin = |x: &[T], y: &[T]| -> T {
        let qy = gram.apply(y);
        x.iter()
            .zip(&qy)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    };
    let a = bilin(q, q);
    let b = bilin(p, q) + bilin(q, p);
    let c = bilin(p, p);
    (a, b, c)
}

/// Full report of one four-lines instance.
#[derive(Clone, Debug)]
pub struct FourLinesReport {
    /// The quadric through the first three lines.
    pub quadric: Quadric,
    /// Restriction `A u^2 + B u + C` of the quadric to the chart
    /// parametrization of the fourth line.
    pub restricted: UniPoly,
    pub discriminant: Rat,
    /// Number of real transversal lines: 0, 1 or 2.
    pub real_count: usize,
    /// True exactly in the tangential (double transversal) case.
    pub tangent: bool,
    /// The real transversals; entries live in `Q(sqrt(discriminant))` and
    /// collapse to plain rationals when the discriminant is a perfect
    /// square.
    pub transversals: Vec<Line<QuadExt>>,
    /// Every transversal was re-checked to meet all four input lines.
    pub verified: bool,
}

fn ext_vec(v: &[Rat]) -> Vec<QuadExt> {
    v.iter().map(|x| QuadExt::from_rat(x.clone())).collect()
}

fn ext_mat(m: &MatQ) -> Mat<QuadExt> {
    Mat::from_rows(m.row_vecs().iter().map(|r| ext_vec(r)).collect())
}

/// The line through the point `pt` meeting both `la` and `lb`: the
/// intersection of the plane spanned by `pt, la` with the plane spanned by
/// `pt, lb`. Requires `pt` off both lines and `la`, `lb` skew.
fn transversal_through(pt: &[QuadExt], la: &LineP3, lb: &LineP3) -> Line<QuadExt> {
    let normal = |l: &LineP3| -> Vec<QuadExt> {
        let mut rows = vec![pt.to_vec()];
        rows.extend(l.span().row_vecs().iter().map(|r| ext_vec(r)));
        let kernel = Mat::from_rows(rows).kernel();
        assert_eq!(kernel.len(), 1, "point-plus-line span must be a plane");
        kernel.into_iter().next().unwrap()
    };
    let n1 = normal(la);
    let n2 = normal(lb);
    let span = Mat::from_rows(Mat::from_rows(vec![n1, n2]).kernel());
    Line::new(span).expect("intersection of distinct planes is a line")
}

fn line_meets(transversal: &Line<QuadExt>, l: &LineP3) -> bool {
    let stacked = transversal.span().stack(&ext_mat(l.span()));
    stacked.det().expect("4x4 stack").is_zero()
}

/// Solves the four-lines problem: quadric through `l1, l2, l3`, restricted
/// to `l4`. The chart parametrization of `l4` uses the two rows of its
/// reduced row-echelon span, `p + u q`; the single point missed by the
/// chart (`q` itself) is tested by direct substitution.
pub fn four_lines_solve(
    l1: &LineP3,
    l2: &LineP3,
    l3: &LineP3,
    l4: &LineP3,
) -> Result<FourLinesReport> {
    check_pairwise_skew(&[l1, l2, l3, l4])?;
    let quadric = quadric_through_three(l1, l2, l3)?;
    let canon = l4.canonical();
    let p = canon.row(0);
    let q = canon.row(1);
    let (a, b, c) = restrict_to_chart(&quadric.matrix(), &p, &q);
    if a.is_zero() && b.is_zero() {
        return Err(Error::DegenerateRestriction);
    }
    let restricted = UniPoly::from_coeffs(vec![c.clone(), b.clone(), a.clone()]);
    let discriminant = &b * &b - rat_i(4) * &a * &c;
    let (real_count, tangent) = if a.is_zero() {
        // Linear restriction: one affine root, plus the chart-infinity
        // point q which lies on the quadric since A = Q(q, q) = 0.
        (2, false)
    } else {
        match rat::sign(&discriminant) {
            1 => (2, false),
            0 => (1, true),
            _ => (0, false),
        }
    };

    let mut points: Vec<Vec<QuadExt>> = Vec::new();
    if a.is_zero() {
        let u = QuadExt::from_rat(-&c / &b);
        points.push(point_on_chart(&p, &q, &u));
        points.push(ext_vec(&q));
    } else if rat::sign(&discriminant) >= 0 {
        let sqrt_disc = QuadExt::sqrt_of(discriminant.clone());
        let two_a = QuadExt::from_rat(&a * rat_i(2));
        let minus_b = QuadExt::from_rat(-b.clone());
        let u_plus = (minus_b.clone() + sqrt_disc.clone()) / two_a.clone();
        points.push(point_on_chart(&p, &q, &u_plus));
        if !tangent {
            let u_minus = (minus_b - sqrt_disc) / two_a;
            points.push(point_on_chart(&p, &q, &u_minus));
        }
    }

    let mut transversals = Vec::new();
    let mut verified = true;
    for pt in &points {
        let t = transversal_through(pt, l1, l2);
        for l in [l1, l2, l3, l4] {
            verified &= line_meets(&t, l);
        }
        transversals.push(t);
    }

    Ok(FourLinesReport {
        quadric,
        restricted,
        discriminant,
        real_count,
        tangent,
        transversals,
        verified,
    })
}

fn point_on_chart(p: &[Rat], q: &[Rat], u: &QuadExt) -> Vec<QuadExt> {
    (0..4)
        .map(|j| QuadExt::from_rat(p[j].clone()) + u.clone() * QuadExt::from_rat(q[j].clone()))
        .collect()
}

/// Variable indices of the symbolic discriminant: `a..f` are the strictly
/// upper entries of the generic unit upper-triangular matrix, row by row.
pub const SYMBOLIC_NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// The generic unit upper-triangular 4x4 matrix with entries `a..f`.
pub fn generic_uniupper() -> Mat<MultiPoly> {
    let v = MultiPoly::var;
    let one = MultiPoly::one;
    let z = MultiPoly::zero;
    Mat::from_rows(vec![
        vec![one(), v(0), v(1), v(2)],
        vec![z(), one(), v(3), v(4)],
        vec![z(), z(), one(), v(5)],
        vec![z(), z(), z(), one()],
    ])
}

fn const_mat(m: &MatQ) -> Mat<MultiPoly> {
    Mat::from_rows(
        m.row_vecs()
            .iter()
            .map(|r| r.iter().map(|x| MultiPoly::constant(x.clone())).collect())
            .collect(),
    )
}

/// The second tangent line of the configuration moved by the generic
/// matrix: rows of `l2 * M(a..f)` as polynomials in `a..f`.
pub fn symbolic_moved_line() -> Mat<MultiPoly> {
    let l2 = Mat::from_rows(vec![
        vec![rat_i(1), rat_i(1), rat(1, 2), rat(1, 6)],
        vec![rat_i(0), rat_i(1), rat_i(1), rat(1, 2)],
    ]);
    const_mat(&l2).mul(&generic_uniupper())
}

/// Discriminant `B^2 - 4AC` of the counterexample quadric restricted to the
/// moved line `l2 * M(a..f)`, expanded as a polynomial in `a..f`.
pub fn symbolic_counterexample_discriminant() -> MultiPoly {
    let phi = counterexample_quadric();
    let gram = const_mat(&phi.matrix());
    let moved = symbolic_moved_line();
    let (a, b, c) = restrict_to_chart(&gram, &moved.row(0), &moved.row(1));
    b.clone() * b - MultiPoly::constant(rat_i(4)) * a * c
}

/// Degree of the Grassmannian of projective `k`-planes in projective
/// `n`-space: the number of `k`-planes meeting `(k+1)(n-k)` generic
/// `(n-k-1)`-planes, by the factorial formula
/// `1! 2! ... (n-k-1)! ((k+1)(n-k))! / ((k+1)! (k+2)! ... n!)`.
pub fn sharp(k: usize, n: usize) -> Result<BigInt> {
    if k >= n {
        return Err(Error::OutOfRange(format!("sharp requires 0 <= k < n, got k={k}, n={n}")));
    }
    let fact = |m: usize| (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    let mut numer = fact((k + 1) * (n - k));
    for i in 1..=(n - k - 1) {
        numer *= fact(i);
    }
    let mut denom = BigInt::one();
    for i in (k + 1)..=n {
        denom *= fact(i);
    }
    assert!((&numer % &denom).is_zero(), "degree formula is integral");
    Ok(numer / denom)
}

/// The four tangent lines of the counterexample configuration, in order.
pub fn counterexample_lines() -> [LineP3; 4] {
    let line = |rows: Vec<Vec<Rat>>| Line::new(Mat::from_rows(rows)).expect("rank 2");
    [
        line(vec![
            vec![rat_i(1), rat_i(0), rat_i(0), rat_i(0)],
            vec![rat_i(0), rat_i(1), rat_i(0), rat_i(0)],
        ]),
        line(vec![
            vec![rat_i(1), rat_i(1), rat(1, 2), rat(1, 6)],
            vec![rat_i(0), rat_i(1), rat_i(1), rat(1, 2)],
        ]),
        line(vec![
            vec![rat_i(1), rat(101, 100), rat(401, 200), rat(2503, 1500)],
            vec![rat_i(0), rat_i(1), rat(5, 2), rat(5, 2)],
        ]),
        line(vec![
            vec![rat_i(0), rat_i(0), rat_i(1), rat_i(0)],
            vec![rat_i(0), rat_i(0), rat_i(0), rat_i(1)],
        ]),
    ]
}

/// The two totally positive transition matrices of the configuration.
pub fn counterexample_transitions() -> (UniUpper, UniUpper) {
    let m12 = UniUpper::new(Mat::from_rows(vec![
        vec![rat_i(1), rat_i(1), rat(1, 2), rat(1, 6)],
        vec![rat_i(0), rat_i(1), rat_i(1), rat(1, 2)],
        vec![rat_i(0), rat_i(0), rat_i(1), rat_i(1)],
        vec![rat_i(0), rat_i(0), rat_i(0), rat_i(1)],
    ]))
    .expect("unit upper-triangular");
    let m23 = UniUpper::new(Mat::from_rows(vec![
        vec![rat_i(1), rat(1, 100), rat(1, 200), rat(1, 500)],
        vec![rat_i(0), rat_i(1), rat(3, 2), rat_i(1)],
        vec![rat_i(0), rat_i(0), rat_i(1), rat_i(1)],
        vec![rat_i(0), rat_i(0), rat_i(0), rat_i(1)],
    ]))
    .expect("unit upper-triangular");
    (m12, m23)
}

/// The transition chain generating the first three tangent lines.
pub fn counterexample_chain() -> TPChain {
    use crate::projective::FlagM;
    let (m12, m23) = counterexample_transitions();
    TPChain {
        base: FlagM::new(MatQ::identity(4)).expect("identity flag"),
        steps: vec![m12, m23],
    }
}

/// The quadric through the first, second and fourth line of the
/// configuration: `2 x1 x3 - 3 x1 x4 - 3 x2 x3 + 6 x2 x4`.
pub fn counterexample_quadric() -> Quadric {
    let [l1, l2, _, l4] = counterexample_lines();
    quadric_through_three(&l1, &l2, &l4).expect("configuration is generic")
}

/// End-to-end data of the counterexample: the configuration together with
/// the four-lines report showing zero real transversals.
pub struct CounterexampleData {
    pub lines: [LineP3; 4],
    pub chain: TPChain,
    pub report: FourLinesReport,
}

pub fn counterexample() -> Result<CounterexampleData> {
    let lines = counterexample_lines();
    let [l1, l2, l3, l4] = lines.clone();
    let report = four_lines_solve(&l1, &l2, &l4, &l3)?;
    Ok(CounterexampleData {
        lines,
        chain: counterexample_chain(),
        report,
    })
}

/// True when the discriminant is a perfect square, i.e. the transversals
/// are defined over the rationals.
pub fn rational_transversals(report: &FourLinesReport) -> bool {
    rat::sign(&report.discriminant) >= 0 && exact_sqrt(&report.discriminant).is_some()
}
