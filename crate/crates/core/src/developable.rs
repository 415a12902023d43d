//! Witnesses for the tangent-developable degree characterization of
//! convexity: exact root counting of line/tangent-family incidences,
//! seeded randomized degree search, and hyperplane-multiplicity convexity
//! checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{det_cofactor, Mat};
use crate::projective::{rnc_coords, CurveSpec, Line, LineP3};
use crate::rat::{self, rat_i, Rat};
use crate::trigpoly::TrigPoly;
use crate::unipoly::{RootCount, UniPoly};

/// Incidence or Frenet determinant, in whichever coordinate family the
/// curve lives.
#[derive(Clone, Debug, PartialEq)]
pub enum IncidencePoly {
    Polynomial(UniPoly),
    Trigonometric(TrigPoly),
}

impl IncidencePoly {
    pub fn is_zero(&self) -> bool {
        match self {
            IncidencePoly::Polynomial(p) => num_traits::Zero::is_zero(p),
            IncidencePoly::Trigonometric(p) => num_traits::Zero::is_zero(p),
        }
    }

    /// Distinct real roots (over the whole line, or one period).
    pub fn root_count(&self) -> Result<RootCount> {
        match self {
            IncidencePoly::Polynomial(p) => p.real_root_count(),
            IncidencePoly::Trigonometric(p) => p.root_count(),
        }
    }

    /// Real roots counted with multiplicity.
    pub fn roots_with_multiplicity(&self) -> Result<usize> {
        match self {
            IncidencePoly::Polynomial(p) => p.real_roots_with_multiplicity(),
            IncidencePoly::Trigonometric(p) => p.roots_with_multiplicity(),
        }
    }
}

enum Coords {
    Polynomial([UniPoly; 4]),
    Trigonometric([TrigPoly; 4]),
}

fn coords_of(c: &CurveSpec) -> Coords {
    match c {
        CurveSpec::Rnc => Coords::Polynomial(rnc_coords()),
        CurveSpec::Polynomial(cs) => Coords::Polynomial(cs.clone()),
        CurveSpec::Trigonometric(cs) => Coords::Trigonometric(cs.clone()),
    }
}

fn det_rows_poly(rows: Vec<Vec<UniPoly>>) -> UniPoly {
    det_cofactor(&Mat::from_rows(rows)).expect("4x4 determinant")
}

fn det_rows_trig(rows: Vec<Vec<TrigPoly>>) -> TrigPoly {
    det_cofactor(&Mat::from_rows(rows)).expect("4x4 determinant")
}

/// Determinant of the curve's first four derivative rows: nonvanishing
/// certifies local convexity (a nondegenerate moving frame).
pub fn frenet_determinant(c: &CurveSpec) -> IncidencePoly {
    match coords_of(c) {
        Coords::Polynomial(cs) => {
            let mut rows = vec![cs.to_vec()];
            for r in 1..4 {
                let next: Vec<UniPoly> = rows[r - 1].iter().map(|p| p.derivative()).collect();
                rows.push(next);
            }
            IncidencePoly::Polynomial(det_rows_poly(rows))
        }
        Coords::Trigonometric(cs) => {
            let mut rows = vec![cs.to_vec()];
            for r in 1..4 {
                let next: Vec<TrigPoly> = rows[r - 1].iter().map(|p| p.derivative()).collect();
                rows.push(next);
            }
            IncidencePoly::Trigonometric(det_rows_trig(rows))
        }
    }
}

/// The determinant with rows `curve(t), curve'(t), a, b` where `a, b` span
/// the line: it vanishes exactly at the parameters whose tangent line
/// meets `l`. Identically zero input lines are rejected as persistent
/// incidences. For the degree-3 rational normal curve the result provably
/// has degree at most 4, enforced here as a hard assertion.
pub fn incidence_poly(c: &CurveSpec, l: &LineP3) -> Result<IncidencePoly> {
    let span = l.span().row_vecs();
    let out = match coords_of(c) {
        Coords::Polynomial(cs) => {
            let constant_row =
                |r: &[Rat]| -> Vec<UniPoly> { r.iter().map(|x| UniPoly::constant(x.clone())).collect() };
            let deriv: Vec<UniPoly> = cs.iter().map(|p| p.derivative()).collect();
            let det = det_rows_poly(vec![
                cs.to_vec(),
                deriv,
                constant_row(&span[0]),
                constant_row(&span[1]),
            ]);
            if matches!(c, CurveSpec::Rnc) {
                assert!(
                    det.degree().unwrap_or(0) <= 4,
                    "incidence with the twisted cubic cannot exceed degree 4"
                );
            }
            IncidencePoly::Polynomial(det)
        }
        Coords::Trigonometric(cs) => {
            let constant_row =
                |r: &[Rat]| -> Vec<TrigPoly> { r.iter().map(|x| TrigPoly::constant(x.clone())).collect() };
            let deriv: Vec<TrigPoly> = cs.iter().map(|p| p.derivative()).collect();
            IncidencePoly::Trigonometric(det_rows_trig(vec![
                cs.to_vec(),
                deriv,
                constant_row(&span[0]),
                constant_row(&span[1]),
            ]))
        }
    };
    if out.is_zero() {
        return Err(Error::PersistentIncidence);
    }
    Ok(out)
}

/// One sampled line with its incidence data.
#[derive(Clone, Debug)]
pub struct IncidenceReport {
    pub line: LineP3,
    pub poly: IncidencePoly,
    pub count: RootCount,
    /// All incidences transversal: no multiple root of the incidence
    /// polynomial.
    pub generic: bool,
}

pub fn incidence_report(c: &CurveSpec, l: &LineP3) -> Result<IncidenceReport> {
    let poly = incidence_poly(c, l)?;
    let count = poly.root_count()?;
    Ok(IncidenceReport {
        line: l.clone(),
        poly,
        count: count.clone(),
        generic: !count.has_multiple,
    })
}

/// Outcome of the randomized degree search.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Largest transversal incidence count among generic samples.
    pub max_count: usize,
    /// Trial index of the first line attaining the maximum.
    pub witness_trial: usize,
    pub witness: IncidenceReport,
    pub generic_samples: usize,
    pub trials: usize,
    pub seed: u64,
}

/// Default coordinate bound for sampled lines.
pub const DEFAULT_LINE_BOUND: i64 = 20;

fn sample_line(rng: &mut ChaCha8Rng, bound: i64) -> LineP3 {
    loop {
        let point = |rng: &mut ChaCha8Rng| -> Vec<Rat> {
            (0..4).map(|_| rat_i(rng.gen_range(-bound..=bound))).collect()
        };
        let a = point(rng);
        let b = point(rng);
        if let Ok(l) = Line::from_points(a, b) {
            return l;
        }
    }
}

/// Estimates the degree of the curve's tangent developable from below by
/// sampling lines with small integer spans. Only generic samples (all
/// incidence roots simple) contribute; each trial draws from its own
/// generator seeded with `seed ^ trial_index`, so the outcome is
/// reproducible and independent of evaluation order. Ties are broken by
/// the lowest trial index.
pub fn developable_degree_search(c: &CurveSpec, trials: usize, seed: u64) -> Result<SearchOutcome> {
    developable_degree_search_with_bound(c, trials, seed, DEFAULT_LINE_BOUND)
}

pub fn developable_degree_search_with_bound(
    c: &CurveSpec,
    trials: usize,
    seed: u64,
    bound: i64,
) -> Result<SearchOutcome> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let mut best: Option<(usize, IncidenceReport)> = None;
    let mut generic_samples = 0;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ trial as u64);
        let line = sample_line(&mut rng, bound);
        let report = match incidence_report(c, &line) {
            Ok(r) => r,
            Err(Error::PersistentIncidence) => continue,
            Err(e) => return Err(e),
        };
        if !report.generic {
            continue;
        }
        generic_samples += 1;
        let better = match &best {
            None => true,
            Some((_, witness)) => report.count.distinct > witness.count.distinct,
        };
        if better {
            best = Some((trial, report));
        }
    }
    match best {
        None => Err(Error::NoGenericSample),
        Some((witness_trial, witness)) => Ok(SearchOutcome {
            max_count: witness.count.distinct,
            witness_trial,
            witness,
            generic_samples,
            trials,
            seed,
        }),
    }
}

/// Verdict of the sampling convexity check.
#[derive(Clone, Debug)]
pub enum ConvexityVerdict {
    /// No hyperplane with total intersection multiplicity above three was
    /// found; sampling cannot certify convexity, only consistency.
    ConvexConsistent { trials: usize },
    /// A witness hyperplane meets the curve with total multiplicity above
    /// three, certifying non-convexity.
    NotConvex {
        hyperplane: [Rat; 4],
        multiplicity: usize,
    },
}

fn hyperplane_section(c: &CurveSpec, h: &[Rat; 4]) -> IncidencePoly {
    match coords_of(c) {
        Coords::Polynomial(cs) => {
            let mut acc = UniPoly::constant(Rat::new(0.into(), 1.into()));
            for (hi, ci) in h.iter().zip(cs.iter()) {
                acc = acc + ci.scale(hi);
            }
            IncidencePoly::Polynomial(acc)
        }
        Coords::Trigonometric(cs) => {
            let mut acc = TrigPoly::constant(Rat::new(0.into(), 1.into()));
            for (hi, ci) in h.iter().zip(cs.iter()) {
                acc = acc + TrigPoly::constant(hi.clone()) * ci.clone();
            }
            IncidencePoly::Trigonometric(acc)
        }
    }
}

/// Checks local convexity exactly (the Frenet determinant must have no
/// real zeros), then samples hyperplanes hunting for one that meets the
/// curve with total multiplicity above three. The four coordinate
/// hyperplanes are tried first, then seeded random integer hyperplanes.
pub fn convexity_check(c: &CurveSpec, trials: usize, seed: u64) -> Result<ConvexityVerdict> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let frenet = frenet_determinant(c);
    if frenet.is_zero() {
        return Err(Error::Invalid(
            "Frenet determinant vanishes identically: curve is degenerate".into(),
        ));
    }
    let roots = frenet.root_count()?;
    if roots.distinct > 0 {
        return Err(Error::DegenerateCurve(roots.distinct));
    }
    for trial in 0..trials {
        let h: [Rat; 4] = if trial < 4 {
            let mut h = [(); 4].map(|_| Rat::new(0.into(), 1.into()));
            h[trial] = rat_i(1);
            h
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ trial as u64);
            let mut h = [(); 4].map(|_| rat_i(rng.gen_range(-9..10)));
            while h.iter().all(|x| rat::sign(x) == 0) {
                h = [(); 4].map(|_| rat_i(rng.gen_range(-9..10)));
            }
            h
        };
        let section = hyperplane_section(c, &h);
        if section.is_zero() {
            // curve contained in the hyperplane; nondegeneracy already
            // ruled this out, but stay defensive
            continue;
        }
        let mult = section.roots_with_multiplicity()?;
        if mult > 3 {
            return Ok(ConvexityVerdict::NotConvex {
                hyperplane: h,
                multiplicity: mult,
            });
        }
    }
    Ok(ConvexityVerdict::ConvexConsistent { trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{lines_skew, rnc_tangent_line};
    use crate::rat::rat;
    use num_traits::{One, Zero};

    fn trig_curve() -> CurveSpec {
        CurveSpec::trigonometric([
            TrigPoly::cos_term(1, rat_i(1)),
            TrigPoly::sin_term(1, rat_i(1)),
            TrigPoly::cos_term(2, rat_i(1)),
            TrigPoly::sin_term(2, rat_i(1)),
        ])
        .unwrap()
    }

    fn line_i(rows: [[i64; 4]; 2]) -> LineP3 {
        Line::from_points(
            rows[0].iter().map(|&x| rat_i(x)).collect(),
            rows[1].iter().map(|&x| rat_i(x)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn incidence_with_own_tangent() {
        // the tangent at t = 0 IS this line, so t = 0 must be a root
        let l = line_i([[1, 0, 0, 0], [0, 1, 0, 0]]);
        let p = incidence_poly(&CurveSpec::Rnc, &l).unwrap();
        match p {
            IncidencePoly::Polynomial(q) => {
                assert!(q.eval(&Rat::new(0.into(), 1.into())).is_zero() || q.coeff(0).is_zero());
                assert!(q.degree().unwrap() <= 4);
            }
            _ => panic!("polynomial curve gives a polynomial incidence"),
        }
    }

    #[test]
    fn incidence_roots_match_skewness_failures() {
        let l = line_i([[3, 1, 0, 2], [-1, 4, 1, 0]]);
        let p = incidence_poly(&CurveSpec::Rnc, &l).unwrap();
        let IncidencePoly::Polynomial(q) = &p else {
            panic!("polynomial expected");
        };
        // at a rational sample, vanishing of the incidence polynomial must
        // agree with tangent-line intersection
        for t in [-3, -1, 0, 1, 2, 5] {
            let t = rat_i(t);
            let vanish = q.eval(&t).is_zero();
            let meets = !lines_skew(&rnc_tangent_line(&t), &l);
            assert_eq!(vanish, meets, "t = {t}");
        }
    }

    #[test]
    fn frenet_determinants() {
        let f = frenet_determinant(&CurveSpec::Rnc);
        assert_eq!(f, IncidencePoly::Polynomial(UniPoly::constant(rat_i(1))));
        let f = frenet_determinant(&trig_curve());
        assert_eq!(f, IncidencePoly::Trigonometric(TrigPoly::constant(rat_i(18))));
    }

    #[test]
    fn rnc_search_is_bounded_by_four() {
        let out = developable_degree_search(&CurveSpec::Rnc, 300, 7).unwrap();
        assert!(out.max_count <= 4);
        assert!(out.generic_samples > 0);
        assert!(out.witness.generic);
        assert!(developable_degree_search(&CurveSpec::Rnc, 0, 0).is_err());
    }

    #[test]
    fn search_is_deterministic() {
        let a = developable_degree_search(&CurveSpec::Rnc, 40, 123).unwrap();
        let b = developable_degree_search(&CurveSpec::Rnc, 40, 123).unwrap();
        assert_eq!(a.max_count, b.max_count);
        assert_eq!(a.witness.line, b.witness.line);
        assert_eq!(a.generic_samples, b.generic_samples);
    }

    #[test]
    fn convexity_of_twisted_cubic() {
        match convexity_check(&CurveSpec::Rnc, 50, 0).unwrap() {
            ConvexityVerdict::ConvexConsistent { .. } => {}
            v => panic!("cubic sections have at most 3 roots, got {v:?}"),
        }
    }

    #[test]
    fn locally_convex_nonconvex_curve_detected() {
        match convexity_check(&trig_curve(), 50, 0).unwrap() {
            ConvexityVerdict::NotConvex {
                hyperplane,
                multiplicity,
            } => {
                // found immediately at the third coordinate hyperplane
                assert_eq!(
                    hyperplane,
                    [rat_i(0), rat_i(0), rat_i(1), rat_i(0)]
                );
                assert_eq!(multiplicity, 4);
            }
            v => panic!("cos(2t) has four roots per period, got {v:?}"),
        }
    }

    #[test]
    fn degenerate_curve_rejected() {
        // planar curve: last coordinate zero makes the Frenet determinant
        // vanish identically
        let planar = CurveSpec::polynomial([
            UniPoly::one(),
            UniPoly::x(),
            UniPoly::monomial(rat(1, 2), 2),
            UniPoly::zero(),
        ])
        .unwrap();
        assert!(convexity_check(&planar, 10, 0).is_err());
    }

    #[test]
    fn trig_search_exceeds_four() {
        let out = developable_degree_search(&trig_curve(), 400, 0).unwrap();
        assert!(out.max_count >= 5, "saw only {}", out.max_count);
    }
}
