//! JSON data-transfer representations of the crate's exact objects.
//!
//! Rationals serialize as `"p/q"` strings (`"p"` when the denominator is
//! one); matrices and lines as row-major arrays of such strings;
//! polynomials as `{exponent -> coefficient}` maps; quadratic-extension
//! scalars as `{a, b, d}` triples meaning `a + b*sqrt(d)`. All conversions
//! are lossless.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Mat, MatQ};
use crate::projective::{CurveSpec, FlagM, Line, LineP3};
use crate::quadext::QuadExt;
use crate::rat::{format_rat, parse_rat, Rat};
use crate::schubert::FourLinesReport;
use crate::totalpos::{TPChain, UniUpper};
use crate::trigpoly::TrigPoly;
use crate::unipoly::UniPoly;
use crate::wronski::PolySubspaceQ;

pub type GridDto = Vec<Vec<String>>;
pub type PolyMapDto = BTreeMap<String, String>;

fn bad(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

pub fn mat_to_dto(m: &MatQ) -> GridDto {
    m.row_vecs()
        .iter()
        .map(|r| r.iter().map(format_rat).collect())
        .collect()
}

pub fn dto_to_mat(dto: &GridDto) -> Result<MatQ> {
    if dto.is_empty() {
        return Err(bad("empty matrix"));
    }
    let cols = dto[0].len();
    if dto.iter().any(|r| r.len() != cols) {
        return Err(bad("ragged matrix rows"));
    }
    let rows = dto
        .iter()
        .map(|r| r.iter().map(|s| parse_rat(s)).collect::<Result<Vec<Rat>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Mat::from_rows(rows))
}

pub fn line_to_dto(l: &LineP3) -> GridDto {
    mat_to_dto(l.span())
}

pub fn dto_to_line(dto: &GridDto) -> Result<LineP3> {
    let m = dto_to_mat(dto)?;
    if m.rows() != 2 || m.cols() != 4 {
        return Err(bad(format!(
            "a line needs a 2x4 grid, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Line::new(m)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainDto {
    pub base: GridDto,
    pub steps: Vec<GridDto>,
}

pub fn chain_to_dto(chain: &TPChain) -> ChainDto {
    ChainDto {
        base: mat_to_dto(chain.base.frame()),
        steps: chain.steps.iter().map(|s| mat_to_dto(s.mat())).collect(),
    }
}

pub fn dto_to_chain(dto: &ChainDto) -> Result<TPChain> {
    let base = FlagM::new(dto_to_mat(&dto.base)?)?;
    let steps = dto
        .steps
        .iter()
        .map(|s| UniUpper::new(dto_to_mat(s)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(TPChain { base, steps })
}

pub fn unipoly_to_dto(p: &UniPoly) -> PolyMapDto {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| (k.to_string(), format_rat(c)))
        .collect()
}

pub fn dto_to_unipoly(dto: &PolyMapDto) -> Result<UniPoly> {
    let mut coeffs: Vec<(usize, Rat)> = Vec::new();
    for (k, v) in dto {
        let k: usize = k.parse().map_err(|_| bad(format!("bad exponent {k:?}")))?;
        coeffs.push((k, parse_rat(v)?));
    }
    let top = coeffs.iter().map(|(k, _)| *k).max().unwrap_or(0);
    let mut dense = vec![Rat::new(0.into(), 1.into()); top + 1];
    for (k, c) in coeffs {
        dense[k] = c;
    }
    Ok(UniPoly::from_coeffs(dense))
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct TrigMapDto {
    #[serde(default)]
    pub cos: PolyMapDto,
    #[serde(default)]
    pub sin: PolyMapDto,
}

pub fn trigpoly_to_dto(p: &TrigPoly) -> TrigMapDto {
    let mut dto = TrigMapDto::default();
    for (k, c, s) in p.terms() {
        if !num_traits::Zero::is_zero(c) {
            dto.cos.insert(k.to_string(), format_rat(c));
        }
        if !num_traits::Zero::is_zero(s) {
            dto.sin.insert(k.to_string(), format_rat(s));
        }
    }
    dto
}

pub fn dto_to_trigpoly(dto: &TrigMapDto) -> Result<TrigPoly> {
    let mut p = TrigPoly::default();
    for (k, v) in &dto.cos {
        let k: u32 = k.parse().map_err(|_| bad(format!("bad frequency {k:?}")))?;
        p = p + TrigPoly::cos_term(k, parse_rat(v)?);
    }
    for (k, v) in &dto.sin {
        let k: u32 = k.parse().map_err(|_| bad(format!("bad frequency {k:?}")))?;
        p = p + TrigPoly::sin_term(k, parse_rat(v)?);
    }
    Ok(p)
}

/// Curve file: the built-in cubic, or four coordinates in power or
/// frequency form.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CurveDto {
    Rnc,
    Polynomial { coords: [PolyMapDto; 4] },
    Trigonometric { coords: [TrigMapDto; 4] },
}

pub fn curve_to_dto(c: &CurveSpec) -> CurveDto {
    match c {
        CurveSpec::Rnc => CurveDto::Rnc,
        CurveSpec::Polynomial(cs) => CurveDto::Polynomial {
            coords: [0, 1, 2, 3].map(|i| unipoly_to_dto(&cs[i])),
        },
        CurveSpec::Trigonometric(cs) => CurveDto::Trigonometric {
            coords: [0, 1, 2, 3].map(|i| trigpoly_to_dto(&cs[i])),
        },
    }
}

pub fn dto_to_curve(dto: &CurveDto) -> Result<CurveSpec> {
    match dto {
        CurveDto::Rnc => Ok(CurveSpec::Rnc),
        CurveDto::Polynomial { coords } => {
            let cs = [
                dto_to_unipoly(&coords[0])?,
                dto_to_unipoly(&coords[1])?,
                dto_to_unipoly(&coords[2])?,
                dto_to_unipoly(&coords[3])?,
            ];
            CurveSpec::polynomial(cs)
        }
        CurveDto::Trigonometric { coords } => {
            let cs = [
                dto_to_trigpoly(&coords[0])?,
                dto_to_trigpoly(&coords[1])?,
                dto_to_trigpoly(&coords[2])?,
                dto_to_trigpoly(&coords[3])?,
            ];
            CurveSpec::trigonometric(cs)
        }
    }
}

/// `a + b*sqrt(d)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtScalarDto {
    pub a: String,
    pub b: String,
    pub d: String,
}

pub fn ext_to_dto(x: &QuadExt) -> ExtScalarDto {
    ExtScalarDto {
        a: format_rat(x.rational_part()),
        b: format_rat(x.radical_part()),
        d: format_rat(x.radicand()),
    }
}

pub fn dto_to_ext(dto: &ExtScalarDto) -> Result<QuadExt> {
    Ok(QuadExt::new(
        parse_rat(&dto.a)?,
        parse_rat(&dto.b)?,
        parse_rat(&dto.d)?,
    ))
}

pub fn ext_line_to_dto(l: &Line<QuadExt>) -> Vec<Vec<ExtScalarDto>> {
    l.span()
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(ext_to_dto).collect())
        .collect()
}

pub fn dto_to_ext_line(dto: &[Vec<ExtScalarDto>]) -> Result<Line<QuadExt>> {
    let rows = dto
        .iter()
        .map(|r| r.iter().map(dto_to_ext).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let m = Mat::from_rows(rows);
    if m.rows() != 2 || m.cols() != 4 {
        return Err(bad("extension line needs a 2x4 grid"));
    }
    Line::new(m)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FourLinesReportDto {
    /// Ten primitive coefficients in the order
    /// `x1^2, x1x2, x1x3, x1x4, x2^2, x2x3, x2x4, x3^2, x3x4, x4^2`.
    pub quadric: Vec<String>,
    pub quadric_display: String,
    /// The restriction `A u^2 + B u + C` as an exponent map.
    pub restricted: PolyMapDto,
    pub discriminant: String,
    pub real_count: usize,
    pub tangent: bool,
    pub transversals: Vec<Vec<Vec<ExtScalarDto>>>,
    pub verified: bool,
}

pub fn four_lines_report_to_dto(r: &FourLinesReport) -> FourLinesReportDto {
    FourLinesReportDto {
        quadric: r.quadric.coeffs().iter().map(format_rat).collect(),
        quadric_display: r.quadric.to_string(),
        restricted: unipoly_to_dto(&r.restricted),
        discriminant: format_rat(&r.discriminant),
        real_count: r.real_count,
        tangent: r.tangent,
        transversals: r.transversals.iter().map(ext_line_to_dto).collect(),
        verified: r.verified,
    }
}

/// Subspace file: degree bound plus basis polynomials.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubspaceDto {
    pub degree_bound: usize,
    pub basis: Vec<PolyMapDto>,
}

pub fn dto_to_subspace(dto: &SubspaceDto) -> Result<PolySubspaceQ> {
    let basis = dto
        .basis
        .iter()
        .map(dto_to_unipoly)
        .collect::<Result<Vec<_>>>()?;
    PolySubspaceQ::new(basis, dto.degree_bound)
}
