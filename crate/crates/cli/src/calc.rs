//! Constants, classification and the closed-form bound calculators.

use std::f64::consts::FRAC_PI_2;

use pentile_core::bounds::{self, caps, LerfInput};
use pentile_core::coxgroup::word_to_isometry;
use pentile_core::hypgeo::{axis_endpoints, classify};
use pentile_core::NormalForm;
use serde::Serialize;

use crate::error::CliError;
use crate::pipeline::BoundJson;
use crate::real::Real;

#[derive(Debug, Serialize)]
pub struct Caps {
    pub lift: Real,
    pub lift_tessline: Real,
    pub rf: Real,
    pub rf_tessline: Real,
    pub boundary: Real,
    pub boundary_tessline: Real,
}

#[derive(Debug, Serialize)]
pub struct ConstantsReport {
    pub side_length: Real,
    pub diameter: Real,
    /// Transposed-digit value of the diameter found in print.
    pub diameter_misprint: Real,
    pub tile_area: Real,
    pub lift_coeff: Real,
    pub lift_coeff_tessline: Real,
    pub rf_coeff: Real,
    pub rf_coeff_tessline: Real,
    pub boundary_coeff: Real,
    pub boundary_coeff_tessline: Real,
    pub caps: Caps,
}

pub fn constants_report() -> ConstantsReport {
    let c = bounds::constants();
    ConstantsReport {
        side_length: Real(c.side_length),
        diameter: Real(c.diameter),
        diameter_misprint: Real(caps::DIAMETER_MISPRINT),
        tile_area: Real(FRAC_PI_2),
        lift_coeff: Real(c.lift_coeff),
        lift_coeff_tessline: Real(c.lift_coeff_tessline),
        rf_coeff: Real(2.0 * c.lift_coeff),
        rf_coeff_tessline: Real(2.0 * c.lift_coeff_tessline),
        boundary_coeff: Real(c.boundary_coeff),
        boundary_coeff_tessline: Real(c.boundary_coeff_tessline),
        caps: Caps {
            lift: Real(caps::LIFT),
            lift_tessline: Real(caps::LIFT_TESSLINE),
            rf: Real(caps::RF),
            rf_tessline: Real(caps::RF_TESSLINE),
            boundary: Real(caps::BOUNDARY),
            boundary_tessline: Real(caps::BOUNDARY_TESSLINE),
        },
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub word: String,
    pub parity: &'static str,
    pub class: &'static str,
    pub translation_length: Real,
    /// Repelling and attracting ends of the axis, as `[x, y]` pairs.
    pub axis: Option<[[Real; 2]; 2]>,
}

pub fn classify_report(word: &str) -> Result<ClassifyReport, CliError> {
    let w: NormalForm = word.parse()?;
    let g = word_to_isometry(&w);
    let class = classify(&g)?;
    let axis = if class.tag.is_axial() {
        let (r, a) = axis_endpoints(&g)?;
        Some([[Real(r.re), Real(r.im)], [Real(a.re), Real(a.im)]])
    } else {
        None
    };
    Ok(ClassifyReport {
        word: w.to_string(),
        parity: match w.parity() {
            pentile_core::Parity::Preserving => "preserving",
            pentile_core::Parity::Reversing => "reversing",
        },
        class: class.tag.name(),
        translation_length: Real(class.translation_length),
        axis,
    })
}

#[derive(Debug, Serialize)]
pub struct BoundReport {
    pub formula: &'static str,
    pub ell: Option<Real>,
    #[serde(flatten)]
    pub bound: BoundJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub layers: Option<u32>,
}

pub fn lift_report(ell: f64, tessline: bool) -> Result<BoundReport, CliError> {
    Ok(BoundReport {
        formula: if tessline { "lift_tessline" } else { "lift" },
        ell: Some(Real(ell)),
        bound: bounds::lift_index_bound(ell, tessline)?.into(),
        layers: None,
    })
}

pub fn rf_report(ell: f64, tessline: bool) -> Result<BoundReport, CliError> {
    Ok(BoundReport {
        formula: if tessline { "rf_tessline" } else { "rf" },
        ell: Some(Real(ell)),
        bound: bounds::rf_index_bound(ell, tessline)?.into(),
        layers: None,
    })
}

pub fn lerf_report(input: &LerfInput, in_core: bool) -> Result<BoundReport, CliError> {
    let b = bounds::lerf_bound(input, in_core)?;
    Ok(BoundReport {
        formula: b.case.id(),
        ell: None,
        bound: b.bound.into(),
        layers: b.layers,
    })
}
