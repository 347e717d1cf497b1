//! Thin wasm-bindgen wrappers around the core crate for the browser demo.
//!
//! Every function takes and returns JSON strings so the page stays a single
//! static file with no generated bindings beyond the wasm loader. Errors
//! come back as `{"error": "..."}` rather than exceptions.

use eckardt_core::discform::FiniteQuadraticForm;
use eckardt_core::lattice::GramLattice;
use eckardt_core::matrix::{Int, Rat};
use eckardt_core::roots::short_vectors;
use eckardt_core::wps;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

fn err(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

/// Invariants of a lattice given as {"labels": [...], "gram": [[...]]}:
/// determinant, signature, parity, discriminant group and form, and the
/// root count when the lattice is positive definite of moderate rank.
#[wasm_bindgen]
pub fn lattice_info(lattice_json: &str) -> String {
    let l = match GramLattice::from_json(lattice_json) {
        Ok(l) => l,
        Err(e) => return err(e),
    };
    let (p, n, z) = l.signature();
    let disc = match l.discriminant_group() {
        Ok(d) => {
            let orders: Vec<String> = d.orders().iter().map(Int::to_string).collect();
            json!(orders)
        }
        Err(_) => json!(null),
    };
    let form = FiniteQuadraticForm::of_lattice(&l)
        .ok()
        .map(|f| f.to_json_value());
    let roots = (l.is_positive_definite() && l.rank() <= 16)
        .then(|| short_vectors(&l, 2).ok().map(|sv| sv.count_with_signs))
        .flatten();
    json!({
        "rank": l.rank(),
        "labels": l.labels(),
        "det": l.det().to_string(),
        "signature": [p, n, z],
        "even": l.is_even(),
        "discriminant_group_orders": disc,
        "discriminant_form": form,
        "root_count": roots,
    })
    .to_string()
}

/// Full report on a weighted hypersurface: well-formedness, Fermat
/// existence, the quasi-K3 test and (when a Fermat member exists) the
/// primitive Hodge numbers and the numerical-K3 test.
#[wasm_bindgen]
pub fn wps_report(weights_csv: &str, degree: u64) -> String {
    let weights: Result<Vec<u64>, _> = weights_csv
        .split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect();
    let weights = match weights {
        Ok(w) => w,
        Err(e) => return err(format!("bad weights: {e}")),
    };
    let w = match wps::WeightedHypersurface::new(weights, degree) {
        Ok(w) => w,
        Err(e) => return err(e),
    };
    let hodge = w.fermat_hodge_numbers().ok();
    let numerical = w.is_numerical_k3_fermat().ok();
    json!({
        "weights": w.weights,
        "degree": w.degree,
        "weight_sum": w.weight_sum(),
        "dimension": w.dimension(),
        "well_formed": w.is_well_formed(),
        "fermat_exists": w.fermat_exists(),
        "quasi_k3": w.is_quasi_k3(),
        "hodge_prim": hodge,
        "numerical_k3": numerical,
    })
    .to_string()
}

/// The classification of quasi-K3 Fermat fourfolds as a JSON array of rows.
#[wasm_bindgen]
pub fn wps_classify() -> String {
    match wps::classify_quasi_k3_fermat_fourfolds() {
        Ok(fams) => {
            let rows: Vec<_> = fams
                .iter()
                .map(|f| {
                    json!({
                        "case": f.case,
                        "weights": f.weights,
                        "degree": f.degree,
                        "exponents": f.exponents,
                        "h22_prim": f.h22_prim,
                        "hodge": f.hodge,
                    })
                })
                .collect();
            json!(rows).to_string()
        }
        Err(e) => err(e),
    }
}

/// Partitions of num/den into `parts` unit fractions with denominators
/// at least 2.
#[wasm_bindgen]
pub fn unit_fractions(num: i64, den: i64, parts: u32) -> String {
    if den == 0 {
        return err("zero denominator");
    }
    let target = Rat::new(Int::from(num), Int::from(den));
    let rows = wps::unit_fraction_partitions(&target, parts);
    json!(rows).to_string()
}
