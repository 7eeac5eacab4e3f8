//! Browser bindings: level constants, q-expansions and the Kronecker limit
//! check, each returning JSON text for the page to render.

use num_complex::Complex64;
use serde_json::json;
use wasm_bindgen::prelude::*;

use moonshine_core::fieldgen::kappa_bound;
use moonshine_core::forms::{eisenstein_plus, eta_product_delta, level_context, LevelContext, GENUS_TABLE};
use moonshine_core::spectral::{kronecker_limit_check, limit_constants, phi_scattering};

fn js_err(e: moonshine_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

fn row(ctx: &LevelContext) -> serde_json::Value {
    let kappa = match ctx.genus {
        0 => Some(kappa_bound(ctx, 1, 1).kappa),
        1 => Some(kappa_bound(ctx, 2, 3).kappa),
        _ => None,
    };
    json!({
        "level": ctx.n,
        "genus": ctx.genus,
        "ell": ctx.ell_n,
        "k": ctx.k_n,
        "d": ctx.d_n,
        "kappa": kappa,
        "volume": ctx.volume,
    })
}

/// Constants for every tabulated level of the given genus (0 to 3).
#[wasm_bindgen]
pub fn level_table(genus: u32) -> Result<String, JsError> {
    let levels = GENUS_TABLE
        .get(genus as usize)
        .ok_or_else(|| JsError::new("genus must be 0, 1, 2 or 3"))?;
    let rows: Vec<_> = levels
        .iter()
        .map(|&n| level_context(n).map(|c| row(&c)))
        .collect::<Result<_, _>>()
        .map_err(js_err)?;
    Ok(serde_json::Value::Array(rows).to_string())
}

/// `kind` is `"delta"` or `"eisenstein"`; `weight` applies to the latter.
#[wasm_bindgen]
pub fn q_expansion(level: u64, kind: &str, weight: u32, trunc: i64) -> Result<String, JsError> {
    let ctx = level_context(level).map_err(js_err)?;
    let trunc = trunc.clamp(0, 400);
    let f = match kind {
        "delta" => eta_product_delta(&ctx, trunc.max(ctx.d_n as i64)),
        "eisenstein" => eisenstein_plus(&ctx, weight, trunc).map_err(js_err)?,
        other => return Err(JsError::new(&format!("unknown kind {other:?}"))),
    };
    let coeffs: Vec<String> = (f.min_exp()..=f.trunc())
        .map(|e| moonshine_core::ntheory::fmt_rational(&f.coeff(e)))
        .collect();
    Ok(json!({
        "level": level,
        "min_exp": f.min_exp(),
        "trunc": f.trunc(),
        "coeffs": coeffs,
        "text": f.display_terms(24),
    })
    .to_string())
}

/// Both sides of the Kronecker limit formula at `z`, plus the scattering
/// term and its residue at `s = 1`.
#[wasm_bindgen]
pub fn kronecker_check(level: u64, re: f64, im: f64, terms: u32) -> Result<String, JsError> {
    let ctx = level_context(level).map_err(js_err)?;
    let r = kronecker_limit_check(&ctx, Complex64::new(re, im), terms as u64).map_err(js_err)?;
    let lc = limit_constants(&ctx);
    let eps = 1e-6;
    let residue = phi_scattering(&ctx, Complex64::new(1.0 + eps, 0.0)).map_err(js_err)?.re * eps;
    Ok(json!({
        "level": level,
        "lhs": r.lhs,
        "rhs": r.rhs,
        "diff": r.diff,
        "c_minus1": lc.c_minus1,
        "c_0": lc.c_0,
        "volume": lc.volume,
        "residue": residue,
    })
    .to_string())
}
