//! wasm-bindgen exports behind `www/index.html`.
//!
//! Each export is a thin wrapper over a plain function returning
//! `traid::Result`, so the logic is testable off the browser.

use serde_json::json;
use traid::harmonic::{self, EigenState, HalfInt};
use traid::pure::winding_vector;
use traid::reps::AbelianRep;
use traid::worldlines::{render_strand_diagram, DiagramOptions};
use traid::Word;
use wasm_bindgen::prelude::*;

const MAX_STRANDS: usize = 12;
const MAX_RESOLUTION: usize = 301;

fn parse_word(n: usize, word: &str) -> traid::Result<Word> {
    if n > MAX_STRANDS {
        return Err(traid::Error::OutOfRange {
            what: "strand count",
            detail: format!("the demo draws at most {MAX_STRANDS} strands"),
        });
    }
    Word::parse(word, n)
}

/// SVG strand diagrams of a word and of its normal form.
pub fn diagrams(n: usize, word: &str) -> traid::Result<(String, String)> {
    let w = parse_word(n, word)?;
    let opts = DiagramOptions {
        width: (60.0 + 36.0 * w.len() as f64).clamp(240.0, 1200.0),
        height: 40.0 + 32.0 * n as f64,
        ..DiagramOptions::default()
    };
    let nf = w.normal_form();
    let nf_opts = DiagramOptions {
        width: (60.0 + 36.0 * nf.len() as f64).clamp(240.0, 1200.0),
        ..opts.clone()
    };
    Ok((render_strand_diagram(&w, &opts), render_strand_diagram(&nf, &nf_opts)))
}

/// Normal form, permutation, purity and (for pure four-strand words) the
/// winding vector, as JSON.
pub fn word_summary(n: usize, word: &str) -> traid::Result<String> {
    let w = parse_word(n, word)?;
    let nf = w.normal_form();
    let mut v = json!({
        "input_length": w.len(),
        "normal_form": nf.to_string(),
        "length": nf.len(),
        "perm": w.perm_image().to_string(),
        "pure": w.is_pure(),
    });
    if n == 4 && w.is_pure() {
        v["winding"] = json!(winding_vector(&w)?.entries);
    }
    Ok(v.to_string())
}

fn state(rep: &str, nu: u32, lambda: &str) -> traid::Result<EigenState> {
    let rep: AbelianRep = rep.parse()?;
    let lambda: HalfInt = lambda.parse()?;
    EigenState::new(nu, lambda, rep)
}

/// Contour plot of a trapped three-body state.
pub fn field_plot(rep: &str, nu: u32, lambda: &str, resolution: usize) -> traid::Result<String> {
    let s = state(rep, nu, lambda)?;
    let resolution = resolution.min(MAX_RESOLUTION);
    let grid = harmonic::field_grid(&s, 4.0, resolution)?;
    Ok(harmonic::render_field_svg(&s, &grid, 420.0, 8))
}

/// Allowed angular momenta and levels up to `emax`, as JSON.
pub fn spectrum_summary(rep: &str, emax: f64) -> traid::Result<String> {
    let rep: AbelianRep = rep.parse()?;
    let lambdas: Vec<String> = harmonic::allowed_lambdas(&rep, 4)?.iter().map(|l| l.to_string()).collect();
    let levels: Vec<_> = harmonic::spectrum(&rep, emax)?
        .iter()
        .map(|l| {
            json!({
                "energy": l.energy.to_string(),
                "degeneracy": l.degeneracy,
                "states": l.states.iter().map(|(nu, lam)| json!([nu, lam.to_string()])).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({
        "rep": rep.to_string(),
        "statistics": rep.classify().to_string(),
        "lambdas": lambdas,
        "levels": levels,
    })
    .to_string())
}

fn js(e: traid::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen(js_name = strandDiagram)]
pub fn strand_diagram_js(n: usize, word: &str) -> Result<String, JsError> {
    diagrams(n, word).map(|d| d.0).map_err(js)
}

#[wasm_bindgen(js_name = normalFormDiagram)]
pub fn normal_form_diagram_js(n: usize, word: &str) -> Result<String, JsError> {
    diagrams(n, word).map(|d| d.1).map_err(js)
}

#[wasm_bindgen(js_name = wordSummary)]
pub fn word_summary_js(n: usize, word: &str) -> Result<String, JsError> {
    word_summary(n, word).map_err(js)
}

#[wasm_bindgen(js_name = fieldPlot)]
pub fn field_plot_js(rep: &str, nu: u32, lambda: &str, resolution: usize) -> Result<String, JsError> {
    field_plot(rep, nu, lambda, resolution).map_err(js)
}

#[wasm_bindgen(js_name = spectrumSummary)]
pub fn spectrum_summary_js(rep: &str, emax: f64) -> Result<String, JsError> {
    spectrum_summary(rep, emax).map_err(js)
}
