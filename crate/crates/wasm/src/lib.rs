//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes plain values and returns a JSON string. Errors come
//! back as a thrown string.

use itertools::Itertools;
use mmin::reduction::{closed_form_counts, gadget_block, measured_block_counts};
use mmin::{
    count_minimizers, minimizers_fast, AlphabetOrdering, LetterAlphabet, Result, WindowParams,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest alphabet the landscape enumerates (720 orderings).
pub const MAX_LANDSCAPE_SIGMA: u32 = 6;

#[derive(Serialize)]
struct SampleView {
    positions: Vec<usize>,
    count: usize,
    windows: usize,
    density: f64,
}

#[derive(Serialize)]
struct LandscapePoint {
    order: String,
    count: usize,
}

#[derive(Serialize)]
struct LandscapeView {
    points: Vec<LandscapePoint>,
    min: usize,
    max: usize,
}

#[derive(Serialize)]
struct GadgetView {
    case: String,
    block: String,
    m_ab: usize,
    m_ba: usize,
    measured_ab: usize,
    measured_ba: usize,
}

fn encode(text: &str, order: &str) -> Result<(mmin::IntString, LetterAlphabet)> {
    let order_letters = order.split('<').flat_map(|t| t.trim().chars());
    let alphabet = LetterAlphabet::from_letters(text.chars().chain(order_letters))?;
    Ok((alphabet.encode(text)?, alphabet))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

pub fn sample_json(text: &str, w: usize, k: usize, order: &str) -> Result<String> {
    let (s, alphabet) = encode(text, order)?;
    let ord = if order.trim().is_empty() {
        AlphabetOrdering::identity(alphabet.sigma())
    } else {
        AlphabetOrdering::parse_letters(order, &alphabet)?
    };
    let p = WindowParams::new(w, k)?;
    let set = minimizers_fast(&s, p, &ord)?;
    let windows = p.window_count(s.len());
    Ok(to_json(&SampleView {
        positions: set.positions().to_vec(),
        count: set.len(),
        windows,
        density: set.len() as f64 / windows.max(1) as f64,
    }))
}

pub fn landscape_json(text: &str, w: usize, k: usize) -> Result<String> {
    let (s, alphabet) = encode(text, "")?;
    if alphabet.sigma() > MAX_LANDSCAPE_SIGMA {
        return Err(mmin::Error::BudgetExceeded {
            size: alphabet.sigma() as usize,
            max: MAX_LANDSCAPE_SIGMA as usize,
        });
    }
    let p = WindowParams::new(w, k)?;
    let points = (0..alphabet.sigma())
        .permutations(alphabet.sigma() as usize)
        .map(|perm| {
            let ord = AlphabetOrdering::from_permutation(perm)?;
            Ok(LandscapePoint {
                order: ord.to_letter_string(&alphabet),
                count: count_minimizers(&s, p, &ord)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let counts = points.iter().map(|x| x.count);
    let (min, max) = (counts.clone().min().unwrap_or(0), counts.max().unwrap_or(0));
    Ok(to_json(&LandscapeView { points, min, max }))
}

pub fn gadget_json(w: usize, k: usize) -> Result<String> {
    let closed = closed_form_counts(w, k)?;
    let measured = measured_block_counts(w, k)?;
    Ok(to_json(&GadgetView {
        case: closed.case.to_string(),
        block: gadget_block(w, k)?.to_string(),
        m_ab: closed.m_ab,
        m_ba: closed.m_ba,
        measured_ab: measured.m_ab,
        measured_ba: measured.m_ba,
    }))
}

fn js(r: Result<String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

/// Minimizer positions (1-based) of a letter string; `order` like `c<a<g<t`,
/// or empty for alphabetical.
#[wasm_bindgen]
pub fn sample(text: &str, w: usize, k: usize, order: &str) -> Result<String, JsValue> {
    js(sample_json(text, w, k, order))
}

/// Minimizer count under every ordering of the string's letters.
#[wasm_bindgen]
pub fn landscape(text: &str, w: usize, k: usize) -> Result<String, JsValue> {
    js(landscape_json(text, w, k))
}

/// The two-letter block used by the reduction and its counts under `a<b`
/// and `b<a`.
#[wasm_bindgen]
pub fn gadget(w: usize, k: usize) -> Result<String, JsValue> {
    js(gadget_json(w, k))
}
