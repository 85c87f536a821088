//! Three demo operations exported to JavaScript. Each returns a JSON string;
//! failures become thrown JS strings.

use packed_core::codes::{boosted_code, coinversion_code, enumerate_packed_words, insert_from_boosted};
use packed_core::quotients::QuotientRing;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Keeps the page responsive: the lex bases above this size take seconds.
pub const MAX_N: usize = 5;

fn check(n: usize, k: usize) -> Result<(), String> {
    if n == 0 || k == 0 || k > n {
        return Err(format!("need 1 <= k <= n, got n = {n}, k = {k}"));
    }
    if n > MAX_N {
        return Err(format!("the demo stops at n = {MAX_N}"));
    }
    Ok(())
}

/// Packed words with at least `k` distinct letters and their codes.
pub fn enumerate_json(n: usize, k: usize) -> Result<String, String> {
    check(n, k)?;
    let words = enumerate_packed_words(n, k).map_err(|e| e.to_string())?;
    let rows: Vec<_> = words
        .iter()
        .map(|w| {
            let sigma = w.to_osp();
            json!({
                "word": w.to_string(),
                "osp": sigma.to_string(),
                "code": coinversion_code(&sigma).to_string(),
                "boosted_code": boosted_code(&sigma).to_string(),
            })
        })
        .collect();
    Ok(json!({ "n": n, "k": k, "count": rows.len(), "rows": rows }).to_string())
}

/// Hilbert series of `S_{n,k}` (`ring = "S"`) or `R_{n,k}` (`ring = "R"`).
pub fn hilbert_json(ring: &str, n: usize, k: usize) -> Result<String, String> {
    check(n, k)?;
    let q = match ring {
        "S" => QuotientRing::packed(n, k, None),
        "R" => QuotientRing::coinvariant(n, k, None),
        other => return Err(format!("unknown ring {other:?}; expected S or R")),
    }
    .map_err(|e| e.to_string())?;
    let h = q.hilbert_series();
    Ok(json!({
        "ring": ring,
        "n": n,
        "k": k,
        "dim": q.dim(),
        "coefficients": h.coefficients(),
        "display": h.to_string(),
    })
    .to_string())
}

/// Inverts the boosted coinversion code given as integers separated by
/// commas or whitespace.
pub fn insert_json(code: &str) -> Result<String, String> {
    let entries = code
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("{t:?} is not a nonnegative integer")))
        .collect::<Result<Vec<_>, _>>()?;
    if entries.is_empty() || entries.len() > 9 {
        return Err("enter between 1 and 9 entries".into());
    }
    let sigma = insert_from_boosted(&entries).map_err(|e| e.to_string())?;
    Ok(json!({
        "code": entries,
        "osp": sigma.to_string(),
        "word": sigma.to_word().to_string(),
        "blocks": sigma.num_blocks(),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn enumerate(n: usize, k: usize) -> Result<String, JsValue> {
    enumerate_json(n, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn hilbert(ring: &str, n: usize, k: usize) -> Result<String, JsValue> {
    hilbert_json(ring, n, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn insert(code: &str) -> Result<String, JsValue> {
    insert_json(code).map_err(|e| JsValue::from_str(&e))
}
