//! Browser bindings: each export returns a JSON string for `www/index.html`.

use multichain_poset::families::{
    boolean_labeling, boolean_lattice, chain, chain_labeling, diamond, hypercube_face_lattice,
    hypercube_multichain_count, pentagon,
};
use multichain_poset::incidence::{count_multichains, mobius_bottom_top, zeta_polynomial_eval};
use multichain_poset::io::format_label;
use multichain_poset::multichain::multichain_poset;
use multichain_poset::shellability::{is_el_labeling, product_labeling, EdgeLabeling};
use multichain_poset::Poset;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest multichain poset the page will draw.
pub const DRAW_LIMIT: u64 = 400;

fn base(family: &str, param: usize) -> Result<(Poset, Option<EdgeLabeling>), String> {
    let err = |e: multichain_poset::PosetError| e.to_string();
    Ok(match family {
        "chain" => (chain(param.max(1)).map_err(err)?, Some(chain_labeling(param.max(1)))),
        "boolean" if param <= 4 => (boolean_lattice(param).map_err(err)?, Some(boolean_labeling(param))),
        "hypercube" if param <= 3 => (hypercube_face_lattice(param).map_err(err)?, None),
        "diamond" => {
            let labels = EdgeLabeling::from_values([((0, 1), 1), ((0, 2), 2), ((0, 3), 3), ((1, 4), 3), ((2, 4), 1), ((3, 4), 2)]);
            (diamond(), Some(labels))
        }
        "pentagon" => (pentagon(), None),
        "boolean" | "hypercube" => return Err(format!("{family} parameter too large")),
        other => return Err(format!("unknown family {other:?}")),
    })
}

/// Nodes with ranks and label text, and cover edges with product labels.
pub fn diagram(family: &str, param: usize, m: usize) -> Result<Value, String> {
    let (p, labeling) = base(family, param)?;
    if m == 0 {
        return Err("m must be at least 1".into());
    }
    let count = count_multichains(&p, m).map_err(|e| e.to_string())?;
    if count > DRAW_LIMIT.into() {
        return Err(format!("{count} elements is too many to draw"));
    }
    let mp = multichain_poset(&p, m).map_err(|e| e.to_string())?;
    let ranks = mp.poset.ranks().unwrap_or_else(|_| mp.poset.heights());
    let product = labeling.as_ref().map(|l| product_labeling(&mp, l)).transpose().map_err(|e| e.to_string())?;
    let el = product
        .as_ref()
        .map(|l| is_el_labeling(&mp.poset, l).map(|v| v.holds()))
        .transpose()
        .map_err(|e| e.to_string())?;
    let nodes: Vec<Value> = (0..mp.len())
        .map(|i| json!({ "id": i, "label": mp.poset.display_label(i), "rank": ranks[i] }))
        .collect();
    let edges: Vec<Value> = mp
        .poset
        .cover_edges()
        .iter()
        .map(|&(a, b)| {
            let label = product.as_ref().and_then(|l| l.get(a, b)).map(|l| format_label(l));
            json!({ "from": a, "to": b, "label": label })
        })
        .collect();
    Ok(json!({ "count": mp.len(), "nodes": nodes, "edges": edges, "el": el }))
}

/// `Z(P, t)` for `t` in `from..=to`, with `μ(0̂, 1̂)` of the base.
pub fn zeta_values(family: &str, param: usize, from: i64, to: i64) -> Result<Value, String> {
    if to < from || to - from > 200 {
        return Err("range must be increasing and at most 200 wide".into());
    }
    let (p, _) = base(family, param)?;
    let values = (from..=to)
        .map(|t| {
            zeta_polynomial_eval(&p, t)
                .map(|z| json!({ "t": t, "z": z.to_string() }))
                .map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mu = mobius_bottom_top(&p).map_err(|e| e.to_string())?;
    Ok(json!({ "elements": p.len(), "mobius": mu.to_string(), "values": values }))
}

/// Rows `n = 1..=max_n` of `|HC_n^(m)|` for `m = 1..=max_m`.
pub fn hypercube_table(max_n: u32, max_m: u32) -> Result<Value, String> {
    if max_n == 0 || max_m == 0 || max_n > 30 || max_m > 30 {
        return Err("n and m must lie in 1..=30".into());
    }
    let rows: Vec<Value> = (1..=max_n)
        .map(|n| {
            let row: Vec<String> = (1..=max_m).map(|m| hypercube_multichain_count(n, m).to_string()).collect();
            json!({ "n": n, "counts": row })
        })
        .collect();
    Ok(json!({ "rows": rows }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = multichainDiagram)]
pub fn multichain_diagram(family: &str, param: usize, m: usize) -> Result<String, JsValue> {
    to_js(diagram(family, param, m))
}

#[wasm_bindgen(js_name = zetaValues)]
pub fn zeta_values_js(family: &str, param: usize, from: i32, to: i32) -> Result<String, JsValue> {
    to_js(zeta_values(family, param, from.into(), to.into()))
}

#[wasm_bindgen(js_name = hypercubeTable)]
pub fn hypercube_table_js(max_n: u32, max_m: u32) -> Result<String, JsValue> {
    to_js(hypercube_table(max_n, max_m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_diagram() {
        let d = diagram("diamond", 0, 2).unwrap();
        assert_eq!(d["count"], 12);
        assert_eq!(d["edges"].as_array().unwrap().len(), 18);
        assert_eq!(d["el"], true);
        assert_eq!(d["nodes"][11]["rank"], 4);
        assert_eq!(d["edges"][0]["label"], "0,1");
    }

    #[test]
    fn unlabeled_and_refused() {
        let d = diagram("pentagon", 0, 2).unwrap();
        assert_eq!(d["el"], Value::Null);
        assert!(diagram("chain", 30, 4).is_err());
        assert!(diagram("nonsense", 1, 1).is_err());
        assert!(diagram("chain", 3, 0).is_err());
    }

    #[test]
    fn zeta_range() {
        let z = zeta_values("hypercube", 2, -2, 2).unwrap();
        assert_eq!(z["mobius"], "-1");
        let values: Vec<&str> = z["values"].as_array().unwrap().iter().map(|v| v["z"].as_str().unwrap()).collect();
        assert_eq!(values, ["-10", "-1", "0", "1", "10"]);
    }

    #[test]
    fn hypercube_counts() {
        let t = hypercube_table(3, 2).unwrap();
        assert_eq!(t["rows"][2]["counts"][1], "153");
        assert!(hypercube_table(0, 1).is_err());
    }
}
