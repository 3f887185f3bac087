//! Provenance sidecars: which gadget every interesting vertex of a reduced
//! instance came from, plus the numbers needed to solve it again.

use maxcol_core::{GadgetParams, GadgetTag, Problem, ReductionInstance, VertexId};
use serde_json::{json, Map, Value};

pub fn problem_name(p: Problem) -> &'static str {
    match p {
        Problem::IndependentSet => "is",
        Problem::DominatingSet => "ds",
    }
}

pub fn tag_name(tag: GadgetTag) -> String {
    match tag {
        GadgetTag::Binomial => "binomial".into(),
        GadgetTag::Standalone => "standalone".into(),
        GadgetTag::Edge { u, v, i1, i2 } => format!("edge({u},{v};{i1},{i2})"),
        GadgetTag::Vertex { v, i1, i2 } => format!("vertex({v};{i1},{i2})"),
        GadgetTag::Dominating { v } => format!("dominating({v})"),
        GadgetTag::Connector => "connector".into(),
    }
}

pub fn provenance_json(inst: &ReductionInstance) -> Value {
    let mut vertices = Map::new();
    for (v, role) in &inst.provenance {
        let mut entry = Map::new();
        entry.insert("role".into(), json!(role.kind.name()));
        if let Some((i, j)) = role.index {
            entry.insert("i".into(), json!(i));
            entry.insert("j".into(), json!(j));
        }
        entry.insert("gadget_tag".into(), json!(tag_name(role.tag)));
        vertices.insert(v.to_string(), Value::Object(entry));
    }
    json!({
        "problem": problem_name(inst.problem),
        "n": inst.params.n(),
        "k": inst.params.k(),
        "D": inst.params.denominator().to_string(),
        "denominator": inst.forest.denominator().to_string(),
        "M_numerator": inst.threshold.to_string(),
        "r": inst.color_bound,
        "scale": inst.scale,
        "hub": inst.hub,
        "beta": inst.beta,
        "vertices": Value::Object(vertices),
    })
}

/// What a solver needs from a sidecar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scheme {
    pub params: GadgetParams,
    pub scale: u32,
    pub hub: Option<VertexId>,
    pub color_bound: Option<usize>,
}

pub fn parse_scheme(text: &str) -> Result<Scheme, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("provenance: {e}"))?;
    let uint = |key: &str| -> Result<Option<u64>, String> {
        match v.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(x) => x.as_u64().map(Some).ok_or_else(|| format!("provenance: `{key}` is not a non-negative integer")),
        }
    };
    let need = |key: &str| uint(key)?.ok_or_else(|| format!("provenance: missing `{key}`"));
    let n = need("n")? as usize;
    let k = need("k")? as usize;
    let params = GadgetParams::new(n, k).map_err(|e| format!("provenance: {e}"))?;
    let scale = u32::try_from(uint("scale")?.unwrap_or(1)).map_err(|_| "provenance: scale too large".to_string())?;
    Ok(Scheme { params, scale, hub: uint("hub")?.map(|h| h as usize), color_bound: uint("r")?.map(|r| r as usize) })
}
