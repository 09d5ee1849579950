use serde_json::{json, Map, Value};

use super::{BasisLabel, Sparse, SuperAlgebra};
use crate::constructors::AlgebraKind;
use crate::error::{Error, Result};
use crate::scalar::{Field, FieldKind};

pub const ALGEBRA_VERSION: &str = "superz-algebra/1";

pub(super) fn to_json(a: &SuperAlgebra) -> Value {
    let basis: Vec<Value> =
        a.basis.iter().map(|b| json!({"name": b.name, "parity": b.parity})).collect();
    let mut constants = Vec::new();
    let n = a.dim();
    for j in 0..n {
        for i in 0..=j {
            let entry = &a.table[super::tri(i, j)];
            if entry.is_empty() {
                continue;
            }
            let mut coeffs = Map::new();
            for (k, c) in entry {
                coeffs.insert(a.basis[*k].name.clone(), Value::String(c.to_string()));
            }
            constants.push(json!({"i": i, "j": j, "coeffs": coeffs}));
        }
    }
    let prime = match a.field.kind() {
        FieldKind::Prime(p) => json!(p),
        FieldKind::Rationals => json!("rational"),
    };
    json!({
        "version": ALGEBRA_VERSION,
        "kind": a.kind.family_name(),
        "params": a.kind.params_json(),
        "prime": prime,
        "basis": basis,
        "constants": constants,
    })
}

fn bad(what: &str) -> Error {
    Error::Parse(format!("algebra document: {what}"))
}

pub(super) fn from_json(v: &Value) -> Result<SuperAlgebra> {
    if v.get("version").and_then(Value::as_str) != Some(ALGEBRA_VERSION) {
        return Err(bad("unsupported version"));
    }
    let field = match v.get("prime") {
        Some(Value::String(s)) if s == "rational" => Field::rationals(),
        Some(p) => Field::prime(p.as_u64().ok_or_else(|| bad("prime"))?)?,
        None => return Err(bad("missing prime")),
    };
    let kind = AlgebraKind::from_json(
        v.get("kind").and_then(Value::as_str).ok_or_else(|| bad("kind"))?,
        v.get("params").ok_or_else(|| bad("params"))?,
    )?;
    let mut basis = Vec::new();
    for b in v.get("basis").and_then(Value::as_array).ok_or_else(|| bad("basis"))? {
        let name = b.get("name").and_then(Value::as_str).ok_or_else(|| bad("basis name"))?;
        let parity = b.get("parity").and_then(Value::as_u64).ok_or_else(|| bad("basis parity"))?;
        basis.push(BasisLabel::new(name, parity as u8));
    }
    let n = basis.len();
    let index: std::collections::HashMap<&str, usize> =
        basis.iter().enumerate().map(|(i, b)| (b.name.as_str(), i)).collect();
    let mut table: Vec<Sparse> = vec![Vec::new(); n * (n + 1) / 2];
    for c in v.get("constants").and_then(Value::as_array).ok_or_else(|| bad("constants"))? {
        let i = c.get("i").and_then(Value::as_u64).ok_or_else(|| bad("i"))? as usize;
        let j = c.get("j").and_then(Value::as_u64).ok_or_else(|| bad("j"))? as usize;
        if i > j || j >= n {
            return Err(bad("constant index"));
        }
        let mut entry: Sparse = Vec::new();
        for (label, s) in c.get("coeffs").and_then(Value::as_object).ok_or_else(|| bad("coeffs"))? {
            let k = *index.get(label.as_str()).ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            let x = field.parse(s.as_str().ok_or_else(|| bad("scalar"))?)?;
            if !x.is_zero() {
                entry.push((k, x));
            }
        }
        entry.sort_by_key(|(k, _)| *k);
        table[super::tri(i, j)] = entry;
    }
    SuperAlgebra::from_table(field, kind, basis, table)
}
