use serde_json::{json, Value};

use crate::characteristic::CharacteristicClass;
use crate::exact::Rational;
use crate::multilinear::Cochain;

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// `{"degree": p, "entries": [{"tuple": [...], "value": [...]}]}` with the
/// nonzero entries only, tuples given by basis names of the source algebra.
pub fn cochain_json(c: &Cochain, basis: &[String]) -> Value {
    let entries: Vec<Value> = c
        .entries()
        .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
        .map(|(t, v)| {
            let names: Vec<&str> = t.iter().map(|&i| basis[i].as_str()).collect();
            json!({ "tuple": names, "value": strings(v) })
        })
        .collect();
    json!({ "degree": c.degree(), "entries": entries })
}

/// One line per nonzero entry, `(x, y) -> [a, b]`, or `0`.
pub fn cochain_text(c: &Cochain, basis: &[String]) -> String {
    let mut out = String::new();
    for (t, v) in c.entries() {
        if v.iter().all(Rational::is_zero) {
            continue;
        }
        let names: Vec<&str> = t.iter().map(|&i| basis[i].as_str()).collect();
        out.push_str(&format!("({}) -> [{}]\n", names.join(", "), strings(v).join(", ")));
    }
    if out.is_empty() {
        out.push_str("0\n");
    }
    out
}

pub fn class_json(class: &CharacteristicClass, basis: &[String]) -> Value {
    json!({
        "degree": class.degree,
        "h_dim": class.h_dim(),
        "coordinates": strings(&class.coordinates),
        "representative": cochain_json(&class.representative, basis),
    })
}

pub fn class_text(class: &CharacteristicClass, basis: &[String]) -> String {
    let mut out = format!(
        "degree: {}\nh_dim: {}\ncoordinates: [{}]\nrepresentative:\n",
        class.degree,
        class.h_dim(),
        strings(&class.coordinates).join(", ")
    );
    for line in cochain_text(&class.representative, basis).lines() {
        out.push_str("  ");
        out.push_str(line);
        out.push('\n');
    }
    out
}
