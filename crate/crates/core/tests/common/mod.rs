//! Shared loading of the golden example files.

use std::path::PathBuf;

use relideal::multipoly::text::{parse_poly, parse_univariate};
use relideal::{ExactInt, Perm, PermGroup, Rationals, TriangularBasis, UniPoly};
use serde_json::Value;

pub struct Golden {
    pub number: u64,
    pub label: String,
    pub f: UniPoly<Rationals>,
    pub p: ExactInt,
    pub x: Vec<ExactInt>,
    pub group: PermGroup,
    pub degrees: Vec<u32>,
    pub discriminant: ExactInt,
    pub basis: TriangularBasis,
}

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden")
}

pub fn load(number: u64) -> Golden {
    let path = dir().join(format!("ex{:02}.json", number));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let n = v["group"]["n"].as_u64().unwrap() as usize;
    let gens = v["group"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| Perm::parse_cycles(g.as_str().unwrap(), n).unwrap())
        .collect();
    let int = |x: &Value| -> ExactInt {
        match x {
            Value::String(s) => s.parse().unwrap(),
            _ => ExactInt::from(x.as_i64().unwrap()),
        }
    };
    Golden {
        number,
        label: v["label"].as_str().unwrap().to_string(),
        f: parse_univariate(v["f"].as_str().unwrap()).unwrap(),
        p: int(&v["prime"]),
        x: v["labeling"].as_array().unwrap().iter().map(int).collect(),
        group: PermGroup::generate(n, gens).unwrap(),
        degrees: v["degrees"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap() as u32).collect(),
        discriminant: int(&v["discriminant"]),
        basis: TriangularBasis::new(
            v["basis"].as_array().unwrap().iter().map(|s| parse_poly(s.as_str().unwrap(), Some(n)).unwrap()).collect(),
        )
        .unwrap(),
    }
}

pub fn all() -> Vec<Golden> {
    (1..=14).map(load).collect()
}
