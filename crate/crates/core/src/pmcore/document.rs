//! JSON input documents describing polymatroids.
//!
//! ```json
//! {"type":"rank_table","n":2,"rank":{"":0,"0":1,"1":1,"0,1":1}}
//! {"type":"graph","vertices":3,"edges":[[0,1],[1,2],[2,0]]}
//! {"type":"vectors","dim":2,"subspaces":[[[1,0]],[["1/2",0]],[[0,[3,4]]]]}
//! {"type":"uniform","r":2,"n":4}
//! {"type":"op","op":"sum","args":[{...},{...}]}
//! ```

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

use super::graph::Graph;
use super::polymatroid::{elements, mask_of, Polymatroid, Subset};
use super::vectors::VectorConfig;

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn field<'a>(doc: &'a Value, key: &str) -> Result<&'a Value> {
    doc.get(key)
        .ok_or_else(|| malformed(format!("missing field `{key}`")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    match v {
        Value::Number(n) => n.as_u64().map(|x| x as usize),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
    .ok_or_else(|| malformed(format!("{what} must be a nonnegative integer")))
}

fn as_rank(v: &Value) -> Result<u64> {
    let big: BigInt = match v {
        Value::Number(n) => n.as_u64().map(BigInt::from),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
    .ok_or_else(|| malformed("rank values must be nonnegative integers"))?;
    big.to_u64()
        .ok_or_else(|| malformed(format!("rank value {big} does not fit the rank table")))
}

fn as_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| Rational::from_integer(x.into()))
            .ok_or_else(|| malformed(format!("coordinate {n} is not an integer; use \"p/q\""))),
        Value::String(s) => parse_rational(s),
        Value::Array(pair) if pair.len() == 2 => {
            let num = as_rational(&pair[0])?;
            let den = as_rational(&pair[1])?;
            if den == Rational::from_integer(0.into()) {
                return Err(malformed("zero denominator"));
            }
            Ok(num / den)
        }
        _ => Err(malformed("coordinates are integers, \"p/q\" strings, or [num, den] pairs")),
    }
}

fn as_list<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| malformed(format!("{what} must be an array")))
}

/// Parses a subset given as an array of element indices.
pub fn parse_subset(v: &Value, n: usize) -> Result<Subset> {
    let elems = as_list(v, "subset")?
        .iter()
        .map(|e| as_usize(e, "subset element"))
        .collect::<Result<Vec<_>>>()?;
    mask_of(&elems, n)
}

fn parse_key(key: &str, n: usize) -> Result<Subset> {
    if key.trim().is_empty() {
        return Ok(0);
    }
    let elems = key
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| malformed(format!("bad subset key `{key}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    mask_of(&elems, n)
}

pub fn subset_key(a: Subset) -> String {
    elements(a)
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses any polymatroid document. Axioms are not checked here.
pub fn parse_polymatroid(doc: &Value) -> Result<Polymatroid> {
    let ty = field(doc, "type")?
        .as_str()
        .ok_or_else(|| malformed("`type` must be a string"))?;
    let pm = match ty {
        "rank_table" => {
            let n = as_usize(field(doc, "n")?, "n")?;
            if n > super::polymatroid::ABSOLUTE_MAX_N {
                return Err(Error::CapExceeded {
                    what: "rank table size",
                    limit: super::polymatroid::ABSOLUTE_MAX_N,
                    got: n,
                });
            }
            let entries = field(doc, "rank")?
                .as_object()
                .ok_or_else(|| malformed("`rank` must be an object"))?;
            let mut table = vec![None; 1 << n];
            for (k, v) in entries {
                let a = parse_key(k, n)?;
                if table[a as usize].replace(as_rank(v)?).is_some() {
                    return Err(malformed(format!("subset `{k}` listed twice")));
                }
            }
            let table = table
                .into_iter()
                .enumerate()
                .map(|(a, r)| r.ok_or_else(|| malformed(format!("missing rank for subset `{}`", subset_key(a as Subset)))))
                .collect::<Result<Vec<_>>>()?;
            Polymatroid::from_table(n, table)?
        }
        "graph" => {
            let vertices = as_usize(field(doc, "vertices")?, "vertices")?;
            let edges = as_list(field(doc, "edges")?, "edges")?
                .iter()
                .map(|e| {
                    let pair = as_list(e, "edge")?;
                    if pair.len() != 2 {
                        return Err(malformed("each edge is a pair [u, v]"));
                    }
                    Ok((as_usize(&pair[0], "endpoint")?, as_usize(&pair[1], "endpoint")?))
                })
                .collect::<Result<Vec<_>>>()?;
            Graph::new(vertices, edges)?.to_polymatroid()?
        }
        "vectors" => {
            let dim = as_usize(field(doc, "dim")?, "dim")?;
            let subspaces = as_list(field(doc, "subspaces")?, "subspaces")?
                .iter()
                .map(|gens| {
                    as_list(gens, "subspace")?
                        .iter()
                        .map(|vec| as_list(vec, "vector")?.iter().map(as_rational).collect())
                        .collect::<Result<Vec<Vec<Rational>>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            VectorConfig::new(dim, subspaces)?.to_polymatroid()?
        }
        "uniform" => {
            let r = as_usize(field(doc, "r")?, "r")?;
            let n = as_usize(field(doc, "n")?, "n")?;
            if n > super::polymatroid::ABSOLUTE_MAX_N {
                return Err(Error::CapExceeded {
                    what: "rank table size",
                    limit: super::polymatroid::ABSOLUTE_MAX_N,
                    got: n,
                });
            }
            Polymatroid::uniform(r, n)?
        }
        "op" => parse_op(doc)?,
        other => return Err(malformed(format!("unknown document type `{other}`"))),
    };
    match doc.get("labels") {
        None | Some(Value::Null) => Ok(pm),
        Some(ls) => {
            let labels = as_list(ls, "labels")?
                .iter()
                .map(|l| match l {
                    Value::String(s) => Ok(s.clone()),
                    other => Ok(other.to_string()),
                })
                .collect::<Result<Vec<_>>>()?;
            pm.with_labels(labels)
        }
    }
}

fn parse_op(doc: &Value) -> Result<Polymatroid> {
    let op = field(doc, "op")?
        .as_str()
        .ok_or_else(|| malformed("`op` must be a string"))?;
    let args = as_list(field(doc, "args")?, "args")?;
    let first = || -> Result<Polymatroid> {
        parse_polymatroid(args.first().ok_or_else(|| malformed(format!("`{op}` needs a polymatroid argument")))?)
    };
    let subset_arg = |pm: &Polymatroid| -> Result<Subset> {
        parse_subset(
            args.get(1)
                .ok_or_else(|| malformed(format!("`{op}` needs a subset argument")))?,
            pm.n(),
        )
    };
    match op {
        "dual" => first()?.dual(),
        "sum" => args.iter().try_fold(Polymatroid::empty(), |acc, a| {
            acc.direct_sum(&parse_polymatroid(a)?)
        }),
        "restrict" => {
            let pm = first()?;
            pm.restrict(subset_arg(&pm)?)
        }
        "delete" => {
            let pm = first()?;
            pm.delete(subset_arg(&pm)?)
        }
        "contract" => {
            let pm = first()?;
            pm.contract(subset_arg(&pm)?)
        }
        other => Err(malformed(format!("unknown op `{other}`"))),
    }
}

pub fn parse_polymatroid_str(text: &str) -> Result<Polymatroid> {
    let doc: Value = serde_json::from_str(text)?;
    parse_polymatroid(&doc)
}

/// Canonical `rank_table` document.
pub fn to_document(pm: &Polymatroid) -> Value {
    let mut rank = Map::new();
    for a in 0..=pm.full() {
        rank.insert(subset_key(a), json!(pm.rank(a)));
    }
    let mut doc = json!({"type": "rank_table", "n": pm.n(), "rank": rank});
    if let Some(ls) = pm.labels() {
        doc["labels"] = json!(ls);
    }
    doc
}
