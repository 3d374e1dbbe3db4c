//! Bundled example documents: small graphs, the Gray graph pair, two pairs of
//! planar point configurations, and a hypersimplex decomposition.

use crate::error::{Error, Result};
use crate::pmcore::{parse_polymatroid_str, Polymatroid};

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        /// `(name, JSON document)` for every bundled polymatroid.
        pub const POLYMATROIDS: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../fixtures/", $name, ".json")))),*
        ];
    };
}

fixtures!(
    "loop", "coloop", "mgon3", "mgon4", "mgon5", "mgon6", "multiedge2", "multiedge3", "multiedge4",
    "multiedge5", "gray1", "gray2", "six_x", "six_y", "seven_x", "seven_y",
);

/// `(name, JSON document)` for every bundled signed decomposition.
pub const DECOMPOSITIONS: &[(&str, &str)] = &[
    ("u24_split", include_str!("../fixtures/u24_split.json")),
    ("u24_split_broken", include_str!("../fixtures/u24_split_broken.json")),
];

pub fn document(name: &str) -> Result<&'static str> {
    POLYMATROIDS
        .iter()
        .chain(DECOMPOSITIONS)
        .find(|(n, _)| *n == name)
        .map(|(_, doc)| *doc)
        .ok_or_else(|| Error::Unknown {
            kind: "fixture",
            name: name.to_string(),
        })
}

/// Loads and validates a bundled polymatroid.
pub fn polymatroid(name: &str) -> Result<Polymatroid> {
    let pm = parse_polymatroid_str(document(name)?)?;
    pm.validate().map_err(Error::Invalid)?;
    Ok(pm)
}
