#![allow(dead_code)]

use std::path::PathBuf;

use kuramoto_facets::network::{parse_network, Network};

pub const DESK: [&str; 4] = ["triangle", "tree5", "cycle5", "chordal4"];
pub const ALL: [&str; 6] = ["edge", "triangle", "tree5", "cycle5", "chordal4", "wheel10"];

pub fn network_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("networks").join(format!("{name}.json"))
}

pub fn load(name: &str) -> Network {
    parse_network(&std::fs::read_to_string(network_path(name)).unwrap()).unwrap()
}
