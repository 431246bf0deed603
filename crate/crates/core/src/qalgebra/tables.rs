//! Component relation tables.

use std::sync::OnceLock;

use crate::ncalg::{parse_poly, Mat, NCPoly};

use super::rtt::Tag;

const SOURCE: &str = include_str!("tables.txt");

#[derive(Clone, Debug)]
pub struct PrintedRelation {
    /// 1-based line in the data file.
    pub line: usize,
    pub text: String,
    /// `lhs - rhs`.
    pub relation: NCPoly,
}

#[derive(Clone, Debug)]
pub struct PrintedBlock {
    pub name: String,
    pub relations: Vec<PrintedRelation>,
    /// Lines repeating an earlier relation of the block verbatim.
    pub duplicates: Vec<PrintedRelation>,
}

impl PrintedBlock {
    pub fn polys(&self) -> Vec<NCPoly> {
        self.relations.iter().map(|r| r.relation.clone()).collect()
    }

    /// Number of printed lines, duplicates included.
    pub fn printed_len(&self) -> usize {
        self.relations.len() + self.duplicates.len()
    }
}

fn load() -> Vec<PrintedBlock> {
    let mut blocks: Vec<PrintedBlock> = Vec::new();
    for (n, raw) in SOURCE.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            blocks.push(PrintedBlock {
                name: name.to_string(),
                relations: Vec::new(),
                duplicates: Vec::new(),
            });
            continue;
        }
        let (l, r) = line.split_once('=').expect("relation line has one '='");
        let lhs = parse_poly(l).unwrap_or_else(|e| panic!("line {}: {e}", n + 1));
        let rhs = parse_poly(r).unwrap_or_else(|e| panic!("line {}: {e}", n + 1));
        let rel = PrintedRelation {
            line: n + 1,
            text: line.to_string(),
            relation: lhs.sub(&rhs),
        };
        let block = blocks.last_mut().expect("section header first");
        if block.relations.iter().any(|x| x.relation == rel.relation) {
            block.duplicates.push(rel);
        } else {
            block.relations.push(rel);
        }
    }
    blocks
}

pub fn printed_blocks() -> &'static [PrintedBlock] {
    static BLOCKS: OnceLock<Vec<PrintedBlock>> = OnceLock::new();
    BLOCKS.get_or_init(load)
}

fn named(name: &str) -> Option<&'static PrintedBlock> {
    printed_blocks().iter().find(|b| b.name == name)
}

/// The printed block for `tag`, when one exists.
pub fn printed(tag: Tag) -> Option<&'static PrintedBlock> {
    match tag {
        Tag::OZ(Mat::O) => named("OO"),
        Tag::OZ(_) => None,
        t => named(&t.to_string()),
    }
}

/// The three deformed determinant conditions for Γ, Γ̄ and Ω, as `lhs - 1`.
pub fn determinants() -> [NCPoly; 3] {
    let d = named("DET").expect("determinant section").polys();
    [d[0].clone(), d[1].clone(), d[2].clone()]
}

/// The determinant condition whose letters come from `m`.
pub fn determinant(m: Mat) -> Option<NCPoly> {
    let [g, b, o] = determinants();
    match m {
        Mat::G => Some(g),
        Mat::B => Some(b),
        Mat::O => Some(o),
        Mat::P => None,
    }
}
