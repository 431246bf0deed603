//! Solving blocks of quadratic relations for their leading products.

use std::cmp::Ordering;

use thiserror::Error;

use super::generator::{Gen, Mat};
use super::poly::NCPoly;
use super::system::Rule;
use super::word::Word;
use crate::field::linalg::Matrix;
use crate::field::FieldError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrientError {
    #[error("leading term {0} is not a two-letter product")]
    NotQuadratic(String),
    #[error("block does not determine the expected products: missing {missing:?}, unexpected {unexpected:?}")]
    Singular {
        missing: Vec<String>,
        unexpected: Vec<String>,
    },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A total order on letters, extended to words by length then
/// lexicographic comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    rank: [u8; Gen::COUNT],
}

impl Order {
    /// The engine's normal-ordering precedence.
    pub fn standard() -> Order {
        let mut rank = [0u8; Gen::COUNT];
        for g in Gen::all() {
            rank[g.index()] = g.rank();
        }
        Order { rank }
    }

    /// Segments listed from lowest to highest, keeping the standard order
    /// inside each segment.
    pub fn with_segments(segs: [Mat; 4]) -> Order {
        let mut rank = [0u8; Gen::COUNT];
        for g in Gen::all() {
            let s = segs.iter().position(|&m| m == g.mat()).unwrap() as u8;
            rank[g.index()] = s * 4 + g.rank() % 4;
        }
        Order { rank }
    }

    pub fn rank(&self, g: Gen) -> u8 {
        self.rank[g.index()]
    }

    pub fn cmp_words(&self, a: &Word, b: &Word) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            a.letters()
                .iter()
                .map(|&g| self.rank(g))
                .cmp(b.letters().iter().map(|&g| self.rank(g)))
        })
    }
}

fn sorted_words(rels: &[NCPoly], order: &Order) -> Vec<Word> {
    let mut words: Vec<Word> = rels
        .iter()
        .flat_map(|r| r.terms().map(|(w, _)| w.clone()))
        .collect();
    words.sort_by(|a, b| order.cmp_words(b, a));
    words.dedup();
    words
}

fn coefficient_matrix(rels: &[NCPoly], words: &[Word]) -> Matrix {
    Matrix::from_rows(
        rels.iter()
            .map(|r| words.iter().map(|w| r.coeff(w)).collect())
            .collect(),
    )
}

/// Dimension of the span of `rels`.
pub fn relation_rank(rels: &[NCPoly]) -> Result<usize, FieldError> {
    let words = sorted_words(rels, &Order::standard());
    if words.is_empty() {
        return Ok(0);
    }
    coefficient_matrix(rels, &words).rank()
}

/// True when the two relation sets span the same space.
pub fn same_span(a: &[NCPoly], b: &[NCPoly]) -> Result<bool, FieldError> {
    let ra = relation_rank(a)?;
    let rb = relation_rank(b)?;
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    Ok(ra == rb && relation_rank(&both)? == ra)
}

/// Solves the block for its leading products under `order`. Every pivot
/// must be a two-letter word.
pub fn orient(rels: &[NCPoly], order: &Order) -> Result<Vec<Rule>, OrientError> {
    let words = sorted_words(rels, order);
    if words.is_empty() {
        return Ok(Vec::new());
    }
    let mut m = coefficient_matrix(rels, &words);
    let piv = m.rref()?;
    let mut rules = Vec::with_capacity(piv.len());
    for (row, &p) in piv.iter().enumerate() {
        let lhs = &words[p];
        if lhs.len() != 2 {
            return Err(OrientError::NotQuadratic(lhs.to_string()));
        }
        let mut rhs = NCPoly::zero();
        for (j, w) in words.iter().enumerate() {
            if j == p {
                continue;
            }
            let c = m.get(row, j);
            if !c.is_zero() {
                rhs.add_term(w.clone(), &c.neg_ref());
            }
        }
        rules.push(Rule {
            lhs: [lhs.letters()[0], lhs.letters()[1]],
            rhs,
        });
    }
    Ok(rules)
}

/// Like [`orient`], and additionally requires the left-hand sides to be
/// exactly `expected`.
pub fn orient_expecting(
    rels: &[NCPoly],
    order: &Order,
    expected: &[Word],
) -> Result<Vec<Rule>, OrientError> {
    let rules = orient(rels, order)?;
    let got: Vec<Word> = rules.iter().map(Rule::lhs_word).collect();
    let missing: Vec<String> = expected
        .iter()
        .filter(|w| !got.contains(w))
        .map(Word::to_string)
        .collect();
    let unexpected: Vec<String> = got
        .iter()
        .filter(|w| !expected.contains(w))
        .map(Word::to_string)
        .collect();
    if missing.is_empty() && unexpected.is_empty() {
        Ok(rules)
    } else {
        Err(OrientError::Singular {
            missing,
            unexpected,
        })
    }
}

/// Relations `lhs - rhs` of a rule list.
pub fn relations(rules: &[Rule]) -> Vec<NCPoly> {
    rules.iter().map(Rule::relation).collect()
}

/// Products `y x` with letters from `ys` and `xs` that are larger than
/// `x y` under `order`.
pub fn violating_products(xs: &[Gen], ys: &[Gen], order: &Order) -> Vec<Word> {
    let mut out = Vec::new();
    for &x in xs {
        for &y in ys {
            let w = Word::from_slice(&[x, y]);
            let v = Word::from_slice(&[y, x]);
            let big = if order.cmp_words(&w, &v) == Ordering::Greater {
                w
            } else {
                v
            };
            if x != y && !out.contains(&big) {
                out.push(big);
            }
        }
    }
    out
}
