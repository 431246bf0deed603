//! The oriented rule set used for normal ordering.

use std::sync::OnceLock;

use thiserror::Error;

use crate::ncalg::confluence::{complete, CompletionReport};
use crate::ncalg::orient::{orient, orient_expecting, violating_products, Order, OrientError};
use crate::ncalg::star::{gamma_bar_inverse, gamma_inverse};
use crate::ncalg::{Gen, Mat, NCPoly, RewriteError, RewriteSystem, Rule};

use super::rtt::{rtt_expand, Tag};
use super::tables::{determinant, printed};

/// Rounds of completion attempted before giving up.
pub const COMPLETION_ROUNDS: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BuildError {
    #[error("{tag}: {source}")]
    Orient { tag: String, source: OrientError },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

fn letters(m: Mat) -> Vec<Gen> {
    Gen::all().filter(|g| g.mat() == m).collect()
}

/// Relations defining the block for `tag`: the printed list when there is
/// one, the matrix expansion otherwise.
pub fn block_relations(tag: Tag) -> Vec<NCPoly> {
    match printed(tag) {
        Some(b) => b.polys(),
        None => rtt_expand(tag),
    }
}

/// Orients one block under the standard order. Mixed blocks must produce
/// exactly the products that violate segment order.
pub fn orient_block(tag: Tag) -> Result<Vec<Rule>, BuildError> {
    let rels = block_relations(tag);
    let order = Order::standard();
    let (x, y) = tag.mats();
    let res = if x == y {
        orient(&rels, &order)
    } else {
        let expected = violating_products(&letters(x), &letters(y), &order);
        orient_expecting(&rels, &order, &expected)
    };
    res.map_err(|source| BuildError::Orient {
        tag: tag.to_string(),
        source,
    })
}

fn det_rule(m: Mat) -> Result<Rule, BuildError> {
    let d = determinant(m).expect("matrix has a determinant condition");
    let mut r = orient(&[d], &Order::standard()).map_err(|source| BuildError::Orient {
        tag: format!("det {}", m.prefix()),
        source,
    })?;
    Ok(r.remove(0))
}

/// Entry `(i, k)` of `Γ Γ̄⁻¹` in Γ and Γ̄ letters.
pub fn omega_prime(i: u8, k: u8) -> NCPoly {
    let mut acc = NCPoly::zero();
    for j in 1..=2 {
        acc = acc.add(&NCPoly::letter(Gen::new(Mat::G, i, j)).mul_free(&gamma_bar_inverse(j, k)));
    }
    acc
}

/// `Ω_ik - (Γ Γ̄⁻¹)_ik` for all four entries.
pub fn link_relations() -> Vec<NCPoly> {
    let mut out = Vec::new();
    for i in 1..=2 {
        for k in 1..=2 {
            out.push(NCPoly::letter(Gen::new(Mat::O, i, k)).sub(&omega_prime(i, k)));
        }
    }
    out
}

/// A rewrite system together with how it was assembled.
#[derive(Debug)]
pub struct BuiltSystem {
    pub system: RewriteSystem,
    /// Oriented rules per relation family, before completion.
    pub blocks: Vec<(String, Vec<Rule>)>,
    pub completion: CompletionReport,
}

fn finish(blocks: Vec<(String, Vec<Rule>)>) -> Result<BuiltSystem, BuildError> {
    let seed = RewriteSystem::from_rules(blocks.iter().flat_map(|(_, r)| r.iter().cloned()))?;
    let (system, completion) = complete(&seed, COMPLETION_ROUNDS)?;
    Ok(BuiltSystem {
        system,
        blocks,
        completion,
    })
}

fn base_blocks() -> Result<Vec<(String, Vec<Rule>)>, BuildError> {
    let mut blocks = Vec::new();
    for tag in Tag::ALL {
        blocks.push((tag.to_string(), orient_block(tag)?));
    }
    for m in [Mat::G, Mat::B, Mat::O] {
        blocks.push((format!("det {}", m.prefix()), vec![det_rule(m)?]));
    }
    Ok(blocks)
}

/// Entry `(i, j)` of `Ω⁻¹`.
pub fn omega_inverse(i: u8, j: u8) -> NCPoly {
    gamma_inverse(i, j).substitute(&|g: Gen| {
        let (a, b) = g.ij();
        NCPoly::letter(Gen::new(Mat::O, a, b))
    })
}

/// Entry `(i, j)` of `Ω⁻¹ Γ`, which equals Γ̄ once Ω is identified with
/// `Γ Γ̄⁻¹`.
pub fn gamma_bar_image(i: u8, j: u8) -> NCPoly {
    let mut acc = NCPoly::zero();
    for k in 1..=2 {
        acc = acc.add(&omega_inverse(i, k).mul_free(&NCPoly::letter(Gen::new(Mat::G, k, j))));
    }
    acc
}

/// Replaces every Γ̄ letter by the corresponding entry of `Ω⁻¹ Γ`.
pub fn eliminate_gamma_bar(p: &NCPoly) -> NCPoly {
    p.substitute(&|g: Gen| {
        if g.mat() == Mat::B {
            let (i, j) = g.ij();
            gamma_bar_image(i, j)
        } else {
            NCPoly::letter(g)
        }
    })
}

/// Replaces every Ω letter by the corresponding entry of `Γ Γ̄⁻¹`.
pub fn expand_omega(p: &NCPoly) -> NCPoly {
    p.substitute(&|g: Gen| {
        if g.mat() == Mat::O {
            let (i, j) = g.ij();
            omega_prime(i, j)
        } else {
            NCPoly::letter(g)
        }
    })
}

/// Builds the system over all sixteen letters with Ω independent.
pub fn build_base() -> Result<BuiltSystem, BuildError> {
    finish(base_blocks()?)
}

/// The shared base system.
pub fn base() -> &'static BuiltSystem {
    static SYS: OnceLock<BuiltSystem> = OnceLock::new();
    SYS.get_or_init(|| build_base().expect("standard rules are consistent"))
}
