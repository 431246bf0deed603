//! Residual checks over the rewrite system.

use crate::field::FieldError;
use crate::ncalg::orient::same_span;
use crate::ncalg::{Gen, Mat, NCPoly, RewriteError, RewriteSystem};

use super::observables::Observable;
use super::rtt::{rtt_expand, Tag};
use super::standard::expand_omega;
use super::tables::{determinant, printed};

/// Comparison of one exchange family with its printed component list.
#[derive(Clone, Debug)]
pub struct BlockComparison {
    pub tag: Tag,
    pub printed_lines: usize,
    pub distinct: usize,
    pub duplicates: Vec<String>,
    pub expanded: usize,
    pub same_span: bool,
    /// Printed relations with a nonzero normal form.
    pub printed_residuals: Vec<(String, NCPoly)>,
    /// Expanded relations with a nonzero normal form.
    pub expanded_residuals: Vec<(usize, NCPoly)>,
}

impl BlockComparison {
    pub fn passed(&self) -> bool {
        self.same_span && self.printed_residuals.is_empty() && self.expanded_residuals.is_empty()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("no printed block for {0}")]
    NotPrinted(Tag),
}

/// Reduces the printed relations and the matrix expansion of `tag` against
/// each other.
pub fn compare_block(tag: Tag, sys: &RewriteSystem) -> Result<BlockComparison, CheckError> {
    let block = printed(tag).ok_or(CheckError::NotPrinted(tag))?;
    let ours = rtt_expand(tag);
    let theirs = block.polys();
    let mut printed_residuals = Vec::new();
    for r in &block.relations {
        let n = sys.nf(&r.relation)?;
        if !n.is_zero() {
            printed_residuals.push((r.text.clone(), n));
        }
    }
    let mut expanded_residuals = Vec::new();
    for (i, r) in ours.iter().enumerate() {
        let n = sys.nf(r)?;
        if !n.is_zero() {
            expanded_residuals.push((i, n));
        }
    }
    Ok(BlockComparison {
        tag,
        printed_lines: block.printed_len(),
        distinct: block.relations.len(),
        duplicates: block.duplicates.iter().map(|d| d.text.clone()).collect(),
        expanded: ours.len(),
        same_span: same_span(&ours, &theirs)?,
        printed_residuals,
        expanded_residuals,
    })
}

/// Normal forms of every Ω relation and of `det_q Ω - 1` after replacing Ω
/// by `Γ Γ̄⁻¹`; all must vanish.
pub fn omega_link(sys: &RewriteSystem) -> Result<Vec<(String, usize, NCPoly)>, RewriteError> {
    let mut out = Vec::new();
    for z in [Mat::O, Mat::G, Mat::B, Mat::P] {
        let tag = Tag::OZ(z);
        for (i, r) in rtt_expand(tag).iter().enumerate() {
            out.push((tag.to_string(), i, sys.nf(&expand_omega(r))?));
        }
    }
    let det = determinant(Mat::O).expect("det Ω is printed");
    out.push(("det O".to_string(), 0, sys.nf(&expand_omega(&det))?));
    Ok(out)
}

/// `nf([a, b])` for each pair.
pub fn commutators(
    sys: &RewriteSystem,
    pairs: &[(String, NCPoly, String, NCPoly)],
) -> Result<Vec<(String, String, NCPoly)>, RewriteError> {
    pairs
        .iter()
        .map(|(na, a, nb, b)| Ok((na.clone(), nb.clone(), sys.commutator(a, b)?)))
        .collect()
}

fn letters(mats: &[Mat]) -> Vec<(String, NCPoly)> {
    Gen::all()
        .filter(|g| mats.contains(&g.mat()))
        .map(|g| (g.name(), NCPoly::letter(g)))
        .collect()
}

fn named(o: Observable, sys: &RewriteSystem) -> Result<(String, NCPoly), RewriteError> {
    Ok((o.name().to_string(), o.poly(sys)?))
}

/// The fifteen pairs of the commuting set.
pub fn commuting_set_pairs(
    sys: &RewriteSystem,
) -> Result<Vec<(String, NCPoly, String, NCPoly)>, RewriteError> {
    let ops: Vec<(String, NCPoly)> = Observable::COMMUTING
        .iter()
        .map(|&o| named(o, sys))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            out.push((
                ops[i].0.clone(),
                ops[i].1.clone(),
                ops[j].0.clone(),
                ops[j].1.clone(),
            ));
        }
    }
    Ok(out)
}

/// Each observable against each letter of the given matrices.
pub fn letter_pairs(
    sys: &RewriteSystem,
    obs: &[Observable],
    mats: &[Mat],
) -> Result<Vec<(String, NCPoly, String, NCPoly)>, RewriteError> {
    let mut out = Vec::new();
    for &o in obs {
        let (n, p) = named(o, sys)?;
        for (ln, l) in letters(mats) {
            out.push((n.clone(), p.clone(), ln, l));
        }
    }
    Ok(out)
}
