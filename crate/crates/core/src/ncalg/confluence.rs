//! Critical pairs of overlapping rules and completion.

use super::poly::NCPoly;
use super::system::{RewriteError, RewriteSystem, Rule};
use super::word::Word;
use crate::field::Scalar;

#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub overlap: Word,
    /// Difference of the two reductions, in normal form.
    pub difference: NCPoly,
}

#[derive(Clone, Debug, Default)]
pub struct ConfluenceReport {
    pub overlaps_checked: usize,
    pub failures: Vec<CriticalPair>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reduces every overlap `abc` of rules `ab` and `bc` both ways.
pub fn confluence_check(sys: &RewriteSystem) -> Result<ConfluenceReport, RewriteError> {
    let rules = sys.rules();
    let mut report = ConfluenceReport::default();
    for r1 in &rules {
        for r2 in rules.iter().filter(|r| r.lhs[0] == r1.lhs[1]) {
            let c = r2.lhs[1];
            let a = r1.lhs[0];
            let overlap = Word::from_slice(&[a, r1.lhs[1], c]);
            let left = sys.nf(&r1.rhs.mul_free(&NCPoly::letter(c)))?;
            let right = sys.nf(&NCPoly::letter(a).mul_free(&r2.rhs))?;
            let difference = left.sub(&right);
            report.overlaps_checked += 1;
            if !difference.is_zero() {
                report.failures.push(CriticalPair {
                    overlap,
                    difference,
                });
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Default)]
pub struct CompletionReport {
    pub initial: ConfluenceReport,
    /// Rules added by completion, in the order they were found.
    pub added: Vec<Rule>,
    /// Differences whose leading word is not a two-letter product.
    pub unresolved: Vec<CriticalPair>,
    /// Failures left after the last round; empty on success.
    pub remaining: Vec<CriticalPair>,
}

impl CompletionReport {
    pub fn is_complete(&self) -> bool {
        self.remaining.is_empty() && self.unresolved.is_empty()
    }
}

/// Adds oriented critical-pair differences as new rules until every overlap
/// joins or `max_rounds` is reached.
pub fn complete(
    sys: &RewriteSystem,
    max_rounds: usize,
) -> Result<(RewriteSystem, CompletionReport), RewriteError> {
    let mut current = sys.clone();
    let initial = confluence_check(&current)?;
    let mut report = CompletionReport {
        initial: initial.clone(),
        ..Default::default()
    };
    let mut pending = initial.failures;
    for _ in 0..max_rounds {
        if pending.is_empty() {
            break;
        }
        let mut progressed = false;
        for cp in pending {
            let d = current.nf(&cp.difference)?;
            let Some((lead, c)) = d.leading().map(|(w, c)| (w.clone(), c.clone())) else {
                continue;
            };
            if lead.len() != 2 {
                report.unresolved.push(CriticalPair {
                    overlap: cp.overlap,
                    difference: d,
                });
                continue;
            }
            let inv = c.inv().expect("nonzero leading coefficient");
            let mut rhs = d.scale(&inv.neg_ref());
            rhs.add_term(lead.clone(), &Scalar::one());
            let rule = Rule {
                lhs: [lead.letters()[0], lead.letters()[1]],
                rhs,
            };
            current.insert(rule.clone())?;
            report.added.push(rule);
            progressed = true;
        }
        pending = confluence_check(&current)?.failures;
        if !progressed {
            break;
        }
    }
    report.remaining = pending;
    Ok((current, report))
}
