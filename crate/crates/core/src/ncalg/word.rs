use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::generator::{Gen, Mat};

/// A product of generators. Ordered by length first, then lexicographically
/// by letter rank.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word(pub SmallVec<[Gen; 8]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn letter(g: Gen) -> Word {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    pub fn from_slice(gs: &[Gen]) -> Word {
        Word(SmallVec::from_slice(gs))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn prepend(&self, g: Gen) -> Word {
        let mut v = SmallVec::with_capacity(self.len() + 1);
        v.push(g);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn tail(&self) -> Word {
        Word::from_slice(&self.0[1..])
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// True when every letter belongs to one of `mats`.
    pub fn only(&self, mats: &[Mat]) -> bool {
        self.0.iter().all(|g| mats.contains(&g.mat()))
    }

    pub fn parse(s: &str) -> Option<Word> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Some(Word::empty());
        }
        s.split(['*', ' '])
            .filter(|t| !t.is_empty())
            .map(Gen::parse)
            .collect::<Option<SmallVec<_>>>()
            .map(Word)
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.len().cmp(&o.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}", g)?;
        }
        Ok(())
    }
}
