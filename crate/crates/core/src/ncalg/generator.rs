use std::fmt;

/// The four 2x2 matrices whose entries are the generators.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Mat {
    /// Γ
    G,
    /// Γ̄
    B,
    /// Ω
    O,
    /// P
    P,
}

impl Mat {
    pub const ALL: [Mat; 4] = [Mat::G, Mat::B, Mat::O, Mat::P];

    pub fn prefix(self) -> &'static str {
        match self {
            Mat::G => "G",
            Mat::B => "Gb",
            Mat::O => "O",
            Mat::P => "P",
        }
    }

    /// Entry order within the segment, lowest first.
    fn entry_order(self) -> [(u8, u8); 4] {
        match self {
            Mat::G | Mat::O => [(2, 1), (1, 1), (2, 2), (1, 2)],
            Mat::B => [(1, 2), (1, 1), (2, 2), (2, 1)],
            Mat::P => [(2, 1), (2, 2), (1, 1), (1, 2)],
        }
    }

    fn segment(self) -> u8 {
        match self {
            Mat::G => 0,
            Mat::B => 1,
            Mat::O => 2,
            Mat::P => 3,
        }
    }
}

/// One of the sixteen generator letters. The wrapped value is the letter's
/// rank in the normal-ordering precedence.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gen(u8);

impl Gen {
    pub const COUNT: usize = 16;

    pub fn new(m: Mat, i: u8, j: u8) -> Gen {
        assert!((1..=2).contains(&i) && (1..=2).contains(&j));
        let pos = m.entry_order().iter().position(|&e| e == (i, j)).unwrap() as u8;
        Gen(m.segment() * 4 + pos)
    }

    pub fn from_rank(r: u8) -> Gen {
        assert!((r as usize) < Self::COUNT);
        Gen(r)
    }

    #[inline]
    pub fn rank(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn mat(self) -> Mat {
        Mat::ALL[(self.0 / 4) as usize]
    }

    pub fn ij(self) -> (u8, u8) {
        self.mat().entry_order()[(self.0 % 4) as usize]
    }

    pub fn all() -> impl Iterator<Item = Gen> {
        (0..Self::COUNT as u8).map(Gen)
    }

    /// The twelve letters of Γ, Γ̄ and P.
    pub fn base() -> impl Iterator<Item = Gen> {
        Self::all().filter(|g| g.mat() != Mat::O)
    }

    pub fn name(self) -> String {
        let (i, j) = self.ij();
        format!("{}{}{}", self.mat().prefix(), i, j)
    }

    /// Accepts `G11`, `Gb11` (or `B11`), `O11`, `P11`.
    pub fn parse(s: &str) -> Option<Gen> {
        let (m, rest) = if let Some(r) = s.strip_prefix("Gb") {
            (Mat::B, r)
        } else if let Some(r) = s.strip_prefix('G') {
            (Mat::G, r)
        } else if let Some(r) = s.strip_prefix('B') {
            (Mat::B, r)
        } else if let Some(r) = s.strip_prefix('O') {
            (Mat::O, r)
        } else {
            let r = s.strip_prefix('P')?;
            (Mat::P, r)
        };
        let b = rest.as_bytes();
        if b.len() != 2 {
            return None;
        }
        let i = b[0].wrapping_sub(b'0');
        let j = b[1].wrapping_sub(b'0');
        if (1..=2).contains(&i) && (1..=2).contains(&j) {
            Some(Gen::new(m, i, j))
        } else {
            None
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
