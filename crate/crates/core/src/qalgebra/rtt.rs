//! Component expansion of the matrix exchange relations.

use std::fmt;
use std::str::FromStr;

use crate::field::linalg::Matrix;
use crate::field::Scalar;
use crate::ncalg::{Gen, Mat, NCPoly};

use super::rmatrix::{r12, r12_inv, r21, r21_inv};

/// A 4x4 matrix of noncommutative polynomials, indexed like the R-matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Block(Vec<NCPoly>);

impl Block {
    fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.0[4 * i + j]
    }

    /// `Z ⊗ 1`.
    pub fn kron1(m: Mat) -> Block {
        let mut v = vec![NCPoly::zero(); 16];
        for i in 0..2 {
            for j in 0..2 {
                let z = NCPoly::letter(Gen::new(m, i as u8 + 1, j as u8 + 1));
                for k in 0..2 {
                    v[4 * (2 * i + k) + 2 * j + k] = z.clone();
                }
            }
        }
        Block(v)
    }

    /// `1 ⊗ Z`.
    pub fn kron2(m: Mat) -> Block {
        let mut v = vec![NCPoly::zero(); 16];
        for k in 0..2 {
            for l in 0..2 {
                let z = NCPoly::letter(Gen::new(m, k as u8 + 1, l as u8 + 1));
                for i in 0..2 {
                    v[4 * (2 * i + k) + 2 * i + l] = z.clone();
                }
            }
        }
        Block(v)
    }

    pub fn scalar(m: &Matrix) -> Block {
        Block(
            (0..16)
                .map(|n| NCPoly::constant(m.get(n / 4, n % 4).clone()))
                .collect(),
        )
    }

    /// Product without normal ordering; letter order is preserved.
    pub fn mul(&self, o: &Block) -> Block {
        let mut v = vec![NCPoly::zero(); 16];
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = NCPoly::zero();
                for k in 0..4 {
                    let (a, b) = (self.get(i, k), o.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul_free(b));
                    }
                }
                v[4 * i + j] = acc;
            }
        }
        Block(v)
    }

    pub fn scale(&self, c: &Scalar) -> Block {
        Block(self.0.iter().map(|p| p.scale(c)).collect())
    }

    pub fn sub(&self, o: &Block) -> Block {
        Block(self.0.iter().zip(&o.0).map(|(a, b)| a.sub(b)).collect())
    }

    pub fn entries(&self) -> &[NCPoly] {
        &self.0
    }
}

/// The exchange relation families.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    PP,
    GG,
    BB,
    GB,
    PG,
    PB,
    /// Ω against the given matrix.
    OZ(Mat),
}

impl Tag {
    /// The six families with a printed component list.
    pub const PRINTED: [Tag; 6] = [Tag::PP, Tag::GG, Tag::BB, Tag::GB, Tag::PG, Tag::PB];

    pub const ALL: [Tag; 10] = [
        Tag::PP,
        Tag::GG,
        Tag::BB,
        Tag::GB,
        Tag::PG,
        Tag::PB,
        Tag::OZ(Mat::O),
        Tag::OZ(Mat::G),
        Tag::OZ(Mat::B),
        Tag::OZ(Mat::P),
    ];

    /// The two matrices involved, lower segment first.
    pub fn mats(self) -> (Mat, Mat) {
        match self {
            Tag::PP => (Mat::P, Mat::P),
            Tag::GG => (Mat::G, Mat::G),
            Tag::BB => (Mat::B, Mat::B),
            Tag::GB => (Mat::G, Mat::B),
            Tag::PG => (Mat::G, Mat::P),
            Tag::PB => (Mat::B, Mat::P),
            Tag::OZ(z) if z < Mat::O => (z, Mat::O),
            Tag::OZ(z) => (Mat::O, z),
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::OZ(z) => write!(f, "O{}", z.prefix()),
            t => write!(f, "{:?}", t),
        }
    }
}

impl FromStr for Tag {
    type Err = String;

    fn from_str(s: &str) -> Result<Tag, String> {
        Ok(match s {
            "PP" => Tag::PP,
            "GG" => Tag::GG,
            "BB" | "GbGb" => Tag::BB,
            "GB" | "GGb" => Tag::GB,
            "PG" => Tag::PG,
            "PB" | "PGb" => Tag::PB,
            "OO" => Tag::OZ(Mat::O),
            "OG" => Tag::OZ(Mat::G),
            "OB" | "OGb" => Tag::OZ(Mat::B),
            "OP" => Tag::OZ(Mat::P),
            _ => return Err(format!("unknown relation family {s}")),
        })
    }
}

/// Both sides of the matrix relation for `tag`.
pub fn rtt_sides(tag: Tag) -> (Block, Block) {
    let s = Block::scalar;
    let (r12, r12i, r21, r21i) = (s(&r12()), s(&r12_inv()), s(&r21()), s(&r21_inv()));
    let k1 = Block::kron1;
    let k2 = Block::kron2;
    let q = Scalar::q();
    match tag {
        Tag::PP => (
            r12.mul(&k1(Mat::P)).mul(&r12i).mul(&k2(Mat::P)),
            k2(Mat::P).mul(&r21i).mul(&k1(Mat::P)).mul(&r21),
        ),
        Tag::GG => (
            r21i.mul(&k1(Mat::G)).mul(&r21).mul(&k2(Mat::G)),
            k2(Mat::G).mul(&r12).mul(&k1(Mat::G)).mul(&r12i),
        ),
        Tag::BB => (
            r12.mul(&k1(Mat::B)).mul(&r12i).mul(&k2(Mat::B)),
            k2(Mat::B).mul(&r21i).mul(&k1(Mat::B)).mul(&r21),
        ),
        Tag::GB => (
            r12.mul(&k1(Mat::G)).mul(&r12i).mul(&k2(Mat::B)),
            k2(Mat::B).mul(&r12).mul(&k1(Mat::G)).mul(&r12i),
        ),
        Tag::PG => (
            r21i.mul(&k1(Mat::P)).mul(&r21).mul(&k2(Mat::G)),
            k2(Mat::G).mul(&r21i).mul(&k1(Mat::P)).mul(&r12i).scale(&q),
        ),
        Tag::PB => (
            r12.mul(&k1(Mat::P)).mul(&r12i).mul(&k2(Mat::B)),
            k2(Mat::B).mul(&r21i).mul(&k1(Mat::P)).mul(&r12i).scale(&q),
        ),
        Tag::OZ(z) => {
            let hat = r21.mul(&k2(Mat::O)).mul(&r12);
            (k1(z).mul(&hat), hat.mul(&k1(z)))
        }
    }
}

/// Nonzero component residuals `lhs - rhs` of the relation for `tag`.
pub fn rtt_expand(tag: Tag) -> Vec<NCPoly> {
    let (l, r) = rtt_sides(tag);
    l.sub(&r).0.into_iter().filter(|p| !p.is_zero()).collect()
}
