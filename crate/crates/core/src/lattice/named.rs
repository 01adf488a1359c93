//! Names such as `U ⊕ A2(-1)` or `⟨2⟩ ⊕ ⟨-2⟩` and the lattices they denote.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Lattice, LatticeError};

/// Building blocks with fixed Gram matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    /// Hyperbolic plane [[0,1],[1,0]].
    U,
    /// A1 = ⟨2⟩.
    A1,
    /// [[2,1],[1,2]].
    A2,
    /// [[2,1],[1,-2]].
    H5,
    /// ⟨k⟩.
    Rank1(i64),
}

impl Block {
    fn gram(self) -> Vec<Vec<i64>> {
        match self {
            Block::U => vec![vec![0, 1], vec![1, 0]],
            Block::A1 => vec![vec![2]],
            Block::A2 => vec![vec![2, 1], vec![1, 2]],
            Block::H5 => vec![vec![2, 1], vec![1, -2]],
            Block::Rank1(k) => vec![vec![k]],
        }
    }
}

/// `block(scale)^power`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub block: Block,
    pub scale: i64,
    pub power: u32,
}

impl Term {
    pub fn new(block: Block, scale: i64, power: u32) -> Self {
        Self {
            block,
            scale,
            power,
        }
    }

    pub fn lattice(&self) -> Result<Lattice, LatticeError> {
        let one = Lattice::from_rows(&self.block.gram())?.rescale(&BigInt::from(self.scale))?;
        Ok((0..self.power).fold(Lattice::empty(), |acc, _| acc.direct_sum(&one)))
    }
}

/// An orthogonal direct sum of named blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NamedLattice {
    pub terms: Vec<Term>,
}

impl NamedLattice {
    pub fn new(terms: Vec<Term>) -> Self {
        Self { terms }
    }

    pub fn single(block: Block) -> Self {
        Self::new(vec![Term::new(block, 1, 1)])
    }

    pub fn lattice(&self) -> Result<Lattice, LatticeError> {
        self.terms.iter().try_fold(Lattice::empty(), |acc, t| {
            Ok(acc.direct_sum(&t.lattice()?))
        })
    }

    /// Every term rescaled by `n`.
    pub fn rescaled(&self, n: i64) -> Self {
        Self::new(
            self.terms
                .iter()
                .map(|t| Term::new(t.block, t.scale * n, t.power))
                .collect(),
        )
    }
}

/// Builds a named lattice, optionally rescaled: `make_named("U", Some(2))` is U(2).
pub fn make_named(name: &str, scale: Option<i64>) -> Result<Lattice, LatticeError> {
    let named: NamedLattice = name.parse()?;
    let lattice = named.lattice()?;
    match scale {
        Some(n) => lattice.rescale(&BigInt::from(n)),
        None => Ok(lattice),
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.block {
            Block::Rank1(k) => write!(f, "⟨{}⟩", k * self.scale)?,
            b => {
                let name = match b {
                    Block::U => "U",
                    Block::A1 => "A1",
                    Block::A2 => "A2",
                    Block::H5 => "H5",
                    Block::Rank1(_) => unreachable!(),
                };
                write!(f, "{name}")?;
                if self.scale != 1 {
                    write!(f, "({})", self.scale)?;
                }
            }
        }
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

impl fmt::Display for NamedLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

fn parse_term(src: &str) -> Option<Term> {
    let s = src.trim();
    let (body, power) = match s.rsplit_once('^') {
        Some((b, p)) => (b.trim(), p.trim().parse().ok()?),
        None => (s, 1),
    };
    let bracketed = body
        .strip_prefix('⟨')
        .and_then(|r| r.strip_suffix('⟩'))
        .or_else(|| body.strip_prefix('<').and_then(|r| r.strip_suffix('>')));
    if let Some(k) = bracketed {
        return Some(Term::new(Block::Rank1(k.trim().parse().ok()?), 1, power));
    }
    let lower = body.to_ascii_lowercase();
    if let Some(k) = lower
        .strip_prefix("rank1(")
        .and_then(|r| r.strip_suffix(')'))
    {
        return Some(Term::new(Block::Rank1(k.trim().parse().ok()?), 1, power));
    }
    let (name, scale) = match body.split_once('(') {
        Some((n, rest)) => (n.trim(), rest.strip_suffix(')')?.trim().parse().ok()?),
        None => (body, 1),
    };
    let block = match name {
        "U" => Block::U,
        "A1" => Block::A1,
        "A2" => Block::A2,
        "H5" => Block::H5,
        _ => return None,
    };
    Some(Term::new(block, scale, power))
}

impl FromStr for NamedLattice {
    type Err = LatticeError;

    /// Accepts the display form as well as ASCII `+` and `<k>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::new(vec![]));
        }
        s.split(['⊕', '+'])
            .map(|t| parse_term(t).ok_or_else(|| LatticeError::UnknownName(t.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl Serialize for NamedLattice {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for NamedLattice {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    #[test]
    fn standard_grams() {
        assert_eq!(
            make_named("U", None).unwrap().gram(),
            &IntMatrix::from_rows(&[[0, 1], [1, 0]])
        );
        assert_eq!(
            make_named("U", Some(2)).unwrap().gram(),
            &IntMatrix::from_rows(&[[0, 2], [2, 0]])
        );
        assert_eq!(
            make_named("H5", None).unwrap().gram(),
            &IntMatrix::from_rows(&[[2, 1], [1, -2]])
        );
        assert_eq!(
            make_named("A2(-1)", None).unwrap().gram(),
            &IntMatrix::from_rows(&[[-2, -1], [-1, -2]])
        );
        assert_eq!(
            make_named("rank1(-2)", None).unwrap().gram(),
            &IntMatrix::from_rows(&[[-2]])
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(make_named("E8", None), Err(LatticeError::UnknownName(_))));
        assert_eq!(make_named("U", Some(0)), Err(LatticeError::ZeroScale));
    }

    #[test]
    fn display_and_parse() {
        let cases = [
            "U",
            "U(2)",
            "⟨2⟩ ⊕ ⟨-2⟩",
            "U ⊕ ⟨-2⟩^2",
            "U ⊕ A2(-1)",
            "H5",
            "U(4) ⊕ A1(4)^2",
        ];
        for c in cases {
            let n: NamedLattice = c.parse().unwrap();
            assert_eq!(n.to_string(), c);
        }
        let ascii: NamedLattice = "U + <-2>^2".parse().unwrap();
        assert_eq!(ascii.to_string(), "U ⊕ ⟨-2⟩^2");
        assert_eq!(ascii.lattice().unwrap().rank(), 4);
    }

    #[test]
    fn rescaled_names() {
        let t: NamedLattice = "U ⊕ A2".parse().unwrap();
        assert_eq!(t.rescaled(3).to_string(), "U(3) ⊕ A2(3)");
        let r: NamedLattice = "⟨2⟩".parse().unwrap();
        assert_eq!(r.rescaled(-1).to_string(), "⟨-2⟩");
    }
}
