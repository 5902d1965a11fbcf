//! Words over the two generators: blocks of the singular factor `h` and
//! blocks of the rotation `R_theta`, with positive integer exponents.
//!
//! The canonical form keeps adjacent blocks of distinct kinds; construction
//! merges same-kind neighbors by summing exponents and drops exponent-zero
//! blocks, so each abstract word has exactly one representation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which generator a block repeats.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// The singular factor `diag(lambda, 0)` (or `diag(lambda, 1/lambda)` in
    /// the real case).
    H,
    /// The rotation `R_theta`.
    R,
}

/// A maximal run of one generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub kind: BlockKind,
    pub exponent: u64,
}

/// Canonical alternating block sequence. The empty sequence is the identity
/// word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    blocks: Vec<Block>,
}

/// Classification of a nonempty word by the kinds of its first and last
/// blocks. The boundary kinds (together with the rotation profile and the
/// total `h` count) are the only word data the model norm depends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordShape {
    /// Starts with `h`, ends with a rotation block.
    HR,
    /// Starts with a rotation block, ends with `h`.
    RH,
    /// Rotation blocks on both ends.
    RR,
    /// `h` blocks on both ends; the minimum norm is always attained here.
    HH,
    /// Only `h` blocks.
    PureH,
    /// Only rotation blocks.
    PureR,
}

impl Word {
    /// The empty (identity) word.
    pub fn identity() -> Self {
        Word { blocks: Vec::new() }
    }

    /// Build the canonical form: zero exponents are dropped and adjacent
    /// same-kind blocks merge by summing exponents.
    pub fn from_blocks<I>(blocks: I) -> Self
    where
        I: IntoIterator<Item = (BlockKind, u64)>,
    {
        let mut canonical: Vec<Block> = Vec::new();
        for (kind, exponent) in blocks {
            if exponent == 0 {
                continue;
            }
            match canonical.last_mut() {
                Some(last) if last.kind == kind => last.exponent += exponent,
                _ => canonical.push(Block { kind, exponent }),
            }
        }
        Word { blocks: canonical }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total `h` exponent (the paper's `n`).
    pub fn h_total(&self) -> u64 {
        self.total(BlockKind::H)
    }

    /// Total rotation exponent (the paper's `m`).
    pub fn r_total(&self) -> u64 {
        self.total(BlockKind::R)
    }

    fn total(&self, kind: BlockKind) -> u64 {
        self.blocks
            .iter()
            .filter(|b| b.kind == kind)
            .map(|b| b.exponent)
            .sum()
    }

    /// Rotation block exponents `(j_1, ..., j_k)` in order; empty for words
    /// without rotations.
    pub fn rotation_profile(&self) -> Vec<u64> {
        self.blocks
            .iter()
            .filter(|b| b.kind == BlockKind::R)
            .map(|b| b.exponent)
            .collect()
    }

    /// Boundary-type classification; the identity word has no shape.
    pub fn shape(&self) -> Result<WordShape> {
        let first = self.blocks.first().ok_or(Error::EmptyWord)?;
        let last = self.blocks.last().expect("nonempty");
        Ok(match (first.kind, last.kind) {
            _ if self.blocks.len() == 1 && first.kind == BlockKind::H => WordShape::PureH,
            _ if self.blocks.len() == 1 => WordShape::PureR,
            (BlockKind::H, BlockKind::R) => WordShape::HR,
            (BlockKind::R, BlockKind::H) => WordShape::RH,
            (BlockKind::R, BlockKind::R) => WordShape::RR,
            (BlockKind::H, BlockKind::H) => WordShape::HH,
        })
    }

    /// Concatenation, re-canonicalized (boundary blocks of equal kind merge).
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_blocks(
            self.blocks
                .iter()
                .chain(other.blocks.iter())
                .map(|b| (b.kind, b.exponent)),
        )
    }
}

/// Shorthand for word literals: `word![H:5, R:2, H:9]`.
#[macro_export]
macro_rules! word {
    () => { $crate::Word::identity() };
    ($($kind:ident : $exp:expr),+ $(,)?) => {
        $crate::Word::from_blocks([$(($crate::BlockKind::$kind, $exp as u64)),+])
    };
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let kind = match block.kind {
                BlockKind::H => 'H',
                BlockKind::R => 'R',
            };
            write!(f, "{kind}:{}", block.exponent)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Grammar: `block (',' block)*` with `block = ('H' | 'R') ':' <positive
    /// integer>`. Adjacent same-kind blocks are legal and merge.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::WordParse {
                pos: 0,
                msg: "empty word spec".into(),
            });
        }
        let mut blocks = Vec::new();
        let mut pos = 0;
        for token in s.split(',') {
            let parse_err = |msg: String| Error::WordParse { pos, msg };
            let (kind_str, exp_str) = token
                .split_once(':')
                .ok_or_else(|| parse_err(format!("expected 'H:<k>' or 'R:<k>', got {token:?}")))?;
            let kind = match kind_str {
                "H" => BlockKind::H,
                "R" => BlockKind::R,
                other => return Err(parse_err(format!("unknown block kind {other:?}"))),
            };
            let exponent: u64 = exp_str
                .parse()
                .map_err(|e| parse_err(format!("bad exponent {exp_str:?}: {e}")))?;
            if exponent == 0 {
                return Err(parse_err("exponent must be positive".into()));
            }
            blocks.push((kind, exponent));
            pos += token.len() + 1;
        }
        Ok(Word::from_blocks(blocks))
    }
}
