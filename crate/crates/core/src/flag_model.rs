//! Dimension data for finite chains of subspaces and the parabolic subgroups
//! they cut out.
//!
//! A [`ParabolicSignature`] lists the block dimensions `dim F_k / F_{k-1}` of a
//! finite chain `0 = F_0 ⊊ F_1 ⊊ … ⊊ F_m = V` in a countable-dimensional space,
//! first block first. Blocks are positive integers or [`Block::Inf`].

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::SignatureError;

/// The classical type of the ambient ind-group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    /// `GL(∞)`, no form.
    A,
    /// `O(∞)` realized through odd-dimensional truncations.
    B,
    /// `Sp(∞)`.
    C,
    /// `O(∞)` realized through even-dimensional truncations.
    D,
}

/// The group family, which is what the finiteness tables are indexed by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Gl,
    Sp,
    O,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Gl => "GL",
            Family::Sp => "Sp",
            Family::O => "O",
        }
    }
}

/// Parity of the truncation dimension for orthogonal groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Odd,
    Even,
    NotApplicable,
}

impl LieType {
    pub const ALL: [LieType; 4] = [LieType::A, LieType::B, LieType::C, LieType::D];

    pub fn family(self) -> Family {
        match self {
            LieType::A => Family::Gl,
            LieType::C => Family::Sp,
            LieType::B | LieType::D => Family::O,
        }
    }

    /// True when the type carries a nondegenerate form and flags must be
    /// self-dual.
    pub fn has_form(self) -> bool {
        self != LieType::A
    }

    pub fn parity(self) -> Parity {
        match self {
            LieType::B => Parity::Odd,
            LieType::D => Parity::Even,
            LieType::A | LieType::C => Parity::NotApplicable,
        }
    }

    /// Whether a truncation total `n` has the parity this type requires.
    pub fn accepts_total(self, n: usize) -> bool {
        match self {
            LieType::A => true,
            LieType::B => n % 2 == 1,
            LieType::C | LieType::D => n.is_multiple_of(2),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for LieType {
    type Err = SignatureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(SignatureError::UnknownType(other.to_string())),
        }
    }
}

/// A block dimension: a positive integer or infinity. `Inf` orders above
/// every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    Finite(u32),
    Inf,
}

impl Block {
    pub fn is_inf(self) -> bool {
        matches!(self, Block::Inf)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Block::Finite(c) => Some(c),
            Block::Inf => None,
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Finite(c) => write!(f, "{c}"),
            Block::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for Block {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Block::Inf);
        }
        t.parse::<i64>()
            .map_err(|_| format!("`{t}` is neither a positive integer nor `inf`"))
            .and_then(|v| {
                if v <= 0 || v > u32::MAX as i64 {
                    Err(format!("block `{t}` must be a positive integer"))
                } else {
                    Ok(Block::Finite(v as u32))
                }
            })
    }
}

impl Serialize for Block {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Block::Finite(c) => serializer.serialize_u32(*c),
            Block::Inf => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Block {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct BlockVisitor;

        impl<'de> Visitor<'de> for BlockVisitor {
            type Value = Block;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a positive integer or the string \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Block, E> {
                if v == 0 || v > u32::MAX as u64 {
                    return Err(E::custom(format!("block {v} out of range")));
                }
                Ok(Block::Finite(v as u32))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Block, E> {
                if v <= 0 {
                    return Err(E::custom(format!("block {v} must be positive")));
                }
                self.visit_u64(v as u64)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Block, E> {
                if v == "inf" {
                    Ok(Block::Inf)
                } else {
                    Err(E::custom(format!("unexpected block string `{v}`")))
                }
            }
        }

        deserializer.deserialize_any(BlockVisitor)
    }
}

/// A validated block signature of a semilarge splitting parabolic subgroup.
///
/// Invariants: at least two blocks, at least one infinite block, every finite
/// block positive, palindromic when the type carries a form, and the block
/// pattern admits truncations of the parity the type requires.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSignature", into = "RawSignature")]
pub struct ParabolicSignature {
    lie_type: LieType,
    blocks: Vec<Block>,
}

#[derive(Serialize, Deserialize)]
struct RawSignature {
    #[serde(rename = "type")]
    lie_type: LieType,
    blocks: Vec<Block>,
}

impl TryFrom<RawSignature> for ParabolicSignature {
    type Error = SignatureError;

    fn try_from(raw: RawSignature) -> Result<Self, Self::Error> {
        ParabolicSignature::new(raw.lie_type, raw.blocks)
    }
}

impl From<ParabolicSignature> for RawSignature {
    fn from(sig: ParabolicSignature) -> Self {
        RawSignature {
            lie_type: sig.lie_type,
            blocks: sig.blocks,
        }
    }
}

impl ParabolicSignature {
    pub fn new(lie_type: LieType, blocks: Vec<Block>) -> Result<Self, SignatureError> {
        if blocks.is_empty() {
            return Err(SignatureError::Empty);
        }
        if let Some(pos) = blocks.iter().position(|b| *b == Block::Finite(0)) {
            return Err(SignatureError::ZeroBlock { position: pos });
        }
        let m = blocks.len();
        if m < 2 {
            return Err(SignatureError::TooFewBlocks { m });
        }
        if !blocks.iter().any(|b| b.is_inf()) {
            return Err(SignatureError::NoInfiniteBlock);
        }
        if lie_type.has_form() {
            for k in 0..m / 2 {
                if blocks[k] != blocks[m - 1 - k] {
                    return Err(SignatureError::NotPalindromic {
                        position: k,
                        mirror: m - 1 - k,
                    });
                }
            }
            let inf_count = blocks.iter().filter(|b| b.is_inf()).count();
            if m.is_multiple_of(2) && inf_count < 2 {
                return Err(SignatureError::LagrangianNotInfinite);
            }
            check_parity(lie_type, &blocks)?;
        }
        Ok(ParabolicSignature { lie_type, blocks })
    }

    /// Convenience constructor from `None` = ∞, `Some(c)` = finite block.
    pub fn from_options(lie_type: LieType, blocks: &[Option<u32>]) -> Result<Self, SignatureError> {
        let blocks = blocks
            .iter()
            .map(|b| b.map_or(Block::Inf, Block::Finite))
            .collect();
        Self::new(lie_type, blocks)
    }

    /// Parses a comma-separated block list such as `1,inf,1`.
    pub fn parse_blocks(lie_type: LieType, text: &str) -> Result<Self, SignatureError> {
        let mut blocks = Vec::new();
        for (position, item) in text.split(',').enumerate() {
            let block = item
                .parse::<Block>()
                .map_err(|message| SignatureError::Parse { position, message })?;
            blocks.push(block);
        }
        Self::new(lie_type, blocks)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of blocks `m`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn infinite_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.is_inf()).count()
    }

    pub fn finite_sum(&self) -> u64 {
        self.blocks
            .iter()
            .filter_map(|b| b.finite())
            .map(u64::from)
            .sum()
    }

    /// Same blocks under another type tag.
    pub fn with_type(&self, lie_type: LieType) -> Result<Self, SignatureError> {
        Self::new(lie_type, self.blocks.clone())
    }

    pub fn is_large(&self) -> bool {
        is_large(self)
    }

    pub fn lambda_profile(&self) -> LambdaProfile {
        lambda_profile(self)
    }
}

fn check_parity(lie_type: LieType, blocks: &[Block]) -> Result<(), SignatureError> {
    let m = blocks.len();
    // Parity of any truncation total is fixed by the middle block: everything
    // else comes in mirror pairs.
    let forced = if m.is_multiple_of(2) {
        Some(0)
    } else {
        blocks[m / 2].finite().map(|c| c % 2)
    };
    let Some(forced) = forced else {
        return Ok(());
    };
    let ok = match lie_type {
        LieType::A => true,
        LieType::B => forced == 1,
        LieType::C | LieType::D => forced == 0,
    };
    if ok {
        Ok(())
    } else {
        Err(SignatureError::ParityMismatch { lie_type })
    }
}

impl fmt::Display for ParabolicSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.lie_type)?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for ParabolicSignature {
    type Err = SignatureError;

    /// Parses the `TYPE:blocks` encoding, e.g. `C:1,inf,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (ty, rest) = s
            .split_once(':')
            .ok_or_else(|| SignatureError::MissingType(s.to_string()))?;
        let lie_type = ty.parse::<LieType>()?;
        Self::parse_blocks(lie_type, rest)
    }
}

/// Order type of an infinite chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainOrder {
    IncreasingOmega,
    DecreasingOmega,
    TwoSided,
    Dense,
}

/// A generalized flag, recorded only up to what the classifier needs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneralizedFlagDescriptor {
    FiniteChain(ParabolicSignature),
    InfiniteChain {
        order: ChainOrder,
        lie_type: LieType,
    },
}

impl GeneralizedFlagDescriptor {
    pub fn lie_type(&self) -> LieType {
        match self {
            GeneralizedFlagDescriptor::FiniteChain(sig) => sig.lie_type(),
            GeneralizedFlagDescriptor::InfiniteChain { lie_type, .. } => *lie_type,
        }
    }

    pub fn signature(&self) -> Option<&ParabolicSignature> {
        match self {
            GeneralizedFlagDescriptor::FiniteChain(sig) => Some(sig),
            GeneralizedFlagDescriptor::InfiniteChain { .. } => None,
        }
    }
}

impl From<ParabolicSignature> for GeneralizedFlagDescriptor {
    fn from(sig: ParabolicSignature) -> Self {
        GeneralizedFlagDescriptor::FiniteChain(sig)
    }
}

/// Only finite chains have finitely many invariant subspaces.
pub fn is_semilarge(d: &GeneralizedFlagDescriptor) -> bool {
    matches!(d, GeneralizedFlagDescriptor::FiniteChain(_))
}

/// Every member is finite dimensional or finite codimensional, which for a
/// finite chain means exactly one infinite block.
pub fn is_large(sig: &ParabolicSignature) -> bool {
    sig.infinite_count() == 1
}

/// The multiset of block dimensions: `ℓ` infinite entries, then the finite
/// ones in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LambdaProfile {
    pub infinite_count: usize,
    pub finite_parts: Vec<u32>,
}

impl LambdaProfile {
    pub fn new(infinite_count: usize, mut finite_parts: Vec<u32>) -> Self {
        finite_parts.sort_unstable_by(|a, b| b.cmp(a));
        LambdaProfile {
            infinite_count,
            finite_parts,
        }
    }

    /// `m`, the number of blocks.
    pub fn len(&self) -> usize {
        self.infinite_count + self.finite_parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_large(&self) -> bool {
        self.infinite_count == 1
    }

    /// Entry `k` (1-based) of the full nonincreasing list, ∞ entries first.
    pub fn entry(&self, k: usize) -> Option<Block> {
        if k == 0 || k > self.len() {
            None
        } else if k <= self.infinite_count {
            Some(Block::Inf)
        } else {
            Some(Block::Finite(
                self.finite_parts[k - self.infinite_count - 1],
            ))
        }
    }

    /// Rebuilds a palindromic block sequence with this profile, if one exists
    /// for a self-dual flag. Pairs are laid out largest-outermost.
    pub fn palindrome(&self) -> Option<Vec<Block>> {
        let mut entries: Vec<Block> = (1..=self.len()).filter_map(|k| self.entry(k)).collect();
        let mut middle = None;
        let mut half = Vec::new();
        while let Some(top) = entries.first().copied() {
            if entries.len() >= 2 && entries[1] == top {
                half.push(top);
                entries.drain(..2);
            } else if middle.is_none() {
                middle = Some(top);
                entries.remove(0);
            } else {
                return None;
            }
        }
        let mut blocks = half.clone();
        blocks.extend(middle);
        blocks.extend(half.iter().rev());
        Some(blocks)
    }
}

impl fmt::Display for LambdaProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        let mut first = true;
        let mut item = |f: &mut fmt::Formatter<'_>, s: String| -> fmt::Result {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            f.write_str(&s)
        };
        for _ in 0..self.infinite_count {
            item(f, "∞".to_string())?;
        }
        let mut i = 0;
        while i < self.finite_parts.len() {
            let v = self.finite_parts[i];
            let run = self.finite_parts[i..]
                .iter()
                .take_while(|&&x| x == v)
                .count();
            if run == 1 {
                item(f, v.to_string())?;
            } else {
                item(f, format!("{v}^{run}"))?;
            }
            i += run;
        }
        f.write_str(")")
    }
}

pub fn lambda_profile(sig: &ParabolicSignature) -> LambdaProfile {
    LambdaProfile::new(
        sig.infinite_count(),
        sig.blocks().iter().filter_map(|b| b.finite()).collect(),
    )
}
