//! Elements of direct powers `G^k` of permutation groups, and their dense
//! mixed-radix codes.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::PowerError;
use crate::perm::{lcm, Perm, FACTORIALS, MAX_DEGREE};

/// A `k`-tuple of permutations of a common degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerElement {
    parts: Vec<Perm>,
}

impl PowerElement {
    pub fn new(parts: Vec<Perm>) -> Result<PowerElement, PowerError> {
        let first = parts.first().ok_or(PowerError::EmptyWidth)?;
        let n = first.degree();
        if let Some(bad) = parts.iter().find(|p| p.degree() != n) {
            return Err(PowerError::Perm(crate::error::PermError::DegreeMismatch(
                n,
                bad.degree(),
            )));
        }
        Ok(PowerElement { parts })
    }

    pub fn identity(degree: usize, width: usize) -> PowerElement {
        assert!(width >= 1);
        PowerElement {
            parts: vec![Perm::identity(degree); width],
        }
    }

    /// `g` at 1-based `slot`, identity elsewhere.
    pub fn slot_embed(g: &Perm, slot: usize, width: usize) -> Result<PowerElement, PowerError> {
        if width == 0 {
            return Err(PowerError::EmptyWidth);
        }
        if slot == 0 || slot > width {
            return Err(PowerError::SlotOutOfRange { slot, width });
        }
        let mut e = PowerElement::identity(g.degree(), width);
        e.parts[slot - 1] = g.clone();
        Ok(e)
    }

    /// Parses one cycle-notation string per coordinate.
    pub fn from_cycle_strings<S: AsRef<str>>(
        parts: &[S],
        degree: usize,
    ) -> Result<PowerElement, PowerError> {
        let parts = parts
            .iter()
            .map(|s| Perm::parse_cycles(s.as_ref(), degree))
            .collect::<Result<Vec<_>, _>>()?;
        PowerElement::new(parts)
    }

    pub fn to_cycle_strings(&self) -> Vec<String> {
        self.parts.iter().map(Perm::to_string).collect()
    }

    pub fn degree(&self) -> usize {
        self.parts[0].degree()
    }

    pub fn width(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Perm] {
        &self.parts
    }

    pub fn part(&self, slot: usize) -> &Perm {
        &self.parts[slot - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.parts.iter().all(Perm::is_identity)
    }

    /// 1-based index of the first odd coordinate, if any.
    pub fn first_odd_slot(&self) -> Option<usize> {
        self.parts.iter().position(|p| !p.is_even()).map(|i| i + 1)
    }

    fn check_shape(&self, other: &PowerElement) -> Result<(), PowerError> {
        if self.degree() != other.degree() || self.width() != other.width() {
            return Err(PowerError::ShapeMismatch(
                self.degree(),
                self.width(),
                other.degree(),
                other.width(),
            ));
        }
        Ok(())
    }

    /// Coordinatewise product.
    pub fn compose(&self, other: &PowerElement) -> Result<PowerElement, PowerError> {
        self.check_shape(other)?;
        Ok(PowerElement {
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(p, q)| p.then(q))
                .collect(),
        })
    }

    pub fn inverse(&self) -> PowerElement {
        PowerElement {
            parts: self.parts.iter().map(Perm::inverse).collect(),
        }
    }

    pub fn pow(&self, m: u64) -> PowerElement {
        PowerElement {
            parts: self.parts.iter().map(|p| p.pow(m)).collect(),
        }
    }

    /// The lcm of the coordinate orders.
    pub fn order(&self) -> u64 {
        self.parts.iter().fold(1, |acc, p| lcm(acc, p.order()))
    }

    /// The sub-tuple on the given 1-based slots.
    pub fn project(&self, slots: &[usize]) -> Result<PowerElement, PowerError> {
        let parts = slots
            .iter()
            .map(|&s| {
                self.parts
                    .get(s.wrapping_sub(1))
                    .cloned()
                    .ok_or(PowerError::SlotOutOfRange {
                        slot: s,
                        width: self.width(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        PowerElement::new(parts)
    }
}

impl fmt::Display for PowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerElement[{}]{}", self.degree(), self)
    }
}

/// Serializes as a JSON array of cycle strings, e.g. `["(1 2)(3 4)", "()"]`.
/// Cycle strings do not record the degree, so deserialization goes through
/// [`PowerElement::from_cycle_strings`].
impl Serialize for PowerElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.parts.iter().map(|p| p.to_string()))
    }
}

/// Which per-coordinate rank a code uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Coding {
    /// Radix `n!/2`, even coordinates only.
    #[default]
    Alternating,
    /// Radix `n!`.
    Symmetric,
}

impl Coding {
    pub fn radix(self, degree: usize) -> u64 {
        match self {
            Coding::Alternating => (FACTORIALS[degree] / 2).max(1),
            Coding::Symmetric => FACTORIALS[degree],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankIndex(pub u64);

/// Mixed-radix codec for `k`-tuples: `code = Σ rank_i · radix^i`, slot 1 least significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerCodec {
    degree: usize,
    width: usize,
    coding: Coding,
    radix: u64,
    space: u64,
}

impl PowerCodec {
    pub fn new(degree: usize, width: usize, coding: Coding) -> Result<PowerCodec, PowerError> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(crate::error::PermError::Degree(degree).into());
        }
        if width == 0 {
            return Err(PowerError::EmptyWidth);
        }
        let radix = coding.radix(degree);
        let overflow = PowerError::CodeSpaceOverflow { degree, width };
        let space = (0..width).try_fold(1u64, |acc, _| acc.checked_mul(radix));
        match space {
            Some(s) if s < (1u64 << 63) => Ok(PowerCodec {
                degree,
                width,
                coding,
                radix,
                space: s,
            }),
            _ => Err(overflow),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn coding(&self) -> Coding {
        self.coding
    }

    pub fn radix(&self) -> u64 {
        self.radix
    }

    /// Number of codes, `radix^width`.
    pub fn space(&self) -> u64 {
        self.space
    }

    pub fn rank_part(&self, p: &Perm) -> Result<u64, PowerError> {
        Ok(match self.coding {
            Coding::Alternating => p.alt_rank()?,
            Coding::Symmetric => p.lehmer_rank(),
        })
    }

    pub fn unrank_part(&self, r: u64) -> Perm {
        match self.coding {
            Coding::Alternating => Perm::alt_unrank(r, self.degree),
            Coding::Symmetric => Perm::lehmer_unrank(r, self.degree),
        }
        .expect("digit below radix")
    }

    pub fn encode(&self, x: &PowerElement) -> Result<RankIndex, PowerError> {
        if x.degree() != self.degree || x.width() != self.width {
            return Err(PowerError::ShapeMismatch(
                self.degree,
                self.width,
                x.degree(),
                x.width(),
            ));
        }
        let mut code = 0u64;
        for (i, p) in x.parts().iter().enumerate().rev() {
            let r = self.rank_part(p).map_err(|e| match e {
                PowerError::Perm(crate::error::PermError::OddPermutation) => {
                    PowerError::OddPart { slot: i + 1 }
                }
                other => other,
            })?;
            code = code * self.radix + r;
        }
        Ok(RankIndex(code))
    }

    pub fn decode(&self, code: RankIndex) -> Result<PowerElement, PowerError> {
        let RankIndex(mut v) = code;
        if v >= self.space {
            return Err(PowerError::CodeOutOfRange {
                code: v,
                space: self.space,
            });
        }
        let mut parts = Vec::with_capacity(self.width);
        for _ in 0..self.width {
            parts.push(self.unrank_part(v % self.radix));
            v /= self.radix;
        }
        Ok(PowerElement { parts })
    }
}
