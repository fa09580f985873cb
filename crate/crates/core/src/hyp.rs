//! Hyperplane identifiers and the pairwise relation vocabulary shared by
//! finite wallspaces and symbolic family systems.

use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

/// A hyperplane `H^family_index`.
///
/// In a symbolic system this is the `index`-th member of chain family
/// `family`. Walls of a finite wallspace use family 0 and their position in
/// the wall list as index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HypRef {
    pub family: u32,
    pub index: u32,
}

impl HypRef {
    pub const fn new(family: u32, index: u32) -> Self {
        HypRef { family, index }
    }

    pub const fn wall(index: u32) -> Self {
        HypRef { family: 0, index }
    }
}

impl fmt::Display for HypRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}_{}", self.family, self.index)
    }
}

/// One of the two halfspaces of a wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Pos,
    Neg,
}

impl Neg for Side {
    type Output = Side;
    fn neg(self) -> Side {
        match self {
            Side::Pos => Side::Neg,
            Side::Neg => Side::Pos,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Pos => "+",
            Side::Neg => "-",
        })
    }
}

/// How two distinct walls `a`, `b` sit relative to each other.
///
/// Two distinct walls either cross, or exactly one of the four quarters
/// `a^x ∩ b^y` is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    Cross,
    /// `a^a ∩ b^b = ∅`.
    Disjoint {
        a: Side,
        b: Side,
    },
}

impl Relation {
    pub fn is_cross(self) -> bool {
        matches!(self, Relation::Cross)
    }

    /// The same relation with the roles of the two walls exchanged.
    pub fn flip(self) -> Relation {
        match self {
            Relation::Cross => Relation::Cross,
            Relation::Disjoint { a, b } => Relation::Disjoint { a: b, b: a },
        }
    }

    /// Halfspace of the second wall `b` that contains the first wall `a`.
    ///
    /// If `a^x ∩ b^y = ∅` then `a^x ⊆ b^{-y}`, so `a` lies in `b^{-y}`.
    pub fn side_of_first_in_second(self) -> Option<Side> {
        match self {
            Relation::Cross => None,
            Relation::Disjoint { b, .. } => Some(-b),
        }
    }

    /// `a^x ⊆ b^y` as a relation between `a` and `b`.
    pub fn inclusion(x: Side, y: Side) -> Relation {
        Relation::Disjoint { a: x, b: -y }
    }

    /// Whether the relation implies `a^x ⊆ b^y`.
    pub fn includes(self, x: Side, y: Side) -> bool {
        self == Relation::inclusion(x, y)
    }
}

/// Eventual position of the members of a family relative to a fixed
/// hyperplane `h`: all but finitely many cross `h`, or all but finitely many
/// lie in one halfspace of `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TailSide {
    Cross,
    Side(Side),
    /// Not determined by the rule data.
    Unknown,
}

/// Three-valued outcome for predicates over infinite sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Decided {
    True,
    False,
    Unknown,
}

impl Decided {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decided::True
        } else {
            Decided::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Decided::True
    }

    pub fn and(self, other: Decided) -> Decided {
        match (self, other) {
            (Decided::False, _) | (_, Decided::False) => Decided::False,
            (Decided::True, Decided::True) => Decided::True,
            _ => Decided::Unknown,
        }
    }
}

impl std::ops::Not for Decided {
    type Output = Decided;
    fn not(self) -> Decided {
        match self {
            Decided::True => Decided::False,
            Decided::False => Decided::True,
            Decided::Unknown => Decided::Unknown,
        }
    }
}
