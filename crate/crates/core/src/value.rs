//! Three-valued and two-valued truth values.
//!
//! `TruthValue3` carries the strong Kleene tables via the `Not`, `BitAnd`
//! and `BitOr` operators. The *information order* places `Undet` strictly
//! below both classical values, which stay incomparable; it is the order
//! in which fixed-point iteration climbs.

use std::fmt;
use std::ops;

/// A strong Kleene truth value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TruthValue3 {
    True,
    False,
    /// No classical truth value (the classical procedure failed here).
    Undet,
}

/// A classical two-valued truth value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalValue {
    True,
    False,
}

impl TruthValue3 {
    pub const ALL: [TruthValue3; 3] = [TruthValue3::Undet, TruthValue3::False, TruthValue3::True];

    pub fn is_classical(self) -> bool {
        self != TruthValue3::Undet
    }

    /// Information order: `Undet` is below everything, classical values
    /// only below themselves.
    pub fn info_leq(self, other: TruthValue3) -> bool {
        self == TruthValue3::Undet || self == other
    }

    /// Rank used for canonical enumeration and sorting: u < f < t.
    pub fn canonical_rank(self) -> u8 {
        match self {
            TruthValue3::Undet => 0,
            TruthValue3::False => 1,
            TruthValue3::True => 2,
        }
    }

    pub fn from_canonical_rank(rank: u8) -> TruthValue3 {
        match rank {
            0 => TruthValue3::Undet,
            1 => TruthValue3::False,
            2 => TruthValue3::True,
            _ => panic!("rank {rank} out of range"),
        }
    }

    /// The classical value, if any.
    pub fn classical(self) -> Option<ClassicalValue> {
        match self {
            TruthValue3::True => Some(ClassicalValue::True),
            TruthValue3::False => Some(ClassicalValue::False),
            TruthValue3::Undet => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            TruthValue3::True => 't',
            TruthValue3::False => 'f',
            TruthValue3::Undet => 'u',
        }
    }

    pub fn from_letter(c: char) -> Option<TruthValue3> {
        match c {
            't' => Some(TruthValue3::True),
            'f' => Some(TruthValue3::False),
            'u' => Some(TruthValue3::Undet),
            _ => None,
        }
    }
}

impl From<ClassicalValue> for TruthValue3 {
    fn from(c: ClassicalValue) -> TruthValue3 {
        match c {
            ClassicalValue::True => TruthValue3::True,
            ClassicalValue::False => TruthValue3::False,
        }
    }
}

impl From<bool> for ClassicalValue {
    fn from(b: bool) -> ClassicalValue {
        if b {
            ClassicalValue::True
        } else {
            ClassicalValue::False
        }
    }
}

impl ClassicalValue {
    pub fn as_bool(self) -> bool {
        self == ClassicalValue::True
    }

    pub fn letter(self) -> char {
        match self {
            ClassicalValue::True => 't',
            ClassicalValue::False => 'f',
        }
    }

    pub fn from_letter(c: char) -> Option<ClassicalValue> {
        match c {
            't' => Some(ClassicalValue::True),
            'f' => Some(ClassicalValue::False),
            _ => None,
        }
    }
}

impl ops::Not for TruthValue3 {
    type Output = TruthValue3;

    fn not(self) -> TruthValue3 {
        match self {
            TruthValue3::True => TruthValue3::False,
            TruthValue3::False => TruthValue3::True,
            TruthValue3::Undet => TruthValue3::Undet,
        }
    }
}

// Strong Kleene conjunction: false as soon as one side is false, true
// only when both are.
impl ops::BitAnd for TruthValue3 {
    type Output = TruthValue3;

    fn bitand(self, other: TruthValue3) -> TruthValue3 {
        if self == TruthValue3::False || other == TruthValue3::False {
            return TruthValue3::False;
        }
        if self == TruthValue3::Undet || other == TruthValue3::Undet {
            return TruthValue3::Undet;
        }
        TruthValue3::True
    }
}

// Strong Kleene disjunction, dual to conjunction.
impl ops::BitOr for TruthValue3 {
    type Output = TruthValue3;

    fn bitor(self, other: TruthValue3) -> TruthValue3 {
        if self == TruthValue3::True || other == TruthValue3::True {
            return TruthValue3::True;
        }
        if self == TruthValue3::Undet || other == TruthValue3::Undet {
            return TruthValue3::Undet;
        }
        TruthValue3::False
    }
}

impl fmt::Display for TruthValue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl fmt::Display for ClassicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}
