//! Closed tag inventories: function tags, chunk types and POS tags.
//!
//! Every inventory here is closed. Parsing a string outside the set is an
//! error, and each type carries a fixed total order that the rest of the
//! crate relies on for deterministic tie-breaking.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TagsetError {
    #[error("unknown function tag {0}")]
    UnknownFunctionTag(String),
    #[error("unknown chunk type {0}")]
    UnknownChunkType(String),
    #[error("unknown POS tag {0}")]
    UnknownPos(String),
    #[error("empty POS category")]
    EmptyCategory,
    #[error("POS category {0:?} contains a reserved character")]
    BadCategory(String),
    #[error("malformed POS tag {0:?}, expected pos.category")]
    MalformedPos(String),
}

macro_rules! closed_enum {
    (
        $(#[$meta:meta])*
        $name:ident, $err:ident, [$($variant:ident => $text:literal),+ $(,)?]
    ) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            /// All members in their canonical order.
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = TagsetError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok($name::$variant),)+
                    other => Err(TagsetError::$err(other.to_string())),
                }
            }
        }
    };
}

closed_enum! {
    /// A grammatical-function tag.
    ///
    /// Declaration order is the tie-break order used everywhere: the
    /// published tagset order, with `Cau` placed before `PCau` and the
    /// sentence-final sentinel `Null` last.
    FunctionTag, UnknownFunctionTag, [
        Active => "Active",
        Subj => "Subj",
        PSubj => "PSubj",
        SubjP => "SubjP",
        Obj => "Obj",
        PObj => "PObj",
        ObjP => "ObjP",
        PIobj => "PIobj",
        IobjP => "IobjP",
        Pla => "Pla",
        PPla => "PPla",
        PlaP => "PlaP",
        Tim => "Tim",
        PTim => "PTim",
        TimP => "TimP",
        PExt => "PExt",
        ExtP => "ExtP",
        PSim => "PSim",
        SimP => "SimP",
        PCom => "PCom",
        ComP => "ComP",
        POwn => "POwn",
        OwnP => "OwnP",
        Ada => "Ada",
        PcomplS => "PcomplS",
        PcomplO => "PcomplO",
        PPcomplO => "PPcomplO",
        PcomplOP => "PcomplOP",
        PUse => "PUse",
        UseP => "UseP",
        Cau => "Cau",
        PCau => "PCau",
        CauP => "CauP",
        PAim => "PAim",
        AimP => "AimP",
        CCS => "CCS",
        CCM => "CCM",
        CCC => "CCC",
        CCP => "CCP",
        CCA => "CCA",
        Null => "Null",
    ]
}

impl FunctionTag {
    /// The postpositional-marker tag that closes a phrase opened by `self`,
    /// if `self` is a phrase head (`PSubj` -> `SubjP`, ...).
    pub fn matching_marker(self) -> Option<FunctionTag> {
        use FunctionTag::*;
        Some(match self {
            PSubj => SubjP,
            PObj => ObjP,
            PIobj => IobjP,
            PPla => PlaP,
            PTim => TimP,
            PExt => ExtP,
            PSim => SimP,
            PCom => ComP,
            POwn => OwnP,
            PUse => UseP,
            PCau => CauP,
            PAim => AimP,
            PPcomplO => PcomplOP,
            _ => return None,
        })
    }

    pub fn is_marker(self) -> bool {
        FunctionTag::ALL
            .iter()
            .any(|head| head.matching_marker() == Some(self))
    }
}

closed_enum! {
    ChunkType, UnknownChunkType, [
        NC => "NC",
        PPC => "PPC",
        AC => "AC",
        RC => "RC",
        CC => "CC",
        VC => "VC",
        SFC => "SFC",
    ]
}

closed_enum! {
    /// Coarse part of speech.
    Pos, UnknownPos, [
        N => "n",
        Pron => "pron",
        Ppm => "ppm",
        Adj => "adj",
        Adv => "adv",
        Cc => "cc",
        Part => "part",
        V => "v",
        Sf => "sf",
    ]
}

impl Pos {
    /// Parses a POS name, accepting `verb` as an alias of `v`.
    pub fn parse_aliased(s: &str) -> Result<Pos, TagsetError> {
        match s {
            "verb" => Ok(Pos::V),
            other => other.parse(),
        }
    }

    /// Categories listed in the reference inventory for this POS. The list
    /// is not exhaustive; unknown categories are accepted with a warning.
    pub fn known_categories(self) -> &'static [&'static str] {
        match self {
            Pos::N => &[
                "animal",
                "food",
                "body",
                "person",
                "group",
                "time",
                "common",
                "building",
                "location",
                "objects",
                "congnition",
            ],
            Pos::Pron => &["person", "distplace", "disttime", "possessive"],
            Pos::Ppm => &[
                "subj", "obj", "time", "cause", "use", "sim", "aim", "compare", "accept", "place",
                "extract",
            ],
            Pos::Adj => &["dem", "distobj"],
            Pos::Adv => &["manner", "state"],
            Pos::Cc => &["sent", "mean", "chunk", "part", "adj"],
            Pos::Part => &["type", "eg", "number"],
            Pos::V => &["common", "compound"],
            Pos::Sf => &["declarative", "question", "negative"],
        }
    }
}

/// A POS tag with its free-form category, written `pos.category`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosTag {
    pub pos: Pos,
    pub category: String,
}

impl PosTag {
    pub fn new(pos: Pos, category: impl Into<String>) -> Result<Self, TagsetError> {
        let category = category.into();
        if category.is_empty() {
            return Err(TagsetError::EmptyCategory);
        }
        if category
            .chars()
            .any(|c| c.is_whitespace() || c.is_control() || "#[]/,".contains(c))
        {
            return Err(TagsetError::BadCategory(category));
        }
        Ok(PosTag { pos, category })
    }

    pub fn is_known_category(&self) -> bool {
        self.pos
            .known_categories()
            .contains(&self.category.as_str())
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.pos, self.category)
    }
}

impl FromStr for PosTag {
    type Err = TagsetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (pos, category) = s
            .split_once('.')
            .ok_or_else(|| TagsetError::MalformedPos(s.to_string()))?;
        PosTag::new(Pos::parse_aliased(pos.trim())?, category.trim())
    }
}
