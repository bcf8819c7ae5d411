//! Shared error and warning vocabulary.
//!
//! Every fallible operation in the crate reports through [`StructureError`].
//! The variant names form a stable vocabulary: callers (including the CLI)
//! match on them, and diagnostics printed to users start with the variant
//! name.

use thiserror::Error;

/// All failure modes of diagram construction, validation, moves, and I/O.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("MalformedMap: {0}")]
    MalformedMap(String),
    #[error("NonManifold: {0}")]
    NonManifold(String),
    #[error("InvalidTarget: {0}")]
    InvalidTarget(String),
    #[error("NotEmbedded: {0}")]
    NotEmbedded(String),
    #[error("LengthMismatch: {0}")]
    LengthMismatch(String),
    #[error("LabelMismatch: {0}")]
    LabelMismatch(String),
    #[error("NonTransverse: {0}")]
    NonTransverse(String),
    #[error("DimensionOutOfRange: {0}")]
    DimensionOutOfRange(String),
    #[error("NotALoop: {0}")]
    NotALoop(String),
    #[error("OrientationClash: {0}")]
    OrientationClash(String),
    #[error("InconsistentIndices: {0}")]
    InconsistentIndices(String),
    #[error("SeparatingArc: {0}")]
    SeparatingArc(String),
    #[error("DiskSector: {0}")]
    DiskSector(String),
    #[error("InvalidSite: {0}")]
    InvalidSite(String),
    #[error("BandObstructed: {0}")]
    BandObstructed(String),
    #[error("PatternNotFound: {0}")]
    PatternNotFound(String),
    #[error("DisconnectedPropagation: {0}")]
    DisconnectedPropagation(String),
    #[error("MissingOrientation: {0}")]
    MissingOrientation(String),
    #[error("OpenStrand: {0}")]
    OpenStrand(String),
    #[error("OddBridgeCount: {0}")]
    OddBridgeCount(String),
    #[error("NotStandardized: {0}")]
    NotStandardized(String),
    #[error("TooManyCrossings: {0}")]
    TooManyCrossings(String),
    #[error("SameComponent: {0}")]
    SameComponent(String),
    #[error("BadPartition: {0}")]
    BadPartition(String),
    #[error("SyntaxError: {0}")]
    SyntaxError(String),
    #[error("DanglingReference: {0}")]
    DanglingReference(String),
    #[error("VersionMismatch: {0}")]
    VersionMismatch(String),
    #[error("BudgetExceeded: {0}")]
    BudgetExceeded(String),
}

impl StructureError {
    /// The stable variant name, used by the CLI's structured output.
    pub fn name(&self) -> &'static str {
        use StructureError::*;
        match self {
            MalformedMap(_) => "MalformedMap",
            NonManifold(_) => "NonManifold",
            InvalidTarget(_) => "InvalidTarget",
            NotEmbedded(_) => "NotEmbedded",
            LengthMismatch(_) => "LengthMismatch",
            LabelMismatch(_) => "LabelMismatch",
            NonTransverse(_) => "NonTransverse",
            DimensionOutOfRange(_) => "DimensionOutOfRange",
            NotALoop(_) => "NotALoop",
            OrientationClash(_) => "OrientationClash",
            InconsistentIndices(_) => "InconsistentIndices",
            SeparatingArc(_) => "SeparatingArc",
            DiskSector(_) => "DiskSector",
            InvalidSite(_) => "InvalidSite",
            BandObstructed(_) => "BandObstructed",
            PatternNotFound(_) => "PatternNotFound",
            DisconnectedPropagation(_) => "DisconnectedPropagation",
            MissingOrientation(_) => "MissingOrientation",
            OpenStrand(_) => "OpenStrand",
            OddBridgeCount(_) => "OddBridgeCount",
            NotStandardized(_) => "NotStandardized",
            TooManyCrossings(_) => "TooManyCrossings",
            SameComponent(_) => "SameComponent",
            BadPartition(_) => "BadPartition",
            SyntaxError(_) => "SyntaxError",
            DanglingReference(_) => "DanglingReference",
            VersionMismatch(_) => "VersionMismatch",
            BudgetExceeded(_) => "BudgetExceeded",
        }
    }
}

/// Non-fatal validation warnings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// A surface-diagram condition that can only be certified up to homology
    /// was checked at the homology level; full triviality is unverified.
    UnverifiedTriviality(String),
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::UnverifiedTriviality(s) => write!(f, "UNVERIFIED-TRIVIALITY: {}", s),
        }
    }
}
