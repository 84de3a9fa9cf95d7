use thiserror::Error;

use crate::lattice::LatticeVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtlasError {
    #[error("{vector} is not a root: self-pairing {self_pairing} (want -2), pairing with h {h_pairing} (want 0)")]
    NotARoot {
        vector: LatticeVector,
        self_pairing: i64,
        h_pairing: i64,
    },
    #[error("incidence of a line with itself is undefined ({0})")]
    SameLine(String),
    #[error("lines {0} and {1} meet, so their difference is not a root")]
    NotSkew(String, String),
    #[error("root set is not closed under reflections: r_{beta}({gamma}) is missing")]
    NotClosed {
        beta: LatticeVector,
        gamma: LatticeVector,
    },
    #[error("unrecognized Dynkin diagram component on {nodes} nodes")]
    UnrecognizedDiagram { nodes: usize },
    #[error(
        "{config} does not embed in E6 (exhaustive search visited {visited} partial assignments)"
    )]
    NotEmbeddable { config: String, visited: u64 },
    #[error("{config} has rank {rank}, more than 6")]
    RankTooLarge { config: String, rank: u32 },
    #[error("not a simple system: {0}")]
    NotSimpleSystem(String),
    #[error("not an orbit: {0}")]
    NotAnOrbit(String),
    #[error("no isomorphism between the line model and the 27-line incidence graph")]
    NoIsomorphism,
    #[error("induced lattice map is not an isometry fixing h: {0}")]
    NotIsometry(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, AtlasError>;
