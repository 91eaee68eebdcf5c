//! Finite balls in Cayley graphs, coned-off Cayley graphs and cubical coset
//! complexes, with four-point delta estimates and quasi-isometry fits.

mod balls;
mod delta;
mod graph;
mod oracle;
mod projection;
mod qi;

use thiserror::Error;

use crate::coxeter::CoxeterError;

pub use balls::{
    cayley_ball, coned_off_cayley_ball, cubical_ball, davis_ball, deligne_ball, group_ball,
    DEFAULT_BALL_CAP,
};
pub use delta::{
    delta_four_point, DeltaEstimate, DeltaOptions, Sample, DEFAULT_POINT_LIMIT,
    DEFAULT_QUADRUPLE_BUDGET, DEFAULT_SEED,
};
pub use graph::{
    ComplexKind, Cube, CubicalBall, NodeKind, NodeLabel, OrbitGraph, WeightedGraph, UNREACHABLE,
};
pub use oracle::{CoxeterOracle, FiniteGroupOracle, RightAngledArtin, WordOracle};
pub use projection::{projection_and_section, DistanceComparison, ProjectionReport};
pub use qi::{fit_constants, orbit_map_fit, qi_fit, relative_change, QiFit};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OrbitError {
    #[error("{what} exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("the defining graph is not right-angled")]
    NotRightAngled,
    #[error("unknown generator index {0}")]
    UnknownGenerator(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("map is undefined on vertex {0}")]
    UndefinedVertex(usize),
    #[error("incompatible balls: {0}")]
    IncompatibleBalls(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}
