//! Path factors of simple (3,4)-biregular bipartite graphs in which every path
//! starts and ends at a degree-3 vertex.
//!
//! The solver runs in two phases. [`builder`] greedily grows a *pseudo path
//! factor*: every `x` gets degree 2 and every component is an even path, but
//! some `y` vertices may be left out. [`augment`] then absorbs each missing
//! `y` by swapping edges along an alternating trail, without ever making the
//! longest path longer. [`oracle`] holds independent validators and
//! exhaustive searches for small instances.
//!
//! ```
//! use pathfactor::{fixture, solve, validate_path_factor, TieBreakPolicy};
//!
//! let g = fixture("k34").unwrap();
//! let factor = solve(&g, TieBreakPolicy::Lexicographic).unwrap();
//! assert_eq!(factor.path_count(), 1);
//! assert!(validate_path_factor(&g, &factor).is_valid());
//! ```

pub mod augment;
pub mod builder;
pub mod error;
pub mod experiment;
pub mod factor;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod policy;

pub use augment::{find_trail, rewire, solve, solve_with, AugmentingTrail, SolveOptions, SolveOutcome};
pub use builder::{build_pseudo_factor, build_pseudo_factor_with, FactorState, StepCase, StepRecord};
pub use error::{BiregularError, Error, Result};
pub use experiment::{run_experiment, ExperimentConfig, ExperimentSummary};
pub use factor::{PathFactor, PseudoPathFactor};
pub use generate::{fixture, generate, GenConfig};
pub use graph::{
    check_biregular, components_as_paths, parse_graph, parse_paths, serialize_graph, Bigraph,
    EdgeId, EdgeSubgraph, NonPath, Side, VertexId,
};
pub use oracle::{
    brute_force_factor, brute_force_trails, validate_path_factor, validate_paths,
    validate_pseudo_factor, Rule, ValidationReport,
};
pub use policy::{Chooser, TieBreakPolicy};
