//! Frattini-theoretic predicates, structural shape recognition, small-scale
//! isomorphism testing and the exhaustive structure-table search.

mod iso;
mod predicates;
mod report;
mod search;
mod shape;
mod supersolvable;
mod verdict;

pub use iso::{gl_order, is_isomorphic, Invariants, DEFAULT_MAX_GL_ORDER};
pub use predicates::{
    is_a_algebra, is_e_algebra, is_elementary, is_minimal_non_elementary, minimal_non_elementary,
    nilpotent_verdict, solvable_verdict, supersolvable_verdict, wide_chief_factor,
};
pub use report::{
    analyze, analyze_finite, analyze_rational, predicates, structure, AnalysisReport, AnalyzeConfig,
    Char0Frattini, Char0Status, Companion, Outcome, PredicateReport, SeriesReport, StructureReport,
};
pub use search::{
    exhaustive_search, table_count, Discrepancy, Representative, SearchConfig, SearchReport,
    ShapeCounts, DEFAULT_MAX_TABLES,
};
pub use shape::{is_abelian_split, is_heisenberg, jordan_parameter, shape_of, Shape};
pub use supersolvable::is_supersolvable;
pub use verdict::{frattini_from_scratch, verdict_json, FiniteVerdict, Verdict, Witness};

/// Schema tag carried by every report.
pub const SCHEMA: &str = "lie-frattini/1";
