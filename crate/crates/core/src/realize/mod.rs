//! Deciding whether a Gauss diagram is drawn by a planar closed curve.

mod audit;
mod even;
mod matrix;
mod oracle;

pub use audit::{audit, AuditRecord, AuditSummary};
pub use even::{
    delete_isolated, even_condition, even_condition_witness, theorem34_realizable,
    theorem34_realizable_with, IsolatedChords, Method, RealizabilityReport, Verdict, Witness,
};
pub use matrix::{
    matrix_conditions, scalar_product, ConditionViolation, MatrixConditions, ScalarMode,
};
pub use oracle::{
    count_faces, euler_characteristics, oracle_realizable, oracle_realizable_with, oracle_report,
    OracleVerdict, RotationAssignment,
};
