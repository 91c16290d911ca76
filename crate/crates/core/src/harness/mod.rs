//! Ingestion, verification jobs and reports.

pub mod ingest;
pub mod job;

pub use ingest::{
    field_from_json, ingest_field, ingest_job, ingest_variety, job_from_json, parse_twist_range, parse_twists,
    variety_from_json, VarietyRecord,
};
pub use job::{
    run_verification, Check, CheckRecord, Report, Summary, Target, VerificationJob, DEFAULT_PRECISION,
    DEFAULT_TOLERANCE,
};
