//! Encoded classification: every entry as a construction, its printed table,
//! the normal-form identities of outer derivations, and the audit.

pub mod audit;
pub mod conjugation;
pub mod data;
pub mod families;
pub mod fingerprint;
pub mod matrices;
pub mod printed;
pub mod quotients;
pub mod report;

pub use audit::{audit_all, misprint_witnesses};
pub use families::{algebra_by_name, entries, entry, CatalogEntry, Claims, Kind, Params};
pub use fingerprint::{invariant_fingerprint, Fingerprint};
pub use report::{AuditReport, Check, Section, Status};
