//! Evaluation of inter-column logical relationships in synthetic tabular data.
//!
//! Given a real table, a synthetic table and a declarative rule file, this
//! crate scores how well the synthetic data preserves:
//!
//! - hierarchical consistency across column groups ([`consistency`]),
//! - row-local dependency rules such as temporal ordering and arithmetic
//!   identities ([`dependency`]),
//! - distributional similarity via Gaussian mixture log-likelihoods
//!   ([`gmm`]),
//!
//! plus three low-order statistical baselines ([`baseline`]). The
//! [`harness`] module provides seeded perturbation generators and a
//! SMOTE-style interpolator so every metric has an analytic oracle, and
//! [`report`] drives the repeated-evaluation protocol behind the `tabcheck`
//! CLI.
//!
//! All scores live in `[0, 100]`, higher is better, and every source of
//! randomness flows from an explicit seed.

pub mod baseline;
pub mod consistency;
pub mod data;
pub mod dependency;
pub mod error;
pub mod gmm;
pub mod harness;
pub mod report;
pub mod rules;

pub use data::{ColumnKind, CsvOptions, Schema, Table, Value};
pub use error::{Error, Result};
pub use rules::{ConsistencyGroup, DependencyRule, RuleSet, Tri};
