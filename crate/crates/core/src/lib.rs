//! Exact computations behind a set of Fano-threefold and toric arguments,
//! packaged as checkable certificates.
//!
//! The modules are independent of each other except that everything sits on
//! [`exactcore`]. The [`certify`] module runs named suites and produces
//! reports; the `certify` binary is a thin wrapper around it.

pub mod certify;
pub mod exactcore;
pub mod hodge;
pub mod numerology;
pub mod schubert;
pub mod toric;
pub mod veronese;
