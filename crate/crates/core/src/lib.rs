//! Estimates for the polarization-flipped x-ray signal of vacuum
//! birefringence in the head-on collision of an XFEL probe pulse with an
//! optical high-intensity pump pulse.
//!
//! The crate is organized around the reduced far-field observables in
//! [`signal`] (photon numbers, angular densities, divergences, polarimetry
//! thresholds), the pulse/focus overlap factor in [`ffactor`], and a
//! brute-force integration path in [`oracle`] that certifies the reduced
//! formulas against the unreduced differential rate. Everything works in
//! natural units (hbar = c = 1, energies in eV); [`units`] owns the
//! conversion boundary and the frozen constants table.

pub mod beams;
pub mod error;
pub mod ffactor;
pub mod oracle;
pub mod quad;
pub mod signal;
pub mod special;
pub mod units;

pub use error::{Error, Result};
