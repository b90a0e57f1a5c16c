// Copyright 2026 The rindler-spin Authors
// SPDX-License-Identifier: Apache-2.0

//! Spin relaxation and entanglement decay of a uniformly accelerated
//! electron coupled to the Unruh bath of magnetic-field fluctuations.

// NaN-rejecting guards are written as `!(x > 0.0)` on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision, clippy::needless_range_loop)]

pub mod cli;
pub mod correlator;
pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod kinematics;
pub mod linalg;
pub mod params;
pub mod quadrature;

pub use error::{Error, Result};
