//! Conway polynomials of knot and 2-component link diagrams given as signed
//! Gauss codes, computed three independent ways:
//!
//! * [`pairing`]: pairing the Gauss diagram with the Conway combinations of
//!   ascending arrow diagrams generated in [`combinat`];
//! * [`statesum`]: summing writhe products over ascending one-component
//!   subsets of crossings;
//! * [`skein`]: the skein recursion down to descending knots and split links.

pub mod cli;
pub mod combinat;
pub mod error;
pub mod fixture;
pub mod gauss;
pub mod pairing;
pub mod poly;
pub mod random;
pub mod skein;
mod smoothing;
pub mod statesum;

pub use combinat::{generate_conway_combination, ArrowDiagram, ChordDiagram, Combination};
pub use error::{Error, Result};
pub use gauss::{CrossingSubset, Direction, GaussDiagram};
pub use pairing::{combination_pairing, conway_coefficient, pairing_value, CombinationStore};
pub use poly::{ChordId, IntPolynomial, Sign};
pub use skein::conway_skein;
pub use statesum::nabla_state;
