//! Modal logics with team semantics: ML, ML(⊻), MDL and EMDL over finite
//! Kripke models.
//!
//! - [`syntax`]: formulas, parsing, rendering, fragment classification
//! - [`kripke`]: models, teams, successor teams
//! - [`semantics`]: team and pointwise satisfaction
//! - [`bisim`]: k-bisimulation, team k-bisimulation, Hintikka formulas
//! - [`translate`]: Ψ-types, the ML(⊻)/EMDL translations, ⊻ normal form
//! - [`dimension`]: maximal satisfying and minimal falsifying teams
//! - [`cli`]: the `teamlogic` command line

pub mod bisim;
pub mod cli;
pub mod dimension;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod kripke;
pub mod semantics;
pub mod syntax;
pub mod translate;

pub use error::{Error, ParseError, Result};
pub use kripke::{KripkeModel, Team, WorldId};
pub use semantics::{eval, eval_point, extension};
pub use syntax::{parse, Formula, Fragment};
