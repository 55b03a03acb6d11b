//! Curve patterns, the ribbon surfaces they span, and minimal-genus search.

pub mod cache;
mod pattern;
mod ribbon;
mod search;

pub use pattern::*;
pub use ribbon::*;
pub use search::*;
