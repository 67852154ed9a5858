//! Computational oriented-matroid workbench.
//!
//! * [`om`]: sign vectors, chirotopes, circuits, covectors, topes and heights.
//! * [`simplicial`]: finite simplicial complexes with mod-2 homology.
//! * [`rainbow`]: chain-family construction and rainbow-simplex extraction.
//! * [`colorful`]: conic and convex colorful Carathéodory searches.
//! * [`transversal`]: tope transversals and the simplotope complexes behind them.
//! * [`altwords`]: alternation numbers and the grid-walk word solver.
//! * [`campaign`]: seeded random instance generators.

pub mod altwords;
pub mod campaign;
pub mod colorful;
pub mod error;
pub mod gf2;
pub mod matching;
pub mod om;
pub mod rainbow;
pub mod simplicial;
pub mod transversal;

pub use error::{Error, Limits, Result};
