//! Magnitude homology of finite graphs.
//!
//! Graphs are finite, connected, undirected multigraphs with loops; the
//! metric is the hop distance of the underlying simple graph. The crate
//! builds the magnitude chain complex `MC_{*,l}`, computes its homology and
//! cohomology over `Z`, `Q` and `F_p` with exact arithmetic, derives reduced
//! path homology from the diagonal, and runs growth and torsion experiments
//! over graph families.
//!
//! ```
//! use magnikit::{graph::cycle, magnitude::magnitude_homology, Coefficients};
//!
//! let c5 = cycle(5).unwrap();
//! let h = magnitude_homology(&c5, 1, 1, Coefficients::Z).unwrap();
//! assert_eq!(h.free_rank, 10);
//! ```

pub mod error;
pub mod experiments;
pub mod functor;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod magnitude;
pub mod path;

pub use error::{Error, GraphError, LinalgError, Result};
pub use graph::{ContractionMorphism, DistanceMatrix, EdgeRef, Graph};
pub use linalg::{Coefficients, HomologySummary, Int, SmithForm, SparseMatrix};
pub use magnitude::{magnitude_cohomology, magnitude_homology, MagnitudeBasis};
