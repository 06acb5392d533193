//! Exact tools for oriented matroids, polytopes, Delaunay subdivisions and
//! inscribed neighborly polytopes.

pub mod config;
pub mod construct;
pub mod delaunay;
pub mod error;
pub mod exact;
pub mod io;
pub mod matroid;
pub mod polytope;
pub mod report;
pub mod sphere;

pub use config::{PointConfiguration, VectorConfiguration};
pub use error::{Error, Result};
pub use exact::{Rational, Sign};
pub use matroid::Chirotope;
