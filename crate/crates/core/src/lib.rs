//! Moduli of pentagonal subdivision tilings of the sphere for the tetrahedron, octahedron
//! and icosahedron.

pub mod area;
pub mod cli;
pub mod error;
pub mod moduli;
pub mod pentagon;
pub mod projection;
pub mod quadrature;
pub mod render;
pub mod roots;
pub mod sampling;
pub mod sphere;
pub mod verify;

pub use error::{Error, Result};
pub use projection::{ChartId, ChartPoint, Solid, SolidConstants};
pub use sphere::{GreatArc, Rotation, UnitVec};
