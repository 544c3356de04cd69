//! Named graphs and bivectors used throughout the tests and the CLI help.

use crate::graphs::UnorientedGraph;
use crate::superalgebra::{parse_multivector, Multivector};

/// The graph with one vertex and no edges.
pub fn point() -> UnorientedGraph {
    UnorientedGraph::new(1, &[]).unwrap()
}

pub fn edge() -> UnorientedGraph {
    UnorientedGraph::edge()
}

pub fn path3() -> UnorientedGraph {
    UnorientedGraph::new(3, &[(1, 2), (2, 3)]).unwrap()
}

/// Complete graph on four vertices, edges `12 13 14 23 24 34`.
pub fn tetrahedron() -> UnorientedGraph {
    UnorientedGraph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
}

/// Hub 1, rim `2..6`; rim edges first, then the spokes.
pub fn pentagon_wheel() -> UnorientedGraph {
    UnorientedGraph::new(
        6,
        &[
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 2),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
        ],
    )
    .unwrap()
}

/// Constant symplectic structure on the plane.
pub fn symplectic_plane() -> Multivector {
    parse_multivector("xi1*xi2", 2).unwrap()
}

/// Linear Poisson structure dual to so(3).
pub fn so3() -> Multivector {
    parse_multivector("x3*xi1*xi2 + x1*xi2*xi3 + x2*xi3*xi1", 3).unwrap()
}

/// A quadratic Poisson structure in three dimensions.
pub fn quadratic_poisson() -> Multivector {
    parse_multivector("x1*x2*xi1*xi2 + x2*x3*xi2*xi3 + x1*x3*xi1*xi3", 3).unwrap()
}

/// A cubic bivector that fails the Jacobi identity.
pub fn cubic_non_poisson() -> Multivector {
    parse_multivector("x1*xi1*xi2 + xi2*xi3 + x2^3*xi3*xi1", 3).unwrap()
}

/// The so(3) structure rescaled by a Casimir-free quadratic factor; Poisson,
/// with a nonzero tetrahedral flow.
pub fn rescaled_so3() -> Multivector {
    parse_multivector("(x1*x2 + x3^2)*(x3*xi1*xi2 + x1*xi2*xi3 + x2*xi3*xi1)", 3).unwrap()
}
