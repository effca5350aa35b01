//! Small worked instances used across tests, benches and the CLI docs.

use crate::graph::{Digraph, Orientation, Poset};

/// Acyclic digraph on 4 vertices with arrows `0→1, 0→2, 1→2, 2→3`.
/// Its complement has seven Hamiltonian paths and seven cycle covers.
pub fn four_vertex_acyclic() -> Digraph {
    Digraph::new(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).expect("valid")
}

/// Poset on 5 elements with covers `0<1, 1<2, 3<4, 3<1`.
/// Its incomparability graph has edges `0-3, 0-4, 1-4, 2-4`.
pub fn five_element_poset() -> Poset {
    Poset::from_covers(5, [(0, 1), (1, 2), (3, 4), (3, 1)]).expect("valid")
}

/// Acyclic orientation of the incomparability graph of [`five_element_poset`]
/// with shatter-path `1, 4, 2, 0, 3`. It has a single sink at 1.
pub fn five_element_orientation() -> Orientation {
    let g = five_element_poset().incomparability_graph();
    Orientation::new(g, [(3, 0), (0, 4), (4, 1), (2, 4)]).expect("valid")
}

/// Circular orientation of the same graph with sinks 3 and 1. Repeated
/// flipping of the second-largest sink takes it to
/// [`five_element_orientation`] in three flips.
pub fn five_element_circular_orientation() -> Orientation {
    let g = five_element_poset().incomparability_graph();
    Orientation::new(g, [(0, 3), (4, 0), (4, 1), (2, 4)]).expect("valid")
}
