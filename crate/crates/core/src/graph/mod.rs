//! Labeled digraphs, graphs, posets, orientations and covers.
//!
//! Vertices are always the dense labels `0..n`. Operations that drop or merge
//! vertices relabel the survivors to `0..n'` preserving relative order.

mod cover;
mod digraph;
mod orientation;
mod poset;
mod undirected;

pub use cover::{CycleCover, PathCover};
pub use digraph::Digraph;
pub use orientation::Orientation;
pub use poset::Poset;
pub use undirected::Graph;

/// Largest supported vertex count. Vertex sets are `u32` bitmasks.
pub const MAX_VERTICES: usize = 16;

/// Bitmask of vertices.
pub type VertexSet = u32;

/// Iterates the members of a vertex set in increasing order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Bitmask with the vertices `0..n` set.
pub fn full_set(n: usize) -> VertexSet {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |s, &v| s | (1 << v))
}

pub(crate) fn check_size(n: usize) -> crate::Result<()> {
    if n > MAX_VERTICES {
        Err(crate::Error::TooLarge {
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Position of `v` among the members of `set` (its label after restriction).
pub(crate) fn rank_in(set: VertexSet, v: usize) -> usize {
    (set & ((1u32 << v) - 1)).count_ones() as usize
}
