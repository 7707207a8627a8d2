//! Structured P1 triangulation of the unit square.
//!
//! The domain (0,1)x(0,1) is divided into n x n cells, each split into two
//! triangles along the cell diagonal from the lower-left to the upper-right
//! corner. Nodes are ordered lexicographically, row-major by y then x, so
//! node (i, j) has index j*(n+1) + i and coordinates (i/n, j/n).

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Mesh {
    /// Subdivisions per side.
    pub n: usize,
    /// Node coordinates, (n+1)^2 entries in lexicographic order.
    pub nodes: Vec<[f64; 2]>,
    /// Node-index triples, counter-clockwise, 2n^2 entries.
    pub triangles: Vec<[usize; 3]>,
    /// Mesh width 1/n.
    pub h: f64,
}

impl Mesh {
    /// Builds the structured mesh with n subdivisions per side.
    pub fn structured(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "mesh subdivisions must be at least 1".into(),
            ));
        }
        let nf = n as f64;
        let mut nodes = Vec::with_capacity((n + 1) * (n + 1));
        for j in 0..=n {
            for i in 0..=n {
                nodes.push([i as f64 / nf, j as f64 / nf]);
            }
        }
        let mut triangles = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for i in 0..n {
                let ll = j * (n + 1) + i;
                let lr = ll + 1;
                let ul = ll + (n + 1);
                let ur = ul + 1;
                triangles.push([ll, lr, ur]);
                triangles.push([ll, ur, ul]);
            }
        }
        Ok(Mesh {
            n,
            nodes,
            triangles,
            h: 1.0 / nf,
        })
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// Index of the grid node (i/n, j/n).
    pub fn node_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= self.n && j <= self.n);
        j * (self.n + 1) + i
    }

    /// Index of the diagonal node (k/n, k/n).
    pub fn diagonal_node(&self, k: usize) -> usize {
        self.node_index(k, k)
    }

    /// Signed area of triangle t (positive for counter-clockwise orientation).
    pub fn signed_area(&self, t: usize) -> f64 {
        let [a, b, c] = self.triangles[t];
        let pa = self.nodes[a];
        let pb = self.nodes[b];
        let pc = self.nodes[c];
        0.5 * ((pb[0] - pa[0]) * (pc[1] - pa[1]) - (pc[0] - pa[0]) * (pb[1] - pa[1]))
    }
}
