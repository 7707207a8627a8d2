//! P1 finite-element assembly of mass and stiffness matrices.
//!
//! Element matrices are exact closed forms: for a triangle with vertices
//! p0, p1, p2 and area A, with b_i = y_{i+1} - y_{i+2} and c_i = x_{i+2} - x_{i+1},
//!
//!   M_e = (A/12) [[2,1,1],[1,2,1],[1,1,2]],      K_e[i][j] = (b_i b_j + c_i c_j) / (4A).
//!
//! No quadrature is involved, so products of linear functions integrate exactly.

use crate::mesh::Mesh;
use crate::sparse::CsrMatrix;

/// Consistent (non-lumped) mass matrix, discretizing (u, v) over the domain.
pub fn assemble_mass(mesh: &Mesh) -> CsrMatrix {
    let mut triplets = Vec::with_capacity(9 * mesh.triangles.len());
    for (t, tri) in mesh.triangles.iter().enumerate() {
        let area = mesh.signed_area(t);
        let diag = area / 6.0;
        let off = area / 12.0;
        for a in 0..3 {
            for b in 0..3 {
                triplets.push((tri[a], tri[b], if a == b { diag } else { off }));
            }
        }
    }
    CsrMatrix::from_triplets(mesh.num_nodes(), triplets)
}

/// Stiffness matrix, discretizing (grad u, grad v); symmetric positive
/// semidefinite with the constant vector in its kernel (pure Neumann).
pub fn assemble_stiffness(mesh: &Mesh) -> CsrMatrix {
    let mut triplets = Vec::with_capacity(9 * mesh.triangles.len());
    for (t, tri) in mesh.triangles.iter().enumerate() {
        let area = mesh.signed_area(t);
        let p: Vec<[f64; 2]> = tri.iter().map(|&i| mesh.nodes[i]).collect();
        let b = [p[1][1] - p[2][1], p[2][1] - p[0][1], p[0][1] - p[1][1]];
        let c = [p[2][0] - p[1][0], p[0][0] - p[2][0], p[1][0] - p[0][0]];
        for i in 0..3 {
            for j in 0..3 {
                triplets.push((tri[i], tri[j], (b[i] * b[j] + c[i] * c[j]) / (4.0 * area)));
            }
        }
    }
    CsrMatrix::from_triplets(mesh.num_nodes(), triplets)
}
