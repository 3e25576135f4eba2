//! The permutation polytope of a group: exact barycenters, affine dimension,
//! and equality of polytopes.
//!
//! The polytope of a group G of degree n lives in the space of n x n
//! matrices and is the convex hull of the permutation matrices of the
//! elements of G.

use num_traits::One;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::matrix::{rational_rank, RationalMatrix};
use crate::perm::Permutation;
use crate::rational::{int, Rational};

/// The 0/1 matrix of a permutation: `M[i][j] = 1` exactly when `p` sends
/// point `j` to point `i`, so `M(p . q) = M(p) M(q)`.
pub fn permutation_matrix(p: &Permutation) -> RationalMatrix {
    let n = p.degree();
    let mut m = RationalMatrix::zeros(n);
    for j in 0..n {
        m.set(p.apply(j), j, Rational::one());
    }
    m
}

/// Barycenter by definition: the average of the permutation matrices of all
/// group elements.
pub fn barycenter_oracle(group: &PermGroup) -> RationalMatrix {
    let mut sum = RationalMatrix::zeros(group.degree());
    for element in group.elements() {
        sum = &sum + &permutation_matrix(element);
    }
    sum.scale(&int(group.order() as i64).recip())
}

/// Barycenter from orbit structure alone: the (i, j) entry is `1/|orbit(i)|`
/// when i and j lie in the same orbit and 0 otherwise.
///
/// Why this agrees with [`barycenter_oracle`]: the (i, j) entry of the
/// element sum counts the g with g(j) = i. That count is `|G_j|` when i and
/// j share an orbit (the witnesses form a coset of the point stabilizer) and
/// 0 otherwise, and orbit-stabilizer counting turns `|G_j| / |G|` into
/// `1/|orbit(j)|`, with `|orbit(j)| = |orbit(i)|`.
pub fn barycenter_formula(group: &PermGroup) -> RationalMatrix {
    let n = group.degree();
    let partition = group.orbit_partition();
    let ids = partition.part_ids();
    let mut m = RationalMatrix::zeros(n);
    for part in partition.parts() {
        let weight = int(part.len() as i64).recip();
        for &i in part {
            for &j in part {
                debug_assert_eq!(ids[i], ids[j]);
                m.set(i, j, weight.clone());
            }
        }
    }
    m
}

/// Dimension of the affine hull of the polytope's vertices: the rank of
/// `{M(g) - M(id) : g in G}` with matrices flattened row-major.
pub fn affine_dimension(group: &PermGroup) -> usize {
    let identity = permutation_matrix(&Permutation::identity(group.degree()));
    let rows: Vec<Vec<Rational>> = group
        .elements()
        .iter()
        .map(|g| {
            permutation_matrix(g)
                .flatten()
                .iter()
                .zip(identity.flatten())
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    rational_rank(&rows)
}

/// Whether two groups of the same degree span the same polytope.
///
/// Permutation matrices are 0/1 points of the Birkhoff polytope and hence
/// vertices of any polytope they span, so the polytopes are equal exactly
/// when the element sets are.
pub fn polytope_equal(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(a == b)
}
