//! Permutation groups with eagerly computed element lists.
//!
//! Groups here are small by design: construction closes the generating set
//! immediately (capped), and every operation works on the full element list
//! in canonical order. That keeps orbits, stabilizers, and subgroup
//! enumeration exact and trivially deterministic.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::perm::Permutation;

/// Default ceiling for group closure, the order of S_7.
pub const DEFAULT_CLOSURE_CAP: usize = 20_160;

/// Default ceiling on the order of a group whose subgroups are enumerated.
pub const DEFAULT_SUBGROUP_CAP: usize = 240;

/// A finite permutation group on `{1, ..., n}`.
///
/// `elements` is the full group, sorted lexicographically by image vector;
/// `generators` is whatever generating set the group was built from. Two
/// groups compare equal exactly when their degrees and element sets agree.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// Breadth-first closure of `gens` under composition. Identity is always
/// included; in a finite group closure under composition yields inverses for
/// free. `cap` bounds the number of elements.
fn close(degree: usize, gens: &[Permutation], cap: Option<usize>) -> Result<Vec<Permutation>> {
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(element) = frontier.pop() {
        for g in gens {
            let product = element.compose(g);
            if seen.contains(&product) {
                continue;
            }
            if let Some(cap) = cap {
                if seen.len() + 1 > cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
            }
            seen.insert(product.clone());
            frontier.push(product);
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    Ok(elements)
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Closes `generators` under composition, with the default cap of
    /// [`DEFAULT_CLOSURE_CAP`] elements.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::from_generators_with_cap(degree, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_generators_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let elements = close(degree, &generators, Some(cap))?;
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    /// Wraps an already closed element set as a group, computing a small
    /// generating set greedily. Callers guarantee closure.
    pub(crate) fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        debug_assert!(
            elements.iter().all(|a| elements
                .iter()
                .all(|b| elements.binary_search(&a.compose(b)).is_ok())),
            "element set is not closed under composition"
        );
        let mut generators: Vec<Permutation> = Vec::new();
        let mut known: Vec<Permutation> = vec![Permutation::identity(degree)];
        for element in &elements {
            if known.binary_search(element).is_err() {
                generators.push(element.clone());
                known = close(degree, &generators, None).expect("uncapped closure");
            }
        }
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    /// S_n, generated by `(1 2)` and `(1 2 ... n)`.
    pub fn symmetric(degree: usize) -> Result<Self> {
        let mut generators = Vec::new();
        if degree >= 2 {
            generators.push(transposition(degree, 0, 1));
        }
        if degree >= 3 {
            generators.push(rotation(degree));
        }
        Self::from_generators(degree, generators)
    }

    /// C_n, generated by the n-cycle `(1 2 ... n)`.
    pub fn cyclic(degree: usize) -> Result<Self> {
        let generators = if degree >= 2 {
            vec![rotation(degree)]
        } else {
            Vec::new()
        };
        Self::from_generators(degree, generators)
    }

    /// A_n, generated by 3-cycles: `(1 2 3)` together with `(1 2 ... n)`
    /// for odd n or `(2 3 ... n)` for even n.
    pub fn alternating(degree: usize) -> Result<Self> {
        let mut generators = Vec::new();
        if degree >= 3 {
            let mut image: Vec<usize> = (0..degree).collect();
            image[0] = 1;
            image[1] = 2;
            image[2] = 0;
            generators.push(Permutation::from_images(image).expect("3-cycle"));
        }
        if degree >= 4 {
            generators.push(if degree % 2 == 1 {
                rotation(degree)
            } else {
                let mut image: Vec<usize> = vec![0; degree];
                for j in 1..degree {
                    image[j] = if j + 1 < degree { j + 1 } else { 1 };
                }
                Permutation::from_images(image).expect("(n-1)-cycle")
            });
        }
        Self::from_generators(degree, generators)
    }

    /// D_n acting on the n vertices of a regular n-gon (order 2n), generated
    /// by the rotation `(1 2 ... n)` and the reflection `i -> n + 1 - i`.
    /// Panics for degree < 3, where the action degenerates.
    pub fn dihedral(degree: usize) -> Result<Self> {
        assert!(degree >= 3, "dihedral action needs at least 3 vertices");
        let reflection =
            Permutation::from_images((0..degree).rev().collect()).expect("reflection");
        Self::from_generators(degree, vec![rotation(degree), reflection])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, sorted lexicographically by image vector.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// Orbit of a 0-indexed point, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        assert!(point < self.degree, "point out of range");
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut frontier = vec![point];
        while let Some(p) = frontier.pop() {
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    frontier.push(q);
                }
            }
        }
        (0..self.degree).filter(|&p| seen[p]).collect()
    }

    /// The partition of `{1, ..., n}` into orbits.
    pub fn orbit_partition(&self) -> SetPartition {
        let mut assigned = vec![false; self.degree];
        let mut parts = Vec::new();
        for point in 0..self.degree {
            if assigned[point] {
                continue;
            }
            let orbit = self.orbit(point);
            for &p in &orbit {
                assigned[p] = true;
            }
            parts.push(orbit);
        }
        SetPartition::new(self.degree, parts).expect("orbits partition the points")
    }

    /// Subgroup fixing a 0-indexed point.
    pub fn point_stabilizer(&self, point: usize) -> PermGroup {
        assert!(point < self.degree, "point out of range");
        let elements = self
            .elements
            .iter()
            .filter(|e| e.apply(point) == point)
            .cloned()
            .collect();
        PermGroup::from_elements(self.degree, elements)
    }

    /// Subgroup preserving every part of `partition` setwise.
    pub fn partition_stabilizer(&self, partition: &SetPartition) -> Result<PermGroup> {
        if partition.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: partition.degree(),
            });
        }
        let ids = partition.part_ids();
        let elements = self
            .elements
            .iter()
            .filter(|e| (0..self.degree).all(|j| ids[e.apply(j)] == ids[j]))
            .cloned()
            .collect();
        Ok(PermGroup::from_elements(self.degree, elements))
    }

    /// Every subgroup, found by repeatedly adjoining one element to known
    /// subgroups and closing, starting from the trivial group. Results are
    /// sorted by order, then by element list. Capped at
    /// [`DEFAULT_SUBGROUP_CAP`] for the ambient order.
    pub fn subgroups(&self) -> Result<Vec<PermGroup>> {
        self.subgroups_with_cap(DEFAULT_SUBGROUP_CAP)
    }

    pub fn subgroups_with_cap(&self, cap: usize) -> Result<Vec<PermGroup>> {
        if self.order() > cap {
            return Err(Error::SubgroupCapExceeded {
                cap,
                order: self.order(),
            });
        }
        let trivial = vec![Permutation::identity(self.degree)];
        let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
        seen.insert(trivial.clone());
        let mut queue = vec![trivial];
        while let Some(sub) = queue.pop() {
            for g in &self.elements {
                if sub.binary_search(g).is_ok() {
                    continue;
                }
                let mut seed = sub.clone();
                seed.push(g.clone());
                let extension = close(self.degree, &seed, None)?;
                if seen.insert(extension.clone()) {
                    queue.push(extension);
                }
            }
        }
        let mut subgroups: Vec<PermGroup> = seen
            .into_iter()
            .map(|elements| PermGroup::from_elements(self.degree, elements))
            .collect();
        subgroups.sort_by(|a, b| {
            (a.order(), &a.elements).cmp(&(b.order(), &b.elements))
        });
        Ok(subgroups)
    }
}

fn rotation(degree: usize) -> Permutation {
    Permutation::from_images((0..degree).map(|j| (j + 1) % degree).collect())
        .expect("rotation")
}

fn transposition(degree: usize, a: usize, b: usize) -> Permutation {
    let mut image: Vec<usize> = (0..degree).collect();
    image.swap(a, b);
    Permutation::from_images(image).expect("transposition")
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\u{27e8}")?;
        if self.generators.is_empty() {
            write!(f, "()")?;
        }
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "\u{27e9}")
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} of degree {}, order {}", self, self.degree, self.order())
    }
}
