//! Permutations of `{1, ..., n}` in image form, with disjoint-cycle notation
//! for input and output.
//!
//! Points are 1-indexed in all text forms and 0-indexed in the API, so
//! `apply(0)` answers where point 1 goes.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` stored as its 0-indexed image vector:
/// `image[j] = i` means point `j + 1` maps to `i + 1`.
///
/// The derived ordering is lexicographic on image vectors, which is the
/// canonical element order used throughout the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            image: (0..degree).collect(),
        }
    }

    /// Builds a permutation from a 0-indexed image vector, rejecting
    /// anything that is not a bijection on `0..image.len()`.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut hit = vec![false; n];
        for &i in &image {
            if i >= n {
                return Err(Error::PointOutOfRange {
                    point: i + 1,
                    degree: n,
                });
            }
            if hit[i] {
                return Err(Error::RepeatedPoint { point: i + 1 });
            }
            hit[i] = true;
        }
        Ok(Permutation { image })
    }

    /// Parses disjoint-cycle notation at the given degree.
    ///
    /// Cycles are parenthesized, points are separated by whitespace or
    /// commas, fixed points may be omitted, and the empty string, `"()"`,
    /// and singleton cycles like `"(2)"` all denote the identity on the
    /// points they mention. Points must lie in `1..=degree` and may not
    /// repeat across cycles.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let malformed = |msg: &str| Error::MalformedPermutation(format!("{msg} in {text:?}"));
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<String> = None;
        for ch in text.chars() {
            match (&mut current, ch) {
                (None, '(') => current = Some(String::new()),
                (None, c) if c.is_whitespace() => {}
                (None, _) => return Err(malformed("expected '('")),
                (Some(buf), ')') => {
                    let mut cycle = Vec::new();
                    for token in buf.split(|c: char| c == ',' || c.is_whitespace()) {
                        if token.is_empty() {
                            continue;
                        }
                        let point: usize = token
                            .parse()
                            .map_err(|_| malformed("unreadable point"))?;
                        cycle.push(point);
                    }
                    cycles.push(cycle);
                    current = None;
                }
                (Some(_), '(') => return Err(malformed("nested '('")),
                (Some(buf), c) if c.is_ascii_digit() || c == ',' || c.is_whitespace() => {
                    buf.push(c)
                }
                (Some(_), _) => return Err(malformed("unexpected character")),
            }
        }
        if current.is_some() {
            return Err(malformed("unclosed '('"));
        }

        let mut image: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in &cycles {
            for &point in cycle {
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                if seen[point - 1] {
                    return Err(Error::RepeatedPoint { point });
                }
                seen[point - 1] = true;
            }
            for (k, &point) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                image[point - 1] = next - 1;
            }
        }
        Ok(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Image of a 0-indexed point.
    pub fn apply(&self, point: usize) -> usize {
        self.image[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(j, &i)| j == i)
    }

    /// `self . other`: `other` acts first, so the composite sends `j` to
    /// `self.apply(other.apply(j))`. Panics if the degrees differ.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "cannot compose permutations of different degrees"
        );
        Permutation {
            image: other.image.iter().map(|&j| self.image[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (j, &i) in self.image.iter().enumerate() {
            image[i] = j;
        }
        Permutation { image }
    }

    /// Nontrivial cycles with 1-indexed points, each rotated to start at its
    /// smallest point and listed in order of those starting points. Fixed
    /// points are omitted; the identity yields no cycles.
    pub fn to_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut cycle = vec![start + 1];
            let mut point = self.image[start];
            while point != start {
                seen[point] = true;
                cycle.push(point + 1);
                point = self.image[point];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.to_cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, point) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{point}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
