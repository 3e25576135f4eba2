//! Set partitions of `{1, ..., n}`.
//!
//! The text and JSON forms are 1-indexed (`"1,2|3"`, `[[1,2],[3]]`); the API
//! is 0-indexed like the rest of the crate. Parts are kept sorted and listed
//! by smallest member, so equal partitions compare equal structurally.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    degree: usize,
    parts: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition from 0-indexed parts, which must be nonempty,
    /// disjoint, and cover `0..degree`. Part order and order within parts do
    /// not matter; the result is canonical.
    pub fn new(degree: usize, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut part_of: Vec<Option<usize>> = vec![None; degree];
        for (k, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::MalformedPartition("empty part".to_string()));
            }
            for &point in part {
                if point >= degree {
                    return Err(Error::PointOutOfRange {
                        point: point + 1,
                        degree,
                    });
                }
                if part_of[point].is_some() {
                    return Err(Error::RepeatedPoint { point: point + 1 });
                }
                part_of[point] = Some(k);
            }
        }
        if let Some(missing) = part_of.iter().position(|p| p.is_none()) {
            return Err(Error::MalformedPartition(format!(
                "point {} is not covered",
                missing + 1
            )));
        }
        let mut parts = parts;
        for part in &mut parts {
            part.sort_unstable();
        }
        parts.sort_unstable();
        Ok(SetPartition { degree, parts })
    }

    /// Parses the 1-indexed `"1,2|3,4"` form at the given degree.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut parts = Vec::new();
        for chunk in text.split('|') {
            let mut part = Vec::new();
            for token in chunk.split(',') {
                let token = token.trim();
                if token.is_empty() {
                    return Err(Error::MalformedPartition(format!(
                        "empty point in {text:?}"
                    )));
                }
                let point: usize = token.parse().map_err(|_| {
                    Error::MalformedPartition(format!("unreadable point {token:?}"))
                })?;
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                part.push(point - 1);
            }
            parts.push(part);
        }
        SetPartition::new(degree, parts)
    }

    /// The partition of `{1, ..., n}` into singletons.
    pub fn singletons(degree: usize) -> Self {
        SetPartition {
            degree,
            parts: (0..degree).map(|i| vec![i]).collect(),
        }
    }

    /// The one-part partition `{{1, ..., n}}`.
    pub fn full(degree: usize) -> Self {
        SetPartition {
            degree,
            parts: if degree == 0 {
                Vec::new()
            } else {
                vec![(0..degree).collect()]
            },
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// For each 0-indexed point, the index of the part containing it.
    pub fn part_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.degree];
        for (k, part) in self.parts.iter().enumerate() {
            for &point in part {
                ids[point] = k;
            }
        }
        ids
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            for (j, point) in part.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", point + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let one_indexed: Vec<Vec<usize>> = self
            .parts
            .iter()
            .map(|part| part.iter().map(|&p| p + 1).collect())
            .collect();
        one_indexed.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let one_indexed = Vec::<Vec<usize>>::deserialize(de)?;
        let degree = one_indexed.iter().map(|p| p.len()).sum();
        let parts = one_indexed
            .into_iter()
            .map(|part| {
                part.into_iter()
                    .map(|p| p.checked_sub(1).ok_or_else(|| D::Error::custom("point 0")))
                    .collect::<std::result::Result<Vec<usize>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        SetPartition::new(degree, parts).map_err(D::Error::custom)
    }
}

/// All partitions of `{1, ..., n}`, enumerated via restricted growth
/// strings: `a[0] = 0` and `a[i] <= max(a[..i]) + 1`. The count is the Bell
/// number (1, 2, 5, 15, 52 for n = 1..=5).
pub fn all_partitions(degree: usize) -> Vec<SetPartition> {
    fn extend(rgs: &mut Vec<usize>, max_used: usize, degree: usize, out: &mut Vec<SetPartition>) {
        if rgs.len() == degree {
            let parts = (0..max_used)
                .map(|k| (0..degree).filter(|&i| rgs[i] == k).collect())
                .collect();
            out.push(SetPartition::new(degree, parts).expect("growth string is a partition"));
            return;
        }
        for value in 0..=max_used {
            rgs.push(value);
            extend(rgs, max_used.max(value + 1), degree, out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 0, degree, &mut out);
    out
}
