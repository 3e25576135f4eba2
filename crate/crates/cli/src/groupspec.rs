//! Group specifications: named families like `S4`, `A5`, `C6`, `D5`
//! (case-insensitive), or an explicit `<degree>:<generators>` form whose
//! generators are cycles like `(1 2 3)`, separated by top-level commas.

use permpoly::{PermGroup, Permutation};

use crate::CliError;

pub fn parse_group(text: &str) -> Result<PermGroup, CliError> {
    let text = text.trim();
    if let Some(group) = parse_family(text)? {
        return Ok(group);
    }
    if let Some((degree, generators)) = text.split_once(':') {
        let degree: usize = degree
            .trim()
            .parse()
            .map_err(|_| CliError::Spec(format!("bad degree in group specification '{text}'")))?;
        if degree == 0 {
            return Err(CliError::Spec("degree must be at least 1".to_string()));
        }
        let generators = parse_generators(generators, degree)?;
        return Ok(PermGroup::from_generators(degree, generators)?);
    }
    Err(CliError::Spec(format!(
        "unrecognized group specification '{text}'; use a family like S4, A4, C6 or D5, or '<degree>:<generators>'"
    )))
}

/// Recognizes `S<n>`, `A<n>`, `C<n>`, `D<n>`; anything else falls through
/// as `None` so the caller can try the explicit form.
fn parse_family(text: &str) -> Result<Option<PermGroup>, CliError> {
    let mut chars = text.chars();
    let Some(family) = chars.next() else {
        return Ok(None);
    };
    let family = family.to_ascii_uppercase();
    if !"SACD".contains(family) {
        return Ok(None);
    }
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Ok(None);
    }
    let Ok(n) = digits.parse::<usize>() else {
        return Err(CliError::Spec(format!("degree out of range in '{text}'")));
    };
    if n == 0 {
        return Err(CliError::Spec("degree must be at least 1".to_string()));
    }
    if family == 'D' && n < 3 {
        return Err(CliError::Spec(format!(
            "D{n} is not supported; the dihedral action needs at least 3 vertices"
        )));
    }
    let group = match family {
        'S' => PermGroup::symmetric(n)?,
        'A' => PermGroup::alternating(n)?,
        'C' => PermGroup::cyclic(n)?,
        _ => PermGroup::dihedral(n)?,
    };
    Ok(Some(group))
}

/// Parses a comma-separated generator list at the given degree. Commas
/// inside parentheses separate cycle points, not generators.
pub fn parse_generators(text: &str, degree: usize) -> Result<Vec<Permutation>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut generators = Vec::new();
    for token in split_top_level(text) {
        let token = token.trim();
        if token.is_empty() {
            return Err(CliError::Spec("empty generator in list".to_string()));
        }
        generators.push(Permutation::parse(token, degree)?);
    }
    Ok(generators)
}

fn split_top_level(text: &str) -> Vec<&str> {
    let mut pieces = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                pieces.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&text[start..]);
    pieces
}
