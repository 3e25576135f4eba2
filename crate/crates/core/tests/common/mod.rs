//! Independent oracles shared by the integration suites.
//!
//! Everything here recomputes answers from definitions, deliberately not
//! through the code paths under test: the LP oracle enumerates vertices
//! instead of pivoting, the rank oracle eliminates fraction-free over the
//! integers instead of over the rationals, and the subgroup oracle filters
//! raw subsets instead of growing closures.

// Each test binary uses its own subset of the oracles.
#![allow(dead_code)]

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use permpoly::rational::int;
use permpoly::{LinearProgram, PermGroup, Permutation, Rational};

/// The standard corpus: S_3, S_4, A_4, C_2..C_8, D_3..D_8.
pub fn corpus() -> Vec<(String, PermGroup)> {
    let mut groups = vec![
        ("S3".to_string(), PermGroup::symmetric(3).unwrap()),
        ("S4".to_string(), PermGroup::symmetric(4).unwrap()),
        ("A4".to_string(), PermGroup::alternating(4).unwrap()),
    ];
    for n in 2..=8 {
        groups.push((format!("C{n}"), PermGroup::cyclic(n).unwrap()));
    }
    for n in 3..=8 {
        groups.push((format!("D{n}"), PermGroup::dihedral(n).unwrap()));
    }
    groups
}

/// Solves a square rational system by Gaussian elimination; `None` when the
/// matrix is singular.
pub fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "system is not square");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let lead = m[col][col].clone();
        for c in col..=n {
            let v = &m[col][c] / &lead;
            m[col][c] = v;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=n {
                    let v = &m[r][c] - &(&m[col][c] * &factor);
                    m[r][c] = v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Brute-force LP maximization: every subset of `num_vars` constraints is
/// solved as an equality system, the feasible solutions are collected, and
/// the best objective wins. `None` means no feasible vertex, which for the
/// bounded programs the tests generate means infeasible.
pub fn brute_force_lp_max(lp: &LinearProgram) -> Option<Rational> {
    let n = lp.num_vars();
    let constraints = lp.constraints();
    let mut best: Option<Rational> = None;
    for subset in (0..constraints.len()).combinations(n) {
        let a: Vec<Vec<Rational>> = subset.iter().map(|&i| constraints[i].coeffs.clone()).collect();
        let b: Vec<Rational> = subset.iter().map(|&i| constraints[i].rhs.clone()).collect();
        let Some(x) = solve_square(&a, &b) else {
            continue;
        };
        if !lp.check_solution(&x) {
            continue;
        }
        let value = lp.objective_value(&x);
        best = Some(match best.take() {
            None => value,
            Some(cur) => cur.max(value),
        });
    }
    best
}

/// A small random program with box bounds on every variable, so the
/// feasible region is bounded and [`brute_force_lp_max`] is a complete
/// oracle for it.
pub fn random_bounded_lp(rng: &mut impl Rng) -> LinearProgram {
    let n = rng.random_range(1..=3);
    let mut lp = LinearProgram::new(n);
    lp.set_objective((0..n).map(|_| int(rng.random_range(-4..=4))).collect());
    let bound = rng.random_range(1..=5);
    for i in 0..n {
        let mut row = vec![int(0); n];
        row[i] = int(1);
        lp.add_le(row.clone(), int(bound));
        row[i] = int(-1);
        lp.add_le(row, int(bound));
    }
    for _ in 0..rng.random_range(0..=3) {
        let coeffs: Vec<Rational> = (0..n).map(|_| int(rng.random_range(-3..=3))).collect();
        let rhs = int(rng.random_range(-5..=5));
        if rng.random_range(0..4) == 0 {
            lp.add_eq(coeffs, rhs);
        } else {
            lp.add_le(coeffs, rhs);
        }
    }
    lp
}

/// Rank by Bareiss fraction-free elimination over the integers. Divisions
/// are checked exact, so a bookkeeping bug fails loudly instead of
/// returning a wrong rank.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let height = m.len();
    let width = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(pivot) = (rank..height).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..height {
            for c in col + 1..width {
                let numer = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                let (q, rem) = numer.div_rem(&prev);
                assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Flattened `M(g) - M(id)` rows as integers, the input [`bareiss_rank`]
/// wants for dimension cross-checks.
pub fn integer_difference_rows(group: &PermGroup) -> Vec<Vec<BigInt>> {
    let n = group.degree();
    group
        .elements()
        .iter()
        .map(|g| {
            let mut row = vec![BigInt::zero(); n * n];
            for j in 0..n {
                row[g.apply(j) * n + j] += 1;
                row[j * n + j] -= 1;
            }
            row
        })
        .collect()
}

/// Every subgroup of `g`, the slow way: filter all subsets containing the
/// identity for closure under composition and inverses. Only usable for
/// tiny groups; element lists come back sorted.
pub fn subgroups_by_subset_closure(g: &PermGroup) -> Vec<Vec<Permutation>> {
    let identity = Permutation::identity(g.degree());
    let others: Vec<&Permutation> = g.elements().iter().filter(|e| !e.is_identity()).collect();
    assert!(others.len() <= 16, "subset oracle is exponential; group too big");
    let mut found = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut subset = vec![identity.clone()];
        for (bit, element) in others.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                subset.push((*element).clone());
            }
        }
        subset.sort();
        let closed = subset.iter().all(|a| {
                subset
                    .iter()
                    .all(|b| subset.binary_search(&a.compose(b)).is_ok())
            })
            && subset
                .iter()
                .all(|a| subset.binary_search(&a.inverse()).is_ok());
        if closed {
            found.push(subset);
        }
    }
    found.sort();
    found
}
