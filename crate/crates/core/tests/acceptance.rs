//! Release gate: seven end-to-end checks over the standard group corpus,
//! each reporting a single PASS or FAIL line. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use permpoly::face::{
    face_subgroups, is_face_combinatorial, is_face_geometric, stabilizer_certificate,
    verify_certificate, verify_theorem,
};
use permpoly::partition::all_partitions;
use permpoly::polytope::{affine_dimension, barycenter_formula, barycenter_oracle};
use permpoly::rational::rat;
use permpoly::{LpResult, PermGroup, Permutation, SetPartition};

use common::{
    bareiss_rank, brute_force_lp_max, corpus, integer_difference_rows, random_bounded_lp,
    subgroups_by_subset_closure,
};

fn conclude(name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("PASS: {name}");
    } else {
        for failure in &failures {
            println!("      {failure}");
        }
        println!("FAIL: {name}");
        panic!("{} check(s) failed: {name}", failures.len());
    }
}

#[test]
fn both_face_tests_agree_on_every_standard_group() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let groups = corpus();
    for (name, group) in &groups {
        let report = match verify_theorem(group) {
            Ok(report) => report,
            Err(e) => {
                failures.push(format!("{name}: verification errored: {e}"));
                continue;
            }
        };
        if !report.agreement {
            let split: Vec<String> = report
                .records
                .iter()
                .filter(|r| r.combinatorial != r.geometric)
                .map(|r| format!("order {}", r.order))
                .collect();
            failures.push(format!(
                "{name}: verdicts split on subgroup(s) of {}",
                split.join(", ")
            ));
        }
        if report.subgroup_count != report.records.len() {
            failures.push(format!("{name}: subgroup count disagrees with its records"));
        }
        let faces = report.records.iter().filter(|r| r.combinatorial).count();
        if report.face_subgroup_count != faces {
            failures.push(format!("{name}: face count disagrees with its records"));
        }
    }
    conclude(
        &format!(
            "combinatorial and geometric face tests agree on every subgroup of all {} standard groups ({:.2?})",
            groups.len(),
            start.elapsed()
        ),
        failures,
    );
}

#[test]
fn barycenters_match_the_vertex_average_exactly() {
    let mut failures = Vec::new();
    for (name, group) in corpus() {
        let formula = barycenter_formula(&group);
        if formula != barycenter_oracle(&group) {
            failures.push(format!(
                "{name}: orbit formula disagrees with the vertex average"
            ));
        }
        if !formula.is_doubly_stochastic() {
            failures.push(format!("{name}: barycenter is not doubly stochastic"));
        }
    }
    conclude(
        "barycenter formula equals the vertex average and is doubly stochastic on every standard group",
        failures,
    );
}

#[test]
fn stabilizer_certificates_verify_for_every_partition_up_to_degree_five() {
    let mut failures = Vec::new();
    let expected_partition_counts = [1usize, 2, 5, 15, 52];
    let mut checked = 0usize;
    for degree in 1..=5usize {
        let partitions = all_partitions(degree);
        if partitions.len() != expected_partition_counts[degree - 1] {
            failures.push(format!(
                "degree {degree}: expected {} partitions, found {}",
                expected_partition_counts[degree - 1],
                partitions.len()
            ));
        }
        let mut groups = vec![
            (format!("S_{degree}"), PermGroup::symmetric(degree).unwrap()),
            (format!("C_{degree}"), PermGroup::cyclic(degree).unwrap()),
        ];
        if degree >= 3 {
            groups.push((format!("D_{degree}"), PermGroup::dihedral(degree).unwrap()));
        }
        for (name, group) in &groups {
            for partition in &partitions {
                let stabilizer = group.partition_stabilizer(partition).unwrap();
                let certificate = stabilizer_certificate(group, partition).unwrap();
                match verify_certificate(&certificate, &stabilizer, group) {
                    Ok(true) => checked += 1,
                    Ok(false) => failures.push(format!(
                        "{name}, partition {partition}: certificate rejected"
                    )),
                    Err(e) => failures.push(format!("{name}, partition {partition}: {e}")),
                }
            }
        }
    }
    conclude(
        &format!("stabilizer certificates verified for all {checked} group-partition pairs through degree 5"),
        failures,
    );
}

#[test]
fn degree_three_census_is_confirmed_by_independent_oracles() {
    let mut failures = Vec::new();
    let s3 = PermGroup::symmetric(3).unwrap();
    let subgroups = s3.subgroups().unwrap();

    let mut enumerated: Vec<Vec<Permutation>> = subgroups
        .iter()
        .map(|h| h.elements().to_vec())
        .collect();
    enumerated.sort();
    if enumerated != subgroups_by_subset_closure(&s3) {
        failures.push("subset-closure oracle disagrees with subgroup enumeration".into());
    }
    if subgroups.len() != 6 {
        failures.push(format!("expected 6 subgroups, found {}", subgroups.len()));
    }

    let combinatorial = face_subgroups(&s3).unwrap();
    if combinatorial.len() != 5 {
        failures.push(format!(
            "expected 5 face subgroups combinatorially, found {}",
            combinatorial.len()
        ));
    }
    let mut geometric = Vec::new();
    for h in &subgroups {
        if is_face_geometric(h, &s3).unwrap().0 {
            geometric.push(h.clone());
        }
    }
    if geometric.len() != 5 {
        failures.push(format!(
            "expected 5 face subgroups geometrically, found {}",
            geometric.len()
        ));
    }
    if combinatorial != geometric {
        failures.push("the two face oracles selected different subgroups".into());
    }

    let non_faces: Vec<PermGroup> = subgroups
        .iter()
        .filter(|h| !is_face_combinatorial(h, &s3).unwrap())
        .cloned()
        .collect();
    if let [rotations] = non_faces.as_slice() {
        if rotations.order() != 3 {
            failures.push(format!(
                "the non-face subgroup has order {}, expected the 3-cycle subgroup",
                rotations.order()
            ));
        }
        let barycenter = barycenter_formula(rotations);
        if barycenter != barycenter_formula(&s3) {
            failures.push("rotation barycenter differs from the full barycenter".into());
        }
        let third = rat(1, 3);
        if barycenter.flatten().iter().any(|v| v != &third) {
            failures.push("the colliding barycenter is not constant 1/3".into());
        }
        let stabilizer = s3.partition_stabilizer(&SetPartition::full(3)).unwrap();
        if stabilizer != s3 {
            failures.push("the one-part partition stabilizer is not the whole group".into());
        }
        if *rotations == stabilizer {
            failures.push("the rotation subgroup must not stabilize into itself".into());
        }
    } else {
        failures.push(format!(
            "expected exactly one non-face subgroup, found {}",
            non_faces.len()
        ));
    }

    conclude(
        "degree-3 census: 6 subgroups, 5 faces by both oracles, and the 3-cycle barycenter collides at 1/3",
        failures,
    );
}

#[test]
fn orbit_stabilizer_identity_holds_at_every_point() {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for (name, group) in corpus() {
        for point in 0..group.degree() {
            let orbit_len = group.orbit(point).len();
            let stabilizer_order = group.point_stabilizer(point).order();
            if orbit_len * stabilizer_order == group.order() {
                checked += 1;
            } else {
                failures.push(format!(
                    "{name}: point {} gives {} * {} != {}",
                    point + 1,
                    orbit_len,
                    stabilizer_order,
                    group.order()
                ));
            }
        }
    }
    conclude(
        &format!("orbit-stabilizer identity held at all {checked} points across the standard groups"),
        failures,
    );
}

#[test]
fn birkhoff_dimensions_are_squares_and_monotone_under_inclusion() {
    let mut failures = Vec::new();
    for n in 2..=5usize {
        let sn = PermGroup::symmetric(n).unwrap();
        let dim = affine_dimension(&sn);
        let expected = (n - 1) * (n - 1);
        if dim != expected {
            failures.push(format!("dim P(S_{n}) = {dim}, expected {expected}"));
        }
        let oracle = bareiss_rank(&integer_difference_rows(&sn));
        if dim != oracle {
            failures.push(format!(
                "S_{n}: rational rank {dim} disagrees with integer-elimination rank {oracle}"
            ));
        }
    }
    let s4 = PermGroup::symmetric(4).unwrap();
    let subgroups = s4.subgroups().unwrap();
    let dims: Vec<usize> = subgroups.iter().map(affine_dimension).collect();
    let mut inclusions = 0usize;
    for (i, h) in subgroups.iter().enumerate() {
        for (j, k) in subgroups.iter().enumerate() {
            if h.is_subgroup_of(k) {
                inclusions += 1;
                if dims[i] > dims[j] {
                    failures.push(format!(
                        "dimension drops {} -> {} along an inclusion of orders {} <= {}",
                        dims[i],
                        dims[j],
                        h.order(),
                        k.order()
                    ));
                }
            }
        }
    }
    conclude(
        &format!("P(S_n) dimensions equal (n-1)^2 for n=2..5 and stay monotone over {inclusions} degree-4 inclusions"),
        failures,
    );
}

#[test]
fn simplex_matches_vertex_enumeration_on_two_hundred_random_programs() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(1729);
    let mut optimal = 0usize;
    let mut infeasible = 0usize;
    for case in 0..200 {
        let lp = random_bounded_lp(&mut rng);
        let expected = brute_force_lp_max(&lp);
        match (lp.maximize(), expected) {
            (LpResult::Optimal { value, point }, Some(best)) => {
                optimal += 1;
                if value != best {
                    failures.push(format!(
                        "case {case}: simplex found {value}, vertex enumeration found {best}"
                    ));
                }
                if !lp.check_solution(&point) {
                    failures.push(format!("case {case}: reported point violates a constraint"));
                }
                if lp.objective_value(&point) != value {
                    failures.push(format!(
                        "case {case}: reported value does not match the reported point"
                    ));
                }
            }
            (LpResult::Infeasible, None) => infeasible += 1,
            (LpResult::Optimal { value, .. }, None) => failures.push(format!(
                "case {case}: simplex claims optimum {value} on an infeasible program"
            )),
            (LpResult::Infeasible, Some(best)) => failures.push(format!(
                "case {case}: simplex claims infeasible, vertex enumeration found {best}"
            )),
            (LpResult::Unbounded, _) => {
                failures.push(format!("case {case}: unbounded on a box-bounded program"))
            }
        }
    }
    conclude(
        &format!(
            "simplex matched vertex enumeration on 200 random programs ({optimal} optimal, {infeasible} infeasible)"
        ),
        failures,
    );
}
