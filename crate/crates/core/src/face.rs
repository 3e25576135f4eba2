//! Face tests for permutation polytopes, by two independent routes.
//!
//! A subgroup H of G spans a face of G's polytope exactly when some linear
//! functional is maximized over the polytope at precisely H's vertices. The
//! combinatorial route decides this by comparing H against the stabilizer of
//! its own orbit partition; the geometric route searches for a separating
//! functional directly, with an exact linear program. The two must agree,
//! and [`verify_theorem`] reports both verdicts for every subgroup.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::lp::{LinearProgram, LpResult};
use crate::matrix::RationalMatrix;
use crate::partition::SetPartition;
use crate::polytope::{barycenter_formula, permutation_matrix};
use crate::rational::{int, Rational};

/// Default ceiling on separation-program size (the program has
/// `degree^2 + 2` variables).
pub const DEFAULT_LP_VAR_CAP: usize = 256;

/// A linear functional together with the level its face lies on: the face
/// consists of the vertices M with `<functional, M> = level`, every other
/// vertex staying strictly below.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCertificate {
    pub functional: RationalMatrix,
    #[serde(with = "crate::rational::serde_str")]
    pub level: Rational,
}

impl FaceCertificate {
    /// Value of the functional at one permutation's matrix.
    pub fn evaluate(&self, p: &crate::perm::Permutation) -> Rational {
        self.functional.inner_product(&permutation_matrix(p))
    }
}

fn require_subgroup(h: &PermGroup, g: &PermGroup) -> Result<()> {
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: h.degree(),
            right: g.degree(),
        });
    }
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    Ok(())
}

/// Combinatorial face test: H spans a face of G's polytope exactly when H
/// is the full stabilizer in G of its own orbit partition.
pub fn is_face_combinatorial(h: &PermGroup, g: &PermGroup) -> Result<bool> {
    require_subgroup(h, g)?;
    let closure = g.partition_stabilizer(&h.orbit_partition())?;
    Ok(&closure == h)
}

/// The certificate showing that a partition stabilizer spans a face: the
/// functional scores one point for every j staying inside its part, so
/// elements preserving every part score the degree and everything else
/// scores strictly less.
pub fn stabilizer_certificate(
    g: &PermGroup,
    partition: &SetPartition,
) -> Result<FaceCertificate> {
    if partition.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: partition.degree(),
        });
    }
    let n = g.degree();
    let ids = partition.part_ids();
    let mut functional = RationalMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if ids[i] == ids[j] {
                functional.set(i, j, Rational::one());
            }
        }
    }
    Ok(FaceCertificate {
        functional,
        level: int(n as i64),
    })
}

/// Checks a certificate exactly: the functional must attain `level` on all
/// of H and stay strictly below on the rest of G.
pub fn verify_certificate(
    certificate: &FaceCertificate,
    h: &PermGroup,
    g: &PermGroup,
) -> Result<bool> {
    require_subgroup(h, g)?;
    if certificate.functional.size() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: certificate.functional.size(),
            right: g.degree(),
        });
    }
    for element in g.elements() {
        let value = certificate.evaluate(element);
        let ok = if h.contains(element) {
            value == certificate.level
        } else {
            value < certificate.level
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The separation program: find a functional c and level b with
/// `<c, M(h)> = b` on H and `<c, M(g)> <= b - eps` off H, maximizing eps
/// (capped at 1; certificates scale). H spans a face exactly when the
/// optimum is positive.
fn separation_program(h: &PermGroup, g: &PermGroup) -> LinearProgram {
    let n = g.degree();
    let vars = n * n + 2; // functional entries row-major, then b, then eps
    let eps_col = n * n + 1;
    let mut lp = LinearProgram::new(vars);
    let mut objective = vec![Rational::zero(); vars];
    objective[eps_col] = Rational::one();
    lp.set_objective(objective);
    for element in g.elements() {
        let matrix = permutation_matrix(element);
        let mut coeffs = Vec::with_capacity(vars);
        coeffs.extend(matrix.flatten().iter().cloned());
        coeffs.push(-Rational::one());
        if h.contains(element) {
            coeffs.push(Rational::zero());
            lp.add_eq(coeffs, Rational::zero());
        } else {
            coeffs.push(Rational::one());
            lp.add_le(coeffs, Rational::zero());
        }
    }
    let mut eps_bound = vec![Rational::zero(); vars];
    eps_bound[eps_col] = Rational::one();
    lp.add_le(eps_bound, Rational::one());
    lp
}

/// Geometric face test via the separation program, using the default
/// [`DEFAULT_LP_VAR_CAP`].
///
/// Returns the verdict and, for faces, a certificate with denominators
/// cleared. `H = G` is a face of itself with the trivial certificate
/// (zero functional at level zero).
pub fn is_face_geometric(
    h: &PermGroup,
    g: &PermGroup,
) -> Result<(bool, Option<FaceCertificate>)> {
    is_face_geometric_with_cap(h, g, DEFAULT_LP_VAR_CAP)
}

pub fn is_face_geometric_with_cap(
    h: &PermGroup,
    g: &PermGroup,
    cap: usize,
) -> Result<(bool, Option<FaceCertificate>)> {
    require_subgroup(h, g)?;
    if h == g {
        return Ok((
            true,
            Some(FaceCertificate {
                functional: RationalMatrix::zeros(g.degree()),
                level: Rational::zero(),
            }),
        ));
    }
    let n = g.degree();
    let vars = n * n + 2;
    if vars > cap {
        return Err(Error::LpCapExceeded { vars, cap });
    }
    let lp = separation_program(h, g);
    let LpResult::Optimal { value, point } = lp.maximize() else {
        unreachable!("the zero functional is feasible and eps is capped at 1");
    };
    if value <= Rational::zero() {
        return Ok((false, None));
    }
    let mut functional = RationalMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            functional.set(i, j, point[i * n + j].clone());
        }
    }
    let certificate = cleared(&functional, &point[n * n]);
    debug_assert_eq!(verify_certificate(&certificate, h, g), Ok(true));
    Ok((true, Some(certificate)))
}

/// Scales a functional and level by the least common multiple of their
/// denominators; positive scaling preserves the face it certifies.
fn cleared(functional: &RationalMatrix, level: &Rational) -> FaceCertificate {
    let mut multiple: BigInt = level.denom().clone();
    for entry in functional.flatten() {
        multiple = multiple.lcm(entry.denom());
    }
    let scale = Rational::from_integer(multiple);
    FaceCertificate {
        functional: functional.scale(&scale),
        level: level * &scale,
    }
}

/// All subgroups of G spanning faces of G's polytope, by the combinatorial
/// test, in the canonical subgroup order.
pub fn face_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut faces = Vec::new();
    for subgroup in g.subgroups()? {
        if is_face_combinatorial(&subgroup, g)? {
            faces.push(subgroup);
        }
    }
    Ok(faces)
}

/// One subgroup's row in a [`TheoremReport`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubgroupRecord {
    pub order: usize,
    pub orbit_partition: SetPartition,
    pub combinatorial: bool,
    pub geometric: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<FaceCertificate>,
}

/// Both face verdicts for every subgroup of one group.
///
/// `agreement` says the combinatorial and geometric verdicts matched on
/// every subgroup; a disagreement is reported rather than raised, since it
/// would be the interesting outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub group: String,
    pub degree: usize,
    pub order: usize,
    pub subgroup_count: usize,
    pub face_subgroup_count: usize,
    pub agreement: bool,
    pub records: Vec<SubgroupRecord>,
}

/// Runs both face tests on every subgroup of `group`.
///
/// Along the way this checks two identities the combinatorial criterion
/// rests on: the stabilizer of H's orbit partition has the same orbit
/// partition as H, and hence the same barycenter. Either failing would be a
/// bug in this crate, so they are hard assertions, not report fields.
pub fn verify_theorem(group: &PermGroup) -> Result<TheoremReport> {
    let subgroups = group.subgroups()?;
    let mut records = Vec::with_capacity(subgroups.len());
    let mut face_subgroup_count = 0;
    let mut agreement = true;
    for h in &subgroups {
        let orbit_partition = h.orbit_partition();
        let stabilizer = group.partition_stabilizer(&orbit_partition)?;
        assert_eq!(
            stabilizer.orbit_partition(),
            orbit_partition,
            "orbit-partition stabilizer changed the orbit partition"
        );
        assert_eq!(
            barycenter_formula(h),
            barycenter_formula(&stabilizer),
            "equal orbit partitions must give equal barycenters"
        );
        let combinatorial = &stabilizer == h;
        let (geometric, certificate) = is_face_geometric(h, group)?;
        if combinatorial {
            face_subgroup_count += 1;
        }
        agreement &= combinatorial == geometric;
        records.push(SubgroupRecord {
            order: h.order(),
            orbit_partition,
            combinatorial,
            geometric,
            certificate,
        });
    }
    Ok(TheoremReport {
        group: group.to_string(),
        degree: group.degree(),
        order: group.order(),
        subgroup_count: subgroups.len(),
        face_subgroup_count,
        agreement,
        records,
    })
}
