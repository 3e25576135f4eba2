//! Exact computations on permutation polytopes from the command line:
//! orbits, stabilizers, barycenters, dimensions, face tests, and the full
//! subgroup-by-subgroup face verification with JSON reports.
//!
//! Exit codes: 0 success, 1 the two face criteria disagreed somewhere,
//! 2 malformed input, 3 a safety cap was exceeded.

mod groupspec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use permpoly::face::{
    face_subgroups, is_face_combinatorial, is_face_geometric, stabilizer_certificate,
    verify_theorem, FaceCertificate,
};
use permpoly::polytope::{affine_dimension, barycenter_formula, barycenter_oracle};
use permpoly::{PermGroup, RationalMatrix, SetPartition, TheoremReport};

use groupspec::{parse_generators, parse_group};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] permpoly::Error),
    #[error("{0}")]
    Spec(String),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(e) if e.is_cap_exceeded() => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }
}

#[derive(Parser)]
#[command(name = "permpoly", version, about = "Exact computations on permutation polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Groups are named families (`S4`, `A4`, `C6`, `D5`) or explicit
/// `<degree>:<generators>` lists in cycle notation.
#[derive(Subcommand)]
enum Command {
    /// Print the orbit partition of a group
    Orbits { group: String },
    /// List the elements preserving every part of a partition setwise
    Stab {
        group: String,
        /// Partition in "1,2|3,4" syntax, 1-indexed
        #[arg(long)]
        partition: String,
    },
    /// Print the barycenter of the group's polytope
    Barycenter {
        group: String,
        /// Average the vertices directly instead of using the orbit formula
        #[arg(long)]
        oracle: bool,
    },
    /// Print the affine dimension of the group's polytope
    Dim { group: String },
    /// Decide whether a subgroup's polytope is a face of the group's
    FaceTest {
        group: String,
        /// Generators of the subgroup, e.g. "(1 2),(3 4)"
        #[arg(long)]
        subgroup: String,
        /// Which criterion to run
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// List every subgroup whose polytope is a face, with orbit partitions
    FaceSubgroups { group: String },
    /// Run both face criteria on every subgroup and report agreement
    VerifyTheorem {
        group: String,
        /// Also write the full report as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Enumerate all subgroups with their orders
    Subgroups { group: String },
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Method {
    /// Compare the subgroup against its orbit-partition stabilizer
    Comb,
    /// Solve the separating-functional linear program
    Lp,
    /// Run both and report whether they agree
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Orbits { group } => {
            let g = parse_group(&group)?;
            println!("{}", g.orbit_partition());
        }
        Command::Stab { group, partition } => {
            let g = parse_group(&group)?;
            let partition = SetPartition::parse(&partition, g.degree())?;
            for element in g.partition_stabilizer(&partition)?.elements() {
                println!("{element}");
            }
        }
        Command::Barycenter { group, oracle } => {
            let g = parse_group(&group)?;
            let barycenter = if oracle {
                barycenter_oracle(&g)
            } else {
                barycenter_formula(&g)
            };
            print_matrix(&barycenter);
        }
        Command::Dim { group } => {
            let g = parse_group(&group)?;
            println!("{}", affine_dimension(&g));
        }
        Command::FaceTest {
            group,
            subgroup,
            method,
        } => {
            let g = parse_group(&group)?;
            let h = PermGroup::from_generators(g.degree(), parse_generators(&subgroup, g.degree())?)?;
            return face_test(&h, &g, method);
        }
        Command::FaceSubgroups { group } => {
            let g = parse_group(&group)?;
            for h in face_subgroups(&g)? {
                println!("order {}: {}, orbits {}", h.order(), h, h.orbit_partition());
            }
        }
        Command::VerifyTheorem { group, json } => {
            let g = parse_group(&group)?;
            let mut report = verify_theorem(&g)?;
            report.group = group.trim().to_string();
            print_report(&report);
            if let Some(path) = json {
                let rendered =
                    serde_json::to_string_pretty(&report).expect("report serializes to JSON");
                std::fs::write(&path, rendered)?;
            }
            if !report.agreement {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Subgroups { group } => {
            let g = parse_group(&group)?;
            for h in g.subgroups()? {
                println!("order {}: {}", h.order(), h);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn face_test(h: &PermGroup, g: &PermGroup, method: Method) -> Result<ExitCode, CliError> {
    let combinatorial = match method {
        Method::Comb | Method::Both => Some(is_face_combinatorial(h, g)?),
        Method::Lp => None,
    };
    let geometric = match method {
        Method::Lp | Method::Both => Some(is_face_geometric(h, g)?),
        Method::Comb => None,
    };
    if let Some(verdict) = combinatorial {
        println!("combinatorial: {}", verdict_text(verdict));
    }
    if let Some((verdict, _)) = &geometric {
        println!("geometric: {}", verdict_text(*verdict));
    }
    let exit = match (combinatorial, &geometric) {
        (Some(c), Some((v, _))) => {
            let agree = c == *v;
            println!("agreement: {agree}");
            if agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        _ => ExitCode::SUCCESS,
    };
    match (geometric, combinatorial) {
        // The linear program hands back an explicit certificate.
        (Some((true, Some(certificate))), _) => print_certificate(&certificate),
        // The combinatorial route proves H is a partition stabilizer, whose
        // certificate is the part-indicator functional.
        (None, Some(true)) => {
            let certificate = stabilizer_certificate(g, &h.orbit_partition())?;
            print_certificate(&certificate);
        }
        _ => {}
    }
    Ok(exit)
}

fn verdict_text(face: bool) -> &'static str {
    if face {
        "face"
    } else {
        "not a face"
    }
}

fn print_certificate(certificate: &FaceCertificate) {
    println!("certificate level: {}", certificate.level);
    println!("certificate functional:");
    print_matrix(&certificate.functional);
}

fn print_matrix(matrix: &RationalMatrix) {
    for row in 0..matrix.size() {
        let entries: Vec<String> = (0..matrix.size())
            .map(|col| matrix.get(row, col).to_string())
            .collect();
        println!("{}", entries.join(" "));
    }
}

fn print_report(report: &TheoremReport) {
    println!("group: {}", report.group);
    println!("degree: {}", report.degree);
    println!("order: {}", report.order);
    println!("subgroups: {}", report.subgroup_count);
    println!("face subgroups: {}", report.face_subgroup_count);
    println!("agreement: {}", report.agreement);
    for record in &report.records {
        println!(
            "subgroup order {}: orbits {}, combinatorial {}, geometric {}",
            record.order,
            record.orbit_partition,
            yes_no(record.combinatorial),
            yes_no(record.geometric)
        );
    }
}

fn yes_no(value: bool) -> &'static str {
    if value {
        "yes"
    } else {
        "no"
    }
}
