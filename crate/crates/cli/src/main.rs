//! Command-line frontend: realize a spectrum as a centrosymmetric matrix,
//! check a matrix against a spectrum, or replay the bundled fixtures.
//!
//! Exit codes: 0 on a matched realization or check, 2 on the structural
//! obstruction, 3 when no construction applies, 1 on input or verification
//! errors.

mod problem;

use std::fs;
use std::process::ExitCode;

use centro_core::{
    auto_realize, eigenvalues, fixtures, is_centrosymmetric, is_nonnegative, match_spectra,
    realize_4x4_diag_complex, realize_4x4_diag_real, realize_4x4_real, realize_nonneg_real,
    realize_partitioned, realize_positive, realize_real_centro, realize_suleimanova,
    verify_realization, DenseMatrix, DiagonalSpec, Error, MatchTolerance, Realization,
    SpectrumList,
};
use problem::{
    parse_spectrum_csv, CheckResult, FixtureMatrixOut, FixtureOut, MatrixFile, MatrixOut,
    ProblemFile, ReportOut, ResultFile, SpectrumEntry,
};

const USAGE: &str = "\
usage:
  centro realize (--in FILE | --spectrum CSV) [--method NAME] [--diagonal CSV]
                 [--tol REAL] [--out FILE]
  centro check --matrix FILE (--spectrum CSV | --in FILE) [--tol REAL] [--out FILE]
  centro fixtures (NAME | --fixtures NAME) [--tol REAL] [--out FILE]

methods: auto, real-centro, nonneg-real, positive, suleimanova, partitioned,
         4x4, 4x4-diag (fixtures: example1, example2)

Spectra are comma-separated complex values such as \"4,-2+2i,-2-2i\". Problem
files are JSON: {\"spectrum\": [...], \"method\": \"auto\", \"diagonal\": [...],
\"partition\": {...}, \"tolerance\": 1e-8}.";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    ExitCode::from(run(&args))
}

struct Flags {
    input: Option<String>,
    spectrum: Option<String>,
    method: Option<String>,
    diagonal: Option<String>,
    tol: Option<f64>,
    out: Option<String>,
    matrix: Option<String>,
    fixtures: Option<String>,
    positional: Vec<String>,
}

fn parse_flags(args: &[String]) -> Result<Flags, String> {
    let mut flags = Flags {
        input: None,
        spectrum: None,
        method: None,
        diagonal: None,
        tol: None,
        out: None,
        matrix: None,
        fixtures: None,
        positional: Vec::new(),
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut take = |name: &str| -> Result<String, String> {
            it.next()
                .cloned()
                .ok_or_else(|| format!("{name} needs a value"))
        };
        match arg.as_str() {
            "--in" => flags.input = Some(take("--in")?),
            "--spectrum" => flags.spectrum = Some(take("--spectrum")?),
            "--method" => flags.method = Some(take("--method")?),
            "--diagonal" => flags.diagonal = Some(take("--diagonal")?),
            "--tol" => {
                let raw = take("--tol")?;
                flags.tol = Some(
                    raw.parse()
                        .map_err(|_| format!("bad --tol value '{raw}'"))?,
                );
            }
            "--out" => flags.out = Some(take("--out")?),
            "--matrix" => flags.matrix = Some(take("--matrix")?),
            "--fixtures" => flags.fixtures = Some(take("--fixtures")?),
            other if other.starts_with("--") => return Err(format!("unknown flag {other}")),
            other => flags.positional.push(other.to_string()),
        }
    }
    Ok(flags)
}

fn run(args: &[String]) -> u8 {
    if args.is_empty() {
        eprintln!("{USAGE}");
        return 1;
    }
    // flag-only invocations dispatch on the flags themselves
    if args[0].starts_with("--") && args[0] != "--help" {
        let flags = match parse_flags(args) {
            Ok(f) => f,
            Err(msg) => {
                eprintln!("error: {msg}");
                return 1;
            }
        };
        return if flags.fixtures.is_some() {
            cmd_fixtures(&flags)
        } else if flags.matrix.is_some() {
            cmd_check(&flags)
        } else {
            cmd_realize(&flags)
        };
    }
    let command = args[0].as_str();
    let flags = match parse_flags(&args[1..]) {
        Ok(f) => f,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    match command {
        "realize" => cmd_realize(&flags),
        "check" => cmd_check(&flags),
        "fixtures" => cmd_fixtures(&flags),
        "--help" | "-h" | "help" => {
            println!("{USAGE}");
            0
        }
        other => {
            eprintln!("error: unknown command '{other}'\n{USAGE}");
            1
        }
    }
}

fn emit(out: &Option<String>, payload: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, payload).map_err(|e| format!("writing {path}: {e}")),
        None => {
            println!("{payload}");
            Ok(())
        }
    }
}

fn tolerance_from(tol: Option<f64>, file_tol: Option<f64>) -> MatchTolerance {
    match tol.or(file_tol) {
        Some(t) => MatchTolerance::absolute(t),
        None => MatchTolerance::default(),
    }
}

fn realization_exit(err: &Error) -> u8 {
    match err {
        Error::ObstructedList => {
            eprintln!(
                "error: Theorem: one real eigenvalue with an odd number of conjugate pairs \
                 cannot be the spectrum of a centrosymmetric nonnegative matrix"
            );
            2
        }
        Error::NoApplicableConstruction { .. } => 3,
        _ => 1,
    }
}

fn cmd_realize(flags: &Flags) -> u8 {
    let problem: ProblemFile = match (&flags.input, &flags.spectrum) {
        (Some(path), _) => {
            let text = match fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: reading {path}: {e}");
                    return 1;
                }
            };
            match serde_json::from_str(&text) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: parsing {path}: {e}");
                    return 1;
                }
            }
        }
        (None, Some(csv)) => match parse_spectrum_csv(csv) {
            Ok(values) => ProblemFile {
                spectrum: values
                    .into_iter()
                    .map(|v| SpectrumEntry::Pair([v.re, v.im]))
                    .collect(),
                method: flags.method.clone().unwrap_or_else(|| "auto".into()),
                diagonal: None,
                partition: None,
                tolerance: None,
            },
            Err(msg) => {
                eprintln!("error: {msg}");
                return 1;
            }
        },
        (None, None) => {
            eprintln!("error: realize needs --in FILE or --spectrum CSV");
            return 1;
        }
    };

    let values = match problem.spectrum_values() {
        Ok(v) => v,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    let list = match SpectrumList::new(&values) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };

    let method = flags
        .method
        .clone()
        .unwrap_or_else(|| problem.method.clone());
    let diagonal = match diagonal_from(flags, &problem) {
        Ok(d) => d,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };

    let realization = match dispatch(&method, &list, diagonal.as_ref(), &problem) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return realization_exit(&e);
        }
    };

    let tol = tolerance_from(flags.tol, problem.tolerance);
    let report = match verify_realization(&realization, &list, tol) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: verification failed: {e}");
            return 1;
        }
    };
    let result = ResultFile {
        matrix: MatrixOut::from_matrix(realization.matrix.matrix()),
        report: ReportOut::from_report(&report, realization.kind),
    };
    let payload = serde_json::to_string_pretty(&result).expect("serializable");
    if let Err(msg) = emit(&flags.out, &payload) {
        eprintln!("error: {msg}");
        return 1;
    }
    if report.accepted {
        0
    } else {
        eprintln!(
            "error: realization not accepted: max distance {:e}, residual {:e}, margin {:e}",
            report.spectrum.max_distance, report.centro_residual, report.nonneg_margin
        );
        1
    }
}

fn diagonal_from(flags: &Flags, problem: &ProblemFile) -> Result<Option<DiagonalSpec>, String> {
    let entries: Option<Vec<f64>> = match (&flags.diagonal, &problem.diagonal) {
        (Some(csv), _) => Some(
            csv.split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| format!("bad diagonal entry '{t}'"))
                })
                .collect::<Result<Vec<f64>, String>>()?,
        ),
        (None, Some(d)) => Some(d.clone()),
        (None, None) => None,
    };
    match entries {
        Some(e) => DiagonalSpec::new(e)
            .map(Some)
            .map_err(|err| err.to_string()),
        None => Ok(None),
    }
}

fn dispatch(
    method: &str,
    list: &SpectrumList,
    diagonal: Option<&DiagonalSpec>,
    problem: &ProblemFile,
) -> Result<Realization, Error> {
    match method {
        "auto" => auto_realize(list, diagonal),
        "real-centro" => realize_real_centro(list),
        "nonneg-real" => realize_nonneg_real(list),
        "positive" => realize_positive(list),
        "suleimanova" => realize_suleimanova(list),
        "4x4" => realize_4x4_real(list),
        "4x4-diag" => {
            let omega = diagonal.ok_or_else(|| {
                Error::InvalidDiagonal(
                    "method 4x4-diag needs --diagonal or a diagonal field".into(),
                )
            })?;
            if list.is_all_real() {
                realize_4x4_diag_real(list, omega)
            } else {
                realize_4x4_diag_complex(list, omega)
            }
        }
        "partitioned" => {
            let pf = problem
                .partition
                .as_ref()
                .ok_or_else(|| Error::ConditionViolation {
                    construction: "partitioned",
                    condition: "partition",
                    detail: "method partitioned needs a partition field".into(),
                })?;
            let (partition, realizers) =
                pf.to_partition().map_err(|msg| Error::ConditionViolation {
                    construction: "partitioned",
                    condition: "partition",
                    detail: msg,
                })?;
            realize_partitioned(list, &partition, &realizers)
        }
        other => Err(Error::NoApplicableConstruction {
            attempts: vec![format!("unknown method '{other}'")],
        }),
    }
}

fn cmd_check(flags: &Flags) -> u8 {
    let Some(matrix_path) = &flags.matrix else {
        eprintln!("error: check needs --matrix FILE");
        return 1;
    };
    let text = match fs::read_to_string(matrix_path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: reading {matrix_path}: {e}");
            return 1;
        }
    };
    let parsed: MatrixFile = match serde_json::from_str(&text) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: parsing {matrix_path}: {e}");
            return 1;
        }
    };
    let matrix = match parsed.to_matrix() {
        Ok(m) => m,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };

    let (values, file_tol) = match (&flags.spectrum, &flags.input) {
        (Some(csv), _) => match parse_spectrum_csv(csv) {
            Ok(v) => (v, None),
            Err(msg) => {
                eprintln!("error: {msg}");
                return 1;
            }
        },
        (None, Some(path)) => {
            let text = match fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: reading {path}: {e}");
                    return 1;
                }
            };
            let problem: ProblemFile = match serde_json::from_str(&text) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: parsing {path}: {e}");
                    return 1;
                }
            };
            match problem.spectrum_values() {
                Ok(v) => (v, problem.tolerance),
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return 1;
                }
            }
        }
        (None, None) => {
            eprintln!("error: check needs --spectrum CSV or --in FILE");
            return 1;
        }
    };
    let list = match SpectrumList::new(&values) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let tol = tolerance_from(flags.tol, file_tol);
    let check = match check_matrix(&matrix, &list, tol) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let payload = serde_json::to_string_pretty(&check).expect("serializable");
    if let Err(msg) = emit(&flags.out, &payload) {
        eprintln!("error: {msg}");
        return 1;
    }
    if check.matched {
        0
    } else {
        eprintln!(
            "error: matrix does not carry the spectrum: max distance {:e}",
            check.max_distance
        );
        1
    }
}

fn check_matrix(
    matrix: &DenseMatrix,
    list: &SpectrumList,
    tol: MatchTolerance,
) -> Result<CheckResult, Error> {
    let computed = eigenvalues(matrix)?;
    let spectrum = match_spectra(list, &computed, tol)?;
    Ok(CheckResult {
        matched: spectrum.matched,
        max_distance: spectrum.max_distance,
        centro_residual: is_centrosymmetric(matrix),
        nonneg_margin: is_nonnegative(matrix),
    })
}

fn cmd_fixtures(flags: &Flags) -> u8 {
    let name = match flags
        .fixtures
        .clone()
        .or_else(|| flags.positional.first().cloned())
    {
        Some(n) => n,
        None => {
            eprintln!(
                "error: fixtures needs a name: {}",
                fixtures::fixture_names().join(", ")
            );
            return 1;
        }
    };
    let fixture = match fixtures::fixture(&name) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let tol = tolerance_from(flags.tol, None);

    let mut reference = Vec::new();
    let mut all_matched = true;
    for fm in &fixture.matrices {
        let expect = match SpectrumList::new(&fm.spectrum) {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: fixture spectrum: {e}");
                return 1;
            }
        };
        let check = match check_matrix(&fm.matrix, &expect, tol) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        };
        all_matched &= check.matched;
        reference.push(FixtureMatrixOut {
            label: fm.label.to_string(),
            matrix: MatrixOut::from_matrix(&fm.matrix),
            check,
        });
    }

    let target = match SpectrumList::new(&fixture.spectrum) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let realization = match auto_realize(&target, None) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: pipeline realization failed: {e}");
            return realization_exit(&e);
        }
    };
    let report = match verify_realization(&realization, &target, tol) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    all_matched &= report.accepted;

    let out = FixtureOut {
        name: fixture.name.to_string(),
        reference,
        pipeline: ResultFile {
            matrix: MatrixOut::from_matrix(realization.matrix.matrix()),
            report: ReportOut::from_report(&report, realization.kind),
        },
    };
    let payload = serde_json::to_string_pretty(&out).expect("serializable");
    if let Err(msg) = emit(&flags.out, &payload) {
        eprintln!("error: {msg}");
        return 1;
    }
    if all_matched {
        0
    } else {
        eprintln!("error: a fixture check failed");
        1
    }
}
