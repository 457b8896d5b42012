//! `cobasis`: exact change-of-basis matrices from the command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 bad arguments or basis
//! token, 3 parameter outside its valid range, 4 pole, 5 malformed
//! coefficient list.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cobasis::export::{coords_to_string, parse_coeffs, render};
use cobasis::oracle::{all_pairs, sweep_bases, verify_pair};
use cobasis::{connection_matrix_with, fixtures, BasisSpec, Error, MatrixFormat, PolyCoords, Validation};
use rayon::prelude::*;

mod pairs;

#[derive(Parser)]
#[command(
    name = "cobasis",
    version,
    about = "Exact connection coefficients between polynomial bases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the change-of-basis matrix from one basis to another.
    Matrix {
        #[arg(long)]
        from: BasisSpec,
        #[arg(long)]
        to: BasisSpec,
        /// Index of the highest basis element; the matrix is (degree+1) square.
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value = "json")]
        format: MatrixFormat,
        /// Accept parameters outside the orthogonality range.
        #[arg(long)]
        allow_invalid_params: bool,
    },
    /// Re-express a coefficient vector (ascending degree) in another basis.
    Convert {
        #[arg(long)]
        from: BasisSpec,
        #[arg(long)]
        to: BasisSpec,
        /// Comma-separated rationals, constant term first, e.g. "0,1/2,-3".
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        allow_invalid_params: bool,
    },
    /// Compare the closed forms with the recurrence oracle, one JSON line per pair.
    Verify {
        #[arg(long)]
        max_degree: usize,
        /// "all", or a list such as "mono>T,jacobi:2,7>jacobi:1,8".
        #[arg(long, default_value = "all")]
        pairs: String,
        /// "preset", or ';'-separated parameterized bases replacing the preset ones.
        #[arg(long, default_value = "preset")]
        params: String,
    },
    /// Replay the worked examples and compare against their known values.
    Repro {
        /// Run a single fixture by name.
        #[arg(long)]
        only: Option<String>,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_) => 2,
        Error::InvalidParameter { .. } => 3,
        Error::Pole(_) => 4,
        _ => 1,
    }
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_code(err))
}

fn validation(allow_invalid: bool) -> Validation {
    if allow_invalid {
        Validation::AllowInvalid
    } else {
        Validation::Strict
    }
}

fn cmd_matrix(from: &BasisSpec, to: &BasisSpec, degree: usize, format: MatrixFormat, allow: bool) -> ExitCode {
    match connection_matrix_with(from, to, degree, validation(allow)) {
        Ok(m) => {
            let text = render(&m, format);
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn cmd_convert(from: &BasisSpec, to: &BasisSpec, coeffs: &str, allow: bool) -> ExitCode {
    let coeffs = match parse_coeffs(coeffs) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: malformed coefficient list: {e}");
            return ExitCode::from(5);
        }
    };
    let coords = PolyCoords::new(from.clone(), coeffs);
    let result = connection_matrix_with(from, to, coords.degree(), validation(allow)).and_then(|m| m.apply(&coords));
    match result {
        Ok(out) => {
            println!("{}", coords_to_string(&out));
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn verify_bases(params: &str) -> Result<Vec<BasisSpec>, Error> {
    if params == "preset" {
        return Ok(sweep_bases());
    }
    let mut bases = BasisSpec::parameter_free().to_vec();
    for token in params.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let spec: BasisSpec = token.parse()?;
        if spec.params().is_empty() {
            return Err(Error::Parse(format!("--params entry '{token}' has no parameters")));
        }
        bases.push(spec);
    }
    Ok(bases)
}

fn cmd_verify(max_degree: usize, pairs: &str, params: &str) -> ExitCode {
    let selected = if pairs == "all" {
        verify_bases(params).map(|bases| all_pairs(&bases))
    } else {
        pairs::parse_pairs(pairs)
    };
    let selected = match selected {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    for (a, b) in &selected {
        for basis in [a, b] {
            if let Err(e) = basis.validate(Validation::Strict) {
                return fail(&e);
            }
        }
    }

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut all_equal = true;
    // Chunks keep output streaming while pairs within a chunk run in parallel.
    for chunk in selected.chunks(32) {
        let reports: Vec<_> = chunk.par_iter().map(|(a, b)| verify_pair(a, b, max_degree)).collect();
        for report in reports {
            all_equal &= report.equal;
            if writeln!(out, "{}", report.to_json_line()).is_err() {
                return ExitCode::from(1);
            }
        }
        let _ = out.flush();
    }
    if all_equal {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_repro(only: Option<&str>) -> ExitCode {
    let selected = match only {
        None => fixtures::all(),
        Some(name) => match fixtures::find(name) {
            Some(f) => vec![f],
            None => {
                let names: Vec<_> = fixtures::all().iter().map(|f| f.name).collect();
                eprintln!("error: unknown fixture '{name}' (expected one of {})", names.join(", "));
                return ExitCode::from(2);
            }
        },
    };
    let total = selected.len();
    let mut exact = 0;
    for fixture in &selected {
        println!("[{}] {}", fixture.name, fixture.title);
        match fixture.run() {
            Ok(checks) => {
                let mut ok = true;
                for c in &checks {
                    let mark = if c.passed() { "ok" } else { "MISMATCH" };
                    println!("  {}: {mark}", c.label);
                    println!("    expected: {}", c.expected.join(", "));
                    println!("    computed: {}", c.computed.join(", "));
                    ok &= c.passed();
                }
                if ok {
                    exact += 1;
                }
            }
            Err(e) => println!("  error: {e}"),
        }
    }
    println!("{exact}/{total} exact matches");
    if exact == total {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match cli.command {
        Command::Matrix {
            from,
            to,
            degree,
            format,
            allow_invalid_params,
        } => cmd_matrix(&from, &to, degree, format, allow_invalid_params),
        Command::Convert {
            from,
            to,
            coeffs,
            allow_invalid_params,
        } => cmd_convert(&from, &to, &coeffs, allow_invalid_params),
        Command::Verify {
            max_degree,
            pairs,
            params,
        } => cmd_verify(max_degree, &pairs, &params),
        Command::Repro { only } => cmd_repro(only.as_deref()),
    }
}
