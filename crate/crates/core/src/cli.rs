//! The `matpak` command-line calculator.
//!
//! ```text
//! matpak <op> <operand>... [op-args...] [--check] [--precision N|shortest]
//! ```
//!
//! An operand is an inline matrix string, `@path` to read one from a file,
//! or `-` to read one from standard input. Exit status: 0 success, 1 matrix
//! error (or unreadable file, or failed `--check`), 2 malformed matrix text,
//! 3 bad usage. Diagnostics are a single line on stderr prefixed by the
//! error kind.

use std::ffi::OsString;
use std::io::Read;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::codec::{self, ParseError, Precision};
use crate::error::MatError;
use crate::matrix::MatrixOf;
use crate::oracle::{self, Rational};
use crate::{ops, Matrix, RationalMatrix};

/// Absolute tolerance for `--check` comparisons against the exact oracle.
pub const CHECK_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(name = "matpak", version, about = "Dense matrix calculator over bracket-dash matrices like [[2 3 4]-[5 6 7]]")]
pub struct Command {
    #[command(subcommand)]
    pub op: Op,

    /// Recompute the result with exact rational arithmetic and fail if it deviates by more than 1e-9
    #[arg(long, global = true)]
    pub check: bool,

    /// Decimal places for printed numbers, or "shortest" for round-trip formatting
    #[arg(long, global = true, value_name = "N", value_parser = parse_precision)]
    pub precision: Option<Precision>,
}

#[derive(Debug, Subcommand)]
pub enum Op {
    /// Sum of two matrices
    Add { left: String, right: String },
    /// Difference of two matrices
    Sub { left: String, right: String },
    /// Product of two matrices
    Mul { left: String, right: String },
    /// Matrix raised to a positive integer power
    #[command(allow_negative_numbers = true)]
    Pow { matrix: String, exponent: i64 },
    /// Rows and columns swapped
    Transpose { matrix: String },
    /// Determinant
    Det { matrix: String },
    /// Inverse
    Inv { matrix: String },
    /// Adjoint (transposed cofactor matrix)
    Adj { matrix: String },
    /// Cofactor matrix
    Cof { matrix: String },
    /// Submatrix with ROW and COL deleted (0-based indices)
    #[command(allow_negative_numbers = true)]
    Minor { matrix: String, row: i64, col: i64 },
    /// Prints 1 if the matrix is square, 0 otherwise
    IsSquare { matrix: String },
    /// Prints 1 for the identity, 0 for other square matrices, 2 if not square
    IsIdentity { matrix: String },
    /// Validates a matrix and prints its shape as ROWSxCOLS
    Parse { matrix: String },
    /// Prints a matrix in canonical form
    Echo { matrix: String },
}

fn parse_precision(s: &str) -> Result<Precision, String> {
    if s == "shortest" {
        return Ok(Precision::Shortest);
    }
    s.parse::<usize>()
        .ok()
        .filter(|&p| p <= 64)
        .map(Precision::Places)
        .ok_or_else(|| format!("expected 0..=64 or \"shortest\", got '{s}'"))
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Mat(MatError),
    Parse { source: String, error: ParseError },
    Io(String),
    Usage(String),
    Check(String),
}

impl From<MatError> for Failure {
    fn from(e: MatError) -> Self {
        Failure::Mat(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Mat(_) | Failure::Io(_) | Failure::Check(_) => 1,
            Failure::Parse { .. } => 2,
            Failure::Usage(_) => 3,
        }
    }

    fn line(&self) -> String {
        match self {
            Failure::Mat(e) => format!("{}: {e}", e.kind()),
            Failure::Parse { source, error } => format!("{}: {error} in {source}", error.kind),
            Failure::Io(msg) => format!("Io: {msg}"),
            Failure::Usage(msg) => format!("Usage: {msg}"),
            Failure::Check(msg) => format!("CheckFailed: {msg}"),
        }
    }
}

/// Runs one command line (including the program name) against `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let command = match Command::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome {
                code: 0,
                stdout: e.to_string(),
                stderr: String::new(),
            };
        }
        Err(e) => return failed(&Failure::Usage(clap_summary(&e))),
    };
    match execute(&command, stdin) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(f) => failed(&f),
    }
}

fn failed(f: &Failure) -> Outcome {
    Outcome {
        code: f.code(),
        stdout: String::new(),
        stderr: format!("{}\n", f.line()),
    }
}

/// First meaningful line of a clap error, without its `error: ` prefix.
fn clap_summary(e: &clap::Error) -> String {
    let text = e.to_string();
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
    line.trim_start_matches("error: ").trim().to_string()
}

struct Loader<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
    position: usize,
}

impl Loader<'_> {
    fn load(&mut self, operand: &str) -> Result<Matrix, Failure> {
        self.position += 1;
        let (text, source) = if operand == "-" {
            if self.stdin_used {
                return Err(Failure::Usage("at most one operand may be read from stdin".into()));
            }
            self.stdin_used = true;
            let mut buf = String::new();
            self.stdin
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Io(format!("cannot read stdin: {e}")))?;
            (buf, "stdin".to_string())
        } else if let Some(path) = operand.strip_prefix('@') {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read '{path}': {e}")))?;
            (text, format!("file '{path}'"))
        } else {
            (operand.to_string(), format!("operand {}", self.position))
        };
        codec::parse(&text).map_err(|error| Failure::Parse { source, error })
    }
}

enum Value {
    Matrix(Matrix),
    Scalar(f64),
    Code(u8),
    Text(String),
}

fn check(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check(format!("{what} deviates from the exact result by more than {CHECK_TOLERANCE:e}")))
    }
}

fn check_matrix(float: &Matrix, exact: Result<RationalMatrix, MatError>, what: &str) -> Result<(), Failure> {
    match exact {
        Ok(exact) => check(oracle::compare(float, &exact, CHECK_TOLERANCE), what),
        Err(e) => Err(Failure::Check(format!("{what}: exact recomputation failed ({e})"))),
    }
}

fn index(op: &'static str, m: &Matrix, row: i64, col: i64) -> Result<(usize, usize), MatError> {
    let oob = || MatError::IndexOutOfBounds {
        op,
        row,
        col,
        rows: m.rows(),
        cols: m.cols(),
    };
    let row = usize::try_from(row).map_err(|_| oob())?;
    let col = usize::try_from(col).map_err(|_| oob())?;
    Ok((row, col))
}

fn execute(command: &Command, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut loader = Loader {
        stdin,
        stdin_used: false,
        position: 0,
    };
    let exact = |m: &Matrix| -> RationalMatrix { oracle::lift(m) };
    let verify = command.check;

    type Binary = fn(&Matrix, &Matrix) -> Result<Matrix, MatError>;
    type ExactBinary = fn(&RationalMatrix, &RationalMatrix) -> Result<RationalMatrix, MatError>;
    let binary = |loader: &mut Loader, l: &str, r: &str, f: Binary, g: ExactBinary, name: &str| {
        let (p, q) = (loader.load(l)?, loader.load(r)?);
        let out = f(&p, &q)?;
        if verify {
            check_matrix(&out, g(&exact(&p), &exact(&q)), name)?;
        }
        Ok::<_, Failure>(Value::Matrix(out))
    };

    let value = match &command.op {
        Op::Add { left, right } => binary(&mut loader, left, right, ops::add, ops::add, "sum")?,
        Op::Sub { left, right } => binary(&mut loader, left, right, ops::sub, ops::sub, "difference")?,
        Op::Mul { left, right } => binary(&mut loader, left, right, ops::mul, ops::mul, "product")?,
        Op::Pow { matrix, exponent } => {
            let m = loader.load(matrix)?;
            let out = ops::pow(&m, *exponent)?;
            if verify {
                check_matrix(&out, ops::pow(&exact(&m), *exponent), "power")?;
            }
            Value::Matrix(out)
        }
        Op::Transpose { matrix } => {
            let m = loader.load(matrix)?;
            let out = m.transpose();
            if verify {
                check_matrix(&out, Ok(exact(&m).transpose()), "transpose")?;
            }
            Value::Matrix(out)
        }
        Op::Det { matrix } => {
            let m = loader.load(matrix)?;
            let det = m.determinant()?;
            if verify {
                let exact_det: Rational = oracle::det_bareiss(&exact(&m))?;
                check(oracle::compare_scalar(det, &exact_det, CHECK_TOLERANCE), "determinant")?;
            }
            Value::Scalar(det)
        }
        Op::Inv { matrix } => {
            let m = loader.load(matrix)?;
            let out = m.inverse()?;
            if verify {
                check_matrix(&out, oracle::exact_inverse(&exact(&m)), "inverse")?;
            }
            Value::Matrix(out)
        }
        Op::Adj { matrix } => {
            let m = loader.load(matrix)?;
            let out = m.adjoint()?;
            if verify {
                check_matrix(&out, oracle::exact_adjugate(&exact(&m)), "adjoint")?;
            }
            Value::Matrix(out)
        }
        Op::Cof { matrix } => {
            let m = loader.load(matrix)?;
            let out = m.cofactor()?;
            if verify {
                let exact_cof = oracle::exact_adjugate(&exact(&m)).map(|a| a.transpose());
                check_matrix(&out, exact_cof, "cofactor")?;
            }
            Value::Matrix(out)
        }
        Op::Minor { matrix, row, col } => {
            let m = loader.load(matrix)?;
            let (r, c) = index("minor", &m, *row, *col)?;
            let out = m.minor(r, c)?;
            if verify {
                check_matrix(&out, exact(&m).minor(r, c), "minor")?;
            }
            Value::Matrix(out)
        }
        Op::IsSquare { matrix } => Value::Code(loader.load(matrix)?.is_square() as u8),
        Op::IsIdentity { matrix } => {
            let m = loader.load(matrix)?;
            let verdict = m.is_identity();
            if verify {
                check(exact(&m).is_identity() == verdict, "identity verdict")?;
            }
            Value::Code(verdict.code())
        }
        Op::Parse { matrix } => {
            let m = loader.load(matrix)?;
            Value::Text(format!("{}x{}", m.rows(), m.cols()))
        }
        Op::Echo { matrix } => {
            let m = loader.load(matrix)?;
            if verify {
                let back: Result<MatrixOf<f64>, _> = codec::parse(&codec::serialize(&m));
                let same = back.is_ok_and(|b| {
                    b.as_slice().iter().zip(m.as_slice()).all(|(x, y)| x.to_bits() == y.to_bits())
                });
                if !same {
                    return Err(Failure::Check("canonical form does not read back to the same matrix".into()));
                }
            }
            Value::Matrix(m)
        }
    };

    let precision = command.precision.unwrap_or_default();
    Ok(match value {
        Value::Matrix(m) => format!("{}\n", codec::serialize_with(&m, precision)),
        Value::Scalar(x) => format!("{}\n", codec::format_scalar(&x, precision)),
        Value::Code(c) => format!("{c}\n"),
        Value::Text(t) => format!("{t}\n"),
    })
}
