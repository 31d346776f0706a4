use std::path::{Path, PathBuf};

use thiserror::Error;

use lie_frattini_core::families::FamilySpec;
use lie_frattini_core::fields::{FieldKind, ScalarRepr};
use lie_frattini_core::liecore::{AlgebraJson, AnyDraft, AnyValidation};
use lie_frattini_core::{AnyAlgebra, FieldSpec, FiniteField, LieAlgebra};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] lie_frattini_core::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("malformed algebra JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("Jacobi identity fails on basis triple ({}, {}, {}), defect {defect}", triple.0, triple.1, triple.2)]
    Jacobi { triple: (usize, usize, usize), defect: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_cost_cap() => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Where one algebra comes from.
#[derive(Clone, Debug)]
pub enum Source {
    File(PathBuf),
    Family(FamilySpec),
    Json(String),
}

impl Source {
    /// `family:<spec>`, inline JSON starting with `{`, or a file path.
    pub fn parse(s: &str) -> CliResult<Source> {
        let t = s.trim_start();
        if t.starts_with('{') {
            Ok(Source::Json(s.to_string()))
        } else if let Some(spec) = s.strip_prefix("family:") {
            Ok(Source::Family(spec.parse()?))
        } else {
            Ok(Source::File(PathBuf::from(s)))
        }
    }
}

/// A loaded algebra plus remarks for stderr.
pub struct Loaded {
    pub algebra: AnyAlgebra,
    pub notes: Vec<String>,
}

pub fn parse_algebra_json(text: &str) -> CliResult<AlgebraJson> {
    serde_json::from_str(text).map_err(|e| CliError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

/// The raw table of a file or inline source, before any Jacobi check.
pub fn draft(source: &Source, field: Option<&FieldSpec>) -> CliResult<AnyDraft> {
    let json = match source {
        Source::File(p) => parse_algebra_json(&read(p)?)?,
        Source::Json(s) => parse_algebra_json(s)?,
        Source::Family(fam) => {
            let field = field.cloned().unwrap_or_else(FieldSpec::rationals);
            return Ok(match fam.instantiate(&field)? {
                AnyAlgebra::Rational(l) => AnyDraft::Rational(l.into_draft()),
                AnyAlgebra::Finite(l) => AnyDraft::Finite(l.into_draft()),
            });
        }
    };
    Ok(AnyDraft::from_json(&json)?)
}

fn defect_text(defect: &[ScalarRepr]) -> String {
    serde_json::to_string(defect).expect("scalars serialize")
}

/// Loads and Jacobi-checks an algebra, then moves it to `field` if given.
pub fn load(source: &Source, field: Option<&FieldSpec>) -> CliResult<Loaded> {
    let mut notes = Vec::new();
    if let Source::Family(fam) = source {
        let f = field.cloned().unwrap_or_else(FieldSpec::rationals);
        notes.extend(fam.notes(&f));
    }
    let algebra = match draft(source, field)?.validate() {
        AnyValidation::Valid(l) => l,
        AnyValidation::Violation { triple, defect } => {
            return Err(CliError::Jacobi {
                triple,
                defect: defect_text(&defect),
            })
        }
    };
    let algebra = match field {
        Some(target) => coerce(algebra, target, &mut notes)?,
        None => algebra,
    };
    Ok(Loaded { algebra, notes })
}

/// Reduces a rational table or extends a prime-field table to `target`.
pub fn coerce(l: AnyAlgebra, target: &FieldSpec, notes: &mut Vec<String>) -> CliResult<AnyAlgebra> {
    let source = l.field_spec();
    if &source == target {
        return Ok(l);
    }
    let mismatch = || {
        CliError::Usage(format!("cannot move an algebra over {source} to {target}"))
    };
    let extend = |l: LieAlgebra<FiniteField>| -> CliResult<AnyAlgebra> {
        if target.degree() == 1 {
            return Ok(AnyAlgebra::Finite(l));
        }
        Ok(AnyAlgebra::Finite(l.extend_scalars(&FiniteField::new(target)?)?))
    };
    match (l, target.kind()) {
        (_, FieldKind::Rationals) => Err(mismatch()),
        (AnyAlgebra::Rational(l), _) => {
            let p = target.characteristic();
            notes.push(format!("rational table reduced modulo {p}"));
            extend(l.reduce_mod_p(p)?)
        }
        (AnyAlgebra::Finite(l), FieldKind::ExtensionField)
            if source.degree() == 1 && source.characteristic() == target.characteristic() =>
        {
            extend(l)
        }
        _ => Err(mismatch()),
    }
}

/// The algebra over a finite field, or a usage error naming the command.
pub fn finite(l: AnyAlgebra, command: &str) -> CliResult<LieAlgebra<FiniteField>> {
    match l {
        AnyAlgebra::Finite(l) => Ok(l),
        AnyAlgebra::Rational(_) => Err(CliError::Usage(format!(
            "{command} needs a finite field; pass --field gfP to reduce a rational table"
        ))),
    }
}
