//! Seed Stokes matrices: built-in chains, Thom–Sebastiani products and JSON files.
//!
//! Seed files live in `data/` and are embedded at compile time; a directory named
//! by `STOKESLAB_SEED_DIR` (or an explicit file) takes precedence.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{
    is_connected, is_positive_definite, is_positive_semidefinite, is_quasiunipotent,
    monodromy_from_stokes, radical_rank, symmetrized_form, StokesMatrix,
};

use super::SingularityClass;

pub const SEED_DIR_ENV: &str = "STOKESLAB_SEED_DIR";

/// On-disk format of a seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedFile {
    pub class: String,
    pub mu: usize,
    /// Strict upper triangle, row by row.
    pub upper: Vec<Vec<i64>>,
    #[serde(default)]
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "path")]
pub enum Provenance {
    /// Generated in code (the A_μ chain).
    Builtin,
    /// Kronecker product of chains.
    TensorDerived,
    /// Seed file shipped with the library.
    Embedded,
    /// Seed file read at run time.
    ExternalFile(PathBuf),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Builtin => write!(f, "builtin"),
            Provenance::TensorDerived => write!(f, "tensor-derived"),
            Provenance::Embedded => write!(f, "embedded"),
            Provenance::ExternalFile(p) => write!(f, "file {}", p.display()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeedRecord {
    pub class: SingularityClass,
    pub stokes: StokesMatrix,
    pub provenance: Provenance,
    pub source: String,
}

fn embedded(class: SingularityClass) -> Option<&'static str> {
    Some(match class {
        SingularityClass::D(5) => include_str!("../../data/d5.json"),
        SingularityClass::D(6) => include_str!("../../data/d6.json"),
        SingularityClass::D(7) => include_str!("../../data/d7.json"),
        SingularityClass::D(8) => include_str!("../../data/d8.json"),
        SingularityClass::E6 => include_str!("../../data/e6.json"),
        SingularityClass::E7 => include_str!("../../data/e7.json"),
        SingularityClass::E8 => include_str!("../../data/e8.json"),
        SingularityClass::Et6 => include_str!("../../data/et6.json"),
        SingularityClass::Et7 => include_str!("../../data/et7.json"),
        SingularityClass::Et8 => include_str!("../../data/et8.json"),
        _ => return None,
    })
}

fn file_name(class: SingularityClass) -> String {
    format!("{}.json", class.to_string().to_ascii_lowercase())
}

/// Kronecker product of Stokes matrices (lexicographic order on index pairs).
pub fn tensor_stokes(factors: &[StokesMatrix]) -> Result<StokesMatrix> {
    let (first, rest) = factors.split_first().ok_or_else(|| Error::Invalid("no tensor factors".into()))?;
    let m = rest.iter().fold(first.matrix().clone(), |acc, s| acc.kron(s.matrix()));
    StokesMatrix::new(m)
}

/// Parses and validates a seed file's contents; `expected` must match the file's class if given.
pub fn parse_seed(text: &str, expected: Option<SingularityClass>, provenance: Provenance) -> Result<SeedRecord> {
    let file: SeedFile = serde_json::from_str(text)?;
    let class: SingularityClass = file.class.parse()?;
    if let Some(e) = expected {
        if e != class {
            return Err(Error::Invalid(format!("seed file is for {class}, expected {e}")));
        }
    }
    if file.mu != class.mu() {
        return Err(Error::Invalid(format!("seed for {class} declares mu = {}, expected {}", file.mu, class.mu())));
    }
    let stokes = StokesMatrix::from_upper(file.mu, &file.upper)?;
    validate_seed(class, &stokes)?;
    Ok(SeedRecord { class, stokes, provenance, source: file.source })
}

/// Reads a seed file from disk.
pub fn load_seed_file(path: &Path, expected: Option<SingularityClass>) -> Result<SeedRecord> {
    let text = std::fs::read_to_string(path)?;
    parse_seed(&text, expected, Provenance::ExternalFile(path.to_path_buf()))
}

/// Seed from `dir/<class>.json` if present, otherwise from built-in sources.
pub fn seed_stokes_from_dir(class: SingularityClass, dir: Option<&Path>) -> Result<SeedRecord> {
    if let Some(dir) = dir {
        let path = dir.join(file_name(class));
        if path.is_file() {
            return load_seed_file(&path, Some(class));
        }
    }
    match class {
        SingularityClass::A(mu) => Ok(SeedRecord {
            class,
            stokes: StokesMatrix::chain(mu),
            provenance: Provenance::Builtin,
            source: format!("A{mu} chain, S_i,i+1 = -1"),
        }),
        SingularityClass::D(4) => Ok(SeedRecord {
            class,
            stokes: tensor_stokes(&[StokesMatrix::chain(2), StokesMatrix::chain(2)])?,
            provenance: Provenance::TensorDerived,
            source: "Thom-Sebastiani product A2 (x) A2, member x^3+y^3".into(),
        }),
        _ => match embedded(class) {
            Some(text) => parse_seed(text, Some(class), Provenance::Embedded),
            None => Err(Error::Unseeded(
                class.to_string(),
                format!("no seed available; provide {} via --seed-file or ${SEED_DIR_ENV}", file_name(class)),
            )),
        },
    }
}

/// Seed for `class`, honouring `STOKESLAB_SEED_DIR`.
pub fn seed_stokes(class: SingularityClass) -> Result<SeedRecord> {
    let dir = std::env::var_os(SEED_DIR_ENV).map(PathBuf::from);
    seed_stokes_from_dir(class, dir.as_deref())
}

/// Checks shape, entry bounds, connectivity, quasi-unipotence of the monodromy
/// and the signature of the intersection form expected for `class`.
pub fn validate_seed(class: SingularityClass, s: &StokesMatrix) -> Result<()> {
    let fail = |msg: String| Err(Error::Invalid(format!("seed for {class}: {msg}")));
    if s.mu() != class.mu() {
        return fail(format!("size {} but mu = {}", s.mu(), class.mu()));
    }
    let bound = if class.is_elliptic() { 2 } else { 1 };
    if let Some(v) = s.upper().iter().flatten().find(|v| v.abs() > bound) {
        return fail(format!("entry {v} exceeds {bound} in absolute value"));
    }
    if !is_connected(s) {
        return fail("Coxeter-Dynkin diagram is disconnected".into());
    }
    if !is_quasiunipotent(&monodromy_from_stokes(s)) {
        return fail("monodromy is not quasi-unipotent".into());
    }
    let form = symmetrized_form(s);
    if class.is_elliptic() {
        let r = radical_rank(&form);
        if r != 2 || !is_positive_semidefinite(&form) {
            return fail(format!("intersection form should be semidefinite with radical rank 2 (radical rank {r})"));
        }
    } else if !is_positive_definite(&form) {
        return fail("intersection form is not positive definite".into());
    }
    Ok(())
}
