//! Groups named on the command line or read from a JSON generator file.

use std::path::Path;

use folsym_core::constructors::*;
use folsym_core::group::{FiniteMatrixGroup, ProjectiveGroup};
use folsym_core::{Cyclo, Matrix};
use serde::{Deserialize, Serialize};

use crate::parse::parse_cyclo;
use crate::{CliError, Config};

pub const GROUP_NAMES: &[&str] = &[
    "trivial",
    "hessian-cover",
    "hessian",
    "E",
    "F",
    "icosahedral",
    "klein",
    "valentiner",
    "binary-octahedral-ext",
    "binary-icosahedral-ext",
    "jouanolou:<d>",
    "fermat:<d>",
];

/// `{ "dimension": 3, "generators": [[[cyclo, …], …], …] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub dimension: usize,
    pub generators: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub label: String,
    pub generators: Vec<Matrix<Cyclo>>,
    /// Only meaningful up to scalars.
    pub projective: bool,
}

fn degree_suffix(name: &str, prefix: &str) -> Result<Option<u32>, CliError> {
    let Some(rest) = name.strip_prefix(prefix) else { return Ok(None) };
    match rest.parse::<u32>() {
        Ok(d) if d >= 2 => Ok(Some(d)),
        _ => Err(CliError::Usage(format!("{}<d> needs an integer degree d ≥ 2", prefix))),
    }
}

pub fn resolve(name: &str) -> Result<GroupSpec, CliError> {
    let linear = |g: Vec<Matrix<Cyclo>>| (g, false);
    let (generators, projective) = match name {
        "trivial" => linear(vec![Matrix::identity(3)]),
        "hessian-cover" => linear(hessian_cover_generators()),
        "hessian" => (vec![hessian_t(), hessian_u(), hessian_s(), hessian_v()], true),
        "E" => (vec![hessian_t(), hessian_s(), hessian_v()], true),
        "F" => (vec![hessian_t(), hessian_s(), hessian_v(), hessian_uvu()], true),
        "icosahedral" => linear(icosahedral_generators()),
        "klein" => linear(klein_generators()),
        "valentiner" => linear(valentiner_generators()),
        "binary-octahedral-ext" => linear(binary_octahedral_ext_generators()),
        "binary-icosahedral-ext" => linear(binary_icosahedral_ext_generators()),
        _ => {
            if let Some(d) = degree_suffix(name, "jouanolou:")? {
                linear(jouanolou_generators(d))
            } else if let Some(d) = degree_suffix(name, "fermat:")? {
                linear(fermat_generators(d))
            } else if Path::new(name).is_file() {
                return read_group_file(Path::new(name));
            } else {
                return Err(CliError::Usage(format!(
                    "unknown group '{}'; expected a file or one of {}",
                    name,
                    GROUP_NAMES.join(", ")
                )));
            }
        }
    };
    Ok(GroupSpec { label: name.to_string(), generators, projective })
}

pub fn read_group_file(path: &Path) -> Result<GroupSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    let file: GroupFile =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {}", path.display(), e)))?;
    let mut generators = Vec::new();
    for (g, rows) in file.generators.iter().enumerate() {
        if rows.len() != file.dimension || rows.iter().any(|r| r.len() != file.dimension) {
            return Err(CliError::Usage(format!("generator {} is not {0}×{0}", file.dimension)));
        }
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|c| parse_cyclo(c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Usage(format!("{}: generator {}: {}", path.display(), g, e)))?;
        generators.push(Matrix::from_rows(parsed));
    }
    Ok(GroupSpec { label: path.display().to_string(), generators, projective: false })
}

impl GroupSpec {
    pub fn linear(&self, config: &Config) -> Result<FiniteMatrixGroup, CliError> {
        if self.projective {
            return Err(CliError::Usage(format!("group '{}' is only defined up to scalars", self.label)));
        }
        Ok(FiniteMatrixGroup::closure(&self.generators, config.max_order, config.conductor_cap)?)
    }

    pub fn projective(&self, config: &Config) -> Result<ProjectiveGroup, CliError> {
        Ok(ProjectiveGroup::closure(&self.generators, config.max_order, config.conductor_cap)?)
    }
}
