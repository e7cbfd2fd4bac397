//! Loading algebras and representations from JSON files.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use npb_core::actions::Representation;
use npb_core::algebra::{algebra_from_json, field_spec_from_json, BiAlgebra};
use npb_core::exactlin::{Field, FieldSpec};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// A parsed JSON file with its raw bytes.
pub struct Source {
    pub path: PathBuf,
    pub bytes: Vec<u8>,
    pub value: Value,
}

impl Source {
    pub fn read(path: &Path) -> Result<Self> {
        let bytes = std::fs::read(path).with_context(|| format!("{}: cannot read", path.display()))?;
        let value = serde_json::from_slice(&bytes)
            .map_err(|e| anyhow!("{}:{}:{}: {e}", path.display(), e.line(), e.column()))?;
        Ok(Source { path: path.to_path_buf(), bytes, value })
    }

    fn located(&self, e: impl std::fmt::Display) -> anyhow::Error {
        anyhow!("{}: {e}", self.path.display())
    }

    /// The field declared by the file, checked against `--field` when given.
    pub fn field_spec(&self, requested: Option<FieldSpec>) -> Result<FieldSpec> {
        let v = self.value.get("field").ok_or_else(|| self.located("missing `field`"))?;
        let spec = field_spec_from_json(v).map_err(|e| self.located(e))?;
        match requested {
            Some(r) if r != spec => bail!("{}: file is over {spec} but --field is {r}", self.path.display()),
            _ => Ok(spec),
        }
    }

    pub fn algebra<F: Field>(&self, field: &F) -> Result<BiAlgebra<F>> {
        algebra_from_json(field, &self.value).map_err(|e| self.located(e))
    }

    pub fn representation<F: Field>(&self, p: &BiAlgebra<F>) -> Result<Representation<F>> {
        Representation::from_json(p, &self.value).map_err(|e| self.located(e))
    }
}

/// Hex SHA-256 over the concatenated inputs.
pub fn digest(sources: &[&Source]) -> String {
    let mut h = Sha256::new();
    for s in sources {
        h.update(&s.bytes);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Dimension guard from `NPB_GUARD_DIM`, or `default`.
pub fn guard_dim(default: usize) -> Result<usize> {
    match std::env::var("NPB_GUARD_DIM") {
        Ok(s) => s.trim().parse().map_err(|_| anyhow!("NPB_GUARD_DIM must be a non-negative integer, got `{s}`")),
        Err(_) => Ok(default),
    }
}
