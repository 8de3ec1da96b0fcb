//! Content hashes of generator matrices, keyed by (e, κ, n, m, field).
//!
//! Only fingerprints are stored. A stored fingerprint that disagrees with a
//! freshly built matrix is reported as a failing record.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use hook_specht::linalg::SparseMatrix;
use hook_specht::{Field, HookSpechtModule, Params};
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::report::{ParamsEcho, ReportRecord, Status};

pub fn fingerprint<F: Field>(field: &F, m: &SparseMatrix<F::Elem>) -> String {
    let mut h = Sha256::new();
    h.update(format!("{}x{}\n", m.rows(), m.cols()));
    for (c, col) in m.columns().iter().enumerate() {
        for (r, x) in col.entries() {
            h.update(format!("{r} {c} {}\n", field.format(x)));
        }
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Fingerprints of every ψ, y and idempotent matrix of a module.
pub fn module_fingerprints<F: Field>(module: &HookSpechtModule<F>) -> BTreeMap<String, String> {
    let field = module.field();
    module
        .matrices()
        .labelled()
        .into_iter()
        .map(|(g, m)| (g.to_string(), fingerprint(field, m)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Entry {
    schema: u32,
    e: u32,
    kappa: [u32; 2],
    n: usize,
    m: usize,
    field: String,
    fingerprints: BTreeMap<String, String>,
}

#[derive(Debug, Default)]
pub struct CacheStats {
    pub hits: usize,
    pub misses: usize,
    pub mismatches: usize,
}

pub struct Cache {
    dir: PathBuf,
    pub stats: CacheStats,
}

impl Cache {
    pub fn open(dir: &Path) -> anyhow::Result<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf(), stats: CacheStats::default() })
    }

    fn path(&self, p: &Params, field: &str) -> PathBuf {
        let field = field.replace(':', "");
        self.dir.join(format!("e{}_k{}-{}_n{}_m{}_{field}.json", p.e, p.kappa[0], p.kappa[1], p.n, p.m))
    }

    /// Compares against the stored entry, or stores it on a miss. Returns a
    /// failing record when they disagree.
    pub fn check(
        &mut self,
        p: &Params,
        field: &str,
        fingerprints: BTreeMap<String, String>,
    ) -> anyhow::Result<Option<ReportRecord>> {
        let path = self.path(p, field);
        let fresh = Entry {
            schema: crate::report::SCHEMA,
            e: p.e,
            kappa: p.kappa,
            n: p.n,
            m: p.m,
            field: field.to_string(),
            fingerprints,
        };
        let stored = std::fs::read(&path).ok().and_then(|b| serde_json::from_slice::<Entry>(&b).ok());
        match stored {
            Some(old) if old == fresh => {
                self.stats.hits += 1;
                Ok(None)
            }
            Some(old) => {
                self.stats.mismatches += 1;
                let changed: Vec<&String> = fresh
                    .fingerprints
                    .iter()
                    .filter(|(k, v)| old.fingerprints.get(*k) != Some(v))
                    .map(|(k, _)| k)
                    .collect();
                Ok(Some(ReportRecord {
                    params: ParamsEcho::new(p, field, true),
                    check: "cache-fingerprint".into(),
                    status: Status::Fail,
                    details: json!({ "path": path.display().to_string(), "changed": changed }),
                    timing_ms: 0.0,
                }))
            }
            None => {
                self.stats.misses += 1;
                std::fs::write(&path, serde_json::to_vec_pretty(&fresh)?)?;
                Ok(None)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hook_specht::{PrimeField, Rationals};

    #[test]
    fn fingerprints_are_field_sensitive_and_stable() {
        let p = Params::new(3, (0, 1), 4, 2).unwrap();
        let a = module_fingerprints(&HookSpechtModule::new(Rationals, p));
        let b = module_fingerprints(&HookSpechtModule::new(Rationals, p));
        let c = module_fingerprints(&HookSpechtModule::new(PrimeField::new(2).unwrap(), p));
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.contains_key("psi1") && a.contains_key("y4"));
    }
}
