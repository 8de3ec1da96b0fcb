use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::bail;
use hook_specht::Params;
use serde::Serialize;

/// Largest `n` accepted unless `--max-n` raises it.
pub const DEFAULT_MAX_N: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" | "Q" | "q" => Ok(FieldSpec::Rational),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .ok_or_else(|| format!("expected `rational` or `fp:<p>`, got `{s}`"))?;
                p.parse().map(FieldSpec::Prime).map_err(|_| format!("bad prime `{p}`"))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

/// A multicharge as typed on the command line. Entries may be negative;
/// they are reduced mod `e` when the parameters are built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Kappa(pub i64, pub i64);

impl FromStr for Kappa {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `k1,k2`, got `{s}`"))?;
        let parse = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("bad residue `{x}`"));
        Ok(Kappa(parse(a)?, parse(b)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// An inclusive range written `a..b`, `a-b` or a single number.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parts = s.split_once("..").or_else(|| s.split_once('-'));
    let parse = |x: &str| x.trim().trim_start_matches('=').parse::<usize>().map_err(|_| format!("bad bound `{x}`"));
    let (lo, hi) = match parts {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let k = parse(s)?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok((lo, hi))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KappaSelector {
    All,
    List(Vec<Kappa>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MSelector {
    All,
    List(Vec<usize>),
}

/// Everything that determines a run. Serialised into the report header.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub e_list: Vec<u32>,
    pub kappa_list: KappaSelector,
    pub n_range: (usize, usize),
    pub m_selector: MSelector,
    pub field: FieldSpec,
    pub seed: u64,
    #[serde(skip)]
    pub output: Option<PathBuf>,
    pub format: Format,
    #[serde(skip)]
    pub cache: Option<PathBuf>,
    pub max_n: usize,
}

impl RunConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.e_list.is_empty() {
            bail!("no values of e given");
        }
        if let Some(e) = self.e_list.iter().find(|&&e| e < 3) {
            bail!("e must be at least 3, got {e}");
        }
        if self.n_range.0 == 0 {
            bail!("n must be positive");
        }
        if self.n_range.1 > self.max_n {
            bail!("n = {} exceeds the limit {}; pass --max-n to raise it", self.n_range.1, self.max_n);
        }
        if let FieldSpec::Prime(p) = self.field {
            if hook_specht::PrimeField::new(p).is_none() {
                bail!("fp:{p} is not a prime field");
            }
        }
        Ok(())
    }

    /// The cartesian grid, in a fixed order.
    pub fn grid(&self) -> anyhow::Result<Vec<Params>> {
        let mut out = Vec::new();
        for &e in &self.e_list {
            let kappas = match &self.kappa_list {
                KappaSelector::All => {
                    let e = e as i64;
                    (0..e).flat_map(|a| (0..e).map(move |b| Kappa(a, b))).collect()
                }
                KappaSelector::List(v) => v.clone(),
            };
            for k in kappas {
                for n in self.n_range.0..=self.n_range.1 {
                    let ms: Vec<usize> = match &self.m_selector {
                        MSelector::All => (0..=n).collect(),
                        MSelector::List(v) => v.iter().copied().filter(|&m| m <= n).collect(),
                    };
                    for m in ms {
                        out.push(Params::new(e, (k.0, k.1), n, m)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fields() {
        assert_eq!("rational".parse(), Ok(FieldSpec::Rational));
        assert_eq!("fp:5".parse(), Ok(FieldSpec::Prime(5)));
        assert!("fp:x".parse::<FieldSpec>().is_err());
        assert!("real".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn parses_kappa_and_ranges() {
        assert_eq!("-1,2".parse(), Ok(Kappa(-1, 2)));
        assert!("1".parse::<Kappa>().is_err());
        assert_eq!(parse_range("2..8"), Ok((2, 8)));
        assert_eq!(parse_range("2..=8"), Ok((2, 8)));
        assert_eq!(parse_range("3-5"), Ok((3, 5)));
        assert_eq!(parse_range("6"), Ok((6, 6)));
        assert!(parse_range("8..2").is_err());
    }
}
