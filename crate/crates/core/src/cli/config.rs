//! Session configuration: dimension, default form, product algorithm and output mode.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bform::{antisymmetrize_named, BilinearForm};
use crate::cli::parser::parse;
use crate::dotted::DottedContext;
use crate::error::AlgebraError;
use crate::multivector::check_dim;
use crate::product::ProductAlgorithm;
use crate::scalar::{is_identifier, Scalar};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("invalid form spec `{0}`")]
    FormSpec(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("bad form file {path}: {msg}")]
    FormFile { path: PathBuf, msg: String },
    #[error("bad config file {path}: {msg}")]
    ConfigFile { path: PathBuf, msg: String },
    #[error("--dim {given} conflicts with the form's dimension {form}")]
    DimConflict { given: usize, form: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// How the default form is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormSpec {
    /// Fully symbolic `name[i,j]`.
    Named(String),
    Signature { p: usize, q: usize, r: usize },
    /// `g + F` with `g` symmetric and `F` antisymmetric, both symbolic.
    Split { sym: String, antisym: String },
    File(PathBuf),
}

impl Default for FormSpec {
    fn default() -> Self {
        FormSpec::Named("B".into())
    }
}

impl FromStr for FormSpec {
    type Err = ConfigError;

    /// `B`, `signature 2,1[,0]` (or `signature:2,1`), `split:g,F`, or a path to a JSON file.
    fn from_str(s: &str) -> Result<FormSpec, ConfigError> {
        let s = s.trim();
        let bad = || ConfigError::FormSpec(s.to_string());
        if let Some(rest) = s.strip_prefix("signature") {
            let nums: Vec<usize> = rest
                .trim_start_matches([':', ' ', '='])
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            return match nums[..] {
                [p, q] => Ok(FormSpec::Signature { p, q, r: 0 }),
                [p, q, r] => Ok(FormSpec::Signature { p, q, r }),
                _ => Err(bad()),
            };
        }
        if let Some(rest) = s.strip_prefix("split:") {
            let names: Vec<&str> = rest.split(',').map(str::trim).collect();
            return match names[..] {
                [g, f] if is_identifier(g) && is_identifier(f) && g != f => Ok(FormSpec::Split {
                    sym: g.into(),
                    antisym: f.into(),
                }),
                _ => Err(bad()),
            };
        }
        if is_identifier(s) && !Path::new(s).exists() {
            return Ok(FormSpec::Named(s.into()));
        }
        if s.is_empty() {
            return Err(bad());
        }
        Ok(FormSpec::File(PathBuf::from(s)))
    }
}

impl fmt::Display for FormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormSpec::Named(n) => f.write_str(n),
            FormSpec::Signature { p, q, r } => write!(f, "signature:{p},{q},{r}"),
            FormSpec::Split { sym, antisym } => write!(f, "split:{sym},{antisym}"),
            FormSpec::File(p) => write!(f, "{}", p.display()),
        }
    }
}

impl Serialize for FormSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FormSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BasisMode {
    #[default]
    Undotted,
    Dotted,
}

/// JSON form file: `{"name": "B", "entries": [["1","a"],["a","1"]]}`.
/// Entries are numbers or scalar expression strings.
#[derive(Deserialize)]
struct FormFile {
    name: Option<String>,
    entries: Vec<Vec<serde_json::Value>>,
}

fn load_form_file(path: &Path) -> Result<(Option<String>, BilinearForm), ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_owned(),
        source,
    })?;
    let bad = |msg: String| ConfigError::FormFile {
        path: path.to_owned(),
        msg,
    };
    let file: FormFile = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    let dim = file.entries.len();
    check_dim(dim)?;
    let mut rows = Vec::with_capacity(dim);
    for row in &file.entries {
        let mut out = Vec::with_capacity(row.len());
        for cell in row {
            let src = match cell {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) => n.to_string(),
                other => return Err(bad(format!("entry {other} is neither a number nor a string"))),
            };
            out.push(scalar_literal(&src).map_err(bad)?);
        }
        rows.push(out);
    }
    Ok((file.name, BilinearForm::explicit(dim, rows)?))
}

/// Evaluates a scalar-only expression such as `g12+F12` or `-1/2`.
pub fn scalar_literal(src: &str) -> Result<Scalar, String> {
    let expr = parse(src, 9, false).map_err(|e| e.to_string())?;
    let value = crate::cli::eval::eval_scalar_expr(&expr).map_err(|e| format!("`{src}`: {e}"))?;
    Ok(value)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionConfig {
    pub dim: usize,
    pub form: FormSpec,
    pub algo: AlgoName,
    pub format: OutputFormat,
    pub basis: BasisMode,
    pub seed: u64,
    pub alias: bool,
}

/// Serializable wrapper around [`ProductAlgorithm`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AlgoName(pub ProductAlgorithm);

impl Serialize for AlgoName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.0.short_name())
    }
}

impl<'de> Deserialize<'de> for AlgoName {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map(AlgoName).map_err(serde::de::Error::custom)
    }
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            dim: 3,
            form: FormSpec::default(),
            algo: AlgoName::default(),
            format: OutputFormat::default(),
            basis: BasisMode::default(),
            seed: 0,
            alias: false,
        }
    }
}

/// Optional overrides read from a JSON config file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub dim: Option<usize>,
    pub form: Option<FormSpec>,
    pub algo: Option<AlgoName>,
    pub format: Option<OutputFormat>,
    pub basis: Option<BasisMode>,
    pub seed: Option<u64>,
    pub alias: Option<bool>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<ConfigFile, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_owned(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|e| ConfigError::ConfigFile {
            path: path.to_owned(),
            msg: e.to_string(),
        })
    }
}

impl SessionConfig {
    pub fn algorithm(&self) -> ProductAlgorithm {
        self.algo.0
    }
}

/// Default form plus the names it introduces, resolved for one session.
#[derive(Clone, Debug)]
pub struct Session {
    pub cfg: SessionConfig,
    pub form: BilinearForm,
    /// Names bound to concrete forms; anything else is a fresh symbolic form.
    bindings: Vec<(String, BilinearForm)>,
    dotted: DottedContext,
}

impl Session {
    /// Resolves the form spec. A dimension implied by the spec wins over the
    /// default, but an explicit conflicting `dim_given` is an error.
    pub fn new(mut cfg: SessionConfig, dim_given: Option<usize>) -> Result<Session, ConfigError> {
        let implied = match &cfg.form {
            FormSpec::Signature { p, q, r } => Some(p + q + r),
            _ => None,
        };
        let (name, form) = match &cfg.form {
            FormSpec::File(path) => {
                let (name, form) = load_form_file(path)?;
                (name, form)
            }
            _ => (None, BilinearForm::zero(1)?),
        };
        let implied = implied.or(matches!(cfg.form, FormSpec::File(_)).then(|| form.dim()));
        if let (Some(given), Some(formdim)) = (dim_given, implied) {
            if given != formdim {
                return Err(ConfigError::DimConflict { given, form: formdim });
            }
        }
        cfg.dim = implied.or(dim_given).unwrap_or(cfg.dim);
        let dim = cfg.dim;
        check_dim(dim)?;

        let mut bindings = Vec::new();
        let (form, dotted) = match &cfg.form {
            FormSpec::Named(n) => {
                let b = BilinearForm::named(n, dim)?;
                bindings.push((n.clone(), b.clone()));
                (b, DottedContext::named("F", dim)?)
            }
            FormSpec::Signature { p, q, r } => {
                let b = BilinearForm::signature(*p, *q, *r)?;
                bindings.push(("B".into(), b.clone()));
                (b, DottedContext::named("F", dim)?)
            }
            FormSpec::Split { sym, antisym } => {
                let g = BilinearForm::symmetric_named(sym, dim)?;
                let f = antisymmetrize_named(antisym, dim)?;
                let b = g.add(&f)?;
                bindings.push(("B".into(), b.clone()));
                bindings.push((sym.clone(), g));
                bindings.push((antisym.clone(), f.clone()));
                (b, DottedContext::new(f)?)
            }
            FormSpec::File(_) => {
                let ctx = DottedContext::from_form(&form);
                bindings.push((name.unwrap_or_else(|| "B".into()), form.clone()));
                (form, ctx)
            }
        };
        Ok(Session {
            cfg,
            form,
            bindings,
            dotted,
        })
    }

    /// Session over explicit forms: `form` is the default and bound as `B`,
    /// `bindings` name further forms, `dotted` serves unindexed dotted operations.
    pub fn with_forms(
        form: BilinearForm,
        bindings: Vec<(String, BilinearForm)>,
        dotted: DottedContext,
    ) -> Result<Session, ConfigError> {
        let dim = form.dim();
        for b in bindings.iter().map(|(_, b)| b).chain([dotted.form()]) {
            if b.dim() != dim {
                return Err(AlgebraError::DimMismatch(dim, b.dim()).into());
            }
        }
        let mut all = vec![("B".to_string(), form.clone())];
        all.extend(bindings);
        Ok(Session {
            cfg: SessionConfig {
                dim,
                ..SessionConfig::default()
            },
            form,
            bindings: all,
            dotted,
        })
    }

    pub fn dim(&self) -> usize {
        self.cfg.dim
    }

    /// Form for an explicit index: a bound name, or a fresh symbolic form.
    pub fn form_named(&self, name: &str) -> Result<BilinearForm, AlgebraError> {
        match self.bindings.iter().find(|(n, _)| n == name) {
            Some((_, b)) => Ok(b.clone()),
            None => BilinearForm::named(name, self.dim()),
        }
    }

    /// Antisymmetric form for dotted operations. Unbound names are
    /// antisymmetrized symbolic forms; bound ones contribute their antisymmetric part.
    pub fn dotted_named(&self, name: Option<&str>) -> Result<DottedContext, AlgebraError> {
        match name {
            None => Ok(self.dotted.clone()),
            Some(n) => match self.bindings.iter().find(|(b, _)| b == n) {
                Some((_, b)) => Ok(DottedContext::from_form(b)),
                None => DottedContext::named(n, self.dim()),
            },
        }
    }

    pub fn dotted(&self) -> &DottedContext {
        &self.dotted
    }
}
