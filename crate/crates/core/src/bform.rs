//! Bilinear forms `B: V × V → scalars` and the split `B = g + F`.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::multivector::{check_dim, Blade, Multivector};
use crate::scalar::{Atom, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Explicit,
    Named(String),
    Signature { p: usize, q: usize, r: usize },
}

/// A `dim × dim` matrix of scalars, indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    dim: usize,
    entries: Vec<Scalar>,
    provenance: Provenance,
}

impl BilinearForm {
    pub fn explicit(dim: usize, rows: Vec<Vec<Scalar>>) -> Result<BilinearForm> {
        check_dim(dim)?;
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            let cols = rows.first().map_or(0, |r| r.len());
            return Err(AlgebraError::FormShape {
                rows: rows.len(),
                cols,
                dim,
            });
        }
        Ok(BilinearForm {
            dim,
            entries: rows.into_iter().flatten().collect(),
            provenance: Provenance::Explicit,
        })
    }

    /// Fully symbolic form: entry `(i,j)` is the atom `name[i,j]`.
    pub fn named(name: &str, dim: usize) -> Result<BilinearForm> {
        check_dim(dim)?;
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 1..=dim {
            for j in 1..=dim {
                entries.push(Scalar::from_atom(Atom::entry(name, i, j)?));
            }
        }
        Ok(BilinearForm {
            dim,
            entries,
            provenance: Provenance::Named(name.to_string()),
        })
    }

    /// Diagonal form with `p` entries +1, then `q` entries −1, then `r` zeros.
    pub fn signature(p: usize, q: usize, r: usize) -> Result<BilinearForm> {
        let dim = p + q + r;
        check_dim(dim)?;
        let mut entries = vec![Scalar::zero(); dim * dim];
        for i in 0..dim {
            let d = if i < p {
                1
            } else if i < p + q {
                -1
            } else {
                0
            };
            entries[i * dim + i] = Scalar::from_int(d);
        }
        Ok(BilinearForm {
            dim,
            entries,
            provenance: Provenance::Signature { p, q, r },
        })
    }

    pub fn zero(dim: usize) -> Result<BilinearForm> {
        BilinearForm::signature(0, 0, dim)
    }

    /// Symmetric named form: `(i,j)` and `(j,i)` both map to the atom `name[min,max]`.
    pub fn symmetric_named(name: &str, dim: usize) -> Result<BilinearForm> {
        check_dim(dim)?;
        let mut rows = vec![vec![Scalar::zero(); dim]; dim];
        for i in 1..=dim {
            for j in 1..=dim {
                let (a, b) = (i.min(j), i.max(j));
                rows[i - 1][j - 1] = Scalar::from_atom(Atom::entry(name, a, b)?);
            }
        }
        BilinearForm::explicit(dim, rows)
    }

    /// Sum of a symmetric named form and an antisymmetrized named form.
    pub fn split_named(sym: &str, antisym: &str, dim: usize) -> Result<BilinearForm> {
        let g = BilinearForm::symmetric_named(sym, dim)?;
        let f = antisymmetrize_named(antisym, dim)?;
        g.add(&f)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Entry `B(e_i, e_j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[(i - 1) * self.dim + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn is_numeric(&self) -> bool {
        self.entries.iter().all(Scalar::is_constant)
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.dim).all(|i| (i + 1..=self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.first_non_antisymmetric().is_none()
    }

    fn first_non_antisymmetric(&self) -> Option<(usize, usize)> {
        for i in 1..=self.dim {
            for j in i..=self.dim {
                if *self.get(i, j) != -self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub(crate) fn require_antisymmetric(&self) -> Result<()> {
        match self.first_non_antisymmetric() {
            None => Ok(()),
            Some((i, j)) => Err(AlgebraError::NotAntisymmetric(i, j)),
        }
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> BilinearForm {
        BilinearForm {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
            provenance: Provenance::Explicit,
        }
    }

    pub fn neg(&self) -> BilinearForm {
        self.map(|s| -s)
    }

    pub fn transpose(&self) -> BilinearForm {
        let d = self.dim;
        let entries = (0..d * d)
            .map(|k| self.entries[(k % d) * d + k / d].clone())
            .collect();
        BilinearForm {
            dim: d,
            entries,
            provenance: Provenance::Explicit,
        }
    }

    pub fn add(&self, other: &BilinearForm) -> Result<BilinearForm> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimMismatch(self.dim, other.dim));
        }
        Ok(BilinearForm {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
            provenance: Provenance::Explicit,
        })
    }

    pub fn split(&self) -> FormSplit {
        let half = Scalar::from_ratio(1, 2);
        let d = self.dim;
        let mut g = Vec::with_capacity(d * d);
        let mut f = Vec::with_capacity(d * d);
        for i in 1..=d {
            for j in 1..=d {
                let (a, b) = (self.get(i, j), self.get(j, i));
                g.push(&half * &(a + b));
                f.push(&half * &(a - b));
            }
        }
        FormSplit {
            g: BilinearForm {
                dim: d,
                entries: g,
                provenance: Provenance::Explicit,
            },
            f: BilinearForm {
                dim: d,
                entries: f,
                provenance: Provenance::Explicit,
            },
        }
    }

    /// `B(x, y)` for grade-1 `x`, `y`.
    pub fn eval(&self, x: &Multivector, y: &Multivector) -> Result<Scalar> {
        form_eval(self, x, y)
    }
}

impl fmt::Display for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.dim)
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|s| s.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Symmetric part `g` and antisymmetric part `F` of a form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSplit {
    pub g: BilinearForm,
    pub f: BilinearForm,
}

/// Named form constrained antisymmetric; only upper-triangular atoms appear.
pub fn antisymmetrize_named(name: &str, dim: usize) -> Result<BilinearForm> {
    check_dim(dim)?;
    let mut rows = vec![vec![Scalar::zero(); dim]; dim];
    for i in 1..=dim {
        for j in i + 1..=dim {
            let a = Scalar::from_atom(Atom::entry(name, i, j)?);
            rows[j - 1][i - 1] = -&a;
            rows[i - 1][j - 1] = a;
        }
    }
    let mut form = BilinearForm::explicit(dim, rows)?;
    form.provenance = Provenance::Named(name.to_string());
    Ok(form)
}

/// `Σ_ij x_i y_j B(i,j)` for homogeneous grade-1 arguments.
pub fn form_eval(b: &BilinearForm, x: &Multivector, y: &Multivector) -> Result<Scalar> {
    x.check_same_dim(y)?;
    if x.dim() != b.dim() {
        return Err(AlgebraError::DimMismatch(x.dim(), b.dim()));
    }
    for v in [x, y] {
        if v.terms().any(|(bl, _)| bl.grade() != 1) {
            return Err(AlgebraError::NotGradeOne);
        }
    }
    let mut out = Scalar::zero();
    for (bx, cx) in x.terms() {
        for (by, cy) in y.terms() {
            let entry = b.get(index_of(*bx), index_of(*by));
            if entry.is_zero() {
                continue;
            }
            out.add_scaled(&(cx * cy), entry);
        }
    }
    Ok(out)
}

fn index_of(b: Blade) -> usize {
    b.top_index()
}
