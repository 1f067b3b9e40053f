//! Dotted wedge product and the dotted Grassmann basis.
//!
//! The dotted wedge is the Clifford product taken with respect to an
//! antisymmetric form `F`. Polynomials are always stored in undotted
//! coordinates; dotted coordinates exist only through the conversions below.

use crate::bform::{antisymmetrize_named, BilinearForm};
use crate::error::{AlgebraError, Result};
use crate::multivector::{Blade, Multivector};
use crate::product::{cmul, ProductAlgorithm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DottedContext {
    f: BilinearForm,
}

impl DottedContext {
    /// Wraps an explicit antisymmetric form.
    pub fn new(f: BilinearForm) -> Result<DottedContext> {
        f.require_antisymmetric()?;
        Ok(DottedContext { f })
    }

    /// `F[i,j]` with `F[j,i] = −F[i,j]` and a zero diagonal.
    pub fn named(name: &str, dim: usize) -> Result<DottedContext> {
        Ok(DottedContext {
            f: antisymmetrize_named(name, dim)?,
        })
    }

    /// Uses the antisymmetric part of `b`.
    pub fn from_form(b: &BilinearForm) -> DottedContext {
        DottedContext { f: b.split().f }
    }

    pub fn form(&self) -> &BilinearForm {
        &self.f
    }

    pub fn dim(&self) -> usize {
        self.f.dim()
    }

    fn negated(&self) -> DottedContext {
        DottedContext { f: self.f.neg() }
    }
}

/// Dotted wedge `u ∧̇ v`, expressed in the undotted basis.
pub fn dwedge(u: &Multivector, v: &Multivector, ctx: &DottedContext) -> Result<Multivector> {
    cmul(u, v, &ctx.f, ProductAlgorithm::default())
}

pub fn dwedge_n(args: &[Multivector], ctx: &DottedContext) -> Result<Multivector> {
    let (first, rest) = args.split_first().ok_or(AlgebraError::EmptyArguments)?;
    rest.iter().try_fold(first.clone(), |acc, x| dwedge(&acc, x, ctx))
}

/// Dotted monomial `e_{i1} ∧̇ … ∧̇ e_{ik}` in undotted coordinates.
pub fn dotted_blade(b: Blade, ctx: &DottedContext) -> Result<Multivector> {
    let dim = ctx.dim();
    let mut acc = Multivector::id(dim);
    for i in b.iter() {
        if i > dim {
            return Err(AlgebraError::IndexOutOfRange { index: i, dim });
        }
        acc = dwedge(&acc, &Multivector::e(dim, i), ctx)?;
    }
    Ok(acc)
}

/// Replaces each undotted blade by its dotted counterpart.
pub fn wedge_to_dwedge(u: &Multivector, ctx: &DottedContext) -> Result<Multivector> {
    if u.dim() != ctx.dim() {
        return Err(AlgebraError::DimMismatch(u.dim(), ctx.dim()));
    }
    let mut out = Multivector::zero(u.dim());
    for (b, c) in u.terms() {
        out.add_scaled(c, &dotted_blade(*b, ctx)?);
    }
    Ok(out)
}

/// Inverse of [`wedge_to_dwedge`]; the conversion runs at `−F`.
pub fn dwedge_to_wedge(u: &Multivector, ctx: &DottedContext) -> Result<Multivector> {
    wedge_to_dwedge(u, &ctx.negated())
}
