//! Evaluation of parsed expressions against a session.

use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::bform::BilinearForm;
use crate::cli::config::Session;
use crate::cli::parser::Expr;
use crate::dotted::{dotted_blade, dwedge, dwedge_n, dwedge_to_wedge, wedge_to_dwedge};
use crate::error::AlgebraError;
use crate::multivector::{grade_part, gradeinv, reorder, wedge, wedge_n, Multivector};
use crate::product::{cmul, cmul_n, lc, rc, reversion};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Invalid(String),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, EvalError> {
    Err(EvalError::Invalid(msg.into()))
}

/// Evaluates an expression that must not contain blades or algebra operations.
pub fn eval_scalar_expr(e: &Expr) -> Result<Scalar, EvalError> {
    Ok(match e {
        Expr::Num(q) => Scalar::from_rational(q.clone()),
        Expr::Sym(s) => Scalar::sym(s),
        Expr::Entry { form, row, col } => Scalar::entry(form, *row, *col),
        Expr::Neg(a) => -eval_scalar_expr(a)?,
        Expr::Add(a, b) => eval_scalar_expr(a)? + eval_scalar_expr(b)?,
        Expr::Sub(a, b) => eval_scalar_expr(a)? - eval_scalar_expr(b)?,
        Expr::Mul(a, b) => eval_scalar_expr(a)? * eval_scalar_expr(b)?,
        Expr::Div(a, b) => {
            let d = eval_scalar_expr(b)?;
            divide(&eval_scalar_expr(a)?, &d)?
        }
        Expr::Pow(a, n) => eval_scalar_expr(a)?.pow(*n),
        other => return invalid(format!("`{other}` is not a scalar")),
    })
}

fn divide(num: &Scalar, den: &Scalar) -> Result<Scalar, EvalError> {
    match den.as_rational() {
        Some(q) if !q.is_zero() => Ok(num.scale_rational(&q.recip())),
        Some(_) => invalid("division by zero"),
        None => invalid(format!("cannot divide by the non-constant `{den}`")),
    }
}

pub struct Evaluator<'a> {
    session: &'a Session,
}

impl<'a> Evaluator<'a> {
    pub fn new(session: &'a Session) -> Evaluator<'a> {
        Evaluator { session }
    }

    fn dim(&self) -> usize {
        self.session.dim()
    }

    fn form(&self, name: Option<&str>) -> Result<BilinearForm, EvalError> {
        match name {
            None => Ok(self.session.form.clone()),
            Some(n) => Ok(self.session.form_named(n)?),
        }
    }

    /// A trailing form argument such as the `B` in `LC(u, v, B)`.
    fn form_arg(&self, index: &Option<String>, extra: Option<&Expr>) -> Result<BilinearForm, EvalError> {
        match (index, extra) {
            (Some(_), Some(_)) => invalid("form given both as index and as argument"),
            (_, Some(Expr::Sym(n))) => self.form(Some(n)),
            (_, Some(other)) => invalid(format!("expected a form name, found `{other}`")),
            (k, None) => self.form(k.as_deref()),
        }
    }

    fn scalar(&self, s: Scalar) -> Multivector {
        Multivector::scalar(self.dim(), s)
    }

    pub fn eval(&self, e: &Expr) -> Result<Multivector, EvalError> {
        let dim = self.dim();
        Ok(match e {
            Expr::Num(_) | Expr::Sym(_) | Expr::Entry { .. } => self.scalar(eval_scalar_expr(e)?),
            Expr::Blade { indices, dotted } => {
                let (sign, blade) = reorder(indices, dim)?;
                let base = if *dotted {
                    dotted_blade(blade, self.session.dotted())?
                } else {
                    Multivector::from_blade(dim, blade)
                };
                base.scale_int(sign as i64)
            }
            Expr::Neg(a) => -self.eval(a)?,
            Expr::Add(a, b) => self.eval(a)? + self.eval(b)?,
            Expr::Sub(a, b) => self.eval(a)? - self.eval(b)?,
            Expr::Mul(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                match (x.as_scalar(), y.as_scalar()) {
                    (Some(s), _) => y.scale(&s),
                    (_, Some(s)) => x.scale(&s),
                    _ => return invalid(format!("`*` needs a scalar operand in `{e}`; use &c or &w")),
                }
            }
            Expr::Div(a, b) => {
                let x = self.eval(a)?;
                let Some(d) = self.eval(b)?.as_scalar() else {
                    return invalid(format!("divisor in `{e}` is not a scalar"));
                };
                let q = divide(&Scalar::one(), &d)?;
                x.scale(&q)
            }
            Expr::Pow(a, n) => match self.eval(a)?.as_scalar() {
                Some(s) => self.scalar(s.pow(*n)),
                None => return invalid(format!("`^` applies to scalars only, in `{e}`")),
            },
            Expr::Wedge(a, b) => wedge(&self.eval(a)?, &self.eval(b)?)?,
            Expr::Cmul(a, b, k) => {
                let form = self.form(k.as_deref())?;
                cmul(&self.eval(a)?, &self.eval(b)?, &form, self.session.cfg.algorithm())?
            }
            Expr::Dwedge(a, b, k) => {
                let ctx = self.session.dotted_named(k.as_deref())?;
                dwedge(&self.eval(a)?, &self.eval(b)?, &ctx)?
            }
            Expr::Call { name, index, args } => self.call(name, index, args)?,
        })
    }

    fn call(&self, name: &str, index: &Option<String>, args: &[Expr]) -> Result<Multivector, EvalError> {
        let algo = self.session.cfg.algorithm();
        let values = |xs: &[Expr]| xs.iter().map(|x| self.eval(x)).collect::<Result<Vec<_>, _>>();
        Ok(match name {
            "cmul" => cmul_n(&values(args)?, &self.form(index.as_deref())?, algo)?,
            "wedge" => wedge_n(&values(args)?)?,
            "dwedge" => dwedge_n(&values(args)?, &self.session.dotted_named(index.as_deref())?)?,
            "LC" | "RC" => {
                let form = self.form_arg(index, args.get(2))?;
                let (u, v) = (self.eval(&args[0])?, self.eval(&args[1])?);
                if name == "LC" {
                    lc(&u, &v, &form)?
                } else {
                    rc(&u, &v, &form)?
                }
            }
            "reversion" => {
                let form = self.form_arg(index, args.get(1))?;
                reversion(&self.eval(&args[0])?, &form)?
            }
            "w2d" | "d2w" => {
                let ctx = match (index, args.get(1)) {
                    (Some(_), Some(_)) => return invalid("form given both as index and as argument"),
                    (_, Some(Expr::Sym(n))) => self.session.dotted_named(Some(n))?,
                    (_, Some(other)) => return invalid(format!("expected a form name, found `{other}`")),
                    (k, None) => self.session.dotted_named(k.as_deref())?,
                };
                let u = self.eval(&args[0])?;
                if name == "w2d" {
                    wedge_to_dwedge(&u, &ctx)?
                } else {
                    dwedge_to_wedge(&u, &ctx)?
                }
            }
            "gradeinv" => gradeinv(&self.eval(&args[0])?),
            "grade" => {
                let u = self.eval(&args[0])?;
                let k = self
                    .eval(&args[1])?
                    .as_scalar()
                    .and_then(|s| s.as_rational())
                    .filter(|q| q.is_integer())
                    .and_then(|q| q.to_integer().to_usize());
                match k {
                    Some(k) => grade_part(&u, k)?,
                    None => return invalid("grade index must be a non-negative integer"),
                }
            }
            other => return invalid(format!("unknown function `{other}`")),
        })
    }
}
