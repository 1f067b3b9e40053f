//! Exact coefficient ring: sparse multivariate polynomials with rational
//! coefficients over named symbols and indexed bilinear-form entries.
//!
//! Atom order is fixed: every form entry sorts before every named symbol;
//! form entries compare by form name, then row, then column; named symbols
//! compare lexicographically. Monomials sort by total degree, then
//! lexicographically by their (atom, exponent) factors, so printing is
//! deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("cyclic substitution: bound atom `{0}` occurs in a substituted value")]
    CyclicBinding(String),
    #[error("invalid identifier `{0}`")]
    InvalidIdentifier(String),
    #[error("form entry index ({0},{1}) outside 1..9")]
    EntryOutOfRange(usize, usize),
}

/// A free symbol of the coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `B[i,j]`: entry of a named bilinear form.
    Entry { form: Arc<str>, row: u8, col: u8 },
    /// A plain symbol such as `a`, `g12` or `alpha`.
    Named(Arc<str>),
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl Atom {
    pub fn named(name: &str) -> Result<Atom, ScalarError> {
        if !is_identifier(name) {
            return Err(ScalarError::InvalidIdentifier(name.to_string()));
        }
        Ok(Atom::Named(Arc::from(name)))
    }

    pub fn entry(form: &str, row: usize, col: usize) -> Result<Atom, ScalarError> {
        if !is_identifier(form) {
            return Err(ScalarError::InvalidIdentifier(form.to_string()));
        }
        if !(1..=9).contains(&row) || !(1..=9).contains(&col) {
            return Err(ScalarError::EntryOutOfRange(row, col));
        }
        Ok(Atom::Entry {
            form: Arc::from(form),
            row: row as u8,
            col: col as u8,
        })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Entry { form, row, col } => write!(f, "{form}[{row},{col}]"),
            Atom::Named(name) => f.write_str(name),
        }
    }
}

/// A power product of atoms, kept sorted by atom with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Atom, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn atom(a: Atom) -> Monomial {
        Monomial(vec![(a, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Atom, u32)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        if self.0.is_empty() {
            return other.clone();
        }
        if other.0.is_empty() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (atom, exp)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *exp == 1 {
                write!(f, "{atom}")?;
            } else {
                write!(f, "{atom}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Exact multivariate polynomial over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::default()
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Scalar {
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Scalar {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Monomial::one(), q);
        }
        Scalar { terms }
    }

    pub fn from_atom(a: Atom) -> Scalar {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::atom(a), BigRational::one());
        Scalar { terms }
    }

    /// Shorthand for a named symbol. Panics on an invalid identifier.
    pub fn sym(name: &str) -> Scalar {
        Scalar::from_atom(Atom::named(name).expect("valid identifier"))
    }

    /// Shorthand for a form entry `form[row,col]`. Panics on invalid input.
    pub fn entry(form: &str, row: usize, col: usize) -> Scalar {
        Scalar::from_atom(Atom::entry(form, row, col).expect("valid form entry"))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// The rational value when the polynomial is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn contains_atom(&self, atom: &Atom) -> bool {
        self.terms
            .keys()
            .any(|m| m.0.iter().any(|(a, _)| a == atom))
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, factor: &Scalar, other: &Scalar) {
        for (m1, c1) in &factor.terms {
            for (m2, c2) in &other.terms {
                self.add_term(m1.mul(m2), c1 * c2);
            }
        }
    }

    pub fn scale_rational(&self, q: &BigRational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Scalar {
        self.scale_rational(&BigRational::from_integer(n.into()))
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous substitution of atoms by scalars.
    pub fn substitute(&self, bindings: &BTreeMap<Atom, Scalar>) -> Result<Scalar, ScalarError> {
        for value in bindings.values() {
            if let Some(bad) = bindings.keys().find(|a| value.contains_atom(a)) {
                return Err(ScalarError::CyclicBinding(bad.to_string()));
            }
        }
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = Scalar::from_rational(c.clone());
            let mut rest = Vec::new();
            for (atom, exp) in &m.0 {
                match bindings.get(atom) {
                    Some(value) => term = &term * &value.pow(*exp),
                    None => rest.push((atom.clone(), *exp)),
                }
            }
            let rest = Scalar {
                terms: std::iter::once((Monomial(rest), BigRational::one())).collect(),
            };
            out += &term * &rest;
        }
        Ok(out)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Scalar {
        Scalar::from_rational(q)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        if self.terms.is_empty() {
            *self = rhs;
            return;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += rhs;
        self
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        out.add_scaled(self, rhs);
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if m.is_one() {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}
