//! The Grassmann algebra ⋀V over a vector space of dimension 1..9.
//!
//! A [`Blade`] is an index set stored as a bitmask (bit `i-1` for `e_i`).
//! Blades sort grade-major, then lexicographically on their ascending index
//! lists; every printed polynomial follows that order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

pub const MAX_DIM: usize = 9;

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(AlgebraError::InvalidDim(dim))
    }
}

/// A Grassmann basis monomial `e_{i1} ∧ … ∧ e_{ik}` with `i1 < … < ik`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u16);

impl Blade {
    pub const ID: Blade = Blade(0);

    pub fn from_mask(mask: u16) -> Blade {
        debug_assert!(mask < (1 << MAX_DIM));
        Blade(mask)
    }

    /// Basis vector `e_i`.
    pub fn vector(i: usize) -> Blade {
        assert!((1..=MAX_DIM).contains(&i), "basis index {i} outside 1..9");
        Blade(1 << (i - 1))
    }

    /// Builds a blade from strictly ascending indices.
    pub fn from_sorted(indices: &[usize]) -> Result<Blade> {
        let mut mask = 0u16;
        let mut prev = 0;
        for &i in indices {
            if !(1..=MAX_DIM).contains(&i) {
                return Err(AlgebraError::IndexOutOfRange { index: i, dim: MAX_DIM });
            }
            if i <= prev {
                return Err(AlgebraError::NotMonomial);
            }
            prev = i;
            mask |= 1 << (i - 1);
        }
        Ok(Blade(mask))
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_id(self) -> bool {
        self.0 == 0
    }

    /// Largest basis index, 0 for `Id`.
    pub fn top_index(self) -> usize {
        16 - self.0.leading_zeros() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        BitIter(self.0).collect()
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }

    pub fn without(self, i: usize) -> Blade {
        Blade(self.0 & !(1 << (i - 1)))
    }

    pub fn fits(self, dim: usize) -> bool {
        self.top_index() <= dim
    }

    /// Name in canonical `we`-separated form: `Id`, `e1`, `e1we2we3`.
    pub fn name(self) -> String {
        self.name_with("we")
    }

    /// Compact alias: `e123`.
    pub fn alias(self) -> String {
        self.name_with("")
    }

    /// Dotted basis name: `e1We2We3`.
    pub fn dotted_name(self) -> String {
        self.name_with("We")
    }

    fn name_with(self, sep: &str) -> String {
        if self.is_id() {
            return "Id".to_string();
        }
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        format!("e{}", parts.join(sep))
    }
}

struct BitIter(u16);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // equal grades: the set holding the smallest differing index is lex-smaller
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Sign of `e_a ∧ e_b` relative to the sorted blade `e_{a∪b}`, 0 if they share an index.
pub fn wedge_sign(a: Blade, b: Blade) -> i32 {
    if a.0 & b.0 != 0 {
        return 0;
    }
    let mut swaps = 0u32;
    for j in b.iter() {
        // elements of `a` above index j must move past e_j
        swaps += (a.0 >> j).count_ones();
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sorts an index sequence, returning the permutation parity (0 on a repeat) and the blade.
pub fn reorder(seq: &[usize], dim: usize) -> Result<(i32, Blade)> {
    check_dim(dim)?;
    let mut mask = 0u16;
    let mut sign = 1;
    for &i in seq {
        if !(1..=dim).contains(&i) {
            return Err(AlgebraError::IndexOutOfRange { index: i, dim });
        }
        let bit = 1u16 << (i - 1);
        if mask & bit != 0 {
            sign = 0;
            continue;
        }
        // inversions against every earlier, larger index
        if (mask >> i).count_ones() % 2 == 1 {
            sign = -sign;
        }
        mask |= bit;
    }
    Ok((sign, Blade(mask)))
}

/// Canonical basis of ⋀V in grade-major lex order.
pub fn basis(dim: usize) -> Result<Vec<Blade>> {
    check_dim(dim)?;
    let mut all: Vec<Blade> = (0u16..(1 << dim)).map(Blade).collect();
    all.sort();
    Ok(all)
}

/// A Grassmann (or Clifford) polynomial: sparse map from blades to scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<Blade, Scalar>,
}

impl Multivector {
    pub fn zero(dim: usize) -> Multivector {
        assert!((1..=MAX_DIM).contains(&dim), "dimension {dim} outside 1..9");
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn id(dim: usize) -> Multivector {
        Multivector::from_blade(dim, Blade::ID)
    }

    pub fn scalar(dim: usize, s: Scalar) -> Multivector {
        Multivector::term(dim, Blade::ID, s)
    }

    pub fn from_blade(dim: usize, b: Blade) -> Multivector {
        Multivector::term(dim, b, Scalar::one())
    }

    /// Basis vector `e_i` of ⋀V.
    pub fn e(dim: usize, i: usize) -> Multivector {
        Multivector::from_blade(dim, Blade::vector(i))
    }

    /// Basis monomial from (possibly unordered) indices, reordered with its sign.
    pub fn blade(dim: usize, indices: &[usize]) -> Result<Multivector> {
        let (sign, b) = reorder(indices, dim)?;
        Ok(Multivector::term(dim, b, Scalar::from_int(sign as i64)))
    }

    pub fn term(dim: usize, b: Blade, s: Scalar) -> Multivector {
        let mut m = Multivector::zero(dim);
        assert!(b.fits(dim), "blade {b} exceeds dimension {dim}");
        if !s.is_zero() {
            m.terms.insert(b, s);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Blade, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, b: Blade) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, b: Blade, s: Scalar) {
        if s.is_zero() {
            return;
        }
        debug_assert!(b.fits(self.dim));
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(s);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += s;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, factor: &Scalar, other: &Multivector) {
        for (b, c) in &other.terms {
            self.add_term(*b, factor * c);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Multivector {
        let mut out = Multivector::zero(self.dim);
        out.add_scaled(s, self);
        out
    }

    pub fn scale_int(&self, n: i64) -> Multivector {
        self.scale(&Scalar::from_int(n))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Multivector {
        let mut out = Multivector::zero(self.dim);
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }

    pub(crate) fn check_same_dim(&self, other: &Multivector) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimMismatch(self.dim, other.dim))
        }
    }

    /// Present grades.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        g.dedup();
        g
    }

    /// The grade when all terms share it; `Some(0)` for zero.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        match self.grades().as_slice() {
            [] => Some(0),
            [g] => Some(*g),
            _ => None,
        }
    }

    /// The single blade of a one-term multivector.
    pub fn as_monomial(&self) -> Option<(Blade, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(b, s)| (*b, s))
        } else {
            None
        }
    }

    /// Scalar (grade-0) coefficient when the element is a pure scalar.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Blade::ID).cloned(),
            _ => None,
        }
    }

    pub fn with_dim(&self, dim: usize) -> Result<Multivector> {
        check_dim(dim)?;
        let mut out = Multivector::zero(dim);
        for (b, c) in &self.terms {
            if !b.fits(dim) {
                return Err(AlgebraError::IndexOutOfRange {
                    index: b.top_index(),
                    dim,
                });
            }
            out.terms.insert(*b, c.clone());
        }
        Ok(out)
    }

    pub fn to_text(&self, style: BladeStyle) -> String {
        render(self, style)
    }
}

/// Wedge product, bilinear extension of blade concatenation followed by reorder.
pub fn wedge(u: &Multivector, v: &Multivector) -> Result<Multivector> {
    u.check_same_dim(v)?;
    let mut out = Multivector::zero(u.dim);
    for (a, ca) in &u.terms {
        for (b, cb) in &v.terms {
            let s = wedge_sign(*a, *b);
            if s == 0 {
                continue;
            }
            let c = ca * cb;
            out.add_term(Blade(a.0 | b.0), if s < 0 { -c } else { c });
        }
    }
    Ok(out)
}

pub fn wedge_n(args: &[Multivector]) -> Result<Multivector> {
    let (first, rest) = args.split_first().ok_or(AlgebraError::EmptyArguments)?;
    rest.iter().try_fold(first.clone(), |acc, x| wedge(&acc, x))
}

pub fn grade_part(u: &Multivector, k: usize) -> Result<Multivector> {
    if k > u.dim {
        return Err(AlgebraError::GradeOutOfRange { grade: k, dim: u.dim });
    }
    let mut out = Multivector::zero(u.dim);
    for (b, c) in &u.terms {
        if b.grade() == k {
            out.terms.insert(*b, c.clone());
        }
    }
    Ok(out)
}

/// Grade involution: grade-k parts scaled by (−1)^k.
pub fn gradeinv(u: &Multivector) -> Multivector {
    let mut out = u.clone();
    for (b, c) in out.terms.iter_mut() {
        if b.grade() % 2 == 1 {
            *c = -std::mem::take(c);
        }
    }
    out
}

/// Sign-only reversion (−1)^{k(k−1)/2}; the Clifford reversion for a symmetric form.
pub fn grade_reversion(u: &Multivector) -> Multivector {
    let mut out = u.clone();
    for (b, c) in out.terms.iter_mut() {
        let k = b.grade();
        if (k * k.saturating_sub(1) / 2) % 2 == 1 {
            *c = -std::mem::take(c);
        }
    }
    out
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        for (b, c) in &rhs.terms {
            self.add_term(*b, c.clone());
        }
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        if self.terms.is_empty() {
            *self = rhs;
            return;
        }
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        for (b, c) in &rhs.terms {
            self.add_term(*b, -c);
        }
    }
}

impl Add<&Multivector> for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: Multivector) -> Multivector {
        self += rhs;
        self
    }
}

impl Sub<&Multivector> for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(mut self, rhs: Multivector) -> Multivector {
        self -= &rhs;
        self
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(mut self) -> Multivector {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// How blade names are spelled in text output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BladeStyle {
    #[default]
    Wedge,
    Alias,
    Dotted,
}

impl BladeStyle {
    pub fn name(self, b: Blade) -> String {
        match self {
            BladeStyle::Wedge => b.name(),
            BladeStyle::Alias => b.alias(),
            BladeStyle::Dotted => b.dotted_name(),
        }
    }
}

/// Renders a single `coeff*blade` term; the leading sign is part of the output.
pub(crate) fn render_term(c: &Scalar, name: &str) -> String {
    if c.is_one() {
        return name.to_string();
    }
    if (-c).is_one() {
        return format!("-{name}");
    }
    if c.num_terms() == 1 {
        return format!("{c}*{name}");
    }
    format!("({c})*{name}")
}

fn render(u: &Multivector, style: BladeStyle) -> String {
    if u.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (b, c)) in u.terms.iter().enumerate() {
        let t = render_term(c, &style.name(*b));
        if k > 0 && !t.starts_with('-') {
            out.push('+');
        }
        out.push_str(&t);
    }
    out
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, BladeStyle::Wedge))
    }
}
