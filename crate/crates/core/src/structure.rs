//! Classification of the real Clifford algebras `Cl(p,q)`, primitive
//! idempotents, spinor ideals and their matrix representations.
//!
//! Everything here works over the diagonal signature form, where blade
//! products are `±` blades. The idempotent `f = Π ½(Id + T_i)` is built from
//! commuting blades `T_i` squaring to `+Id`; since `T_i f = f`, the left ideal
//! `Cl·f` has one real basis element per left coset of the group generated by
//! the `T_i`, and the canonical representative of a coset is its smallest blade.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::bform::BilinearForm;
use crate::error::{AlgebraError, Result};
use crate::linalg;
use crate::multivector::{basis, Blade, Multivector};
use crate::product::{cmul, ProductAlgorithm};
use crate::scalar::Scalar;

// Diagonal forms are sparse and numeric, where the recursive product is cheap.
const ALGO: ProductAlgorithm = ProductAlgorithm::ChevalleyRecursive;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldType {
    Real,
    Complex,
    Quaternionic,
    RealDouble,
    QuaternionicDouble,
}

impl FieldType {
    pub fn name(self) -> &'static str {
        match self {
            FieldType::Real => "real",
            FieldType::Complex => "complex",
            FieldType::Quaternionic => "quaternionic",
            FieldType::RealDouble => "real_double",
            FieldType::QuaternionicDouble => "quaternionic_double",
        }
    }

    /// Real dimension of one copy of the division ring.
    pub fn real_dim(self) -> usize {
        match self {
            FieldType::Real | FieldType::RealDouble => 1,
            FieldType::Complex => 2,
            FieldType::Quaternionic | FieldType::QuaternionicDouble => 4,
        }
    }
}

impl fmt::Display for FieldType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Simplicity {
    Simple,
    Semisimple,
}

impl fmt::Display for Simplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Simplicity::Simple => "simple",
            Simplicity::Semisimple => "semisimple",
        })
    }
}

/// `r_m` with `r_0..r_7 = 0,1,2,2,3,3,3,3` and `r_{m+8} = r_m + 4`.
pub fn radon_hurwitz(m: i64) -> i64 {
    const BASE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];
    BASE[m.rem_euclid(8) as usize] + 4 * m.div_euclid(8)
}

fn check_signature(p: usize, q: usize) -> Result<()> {
    if (1..=9).contains(&(p + q)) {
        Ok(())
    } else {
        Err(AlgebraError::SignatureOutOfRange(p, q))
    }
}

pub fn field_type(p: usize, q: usize) -> FieldType {
    match (p as i64 - q as i64).rem_euclid(8) {
        0 | 2 => FieldType::Real,
        1 => FieldType::RealDouble,
        3 | 7 => FieldType::Complex,
        4 | 6 => FieldType::Quaternionic,
        _ => FieldType::QuaternionicDouble,
    }
}

pub fn simplicity(p: usize, q: usize) -> Simplicity {
    if (p as i64 - q as i64).rem_euclid(4) == 1 {
        Simplicity::Semisimple
    } else {
        Simplicity::Simple
    }
}

/// Number of idempotent factors, `k = q − r_{q−p}`.
pub fn idempotent_factors(p: usize, q: usize) -> usize {
    let k = q as i64 - radon_hurwitz(q as i64 - p as i64);
    debug_assert!(k >= 0);
    k as usize
}

/// `(p, q)`.
pub type Signature = (usize, usize);

/// Signatures with `p + q = n`, split into simple and semisimple, by decreasing `p`.
pub fn all_sigs(n: usize) -> Result<(Vec<Signature>, Vec<Signature>)> {
    if !(1..=9).contains(&n) {
        return Err(AlgebraError::InvalidDim(n));
    }
    let (mut simple, mut semi) = (Vec::new(), Vec::new());
    for p in (0..=n).rev() {
        match simplicity(p, n - p) {
            Simplicity::Simple => simple.push((p, n - p)),
            Simplicity::Semisimple => semi.push((p, n - p)),
        }
    }
    Ok((simple, semi))
}

// ---------------------------------------------------------------------------
// blade arithmetic over a diagonal signature

#[derive(Clone, Copy)]
struct Sig {
    p: usize,
    n: usize,
}

impl Sig {
    fn negative_count(self, mask: u16) -> u32 {
        (mask >> self.p).count_ones()
    }

    /// `e_A e_B = sign · e_{A △ B}`.
    fn mul_sign(self, a: Blade, b: Blade) -> i32 {
        let mut swaps = 0u32;
        for j in b.iter() {
            swaps += (a.mask() >> j).count_ones();
        }
        swaps += self.negative_count(a.mask() & b.mask());
        if swaps.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    fn square_sign(self, a: Blade) -> i32 {
        self.mul_sign(a, a)
    }

    fn omega(self) -> Blade {
        Blade::from_mask(((1u32 << self.n) - 1) as u16)
    }
}

fn commutes(a: Blade, b: Blade) -> bool {
    let common = (a.mask() & b.mask()).count_ones() as usize;
    (a.grade() * b.grade() - common).is_multiple_of(2)
}

/// Every XOR combination of `gens`.
fn span(gens: &[Blade]) -> Vec<u16> {
    let mut out = vec![0u16];
    for g in gens {
        let extra: Vec<u16> = out.iter().map(|m| m ^ g.mask()).collect();
        out.extend(extra);
    }
    out
}

fn candidates(sig: Sig, q: usize) -> Vec<Blade> {
    let mut out = Vec::new();
    for i in 0..sig.p.min(q) {
        out.push(Blade::from_mask((1 << (sig.p - i - 1)) | (1 << (sig.n - i - 1))));
    }
    out.extend((1..=sig.p).map(Blade::vector));
    out.extend(basis(sig.n).expect("valid dim").into_iter().skip(1));
    let mut seen = BTreeSet::new();
    out.retain(|b| seen.insert(b.mask()));
    out
}

fn search(sig: Sig, cands: &[Blade], start: usize, chosen: &mut Vec<Blade>, fixed: &[Blade], need: usize) -> bool {
    if chosen.len() == need {
        return true;
    }
    for i in start..cands.len() {
        let t = cands[i];
        if sig.square_sign(t) != 1 || !chosen.iter().chain(fixed).all(|&c| commutes(c, t)) {
            continue;
        }
        let gens: Vec<Blade> = chosen.iter().chain(fixed).copied().collect();
        if span(&gens).contains(&t.mask()) {
            continue;
        }
        chosen.push(t);
        if search(sig, cands, i + 1, chosen, fixed, need) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Deterministic choice of the commuting blades `T_1..T_k`.
fn select_factors(p: usize, q: usize, k: usize) -> Vec<Blade> {
    let sig = Sig { p, n: p + q };
    let cands = candidates(sig, q);
    let mut chosen = Vec::new();
    if simplicity(p, q) == Simplicity::Semisimple {
        let omega = sig.omega();
        let rest: Vec<Blade> = cands.into_iter().filter(|&b| b != omega).collect();
        let found = search(sig, &rest, 0, &mut chosen, &[omega], k - 1);
        assert!(found, "no idempotent factors for ({p},{q})");
        chosen.push(omega);
    } else {
        let found = search(sig, &cands, 0, &mut chosen, &[], k);
        assert!(found, "no idempotent factors for ({p},{q})");
    }
    chosen
}

fn half_sum(dim: usize, t: Blade, sign: i64) -> Multivector {
    let mut m = Multivector::scalar(dim, Scalar::from_ratio(1, 2));
    m.add_term(t, Scalar::from_ratio(sign, 2));
    m
}

fn product_of_factors(factors: &[Blade], form: &BilinearForm) -> Result<Multivector> {
    let dim = form.dim();
    let mut f = Multivector::id(dim);
    for &t in factors {
        f = cmul(&f, &half_sum(dim, t, 1), form, ALGO)?;
    }
    Ok(f)
}

// ---------------------------------------------------------------------------
// classification

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationData {
    pub p: usize,
    pub q: usize,
    pub field_type: FieldType,
    pub matrix_dim: usize,
    pub simplicity: Simplicity,
    /// The commuting blades `T_i` of `f = Π ½(Id + T_i)`.
    pub factors: Vec<Blade>,
    pub idempotent: Multivector,
    pub ideal_real_basis: Vec<Multivector>,
    pub division_ring_basis: Vec<Multivector>,
    pub module_basis: Vec<Multivector>,
}

/// Blade-level skeleton shared by classification and representation.
struct Skeleton {
    group: Vec<u16>,
    reps: Vec<Blade>,
    division: Vec<Blade>,
    module: Vec<Blade>,
}

impl Skeleton {
    fn build(factors: &[Blade], dim: usize) -> Skeleton {
        let group = span(factors);
        let rep = |b: u16| {
            group
                .iter()
                .map(|g| Blade::from_mask(b ^ g))
                .min()
                .expect("group contains Id")
        };
        let reps: Vec<Blade> = basis(dim)
            .expect("valid dim")
            .into_iter()
            .map(|b| rep(b.mask()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();

        let mut division: Vec<Blade> = reps
            .iter()
            .copied()
            .filter(|&r| factors.iter().all(|&t| commutes(r, t)))
            .collect();
        if division.len() == 4 {
            // keep the third unit equal to the product of the first two
            division[3] = Blade::from_mask(division[1].mask() ^ division[2].mask());
        }

        let mut covered = BTreeSet::new();
        let mut module = Vec::new();
        for &r in &reps {
            let hits: Vec<Blade> = division.iter().map(|d| rep(r.mask() ^ d.mask())).collect();
            if hits.iter().all(|h| !covered.contains(h)) {
                covered.extend(hits);
                module.push(r);
            }
        }
        Skeleton {
            group,
            reps,
            division,
            module,
        }
    }
}

fn blades_to_mv(dim: usize, blades: &[Blade]) -> Vec<Multivector> {
    blades.iter().map(|&b| Multivector::from_blade(dim, b)).collect()
}

pub fn clidata(p: usize, q: usize) -> Result<ClassificationData> {
    check_signature(p, q)?;
    let dim = p + q;
    let form = BilinearForm::signature(p, q, 0)?;
    let k = idempotent_factors(p, q);
    let factors = select_factors(p, q, k);
    let idempotent = product_of_factors(&factors, &form)?;
    let sk = Skeleton::build(&factors, dim);
    debug_assert_eq!(sk.reps.len() << factors.len(), 1 << dim);
    Ok(ClassificationData {
        p,
        q,
        field_type: field_type(p, q),
        matrix_dim: sk.module.len(),
        simplicity: simplicity(p, q),
        factors,
        idempotent,
        ideal_real_basis: blades_to_mv(dim, &sk.reps),
        division_ring_basis: blades_to_mv(dim, &sk.division),
        module_basis: blades_to_mv(dim, &sk.module),
    })
}

impl ClassificationData {
    pub fn form(&self) -> BilinearForm {
        BilinearForm::signature(self.p, self.q, 0).expect("checked signature")
    }

    pub fn k(&self) -> usize {
        self.factors.len()
    }
}

fn list(items: &[Multivector]) -> String {
    let parts: Vec<String> = items.iter().map(|m| m.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

impl fmt::Display for ClassificationData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}, {}, {}, {}]",
            self.field_type,
            self.matrix_dim,
            self.simplicity,
            self.idempotent,
            list(&self.ideal_real_basis),
            list(&self.division_ring_basis),
            list(&self.module_basis)
        )
    }
}

// ---------------------------------------------------------------------------
// matrices

/// Matrix whose entries multiply with the Clifford product of `form`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Multivector>,
    form: BilinearForm,
}

impl CliffordMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Multivector>, form: BilinearForm) -> Result<CliffordMatrix> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::MatrixShape(rows, cols, entries.len(), 1));
        }
        if let Some(bad) = entries.iter().find(|e| e.dim() != form.dim()) {
            return Err(AlgebraError::DimMismatch(bad.dim(), form.dim()));
        }
        Ok(CliffordMatrix {
            rows,
            cols,
            entries,
            form,
        })
    }

    pub fn zero(rows: usize, cols: usize, form: BilinearForm) -> CliffordMatrix {
        let entries = vec![Multivector::zero(form.dim()); rows * cols];
        CliffordMatrix {
            rows,
            cols,
            entries,
            form,
        }
    }

    pub fn identity(n: usize, form: BilinearForm) -> CliffordMatrix {
        let mut m = CliffordMatrix::zero(n, n, form);
        for i in 0..n {
            m.entries[i * n + i] = Multivector::id(m.form.dim());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Multivector {
        &self.entries[i * self.cols + j]
    }

    pub fn scale(&self, s: &Scalar) -> CliffordMatrix {
        CliffordMatrix {
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Multivector::is_zero)
    }

    pub fn rows_text(&self, render: impl Fn(&Multivector) -> String) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| render(self.get(i, j))).collect())
            .collect()
    }
}

impl fmt::Display for CliffordMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows_text(|m| m.to_string())
            .into_iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

fn same_form(a: &CliffordMatrix, b: &CliffordMatrix) -> Result<()> {
    if a.form == b.form {
        Ok(())
    } else {
        Err(AlgebraError::FormMismatch)
    }
}

pub fn cm_add(a: &CliffordMatrix, b: &CliffordMatrix) -> Result<CliffordMatrix> {
    same_form(a, b)?;
    if (a.rows, a.cols) != (b.rows, b.cols) {
        return Err(AlgebraError::MatrixShape(a.rows, a.cols, b.rows, b.cols));
    }
    let entries = a.entries.iter().zip(&b.entries).map(|(x, y)| x + y).collect();
    Ok(CliffordMatrix {
        entries,
        ..a.clone()
    })
}

pub fn cm_mul(a: &CliffordMatrix, b: &CliffordMatrix) -> Result<CliffordMatrix> {
    same_form(a, b)?;
    if a.cols != b.rows {
        return Err(AlgebraError::MatrixShape(a.rows, a.cols, b.rows, b.cols));
    }
    let mut out = CliffordMatrix::zero(a.rows, b.cols, a.form.clone());
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = Multivector::zero(a.form.dim());
            for l in 0..a.cols {
                let (x, y) = (a.get(i, l), b.get(l, j));
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                acc += cmul(x, y, &a.form, ALGO)?;
            }
            out.entries[i * b.cols + j] = acc;
        }
    }
    Ok(out)
}

/// A pair of matrices over a double field `K ⊕ K`, combined componentwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleFieldMatrix {
    pub first: CliffordMatrix,
    pub second: CliffordMatrix,
}

impl DoubleFieldMatrix {
    pub fn new(first: CliffordMatrix, second: CliffordMatrix) -> Result<DoubleFieldMatrix> {
        if (first.rows, first.cols) != (second.rows, second.cols) {
            return Err(AlgebraError::MatrixShape(first.rows, first.cols, second.rows, second.cols));
        }
        Ok(DoubleFieldMatrix { first, second })
    }

    pub fn identity(n: usize, form: BilinearForm) -> DoubleFieldMatrix {
        let i = CliffordMatrix::identity(n, form);
        DoubleFieldMatrix {
            first: i.clone(),
            second: i,
        }
    }

    pub fn scale(&self, s: &Scalar) -> DoubleFieldMatrix {
        DoubleFieldMatrix {
            first: self.first.scale(s),
            second: self.second.scale(s),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }
}

impl fmt::Display for DoubleFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

pub fn df_add(a: &DoubleFieldMatrix, b: &DoubleFieldMatrix) -> Result<DoubleFieldMatrix> {
    DoubleFieldMatrix::new(cm_add(&a.first, &b.first)?, cm_add(&a.second, &b.second)?)
}

pub fn df_mul(a: &DoubleFieldMatrix, b: &DoubleFieldMatrix) -> Result<DoubleFieldMatrix> {
    DoubleFieldMatrix::new(cm_mul(&a.first, &b.first)?, cm_mul(&a.second, &b.second)?)
}

/// Image of a generator: a single matrix, or a pair in the semisimple case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpinorMatrix {
    Single(CliffordMatrix),
    Double(DoubleFieldMatrix),
}

impl SpinorMatrix {
    pub fn mul(&self, other: &SpinorMatrix) -> Result<SpinorMatrix> {
        match (self, other) {
            (SpinorMatrix::Single(a), SpinorMatrix::Single(b)) => Ok(SpinorMatrix::Single(cm_mul(a, b)?)),
            (SpinorMatrix::Double(a), SpinorMatrix::Double(b)) => Ok(SpinorMatrix::Double(df_mul(a, b)?)),
            _ => Err(AlgebraError::FormMismatch),
        }
    }

    pub fn add(&self, other: &SpinorMatrix) -> Result<SpinorMatrix> {
        match (self, other) {
            (SpinorMatrix::Single(a), SpinorMatrix::Single(b)) => Ok(SpinorMatrix::Single(cm_add(a, b)?)),
            (SpinorMatrix::Double(a), SpinorMatrix::Double(b)) => Ok(SpinorMatrix::Double(df_add(a, b)?)),
            _ => Err(AlgebraError::FormMismatch),
        }
    }

    pub fn scale(&self, s: &Scalar) -> SpinorMatrix {
        match self {
            SpinorMatrix::Single(a) => SpinorMatrix::Single(a.scale(s)),
            SpinorMatrix::Double(a) => SpinorMatrix::Double(a.scale(s)),
        }
    }

    /// Identity of matching shape and kind.
    pub fn identity_like(&self) -> SpinorMatrix {
        match self {
            SpinorMatrix::Single(a) => SpinorMatrix::Single(CliffordMatrix::identity(a.rows, a.form.clone())),
            SpinorMatrix::Double(a) => {
                SpinorMatrix::Double(DoubleFieldMatrix::identity(a.first.rows, a.first.form.clone()))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            SpinorMatrix::Single(a) => a.is_zero(),
            SpinorMatrix::Double(a) => a.is_zero(),
        }
    }
}

impl fmt::Display for SpinorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpinorMatrix::Single(a) => a.fmt(f),
            SpinorMatrix::Double(a) => a.fmt(f),
        }
    }
}

fn coords(v: &Multivector, blades: &[Blade]) -> Result<Vec<BigRational>> {
    blades
        .iter()
        .map(|&b| v.coeff(b).as_rational().ok_or(AlgebraError::SolveFailed))
        .collect()
}

/// Matrix of `x ↦ g x` on `Cl·f` in the module basis, with entries in the division ring:
/// `g m_j f = Σ_l m_l c_lj f`.
fn left_action(
    g: &Multivector,
    sk: &Skeleton,
    f: &Multivector,
    form: &BilinearForm,
) -> Result<CliffordMatrix> {
    let dim = form.dim();
    let mut columns = Vec::new();
    for &m in &sk.module {
        for &d in &sk.division {
            let md = cmul(
                &Multivector::from_blade(dim, m),
                &Multivector::from_blade(dim, d),
                form,
                ALGO,
            )?;
            columns.push(cmul(&md, f, form, ALGO)?);
        }
    }
    let mut support = BTreeSet::new();
    for c in &columns {
        support.extend(c.terms().map(|(b, _)| *b));
    }
    let mut targets = Vec::new();
    for &m in &sk.module {
        let t = cmul(&cmul(g, &Multivector::from_blade(dim, m), form, ALGO)?, f, form, ALGO)?;
        support.extend(t.terms().map(|(b, _)| *b));
        targets.push(t);
    }
    let support: Vec<Blade> = support.into_iter().collect();
    let col_coords = columns
        .iter()
        .map(|c| coords(c, &support))
        .collect::<Result<Vec<_>>>()?;
    let a: Vec<Vec<BigRational>> = (0..support.len())
        .map(|r| col_coords.iter().map(|c| c[r].clone()).collect())
        .collect();

    let n = sk.module.len();
    let nd = sk.division.len();
    let mut entries = vec![Multivector::zero(dim); n * n];
    for (j, t) in targets.iter().enumerate() {
        let x = linalg::solve(&a, &coords(t, &support)?).ok_or(AlgebraError::SolveFailed)?;
        for l in 0..n {
            let mut entry = Multivector::zero(dim);
            for (di, &d) in sk.division.iter().enumerate() {
                let c = &x[l * nd + di];
                if !c.is_zero() {
                    entry.add_term(d, Scalar::from_rational(c.clone()));
                }
            }
            entries[l * n + j] = entry;
        }
    }
    CliffordMatrix::new(n, n, entries, form.clone())
}

/// Spinor representation of every generator `e_i` of `Cl(p,q)`.
#[allow(non_snake_case)]
pub fn matKrepr(p: usize, q: usize) -> Result<Vec<(Multivector, SpinorMatrix)>> {
    check_signature(p, q)?;
    let data = clidata(p, q)?;
    let dim = p + q;
    let form = data.form();
    let sk = Skeleton::build(&data.factors, dim);
    debug_assert!(sk.group.len() == 1 << data.factors.len());
    let mut out = Vec::with_capacity(dim);
    match data.simplicity {
        Simplicity::Simple => {
            for i in 1..=dim {
                let g = Multivector::e(dim, i);
                let m = left_action(&g, &sk, &data.idempotent, &form)?;
                out.push((g, SpinorMatrix::Single(m)));
            }
        }
        Simplicity::Semisimple => {
            let (&omega, rest) = data.factors.split_last().expect("k >= 1");
            let base = product_of_factors(rest, &form)?;
            let f_plus = cmul(&base, &half_sum(dim, omega, 1), &form, ALGO)?;
            let f_minus = cmul(&base, &half_sum(dim, omega, -1), &form, ALGO)?;
            for i in 1..=dim {
                let g = Multivector::e(dim, i);
                let pair = DoubleFieldMatrix::new(
                    left_action(&g, &sk, &f_plus, &form)?,
                    left_action(&g, &sk, &f_minus, &form)?,
                )?;
                out.push((g, SpinorMatrix::Double(pair)));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::product::ProductAlgorithm;

    fn e(dim: usize, idx: &[usize]) -> Multivector {
        Multivector::blade(dim, idx).unwrap()
    }

    fn ids(dim: usize, list: &[&[usize]]) -> Vec<Multivector> {
        list.iter().map(|l| e(dim, l)).collect()
    }

    fn cm(rows: Vec<Vec<Multivector>>, form: &BilinearForm) -> SpinorMatrix {
        let n = rows.len();
        SpinorMatrix::Single(CliffordMatrix::new(n, n, rows.into_iter().flatten().collect(), form.clone()).unwrap())
    }

    #[test]
    fn radon_hurwitz_values() {
        assert_eq!(radon_hurwitz(-2), -1);
        assert_eq!(radon_hurwitz(2), 2);
        assert_eq!(radon_hurwitz(8), 4);
        assert_eq!(radon_hurwitz(0), 0);
        assert_eq!(radon_hurwitz(-8), -4);
        assert_eq!(idempotent_factors(2, 0), 1);
        assert_eq!(idempotent_factors(1, 3), 1);
    }

    #[test]
    fn clidata_2_0() {
        let d = clidata(2, 0).unwrap();
        assert_eq!(d.to_string(), "[real, 2, simple, 1/2*Id+1/2*e1, [Id, e2], [Id], [Id, e2]]");
    }

    #[test]
    fn clidata_3_0() {
        let d = clidata(3, 0).unwrap();
        assert_eq!(d.field_type, FieldType::Complex);
        assert_eq!(d.matrix_dim, 2);
        assert_eq!(d.idempotent.to_string(), "1/2*Id+1/2*e1");
        assert_eq!(d.ideal_real_basis, ids(3, &[&[], &[2], &[3], &[2, 3]]));
        assert_eq!(d.division_ring_basis, ids(3, &[&[], &[2, 3]]));
        assert_eq!(d.module_basis, ids(3, &[&[], &[2]]));
    }

    #[test]
    fn clidata_1_3() {
        let d = clidata(1, 3).unwrap();
        assert_eq!(d.field_type, FieldType::Quaternionic);
        assert_eq!(d.matrix_dim, 2);
        assert_eq!(d.simplicity, Simplicity::Simple);
        assert_eq!(d.idempotent.to_string(), "1/2*Id+1/2*e1we4");
        assert_eq!(
            d.ideal_real_basis,
            ids(4, &[&[], &[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]])
        );
        assert_eq!(d.division_ring_basis, ids(4, &[&[], &[2], &[3], &[2, 3]]));
        assert_eq!(d.module_basis, ids(4, &[&[], &[1]]));
    }

    #[test]
    fn degenerate_k_zero() {
        let d = clidata(0, 2).unwrap();
        assert_eq!(d.idempotent, Multivector::id(2));
        assert_eq!(d.division_ring_basis.len(), 4);
        assert_eq!(d.matrix_dim, 1);
    }

    #[test]
    fn semisimple_dimensions() {
        let d = clidata(2, 1).unwrap();
        assert_eq!(d.simplicity, Simplicity::Semisimple);
        assert_eq!(d.field_type, FieldType::RealDouble);
        assert_eq!(d.matrix_dim, 2);
        let d = clidata(1, 0).unwrap();
        assert_eq!(d.matrix_dim, 1);
    }

    #[test]
    fn all_sigs_examples() {
        let (simple, semi) = all_sigs(2).unwrap();
        assert_eq!(simple, vec![(2, 0), (1, 1), (0, 2)]);
        assert!(semi.is_empty());
        assert!(all_sigs(1).unwrap().1.contains(&(1, 0)));
        assert!(all_sigs(3).unwrap().1.contains(&(2, 1)));
        assert!(all_sigs(10).is_err());
    }

    #[test]
    fn repr_2_0_and_3_0() {
        let form = BilinearForm::signature(3, 0, 0).unwrap();
        let r = matKrepr(3, 0).unwrap();
        let z = Multivector::zero(3);
        let one = Multivector::id(3);
        let e23 = e(3, &[2, 3]);
        assert_eq!(r[0].1, cm(vec![vec![one.clone(), z.clone()], vec![z.clone(), -one.clone()]], &form));
        assert_eq!(r[1].1, cm(vec![vec![z.clone(), one.clone()], vec![one.clone(), z.clone()]], &form));
        assert_eq!(r[2].1, cm(vec![vec![z.clone(), -e23.clone()], vec![e23, z]], &form));

        let form2 = BilinearForm::signature(2, 0, 0).unwrap();
        let r2 = matKrepr(2, 0).unwrap();
        let (z, one) = (Multivector::zero(2), Multivector::id(2));
        assert_eq!(r2[0].1, cm(vec![vec![one.clone(), z.clone()], vec![z.clone(), -one.clone()]], &form2));
        assert_eq!(r2[1].1, cm(vec![vec![z.clone(), one.clone()], vec![one, z]], &form2));
    }

    #[test]
    fn repr_1_3() {
        let form = BilinearForm::signature(1, 3, 0).unwrap();
        let r = matKrepr(1, 3).unwrap();
        let z = Multivector::zero(4);
        let one = Multivector::id(4);
        let (e2, e3) = (e(4, &[2]), e(4, &[3]));
        assert_eq!(r[0].1, cm(vec![vec![z.clone(), one.clone()], vec![one.clone(), z.clone()]], &form));
        assert_eq!(r[1].1, cm(vec![vec![e2.clone(), z.clone()], vec![z.clone(), -e2]], &form));
        assert_eq!(r[2].1, cm(vec![vec![e3.clone(), z.clone()], vec![z.clone(), -e3]], &form));
        assert_eq!(r[3].1, cm(vec![vec![z.clone(), -one.clone()], vec![one, z]], &form));
    }

    #[test]
    fn pauli_relations() {
        let r = matKrepr(3, 0).unwrap();
        let (m1, m2, m3) = (&r[0].1, &r[1].1, &r[2].1);
        assert!(m1.mul(m2).unwrap().add(&m2.mul(m1).unwrap()).unwrap().is_zero());
        assert_eq!(m3.mul(m3).unwrap(), m3.identity_like());
    }

    #[test]
    fn semisimple_relations_2_1() {
        let r = matKrepr(2, 1).unwrap();
        let g = [1i64, 1, -1];
        for i in 0..3 {
            for j in 0..3 {
                let (a, b) = (&r[i].1, &r[j].1);
                let lhs = a.mul(b).unwrap().add(&b.mul(a).unwrap()).unwrap();
                let two_g = if i == j { 2 * g[i] } else { 0 };
                assert_eq!(lhs, a.identity_like().scale(&Scalar::from_int(two_g)));
            }
        }
    }

    #[test]
    fn idempotent_matches_general_product() {
        let d = clidata(2, 2).unwrap();
        let form = d.form();
        let f = &d.idempotent;
        assert_eq!(cmul(f, f, &form, ProductAlgorithm::RotaStein).unwrap(), *f);
    }

    #[test]
    fn diagonal_sign_rule_matches_cmul() {
        let sig = Sig { p: 2, n: 4 };
        let form = BilinearForm::signature(2, 2, 0).unwrap();
        for &a in &basis(4).unwrap() {
            for &b in &basis(4).unwrap() {
                let expect = cmul(
                    &Multivector::from_blade(4, a),
                    &Multivector::from_blade(4, b),
                    &form,
                    ProductAlgorithm::RotaStein,
                )
                .unwrap();
                let got = Multivector::term(
                    4,
                    Blade::from_mask(a.mask() ^ b.mask()),
                    Scalar::from_int(sig.mul_sign(a, b) as i64),
                );
                assert_eq!(got, expect);
            }
        }
    }

    #[test]
    fn matrix_shape_errors() {
        let form = BilinearForm::signature(2, 0, 0).unwrap();
        let a = CliffordMatrix::identity(2, form.clone());
        let b = CliffordMatrix::identity(3, form.clone());
        assert!(cm_mul(&a, &b).is_err());
        assert!(cm_add(&a, &b).is_err());
        let other = CliffordMatrix::identity(2, BilinearForm::signature(1, 1, 0).unwrap());
        assert_eq!(cm_mul(&a, &other), Err(AlgebraError::FormMismatch));
        let id = DoubleFieldMatrix::identity(2, form.clone());
        let x = DoubleFieldMatrix::new(a.clone(), a.scale(&Scalar::from_int(3))).unwrap();
        assert_eq!(df_mul(&id, &x).unwrap(), x);
        let zero = DoubleFieldMatrix::new(CliffordMatrix::zero(2, 2, form.clone()), CliffordMatrix::zero(2, 2, form)).unwrap();
        assert_eq!(df_add(&x, &zero).unwrap(), x);
    }

    #[test]
    fn out_of_range_signature() {
        assert!(clidata(0, 0).is_err());
        assert!(clidata(5, 5).is_err());
    }
}
