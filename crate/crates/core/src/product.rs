//! Clifford products of an arbitrary bilinear form.
//!
//! Two blade-level algorithms are provided and must agree exactly:
//!
//! * [`cmul_num`], the recursive Chevalley deformation: split the last
//!   generator off the left factor, apply the Clifford map, and subtract
//!   the right-contraction correction.
//! * [`cmul_rs`], the non-recursive Rota–Stein cliffordization: enumerate
//!   the complementary splits of both index sets, weight each cross term by
//!   the extended form `cup` (a determinant), and wedge the outer parts.
//!
//! [`cmul`] extends either one bilinearly to polynomials.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::bform::BilinearForm;
use crate::error::{AlgebraError, Result};
use crate::multivector::{grade_reversion, wedge, wedge_sign, Blade, Multivector};
use crate::scalar::Scalar;

/// Selects the blade-level Clifford product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ProductAlgorithm {
    ChevalleyRecursive,
    #[default]
    RotaStein,
}

impl ProductAlgorithm {
    pub fn short_name(self) -> &'static str {
        match self {
            ProductAlgorithm::ChevalleyRecursive => "num",
            ProductAlgorithm::RotaStein => "rs",
        }
    }
}

impl fmt::Display for ProductAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductAlgorithm::ChevalleyRecursive => "cmulNUM",
            ProductAlgorithm::RotaStein => "cmulRS",
        })
    }
}

impl FromStr for ProductAlgorithm {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "num" | "cmulnum" | "chevalley" => Ok(ProductAlgorithm::ChevalleyRecursive),
            "rs" | "cmulrs" | "rota-stein" | "rotastein" => Ok(ProductAlgorithm::RotaStein),
            other => Err(format!("unknown product algorithm `{other}` (expected num or rs)")),
        }
    }
}

fn check_form(u: &Multivector, b: &BilinearForm) -> Result<()> {
    if u.dim() == b.dim() {
        Ok(())
    } else {
        Err(AlgebraError::DimMismatch(u.dim(), b.dim()))
    }
}

fn check_blade(dim: usize, b: Blade) -> Result<()> {
    if b.fits(dim) {
        Ok(())
    } else {
        Err(AlgebraError::IndexOutOfRange {
            index: b.top_index(),
            dim,
        })
    }
}

// ---------------------------------------------------------------------------
// contractions

/// `e_x ⌋ e_S = Σ_k (−1)^{k−1} B(x, s_k) e_{S∖s_k}`
fn lc_vector_blade(x: usize, s: Blade, b: &BilinearForm, out: &mut Multivector, coeff: &Scalar) {
    for (k, idx) in s.iter().enumerate() {
        let entry = b.get(x, idx);
        if entry.is_zero() {
            continue;
        }
        let c = coeff * entry;
        out.add_term(s.without(idx), if k % 2 == 0 { c } else { -c });
    }
}

/// `e_S ⌊ e_y = Σ_k (−1)^{m−k} B(s_k, y) e_{S∖s_k}`, with `m = |S|`.
fn rc_blade_vector(s: Blade, y: usize, b: &BilinearForm, out: &mut Multivector, coeff: &Scalar) {
    let m = s.grade();
    for (k, idx) in s.iter().enumerate() {
        let entry = b.get(idx, y);
        if entry.is_zero() {
            continue;
        }
        let c = coeff * entry;
        out.add_term(s.without(idx), if (m - 1 - k).is_multiple_of(2) { c } else { -c });
    }
}

/// `e_x ⌋ u` for a single generator.
fn lc_vector(x: usize, u: &Multivector, b: &BilinearForm) -> Multivector {
    let mut out = Multivector::zero(u.dim());
    for (s, c) in u.terms() {
        lc_vector_blade(x, *s, b, &mut out, c);
    }
    out
}

fn rc_vector(u: &Multivector, y: usize, b: &BilinearForm) -> Multivector {
    let mut out = Multivector::zero(u.dim());
    for (s, c) in u.terms() {
        rc_blade_vector(*s, y, b, &mut out, c);
    }
    out
}

/// Left contraction `e_A ⌋ u`, reducing the left blade with `(a ∧ w) ⌋ v = a ⌋ (w ⌋ v)`.
fn lc_blade(a: Blade, u: &Multivector, b: &BilinearForm) -> Multivector {
    let mut acc = u.clone();
    let idx = a.indices();
    for &x in idx.iter().rev() {
        if acc.is_zero() {
            break;
        }
        acc = lc_vector(x, &acc, b);
    }
    acc
}

/// Left contraction `u ⌋_B v`.
pub fn lc(u: &Multivector, v: &Multivector, b: &BilinearForm) -> Result<Multivector> {
    u.check_same_dim(v)?;
    check_form(u, b)?;
    let mut out = Multivector::zero(u.dim());
    for (a, c) in u.terms() {
        out.add_scaled(c, &lc_blade(*a, v, b));
    }
    Ok(out)
}

/// Right contraction `u ⌊_B v`, reducing the right blade with `u ⌊ (v ∧ w) = (u ⌊ v) ⌊ w`.
pub fn rc(u: &Multivector, v: &Multivector, b: &BilinearForm) -> Result<Multivector> {
    u.check_same_dim(v)?;
    check_form(u, b)?;
    let mut out = Multivector::zero(u.dim());
    for (bl, c) in v.terms() {
        let mut acc = u.clone();
        for y in bl.iter() {
            if acc.is_zero() {
                break;
            }
            acc = rc_vector(&acc, y, b);
        }
        out.add_scaled(c, &acc);
    }
    Ok(out)
}

/// Chevalley's Clifford map `γ_x(u) = x ⌋_B u + x ∧ u`.
pub fn clifford_map(x: &Multivector, u: &Multivector, b: &BilinearForm) -> Result<Multivector> {
    if x.terms().any(|(bl, _)| bl.grade() != 1) {
        return Err(AlgebraError::NotGradeOne);
    }
    Ok(lc(x, u, b)? + wedge(x, u)?)
}

// ---------------------------------------------------------------------------
// recursive product

/// Clifford product of two basis monomials by Chevalley recursion.
pub fn cmul_num(a: Blade, b: Blade, form: &BilinearForm) -> Result<Multivector> {
    let dim = form.dim();
    check_blade(dim, a)?;
    check_blade(dim, b)?;
    Ok(num_rec(a, b, form))
}

fn num_rec(a: Blade, b: Blade, form: &BilinearForm) -> Multivector {
    let dim = form.dim();
    if b.is_id() {
        return Multivector::from_blade(dim, a);
    }
    if a.is_id() {
        return Multivector::from_blade(dim, b);
    }
    let l = a.indices();
    match l.len() {
        1 => {
            // e_x b = e_x ∧ b + e_x ⌋ b
            let x = l[0];
            let mut out = Multivector::zero(dim);
            let s = wedge_sign(a, b);
            if s != 0 {
                out.add_term(Blade::from_mask(a.mask() | b.mask()), Scalar::from_int(s as i64));
            }
            lc_vector_blade(x, b, form, &mut out, &Scalar::one());
            out
        }
        2 => {
            // (e1 ∧ e2) b = e1 (e2 b) − B(e1,e2) b
            let x1 = Blade::vector(l[0]);
            let x2 = Blade::vector(l[1]);
            let p2 = num_rec(x2, b, form);
            let mut s = num_bilinear(x1, &p2, form);
            let entry = form.get(l[0], l[1]);
            if !entry.is_zero() {
                s.add_term(b, -entry);
            }
            s
        }
        n => {
            // (p1 ∧ e_c) b = p1 (e_c b) − (p1 ⌊ e_c) b
            let c = l[n - 1];
            let p1 = a.without(c);
            let p2 = num_rec(Blade::vector(c), b, form);
            let mut s = num_bilinear(p1, &p2, form);
            for i in 2..=n {
                let li = l[n - i];
                let entry = form.get(li, c);
                if entry.is_zero() {
                    continue;
                }
                let sub = num_rec(p1.without(li), b, form);
                let coeff = if i % 2 == 0 { -entry } else { entry.clone() };
                s.add_scaled(&coeff, &sub);
            }
            s
        }
    }
}

fn num_bilinear(a: Blade, v: &Multivector, form: &BilinearForm) -> Multivector {
    let mut out = Multivector::zero(form.dim());
    for (bl, c) in v.terms() {
        out.add_scaled(c, &num_rec(a, *bl, form));
    }
    out
}

// ---------------------------------------------------------------------------
// Rota–Stein cliffordization

/// Extended form on index lists: the determinant of `[B(x_i, y_j)]` by Laplace expansion
/// along the first row; 0 for lengths that differ.
pub fn cup(x: &[usize], y: &[usize], form: &BilinearForm) -> Result<Scalar> {
    let dim = form.dim();
    if let Some(&bad) = x.iter().chain(y).find(|&&i| !(1..=dim).contains(&i)) {
        return Err(AlgebraError::IndexOutOfRange { index: bad, dim });
    }
    Ok(cup_rec(x, y, form))
}

fn cup_rec(x: &[usize], y: &[usize], form: &BilinearForm) -> Scalar {
    if x.len() != y.len() {
        return Scalar::zero();
    }
    match x.len() {
        0 => Scalar::one(),
        1 => form.get(x[0], y[0]).clone(),
        n => {
            let mut sum = Scalar::zero();
            let mut rest = Vec::with_capacity(n - 1);
            for j in 0..n {
                rest.clear();
                rest.extend(y[..j].iter().chain(&y[j + 1..]));
                let minor = cup_rec(&x[1..], &rest, form);
                let term = form.get(x[0], y[j]) * &minor;
                if j % 2 == 0 {
                    sum += term;
                } else {
                    sum -= &term;
                }
            }
            sum
        }
    }
}

/// Power set of `{1..n}` as local bitmasks, sorted by grade then lexicographically,
/// with the sign `(−1)^{Σ_j (s_j − j)}` of moving each subset to the front.
/// Entry `i` and entry `2^n − 1 − i` are complementary.
struct PowerSet {
    sets: Vec<u16>,
    signs: Vec<i32>,
}

impl PowerSet {
    fn new(n: usize) -> PowerSet {
        let mut sets: Vec<u16> = (0..(1u16 << n)).collect();
        sets.sort_by_key(|&m| Blade::from_mask(m));
        let signs = sets
            .iter()
            .map(|&m| {
                let shift: usize = Blade::from_mask(m)
                    .iter()
                    .enumerate()
                    .map(|(j, s)| s - (j + 1))
                    .sum();
                if shift.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            })
            .collect();
        PowerSet { sets, signs }
    }
}

/// Maps a local subset mask of positions `{1..n}` onto the actual indices.
fn lift(local: u16, indices: &[usize]) -> u16 {
    let mut mask = 0u16;
    for pos in Blade::from_mask(local).iter() {
        mask |= 1 << (indices[pos - 1] - 1);
    }
    mask
}

fn lift_list(local: u16, indices: &[usize]) -> Vec<usize> {
    Blade::from_mask(local).iter().map(|p| indices[p - 1]).collect()
}

/// Clifford product of two basis monomials by Rota–Stein cliffordization:
/// `x y = Σ ± (x₍₁₎ ∧ y₍₂₎) · cup(x₍₂₎, y₍₁₎)`.
pub fn cmul_rs(a: Blade, b: Blade, form: &BilinearForm) -> Result<Multivector> {
    let dim = form.dim();
    check_blade(dim, a)?;
    check_blade(dim, b)?;
    Ok(rs_blades(a, b, form))
}

fn rs_blades(a: Blade, b: Blade, form: &BilinearForm) -> Multivector {
    let dim = form.dim();
    if a.is_id() {
        return Multivector::from_blade(dim, b);
    }
    if b.is_id() {
        return Multivector::from_blade(dim, a);
    }
    let lstx = a.indices();
    let lsty = b.indices();
    let (nx, ny) = (lstx.len(), lsty.len());
    let psetx = PowerSet::new(nx);
    let psety = PowerSet::new(ny);
    let (pnx, pny) = (psetx.sets.len(), psety.sets.len());

    // start of each grade block in the grade-sorted power set of y
    let mut y_block = vec![0usize; ny + 2];
    for g in 0..=ny {
        y_block[g + 1] = y_block[g] + binomial(ny, g);
    }

    let mut res = Multivector::zero(dim);
    let mut inner_x = Vec::with_capacity(nx);
    for n in 0..pnx {
        let outer_x = lift(psetx.sets[n], &lstx);
        let cx = psetx.sets[pnx - 1 - n];
        let k = cx.count_ones() as usize;
        if k > ny {
            continue;
        }
        // innermost factors pair first: x₍₂₎ is read back to front
        inner_x.clear();
        inner_x.extend(lift_list(cx, &lstx).into_iter().rev());
        for m in y_block[k]..y_block[k + 1] {
            let outer_y = lift(psety.sets[pny - 1 - m], &lsty);
            let ws = wedge_sign(Blade::from_mask(outer_x), Blade::from_mask(outer_y));
            if ws == 0 {
                continue;
            }
            let inner_y = lift_list(psety.sets[m], &lsty);
            let c = cup_rec(&inner_x, &inner_y, form);
            if c.is_zero() {
                continue;
            }
            let sign = psetx.signs[n] * psety.signs[m] * ws;
            res.add_term(
                Blade::from_mask(outer_x | outer_y),
                if sign > 0 { c } else { -c },
            );
        }
    }
    res
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

// ---------------------------------------------------------------------------
// polynomial products

pub fn cmul_blades(a: Blade, b: Blade, form: &BilinearForm, algo: ProductAlgorithm) -> Result<Multivector> {
    match algo {
        ProductAlgorithm::ChevalleyRecursive => cmul_num(a, b, form),
        ProductAlgorithm::RotaStein => cmul_rs(a, b, form),
    }
}

/// Clifford product of two polynomials, bilinear over the selected blade algorithm.
pub fn cmul(u: &Multivector, v: &Multivector, form: &BilinearForm, algo: ProductAlgorithm) -> Result<Multivector> {
    u.check_same_dim(v)?;
    check_form(u, form)?;
    let mut out = Multivector::zero(u.dim());
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let prod = match algo {
                ProductAlgorithm::ChevalleyRecursive => num_rec(*a, *b, form),
                ProductAlgorithm::RotaStein => rs_blades(*a, *b, form),
            };
            out.add_scaled(&(ca * cb), &prod);
        }
    }
    Ok(out)
}

/// Left fold of [`cmul`].
pub fn cmul_n(args: &[Multivector], form: &BilinearForm, algo: ProductAlgorithm) -> Result<Multivector> {
    let (first, rest) = args.split_first().ok_or(AlgebraError::EmptyArguments)?;
    check_form(first, form)?;
    rest.iter().try_fold(first.clone(), |acc, x| cmul(&acc, x, form, algo))
}

/// Clifford reversion with respect to `form`: the anti-automorphism fixing `Id`
/// and the generators. For a symmetric form it equals the grade sign
/// `(−1)^{k(k−1)/2}`; otherwise lower-grade terms appear.
pub fn reversion(u: &Multivector, form: &BilinearForm) -> Result<Multivector> {
    check_form(u, form)?;
    if form.is_symmetric() {
        return Ok(grade_reversion(u));
    }
    let mut memo = HashMap::new();
    let mut out = Multivector::zero(u.dim());
    for (b, c) in u.terms() {
        out.add_scaled(c, &rev_blade(*b, form, &mut memo));
    }
    Ok(out)
}

// e_S = e_i ∧ e_S' = e_i e_S' − e_i ⌋ e_S'  ⇒  rev(e_S) = rev(e_S') e_i − rev(e_i ⌋ e_S')
fn rev_blade(s: Blade, form: &BilinearForm, memo: &mut HashMap<Blade, Multivector>) -> Multivector {
    let dim = form.dim();
    if s.grade() <= 1 {
        return Multivector::from_blade(dim, s);
    }
    if let Some(hit) = memo.get(&s) {
        return hit.clone();
    }
    let i = s.iter().next().unwrap();
    let tail = s.without(i);
    let rev_tail = rev_blade(tail, form, memo);
    let mut out = Multivector::zero(dim);
    for (b, c) in rev_tail.terms() {
        out.add_scaled(c, &rs_blades(*b, Blade::vector(i), form));
    }
    let mut contracted = Multivector::zero(dim);
    lc_vector_blade(i, tail, form, &mut contracted, &Scalar::one());
    for (b, c) in contracted.terms() {
        let r = rev_blade(*b, form, memo);
        out.add_scaled(&-c, &r);
    }
    memo.insert(s, out.clone());
    out
}
