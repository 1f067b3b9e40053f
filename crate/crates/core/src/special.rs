//! Quaternions, and octonions multiplied through an oriented Fano plane.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{AlgebraError, Result};
use crate::multivector::{Blade, Multivector};
use crate::scalar::Scalar;

/// `w + x i + y j + z k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: Scalar,
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
}

impl Quaternion {
    pub fn new(w: Scalar, x: Scalar, y: Scalar, z: Scalar) -> Quaternion {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::new(w.into(), x.into(), y.into(), z.into())
    }

    pub fn one() -> Quaternion {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Quaternion {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Quaternion {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Quaternion {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn scalar(s: Scalar) -> Quaternion {
        Quaternion::new(s, Scalar::zero(), Scalar::zero(), Scalar::zero())
    }
}

/// Hamilton product.
pub fn q_mul(a: &Quaternion, b: &Quaternion) -> Quaternion {
    let m = |x: &Scalar, y: &Scalar| x * y;
    Quaternion {
        w: m(&a.w, &b.w) - m(&a.x, &b.x) - m(&a.y, &b.y) - m(&a.z, &b.z),
        x: m(&a.w, &b.x) + m(&a.x, &b.w) + m(&a.y, &b.z) - m(&a.z, &b.y),
        y: m(&a.w, &b.y) - m(&a.x, &b.z) + m(&a.y, &b.w) + m(&a.z, &b.x),
        z: m(&a.w, &b.z) + m(&a.x, &b.y) - m(&a.y, &b.x) + m(&a.z, &b.w),
    }
}

pub fn q_conj(a: &Quaternion) -> Quaternion {
    Quaternion::new(a.w.clone(), -&a.x, -&a.y, -&a.z)
}

pub fn q_norm(a: &Quaternion) -> Scalar {
    a.w.pow(2) + a.x.pow(2) + a.y.pow(2) + a.z.pow(2)
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, [&self.w, &self.x, &self.y, &self.z].into_iter().zip(["1", "i", "j", "k"]))
    }
}

fn write_combination<'a>(
    f: &mut fmt::Formatter<'_>,
    parts: impl Iterator<Item = (&'a Scalar, &'a str)>,
) -> fmt::Result {
    let mut out = String::new();
    for (c, name) in parts {
        if c.is_zero() {
            continue;
        }
        let term = if name == "1" {
            c.to_string()
        } else {
            crate::multivector::render_term(c, name)
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    f.write_str(&out)
}

// ---------------------------------------------------------------------------
// octonions

/// Seven oriented lines of the Fano plane; `(a,b,c)` means `o_a o_b = o_c`
/// and its cyclic shifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoTripleSet {
    triples: [[usize; 3]; 7],
    // products[i][j] = (sign, index) for imaginary units 1..7
    products: [[(i8, u8); 8]; 8],
}

pub const DEFAULT_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 6, 5],
];

impl FanoTripleSet {
    pub fn new(triples: [[usize; 3]; 7]) -> Result<FanoTripleSet> {
        let mut seen = [[false; 8]; 8];
        for t in &triples {
            if t.iter().any(|&i| !(1..=7).contains(&i)) || t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(AlgebraError::InvalidTriples(format!("bad triple {t:?}")));
            }
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                if seen[a][b] {
                    return Err(AlgebraError::InvalidTriples(format!("pair ({a},{b}) lies on two lines")));
                }
                seen[a][b] = true;
                seen[b][a] = true;
            }
        }
        let mut products = [[(0i8, 0u8); 8]; 8];
        #[allow(clippy::needless_range_loop)]
        for i in 0..8 {
            products[0][i] = (1, i as u8);
            products[i][0] = (1, i as u8);
        }
        for (i, row) in products.iter_mut().enumerate().skip(1) {
            row[i] = (-1, 0);
        }
        for t in &triples {
            for r in 0..3 {
                let (a, b, c) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
                products[a][b] = (1, c as u8);
                products[b][a] = (-1, c as u8);
            }
        }
        Ok(FanoTripleSet { triples, products })
    }

    /// Parses `"1,2,3;1,4,5;..."`.
    pub fn parse(s: &str) -> Result<FanoTripleSet> {
        let bad = |msg: String| AlgebraError::InvalidTriples(msg);
        let lines: Vec<&str> = s.split(';').map(str::trim).filter(|l| !l.is_empty()).collect();
        if lines.len() != 7 {
            return Err(bad(format!("expected 7 triples, found {}", lines.len())));
        }
        let mut triples = [[0usize; 3]; 7];
        for (t, line) in triples.iter_mut().zip(&lines) {
            let nums: Vec<usize> = line
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad(format!("not an index list: `{line}`"))))
                .collect::<Result<_>>()?;
            if nums.len() != 3 {
                return Err(bad(format!("triple `{line}` does not have three entries")));
            }
            t.copy_from_slice(&nums);
        }
        FanoTripleSet::new(triples)
    }

    pub fn triples(&self) -> &[[usize; 3]; 7] {
        &self.triples
    }

    /// `o_i o_j = sign · o_k`, with index 0 the unit.
    pub fn unit_product(&self, i: usize, j: usize) -> (i8, usize) {
        let (s, k) = self.products[i][j];
        (s, k as usize)
    }
}

impl Default for FanoTripleSet {
    fn default() -> Self {
        FanoTripleSet::new(DEFAULT_TRIPLES).expect("default triples form a Fano plane")
    }
}

/// `o_0 + o_1 o1 + … + o_7 o7`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Octonion(pub [Scalar; 8]);

impl Octonion {
    pub fn zero() -> Octonion {
        Octonion(std::array::from_fn(|_| Scalar::zero()))
    }

    pub fn one() -> Octonion {
        Octonion::unit(0)
    }

    /// `o_i`, with `unit(0)` the identity.
    pub fn unit(i: usize) -> Octonion {
        let mut o = Octonion::zero();
        o.0[i] = Scalar::one();
        o
    }

    pub fn from_ints(c: [i64; 8]) -> Octonion {
        Octonion(c.map(Scalar::from_int))
    }

    /// The paravector `o_0 Id + Σ o_i e_i` of `Cl(0,7)`.
    pub fn to_paravector(&self) -> Multivector {
        let mut m = Multivector::scalar(7, self.0[0].clone());
        for i in 1..8 {
            m.add_term(Blade::vector(i), self.0[i].clone());
        }
        m
    }

    pub fn from_paravector(m: &Multivector) -> Result<Octonion> {
        if m.dim() != 7 {
            return Err(AlgebraError::DimMismatch(m.dim(), 7));
        }
        let mut o = Octonion::zero();
        for (b, c) in m.terms() {
            if b.grade() > 1 {
                return Err(AlgebraError::GradeOutOfRange { grade: b.grade(), dim: 1 });
            }
            o.0[b.top_index()] = c.clone();
        }
        Ok(o)
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(std::array::from_fn(|i| -&self.0[i]))
    }
}

pub fn o_mul(a: &Octonion, b: &Octonion, triples: &FanoTripleSet) -> Octonion {
    let mut out = Octonion::zero();
    for i in 0..8 {
        if a.0[i].is_zero() {
            continue;
        }
        for j in 0..8 {
            if b.0[j].is_zero() {
                continue;
            }
            let (s, k) = triples.unit_product(i, j);
            let c = &a.0[i] * &b.0[j];
            if s > 0 {
                out.0[k] += c;
            } else {
                out.0[k] -= &c;
            }
        }
    }
    out
}

pub fn o_conj(a: &Octonion) -> Octonion {
    let mut out = -a;
    out.0[0] = a.0[0].clone();
    out
}

pub fn o_norm(a: &Octonion) -> Scalar {
    a.0.iter().fold(Scalar::zero(), |acc, c| acc + c.pow(2))
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 8] = ["1", "o1", "o2", "o3", "o4", "o5", "o6", "o7"];
        write_combination(f, self.0.iter().zip(NAMES))
    }
}

/// `±o_k` entry of the multiplication table; `unit == 0` is the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedUnit {
    pub sign: i8,
    pub unit: usize,
}

impl fmt::Display for SignedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        if self.unit == 0 {
            write!(f, "{sign}1")
        } else {
            write!(f, "{sign}o{}", self.unit)
        }
    }
}

/// Signed products of `{1, o1..o7}`; row is the left factor.
pub fn omultable(triples: &FanoTripleSet) -> [[SignedUnit; 8]; 8] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (sign, unit) = triples.unit_product(i, j);
            SignedUnit { sign, unit }
        })
    })
}
