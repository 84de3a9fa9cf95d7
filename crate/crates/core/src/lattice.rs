//! The odd unimodular lattice I^{1,6} = Z e0 + ... + Z e6 with the intersection
//! form diag(1, -1, ..., -1), the hyperplane class and its 72 roots.
//!
//! Everything here is integer arithmetic. Roots are the classes of square -2
//! orthogonal to the hyperplane class; with this sign convention they form an
//! E6 root system whose simple roots pair to +1 along Dynkin edges.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{AtlasError, Result};

pub const RANK: usize = 7;

/// Coefficients of a divisor class in the basis e0, e1, ..., e6.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct LatticeVector(pub [i64; RANK]);

impl LatticeVector {
    pub const ZERO: Self = Self([0; RANK]);

    pub fn new(coords: [i64; RANK]) -> Self {
        Self(coords)
    }

    /// The basis vector e_i.
    pub fn basis(i: usize) -> Self {
        let mut c = [0; RANK];
        c[i] = 1;
        Self(c)
    }

    pub fn coords(&self) -> &[i64; RANK] {
        &self.0
    }

    pub fn pair(&self, other: &Self) -> i64 {
        pair(self, other)
    }

    pub fn square(&self) -> i64 {
        pair(self, self)
    }
}

impl Add for LatticeVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for LatticeVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for LatticeVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|c| -c))
    }
}

impl Mul<LatticeVector> for i64 {
    type Output = LatticeVector;
    fn mul(self, rhs: LatticeVector) -> LatticeVector {
        LatticeVector(rhs.0.map(|c| self * c))
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parses exactly seven comma-separated signed integers. Surrounding quotes,
/// parentheses or brackets and whitespace around entries are tolerated.
impl FromStr for LatticeVector {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_matches(|c| c == '"' || c == '\'')
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let parts: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        if parts.len() != RANK {
            return Err(AtlasError::Parse(format!(
                "expected 7 comma-separated integers, got {} field(s) in {s:?}",
                parts.len()
            )));
        }
        let mut coords = [0; RANK];
        for (slot, part) in coords.iter_mut().zip(&parts) {
            *slot = part
                .parse()
                .map_err(|_| AtlasError::Parse(format!("{part:?} is not an integer")))?;
        }
        Ok(Self(coords))
    }
}

/// The intersection pairing u0 v0 - u1 v1 - ... - u6 v6.
pub fn pair(u: &LatticeVector, v: &LatticeVector) -> i64 {
    u.0[0] * v.0[0] - (1..RANK).map(|i| u.0[i] * v.0[i]).sum::<i64>()
}

/// h = 3 e0 - e1 - ... - e6, the anticanonical class of the cubic surface.
pub fn hyperplane_class() -> LatticeVector {
    LatticeVector([3, -1, -1, -1, -1, -1, -1])
}

pub fn is_root(v: &LatticeVector) -> bool {
    v.square() == -2 && pair(v, &hyperplane_class()) == 0
}

/// A lattice vector known to satisfy the root equations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Root(LatticeVector);

impl Root {
    pub fn new(v: LatticeVector) -> Result<Self> {
        if is_root(&v) {
            Ok(Self(v))
        } else {
            Err(not_a_root(v))
        }
    }

    pub fn vector(&self) -> &LatticeVector {
        &self.0
    }
}

impl From<Root> for LatticeVector {
    fn from(r: Root) -> Self {
        r.0
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn not_a_root(v: LatticeVector) -> AtlasError {
    AtlasError::NotARoot {
        vector: v,
        self_pairing: v.square(),
        h_pairing: pair(&v, &hyperplane_class()),
    }
}

/// The 72 roots in lexicographic coordinate order. Indices into this list are
/// the points on which every permutation in the crate acts.
#[derive(Debug, Clone)]
pub struct RootSystem72 {
    roots: Vec<Root>,
    index: HashMap<LatticeVector, usize>,
}

impl RootSystem72 {
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn get(&self, i: usize) -> &LatticeVector {
        self.roots[i].vector()
    }

    pub fn index_of(&self, v: &LatticeVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Index of `v`, or `NotARoot` carrying its pairing values.
    pub fn require(&self, v: &LatticeVector) -> Result<usize> {
        self.index_of(v).ok_or_else(|| not_a_root(*v))
    }

    pub fn vectors(&self) -> impl Iterator<Item = &LatticeVector> + '_ {
        self.roots.iter().map(Root::vector)
    }
}

/// Exhaustive search for the roots.
///
/// A root c0 e0 + ... + c6 e6 satisfies c1 + ... + c6 = -3 c0 and
/// c1^2 + ... + c6^2 = c0^2 + 2.
/// Cauchy-Schwarz on the first sum gives 9 c0^2 <= 6 (c0^2 + 2), so |c0| <= 2,
/// and then each ci^2 <= c0^2 + 2 <= 6 gives |ci| <= 2. The window [-3, 3]^7
/// therefore contains every root.
pub fn enumerate_roots() -> RootSystem72 {
    const BOUND: i64 = 3;
    let width = (2 * BOUND + 1) as usize;
    let total = width.pow(RANK as u32);
    let mut roots = Vec::new();
    for code in 0..total {
        let mut rest = code;
        let mut c = [0i64; RANK];
        for slot in c.iter_mut().rev() {
            *slot = (rest % width) as i64 - BOUND;
            rest /= width;
        }
        let v = LatticeVector(c);
        if is_root(&v) {
            roots.push(Root(v));
        }
    }
    // codes enumerate the window in lexicographic order already
    debug_assert!(roots.windows(2).all(|w| w[0] < w[1]));
    let index = roots.iter().enumerate().map(|(i, r)| (r.0, i)).collect();
    RootSystem72 { roots, index }
}

/// The shared canonical root system.
pub fn root_system() -> &'static RootSystem72 {
    static ROOTS: OnceLock<RootSystem72> = OnceLock::new();
    ROOTS.get_or_init(enumerate_roots)
}

/// Pairings between all roots, indexed canonically.
pub fn root_pairings() -> &'static [[i8; 72]; 72] {
    static TABLE: OnceLock<[[i8; 72]; 72]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let rs = root_system();
        std::array::from_fn(|i| std::array::from_fn(|j| pair(rs.get(i), rs.get(j)) as i8))
    })
}

/// alpha1 = e0 - e1 - e2 - e3 and alpha_i = e_{i-1} - e_i for i = 2..6.
///
/// With these indices the branch node of the E6 diagram is alpha4, and alpha1
/// hangs off it.
pub fn simple_roots() -> [Root; 6] {
    let mut out = [Root(LatticeVector([1, -1, -1, -1, 0, 0, 0])); 6];
    for (i, slot) in out.iter_mut().enumerate().skip(1) {
        *slot = Root(LatticeVector::basis(i) - LatticeVector::basis(i + 1));
    }
    out
}

/// Whether the integer span of the roots is all of h^perp in Z^7.
///
/// h^perp has Z-basis e0 - 3 e6 and e_i - e6 (i = 1..5): a vector orthogonal to
/// h is determined by c0..c5 via c6 = -3 c0 - c1 - ... - c5. Each basis vector
/// must be an integer combination of the simple roots, and the simple roots
/// must themselves lie in h^perp.
pub fn roots_span_h_perp() -> bool {
    let simple: Vec<LatticeVector> = simple_roots().iter().map(|r| r.0).collect();
    let e = LatticeVector::basis;
    let mut basis = vec![e(0) - 3 * e(6)];
    basis.extend((1..6).map(|i| e(i) - e(6)));
    let h = hyperplane_class();
    basis.iter().all(|b| pair(b, &h) == 0)
        && basis
            .iter()
            .all(|b| crate::linalg::integer_coefficients(&simple, b).is_some())
        && root_system()
            .vectors()
            .all(|r| crate::linalg::integer_coefficients(&simple, r).is_some())
}

/// Gram matrix of a list of vectors under the intersection pairing.
pub fn gram(vectors: &[LatticeVector]) -> Vec<Vec<i64>> {
    vectors
        .iter()
        .map(|u| vectors.iter().map(|v| pair(u, v)).collect())
        .collect()
}
