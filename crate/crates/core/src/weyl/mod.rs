//! Reflections in roots and the Weyl group W(E6) acting on the 72 roots.
//!
//! Group elements are stored as permutations of the canonical root indices.
//! Since the roots span the orthogonal complement of h and every element
//! fixes h, the permutation determines the 7x7 lattice matrix, which is
//! rebuilt on demand from the images of the simple roots.

mod dynkin;
mod group;
mod subsystem;

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::Result;
use crate::lattice::{
    hyperplane_class, not_a_root, pair, root_system, simple_roots, LatticeVector, RANK,
};
use crate::linalg::{self, Matrix7};

pub use dynkin::{classify_simple_system, diagram_components, standard_diagram};
pub use group::{generate_group, orbits, orbits_of_indices, ReflectionGroup};
pub use subsystem::{
    classify, close_subsystem, orbit_max, realize, realize_with_rng, simple_system, ClosedSubsystem,
};

pub const ROOT_COUNT: usize = 72;

/// r_alpha(beta) = beta + (beta . alpha) alpha.
pub fn reflect(alpha: &LatticeVector, beta: &LatticeVector) -> Result<LatticeVector> {
    if !crate::lattice::is_root(alpha) {
        return Err(not_a_root(*alpha));
    }
    Ok(*beta + pair(beta, alpha) * *alpha)
}

/// A permutation of the 72 root indices; entry i is the image of root i.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(pub [u8; ROOT_COUNT]);

impl Perm {
    pub fn identity() -> Self {
        Self(std::array::from_fn(|i| i as u8))
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.map(|j| self.0[j as usize]))
    }

    pub fn inverse(&self) -> Perm {
        let mut out = [0u8; ROOT_COUNT];
        for (i, &j) in self.0.iter().enumerate() {
            out[j as usize] = i as u8;
        }
        Perm(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

/// Permutation induced on root indices by the reflection in root `i`.
pub fn reflection_perm(i: usize) -> &'static Perm {
    static TABLE: OnceLock<Vec<Perm>> = OnceLock::new();
    &TABLE.get_or_init(|| {
        let rs = root_system();
        (0..ROOT_COUNT)
            .map(|a| {
                let alpha = rs.get(a);
                Perm(std::array::from_fn(|b| {
                    let beta = rs.get(b);
                    let img = *beta + pair(beta, alpha) * *alpha;
                    rs.index_of(&img).expect("reflection permutes the roots") as u8
                }))
            })
            .collect()
    })[i]
}

/// Root indices of alpha1..alpha6, used as the reconstruction basis.
fn simple_indices() -> &'static [usize; 6] {
    static IDX: OnceLock<[usize; 6]> = OnceLock::new();
    IDX.get_or_init(|| {
        let rs = root_system();
        simple_roots().map(|r| rs.index_of(r.vector()).expect("simple root"))
    })
}

/// An isometry of the lattice fixing h, represented by its action on roots.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct WeylElement {
    perm: Perm,
}

impl WeylElement {
    pub fn identity() -> Self {
        Self {
            perm: Perm::identity(),
        }
    }

    pub fn from_perm(perm: Perm) -> Self {
        Self { perm }
    }

    /// The element whose lattice action is `m`. Fails unless `m` fixes h,
    /// preserves the pairing and permutes the roots.
    pub fn from_matrix(m: &Matrix7) -> std::result::Result<Self, String> {
        let h = hyperplane_class();
        if linalg::apply(m, &h) != h {
            return Err("matrix does not fix h".into());
        }
        let basis: [LatticeVector; RANK] = std::array::from_fn(LatticeVector::basis);
        for u in &basis {
            for v in &basis {
                let (mu, mv) = (linalg::apply(m, u), linalg::apply(m, v));
                if pair(&mu, &mv) != pair(u, v) {
                    return Err(format!("pairing of {u} and {v} not preserved"));
                }
            }
        }
        let rs = root_system();
        let mut perm = [0u8; ROOT_COUNT];
        for (i, slot) in perm.iter_mut().enumerate() {
            let img = linalg::apply(m, rs.get(i));
            *slot = rs
                .index_of(&img)
                .ok_or_else(|| format!("image {img} of a root is not a root"))?
                as u8;
        }
        Ok(Self { perm: Perm(perm) })
    }

    pub fn reflection(root_index: usize) -> Self {
        Self {
            perm: *reflection_perm(root_index),
        }
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            perm: self.perm.compose(&other.perm),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            perm: self.perm.inverse(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.perm.image(i)
    }

    /// The 7x7 integer matrix, solved from the images of alpha1..alpha6 and h.
    pub fn matrix(&self) -> Matrix7 {
        let rs = root_system();
        let idx = simple_indices();
        let h = hyperplane_class();
        let source: [LatticeVector; RANK] =
            std::array::from_fn(|k| if k < 6 { *rs.get(idx[k]) } else { h });
        let image: [LatticeVector; RANK] = std::array::from_fn(|k| {
            if k < 6 {
                *rs.get(self.perm.image(idx[k]))
            } else {
                h
            }
        });
        linalg::linear_map(&source, &image)
            .expect("simple roots and h span the lattice rationally; W(E6) matrices are integral")
    }

    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        linalg::apply(&self.matrix(), v)
    }

    pub fn order(&self) -> usize {
        let mut power = self.perm;
        let mut k = 1;
        while !power.is_identity() {
            power = self.perm.compose(&power);
            k += 1;
        }
        k
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..ROOT_COUNT)
            .filter(|&i| self.perm.image(i) == i)
            .collect()
    }

    /// Cycles on root indices, each starting at its least member, sorted by
    /// that member. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; ROOT_COUNT];
        let mut out = Vec::new();
        for start in 0..ROOT_COUNT {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.perm.image(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.perm.image(next);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation omitting fixed points, e.g. "(0 5 9)(1 7 3)"; "()" for
    /// the identity.
    pub fn cycle_notation(&self) -> String {
        let body: String = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("({})", inner.join(" "))
            })
            .collect();
        if body.is_empty() {
            "()".into()
        } else {
            body
        }
    }
}

/// r_{delta_1} ∘ ... ∘ r_{delta_k}: the monodromy of a loop word whose
/// letters are simple loops around nodal degenerations with the given
/// vanishing cycles. The last letter acts first.
pub fn picard_lefschetz_word(deltas: &[LatticeVector]) -> Result<WeylElement> {
    let rs = root_system();
    let mut acc = WeylElement::identity();
    for d in deltas {
        acc = acc.compose(&WeylElement::reflection(rs.require(d)?));
    }
    Ok(acc)
}
