use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::{reflection_perm, Perm, WeylElement, ROOT_COUNT};
use crate::error::Result;
use crate::lattice::{root_system, LatticeVector, Root};

/// A subgroup of W(E6) generated by root reflections, fully materialized.
#[derive(Debug, Clone, Serialize)]
pub struct ReflectionGroup {
    pub generators: Vec<Root>,
    pub order: usize,
    #[serde(skip)]
    elements: Vec<WeylElement>,
}

impl ReflectionGroup {
    /// Elements in breadth-first discovery order; the identity is first.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn contains(&self, g: &WeylElement) -> bool {
        self.elements.contains(g)
    }
}

/// Breadth-first closure of the generating reflections under composition.
pub fn generate_group(generators: &[LatticeVector]) -> Result<ReflectionGroup> {
    let rs = root_system();
    let idx = generators
        .iter()
        .map(|g| rs.require(g))
        .collect::<Result<Vec<_>>>()?;
    let gens: Vec<&Perm> = idx.iter().map(|&i| reflection_perm(i)).collect();

    let mut seen: HashSet<Perm> = HashSet::new();
    let mut elements = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(Perm::identity());
    queue.push_back(Perm::identity());
    while let Some(p) = queue.pop_front() {
        for g in &gens {
            let q = g.compose(&p);
            if seen.insert(q) {
                queue.push_back(q);
            }
        }
        elements.push(WeylElement::from_perm(p));
    }
    Ok(ReflectionGroup {
        generators: idx.iter().map(|&i| rs.roots()[i]).collect(),
        order: elements.len(),
        elements,
    })
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller index as representative
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

/// Orbits on root indices of the group generated by reflections in the roots
/// with the given indices. Blocks are sorted internally and by least member.
pub fn orbits_of_indices(generators: &[usize]) -> Vec<Vec<usize>> {
    let mut sets = DisjointSets::new(ROOT_COUNT);
    for &g in generators {
        let p = reflection_perm(g);
        for x in 0..ROOT_COUNT {
            sets.union(x, p.image(x));
        }
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); ROOT_COUNT];
    for x in 0..ROOT_COUNT {
        let r = sets.find(x);
        blocks[r].push(x);
    }
    blocks.retain(|b| !b.is_empty());
    blocks
}

/// Partition of the 72 roots into orbits of the reflection group generated by
/// `generators`, without materializing the group.
pub fn orbits(generators: &[LatticeVector]) -> Result<Vec<Vec<usize>>> {
    let rs = root_system();
    let idx = generators
        .iter()
        .map(|g| rs.require(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(orbits_of_indices(&idx))
}
