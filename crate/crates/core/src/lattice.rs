//! Lattice tables and exhaustive checks of lattice properties.
//!
//! All checks scan every pair or triple of elements. Meet-semidistributivity
//! and upper semimodularity are evaluated as their join/lower counterparts
//! on the dual poset.

use crate::bits::BitSet;
use crate::error::{LatticeFailure, PosetError, Result};
use crate::poset::{ElementId, Poset};

/// Total join and meet tables of a finite lattice, row-major `n × n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeTables {
    n: usize,
    join: Vec<ElementId>,
    meet: Vec<ElementId>,
}

impl LatticeTables {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn join(&self, a: ElementId, b: ElementId) -> ElementId {
        self.join[a * self.n + b]
    }

    #[inline]
    pub fn meet(&self, a: ElementId, b: ElementId) -> ElementId {
        self.meet[a * self.n + b]
    }

    pub(crate) fn from_fns(
        n: usize,
        mut join: impl FnMut(ElementId, ElementId) -> ElementId,
        mut meet: impl FnMut(ElementId, ElementId) -> ElementId,
    ) -> LatticeTables {
        let mut j = Vec::with_capacity(n * n);
        let mut m = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                j.push(join(a, b));
                m.push(meet(a, b));
            }
        }
        LatticeTables { n, join: j, meet: m }
    }
}

/// The least element of `set`, if `set` has one.
fn least(p: &Poset, set: &BitSet) -> Option<ElementId> {
    // In a linear extension the least element, if any, has the smallest index.
    let c = set.first()?;
    set.is_subset(p.up_set(c)).then_some(c)
}

fn greatest(p: &Poset, set: &BitSet) -> Option<ElementId> {
    let c = set.last()?;
    set.is_subset(p.down_set(c)).then_some(c)
}

/// Computes join and meet tables, or reports the first pair (in index
/// order) without a join or a meet.
pub fn lattice_tables(p: &Poset) -> Result<LatticeTables> {
    if p.is_empty() {
        return Err(PosetError::NotBounded);
    }
    let n = p.len();
    let mut join = vec![0; n * n];
    let mut meet = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let j = least(p, &p.up_set(a).intersection(p.up_set(b))).ok_or(
                PosetError::NotALattice {
                    a,
                    b,
                    reason: LatticeFailure::NoUpperBoundMinimum,
                },
            )?;
            let m = greatest(p, &p.down_set(a).intersection(p.down_set(b))).ok_or(
                PosetError::NotALattice {
                    a,
                    b,
                    reason: LatticeFailure::NoLowerBoundMaximum,
                },
            )?;
            join[a * n + b] = j;
            join[b * n + a] = j;
            meet[a * n + b] = m;
            meet[b * n + a] = m;
        }
    }
    Ok(LatticeTables { n, join, meet })
}

pub fn is_lattice(p: &Poset) -> bool {
    lattice_tables(p).is_ok()
}

/// A poset paired with its lattice tables.
#[derive(Debug, Clone)]
pub struct Lattice<'a> {
    pub poset: &'a Poset,
    pub tables: LatticeTables,
}

impl<'a> Lattice<'a> {
    pub fn new(poset: &'a Poset) -> Result<Self> {
        Ok(Lattice {
            poset,
            tables: lattice_tables(poset)?,
        })
    }

    fn triples(&self) -> impl Iterator<Item = (ElementId, ElementId, ElementId)> {
        let n = self.tables.len();
        (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
    }

    /// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
    pub fn is_distributive(&self) -> bool {
        let t = &self.tables;
        self.triples()
            .all(|(x, y, z)| t.meet(x, t.join(y, z)) == t.join(t.meet(x, y), t.meet(x, z)))
    }

    /// `(x ∧ z) ∨ (y ∧ z) = ((x ∧ z) ∨ y) ∧ z` for all triples.
    pub fn is_modular(&self) -> bool {
        let t = &self.tables;
        self.triples().all(|(x, y, z)| {
            let xz = t.meet(x, z);
            t.join(xz, t.meet(y, z)) == t.meet(t.join(xz, y), z)
        })
    }

    /// `x ∨ y = x ∨ z` implies `x ∨ y = x ∨ (y ∧ z)`.
    pub fn is_join_semidistributive(&self) -> bool {
        let t = &self.tables;
        self.triples().all(|(x, y, z)| {
            let xy = t.join(x, y);
            xy != t.join(x, z) || xy == t.join(x, t.meet(y, z))
        })
    }

    /// Whenever `p ∧ q ⋖ p` and `p ∧ q ⋖ q`, also `p ⋖ p ∨ q` and `q ⋖ p ∨ q`.
    ///
    /// Some texts call this cover condition upper semimodularity; the naming
    /// here follows the multichain preservation results this crate verifies.
    pub fn is_lower_semimodular(&self) -> bool {
        let t = &self.tables;
        let p = self.poset;
        let n = t.len();
        (0..n).all(|a| {
            (a + 1..n).all(|b| {
                let m = t.meet(a, b);
                if !(p.is_cover(m, a) && p.is_cover(m, b)) {
                    return true;
                }
                let j = t.join(a, b);
                p.is_cover(a, j) && p.is_cover(b, j)
            })
        })
    }
}

pub fn is_distributive(p: &Poset) -> Result<bool> {
    Ok(Lattice::new(p)?.is_distributive())
}

pub fn is_modular(p: &Poset) -> Result<bool> {
    Ok(Lattice::new(p)?.is_modular())
}

pub fn is_join_semidistributive(p: &Poset) -> Result<bool> {
    Ok(Lattice::new(p)?.is_join_semidistributive())
}

pub fn is_meet_semidistributive(p: &Poset) -> Result<bool> {
    is_join_semidistributive(&p.dual())
}

pub fn is_lower_semimodular(p: &Poset) -> Result<bool> {
    Ok(Lattice::new(p)?.is_lower_semimodular())
}

pub fn is_upper_semimodular(p: &Poset) -> Result<bool> {
    is_lower_semimodular(&p.dual())
}

fn check_map(f: &[ElementId], from: &Poset, to: &Poset) -> Result<()> {
    if f.len() != from.len() {
        return Err(PosetError::MapLength {
            got: f.len(),
            expected: from.len(),
        });
    }
    for &x in f {
        to.check_index(x)?;
    }
    Ok(())
}

fn preserves_operations(f: &[ElementId], source: &LatticeTables, target: &LatticeTables) -> bool {
    let n = source.len();
    (0..n).all(|a| {
        (a..n).all(|b| {
            f[source.join(a, b)] == target.join(f[a], f[b])
                && f[source.meet(a, b)] == target.meet(f[a], f[b])
        })
    })
}

/// Whether the injective map `embedding: P → Q` preserves all pairwise joins and meets.
pub fn is_sublattice(sub: &Poset, ambient: &Poset, embedding: &[ElementId]) -> Result<bool> {
    check_map(embedding, sub, ambient)?;
    let mut seen = BitSet::new(ambient.len());
    for &x in embedding {
        if seen.contains(x) {
            return Err(PosetError::NotInjective);
        }
        seen.insert(x);
    }
    let s = lattice_tables(sub)?;
    let a = lattice_tables(ambient)?;
    Ok(preserves_operations(embedding, &s, &a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomomorphismCheck {
    pub homomorphism: bool,
    pub surjective: bool,
}

impl HomomorphismCheck {
    pub fn is_surjective_homomorphism(&self) -> bool {
        self.homomorphism && self.surjective
    }
}

pub fn is_lattice_homomorphism(
    source: &Poset,
    target: &Poset,
    f: &[ElementId],
) -> Result<HomomorphismCheck> {
    check_map(f, source, target)?;
    let s = lattice_tables(source)?;
    let t = lattice_tables(target)?;
    let mut hit = BitSet::new(target.len());
    for &x in f {
        hit.insert(x);
    }
    Ok(HomomorphismCheck {
        homomorphism: preserves_operations(f, &s, &t),
        surjective: hit.count() == target.len(),
    })
}
