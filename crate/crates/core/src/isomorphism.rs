//! Poset isomorphism by backtracking over invariant-refined color classes.

use std::collections::BTreeMap;
use std::fmt;

use crate::bits::BitSet;
use crate::error::{PosetError, Result};
use crate::poset::{ElementId, Poset};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// A reason two posets cannot be isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refusal {
    Size { left: usize, right: usize },
    CoverCount { left: usize, right: usize },
    /// Multisets of (height, co-height) pairs differ.
    RankProfile,
    /// Multisets of (lower cover, upper cover, ideal, filter) sizes differ.
    DegreeProfile,
    /// Refined color classes have different sizes.
    RefinedClasses,
    /// The search ran to completion without finding a bijection.
    Exhausted,
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refusal::Size { left, right } => write!(f, "size differs ({left} vs {right})"),
            Refusal::CoverCount { left, right } => {
                write!(f, "cover count differs ({left} vs {right})")
            }
            Refusal::RankProfile => f.write_str("rank profile differs"),
            Refusal::DegreeProfile => f.write_str("cover-degree profile differs"),
            Refusal::RefinedClasses => f.write_str("refined invariant classes differ"),
            Refusal::Exhausted => f.write_str("no order isomorphism exists"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoWitness {
    /// `mapping[a]` is the image of `a`; verified to be an order isomorphism.
    Isomorphic(Vec<ElementId>),
    Refused(Refusal),
}

impl IsoWitness {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoWitness::Isomorphic(_))
    }

    pub fn mapping(&self) -> Option<&[ElementId]> {
        match self {
            IsoWitness::Isomorphic(m) => Some(m),
            IsoWitness::Refused(_) => None,
        }
    }
}

/// Exhaustive check that `f` is a bijection with `a <= b ⇔ f(a) <= f(b)`.
pub fn verify_order_isomorphism(p: &Poset, q: &Poset, f: &[ElementId]) -> Result<bool> {
    if f.len() != p.len() {
        return Err(PosetError::MapLength {
            got: f.len(),
            expected: p.len(),
        });
    }
    if p.len() != q.len() {
        return Err(PosetError::NotBijective);
    }
    let mut hit = BitSet::new(q.len());
    for &y in f {
        if y >= q.len() || hit.contains(y) {
            return Err(PosetError::NotBijective);
        }
        hit.insert(y);
    }
    Ok((0..p.len()).all(|a| (0..p.len()).all(|b| p.leq(a, b) == q.leq(f[a], f[b]))))
}

fn co_heights(p: &Poset) -> Vec<usize> {
    let mut h = vec![0; p.len()];
    for a in (0..p.len()).rev() {
        h[a] = p.upper_covers(a).iter().map(|&b| h[b] + 1).max().unwrap_or(0);
    }
    h
}

type Signature = (usize, usize, usize, usize, usize, usize);

fn base_signatures(p: &Poset) -> Vec<Signature> {
    let h = p.heights();
    let c = co_heights(p);
    (0..p.len())
        .map(|a| {
            (
                h[a],
                c[a],
                p.lower_covers(a).len(),
                p.upper_covers(a).len(),
                p.down_set(a).count(),
                p.up_set(a).count(),
            )
        })
        .collect()
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// Colors both posets jointly and refines by the colors of lower and upper
/// covers until the number of classes stops growing.
fn refine(p: &Poset, q: &Poset, sp: &[Signature], sq: &[Signature]) -> Option<(Vec<usize>, Vec<usize>)> {
    fn relabel<K: Ord + Clone>(kp: &[K], kq: &[K]) -> (Vec<usize>, Vec<usize>, usize) {
        let mut ids = BTreeMap::new();
        for k in kp.iter().chain(kq) {
            let next = ids.len();
            ids.entry(k.clone()).or_insert(next);
        }
        (
            kp.iter().map(|k| ids[k]).collect(),
            kq.iter().map(|k| ids[k]).collect(),
            ids.len(),
        )
    }

    fn balanced(cp: &[usize], cq: &[usize], classes: usize) -> bool {
        let mut count = vec![0i64; classes];
        cp.iter().for_each(|&c| count[c] += 1);
        cq.iter().for_each(|&c| count[c] -= 1);
        count.iter().all(|&c| c == 0)
    }

    let (mut cp, mut cq, mut classes) = relabel(sp, sq);
    loop {
        if !balanced(&cp, &cq, classes) {
            return None;
        }
        let key = |poset: &Poset, colors: &[usize], a: usize| {
            let mut below: Vec<usize> = poset.lower_covers(a).iter().map(|&b| colors[b]).collect();
            let mut above: Vec<usize> = poset.upper_covers(a).iter().map(|&b| colors[b]).collect();
            below.sort_unstable();
            above.sort_unstable();
            (colors[a], below, above)
        };
        let kp: Vec<_> = (0..p.len()).map(|a| key(p, &cp, a)).collect();
        let kq: Vec<_> = (0..q.len()).map(|a| key(q, &cq, a)).collect();
        let (np, nq, next) = relabel(&kp, &kq);
        if next == classes {
            return Some((cp, cq));
        }
        (cp, cq, classes) = (np, nq, next);
    }
}

pub fn are_isomorphic(p: &Poset, q: &Poset) -> Result<IsoWitness> {
    are_isomorphic_with_budget(p, q, DEFAULT_NODE_BUDGET)
}

/// Decides isomorphism, giving up with [`PosetError::Timeout`] once more
/// than `budget` candidate assignments have been tried.
pub fn are_isomorphic_with_budget(p: &Poset, q: &Poset, budget: u64) -> Result<IsoWitness> {
    if p.len() != q.len() {
        return Ok(IsoWitness::Refused(Refusal::Size {
            left: p.len(),
            right: q.len(),
        }));
    }
    let (cp, cq) = (p.cover_edges().len(), q.cover_edges().len());
    if cp != cq {
        return Ok(IsoWitness::Refused(Refusal::CoverCount { left: cp, right: cq }));
    }
    let sp = base_signatures(p);
    let sq = base_signatures(q);
    let ranks = |s: &[Signature]| sorted(&s.iter().map(|x| (x.0, x.1)).collect::<Vec<_>>());
    if ranks(&sp) != ranks(&sq) {
        return Ok(IsoWitness::Refused(Refusal::RankProfile));
    }
    if sorted(&sp) != sorted(&sq) {
        return Ok(IsoWitness::Refused(Refusal::DegreeProfile));
    }
    let Some((colors_p, colors_q)) = refine(p, q, &sp, &sq) else {
        return Ok(IsoWitness::Refused(Refusal::RefinedClasses));
    };

    let mut search = Search {
        p,
        q,
        colors_p,
        colors_q,
        map: vec![usize::MAX; p.len()],
        used: BitSet::new(q.len()),
        nodes: 0,
        budget,
    };
    if !search.assign(0)? {
        return Ok(IsoWitness::Refused(Refusal::Exhausted));
    }
    let map = search.map;
    if !verify_order_isomorphism(p, q, &map)? {
        return Err(PosetError::CertificationFailed("search produced an invalid map".into()));
    }
    Ok(IsoWitness::Isomorphic(map))
}

struct Search<'a> {
    p: &'a Poset,
    q: &'a Poset,
    colors_p: Vec<usize>,
    colors_q: Vec<usize>,
    map: Vec<ElementId>,
    used: BitSet,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn consistent(&self, x: ElementId, y: ElementId) -> bool {
        (0..x).all(|w| {
            let v = self.map[w];
            self.p.leq(w, x) == self.q.leq(v, y) && self.q.leq(y, v) == self.p.leq(x, w)
        })
    }

    // Elements of p are assigned in index order, which is a linear extension.
    fn assign(&mut self, x: ElementId) -> Result<bool> {
        if x == self.p.len() {
            return Ok(true);
        }
        for y in 0..self.q.len() {
            if self.used.contains(y) || self.colors_q[y] != self.colors_p[x] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(PosetError::Timeout { budget: self.budget });
            }
            if !self.consistent(x, y) {
                continue;
            }
            self.map[x] = y;
            self.used.insert(y);
            if self.assign(x + 1)? {
                return Ok(true);
            }
            self.used.remove(y);
        }
        self.map[x] = usize::MAX;
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean_lattice, chain, diamond, pentagon};

    #[test]
    fn identity_witness() {
        let p = boolean_lattice(3).unwrap();
        let w = are_isomorphic(&p, &p).unwrap();
        assert!(w.is_isomorphic());
        assert!(verify_order_isomorphism(&p, &p, w.mapping().unwrap()).unwrap());
    }

    #[test]
    fn refusals() {
        let c4 = chain(4).unwrap();
        let b2 = boolean_lattice(2).unwrap();
        assert_eq!(
            are_isomorphic(&c4, &b2).unwrap(),
            IsoWitness::Refused(Refusal::CoverCount { left: 3, right: 4 })
        );
        assert!(matches!(
            are_isomorphic(&c4, &chain(3).unwrap()).unwrap(),
            IsoWitness::Refused(Refusal::Size { .. })
        ));
        assert!(!are_isomorphic(&diamond(), &pentagon()).unwrap().is_isomorphic());
    }

    #[test]
    fn dual_of_pentagon() {
        let n5 = pentagon();
        assert!(are_isomorphic(&n5, &n5.dual()).unwrap().is_isomorphic());
    }

    #[test]
    fn verification_errors() {
        let c3 = chain(3).unwrap();
        assert_eq!(verify_order_isomorphism(&c3, &c3, &[0, 0, 2]), Err(PosetError::NotBijective));
        assert!(matches!(
            verify_order_isomorphism(&c3, &c3, &[0, 1]),
            Err(PosetError::MapLength { .. })
        ));
        assert!(!verify_order_isomorphism(&c3, &c3, &[2, 1, 0]).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_undecided() {
        let p = boolean_lattice(4).unwrap();
        assert_eq!(
            are_isomorphic_with_budget(&p, &p, 3),
            Err(PosetError::Timeout { budget: 3 })
        );
    }
}
