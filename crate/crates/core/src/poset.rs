//! Finite posets stored as dense order relations over a linear extension.
//!
//! Every [`Poset`] keeps its elements indexed `0..n` in an order compatible
//! with the partial order: `a <= b` and `a != b` imply `a < b` as integers.
//! The order relation is kept twice (up-sets and down-sets as bit rows) and
//! the cover relation is derived from it once at construction.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::bits::{BitMatrix, BitSet};
use crate::error::{PosetError, Result};

pub type ElementId = usize;

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

static ELEMENT_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ELEMENT_CAP);

/// Largest number of elements any size-multiplying constructor may produce.
pub fn element_cap() -> usize {
    ELEMENT_CAP.load(Ordering::Relaxed)
}

pub fn set_element_cap(cap: usize) {
    ELEMENT_CAP.store(cap, Ordering::Relaxed);
}

pub(crate) fn check_size(requested: u128) -> Result<()> {
    let cap = element_cap();
    if requested > cap as u128 {
        Err(PosetError::SizeCap { requested, cap })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    up: BitMatrix,
    down: BitMatrix,
    covers: Vec<(ElementId, ElementId)>,
    upper_covers: Vec<Vec<ElementId>>,
    lower_covers: Vec<Vec<ElementId>>,
    labels: Option<Vec<String>>,
}

/// An induced subposet together with the parent index of each element.
#[derive(Debug, Clone)]
pub struct Subposet {
    pub poset: Poset,
    pub parent: Vec<ElementId>,
}

impl Poset {
    /// Builds a poset from a (not necessarily reduced) list of edges `a < b`.
    ///
    /// Elements are re-indexed into a linear extension. When the input
    /// indexing already is one, it is kept unchanged.
    pub fn from_covers(n: usize, edges: &[(ElementId, ElementId)]) -> Result<Poset> {
        Self::from_covers_reindexed(n, edges).map(|(p, _)| p)
    }

    /// Like [`Poset::from_covers`], also returning where each input index went.
    pub fn from_covers_reindexed(
        n: usize,
        edges: &[(ElementId, ElementId)],
    ) -> Result<(Poset, Vec<ElementId>)> {
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in edges {
            for index in [a, b] {
                if index >= n {
                    return Err(PosetError::IndexOutOfRange { index, n });
                }
            }
            if a == b {
                return Err(PosetError::CycleDetected);
            }
            succ[a].push(b);
            indegree[b] += 1;
        }

        // Kahn's algorithm, always taking the smallest available index.
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &w in &succ[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        if order.len() != n {
            return Err(PosetError::CycleDetected);
        }
        let mut new_index = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }

        let mut up = BitMatrix::new(n);
        for new in (0..n).rev() {
            let old = order[new];
            let mut row = BitSet::new(n);
            row.insert(new);
            for &w in &succ[old] {
                row.union_with(up.row(new_index[w]));
            }
            *up.row_mut(new) = row;
        }
        Ok((Poset::from_sorted_closure(up), new_index))
    }

    /// Builds a poset from an order predicate over elements already listed
    /// in a linear extension.
    pub(crate) fn from_sorted_order(n: usize, leq: impl Fn(usize, usize) -> bool) -> Poset {
        let mut up = BitMatrix::new(n);
        for a in 0..n {
            up.set(a, a);
            for b in a + 1..n {
                if leq(a, b) {
                    up.set(a, b);
                }
            }
            debug_assert!((0..a).all(|b| !leq(a, b)), "not a linear extension");
        }
        Poset::from_sorted_closure(up)
    }

    /// `up` must be a reflexive, transitive order relation that is upper
    /// triangular with respect to the index order.
    pub(crate) fn from_sorted_closure(up: BitMatrix) -> Poset {
        let n = up.size();
        let down = up.transpose();
        let mut covers = Vec::new();
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for a in 0..n {
            let mut strict = up.row(a).clone();
            strict.remove(a);
            for b in strict.iter() {
                // b covers a iff nothing of the strict up-set of a lies strictly below b.
                let mut between = strict.intersection(down.row(b));
                between.remove(b);
                if between.is_empty() {
                    covers.push((a, b));
                    upper_covers[a].push(b);
                    lower_covers[b].push(a);
                }
            }
        }
        Poset {
            up,
            down,
            covers,
            upper_covers,
            lower_covers,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Poset> {
        if labels.len() != self.len() {
            return Err(PosetError::MapLength {
                got: labels.len(),
                expected: self.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Poset {
        self.labels = None;
        self
    }

    pub fn len(&self) -> usize {
        self.up.size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.up.get(a, b)
    }

    #[inline]
    pub fn lt(&self, a: ElementId, b: ElementId) -> bool {
        a != b && self.up.get(a, b)
    }

    pub fn comparable(&self, a: ElementId, b: ElementId) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn is_cover(&self, a: ElementId, b: ElementId) -> bool {
        self.upper_covers[a].binary_search(&b).is_ok()
    }

    /// All cover pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn cover_edges(&self) -> &[(ElementId, ElementId)] {
        &self.covers
    }

    pub fn upper_covers(&self, a: ElementId) -> &[ElementId] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: ElementId) -> &[ElementId] {
        &self.lower_covers[a]
    }

    /// `{b : a <= b}`
    pub fn up_set(&self, a: ElementId) -> &BitSet {
        self.up.row(a)
    }

    /// `{b : b <= a}`
    pub fn down_set(&self, a: ElementId) -> &BitSet {
        self.down.row(a)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: ElementId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[a].as_str())
    }

    /// The element's label, or its index when the poset is unlabeled.
    pub fn display_label(&self, a: ElementId) -> String {
        match self.label(a) {
            Some(l) => l.to_string(),
            None => a.to_string(),
        }
    }

    pub(crate) fn check_index(&self, index: ElementId) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(PosetError::IndexOutOfRange {
                index,
                n: self.len(),
            })
        }
    }

    pub fn minimal_elements(&self) -> Vec<ElementId> {
        (0..self.len())
            .filter(|&a| self.lower_covers[a].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<ElementId> {
        (0..self.len())
            .filter(|&a| self.upper_covers[a].is_empty())
            .collect()
    }

    pub fn bottom(&self) -> Result<ElementId> {
        match self.minimal_elements()[..] {
            [b] => Ok(b),
            _ => Err(PosetError::NotBounded),
        }
    }

    pub fn top(&self) -> Result<ElementId> {
        match self.maximal_elements()[..] {
            [t] => Ok(t),
            _ => Err(PosetError::NotBounded),
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_ok() && self.top().is_ok()
    }

    /// Induced subposet on `elements`, which are sorted and deduplicated.
    pub fn induced(&self, elements: &[ElementId]) -> Subposet {
        let mut parent = elements.to_vec();
        parent.sort_unstable();
        parent.dedup();
        let k = parent.len();
        let poset = Poset::from_sorted_order(k, |i, j| self.leq(parent[i], parent[j]));
        let poset = match &self.labels {
            Some(l) => poset
                .with_labels(parent.iter().map(|&p| l[p].clone()).collect())
                .expect("label count matches"),
            None => poset,
        };
        Subposet { poset, parent }
    }

    /// The closed interval `[a, b]`.
    pub fn interval(&self, a: ElementId, b: ElementId) -> Result<Subposet> {
        self.check_index(a)?;
        self.check_index(b)?;
        if !self.leq(a, b) {
            return Err(PosetError::NotComparable { a, b });
        }
        let members: Vec<_> = self.up_set(a).intersection(self.down_set(b)).iter().collect();
        Ok(self.induced(&members))
    }

    /// The order dual. Index `i` becomes `n - 1 - i`.
    pub fn dual(&self) -> Poset {
        let n = self.len();
        let poset = Poset::from_sorted_order(n, |i, j| self.leq(n - 1 - j, n - 1 - i));
        match &self.labels {
            Some(l) => poset
                .with_labels(l.iter().rev().cloned().collect())
                .expect("label count matches"),
            None => poset,
        }
    }

    /// Length of the longest chain ending in each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.len()];
        for b in 0..self.len() {
            h[b] = self.lower_covers[b]
                .iter()
                .map(|&a| h[a] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// `rank(a)`: the length of the longest chain in `[0̂, a]`.
    pub fn rank(&self, a: ElementId) -> Result<usize> {
        self.check_index(a)?;
        Ok(self.ranks()?[a])
    }

    pub fn ranks(&self) -> Result<Vec<usize>> {
        if !self.is_bounded() {
            return Err(PosetError::NotBounded);
        }
        Ok(self.heights())
    }

    /// Whether, in every closed interval, all maximal chains have the same length.
    pub fn is_graded(&self) -> bool {
        if self.is_bounded() {
            let h = self.heights();
            return self.covers.iter().all(|&(a, b)| h[b] == h[a] + 1);
        }
        let n = self.len();
        let mut dist = vec![0usize; n];
        for a in 0..n {
            let above = self.up_set(a);
            for x in above.iter() {
                dist[x] = self.lower_covers[x]
                    .iter()
                    .filter(|&&y| above.contains(y))
                    .map(|&y| dist[y] + 1)
                    .max()
                    .unwrap_or(0);
            }
            for x in above.iter() {
                if self.upper_covers[x].iter().any(|&y| dist[y] != dist[x] + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// Every maximal chain `0̂ = p_0 ⋖ ... ⋖ p_s = 1̂`, in lexicographic order
    /// of the index sequences.
    pub fn maximal_chains(&self) -> Result<Vec<Vec<ElementId>>> {
        let bottom = self.bottom()?;
        let top = self.top()?;
        let mut out = Vec::new();
        let mut path = vec![bottom];
        self.extend_chains(&mut path, top, &mut out);
        Ok(out)
    }

    fn extend_chains(&self, path: &mut Vec<ElementId>, top: ElementId, out: &mut Vec<Vec<ElementId>>) {
        let last = *path.last().expect("non-empty path");
        if last == top {
            out.push(path.clone());
            return;
        }
        for &next in &self.upper_covers[last] {
            path.push(next);
            self.extend_chains(path, top, out);
            path.pop();
        }
    }

    /// The maximal length of a maximal chain.
    pub fn length(&self) -> Result<usize> {
        let top = self.top()?;
        self.bottom()?;
        Ok(self.heights()[top])
    }
}

/// `P × Q` with `(p, q)` stored at index `p * |Q| + q`.
pub fn direct_product(p: &Poset, q: &Poset) -> Result<Poset> {
    let (np, nq) = (p.len(), q.len());
    check_size(np as u128 * nq as u128)?;
    let n = np * nq;
    let poset = Poset::from_sorted_order(n, |x, y| {
        p.leq(x / nq, y / nq) && q.leq(x % nq, y % nq)
    });
    if p.labels().is_none() && q.labels().is_none() {
        return Ok(poset);
    }
    let labels = (0..n)
        .map(|x| format!("({},{})", p.display_label(x / nq), q.display_label(x % nq)))
        .collect();
    poset.with_labels(labels)
}

/// The `k`-fold direct power `P × P × ... × P`, lexicographically indexed.
pub fn direct_power(p: &Poset, k: usize) -> Result<Poset> {
    check_size((p.len() as u128).saturating_pow(k as u32))?;
    let mut acc = Poset::from_sorted_order(1, |_, _| true);
    for _ in 0..k {
        acc = direct_product(&acc, p)?.without_labels();
    }
    Ok(acc)
}
