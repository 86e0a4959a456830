//! Concrete families of posets and the explicit isomorphisms between their
//! multichain posets and other familiar lattices.
//!
//! Tuples over the chain `C_n` use the values `1..=n`, matching the labels
//! of [`chain`]. Subsets of `[n]` are bit masks with element `i` stored in
//! bit `i - 1`, which is also their index in [`boolean_lattice`].

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::bits::BitSet;
use crate::error::{PosetError, Result};
use crate::poset::{check_size, direct_product, ElementId, Poset};
use crate::shellability::EdgeLabeling;

/// The chain with `k` elements, labeled `1..=k`.
pub fn chain(k: usize) -> Result<Poset> {
    if k == 0 {
        return Err(PosetError::BadTuple("a chain needs at least one element".into()));
    }
    check_size(k as u128)?;
    Poset::from_sorted_order(k, |a, b| a <= b).with_labels((1..=k).map(|i| i.to_string()).collect())
}

pub fn antichain(k: usize) -> Result<Poset> {
    check_size(k as u128)?;
    Poset::from_sorted_order(k, |a, b| a == b).with_labels((1..=k).map(|i| i.to_string()).collect())
}

pub fn subset_label(mask: usize) -> String {
    if mask == 0 {
        return "∅".to_string();
    }
    (0..usize::BITS as usize)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect()
}

/// Subsets of `[n]` ordered by inclusion; the subset with mask `s` has index `s`.
pub fn boolean_lattice(n: usize) -> Result<Poset> {
    if n >= 64 {
        return Err(PosetError::SizeCap {
            requested: 1u128 << n.min(127),
            cap: crate::poset::element_cap(),
        });
    }
    check_size(1u128 << n)?;
    let size = 1usize << n;
    Poset::from_sorted_order(size, |a, b| a & !b == 0).with_labels((0..size).map(subset_label).collect())
}

/// `C_a × C_b`; the element `(i, j)` (1-based) has index `(i - 1) * b + (j - 1)`.
pub fn grid(a: usize, b: usize) -> Result<Poset> {
    direct_product(&chain(a)?, &chain(b)?)
}

/// `M_3`: a bottom, three atoms and a top.
pub fn diamond() -> Poset {
    Poset::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        .and_then(|p| p.with_labels(["0", "a", "b", "c", "1"].map(String::from).to_vec()))
        .expect("valid diamond")
}

/// `N_5`: `0 < a < b < 1` and `0 < c < 1`.
pub fn pentagon() -> Poset {
    Poset::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
        .and_then(|p| p.with_labels(["0", "a", "b", "c", "1"].map(String::from).to_vec()))
        .expect("valid pentagon")
}

/// The lattice of order ideals `J(P)` with the ideal of each element.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    pub poset: Poset,
    /// Sorted base elements of each ideal, by ideal index.
    pub ideals: Vec<Vec<ElementId>>,
}

impl IdealLattice {
    /// Maximal elements of the ideal at `index`.
    pub fn generators(&self, base: &Poset, index: ElementId) -> Vec<ElementId> {
        let ideal = &self.ideals[index];
        ideal
            .iter()
            .copied()
            .filter(|&x| !ideal.iter().any(|&y| base.lt(x, y)))
            .collect()
    }
}

pub fn ideal_lattice(base: &Poset) -> Result<IdealLattice> {
    fn extend(base: &Poset, x: usize, current: &mut BitSet, out: &mut Vec<BitSet>) -> Result<()> {
        if x == base.len() {
            check_size(out.len() as u128 + 1)?;
            out.push(current.clone());
            return Ok(());
        }
        extend(base, x + 1, current, out)?;
        if base.lower_covers(x).iter().all(|&y| current.contains(y)) {
            current.insert(x);
            extend(base, x + 1, current, out)?;
            current.remove(x);
        }
        Ok(())
    }

    let mut sets = Vec::new();
    extend(base, 0, &mut BitSet::new(base.len()), &mut sets)?;
    let mut ideals: Vec<Vec<ElementId>> = sets.iter().map(|s| s.iter().collect()).collect();
    ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let sets: Vec<BitSet> = ideals
        .iter()
        .map(|ideal| {
            let mut s = BitSet::new(base.len());
            ideal.iter().for_each(|&x| s.insert(x));
            s
        })
        .collect();
    let poset = Poset::from_sorted_order(sets.len(), |a, b| sets[a].is_subset(&sets[b]));
    let labels = ideals
        .iter()
        .map(|ideal| {
            if ideal.is_empty() {
                "∅".to_string()
            } else {
                let parts: Vec<_> = ideal.iter().map(|&x| base.display_label(x)).collect();
                format!("{{{}}}", parts.join(","))
            }
        })
        .collect();
    Ok(IdealLattice {
        poset: poset.with_labels(labels)?,
        ideals,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    Zero,
    One,
    Free,
}

/// A face of the `n`-cube as a `{0, 1, x}`-word, or the adjoined empty face.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Face {
    Empty,
    Cell(Vec<Coord>),
}

impl Face {
    pub fn free_count(&self) -> usize {
        match self {
            Face::Empty => 0,
            Face::Cell(c) => c.iter().filter(|&&x| x == Coord::Free).count(),
        }
    }

    /// `F <= G` iff every fixed coordinate of `G` is matched by `F`.
    pub fn leq(&self, other: &Face) -> bool {
        match (self, other) {
            (Face::Empty, _) => true,
            (Face::Cell(_), Face::Empty) => false,
            (Face::Cell(f), Face::Cell(g)) => f
                .iter()
                .zip(g)
                .all(|(a, b)| *b == Coord::Free || a == b),
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Face::Empty => f.write_str("∅"),
            Face::Cell(coords) => coords.iter().try_for_each(|c| {
                f.write_str(match c {
                    Coord::Zero => "0",
                    Coord::One => "1",
                    Coord::Free => "x",
                })
            }),
        }
    }
}

impl std::str::FromStr for Face {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Face> {
        if s == "∅" || s == "empty" {
            return Ok(Face::Empty);
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(Coord::Zero),
                '1' => Ok(Coord::One),
                'x' => Ok(Coord::Free),
                other => Err(PosetError::BadTuple(format!("bad face symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Face::Cell)
    }
}

/// Faces of `HC_n` in index order: the empty face, then cells by dimension
/// and lexicographically within a dimension.
pub fn hypercube_faces(n: usize) -> Result<Vec<Face>> {
    check_size(3u128.saturating_pow(n as u32) + 1)?;
    let mut cells: Vec<Vec<Coord>> = vec![Vec::new()];
    for _ in 0..n {
        cells = cells
            .into_iter()
            .flat_map(|c| {
                [Coord::Zero, Coord::One, Coord::Free].into_iter().map(move |x| {
                    let mut next = c.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    let mut faces: Vec<Face> = cells.into_iter().map(Face::Cell).collect();
    faces.sort_by_key(|f| (f.free_count(), match f {
        Face::Cell(c) => c.clone(),
        Face::Empty => Vec::new(),
    }));
    faces.insert(0, Face::Empty);
    Ok(faces)
}

/// The face lattice of the `n`-cube with an empty face adjoined below the vertices.
pub fn hypercube_face_lattice(n: usize) -> Result<Poset> {
    let faces = hypercube_faces(n)?;
    Poset::from_sorted_order(faces.len(), |a, b| faces[a].leq(&faces[b]))
        .with_labels(faces.iter().map(|f| f.to_string()).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalType {
    Boolean(usize),
    HyperCube(usize),
}

/// Isomorphism type of the interval `[e, f]` of the face lattice.
pub fn hypercube_interval_type(e: &Face, f: &Face) -> Result<IntervalType> {
    if !e.leq(f) {
        let dim = |x: &Face| match x {
            Face::Cell(c) => c.len(),
            Face::Empty => 0,
        };
        let faces = hypercube_faces(dim(e).max(dim(f)))?;
        let index = |x: &Face| faces.iter().position(|y| y == x).unwrap_or(usize::MAX);
        return Err(PosetError::NotComparable {
            a: index(e),
            b: index(f),
        });
    }
    Ok(match e {
        Face::Empty if *f == Face::Empty => IntervalType::Boolean(0),
        Face::Empty => IntervalType::HyperCube(f.free_count()),
        Face::Cell(_) => IntervalType::Boolean(f.free_count() - e.free_count()),
    })
}

/// `Σ_{i=0}^{m} (2i + 1)^n`, the number of `m`-multichains of `HC_n`.
pub fn hypercube_multichain_count(n: u32, m: u32) -> BigUint {
    (0..=m).map(|i| BigUint::from(2 * i + 1).pow(n)).sum()
}

/// Ascent positions `{s : a_s < a_{s+1}}`, 1-based.
pub fn asc(tuple: &[usize]) -> BTreeSet<usize> {
    tuple
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] < w[1])
        .map(|(s, _)| s + 1)
        .collect()
}

/// An order ideal of `C_{n-1} × C_m`, encoded by its maximal elements.
///
/// Pairs `(i, j)` are 1-based and kept sorted with `i` increasing, hence
/// `j` strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridIdeal {
    pairs: Vec<(usize, usize)>,
}

impl GridIdeal {
    pub fn new(mut pairs: Vec<(usize, usize)>, n: usize, m: usize) -> Result<GridIdeal> {
        for &(i, j) in &pairs {
            if !(1..n).contains(&i) || !(1..=m).contains(&j) {
                return Err(PosetError::BadTuple(format!(
                    "({i}, {j}) is not in C_{} x C_{m}",
                    n.saturating_sub(1)
                )));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        if pairs.windows(2).any(|w| w[1].1 >= w[0].1) {
            return Err(PosetError::NotAnAntichain);
        }
        Ok(GridIdeal { pairs })
    }

    /// From generators given as indices of [`grid`]`(n - 1, m)`.
    pub fn from_grid_elements(elements: &[ElementId], n: usize, m: usize) -> Result<GridIdeal> {
        GridIdeal::new(elements.iter().map(|&e| (e / m + 1, e % m + 1)).collect(), n, m)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

fn check_chain_tuple(x: &[usize], n: usize, m: usize) -> Result<()> {
    if x.len() != m {
        return Err(PosetError::BadTuple(format!("expected {m} entries, got {}", x.len())));
    }
    if x.iter().any(|&a| !(1..=n).contains(&a)) || x.windows(2).any(|w| w[0] > w[1]) {
        return Err(PosetError::BadTuple(format!(
            "{x:?} is not a weakly increasing tuple over 1..={n}"
        )));
    }
    Ok(())
}

/// `J(C_{n-1} × C_m) → C_n^{(m)}`: the block tuple of an ideal.
pub fn chain_iso_phi(ideal: &GridIdeal, n: usize, m: usize) -> Result<Vec<usize>> {
    let pairs = ideal.pairs();
    if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i >= n || j > m) {
        return Err(PosetError::BadTuple(format!("({i}, {j}) out of range")));
    }
    let mut out = Vec::with_capacity(m);
    let first_height = pairs.first().map_or(0, |p| p.1);
    out.extend(std::iter::repeat_n(1, m - first_height));
    for (s, &(i, j)) in pairs.iter().enumerate() {
        let next_height = pairs.get(s + 1).map_or(0, |p| p.1);
        out.extend(std::iter::repeat_n(i + 1, j - next_height));
    }
    Ok(out)
}

/// `C_n^{(m)} → J(C_{n-1} × C_m)`, read off the ascent set.
///
/// With ascents `j_1 < ... < j_k`, `j_0 = 0` and `j_{k+1} = m`, the generators
/// are `(a_{j_s} - 1, m - j_{s-1})`; a leading block of ones contributes nothing.
pub fn chain_iso_psi(x: &[usize], n: usize, m: usize) -> Result<GridIdeal> {
    check_chain_tuple(x, n, m)?;
    let mut ends: Vec<usize> = asc(x).into_iter().collect();
    ends.push(m);
    let mut pairs = Vec::with_capacity(ends.len());
    let mut previous = 0;
    for &end in &ends {
        let value = x[end - 1];
        if value > 1 {
            pairs.push((value - 1, m - previous));
        }
        previous = end;
    }
    GridIdeal::new(pairs, n, m)
}

/// `B_n^{(m)} → C_{m+1}^n`: `j_i` is one more than the number of sets containing `i`.
pub fn boolean_iso(sets: &[usize], n: usize) -> Result<Vec<usize>> {
    if sets.iter().any(|&s| s >> n != 0) {
        return Err(PosetError::BadTuple(format!("set outside [{n}]")));
    }
    if sets.windows(2).any(|w| w[0] & !w[1] != 0) {
        return Err(PosetError::NotAChainOfSets);
    }
    Ok((0..n)
        .map(|i| sets.iter().filter(|&&s| s >> i & 1 == 1).count() + 1)
        .collect())
}

/// `C_{m+1}^n → B_n^{(m)}`: `A_k = {i : j_i ≥ m + 2 - k}`.
pub fn boolean_iso_inverse(values: &[usize], m: usize) -> Result<Vec<usize>> {
    if values.iter().any(|&j| !(1..=m + 1).contains(&j)) {
        return Err(PosetError::BadTuple(format!("{values:?} is not over 1..={}", m + 1)));
    }
    Ok((1..=m)
        .map(|k| {
            values
                .iter()
                .enumerate()
                .filter(|(_, &j)| j + k >= m + 2)
                .fold(0, |acc, (i, _)| acc | 1 << i)
        })
        .collect())
}

/// Labels each cover `i ⋖ i + 1` of `C_k` by `i + 1`.
pub fn chain_labeling(k: usize) -> EdgeLabeling {
    EdgeLabeling::from_values((0..k.saturating_sub(1)).map(|i| ((i, i + 1), i as u64 + 1)))
}

/// Labels each cover `S ⋖ S ∪ {i}` of `B_n` by `i`.
pub fn boolean_labeling(n: usize) -> EdgeLabeling {
    EdgeLabeling::from_values((0..1usize << n).flat_map(|s| {
        (0..n)
            .filter(move |i| s >> i & 1 == 0)
            .map(move |i| ((s, s | 1 << i), i as u64 + 1))
    }))
}
