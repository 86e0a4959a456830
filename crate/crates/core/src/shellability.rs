//! Edge labelings, an exhaustive EL-labeling verifier and the product
//! labeling of a multichain poset.
//!
//! Labels are tuples of non-negative integers compared lexicographically.
//! Base labelings have width 1. In a product labeling on `P^(m)` every label
//! has width `m` and exactly one non-zero coordinate; `0` is reserved as a
//! formal bottom label, so base labelings fed to [`product_labeling`] must
//! use values of at least 1.

use std::collections::{BTreeMap, HashMap};

use crate::error::{PosetError, Result};
use crate::multichain::{multichain_poset, MultichainPoset};
use crate::poset::{ElementId, Poset};

pub type Label = Vec<u64>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: BTreeMap<(ElementId, ElementId), Label>,
}

impl EdgeLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    /// A width-1 labeling.
    pub fn from_values(values: impl IntoIterator<Item = ((ElementId, ElementId), u64)>) -> Self {
        EdgeLabeling {
            labels: values.into_iter().map(|(e, v)| (e, vec![v])).collect(),
        }
    }

    pub fn insert(&mut self, a: ElementId, b: ElementId, label: Label) {
        self.labels.insert((a, b), label);
    }

    pub fn get(&self, a: ElementId, b: ElementId) -> Option<&Label> {
        self.labels.get(&(a, b))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(ElementId, ElementId), &Label)> {
        self.labels.iter()
    }

    /// Width shared by all labels, or `None` for an empty labeling.
    pub fn width(&self) -> Result<Option<usize>> {
        let mut widths = self.labels.values().map(Vec::len);
        let Some(first) = widths.next() else {
            return Ok(None);
        };
        if widths.all(|w| w == first) {
            Ok(Some(first))
        } else {
            Err(PosetError::LabelWidth)
        }
    }

    /// Checks that every cover of `p` is labeled and nothing else is.
    pub fn check_total(&self, p: &Poset) -> Result<()> {
        for &(a, b) in p.cover_edges() {
            if !self.labels.contains_key(&(a, b)) {
                return Err(PosetError::PartialLabeling { a, b });
            }
        }
        if let Some(&(a, b)) = self.labels.keys().find(|&&(a, b)| {
            a >= p.len() || b >= p.len() || !p.is_cover(a, b)
        }) {
            return Err(PosetError::NotACover { a, b });
        }
        self.width().map(|_| ())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElFailureKind {
    NoRising,
    MultipleRising,
    RisingNotLexFirst,
}

impl std::fmt::Display for ElFailureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ElFailureKind::NoRising => "no-rising",
            ElFailureKind::MultipleRising => "multiple-rising",
            ElFailureKind::RisingNotLexFirst => "rising-not-lex-first",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElFailure {
    pub interval: (ElementId, ElementId),
    pub kind: ElFailureKind,
}

/// Outcome of [`is_el_labeling`]: `None` for an EL-labeling, otherwise the
/// first failing interval in index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElVerdict {
    pub failure: Option<ElFailure>,
}

impl ElVerdict {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Default)]
struct IntervalScan {
    rising: usize,
    rising_chain: Vec<ElementId>,
    rising_labels: Vec<Label>,
    min_labels: Option<Vec<Label>>,
}

impl IntervalScan {
    fn kind(&self) -> Option<ElFailureKind> {
        match self.rising {
            0 => Some(ElFailureKind::NoRising),
            1 if self.min_labels.as_ref() == Some(&self.rising_labels) => None,
            1 => Some(ElFailureKind::RisingNotLexFirst),
            _ => Some(ElFailureKind::MultipleRising),
        }
    }
}

/// Walks every saturated chain starting at `start` and summarizes, for each
/// endpoint, the chains of that interval.
fn scan_from(p: &Poset, labeling: &EdgeLabeling, start: ElementId) -> HashMap<ElementId, IntervalScan> {
    struct Walk<'a> {
        p: &'a Poset,
        labeling: &'a EdgeLabeling,
        path: Vec<ElementId>,
        labels: Vec<Label>,
        out: HashMap<ElementId, IntervalScan>,
    }

    impl Walk<'_> {
        fn go(&mut self, rising: bool) {
            let last = *self.path.last().expect("non-empty path");
            for &next in self.p.upper_covers(last) {
                let label = self.labeling.get(last, next).expect("labeling is total").clone();
                let still_rising = rising && self.labels.last().is_none_or(|prev| *prev < label);
                self.path.push(next);
                self.labels.push(label);

                let entry = self.out.entry(next).or_default();
                if still_rising {
                    entry.rising += 1;
                    if entry.rising == 1 {
                        entry.rising_chain = self.path.clone();
                        entry.rising_labels = self.labels.clone();
                    }
                }
                if entry.min_labels.as_ref().is_none_or(|m| self.labels < *m) {
                    entry.min_labels = Some(self.labels.clone());
                }

                self.go(still_rising);
                self.path.pop();
                self.labels.pop();
            }
        }
    }

    let mut walk = Walk {
        p,
        labeling,
        path: vec![start],
        labels: Vec::new(),
        out: HashMap::new(),
    };
    walk.go(true);
    walk.out
}

fn check_labeling(p: &Poset, labeling: &EdgeLabeling) -> Result<()> {
    if !p.is_graded() {
        return Err(PosetError::NotGraded);
    }
    labeling.check_total(p)
}

/// Verifies that in every interval `[a, b]`, `a < b`, exactly one maximal
/// chain has strictly increasing labels and that it is lexicographically
/// first among the maximal chains of the interval.
pub fn is_el_labeling(p: &Poset, labeling: &EdgeLabeling) -> Result<ElVerdict> {
    check_labeling(p, labeling)?;
    for a in 0..p.len() {
        let scans = scan_from(p, labeling, a);
        for b in p.up_set(a).iter().skip(1) {
            if let Some(kind) = scans[&b].kind() {
                return Ok(ElVerdict {
                    failure: Some(ElFailure {
                        interval: (a, b),
                        kind,
                    }),
                });
            }
        }
    }
    Ok(ElVerdict { failure: None })
}

/// Unique rising chain of every non-trivial interval, keyed by endpoints.
/// Intervals without a unique rising chain are left out.
pub fn rising_chains(p: &Poset, labeling: &EdgeLabeling) -> Result<HashMap<(ElementId, ElementId), Vec<ElementId>>> {
    check_labeling(p, labeling)?;
    let mut out = HashMap::new();
    for a in 0..p.len() {
        for (b, scan) in scan_from(p, labeling, a) {
            if scan.rising == 1 {
                out.insert((a, b), scan.rising_chain);
            }
        }
    }
    Ok(out)
}

/// Labels the cover `p ⋖ q` of `P^(m)`, which changes only coordinate `i`,
/// by the `m`-tuple carrying `λ(p_i, q_i)` in position `i` and `0` elsewhere.
pub fn product_labeling(mp: &MultichainPoset, base: &EdgeLabeling) -> Result<EdgeLabeling> {
    base.check_total(&mp.base)?;
    if base.width()?.is_some_and(|w| w != 1) {
        return Err(PosetError::LabelWidth);
    }
    if let Some((&(a, b), _)) = base.iter().find(|(_, l)| l[0] == 0) {
        return Err(PosetError::ReservedLabel { a, b });
    }
    let mut out = EdgeLabeling::new();
    for &(x, y) in mp.poset.cover_edges() {
        let (px, py) = (mp.decode(x), mp.decode(y));
        let changed: Vec<usize> = (0..mp.m).filter(|&i| px[i] != py[i]).collect();
        let &[i] = changed.as_slice() else {
            return Err(PosetError::CertificationFailed(format!(
                "cover {x} -> {y} changes {} coordinates",
                changed.len()
            )));
        };
        let value = base
            .get(px[i], py[i])
            .ok_or(PosetError::PartialLabeling { a: px[i], b: py[i] })?[0];
        let mut label = vec![0; mp.m];
        label[i] = value;
        out.insert(x, y, label);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct TransferReport {
    pub base: ElVerdict,
    pub product: ElVerdict,
    /// Every unique rising chain of `P^(m)` passes through the pivots
    /// `z_i = (p_1, ..., p_{m-i}, q_{m-i+1}, ..., q_m)`.
    pub pivots_ok: bool,
    /// Between consecutive pivots the rising chain moves only coordinate
    /// `m - i + 1`, exactly along the rising chain of the base interval.
    pub segments_ok: bool,
    pub multichains: MultichainPoset,
    pub labeling: EdgeLabeling,
}

impl TransferReport {
    pub fn holds(&self) -> bool {
        self.base.holds() && self.product.holds() && self.pivots_ok && self.segments_ok
    }
}

/// Builds the product labeling on `P^(m)`, checks it is an EL-labeling, and
/// checks the pivot structure of its rising chains.
pub fn verify_el_transfer(base: &Poset, labeling: &EdgeLabeling, m: usize) -> Result<TransferReport> {
    let base_verdict = is_el_labeling(base, labeling)?;
    let mp = multichain_poset(base, m)?;
    let product = product_labeling(&mp, labeling)?;
    let product_verdict = is_el_labeling(&mp.poset, &product)?;
    let base_rising = rising_chains(base, labeling)?;
    let rising = rising_chains(&mp.poset, &product)?;

    let mut pivots_ok = true;
    let mut segments_ok = true;
    for a in 0..mp.len() {
        for b in mp.poset.up_set(a).iter().skip(1) {
            let Some(chain) = rising.get(&(a, b)) else {
                pivots_ok = false;
                continue;
            };
            let (p, q) = (mp.decode(a), mp.decode(b));
            let mut previous = 0;
            for i in 1..=mp.m {
                let coord = mp.m - i;
                let mut pivot = p[..coord].to_vec();
                pivot.extend_from_slice(&q[coord..]);
                let z = mp.index_of(&pivot).expect("pivot is a multichain");
                let Some(pos) = chain.iter().position(|&x| x == z) else {
                    pivots_ok = false;
                    break;
                };
                if pos < previous {
                    pivots_ok = false;
                    break;
                }
                let walked: Vec<ElementId> =
                    chain[previous..=pos].iter().map(|&x| mp.decode(x)[coord]).collect();
                let moves_one_coordinate = chain[previous..=pos].iter().all(|&x| {
                    let t = mp.decode(x);
                    (0..mp.m).all(|c| c == coord || t[c] == mp.decode(chain[previous])[c])
                });
                let expected = if p[coord] == q[coord] {
                    Some(vec![p[coord]])
                } else {
                    base_rising.get(&(p[coord], q[coord])).cloned()
                };
                if !moves_one_coordinate || expected.as_ref() != Some(&walked) {
                    segments_ok = false;
                }
                previous = pos;
            }
        }
    }
    Ok(TransferReport {
        base: base_verdict,
        product: product_verdict,
        pivots_ok,
        segments_ok,
        multichains: mp,
        labeling: product,
    })
}
