//! Shared corpus and brute-force oracles for the integration tests.
//!
//! Oracles only use `Poset::leq` and `Poset::len`; everything else is
//! recomputed from the order relation by definition.
#![allow(dead_code)]

use multichain_poset::families::{
    boolean_lattice, chain, diamond, grid, hypercube_face_lattice, ideal_lattice, pentagon,
};
use multichain_poset::Poset;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const RANDOM_SEED: u64 = 0x6d75_6c74_6963_6861;
pub const RANDOM_COUNT: usize = 200;

#[derive(Clone)]
pub struct Entry {
    pub name: String,
    pub poset: Poset,
}

fn entry(name: impl Into<String>, poset: Poset) -> Entry {
    Entry {
        name: name.into(),
        poset,
    }
}

/// Every bounded family member with at most 8 elements, plus N_5 and M_3.
pub fn structured() -> Vec<Entry> {
    let mut out = Vec::new();
    for k in 1..=8 {
        out.push(entry(format!("C{k}"), chain(k).unwrap()));
    }
    for n in 0..=3 {
        out.push(entry(format!("B{n}"), boolean_lattice(n).unwrap()));
    }
    for (a, b) in [(2, 2), (2, 3), (2, 4)] {
        out.push(entry(format!("C{a}xC{b}"), grid(a, b).unwrap()));
    }
    out.push(entry("HC1", hypercube_face_lattice(1).unwrap()));
    let vee = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
    out.push(entry("J(V)", ideal_lattice(&vee).unwrap().poset));
    let zigzag = Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
    out.push(entry("J(N)", ideal_lattice(&zigzag).unwrap().poset));
    out.push(entry("J(C2xC2)", ideal_lattice(&grid(2, 2).unwrap()).unwrap().poset));
    out.push(entry("N5", pentagon()));
    out.push(entry("M3", diamond()));
    // a graded non-lattice and an ungraded non-lattice
    out.push(entry(
        "bowtie",
        Poset::from_covers(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]).unwrap(),
    ));
    out.push(entry(
        "ungraded",
        Poset::from_covers(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 4), (1, 5), (4, 5)]).unwrap(),
    ));
    out
}

/// A random bounded poset on `size` elements: a random order on the
/// interior elements with a bottom and a top attached.
pub fn random_bounded(rng: &mut impl Rng, size: usize) -> Poset {
    let interior = size - 2;
    let mut edges = Vec::new();
    for i in 1..=interior {
        edges.push((0, i));
        edges.push((i, size - 1));
        for j in i + 1..=interior {
            if rng.gen_bool(0.35) {
                edges.push((i, j));
            }
        }
    }
    Poset::from_covers(size, &edges).unwrap()
}

pub fn random_corpus() -> Vec<Entry> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    (0..RANDOM_COUNT)
        .map(|i| {
            let size = rng.gen_range(5..=7);
            entry(format!("random#{i}"), random_bounded(&mut rng, size))
        })
        .collect()
}

pub fn corpus() -> Vec<Entry> {
    let mut all = structured();
    all.extend(random_corpus());
    all
}

/// The lattice of set partitions of `{0, .., n-1}` ordered by refinement.
pub fn partition_lattice(n: usize) -> Poset {
    fn blocks(labels: &[usize]) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (i, &b) in labels.iter().enumerate() {
            if b == out.len() {
                out.push(Vec::new());
            }
            out[b].push(i);
        }
        out
    }
    // restricted growth strings enumerate set partitions
    let mut all = vec![vec![0usize]];
    for _ in 1..n {
        let mut next = Vec::new();
        for s in &all {
            let max = *s.iter().max().unwrap();
            for b in 0..=max + 1 {
                let mut t = s.clone();
                t.push(b);
                next.push(t);
            }
        }
        all = next;
    }
    let parts: Vec<_> = all.iter().map(|s| blocks(s)).collect();
    // finer partitions have more blocks; sorting by block count gives a linear extension
    let mut order: Vec<usize> = (0..parts.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(parts[i].len()));
    let refines = |a: &Vec<Vec<usize>>, b: &Vec<Vec<usize>>| {
        a.iter().all(|block| b.iter().any(|c| block.iter().all(|x| c.contains(x))))
    };
    let mut edges = Vec::new();
    for (i, &a) in order.iter().enumerate() {
        for (j, &b) in order.iter().enumerate() {
            if i != j && refines(&parts[a], &parts[b]) {
                edges.push((i, j));
            }
        }
    }
    Poset::from_covers(order.len(), &edges).unwrap()
}

// ---------------------------------------------------------------- oracles

pub fn oracle_lt(p: &Poset, a: usize, b: usize) -> bool {
    a != b && p.leq(a, b)
}

pub fn oracle_cover(p: &Poset, a: usize, b: usize) -> bool {
    oracle_lt(p, a, b) && !(0..p.len()).any(|c| oracle_lt(p, a, c) && oracle_lt(p, c, b))
}

/// All covers computed from the order relation alone.
pub fn oracle_covers(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if oracle_cover(p, a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Lengths of all maximal chains of `[a, b]`.
fn chain_lengths(p: &Poset, a: usize, b: usize, out: &mut Vec<usize>, depth: usize) {
    if a == b {
        out.push(depth);
        return;
    }
    for c in 0..p.len() {
        if oracle_cover(p, a, c) && p.leq(c, b) {
            chain_lengths(p, c, b, out, depth + 1);
        }
    }
}

/// Graded means every interval has all maximal chains of one length.
pub fn oracle_graded(p: &Poset) -> bool {
    let n = p.len();
    for a in 0..n {
        for b in 0..n {
            if p.leq(a, b) {
                let mut lengths = Vec::new();
                chain_lengths(p, a, b, &mut lengths, 0);
                if lengths.iter().any(|&l| l != lengths[0]) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn oracle_join(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let n = p.len();
    let ubs: Vec<usize> = (0..n).filter(|&c| p.leq(a, c) && p.leq(b, c)).collect();
    ubs.iter().copied().find(|&c| ubs.iter().all(|&d| p.leq(c, d)))
}

pub fn oracle_meet(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let n = p.len();
    let lbs: Vec<usize> = (0..n).filter(|&c| p.leq(c, a) && p.leq(c, b)).collect();
    lbs.iter().copied().find(|&c| lbs.iter().all(|&d| p.leq(d, c)))
}

pub struct OracleLattice {
    pub n: usize,
    join: Vec<usize>,
    meet: Vec<usize>,
    cover: Vec<bool>,
}

impl OracleLattice {
    pub fn new(p: &Poset) -> Option<OracleLattice> {
        let n = p.len();
        if n == 0 {
            return None;
        }
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        let mut cover = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                join.push(oracle_join(p, a, b)?);
                meet.push(oracle_meet(p, a, b)?);
                cover.push(oracle_cover(p, a, b));
            }
        }
        Some(OracleLattice { n, join, meet, cover })
    }

    fn j(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    fn m(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    fn c(&self, a: usize, b: usize) -> bool {
        self.cover[a * self.n + b]
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
    }

    pub fn distributive(&self) -> bool {
        self.triples()
            .all(|(x, y, z)| self.m(x, self.j(y, z)) == self.j(self.m(x, y), self.m(x, z)))
    }

    /// x <= z implies x ∨ (y ∧ z) = (x ∨ y) ∧ z.
    pub fn modular(&self) -> bool {
        self.triples().all(|(x, y, z)| {
            let leq = self.j(x, z) == z;
            !leq || self.j(x, self.m(y, z)) == self.m(self.j(x, y), z)
        })
    }

    pub fn join_semidistributive(&self) -> bool {
        self.triples().all(|(x, y, z)| {
            self.j(x, y) != self.j(x, z) || self.j(x, y) == self.j(x, self.m(y, z))
        })
    }

    pub fn meet_semidistributive(&self) -> bool {
        self.triples().all(|(x, y, z)| {
            self.m(x, y) != self.m(x, z) || self.m(x, y) == self.m(x, self.j(y, z))
        })
    }

    /// p ∧ q ⋖ p, q implies p, q ⋖ p ∨ q.
    pub fn lower_semimodular(&self) -> bool {
        let n = self.n;
        (0..n).all(|p| {
            (0..n).all(|q| {
                let x = self.m(p, q);
                let y = self.j(p, q);
                !(self.c(x, p) && self.c(x, q)) || (self.c(p, y) && self.c(q, y))
            })
        })
    }

    /// p, q ⋖ p ∨ q implies p ∧ q ⋖ p, q.
    pub fn upper_semimodular(&self) -> bool {
        let n = self.n;
        (0..n).all(|p| {
            (0..n).all(|q| {
                let x = self.m(p, q);
                let y = self.j(p, q);
                !(self.c(p, y) && self.c(q, y)) || (self.c(x, p) && self.c(x, q))
            })
        })
    }
}

pub fn oracle_bottom(p: &Poset) -> Option<usize> {
    (0..p.len()).find(|&a| (0..p.len()).all(|b| p.leq(a, b)))
}

pub fn oracle_top(p: &Poset) -> Option<usize> {
    (0..p.len()).find(|&a| (0..p.len()).all(|b| p.leq(b, a)))
}

/// `ζ^t(0̂, 1̂)` by repeated matrix multiplication, for `t >= 1`.
pub fn oracle_zeta_power(p: &Poset, t: usize) -> BigInt {
    let n = p.len();
    let (bot, top) = (oracle_bottom(p).unwrap(), oracle_top(p).unwrap());
    let zeta: Vec<Vec<BigInt>> = (0..n)
        .map(|a| (0..n).map(|b| BigInt::from(p.leq(a, b) as u8)).collect())
        .collect();
    let mut acc = zeta.clone();
    for _ in 1..t {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for a in 0..n {
            for k in 0..n {
                if acc[a][k].is_zero() {
                    continue;
                }
                for b in 0..n {
                    if !zeta[k][b].is_zero() {
                        next[a][b] += &acc[a][k];
                    }
                }
            }
        }
        acc = next;
    }
    acc[bot][top].clone()
}

/// Hall's theorem: `μ(0̂, 1̂) = Σ_k (-1)^k · #{0̂ = x_0 < ... < x_k = 1̂}`.
pub fn oracle_mobius(p: &Poset) -> BigInt {
    let (bot, top) = (oracle_bottom(p).unwrap(), oracle_top(p).unwrap());
    let n = p.len();
    // ways[x][k]: strict chains from bot to x with k steps
    let mut ways = vec![vec![BigInt::zero(); n + 1]; n];
    ways[bot][0] = BigInt::one();
    for k in 1..=n {
        for x in 0..n {
            let mut s = BigInt::zero();
            for y in 0..n {
                if oracle_lt(p, y, x) {
                    s += &ways[y][k - 1];
                }
            }
            ways[x][k] = s;
        }
    }
    let mut total = BigInt::zero();
    for (k, w) in ways[top].iter().enumerate() {
        if k % 2 == 0 {
            total += w;
        } else {
            total -= w;
        }
    }
    total
}

/// `C(n, k)` for non-negative `n` as a ratio of factorials.
pub fn oracle_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let fact = |x: u64| (1..=x).fold(BigInt::one(), |acc, i| acc * i);
    fact(n) / (fact(k) * fact(n - k))
}

/// Weakly increasing `m`-tuples counted by brute force over all `n^m` tuples.
pub fn oracle_multichain_count(p: &Poset, m: usize) -> u64 {
    let n = p.len();
    let total = n.pow(m as u32);
    (0..total)
        .filter(|&code| {
            let mut t = Vec::with_capacity(m);
            let mut c = code;
            for _ in 0..m {
                t.push(c % n);
                c /= n;
            }
            t.reverse();
            t.windows(2).all(|w| p.leq(w[0], w[1]))
        })
        .count() as u64
}
