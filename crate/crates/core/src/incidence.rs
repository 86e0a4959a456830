//! Incidence-algebra computations over a finite poset: zeta and Möbius
//! matrices, the zeta polynomial and multichain counts.
//!
//! The zeta polynomial is carried by its chain profile `c_k`, the number of
//! chains `0̂ = x_0 < x_1 < ... < x_k = 1̂`. Writing `ζ = 1 + η` with `η`
//! strict gives `Z(P, t) = Σ_k c_k · binom(t, k)`, which is exact at every
//! integer `t`, negative ones included.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{PosetError, Result};
use crate::poset::{ElementId, Poset};

/// Dense integer matrix indexed by the poset's linear extension; zero off the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IncidenceMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        IncidenceMatrix { n, entries }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, a: ElementId, b: ElementId) -> &BigInt {
        &self.entries[a * self.n + b]
    }

    pub fn mul(&self, other: &IncidenceMatrix) -> IncidenceMatrix {
        let n = self.n;
        let mut out = vec![BigInt::zero(); n * n];
        for a in 0..n {
            for c in 0..n {
                let x = &self.entries[a * n + c];
                if x.is_zero() {
                    continue;
                }
                for b in 0..n {
                    let y = &other.entries[c * n + b];
                    if !y.is_zero() {
                        out[a * n + b] += x * y;
                    }
                }
            }
        }
        IncidenceMatrix { n, entries: out }
    }

    pub fn is_identity(&self) -> bool {
        *self == IncidenceMatrix::identity(self.n)
    }
}

pub fn zeta_matrix(p: &Poset) -> IncidenceMatrix {
    let n = p.len();
    let mut entries = vec![BigInt::zero(); n * n];
    for a in 0..n {
        for b in p.up_set(a).iter() {
            entries[a * n + b] = BigInt::one();
        }
    }
    IncidenceMatrix { n, entries }
}

fn mobius_row(p: &Poset, x: ElementId) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); p.len()];
    row[x] = BigInt::one();
    let above = p.up_set(x);
    for y in above.iter().skip(1) {
        // μ(x, y) = -Σ_{x ≤ z < y} μ(x, z)
        let sum: BigInt = above
            .intersection(p.down_set(y))
            .iter()
            .filter(|&z| z != y)
            .map(|z| &row[z])
            .sum();
        row[y] = -sum;
    }
    row
}

pub fn mobius_matrix(p: &Poset) -> IncidenceMatrix {
    let n = p.len();
    let entries = (0..n).flat_map(|x| mobius_row(p, x)).collect();
    IncidenceMatrix { n, entries }
}

/// `μ(a, b)`, zero when `a ≰ b`.
pub fn mobius(p: &Poset, a: ElementId, b: ElementId) -> Result<BigInt> {
    p.check_index(a)?;
    p.check_index(b)?;
    Ok(mobius_row(p, a).swap_remove(b))
}

/// `μ(0̂, 1̂)` of a bounded poset.
pub fn mobius_bottom_top(p: &Poset) -> Result<BigInt> {
    mobius(p, p.bottom()?, p.top()?)
}

/// Anchored chain counts `c_k`, `k = 0..=ℓ(P)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainProfile {
    counts: Vec<BigUint>,
}

impl ChainProfile {
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Degree of the zeta polynomial, which equals the length of the poset.
    pub fn degree(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        let mut binom = BigInt::one();
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                // binom(t, k) = binom(t, k-1) · (t - k + 1) / k, exact at every step
                binom = binom * (t - BigInt::from(k - 1)) / BigInt::from(k);
            }
            if !c.is_zero() {
                total += BigInt::from(c.clone()) * &binom;
            }
        }
        total
    }
}

/// Counts chains from `0̂` to `1̂` by number of steps along the strict order.
pub fn chain_profile(p: &Poset) -> Result<ChainProfile> {
    let bottom = p.bottom()?;
    let top = p.top()?;
    let n = p.len();
    let mut current = vec![BigUint::zero(); n];
    current[bottom] = BigUint::one();
    let mut counts = vec![current[top].clone()];
    let length = p.heights()[top];
    for _ in 0..length {
        let mut next = vec![BigUint::zero(); n];
        for x in 0..n {
            if current[x].is_zero() {
                continue;
            }
            for y in p.up_set(x).iter().filter(|&y| y != x) {
                next[y] += &current[x];
            }
        }
        current = next;
        counts.push(current[top].clone());
    }
    Ok(ChainProfile { counts })
}

/// `Z(P, t)` at an arbitrary integer.
pub fn zeta_polynomial_eval(p: &Poset, t: i64) -> Result<BigInt> {
    Ok(chain_profile(p)?.eval(&BigInt::from(t)))
}

/// Number of weakly increasing `m`-tuples of elements, `Z(P, m + 1)`.
pub fn count_multichains(p: &Poset, m: usize) -> Result<BigUint> {
    if m == 0 {
        return Err(PosetError::BadMultiplicity);
    }
    let value = chain_profile(p)?.eval(&BigInt::from(m + 1));
    Ok(value.to_biguint().expect("multichain counts are non-negative"))
}

/// Generalized binomial coefficient `t (t-1) ... (t-k+1) / k!`.
pub fn binomial(t: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (t - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// Reduced Euler characteristic of the order complex of the open interval
/// `(0̂, 1̂)`, from an explicit enumeration of its chains.
pub fn reduced_euler_characteristic(p: &Poset) -> Result<BigInt> {
    let bottom = p.bottom()?;
    let top = p.top()?;
    if bottom == top {
        return Err(PosetError::DegenerateBounds);
    }
    let proper: Vec<ElementId> = (0..p.len()).filter(|&x| x != bottom && x != top).collect();

    // Each chain with k elements is a face of dimension k - 1; the empty chain
    // is the face of dimension -1.
    fn walk(p: &Poset, proper: &[ElementId], from: usize, sign: i64, total: &mut BigInt) {
        for (i, &x) in proper.iter().enumerate().skip(from) {
            *total += sign;
            let rest = &proper[i + 1..];
            let above: Vec<_> = rest.iter().copied().filter(|&y| p.lt(x, y)).collect();
            walk(p, &above, 0, -sign, total);
        }
    }
    let mut total = BigInt::from(-1);
    walk(p, &proper, 0, 1, &mut total);
    Ok(total)
}

/// `Z(P, -t) = (-1)^{ℓ(P)} Z(P, t)` for `t = 1..=max_t`.
pub fn satisfies_eulerian_symmetry(p: &Poset, max_t: i64) -> Result<bool> {
    let profile = chain_profile(p)?;
    let sign = if profile.degree() % 2 == 0 { 1 } else { -1 };
    Ok((1..=max_t).all(|t| {
        let neg = profile.eval(&BigInt::from(-t));
        let pos = profile.eval(&BigInt::from(t));
        neg == pos * sign
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean_lattice, chain, hypercube_face_lattice};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn profile(p: &Poset) -> Vec<u64> {
        chain_profile(p)
            .unwrap()
            .counts()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn mobius_of_small_posets() {
        assert_eq!(mobius_bottom_top(&chain(2).unwrap()).unwrap(), big(-1));
        assert_eq!(mobius_bottom_top(&chain(1).unwrap()).unwrap(), big(1));
        assert_eq!(mobius_bottom_top(&chain(3).unwrap()).unwrap(), big(0));
        for n in 0..=4 {
            let expected = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(mobius_bottom_top(&boolean_lattice(n).unwrap()).unwrap(), big(expected));
        }
        for n in 1..=4 {
            let expected = if n % 2 == 0 { -1 } else { 1 };
            assert_eq!(
                mobius_bottom_top(&hypercube_face_lattice(n).unwrap()).unwrap(),
                big(expected)
            );
        }
    }

    #[test]
    fn mobius_inverts_zeta() {
        let p = boolean_lattice(3).unwrap();
        let z = zeta_matrix(&p);
        let m = mobius_matrix(&p);
        assert!(m.mul(&z).is_identity());
        assert!(z.mul(&m).is_identity());
        assert_eq!(mobius(&p, 3, 4).unwrap(), big(0));
    }

    #[test]
    fn profiles() {
        assert_eq!(profile(&chain(3).unwrap()), vec![0, 1, 1]);
        assert_eq!(profile(&boolean_lattice(2).unwrap()), vec![0, 1, 2]);
        assert_eq!(profile(&chain(1).unwrap()), vec![1]);
        assert_eq!(chain_profile(&chain(4).unwrap()).unwrap().degree(), 3);
        let anti = crate::families::antichain(2).unwrap();
        assert_eq!(chain_profile(&anti), Err(PosetError::NotBounded));
    }

    #[test]
    fn zeta_polynomial_of_three_chain() {
        let c3 = chain(3).unwrap();
        for m in -5i64..=6 {
            assert_eq!(zeta_polynomial_eval(&c3, m).unwrap(), big(m * (m + 1) / 2));
        }
        assert_eq!(zeta_polynomial_eval(&c3, 3).unwrap(), big(6));
        assert_eq!(zeta_polynomial_eval(&c3, 1).unwrap(), big(1));
        assert_eq!(zeta_polynomial_eval(&c3, 2).unwrap(), big(3));
    }

    #[test]
    fn multichain_counts() {
        assert_eq!(count_multichains(&chain(3).unwrap(), 3).unwrap(), BigUint::from(10u32));
        assert_eq!(count_multichains(&boolean_lattice(3).unwrap(), 2).unwrap(), BigUint::from(27u32));
        assert_eq!(
            count_multichains(&hypercube_face_lattice(1).unwrap(), 2).unwrap(),
            BigUint::from(9u32)
        );
        assert_eq!(count_multichains(&chain(3).unwrap(), 0), Err(PosetError::BadMultiplicity));
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(binomial(&big(5), 2), big(10));
        assert_eq!(binomial(&big(-1), 3), big(-1));
        assert_eq!(binomial(&big(-2), 2), big(3));
        assert_eq!(binomial(&big(2), 3), big(0));
        assert_eq!(binomial(&big(7), 0), big(1));
    }

    #[test]
    fn euler_characteristic() {
        assert_eq!(reduced_euler_characteristic(&chain(2).unwrap()).unwrap(), big(-1));
        assert_eq!(reduced_euler_characteristic(&boolean_lattice(2).unwrap()).unwrap(), big(1));
        assert_eq!(
            reduced_euler_characteristic(&hypercube_face_lattice(2).unwrap()).unwrap(),
            big(-1)
        );
        assert_eq!(
            reduced_euler_characteristic(&chain(1).unwrap()),
            Err(PosetError::DegenerateBounds)
        );
    }

    #[test]
    fn hypercubes_are_eulerian() {
        for n in 1..=3 {
            assert!(satisfies_eulerian_symmetry(&hypercube_face_lattice(n).unwrap(), 4).unwrap());
        }
        assert!(!satisfies_eulerian_symmetry(&chain(3).unwrap(), 2).unwrap());
    }
}
