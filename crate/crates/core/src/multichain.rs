//! The poset of `m`-multichains `P^(m)`: weakly increasing `m`-tuples of
//! elements of a bounded poset, ordered componentwise.

use std::collections::HashMap;

use crate::error::{PosetError, Result};
use crate::incidence::count_multichains;
use crate::isomorphism::verify_order_isomorphism;
use crate::lattice::{is_lattice_homomorphism, lattice_tables, LatticeTables};
use crate::poset::{check_size, direct_product, ElementId, Poset};

#[derive(Debug, Clone)]
pub struct MultichainPoset {
    pub base: Poset,
    pub m: usize,
    pub poset: Poset,
    tuples: Vec<Vec<ElementId>>,
    index: HashMap<Vec<ElementId>, ElementId>,
}

impl MultichainPoset {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// The base-poset tuple stored at `index`.
    pub fn decode(&self, index: ElementId) -> &[ElementId] {
        &self.tuples[index]
    }

    pub fn tuples(&self) -> &[Vec<ElementId>] {
        &self.tuples
    }

    pub fn index_of(&self, tuple: &[ElementId]) -> Option<ElementId> {
        self.index.get(tuple).copied()
    }
}

/// Builds `P^(m)` with tuples in lexicographic index order.
pub fn multichain_poset(base: &Poset, m: usize) -> Result<MultichainPoset> {
    if m == 0 {
        return Err(PosetError::BadMultiplicity);
    }
    let size = count_multichains(base, m)?;
    let size = u128::try_from(&size).unwrap_or(u128::MAX);
    check_size(size)?;

    let mut tuples = Vec::with_capacity(size as usize);
    let mut current = Vec::with_capacity(m);
    for first in 0..base.len() {
        current.push(first);
        extend(base, m, &mut current, &mut tuples);
        current.pop();
    }

    let poset = Poset::from_sorted_order(tuples.len(), |x, y| {
        tuples[x]
            .iter()
            .zip(&tuples[y])
            .all(|(&a, &b)| base.leq(a, b))
    });
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<_> = t.iter().map(|&e| base.display_label(e)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let index = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    Ok(MultichainPoset {
        base: base.clone(),
        m,
        poset: poset.with_labels(labels)?,
        tuples,
        index,
    })
}

fn extend(base: &Poset, m: usize, current: &mut Vec<ElementId>, out: &mut Vec<Vec<ElementId>>) {
    if current.len() == m {
        out.push(current.clone());
        return;
    }
    let last = *current.last().expect("non-empty prefix");
    for next in base.up_set(last).iter() {
        current.push(next);
        extend(base, m, current, out);
        current.pop();
    }
}

/// `Σ rk(p_i)` for the tuple at `index`.
pub fn multichain_rank(mp: &MultichainPoset, index: ElementId) -> Result<usize> {
    mp.poset.check_index(index)?;
    if !mp.base.is_graded() {
        return Err(PosetError::NotGraded);
    }
    let ranks = mp.base.ranks()?;
    Ok(mp.decode(index).iter().map(|&e| ranks[e]).sum())
}

/// Componentwise join and meet tables, certified against the tables
/// computed directly from the order of `P^(m)`.
pub fn multichain_lattice_tables(mp: &MultichainPoset) -> Result<LatticeTables> {
    let base = lattice_tables(&mp.base)?;
    let combine = |x: ElementId, y: ElementId, op: &dyn Fn(ElementId, ElementId) -> ElementId| {
        let t: Vec<_> = mp
            .decode(x)
            .iter()
            .zip(mp.decode(y))
            .map(|(&a, &b)| op(a, b))
            .collect();
        mp.index_of(&t)
    };
    let missing = std::cell::Cell::new(false);
    let lookup = |t: Option<ElementId>| {
        t.unwrap_or_else(|| {
            missing.set(true);
            0
        })
    };
    let tables = LatticeTables::from_fns(
        mp.len(),
        |x, y| lookup(combine(x, y, &|a, b| base.join(a, b))),
        |x, y| lookup(combine(x, y, &|a, b| base.meet(a, b))),
    );
    if missing.get() {
        return Err(PosetError::CertificationFailed(
            "componentwise operation left the multichains".into(),
        ));
    }
    let generic = lattice_tables(&mp.poset)?;
    if generic != tables {
        return Err(PosetError::CertificationFailed(
            "componentwise tables differ from order-derived tables".into(),
        ));
    }
    Ok(tables)
}

/// The `m`-fold direct power of the base and the inclusion of `P^(m)` into
/// it, each tuple sent to its mixed-radix index.
pub fn power_embedding(mp: &MultichainPoset) -> Result<(Poset, Vec<ElementId>)> {
    let power = crate::poset::direct_power(&mp.base, mp.m)?;
    let n = mp.base.len();
    let map = mp
        .tuples()
        .iter()
        .map(|t| t.iter().fold(0, |acc, &e| acc * n + e))
        .collect();
    Ok((power, map))
}

#[derive(Debug, Clone)]
pub struct LiftedHomomorphism {
    pub source: MultichainPoset,
    pub target: MultichainPoset,
    pub map: Vec<ElementId>,
}

/// Applies a surjective lattice homomorphism `f: P → Q` componentwise to
/// get `P^(m) → Q^(m)`, and re-verifies the result exhaustively.
pub fn lift_homomorphism(
    source: &Poset,
    target: &Poset,
    f: &[ElementId],
    m: usize,
) -> Result<LiftedHomomorphism> {
    if !is_lattice_homomorphism(source, target, f)?.is_surjective_homomorphism() {
        return Err(PosetError::NotAHomomorphism);
    }
    let ms = multichain_poset(source, m)?;
    let mt = multichain_poset(target, m)?;
    let map = ms
        .tuples()
        .iter()
        .map(|t| {
            let image: Vec<_> = t.iter().map(|&e| f[e]).collect();
            mt.index_of(&image).ok_or_else(|| {
                PosetError::CertificationFailed(format!("{image:?} is not a multichain"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if !is_lattice_homomorphism(&ms.poset, &mt.poset, &map)?.is_surjective_homomorphism() {
        return Err(PosetError::CertificationFailed(
            "lifted map is not a surjective homomorphism".into(),
        ));
    }
    Ok(LiftedHomomorphism {
        source: ms,
        target: mt,
        map,
    })
}

/// Both sides of `(P × Q)^(m) ≅ P^(m) × Q^(m)` and the verified interleaving map.
#[derive(Debug, Clone)]
pub struct ProductWitness {
    pub left: MultichainPoset,
    pub right: Poset,
    pub map: Vec<ElementId>,
}

pub fn product_commutes(p: &Poset, q: &Poset, m: usize) -> Result<ProductWitness> {
    let pq = direct_product(p, q)?;
    let left = multichain_poset(&pq, m)?;
    let mp = multichain_poset(p, m)?;
    let mq = multichain_poset(q, m)?;
    let right = direct_product(&mp.poset, &mq.poset)?;
    let nq = q.len();
    let map = left
        .tuples()
        .iter()
        .map(|t| {
            let ps: Vec<_> = t.iter().map(|&e| e / nq).collect();
            let qs: Vec<_> = t.iter().map(|&e| e % nq).collect();
            match (mp.index_of(&ps), mq.index_of(&qs)) {
                (Some(i), Some(j)) => Ok(i * mq.len() + j),
                _ => Err(PosetError::CertificationFailed(
                    "a coordinate projection is not a multichain".into(),
                )),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    if !verify_order_isomorphism(&left.poset, &right, &map)? {
        return Err(PosetError::CertificationFailed(
            "interleaving map is not an order isomorphism".into(),
        ));
    }
    Ok(ProductWitness { left, right, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean_lattice, chain, diamond};

    #[test]
    fn sits_inside_the_power_as_a_sublattice() {
        let d = diamond();
        let mp = multichain_poset(&d, 2).unwrap();
        let (power, map) = power_embedding(&mp).unwrap();
        assert_eq!(power.len(), 25);
        assert!(crate::lattice::is_sublattice(&mp.poset, &power, &map).unwrap());
    }

    #[test]
    fn zero_multiplicity_is_rejected() {
        assert_eq!(
            multichain_poset(&chain(3).unwrap(), 0).unwrap_err(),
            PosetError::BadMultiplicity
        );
    }

    #[test]
    fn unbounded_base_is_rejected() {
        let anti = crate::families::antichain(2).unwrap();
        assert_eq!(multichain_poset(&anti, 2).unwrap_err(), PosetError::NotBounded);
    }

    #[test]
    fn chain_three_pairs() {
        let mp = multichain_poset(&chain(3).unwrap(), 2).unwrap();
        let tuples: Vec<Vec<usize>> = mp.tuples().to_vec();
        assert_eq!(
            tuples,
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2], vec![2, 2]]
        );
        assert_eq!(mp.poset.label(1), Some("(1,2)"));
    }

    #[test]
    fn m_equal_one_copies_the_base() {
        let d = diamond();
        let mp = multichain_poset(&d, 1).unwrap();
        assert_eq!(mp.poset.without_labels(), Poset::from_sorted_order(5, |a, b| d.leq(a, b)));
    }

    #[test]
    fn three_atoms_have_twelve_two_multichains() {
        let mp = multichain_poset(&diamond(), 2).unwrap();
        assert_eq!(mp.len(), 12);
        assert_eq!(mp.poset.cover_edges().len(), 18);
    }

    #[test]
    fn ranks_add_up() {
        let b2 = boolean_lattice(2).unwrap();
        let mp = multichain_poset(&b2, 2).unwrap();
        assert_eq!(multichain_rank(&mp, 0), Ok(0));
        let x = mp.index_of(&[0b01, 0b11]).unwrap();
        assert_eq!(multichain_rank(&mp, x), Ok(3));
        let b3 = boolean_lattice(3).unwrap();
        let mp3 = multichain_poset(&b3, 3).unwrap();
        assert_eq!(multichain_rank(&mp3, mp3.len() - 1), Ok(9));
        let generic = mp3.poset.ranks().unwrap();
        for i in 0..mp3.len() {
            assert_eq!(multichain_rank(&mp3, i).unwrap(), generic[i]);
        }
    }

    #[test]
    fn rank_needs_graded_base() {
        let mp = multichain_poset(&crate::families::pentagon(), 2).unwrap();
        assert_eq!(multichain_rank(&mp, 0), Err(PosetError::NotGraded));
    }

    #[test]
    fn componentwise_tables() {
        let b2 = boolean_lattice(2).unwrap();
        let mp = multichain_poset(&b2, 2).unwrap();
        let t = multichain_lattice_tables(&mp).unwrap();
        let x = mp.index_of(&[0b01, 0b01]).unwrap();
        let y = mp.index_of(&[0b10, 0b10]).unwrap();
        assert_eq!(mp.decode(t.join(x, y)), &[0b11, 0b11]);
        for z in 0..mp.len() {
            assert_eq!(t.meet(z, 0), 0);
        }

        let d = multichain_poset(&diamond(), 2).unwrap();
        let t = multichain_lattice_tables(&d).unwrap();
        let (oa, ob) = (d.index_of(&[0, 1]).unwrap(), d.index_of(&[0, 2]).unwrap());
        assert_eq!(d.decode(t.join(oa, ob)), &[0, 4]);
    }

    #[test]
    fn lifting_collapse_of_four_chain() {
        let c4 = chain(4).unwrap();
        let c2 = chain(2).unwrap();
        let lifted = lift_homomorphism(&c4, &c2, &[0, 0, 1, 1], 2).unwrap();
        // (1,3) ↦ (1,2)
        let x = lifted.source.index_of(&[0, 2]).unwrap();
        assert_eq!(lifted.target.decode(lifted.map[x]), &[0, 1]);

        let id = lift_homomorphism(&c4, &c4, &[0, 1, 2, 3], 3).unwrap();
        assert!(id.map.iter().enumerate().all(|(i, &j)| i == j));

        let b2 = boolean_lattice(2).unwrap();
        assert_eq!(
            lift_homomorphism(&b2, &c2, &[0, 0, 0, 1], 2).unwrap_err(),
            PosetError::NotAHomomorphism
        );
    }

    #[test]
    fn products() {
        let c2 = chain(2).unwrap();
        let c3 = chain(3).unwrap();
        let w = product_commutes(&c2, &c2, 2).unwrap();
        assert_eq!((w.left.len(), w.right.len()), (9, 9));
        let w = product_commutes(&c2, &c3, 2).unwrap();
        assert_eq!((w.left.len(), w.right.len()), (18, 18));
        let w = product_commutes(&c2, &c3, 1).unwrap();
        assert!(w.map.iter().enumerate().all(|(i, &j)| i == j));
    }
}
