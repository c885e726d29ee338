//! Finite groups as validated Cayley tables.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest group order accepted by the table constructors.
///
/// Subsets of a group are stored as `u64` bitsets, which caps the order at 64.
/// Everything that enumerates the inverse semigroup has a much lower cap of its own.
pub const MAX_GROUP_ORDER: usize = 64;

/// An element of a [`FiniteGroup`], identified by its row in the Cayley table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub usize);

impl GroupElement {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty Cayley table")]
    Empty,
    #[error("group order {0} exceeds the supported maximum of {MAX_GROUP_ORDER}")]
    TooLarge(usize),
    #[error("row {row} has length {len}, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("entry table[{a}][{b}] = {value} is out of range")]
    OutOfRange { a: usize, b: usize, value: usize },
    #[error("not a Latin square: {line} {index} repeats element {value}")]
    NotLatinSquare { line: &'static str, index: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("cyclic group of order zero")]
    ZeroOrder,
}

/// A group of order `p` given by its multiplication table.
///
/// Immutable after construction; all accessors are plain table lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

/// On-disk form of a group: `{ "order": p, "table": [[...], ...] }`, row-major, zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates a Cayley table (`table[a][b] = a·b`) and computes identity and inverses.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Self, GroupError> {
        let p = table.len();
        if p == 0 {
            return Err(GroupError::Empty);
        }
        if p > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge(p));
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != p {
                return Err(GroupError::Ragged { row, len: r.len(), expected: p });
            }
            for (b, &value) in r.iter().enumerate() {
                if value >= p {
                    return Err(GroupError::OutOfRange { a: row, b, value });
                }
            }
        }

        let mut seen = vec![false; p];
        for (a, r) in table.iter().enumerate() {
            seen.iter_mut().for_each(|s| *s = false);
            for &v in r {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GroupError::NotLatinSquare { line: "row", index: a, value: v });
                }
            }
        }
        for b in 0..p {
            seen.iter_mut().for_each(|s| *s = false);
            for r in table {
                let v = r[b];
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GroupError::NotLatinSquare { line: "column", index: b, value: v });
                }
            }
        }

        let identity = (0..p)
            .find(|&e| (0..p).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverses = Vec::with_capacity(p);
        for a in 0..p {
            let inv = (0..p)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or(GroupError::NoInverse(a))?;
            inverses.push(inv);
        }

        for a in 0..p {
            for b in 0..p {
                let ab = table[a][b];
                for c in 0..p {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        Ok(FiniteGroup {
            order: p,
            table: table.iter().flatten().copied().collect(),
            identity,
            inverses,
        })
    }

    pub fn from_file(file: &GroupFile) -> Result<Self, GroupError> {
        if file.order != file.table.len() {
            return Err(GroupError::Ragged { row: 0, len: file.table.len(), expected: file.order });
        }
        Self::from_cayley_table(&file.table)
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile { order: self.order, table: self.cayley_table() }
    }

    /// The cyclic group Z/nZ, with element `a` standing for the residue `a`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let table: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_cayley_table(&table)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("order one is valid")
    }

    /// Z/2Z ⊕ Z/2Z.
    pub fn klein4() -> Self {
        let c2 = Self::cyclic(2).expect("order two is valid");
        Self::direct_product(&c2, &c2).expect("order four is valid")
    }

    /// Dihedral group of order `2n`: rotations `0..n`, reflections `n..2n`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        // (k, f) stands for r^k s^f, with s r = r^{-1} s.
        let decode = |x: usize| (x % n, x / n);
        let table: Vec<Vec<usize>> = (0..2 * n)
            .map(|a| {
                let (k1, f1) = decode(a);
                (0..2 * n)
                    .map(|b| {
                        let (k2, f2) = decode(b);
                        let k = if f1 == 0 { (k1 + k2) % n } else { (k1 + n - k2) % n };
                        k + n * ((f1 + f2) % 2)
                    })
                    .collect()
            })
            .collect();
        Self::from_cayley_table(&table)
    }

    /// Componentwise product; the pair `(a, b)` gets index `a·|G2| + b`.
    pub fn direct_product(g1: &Self, g2: &Self) -> Result<Self, GroupError> {
        let (p1, p2) = (g1.order, g2.order);
        let p = p1 * p2;
        if p > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge(p));
        }
        let table: Vec<Vec<usize>> = (0..p)
            .map(|x| {
                let (a1, b1) = (x / p2, x % p2);
                (0..p)
                    .map(|y| {
                        let (a2, b2) = (y / p2, y % p2);
                        g1.table[a1 * p1 + a2] * p2 + g2.table[b1 * p2 + b2]
                    })
                    .collect()
            })
            .collect();
        Self::from_cayley_table(&table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> GroupElement {
        GroupElement(self.identity)
    }

    #[inline]
    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.table[a.0 * self.order + b.0])
    }

    #[inline]
    pub fn inv(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inverses[a.0])
    }

    pub fn contains(&self, a: GroupElement) -> bool {
        a.0 < self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + Clone {
        (0..self.order).map(GroupElement)
    }

    /// Product of a sequence, left to right. The empty product is the identity.
    pub fn product<I: IntoIterator<Item = GroupElement>>(&self, items: I) -> GroupElement {
        items.into_iter().fold(self.identity(), |acc, x| self.mul(acc, x))
    }

    /// Smallest `k ≥ 1` with `a^k = e`.
    pub fn element_order(&self, a: GroupElement) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), GroupElement(0));
    }

    #[test]
    fn order_two_table() {
        let g = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.inv(GroupElement(1)), GroupElement(1));
        assert_eq!(g, FiniteGroup::cyclic(2).unwrap());
    }

    #[test]
    fn repeated_row_entry_rejected() {
        let err = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NotLatinSquare { line: "row", index: 1, value: 1 });
    }

    #[test]
    fn out_of_range_and_ragged() {
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 2], vec![1, 0]]),
            Err(GroupError::OutOfRange { a: 0, b: 1, value: 2 })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1]]),
            Err(GroupError::Ragged { row: 1, .. })
        ));
        assert_eq!(FiniteGroup::from_cayley_table(&[]), Err(GroupError::Empty));
    }

    #[test]
    fn latin_square_without_identity() {
        // Subtraction mod 3 is a Latin square with only a right identity.
        let t: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + 3 - b) % 3).collect()).collect();
        assert_eq!(FiniteGroup::from_cayley_table(&t), Err(GroupError::NoIdentity));
    }

    #[test]
    fn non_associative_loop() {
        // A loop of order 5 with identity 0 that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_cayley_table(&t),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn cyclic_basics() {
        assert_eq!(FiniteGroup::cyclic(1).unwrap().order(), 1);
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(c4.inv(GroupElement(1)), GroupElement(3));
        assert_eq!(FiniteGroup::cyclic(0), Err(GroupError::ZeroOrder));
    }

    #[test]
    fn cyclic_element_orders() {
        for n in 1..=12 {
            let g = FiniteGroup::cyclic(n).unwrap();
            for a in g.elements() {
                assert_eq!(g.element_order(a), n / gcd(a.0, n), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn direct_products() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let triv = FiniteGroup::trivial();

        assert_eq!(FiniteGroup::direct_product(&triv, &c4).unwrap(), c4);
        assert_eq!(FiniteGroup::direct_product(&c4, &triv).unwrap(), c4);

        let k = FiniteGroup::klein4();
        for a in k.elements() {
            assert_eq!(k.inv(a), a);
        }

        let c6 = FiniteGroup::direct_product(&c2, &c3).unwrap();
        // (1,1) is at index 1*3 + 1
        assert_eq!(c6.element_order(GroupElement(4)), 6);
    }

    #[test]
    fn dihedral_is_nonabelian() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        let (r, s) = (GroupElement(1), GroupElement(3));
        assert_ne!(d3.mul(r, s), d3.mul(s, r));
        assert_eq!(d3.element_order(s), 2);
        assert_eq!(d3.element_order(r), 3);
    }

    #[test]
    fn file_round_trip() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let back = FiniteGroup::from_file(&g.to_file()).unwrap();
        assert_eq!(g, back);
        let json = serde_json::to_string(&FiniteGroup::cyclic(2).unwrap().to_file()).unwrap();
        assert_eq!(json, r#"{"order":2,"table":[[0,1],[1,0]]}"#);
    }
}
