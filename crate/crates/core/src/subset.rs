use std::fmt;

use crate::group::{FiniteGroup, GroupElement};

/// A subset of a finite group, one bit per element index.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSet(u64);

impl GroupSet {
    pub const EMPTY: GroupSet = GroupSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        GroupSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(a: GroupElement) -> Self {
        GroupSet(1 << a.0)
    }

    /// Everything in `0..order`.
    pub fn full(order: usize) -> Self {
        if order >= 64 { GroupSet(u64::MAX) } else { GroupSet((1u64 << order) - 1) }
    }

    #[inline]
    pub fn contains(self, a: GroupElement) -> bool {
        a.0 < 64 && self.0 >> a.0 & 1 == 1
    }

    #[inline]
    pub fn with(self, a: GroupElement) -> Self {
        GroupSet(self.0 | 1 << a.0)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        GroupSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        GroupSet(self.0 & other.0)
    }

    #[inline]
    pub fn is_superset(self, other: Self) -> bool {
        self.0 & other.0 == other.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Elements in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = GroupElement> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(GroupElement(i))
        })
    }

    /// Left translate `s·F = { s·f : f ∈ F }`.
    pub fn translate(self, group: &FiniteGroup, s: GroupElement) -> Self {
        self.iter().fold(GroupSet::EMPTY, |acc, f| acc.with(group.mul(s, f)))
    }

    /// True when every member is an element of `group`.
    pub fn within(self, group: &FiniteGroup) -> bool {
        GroupSet::full(group.order()).is_superset(self)
    }
}

impl FromIterator<GroupElement> for GroupSet {
    fn from_iter<I: IntoIterator<Item = GroupElement>>(iter: I) -> Self {
        iter.into_iter().fold(GroupSet::EMPTY, GroupSet::with)
    }
}

impl fmt::Debug for GroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|g| g.0)).finish()
    }
}

/// All subsets of `free`, in binary-counter order over the ascending members of `free`,
/// each unioned with `base`.
pub(crate) fn subsets_over(base: GroupSet, free: GroupSet) -> impl Iterator<Item = GroupSet> {
    let members: Vec<GroupElement> = free.iter().collect();
    let count = 1u64 << members.len();
    (0..count).map(move |mask| {
        members
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .fold(base, |acc, (_, &g)| acc.with(g))
    })
}
