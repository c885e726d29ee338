#![allow(dead_code)]

use invsg::group::{FiniteGroup, GroupElement};
use invsg::partial_action::PartialAction;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("trivial", FiniteGroup::trivial()),
        ("cyclic:2", FiniteGroup::cyclic(2).unwrap()),
        ("cyclic:3", FiniteGroup::cyclic(3).unwrap()),
        ("cyclic:4", FiniteGroup::cyclic(4).unwrap()),
        ("klein4", FiniteGroup::klein4()),
    ]
}

/// Orbits of `G` on cosets `G/⟨h⟩`, as a permutation table `table[t][coset]`.
fn coset_action(g: &FiniteGroup, h: GroupElement) -> Vec<Vec<usize>> {
    let mut sub = vec![g.identity()];
    let mut x = h;
    while x != g.identity() {
        sub.push(x);
        x = g.mul(x, h);
    }
    let mut label = vec![usize::MAX; g.order()];
    let mut count = 0;
    for a in g.elements() {
        if label[a.0] == usize::MAX {
            for &k in &sub {
                label[g.mul(a, k).0] = count;
            }
            count += 1;
        }
    }
    let mut reps = vec![None; count];
    for a in g.elements() {
        reps[label[a.0]].get_or_insert(a);
    }
    let reps: Vec<GroupElement> = reps.into_iter().map(Option::unwrap).collect();
    g.elements()
        .map(|t| (0..count).map(|c| label[g.mul(t, reps[c]).0]).collect())
        .collect()
}

/// A global action of `g` built from coset orbits, with at most `max_points` points.
pub fn random_global_action<R: Rng>(g: &FiniteGroup, max_points: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let mut table: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    let mut size = 0;
    loop {
        let h = GroupElement(rng.gen_range(0..g.order()));
        let orbit = coset_action(g, h);
        let len = orbit[0].len();
        if size + len > max_points {
            break;
        }
        for (row, o) in table.iter_mut().zip(&orbit) {
            row.extend(o.iter().map(|&c| c + size));
        }
        size += len;
        if rng.gen_bool(0.3) {
            break;
        }
    }
    if size == 0 {
        for row in &mut table {
            row.push(0);
        }
    }
    // Random relabeling of the points.
    let n = table[0].len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    table.iter().map(|row| (0..n).map(|y| perm[row[inv[y]]]).collect()).collect()
}

/// The restriction of a random global action to a random subset of at most 8 points.
pub fn random_restriction<R: Rng>(g: &FiniteGroup, rng: &mut R) -> PartialAction {
    let global = random_global_action(g, 12, rng);
    let n = global[0].len();
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    let k = rng.gen_range(0..=n.min(8));
    points.truncate(k);
    PartialAction::restriction(g, &global, &points).unwrap()
}
