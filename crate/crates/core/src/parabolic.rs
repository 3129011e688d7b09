//! Standard parabolic subgroups `W_J`.
//!
//! Generators outside `1..=rank` in a subset are ignored.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::generators::GeneratorSet;
use crate::group::{Element, Group, SignedRoot};

/// `W_J` summarized by its positive roots, longest element and order.
#[derive(Clone, Debug)]
pub struct ParabolicDescriptor {
    pub subset: GeneratorSet,
    pub root_indices: BTreeSet<usize>,
    pub longest: Element,
    pub order: usize,
}

impl ParabolicDescriptor {
    pub fn new(g: &Group, j: GeneratorSet) -> Self {
        ParabolicDescriptor {
            subset: j,
            root_indices: phi_j(g, j),
            longest: longest_element_j(g, j),
            order: enumerate_parabolic(g, j).len(),
        }
    }
}

fn in_range(g: &Group, j: GeneratorSet) -> impl Iterator<Item = usize> {
    let rank = g.rank();
    j.iter().filter(move |&r| r <= rank)
}

/// Indices of the positive roots supported on `J`, i.e. `Φ_J⁺`.
pub fn phi_j(g: &Group, j: GeneratorSet) -> BTreeSet<usize> {
    g.positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, root)| root.support().is_subset(j))
        .map(|(i, _)| i)
        .collect()
}

/// Every element of `W_J`, breadth-first from the identity.
pub fn enumerate_parabolic(g: &Group, j: GeneratorSet) -> Vec<Element> {
    let gens: Vec<&Element> = in_range(g, j).map(|r| g.generator(r)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([g.identity()]);
    seen.insert(g.identity());
    while let Some(w) = queue.pop_front() {
        for s in &gens {
            let next = w.compose(s);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        out.push(w);
    }
    out
}

/// `w_J`, obtained by multiplying on the right by generators of `J` that
/// increase length until none does. The identity for `J = ∅`.
pub fn longest_element_j(g: &Group, j: GeneratorSet) -> Element {
    let gens: Vec<usize> = in_range(g, j).collect();
    let mut w = g.identity();
    while let Some(&r) = gens.iter().find(|&&r| !g.has_right_descent(&w, r)) {
        w = w.compose(g.generator(r));
    }
    w
}

/// `w · β = -β` for every `β ∈ Φ_J⁺`.
pub fn acts_as_minus_one(g: &Group, w: &Element, j: GeneratorSet) -> bool {
    phi_j(g, j).into_iter().all(|i| w.image(i) == SignedRoot::negative(i))
}

/// `w ∈ W_J`, tested as `N(w) ⊆ Φ_J⁺`.
pub fn in_parabolic(g: &Group, w: &Element, j: GeneratorSet) -> bool {
    let roots = g.positive_roots();
    w.images()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_negative())
        .all(|(i, _)| roots[i].support().is_subset(j))
}

/// A class is cuspidal when no member lies in a maximal proper standard
/// parabolic subgroup (every proper one sits inside a maximal one).
pub fn is_cuspidal_class(g: &Group, class_members: &[Element]) -> bool {
    let full = GeneratorSet::full(g.rank());
    (1..=g.rank()).all(|r| {
        let mut j = full;
        j.remove(r);
        !class_members.iter().any(|w| in_parabolic(g, w, j))
    })
}
