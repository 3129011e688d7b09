//! Conjugacy classes by orbit closure under generator conjugation.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::generators::Word;
use crate::group::{Element, Group};
use crate::parabolic::is_cuspidal_class;

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Shortest member, ties broken by reduced word.
    pub representative: Element,
    /// Members in breadth-first discovery order from the seed element.
    pub members: Vec<Element>,
    pub cuspidal: bool,
}

/// `{"representative": word, "size": n, "cuspidal": bool}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub representative: Word,
    pub size: usize,
    pub cuspidal: bool,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, w: &Element) -> bool {
        self.members.contains(w)
    }

    pub fn report(&self, g: &Group) -> ClassReport {
        ClassReport {
            representative: g.reduced_word(&self.representative),
            size: self.size(),
            cuspidal: self.cuspidal,
        }
    }
}

fn orbit(g: &Group, w: &Element) -> Vec<Element> {
    let mut seen = HashSet::from([w.clone()]);
    let mut members = Vec::new();
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for s in g.generators() {
            let y = s.compose(&x).compose(s);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        members.push(x);
    }
    members
}

pub fn conjugacy_class(g: &Group, w: &Element) -> ConjugacyClass {
    let members = orbit(g, w);
    let min_len = members.iter().map(Element::length).min().unwrap_or(0);
    let representative = members
        .iter()
        .filter(|m| m.length() == min_len)
        .min_by_key(|m| g.reduced_word(m))
        .cloned()
        .expect("orbit contains its seed");
    let cuspidal = is_cuspidal_class(g, &members);
    ConjugacyClass {
        representative,
        members,
        cuspidal,
    }
}

/// Partition of the group into classes, ordered by representative length
/// and then representative word.
pub fn class_representatives(g: &Group) -> Vec<ConjugacyClass> {
    let mut assigned = vec![false; g.order()];
    let mut classes = Vec::new();
    for (i, w) in g.elements().enumerate() {
        if assigned[i] {
            continue;
        }
        let class = conjugacy_class(g, w);
        for m in &class.members {
            let idx = g.index_of(m).expect("orbit stays inside the group");
            assigned[idx] = true;
        }
        classes.push(class);
    }
    classes.sort_by_cached_key(|c| g.sort_key(&c.representative));
    classes
}
