//! Brute-force oracles over plain permutations of `0..n`. Nothing here touches
//! root systems, so agreement with the library is independent evidence.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};

use coxinv_core::{Element, Group};

pub type Perm = Vec<usize>;

pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(k: usize, p: &mut Perm, out: &mut Vec<Perm>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    let mut out = Vec::new();
    rec(0, &mut (0..n).collect(), &mut out);
    out
}

/// Inversion count, i.e. Coxeter length in `Sym(n)`.
pub fn inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

/// `(a ∘ b)(i) = a(b(i))`.
pub fn after(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

/// Left-to-right product: apply `a` first, then `b`.
pub fn then(a: &[usize], b: &[usize]) -> Perm {
    after(b, a)
}

pub fn is_involutive(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &j)| p[j] == i)
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &j)| i == j)
}

/// 1-based cycle notation, fixed points omitted.
pub fn cycles(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// `(1 2 ... n)` as a function: `i -> i + 1`.
pub fn long_cycle(n: usize) -> Perm {
    (0..n).map(|i| (i + 1) % n).collect()
}

/// Minimum of `ℓ(x) + ℓ(y) - ℓ(w)` over `w = x ∘ y` with `x² = y² = 1`.
/// `allow_identity_y = false` restricts `y` to order exactly 2.
pub fn excess(w: &[usize], involutive: &[Perm], allow_identity_y: bool) -> usize {
    involutive
        .iter()
        .filter(|y| allow_identity_y || !is_identity(y))
        .filter_map(|y| {
            let x = after(w, y);
            is_involutive(&x).then(|| inversions(&x) + inversions(y) - inversions(w))
        })
        .min()
        .expect("every permutation is a product of two involutive permutations")
}

pub fn involutive_perms(n: usize) -> Vec<Perm> {
    all_perms(n).into_iter().filter(|p| is_involutive(p)).collect()
}

pub fn histogram(n: usize, allow_identity_y: bool) -> BTreeMap<usize, u64> {
    let inv = involutive_perms(n);
    let mut h = BTreeMap::new();
    for w in all_perms(n) {
        *h.entry(excess(&w, &inv, allow_identity_y)).or_insert(0) += 1;
    }
    h
}

/// All `(x, y)` with `x`, `y` involutive, `x` then `y` equal to `w`, and
/// `ℓ(x) + ℓ(y)` minimal.
pub fn spartan_pairs_left_to_right(w: &[usize]) -> Vec<(Perm, Perm)> {
    let inv = involutive_perms(w.len());
    let mut pairs = Vec::new();
    for x in &inv {
        for y in &inv {
            if then(x, y) == w {
                pairs.push((x.clone(), y.clone()));
            }
        }
    }
    let best = pairs.iter().map(|(x, y)| inversions(x) + inversions(y)).min().unwrap();
    pairs.retain(|(x, y)| inversions(x) + inversions(y) == best);
    pairs
}

/// Full conjugacy orbit by closure under generator conjugation.
pub fn orbit(g: &Group, w: &Element) -> Vec<Element> {
    let mut seen = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    let mut out = Vec::new();
    while let Some(x) = queue.pop_front() {
        for s in g.generators() {
            let y = s.compose(&x).compose(s);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    out
}

/// Groups every default-run suite covers.
pub const CI_GROUPS: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "F4", "H3", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)",
    "I2(8)", "I2(9)", "I2(10)", "I2(11)", "I2(12)",
];
