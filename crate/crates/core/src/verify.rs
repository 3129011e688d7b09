//! Self-check battery for one group. Every check is exact and seeded, so two
//! runs over the same group print identical reports.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::conjugacy::{class_representatives, conjugacy_class};
use crate::excess::{epsilon, excess_in, reversers_in};
use crate::generators::GeneratorSet;
use crate::group::{Element, Group};
use crate::involution::{richardson_normal_form, InvolutionTable};
use crate::parabolic::{acts_as_minus_one, enumerate_parabolic, in_parabolic, longest_element_j, phi_j};
use crate::type_a::{cycle_excess_closed_form, TypeA};
use crate::witness::{witness_in_class, zero_excess_witness_in, MinimizeMode};

pub const DEFAULT_SEED: u64 = 0x00C0_FFEE;
pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random pairs drawn for the product checks.
    pub samples: usize,
    pub mode: MinimizeMode,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            mode: MinimizeMode::Global,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Case count on success, first counterexample on failure.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    /// Coxeter matrix rows separated by ` / `.
    pub group: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {:<24} {}", c.name, c.detail)?;
        }
        let failed = self.failures().count();
        write!(f, "{}: {} checks, {failed} failed", self.group, self.checks.len())
    }
}

type Outcome = Result<usize, String>;

fn record(name: &str, outcome: Outcome) -> CheckResult {
    match outcome {
        Ok(n) => CheckResult {
            name: name.to_string(),
            passed: true,
            detail: format!("{n} cases"),
        },
        Err(msg) => CheckResult {
            name: name.to_string(),
            passed: false,
            detail: msg,
        },
    }
}

pub fn run(g: &Group, opts: &VerifyOptions) -> VerifyReport {
    let table = InvolutionTable::new(g);
    let mut checks = vec![
        record("group-structure", check_structure(g)),
        record("reduced-words", check_reduced_words(g)),
        record("longest-element", check_longest(g)),
        record("product-length", check_product_length(g, opts)),
        record("product-inversions", check_product_inversions(g, opts)),
        record("double-descent", check_double_descent(g)),
        record("parabolic", check_parabolic(g)),
        record("richardson", check_richardson(g, &table)),
        record("excess-even", check_excess_even(g, &table)),
        record("excess-inverse", check_excess_inverse(g, &table)),
        record("epsilon-identity", check_epsilon_identity(g, &table, opts)),
        record("class-sizes", check_class_sizes(g)),
        record("witness", check_witnesses(g, &table, opts.mode)),
    ];
    if let Ok(ta) = TypeA::new(g) {
        checks.push(record("cycle-excess", check_cycle(&ta, &table)));
    }
    VerifyReport {
        group: g.matrix().to_string().replace('\n', " / "),
        checks,
    }
}

fn fail<T>(g: &Group, w: &Element, what: &str) -> Result<T, String> {
    Err(format!("{what} at [{}]", g.reduced_word(w)))
}

fn check_structure(g: &Group) -> Outcome {
    for w in g.elements() {
        if w.length() == 0 && !w.is_identity() {
            return fail(g, w, "non-identity element of length 0");
        }
        if w.inverse().length() != w.length() {
            return fail(g, w, "length(w^-1) != length(w)");
        }
        if w.compose(&w.inverse()) != g.identity() {
            return fail(g, w, "w w^-1 != 1");
        }
        if g.index_of(w).is_none() {
            return fail(g, w, "element missing from index");
        }
    }
    for (r, s) in g.generators().iter().enumerate() {
        if !s.is_involution() || s.length() != 1 {
            return Err(format!("generator {} is not a simple reflection", r + 1));
        }
    }
    Ok(g.order())
}

fn check_reduced_words(g: &Group) -> Outcome {
    for w in g.elements() {
        let word = g.reduced_word(w);
        if word.len() != w.length() {
            return fail(g, w, "reduced word length differs from inversion count");
        }
        match g.element_from_word(&word) {
            Ok(back) if &back == w => {}
            _ => return fail(g, w, "reduced word does not evaluate back"),
        }
    }
    Ok(g.order())
}

fn check_longest(g: &Group) -> Outcome {
    let w0 = g.longest_element();
    let n = g.num_positive_roots();
    if w0.length() != n || !w0.is_involutive() {
        return fail(g, w0, "longest element malformed");
    }
    for w in g.elements() {
        if w.compose(w0).length() != n - w.length() {
            return fail(g, w, "length(w w0) != N - length(w)");
        }
    }
    Ok(g.order())
}

fn random_pairs<'g>(g: &'g Group, opts: &VerifyOptions) -> impl Iterator<Item = (&'g Element, &'g Element)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let n = g.order();
    (0..opts.samples).map(move |_| {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        (g.element_at(a), g.element_at(b))
    })
}

fn check_product_length(g: &Group, opts: &VerifyOptions) -> Outcome {
    for (a, b) in random_pairs(g, opts) {
        let shared = a.inversion_set().intersection_len(&b.inverse().inversion_set());
        if a.compose(b).length() + 2 * shared != a.length() + b.length() {
            return fail(g, &a.compose(b), "product length formula fails");
        }
    }
    Ok(opts.samples)
}

/// `N(ab) = (N(b) \ -b⁻¹N(a)) ∪ b⁻¹(N(a) \ N(b⁻¹))`, computed through the
/// images of the roots of `N(a)` under `b⁻¹`.
fn check_product_inversions(g: &Group, opts: &VerifyOptions) -> Outcome {
    for (a, b) in random_pairs(g, opts) {
        let b_inv = b.inverse();
        let mut flipped = BTreeSet::new();
        let mut carried = BTreeSet::new();
        for i in a.inversion_set().iter() {
            let img = b_inv.image(i);
            if img.is_negative() {
                flipped.insert(img.index());
            } else {
                carried.insert(img.index());
            }
        }
        let mut rhs: BTreeSet<usize> = b.inversion_set().iter().filter(|i| !flipped.contains(i)).collect();
        rhs.extend(carried);
        if a.compose(b).inversion_set().members() != &rhs {
            return fail(g, &a.compose(b), "inversion set identity fails");
        }
    }
    Ok(opts.samples)
}

fn check_double_descent(g: &Group) -> Outcome {
    let mut cases = 0;
    for w in g.elements() {
        for r in 1..=g.rank() {
            if g.has_left_descent(w, r) && g.has_right_descent(w, r) {
                let s = g.generator(r);
                let c = s.compose(w).compose(s);
                if &c != w && c.length() + 2 != w.length() {
                    return fail(g, w, &format!("conjugation by {r} neither fixes nor drops length by 2"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn check_parabolic(g: &Group) -> Outcome {
    let subsets: Vec<GeneratorSet> = GeneratorSet::all_subsets(g.rank()).collect();
    for &j in &subsets {
        let members = enumerate_parabolic(g, j);
        let phi = phi_j(g, j);
        let wj = longest_element_j(g, j);
        if wj.inversion_set().members() != &phi {
            return Err(format!("N(w_J) != Phi_J for J = {{{j}}}"));
        }
        if members
            .iter()
            .any(|m| m.length() > wj.length() || !in_parabolic(g, m, j))
        {
            return Err(format!("W_J leaves Phi_J for J = {{{j}}}"));
        }
        if !wj.is_involutive() {
            return Err(format!("w_J is not an involution for J = {{{j}}}"));
        }
        // -1 on Phi_J happens exactly when w_J is central in W_J
        let central = j.iter().all(|r| {
            let s = g.generator(r);
            s.compose(&wj) == wj.compose(s)
        });
        if acts_as_minus_one(g, &wj, j) != central {
            return Err(format!("-1 action disagrees with centrality for J = {{{j}}}"));
        }
    }
    Ok(subsets.len())
}

fn check_richardson(g: &Group, table: &InvolutionTable) -> Outcome {
    let mut class_min: HashMap<Element, usize> = HashMap::new();
    for x in table.involutions() {
        let form = richardson_normal_form(g, x).map_err(|e| e.to_string())?;
        if x.conjugate_by(&form.conjugator) != form.w_j || form.w_j != longest_element_j(g, form.j) {
            return fail(g, x, "conjugator does not reach w_J");
        }
        if !acts_as_minus_one(g, &form.w_j, form.j) {
            return fail(g, x, "endpoint is not -1 on Phi_J");
        }
        let min = match class_min.get(x) {
            Some(&m) => m,
            None => {
                let class = conjugacy_class(g, x);
                let m = class.members.iter().map(Element::length).min().unwrap_or(0);
                for c in class.members {
                    class_min.insert(c, m);
                }
                m
            }
        };
        if form.w_j.length() != min {
            return fail(g, x, "endpoint is not of minimal length in its class");
        }
    }
    Ok(table.involutions().len())
}

fn check_excess_even(g: &Group, table: &InvolutionTable) -> Outcome {
    for w in g.elements() {
        let e = excess_in(table, w).map_err(|e| e.to_string())?;
        if e % 2 != 0 {
            return fail(g, w, "odd excess");
        }
        if w.is_involutive() && e != 0 {
            return fail(g, w, "involution with positive excess");
        }
    }
    Ok(g.order())
}

fn check_excess_inverse(g: &Group, table: &InvolutionTable) -> Outcome {
    for w in g.elements() {
        let a = excess_in(table, w).map_err(|e| e.to_string())?;
        let b = excess_in(table, &w.inverse()).map_err(|e| e.to_string())?;
        if a != b {
            return fail(g, w, "excess(w) != excess(w^-1)");
        }
    }
    Ok(g.order())
}

/// `epsilon(w, y) = 2 (ℓ(y) - |N(y) ∩ N(w)|)` on a seeded sample of elements.
fn check_epsilon_identity(g: &Group, table: &InvolutionTable, opts: &VerifyOptions) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5A5A);
    let picks = opts.samples.min(g.order()).max(1);
    let mut cases = 0;
    for _ in 0..picks {
        let w = g.element_at(rng.gen_range(0..g.order()));
        let nw = w.inversion_set();
        for y in reversers_in(table, w).members {
            let eps = epsilon(g, w, &y).map_err(|e| e.to_string())?;
            if eps != 2 * (y.length() - y.inversion_set().intersection_len(&nw)) {
                return fail(g, w, "epsilon identity fails");
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn check_class_sizes(g: &Group) -> Outcome {
    let classes = class_representatives(g);
    let total: usize = classes.iter().map(|c| c.size()).sum();
    if total != g.order() {
        return Err(format!("class sizes sum to {total}, not {}", g.order()));
    }
    for c in &classes {
        if !g.order().is_multiple_of(c.size()) {
            return fail(g, &c.representative, "class size does not divide the order");
        }
    }
    Ok(classes.len())
}

fn check_witnesses(g: &Group, table: &InvolutionTable, mode: MinimizeMode) -> Outcome {
    let classes = class_representatives(g);
    for c in &classes {
        let cert = zero_excess_witness_in(g, table, &c.representative, mode).map_err(|e| e.to_string())?;
        if !witness_in_class(g, &cert) {
            return fail(g, &c.representative, "w* left the class");
        }
        if excess_in(table, &cert.w_star).map_err(|e| e.to_string())? != 0 {
            return fail(g, &c.representative, "w* has positive excess");
        }
    }
    Ok(classes.len())
}

fn check_cycle(ta: &TypeA<'_>, table: &InvolutionTable) -> Outcome {
    let g = ta.group();
    let n = ta.degree();
    let w = ta.long_cycle();
    let e = excess_in(table, &w).map_err(|e| e.to_string())?;
    if e != cycle_excess_closed_form(n) {
        return fail(
            g,
            &w,
            &format!("cycle excess {e} != closed form {}", cycle_excess_closed_form(n)),
        );
    }
    if n >= 3 {
        let rev: BTreeSet<Element> = reversers_in(table, &w).members.into_iter().collect();
        let yk: BTreeSet<Element> = (0..n).map(|k| ta.yk_involution(k).expect("k < n")).collect();
        if rev != yk {
            return fail(g, &w, "reversers of the n-cycle are not the y_k");
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups_pass() {
        let opts = VerifyOptions {
            samples: 500,
            ..VerifyOptions::default()
        };
        for sym in ["A1", "A3", "B3", "I2(5)", "H3"] {
            let g = Group::from_symbol(sym).unwrap();
            let report = run(&g, &opts);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn report_is_deterministic() {
        let g = Group::from_symbol("A3").unwrap();
        let a = run(&g, &VerifyOptions::default()).to_string();
        let b = run(&g, &VerifyOptions::default()).to_string();
        assert_eq!(a, b);
        assert!(a.contains("PASS cycle-excess"));
    }

    #[test]
    fn non_type_a_skips_cycle_check() {
        let g = Group::from_symbol("B2").unwrap();
        let report = run(&g, &VerifyOptions::default());
        assert!(report.checks.iter().all(|c| c.name != "cycle-excess"));
    }
}
