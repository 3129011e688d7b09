//! Involutions and their normal form `w_J`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{GeneratorSet, Word};
use crate::group::{Element, Group, SignedRoot};
use crate::parabolic::{acts_as_minus_one, longest_element_j};

/// All `x ≠ 1` with `x² = 1`, ordered by length and then reduced word.
pub fn enumerate_involutions(g: &Group) -> Vec<Element> {
    let mut out: Vec<Element> = g.elements().filter(|w| w.is_involution()).cloned().collect();
    out.sort_by_cached_key(|w| g.sort_key(w));
    out
}

/// The identity followed by every involution, in [`enumerate_involutions`]
/// order. Computed once and shared by the excess and witness routines.
#[derive(Clone, Debug)]
pub struct InvolutionTable {
    candidates: Vec<Element>,
}

impl InvolutionTable {
    pub fn new(g: &Group) -> Self {
        let mut candidates = vec![g.identity()];
        candidates.extend(enumerate_involutions(g));
        InvolutionTable { candidates }
    }

    /// Identity first, then the involutions.
    pub fn candidates(&self) -> &[Element] {
        &self.candidates
    }

    pub fn involutions(&self) -> &[Element] {
        &self.candidates[1..]
    }
}

/// `conjugator · source · conjugator⁻¹ = w_J`, with `w_J` acting as `-1` on `Φ_J`.
#[derive(Clone, Debug)]
pub struct RichardsonForm {
    pub j: GeneratorSet,
    pub conjugator: Element,
    pub source: Element,
    pub w_j: Element,
    /// Number of length-decreasing conjugations taken.
    pub steps: usize,
}

#[derive(Serialize)]
struct RichardsonJson {
    #[serde(rename = "J")]
    j: GeneratorSet,
    conjugator_word: Word,
    #[serde(rename = "wJ_word")]
    w_j_word: Word,
}

impl RichardsonForm {
    pub fn to_json(&self, g: &Group) -> serde_json::Value {
        serde_json::to_value(RichardsonJson {
            j: self.j,
            conjugator_word: g.reduced_word(&self.conjugator),
            w_j_word: g.reduced_word(&self.w_j),
        })
        .expect("serializable")
    }
}

/// Conjugates `x` by the smallest generator `r` with `ℓ(rxr) < ℓ(x)` until
/// no such generator exists, then reads `J = {r : x·α_r = -α_r}` off the
/// endpoint.
pub fn richardson_normal_form(g: &Group, x: &Element) -> Result<RichardsonForm> {
    if !x.is_involution() {
        return Err(Error::NotInvolution);
    }
    let mut cur = x.clone();
    let mut conjugator = g.identity();
    let mut steps = 0;
    loop {
        let len = cur.length();
        let descent = (1..=g.rank()).find_map(|r| {
            let s = g.generator(r);
            let next = s.compose(&cur).compose(s);
            (next.length() < len).then_some((s, next))
        });
        match descent {
            Some((s, next)) => {
                conjugator = s.compose(&conjugator);
                cur = next;
                steps += 1;
            }
            None => break,
        }
    }

    let mut j = GeneratorSet::empty();
    for r in 1..=g.rank() {
        if cur.apply(SignedRoot::positive(r - 1)) == SignedRoot::negative(r - 1) {
            j.insert(r);
        }
    }
    let w_j = longest_element_j(g, j);
    if cur != w_j || !acts_as_minus_one(g, &w_j, j) {
        return Err(Error::InternalProofViolation(format!(
            "descent stopped at an involution that is not w_J for J = {{{j}}}"
        )));
    }
    Ok(RichardsonForm {
        j,
        conjugator,
        source: x.clone(),
        w_j,
        steps,
    })
}
