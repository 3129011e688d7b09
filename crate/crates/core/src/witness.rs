//! Constructive zero-excess witnesses.
//!
//! For `w` not squaring to the identity:
//! 1. write `w = x y` with `y` an involution;
//! 2. conjugate so that `y = w_J` acts as `-1` on `Φ_J`;
//! 3. take `z` of minimal length among the `W_J`-conjugates of `x`;
//! 4. with `K = {r ∈ J : ℓ(z r) < ℓ(z)}`, set `σ = z w_K` and `τ = w_K y`.
//!
//! Then `σ τ = z y` is conjugate to `w` and `ℓ(σ τ) = ℓ(σ) + ℓ(τ)`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::conjugacy::conjugacy_class;
use crate::error::{Error, Result};
use crate::excess::reversers_in;
use crate::generators::{GeneratorSet, Word};
use crate::group::{Element, Group};
use crate::involution::{richardson_normal_form, InvolutionTable};
use crate::parabolic::{longest_element_j, phi_j};

/// How `z` is chosen among the `W_J`-conjugates of `x`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MinimizeMode {
    /// Shortest element of the whole orbit, ties broken by reduced word.
    #[default]
    Global,
    /// Conjugate by the smallest `r ∈ J` that shortens `z` until none does.
    Greedy,
}

/// `conjugator · input · conjugator⁻¹ = w_star = sigma · tau` with
/// `sigma² = tau² = 1` and `ℓ(w_star) = ℓ(sigma) + ℓ(tau)`.
#[derive(Clone, Debug)]
pub struct WitnessCertificate {
    pub input: Element,
    pub conjugator: Element,
    pub w_star: Element,
    pub sigma: Element,
    pub tau: Element,
    pub j: GeneratorSet,
    pub k: GeneratorSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateLengths {
    pub w_star: usize,
    pub sigma: usize,
    pub tau: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub w: Word,
    pub w_star: Word,
    pub sigma: Word,
    pub tau: Word,
    pub conjugator: Word,
    #[serde(rename = "J")]
    pub j: GeneratorSet,
    #[serde(rename = "K")]
    pub k: GeneratorSet,
    pub lengths: CertificateLengths,
}

impl WitnessCertificate {
    pub fn report(&self, g: &Group) -> CertificateReport {
        CertificateReport {
            w: g.reduced_word(&self.input),
            w_star: g.reduced_word(&self.w_star),
            sigma: g.reduced_word(&self.sigma),
            tau: g.reduced_word(&self.tau),
            conjugator: g.reduced_word(&self.conjugator),
            j: self.j,
            k: self.k,
            lengths: CertificateLengths {
                w_star: self.w_star.length(),
                sigma: self.sigma.length(),
                tau: self.tau.length(),
            },
        }
    }

    /// Checks every certificate property; the message names the first failure.
    pub fn verify(&self, g: &Group) -> Result<()> {
        let fail = |msg: &str| Err(Error::InternalProofViolation(msg.to_string()));
        if !self.sigma.is_involutive() {
            return fail("sigma does not square to 1");
        }
        if !self.tau.is_involutive() {
            return fail("tau does not square to 1");
        }
        if self.sigma.compose(&self.tau) != self.w_star {
            return fail("w_star != sigma tau");
        }
        if self.w_star.length() != self.sigma.length() + self.tau.length() {
            return fail("lengths are not additive");
        }
        if self.input.conjugate_by(&self.conjugator) != self.w_star {
            return fail("conjugator does not carry w to w_star");
        }
        if !self.k.is_subset(self.j) {
            return fail("K is not contained in J");
        }
        if !self.sigma.inversion_set().is_disjoint(&self.tau.inversion_set()) {
            return fail("N(sigma) and N(tau) intersect");
        }
        let phi = phi_j(g, self.j);
        if !self.tau.inversion_set().is_subset(&phi) {
            return fail("N(tau) is not inside Phi_J");
        }
        if self.sigma.inversion_set().iter().any(|i| phi.contains(&i)) {
            return fail("N(sigma) meets Phi_J");
        }
        Ok(())
    }
}

/// Orbit of `x` under conjugation by `W_J`, as pairs `(u⁻¹ x u, u)`.
fn parabolic_orbit(g: &Group, x: &Element, j: GeneratorSet) -> Vec<(Element, Element)> {
    let gens: Vec<usize> = j.iter().filter(|&r| r <= g.rank()).collect();
    let mut seen = HashSet::from([x.clone()]);
    let mut out = Vec::new();
    let mut queue = VecDeque::from([(x.clone(), g.identity())]);
    while let Some((z, u)) = queue.pop_front() {
        for &r in &gens {
            let s = g.generator(r);
            let next = s.compose(&z).compose(s);
            if seen.insert(next.clone()) {
                queue.push_back((next, u.compose(s)));
            }
        }
        out.push((z, u));
    }
    out
}

fn minimize(g: &Group, x: &Element, j: GeneratorSet, mode: MinimizeMode) -> (Element, Element) {
    match mode {
        MinimizeMode::Global => parabolic_orbit(g, x, j)
            .into_iter()
            .min_by_key(|(z, _)| g.sort_key(z))
            .expect("orbit contains x"),
        MinimizeMode::Greedy => {
            let gens: Vec<usize> = j.iter().filter(|&r| r <= g.rank()).collect();
            let mut z = x.clone();
            let mut u = g.identity();
            loop {
                let step = gens.iter().find_map(|&r| {
                    let s = g.generator(r);
                    let next = s.compose(&z).compose(s);
                    (next.length() < z.length()).then_some((s, next))
                });
                match step {
                    Some((s, next)) => {
                        z = next;
                        u = u.compose(s);
                    }
                    None => break,
                }
            }
            (z, u)
        }
    }
}

pub fn zero_excess_witness(g: &Group, w: &Element) -> Result<WitnessCertificate> {
    zero_excess_witness_in(g, &InvolutionTable::new(g), w, MinimizeMode::Global)
}

pub fn zero_excess_witness_in(
    g: &Group,
    table: &InvolutionTable,
    w: &Element,
    mode: MinimizeMode,
) -> Result<WitnessCertificate> {
    if w.is_involutive() {
        let cert = WitnessCertificate {
            input: w.clone(),
            conjugator: g.identity(),
            w_star: w.clone(),
            sigma: w.clone(),
            tau: g.identity(),
            j: GeneratorSet::empty(),
            k: GeneratorSet::empty(),
        };
        cert.verify(g)?;
        return Ok(cert);
    }

    // Reversers come in table order, so the first non-identity one is the
    // shortest (then lexicographically least) choice of y.
    let y = reversers_in(table, w)
        .members
        .into_iter()
        .find(|y| !y.is_identity())
        .ok_or(Error::NotStronglyReal)?;
    let x = w.compose(&y);

    let normal = richardson_normal_form(g, &y)?;
    let h = &normal.conjugator;
    let j = normal.j;
    let x = x.conjugate_by(h);
    let y = normal.w_j.clone();

    // z = u⁻¹ x u with u ∈ W_J
    let (z, u) = minimize(g, &x, j, mode);

    let mut k = GeneratorSet::empty();
    for r in j.iter() {
        if g.has_right_descent(&z, r) {
            k.insert(r);
        }
    }
    let w_k = longest_element_j(g, k);
    let sigma = z.compose(&w_k);
    let tau = w_k.compose(&y);
    let cert = WitnessCertificate {
        input: w.clone(),
        conjugator: u.inverse().compose(h),
        w_star: sigma.compose(&tau),
        sigma,
        tau,
        j,
        k,
    };
    cert.verify(g)?;
    Ok(cert)
}

/// True when `cert.w_star` lies in the conjugacy class of `cert.input`,
/// checked against the full orbit.
pub fn witness_in_class(g: &Group, cert: &WitnessCertificate) -> bool {
    conjugacy_class(g, &cert.input).contains(&cert.w_star)
}
