//! Root system enumeration and exact element arithmetic.
//!
//! A group element is stored as the signed permutation it induces on the
//! positive roots: entry `i` of [`Element::images`] is the signed index of
//! `w · β_i`. Floating point is used only while closing the simple roots
//! under the reflections; afterwards every operation is integer work on
//! these tables.

use std::collections::{BTreeSet, HashMap};
use std::f64::consts::PI;
use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::generators::{GeneratorSet, Word};
use crate::matrix::CoxeterMatrix;

/// Default cap on the number of positive roots before a matrix is declared
/// infinite.
pub const DEFAULT_ROOT_CAP: usize = 10_000;

/// Default cap on the group order for the Cayley-graph closure.
pub const DEFAULT_ELEMENT_CAP: usize = 10_000_000;

/// Two root vectors closer than this in every coordinate are the same root.
const ROOT_TOLERANCE: f64 = 1e-9;

/// Tolerance for the bilinear-form and unit-norm checks at build time.
const FORM_TOLERANCE: f64 = 1e-9;

/// `±β_i`: a positive-root index together with a sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRoot(u32);

impl SignedRoot {
    pub fn positive(index: usize) -> Self {
        SignedRoot((index as u32) << 1)
    }

    pub fn negative(index: usize) -> Self {
        SignedRoot(((index as u32) << 1) | 1)
    }

    pub fn index(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_negative(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn negate(self) -> Self {
        SignedRoot(self.0 ^ 1)
    }

    #[inline]
    fn flip_if(self, negative: bool) -> Self {
        SignedRoot(self.0 ^ negative as u32)
    }
}

impl fmt::Debug for SignedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.is_negative() { '-' } else { '+' };
        write!(f, "{sign}{}", self.index())
    }
}

/// A positive root, in coordinates over the simple roots.
#[derive(Clone, Debug)]
pub struct Root {
    coefficients: Vec<f64>,
    support: GeneratorSet,
}

impl Root {
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Generators whose simple root has a nonzero coefficient.
    pub fn support(&self) -> GeneratorSet {
        self.support
    }

    pub fn height(&self) -> f64 {
        self.coefficients.iter().sum()
    }
}

/// A group element as a signed permutation of the positive roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    images: Box<[SignedRoot]>,
}

impl Element {
    pub fn identity(num_roots: usize) -> Self {
        Element {
            images: (0..num_roots).map(SignedRoot::positive).collect(),
        }
    }

    pub fn images(&self) -> &[SignedRoot] {
        &self.images
    }

    pub(crate) fn from_images(images: Vec<SignedRoot>) -> Self {
        Element { images: images.into() }
    }

    /// Signed index of `w · β_i`.
    pub fn image(&self, i: usize) -> SignedRoot {
        self.images[i]
    }

    /// `w · (±β_i)`.
    #[inline]
    pub fn apply(&self, root: SignedRoot) -> SignedRoot {
        self.images[root.index()].flip_if(root.is_negative())
    }

    /// The element acting as `v ↦ self · (other · v)`.
    pub fn compose(&self, other: &Element) -> Element {
        debug_assert_eq!(self.images.len(), other.images.len());
        Element {
            images: other.images.iter().map(|&b| self.apply(b)).collect(),
        }
    }

    pub fn inverse(&self) -> Element {
        let mut images = vec![SignedRoot::positive(0); self.images.len()];
        for (i, &s) in self.images.iter().enumerate() {
            images[s.index()] = SignedRoot::positive(i).flip_if(s.is_negative());
        }
        Element { images: images.into() }
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate_by(&self, c: &Element) -> Element {
        c.compose(self).compose(&c.inverse())
    }

    /// `ℓ(w) = |N(w)|`.
    pub fn length(&self) -> usize {
        self.images.iter().filter(|s| s.is_negative()).count()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &s)| s == SignedRoot::positive(i))
    }

    /// `w² = 1`, identity included.
    pub fn is_involutive(&self) -> bool {
        (0..self.images.len()).all(|i| {
            let r = SignedRoot::positive(i);
            self.apply(self.apply(r)) == r
        })
    }

    /// `w² = 1` and `w ≠ 1`.
    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.is_involutive()
    }

    pub fn inversion_set(&self) -> InversionSet {
        InversionSet {
            members: self
                .images
                .iter()
                .enumerate()
                .filter(|(_, s)| s.is_negative())
                .map(|(i, _)| i)
                .collect(),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.images.iter()).finish()
    }
}

/// `(a b)² = 1`, without materializing the product.
pub fn product_is_involutive(a: &Element, b: &Element) -> bool {
    (0..a.images.len()).all(|i| {
        let r = SignedRoot::positive(i);
        a.apply(b.apply(a.apply(b.apply(r)))) == r
    })
}

/// `ℓ(a b)`, without materializing the product.
pub fn product_length(a: &Element, b: &Element) -> usize {
    b.images.iter().filter(|&&s| a.apply(s).is_negative()).count()
}

/// `N(w)`: positive-root indices sent to negative roots.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct InversionSet {
    members: BTreeSet<usize>,
}

impl InversionSet {
    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn intersection_len(&self, other: &InversionSet) -> usize {
        self.members.intersection(&other.members).count()
    }

    pub fn is_subset(&self, other: &BTreeSet<usize>) -> bool {
        self.members.is_subset(other)
    }

    pub fn is_disjoint(&self, other: &InversionSet) -> bool {
        self.members.is_disjoint(&other.members)
    }
}

impl FromIterator<usize> for InversionSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        InversionSet {
            members: iter.into_iter().collect(),
        }
    }
}

/// A finite Coxeter group with its positive roots, the generator action
/// table, and every element.
#[derive(Clone, Debug)]
pub struct Group {
    matrix: CoxeterMatrix,
    bilinear_form: Vec<Vec<f64>>,
    positive_roots: Vec<Root>,
    generators: Vec<Element>,
    elements: IndexSet<Element>,
    longest: Element,
}

impl Group {
    /// Closes the simple roots under the generator reflections, then closes
    /// the identity under right multiplication by generators.
    pub fn build(matrix: CoxeterMatrix, root_cap: usize) -> Result<Group> {
        Self::build_with_caps(matrix, root_cap, DEFAULT_ELEMENT_CAP)
    }

    pub fn build_with_caps(matrix: CoxeterMatrix, root_cap: usize, element_cap: usize) -> Result<Group> {
        let bilinear_form = bilinear_form(&matrix);
        let (roots, action) = close_roots(&matrix, &bilinear_form, root_cap)?;
        check_form(&bilinear_form, &roots)?;

        let num_roots = roots.len();
        let positive_roots = roots
            .into_iter()
            .map(|coefficients| {
                let mut bits = 0u64;
                for (r, &c) in coefficients.iter().enumerate() {
                    if c > ROOT_TOLERANCE {
                        bits |= 1 << r;
                    }
                }
                Root {
                    coefficients,
                    support: GeneratorSet::from_bits(bits),
                }
            })
            .collect();
        let generators: Vec<Element> = action
            .into_iter()
            .map(|images| Element { images: images.into() })
            .collect();

        let mut elements = IndexSet::new();
        elements.insert(Element::identity(num_roots));
        let mut head = 0;
        while head < elements.len() {
            for g in &generators {
                let next = elements[head].compose(g);
                if !elements.contains(&next) {
                    if elements.len() >= element_cap {
                        return Err(Error::TooLarge { cap: element_cap });
                    }
                    elements.insert(next);
                }
            }
            head += 1;
        }

        let longest = elements
            .iter()
            .rev()
            .find(|e| e.length() == num_roots)
            .cloned()
            .ok_or_else(|| Error::RootSystem("no element negates every positive root".into()))?;

        Ok(Group {
            matrix,
            bilinear_form,
            positive_roots,
            generators,
            elements,
            longest,
        })
    }

    pub fn from_symbol(symbol: &str) -> Result<Group> {
        Group::build(symbol.parse()?, DEFAULT_ROOT_CAP)
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `⟨α_r, α_s⟩ = -cos(π / m_rs)`, 0-based.
    pub fn bilinear_form(&self) -> &[Vec<f64>] {
        &self.bilinear_form
    }

    /// Positive roots; index `r - 1` is the simple root of generator `r`.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Every element, in breadth-first order from the identity (so by
    /// nondecreasing length).
    pub fn elements(&self) -> impl ExactSizeIterator<Item = &Element> + '_ {
        self.elements.iter()
    }

    pub fn element_at(&self, index: usize) -> &Element {
        &self.elements[index]
    }

    /// Position of `w` in [`Group::elements`].
    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.elements.get_index_of(w)
    }

    pub fn identity(&self) -> Element {
        Element::identity(self.num_positive_roots())
    }

    /// The simple reflection `r`, for `r` in `1..=rank`.
    ///
    /// Panics if `r` is out of range.
    pub fn generator(&self, r: usize) -> &Element {
        &self.generators[r - 1]
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Signed index of `r · β_i`.
    pub fn simple_action(&self, r: usize, i: usize) -> SignedRoot {
        self.generators[r - 1].images[i]
    }

    pub fn element_from_word(&self, word: &Word) -> Result<Element> {
        word.check_rank(self.rank())?;
        let mut w = self.identity();
        for &l in word.letters() {
            w = w.compose(self.generator(l));
        }
        Ok(w)
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        self.element_from_word(&text.parse()?)
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        a.compose(b)
    }

    pub fn inverse(&self, a: &Element) -> Element {
        a.inverse()
    }

    /// `c · w · c⁻¹`.
    pub fn conjugate(&self, w: &Element, c: &Element) -> Element {
        w.conjugate_by(c)
    }

    pub fn inversion_set(&self, a: &Element) -> InversionSet {
        a.inversion_set()
    }

    pub fn length(&self, a: &Element) -> usize {
        a.length()
    }

    /// `ℓ(w r) < ℓ(w)`, i.e. `α_r ∈ N(w)`.
    pub fn has_right_descent(&self, w: &Element, r: usize) -> bool {
        w.images[r - 1].is_negative()
    }

    /// `ℓ(r w) < ℓ(w)`.
    pub fn has_left_descent(&self, w: &Element, r: usize) -> bool {
        // α_r ∈ N(w⁻¹) iff w⁻¹·α_r < 0
        (0..w.images.len()).any(|i| w.images[i] == SignedRoot::negative(r - 1))
    }

    /// Reduced word built by stripping the smallest right descent each step.
    pub fn reduced_word(&self, a: &Element) -> Word {
        let rank = self.rank();
        let mut cur = a.clone();
        let mut letters = Vec::with_capacity(a.length());
        while let Some(r) = (0..rank).find(|&r| cur.images[r].is_negative()) {
            cur = cur.compose(&self.generators[r]);
            letters.push(r + 1);
        }
        letters.reverse();
        Word::new(letters)
    }

    /// `w₀`, the unique element with `N(w₀) = Φ⁺`.
    pub fn longest_element(&self) -> &Element {
        &self.longest
    }

    /// Sort key used for deterministic orderings: length, then reduced word.
    pub fn sort_key(&self, w: &Element) -> (usize, Word) {
        (w.length(), self.reduced_word(w))
    }
}

fn bilinear_form(matrix: &CoxeterMatrix) -> Vec<Vec<f64>> {
    let n = matrix.rank();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|s| match matrix.get(r, s) {
                    1 => 1.0,
                    2 => 0.0,
                    m => -(PI / m as f64).cos(),
                })
                .collect()
        })
        .collect()
}

/// Buckets root vectors by height so that lookups compare only against
/// roots of nearly equal height.
#[derive(Default)]
struct RootLookup {
    buckets: HashMap<i64, Vec<usize>>,
}

impl RootLookup {
    fn key(v: &[f64]) -> i64 {
        (v.iter().sum::<f64>() * 1e6).round() as i64
    }

    fn find(&self, roots: &[Vec<f64>], v: &[f64]) -> Option<usize> {
        let k = Self::key(v);
        (k - 1..=k + 1)
            .filter_map(|b| self.buckets.get(&b))
            .flatten()
            .copied()
            .find(|&i| roots[i].iter().zip(v).all(|(a, b)| (a - b).abs() <= ROOT_TOLERANCE))
    }

    fn insert(&mut self, v: &[f64], index: usize) {
        self.buckets.entry(Self::key(v)).or_default().push(index);
    }
}

/// Root coordinates, and per generator the signed index of `r · β_i`.
type RootTable = (Vec<Vec<f64>>, Vec<Vec<SignedRoot>>);

/// Closes the simple roots under the simple reflections.
fn close_roots(matrix: &CoxeterMatrix, form: &[Vec<f64>], root_cap: usize) -> Result<RootTable> {
    let rank = matrix.rank();
    if rank > root_cap {
        return Err(Error::NonFiniteGroup { cap: root_cap });
    }
    let mut roots: Vec<Vec<f64>> = (0..rank)
        .map(|r| {
            let mut v = vec![0.0; rank];
            v[r] = 1.0;
            v
        })
        .collect();
    let mut lookup = RootLookup::default();
    for (i, v) in roots.iter().enumerate() {
        lookup.insert(v, i);
    }
    let mut action: Vec<Vec<SignedRoot>> = vec![Vec::new(); rank];

    let mut head = 0;
    while head < roots.len() {
        for r in 0..rank {
            if head == r {
                action[r].push(SignedRoot::negative(r));
                continue;
            }
            let v = &roots[head];
            let dot: f64 = form[r].iter().zip(v).map(|(b, x)| b * x).sum();
            let mut image = v.clone();
            image[r] -= 2.0 * dot;
            for c in image.iter_mut() {
                if c.abs() <= ROOT_TOLERANCE {
                    *c = 0.0;
                }
            }
            // r permutes Φ⁺ \ {α_r}
            if image.iter().any(|&c| c < 0.0) {
                return Err(Error::RootSystem(format!(
                    "generator {} sends positive root {head} to a non-positive vector",
                    r + 1
                )));
            }
            let index = match lookup.find(&roots, &image) {
                Some(i) => i,
                None => {
                    if roots.len() >= root_cap {
                        return Err(Error::NonFiniteGroup { cap: root_cap });
                    }
                    let i = roots.len();
                    lookup.insert(&image, i);
                    roots.push(image);
                    i
                }
            };
            action[r].push(SignedRoot::positive(index));
        }
        head += 1;
    }
    Ok((roots, action))
}

fn check_form(form: &[Vec<f64>], roots: &[Vec<f64>]) -> Result<()> {
    let rank = form.len();
    let pair = |u: &[f64], v: &[f64]| -> f64 {
        let mut acc = 0.0;
        for s in 0..rank {
            for t in 0..rank {
                acc += u[s] * form[s][t] * v[t];
            }
        }
        acc
    };
    let reflect = |r: usize, v: &[f64]| -> Vec<f64> {
        let dot: f64 = form[r].iter().zip(v).map(|(b, x)| b * x).sum();
        let mut out = v.to_vec();
        out[r] -= 2.0 * dot;
        out
    };
    let simple: Vec<Vec<f64>> = (0..rank)
        .map(|s| {
            let mut v = vec![0.0; rank];
            v[s] = 1.0;
            v
        })
        .collect();
    for r in 0..rank {
        for s in 0..rank {
            for t in 0..rank {
                let before = pair(&simple[s], &simple[t]);
                let after = pair(&reflect(r, &simple[s]), &reflect(r, &simple[t]));
                if (before - after).abs() > FORM_TOLERANCE {
                    return Err(Error::RootSystem(format!(
                        "generator {} does not preserve the form on ({}, {})",
                        r + 1,
                        s + 1,
                        t + 1
                    )));
                }
            }
        }
    }
    for (i, v) in roots.iter().enumerate() {
        if (pair(v, v) - 1.0).abs() > FORM_TOLERANCE {
            return Err(Error::RootSystem(format!("root {i} is not a unit vector")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> Group {
        Group::build(CoxeterMatrix::type_a(n).unwrap(), DEFAULT_ROOT_CAP).unwrap()
    }

    #[test]
    fn small_orders() {
        let a1 = a(1);
        assert_eq!((a1.num_positive_roots(), a1.order()), (1, 2));
        let a3 = a(3);
        assert_eq!((a3.num_positive_roots(), a3.order()), (6, 24));
        let b2 = Group::from_symbol("B2").unwrap();
        assert_eq!((b2.num_positive_roots(), b2.order()), (4, 8));
        assert_eq!(b2.longest_element().length(), 4);
    }

    #[test]
    fn affine_matrix_is_rejected() {
        let m = CoxeterMatrix::new(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert!(matches!(
            Group::build(m.clone(), DEFAULT_ROOT_CAP),
            Err(Error::NonFiniteGroup { cap: 10_000 })
        ));
        assert!(matches!(Group::build(m, 50), Err(Error::NonFiniteGroup { cap: 50 })));
    }

    #[test]
    fn caps_fire() {
        assert!(matches!(
            Group::build(CoxeterMatrix::type_a(3).unwrap(), 5),
            Err(Error::NonFiniteGroup { cap: 5 })
        ));
        assert!(matches!(
            Group::build_with_caps(CoxeterMatrix::type_a(3).unwrap(), 100, 23),
            Err(Error::TooLarge { cap: 23 })
        ));
        // exactly at the caps is fine
        let g = Group::build_with_caps(CoxeterMatrix::type_a(3).unwrap(), 6, 24).unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn generators_are_involutions_negating_their_root() {
        let g = Group::from_symbol("H3").unwrap();
        for r in 1..=3 {
            let s = g.generator(r);
            assert!(s.is_involution());
            assert_eq!(
                s.inversion_set().members().iter().copied().collect::<Vec<_>>(),
                vec![r - 1]
            );
            assert!(g.multiply(s, s).is_identity());
        }
    }

    #[test]
    fn words_and_braids() {
        let a2 = a(2);
        assert!(a2.element_from_word(&Word::empty()).unwrap().is_identity());
        assert_eq!(a2.parse_element("1 2 1").unwrap(), a2.parse_element("2 1 2").unwrap());
        assert!(matches!(
            a2.parse_element("1 3"),
            Err(Error::BadLetter { letter: 3, rank: 2 })
        ));
    }

    #[test]
    fn reduced_word_round_trip() {
        let g = Group::from_symbol("B3").unwrap();
        for w in g.elements() {
            let word = g.reduced_word(w);
            assert_eq!(word.len(), w.length());
            assert_eq!(&g.element_from_word(&word).unwrap(), w);
        }
    }

    #[test]
    fn inverse_and_descents() {
        let g = a(3);
        for w in g.elements() {
            let inv = g.inverse(w);
            assert!(g.multiply(w, &inv).is_identity());
            assert_eq!(inv.length(), w.length());
            for r in 1..=3 {
                let wr = g.multiply(w, g.generator(r));
                let rw = g.multiply(g.generator(r), w);
                assert_eq!(g.has_right_descent(w, r), wr.length() < w.length());
                assert_eq!(g.has_left_descent(w, r), rw.length() < w.length());
            }
        }
    }

    #[test]
    fn longest_element_negates_everything() {
        for sym in ["A1", "A3", "B3", "D4", "H3", "I2(5)"] {
            let g = Group::from_symbol(sym).unwrap();
            let w0 = g.longest_element();
            assert!(w0.images().iter().all(|s| s.is_negative()), "{sym}");
            for w in g.elements() {
                assert_eq!(g.multiply(w, w0).length(), w0.length() - w.length());
            }
        }
    }

    #[test]
    fn root_table_is_consistent_with_coordinates() {
        let g = Group::from_symbol("F4").unwrap();
        let form = g.bilinear_form();
        for r in 1..=g.rank() {
            for (i, root) in g.positive_roots().iter().enumerate() {
                let v = root.coefficients();
                let dot: f64 = form[r - 1].iter().zip(v).map(|(b, x)| b * x).sum();
                let mut expect = v.to_vec();
                expect[r - 1] -= 2.0 * dot;
                let img = g.simple_action(r, i);
                let got = g.positive_roots()[img.index()].coefficients();
                let sign = if img.is_negative() { -1.0 } else { 1.0 };
                for (e, x) in expect.iter().zip(got) {
                    assert!((e - sign * x).abs() < 1e-9);
                }
            }
        }
    }
}
