//! Normal forms and the word problem in the full group.
//!
//! The group is the free product of the two vertex stabilizers amalgamated
//! over the edge stabilizer, `H_P ∗_{H_E} H_M`. With the transversals fixed
//! in [`crate::factors`] every element has a unique expression
//!
//! ```text
//!     s₁ s₂ … s_r · e
//! ```
//!
//! where the `sᵢ` are nontrivial coset representatives (β-powers for the
//! P factor, δ or δ² for the M factor) of strictly alternating factors and
//! `e ∈ H_E` is a tail on the right. Two words represent the same group
//! element exactly when their normal forms are structurally equal, which
//! decides the word problem.
//!
//! Normal forms are maintained incrementally: pushing a letter touches at
//! most the tail and the last syllable. When a merge trivializes the last
//! representative the syllable is popped and the residual tail folds into
//! place; no further syllables can collapse, because folding an H_E
//! element through a representative never changes its exponent component.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::factors::{letter_image_m, letter_image_p, EElem, MElem, Order, PElem};
use crate::words::{Letter, Word};

/// The two amalgam factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    P,
    M,
}

/// A nontrivial coset representative: β^n (n ≠ 0) or δ^k (k ∈ {1,2}).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Syllable {
    P(BigInt),
    M(u8),
}

impl Syllable {
    pub fn factor(&self) -> Factor {
        match self {
            Syllable::P(_) => Factor::P,
            Syllable::M(_) => Factor::M,
        }
    }
}

/// A group element in Bass–Serre normal form.
///
/// Structural equality is group equality; the invariants (alternating
/// factors, nontrivial representatives) are maintained by construction,
/// so the fields stay private.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmalgamElem {
    syllables: Vec<Syllable>,
    tail: EElem,
}

/// Invalid raw parts handed to [`AmalgamElem::from_parts`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NormalFormError {
    #[error("syllable {0} has a trivial representative")]
    TrivialSyllable(usize),
    #[error("syllables {0} and {1} lie in the same factor")]
    NotAlternating(usize, usize),
}

impl Default for AmalgamElem {
    fn default() -> Self {
        AmalgamElem::identity()
    }
}

impl AmalgamElem {
    pub fn identity() -> AmalgamElem {
        AmalgamElem {
            syllables: Vec::new(),
            tail: EElem::identity(),
        }
    }

    /// Builds an element from raw parts, validating the normal-form shape.
    pub fn from_parts(
        syllables: Vec<Syllable>,
        tail: EElem,
    ) -> Result<AmalgamElem, NormalFormError> {
        for (i, s) in syllables.iter().enumerate() {
            let trivial = match s {
                Syllable::P(n) => n.is_zero(),
                Syllable::M(k) => !matches!(k, 1 | 2),
            };
            if trivial {
                return Err(NormalFormError::TrivialSyllable(i));
            }
            if i > 0 && syllables[i - 1].factor() == s.factor() {
                return Err(NormalFormError::NotAlternating(i - 1, i));
            }
        }
        Ok(AmalgamElem { syllables, tail })
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn tail(&self) -> EElem {
        self.tail
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty() && self.tail.is_identity()
    }

    /// Right-multiplies by a single letter, restoring normal form.
    pub fn push_letter(&mut self, l: Letter) {
        match l {
            Letter::Alpha | Letter::Gamma => {
                // H_E letters fold straight into the tail.
                let e = match l {
                    Letter::Alpha => EElem::new(true, false),
                    _ => EElem::new(false, true),
                };
                self.push_tail(e);
            }
            Letter::Beta | Letter::BetaInv => {
                self.push_p(letter_image_p(l).expect("β lies in H_P"));
            }
            Letter::Delta | Letter::DeltaInv => {
                self.push_m(letter_image_m(l).expect("δ lies in H_M"));
            }
        }
    }

    /// Right-multiplies by an edge-stabilizer element.
    pub fn push_tail(&mut self, e: EElem) {
        self.tail = self.tail.mul(&e);
    }

    /// Right-multiplies by an arbitrary element of H_P.
    pub fn push_p(&mut self, h: PElem) {
        // Everything right of the last syllable lives in H_P: lift the
        // tail and combine.
        let mut g = self.tail.embed_p().mul(&h);
        if let Some(Syllable::P(_)) = self.syllables.last() {
            let Some(Syllable::P(n)) = self.syllables.pop() else {
                unreachable!()
            };
            g = PElem::new(n, false, false).mul(&g);
        }
        let (rep, tail) = g.decompose();
        if !rep.is_zero() {
            self.syllables.push(Syllable::P(rep));
        }
        self.tail = tail;
    }

    /// Right-multiplies by an arbitrary element of H_M.
    pub fn push_m(&mut self, h: MElem) {
        let mut g = self.tail.embed_m().mul(&h);
        if let Some(Syllable::M(_)) = self.syllables.last() {
            let Some(Syllable::M(k)) = self.syllables.pop() else {
                unreachable!()
            };
            g = MElem::new(k as i64, false, false).mul(&g);
        }
        let (rep, tail) = g.decompose();
        if rep != 0 {
            self.syllables.push(Syllable::M(rep));
        }
        self.tail = tail;
    }

    /// Group product in normal form.
    pub fn mul(&self, rhs: &AmalgamElem) -> AmalgamElem {
        let mut out = self.clone();
        for s in &rhs.syllables {
            match s {
                Syllable::P(n) => out.push_p(PElem::new(n.clone(), false, false)),
                Syllable::M(k) => out.push_m(MElem::new(*k as i64, false, false)),
            }
        }
        out.push_tail(rhs.tail);
        out
    }

    /// Group inverse: `(s₁…s_r·e)⁻¹ = e·s_r⁻¹…s₁⁻¹` (the tail is an
    /// involution), renormalized.
    pub fn inverse(&self) -> AmalgamElem {
        let mut out = AmalgamElem::identity();
        out.push_tail(self.tail);
        for s in self.syllables.iter().rev() {
            match s {
                Syllable::P(n) => out.push_p(PElem::new(-n, false, false)),
                Syllable::M(k) => out.push_m(MElem::new(-(*k as i64), false, false)),
            }
        }
        out
    }

    /// Renders back to a word: β^n as a run of `b`/`B`, δ^k as a run of
    /// `d`, the tail as `a`, `g` or `ag`. Re-normalizing the result
    /// reproduces `self`.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::new();
        for s in &self.syllables {
            match s {
                Syllable::P(n) => {
                    let count = n
                        .abs()
                        .to_usize()
                        .expect("β-exponent too large to render as a word");
                    let letter = if n.is_positive() {
                        Letter::Beta
                    } else {
                        Letter::BetaInv
                    };
                    letters.extend(std::iter::repeat_n(letter, count));
                }
                Syllable::M(k) => {
                    letters.extend(std::iter::repeat_n(Letter::Delta, *k as usize));
                }
            }
        }
        if self.tail.alpha {
            letters.push(Letter::Alpha);
        }
        if self.tail.gamma {
            letters.push(Letter::Gamma);
        }
        Word::new(letters)
    }
}

impl fmt::Display for AmalgamElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

// JSON shape is pinned:
//   {"syllables":[{"factor":"P","exp":3},...],"tail":{"alpha":0,"gamma":1}}
// The exponent is emitted as a JSON integer; i128 covers any exponent a
// program can realistically build (beyond that serialization errors out
// rather than changing representation).
impl Serialize for Syllable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Syllable", 2)?;
        match self {
            Syllable::P(n) => {
                st.serialize_field("factor", "P")?;
                let exp = n.to_i128().ok_or_else(|| {
                    serde::ser::Error::custom("β-exponent exceeds the i128 JSON range")
                })?;
                st.serialize_field("exp", &exp)?;
            }
            Syllable::M(k) => {
                st.serialize_field("factor", "M")?;
                st.serialize_field("exp", &(*k as i128))?;
            }
        }
        st.end()
    }
}

impl Serialize for AmalgamElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Tail(EElem);
        impl Serialize for Tail {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut st = serializer.serialize_struct("Tail", 2)?;
                st.serialize_field("alpha", &(self.0.alpha as u8))?;
                st.serialize_field("gamma", &(self.0.gamma as u8))?;
                st.end()
            }
        }
        let mut st = serializer.serialize_struct("AmalgamElem", 2)?;
        st.serialize_field("syllables", &self.syllables)?;
        st.serialize_field("tail", &Tail(self.tail))?;
        st.end()
    }
}

/// Normal form of a word: a left fold of [`AmalgamElem::push_letter`],
/// linear in the word length.
pub fn normal_form(w: &Word) -> AmalgamElem {
    let mut elem = AmalgamElem::identity();
    for &l in w.letters() {
        elem.push_letter(l);
    }
    elem
}

/// The word problem: do two words represent the same group element?
pub fn equal(w1: &Word, w2: &Word) -> bool {
    normal_form(w1) == normal_form(w2)
}

/// Order of the element a word represents.
///
/// A torsion element fixes a tree vertex, hence is conjugate into H_P or
/// H_M; element orders there are contained in {1, 2} and {1, 2, 3, 6}, so
/// checking those exponents is a complete test and anything surviving
/// them has infinite order.
pub fn order(w: &Word) -> Order {
    let x = normal_form(w);
    if x.is_identity() {
        return Order::Finite(1);
    }
    let square = x.mul(&x);
    if square.is_identity() {
        return Order::Finite(2);
    }
    let cube = square.mul(&x);
    if cube.is_identity() {
        return Order::Finite(3);
    }
    if cube.mul(&cube).is_identity() {
        return Order::Finite(6);
    }
    Order::Infinite
}

/// Where a word's element sits relative to the two factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// In the edge stabilizer (hence in both factors).
    InHE,
    /// In H_P but not in H_E.
    InHPOnly,
    /// In H_M but not in H_E.
    InHMOnly,
    /// In neither factor.
    NotInFactors,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Membership::InHE => "InHE",
            Membership::InHPOnly => "InHPOnly",
            Membership::InHMOnly => "InHMOnly",
            Membership::NotInFactors => "NotInFactors",
        };
        write!(f, "{s}")
    }
}

/// Classifies a word by the shape of its normal form: no syllables means
/// H_E, a single syllable means the corresponding factor, anything longer
/// lies in neither vertex stabilizer.
pub fn membership(w: &Word) -> Membership {
    let x = normal_form(w);
    match x.syllables() {
        [] => Membership::InHE,
        [Syllable::P(_)] => Membership::InHPOnly,
        [Syllable::M(_)] => Membership::InHMOnly,
        _ => Membership::NotInFactors,
    }
}

fn parse_relators(texts: &[&str]) -> Vec<Word> {
    texts
        .iter()
        .map(|t| t.parse().expect("fixed relator text"))
        .collect()
}

/// The eight defining relators of the full group, relation equalities
/// moved to one side: α², γ², δ³, (αγ)², αδαδ⁻¹, αβαβ⁻¹, γβγβ⁻¹α⁻¹
/// (from γβγ = αβ) and δ⁻¹γδδγ (from δ = γδ²γ).
pub fn relators() -> Vec<Word> {
    parse_relators(&["aa", "gg", "ddd", "agag", "adaD", "abaB", "gbgBA", "DgddG"])
}

/// The five relators of the H_P presentation.
pub fn relators_hp() -> Vec<Word> {
    parse_relators(&["aa", "gg", "agag", "abaB", "gbgBA"])
}

/// The six relators of the H_M presentation.
pub fn relators_hm() -> Vec<Word> {
    parse_relators(&["ddd", "aa", "gg", "adaD", "agag", "DgddG"])
}

/// The three relators of the H_E presentation.
pub fn relators_he() -> Vec<Word> {
    parse_relators(&["aa", "gg", "agag"])
}

/// Conjugation by the handlebody-exchanging homeomorphism Θ, as a letter
/// substitution: α ↦ α, β ↦ αβ, β⁻¹ ↦ (αβ)⁻¹, γ ↦ αγ, δ^±1 ↦ δ^±1.
/// The image is returned unreduced.
pub fn theta_twist(w: &Word) -> Word {
    let mut letters = Vec::with_capacity(2 * w.len());
    for &l in w.letters() {
        match l {
            Letter::Alpha => letters.push(Letter::Alpha),
            Letter::Beta => letters.extend([Letter::Alpha, Letter::Beta]),
            Letter::BetaInv => letters.extend([Letter::BetaInv, Letter::Alpha]),
            Letter::Gamma => letters.extend([Letter::Alpha, Letter::Gamma]),
            Letter::Delta => letters.push(Letter::Delta),
            Letter::DeltaInv => letters.push(Letter::DeltaInv),
        }
    }
    Word::new(letters)
}
