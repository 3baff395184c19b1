//! Closed-form arithmetic in the three stabilizer subgroups.
//!
//! The vertex stabilizers of the base sphere vertex and the base barycenter,
//! and the stabilizer of the edge joining them, are
//!
//! * `H_P ≅ (ℤ ⊕ ℤ₂) ⋊ ℤ₂`, elements β^n α^a γ^c — presentation
//!   α² = γ² = (αγ)² = αβαβ⁻¹ = 1, γβγ = αβ;
//! * `H_M ≅ (ℤ₃ ⋊ ℤ₂) ⊕ ℤ₂`, elements δ^k α^a γ^c — presentation
//!   δ³ = α² = γ² = (αγ)² = αδα⁻¹δ⁻¹ = 1, δ = γδ²γ;
//! * `H_E ≅ ℤ₂ ⊕ ℤ₂`, elements α^a γ^c.
//!
//! Every element has a unique such expression, so multiplication is a
//! closed-form law on the exponent tuples rather than a rewriting process.
//! In `H_P` the relations make α central and γβγ = αβ, giving
//! `(n,a,c)·(m,b,d) = (n+m, a⊕b⊕cm, c⊕d)`; in `H_M` conjugation by γ
//! inverts δ, giving `(k,a,c)·(m,b,d) = (k+(−1)^c m, a⊕b, c⊕d)` with the
//! δ-exponent mod 3.
//!
//! The left transversal of `H_E` in `H_P` is `{β^n}` and in `H_M` is
//! `{1, δ, δ²}`; with the chosen coordinates the coset decompositions are
//! component projections, which is what makes amalgam normal forms cheap.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::words::Letter;

/// Order of a group element: a least positive exponent, or none.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

/// Element β^n α^a γ^c of the sphere-vertex stabilizer.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PElem {
    pub beta_exp: BigInt,
    pub alpha: bool,
    pub gamma: bool,
}

/// Element δ^k α^a γ^c (k mod 3) of the barycenter stabilizer.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct MElem {
    delta_exp: u8,
    pub alpha: bool,
    pub gamma: bool,
}

/// Element α^a γ^c of the edge stabilizer.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EElem {
    pub alpha: bool,
    pub gamma: bool,
}

impl PElem {
    pub fn new(beta_exp: impl Into<BigInt>, alpha: bool, gamma: bool) -> PElem {
        PElem {
            beta_exp: beta_exp.into(),
            alpha,
            gamma,
        }
    }

    pub fn identity() -> PElem {
        PElem::default()
    }

    pub fn is_identity(&self) -> bool {
        self.beta_exp.is_zero() && !self.alpha && !self.gamma
    }

    /// `(n,a,c)·(m,b,d) = (n+m, a⊕b⊕cm, c⊕d)`: the γ on the left twists
    /// every β it passes by an α.
    pub fn mul(&self, rhs: &PElem) -> PElem {
        PElem {
            beta_exp: &self.beta_exp + &rhs.beta_exp,
            alpha: self.alpha ^ rhs.alpha ^ (self.gamma && rhs.beta_exp.is_odd()),
            gamma: self.gamma ^ rhs.gamma,
        }
    }

    pub fn inverse(&self) -> PElem {
        PElem {
            beta_exp: -&self.beta_exp,
            alpha: self.alpha ^ (self.gamma && self.beta_exp.is_odd()),
            gamma: self.gamma,
        }
    }

    /// Splits off the transversal representative: `x = β^rep · tail`.
    pub fn decompose(&self) -> (BigInt, EElem) {
        (
            self.beta_exp.clone(),
            EElem {
                alpha: self.alpha,
                gamma: self.gamma,
            },
        )
    }

    /// β^k = (k,0,0) never dies, so anything with a β part has infinite
    /// order; the rest is a copy of H_E where every non-identity element
    /// is an involution.
    pub fn order(&self) -> Order {
        if !self.beta_exp.is_zero() {
            Order::Infinite
        } else if self.is_identity() {
            Order::Finite(1)
        } else {
            Order::Finite(2)
        }
    }
}

impl MElem {
    /// Any integer δ-exponent is accepted and reduced mod 3.
    pub fn new(delta_exp: i64, alpha: bool, gamma: bool) -> MElem {
        MElem {
            delta_exp: delta_exp.rem_euclid(3) as u8,
            alpha,
            gamma,
        }
    }

    pub fn identity() -> MElem {
        MElem::default()
    }

    pub fn delta_exp(&self) -> u8 {
        self.delta_exp
    }

    pub fn is_identity(&self) -> bool {
        self.delta_exp == 0 && !self.alpha && !self.gamma
    }

    /// `(k,a,c)·(m,b,d) = (k+(−1)^c m mod 3, a⊕b, c⊕d)`: γ inverts δ.
    pub fn mul(&self, rhs: &MElem) -> MElem {
        let m = rhs.delta_exp as i64;
        let k = self.delta_exp as i64 + if self.gamma { -m } else { m };
        MElem::new(k, self.alpha ^ rhs.alpha, self.gamma ^ rhs.gamma)
    }

    pub fn inverse(&self) -> MElem {
        let k = self.delta_exp as i64;
        MElem::new(if self.gamma { k } else { -k }, self.alpha, self.gamma)
    }

    /// Splits off the transversal representative: `x = δ^rep · tail`.
    pub fn decompose(&self) -> (u8, EElem) {
        (
            self.delta_exp,
            EElem {
                alpha: self.alpha,
                gamma: self.gamma,
            },
        )
    }

    pub fn order(&self) -> u64 {
        let mut pow = *self;
        for k in 1..=12 {
            if pow.is_identity() {
                return k;
            }
            pow = pow.mul(self);
        }
        unreachable!("H_M has 12 elements; an order always divides 12")
    }
}

impl EElem {
    pub fn new(alpha: bool, gamma: bool) -> EElem {
        EElem { alpha, gamma }
    }

    pub fn identity() -> EElem {
        EElem::default()
    }

    pub fn is_identity(&self) -> bool {
        !self.alpha && !self.gamma
    }

    /// Componentwise ℤ₂ ⊕ ℤ₂ addition; every element is its own inverse.
    pub fn mul(&self, rhs: &EElem) -> EElem {
        EElem {
            alpha: self.alpha ^ rhs.alpha,
            gamma: self.gamma ^ rhs.gamma,
        }
    }

    pub fn inverse(&self) -> EElem {
        *self
    }

    pub fn embed_p(&self) -> PElem {
        PElem::new(0, self.alpha, self.gamma)
    }

    pub fn embed_m(&self) -> MElem {
        MElem::new(0, self.alpha, self.gamma)
    }
}

/// Image of a letter in the sphere-vertex stabilizer, when it lies there.
/// δ does not.
pub fn letter_image_p(l: Letter) -> Option<PElem> {
    match l {
        Letter::Alpha => Some(PElem::new(0, true, false)),
        Letter::Gamma => Some(PElem::new(0, false, true)),
        Letter::Beta => Some(PElem::new(1, false, false)),
        Letter::BetaInv => Some(PElem::new(-1, false, false)),
        Letter::Delta | Letter::DeltaInv => None,
    }
}

/// Image of a letter in the barycenter stabilizer, when it lies there.
/// β does not.
pub fn letter_image_m(l: Letter) -> Option<MElem> {
    match l {
        Letter::Alpha => Some(MElem::new(0, true, false)),
        Letter::Gamma => Some(MElem::new(0, false, true)),
        Letter::Delta => Some(MElem::new(1, false, false)),
        Letter::DeltaInv => Some(MElem::new(-1, false, false)),
        Letter::Beta | Letter::BetaInv => None,
    }
}

/// All of H_M, computed as the closure of {δ, α, γ} under multiplication
/// rather than read off the coordinate ranges.
pub fn enumerate_m() -> Vec<MElem> {
    let generators = [
        MElem::new(1, false, false),
        MElem::new(0, true, false),
        MElem::new(0, false, true),
    ];
    let mut seen = vec![MElem::identity()];
    let mut frontier = vec![MElem::identity()];
    while let Some(x) = frontier.pop() {
        for g in &generators {
            let y = x.mul(g);
            if !seen.contains(&y) {
                seen.push(y);
                frontier.push(y);
            }
        }
    }
    seen.sort_by_key(|e| (e.delta_exp, e.alpha, e.gamma));
    seen
}

/// All of H_E, as the closure of {α, γ}.
pub fn enumerate_e() -> Vec<EElem> {
    let generators = [EElem::new(true, false), EElem::new(false, true)];
    let mut seen = vec![EElem::identity()];
    let mut frontier = vec![EElem::identity()];
    while let Some(x) = frontier.pop() {
        for g in &generators {
            let y = x.mul(g);
            if !seen.contains(&y) {
                seen.push(y);
                frontier.push(y);
            }
        }
    }
    seen.sort_by_key(|e| (e.alpha, e.gamma));
    seen
}
