//! Integer 4×4 representation on the first homology of the surface.
//!
//! Basis order is ([B], [Z], [C], [Y]): each handle's dual pair grouped,
//! which makes β and γ block-structured. The remaining curves expand as
//! [A] = −[B] − [C] and [X] = −[Z] − [Y], the unique expansions invariant
//! under the rotation that cycles A → B → C and X → Y → Z.
//!
//! Generator images, columns = images of basis vectors:
//!
//! * α is the hyperelliptic involution and reverses every curve: −I.
//! * β fixes the back handle pointwise and reverses C and Y:
//!   diag(1, 1, −1, −1).
//! * δ cycles the curves: [B] ↦ [C], [C] ↦ [A] = −[B]−[C], [Y] ↦ [Z],
//!   [Z] ↦ [X] = −[Z]−[Y]. The expansion signs are forced by δ³ = 1.
//! * γ exchanges the handles: [B] ↔ [C] and [Z] ↔ −[Y]. The relators fix
//!   the swap only up to signs — four sign patterns satisfy all eight —
//!   and the two patterns mixing signs between the B/C and Z/Y pairs are
//!   exactly the ones preserving a nonzero intersection form. We pin
//!   [Z] ↦ −[Y], [Y] ↦ −[Z]; the text alone cannot settle whether the
//!   geometric signs match, so the form-preserving choice is taken.
//!
//! The representation is **not faithful** (β² acts trivially). It serves
//! as a one-sided oracle: words with different matrices are provably
//! different group elements.

use serde::Serialize;
use thiserror::Error;

use crate::words::{Letter, Word};

/// A 4×4 integer matrix acting on H₁ of the surface, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HomMatrix(pub [[i64; 4]; 4]);

/// Failures of the homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("matrix entry overflowed i64")]
    Overflow,
    #[error("no nonzero invariant antisymmetric form exists")]
    NoInvariantForm,
}

impl HomMatrix {
    pub fn identity() -> HomMatrix {
        let mut m = [[0i64; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        HomMatrix(m)
    }

    pub fn is_identity(&self) -> bool {
        *self == HomMatrix::identity()
    }

    pub fn entries(&self) -> &[[i64; 4]; 4] {
        &self.0
    }

    pub fn transpose(&self) -> HomMatrix {
        let mut t = [[0i64; 4]; 4];
        for (i, row) in self.0.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                t[j][i] = x;
            }
        }
        HomMatrix(t)
    }

    /// Overflow-checked product. Entries grow only for long mixed words,
    /// but growth is exponential in principle, so it must fail loudly.
    pub fn mul(&self, rhs: &HomMatrix) -> Result<HomMatrix, HomologyError> {
        let mut out = [[0i64; 4]; 4];
        for (i, out_row) in out.iter_mut().enumerate() {
            for (j, cell) in out_row.iter_mut().enumerate() {
                let mut acc: i64 = 0;
                for k in 0..4 {
                    let term = self.0[i][k]
                        .checked_mul(rhs.0[k][j])
                        .ok_or(HomologyError::Overflow)?;
                    acc = acc.checked_add(term).ok_or(HomologyError::Overflow)?;
                }
                *cell = acc;
            }
        }
        Ok(HomMatrix(out))
    }

    pub fn det(&self) -> i64 {
        det_i128(&self.0.map(|row| row.map(i128::from))) as i64
    }
}

fn det_i128(m: &[[i128; 4]; 4]) -> i128 {
    // Cofactor expansion along the first row; fine at this size.
    let minor = |skip_col: usize| {
        let mut sub = [[0i128; 3]; 3];
        for i in 1..4 {
            let mut c = 0;
            for (j, &x) in m[i].iter().enumerate() {
                if j == skip_col {
                    continue;
                }
                sub[i - 1][c] = x;
                c += 1;
            }
        }
        sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
            - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
            + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0])
    };
    (0..4).fold(0i128, |acc, j| {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc + sign * m[0][j] * minor(j)
    })
}

fn alpha_matrix() -> HomMatrix {
    HomMatrix([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
}

fn beta_matrix() -> HomMatrix {
    HomMatrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
}

fn gamma_matrix() -> HomMatrix {
    HomMatrix([[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]])
}

fn delta_matrix() -> HomMatrix {
    HomMatrix([[0, 0, -1, 0], [0, -1, 0, 1], [1, 0, -1, 0], [0, -1, 0, 0]])
}

/// The matrix a letter acts by on ([B], [Z], [C], [Y]).
pub fn generator_matrix(l: Letter) -> HomMatrix {
    match l {
        Letter::Alpha => alpha_matrix(),
        Letter::Beta | Letter::BetaInv => beta_matrix(), // β's image is an involution
        Letter::Gamma => gamma_matrix(),
        Letter::Delta => delta_matrix(),
        Letter::DeltaInv => delta_matrix()
            .mul(&delta_matrix())
            .expect("tiny fixed entries"),
    }
}

/// Image of a word: the product of its letters' matrices, left to right.
pub fn represent(w: &Word) -> Result<HomMatrix, HomologyError> {
    let mut acc = HomMatrix::identity();
    for &l in w.letters() {
        acc = acc.mul(&generator_matrix(l))?;
    }
    Ok(acc)
}

/// The intersection pairing in this basis: the two handle blocks carry
/// opposite orientations once [A] and [X] take the δ-invariant expansions.
/// `invariant_form` re-derives this from scratch; keeping the constant
/// separate preserves a second route for the tests.
pub const INTERSECTION_FORM: [[i64; 4]; 4] =
    [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]];

/// Solves for a nonzero antisymmetric integer J with MᵀJM = J for all
/// four generator images, and checks it is nondegenerate.
///
/// The six independent entries of an antisymmetric 4×4 matrix are
/// unknowns; each generator contributes the linear conditions of its
/// invariance. The integer kernel of that system is computed exactly. An
/// empty kernel (or an everywhere-degenerate one) would falsify the
/// derived generator matrices.
pub fn invariant_form() -> Result<HomMatrix, HomologyError> {
    // Unknown order: (J01, J02, J03, J12, J13, J23).
    const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let generators = [
        alpha_matrix(),
        beta_matrix(),
        gamma_matrix(),
        delta_matrix(),
    ];
    let mut rows: Vec<[i128; 6]> = Vec::new();
    for g in &generators {
        let m = g.entries();
        for (i, j) in PAIRS {
            let mut row = [0i128; 6];
            for (idx, (a, b)) in PAIRS.iter().enumerate() {
                // Coefficient of J_{ab} in (MᵀJM)_{ij}, using J_{ba} = −J_{ab}.
                row[idx] = i128::from(m[*a][i]) * i128::from(m[*b][j])
                    - i128::from(m[*b][i]) * i128::from(m[*a][j]);
            }
            let rhs_idx = PAIRS.iter().position(|p| *p == (i, j)).unwrap();
            row[rhs_idx] -= 1;
            rows.push(row);
        }
    }

    for candidate in integer_kernel(&rows) {
        let mut j = [[0i64; 4]; 4];
        for (idx, (a, b)) in PAIRS.iter().enumerate() {
            j[*a][*b] = candidate[idx] as i64;
            j[*b][*a] = -(candidate[idx] as i64);
        }
        let form = HomMatrix(j);
        let invariant = generators.iter().all(|g| {
            g.transpose()
                .mul(&form)
                .and_then(|x| x.mul(g))
                .map(|x| x == form)
                .unwrap_or(false)
        });
        if invariant && form.det() != 0 {
            return Ok(form);
        }
    }
    Err(HomologyError::NoInvariantForm)
}

/// Primitive integer basis of the kernel of the row system `rows · x = 0`.
///
/// Row-reduces the transpose augmented with an identity using exact
/// gcd elimination; augmentation rows aligned with zero rows of the
/// reduced transpose span the kernel.
fn integer_kernel(rows: &[[i128; 6]]) -> Vec<[i128; 6]> {
    let cols = rows.len();
    // m: 6 x cols (the transpose), u: 6 x 6 companion.
    let mut m: Vec<Vec<i128>> = (0..6)
        .map(|i| rows.iter().map(|r| r[i]).collect())
        .collect();
    let mut u: Vec<[i128; 6]> = (0..6)
        .map(|i| {
            let mut row = [0i128; 6];
            row[i] = 1;
            row
        })
        .collect();

    let mut rank = 0usize;
    for col in 0..cols {
        if rank == 6 {
            break;
        }
        loop {
            let pivot = (rank..6)
                .filter(|&r| m[r][col] != 0)
                .min_by_key(|&r| m[r][col].unsigned_abs());
            let Some(p) = pivot else { break };
            m.swap(rank, p);
            u.swap(rank, p);
            let a = m[rank][col];
            let pivot_m = m[rank].clone();
            let pivot_u = u[rank];
            let mut residue = false;
            for r in rank + 1..6 {
                if m[r][col] == 0 {
                    continue;
                }
                let q = m[r][col] / a;
                for (x, &p) in m[r].iter_mut().zip(&pivot_m) {
                    *x -= q * p;
                }
                for (x, &p) in u[r].iter_mut().zip(&pivot_u) {
                    *x -= q * p;
                }
                residue |= m[r][col] != 0;
            }
            if !residue {
                rank += 1;
                break;
            }
        }
    }

    (rank..6)
        .filter(|&r| m[r].iter().all(|&x| x == 0))
        .map(|r| normalize_primitive(u[r]))
        .collect()
}

fn normalize_primitive(mut v: [i128; 6]) -> [i128; 6] {
    let mut g = 0i128;
    for x in v {
        g = gcd(g, x.abs());
    }
    if g > 1 {
        for x in &mut v {
            *x /= g;
        }
    }
    let leading_negative = v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0);
    if leading_negative {
        for x in &mut v {
            *x = -*x;
        }
    }
    v
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
