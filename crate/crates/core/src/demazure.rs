//! Isobaric Demazure operators and Demazure-module characters.
//!
//! The operator attached to a simple root `α` acts on a single exponent
//! `e^μ` with integer pairing `t = ⟨μ, α^∨⟩` as the geometric string sum
//!
//! * `t ≥ 0`:  `e^μ + e^{μ−α} + … + e^{s(μ)}`,
//! * `t = −1`: `0`,
//! * `t ≤ −2`: `−(e^{μ+α} + … + e^{s(μ)−α})`,
//!
//! extended `Z`-linearly. Iterating the operators along a reduced word for
//! the dominance chain of the target weight `w_0(λ) + kΛ_0` yields the
//! character of the Demazure module `D(k, λ)`.

use num::{One, Signed, Zero};

use crate::affine::{AffineData, AffineWeight};
use crate::cartan::FiniteRootSystem;
use crate::characters::{Exponent, FormalCharacter, GradedCharacter, IrrDecomposition, Mode};
use crate::error::{Error, Result};
use crate::rat::{fmt_rat, rat, Rat};

/// Apply one string operator to every term; `col` is the root's pairing
/// vector and `dstep` its δ-coordinate.
fn demazure_op_core(
    ch: &FormalCharacter,
    idx: usize,
    col: &[Rat],
    dstep: Rat,
) -> Result<FormalCharacter> {
    let mut out = match ch.mode() {
        Mode::Finite => FormalCharacter::zero_finite(ch.width()),
        Mode::Affine => FormalCharacter::zero_affine(ch.width()),
    };
    for (e, &c) in ch.terms() {
        let t_rat = e.coords[idx];
        if !t_rat.denom().is_one() {
            return Err(Error::NonIntegralPairing { index: idx, value: fmt_rat(&t_rat) });
        }
        let t = *t_rat.numer();
        if t.unsigned_abs() > 5_000_000 {
            return Err(Error::Overflow(format!("string length {t} at node {idx}")));
        }
        let mut push = |j: i128, sign: i64| {
            let coords: Vec<Rat> =
                e.coords.iter().zip(col).map(|(x, s)| *x - rat(j) * *s).collect();
            out.add_exponent(
                Exponent { coords, delta: e.delta - rat(j) * dstep },
                sign * c,
            );
        };
        if t >= 0 {
            for j in 0..=t {
                push(j, 1);
            }
        } else if t <= -2 {
            for j in 1..=(-t - 1) {
                push(-j, -1);
            }
        }
    }
    Ok(out)
}

// ---- Affine operators ----

/// One Demazure operator `D_i` on an affine character.
pub fn demazure_op(data: &AffineData, ch: &FormalCharacter, i: usize) -> Result<FormalCharacter> {
    if ch.mode() != Mode::Affine || ch.width() != data.num_nodes() {
        return Err(Error::ModeError(format!(
            "affine Demazure operator needs an affine character on {} nodes",
            data.num_nodes()
        )));
    }
    let (col, dstep) = data.simple_root_vector(i)?;
    demazure_op_core(ch, i, &col, dstep)
}

/// Apply `D_{word[0]}∘D_{word[1]}∘…` to an affine character: the rightmost
/// letter acts first, matching the convention that a word spells a group
/// element with its leftmost letter acting last.
pub fn demazure_apply_word(
    data: &AffineData,
    ch: &FormalCharacter,
    word: &[usize],
) -> Result<FormalCharacter> {
    let mut out = ch.clone();
    for &i in word.iter().rev() {
        out = demazure_op(data, &out, i)?;
    }
    Ok(out)
}

// ---- Finite operators ----

/// One Demazure operator on a finite character.
pub fn demazure_op_finite(
    rs: &FiniteRootSystem,
    ch: &FormalCharacter,
    i: usize,
) -> Result<FormalCharacter> {
    if ch.mode() != Mode::Finite || ch.width() != rs.rank() {
        return Err(Error::ModeError(format!(
            "finite Demazure operator needs a finite character of rank {}",
            rs.rank()
        )));
    }
    if i >= rs.rank() {
        return Err(Error::InvalidIndex { index: i, rank: rs.rank() });
    }
    let col: Vec<Rat> = (0..rs.rank()).map(|r| rat(rs.cartan()[r][i] as i128)).collect();
    demazure_op_core(ch, i, &col, Rat::zero())
}

/// Word application for finite characters, rightmost letter first.
pub fn demazure_apply_word_finite(
    rs: &FiniteRootSystem,
    ch: &FormalCharacter,
    word: &[usize],
) -> Result<FormalCharacter> {
    let mut out = ch.clone();
    for &i in word.iter().rev() {
        out = demazure_op_finite(rs, &out, i)?;
    }
    Ok(out)
}

// ---- Demazure modules ----

/// Character of the Demazure module `V_w(Λ)` for a dominant integral affine
/// weight `Λ` and a caller-supplied reduced word for `w`.
///
/// Non-reduced words are rejected (they would silently compute a different
/// module), as are non-dominant or non-integral `Λ`.
pub fn demazure_char(
    data: &AffineData,
    lambda: &AffineWeight,
    word: &[usize],
) -> Result<FormalCharacter> {
    if lambda.pairings.len() != data.num_nodes() {
        return Err(Error::InvalidHighestWeight(format!(
            "expected {} pairings, got {}",
            data.num_nodes(),
            lambda.pairings.len()
        )));
    }
    if !lambda.is_dominant() || !lambda.is_integral() {
        return Err(Error::InvalidHighestWeight(format!(
            "{lambda} is not dominant integral"
        )));
    }
    if !data.is_reduced_word(word)? {
        return Err(Error::NonReducedWord(word.to_vec()));
    }
    let ch = FormalCharacter::monomial_affine(&lambda.pairings, lambda.delta);
    demazure_apply_word(data, &ch, word)
}

/// The character and bookkeeping of one Demazure module `D(k, λ)`.
#[derive(Debug, Clone)]
pub struct DemazureResult {
    /// Affine type name.
    pub type_name: String,
    /// Normalized level `k` (the affine level is `k·a_0^∨`).
    pub level: Rat,
    /// The finite dominant weight `λ`.
    pub lambda: Vec<Rat>,
    /// The target extreme weight `w_0(λ) + kΛ_0` at δ = 0.
    pub target: AffineWeight,
    /// The dominant end of the target's reflection chain.
    pub top: AffineWeight,
    /// Chain word: the Demazure element as a product of generators,
    /// leftmost letter first.
    pub word: Vec<usize>,
    /// The full affine character.
    pub character: FormalCharacter,
}

impl DemazureResult {
    /// Total dimension.
    pub fn dimension(&self) -> u128 {
        let d = self.character.dimension();
        debug_assert!(d > 0);
        d as u128
    }

    /// Restriction to the finite subalgebra.
    pub fn restricted(&self) -> FormalCharacter {
        self.character.restrict_to_g0().expect("demazure characters are affine")
    }

    /// δ-graded character.
    pub fn graded(&self) -> GradedCharacter {
        self.character.graded().expect("demazure characters are nonempty affine")
    }

    /// Decomposition of the restriction into irreducible characters of the
    /// finite subalgebra.
    pub fn decompose(&self, data: &AffineData) -> Result<IrrDecomposition> {
        self.restricted().decompose_g0(data.g0())
    }
}

/// Build the target weight `w_0(λ) + kΛ_0` at δ-coordinate 0.
fn target_weight(data: &AffineData, k: Rat, lambda: &[Rat]) -> Result<AffineWeight> {
    let w0l = data.g0().w0_of(lambda);
    let mut t = data.embed(&w0l)?;
    t.pairings[0] += k;
    Ok(t)
}

fn validate_lambda(data: &AffineData, lambda: &[Rat]) -> Result<()> {
    if lambda.len() != data.rank() {
        return Err(Error::InvalidWeight(format!(
            "expected {} coordinates, got {}",
            data.rank(),
            lambda.len()
        )));
    }
    if !data.g0().is_dominant_integral(lambda) {
        return Err(Error::InvalidWeight(format!(
            "({}) is not dominant integral",
            lambda.iter().map(fmt_rat).collect::<Vec<_>>().join(",")
        )));
    }
    Ok(())
}

/// Character of the Demazure module `D(k, λ)`: level `k > 0`, finite
/// dominant integral `λ`. Errors with [`Error::NotInX`] when the pair
/// admits no Demazure realization (the chain top is not integral).
pub fn demazure_d(data: &AffineData, k: Rat, lambda: &[Rat]) -> Result<DemazureResult> {
    validate_lambda(data, lambda)?;
    if !k.is_positive() {
        return Err(Error::NonPositiveLevel(fmt_rat(&k)));
    }
    let target = target_weight(data, k, lambda)?;
    let (top, word) = data.dominance_chain(&target)?;
    if !top.is_integral() {
        return Err(Error::NotInX(format!(
            "λ = ({}), k = {}: chain top {top} is not integral",
            lambda.iter().map(fmt_rat).collect::<Vec<_>>().join(","),
            fmt_rat(&k)
        )));
    }
    let ch = FormalCharacter::monomial_affine(&top.pairings, top.delta);
    let character = demazure_apply_word(data, &ch, &word)?;
    debug_assert_eq!(
        character.coeff(&Exponent { coords: target.pairings.clone(), delta: target.delta }),
        1,
        "extreme weight must appear with multiplicity 1"
    );
    Ok(DemazureResult {
        type_name: data.name().to_string(),
        level: k,
        lambda: lambda.to_vec(),
        target,
        top,
        word,
        character,
    })
}

/// Whether the pair `(λ, k)` admits a Demazure realization: `k` positive,
/// `λ` dominant integral, and the dominance chain of `w_0(λ) + kΛ_0` ends
/// in an integral weight.
pub fn is_in_x(data: &AffineData, lambda: &[Rat], k: Rat) -> Result<bool> {
    if lambda.len() != data.rank() {
        return Err(Error::InvalidWeight(format!(
            "expected {} coordinates, got {}",
            data.rank(),
            lambda.len()
        )));
    }
    if !k.is_positive() || !data.g0().is_dominant_integral(lambda) {
        return Ok(false);
    }
    let target = target_weight(data, k, lambda)?;
    let (top, _) = data.dominance_chain(&target)?;
    Ok(top.is_integral())
}
