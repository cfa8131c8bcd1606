//! Exact formal characters, δ-gradings, and decomposition into irreducible
//! characters of the finite subalgebra.
//!
//! A [`FormalCharacter`] is a finite integer combination of exponentials
//! `e^μ`. Exponents carry the pairing coordinates of `μ` plus an exact
//! δ-coordinate; finite-mode characters keep the δ-coordinate pinned at 0.
//! Mixing modes (or ranks) in arithmetic is an error rather than a silent
//! coercion.
//!
//! The grading of an affine character reads the δ-coordinate: the bucket of
//! lowest δ is declared degree 0 (for characters of modules over the current
//! algebra this is the piece containing the classical subrepresentation
//! generated by the extreme weight), and the degree climbs with δ.

use std::collections::BTreeMap;

use num::Zero;

use crate::cartan::FiniteRootSystem;
use crate::error::{Error, Result};
use crate::rat::{fmt_rat, Rat};

/// Whether a character lives over the finite or the affine weight lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Exponents are finite weights; the δ-coordinate is identically 0.
    Finite,
    /// Exponents are affine weights (`l+1` pairings) with a δ-coordinate.
    Affine,
}

/// A single exponent `e^μ`: pairing coordinates plus δ-coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Exponent {
    /// Pairing coordinates `⟨μ, α_i^∨⟩` (length = rank, or rank+1 in
    /// affine mode).
    pub coords: Vec<Rat>,
    /// Coefficient of δ (always 0 in finite mode).
    pub delta: Rat,
}

/// An exact formal character: a finite `Z`-combination of exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    mode: Mode,
    width: usize,
    terms: BTreeMap<Exponent, i64>,
}

impl FormalCharacter {
    /// The zero character on `rank` finite coordinates.
    pub fn zero_finite(rank: usize) -> Self {
        FormalCharacter { mode: Mode::Finite, width: rank, terms: BTreeMap::new() }
    }

    /// The zero character on `nodes` affine coordinates.
    pub fn zero_affine(nodes: usize) -> Self {
        FormalCharacter { mode: Mode::Affine, width: nodes, terms: BTreeMap::new() }
    }

    /// The single term `e^μ` for a finite weight.
    pub fn monomial_finite(mu: &[Rat]) -> Self {
        let mut ch = Self::zero_finite(mu.len());
        ch.add_term_finite(mu, 1);
        ch
    }

    /// The single term `e^Λ` for an affine weight given as coordinates and
    /// δ-coordinate.
    pub fn monomial_affine(coords: &[Rat], delta: Rat) -> Self {
        let mut ch = Self::zero_affine(coords.len());
        ch.add_term_affine(coords, delta, 1);
        ch
    }

    /// Mode of the character.
    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Number of coordinates per exponent.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of distinct exponents with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True if the character has no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate terms in canonical (lexicographic) exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &i64)> {
        self.terms.iter()
    }

    /// Coefficient of a given exponent (0 if absent).
    pub fn coeff(&self, e: &Exponent) -> i64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    /// Add `c·e^μ` for a finite weight.
    pub fn add_term_finite(&mut self, mu: &[Rat], c: i64) {
        debug_assert_eq!(self.mode, Mode::Finite);
        debug_assert_eq!(mu.len(), self.width);
        self.add_exponent(Exponent { coords: mu.to_vec(), delta: Rat::zero() }, c);
    }

    /// Add `c·e^Λ` for an affine weight.
    pub fn add_term_affine(&mut self, coords: &[Rat], delta: Rat, c: i64) {
        debug_assert_eq!(self.mode, Mode::Affine);
        debug_assert_eq!(coords.len(), self.width);
        self.add_exponent(Exponent { coords: coords.to_vec(), delta }, c);
    }

    pub(crate) fn add_exponent(&mut self, e: Exponent, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if *v == 0 {
                    // Remove exact cancellations to keep the support minimal.
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.mode != other.mode || self.width != other.width {
            return Err(Error::ModeError(format!(
                "{:?}/{} vs {:?}/{}",
                self.mode, self.width, other.mode, other.width
            )));
        }
        Ok(())
    }

    /// Sum of two characters of identical mode and width.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, &c) in other.terms() {
            out.add_exponent(e.clone(), c);
        }
        Ok(out)
    }

    /// Difference of two characters of identical mode and width.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, &c) in other.terms() {
            out.add_exponent(e.clone(), -c);
        }
        Ok(out)
    }

    /// Product of two characters (exponents add, δ-coordinates add).
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = FormalCharacter { mode: self.mode, width: self.width, terms: BTreeMap::new() };
        for (e1, &c1) in self.terms() {
            for (e2, &c2) in other.terms() {
                let coords: Vec<Rat> =
                    e1.coords.iter().zip(&e2.coords).map(|(a, b)| *a + *b).collect();
                out.add_exponent(Exponent { coords, delta: e1.delta + e2.delta }, c1 * c2);
            }
        }
        Ok(out)
    }

    /// The character scaled by an integer.
    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return FormalCharacter { mode: self.mode, width: self.width, terms: BTreeMap::new() };
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// `n`-th power (exponents add); `pow(0)` is the unit character `e^0`.
    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut out = match self.mode {
            Mode::Finite => Self::monomial_finite(&vec![Rat::zero(); self.width]),
            Mode::Affine => Self::monomial_affine(&vec![Rat::zero(); self.width], Rat::zero()),
        };
        for _ in 0..n {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// Total dimension: the coefficient sum (may be negative for virtual
    /// characters).
    pub fn dimension(&self) -> i128 {
        self.terms.values().map(|&c| c as i128).sum()
    }

    /// Smallest δ-coordinate over the support.
    pub fn min_delta(&self) -> Result<Rat> {
        self.terms.keys().map(|e| e.delta).min().ok_or(Error::EmptyCharacter)
    }

    /// Largest δ-coordinate over the support.
    pub fn max_delta(&self) -> Result<Rat> {
        self.terms.keys().map(|e| e.delta).max().ok_or(Error::EmptyCharacter)
    }

    /// Restrict an affine character to the finite subalgebra: drop the
    /// node-0 pairing and the δ-coordinate.
    pub fn restrict_to_g0(&self) -> Result<FormalCharacter> {
        if self.mode != Mode::Affine {
            return Err(Error::ModeError("restrict_to_g0 needs an affine character".into()));
        }
        let mut out = FormalCharacter::zero_finite(self.width.saturating_sub(1));
        for (e, &c) in self.terms() {
            out.add_term_finite(&e.coords[1..], c);
        }
        Ok(out)
    }

    /// Split an affine character into its δ-graded pieces; the bucket with
    /// the smallest δ-coordinate becomes degree 0.
    pub fn graded(&self) -> Result<GradedCharacter> {
        if self.mode != Mode::Affine {
            return Err(Error::ModeError("graded needs an affine character".into()));
        }
        if self.is_zero() {
            return Err(Error::EmptyCharacter);
        }
        let min = self.min_delta()?;
        let rank = self.width - 1;
        let mut buckets: BTreeMap<Rat, FormalCharacter> = BTreeMap::new();
        for (e, &c) in self.terms() {
            let degree = e.delta - min;
            buckets
                .entry(degree)
                .or_insert_with(|| FormalCharacter::zero_finite(rank))
                .add_term_finite(&e.coords[1..], c);
        }
        Ok(GradedCharacter { rank, buckets })
    }

    /// Decompose a finite character into irreducible characters of the given
    /// root system by repeated extraction of the maximal-height term.
    ///
    /// Errors with [`Error::NotAModuleCharacter`] when the character is not a
    /// nonnegative integer combination of irreducible characters.
    pub fn decompose_g0(&self, rs: &FiniteRootSystem) -> Result<IrrDecomposition> {
        if self.mode != Mode::Finite {
            return Err(Error::ModeError("decompose_g0 needs a finite character".into()));
        }
        if self.width != rs.rank() {
            return Err(Error::ModeError(format!(
                "character width {} vs root-system rank {}",
                self.width,
                rs.rank()
            )));
        }
        let mut work = self.clone();
        let mut parts: BTreeMap<Vec<Rat>, i64> = BTreeMap::new();
        while !work.is_zero() {
            // Any maximal-height term of a module character is a highest
            // weight of some constituent, so it must be dominant integral
            // with positive coefficient.
            let (lead, &mult) = work
                .terms
                .iter()
                .max_by(|(e1, _), (e2, _)| {
                    rs.weight_height(&e1.coords)
                        .cmp(&rs.weight_height(&e2.coords))
                        .then(e1.coords.cmp(&e2.coords))
                })
                .expect("nonzero character has a leading term");
            let mu = lead.coords.clone();
            if !rs.is_dominant_integral(&mu) {
                return Err(Error::NotAModuleCharacter(format!(
                    "leading term {:?} is not dominant integral",
                    mu.iter().map(fmt_rat).collect::<Vec<_>>()
                )));
            }
            if mult < 0 {
                return Err(Error::NotAModuleCharacter(format!(
                    "leading term {:?} has negative multiplicity {mult}",
                    mu.iter().map(fmt_rat).collect::<Vec<_>>()
                )));
            }
            let irr = rs.irr_char(&mu)?;
            work = work.sub(&irr.scale(mult))?;
            *parts.entry(mu).or_insert(0) += mult;
        }
        Ok(IrrDecomposition { parts })
    }
}

// ---- Graded characters ----

/// An affine character split into δ-graded finite characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    rank: usize,
    buckets: BTreeMap<Rat, FormalCharacter>,
}

impl GradedCharacter {
    /// Rank of the finite weight lattice the buckets live on.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The graded pieces, keyed by degree (ascending).
    pub fn buckets(&self) -> &BTreeMap<Rat, FormalCharacter> {
        &self.buckets
    }

    /// Dimension of each graded piece, keyed by degree.
    pub fn graded_dimension(&self) -> BTreeMap<Rat, i128> {
        self.buckets.iter().map(|(d, ch)| (*d, ch.dimension())).collect()
    }

    /// Total dimension across all degrees.
    pub fn dimension(&self) -> i128 {
        self.buckets.values().map(|ch| ch.dimension()).sum()
    }

    /// Forget the grading: the sum of all buckets (equals the restriction
    /// of the original affine character).
    pub fn collapse(&self) -> FormalCharacter {
        let mut out = FormalCharacter::zero_finite(self.rank);
        for ch in self.buckets.values() {
            out = out.add(ch).expect("buckets share rank");
        }
        out
    }
}

// ---- Irreducible decompositions ----

/// A multiset of dominant integral highest weights with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrDecomposition {
    parts: BTreeMap<Vec<Rat>, i64>,
}

impl IrrDecomposition {
    /// Build from explicit (highest weight, multiplicity) pairs; weights
    /// must be distinct and multiplicities positive.
    pub fn from_pairs(pairs: &[(Vec<Rat>, i64)]) -> Result<Self> {
        let mut parts = BTreeMap::new();
        for (mu, m) in pairs {
            if *m <= 0 {
                return Err(Error::NotAModuleCharacter(format!(
                    "multiplicity {m} is not positive"
                )));
            }
            if parts.insert(mu.clone(), *m).is_some() {
                return Err(Error::NotAModuleCharacter("duplicate highest weight".into()));
            }
        }
        Ok(IrrDecomposition { parts })
    }

    /// The summands, keyed by highest weight in lexicographic order.
    pub fn parts(&self) -> &BTreeMap<Vec<Rat>, i64> {
        &self.parts
    }

    /// Number of distinct highest weights.
    pub fn num_distinct(&self) -> usize {
        self.parts.len()
    }

    /// Number of irreducible summands counted with multiplicity.
    pub fn num_summands(&self) -> i64 {
        self.parts.values().sum()
    }

    /// Multiplicity of a given highest weight.
    pub fn mult(&self, mu: &[Rat]) -> i64 {
        self.parts.get(mu).copied().unwrap_or(0)
    }

    /// Total dimension, via the Weyl dimension formula.
    pub fn dimension(&self, rs: &FiniteRootSystem) -> Result<u128> {
        let mut total: u128 = 0;
        for (mu, &m) in &self.parts {
            let d = rs.weyl_dim(mu)?;
            total = total
                .checked_add(d.checked_mul(m as u128).ok_or_else(|| {
                    Error::Overflow("decomposition dimension".into())
                })?)
                .ok_or_else(|| Error::Overflow("decomposition dimension".into()))?;
        }
        Ok(total)
    }

    /// Rebuild the full character `Σ mult·χ(V(μ))` (used in cross-checks).
    pub fn reconstruct(&self, rs: &FiniteRootSystem) -> Result<FormalCharacter> {
        let mut out = FormalCharacter::zero_finite(rs.rank());
        for (mu, &m) in &self.parts {
            out = out.add(&rs.irr_char(mu)?.scale(m))?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::FiniteType;
    use crate::rat::{rat, ratq};

    fn w(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x as i128)).collect()
    }

    #[test]
    fn arithmetic_respects_mode() {
        let a = FormalCharacter::monomial_finite(&w(&[1, 0]));
        let b = FormalCharacter::monomial_affine(&w(&[1, 0]), rat(0));
        assert!(matches!(a.add(&b), Err(Error::ModeError(_))));
        let c = FormalCharacter::monomial_finite(&w(&[1, 0, 0]));
        assert!(matches!(a.multiply(&c), Err(Error::ModeError(_))));
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = FormalCharacter::monomial_finite(&w(&[2, 1]));
        let d = a.sub(&a).unwrap();
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
    }

    #[test]
    fn multiplication_adds_exponents_and_deltas() {
        let a = FormalCharacter::monomial_affine(&w(&[1, 2]), ratq(1, 2));
        let b = FormalCharacter::monomial_affine(&w(&[0, -1]), ratq(3, 2));
        let p = a.multiply(&b).unwrap();
        assert_eq!(p.num_terms(), 1);
        let (e, &c) = p.terms().next().unwrap();
        assert_eq!(c, 1);
        assert_eq!(e.coords, w(&[1, 1]));
        assert_eq!(e.delta, rat(2));
    }

    #[test]
    fn grading_puts_lowest_delta_at_degree_zero() {
        let mut ch = FormalCharacter::zero_affine(2);
        ch.add_term_affine(&w(&[1, 0]), rat(1), 1);
        ch.add_term_affine(&w(&[-1, 2]), rat(0), 1);
        ch.add_term_affine(&w(&[1, 0]), rat(0), 1);
        ch.add_term_affine(&w(&[3, -2]), rat(0), 1);
        let g = ch.graded().unwrap();
        let dims = g.graded_dimension();
        assert_eq!(dims.get(&rat(0)), Some(&3));
        assert_eq!(dims.get(&rat(1)), Some(&1));
        assert_eq!(g.dimension(), 4);
        // Degree 0 is the sl2 character of V(2ω).
        let deg0 = &g.buckets()[&rat(0)];
        let mut expect = FormalCharacter::zero_finite(1);
        for m in [-2i64, 0, 2] {
            expect.add_term_finite(&w(&[m]), 1);
        }
        assert_eq!(deg0, &expect);
    }

    #[test]
    fn decompose_recovers_tensor_square_of_sl3_fundamental() {
        // V(ω1)⊗V(ω1) = V(2ω1) ⊕ V(ω2) for A2.
        let rs = FiniteRootSystem::new(FiniteType::A(2)).unwrap();
        let f = rs.irr_char(&w(&[1, 0])).unwrap();
        let sq = f.multiply(&f).unwrap();
        let dec = sq.decompose_g0(&rs).unwrap();
        assert_eq!(dec.num_summands(), 2);
        assert_eq!(dec.mult(&w(&[2, 0])), 1);
        assert_eq!(dec.mult(&w(&[0, 1])), 1);
        assert_eq!(dec.dimension(&rs).unwrap(), 9);
        assert_eq!(dec.reconstruct(&rs).unwrap(), sq);
    }

    #[test]
    fn non_module_characters_are_rejected() {
        let rs = FiniteRootSystem::new(FiniteType::A(1)).unwrap();
        // A bare non-dominant exponent is not a module character.
        let bad = FormalCharacter::monomial_finite(&w(&[-1]));
        assert!(matches!(bad.decompose_g0(&rs), Err(Error::NotAModuleCharacter(_))));
        // A dominant exponent alone (missing its orbit) is rejected too.
        let partial = FormalCharacter::monomial_finite(&w(&[2]));
        let dec = partial.decompose_g0(&rs);
        assert!(dec.is_err(), "e^(2ω) alone is not a module character: {dec:?}");
    }

    #[test]
    fn restriction_drops_node_zero_and_delta() {
        let ch = FormalCharacter::monomial_affine(&w(&[3, 1, 2]), ratq(-1, 2));
        let r = ch.restrict_to_g0().unwrap();
        assert_eq!(r.mode(), Mode::Finite);
        let (e, _) = r.terms().next().unwrap();
        assert_eq!(e.coords, w(&[1, 2]));
        assert_eq!(e.delta, rat(0));
    }
}
