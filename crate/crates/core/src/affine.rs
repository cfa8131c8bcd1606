//! Affine Cartan data, affine weights, reflections, translations, dominance
//! chains, and reduced words in the affine Weyl group.
//!
//! # Supported types
//!
//! Twisted: `A2(2)`, `A2l(2)` (`l ≥ 2`), `A2l-1(2)` (`l ≥ 2`), `Dl+1(2)`
//! (`l ≥ 2`), `E6(2)`, `D4(3)`. Untwisted: `X(1)` for every supported finite
//! type `X` (e.g. `A1(1)`, `B3(1)`, `G2(1)`).
//!
//! # Conventions
//!
//! * Nodes are labeled `0..=l` with node 0 the affine node;
//!   `cartan[i][j] = ⟨α_j, α_i^∨⟩` as in the finite case.
//! * The marks `a_i` form the primitive positive right null vector of the
//!   affine Cartan matrix (`δ = Σ a_i·α_i`), the comarks `a_i^∨` the left
//!   null vector (the level of `Λ` is `Σ a_i^∨·⟨Λ, α_i^∨⟩`).
//! * An [`AffineWeight`] stores the `l+1` pairings with the simple affine
//!   coroots plus an exact δ-coordinate; `α_0` carries δ-coordinate `1/a_0`.
//! * The invariant form on the finite weight space is normalized through the
//!   comark/mark ratio: `(α_i, α_j) = (a_i^∨/a_i)·cartan[i][j]` for
//!   `i, j ≥ 1`. Translations `t_μ` act by
//!   `t_μ(Λ) = Λ + k·μ̂ − (⟨λ̄, μ⟩ + ½(μ, μ)k)·δ` where `k` is the level of
//!   `Λ`, `λ̄` its finite part, and `μ̂` the level-zero embedding of `μ`.
//! * The affine Weyl group translates exactly by the lattice `M`: the finite
//!   root lattice in the twisted cases, the image of the coroot lattice
//!   under the form in the untwisted cases.

use std::fmt;

use num::{One, Signed, Zero};

use crate::cartan::{FiniteRootSystem, FiniteType};
use crate::error::{Error, Result};
use crate::rat::{fmt_rat, mat_inv, mat_vec, rat, Rat};

/// Structural family of an affine type, driving case analysis elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineFamily {
    /// `X(1)`: extension of a finite system by the highest root.
    Untwisted,
    /// `A2(2)`: the rank-1 twisted type with a quadruple bond.
    TwistedA2,
    /// `A2l(2)`, `l ≥ 2`: both end edges doubled toward the interior.
    TwistedAEven,
    /// `A2l-1(2)`, `l ≥ 3`: fork at the affine end, doubled far edge.
    TwistedAOdd,
    /// `Dl+1(2)`, `l ≥ 2`: both end edges doubled outward.
    TwistedD,
    /// `E6(2)`.
    TwistedE6,
    /// `D4(3)`.
    TwistedD4Cubic,
}

/// An affine weight: pairings `⟨Λ, α_i^∨⟩` for `i = 0..=l` plus an exact
/// δ-coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AffineWeight {
    /// Pairings with the simple affine coroots, node 0 first.
    pub pairings: Vec<Rat>,
    /// Coefficient of δ.
    pub delta: Rat,
}

impl AffineWeight {
    /// Build from raw parts.
    pub fn new(pairings: Vec<Rat>, delta: Rat) -> Self {
        AffineWeight { pairings, delta }
    }

    /// True if all pairings are nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.pairings.iter().all(|p| !p.is_negative())
    }

    /// True if all pairings are integers (the δ-coordinate may be any
    /// rational).
    pub fn is_integral(&self) -> bool {
        self.pairings.iter().all(|p| p.denom().is_one())
    }

    /// The finite part: pairings at nodes `1..=l`.
    pub fn finite_part(&self) -> Vec<Rat> {
        self.pairings[1..].to_vec()
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.pairings.iter().map(fmt_rat).collect();
        write!(f, "({}; {}δ)", ps.join(","), fmt_rat(&self.delta))
    }
}

/// Immutable tables and operations for one affine type.
#[derive(Debug, Clone)]
pub struct AffineData {
    name: String,
    family: AffineFamily,
    twist: u8,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    g0: FiniteRootSystem,
    /// `(α_i, α_j)` for `i, j = 1..=l` in the affine normalization.
    gram: Vec<Vec<Rat>>,
    /// Basis matrix of the translation lattice `M` (columns, in pairing
    /// coordinates) and its inverse.
    m_basis_inv: Vec<Vec<Rat>>,
}

// ---- Parsing and construction ----

impl AffineData {
    /// Parse a type name such as `"A4(2)"`, `"D4(3)"`, or `"G2(1)"` and
    /// build all tables.
    pub fn parse(input: &str) -> Result<Self> {
        let s = input.trim();
        let bad = || Error::UnsupportedType(input.to_string());
        let open = s.find('(').ok_or_else(bad)?;
        if !s.ends_with(')') {
            return Err(bad());
        }
        let base = &s[..open];
        let twist: u8 = s[open + 1..s.len() - 1].trim().parse().map_err(|_| bad())?;
        let letter = base.chars().next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = base[letter.len_utf8()..].trim().parse().map_err(|_| bad())?;
        Self::build(letter, n, twist).map_err(|_| bad())
    }

    fn build(letter: char, n: usize, twist: u8) -> Result<Self> {
        let name = format!("{letter}{n}({twist})");
        match twist {
            1 => {
                let ftype = match letter {
                    'A' => FiniteType::A(n),
                    'B' => FiniteType::B(n),
                    'C' => FiniteType::C(n),
                    'D' => FiniteType::D(n),
                    'E' => FiniteType::E(n),
                    'F' if n == 4 => FiniteType::F4,
                    'G' if n == 2 => FiniteType::G2,
                    _ => return Err(Error::UnsupportedType(name)),
                };
                Self::build_untwisted(name, ftype)
            }
            2 => match (letter, n) {
                ('A', 2) => Self::build_twisted(
                    name,
                    AffineFamily::TwistedA2,
                    1,
                    2,
                    FiniteType::A(1),
                    |a| {
                        a[0][1] = -1;
                        a[1][0] = -4;
                    },
                ),
                ('A', n) if n >= 4 && n % 2 == 0 => {
                    let l = n / 2;
                    Self::build_twisted(name, AffineFamily::TwistedAEven, l, 2, FiniteType::B(l), |a| {
                        chain(a);
                        a[1][0] = -2;
                        a[l][l - 1] = -2;
                    })
                }
                ('A', 3) => {
                    // Same diagram as the two-doubled-ends family at l = 2.
                    Self::build_twisted(name, AffineFamily::TwistedD, 2, 2, FiniteType::B(2), |a| {
                        chain(a);
                        a[0][1] = -2;
                        a[2][1] = -2;
                    })
                }
                ('A', n) if n >= 5 && n % 2 == 1 => {
                    let l = (n + 1) / 2;
                    Self::build_twisted(name, AffineFamily::TwistedAOdd, l, 2, FiniteType::C(l), |a| {
                        // Fork {0,1} → 2, then a chain with a doubled far edge.
                        a[0][2] = -1;
                        a[2][0] = -1;
                        a[1][2] = -1;
                        a[2][1] = -1;
                        for i in 2..l {
                            a[i][i + 1] = -1;
                            a[i + 1][i] = -1;
                        }
                        a[l - 1][l] = -2;
                    })
                }
                ('D', n) if n >= 3 => {
                    let l = n - 1;
                    Self::build_twisted(name, AffineFamily::TwistedD, l, 2, FiniteType::B(l), |a| {
                        chain(a);
                        a[0][1] = -2;
                        a[l][l - 1] = -2;
                    })
                }
                ('E', 6) => {
                    Self::build_twisted(name, AffineFamily::TwistedE6, 4, 2, FiniteType::F4, |a| {
                        chain(a);
                        a[2][3] = -2;
                    })
                }
                _ => Err(Error::UnsupportedType(name)),
            },
            3 => match (letter, n) {
                ('D', 4) => {
                    Self::build_twisted(name, AffineFamily::TwistedD4Cubic, 2, 3, FiniteType::G2, |a| {
                        a[0][2] = -1;
                        a[2][0] = -1;
                        a[1][2] = -1;
                        a[2][1] = -3;
                    })
                }
                _ => Err(Error::UnsupportedType(name)),
            },
            _ => Err(Error::UnsupportedType(name)),
        }
    }

    fn build_untwisted(name: String, ftype: FiniteType) -> Result<Self> {
        let fin = FiniteRootSystem::new(ftype)?;
        let l = fin.rank();
        let theta = fin.highest_root().to_vec();
        let theta_w = fin.root_in_weight_coords(&theta);
        let mut a = vec![vec![0i64; l + 1]; l + 1];
        a[0][0] = 2;
        for i in 1..=l {
            for j in 1..=l {
                a[i][j] = fin.cartan()[i - 1][j - 1];
            }
        }
        for j in 1..=l {
            // ⟨θ, α_j^∨⟩ and ⟨α_j, θ^∨⟩.
            let mut ej = vec![Rat::zero(); l];
            for (m, x) in fin.cartan().iter().map(|row| row[j - 1]).enumerate() {
                ej[m] = rat(x as i128);
            }
            a[j][0] = -theta_w[j - 1].to_integer() as i64;
            let p = fin.coroot_pairing(&ej, &theta);
            debug_assert!(p.denom().is_one());
            a[0][j] = -p.to_integer() as i64;
        }
        Self::finish(name, AffineFamily::Untwisted, 1, l, a, ftype)
    }

    fn build_twisted(
        name: String,
        family: AffineFamily,
        l: usize,
        twist: u8,
        g0_type: FiniteType,
        fill: impl FnOnce(&mut Vec<Vec<i64>>),
    ) -> Result<Self> {
        let mut a = vec![vec![0i64; l + 1]; l + 1];
        for i in 0..=l {
            a[i][i] = 2;
        }
        fill(&mut a);
        Self::finish(name, family, twist, l, a, g0_type)
    }

    fn finish(
        name: String,
        family: AffineFamily,
        twist: u8,
        l: usize,
        cartan: Vec<Vec<i64>>,
        g0_type: FiniteType,
    ) -> Result<Self> {
        let marks = crate::rat::primitive_positive_null(&cartan)?;
        let transpose: Vec<Vec<i64>> =
            (0..=l).map(|i| (0..=l).map(|j| cartan[j][i]).collect()).collect();
        let comarks = crate::rat::primitive_positive_null(&transpose)?;
        let g0 = FiniteRootSystem::new(g0_type)?;
        for i in 1..=l {
            for j in 1..=l {
                debug_assert_eq!(
                    g0.cartan()[i - 1][j - 1],
                    cartan[i][j],
                    "finite subdiagram of {name} must match {:?}",
                    g0_type
                );
            }
        }
        let gram: Vec<Vec<Rat>> = (1..=l)
            .map(|i| {
                (1..=l)
                    .map(|j| {
                        rat(comarks[i] as i128) / rat(marks[i] as i128)
                            * rat(cartan[i][j] as i128)
                    })
                    .collect()
            })
            .collect();
        // Translation lattice basis: columns are finite simple roots in the
        // twisted cases and form-images of simple coroots when untwisted.
        let mut basis = vec![vec![Rat::zero(); l]; l];
        for j in 0..l {
            let scale = if family == AffineFamily::Untwisted {
                rat(marks[j + 1] as i128) / rat(comarks[j + 1] as i128)
            } else {
                Rat::one()
            };
            for i in 0..l {
                basis[i][j] = rat(cartan[i + 1][j + 1] as i128) * scale;
            }
        }
        let m_basis_inv = mat_inv(&basis)?;
        Ok(AffineData {
            name,
            family,
            twist,
            rank: l,
            cartan,
            marks,
            comarks,
            g0,
            gram,
            m_basis_inv,
        })
    }

    // ---- Accessors ----

    /// Canonical type name, e.g. `"A4(2)"`.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Structural family.
    pub fn family(&self) -> AffineFamily {
        self.family
    }

    /// Twist order (1, 2, or 3).
    pub fn twist(&self) -> u8 {
        self.twist
    }

    /// Finite rank `l` (the diagram has `l+1` nodes).
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of diagram nodes, `l+1`.
    pub fn num_nodes(&self) -> usize {
        self.rank + 1
    }

    /// Affine Cartan matrix.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Marks `a_0..a_l`.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Comarks `a_0^∨..a_l^∨`.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// The finite fixed-point subalgebra's root system.
    pub fn g0(&self) -> &FiniteRootSystem {
        &self.g0
    }

    /// Invariant form on finite simple roots, affine normalization.
    pub fn gram_finite(&self) -> &[Vec<Rat>] {
        &self.gram
    }

    /// The level at which graded Weyl modules live: `1/a_0^∨`.
    pub fn distinguished_level(&self) -> Rat {
        Rat::new(1, self.comarks[0] as i128)
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if i <= self.rank {
            Ok(())
        } else {
            Err(Error::InvalidIndex { index: i, rank: self.rank })
        }
    }

    fn check_finite_weight(&self, mu: &[Rat]) -> Result<()> {
        if mu.len() == self.rank {
            Ok(())
        } else {
            Err(Error::InvalidWeight(format!(
                "expected {} finite coordinates, got {}",
                self.rank,
                mu.len()
            )))
        }
    }

    fn check_affine_weight(&self, w: &AffineWeight) -> Result<()> {
        if w.pairings.len() == self.num_nodes() {
            Ok(())
        } else {
            Err(Error::InvalidWeight(format!(
                "expected {} pairings, got {}",
                self.num_nodes(),
                w.pairings.len()
            )))
        }
    }

    // ---- Weight constructions ----

    /// The fundamental weight `Λ_i` (unit pairing at node `i`, δ = 0).
    pub fn fundamental(&self, i: usize) -> Result<AffineWeight> {
        self.check_node(i)?;
        let mut p = vec![Rat::zero(); self.num_nodes()];
        p[i] = Rat::one();
        Ok(AffineWeight::new(p, Rat::zero()))
    }

    /// Level-zero embedding of a finite weight: pairings `(c, μ_1..μ_l)`
    /// with `c = −(Σ a_i^∨ μ_i)/a_0^∨`, δ = 0.
    pub fn embed(&self, mu: &[Rat]) -> Result<AffineWeight> {
        self.check_finite_weight(mu)?;
        let mut s = Rat::zero();
        for (i, m) in mu.iter().enumerate() {
            s += rat(self.comarks[i + 1] as i128) * *m;
        }
        let mut p = Vec::with_capacity(self.num_nodes());
        p.push(-s / rat(self.comarks[0] as i128));
        p.extend_from_slice(mu);
        Ok(AffineWeight::new(p, Rat::zero()))
    }

    /// Level of an affine weight: `Σ a_i^∨·⟨Λ, α_i^∨⟩`.
    pub fn level(&self, w: &AffineWeight) -> Result<Rat> {
        self.check_affine_weight(w)?;
        let mut s = Rat::zero();
        for (i, p) in w.pairings.iter().enumerate() {
            s += rat(self.comarks[i] as i128) * *p;
        }
        Ok(s)
    }

    /// Pairing `⟨Λ, α_i^∨⟩`.
    pub fn pairing(&self, w: &AffineWeight, i: usize) -> Result<Rat> {
        self.check_affine_weight(w)?;
        self.check_node(i)?;
        Ok(w.pairings[i])
    }

    /// The simple root `α_i` as an affine weight vector: pairing
    /// coordinates are column `i` of the Cartan matrix, and `α_0` carries
    /// δ-coordinate `1/a_0`.
    pub fn simple_root_vector(&self, i: usize) -> Result<(Vec<Rat>, Rat)> {
        self.check_node(i)?;
        let col: Vec<Rat> = (0..self.num_nodes()).map(|r| rat(self.cartan[r][i] as i128)).collect();
        let dstep =
            if i == 0 { Rat::one() / rat(self.marks[0] as i128) } else { Rat::zero() };
        Ok((col, dstep))
    }

    /// Apply the simple reflection `s_i`: `Λ − ⟨Λ, α_i^∨⟩·α_i`.
    pub fn simple_reflection(&self, i: usize, w: &AffineWeight) -> Result<AffineWeight> {
        self.check_affine_weight(w)?;
        let (col, dstep) = self.simple_root_vector(i)?;
        let t = w.pairings[i];
        let pairings: Vec<Rat> =
            w.pairings.iter().zip(&col).map(|(p, c)| *p - t * *c).collect();
        Ok(AffineWeight::new(pairings, w.delta - t * dstep))
    }

    // ---- Invariant form and translations ----

    /// Invariant form `(ν, μ)` of two finite weights in pairing coordinates
    /// (affine normalization).
    pub fn form_finite(&self, nu: &[Rat], mu: &[Rat]) -> Result<Rat> {
        self.check_finite_weight(nu)?;
        self.check_finite_weight(mu)?;
        // (ν, μ) = Σ_j c_j(μ)·(ν, α_j) with (ν, α_j) = (α_j, α_j)/2·ν_j.
        let c = self.finite_root_coords(mu);
        let mut s = Rat::zero();
        for j in 0..self.rank {
            s += c[j] * (self.gram[j][j] / rat(2)) * nu[j];
        }
        Ok(s)
    }

    /// Simple-root coordinates of a finite weight (w.r.t. `α_1..α_l`).
    pub fn finite_root_coords(&self, mu: &[Rat]) -> Vec<Rat> {
        mat_vec(self.g0.cartan_inv(), mu)
    }

    /// The translation operator `t_μ` applied to an affine weight:
    /// `t_μ(Λ) = Λ + k·μ̂ − (⟨λ̄, μ⟩ + ½(μ, μ)·k)·δ` with `k` the level.
    pub fn translate(&self, w: &AffineWeight, mu: &[Rat]) -> Result<AffineWeight> {
        self.check_affine_weight(w)?;
        self.check_finite_weight(mu)?;
        let k = self.level(w)?;
        let muhat = self.embed(mu)?;
        let lambda_bar = w.finite_part();
        let shift = self.form_finite(&lambda_bar, mu)?
            + self.form_finite(mu, mu)? / rat(2) * k;
        let pairings: Vec<Rat> =
            w.pairings.iter().zip(&muhat.pairings).map(|(p, q)| *p + k * *q).collect();
        Ok(AffineWeight::new(pairings, w.delta - shift))
    }

    // ---- Dominance chains ----

    /// Walk an affine weight of positive level to its dominant conjugate.
    ///
    /// Returns the dominant weight and the reflection word in application
    /// order (`word[0]` was applied first). At every step the smallest node
    /// index with a strictly negative pairing is reflected.
    pub fn dominance_chain(&self, w: &AffineWeight) -> Result<(AffineWeight, Vec<usize>)> {
        self.check_affine_weight(w)?;
        let k = self.level(w)?;
        if !k.is_positive() {
            return Err(Error::NonPositiveLevel(fmt_rat(&k)));
        }
        let mut v = w.clone();
        let mut word = Vec::new();
        let mut steps = 0usize;
        loop {
            match v.pairings.iter().position(|p| p.is_negative()) {
                None => return Ok((v, word)),
                Some(i) => {
                    v = self.simple_reflection(i, &v)?;
                    word.push(i);
                    steps += 1;
                    if steps > 2_000_000 {
                        return Err(Error::Overflow(
                            "dominance chain exceeded step bound".into(),
                        ));
                    }
                }
            }
        }
    }

    // ---- Translation lattice and reduced words ----

    /// True if the finite weight lies in the lattice `M` by which the affine
    /// Weyl group translates.
    pub fn in_translation_lattice(&self, mu: &[Rat]) -> Result<bool> {
        self.check_finite_weight(mu)?;
        Ok(mat_vec(&self.m_basis_inv, mu).iter().all(|c| c.denom().is_one()))
    }

    /// Matrix of `s_i` on root coordinates (basis `α_0..α_l`):
    /// `s_i(α_j) = α_j − cartan[i][j]·α_i`.
    fn reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.num_nodes();
        let mut m = vec![vec![0i64; n]; n];
        for (r, row) in m.iter_mut().enumerate() {
            row[r] = 1;
        }
        for j in 0..n {
            m[i][j] -= self.cartan[i][j];
        }
        m
    }

    /// Matrix of `t_μ` on root coordinates. `μ` must pair integrally with
    /// every root, which holds exactly on the translation lattice.
    fn translation_matrix(&self, mu: &[Rat]) -> Result<Vec<Vec<i64>>> {
        let n = self.num_nodes();
        // Finite parts of the simple roots in root coordinates: α_j itself
        // for j ≥ 1 and −(a_1α_1 + … + a_lα_l)/a_0 for j = 0.
        let mut m = vec![vec![0i64; n]; n];
        for j in 0..n {
            let mut fin = vec![Rat::zero(); self.rank];
            if j == 0 {
                for i in 1..=self.rank {
                    fin[i - 1] = -rat(self.marks[i] as i128) / rat(self.marks[0] as i128);
                }
            } else {
                fin[j - 1] = Rat::one();
            }
            // ⟨ᾱ_j, μ⟩ = Σ_i fin_i·(α_i, α_i)/2·μ_i.
            let mut pair = Rat::zero();
            for i in 0..self.rank {
                pair += fin[i] * (self.gram[i][i] / rat(2)) * mu[i];
            }
            if !pair.denom().is_one() {
                return Err(Error::NotInAffineWeylGroup(format!(
                    "translation weight pairs non-integrally ({}) with a root",
                    fmt_rat(&pair)
                )));
            }
            let kj = *pair.numer() as i64;
            // t_μ(α_j) = α_j − ⟨ᾱ_j, μ⟩·δ, and δ = Σ a_i·α_i.
            m[j][j] += 1;
            for i in 0..n {
                m[i][j] -= kj * self.marks[i];
            }
        }
        Ok(m)
    }

    fn mat_mul_i(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0i64;
                for t in 0..n {
                    s += a[i][t] * b[t][j];
                }
                out[i][j] = s;
            }
        }
        out
    }

    fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        m
    }

    /// Matrix (on root coordinates) of the element spelled by a word in the
    /// affine generators; `word[0]` is the leftmost letter (acting last).
    pub(crate) fn word_matrix(&self, word: &[usize]) -> Result<Vec<Vec<i64>>> {
        let mut m = Self::identity_matrix(self.num_nodes());
        for &i in word {
            self.check_node(i)?;
            m = Self::mat_mul_i(&m, &self.reflection_matrix(i));
        }
        Ok(m)
    }

    /// Compute a reduced word for `w·t_μ`, where `w` is a word in the
    /// finite generators (`1..=l`) and `μ` must lie in the translation
    /// lattice. The returned word spells the element as a product of affine
    /// generators, leftmost letter first (acting last on weights).
    pub fn reduced_word(&self, w: &[usize], mu: &[Rat]) -> Result<Vec<usize>> {
        self.check_finite_weight(mu)?;
        for &i in w {
            if i == 0 || i > self.rank {
                return Err(Error::InvalidIndex { index: i, rank: self.rank });
            }
        }
        if !self.in_translation_lattice(mu)? {
            return Err(Error::NotInAffineWeylGroup(format!(
                "weight ({}) is outside the translation lattice",
                mu.iter().map(fmt_rat).collect::<Vec<_>>().join(",")
            )));
        }
        let n = self.num_nodes();
        let mut u = Self::mat_mul_i(&self.word_matrix(w)?, &self.translation_matrix(mu)?);
        let id = Self::identity_matrix(n);
        let mut collected = Vec::new();
        loop {
            // A right descent is a simple root sent to a negative root.
            let descent = (0..n).find(|&j| {
                let col: Vec<i64> = (0..n).map(|r| u[r][j]).collect();
                col.iter().all(|&x| x <= 0) && col.iter().any(|&x| x != 0)
            });
            match descent {
                Some(j) => {
                    u = Self::mat_mul_i(&u, &self.reflection_matrix(j));
                    collected.push(j);
                    if collected.len() > 1_000_000 {
                        return Err(Error::Overflow("reduced word exceeded length bound".into()));
                    }
                }
                None => {
                    if u == id {
                        collected.reverse();
                        return Ok(collected);
                    }
                    return Err(Error::NotInAffineWeylGroup(
                        "element did not reduce to the identity".into(),
                    ));
                }
            }
        }
    }

    /// True if the word (leftmost letter first) is a reduced expression:
    /// every prefix sends the next simple root to a positive root.
    pub fn is_reduced_word(&self, word: &[usize]) -> Result<bool> {
        let n = self.num_nodes();
        let mut prefix = Self::identity_matrix(n);
        for (k, &j) in word.iter().enumerate() {
            self.check_node(j)?;
            let beta: Vec<i64> = (0..n).map(|r| prefix[r][j]).collect();
            if beta.iter().all(|&x| x <= 0) {
                return Ok(false);
            }
            if k + 1 < word.len() {
                prefix = Self::mat_mul_i(&prefix, &self.reflection_matrix(j));
            }
        }
        Ok(true)
    }

    /// Apply a word of simple reflections to an affine weight, leftmost
    /// letter acting last.
    pub fn apply_word_to_weight(&self, word: &[usize], w: &AffineWeight) -> Result<AffineWeight> {
        let mut v = w.clone();
        for &i in word.iter().rev() {
            v = self.simple_reflection(i, &v)?;
        }
        Ok(v)
    }

    /// Image of a dominant integral coweight (coordinates w.r.t. the
    /// fundamental coweights) under the invariant form:
    /// `ν(Σ c_i ω_i^∨) = Σ c_i·(a_i/a_i^∨)·ω_i`.
    pub fn nu_coweight(&self, c: &[i64]) -> Result<Vec<Rat>> {
        if c.len() != self.rank {
            return Err(Error::InvalidWeight(format!(
                "expected {} coweight coordinates, got {}",
                self.rank,
                c.len()
            )));
        }
        Ok((0..self.rank)
            .map(|i| {
                rat(c[i] as i128) * rat(self.marks[i + 1] as i128)
                    / rat(self.comarks[i + 1] as i128)
            })
            .collect())
    }
}

/// Fill single chain edges `0−1−…−l` into an affine matrix.
fn chain(a: &mut Vec<Vec<i64>>) {
    let n = a.len();
    for i in 0..n - 1 {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratq};

    fn w(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x as i128)).collect()
    }

    fn aff(name: &str) -> AffineData {
        AffineData::parse(name).unwrap()
    }

    #[test]
    fn marks_and_comarks_per_family() {
        let cases: &[(&str, &[i64], &[i64])] = &[
            ("A1(1)", &[1, 1], &[1, 1]),
            ("A2(2)", &[1, 2], &[2, 1]),
            ("A4(2)", &[1, 2, 2], &[2, 2, 1]),
            ("A6(2)", &[1, 2, 2, 2], &[2, 2, 2, 1]),
            ("A5(2)", &[1, 1, 2, 1], &[1, 1, 2, 2]),
            ("A7(2)", &[1, 1, 2, 2, 1], &[1, 1, 2, 2, 2]),
            ("A3(2)", &[1, 1, 1], &[1, 2, 1]),
            ("D3(2)", &[1, 1, 1], &[1, 2, 1]),
            ("D4(2)", &[1, 1, 1, 1], &[1, 2, 2, 1]),
            ("E6(2)", &[1, 2, 3, 2, 1], &[1, 2, 3, 4, 2]),
            ("D4(3)", &[1, 1, 2], &[1, 3, 2]),
            ("B3(1)", &[1, 1, 2, 2], &[1, 1, 2, 1]),
            ("C2(1)", &[1, 2, 1], &[1, 1, 1]),
            ("G2(1)", &[1, 2, 3], &[1, 2, 1]),
        ];
        for (name, marks, comarks) in cases {
            let d = aff(name);
            assert_eq!(d.marks(), *marks, "marks of {name}");
            assert_eq!(d.comarks(), *comarks, "comarks of {name}");
            assert!(crate::rat::is_null_vector(d.cartan(), d.marks()));
        }
    }

    #[test]
    fn g0_types_per_family() {
        let cases = [
            ("A2(2)", "A1"),
            ("A4(2)", "B2"),
            ("A6(2)", "B3"),
            ("A5(2)", "C3"),
            ("A3(2)", "B2"),
            ("D4(2)", "B3"),
            ("D5(2)", "B4"),
            ("E6(2)", "F4"),
            ("D4(3)", "G2"),
            ("A1(1)", "A1"),
            ("F4(1)", "F4"),
        ];
        for (name, g0) in cases {
            assert_eq!(aff(name).g0().ftype().name(), g0, "fixed-point type of {name}");
        }
    }

    #[test]
    fn unsupported_names_are_rejected() {
        for bad in ["A2(4)", "H3(1)", "E6(3)", "D4(4)", "A1(2)", "B3(2)", "Q", "A(1)", "A0(1)"] {
            assert!(
                matches!(AffineData::parse(bad), Err(Error::UnsupportedType(_))),
                "{bad} should be rejected"
            );
        }
    }

    #[test]
    fn gram_matrix_is_symmetric() {
        for name in ["A2(2)", "A4(2)", "A5(2)", "D4(2)", "E6(2)", "D4(3)", "B3(1)", "G2(1)"] {
            let d = aff(name);
            let g = d.gram_finite();
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    assert_eq!(g[i][j], g[j][i], "gram symmetry of {name} at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn level_of_fundamental_weights_equals_comarks() {
        let d = aff("E6(2)");
        for i in 0..=d.rank() {
            let li = d.fundamental(i).unwrap();
            assert_eq!(d.level(&li).unwrap(), rat(d.comarks()[i] as i128));
        }
    }

    #[test]
    fn embed_has_level_zero() {
        let d = aff("A4(2)");
        let mu = w(&[3, 1]);
        let e = d.embed(&mu).unwrap();
        assert_eq!(d.level(&e).unwrap(), rat(0));
        assert_eq!(e.finite_part(), mu);
    }

    #[test]
    fn affine_reflection_tracks_delta() {
        // Walking Λ0 − 2ω + (level 1) dominance chain in A1(1): the chain is
        // s_1 then s_0 and ends at Λ0 + δ.
        let d = aff("A1(1)");
        let start = AffineWeight::new(w(&[3, -2]), rat(0));
        let (top, word) = d.dominance_chain(&start).unwrap();
        assert_eq!(word, vec![1, 0]);
        assert_eq!(top.pairings, w(&[1, 0]));
        assert_eq!(top.delta, rat(1));
        // Applying the word back (leftmost acts last) returns the start.
        let back = d.apply_word_to_weight(&[1, 0], &top);
        // word [1,0] as product s_1·s_0 applied to top: s_0 first.
        assert_eq!(back.unwrap(), start);
    }

    #[test]
    fn dominance_chain_requires_positive_level() {
        let d = aff("A2(2)");
        let zero_level = d.embed(&w(&[1])).unwrap();
        assert!(matches!(
            d.dominance_chain(&zero_level),
            Err(Error::NonPositiveLevel(_))
        ));
    }

    #[test]
    fn translation_lattice_membership() {
        let d = aff("A4(2)");
        assert!(d.in_translation_lattice(&w(&[1, 0])).unwrap());
        assert!(!d.in_translation_lattice(&w(&[0, 1])).unwrap());
        // Root lattice combinations are always inside.
        assert!(d.in_translation_lattice(&w(&[0, 2])).unwrap());

        // Untwisted non-simply-laced: the lattice is the form-image of the
        // coroot lattice.
        let b = aff("B3(1)");
        // ν(α_3^∨) = 2α_3 in pairing coordinates: 2·column 3.
        let two_alpha3 = w(&[0, -2, 4]);
        assert!(b.in_translation_lattice(&two_alpha3).unwrap());
        let alpha3 = w(&[0, -1, 2]);
        assert!(!b.in_translation_lattice(&alpha3).unwrap());
        let alpha1 = w(&[2, -1, 0]);
        assert!(b.in_translation_lattice(&alpha1).unwrap());
    }

    #[test]
    fn translate_composes_additively() {
        let d = aff("D4(3)");
        let lam = AffineWeight::new(w(&[1, 1, 0]), ratq(1, 3));
        let mu = w(&[2, 1]);
        let nu = w(&[0, 1]);
        let a = d.translate(&d.translate(&lam, &mu).unwrap(), &nu).unwrap();
        let sum: Vec<Rat> = mu.iter().zip(&nu).map(|(x, y)| *x + *y).collect();
        let b = d.translate(&lam, &sum).unwrap();
        assert_eq!(a, b, "t_ν∘t_μ = t_{{μ+ν}} on weights");
    }

    #[test]
    fn translate_preserves_level() {
        let d = aff("A5(2)");
        let lam = AffineWeight::new(w(&[2, 0, 1, 0]), rat(0));
        let k = d.level(&lam).unwrap();
        let t = d.translate(&lam, &w(&[1, 1, 0])).unwrap();
        assert_eq!(d.level(&t).unwrap(), k);
    }

    #[test]
    fn reduced_word_of_identity_is_empty() {
        let d = aff("A4(2)");
        assert_eq!(d.reduced_word(&[], &w(&[0, 0])).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn reduced_word_of_plain_translation_in_cubic_type() {
        let d = aff("D4(3)");
        let word = d.reduced_word(&[], &w(&[-1, 0])).unwrap();
        assert_eq!(word, vec![1, 2, 1, 2, 1, 0, 2, 1, 2, 0]);
        assert!(d.is_reduced_word(&word).unwrap());
        // Round trip: the word's matrix equals the translation matrix.
        assert_eq!(
            d.word_matrix(&word).unwrap(),
            d.translation_matrix(&w(&[-1, 0])).unwrap()
        );
    }

    #[test]
    fn reduced_word_rejects_weights_outside_lattice() {
        let d = aff("A4(2)");
        assert!(matches!(
            d.reduced_word(&[], &w(&[0, 1])),
            Err(Error::NotInAffineWeylGroup(_))
        ));
        // Fractional weights are rejected the same way.
        let half = vec![ratq(1, 2), rat(0)];
        assert!(d.reduced_word(&[], &half).is_err());
    }

    #[test]
    fn reduced_word_round_trips_group_elements() {
        let d = aff("A2(2)");
        // The translation lattice of A2(2) is the finite root lattice,
        // spanned by α_1 = 2ω.
        for (wword, mu) in [
            (vec![1], vec![rat(2)]),
            (vec![], vec![rat(4)]),
            (vec![1], vec![rat(-2)]),
        ] {
            let word = d.reduced_word(&wword, &mu).unwrap();
            assert!(d.is_reduced_word(&word).unwrap(), "word {word:?}");
            let lhs = d.word_matrix(&word).unwrap();
            let rhs = AffineData::mat_mul_i(
                &d.word_matrix(&wword).unwrap(),
                &d.translation_matrix(&mu).unwrap(),
            );
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn non_reduced_words_are_detected() {
        let d = aff("A2(2)");
        assert!(!d.is_reduced_word(&[1, 1]).unwrap());
        assert!(!d.is_reduced_word(&[0, 1, 1, 0]).unwrap());
        assert!(d.is_reduced_word(&[0, 1, 0, 1]).unwrap());
        assert!(d.is_reduced_word(&[]).unwrap());
    }

    #[test]
    fn nu_images_of_fundamental_coweights() {
        let expect: &[(&str, &[(i64, i64)])] = &[
            ("A2(2)", &[(2, 1)]),
            ("A4(2)", &[(1, 1), (2, 1)]),
            ("A5(2)", &[(1, 1), (1, 1), (1, 2)]),
            ("D4(2)", &[(1, 2), (1, 2), (1, 1)]),
            ("E6(2)", &[(1, 1), (1, 1), (1, 2), (1, 2)]),
            ("D4(3)", &[(1, 3), (1, 1)]),
            ("A6(2)", &[(1, 1), (1, 1), (2, 1)]),
            ("A1(1)", &[(1, 1)]),
        ];
        for (name, ratios) in expect {
            let d = aff(name);
            for (i, (p, q)) in ratios.iter().enumerate() {
                let mut c = vec![0i64; d.rank()];
                c[i] = 1;
                let nu = d.nu_coweight(&c).unwrap();
                let mut want = vec![rat(0); d.rank()];
                want[i] = ratq(i128::from(*p), i128::from(*q));
                assert_eq!(nu, want, "ν(ω_{}^∨) in {name}", i + 1);
            }
        }
    }
}
