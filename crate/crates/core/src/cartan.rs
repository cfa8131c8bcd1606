//! Finite root systems: Cartan matrices, root closures, Weyl-group
//! combinatorics, the dimension formula, and irreducible characters.
//!
//! # Conventions
//!
//! * `cartan[i][j] = ⟨α_j, α_i^∨⟩`, so the simple root `α_j` expressed in
//!   fundamental-weight (pairing) coordinates is **column** `j`.
//! * Weights are vectors of exact rationals in pairing coordinates
//!   `μ_i = ⟨μ, α_i^∨⟩`; integral weights have integer entries.
//! * The symmetrizer `d_i` makes `d_i·cartan[i][j]` symmetric and is
//!   normalized so the short roots have `d = 1`; then
//!   `(α_i, α_j) = d_i·cartan[i][j]`.
//! * Node labels for `F4` and `G2` match the twisted affine diagrams whose
//!   subdiagrams these are: `F4` has `α_1, α_2` short and `α_3, α_4` long;
//!   `G2` has `α_1` long and `α_2` short.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{mat_inv, rat, Rat};

// ---- Finite types ----

/// The supported finite Cartan types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiniteType {
    /// `A_l`, `l ≥ 1`.
    A(usize),
    /// `B_l`, `l ≥ 2`: chain with a doubled last edge pointing at the short
    /// end node (`cartan[l-1][l-2] = -2`), so `α_l` is short.
    B(usize),
    /// `C_l`, `l ≥ 2`: chain with `cartan[l-2][l-1] = -2`, so `α_l` is long.
    C(usize),
    /// `D_l`, `l ≥ 3`.
    D(usize),
    /// `E_6`, `E_7`, `E_8` in the standard labeling (node 2 on the branch).
    E(usize),
    /// `F_4` with `α_1, α_2` short and `α_3, α_4` long
    /// (`cartan[1][2] = -2`).
    F4,
    /// `G_2` with `α_1` long and `α_2` short (`cartan[1][0] = -3`); the
    /// 7-dimensional fundamental module sits at `ω_2`.
    G2,
}

impl FiniteType {
    /// Rank of the system.
    pub fn rank(&self) -> usize {
        match *self {
            FiniteType::A(l) | FiniteType::B(l) | FiniteType::C(l) | FiniteType::D(l)
            | FiniteType::E(l) => l,
            FiniteType::F4 => 4,
            FiniteType::G2 => 2,
        }
    }

    /// Short display name such as `"B3"`.
    pub fn name(&self) -> String {
        match *self {
            FiniteType::A(l) => format!("A{l}"),
            FiniteType::B(l) => format!("B{l}"),
            FiniteType::C(l) => format!("C{l}"),
            FiniteType::D(l) => format!("D{l}"),
            FiniteType::E(l) => format!("E{l}"),
            FiniteType::F4 => "F4".into(),
            FiniteType::G2 => "G2".into(),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            FiniteType::A(l) => l >= 1,
            FiniteType::B(l) | FiniteType::C(l) => l >= 2,
            FiniteType::D(l) => l >= 3,
            FiniteType::E(l) => (6..=8).contains(&l),
            FiniteType::F4 | FiniteType::G2 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedType(self.name()))
        }
    }

    /// The Cartan matrix in the convention `cartan[i][j] = ⟨α_j, α_i^∨⟩`.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i64>>> {
        self.validate()?;
        let l = self.rank();
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let edge = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match *self {
            FiniteType::A(_) => {
                for i in 0..l - 1 {
                    edge(&mut a, i, i + 1);
                }
            }
            FiniteType::B(_) => {
                for i in 0..l - 1 {
                    edge(&mut a, i, i + 1);
                }
                a[l - 1][l - 2] = -2;
            }
            FiniteType::C(_) => {
                for i in 0..l - 1 {
                    edge(&mut a, i, i + 1);
                }
                a[l - 2][l - 1] = -2;
            }
            FiniteType::D(_) => {
                for i in 0..l - 2 {
                    edge(&mut a, i, i + 1);
                }
                edge(&mut a, l - 3, l - 1);
            }
            FiniteType::E(_) => {
                edge(&mut a, 0, 2);
                edge(&mut a, 2, 3);
                edge(&mut a, 1, 3);
                for i in 3..l - 1 {
                    edge(&mut a, i, i + 1);
                }
            }
            FiniteType::F4 => {
                for i in 0..3 {
                    edge(&mut a, i, i + 1);
                }
                a[1][2] = -2;
            }
            FiniteType::G2 => {
                a[0][1] = -1;
                a[1][0] = -3;
            }
        }
        Ok(a)
    }
}

// ---- Root system ----

/// A finite root system with precomputed closure and Weyl data.
#[derive(Debug, Clone)]
pub struct FiniteRootSystem {
    ftype: FiniteType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    cartan_inv: Vec<Vec<Rat>>,
    /// All positive roots in simple-root coordinates, sorted by
    /// (height, coordinates).
    positive_roots: Vec<Vec<i64>>,
    longest_word: Vec<usize>,
    highest_root: Vec<i64>,
    highest_short_root: Vec<i64>,
}

impl FiniteRootSystem {
    /// Build the root system of the given type.
    pub fn new(ftype: FiniteType) -> Result<Self> {
        let cartan = ftype.cartan_matrix()?;
        Self::from_parts(ftype, cartan)
    }

    fn from_parts(ftype: FiniteType, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let rank = cartan.len();
        let symmetrizer = symmetrizer(&cartan)?;
        let cartan_rat: Vec<Vec<Rat>> =
            cartan.iter().map(|r| r.iter().map(|&x| rat(x as i128)).collect()).collect();
        let cartan_inv = mat_inv(&cartan_rat)?;
        let positive_roots = positive_closure(&cartan);
        let mut sys = FiniteRootSystem {
            ftype,
            rank,
            cartan,
            symmetrizer,
            cartan_inv,
            positive_roots,
            longest_word: Vec::new(),
            highest_root: Vec::new(),
            highest_short_root: Vec::new(),
        };
        sys.highest_root = sys.extreme_root(None)?;
        let min_norm = sys.positive_roots.iter().map(|b| sys.root_norm2(b)).min().unwrap();
        sys.highest_short_root = sys.extreme_root(Some(min_norm))?;
        let minus_rho: Vec<Rat> = vec![rat(-1); rank];
        let (rho, word) = sys.dominant_conjugate(&minus_rho);
        debug_assert!(rho.iter().all(|x| *x == rat(1)));
        assert_eq!(word.len(), sys.positive_roots.len(), "longest word has length #Φ+");
        sys.longest_word = word;
        Ok(sys)
    }

    /// The Cartan type.
    pub fn ftype(&self) -> FiniteType {
        self.ftype
    }

    /// The rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The Cartan matrix (`cartan[i][j] = ⟨α_j, α_i^∨⟩`).
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The symmetrizer `d_i` (short roots have `d_i = 1`).
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Exact inverse of the Cartan matrix.
    pub fn cartan_inv(&self) -> &[Vec<Rat>] {
        &self.cartan_inv
    }

    /// All positive roots in simple-root coordinates, by increasing height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// A reduced word for the longest element: `w_0 = s_{w[0]}·s_{w[1]}⋯`
    /// as a product of generators (leftmost letter acts last on weights).
    pub fn longest_word(&self) -> &[usize] {
        &self.longest_word
    }

    /// The highest root, in simple-root coordinates.
    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    /// The highest short root, in simple-root coordinates (equals the
    /// highest root in the simply-laced case).
    pub fn highest_short_root(&self) -> &[i64] {
        &self.highest_short_root
    }

    /// The Weyl vector `ρ` (all pairing coordinates 1).
    pub fn rho(&self) -> Vec<Rat> {
        vec![rat(1); self.rank]
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::InvalidIndex { index: i, rank: self.rank })
        }
    }

    fn check_weight_len(&self, mu: &[Rat]) -> Result<()> {
        if mu.len() == self.rank {
            Ok(())
        } else {
            Err(Error::InvalidWeight(format!(
                "expected {} coordinates, got {}",
                self.rank,
                mu.len()
            )))
        }
    }

    /// Apply the simple reflection `s_i` to a weight in pairing coordinates:
    /// `s_i(μ) = μ − μ_i·α_i`.
    pub fn simple_reflection(&self, i: usize, mu: &[Rat]) -> Result<Vec<Rat>> {
        self.check_index(i)?;
        self.check_weight_len(mu)?;
        Ok(self.reflect_unchecked(i, mu))
    }

    #[inline]
    fn reflect_unchecked(&self, i: usize, mu: &[Rat]) -> Vec<Rat> {
        let c = mu[i];
        mu.iter()
            .enumerate()
            .map(|(j, &x)| x - c * rat(self.cartan[j][i] as i128))
            .collect()
    }

    /// True if every pairing coordinate is nonnegative.
    pub fn is_dominant(&self, mu: &[Rat]) -> bool {
        mu.iter().all(|x| !x.is_negative())
    }

    /// True if the weight is dominant with integer coordinates.
    pub fn is_dominant_integral(&self, mu: &[Rat]) -> bool {
        self.is_dominant(mu) && mu.iter().all(|x| x.denom().is_one())
    }

    /// The dominant Weyl-conjugate of `μ` together with the reflection
    /// word that was applied: the returned word lists the reflections in
    /// the order they were applied to `μ` (index 0 first). At each step the
    /// smallest index with a strictly negative coordinate is used.
    pub fn dominant_conjugate(&self, mu: &[Rat]) -> (Vec<Rat>, Vec<usize>) {
        let mut v = mu.to_vec();
        let mut word = Vec::new();
        loop {
            match v.iter().position(|x| x.is_negative()) {
                None => return (v, word),
                Some(i) => {
                    v = self.reflect_unchecked(i, &v);
                    word.push(i);
                }
            }
        }
    }

    /// The antidominant conjugate (all coordinates `≤ 0`) and its word,
    /// mirror image of [`Self::dominant_conjugate`].
    pub fn antidominant_conjugate(&self, mu: &[Rat]) -> (Vec<Rat>, Vec<usize>) {
        let mut v = mu.to_vec();
        let mut word = Vec::new();
        loop {
            match v.iter().position(|x| x.is_positive()) {
                None => return (v, word),
                Some(i) => {
                    v = self.reflect_unchecked(i, &v);
                    word.push(i);
                }
            }
        }
    }

    /// `w_0(μ)` for arbitrary `μ` (computed via the antidominant conjugate
    /// when `μ` is dominant; general `μ` is first made dominant).
    pub fn w0_of(&self, mu: &[Rat]) -> Vec<Rat> {
        let (dom, _) = self.dominant_conjugate(mu);
        self.antidominant_conjugate(&dom).0
    }

    /// The full Weyl orbit of a weight.
    pub fn orbit(&self, mu: &[Rat]) -> BTreeSet<Vec<Rat>> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.to_vec());
        queue.push_back(mu.to_vec());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                let w = self.reflect_unchecked(i, &v);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Order of the Weyl group, computed as the orbit size of `ρ`.
    /// Exponential in rank; intended for small-rank cross-checks.
    pub fn weyl_order(&self) -> usize {
        self.orbit(&self.rho()).len()
    }

    /// Squared length of a root (simple-root coordinates), with short roots
    /// normalized to 2.
    pub fn root_norm2(&self, beta: &[i64]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += beta[i] * beta[j] * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `⟨μ, β^∨⟩ = 2(μ, β)/(β, β)` for a weight in pairing coordinates and a
    /// root in simple-root coordinates.
    pub fn coroot_pairing(&self, mu: &[Rat], beta: &[i64]) -> Rat {
        let mut num = Rat::zero();
        for (j, &c) in beta.iter().enumerate() {
            num += rat(c as i128) * rat(self.symmetrizer[j] as i128) * mu[j];
        }
        num * rat(2) / rat(self.root_norm2(beta) as i128)
    }

    /// Pairing coordinates of a root given in simple-root coordinates.
    pub fn root_in_weight_coords(&self, beta: &[i64]) -> Vec<Rat> {
        (0..self.rank)
            .map(|i| {
                rat(beta
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| self.cartan[i][j] * c)
                    .sum::<i64>() as i128)
            })
            .collect()
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_in_root_coords(&self, mu: &[Rat]) -> Vec<Rat> {
        crate::rat::mat_vec(&self.cartan_inv, mu)
    }

    /// Height of a weight: the coordinate sum in the simple-root basis.
    pub fn weight_height(&self, mu: &[Rat]) -> Rat {
        self.weight_in_root_coords(mu).into_iter().fold(Rat::zero(), |s, x| s + x)
    }

    /// Dimension of the irreducible module with dominant integral highest
    /// weight `λ`, by the Weyl dimension formula (exact big-integer
    /// arithmetic).
    pub fn weyl_dim(&self, lambda: &[Rat]) -> Result<u128> {
        self.check_weight_len(lambda)?;
        if !self.is_dominant_integral(lambda) {
            return Err(Error::InvalidHighestWeight(format!(
                "weight {:?} is not dominant integral",
                lambda.iter().map(crate::rat::fmt_rat).collect::<Vec<_>>()
            )));
        }
        let mut num = BigRational::one();
        for beta in &self.positive_roots {
            // ⟨λ+ρ, β^∨⟩ / ⟨ρ, β^∨⟩ — the norm factors cancel, so the
            // weighted coordinate sums can be used directly.
            let mut top = BigInt::zero();
            let mut bot = BigInt::zero();
            for (j, &c) in beta.iter().enumerate() {
                let w = BigInt::from(c * self.symmetrizer[j]);
                let lj = lambda[j];
                debug_assert!(lj.denom().is_one());
                top += &w * BigInt::from(*lj.numer() + 1);
                bot += w;
            }
            num *= BigRational::new(top, bot);
        }
        if !num.is_integer() {
            return Err(Error::Overflow("Weyl dimension did not reduce to an integer".into()));
        }
        let n = num.to_integer();
        u128::try_from(n.clone()).map_err(|_| Error::Overflow(format!("dimension {n} exceeds u128")))
    }

    /// Character of the irreducible module with highest weight `λ`, computed
    /// by applying the full Demazure word for `w_0` to `e^λ`.
    pub fn irr_char(&self, lambda: &[Rat]) -> Result<crate::characters::FormalCharacter> {
        self.check_weight_len(lambda)?;
        if !self.is_dominant_integral(lambda) {
            return Err(Error::InvalidHighestWeight(format!(
                "weight {:?} is not dominant integral",
                lambda.iter().map(crate::rat::fmt_rat).collect::<Vec<_>>()
            )));
        }
        let ch = crate::characters::FormalCharacter::monomial_finite(lambda);
        crate::demazure::demazure_apply_word_finite(self, &ch, &self.longest_word)
    }

    /// Orbit sum `Σ_{ν ∈ Wμ} e^ν` as a finite character (used by oracles
    /// and tests).
    pub fn orbit_sum(&self, mu: &[Rat]) -> crate::characters::FormalCharacter {
        let mut ch = crate::characters::FormalCharacter::zero_finite(self.rank);
        for v in self.orbit(mu) {
            ch.add_term_finite(&v, 1);
        }
        ch
    }

    /// The maximal-height root, optionally restricted to a norm class.
    fn extreme_root(&self, norm: Option<i64>) -> Result<Vec<i64>> {
        let best = self
            .positive_roots
            .iter()
            .filter(|b| norm.map_or(true, |n| self.root_norm2(b) == n))
            .max_by_key(|b| (b.iter().sum::<i64>(), (*b).clone()))
            .cloned()
            .ok_or_else(|| Error::UnsupportedType("empty root system".into()))?;
        // The extreme root must be dominant in pairing coordinates.
        let w = self.root_in_weight_coords(&best);
        if !self.is_dominant(&w) {
            return Err(Error::UnsupportedType(format!(
                "extreme root {best:?} of {} is not dominant",
                self.ftype.name()
            )));
        }
        Ok(best)
    }
}

// ---- Construction helpers ----

/// Symmetrizer of a (generalized) Cartan matrix: positive integers `d_i`
/// with `d_i·a[i][j] = d_j·a[j][i]`, normalized so each connected
/// component's minimum is 1.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        // Propagate over the connected component by BFS.
        d[start] = Some(rat(1));
        let mut queue = VecDeque::from([start]);
        let mut component = vec![start];
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i != j && a[i][j] != 0 {
                    let dj = d[i].unwrap() * rat(a[i][j] as i128) / rat(a[j][i] as i128);
                    match d[j] {
                        None => {
                            d[j] = Some(dj);
                            component.push(j);
                            queue.push_back(j);
                        }
                        Some(old) => {
                            if old != dj {
                                return Err(Error::UnsupportedType(
                                    "Cartan matrix is not symmetrizable".into(),
                                ));
                            }
                        }
                    }
                }
            }
        }
        // Normalize the component: all integral, minimum 1.
        let lcm = component
            .iter()
            .fold(1i128, |l, &j| num::integer::lcm(l, *d[j].unwrap().denom()));
        let vals: Vec<i128> =
            component.iter().map(|&j| (d[j].unwrap() * rat(lcm)).to_integer()).collect();
        let g = vals.iter().fold(0i128, |g, &x| num::integer::gcd(g, x));
        for (&j, &v) in component.iter().zip(&vals) {
            d[j] = Some(rat(v / g));
        }
    }
    d.into_iter()
        .map(|x| {
            let r = x.unwrap();
            debug_assert!(r.denom().is_one() && r.numer().is_positive());
            Ok(*r.numer() as i64)
        })
        .collect()
}

/// All positive roots of the finite system by reflection closure from the
/// simple roots, sorted by (height, coordinates).
fn positive_closure(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            // ⟨β, α_i^∨⟩ = Σ_j a[i][j]·β_j
            let p: i64 = (0..n).map(|j| a[i][j] * b[j]).sum();
            let mut r = b.clone();
            r[i] -= p;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> =
        seen.into_iter().filter(|b| b.iter().all(|&c| c >= 0)).collect();
    pos.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));
    pos
}

/// Dominant-weight multiplicity table shape used by oracles.
pub type DominantMults = BTreeMap<Vec<Rat>, i64>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn rs(t: FiniteType) -> FiniteRootSystem {
        FiniteRootSystem::new(t).unwrap()
    }

    fn w(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x as i128)).collect()
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            (FiniteType::A(1), 1),
            (FiniteType::A(2), 3),
            (FiniteType::A(4), 10),
            (FiniteType::B(2), 4),
            (FiniteType::B(3), 9),
            (FiniteType::C(3), 9),
            (FiniteType::C(4), 16),
            (FiniteType::D(3), 6),
            (FiniteType::D(4), 12),
            (FiniteType::G2, 6),
            (FiniteType::F4, 24),
            (FiniteType::E(6), 36),
            (FiniteType::E(7), 63),
        ];
        for (t, n) in cases {
            assert_eq!(rs(t).positive_roots().len(), n, "type {}", t.name());
        }
    }

    #[test]
    fn symmetrizers_have_short_roots_at_one() {
        assert_eq!(rs(FiniteType::B(3)).symmetrizer(), &[2, 2, 1]);
        assert_eq!(rs(FiniteType::C(3)).symmetrizer(), &[1, 1, 2]);
        assert_eq!(rs(FiniteType::F4).symmetrizer(), &[1, 1, 2, 2]);
        assert_eq!(rs(FiniteType::G2).symmetrizer(), &[3, 1]);
        assert_eq!(rs(FiniteType::A(3)).symmetrizer(), &[1, 1, 1]);
    }

    #[test]
    fn weyl_group_orders() {
        assert_eq!(rs(FiniteType::A(2)).weyl_order(), 6);
        assert_eq!(rs(FiniteType::B(2)).weyl_order(), 8);
        assert_eq!(rs(FiniteType::G2).weyl_order(), 12);
        assert_eq!(rs(FiniteType::B(3)).weyl_order(), 48);
        assert_eq!(rs(FiniteType::C(3)).weyl_order(), 48);
    }

    #[test]
    fn fundamental_dimensions() {
        let b3 = rs(FiniteType::B(3));
        assert_eq!(b3.weyl_dim(&w(&[1, 0, 0])).unwrap(), 7);
        assert_eq!(b3.weyl_dim(&w(&[0, 1, 0])).unwrap(), 21);
        assert_eq!(b3.weyl_dim(&w(&[0, 0, 1])).unwrap(), 8);
        let c3 = rs(FiniteType::C(3));
        assert_eq!(c3.weyl_dim(&w(&[1, 0, 0])).unwrap(), 6);
        assert_eq!(c3.weyl_dim(&w(&[0, 1, 0])).unwrap(), 14);
        assert_eq!(c3.weyl_dim(&w(&[0, 0, 1])).unwrap(), 14);
        let g2 = rs(FiniteType::G2);
        assert_eq!(g2.weyl_dim(&w(&[1, 0])).unwrap(), 14, "long-node fundamental is adjoint");
        assert_eq!(g2.weyl_dim(&w(&[0, 1])).unwrap(), 7, "short-node fundamental is 7-dim");
        let f4 = rs(FiniteType::F4);
        assert_eq!(f4.weyl_dim(&w(&[1, 0, 0, 0])).unwrap(), 26, "short end node");
        assert_eq!(f4.weyl_dim(&w(&[0, 0, 0, 1])).unwrap(), 52, "long end node is adjoint");
        let e6 = rs(FiniteType::E(6));
        assert_eq!(e6.weyl_dim(&w(&[1, 0, 0, 0, 0, 0])).unwrap(), 27);
        assert_eq!(e6.weyl_dim(&w(&[0, 1, 0, 0, 0, 0])).unwrap(), 78);
    }

    #[test]
    fn longest_word_sends_rho_to_minus_rho() {
        for t in [FiniteType::A(3), FiniteType::B(3), FiniteType::C(2), FiniteType::G2] {
            let s = rs(t);
            let mut v = s.rho();
            // Leftmost letter acts last.
            for &i in s.longest_word().iter().rev() {
                v = s.simple_reflection(i, &v).unwrap();
            }
            assert_eq!(v, vec![rat(-1); s.rank()], "type {}", t.name());
            assert_eq!(s.longest_word().len(), s.positive_roots().len());
        }
    }

    #[test]
    fn highest_roots() {
        let b3 = rs(FiniteType::B(3));
        assert_eq!(b3.highest_root(), &[1, 2, 2]);
        assert_eq!(b3.highest_short_root(), &[1, 1, 1]);
        let c3 = rs(FiniteType::C(3));
        assert_eq!(c3.highest_root(), &[2, 2, 1]);
        assert_eq!(c3.highest_short_root(), &[1, 2, 1]);
        let g2 = rs(FiniteType::G2);
        assert_eq!(g2.highest_root(), &[2, 3]);
        assert_eq!(g2.highest_short_root(), &[1, 2]);
        let a2 = rs(FiniteType::A(2));
        assert_eq!(a2.highest_root(), &[1, 1]);
        assert_eq!(a2.highest_short_root(), &[1, 1]);
    }

    #[test]
    fn dominant_conjugate_is_in_orbit_and_dominant() {
        let s = rs(FiniteType::B(2));
        let mu = vec![rat(-3), rat(2)];
        let (dom, word) = s.dominant_conjugate(&mu);
        assert!(s.is_dominant(&dom));
        let mut v = mu.clone();
        for &i in &word {
            v = s.simple_reflection(i, &v).unwrap();
        }
        assert_eq!(v, dom);
        assert!(s.orbit(&mu).contains(&dom));
    }

    #[test]
    fn reflection_convention_matches_cartan_columns() {
        // s_1(ω_1) = ω_1 − α_1, and α_1 in pairing coordinates is column 1.
        let s = rs(FiniteType::G2);
        let om1 = w(&[1, 0]);
        let r = s.simple_reflection(0, &om1).unwrap();
        // column 0 of [[2,-1],[-3,2]] is (2,-3): ω1 − α1 = (1-2, 0+3).
        assert_eq!(r, vec![rat(-1), rat(3)]);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(matches!(
            FiniteRootSystem::new(FiniteType::E(9)),
            Err(Error::UnsupportedType(_))
        ));
        let s = rs(FiniteType::A(2));
        assert!(matches!(
            s.simple_reflection(5, &w(&[1, 0])),
            Err(Error::InvalidIndex { .. })
        ));
        assert!(s.weyl_dim(&w(&[-1, 0])).is_err());
        assert!(s.weyl_dim(&[rat(1)]).is_err());
    }

    #[test]
    fn weight_root_coordinate_round_trip() {
        let s = rs(FiniteType::F4);
        let mu = w(&[1, 2, 0, 3]);
        let c = s.weight_in_root_coords(&mu);
        let back: Vec<Rat> = (0..4)
            .map(|i| {
                (0..4).map(|j| rat(s.cartan()[i][j] as i128) * c[j]).fold(rat(0), |a, b| a + b)
            })
            .collect();
        assert_eq!(back, mu);
    }
}
