//! Independent recomputation paths used to cross-validate the Demazure
//! pipeline.
//!
//! Three classical alternatives are implemented with entirely different
//! internals from the Demazure operators:
//!
//! * multiplicity computation by the Freudenthal recursion,
//! * the alternating Weyl-sum identity, checked multiplicatively
//!   (`χ·A(ρ) = A(λ+ρ)`, avoiding any division of formal sums),
//! * brute-force enumeration of affine Weyl group elements as integer
//!   matrices, for word-independence and length cross-checks at small rank.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num::{One, Signed, Zero};

use crate::affine::AffineData;
use crate::cartan::FiniteRootSystem;
use crate::characters::FormalCharacter;
use crate::error::{Error, Result};
use crate::rat::{rat, Rat};

// ---- Freudenthal recursion ----

/// Inner product of two weights in pairing coordinates (short roots at
/// norm 2).
fn weight_form(rs: &FiniteRootSystem, nu: &[Rat], xi: &[Rat]) -> Rat {
    let c = rs.weight_in_root_coords(xi);
    let mut s = Rat::zero();
    for j in 0..rs.rank() {
        s += c[j] * rat(rs.symmetrizer()[j] as i128) * nu[j];
    }
    s
}

/// All dominant weights `μ ≤ λ`, i.e. `λ − μ` a nonnegative integer
/// combination of simple roots.
fn dominant_weights_below(rs: &FiniteRootSystem, lambda: &[Rat]) -> Vec<Vec<Rat>> {
    let lo = rs.w0_of(lambda);
    // Box bound: coords(λ − μ) ≤ coords(λ − w0λ) componentwise.
    let diff: Vec<Rat> = lambda.iter().zip(&lo).map(|(a, b)| *a - *b).collect();
    let bound = rs.weight_in_root_coords(&diff);
    let caps: Vec<i128> = bound
        .iter()
        .map(|b| {
            debug_assert!(b.denom().is_one());
            *b.numer()
        })
        .collect();
    let mut out = Vec::new();
    let mut c = vec![0i128; rs.rank()];
    'outer: loop {
        // μ = λ − Σ c_i α_i.
        let mut mu = lambda.to_vec();
        for (i, &ci) in c.iter().enumerate() {
            for (m, row) in mu.iter_mut().zip(rs.cartan()) {
                *m -= rat(ci) * rat(row[i] as i128);
            }
        }
        if rs.is_dominant(&mu) {
            out.push(mu);
        }
        // Odometer increment over the box.
        for i in 0..rs.rank() {
            c[i] += 1;
            if c[i] <= caps[i] {
                continue 'outer;
            }
            c[i] = 0;
        }
        break;
    }
    out
}

/// Weight multiplicities of the irreducible module `V(λ)` on dominant
/// weights, by the Freudenthal recursion.
pub fn freudenthal_multiplicities(
    rs: &FiniteRootSystem,
    lambda: &[Rat],
) -> Result<BTreeMap<Vec<Rat>, i64>> {
    if !rs.is_dominant_integral(lambda) {
        return Err(Error::InvalidHighestWeight(format!("{lambda:?}")));
    }
    let rho = rs.rho();
    let lam_rho: Vec<Rat> = lambda.iter().zip(&rho).map(|(a, b)| *a + *b).collect();
    let norm_top = weight_form(rs, &lam_rho, &lam_rho);
    let mut doms = dominant_weights_below(rs, lambda);
    // Order by descending height so each multiplicity only needs higher ones.
    doms.sort_by(|a, b| {
        rs.weight_height(b)
            .cmp(&rs.weight_height(a))
            .then_with(|| b.cmp(a))
    });
    let mut mults: BTreeMap<Vec<Rat>, i64> = BTreeMap::new();
    let positive_roots: Vec<Vec<Rat>> = rs
        .positive_roots()
        .iter()
        .map(|beta| rs.root_in_weight_coords(beta))
        .collect();
    for mu in doms {
        if mu == lambda {
            mults.insert(mu, 1);
            continue;
        }
        let mu_rho: Vec<Rat> = mu.iter().zip(&rho).map(|(a, b)| *a + *b).collect();
        let denom = norm_top - weight_form(rs, &mu_rho, &mu_rho);
        debug_assert!(!denom.is_zero(), "denominator vanishes only at λ itself");
        let mut acc = Rat::zero();
        for beta_w in &positive_roots {
            let mut k = 1i128;
            loop {
                // ν = μ + k·β; the β-string through μ is contiguous, so the
                // first multiplicity-free point ends the sum.
                let nu: Vec<Rat> =
                    mu.iter().zip(beta_w).map(|(m, b)| *m + rat(k) * *b).collect();
                let (dom, _) = rs.dominant_conjugate(&nu);
                let m = match mults.get(&dom) {
                    Some(&m) => m,
                    None => break,
                };
                acc += weight_form(rs, &nu, beta_w) * rat(m as i128);
                k += 1;
            }
        }
        let m_mu = rat(2) * acc / denom;
        if !m_mu.denom().is_one() {
            return Err(Error::Overflow("non-integral Freudenthal multiplicity".into()));
        }
        mults.insert(mu, *m_mu.numer() as i64);
    }
    // Drop zero multiplicities (dominant weights below λ outside the
    // support, possible in non-simply-laced types).
    mults.retain(|_, m| *m != 0);
    Ok(mults)
}

/// Full character of `V(λ)` by Freudenthal multiplicities and Weyl-orbit
/// expansion — an implementation entirely independent of the Demazure
/// operators.
pub fn freudenthal_char(rs: &FiniteRootSystem, lambda: &[Rat]) -> Result<FormalCharacter> {
    let mults = freudenthal_multiplicities(rs, lambda)?;
    let mut ch = FormalCharacter::zero_finite(rs.rank());
    for (mu, m) in mults {
        for v in rs.orbit(&mu) {
            ch.add_term_finite(&v, m);
        }
    }
    Ok(ch)
}

// ---- Alternating Weyl sums ----

/// The signed orbit sum `Σ_w (−1)^{ℓ(w)} e^{w(μ)}` for strictly dominant
/// `μ` (so that the orbit is free and BFS depth equals length).
pub fn signed_orbit(rs: &FiniteRootSystem, mu: &[Rat]) -> Result<FormalCharacter> {
    if !mu.iter().all(|x| x.is_positive()) {
        return Err(Error::InvalidWeight(
            "signed orbits need a strictly dominant weight".into(),
        ));
    }
    let mut ch = FormalCharacter::zero_finite(rs.rank());
    let mut seen: BTreeMap<Vec<Rat>, ()> = BTreeMap::new();
    let mut queue: VecDeque<(Vec<Rat>, i64)> = VecDeque::new();
    seen.insert(mu.to_vec(), ());
    queue.push_back((mu.to_vec(), 1));
    while let Some((v, sign)) = queue.pop_front() {
        ch.add_term_finite(&v, sign);
        for i in 0..rs.rank() {
            let w = rs.simple_reflection(i, &v)?;
            if !seen.contains_key(&w) {
                seen.insert(w.clone(), ());
                queue.push_back((w, -sign));
            }
        }
    }
    Ok(ch)
}

/// Verify `χ·A(ρ) = A(λ+ρ)` — the alternating-sum characterization of the
/// irreducible character, checked by cross-multiplication.
pub fn weyl_character_check(
    rs: &FiniteRootSystem,
    lambda: &[Rat],
    chi: &FormalCharacter,
) -> Result<bool> {
    let rho = rs.rho();
    let lam_rho: Vec<Rat> = lambda.iter().zip(&rho).map(|(a, b)| *a + *b).collect();
    let lhs = chi.multiply(&signed_orbit(rs, &rho)?)?;
    let rhs = signed_orbit(rs, &lam_rho)?;
    Ok(lhs == rhs)
}

// ---- Brute-force affine Weyl group enumeration ----

/// All affine Weyl group elements of length ≤ `max_len` as root-coordinate
/// matrices, together with their lengths. Exponential in `max_len`; meant
/// for small-rank cross-checks.
pub fn enumerate_elements(
    data: &AffineData,
    max_len: usize,
) -> Result<Vec<(Vec<Vec<i64>>, usize)>> {
    let id = data.word_matrix(&[])?;
    let mut seen: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
    seen.insert(id.clone(), 0);
    let mut frontier = vec![id];
    let mut out: Vec<(Vec<Vec<i64>>, usize)> = Vec::new();
    out.push((frontier[0].clone(), 0));
    for len in 1..=max_len {
        let mut next = Vec::new();
        for m in &frontier {
            for i in 0..data.num_nodes() {
                let mut word_m = m.clone();
                // Right-multiply by s_i via the word machinery: rebuild from
                // matrix product.
                let si = data.word_matrix(&[i])?;
                word_m = mat_mul_i64(&word_m, &si);
                if !seen.contains_key(&word_m) {
                    seen.insert(word_m.clone(), len);
                    out.push((word_m.clone(), len));
                    next.push(word_m);
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0;
            for t in 0..n {
                s += a[i][t] * b[t][j];
            }
            out[i][j] = s;
        }
    }
    out
}

/// All words of the given length whose product equals the target matrix
/// (such words are exactly the reduced expressions when `len` is the
/// element's length).
pub fn words_for_element(
    data: &AffineData,
    target: &[Vec<i64>],
    len: usize,
) -> Result<Vec<Vec<usize>>> {
    let nodes = data.num_nodes();
    let mut found = Vec::new();
    let mut word = vec![0usize; len];
    loop {
        let m = data.word_matrix(&word)?;
        if m == target {
            found.push(word.clone());
        }
        // Odometer over node alphabet.
        let mut pos = 0;
        loop {
            if pos == len {
                return Ok(found);
            }
            word[pos] += 1;
            if word[pos] < nodes {
                break;
            }
            word[pos] = 0;
            pos += 1;
        }
        if len == 0 {
            return Ok(found);
        }
    }
}

/// Positive real roots (as root-coordinate vectors) whose δ-degree is at
/// most `height`: the orbit of the simple roots under the reflection
/// action, truncated by δ-degree.
pub fn positive_real_roots(data: &AffineData, height: i64) -> Result<Vec<Vec<i64>>> {
    let n = data.num_nodes();
    let a0 = data.marks()[0];
    let delta_deg = |v: &[i64]| -> i64 { v[0] / a0 };
    let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone(), ());
        queue.push_back(e);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            // s_i(β) = β − (Σ_j cartan[i][j] β_j)·α_i.
            let p: i64 = (0..n).map(|j| data.cartan()[i][j] * v[j]).sum();
            let mut w = v.clone();
            w[i] -= p;
            if delta_deg(&w).abs() > height + 1 {
                continue;
            }
            if !seen.contains_key(&w) {
                seen.insert(w.clone(), ());
                queue.push_back(w);
            }
        }
    }
    Ok(seen
        .into_keys()
        .filter(|v| v.iter().all(|&x| x >= 0) && delta_deg(v) <= height)
        .collect())
}

/// Inversion count of an element (given as a root-coordinate matrix) over
/// a truncated positive root list — equals the length when the truncation
/// height covers every inversion.
pub fn inversion_count(matrix: &[Vec<i64>], roots: &[Vec<i64>]) -> usize {
    roots
        .iter()
        .filter(|beta| {
            let img: Vec<i64> = (0..matrix.len())
                .map(|i| (0..matrix.len()).map(|j| matrix[i][j] * beta[j]).sum())
                .collect();
            img.iter().all(|&x| x <= 0) && img.iter().any(|&x| x != 0)
        })
        .count()
}
