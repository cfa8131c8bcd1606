//! Named verification checks: frozen reference values and structural
//! property suites, shared by the CLI `verify` subcommand and the
//! integration tests.
//!
//! Every check is deterministic: reference checks freeze independently
//! known dimensions, decompositions, and character identities; property
//! checks sweep fixed grids or use fixed-seed randomness. Check order is
//! fixed by the registry, never by completion order.

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::affine::{AffineData, AffineFamily};
use crate::cartan::{FiniteRootSystem, FiniteType};
use crate::characters::FormalCharacter;
use crate::demazure::{
    demazure_apply_word, demazure_apply_word_finite, demazure_char, demazure_d, demazure_op,
    is_in_x, DemazureResult,
};
use crate::oracles;
use crate::rat::{rat, ratq, Rat};
use crate::weyl::{
    fundamental_table, fundamental_table_uncached, verify_short_node_factorization,
    verify_tensor_property, weyl_char, weyl_dim_product,
};

// ---- Registry ----

/// Which set of checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Frozen reference values (dimensions, decompositions, identities).
    Reference,
    /// Structural property sweeps.
    Properties,
    /// Both suites.
    All,
}

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    /// Stable check name.
    pub name: &'static str,
    /// Whether the check passed.
    pub passed: bool,
    /// Human-readable summary (counts, dimensions) or failure reason.
    pub detail: String,
}

type CheckResult = std::result::Result<String, String>;

struct Check {
    name: &'static str,
    suite: Suite,
    run: fn() -> CheckResult,
}

const CHECKS: &[Check] = &[
    Check { name: "fundamental-dimensions-e6-2", suite: Suite::Reference, run: check_dims_e6_2 },
    Check { name: "fundamental-dimensions-d4-3", suite: Suite::Reference, run: check_dims_d4_3 },
    Check { name: "fundamental-dimensions-a4-2", suite: Suite::Reference, run: check_dims_a4_2 },
    Check { name: "fundamental-dimensions-a5-2", suite: Suite::Reference, run: check_dims_a5_2 },
    Check { name: "fundamental-dimensions-d4-2", suite: Suite::Reference, run: check_dims_d4_2 },
    Check {
        name: "fundamental-decompositions-d4-3",
        suite: Suite::Reference,
        run: check_decomps_d4_3,
    },
    Check {
        name: "fundamental-decompositions-e6-2",
        suite: Suite::Reference,
        run: check_decomps_e6_2,
    },
    Check {
        name: "fundamental-decompositions-a4-2",
        suite: Suite::Reference,
        run: check_decomps_a4_2,
    },
    Check {
        name: "fundamental-decompositions-a5-2",
        suite: Suite::Reference,
        run: check_decomps_a5_2,
    },
    Check {
        name: "fundamental-decompositions-d4-2",
        suite: Suite::Reference,
        run: check_decomps_d4_2,
    },
    Check {
        name: "translation-operator-identity-d4-3",
        suite: Suite::Reference,
        run: check_translation_identity_d4_3,
    },
    Check { name: "quadruple-bond-series", suite: Suite::Reference, run: check_series_a2_2 },
    Check { name: "product-dimension-law", suite: Suite::Reference, run: check_product_law },
    Check { name: "tensor-factorization", suite: Suite::Reference, run: check_tensor_samples },
    Check { name: "untwisted-sl2-series", suite: Suite::Reference, run: check_untwisted_a1 },
    Check { name: "x-membership", suite: Suite::Reference, run: check_x_membership },
    Check {
        name: "operator-idempotence",
        suite: Suite::Properties,
        run: check_idempotence,
    },
    Check {
        name: "reduced-word-independence",
        suite: Suite::Properties,
        run: check_word_independence,
    },
    Check {
        name: "translation-composition",
        suite: Suite::Properties,
        run: check_translation_composition,
    },
    Check { name: "level-invariance", suite: Suite::Properties, run: check_level_invariance },
    Check {
        name: "character-oracle-agreement",
        suite: Suite::Properties,
        run: check_oracle_agreement,
    },
    Check { name: "word-monotonicity", suite: Suite::Properties, run: check_monotonicity },
    Check {
        name: "restriction-reflection-invariance",
        suite: Suite::Properties,
        run: check_w0_invariance,
    },
    Check {
        name: "decomposition-positivity",
        suite: Suite::Properties,
        run: check_decomposition_positivity,
    },
];

/// Names of all checks in the given suite, in execution order.
pub fn check_names(suite: Suite) -> Vec<&'static str> {
    CHECKS
        .iter()
        .filter(|c| suite == Suite::All || c.suite == suite)
        .map(|c| c.name)
        .collect()
}

/// Run one suite; outcomes appear in registry order.
pub fn run_suite(suite: Suite) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .filter(|c| suite == Suite::All || c.suite == suite)
        .map(|c| match (c.run)() {
            Ok(detail) => CheckOutcome { name: c.name, passed: true, detail },
            Err(detail) => CheckOutcome { name: c.name, passed: false, detail },
        })
        .collect()
}

/// Run a single check by name (used by the acceptance tests).
pub fn run_check(name: &str) -> Option<CheckOutcome> {
    CHECKS.iter().find(|c| c.name == name).map(|c| match (c.run)() {
        Ok(detail) => CheckOutcome { name: c.name, passed: true, detail },
        Err(detail) => CheckOutcome { name: c.name, passed: false, detail },
    })
}

// ---- Shared helpers ----

fn er(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn aff(name: &str) -> std::result::Result<AffineData, String> {
    AffineData::parse(name).map_err(er)
}

fn w(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x as i128)).collect()
}

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn table_dims(name: &str) -> std::result::Result<Vec<u128>, String> {
    let data = aff(name)?;
    let rows = fundamental_table_uncached(&data).map_err(er)?;
    Ok(rows.iter().map(|r| r.dimension).collect())
}

fn expect_decomposition(
    data: &AffineData,
    lambda: &[Rat],
    expected: &[(&[i64], i64)],
) -> std::result::Result<(), String> {
    let report = weyl_char(data, lambda).map_err(er)?;
    let actual = report.decompose(data).map_err(er)?;
    let expected_pairs: Vec<(Vec<Rat>, i64)> =
        expected.iter().map(|(mu, m)| (w(mu), *m)).collect();
    let expected =
        crate::characters::IrrDecomposition::from_pairs(&expected_pairs).map_err(er)?;
    ensure(
        actual == expected,
        format!(
            "{} W({:?}): decomposition {:?} differs from expected {:?}",
            data.name(),
            lambda,
            actual.parts(),
            expected.parts()
        ),
    )
}

/// Deterministic sample of modules reused by several property checks:
/// a small spread of types, levels, and weights.
fn sample_modules() -> std::result::Result<Vec<(AffineData, DemazureResult)>, String> {
    let cases: &[(&str, Rat, &[i64])] = &[
        ("A2(2)", ratq(1, 2), &[1]),
        ("A2(2)", ratq(3, 2), &[3]),
        ("A4(2)", ratq(1, 2), &[1, 1]),
        ("A4(2)", rat(1), &[2, 0]),
        ("A5(2)", rat(1), &[1, 0, 1]),
        ("D4(2)", rat(1), &[0, 1, 0]),
        ("D4(2)", rat(2), &[1, 0, 1]),
        ("D4(3)", rat(1), &[1, 0]),
        ("D4(3)", rat(2), &[0, 1]),
        ("E6(2)", rat(1), &[0, 0, 0, 1]),
        ("A1(1)", rat(1), &[2]),
        ("A1(1)", rat(2), &[3]),
        ("C2(1)", rat(1), &[1, 1]),
        ("B3(1)", rat(1), &[0, 0, 1]),
        ("G2(1)", rat(1), &[0, 1]),
    ];
    let mut out = Vec::new();
    for (name, k, lam) in cases {
        let data = aff(name)?;
        let res = demazure_d(&data, *k, &w(lam)).map_err(er)?;
        out.push((data, res));
    }
    Ok(out)
}

// ---- Reference checks: dimensions ----

fn check_dims_fixed(name: &str, expected: &[u128]) -> CheckResult {
    let dims = table_dims(name)?;
    ensure(
        dims == expected,
        format!("{name} fundamental dimensions {dims:?} != expected {expected:?}"),
    )?;
    Ok(format!("{name}: {dims:?}"))
}

fn check_dims_e6_2() -> CheckResult {
    check_dims_fixed("E6(2)", &[27, 378, 3732, 79])
}

fn check_dims_d4_3() -> CheckResult {
    check_dims_fixed("D4(3)", &[29, 8])
}

fn check_dims_a4_2() -> CheckResult {
    // Rows: ω₁ (C(5,1)), ω₂ (the honest short-node module, 2²), 2ω₂
    // (C(5,2)); the doubled-family dimension tuple reads off the scaled
    // rows (ω₁, 2ω₂) = (5, 10).
    let dims = table_dims("A4(2)")?;
    ensure(dims == [5, 4, 10], format!("A4(2) table dims {dims:?} != [5, 4, 10]"))?;
    Ok("A4(2): rows (ω1, ω2, 2ω2) = (5, 4, 10); scaled tuple (5, 10)".into())
}

fn check_dims_a5_2() -> CheckResult {
    let dims = table_dims("A5(2)")?;
    let binom = |n: u128, k: u128| -> u128 {
        (1..=k).fold(1u128, |acc, j| acc * (n - j + 1) / j)
    };
    let expected: Vec<u128> = (1..=3).map(|i| binom(6, i)).collect();
    ensure(
        dims == expected,
        format!("A5(2) dims {dims:?} != C(6,i) = {expected:?}"),
    )?;
    Ok(format!("A5(2): {dims:?} = C(6,i)"))
}

fn check_dims_d4_2() -> CheckResult {
    let dims = table_dims("D4(2)")?;
    let binom = |n: u128, k: u128| -> u128 {
        (1..=k).fold(1u128, |acc, j| acc * (n - j + 1) / j)
    };
    // ω_i ↦ 1 + Σ_{j≤i} C(7,j) for i < 3; ω₃ ↦ 2³.
    let expected = vec![1 + binom(7, 1), 1 + binom(7, 1) + binom(7, 2), 8];
    ensure(dims == expected, format!("D4(2) dims {dims:?} != {expected:?}"))?;
    Ok(format!("D4(2): {dims:?}"))
}

// ---- Reference checks: decompositions ----

fn check_decomps_d4_3() -> CheckResult {
    let data = aff("D4(3)")?;
    expect_decomposition(&data, &w(&[1, 0]), &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 2)])?;
    expect_decomposition(&data, &w(&[0, 1]), &[(&[0, 0], 1), (&[0, 1], 1)])?;
    Ok("W(ω1) = V(0)+V(ω1)+2V(ω2); W(ω2) = V(0)+V(ω2)".into())
}

fn check_decomps_e6_2() -> CheckResult {
    let data = aff("E6(2)")?;
    expect_decomposition(&data, &w(&[1, 0, 0, 0]), &[(&[0, 0, 0, 0], 1), (&[1, 0, 0, 0], 1)])?;
    expect_decomposition(
        &data,
        &w(&[0, 1, 0, 0]),
        &[
            (&[0, 0, 0, 0], 1),
            (&[1, 0, 0, 0], 2),
            (&[0, 1, 0, 0], 1),
            (&[0, 0, 0, 1], 1),
        ],
    )?;
    expect_decomposition(
        &data,
        &w(&[0, 0, 1, 0]),
        &[
            (&[0, 0, 0, 0], 2),
            (&[1, 0, 0, 0], 4),
            (&[0, 1, 0, 0], 3),
            (&[0, 0, 0, 1], 3),
            (&[2, 0, 0, 0], 1),
            (&[1, 0, 0, 1], 1),
            (&[0, 0, 1, 0], 1),
        ],
    )?;
    expect_decomposition(
        &data,
        &w(&[0, 0, 0, 1]),
        &[(&[0, 0, 0, 0], 1), (&[1, 0, 0, 0], 1), (&[0, 0, 0, 1], 1)],
    )?;
    Ok("all four nodes, including the 15-summand W(ω3)".into())
}

fn check_decomps_a4_2() -> CheckResult {
    let data = aff("A4(2)")?;
    // The even-coefficient rows (ω₁ and 2ω₂) have no honest Demazure
    // realization at the distinguished level, so their decompositions are
    // read from the fundamental table; the odd row ω₂ is computed honestly
    // and cross-checked through the usual path.
    let table = fundamental_table(&data).map_err(er)?;
    let expected: &[(&[i64], &[(&[i64], i64)])] = &[
        (&[1, 0], &[(&[1, 0], 1)]),
        (&[0, 1], &[(&[0, 1], 1)]),
        (&[0, 2], &[(&[0, 2], 1)]),
    ];
    for (weight, parts) in expected {
        let weight = w(weight);
        let row = table
            .iter()
            .find(|r| r.weight == weight)
            .ok_or_else(|| format!("A4(2): no table row for {weight:?}"))?;
        let pairs: Vec<(Vec<Rat>, i64)> = parts.iter().map(|(mu, m)| (w(mu), *m)).collect();
        let want = crate::characters::IrrDecomposition::from_pairs(&pairs).map_err(er)?;
        ensure(
            row.decomposition == want,
            format!("A4(2) W({weight:?}): table row decomposition differs"),
        )?;
    }
    expect_decomposition(&data, &w(&[0, 1]), &[(&[0, 1], 1)])?;
    Ok("W(ω_i) and W(2ω_2) all irreducible".into())
}

fn check_decomps_a5_2() -> CheckResult {
    let data = aff("A5(2)")?;
    expect_decomposition(&data, &w(&[1, 0, 0]), &[(&[1, 0, 0], 1)])?;
    expect_decomposition(&data, &w(&[0, 1, 0]), &[(&[0, 0, 0], 1), (&[0, 1, 0], 1)])?;
    expect_decomposition(&data, &w(&[0, 0, 1]), &[(&[1, 0, 0], 1), (&[0, 0, 1], 1)])?;
    Ok("W(ω_i) = V(ω_i)⊕V(ω_{i−2})⊕⋯".into())
}

fn check_decomps_d4_2() -> CheckResult {
    let data = aff("D4(2)")?;
    expect_decomposition(&data, &w(&[1, 0, 0]), &[(&[0, 0, 0], 1), (&[1, 0, 0], 1)])?;
    expect_decomposition(
        &data,
        &w(&[0, 1, 0]),
        &[(&[0, 0, 0], 1), (&[1, 0, 0], 1), (&[0, 1, 0], 1)],
    )?;
    expect_decomposition(&data, &w(&[0, 0, 1]), &[(&[0, 0, 1], 1)])?;
    Ok("W(ω_i) = ⊕_{j≤i} V(ω_j) for i < l; W(ω_l) irreducible".into())
}

// ---- Reference checks: operator identity ----

fn check_translation_identity_d4_3() -> CheckResult {
    let data = aff("D4(3)")?;
    let g0 = data.g0();
    // Left side: the Demazure character over the reduced word of the
    // translation by −ω₁, applied to e^{Λ₀}, restricted.
    let word = data.reduced_word(&[], &w(&[-1, 0])).map_err(er)?;
    let lambda0 = data.fundamental(0).map_err(er)?;
    let lhs = demazure_char(&data, &lambda0, &word)
        .map_err(er)?
        .restrict_to_g0()
        .map_err(er)?;
    // Right side: D_{w₀}(e⁰ + 2e^{ω₂} + e^{ω₁}) in finite G₂.
    let mut seed = FormalCharacter::zero_finite(2);
    seed.add_term_finite(&w(&[0, 0]), 1);
    seed.add_term_finite(&w(&[0, 1]), 2);
    seed.add_term_finite(&w(&[1, 0]), 1);
    let rhs = demazure_apply_word_finite(g0, &seed, g0.longest_word()).map_err(er)?;
    ensure(lhs == rhs, "restricted translation character differs from D_{w0} image")?;
    ensure(
        lhs.dimension() == 29,
        format!("identity dimension {} != 29", lhs.dimension()),
    )?;
    // The textbook factorized expression (longest word then the affine
    // suffix) is a different group element that agrees on Λ₀.  The longest
    // word uses finite node labels; shift them to affine labels first.
    let mut alt: Vec<usize> = g0.longest_word().iter().map(|&i| i + 1).collect();
    alt.extend_from_slice(&[0, 2, 1, 2, 0]);
    let left = data.apply_word_to_weight(&alt, &lambda0).map_err(er)?;
    let right = data.apply_word_to_weight(&word, &lambda0).map_err(er)?;
    ensure(left == right, "factorized expression acts differently on Λ₀")?;
    Ok(format!("identity holds, dimension 29, word length {}", word.len()))
}

// ---- Reference checks: series ----

fn check_series_a2_2() -> CheckResult {
    let data = aff("A2(2)")?;
    let mut dims = Vec::new();
    for (n, expected) in [(1i64, 2u128), (3, 6), (5, 18), (7, 54)] {
        let rep = weyl_char(&data, &w(&[n])).map_err(er)?;
        let dim = rep.dimension();
        ensure(dim == expected, format!("dim W({n}ω) = {dim}, expected {expected}"))?;
        let product = weyl_dim_product(&data, &w(&[n])).map_err(er)?;
        ensure(product == expected, format!("product form at n={n} gives {product}"))?;
        // The closed form the computation matches: 3^{(n−1)/2}·2.
        let closed = 3u128.pow(((n - 1) / 2) as u32) * 2;
        ensure(closed == dim, format!("3^((n-1)/2)*2 = {closed} != {dim}"))?;
        dims.push(dim);
    }
    let rep1 = weyl_char(&data, &w(&[1])).map_err(er)?;
    let dec = rep1.decompose(&data).map_err(er)?;
    ensure(
        dec.parts().len() == 1 && dec.mult(&w(&[1])) == 1,
        "W(ω) must decompose as {ω:1}",
    )?;
    Ok(format!(
        "dims {dims:?} match 3^((n-1)/2)*2, not the larger in-proof constant 3^(ceil(n/2))*2"
    ))
}

fn check_untwisted_a1() -> CheckResult {
    let data = aff("A1(1)")?;
    for n in 0..=8i64 {
        let res = demazure_d(&data, rat(1), &w(&[n])).map_err(er)?;
        let dim = res.dimension();
        ensure(
            dim == 1u128 << n,
            format!("dim D(1,{n}ω) = {dim}, expected 2^{n}"),
        )?;
    }
    // D(1, 2ω) restricted = char V(2ω) + char V(0); the degree-0 graded
    // piece is exactly char V(2ω).
    let res = demazure_d(&data, rat(1), &w(&[2])).map_err(er)?;
    let g0 = data.g0();
    let v2 = g0.irr_char(&w(&[2])).map_err(er)?;
    let v0 = g0.irr_char(&w(&[0])).map_err(er)?;
    ensure(
        res.restricted() == v2.add(&v0).map_err(er)?,
        "restricted D(1,2ω) != char V(2ω) + char V(0)",
    )?;
    let graded = res.graded();
    let bucket0 = graded.buckets().get(&Rat::zero()).ok_or("missing degree-0 bucket")?;
    ensure(bucket0 == &v2, "degree-0 bucket of D(1,2ω) != char V(2ω)")?;
    ensure(graded.buckets().len() == 2, "D(1,2ω) must have exactly two graded pieces")?;
    Ok("dim D(1,nω) = 2^n for n ≤ 8; graded pieces of D(1,2ω) are V(2ω), V(0)·q".into())
}

// ---- Reference checks: product law sweep ----

fn grid_weights(l: usize, short_node_odd: bool) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut m = vec![0i64; l];
    loop {
        let ok = !short_node_odd || m[l - 1] % 2 == 1;
        if ok {
            out.push(m.clone());
        }
        let mut pos = 0;
        loop {
            if pos == l {
                return out;
            }
            m[pos] += 1;
            if m[pos] <= 2 {
                break;
            }
            m[pos] = 0;
            pos += 1;
        }
    }
}

fn check_product_law() -> CheckResult {
    // Every twisted family at rank ≤ 3, plus the simply-laced untwisted
    // types where the same factorization theorem applies.  Untwisted
    // non-simply-laced types are excluded: there the level-one Demazure
    // module is strictly smaller than the local Weyl module (e.g. C2(1),
    // λ = 2ω₁: dimension 11 vs. 4²), so no product law is claimed.
    let types: &[&str] = &[
        "A2(2)",
        "A4(2)",
        "A6(2)",
        "A3(2)",
        "A5(2)",
        "D4(2)",
        "D4(3)",
        "A1(1)",
        "A2(1)",
        "A3(1)",
    ];
    let mut count = 0usize;
    let mut max_dim = 0u128;
    for name in types {
        let data = aff(name)?;
        let odd = matches!(
            data.family(),
            AffineFamily::TwistedA2 | AffineFamily::TwistedAEven
        );
        for m in grid_weights(data.rank(), odd) {
            let lam = w(&m);
            let rep = weyl_char(&data, &lam).map_err(er)?;
            let direct = rep.dimension();
            let product = weyl_dim_product(&data, &lam).map_err(er)?;
            ensure(
                direct == product,
                format!("{name} λ={m:?}: direct {direct} != product {product}"),
            )?;
            // Graded consistency: the top (degree-0) piece is the
            // irreducible character of λ.
            let graded = rep.graded();
            let bucket0 = graded
                .buckets()
                .get(&Rat::zero())
                .ok_or(format!("{name} λ={m:?}: no degree-0 piece"))?;
            let irr = data.g0().irr_char(&lam).map_err(er)?;
            ensure(
                bucket0 == &irr,
                format!("{name} λ={m:?}: degree-0 piece is not char V(λ)"),
            )?;
            count += 1;
            max_dim = max_dim.max(direct);
        }
    }
    Ok(format!("{count} weights across {} types, max dimension {max_dim}", types.len()))
}

// ---- Reference checks: tensor factorization ----

/// Closed-form size estimate used only to keep sample sweeps tractable.
fn estimate_dim(data: &AffineData, lambda: &[i64]) -> std::result::Result<u128, String> {
    let rows = crate::weyl::fundamental_table(data).map_err(er)?;
    let l = data.rank();
    let doubled = matches!(
        data.family(),
        AffineFamily::TwistedA2 | AffineFamily::TwistedAEven
    );
    let mut dim: u128 = 1;
    for i in 1..=l {
        let m = lambda[i - 1] as u32;
        if m == 0 {
            continue;
        }
        if doubled && i == l {
            // Rows: ω_1..ω_{l−1}, ω_l, 2ω_l.
            let pairs = m / 2;
            dim = dim
                .checked_mul(rows[l].dimension.checked_pow(pairs).ok_or("overflow")?)
                .ok_or("overflow")?;
            if m % 2 == 1 {
                dim = dim.checked_mul(rows[l - 1].dimension).ok_or("overflow")?;
            }
        } else {
            dim = dim
                .checked_mul(rows[i - 1].dimension.checked_pow(m).ok_or("overflow")?)
                .ok_or("overflow")?;
        }
    }
    Ok(dim)
}

/// ν-image of a dominant coweight with the given coefficients, as integer
/// weight coordinates; `None` when the image is not integral.
fn nu_image(data: &AffineData, c: &[i64]) -> std::result::Result<Option<Vec<i64>>, String> {
    let img = data.nu_coweight(c).map_err(er)?;
    let mut out = Vec::with_capacity(img.len());
    for x in &img {
        if !x.denom().is_one() {
            return Ok(None);
        }
        out.push(*x.numer() as i64);
    }
    Ok(Some(out))
}

fn coweight_candidates(l: usize) -> Vec<Vec<i64>> {
    // Per-coordinate caps sized so every type keeps at least twenty
    // admissible sample pairs after the integrality filter (the cubic type
    // needs coefficient 3 at its long node before the image is integral).
    let cap: i64 = match l {
        1 => 9,
        2 => 3,
        _ => 2,
    };
    let mut out = Vec::new();
    let mut c = vec![0i64; l];
    loop {
        if c.iter().any(|&x| x > 0) {
            out.push(c.clone());
        }
        let mut pos = 0;
        loop {
            if pos == l {
                out.sort();
                return out;
            }
            c[pos] += 1;
            if c[pos] <= cap {
                break;
            }
            c[pos] = 0;
            pos += 1;
        }
    }
}

const TENSOR_DIM_CAP: u128 = 400_000;

/// Size proxy for ordering tensor samples cheapest-first; estimates that
/// overflow sort to the back and are never selected.
fn sample_cost(data: &AffineData, lambda: &[i64]) -> u128 {
    estimate_dim(data, lambda).unwrap_or(u128::MAX)
}

fn check_tensor_samples() -> CheckResult {
    let types: &[&str] = &[
        "A2(2)",
        "A4(2)",
        "A6(2)",
        "A3(2)",
        "A5(2)",
        "D4(2)",
        "E6(2)",
        "D4(3)",
        "A1(1)",
        "C2(1)",
    ];
    let target_per_type = 20usize;
    let mut details = Vec::new();
    for name in types {
        let data = aff(name)?;
        let doubled = matches!(
            data.family(),
            AffineFamily::TwistedA2 | AffineFamily::TwistedAEven
        );
        let candidates = coweight_candidates(data.rank());
        // Admissible sample pool: (cost, k, λ1, λ2) for deduplicated
        // integral coweight images whose three membership conditions hold.
        // The pool is sorted by the closed-form size estimate and the
        // twenty cheapest get verified, so the sweep stays fast while the
        // sample set is still fixed and deterministic.
        let mut pool: Vec<(u128, i128, Vec<i64>, Vec<i64>)> = Vec::new();
        for k_int in [1i128, 2] {
            let k = rat(k_int);
            let m = k * rat(data.comarks()[0] as i128);
            debug_assert!(m.denom().is_one());
            let mm = *m.numer() as i64;
            let mut images: Vec<Vec<i64>> = Vec::new();
            for c in &candidates {
                if let Some(img) = nu_image(&data, c)? {
                    if !images.contains(&img) {
                        images.push(img);
                    }
                }
            }
            for (a, img1) in images.iter().enumerate() {
                for img2 in images.iter().skip(a) {
                    let l1: Vec<i64> = img1.iter().map(|x| x * mm).collect();
                    let l2: Vec<i64> = img2.iter().map(|x| x * mm).collect();
                    let sum: Vec<i64> = l1.iter().zip(&l2).map(|(x, y)| x + y).collect();
                    if !is_in_x(&data, &w(&l1), k).map_err(er)?
                        || !is_in_x(&data, &w(&l2), k).map_err(er)?
                        || !is_in_x(&data, &w(&sum), k).map_err(er)?
                    {
                        continue;
                    }
                    pool.push((sample_cost(&data, &sum), k_int, l1, l2));
                }
            }
        }
        pool.sort();
        ensure(
            pool.len() >= target_per_type,
            format!("{name}: only {} admissible tensor samples exist", pool.len()),
        )?;
        let mut selected: Vec<&(u128, i128, Vec<i64>, Vec<i64>)> =
            pool.iter().take(target_per_type).collect();
        // Keep at least one integer level-2 sample in every type's set.
        if !selected.iter().any(|s| s.1 == 2) {
            if let Some(extra) = pool.iter().find(|s| s.1 == 2) {
                selected.push(extra);
            }
        }
        let mut at_level_two = 0usize;
        for (_, k_int, l1, l2) in &selected {
            let k = rat(*k_int);
            let ok = verify_tensor_property(&data, k, &w(l1), &w(l2)).map_err(er)?;
            ensure(
                ok,
                format!("{name} k={k_int}: tensor identity fails at {l1:?} + {l2:?}"),
            )?;
            if *k_int == 2 {
                at_level_two += 1;
            }
        }
        let sampled = selected.len();
        // The doubled families additionally factor through the short node
        // at the distinguished level, where no ν-image pair is available.
        let mut factored = 0usize;
        if doubled {
            for mweight in grid_weights(data.rank(), true) {
                if sample_cost(&data, &mweight) > TENSOR_DIM_CAP {
                    continue;
                }
                let ok = verify_short_node_factorization(&data, &w(&mweight)).map_err(er)?;
                ensure(ok, format!("{name}: factorization fails at {mweight:?}"))?;
                factored += 1;
            }
        }
        details.push(if doubled {
            format!("{name}:{sampled}(k2:{at_level_two})+{factored}")
        } else {
            format!("{name}:{sampled}(k2:{at_level_two})")
        });
    }
    Ok(format!("samples per type: {}", details.join(", ")))
}

// ---- Reference checks: X membership ----

fn check_x_membership() -> CheckResult {
    let a2 = aff("A2(2)")?;
    for n in 0..=6i64 {
        let expect = n % 2 == 1;
        let got = is_in_x(&a2, &w(&[n]), ratq(1, 2)).map_err(er)?;
        ensure(
            got == expect,
            format!("A2(2) ({n}ω, 1/2): in X = {got}, expected {expect}"),
        )?;
    }
    // Away from the doubled families, every positive integer level works.
    for name in ["A5(2)", "D4(2)", "E6(2)", "D4(3)", "A1(1)", "C2(1)"] {
        let data = aff(name)?;
        let lam = w(&vec![1; data.rank()]);
        for k in 1..=2i128 {
            ensure(
                is_in_x(&data, &lam, rat(k)).map_err(er)?,
                format!("{name} (ρ-like, k={k}) must lie in X"),
            )?;
        }
        ensure(
            !is_in_x(&data, &lam, rat(0)).map_err(er)?,
            format!("{name} k=0 must not lie in X"),
        )?;
    }
    Ok("quadruple-bond parity grid and integer-level membership agree".into())
}

// ---- Property checks ----

fn random_affine_character(
    data: &AffineData,
    rng: &mut ChaCha8Rng,
) -> FormalCharacter {
    let n = data.num_nodes();
    let mut ch = FormalCharacter::zero_affine(n);
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let coords: Vec<Rat> =
            (0..n).map(|_| rat(rng.gen_range(-4i128..=4))).collect();
        let delta = rat(rng.gen_range(-2i128..=2));
        let coeff = *[-3i64, -2, -1, 1, 2, 3]
            .get(rng.gen_range(0..6))
            .expect("coefficient pool");
        ch.add_term_affine(&coords, delta, coeff);
    }
    ch
}

fn check_idempotence() -> CheckResult {
    let types: &[&str] = &[
        "A2(2)",
        "A4(2)",
        "A5(2)",
        "D4(2)",
        "E6(2)",
        "D4(3)",
        "A1(1)",
        "C2(1)",
        "B3(1)",
        "G2(1)",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut total = 0usize;
    for name in types {
        let data = aff(name)?;
        for _ in 0..200 {
            let ch = random_affine_character(&data, &mut rng);
            let i = rng.gen_range(0..data.num_nodes());
            let once = demazure_op(&data, &ch, i).map_err(er)?;
            let twice = demazure_op(&data, &once, i).map_err(er)?;
            ensure(
                once == twice,
                format!("{name}: D_{i} not idempotent on a random character"),
            )?;
            total += 1;
        }
    }
    Ok(format!("{total} random idempotence cases"))
}

fn check_word_independence() -> CheckResult {
    let types: &[&str] = &["A1(1)", "A2(2)", "A2(1)", "A4(2)", "D4(3)"];
    let max_len = 6usize;
    let mut elements_checked = 0usize;
    let mut words_checked = 0usize;
    for name in types {
        let data = aff(name)?;
        // Regular dominant test character: e^{ρ̂} at δ = 0.
        let rho_hat: Vec<Rat> = vec![Rat::one(); data.num_nodes()];
        let seed = FormalCharacter::monomial_affine(&rho_hat, Rat::zero());
        let roots = oracles::positive_real_roots(&data, 12).map_err(er)?;
        for (matrix, len) in oracles::enumerate_elements(&data, max_len).map_err(er)? {
            if len == 0 {
                continue;
            }
            let inv = oracles::inversion_count(&matrix, &roots);
            ensure(
                inv == len,
                format!("{name}: inversion count {inv} != BFS length {len}"),
            )?;
            let words = oracles::words_for_element(&data, &matrix, len).map_err(er)?;
            ensure(!words.is_empty(), format!("{name}: element of length {len} lost"))?;
            let reference = demazure_apply_word(&data, &seed, &words[0]).map_err(er)?;
            for word in &words[1..] {
                let other = demazure_apply_word(&data, &seed, word).map_err(er)?;
                ensure(
                    other == reference,
                    format!("{name}: reduced words {:?} and {:?} disagree", words[0], word),
                )?;
                words_checked += 1;
            }
            elements_checked += 1;
            words_checked += 1;
        }
    }
    Ok(format!(
        "{elements_checked} elements, {words_checked} reduced words across {} groups",
        types.len()
    ))
}

fn check_translation_composition() -> CheckResult {
    let types: &[&str] = &["A2(2)", "A4(2)", "A5(2)", "D4(2)", "A3(2)", "D4(3)", "A1(1)", "C2(1)"];
    let mut checked = 0usize;
    for name in types {
        let data = aff(name)?;
        let l = data.rank();
        let lambda0 = data.fundamental(0).map_err(er)?;
        // Dominant coweight candidates: fundamental coweights, their doubles
        // and triples, and pairwise sums.  A candidate is kept when its image
        // under the normalized form is an integral-translation direction; for
        // several types no single fundamental coweight qualifies and only the
        // scaled or summed ones do, so the larger pool guarantees coverage.
        let mut coweights: Vec<Vec<i64>> = Vec::new();
        for i in 0..l {
            for scale in 1..=3i64 {
                let mut c = vec![0i64; l];
                c[i] = scale;
                coweights.push(c);
            }
        }
        for i in 0..l {
            for j in (i + 1)..l {
                let mut c = vec![0i64; l];
                c[i] = 1;
                c[j] = 1;
                coweights.push(c);
            }
        }
        let images: Vec<Vec<Rat>> = {
            // Pair each admissible image with its translation length and keep
            // the three shortest, so the composed words stay small.
            let mut with_len: Vec<(usize, Vec<Rat>)> = Vec::new();
            for c in &coweights {
                let img = data.nu_coweight(c).map_err(er)?;
                if !data.in_translation_lattice(&img).map_err(er)? {
                    continue;
                }
                if with_len.iter().any(|(_, seen)| *seen == img) {
                    continue;
                }
                let neg: Vec<Rat> = img.iter().map(|x| -*x).collect();
                let len = data.reduced_word(&[], &neg).map_err(er)?.len();
                with_len.push((len, img));
            }
            with_len.sort_by(|a, b| a.0.cmp(&b.0));
            with_len.truncate(3);
            with_len.into_iter().map(|(_, img)| img).collect()
        };
        ensure(
            !images.is_empty(),
            format!("{name}: no admissible translation directions found"),
        )?;
        for img1 in &images {
            for img2 in &images {
                let neg1: Vec<Rat> = img1.iter().map(|x| -*x).collect();
                let neg2: Vec<Rat> = img2.iter().map(|x| -*x).collect();
                let negsum: Vec<Rat> =
                    img1.iter().zip(img2).map(|(a, b)| -(*a + *b)).collect();
                let w1 = data.reduced_word(&[], &neg1).map_err(er)?;
                let w2 = data.reduced_word(&[], &neg2).map_err(er)?;
                let w12 = data.reduced_word(&[], &negsum).map_err(er)?;
                ensure(
                    w1.len() + w2.len() == w12.len(),
                    format!("{name}: translation lengths do not add"),
                )?;
                let seed = FormalCharacter::monomial_affine(&lambda0.pairings, lambda0.delta);
                let mut concat = w1.clone();
                concat.extend_from_slice(&w2);
                let two_step = demazure_apply_word(&data, &seed, &concat).map_err(er)?;
                let one_step = demazure_apply_word(&data, &seed, &w12).map_err(er)?;
                ensure(
                    two_step == one_step,
                    format!("{name}: composed translation operators differ on e^(Λ0)"),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} coweight pairs"))
}

fn check_level_invariance() -> CheckResult {
    let mut terms = 0usize;
    for (data, res) in sample_modules()? {
        let expected = res.level * rat(data.comarks()[0] as i128);
        for (e, _) in res.character.terms() {
            let level: Rat = e
                .coords
                .iter()
                .zip(data.comarks())
                .map(|(p, &a)| *p * rat(a as i128))
                .sum();
            ensure(
                level == expected,
                format!(
                    "{}: exponent at level {} in a level-{} module",
                    data.name(),
                    level,
                    expected
                ),
            )?;
            terms += 1;
        }
    }
    Ok(format!("{terms} exponents, all at level k·a0∨"))
}

fn check_oracle_agreement() -> CheckResult {
    let types: Vec<FiniteType> = vec![
        FiniteType::A(1),
        FiniteType::A(2),
        FiniteType::A(3),
        FiniteType::A(4),
        FiniteType::B(2),
        FiniteType::B(3),
        FiniteType::B(4),
        FiniteType::C(3),
        FiniteType::C(4),
        FiniteType::D(4),
        FiniteType::G2,
        FiniteType::F4,
    ];
    let dim_cap: u128 = 1000;
    let mut checked = 0usize;
    for t in types {
        let rs = FiniteRootSystem::new(t).map_err(er)?;
        let l = rs.rank();
        let coord_cap: i64 = match l {
            1 => 999,
            2 => 45,
            3 => 10,
            _ => 4,
        };
        let mut m = vec![0i64; l];
        'grid: loop {
            let lam = w(&m);
            let dim = rs.weyl_dim(&lam).map_err(er)?;
            if dim <= dim_cap {
                let a = rs.irr_char(&lam).map_err(er)?;
                let b = oracles::freudenthal_char(&rs, &lam).map_err(er)?;
                ensure(
                    a == b,
                    format!("{} λ={m:?}: operator and recursion characters differ", t.name()),
                )?;
                ensure(
                    oracles::weyl_character_check(&rs, &lam, &a).map_err(er)?,
                    format!("{} λ={m:?}: alternating-sum identity fails", t.name()),
                )?;
                ensure(
                    a.dimension() == dim as i128,
                    format!("{} λ={m:?}: dimension formula disagrees", t.name()),
                )?;
                checked += 1;
            }
            let mut pos = 0;
            loop {
                if pos == l {
                    break 'grid;
                }
                m[pos] += 1;
                if m[pos] <= coord_cap {
                    break;
                }
                m[pos] = 0;
                pos += 1;
            }
        }
    }
    ensure(checked >= 1100, format!("only {checked} oracle cases found"))?;
    Ok(format!("{checked} dominant weights of dimension ≤ {dim_cap}, three-way agreement"))
}

fn check_monotonicity() -> CheckResult {
    let mut steps = 0usize;
    for (data, res) in sample_modules()? {
        let seed = FormalCharacter::monomial_affine(&res.top.pairings, res.top.delta);
        let mut prev: i128 = 1;
        // Growing suffixes of the chain word: each extension applies one
        // more (outer) operator and must not shrink the character.
        for start in (0..res.word.len()).rev() {
            let ch = demazure_apply_word(&data, &seed, &res.word[start..]).map_err(er)?;
            let dim = ch.dimension();
            ensure(
                dim >= prev,
                format!("{}: dimension dropped from {prev} to {dim}", data.name()),
            )?;
            prev = dim;
            steps += 1;
        }
    }
    Ok(format!("{steps} word extensions, dimensions nondecreasing"))
}

fn check_w0_invariance() -> CheckResult {
    let mut cases = 0usize;
    for (data, res) in sample_modules()? {
        let g0 = data.g0();
        let restricted = res.restricted();
        for i in 0..g0.rank() {
            let mut reflected = FormalCharacter::zero_finite(g0.rank());
            for (e, &c) in restricted.terms() {
                let img = g0.simple_reflection(i, &e.coords).map_err(er)?;
                reflected.add_term_finite(&img, c);
            }
            ensure(
                reflected == restricted,
                format!("{}: restriction not s_{}-invariant", data.name(), i + 1),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} reflection invariance cases"))
}

fn check_decomposition_positivity() -> CheckResult {
    let mut summands = 0i64;
    for (data, res) in sample_modules()? {
        let dec = res.decompose(&data).map_err(er)?;
        ensure(
            dec.parts().values().all(|&m| m > 0),
            format!("{}: non-positive multiplicity", data.name()),
        )?;
        let rebuilt = dec.reconstruct(data.g0()).map_err(er)?;
        ensure(
            rebuilt == res.restricted(),
            format!("{}: decomposition does not reconstruct the restriction", data.name()),
        )?;
        summands += dec.num_summands();
    }
    Ok(format!("{summands} irreducible summands, all positive, all reconstruct"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique_and_ordered() {
        let names = check_names(Suite::All);
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len(), "duplicate check names");
        assert_eq!(
            names.len(),
            check_names(Suite::Reference).len() + check_names(Suite::Properties).len()
        );
    }

    #[test]
    fn run_check_finds_registered_names() {
        assert!(run_check("no-such-check").is_none());
        let outcome = run_check("fundamental-dimensions-d4-3").unwrap();
        assert!(outcome.passed, "{}", outcome.detail);
    }

    #[test]
    fn fast_reference_checks_pass() {
        for name in [
            "fundamental-dimensions-d4-3",
            "fundamental-dimensions-a4-2",
            "fundamental-dimensions-a5-2",
            "fundamental-dimensions-d4-2",
            "quadruple-bond-series",
            "x-membership",
        ] {
            let outcome = run_check(name).unwrap();
            assert!(outcome.passed, "{name}: {}", outcome.detail);
        }
    }
}
