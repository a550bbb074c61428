//! The formal character ring: finitely supported integer combinations of
//! exponentials `e^μ` over the half-integer refinement of the weight
//! lattice, together with the Weyl numerators, Freudenthal's recursion for
//! irreducible characters, the product `Δ` over the missing roots, the
//! half-spin characters, the exact verification of the character identities,
//! and a branching decomposition.
//!
//! Quotient identities are always verified in denominator-cleared form:
//! everything is multiplication and exact equality, never division.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiplet::{bullet, is_dominant_integral, DominantWeightF};
use crate::pair::EqualRankPair;
use crate::rootspace::{
    is_dominant, rat, rat_string, solve_in_span, SubSystem, WeightVector,
};
use crate::weyl::{dominantize, orbit_points, orbit_with_signs, CosetElement};
use crate::{Int, Rat};

/// Default cap on character supports. E8-scale character expansion is out of
/// desk scope by design and trips this cap.
pub const DEFAULT_SUPPORT_CAP: u64 = 1_000_000;

/// An element of the character ring: a finitely supported map from weights
/// to nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    ambient_dim: usize,
    terms: BTreeMap<WeightVector, Int>,
}

impl FormalCharacter {
    pub fn zero(ambient_dim: usize) -> Self {
        FormalCharacter {
            ambient_dim,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity `e^0`.
    pub fn one(ambient_dim: usize) -> Self {
        Self::monomial(WeightVector::zero(ambient_dim))
    }

    /// A single exponential `e^μ`.
    pub fn monomial(mu: WeightVector) -> Self {
        let ambient_dim = mu.dim();
        let mut terms = BTreeMap::new();
        terms.insert(mu, Int::one());
        FormalCharacter { ambient_dim, terms }
    }

    pub fn from_terms(
        ambient_dim: usize,
        entries: impl IntoIterator<Item = (WeightVector, Int)>,
    ) -> Result<Self> {
        let mut ch = Self::zero(ambient_dim);
        for (w, c) in entries {
            ch.add_term(&w, &c)?;
        }
        Ok(ch)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeightVector, &Int)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &WeightVector) -> Int {
        self.terms.get(w).cloned().unwrap_or_else(Int::zero)
    }

    /// The coefficient sum; for the character of a representation this is
    /// its dimension.
    pub fn dimension(&self) -> Int {
        self.terms.values().fold(Int::zero(), |a, c| a + c)
    }

    fn add_term(&mut self, w: &WeightVector, c: &Int) -> Result<()> {
        if w.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch(w.dim(), self.ambient_dim));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(Int::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(w);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(self.ambient_dim, other.ambient_dim));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Int::from(-1)))
    }

    pub fn scale(&self, s: &Int) -> Self {
        if s.is_zero() {
            return Self::zero(self.ambient_dim);
        }
        FormalCharacter {
            ambient_dim: self.ambient_dim,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    /// Ring product (convolution of supports), with a cap on the support of
    /// the result.
    pub fn mul(&self, other: &Self, cap: u64) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(self.ambient_dim, other.ambient_dim));
        }
        let mut out = Self::zero(self.ambient_dim);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(&w1.add(w2), &(c1 * c2))?;
                if out.terms.len() as u64 > cap {
                    return Err(Error::ResourceCap {
                        what: "multiplying formal characters".into(),
                        cap,
                    });
                }
            }
        }
        Ok(out)
    }

    /// Applies a map to every key (e.g. a reflection).
    pub fn map_keys(&self, f: impl Fn(&WeightVector) -> WeightVector) -> Self {
        let mut out = Self::zero(self.ambient_dim);
        for (w, c) in &self.terms {
            out.add_term(&f(w), c).expect("mapped key keeps dimension");
        }
        out
    }

    /// Exact division of every coefficient by 2.
    pub fn halve(&self) -> Result<Self> {
        let two = Int::from(2);
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            let (q, r) = c.div_rem(&two);
            if !r.is_zero() {
                return Err(Error::Internal(format!("odd coefficient {c} at {w}")));
            }
            terms.insert(w.clone(), q);
        }
        Ok(FormalCharacter {
            ambient_dim: self.ambient_dim,
            terms,
        })
    }

    /// Canonical serialization: terms sorted by key.
    pub fn to_json_terms(&self) -> Vec<CharacterTerm> {
        self.terms
            .iter()
            .map(|(w, c)| CharacterTerm {
                weight: w.to_strings(),
                coeff: c.to_string(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CharacterTerm {
    pub weight: Vec<String>,
    pub coeff: String,
}

/// The Weyl numerator `A_μ = Σ_w sgn(w) e^{w(μ)}` of a subsystem, for a
/// strictly dominant (regular) `μ`.
pub fn weyl_numerator(sub: &SubSystem, mu: &WeightVector, cap: u64) -> Result<FormalCharacter> {
    let orbit = orbit_with_signs(sub, mu, cap)?;
    FormalCharacter::from_terms(
        sub.ambient_dim,
        orbit.into_iter().map(|(w, s)| (w, Int::from(s))),
    )
}

/// Exact weight multiplicities of the irreducible highest-weight module via
/// Freudenthal's recursion. Independent of every quotient identity this
/// crate verifies. The torus subsystem yields the single monomial `e^μ`.
pub fn irrep_character(sub: &SubSystem, mu: &WeightVector, cap: u64) -> Result<FormalCharacter> {
    if !is_dominant_integral(sub, mu) {
        return Err(Error::NotDominant(format!(
            "{mu} is not dominant-integral for the subsystem"
        )));
    }
    if sub.is_torus() {
        return Ok(FormalCharacter::monomial(mu.clone()));
    }

    // All weights of the module: closure of {μ} under simple root strings.
    let mut weights: BTreeSet<WeightVector> = BTreeSet::new();
    weights.insert(mu.clone());
    let mut queue = vec![mu.clone()];
    while let Some(v) = queue.pop() {
        for alpha in &sub.simple_roots {
            let k = SubSystem::coroot_pairing(&v, alpha);
            if k.is_positive() {
                let steps = k.to_integer();
                let mut current = v.clone();
                let mut step = Int::zero();
                while step < steps {
                    current = current.sub(alpha);
                    step += 1;
                    if weights.insert(current.clone()) {
                        if weights.len() as u64 > cap {
                            return Err(Error::ResourceCap {
                                what: "enumerating module weights".into(),
                                cap,
                            });
                        }
                        queue.push(current.clone());
                    }
                }
            }
        }
    }

    // Dominant weights ordered by depth below μ (sum of simple-root
    // expansion coefficients of μ − ν).
    let mut dominant: Vec<(Rat, WeightVector)> = Vec::new();
    for v in &weights {
        if is_dominant(&sub.positive_roots, v) {
            let coeffs = solve_in_span(&sub.simple_roots, &mu.sub(v)).ok_or_else(|| {
                Error::Internal("weight difference not in the root span".into())
            })?;
            let level = coeffs.iter().fold(Rat::zero(), |a, c| a + c);
            dominant.push((level, v.clone()));
        }
    }
    dominant.sort();

    let shifted_mu = mu.add(&sub.rho);
    let top_norm = shifted_mu.dot(&shifted_mu);
    let mut mult: BTreeMap<WeightVector, Int> = BTreeMap::new();
    for (level, v) in &dominant {
        if level.is_zero() {
            mult.insert(v.clone(), Int::one());
            continue;
        }
        let mut num = Rat::zero();
        for alpha in &sub.positive_roots {
            let mut k = 1u64;
            loop {
                let w = v.add(&alpha.scale(&crate::rootspace::rat_int(k as i64)));
                if !weights.contains(&w) {
                    break;
                }
                let m = mult_of(sub, &mult, &w);
                if !m.is_zero() {
                    num += Rat::from_integer(m) * w.dot(alpha);
                }
                k += 1;
            }
        }
        let shifted_v = v.add(&sub.rho);
        let denom = &top_norm - shifted_v.dot(&shifted_v);
        if denom.is_zero() {
            return Err(Error::Internal(format!("Freudenthal denominator vanished at {v}")));
        }
        let value = num * rat(2, 1) / denom;
        if !value.denom().is_one() || !value.numer().is_positive() {
            return Err(Error::Internal(format!(
                "Freudenthal produced non-positive-integer multiplicity {} at {v}",
                rat_string(&value)
            )));
        }
        mult.insert(v.clone(), value.to_integer());
    }

    // Expand each dominant multiplicity over its Weyl orbit.
    let mut out = FormalCharacter::zero(sub.ambient_dim);
    for (v, m) in &mult {
        for p in orbit_points(sub, v, cap)? {
            out.add_term(&p, m)?;
        }
        if out.terms.len() as u64 > cap {
            return Err(Error::ResourceCap {
                what: "expanding an irreducible character".into(),
                cap,
            });
        }
    }
    Ok(out)
}

fn mult_of(sub: &SubSystem, mult: &BTreeMap<WeightVector, Int>, w: &WeightVector) -> Int {
    let rep = dominantize(sub, w).representative;
    mult.get(&rep).cloned().unwrap_or_else(Int::zero)
}

/// `Δ = Π_{ψ ∈ Φ⁺(F/B)} (e^{ψ/2} − e^{−ψ/2})`, fully expanded.
pub fn delta(pair: &EqualRankPair, cap: u64) -> Result<FormalCharacter> {
    missing_root_product(pair, Int::from(-1), cap)
}

fn missing_root_product(pair: &EqualRankPair, lower_sign: Int, cap: u64) -> Result<FormalCharacter> {
    let dim = pair.f.ambient_dim;
    let half = rat(1, 2);
    let mut product = FormalCharacter::one(dim);
    for psi in &pair.missing_positive_roots {
        let half_psi = psi.scale(&half);
        let factor = FormalCharacter::from_terms(
            dim,
            [
                (half_psi.clone(), Int::one()),
                (half_psi.neg(), lower_sign.clone()),
            ],
        )?;
        product = product.mul(&factor, cap)?;
    }
    Ok(product)
}

/// The half-spin characters `(ch S⁺, ch S⁻)` of `o(P)` restricted to the
/// common Cartan subalgebra: `ch S⁺ + ch S⁻` is the full spinor product
/// `Π (e^{ψ/2} + e^{−ψ/2})` and `ch S⁺ − ch S⁻ = Δ`. The convention is that
/// `S⁺` is the summand whose support contains `ρ_F − ρ_B` with coefficient
/// `+1`.
pub fn spinor_characters(
    pair: &EqualRankPair,
    cap: u64,
) -> Result<(FormalCharacter, FormalCharacter)> {
    let full = missing_root_product(pair, Int::one(), cap)?;
    let diff = delta(pair, cap)?;
    let s_plus = full.add(&diff)?.halve()?;
    let s_minus = full.sub(&diff)?.halve()?;
    Ok((s_plus, s_minus))
}

/// Outcome of one exact character-identity check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_difference: Option<FirstDifference>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FirstDifference {
    pub weight: Vec<String>,
    pub lhs_coeff: String,
    pub rhs_coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub pair: String,
    pub lambda: Vec<String>,
    pub checks: Vec<CheckOutcome>,
    /// Checks not attempted because a resource cap was hit.
    pub skipped: Vec<(String, String)>,
    pub sign_convention: String,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.skipped.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

fn compare(name: &str, detail: &str, lhs: &FormalCharacter, rhs: &FormalCharacter) -> CheckOutcome {
    let mut keys: BTreeSet<&WeightVector> = lhs.terms.keys().collect();
    keys.extend(rhs.terms.keys());
    let first_difference = keys.into_iter().find_map(|w| {
        let a = lhs.coeff(w);
        let b = rhs.coeff(w);
        (a != b).then(|| FirstDifference {
            weight: w.to_strings(),
            lhs_coeff: a.to_string(),
            rhs_coeff: b.to_string(),
        })
    });
    CheckOutcome {
        name: name.to_string(),
        passed: first_difference.is_none(),
        detail: detail.to_string(),
        first_difference,
    }
}

/// Verifies the five character identities of the pair at `λ`, each as an
/// exact equality in the character ring:
///
/// 1. `A^F_{λ+ρ_F} = Σ_c sgn(c) A^B_{c•λ+ρ_B}` (numerator double sum)
/// 2. `ch V_λ · Δ = Σ_c sgn(c) ch U_{c•λ}` (virtual-character identity,
///    denominators cleared)
/// 3. `Δ = Σ_c sgn(c) ch U_{c•0}`
/// 4. `ch V_λ · (Σ_c sgn(c) ch U_{c•0}) = Σ_c sgn(c) ch U_{c•λ}`
///    (branching quotient, denominators cleared)
/// 5. `A^F_{ρ_F} = A^B_{ρ_B} · Δ` (denominator factorization)
pub fn verify_pair(
    pair: &EqualRankPair,
    section: &[CosetElement],
    lambda: &DominantWeightF,
    cap: u64,
) -> Result<VerificationReport> {
    let f_sub = pair.f_subsystem();
    let b_sub = pair.b_subsystem();
    let zero = DominantWeightF::new(&f_sub, WeightVector::zero(pair.f.ambient_dim))?;
    let mut checks = Vec::new();
    let mut skipped: Vec<(String, String)> = Vec::new();

    // Cheap size estimates before any expansion: every object in these
    // identities has support at least |W(B)| (numerators exactly |W(B)|,
    // characters at least one regular orbit), and the two numerator checks
    // need the full |W(F)| orbit. Skipping on the estimate avoids paying
    // for a cap hit the slow way.
    let wb = crate::weyl::subsystem_weyl_order(&b_sub)?;
    let wf = crate::weyl::weyl_order(pair.f.family, pair.f.rank)?;
    let all_names = [
        "numerator_double_sum",
        "virtual_character_product",
        "delta_alternating_sum",
        "branching_quotient_product",
        "denominator_factorization",
    ];
    if wb > Int::from(cap) {
        for name in all_names {
            skipped.push((
                name.to_string(),
                format!("estimated support |W(B)| = {wb} exceeds the cap (cap {cap})"),
            ));
        }
        return Ok(VerificationReport {
            pair: pair.display_name(),
            lambda: lambda.weight.to_strings(),
            checks,
            skipped,
            sign_convention: SIGN_CONVENTION.into(),
        });
    }
    let numerator_guard = || -> Result<()> {
        if wf > Int::from(cap) {
            return Err(Error::ResourceCap {
                what: format!("estimated support |W(F)| = {wf} exceeds the cap"),
                cap,
            });
        }
        Ok(())
    };
    // A check that hits a resource cap is recorded as skipped (partial
    // report); every other error aborts verification.
    let mut run = |name: &str,
                   f: &mut dyn FnMut() -> Result<CheckOutcome>|
     -> Result<()> {
        match f() {
            Ok(outcome) => {
                checks.push(outcome);
                Ok(())
            }
            Err(Error::ResourceCap { what, cap }) => {
                skipped.push((name.to_string(), format!("{what} (cap {cap})")));
                Ok(())
            }
            Err(e) => Err(e),
        }
    };
    let signed_numerator_sum = |lam: &DominantWeightF| -> Result<FormalCharacter> {
        let mut acc = FormalCharacter::zero(pair.f.ambient_dim);
        for c in section {
            let hw = bullet(pair, c, lam);
            let shifted = hw.add(&pair.rho_b);
            let num = weyl_numerator(&b_sub, &shifted, cap)?;
            acc = acc.add(&num.scale(&Int::from(c.sign)))?;
        }
        Ok(acc)
    };
    let signed_irrep_sum = |lam: &DominantWeightF| -> Result<FormalCharacter> {
        let mut acc = FormalCharacter::zero(pair.f.ambient_dim);
        for c in section {
            let hw = bullet(pair, c, lam);
            let ch = irrep_character(&b_sub, &hw, cap)?;
            acc = acc.add(&ch.scale(&Int::from(c.sign)))?;
        }
        Ok(acc)
    };

    // Shared subresults, kept as fallible values so a cap hit in one of
    // them skips only the checks that need it.
    let delta_ch = delta(pair, cap);
    let ch_v = irrep_character(&f_sub, &lambda.weight, cap);
    let signed_u_lambda = signed_irrep_sum(lambda);
    let signed_u_zero = signed_irrep_sum(&zero);
    fn reuse(shared: &Result<FormalCharacter>) -> Result<FormalCharacter> {
        match shared {
            Ok(c) => Ok(c.clone()),
            Err(Error::ResourceCap { what, cap }) => Err(Error::ResourceCap {
                what: what.clone(),
                cap: *cap,
            }),
            Err(e) => Err(Error::Internal(e.to_string())),
        }
    }

    run("numerator_double_sum", &mut || {
        numerator_guard()?;
        let lhs = weyl_numerator(&f_sub, &lambda.weight.add(&pair.rho_f), cap)?;
        let rhs = signed_numerator_sum(lambda)?;
        Ok(compare(
            "numerator_double_sum",
            "A^F over W(F) equals the signed sum of B-numerators over the section",
            &lhs,
            &rhs,
        ))
    })?;
    run("virtual_character_product", &mut || {
        let lhs = reuse(&ch_v)?.mul(&reuse(&delta_ch)?, cap)?;
        Ok(compare(
            "virtual_character_product",
            "ch V_lambda * Delta equals the signed sum of ch U_{c.lambda}",
            &lhs,
            &reuse(&signed_u_lambda)?,
        ))
    })?;
    run("delta_alternating_sum", &mut || {
        Ok(compare(
            "delta_alternating_sum",
            "Delta equals the signed sum of ch U_{c.0}",
            &reuse(&delta_ch)?,
            &reuse(&signed_u_zero)?,
        ))
    })?;
    run("branching_quotient_product", &mut || {
        let lhs = reuse(&ch_v)?.mul(&reuse(&signed_u_zero)?, cap)?;
        Ok(compare(
            "branching_quotient_product",
            "ch V_lambda * (signed sum at 0) equals the signed sum at lambda",
            &lhs,
            &reuse(&signed_u_lambda)?,
        ))
    })?;
    run("denominator_factorization", &mut || {
        numerator_guard()?;
        let lhs = weyl_numerator(&f_sub, &pair.rho_f, cap)?;
        let rhs = if b_sub.is_torus() {
            reuse(&delta_ch)?
        } else {
            weyl_numerator(&b_sub, &pair.rho_b, cap)?.mul(&reuse(&delta_ch)?, cap)?
        };
        Ok(compare(
            "denominator_factorization",
            "A^F_{rho_F} equals A^B_{rho_B} * Delta",
            &lhs,
            &rhs,
        ))
    })?;

    Ok(VerificationReport {
        pair: pair.display_name(),
        lambda: lambda.weight.to_strings(),
        checks,
        skipped,
        sign_convention: SIGN_CONVENTION.into(),
    })
}

const SIGN_CONVENTION: &str =
    "S+ is the half-spin summand containing e^(rho_F - rho_B) with coefficient +1";

/// One line of a branching decomposition.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BranchEntry {
    pub highest_weight: WeightVector,
    pub multiplicity: Int,
    pub dimension: Int,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BranchingReport {
    pub lambda: WeightVector,
    pub entries: Vec<BranchEntry>,
}

impl BranchingReport {
    /// `Σ multiplicity · dim U` — must equal `dim V_λ`.
    pub fn total_dimension(&self) -> Int {
        self.entries.iter().fold(Int::zero(), |a, e| {
            a + &e.multiplicity * &e.dimension
        })
    }
}

/// Decomposes `V_λ`, restricted to `B`, into `B`-irreducibles by iterated
/// highest-weight extraction: repeatedly take the maximal remaining weight
/// (height order against the sum of B-fundamental coweights, lexicographic
/// tie-break) and subtract that irreducible character.
pub fn branch(
    pair: &EqualRankPair,
    section: &[CosetElement],
    lambda: &DominantWeightF,
    cap: u64,
) -> Result<BranchingReport> {
    let _ = section;
    let f_sub = pair.f_subsystem();
    let b_sub = pair.b_subsystem();
    let mut remaining = irrep_character(&f_sub, &lambda.weight, cap)?;
    let height_vector = b_height_vector(&b_sub)?;
    let mut entries = Vec::new();
    while !remaining.is_zero() {
        let top = remaining
            .terms
            .keys()
            .max_by(|a, b| {
                let ha = a.dot(&height_vector);
                let hb = b.dot(&height_vector);
                ha.cmp(&hb).then_with(|| a.cmp(b))
            })
            .cloned()
            .expect("nonzero character has a maximal term");
        let mult = remaining.coeff(&top);
        if !mult.is_positive() || !is_dominant_integral(&b_sub, &top) {
            return Err(Error::Internal(format!(
                "extraction found coefficient {mult} at non-dominant or negative top weight {top}"
            )));
        }
        let ch = irrep_character(&b_sub, &top, cap)?;
        remaining = remaining.sub(&ch.scale(&mult))?;
        let dimension = ch.dimension();
        entries.push(BranchEntry {
            highest_weight: top,
            multiplicity: mult,
            dimension,
        });
    }
    Ok(BranchingReport {
        lambda: lambda.weight.clone(),
        entries,
    })
}

/// A vector `ξ` in the span of the B-simple roots with `⟨ξ, α⟩ = 1` for
/// every B-simple root `α`; the zero vector for the torus.
fn b_height_vector(b_sub: &SubSystem) -> Result<WeightVector> {
    if b_sub.simple_roots.is_empty() {
        return Ok(WeightVector::zero(b_sub.ambient_dim));
    }
    let n = b_sub.simple_roots.len();
    let target = vec![Rat::one(); n];
    // Solve Gram system: Σ_k c_k ⟨β_k, β_j⟩ = 1 for all j.
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let mut row: Vec<Rat> = (0..n)
                .map(|k| b_sub.simple_roots[k].dot(&b_sub.simple_roots[j]))
                .collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let c = crate::rootspace::gauss_solve(&mut m)
        .ok_or_else(|| Error::Internal("degenerate Gram matrix for height vector".into()))?;
    let mut xi = WeightVector::zero(b_sub.ambient_dim);
    for (ck, beta) in c.iter().zip(&b_sub.simple_roots) {
        xi = xi.add(&beta.scale(ck));
    }
    Ok(xi)
}

/// Convenience: the character is invariant under every simple reflection of
/// the subsystem.
pub fn is_invariant_under(sub: &SubSystem, ch: &FormalCharacter) -> bool {
    sub.simple_roots.iter().all(|alpha| {
        ch.map_keys(|w| crate::weyl::reflect_raw(alpha, w)) == *ch
    })
}

/// Antisymmetry of `Δ`: reflecting every key in a missing root negates it.
pub fn delta_is_antisymmetric(pair: &EqualRankPair, delta_ch: &FormalCharacter) -> bool {
    pair.missing_positive_roots.iter().all(|psi| {
        delta_ch.map_keys(|w| crate::weyl::reflect_raw(psi, w))
            == delta_ch.scale(&Int::from(-1))
    })
}

/// `ρ_F` strictly dominates every weight here; used in tests.
pub fn top_term_is(ch: &FormalCharacter, w: &WeightVector) -> bool {
    ch.coeff(w) == Int::one()
}
