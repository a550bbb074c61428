//! Weyl-group actions: reflections, dominantization with sign tracking,
//! orbit enumeration, and the coset section of an equal-rank pair.
//!
//! The section is computed by a breadth-first walk over the `B`-dominant
//! chamber representatives of the `W(F)`-orbit of `ρ_F`; `W(F)` itself is
//! never materialized.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pair::EqualRankPair;
use crate::rootspace::{is_strictly_dominant, SubSystem, WeightVector};
use crate::{Int, Rat};

/// Default cap on orbit sizes. The E8 torus-pair orbit (|W| ≈ 7·10^8) is
/// rejected rather than attempted.
pub const DEFAULT_ORBIT_CAP: u64 = 10_000_000;

/// Reflection of `x` in the hyperplane orthogonal to `alpha`:
/// `s_α(x) = x − 2⟨x,α⟩/⟨α,α⟩ α`.
pub fn reflect_raw(alpha: &WeightVector, x: &WeightVector) -> WeightVector {
    let coeff = SubSystem::coroot_pairing(x, alpha);
    x.sub(&alpha.scale(&coeff))
}

/// Checked variant: `alpha` must be a root of the subsystem.
pub fn reflect(sub: &SubSystem, alpha: &WeightVector, x: &WeightVector) -> Result<WeightVector> {
    let is_root = sub.positive_roots.iter().any(|r| r == alpha)
        || sub.positive_roots.iter().any(|r| &r.neg() == alpha);
    if !is_root {
        return Err(Error::NotARoot(alpha.to_string()));
    }
    if x.dim() != sub.ambient_dim {
        return Err(Error::DimensionMismatch(x.dim(), sub.ambient_dim));
    }
    Ok(reflect_raw(alpha, x))
}

/// Applies a word of simple-reflection indices to a vector. The word is a
/// left-to-right composition: `word = [i, j]` acts as `s_i ∘ s_j`, so the
/// last letter is applied first.
pub fn apply_word(simple_roots: &[WeightVector], word: &[usize], x: &WeightVector) -> WeightVector {
    let mut v = x.clone();
    for &i in word.iter().rev() {
        v = reflect_raw(&simple_roots[i], &v);
    }
    v
}

/// Result of moving a vector into the dominant chamber of a subsystem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedDominantization {
    pub representative: WeightVector,
    /// `(−1)^(word length)`, or `0` when the input is singular (fixed by a
    /// reflection of the subsystem).
    pub sign: i8,
    /// Simple-reflection indices applied to the input, in application order.
    pub word: Vec<usize>,
}

/// Repeatedly reflects at the lowest-index violated simple root until the
/// vector is dominant for the subsystem.
pub fn dominantize(sub: &SubSystem, x: &WeightVector) -> SignedDominantization {
    let mut v = x.clone();
    let mut word = Vec::new();
    loop {
        let violated = sub
            .simple_roots
            .iter()
            .position(|a| v.dot(a).is_negative());
        match violated {
            Some(i) => {
                v = reflect_raw(&sub.simple_roots[i], &v);
                word.push(i);
            }
            None => break,
        }
    }
    let singular = sub.positive_roots.iter().any(|a| v.dot(a).is_zero());
    let sign = if singular {
        0
    } else if word.len() % 2 == 0 {
        1
    } else {
        -1
    };
    SignedDominantization {
        representative: v,
        sign,
        word,
    }
}

/// Full Weyl orbit of a strictly dominant (regular) vector, each point
/// paired with the sign of the unique group element reaching it.
pub fn orbit_with_signs(
    sub: &SubSystem,
    x: &WeightVector,
    cap: u64,
) -> Result<Vec<(WeightVector, i8)>> {
    if !is_strictly_dominant(&sub.positive_roots, x) {
        return Err(Error::NotDominant(format!(
            "{x} is not strictly dominant; dominantize first"
        )));
    }
    let mut seen: BTreeMap<WeightVector, i8> = BTreeMap::new();
    seen.insert(x.clone(), 1);
    let mut queue: VecDeque<(WeightVector, i8)> = VecDeque::new();
    queue.push_back((x.clone(), 1));
    while let Some((v, sign)) = queue.pop_front() {
        for alpha in &sub.simple_roots {
            let img = reflect_raw(alpha, &v);
            if !seen.contains_key(&img) {
                if seen.len() as u64 >= cap {
                    return Err(Error::ResourceCap {
                        what: "enumerating a Weyl orbit".into(),
                        cap,
                    });
                }
                seen.insert(img.clone(), -sign);
                queue.push_back((img, -sign));
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Orbit without signs; accepts singular dominant vectors.
pub fn orbit_points(sub: &SubSystem, x: &WeightVector, cap: u64) -> Result<Vec<WeightVector>> {
    let mut seen: BTreeSet<WeightVector> = BTreeSet::new();
    seen.insert(x.clone());
    let mut queue: VecDeque<WeightVector> = VecDeque::new();
    queue.push_back(x.clone());
    while let Some(v) = queue.pop_front() {
        for alpha in &sub.simple_roots {
            let img = reflect_raw(alpha, &v);
            if !seen.contains(&img) {
                if seen.len() as u64 >= cap {
                    return Err(Error::ResourceCap {
                        what: "enumerating a Weyl orbit".into(),
                        cap,
                    });
                }
                seen.insert(img.clone());
                queue.push_back(img);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// |W| for one simple type, from the classical order formulas.
pub fn weyl_order(family: crate::rootspace::Family, rank: usize) -> Result<Int> {
    use crate::rootspace::Family;
    let fact = |n: usize| (1..=n).fold(Int::one(), |a, k| a * Int::from(k));
    let pow2 = |n: usize| Int::from(2).pow(n as u32);
    match (family, rank) {
        (Family::A, n) if n >= 1 => Ok(fact(n + 1)),
        (Family::B, n) | (Family::C, n) if n >= 1 => Ok(pow2(n) * fact(n)),
        (Family::D, 1) => Ok(Int::one()),
        (Family::D, n) if n >= 2 => Ok(pow2(n - 1) * fact(n)),
        (Family::E, 6) => Ok(Int::from(51_840)),
        (Family::E, 7) => Ok(Int::from(2_903_040)),
        (Family::E, 8) => Ok(Int::from(696_729_600u32)),
        (Family::F, 4) => Ok(Int::from(1_152)),
        (Family::G, 2) => Ok(Int::from(12)),
        _ => Err(Error::InvalidSystem {
            family: family.letter().to_string(),
            rank,
        }),
    }
}

/// |W| of an arbitrary sub-root-system, as the product over its irreducible
/// components (torus factors contribute 1). Components are identified by
/// (rank, positive-root count, number of root lengths), which separates all
/// simple types that differ in Weyl order.
pub fn subsystem_weyl_order(sub: &SubSystem) -> Result<Int> {
    let n = sub.simple_roots.len();
    if n == 0 {
        return Ok(Int::one());
    }
    // Connected components of the simple-root orthogonality graph.
    let mut component = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        component[start] = next;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if component[j] == usize::MAX
                    && !sub.simple_roots[i].dot(&sub.simple_roots[j]).is_zero()
                {
                    component[j] = next;
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    let mut order = Int::one();
    for c in 0..next {
        let comp_simples: Vec<WeightVector> = (0..n)
            .filter(|&i| component[i] == c)
            .map(|i| sub.simple_roots[i].clone())
            .collect();
        let comp_positives: Vec<&WeightVector> = sub
            .positive_roots
            .iter()
            .filter(|r| crate::rootspace::solve_in_span(&comp_simples, r).is_some())
            .collect();
        let rank = comp_simples.len();
        let count = comp_positives.len();
        let lengths: BTreeSet<Rat> = comp_positives.iter().map(|r| r.dot(r)).collect();
        order *= component_order(rank, count, lengths.len())?;
    }
    Ok(order)
}

fn component_order(rank: usize, positives: usize, num_lengths: usize) -> Result<Int> {
    use crate::rootspace::Family;
    let err = || {
        Error::Internal(format!(
            "unrecognized component: rank {rank}, {positives} positive roots, {num_lengths} lengths"
        ))
    };
    match (rank, positives, num_lengths) {
        (2, 6, 2) => weyl_order(Family::G, 2),
        (4, 24, 2) => weyl_order(Family::F, 4),
        (6, 36, 1) => weyl_order(Family::E, 6),
        (7, 63, 1) => weyl_order(Family::E, 7),
        (8, 120, 1) => weyl_order(Family::E, 8),
        (r, p, 1) if p == r * (r + 1) / 2 => weyl_order(Family::A, r),
        (r, p, _) if p == r * r => weyl_order(Family::B, r),
        (r, p, 1) if r >= 2 && p == r * (r - 1) => weyl_order(Family::D, r),
        _ => Err(err()),
    }
}

/// One element of the coset section `C ⊂ W(F)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetElement {
    /// Reduced word in F-simple-reflection indices (left-to-right
    /// composition, last letter applied first).
    pub word: Vec<usize>,
    /// `(−1)^(word length)`.
    pub sign: i8,
    /// The word applied to `ρ_F`; strictly B-dominant, and it determines the
    /// element since `ρ_F` is regular.
    pub image_of_rho_f: WeightVector,
}

impl CosetElement {
    pub fn apply(&self, f_simple_roots: &[WeightVector], x: &WeightVector) -> WeightVector {
        apply_word(f_simple_roots, &self.word, x)
    }
}

/// Computes the section `C` of `W(B)\W(F)` by BFS over B-dominant chamber
/// representatives, starting from `ρ_F` (the identity element).
///
/// From a node `c` with image `x = c(ρ_F)`, the neighbor along the F-simple
/// reflection `s_i` is `c·s_i`, whose image is the reflection of `x` in the
/// root `c(α_i)`. The neighbor is kept iff its image is strictly B-dominant,
/// i.e. iff `c·s_i ∈ C`. Minimal galleries between chambers inside the
/// convex cone `𝒲_B` stay inside it, so this walk reaches all of `C` and
/// every recorded word is reduced.
pub fn coset_section(pair: &EqualRankPair, cap: u64) -> Result<Vec<CosetElement>> {
    let f_simples = &pair.f.simple_roots;
    let b_positives = &pair.b_positive_roots;
    let rho_f = &pair.rho_f;
    if !is_strictly_dominant(b_positives, rho_f) {
        return Err(Error::InvalidPair(
            "rho_F is not strictly B-dominant".into(),
        ));
    }
    let mut seen: BTreeSet<WeightVector> = BTreeSet::new();
    seen.insert(rho_f.clone());
    let mut queue: VecDeque<(Vec<usize>, WeightVector)> = VecDeque::new();
    queue.push_back((Vec::new(), rho_f.clone()));
    let mut out: Vec<CosetElement> = Vec::new();
    while let Some((word, x)) = queue.pop_front() {
        let sign = if word.len() % 2 == 0 { 1 } else { -1 };
        out.push(CosetElement {
            word: word.clone(),
            sign,
            image_of_rho_f: x.clone(),
        });
        for (i, alpha) in f_simples.iter().enumerate() {
            let conjugated_root = apply_word(f_simples, &word, alpha);
            let image = reflect_raw(&conjugated_root, &x);
            if is_strictly_dominant(b_positives, &image) && !seen.contains(&image) {
                if seen.len() as u64 >= cap {
                    return Err(Error::ResourceCap {
                        what: "enumerating the coset section".into(),
                        cap,
                    });
                }
                seen.insert(image.clone());
                let mut next_word = word.clone();
                next_word.push(i);
                queue.push_back((next_word, image));
            }
        }
    }
    out.sort_by(|a, b| {
        (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word))
    });
    Ok(out)
}
