//! Root-system construction and the ambient rational geometry.
//!
//! Every simple type is realized in a fixed rational coordinate system so
//! that the classical `ε_i` formulas are literal test vectors: B/C/D in `n`
//! coordinates, `A_n` in `n+1` sum-zero coordinates, `F_4` in 4, `E_6`–`E_8`
//! in 8 (with half-integer entries), `G_2` in 3. The bilinear form is the
//! coordinate dot product scaled so that long roots have squared length 2.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{Int, Rat};

/// Exact rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Exact rational `p/q`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Renders a rational as `p` or `p/q` (always lowest terms, `q > 0`).
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| {
        Int::from_str(t.trim()).map_err(|_| Error::Registry(format!("bad rational: {s:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Registry(format!("zero denominator: {s:?}")));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// A point of the ambient rational space: weights, roots, ρ's all live here.
///
/// Equality and ordering are exact and componentwise (lexicographic for the
/// ordering), which makes `WeightVector` usable as a map key in the formal
/// character ring.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(Vec<Rat>);

impl WeightVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        WeightVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        WeightVector(vec![Rat::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        WeightVector(coords.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Rat) -> Self {
        WeightVector(self.0.iter().map(|a| a * s).collect())
    }

    /// Unscaled coordinate dot product. Use [`RootSystem::inner`] for the
    /// normalized form.
    pub fn dot(&self, other: &Self) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(rat_string).collect()
    }

    pub fn from_strings(coords: &[String]) -> Result<Self> {
        Ok(WeightVector(
            coords.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?,
        ))
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Serialize for WeightVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        WeightVector::from_strings(&strings).map_err(serde::de::Error::custom)
    }
}

/// Simple Lie type family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::Registry(format!("unknown family {other:?}"))),
        }
    }
}

/// A view of a (possibly reducible, possibly empty) root subsystem that the
/// Weyl-group and character algorithms operate on uniformly. A full
/// [`RootSystem`] and the `B` side of an equal-rank pair both present as one
/// of these.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubSystem {
    pub ambient_dim: usize,
    pub simple_roots: Vec<WeightVector>,
    pub positive_roots: Vec<WeightVector>,
    pub rho: WeightVector,
    /// Scale applied to the coordinate dot product so long roots of the
    /// enclosing system have squared length 2.
    pub form_scale: Rat,
}

impl SubSystem {
    pub fn torus(ambient_dim: usize) -> Self {
        SubSystem {
            ambient_dim,
            simple_roots: vec![],
            positive_roots: vec![],
            rho: WeightVector::zero(ambient_dim),
            form_scale: Rat::one(),
        }
    }

    pub fn is_torus(&self) -> bool {
        self.positive_roots.is_empty()
    }

    pub fn inner(&self, x: &WeightVector, y: &WeightVector) -> Result<Rat> {
        if x.dim() != y.dim() || x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch(x.dim(), y.dim()));
        }
        Ok(x.dot(y) * &self.form_scale)
    }

    /// `2⟨x, α⟩ / ⟨α, α⟩` — the pairing against the coroot of `α`.
    pub fn coroot_pairing(x: &WeightVector, alpha: &WeightVector) -> Rat {
        let two = rat_int(2);
        two * x.dot(alpha) / alpha.dot(alpha)
    }
}

/// Cartan data of one simple type in its fixed rational realization.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<WeightVector>,
    /// Sorted by height, then lexicographically.
    pub positive_roots: Vec<WeightVector>,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub rho: WeightVector,
    /// Fundamental weights, dual to the simple coroots within the root span.
    pub fundamental_weights: Vec<WeightVector>,
    pub form_scale: Rat,
}

impl RootSystem {
    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    pub fn subsystem(&self) -> SubSystem {
        SubSystem {
            ambient_dim: self.ambient_dim,
            simple_roots: self.simple_roots.clone(),
            positive_roots: self.positive_roots.clone(),
            rho: self.rho.clone(),
            form_scale: self.form_scale.clone(),
        }
    }

    /// Normalized symmetric bilinear form: long roots have `inner(α, α) = 2`.
    pub fn inner(&self, x: &WeightVector, y: &WeightVector) -> Result<Rat> {
        if x.dim() != y.dim() || x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch(x.dim(), y.dim()));
        }
        Ok(x.dot(y) * &self.form_scale)
    }

    pub fn is_root(&self, alpha: &WeightVector) -> bool {
        self.positive_roots.iter().any(|r| r == alpha)
            || self.positive_roots.iter().any(|r| &r.neg() == alpha)
    }

    /// λ expressed in the fundamental-weight basis, as an ambient vector.
    pub fn weight_from_fundamental_coeffs(&self, coeffs: &[Rat]) -> Result<WeightVector> {
        if coeffs.len() != self.rank {
            return Err(Error::DimensionMismatch(coeffs.len(), self.rank));
        }
        let mut w = WeightVector::zero(self.ambient_dim);
        for (c, omega) in coeffs.iter().zip(&self.fundamental_weights) {
            w = w.add(&omega.scale(c));
        }
        Ok(w)
    }
}

/// `true` iff `inner(x, α) ≥ 0` for every root in the given list. The list
/// may be any root subset, so the same check serves both chambers of a pair.
pub fn is_dominant(positive_roots: &[WeightVector], x: &WeightVector) -> bool {
    positive_roots.iter().all(|a| !x.dot(a).is_negative())
}

/// Strict variant: all pairings `> 0`.
pub fn is_strictly_dominant(positive_roots: &[WeightVector], x: &WeightVector) -> bool {
    positive_roots.iter().all(|a| x.dot(a).is_positive())
}

/// Half the sum of the positive roots.
pub fn rho(positive_roots: &[WeightVector], ambient_dim: usize) -> WeightVector {
    let sum = positive_roots
        .iter()
        .fold(WeightVector::zero(ambient_dim), |acc, r| acc.add(r));
    sum.scale(&rat(1, 2))
}

/// Solves `target = Σ c_i basis_i` exactly, via the Gram matrix of the
/// (linearly independent) basis. Returns `None` if `target` is not in the
/// span.
pub fn solve_in_span(basis: &[WeightVector], target: &WeightVector) -> Option<Vec<Rat>> {
    let k = basis.len();
    if k == 0 {
        return target.is_zero().then(Vec::new);
    }
    // Gram system G c = rhs, then verify membership in the span.
    let mut m: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            let mut row: Vec<Rat> = (0..k).map(|j| basis[i].dot(&basis[j])).collect();
            row.push(target.dot(&basis[i]));
            row
        })
        .collect();
    let c = gauss_solve(&mut m)?;
    let mut recon = WeightVector::zero(target.dim());
    for (ci, bi) in c.iter().zip(basis) {
        recon = recon.add(&bi.scale(ci));
    }
    (recon == *target).then_some(c)
}

/// Exact Gaussian elimination on an augmented `k × (k+1)` matrix.
pub(crate) fn gauss_solve(m: &mut [Vec<Rat>]) -> Option<Vec<Rat>> {
    let k = m.len();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for entry in m[col].iter_mut() {
            *entry = &*entry / &p;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c2 in col..=k {
                    let delta = &f * &m[col][c2];
                    m[r][c2] = &m[r][c2] - delta;
                }
            }
        }
    }
    Some(m.iter().map(|row| row[k].clone()).collect())
}

fn simple_root_table(family: Family, rank: usize) -> Result<(usize, Vec<WeightVector>)> {
    let bad = || Error::InvalidSystem {
        family: family.letter().to_string(),
        rank,
    };
    let e = |dim: usize, i: usize| {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        WeightVector::from_ints(&v)
    };
    match family {
        Family::A => {
            if rank < 1 {
                return Err(bad());
            }
            let dim = rank + 1;
            let roots = (0..rank)
                .map(|i| e(dim, i).sub(&e(dim, i + 1)))
                .collect();
            Ok((dim, roots))
        }
        Family::B => {
            // Rank 1 accepted: it is the F side of the n = 1 instance of the
            // D_n ⊂ B_n family.
            if rank < 1 {
                return Err(bad());
            }
            let dim = rank;
            let mut roots: Vec<WeightVector> = (0..rank - 1)
                .map(|i| e(dim, i).sub(&e(dim, i + 1)))
                .collect();
            roots.push(e(dim, rank - 1));
            Ok((dim, roots))
        }
        Family::C => {
            if rank < 3 {
                return Err(bad());
            }
            let dim = rank;
            let mut roots: Vec<WeightVector> = (0..rank - 1)
                .map(|i| e(dim, i).sub(&e(dim, i + 1)))
                .collect();
            roots.push(e(dim, rank - 1).scale(&rat_int(2)));
            Ok((dim, roots))
        }
        Family::D => {
            // D_1 (a torus), D_2 = A_1 × A_1, and D_3 = A_3 are accepted as
            // reductive conveniences for the D_n ⊂ B_n family.
            if rank < 1 {
                return Err(bad());
            }
            let dim = rank;
            if rank == 1 {
                return Ok((1, vec![]));
            }
            let mut roots: Vec<WeightVector> = (0..rank - 1)
                .map(|i| e(dim, i).sub(&e(dim, i + 1)))
                .collect();
            roots.push(e(dim, rank - 2).add(&e(dim, rank - 1)));
            Ok((dim, roots))
        }
        Family::E => {
            if !(6..=8).contains(&rank) {
                return Err(bad());
            }
            let dim = 8;
            // Bourbaki numbering in 8 coordinates; E6/E7 are the subsets
            // generated by the first 6/7 simple roots.
            let half = rat(1, 2);
            let mut alpha1 = vec![half.clone(); 8];
            for item in alpha1.iter_mut().take(7).skip(1) {
                *item = -item.clone();
            }
            let mut roots = vec![
                WeightVector::new(alpha1),
                e(dim, 0).add(&e(dim, 1)),
            ];
            for i in 0..6 {
                roots.push(e(dim, i + 1).sub(&e(dim, i)));
            }
            roots.truncate(2 + (rank - 2));
            Ok((dim, roots))
        }
        Family::F => {
            if rank != 4 {
                return Err(bad());
            }
            let dim = 4;
            let half = rat(1, 2);
            let roots = vec![
                e(dim, 1).sub(&e(dim, 2)),
                e(dim, 2).sub(&e(dim, 3)),
                e(dim, 3),
                WeightVector::new(vec![
                    half.clone(),
                    -half.clone(),
                    -half.clone(),
                    -half.clone(),
                ]),
            ];
            Ok((dim, roots))
        }
        Family::G => {
            if rank != 2 {
                return Err(bad());
            }
            let dim = 3;
            let roots = vec![
                e(dim, 0).sub(&e(dim, 1)),
                WeightVector::from_ints(&[-2, 1, 1]),
            ];
            Ok((dim, roots))
        }
    }
}

/// Expected number of positive roots per type, used as a construction check.
pub fn positive_root_count(family: Family, rank: usize) -> Option<usize> {
    match (family, rank) {
        (Family::A, n) => Some(n * (n + 1) / 2),
        (Family::B, n) | (Family::C, n) => Some(n * n),
        (Family::D, n) => Some(n * (n.saturating_sub(1))),
        (Family::E, 6) => Some(36),
        (Family::E, 7) => Some(63),
        (Family::E, 8) => Some(120),
        (Family::F, 4) => Some(24),
        (Family::G, 2) => Some(6),
        _ => None,
    }
}

/// All roots generated from the given simple roots by closure under the
/// simple reflections.
fn root_closure(simple_roots: &[WeightVector]) -> Vec<WeightVector> {
    use std::collections::BTreeSet;
    let mut roots: BTreeSet<WeightVector> = simple_roots.iter().cloned().collect();
    let mut queue: Vec<WeightVector> = simple_roots.to_vec();
    while let Some(r) = queue.pop() {
        for s in simple_roots {
            let two = rat_int(2);
            let coeff = two * r.dot(s) / s.dot(s);
            let image = r.sub(&s.scale(&coeff));
            if roots.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    roots.into_iter().collect()
}

/// Sorts roots by height (sum of simple-root expansion coefficients), then
/// lexicographically. Also used to define the canonical positive-root order.
fn sort_by_height(simple_roots: &[WeightVector], roots: &mut [WeightVector]) {
    roots.sort_by_cached_key(|r| {
        let coeffs = solve_in_span(simple_roots, r).expect("root lies in the simple-root span");
        let height: Rat = coeffs.iter().fold(Rat::zero(), |a, c| a + c);
        (height, r.clone())
    });
}

/// Deterministic construction of a simple root system from the fixed tables.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let (ambient_dim, simple_roots) = simple_root_table(family, rank)?;
    let all_roots = root_closure(&simple_roots);
    let mut positive_roots: Vec<WeightVector> = all_roots
        .into_iter()
        .filter(|r| {
            let coeffs =
                solve_in_span(&simple_roots, r).expect("closure stays in the simple-root span");
            coeffs.iter().all(|c| !c.is_negative())
        })
        .collect();
    sort_by_height(&simple_roots, &mut positive_roots);

    if let Some(expected) = positive_root_count(family, rank) {
        if positive_roots.len() != expected {
            return Err(Error::Internal(format!(
                "{}{}: built {} positive roots, expected {}",
                family.letter(),
                rank,
                positive_roots.len(),
                expected
            )));
        }
    }

    let form_scale = match positive_roots
        .iter()
        .map(|r| r.dot(r))
        .max()
    {
        Some(longest) => rat_int(2) / longest,
        None => Rat::one(), // torus-like (D_1)
    };

    let n = simple_roots.len();
    let mut cartan_matrix = vec![vec![0i64; n]; n];
    for (i, ai) in simple_roots.iter().enumerate() {
        for (j, aj) in simple_roots.iter().enumerate() {
            let entry = SubSystem::coroot_pairing(ai, aj);
            if !entry.denom().is_one() {
                return Err(Error::Internal("non-integral Cartan entry".into()));
            }
            cartan_matrix[i][j] = i64::try_from(entry.to_integer())
                .map_err(|_| Error::Internal("Cartan entry out of range".into()))?;
        }
    }

    let rho_vec = rho(&positive_roots, ambient_dim);
    let fundamental_weights = fundamental_weight_basis(&simple_roots, ambient_dim)?;

    Ok(RootSystem {
        family,
        rank,
        ambient_dim,
        simple_roots,
        positive_roots,
        cartan_matrix,
        rho: rho_vec,
        fundamental_weights,
        form_scale,
    })
}

/// Fundamental weights `ω_i` with `⟨ω_i, α_j^∨⟩ = δ_ij`, each taken inside
/// the span of the simple roots.
pub fn fundamental_weight_basis(
    simple_roots: &[WeightVector],
    ambient_dim: usize,
) -> Result<Vec<WeightVector>> {
    let n = simple_roots.len();
    let mut result = Vec::with_capacity(n);
    for i in 0..n {
        // Solve M c = e_i where M[j][k] = ⟨α_k, α_j^∨⟩.
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|j| {
                let mut row: Vec<Rat> = (0..n)
                    .map(|k| SubSystem::coroot_pairing(&simple_roots[k], &simple_roots[j]))
                    .collect();
                row.push(if i == j { Rat::one() } else { Rat::zero() });
                row
            })
            .collect();
        let c = gauss_solve(&mut m)
            .ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
        let mut w = WeightVector::zero(ambient_dim);
        for (ck, alpha) in c.iter().zip(simple_roots) {
            w = w.add(&alpha.scale(ck));
        }
        result.push(w);
    }
    Ok(result)
}

/// JSON document for `--dump-roots`.
#[derive(Debug, Serialize, Deserialize)]
pub struct RootSystemDump {
    pub family: String,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vec<String>>,
    pub positive_roots: Vec<Vec<String>>,
    pub rho: Vec<String>,
    pub form_scale: String,
}

impl RootSystemDump {
    pub fn from_system(rs: &RootSystem) -> Self {
        RootSystemDump {
            family: rs.family.letter().to_string(),
            rank: rs.rank,
            ambient_dim: rs.ambient_dim,
            simple_roots: rs.simple_roots.iter().map(|r| r.to_strings()).collect(),
            positive_roots: rs.positive_roots.iter().map(|r| r.to_strings()).collect(),
            rho: rs.rho.to_strings(),
            form_scale: rat_string(&rs.form_scale),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(coords: &[i64]) -> WeightVector {
        WeightVector::from_ints(coords)
    }

    #[test]
    fn a1_has_one_positive_root() {
        let rs = build_root_system(Family::A, 1).unwrap();
        assert_eq!(rs.positive_roots.len(), 1);
        assert_eq!(rs.rho, rs.positive_roots[0].scale(&rat(1, 2)));
    }

    #[test]
    fn bn_dn_root_lists_match_classical_description() {
        let b3 = build_root_system(Family::B, 3).unwrap();
        // ε_i ± ε_j (i<j) together with ε_i
        assert_eq!(b3.positive_roots.len(), 9);
        assert!(b3.is_root(&wv(&[1, -1, 0])));
        assert!(b3.is_root(&wv(&[1, 1, 0])));
        assert!(b3.is_root(&wv(&[0, 0, 1])));
        let d4 = build_root_system(Family::D, 4).unwrap();
        assert_eq!(d4.positive_roots.len(), 12);
        assert!(d4.is_root(&wv(&[1, 0, 0, -1])));
        assert!(!d4.is_root(&wv(&[1, 0, 0, 0])));
    }

    #[test]
    fn exceptional_positive_root_counts() {
        // cross-checked against (dim − rank)/2 with dims 52, 120, 248
        assert_eq!(build_root_system(Family::F, 4).unwrap().positive_roots.len(), 24);
        assert_eq!(build_root_system(Family::D, 8).unwrap().positive_roots.len(), 56);
        assert_eq!(build_root_system(Family::E, 8).unwrap().positive_roots.len(), 120);
        assert_eq!(build_root_system(Family::E, 7).unwrap().positive_roots.len(), 63);
        assert_eq!(build_root_system(Family::E, 6).unwrap().positive_roots.len(), 36);
        assert_eq!(build_root_system(Family::G, 2).unwrap().positive_roots.len(), 6);
    }

    #[test]
    fn invalid_systems_rejected() {
        assert!(build_root_system(Family::F, 5).is_err());
        assert!(build_root_system(Family::E, 9).is_err());
        assert!(build_root_system(Family::C, 2).is_err());
        assert!(build_root_system(Family::A, 0).is_err());
    }

    #[test]
    fn rho_formulas_for_b_and_d() {
        for n in 2..=8 {
            let b = build_root_system(Family::B, n).unwrap();
            let expected: Vec<Rat> = (0..n).map(|i| rat(2 * (n - i) as i64 - 1, 2)).collect();
            assert_eq!(b.rho, WeightVector::new(expected), "rho(B{n})");
            let d = build_root_system(Family::D, n).unwrap();
            let expected: Vec<Rat> = (0..n).map(|i| rat_int((n - 1 - i) as i64)).collect();
            assert_eq!(d.rho, WeightVector::new(expected), "rho(D{n})");
        }
    }

    #[test]
    fn long_roots_have_squared_length_two() {
        for (fam, rank) in [
            (Family::A, 3),
            (Family::B, 4),
            (Family::C, 3),
            (Family::D, 5),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let rs = build_root_system(fam, rank).unwrap();
            let max_sq = rs
                .positive_roots
                .iter()
                .map(|r| rs.inner(r, r).unwrap())
                .max()
                .unwrap();
            assert_eq!(max_sq, rat_int(2), "{}{}", fam.letter(), rank);
        }
    }

    #[test]
    fn ambient_basis_orthogonal_in_bn() {
        let b4 = build_root_system(Family::B, 4).unwrap();
        let e1 = wv(&[1, 0, 0, 0]);
        let e2 = wv(&[0, 1, 0, 0]);
        assert!(b4.inner(&e1, &e2).unwrap().is_zero());
    }

    #[test]
    fn inner_product_two_evaluations_agree() {
        // ⟨ρ, ρ⟩ via coordinates vs. via the positive-root expansion of 2ρ:
        // ⟨ρ, ρ⟩ = (1/4) Σ_{α,β>0} ⟨α, β⟩.
        let b4 = build_root_system(Family::B, 4).unwrap();
        let direct = b4.inner(&b4.rho, &b4.rho).unwrap();
        let mut acc = Rat::zero();
        for a in &b4.positive_roots {
            for b in &b4.positive_roots {
                acc += b4.inner(a, b).unwrap();
            }
        }
        assert_eq!(direct, acc / rat_int(4));
    }

    #[test]
    fn dominance_checks() {
        let b3 = build_root_system(Family::B, 3).unwrap();
        let x = wv(&[3, 2, 1]);
        assert!(is_strictly_dominant(&b3.positive_roots, &x));
        let d3 = build_root_system(Family::D, 3).unwrap();
        let y = wv(&[2, 2, -1]);
        assert!(is_dominant(&d3.positive_roots, &y));
        assert!(!is_strictly_dominant(&d3.positive_roots, &y));
        for (fam, rank) in [(Family::B, 3), (Family::D, 4), (Family::F, 4)] {
            let rs = build_root_system(fam, rank).unwrap();
            assert!(is_strictly_dominant(&rs.positive_roots, &rs.rho));
        }
    }

    #[test]
    fn positive_roots_sum_to_twice_rho() {
        for (fam, rank) in [
            (Family::A, 2),
            (Family::B, 5),
            (Family::C, 4),
            (Family::D, 6),
            (Family::E, 6),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let rs = build_root_system(fam, rank).unwrap();
            let sum = rs
                .positive_roots
                .iter()
                .fold(WeightVector::zero(rs.ambient_dim), |a, r| a.add(r));
            assert_eq!(sum, rs.rho.scale(&rat_int(2)));
        }
    }

    #[test]
    fn reflection_closure_of_positive_roots() {
        let rs = build_root_system(Family::F, 4).unwrap();
        for a in &rs.positive_roots {
            for b in &rs.positive_roots {
                if a == b {
                    continue;
                }
                let coeff = SubSystem::coroot_pairing(b, a);
                let img = b.sub(&a.scale(&coeff));
                assert!(rs.is_root(&img), "s_{a}({b}) is not a root");
            }
        }
    }

    #[test]
    fn fundamental_weights_dual_to_coroots() {
        for (fam, rank) in [(Family::B, 4), (Family::F, 4), (Family::G, 2), (Family::E, 6)] {
            let rs = build_root_system(fam, rank).unwrap();
            for (i, omega) in rs.fundamental_weights.iter().enumerate() {
                for (j, alpha) in rs.simple_roots.iter().enumerate() {
                    let p = SubSystem::coroot_pairing(omega, alpha);
                    let expected = if i == j { Rat::one() } else { Rat::zero() };
                    assert_eq!(p, expected);
                }
            }
        }
    }

    #[test]
    fn dump_roundtrip() {
        let rs = build_root_system(Family::B, 2).unwrap();
        let dump = RootSystemDump::from_system(&rs);
        let json = serde_json::to_string(&dump).unwrap();
        let back: RootSystemDump = serde_json::from_str(&json).unwrap();
        assert_eq!(back.positive_roots, dump.positive_roots);
    }

    #[test]
    fn rational_parse_and_print() {
        assert_eq!(rat_string(&parse_rat("3/6").unwrap()), "1/2");
        assert_eq!(rat_string(&parse_rat("-4/2").unwrap()), "-2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
