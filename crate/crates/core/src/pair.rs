//! Equal-rank pairs `B ⊂ F`: construction, validation, the missing-root set
//! `Φ⁺(F/B)`, and the named pair registry.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootspace::{
    build_root_system, is_strictly_dominant, rat, Family, RootSystem, SubSystem, WeightVector,
};

/// A full-rank sub-root-system `B` of `F` with positivity inherited from
/// `F`. `B` may be reducible or empty (a torus); the Cartan subalgebra is
/// shared, so all weights live in `F`'s ambient space.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EqualRankPair {
    pub f: RootSystem,
    pub b_simple_roots: Vec<WeightVector>,
    pub b_positive_roots: Vec<WeightVector>,
    /// `Φ⁺(F/B)`: positive roots of `F` that are not roots of `B`.
    pub missing_positive_roots: Vec<WeightVector>,
    pub rho_f: WeightVector,
    pub rho_b: WeightVector,
    pub name: Option<String>,
}

impl EqualRankPair {
    pub fn f_subsystem(&self) -> SubSystem {
        self.f.subsystem()
    }

    pub fn b_subsystem(&self) -> SubSystem {
        SubSystem {
            ambient_dim: self.f.ambient_dim,
            simple_roots: self.b_simple_roots.clone(),
            positive_roots: self.b_positive_roots.clone(),
            rho: self.rho_b.clone(),
            form_scale: self.f.form_scale.clone(),
        }
    }

    /// The index `m = |W(F)| / |W(B)|`, predicted from the order formulas.
    pub fn predicted_index(&self) -> Result<crate::Int> {
        let wf = crate::weyl::weyl_order(self.f.family, self.f.rank)?;
        let wb = crate::weyl::subsystem_weyl_order(&self.b_subsystem())?;
        Ok(wf / wb)
    }

    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("{}-custom", self.f.name()))
    }
}

/// Closes a set of roots of `F` into a sub-root-system: the orbit of the
/// generators under the reflection group they generate.
fn subsystem_closure(generators: &[WeightVector]) -> Vec<WeightVector> {
    let mut roots: BTreeSet<WeightVector> = BTreeSet::new();
    for g in generators {
        roots.insert(g.clone());
        roots.insert(g.neg());
    }
    loop {
        let snapshot: Vec<WeightVector> = roots.iter().cloned().collect();
        let before = roots.len();
        for a in &snapshot {
            for b in &snapshot {
                roots.insert(crate::weyl::reflect_raw(a, b));
            }
        }
        if roots.len() == before {
            break;
        }
    }
    roots.into_iter().collect()
}

/// Indecomposable elements of a positive system: those not expressible as a
/// sum of two other positives.
fn indecomposables(positives: &[WeightVector]) -> Vec<WeightVector> {
    let set: BTreeSet<&WeightVector> = positives.iter().collect();
    positives
        .iter()
        .filter(|candidate| {
            !positives.iter().any(|a| {
                let rest = candidate.sub(a);
                a != *candidate && set.contains(&rest)
            })
        })
        .cloned()
        .collect()
}

/// Builds a validated pair from `B`'s simple roots given in `F`'s ambient
/// coordinates. An empty list yields the torus pair.
pub fn make_pair(
    f: RootSystem,
    b_simple_roots: &[WeightVector],
    name: Option<String>,
) -> Result<EqualRankPair> {
    for candidate in b_simple_roots {
        if candidate.dim() != f.ambient_dim {
            return Err(Error::DimensionMismatch(candidate.dim(), f.ambient_dim));
        }
        if !f.is_root(candidate) {
            return Err(Error::InvalidPair(format!(
                "{candidate} is not a root of {}",
                f.name()
            )));
        }
    }
    let closure = subsystem_closure(b_simple_roots);
    let f_positive: BTreeSet<&WeightVector> = f.positive_roots.iter().collect();
    for r in &closure {
        if !f.is_root(r) {
            return Err(Error::InvalidPair(format!(
                "generated subsystem leaves the roots of {}: {r}",
                f.name()
            )));
        }
    }
    // Positivity inherited from F: a B root is B-positive iff F-positive.
    let b_positive_roots: Vec<WeightVector> = f
        .positive_roots
        .iter()
        .filter(|r| closure.contains(r))
        .cloned()
        .collect();
    let derived_simples = indecomposables(&b_positive_roots);
    let candidate_set: BTreeSet<&WeightVector> = b_simple_roots.iter().collect();
    let derived_set: BTreeSet<&WeightVector> = derived_simples.iter().collect();
    if candidate_set != derived_set {
        return Err(Error::InvalidPair(format!(
            "candidate roots are not the simple system of the subsystem they generate \
             (derived simples: {:?})",
            derived_simples
        )));
    }
    let missing_positive_roots: Vec<WeightVector> = f
        .positive_roots
        .iter()
        .filter(|r| !closure.contains(r))
        .cloned()
        .collect();
    debug_assert!(missing_positive_roots
        .iter()
        .all(|r| f_positive.contains(r)));
    let rho_f = f.rho.clone();
    let rho_b = crate::rootspace::rho(&b_positive_roots, f.ambient_dim);

    // ρ_F − ρ_B must be half the sum of the missing roots (set partition).
    let half_missing_sum = crate::rootspace::rho(&missing_positive_roots, f.ambient_dim);
    if rho_f.sub(&rho_b) != half_missing_sum {
        return Err(Error::Internal(
            "rho_F - rho_B does not match the missing-root half-sum".into(),
        ));
    }
    if !is_strictly_dominant(&b_positive_roots, &rho_f) {
        return Err(Error::InvalidPair(
            "rho_F is not strictly B-dominant; positivity is inconsistent".into(),
        ));
    }

    Ok(EqualRankPair {
        f,
        b_simple_roots: indecomposables(&b_positive_roots),
        b_positive_roots,
        missing_positive_roots,
        rho_f,
        rho_b,
        name,
    })
}

/// Borel–de Siebenthal construction: remove one node from the extended
/// Dynkin diagram of `F` (node 0 is the lowest root) and close the remaining
/// nodes into a sub-root-system.
pub fn borel_de_siebenthal(
    f: RootSystem,
    removed_node: usize,
    name: Option<String>,
) -> Result<EqualRankPair> {
    let highest = f
        .positive_roots
        .last()
        .ok_or_else(|| Error::InvalidPair("torus-like system has no highest root".into()))?
        .clone();
    let mut nodes = vec![highest.neg()];
    nodes.extend(f.simple_roots.iter().cloned());
    if removed_node >= nodes.len() {
        return Err(Error::InvalidPair(format!(
            "extended diagram of {} has nodes 0..={}, got {removed_node}",
            f.name(),
            nodes.len() - 1
        )));
    }
    nodes.remove(removed_node);
    let closure = subsystem_closure(&nodes);
    let b_positive: Vec<WeightVector> = f
        .positive_roots
        .iter()
        .filter(|r| closure.contains(r))
        .cloned()
        .collect();
    let simples = indecomposables(&b_positive);
    make_pair(f, &simples, name)
}

/// How a registry entry constructs its `B`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PairConstructor {
    /// Explicit simple roots of `B` in `F`'s ambient coordinates, as
    /// rational strings.
    SimpleRoots { roots: Vec<Vec<String>> },
    /// Extended-Dynkin-diagram node removal (node 0 = lowest root).
    BdsNode { node: usize },
    /// The maximal torus: `B` has no roots.
    Torus,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegistryEntry {
    pub name: String,
    pub family: String,
    pub rank: usize,
    #[serde(flatten)]
    pub constructor: PairConstructor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Registry {
    pub pairs: Vec<RegistryEntry>,
}

impl Registry {
    pub fn builtin() -> Registry {
        serde_json::from_str(include_str!("../data/pairs.json"))
            .expect("embedded registry parses")
    }

    pub fn load(path: &std::path::Path) -> Result<Registry> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Registry(format!("cannot read {}: {e}", path.display())))?;
        let reg: Registry = serde_json::from_str(&text)
            .map_err(|e| Error::Registry(format!("cannot parse {}: {e}", path.display())))?;
        let mut names = BTreeSet::new();
        for entry in &reg.pairs {
            if !names.insert(entry.name.clone()) {
                return Err(Error::Registry(format!("duplicate pair name {}", entry.name)));
            }
        }
        Ok(reg)
    }

    pub fn build(&self, entry: &RegistryEntry) -> Result<EqualRankPair> {
        let family: Family = entry.family.parse()?;
        let f = build_root_system(family, entry.rank)?;
        let name = Some(entry.name.clone());
        match &entry.constructor {
            PairConstructor::SimpleRoots { roots } => {
                let simples: Vec<WeightVector> = roots
                    .iter()
                    .map(|r| WeightVector::from_strings(r))
                    .collect::<Result<_>>()?;
                make_pair(f, &simples, name)
            }
            PairConstructor::BdsNode { node } => borel_de_siebenthal(f, *node, name),
            PairConstructor::Torus => make_pair(f, &[], name),
        }
    }

    /// Resolves a pair by name. Besides registry entries, two parameterized
    /// names are recognized: `Bn-Dn` (requires `rank`) and `torus-<F><k>`
    /// (e.g. `torus-F4`).
    pub fn resolve(&self, name: &str, rank: Option<usize>) -> Result<EqualRankPair> {
        if name == "Bn-Dn" {
            let n = rank.ok_or_else(|| {
                Error::Registry("pair Bn-Dn needs --rank".into())
            })?;
            return bn_dn_pair(n);
        }
        if let Some(rest) = name.strip_prefix("torus-") {
            let (family, rank) = parse_type_name(rest)?;
            let f = build_root_system(family, rank)?;
            return make_pair(f, &[], Some(name.to_string()));
        }
        match self.pairs.iter().find(|e| e.name == name) {
            Some(entry) => self.build(entry),
            None => Err(Error::Registry(format!(
                "unknown pair {name:?}; see `pairs list`"
            ))),
        }
    }
}

fn parse_type_name(s: &str) -> Result<(Family, usize)> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Registry("empty type name".into()));
    }
    let family: Family = s[..1].parse()?;
    let rank: usize = s[1..]
        .parse()
        .map_err(|_| Error::Registry(format!("bad rank in type name {s:?}")))?;
    Ok((family, rank))
}

/// The pair `D_n ⊂ B_n` (for `n = 1` the `D_1` side is a torus).
pub fn bn_dn_pair(n: usize) -> Result<EqualRankPair> {
    let f = build_root_system(Family::B, n)?;
    let name = Some(format!("B{n}-D{n}"));
    if n == 1 {
        return make_pair(f, &[], name);
    }
    let mut simples: Vec<WeightVector> = Vec::new();
    for i in 0..n - 1 {
        let mut v = vec![rat(0, 1); n];
        v[i] = rat(1, 1);
        v[i + 1] = rat(-1, 1);
        simples.push(WeightVector::new(v));
    }
    let mut v = vec![rat(0, 1); n];
    v[n - 2] = rat(1, 1);
    v[n - 1] = rat(1, 1);
    simples.push(WeightVector::new(v));
    make_pair(f, &simples, name)
}

/// Positive roots of `F` not in `B`, in canonical (height, lex) order.
pub fn missing_positive_roots(pair: &EqualRankPair) -> Vec<WeightVector> {
    pair.missing_positive_roots.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootspace::WeightVector;
    use crate::Int;

    #[test]
    fn dn_inside_bn_has_short_missing_roots() {
        let pair = bn_dn_pair(4).unwrap();
        assert_eq!(pair.b_positive_roots.len(), 12);
        assert_eq!(pair.missing_positive_roots.len(), 4);
        for i in 0..4 {
            let mut v = vec![0i64; 4];
            v[i] = 1;
            assert!(pair
                .missing_positive_roots
                .contains(&WeightVector::from_ints(&v)));
        }
        assert_eq!(pair.predicted_index().unwrap(), Int::from(2));
    }

    #[test]
    fn torus_pair_misses_everything() {
        let f4 = build_root_system(Family::F, 4).unwrap();
        let pair = make_pair(f4, &[], None).unwrap();
        assert_eq!(pair.missing_positive_roots.len(), 24);
        assert!(pair.rho_b.is_zero());
        assert_eq!(pair.predicted_index().unwrap(), Int::from(1152));
    }

    #[test]
    fn b4_inside_f4() {
        let reg = Registry::builtin();
        let pair = reg.resolve("F4-B4", None).unwrap();
        assert_eq!(pair.b_positive_roots.len(), 16);
        assert_eq!(pair.missing_positive_roots.len(), 8);
        // dim F − dim B = 52 − 36 = 16 = 2·|Φ⁺(F/B)|
        assert_eq!(2 * pair.missing_positive_roots.len(), 16);
        assert_eq!(pair.predicted_index().unwrap(), Int::from(3));
        // the missing roots are all short
        for psi in &pair.missing_positive_roots {
            assert_eq!(pair.f.inner(psi, psi).unwrap(), crate::rootspace::rat_int(1));
        }
    }

    #[test]
    fn d8_inside_e8() {
        let reg = Registry::builtin();
        let pair = reg.resolve("E8-D8", None).unwrap();
        assert_eq!(pair.b_positive_roots.len(), 56);
        assert_eq!(pair.missing_positive_roots.len(), 64);
        assert_eq!(pair.predicted_index().unwrap(), Int::from(135));
    }

    #[test]
    fn bds_scan_finds_unique_nodes_for_paper_pairs() {
        // The registry node choices are exactly those extended-diagram
        // removals realizing index 3 (F4) and 135 (E8).
        let mut f4_nodes = vec![];
        for node in 0..=4 {
            let f4 = build_root_system(Family::F, 4).unwrap();
            if let Ok(pair) = borel_de_siebenthal(f4, node, None) {
                if pair.predicted_index().unwrap() == Int::from(3) {
                    f4_nodes.push(node);
                }
            }
        }
        assert_eq!(f4_nodes, vec![4]);
        let mut e8_nodes = vec![];
        for node in 0..=8 {
            let e8 = build_root_system(Family::E, 8).unwrap();
            if let Ok(pair) = borel_de_siebenthal(e8, node, None) {
                if pair.predicted_index().unwrap() == Int::from(135) {
                    e8_nodes.push(node);
                }
            }
        }
        assert_eq!(e8_nodes, vec![1]);
    }

    #[test]
    fn rho_difference_is_half_missing_sum() {
        for pair in [
            bn_dn_pair(3).unwrap(),
            Registry::builtin().resolve("F4-B4", None).unwrap(),
        ] {
            let sum = pair
                .missing_positive_roots
                .iter()
                .fold(WeightVector::zero(pair.f.ambient_dim), |a, r| a.add(r));
            assert_eq!(
                sum,
                pair.rho_f.sub(&pair.rho_b).scale(&crate::rootspace::rat_int(2))
            );
        }
    }

    #[test]
    fn non_simple_candidates_rejected() {
        // ε_1 − ε_2 and ε_2 − ε_3 plus their sum is not a simple system.
        let b3 = build_root_system(Family::B, 3).unwrap();
        let roots = [
            WeightVector::from_ints(&[1, -1, 0]),
            WeightVector::from_ints(&[0, 1, -1]),
            WeightVector::from_ints(&[1, 0, -1]),
        ];
        assert!(make_pair(b3, &roots, None).is_err());
    }

    #[test]
    fn non_root_candidates_rejected() {
        let b3 = build_root_system(Family::B, 3).unwrap();
        let roots = [WeightVector::from_ints(&[2, 0, 0])];
        assert!(make_pair(b3, &roots, None).is_err());
    }

    #[test]
    fn registry_roundtrip() {
        let reg = Registry::builtin();
        let pair = reg.resolve("F4-B4", None).unwrap();
        let json = serde_json::to_string(&pair).unwrap();
        let back: EqualRankPair = serde_json::from_str(&json).unwrap();
        assert_eq!(back.b_positive_roots, pair.b_positive_roots);
        assert_eq!(back.missing_positive_roots, pair.missing_positive_roots);
    }

    #[test]
    fn a1_bds_reproduces_a1() {
        // Removing either extended node of A1 leaves a single root, so B is
        // A1 itself (the trivial pair), never a torus.
        let a1 = build_root_system(Family::A, 1).unwrap();
        let pair = borel_de_siebenthal(a1, 1, None).unwrap();
        assert_eq!(pair.b_positive_roots.len(), 1);
        assert_eq!(pair.predicted_index().unwrap(), Int::from(1));
    }
}
