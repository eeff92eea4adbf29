//! Phi-class geometries.
//!
//! A [`PhiSystem`] is a finite ground set together with a family of
//! designated subsets, the phi-classes. The closure of a subset `u` is its
//! *common region*: the intersection of every phi-class containing `u`.
//! From that one operator the module derives the phi-prime, phi-axial and
//! phi-maximal predicates and the phi-dimension number, checks the five
//! generalized geometrical axioms (lambda, mu, nu', pi, rho), and checks
//! the classical propositions about dimension and maximality on concrete
//! instances.
//!
//! All checkers are exhaustive over subsets and report the first
//! counterexample in canonical (ascending mask) order, so failures are
//! reproducible verbatim.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{Check, Verdict, Witness};
use crate::sets::{submasks, GroundSet, Subset, SubsetFamily};

/// Default ground-size cap for the exhaustive pi/rho and proposition
/// checks, which enumerate pairs or triples of subsets.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 10;

/// Largest cap the CLI accepts for the exhaustive checks.
pub const MAX_EXHAUSTIVE_CAP: usize = 12;

const CM_NONE: u32 = u32::MAX;
const DIM_NONE: u8 = u8::MAX;

/// A ground set plus its designated phi-classes.
///
/// Closure, primality and dimension tables are built eagerly at
/// construction; the two maximality tables are built on first use behind
/// a [`OnceLock`], so concurrent readers always observe complete tables.
pub struct PhiSystem {
    ground: GroundSet,
    classes: SubsetFamily,
    /// mask -> common-region mask, or `CM_NONE` when no class contains it.
    cm: Vec<u32>,
    /// mask -> is the subset phi-prime.
    prime: Vec<bool>,
    /// common-region mask -> largest cardinality of a phi-prime set with
    /// that region, or `DIM_NONE` when no phi-prime set closes there.
    dim_of: Vec<u8>,
    maximal_b: OnceLock<Vec<bool>>,
    maximal_a: OnceLock<Vec<bool>>,
}

impl fmt::Debug for PhiSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PhiSystem")
            .field("ground", &self.ground.labels())
            .field("classes", &self.classes.len())
            .finish()
    }
}

/// Both readings of the phi-maximal predicate for one subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Maximality {
    /// Every phi-prime subset with the same common region is phi-axial
    /// (the canonical reading used everywhere in this crate).
    pub equivalent_primes_axial: bool,
    /// Every phi-prime subset is phi-axial, equivalent or not (the
    /// stricter reading; reported alongside so disagreements surface).
    pub all_primes_axial: bool,
}

/// The five generalized geometrical axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Lambda,
    Mu,
    NuPrime,
    Pi,
    Rho,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Lambda => "lambda",
            Axiom::Mu => "mu",
            Axiom::NuPrime => "nu'",
            Axiom::Pi => "pi",
            Axiom::Rho => "rho",
        })
    }
}

/// Verdicts of the five axioms on one system, with a witness for each
/// failure.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub lambda: Check,
    pub mu: Check,
    pub nu_prime: Check,
    pub pi: Check,
    pub rho: Check,
}

impl AxiomReport {
    pub fn entries(&self) -> [&Check; 5] {
        [&self.lambda, &self.mu, &self.nu_prime, &self.pi, &self.rho]
    }

    pub fn overall(&self) -> bool {
        self.entries().iter().all(|c| c.passed())
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.entries().into_iter().find(|c| !c.passed())
    }
}

/// The propositions the checker knows how to instantiate exhaustively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub enum PropositionId {
    /// Region containment bounds dimension: cm(v) <= cm(u) forces
    /// dim(v) <= dim(u).
    W1221,
    /// Under region containment, equal regions and equal dimensions
    /// coincide.
    W1223,
    /// Every nonempty set has a phi-prime subset with the same region.
    W1237,
    /// If v is phi-prime, x lies outside its region, and v + x is
    /// phi-maximal, then v and v + x are phi-axial and the dimension
    /// grows by exactly one.
    Lemma1,
    /// Every nonempty subset of a phi-maximal set is phi-maximal.
    W1311,
    /// A subset is phi-prime iff it is phi-axial.
    Tau,
}

impl PropositionId {
    pub const ALL: [PropositionId; 6] = [
        PropositionId::W1221,
        PropositionId::W1223,
        PropositionId::W1237,
        PropositionId::Lemma1,
        PropositionId::W1311,
        PropositionId::Tau,
    ];
}

impl fmt::Display for PropositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PropositionId::W1221 => "W.12.21",
            PropositionId::W1223 => "W.12.23",
            PropositionId::W1237 => "W.12.37",
            PropositionId::Lemma1 => "Lemma1",
            PropositionId::W1311 => "W.13.11",
            PropositionId::Tau => "tau",
        })
    }
}

impl From<PropositionId> for String {
    fn from(id: PropositionId) -> String {
        id.to_string()
    }
}

impl FromStr for PropositionId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "W.12.21" | "w.12.21" => Ok(PropositionId::W1221),
            "W.12.23" | "w.12.23" => Ok(PropositionId::W1223),
            "W.12.37" | "w.12.37" => Ok(PropositionId::W1237),
            "Lemma1" | "lemma1" => Ok(PropositionId::Lemma1),
            "W.13.11" | "w.13.11" => Ok(PropositionId::W1311),
            "tau" | "Tau" => Ok(PropositionId::Tau),
            other => Err(format!(
                "unknown proposition `{other}` (expected W.12.21, W.12.23, W.12.37, Lemma1, W.13.11 or tau)"
            )),
        }
    }
}

/// Verdict of one proposition on one system.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub id: PropositionId,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl PropertyReport {
    fn pass(id: PropositionId) -> Self {
        PropertyReport {
            id,
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    fn fail(id: PropositionId, witness: Witness) -> Self {
        PropertyReport {
            id,
            verdict: Verdict::Fail,
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(w) => write!(f, "{:<32} {}  witness {}", self.id.to_string(), self.verdict, w),
            None => write!(f, "{:<32} {}", self.id.to_string(), self.verdict),
        }
    }
}

impl PhiSystem {
    pub fn new(ground: GroundSet, classes: SubsetFamily) -> Result<Self> {
        if classes.ground() != &ground {
            return Err(Error::MismatchedGround);
        }
        let n = ground.size();
        let size = 1usize << n;

        // Common-region table: and every class into each of its subsets.
        // Untouched entries keep high bits set, marking "no containing
        // class"; any single AND with a 16-bit class mask clears them.
        let mut cm = vec![CM_NONE; size];
        for &c in classes.masks() {
            for s in submasks(c) {
                cm[s as usize] &= u32::from(c);
            }
        }

        // Phi-prime via single deletions: u is phi-prime iff no deletion
        // of one element keeps the region. For intersection closures this
        // matches the all-proper-subsets definition (monotonicity squeezes
        // any equal-region proper subset through a one-element deletion);
        // the test suite cross-checks the two on small instances.
        let mut prime = vec![false; size];
        for m in 1..size {
            let c = cm[m];
            if c == CM_NONE {
                continue;
            }
            let mut p = true;
            let mut rest = m as u16;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if cm[m & !(bit as usize)] == c {
                    p = false;
                    break;
                }
            }
            prime[m] = p;
        }

        let mut dim_of = vec![DIM_NONE; size];
        for m in 0..size {
            if prime[m] {
                let c = cm[m] as usize;
                let card = (m as u16).count_ones() as u8;
                if dim_of[c] == DIM_NONE || card > dim_of[c] {
                    dim_of[c] = card;
                }
            }
        }

        Ok(PhiSystem {
            ground,
            classes,
            cm,
            prime,
            dim_of,
            maximal_b: OnceLock::new(),
            maximal_a: OnceLock::new(),
        })
    }

    /// Convenience constructor from raw class masks.
    pub fn from_class_masks(ground: GroundSet, masks: Vec<u16>) -> Result<Self> {
        let classes = SubsetFamily::from_masks(&ground, masks);
        PhiSystem::new(ground, classes)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn phi_classes(&self) -> &SubsetFamily {
        &self.classes
    }

    fn subset_index(&self, u: &Subset) -> Result<usize> {
        if u.ground() != &self.ground {
            return Err(Error::MismatchedGround);
        }
        Ok(u.mask() as usize)
    }

    fn subset(&self, mask: u16) -> Subset {
        self.ground.subset_from_mask(mask).expect("mask in range")
    }

    pub(crate) fn cm_mask(&self, mask: u16) -> Option<u16> {
        let c = self.cm[mask as usize];
        (c != CM_NONE).then_some(c as u16)
    }

    pub(crate) fn prime_mask(&self, mask: u16) -> bool {
        self.prime[mask as usize]
    }

    pub(crate) fn axial_mask(&self, mask: u16) -> bool {
        if !self.prime[mask as usize] {
            return false;
        }
        let c = self.cm[mask as usize] as usize;
        self.dim_of[c] == mask.count_ones() as u8
    }

    pub(crate) fn dim_of_mask(&self, mask: u16) -> Option<usize> {
        let c = self.cm[mask as usize];
        if c == CM_NONE {
            return None;
        }
        let d = self.dim_of[c as usize];
        (d != DIM_NONE).then_some(d as usize)
    }

    /// Canonical maximality (every equivalent phi-prime subset is axial)
    /// for every mask, built on first use.
    fn maximal_b_table(&self) -> &[bool] {
        self.maximal_b.get_or_init(|| {
            (0..self.cm.len())
                .map(|m| {
                    let c = self.cm[m];
                    submasks(m as u16).all(|t| {
                        !self.prime[t as usize]
                            || self.cm[t as usize] != c
                            || self.axial_mask(t)
                    })
                })
                .collect()
        })
    }

    fn maximal_a_table(&self) -> &[bool] {
        self.maximal_a.get_or_init(|| {
            (0..self.cm.len())
                .map(|m| {
                    submasks(m as u16).all(|t| !self.prime[t as usize] || self.axial_mask(t))
                })
                .collect()
        })
    }

    pub(crate) fn maximal_mask(&self, mask: u16) -> bool {
        self.maximal_b_table()[mask as usize]
    }

    /// The common region of `u`: the intersection of every phi-class
    /// containing `u`. Errors when no phi-class contains `u` (cannot
    /// happen when axiom lambda holds).
    pub fn common_region(&self, u: &Subset) -> Result<Subset> {
        let i = self.subset_index(u)?;
        match self.cm[i] {
            CM_NONE => Err(Error::NoContainingClass(u.to_string())),
            c => Ok(self.subset(c as u16)),
        }
    }

    /// True iff `u` and `v` have the same common region.
    pub fn is_phi_equivalent(&self, u: &Subset, v: &Subset) -> Result<bool> {
        Ok(self.common_region(u)? == self.common_region(v)?)
    }

    /// True iff `u` is nonempty and no proper subset of `u` has the same
    /// common region. Subsets without a containing class are not
    /// phi-prime (their region is undefined, so nothing shares it).
    pub fn is_phi_prime(&self, u: &Subset) -> Result<bool> {
        let i = self.subset_index(u)?;
        Ok(self.prime[i])
    }

    /// A minimum-cardinality subset of `u` with the same common region;
    /// ties break to the canonically first. The result is phi-prime and
    /// phi-equivalent to `u`.
    ///
    /// When the empty set already has the region of `u` (ruled out by
    /// axiom nu'), no phi-prime equivalent exists and the reduction is
    /// undefined.
    pub fn phi_prime_reduction(&self, u: &Subset) -> Result<Subset> {
        let i = self.subset_index(u)?;
        if u.is_empty() {
            return Err(Error::UndefinedOnEmpty);
        }
        let c = self.cm[i];
        if c == CM_NONE {
            return Err(Error::NoContainingClass(u.to_string()));
        }
        if self.cm[0] == c {
            return Err(Error::DimensionUndefined(u.to_string()));
        }
        let mut best: Option<u16> = None;
        for t in submasks(u.mask()) {
            if t != 0
                && self.cm[t as usize] == c
                && best.is_none_or(|b| t.count_ones() < b.count_ones())
            {
                best = Some(t);
            }
        }
        let best = best.expect("u itself has region c");
        // Minimality forces primality: a proper equal-region subset of
        // the winner would have beaten it.
        debug_assert!(self.prime[best as usize]);
        Ok(self.subset(best))
    }

    /// True iff `u` is phi-prime of maximum cardinality among phi-prime
    /// sets with the same common region.
    pub fn is_phi_axial(&self, u: &Subset) -> Result<bool> {
        let i = self.subset_index(u)?;
        Ok(self.axial_mask(i as u16))
    }

    /// The phi-dimension number of a nonempty `u`: the cardinality of a
    /// phi-axial set with the same common region.
    pub fn dimension(&self, u: &Subset) -> Result<usize> {
        let i = self.subset_index(u)?;
        if u.is_empty() {
            return Err(Error::UndefinedOnEmpty);
        }
        if self.cm[i] == CM_NONE {
            return Err(Error::NoContainingClass(u.to_string()));
        }
        self.dim_of_mask(i as u16)
            .ok_or_else(|| Error::DimensionUndefined(u.to_string()))
    }

    /// Canonical phi-maximality of a nonempty `u`.
    pub fn is_phi_maximal(&self, u: &Subset) -> Result<bool> {
        Ok(self.phi_maximality(u)?.equivalent_primes_axial)
    }

    /// Both readings of phi-maximality for a nonempty `u`.
    pub fn phi_maximality(&self, u: &Subset) -> Result<Maximality> {
        let i = self.subset_index(u)?;
        if u.is_empty() {
            return Err(Error::UndefinedOnEmpty);
        }
        Ok(Maximality {
            equivalent_primes_axial: self.maximal_b_table()[i],
            all_primes_axial: self.maximal_a_table()[i],
        })
    }

    /// First nonempty subset on which the two maximality readings
    /// disagree, if any.
    pub fn maximality_disagreement(&self) -> Option<Subset> {
        let b = self.maximal_b_table();
        let a = self.maximal_a_table();
        (1..self.cm.len())
            .find(|&m| a[m] != b[m])
            .map(|m| self.subset(m as u16))
    }

    /// All phi-prime subsets, in canonical order.
    pub fn primes(&self) -> SubsetFamily {
        let masks = (0..self.cm.len())
            .filter(|&m| self.prime[m])
            .map(|m| m as u16)
            .collect();
        SubsetFamily::from_masks(&self.ground, masks)
    }

    /// All phi-axial subsets, in canonical order.
    pub fn axials(&self) -> SubsetFamily {
        let masks = (0..self.cm.len())
            .filter(|&m| self.axial_mask(m as u16))
            .map(|m| m as u16)
            .collect();
        SubsetFamily::from_masks(&self.ground, masks)
    }

    /// Checks the five axioms with the default exhaustive cap.
    pub fn check_axioms(&self) -> Result<AxiomReport> {
        self.check_axioms_capped(DEFAULT_EXHAUSTIVE_CAP)
    }

    /// Checks the five axioms; pi and rho enumerate pairs of subsets, so
    /// the ground size must not exceed `cap`.
    pub fn check_axioms_capped(&self, cap: usize) -> Result<AxiomReport> {
        let n = self.ground.size();
        if n > cap {
            return Err(Error::CapExceeded { size: n, cap });
        }
        Ok(AxiomReport {
            lambda: self.check_lambda(),
            mu: self.check_mu(),
            nu_prime: self.check_nu_prime(),
            pi: self.check_pi(),
            rho: self.check_rho(),
        })
    }

    fn check_lambda(&self) -> Check {
        if self.classes.contains_mask(self.ground.full_mask()) {
            Check::pass("lambda")
        } else {
            Check::fail(
                "lambda",
                Witness::new(
                    "the full set is not a designated phi-class",
                    vec![self.ground.full_subset()],
                ),
            )
        }
    }

    fn check_mu(&self) -> Check {
        for i in 0..self.ground.size() {
            if !self.classes.contains_mask(1 << i) {
                return Check::fail(
                    "mu",
                    Witness::new(
                        "singleton is not a designated phi-class",
                        vec![self.subset(1 << i)],
                    ),
                );
            }
        }
        Check::pass("mu")
    }

    fn check_nu_prime(&self) -> Check {
        // Intersection of all classes; the empty family intersects to the
        // full set by convention.
        let all = if self.classes.is_empty() {
            self.ground.full_mask()
        } else {
            debug_assert_ne!(self.cm[0], CM_NONE);
            self.cm[0] as u16
        };
        if all != 0 {
            return Check::fail(
                "nu'",
                Witness::new(
                    "the common region of the empty set is nonempty",
                    vec![self.subset(all)],
                ),
            );
        }
        let full = self.ground.full_mask();
        if full == 0 || self.dim_of_mask(full).is_none() {
            return Check::fail(
                "nu'",
                Witness::new(
                    "the phi-dimension of the full set is undefined",
                    vec![self.ground.full_subset()],
                ),
            );
        }
        Check::pass("nu'")
    }

    /// Axiom pi: for every `u` and every phi-axial `v` inside the common
    /// region of `u`, some phi-axial extension of `v` is phi-equivalent
    /// to `u`.
    ///
    /// Any qualifying extension `t` satisfies `t ⊆ cm(u)` and
    /// `|t| = dim(u)` outright (it is axial with region `cm(u)`), so the
    /// search enumerates exactly those candidates. The unpruned search is
    /// re-run against this one in the test suite.
    ///
    /// The instance `u = ∅` is vacuous whenever `cm(∅) = ∅`: the empty
    /// region has no phi-axial subsets.
    fn check_pi(&self) -> Check {
        let size = self.cm.len();
        // The instance for `u` depends only on cm(u); memoize per region.
        let mut by_region: Vec<Option<Option<u16>>> = vec![None; size];
        for m in 0..size {
            let c = self.cm[m];
            if c == CM_NONE {
                // No axial subsets of an undefined region: vacuous.
                continue;
            }
            let region = c as u16;
            let verdict = *by_region[region as usize]
                .get_or_insert_with(|| self.pi_failing_v(region));
            if let Some(v) = verdict {
                return Check::fail(
                    "pi",
                    Witness::new(
                        "no phi-axial extension of the second set is phi-equivalent to the first",
                        vec![self.subset(m as u16), self.subset(v)],
                    ),
                );
            }
        }
        Check::pass("pi")
    }

    /// First phi-axial `v` inside `region` with no qualifying extension.
    fn pi_failing_v(&self, region: u16) -> Option<u16> {
        let dim = {
            let d = self.dim_of[region as usize];
            (d != DIM_NONE).then_some(d as u32)
        };
        for v in submasks(region) {
            if !self.axial_mask(v) {
                continue;
            }
            let Some(dim) = dim else {
                return Some(v); // no set of any size closes to this region
            };
            let have = v.count_ones();
            if have > dim {
                return Some(v);
            }
            let free = region & !v;
            if !self.exists_axial_superset(v, free, (dim - have) as usize, region) {
                return Some(v);
            }
        }
        None
    }

    /// Is there a phi-axial `t = v ∪ w` with `w ⊆ free`, `|w| = need`, and
    /// common region `region`?
    fn exists_axial_superset(&self, v: u16, free: u16, need: usize, region: u16) -> bool {
        let bits: Vec<u16> = (0..16).map(|i| 1u16 << i).filter(|b| free & b != 0).collect();
        let mut chosen = vec![0usize; need];
        self.combinations(v, &bits, &mut chosen, 0, 0, region)
    }

    fn combinations(
        &self,
        acc: u16,
        bits: &[u16],
        chosen: &mut [usize],
        depth: usize,
        start: usize,
        region: u16,
    ) -> bool {
        if depth == chosen.len() {
            return self.axial_mask(acc) && self.cm[acc as usize] == u32::from(region);
        }
        for i in start..bits.len() {
            chosen[depth] = i;
            if self.combinations(acc | bits[i], bits, chosen, depth + 1, i + 1, region) {
                return true;
            }
        }
        false
    }

    /// Axiom rho: phi-axial sets sharing at least two elements have a
    /// phi-maximal union.
    fn check_rho(&self) -> Check {
        let axials: Vec<u16> = (0..self.cm.len())
            .map(|m| m as u16)
            .filter(|&m| self.axial_mask(m))
            .collect();
        for (i, &u) in axials.iter().enumerate() {
            for &v in &axials[i..] {
                if (u & v).count_ones() < 2 {
                    continue;
                }
                if !self.maximal_mask(u | v) {
                    return Check::fail(
                        "rho",
                        Witness::new(
                            "union of the two phi-axial sets is not phi-maximal",
                            vec![self.subset(u), self.subset(v)],
                        ),
                    );
                }
            }
        }
        Check::pass("rho")
    }

    /// Checks one proposition with the default exhaustive cap.
    pub fn check_proposition(&self, id: PropositionId) -> Result<PropertyReport> {
        self.check_proposition_capped(id, DEFAULT_EXHAUSTIVE_CAP)
    }

    /// Exhaustively instantiates a proposition's hypothesis over all
    /// subsets and confirms its conclusion, returning the first
    /// counterexample otherwise.
    pub fn check_proposition_capped(
        &self,
        id: PropositionId,
        cap: usize,
    ) -> Result<PropertyReport> {
        let n = self.ground.size();
        if n > cap {
            return Err(Error::CapExceeded { size: n, cap });
        }
        Ok(match id {
            PropositionId::W1221 => self.check_dim_monotone(),
            PropositionId::W1223 => self.check_dim_equality(),
            PropositionId::W1237 => self.check_prime_reduction_exists(),
            PropositionId::Lemma1 => self.check_extension_lemma(),
            PropositionId::W1311 => self.check_maximal_heredity(),
            PropositionId::Tau => self.check_tau(),
        })
    }

    /// Runs all six propositions.
    pub fn check_all_propositions(&self, cap: usize) -> Result<Vec<PropertyReport>> {
        PropositionId::ALL
            .iter()
            .map(|&id| self.check_proposition_capped(id, cap))
            .collect()
    }

    fn check_dim_monotone(&self) -> PropertyReport {
        let id = PropositionId::W1221;
        let size = self.cm.len();
        for u in 0..size {
            let cu = self.cm[u];
            if cu == CM_NONE {
                continue;
            }
            for v in 1..size {
                let cv = self.cm[v];
                if cv == CM_NONE || cv & !cu != 0 {
                    continue;
                }
                let du = self.dim_class(cu);
                let dv = self.dim_class(cv);
                let ok = match (dv, du) {
                    (Some(dv), Some(du)) => dv <= du,
                    _ => false,
                };
                if !ok {
                    return PropertyReport::fail(
                        id,
                        Witness::new(
                            "region containment without dimension monotonicity",
                            vec![self.subset(u as u16), self.subset(v as u16)],
                        ),
                    );
                }
            }
        }
        PropertyReport::pass(id)
    }

    fn check_dim_equality(&self) -> PropertyReport {
        let id = PropositionId::W1223;
        let size = self.cm.len();
        for u in 0..size {
            let cu = self.cm[u];
            if cu == CM_NONE {
                continue;
            }
            for v in 1..size {
                let cv = self.cm[v];
                if cv == CM_NONE || cv & !cu != 0 {
                    continue;
                }
                let ok = match (self.dim_class(cv), self.dim_class(cu)) {
                    (Some(dv), Some(du)) => (cv == cu) == (dv == du),
                    _ => false,
                };
                if !ok {
                    return PropertyReport::fail(
                        id,
                        Witness::new(
                            "equal dimensions and equal regions disagree",
                            vec![self.subset(u as u16), self.subset(v as u16)],
                        ),
                    );
                }
            }
        }
        PropertyReport::pass(id)
    }

    fn dim_class(&self, region: u32) -> Option<usize> {
        let d = self.dim_of[region as usize];
        (d != DIM_NONE).then_some(d as usize)
    }

    fn check_prime_reduction_exists(&self) -> PropertyReport {
        let id = PropositionId::W1237;
        for u in 1..self.cm.len() {
            let c = self.cm[u];
            let found = c != CM_NONE
                && submasks(u as u16).any(|t| self.prime[t as usize] && self.cm[t as usize] == c);
            if !found {
                return PropertyReport::fail(
                    id,
                    Witness::new(
                        "no phi-prime subset shares this set's region",
                        vec![self.subset(u as u16)],
                    ),
                );
            }
        }
        PropertyReport::pass(id)
    }

    fn check_extension_lemma(&self) -> PropertyReport {
        let id = PropositionId::Lemma1;
        let n = self.ground.size();
        for v in 0..self.cm.len() {
            if !self.prime[v] {
                continue;
            }
            let region = self.cm[v] as u16;
            for x in 0..n {
                let bit = 1u16 << x;
                if region & bit != 0 || v as u16 & bit != 0 {
                    continue;
                }
                let vx = v as u16 | bit;
                if !self.maximal_mask(vx) {
                    continue;
                }
                let ok = self.axial_mask(v as u16)
                    && self.axial_mask(vx)
                    && match (self.dim_of_mask(v as u16), self.dim_of_mask(vx)) {
                        (Some(dv), Some(dvx)) => dvx == dv + 1,
                        _ => false,
                    };
                if !ok {
                    return PropertyReport::fail(
                        id,
                        Witness::new(
                            "phi-prime set and its one-point phi-maximal extension \
                             fail axiality or unit dimension growth",
                            vec![self.subset(v as u16), self.subset(vx)],
                        ),
                    );
                }
            }
        }
        PropertyReport::pass(id)
    }

    fn check_maximal_heredity(&self) -> PropertyReport {
        let id = PropositionId::W1311;
        for u in 1..self.cm.len() {
            if !self.maximal_mask(u as u16) {
                continue;
            }
            for t in submasks(u as u16) {
                if t != 0 && !self.maximal_mask(t) {
                    return PropertyReport::fail(
                        id,
                        Witness::new(
                            "nonempty subset of a phi-maximal set is not phi-maximal",
                            vec![self.subset(u as u16), self.subset(t)],
                        ),
                    );
                }
            }
        }
        PropertyReport::pass(id)
    }

    fn check_tau(&self) -> PropertyReport {
        let id = PropositionId::Tau;
        for m in 0..self.cm.len() {
            let m = m as u16;
            if self.prime[m as usize] != self.axial_mask(m) {
                return PropertyReport::fail(
                    id,
                    Witness::new("phi-prime but not phi-axial", vec![self.subset(m)]),
                );
            }
        }
        PropertyReport::pass(id)
    }
}
