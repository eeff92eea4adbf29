//! Named instance generators used by tests, documentation and the CLI
//! fixture files.
//!
//! The one non-obvious entry is [`non_maximal_example`]: a system that
//! satisfies lambda, mu, nu' and pi but contains a phi-prime set that is
//! not phi-axial (the finite analogue of a pair of skew lines spanning a
//! three-dimensional closure). It is found by exhaustive search over
//! small class families rather than written down, so its defining
//! properties are established mechanically.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matroid::Matroid;
use crate::sets::{GroundSet, SubsetFamily};
use crate::whitehead::{PhiSystem, PropositionId, DEFAULT_EXHAUSTIVE_CAP};

/// Ground sizes the search visits before giving up; the first witness
/// appears on four elements.
pub const NON_MAXIMAL_SEARCH_BOUND: usize = 4;

/// Every subset designated: the phi-dimension of any nonempty set is its
/// cardinality.
pub fn free_system(n: usize) -> Result<PhiSystem> {
    if !(1..=16).contains(&n) {
        return Err(Error::SizeOutOfRange { n, lo: 1, hi: 16 });
    }
    let g = GroundSet::alphabetic(n)?;
    let masks = (0..=u32::from(g.full_mask())).map(|m| m as u16).collect();
    PhiSystem::from_class_masks(g, masks)
}

/// Uniform matroid: the independent sets are the subsets of size at most
/// `r`. Simple iff `r >= 2` or `n <= 1`.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if n > 16 || r > n {
        return Err(Error::SizeOutOfRange { n, lo: r, hi: 16 });
    }
    let g = GroundSet::alphabetic(n)?;
    let masks = (0..=u32::from(g.full_mask()))
        .map(|m| m as u16)
        .filter(|m| m.count_ones() as usize <= r)
        .collect();
    let fam = SubsetFamily::from_masks(&g, masks);
    Matroid::from_independents(g, fam)
}

/// Point `i` of the seven-point projective plane carries value `i + 1`;
/// three points are collinear iff their values xor to zero.
const FANO_LINES: [u16; 7] = [
    0b0000111, 0b0011001, 0b1100001, 0b0101010, 0b1010010, 0b1001100, 0b0110100,
];

/// The seven-point projective plane, built from its flats: the empty
/// set, the points, the seven lines, and the plane.
pub fn fano() -> Matroid {
    let g = GroundSet::alphabetic(7).expect("7 <= 16");
    let mut masks = vec![0u16, g.full_mask()];
    masks.extend((0..7).map(|i| 1u16 << i));
    masks.extend(FANO_LINES);
    let fam = SubsetFamily::from_masks(&g, masks);
    Matroid::from_flats(g, fam).expect("projective-plane flats form a matroid")
}

/// Cycle matroid of the complete graph on four vertices: the ground set
/// is the six edges, independence is acyclicity.
pub fn graphic_k4() -> Matroid {
    const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let labels = ["ab", "ac", "ad", "bc", "bd", "cd"];
    let g = GroundSet::new(labels).expect("distinct edge labels");

    let acyclic = |m: u16| {
        let mut parent: [usize; 4] = [0, 1, 2, 3];
        fn find(parent: &mut [usize; 4], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for (i, &(u, v)) in EDGES.iter().enumerate() {
            if m & (1 << i) != 0 {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru == rv {
                    return false;
                }
                parent[ru] = rv;
            }
        }
        true
    };

    let masks = (0..64u16).filter(|&m| acyclic(m)).collect();
    let fam = SubsetFamily::from_masks(&g, masks);
    Matroid::from_independents(g, fam).expect("forests satisfy the independence axioms")
}

/// Searches ground sizes `1..=max_n` for the canonically first system
/// that satisfies lambda, mu, nu' and pi yet has a phi-prime set that is
/// not phi-axial. Candidate families always contain the full set and all
/// singletons; the remaining subsets are toggled through selection masks
/// in ascending order, so the result is deterministic.
pub fn search_non_maximal(max_n: usize) -> Result<PhiSystem> {
    for n in 1..=max_n {
        let g = GroundSet::alphabetic(n)?;
        let full = g.full_mask();
        let mut required: Vec<u16> = vec![full];
        required.extend((0..n).map(|i| 1u16 << i));

        let optional: Vec<u16> = (0..=u32::from(full))
            .map(|m| m as u16)
            .filter(|&m| {
                let c = m.count_ones() as usize;
                m == 0 || (2 <= c && c < n)
            })
            .collect();

        for selection in 0u32..(1 << optional.len()) {
            let mut masks = required.clone();
            masks.extend(
                optional
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| selection & (1 << i) != 0)
                    .map(|(_, &m)| m),
            );
            let sys = PhiSystem::from_class_masks(g.clone(), masks)?;
            let axioms = sys.check_axioms_capped(DEFAULT_EXHAUSTIVE_CAP)?;
            if !(axioms.lambda.passed()
                && axioms.mu.passed()
                && axioms.nu_prime.passed()
                && axioms.pi.passed())
            {
                continue;
            }
            let tau = sys.check_proposition_capped(PropositionId::Tau, DEFAULT_EXHAUSTIVE_CAP)?;
            if !tau.passed() {
                return Ok(sys);
            }
        }
    }
    Err(Error::SearchExhausted(max_n))
}

/// The canonical searched instance showing why the forward translation
/// needs the phi-maximal hypothesis.
pub fn non_maximal_example() -> Result<PhiSystem> {
    search_non_maximal(NON_MAXIMAL_SEARCH_BOUND)
}

/// An expected value attached to a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Nat(u64),
    Flag(bool),
}

/// A named instance plus the values tests re-derive for it.
pub struct CatalogEntry {
    pub name: &'static str,
    pub instance: Instance,
    pub expected: Vec<(&'static str, Expected)>,
}

/// Names accepted by `entry` and the CLI `catalog` subcommand.
pub const ENTRY_NAMES: [&str; 10] = [
    "free-1",
    "free-2",
    "free-3",
    "free-4",
    "free-5",
    "u12",
    "u24",
    "u35",
    "fano",
    "k4",
];

/// Looks up a catalog entry by name. `free-N`, `uniform-R-N`,
/// `non-maximal`, `fano` and `k4` are accepted beyond the fixed list.
pub fn entry(name: &str) -> Result<CatalogEntry> {
    use Expected::{Flag, Nat};
    let e = |name, instance, expected| CatalogEntry {
        name,
        instance,
        expected,
    };
    match name {
        "fano" => Ok(e(
            "fano",
            Instance::Matroid(fano()),
            vec![
                ("rank", Nat(3)),
                ("flats", Nat(16)),
                ("bases", Nat(28)),
                ("simple", Flag(true)),
            ],
        )),
        "k4" => Ok(e(
            "k4",
            Instance::Matroid(graphic_k4()),
            vec![
                ("rank", Nat(3)),
                ("flats", Nat(15)),
                ("bases", Nat(16)),
                ("simple", Flag(true)),
            ],
        )),
        "u12" => Ok(e(
            "u12",
            Instance::Matroid(uniform(1, 2)?),
            vec![("rank", Nat(1)), ("flats", Nat(2)), ("simple", Flag(false))],
        )),
        "u24" => Ok(e(
            "u24",
            Instance::Matroid(uniform(2, 4)?),
            vec![
                ("rank", Nat(2)),
                ("flats", Nat(6)),
                ("bases", Nat(6)),
                ("simple", Flag(true)),
            ],
        )),
        "u35" => Ok(e(
            "u35",
            Instance::Matroid(uniform(3, 5)?),
            vec![
                ("rank", Nat(3)),
                ("flats", Nat(17)),
                ("bases", Nat(10)),
                ("simple", Flag(true)),
            ],
        )),
        "non-maximal" => Ok(e(
            "non-maximal",
            Instance::Phi(non_maximal_example()?),
            vec![
                ("axioms", Flag(false)),
                ("lambda", Flag(true)),
                ("mu", Flag(true)),
                ("nu'", Flag(true)),
                ("pi", Flag(true)),
                ("rho", Flag(false)),
                ("tau", Flag(false)),
                ("phi-maximal", Flag(false)),
            ],
        )),
        _ => {
            if let Some(n) = name.strip_prefix("free-").and_then(|s| s.parse::<usize>().ok()) {
                let sys = free_system(n)?;
                return Ok(e(
                    "free",
                    Instance::Phi(sys),
                    vec![
                        ("classes", Nat(1u64 << n)),
                        ("dimension-of-ground", Nat(n as u64)),
                        ("axioms", Flag(true)),
                        ("tau", Flag(true)),
                        ("phi-maximal", Flag(true)),
                    ],
                ));
            }
            if let Some(rest) = name.strip_prefix("uniform-") {
                if let Some((r, n)) = rest.split_once('-') {
                    if let (Ok(r), Ok(n)) = (r.parse::<usize>(), n.parse::<usize>()) {
                        return Ok(e("uniform", Instance::Matroid(uniform(r, n)?), vec![]));
                    }
                }
            }
            Err(Error::Parse {
                line: 0,
                reason: format!(
                    "unknown catalog name `{name}` (try free-N, uniform-R-N, u12, u24, u35, fano, k4, non-maximal)"
                ),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::roundtrip_matroid;
    use crate::report::Verdict;

    /// Generic re-verification of an entry's expected map against the
    /// library's own checkers.
    fn verify(entry: &CatalogEntry) {
        for &(key, expected) in &entry.expected {
            let actual = match (&entry.instance, key) {
                (Instance::Matroid(m), "rank") => Expected::Nat(m.rank_of_ground() as u64),
                (Instance::Matroid(m), "flats") => Expected::Nat(m.flats().len() as u64),
                (Instance::Matroid(m), "bases") => Expected::Nat(m.bases().len() as u64),
                (Instance::Matroid(m), "simple") => Expected::Flag(m.is_simple()),
                (Instance::Phi(sys), "classes") => {
                    Expected::Nat(sys.phi_classes().len() as u64)
                }
                (Instance::Phi(sys), "dimension-of-ground") => Expected::Nat(
                    sys.dimension(&sys.ground().full_subset()).unwrap() as u64,
                ),
                (Instance::Phi(sys), "axioms") => {
                    Expected::Flag(sys.check_axioms().unwrap().overall())
                }
                (Instance::Phi(sys), "lambda") => {
                    Expected::Flag(sys.check_axioms().unwrap().lambda.passed())
                }
                (Instance::Phi(sys), "mu") => {
                    Expected::Flag(sys.check_axioms().unwrap().mu.passed())
                }
                (Instance::Phi(sys), "nu'") => {
                    Expected::Flag(sys.check_axioms().unwrap().nu_prime.passed())
                }
                (Instance::Phi(sys), "pi") => {
                    Expected::Flag(sys.check_axioms().unwrap().pi.passed())
                }
                (Instance::Phi(sys), "rho") => {
                    Expected::Flag(sys.check_axioms().unwrap().rho.passed())
                }
                (Instance::Phi(sys), "tau") => Expected::Flag(
                    sys.check_proposition(PropositionId::Tau).unwrap().passed(),
                ),
                (Instance::Phi(sys), "phi-maximal") => Expected::Flag(
                    sys.is_phi_maximal(&sys.ground().full_subset()).unwrap(),
                ),
                (_, other) => panic!("no checker for key `{other}` on {}", entry.name),
            };
            assert_eq!(actual, expected, "{}: key `{key}`", entry.name);
        }
    }

    #[test]
    fn expected_maps_are_rederivable() {
        for name in ENTRY_NAMES {
            verify(&entry(name).unwrap());
        }
        verify(&entry("non-maximal").unwrap());
    }

    #[test]
    fn free_system_small_cases() {
        let s1 = free_system(1).unwrap();
        assert_eq!(s1.phi_classes().len(), 2);
        let s3 = free_system(3).unwrap();
        assert_eq!(s3.phi_classes().len(), 8);
        assert_eq!(s3.dimension(&s3.ground().full_subset()).unwrap(), 3);
    }

    #[test]
    fn free_system_is_geometrical_and_maximal_up_to_six() {
        for n in 1..=6 {
            let sys = free_system(n).unwrap();
            assert!(sys.check_axioms().unwrap().overall(), "n = {n}");
            assert!(sys.is_phi_maximal(&sys.ground().full_subset()).unwrap());
        }
    }

    #[test]
    fn free_system_rejects_out_of_range() {
        assert!(matches!(free_system(0), Err(Error::SizeOutOfRange { .. })));
        assert!(matches!(free_system(17), Err(Error::SizeOutOfRange { .. })));
    }

    #[test]
    fn uniform_simplicity_boundary() {
        assert!(!uniform(1, 2).unwrap().is_simple());
        assert!(uniform(2, 4).unwrap().is_simple());
        assert!(uniform(1, 1).unwrap().is_simple());
        assert_eq!(uniform(3, 5).unwrap().rank_of_ground(), 3);
    }

    #[test]
    fn named_matroids_pass_roundtrip() {
        for m in [fano(), graphic_k4()] {
            assert!(roundtrip_matroid(&m).unwrap().overall());
        }
    }

    #[test]
    fn search_finds_witness_on_four_elements() {
        let sys = non_maximal_example().unwrap();
        assert_eq!(sys.ground().size(), 4);

        let axioms = sys.check_axioms().unwrap();
        assert!(axioms.lambda.passed());
        assert!(axioms.mu.passed());
        assert!(axioms.nu_prime.passed());
        assert!(axioms.pi.passed());

        let tau = sys.check_proposition(PropositionId::Tau).unwrap();
        assert_eq!(tau.verdict, Verdict::Fail);
        let witness = &tau.witness.as_ref().unwrap().subsets[0];
        assert!(sys.is_phi_prime(witness).unwrap());
        assert!(!sys.is_phi_axial(witness).unwrap());
    }

    #[test]
    fn search_is_deterministic() {
        let a = non_maximal_example().unwrap();
        let b = non_maximal_example().unwrap();
        assert_eq!(a.phi_classes(), b.phi_classes());
    }

    #[test]
    fn no_witness_exists_below_four_elements() {
        assert!(matches!(
            search_non_maximal(3),
            Err(Error::SearchExhausted(3))
        ));
    }
}
