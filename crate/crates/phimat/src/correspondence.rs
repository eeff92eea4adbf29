//! The two correspondence directions between phi-class geometries and
//! simple matroids, with every obligation re-verified on the concrete
//! instance.
//!
//! Forward: a finite system satisfying the five axioms whose full set is
//! phi-maximal yields a simple matroid whose independent sets are the
//! phi-prime sets plus the empty set, whose closure is the common-region
//! operator, whose flats are the intersections of phi-classes, and whose
//! rank is the phi-dimension on nonempty sets.
//!
//! Backward: designating the flats of a simple matroid as phi-classes
//! yields a system where region/closure, equivalence, primality/
//! independence, dimension/rank and maximality all line up, and the five
//! axioms hold.
//!
//! Preconditions are never assumed: both directions re-run the axiom and
//! simplicity checks and fail with a witness if they do not hold.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{intersection_closure, same_flat_lattice, Matroid};
use crate::report::{Check, Witness};
use crate::sets::{GroundSet, Subset, SubsetFamily};
use crate::whitehead::{PhiSystem, PropositionId, DEFAULT_EXHAUSTIVE_CAP};

/// Which translation a report documents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    WhiteheadToMatroid,
    MatroidToWhitehead,
    RoundtripMatroid,
    RoundtripPhi,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::WhiteheadToMatroid => "to-matroid",
            Direction::MatroidToWhitehead => "from-matroid",
            Direction::RoundtripMatroid => "roundtrip-matroid",
            Direction::RoundtripPhi => "roundtrip-phi",
        })
    }
}

/// Per-obligation verdicts for one translation.
#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceReport {
    pub direction: Direction,
    pub obligations: Vec<Check>,
}

impl CorrespondenceReport {
    fn new(direction: Direction) -> Self {
        CorrespondenceReport {
            direction,
            obligations: Vec::new(),
        }
    }

    fn record(&mut self, check: Check) {
        self.obligations.push(check);
    }

    pub fn overall(&self) -> bool {
        self.obligations.iter().all(|c| c.passed())
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.obligations.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for CorrespondenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.direction)?;
        for c in &self.obligations {
            writeln!(f, "  {c}")?;
        }
        write!(
            f,
            "  overall: {}",
            if self.overall() { "pass" } else { "fail" }
        )
    }
}

/// Builds the matroid of a phi-maximal geometrical system with the
/// default exhaustive cap.
pub fn whitehead_to_matroid(sys: &PhiSystem) -> Result<(Matroid, CorrespondenceReport)> {
    whitehead_to_matroid_capped(sys, DEFAULT_EXHAUSTIVE_CAP)
}

/// Builds the matroid whose independent sets are the phi-prime sets plus
/// the empty set, then verifies closure, flats, simplicity and rank
/// against the system.
pub fn whitehead_to_matroid_capped(
    sys: &PhiSystem,
    cap: usize,
) -> Result<(Matroid, CorrespondenceReport)> {
    let ground = sys.ground().clone();
    let mut report = CorrespondenceReport::new(Direction::WhiteheadToMatroid);

    if ground.size() == 0 {
        return Err(Error::Precondition {
            name: "ground-nonempty",
            witness: Witness::new("the ground set is empty", vec![]),
        });
    }
    report.record(Check::pass("ground-nonempty"));

    let axioms = sys.check_axioms_capped(cap)?;

    // Full-set maximality is diagnosed before the axiom verdicts: it is
    // the hypothesis that strengthens rho, so a system failing both gets
    // the sharper phi-prime witness.
    let full = ground.full_subset();
    if !sys.is_phi_maximal(&full)? {
        // The first phi-prime set equivalent to the full set that is not
        // phi-axial.
        let cm_full = sys.common_region(&full)?;
        let witness = ground
            .subsets()
            .find(|t| {
                sys.is_phi_prime(t).unwrap()
                    && sys.common_region(t).map(|c| c == cm_full).unwrap_or(false)
                    && !sys.is_phi_axial(t).unwrap()
            })
            .expect("non-maximality has a prime witness");
        return Err(Error::Precondition {
            name: "phi-maximal",
            witness: Witness::new(
                "phi-prime, phi-equivalent to the full set, but not phi-axial",
                vec![witness],
            ),
        });
    }
    if let Some(failed) = axioms.first_failure() {
        return Err(Error::Precondition {
            name: "axioms",
            witness: Witness::new(
                format!(
                    "axiom {} fails: {}",
                    failed.name,
                    failed.witness.as_ref().map_or_else(String::new, |w| w.note.clone())
                ),
                failed.witness.as_ref().map_or_else(Vec::new, |w| w.subsets.clone()),
            ),
        });
    }
    report.record(Check::pass("axioms"));
    report.record(Check::pass("phi-maximal"));

    // Property tau is proved from the preconditions, not assumed: the
    // independents are taken to be the phi-prime sets, and tau certifies
    // they coincide with the phi-axial sets.
    let tau = sys.check_proposition_capped(PropositionId::Tau, cap)?;
    report.record(match tau.witness {
        None => Check::pass("tau"),
        Some(w) => Check::fail("tau", w),
    });

    let mut ind_masks: Vec<u16> = sys.primes().masks().to_vec();
    ind_masks.push(0);
    let fam = SubsetFamily::from_masks(&ground, ind_masks);
    let matroid = match Matroid::from_independents(ground.clone(), fam) {
        Ok(m) => m,
        Err(Error::IndependenceViolation { axiom, witness }) => {
            return Err(Error::Obligation {
                name: match axiom {
                    crate::error::IndependenceAxiom::I1 => "independence-I1",
                    crate::error::IndependenceAxiom::I2 => "independence-I2",
                    crate::error::IndependenceAxiom::I3 => "independence-I3",
                },
                witness,
            })
        }
        Err(e) => return Err(e),
    };
    report.record(Check::pass("independence-axioms"));

    report.record(check_all_masks(
        "closure-is-common-region",
        &ground,
        |m| sys.cm_mask(m) == Some(matroid.closure_mask(m)),
        "matroid closure differs from the common region",
    ));

    let from_classes = intersection_closure(sys.phi_classes());
    report.record(families_equal_check(
        "flats-are-class-intersections",
        &ground,
        matroid.flats(),
        &from_classes,
    ));

    report.record(match matroid.simplicity_witness() {
        None => Check::pass("simple"),
        Some(w) => Check::fail("simple", w),
    });

    report.record(check_all_masks(
        "rank-is-dimension",
        &ground,
        |m| m == 0 || sys.dim_of_mask(m) == Some(matroid.rank_mask(m)),
        "rank differs from the phi-dimension",
    ));

    Ok((matroid, report))
}

/// Designates the flats of a simple matroid as phi-classes with the
/// default exhaustive cap.
pub fn matroid_to_whitehead(m: &Matroid) -> Result<(PhiSystem, CorrespondenceReport)> {
    matroid_to_whitehead_capped(m, DEFAULT_EXHAUSTIVE_CAP)
}

/// Flats become phi-classes; the six statements of the correspondence
/// are then verified exhaustively.
pub fn matroid_to_whitehead_capped(
    m: &Matroid,
    cap: usize,
) -> Result<(PhiSystem, CorrespondenceReport)> {
    let ground = m.ground().clone();
    let n = ground.size();
    let mut report = CorrespondenceReport::new(Direction::MatroidToWhitehead);

    if n == 0 {
        return Err(Error::Precondition {
            name: "ground-nonempty",
            witness: Witness::new("the ground set is empty", vec![]),
        });
    }
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    report.record(Check::pass("ground-nonempty"));

    if let Some(w) = m.simplicity_witness() {
        return Err(Error::Precondition {
            name: "simple",
            witness: w,
        });
    }
    report.record(Check::pass("simple"));

    let sys = PhiSystem::new(ground.clone(), m.flats().clone())?;

    report.record(check_all_masks(
        "1-common-region-is-closure",
        &ground,
        |u| sys.cm_mask(u) == Some(m.closure_mask(u)),
        "common region differs from matroid closure",
    ));

    let size = 1usize << n;
    let mut stmt2 = Check::pass("2-equivalence-is-equal-closure");
    'outer: for u in 0..size {
        for v in 0..size {
            let equiv = sys.cm_mask(u as u16) == sys.cm_mask(v as u16);
            let same_cl = m.closure_mask(u as u16) == m.closure_mask(v as u16);
            if equiv != same_cl {
                stmt2 = Check::fail(
                    "2-equivalence-is-equal-closure",
                    Witness::new(
                        "phi-equivalence disagrees with equal closure",
                        vec![mask_subset(&ground, u as u16), mask_subset(&ground, v as u16)],
                    ),
                );
                break 'outer;
            }
        }
    }
    report.record(stmt2);

    report.record(check_all_masks(
        "3-prime-iff-independent",
        &ground,
        |u| u == 0 || sys.prime_mask(u) == m.independents().contains_mask(u),
        "phi-primality disagrees with independence",
    ));

    report.record(check_all_masks(
        "4-dimension-is-rank",
        &ground,
        |u| u == 0 || sys.dim_of_mask(u) == Some(m.rank_mask(u)),
        "phi-dimension differs from rank",
    ));

    let full = ground.full_mask();
    let stmt5 = if !sys.maximal_mask(full) {
        Check::fail(
            "5-full-set-phi-maximal",
            Witness::new("the full set is not phi-maximal", vec![ground.full_subset()]),
        )
    } else if let Some(bad) = (0..size).find(|&u| sys.prime_mask(u as u16) && !sys.axial_mask(u as u16))
    {
        Check::fail(
            "5-full-set-phi-maximal",
            Witness::new(
                "phi-prime but not phi-axial",
                vec![mask_subset(&ground, bad as u16)],
            ),
        )
    } else {
        Check::pass("5-full-set-phi-maximal")
    };
    report.record(stmt5);

    let axioms = sys.check_axioms_capped(cap)?;
    report.record(match axioms.first_failure() {
        None => Check::pass("6-geometrical-axioms"),
        Some(failed) => Check::fail(
            "6-geometrical-axioms",
            Witness::new(
                format!("axiom {} fails", failed.name),
                failed.witness.as_ref().map_or_else(Vec::new, |w| w.subsets.clone()),
            ),
        ),
    });

    Ok((sys, report))
}

/// Matroid -> phi-system -> matroid must reproduce the independent sets
/// and the flat lattice.
pub fn roundtrip_matroid(m: &Matroid) -> Result<CorrespondenceReport> {
    roundtrip_matroid_capped(m, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn roundtrip_matroid_capped(m: &Matroid, cap: usize) -> Result<CorrespondenceReport> {
    let (sys, _) = matroid_to_whitehead_capped(m, cap)?;
    let (back, _) = whitehead_to_matroid_capped(&sys, cap)?;
    let mut report = CorrespondenceReport::new(Direction::RoundtripMatroid);

    report.record(families_equal_check(
        "independents-preserved",
        m.ground(),
        m.independents(),
        back.independents(),
    ));
    report.record(if same_flat_lattice(m.flats(), back.flats())? {
        Check::pass("flat-lattice-preserved")
    } else {
        Check::fail(
            "flat-lattice-preserved",
            Witness::new("flat lattices differ", vec![]),
        )
    });
    Ok(report)
}

/// Phi-system -> matroid -> flats-as-classes must preserve the lattice of
/// class intersections (the class families themselves may differ).
pub fn roundtrip_phi(sys: &PhiSystem) -> Result<CorrespondenceReport> {
    roundtrip_phi_capped(sys, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn roundtrip_phi_capped(sys: &PhiSystem, cap: usize) -> Result<CorrespondenceReport> {
    let (m, _) = whitehead_to_matroid_capped(sys, cap)?;
    let back = PhiSystem::new(sys.ground().clone(), m.flats().clone())?;
    let mut report = CorrespondenceReport::new(Direction::RoundtripPhi);

    report.record(
        if same_flat_lattice(sys.phi_classes(), back.phi_classes())? {
            Check::pass("flat-lattice-preserved")
        } else {
            Check::fail(
                "flat-lattice-preserved",
                Witness::new("class families generate different intersection lattices", vec![]),
            )
        },
    );
    Ok(report)
}

fn mask_subset(ground: &GroundSet, mask: u16) -> Subset {
    ground.subset_from_mask(mask).expect("mask in range")
}

/// Checks a predicate over every subset mask, failing with the first
/// counterexample.
fn check_all_masks(
    name: &'static str,
    ground: &GroundSet,
    ok: impl Fn(u16) -> bool,
    note: &str,
) -> Check {
    let size = 1usize << ground.size();
    for m in 0..size {
        if !ok(m as u16) {
            return Check::fail(name, Witness::new(note, vec![mask_subset(ground, m as u16)]));
        }
    }
    Check::pass(name)
}

fn families_equal_check(
    name: &'static str,
    ground: &GroundSet,
    left: &SubsetFamily,
    right: &SubsetFamily,
) -> Check {
    if left == right {
        return Check::pass(name);
    }
    let missing = right.masks().iter().find(|m| !left.contains_mask(**m));
    let extra = left.masks().iter().find(|m| !right.contains_mask(**m));
    let mask = missing.or(extra).copied().unwrap_or(0);
    Check::fail(
        name,
        Witness::new(
            "families differ at this member",
            vec![mask_subset(ground, mask)],
        ),
    )
}
