//! Finite matroids over small ground sets.
//!
//! The complete independent-set family is the source of truth; the rank
//! table, closure table and flat family are derived from it at
//! construction. [`Matroid::from_independents`] validates the three
//! independence axioms by exhaustive scan, and [`Matroid::from_flats`]
//! goes the other way: closure as intersection of flats, independents by
//! the deletion criterion, then a rebuild-and-compare guard.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, IndependenceAxiom, Result};
use crate::report::{Check, Witness};
use crate::sets::{submasks, GroundSet, Subset, SubsetFamily};

/// A matroid with its derived caches.
#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    independents: SubsetFamily,
    rank: Vec<u8>,
    closure: Vec<u16>,
    flats: SubsetFamily,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("ground", &self.ground.labels())
            .field("independents", &self.independents.len())
            .field("rank", &self.rank_of_ground())
            .finish()
    }
}

impl Matroid {
    /// Validates I1 (empty set independent), I2 (heredity) and I3
    /// (exchange) over the whole family, then builds the caches.
    pub fn from_independents(ground: GroundSet, fam: SubsetFamily) -> Result<Self> {
        if fam.ground() != &ground {
            return Err(Error::MismatchedGround);
        }
        let n = ground.size();
        let size = 1usize << n;

        let mut present = vec![false; size];
        for &m in fam.masks() {
            present[m as usize] = true;
        }

        if !present[0] {
            return Err(Error::IndependenceViolation {
                axiom: IndependenceAxiom::I1,
                witness: Witness::new(
                    "the empty set is not in the family",
                    vec![ground.empty_subset()],
                ),
            });
        }

        // I2 via single deletions; removing the highest bit first visits
        // candidate subsets in canonical order.
        for &m in fam.masks() {
            let mut bits: Vec<u16> = (0..n as u16).map(|i| 1 << i).filter(|b| m & b != 0).collect();
            bits.reverse();
            for b in bits {
                let d = m & !b;
                if !present[d as usize] {
                    return Err(Error::IndependenceViolation {
                        axiom: IndependenceAxiom::I2,
                        witness: Witness::new(
                            "subset of an independent set is not independent",
                            vec![subset(&ground, d), subset(&ground, m)],
                        ),
                    });
                }
            }
        }

        for &small in fam.masks() {
            for &large in fam.masks() {
                if small.count_ones() >= large.count_ones() {
                    continue;
                }
                let candidates = large & !small;
                let mut found = false;
                let mut rest = candidates;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    if present[(small | bit) as usize] {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return Err(Error::IndependenceViolation {
                        axiom: IndependenceAxiom::I3,
                        witness: Witness::new(
                            "no element of the larger set extends the smaller",
                            vec![subset(&ground, small), subset(&ground, large)],
                        ),
                    });
                }
            }
        }

        // rank(u) = |u| when u is independent, else the best single
        // deletion (every proper independent subset survives one).
        let mut rank = vec![0u8; size];
        for m in 1..size {
            rank[m] = if present[m] {
                (m as u16).count_ones() as u8
            } else {
                let mut best = 0;
                let mut rest = m as u16;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    best = best.max(rank[m & !(bit as usize)]);
                }
                best
            };
        }

        let full = ground.full_mask();
        let mut closure = vec![0u16; size];
        let mut flat_masks = Vec::new();
        for m in 0..size {
            let mut cl = m as u16;
            let mut rest = full & !(m as u16);
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if rank[(m as u16 | bit) as usize] == rank[m] {
                    cl |= bit;
                }
            }
            closure[m] = cl;
            if cl == m as u16 {
                flat_masks.push(m as u16);
            }
        }

        Ok(Matroid {
            independents: fam,
            rank,
            closure,
            flats: SubsetFamily::from_masks(&ground, flat_masks),
            ground,
        })
    }

    /// Builds a matroid from a claimed flat family.
    ///
    /// The family must contain the full set and be closed under pairwise
    /// intersection. Closure is the intersection of containing members,
    /// independents come from the deletion criterion, and the flats of
    /// the resulting matroid must reproduce the input family exactly.
    pub fn from_flats(ground: GroundSet, fam: SubsetFamily) -> Result<Self> {
        if fam.ground() != &ground {
            return Err(Error::MismatchedGround);
        }
        let full = ground.full_mask();
        if !fam.contains_mask(full) {
            return Err(Error::MissingFullSet);
        }
        let masks = fam.masks();
        for (i, &a) in masks.iter().enumerate() {
            for &b in &masks[i + 1..] {
                if !fam.contains_mask(a & b) {
                    return Err(Error::NotIntersectionClosed {
                        witness: Witness::new(
                            "pair of members whose intersection is missing",
                            vec![subset(&ground, a), subset(&ground, b), subset(&ground, a & b)],
                        ),
                    });
                }
            }
        }

        let size = 1usize << ground.size();
        let mut table = vec![full; size];
        for &f in masks {
            for s in submasks(f) {
                table[s as usize] &= f;
            }
        }

        let ind_masks: Vec<u16> = (0..size)
            .map(|m| m as u16)
            .filter(|&m| {
                let mut rest = m;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    if table[(m & !bit) as usize] & bit != 0 {
                        return false;
                    }
                }
                true
            })
            .collect();

        let matroid =
            Matroid::from_independents(ground.clone(), SubsetFamily::from_masks(&ground, ind_masks))?;

        if matroid.flats != fam {
            let rebuilt = &matroid.flats;
            let missing = fam.masks().iter().find(|m| !rebuilt.contains_mask(**m));
            let extra = rebuilt.masks().iter().find(|m| !fam.contains_mask(**m));
            let (mask, note) = match (missing, extra) {
                (Some(&m), _) => (m, "input member is not a flat of the derived matroid"),
                (_, Some(&m)) => (m, "derived matroid has a flat missing from the input"),
                _ => unreachable!("families differ"),
            };
            return Err(Error::FlatsMismatch {
                witness: Witness::new(note, vec![subset(&ground, mask)]),
            });
        }
        Ok(matroid)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn independents(&self) -> &SubsetFamily {
        &self.independents
    }

    pub fn flats(&self) -> &SubsetFamily {
        &self.flats
    }

    pub fn is_independent(&self, u: &Subset) -> Result<bool> {
        self.index(u)?;
        Ok(self.independents.contains_mask(u.mask()))
    }

    /// Largest cardinality of an independent subset of `u`.
    pub fn rank(&self, u: &Subset) -> Result<usize> {
        Ok(self.rank[self.index(u)?] as usize)
    }

    pub fn rank_of_ground(&self) -> usize {
        self.rank[self.ground.full_mask() as usize] as usize
    }

    /// Elements whose addition to `u` does not raise its rank.
    pub fn closure(&self, u: &Subset) -> Result<Subset> {
        let i = self.index(u)?;
        Ok(subset(&self.ground, self.closure[i]))
    }

    /// Maximum-size independent sets.
    pub fn bases(&self) -> SubsetFamily {
        let r = self.rank_of_ground() as u32;
        let masks = self
            .independents
            .masks()
            .iter()
            .copied()
            .filter(|m| m.count_ones() == r)
            .collect();
        SubsetFamily::from_masks(&self.ground, masks)
    }

    /// No loops and no parallel pairs: every subset of size at most two
    /// is independent.
    pub fn is_simple(&self) -> bool {
        self.simplicity_witness().is_none()
    }

    /// First dependent singleton or pair, if any.
    pub fn simplicity_witness(&self) -> Option<Witness> {
        let n = self.ground.size();
        for i in 0..n {
            if !self.independents.contains_mask(1 << i) {
                return Some(Witness::new(
                    "loop: dependent singleton",
                    vec![subset(&self.ground, 1 << i)],
                ));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let pair = (1 << i) | (1 << j);
                if !self.independents.contains_mask(pair) {
                    return Some(Witness::new(
                        "parallel pair: dependent two-element set",
                        vec![subset(&self.ground, pair)],
                    ));
                }
            }
        }
        None
    }

    /// The full closure table of this matroid.
    pub fn closure_table(&self) -> ClosureTable {
        ClosureTable {
            ground: self.ground.clone(),
            map: self.closure.clone(),
        }
    }

    pub(crate) fn rank_mask(&self, mask: u16) -> usize {
        self.rank[mask as usize] as usize
    }

    pub(crate) fn closure_mask(&self, mask: u16) -> u16 {
        self.closure[mask as usize]
    }

    fn index(&self, u: &Subset) -> Result<usize> {
        if u.ground() != &self.ground {
            return Err(Error::MismatchedGround);
        }
        Ok(u.mask() as usize)
    }
}

fn subset(ground: &GroundSet, mask: u16) -> Subset {
    ground.subset_from_mask(mask).expect("mask in range")
}

/// A total map from subsets to subsets, candidate closure operator.
#[derive(Clone, Debug)]
pub struct ClosureTable {
    ground: GroundSet,
    map: Vec<u16>,
}

/// Verdicts of the four closure-operator axioms on a table.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureAxiomReport {
    pub cl1: Check,
    pub cl2: Check,
    pub cl3: Check,
    pub cl4: Check,
}

impl ClosureAxiomReport {
    pub fn entries(&self) -> [&Check; 4] {
        [&self.cl1, &self.cl2, &self.cl3, &self.cl4]
    }

    pub fn overall(&self) -> bool {
        self.entries().iter().all(|c| c.passed())
    }
}

impl ClosureTable {
    /// Builds from a raw table; the map must have one entry per subset,
    /// each inside the ground set.
    pub fn new(ground: GroundSet, map: Vec<u16>) -> Result<Self> {
        let size = 1usize << ground.size();
        if map.len() != size {
            return Err(Error::SizeOutOfRange {
                n: map.len(),
                lo: size,
                hi: size,
            });
        }
        let full = ground.full_mask();
        if let Some(&bad) = map.iter().find(|&&m| m & !full != 0) {
            return Err(Error::MaskOutOfRange {
                mask: bad,
                size: ground.size(),
            });
        }
        Ok(ClosureTable { ground, map })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn get_mask(&self, mask: u16) -> u16 {
        self.map[mask as usize]
    }

    pub fn apply(&self, u: &Subset) -> Result<Subset> {
        if u.ground() != &self.ground {
            return Err(Error::MismatchedGround);
        }
        Ok(subset(&self.ground, self.map[u.mask() as usize]))
    }

    /// Verifies CL1 (extensive), CL2 (monotone), CL3 (idempotent) and
    /// CL4 (exchange) exhaustively. CL2 scans all subset pairs and CL4
    /// all (set, element, element) triples, hence the cap.
    pub fn check_closure_axioms(&self, cap: usize) -> Result<ClosureAxiomReport> {
        let n = self.ground.size();
        if n > cap {
            return Err(Error::CapExceeded { size: n, cap });
        }
        Ok(ClosureAxiomReport {
            cl1: self.check_cl1(),
            cl2: self.check_cl2(),
            cl3: self.check_cl3(),
            cl4: self.check_cl4(),
        })
    }

    fn check_cl1(&self) -> Check {
        for (m, &cl) in self.map.iter().enumerate() {
            if m as u16 & !cl != 0 {
                return Check::fail(
                    "CL1",
                    Witness::new(
                        "set not contained in its closure",
                        vec![subset(&self.ground, m as u16)],
                    ),
                );
            }
        }
        Check::pass("CL1")
    }

    fn check_cl2(&self) -> Check {
        let size = self.map.len();
        for u in 0..size {
            for v in 0..size {
                if u as u16 & !(v as u16) == 0 && self.map[u] & !self.map[v] != 0 {
                    return Check::fail(
                        "CL2",
                        Witness::new(
                            "nested sets with non-nested closures",
                            vec![subset(&self.ground, u as u16), subset(&self.ground, v as u16)],
                        ),
                    );
                }
            }
        }
        Check::pass("CL2")
    }

    fn check_cl3(&self) -> Check {
        for (m, &cl) in self.map.iter().enumerate() {
            if self.map[cl as usize] != cl {
                return Check::fail(
                    "CL3",
                    Witness::new(
                        "closure is not idempotent here",
                        vec![subset(&self.ground, m as u16)],
                    ),
                );
            }
        }
        Check::pass("CL3")
    }

    fn check_cl4(&self) -> Check {
        let n = self.ground.size();
        for u in 0..self.map.len() {
            let cl_u = self.map[u];
            for x in 0..n {
                let xbit = 1u16 << x;
                let cl_ux = self.map[u | xbit as usize];
                let mut fresh = cl_ux & !cl_u;
                while fresh != 0 {
                    let ybit = fresh & fresh.wrapping_neg();
                    fresh ^= ybit;
                    if self.map[u | ybit as usize] & xbit == 0 {
                        return Check::fail(
                            "CL4",
                            Witness::new(
                                "exchange fails: y enters via x but x not via y",
                                vec![
                                    subset(&self.ground, u as u16),
                                    subset(&self.ground, xbit),
                                    subset(&self.ground, ybit),
                                ],
                            ),
                        );
                    }
                }
            }
        }
        Check::pass("CL4")
    }

    /// The family selected by the deletion criterion: `u` is independent
    /// iff no element of `u` lies in the closure of `u` minus that
    /// element.
    pub fn independents(&self) -> SubsetFamily {
        let masks = (0..self.map.len())
            .map(|m| m as u16)
            .filter(|&m| {
                let mut rest = m;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    if self.map[(m & !bit) as usize] & bit != 0 {
                        return false;
                    }
                }
                true
            })
            .collect();
        SubsetFamily::from_masks(&self.ground, masks)
    }
}

/// All intersections of sub-collections of `fam`, the empty intersection
/// contributing the full set.
pub fn intersection_closure(fam: &SubsetFamily) -> SubsetFamily {
    let ground = fam.ground();
    let size = 1usize << ground.size();
    let mut present = vec![false; size];
    let mut members: Vec<u16> = Vec::new();

    let push = |m: u16, present: &mut Vec<bool>, members: &mut Vec<u16>| {
        if !present[m as usize] {
            present[m as usize] = true;
            members.push(m);
        }
    };

    push(ground.full_mask(), &mut present, &mut members);
    let mut queue: Vec<u16> = fam.masks().to_vec();
    while let Some(m) = queue.pop() {
        if present[m as usize] {
            continue;
        }
        for &existing in &members {
            let inter = existing & m;
            if !present[inter as usize] {
                queue.push(inter);
            }
        }
        push(m, &mut present, &mut members);
    }
    SubsetFamily::from_masks(ground, members)
}

/// Do two families generate the same collection of intersections?
pub fn same_flat_lattice(a: &SubsetFamily, b: &SubsetFamily) -> Result<bool> {
    if a.ground() != b.ground() {
        return Err(Error::MismatchedGround);
    }
    Ok(intersection_closure(a) == intersection_closure(b))
}
