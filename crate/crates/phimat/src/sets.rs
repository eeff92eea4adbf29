//! Ground sets, bit-vector subsets, and canonical subset families.
//!
//! Everything else in the crate is exhaustive over subsets of a small
//! universe, so the kernel keeps a subset as one machine word: element `i`
//! of the ground set owns bit `i` of a `u16` mask. The canonical order on
//! subsets is the numeric order of those masks, which starts at the empty
//! set and ends at the full set.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on universe size; every subset fits in a `u16` mask.
pub const MAX_GROUND_SIZE: usize = 16;

#[derive(Debug)]
struct GroundInner {
    labels: Vec<String>,
}

/// An ordered finite universe of distinct element labels.
///
/// Cloning is cheap (shared storage). Two ground sets compare equal when
/// they carry the same labels in the same order, so bit positions agree.
#[derive(Clone, Debug)]
pub struct GroundSet(Arc<GroundInner>);

impl GroundSet {
    /// Builds a ground set from labels, keeping first-appearance order.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND_SIZE {
            return Err(Error::GroundTooLarge {
                size: labels.len(),
                max: MAX_GROUND_SIZE,
            });
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::DuplicateLabel(a.clone()));
            }
        }
        Ok(GroundSet(Arc::new(GroundInner { labels })))
    }

    /// Ground set `a`, `b`, `c`, … of the given size (for generated instances).
    pub fn alphabetic(n: usize) -> Result<Self> {
        if n > MAX_GROUND_SIZE {
            return Err(Error::GroundTooLarge {
                size: n,
                max: MAX_GROUND_SIZE,
            });
        }
        GroundSet::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn size(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    /// Mask with every element present.
    pub fn full_mask(&self) -> u16 {
        // left shift of 1u32 avoids overflow at size 16
        ((1u32 << self.size()) - 1) as u16
    }

    pub fn empty_subset(&self) -> Subset {
        Subset {
            ground: self.clone(),
            mask: 0,
        }
    }

    pub fn full_subset(&self) -> Subset {
        Subset {
            ground: self.clone(),
            mask: self.full_mask(),
        }
    }

    /// Subset from a raw mask. Bits above the universe size are rejected.
    pub fn subset_from_mask(&self, mask: u16) -> Result<Subset> {
        if mask & !self.full_mask() != 0 {
            return Err(Error::MaskOutOfRange {
                mask,
                size: self.size(),
            });
        }
        Ok(Subset {
            ground: self.clone(),
            mask,
        })
    }

    /// Subset from element labels; unknown labels are an error, duplicates collapse.
    pub fn subset_from_labels<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = 0u16;
        for l in labels {
            let l = l.as_ref();
            match self.index_of(l) {
                Some(i) => mask |= 1 << i,
                None => return Err(Error::UnknownLabel(l.to_string())),
            }
        }
        Ok(Subset {
            ground: self.clone(),
            mask,
        })
    }

    /// All `2^n` subsets in canonical order: empty set first, full set last.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> + '_ {
        (0..=u32::from(self.full_mask())).map(move |m| Subset {
            ground: self.clone(),
            mask: m as u16,
        })
    }

    fn same_ground(&self, other: &GroundSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_ground(other)
    }
}

impl Eq for GroundSet {}

/// A subset of a ground set, stored as a characteristic bitmask.
///
/// Subsets of different ground sets never compare equal, and binary
/// operations on them fail fast with [`Error::MismatchedGround`].
#[derive(Clone, Debug)]
pub struct Subset {
    ground: GroundSet,
    mask: u16,
}

impl Subset {
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn mask(&self) -> u16 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains_index(&self, i: usize) -> bool {
        i < self.ground.size() && self.mask & (1 << i) != 0
    }

    pub fn contains_label(&self, label: &str) -> bool {
        self.ground
            .index_of(label)
            .is_some_and(|i| self.contains_index(i))
    }

    pub fn is_subset_of(&self, other: &Subset) -> Result<bool> {
        self.check_ground(other)?;
        Ok(self.mask & !other.mask == 0)
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.check_ground(other)?;
        Ok(self.with_mask(self.mask | other.mask))
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.check_ground(other)?;
        Ok(self.with_mask(self.mask & other.mask))
    }

    pub fn difference(&self, other: &Subset) -> Result<Subset> {
        self.check_ground(other)?;
        Ok(self.with_mask(self.mask & !other.mask))
    }

    /// Member labels in element order.
    pub fn labels(&self) -> Vec<&str> {
        self.ground
            .labels()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.mask & (1 << i) != 0)
            .map(|(_, l)| l.as_str())
            .collect()
    }

    /// Indices of the present elements, ascending.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (0..self.ground.size()).filter(move |i| mask & (1 << i) != 0)
    }

    fn with_mask(&self, mask: u16) -> Subset {
        Subset {
            ground: self.ground.clone(),
            mask,
        }
    }

    fn check_ground(&self, other: &Subset) -> Result<()> {
        if self.ground.same_ground(&other.ground) {
            Ok(())
        } else {
            Err(Error::MismatchedGround)
        }
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && self.ground.same_ground(&other.ground)
    }
}

impl Eq for Subset {}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(" "))
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(serializer)
    }
}

/// A deduplicated family of subsets of one ground set, kept in canonical
/// (ascending mask) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetFamily {
    ground: GroundSet,
    masks: Vec<u16>,
}

impl SubsetFamily {
    pub fn new<I>(ground: &GroundSet, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut masks = Vec::new();
        for s in members {
            if !s.ground.same_ground(ground) {
                return Err(Error::MismatchedGround);
            }
            masks.push(s.mask);
        }
        Ok(Self::from_masks(ground, masks))
    }

    /// Builds directly from masks, sorting and deduplicating.
    pub fn from_masks(ground: &GroundSet, mut masks: Vec<u16>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        debug_assert!(masks.iter().all(|m| m & !ground.full_mask() == 0));
        SubsetFamily {
            ground: ground.clone(),
            masks,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u16] {
        &self.masks
    }

    pub fn contains_mask(&self, mask: u16) -> bool {
        self.masks.binary_search(&mask).is_ok()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        s.ground.same_ground(&self.ground) && self.contains_mask(s.mask)
    }

    /// Members in canonical order.
    pub fn members(&self) -> impl Iterator<Item = Subset> + '_ {
        self.masks.iter().map(move |&m| Subset {
            ground: self.ground.clone(),
            mask: m,
        })
    }

    /// Intersection of the members selected by index.
    ///
    /// The intersection over an empty selection is the full ground set,
    /// the identity of intersection.
    pub fn intersect_selected<I>(&self, selection: I) -> Subset
    where
        I: IntoIterator<Item = usize>,
    {
        let mut acc = self.ground.full_mask();
        for i in selection {
            acc &= self.masks[i];
        }
        Subset {
            ground: self.ground.clone(),
            mask: acc,
        }
    }

    /// Intersection of every member containing `of` (`None` when no member
    /// does). This is the definitional route to the common region; the
    /// closure tables elsewhere are checked against it.
    pub fn intersect_containing(&self, of: &Subset) -> Result<Option<Subset>> {
        if !of.ground.same_ground(&self.ground) {
            return Err(Error::MismatchedGround);
        }
        let mut acc: Option<u16> = None;
        for &m in &self.masks {
            if of.mask & !m == 0 {
                acc = Some(acc.map_or(m, |a| a & m));
            }
        }
        Ok(acc.map(|mask| Subset {
            ground: self.ground.clone(),
            mask,
        }))
    }
}

impl Serialize for SubsetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members().map(|s| {
            s.labels()
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
        }))
    }
}

/// Iterates all submasks of `mask` in ascending numeric order, the empty
/// mask and `mask` itself included (carry-rippler walk).
pub fn submasks(mask: u16) -> impl Iterator<Item = u16> {
    let mut next = Some(0u16);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some(cur.wrapping_sub(mask) & mask)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ground(labels: &[&str]) -> GroundSet {
        GroundSet::new(labels.iter().copied()).unwrap()
    }

    #[test]
    fn enumerates_single_element_universe() {
        let g = ground(&["a"]);
        let subs: Vec<_> = g.subsets().collect();
        assert_eq!(subs.len(), 2);
        assert!(subs[0].is_empty());
        assert_eq!(subs[1], g.full_subset());
    }

    #[test]
    fn enumerates_two_element_universe_in_order() {
        let g = ground(&["a", "b"]);
        let subs: Vec<_> = g.subsets().collect();
        assert_eq!(subs.len(), 4);
        assert!(subs[0].is_empty());
        assert_eq!(subs[3], g.full_subset());
    }

    #[test]
    fn enumerates_max_universe() {
        let g = GroundSet::alphabetic(16).unwrap();
        assert_eq!(g.subsets().count(), 65536);
    }

    #[test]
    fn rejects_oversized_ground() {
        let err = GroundSet::alphabetic(17).unwrap_err();
        assert!(matches!(err, Error::GroundTooLarge { size: 17, .. }));
    }

    #[test]
    fn rejects_duplicate_labels() {
        let err = GroundSet::new(["a", "a"]).unwrap_err();
        assert!(matches!(err, Error::DuplicateLabel(l) if l == "a"));
    }

    #[test]
    fn mismatched_grounds_fail_fast() {
        let g1 = ground(&["a", "b"]);
        let g2 = ground(&["a", "c"]);
        let s1 = g1.full_subset();
        let s2 = g2.full_subset();
        assert_ne!(s1, s2);
        assert!(matches!(s1.union(&s2), Err(Error::MismatchedGround)));
    }

    #[test]
    fn equal_labels_mean_equal_ground() {
        let g1 = ground(&["a", "b"]);
        let g2 = ground(&["a", "b"]);
        assert_eq!(g1.full_subset(), g2.full_subset());
    }

    #[test]
    fn intersect_pair() {
        let g = ground(&["a", "b", "c"]);
        let fam = SubsetFamily::new(
            &g,
            [
                g.subset_from_labels(["a", "b"]).unwrap(),
                g.subset_from_labels(["b", "c"]).unwrap(),
            ],
        )
        .unwrap();
        let got = fam.intersect_selected(0..fam.len());
        assert_eq!(got, g.subset_from_labels(["b"]).unwrap());
    }

    #[test]
    fn intersect_single_member_is_identity() {
        let g = ground(&["a"]);
        let fam = SubsetFamily::new(&g, [g.subset_from_labels(["a"]).unwrap()]).unwrap();
        assert_eq!(
            fam.intersect_selected(0..1),
            g.subset_from_labels(["a"]).unwrap()
        );
    }

    #[test]
    fn intersect_disjoint_members_is_empty() {
        let g = ground(&["a", "b"]);
        let fam = SubsetFamily::new(
            &g,
            [
                g.subset_from_labels(["a"]).unwrap(),
                g.subset_from_labels(["b"]).unwrap(),
            ],
        )
        .unwrap();
        assert!(fam.intersect_selected(0..2).is_empty());
    }

    #[test]
    fn intersect_empty_selection_is_full_set() {
        let g = ground(&["a", "b", "c"]);
        let fam = SubsetFamily::from_masks(&g, vec![0b011]);
        assert_eq!(fam.intersect_selected(std::iter::empty()), g.full_subset());
    }

    #[test]
    fn submask_walk_is_ascending_and_complete() {
        let mask = 0b10110u16;
        let subs: Vec<u16> = submasks(mask).collect();
        assert_eq!(subs.len(), 1 << mask.count_ones());
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|s| s & !mask == 0));
    }

    proptest! {
        #[test]
        fn family_order_is_permutation_invariant(masks in prop::collection::vec(0u16..64, 0..20)) {
            let g = GroundSet::alphabetic(6).unwrap();
            let fam = SubsetFamily::from_masks(&g, masks.clone());
            let mut shuffled = masks;
            shuffled.reverse();
            let fam2 = SubsetFamily::from_masks(&g, shuffled);
            prop_assert_eq!(fam, fam2);
        }

        #[test]
        fn pairwise_intersection_is_lower_bound(a in 0u16..256, b in 0u16..256) {
            let g = GroundSet::alphabetic(8).unwrap();
            let sa = g.subset_from_mask(a).unwrap();
            let sb = g.subset_from_mask(b).unwrap();
            let fam = SubsetFamily::new(&g, [sa.clone(), sb.clone()]).unwrap();
            let inter = fam.intersect_selected(0..fam.len());
            prop_assert!(inter.is_subset_of(&sa).unwrap());
            prop_assert!(inter.is_subset_of(&sb).unwrap());
        }

        #[test]
        fn enumeration_length_is_exact(n in 0usize..=10) {
            let g = GroundSet::alphabetic(n).unwrap();
            prop_assert_eq!(g.subsets().count(), 1usize << n);
        }
    }
}
