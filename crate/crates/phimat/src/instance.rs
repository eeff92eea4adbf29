//! The line-oriented instance file format.
//!
//! ```text
//! # comment
//! kind: phi-system          (or matroid-independents, matroid-flats)
//! elements: a b c
//! phi: a b                  (one line per subset; bare keyword = empty set)
//! ```
//!
//! The body keyword is `phi:`, `independent:` or `flat:` according to the
//! kind. `#` starts a comment, blank lines are skipped, CRLF input is
//! tolerated, and output always uses LF with a trailing newline. Element
//! bit order is the order of the `elements:` line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::sets::{GroundSet, Subset, SubsetFamily};
use crate::whitehead::PhiSystem;

/// What an instance file describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    PhiSystem,
    MatroidIndependents,
    MatroidFlats,
}

impl InstanceKind {
    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::PhiSystem => "phi-system",
            InstanceKind::MatroidIndependents => "matroid-independents",
            InstanceKind::MatroidFlats => "matroid-flats",
        }
    }

    fn keyword(self) -> &'static str {
        match self {
            InstanceKind::PhiSystem => "phi",
            InstanceKind::MatroidIndependents => "independent",
            InstanceKind::MatroidFlats => "flat",
        }
    }
}

/// Raw parsed file: labels and subset label lists, before any domain
/// validation.
#[derive(Clone, Debug)]
pub struct InstanceFile {
    pub kind: InstanceKind,
    pub elements: Vec<String>,
    pub body: Vec<Vec<String>>,
}

/// A parsed and validated instance.
pub enum Instance {
    Phi(PhiSystem),
    Matroid(Matroid),
}

impl Instance {
    pub fn ground(&self) -> &GroundSet {
        match self {
            Instance::Phi(s) => s.ground(),
            Instance::Matroid(m) => m.ground(),
        }
    }

    /// Canonical text form: phi-systems by their classes, matroids by
    /// their independent sets.
    pub fn emit(&self) -> String {
        match self {
            Instance::Phi(s) => emit_phi(s),
            Instance::Matroid(m) => emit_matroid(m, InstanceKind::MatroidIndependents),
        }
    }
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

/// Parses the raw structure of an instance file.
pub fn parse_instance_file(text: &str) -> Result<InstanceFile> {
    let mut kind: Option<(usize, InstanceKind)> = None;
    let mut elements: Option<(usize, Vec<String>)> = None;
    let mut body: Vec<Vec<String>> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| parse_err(lineno, format!("expected `keyword: ...`, got `{line}`")))?;
        let key = key.trim();
        let fields: Vec<String> = rest.split_whitespace().map(String::from).collect();

        match key {
            "kind" => {
                if kind.is_some() {
                    return Err(parse_err(lineno, "duplicate `kind:` line"));
                }
                let k = match rest.trim() {
                    "phi-system" => InstanceKind::PhiSystem,
                    "matroid-independents" => InstanceKind::MatroidIndependents,
                    "matroid-flats" => InstanceKind::MatroidFlats,
                    other => {
                        return Err(parse_err(
                            lineno,
                            format!(
                                "unknown kind `{other}` (expected phi-system, \
                                 matroid-independents or matroid-flats)"
                            ),
                        ))
                    }
                };
                kind = Some((lineno, k));
            }
            "elements" => {
                if kind.is_none() {
                    return Err(parse_err(lineno, "`elements:` before `kind:`"));
                }
                if elements.is_some() {
                    return Err(parse_err(lineno, "duplicate `elements:` line"));
                }
                elements = Some((lineno, fields));
            }
            word => {
                let (_, k) = kind
                    .ok_or_else(|| parse_err(lineno, format!("`{word}:` before `kind:`")))?;
                if elements.is_none() {
                    return Err(parse_err(lineno, format!("`{word}:` before `elements:`")));
                }
                if word != k.keyword() {
                    return Err(parse_err(
                        lineno,
                        format!("expected `{}:` lines for kind {}, got `{word}:`", k.keyword(), k.name()),
                    ));
                }
                body.push(fields);
            }
        }
    }

    let (_, kind) = kind.ok_or_else(|| parse_err(0, "missing `kind:` line"))?;
    let (elements_line, elements) =
        elements.ok_or_else(|| parse_err(0, "missing `elements:` line"))?;

    // Surface label problems with the line they came from.
    for (i, a) in elements.iter().enumerate() {
        if elements[..i].contains(a) {
            return Err(parse_err(elements_line, format!("duplicate label `{a}`")));
        }
    }
    if elements.len() > crate::sets::MAX_GROUND_SIZE {
        return Err(parse_err(
            elements_line,
            format!("{} elements exceed the maximum of 16", elements.len()),
        ));
    }

    Ok(InstanceFile {
        kind,
        elements,
        body,
    })
}

impl InstanceFile {
    /// Builds the domain object, running the matroid validations when the
    /// kind calls for them.
    pub fn into_instance(self) -> Result<Instance> {
        let ground = GroundSet::new(self.elements)?;
        let mut subsets: Vec<Subset> = Vec::with_capacity(self.body.len());
        for labels in &self.body {
            subsets.push(ground.subset_from_labels(labels)?);
        }
        let family = SubsetFamily::new(&ground, subsets)?;
        Ok(match self.kind {
            InstanceKind::PhiSystem => Instance::Phi(PhiSystem::new(ground, family)?),
            InstanceKind::MatroidIndependents => {
                Instance::Matroid(Matroid::from_independents(ground, family)?)
            }
            InstanceKind::MatroidFlats => Instance::Matroid(Matroid::from_flats(ground, family)?),
        })
    }
}

/// Parses and validates an instance in one step.
pub fn parse_instance(text: &str) -> Result<Instance> {
    parse_instance_file(text)?.into_instance()
}

fn emit_family(kind: InstanceKind, ground: &GroundSet, fam: &SubsetFamily) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind: {}", kind.name());
    let _ = writeln!(out, "elements: {}", ground.labels().join(" "));
    for member in fam.members() {
        let labels = member.labels();
        if labels.is_empty() {
            let _ = writeln!(out, "{}:", kind.keyword());
        } else {
            let _ = writeln!(out, "{}: {}", kind.keyword(), labels.join(" "));
        }
    }
    out
}

/// Canonical text for a phi-system.
pub fn emit_phi(sys: &PhiSystem) -> String {
    emit_family(InstanceKind::PhiSystem, sys.ground(), sys.phi_classes())
}

/// Canonical text for a matroid, as its independent sets or its flats.
pub fn emit_matroid(m: &Matroid, kind: InstanceKind) -> String {
    match kind {
        InstanceKind::MatroidIndependents => {
            emit_family(InstanceKind::MatroidIndependents, m.ground(), m.independents())
        }
        InstanceKind::MatroidFlats => {
            emit_family(InstanceKind::MatroidFlats, m.ground(), m.flats())
        }
        InstanceKind::PhiSystem => emit_family(InstanceKind::PhiSystem, m.ground(), m.flats()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_free_system_on_two_elements() {
        let text = "kind: phi-system\nelements: a b\nphi:\nphi: a\nphi: b\nphi: a b\n";
        let Instance::Phi(sys) = parse_instance(text).unwrap() else {
            panic!("expected phi-system");
        };
        assert_eq!(sys.phi_classes().len(), 4);
        assert!(sys.check_axioms().unwrap().overall());
    }

    #[test]
    fn parses_u12_from_flats() {
        let text = "kind: matroid-flats\nelements: a b\nflat:\nflat: a b\n";
        let Instance::Matroid(m) = parse_instance(text).unwrap() else {
            panic!("expected matroid");
        };
        assert_eq!(m.independents().masks(), &[0b00, 0b01, 0b10]);
        assert!(!m.is_simple());
    }

    #[test]
    fn rejects_duplicate_labels_with_line() {
        let text = "kind: phi-system\nelements: a a\n";
        match parse_instance(text) {
            Err(Error::Parse { line, reason }) => {
                assert_eq!(line, 2);
                assert!(reason.contains("duplicate"), "{reason}");
            }
            other => panic!("expected parse error, got {:?}", other.is_ok()),
        }
    }

    #[test]
    fn rejects_unknown_subset_label() {
        let text = "kind: phi-system\nelements: a b\nphi: a c\n";
        assert!(matches!(
            parse_instance(text),
            Err(Error::UnknownLabel(l)) if l == "c"
        ));
    }

    #[test]
    fn rejects_wrong_keyword_for_kind() {
        let text = "kind: phi-system\nelements: a\nflat: a\n";
        match parse_instance(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {:?}", other.is_ok()),
        }
    }

    #[test]
    fn tolerates_crlf_comments_and_missing_final_newline() {
        let text = "# header\r\nkind: phi-system\r\nelements: a b # inline\r\nphi: a b\r\nphi: a\r\nphi: b\r\nphi:";
        let Instance::Phi(sys) = parse_instance(text).unwrap() else {
            panic!("expected phi-system");
        };
        assert_eq!(sys.phi_classes().len(), 4);
    }

    #[test]
    fn emit_then_parse_is_identity_on_phi() {
        let sys = crate::catalog::free_system(3).unwrap();
        let text = emit_phi(&sys);
        let Instance::Phi(back) = parse_instance(&text).unwrap() else {
            panic!("expected phi-system");
        };
        assert_eq!(back.phi_classes(), sys.phi_classes());
        // Emit is canonical: a second emit is byte-identical.
        assert_eq!(emit_phi(&back), text);
    }

    #[test]
    fn emit_then_parse_is_identity_on_matroid_both_kinds() {
        let m = crate::catalog::uniform(2, 4).unwrap();
        for kind in [InstanceKind::MatroidIndependents, InstanceKind::MatroidFlats] {
            let text = emit_matroid(&m, kind);
            let Instance::Matroid(back) = parse_instance(&text).unwrap() else {
                panic!("expected matroid");
            };
            assert_eq!(back.independents(), m.independents());
        }
    }

    #[test]
    fn validation_failures_surface_from_matroid_kinds() {
        let text = "kind: matroid-independents\nelements: a b\nindependent:\nindependent: a b\n";
        assert!(matches!(
            parse_instance(text),
            Err(Error::IndependenceViolation { .. })
        ));
    }
}
