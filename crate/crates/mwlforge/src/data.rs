//! The section/component incidence data of the three fibrations with a
//! Weierstrass model, read from JSON.

use std::collections::BTreeSet;
use std::path::Path;

use mwlforge_core::arith::{parse_rat, Int, Rat};
use mwlforge_core::mwl::tables::TableKind;
use mwlforge_core::mwl::{FiberSpec, Kodaira, SectionSet, SectionSpec};
use mwlforge_core::weier::Model;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// The data file shipped with the crate.
pub const EMBEDDED: &str = include_str!("../data/meets.json");

/// Environment variable naming a replacement data file.
pub const DATA_ENV: &str = "MWLFORGE_DATA";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeetsFile {
    pub fibrations: Vec<Fibration>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fibration {
    pub name: String,
    /// Slug of the Weierstrass model.
    pub model: String,
    /// Slug of the lattice-side frame.
    pub frame: String,
    /// Name of the curve taken as zero section.
    pub zero: String,
    pub fibers: Vec<FiberEntry>,
    /// Sections spanning the Mordell-Weil lattice modulo torsion.
    pub basis: Vec<String>,
    /// The lattice-side sections with the same classes as `basis`.
    pub lattice_basis: Vec<String>,
    pub sections: Vec<SectionEntry>,
    /// `(P, Q, P·Q)` for every pair of distinct sections.
    pub intersections: Vec<(String, String, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberEntry {
    pub kodaira: String,
    pub position: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alias: Option<String>,
    /// Component met on each fiber; `0` is the component met by the zero section.
    pub meets: Vec<usize>,
    /// `P·O`, or `-2` for the zero section itself.
    pub meets_zero: i64,
    pub printed: Printed,
}

/// Reference values the computed ones are compared with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Printed {
    pub height: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contributions: Option<Vec<String>>,
}

fn bad(msg: String) -> CliError {
    CliError::BadInput(msg)
}

impl MeetsFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        let f: MeetsFile = serde_json::from_str(text).map_err(|e| bad(format!("meets data: {e}")))?;
        for fib in &f.fibrations {
            fib.validate()?;
        }
        Ok(f)
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// The file named by `MWLFORGE_DATA`, or the embedded one.
    pub fn load() -> CliResult<Self> {
        match std::env::var_os(DATA_ENV) {
            Some(p) if !p.is_empty() => Self::read(Path::new(&p)),
            _ => Self::parse(EMBEDDED),
        }
    }

    /// Looks a fibration up by name, with or without the leading `#`.
    pub fn fibration(&self, name: &str) -> CliResult<&Fibration> {
        let key = name.trim_start_matches('#');
        self.fibrations
            .iter()
            .find(|f| f.name.trim_start_matches('#') == key)
            .ok_or_else(|| bad(format!("no fibration {name:?} in the meets data")))
    }

    pub fn for_model(&self, model: Model) -> Option<&Fibration> {
        self.fibrations.iter().find(|f| f.model.eq_ignore_ascii_case(model.slug()))
    }
}

pub fn table_kind(slug: &str) -> CliResult<TableKind> {
    TableKind::ALL
        .into_iter()
        .find(|k| k.slug() == slug)
        .ok_or_else(|| bad(format!("unknown frame {slug:?}")))
}

impl Fibration {
    pub fn model(&self) -> CliResult<Model> {
        self.model.parse().map_err(CliError::Core)
    }

    pub fn table_kind(&self) -> CliResult<TableKind> {
        table_kind(&self.frame)
    }

    pub fn fiber_specs(&self) -> CliResult<Vec<FiberSpec>> {
        self.fibers
            .iter()
            .map(|f| {
                let k: Kodaira = f.kodaira.parse()?;
                Ok(FiberSpec::new(k, &f.position))
            })
            .collect()
    }

    pub fn section(&self, name: &str) -> CliResult<&SectionEntry> {
        self.sections
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| bad(format!("{}: no section {name:?}", self.name)))
    }

    pub fn section_set(&self) -> CliResult<SectionSet> {
        let mut set = SectionSet::new(self.fiber_specs()?);
        for s in &self.sections {
            set.add(SectionSpec::new(&s.name, s.meets.clone(), s.meets_zero));
        }
        for (a, b, v) in &self.intersections {
            set.set_intersection(a, b, Int::from(*v));
        }
        Ok(set)
    }

    pub fn printed_height(&self, s: &SectionEntry) -> CliResult<Rat> {
        parse_rat(&s.printed.height)
            .ok_or_else(|| bad(format!("{}: height {:?} of {} is not a rational", self.name, s.printed.height, s.name)))
    }

    fn validate(&self) -> CliResult<()> {
        let err = |m: String| bad(format!("{}: {m}", self.name));
        self.model()?;
        self.table_kind()?;
        let fibers = self.fiber_specs()?;
        let mut names = BTreeSet::new();
        for s in &self.sections {
            if !names.insert(s.name.as_str()) {
                return Err(err(format!("section {} listed twice", s.name)));
            }
            if s.meets.len() != fibers.len() {
                return Err(err(format!("section {} has {} entries for {} fibers", s.name, s.meets.len(), fibers.len())));
            }
            for (f, &c) in fibers.iter().zip(&s.meets) {
                if c >= f.component_count {
                    return Err(err(format!("section {} meets component {c} of a {} fiber", s.name, f.kodaira)));
                }
            }
            let is_zero = s.name == self.zero;
            if is_zero != (s.meets_zero == -2) || (is_zero && s.meets.iter().any(|&c| c != 0)) {
                return Err(err(format!("section {} is inconsistent with the zero section {}", s.name, self.zero)));
            }
            if !is_zero && s.meets_zero < 0 {
                return Err(err(format!("section {} has P.O = {}", s.name, s.meets_zero)));
            }
            self.printed_height(s)?;
            if let Some(r) = &s.printed.relation {
                if r.len() != self.basis.len() {
                    return Err(err(format!("relation of {} has the wrong length", s.name)));
                }
            }
            if let Some(c) = &s.printed.contributions {
                if c.len() != fibers.len() || c.iter().any(|x| parse_rat(x).is_none()) {
                    return Err(err(format!("bad printed contributions for {}", s.name)));
                }
            }
        }
        for b in &self.basis {
            if !names.contains(b.as_str()) {
                return Err(err(format!("basis section {b} is not listed")));
            }
        }
        if self.lattice_basis.len() != self.basis.len() {
            return Err(err("lattice_basis and basis differ in length".into()));
        }
        let mut pairs = BTreeSet::new();
        for (a, b, _) in &self.intersections {
            if !names.contains(a.as_str()) || !names.contains(b.as_str()) || a == b {
                return Err(err(format!("intersection entry ({a}, {b}) names an unknown section")));
            }
            let key = if a < b { (a, b) } else { (b, a) };
            if !pairs.insert(key) {
                return Err(err(format!("intersection ({a}, {b}) listed twice")));
            }
        }
        let n = names.len();
        if pairs.len() != n * (n - 1) / 2 {
            return Err(err(format!("{} of {} intersection numbers given", pairs.len(), n * (n - 1) / 2)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_file_parses() {
        let f = MeetsFile::parse(EMBEDDED).unwrap();
        assert_eq!(f.fibrations.len(), 3);
        assert_eq!(f.fibration("40bis").unwrap().model().unwrap(), Model::Et);
        assert_eq!(f.fibration("#36").unwrap().table_kind().unwrap(), TableKind::D64);
        assert!(f.fibration("41").is_err());
        assert_eq!(f.for_model(Model::Ep).unwrap().name, "#40");
        assert!(f.for_model(Model::Eu).is_none());
    }

    #[test]
    fn missing_intersection_rejected() {
        let mut f = MeetsFile::parse(EMBEDDED).unwrap();
        f.fibrations[1].intersections.pop();
        let text = serde_json::to_string(&f).unwrap();
        assert!(matches!(MeetsFile::parse(&text), Err(CliError::BadInput(_))));
    }

    #[test]
    fn out_of_range_component_rejected() {
        let mut f = MeetsFile::parse(EMBEDDED).unwrap();
        f.fibrations[2].sections[1].meets[0] = 8;
        let text = serde_json::to_string(&f).unwrap();
        assert!(MeetsFile::parse(&text).is_err());
    }
}
