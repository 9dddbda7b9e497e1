//! Declarative TOML description of Weierstrass curves, their named points,
//! birational maps between them and parametrized fiber components.
//!
//! ```toml
//! [[curve]]
//! name = "Eu"
//! parameter = "u"
//! a = ["u^2+3", "0", "(u^2-1)^2", "0", "0"]
//! points = { P3 = ["0", "0"] }
//!
//! [[map]]
//! name = "id"
//! source = "Eu"
//! target = "Eu"
//! x = "x"
//! y = "y"
//! parameter = "u"
//! pullbacks = [["u", "u"]]
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use mwlforge_core::weier::models::W_MINUS_ONE_COMPONENT;
use mwlforge_core::weier::{builtin_maps, BirationalMap, CurvePoint, FnFieldCurve, Model};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default)]
    curve: Vec<RawCurve>,
    #[serde(default)]
    map: Vec<RawMap>,
    #[serde(default)]
    component: Vec<RawComponent>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCurve {
    name: String,
    parameter: String,
    #[serde(default = "default_coordinates")]
    coordinates: [String; 2],
    /// `[a1, a2, a3, a4, a6]`.
    a: [String; 5],
    #[serde(default)]
    points: BTreeMap<String, [String; 2]>,
}

fn default_coordinates() -> [String; 2] {
    ["x".into(), "y".into()]
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    name: String,
    source: String,
    target: String,
    #[serde(default, rename = "let")]
    defs: Vec<[String; 2]>,
    x: String,
    y: String,
    parameter: String,
    #[serde(default)]
    identities: Vec<[String; 2]>,
    #[serde(default)]
    pullbacks: Vec<[String; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    name: String,
    curve: String,
    variable: String,
    parameter: String,
    x: String,
    y: String,
}

#[derive(Clone, Debug)]
pub struct CurveDecl {
    pub curve: FnFieldCurve,
    pub points: Vec<(String, CurvePoint)>,
}

#[derive(Clone, Debug)]
pub struct MapDecl {
    pub source: String,
    pub target: String,
    pub map: BirationalMap,
    /// `(f on the target, expected pullback on the source)`.
    pub pullbacks: Vec<(String, String)>,
}

/// A curve `z ↦ (param(z), x(z), y(z))` claimed to lie on a surface.
#[derive(Clone, Debug)]
pub struct ComponentDecl {
    pub name: String,
    pub curve: String,
    pub variable: String,
    pub parameter: String,
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, Default)]
pub struct CurveSet {
    pub curves: Vec<CurveDecl>,
    pub maps: Vec<MapDecl>,
    pub components: Vec<ComponentDecl>,
}

fn bad(msg: String) -> CliError {
    CliError::BadInput(msg)
}

impl CurveSet {
    pub fn parse(text: &str) -> CliResult<Self> {
        let raw: RawFile = toml::from_str(text).map_err(|e| bad(format!("curve file: {e}")))?;
        let mut set = CurveSet::default();
        for c in raw.curve {
            if set.find(&c.name).is_some() {
                return Err(bad(format!("curve {} defined twice", c.name)));
            }
            let a = [&c.a[0], &c.a[1], &c.a[2], &c.a[3], &c.a[4]].map(String::as_str);
            let curve = FnFieldCurve::parse(&c.name, &c.parameter, a)?.with_coordinates(&c.coordinates[0], &c.coordinates[1]);
            let mut points = Vec::new();
            for (name, [x, y]) in &c.points {
                let p = curve.point(x, y).map_err(|e| bad(format!("point {name} of {}: {e}", c.name)))?;
                points.push((name.clone(), p));
            }
            set.curves.push(CurveDecl { curve, points });
        }
        for m in raw.map {
            for end in [&m.source, &m.target] {
                if set.find(end).is_none() {
                    return Err(bad(format!("map {} refers to unknown curve {end}", m.name)));
                }
            }
            let defs: Vec<(&str, &str)> = m.defs.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
            let mut map = BirationalMap::parse(&m.name, &defs, &m.x, &m.y, &m.parameter)?;
            for [l, r] in &m.identities {
                map = map.with_identity(l, r)?;
            }
            set.maps.push(MapDecl {
                source: m.source,
                target: m.target,
                map,
                pullbacks: m.pullbacks.into_iter().map(|[a, b]| (a, b)).collect(),
            });
        }
        for c in raw.component {
            if set.find(&c.curve).is_none() {
                return Err(bad(format!("component {} lies on unknown curve {}", c.name, c.curve)));
            }
            set.components.push(ComponentDecl {
                name: c.name,
                curve: c.curve,
                variable: c.variable,
                parameter: c.parameter,
                x: c.x,
                y: c.y,
            });
        }
        Ok(set)
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// The four built-in models, the three maps onto `Eu` and the `w = -1` component.
    pub fn builtin() -> CliResult<Self> {
        let mut set = CurveSet::default();
        for m in Model::ALL {
            set.curves.push(CurveDecl {
                curve: m.curve(),
                points: m.sections()?,
            });
        }
        for check in builtin_maps()? {
            set.maps.push(MapDecl {
                source: check.source.slug().into(),
                target: Model::Eu.slug().into(),
                map: check.map,
                pullbacks: check.pullbacks.iter().map(|(a, b)| ((*a).into(), (*b).into())).collect(),
            });
        }
        let (z, u, x, y) = W_MINUS_ONE_COMPONENT;
        set.components.push(ComponentDecl {
            name: "w=-1".into(),
            curve: Model::Eu.slug().into(),
            variable: z.into(),
            parameter: u.into(),
            x: x.into(),
            y: y.into(),
        });
        Ok(set)
    }

    pub fn find(&self, name: &str) -> Option<&CurveDecl> {
        self.curves.iter().find(|c| c.curve.name == name)
    }

    pub fn curve(&self, name: &str) -> CliResult<&CurveDecl> {
        self.find(name).ok_or_else(|| bad(format!("no curve named {name:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let set = CurveSet::parse(
            r#"
            [[curve]]
            name = "E"
            parameter = "t"
            a = ["0", "0", "0", "t", "1"]
            points = { P = ["0", "1"] }
            "#,
        )
        .unwrap();
        assert_eq!(set.curves.len(), 1);
        assert_eq!(set.curves[0].points[0].0, "P");
        assert!(set.maps.is_empty());
    }

    #[test]
    fn bad_files() {
        let off_curve = r#"
            [[curve]]
            name = "E"
            parameter = "t"
            a = ["0", "0", "0", "t", "1"]
            points = { P = ["0", "2"] }
        "#;
        assert!(matches!(CurveSet::parse(off_curve), Err(CliError::BadInput(_))));
        let singular = r#"
            [[curve]]
            name = "E"
            parameter = "t"
            a = ["0", "0", "0", "0", "0"]
        "#;
        assert!(CurveSet::parse(singular).is_err());
        let dangling = r#"
            [[map]]
            name = "m"
            source = "A"
            target = "B"
            x = "x"
            y = "y"
            parameter = "t"
        "#;
        assert!(CurveSet::parse(dangling).is_err());
        assert!(CurveSet::parse("[[curve]]\nname = 3").is_err());
    }
}
