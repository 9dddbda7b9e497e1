//! The four Weierstrass models, their named sections and the maps between them.

use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use super::curve::{CurvePoint, FnFieldCurve};
use super::maps::BirationalMap;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Model {
    /// `y² + (u²+3)xy + (u²−1)²y = x³`, torsion `(ℤ/2)² × ℤ/3`.
    Eu,
    /// `Y² = X(X − w(1+4w))(X + w²(1+4w))`.
    Ew,
    /// `Y² − (p²+1)XY + 4p²Y = X(X−p²)(X−4p²)`.
    Ep,
    /// `Y² + 2(t²−1)XY − 2t²Y = X(X+t²)(X+4t²)`.
    Et,
}

impl Model {
    pub const ALL: [Model; 4] = [Model::Eu, Model::Ew, Model::Ep, Model::Et];

    pub fn slug(self) -> &'static str {
        match self {
            Model::Eu => "Eu",
            Model::Ew => "Ew",
            Model::Ep => "Ep",
            Model::Et => "Et",
        }
    }

    pub fn curve(self) -> FnFieldCurve {
        let c = match self {
            Model::Eu => FnFieldCurve::parse("Eu", "u", ["u^2+3", "0", "(u^2-1)^2", "0", "0"]),
            Model::Ew => FnFieldCurve::parse(
                "Ew",
                "w",
                ["0", "(1+4w)(w^2-w)", "0", "-w^3(1+4w)^2", "0"],
            )
            .map(|c| c.with_coordinates("X", "Y")),
            Model::Ep => FnFieldCurve::parse("Ep", "p", ["-(p^2+1)", "-5p^2", "4p^2", "4p^4", "0"])
                .map(|c| c.with_coordinates("X", "Y")),
            Model::Et => FnFieldCurve::parse("Et", "t", ["2(t^2-1)", "5t^2", "-2t^2", "4t^4", "0"])
                .map(|c| c.with_coordinates("X", "Y")),
        };
        c.expect("built-in model")
    }

    /// Named sections as `(name, x, y)` in the model's parameter.
    pub fn section_sources(self) -> &'static [(&'static str, &'static str, &'static str)] {
        match self {
            Model::Eu => &[
                ("A2", "-(u^2-1)^2/4", "(u^2-1)^3/8"),
                ("A22", "-(u+1)^2", "(u+1)^3"),
                ("A23", "-(u-1)^2", "-(u-1)^3"),
                ("P3", "0", "0"),
            ],
            Model::Ew => &[
                ("Q1", "0", "0"),
                ("Q2", "w(4w+1)", "0"),
                ("Q3", "-w^2(4w+1)", "0"),
                ("W1", "-4w^3", "-2w^3(2w+1)"),
            ],
            Model::Ep => &[("V1", "2p(p-1)", "2p(p-1)"), ("V2", "0", "-4p^2")],
            Model::Et => &[("Z1", "0", "0"), ("Z5", "-1", "(2t-1)(t+1)")],
        }
    }

    pub fn sections(self) -> Result<Vec<(String, CurvePoint)>> {
        let c = self.curve();
        self.section_sources()
            .iter()
            .map(|(n, x, y)| Ok(((*n).into(), c.point(x, y)?)))
            .collect()
    }

    pub fn section(self, name: &str) -> Result<CurvePoint> {
        self.sections()?
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
            .ok_or_else(|| Error::MissingData(alloc::format!("no section {name} on {}", self.slug())))
    }
}

impl FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Model::ALL
            .into_iter()
            .find(|m| m.slug().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: alloc::format!("unknown model {s:?}"),
            })
    }
}

/// A map from one of the models onto `E_u`, with the parameter formulas it carries.
#[derive(Clone, Debug)]
pub struct MapCheck {
    pub name: &'static str,
    pub source: Model,
    pub map: BirationalMap,
    /// `(f in x, y, u; expected pullback in source coordinates)`.
    pub pullbacks: Vec<(&'static str, &'static str)>,
}

/// `w` as a function on `E_u`.
pub const W_PARAMETER: &str = "x/(u^2-1)^2";
/// `p` as a function on `E_u`.
pub const P_PARAMETER: &str = "((2x+(u^2-1)^2)y - (u^2-1)x^2)/((u^2-1)x(x+(u+1)(u-1)^2))";
/// `t` as a function on `E_u`.
pub const T_PARAMETER: &str = "(2y + (u-3)(u-1)x - (u-1)^3(u+1)^2)/(2(u^2-1)(x + (u^2-1)^2/4))";

pub fn builtin_maps() -> Result<Vec<MapCheck>> {
    let m36 = BirationalMap::parse(
        "#36",
        &[("D", "Y - X*w - 2w^3(1+4w)")],
        "w(1+4w)^2(X+4w^3)^2(2Y+X(2w+1))^2/D^4",
        "-(1+4w)^3 X (X+4w^3)^4 (2Y+X(2w+1))^2/D^6",
        "(1+4w)(X+4w^3)/D + 1",
    )?;
    let m40 = BirationalMap::parse(
        "#40",
        &[
            ("G1", "(X-2p^2)Y + p^2(p^2+1)X - 4p^4"),
            ("G2", "(p+1)Y + X^2 - p^2(p+3)X"),
            ("G3", "(2p^2-X)Y - p*X^2 + 2p^2(2p-1)X + 8p^4"),
            ("G4", "(2p^2-X)Y + p*X^2 - 2p^3(p+2)X"),
            ("Q", "X^2 - p(p^2+4p-1)X - 4p^3"),
        ],
        "-G3^2 G4^2/(p^2 X Q^4)",
        "-G2 G4^2 G3^3/(p^2 X Q^6)",
        "-G1/(p Q)",
    )?;
    let m40bis = BirationalMap::parse(
        "#40bis",
        &[
            ("H1", "-(2t+1)Y + (t+1)(X+4t^2)"),
            ("Dt", "(2t+1)Y + (X+4t^2)(X-t)"),
        ],
        "-8Y(X+1)^2(X+4t^2)H1^2/Dt^4",
        "16(X+1)^2(X+4t^2)(2Y+4t^2 X+X^2)H1^4/Dt^6",
        "-((2t+1)Y - (X+4t^2)(X+2+t))/Dt",
    )?
    .with_identity("-((2t+1)Y - (X+4t^2)(X+2+t))/Dt - 1", "2H1/Dt")?
    .with_identity("-((2t+1)Y - (X+4t^2)(X+2+t))/Dt + 1", "2(X+1)(X+4t^2)/Dt")?;
    Ok(alloc::vec![
        MapCheck {
            name: "#36",
            source: Model::Ew,
            map: m36,
            pullbacks: alloc::vec![(W_PARAMETER, "w"), (P_PARAMETER, "-Y/(w(X - w(1+4w)))")],
        },
        MapCheck {
            name: "#40",
            source: Model::Ep,
            map: m40,
            pullbacks: alloc::vec![(P_PARAMETER, "p")],
        },
        MapCheck {
            name: "#40bis",
            source: Model::Et,
            map: m40bis,
            pullbacks: alloc::vec![(T_PARAMETER, "t")],
        },
    ])
}

/// The second component of the `w = −1` fiber, as `(var, u, x, y)`.
pub const W_MINUS_ONE_COMPONENT: (&str, &str, &str, &str) = (
    "z",
    "-2(z^2-3)/(z^2+3)",
    "-9(z-1)^2(z+3)^2(z-3)^2(z+1)^2/(z^2+3)^4",
    "27(z+3)^2(z-1)^2(z+1)^4(z-3)^4/(z^2+3)^6",
);
