//! Symbolic verification of birational maps, elliptic parameters and parametrized
//! curves, by exact reduction in the function field of the source curve.

use alloc::string::String;
use alloc::vec::Vec;

use super::curve::FnFieldCurve;
use super::expr::{lookup, Definitions, Expr, Ring};
use super::field::{Elem, FunctionField, UnivariateField};
use super::poly::RatFn;
use crate::error::Result;

/// `(x, y, param)` of the target as expressions in the source coordinates, after
/// auxiliary definitions. `identities` are extra equalities to check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirationalMap {
    pub name: String,
    pub defs: Definitions,
    pub x: Expr,
    pub y: Expr,
    pub param: Expr,
    pub identities: Vec<(Expr, Expr)>,
}

impl BirationalMap {
    pub fn parse(name: &str, defs: &[(&str, &str)], x: &str, y: &str, param: &str) -> Result<Self> {
        Ok(BirationalMap {
            name: name.into(),
            defs: Definitions::parse(defs)?,
            x: Expr::parse(x)?,
            y: Expr::parse(y)?,
            param: Expr::parse(param)?,
            identities: Vec::new(),
        })
    }

    pub fn with_identity(mut self, lhs: &str, rhs: &str) -> Result<Self> {
        self.identities.push((Expr::parse(lhs)?, Expr::parse(rhs)?));
        Ok(self)
    }

    /// `(x, y, t) ↦ (x, y, t)` on `c`.
    pub fn identity(c: &FnFieldCurve) -> Result<Self> {
        Self::parse("identity", &[], &c.xvar, &c.yvar, &c.param)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapReport {
    pub on_target: bool,
    pub identities: Vec<bool>,
}

impl MapReport {
    pub fn verified(&self) -> bool {
        self.on_target && self.identities.iter().all(|&b| b)
    }
}

struct Pulled {
    field: FunctionField,
    env: Vec<(String, Elem)>,
    image: [Elem; 3],
}

fn pull(src: &FnFieldCurve, map: &BirationalMap) -> Result<Pulled> {
    let k = FunctionField::new(&src.a);
    let base = alloc::vec![
        (src.param.clone(), k.s()),
        (src.xvar.clone(), k.x()),
        (src.yvar.clone(), k.y()),
    ];
    let env = map.defs.bind(&k, &base)?;
    let ev = |e: &Expr| e.eval(&k, &|n| lookup(&env, n));
    let image = [ev(&map.x)?, ev(&map.y)?, ev(&map.param)?];
    Ok(Pulled { field: k, env, image })
}

/// Substitutes the map into the target equation and reduces modulo the source curve.
pub fn verify_birational_map(src: &FnFieldCurve, dst: &FnFieldCurve, map: &BirationalMap) -> Result<MapReport> {
    let p = pull(src, map)?;
    let k = &p.field;
    let [x, y, t] = &p.image;
    let on_target = k.is_zero(&dst.equation(k, x, y, t));
    let identities = map
        .identities
        .iter()
        .map(|(l, r)| {
            let ev = |e: &Expr| e.eval(k, &|n| lookup(&p.env, n));
            Ok(k.is_zero(&k.sub(&ev(l)?, &ev(r)?)))
        })
        .collect::<Result<_>>()?;
    Ok(MapReport { on_target, identities })
}

/// Whether `f`, a function of the target coordinates, pulls back along `map` to
/// `expected`, a function of the source coordinates.
pub fn verify_pullback(
    src: &FnFieldCurve,
    dst: &FnFieldCurve,
    map: &BirationalMap,
    f: &str,
    expected: &str,
) -> Result<bool> {
    let p = pull(src, map)?;
    let k = &p.field;
    let [x, y, t] = &p.image;
    let target_env = alloc::vec![
        (dst.param.clone(), t.clone()),
        (dst.xvar.clone(), x.clone()),
        (dst.yvar.clone(), y.clone()),
    ];
    let lhs = Expr::parse(f)?.eval(k, &|n| lookup(&target_env, n))?;
    let rhs = Expr::parse(expected)?.eval(k, &|n| lookup(&p.env, n))?;
    Ok(k.is_zero(&k.sub(&lhs, &rhs)))
}

/// `param`, a function of the target coordinates, is the elliptic parameter of the
/// source fibration: it pulls back to the source parameter itself.
pub fn verify_elliptic_parameter(
    src: &FnFieldCurve,
    dst: &FnFieldCurve,
    map: &BirationalMap,
    param: &str,
) -> Result<bool> {
    verify_pullback(src, dst, map, param, &src.param)
}

/// Whether `z ↦ (t(z), x(z), y(z))` lies on `c` identically in `z`.
pub fn verify_parametrized_component(c: &FnFieldCurve, var: &str, t: &str, x: &str, y: &str) -> Result<bool> {
    let ev = |s: &str| Expr::parse(s)?.eval(&UnivariateField, &|n| (n == var).then(RatFn::var));
    let (t, x, y) = (ev(t)?, ev(x)?, ev(y)?);
    Ok(c.equation(&UnivariateField, &x, &y, &t).is_zero())
}
