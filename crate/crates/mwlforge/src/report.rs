//! Typed reports for every command. Exact rationals are serialized as `"n/d"`
//! strings; every report carries the consistency checks that decide the exit code.

use mwlforge_core::arith::{self, rat_to_string, Int, Rat, RatMatrix};
use mwlforge_core::frame::{a92d6_embedding, compute_frame, d64_embedding, is_positive_definite, Embedding, Frame};
use mwlforge_core::mwl::tables::{build_table, SectionTable, TableKind};
use mwlforge_core::mwl::{dictionary_ade_kodaira, format_relation, qform_equivalent, total_contribution, QformOutcome, SectionSpec};
use mwlforge_core::niemeier::{
    a92d6_automorphisms, make_niemeier_a92d6, make_niemeier_d64, GlueAutomorphism, NiemeierLattice,
};
use mwlforge_core::rootlat::RootType;
use mwlforge_core::weier::fibers::weight_at_infinity;
use mwlforge_core::weier::{
    euler_sum, singular_fibers, verify_birational_map, verify_parametrized_component, verify_pullback, CurvePoint,
    FnFieldCurve,
};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::curvefile::{CurveDecl, CurveSet};
use crate::data::{Fibration, MeetsFile};
use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Lattice {
    #[value(name = "D64")]
    D64,
    #[value(name = "A92D6")]
    A92D6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum EmbeddingChoice {
    I1,
    I2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

pub fn q(r: &Rat) -> String {
    rat_to_string(r)
}

pub fn qm(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(q).collect()).collect()
}

fn ints(v: &[Int]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn det(m: &RatMatrix) -> Rat {
    if m.rows() == 0 {
        return Rat::one();
    }
    arith::det(m).expect("square")
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Frame(FrameReport),
    Table(TableReport),
    Fibration(FibrationReport),
    Fibers(FibersReport),
    Maps(MapsReport),
    Auts(AutsReport),
    Qform(QformReport),
}

impl Report {
    pub fn checks(&self) -> &[Check] {
        match self {
            Report::Frame(r) => &r.checks,
            Report::Table(r) => &r.checks,
            Report::Fibration(r) => &r.checks,
            Report::Fibers(r) => &r.checks,
            Report::Maps(r) => &r.checks,
            Report::Auts(r) => &r.checks,
            Report::Qform(r) => &r.checks,
        }
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks().iter().filter(|c| !c.pass).collect()
    }

    pub fn passed(&self) -> bool {
        self.failed().is_empty()
    }
}

/// The embedding of `A5 ⊕ A1` selected on the command line.
pub fn embedding(lattice: Lattice, e: EmbeddingChoice) -> CliResult<Embedding> {
    let second = e == EmbeddingChoice::I2;
    Ok(match lattice {
        Lattice::D64 => d64_embedding(&make_niemeier_d64(), second)?,
        Lattice::A92D6 => a92d6_embedding(&make_niemeier_a92d6(), second)?,
    })
}

pub fn table_kind(lattice: Lattice, e: EmbeddingChoice) -> CliResult<TableKind> {
    match (lattice, e) {
        (Lattice::D64, EmbeddingChoice::I1) => Ok(TableKind::D64),
        (Lattice::A92D6, EmbeddingChoice::I1) => Ok(TableKind::A92D6First),
        (Lattice::A92D6, EmbeddingChoice::I2) => Ok(TableKind::A92D6Second),
        (Lattice::D64, EmbeddingChoice::I2) => Err(CliError::BadInput(
            "the second embedding into N(D6^4) is isomorphic to the first; use --embedding i1".into(),
        )),
    }
}

// ---------------------------------------------------------------- frame

#[derive(Clone, Debug, Serialize)]
pub struct FrameReport {
    pub command: &'static str,
    pub lattice: String,
    pub embedding: String,
    pub root_type: Vec<String>,
    pub fibers: Vec<String>,
    pub det_n: String,
    pub det_w: String,
    pub w_over_n: Vec<String>,
    pub torsion: Vec<String>,
    pub mw_rank: usize,
    pub mw_gram: Vec<Vec<String>>,
    pub mw_det: String,
    pub det_w_root: String,
    pub discriminant: String,
    pub checks: Vec<Check>,
}

pub fn frame_report(lattice: Lattice, e: EmbeddingChoice) -> CliResult<FrameReport> {
    let emb = embedding(lattice, e)?;
    let f = compute_frame(&emb)?;
    let roots = f.root_type_names();
    let fibers = roots
        .iter()
        .map(|r| Ok(dictionary_ade_kodaira(RootType::parse(r)?).to_string()))
        .collect::<CliResult<Vec<_>>>()?;
    let wn = arith::rat_int(&f.w_over_n_order());
    let disc = f.discriminant_identity();
    let root_rank: usize = f.root_summands.iter().map(|c| c.ty.rank).sum();
    let checks = vec![
        Check::new("discriminant identity gives -12", disc == Rat::from_integer(Int::from(-12)), q(&disc)),
        Check::new(
            "det N = det W * |W/N|^2",
            f.det_n == &f.det_w * &wn * &wn,
            format!("{} = {} * {}^2", q(&f.det_n), q(&f.det_w), q(&wn)),
        ),
        Check::new(
            "rank W = rank W_root + MW rank",
            f.w_basis.len() == root_rank + f.mw_rank,
            format!("{} = {} + {}", f.w_basis.len(), root_rank, f.mw_rank),
        ),
        Check::new("MW Gram is positive definite", f.mw_rank == 0 || is_positive_definite(&f.mw_gram), ""),
    ];
    Ok(FrameReport {
        command: "frame",
        lattice: f.lattice().name.clone(),
        embedding: emb.name.clone(),
        root_type: roots,
        fibers,
        det_n: q(&f.det_n),
        det_w: q(&f.det_w),
        w_over_n: ints(&f.w_over_n),
        torsion: ints(&f.torsion),
        mw_rank: f.mw_rank,
        mw_gram: qm(&f.mw_gram),
        mw_det: q(&det(&f.mw_gram)),
        det_w_root: q(&f.det_w_root()),
        discriminant: q(&disc),
        checks,
    })
}

// ---------------------------------------------------------------- lattice tables

#[derive(Clone, Debug, Serialize)]
pub struct Column {
    pub kodaira: String,
    pub position: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRowOut {
    pub name: String,
    pub notation: String,
    pub meets: Vec<usize>,
    pub contributions: Vec<String>,
    pub pairings: Vec<String>,
    pub height: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation_text: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub command: &'static str,
    pub title: String,
    pub frame: &'static str,
    pub columns: Vec<Column>,
    pub basis: Vec<String>,
    pub basis_gram: Vec<Vec<String>>,
    pub basis_det: String,
    pub rows: Vec<TableRowOut>,
    pub checks: Vec<Check>,
}

/// Heights and pairings of named table rows through the projection of `ω`.
pub fn projected_gram(frame: &Frame, table: &SectionTable, names: &[&str]) -> CliResult<RatMatrix> {
    let reps = names
        .iter()
        .map(|n| {
            table
                .row(n)
                .map(|r| r.omega.clone())
                .ok_or_else(|| CliError::BadInput(format!("no row {n} in {}", table.title)))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(frame.height_gram(&reps))
}

pub fn table_report(kind: TableKind) -> CliResult<TableReport> {
    let frame = kind.frame()?;
    let t = build_table(kind, &frame)?;
    table_report_from(kind, &frame, &t)
}

pub fn table_report_from(kind: TableKind, frame: &Frame, t: &SectionTable) -> CliResult<TableReport> {
    let basis: Vec<&str> = t.basis.iter().map(String::as_str).collect();
    let names: Vec<&str> = t.rows.iter().map(|r| r.name.as_str()).collect();
    let proj = projected_gram(frame, t, &names)?;

    let mut checks = Vec::new();
    let diag_ok = t.rows.iter().enumerate().all(|(i, r)| proj.get(i, i) == &r.height);
    checks.push(Check::new("heights from contributions equal heights from projections", diag_ok, ""));

    let zero: Vec<&str> = t.rows.iter().filter(|r| r.height.is_zero()).map(|r| r.name.as_str()).collect();
    let tors = frame.torsion_order();
    checks.push(Check::new(
        "height-0 rows are the nonzero torsion sections",
        Int::from(zero.len() + 1) == tors,
        format!("{} rows of height 0, torsion of order {tors}", zero.len()),
    ));

    if !basis.is_empty() {
        let g = &t.basis_gram;
        let mut bil = true;
        for (i, a) in t.rows.iter().enumerate() {
            for (j, b) in t.rows.iter().enumerate() {
                let (Some(x), Some(y)) = (&a.relation, &b.relation) else {
                    bil = false;
                    continue;
                };
                let x: Vec<Rat> = x.iter().map(arith::rat_int).collect();
                let y: Vec<Rat> = y.iter().map(arith::rat_int).collect();
                let gy = g.mul_vec(&y);
                bil &= &arith::dot(&x, &gy) == proj.get(i, j);
            }
        }
        checks.push(Check::new("pairings are bilinear in the basis relations", bil, ""));
        checks.push(Check::new(
            "basis Gram has the determinant of the MW lattice",
            det(g) == det(&frame.mw_gram),
            q(&det(g)),
        ));
    }

    let rows = t
        .rows
        .iter()
        .map(|r| TableRowOut {
            name: r.name.clone(),
            notation: r.notation.clone(),
            meets: r.meets.clone(),
            contributions: r.contributions.iter().map(q).collect(),
            pairings: r.pairings.iter().map(q).collect(),
            height: q(&r.height),
            order: r.order,
            relation: r.relation.as_ref().map(|x| ints(x)),
            relation_text: r.relation.as_ref().map(|x| format_relation(x, &basis)),
        })
        .collect();
    Ok(TableReport {
        command: "tables",
        title: t.title.clone(),
        frame: kind.slug(),
        columns: t
            .columns
            .iter()
            .map(|c| Column {
                kodaira: c.kodaira.to_string(),
                position: c.position.clone(),
            })
            .collect(),
        basis: t.basis.clone(),
        basis_gram: qm(&t.basis_gram),
        basis_det: q(&det(&t.basis_gram)),
        rows,
        checks,
    })
}

// ---------------------------------------------------------------- fibration tables

#[derive(Clone, Debug, Serialize)]
pub struct FibrationRow {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alias: Option<String>,
    pub meets: Vec<usize>,
    pub meets_zero: i64,
    pub contributions: Vec<String>,
    pub height: String,
    pub printed_height: String,
    pub relation: Vec<String>,
    pub relation_text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_relation: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_printed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weierstrass_order: Option<Option<u32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FibrationReport {
    pub command: &'static str,
    pub fibration: String,
    pub model: String,
    pub frame: String,
    pub zero: String,
    pub columns: Vec<Column>,
    pub basis: Vec<String>,
    pub basis_gram: Vec<Vec<String>>,
    pub basis_det: String,
    pub lattice_basis: Vec<String>,
    pub lattice_gram: Vec<Vec<String>>,
    pub frame_mw_gram: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform_to_frame: Option<Vec<Vec<String>>>,
    pub rows: Vec<FibrationRow>,
    pub relation_mismatches: Vec<String>,
    pub checks: Vec<Check>,
}

/// Sums the named points of `alias` (`"O"`, `"Q1"`, `"Q2+W1"`) on `decl`.
fn alias_point(decl: &CurveDecl, alias: &str) -> Option<CurvePoint> {
    if alias == "O" {
        return Some(CurvePoint::Infinity);
    }
    let mut acc = CurvePoint::Infinity;
    for part in alias.split('+') {
        let p = decl.points.iter().find(|(n, _)| n == part)?;
        acc = decl.curve.add(&acc, &p.1).ok()?;
    }
    Some(acc)
}

pub fn fibration_report(data: &MeetsFile, name: &str) -> CliResult<FibrationReport> {
    let fib: &Fibration = data.fibration(name)?;
    let set = fib.section_set()?;
    let fibers = fib.fiber_specs()?;
    let basis: Vec<&str> = fib.basis.iter().map(String::as_str).collect();
    let g = set.height_matrix(&basis)?.gram;

    let model = fib.model()?;
    let decl = CurveDecl {
        curve: model.curve(),
        points: model.sections()?,
    };

    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let mut heights_ok = true;
    let mut contr_ok = true;
    let mut torsion_ok = true;
    let mut weier_ok = true;
    for s in &fib.sections {
        let spec = set.get(&s.name)?;
        let h = set.height(&s.name)?;
        let printed_h = fib.printed_height(s)?;
        heights_ok &= h == printed_h;
        let contributions = fibers
            .iter()
            .zip(&spec.meets)
            .map(|(f, &c)| {
                let one = SectionSpec::new("", vec![c], 0);
                total_contribution(&one, &one, std::slice::from_ref(f))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(pc) = &s.printed.contributions {
            contr_ok &= pc.iter().zip(&contributions).all(|(p, c)| arith::parse_rat(p).as_ref() == Some(c));
        }
        let rel = set.express_in_basis(&s.name, &basis)?;
        torsion_ok &= h.is_zero() == rel.iter().all(Zero::is_zero);
        let (printed_relation, matches) = match &s.printed.relation {
            Some(p) => {
                let m = p.iter().zip(&rel).all(|(a, b)| Int::from(*a) == *b);
                if !m {
                    mismatches.push(s.name.clone());
                }
                (Some(p.clone()), Some(m))
            }
            None => (None, None),
        };
        let weierstrass_order = match s.alias.as_deref().and_then(|a| alias_point(&decl, a)) {
            Some(p) => {
                let ord = decl.curve.point_order(&p)?;
                weier_ok &= ord.is_some() == h.is_zero();
                Some(ord)
            }
            None => None,
        };
        rows.push(FibrationRow {
            name: s.name.clone(),
            alias: s.alias.clone(),
            meets: s.meets.clone(),
            meets_zero: s.meets_zero,
            contributions: contributions.iter().map(q).collect(),
            height: q(&h),
            printed_height: s.printed.height.clone(),
            relation: ints(&rel),
            relation_text: format_relation(&rel, &basis),
            printed_relation,
            matches_printed: matches,
            weierstrass_order,
        });
    }

    let kind = fib.table_kind()?;
    let frame = kind.frame()?;
    let table = build_table(kind, &frame)?;
    let lb: Vec<&str> = fib.lattice_basis.iter().map(String::as_str).collect();
    let lattice_gram = projected_gram(&frame, &table, &lb)?;
    let eq = qform_equivalent(&g, &frame.mw_gram)?;

    let checks = vec![
        Check::new("heights match the printed table", heights_ok, ""),
        Check::new("contributions match the printed table", contr_ok, ""),
        Check::new("height 0 exactly for sections with zero coordinates", torsion_ok, ""),
        Check::new("Weierstrass points have finite order exactly at height 0", weier_ok, ""),
        Check::new(
            format!("basis Gram equals the lattice Gram of {}", fib.lattice_basis.join(", ")),
            g == lattice_gram,
            "",
        ),
        Check::new(
            "basis Gram is equivalent to the frame's MW Gram",
            eq.is_equivalent(),
            match &eq {
                QformOutcome::Equivalent { .. } => String::new(),
                QformOutcome::Inequivalent { reason } => reason.clone(),
            },
        ),
    ];
    Ok(FibrationReport {
        command: "tables",
        fibration: fib.name.clone(),
        model: fib.model.clone(),
        frame: fib.frame.clone(),
        zero: fib.zero.clone(),
        columns: fib
            .fibers
            .iter()
            .map(|f| Column {
                kodaira: f.kodaira.clone(),
                position: f.position.clone(),
            })
            .collect(),
        basis: fib.basis.clone(),
        basis_gram: qm(&g),
        basis_det: q(&det(&g)),
        lattice_basis: fib.lattice_basis.clone(),
        lattice_gram: qm(&lattice_gram),
        frame_mw_gram: qm(&frame.mw_gram),
        transform_to_frame: match eq {
            QformOutcome::Equivalent { transform } => Some(qm(&arith::int_matrix_to_rat(&transform))),
            QformOutcome::Inequivalent { .. } => None,
        },
        rows,
        relation_mismatches: mismatches,
        checks,
    })
}

// ---------------------------------------------------------------- fibers

#[derive(Clone, Debug, Serialize)]
pub struct FiberOut {
    pub place: String,
    pub degree: usize,
    pub kodaira: String,
    pub euler: u32,
    /// `[v(c4), v(c6), v(Δ)]` on the minimal model; `null` is infinite.
    pub valuations: (Option<u32>, Option<u32>, u32),
}

#[derive(Clone, Debug, Serialize)]
pub struct PointOut {
    pub name: String,
    pub point: String,
    pub order: Option<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionOut {
    pub order: usize,
    pub invariants: Vec<u64>,
    pub primary: Vec<u64>,
    pub group_axioms: bool,
    pub all_on_curve: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrameMatch {
    pub fibration: String,
    pub frame: String,
    pub from_fibers: Vec<String>,
    pub from_frame: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FibersReport {
    pub command: &'static str,
    pub curve: String,
    pub parameter: String,
    pub coefficients: Vec<String>,
    pub weight: u32,
    pub fibers: Vec<FiberOut>,
    pub euler_sum: u32,
    pub points: Vec<PointOut>,
    pub torsion: TorsionOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frame_match: Option<FrameMatch>,
    pub checks: Vec<Check>,
}

fn root_multiset(names: impl IntoIterator<Item = String>) -> Vec<String> {
    let mut v: Vec<String> = names.into_iter().collect();
    v.sort();
    v
}

pub fn fibers_report(decl: &CurveDecl, fibration: Option<&Fibration>) -> CliResult<FibersReport> {
    let c: &FnFieldCurve = &decl.curve;
    let fibers = singular_fibers(c)?;
    let total = euler_sum(&fibers);
    let weight = weight_at_infinity(c);

    let mut points = Vec::new();
    let mut finite = Vec::new();
    for (name, p) in &decl.points {
        let order = c.point_order(p)?;
        if order.is_some() {
            finite.push(p.clone());
        }
        points.push(PointOut {
            name: name.clone(),
            point: p.to_string_in(&c.param),
            order,
        });
    }
    let g = c.torsion_structure(&finite, 64)?;
    let torsion = TorsionOut {
        order: g.order(),
        invariants: g.invariant_factors(),
        primary: g.primary_factors(),
        group_axioms: g.is_abelian_group(),
        all_on_curve: g.all_on_curve,
    };

    let mut checks = vec![
        Check::new(
            "Euler numbers sum to 12 * weight",
            total == 12 * weight,
            format!("{total} = 12 * {weight}"),
        ),
        Check::new("torsion subgroup satisfies the group axioms", torsion.group_axioms && torsion.all_on_curve, ""),
    ];

    let frame_match = match fibration {
        Some(fib) => {
            let from_fibers = root_multiset(
                fibers
                    .iter()
                    .filter_map(|f| f.kodaira.root_type())
                    .map(|t| t.to_string()),
            );
            let e = match fib.table_kind()? {
                mwlforge_core::mwl::tables::TableKind::D64 => embedding(Lattice::D64, EmbeddingChoice::I1)?,
                mwlforge_core::mwl::tables::TableKind::A92D6First => embedding(Lattice::A92D6, EmbeddingChoice::I1)?,
                mwlforge_core::mwl::tables::TableKind::A92D6Second => embedding(Lattice::A92D6, EmbeddingChoice::I2)?,
            };
            let from_frame = root_multiset(compute_frame(&e)?.root_type_names());
            checks.push(Check::new(
                "reducible fibers match the frame's root type",
                from_fibers == from_frame,
                format!("{} vs {}", from_fibers.join("+"), from_frame.join("+")),
            ));
            Some(FrameMatch {
                fibration: fib.name.clone(),
                frame: fib.frame.clone(),
                from_fibers,
                from_frame,
            })
        }
        None => None,
    };

    Ok(FibersReport {
        command: "fibers",
        curve: c.name.clone(),
        parameter: c.param.clone(),
        coefficients: c.a.iter().map(|p| p.to_string_in(&c.param)).collect(),
        weight,
        fibers: fibers
            .iter()
            .map(|f| FiberOut {
                place: f.place.to_string_in(&c.param),
                degree: f.place.degree(),
                kodaira: f.kodaira.to_string(),
                euler: f.euler_contribution(),
                valuations: f.valuations,
            })
            .collect(),
        euler_sum: total,
        points,
        torsion,
        frame_match,
        checks,
    })
}

// ---------------------------------------------------------------- maps

#[derive(Clone, Debug, Serialize)]
pub struct IdentityOut {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MapOut {
    pub name: String,
    pub source: String,
    pub target: String,
    pub on_target: bool,
    pub identities: Vec<IdentityOut>,
    pub pullbacks: Vec<IdentityOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentOut {
    pub name: String,
    pub curve: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MapsReport {
    pub command: &'static str,
    pub maps: Vec<MapOut>,
    pub components: Vec<ComponentOut>,
    pub checks: Vec<Check>,
}

pub fn maps_report(set: &CurveSet) -> CliResult<MapsReport> {
    let mut maps = Vec::new();
    let mut checks = Vec::new();
    for m in &set.maps {
        let src = &set.curve(&m.source)?.curve;
        let dst = &set.curve(&m.target)?.curve;
        let r = verify_birational_map(src, dst, &m.map)?;
        let identities: Vec<IdentityOut> = m
            .map
            .identities
            .iter()
            .zip(&r.identities)
            .map(|((l, rh), &holds)| IdentityOut {
                lhs: l.to_string(),
                rhs: rh.to_string(),
                holds,
            })
            .collect();
        let pullbacks = m
            .pullbacks
            .iter()
            .map(|(f, e)| {
                Ok(IdentityOut {
                    lhs: f.clone(),
                    rhs: e.clone(),
                    holds: verify_pullback(src, dst, &m.map, f, e)?,
                })
            })
            .collect::<CliResult<Vec<_>>>()?;
        checks.push(Check::new(format!("{}: image lies on {}", m.map.name, m.target), r.on_target, ""));
        for i in &identities {
            checks.push(Check::new(format!("{}: {} = {}", m.map.name, i.lhs, i.rhs), i.holds, ""));
        }
        for p in &pullbacks {
            checks.push(Check::new(format!("{}: pullback of {} is {}", m.map.name, p.lhs, p.rhs), p.holds, ""));
        }
        maps.push(MapOut {
            name: m.map.name.clone(),
            source: m.source.clone(),
            target: m.target.clone(),
            on_target: r.on_target,
            identities,
            pullbacks,
        });
    }
    let mut components = Vec::new();
    for c in &set.components {
        let curve = &set.curve(&c.curve)?.curve;
        let holds = verify_parametrized_component(curve, &c.variable, &c.parameter, &c.x, &c.y)?;
        checks.push(Check::new(format!("component {} lies on {}", c.name, c.curve), holds, ""));
        components.push(ComponentOut {
            name: c.name.clone(),
            curve: c.curve.clone(),
            holds,
        });
    }
    Ok(MapsReport {
        command: "verify-maps",
        maps,
        components,
        checks,
    })
}

// ---------------------------------------------------------------- automorphisms

#[derive(Clone, Debug, Serialize)]
pub struct AutOut {
    pub name: String,
    pub preserves_code: bool,
    pub order: usize,
    pub fixed: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitOut {
    pub from: String,
    pub to: String,
    pub group: Vec<String>,
    pub group_order: usize,
    pub equivalent: bool,
    pub expected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AutsReport {
    pub command: &'static str,
    pub lattice: String,
    pub glue_code_size: usize,
    pub automorphisms: Vec<AutOut>,
    pub orbits: Vec<OrbitOut>,
    pub checks: Vec<Check>,
}

fn aut_out(lat: &NiemeierLattice, a: &GlueAutomorphism) -> CliResult<AutOut> {
    let id = GlueAutomorphism::identity(lat);
    let same = |x: &GlueAutomorphism| x.flips == id.flips && x.permutation == id.permutation;
    let mut order = 1;
    let mut p = a.clone();
    while !same(&p) {
        p = p.compose(a);
        order += 1;
    }
    let mut fixed = Vec::new();
    for v in &lat.glue_code {
        if lat.apply_aut(a, v)? == *v {
            fixed.push(v.to_string());
        }
    }
    Ok(AutOut {
        name: a.name.clone(),
        preserves_code: lat.is_glue_automorphism(a),
        order,
        fixed,
    })
}

fn orbit(
    lat: &NiemeierLattice,
    e1: &Embedding,
    e2: &Embedding,
    gens: &[GlueAutomorphism],
    expected: bool,
) -> OrbitOut {
    OrbitOut {
        from: e1.name.clone(),
        to: e2.name.clone(),
        group: gens.iter().map(|g| g.name.clone()).collect(),
        group_order: lat.generated_group(gens).len(),
        equivalent: lat.embedding_orbit_equivalent(e1, e2, gens),
        expected,
    }
}

/// `A1 ↦ a_node` in component `comp`, `A5 ↦ i1` or `i2` in `D6`.
fn a92d6_variant(lat: &NiemeierLattice, comp: usize, node: usize, second: bool) -> CliResult<Embedding> {
    let nodes = if second { [6, 4, 3, 2, 1] } else { [5, 4, 3, 2, 1] };
    let name = format!("a{node}@A9({}), {}", comp + 1, if second { "i2" } else { "i1" });
    Ok(Embedding::from_nodes(&name, lat.clone(), (2, nodes), (comp, node))?)
}

pub fn auts_report(lattice: Lattice) -> CliResult<AutsReport> {
    let mut checks = Vec::new();
    let mut auts = Vec::new();
    let mut orbits = Vec::new();
    let lat = match lattice {
        Lattice::D64 => {
            let lat = make_niemeier_d64();
            let g = GlueAutomorphism::flip(&lat, &[0, 1, 2, 3], "g")?;
            let mut tau34g = None;
            for i in 0..4 {
                for j in i + 1..4 {
                    let tau = GlueAutomorphism::transposition(&lat, i, j, &format!("τ{}{}", i + 1, j + 1))?;
                    let mut tg = tau.compose(&g);
                    tg.name = format!("τ{}{}∘g", i + 1, j + 1);
                    if (i, j) == (2, 3) {
                        tau34g = Some(tg.clone());
                    }
                    auts.push(aut_out(&lat, &tg)?);
                }
            }
            for a in &auts {
                checks.push(Check::new(format!("{} preserves the glue code", a.name), a.preserves_code, ""));
                checks.push(Check::new(format!("{} has order 2", a.name), a.order == 2, a.order.to_string()));
            }
            let gout = aut_out(&lat, &g)?;
            checks.push(Check::new("g alone does not preserve the glue code", !gout.preserves_code, ""));
            let mut e1 = d64_embedding(&lat, false)?;
            let mut e2 = d64_embedding(&lat, true)?;
            e1.name = "(i1(A5), d6, 0, 0)".into();
            e2.name = "(i2(A5), d5, 0, 0)".into();
            orbits.push(orbit(&lat, &e1, &e2, &[tau34g.expect("τ34 built")], true));
            lat
        }
        Lattice::A92D6 => {
            let lat = make_niemeier_a92d6();
            let named = a92d6_automorphisms(&lat);
            for a in &named {
                auts.push(aut_out(&lat, a)?);
            }
            let find = |n: &str| named.iter().find(|a| a.name == n).cloned().expect("named automorphism");
            let (gamma, h, h1h, h2h) = (find("γ"), find("h"), find("h1h"), find("h2h"));
            let out = |n: &str| auts.iter().find(|a| a.name == n).expect("listed");
            checks.push(Check::new("γ preserves the glue code", out("γ").preserves_code, ""));
            checks.push(Check::new("γ has order 2", out("γ").order == 2, out("γ").order.to_string()));
            for a in [&h1h, &h2h] {
                checks.push(Check::new(format!("{} preserves the glue code", a.name), out(&a.name).preserves_code, ""));
                checks.push(Check::new(
                    format!("{} permutes components as h", a.name),
                    a.permutation == h.permutation,
                    "",
                ));
            }
            let hl = lat.generated_group(&[h1h.clone(), h2h.clone()]);
            checks.push(Check::new(
                "<h1h, h2h> contains γ",
                hl.iter().any(|x| x.flips == gamma.flips && x.permutation == gamma.permutation),
                format!("order {}", hl.len()),
            ));
            let e = |c, n, s| a92d6_variant(&lat, c, n, s);
            orbits.push(orbit(&lat, &e(0, 1, false)?, &e(1, 9, true)?, std::slice::from_ref(&h2h), true));
            orbits.push(orbit(&lat, &e(1, 1, false)?, &e(0, 9, true)?, std::slice::from_ref(&h1h), true));
            orbits.push(orbit(&lat, &e(0, 1, false)?, &e(0, 1, true)?, &[gamma, h1h, h2h], false));
            lat
        }
    };
    for o in &orbits {
        let verb = if o.expected { "are" } else { "are not" };
        checks.push(Check::new(
            format!("{} and {} {verb} related by <{}>", o.from, o.to, o.group.join(", ")),
            o.equivalent == o.expected,
            "",
        ));
    }
    Ok(AutsReport {
        command: "verify-auts",
        lattice: lat.name.clone(),
        glue_code_size: lat.glue_code.len(),
        automorphisms: auts,
        orbits,
        checks,
    })
}

// ---------------------------------------------------------------- quadratic forms

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub a: String,
    pub a_gram: Vec<Vec<String>>,
    pub b: String,
    pub b_gram: Vec<Vec<String>>,
    pub equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QformReport {
    pub command: &'static str,
    pub comparisons: Vec<Comparison>,
    pub checks: Vec<Check>,
}

/// Parses `"a,b;c,d"` into a square rational matrix.
pub fn parse_gram(s: &str) -> CliResult<RatMatrix> {
    let bad = || CliError::BadInput(format!("cannot read {s:?} as a square matrix of rationals"));
    let rows: Vec<Vec<Rat>> = s
        .split(';')
        .map(|r| r.split(',').map(|x| arith::parse_rat(x).ok_or_else(bad)).collect())
        .collect::<CliResult<_>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(bad());
    }
    let m = RatMatrix::from_rows(rows, n).map_err(|_| bad())?;
    if !m.is_symmetric() {
        return Err(CliError::BadInput(format!("{s:?} is not symmetric")));
    }
    Ok(m)
}

/// Compares two forms; an equivalence is re-verified from its transform.
pub fn compare(a: (&str, &RatMatrix), b: (&str, &RatMatrix), expected: Option<bool>) -> CliResult<(Comparison, Option<Check>)> {
    let out = qform_equivalent(a.1, b.1)?;
    let (equivalent, transform, reason) = match &out {
        QformOutcome::Equivalent { transform } => {
            let p = arith::int_matrix_to_rat(transform);
            let ok = p.mul(a.1)?.mul(&p.transpose())? == *b.1 && arith::det(&p)?.abs().is_one();
            if !ok {
                return Err(CliError::Invariant(format!("transform for {} ~ {} does not verify", a.0, b.0)));
            }
            (true, Some(qm(&p)), None)
        }
        QformOutcome::Inequivalent { reason } => (false, None, Some(reason.clone())),
    };
    let check = expected.map(|e| {
        let verb = if e { "~" } else { "!~" };
        Check::new(format!("{} {verb} {}", a.0, b.0), equivalent == e, reason.clone().unwrap_or_default())
    });
    Ok((
        Comparison {
            a: a.0.into(),
            a_gram: qm(a.1),
            b: b.0.into(),
            b_gram: qm(b.1),
            equivalent,
            expected,
            transform,
            reason,
        },
        check,
    ))
}

/// The generating pairs listed for each embedding of `N(A9^2 D6)`.
pub const FIRST_PAIRS: [(&str, &str); 7] = [
    ("V2", "V1"),
    ("V2", "V3"),
    ("V2", "V7"),
    ("V2", "V9"),
    ("V2", "V5"),
    ("V1", "V3"),
    ("V1", "V9"),
];
pub const SECOND_PAIRS: [(&str, &str); 7] = [
    ("Z2", "Z1"),
    ("Z2", "Z3"),
    ("Z2", "Z7"),
    ("Z2", "Z9"),
    ("Z2", "Z5"),
    ("Z1", "Z3"),
    ("Z1", "Z9"),
];

pub fn qform_report(lattice: Lattice) -> CliResult<QformReport> {
    let mut comparisons = Vec::new();
    let mut checks = Vec::new();
    let mut push = |r: (Comparison, Option<Check>)| {
        comparisons.push(r.0);
        checks.extend(r.1);
    };
    match lattice {
        Lattice::D64 => {
            let f = TableKind::D64.frame()?;
            let target = parse_gram("3/2")?;
            push(compare(("MW(N(D6^4))", &f.mw_gram), ("3/2 x^2", &target), Some(true))?);
        }
        Lattice::A92D6 => {
            let q1 = parse_gram("61/40,1/20;1/20,1/10")?;
            let q2 = parse_gram("1/10,0;0,3/2")?;
            let mut mws = Vec::new();
            for (kind, form, fname, pairs) in [
                (TableKind::A92D6First, &q1, "(61x^2+4xy+4y^2)/40", FIRST_PAIRS),
                (TableKind::A92D6Second, &q2, "(x^2+15y^2)/10", SECOND_PAIRS),
            ] {
                let frame = kind.frame()?;
                let table = build_table(kind, &frame)?;
                push(compare((&format!("MW({})", kind.slug()), &frame.mw_gram), (fname, form), Some(true))?);
                for (a, b) in pairs {
                    let g = projected_gram(&frame, &table, &[a, b])?;
                    push(compare((&format!("({a}, {b})"), &g), (fname, form), Some(true))?);
                }
                mws.push(frame.mw_gram);
            }
            push(compare(("MW(a92d6-i1)", &mws[0]), ("MW(a92d6-i2)", &mws[1]), Some(false))?);
        }
    }
    Ok(QformReport {
        command: "qform",
        comparisons,
        checks,
    })
}

pub fn qform_custom(a: &str, b: &str, expected: Option<bool>) -> CliResult<QformReport> {
    let (ga, gb) = (parse_gram(a)?, parse_gram(b)?);
    let (c, check) = compare((a, &ga), (b, &gb), expected)?;
    Ok(QformReport {
        command: "qform",
        comparisons: vec![c],
        checks: check.into_iter().collect(),
    })
}
