//! One line per acceptance criterion, with the exact values behind it.
//! Run with `cargo test -p mwlforge --test acceptance -- --nocapture`.

use std::io::Write;

use mwlforge::curvefile::CurveSet;
use mwlforge::data::MeetsFile;
use mwlforge::report::{
    auts_report, fibers_report, fibration_report, frame_report, maps_report, qform_report, table_report, EmbeddingChoice,
    Lattice,
};
use mwlforge_core::arith::{int, int_matrix_to_rat, integer_kernel, rank, saturate, snf, IntMatrix};
use mwlforge_core::mwl::tables::TableKind;
use mwlforge_core::mwl::Kodaira;
use mwlforge_core::niemeier::make_niemeier_a92d6;
use mwlforge_core::weier::{euler_sum, singular_fibers, Model};

struct Outcome {
    pass: bool,
    detail: String,
    /// Sub-claims that failed, by name.
    failed: Vec<String>,
}

fn outcome(parts: Vec<(String, bool)>, detail: String) -> Outcome {
    let failed: Vec<String> = parts.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.clone()).collect();
    Outcome {
        pass: failed.is_empty(),
        detail,
        failed,
    }
}

fn c1() -> Outcome {
    let r = frame_report(Lattice::D64, EmbeddingChoice::I1).unwrap();
    let wn: i64 = r.w_over_n.iter().map(|x| x.parse::<i64>().unwrap()).product();
    outcome(
        vec![
            ("root type A1+D4+D6+D6".into(), r.root_type == ["A1", "D4", "D6", "D6"]),
            ("torsion (2,2)".into(), r.torsion == ["2", "2"]),
            ("MW rank 1".into(), r.mw_rank == 1),
            ("generator height 3/2".into(), r.mw_gram == [["3/2"]]),
            ("det N = 12*4^3".into(), r.det_n == (12 * 64).to_string()),
            ("|W/N| = 8".into(), wn == 8),
        ],
        format!(
            "root type {}, torsion ({}), rank {}, MW Gram [[{}]], det N {} = {} * {}^2",
            r.root_type.join("+"),
            r.torsion.join(","),
            r.mw_rank,
            r.mw_gram[0][0],
            r.det_n,
            r.det_w,
            wn
        ),
    )
}

fn c2() -> Outcome {
    let mut parts = Vec::new();
    let mut detail = Vec::new();
    for e in [EmbeddingChoice::I1, EmbeddingChoice::I2] {
        let r = frame_report(Lattice::A92D6, e).unwrap();
        parts.push((format!("{e:?} root type A7+A9"), r.root_type == ["A7", "A9"]));
        parts.push((format!("{e:?} trivial torsion"), r.torsion.is_empty()));
        parts.push((format!("{e:?} rank 2"), r.mw_rank == 2));
        detail.push(format!("{e:?}: {} tors {:?} rank {} Gram {:?}", r.root_type.join("+"), r.torsion, r.mw_rank, r.mw_gram));
    }
    let q = qform_report(Lattice::A92D6).unwrap();
    for c in &q.comparisons {
        let ok = c.expected == Some(c.equivalent) && (c.equivalent == c.transform.is_some());
        parts.push((format!("{} vs {}", c.a, c.b), ok));
    }
    let eq = q.comparisons.iter().filter(|c| c.equivalent).count();
    detail.push(format!(
        "{eq} forms equivalent with verified transforms, {} proven inequivalent",
        q.comparisons.len() - eq
    ));
    outcome(parts, detail.join("; "))
}

fn c3() -> Outcome {
    let mut parts = Vec::new();
    let mut detail = Vec::new();
    for kind in TableKind::ALL {
        let r = table_report(kind).unwrap();
        let mut s = serde_json::to_string_pretty(&r).unwrap();
        s.push('\n');
        let path = format!("{}/tests/golden/{}.json", env!("CARGO_MANIFEST_DIR"), kind.slug());
        let golden = std::fs::read_to_string(path).unwrap();
        parts.push((format!("{} golden", kind.slug()), s == golden));
        parts.push((format!("{} checks", kind.slug()), r.checks.iter().all(|c| c.pass)));
        detail.push(format!("{} {} rows", kind.slug(), r.rows.len()));
        match kind {
            TableKind::A92D6First => {
                parts.push(("<V1,V2> = 1/20".into(), r.basis_gram[0][1] == "1/20"));
                parts.push(("det 3/20".into(), r.basis_det == "3/20"));
                detail.push(format!("<V1,V2> = {}, det {}", r.basis_gram[0][1], r.basis_det));
            }
            TableKind::A92D6Second => {
                let z12 = r.rows.iter().find(|x| x.name == "Z12").unwrap();
                let ok = z12.relation_text.as_deref() == Some("2Z1-6Z2") && z12.height == "6";
                parts.push(("Z12 = 2Z1-6Z2 of height 6".into(), ok));
                detail.push(format!("Z12 = {} height {}", z12.relation_text.clone().unwrap_or_default(), z12.height));
            }
            TableKind::D64 => {}
        }
    }
    outcome(parts, detail.join(", "))
}

fn c4() -> Outcome {
    let mut parts = Vec::new();
    let mut detail = Vec::new();
    for (l, e) in [
        (Lattice::D64, EmbeddingChoice::I1),
        (Lattice::D64, EmbeddingChoice::I2),
        (Lattice::A92D6, EmbeddingChoice::I1),
        (Lattice::A92D6, EmbeddingChoice::I2),
    ] {
        let r = frame_report(l, e).unwrap();
        parts.push((format!("{l:?} {e:?}"), r.discriminant == "-12"));
        detail.push(format!(
            "{l:?}/{e:?}: -det W_root {} * det MW {} / {}^2 * sign = {}",
            r.det_w_root.trim_start_matches('-'),
            r.mw_det,
            r.torsion.iter().map(|t| t.parse::<i64>().unwrap()).product::<i64>(),
            r.discriminant
        ));
    }
    outcome(parts, detail.join("; "))
}

const CODE_200: &str = "N(A9^2 D6) glue code has 200 elements";

fn c5() -> Outcome {
    let mut parts = Vec::new();
    let d = auts_report(Lattice::D64).unwrap();
    let a = auts_report(Lattice::A92D6).unwrap();
    for c in d.checks.iter().chain(&a.checks) {
        parts.push((c.name.clone(), c.pass));
    }
    parts.push(("N(D6^4) glue code has 16 elements".into(), d.glue_code_size == 16));
    parts.push((CODE_200.into(), a.glue_code_size == 200));
    let lat = make_niemeier_a92d6();
    let disc: usize = lat.components.iter().map(|c| c.discriminant_order()).product();
    outcome(
        parts,
        format!(
            "{} checks on N(D6^4) over {} glue vectors, {} on N(A9^2 D6) over {} glue vectors (|code|^2 = {disc})",
            d.checks.len(),
            d.glue_code_size,
            a.checks.len(),
            a.glue_code_size
        ),
    )
}

fn c6() -> Outcome {
    let set = CurveSet::builtin().unwrap();
    let data = MeetsFile::load().unwrap();
    let mut parts = Vec::new();
    let eu = fibers_report(set.curve("Eu").unwrap(), None).unwrap();
    parts.push(("E_u torsion (Z/2)^2 x Z/3".into(), eu.torsion.order == 12 && eu.torsion.primary == [2, 2, 3]));
    parts.push(("12x12 Cayley table is an abelian group".into(), eu.torsion.group_axioms && eu.torsion.all_on_curve));
    let expect: [(Model, &[(&str, Kodaira)]); 4] = [
        (
            Model::Eu,
            &[
                ("u + 3", Kodaira::I(2)),
                ("u + 1", Kodaira::I(6)),
                ("u", Kodaira::I(2)),
                ("u - 1", Kodaira::I(6)),
                ("u - 3", Kodaira::I(2)),
                ("inf", Kodaira::I(6)),
            ],
        ),
        (
            Model::Ew,
            &[
                ("w + 1", Kodaira::I(2)),
                ("w + 1/4", Kodaira::IStar(0)),
                ("w", Kodaira::IStar(2)),
                ("inf", Kodaira::IStar(2)),
            ],
        ),
        (Model::Ep, &[("p", Kodaira::I(8)), ("inf", Kodaira::I(10))]),
        (Model::Et, &[("t", Kodaira::I(8)), ("inf", Kodaira::I(10))]),
    ];
    let mut sums = Vec::new();
    for (m, want) in expect {
        let c = m.curve();
        let f = singular_fibers(&c).unwrap();
        let reducible: Vec<(String, Kodaira)> = f
            .iter()
            .filter(|x| x.kodaira.root_type().is_some())
            .map(|x| (x.place.to_string_in(&c.param), x.kodaira))
            .collect();
        let want: Vec<(String, Kodaira)> = want.iter().map(|(p, k)| (p.to_string(), *k)).collect();
        parts.push((format!("{m:?} reducible fibers"), reducible == want));
        let e = euler_sum(&f);
        parts.push((format!("{m:?} Euler sum 24"), e == 24));
        sums.push(e);
        let decl = set.curve(m.slug()).unwrap();
        let fib = data.for_model(m);
        let r = fibers_report(decl, fib).unwrap();
        parts.push((format!("{m:?} fibers checks"), r.checks.iter().all(|c| c.pass)));
    }
    let maps = maps_report(&set).unwrap();
    for c in &maps.checks {
        parts.push((c.name.clone(), c.pass));
    }
    outcome(
        parts,
        format!(
            "E_u torsion order {} invariants {:?}; Euler sums {:?}; {} map and component identities",
            eu.torsion.order,
            eu.torsion.invariants,
            sums,
            maps.checks.len()
        ),
    )
}

fn c7() -> Outcome {
    let data = MeetsFile::load().unwrap();
    let mut parts = Vec::new();
    let mut detail = Vec::new();
    for f in ["36", "40", "40bis"] {
        let r = fibration_report(&data, f).unwrap();
        let ok = r.basis_gram == r.lattice_gram && r.checks.iter().all(|c| c.pass);
        parts.push((format!("#{f}"), ok));
        detail.push(format!("#{f} {:?} det {}", r.basis_gram, r.basis_det));
    }
    outcome(parts, detail.join("; "))
}

fn c8() -> Outcome {
    let mut parts = Vec::new();
    let data = MeetsFile::load().unwrap();
    let mut sections = 0;
    for f in ["36", "40", "40bis"] {
        let r = fibration_report(&data, f).unwrap();
        sections += r.rows.len();
        let ok = r.rows.iter().all(|x| {
            let zero = x.height == "0";
            let tors = x.relation.iter().all(|c| c == "0");
            let finite = x.weierstrass_order.is_none_or(|o| o.is_some() == zero);
            zero == tors && finite
        });
        parts.push((format!("#{f} torsion iff height 0"), ok));
    }
    let mut relations = 0;
    for kind in TableKind::ALL {
        let r = table_report(kind).unwrap();
        relations += r.rows.len();
        parts.push((format!("{} bilinearity and torsion", kind.slug()), r.checks.iter().all(|c| c.pass)));
    }
    let mut cases = 0;
    let mut ok = (true, true, true);
    for code in 0..3i64.pow(4) {
        let mut c = code;
        let v: Vec<_> = (0..4)
            .map(|_| {
                let e = c % 3 - 1;
                c /= 3;
                int(e * 2 + (e != 0) as i64)
            })
            .collect();
        let a = IntMatrix::new(2, 2, v).unwrap();
        let s = snf(&a);
        let mut d = IntMatrix::zeros(2, 2);
        for (i, x) in s.diagonal.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        ok.0 &= s.left.mul(&a).unwrap().mul(&s.right).unwrap() == d;
        let k = integer_kernel(&a);
        ok.1 &= k.len() == 2 - rank(&int_matrix_to_rat(&a)) && (k.is_empty() || saturate(&k, 2) == k);
        let rows = a.row_vecs();
        let sat = saturate(&rows, 2);
        ok.2 &= saturate(&sat, 2) == sat;
        cases += 1;
    }
    parts.push(("SNF reconstruction".into(), ok.0));
    parts.push(("kernel saturation".into(), ok.1));
    parts.push(("saturate idempotence".into(), ok.2));
    outcome(
        parts,
        format!(
            "{sections} fibration sections, {relations} table rows, {cases} exhaustive 2x2 matrices; randomized suites in arith_props, lattice_props and props"
        ),
    )
}

#[test]
fn acceptance() {
    let results = [c1(), c2(), c3(), c4(), c5(), c6(), c7(), c8()];
    // Written past the test harness capture so the report shows in a plain `cargo test`.
    let mut out = std::io::stderr().lock();
    writeln!(out).unwrap();
    for (i, r) in results.iter().enumerate() {
        let status = if r.pass { "PASS" } else { "FAIL" };
        writeln!(out, "criterion {}: {status}: {}", i + 1, r.detail).unwrap();
        for f in &r.failed {
            writeln!(out, "  failed: {f}").unwrap();
        }
    }
    // The only tolerated failure: a glue code of 200 elements cannot exist, since
    // unimodularity forces |code|^2 = 10 * 10 * 4.
    for (i, r) in results.iter().enumerate() {
        if i == 4 {
            assert!(r.failed.iter().all(|f| f == CODE_200), "criterion 5: {:?}", r.failed);
            if !r.pass {
                writeln!(out, "criterion 5 is not attainable as stated: the glue code of N(A9^2 D6) has 20 elements").unwrap();
            }
        } else {
            assert!(r.pass, "criterion {}: {:?}", i + 1, r.failed);
        }
    }
}
