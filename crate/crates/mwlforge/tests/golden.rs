use mwlforge::data::MeetsFile;
use mwlforge::report::{fibration_report, table_report, TableReport};
use mwlforge_core::mwl::tables::TableKind;

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}.json", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

#[test]
fn lattice_tables_match_golden_files() {
    for kind in TableKind::ALL {
        let r = table_report(kind).unwrap();
        assert!(r.checks.iter().all(|c| c.pass), "{:?}", r.checks);
        assert_eq!(pretty(&r), golden(kind.slug()), "{}", kind.slug());
    }
}

#[test]
fn fibration_tables_match_golden_files() {
    let data = MeetsFile::load().unwrap();
    for f in ["36", "40", "40bis"] {
        let r = fibration_report(&data, f).unwrap();
        assert_eq!(pretty(&r), golden(&format!("fibration-{f}")), "#{f}");
    }
}

struct Row {
    name: &'static str,
    glue: &'static str,
    meets: [usize; 2],
    pairings: [&'static str; 2],
    height: &'static str,
    order: usize,
    relation: [i64; 2],
}

const fn row(
    name: &'static str,
    glue: &'static str,
    meets: [usize; 2],
    pairings: [&'static str; 2],
    height: &'static str,
    order: usize,
    relation: [i64; 2],
) -> Row {
    Row {
        name,
        glue,
        meets,
        pairings,
        height,
        order,
        relation,
    }
}

/// Cells as printed, with glue written as residues mod 10 (`α_j` is the class `-j`).
const FIRST: [Row; 11] = [
    row("V1", "O+2F+[1,2,1]", [7, 8], ["61/40", "1/20"], "61/40", 10, [1, 0]),
    row("V2", "O+2F+[2,4,0]", [6, 6], ["1/20", "1/10"], "1/10", 5, [0, 1]),
    row("V3", "O+3F+[3,6,1]", [5, 4], ["63/40", "3/20"], "69/40", 10, [1, 1]),
    row("V4", "O+2F+[4,8,0]", [4, 2], ["1/10", "1/5"], "2/5", 5, [0, 2]),
    row("V5", "O+2F+[5,0,1]", [3, 0], ["13/8", "1/4"], "17/8", 2, [1, 2]),
    row("V6", "O+2F+[6,2,0]", [2, 8], ["3/20", "3/10"], "9/10", 5, [0, 3]),
    row("V7", "O+3F+[7,4,1]", [1, 6], ["67/40", "7/20"], "109/40", 10, [1, 3]),
    row("V8", "O+2F+[8,6,0]", [0, 4], ["1/5", "2/5"], "8/5", 5, [0, 4]),
    row("V9", "O+2F+[9,8,1]", [1, 2], ["59/40", "-1/20"], "61/40", 10, [1, -1]),
    row("V11", "O+2F+[0,0,0]", [2, 0], ["-1/4", "-1/2"], "5/2", 0, [0, -5]),
    row("V12", "O+3F+[0,0,0]", [0, 0], ["3", "0"], "6", 0, [2, -1]),
];

const SECOND: [Row; 11] = [
    row("Z1", "O+3F+[6,7,3]", [2, 3], ["12/5", "3/10"], "12/5", 10, [1, 0]),
    row("Z2", "O+2F+[2,4,0]", [6, 6], ["3/10", "1/10"], "1/10", 5, [0, 1]),
    row("Z3", "O+2F+[8,1,3]", [0, 9], ["27/10", "2/5"], "31/10", 10, [1, 1]),
    row("Z4", "O+2F+[4,8,0]", [4, 2], ["3/5", "1/5"], "2/5", 5, [0, 2]),
    row("Z5", "O+2F+[0,5,3]", [0, 5], ["3/2", "0"], "3/2", 2, [1, -3]),
    row("Z6", "O+2F+[6,2,0]", [2, 8], ["9/10", "3/10"], "9/10", 5, [0, 3]),
    row("Z7", "O+2F+[2,9,3]", [6, 1], ["9/5", "1/10"], "8/5", 10, [1, -2]),
    row("Z8", "O+2F+[8,6,0]", [0, 4], ["6/5", "2/5"], "8/5", 5, [0, 4]),
    row("Z9", "O+3F+[4,3,3]", [4, 7], ["21/10", "1/5"], "19/10", 10, [1, -1]),
    // Z11 = -5 Z2, so <Z1, Z11> = -5 <Z1, Z2> = -3/2
    row("Z11", "O+2F+[0,0,0]", [2, 0], ["-3/2", "-1/2"], "5/2", 0, [0, -5]),
    row("Z12", "O+3F+[0,0,0]", [0, 0], ["3", "0"], "6", 0, [2, -6]),
];

fn check_rows(t: &TableReport, rows: &[Row]) {
    assert_eq!(t.rows.len(), rows.len());
    for (got, want) in t.rows.iter().zip(rows) {
        assert_eq!(got.name, want.name);
        assert_eq!(got.notation, want.glue, "{}", want.name);
        assert_eq!(got.meets, want.meets, "{}", want.name);
        assert_eq!(got.pairings, want.pairings, "{}", want.name);
        assert_eq!(got.height, want.height, "{}", want.name);
        assert_eq!(got.order, want.order, "{}", want.name);
        let rel: Vec<String> = want.relation.iter().map(|x| x.to_string()).collect();
        assert_eq!(got.relation.as_ref().unwrap(), &rel, "{}", want.name);
    }
}

#[test]
fn first_embedding_table_cells() {
    let t = table_report(TableKind::A92D6First).unwrap();
    check_rows(&t, &FIRST);
    assert_eq!(t.basis_gram, [["61/40", "1/20"], ["1/20", "1/10"]]);
    assert_eq!(t.basis_det, "3/20");
}

#[test]
fn second_embedding_table_cells() {
    let t = table_report(TableKind::A92D6Second).unwrap();
    check_rows(&t, &SECOND);
    assert_eq!(t.basis_det, "3/20");
    let z12 = t.rows.iter().find(|r| r.name == "Z12").unwrap();
    assert_eq!(z12.relation_text.as_deref(), Some("2Z1-6Z2"));
    assert_eq!(z12.height, "6");
}

#[test]
fn d64_table_cells() {
    let t = table_report(TableKind::D64).unwrap();
    // (name, glue, contributions D4 A1 D6 D6, height)
    let want: [(&str, &str, [&str; 4], &str); 7] = [
        ("Q1", "O+2F+[0,2,3,1]", ["1", "0", "3/2", "3/2"], "0"),
        ("Q3", "O+2F+[0,3,1,2]", ["1", "1/2", "3/2", "1"], "0"),
        ("Q2", "O+2F+[0,1,2,3]", ["1", "1/2", "1", "3/2"], "0"),
        ("W1", "O+2F+[1,0,3,2]", ["0", "0", "3/2", "1"], "3/2"),
        ("W1+Q1", "O+2F+[1,2,0,3]", ["1", "0", "0", "3/2"], "3/2"),
        ("W1+Q3", "O+2F+[1,3,2,0]", ["1", "1/2", "1", "0"], "3/2"),
        ("W1+Q2", "O+3F+[1,1,1,1]", ["1", "1/2", "3/2", "3/2"], "3/2"),
    ];
    assert_eq!(t.rows.len(), want.len());
    for (got, (name, glue, contr, h)) in t.rows.iter().zip(want) {
        assert_eq!(got.name, name);
        assert_eq!(got.notation, glue, "{name}");
        assert_eq!(got.contributions, contr, "{name}");
        assert_eq!(got.height, h, "{name}");
    }
}
