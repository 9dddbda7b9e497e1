//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::{
    AutsReport, Check, FibersReport, FibrationReport, FrameReport, MapsReport, QformReport, Report, TableReport,
};

/// Left-aligned columns separated by two spaces.
pub fn grid(header: &[String], rows: &[Vec<String>]) -> String {
    let n = header.len();
    let mut width = vec![0; n];
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        for (i, c) in r.iter().enumerate().take(n) {
            width[i] = width[i].max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |r: &[String]| {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c}{}", " ".repeat(width[i] - c.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    };
    line(header);
    line(&width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>());
    for r in rows {
        line(r);
    }
    out
}

fn matrix(m: &[Vec<String>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn checks(out: &mut String, cs: &[Check]) {
    out.push_str("\nchecks\n");
    for c in cs {
        let mark = if c.pass { "ok  " } else { "FAIL" };
        if c.detail.is_empty() {
            let _ = writeln!(out, "  {mark} {}", c.name);
        } else {
            let _ = writeln!(out, "  {mark} {} ({})", c.name, c.detail);
        }
    }
}

pub fn render_text(r: &Report) -> String {
    match r {
        Report::Frame(r) => frame(r),
        Report::Table(r) => table(r),
        Report::Fibration(r) => fibration(r),
        Report::Fibers(r) => fibers(r),
        Report::Maps(r) => maps(r),
        Report::Auts(r) => auts(r),
        Report::Qform(r) => qform(r),
    }
}

fn frame(r: &FrameReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} in {}", r.embedding, r.lattice);
    let _ = writeln!(s, "root type      {}", r.root_type.join(" + "));
    let _ = writeln!(s, "fibers         {}", r.fibers.join(" + "));
    let _ = writeln!(s, "det N          {}", r.det_n);
    let _ = writeln!(s, "det W          {}", r.det_w);
    let _ = writeln!(s, "W/N            [{}]", r.w_over_n.join(", "));
    let _ = writeln!(s, "torsion        [{}]", r.torsion.join(", "));
    let _ = writeln!(s, "MW rank        {}", r.mw_rank);
    let _ = writeln!(s, "MW Gram        {}", matrix(&r.mw_gram));
    let _ = writeln!(s, "MW det         {}", r.mw_det);
    let _ = writeln!(s, "det W_root     {}", r.det_w_root);
    let _ = writeln!(s, "discriminant   {}", r.discriminant);
    checks(&mut s, &r.checks);
    s
}

fn column_header(cols: &[crate::report::Column]) -> Vec<String> {
    cols.iter().map(|c| format!("{}@{}", c.kodaira, c.position)).collect()
}

fn table(r: &TableReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}\n", r.title);
    let cols = column_header(&r.columns);
    let mut header = vec!["section".to_string(), "notation".to_string()];
    header.extend(cols.iter().cloned());
    header.extend(cols.iter().map(|c| format!("contr {c}")));
    header.extend(r.basis.iter().map(|b| format!("<.,{b}>")));
    header.push("height".into());
    header.push("order".into());
    header.push("relation".into());
    let rows: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|x| {
            let mut v = vec![x.name.clone(), x.notation.clone()];
            v.extend(x.meets.iter().map(|m| m.to_string()));
            v.extend(x.contributions.iter().cloned());
            v.extend(x.pairings.iter().cloned());
            v.push(x.height.clone());
            v.push(x.order.to_string());
            v.push(x.relation_text.clone().unwrap_or_default());
            v
        })
        .collect();
    s.push_str(&grid(&header, &rows));
    if !r.basis.is_empty() {
        let _ = writeln!(s, "\nbasis {} with Gram {} (det {})", r.basis.join(", "), matrix(&r.basis_gram), r.basis_det);
    }
    checks(&mut s, &r.checks);
    s
}

fn fibration(r: &FibrationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "fibration {} on {} (frame {}, zero {})\n", r.fibration, r.model, r.frame, r.zero);
    let cols = column_header(&r.columns);
    let mut header = vec!["section".to_string(), "alias".to_string()];
    header.extend(cols.iter().cloned());
    header.push("P.O".into());
    header.push("height".into());
    header.push("relation".into());
    header.push("printed".into());
    header.push("order".into());
    let rows: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|x| {
            let mut v = vec![x.name.clone(), x.alias.clone().unwrap_or_default()];
            v.extend(x.meets.iter().map(|m| m.to_string()));
            v.push(x.meets_zero.to_string());
            v.push(x.height.clone());
            v.push(x.relation_text.clone());
            v.push(match x.matches_printed {
                Some(true) => "=".into(),
                Some(false) => format!("{:?}", x.printed_relation.clone().unwrap_or_default()),
                None => String::new(),
            });
            v.push(match x.weierstrass_order {
                Some(Some(n)) => n.to_string(),
                Some(None) => "inf".into(),
                None => String::new(),
            });
            v
        })
        .collect();
    s.push_str(&grid(&header, &rows));
    let _ = writeln!(s, "\nbasis {} with Gram {} (det {})", r.basis.join(", "), matrix(&r.basis_gram), r.basis_det);
    let _ = writeln!(s, "lattice basis {} with Gram {}", r.lattice_basis.join(", "), matrix(&r.lattice_gram));
    if !r.relation_mismatches.is_empty() {
        let _ = writeln!(s, "rows differing from the printed relation: {}", r.relation_mismatches.join(", "));
    }
    checks(&mut s, &r.checks);
    s
}

fn fibers(r: &FibersReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} over Q({})", r.curve, r.parameter);
    let _ = writeln!(s, "a1..a6  {}", r.coefficients.join("; "));
    let _ = writeln!(s, "weight  {}\n", r.weight);
    let val = |v: Option<u32>| v.map_or("inf".to_string(), |x| x.to_string());
    let rows: Vec<Vec<String>> = r
        .fibers
        .iter()
        .map(|f| {
            vec![
                f.place.clone(),
                f.degree.to_string(),
                f.kodaira.clone(),
                f.euler.to_string(),
                val(f.valuations.0),
                val(f.valuations.1),
                f.valuations.2.to_string(),
            ]
        })
        .collect();
    let header = ["place", "deg", "type", "e", "v(c4)", "v(c6)", "v(disc)"].map(String::from);
    s.push_str(&grid(&header, &rows));
    let _ = writeln!(s, "Euler sum {}\n", r.euler_sum);
    let rows: Vec<Vec<String>> = r
        .points
        .iter()
        .map(|p| vec![p.name.clone(), p.order.map_or("inf".into(), |o| o.to_string()), p.point.clone()])
        .collect();
    s.push_str(&grid(&["point", "order", "coordinates"].map(String::from), &rows));
    let _ = writeln!(s, "\ntorsion of order {} with invariants {:?}", r.torsion.order, r.torsion.invariants);
    if let Some(m) = &r.frame_match {
        let _ = writeln!(s, "fibration {} on frame {}: {} vs {}", m.fibration, m.frame, m.from_fibers.join("+"), m.from_frame.join("+"));
    }
    checks(&mut s, &r.checks);
    s
}

fn maps(r: &MapsReport) -> String {
    let mut s = String::new();
    for m in &r.maps {
        let _ = writeln!(s, "{}: {} -> {}  on target: {}", m.name, m.source, m.target, m.on_target);
        for i in m.identities.iter().chain(&m.pullbacks) {
            let _ = writeln!(s, "  {} = {}  {}", i.lhs, i.rhs, i.holds);
        }
    }
    for c in &r.components {
        let _ = writeln!(s, "component {} on {}: {}", c.name, c.curve, c.holds);
    }
    checks(&mut s, &r.checks);
    s
}

fn auts(r: &AutsReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} with a glue code of {} elements\n", r.lattice, r.glue_code_size);
    let rows: Vec<Vec<String>> = r
        .automorphisms
        .iter()
        .map(|a| vec![a.name.clone(), a.preserves_code.to_string(), a.order.to_string(), a.fixed.len().to_string()])
        .collect();
    s.push_str(&grid(&["automorphism", "preserves code", "order", "fixed"].map(String::from), &rows));
    s.push('\n');
    let rows: Vec<Vec<String>> = r
        .orbits
        .iter()
        .map(|o| vec![o.from.clone(), o.to.clone(), o.group.join(","), o.group_order.to_string(), o.equivalent.to_string()])
        .collect();
    s.push_str(&grid(&["from", "to", "generators", "|G|", "related"].map(String::from), &rows));
    checks(&mut s, &r.checks);
    s
}

fn qform(r: &QformReport) -> String {
    let mut s = String::new();
    for c in &r.comparisons {
        let rel = if c.equivalent { "~" } else { "!~" };
        let _ = writeln!(s, "{} {} {}", c.a, rel, c.b);
        let _ = writeln!(s, "  {} vs {}", matrix(&c.a_gram), matrix(&c.b_gram));
        if let Some(t) = &c.transform {
            let _ = writeln!(s, "  P = {}", matrix(t));
        }
        if let Some(why) = &c.reason {
            let _ = writeln!(s, "  {why}");
        }
    }
    checks(&mut s, &r.checks);
    s
}
