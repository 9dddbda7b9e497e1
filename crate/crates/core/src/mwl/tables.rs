//! Section tables for the three frames: contributions, heights, pairings with a
//! basis, orders in `W/N` and relations in the basis.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{height, total_contribution, CosetSection, FiberSpec, SectionSpec};
use crate::arith::{Int, Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::frame::{a92d6_embedding, compute_frame, d64_embedding, Frame};
use crate::mwl::sections_from_cosets;
use crate::niemeier::{make_niemeier_a92d6, make_niemeier_d64, GlueVector};

/// The frames with a section table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableKind {
    /// `N(D6^4)`, first embedding: torsion and infinite sections.
    D64,
    /// `N(A9^2 D6)`, `A5` embedded by `i1`.
    A92D6First,
    /// `N(A9^2 D6)`, `A5` embedded by `i2`.
    A92D6Second,
}

impl TableKind {
    pub const ALL: [TableKind; 3] = [TableKind::D64, TableKind::A92D6First, TableKind::A92D6Second];

    pub fn frame(self) -> Result<Frame> {
        let e = match self {
            TableKind::D64 => d64_embedding(&make_niemeier_d64(), false)?,
            TableKind::A92D6First => a92d6_embedding(&make_niemeier_a92d6(), false)?,
            TableKind::A92D6Second => a92d6_embedding(&make_niemeier_a92d6(), true)?,
        };
        compute_frame(&e)
    }

    pub fn slug(self) -> &'static str {
        match self {
            TableKind::D64 => "d64",
            TableKind::A92D6First => "a92d6-i1",
            TableKind::A92D6Second => "a92d6-i2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub name: String,
    /// `O+kF+[glue]`.
    pub notation: String,
    pub glue: GlueVector,
    pub k: Int,
    /// Components met, in column order.
    pub meets: Vec<usize>,
    /// `contr_v(P)`, in column order.
    pub contributions: Vec<Rat>,
    /// `⟨P, B⟩` for each basis section `B`.
    pub pairings: Vec<Rat>,
    pub height: Rat,
    /// Order in `W/N`; `0` marks generators of `N/N_root`.
    pub order: usize,
    /// Coordinates in the basis, when the table has one.
    pub relation: Option<Vec<Int>>,
    /// `ω` in the ambient root coordinates.
    pub omega: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionTable {
    pub kind: TableKind,
    pub title: String,
    pub columns: Vec<FiberSpec>,
    pub basis: Vec<String>,
    pub basis_gram: RatMatrix,
    pub rows: Vec<TableRow>,
}

impl SectionTable {
    pub fn row(&self, name: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

/// Positions of the frame's fibers in the displayed column order, matched by type.
fn column_permutation(fibers: &[FiberSpec], order: &[&str]) -> Result<Vec<usize>> {
    let mut used = alloc::vec![false; fibers.len()];
    let mut perm = Vec::with_capacity(order.len());
    for name in order {
        let i = (0..fibers.len())
            .find(|&i| !used[i] && fibers[i].position == *name)
            .ok_or_else(|| Error::MissingData(format!("no fiber of type {name}")))?;
        used[i] = true;
        perm.push(i);
    }
    if perm.len() != fibers.len() {
        return Err(Error::Dimension("column order does not cover every fiber".into()));
    }
    Ok(perm)
}

fn d64_rows() -> Vec<(&'static str, [usize; 4])> {
    alloc::vec![
        ("Q1", [0, 2, 3, 1]),
        ("Q3", [0, 3, 1, 2]),
        ("Q2", [0, 1, 2, 3]),
        ("W1", [1, 0, 3, 2]),
        ("W1+Q1", [1, 2, 0, 3]),
        ("W1+Q3", [1, 3, 2, 0]),
        ("W1+Q2", [1, 1, 1, 1]),
    ]
}

/// Builds the table of a frame.
pub fn build_table(kind: TableKind, frame: &Frame) -> Result<SectionTable> {
    let cs = sections_from_cosets(frame)?;
    let lat = frame.lattice();
    let mut named: Vec<(String, CosetSection, usize)> = Vec::new();
    let (title, order, basis): (&str, &[&str], Vec<String>) = match kind {
        TableKind::D64 => {
            for (name, g) in d64_rows() {
                let s = cs.class(&GlueVector::from(g))?;
                named.push((name.to_string(), s.clone(), s.order));
            }
            ("N(D6^4): torsion and infinite sections", &["D4", "A1", "D6", "D6"], Vec::new())
        }
        TableKind::A92D6First | TableKind::A92D6Second => {
            let (p, gen) = if kind == TableKind::A92D6First {
                ("V", GlueVector::from([1, 2, 1]))
            } else {
                ("Z", GlueVector::from([6, 7, 3]))
            };
            for i in 1..=9 {
                let g = lat.scale(&gen, i);
                let s = cs.class(&g)?;
                named.push((format!("{p}{i}"), s.clone(), s.order));
            }
            for (j, s) in cs.n_generators.iter().enumerate() {
                named.push((format!("{p}{}", 11 + j), s.clone(), 0));
            }
            let t = if kind == TableKind::A92D6First {
                "N(A9^2 D6), first embedding"
            } else {
                "N(A9^2 D6), second embedding"
            };
            (t, &["A7", "A9"], alloc::vec![format!("{p}1"), format!("{p}2")])
        }
    };
    let perm = column_permutation(&cs.fibers, order)?;
    let columns: Vec<FiberSpec> = perm.iter().map(|&i| cs.fibers[i].clone()).collect();

    let refs: Vec<(&str, &CosetSection)> = named.iter().map(|(n, s, _)| (n.as_str(), s)).collect();
    let set = cs.section_set(frame, &refs);
    let basis_refs: Vec<&str> = basis.iter().map(|s| s.as_str()).collect();
    let basis_gram = set.height_matrix(&basis_refs)?.gram;

    let mut rows = Vec::with_capacity(named.len());
    for (name, s, ord) in &named {
        let spec: &SectionSpec = set.get(name)?;
        let contributions = perm
            .iter()
            .map(|&i| {
                let one = SectionSpec::new("", alloc::vec![spec.meets[i]], 0);
                total_contribution(&one, &one, core::slice::from_ref(&cs.fibers[i]))
            })
            .collect::<Result<Vec<_>>>()?;
        let pairings = basis_refs
            .iter()
            .map(|b| set.pairing(name, b))
            .collect::<Result<Vec<_>>>()?;
        let relation = if basis.is_empty() {
            None
        } else {
            Some(set.express_in_basis(name, &basis_refs)?)
        };
        rows.push(TableRow {
            name: name.clone(),
            notation: format!("O+{}F+{}", s.k(), s.glue),
            glue: s.glue.clone(),
            k: s.k(),
            meets: perm.iter().map(|&i| spec.meets[i]).collect(),
            contributions,
            pairings,
            height: height(spec, &cs.fibers)?,
            order: *ord,
            relation,
            omega: s.omega.clone(),
        });
    }
    Ok(SectionTable {
        kind,
        title: title.to_string(),
        columns,
        basis,
        basis_gram,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn first_embedding_heights() {
        let kind = TableKind::A92D6First;
        let t = build_table(kind, &kind.frame().unwrap()).unwrap();
        let hts: Vec<Rat> = t.rows.iter().map(|r| r.height.clone()).collect();
        let expect = [
            rat(61, 40),
            rat(1, 10),
            rat(69, 40),
            rat(2, 5),
            rat(17, 8),
            rat(9, 10),
            rat(109, 40),
            rat(8, 5),
            rat(61, 40),
            rat(5, 2),
            rat(6, 1),
        ];
        assert_eq!(hts, expect);
        let v9 = t.row("V9").unwrap();
        assert_eq!(v9.meets, [1, 2]);
        assert_eq!(v9.relation.as_ref().unwrap(), &[Int::from(1), Int::from(-1)]);
    }
}
