//! Decomposition of a simply-laced root system into irreducible ADE summands.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{self, rat_int, Int, Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::rootlat::{Family, RootType};

/// An irreducible summand with simple roots listed in Bourbaki order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootComponent {
    pub ty: RootType,
    pub simple_roots: Vec<Vec<Int>>,
}

fn first_nonzero(v: &[Int]) -> usize {
    v.iter().position(|x| !x.is_zero()).unwrap_or(v.len())
}

fn is_positive(v: &[Int]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

fn pair(gram: &RatMatrix, a: &[Int], b: &[Int]) -> Rat {
    let ar: Vec<Rat> = a.iter().map(rat_int).collect();
    let br: Vec<Rat> = b.iter().map(rat_int).collect();
    arith::bilinear(gram, &ar, &br)
}

/// Ordering key for ties between nodes: earliest nonzero coordinate first, then
/// the lexicographically larger vector.
fn node_key(v: &[Int]) -> (usize, core::cmp::Reverse<Vec<Int>>) {
    (first_nonzero(v), core::cmp::Reverse(v.to_vec()))
}

/// Splits `roots` (coordinates w.r.t. `gram`) into irreducible components.
/// Positivity is the lexicographic order on coordinates; simple roots are the
/// positive roots that are not a sum of two positive roots.
pub fn classify_root_system(roots: &[Vec<Int>], gram: &RatMatrix) -> Result<Vec<RootComponent>> {
    if roots.is_empty() {
        return Ok(Vec::new());
    }
    let set: BTreeSet<&Vec<Int>> = roots.iter().collect();
    let minus_two = Rat::from_integer(Int::from(-2));
    for r in roots {
        if pair(gram, r, r) != minus_two {
            return Err(Error::NotRootSystem(format!("vector {r:?} is not of norm -2")));
        }
        let neg: Vec<Int> = r.iter().map(|x| -x).collect();
        if !set.contains(&neg) {
            return Err(Error::NotRootSystem("root set not closed under negation".into()));
        }
    }
    let positive: Vec<&Vec<Int>> = roots.iter().filter(|r| is_positive(r)).collect();
    let mut decomposable = BTreeSet::new();
    for (i, a) in positive.iter().enumerate() {
        for b in &positive[i..] {
            let s: Vec<Int> = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
            if set.contains(&s) {
                decomposable.insert(s);
            }
        }
    }
    let simple: Vec<Vec<Int>> = positive
        .iter()
        .filter(|r| !decomposable.contains(**r))
        .map(|r| (*r).clone())
        .collect();
    let m = simple.len();
    let mut adj = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            let p = pair(gram, &simple[i], &simple[j]);
            if p.is_one() {
                adj[i].push(j);
                adj[j].push(i);
            } else if !p.is_zero() {
                return Err(Error::NotRootSystem(format!(
                    "simple roots pair to {p}, expected 0 or 1"
                )));
            }
        }
    }
    let mut seen = vec![false; m];
    let mut comps = Vec::new();
    for s in 0..m {
        if seen[s] {
            continue;
        }
        let mut nodes = Vec::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comps.push(order_component(&nodes, &adj, &simple)?);
    }
    let total: usize = comps.iter().map(|c: &RootComponent| c.ty.root_count()).sum();
    if total != roots.len() {
        return Err(Error::NotRootSystem(format!(
            "{} roots but the simple system spans {total}",
            roots.len()
        )));
    }
    let rows: Vec<Vec<Rat>> = simple.iter().map(|r| r.iter().map(rat_int).collect()).collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let rank = arith::rank(&RatMatrix::from_rows(rows, cols)?);
    if rank != m {
        return Err(Error::NotRootSystem("simple roots are dependent".into()));
    }
    comps.sort_by(|a, b| {
        (a.ty.family, a.ty.rank, node_key(&a.simple_roots[0]))
            .cmp(&(b.ty.family, b.ty.rank, node_key(&b.simple_roots[0])))
    });
    Ok(comps)
}

/// Nodes reached walking away from `from` through `start` along a chain.
fn arm(adj: &[Vec<usize>], from: usize, start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (from, start);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] => {
                out.push(*w);
                prev = cur;
                cur = *w;
            }
            _ => return out,
        }
    }
}

fn order_component(nodes: &[usize], adj: &[Vec<usize>], simple: &[Vec<Int>]) -> Result<RootComponent> {
    let m = nodes.len();
    let edges: usize = nodes.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
    if edges != m - 1 {
        return Err(Error::NotRootSystem("Dynkin diagram has a cycle".into()));
    }
    let degree3: Vec<usize> = nodes.iter().copied().filter(|&v| adj[v].len() == 3).collect();
    if nodes.iter().any(|&v| adj[v].len() > 3) || degree3.len() > 1 {
        return Err(Error::NotRootSystem("Dynkin diagram is not ADE".into()));
    }
    let key = |v: &usize| node_key(&simple[*v]);
    let (family, order) = if degree3.is_empty() {
        let mut ends: Vec<usize> = nodes.iter().copied().filter(|&v| adj[v].len() <= 1).collect();
        ends.sort_by_key(key);
        let order = if m == 1 {
            vec![ends[0]]
        } else {
            let mut o = vec![ends[0]];
            o.extend(arm(adj, ends[0], adj[ends[0]][0]));
            o
        };
        (Family::A, order)
    } else {
        let t = degree3[0];
        let mut arms: Vec<Vec<usize>> = adj[t].iter().map(|&s| arm(adj, t, s)).collect();
        arms.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| key(&a[0]).cmp(&key(&b[0]))));
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        match lens.as_slice() {
            [1, 1, _] => {
                let mut o: Vec<usize> = arms[2].iter().rev().copied().collect();
                o.push(t);
                o.push(arms[0][0]);
                o.push(arms[1][0]);
                if lens[2] == 1 {
                    // D4: all three legs are interchangeable; order by key
                    let mut legs = [arms[0][0], arms[1][0], arms[2][0]];
                    legs.sort_by_key(key);
                    o = vec![legs[0], t, legs[1], legs[2]];
                }
                (Family::D, o)
            }
            [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => {
                let mut o = vec![arms[1][1], arms[0][0], arms[1][0], t];
                o.extend(arms[2].iter().copied());
                (Family::E, o)
            }
            _ => return Err(Error::NotRootSystem("Dynkin diagram is not ADE".into())),
        }
    };
    let ty = RootType::new(family, m)?;
    Ok(RootComponent {
        ty,
        simple_roots: order.iter().map(|&v| simple[v].clone()).collect(),
    })
}

/// Root type names of a decomposition, e.g. `["A1", "D4", "D6", "D6"]`.
pub fn type_names(comps: &[RootComponent]) -> Vec<alloc::string::String> {
    comps.iter().map(|c| format!("{}", c.ty)).collect()
}

/// Counts components by type.
pub fn type_multiset(comps: &[RootComponent]) -> BTreeMap<RootType, usize> {
    let mut m = BTreeMap::new();
    for c in comps {
        *m.entry(c.ty).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::IntMatrix;
    use crate::frame::enumerate::roots_of;
    use crate::rootlat::RootLattice;

    fn classify(blocks: &[(Family, usize)]) -> Vec<RootComponent> {
        let grams: Vec<IntMatrix> = blocks
            .iter()
            .map(|&(f, n)| RootLattice::build(f, n).unwrap().gram)
            .collect();
        let g = arith::int_matrix_to_rat(&IntMatrix::direct_sum(&grams));
        let roots = roots_of(&g).unwrap();
        classify_root_system(&roots, &g).unwrap()
    }

    #[test]
    fn recovers_original_simple_roots() {
        for (f, n) in [(Family::A, 5), (Family::D, 6), (Family::E, 6), (Family::E, 7), (Family::D, 4)] {
            let c = classify(&[(f, n)]);
            assert_eq!(c.len(), 1);
            assert_eq!(c[0].ty, RootType::new(f, n).unwrap());
            let lat = RootLattice::build(f, n).unwrap();
            // Gram of the extracted simple roots is the Cartan matrix in Bourbaki order
            let g = lat.gram_rat();
            for i in 0..n {
                for j in 0..n {
                    let p = pair(&g, &c[0].simple_roots[i], &c[0].simple_roots[j]);
                    assert_eq!(p, rat_int(lat.gram.get(i, j)), "{f:?}{n} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn sums_are_sorted() {
        let c = classify(&[(Family::D, 4), (Family::A, 1), (Family::A, 2)]);
        assert_eq!(type_names(&c), vec!["A1", "A2", "D4"]);
    }

    #[test]
    fn empty_and_invalid() {
        let g = RatMatrix::identity(2).map(|x| -x.clone() * Rat::from_integer(Int::from(2)));
        assert!(classify_root_system(&[], &g).unwrap().is_empty());
        let bad = vec![vec![Int::one(), Int::zero()]];
        assert!(classify_root_system(&bad, &g).is_err());
    }
}
