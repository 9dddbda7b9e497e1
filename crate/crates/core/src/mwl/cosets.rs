//! Sections read off a frame: one per class of `W/N`, plus generators of `N/N_root`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{dictionary_ade_kodaira, FiberSpec, SectionSet, SectionSpec};
use crate::arith::{self, rat, rat_int, Int, IntMatrix, Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::frame::enumerate::{lll, short_vectors};
use crate::frame::Frame;
use crate::niemeier::GlueVector;
use crate::rootlat::{to_rat_vec, Family, RootType};

/// A section `O + kF + ω` with `ω ∈ W` dominant for `W_root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSection {
    pub glue: GlueVector,
    /// Order of the class in `W/N`; `1` for classes of `N`.
    pub order: usize,
    /// `ω` in the ambient root coordinates of `L`.
    pub omega: Vec<Rat>,
    pub spec: SectionSpec,
}

impl CosetSection {
    pub fn k(&self) -> Int {
        self.spec.fiber_offset_k.clone().expect("set for coset sections")
    }
}

/// Everything needed to tabulate the sections of one frame.
#[derive(Clone, Debug)]
pub struct CosetSections {
    pub fibers: Vec<FiberSpec>,
    /// One section per nonzero class of `W/N`, keyed by glue label.
    pub classes: BTreeMap<GlueVector, CosetSection>,
    /// Sections generating `N/N_root` modulo torsion, by increasing height.
    pub n_generators: Vec<CosetSection>,
    /// `W/N` as a group of glue labels.
    pub w_over_n_labels: Vec<GlueVector>,
}

impl CosetSections {
    pub fn class(&self, g: &GlueVector) -> Result<&CosetSection> {
        self.classes
            .get(g)
            .ok_or_else(|| Error::NoRepresentative(format!("{g} is not a class of W/N")))
    }

    /// A section set over the given sections, with `P̄·Q̄ = −2 + k_P + k_Q + ω_P·ω_Q`.
    pub fn section_set(&self, frame: &Frame, sections: &[(&str, &CosetSection)]) -> SectionSet {
        let mut set = SectionSet::new(self.fibers.clone());
        for (name, s) in sections {
            let mut spec = s.spec.clone();
            spec.name = name.to_string();
            set.add(spec);
        }
        for (i, (a, sa)) in sections.iter().enumerate() {
            for (b, sb) in sections.iter().skip(i + 1) {
                let pq = Int::from(-2) + sa.k() + sb.k() + frame.pair(&sa.omega, &sb.omega).to_integer();
                set.set_intersection(a, b, pq);
            }
        }
        set
    }
}

struct Summand {
    ty: RootType,
    roots: Vec<Vec<Rat>>,
    gram_inv: RatMatrix,
}

struct Ctx<'a> {
    frame: &'a Frame,
    summands: Vec<Summand>,
    fibers: Vec<FiberSpec>,
}

fn minuscule_nodes(ty: RootType) -> Vec<usize> {
    let n = ty.rank;
    match (ty.family, n) {
        (Family::A, _) => (1..=n).collect(),
        (Family::D, _) => vec![1, n - 1, n],
        (Family::E, 6) => vec![1, 6],
        (Family::E, 7) => vec![7],
        _ => Vec::new(),
    }
}

impl<'a> Ctx<'a> {
    fn new(frame: &'a Frame) -> Result<Self> {
        let mut summands = Vec::new();
        let mut fibers = Vec::new();
        for c in &frame.root_summands {
            let roots: Vec<Vec<Rat>> = c.simple_roots.iter().map(|r| to_rat_vec(r)).collect();
            let m = roots.len();
            let mut g = RatMatrix::zeros(m, m);
            for i in 0..m {
                for j in 0..m {
                    g.set(i, j, frame.pair(&roots[i], &roots[j]));
                }
            }
            summands.push(Summand {
                ty: c.ty,
                roots,
                gram_inv: arith::inverse(&g)?,
            });
            let k = dictionary_ade_kodaira(c.ty);
            fibers.push(FiberSpec::new(k, &c.ty.to_string()));
        }
        Ok(Self { frame, summands, fibers })
    }

    /// Moves `v` by `W_root` so that its pairings with every summand are `0` or a
    /// single `1` at a minuscule node; returns the vector and the met components.
    fn dominant(&self, v: &[Rat]) -> Result<(Vec<Rat>, Vec<usize>)> {
        let (out, nodes) = dominantize(&self.summands, &self.frame.ambient_gram, v)?;
        let meets = nodes
            .iter()
            .zip(&self.fibers)
            .map(|(&t, f)| if t == 0 { Ok(0) } else { f.slot_of_node(t) })
            .collect::<Result<Vec<_>>>()?;
        Ok((out, meets))
    }

    fn cost(&self, v: &[Rat]) -> Rat {
        -self.frame.pair(v, v)
    }

    fn height(&self, v: &[Rat]) -> Rat {
        let p = self.frame.project(v);
        -self.frame.pair(&p, &p)
    }

    /// Ordering key: smaller height, then smaller norm, then closer to `anchor`, then
    /// the lexicographically largest vector.
    fn better(&self, a: &[Rat], b: &[Rat], anchor: &[Rat]) -> bool {
        let (ha, hb) = (self.height(a), self.height(b));
        if ha != hb {
            return ha < hb;
        }
        let (ca, cb) = (self.cost(a), self.cost(b));
        if ca != cb {
            return ca < cb;
        }
        let dist = |v: &[Rat]| {
            let d: Vec<Rat> = v.iter().zip(anchor).map(|(x, y)| x - y).collect();
            self.cost(&d)
        };
        let (da, db) = (dist(a), dist(b));
        if da != db {
            return da < db;
        }
        a > b
    }

    fn section(&self, glue: GlueVector, order: usize, omega: Vec<Rat>, meets: Vec<usize>) -> Result<CosetSection> {
        let k2 = self.cost(&omega);
        let k = k2 / rat(2, 1);
        if !k.is_integer() {
            return Err(Error::NonIntegral(format!("fiber offset for {glue}")));
        }
        let k = k.to_integer();
        let mut spec = SectionSpec::new(&glue.to_string(), meets, 0);
        spec.meets_zero = &k - Int::from(2);
        spec.fiber_offset_k = Some(k);
        Ok(CosetSection { glue, order, omega, spec })
    }
}

fn dominantize(summands: &[Summand], gram: &RatMatrix, v: &[Rat]) -> Result<(Vec<Rat>, Vec<usize>)> {
    let mut out = v.to_vec();
    let mut nodes = Vec::with_capacity(summands.len());
    for s in summands {
        let p: Vec<Rat> = s.roots.iter().map(|r| arith::bilinear(gram, v, r)).collect();
        let mut targets = vec![0];
        targets.extend(minuscule_nodes(s.ty));
        let hit = targets.into_iter().find_map(|t| {
            let mut rhs = p.clone();
            if t > 0 {
                rhs[t - 1] -= Rat::from_integer(Int::from(1));
            }
            let c = s.gram_inv.mul_vec(&rhs);
            arith::is_integral(&c).then_some((t, c))
        });
        let (t, c) = hit.ok_or_else(|| Error::NoRepresentative(format!("no dominant weight in the class for {}", s.ty)))?;
        for (ci, r) in c.iter().zip(&s.roots) {
            for (o, x) in out.iter_mut().zip(r) {
                *o -= ci * x;
            }
        }
        nodes.push(t);
    }
    Ok((out, nodes))
}

/// The components of `L_root` that contain roots of `W`, as summands.
fn ambient_summands(frame: &Frame) -> Result<Vec<Summand>> {
    let lat = frame.lattice();
    let dim = lat.rank();
    let offs = lat.offsets();
    let mut out = Vec::new();
    for (c, off) in lat.components.iter().zip(offs) {
        let carries_fiber = frame
            .root_summands
            .iter()
            .flat_map(|s| &s.simple_roots)
            .any(|r| r[off..off + c.rank()].iter().any(|x| !x.is_zero()));
        if !carries_fiber {
            continue;
        }
        let roots = (0..c.rank())
            .map(|i| {
                let mut e = vec![Rat::zero(); dim];
                e[off + i] = Rat::from_integer(Int::from(1));
                e
            })
            .collect();
        out.push(Summand {
            ty: c.ty,
            roots,
            gram_inv: arith::inverse(&c.gram_rat())?,
        });
    }
    Ok(out)
}

fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn combo(coeffs: &[Int], vs: &[Vec<Rat>], dim: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); dim];
    for (c, v) in coeffs.iter().zip(vs) {
        if c.is_zero() {
            continue;
        }
        let c = rat_int(c);
        for (o, x) in out.iter_mut().zip(v) {
            *o += &c * x;
        }
    }
    out
}

/// Lifts of a reduced basis of `π(N)` and representatives of the torsion of `N/N_root`.
fn n_structure(ctx: &Ctx) -> Result<(Vec<Vec<Rat>>, RatMatrix, Vec<Vec<Rat>>)> {
    let frame = ctx.frame;
    let dim = frame.ambient_gram.rows();
    let n: Vec<Vec<Rat>> = frame.n_basis.iter().map(|v| to_rat_vec(v)).collect();
    let proj: Vec<Vec<Rat>> = n.iter().map(|v| frame.project(v)).collect();
    let d = rat_int(&arith::common_denominator(proj.iter().flatten()));
    let scaled: Vec<Vec<Int>> = proj.iter().map(|v| v.iter().map(|x| (x * &d).to_integer()).collect()).collect();
    let h = arith::hnf(&IntMatrix::from_rows(scaled, dim)?);
    let lifts: Vec<Vec<Rat>> = (0..h.rank).map(|i| combo(h.u.row(i), &n, dim)).collect();
    let closure: Vec<Vec<Rat>> = (h.rank..n.len()).map(|i| combo(h.u.row(i), &n, dim)).collect();

    let (lifts, gram) = if lifts.is_empty() {
        (lifts, RatMatrix::zeros(0, 0))
    } else {
        let (g, u) = lll(&frame.height_gram(&lifts))?;
        let reduced: Vec<Vec<Rat>> = (0..u.rows()).map(|i| combo(u.row(i), &lifts, dim)).collect();
        (reduced, g)
    };

    // torsion of N/N_root: N̄_root / N_root
    let roots: Vec<Vec<Rat>> = ctx.summands.iter().flat_map(|s| s.roots.clone()).collect();
    let mut torsion = vec![vec![Rat::zero(); dim]];
    if !closure.is_empty() {
        let cm = RatMatrix::from_rows(closure.clone(), dim)?;
        let mut coords = Vec::new();
        for r in &roots {
            let x = arith::solve_rational(&cm.transpose(), r)
                .ok_or_else(|| Error::Dimension("root outside N".into()))?;
            coords.push(x.iter().map(|c| c.to_integer()).collect::<Vec<Int>>());
        }
        let a = IntMatrix::from_rows(coords, closure.len())?;
        let s = arith::snf(&a);
        let rinv = arith::inverse(&arith::int_matrix_to_rat(&s.right))?;
        let gens: Vec<Vec<Rat>> = (0..rinv.rows())
            .map(|i| {
                let c: Vec<Int> = rinv.row(i).iter().map(|x| x.to_integer()).collect();
                combo(&c, &closure, dim)
            })
            .collect();
        for (i, di) in s.diagonal.iter().enumerate() {
            if di.is_zero() || di == &Int::from(1) {
                continue;
            }
            let mut next = Vec::new();
            for t in &torsion {
                let mut acc = t.clone();
                let mut c = Int::zero();
                while &c < di {
                    next.push(acc.clone());
                    acc = add(&acc, &gens[i]);
                    c += 1;
                }
            }
            torsion = next;
        }
    }
    Ok((lifts, gram, torsion))
}

/// Builds one section per nonzero class of `W/N` and the `N/N_root` generators.
///
/// A class is represented by its standard glue vector (minuscule weights on the
/// components carrying fibers, the stored representatives elsewhere) when that lies
/// in `W`; otherwise by the member of `v + N` of least height, then least norm, then
/// nearest the standard vector.
pub fn sections_from_cosets(frame: &Frame) -> Result<CosetSections> {
    let ctx = Ctx::new(frame)?;
    let dim = frame.ambient_gram.rows();
    let (lifts, qgram, torsion) = n_structure(&ctx)?;

    // W/N as glue labels, with a W vector in each class
    let mut reps: BTreeMap<GlueVector, Vec<Rat>> = BTreeMap::new();
    let zero = vec![Rat::zero(); dim];
    let zl = frame.glue_label(&zero).expect("zero");
    reps.insert(zl.clone(), zero.clone());
    let mut queue = VecDeque::from([zl]);
    while let Some(l) = queue.pop_front() {
        let v = reps[&l].clone();
        for b in &frame.w_basis {
            let w = add(&v, b);
            let lw = frame
                .glue_label(&w)
                .ok_or_else(|| Error::NonIntegral("W vector outside L".into()))?;
            if !reps.contains_key(&lw) {
                reps.insert(lw.clone(), w);
                queue.push_back(lw);
            }
        }
    }
    let labels: Vec<GlueVector> = reps.keys().cloned().collect();
    let lat = frame.lattice();

    let best_in_coset = |v: &[Rat], anchor: &[Rat]| -> Result<(Vec<Rat>, Vec<usize>)> {
        let mut best: Option<(Vec<Rat>, Vec<usize>)> = None;
        let consider = |cand: Vec<Rat>, best: &mut Option<(Vec<Rat>, Vec<usize>)>| -> Result<()> {
            let (d, m) = ctx.dominant(&cand)?;
            if best.as_ref().is_none_or(|(b, _)| ctx.better(&d, b, anchor)) {
                *best = Some((d, m));
            }
            Ok(())
        };
        for t in &torsion {
            consider(add(v, t), &mut best)?;
        }
        if !lifts.is_empty() {
            let bound = ctx.height(v);
            let pv = frame.project(v);
            let rhs: Vec<Rat> = lifts.iter().map(|m| -frame.pair(&pv, &frame.project(m))).collect();
            let c = arith::solve_rational(&qgram, &rhs).ok_or(Error::Dependent)?;
            let center: Vec<Rat> = c.iter().map(|x| -x.clone()).collect();
            for x in short_vectors(&qgram, Some(&center), &bound)? {
                let shifted = add(v, &combo(&x, &lifts, dim));
                for t in &torsion {
                    consider(add(&shifted, t), &mut best)?;
                }
            }
        }
        Ok(best.expect("nonempty"))
    };

    let ambient = ambient_summands(frame)?;
    let mut classes = BTreeMap::new();
    for (g, v) in &reps {
        if g.is_zero() {
            continue;
        }
        let standard = dominantize(&ambient, &frame.ambient_gram, &lat.representative(g))?.0;
        let (omega, meets) = if frame.in_w(&standard) {
            ctx.dominant(&standard)?
        } else {
            best_in_coset(v, &standard)?
        };
        let order = lat.order(g);
        classes.insert(g.clone(), ctx.section(g.clone(), order, omega, meets)?);
    }

    let mut n_generators = Vec::new();
    for m in &lifts {
        let mut best: Option<(Vec<Rat>, Vec<usize>)> = None;
        for sign in [1i64, -1] {
            let s = rat(sign, 1);
            let base: Vec<Rat> = m.iter().map(|x| x * &s).collect();
            for t in &torsion {
                let (d, mt) = ctx.dominant(&add(&base, t))?;
                if best.as_ref().is_none_or(|(b, _)| ctx.better(&d, b, &zero)) {
                    best = Some((d, mt));
                }
            }
        }
        let (omega, meets) = best.expect("nonempty");
        let g = frame.glue_label(&omega).expect("in L");
        n_generators.push(ctx.section(g, 1, omega, meets)?);
    }
    n_generators.sort_by_key(|a| ctx.height(&a.omega));

    Ok(CosetSections {
        fibers: ctx.fibers,
        classes,
        n_generators,
        w_over_n_labels: labels,
    })
}
