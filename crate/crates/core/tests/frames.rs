use mwlforge_core::arith::{det, int, int_matrix_to_rat, rat, rat_int, snf, IntMatrix, Rat, RatMatrix};
use mwlforge_core::frame::{a92d6_embedding, compute_frame, d64_embedding, Frame};
use mwlforge_core::mwl::tables::{build_table, TableKind};
use mwlforge_core::mwl::{qform_equivalent, QformOutcome};
use mwlforge_core::niemeier::{make_niemeier_a92d6, make_niemeier_d64};
use num_traits::{One, Signed};

fn gram_of(frame: &Frame, basis: &[Vec<Rat>]) -> RatMatrix {
    let rows = basis
        .iter()
        .map(|a| basis.iter().map(|b| frame.pair(a, b)).collect())
        .collect();
    RatMatrix::from_rows(rows, basis.len()).unwrap()
}

fn all_frames() -> Vec<Frame> {
    let d = make_niemeier_d64();
    let a = make_niemeier_a92d6();
    vec![
        compute_frame(&d64_embedding(&d, false).unwrap()).unwrap(),
        compute_frame(&d64_embedding(&d, true).unwrap()).unwrap(),
        compute_frame(&a92d6_embedding(&a, false).unwrap()).unwrap(),
        compute_frame(&a92d6_embedding(&a, true).unwrap()).unwrap(),
    ]
}

#[test]
fn determinants_agree_with_direct_gram_computation() {
    for f in all_frames() {
        assert_eq!(det(&gram_of(&f, &f.w_basis)).unwrap(), f.det_w, "{}", f.embedding.name);
        let n: Vec<Vec<Rat>> = f.n_basis.iter().map(|v| v.iter().map(rat_int).collect()).collect();
        assert_eq!(det(&gram_of(&f, &n)).unwrap(), f.det_n, "{}", f.embedding.name);
        // |W/N| from the index of N in W: express N in a W basis and take SNF
        let w = RatMatrix::from_rows(f.w_basis.clone(), f.w_basis[0].len()).unwrap().transpose();
        let coords: Vec<Vec<_>> = n
            .iter()
            .map(|v| {
                mwlforge_core::arith::solve_rational(&w, v)
                    .unwrap()
                    .iter()
                    .map(|x| {
                        assert!(x.is_integer());
                        x.to_integer()
                    })
                    .collect()
            })
            .collect();
        let m = IntMatrix::from_rows(coords, f.w_basis.len()).unwrap();
        let inv = snf(&m).torsion_invariants();
        assert_eq!(inv, f.w_over_n, "{}", f.embedding.name);
        let idx: mwlforge_core::Int = inv.iter().product();
        assert_eq!(f.det_n, &f.det_w * rat_int(&idx) * rat_int(&idx));
    }
}

#[test]
fn d64_frame() {
    let f = &all_frames()[0];
    assert_eq!(f.root_type_names(), ["A1", "D4", "D6", "D6"]);
    assert_eq!(f.torsion, [int(2), int(2)]);
    assert_eq!(f.mw_rank, 1);
    assert_eq!(f.mw_gram, RatMatrix::from_rows(vec![vec![rat(3, 2)]], 1).unwrap());
    assert_eq!(f.det_n, rat(12 * 64, 1));
    assert_eq!(f.w_over_n_order(), int(8));
    assert_eq!(f.det_w_root(), rat(-128, 1));
    assert_eq!(f.discriminant_identity(), rat(-12, 1));
}

#[test]
fn second_d64_embedding_gives_the_same_frame() {
    let fs = all_frames();
    assert_eq!(fs[1].root_type_names(), fs[0].root_type_names());
    assert_eq!(fs[1].torsion, fs[0].torsion);
    assert!(qform_equivalent(&fs[0].mw_gram, &fs[1].mw_gram).unwrap().is_equivalent());
}

#[test]
fn a92d6_frames() {
    let fs = all_frames();
    for f in &fs[2..] {
        assert_eq!(f.root_type_names(), ["A7", "A9"]);
        assert!(f.torsion.is_empty());
        assert_eq!(f.mw_rank, 2);
        assert_eq!(f.det_n, rat(1200, 1));
        assert_eq!(f.w_over_n, [int(10)]);
        assert_eq!(det(&f.mw_gram).unwrap(), rat(3, 20));
        assert_eq!(f.discriminant_identity(), rat(-12, 1));
    }
    let q1 = RatMatrix::from_rows(vec![vec![rat(61, 40), rat(1, 20)], vec![rat(1, 20), rat(1, 10)]], 2).unwrap();
    let q2 = RatMatrix::from_rows(vec![vec![rat(1, 10), rat(0, 1)], vec![rat(0, 1), rat(3, 2)]], 2).unwrap();
    for (f, q) in [(&fs[2], &q1), (&fs[3], &q2)] {
        match qform_equivalent(&f.mw_gram, q).unwrap() {
            QformOutcome::Equivalent { transform } => {
                let p = int_matrix_to_rat(&transform);
                assert!(det(&p).unwrap().abs().is_one());
                assert_eq!(&p.mul(&f.mw_gram).unwrap().mul(&p.transpose()).unwrap(), q);
            }
            other => panic!("{other:?}"),
        }
    }
    assert!(!qform_equivalent(&fs[2].mw_gram, &fs[3].mw_gram).unwrap().is_equivalent());
}

#[test]
fn n_over_n_root_generators_have_zero_pairing() {
    for kind in [TableKind::A92D6First, TableKind::A92D6Second] {
        let f = kind.frame().unwrap();
        let t = build_table(kind, &f).unwrap();
        let gens: Vec<_> = t.rows.iter().filter(|r| r.order == 0).collect();
        assert_eq!(gens.len(), 2);
        let g = f.height_gram(&[gens[0].omega.clone(), gens[1].omega.clone()]);
        assert_eq!(g, RatMatrix::from_rows(vec![vec![rat(5, 2), rat(0, 1)], vec![rat(0, 1), rat(6, 1)]], 2).unwrap());
        assert_eq!(det(&g).unwrap(), rat(100, 1) * rat(3, 20));
    }
}
