//! Randomized property suites for the infrastructure layers: exact linear
//! algebra, the monoidal calculus, coequalizer quotients and workspace
//! round-trips.

use proptest::prelude::*;

use cwk_core::coring::{
    bimodule_on_quotient, in_relation_span, tensor_mor_over_a, tensor_over_a, triple_product,
    unit_iso_left, unit_iso_right, Bimodule,
};
use cwk_core::exactlin::{
    cokernel_projection, kernel_basis, kron, solve_linear, Field, Mat, Scalar,
};
use cwk_core::fixtures;
use cwk_core::moncat::{GenObj, Mor, Obj};
use cwk_core::structures::RightModule;
use cwk_core::workspace::{parse_workspace, serialize_workspace, workspace_of_cowreath};

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Scalar::ratio(n, d, Field::Q).unwrap())
}

fn mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(small_scalar(), rows * cols)
        .prop_map(move |entries| Mat::new(rows, cols, Field::Q, entries).unwrap())
}

fn dims() -> impl Strategy<Value = usize> {
    1usize..=3
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn kron_is_associative((a, b, c) in (dims(), dims(), dims(), dims(), dims(), dims())
        .prop_flat_map(|(r1, c1, r2, c2, r3, c3)| (mat(r1, c1), mat(r2, c2), mat(r3, c3))))
    {
        let left = kron(&kron(&a, &b).unwrap(), &c).unwrap();
        let right = kron(&a, &kron(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kron_matches_index_definition((a, b) in (dims(), dims(), dims(), dims())
        .prop_flat_map(|(r1, c1, r2, c2)| (mat(r1, c1), mat(r2, c2))))
    {
        let k = kron(&a, &b).unwrap();
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                for p in 0..b.rows() {
                    for q in 0..b.cols() {
                        let expect = a.get(i, j).mul(b.get(p, q)).unwrap();
                        prop_assert_eq!(k.get(i * b.rows() + p, j * b.cols() + q), &expect);
                    }
                }
            }
        }
    }

    #[test]
    fn kron_interchange((a, b, c, d) in (dims(), dims(), dims(), dims(), dims(), dims())
        .prop_flat_map(|(m, n, k, p, q, r)| (mat(m, n), mat(n, k), mat(p, q), mat(q, r))))
    {
        // (a.b) (x) (c.d) = (a (x) c) . (b (x) d)
        let left = kron(&a.mul(&b).unwrap(), &c.mul(&d).unwrap()).unwrap();
        let right = kron(&a, &c).unwrap().mul(&kron(&b, &d).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kron_bilinear((a, b, c) in (dims(), dims(), dims(), dims())
        .prop_flat_map(|(r1, c1, r2, c2)| (mat(r1, c1), mat(r1, c1), mat(r2, c2))))
    {
        let left = kron(&a.add(&b).unwrap(), &c).unwrap();
        let right = kron(&a, &c).unwrap().add(&kron(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn solve_linear_is_sound((a, x0) in (1usize..=4, 1usize..=4)
        .prop_flat_map(|(m, n)| (mat(m, n), mat(n, 1))))
    {
        // Feasible by construction: b = a x0.
        let b = a.mul(&x0).unwrap();
        let sol = solve_linear(&a, &b).unwrap().expect("constructed to be feasible");
        prop_assert_eq!(a.mul(&sol.particular).unwrap(), b);
        // Kernel columns really are kernel vectors and independent.
        prop_assert!(a.mul(&sol.kernel).unwrap().is_zero());
        prop_assert_eq!(sol.kernel.rank(), sol.kernel.cols());
        prop_assert_eq!(sol.kernel.cols(), a.cols() - a.rank());
    }

    #[test]
    fn infeasible_iff_rank_jump((a, b) in (1usize..=4, 1usize..=4)
        .prop_flat_map(|(m, n)| (mat(m, n), mat(m, 1))))
    {
        let feasible = solve_linear(&a, &b).unwrap().is_some();
        let rank_jump = a.hstack(&b).unwrap().rank() > a.rank();
        prop_assert_eq!(feasible, !rank_jump);
    }

    #[test]
    fn kernel_basis_spans_the_kernel(a in (1usize..=4, 1usize..=4)
        .prop_flat_map(|(m, n)| mat(m, n)))
    {
        let k = kernel_basis(&a);
        prop_assert!(a.mul(&k).unwrap().is_zero());
        prop_assert_eq!(k.cols(), a.cols() - a.rank());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn cokernel_contract(a in (1usize..=4, 1usize..=4)
        .prop_flat_map(|(m, n)| mat(m, n)))
    {
        let (q, s) = cokernel_projection(&a);
        prop_assert!(q.mul(&a).unwrap().is_zero());
        prop_assert!(q.mul(&s).unwrap().is_identity());
        prop_assert_eq!(q.rows(), a.rows() - a.rank());
        // Anything killed by q is in the column span of a.
        let ker_q = kernel_basis(&q);
        for j in 0..ker_q.cols() {
            let v = ker_q.column(j);
            prop_assert!(solve_linear(&a, &v).unwrap().is_some());
        }
    }

    #[test]
    fn morphism_interchange((f, g, h, k) in (dims(), dims(), dims(), dims(), dims(), dims())
        .prop_flat_map(|(m, n, p, q, r, s)| (mat(m, n), mat(n, p), mat(q, r), mat(r, s))))
    {
        // Interchange at the typed-morphism level.
        let obj = |tag: &str, d: usize| Obj::gen(&GenObj::new(tag, d));
        let fm = Mor::new(obj("B", f.cols()), obj("C", f.rows()), f).unwrap();
        let gm = Mor::new(obj("A", g.cols()), obj("B", g.rows()), g).unwrap();
        let hm = Mor::new(obj("E", h.cols()), obj("F", h.rows()), h).unwrap();
        let km = Mor::new(obj("D", k.cols()), obj("E", k.rows()), k).unwrap();
        let left = fm.after(&gm).unwrap().tensor(&hm.after(&km).unwrap()).unwrap();
        let right = fm.tensor(&hm).unwrap().after(&gm.tensor(&km).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

fn random_bimodule_over_z2(seed: u64) -> Bimodule {
    // A small supply of genuinely different bimodules over k[Z/2]:
    // the regular one, the sign-twisted one, and their product.
    let field = Field::Q;
    let alg = fixtures::group_algebra_z2(field);
    match seed % 3 {
        0 => Bimodule::regular(&alg),
        1 => {
            // One-dimensional: g acts by -1 on both sides.
            let m = Obj::gen(&GenObj::new("S", 1));
            let nu = Mor::from_i64(&alg.a.tensor(&m), &m, field, &[&[1, -1]]).unwrap();
            let mu = Mor::from_i64(&m.tensor(&alg.a), &m, field, &[&[1, -1]]).unwrap();
            Bimodule::new(m, nu, mu, &alg).unwrap()
        }
        _ => {
            // One-dimensional trivial: g acts by +1.
            let m = Obj::gen(&GenObj::new("T", 1));
            let nu = Mor::from_i64(&alg.a.tensor(&m), &m, field, &[&[1, 1]]).unwrap();
            let mu = Mor::from_i64(&m.tensor(&alg.a), &m, field, &[&[1, 1]]).unwrap();
            Bimodule::new(m, nu, mu, &alg).unwrap()
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn quotient_tensor_invariants((sx, sy) in (0u64..3, 0u64..3)) {
        let field = Field::Q;
        let alg = fixtures::group_algebra_z2(field);
        let x = random_bimodule_over_z2(sx);
        let y = random_bimodule_over_z2(sy);
        let qd = tensor_over_a(&x.right(), &y.left(), &alg).unwrap();
        // Section hits a basis of the quotient; q kills exactly the span
        // of the relation map.
        prop_assert!(qd.q.after(&qd.s).unwrap().is_identity());
        let ix = Mor::id(&x.m, field);
        let iy = Mor::id(&y.m, field);
        let rel = x.right().mu.tensor(&iy).unwrap()
            .sub(&ix.tensor(&y.left().nu).unwrap()).unwrap();
        prop_assert!(in_relation_span(&qd, &rel.mat).unwrap());
        prop_assert_eq!(qd.quotient.dim(), qd.ambient.dim() - rel.mat.rank());
    }

    #[test]
    fn unit_isos_and_associator((sx, sy, sz) in (0u64..3, 0u64..3, 0u64..3)) {
        let field = Field::Q;
        let alg = fixtures::group_algebra_z2(field);
        let x = random_bimodule_over_z2(sx);
        let y = random_bimodule_over_z2(sy);
        let z = random_bimodule_over_z2(sz);
        let a_bim = Bimodule::regular(&alg);

        let qd_xa = tensor_over_a(&x.right(), &a_bim.left(), &alg).unwrap();
        let (rho, rho_inv) = unit_iso_right(&qd_xa, &alg).unwrap();
        prop_assert!(rho.after(&rho_inv).unwrap().is_identity());
        prop_assert!(rho_inv.after(&rho).unwrap().is_identity());
        prop_assert_eq!(rho.after(&qd_xa.q).unwrap().mat, x.right().mu.mat);

        let qd_ax = tensor_over_a(&a_bim.right(), &x.left(), &alg).unwrap();
        let (lam, lam_inv) = unit_iso_left(&qd_ax, &alg).unwrap();
        prop_assert!(lam.after(&lam_inv).unwrap().is_identity());
        prop_assert_eq!(lam.after(&qd_ax.q).unwrap().mat, x.left().nu.mat);

        let tp = triple_product(&x, &y, &z, &alg).unwrap();
        prop_assert!(tp.assoc.after(&tp.assoc_inv).unwrap().is_identity());
        prop_assert!(tp.assoc_inv.after(&tp.assoc).unwrap().is_identity());
    }

    #[test]
    fn pentagon_instance((sx, sy, sz, st) in (0u64..3, 0u64..3, 0u64..3, 0u64..3)) {
        let field = Field::Q;
        let alg = fixtures::group_algebra_z2(field);
        let x = random_bimodule_over_z2(sx);
        let y = random_bimodule_over_z2(sy);
        let z = random_bimodule_over_z2(sz);
        let t = random_bimodule_over_z2(st);

        // All bracketings through quotient bimodules.
        let yz = tensor_over_a(&y.right(), &z.left(), &alg).unwrap();
        let yz_b = bimodule_on_quotient(&yz, &y, &z, &alg).unwrap();
        let zt = tensor_over_a(&z.right(), &t.left(), &alg).unwrap();
        let zt_b = bimodule_on_quotient(&zt, &z, &t, &alg).unwrap();
        let xy = tensor_over_a(&x.right(), &y.left(), &alg).unwrap();
        let xy_b = bimodule_on_quotient(&xy, &x, &y, &alg).unwrap();

        // alpha_{X,Y,Z(.)T} . alpha-components, five-object coherence.
        let tp_x_y_zt = triple_product(&x, &y, &zt_b, &alg).unwrap();
        let tp_xy_z_t = triple_product(&xy_b, &z, &t, &alg).unwrap();
        let tp_x_yz_t = triple_product(&x, &yz_b, &t, &alg).unwrap();
        let tp_y_z_t = triple_product(&y, &z, &t, &alg).unwrap();
        let tp_x_y_z = triple_product(&x, &y, &z, &alg).unwrap();

        // Route one: X.(Y.(Z.T)) -> (X.Y).(Z.T) -> ((X.Y).Z).T
        let route1 = tp_xy_z_t.assoc
            .after(&tp_x_y_zt.assoc).unwrap();

        // Route two: X.(Y.(Z.T)) -> X.((Y.Z).T) -> (X.(Y.Z)).T -> ((X.Y).Z).T
        // Step 1: X . alpha_{Y,Z,T}. The two presentations of Y.(Z.T) and
        // (Y.Z).T are tp_y_z_t.x_yz / tp_y_z_t.xy_z.
        prop_assert_eq!(&tp_y_z_t.x_yz.q, &{
            let inner = tensor_over_a(&y.right(), &bimodule_on_quotient(&zt, &z, &t, &alg).unwrap().left(), &alg).unwrap();
            inner.q.clone()
        });
        let x_alpha = {
            let src = tensor_over_a(&x.right(), &bimodule_on_quotient(&tp_y_z_t.x_yz, &y, &bimodule_on_quotient(&zt, &z, &t, &alg).unwrap(), &alg).unwrap().left(), &alg).unwrap();
            prop_assert_eq!(&src.q, &tp_x_y_zt.x_yz.q);
            let tgt_inner = bimodule_on_quotient(&tp_y_z_t.xy_z, &bimodule_on_quotient(&yz, &y, &z, &alg).unwrap(), &t, &alg).unwrap();
            let tgt = tensor_over_a(&x.right(), &tgt_inner.left(), &alg).unwrap();
            prop_assert_eq!(&tgt.q, &tp_x_yz_t.x_yz.q);
            tensor_mor_over_a(&Mor::id(&x.m, field), &tp_y_z_t.assoc, &src, &tgt).unwrap()
        };
        let alpha_t = {
            let tgt_inner = bimodule_on_quotient(&tp_x_y_z.xy_z, &xy_b, &z, &alg).unwrap();
            let tgt = tensor_over_a(&tgt_inner.right(), &t.left(), &alg).unwrap();
            prop_assert_eq!(&tgt.q, &tp_xy_z_t.xy_z.q);
            tensor_mor_over_a(&tp_x_y_z.assoc, &Mor::id(&t.m, field), &tp_x_yz_t.xy_z, &tgt).unwrap()
        };
        let route2 = alpha_t
            .after(&tp_x_yz_t.assoc).unwrap()
            .after(&x_alpha).unwrap();

        prop_assert_eq!(route1.mat, route2.mat);
    }

    #[test]
    fn workspace_roundtrip(which in 0usize..4) {
        let field = Field::Q;
        let cw = match which {
            0 => fixtures::f0(field),
            1 => fixtures::f1(field),
            2 => fixtures::f2(field),
            _ => fixtures::f3(field),
        };
        let ws = workspace_of_cowreath(&cw, &[]);
        let text = serialize_workspace(&ws);
        let back = parse_workspace(text.as_bytes()).unwrap();
        prop_assert_eq!(serialize_workspace(&back), text);
    }
}

#[test]
fn fp_smoke_kron_and_solve() {
    // The same contracts hold over a prime field.
    let f = Field::prime(101).unwrap();
    let a = Mat::from_i64(f, &[&[3, 5], &[7, 11]]);
    let b = Mat::from_i64(f, &[&[2, 0], &[1, 6]]);
    let k = kron(&a, &b).unwrap();
    assert_eq!(k.rows(), 4);
    let sol = solve_linear(&a, &b).unwrap().unwrap();
    assert_eq!(a.mul(&sol.particular).unwrap(), b);
}

#[test]
fn regular_comodule_modules_stay_valid() {
    // Cross-module sanity: the fixture modules used across suites validate.
    let field = Field::Q;
    for cw in [fixtures::f1(field), fixtures::f2(field)] {
        let em = fixtures::regular_comodule(&cw);
        assert!(cwk_core::entwine::check_entwined_module(&em)
            .unwrap()
            .passed());
    }
    let f3 = fixtures::f3(field);
    let n = RightModule::regular(f3.alg());
    assert!(
        cwk_core::entwine::cofree_triangles(&f3, &n).unwrap().passed()
    );
}
