//! Bundled desk-scale fixtures: small algebras, coalgebras and cowreaths
//! every layer of the toolkit is exercised against.
//!
//! `f0` is the all-ones trivial cowreath, `f1`/`f2` are plain coalgebras
//! over the base field promoted to cowreaths, and `f3` is the entwining of
//! the group algebra of Z/2 with itself.

use crate::entwine::{Cowreath, EntwinedModule, TransferMorphism};
use crate::exactlin::Field;
use crate::moncat::{GenObj, Mor, Obj};
use crate::structures::{Algebra, Coalgebra, RightModule};

/// k[Z/2] on basis (1, g).
pub fn group_algebra_z2(field: Field) -> Algebra {
    let a = Obj::gen(&GenObj::new("A", 2));
    let m = Mor::from_i64(
        &a.tensor(&a),
        &a,
        field,
        &[&[1, 0, 0, 1], &[0, 1, 1, 0]],
    )
    .unwrap();
    let unit = Mor::from_i64(&Obj::unit(), &a, field, &[&[1], &[0]]).unwrap();
    Algebra::new(a, m, unit).unwrap()
}

/// k[x]/(x^2) on basis (1, x).
pub fn dual_numbers_algebra(field: Field) -> Algebra {
    let a = Obj::gen(&GenObj::new("D", 2));
    let m = Mor::from_i64(
        &a.tensor(&a),
        &a,
        field,
        &[&[1, 0, 0, 0], &[0, 1, 1, 0]],
    )
    .unwrap();
    let unit = Mor::from_i64(&Obj::unit(), &a, field, &[&[1], &[0]]).unwrap();
    Algebra::new(a, m, unit).unwrap()
}

/// The group-like coalgebra on basis (u, v): both basis vectors group-like,
/// counit identically one.
pub fn grouplike_coalgebra(field: Field) -> Coalgebra {
    let c = Obj::gen(&GenObj::new("C", 2));
    let delta = Mor::from_i64(
        &c,
        &c.tensor(&c),
        field,
        &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]],
    )
    .unwrap();
    let counit = Mor::from_i64(&c, &Obj::unit(), field, &[&[1, 1]]).unwrap();
    Coalgebra::new(c, delta, counit).unwrap()
}

/// The dual of k[x]/(x^2) on basis (c0, c1): c0 group-like and
/// `Delta c1 = c0 (x) c1 + c1 (x) c0`, counit (1, 0).
pub fn divided_power_coalgebra(field: Field) -> Coalgebra {
    let c = Obj::gen(&GenObj::new("C", 2));
    let delta = Mor::from_i64(
        &c,
        &c.tensor(&c),
        field,
        &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]],
    )
    .unwrap();
    let counit = Mor::from_i64(&c, &Obj::unit(), field, &[&[1, 0]]).unwrap();
    Coalgebra::new(c, delta, counit).unwrap()
}

/// The dual of the upper-triangular 2x2 matrix algebra: a three-dimensional
/// coalgebra whose dual algebra is not self-injective, so it carries no
/// Frobenius system.
pub fn triangular_dual_coalgebra(field: Field) -> Coalgebra {
    let c = Obj::gen(&GenObj::new("C", 3));
    let delta = Mor::from_i64(
        &c,
        &c.tensor(&c),
        field,
        &[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 0],
            &[0, 0, 0],
            &[0, 0, 0],
            &[0, 1, 0],
            &[0, 0, 0],
            &[0, 0, 0],
            &[0, 0, 1],
        ],
    )
    .unwrap();
    let counit = Mor::from_i64(&c, &Obj::unit(), field, &[&[1, 0, 1]]).unwrap();
    Coalgebra::new(c, delta, counit).unwrap()
}

/// Promotes a plain coalgebra over the base field to a cowreath: the algebra
/// is the unit object, the transfer map is the identity.
pub fn cowreath_over_base(co: &Coalgebra, field: Field) -> Cowreath {
    let alg = Algebra::base(field);
    let psi = Mor::id(&co.c, field);
    let base = TransferMorphism::new(alg, co.c.clone(), psi).unwrap();
    Cowreath::from_entwining(base, &co.delta, &co.counit).unwrap()
}

/// F0: the trivial cowreath, every carrier one-dimensional, every map `[[1]]`.
pub fn f0(field: Field) -> Cowreath {
    let a = Obj::gen(&GenObj::new("A", 1));
    let x = Obj::gen(&GenObj::new("X", 1));
    let alg = Algebra::new(
        a.clone(),
        Mor::from_i64(&a.tensor(&a), &a, field, &[&[1]]).unwrap(),
        Mor::from_i64(&Obj::unit(), &a, field, &[&[1]]).unwrap(),
    )
    .unwrap();
    let psi = Mor::from_i64(&x.tensor(&a), &a.tensor(&x), field, &[&[1]]).unwrap();
    let base = TransferMorphism::new(alg, x.clone(), psi).unwrap();
    let delta = Mor::from_i64(&x, &base.alg.a.tensor(&x).tensor(&x), field, &[&[1]]).unwrap();
    let eps = Mor::from_i64(&x, &base.alg.a, field, &[&[1]]).unwrap();
    Cowreath::new(base, delta, eps).unwrap()
}

/// F1: the group-like coalgebra over the base field, as a cowreath.
pub fn f1(field: Field) -> Cowreath {
    cowreath_over_base(&grouplike_coalgebra(field), field)
}

/// F2: the divided-power coalgebra over the base field, as a cowreath.
pub fn f2(field: Field) -> Cowreath {
    cowreath_over_base(&divided_power_coalgebra(field), field)
}

/// F3: the entwining of A = k[Z/2] with X = k[Z/2],
/// `psi(h (x) a) = a (x) ha`, group-like `delta`, counit identically `1_A`.
pub fn f3(field: Field) -> Cowreath {
    let alg = group_algebra_z2(field);
    let x = Obj::gen(&GenObj::new("X", 2));
    // Basis order (1, g); columns indexed by (h, a), rows by (a, h*a).
    let psi = Mor::from_i64(
        &x.tensor(&alg.a),
        &alg.a.tensor(&x),
        field,
        &[
            &[1, 0, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[0, 1, 0, 0],
        ],
    )
    .unwrap();
    let base = TransferMorphism::new(alg, x.clone(), psi).unwrap();
    // delta(h) = 1_A (x) h (x) h, eps(h) = 1_A.
    let delta = Mor::from_i64(
        &x,
        &base.alg.a.tensor(&x).tensor(&x),
        field,
        &[
            &[1, 0],
            &[0, 0],
            &[0, 0],
            &[0, 1],
            &[0, 0],
            &[0, 0],
            &[0, 0],
            &[0, 0],
        ],
    )
    .unwrap();
    let eps = Mor::from_i64(&x, &base.alg.a, field, &[&[1, 1], &[0, 0]]).unwrap();
    Cowreath::new(base, delta, eps).unwrap()
}

/// The regular comodule of a base-field cowreath: carrier `X`, trivial
/// action, coaction given by the comultiplication.
pub fn regular_comodule(cw: &Cowreath) -> EntwinedModule {
    assert!(
        cw.alg().a.is_unit(),
        "regular comodule shortcut needs the base-field algebra"
    );
    let field = cw.field();
    let x = cw.x().clone();
    let mu = Mor::id(&x, field);
    let rho = cw.delta.clone();
    EntwinedModule::new(cw.clone(), x, mu, rho).unwrap()
}

/// The regular right module of the cowreath's algebra.
pub fn regular_module(cw: &Cowreath) -> RightModule {
    RightModule::regular(cw.alg())
}

/// F3 with `psi(g (x) g)` redirected from `1 (x) g` to `g (x) g`: breaks
/// the multiplicativity half of the transfer laws and nothing else there.
pub fn f3_bad_psi(field: Field) -> Cowreath {
    let good = f3(field);
    let mut mat = good.base.psi.mat.clone();
    mat.set(2, 3, crate::exactlin::Scalar::zero(field));
    mat.set(3, 3, crate::exactlin::Scalar::one(field));
    let psi = Mor::new(good.base.psi.dom.clone(), good.base.psi.cod.clone(), mat).unwrap();
    let base = TransferMorphism::new(good.base.alg.clone(), good.base.x.clone(), psi).unwrap();
    Cowreath {
        base,
        delta: good.delta,
        eps: good.eps,
    }
}

/// F3 with the comultiplication perturbed by a term that is invisible to
/// the left counit contraction but not to the right one.
pub fn f3_bad_delta(field: Field) -> Cowreath {
    let good = f3(field);
    let mut mat = good.delta.mat.clone();
    // v(1) = 1(x)1(x)1 - 1(x)g(x)1, v(g) = 1(x)g(x)g - 1(x)1(x)g,
    // shift-compatible with psi so the hom condition stays intact.
    let add = |mat: &mut crate::exactlin::Mat, i: usize, j: usize, sign: i64| {
        let v = mat
            .get(i, j)
            .add(&crate::exactlin::Scalar::from_i64(sign, field))
            .unwrap();
        mat.set(i, j, v);
    };
    add(&mut mat, 0, 0, 1); // + 1(x)1(x)1 on basis 1
    add(&mut mat, 2, 0, -1); // - 1(x)g(x)1 on basis 1
    add(&mut mat, 3, 1, 1); // + 1(x)g(x)g on basis g
    add(&mut mat, 1, 1, -1); // - 1(x)1(x)g on basis g
    let delta = Mor::new(good.delta.dom.clone(), good.delta.cod.clone(), mat).unwrap();
    Cowreath {
        base: good.base,
        delta,
        eps: good.eps,
    }
}

/// F3 with the counit skewed on the non-identity basis vector: the hom
/// compatibility of the counit and both counit laws break.
pub fn f3_skew_eps(field: Field) -> Cowreath {
    let good = f3(field);
    let mut mat = good.eps.mat.clone();
    mat.set(0, 1, crate::exactlin::Scalar::from_i64(2, field));
    let eps = Mor::new(good.eps.dom.clone(), good.eps.cod.clone(), mat).unwrap();
    Cowreath {
        base: good.base,
        delta: good.delta,
        eps,
    }
}

/// F3 with the counit doubled: both counit laws break, nothing else.
pub fn f3_bad_eps(field: Field) -> Cowreath {
    let good = f3(field);
    let eps = good.eps.scale(&crate::exactlin::Scalar::from_i64(2, field));
    Cowreath {
        base: good.base,
        delta: good.delta,
        eps,
    }
}

/// Regular comodule of F2 with the coaction of `c1` perturbed by the
/// counit-invisible term `c1 (x) c1`: only coassociativity breaks.
pub fn f2_comodule_bad_c1(field: Field) -> EntwinedModule {
    let cw = f2(field);
    let em = regular_comodule(&cw);
    let mut mat = em.rho.mat.clone();
    let v = mat
        .get(3, 1)
        .add(&crate::exactlin::Scalar::one(field))
        .unwrap();
    mat.set(3, 1, v);
    let rho = Mor::new(em.rho.dom.clone(), em.rho.cod.clone(), mat).unwrap();
    EntwinedModule {
        cw,
        m: em.m,
        mu: em.mu,
        rho,
    }
}

/// Regular comodule of F2 with the coaction zeroed out: only the counit
/// condition can fail.
pub fn f2_comodule_bad_c2(field: Field) -> EntwinedModule {
    let cw = f2(field);
    let em = regular_comodule(&cw);
    let rho = Mor::zero(&em.m, &em.m.tensor(cw.x()), field);
    EntwinedModule {
        cw,
        m: em.m,
        mu: em.mu,
        rho,
    }
}

/// The algebra of F3 as an entwined module, with the coaction rebuilt from
/// a complementary-projection pair that does not commute with the group
/// translation: coassociativity and counit survive, the compatibility with
/// the action through the transfer map does not.
pub fn f3_module_bad_c3(field: Field) -> EntwinedModule {
    let cw = f3(field);
    let a = cw.alg().a.clone();
    let mu = cw.alg().m.clone();
    // rho(v) = p(v) (x) 1 + (id - p)(v) (x) g for the skew projection
    // p(1) = 1, p(g) = 1.
    let rho = Mor::from_i64(
        &a,
        &a.tensor(cw.x()),
        field,
        &[&[1, 1], &[0, -1], &[0, 0], &[0, 1]],
    )
    .unwrap();
    EntwinedModule {
        cw,
        m: a,
        mu,
        rho,
    }
}
