//! Tensor products over the base algebra as explicit coequalizer quotients,
//! the coring induced on `A(x)X` by a cowreath, the bimodule-level
//! adjunction between `A(x)X` and `Y(x)A`, and the coring-level Frobenius
//! and coseparability cross-checks.
//!
//! Every quotient travels with its projection `q` and a chosen section `s`;
//! nothing is identified silently, so all the textbook identifications are
//! explicit isomorphisms that get verified rather than assumed.

use crate::entwine::Cowreath;
use crate::error::{Error, Result};
use crate::exactlin::{kernel_basis, Field, Mat};
use crate::frobsep::{
    check_frobenius_system, solve_mor_system, solve_separability, Feasibility,
    FrobeniusSystem,
};
use crate::moncat::{DualityData, GenObj, Mor, Obj};
use crate::report::{CheckEntry, Report};
use crate::structures::{expect_shape, Algebra, LeftModule, RightModule};
use crate::wreath::dual_transfer;

/// A two-sided module: `nu: A(x)M -> M` and `mu: M(x)A -> M`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule {
    pub m: Obj,
    pub nu: Mor,
    pub mu: Mor,
}

impl Bimodule {
    pub fn new(m: Obj, nu: Mor, mu: Mor, alg: &Algebra) -> Result<Bimodule> {
        expect_shape(&nu, &alg.a.tensor(&m), &m, "left action")?;
        expect_shape(&mu, &m.tensor(&alg.a), &m, "right action")?;
        Ok(Bimodule { m, nu, mu })
    }

    /// The algebra as a bimodule over itself.
    pub fn regular(alg: &Algebra) -> Bimodule {
        Bimodule {
            m: alg.a.clone(),
            nu: alg.m.clone(),
            mu: alg.m.clone(),
        }
    }

    pub fn right(&self) -> RightModule {
        RightModule {
            m: self.m.clone(),
            mu: self.mu.clone(),
        }
    }

    pub fn left(&self) -> LeftModule {
        LeftModule {
            m: self.m.clone(),
            nu: self.nu.clone(),
        }
    }
}

/// Module laws on both sides plus the middle compatibility.
pub fn check_bimodule(b: &Bimodule, alg: &Algebra) -> Result<Report> {
    let f = alg.field();
    let ia = Mor::id(&alg.a, f);
    let mut report = crate::structures::check_right_module(&b.right(), alg)?;
    report.name = format!("bimodule on {}", b.m);
    let left = crate::structures::check_left_module(&b.left(), alg)?;
    for mut e in left.entries {
        e.id = format!("left-{}", e.id);
        report.push(e);
    }
    let compat = b
        .nu
        .after(&ia.tensor(&b.mu)?)?
        .sub(&b.mu.after(&b.nu.tensor(&ia)?)?)?;
    report.push_residual("actions-commute", compat.mat);
    Ok(report)
}

/// A coequalizer presentation of a tensor product over `A`: the ambient
/// `X(x)Y`, the quotient object, the projection `q` and a section `s` with
/// `q (after) s = id`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientData {
    pub x: RightModule,
    pub y: LeftModule,
    pub ambient: Obj,
    pub quotient: Obj,
    pub q: Mor,
    pub s: Mor,
}

impl QuotientData {
    pub fn field(&self) -> Field {
        self.q.field()
    }
}

/// The tensor product `X . Y` over `A`: the quotient of `X(x)Y` by the
/// image of `(mu Y) - (X nu)`, with a deterministic section.
pub fn tensor_over_a(x: &RightModule, y: &LeftModule, alg: &Algebra) -> Result<QuotientData> {
    let f = alg.field();
    expect_shape(&x.mu, &x.m.tensor(&alg.a), &x.m, "right action")?;
    expect_shape(&y.nu, &alg.a.tensor(&y.m), &y.m, "left action")?;
    let ix = Mor::id(&x.m, f);
    let iy = Mor::id(&y.m, f);
    let relation = x.mu.tensor(&iy)?.sub(&ix.tensor(&y.nu)?)?;
    let (qm, sm) = crate::exactlin::cokernel_projection(&relation.mat);
    let ambient = x.m.tensor(&y.m);
    let quotient = Obj::gen(&GenObj {
        name: format!("({}*{})", x.m, y.m),
        dim: qm.rows(),
    });
    let q = Mor::new(ambient.clone(), quotient.clone(), qm)?;
    let s = Mor::new(quotient.clone(), ambient.clone(), sm)?;
    Ok(QuotientData {
        x: x.clone(),
        y: y.clone(),
        ambient,
        quotient,
        q,
        s,
    })
}

/// The induced map on quotients `f . g`, computed as
/// `q_tgt (after) (f g) (after) s_src` and verified well defined: the
/// composite must kill the kernel of `q_src`.
pub fn tensor_mor_over_a(
    f: &Mor,
    g: &Mor,
    src: &QuotientData,
    tgt: &QuotientData,
) -> Result<Mor> {
    let fg = f.tensor(g)?;
    expect_shape(&fg, &src.ambient, &tgt.ambient, "quotient map candidate")?;
    let lifted = tgt.q.after(&fg)?;
    let kernel = kernel_basis(&src.q.mat);
    if !lifted.mat.mul(&kernel)?.is_zero() {
        return Err(Error::DescentFailure);
    }
    lifted.after(&src.s)
}

/// Bimodule structure on a quotient `X . Y` of bimodules:
/// `nu = q (after) (nu_X Y) (after) (A s)` and mirrored on the right.
pub fn bimodule_on_quotient(
    qd: &QuotientData,
    x: &Bimodule,
    y: &Bimodule,
    alg: &Algebra,
) -> Result<Bimodule> {
    let f = alg.field();
    let ia = Mor::id(&alg.a, f);
    let iy = Mor::id(&y.m, f);
    let ix = Mor::id(&x.m, f);
    let nu = qd
        .q
        .after(&x.nu.tensor(&iy)?)?
        .after(&ia.tensor(&qd.s)?)?;
    let mu = qd
        .q
        .after(&ix.tensor(&y.mu)?)?
        .after(&qd.s.tensor(&ia)?)?;
    Bimodule::new(qd.quotient.clone(), nu, mu, alg)
}

/// The canonical isomorphism `X . A -> X` (with inverse `q (after) (X eta)`).
pub fn unit_iso_right(qd: &QuotientData, alg: &Algebra) -> Result<(Mor, Mor)> {
    let f = alg.field();
    if qd.y.m != alg.a {
        return Err(Error::ObjectMismatch {
            context: "right unit iso",
            left: qd.y.m.to_string(),
            right: alg.a.to_string(),
        });
    }
    let iso = qd.x.mu.after(&qd.s)?;
    let ix = Mor::id(&qd.x.m, f);
    let inv = qd.q.after(&ix.tensor(&alg.unit)?)?;
    Ok((iso, inv))
}

/// The canonical isomorphism `A . X -> X` (with inverse `q (after) (eta X)`).
pub fn unit_iso_left(qd: &QuotientData, alg: &Algebra) -> Result<(Mor, Mor)> {
    let f = alg.field();
    if qd.x.m != alg.a {
        return Err(Error::ObjectMismatch {
            context: "left unit iso",
            left: qd.x.m.to_string(),
            right: alg.a.to_string(),
        });
    }
    let iso = qd.y.nu.after(&qd.s)?;
    let iy = Mor::id(&qd.y.m, f);
    let inv = qd.q.after(&alg.unit.tensor(&iy)?)?;
    Ok((iso, inv))
}

/// The identification `X . (A M) -> X M` when the left factor of the right
/// module is free: the iso is `(mu M)(after)s` with inverse
/// `q (after) (X eta M)`.
pub fn free_identification(
    qd: &QuotientData,
    alg: &Algebra,
    m_tail: &Obj,
) -> Result<(Mor, Mor)> {
    let f = alg.field();
    if qd.y.m != alg.a.tensor(m_tail) {
        return Err(Error::ObjectMismatch {
            context: "free identification",
            left: qd.y.m.to_string(),
            right: alg.a.tensor(m_tail).to_string(),
        });
    }
    let im = Mor::id(m_tail, f);
    let ix = Mor::id(&qd.x.m, f);
    let iso = qd.x.mu.tensor(&im)?.after(&qd.s)?;
    let inv = qd.q.after(&ix.tensor(&alg.unit)?.tensor(&im)?)?;
    Ok((iso, inv))
}

/// The robustness witness `theta: (M X) . Y -> M (X . Y)` with
/// `theta (after) q = M q`, returned with its inverse.
pub fn robustness_witness(
    m_obj: &Obj,
    x: &RightModule,
    y: &LeftModule,
    alg: &Algebra,
) -> Result<(QuotientData, QuotientData, Mor, Mor)> {
    let f = alg.field();
    let im = Mor::id(m_obj, f);
    let mx = RightModule {
        m: m_obj.tensor(&x.m),
        mu: im.tensor(&x.mu)?,
    };
    let big = tensor_over_a(&mx, y, alg)?;
    let small = tensor_over_a(x, y, alg)?;
    let theta = im.tensor(&small.q)?.after(&big.s)?;
    let theta_inv = match theta.inverse()? {
        Some(inv) => inv,
        None => {
            return Err(Error::Precondition(
                "robustness witness is not invertible".to_string(),
            ))
        }
    };
    Ok((big, small, theta, theta_inv))
}

/// A three-fold tensor product over `A` with both bracketings and the
/// comparison isomorphism between them.
#[derive(Clone, Debug)]
pub struct TripleProduct {
    pub yz: QuotientData,
    pub yz_bim: Bimodule,
    pub x_yz: QuotientData,
    pub xy: QuotientData,
    pub xy_bim: Bimodule,
    pub xy_z: QuotientData,
    /// `X . (Y . Z) -> (X . Y) . Z`
    pub assoc: Mor,
    pub assoc_inv: Mor,
}

/// Builds `X . (Y . Z)` and `(X . Y) . Z` and the associator determined by
/// `assoc (after) q (after) (X q) = q (after) (q Z)`.
pub fn triple_product(
    x: &Bimodule,
    y: &Bimodule,
    z: &Bimodule,
    alg: &Algebra,
) -> Result<TripleProduct> {
    let f = alg.field();
    let ix = Mor::id(&x.m, f);
    let iz = Mor::id(&z.m, f);

    let yz = tensor_over_a(&y.right(), &z.left(), alg)?;
    let yz_bim = bimodule_on_quotient(&yz, y, z, alg)?;
    let x_yz = tensor_over_a(&x.right(), &yz_bim.left(), alg)?;

    let xy = tensor_over_a(&x.right(), &y.left(), alg)?;
    let xy_bim = bimodule_on_quotient(&xy, x, y, alg)?;
    let xy_z = tensor_over_a(&xy_bim.right(), &z.left(), alg)?;

    let assoc = xy_z
        .q
        .after(&xy.q.tensor(&iz)?)?
        .after(&ix.tensor(&yz.s)?)?
        .after(&x_yz.s)?;
    let assoc_inv = x_yz
        .q
        .after(&ix.tensor(&yz.q)?)?
        .after(&xy.s.tensor(&iz)?)?
        .after(&xy_z.s)?;
    Ok(TripleProduct {
        yz,
        yz_bim,
        x_yz,
        xy,
        xy_bim,
        xy_z,
        assoc,
        assoc_inv,
    })
}

/// A coring: a bimodule carrier with a comultiplication into the explicit
/// quotient `C . C` and a counit to `A`.
#[derive(Clone, Debug)]
pub struct Coring {
    pub alg: Algebra,
    pub c: Bimodule,
    pub square: QuotientData,
    pub square_bim: Bimodule,
    pub delta: Mor,
    pub eps: Mor,
}

/// The coring `A(x)X` of a cowreath: left action `m X`, right action
/// `(m X)(after)(A psi)`, comultiplication descended from
/// `(m X X)(after)(A delta)` through the free identification, counit
/// `m (after) (A eps)`.
pub fn coring_from_cowreath(cw: &Cowreath) -> Result<Coring> {
    let f = cw.field();
    let alg = cw.alg().clone();
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);
    let ax = alg.a.tensor(cw.x());
    let iax = Mor::id(&ax, f);

    let nu = alg.m.tensor(&ix)?;
    let mu = alg.m.tensor(&ix)?.after(&ia.tensor(&cw.base.psi)?)?;
    let c = Bimodule::new(ax.clone(), nu, mu, &alg)?;

    let square = tensor_over_a(&c.right(), &c.left(), &alg)?;
    let square_bim = bimodule_on_quotient(&square, &c, &c, &alg)?;

    // Ambient comultiplication A X -> A X X, then into the quotient via the
    // inverse of the free identification.
    let delta_amb = alg
        .m
        .tensor(&ix)?
        .tensor(&ix)?
        .after(&ia.tensor(&cw.delta)?)?;
    let embed = square.q.after(&iax.tensor(&alg.unit)?.tensor(&ix)?)?;
    let delta = embed.after(&delta_amb)?;

    let eps = alg.m.after(&ia.tensor(&cw.eps)?)?;
    Ok(Coring {
        alg,
        c,
        square,
        square_bim,
        delta,
        eps,
    })
}

/// Bilinearity of the structure maps, coassociativity and counit laws, all
/// composed through explicit quotient data.
pub fn check_coring(co: &Coring) -> Result<Report> {
    let f = co.alg.field();
    let alg = &co.alg;
    let ia = Mor::id(&alg.a, f);
    let ic = Mor::id(&co.c.m, f);
    let mut report = Report::new(format!("coring on {}", co.c.m));

    // Bilinearity of delta and eps.
    let d_left = co
        .delta
        .after(&co.c.nu)?
        .sub(&co.square_bim.nu.after(&ia.tensor(&co.delta)?)?)?;
    report.push_residual("delta-left-linear", d_left.mat);
    let d_right = co
        .delta
        .after(&co.c.mu)?
        .sub(&co.square_bim.mu.after(&co.delta.tensor(&ia)?)?)?;
    report.push_residual("delta-right-linear", d_right.mat);
    let e_left = co
        .eps
        .after(&co.c.nu)?
        .sub(&alg.m.after(&ia.tensor(&co.eps)?)?)?;
    report.push_residual("eps-left-linear", e_left.mat);
    let e_right = co
        .eps
        .after(&co.c.mu)?
        .sub(&alg.m.after(&co.eps.tensor(&ia)?)?)?;
    report.push_residual("eps-right-linear", e_right.mat);

    // Coassociativity through the associator.
    let tp = triple_product(&co.c, &co.c, &co.c, alg)?;
    let delta_c = tensor_mor_over_a(&co.delta, &ic, &co.square, &tp.xy_z)?;
    let c_delta = tensor_mor_over_a(&ic, &co.delta, &co.square, &tp.x_yz)?;
    let coassoc = delta_c
        .after(&co.delta)?
        .sub(&tp.assoc.after(&c_delta)?.after(&co.delta)?)?;
    report.push_residual("coassoc", coassoc.mat);

    // Counit laws through the unit isomorphisms.
    let a_bim = Bimodule::regular(alg);
    let qd_ca = tensor_over_a(&co.c.right(), &a_bim.left(), alg)?;
    let qd_ac = tensor_over_a(&a_bim.right(), &co.c.left(), alg)?;
    let (rho, _) = unit_iso_right(&qd_ca, alg)?;
    let (lambda, _) = unit_iso_left(&qd_ac, alg)?;
    let c_eps = tensor_mor_over_a(&ic, &co.eps, &co.square, &qd_ca)?;
    let eps_c = tensor_mor_over_a(&co.eps, &ic, &co.square, &qd_ac)?;
    let right = rho.after(&c_eps)?.after(&co.delta)?.sub(&ic)?;
    report.push_residual("counit-right", right.mat);
    let left = lambda.after(&eps_c)?.after(&co.delta)?.sub(&ic)?;
    report.push_residual("counit-left", left.mat);

    Ok(report)
}

/// The adjunction data between `A(x)X` and `Y(x)A` in the bimodule world.
#[derive(Clone, Debug)]
pub struct CoringAdjunction {
    pub coring: Coring,
    pub ya: Bimodule,
    /// `A -> (YA . AX)` (the unit, through the quotient).
    pub unit: Mor,
    /// `(AX . YA) -> A` (the counit, by descent).
    pub counit: Mor,
    pub ax_ya: QuotientData,
    pub ya_ax: QuotientData,
    pub report: Report,
}

/// Builds the unit and counit and verifies both triangle identities inside
/// the bimodule category, composing through explicit quotient maps.
pub fn coring_adjunction(cw: &Cowreath, dual: &DualityData) -> Result<CoringAdjunction> {
    let f = cw.field();
    let alg = cw.alg().clone();
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);
    let iy = Mor::id(&dual.y, f);
    let coring = coring_from_cowreath(cw)?;

    // Y(x)A as a bimodule through the mirrored transfer map.
    let phi = dual_transfer(&cw.base, dual)?.phi;
    let nu_ya = iy.tensor(&alg.m)?.after(&phi.tensor(&ia)?)?;
    let mu_ya = iy.tensor(&alg.m)?;
    let ya = Bimodule::new(dual.y.tensor(&alg.a), nu_ya, mu_ya, &alg)?;

    let ax_ya = tensor_over_a(&coring.c.right(), &ya.left(), &alg)?;
    let ya_ax = tensor_over_a(&ya.right(), &coring.c.left(), &alg)?;

    let mut report = Report::new("coring adjunction");

    // Unit: (Y psi)(after)(b A), embedded into the quotient.
    let b_amb = iy.tensor(&cw.base.psi)?.after(&dual.b.tensor(&ia)?)?;
    let iya = Mor::id(&ya.m, f);
    let embed = ya_ax.q.after(&iya.tensor(&alg.unit)?.tensor(&ix)?)?;
    let unit = embed.after(&b_amb)?;

    // Counit by descent of m (after) (A d A).
    let descent = alg.m.after(&ia.tensor(&dual.d)?.tensor(&ia)?)?;
    let kernel = kernel_basis(&ax_ya.q.mat);
    if !descent.mat.mul(&kernel)?.is_zero() {
        return Err(Error::DescentFailure);
    }
    let counit = descent.after(&ax_ya.s)?;

    // Both structure maps are bimodule morphisms.
    let ya_ax_bim = bimodule_on_quotient(&ya_ax, &ya, &coring.c, &alg)?;
    let ax_ya_bim = bimodule_on_quotient(&ax_ya, &coring.c, &ya, &alg)?;
    let u_left = unit
        .after(&alg.m)?
        .sub(&ya_ax_bim.nu.after(&ia.tensor(&unit)?)?)?;
    report.push_residual("unit-left-linear", u_left.mat);
    let u_right = unit
        .after(&alg.m)?
        .sub(&ya_ax_bim.mu.after(&unit.tensor(&ia)?)?)?;
    report.push_residual("unit-right-linear", u_right.mat);
    let c_left = counit
        .after(&ax_ya_bim.nu)?
        .sub(&alg.m.after(&ia.tensor(&counit)?)?)?;
    report.push_residual("counit-left-linear", c_left.mat);
    let c_right = counit
        .after(&ax_ya_bim.mu)?
        .sub(&alg.m.after(&counit.tensor(&ia)?)?)?;
    report.push_residual("counit-right-linear", c_right.mat);

    // Triangle on A(x)X.
    let a_bim = Bimodule::regular(&alg);
    let tp1 = triple_product(&coring.c, &ya, &coring.c, &alg)?;
    let qd_ax_a = tensor_over_a(&coring.c.right(), &a_bim.left(), &alg)?;
    let qd_a_ax = tensor_over_a(&a_bim.right(), &coring.c.left(), &alg)?;
    let (_, rho_ax_inv) = unit_iso_right(&qd_ax_a, &alg)?;
    let (lambda_ax, _) = unit_iso_left(&qd_a_ax, &alg)?;
    let iax = Mor::id(&coring.c.m, f);
    // The unit lands in YA . AX built inside tp1 as well; the deterministic
    // construction makes both copies literally equal.
    if tp1.yz.q != ya_ax.q {
        return Err(Error::Precondition(
            "quotient construction is not deterministic".to_string(),
        ));
    }
    let ax_b = tensor_mor_over_a(&iax, &unit, &qd_ax_a, &tp1.x_yz)?;
    let d_ax = tensor_mor_over_a(&counit, &iax, &tp1.xy_z, &qd_a_ax)?;
    let t1 = lambda_ax
        .after(&d_ax)?
        .after(&tp1.assoc)?
        .after(&ax_b)?
        .after(&rho_ax_inv)?
        .sub(&iax)?;
    report.push_residual("triangle-AX", t1.mat);

    // Triangle on Y(x)A.
    let tp2 = triple_product(&ya, &coring.c, &ya, &alg)?;
    let qd_a_ya = tensor_over_a(&a_bim.right(), &ya.left(), &alg)?;
    let qd_ya_a = tensor_over_a(&ya.right(), &a_bim.left(), &alg)?;
    let (rho_ya, _) = unit_iso_right(&qd_ya_a, &alg)?;
    let (_, lambda_ya_inv) = unit_iso_left(&qd_a_ya, &alg)?;
    if tp2.xy.q != ya_ax.q || tp2.yz.q != ax_ya.q {
        return Err(Error::Precondition(
            "quotient construction is not deterministic".to_string(),
        ));
    }
    let b_ya = tensor_mor_over_a(&unit, &iya, &qd_a_ya, &tp2.xy_z)?;
    let ya_d = tensor_mor_over_a(&iya, &counit, &tp2.x_yz, &qd_ya_a)?;
    let t2 = rho_ya
        .after(&ya_d)?
        .after(&tp2.assoc_inv)?
        .after(&b_ya)?
        .after(&lambda_ya_inv)?
        .sub(&iya)?;
    report.push_residual("triangle-YA", t2.mat);

    Ok(CoringAdjunction {
        coring,
        ya,
        unit,
        counit,
        ax_ya,
        ya_ax,
        report,
    })
}

/// The ring structure induced on `Y(x)A` by the adjunction, in identified
/// form: multiplication `Y Y A -> Y A` and unit `A -> Y A`.
pub fn dual_ring_on_ya(cw: &Cowreath, dual: &DualityData) -> Result<(Mor, Mor)> {
    let f = cw.field();
    let alg = cw.alg();
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);
    let iy = Mor::id(&dual.y, f);

    let b_amb = iy.tensor(&cw.base.psi)?.after(&dual.b.tensor(&ia)?)?;
    let delta_amb = alg
        .m
        .tensor(&ix)?
        .tensor(&ix)?
        .after(&ia.tensor(&cw.delta)?)?;
    // d^2: X X Y Y -> 1.
    let d2 = dual.d.after(&ix.tensor(&dual.d)?.tensor(&iy)?)?;

    let iyy_a = iy.tensor(&iy)?.tensor(&ia)?;
    let m_ya = iy
        .tensor(&alg.m)?
        .after(&iy.tensor(&ia)?.tensor(&d2)?.tensor(&ia)?)?
        .after(&iy.tensor(&delta_amb)?.tensor(&iyy_a.clone())?.after(
            &b_amb.tensor(&iyy_a)?.after(&alg.unit.tensor(&iyy_a)?)?,
        )?)?;

    let eta_ya = iy
        .tensor(&alg.m)?
        .after(&iy.tensor(&ia)?.tensor(&cw.eps)?)?
        .after(&iy.tensor(&cw.base.psi)?)?
        .after(&dual.b.tensor(&ia)?)?;
    Ok((m_ya, eta_ya))
}

/// The quotient-level right action of `Y(x)A` on the coring carrier:
/// `(AX . D)(after)(delta . YA)` through the associator, landing back on
/// `A(x)X` through the right unit iso.
pub fn quotient_level_action(adj: &CoringAdjunction) -> Result<Mor> {
    let alg = &adj.coring.alg;
    let f = alg.field();
    let iax = Mor::id(&adj.coring.c.m, f);
    let a_bim = Bimodule::regular(alg);
    let tp = triple_product(&adj.coring.c, &adj.coring.c, &adj.ya, alg)?;
    if tp.xy.q != adj.coring.square.q || tp.yz.q != adj.ax_ya.q {
        return Err(Error::Precondition(
            "quotient construction is not deterministic".to_string(),
        ));
    }
    let qd_ax_a = tensor_over_a(&adj.coring.c.right(), &a_bim.left(), alg)?;
    let (rho_ax, _) = unit_iso_right(&qd_ax_a, alg)?;
    let iya = Mor::id(&adj.ya.m, f);
    let delta_ya = tensor_mor_over_a(&adj.coring.delta, &iya, &adj.ax_ya, &tp.xy_z)?;
    let ax_d = tensor_mor_over_a(&iax, &adj.counit, &tp.x_yz, &qd_ax_a)?;
    rho_ax
        .after(&ax_d)?
        .after(&tp.assoc_inv)?
        .after(&delta_ya)
}

/// Coring-level coseparability: an exact linear feasibility problem for a
/// bimodule retraction-style map `gamma: C . C -> A` that is bilinear,
/// balanced and normalized by the counit.
pub fn coring_coseparability(co: &Coring) -> Result<Feasibility<Mor>> {
    let alg = &co.alg;
    let f = alg.field();
    let ia = Mor::id(&alg.a, f);
    let ic = Mor::id(&co.c.m, f);

    let tp = triple_product(&co.c, &co.c, &co.c, alg)?;
    let a_bim = Bimodule::regular(alg);
    let qd_ca = tensor_over_a(&co.c.right(), &a_bim.left(), alg)?;
    let qd_ac = tensor_over_a(&a_bim.right(), &co.c.left(), alg)?;
    let (rho, _) = unit_iso_right(&qd_ca, alg)?;
    let (lambda, _) = unit_iso_left(&qd_ac, alg)?;
    if tp.xy.q != co.square.q || tp.yz.q != co.square.q {
        return Err(Error::Precondition(
            "quotient construction is not deterministic".to_string(),
        ));
    }
    let delta_c = tensor_mor_over_a(&co.delta, &ic, &co.square, &tp.xy_z)?;
    let c_delta = tensor_mor_over_a(&ic, &co.delta, &co.square, &tp.x_yz)?;

    // All conditions are linear in gamma; quotient-level tensor maps are
    // computed through the sections, which is valid on the solution set and
    // re-verified after solving.
    let left_linear = |g: &Mor| -> Result<Mor> {
        g.after(&co.square_bim.nu)?
            .sub(&alg.m.after(&ia.tensor(g)?)?)
    };
    let right_linear = |g: &Mor| -> Result<Mor> {
        g.after(&co.square_bim.mu)?
            .sub(&alg.m.after(&g.tensor(&ia)?)?)
    };
    let normalized = |g: &Mor| g.after(&co.delta);
    let balance = |g: &Mor| -> Result<Mor> {
        // (C . gamma) and (gamma . C) through sections.
        let c_g = qd_ca
            .q
            .after(&ic.tensor(g)?)?
            .after(&tp.x_yz.s)?;
        let g_c = qd_ac
            .q
            .after(&g.tensor(&ic)?)?
            .after(&tp.xy_z.s)?;
        let route_l = rho.after(&c_g)?.after(&tp.assoc_inv)?.after(&delta_c)?;
        let route_r = lambda.after(&g_c)?.after(&tp.assoc)?.after(&c_delta)?;
        route_l.sub(&route_r)
    };

    let outcome = solve_mor_system(
        &co.square.quotient,
        &alg.a,
        f,
        &[
            (&left_linear, None),
            (&right_linear, None),
            (&balance, None),
            (&normalized, Some(&co.eps)),
        ],
    )?;

    if let Feasibility::Feasible(gamma) = &outcome {
        // Re-verify with descent-checked quotient maps.
        let c_g = tensor_mor_over_a(&ic, gamma, &tp.x_yz, &qd_ca)?;
        let g_c = tensor_mor_over_a(gamma, &ic, &tp.xy_z, &qd_ac)?;
        let route_l = rho
            .after(&c_g)?
            .after(&tp.assoc_inv)?
            .after(&delta_c)?;
        let route_r = lambda.after(&g_c)?.after(&tp.assoc)?.after(&c_delta)?;
        let ok = route_l.sub(&route_r)?.is_zero()
            && gamma.after(&co.delta)?.sub(&co.eps)?.is_zero()
            && left_linear(gamma)?.is_zero()
            && right_linear(gamma)?.is_zero();
        if !ok {
            return Err(Error::Precondition(
                "coring coseparability candidate fails recheck".to_string(),
            ));
        }
    }
    Ok(outcome)
}

/// Transports a Frobenius system through the coring construction and checks
/// the coring-level Frobenius conditions; independently decides
/// coseparability at both levels and reports whether the verdicts agree.
pub fn check_frobenius_coring(
    cw: &Cowreath,
    dual: &DualityData,
    fs: Option<&FrobeniusSystem>,
) -> Result<Report> {
    let f = cw.field();
    let alg = cw.alg();
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);
    let co = coring_from_cowreath(cw)?;
    let ic = Mor::id(&co.c.m, f);
    let mut report = Report::new("coring-level Frobenius and coseparability");

    // Either use the given system or search for one.
    let owned;
    let system = match fs {
        Some(s) => Some(s),
        None => {
            owned = crate::frobsep::search_frobenius(cw, dual, 32, 0)?;
            owned.found()
        }
    };

    match system {
        Some(fs) => {
            let t_level = check_frobenius_system(fs)?.passed();

            // Transport: t_C = (m X)(after)(A t), and the pairing through
            // the free identification (mu X)(after)s then m (after)(A b).
            let t_c = alg.m.tensor(&ix)?.after(&ia.tensor(&fs.t)?)?;
            let upsilon = co
                .c
                .mu
                .tensor(&ix)?
                .after(&co.square.s)?;
            let b_c = alg
                .m
                .after(&ia.tensor(&fs.b)?)?
                .after(&upsilon)?;

            // Coring-level counit-style conditions.
            let a_bim = Bimodule::regular(alg);
            let qd_ac = tensor_over_a(&a_bim.right(), &co.c.left(), alg)?;
            let qd_ca = tensor_over_a(&co.c.right(), &a_bim.left(), alg)?;
            let (_, lambda_inv) = unit_iso_left(&qd_ac, alg)?;
            let (_, rho_inv) = unit_iso_right(&qd_ca, alg)?;
            let tc_c = tensor_mor_over_a(&t_c, &ic, &qd_ac, &co.square)?;
            let c_tc = tensor_mor_over_a(&ic, &t_c, &qd_ca, &co.square)?;
            let left = b_c.after(&tc_c)?.after(&lambda_inv)?.sub(&co.eps)?;
            report.push_residual("(coFrobCoalg)(b-left)@coring", left.mat);
            let right = b_c.after(&c_tc)?.after(&rho_inv)?.sub(&co.eps)?;
            report.push_residual("(coFrobCoalg)(b-right)@coring", right.mat);

            // Coring-level balance.
            let tp = triple_product(&co.c, &co.c, &co.c, alg)?;
            if tp.xy.q != co.square.q {
                return Err(Error::Precondition(
                    "quotient construction is not deterministic".to_string(),
                ));
            }
            let delta_c = tensor_mor_over_a(&co.delta, &ic, &co.square, &tp.xy_z)?;
            let c_delta = tensor_mor_over_a(&ic, &co.delta, &co.square, &tp.x_yz)?;
            let (rho, _) = unit_iso_right(&qd_ca, alg)?;
            let (lambda, _) = unit_iso_left(&qd_ac, alg)?;
            let c_bc = tensor_mor_over_a(&ic, &b_c, &tp.x_yz, &qd_ca)?;
            let bc_c = tensor_mor_over_a(&b_c, &ic, &tp.xy_z, &qd_ac)?;
            let route_l = rho.after(&c_bc)?.after(&tp.assoc_inv)?.after(&delta_c)?;
            let route_r = lambda.after(&bc_c)?.after(&tp.assoc)?.after(&c_delta)?;
            report.push_residual("(coFrobCoalg)(a)@coring", route_l.sub(&route_r)?.mat);

            let coring_level = report.passed();
            report.push(CheckEntry::from_bool(
                "frobenius-agreement",
                t_level == coring_level,
                f,
            ));
        }
        None => {
            // No verified certificate at the transfer level; nothing to
            // transport, the levels agree vacuously.
            report.push(CheckEntry::from_bool("frobenius-agreement", true, f));
        }
    }

    // Coseparability at both levels must agree.
    let coring_cosep = coring_coseparability(&co)?.is_feasible();
    let hom_cosep = solve_separability(cw)?.is_feasible();
    report.push(CheckEntry::from_bool(
        "cosep-agreement",
        coring_cosep == hom_cosep,
        f,
    ));
    report.push(CheckEntry::from_bool(
        if coring_cosep {
            "coseparable@coring"
        } else {
            "not-coseparable@coring"
        },
        true,
        f,
    ));
    Ok(report)
}

/// Relation defect helper: `v` lies in the declared relation span exactly
/// when `q v = 0`; exposed for tests of the coequalizer contract.
pub fn in_relation_span(qd: &QuotientData, v: &Mat) -> Result<bool> {
    Ok(qd.q.mat.mul(v)?.is_zero())
}

#[cfg(test)]
#[path = "coring_tests.rs"]
mod tests;
