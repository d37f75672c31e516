//! Plain algebra / coalgebra / module structures in the concrete category,
//! their axiom checkers, and the constructions attached to an adjunction on
//! a coalgebra (dual algebra, module structure, Frobenius systems).

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::moncat::{DualityData, Mor, Obj};
use crate::report::Report;

/// An algebra `(a, m, unit)` with `m: A(x)A -> A` and `unit: 1 -> A`.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra {
    pub a: Obj,
    pub m: Mor,
    pub unit: Mor,
}

impl Algebra {
    pub fn new(a: Obj, m: Mor, unit: Mor) -> Result<Algebra> {
        expect_shape(&m, &a.tensor(&a), &a, "algebra multiplication")?;
        expect_shape(&unit, &Obj::unit(), &a, "algebra unit")?;
        Ok(Algebra { a, m, unit })
    }

    pub fn field(&self) -> Field {
        self.m.field()
    }

    /// The one-dimensional base-field algebra on the unit object.
    pub fn base(field: Field) -> Algebra {
        let one = Obj::unit();
        Algebra {
            a: one.clone(),
            m: Mor::id(&one, field),
            unit: Mor::id(&one, field),
        }
    }
}

/// A coalgebra `(c, delta, counit)` with `delta: C -> C(x)C`, `counit: C -> 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coalgebra {
    pub c: Obj,
    pub delta: Mor,
    pub counit: Mor,
}

impl Coalgebra {
    pub fn new(c: Obj, delta: Mor, counit: Mor) -> Result<Coalgebra> {
        expect_shape(&delta, &c, &c.tensor(&c), "comultiplication")?;
        expect_shape(&counit, &c, &Obj::unit(), "counit")?;
        Ok(Coalgebra { c, delta, counit })
    }

    pub fn field(&self) -> Field {
        self.delta.field()
    }
}

/// A right module `(m, mu)` over an algebra, `mu: M(x)A -> M`.
#[derive(Clone, Debug, PartialEq)]
pub struct RightModule {
    pub m: Obj,
    pub mu: Mor,
}

impl RightModule {
    pub fn new(m: Obj, mu: Mor, alg: &Algebra) -> Result<RightModule> {
        expect_shape(&mu, &m.tensor(&alg.a), &m, "right action")?;
        Ok(RightModule { m, mu })
    }

    /// The regular module: the algebra acting on itself.
    pub fn regular(alg: &Algebra) -> RightModule {
        RightModule {
            m: alg.a.clone(),
            mu: alg.m.clone(),
        }
    }
}

/// A left module `(m, nu)` over an algebra, `nu: A(x)M -> M`.
#[derive(Clone, Debug, PartialEq)]
pub struct LeftModule {
    pub m: Obj,
    pub nu: Mor,
}

impl LeftModule {
    pub fn new(m: Obj, nu: Mor, alg: &Algebra) -> Result<LeftModule> {
        expect_shape(&nu, &alg.a.tensor(&m), &m, "left action")?;
        Ok(LeftModule { m, nu })
    }

    pub fn regular(alg: &Algebra) -> LeftModule {
        LeftModule {
            m: alg.a.clone(),
            nu: alg.m.clone(),
        }
    }
}

pub(crate) fn expect_shape(f: &Mor, dom: &Obj, cod: &Obj, context: &'static str) -> Result<()> {
    if &f.dom != dom || &f.cod != cod {
        return Err(Error::ObjectMismatch {
            context,
            left: format!("{} -> {}", f.dom, f.cod),
            right: format!("{} -> {}", dom, cod),
        });
    }
    Ok(())
}

/// Associativity and the two unit laws, each as an exact residual.
pub fn check_algebra(alg: &Algebra) -> Result<Report> {
    let f = alg.field();
    let ia = Mor::id(&alg.a, f);
    let mut report = Report::new(format!("algebra on {}", alg.a));
    let assoc = alg
        .m
        .after(&alg.m.tensor(&ia)?)?
        .sub(&alg.m.after(&ia.tensor(&alg.m)?)?)?;
    report.push_residual("assoc", assoc.mat);
    let unit_l = alg.m.after(&alg.unit.tensor(&ia)?)?.sub(&ia)?;
    report.push_residual("unit-left", unit_l.mat);
    let unit_r = alg.m.after(&ia.tensor(&alg.unit)?)?.sub(&ia)?;
    report.push_residual("unit-right", unit_r.mat);
    Ok(report)
}

/// Coassociativity and the two counit laws.
pub fn check_coalgebra(co: &Coalgebra) -> Result<Report> {
    let f = co.field();
    let ic = Mor::id(&co.c, f);
    let mut report = Report::new(format!("coalgebra on {}", co.c));
    let coassoc = co
        .delta
        .tensor(&ic)?
        .after(&co.delta)?
        .sub(&ic.tensor(&co.delta)?.after(&co.delta)?)?;
    report.push_residual("coassoc", coassoc.mat);
    let counit_l = co.counit.tensor(&ic)?.after(&co.delta)?.sub(&ic)?;
    report.push_residual("counit-left", counit_l.mat);
    let counit_r = ic.tensor(&co.counit)?.after(&co.delta)?.sub(&ic)?;
    report.push_residual("counit-right", counit_r.mat);
    Ok(report)
}

/// Unit and associativity laws for a right module over `alg`.
pub fn check_right_module(md: &RightModule, alg: &Algebra) -> Result<Report> {
    let f = alg.field();
    let im = Mor::id(&md.m, f);
    let ia = Mor::id(&alg.a, f);
    let mut report = Report::new(format!("right module on {}", md.m));
    let unit = md.mu.after(&im.tensor(&alg.unit)?)?.sub(&im)?;
    report.push_residual("module-unit", unit.mat);
    let assoc = md
        .mu
        .after(&md.mu.tensor(&ia)?)?
        .sub(&md.mu.after(&im.tensor(&alg.m)?)?)?;
    report.push_residual("module-assoc", assoc.mat);
    Ok(report)
}

/// Unit and associativity laws for a left module over `alg`.
pub fn check_left_module(md: &LeftModule, alg: &Algebra) -> Result<Report> {
    let f = alg.field();
    let im = Mor::id(&md.m, f);
    let ia = Mor::id(&alg.a, f);
    let mut report = Report::new(format!("left module on {}", md.m));
    let unit = md.nu.after(&alg.unit.tensor(&im)?)?.sub(&im)?;
    report.push_residual("module-unit", unit.mat);
    let assoc = md
        .nu
        .after(&ia.tensor(&md.nu)?)?
        .sub(&md.nu.after(&alg.m.tensor(&im)?)?)?;
    report.push_residual("module-assoc", assoc.mat);
    Ok(report)
}

/// Output of [`dual_algebra_of_coalgebra`]: the algebra induced on the right
/// dual of a coalgebra, plus the induced right action of it on the coalgebra.
#[derive(Clone, Debug)]
pub struct DualAlgebra {
    pub algebra: Algebra,
    pub module: RightModule,
}

/// Given a coalgebra `C` and duality data `C -| A`, the dual object becomes
/// an algebra via `m = (A d^2) (after) (A Delta A A) (after) (b A A)` and
/// `unit = (A counit) (after) b`, and `C` becomes a right module over it via
/// `mu = (C d) (after) (Delta A)`.
pub fn dual_algebra_of_coalgebra(co: &Coalgebra, dual: &DualityData) -> Result<DualAlgebra> {
    if dual.x != co.c {
        return Err(Error::ObjectMismatch {
            context: "dual algebra",
            left: dual.x.to_string(),
            right: co.c.to_string(),
        });
    }
    let f = co.field();
    let a = dual.y.clone();
    let ia = Mor::id(&a, f);
    let ic = Mor::id(&co.c, f);

    // d^2 for the composite adjunction C C -| A A.
    let d2 = dual.d.after(&ic.tensor(&dual.d)?.tensor(&ia)?)?;
    let m = ia
        .tensor(&d2)?
        .after(&ia.tensor(&co.delta)?.tensor(&ia)?.tensor(&ia)?)?
        .after(&dual.b.tensor(&ia)?.tensor(&ia)?)?;
    let unit = ia.tensor(&co.counit)?.after(&dual.b)?;
    let algebra = Algebra::new(a, m, unit)?;

    let mu = ic.tensor(&dual.d)?.after(&co.delta.tensor(&ia)?)?;
    let module = RightModule::new(co.c.clone(), mu, &algebra)?;
    Ok(DualAlgebra { algebra, module })
}

/// Checks a Frobenius system `(t, B)` on a plain coalgebra: the balance
/// condition, the two counit-style conditions against `t`, and (when both
/// hold) that the derived multiplication `(C B)(after)(Delta C)` with unit
/// `t` is an associative unital algebra.
pub fn check_frobenius_coalgebra(co: &Coalgebra, t: &Mor, b: &Mor) -> Result<Report> {
    let f = co.field();
    let ic = Mor::id(&co.c, f);
    expect_shape(t, &Obj::unit(), &co.c, "Frobenius element")?;
    expect_shape(b, &co.c.tensor(&co.c), &Obj::unit(), "Casimir pairing")?;
    let mut report = Report::new(format!("Frobenius system on {}", co.c));

    // (a): (C B)(after)(Delta C) = (B C)(after)(C Delta)
    let left = ic.tensor(b)?.after(&co.delta.tensor(&ic)?)?;
    let right = b.tensor(&ic)?.after(&ic.tensor(&co.delta)?)?;
    report.push_residual("(coFrobCoalg)(a)", left.sub(&right)?.mat);

    // (b): B(after)(t C) = counit = B(after)(C t)
    let bl = b.after(&t.tensor(&ic)?)?;
    let br = b.after(&ic.tensor(t)?)?;
    report.push_residual("(coFrobCoalg)(b-left)", bl.sub(&co.counit)?.mat);
    report.push_residual("(coFrobCoalg)(b-right)", br.sub(&co.counit)?.mat);

    if report.passed() {
        let derived = Algebra::new(co.c.clone(), left, t.clone())?;
        let mut alg_report = check_algebra(&derived)?;
        for entry in &mut alg_report.entries {
            entry.id = format!("derived-algebra-{}", entry.id);
        }
        report.merge(alg_report);
    }
    Ok(report)
}
