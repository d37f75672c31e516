//! Duality for transfer morphisms: the mirrored (left) transfer map on a
//! right dual, right wreaths, the smash product algebra on `Y(x)A`, and the
//! isomorphism between entwined modules and smash-product modules.

use crate::entwine::{Cowreath, EntwinedModule, TAHom, TransferMorphism};
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::moncat::{DualityData, Mor, Obj};
use crate::report::Report;
use crate::structures::{expect_shape, Algebra, RightModule};

/// A left transfer morphism `(Y, phi)` with `phi: A(x)Y -> Y(x)A`.
#[derive(Clone, Debug, PartialEq)]
pub struct LeftTransfer {
    pub alg: Algebra,
    pub y: Obj,
    pub phi: Mor,
}

impl LeftTransfer {
    pub fn new(alg: Algebra, y: Obj, phi: Mor) -> Result<LeftTransfer> {
        expect_shape(&phi, &alg.a.tensor(&y), &y.tensor(&alg.a), "left transfer morphism")?;
        Ok(LeftTransfer { alg, y, phi })
    }
}

/// The mirrored transfer laws for `phi`.
pub fn check_left_transfer(t: &LeftTransfer) -> Result<Report> {
    let f = t.phi.field();
    let alg = &t.alg;
    let ia = Mor::id(&alg.a, f);
    let iy = Mor::id(&t.y, f);
    let mut report = Report::new(format!("left transfer morphism on {}", t.y));

    let lhs = t.phi.after(&alg.m.tensor(&iy)?)?;
    let rhs = iy
        .tensor(&alg.m)?
        .after(&t.phi.tensor(&ia)?)?
        .after(&ia.tensor(&t.phi)?)?;
    report.push_residual("(ta)(a)-left", lhs.sub(&rhs)?.mat);

    let lhs = t.phi.after(&alg.unit.tensor(&iy)?)?;
    let rhs = iy.tensor(&alg.unit)?;
    report.push_residual("(ta)(b)-left", lhs.sub(&rhs)?.mat);
    Ok(report)
}

/// Transports a right transfer morphism through duality data on `X`:
/// `phi = (Y A d)(after)(Y psi Y)(after)(b A Y): A(x)Y -> Y(x)A`.
pub fn dual_transfer(t: &TransferMorphism, dual: &DualityData) -> Result<LeftTransfer> {
    if dual.x != t.x {
        return Err(Error::ObjectMismatch {
            context: "dual transfer",
            left: dual.x.to_string(),
            right: t.x.to_string(),
        });
    }
    let f = t.field();
    let ia = Mor::id(&t.alg.a, f);
    let iy = Mor::id(&dual.y, f);
    let phi = iy
        .tensor(&ia)?
        .tensor(&dual.d)?
        .after(&iy.tensor(&t.psi)?.tensor(&iy)?)?
        .after(&dual.b.tensor(&ia)?.tensor(&iy)?)?;
    LeftTransfer::new(t.alg.clone(), dual.y.clone(), phi)
}

/// Mirror hom compatibility residual for `g: Y' -> Y(x)A` between left
/// transfer morphisms.
pub fn left_ta_hom_residual(src: &LeftTransfer, tgt: &LeftTransfer, g: &Mor) -> Result<Mor> {
    let f = g.field();
    let alg = &src.alg;
    let ia = Mor::id(&alg.a, f);
    let iy = Mor::id(&tgt.y, f);
    let lhs = iy.tensor(&alg.m)?.after(&g.tensor(&ia)?)?.after(&src.phi)?;
    let rhs = iy
        .tensor(&alg.m)?
        .after(&tgt.phi.tensor(&ia)?)?
        .after(&ia.tensor(g)?)?;
    lhs.sub(&rhs)
}

/// Transports a hom `f: X -> X'` to the mirrored hom `Y' -> Y` through
/// duality data on both endpoints:
/// `g = (Y A d')(after)(Y f Y')(after)(b Y')`.
pub fn dual_ta_hom(f: &TAHom, dual_src: &DualityData, dual_tgt: &DualityData) -> Result<Mor> {
    if dual_src.x != f.src.x || dual_tgt.x != f.tgt.x {
        return Err(Error::ObjectMismatch {
            context: "dual hom endpoints",
            left: format!("{}, {}", dual_src.x, dual_tgt.x),
            right: format!("{}, {}", f.src.x, f.tgt.x),
        });
    }
    let field = f.f.field();
    let ia = Mor::id(&f.src.alg.a, field);
    let iy = Mor::id(&dual_src.y, field);
    let iy2 = Mor::id(&dual_tgt.y, field);
    iy.tensor(&ia)?
        .tensor(&dual_tgt.d)?
        .after(&iy.tensor(&f.f)?.tensor(&iy2)?)?
        .after(&dual_src.b.tensor(&iy2)?)
}

/// A right wreath: a left transfer morphism carrying an algebra structure
/// `m_y: Y(x)Y -> Y(x)A` and `eta_y: 1 -> Y(x)A`.
#[derive(Clone, Debug, PartialEq)]
pub struct RightWreath {
    pub base: LeftTransfer,
    pub m_y: Mor,
    pub eta_y: Mor,
}

impl RightWreath {
    pub fn new(base: LeftTransfer, m_y: Mor, eta_y: Mor) -> Result<RightWreath> {
        let ya = base.y.tensor(&base.alg.a);
        expect_shape(&m_y, &base.y.tensor(&base.y), &ya, "wreath multiplication")?;
        expect_shape(&eta_y, &Obj::unit(), &ya, "wreath unit")?;
        Ok(RightWreath { base, m_y, eta_y })
    }

    pub fn alg(&self) -> &Algebra {
        &self.base.alg
    }

    pub fn y(&self) -> &Obj {
        &self.base.y
    }

    pub fn field(&self) -> Field {
        self.m_y.field()
    }
}

/// The mirrored transfer laws plus the five wreath conditions.
pub fn check_right_wreath(wr: &RightWreath) -> Result<Report> {
    let f = wr.field();
    let alg = wr.alg();
    let ia = Mor::id(&alg.a, f);
    let iy = Mor::id(wr.y(), f);
    let phi = &wr.base.phi;
    let m = &alg.m;
    let mut report = check_left_transfer(&wr.base)?;
    report.name = format!("right wreath on {}", wr.y());

    // (a): the multiplication is a hom in the mirrored category.
    let lhs = iy
        .tensor(m)?
        .after(&phi.tensor(&ia)?)?
        .after(&ia.tensor(&wr.m_y)?)?;
    let rhs = iy
        .tensor(m)?
        .after(&wr.m_y.tensor(&ia)?)?
        .after(&iy.tensor(phi)?)?
        .after(&phi.tensor(&iy)?)?;
    report.push_residual("(rightwreath)(a)", lhs.sub(&rhs)?.mat);

    // (b): associativity.
    let lhs = iy
        .tensor(m)?
        .after(&wr.m_y.tensor(&ia)?)?
        .after(&iy.tensor(phi)?)?
        .after(&wr.m_y.tensor(&iy)?)?;
    let rhs = iy
        .tensor(m)?
        .after(&wr.m_y.tensor(&ia)?)?
        .after(&iy.tensor(&wr.m_y)?)?;
    report.push_residual("(rightwreath)(b)", lhs.sub(&rhs)?.mat);

    // (c): the unit is a hom in the mirrored category.
    let lhs = iy.tensor(m)?.after(&wr.eta_y.tensor(&ia)?)?;
    let rhs = iy
        .tensor(m)?
        .after(&phi.tensor(&ia)?)?
        .after(&ia.tensor(&wr.eta_y)?)?;
    report.push_residual("(rightwreath)(c)", lhs.sub(&rhs)?.mat);

    // (d): left unit law.
    let lhs = iy
        .tensor(m)?
        .after(&wr.m_y.tensor(&ia)?)?
        .after(&iy.tensor(phi)?)?
        .after(&wr.eta_y.tensor(&iy)?)?;
    let y_eta = iy.tensor(&alg.unit)?;
    report.push_residual("(rightwreath)(d)", lhs.sub(&y_eta)?.mat);

    // (e): right unit law.
    let lhs = iy
        .tensor(m)?
        .after(&wr.m_y.tensor(&ia)?)?
        .after(&iy.tensor(&wr.eta_y)?)?;
    report.push_residual("(rightwreath)(e)", lhs.sub(&y_eta)?.mat);

    Ok(report)
}

/// Dualizes a cowreath into a right wreath:
/// `m_y = (Y A d^2)(after)(Y delta Y Y)(after)(b Y Y)` and
/// `eta_y = (Y eps)(after)b`.
pub fn wreath_from_cowreath(cw: &Cowreath, dual: &DualityData) -> Result<RightWreath> {
    if dual.x != *cw.x() {
        return Err(Error::ObjectMismatch {
            context: "wreath from cowreath",
            left: dual.x.to_string(),
            right: cw.x().to_string(),
        });
    }
    let f = cw.field();
    let ia = Mor::id(&cw.alg().a, f);
    let ix = Mor::id(cw.x(), f);
    let iy = Mor::id(&dual.y, f);
    let base = dual_transfer(&cw.base, dual)?;

    // d^2: X X Y Y -> 1 for the composite adjunction XX -| YY.
    let d2 = dual.d.after(&ix.tensor(&dual.d)?.tensor(&iy)?)?;
    let m_y = iy
        .tensor(&ia)?
        .tensor(&d2)?
        .after(&iy.tensor(&cw.delta)?.tensor(&iy)?.tensor(&iy)?)?
        .after(&dual.b.tensor(&iy)?.tensor(&iy)?)?;
    let eta_y = iy.tensor(&cw.eps)?.after(&dual.b)?;
    RightWreath::new(base, m_y, eta_y)
}

/// Where a smash algebra came from, when it was built by dualizing a
/// cowreath; needed to transport modules back and forth.
#[derive(Clone, Debug, PartialEq)]
pub struct SmashProvenance {
    pub cw: Cowreath,
    pub dual: DualityData,
}

/// The wreath product algebra on `Y(x)A` with
/// `m = (Y m)(after)(m_y m)(after)(Y phi A)` and unit `eta_y`.
#[derive(Clone, Debug, PartialEq)]
pub struct SmashAlgebra {
    pub wr: RightWreath,
    pub algebra: Algebra,
    pub provenance: Option<SmashProvenance>,
}

/// Builds the smash product algebra of a right wreath.
pub fn smash_product(wr: &RightWreath) -> Result<SmashAlgebra> {
    let f = wr.field();
    let alg = wr.alg();
    let ia = Mor::id(&alg.a, f);
    let iy = Mor::id(wr.y(), f);
    let ya = wr.y().tensor(&alg.a);
    let m_sharp = iy
        .tensor(&alg.m)?
        .after(&wr.m_y.tensor(&alg.m)?)?
        .after(&iy.tensor(&wr.base.phi)?.tensor(&ia)?)?;
    let algebra = Algebra::new(ya, m_sharp, wr.eta_y.clone())?;
    Ok(SmashAlgebra {
        wr: wr.clone(),
        algebra,
        provenance: None,
    })
}

/// Smash product straight from a cowreath and duality data, with provenance
/// recorded so entwined modules can be transported.
pub fn smash_from_cowreath(cw: &Cowreath, dual: &DualityData) -> Result<SmashAlgebra> {
    let wr = wreath_from_cowreath(cw, dual)?;
    let mut sa = smash_product(&wr)?;
    sa.provenance = Some(SmashProvenance {
        cw: cw.clone(),
        dual: dual.clone(),
    });
    Ok(sa)
}

fn provenance_for<'a>(sa: &'a SmashAlgebra, cw: &Cowreath) -> Result<&'a SmashProvenance> {
    let prov = sa.provenance.as_ref().ok_or(Error::Precondition(
        "smash algebra carries no cowreath provenance".to_string(),
    ))?;
    if &prov.cw != cw {
        return Err(Error::AlgebraMismatch {
            context: "smash provenance",
        });
    }
    Ok(prov)
}

/// Sends an entwined module to a module over the smash product:
/// `action = mu (after) (M d A) (after) (rho Y A)`.
pub fn to_smash_module(em: &EntwinedModule, sa: &SmashAlgebra) -> Result<RightModule> {
    let prov = provenance_for(sa, &em.cw)?;
    let f = em.cw.field();
    let ia = Mor::id(&em.cw.alg().a, f);
    let iy = Mor::id(&prov.dual.y, f);
    let im = Mor::id(&em.m, f);
    let action = em
        .mu
        .after(&im.tensor(&prov.dual.d)?.tensor(&ia)?)?
        .after(&em.rho.tensor(&iy)?.tensor(&ia)?)?;
    RightModule::new(em.m.clone(), action, &sa.algebra)
}

/// Recovers an entwined module from a module over the smash product:
/// `mu = action (after) (N Y m) (after) (N Y eps A) (after) (N b A)` and
/// `rho = (action X) (after) (N Y eta X) (after) (N b)`.
pub fn from_smash_module(n: &RightModule, sa: &SmashAlgebra) -> Result<EntwinedModule> {
    let prov = sa.provenance.as_ref().ok_or(Error::Precondition(
        "smash algebra carries no cowreath provenance".to_string(),
    ))?;
    let cw = &prov.cw;
    let f = cw.field();
    let alg = cw.alg();
    expect_shape(
        &n.mu,
        &n.m.tensor(&sa.algebra.a),
        &n.m,
        "module over the smash product",
    )?;
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);
    let iy = Mor::id(&prov.dual.y, f);
    let in_ = Mor::id(&n.m, f);

    let mu = n
        .mu
        .after(&in_.tensor(&iy)?.tensor(&alg.m)?)?
        .after(&in_.tensor(&iy)?.tensor(&cw.eps)?.tensor(&ia)?)?
        .after(&in_.tensor(&prov.dual.b)?.tensor(&ia)?)?;
    let rho = n
        .mu
        .tensor(&ix)?
        .after(&in_.tensor(&iy)?.tensor(&alg.unit)?.tensor(&ix)?)?
        .after(&in_.tensor(&prov.dual.b)?)?;
    EntwinedModule::new(cw.clone(), n.m.clone(), mu, rho)
}

/// Inputs borrowed from the coring layer for the smash consistency checks:
/// the ring structure induced on `Y(x)A` by the coring adjunction and the
/// quotient-level action of the smash product on `A(x)X`.
pub struct SmashConsistencyInputs<'a> {
    /// `Y Y A -> Y A`, the ring multiplication in identified form.
    pub m_ya: &'a Mor,
    /// `A -> Y A`, the ring unit.
    pub eta_ya: &'a Mor,
    /// `(A X . Y A) -> A X`, the quotient-level action.
    pub mu_tilde: &'a Mor,
    /// `A X Y A -> (A X . Y A)`, the quotient projection.
    pub q: &'a Mor,
}

/// The three consistency identities tying the smash product to the ring
/// structure coming out of the coring adjunction.
pub fn smash_consistency(sa: &SmashAlgebra, inputs: &SmashConsistencyInputs) -> Result<Report> {
    let prov = sa.provenance.as_ref().ok_or(Error::Precondition(
        "smash algebra carries no cowreath provenance".to_string(),
    ))?;
    let cw = &prov.cw;
    let f = cw.field();
    let alg = cw.alg();
    let ia = Mor::id(&alg.a, f);
    let iy = Mor::id(&prov.dual.y, f);
    let mut report = Report::new("smash product vs coring ring structure");

    // The left action of A on Y(x)A, `(Y m)(after)(phi A)`.
    let nu_ya = iy.tensor(&alg.m)?.after(&sa.wr.base.phi.tensor(&ia)?)?;

    let lhs = inputs.m_ya.after(&iy.tensor(&nu_ya)?)?;
    report.push_residual("m_sharp=m_YA.Ynu", lhs.sub(&sa.algebra.m)?.mat);

    let lhs = inputs.eta_ya.after(&alg.unit)?;
    report.push_residual("eta_sharp=eta_YA.eta", lhs.sub(&sa.algebra.unit)?.mat);

    // The entwined module A(x)X is the cofree one on the regular module.
    let ax = crate::entwine::cofree_entwined(cw, &RightModule::regular(alg))?;
    let mu_bar = to_smash_module(&ax, sa)?.mu;
    let lhs = inputs.mu_tilde.after(inputs.q)?;
    report.push_residual("mu_bar=mu_tilde.q", lhs.sub(&mu_bar)?.mat);

    Ok(report)
}
