//! Frobenius systems for a cowreath, the natural transformations they
//! induce, the invertibility criteria on `Y(x)A <-> A(x)X`, exact
//! separability decision procedures, and Maschke-style section lifting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::entwine::{
    cofree_entwined, ta_hom_residual, ta_hom_space, Cowreath, EntwinedModule, TransferMorphism,
};
use crate::error::{Error, Result};
use crate::exactlin::{mat_inverse, solve_linear, Mat, Scalar};
use crate::moncat::{mor_from_vec, mor_to_vec, operator_matrix, DualityData, Mor, Obj};
use crate::report::{CheckEntry, Report};
use crate::structures::{expect_shape, RightModule};

/// A Frobenius system on a cowreath: `t: 1 -> A(x)X` and `b: X(x)X -> A`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusSystem {
    pub cw: Cowreath,
    pub t: Mor,
    pub b: Mor,
}

impl FrobeniusSystem {
    pub fn new(cw: Cowreath, t: Mor, b: Mor) -> Result<FrobeniusSystem> {
        let a = &cw.alg().a;
        let x = cw.x();
        expect_shape(&t, &Obj::unit(), &a.tensor(x), "Frobenius element")?;
        expect_shape(&b, &x.tensor(x), a, "Casimir morphism")?;
        Ok(FrobeniusSystem { cw, t, b })
    }
}

/// A Casimir morphism `b: X(x)X -> A` for a cowreath; `normalized` records
/// whether `m (after) (A b) (after) delta = eps` holds.
#[derive(Clone, Debug, PartialEq)]
pub struct CasimirMorphism {
    pub cw: Cowreath,
    pub b: Mor,
    pub normalized: bool,
}

pub(crate) fn frob_t_residual(cw: &Cowreath, t: &Mor) -> Result<Mor> {
    // Compatibility of t with the transfer structure: t is a hom 1 -> X.
    let unit_obj = TransferMorphism::unit_object(cw.alg());
    ta_hom_residual(&unit_obj, &cw.base, t)
}

pub(crate) fn frob_b_residual(cw: &Cowreath, b: &Mor) -> Result<Mor> {
    // Compatibility of b with the transfer structure: b is a hom XX -> 1.
    let xx = crate::entwine::transfer_tensor(&cw.base, &cw.base)?;
    let unit_obj = TransferMorphism::unit_object(cw.alg());
    ta_hom_residual(&xx, &unit_obj, b)
}

pub(crate) fn casimir_balance_residual(cw: &Cowreath, b: &Mor) -> Result<Mor> {
    let f = cw.field();
    let alg = cw.alg();
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);
    let psi = &cw.base.psi;
    let lhs = alg
        .m
        .tensor(&ix)?
        .after(&ia.tensor(psi)?)?
        .after(&ia.tensor(&ix)?.tensor(b)?)?
        .after(&cw.delta.tensor(&ix)?)?;
    let rhs = alg
        .m
        .tensor(&ix)?
        .after(&ia.tensor(b)?.tensor(&ix)?)?
        .after(&psi.tensor(&ix)?.tensor(&ix)?)?
        .after(&ix.tensor(&cw.delta)?)?;
    lhs.sub(&rhs)
}

pub(crate) fn casimir_norm_residual(cw: &Cowreath, b: &Mor) -> Result<Mor> {
    let f = cw.field();
    let alg = cw.alg();
    let ia = Mor::id(&alg.a, f);
    let lhs = alg.m.after(&ia.tensor(b)?)?.after(&cw.delta)?;
    lhs.sub(&cw.eps)
}

fn pairing_left(cw: &Cowreath, t: &Mor, b: &Mor) -> Result<Mor> {
    // m (after) (A b) (after) (t X): X -> A.
    let f = cw.field();
    let alg = cw.alg();
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);
    alg.m.after(&ia.tensor(b)?)?.after(&t.tensor(&ix)?)
}

fn pairing_right(cw: &Cowreath, t: &Mor, b: &Mor) -> Result<Mor> {
    // m (after) (A b) (after) (psi X) (after) (X t): X -> A.
    let f = cw.field();
    let alg = cw.alg();
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);
    alg.m
        .after(&ia.tensor(b)?)?
        .after(&cw.base.psi.tensor(&ix)?)?
        .after(&ix.tensor(t)?)
}

/// The four Frobenius-system conditions, one residual each; (d) stacks both
/// pairing normalizations.
pub fn check_frobenius_system(fs: &FrobeniusSystem) -> Result<Report> {
    let cw = &fs.cw;
    let mut report = Report::new(format!("Frobenius system on {}", cw.x()));
    report.push_residual("(coFrobCoTsh)(a)", frob_t_residual(cw, &fs.t)?.mat);
    report.push_residual("(coFrobCoTsh)(b)", frob_b_residual(cw, &fs.b)?.mat);
    report.push_residual("(coFrobCoTsh)(c)", casimir_balance_residual(cw, &fs.b)?.mat);
    let d_left = pairing_left(cw, &fs.t, &fs.b)?.sub(&cw.eps)?;
    let d_right = pairing_right(cw, &fs.t, &fs.b)?.sub(&cw.eps)?;
    report.push_residual("(coFrobCoTsh)(d)", d_left.mat.vstack(&d_right.mat)?);
    Ok(report)
}

/// Conditions for a Casimir morphism alone: hom compatibility, balance, and
/// (when claimed) the separability normalization.
pub fn check_casimir(cm: &CasimirMorphism) -> Result<Report> {
    let cw = &cm.cw;
    let mut report = Report::new(format!("Casimir morphism on {}", cw.x()));
    report.push_residual("(coFrobCoTsh)(b)", frob_b_residual(cw, &cm.b)?.mat);
    report.push_residual("(coFrobCoTsh)(c)", casimir_balance_residual(cw, &cm.b)?.mat);
    if cm.normalized {
        report.push_residual("normalization", casimir_norm_residual(cw, &cm.b)?.mat);
    }
    Ok(report)
}

/// Per-sample verification of the natural transformations induced by a
/// Frobenius system, the two certificates against `eps`, and both triangle
/// compositions on every sample.
pub fn build_natural_transformations(
    fs: &FrobeniusSystem,
    modules: &[RightModule],
    entwined: &[EntwinedModule],
) -> Result<Report> {
    let cw = &fs.cw;
    let f = cw.field();
    let alg = cw.alg();
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);
    let mut report = Report::new("natural transformations");

    let theta = |n: &RightModule| -> Result<Mor> {
        let in_ = Mor::id(&n.m, f);
        n.mu.tensor(&ix)?.after(&in_.tensor(&fs.t)?)
    };
    let vartheta = |m: &EntwinedModule| -> Result<Mor> {
        let im = Mor::id(&m.m, f);
        m.mu.after(&im.tensor(&fs.b)?)?.after(&m.rho.tensor(&ix)?)
    };

    for (i, n) in modules.iter().enumerate() {
        let th = theta(n)?;
        let in_ = Mor::id(&n.m, f);
        // Right linearity of theta: theta . mu = mu_{NX} . (theta A).
        let mu_nx = n.mu.tensor(&ix)?.after(&in_.tensor(&cw.base.psi)?)?;
        let res = th.after(&n.mu)?.sub(&mu_nx.after(&th.tensor(&ia)?)?)?;
        report.push_residual(format!("theta-linear@N{i}"), res.mat);
    }

    for (i, m) in entwined.iter().enumerate() {
        let vt = vartheta(m)?;
        // vartheta is a morphism of entwined modules G(F(M)) -> M.
        let gfm = cofree_entwined(cw, &m.module())?;
        let lin = vt.after(&gfm.mu)?.sub(&m.mu.after(&vt.tensor(&ia)?)?)?;
        report.push_residual(format!("vartheta-linear@M{i}"), lin.mat);
        let colin = vt.tensor(&ix)?.after(&gfm.rho)?.sub(&m.rho.after(&vt)?)?;
        report.push_residual(format!("vartheta-colinear@M{i}"), colin.mat);
    }

    // Certificates: both pairings against the counit.
    let g_cert = pairing_left(cw, &fs.t, &fs.b)?;
    let f_cert = pairing_right(cw, &fs.t, &fs.b)?;
    report.push_residual("f=eps", f_cert.sub(&cw.eps)?.mat);
    report.push_residual("g=eps", g_cert.sub(&cw.eps)?.mat);

    if report.passed() {
        for (i, m) in entwined.iter().enumerate() {
            let im = Mor::id(&m.m, f);
            let th = theta(&m.module())?;
            let vt = vartheta(m)?;
            report.push_residual(format!("triangle-F@M{i}"), vt.after(&th)?.sub(&im)?.mat);
        }
        for (i, n) in modules.iter().enumerate() {
            let gn = cofree_entwined(cw, n)?;
            let ign = Mor::id(&gn.m, f);
            let th = theta(n)?;
            let vgn = vartheta(&gn)?;
            let res = vgn.after(&th.tensor(&ix)?)?.sub(&ign)?;
            report.push_residual(format!("triangle-G@N{i}"), res.mat);
        }
    }
    Ok(report)
}

/// A comparison map together with its exact invertibility verdict.
#[derive(Clone, Debug)]
pub struct ComparisonMap {
    pub map: Mor,
    pub invertible: bool,
}

/// `Phi: Y(x)A -> A(x)X` built from a Frobenius element `t`:
/// `(m^2 X)(after)(A A psi)(after)(A A X d A)(after)(A delta Y A)(after)(t Y A)`.
pub fn build_phi(cw: &Cowreath, dual: &DualityData, t: &Mor) -> Result<ComparisonMap> {
    if dual.x != *cw.x() {
        return Err(Error::ObjectMismatch {
            context: "phi duality",
            left: dual.x.to_string(),
            right: cw.x().to_string(),
        });
    }
    let f = cw.field();
    let alg = cw.alg();
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);
    let iy = Mor::id(&dual.y, f);
    let m2 = alg.m.after(&ia.tensor(&alg.m)?)?;
    let map = m2
        .tensor(&ix)?
        .after(&ia.tensor(&ia)?.tensor(&cw.base.psi)?)?
        .after(&ia.tensor(&ia)?.tensor(&ix)?.tensor(&dual.d)?.tensor(&ia)?)?
        .after(&ia.tensor(&cw.delta)?.tensor(&iy)?.tensor(&ia)?)?
        .after(&t.tensor(&iy)?.tensor(&ia)?)?;
    let invertible = mat_inverse(&map.mat)?.is_some();
    Ok(ComparisonMap { map, invertible })
}

/// `Psi: A(x)X -> Y(x)A` built from a Casimir morphism `b`:
/// `(Y m)(after)(Y A b)(after)(Y psi X)(after)(b_dual A X)`.
pub fn build_psi(cw: &Cowreath, dual: &DualityData, b: &Mor) -> Result<ComparisonMap> {
    if dual.x != *cw.x() {
        return Err(Error::ObjectMismatch {
            context: "psi duality",
            left: dual.x.to_string(),
            right: cw.x().to_string(),
        });
    }
    let f = cw.field();
    let alg = cw.alg();
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);
    let iy = Mor::id(&dual.y, f);
    let map = iy
        .tensor(&alg.m)?
        .after(&iy.tensor(&ia)?.tensor(b)?)?
        .after(&iy.tensor(&cw.base.psi)?.tensor(&ix)?)?
        .after(&dual.b.tensor(&ia)?.tensor(&ix)?)?;
    let invertible = mat_inverse(&map.mat)?.is_some();
    Ok(ComparisonMap { map, invertible })
}

/// Rank evidence that an inhomogeneous linear system has no solution.
#[derive(Clone, Debug)]
pub struct RankCertificate {
    pub system_rank: usize,
    pub augmented_rank: usize,
}

/// Outcome of a linear feasibility decision.
#[derive(Clone, Debug)]
pub enum Feasibility<T> {
    Feasible(T),
    Infeasible(RankCertificate),
}

impl<T> Feasibility<T> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn feasible(&self) -> Option<&T> {
        match self {
            Feasibility::Feasible(t) => Some(t),
            Feasibility::Infeasible(_) => None,
        }
    }
}

/// Stacks morphism-linear conditions `op(unknown) = target` into one system
/// and solves it exactly.
pub(crate) fn solve_mor_system(
    dom: &Obj,
    cod: &Obj,
    field: crate::exactlin::Field,
    conditions: &[(&dyn Fn(&Mor) -> Result<Mor>, Option<&Mor>)],
) -> Result<Feasibility<Mor>> {
    let mut system: Option<Mat> = None;
    let mut rhs: Option<Mat> = None;
    for (op, target) in conditions {
        let block = operator_matrix(dom, cod, field, |m| op(m))?;
        let target_vec = match target {
            Some(t) => mor_to_vec(t),
            None => Mat::zeros(block.rows(), 1, field),
        };
        system = Some(match system {
            Some(s) => s.vstack(&block)?,
            None => block,
        });
        rhs = Some(match rhs {
            Some(r) => r.vstack(&target_vec)?,
            None => target_vec,
        });
    }
    let system = system.expect("at least one condition");
    let rhs = rhs.expect("at least one condition");
    match solve_linear(&system, &rhs)? {
        Some(sol) => Ok(Feasibility::Feasible(mor_from_vec(dom, cod, &sol.particular)?)),
        None => Ok(Feasibility::Infeasible(RankCertificate {
            system_rank: system.rank(),
            augmented_rank: system.hstack(&rhs)?.rank(),
        })),
    }
}

/// The assembled linear system deciding coseparability, exposed so the
/// verdict can be cross-checked by an independent solve: rows stack the hom
/// compatibility, balance and normalization conditions on the flattened
/// entries of the Casimir candidate.
pub fn separability_system(cw: &Cowreath) -> Result<(Mat, Mat)> {
    let f = cw.field();
    let dom = cw.x().tensor(cw.x());
    let cod = cw.alg().a.clone();
    let blocks = [
        operator_matrix(&dom, &cod, f, |b| frob_b_residual(cw, b))?,
        operator_matrix(&dom, &cod, f, |b| casimir_balance_residual(cw, b))?,
        operator_matrix(&dom, &cod, f, |b| {
            let ia = Mor::id(&cw.alg().a, f);
            cw.alg().m.after(&ia.tensor(b)?)?.after(&cw.delta)
        })?,
    ];
    let system = blocks[0].vstack(&blocks[1])?.vstack(&blocks[2])?;
    let zero_rows = blocks[0].rows() + blocks[1].rows();
    let rhs = Mat::zeros(zero_rows, 1, f).vstack(&mor_to_vec(&cw.eps))?;
    Ok((system, rhs))
}

/// Complete decision procedure for coseparability: solves the hom
/// compatibility, balance and normalization conditions for `b` as one exact
/// linear system, and re-checks any solution before returning it.
pub fn solve_separability(cw: &Cowreath) -> Result<Feasibility<CasimirMorphism>> {
    let f = cw.field();
    let dom = cw.x().tensor(cw.x());
    let cod = cw.alg().a.clone();
    let hom = |b: &Mor| frob_b_residual(cw, b);
    let balance = |b: &Mor| casimir_balance_residual(cw, b);
    let norm = |b: &Mor| {
        let ia = Mor::id(&cw.alg().a, cw.field());
        cw.alg().m.after(&ia.tensor(b)?)?.after(&cw.delta)
    };
    let outcome = solve_mor_system(
        &dom,
        &cod,
        f,
        &[(&hom, None), (&balance, None), (&norm, Some(&cw.eps))],
    )?;
    match outcome {
        Feasibility::Feasible(b) => {
            let cm = CasimirMorphism {
                cw: cw.clone(),
                b,
                normalized: true,
            };
            let recheck = check_casimir(&cm)?;
            if !recheck.passed() {
                return Err(Error::Precondition(
                    "separability solver produced a candidate that fails recheck".to_string(),
                ));
            }
            Ok(Feasibility::Feasible(cm))
        }
        Feasibility::Infeasible(cert) => Ok(Feasibility::Infeasible(cert)),
    }
}

/// Complete decision procedure for separability of the right adjoint:
/// solves for `t` with the hom compatibility plus
/// `m (after) (A eps) (after) t = unit`.
pub fn solve_g_separability(cw: &Cowreath) -> Result<Feasibility<Mor>> {
    let f = cw.field();
    let dom = Obj::unit();
    let cod = cw.alg().a.tensor(cw.x());
    let hom = |t: &Mor| frob_t_residual(cw, t);
    let norm = |t: &Mor| {
        let ia = Mor::id(&cw.alg().a, cw.field());
        cw.alg().m.after(&ia.tensor(&cw.eps)?)?.after(t)
    };
    let outcome = solve_mor_system(&dom, &cod, f, &[(&hom, None), (&norm, Some(&cw.alg().unit))])?;
    if let Feasibility::Feasible(t) = &outcome {
        let check = frob_t_residual(cw, t)?;
        if !check.is_zero() {
            return Err(Error::Precondition(
                "separability solver produced a candidate that fails recheck".to_string(),
            ));
        }
    }
    Ok(outcome)
}

/// Outcome of the randomized Frobenius search.
#[derive(Clone, Debug)]
pub enum FrobeniusSearch {
    Found(FrobeniusSystem),
    /// No verified system within budget; reports the dimension of the
    /// solution space the candidates were drawn from.
    NotFound { t_space_dim: usize },
}

impl FrobeniusSearch {
    pub fn found(&self) -> Option<&FrobeniusSystem> {
        match self {
            FrobeniusSearch::Found(fs) => Some(fs),
            FrobeniusSearch::NotFound { .. } => None,
        }
    }
}

/// Randomized-but-verified Frobenius search: samples `t` from the exact
/// solution space of the hom compatibility condition, inverts the induced
/// comparison map, extracts the Casimir morphism from the inverse via
/// `b = (d A)(after)(X Psi)(after)(X eta X)`, and returns only fully
/// re-verified systems. Deterministic for a fixed seed; sound, not complete.
pub fn search_frobenius(
    cw: &Cowreath,
    dual: &DualityData,
    trials: u32,
    seed: u64,
) -> Result<FrobeniusSearch> {
    let f = cw.field();
    let alg = cw.alg();
    let unit_obj = TransferMorphism::unit_object(alg);
    let basis = ta_hom_space(&unit_obj, &cw.base)?;
    let t_space_dim = basis.cols();
    if t_space_dim == 0 {
        return Ok(FrobeniusSearch::NotFound { t_space_dim });
    }
    let dom = Obj::unit();
    let cod = alg.a.tensor(cw.x());
    let ia = Mor::id(&alg.a, f);
    let ix = Mor::id(cw.x(), f);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut t = Mor::zero(&dom, &cod, f);
        for k in 0..t_space_dim {
            let c: i64 = rng.gen_range(-3..=3);
            let part = mor_from_vec(&dom, &cod, &basis.column(k))?;
            t = t.add(&part.scale(&Scalar::from_i64(c, f)))?;
        }
        let phi = build_phi(cw, dual, &t)?;
        if !phi.invertible {
            continue;
        }
        let psi = phi.map.inverse()?.expect("invertible comparison map");
        let b = dual
            .d
            .tensor(&ia)?
            .after(&ix.tensor(&psi)?)?
            .after(&ix.tensor(&alg.unit)?.tensor(&ix)?)?;
        let candidate = FrobeniusSystem::new(cw.clone(), t.clone(), b)?;
        if check_frobenius_system(&candidate)?.passed() {
            return Ok(FrobeniusSearch::Found(candidate));
        }
    }
    Ok(FrobeniusSearch::NotFound { t_space_dim })
}

/// Lifts a module-level section of an entwined morphism to an entwined
/// section, given a normalized Casimir morphism:
/// `lifted = vartheta_M (after) (s X) (after) rho_N`.
pub fn maschke_lift(
    em_m: &EntwinedModule,
    em_n: &EntwinedModule,
    casimir: &CasimirMorphism,
    f: &Mor,
    s: &Mor,
) -> Result<(Mor, Report)> {
    let cw = &casimir.cw;
    if em_m.cw != *cw || em_n.cw != *cw {
        return Err(Error::AlgebraMismatch {
            context: "maschke lift cowreath",
        });
    }
    if !casimir.normalized || !check_casimir(casimir)?.passed() {
        return Err(Error::Precondition(
            "maschke lift needs a verified normalized Casimir morphism".to_string(),
        ));
    }
    let field = cw.field();
    let ia = Mor::id(&cw.alg().a, field);
    let ix = Mor::id(cw.x(), field);
    let im = Mor::id(&em_m.m, field);
    let in_ = Mor::id(&em_n.m, field);
    expect_shape(f, &em_m.m, &em_n.m, "morphism to split")?;
    expect_shape(s, &em_n.m, &em_m.m, "module-level section")?;

    // Preconditions: f entwined, s a right-linear section of f.
    let f_lin = f.after(&em_m.mu)?.sub(&em_n.mu.after(&f.tensor(&ia)?)?)?;
    let f_colin = f.tensor(&ix)?.after(&em_m.rho)?.sub(&em_n.rho.after(f)?)?;
    let s_lin = s.after(&em_n.mu)?.sub(&em_m.mu.after(&s.tensor(&ia)?)?)?;
    let section = f.after(s)?.sub(&in_)?;
    for (id, res) in [
        ("pre-f-linear", &f_lin),
        ("pre-f-colinear", &f_colin),
        ("pre-s-linear", &s_lin),
        ("pre-section", &section),
    ] {
        if !res.is_zero() {
            return Err(Error::Precondition(format!(
                "maschke lift precondition {id} fails"
            )));
        }
    }

    let vartheta_m = em_m
        .mu
        .after(&im.tensor(&casimir.b)?)?
        .after(&em_m.rho.tensor(&ix)?)?;
    let lifted = vartheta_m.after(&s.tensor(&ix)?)?.after(&em_n.rho)?;

    let mut report = Report::new("maschke lift");
    let lin = lifted
        .after(&em_n.mu)?
        .sub(&em_m.mu.after(&lifted.tensor(&ia)?)?)?;
    report.push_residual("lifted-linear", lin.mat);
    let colin = lifted
        .tensor(&ix)?
        .after(&em_n.rho)?
        .sub(&em_m.rho.after(&lifted)?)?;
    report.push_residual("lifted-colinear", colin.mat);
    let split = f.after(&lifted)?.sub(&in_)?;
    report.push_residual("lifted-section", split.mat);
    Ok((lifted, report))
}

/// Runs the search and reports either the full recheck of the found system
/// or a single failing entry describing the exhausted budget.
pub fn search_report(cw: &Cowreath, dual: &DualityData, trials: u32, seed: u64) -> Result<Report> {
    let mut report = Report::new("frobenius search");
    match search_frobenius(cw, dual, trials, seed)? {
        FrobeniusSearch::Found(fs) => {
            report.merge(check_frobenius_system(&fs)?);
        }
        FrobeniusSearch::NotFound { t_space_dim } => {
            report.push(CheckEntry::from_bool(
                format!("no verified system within budget (t-space dim {t_space_dim})"),
                false,
                cw.field(),
            ));
        }
    }
    Ok(report)
}

#[cfg(test)]
#[path = "frobsep_tests.rs"]
mod tests;
