//! Full-pipeline runs on structurally different inputs: a swap entwining
//! whose coalgebra leg is not group-like, and a prime-field pass over the
//! bundled entwining fixture.

use cwk_core::coring::{
    check_coring, check_frobenius_coring, coring_adjunction, coring_coseparability,
    coring_from_cowreath, dual_ring_on_ya, quotient_level_action,
};
use cwk_core::entwine::{
    check_cowreath, check_entwined_module, check_transfer, cofree_entwined, cofree_triangles,
    Cowreath, TransferMorphism,
};
use cwk_core::exactlin::Field;
use cwk_core::fixtures;
use cwk_core::frobsep::{
    check_frobenius_system, search_frobenius, solve_g_separability, solve_separability,
};
use cwk_core::moncat::{make_duality_data, Mor};
use cwk_core::structures::{check_algebra, RightModule};
use cwk_core::workspace::{parse_workspace, run_battery, serialize_workspace, workspace_of_cowreath};
use cwk_core::wreath::{
    check_right_wreath, from_smash_module, smash_consistency, smash_from_cowreath,
    to_smash_module, wreath_from_cowreath, SmashConsistencyInputs,
};

/// The divided-power coalgebra entwined with k[Z/2] by the plain swap.
fn swap_entwining(field: Field) -> Cowreath {
    let alg = fixtures::group_algebra_z2(field);
    let co = fixtures::divided_power_coalgebra(field);
    let psi = Mor::swap(&co.c, &alg.a, field);
    let base = TransferMorphism::new(alg, co.c.clone(), psi).unwrap();
    Cowreath::from_entwining(base, &co.delta, &co.counit).unwrap()
}

#[test]
fn swap_entwining_full_pipeline() {
    let cw = swap_entwining(Field::Q);
    assert!(check_transfer(&cw.base).unwrap().passed());
    assert!(check_cowreath(&cw).unwrap().passed());

    let dual = make_duality_data(cw.x(), Field::Q);
    let wr = wreath_from_cowreath(&cw, &dual).unwrap();
    assert!(check_right_wreath(&wr).unwrap().passed());

    let sa = smash_from_cowreath(&cw, &dual).unwrap();
    assert!(check_algebra(&sa.algebra).unwrap().passed());

    // Cofree module, its adjunction triangles, and the module-category
    // roundtrip.
    let n = RightModule::regular(cw.alg());
    let em = cofree_entwined(&cw, &n).unwrap();
    assert!(check_entwined_module(&em).unwrap().passed());
    assert!(cofree_triangles(&cw, &n).unwrap().passed());
    let transported = to_smash_module(&em, &sa).unwrap();
    let back = from_smash_module(&transported, &sa).unwrap();
    assert_eq!(back.mu, em.mu);
    assert_eq!(back.rho, em.rho);
    let free = RightModule::regular(&sa.algebra);
    let em2 = from_smash_module(&free, &sa).unwrap();
    assert!(check_entwined_module(&em2).unwrap().passed());
    assert_eq!(to_smash_module(&em2, &sa).unwrap().mu, free.mu);

    // Coring level: laws, adjunction triangles, ring consistency.
    let co = coring_from_cowreath(&cw).unwrap();
    assert!(check_coring(&co).unwrap().passed());
    let adj = coring_adjunction(&cw, &dual).unwrap();
    assert!(adj.report.passed(), "{}", adj.report);
    let (m_ya, eta_ya) = dual_ring_on_ya(&cw, &dual).unwrap();
    let mu_tilde = quotient_level_action(&adj).unwrap();
    let consistency = smash_consistency(
        &sa,
        &SmashConsistencyInputs {
            m_ya: &m_ya,
            eta_ya: &eta_ya,
            mu_tilde: &mu_tilde,
            q: &adj.ax_ya.q,
        },
    )
    .unwrap();
    assert!(consistency.passed(), "{consistency}");

    // Solver verdicts agree across levels. The coalgebra leg is the
    // divided-power one, so coseparability must fail at both levels.
    let hom_cosep = solve_separability(&cw).unwrap().is_feasible();
    let coring_cosep = coring_coseparability(&co).unwrap().is_feasible();
    assert!(!hom_cosep);
    assert_eq!(hom_cosep, coring_cosep);
    assert!(check_frobenius_coring(&cw, &dual, None).unwrap().passed());

    // The entwined divided-power coalgebra still carries a Frobenius
    // system; verify whatever the search returns.
    if let Some(fs) = search_frobenius(&cw, &dual, 32, 5).unwrap().found() {
        assert!(check_frobenius_system(fs).unwrap().passed());
    }

    // Workspace round-trip for this cowreath too.
    let ws = workspace_of_cowreath(&cw, &[("cofree", &em)]);
    let text = serialize_workspace(&ws);
    let back_ws = parse_workspace(text.as_bytes()).unwrap();
    assert_eq!(serialize_workspace(&back_ws), text);
    assert!(run_battery(&back_ws).unwrap().failures.is_empty());
}

#[test]
fn prime_field_full_pipeline() {
    let field = Field::prime(7).unwrap();
    let cw = fixtures::f3(field);
    assert!(check_transfer(&cw.base).unwrap().passed());
    assert!(check_cowreath(&cw).unwrap().passed());

    let dual = make_duality_data(cw.x(), field);
    let wr = wreath_from_cowreath(&cw, &dual).unwrap();
    assert!(check_right_wreath(&wr).unwrap().passed());
    let sa = smash_from_cowreath(&cw, &dual).unwrap();
    assert!(check_algebra(&sa.algebra).unwrap().passed());

    let em = cofree_entwined(&cw, &RightModule::regular(cw.alg())).unwrap();
    let n = to_smash_module(&em, &sa).unwrap();
    let back = from_smash_module(&n, &sa).unwrap();
    assert_eq!(back.rho, em.rho);

    let co = coring_from_cowreath(&cw).unwrap();
    assert!(check_coring(&co).unwrap().passed());
    let adj = coring_adjunction(&cw, &dual).unwrap();
    assert!(adj.report.passed());

    // Solvers over F_7: note the element count is finite but the decision
    // procedures are field-generic.
    let hom_cosep = solve_separability(&cw).unwrap().is_feasible();
    let coring_cosep = coring_coseparability(&co).unwrap().is_feasible();
    assert_eq!(hom_cosep, coring_cosep);
    assert!(solve_g_separability(&cw).unwrap().is_feasible());
    if let Some(fs) = search_frobenius(&cw, &dual, 32, 2).unwrap().found() {
        assert!(check_frobenius_system(fs).unwrap().passed());
    }
}

#[test]
fn characteristic_two_battery() {
    // Z/2 group algebra in characteristic 2: the checkers and quotient
    // machinery must stay exact even in the degenerate characteristic.
    let field = Field::prime(2).unwrap();
    let cw = fixtures::f3(field);
    assert!(check_cowreath(&cw).unwrap().passed());
    let dual = make_duality_data(cw.x(), field);
    let adj = coring_adjunction(&cw, &dual).unwrap();
    assert!(adj.report.passed());
    // The coalgebra leg is group-like, so its dual is the diagonal algebra
    // k x k: separable in every characteristic, and the solver certifies a
    // normalized Casimir morphism even here.
    let co = coring_from_cowreath(&cw).unwrap();
    let hom_cosep = solve_separability(&cw).unwrap().is_feasible();
    let coring_cosep = coring_coseparability(&co).unwrap().is_feasible();
    assert_eq!(hom_cosep, coring_cosep);
    assert!(hom_cosep);
}
