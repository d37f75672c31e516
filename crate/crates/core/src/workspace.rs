//! Workspace files: a JSON format for declaring objects, morphisms and
//! structures, with full validation on parse, canonical serialization, and
//! the bundled fixture registry.
//!
//! Scalars are strings (`"3"`, `"-7/4"`, `"12 mod 101"`) so exactness
//! survives any JSON reader; matrices are row-major nested arrays; tensor
//! indices flatten with the leftmost factor most significant.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::entwine::{
    check_cowreath, check_entwined_module, check_transfer, Cowreath, EntwinedModule,
    TransferMorphism,
};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat, Scalar};
use crate::fixtures;
use crate::moncat::{check_adjunction, make_duality_data, DualityData, GenObj, Mor, Obj};
use crate::structures::{
    check_algebra, check_coalgebra, check_right_module, Algebra, Coalgebra, RightModule,
};
use crate::wreath::{check_right_wreath, wreath_from_cowreath};

pub const SCHEMA: &str = "cowreath-kit/1";

/// A fully resolved, validated workspace.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub field: Field,
    pub objects: BTreeMap<String, GenObj>,
    pub morphisms: BTreeMap<String, Mor>,
    pub algebras: BTreeMap<String, Algebra>,
    pub coalgebras: BTreeMap<String, Coalgebra>,
    pub transfers: BTreeMap<String, TransferMorphism>,
    pub cowreaths: BTreeMap<String, Cowreath>,
    pub modules: BTreeMap<String, (String, RightModule)>,
    pub entwined: BTreeMap<String, EntwinedModule>,
    pub dualities: BTreeMap<String, DualityData>,
    /// Names declared with `"unchecked": true`, exempt from validation.
    pub unchecked: Vec<String>,
}

#[derive(Serialize, Deserialize, Default)]
struct RawWorkspace {
    schema: String,
    field: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    objects: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    morphisms: BTreeMap<String, RawMor>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    algebras: BTreeMap<String, RawAlgebra>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    coalgebras: BTreeMap<String, RawCoalgebra>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    transfer: BTreeMap<String, RawTransfer>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    cowreaths: BTreeMap<String, RawCowreath>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    modules: BTreeMap<String, RawModule>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    entwined: BTreeMap<String, RawEntwined>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    dualities: BTreeMap<String, RawDuality>,
}

#[derive(Serialize, Deserialize)]
struct RawMor {
    dom: Vec<String>,
    cod: Vec<String>,
    mat: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct RawAlgebra {
    a: Vec<String>,
    m: String,
    unit: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    unchecked: bool,
}

#[derive(Serialize, Deserialize)]
struct RawCoalgebra {
    c: Vec<String>,
    delta: String,
    counit: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    unchecked: bool,
}

#[derive(Serialize, Deserialize)]
struct RawTransfer {
    algebra: String,
    x: Vec<String>,
    psi: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    unchecked: bool,
}

#[derive(Serialize, Deserialize)]
struct RawCowreath {
    transfer: String,
    delta: String,
    eps: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    unchecked: bool,
}

#[derive(Serialize, Deserialize)]
struct RawModule {
    algebra: String,
    m: Vec<String>,
    mu: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    unchecked: bool,
}

#[derive(Serialize, Deserialize)]
struct RawEntwined {
    cowreath: String,
    m: Vec<String>,
    mu: String,
    rho: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    unchecked: bool,
}

#[derive(Serialize, Deserialize)]
struct RawDuality {
    x: Vec<String>,
    y: Vec<String>,
    b: String,
    d: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    unchecked: bool,
}

fn ws_err(path: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Workspace {
        path: path.into(),
        reason: reason.into(),
    }
}

fn parse_field(text: &str) -> Result<Field> {
    if text == "Q" {
        return Ok(Field::Q);
    }
    if let Some(p) = text.strip_prefix('F') {
        let p: u64 = p
            .parse()
            .map_err(|_| ws_err("/field", format!("bad field spec `{text}`")))?;
        return Field::prime(p);
    }
    Err(ws_err("/field", format!("unknown field `{text}`")))
}

fn field_name(field: Field) -> String {
    match field {
        Field::Q => "Q".to_string(),
        Field::Fp(p) => format!("F{p}"),
    }
}

/// Parses and fully validates a workspace file. `field_override` (if any)
/// reinterprets every scalar in the given field.
pub fn parse_workspace_with_field(bytes: &[u8], field_override: Option<Field>) -> Result<Workspace> {
    let raw: RawWorkspace = serde_json::from_slice(bytes)
        .map_err(|e| ws_err("/", format!("JSON syntax: {e}")))?;
    if raw.schema != SCHEMA {
        return Err(ws_err(
            "/schema",
            format!("expected `{SCHEMA}`, found `{}`", raw.schema),
        ));
    }
    let field = match field_override {
        Some(f) => f,
        None => parse_field(&raw.field)?,
    };

    let mut ws = Workspace {
        field,
        ..Workspace::default()
    };

    for (name, dim) in &raw.objects {
        if *dim == 0 {
            return Err(ws_err(format!("/objects/{name}"), "dim must be >= 1"));
        }
        ws.objects.insert(name.clone(), GenObj::new(name, *dim));
    }

    let resolve_obj = |ws: &Workspace, word: &[String], path: &str| -> Result<Obj> {
        let mut obj = Obj::unit();
        for gen_name in word {
            let g = ws
                .objects
                .get(gen_name)
                .ok_or_else(|| ws_err(path, format!("unknown object `{gen_name}`")))?;
            obj = obj.tensor(&Obj::gen(g));
        }
        Ok(obj)
    };

    for (name, rm) in &raw.morphisms {
        let path = format!("/morphisms/{name}");
        let dom = resolve_obj(&ws, &rm.dom, &format!("{path}/dom"))?;
        let cod = resolve_obj(&ws, &rm.cod, &format!("{path}/cod"))?;
        let rows = rm.mat.len();
        let cols = rm.mat.first().map_or(0, |r| r.len());
        if rm.mat.iter().any(|r| r.len() != cols) {
            return Err(ws_err(format!("{path}/mat"), "ragged rows"));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for (i, row) in rm.mat.iter().enumerate() {
            for (j, lit) in row.iter().enumerate() {
                let s = Scalar::parse(lit, field)
                    .map_err(|e| ws_err(format!("{path}/mat/{i}/{j}"), e.to_string()))?;
                entries.push(s);
            }
        }
        let mat = Mat::new(rows, cols, field, entries)
            .map_err(|e| ws_err(format!("{path}/mat"), e.to_string()))?;
        let mor = Mor::new(dom, cod, mat).map_err(|e| ws_err(&path, e.to_string()))?;
        ws.morphisms.insert(name.clone(), mor);
    }

    let get_mor = |ws: &Workspace, name: &str, path: &str| -> Result<Mor> {
        ws.morphisms
            .get(name)
            .cloned()
            .ok_or_else(|| ws_err(path, format!("unknown morphism `{name}`")))
    };

    for (name, ra) in &raw.algebras {
        let path = format!("/algebras/{name}");
        let a = resolve_obj(&ws, &ra.a, &format!("{path}/a"))?;
        let alg = Algebra::new(
            a,
            get_mor(&ws, &ra.m, &format!("{path}/m"))?,
            get_mor(&ws, &ra.unit, &format!("{path}/unit"))?,
        )
        .map_err(|e| ws_err(&path, e.to_string()))?;
        if ra.unchecked {
            ws.unchecked.push(format!("algebras/{name}"));
        } else if !check_algebra(&alg)?.passed() {
            return Err(ws_err(&path, "algebra laws fail; mark `unchecked` to keep"));
        }
        ws.algebras.insert(name.clone(), alg);
    }

    for (name, rc) in &raw.coalgebras {
        let path = format!("/coalgebras/{name}");
        let c = resolve_obj(&ws, &rc.c, &format!("{path}/c"))?;
        let co = Coalgebra::new(
            c,
            get_mor(&ws, &rc.delta, &format!("{path}/delta"))?,
            get_mor(&ws, &rc.counit, &format!("{path}/counit"))?,
        )
        .map_err(|e| ws_err(&path, e.to_string()))?;
        if rc.unchecked {
            ws.unchecked.push(format!("coalgebras/{name}"));
        } else if !check_coalgebra(&co)?.passed() {
            return Err(ws_err(&path, "coalgebra laws fail; mark `unchecked` to keep"));
        }
        ws.coalgebras.insert(name.clone(), co);
    }

    for (name, rt) in &raw.transfer {
        let path = format!("/transfer/{name}");
        let alg = ws
            .algebras
            .get(&rt.algebra)
            .cloned()
            .ok_or_else(|| ws_err(&path, format!("unknown algebra `{}`", rt.algebra)))?;
        let x = resolve_obj(&ws, &rt.x, &format!("{path}/x"))?;
        let t = TransferMorphism::new(alg, x, get_mor(&ws, &rt.psi, &format!("{path}/psi"))?)
            .map_err(|e| ws_err(&path, e.to_string()))?;
        if rt.unchecked {
            ws.unchecked.push(format!("transfer/{name}"));
        } else if !check_transfer(&t)?.passed() {
            return Err(ws_err(&path, "transfer laws fail; mark `unchecked` to keep"));
        }
        ws.transfers.insert(name.clone(), t);
    }

    for (name, rc) in &raw.cowreaths {
        let path = format!("/cowreaths/{name}");
        let base = ws
            .transfers
            .get(&rc.transfer)
            .cloned()
            .ok_or_else(|| ws_err(&path, format!("unknown transfer `{}`", rc.transfer)))?;
        let cw = Cowreath::new(
            base,
            get_mor(&ws, &rc.delta, &format!("{path}/delta"))?,
            get_mor(&ws, &rc.eps, &format!("{path}/eps"))?,
        )
        .map_err(|e| ws_err(&path, e.to_string()))?;
        if rc.unchecked {
            ws.unchecked.push(format!("cowreaths/{name}"));
        } else if !check_cowreath(&cw)?.passed() {
            return Err(ws_err(&path, "cowreath laws fail; mark `unchecked` to keep"));
        }
        ws.cowreaths.insert(name.clone(), cw);
    }

    for (name, rm) in &raw.modules {
        let path = format!("/modules/{name}");
        let alg = ws
            .algebras
            .get(&rm.algebra)
            .cloned()
            .ok_or_else(|| ws_err(&path, format!("unknown algebra `{}`", rm.algebra)))?;
        let m = resolve_obj(&ws, &rm.m, &format!("{path}/m"))?;
        let md = RightModule::new(m, get_mor(&ws, &rm.mu, &format!("{path}/mu"))?, &alg)
            .map_err(|e| ws_err(&path, e.to_string()))?;
        if rm.unchecked {
            ws.unchecked.push(format!("modules/{name}"));
        } else if !check_right_module(&md, &alg)?.passed() {
            return Err(ws_err(&path, "module laws fail; mark `unchecked` to keep"));
        }
        ws.modules.insert(name.clone(), (rm.algebra.clone(), md));
    }

    for (name, re) in &raw.entwined {
        let path = format!("/entwined/{name}");
        let cw = ws
            .cowreaths
            .get(&re.cowreath)
            .cloned()
            .ok_or_else(|| ws_err(&path, format!("unknown cowreath `{}`", re.cowreath)))?;
        let m = resolve_obj(&ws, &re.m, &format!("{path}/m"))?;
        let em = EntwinedModule::new(
            cw,
            m,
            get_mor(&ws, &re.mu, &format!("{path}/mu"))?,
            get_mor(&ws, &re.rho, &format!("{path}/rho"))?,
        )
        .map_err(|e| ws_err(&path, e.to_string()))?;
        if re.unchecked {
            ws.unchecked.push(format!("entwined/{name}"));
        } else if !check_entwined_module(&em)?.passed() {
            return Err(ws_err(&path, "entwined laws fail; mark `unchecked` to keep"));
        }
        ws.entwined.insert(name.clone(), em);
    }

    for (name, rd) in &raw.dualities {
        let path = format!("/dualities/{name}");
        let x = resolve_obj(&ws, &rd.x, &format!("{path}/x"))?;
        let y = resolve_obj(&ws, &rd.y, &format!("{path}/y"))?;
        let dd = DualityData {
            x,
            y,
            b: get_mor(&ws, &rd.b, &format!("{path}/b"))?,
            d: get_mor(&ws, &rd.d, &format!("{path}/d"))?,
        };
        if rd.unchecked {
            ws.unchecked.push(format!("dualities/{name}"));
        } else if !check_adjunction(&dd)?.passed() {
            return Err(ws_err(&path, "snake identities fail; mark `unchecked` to keep"));
        }
        ws.dualities.insert(name.clone(), dd);
    }

    Ok(ws)
}

/// Parses a workspace using its declared field.
pub fn parse_workspace(bytes: &[u8]) -> Result<Workspace> {
    parse_workspace_with_field(bytes, None)
}

fn mor_to_raw(m: &Mor) -> RawMor {
    let word = |o: &Obj| o.factors().iter().map(|g| g.name.clone()).collect();
    let mat = (0..m.mat.rows())
        .map(|i| {
            (0..m.mat.cols())
                .map(|j| m.mat.get(i, j).canonical())
                .collect()
        })
        .collect();
    RawMor {
        dom: word(&m.dom),
        cod: word(&m.cod),
        mat,
    }
}

/// Canonical JSON for a workspace; scalars in canonical form, keys sorted.
pub fn serialize_workspace(ws: &Workspace) -> String {
    let mut raw = RawWorkspace {
        schema: SCHEMA.to_string(),
        field: field_name(ws.field),
        ..RawWorkspace::default()
    };
    for (name, g) in &ws.objects {
        raw.objects.insert(name.clone(), g.dim);
    }
    for (name, m) in &ws.morphisms {
        raw.morphisms.insert(name.clone(), mor_to_raw(m));
    }
    let word = |o: &Obj| -> Vec<String> { o.factors().iter().map(|g| g.name.clone()).collect() };
    let unchecked = |kind: &str, name: &str| ws.unchecked.iter().any(|u| u == &format!("{kind}/{name}"));
    for (name, alg) in &ws.algebras {
        raw.algebras.insert(
            name.clone(),
            RawAlgebra {
                a: word(&alg.a),
                m: find_mor_name(ws, &alg.m),
                unit: find_mor_name(ws, &alg.unit),
                unchecked: unchecked("algebras", name),
            },
        );
    }
    for (name, co) in &ws.coalgebras {
        raw.coalgebras.insert(
            name.clone(),
            RawCoalgebra {
                c: word(&co.c),
                delta: find_mor_name(ws, &co.delta),
                counit: find_mor_name(ws, &co.counit),
                unchecked: unchecked("coalgebras", name),
            },
        );
    }
    for (name, t) in &ws.transfers {
        raw.transfer.insert(
            name.clone(),
            RawTransfer {
                algebra: find_algebra_name(ws, &t.alg),
                x: word(&t.x),
                psi: find_mor_name(ws, &t.psi),
                unchecked: unchecked("transfer", name),
            },
        );
    }
    for (name, cw) in &ws.cowreaths {
        raw.cowreaths.insert(
            name.clone(),
            RawCowreath {
                transfer: find_transfer_name(ws, &cw.base),
                delta: find_mor_name(ws, &cw.delta),
                eps: find_mor_name(ws, &cw.eps),
                unchecked: unchecked("cowreaths", name),
            },
        );
    }
    for (name, (alg_name, md)) in &ws.modules {
        raw.modules.insert(
            name.clone(),
            RawModule {
                algebra: alg_name.clone(),
                m: word(&md.m),
                mu: find_mor_name(ws, &md.mu),
                unchecked: unchecked("modules", name),
            },
        );
    }
    for (name, em) in &ws.entwined {
        raw.entwined.insert(
            name.clone(),
            RawEntwined {
                cowreath: find_cowreath_name(ws, &em.cw),
                m: word(&em.m),
                mu: find_mor_name(ws, &em.mu),
                rho: find_mor_name(ws, &em.rho),
                unchecked: unchecked("entwined", name),
            },
        );
    }
    for (name, dd) in &ws.dualities {
        raw.dualities.insert(
            name.clone(),
            RawDuality {
                x: word(&dd.x),
                y: word(&dd.y),
                b: find_mor_name(ws, &dd.b),
                d: find_mor_name(ws, &dd.d),
                unchecked: unchecked("dualities", name),
            },
        );
    }
    serde_json::to_string_pretty(&raw).expect("workspace serializes")
}

fn find_mor_name(ws: &Workspace, m: &Mor) -> String {
    ws.morphisms
        .iter()
        .find(|(_, v)| *v == m)
        .map(|(k, _)| k.clone())
        .expect("structure references a registered morphism")
}

fn find_algebra_name(ws: &Workspace, a: &Algebra) -> String {
    ws.algebras
        .iter()
        .find(|(_, v)| *v == a)
        .map(|(k, _)| k.clone())
        .expect("transfer references a registered algebra")
}

fn find_transfer_name(ws: &Workspace, t: &TransferMorphism) -> String {
    ws.transfers
        .iter()
        .find(|(_, v)| *v == t)
        .map(|(k, _)| k.clone())
        .expect("cowreath references a registered transfer")
}

fn find_cowreath_name(ws: &Workspace, c: &Cowreath) -> String {
    ws.cowreaths
        .iter()
        .find(|(_, v)| *v == c)
        .map(|(k, _)| k.clone())
        .expect("entwined module references a registered cowreath")
}

/// A bundled fixture: a workspace plus the exact set of condition
/// identifiers its battery is designated to fail (empty for the sound
/// fixtures) and the solver verdicts expected on it.
#[derive(Clone, Debug)]
pub struct FixtureEntry {
    pub name: String,
    pub description: String,
    pub workspace: Workspace,
    /// Fully-qualified condition ids (`kind/name/id`) expected to fail.
    pub designated_failures: Vec<String>,
    /// Expected solver verdicts on the primary cowreath, when meaningful:
    /// (frobenius, coseparable, g-separable).
    pub frobenius: Option<bool>,
    pub coseparable: Option<bool>,
    pub g_separable: Option<bool>,
}

/// Outcome of running a fixture's battery of checkers.
#[derive(Clone, Debug)]
pub struct BatteryOutcome {
    pub checks: Vec<(String, bool)>,
    pub failures: Vec<String>,
}

/// Runs every checker the workspace's declarations call for. Downstream
/// checks are skipped when a prerequisite failed (a cowreath over a broken
/// transfer map is not checked further).
pub fn run_battery(ws: &Workspace) -> Result<BatteryOutcome> {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let field = ws.field;

    let mut record = |prefix: String, report: &crate::report::Report| {
        for e in &report.entries {
            checks.push((format!("{prefix}/{}", e.id), e.pass));
        }
    };

    for (name, alg) in &ws.algebras {
        record(format!("algebras/{name}"), &check_algebra(alg)?);
    }
    for (name, co) in &ws.coalgebras {
        record(format!("coalgebras/{name}"), &check_coalgebra(co)?);
    }
    let mut transfer_ok: BTreeMap<&str, bool> = BTreeMap::new();
    for (name, t) in &ws.transfers {
        let report = check_transfer(t)?;
        transfer_ok.insert(name, report.passed());
        record(format!("transfer/{name}"), &report);
    }
    let mut cowreath_ok: BTreeMap<&str, bool> = BTreeMap::new();
    for (name, cw) in &ws.cowreaths {
        let base_name = find_transfer_name(ws, &cw.base);
        if !transfer_ok.get(base_name.as_str()).copied().unwrap_or(false) {
            continue;
        }
        let report = check_cowreath(cw)?;
        cowreath_ok.insert(name, report.passed());
        record(format!("cowreaths/{name}"), &report);
        if report.passed() {
            let dual = make_duality_data(cw.x(), field);
            let wr = wreath_from_cowreath(cw, &dual)?;
            record(format!("wreaths/{name}"), &check_right_wreath(&wr)?);
        }
    }
    for (name, (alg_name, md)) in &ws.modules {
        let alg = &ws.algebras[alg_name];
        record(format!("modules/{name}"), &check_right_module(md, alg)?);
    }
    for (name, em) in &ws.entwined {
        let cw_name = find_cowreath_name(ws, &em.cw);
        if !cowreath_ok.get(cw_name.as_str()).copied().unwrap_or(false) {
            continue;
        }
        record(format!("entwined/{name}"), &check_entwined_module(em)?);
    }
    for (name, dd) in &ws.dualities {
        record(format!("dualities/{name}"), &check_adjunction(dd)?);
    }

    let failures = checks
        .iter()
        .filter(|(_, pass)| !pass)
        .map(|(id, _)| id.clone())
        .collect();
    Ok(BatteryOutcome { checks, failures })
}

/// Builds a workspace for one cowreath, deriving names from a prefix.
pub fn workspace_of_cowreath(cw: &Cowreath, extras: &[(&str, &EntwinedModule)]) -> Workspace {
    let mut ws = Workspace {
        field: cw.field(),
        ..Workspace::default()
    };
    for g in cw.alg().a.factors() {
        ws.objects.insert(g.name.clone(), g.clone());
    }
    for g in cw.x().factors() {
        ws.objects.insert(g.name.clone(), g.clone());
    }
    ws.morphisms.insert("m".into(), cw.alg().m.clone());
    ws.morphisms.insert("unit".into(), cw.alg().unit.clone());
    ws.morphisms.insert("psi".into(), cw.base.psi.clone());
    ws.morphisms.insert("delta".into(), cw.delta.clone());
    ws.morphisms.insert("eps".into(), cw.eps.clone());
    ws.algebras.insert("A".into(), cw.alg().clone());
    ws.transfers.insert("X".into(), cw.base.clone());
    ws.cowreaths.insert("cw".into(), cw.clone());
    for (name, em) in extras {
        for g in em.m.factors() {
            ws.objects.entry(g.name.clone()).or_insert_with(|| g.clone());
        }
        ws.morphisms.insert(format!("{name}.mu"), em.mu.clone());
        ws.morphisms.insert(format!("{name}.rho"), em.rho.clone());
        ws.entwined.insert((*name).to_string(), (*em).clone());
    }
    ws
}

fn mark_all_unchecked(ws: &mut Workspace) {
    ws.unchecked.clear();
    for name in ws.algebras.keys() {
        ws.unchecked.push(format!("algebras/{name}"));
    }
    for name in ws.transfers.keys() {
        ws.unchecked.push(format!("transfer/{name}"));
    }
    for name in ws.cowreaths.keys() {
        ws.unchecked.push(format!("cowreaths/{name}"));
    }
    for name in ws.entwined.keys() {
        ws.unchecked.push(format!("entwined/{name}"));
    }
}

/// The bundled registry: the four sound fixtures plus mutated-fail
/// variants, each with the exact condition set it is designed to fail.
pub fn list_fixtures(field: Field) -> Vec<FixtureEntry> {
    let mut entries = Vec::new();

    let f0 = fixtures::f0(field);
    let f0_cofree = crate::entwine::cofree_entwined(&f0, &fixtures::regular_module(&f0))
        .expect("cofree module on the regular module");
    entries.push(FixtureEntry {
        name: "F0".into(),
        description: "trivial cowreath, all carriers one-dimensional".into(),
        workspace: workspace_of_cowreath(&f0, &[("cofree", &f0_cofree)]),
        designated_failures: vec![],
        frobenius: Some(true),
        coseparable: Some(true),
        g_separable: Some(true),
    });

    let f1 = fixtures::f1(field);
    let f1_cofree = crate::entwine::cofree_entwined(&f1, &fixtures::regular_module(&f1))
        .expect("cofree module on the regular module");
    entries.push(FixtureEntry {
        name: "F1".into(),
        description: "group-like two-dimensional coalgebra over the base field".into(),
        workspace: workspace_of_cowreath(
            &f1,
            &[
                ("regular", &fixtures::regular_comodule(&f1)),
                ("cofree", &f1_cofree),
            ],
        ),
        designated_failures: vec![],
        frobenius: Some(true),
        coseparable: Some(true),
        g_separable: Some(true),
    });

    let f2 = fixtures::f2(field);
    entries.push(FixtureEntry {
        name: "F2".into(),
        description: "divided-power coalgebra over the base field".into(),
        workspace: workspace_of_cowreath(&f2, &[("regular", &fixtures::regular_comodule(&f2))]),
        designated_failures: vec![],
        frobenius: Some(true),
        coseparable: Some(false),
        g_separable: Some(true),
    });

    let f3 = fixtures::f3(field);
    let cofree = crate::entwine::cofree_entwined(&f3, &fixtures::regular_module(&f3))
        .expect("cofree module on the regular module");
    entries.push(FixtureEntry {
        name: "F3".into(),
        description: "entwining of the group algebra of Z/2 with itself".into(),
        workspace: workspace_of_cowreath(&f3, &[("cofree", &cofree)]),
        designated_failures: vec![],
        frobenius: Some(true),
        coseparable: Some(true),
        g_separable: Some(true),
    });

    // Mutants: each designed to fail exactly the conditions listed.
    let mut bad_psi = workspace_of_cowreath(&fixtures::f3_bad_psi(field), &[]);
    mark_all_unchecked(&mut bad_psi);
    entries.push(FixtureEntry {
        name: "F3-bad-psi".into(),
        description: "psi(g,g) redirected; breaks the multiplicativity law".into(),
        workspace: bad_psi,
        designated_failures: vec!["transfer/X/(ta)(a)".into()],
        frobenius: None,
        coseparable: None,
        g_separable: None,
    });

    let mut bad_delta = workspace_of_cowreath(&fixtures::f3_bad_delta(field), &[]);
    mark_all_unchecked(&mut bad_delta);
    entries.push(FixtureEntry {
        name: "F3-bad-delta".into(),
        description: "comultiplication perturbed: coassociativity and the right counit law break".into(),
        workspace: bad_delta,
        designated_failures: vec![
            "cowreaths/cw/(pdf)(b)".into(),
            "cowreaths/cw/(pdf)(e)".into(),
        ],
        frobenius: None,
        coseparable: None,
        g_separable: None,
    });

    let mut skew_eps = workspace_of_cowreath(&fixtures::f3_skew_eps(field), &[]);
    mark_all_unchecked(&mut skew_eps);
    entries.push(FixtureEntry {
        name: "F3-skew-eps".into(),
        description: "counit skewed on one basis vector: hom compatibility and both counit laws break".into(),
        workspace: skew_eps,
        designated_failures: vec![
            "cowreaths/cw/(pdf)(c)".into(),
            "cowreaths/cw/(pdf)(d)".into(),
            "cowreaths/cw/(pdf)(e)".into(),
        ],
        frobenius: None,
        coseparable: None,
        g_separable: None,
    });

    let mut bad_eps = workspace_of_cowreath(&fixtures::f3_bad_eps(field), &[]);
    mark_all_unchecked(&mut bad_eps);
    entries.push(FixtureEntry {
        name: "F3-bad-eps".into(),
        description: "counit scaled; both counit laws break".into(),
        workspace: bad_eps,
        designated_failures: vec![
            "cowreaths/cw/(pdf)(d)".into(),
            "cowreaths/cw/(pdf)(e)".into(),
        ],
        frobenius: None,
        coseparable: None,
        g_separable: None,
    });

    let f2 = fixtures::f2(field);
    let mut bad_c1 = workspace_of_cowreath(&f2, &[("mutant", &fixtures::f2_comodule_bad_c1(field))]);
    mark_all_unchecked(&mut bad_c1);
    entries.push(FixtureEntry {
        name: "F2-bad-c1".into(),
        description: "coaction perturbed by a counit-invisible term".into(),
        workspace: bad_c1,
        designated_failures: vec!["entwined/mutant/(c1)".into()],
        frobenius: None,
        coseparable: None,
        g_separable: None,
    });

    let mut bad_c2 = workspace_of_cowreath(&f2, &[("mutant", &fixtures::f2_comodule_bad_c2(field))]);
    mark_all_unchecked(&mut bad_c2);
    entries.push(FixtureEntry {
        name: "F2-bad-c2".into(),
        description: "zero coaction: only the counit law can fail".into(),
        workspace: bad_c2,
        designated_failures: vec!["entwined/mutant/(c2)".into()],
        frobenius: None,
        coseparable: None,
        g_separable: None,
    });

    let f3 = fixtures::f3(field);
    let mut bad_c3 = workspace_of_cowreath(&f3, &[("mutant", &fixtures::f3_module_bad_c3(field))]);
    mark_all_unchecked(&mut bad_c3);
    entries.push(FixtureEntry {
        name: "F3-bad-c3".into(),
        description: "coaction twisted against the transfer compatibility".into(),
        workspace: bad_c3,
        designated_failures: vec!["entwined/mutant/(c3)".into()],
        frobenius: None,
        coseparable: None,
        g_separable: None,
    });

    entries
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_workspace_parses() {
        let text = r#"{"schema": "cowreath-kit/1", "field": "Q", "objects": {"X": 1}}"#;
        let ws = parse_workspace(text.as_bytes()).unwrap();
        assert_eq!(ws.objects["X"].dim, 1);
    }

    #[test]
    fn shape_mismatch_is_reported_with_path() {
        let text = r#"{
            "schema": "cowreath-kit/1", "field": "Q",
            "objects": {"X": 2},
            "morphisms": {"bad": {"dom": ["X", "X"], "cod": ["X"], "mat": [["1","0","0"],["0","1","0"],["0","0","1"]]}}
        }"#;
        let err = parse_workspace(text.as_bytes()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("/morphisms/bad"), "{msg}");
    }

    #[test]
    fn bad_scalar_is_reported_with_path() {
        let text = r#"{
            "schema": "cowreath-kit/1", "field": "Q",
            "objects": {"X": 1},
            "morphisms": {"bad": {"dom": ["X"], "cod": ["X"], "mat": [["1/0"]]}}
        }"#;
        let err = parse_workspace(text.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("/morphisms/bad/mat/0/0"));
    }

    #[test]
    fn unknown_reference_is_reported() {
        let text = r#"{
            "schema": "cowreath-kit/1", "field": "Q",
            "morphisms": {"f": {"dom": ["Y"], "cod": ["Y"], "mat": [["1"]]}}
        }"#;
        let err = parse_workspace(text.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("unknown object"));
    }

    #[test]
    fn fixture_f3_roundtrips() {
        let ws = workspace_of_cowreath(&fixtures::f3(Field::Q), &[]);
        let text = serialize_workspace(&ws);
        let back = parse_workspace(text.as_bytes()).unwrap();
        let text2 = serialize_workspace(&back);
        assert_eq!(text, text2);
        assert_eq!(back.cowreaths["cw"], ws.cowreaths["cw"]);
    }

    #[test]
    fn battery_on_f3_all_pass() {
        let ws = workspace_of_cowreath(&fixtures::f3(Field::Q), &[]);
        let outcome = run_battery(&ws).unwrap();
        assert!(outcome.failures.is_empty(), "{:?}", outcome.failures);
        assert!(outcome
            .checks
            .iter()
            .any(|(id, _)| id == "cowreaths/cw/(pdf)(e)"));
        assert!(outcome
            .checks
            .iter()
            .any(|(id, _)| id == "wreaths/cw/(rightwreath)(e)"));
    }

    #[test]
    fn registry_matches_designations() {
        for entry in list_fixtures(Field::Q) {
            let outcome = run_battery(&entry.workspace).unwrap();
            assert_eq!(
                outcome.failures, entry.designated_failures,
                "fixture {}",
                entry.name
            );
        }
    }

    #[test]
    fn invalid_structure_needs_the_unchecked_marker() {
        // A coalgebra whose counit law fails is rejected on parse unless it
        // carries `"unchecked": true`.
        let body = r#"
            "objects": {"C": 2},
            "morphisms": {
                "delta": {"dom": ["C"], "cod": ["C","C"],
                          "mat": [["1","0"],["0","0"],["0","0"],["0","1"]]},
                "eps": {"dom": ["C"], "cod": [], "mat": [["0","1"]]}
            },
            "coalgebras": {"bad": {"c": ["C"], "delta": "delta", "counit": "eps"UNCHECKED}}
        "#;
        let strict = format!(
            r#"{{"schema": "cowreath-kit/1", "field": "Q", {}}}"#,
            body.replace("UNCHECKED", "")
        );
        let err = parse_workspace(strict.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("mark `unchecked`"), "{err}");

        let relaxed = format!(
            r#"{{"schema": "cowreath-kit/1", "field": "Q", {}}}"#,
            body.replace("UNCHECKED", r#", "unchecked": true"#)
        );
        let ws = parse_workspace(relaxed.as_bytes()).unwrap();
        assert!(ws.unchecked.contains(&"coalgebras/bad".to_string()));
    }

    #[test]
    fn fp_workspace_parses_mod_literals() {
        let text = r#"{
            "schema": "cowreath-kit/1", "field": "F101",
            "objects": {"X": 1},
            "morphisms": {"f": {"dom": ["X"], "cod": ["X"], "mat": [["12 mod 101"]]}}
        }"#;
        let ws = parse_workspace(text.as_bytes()).unwrap();
        assert_eq!(ws.field, Field::Fp(101));
    }

    #[test]
    fn field_override_reinterprets_scalars() {
        let ws = workspace_of_cowreath(&fixtures::f3(Field::Q), &[]);
        let text = serialize_workspace(&ws);
        let over = parse_workspace_with_field(text.as_bytes(), Some(Field::Fp(7))).unwrap();
        assert_eq!(over.field, Field::Fp(7));
        assert!(run_battery(&over).unwrap().failures.is_empty());
    }
}
