//! `cwk`: batch verifier and constructor for cowreath workspaces.
//!
//! Every subcommand reads a workspace file, runs checkers or solvers, and
//! prints a report (human-readable by default, JSON with `--json`). Exit
//! code 0 means every requested verdict passed or matched expectations,
//! 1 means a check failed, 2 means the input could not be used.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use cwk_core::coring::{
    check_coring, check_frobenius_coring, coring_adjunction, coring_from_cowreath,
    dual_ring_on_ya, quotient_level_action,
};
use cwk_core::entwine::Cowreath;
use cwk_core::error::Error;
use cwk_core::exactlin::{Field, Mat};
use cwk_core::frobsep::{
    build_natural_transformations, build_phi, build_psi, check_frobenius_system, maschke_lift,
    search_frobenius, solve_g_separability, solve_separability, Feasibility, FrobeniusSearch,
    FrobeniusSystem,
};
use cwk_core::moncat::{make_duality_data, DualityData, Mor};
use cwk_core::report::Report;
use cwk_core::workspace::{
    list_fixtures, parse_workspace_with_field, run_battery, serialize_workspace, Workspace,
};
use cwk_core::wreath::{
    check_right_wreath, from_smash_module, smash_consistency, smash_from_cowreath,
    to_smash_module, wreath_from_cowreath, SmashConsistencyInputs,
};

#[derive(Parser)]
#[command(name = "cwk", version, about = "exact checker for cowreath workspaces")]
struct Cli {
    /// Emit the report as JSON (stable across runs for fixed inputs).
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to a file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WorkspaceArg {
    /// Workspace file (JSON, schema cowreath-kit/1).
    file: PathBuf,

    /// Cowreath to operate on (defaults to the only one declared).
    #[arg(long)]
    cowreath: Option<String>,

    /// Declared duality data to use instead of the standard dual basis.
    #[arg(long)]
    duality: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check every structure declared in the workspace.
    Check {
        #[command(flatten)]
        ws: WorkspaceArg,
    },
    /// Dualize: mirrored transfer map and the wreath obtained from the
    /// cowreath, with their laws checked.
    Dual {
        #[command(flatten)]
        ws: WorkspaceArg,
    },
    /// Build the smash product algebra and check it.
    Smash {
        #[command(flatten)]
        ws: WorkspaceArg,
        /// Write a workspace holding the smash algebra to this file.
        #[arg(long = "emit-workspace")]
        emit: Option<PathBuf>,
    },
    /// Transport every declared entwined module to the smash product side
    /// and back, checking exact recovery both ways.
    Roundtrip {
        #[command(flatten)]
        ws: WorkspaceArg,
    },
    /// Check a declared Frobenius system, or search for one.
    Frobenius {
        #[command(flatten)]
        ws: WorkspaceArg,
        /// Morphism name of the Frobenius element (default `t`).
        #[arg(long, default_value = "t")]
        t: String,
        /// Morphism name of the Casimir morphism (default `B`).
        #[arg(long, default_value = "B")]
        b: String,
        /// Search for a system instead of reading one from the workspace.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        trials: u32,
        /// Include the comparison map built from `t` in the report.
        #[arg(long)]
        phi: bool,
        /// Include the comparison map built from `B` in the report.
        #[arg(long)]
        psi: bool,
    },
    /// Decide coseparability and right-adjoint separability exactly.
    Separability {
        #[command(flatten)]
        ws: WorkspaceArg,
    },
    /// Build the coring, its adjunction, and the cross-level checks.
    Coring {
        #[command(flatten)]
        ws: WorkspaceArg,
    },
    /// Lift a module-level section of an entwined morphism.
    Maschke {
        #[command(flatten)]
        ws: WorkspaceArg,
        /// Name of the entwined morphism to split (declared as a morphism).
        #[arg(long)]
        f: String,
        /// Name of the module-level section.
        #[arg(long)]
        s: String,
        /// Name of the declared entwined module the morphism starts from.
        #[arg(long)]
        from: String,
        /// Name of the declared entwined module the morphism lands in.
        #[arg(long)]
        to: String,
    },
    /// Run the bundled fixture registry against its expectations.
    Fixtures {
        /// Write each bundled fixture as a workspace file into a directory.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

struct Output {
    command: String,
    entries: Vec<(String, bool, Option<Mat>)>,
    artifacts: BTreeMap<String, Value>,
    notes: Vec<String>,
}

impl Output {
    fn new(command: &str) -> Output {
        Output {
            command: command.to_string(),
            entries: Vec::new(),
            artifacts: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    fn add_report(&mut self, prefix: &str, report: &Report) {
        for e in &report.entries {
            let id = if prefix.is_empty() {
                e.id.clone()
            } else {
                format!("{prefix}/{}", e.id)
            };
            let residual = if e.pass { None } else { Some(e.residual.clone()) };
            self.entries.push((id, e.pass, residual));
        }
    }

    fn add_flag(&mut self, id: &str, pass: bool) {
        self.entries.push((id.to_string(), pass, None));
    }

    fn add_matrix(&mut self, name: &str, mat: &Mat) {
        self.artifacts.insert(name.to_string(), mat_json(mat));
    }

    fn passed(&self) -> bool {
        self.entries.iter().all(|(_, pass, _)| *pass)
    }

    fn render(&self, as_json: bool) -> String {
        if as_json {
            let entries: Vec<Value> = self
                .entries
                .iter()
                .map(|(id, pass, residual)| {
                    let mut obj = Map::new();
                    obj.insert("id".into(), json!(id));
                    obj.insert("verdict".into(), json!(if *pass { "pass" } else { "fail" }));
                    obj.insert("residual_zero".into(), json!(pass));
                    if let Some(m) = residual {
                        obj.insert("residual".into(), mat_json(m));
                    }
                    Value::Object(obj)
                })
                .collect();
            let v = json!({
                "command": self.command,
                "entries": entries,
                "artifacts": self.artifacts,
                "notes": self.notes,
                "passed": self.passed(),
            });
            serde_json::to_string_pretty(&v).expect("report serializes")
        } else {
            let mut s = format!("== {}\n", self.command);
            for (id, pass, _) in &self.entries {
                s.push_str(&format!("{} {}\n", if *pass { "pass" } else { "FAIL" }, id));
            }
            for note in &self.notes {
                s.push_str(&format!("note: {note}\n"));
            }
            for (name, value) in &self.artifacts {
                s.push_str(&format!("{name}: {value}\n"));
            }
            s.push_str(&format!(
                "overall: {}\n",
                if self.passed() { "pass" } else { "FAIL" }
            ));
            s
        }
    }
}

fn mat_json(m: &Mat) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            let row: Vec<Value> = (0..m.cols())
                .map(|j| json!(m.get(i, j).canonical()))
                .collect();
            Value::Array(row)
        })
        .collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": rows})
}

fn field_from_env() -> Result<Option<Field>, Error> {
    match std::env::var("CWK_FIELD") {
        Ok(v) if v == "Q" => Ok(Some(Field::Q)),
        Ok(v) => {
            if let Some(p) = v.strip_prefix('F') {
                let p: u64 = p.parse().map_err(|_| Error::Workspace {
                    path: "CWK_FIELD".into(),
                    reason: format!("bad field `{v}`"),
                })?;
                Ok(Some(Field::prime(p)?))
            } else {
                Err(Error::Workspace {
                    path: "CWK_FIELD".into(),
                    reason: format!("bad field `{v}`"),
                })
            }
        }
        Err(_) => Ok(None),
    }
}

fn load(ws_arg: &WorkspaceArg) -> Result<Workspace, Error> {
    let bytes = std::fs::read(&ws_arg.file).map_err(|e| Error::Workspace {
        path: ws_arg.file.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_workspace_with_field(&bytes, field_from_env()?)
}

fn the_cowreath<'a>(ws: &'a Workspace, arg: &WorkspaceArg) -> Result<(String, &'a Cowreath), Error> {
    match &arg.cowreath {
        Some(name) => ws
            .cowreaths
            .get(name)
            .map(|c| (name.clone(), c))
            .ok_or_else(|| Error::Workspace {
                path: format!("/cowreaths/{name}"),
                reason: "not declared".into(),
            }),
        None => {
            let mut iter = ws.cowreaths.iter();
            match (iter.next(), iter.next()) {
                (Some((name, cw)), None) => Ok((name.clone(), cw)),
                (None, _) => Err(Error::Workspace {
                    path: "/cowreaths".into(),
                    reason: "no cowreath declared".into(),
                }),
                _ => Err(Error::Workspace {
                    path: "/cowreaths".into(),
                    reason: "several cowreaths declared; pass --cowreath".into(),
                }),
            }
        }
    }
}

fn duality_for(ws: &Workspace, arg: &WorkspaceArg, cw: &Cowreath) -> Result<DualityData, Error> {
    match &arg.duality {
        Some(name) => ws.dualities.get(name).cloned().ok_or_else(|| Error::Workspace {
            path: format!("/dualities/{name}"),
            reason: "not declared".into(),
        }),
        None => Ok(make_duality_data(cw.x(), cw.field())),
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Check { ws } => {
            let workspace = load(ws)?;
            let outcome = run_battery(&workspace)?;
            let mut out = Output::new("check");
            for (id, pass) in outcome.checks {
                out.add_flag(&id, pass);
            }
            Ok(out)
        }
        Command::Dual { ws } => {
            let workspace = load(ws)?;
            let (name, cw) = the_cowreath(&workspace, ws)?;
            let dual = duality_for(&workspace, ws, cw)?;
            let mut out = Output::new("dual");
            let wr = wreath_from_cowreath(cw, &dual)?;
            out.add_report(&format!("wreath/{name}"), &check_right_wreath(&wr)?);
            out.add_matrix("phi", &wr.base.phi.mat);
            out.add_matrix("m_Y", &wr.m_y.mat);
            out.add_matrix("eta_Y", &wr.eta_y.mat);
            Ok(out)
        }
        Command::Smash { ws, emit } => {
            let workspace = load(ws)?;
            let (name, cw) = the_cowreath(&workspace, ws)?;
            let dual = duality_for(&workspace, ws, cw)?;
            let sa = smash_from_cowreath(cw, &dual)?;
            let mut out = Output::new("smash");
            out.add_report(
                &format!("smash/{name}"),
                &cwk_core::structures::check_algebra(&sa.algebra)?,
            );
            out.add_matrix("m_sharp", &sa.algebra.m.mat);
            out.add_matrix("eta_sharp", &sa.algebra.unit.mat);
            if let Some(path) = emit {
                let emitted = smash_workspace(&sa)?;
                std::fs::write(path, serialize_workspace(&emitted)).map_err(|e| {
                    Error::Workspace {
                        path: path.display().to_string(),
                        reason: e.to_string(),
                    }
                })?;
                out.notes.push(format!("smash workspace written to {}", path.display()));
            }
            Ok(out)
        }
        Command::Roundtrip { ws } => {
            let workspace = load(ws)?;
            let (_, cw) = the_cowreath(&workspace, ws)?;
            let dual = duality_for(&workspace, ws, cw)?;
            let sa = smash_from_cowreath(cw, &dual)?;
            let mut out = Output::new("roundtrip");
            if workspace.entwined.is_empty() {
                out.notes.push("no entwined modules declared".into());
            }
            for (name, em) in &workspace.entwined {
                if em.cw != *cw {
                    continue;
                }
                let n = to_smash_module(em, &sa)?;
                let module_ok =
                    cwk_core::structures::check_right_module(&n, &sa.algebra)?.passed();
                out.add_flag(&format!("roundtrip/{name}/module-laws"), module_ok);
                let back = from_smash_module(&n, &sa)?;
                out.add_flag(
                    &format!("roundtrip/{name}/recovered"),
                    back.mu == em.mu && back.rho == em.rho,
                );
            }
            let free = cwk_core::structures::RightModule::regular(&sa.algebra);
            let em = from_smash_module(&free, &sa)?;
            let again = to_smash_module(&em, &sa)?;
            out.add_flag("roundtrip/free-rank-1/recovered", again.mu == free.mu);
            Ok(out)
        }
        Command::Frobenius {
            ws,
            t,
            b,
            search,
            seed,
            trials,
            phi,
            psi,
        } => {
            let workspace = load(ws)?;
            let (name, cw) = the_cowreath(&workspace, ws)?;
            let dual = duality_for(&workspace, ws, cw)?;
            let mut out = Output::new("frobenius");
            let system: Option<FrobeniusSystem> = if *search {
                match search_frobenius(cw, &dual, *trials, *seed)? {
                    FrobeniusSearch::Found(fs) => Some(fs),
                    FrobeniusSearch::NotFound { t_space_dim } => {
                        out.add_flag(
                            &format!("frobenius/{name}/no-verified-system (t-space dim {t_space_dim})"),
                            false,
                        );
                        None
                    }
                }
            } else {
                let t_mor = workspace.morphisms.get(t).cloned();
                let b_mor = workspace.morphisms.get(b).cloned();
                match (t_mor, b_mor) {
                    (Some(t_mor), Some(b_mor)) => {
                        Some(FrobeniusSystem::new(cw.clone(), t_mor, b_mor)?)
                    }
                    _ => {
                        return Err(Error::Workspace {
                            path: format!("/morphisms/{t},{b}"),
                            reason: "no declared system; pass --search or declare the morphisms"
                                .into(),
                        })
                    }
                }
            };
            if let Some(fs) = &system {
                out.add_report(&format!("frobenius/{name}"), &check_frobenius_system(fs)?);
                out.add_matrix("t", &fs.t.mat);
                out.add_matrix("B", &fs.b.mat);
                let samples = vec![cwk_core::structures::RightModule::regular(cw.alg())];
                let nat = build_natural_transformations(fs, &samples, &[])?;
                out.add_report(&format!("frobenius/{name}/nat"), &nat);
                if *phi {
                    let c = build_phi(cw, &dual, &fs.t)?;
                    out.add_matrix("Phi", &c.map.mat);
                    out.add_flag("frobenius/Phi-invertible", c.invertible);
                }
                if *psi {
                    let c = build_psi(cw, &dual, &fs.b)?;
                    out.add_matrix("Psi", &c.map.mat);
                    out.add_flag("frobenius/Psi-invertible", c.invertible);
                }
            }
            Ok(out)
        }
        Command::Separability { ws } => {
            let workspace = load(ws)?;
            let (name, cw) = the_cowreath(&workspace, ws)?;
            let mut out = Output::new("separability");
            match solve_separability(cw)? {
                Feasibility::Feasible(cm) => {
                    out.notes.push(format!("coseparable: yes ({name})"));
                    out.add_matrix("B", &cm.b.mat);
                    out.add_report(&format!("separability/{name}"), &cwk_core::frobsep::check_casimir(&cm)?);
                }
                Feasibility::Infeasible(cert) => {
                    out.notes.push(format!(
                        "coseparable: no (infeasible; rank {} vs augmented {})",
                        cert.system_rank, cert.augmented_rank
                    ));
                }
            }
            match solve_g_separability(cw)? {
                Feasibility::Feasible(t) => {
                    out.notes.push("right adjoint separable: yes".into());
                    out.add_matrix("t", &t.mat);
                }
                Feasibility::Infeasible(cert) => {
                    out.notes.push(format!(
                        "right adjoint separable: no (rank {} vs augmented {})",
                        cert.system_rank, cert.augmented_rank
                    ));
                }
            }
            Ok(out)
        }
        Command::Coring { ws } => {
            let workspace = load(ws)?;
            let (name, cw) = the_cowreath(&workspace, ws)?;
            let dual = duality_for(&workspace, ws, cw)?;
            let mut out = Output::new("coring");
            let co = coring_from_cowreath(cw)?;
            out.add_report(&format!("coring/{name}"), &check_coring(&co)?);
            let adj = coring_adjunction(cw, &dual)?;
            out.add_report(&format!("coring/{name}/adjunction"), &adj.report);
            out.add_report(
                &format!("coring/{name}/frobenius"),
                &check_frobenius_coring(cw, &dual, None)?,
            );
            let sa = smash_from_cowreath(cw, &dual)?;
            let (m_ya, eta_ya) = dual_ring_on_ya(cw, &dual)?;
            let mu_tilde = quotient_level_action(&adj)?;
            let consistency = smash_consistency(
                &sa,
                &SmashConsistencyInputs {
                    m_ya: &m_ya,
                    eta_ya: &eta_ya,
                    mu_tilde: &mu_tilde,
                    q: &adj.ax_ya.q,
                },
            )?;
            out.add_report(&format!("coring/{name}/smash-consistency"), &consistency);
            Ok(out)
        }
        Command::Maschke { ws, f, s, from, to } => {
            let workspace = load(ws)?;
            let (name, cw) = the_cowreath(&workspace, ws)?;
            let lookup = |n: &str| -> Result<Mor, Error> {
                workspace
                    .morphisms
                    .get(n)
                    .cloned()
                    .ok_or_else(|| Error::Workspace {
                        path: format!("/morphisms/{n}"),
                        reason: "not declared".into(),
                    })
            };
            let em = |n: &str| -> Result<_, Error> {
                workspace.entwined.get(n).cloned().ok_or_else(|| Error::Workspace {
                    path: format!("/entwined/{n}"),
                    reason: "not declared".into(),
                })
            };
            let cm = solve_separability(cw)?;
            let cm = cm.feasible().ok_or_else(|| {
                Error::Precondition("no normalized Casimir morphism: lifting unavailable".into())
            })?;
            let (lifted, report) = maschke_lift(&em(from)?, &em(to)?, cm, &lookup(f)?, &lookup(s)?)?;
            let mut out = Output::new("maschke");
            out.add_report(&format!("maschke/{name}"), &report);
            out.add_matrix("lifted-section", &lifted.mat);
            Ok(out)
        }
        Command::Fixtures { emit } => {
            let field = field_from_env()?.unwrap_or(Field::Q);
            let mut out = Output::new("fixtures");
            for entry in list_fixtures(field) {
                let outcome = run_battery(&entry.workspace)?;
                let matches = outcome.failures == entry.designated_failures;
                out.add_flag(&format!("fixtures/{}/designated-failures", entry.name), matches);
                if let (Some(expect), true) = (entry.frobenius, entry.designated_failures.is_empty()) {
                    let (_, cw) = entry
                        .workspace
                        .cowreaths
                        .iter()
                        .next()
                        .map(|(k, v)| (k.clone(), v.clone()))
                        .expect("fixture has a cowreath");
                    let dual = make_duality_data(cw.x(), field);
                    let got = search_frobenius(&cw, &dual, 32, 0)?.found().is_some();
                    out.add_flag(&format!("fixtures/{}/frobenius", entry.name), got == expect);
                }
                if let Some(expect) = entry.coseparable {
                    let (_, cw) = entry.workspace.cowreaths.iter().next().unwrap();
                    let got = solve_separability(cw)?.is_feasible();
                    out.add_flag(&format!("fixtures/{}/coseparable", entry.name), got == expect);
                }
                if let Some(expect) = entry.g_separable {
                    let (_, cw) = entry.workspace.cowreaths.iter().next().unwrap();
                    let got = solve_g_separability(cw)?.is_feasible();
                    out.add_flag(&format!("fixtures/{}/g-separable", entry.name), got == expect);
                }
                if let Some(dir) = emit {
                    std::fs::create_dir_all(dir).map_err(|e| Error::Workspace {
                        path: dir.display().to_string(),
                        reason: e.to_string(),
                    })?;
                    let path = dir.join(format!("{}.json", entry.name.to_lowercase()));
                    std::fs::write(&path, serialize_workspace(&entry.workspace)).map_err(|e| {
                        Error::Workspace {
                            path: path.display().to_string(),
                            reason: e.to_string(),
                        }
                    })?;
                }
            }
            if let Some(dir) = emit {
                out.notes.push(format!("fixtures written to {}", dir.display()));
            }
            Ok(out)
        }
    }
}

/// Packs a smash algebra into a standalone workspace.
fn smash_workspace(sa: &cwk_core::wreath::SmashAlgebra) -> Result<Workspace, Error> {
    let mut ws = Workspace {
        field: sa.algebra.field(),
        ..Workspace::default()
    };
    for g in sa.algebra.a.factors() {
        ws.objects.insert(g.name.clone(), g.clone());
    }
    ws.morphisms.insert("m_sharp".into(), sa.algebra.m.clone());
    ws.morphisms
        .insert("eta_sharp".into(), sa.algebra.unit.clone());
    ws.algebras.insert("smash".into(), sa.algebra.clone());
    Ok(ws)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let rendered = out.render(cli.json);
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("cannot write report: {e}");
                    return ExitCode::from(2);
                }
            } else {
                print!("{rendered}");
            }
            if out.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
