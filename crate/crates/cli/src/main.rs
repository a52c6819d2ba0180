use clap::{Args, Parser, Subcommand};
use hopfpar::error::{Error, Result};
use hopfpar::group::FiniteGroup;
use hopfpar::groupoid::Groupoid;
use hopfpar::hopf::{all_passed, AxiomCheck, GroupDatum, HopfAlgebra};
use hopfpar::hpar::expected::{expected, NAMES};
use hopfpar::hpar::{apar_multiplicity_report, build_hpar, check_partial_rep, kpar_group};
use hopfpar::suites::{run_suite, SUITES};
use hopfpar::Scalar;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

const SCHEMA: &str = "hopfpar/1";

#[derive(Parser)]
#[command(name = "hopfpar", version, about = "Partial representation algebras of finite pointed Hopf algebras")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Progress messages on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupSource {
    /// Builtin group: cyclic:n, klein, s3, d4, dihedral:n, q8, trivial.
    #[arg(long)]
    group: Option<String>,
    /// JSON file {"order": n, "table": [[...]], "labels": [...]}.
    #[arg(long)]
    group_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// K_par G through the groupoid of G.
    Kpar {
        #[command(flatten)]
        source: GroupSource,
    },
    /// H_par of the rank-one Hopf algebra of a group datum (G, χ, a, κ).
    Rankone {
        #[command(flatten)]
        source: GroupSource,
        /// χ on the generator of a cyclic group, or χ on every element as a
        /// comma-separated list. Scalars look like -1, 3/4, i, z8^3.
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        /// Label of the central grouplike a.
        #[arg(long)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        kappa: String,
        /// Truncation degree of the infinite components.
        #[arg(short = 'N', default_value_t = 3)]
        n: usize,
        /// Field containing the scalars: rational or cyclotomic:n.
        #[arg(long)]
        field: Option<String>,
        /// Diff against a stored reference (nilpotent8 or nonnilpotent8).
        #[arg(long)]
        against_paper: Option<String>,
        /// Include the structure constants of every block.
        #[arg(long)]
        export: bool,
    },
    /// Run verification suites, or check a Hopf algebra file.
    Verify {
        /// One of groups, groupoid, hopf, partial-action, smash, convolution, hpar, all.
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_group_order: usize,
        /// Sparse structure constants, in the form of the `hopf_structure` field
        /// written by `rankone --export`.
        #[arg(long)]
        hopf_file: Option<PathBuf>,
    },
}

struct Outcome {
    report: Value,
    passed: bool,
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_group(src: &GroupSource) -> Result<FiniteGroup> {
    match (&src.group, &src.group_file) {
        (Some(spec), _) => FiniteGroup::builtin(spec),
        (None, Some(path)) => FiniteGroup::from_json(&read_json(path)?),
        (None, None) => Err(Error::Parse("one of --group or --group-file is required".into())),
    }
}

fn checks_json(checks: &[AxiomCheck]) -> Value {
    serde_json::to_value(checks).expect("checks serialize")
}

fn field_contains(field: &str, s: &Scalar) -> Result<bool> {
    let m = s.order();
    match field {
        "rational" | "q" => Ok(m <= 2),
        other => {
            let n: u32 = other
                .strip_prefix("cyclotomic:")
                .and_then(|n| n.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::Parse(format!("bad field {other:?}, expected rational or cyclotomic:n")))?;
            // Q(ζ_n) = Q(ζ_2n) for odd n
            let n = if n % 2 == 1 { 2 * n } else { n };
            Ok(n % m == 0 || m <= 2)
        }
    }
}

fn cmd_kpar(src: &GroupSource, verbose: bool) -> Result<Outcome> {
    let g = load_group(src)?;
    let gd = Groupoid::build(&g)?;
    if verbose {
        eprintln!("groupoid: {} objects, {} arrows", gd.objects().len(), gd.arrows().len());
    }
    let k = kpar_group(&g)?;
    let mf = gd.decompose_matrix_form();
    let mut checks = vec![AxiomCheck::new("groupoid axioms", gd.axiom_witness())];
    checks.push(AxiomCheck::new("components are the orbit classes", (!gd.components_match_orbits()).then(|| "mismatch".into())));
    checks.push(AxiomCheck::new(
        "groupoid algebra ≅ ⊕ Mat_m(K G_X)",
        (!mf.verified()).then(|| format!("multiplicative {}, bijective {}", mf.multiplicative, mf.bijective)),
    ));
    checks.push(AxiomCheck::new("ψ: groupoid algebra -> K_par G", k.psi_witness(&gd)));
    checks.extend(check_partial_rep(&k.bracket(), &k.hopf(), k.algebra()));
    let passed = all_passed(&checks);
    let report = json!({
        "command": "kpar",
        "group": g.to_json(),
        "dim": k.dim(),
        "objects": gd.objects().len(),
        "arrows": gd.arrows().len(),
        "blocks": mf.report(&gd),
        "checks": checks_json(&checks),
    });
    Ok(Outcome { report, passed })
}

#[allow(clippy::too_many_arguments)]
fn cmd_rankone(
    src: &GroupSource,
    chi: &str,
    a: &str,
    kappa: &str,
    n: usize,
    field: Option<&str>,
    against: Option<&str>,
    export: bool,
    verbose: bool,
) -> Result<Outcome> {
    let g = load_group(src)?;
    let a = g.index_of(a).map_err(|_| Error::InvalidGroupDatum(format!("a = {a:?} is not a group element")))?;
    let kappa: Scalar = kappa.parse()?;
    let datum = if chi.contains(',') {
        let values = chi.split(',').map(str::parse).collect::<Result<Vec<Scalar>>>()?;
        GroupDatum { group: g.clone(), chi: values, a, kappa }
    } else {
        GroupDatum::cyclic(g.clone(), chi.parse()?, a, kappa)?
    };
    if let Some(f) = field {
        for s in datum.chi.iter().chain([&datum.kappa]) {
            if !field_contains(f, s)? {
                return Err(Error::Parse(format!("{s} does not lie in the field {f}")));
            }
        }
    }
    let reference = against
        .map(|name| expected(name).ok_or_else(|| Error::Parse(format!("unknown reference {name:?}, expected one of {NAMES:?}"))))
        .transpose()?;
    let order = datum.validate()?;
    let h = HopfAlgebra::rank_one(&datum)?;
    if verbose {
        eprintln!("H: dim {}, n = {order}", h.dim());
    }
    let mut checks = h.check_axioms();
    let (grouplikes, _) = h.grouplike_group()?;
    let filtration: Vec<usize> = h.coradical_filtration()?.iter().map(|s| s.dim()).collect();
    checks.push(AxiomCheck::new(
        "grouplikes form G",
        (grouplikes.order() != g.order()).then(|| format!("{} grouplikes", grouplikes.order())),
    ));
    let hopf_report = json!({ "dim": h.dim(), "grouplikes": grouplikes.order(), "coradical_filtration": filtration });
    let datum_report = json!({
        "group": g.to_json(),
        "chi": datum.chi,
        "a": g.label(a),
        "kappa": datum.kappa,
        "n": order,
    });
    let hp = match build_hpar(&h, n) {
        Ok(hp) => hp,
        Err(e @ Error::UnsupportedPresentation(_)) if reference.is_none() => {
            // the Hopf algebra itself is still checked and reported
            let passed = all_passed(&checks);
            let report = json!({
                "command": "rankone",
                "datum": datum_report,
                "hopf": hopf_report,
                "hpar": { "unsupported": { "kind": e.kind(), "message": e.to_string() } },
                "checks": checks_json(&checks),
            });
            return Ok(Outcome { report, passed });
        }
        Err(e) => return Err(e),
    };
    if verbose {
        eprintln!("H_par: dim {}, {} blocks", hp.dim(), hp.blocks().len());
    }
    let apar = hp.apar();
    checks.push(AxiomCheck::new("defining relations hold in A_par", apar.relations_witness()));
    checks.push(AxiomCheck::new("action formula on words of length 2", apar.action_formula_witness()));
    checks.extend(hp.block_checks());
    checks.extend(hp.theta_checks()?);
    checks.extend(hp.partial_rep_checks());
    let mult = apar_multiplicity_report(apar)?;
    for m in &mult {
        checks.push(AxiomCheck::new(
            &format!("components with stabilizer class {} are isomorphic", m.subgroup),
            (!(m.certified && m.count == m.expected)).then(|| format!("{m:?}")),
        ));
    }
    let mut report = json!({
        "command": "rankone",
        "datum": datum_report,
        "hopf": hopf_report,
        "apar": { "dim": apar.dim(), "components": apar.component_report(), "structures": apar.structure_counts() },
        "hpar": hp.report(),
        "multiplicities": mult,
        "caveat": format!("A_par is truncated at degree {n}; H_par ≅ A_par # H is verified on this quotient"),
    });
    if let Some(e) = reference {
        let d = e.diff(&hp)?;
        checks.push(AxiomCheck::new(&format!("matches {}", e.name), (!d.is_empty()).then(|| d.join("; "))));
        report["against_paper"] = e.report(&hp)?;
    }
    if export {
        report["hopf_structure"] = h.to_json();
        report["export"] = hp.export_blocks();
    }
    let passed = all_passed(&checks);
    report["checks"] = checks_json(&checks);
    Ok(Outcome { report, passed })
}

fn cmd_verify(suite: Option<&str>, max_order: usize, hopf_file: Option<&PathBuf>, verbose: bool) -> Result<Outcome> {
    let mut sections = Vec::new();
    let mut passed = true;
    if let Some(path) = hopf_file {
        let h = HopfAlgebra::from_json(&read_json(path)?)?;
        let mut checks = h.check_axioms();
        if all_passed(&checks) {
            let filt = h.coradical_filtration();
            checks.push(AxiomCheck::new("pointed", filt.as_ref().err().map(|e| e.to_string())));
        }
        passed &= all_passed(&checks);
        sections.push(json!({ "suite": "hopf-file", "file": path.display().to_string(), "passed": all_passed(&checks), "checks": checks_json(&checks) }));
    }
    let names: Vec<&str> = match suite {
        Some("all") => SUITES.to_vec(),
        Some(s) if SUITES.contains(&s) => vec![s],
        Some(s) => return Err(Error::Parse(format!("unknown suite {s:?}, expected one of {SUITES:?} or all"))),
        None if hopf_file.is_some() => Vec::new(),
        None => SUITES.to_vec(),
    };
    for name in names {
        if verbose {
            eprintln!("suite {name}");
        }
        let r = run_suite(name, max_order)?;
        passed &= r.passed;
        sections.push(serde_json::to_value(&r).expect("report serializes"));
    }
    let report = json!({ "command": "verify", "max_group_order": max_order, "suites": sections });
    Ok(Outcome { report, passed })
}

fn emit(value: &Value, out: Option<&PathBuf>) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("report serializes") + "\n";
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let v = cli.verbose;
    let result = match &cli.cmd {
        Cmd::Kpar { source } => cmd_kpar(source, v),
        Cmd::Rankone { source, chi, a, kappa, n, field, against_paper, export } => {
            cmd_rankone(source, chi, a, kappa, *n, field.as_deref(), against_paper.as_deref(), *export, v)
        }
        Cmd::Verify { suite, max_group_order, hopf_file } => cmd_verify(suite.as_deref(), *max_group_order, hopf_file.as_ref(), v),
    };
    let (value, code) = match result {
        Ok(o) => {
            let mut r = json!({ "schema": SCHEMA, "passed": o.passed });
            r.as_object_mut().unwrap().extend(o.report.as_object().cloned().unwrap_or_default());
            (r, if o.passed { 0 } else { 1 })
        }
        Err(e) => (json!({ "schema": SCHEMA, "error": { "kind": e.kind(), "message": e.to_string() } }), 2),
    };
    if let Err(e) = emit(&value, cli.out.as_ref()) {
        eprintln!("cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
