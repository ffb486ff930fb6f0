use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use hecke_core::diagram::parse_diagram;
use hecke_core::grading::degree;
use hecke_core::relations::{build_catalog, derive_universal, verify_catalog, HomogeneityReport};
use hecke_core::rescale::{classify_characters, theta_apply};
use hecke_core::{DegreeAssignment, DegreeModel, Generator, Realization};
use serde::Serialize;
use serde_json::json;

use crate::formats::{
    coordinates, load_catalog, rational_json, read_json, read_text, ConfigError, CoxeterSpec,
    CharacterSpec, GradingSpec, GroupSpec, Int, ReportJson, Result,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// What a subcommand prints and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout }
    }
}

pub const EXIT_INHOMOGENEOUS: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Clone, Debug, clap::Args)]
pub struct Common {
    /// Coxeter system and realization (JSON).
    #[arg(long)]
    pub coxeter: PathBuf,
    /// `bigrading`, `original`, `universal`, or a grading spec file.
    #[arg(long, default_value = "bigrading")]
    pub grading: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

struct Loaded {
    real: Realization,
    spec: GradingSpec,
    model: DegreeAssignment,
}

fn load(c: &Common) -> Result<Loaded> {
    let cox: CoxeterSpec = read_json(&c.coxeter)?;
    let real = cox.realization()?;
    let spec = GradingSpec::load(&c.grading)?;
    let model = spec.assignment(&real)?;
    Ok(Loaded { real, spec, model })
}

fn to_json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("serializable report");
    s.push('\n');
    s
}

fn describe_system(real: &Realization) -> String {
    let sys = real.system();
    let mut out = sys.labels().join(" ");
    let pairs: Vec<String> = sys
        .colors()
        .flat_map(|s| (s + 1..sys.rank()).map(move |t| (s, t)))
        .filter(|&(s, t)| !sys.m(s, t).is_two())
        .map(|(s, t)| format!("m({},{})={}", sys.label(s), sys.label(t), sys.m(s, t)))
        .collect();
    if !pairs.is_empty() {
        out.push_str(&format!(" [{}]", pairs.join(", ")));
    }
    out
}

pub fn verify(c: &Common, extra_catalog: Option<&PathBuf>) -> Result<Outcome> {
    let l = load(c)?;
    let mut catalog = build_catalog(&l.real)?;
    if let Some(p) = extra_catalog {
        catalog.extend(load_catalog(p, &l.real)?);
    }
    let report = verify_catalog(&catalog, l.real.system(), &l.model)?;
    let code = if report.all_homogeneous() {
        0
    } else {
        EXIT_INHOMOGENEOUS
    };
    let stdout = match c.format {
        Format::Json => to_json(&report.entries.iter().map(ReportJson::from).collect::<Vec<_>>()),
        Format::Text => verify_text(&l, &report),
    };
    Ok(Outcome { code, stdout })
}

fn verify_text(l: &Loaded, report: &HomogeneityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "system: {}\ngrading: {} in {}",
        describe_system(&l.real),
        l.spec.kind(),
        l.model.group().structure()
    );
    for e in &report.entries {
        if e.homogeneous {
            let d = e.degree.as_ref().map(|d| d.to_string()).unwrap_or_else(|| "-".into());
            let _ = writeln!(out, "ok    {}  degree {}", e.relation, d);
        } else {
            let ws: Vec<String> = e
                .witnesses
                .iter()
                .map(|w| format!("term {}: {}", w.term, w.degree))
                .collect();
            let _ = writeln!(out, "FAIL  {}  {}", e.relation, ws.join("; "));
        }
    }
    let bad = report.failures().count();
    let _ = writeln!(
        out,
        "{} relations, {} homogeneous, {} not",
        report.entries.len(),
        report.entries.len() - bad,
        bad
    );
    out
}

#[derive(Serialize)]
struct DerivedJson {
    lhs: String,
    rhs: String,
    holds: bool,
}

#[derive(Serialize)]
struct UniversalJson {
    structure: String,
    free_rank: usize,
    torsion: Vec<Int>,
    presentation: GroupSpec,
    degrees: Vec<(String, String)>,
    derived: Vec<DerivedJson>,
    certificate: CertificateJson,
}

#[derive(Serialize)]
struct CertificateJson {
    valid: bool,
    invariants_match: bool,
    mutually_inverse: bool,
    forward: Vec<String>,
    backward: Vec<String>,
}

pub fn universal(coxeter: &Path, grading: Option<&str>, format: Format) -> Result<Outcome> {
    let cox: CoxeterSpec = read_json(coxeter)?;
    let real = cox.realization()?;
    let vg = match grading {
        None => None,
        Some(arg) => {
            let spec = GradingSpec::load(arg)?;
            match spec.v_grading(&real)? {
                Some(vg) => Some(vg),
                None => {
                    return Err(ConfigError::Invalid(format!(
                        "universal takes a general grading spec, not {}",
                        spec.kind()
                    )))
                }
            }
        }
    };
    let u = derive_universal(&real, vg.as_ref())?;
    let grp = &u.group;
    let degrees: Vec<(String, String)> = Generator::all(&real)
        .iter()
        .map(|g| {
            (
                g.describe(real.system(), real.basis()),
                u.assignment.generator_degree(g).symbolic(),
            )
        })
        .collect();
    let images = |h: &hecke_core::Hom| -> Vec<String> {
        h.domain()
            .gen_names()
            .iter()
            .zip(h.images())
            .map(|(n, x)| format!("{n} -> {}", x.symbolic()))
            .collect()
    };
    let j = UniversalJson {
        structure: grp.structure(),
        free_rank: grp.free_rank_of(),
        torsion: grp.torsion().into_iter().map(Int).collect(),
        presentation: GroupSpec::of(grp),
        degrees,
        derived: u
            .derived
            .iter()
            .map(|e| DerivedJson {
                lhs: e.lhs.clone(),
                rhs: e.rhs.clone(),
                holds: e.holds,
            })
            .collect(),
        certificate: CertificateJson {
            valid: u.certificate.is_valid(),
            invariants_match: u.certificate.invariants_match,
            mutually_inverse: u.certificate.mutually_inverse,
            forward: images(&u.certificate.forward),
            backward: images(&u.certificate.backward),
        },
    };
    let stdout = match format {
        Format::Json => to_json(&j),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "system: {}", describe_system(&real));
            let _ = writeln!(out, "group: {}", j.structure);
            let _ = writeln!(out, "free rank: {}", j.free_rank);
            let tors: Vec<String> = grp.torsion().iter().map(|d| d.to_string()).collect();
            let _ = writeln!(
                out,
                "torsion: {}",
                if tors.is_empty() { "none".into() } else { tors.join(", ") }
            );
            let _ = writeln!(out, "generators: {}", j.presentation.gens.join(", "));
            let _ = writeln!(out, "relators: {}", j.presentation.rels.len());
            let _ = writeln!(out, "degrees:");
            for (g, d) in &j.degrees {
                let _ = writeln!(out, "  {g} = {d}");
            }
            let _ = writeln!(out, "derived:");
            for e in &j.derived {
                let mark = if e.holds { "holds" } else { "FAILS" };
                let _ = writeln!(out, "  {} = {}  {}", e.lhs, e.rhs, mark);
            }
            let yn = |b: bool| if b { "yes" } else { "no" };
            let _ = writeln!(
                out,
                "certificate: {} (invariants match: {}, mutually inverse: {})",
                if j.certificate.valid { "valid" } else { "INVALID" },
                yn(j.certificate.invariants_match),
                yn(j.certificate.mutually_inverse)
            );
            let _ = writeln!(out, "  forward: {}", j.certificate.forward.join(", "));
            let _ = writeln!(out, "  backward: {}", j.certificate.backward.join(", "));
            out
        }
    };
    Ok(Outcome::ok(stdout))
}

pub fn degree_cmd(c: &Common, diagram: &Path) -> Result<Outcome> {
    let l = load(c)?;
    let d = parse_diagram(&read_text(diagram)?, &l.real)?;
    let x = degree(&d, &l.model)?;
    Ok(Outcome::ok(match c.format {
        Format::Json => to_json(&json!({
            "degree": coordinates(&x),
            "symbolic": x.symbolic(),
        })),
        Format::Text => format!("{x}\n"),
    }))
}

pub fn theta(c: &Common, character: &Path, diagram: &Path) -> Result<Outcome> {
    let l = load(c)?;
    let spec: CharacterSpec = read_json(character)?;
    let chi = spec.build(l.spec.kind(), l.model.group())?;
    let d = parse_diagram(&read_text(diagram)?, &l.real)?;
    let scaled = theta_apply(&chi, &d, &l.model)?;
    let x = degree(&d, &l.model)?;
    Ok(Outcome::ok(match c.format {
        Format::Json => to_json(&json!({
            "scalar": rational_json(&scaled.scalar),
            "degree": coordinates(&x),
        })),
        Format::Text => format!("{}\n", rational_json(&scaled.scalar)),
    }))
}

pub fn classify(c: &Common) -> Result<Outcome> {
    let l = load(c)?;
    let cls = classify_characters(l.model.group());
    Ok(Outcome::ok(match c.format {
        Format::Json => to_json(&json!({
            "structure": l.model.group().structure(),
            "free_rank": cls.free_rank,
            "torsion": cls.torsion.iter().cloned().map(Int).collect::<Vec<_>>(),
            "torsion_characters": cls.torsion_characters(),
            "description": cls.describe(),
        })),
        Format::Text => format!("{}\n", cls.describe()),
    }))
}
