use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use homalg::complexes::{cohomology_object, validate_cochain_map, validate_complex, CochainMap, ViolationKind};
use homalg::derived::{
    right_derived_object, AdditiveFunctor, DerivedFunctor, DoublingFunctor, HomFunctor, IdentityFunctor,
};
use homalg::resolutions::build_injective_resolution;
use homalg::{Arrow, ModZpk, Ob, Vect};
use serde_json::{json, Value};

use crate::backend::{morphism_json, object_json, rows, CliBackend, Loaded};
use crate::error::CliError;
use crate::workspace::{BackendKind, WorkspaceFile};

#[derive(Debug, Parser)]
#[command(name = "homalg", version, about = "Cohomology, injective resolutions and Ext over F_p and Z/p^k")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every complex and cochain map in the workspace.
    Validate { file: String },
    /// Print H^n of a complex.
    Cohomology {
        file: String,
        #[arg(long)]
        complex: String,
        /// Degree range `a..b` (inclusive); defaults to the complex's support.
        #[arg(long, allow_hyphen_values = true)]
        degrees: Option<String>,
    },
    /// Print an injective resolution.
    Resolve {
        file: String,
        #[arg(long)]
        object: String,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
    },
    /// Print Ext^i(M, N) = R^i Hom(M, -)(N).
    Ext {
        file: String,
        #[arg(long = "M")]
        m: String,
        #[arg(long = "N")]
        n: String,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
    },
    /// Apply R^i F to an object or a morphism.
    Derive {
        file: String,
        #[arg(long, value_enum)]
        functor: FunctorKind,
        /// The object M of Hom(M, -).
        #[arg(long)]
        with: Option<String>,
        #[arg(long, conflicts_with = "morphism", required_unless_present = "morphism")]
        object: Option<String>,
        #[arg(long)]
        morphism: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
    },
    /// Print the workspace in canonical form.
    Fmt { file: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctorKind {
    Identity,
    Doubling,
    Hom,
}

/// What a command prints; `ok = false` means a check failed (exit 1).
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

impl Output {
    fn success(text: String, json: Value) -> Self {
        Self { ok: true, text, json }
    }
}

fn file_of(command: &Command) -> &str {
    match command {
        Command::Validate { file }
        | Command::Cohomology { file, .. }
        | Command::Resolve { file, .. }
        | Command::Ext { file, .. }
        | Command::Derive { file, .. }
        | Command::Fmt { file } => file,
    }
}

pub fn run(command: &Command) -> Result<Output, CliError> {
    let path = file_of(command);
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
    run_on_text(command, &text)
}

pub fn run_on_text(command: &Command, text: &str) -> Result<Output, CliError> {
    let file = WorkspaceFile::parse(text)?;
    match file.backend {
        BackendKind::Vect => execute::<Vect>(command, &file),
        BackendKind::Mod => execute::<ModZpk>(command, &file),
    }
}

fn execute<C: CliBackend>(command: &Command, file: &WorkspaceFile) -> Result<Output, CliError> {
    let ws = Loaded::<C>::load(file)?;
    match command {
        Command::Validate { .. } => validate(&ws),
        Command::Cohomology { complex, degrees, .. } => cohomology(&ws, complex, degrees.as_deref()),
        Command::Resolve { object, degree, .. } => resolve(&ws, object, *degree),
        Command::Ext { m, n, degree, .. } => ext(&ws, m, n, *degree),
        Command::Derive { functor, with, object, morphism, degree, .. } => {
            let target = match (object, morphism) {
                (Some(o), None) => Target::Object(o),
                (None, Some(m)) => Target::Morphism(m),
                _ => return Err(CliError::Input("give exactly one of --object and --morphism".into())),
            };
            derive(&ws, *functor, with.as_deref(), target, *degree)
        }
        Command::Fmt { .. } => {
            let canonical = ws.export(file);
            let json = serde_json::to_value(&canonical).expect("workspace serializes");
            Ok(Output::success(canonical.to_json(), json))
        }
    }
}

fn check_degree(degree: i64) -> Result<(), CliError> {
    if degree < 0 {
        return Err(CliError::Input(format!("degree must be non-negative, got {degree}")));
    }
    Ok(())
}

fn parse_degrees(s: &str) -> Result<RangeInclusive<i64>, CliError> {
    let bad = || CliError::Input(format!("degrees must look like a..b, got '{s}'"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn describe_violation<C: CliBackend>(kind: &ViolationKind<C>) -> (String, Value) {
    match kind {
        ViolationKind::Endpoints { expected, actual } => (
            format!("expected {} -> {}, found {} -> {}", expected.0, expected.1, actual.0, actual.1),
            json!({
                "kind": "endpoints",
                "expected": [expected.0.to_string(), expected.1.to_string()],
                "actual": [actual.0.to_string(), actual.1.to_string()],
            }),
        ),
        ViolationKind::NonzeroComposite { composite } => (
            format!("d∘d = {} (expected 0)", C::matrix(composite)),
            json!({ "kind": "nonzero_composite", "composite": rows(C::matrix(composite)) }),
        ),
        ViolationKind::Square { lhs, rhs } => (
            format!("∂∘f = {} but f∘d = {}", C::matrix(lhs), C::matrix(rhs)),
            json!({ "kind": "square", "lhs": rows(C::matrix(lhs)), "rhs": rows(C::matrix(rhs)) }),
        ),
    }
}

fn validate<C: CliBackend>(ws: &Loaded<C>) -> Result<Output, CliError> {
    let cat = &ws.cat;
    let mut lines = Vec::new();
    let mut items = Vec::new();
    let mut failures = 0;
    let mut record = |what: String, found: Vec<(i64, String, Value)>| {
        if found.is_empty() {
            lines.push(format!("{what}: ok"));
        }
        for (degree, msg, _) in &found {
            lines.push(format!("{what}: degree {degree}: {msg}"));
        }
        failures += found.len();
        let violations: Vec<Value> = found
            .into_iter()
            .map(|(degree, _, mut v)| {
                v["degree"] = json!(degree);
                v
            })
            .collect();
        items.push(json!({ "name": what, "ok": violations.is_empty(), "violations": violations }));
    };
    for (name, x) in &ws.complexes {
        let found = validate_complex(cat, x)
            .violations
            .iter()
            .map(|v| {
                let (msg, json) = describe_violation(&v.kind);
                (v.degree, msg, json)
            })
            .collect();
        record(format!("complex {name}"), found);
    }
    for (name, spec) in &ws.maps {
        let (x, y) = (ws.complex(&spec.src)?, ws.complex(&spec.dst)?);
        let components: Vec<_> = spec.components.iter().map(|c| ws.morphism(c).cloned()).collect::<Result<_, _>>()?;
        let mut found: Vec<(i64, String, Value)> = Vec::new();
        for (i, c) in components.iter().enumerate() {
            let n = spec.lo + i as i64;
            let (s, t) = (x.object(cat, n), y.object(cat, n));
            if c.src() != &s || c.dst() != &t {
                let kind =
                    ViolationKind::<C>::Endpoints { expected: (s, t), actual: (c.src().clone(), c.dst().clone()) };
                let (msg, json) = describe_violation(&kind);
                found.push((n, msg, json));
            }
        }
        if found.is_empty() {
            let f = CochainMap::new(cat, x.clone(), y.clone(), spec.lo, components);
            found = validate_cochain_map(cat, &f)
                .violations
                .iter()
                .map(|v| {
                    let (msg, json) = describe_violation(&v.kind);
                    (v.degree, msg, json)
                })
                .collect();
        }
        record(format!("map {name}"), found);
    }
    let ok = failures == 0;
    lines.push(if ok { "all checks passed".to_string() } else { format!("{failures} violation(s)") });
    Ok(Output { ok, text: lines.join("\n"), json: json!({ "ok": ok, "checks": items }) })
}

fn cohomology<C: CliBackend>(ws: &Loaded<C>, name: &str, degrees: Option<&str>) -> Result<Output, CliError> {
    let x = ws.complex(name)?;
    let report = validate_complex(&ws.cat, x);
    if !report.is_ok() {
        return Err(CliError::Math(format!("complex '{name}' is not a cochain complex; run validate for details")));
    }
    let range = match degrees {
        Some(s) => parse_degrees(s)?,
        None => x.lo()..=x.hi(),
    };
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for n in range {
        let h = cohomology_object(&ws.cat, x, n)?;
        lines.push(format!("H^{n} ≅ {}", h.object));
        entries.push(json!({ "degree": n, "object": object_json(&ws.cat, &h.object) }));
    }
    Ok(Output::success(lines.join("\n"), json!({ "complex": name, "cohomology": entries })))
}

fn resolve<C: CliBackend>(ws: &Loaded<C>, name: &str, degree: i64) -> Result<Output, CliError> {
    check_degree(degree)?;
    let a = ws.object(name)?;
    let cat = &ws.cat;
    let res = build_injective_resolution(cat, a, degree)?;
    let x = res.complex();
    let mut lines = vec![
        format!("resolution of {name} ≅ {a} to degree {degree}"),
        format!("aug: {a} -> I^0 = {}", C::matrix(res.aug())),
    ];
    let mut terms = Vec::new();
    for n in 0..=degree {
        lines.push(format!("I^{n} = {}", x.object(cat, n)));
        let mut term = json!({ "degree": n, "object": object_json(cat, &x.object(cat, n)) });
        if n < degree {
            let d = x.differential(cat, n);
            lines.push(format!("d^{n}: I^{n} -> I^{} = {}", n + 1, C::matrix(&d)));
            term["differential"] = json!(rows(C::matrix(&d)));
        }
        terms.push(term);
    }
    let json = json!({ "object": name, "augmentation": morphism_json(cat, res.aug()), "terms": terms });
    Ok(Output::success(lines.join("\n"), json))
}

fn ext<C: CliBackend>(ws: &Loaded<C>, m: &str, n: &str, degree: i64) -> Result<Output, CliError> {
    check_degree(degree)?;
    let (mo, no) = (ws.object(m)?, ws.object(n)?);
    let e = right_derived_object(&HomFunctor::new(ws.cat.clone(), mo.clone()), no, degree)?;
    let text = format!("Ext^{degree}({m}, {n}) ≅ {e}");
    Ok(Output::success(text, json!({ "M": m, "N": n, "degree": degree, "ext": object_json(&ws.cat, &e) })))
}

enum Target<'a> {
    Object(&'a str),
    Morphism(&'a str),
}

fn derive<C: CliBackend>(
    ws: &Loaded<C>,
    kind: FunctorKind,
    with: Option<&str>,
    target: Target<'_>,
    degree: i64,
) -> Result<Output, CliError> {
    check_degree(degree)?;
    let cat = ws.cat.clone();
    match kind {
        FunctorKind::Identity => derive_with(ws, IdentityFunctor(cat), "Id", target, degree),
        FunctorKind::Doubling => derive_with(ws, DoublingFunctor(cat), "Dbl", target, degree),
        FunctorKind::Hom => {
            let m = with.ok_or_else(|| CliError::Input("--functor hom needs --with M".into()))?;
            let f = HomFunctor::new(cat, ws.object(m)?.clone());
            derive_with(ws, f, &format!("Hom({m}, -)"), target, degree)
        }
    }
}

fn derive_with<C, F>(
    ws: &Loaded<C>,
    functor: F,
    label: &str,
    target: Target<'_>,
    degree: i64,
) -> Result<Output, CliError>
where
    C: CliBackend,
    F: AdditiveFunctor<Source = C, Target = C>,
{
    match target {
        Target::Object(name) => {
            let o: Ob<C> = right_derived_object(&functor, ws.object(name)?, degree)?;
            let text = format!("R^{degree} {label}({name}) ≅ {o}");
            Ok(Output::success(text, json!({ "functor": label, "degree": degree, "object": object_json(&ws.cat, &o) })))
        }
        Target::Morphism(name) => {
            let f = ws.morphism(name)?;
            let r = DerivedFunctor::new(functor).morphism(f, degree)?;
            let text = format!("R^{degree} {label}({name}): {} -> {} = {}", r.src(), r.dst(), C::matrix(&r));
            let zero = ws.cat.is_zero_morphism(&r);
            Ok(Output::success(
                text,
                json!({ "functor": label, "degree": degree, "morphism": morphism_json(&ws.cat, &r), "zero": zero }),
            ))
        }
    }
}
