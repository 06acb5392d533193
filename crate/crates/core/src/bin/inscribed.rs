use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use inscribed::construct::lifting::DEFAULT_DOUBLING_CAP;
use inscribed::construct::{
    decode_lawrence, delaunay_instance, fm_polynomial, inscribe_lawrence, kortenkamp_lift,
    lawrence_extension, lawrence_pairs, lawrence_polytope, lex_lift_with, neighborly_pipeline,
    replay, replay_history, sturm_root_count, verify_delaunay_instance, verify_lex_lift,
    verify_neighborly_output, LiftMode, LiftOptions, SignVector, DEFAULT_SEARCH_BUDGET,
};
use inscribed::delaunay::{
    cell_volumes, delaunay_subdivision, delaunay_subdivision_strict, is_delaunay_triangulation,
    subdivision_equal, subdivision_equal_strict, verify_empty_spheres,
};
use inscribed::io::{self, Artifact};
use inscribed::matroid::{chirotope, chirotope_equal, is_uniform, point_chirotope};
use inscribed::polytope::{facets, is_convex_position, is_neighborly, lattice_equal, volume};
use inscribed::report::Report;
use inscribed::sphere::{check_lemma_stereographic, is_inscribed};
use inscribed::{Chirotope, Error, PointConfiguration, Rational, Result};

/// Exact constructions and checks for inscribed neighborly polytopes and
/// Delaunay subdivisions.
#[derive(Parser)]
#[command(name = "inscribed", version)]
struct Cli {
    /// Directory for the JSON artifacts and `report.json`.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chirotope of a point or vector configuration.
    Chirotope { input: PathBuf },
    /// Facets of the convex hull.
    Facets { input: PathBuf },
    /// Delaunay subdivision, with its empty-sphere verification.
    Delaunay {
        input: PathBuf,
        /// Also record the facets of the convex hull.
        #[arg(long)]
        strict_boundary: bool,
    },
    /// Lawrence extension at the given labels, or the Lawrence polytope.
    Lawrence {
        input: PathBuf,
        /// Comma-separated labels, or `all`.
        #[arg(long, default_value = "all")]
        lift: String,
    },
    /// Inscribed realization of the Lawrence polytope.
    InscribeLawrence { input: PathBuf },
    /// Recovers a configuration from a Lawrence polytope realization.
    DecodeLawrence {
        input: PathBuf,
        /// Pairs `lower:upper` of labels, comma separated; defaults to
        /// `i:n+i`.
        #[arg(long)]
        pairs: Option<String>,
        /// Configuration whose chirotope the result must match.
        #[arg(long)]
        expect: Option<PathBuf>,
    },
    /// Lexicographic lifting with the given signs.
    LexLift {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
        /// Delaunay lexicographic lifting.
        #[arg(long)]
        delaunay: bool,
        #[arg(long, env = "INSCRIBED_DOUBLING_CAP", default_value_t = DEFAULT_DOUBLING_CAP)]
        doubling_cap: u32,
    },
    /// Searches liftings of `d+4` points to a neighborly configuration.
    Kortenkamp {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "INSCRIBED_SEARCH_BUDGET", default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Inscribed neighborly polytope or Delaunay instance from `n` points in
    /// `R^{n-4}`.
    Pipeline {
        kind: PipelineKind,
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "INSCRIBED_SEARCH_BUDGET", default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// The polynomial `f_m`.
    Fm {
        #[arg(long)]
        m: usize,
        /// Count its real roots with a Sturm sequence.
        #[arg(long)]
        count_roots: bool,
    },
    /// Checks a property of artifact files.
    Verify {
        property: Property,
        files: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PipelineKind {
    Neighborly,
    Delaunay,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Inscribed,
    Neighborly,
    ConvexPosition,
    GeneralPosition,
    DelaunayTriangulation,
    EmptySpheres,
    ChirotopeEqual,
    LatticeEqual,
    SubdivisionEqual,
    LexLift,
    Stereographic,
    Report,
}

struct Outcome {
    report: Report,
    artifacts: Vec<(&'static str, Value)>,
}

impl Outcome {
    fn new(report: Report) -> Self {
        Outcome {
            report,
            artifacts: Vec::new(),
        }
    }

    fn with(mut self, name: &'static str, v: Value) -> Self {
        self.artifacts.push((name, v));
        self
    }
}

struct Input {
    json: Value,
    artifact: Artifact,
}

fn read(path: &Path) -> Result<Input> {
    let json = io::read_json(path)?;
    let artifact = Artifact::from_json(&json)?;
    Ok(Input { json, artifact })
}

fn points(input: &Input) -> Result<PointConfiguration> {
    match &input.artifact {
        Artifact::Points(a) => Ok(a.clone()),
        Artifact::Inscribed(a) => Ok(a.base().clone()),
        other => Err(Error::Parse(format!(
            "expected a point configuration, found {}",
            other.kind()
        ))),
    }
}

fn labels(list: &str, n: usize) -> Result<Vec<usize>> {
    list.split(',')
        .map(|s| match s.trim().parse::<usize>() {
            Ok(l) if (1..=n).contains(&l) => Ok(l - 1),
            Ok(l) => Err(Error::UnknownLabel { label: l, n }),
            Err(_) => Err(Error::Parse(format!("invalid label {s:?}"))),
        })
        .collect()
}

fn pairs(list: &str, n: usize) -> Result<Vec<(usize, usize)>> {
    list.split(',')
        .map(|p| {
            let (a, b) = p
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("pair {p:?} is not lower:upper")))?;
            let l = labels(a, n)?;
            let u = labels(b, n)?;
            Ok((l[0], u[0]))
        })
        .collect()
}

fn chirotope_of(input: &Input) -> Result<Chirotope> {
    match &input.artifact {
        Artifact::Chirotope(c) => Ok(c.clone()),
        Artifact::Vectors(v) => chirotope(v),
        _ => point_chirotope(&points(input)?),
    }
}

fn digest_of(inputs: &[&Input], params: Value) -> Vec<Value> {
    let mut v: Vec<Value> = inputs.iter().map(|i| i.json.clone()).collect();
    v.push(params);
    v
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Chirotope { input } => {
            let inp = read(&input)?;
            let c = chirotope_of(&inp)?;
            let mut r = Report::with_inputs(&digest_of(&[&inp], json!({"command": "chirotope"})));
            r.check(
                "chirotope",
                true,
                format!("rank {}, {} elements, uniform: {}", c.rank(), c.ground_size(), is_uniform(&c)),
            );
            Ok(Outcome::new(r).with("chirotope.json", io::chirotope_to_json(&c)))
        }
        Command::Facets { input } => {
            let inp = read(&input)?;
            let a = points(&inp)?;
            let f = facets(&a)?;
            let mut r = Report::with_inputs(&digest_of(&[&inp], json!({"command": "facets"})));
            r.check(
                "dimension",
                f.validate_dimension(a.dim()).is_ok(),
                format!("{} facets, {} vertices of {}", f.facets().len(), f.vertices().len(), a.len()),
            );
            Ok(Outcome::new(r).with("face_lattice.json", io::face_lattice_to_json(&f)))
        }
        Command::Delaunay {
            input,
            strict_boundary,
        } => {
            let inp = read(&input)?;
            let a = points(&inp)?;
            let t = if strict_boundary {
                delaunay_subdivision_strict(&a)?
            } else {
                delaunay_subdivision(&a)?
            };
            let mut r = Report::with_inputs(&digest_of(
                &[&inp],
                json!({"command": "delaunay", "strict_boundary": strict_boundary}),
            ));
            r.merge("", verify_empty_spheres(&a, &t));
            let total: Rational = cell_volumes(&a, &t)?.into_iter().sum();
            let hull = volume(&a)?;
            r.check(
                "volume",
                total == hull,
                format!("cells sum to {total}, hull volume {hull}"),
            );
            Ok(Outcome::new(r).with("subdivision.json", io::subdivision_to_json(&t)))
        }
        Command::Lawrence { input, lift } => {
            let inp = read(&input)?;
            let a = points(&inp)?;
            let all = lift.trim() == "all";
            let b = if all {
                lawrence_polytope(&a)?
            } else {
                let mut b = a.clone();
                for l in labels(&lift, a.len())? {
                    b = lawrence_extension(&b, l)?;
                }
                b
            };
            let mut r = Report::with_inputs(&digest_of(&[&inp], json!({"command": "lawrence", "lift": lift})));
            if all {
                let convex = is_convex_position(&b)?;
                r.check("convex-position", convex, format!("{} points in R^{}", b.len(), b.dim()));
            } else {
                r.check("extension", true, format!("{} points in R^{}", b.len(), b.dim()));
            }
            Ok(Outcome::new(r).with("lawrence.json", io::points_to_json(&b)))
        }
        Command::InscribeLawrence { input } => {
            let inp = read(&input)?;
            let a = points(&inp)?;
            let b = inscribe_lawrence(&a)?;
            let mut r = Report::with_inputs(&digest_of(&[&inp], json!({"command": "inscribe-lawrence"})));
            r.check("inscribed", is_inscribed(b.base()), format!("{} points on the unit sphere", b.len()));
            let same = chirotope_equal(&point_chirotope(b.base())?, &point_chirotope(&lawrence_polytope(&a)?)?);
            r.check("chirotope", same, "chirotope of the Lawrence polytope");
            Ok(Outcome::new(r).with("inscribed.json", io::inscribed_to_json(&b)))
        }
        Command::DecodeLawrence {
            input,
            pairs: list,
            expect,
        } => {
            let inp = read(&input)?;
            let b = points(&inp)?;
            let p = match &list {
                Some(l) => pairs(l, b.len())?,
                None if b.len() % 2 == 0 => lawrence_pairs(b.len() / 2),
                None => return Err(Error::Precondition("odd number of points; pass --pairs".into())),
            };
            let a = decode_lawrence(&b, &p)?;
            let mut r = Report::with_inputs(&digest_of(
                &[&inp],
                json!({"command": "decode-lawrence", "pairs": list}),
            ));
            r.check("decoded", true, format!("{} points in R^{}", a.len(), a.dim()));
            if let Some(path) = expect {
                let e = read(&path)?;
                let same = chirotope_equal(&point_chirotope(&a)?, &chirotope_of(&e)?);
                r.check("chirotope", same, format!("against {}", path.display()));
            }
            Ok(Outcome::new(r).with("decoded.json", io::points_to_json(&a)))
        }
        Command::LexLift {
            input,
            signs,
            delaunay,
            doubling_cap,
        } => {
            let inp = read(&input)?;
            let a = points(&inp)?;
            let s: SignVector = signs.parse()?;
            let mode = if delaunay { LiftMode::Delaunay } else { LiftMode::Generic };
            let (lifted, cert) = lex_lift_with(&a, &s, mode, &LiftOptions { doubling_cap })?;
            let mut r = Report::with_inputs(&digest_of(
                &[&inp],
                json!({"command": "lex-lift", "signs": signs, "mode": mode.as_str()}),
            ));
            r.merge("", verify_lex_lift(&a, &lifted, &s, mode));
            Ok(Outcome::new(r)
                .with("lifted.json", io::points_to_json(&lifted))
                .with("certificate.json", io::certificate_to_json(&cert)))
        }
        Command::Kortenkamp { input, seed, budget } => {
            let inp = read(&input)?;
            let a = points(&inp)?;
            let k = kortenkamp_lift(&a, budget, seed)?;
            let c = &k.configuration;
            let mut r = Report::with_inputs(&digest_of(
                &[&inp],
                json!({"command": "kortenkamp", "seed": seed, "budget": budget}),
            ));
            let d = a.dim();
            r.check(
                "size",
                c.len() == 2 * d + 8 && c.dim() == 2 * d + 4,
                format!("{} points in R^{}", c.len(), c.dim()),
            );
            r.check("neighborly", is_neighborly(c)?, format!("{} steps, {} evaluations", k.history.len(), k.evaluations));
            r.check("replay", replay_history(&a, &k.history)? == *c, "history reproduces the configuration");
            Ok(Outcome::new(r)
                .with("neighborly.json", io::points_to_json(c))
                .with("kortenkamp.json", io::kortenkamp_to_json(&k)))
        }
        Command::Pipeline {
            kind,
            input,
            seed,
            budget,
        } => {
            let inp = read(&input)?;
            let a = points(&inp)?;
            let name = match kind {
                PipelineKind::Neighborly => "neighborly",
                PipelineKind::Delaunay => "delaunay",
            };
            let mut r = Report::with_inputs(&digest_of(
                &[&inp],
                json!({"command": "pipeline", "kind": name, "seed": seed, "budget": budget}),
            ));
            match kind {
                PipelineKind::Neighborly => {
                    let out = neighborly_pipeline(&a, seed, budget)?;
                    r.merge("", verify_neighborly_output(&out));
                    Ok(Outcome::new(r)
                        .with("inscribed.json", io::inscribed_to_json(&out.inscribed))
                        .with("a2.json", io::points_to_json(&out.a2))
                        .with("lifted.json", io::points_to_json(&out.lifted))
                        .with("provenance.json", io::provenance_to_json(&out.provenance)))
                }
                PipelineKind::Delaunay => {
                    let inst = delaunay_instance(&a, seed, budget)?;
                    r.merge("", verify_delaunay_instance(&inst));
                    r.merge("", verify_empty_spheres(&inst.configuration, &inst.subdivision));
                    let mut prov = io::provenance_to_json(&inst.provenance);
                    prov["auxiliary"] = json!(inst.auxiliary + 1);
                    prov["stacked_simplex"] = json!(inst.stacked_simplex.iter().map(|i| i + 1).collect::<Vec<_>>());
                    Ok(Outcome::new(r)
                        .with("configuration.json", io::points_to_json(&inst.configuration))
                        .with("subdivision.json", io::subdivision_to_json(&inst.subdivision))
                        .with("inscribed.json", io::inscribed_to_json(&inst.inscribed))
                        .with("provenance.json", prov))
                }
            }
        }
        Command::Fm { m, count_roots } => {
            let p = fm_polynomial(m);
            let expected = 1usize << (m + 1);
            let mut r = Report::with_inputs(&[json!({"command": "fm", "m": m, "count_roots": count_roots})]);
            r.check("degree", p.degree() == expected, format!("degree {}", p.degree()));
            if count_roots {
                let roots = sturm_root_count(&p)?;
                r.check("roots", roots == expected, format!("root_count {roots}"));
            }
            Ok(Outcome::new(r).with("fm.json", io::polynomial_to_json(&p)))
        }
        Command::Verify { property, files } => verify(property, &files),
    }
}

fn verify(property: Property, files: &[PathBuf]) -> Result<Outcome> {
    let want = match property {
        Property::EmptySpheres
        | Property::ChirotopeEqual
        | Property::LatticeEqual
        | Property::SubdivisionEqual => 2,
        Property::LexLift => 3,
        _ => 1,
    };
    if files.len() != want {
        return Err(Error::Precondition(format!("expected {want} files, got {}", files.len())));
    }
    let inputs = files.iter().map(|f| read(f)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&Input> = inputs.iter().collect();
    let name = property.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let mut r = Report::with_inputs(&digest_of(&refs, json!({"command": "verify", "property": name})));
    match property {
        Property::Inscribed => {
            let a = points(&inputs[0])?;
            r.check("inscribed", is_inscribed(&a), format!("{} points", a.len()));
        }
        Property::Neighborly => {
            let a = points(&inputs[0])?;
            r.check("neighborly", is_neighborly(&a)?, format!("{} points in R^{}", a.len(), a.dim()));
        }
        Property::ConvexPosition => {
            let a = points(&inputs[0])?;
            r.check("convex-position", is_convex_position(&a)?, format!("{} points", a.len()));
        }
        Property::GeneralPosition => {
            let a = points(&inputs[0])?;
            r.check("general-position", is_uniform(&point_chirotope(&a)?), format!("{} points", a.len()));
        }
        Property::DelaunayTriangulation => {
            let a = points(&inputs[0])?;
            r.check(
                "delaunay-triangulation",
                is_delaunay_triangulation(&a),
                "general position, no d+2 points on a sphere",
            );
        }
        Property::EmptySpheres => {
            let a = points(&inputs[0])?;
            let Artifact::Subdivision(t) = &inputs[1].artifact else {
                return Err(Error::Parse("second file must be a subdivision".into()));
            };
            r.merge("", verify_empty_spheres(&a, t));
        }
        Property::ChirotopeEqual => {
            let same = chirotope_equal(&chirotope_of(&inputs[0])?, &chirotope_of(&inputs[1])?);
            r.check("chirotope-equal", same, "equal up to a global sign");
        }
        Property::LatticeEqual => {
            let lattice = |i: &Input| match &i.artifact {
                Artifact::FaceLattice(f) => Ok(f.clone()),
                _ => facets(&points(i)?),
            };
            let same = lattice_equal(&lattice(&inputs[0])?, &lattice(&inputs[1])?);
            r.check("lattice-equal", same, "same labeled facets");
        }
        Property::SubdivisionEqual => {
            let (Artifact::Subdivision(a), Artifact::Subdivision(b)) = (&inputs[0].artifact, &inputs[1].artifact) else {
                return Err(Error::Parse("both files must be subdivisions".into()));
            };
            let strict = a.hull_facets().is_some() || b.hull_facets().is_some();
            let same = if strict { subdivision_equal_strict(a, b) } else { subdivision_equal(a, b) };
            r.check("subdivision-equal", same, if strict { "cells and boundary" } else { "cells" });
        }
        Property::LexLift => {
            let a = points(&inputs[0])?;
            let lifted = points(&inputs[1])?;
            let Artifact::Certificate(cert) = &inputs[2].artifact else {
                return Err(Error::Parse("third file must be a lift certificate".into()));
            };
            r.check("replay", replay(&a, cert)? == lifted, "certificate reproduces the lifting");
            r.merge("", verify_lex_lift(&a, &lifted, &cert.signs, cert.mode));
        }
        Property::Stereographic => {
            r.merge("", check_lemma_stereographic(&points(&inputs[0])?));
        }
        Property::Report => {
            let Artifact::Report(inner) = &inputs[0].artifact else {
                return Err(Error::Parse("file must be a report".into()));
            };
            r.check("report", inner.passed(), format!("{} checks", inner.checks.len()));
        }
    }
    Ok(Outcome::new(r))
}

fn error_kind(e: &Error) -> &'static str {
    match e.root() {
        Error::Dimension(_) => "dimension",
        Error::DegenerateSphere(_) => "degenerate_sphere",
        Error::NotFullRank => "not_full_rank",
        Error::NotFullDimensional { .. } => "not_full_dimensional",
        Error::UnknownLabel { .. } => "unknown_label",
        Error::NotAFacet(_) => "not_a_facet",
        Error::NotConvexPosition => "not_convex_position",
        Error::NotGeneralPosition => "not_general_position",
        Error::NotAcyclic(_) => "not_acyclic",
        Error::Inconsistent(_) => "inconsistent",
        Error::ProjectionUndefined(_) => "projection_undefined",
        Error::DecodingDegenerate(_) => "decoding_degenerate",
        Error::SearchFailure(_) => "search_failure",
        Error::Precondition(_) => "precondition",
        Error::NotSquarefree { .. } => "not_squarefree",
        Error::Parse(_) => "parse",
        Error::Stage { .. } => "stage",
    }
}

fn write_outcome(out: &Path, outcome: &Outcome) -> Result<()> {
    fs::create_dir_all(out)
        .map_err(|e| Error::Precondition(format!("cannot create {}: {e}", out.display())))?;
    for (name, v) in &outcome.artifacts {
        io::write_json(&out.join(name), v)?;
    }
    io::write_json(&out.join("report.json"), &io::report_to_json(&outcome.report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|o| write_outcome(&cli.out, &o).map(|()| o));
    match result {
        Ok(outcome) => {
            print!("{}", io::to_pretty(&io::report_to_json(&outcome.report)));
            if outcome.report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Err(e) => {
            let code = if e.is_search_failure() { 3 } else { 2 };
            let stage = match &e {
                Error::Stage { stage, .. } => Some(*stage),
                _ => None,
            };
            let body = json!({
                "error": {"kind": error_kind(&e), "message": e.to_string(), "stage": stage},
                "exit_code": code,
            });
            eprint!("{}", io::to_pretty(&body));
            ExitCode::from(code)
        }
    }
}
