use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use stab22::bipoly::BiPoly;
use stab22::boundary::{minimal_orbit_limit, stratum_of};
use stab22::classifier::{classify_with_cutoff, random_destabilize_search, StabilityClass};
use stab22::factorizer::bihomogeneous_factor;
use stab22::fibration::{classify_fibre, discriminant, fibre_matrix};
use stab22::forms::binary_roots;
use stab22::json::{
    boundary_json, certificate_json, locus_json, parse_input, read_certified_document, verdict_json, weight_json,
};
use stab22::oneps::{limit, m_oplus, m_plus, mu, Limit, Weight};
use stab22::points::format_projective;
use stab22::singularity::singular_locus;
use stab22::Error;

#[derive(Parser)]
#[command(name = "stab22", version, about = "GIT stability of (2,2) divisors in P1 x P2")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Run the randomized search with this many trials (classify).
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Truncation order for local algebra dimensions.
    #[arg(long, global = true, default_value_t = stab22::singularity::DEFAULT_CUTOFF)]
    cutoff: u32,
    /// Weight "r0,r1;s0,s1,s2".
    #[arg(long, global = true, allow_hyphen_values = true)]
    weight: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Verdict, certificate and condition report.
    Classify { poly: String },
    /// The Hilbert-Mumford function for --weight.
    Mu { poly: String },
    /// The limit along --weight.
    Limit { poly: String },
    /// Singular points of the surface with their ADE types.
    SingularLocus { poly: String },
    /// Discriminant and classification of each singular fibre.
    Fibres { poly: String },
    /// Bihomogeneous factorization.
    Factor { poly: String },
    /// M+ and M(+) monomial sets for --weight.
    Msets,
    /// Boundary stratum of a strictly semistable input.
    Boundary { poly: String },
    /// Re-check a certificate document.
    VerifyCert {
        file: Option<String>,
        #[arg(long)]
        stdin: bool,
    },
}

#[derive(Debug)]
struct Output {
    text: String,
    json: Value,
}

fn weight_arg(opts: &Opts) -> Result<Weight, Error> {
    let w = opts.weight.as_deref().ok_or_else(|| Error::Precondition("--weight is required".into()))?;
    Weight::parse(w)
}

fn limit_text(l: &Limit) -> String {
    match l {
        Limit::DoesNotExist => "does not exist".into(),
        Limit::Zero => "0".into(),
        Limit::Poly(p) => p.to_text(),
    }
}

fn classify_cmd(f: &BiPoly, opts: &Opts) -> Result<Output, Error> {
    let v = classify_with_cutoff(f, opts.cutoff)?;
    let mut doc = verdict_json(f, &v);
    let mut text = format!("class: {}\n", v.class);
    if let Some(c) = &v.certificate {
        text += &format!("certificate: weight {} sign {}\n", c.weight, c.claimed_mu_sign);
        if let Some(first) = v.report.violations.first() {
            text += &format!("clause: {}\n", first.clause.name());
        }
    }
    if v.class == StabilityClass::StrictlySemistable {
        let c = v.certificate.as_ref().expect("strictly semistable verdicts carry a certificate");
        let lim = minimal_orbit_limit(f, c)?;
        doc["limit"] = json!(lim.to_text());
        text += &format!("limit: {}\n", lim.to_text());
        match stratum_of(&lim) {
            Ok(p) => {
                doc["stratum"] = json!(p.stratum.to_string());
                doc["boundary"] = boundary_json(&p);
                text += &format!("stratum: {p}\n");
            }
            Err(_) => doc["stratum"] = Value::Null,
        }
    }
    for p in &v.report.points {
        text += &format!("singular point {} {}\n", p.point, p.local_type);
    }
    if let Some(trials) = opts.trials {
        let hit = random_destabilize_search(f, trials, opts.seed)?;
        doc["search"] = json!({
            "trials": trials,
            "seed": opts.seed,
            "certificate": hit.as_ref().map(certificate_json),
        });
        text += &match &hit {
            Some(c) => format!("search: found weight {} sign {}\n", c.weight, c.claimed_mu_sign),
            None => format!("search: nothing in {trials} trials\n"),
        };
    }
    Ok(Output { text, json: doc })
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Classify { poly } => classify_cmd(&parse_input(poly)?, opts),
        Command::Mu { poly } => {
            let (f, w) = (parse_input(poly)?, weight_arg(opts)?);
            let m = mu(&f, &w)?;
            Ok(Output { text: format!("{m}\n"), json: json!({ "mu": m, "weight": weight_json(&w) }) })
        }
        Command::Limit { poly } => {
            let (f, w) = (parse_input(poly)?, weight_arg(opts)?);
            let l = limit_text(&limit(&f, &w)?);
            Ok(Output { text: format!("{l}\n"), json: json!({ "limit": l, "weight": weight_json(&w) }) })
        }
        Command::SingularLocus { poly } => {
            let s = singular_locus(&parse_input(poly)?, opts.cutoff)?;
            let mut text = String::new();
            for p in &s.points {
                text += &format!("point {} {}\n", p.point, p.local_type);
            }
            for c in &s.curves {
                text += &format!("curve {}\n", c.kind());
            }
            if s.is_smooth() {
                text += "smooth\n";
            }
            Ok(Output { text, json: locus_json(&s) })
        }
        Command::Fibres { poly } => {
            let f = parse_input(poly)?;
            let delta = discriminant(&fibre_matrix(&f));
            let mut text = format!("discriminant: {}\n", delta.to_text());
            let mut roots = Vec::new();
            if !delta.is_zero() {
                for r in binary_roots(&delta)? {
                    let label = match classify_fibre(&f, &r.point) {
                        Ok(c) => format!("{:?}", c.label),
                        Err(_) => "WholePlane".to_string(),
                    };
                    let point = format_projective(&r.point);
                    text += &format!("fibre over {point} (multiplicity {}): {label}\n", r.multiplicity);
                    roots.push(json!({ "point": point, "multiplicity": r.multiplicity, "label": label }));
                }
            }
            Ok(Output { text, json: json!({ "discriminant": delta.to_text(), "fibres": roots }) })
        }
        Command::Factor { poly } => {
            let fz = bihomogeneous_factor(&parse_input(poly)?)?;
            let factors: Vec<Value> =
                fz.factors().iter().map(|g| json!({ "factor": g.to_text(), "bidegree": g.bidegree() })).collect();
            let text = fz.factors().iter().map(|g| format!("{:?} {}\n", g.bidegree(), g.to_text())).collect();
            Ok(Output { text, json: json!({ "factors": factors, "irreducible": fz.is_irreducible() }) })
        }
        Command::Msets => {
            let w = weight_arg(opts)?;
            w.validate()?;
            let plus: Vec<String> = m_plus(&w).iter().map(|m| m.to_string()).collect();
            let oplus: Vec<String> = m_oplus(&w).iter().map(|m| m.to_string()).collect();
            let text = format!("M+: {}\nM(+): {}\n", plus.join(" "), oplus.join(" "));
            Ok(Output { text, json: json!({ "weight": weight_json(&w), "m_plus": plus, "m_oplus": oplus }) })
        }
        Command::Boundary { poly } => {
            let f = parse_input(poly)?;
            let v = classify_with_cutoff(&f, opts.cutoff)?;
            if v.class != StabilityClass::StrictlySemistable {
                return Err(Error::Precondition(format!("input is {}, not strictly semistable", v.class)));
            }
            let lim = minimal_orbit_limit(&f, v.certificate.as_ref().unwrap())?;
            let p = stratum_of(&lim)?;
            let mut doc = boundary_json(&p);
            doc["limit"] = json!(lim.to_text());
            Ok(Output { text: format!("{p}\nlimit: {}\n", lim.to_text()), json: doc })
        }
        Command::VerifyCert { file, stdin } => {
            let text = match (file, stdin) {
                (_, true) => {
                    let mut s = String::new();
                    std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(e.to_string()))?;
                    s
                }
                (Some(path), false) => std::fs::read_to_string(path).map_err(|e| Error::Parse(e.to_string()))?,
                (None, false) => return Err(Error::Precondition("give a certificate file or --stdin".into())),
            };
            let (f, c) = read_certified_document(&text)?;
            let m = c.verify(&f)?;
            Ok(Output {
                text: format!("verified: mu = {m} ({})\n", c.claimed_mu_sign),
                json: json!({ "verified": true, "mu": m }),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.opts.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable report"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        _ => 3,
    }
}
