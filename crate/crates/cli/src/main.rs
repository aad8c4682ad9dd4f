//! `fqhg`: build, verify, dualize and report on finite quantum hypergroups.
//!
//! Exit status: 0 success, 1 a certificate or report failed, 2 malformed
//! input, 3 a precondition of the requested operation does not hold.

mod bundle;
mod render;

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fqhg::algebra::{is_faithful, is_positive, modular_automorphism, seed_from_env};
use fqhg::constructions::{
    alpha_dual_pair, alpha_family, c3, c4, group_pair, groupoid2, hecke_pair, m2, omega_free, omega_from_group,
    twosub_pair, AlphaKind,
};
use fqhg::duality::{check_plancherel, dual_fqh, dual_right_integral, invariance_dimension, verify_fqh, Fqh};
use fqhg::exactnum::parse_rational;
use fqhg::{Error, FiniteGroup, Result, Scalar, Side, SCHEMA};
use serde_json::{json, Value};

use bundle::Bundle;

#[derive(Parser)]
#[command(name = "fqhg", version, about = "Exact finite quantum hypergroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    A,
    B,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::A => Side::A,
            SideArg::B => Side::B,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a preset and emit its bundle.
    Build {
        #[command(subcommand)]
        preset: Preset,
    },
    /// Certify one side of a bundle; exits 1 unless every check passes.
    Verify {
        /// Bundle path, or `-` for stdin.
        input: String,
        #[arg(long, value_enum, default_value_t = SideArg::A)]
        side: SideArg,
    },
    /// Emit the bundle of the dual structure on the paired algebra.
    Dualize { input: String },
    /// Check the pairing, the four actions and the involution identities.
    PairCheck { input: String },
    /// Summarize one side: products, coproduct, counit, integral, antipode.
    Report {
        input: String,
        #[arg(long, value_enum, default_value_t = SideArg::A)]
        side: SideArg,
        /// Replacement basis labels, comma separated.
        #[arg(long, value_delimiter = ',')]
        labels: Vec<String>,
    },
}

#[derive(Subcommand)]
enum Preset {
    /// Double cosets of a subgroup.
    Hecke {
        #[arg(long)]
        group: String,
        /// Generators of the subgroup; repeat for several.
        #[arg(long, required = true)]
        subgroup: Vec<String>,
    },
    /// Function algebra of a group paired with its group algebra.
    Group {
        #[arg(long)]
        group: String,
    },
    /// Two subgroups with trivial intersection, or the free-product case.
    Twosub {
        /// `H=<group> K=<group>` for the free product.
        #[arg(long, num_args = 2, value_names = ["H", "K"], conflicts_with_all = ["group", "h", "k"])]
        free: Option<Vec<String>>,
        #[arg(long, requires_all = ["h", "k"])]
        group: Option<String>,
        /// Generators of H.
        #[arg(long = "h")]
        h: Vec<String>,
        /// Generators of K.
        #[arg(long = "k")]
        k: Vec<String>,
    },
    /// The two-dimensional α-family; with `--kind`, one of its dual pairs.
    Family {
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// groupoid2, c3, c4 (with --lambda) or m2 (with --p, --q).
    Counterexample {
        #[arg(long)]
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
}

/// Command output and whether it counts as a pass.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| {
        match &cli.out {
            Some(path) => std::fs::write(path, &o.text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?,
            None => print!("{}", o.text),
        }
        Ok(o.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        _ if e.is_malformed_input() => 2,
        Error::Postcondition(_) => 1,
        _ => 3,
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Build { preset } => {
            let b = build(preset)?;
            emit_bundle(&b, cli.format)
        }
        Command::Verify { input, side } => verify(&load(input)?, (*side).into(), cli.format),
        Command::Dualize { input } => {
            let b = dualize(&load(input)?)?;
            emit_bundle(&b, cli.format)
        }
        Command::PairCheck { input } => pair_check(&load(input)?, cli.format),
        Command::Report { input, side, labels } => report(&load(input)?, (*side).into(), labels, cli.format),
    }
}

fn load(path: &str) -> Result<Bundle> {
    let mut text = String::new();
    let read = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    Bundle::parse(&text)
}

fn emit_bundle(b: &Bundle, format: Format) -> Result<Outcome> {
    match format {
        Format::Json => Ok(Outcome::ok(b.to_json())),
        Format::Text => Ok(Outcome::ok(report_text(b, Side::A, &[])?)),
    }
}

fn group(name: &str) -> Result<FiniteGroup> {
    FiniteGroup::preset(name)
}

fn scalar(s: &str) -> Result<Scalar> {
    s.parse()
}

fn build(preset: &Preset) -> Result<Bundle> {
    match preset {
        Preset::Hecke { group: g, subgroup } => {
            let gr = group(g)?;
            let h = gr.subgroup_from_labels(subgroup)?;
            let hp = hecke_pair(&gr, &h)?;
            Bundle::from_example(json!({"kind": "hecke", "group": g, "subgroup": subgroup}), &hp.example)
        }
        Preset::Group { group: g } => Bundle::from_example(json!({"kind": "group", "group": g}), &group_pair(&group(g)?)),
        Preset::Twosub { free: Some(free), .. } => {
            let strip = |s: &str, key: &str| s.strip_prefix(key).unwrap_or(s).to_string();
            let (hn, kn) = (strip(&free[0], "H="), strip(&free[1], "K="));
            let om = omega_free(&group(&hn)?, &group(&kn)?)?;
            Bundle::from_example(json!({"kind": "twosub", "free": {"H": hn, "K": kn}}), &twosub_pair(&om)?)
        }
        Preset::Twosub { group: Some(g), h, k, .. } => {
            let gr = group(g)?;
            let om = omega_from_group(&gr, &gr.subgroup_from_labels(h)?, &gr.subgroup_from_labels(k)?)?;
            Bundle::from_example(json!({"kind": "twosub", "group": g, "h": h, "k": k}), &twosub_pair(&om)?)
        }
        Preset::Twosub { .. } => Err(Error::Parse("twosub needs --free H=.. K=.. or --group with --h and --k".into())),
        Preset::Family { kind: None, alpha } => {
            let a = parse_rational(alpha).map(Scalar::from)?;
            let f = alpha_family(&a)?;
            Ok(Bundle::from_fqh(json!({"kind": "family", "alpha": a.to_string()}), &f, None, None))
        }
        Preset::Family { kind: Some(kind), alpha } => {
            let k: AlphaKind = kind.parse()?;
            let a = parse_rational(alpha).map(Scalar::from)?;
            let ex = alpha_dual_pair(k, &a)?;
            Bundle::from_example(json!({"kind": "family", "pair": kind, "alpha": a.to_string()}), &ex)
        }
        Preset::Counterexample { name, lambda, p, q } => {
            let need = |v: &Option<String>, flag: &str| {
                v.as_deref().ok_or_else(|| Error::Parse(format!("{name} needs --{flag}"))).and_then(scalar)
            };
            let (ex, source) = match name.as_str() {
                "groupoid2" => (groupoid2(), json!({"kind": "counterexample", "name": name})),
                "c3" => (c3(), json!({"kind": "counterexample", "name": name})),
                "c4" => {
                    let l = need(lambda, "lambda")?;
                    (c4(&l)?, json!({"kind": "counterexample", "name": name, "lambda": l.to_string()}))
                }
                "m2" => {
                    let (p, q) = (need(p, "p")?, need(q, "q")?);
                    (m2(&p, &q)?, json!({"kind": "counterexample", "name": name, "p": p.to_string(), "q": q.to_string()}))
                }
                other => return Err(Error::UnknownPreset(format!("counterexample {other:?}"))),
            };
            Bundle::from_example(source, &ex)
        }
    }
}

fn verify(b: &Bundle, side: Side, format: Format) -> Result<Outcome> {
    let s = b.side(side)?;
    let cert = verify_fqh(&s.algebra, &s.coproduct, &s.counit, &s.integral)?;
    let text = match format {
        Format::Json => {
            let mut t = serde_json::to_string_pretty(&cert).expect("serializable");
            t.push('\n');
            t
        }
        Format::Text => {
            let mut v = serde_json::to_value(&cert).expect("serializable");
            v.as_object_mut().expect("object").remove("antipode");
            let mut t = String::new();
            render::flat_lines(&v, "", &mut t);
            let verdict = if cert.passed() { "pass".to_string() } else { format!("FAIL ({})", cert.failures().join(", ")) };
            writeln!(t, "result: {verdict}").unwrap();
            t
        }
    };
    Ok(Outcome { text, passed: cert.passed() })
}

fn dualize(b: &Bundle) -> Result<Bundle> {
    let pair = b.pair.as_ref().ok_or_else(|| Error::Precondition("bundle has no pair to dualize through".into()))?;
    let f = Fqh::certify(b.fqh.algebra.clone(), b.fqh.coproduct.clone(), b.fqh.counit.clone(), b.fqh.integral.clone())?;
    let d = dual_fqh(pair, &f)?;
    let source = json!({"kind": "dual", "involution": serde_json::to_value(&d.involution).expect("serializable"), "of": b.source});
    Ok(Bundle::from_fqh(source, &d.fqh, Some(d.pair), Some(f.integral)))
}

fn pair_check(b: &Bundle, format: Format) -> Result<Outcome> {
    let pair = b.pair.as_ref().ok_or_else(|| Error::Precondition("bundle has no pair".into()))?;
    let report = pair.check_pair()?;
    let star = match pair.check_star_pairing() {
        Ok(r) => Some(r),
        Err(Error::Precondition(_)) => None,
        Err(e) => return Err(e),
    };
    let passed = report.ok() && star.as_ref().map_or(true, |s| s.all());
    let v = json!({"schema": SCHEMA, "pair": report, "star": star, "passed": passed});
    Ok(Outcome { text: format_value(&v, format), passed })
}

fn format_value(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut t = serde_json::to_string_pretty(v).expect("serializable");
            t.push('\n');
            t
        }
        Format::Text => {
            let mut t = String::new();
            render::flat_lines(v, "", &mut t);
            t
        }
    }
}

fn report(b: &Bundle, side: Side, labels: &[String], format: Format) -> Result<Outcome> {
    match format {
        Format::Text => Ok(Outcome::ok(report_text(b, side, labels)?)),
        Format::Json => {
            let s = b.side(side)?;
            let cert = verify_fqh(&s.algebra, &s.coproduct, &s.counit, &s.integral)?;
            let extras = extras(b, side, &cert)?;
            let v = json!({
                "schema": SCHEMA,
                "source": b.source,
                "side": side,
                "certificate": cert,
                "invariance_dimension": extras.invariance_dimension,
                "positive": extras.positive,
                "modular_automorphism": extras.sigma,
                "plancherel": extras.plancherel,
                "seed": extras.seed,
            });
            Ok(Outcome::ok(format_value(&v, Format::Json)))
        }
    }
}

struct Extras {
    invariance_dimension: Option<usize>,
    positive: Option<bool>,
    sigma: Option<fqhg::Matrix>,
    plancherel: Option<fqhg::duality::PlancherelReport>,
    seed: u64,
}

fn extras(b: &Bundle, side: Side, cert: &fqhg::duality::FqhCertificate) -> Result<Extras> {
    let s = b.side(side)?;
    let seed = seed_from_env();
    let positive = if s.algebra.has_star() { Some(is_positive(&s.algebra, &s.integral)?) } else { None };
    let sigma = if is_faithful(&s.algebra, &s.integral) { modular_automorphism(&s.algebra, &s.integral).ok() } else { None };
    let mut invariant_dim = None;
    let mut plancherel = None;
    if cert.passed() {
        let f = Fqh::certify(s.algebra.clone(), s.coproduct.clone(), s.counit.clone(), s.integral.clone())?;
        invariant_dim = Some(invariance_dimension(&f)?);
        if let Some(pair) = &s.pair {
            if pair.a().has_star() && pair.b().has_star() {
                let psi = dual_right_integral(pair, &f.integral, &f.antipode)?.psi;
                plancherel = Some(check_plancherel(pair, &f.integral, &psi, 10, seed)?);
            }
        }
    }
    Ok(Extras { invariance_dimension: invariant_dim, positive, sigma, plancherel, seed })
}

fn report_text(b: &Bundle, side: Side, labels: &[String]) -> Result<String> {
    let s = b.side(side)?;
    let d = s.algebra.dim();
    let labels: Vec<String> = if labels.is_empty() {
        s.algebra.labels().to_vec()
    } else if labels.len() == d {
        labels.to_vec()
    } else {
        return Err(Error::Parse(format!("{} labels given for dimension {d}", labels.len())));
    };
    let cert = verify_fqh(&s.algebra, &s.coproduct, &s.counit, &s.integral)?;
    let ex = extras(b, side, &cert)?;
    let mut t = String::new();
    writeln!(t, "source: {}", b.source).unwrap();
    writeln!(t, "side {}, dim {d}: {}", if side == Side::A { "A" } else { "B" }, labels.join(", ")).unwrap();
    writeln!(t, "1 = {}", render::element(s.algebra.unit(), &labels)).unwrap();
    for i in 0..d {
        for j in 0..d {
            writeln!(t, "{}·{} = {}", labels[i], labels[j], render::element(s.algebra.basis_product(i, j), &labels)).unwrap();
        }
    }
    if s.algebra.has_star() {
        for (i, l) in labels.iter().enumerate() {
            let x = s.algebra.star(&s.algebra.basis_vector(i)).expect("involution");
            writeln!(t, "{l}* = {}", render::element(&x, &labels)).unwrap();
        }
    }
    for (j, l) in labels.iter().enumerate() {
        writeln!(t, "Δ({l}) = {}", render::coproduct_column(&s.coproduct, j, &labels)).unwrap();
    }
    for (j, l) in labels.iter().enumerate() {
        writeln!(t, "ε({l}) = {}", s.counit[j]).unwrap();
    }
    for (j, l) in labels.iter().enumerate() {
        writeln!(t, "φ({l}) = {}", s.integral[j]).unwrap();
    }
    if let Some(sm) = &cert.antipode {
        for (j, l) in labels.iter().enumerate() {
            writeln!(t, "S({l}) = {}", render::element(&sm.column(j), &labels)).unwrap();
        }
    }
    if let Some(sigma) = &ex.sigma {
        for (j, l) in labels.iter().enumerate() {
            writeln!(t, "σ({l}) = {}", render::element(&sigma.column(j), &labels)).unwrap();
        }
    }
    let verdict = if cert.passed() { "pass".to_string() } else { format!("FAIL ({})", cert.failures().join(", ")) };
    writeln!(t, "antipode: {:?}", cert.antipode_status).unwrap();
    writeln!(t, "certificate: {verdict}").unwrap();
    if let Some(n) = ex.invariance_dimension {
        writeln!(t, "invariant functionals: {n}").unwrap();
    }
    if let Some(p) = ex.positive {
        writeln!(t, "φ positive: {p}").unwrap();
    }
    if let Some(p) = &ex.plancherel {
        let ok = p.basis_ok && p.random_ok;
        writeln!(t, "Plancherel ψ(b*b) = conj φ(a*a): {ok} (seed {}, {} samples)", ex.seed, p.samples).unwrap();
    }
    Ok(t)
}
