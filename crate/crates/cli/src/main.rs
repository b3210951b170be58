//! `dmod`: annihilators, b-functions and Bernstein-Sato data from the command line.

mod corpus;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use dmod_core::dmod::{self, DmodOptions, OperatorMethod};
use dmod_core::galgebra::{commutative, weyl, weyl_s};
use dmod_core::groebner::{buchberger, lt_dimension_of, Strategy};
use dmod_core::polyarith::{MonOrder, TermOrder};
use dmod_core::text::{parse_ideal_file, parse_poly, parse_ring};
use dmod_core::{Algebra, DmodError, OpPoly, Rational};

use output::Report;

#[derive(Parser, Debug)]
#[command(name = "dmod", version, about = "Annihilators, b-functions and Bernstein-Sato polynomials over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(clap::Args, Debug, Clone)]
struct Opts {
    /// Variables of the commutative input ring, comma separated.
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Input polynomial; repeat for lists and ideals.
    #[arg(long = "poly", global = true, allow_hyphen_values = true)]
    polys: Vec<String>,
    /// File with a `ring:` line followed by one polynomial per line.
    #[arg(long, global = true)]
    ideal: Option<PathBuf>,
    /// Monomial ordering: dp, lp, wp:<weights> or elim:<vars>.
    #[arg(long, global = true)]
    ord: Option<String>,
    /// Rational exponent or root candidate, e.g. -1/2.
    #[arg(long, global = true, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Comma-separated integer weights.
    #[arg(long, global = true, allow_hyphen_values = true)]
    weights: Option<String>,
    /// Operator order bound for `ann-k`.
    #[arg(long, global = true)]
    k: Option<u32>,
    /// Degree cap for Gröbner bases.
    #[arg(long, global = true)]
    cap: Option<u32>,
    /// Wall-clock limit in seconds for Gröbner bases.
    #[arg(long, global = true)]
    timeout: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include the expensive corpus cases in `verify`.
    #[arg(long, global = true)]
    stretch: bool,
    #[arg(long, global = true, value_enum, default_value_t = Engine::Normal)]
    engine: Engine,
    /// Operator construction used by `operator`.
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Modulo)]
    method: MethodArg,
    /// Element whose minimal polynomial `principal-intersect` finds.
    #[arg(long, global = true, allow_hyphen_values = true)]
    sigma: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Engine {
    Normal,
    Slim,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Modulo,
    Search,
    Lift,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Cmd {
    /// Ann(f_1^s_1..f_p^s_p) in D[s] (Briançon-Maisonobe).
    Annfs,
    /// Operators of order at most one annihilating f^s.
    AnnfsLog,
    /// Operators of order at most k annihilating f^s.
    AnnK,
    /// Ann(g) in the Weyl algebra.
    AnnPoly,
    /// Ann(g/f); give g then f.
    AnnRat,
    /// Ann(f^alpha).
    AnnFalpha,
    /// Global b-function via the initial ideal.
    Bfct,
    /// Global b-function via Ann(f^s) + <f>.
    BfctAnn,
    /// b-function of a Weyl algebra ideal with respect to weights.
    BfctIdeal,
    /// Whether alpha is a root of b_f(s), with its multiplicity.
    CheckRoot,
    /// Smallest integer root of b_f.
    MinIntRoot,
    /// b_f together with an operator P with P f^(s+1) = b_f(s) f^s.
    Operator,
    /// Bernstein-Sato ideal of f_1..f_p.
    BsIdeal,
    /// Ann(f^s) in D<S> for a list f_1..f_r.
    AnnfsVar,
    /// Bernstein-Sato polynomial of the variety V(f_1..f_r).
    BfctVar,
    /// Dimension of the leading-term ideal of a Gröbner basis.
    Gkdim,
    /// Reduced Gröbner basis.
    Gb,
    /// Minimal polynomial of --sigma modulo an ideal.
    PrincipalIntersect,
    /// Univariate eliminants of a zero-dimensional ideal.
    Solve0,
    /// Replays the built-in corpus.
    Verify,
}

impl Cmd {
    fn name(self) -> &'static str {
        match self {
            Cmd::Annfs => "annfs",
            Cmd::AnnfsLog => "annfs-log",
            Cmd::AnnK => "ann-k",
            Cmd::AnnPoly => "ann-poly",
            Cmd::AnnRat => "ann-rat",
            Cmd::AnnFalpha => "ann-falpha",
            Cmd::Bfct => "bfct",
            Cmd::BfctAnn => "bfct-ann",
            Cmd::BfctIdeal => "bfct-ideal",
            Cmd::CheckRoot => "check-root",
            Cmd::MinIntRoot => "min-int-root",
            Cmd::Operator => "operator",
            Cmd::BsIdeal => "bs-ideal",
            Cmd::AnnfsVar => "annfs-var",
            Cmd::BfctVar => "bfct-var",
            Cmd::Gkdim => "gkdim",
            Cmd::Gb => "gb",
            Cmd::PrincipalIntersect => "principal-intersect",
            Cmd::Solve0 => "solve0",
            Cmd::Verify => "verify",
        }
    }
}

/// Failure of a command: bad invocation (exit 1) or failed computation (exit 2).
pub enum Failure {
    Usage(String),
    Compute(DmodError),
}

impl From<DmodError> for Failure {
    fn from(e: DmodError) -> Self {
        match e {
            DmodError::Parse { .. } | DmodError::InvalidInput(_) | DmodError::ZeroInput | DmodError::ConstantInput => {
                Failure::Usage(e.to_string())
            }
            e => Failure::Compute(e),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

/// Parsed inputs shared by all commands.
struct Session {
    names: Vec<String>,
    ring: Algebra,
    texts: Vec<String>,
    opts: DmodOptions,
    args: Opts,
}

impl Session {
    fn new(args: Opts) -> Result<Self, Failure> {
        let mut texts = args.polys.clone();
        let mut names = match &args.ring {
            Some(r) => Some(parse_ring(r)?),
            None => None,
        };
        if let Some(path) = &args.ideal {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let (file_ring, lines) = parse_ideal_file(&text)?;
            if names.as_ref().is_some_and(|n| *n != file_ring) {
                return usage("--ring differs from the ring line of the ideal file");
            }
            names = Some(file_ring);
            texts.extend(lines.into_iter().map(|(_, l)| l));
        }
        let names = match names {
            Some(n) => n,
            None => return usage("--ring is required"),
        };
        let mut opts = DmodOptions::default();
        opts.gb.degree_cap = args.cap;
        opts.gb.deadline = args.timeout.map(|t| Instant::now() + Duration::from_secs(t));
        opts.gb.strategy = match args.engine {
            Engine::Normal => Strategy::Normal,
            Engine::Slim => Strategy::Slim,
        };
        let ring = apply_ord(commutative(&names)?, args.ord.as_deref())?;
        Ok(Session { names, ring, texts, opts, args })
    }

    fn polys_in(&self, alg: &Algebra) -> Result<Vec<OpPoly>, Failure> {
        self.texts.iter().map(|t| parse_poly(t, alg).map_err(Failure::from)).collect()
    }

    fn inputs(&self) -> Result<Vec<OpPoly>, Failure> {
        if self.texts.is_empty() {
            return usage("give at least one --poly or an --ideal file");
        }
        self.polys_in(&self.ring)
    }

    fn single(&self) -> Result<OpPoly, Failure> {
        let mut ps = self.inputs()?;
        if ps.len() != 1 {
            return usage(format!("expected exactly one --poly, got {}", ps.len()));
        }
        Ok(ps.remove(0))
    }

    fn alpha(&self) -> Result<Rational, Failure> {
        let Some(a) = &self.args.alpha else { return usage("--alpha is required") };
        parse_rational(a)
    }

    fn weights(&self) -> Result<Option<Vec<i64>>, Failure> {
        self.args.weights.as_deref().map(parse_weights).transpose()
    }

    /// The smallest of commutative ring, Weyl algebra and `D[s]` in which every input parses.
    fn detect_algebra(&self) -> Result<Algebra, Failure> {
        let candidates = [Ok(self.ring.clone()), weyl(&self.names), weyl_s(&self.names, 1)];
        let mut last = None;
        for c in candidates {
            let alg = apply_ord(c?, self.args.ord.as_deref())?;
            match self.texts.iter().try_for_each(|t| parse_poly(t, &alg).map(|_| ())) {
                Ok(()) => return Ok(alg),
                Err(e) => last = Some(e),
            }
        }
        Err(last.map(Failure::from).unwrap_or_else(|| Failure::Usage("no input".into())))
    }
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    let bad = || Failure::Usage(format!("'{s}' is not a rational number"));
    let (n, d) = s.trim().split_once('/').unwrap_or((s.trim(), "1"));
    let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == 0.into() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn parse_weights(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',').map(|w| w.trim().parse().map_err(|_| Failure::Usage(format!("'{w}' is not an integer weight")))).collect()
}

/// Re-orders `alg` by `dp`, `lp`, `wp:<weights>` or `elim:<vars>`.
fn apply_ord(alg: Algebra, spec: Option<&str>) -> Result<Algebra, Failure> {
    let Some(spec) = spec else { return Ok(alg) };
    let n = alg.nvars();
    let order = match spec.split_once(':') {
        None if spec == "dp" => MonOrder::DegRevLex,
        None if spec == "lp" => MonOrder::Lex,
        Some(("wp", w)) => {
            let w = parse_weights(w)?;
            if w.len() != n {
                return usage(format!("wp needs {n} weights for {}", alg.names().join(",")));
            }
            MonOrder::weighted(w, MonOrder::DegRevLex)
        }
        Some(("elim", vars)) => {
            let drop = vars
                .split(',')
                .map(|v| alg.index_of(v.trim()).ok_or_else(|| Failure::Usage(format!("unknown variable '{v}' in elim"))))
                .collect::<Result<Vec<_>, _>>()?;
            MonOrder::elimination(n, &drop, MonOrder::DegRevLex)
        }
        _ => return usage(format!("unknown ordering '{spec}'; use dp, lp, wp:<weights> or elim:<vars>")),
    };
    TermOrder::new(order.clone(), Default::default(), n)?;
    Ok(alg.with_order(order)?)
}

fn run(cmd: Cmd, s: &Session) -> Outcome {
    let o = &s.opts;
    let mut rep = Report::new(cmd.name(), &s.names);
    match cmd {
        Cmd::Annfs => {
            let ann = dmod::sannfs_bm(&s.ring, &s.inputs()?, o)?;
            rep.generators(&ann.gens.gens, &ann.algebra);
        }
        Cmd::AnnfsLog => {
            let ann = dmod::sannfs_log(&s.ring, &s.single()?, o)?;
            rep.generators(&ann.gens.gens, &ann.algebra);
        }
        Cmd::AnnK => {
            let Some(k) = s.args.k else { return usage("--k is required") };
            let ann = dmod::ann_upto_k(&s.ring, &s.single()?, k, o)?;
            rep.generators(&ann.gens.gens, &ann.algebra);
        }
        Cmd::AnnPoly => {
            let gb = dmod::ann_poly(&s.ring, &s.single()?, o)?;
            rep.generators(&gb.gens, &weyl(&s.names)?);
        }
        Cmd::AnnRat => {
            let ps = s.inputs()?;
            let [g, f] = ps.as_slice() else { return usage("ann-rat takes --poly <numerator> --poly <denominator>") };
            let gb = dmod::ann_rat(&s.ring, g, f, o)?;
            rep.generators(&gb.gens, &weyl(&s.names)?);
        }
        Cmd::AnnFalpha => {
            let gb = dmod::ann_falpha(&s.ring, &s.single()?, &s.alpha()?, o)?;
            rep.generators(&gb.gens, &weyl(&s.names)?);
        }
        Cmd::Bfct => {
            let w = s.weights()?;
            rep.bfunction(&dmod::bfct(&s.ring, &s.single()?, w.as_deref(), o)?);
        }
        Cmd::BfctAnn => rep.bfunction(&dmod::bfct_ann(&s.ring, &s.single()?, o)?),
        Cmd::BfctIdeal => {
            let d = apply_ord(weyl(&s.names)?, s.args.ord.as_deref())?;
            if s.texts.is_empty() {
                return usage("give the ideal with --poly or --ideal");
            }
            let w = s.weights()?.unwrap_or_else(|| vec![1; s.names.len()]);
            rep.bfunction(&dmod::bfct_ideal(&d, &s.polys_in(&d)?, &w, o)?);
        }
        Cmd::CheckRoot => {
            // The library tests roots of b_f(-s).
            let alpha = -s.alpha()?;
            let ann = dmod::sannfs_bm(&s.ring, &[s.single()?], o)?;
            let m = if dmod::check_root(&ann, &alpha, o)? { dmod::root_multiplicity(&ann, &alpha, o)? } else { 0 };
            rep.value("root", if m > 0 { "yes" } else { "no" });
            rep.value("multiplicity", m);
        }
        Cmd::MinIntRoot => {
            let ann = dmod::sannfs_bm(&s.ring, &[s.single()?], o)?;
            rep.value("min-int-root", dmod::min_integer_root(&ann, o)?);
        }
        Cmd::Operator => {
            let f = s.single()?;
            let b = dmod::bfct_ann(&s.ring, &f, o)?;
            let ann = dmod::sannfs_bm(&s.ring, &[f], o)?;
            let method = match s.args.method {
                MethodArg::Modulo => OperatorMethod::Modulo,
                MethodArg::Search => OperatorMethod::Search,
                MethodArg::Lift => OperatorMethod::Lift,
            };
            let data = dmod::bernstein_operator(&ann, &b, method, o)?;
            let p = dmod::bernstein_operator_nf(&ann, data.operator.as_ref().expect("operator methods return an operator"), o)?;
            rep.bfunction(&b);
            rep.value("operator", dmod_core::text::render_poly(&p, &ann.algebra));
        }
        Cmd::BsIdeal => {
            let (sring, gb) = dmod::bs_ideal(&s.ring, &s.inputs()?, o)?;
            rep.generators(&gb.gens, &sring);
        }
        Cmd::AnnfsVar => {
            let ann = dmod::sannfs_var(&s.ring, &s.inputs()?, o)?;
            rep.generators(&ann.gens.gens, &ann.algebra);
        }
        Cmd::BfctVar => {
            let v = dmod::bfct_var(&s.ring, &s.inputs()?, None, o)?;
            rep.value("codim", v.codim);
            rep.value("b_f", v.b.poly.with_var("sigma"));
            rep.bfunction(&v.b_z);
        }
        Cmd::Gkdim => {
            let alg = s.detect_algebra()?;
            let gb = buchberger(&alg, &s.inputs_in(&alg)?, &o.gb)?;
            rep.value("gkdim", lt_dimension_of(&gb.gens, alg.nvars()));
        }
        Cmd::Gb => {
            let alg = s.detect_algebra()?;
            let gb = buchberger(&alg, &s.inputs_in(&alg)?, &o.gb)?;
            rep.generators(&gb.gens, &alg);
        }
        Cmd::PrincipalIntersect => {
            let alg = s.detect_algebra()?;
            let sigma = match &s.args.sigma {
                Some(t) => parse_poly(t, &alg)?,
                None if alg.index_of("s").is_some() => parse_poly("s", &alg)?,
                None => return usage("--sigma is required"),
            };
            let b = dmod::principal_intersect(&alg, &s.inputs_in(&alg)?, &sigma, o)?;
            rep.value("intersection", b.with_var("sigma"));
            if let Ok(bf) = dmod_core::polyarith::unipoly_rational_roots(&b) {
                rep.bfunction(&bf);
            }
        }
        Cmd::Solve0 => {
            for u in dmod::solve0(&s.ring, &s.inputs()?, o)? {
                rep.value(u.var_name(), &u);
            }
        }
        Cmd::Verify => return Ok(corpus::verify(s.args.stretch, &rep)),
    }
    Ok(rep)
}

impl Session {
    fn inputs_in(&self, alg: &Algebra) -> Result<Vec<OpPoly>, Failure> {
        if self.texts.is_empty() {
            return usage("give at least one --poly or an --ideal file");
        }
        self.polys_in(alg)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.opts.format;
    let name = cli.command.name();
    let result = match cli.command {
        Cmd::Verify => {
            let names = cli.opts.ring.clone().unwrap_or_default();
            let rep = Report::new(name, &names.split(',').filter(|s| !s.is_empty()).map(String::from).collect::<Vec<_>>());
            Ok(corpus::verify(cli.opts.stretch, &rep))
        }
        cmd => Session::new(cli.opts).and_then(|s| run(cmd, &s)),
    };
    match result {
        Ok(rep) => {
            print!("{}", rep.render(format));
            if rep.failed() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            output::error(format, name, "usage", &msg);
            ExitCode::from(1)
        }
        Err(Failure::Compute(e)) => {
            output::error(format, name, e.reason(), &e.to_string());
            ExitCode::from(2)
        }
    }
}
