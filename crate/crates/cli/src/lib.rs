//! The `plats` command line: argument parsing and report formatting.
//!
//! [`run`] never prints or exits; it returns a [`CommandOutcome`] so the
//! binary stays a thin shell and everything is testable in-process.

use std::fmt::Display;
use std::io::Read;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use plats::braid::{from_braid_word, parse_braid, serialize_braid, to_braid_word};
use plats::canonical::{canonicalize, decide_equivalence, EquivalenceVerdict};
use plats::census::{count_orbits, dedupe, sample, CensusSpec};
use plats::format::{parse_plat, serialize_plat};
use plats::hypothesis::{bridge_distance, hypothesis_report, length_threshold, HypothesisReport};
use plats::knotcodes::{alexander_polynomial, fingerprint, format_gauss, gauss_code, render_svg, to_pd_code};
use plats::plat::{PlatGrid, TwistRegionId};
use plats::spheres::{
    check_sphere, classify_region, corner_fraction, corner_pair, enumerate_vertical_spheres, isolating_sphere_for, Corner,
    SphereKind, VerticalSphereSpec,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_status: i32,
    pub report: String,
}

impl CommandOutcome {
    fn ok(report: String) -> Self {
        CommandOutcome { exit_status: EXIT_OK, report }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Parser, Debug)]
#[command(name = "plats", version, about = "Plat presentations of knots and links")]
struct Cli {
    /// Report style: prose for people, key=value lines for scripts.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a plat file and summarize it.
    Validate(Input),
    /// Convert a plat to its braid word, or a braid word (--word) to a plat.
    Braid(BraidArgs),
    /// Canonical representative under the four rotations.
    Canon(Input),
    /// Decide whether two plats present the same knot or link.
    Eq {
        first: PathBuf,
        second: PathBuf,
    },
    /// Bridge distance of a 3-highly twisted plat.
    Distance(Input),
    /// Vertical spheres, region classes, isolating spheres and corner fractions.
    Spheres(SpheresArgs),
    /// Orbit counts and seeded samples of a plat family.
    Census(CensusArgs),
    /// Planar diagram code.
    Pd(Input),
    /// Gauss code of a knot.
    Gauss(Input),
    /// SVG drawing, optionally with a sphere's arc.
    Svg {
        #[command(flatten)]
        input: Input,
        /// Sphere c-vector to overlay, e.g. 1,1,1,1,1.
        #[arg(long, value_delimiter = ',')]
        sphere: Option<Vec<usize>>,
    },
    /// Component count, determinant and Alexander evaluations.
    Fingerprint(Input),
}

#[derive(Args, Debug)]
struct Input {
    /// Plat file; standard input when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BraidArgs {
    /// Plat file; standard input when omitted or `-`.
    #[arg(conflicts_with = "word")]
    input: Option<PathBuf>,
    /// Braid word to turn into a plat, e.g. "s2^3 s1^-3 s3^-3".
    #[arg(long, requires = "strands")]
    word: Option<String>,
    /// Strand count of --word.
    #[arg(long)]
    strands: Option<usize>,
    /// Plat length for --word; inferred when omitted.
    #[arg(long, requires = "word")]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct SpheresArgs {
    input: Option<PathBuf>,
    /// Classify this c-vector, e.g. 1,1,1,1,1.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["region", "corner", "classify"])]
    check: Option<Vec<usize>>,
    /// Isolating sphere of twist region i,j.
    #[arg(long, value_parser = parse_region, conflicts_with_all = ["corner", "classify"])]
    region: Option<TwistRegionId>,
    /// Corner continued fraction: TL, TR, BL, BR or all.
    #[arg(long, value_parser = parse_corners, conflicts_with = "classify")]
    corner: Option<Corners>,
    /// Class of every twist region.
    #[arg(long)]
    classify: bool,
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Allowed coefficients, comma separated.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    coeffs: Vec<i64>,
    /// Least allowed |coefficient|.
    #[arg(long, default_value_t = 0)]
    cmin: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draw this many grids and count their distinct classes.
    #[arg(long)]
    sample_k: Option<usize>,
    /// Print the sampled grids.
    #[arg(long, requires = "sample_k")]
    dump: bool,
}

fn parse_region(s: &str) -> Result<TwistRegionId, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [i, j] = parts[..] else {
        return Err(format!("expected i,j but got {s:?}"));
    };
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok(TwistRegionId::new(num(i)?, num(j)?))
}

#[derive(Clone, Debug)]
struct Corners(Vec<Corner>);

fn parse_corners(s: &str) -> Result<Corners, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Corners(Corner::ALL.to_vec()));
    }
    Corner::from_name(s).map(|c| Corners(vec![c])).ok_or_else(|| format!("unknown corner {s:?}; use TL, TR, BL, BR or all"))
}

/// A failure reported with exit status 1; `name` is the error type.
struct DomainError {
    name: String,
    message: String,
}

impl<E: Display> From<E> for DomainError {
    fn from(e: E) -> Self {
        let message = e.to_string();
        let name = message.split(':').next().unwrap_or("Error").trim().to_string();
        DomainError { name, message }
    }
}

fn io_error(path: &str, e: std::io::Error) -> DomainError {
    DomainError { name: "IoError".into(), message: format!("IoError: {path}: {e}") }
}

/// Key/value report that renders either as aligned prose or as `key=value`.
#[derive(Default)]
struct Report {
    lines: Vec<Line>,
}

enum Line {
    Field(String, String),
    Text(String),
}

impl Report {
    fn field(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.lines.push(Line::Field(key.to_string(), value.to_string()));
        self
    }

    /// Free text, shown only in human format.
    fn text(&mut self, t: impl Into<String>) -> &mut Self {
        self.lines.push(Line::Text(t.into()));
        self
    }

    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for line in &self.lines {
            match (line, format) {
                (Line::Field(k, v), Format::Machine) => out.push_str(&format!("{k}={v}\n")),
                (Line::Field(k, v), Format::Human) => out.push_str(&format!("{}: {v}\n", k.replace('_', " "))),
                (Line::Text(t), Format::Human) => {
                    out.push_str(t);
                    if !t.ends_with('\n') {
                        out.push('\n');
                    }
                }
                (Line::Text(_), Format::Machine) => {}
            }
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

struct Context<'a> {
    format: Format,
    stdin: &'a mut dyn Read,
}

impl Context<'_> {
    fn read(&mut self, path: Option<&PathBuf>) -> Result<String, DomainError> {
        match path {
            Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(|e| io_error(&p.display().to_string(), e)),
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| io_error("<stdin>", e))?;
                Ok(s)
            }
        }
    }

    fn grid(&mut self, path: Option<&PathBuf>) -> Result<PlatGrid, DomainError> {
        let text = self.read(path)?;
        Ok(parse_plat(&text)?)
    }
}

/// Runs the command line with the process's standard input.
pub fn run<I, S>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with_input(argv, &mut std::io::stdin())
}

pub fn run_with_input<I, S>(argv: I, stdin: &mut dyn Read) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return CommandOutcome { exit_status: status, report: e.render().to_string() };
        }
    };
    let format = cli.format;
    let mut ctx = Context { format, stdin };
    match dispatch(cli.command, &mut ctx) {
        Ok(report) => CommandOutcome::ok(report),
        Err(e) => {
            let report = match format {
                Format::Human => format!("error: {}\n", e.message),
                Format::Machine => format!("error={}\nmessage={}\n", e.name, e.message),
            };
            CommandOutcome { exit_status: EXIT_DOMAIN, report }
        }
    }
}

fn dispatch(command: Command, ctx: &mut Context) -> Result<String, DomainError> {
    let format = ctx.format;
    match command {
        Command::Validate(input) => {
            let g = ctx.grid(input.input.as_ref())?;
            let mut r = Report::default();
            r.field("valid", "true")
                .field("m", g.m())
                .field("n", g.n())
                .field("closure", g.closure().keyword())
                .field("twist_regions", g.twist_region_count())
                .field("crossings", g.crossing_count())
                .field("components", g.component_count())
                .field("three_highly_twisted", yes_no(g.is_c_highly_twisted(3)));
            Ok(r.render(format))
        }
        Command::Braid(args) => braid(args, ctx),
        Command::Canon(input) => {
            let g = ctx.grid(input.input.as_ref())?;
            let c = canonicalize(&g)?;
            let plat = serialize_plat(&c.grid);
            Ok(match format {
                Format::Human => format!("# realized by {}, orbit size {}\n{plat}", c.realized_by.name(), c.orbit_size),
                Format::Machine => {
                    let mut r = Report::default();
                    r.field("realized_by", c.realized_by.name()).field("orbit_size", c.orbit_size);
                    for row in c.grid.rows() {
                        r.field("row", join(row, " "));
                    }
                    r.render(format)
                }
            })
        }
        Command::Eq { first, second } => {
            let g1 = ctx.grid(Some(&first))?;
            let g2 = ctx.grid(Some(&second))?;
            let verdict = decide_equivalence(&g1, &g2);
            let mut r = Report::default();
            match format {
                Format::Human => r.text(verdict.token()),
                Format::Machine => r.field("verdict", verdict.token()),
            };
            if let EquivalenceVerdict::HypothesesNotMet(a, b) = &verdict {
                for (label, h) in [("first", a), ("second", b)] {
                    for miss in missing_hypotheses(h) {
                        match format {
                            Format::Human => r.text(format!("  {label}: {miss}")),
                            Format::Machine => r.field(&format!("{label}_unmet"), miss),
                        };
                    }
                }
            }
            Ok(r.render(format))
        }
        Command::Distance(input) => {
            let g = ctx.grid(input.input.as_ref())?;
            let d = bridge_distance(&g)?;
            let h = hypothesis_report(&g);
            let mut r = Report::default();
            if !h.length_ok {
                let bound = length_threshold(g.m());
                r.text(format!(
                    "note: n = {} <= 4m(m-2) = {bound}; the distance formula holds but the bridge sphere need not be unique",
                    g.n()
                ));
            }
            r.field("bridge_distance", d).field("length_ok", yes_no(h.length_ok)).field("unique_bridge_sphere", yes_no(h.unique_bridge_sphere));
            Ok(r.render(format))
        }
        Command::Spheres(args) => spheres(args, ctx),
        Command::Census(args) => census(args, format),
        Command::Pd(input) => {
            let g = ctx.grid(input.input.as_ref())?;
            let pd = to_pd_code(&g)?;
            Ok(match format {
                Format::Human => format!("{pd}\n"),
                Format::Machine => format!("crossings={}\npd={pd}\n", pd.crossings.len()),
            })
        }
        Command::Gauss(input) => {
            let g = ctx.grid(input.input.as_ref())?;
            let code = gauss_code(&g)?;
            Ok(match format {
                Format::Human => format!("{}\n", format_gauss(&code)),
                Format::Machine => format!("length={}\ngauss={}\n", code.len(), format_gauss(&code)),
            })
        }
        Command::Svg { input, sphere } => {
            let g = ctx.grid(input.input.as_ref())?;
            let overlay = sphere.map(|c| check_sphere(&g, &c)).transpose()?;
            Ok(render_svg(&g, overlay.as_ref()))
        }
        Command::Fingerprint(input) => {
            let g = ctx.grid(input.input.as_ref())?;
            let f = fingerprint(&g);
            let mut r = Report::default();
            r.field("components", f.components).field("determinant", &f.determinant);
            if let Some(evals) = &f.alexander_evals {
                for (t, v) in evals {
                    r.field(&format!("alexander({t})"), v);
                }
                let poly = alexander_polynomial(&g)?;
                r.field("alexander_polynomial", poly);
            }
            Ok(r.render(format))
        }
    }
}

fn join<T: Display>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn missing_hypotheses(h: &HypothesisReport) -> Vec<String> {
    let mut out = Vec::new();
    if h.closure != plats::plat::Closure::StandardPlat {
        out.push(format!("{} closure is not decided", h.closure.keyword()));
    }
    if !h.width_ok {
        out.push(format!("width m={} < 3", h.m));
    }
    if !h.twist_ok {
        out.push("some twist region has fewer than 3 crossings".to_string());
    }
    if !h.length_ok {
        out.push(format!("length n={} <= 4m(m-2)={}", h.n, length_threshold(h.m)));
    }
    out
}

fn braid(args: BraidArgs, ctx: &mut Context) -> Result<String, DomainError> {
    let format = ctx.format;
    if let Some(text) = args.word {
        let strands = args.strands.expect("clap requires --strands with --word");
        let word = parse_braid(&text, strands)?;
        let g = from_braid_word(&word, args.n)?;
        return Ok(serialize_plat(&g));
    }
    let g = ctx.grid(args.input.as_ref())?;
    let word = to_braid_word(&g);
    Ok(match format {
        Format::Human => format!("{}\n", serialize_braid(&word)),
        Format::Machine => format!("strands={}\nletters={}\nword={}\n", word.strands(), word.letters().len(), serialize_braid(&word)),
    })
}

fn kind_name(s: &VerticalSphereSpec) -> &'static str {
    match s.kind {
        SphereKind::Vertical => "vertical",
        SphereKind::AlmostVertical => "almost-vertical",
    }
}

fn spheres(args: SpheresArgs, ctx: &mut Context) -> Result<String, DomainError> {
    let format = ctx.format;
    let g = ctx.grid(args.input.as_ref())?;
    let mut r = Report::default();
    if let Some(c) = args.check {
        let s = check_sphere(&g, &c)?;
        r.field("sphere", &s).field("kind", kind_name(&s)).field("gaps", join(&s.gaps(), ","));
    } else if let Some(region) = args.region {
        let class = classify_region(&g, region)?;
        r.field("region", region).field("class", class.name());
        let iso = isolating_sphere_for(&g, region)?;
        r.field("lower", &iso.s1).field("lower_kind", kind_name(&iso.s1)).field("upper", &iso.s2).field("upper_kind", kind_name(&iso.s2));
    } else if let Some(Corners(corners)) = args.corner {
        for corner in corners {
            let (a, b) = corner_pair(&g, corner);
            let name = corner_name(corner);
            let q = corner_fraction(&g, corner)?;
            match format {
                Format::Human => r.text(format!("{name}: 1/({a} + 1/{b}) = {q}")),
                Format::Machine => r.field(&format!("corner_{name}"), q),
            };
        }
    } else if args.classify {
        let regions: Vec<TwistRegionId> = g.regions().collect();
        for region in regions {
            let class = classify_region(&g, region)?;
            match format {
                Format::Human => r.text(format!("{region} {}", class.name())),
                Format::Machine => r.field(&format!("class{region}"), class.name()),
            };
        }
    } else {
        let all = enumerate_vertical_spheres(&g);
        r.field("vertical_spheres", all.len());
        for s in &all {
            match format {
                Format::Human => r.text(format!("  {s}")),
                Format::Machine => r.field("sphere", s),
            };
        }
    }
    Ok(r.render(format))
}

fn corner_name(c: Corner) -> &'static str {
    match c {
        Corner::TopLeft => "TL",
        Corner::TopRight => "TR",
        Corner::BottomLeft => "BL",
        Corner::BottomRight => "BR",
    }
}

fn census(args: CensusArgs, format: Format) -> Result<String, DomainError> {
    let spec = CensusSpec::new(args.m, args.n, args.coeffs, args.cmin, args.seed)?;
    let report = count_orbits(&spec)?;
    let mut r = Report::default();
    r.field("m", spec.m)
        .field("n", spec.n)
        .field("coefficients", join(&spec.coefficients.iter().copied().collect::<Vec<_>>(), ","))
        .field("twist_regions", spec.region_count())
        .field("total_grids", &report.total_grids)
        .field("orbits", &report.orbit_count);
    for (g, count) in &report.fixed_counts {
        r.field(&format!("fixed_{}", g.name()), count);
    }
    if let Some(k) = args.sample_k {
        let grids = sample(&spec, k)?;
        let classes = dedupe(&grids);
        let qualifying = grids.iter().filter(|g| hypothesis_report(g).qualifies()).count();
        r.field("seed", spec.seed).field("sampled", grids.len()).field("distinct_classes", classes.len()).field("qualifying", qualifying);
        if args.dump {
            for (idx, g) in grids.iter().enumerate() {
                match format {
                    Format::Human => r.text(format!("# sample {}\n{}", idx + 1, serialize_plat(g))),
                    Format::Machine => r.field("grid", join(&g.flatten(), " ")),
                };
            }
        }
    }
    Ok(r.render(format))
}
