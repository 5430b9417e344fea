//! The `bigrade` command-line front end.

pub mod parser;
pub mod plot;
pub mod report;

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{Bidegree, BlockOrder, Field, Ideal};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, initial_ideal};
use crate::ideal_ops::{saturate, SatMode};
use crate::regularity::{self, bigin, certify_absence, certify_exact, certify_presence, certify_presence_refined, xreg_region, xtor, ytor};
use crate::staircase::{Ambient, Region};

use self::parser::{format_ideal, parse_ideal, parse_polynomial};
use self::plot::Plot;
use self::report::{bidegree_counts, bidegrees, certificate, monomials, region, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// `A:B`, the upper corner of the box `[0, A] × [0, B]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxArg(pub Bidegree);

impl FromStr for BoxArg {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("invalid box '{s}', expected <A>:<B> with A, B >= 0"));
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b.trim().parse().map_err(|_| bad())?;
        if a < 0 || b < 0 {
            return Err(bad());
        }
        Ok(BoxArg(Bidegree::new(a, b)))
    }
}

#[derive(Debug, Parser)]
#[command(name = "bigrade", version, about = "Bigraded Groebner bases, bigeneric initial ideals and regularity regions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Block order: x<y puts the x-block lowest.
    #[arg(long, global = true, default_value = "x<y")]
    pub order: BlockOrder,

    /// Coefficient field, qq or fp:<prime>; overrides the file's directive.
    #[arg(long, global = true)]
    pub field: Option<Field>,

    /// Seed for the random changes of coordinates.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    /// Upper corner of the bidegree box, as A:B.
    #[arg(long = "box", global = true, value_name = "A:B")]
    pub bbox: Option<BoxArg>,

    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Also write an SVG plot to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub svg: Option<PathBuf>,

    /// Accept generators that are not bihomogeneous.
    #[arg(long, global = true)]
    pub allow_inhomogeneous: bool,

    /// Corrupt the region handed to the certifier (testing only).
    #[arg(long, global = true, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Groebner basis.
    Gb { file: PathBuf },
    /// Bigeneric initial ideal.
    Bigin { file: PathBuf },
    /// Bidegrees of the minimal generators of the input and of bigin.
    Mingens { file: PathBuf },
    /// Hilbert function of S/I on the box.
    Hf { file: PathBuf },
    /// Saturation; prints an ideal file.
    Sat {
        /// b, mx, my or poly:<expr>
        #[arg(long)]
        by: String,
        file: PathBuf,
    },
    /// Region where the Hilbert function of an empty-variety ideal vanishes.
    RegEmpty { file: PathBuf },
    /// The partial regularity region xreg.
    Xreg { file: PathBuf },
    /// xtor and ytor of bigin.
    Xtor { file: PathBuf },
    /// Absence, presence and exact-criterion certificates for bigin.
    Certify {
        /// Bound presence witnesses by the y-degree of the failing colon
        /// equality instead of the boundary point's.
        #[arg(long)]
        refined: bool,
        file: PathBuf,
    },
    /// Lattice plot of generator bidegrees and a region.
    Plot {
        #[arg(long, value_enum, default_value = "xreg-shifted")]
        region: PlotRegion,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlotRegion {
    None,
    Xreg,
    XregShifted,
    RegEmpty,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Gb { .. } => "gb",
            Command::Bigin { .. } => "bigin",
            Command::Mingens { .. } => "mingens",
            Command::Hf { .. } => "hf",
            Command::Sat { .. } => "sat",
            Command::RegEmpty { .. } => "reg-empty",
            Command::Xreg { .. } => "xreg",
            Command::Xtor { .. } => "xtor",
            Command::Certify { .. } => "certify",
            Command::Plot { .. } => "plot",
        }
    }

    fn file(&self) -> &Path {
        match self {
            Command::Gb { file }
            | Command::Bigin { file }
            | Command::Mingens { file }
            | Command::Hf { file }
            | Command::Sat { file, .. }
            | Command::RegEmpty { file }
            | Command::Xreg { file }
            | Command::Xtor { file }
            | Command::Certify { file, .. }
            | Command::Plot { file, .. } => file,
        }
    }
}

/// Parse `args` (program name first), run the command and write its output.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    Error::Usage(String::new()).exit_code()
                }
            };
        }
    };
    match run_cli(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Run a parsed command line.
pub fn run_cli(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let start = Instant::now();
    let report = execute(cli)?;
    if let Some(path) = &cli.svg {
        let plot = report
            .plot
            .as_ref()
            .ok_or_else(|| Error::Usage(format!("--svg is not supported by '{}'", report.command)))?;
        std::fs::write(path, plot.svg()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    match cli.format {
        Format::Json => out.write_all(report.json_string().as_bytes())?,
        Format::Text => {
            out.write_all(report.text.as_bytes())?;
            writeln!(out, "# time: {} ms", start.elapsed().as_millis())?;
        }
    }
    Ok(())
}

/// Run a parsed command line and return its report.
pub fn execute(cli: &Cli) -> Result<Report> {
    let file = cli.command.file();
    let parsed = parse_ideal(file, cli.field, cli.allow_inhomogeneous)?;
    let ring = parsed.ring.with_order(cli.order);
    let ideal = parsed.ideal.in_ring(ring)?;
    let mut rep = Report::new(cli.command.name(), &file.display().to_string(), cli.seed, cli.order, ring.field());
    let input_degrees: Vec<Bidegree> = ideal.generators().iter().filter_map(|g| g.bidegree().ok()).collect();
    let mut text = String::new();

    match &cli.command {
        Command::Gb { .. } => {
            let gb = groebner_basis(&ideal);
            let elems = gb.elements();
            rep.set(
                "basis",
                json!(elems.iter().map(|g| g.to_string()).collect::<Vec<_>>()),
            );
            rep.set("leading_monomials", monomials(&gb.leading_monomials()));
            rep.set(
                "bidegrees",
                json!(elems.iter().map(|g| g.bidegree().ok().map(report::bidegree)).collect::<Vec<_>>()),
            );
            let _ = writeln!(text, "# reduced Groebner basis, order {}, {} elements", cli.order, elems.len());
            text.push_str(&format_ideal(&gb.to_ideal()));
        }
        Command::Bigin { .. } => {
            let b = bigin(&ideal, cli.order, cli.seed)?;
            let gens = b.ideal.generators();
            rep.set("generators", monomials(gens));
            rep.set("generator_bidegrees", bidegrees(b.ideal.generator_bidegrees()));
            rep.set("seeds", json!([b.seeds.0, b.seeds.1]));
            rep.set("stable", json!(b.stable));
            let _ = writeln!(
                text,
                "bigin under {} (seeds {}, {}), {} minimal generators",
                cli.order,
                b.seeds.0,
                b.seeds.1,
                gens.len()
            );
            for g in gens {
                let _ = writeln!(text, "  {}  {g}", g.bidegree());
            }
            rep.plot = Some(plot_of(&input_degrees, &b.ideal.generator_bidegrees(), None, "", cli.bbox));
        }
        Command::Mingens { .. } => {
            let b = bigin(&ideal, cli.order, cli.seed)?;
            let degs: Vec<Bidegree> = b.ideal.generators().iter().map(|g| g.bidegree()).collect();
            rep.set("input_generator_bidegrees", bidegree_counts(input_degrees.iter().copied()));
            rep.set("bigin_generator_bidegrees", bidegree_counts(degs.iter().copied()));
            let _ = writeln!(text, "input generators by bidegree:");
            write_counts(&mut text, &input_degrees);
            let _ = writeln!(text, "bigin minimal generators by bidegree (order {}):", cli.order);
            write_counts(&mut text, &degs);
            rep.plot = Some(plot_of(&input_degrees, &degs, None, "", cli.bbox));
        }
        Command::Hf { .. } => {
            let corner = cli.bbox.map(|b| b.0).unwrap_or(Bidegree::new(8, 8));
            let num = initial_ideal(&ideal).hilbert_numerator();
            let table: Vec<Vec<u128>> = (0..=corner.a)
                .map(|a| (0..=corner.b).map(|b| num.eval(Bidegree::new(a, b))).collect())
                .collect();
            rep.set("box", report::bidegree(corner));
            rep.set("hf", json!(table.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()));
            let width = table
                .iter()
                .flatten()
                .map(|v| v.to_string().len())
                .max()
                .unwrap_or(1)
                .max(3);
            let _ = writeln!(text, "HF of S/I, rows a = 0..{}, columns b = 0..{}", corner.a, corner.b);
            let _ = write!(text, "{:>4} |", "a\\b");
            for b in 0..=corner.b {
                let _ = write!(text, " {b:>width$}");
            }
            text.push('\n');
            for (a, row) in table.iter().enumerate() {
                let _ = write!(text, "{a:>4} |");
                for v in row {
                    let _ = write!(text, " {v:>width$}");
                }
                text.push('\n');
            }
        }
        Command::Sat { by, .. } => {
            let mode = parse_sat_mode(by, &ideal)?;
            let sat = saturate(&ideal, &mode)?;
            let gb = groebner_basis(&sat);
            rep.set("by", json!(by));
            rep.set(
                "generators",
                json!(gb.elements().iter().map(|g| g.to_string()).collect::<Vec<_>>()),
            );
            rep.set(
                "generator_bidegrees",
                bidegrees(gb.elements().iter().filter_map(|g| g.bidegree().ok())),
            );
            let _ = writeln!(text, "# saturation by {by}, {} generators", gb.elements().len());
            text.push_str(&format_ideal(&gb.to_ideal()));
        }
        Command::RegEmpty { .. } => {
            let reg = regularity::reg_empty(&ideal)?;
            let init = initial_ideal(&ideal);
            rep.set("reg", region(&reg));
            rep.set("initial_generator_bidegrees", bidegrees(init.generator_bidegrees()));
            let _ = writeln!(text, "reg = {reg}");
            rep.plot = Some(plot_of(&input_degrees, &init.generator_bidegrees(), Some(reg), "reg", cli.bbox));
        }
        Command::Xreg { .. } => {
            require_xlow(cli, "xreg")?;
            let b = bigin(&ideal, cli.order, cli.seed)?;
            let xreg = xreg_region(&b.ideal)?;
            rep.set("xreg", region(&xreg));
            rep.set("bigin_generator_bidegrees", bidegrees(b.ideal.generator_bidegrees()));
            rep.set("seeds", json!([b.seeds.0, b.seeds.1]));
            let _ = writeln!(text, "xreg = {xreg}");
            let _ = writeln!(text, "bigin generator bidegrees: {}", list(&b.ideal.generator_bidegrees()));
            rep.plot = Some(plot_of(&input_degrees, &b.ideal.generator_bidegrees(), Some(xreg), "xreg", cli.bbox));
        }
        Command::Xtor { .. } => {
            let b = bigin(&ideal, cli.order, cli.seed)?;
            let (xt, yt) = (xtor(&b.ideal)?, ytor(&b.ideal)?);
            rep.set("xtor", json!(xt));
            rep.set("ytor", json!(yt));
            rep.set("bigin_generator_bidegrees", bidegrees(b.ideal.generator_bidegrees()));
            let _ = writeln!(text, "xtor = {xt}");
            let _ = writeln!(text, "ytor = {yt}");
            rep.plot = Some(plot_of(&input_degrees, &b.ideal.generator_bidegrees(), None, "", cli.bbox));
        }
        Command::Certify { refined, .. } => {
            require_xlow(cli, "certify")?;
            let b = bigin(&ideal, cli.order, cli.seed)?;
            let m = &b.ideal;
            let xreg = xreg_region(m)?;
            let claimed = if cli.inject_fault {
                Region::full(Ambient::PositiveX)
            } else {
                xreg.clone()
            };
            let mut certs = vec![certify_absence(m, &claimed)?];
            if *refined {
                certs.extend(certify_presence_refined(m, &claimed)?);
            } else {
                certs.extend(certify_presence(m, &claimed)?);
            }
            let corner = cli
                .bbox
                .map(|b| b.0)
                .unwrap_or_else(|| m.max_generator_bidegree().unwrap_or(Bidegree::ZERO) + Bidegree::new(1, 1));
            for a in 1..=corner.a {
                for bb in 0..=corner.b {
                    certs.push(certify_exact(m, Bidegree::new(a, bb))?);
                }
            }
            if let Some(c) = certs.iter().find(|c| !c.recheck(m)) {
                return Err(Error::Contradiction {
                    message: format!("{} certificate failed its recheck", c.kind),
                    dump: format!("ideal: {m}\nregion: {}", c.region),
                });
            }
            rep.set("xreg", region(&xreg));
            rep.set("refined", json!(refined));
            rep.set("bigin_generator_bidegrees", bidegrees(m.generator_bidegrees()));
            rep.set("box", report::bidegree(corner));
            rep.set("certificates", json!(certs.iter().map(certificate).collect::<Vec<_>>()));
            let _ = writeln!(text, "xreg = {xreg}");
            let _ = writeln!(text, "absence: no minimal generator in {}", certs[0].region);
            for c in certs.iter().filter(|c| c.kind == regularity::CertificateKind::Presence) {
                if let (Some(d), Some(w)) = (c.bidegree, &c.witness) {
                    let _ = writeln!(text, "presence: bound {d} witnessed by {w} of bidegree {}", w.bidegree());
                }
            }
            let found: Vec<Bidegree> = certs
                .iter()
                .filter(|c| c.kind == regularity::CertificateKind::ExactCriterion && c.verdict)
                .filter_map(|c| c.bidegree)
                .collect();
            let _ = writeln!(
                text,
                "exact criterion on [1,{}] x [0,{}]: generators at {}",
                corner.a,
                corner.b,
                list(&found)
            );
            let _ = writeln!(text, "{} certificates, all rechecked", certs.len());
            rep.plot = Some(plot_of(
                &input_degrees,
                &m.generator_bidegrees(),
                Some(xreg.shift(Bidegree::new(1, 0))),
                "xreg + (1,0)",
                cli.bbox,
            ));
        }
        Command::Plot { region: which, .. } => {
            let (mono, shaded, label): (Vec<Bidegree>, Option<Region>, &str) = match which {
                PlotRegion::RegEmpty => {
                    let reg = regularity::reg_empty(&ideal)?;
                    (initial_ideal(&ideal).generator_bidegrees(), Some(reg), "reg")
                }
                PlotRegion::None => (bigin(&ideal, cli.order, cli.seed)?.ideal.generator_bidegrees(), None, ""),
                PlotRegion::Xreg | PlotRegion::XregShifted => {
                    require_xlow(cli, "plot of xreg")?;
                    let b = bigin(&ideal, cli.order, cli.seed)?;
                    let xreg = xreg_region(&b.ideal)?;
                    if *which == PlotRegion::Xreg {
                        (b.ideal.generator_bidegrees(), Some(xreg), "xreg")
                    } else {
                        (b.ideal.generator_bidegrees(), Some(xreg.shift(Bidegree::new(1, 0))), "xreg + (1,0)")
                    }
                }
            };
            let p = plot_of(&input_degrees, &mono, shaded, label, cli.bbox);
            rep.set("input_generator_bidegrees", bidegrees(p.input.iter().copied()));
            rep.set("monomial_generator_bidegrees", bidegrees(p.monomial.iter().copied()));
            rep.set("region", p.region.as_ref().map(region).unwrap_or(serde_json::Value::Null));
            rep.set("box", report::bidegree(p.corner));
            text.push_str(&p.ascii());
            rep.plot = Some(p);
        }
    }
    rep.text = text;
    Ok(rep)
}

fn require_xlow(cli: &Cli, what: &str) -> Result<()> {
    if cli.order != BlockOrder::XLow {
        return Err(Error::Usage(format!("{what} is defined for the order x<y")));
    }
    Ok(())
}

/// `b`, `mx`, `my` or `poly:<expr>`.
pub fn parse_sat_mode(by: &str, ideal: &Ideal) -> Result<SatMode> {
    match by.trim() {
        "b" => Ok(SatMode::B),
        "mx" => Ok(SatMode::Mx),
        "my" => Ok(SatMode::My),
        s => match s.strip_prefix("poly:") {
            Some(expr) => Ok(SatMode::Poly(parse_polynomial(expr, *ideal.ring())?)),
            None => Err(Error::Usage(format!("unknown saturation target '{s}', expected b, mx, my or poly:<expr>"))),
        },
    }
}

fn plot_of(input: &[Bidegree], mono: &[Bidegree], region: Option<Region>, label: &str, bbox: Option<BoxArg>) -> Plot {
    let mut input = input.to_vec();
    input.sort();
    input.dedup();
    let mut monomial = mono.to_vec();
    monomial.sort();
    monomial.dedup();
    let mut p = Plot {
        corner: Bidegree::ZERO,
        input,
        monomial,
        region,
        region_label: label.to_string(),
    };
    match bbox {
        Some(b) => p.corner = b.0,
        None => p.fit(Bidegree::new(4, 4)),
    }
    p
}

fn list(ds: &[Bidegree]) -> String {
    let mut v = ds.to_vec();
    v.sort();
    v.dedup();
    let parts: Vec<String> = v.iter().map(|d| d.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn write_counts(text: &mut String, ds: &[Bidegree]) {
    let mut counts = std::collections::BTreeMap::new();
    for d in ds {
        *counts.entry(*d).or_insert(0) += 1;
    }
    for (d, c) in counts {
        let _ = writeln!(text, "  {d}: {c}");
    }
}
