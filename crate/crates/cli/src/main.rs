use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use nilorbits::duality::{
    apply_map, verify_duality_theorem, verify_map_algebra, verify_quartets, DualityMap,
};
use nilorbits::exceptional::{consistency_check, verify_exceptional_duality, ExceptionalAlgebra};
use nilorbits::lusztig::verify_lusztig;
use nilorbits::render::verify_figures;
use nilorbits::{
    classify, emit_dot, emit_json, emit_text, Algebra, Family, GroupForm, Orbit, OrbitContext,
    OrbitPoset, Partition, RenderedGraph, Report, Style, VeryEvenTag,
};

#[derive(Parser)]
#[command(
    name = "nilorbits",
    version,
    about = "Nilpotent orbit posets and their minimal special degenerations"
)]
struct Cli {
    #[command(flatten)]
    ctx: ContextArgs,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Typeset labels for reading; never used in fixtures.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ContextArgs {
    /// Classical type: A, B, C or D.
    #[arg(long = "type", global = true)]
    algebra: Option<Algebra>,
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// all, special or alt (the alternative special family of type C).
    #[arg(long, global = true, default_value = "special")]
    family: Family,
    /// full or connected.
    #[arg(long, global = true, default_value = "full")]
    form: GroupForm,
}

impl ContextArgs {
    fn algebra(&self) -> Result<Algebra> {
        self.algebra.context("--type is required")
    }

    fn build(&self) -> Result<OrbitContext> {
        let rank = self.rank.context("--rank is required")?;
        let family = if self.algebra()? == Algebra::A {
            Family::All
        } else {
            self.family
        };
        Ok(OrbitContext::new(self.algebra()?, rank, family, self.form)?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Quartets,
    Duality,
    Maps,
    Lusztig,
    Fixtures,
    Exceptional,
}

#[derive(Subcommand)]
enum Command {
    /// List the orbits of a family with their dimensions.
    Orbits,
    /// The labelled Hasse diagram of a family.
    Hasse,
    /// Label of a covering pair.
    Classify {
        #[arg(long)]
        above: String,
        #[arg(long)]
        below: String,
    },
    /// Apply d, f or dls to an orbit.
    Dual {
        #[arg(long, value_parser = parse_map)]
        map: DualityMap,
        #[arg(long)]
        orbit: String,
    },
    /// Run a verification sweep; exits 1 on any violation.
    Verify {
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// An embedded exceptional graph.
    Exceptional {
        /// G2, F4, E6, E7, E8 or D4_S3.
        #[arg(long = "algebra", id = "exceptional_algebra")]
        group: ExceptionalAlgebra,
    },
}

// Writes to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

fn parse_map(s: &str) -> Result<DualityMap, String> {
    s.parse().map_err(|e: nilorbits::Error| e.to_string())
}

/// Parses `4^2:I` style orbit names.
fn parse_orbit(s: &str) -> Result<Orbit> {
    let (p, tag) = match s.split_once(':') {
        Some((p, "I")) => (p, VeryEvenTag::I),
        Some((p, "II")) => (p, VeryEvenTag::II),
        Some((_, t)) => bail!("unknown very even tag {t:?}"),
        None => (s, VeryEvenTag::None),
    };
    let partition: Partition = p.parse()?;
    Ok(Orbit::tagged(partition, tag))
}

fn style(pretty: bool) -> Style {
    if pretty {
        Style::Pretty
    } else {
        Style::Canonical
    }
}

fn render(g: &RenderedGraph, format: Format, pretty: bool) -> String {
    match format {
        Format::Dot => emit_dot(g),
        Format::Json => emit_json(g, pretty),
        Format::Text => emit_text(g),
    }
}

fn run_verify(cli: &Cli, check: Check, max_rank: usize) -> Result<Vec<Report>> {
    let a = &cli.ctx;
    let algebras = || -> Result<Vec<Algebra>> {
        Ok(match a.algebra {
            Some(x) => vec![x],
            None => vec![Algebra::B, Algebra::C, Algebra::D],
        })
    };
    // Special families of the requested type; C brings its alternative family.
    let families = || -> Result<Vec<OrbitContext>> {
        let mut out = Vec::new();
        for alg in algebras()? {
            let rank = if alg == Algebra::D { 2 } else { 1 };
            if a.family == Family::AltSpecial {
                out.push(OrbitContext::alt_special(rank)?.with_form(a.form));
                continue;
            }
            out.push(OrbitContext::special(alg, rank)?.with_form(a.form));
            if alg == Algebra::C && a.algebra.is_none() {
                out.push(OrbitContext::alt_special(rank)?);
            }
        }
        Ok(out)
    };
    let mut reports = Vec::new();
    match check {
        Check::Quartets => {
            for alg in algebras()? {
                reports.push(verify_quartets(alg, max_rank)?);
            }
        }
        Check::Duality => {
            for c in families()? {
                reports.push(verify_duality_theorem(&c, max_rank)?);
            }
        }
        Check::Maps => {
            for c in families()? {
                reports.push(verify_map_algebra(&c, max_rank)?);
            }
        }
        Check::Lusztig => {
            for c in families()? {
                reports.push(verify_lusztig(&c, max_rank)?);
            }
        }
        Check::Fixtures => reports.push(verify_figures()?),
        Check::Exceptional => {
            for alg in ExceptionalAlgebra::ALL {
                reports.push(consistency_check(alg)?);
                reports.push(verify_exceptional_duality(alg)?);
            }
        }
    }
    Ok(reports)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let st = style(cli.pretty);
    match &cli.command {
        Command::Orbits => {
            let ctx = cli.ctx.build()?;
            let g = RenderedGraph::from_context(&ctx, st)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => out!("{}", emit_json(&g, cli.pretty)),
                Format::Dot => bail!("orbits supports text and json"),
                Format::Text => {
                    for n in &g.nodes {
                        let mark = if n.special { "" } else { " non-special" };
                        out!("{}\t{}{mark}\n", n.id(), n.dim);
                    }
                }
            }
        }
        Command::Hasse => {
            let ctx = cli.ctx.build()?;
            let g = RenderedGraph::from_context(&ctx, st)?;
            out!(
                "{}",
                render(&g, cli.format.unwrap_or(Format::Dot), cli.pretty)
            );
        }
        Command::Classify { above, below } => {
            let ctx = cli.ctx.build()?;
            let (hi, lo) = (parse_orbit(above)?, parse_orbit(below)?);
            let poset = OrbitPoset::build(&ctx)?;
            let (Some(i), Some(j)) = (poset.index_of(&hi), poset.index_of(&lo)) else {
                bail!("{hi} and {lo} must both be orbits of {ctx}");
            };
            if !poset.covers.contains(&(i, j)) {
                bail!("{hi} > {lo} is not a covering pair in {ctx}");
            }
            out!("{}\n", classify(&hi, &lo, &ctx)?.render(st));
        }
        Command::Dual { map, orbit } => {
            let ctx = cli.ctx.build()?;
            let p: Partition = orbit.parse()?;
            let (q, target) = apply_map(*map, &p, &ctx)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => out!(
                    "{}\n",
                    serde_json::json!({"orbit": p.compact(), "image": q.compact(), "context": target.name()})
                ),
                _ => out!("{}\n", q.compact()),
            }
        }
        Command::Verify { check, max_rank } => {
            let reports = run_verify(cli, *check, *max_rank)?;
            let failed = reports.iter().any(|r| !r.passed());
            if cli.format == Some(Format::Json) {
                out!("{}\n", serde_json::to_string(&reports)?);
            } else {
                for r in &reports {
                    out!("{r}");
                }
            }
            if failed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Exceptional { group } => {
            let g = RenderedGraph::from_exceptional(*group, st)?;
            out!(
                "{}",
                render(&g, cli.format.unwrap_or(Format::Dot), cli.pretty)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
