use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use gkz_lcsl::io::{format_polytope, parse_polytope_file};
use gkz_lcsl::linalg::Q;
use gkz_lcsl::pipeline::{run_polytope_until, PipelineConfig, Stage};
use gkz_lcsl::polytope::polar_dual;
use gkz_lcsl::report::{emit_report, emit_value, Format};

#[derive(Parser)]
#[command(name = "lcsl", version, about = "Large complex structure limit data for toric Calabi-Yau hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Polar dual polytope
    Dual(Common),
    /// Point configuration
    Points(Common),
    /// Regular triangulation
    Triangulate(Common),
    /// Relation lattice and Mori basis
    Mori(Common),
    /// Gröbner basis of the toric ideal and the Gröbner fan
    Gb(Common),
    /// Stanley-Reisner ideal against the initial ideal
    Sr(Common),
    /// Indicial ideal
    Indicial(Common),
    /// Chow ring and Chern classes
    Chow(Common),
    /// Degree-0 period series
    Series(Common),
    /// Mirror map
    Mirrormap(Common),
    /// Prepotential
    Prepotential(Common),
    /// Yukawa couplings
    Yukawa(Common),
    /// Instanton numbers
    Instantons(Common),
    /// Every stage
    Pipeline(Common),
}

#[derive(Args)]
struct Common {
    /// polytope file, or a machine report from an earlier verb
    input: PathBuf,
    /// comma separated rational weights, one per point
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// exclusive truncation order of all series
    #[arg(long, default_value_t = 8)]
    order: u32,
    /// use every lattice point instead of the gauge point set
    #[arg(long)]
    no_gauge: bool,
    /// indicial ideal from supports of leading monomials
    #[arg(long)]
    radical: bool,
    /// Gröbner basis computations allowed in fan traversal
    #[arg(long, default_value_t = 32)]
    budget: usize,
    /// seed of the weight search
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "human")]
    format: Format,
    /// write the report here instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn parse_weight(s: &str) -> Result<Vec<Q>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<Q>().map_err(|_| format!("bad weight entry `{t}`")))
        .collect()
}

impl Common {
    fn config(&self) -> Result<PipelineConfig, String> {
        let mut c = PipelineConfig::new(&self.input);
        c.weight = self.weight.as_deref().map(parse_weight).transpose()?;
        c.order = self.order;
        c.gauge = !self.no_gauge;
        c.radical = self.radical;
        c.budget = self.budget;
        c.seed = self.seed;
        c.output = self.output.clone();
        Ok(c)
    }
}

fn run(verb: Verb) -> Result<(Vec<u8>, Option<PathBuf>), String> {
    let (common, stage) = match verb {
        Verb::Dual(c) => {
            let p = parse_polytope_file(&c.input).map_err(|e| e.to_string())?;
            let d = polar_dual(&p).map_err(|e| e.to_string())?;
            let bytes = match c.format {
                Format::Human => format_polytope(&d).into_bytes(),
                Format::Machine => emit_value(
                    &json!({"polytope": {"rank": d.rank(), "vertices": d.vertices()}}),
                    Format::Machine,
                ),
            };
            return Ok((bytes, c.output));
        }
        Verb::Points(c) => (c, Stage::Polytope),
        Verb::Triangulate(c) => (c, Stage::Triangulation),
        Verb::Mori(c) => (c, Stage::Lattice),
        Verb::Gb(c) => (c, Stage::Groebner),
        Verb::Sr(c) => (c, Stage::StanleyReisner),
        Verb::Indicial(c) => (c, Stage::Indicial),
        Verb::Chow(c) => (c, Stage::Chow),
        Verb::Series(c) => (c, Stage::Series),
        Verb::Mirrormap(c) => (c, Stage::MirrorMap),
        Verb::Prepotential(c) => (c, Stage::Prepotential),
        Verb::Yukawa(c) => (c, Stage::Yukawa),
        Verb::Instantons(c) | Verb::Pipeline(c) => (c, Stage::Instantons),
    };
    let cfg = common.config()?;
    let p = parse_polytope_file(&cfg.input).map_err(|e| format!("stage polytope failed: {e}"))?;
    let (report, _) = run_polytope_until(&cfg, p, stage).map_err(|e| e.to_string())?;
    Ok((emit_report(&report, common.format), cfg.output))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok((bytes, None)) => {
            use std::io::Write;
            let _ = std::io::stdout().write_all(&bytes);
            ExitCode::SUCCESS
        }
        Ok((bytes, Some(path))) => match std::fs::write(&path, bytes) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("lcsl: cannot write {}: {e}", path.display());
                ExitCode::FAILURE
            }
        },
        Err(e) => {
            eprintln!("lcsl: {e}");
            ExitCode::FAILURE
        }
    }
}
