//! Command-line front end. [`run_cli`] parses arguments, runs one
//! subcommand and returns the process exit code: 0 on success, 1 when the
//! pattern system is not valid, 2 on usage and parse errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use trilaby::classify::{row_shapes, RowShape};
use trilaby::graph::build_graph;
use trilaby::validate::require_valid;
use trilaby::{
    arc_dimensions, chord_lower_bound, classify_blocked, counts, fractal_dimension, parse_system,
    path_matrices, refine_arc, render_svg, substitute, validate_system, Color, Error, Pair,
    PatternSystem, RenderStyle,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "trilaby",
    version,
    about = "Triangular labyrinth pattern systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the tree, exits and corners properties.
    Validate { file: PathBuf },
    /// Triangle counts of the level-n sets.
    Counts {
        file: PathBuf,
        #[arg(short = 'n', long = "level")]
        n: u64,
    },
    /// The global path matrix, its blocks and row sums.
    Matrix { file: PathBuf },
    /// Blockedness classification.
    Classify { file: PathBuf },
    /// Hausdorff dimensions of the fractals and their arcs.
    Dims { file: PathBuf },
    /// A level-n approximation of an exit-to-exit arc.
    Arc {
        file: PathBuf,
        #[arg(long, value_enum)]
        color: ColorArg,
        #[arg(long, value_enum)]
        pair: PairArg,
        #[arg(short = 'n', long = "level")]
        n: u32,
        /// Also draw the level-n set with the arc overlaid.
        #[arg(long, value_name = "OUT")]
        svg: Option<PathBuf>,
        /// Print the polyline length, a lower bound for the arc length.
        #[arg(long)]
        bound: bool,
    },
    /// Draw the level-n set of one colour as SVG.
    Render {
        file: PathBuf,
        #[arg(short = 'n', long = "level")]
        n: u32,
        #[arg(long, value_enum)]
        color: ColorArg,
        #[arg(short = 'o', long = "output", value_name = "OUT.svg")]
        output: PathBuf,
        /// Also write the neighbour graph in DOT format.
        #[arg(long, value_name = "OUT.dot")]
        dot: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ColorArg {
    White,
    Yellow,
}

impl From<ColorArg> for Color {
    fn from(c: ColorArg) -> Color {
        match c {
            ColorArg::White => Color::White,
            ColorArg::Yellow => Color::Yellow,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PairArg {
    #[value(name = "12")]
    P12,
    #[value(name = "13")]
    P13,
    #[value(name = "23")]
    P23,
}

impl From<PairArg> for Pair {
    fn from(p: PairArg) -> Pair {
        match p {
            PairArg::P12 => Pair::P12,
            PairArg::P13 => Pair::P13,
            PairArg::P23 => Pair::P23,
        }
    }
}

/// A failure with its exit code, plus any output produced before it.
struct Failure {
    code: i32,
    message: String,
    output: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Syntax { .. }
            | Error::Index { .. }
            | Error::Duplicate { .. }
            | Error::CapExceeded { .. }
            | Error::ScaleOverflow(_) => EXIT_USAGE,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
            output: String::new(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message,
        output: String::new(),
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let (code, text) = match dispatch(cli.command) {
        Ok(text) => (EXIT_OK, text),
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            (f.code, f.output)
        }
    };
    let _ = write!(out, "{text}");
    code
}

fn load(path: &Path) -> Result<PatternSystem, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_system(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Validate { file } => validate(&load(&file)?),
        Command::Counts { file, n } => counts_cmd(&load(&file)?, n),
        Command::Matrix { file } => matrix(&load(&file)?),
        Command::Classify { file } => classify(&load(&file)?),
        Command::Dims { file } => dims(&load(&file)?),
        Command::Arc {
            file,
            color,
            pair,
            n,
            svg,
            bound,
        } => arc(
            &load(&file)?,
            color.into(),
            pair.into(),
            n,
            svg.as_deref(),
            bound,
        ),
        Command::Render {
            file,
            n,
            color,
            output,
            dot,
        } => render(&load(&file)?, n, color.into(), &output, dot.as_deref()),
    }
}

fn validate(sys: &PatternSystem) -> Outcome {
    let report = validate_system(sys);
    let text = format!("{}\n{}", report.to_text(), report.to_key_values());
    if report.overall {
        Ok(text)
    } else {
        Err(Failure {
            code: EXIT_INVALID,
            message: "not a triangular labyrinth patterns system".into(),
            output: text,
        })
    }
}

fn counts_cmd(sys: &PatternSystem, n: u64) -> Outcome {
    let [w, wd, y, yd] = counts(sys, n);
    let mut s = String::new();
    let _ = writeln!(s, "n={n}");
    let _ = writeln!(s, "W={w}");
    let _ = writeln!(s, "W'={wd}");
    let _ = writeln!(s, "Y={y}");
    let _ = writeln!(s, "Y'={yd}");
    let _ = writeln!(s, "white={}", &w + &wd);
    let _ = writeln!(s, "yellow={}", &y + &yd);
    Ok(s)
}

fn matrix(sys: &PatternSystem) -> Outcome {
    let pm = path_matrices(sys)?;
    let mut s = String::new();
    let _ = writeln!(s, "M =\n{}", pm.m);
    let _ = writeln!(s, "Mw =\n{}", pm.mw);
    let _ = writeln!(s, "~Mw =\n{}", pm.tmw);
    let _ = writeln!(s, "My =\n{}", pm.my);
    let _ = writeln!(s, "~My =\n{}", pm.tmy);
    let sums: Vec<String> = pm.m.row_sums().iter().map(|x| x.to_string()).collect();
    let _ = writeln!(s, "row sums = {}", sums.join(" "));
    Ok(s)
}

fn flags(v: [bool; 3]) -> String {
    Pair::ALL
        .iter()
        .zip(v)
        .map(|(p, b)| format!("{p}={}", if b { "blocked" } else { "unblocked" }))
        .collect::<Vec<_>>()
        .join(" ")
}

fn classify(sys: &PatternSystem) -> Outcome {
    let report = classify_blocked(sys)?;
    let pm = path_matrices(sys)?;
    let mut s = String::new();
    let _ = writeln!(s, "class: {}", report.class);
    let _ = writeln!(s, "white:  {}", flags(report.white));
    let _ = writeln!(s, "yellow: {}", flags(report.yellow));
    let _ = writeln!(s, "system: {}", flags(report.system));
    let shapes = row_shapes(&pm, sys.m());
    for (p, shape) in Pair::ALL.iter().zip(shapes) {
        let text = match shape {
            RowShape::Positive => "positive",
            RowShape::Straight => "straight",
            RowShape::Other => "other",
        };
        let _ = writeln!(s, "row {p} of Mw+My-I: {text}");
    }
    Ok(s + &dimension_lines(sys)?)
}

fn dimension_lines(sys: &PatternSystem) -> Outcome {
    let mut s = String::new();
    match fractal_dimension(sys) {
        Ok(fd) => {
            let _ = writeln!(s, "lambda = {} = {:.15}", fd.lambda, fd.lambda_f64);
            let _ = writeln!(s, "fractal dimension = {:.15}", fd.dimension);
        }
        Err(Error::EmptyDownSet) => {
            let _ = writeln!(s, "lambda undefined: {}", Error::EmptyDownSet);
        }
        Err(e) => return Err(e.into()),
    }
    let dims = arc_dimensions(sys)?;
    match &dims.theta {
        Some(t) => {
            let _ = writeln!(s, "theta = {}", t.describe());
        }
        None => {
            let _ = writeln!(s, "theta = none");
        }
    }
    for (k, d) in dims.values.iter().enumerate() {
        let color = if k < 3 { Color::White } else { Color::Yellow };
        let _ = writeln!(s, "arc {color} {}: {d:.15}", Pair::ALL[k % 3]);
    }
    if !dims.consistent || !dims.shape_ok {
        let _ = writeln!(s, "warning: class-specific check failed");
    }
    Ok(s)
}

fn dims(sys: &PatternSystem) -> Outcome {
    require_valid(sys)?;
    let report = classify_blocked(sys)?;
    Ok(format!(
        "class: {}\n{}",
        report.class,
        dimension_lines(sys)?
    ))
}

fn arc(
    sys: &PatternSystem,
    color: Color,
    pair: Pair,
    n: u32,
    svg: Option<&Path>,
    bound: bool,
) -> Outcome {
    let a = refine_arc(sys, color, pair, n)?;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "arc {color} {pair} level {n}: {} triangles, {} points",
        a.path.len(),
        a.polyline.len()
    );
    let _ = writeln!(s, "# index  exact  decimal");
    for (k, p) in a.polyline.iter().enumerate() {
        let c = p.to_cart();
        let _ = writeln!(s, "{k}  {p}  ({:.12}, {:.12})", c.x, c.y);
    }
    if bound {
        let _ = writeln!(s, "chord lower bound = {:.15}", chord_lower_bound(&a));
    }
    if let Some(path) = svg {
        let ls = substitute(sys, color, n)?;
        write_file(path, &render_svg(&ls, &RenderStyle::default(), &[a]))?;
    }
    Ok(s)
}

fn render(sys: &PatternSystem, n: u32, color: Color, output: &Path, dot: Option<&Path>) -> Outcome {
    let ls = substitute(sys, color, n)?;
    write_file(output, &render_svg(&ls, &RenderStyle::default(), &[]))?;
    let mut s = format!("wrote {} triangles to {}\n", ls.len(), output.display());
    if let Some(path) = dot {
        let g = build_graph(&ls);
        write_file(path, &g.to_dot(&format!("{color}_{n}")))?;
        let _ = writeln!(s, "wrote graph to {}", path.display());
    }
    Ok(s)
}
