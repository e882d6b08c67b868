//! Command-line surface: builders, validators, Betti diagrams, liaison
//! tables, verification subcommands, and export.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use clap::{Parser, Subcommand};
use gorstick::betti::{self, BettiTable};
use gorstick::configurations::{
    self, build_g_max, build_gorenstein, build_z, build_z_max, cas_export, Configuration,
};
use gorstick::hilbert;
use gorstick::monomials;
use gorstick::oracle;
use gorstick::sequences::{self, HVector};
use gorstick::simplicial::{self, BallMode, ComplexJson, SimplicialComplex};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gorstick", version, about = "Gorenstein and ACM configurations of linear varieties: builders, h-vectors, Betti tables, polytopes, and verification oracles", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// SI-sequence validation and parameters
    Si {
        #[command(subcommand)]
        cmd: SiCmd,
    },
    /// Lex-segment ideals and their decomposition
    Lex {
        #[command(subcommand)]
        cmd: LexCmd,
    },
    /// Lexicographic order ideal of monomials of an O-sequence
    Loim {
        /// h-vector, e.g. 1,2,2
        h: String,
        #[arg(short, long)]
        c: usize,
    },
    /// Configuration builders
    Build {
        #[command(subcommand)]
        cmd: BuildCmd,
    },
    /// h-vector of a configuration JSON file (verified two ways)
    Hvector { file: String },
    /// Liaison table for a complete-intersection link
    Liaison {
        /// generator degrees of the linking complete intersection, e.g. 3,3,4
        #[arg(long)]
        ci: String,
        /// h-vector of the subscheme being linked
        #[arg(long)]
        g: String,
    },
    /// Betti tables
    Betti {
        #[command(subcommand)]
        cmd: BettiCmd,
    },
    /// Verification subcommands
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
    /// Export a configuration JSON file
    Export {
        #[command(subcommand)]
        cmd: ExportCmd,
    },
}

#[derive(Subcommand)]
enum SiCmd {
    /// Check that a sequence is an SI-sequence
    Validate { h: String },
    /// Print c, s, t and the first-difference prefix g
    Params { h: String },
}

#[derive(Subcommand)]
enum LexCmd {
    /// Minimal generators of the lex-segment ideal of an O-sequence
    Ideal {
        h: String,
        #[arg(short, long)]
        c: usize,
    },
    /// The z1-decomposition of the lex-segment ideal
    Decompose {
        h: String,
        #[arg(short, long)]
        c: usize,
    },
}

#[derive(Subcommand)]
enum BuildCmd {
    /// ACM configuration with prescribed h-vector
    Z {
        h: String,
        #[arg(short, long)]
        c: usize,
        #[arg(short, long)]
        t: usize,
    },
    /// Maximal ACM configuration
    Zmax {
        #[arg(short, long)]
        c: usize,
        #[arg(short, long)]
        t: usize,
    },
    /// Maximal Gorenstein configuration
    Gmax {
        #[arg(short, long)]
        c: usize,
        #[arg(short, long)]
        s: usize,
        #[arg(short, long)]
        t: usize,
    },
    /// Gorenstein configuration with prescribed SI h-vector
    Gorenstein { h: String },
    /// Shellable ball and boundary polytope for an SI h-vector
    Polytope { h: String },
}

#[derive(Subcommand)]
enum BettiCmd {
    /// Betti table of the lex-segment ideal's quotient
    Lex {
        h: String,
        #[arg(short, long)]
        c: usize,
    },
    /// Maximal Gorenstein Betti table for an SI h-vector
    Gorenstein { h: String },
    /// Closed-form maximal resolution for (c, s, t)
    Closed {
        #[arg(short, long)]
        c: usize,
        #[arg(short, long)]
        s: usize,
        #[arg(short, long)]
        t: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Generalized stick figure check of a configuration JSON file
    Stickfigure { file: String },
    /// Re-derive the h-vector of a configuration two ways and check the
    /// Stanley-Reisner translation
    Oracle { file: String },
    /// Subspace property of the Gorenstein configuration of an SI h-vector
    Subspace { h: String },
    /// Shelling check of a complex JSON file (facets in listed order)
    Shelling { file: String },
}

#[derive(Subcommand)]
enum ExportCmd {
    /// Plain-text ideal for computer-algebra systems
    M2 { file: String },
    /// Normalized configuration JSON
    Json { file: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn parse_h(s: &str) -> Result<HVector, String> {
    HVector::parse(s).map_err(|e| e.to_string())
}

fn read_configuration(path: &str) -> Result<Configuration, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    serde_json::from_str(&text).map_err(|e| format!("bad configuration JSON in {path}: {e}"))
}

fn print_configuration(x: &Configuration) {
    println!("{}", serde_json::to_string_pretty(x).expect("serializable"));
}

fn print_betti(t: &BettiTable) {
    print!("{}", t.render_macaulay());
    println!("{}", t.to_json());
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Si { cmd } => match cmd {
            SiCmd::Validate { h } => {
                let h = parse_h(&h)?;
                if sequences::is_si_sequence(&h) {
                    println!("{h} is an SI-sequence");
                    Ok(())
                } else if h.is_symmetric() && !h.is_zero() && h.get(0) == 1 {
                    Err("not an SI-sequence: second-half differentiability fails".into())
                } else {
                    Err("not an SI-sequence: the sequence is not symmetric with h_0 = 1".into())
                }
            }
            SiCmd::Params { h } => {
                let h = parse_h(&h)?;
                let p = sequences::si_params(&h).map_err(|e| e.to_string())?;
                println!(
                    "{}",
                    serde_json::json!({"c": p.c, "s": p.s, "t": p.t, "g": p.g.entries()})
                );
                Ok(())
            }
        },
        Command::Lex { cmd } => match cmd {
            LexCmd::Ideal { h, c } => {
                let h = parse_h(&h)?;
                let ideal = monomials::lex_segment_ideal(&h, c).map_err(|e| e.to_string())?;
                let gens: Vec<String> = ideal.gens().iter().map(|g| g.render('z')).collect();
                println!("{}", serde_json::json!({"vars": c, "generators": gens}));
                Ok(())
            }
            LexCmd::Decompose { h, c } => {
                let h = parse_h(&h)?;
                let ideal = monomials::lex_segment_ideal(&h, c).map_err(|e| e.to_string())?;
                let dec = monomials::decompose(&ideal).map_err(|e| e.to_string())?;
                let parts: Vec<serde_json::Value> = dec
                    .parts
                    .iter()
                    .map(|p| {
                        let gens: Vec<String> = p.gens().iter().map(|g| g.render('z')).collect();
                        serde_json::json!(gens)
                    })
                    .collect();
                let hparts: Vec<&[i64]> = dec.hparts.iter().map(|h| h.entries()).collect();
                println!(
                    "{}",
                    serde_json::json!({"alpha": dec.alpha, "parts": parts, "hparts": hparts})
                );
                Ok(())
            }
        },
        Command::Loim { h, c } => {
            let h = parse_h(&h)?;
            let list = monomials::loim(&h, c).map_err(|e| e.to_string())?;
            let exps: Vec<&[u32]> = list.iter().map(|m| m.exps()).collect();
            println!("{}", serde_json::json!(exps));
            Ok(())
        }
        Command::Build { cmd } => match cmd {
            BuildCmd::Z { h, c, t } => {
                let h = parse_h(&h)?;
                let z = build_z(&h, c, t).map_err(|e| e.to_string())?;
                print_configuration(&z);
                Ok(())
            }
            BuildCmd::Zmax { c, t } => {
                print_configuration(&build_z_max(c, t));
                Ok(())
            }
            BuildCmd::Gmax { c, s, t } => {
                let g = build_g_max(c, s, t).map_err(|e| e.to_string())?;
                print_configuration(&g);
                Ok(())
            }
            BuildCmd::Gorenstein { h } => {
                let h = parse_h(&h)?;
                let g = build_gorenstein(&h).map_err(|e| e.to_string())?;
                print_configuration(&g);
                Ok(())
            }
            BuildCmd::Polytope { h } => {
                let h = parse_h(&h)?;
                let ball = simplicial::billera_lee_ball(&h, BallMode::Polytope)
                    .map_err(|e| e.to_string())?;
                let boundary =
                    simplicial::boundary_complex(&ball.complex).map_err(|e| e.to_string())?;
                let f = simplicial::faces(&boundary);
                let hv = simplicial::f_to_h(&f);
                let report = serde_json::json!({
                    "ball": ComplexJson::from(&ball.complex),
                    "boundary": ComplexJson::from(&boundary),
                    "f": f.0,
                    "h": hv.entries(),
                    "vertex_count": f.get(1),
                    "shelling_order": ball.order,
                });
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
                Ok(())
            }
        },
        Command::Hvector { file } => {
            let x = read_configuration(&file)?;
            let h = hilbert::hvector_of(&x).map_err(|e| e.to_string())?;
            println!("{h}");
            Ok(())
        }
        Command::Liaison { ci, g } => {
            let degrees: Vec<usize> = ci
                .split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|e| format!("bad degree {p:?}: {e}")))
                .collect::<Result<_, _>>()?;
            let gvec = parse_h(&g)?;
            let cvec = hilbert::ci_hvector(&degrees);
            let gprime = hilbert::linked_hvector(&cvec, &gvec).map_err(|e| e.to_string())?;
            let sum = hilbert::sum_linked_hvector(&cvec, &gvec).map_err(|e| e.to_string())?;
            let socle = cvec.socle_degree() as i64;
            let width = 5usize;
            let row = |name: &str, v: &HVector, upto: i64| {
                let mut line = format!("{name:>4}:");
                for i in 0..=upto {
                    line.push_str(&format!("{:>width$}", v.get(i)));
                }
                line
            };
            println!("{}", {
                let mut head = String::from("deg :");
                for i in 0..=socle + 1 {
                    head.push_str(&format!("{i:>width$}"));
                }
                head
            });
            println!("{}", row("G", &cvec, socle + 1));
            println!("{}", row("Z", &gvec, socle + 1));
            println!("{}", row("Y", &gprime, socle + 1));
            println!("{}", row("ΔG'", &sequences::difference(&sum), socle + 1));
            println!("{}", row("G'", &sum, socle + 1));
            Ok(())
        }
        Command::Betti { cmd } => match cmd {
            BettiCmd::Lex { h, c } => {
                let h = parse_h(&h)?;
                let t = betti::lex_betti(&h, c).map_err(|e| e.to_string())?;
                print_betti(&t);
                Ok(())
            }
            BettiCmd::Gorenstein { h } => {
                let h = parse_h(&h)?;
                let t = betti::gorenstein_max_betti(&h).map_err(|e| e.to_string())?;
                print_betti(&t);
                Ok(())
            }
            BettiCmd::Closed { c, s, t } => {
                let table = betti::closed_form_max_resolution(c, s, t).map_err(|e| e.to_string())?;
                print_betti(&table);
                Ok(())
            }
        },
        Command::Verify { cmd } => match cmd {
            VerifyCmd::Stickfigure { file } => {
                let x = read_configuration(&file)?;
                match configurations::find_stick_figure_violation(&x) {
                    None => {
                        println!("generalized stick figure: yes ({} components)", x.degree());
                        Ok(())
                    }
                    Some((a, b, c)) => Err(format!(
                        "not a generalized stick figure: {a:?}, {b:?}, {c:?} span codimension {} + 1",
                        x.codim
                    )),
                }
            }
            VerifyCmd::Oracle { file } => {
                let x = read_configuration(&file)?;
                let h = hilbert::hvector_of(&x).map_err(|e| e.to_string())?;
                // the realized ideal must agree with the Stanley-Reisner
                // translation of the associated complex
                let realized = x.realize();
                let sr = simplicial::sr_ideal(&simplicial::complex_of(&x))
                    .map_err(|e| e.to_string())?;
                if !oracle::equals(&realized, &sr).map_err(|e| e.to_string())? {
                    return Err("realized ideal differs from the Stanley-Reisner ideal".into());
                }
                println!("h-vector: {h}");
                println!("oracle: both routes agree");
                Ok(())
            }
            VerifyCmd::Subspace { h } => {
                let h = parse_h(&h)?;
                let report =
                    configurations::check_subspace_property(&h).map_err(|e| e.to_string())?;
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
                if report.passes {
                    Ok(())
                } else {
                    Err("subspace property check failed".into())
                }
            }
            VerifyCmd::Shelling { file } => {
                let text = std::fs::read_to_string(&file)
                    .map_err(|e| format!("cannot read {file}: {e}"))?;
                let value: serde_json::Value = serde_json::from_str(&text)
                    .map_err(|e| format!("bad JSON in {file}: {e}"))?;
                // accept either a bare complex or a polytope report with a ball
                let complex_value = value.get("ball").unwrap_or(&value);
                let parsed: ComplexJson = serde_json::from_value(complex_value.clone())
                    .map_err(|e| format!("bad complex JSON in {file}: {e}"))?;
                let complex = SimplicialComplex::from(&parsed);
                let order: Vec<usize> = (0..complex.facets().len()).collect();
                let ok = simplicial::is_shelling(&complex, &order).map_err(|e| e.to_string())?;
                if ok {
                    println!("shelling: yes ({} facets)", complex.facets().len());
                    Ok(())
                } else {
                    Err("the listed facet order is not a shelling".into())
                }
            }
        },
        Command::Export { cmd } => match cmd {
            ExportCmd::M2 { file } => {
                let x = read_configuration(&file)?;
                print!("{}", cas_export(&x));
                Ok(())
            }
            ExportCmd::Json { file } => {
                let x = read_configuration(&file)?;
                print_configuration(&x);
                Ok(())
            }
        },
    }
}
