//! Command-line driver. Exit codes: 0 pass, 1 a mathematical check failed,
//! 2 usage or parse error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::conformal::{check_axioms, Algebra};
use crate::derivations::{
    solve_cder, solve_centroid, solve_conformal_centroid, solve_ordinary_der, DegreeBounds,
};
use crate::dsl::{export_structure, parse_algebra, parse_scalar};
use crate::error::{Error, Result};
use crate::families::{
    ck6_alpha, make_ck6, make_current, make_k, make_k4_prime, make_s, make_tilde_s, make_w,
    LieSuperalgebra,
};
use crate::structure::{center, derived_series};
use crate::virasoro::run_physical_catalog;

#[derive(Parser, Debug)]
#[command(
    name = "lcsa",
    version,
    about = "Finite Lie conformal superalgebra toolkit"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check the axioms of an algebra given in a source file.
    Check { file: PathBuf },
    /// Build a named family and check it.
    Family {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "axioms")]
        check: CheckLevel,
    },
    /// Print the derived series.
    Derived {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 8)]
        max_steps: usize,
    },
    /// Verify the catalog of physical Virasoro pairs.
    CatalogPhysical {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Write the canonical JSON export.
    Export {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        out: PathBuf,
    },
    /// Conformal derivations within degree bounds.
    Cder(Solve),
    /// Ordinary derivations within a ∂-degree bound.
    Der(Solve),
    /// The centroid within a ∂-degree bound.
    Centroid(Solve),
    /// The conformal centroid within degree bounds.
    Ccentroid(Solve),
}

#[derive(Args, Debug)]
struct Solve {
    #[command(flatten)]
    target: Target,
    #[arg(long, default_value_t = 1)]
    dmax: u32,
    #[arg(long, default_value_t = 1)]
    lmax: u32,
}

/// A source file or a named family.
#[derive(Args, Debug)]
struct Target {
    file: Option<PathBuf>,
    #[arg(long, ignore_case = true)]
    name: Option<FamilyName>,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value = "0")]
    a: String,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, ignore_case = true)]
    name: FamilyName,
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Deformation parameter of `s`; unknown names become symbols.
    #[arg(long, default_value = "0")]
    a: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyName {
    /// Current algebra of sl2.
    Cur,
    W,
    K,
    K4prime,
    S,
    Stilde,
    Ck6,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckLevel {
    Axioms,
    All,
}

fn build_family(name: FamilyName, n: usize, a: &str) -> Result<Algebra> {
    Ok(match name {
        FamilyName::Cur => make_current(&LieSuperalgebra::sl2())?,
        FamilyName::W => make_w(n),
        FamilyName::K => make_k(n),
        FamilyName::K4prime => make_k4_prime()?.algebra,
        FamilyName::S => make_s(n, &parse_scalar(a)?)?.algebra,
        FamilyName::Stilde => make_tilde_s(n)?.algebra,
        FamilyName::Ck6 => make_ck6(&ck6_alpha())?.algebra,
    })
}

fn load(t: &Target) -> Result<Algebra> {
    match (&t.file, t.name) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Export(format!("{}: {e}", path.display())))?;
            parse_algebra(&text)
        }
        (None, Some(name)) => build_family(name, t.n, &t.a),
        _ => Err(Error::InvalidFamily(
            "give either a source file or --name".into(),
        )),
    }
}

enum Outcome {
    Pass,
    Fail,
}

fn execute(cmd: Cmd, out: &mut dyn Write) -> Result<Outcome> {
    let w = |out: &mut dyn Write, s: String| {
        let _ = writeln!(out, "{s}");
    };
    let verdict = |ok: bool| if ok { Outcome::Pass } else { Outcome::Fail };
    match cmd {
        Cmd::Check { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Export(format!("{}: {e}", file.display())))?;
            let alg = parse_algebra(&text)?;
            let r = check_axioms(&alg);
            w(out, format!("{} (rank {}): {r}", alg.name, alg.rank()));
            Ok(verdict(r.passed()))
        }
        Cmd::Family { family, check } => {
            let alg = build_family(family.name, family.n, &family.a)?;
            let r = check_axioms(&alg);
            w(
                out,
                format!("{} (rank {}): axioms {r}", alg.name, alg.rank()),
            );
            if let CheckLevel::All = check {
                let s = derived_series(&alg, 8)?;
                w(out, format!("derived series {:?}: {}", s.ranks, s.verdict));
                let c = center(&alg, None);
                w(
                    out,
                    format!(
                        "center rank {} ({})",
                        c.submodule.rank(),
                        if c.stable { "stable" } else { "unstable" }
                    ),
                );
            }
            Ok(verdict(r.passed()))
        }
        Cmd::Derived { target, max_steps } => {
            let alg = load(&target)?;
            let s = derived_series(&alg, max_steps)?;
            w(
                out,
                format!("{}: derived series {:?}: {}", alg.name, s.ranks, s.verdict),
            );
            Ok(Outcome::Pass)
        }
        Cmd::CatalogPhysical { max_n } => {
            if max_n > 6 {
                return Err(Error::InvalidFamily(format!(
                    "catalog checks are limited to N ≤ 6, got {max_n}"
                )));
            }
            let r = run_physical_catalog(max_n)?;
            let _ = writeln!(out, "{r}");
            Ok(verdict(r.passed()))
        }
        Cmd::Export { target, out: path } => {
            let alg = load(&target)?;
            std::fs::write(&path, export_structure(&alg))
                .map_err(|e| Error::Export(format!("{}: {e}", path.display())))?;
            w(out, format!("wrote {}", path.display()));
            Ok(Outcome::Pass)
        }
        Cmd::Cder(s) => solve_report(out, &s, solve_cder),
        Cmd::Der(s) => solve_report(out, &s, |a, b| solve_ordinary_der(a, b.dmax)),
        Cmd::Centroid(s) => solve_report(out, &s, |a, b| solve_centroid(a, b.dmax)),
        Cmd::Ccentroid(s) => solve_report(out, &s, solve_conformal_centroid),
    }
}

fn solve_report(
    out: &mut dyn Write,
    s: &Solve,
    f: impl Fn(&Algebra, DegreeBounds) -> crate::derivations::SolutionSpace,
) -> Result<Outcome> {
    let alg = load(&s.target)?;
    let space = f(&alg, DegreeBounds::new(s.dmax, s.lmax));
    let _ = writeln!(out, "{}: {space}", alg.name);
    let _ = writeln!(out, "results are relative to the degree bounds");
    Ok(if space.verified {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

/// Runs one command; `args[0]` is the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.cmd, out) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            2
        }
    }
}
