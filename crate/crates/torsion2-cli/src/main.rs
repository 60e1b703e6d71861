use clap::{Parser, Subcommand};

use torsion2_cli::commands::{self, AppError, CommandOutput};
use torsion2_cli::verify::hard_failures;

/// Exact square-class pairings and signed counts on 2-torsion of real
/// abelian varieties: elliptic and split hyperelliptic models over the
/// rationals, the symplectic theta-characteristic model, and the
/// Grothendieck–Witt comparison.
///
/// Exit codes: 0 success, 1 usage or parse error, 2 mathematical domain
/// error, 3 verification failure.
#[derive(Parser)]
#[command(name = "torsion2", version, about, long_about)]
struct Cli {
    /// Emit one JSON object instead of tables
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// q2 of elliptic 2-torsion points, for y^2 = p(x) with p a cubic
    ///
    /// With POINT, the single value at that x-coordinate; without, a table
    /// over all rational 2-torsion points.
    EllipticQ2 {
        /// Right-hand side, e.g. "x^3 - x" or "1/3*x*(x-1)*(x+3)"
        #[arg(long)]
        poly: String,
        /// x-coordinate of a 2-torsion point, e.g. "-3" or "1/2"
        point: Option<String>,
    },
    /// Full b2 and e2 pairing tables on elliptic 2-torsion
    EllipticTable {
        #[arg(long)]
        poly: String,
    },
    /// q2 of one 2-torsion class of a split hyperelliptic Jacobian
    ///
    /// SUBSET is an even list of root indices, e.g. "0,2".
    HyperQ2 {
        /// Comma-separated rational Weierstrass roots, e.g. "0,1,2,3,4,5"
        #[arg(long)]
        roots: Option<String>,
        /// Leading coefficient u (default 1)
        #[arg(long)]
        lead: Option<String>,
        /// Alternative input: a polynomial that splits over the rationals
        #[arg(long)]
        poly: Option<String>,
        subset: String,
    },
    /// q2, sign, par and sg for all 2^(2g) classes of a split model
    HyperTable {
        #[arg(long)]
        roots: Option<String>,
        #[arg(long)]
        lead: Option<String>,
        #[arg(long)]
        poly: Option<String>,
    },
    /// Signed count of real 2-torsion: curve input or abstract type
    SignedCount {
        #[arg(long)]
        roots: Option<String>,
        #[arg(long)]
        lead: Option<String>,
        #[arg(long)]
        poly: Option<String>,
        /// Genus of an abstract type (together with --s and --a)
        #[arg(long)]
        g: Option<u32>,
        /// Number of real components minus one
        #[arg(long)]
        s: Option<u32>,
        /// Dividing bit: 0 or 1
        #[arg(long)]
        a: Option<u8>,
    },
    /// Census of real theta characteristics with fixed orientation/parity
    ThetaCounts {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        a: u8,
        /// Orientation offsets, s bits e.g. "0,1"
        #[arg(long)]
        orientation: Option<String>,
        /// Parity offsets, s bits
        #[arg(long)]
        parity: Option<String>,
    },
    /// Signed sum over real odd theta characteristics relative to NU
    ///
    /// NU is given as two comma-separated bit blocks of length g.
    OddSignedSum {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        a: u8,
        nu_upper: String,
        nu_lower: String,
    },
    /// Diagonalized trace form f -> tr(f^2/p') on Q\[x\]/(p)
    GwTraceForm {
        #[arg(long)]
        poly: String,
    },
    /// Compare the 2-torsion count in GW(Q) against its predicted value
    Conjecture {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        roots: Option<String>,
        #[arg(long)]
        lead: Option<String>,
    },
    /// Run the full verification suite
    Verify {
        /// Seed for the randomized items
        #[arg(long, default_value_t = 2)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap would exit 2 on its own; usage problems are exit 1 here
            let _ = e.print();
            std::process::exit(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let json = cli.json;
    let is_verify = matches!(cli.command, Command::Verify { .. });
    let outcome: Result<CommandOutput, AppError> = match cli.command {
        Command::EllipticQ2 { poly, point } => commands::elliptic_q2(&poly, point.as_deref()),
        Command::EllipticTable { poly } => commands::elliptic_table(&poly),
        Command::HyperQ2 {
            roots,
            lead,
            poly,
            subset,
        } => commands::hyper_q2(roots.as_deref(), lead.as_deref(), poly.as_deref(), &subset),
        Command::HyperTable { roots, lead, poly } => {
            commands::hyper_table(roots.as_deref(), lead.as_deref(), poly.as_deref())
        }
        Command::SignedCount {
            roots,
            lead,
            poly,
            g,
            s,
            a,
        } => commands::signed_count(roots.as_deref(), lead.as_deref(), poly.as_deref(), g, s, a),
        Command::ThetaCounts {
            g,
            s,
            a,
            orientation,
            parity,
        } => commands::theta_counts(g, s, a, orientation.as_deref(), parity.as_deref()),
        Command::OddSignedSum {
            g,
            s,
            a,
            nu_upper,
            nu_lower,
        } => commands::odd_signed_sum(g, s, a, &nu_upper, &nu_lower),
        Command::GwTraceForm { poly } => commands::gw_trace_form(&poly),
        Command::Conjecture {
            genus,
            poly,
            roots,
            lead,
        } => commands::conjecture(genus, poly.as_deref(), roots.as_deref(), lead.as_deref()),
        Command::Verify { seed, inject_fault } => Ok(commands::verify_cmd(seed, inject_fault)),
    };
    match outcome {
        Ok(output) => {
            if json {
                println!("{}", output.to_json());
            } else {
                print!("{}", output.human);
            }
            if is_verify && hard_failures(&output.checks) > 0 {
                std::process::exit(3);
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}
