//! `rk`: command-line front end for the residue, divisor, intersection,
//! theta and harmonic engines.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rk_core::tolerances::DEFAULT_TOL;

#[derive(Parser, Debug)]
#[command(name = "rk", version, about = "Residues, divisors, intersection numbers, theta functions and harmonic checks")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Emit a JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Tolerance (default 1e-8, or RK_DEFAULT_TOL).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Grid / node count for quadrature-based commands.
    #[arg(long, global = true)]
    pub grid: Option<usize>,
    /// Lattice truncation for Weierstrass and Eisenstein sums.
    #[arg(long, global = true)]
    pub trunc: Option<usize>,
}

impl Global {
    pub fn tol(&self) -> f64 {
        self.tol
            .or_else(|| std::env::var("RK_DEFAULT_TOL").ok().and_then(|v| v.trim().parse().ok()))
            .unwrap_or(DEFAULT_TOL)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Residues of a rational function of z (all poles, or one with --at).
    Residue {
        #[arg(long)]
        f: String,
        #[arg(long)]
        at: Option<String>,
    },
    /// Integral of a rational function over a circle, by residues and by quadrature.
    Contour {
        #[arg(long)]
        f: String,
        #[arg(long, default_value = "0")]
        center: String,
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        clockwise: bool,
    },
    /// Zeros of a polynomial inside a circle by the argument principle.
    Zeros {
        #[arg(long)]
        p: String,
        #[arg(long, default_value = "0")]
        center: String,
        #[arg(long)]
        radius: f64,
    },
    /// Classical real integrals: closed form against quadrature.
    Integral {
        #[arg(value_enum)]
        name: IntegralName,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long)]
        k: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Gamma function at a complex point, or its residue at -n.
    Gamma {
        #[arg(long, required_unless_present = "residue")]
        s: Option<String>,
        #[arg(long)]
        residue: Option<u32>,
    },
    /// Divisor of a rational function on the Riemann sphere.
    Divisor {
        #[arg(long)]
        f: String,
    },
    /// Sections of O(m) on P^1; with --s0, the divisor of that section.
    Sections {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long)]
        s0: Option<String>,
    },
    /// Riemann-Roch for D = n[inf] on P^1 (genus 0) or a degree-n divisor on an elliptic curve.
    Rr {
        #[arg(long)]
        genus: i64,
        #[arg(long, allow_hyphen_values = true)]
        deg: i64,
    },
    /// Double cover y^2 = f(x): branch values and genus; or a Kummer ramification index.
    Cover {
        #[arg(long, required_unless_present = "kummer_n")]
        f: Option<String>,
        #[arg(long, requires = "kummer_m")]
        kummer_n: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        kummer_m: Option<i64>,
    },
    /// Intersection multiplicity of two affine curves at a point (default the origin).
    Mult {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// Point as "a,b" with rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Bezout check for two projective plane curves in X, Y, Z.
    Bezout {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// chi(O(D)) on a model surface.
    Chi {
        #[arg(long)]
        model: String,
        /// Class coordinates, e.g. "3" or "2,-1".
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Genus of a smooth curve in a class by adjunction.
    Genus {
        #[arg(long)]
        model: String,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Jacobi theta (with --tau) or Riemann theta (with --omega).
    Theta {
        #[arg(long, conflicts_with = "omega")]
        tau: Option<String>,
        /// Symmetric period matrix, rows separated by ';', entries by ','.
        #[arg(long)]
        omega: Option<String>,
        /// Argument; comma-separated for genus > 1.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        z: String,
        /// Jacobi index 1..4.
        #[arg(long, default_value_t = 3)]
        index: u8,
    },
    /// Weierstrass wp, wp', invariants and sigma quasi-period on a lattice.
    Wp {
        #[arg(long, default_value = "1")]
        omega1: String,
        #[arg(long, default_value = "i")]
        omega2: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Periods of y^2 = 4(x-e1)(x-e2)(x-e3) for real e1 > e2 > e3.
    Periods {
        #[arg(long, allow_hyphen_values = true)]
        e1: f64,
        #[arg(long, allow_hyphen_values = true)]
        e2: f64,
        #[arg(long, allow_hyphen_values = true)]
        e3: f64,
    },
    /// Poisson extension on the disk (trig data) or the upper half-plane.
    Poisson {
        #[command(subcommand)]
        domain: PoissonDomain,
    },
    /// Explicit Laplace solvers on the circle, the torus and the sphere.
    Laplace {
        #[command(subcommand)]
        space: LaplaceSpace,
    },
    /// First fundamental form, curvature and Gauss-Bonnet for the sphere or a torus.
    Surface {
        #[arg(value_enum)]
        kind: SurfaceKind,
        #[arg(long = "big-r", default_value_t = 2.0)]
        big_r: f64,
        #[arg(long = "small-r", default_value_t = 1.0)]
        small_r: f64,
        /// Evaluate E, F, G, dA and K at (theta, phi) = "u,v".
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        /// Write the quadrature grid (u, v, K, dA) as CSV.
        #[arg(long)]
        csv: Option<std::path::PathBuf>,
    },
    /// Run the acceptance table.
    Selftest {
        /// Run one row only.
        #[arg(long)]
        id: Option<u8>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PoissonDomain {
    /// u(r e^{i theta}) for boundary data a0 + sum a_n cos n t + b_n sin n t.
    Disk {
        #[arg(long)]
        r: f64,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        a0: f64,
        /// a_1,a_2,...
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        cos: String,
        /// b_1,b_2,...
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        sin: String,
    },
    /// u(x, y) for polynomial boundary data f(t), written in the variable x.
    Halfplane {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long)]
        y: f64,
        #[arg(long, default_value = "1")]
        data: String,
        /// Half-width of the integration window (default from --tol).
        #[arg(long)]
        window: Option<f64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum LaplaceSpace {
    /// -u'' = f on the circle.
    Circle {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        cos: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        sin: String,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        a0: f64,
    },
    /// -Laplace u = f on R^2/Z^2; modes as "m,n,cos|sin,cos|sin=coefficient".
    Torus {
        #[arg(long = "mode", required = true, allow_hyphen_values = true)]
        modes: Vec<String>,
    },
    /// Laplace u = c z on the unit sphere, with Laplace z = 2z.
    Sphere {
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum IntegralName {
    TrigRational,
    FourierQuadratic,
    Dirichlet,
    KeyholePower,
    Cuberoot,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SurfaceKind {
    Sphere,
    Torus,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = commands::name(&cli.command);
    match commands::run(&cli.command, &cli.global) {
        Ok(report) => {
            if cli.global.json {
                println!("{}", serde_json::to_string_pretty(&report.envelope(name)).expect("json"));
            } else {
                for l in &report.text {
                    println!("{l}");
                }
            }
            if report.failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            if cli.global.json {
                println!("{}", serde_json::to_string_pretty(&output::error_envelope(name, &e)).expect("json"));
            }
            eprintln!("rk {name}: {e}");
            ExitCode::from(output::exit_code(&e))
        }
    }
}
