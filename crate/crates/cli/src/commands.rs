use std::f64::consts::PI;

use num_complex::Complex64;
use serde_json::{json, Value};

use rk_core::divisor::{
    branch_values, ell_elliptic, ell_p1, genus_double_cover, h0_om, kummer_ram_index, principal_divisor, rr_verify,
    section_divisor_om, Divisor, DoubleCoverSpec, P1Point,
};
use rk_core::expr::{
    parse_bivariate, parse_complex, parse_form, parse_polynomial_complex, parse_polynomial_q, parse_polynomial_q_in,
    parse_q, parse_rational, parse_rational_q_in, ParsedRational,
};
use rk_core::harmonic::{
    first_fundamental, gauss_curvature, laplace_circle, laplace_sphere_l1, laplace_torus, poisson_extend_quadrature,
    poisson_extend_trig, poisson_halfplane, surface_area, surface_grid, total_curvature, Parity, SurfaceSpec,
    TorusMode, TorusModes, TrigPolynomial,
};
use rk_core::intersection::{
    adjunction_genus, bezout_verify, intersection_multiplicity_at, mult_origin_resultant, rational_roots, surface_chi,
    SurfaceModel,
};
use rk_core::numeric::q;
use rk_core::residue::{
    classical_integral, count_polynomial_zeros_raw, gamma, gamma_residue, integrate_by_residues, residue_rational,
    ClassicalIntegral, Contour, Orientation,
};
use rk_core::theta::{
    elliptic_invariants, eta1_ratio, jacobi_theta, ode_residual, periods_real_cubic, riemann_theta, wp_lattice,
    wp_prime, wp_via_theta, PeriodPair, RiemannPeriodMatrix, TauValue,
};
use rk_core::{poly_roots, selftest, Error, Result};

use crate::output::{cjson, fmt_c, Report};
use crate::{Command, Global, IntegralName, LaplaceSpace, PoissonDomain, SurfaceKind};

const DEFAULT_TRUNC: usize = 200;
const DEFAULT_POISSON_NODES: usize = 256;
const DEFAULT_SURFACE_GRID: usize = 128;
const DEFAULT_HALFPLANE_NODES: usize = 4000;

pub fn name(c: &Command) -> &'static str {
    match c {
        Command::Residue { .. } => "residue",
        Command::Contour { .. } => "contour",
        Command::Zeros { .. } => "zeros",
        Command::Integral { .. } => "integral",
        Command::Gamma { .. } => "gamma",
        Command::Divisor { .. } => "divisor",
        Command::Sections { .. } => "sections",
        Command::Rr { .. } => "rr",
        Command::Cover { .. } => "cover",
        Command::Mult { .. } => "mult",
        Command::Bezout { .. } => "bezout",
        Command::Chi { .. } => "chi",
        Command::Genus { .. } => "genus",
        Command::Theta { .. } => "theta",
        Command::Wp { .. } => "wp",
        Command::Periods { .. } => "periods",
        Command::Poisson { .. } => "poisson",
        Command::Laplace { .. } => "laplace",
        Command::Surface { .. } => "surface",
        Command::Selftest { .. } => "selftest",
    }
}

pub fn run(c: &Command, g: &Global) -> Result<Report> {
    let tol = g.tol();
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Parse(format!("tolerance must be positive, got {tol}")));
    }
    match c {
        Command::Residue { f, at } => residue(f, at.as_deref()),
        Command::Contour { f, center, radius, clockwise } => contour(f, center, *radius, *clockwise),
        Command::Zeros { p, center, radius } => zeros(p, center, *radius),
        Command::Integral { name, a, b, k, alpha } => integral(*name, *a, *b, *k, *alpha),
        Command::Gamma { s, residue } => gamma_cmd(s.as_deref(), *residue),
        Command::Divisor { f } => divisor(f),
        Command::Sections { m, s0 } => sections(*m, s0.as_deref()),
        Command::Rr { genus, deg } => rr(*genus, *deg),
        Command::Cover { f, kummer_n, kummer_m } => cover(f.as_deref(), *kummer_n, *kummer_m),
        Command::Mult { f, g: gg, at } => mult(f, gg, at.as_deref()),
        Command::Bezout { f, g: gg } => bezout(f, gg),
        Command::Chi { model, class } => chi(model, class),
        Command::Genus { model, class } => genus(model, class),
        Command::Theta { tau, omega, z, index } => theta(tau.as_deref(), omega.as_deref(), z, *index, tol),
        Command::Wp { omega1, omega2, z } => wp(omega1, omega2, z, g.trunc.unwrap_or(DEFAULT_TRUNC)),
        Command::Periods { e1, e2, e3 } => periods(*e1, *e2, *e3, g.trunc.unwrap_or(DEFAULT_TRUNC)),
        Command::Poisson { domain } => poisson(domain, g, tol),
        Command::Laplace { space } => laplace(space),
        Command::Surface { kind, big_r, small_r, at, csv } => {
            surface(*kind, *big_r, *small_r, at.as_deref(), csv.as_deref(), g.grid.unwrap_or(DEFAULT_SURFACE_GRID), tol)
        }
        Command::Selftest { id } => selftest_cmd(*id),
    }
}

fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|_| Error::Parse(format!("bad number '{t}'"))))
        .collect()
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(str::trim)
        .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer '{t}'"))))
        .collect()
}

fn divisor_json(d: &Divisor) -> Value {
    json!({ "entries": d, "degree": d.degree() })
}

fn residue(f: &str, at: Option<&str>) -> Result<Report> {
    let parsed = parse_rational(f)?;
    let mut rep = Report::new(json!({ "f": f, "at": at }));
    let mut rows = Vec::new();
    match (&parsed, at) {
        (ParsedRational::Exact(fq), Some(a)) if parse_q(a).is_ok() => {
            let p = parse_q(a)?;
            let r = residue_rational(fq, &p)?;
            rows.push(json!({ "pole": p.to_string(), "residue": r.to_string(), "exact": true }));
            rep.line(format!("Res_{{z={p}}} = {r}"));
        }
        (_, Some(a)) => {
            let p = parse_complex(a)?;
            let r = residue_rational(&parsed.to_complex(), &p)?;
            rows.push(json!({ "pole": cjson(p), "residue": cjson(r), "exact": false }));
            rep.line(format!("Res_{{z={}}} = {}", fmt_c(p), fmt_c(r)));
        }
        (ParsedRational::Exact(fq), None) => {
            let (rat, irreducible) = rational_roots(fq.den())?;
            for (p, mult) in rat {
                let r = residue_rational(fq, &p)?;
                rows.push(json!({ "pole": p.to_string(), "order": mult, "residue": r.to_string(), "exact": true }));
                rep.line(format!("Res_{{z={p}}} = {r}   (pole of order {mult})"));
            }
            let fc = fq.to_complex();
            for (factor, _) in irreducible {
                for c in poly_roots(&factor)? {
                    let r = residue_rational(&fc, &c.root)?;
                    rows.push(json!({ "pole": cjson(c.root), "residue": cjson(r), "exact": false }));
                    rep.line(format!("Res_{{z={}}} = {}", fmt_c(c.root), fmt_c(r)));
                }
            }
        }
        (ParsedRational::Complex(fc), None) => {
            if fc.den().degree().unwrap_or(0) > 0 {
                for c in poly_roots(fc.den())? {
                    let r = residue_rational(fc, &c.root)?;
                    rows.push(json!({ "pole": cjson(c.root), "order": c.multiplicity, "residue": cjson(r), "exact": false }));
                    rep.line(format!("Res_{{z={}}} = {}   (pole of order {})", fmt_c(c.root), fmt_c(r), c.multiplicity));
                }
            }
        }
    }
    if rows.is_empty() {
        rep.line("no finite poles");
    }
    Ok(rep.result(json!({ "residues": rows })))
}

fn contour(f: &str, center: &str, radius: f64, clockwise: bool) -> Result<Report> {
    let fc = parse_rational(f)?.to_complex();
    let c0 = parse_complex(center)?;
    let orientation = if clockwise { Orientation::Clockwise } else { Orientation::Counterclockwise };
    let path = Contour::oriented_circle(c0, radius, orientation)?;
    let r = integrate_by_residues(&fc, &path)?;
    let gap = (r.value - r.quadrature.value).norm();
    let mut rep = Report::new(json!({ "f": f, "center": cjson(c0), "radius": radius, "orientation": orientation }));
    rep.line(format!("residue theorem: {}", fmt_c(r.value)));
    rep.line(format!("quadrature:      {}", fmt_c(r.quadrature.value)));
    rep.line(format!("|difference| = {gap:.3e}"));
    rep.diag("error_estimate", r.quadrature.error_estimate);
    rep.diag("evaluations", r.quadrature.evaluations);
    let poles: Vec<Value> =
        r.poles_inside.iter().map(|(p, res)| json!({ "pole": cjson(*p), "residue": cjson(*res) })).collect();
    Ok(rep.result(json!({
        "residue_theorem": cjson(r.value),
        "quadrature": cjson(r.quadrature.value),
        "difference": gap,
        "poles_inside": poles,
    })))
}

fn zeros(p: &str, center: &str, radius: f64) -> Result<Report> {
    let poly = parse_polynomial_complex(p)?;
    let c0 = parse_complex(center)?;
    let (n, raw) = count_polynomial_zeros_raw(&poly, &Contour::circle(c0, radius)?)?;
    let mut rep = Report::new(json!({ "p": p, "center": cjson(c0), "radius": radius }));
    rep.line(format!("{n} zeros inside |z - {}| < {radius}", fmt_c(c0)));
    rep.line(format!("raw argument-principle value {}", fmt_c(raw)));
    rep.diag("integer_gap", (raw - Complex64::new(n as f64, 0.0)).norm());
    Ok(rep.result(json!({ "count": n, "raw": cjson(raw) })))
}

fn integral(name: IntegralName, a: Option<f64>, b: Option<f64>, k: Option<f64>, alpha: Option<f64>) -> Result<Report> {
    let which = match name {
        IntegralName::TrigRational => ClassicalIntegral::TrigRational { a: a.unwrap_or(2.0), b: b.unwrap_or(1.0) },
        IntegralName::FourierQuadratic => ClassicalIntegral::FourierQuadratic { a: a.unwrap_or(1.0), k: k.unwrap_or(1.0) },
        IntegralName::Dirichlet => ClassicalIntegral::Dirichlet,
        IntegralName::KeyholePower => ClassicalIntegral::KeyholePower { alpha: alpha.unwrap_or(1.0 / 3.0) },
        IntegralName::Cuberoot => ClassicalIntegral::Cuberoot,
    };
    let o = classical_integral(which)?;
    let mut rep = Report::new(serde_json::to_value(which).expect("serialize"));
    rep.line(format!("closed form: {:.15}", o.closed_form));
    rep.line(format!("quadrature:  {:.15}", o.numeric.value.re));
    rep.line(format!("agree within {:.0e}: {}", o.tolerance, o.agrees));
    rep.diag("error_estimate", o.numeric.error_estimate);
    rep.diag("evaluations", o.numeric.evaluations);
    rep.failed = !o.agrees;
    Ok(rep.result(json!({
        "closed_form": o.closed_form,
        "numeric": o.numeric.value.re,
        "difference": (o.closed_form - o.numeric.value.re).abs(),
        "tolerance": o.tolerance,
        "agrees": o.agrees,
    })))
}

fn gamma_cmd(s: Option<&str>, residue: Option<u32>) -> Result<Report> {
    let mut rep = Report::new(json!({ "s": s, "residue": residue }));
    let mut out = serde_json::Map::new();
    if let Some(s) = s {
        let z = parse_complex(s)?;
        let v = gamma(z)?;
        rep.line(format!("Gamma({}) = {}", fmt_c(z), fmt_c(v)));
        out.insert("gamma".into(), cjson(v));
    }
    if let Some(n) = residue {
        let r = gamma_residue(n);
        rep.line(format!("Res_{{s=-{n}}} Gamma = {r}"));
        out.insert("residue".into(), json!(r.to_string()));
    }
    Ok(rep.result(Value::Object(out)))
}

fn divisor(f: &str) -> Result<Report> {
    let d = match parse_rational(f)? {
        ParsedRational::Exact(fq) => principal_divisor(&fq)?,
        ParsedRational::Complex(fc) => principal_divisor(&fc)?,
    };
    let mut rep = Report::new(json!({ "f": f }));
    rep.line(format!("div = {d}"));
    rep.line(format!("degree {}", d.degree()));
    if d.degree() != 0 {
        return Err(Error::Consistency(format!("principal divisor has degree {}", d.degree())));
    }
    Ok(rep.result(divisor_json(&d)))
}

fn sections(m: i64, s0: Option<&str>) -> Result<Report> {
    let (h0, exps) = h0_om(m);
    let mut rep = Report::new(json!({ "m": m, "s0": s0 }));
    rep.line(format!("h0(O({m})) = {h0}"));
    if !exps.is_empty() {
        let basis: Vec<String> = exps.iter().map(|k| format!("Z0^{} Z1^{k}", m - *k as i64)).collect();
        rep.line(format!("basis: {}", basis.join(", ")));
    }
    let mut out = json!({ "h0": h0, "exponents": exps });
    if let Some(s) = s0 {
        let d = section_divisor_om(m, &parse_polynomial_q(s)?)?;
        rep.line(format!("div(s) = {d}  (degree {})", d.degree()));
        out["divisor"] = divisor_json(&d);
    }
    Ok(rep.result(out))
}

/// `l(n [inf])` on the sphere through the explicit basis.
fn ell_sphere(n: i64) -> Result<i64> {
    Ok(ell_p1(&Divisor::point(P1Point::Infinity, n))?.0 as i64)
}

fn rr(g: i64, deg: i64) -> Result<Report> {
    let (ell_d, ell_kd) = match g {
        0 => (ell_sphere(deg)?, ell_sphere(-2 - deg)?),
        // K = 0 on a genus-one curve
        1 if deg > 0 => (ell_elliptic(deg)?, 0),
        1 if deg < 0 => (0, ell_elliptic(-deg)?),
        1 => return Err(Error::Unsupported("degree-0 divisors on a genus-one curve need a principality test".into())),
        _ => return Err(Error::Unsupported(format!("genus {g}: only 0 and 1 are tabulated"))),
    };
    let holds = rr_verify(g, deg, ell_d, ell_kd)?;
    let mut rep = Report::new(json!({ "genus": g, "deg": deg }));
    rep.line(format!("l(D) = {ell_d}, l(K-D) = {ell_kd}, 1 - g + deg D = {}", 1 - g + deg));
    rep.line(format!("Riemann-Roch holds: {holds}"));
    rep.failed = !holds;
    Ok(rep.result(json!({ "ell_d": ell_d, "ell_k_minus_d": ell_kd, "rhs": 1 - g + deg, "holds": holds })))
}

fn cover(f: Option<&str>, kummer_n: Option<u64>, kummer_m: Option<i64>) -> Result<Report> {
    let mut rep = Report::new(json!({ "f": f, "kummer_n": kummer_n, "kummer_m": kummer_m }));
    let mut out = serde_json::Map::new();
    if let Some(f) = f {
        let spec = DoubleCoverSpec::new(parse_polynomial_q_in(f, 'x')?)?;
        let branch = branch_values(&spec)?;
        let genus = genus_double_cover(&spec)?;
        let shown: Vec<String> = branch.iter().map(|p| p.to_string()).collect();
        rep.line(format!("branch values: {}", shown.join(", ")));
        rep.line(format!("genus {genus}"));
        out.insert("branch_values".into(), json!(branch));
        out.insert("genus".into(), json!(genus));
    }
    if let (Some(n), Some(m)) = (kummer_n, kummer_m) {
        let e = kummer_ram_index(n, m)?;
        rep.line(format!("ramification index of y^{n} over a root of order {m}: {e}"));
        out.insert("ramification_index".into(), json!(e));
    }
    Ok(rep.result(Value::Object(out)))
}

fn mult(f: &str, g: &str, at: Option<&str>) -> Result<Report> {
    let (fp, gp) = (parse_bivariate(f)?, parse_bivariate(g)?);
    let (a, b) = match at {
        None => (q(0), q(0)),
        Some(s) => {
            let (x, y) = s.split_once(',').ok_or_else(|| Error::Parse(format!("point '{s}' is not 'a,b'")))?;
            (parse_q(x.trim())?, parse_q(y.trim())?)
        }
    };
    let at_origin = a == q(0) && b == q(0);
    let m = if at_origin {
        match mult_origin_resultant(&fp, &gp) {
            Err(Error::Precondition(_)) => intersection_multiplicity_at(&fp, &gp, &a, &b)?,
            other => other?,
        }
    } else {
        intersection_multiplicity_at(&fp, &gp, &a, &b)?
    };
    let mut rep = Report::new(json!({ "f": f, "g": g, "at": [a.to_string(), b.to_string()] }));
    rep.line(format!("{m}"));
    Ok(rep.result(json!({ "multiplicity": m })))
}

fn bezout(f: &str, g: &str) -> Result<Report> {
    let r = bezout_verify(&parse_form(f)?, &parse_form(g)?)?;
    let mut rep = Report::new(json!({ "f": f, "g": g }));
    for p in &r.points {
        rep.line(format!("{}  multiplicity {}", p.point, p.multiplicity));
    }
    for c in &r.clusters {
        rep.line(format!("{}  total order {}", c.locus, c.total_order));
    }
    rep.line(format!("total {} = deg F * deg G = {}", r.total, r.expected));
    rep.failed = r.total != r.expected;
    Ok(rep.result(serde_json::to_value(&r).expect("serialize")))
}

fn parse_model(s: &str) -> Result<SurfaceModel> {
    let t = s.trim().to_ascii_lowercase().replace(['_', '-', ' '], "");
    Ok(match t.as_str() {
        "p2" => SurfaceModel::P2,
        "p1xp1" | "p1p1" => SurfaceModel::P1xP1,
        "blowup" | "blowupp2" | "bl" => SurfaceModel::BlowupP2,
        _ => {
            let n = t
                .strip_prefix("hirzebruch")
                .or_else(|| t.strip_prefix('f'))
                .and_then(|n| n.trim_start_matches(':').parse::<u32>().ok())
                .ok_or_else(|| {
                    Error::Parse(format!("unknown model '{s}' (p2, p1xp1, blowup, hirzebruch:<n> or f<n>)"))
                })?;
            SurfaceModel::Hirzebruch(n)
        }
    })
}

fn chi(model: &str, class: &str) -> Result<Report> {
    let m = parse_model(model)?;
    let d = parse_ints(class)?;
    let v = surface_chi(m, &d)?;
    let mut rep = Report::new(json!({ "model": m, "class": d, "basis": m.basis() }));
    rep.line(format!("{v}"));
    Ok(rep.result(json!({ "chi": v })))
}

fn genus(model: &str, class: &str) -> Result<Report> {
    let m = parse_model(model)?;
    let c = parse_ints(class)?;
    let v = adjunction_genus(m, &c)?;
    let mut rep = Report::new(json!({ "model": m, "class": c, "basis": m.basis() }));
    rep.line(format!("{v}"));
    Ok(rep.result(json!({ "genus": v })))
}

fn parse_matrix(s: &str) -> Result<Vec<Vec<Complex64>>> {
    s.split(';').map(|row| row.split(',').map(|e| parse_complex(e.trim())).collect()).collect()
}

fn theta(tau: Option<&str>, omega: Option<&str>, z: &str, index: u8, tol: f64) -> Result<Report> {
    let zs: Vec<Complex64> = z.split(',').map(|t| parse_complex(t.trim())).collect::<Result<_>>()?;
    match (tau, omega) {
        (Some(t), _) => {
            let tv = TauValue::new(parse_complex(t)?)?;
            if zs.len() != 1 {
                return Err(Error::Parse("Jacobi theta takes a single z".into()));
            }
            let v = jacobi_theta(index, zs[0], tv, tol)?;
            let mut rep = Report::new(json!({ "tau": cjson(tv.get()), "z": cjson(zs[0]), "index": index, "tol": tol }));
            rep.line(format!("theta_{index}({} | {}) = {}", fmt_c(zs[0]), fmt_c(tv.get()), fmt_c(v)));
            Ok(rep.result(json!({ "value": cjson(v) })))
        }
        (None, Some(o)) => {
            let om = RiemannPeriodMatrix::new(parse_matrix(o)?)?;
            if zs.len() != om.genus() {
                return Err(Error::Parse(format!("z has {} entries but the genus is {}", zs.len(), om.genus())));
            }
            let v = riemann_theta(&zs, &om, tol)?;
            let mut rep = Report::new(json!({
                "omega": om.entries().iter().map(|r| r.iter().map(|c| cjson(*c)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "z": zs.iter().map(|c| cjson(*c)).collect::<Vec<_>>(),
                "tol": tol,
            }));
            rep.line(format!("theta = {}", fmt_c(v.value)));
            rep.line(format!("truncation {} with tail bound {:.3e}", v.truncation, v.tail_bound));
            rep.diag("error_estimate", v.tail_bound);
            rep.diag("truncation", v.truncation);
            Ok(rep.result(json!({ "value": cjson(v.value) })))
        }
        (None, None) => Err(Error::Parse("give --tau (Jacobi) or --omega (Riemann)".into())),
    }
}

fn lattice(omega1: &str, omega2: &str) -> Result<PeriodPair> {
    PeriodPair::new(parse_complex(omega1)?, parse_complex(omega2)?)
}

fn wp(omega1: &str, omega2: &str, z: &str, n: usize) -> Result<Report> {
    let l = lattice(omega1, omega2)?;
    let zc = parse_complex(z)?;
    let inv = elliptic_invariants(&l, n)?;
    let c = inv.wp_constant(&l);
    let via_theta = wp_via_theta(zc, &l, c)?;
    let via_lattice = wp_lattice(zc, &l, n)?;
    let derivative = wp_prime(zc, &l)?;
    let ode = ode_residual(zc, &l, n)?;
    let mut rep = Report::new(json!({ "lattice": l, "z": cjson(zc), "trunc": n }));
    rep.line(format!("wp(z)  = {}  (theta)", fmt_c(via_theta)));
    rep.line(format!("wp(z)  = {}  (lattice sum)", fmt_c(via_lattice)));
    rep.line(format!("wp'(z) = {}", fmt_c(derivative)));
    rep.line(format!("g2 = {}, g3 = {}, eta1 = {}", fmt_c(inv.g2), fmt_c(inv.g3), fmt_c(inv.eta1)));
    rep.line(format!("ODE residual {ode:.3e}"));
    rep.diag("truncation", n);
    rep.diag("theta_vs_lattice", (via_theta - via_lattice).norm());
    rep.diag("ode_residual", ode);
    Ok(rep.result(json!({
        "wp": cjson(via_theta),
        "wp_lattice": cjson(via_lattice),
        "wp_prime": cjson(derivative),
        "g2": cjson(inv.g2),
        "g3": cjson(inv.g3),
        "eta1": cjson(inv.eta1),
    })))
}

fn periods(e1: f64, e2: f64, e3: f64, n: usize) -> Result<Report> {
    let l = periods_real_cubic(e1, e2, e3)?;
    let c = eta1_ratio(&l, n)?;
    let half = |w: Complex64| wp_via_theta(w / 2.0, &l, c);
    let shift = (e1 + e2 + e3) / 3.0;
    let values = [half(l.omega1)?, half(l.omega1 + l.omega2)?, half(l.omega2)?];
    let mut rep = Report::new(json!({ "e": [e1, e2, e3], "trunc": n }));
    rep.line(format!("omega1 = {}, omega2 = {}", fmt_c(l.omega1), fmt_c(l.omega2)));
    rep.line(format!("tau = {}", fmt_c(l.tau())));
    let back: Vec<f64> = values.iter().map(|v| v.re + shift).collect();
    rep.line(format!("half-period values + mean: {:.8}, {:.8}, {:.8}", back[0], back[1], back[2]));
    let gap = back.iter().zip([e1, e2, e3]).map(|(b, e)| (b - e).abs()).fold(0.0, f64::max);
    rep.diag("truncation", n);
    rep.diag("round_trip_error", gap);
    Ok(rep.result(json!({
        "lattice": l,
        "tau": cjson(l.tau()),
        "half_period_values": values.iter().map(|v| cjson(*v)).collect::<Vec<_>>(),
    })))
}

fn trig(a0: f64, cos: &str, sin: &str) -> Result<TrigPolynomial> {
    Ok(TrigPolynomial::new(a0, parse_list(cos)?, parse_list(sin)?))
}

fn trig_json(t: &TrigPolynomial) -> Value {
    json!({ "a0": t.a0, "cos": t.cos, "sin": t.sin })
}

fn poisson(domain: &PoissonDomain, g: &Global, tol: f64) -> Result<Report> {
    match domain {
        PoissonDomain::Disk { r, theta, a0, cos, sin } => {
            let f = trig(*a0, cos, sin)?;
            let nodes = g.grid.unwrap_or(DEFAULT_POISSON_NODES);
            let closed = poisson_extend_trig(&f, *r, *theta)?;
            let mut rep = Report::new(json!({ "r": r, "theta": theta, "data": trig_json(&f), "nodes": nodes }));
            rep.line(format!("u = {closed:.15}  (Fourier)"));
            let mut out = json!({ "value": closed });
            // the periodic rule converges geometrically only away from the boundary
            if *r <= 0.99 {
                let quad = poisson_extend_quadrature(|t| f.eval(t), *r, *theta, nodes)?;
                let gap = (quad - closed).abs();
                rep.line(format!("u = {quad:.15}  (kernel quadrature, {nodes} nodes), |difference| {gap:.3e}"));
                rep.diag("evaluations", nodes);
                rep.diag("error_estimate", gap);
                out["quadrature"] = json!(quad);
                rep.failed = gap > tol.max(1e-12);
            }
            Ok(rep.result(out))
        }
        PoissonDomain::Halfplane { x, y, data, window } => {
            let f = parse_rational_q_in(data, 'x')?.to_complex();
            let w = window.unwrap_or(4.0 * y / (PI * tol));
            let nodes = g.grid.unwrap_or(DEFAULT_HALFPLANE_NODES);
            let v = poisson_halfplane(*x, *y, |t| f.eval_complex(Complex64::new(t, 0.0)).re, w, nodes, tol)?;
            let mut rep = Report::new(json!({ "x": x, "y": y, "data": data, "window": w, "nodes": nodes }));
            rep.line(format!("u = {:.15}", v.value));
            rep.line(format!("kernel mass outside the window {:.3e}", v.tail_mass));
            rep.diag("evaluations", nodes);
            rep.diag("tail_mass", v.tail_mass);
            Ok(rep.result(json!({ "value": v.value })))
        }
    }
}

fn parse_parity(s: &str) -> Result<Parity> {
    match s.trim() {
        "cos" | "c" => Ok(Parity::Cos),
        "sin" | "s" => Ok(Parity::Sin),
        other => Err(Error::Parse(format!("parity '{other}' is not cos or sin"))),
    }
}

/// `m,n,cos,sin=0.5` -> cos(2 pi m x) sin(2 pi n y) with coefficient 0.5.
fn parse_mode(s: &str) -> Result<(TorusMode, f64)> {
    let bad = || Error::Parse(format!("mode '{s}' is not m,n,cos|sin,cos|sin=coef"));
    let (lhs, c) = s.split_once('=').ok_or_else(bad)?;
    let parts: Vec<&str> = lhs.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(bad());
    }
    let m = parts[0].parse().map_err(|_| bad())?;
    let n = parts[1].parse().map_err(|_| bad())?;
    let coef = c.trim().parse().map_err(|_| bad())?;
    Ok((TorusMode::new(m, n, parse_parity(parts[2])?, parse_parity(parts[3])?)?, coef))
}

fn laplace(space: &LaplaceSpace) -> Result<Report> {
    match space {
        LaplaceSpace::Circle { cos, sin, a0 } => {
            let f = trig(*a0, cos, sin)?;
            let u = laplace_circle(&f)?;
            let mut rep = Report::new(json!({ "f": trig_json(&f) }));
            let terms: Vec<String> = (1..=u.degree())
                .flat_map(|n| {
                    let mut t = Vec::new();
                    if u.a(n) != 0.0 {
                        t.push(format!("{} cos {n}t", u.a(n)));
                    }
                    if u.b(n) != 0.0 {
                        t.push(format!("{} sin {n}t", u.b(n)));
                    }
                    t
                })
                .collect();
            rep.line(format!("u = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") }));
            rep.line(format!("Dirichlet energy {:.15}, ||u||^2 {:.15}", u.dirichlet_energy(), u.l2_norm_sq()));
            Ok(rep.result(json!({
                "u": trig_json(&u),
                "energy": u.dirichlet_energy(),
                "l2_norm_sq": u.l2_norm_sq(),
            })))
        }
        LaplaceSpace::Torus { modes } => {
            let mut f = TorusModes::default();
            for s in modes {
                let (m, c) = parse_mode(s)?;
                *f.0.entry(m).or_insert(0.0) += c;
            }
            let u = laplace_torus(&f)?;
            let mut rep = Report::new(json!({ "modes": modes }));
            let coeffs: Vec<Value> = u
                .0
                .iter()
                .map(|(m, c)| {
                    rep.line(format!("({},{},{:?},{:?}): {c:.15e}", m.m, m.n, m.px, m.py));
                    json!({ "mode": m, "coefficient": c })
                })
                .collect();
            rep.line(format!("Dirichlet energy {:.15e}", u.dirichlet_energy()));
            Ok(rep.result(json!({ "u": coeffs, "energy": u.dirichlet_energy() })))
        }
        LaplaceSpace::Sphere { c } => {
            let k = laplace_sphere_l1(*c);
            let mut rep = Report::new(json!({ "c": c }));
            rep.line(format!("u = {k} z"));
            Ok(rep.result(json!({ "coefficient": k })))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn surface(
    kind: SurfaceKind,
    big_r: f64,
    small_r: f64,
    at: Option<&str>,
    csv_path: Option<&std::path::Path>,
    grid: usize,
    tol: f64,
) -> Result<Report> {
    let s = match kind {
        SurfaceKind::Sphere => SurfaceSpec::UnitSphere,
        SurfaceKind::Torus => SurfaceSpec::torus(big_r, small_r)?,
    };
    let mut rep = Report::new(json!({ "surface": s, "grid": grid }));
    let mut out = serde_json::Map::new();
    if let Some(p) = at {
        let v = parse_list(p)?;
        if v.len() != 2 {
            return Err(Error::Parse(format!("point '{p}' is not 'u,v'")));
        }
        let ff = first_fundamental(&s, v[0], v[1]);
        let k = gauss_curvature(&s, v[0], v[1]);
        rep.line(format!("E = {}, F = {}, G = {}, dA = {}, K = {k}", ff.e, ff.f, ff.g, ff.density));
        out.insert("fundamental_form".into(), json!(ff));
        out.insert("K".into(), json!(k));
    }
    let total = total_curvature(&s, grid)?;
    let area = surface_area(&s, grid)?;
    let expected = 2.0 * PI * s.euler_characteristic() as f64;
    let gap = (total - expected).abs();
    rep.line(format!("total curvature {total:.15} (2 pi chi = {expected:.15}), |difference| {gap:.3e}"));
    rep.line(format!("area {area:.15}"));
    if let Some(path) = csv_path {
        let mut w = csv::Writer::from_path(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        for sample in surface_grid(&s, grid)? {
            w.serialize(sample).map_err(|e| Error::Parse(e.to_string()))?;
        }
        w.flush().map_err(|e| Error::Parse(e.to_string()))?;
        rep.line(format!("grid written to {}", path.display()));
    }
    rep.diag("evaluations", grid * grid);
    rep.diag("error_estimate", gap);
    rep.failed = gap > tol.max(1e-12) * (1.0 + expected.abs());
    out.insert("total_curvature".into(), json!(total));
    out.insert("two_pi_chi".into(), json!(expected));
    out.insert("area".into(), json!(area));
    Ok(rep.result(Value::Object(out)))
}

fn selftest_cmd(id: Option<u8>) -> Result<Report> {
    let rows = match id {
        Some(i) => vec![selftest::run(i).ok_or_else(|| Error::Parse(format!("no criterion {i}")))?],
        None => selftest::run_all(),
    };
    let mut rep = Report::new(json!({ "id": id }));
    let mut table = Vec::new();
    for r in &rows {
        rep.line(format!("{} {:>2} {:<36} {}", if r.pass { "PASS" } else { "FAIL" }, r.id, r.name, r.detail));
        table.push(json!({ "id": r.id, "name": r.name, "pass": r.pass, "detail": r.detail }));
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    rep.line(format!("{passed} of {} passed", rows.len()));
    rep.failed = passed != rows.len();
    Ok(rep.result(json!({ "rows": table, "passed": passed, "total": rows.len() })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_names() {
        assert_eq!(parse_model("P2").unwrap(), SurfaceModel::P2);
        assert_eq!(parse_model("p1xp1").unwrap(), SurfaceModel::P1xP1);
        assert_eq!(parse_model("F3").unwrap(), SurfaceModel::Hirzebruch(3));
        assert_eq!(parse_model("hirzebruch:0").unwrap(), SurfaceModel::Hirzebruch(0));
        assert_eq!(parse_model("blow-up").unwrap(), SurfaceModel::BlowupP2);
        assert!(parse_model("k3").is_err());
    }

    #[test]
    fn torus_modes() {
        let (m, c) = parse_mode("2, 1, cos, sin = -0.5").unwrap();
        assert_eq!((m.m, m.n, m.px, m.py, c), (2, 1, Parity::Cos, Parity::Sin, -0.5));
        assert!(parse_mode("0,1,sin,cos=1").is_err());
        assert!(parse_mode("1,1,cos=1").is_err());
    }
}
