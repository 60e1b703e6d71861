//! Command handlers. Each returns a [`CommandOutput`] holding both the
//! JSON payload and the human rendering; `main` decides which to print.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use torsion2::curves::{EllipticModel, HyperellipticModel};
use torsion2::f2::{self, F2Vector, OrientationParity, RealCurveType};
use torsion2::gw::{self, conjecture_rhs, is_isometric, FormInvariants};
use torsion2::rational::Rational;
use torsion2::square::Sign;

use crate::parse::{parse_poly, ParseError};
use crate::render::table;
use crate::verify::{self, Check, Status};

pub struct CommandOutput {
    pub command: &'static str,
    pub input: Value,
    pub result: Value,
    pub checks: Vec<Check>,
    pub human: String,
}

impl CommandOutput {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input": self.input,
            "result": self.result,
            "paper_checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "expected": c.expected,
                "actual": c.actual,
                "status": c.status.as_str(),
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug)]
pub enum AppError {
    /// exit 1
    Usage(String),
    /// exit 2
    Domain(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => 1,
            AppError::Domain(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            AppError::Usage(m) | AppError::Domain(m) => m,
        }
    }
}

impl From<torsion2::Error> for AppError {
    fn from(e: torsion2::Error) -> AppError {
        AppError::Domain(e.to_string())
    }
}

impl From<ParseError> for AppError {
    fn from(e: ParseError) -> AppError {
        AppError::Usage(e.to_string())
    }
}

type CmdResult = Result<CommandOutput, AppError>;

fn parse_rational(s: &str) -> Result<Rational, AppError> {
    Rational::from_str(s.trim())
        .map_err(|e| AppError::Usage(format!("cannot parse rational '{s}': {e}")))
}

fn parse_rational_csv(s: &str) -> Result<Vec<Rational>, AppError> {
    s.split(',').map(parse_rational).collect()
}

fn parse_bit_csv(s: &str) -> Result<Vec<bool>, AppError> {
    s.split(',')
        .map(|b| match b.trim() {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(AppError::Usage(format!("expected bit 0 or 1, got '{other}'"))),
        })
        .collect()
}

fn parse_index_csv(s: &str) -> Result<Vec<usize>, AppError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| AppError::Usage(format!("cannot parse root index '{t}'")))
        })
        .collect()
}

/// Builds a split hyperelliptic model from `--roots`/`--lead` or from a
/// polynomial that must split over ℚ.
fn resolve_hyper(
    roots: Option<&str>,
    lead: Option<&str>,
    poly: Option<&str>,
) -> Result<(HyperellipticModel, Value), AppError> {
    if let Some(roots_text) = roots {
        let roots = parse_rational_csv(roots_text)?;
        let lead = lead.map(parse_rational).transpose()?.unwrap_or_else(|| {
            Rational::from_integer(1.into())
        });
        let m = HyperellipticModel::new(lead.clone(), roots.clone())?;
        let input = json!({
            "roots": roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "lead": lead.to_string(),
        });
        Ok((m, input))
    } else if let Some(poly_text) = poly {
        let p = parse_poly(poly_text)?;
        let m = HyperellipticModel::from_poly(&p)?;
        Ok((m, json!({"poly": poly_text})))
    } else {
        Err(AppError::Usage(
            "provide a model through --roots (with optional --lead) or --poly".into(),
        ))
    }
}

fn invariants_json(inv: &FormInvariants) -> Value {
    json!({
        "rank": inv.rank,
        "signature": inv.signature,
        "discriminant": inv.discriminant.to_string(),
        "hasse_minus_places": inv.hasse.keys().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

fn sign_str(s: Sign) -> String {
    match s {
        Sign::Plus => "+1".to_string(),
        Sign::Minus => "-1".to_string(),
    }
}

fn bits_str(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn elliptic_q2(poly_text: &str, point: Option<&str>) -> CmdResult {
    let p = parse_poly(poly_text)?;
    let m = EllipticModel::new(&p)?;
    match point {
        Some(ztext) => {
            let z = parse_rational(ztext)?;
            let q2 = m.q2(&z)?;
            Ok(CommandOutput {
                command: "elliptic-q2",
                input: json!({"poly": poly_text, "point": z.to_string()}),
                result: json!({"q2": q2.to_string(), "sign": sign_str(q2.real_sign())}),
                checks: vec![],
                human: format!("q2({z}) = {q2}\n"),
            })
        }
        None => {
            let roots = m.two_torsion_roots();
            let rows: Vec<Vec<String>> = roots
                .iter()
                .map(|z| {
                    let q2 = m.q2(z).unwrap();
                    vec![z.to_string(), q2.to_string(), sign_str(q2.real_sign())]
                })
                .collect();
            let entries: Vec<Value> = roots
                .iter()
                .map(|z| {
                    let q2 = m.q2(z).unwrap();
                    json!({"point": z.to_string(), "q2": q2.to_string(), "sign": sign_str(q2.real_sign())})
                })
                .collect();
            let mut human = table(&["point", "q2", "sign"], &rows);
            let mut checks = Vec::new();
            let mut result = json!({"points": entries});
            if let Ok(count) = m.signed_count() {
                let _ = writeln!(human, "signed count (with the origin): {count}");
                result["signed_count"] = json!(count);
                checks.push(check_eq("signed-count-2g", 2i64, count));
            }
            Ok(CommandOutput {
                command: "elliptic-q2",
                input: json!({"poly": poly_text}),
                result,
                checks,
                human,
            })
        }
    }
}

fn check_eq(name: &str, expected: impl ToString, actual: impl ToString) -> Check {
    let expected = expected.to_string();
    let actual = actual.to_string();
    let status = if expected == actual {
        Status::Pass
    } else {
        Status::Fail
    };
    Check {
        name: name.to_string(),
        expected,
        actual,
        status,
    }
}

pub fn elliptic_table(poly_text: &str) -> CmdResult {
    let p = parse_poly(poly_text)?;
    let m = EllipticModel::new(&p)?;
    let roots = m.two_torsion_roots();
    let mut b2_rows: Vec<Vec<String>> = Vec::new();
    let mut e2_rows: Vec<Vec<String>> = Vec::new();
    let mut b2_json = Vec::new();
    for zi in &roots {
        let mut brow = vec![format!("({zi},0)")];
        let mut erow = vec![format!("({zi},0)")];
        let mut jrow = Vec::new();
        for zj in &roots {
            let value = if zi == zj {
                m.q2(zi).unwrap()
            } else {
                m.b2_offdiag(zi, zj).unwrap()
            };
            brow.push(value.to_string());
            jrow.push(value.to_string());
            erow.push(if zi == zj { "1".into() } else { "-1".into() });
        }
        b2_rows.push(brow);
        e2_rows.push(erow);
        b2_json.push(jrow);
    }
    let mut headers = vec!["point".to_string()];
    headers.extend(roots.iter().map(|z| format!("({z},0)")));
    let header_refs: Vec<&str> = headers.iter().map(|s| s.as_str()).collect();
    let mut human = String::new();
    if roots.is_empty() {
        human.push_str("no rational 2-torsion points\n");
    } else {
        human.push_str("b2 pairing (rows a, columns lambda(a')):\n");
        human.push_str(&table(&header_refs, &b2_rows));
        human.push_str("\ne2 pairing:\n");
        human.push_str(&table(&header_refs, &e2_rows));
    }
    let mut checks = Vec::new();
    let mut result = json!({
        "points": roots.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
        "b2_matrix": b2_json,
    });
    match m.signed_count() {
        Ok(count) => {
            let _ = writeln!(human, "\nsigned count (with the origin): {count}");
            result["signed_count"] = json!(count);
            checks.push(check_eq("signed-count-2g", 2i64, count));
        }
        Err(e) => {
            let _ = writeln!(human, "\nsigned count unavailable: {e}");
            result["signed_count_error"] = json!(e.to_string());
        }
    }
    Ok(CommandOutput {
        command: "elliptic-table",
        input: json!({"poly": poly_text}),
        result,
        checks,
        human,
    })
}

pub fn hyper_q2(
    roots: Option<&str>,
    lead: Option<&str>,
    poly: Option<&str>,
    subset: &str,
) -> CmdResult {
    let (m, input) = resolve_hyper(roots, lead, poly)?;
    let indices = parse_index_csv(subset)?;
    let class = m.class(&indices)?;
    let q2 = m.q2(&class)?;
    let mut input = input;
    input["subset"] = json!(indices);
    Ok(CommandOutput {
        command: "hyper-q2",
        input,
        result: json!({
            "class": class.to_string(),
            "q2": q2.to_string(),
            "sign": sign_str(q2.real_sign()),
        }),
        checks: vec![],
        human: format!("q2({class}) = {q2}\n"),
    })
}

pub fn hyper_table(roots: Option<&str>, lead: Option<&str>, poly: Option<&str>) -> CmdResult {
    let (m, input) = resolve_hyper(roots, lead, poly)?;
    let genus = m.genus();
    let classes = m.classes();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    let mut signed = 0i64;
    let mut product = torsion2::SquareClass::one();
    for c in &classes {
        let q2 = m.q2(c).unwrap();
        let par = m.par_vec(c).unwrap();
        let sg = m.sg_vec(c).unwrap();
        signed += q2.real_sign().value();
        product = &product * &q2;
        rows.push(vec![
            c.to_string(),
            q2.to_string(),
            sign_str(q2.real_sign()),
            bits_str(&par),
            bits_str(&sg),
        ]);
        entries.push(json!({
            "class": c.to_string(),
            "q2": q2.to_string(),
            "sign": sign_str(q2.real_sign()),
            "par": bits_str(&par),
            "sg": bits_str(&sg),
        }));
    }
    let mut human = table(&["class", "q2", "sign", "par", "sg"], &rows);
    let _ = writeln!(human, "\ngenus {genus}: signed count = {signed}, q2 product = {product}");
    let expected_product = if genus == 1 { "-1" } else { "1" };
    let checks = vec![
        check_eq("signed-count-2g", 1i64 << genus, signed),
        check_eq("q2-product-determinant", expected_product, &product),
    ];
    Ok(CommandOutput {
        command: "hyper-table",
        input,
        result: json!({
            "genus": genus,
            "classes": entries,
            "signed_count": signed,
            "q2_product": product.to_string(),
        }),
        checks,
        human,
    })
}

#[allow(clippy::too_many_arguments)]
pub fn signed_count(
    roots: Option<&str>,
    lead: Option<&str>,
    poly: Option<&str>,
    g: Option<u32>,
    s: Option<u32>,
    a: Option<u8>,
) -> CmdResult {
    if let (Some(g), Some(s), Some(a)) = (g, s, a) {
        let t = RealCurveType::new(g, s, a)?;
        let count = f2::signed_count(&t);
        return Ok(CommandOutput {
            command: "signed-count",
            input: json!({"g": g, "s": s, "a": a}),
            result: json!({"signed_count": count, "real_points": 1u64 << (g + s)}),
            checks: vec![check_eq("signed-count-2g", 1i64 << g, count)],
            human: format!("signed count over 2^(g+s) = {} real points: {count}\n", 1u64 << (g + s)),
        });
    }
    if roots.is_some() {
        let (m, input) = resolve_hyper(roots, lead, None)?;
        let count = m.signed_count();
        let genus = m.genus();
        return Ok(CommandOutput {
            command: "signed-count",
            input,
            result: json!({"genus": genus, "signed_count": count}),
            checks: vec![check_eq("signed-count-2g", 1i64 << genus, count)],
            human: format!("genus {genus}: signed count = {count}\n"),
        });
    }
    if let Some(poly_text) = poly {
        let p = parse_poly(poly_text)?;
        if p.degree() == Some(3) {
            let m = EllipticModel::new(&p)?;
            let count = m.signed_count()?;
            return Ok(CommandOutput {
                command: "signed-count",
                input: json!({"poly": poly_text}),
                result: json!({"genus": 1, "signed_count": count}),
                checks: vec![check_eq("signed-count-2g", 2i64, count)],
                human: format!("signed count = {count}\n"),
            });
        }
        let (m, input) = resolve_hyper(None, None, Some(poly_text))?;
        let count = m.signed_count();
        let genus = m.genus();
        return Ok(CommandOutput {
            command: "signed-count",
            input,
            result: json!({"genus": genus, "signed_count": count}),
            checks: vec![check_eq("signed-count-2g", 1i64 << genus, count)],
            human: format!("genus {genus}: signed count = {count}\n"),
        });
    }
    Err(AppError::Usage(
        "provide --g/--s/--a, or --roots, or --poly".into(),
    ))
}

pub fn theta_counts(
    g: u32,
    s: u32,
    a: u8,
    orientation: Option<&str>,
    parity: Option<&str>,
) -> CmdResult {
    let t = RealCurveType::new(g, s, a)?;
    let u1 = match orientation {
        Some(text) => parse_bit_csv(text)?,
        None => vec![false; s as usize],
    };
    let eps = match parity {
        Some(text) => parse_bit_csv(text)?,
        None => vec![false; s as usize],
    };
    if u1.len() != s as usize || eps.len() != s as usize {
        return Err(AppError::Usage(format!(
            "--orientation and --parity need exactly s = {s} bits"
        )));
    }
    let op = OrientationParity::new(u1.clone(), eps.clone());
    let (even, odd) = f2::theta_counts(&t, &op)?;
    let predicted = f2::theta_counts_predicted(&t, &op)?;
    Ok(CommandOutput {
        command: "theta-counts",
        input: json!({
            "g": g, "s": s, "a": a,
            "orientation": bits_str(&u1),
            "parity": bits_str(&eps),
        }),
        result: json!({"even": even, "odd": odd}),
        checks: vec![check_eq(
            "theta-counts-closed-form",
            format!("{predicted:?}"),
            format!("{:?}", (even, odd)),
        )],
        human: format!("even {even}, odd {odd}\n"),
    })
}

pub fn odd_signed_sum(g: u32, s: u32, a: u8, nu_upper: &str, nu_lower: &str) -> CmdResult {
    let t = RealCurveType::new(g, s, a)?;
    let upper = parse_bit_csv(nu_upper)?;
    let lower = parse_bit_csv(nu_lower)?;
    if upper.len() != g as usize || lower.len() != g as usize {
        return Err(AppError::Usage(format!(
            "nu needs exactly g = {g} bits in each block"
        )));
    }
    let to_bytes = |bits: &[bool]| -> Vec<u8> { bits.iter().map(|&b| u8::from(b)).collect() };
    let nu = F2Vector::from_bits(&to_bytes(&upper), &to_bytes(&lower))?;
    let sum = f2::odd_theta_signed_sum(&t, &nu)?;
    Ok(CommandOutput {
        command: "odd-signed-sum",
        input: json!({
            "g": g, "s": s, "a": a,
            "nu_upper": bits_str(&upper),
            "nu_lower": bits_str(&lower),
        }),
        result: json!({"sum": sum}),
        checks: vec![check_eq("odd-sum-2g-minus-1", 1i64 << (g - 1), sum)],
        human: format!("signed sum over real odd theta characteristics: {sum}\n"),
    })
}

pub fn gw_trace_form(poly_text: &str) -> CmdResult {
    let p = parse_poly(poly_text)?;
    let form = gw::trace_form_weighted(&p)?;
    let inv = form.invariants();
    let mut checks = Vec::new();
    if p.degree() == Some(3) {
        let target = gw::GwElement::units(2, 1);
        checks.push(check_eq(
            "cubic-trace-form-isometry",
            "isometric to 2*<1> + <-1>",
            if is_isometric(&form, &target) {
                "isometric to 2*<1> + <-1>".to_string()
            } else {
                format!("got {form}")
            },
        ));
    }
    let human = format!(
        "trace form: {form}\nrank {}, signature {}, discriminant {}\n",
        inv.rank, inv.signature, inv.discriminant
    );
    Ok(CommandOutput {
        command: "gw-trace-form",
        input: json!({"poly": poly_text}),
        result: json!({
            "diagonal": form.to_string(),
            "invariants": invariants_json(&inv),
        }),
        checks,
        human,
    })
}

pub fn conjecture(
    genus: u32,
    poly: Option<&str>,
    roots: Option<&str>,
    lead: Option<&str>,
) -> CmdResult {
    if genus == 0 {
        return Err(AppError::Usage("--genus must be at least 1".into()));
    }
    let rhs = conjecture_rhs(genus);
    if genus == 1 {
        let Some(poly_text) = poly else {
            return Err(AppError::Usage("genus 1 needs --poly with a cubic".into()));
        };
        let p = parse_poly(poly_text)?;
        let m = EllipticModel::new(&p)?;
        let lhs = m.conjecture_lhs()?;
        let iso = is_isometric(&lhs, &rhs);
        let human = format!(
            "lhs = {lhs}\nrhs = {rhs}\nisometric: {iso}\n"
        );
        return Ok(CommandOutput {
            command: "conjecture",
            input: json!({"genus": 1, "poly": poly_text}),
            result: json!({
                "lhs": lhs.to_string(),
                "rhs": rhs.to_string(),
                "lhs_invariants": invariants_json(&lhs.invariants()),
                "rhs_invariants": invariants_json(&rhs.invariants()),
                "isometric": iso,
            }),
            checks: vec![check_eq("conjecture-genus-1-isometry", true, iso)],
            human,
        });
    }
    let (m, mut input) = resolve_hyper(roots, lead, poly)?;
    if m.genus() != genus as usize {
        return Err(AppError::Domain(format!(
            "model has genus {}, but --genus {genus} was requested",
            m.genus()
        )));
    }
    input["genus"] = json!(genus);
    let lhs = m.conjecture_lhs();
    let li = lhs.invariants();
    let ri = rhs.invariants();
    let iso = is_isometric(&lhs, &rhs);
    let mut checks = vec![
        check_eq("conjecture-rank", ri.rank, li.rank),
        check_eq("conjecture-signature", ri.signature, li.signature),
        check_eq("conjecture-discriminant", &ri.discriminant, &li.discriminant),
    ];
    checks.push(Check {
        name: "conjecture-hasse-isometry".to_string(),
        expected: "isometric: true".to_string(),
        actual: format!("isometric: {iso}"),
        status: Status::Reported,
    });
    let human = format!(
        "lhs = {lhs}\nrhs = {rhs}\nrank {} vs {}, signature {} vs {}, discriminant {} vs {}\nisometric: {iso} [reported: proven only for g = 1]\n",
        li.rank, ri.rank, li.signature, ri.signature, li.discriminant, ri.discriminant
    );
    Ok(CommandOutput {
        command: "conjecture",
        input,
        result: json!({
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
            "lhs_invariants": invariants_json(&li),
            "rhs_invariants": invariants_json(&ri),
            "isometric": iso,
        }),
        checks,
        human,
    })
}

pub fn verify_cmd(seed: u64, inject_fault: bool) -> CommandOutput {
    let checks = verify::run_all(seed, inject_fault);
    let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
    let failed = verify::hard_failures(&checks);
    let reported = checks
        .iter()
        .filter(|c| c.status == Status::Reported)
        .count();
    let human = verify::render_report(&checks);
    CommandOutput {
        command: "verify",
        input: json!({"seed": seed}),
        result: json!({"passed": passed, "failed": failed, "reported": reported}),
        checks,
        human,
    }
}
