//! Command implementations. Every command produces a [`CommandResult`]
//! rendered as one JSON document on stdout; `status` is `ok` exactly when
//! the process exits 0.

use std::fs;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::{json, Value};

use starring::doc::MatrixDocument;
use starring::fixtures;
use starring::geninv;
use starring::harness::{enumerate_ring, run_suite, PropertyId, TrialConfig};
use starring::matrix::Matrix;
use starring::orders::{self, OrderKind, OrderMode};
use starring::scalar::ScalarDomain;

#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult {
            status: Status::Ok,
            payload,
            diagnostics: Vec::new(),
            timestamp: None,
        }
    }

    fn error(diagnostics: Vec<String>) -> Self {
        CommandResult {
            status: Status::Error,
            payload: Value::Null,
            diagnostics,
            timestamp: None,
        }
    }

    pub fn is_ok(&self) -> bool {
        matches!(self.status, Status::Ok)
    }

    pub fn stamped(mut self, with_timestamp: bool) -> Self {
        if with_timestamp {
            self.timestamp = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .ok()
                .map(|d| d.as_secs());
        }
        self
    }
}

fn load_matrix(path: &str) -> Result<Matrix, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let doc: MatrixDocument =
        serde_json::from_str(&text).map_err(|e| format!("bad matrix document {path}: {e}"))?;
    doc.to_matrix().map_err(|e| format!("{path}: {e}"))
}

/// `--domain` flag parser. Moduli are capped at 7 here: the library takes
/// any prime, but enumeration-backed commands blow up fast beyond that.
fn parse_cli_domain(text: &str) -> Result<ScalarDomain, String> {
    let domain: ScalarDomain = text.parse().map_err(|e| format!("{e}"))?;
    if let Some(p) = domain.modulus() {
        if p > 7 {
            return Err(format!("modulus {p} too large for the CLI; use p ≤ 7"));
        }
    }
    Ok(domain)
}

fn load_square(path: &str) -> Result<Matrix, String> {
    let m = load_matrix(path)?;
    if !m.is_square() {
        return Err(format!("{path}: ring elements must be square matrices"));
    }
    Ok(m)
}

pub fn compute(kind: &str, a_path: &str, w_path: Option<&str>) -> CommandResult {
    let run = || -> Result<Value, String> {
        let a = load_square(a_path)?;
        let aux = match w_path {
            Some(p) => {
                let w = load_square(p)?;
                if w.rows() != a.rows() || w.domain() != a.domain() {
                    return Err("auxiliary element must match a in size and domain".into());
                }
                Some(w)
            }
            None => None,
        };
        let need_aux = |aux: &Option<Matrix>| -> Result<Matrix, String> {
            aux.clone()
                .ok_or_else(|| format!("--w is required for kind {kind}"))
        };
        let result = match kind {
            "inner" => Ok(geninv::inner_inverse(&a)),
            "reflexive" => Ok(geninv::reflexive_inverse(&a)),
            "group" => geninv::group_inverse(&a),
            "one3" => geninv::one_three_inverse(&a),
            "one4" => geninv::one_four_inverse(&a),
            "mp" => geninv::moore_penrose(&a),
            "along" => geninv::inverse_along(&a, &need_aux(&aux)?),
            "core" => geninv::core_inverse(&a),
            "wcore" => geninv::w_core_inverse(&a, &need_aux(&aux)?),
            other => return Err(format!("unknown inverse kind {other:?}")),
        };
        match result {
            Ok(inv) => Ok(json!({
                "kind": inv.kind,
                "value": MatrixDocument::from_matrix(&inv.value),
                "certificate": inv.certificate,
            })),
            Err(e) => Err(format!("{e}")),
        }
    };
    match run() {
        Ok(payload) => CommandResult::ok(payload),
        Err(msg) => CommandResult::error(vec![msg]),
    }
}

fn parse_order_kind(kind: &str, w: Option<Matrix>) -> Result<OrderKind, String> {
    Ok(match kind {
        "minus" => OrderKind::Minus,
        "plus" => OrderKind::Plus,
        "sharp" => OrderKind::Sharp,
        "star" => OrderKind::Star,
        "leftstar" => OrderKind::LeftStar,
        "rightsharp" => OrderKind::RightSharp,
        "diamond" => OrderKind::Diamond,
        "core" => OrderKind::Core,
        "wcore" => OrderKind::WCore(w.ok_or("--w is required for the wcore order")?),
        other => return Err(format!("unknown order kind {other:?}")),
    })
}

pub fn order(
    kind: &str,
    a_path: &str,
    b_path: &str,
    w_path: Option<&str>,
    mode: &str,
) -> CommandResult {
    let run = || -> Result<Value, String> {
        let a = load_square(a_path)?;
        let b = load_square(b_path)?;
        if a.rows() != b.rows() || a.domain() != b.domain() {
            return Err("a and b must match in size and domain".into());
        }
        let w = match w_path {
            Some(p) => {
                let w = load_square(p)?;
                if w.rows() != a.rows() || w.domain() != a.domain() {
                    return Err("w must match a in size and domain".into());
                }
                Some(w)
            }
            None => None,
        };
        let mode = match mode {
            "strict" => OrderMode::Strict,
            "relaxed" => OrderMode::Relaxed,
            other => return Err(format!("unknown mode {other:?}; use strict or relaxed")),
        };
        let order_kind = parse_order_kind(kind, w.clone())?;
        let report =
            orders::order_holds_with_mode(order_kind, &a, &b, mode).map_err(|p| p.to_string())?;
        // for the core and w-core orders, attach the full characterization
        // vector when the hypothesis holds
        let characterizations = match kind {
            "wcore" => {
                let w = w.expect("checked above");
                orders::w_core_characterizations(&a, &b, &w)
                    .ok()
                    .map(|c| serde_json::to_value(c).expect("conditions serialize"))
            }
            "core" => {
                let id = Matrix::identity(a.domain(), a.rows());
                orders::w_core_characterizations(&a, &b, &id)
                    .ok()
                    .map(|c| serde_json::to_value(c).expect("conditions serialize"))
            }
            _ => None,
        };
        Ok(json!({
            "report": report,
            "characterizations": characterizations,
        }))
    };
    match run() {
        Ok(payload) => CommandResult::ok(payload),
        Err(msg) => CommandResult::error(vec![msg]),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn verify(
    all: bool,
    ids: &[String],
    list: bool,
    domain: &str,
    dim: usize,
    trials: usize,
    seed: u64,
    exhaustive: bool,
) -> CommandResult {
    if list {
        let catalog: Vec<Value> = PropertyId::ALL
            .iter()
            .map(|id| json!({ "id": id.as_str(), "checks": id.description() }))
            .collect();
        return CommandResult::ok(json!({ "catalog": catalog }));
    }
    let run = || -> Result<(Value, usize), String> {
        let selected: Vec<PropertyId> = if all {
            PropertyId::ALL.to_vec()
        } else {
            let mut out = Vec::new();
            for name in ids {
                let id =
                    PropertyId::lookup(name).ok_or_else(|| format!("unknown property {name:?}"))?;
                out.push(id);
            }
            if out.is_empty() {
                return Err("select properties with --all or --id".into());
            }
            out
        };
        let domain = parse_cli_domain(domain)?;
        let cfg = TrialConfig::new(domain, dim, trials, seed);
        let report = run_suite(&cfg, &selected, exhaustive).map_err(|e| e.to_string())?;
        let failures = report.failures();
        Ok((
            serde_json::to_value(&report).expect("report serializes"),
            failures,
        ))
    };
    match run() {
        Ok((payload, 0)) => CommandResult::ok(payload),
        Ok((payload, failures)) => CommandResult {
            status: Status::Error,
            payload,
            diagnostics: vec![format!("{failures} properties failed")],
            timestamp: None,
        },
        Err(msg) => CommandResult::error(vec![msg]),
    }
}

struct Assertions {
    entries: Vec<Value>,
    all_passed: bool,
}

impl Assertions {
    fn new() -> Self {
        Assertions {
            entries: Vec::new(),
            all_passed: true,
        }
    }

    fn check(&mut self, name: &str, pass: bool) {
        self.entries.push(json!({ "name": name, "pass": pass }));
        self.all_passed &= pass;
    }

    fn check_matrix(&mut self, name: &str, actual: &Matrix, expected: &Matrix) {
        let pass = actual == expected;
        self.entries.push(json!({
            "name": name,
            "pass": pass,
            "expected": MatrixDocument::from_matrix(expected),
            "actual": MatrixDocument::from_matrix(actual),
        }));
        self.all_passed &= pass;
    }
}

pub fn examples() -> CommandResult {
    let mut fixtures_out = Vec::new();
    let mut all_passed = true;

    // w-core order holds while the core order fails
    {
        let f = fixtures::w_core_without_core_order();
        let e = fixtures::w_core_without_core_expected();
        let mut a = Assertions::new();
        let x = geninv::w_core_inverse(&f.a, &f.w).unwrap().value;
        a.check_matrix("a_w^⊕", &x, &e.a_w_core);
        let core = geninv::core_inverse(&f.a).unwrap().value;
        a.check_matrix("a^⊕", &core, &e.a_core);
        a.check_matrix("a_w^⊕·a", &x.mul(&f.a), &e.xw_a);
        a.check_matrix("a_w^⊕·b", &x.mul(&f.b), &e.xw_a);
        a.check_matrix("a·w·a_w^⊕", &f.a.mul(&f.w).mul(&x), &e.awx);
        a.check_matrix("b·w·a_w^⊕", &f.b.mul(&f.w).mul(&x), &e.awx);
        a.check_matrix("a·a^⊕", &f.a.mul(&core), &e.a_core_proj);
        a.check_matrix("b·a^⊕", &f.b.mul(&core), &e.b_core_proj);
        let relaxed = orders::order_holds_with_mode(
            OrderKind::WCore(f.w.clone()),
            &f.a,
            &f.b,
            OrderMode::Relaxed,
        )
        .unwrap();
        a.check("w-core order holds (relaxed)", relaxed.holds);
        let core_report = orders::order_holds(OrderKind::Core, &f.a, &f.b).unwrap();
        a.check("core order fails", !core_report.holds);
        all_passed &= a.all_passed;
        fixtures_out.push(json!({
            "name": f.name,
            "assertions": a.entries,
        }));
    }

    // left-star and right-sharp hold while the w-core order fails
    {
        let f = fixtures::left_star_without_w_core();
        let e = fixtures::left_star_expected();
        let mut a = Assertions::new();
        let x = geninv::w_core_inverse(&f.a, &f.w).unwrap().value;
        a.check_matrix("a_w^⊕", &x, &e.a_w_core);
        a.check(
            "left-star order holds",
            orders::order_holds(OrderKind::LeftStar, &f.a, &f.b)
                .unwrap()
                .holds,
        );
        let wa = f.w.mul(&f.a);
        let wb = f.w.mul(&f.b);
        a.check_matrix(
            "(w·a)^#",
            &geninv::group_inverse(&wa).unwrap().value,
            &e.wa_sharp,
        );
        a.check(
            "right-sharp order holds on (w·a, w·b)",
            orders::order_holds(OrderKind::RightSharp, &wa, &wb)
                .unwrap()
                .holds,
        );
        a.check_matrix("a·w·a_w^⊕", &f.a.mul(&f.w).mul(&x), &e.awx);
        a.check_matrix("b·w·a_w^⊕", &f.b.mul(&f.w).mul(&x), &e.bwx);
        let relaxed = orders::order_holds_with_mode(
            OrderKind::WCore(f.w.clone()),
            &f.a,
            &f.b,
            OrderMode::Relaxed,
        )
        .unwrap();
        a.check("w-core order fails", !relaxed.holds);
        all_passed &= a.all_passed;
        fixtures_out.push(json!({
            "name": f.name,
            "assertions": a.entries,
        }));
    }

    // reverse-order law fails for a·b but holds for a·w·b
    {
        let f = fixtures::reverse_order_counterexample();
        let e = fixtures::reverse_order_expected();
        let mut a = Assertions::new();
        let xa = geninv::w_core_inverse(&f.a, &f.w).unwrap().value;
        let xb = geninv::w_core_inverse(&f.b, &f.w).unwrap().value;
        a.check(
            "w-core order holds (a = b)",
            orders::order_holds(OrderKind::WCore(f.w.clone()), &f.a, &f.b)
                .unwrap()
                .holds,
        );
        let factored = xb.mul(&xa);
        a.check_matrix("b_w^⊕·a_w^⊕", &factored, &e.factored);
        let ab = f.a.mul(&f.b);
        let ab_core = geninv::w_core_inverse(&ab, &f.w).unwrap().value;
        a.check_matrix("(a·b)_w^⊕", &ab_core, &e.product_w_core);
        a.check("(a·b)_w^⊕ ≠ b_w^⊕·a_w^⊕", ab_core != factored);
        let awb = f.a.mul(&f.w).mul(&f.b);
        a.check_matrix(
            "(a·w·b)_w^⊕",
            &geninv::w_core_inverse(&awb, &f.w).unwrap().value,
            &e.factored,
        );
        all_passed &= a.all_passed;
        fixtures_out.push(json!({
            "name": f.name,
            "assertions": a.entries,
        }));
    }

    let payload = json!({
        "fixtures": fixtures_out,
        "all_passed": all_passed,
    });
    if all_passed {
        CommandResult::ok(payload)
    } else {
        CommandResult {
            status: Status::Error,
            payload,
            diagnostics: vec!["worked-instance assertions failed".into()],
            timestamp: None,
        }
    }
}

pub fn enumerate(domain: &str, dim: usize) -> CommandResult {
    let run = || -> Result<Value, String> {
        let domain = parse_cli_domain(domain)?;
        let Some(p) = domain.modulus() else {
            return Err("enumeration requires a mod_p domain".into());
        };
        let matrices: Vec<MatrixDocument> = enumerate_ring(p, dim)
            .map_err(|e| e.to_string())?
            .map(|m| MatrixDocument::from_matrix(&m))
            .collect();
        Ok(json!({
            "domain": domain.to_string(),
            "dim": dim,
            "count": matrices.len(),
            "matrices": matrices,
        }))
    };
    match run() {
        Ok(payload) => CommandResult::ok(payload),
        Err(msg) => CommandResult::error(vec![msg]),
    }
}
