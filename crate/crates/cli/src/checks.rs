//! Each function turns one library computation into report records.

use hook_specht::combinatorics::{residue_sequence, BipartitionShape, Charge, Permutation, Tableau};
use hook_specht::homs::{
    chi_applies, check_chi_tau_generators, check_compositions, check_exactness, check_map, gamiso_check,
    gamma_applies, realized_maps, Check,
};
use hook_specht::klr::{psi_max_row_col_nnz, verify_klr_relations};
use hook_specht::specht::Generator;
use hook_specht::structure::composition_series;
use hook_specht::{Field, HookSpechtModule, Params, ResidueSeq};
use serde_json::{json, Value};

use crate::cache::fingerprint;
use crate::report::{timed, ParamsEcho, ReportRecord, Status};

fn echo<F: Field>(field: &F, p: &Params) -> ParamsEcho {
    ParamsEcho::new(p, &field.label(), true)
}

fn echo_all_m<F: Field>(field: &F, p: &Params) -> ParamsEcho {
    ParamsEcho::new(p, &field.label(), false)
}

fn error_record(params: ParamsEcho, check: &str, err: hook_specht::Error) -> ReportRecord {
    ReportRecord { params, check: check.into(), status: Status::Fail, details: json!({ "error": err.to_string() }), timing_ms: 0.0 }
}

fn from_checks(params: &ParamsEcho, prefix: &str, checks: Vec<Check>) -> Vec<ReportRecord> {
    checks
        .into_iter()
        .map(|c| ReportRecord {
            params: params.clone(),
            check: format!("{prefix}: {}", c.id),
            status: Status::from_bool(c.passed),
            details: json!({ "detail": c.detail }),
            timing_ms: 0.0,
        })
        .collect()
}

pub fn basis<F: Field>(field: &F, p: &Params) -> Vec<ReportRecord> {
    let module = HookSpechtModule::new(field.clone(), *p);
    (0..module.dim())
        .map(|k| ReportRecord {
            params: echo(field, p),
            check: "basis".into(),
            status: Status::Pass,
            details: json!({
                "index": k,
                "legs": module.leg_set(k).entries(),
                "residues": module.residue_seq(k).0,
            }),
            timing_ms: 0.0,
        })
        .collect()
}

pub fn matrix<F: Field>(field: &F, p: &Params, generator: &Generator) -> ReportRecord {
    let module = HookSpechtModule::new(field.clone(), *p);
    timed(echo(field, p), format!("matrix {generator}"), || match module.generator_matrix(generator) {
        Ok(m) => {
            let entries: Vec<Value> = m
                .columns()
                .iter()
                .enumerate()
                .flat_map(|(c, col)| col.entries().iter().map(move |(r, x)| (*r, c, x)))
                .map(|(r, c, x)| json!([r, c, field.format(x)]))
                .collect();
            let basis: Vec<&[usize]> = module.basis().iter().map(|l| l.entries()).collect();
            let details = json!({
                "generator": generator.to_string(),
                "rows": m.rows(),
                "cols": m.cols(),
                "nnz": m.nnz(),
                "basis": basis,
                "entries": entries,
                "fingerprint": fingerprint(field, &m),
            });
            (Status::Pass, details)
        }
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    })
}

pub fn klr<F: Field>(field: &F, p: &Params) -> Vec<ReportRecord> {
    let module = HookSpechtModule::new(field.clone(), *p);
    let relations = timed(echo(field, p), "klr-relations", || {
        let r = verify_klr_relations(&module);
        (Status::from_bool(r.passed()), json!({ "instances": r.instances, "failures": r.failures }))
    });
    let sparsity = timed(echo(field, p), "psi-sparsity", || {
        let worst = psi_max_row_col_nnz(&module);
        (Status::from_bool(worst <= 1), json!({ "max_nonzeros_per_row_or_column": worst }))
    });
    vec![relations, sparsity]
}

/// Homomorphism checks for all leg lengths at once; `p.m` is ignored.
pub fn homs<F: Field>(field: &F, p: &Params) -> Vec<ReportRecord> {
    let params = echo_all_m(field, p);
    if !gamma_applies(p) && !chi_applies(p) {
        return vec![ReportRecord {
            params,
            check: "homs".into(),
            status: Status::Skipped,
            details: json!({ "reason": "neither n ≡ κ2-κ1+1 nor κ2 ≡ κ1-1 holds" }),
            timing_ms: 0.0,
        }];
    }
    let maps = match realized_maps(field, p) {
        Ok(m) => m,
        Err(e) => return vec![error_record(params, "homs", e)],
    };
    let mut out: Vec<ReportRecord> = maps
        .iter()
        .map(|map| {
            timed(params.clone(), format!("hom-property {}", map.name), || match check_map(field, map) {
                Ok(r) => (
                    Status::from_bool(r.passed()),
                    json!({ "generators_checked": r.generators_checked, "failure": r.failure }),
                ),
                Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
            })
        })
        .collect();
    match check_exactness(field, p) {
        Ok(c) => out.extend(from_checks(&params, "exactness", c)),
        Err(e) => out.push(error_record(params.clone(), "exactness", e)),
    }
    if gamma_applies(p) {
        for m in 0..p.n {
            out.push(timed(params.clone(), format!("gamiso {m}"), || match gamiso_check(field, m, p) {
                Ok(r) => (Status::from_bool(r.passed()), json!(r)),
                Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
            }));
        }
    }
    if gamma_applies(p) && chi_applies(p) {
        match check_compositions(field, p) {
            Ok(c) => out.extend(from_checks(&params, "compositions", c)),
            Err(e) => out.push(error_record(params, "compositions", e)),
        }
    }
    out
}

pub fn series<F: Field>(field: &F, p: &Params, seed: u64) -> ReportRecord {
    timed(echo(field, p), "comp-series", || match composition_series(field, p, seed) {
        Ok(r) => (Status::from_bool(r.passed()), json!(r)),
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    })
}

/// Everything `sweep` runs for one grid point. Homomorphism checks are
/// attached to the `m = 0` point since they cover every leg length.
pub fn sweep_point<F: Field>(field: &F, p: &Params, seed: u64) -> Vec<ReportRecord> {
    let mut out = klr(field, p);
    out.push(series(field, p, seed));
    if p.m == 0 {
        out.extend(homs(field, p));
    }
    out
}

pub const EXAMPLES: [&str; 4] = ["residues-5-3", "case2-n5", "case3-n5", "case4-n6"];

fn expect_dims(rec: &mut ReportRecord, dims: &[usize]) {
    let got = rec.details.get("factor_dims").cloned().unwrap_or(Value::Null);
    if got != json!(dims) {
        rec.status = Status::Fail;
    }
    rec.details["expected_factor_dims"] = json!(dims);
}

pub fn example<F: Field>(field: &F, name: &str, seed: u64) -> Option<Vec<ReportRecord>> {
    let params = |e, k: (i64, i64), n, m| Params::new(e, k, n, m).expect("fixed parameters are valid");
    let out = match name {
        "residues-5-3" => {
            let charge = Charge::new(3, (0, 1)).expect("valid charge");
            let shape = BipartitionShape::General(vec![5, 3], vec![2, 2, 1]);
            let t = Tableau::column_initial(shape).expect("valid shape");
            let w = Permutation::from_cycles(13, &[vec![4, 5, 6], vec![11, 13, 12]]).expect("valid cycles");
            let s = t.permuted(&w).expect("same size");
            let echo = ParamsEcho { e: 3, kappa: [0, 1], n: 13, m: None, field: field.label() };
            let cases = [
                ("residues t^lambda", residue_sequence(&t, &charge), vec![1, 0, 2, 2, 1, 0, 2, 1, 0, 2, 1, 0, 1]),
                ("residues s", residue_sequence(&s, &charge), vec![1, 0, 2, 0, 2, 1, 2, 1, 0, 2, 0, 1, 1]),
            ];
            cases
                .into_iter()
                .map(|(id, got, want)| ReportRecord {
                    params: echo.clone(),
                    check: id.into(),
                    status: Status::from_bool(got == ResidueSeq(want.clone())),
                    details: json!({ "shape": "((5,3),(2,2,1))", "got": got.0, "expected": want }),
                    timing_ms: 0.0,
                })
                .collect()
        }
        "case2-n5" => {
            let p = params(3, (0, 1), 5, 3);
            let mut rec = series(field, &p, seed);
            expect_dims(&mut rec, &[6, 4]);
            let mut out = vec![rec];
            out.extend(homs(field, &p));
            out
        }
        "case3-n5" => {
            let p = params(3, (0, 2), 5, 2);
            let mut rec = series(field, &p, seed);
            expect_dims(&mut rec, &[6, 4]);
            let mut out = vec![rec];
            match check_chi_tau_generators(field, 2, &p) {
                Ok(c) => out.extend(from_checks(&echo(field, &p), "presentation", c)),
                Err(e) => out.push(error_record(echo(field, &p), "presentation", e)),
            }
            out
        }
        "case4-n6" => {
            let p = params(3, (0, 2), 6, 3);
            let mut rec = series(field, &p, seed);
            expect_dims(&mut rec, &[6, 4, 4, 6]);
            let mut out = vec![rec];
            for (m, dims) in [(1, [1, 4, 1]), (5, [1, 4, 1])] {
                let q = p.with_m(m).expect("m within range");
                let mut r = series(field, &q, seed);
                expect_dims(&mut r, &dims);
                out.push(r);
            }
            out.extend(homs(field, &p));
            out
        }
        _ => return None,
    };
    Some(out)
}
