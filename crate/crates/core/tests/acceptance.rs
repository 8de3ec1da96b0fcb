//! One line per acceptance criterion. Runs without the libtest harness so
//! the output stays readable; exits nonzero if any criterion fails.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;

use hook_specht::combinatorics::{residue_sequence, BipartitionShape, Charge, Permutation, Tableau};
use hook_specht::homs::{check_compositions, check_exactness, check_map, gamiso_check, realized_maps};
use hook_specht::klr::{psi_max_row_col_nnz, verify_klr_relations};
use hook_specht::linalg::{spin, SparseVec};
use hook_specht::structure::{
    composition_series, detect_case, irr_word, separator, CaseTag, IrrWord, SeparatingElement, Side,
};
use hook_specht::{Field, HookSpechtModule, Params, PrimeField, Rationals, ResidueSeq, SignTable};

fn grid(es: &[u32], ns: std::ops::RangeInclusive<usize>) -> Vec<Params> {
    let mut out = Vec::new();
    for &e in es {
        for k1 in 0..e as i64 {
            for k2 in 0..e as i64 {
                for n in ns.clone() {
                    for m in 0..=n {
                        out.push(Params::new(e, (k1, k2), n, m).unwrap());
                    }
                }
            }
        }
    }
    out
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn ok(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn klr_grid<F: Field>(field: F, params: &[Params]) -> Result<usize, String> {
    let mut instances = 0;
    for p in params {
        let r = verify_klr_relations(&HookSpechtModule::new(field.clone(), *p));
        if let Some(f) = r.first_failure() {
            return Err(format!("{} {p}: {} at {:?} on {}", r.field, f.relation, f.indices, f.basis));
        }
        instances += r.instances;
    }
    Ok(instances)
}

fn criterion_1() -> Outcome {
    let params = grid(&[3, 4, 5], 2..=8);
    let results = std::thread::scope(|s| {
        let p = &params;
        let handles = [
            s.spawn(move || klr_grid(Rationals, p)),
            s.spawn(move || klr_grid(PrimeField::new(2).unwrap(), p)),
            s.spawn(move || klr_grid(PrimeField::new(5).unwrap(), p)),
        ];
        handles.map(|h| h.join().unwrap())
    });
    match results.iter().find_map(|r| r.as_ref().err()) {
        Some(e) => ok(false, e.clone()),
        None => {
            let total: usize = results.iter().map(|r| *r.as_ref().unwrap()).sum();
            ok(true, format!("{} modules x (Q, F_2, F_5), {total} relation instances", params.len()))
        }
    }
}

fn criterion_2() -> Outcome {
    let params = grid(&[3, 4, 5], 2..=8);
    let worst = params
        .iter()
        .map(|p| psi_max_row_col_nnz(&HookSpechtModule::new(Rationals, *p)))
        .max()
        .unwrap();
    ok(worst <= 1, format!("max nonzeros per psi row/column = {worst} over {} modules", params.len()))
}

fn criterion_3() -> Outcome {
    let q = Rationals;
    let mut pool: Vec<Params> =
        grid(&[3, 4, 5], 2..=8).into_iter().filter(|p| detect_case(p) == CaseTag::I).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    pool.shuffle(&mut rng);
    pool.truncate(40);
    for p in &pool {
        let module = HookSpechtModule::new(q, *p);
        let gens = module.generators();
        for k in 0..module.dim() {
            let s = spin(&q, &[SparseVec::unit(&q, module.dim(), k)], &gens).unwrap();
            if !s.is_full() {
                return ok(false, format!("{p}: v{} spins to dim {}", module.leg_set(k), s.dim()));
            }
        }
    }
    ok(pool.len() >= 20, format!("{} sampled Case I modules, every basis vector generates", pool.len()))
}

fn criterion_4() -> Outcome {
    let q = Rationals;
    let p = Params::new(3, (0, 1), 5, 3).unwrap();
    let r = composition_series(&q, &p, 4).unwrap();
    let exact = check_exactness(&q, &p).unwrap();
    let gamiso = (0..p.n).all(|m| gamiso_check(&q, m, &p).unwrap().passed());
    let passed = r.passed() && r.factor_dims == [6, 4] && exact.iter().all(|c| c.passed) && gamiso;
    ok(
        passed,
        format!(
            "{} factor dims {:?}, {} exactness checks, gamiso m=0..{}",
            r.chain.join(" < "),
            r.factor_dims,
            exact.len(),
            p.n - 1
        ),
    )
}

fn criterion_5() -> Outcome {
    let p = Params::new(3, (0, 2), 5, 2).unwrap();
    let r = composition_series(&Rationals, &p, 5).unwrap();
    let irreducible = r.factors.iter().all(|f| f.irreducibility.irreducible);
    ok(
        r.passed() && r.factor_dims == [6, 4] && irreducible,
        format!("{} factor dims {:?}, both irreducible: {irreducible}", r.chain.join(" < "), r.factor_dims),
    )
}

fn criterion_6() -> Outcome {
    let p = Params::new(3, (0, 2), 6, 3).unwrap();
    let r = composition_series(&Rationals, &p, 6).unwrap();
    let mut passed = r.passed() && r.factor_dims == [6, 4, 4, 6];
    let mut edges = Vec::new();
    for m in [1, 5] {
        let e = composition_series(&Rationals, &p.with_m(m).unwrap(), 6).unwrap();
        passed &= e.passed() && e.factor_dims == [1, 4, 1];
        edges.push(format!("m={m} {:?}", e.factor_dims));
    }
    ok(passed, format!("m=3 factor dims {:?}; edges {}", r.factor_dims, edges.join(", ")))
}

fn criterion_7() -> Outcome {
    let f = PrimeField::new(101).unwrap();
    let mut maps = 0;
    let mut checks = 0;
    for p in [Params::new(3, (0, 2), 6, 0).unwrap(), Params::new(4, (0, 3), 8, 0).unwrap()] {
        for map in realized_maps(&f, &p).unwrap() {
            let r = check_map(&f, &map).unwrap();
            if !r.passed() {
                return ok(false, format!("{p}: {} fails at {:?}", r.map, r.failure));
            }
            maps += 1;
        }
        let mut all = check_compositions(&Rationals, &p).unwrap();
        all.extend(check_exactness(&Rationals, &p).unwrap());
        if let Some(c) = all.iter().find(|c| !c.passed) {
            return ok(false, format!("{p}: {} ({})", c.id, c.detail));
        }
        checks += all.len();
    }
    ok(true, format!("{maps} realized maps are homomorphisms, {checks} composition/diagram/exactness checks"))
}

fn criterion_8() -> Outcome {
    let q = Rationals;
    let (mut words, mut pairs) = (0, 0);
    for p in grid(&[3, 4, 5], 1..=8) {
        let module = HookSpechtModule::new(q, p);
        for legs in module.basis() {
            for i in 1..=p.m {
                if (1..i).any(|j| legs.a(j) != j) || legs.a(i) <= i {
                    continue;
                }
                if let IrrWord::Word { word, target } = irr_word(i, legs, &p).unwrap() {
                    let got = module.apply_word(&word, &module.vector(legs).unwrap()).unwrap();
                    if got != module.vector(&target).unwrap() {
                        return ok(false, format!("{p}: irr_word({i}, {legs}) misses {target}"));
                    }
                    words += 1;
                }
            }
        }
        if p.n > 7 {
            continue;
        }
        let basis = module.basis();
        for (x, s) in basis.iter().enumerate() {
            for t in &basis[x + 1..] {
                let Ok(sep) = separator(s, t, &p) else {
                    return ok(false, format!("{p}: no separator for {s}, {t}"));
                };
                let (vs, vt) = (module.vector(s).unwrap(), module.vector(t).unwrap());
                let act = |v| match &sep.element {
                    SeparatingElement::Idempotent(i) => module.idempotent(i).unwrap().apply(&q, v).unwrap(),
                    SeparatingElement::Word(w) => module.apply_word(w, v).unwrap(),
                };
                let (xs, xt) = (act(&vs), act(&vt));
                let separates = match sep.survivor {
                    Side::S => !xs.is_zero() && xt.is_zero(),
                    Side::T => xs.is_zero() && !xt.is_zero(),
                };
                if !separates {
                    return ok(false, format!("{p}: separator for {s}, {t} does not separate"));
                }
                pairs += 1;
            }
        }
    }
    ok(true, format!("{words} irr_word instances land on target; {pairs} basis pairs separated"))
}

fn criterion_9() -> Outcome {
    let charge = Charge::new(3, (0, 1)).unwrap();
    let shape = BipartitionShape::General(vec![5, 3], vec![2, 2, 1]);
    let t = Tableau::column_initial(shape).unwrap();
    let w = Permutation::from_cycles(13, &[vec![4, 5, 6], vec![11, 13, 12]]).unwrap();
    let s = t.permuted(&w).unwrap();
    let it = residue_sequence(&t, &charge);
    let is = residue_sequence(&s, &charge);
    let passed = it == ResidueSeq(vec![1, 0, 2, 2, 1, 0, 2, 1, 0, 2, 1, 0, 1])
        && is == ResidueSeq(vec![1, 0, 2, 0, 2, 1, 2, 1, 0, 2, 0, 1, 1]);
    ok(passed, format!("i^t = {it}, i^s = {is}"))
}

fn criterion_10() -> Outcome {
    let params = grid(&[3, 4], 2..=6);
    let mut located = Vec::new();
    for k in 0..8 {
        let signs = SignTable::default().with_flip(k);
        let hit = params.iter().find_map(|p| {
            let r = verify_klr_relations(&HookSpechtModule::with_signs(Rationals, *p, signs));
            r.first_failure().map(|f| format!("flip {k}: {} at {p} on {}", f.relation, f.basis))
        });
        match hit {
            Some(h) => located.push(h),
            None => return ok(false, format!("flip {k} is not detected")),
        }
    }
    ok(located.len() >= 3, format!("{} of 8 mutations caught; {}", located.len(), located[0]))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("KLR presentation oracle", criterion_1),
        ("psi sparsity", criterion_2),
        ("Case I irreducibility", criterion_3),
        ("Case II reproduction", criterion_4),
        ("Case III reproduction", criterion_5),
        ("Case IV reproduction", criterion_6),
        ("homomorphism suite", criterion_7),
        ("irr_word and separators", criterion_8),
        ("residue regression", criterion_9),
        ("mutation sensitivity", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let tag = if out.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2} {name}: {} ({:.1}s)", k + 1, out.detail, start.elapsed().as_secs_f64());
        failed += usize::from(!out.passed);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
