//! Irreducibility, explicit ψ-words between basis vectors, and composition
//! series of hook Specht modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinatorics::{
    binomial, residue_sequence, residue_sequence_hook, BipartitionShape, GenWord, LegSet, Params,
    ResidueSeq, Tableau,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homs::{
    chi_applies, check_chi_tau_generators, gamiso_check, gamma_applies, gamma_matrix, induced,
    predicted_subspace, Check, PredictedKind, Subquotient,
};
use crate::linalg::{map_image_kernel, spin_from, SparseMatrix, SparseVec, Subspace};
use crate::specht::{apply_word_signed, HookSpechtModule, SignTable, Signed};

/// Outcome of [`irr_word`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IrrWord {
    /// `word · v(A) = v(target)`.
    Word { word: GenWord, target: LegSet },
    /// No table entry covers this vector.
    NoWord(String),
}

fn up(i: usize, j: usize) -> GenWord {
    GenWord::up(i, j)
}

fn psi(l: usize) -> GenWord {
    GenWord::new(1, vec![l])
}

/// A word `x` with `x v(1,..,i-1,a_i,a_{i+1},..) = v(1,..,i,a_{i+1},..)`.
///
/// When `κ_2 ≡ κ_1 - 1` and `i = 1` there is no such word; instead the
/// target is `v(2,a_2,..)`, reachable when `a_1 > 2`.
/// Signs are the ones the ψ action actually produces.
pub fn irr_word(i: usize, legs: &LegSet, params: &Params) -> Result<IrrWord> {
    let m = legs.len();
    if i == 0 || i > m || (1..i).any(|j| legs.a(j) != j) || legs.a(i) <= i {
        return Err(Error::InvalidParams(format!(
            "{legs} does not start v(1..{}) with a_{i} > {i}",
            i.saturating_sub(1)
        )));
    }
    let n = params.n;
    let a = legs.a(i);
    let next = (i < m).then(|| legs.a(i + 1));
    // `Some(true)` if a_{i+1} = a_i + 1, `Some(false)` if the gap is larger or
    // i = m with a_m < n, `None` for i = m and a_m = n.
    let adjacent = match next {
        Some(b) => Some(b == a + 1),
        None if a < n => Some(false),
        None => None,
    };
    let res = |x: usize, off: i64| params.is_d_plus(x, off);
    let lowered = |b: usize| Ok(legs.replaced(a, b));
    let no_word = |why: &str| Ok(IrrWord::NoWord(why.to_string()));

    if chi_applies(params) && i == 1 {
        if a == 2 {
            return no_word("κ2 ≡ κ1-1 and a_1 = 2");
        }
        let target = lowered(2)?;
        let word = if res(a, 1) {
            match adjacent {
                Some(true) => psi(a).then(up(2, a - 1)),
                Some(false) => up(2, a).negated(),
                None => return no_word("m = 1 and a_1 = n"),
            }
        } else if res(a, 2) {
            up(2, a - 2).negated()
        } else {
            up(2, a - 1)
        };
        return Ok(IrrWord::Word { word, target });
    }

    let target = lowered(i)?;
    let word = if res(i, 1) {
        if res(a, 1) {
            match adjacent {
                Some(true) => psi(a).then(up(i + 1, a - 1)).negated(),
                Some(false) => up(i + 1, a),
                None => return no_word("i = m and a_m = n"),
            }
        } else if res(a, 2) {
            if a == i + 1 {
                let sq = psi(i + 1).then(psi(i + 1));
                match next {
                    Some(b) if b == i + 2 => sq,
                    Some(_) => sq.negated(),
                    None if a < n => sq.negated(),
                    None => return no_word("i = m and a_m = n"),
                }
            } else {
                up(i + 1, a - 2)
            }
        } else {
            up(i + 1, a - 1).negated()
        }
    } else if res(i, 2) {
        let head = GenWord::down(i, i - 1);
        if res(a, 1) {
            match adjacent {
                Some(true) => psi(a).then(head).then(up(i + 1, a - 1)),
                Some(false) => head.then(up(i + 1, a)).negated(),
                None => return no_word("i = m and a_m = n"),
            }
        } else if res(a, 2) {
            head.then(up(i + 1, a - 2)).negated()
        } else {
            head.then(up(i + 1, a - 1))
        }
    } else if res(a, 1) {
        match adjacent {
            Some(true) => psi(a).then(up(i, a - 1)),
            Some(false) => up(i, a).negated(),
            None => return no_word("i = m and a_m = n"),
        }
    } else if res(a, 2) {
        up(i, a - 2).negated()
    } else {
        up(i, a - 1)
    };
    Ok(IrrWord::Word { word, target })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SeparatingElement {
    Idempotent(ResidueSeq),
    Word(GenWord),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    S,
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Route {
    /// The residue sequences differ.
    Idempotent,
    /// One of the words singled out by the case analysis.
    CaseAnalysis,
    /// Found by trying every word of length at most two.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separator {
    pub element: SeparatingElement,
    /// Which of `x v_s`, `x v_t` is nonzero.
    pub survivor: Side,
    pub route: Route,
}

fn survivor(x: &Option<Signed>, y: &Option<Signed>) -> Option<Side> {
    match (x, y) {
        (Some(_), None) => Some(Side::S),
        (None, Some(_)) => Some(Side::T),
        _ => None,
    }
}

/// An element killing exactly one of `v_s`, `v_t`.
pub fn separator(s: &LegSet, t: &LegSet, params: &Params) -> Result<Separator> {
    if s == t {
        return Err(Error::InvalidParams("separator needs distinct vectors".into()));
    }
    let (is, it) = (residue_sequence_hook(params, s)?, residue_sequence_hook(params, t)?);
    if is != it {
        return Ok(Separator {
            element: SeparatingElement::Idempotent(it),
            survivor: Side::T,
            route: Route::Idempotent,
        });
    }
    let n = params.n;
    let signs = SignTable::default();
    let try_word = |w: &GenWord| -> Result<Option<Side>> {
        let x = apply_word_signed(w, s, params, &signs)?;
        let y = apply_word_signed(w, t, params, &signs)?;
        Ok(survivor(&x, &y))
    };

    let m = s.len();
    let r = (1..=m).rev().find(|&r| s.a(r) != t.a(r)).expect("distinct sets differ somewhere");
    let i = s.a(r).max(t.a(r));
    let j = s.a(m).max(t.a(m));
    let candidates = [
        vec![i],
        vec![i.saturating_sub(1)],
        vec![i, i],
        vec![i.saturating_sub(1), i],
        vec![j],
        vec![n.saturating_sub(1)],
    ];
    for letters in candidates {
        if letters.iter().any(|&l| l == 0 || l >= n) {
            continue;
        }
        let w = GenWord::new(1, letters);
        if let Some(side) = try_word(&w)? {
            return Ok(Separator { element: SeparatingElement::Word(w), survivor: side, route: Route::CaseAnalysis });
        }
    }
    let singles = (1..n).map(|l| vec![l]);
    let pairs = (1..n).flat_map(|k| (1..n).map(move |l| vec![k, l]));
    for letters in singles.chain(pairs) {
        let w = GenWord::new(1, letters);
        if let Some(side) = try_word(&w)? {
            return Ok(Separator { element: SeparatingElement::Word(w), survivor: side, route: Route::Search });
        }
    }
    Err(Error::NoSeparator { s: s.entries().to_vec(), t: t.entries().to_vec() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibilityReport {
    pub dim: usize,
    pub irreducible: bool,
    /// Coset index and spun dimension of a basis vector that fails to generate.
    pub witness: Option<(usize, usize)>,
    pub oracle_trials: usize,
    /// Dimension of a proper nonzero submodule found by random spinning.
    pub oracle_split: Option<usize>,
}

impl IrreducibilityReport {
    /// Basis spinning and the random oracle do not contradict each other.
    pub fn consistent(&self) -> bool {
        !(self.irreducible && self.oracle_split.is_some())
    }
}

fn random_coefficient<F: Field>(field: &F, rng: &mut ChaCha8Rng) -> F::Elem {
    let c = field.characteristic();
    if c == 0 {
        let k = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
        field.from_i64(k)
    } else {
        field.from_i64(rng.gen_range(1..c) as i64)
    }
}

/// Is `sq` an irreducible module for the algebra generated by `gens`?
///
/// Every coset basis vector must generate. The random oracle spins sparse
/// random combinations independently and records any proper submodule.
pub fn is_irreducible<F: Field>(
    field: &F,
    gens: &[SparseMatrix<F::Elem>],
    sq: &Subquotient<F::Elem>,
    seed: u64,
) -> Result<IrreducibilityReport> {
    let dim = sq.dim();
    let generates = |v: &SparseVec<F::Elem>| -> Result<Subspace<F::Elem>> {
        spin_from(field, sq.quot().clone(), std::slice::from_ref(v), gens)
    };
    let mut witness = None;
    for k in 0..dim {
        let spun = generates(sq.lift(k))?;
        if spun != *sq.sub() {
            witness = Some((k, spun.dim() - sq.quot().dim()));
            break;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = if dim == 0 { 0 } else { 2 * dim + 8 };
    let mut oracle_split = None;
    for _ in 0..trials {
        let support = rng.gen_range(1..=dim.min(3));
        let mut v = SparseVec::zero(sq.ambient_dim());
        for _ in 0..support {
            let k = rng.gen_range(0..dim);
            v = v.add_scaled(field, &random_coefficient(field, &mut rng), sq.lift(k));
        }
        if sq.quot().contains(field, &v) {
            continue;
        }
        let spun = generates(&v)?;
        if spun != *sq.sub() {
            oracle_split = Some(spun.dim() - sq.quot().dim());
            break;
        }
    }
    Ok(IrreducibilityReport {
        dim,
        irreducible: dim > 0 && witness.is_none(),
        witness,
        oracle_trials: trials,
        oracle_split,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseTag {
    I,
    II,
    III,
    IVEdgeLow,
    IVMiddle,
    IVEdgeHigh,
    /// `m = 0` or `m = n`: the module is one-dimensional.
    OneDim,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CaseTag::I => "I",
            CaseTag::II => "II",
            CaseTag::III => "III",
            CaseTag::IVEdgeLow => "IV-edge-low",
            CaseTag::IVMiddle => "IV-middle",
            CaseTag::IVEdgeHigh => "IV-edge-high",
            CaseTag::OneDim => "one-dim",
        };
        f.write_str(s)
    }
}

pub fn detect_case(params: &Params) -> CaseTag {
    let (n, m) = (params.n, params.m);
    if m == 0 || m == n {
        return CaseTag::OneDim;
    }
    match (chi_applies(params), gamma_applies(params)) {
        (false, false) => CaseTag::I,
        (false, true) => CaseTag::II,
        (true, false) => CaseTag::III,
        (true, true) if m == 1 => CaseTag::IVEdgeLow,
        (true, true) if m == n - 1 => CaseTag::IVEdgeHigh,
        (true, true) => CaseTag::IVMiddle,
    }
}

/// Factor dimensions predicted by counting leg sets, bottom to top.
pub fn predicted_factor_dims(params: &Params) -> Vec<usize> {
    let (n, m) = (params.n, params.m);
    match detect_case(params) {
        CaseTag::OneDim | CaseTag::I => vec![binomial(n, m)],
        CaseTag::II => vec![binomial(n - 1, m - 1), binomial(n - 1, m)],
        CaseTag::III => vec![binomial(n - 1, m), binomial(n - 1, m - 1)],
        CaseTag::IVEdgeLow | CaseTag::IVEdgeHigh => vec![1, n - 2, 1],
        CaseTag::IVMiddle => vec![
            binomial(n - 2, m - 1),
            binomial(n - 2, m),
            binomial(n - 2, m - 2),
            binomial(n - 2, m - 1),
        ],
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub label: String,
    pub dim: usize,
    pub irreducibility: IrreducibilityReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub params: Params,
    pub field: String,
    pub case: CaseTag,
    /// Labels of the chain members, bottom to top, excluding 0.
    pub chain: Vec<String>,
    pub chain_dims: Vec<usize>,
    pub factor_dims: Vec<usize>,
    pub closed: Vec<bool>,
    pub factors: Vec<FactorReport>,
    pub isomorphisms: Vec<Check>,
}

impl SeriesReport {
    pub fn strictly_ascending(&self) -> bool {
        self.chain_dims.windows(2).all(|w| w[0] < w[1]) && self.chain_dims.first().is_some_and(|&d| d > 0)
    }

    pub fn passed(&self) -> bool {
        self.strictly_ascending()
            && self.closed.iter().all(|&c| c)
            && self.factors.iter().all(|f| f.irreducibility.irreducible && f.irreducibility.consistent())
            && self.isomorphisms.iter().all(|c| c.passed)
            && self.factor_dims == predicted_factor_dims(&self.params)
    }
}

fn is_closed<F: Field>(field: &F, gens: &[SparseMatrix<F::Elem>], s: &Subspace<F::Elem>) -> bool {
    s.basis()
        .all(|b| gens.iter().all(|g| g.apply(field, b).is_ok_and(|w| s.contains(field, &w))))
}

/// `g` induces a bijection between the two subquotients.
fn bijection<F: Field>(
    field: &F,
    g: &SparseMatrix<F::Elem>,
    dom: &Subquotient<F::Elem>,
    cod: &Subquotient<F::Elem>,
) -> bool {
    match induced(field, g, dom, cod) {
        Ok(mat) => {
            let (im, ker) = map_image_kernel(field, &mat).expect("consistent sizes");
            dom.dim() == cod.dim() && ker.is_zero() && im.is_full()
        }
        Err(_) => false,
    }
}

/// A one-dimensional factor is the Specht module of `shape` when the latter
/// is one-dimensional with the same residue sequence.
fn one_dim_matches<F: Field>(
    module: &HookSpechtModule<F>,
    sq: &Subquotient<F::Elem>,
    shape: BipartitionShape,
) -> Result<bool> {
    if sq.dim() != 1 {
        return Ok(false);
    }
    let field = module.field();
    let t = Tableau::column_initial(shape)?;
    let i = residue_sequence(&t, &module.params().charge());
    let v = sq.lift(0);
    let fixed = module.idempotent(&i)?.apply(field, v)?;
    Ok(sq.coords(field, &fixed)? == sq.coords(field, v)?)
}

/// Builds the expected chain for the case of `params` and checks closure,
/// irreducibility of every factor, and the claimed factor isomorphisms.
pub fn composition_series<F: Field>(field: &F, params: &Params, seed: u64) -> Result<SeriesReport> {
    let (n, m) = (params.n, params.m);
    let case = detect_case(params);
    let module = HookSpechtModule::new(field.clone(), *params);
    let gens = module.generators();
    let dim = module.dim();
    let full = Subspace::full(field, dim);
    let predicted = |kind, k| predicted_subspace(field, kind, k, params);
    let mut isomorphisms = Vec::new();

    let chain: Vec<(String, Subspace<F::Elem>)> = match case {
        CaseTag::OneDim | CaseTag::I => vec![("S".into(), full.clone())],
        CaseTag::II => {
            let bottom = predicted(PredictedKind::ImGamma, m - 1)?;
            let top = Subquotient::new(field, full.clone(), bottom.clone())?;
            let image = Subquotient::submodule(predicted(PredictedKind::ImGamma, m)?);
            isomorphisms.push(Check::new(
                format!("S/im gamma_{} ~ im gamma_{m}", m - 1),
                bijection(field, &gamma_matrix(field, m, params)?, &top, &image),
                "",
            ));
            let g = gamiso_check(field, m, params)?;
            isomorphisms.push(Check::new(
                format!("gamiso_{m}"),
                g.passed(),
                format!("|M| = {}, |N| = {}, rank {}", g.source_size, g.target_size, g.rank),
            ));
            vec![(format!("im gamma_{}", m - 1), bottom), ("S".into(), full.clone())]
        }
        CaseTag::III => {
            let bottom = predicted(PredictedKind::ImChi, m)?;
            isomorphisms.extend(check_chi_tau_generators(field, m, params)?);
            vec![(format!("im chi_{m}"), bottom), ("S".into(), full.clone())]
        }
        CaseTag::IVEdgeLow => {
            let phi = predicted(PredictedKind::ImPhi, 1)?;
            let chi = predicted(PredictedKind::ImChi, 1)?;
            let gamma = gamma_matrix(field, 1, params)?;
            let phi2 = predicted_subspace(field, PredictedKind::ImPhi, 2, params)?;
            let phi2_module = Subquotient::submodule(phi2.clone());
            let ker2 = {
                let g2 = gamma_matrix(field, 2, params)?;
                map_image_kernel(field, &g2)?.1
            };
            isomorphisms.push(Check::new(
                "im phi_1 ~ S((n),0)",
                one_dim_matches(&module, &Subquotient::submodule(phi.clone()), BipartitionShape::ArmHook { n, m: 0 })?,
                "",
            ));
            isomorphisms.push(Check::new(
                "im chi_1/im phi_1 ~ im phi_2",
                bijection(field, &gamma, &Subquotient::new(field, chi.clone(), phi.clone())?, &phi2_module),
                "",
            ));
            isomorphisms.push(Check::new(
                "S/im chi_1 ~ ker gamma_2/im phi_2",
                bijection(
                    field,
                    &gamma,
                    &Subquotient::new(field, full.clone(), chi.clone())?,
                    &Subquotient::new(field, ker2, phi2)?,
                ),
                "",
            ));
            vec![("im phi_1".into(), phi), ("im chi_1".into(), chi), ("S".into(), full.clone())]
        }
        CaseTag::IVMiddle => {
            let phi = predicted(PredictedKind::ImPhi, m)?;
            let chi = predicted(PredictedKind::ImChi, m)?;
            let gamma = gamma_matrix(field, m, params)?;
            let ker = map_image_kernel(field, &gamma)?.1;
            let sum = ker.sum(field, &chi)?;
            let phi_next = predicted_subspace(field, PredictedKind::ImPhi, m + 1, params)?;
            let ker_next = map_image_kernel(field, &gamma_matrix(field, m + 1, params)?)?.1;
            let id = SparseMatrix::identity(field, dim);
            isomorphisms.push(Check::new(
                format!("im chi_{m}/im phi_{m} ~ im phi_{}", m + 1),
                bijection(
                    field,
                    &gamma,
                    &Subquotient::new(field, chi.clone(), phi.clone())?,
                    &Subquotient::submodule(phi_next.clone()),
                ),
                "",
            ));
            isomorphisms.push(Check::new(
                format!("(ker gamma_{m} + im chi_{m})/im chi_{m} ~ ker gamma_{m}/im phi_{m}"),
                bijection(
                    field,
                    &id,
                    &Subquotient::new(field, ker.clone(), phi.clone())?,
                    &Subquotient::new(field, sum.clone(), chi.clone())?,
                ),
                "",
            ));
            isomorphisms.push(Check::new(
                format!("S/(ker gamma_{m} + im chi_{m}) ~ ker gamma_{}/im phi_{}", m + 1, m + 1),
                bijection(
                    field,
                    &gamma,
                    &Subquotient::new(field, full.clone(), sum.clone())?,
                    &Subquotient::new(field, ker_next, phi_next)?,
                ),
                "",
            ));
            vec![
                (format!("im phi_{m}"), phi),
                (format!("im chi_{m}"), chi),
                (format!("ker gamma_{m} + im chi_{m}"), sum),
                ("S".into(), full.clone()),
            ]
        }
        CaseTag::IVEdgeHigh => {
            let phi = predicted(PredictedKind::ImPhi, n - 1)?;
            let img = predicted(PredictedKind::ImGamma, n - 2)?;
            let (im_real, _) = map_image_kernel(field, &gamma_matrix(field, n - 2, params)?)?;
            isomorphisms.push(Check::new(format!("im gamma_{} realised", n - 2), im_real == img, ""));
            isomorphisms.push(Check::new(
                "S/im gamma ~ S(0,(1^n))",
                one_dim_matches(
                    &module,
                    &Subquotient::new(field, full.clone(), img.clone())?,
                    BipartitionShape::LegHook { n, m: n - 1 },
                )?,
                "",
            ));
            vec![
                (format!("im phi_{}", n - 1), phi),
                (format!("im gamma_{}", n - 2), img),
                ("S".into(), full.clone()),
            ]
        }
    };

    let closed = chain.iter().map(|(_, s)| is_closed(field, &gens, s)).collect();
    let mut factors = Vec::new();
    let mut below = Subspace::zero(dim);
    for (k, (label, s)) in chain.iter().enumerate() {
        let sq = Subquotient::new(field, s.clone(), below.clone())?;
        let irreducibility = is_irreducible(field, &gens, &sq, seed.wrapping_add(k as u64))?;
        factors.push(FactorReport { label: label.clone(), dim: sq.dim(), irreducibility });
        below = s.clone();
    }
    Ok(SeriesReport {
        params: *params,
        field: field.label(),
        case,
        chain_dims: chain.iter().map(|(_, s)| s.dim()).collect(),
        chain: chain.into_iter().map(|(l, _)| l).collect(),
        factor_dims: factors.iter().map(|f| f.dim).collect(),
        closed,
        factors,
        isomorphisms,
    })
}
