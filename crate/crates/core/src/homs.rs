//! Homomorphisms between hook Specht modules and the modules realised as
//! their submodules and quotients.
//!
//! `γ_m` is a map between two hook modules. The arm-hook module
//! `S_((n-m,1^m),∅)` is realised as the image of `χ_m` (the span of `v(A)` with
//! `1 ∉ A`) and the leg-hook module `S_(∅,(n-m+1,1^(m-1)))` as its cokernel. The
//! maps `α`, `β` and `φ` are then the maps these realisations inherit from `γ`.

use serde::Serialize;

use crate::combinatorics::{
    enumerate_standard_hook, residue_sequence, BipartitionShape, GenWord, LegSet, Params,
    Tableau,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{map_image_kernel, rref_span, spin, SparseMatrix, SparseVec, Subspace};
use crate::specht::{Generator, HookSpechtModule};

/// `sub / quot` inside a module of dimension `ambient`.
///
/// Coset coordinates are read off at the pivots of `sub` that are not pivots
/// of `quot`. Pivots of `quot` are always pivots of `sub`, so the echelon
/// row of `sub` at such a free pivot has coordinates equal to a unit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient<E> {
    sub: Subspace<E>,
    quot: Subspace<E>,
    free: Vec<usize>,
}

impl<E: Clone + PartialEq> Subquotient<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, sub: Subspace<E>, quot: Subspace<E>) -> Result<Self> {
        if !quot.is_subspace_of(field, &sub) {
            return Err(Error::OutsideSubspace("the submodule being quotiented".into()));
        }
        let qp = quot.pivots();
        let free = sub.pivots().into_iter().filter(|p| qp.binary_search(p).is_err()).collect();
        Ok(Subquotient { sub, quot, free })
    }

    pub fn whole<F: Field<Elem = E>>(field: &F, dim: usize) -> Self {
        Subquotient {
            sub: Subspace::full(field, dim),
            quot: Subspace::zero(dim),
            free: (0..dim).collect(),
        }
    }

    pub fn submodule(sub: Subspace<E>) -> Self {
        let free = sub.pivots();
        let quot = Subspace::zero(sub.ambient_dim());
        Subquotient { sub, quot, free }
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn sub(&self) -> &Subspace<E> {
        &self.sub
    }

    pub fn quot(&self) -> &Subspace<E> {
        &self.quot
    }

    /// Ambient basis indices labelling the coset basis.
    pub fn free_pivots(&self) -> &[usize] {
        &self.free
    }

    /// Coordinates of the coset `v + quot`.
    pub fn coords<F: Field<Elem = E>>(&self, field: &F, v: &SparseVec<E>) -> Result<SparseVec<E>> {
        if !self.sub.contains(field, v) {
            return Err(Error::OutsideSubspace("the subquotient".into()));
        }
        let r = self.quot.reduce(field, v);
        let entries = self
            .free
            .iter()
            .enumerate()
            .filter_map(|(k, p)| r.get(*p).map(|c| (k, c.clone())))
            .collect();
        SparseVec::from_entries(field, self.dim(), entries)
    }

    /// A representative of the `k`-th coset basis vector.
    pub fn lift(&self, k: usize) -> &SparseVec<E> {
        self.sub
            .basis()
            .find(|row| row.leading().map(|(p, _)| *p) == Some(self.free[k]))
            .expect("free pivots are pivots of sub")
    }

    /// True when every generator preserves both `sub` and `quot`.
    pub fn is_invariant<F: Field<Elem = E>>(&self, field: &F, gens: &[SparseMatrix<E>]) -> bool {
        let keeps = |s: &Subspace<E>| {
            gens.iter().all(|g| {
                s.basis().all(|b| g.apply(field, b).is_ok_and(|w| s.contains(field, &w)))
            })
        };
        keeps(&self.sub) && keeps(&self.quot)
    }

    /// The action of `g` in coset coordinates.
    pub fn induced_action<F: Field<Elem = E>>(&self, field: &F, g: &SparseMatrix<E>) -> Result<SparseMatrix<E>> {
        induced(field, g, self, self)
    }
}

/// The map `dom → cod` induced by an ambient matrix `g`, in coset coordinates.
/// Fails if `g` does not carry `dom` into `cod` or `dom.quot` into `cod.quot`.
pub fn induced<F: Field>(
    field: &F,
    g: &SparseMatrix<F::Elem>,
    dom: &Subquotient<F::Elem>,
    cod: &Subquotient<F::Elem>,
) -> Result<SparseMatrix<F::Elem>> {
    if g.cols() != dom.ambient_dim() || g.rows() != cod.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: dom.ambient_dim(), found: g.cols() });
    }
    for q in dom.quot().basis() {
        if !cod.quot().contains(field, &g.apply(field, q)?) {
            return Err(Error::OutsideSubspace("the target quotient".into()));
        }
    }
    let columns = (0..dom.dim())
        .map(|k| cod.coords(field, &g.apply(field, dom.lift(k))?))
        .collect::<Result<Vec<_>>>()?;
    SparseMatrix::from_columns(cod.dim(), columns)
}

/// A subquotient of the hook module with parameters `params`.
#[derive(Clone, Debug)]
pub struct Space<E> {
    pub label: String,
    pub params: Params,
    pub sq: Subquotient<E>,
}

#[derive(Clone, Debug)]
pub struct LinearMap<E> {
    pub name: String,
    pub domain: Space<E>,
    pub codomain: Space<E>,
    pub matrix: SparseMatrix<E>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PredictedKind {
    ImGamma,
    KerGamma,
    ImChi,
    KerTau,
    ImPhi,
}

fn require(cond: bool, what: &str, params: &Params) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Congruence(format!("{what} fails for {params}")))
    }
}

/// `n ≡ κ_2 - κ_1 + 1 (mod e)`: the maps `γ_m` exist.
pub fn gamma_applies(params: &Params) -> bool {
    params.is_d_plus(params.n, 1)
}

/// `κ_2 ≡ κ_1 - 1 (mod e)`: the maps `χ_m` and `τ_m` exist.
pub fn chi_applies(params: &Params) -> bool {
    params.d() + 1 == params.e
}

fn coordinate_subspace<F: Field>(
    field: &F,
    params: &Params,
    keep: impl Fn(&LegSet) -> bool,
) -> Subspace<F::Elem> {
    let basis = enumerate_standard_hook(params);
    let axes = basis.iter().enumerate().filter(|(_, a)| keep(a)).map(|(k, _)| k);
    Subspace::coordinate(field, basis.len(), axes)
}

/// The subspace the theory predicts for an image or kernel, as a span of
/// basis vectors. `ImGamma` lives in the module with leg length `m + 1`;
/// the others in leg length `m`.
pub fn predicted_subspace<F: Field>(
    field: &F,
    kind: PredictedKind,
    m: usize,
    params: &Params,
) -> Result<Subspace<F::Elem>> {
    let n = params.n;
    match kind {
        PredictedKind::ImGamma | PredictedKind::KerGamma => {
            require(gamma_applies(params), "n ≡ κ2-κ1+1", params)?;
            if m >= n {
                return Err(Error::InvalidParams(format!("γ_{m} needs m < n = {n}")));
            }
        }
        PredictedKind::ImChi | PredictedKind::KerTau => {
            require(chi_applies(params), "κ2 ≡ κ1-1", params)?;
        }
        PredictedKind::ImPhi => {
            require(chi_applies(params) && params.n.is_multiple_of(params.e as usize), "κ2 ≡ κ1-1 and n ≡ 0", params)?;
            if m == 0 || m >= n {
                return Err(Error::InvalidParams(format!("φ_{m} needs 1 <= m < n = {n}")));
            }
        }
    }
    Ok(match kind {
        PredictedKind::ImGamma => coordinate_subspace(field, &params.with_m(m + 1)?, |a| a.contains(n)),
        PredictedKind::KerGamma => coordinate_subspace(field, &params.with_m(m)?, |a| a.contains(n)),
        PredictedKind::ImChi | PredictedKind::KerTau => {
            coordinate_subspace(field, &params.with_m(m)?, |a| !a.contains(1))
        }
        PredictedKind::ImPhi if m + 1 < n => {
            coordinate_subspace(field, &params.with_m(m)?, |a| !a.contains(1) && a.contains(n))
        }
        PredictedKind::ImPhi => coordinate_subspace(field, &params.with_m(m)?, |a| !a.contains(1)),
    })
}

/// Matrix of `γ_m`: `v(A) ↦ v(A ∪ {n})` when `n ∉ A`, else 0.
pub fn gamma_matrix<F: Field>(field: &F, m: usize, params: &Params) -> Result<SparseMatrix<F::Elem>> {
    require(gamma_applies(params), "n ≡ κ2-κ1+1", params)?;
    let n = params.n;
    if m >= n {
        return Err(Error::InvalidParams(format!("γ_{m} needs m < n = {n}")));
    }
    let (dom, cod) = (params.with_m(m)?, params.with_m(m + 1)?);
    let target = enumerate_standard_hook(&cod);
    let columns = enumerate_standard_hook(&dom)
        .into_iter()
        .map(|a| {
            if a.contains(n) {
                SparseVec::zero(target.len())
            } else {
                let k = target.binary_search(&a.with(n)).expect("A ∪ {n} is a leg set");
                SparseVec::unit(field, target.len(), k)
            }
        })
        .collect();
    SparseMatrix::from_columns(target.len(), columns)
}

fn full_space<F: Field>(field: &F, params: Params) -> Space<F::Elem> {
    Space {
        label: format!("S^{}", params.m),
        params,
        sq: Subquotient::whole(field, params.dim()),
    }
}

fn im_chi_space<F: Field>(field: &F, m: usize, params: &Params) -> Result<Space<F::Elem>> {
    let p = params.with_m(m)?;
    let sub = predicted_subspace(field, PredictedKind::ImChi, m, params)?;
    Ok(Space { label: format!("im chi_{m}"), params: p, sq: Subquotient::submodule(sub) })
}

fn coker_chi_space<F: Field>(field: &F, m: usize, params: &Params) -> Result<Space<F::Elem>> {
    let p = params.with_m(m)?;
    let quot = predicted_subspace(field, PredictedKind::ImChi, m, params)?;
    let sq = Subquotient::new(field, Subspace::full(field, p.dim()), quot)?;
    Ok(Space { label: format!("coker chi_{m}"), params: p, sq })
}

pub fn gamma_map<F: Field>(field: &F, m: usize, params: &Params) -> Result<LinearMap<F::Elem>> {
    let matrix = gamma_matrix(field, m, params)?;
    Ok(LinearMap {
        name: format!("gamma_{m}"),
        domain: full_space(field, params.with_m(m)?),
        codomain: full_space(field, params.with_m(m + 1)?),
        matrix,
    })
}

/// `χ_m` as the inclusion of its image, for `0 <= m <= n - 1`.
pub fn chi_map<F: Field>(field: &F, m: usize, params: &Params) -> Result<LinearMap<F::Elem>> {
    if m >= params.n {
        return Err(Error::InvalidParams(format!("χ_{m} needs m < n")));
    }
    let domain = im_chi_space(field, m, params)?;
    let codomain = full_space(field, params.with_m(m)?);
    let id = SparseMatrix::identity(field, codomain.params.dim());
    let matrix = induced(field, &id, &domain.sq, &codomain.sq)?;
    Ok(LinearMap { name: format!("chi_{m}"), domain, codomain, matrix })
}

/// `τ_m` as the quotient map onto the cokernel of `χ_m`, for `1 <= m <= n`.
pub fn tau_map<F: Field>(field: &F, m: usize, params: &Params) -> Result<LinearMap<F::Elem>> {
    if m == 0 || m > params.n {
        return Err(Error::InvalidParams(format!("τ_{m} needs 1 <= m <= n")));
    }
    let domain = full_space(field, params.with_m(m)?);
    let codomain = coker_chi_space(field, m, params)?;
    let id = SparseMatrix::identity(field, domain.params.dim());
    let matrix = induced(field, &id, &domain.sq, &codomain.sq)?;
    Ok(LinearMap { name: format!("tau_{m}"), domain, codomain, matrix })
}

fn require_case_four(params: &Params) -> Result<()> {
    require(
        chi_applies(params) && params.n.is_multiple_of(params.e as usize),
        "κ2 ≡ κ1-1 and n ≡ 0",
        params,
    )
}

/// `α_m`: the restriction of `γ_m` to `im χ_m → im χ_{m+1}`, `0 <= m <= n-2`.
pub fn alpha_map<F: Field>(field: &F, m: usize, params: &Params) -> Result<LinearMap<F::Elem>> {
    require_case_four(params)?;
    if m + 2 > params.n {
        return Err(Error::InvalidParams(format!("α_{m} needs m <= n - 2")));
    }
    let domain = im_chi_space(field, m, params)?;
    let codomain = im_chi_space(field, m + 1, params)?;
    let matrix = induced(field, &gamma_matrix(field, m, params)?, &domain.sq, &codomain.sq)?;
    Ok(LinearMap { name: format!("alpha_{m}"), domain, codomain, matrix })
}

/// `β_m`: the map `coker χ_{m+1} → coker χ_{m+2}` induced by `γ_{m+1}`,
/// `0 <= m <= n-2`.
pub fn beta_map<F: Field>(field: &F, m: usize, params: &Params) -> Result<LinearMap<F::Elem>> {
    require_case_four(params)?;
    if m + 2 > params.n {
        return Err(Error::InvalidParams(format!("β_{m} needs m <= n - 2")));
    }
    let domain = coker_chi_space(field, m + 1, params)?;
    let codomain = coker_chi_space(field, m + 2, params)?;
    let matrix = induced(field, &gamma_matrix(field, m + 1, params)?, &domain.sq, &codomain.sq)?;
    Ok(LinearMap { name: format!("beta_{m}"), domain, codomain, matrix })
}

/// `φ_m = γ_{m-1} ∘ χ_{m-1}`, from `im χ_{m-1}` into `S^m`, `1 <= m <= n-1`.
pub fn phi_map<F: Field>(field: &F, m: usize, params: &Params) -> Result<LinearMap<F::Elem>> {
    require_case_four(params)?;
    if m == 0 || m >= params.n {
        return Err(Error::InvalidParams(format!("φ_{m} needs 1 <= m <= n - 1")));
    }
    let domain = im_chi_space(field, m - 1, params)?;
    let codomain = full_space(field, params.with_m(m)?);
    let matrix = induced(field, &gamma_matrix(field, m - 1, params)?, &domain.sq, &codomain.sq)?;
    Ok(LinearMap { name: format!("phi_{m}"), domain, codomain, matrix })
}

/// `α_m` written down directly: `v(B) ↦ v(B ∪ {n})` when `max B < n`, in the
/// coordinates of `im χ_m` and `im χ_{m+1}`.
pub fn alpha_formula<F: Field>(field: &F, m: usize, params: &Params) -> Result<SparseMatrix<F::Elem>> {
    let n = params.n;
    let dom: Vec<LegSet> = enumerate_standard_hook(&params.with_m(m)?)
        .into_iter()
        .filter(|a| !a.contains(1))
        .collect();
    let cod: Vec<LegSet> = enumerate_standard_hook(&params.with_m(m + 1)?)
        .into_iter()
        .filter(|a| !a.contains(1))
        .collect();
    formula_matrix(field, &dom, &cod, |b| (!b.contains(n)).then(|| b.with(n)))
}

/// `β_m` written down directly on the coset basis `{v(A) : 1 ∈ A}`.
pub fn beta_formula<F: Field>(field: &F, m: usize, params: &Params) -> Result<SparseMatrix<F::Elem>> {
    let n = params.n;
    let dom: Vec<LegSet> = enumerate_standard_hook(&params.with_m(m + 1)?)
        .into_iter()
        .filter(|a| a.contains(1))
        .collect();
    let cod: Vec<LegSet> = enumerate_standard_hook(&params.with_m(m + 2)?)
        .into_iter()
        .filter(|a| a.contains(1))
        .collect();
    formula_matrix(field, &dom, &cod, |b| (!b.contains(n)).then(|| b.with(n)))
}

fn formula_matrix<F: Field>(
    field: &F,
    dom: &[LegSet],
    cod: &[LegSet],
    rule: impl Fn(&LegSet) -> Option<LegSet>,
) -> Result<SparseMatrix<F::Elem>> {
    let columns = dom
        .iter()
        .map(|b| match rule(b) {
            Some(t) => {
                let k = cod.binary_search(&t).map_err(|_| Error::InvalidLegSet {
                    legs: t.entries().to_vec(),
                    n: 0,
                    m: t.len(),
                })?;
                Ok(SparseVec::unit(field, cod.len(), k))
            }
            None => Ok(SparseVec::zero(cod.len())),
        })
        .collect::<Result<Vec<_>>>()?;
    SparseMatrix::from_columns(cod.len(), columns)
}

/// Pass/fail for one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { id: id.into(), passed, detail: detail.into() }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomFailure {
    pub generator: String,
    /// Domain coordinate whose image disagrees.
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomReport {
    pub map: String,
    pub generators_checked: usize,
    pub failure: Option<HomFailure>,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `g · f = f · g` for every generator `g`, each side acting through
/// its subquotient. Idempotents are matched by residue sequence.
pub fn check_hom_property<F: Field>(
    domain: &HookSpechtModule<F>,
    codomain: &HookSpechtModule<F>,
    map: &LinearMap<F::Elem>,
) -> Result<HomReport> {
    let field = domain.field();
    let n = domain.params().n;
    if codomain.params().n != n {
        return Err(Error::InvalidParams("modules of different sizes".into()));
    }
    let mut gens: Vec<Generator> = domain
        .residue_seqs()
        .iter()
        .chain(codomain.residue_seqs())
        .cloned()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .map(Generator::Idempotent)
        .collect();
    gens.extend((1..=n).map(Generator::Y));
    gens.extend((1..n).map(Generator::Psi));

    for g in &gens {
        let dg = map.domain.sq.induced_action(field, &domain.generator_matrix(g)?)?;
        let cg = map.codomain.sq.induced_action(field, &codomain.generator_matrix(g)?)?;
        let lhs = cg.compose(field, &map.matrix)?;
        let rhs = map.matrix.compose(field, &dg)?;
        if let Some(column) = lhs.first_difference(&rhs) {
            return Ok(HomReport {
                map: map.name.clone(),
                generators_checked: gens.len(),
                failure: Some(HomFailure { generator: g.to_string(), column }),
            });
        }
    }
    Ok(HomReport { map: map.name.clone(), generators_checked: gens.len(), failure: None })
}

/// Builds the domain and codomain modules of `map` and checks it.
pub fn check_map<F: Field>(field: &F, map: &LinearMap<F::Elem>) -> Result<HomReport> {
    let dom = HookSpechtModule::new(field.clone(), map.domain.params);
    let cod = HookSpechtModule::new(field.clone(), map.codomain.params);
    check_hom_property(&dom, &cod, map)
}

/// Every map the parameters admit.
pub fn realized_maps<F: Field>(field: &F, params: &Params) -> Result<Vec<LinearMap<F::Elem>>> {
    let n = params.n;
    let mut maps = Vec::new();
    if gamma_applies(params) {
        for m in 0..n {
            maps.push(gamma_map(field, m, params)?);
        }
    }
    if chi_applies(params) {
        for m in 0..n {
            maps.push(chi_map(field, m, params)?);
        }
        for m in 1..=n {
            maps.push(tau_map(field, m, params)?);
        }
        if params.n.is_multiple_of(params.e as usize) {
            for m in 0..n - 1 {
                maps.push(alpha_map(field, m, params)?);
                maps.push(beta_map(field, m, params)?);
            }
            for m in 1..n {
                maps.push(phi_map(field, m, params)?);
            }
        }
    }
    Ok(maps)
}

fn image_and_kernel<F: Field>(
    field: &F,
    map: &LinearMap<F::Elem>,
) -> Result<(Subspace<F::Elem>, Subspace<F::Elem>)> {
    map_image_kernel(field, &map.matrix)
}

/// Does `z'` satisfy the defining relations of the Specht module of `shape`
/// (column relations, Garnir words, idempotent and `y` relations)?
fn satisfies_presentation<F: Field>(
    module: &HookSpechtModule<F>,
    within: &Subquotient<F::Elem>,
    shape: &BipartitionShape,
    generator: &SparseVec<F::Elem>,
) -> Result<bool> {
    let field = module.field();
    let params = module.params();
    let n = params.n;
    let t = Tableau::column_initial(shape.clone())?;
    let i_lambda = residue_sequence(&t, &params.charge());
    let is_zero = |v: SparseVec<F::Elem>| -> Result<bool> {
        Ok(within.coords(field, &v)?.is_zero())
    };
    let e = module.idempotent(&i_lambda)?;
    let fixed = e.apply(field, generator)?.sub(field, generator);
    if !is_zero(fixed)? {
        return Ok(false);
    }
    for r in 1..=n {
        if !is_zero(module.y(r)?.apply(field, generator)?)? {
            return Ok(false);
        }
    }
    for r in (1..n).filter(|&r| t.adjacent_in_row_or_column(r)) {
        if !is_zero(module.psi(r)?.apply(field, generator)?)? {
            return Ok(false);
        }
    }
    for word in crate::combinatorics::garnir_relations(shape)? {
        if !is_zero(module.apply_word(&word, generator)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Independent evidence that the realisations of the arm- and leg-hook
/// modules are right: the claimed generators satisfy the right presentation
/// and generate subquotients of the right dimension.
pub fn check_chi_tau_generators<F: Field>(field: &F, m: usize, params: &Params) -> Result<Vec<Check>> {
    require(chi_applies(params), "κ2 ≡ κ1-1", params)?;
    let n = params.n;
    let mut checks = Vec::new();
    if m < n {
        let p = params.with_m(m)?;
        let module = HookSpechtModule::new(field.clone(), p);
        let g = module.vector(&LegSet::new((2..=m + 1).collect(), n, m)?)?;
        let spun = spin(field, std::slice::from_ref(&g), &module.generators())?;
        let predicted = predicted_subspace(field, PredictedKind::ImChi, m, params)?;
        let whole = Subquotient::whole(field, module.dim());
        let pres = satisfies_presentation(&module, &whole, &BipartitionShape::ArmHook { n, m }, &g)?;
        checks.push(Check::new(
            format!("chi_{m}-generator"),
            pres && spun == predicted,
            format!("dim {} (expected {})", spun.dim(), crate::combinatorics::binomial(n - 1, m)),
        ));
    }
    if m >= 1 {
        let p = params.with_m(m)?;
        let module = HookSpechtModule::new(field.clone(), p);
        let quot = predicted_subspace(field, PredictedKind::ImChi, m, params)?;
        let coker = Subquotient::new(field, Subspace::full(field, module.dim()), quot.clone())?;
        let z = module.vector(&LegSet::initial(m))?;
        let spun = crate::linalg::spin_from(field, quot.clone(), std::slice::from_ref(&z), &module.generators())?;
        let pres = satisfies_presentation(&module, &coker, &BipartitionShape::LegHook { n, m: m - 1 }, &z)?;
        checks.push(Check::new(
            format!("tau_{m}-generator"),
            pres && spun.is_full(),
            format!("cokernel dim {}", coker.dim()),
        ));
    }
    Ok(checks)
}

/// Exact sequences among the realised maps.
pub fn check_exactness<F: Field>(field: &F, params: &Params) -> Result<Vec<Check>> {
    let n = params.n;
    let mut checks = Vec::new();
    if gamma_applies(params) {
        let maps = (0..n).map(|m| gamma_map(field, m, params)).collect::<Result<Vec<_>>>()?;
        let ik = maps.iter().map(|g| image_and_kernel(field, g)).collect::<Result<Vec<_>>>()?;
        checks.push(Check::new("gamma_0-injective", ik[0].1.is_zero(), ""));
        checks.push(Check::new("gamma_last-surjective", ik[n - 1].0.is_full(), ""));
        for m in 1..n {
            let (im_prev, ker) = (&ik[m - 1].0, &ik[m].1);
            let predicted = predicted_subspace(field, PredictedKind::KerGamma, m, params)?;
            let im_pred = predicted_subspace(field, PredictedKind::ImGamma, m - 1, params)?;
            checks.push(Check::new(
                format!("im gamma_{} = ker gamma_{m}", m - 1),
                im_prev == ker && *ker == predicted && *im_prev == im_pred,
                format!("dim {}", ker.dim()),
            ));
        }
        for (m, (im, ker)) in ik.iter().enumerate() {
            checks.push(Check::new(
                format!("rank-nullity gamma_{m}"),
                im.dim() + ker.dim() == params.with_m(m)?.dim(),
                format!("{} + {}", im.dim(), ker.dim()),
            ));
        }
    }
    if chi_applies(params) {
        for m in 1..n {
            let chi = chi_map(field, m, params)?;
            let tau = tau_map(field, m, params)?;
            let (im_chi, ker_chi) = image_and_kernel(field, &chi)?;
            let (im_tau, ker_tau) = image_and_kernel(field, &tau)?;
            let module = HookSpechtModule::new(field.clone(), params.with_m(m)?);
            let closed = chi.domain.sq.is_invariant(field, &module.generators());
            let predicted = predicted_subspace(field, PredictedKind::KerTau, m, params)?;
            checks.push(Check::new(
                format!("0 -> im chi_{m} -> S -> coker -> 0"),
                closed && ker_chi.is_zero() && ker_tau == im_chi && ker_tau == predicted && im_tau.is_full(),
                format!("ker tau dim {}", ker_tau.dim()),
            ));
        }
        for m in 0..=n {
            checks.extend(check_chi_tau_generators(field, m, params)?);
        }
        if n.is_multiple_of(params.e as usize) {
            for (name, build) in [
                ("alpha", alpha_map::<F> as fn(&F, usize, &Params) -> Result<LinearMap<F::Elem>>),
                ("beta", beta_map::<F>),
            ] {
                let maps = (0..n - 1).map(|m| build(field, m, params)).collect::<Result<Vec<_>>>()?;
                let ik = maps.iter().map(|g| image_and_kernel(field, g)).collect::<Result<Vec<_>>>()?;
                checks.push(Check::new(format!("{name}_0-injective"), ik[0].1.is_zero(), ""));
                checks.push(Check::new(format!("{name}_last-surjective"), ik[n - 2].0.is_full(), ""));
                for m in 1..n - 1 {
                    checks.push(Check::new(
                        format!("im {name}_{} = ker {name}_{m}", m - 1),
                        ik[m - 1].0 == ik[m].1,
                        format!("dim {}", ik[m].1.dim()),
                    ));
                }
            }
        }
    }
    Ok(checks)
}

/// The commuting squares and triangles relating `χ, τ, γ, α, β, φ`.
pub fn check_compositions<F: Field>(field: &F, params: &Params) -> Result<Vec<Check>> {
    require_case_four(params)?;
    let n = params.n;
    let mut checks = Vec::new();
    for m in 1..n {
        let beta = beta_map(field, m - 1, params)?;
        let tau_m = tau_map(field, m, params)?;
        let tau_next = tau_map(field, m + 1, params)?;
        let gamma = gamma_map(field, m, params)?;
        let lhs = beta.matrix.compose(field, &tau_m.matrix)?;
        let rhs = tau_next.matrix.compose(field, &gamma.matrix)?;
        checks.push(Check::new(
            format!("beta_{} tau_{m} = tau_{} gamma_{m}", m - 1, m + 1),
            lhs == rhs,
            "",
        ));
        let formula = beta_formula(field, m - 1, params)?;
        checks.push(Check::new(format!("beta_{} formula", m - 1), formula == beta.matrix, ""));
    }
    for m in 0..n - 1 {
        let chi = chi_map(field, m, params)?;
        let chi_next = chi_map(field, m + 1, params)?;
        let gamma = gamma_map(field, m, params)?;
        let alpha = alpha_map(field, m, params)?;
        let phi = phi_map(field, m + 1, params)?;
        let gc = gamma.matrix.compose(field, &chi.matrix)?;
        let ca = chi_next.matrix.compose(field, &alpha.matrix)?;
        checks.push(Check::new(
            format!("gamma_{m} chi_{m} = chi_{} alpha_{m} = phi_{}", m + 1, m + 1),
            gc == ca && ca == phi.matrix,
            "",
        ));
        checks.push(Check::new(
            format!("alpha_{m} formula"),
            alpha_formula(field, m, params)? == alpha.matrix,
            "",
        ));
        let (im, _) = map_image_kernel(field, &gc)?;
        let predicted = predicted_subspace(field, PredictedKind::ImPhi, m + 1, params)?;
        checks.push(Check::new(
            format!("im phi_{}", m + 1),
            im == predicted,
            format!("dim {}", im.dim()),
        ));

        // φ_{m+1}(z) computed two ways: through v(2..m+1), and as the word
        // ψ_1...ψ_m ψ_{n-1}...ψ_{m+1} applied to the generator of S^{m+1}.
        let next = HookSpechtModule::new(field.clone(), params.with_m(m + 1)?);
        let z_next = next.vector(&LegSet::initial(m + 1))?;
        let word = GenWord::up(1, m).then(GenWord::down(n - 1, m + 1));
        let by_word = next.apply_word(&word, &z_next)?;
        let module = HookSpechtModule::new(field.clone(), params.with_m(m)?);
        let v = module.vector(&LegSet::new((2..=m + 1).collect(), n, m)?)?;
        let by_maps = gamma_matrix(field, m, params)?.apply(field, &v)?;
        checks.push(Check::new(format!("phi_{} on z", m + 1), by_word == by_maps, ""));
    }
    Ok(checks)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GamisoReport {
    pub m: usize,
    pub source_size: usize,
    pub target_size: usize,
    pub rank: usize,
}

impl GamisoReport {
    pub fn passed(&self) -> bool {
        self.source_size == self.target_size && self.rank == self.source_size
    }
}

/// `γ_m` restricted to `M = span{v(A) : n ∉ A}` and projected onto
/// `N = span{v(A') : a'_{m+1} = n}` is a bijection.
pub fn gamiso_check<F: Field>(field: &F, m: usize, params: &Params) -> Result<GamisoReport> {
    let gamma = gamma_matrix(field, m, params)?;
    let n = params.n;
    let dom = enumerate_standard_hook(&params.with_m(m)?);
    let cod = enumerate_standard_hook(&params.with_m(m + 1)?);
    let source: Vec<usize> = (0..dom.len()).filter(|&k| !dom[k].contains(n)).collect();
    let target: Vec<usize> = (0..cod.len()).filter(|&k| cod[k].contains(n)).collect();
    let columns: Vec<SparseVec<F::Elem>> = source
        .iter()
        .map(|&k| {
            let col = gamma.column(k);
            let entries = target
                .iter()
                .enumerate()
                .filter_map(|(t, &idx)| col.get(idx).map(|c| (t, c.clone())))
                .collect();
            SparseVec::from_entries(field, target.len(), entries)
        })
        .collect::<Result<_>>()?;
    let rank = rref_span(field, &columns, target.len())?.dim();
    Ok(GamisoReport { m, source_size: source.len(), target_size: target.len(), rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn gamma_sends_z_to_v_with_n() {
        let q = Rationals;
        let p = Params::new(3, (0, 1), 5, 2).unwrap();
        let g = gamma_matrix(&q, 2, &p).unwrap();
        let cod = enumerate_standard_hook(&p.with_m(3).unwrap());
        let k = cod.iter().position(|a| a.entries() == [1, 2, 5]).unwrap();
        assert_eq!(g.column(0), &SparseVec::unit(&q, 10, k));
        // v(1,5) ↦ 0
        let dom = enumerate_standard_hook(&p);
        let j = dom.iter().position(|a| a.entries() == [1, 5]).unwrap();
        assert!(g.column(j).is_zero());
    }

    #[test]
    fn gamma_requires_congruence() {
        let p = Params::new(3, (0, 0), 5, 2).unwrap();
        assert!(matches!(gamma_matrix(&Rationals, 2, &p), Err(Error::Congruence(_))));
    }

    #[test]
    fn subquotient_coordinates() {
        let f = PrimeField::new(7).unwrap();
        let sub = Subspace::full(&f, 3);
        let quot = Subspace::coordinate(&f, 3, [1]);
        let sq = Subquotient::new(&f, sub, quot).unwrap();
        assert_eq!(sq.dim(), 2);
        let v = SparseVec::from_dense(&f, &[3, 5, 1]);
        assert_eq!(sq.coords(&f, &v).unwrap().to_dense(&f), vec![3, 1]);
        assert!(Subquotient::new(&f, Subspace::zero(3), Subspace::full(&f, 3)).is_err());
    }

    #[test]
    fn zero_map_is_a_homomorphism() {
        let q = Rationals;
        let p = Params::new(3, (0, 1), 4, 2).unwrap();
        let module = HookSpechtModule::new(q, p);
        let space = full_space(&q, p);
        let map = LinearMap {
            name: "zero".into(),
            domain: space.clone(),
            codomain: space,
            matrix: SparseMatrix::zero(6, 6),
        };
        assert!(check_hom_property(&module, &module, &map).unwrap().passed());
    }
}
