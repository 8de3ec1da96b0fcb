//! The Specht module of a hook bipartition, defined by its explicit action on
//! the standard basis `v(A)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    enumerate_standard_hook, residue_sequence_hook, GenWord, LegSet, Params, ResidueSeq,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{SparseMatrix, SparseVec};

/// Signs of the six ψ rules and the two nonzero y rules.
///
/// The default is the correct table. Other tables exist so that tests can
/// check the relation verifier notices a corrupted action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignTable {
    pub rel: [i8; 6],
    pub y: [i8; 2],
}

impl Default for SignTable {
    fn default() -> Self {
        SignTable { rel: [1, 1, -1, 1, -1, 1], y: [-1, 1] }
    }
}

impl SignTable {
    /// Entry `k` of the concatenated table `rel ++ y`, negated.
    pub fn with_flip(mut self, k: usize) -> Self {
        match k {
            0..=5 => self.rel[k] = -self.rel[k],
            6 | 7 => self.y[k - 6] = -self.y[k - 6],
            _ => panic!("sign table has 8 entries, got index {k}"),
        }
        self
    }
}

/// Which rule produced a nonzero ψ action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PsiRule {
    Rel1,
    Rel2,
    Rel3,
    Rel4,
    Rel5,
    Rel6,
}

/// `sign * v(A)`; actions on basis vectors are zero or of this form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signed {
    pub sign: i8,
    pub legs: LegSet,
}

fn check_legs(params: &Params, legs: &LegSet) -> Result<()> {
    LegSet::new(legs.entries().to_vec(), params.n, params.m).map(|_| ())
}

/// `A` with `a_r, a_{r+1}` replaced by `low, low + 1`.
fn shift_pair(a: &[usize], r: usize, low: usize) -> LegSet {
    let mut v = a.to_vec();
    v[r - 1] = low;
    v[r] = low + 1;
    LegSet::from_sorted(v)
}

/// The rule (if any) by which `ψ_l` acts nontrivially on `v(A)`, with the
/// resulting leg set.
pub fn psi_rule(l: usize, legs: &LegSet, params: &Params) -> Result<Option<(PsiRule, LegSet)>> {
    if l == 0 || l >= params.n {
        return Err(Error::GeneratorOutOfRange { index: l, max: params.n.saturating_sub(1) });
    }
    check_legs(params, legs)?;
    let a = legs.entries();
    let m = a.len();
    let at = |r: usize| a[r - 1];
    // r ranges over 1..=m; "left gap" means r = 1 or a_{r-1} <= bound
    let left_ok = |r: usize, bound: isize| r == 1 || at(r - 1) as isize <= bound;
    let l_i = l as isize;

    for r in 1..=m {
        if at(r) == l && (r == m || at(r + 1) >= l + 2) {
            return Ok(Some((PsiRule::Rel1, legs.replaced(l, l + 1))));
        }
    }
    if params.is_d_plus(l, 0) && l + 1 < params.n {
        for r in 1..=m {
            if r < m && at(r) == l + 1 && at(r + 1) == l + 2 && left_ok(r, l_i - 1) {
                return Ok(Some((PsiRule::Rel2, shift_pair(a, r, l))));
            }
            if at(r) == l + 2 && left_ok(r, l_i - 1) {
                return Ok(Some((PsiRule::Rel3, legs.replaced(l + 2, l))));
            }
        }
    }
    if params.is_d_plus(l, 2) && l >= 2 {
        for r in 1..=m {
            if r < m && at(r) == l && at(r + 1) == l + 1 && left_ok(r, l_i - 2) {
                return Ok(Some((PsiRule::Rel4, shift_pair(a, r, l - 1))));
            }
            if at(r) == l + 1 && left_ok(r, l_i - 2) {
                return Ok(Some((PsiRule::Rel5, legs.replaced(l + 1, l - 1))));
            }
        }
    }
    let off = params.res(l as i64 - params.d() as i64);
    if off > 2 {
        for r in 1..=m {
            if at(r) == l + 1 && left_ok(r, l_i - 1) {
                return Ok(Some((PsiRule::Rel6, legs.replaced(l + 1, l))));
            }
        }
    }
    Ok(None)
}

/// `ψ_l v(A)` as zero or a signed basis vector.
pub fn psi_apply_signed(
    l: usize,
    legs: &LegSet,
    params: &Params,
    signs: &SignTable,
) -> Result<Option<Signed>> {
    Ok(psi_rule(l, legs, params)?.map(|(rule, legs)| {
        let k = match rule {
            PsiRule::Rel1 => 0,
            PsiRule::Rel2 => 1,
            PsiRule::Rel3 => 2,
            PsiRule::Rel4 => 3,
            PsiRule::Rel5 => 4,
            PsiRule::Rel6 => 5,
        };
        Signed { sign: signs.rel[k], legs }
    }))
}

/// `y_i v(A)` as zero or a signed basis vector.
pub fn y_apply_signed(
    i: usize,
    legs: &LegSet,
    params: &Params,
    signs: &SignTable,
) -> Result<Option<Signed>> {
    if i == 0 || i > params.n {
        return Err(Error::GeneratorOutOfRange { index: i, max: params.n });
    }
    check_legs(params, legs)?;
    if params.is_d_plus(i, 1) && !legs.contains(i) && legs.contains(i + 1) {
        return Ok(Some(Signed { sign: signs.y[0], legs: legs.replaced(i + 1, i) }));
    }
    if params.is_d_plus(i, 2) && i >= 2 && !legs.contains(i - 1) && legs.contains(i) {
        return Ok(Some(Signed { sign: signs.y[1], legs: legs.replaced(i, i - 1) }));
    }
    Ok(None)
}

/// An element of the module: a finite combination of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<E> {
    terms: BTreeMap<LegSet, E>,
}

impl<E: Clone + PartialEq> LinComb<E> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn basis<F: Field<Elem = E>>(field: &F, legs: LegSet) -> Self {
        LinComb { terms: BTreeMap::from([(legs, field.one())]) }
    }

    fn from_signed<F: Field<Elem = E>>(field: &F, s: Option<Signed>) -> Self {
        match s {
            Some(Signed { sign, legs }) => {
                LinComb { terms: BTreeMap::from([(legs, field.from_i64(sign as i64))]) }
            }
            None => LinComb::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<LegSet, E> {
        &self.terms
    }

    pub fn coefficient(&self, legs: &LegSet) -> Option<&E> {
        self.terms.get(legs)
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, field: &F, legs: LegSet, c: E) {
        let sum = match self.terms.get(&legs) {
            Some(old) => field.add(old, &c),
            None => c,
        };
        if field.is_zero(&sum) {
            self.terms.remove(&legs);
        } else {
            self.terms.insert(legs, sum);
        }
    }
}

/// `e(i) v(A)`.
pub fn idem_apply<F: Field>(
    field: &F,
    iseq: &ResidueSeq,
    legs: &LegSet,
    params: &Params,
) -> Result<LinComb<F::Elem>> {
    if iseq.len() != params.n {
        return Err(Error::DimensionMismatch { expected: params.n, found: iseq.len() });
    }
    if residue_sequence_hook(params, legs)? == *iseq {
        Ok(LinComb::basis(field, legs.clone()))
    } else {
        Ok(LinComb::zero())
    }
}

pub fn psi_apply<F: Field>(
    field: &F,
    l: usize,
    legs: &LegSet,
    params: &Params,
) -> Result<LinComb<F::Elem>> {
    let s = psi_apply_signed(l, legs, params, &SignTable::default())?;
    Ok(LinComb::from_signed(field, s))
}

pub fn y_apply<F: Field>(
    field: &F,
    i: usize,
    legs: &LegSet,
    params: &Params,
) -> Result<LinComb<F::Elem>> {
    let s = y_apply_signed(i, legs, params, &SignTable::default())?;
    Ok(LinComb::from_signed(field, s))
}

/// Apply a word of ψ generators to a basis vector, last letter first.
pub fn apply_word_signed(
    word: &GenWord,
    legs: &LegSet,
    params: &Params,
    signs: &SignTable,
) -> Result<Option<Signed>> {
    word.check_range(params.n)?;
    let mut cur = Signed { sign: word.sign, legs: legs.clone() };
    for &l in word.letters.iter().rev() {
        match psi_apply_signed(l, &cur.legs, params, signs)? {
            Some(next) => cur = Signed { sign: cur.sign * next.sign, legs: next.legs },
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}

/// A generator of the cyclotomic KLR algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    Idempotent(ResidueSeq),
    Y(usize),
    Psi(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Idempotent(i) => write!(f, "e{i}"),
            Generator::Y(i) => write!(f, "y{i}"),
            Generator::Psi(l) => write!(f, "psi{l}"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    /// Accepts `psi3`, `y2` and `e(0,1,2)` (also `e0,1,2`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownGenerator(s.to_string());
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("psi") {
            return rest.parse().map(Generator::Psi).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix('y') {
            return rest.parse().map(Generator::Y).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix('e') {
            let body = rest.trim_start_matches('(').trim_end_matches(')');
            let seq = body
                .split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            return Ok(Generator::Idempotent(ResidueSeq(seq)));
        }
        Err(bad())
    }
}

/// Matrices of every generator acting on the module.
#[derive(Clone, Debug)]
pub struct GenMatrices<E> {
    /// One projector per residue sequence that occurs, sorted by sequence.
    pub idempotents: Vec<(ResidueSeq, SparseMatrix<E>)>,
    /// `y[i-1]` is `y_i`.
    pub y: Vec<SparseMatrix<E>>,
    /// `psi[l-1]` is `ψ_l`.
    pub psi: Vec<SparseMatrix<E>>,
}

impl<E: Clone + PartialEq> GenMatrices<E> {
    /// Every generator matrix, idempotents first.
    pub fn all(&self) -> Vec<SparseMatrix<E>> {
        self.idempotents
            .iter()
            .map(|(_, m)| m.clone())
            .chain(self.y.iter().cloned())
            .chain(self.psi.iter().cloned())
            .collect()
    }

    pub fn labelled(&self) -> Vec<(Generator, &SparseMatrix<E>)> {
        self.idempotents
            .iter()
            .map(|(i, m)| (Generator::Idempotent(i.clone()), m))
            .chain(self.y.iter().enumerate().map(|(k, m)| (Generator::Y(k + 1), m)))
            .chain(self.psi.iter().enumerate().map(|(k, m)| (Generator::Psi(k + 1), m)))
            .collect()
    }
}

/// `S_{((n-m),(1^m))}` over a chosen field.
pub struct HookSpechtModule<F: Field> {
    field: F,
    params: Params,
    signs: SignTable,
    basis: Vec<LegSet>,
    index: HashMap<LegSet, usize>,
    residues: Vec<ResidueSeq>,
    matrices: OnceLock<GenMatrices<F::Elem>>,
}

impl<F: Field> HookSpechtModule<F> {
    pub fn new(field: F, params: Params) -> Self {
        Self::with_signs(field, params, SignTable::default())
    }

    pub fn with_signs(field: F, params: Params, signs: SignTable) -> Self {
        let basis = enumerate_standard_hook(&params);
        let index = basis.iter().enumerate().map(|(k, a)| (a.clone(), k)).collect();
        let residues = basis
            .iter()
            .map(|a| residue_sequence_hook(&params, a).expect("enumerated sets are valid"))
            .collect();
        HookSpechtModule { field, params, signs, basis, index, residues, matrices: OnceLock::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn signs(&self) -> &SignTable {
        &self.signs
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LegSet] {
        &self.basis
    }

    pub fn leg_set(&self, k: usize) -> &LegSet {
        &self.basis[k]
    }

    pub fn index_of(&self, legs: &LegSet) -> Option<usize> {
        self.index.get(legs).copied()
    }

    pub fn residue_seq(&self, k: usize) -> &ResidueSeq {
        &self.residues[k]
    }

    pub fn residue_seqs(&self) -> &[ResidueSeq] {
        &self.residues
    }

    /// The basis vector `v(A)` as a coordinate vector.
    pub fn vector(&self, legs: &LegSet) -> Result<SparseVec<F::Elem>> {
        let k = self.index_of(legs).ok_or_else(|| Error::InvalidLegSet {
            legs: legs.entries().to_vec(),
            n: self.params.n,
            m: self.params.m,
        })?;
        Ok(SparseVec::unit(&self.field, self.dim(), k))
    }

    /// Coordinates of a linear combination.
    pub fn to_vector(&self, comb: &LinComb<F::Elem>) -> Result<SparseVec<F::Elem>> {
        let mut entries = Vec::with_capacity(comb.terms().len());
        for (legs, c) in comb.terms() {
            let k = self.index_of(legs).ok_or_else(|| Error::InvalidLegSet {
                legs: legs.entries().to_vec(),
                n: self.params.n,
                m: self.params.m,
            })?;
            entries.push((k, c.clone()));
        }
        SparseVec::from_entries(&self.field, self.dim(), entries)
    }

    pub fn to_lincomb(&self, v: &SparseVec<F::Elem>) -> LinComb<F::Elem> {
        let mut out = LinComb::zero();
        for (k, c) in v.entries() {
            out.add_term(&self.field, self.basis[*k].clone(), c.clone());
        }
        out
    }

    fn signed_column(&self, s: Option<Signed>) -> SparseVec<F::Elem> {
        match s {
            Some(Signed { sign, legs }) => {
                let k = self.index[&legs];
                SparseVec::from_entries(&self.field, self.dim(), vec![(k, self.field.from_i64(sign as i64))])
                    .expect("index in range")
            }
            None => SparseVec::zero(self.dim()),
        }
    }

    fn build(&self) -> GenMatrices<F::Elem> {
        let (n, dim) = (self.params.n, self.dim());
        let mut classes: BTreeMap<ResidueSeq, Vec<usize>> = BTreeMap::new();
        for (k, r) in self.residues.iter().enumerate() {
            classes.entry(r.clone()).or_default().push(k);
        }
        let idempotents = classes
            .into_iter()
            .map(|(seq, ks)| {
                let columns = (0..dim)
                    .map(|k| {
                        if ks.binary_search(&k).is_ok() {
                            SparseVec::unit(&self.field, dim, k)
                        } else {
                            SparseVec::zero(dim)
                        }
                    })
                    .collect();
                (seq, SparseMatrix::from_columns(dim, columns).expect("square"))
            })
            .collect();
        let column_matrix = |f: &dyn Fn(&LegSet) -> Option<Signed>| {
            let columns = self.basis.iter().map(|a| self.signed_column(f(a))).collect();
            SparseMatrix::from_columns(dim, columns).expect("square")
        };
        let y = (1..=n)
            .map(|i| {
                column_matrix(&|a| y_apply_signed(i, a, &self.params, &self.signs).expect("valid"))
            })
            .collect();
        let psi = (1..n)
            .map(|l| {
                column_matrix(&|a| psi_apply_signed(l, a, &self.params, &self.signs).expect("valid"))
            })
            .collect();
        GenMatrices { idempotents, y, psi }
    }

    /// Generator matrices, built on first use.
    pub fn matrices(&self) -> &GenMatrices<F::Elem> {
        self.matrices.get_or_init(|| self.build())
    }

    pub fn psi(&self, l: usize) -> Result<&SparseMatrix<F::Elem>> {
        let n = self.params.n;
        if l == 0 || l >= n {
            return Err(Error::GeneratorOutOfRange { index: l, max: n.saturating_sub(1) });
        }
        Ok(&self.matrices().psi[l - 1])
    }

    pub fn y(&self, i: usize) -> Result<&SparseMatrix<F::Elem>> {
        let n = self.params.n;
        if i == 0 || i > n {
            return Err(Error::GeneratorOutOfRange { index: i, max: n });
        }
        Ok(&self.matrices().y[i - 1])
    }

    /// `e(i)`; the zero matrix when no basis vector has residue sequence `i`.
    pub fn idempotent(&self, iseq: &ResidueSeq) -> Result<SparseMatrix<F::Elem>> {
        if iseq.len() != self.params.n {
            return Err(Error::DimensionMismatch { expected: self.params.n, found: iseq.len() });
        }
        Ok(self
            .matrices()
            .idempotents
            .iter()
            .find(|(s, _)| s == iseq)
            .map(|(_, m)| m.clone())
            .unwrap_or_else(|| SparseMatrix::zero(self.dim(), self.dim())))
    }

    pub fn generator_matrix(&self, g: &Generator) -> Result<SparseMatrix<F::Elem>> {
        match g {
            Generator::Idempotent(i) => self.idempotent(i),
            Generator::Y(i) => self.y(*i).cloned(),
            Generator::Psi(l) => self.psi(*l).cloned(),
        }
    }

    /// All generator matrices, for spinning.
    pub fn generators(&self) -> Vec<SparseMatrix<F::Elem>> {
        self.matrices().all()
    }

    pub fn apply_word(&self, word: &GenWord, v: &SparseVec<F::Elem>) -> Result<SparseVec<F::Elem>> {
        word.check_range(self.params.n)?;
        let mut cur = v.clone();
        for &l in word.letters.iter().rev() {
            cur = self.psi(l)?.apply(&self.field, &cur)?;
        }
        Ok(cur.scale(&self.field, &self.field.from_i64(word.sign as i64)))
    }
}

impl<F: Field> Clone for HookSpechtModule<F> {
    fn clone(&self) -> Self {
        let out = HookSpechtModule::with_signs(self.field.clone(), self.params, self.signs);
        if let Some(m) = self.matrices.get() {
            let _ = out.matrices.set(m.clone());
        }
        out
    }
}

impl<F: Field> fmt::Debug for HookSpechtModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HookSpechtModule")
            .field("params", &self.params)
            .field("field", &self.field.label())
            .field("dim", &self.dim())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn legs(v: &[usize]) -> LegSet {
        LegSet::new(v.to_vec(), 100, v.len()).unwrap()
    }

    fn signed(sign: i8, v: &[usize]) -> Option<Signed> {
        Some(Signed { sign, legs: legs(v) })
    }

    #[test]
    fn psi_examples() {
        let s = SignTable::default();
        let p = Params::new(3, (0, 0), 5, 2).unwrap();
        assert_eq!(psi_apply_signed(2, &legs(&[2, 4]), &p, &s).unwrap(), signed(1, &[3, 4]));
        let p = Params::new(3, (0, 0), 6, 3).unwrap();
        assert_eq!(psi_apply_signed(3, &legs(&[1, 2, 4]), &p, &s).unwrap(), None);
        let p = Params::new(3, (0, 0), 6, 1).unwrap();
        assert_eq!(psi_apply_signed(3, &legs(&[5]), &p, &s).unwrap(), signed(-1, &[3]));
        assert!(psi_apply_signed(6, &legs(&[5]), &p, &s).is_err());
    }

    #[test]
    fn y_examples() {
        let s = SignTable::default();
        let p = Params::new(3, (0, 0), 4, 1).unwrap();
        assert_eq!(y_apply_signed(1, &legs(&[2]), &p, &s).unwrap(), signed(-1, &[1]));
        assert_eq!(y_apply_signed(2, &legs(&[2]), &p, &s).unwrap(), signed(1, &[1]));
        for a in 1..=4 {
            assert_eq!(y_apply_signed(3, &legs(&[a]), &p, &s).unwrap(), None);
        }
    }

    #[test]
    fn rel2_and_rel4_shift_two_entries() {
        let s = SignTable::default();
        // d = 0, l = 3: {4,5} -> {3,4}
        let p = Params::new(3, (0, 0), 6, 2).unwrap();
        assert_eq!(
            psi_rule(3, &legs(&[4, 5]), &p).unwrap().map(|x| x.0),
            Some(PsiRule::Rel2)
        );
        assert_eq!(psi_apply_signed(3, &legs(&[4, 5]), &p, &s).unwrap(), signed(1, &[3, 4]));
        // d = 0, l = 2 is d+2: {2,3} -> {1,2}
        assert_eq!(
            psi_rule(2, &legs(&[2, 3]), &p).unwrap().map(|x| x.0),
            Some(PsiRule::Rel4)
        );
        assert_eq!(psi_apply_signed(2, &legs(&[2, 3]), &p, &s).unwrap(), signed(1, &[1, 2]));
    }

    #[test]
    fn generator_labels_parse() {
        assert_eq!("psi3".parse::<Generator>().unwrap(), Generator::Psi(3));
        assert_eq!("y1".parse::<Generator>().unwrap(), Generator::Y(1));
        assert_eq!(
            "e(0,1,2)".parse::<Generator>().unwrap(),
            Generator::Idempotent(ResidueSeq(vec![0, 1, 2]))
        );
        assert!("x2".parse::<Generator>().is_err());
        assert!("psi".parse::<Generator>().is_err());
    }

    #[test]
    fn one_dimensional_modules_have_zero_psi() {
        let p = Params::new(3, (0, 1), 5, 0).unwrap();
        let module = HookSpechtModule::new(Rationals, p);
        assert_eq!(module.dim(), 1);
        assert!(module.matrices().psi.iter().all(SparseMatrix::is_zero));
        assert!(module.psi(5).is_err());
    }

    #[test]
    fn flipping_sign_entries() {
        let t = SignTable::default().with_flip(2).with_flip(7);
        assert_eq!(t.rel[2], 1);
        assert_eq!(t.y[1], -1);
    }
}
