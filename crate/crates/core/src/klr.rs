//! Checks the defining relations of the cyclotomic KLR algebra on the
//! generator matrices of a module.
//!
//! Every relation has the shape `X e(i) = Y e(i)` or is a sum of such over
//! `i`, so it is enough to compare both sides on each basis vector `v(A)`,
//! reading `i` off as the residue sequence of `A`.

use serde::Serialize;

use crate::combinatorics::{
    garnir_relations, residue_sequence, BipartitionShape, LegSet, Params, ResidueSeq, Tableau,
};
use crate::field::Field;
use crate::linalg::{SparseMatrix, SparseVec};
use crate::specht::HookSpechtModule;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub relation: String,
    /// Generator indices involved, e.g. `[r]` or `[r, s]`.
    pub indices: Vec<usize>,
    pub residues: ResidueSeq,
    pub basis: LegSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct KlrReport {
    pub params: Params,
    pub field: String,
    /// Number of (relation, indices, basis vector) instances compared.
    pub instances: usize,
    /// First counterexample of each failing relation, in checking order.
    pub failures: Vec<RelationFailure>,
}

impl KlrReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&RelationFailure> {
        self.failures.first()
    }
}

struct Checker<'a, F: Field> {
    module: &'a HookSpechtModule<F>,
    instances: usize,
    failures: Vec<RelationFailure>,
}

impl<'a, F: Field> Checker<'a, F> {
    fn field(&self) -> &F {
        self.module.field()
    }

    fn unit(&self, k: usize) -> SparseVec<F::Elem> {
        SparseVec::unit(self.field(), self.module.dim(), k)
    }

    fn app(&self, m: &SparseMatrix<F::Elem>, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        m.apply(self.field(), v).expect("square generator matrices")
    }

    fn record(&mut self, ok: bool, relation: &str, indices: &[usize], k: usize) {
        self.instances += 1;
        if !ok && !self.failures.iter().any(|f| f.relation == relation) {
            self.failures.push(RelationFailure {
                relation: relation.to_string(),
                indices: indices.to_vec(),
                residues: self.module.residue_seq(k).clone(),
                basis: self.module.leg_set(k).clone(),
            });
        }
    }

    fn scaled(&self, v: &SparseVec<F::Elem>, c: i64) -> SparseVec<F::Elem> {
        v.scale(self.field(), &self.field().from_i64(c))
    }
}

/// Verify every KLR relation, the cyclotomic relations and the presentation
/// of the module on its generator `z = v(1..m)`.
pub fn verify_klr_relations<F: Field>(module: &HookSpechtModule<F>) -> KlrReport {
    let params = *module.params();
    let mut c = Checker { module, instances: 0, failures: Vec::new() };
    let mats = module.matrices();
    let (n, dim) = (params.n, module.dim());
    let res = |k: usize| module.residue_seq(k);

    for k in 0..dim {
        let v = c.unit(k);
        let i = res(k).clone();

        // idempotents: exactly one e(j) fixes v, the rest kill it
        let mut hits = 0;
        let mut ok = true;
        for (j, e) in &mats.idempotents {
            let w = c.app(e, &v);
            if *j == i {
                hits += 1;
                ok &= w == v;
            } else {
                ok &= w.is_zero();
            }
        }
        c.record(ok && hits == 1, "idempotent", &[], k);

        for r in 1..=n {
            let w = c.app(&mats.y[r - 1], &v);
            let ok = w.entries().iter().all(|(t, _)| *res(*t) == i);
            c.record(ok, "y-idempotent", &[r], k);
        }
        for r in 1..n {
            let w = c.app(&mats.psi[r - 1], &v);
            let target = i.swapped(r);
            let ok = w.entries().iter().all(|(t, _)| *res(*t) == target);
            c.record(ok, "psi-idempotent", &[r], k);
        }

        // cyclotomic: y_1^{#{j : kappa_j = i_1}} e(i) = 0
        let power = params.kappa.iter().filter(|&&x| x == i.at(1)).count();
        let mut w = v.clone();
        for _ in 0..power {
            w = c.app(&mats.y[0], &w);
        }
        c.record(w.is_zero(), "cyclotomic", &[power], k);

        for r in 1..=n {
            for s in r + 1..=n {
                let lhs = c.app(&mats.y[r - 1], &c.app(&mats.y[s - 1], &v));
                let rhs = c.app(&mats.y[s - 1], &c.app(&mats.y[r - 1], &v));
                c.record(lhs == rhs, "y-y-commute", &[r, s], k);
            }
        }
        for r in 1..n {
            for s in (1..=n).filter(|&s| s != r && s != r + 1) {
                let lhs = c.app(&mats.psi[r - 1], &c.app(&mats.y[s - 1], &v));
                let rhs = c.app(&mats.y[s - 1], &c.app(&mats.psi[r - 1], &v));
                c.record(lhs == rhs, "psi-y-commute", &[r, s], k);
            }
            for s in (1..n).filter(|&s| s.abs_diff(r) > 1) {
                let lhs = c.app(&mats.psi[r - 1], &c.app(&mats.psi[s - 1], &v));
                let rhs = c.app(&mats.psi[s - 1], &c.app(&mats.psi[r - 1], &v));
                c.record(lhs == rhs, "psi-psi-commute", &[r, s], k);
            }
        }

        for r in 1..n {
            let (psi, yr, yr1) = (&mats.psi[r - 1], &mats.y[r - 1], &mats.y[r]);
            let (ir, ir1) = (i.at(r) as i64, i.at(r + 1) as i64);
            let delta = i64::from(ir == ir1);

            let lhs = c.app(psi, &c.app(yr1, &v));
            let rhs = c.app(yr, &c.app(psi, &v)).add(c.field(), &c.scaled(&v, delta));
            c.record(lhs == rhs, "psi-y-up", &[r], k);

            let lhs = c.app(yr1, &c.app(psi, &v));
            let rhs = c.app(psi, &c.app(yr, &v)).add(c.field(), &c.scaled(&v, delta));
            c.record(lhs == rhs, "y-psi-down", &[r], k);

            let e = params.e as i64;
            let lhs = c.app(psi, &c.app(psi, &v));
            let rhs = if ir == ir1 {
                SparseVec::zero(dim)
            } else if ir1 == (ir + 1) % e {
                c.app(yr1, &v).sub(c.field(), &c.app(yr, &v))
            } else if ir == (ir1 + 1) % e {
                c.app(yr, &v).sub(c.field(), &c.app(yr1, &v))
            } else {
                v.clone()
            };
            c.record(lhs == rhs, "quadratic", &[r], k);
        }

        for r in 1..n.saturating_sub(1) {
            let (p, q) = (&mats.psi[r - 1], &mats.psi[r]);
            let lhs = c.app(p, &c.app(q, &c.app(p, &v)));
            let rhs = c.app(q, &c.app(p, &c.app(q, &v)));
            let e = params.e as i64;
            let (a, b, cc) = (i.at(r) as i64, i.at(r + 1) as i64, i.at(r + 2) as i64);
            let correction = if cc != a {
                0
            } else if b == (a + 1) % e {
                1
            } else if a == (b + 1) % e {
                -1
            } else {
                0
            };
            let diff = lhs.sub(c.field(), &rhs);
            c.record(diff == c.scaled(&v, correction), "braid", &[r], k);
        }
    }

    check_presentation(&mut c, &params);

    KlrReport {
        params,
        field: module.field().label(),
        instances: c.instances,
        failures: c.failures,
    }
}

fn check_presentation<F: Field>(c: &mut Checker<'_, F>, params: &Params) {
    let module = c.module;
    let mats = module.matrices();
    let (n, m) = (params.n, params.m);
    let z_index = module.index_of(&LegSet::initial(m)).expect("z is a basis vector");
    let z = c.unit(z_index);

    let shape = BipartitionShape::Hook { n, m };
    let t = Tableau::column_initial(shape.clone()).expect("hook shapes are valid");
    let i_lambda = residue_sequence(&t, &params.charge());
    let e_lambda = module.idempotent(&i_lambda).expect("length n");
    c.record(c.app(&e_lambda, &z) == z, "presentation-idempotent", &[], z_index);

    for r in 1..=n {
        c.record(c.app(&mats.y[r - 1], &z).is_zero(), "presentation-y", &[r], z_index);
    }
    for r in (1..m).chain(m + 1..n) {
        c.record(c.app(&mats.psi[r - 1], &z).is_zero(), "presentation-psi", &[r], z_index);
    }
    for word in garnir_relations(&shape).expect("hook shapes are supported") {
        let w = module.apply_word(&word, &z).expect("letters in range");
        c.record(w.is_zero(), "garnir", &word.letters, z_index);
    }
}

/// Largest number of nonzero entries in any row or column of any `ψ_l`
/// matrix. The action is monomial when this is at most one.
pub fn psi_max_row_col_nnz<F: Field>(module: &HookSpechtModule<F>) -> usize {
    module
        .matrices()
        .psi
        .iter()
        .map(|m| {
            let (r, c) = m.max_row_col_nnz();
            r.max(c)
        })
        .max()
        .unwrap_or(0)
}
