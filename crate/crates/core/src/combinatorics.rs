//! Residues, tableaux and words for level-two hook bipartitions.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Quantum characteristic together with a two-component multicharge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Charge {
    pub e: u32,
    pub kappa: [u32; 2],
}

impl Charge {
    /// Multicharge entries may be any integers; they are reduced mod `e`.
    pub fn new(e: u32, kappa: (i64, i64)) -> Result<Self> {
        if e < 3 {
            return Err(Error::InvalidParams(format!("e must be at least 3, got {e}")));
        }
        let r = |x: i64| x.rem_euclid(e as i64) as u32;
        Ok(Charge { e, kappa: [r(kappa.0), r(kappa.1)] })
    }

    pub fn res(&self, x: i64) -> u32 {
        x.rem_euclid(self.e as i64) as u32
    }

    /// `kappa_2 - kappa_1` reduced mod e.
    pub fn d(&self) -> u32 {
        self.res(self.kappa[1] as i64 - self.kappa[0] as i64)
    }
}

/// Selects the Specht module of the hook bipartition `((n-m),(1^m))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub e: u32,
    pub kappa: [u32; 2],
    pub n: usize,
    pub m: usize,
}

impl Params {
    pub fn new(e: u32, kappa: (i64, i64), n: usize, m: usize) -> Result<Self> {
        let c = Charge::new(e, kappa)?;
        if n == 0 {
            return Err(Error::InvalidParams("n must be positive".into()));
        }
        if m > n {
            return Err(Error::InvalidParams(format!("leg length {m} exceeds n = {n}")));
        }
        Ok(Params { e, kappa: c.kappa, n, m })
    }

    pub fn charge(&self) -> Charge {
        Charge { e: self.e, kappa: self.kappa }
    }

    pub fn with_m(&self, m: usize) -> Result<Self> {
        Params::new(self.e, (self.kappa[0] as i64, self.kappa[1] as i64), self.n, m)
    }

    pub fn res(&self, x: i64) -> u32 {
        self.charge().res(x)
    }

    pub fn d(&self) -> u32 {
        self.charge().d()
    }

    /// True when `x` is congruent to `d + offset` mod e.
    pub fn is_d_plus(&self, x: usize, offset: i64) -> bool {
        self.res(x as i64) == self.res(self.d() as i64 + offset)
    }

    pub fn dim(&self) -> usize {
        binomial(self.n, self.m)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e={} kappa=({},{}) n={} m={}",
            self.e, self.kappa[0], self.kappa[1], self.n, self.m
        )
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A node `(row, col, component)`, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Result<Self> {
        if row == 0 || col == 0 || !(1..=2).contains(&comp) {
            return Err(Error::InvalidParams(format!("bad node ({row},{col},{comp})")));
        }
        Ok(Node { row, col, comp })
    }
}

pub fn residue(node: Node, charge: &Charge) -> u32 {
    charge.res(charge.kappa[node.comp - 1] as i64 + node.col as i64 - node.row as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BipartitionShape {
    /// `((n-m),(1^m))`
    Hook { n: usize, m: usize },
    /// `((n-m,1^m),∅)`
    ArmHook { n: usize, m: usize },
    /// `(∅,(n-m,1^m))`
    LegHook { n: usize, m: usize },
    General(Vec<usize>, Vec<usize>),
}

impl BipartitionShape {
    pub fn components(&self) -> (Vec<usize>, Vec<usize>) {
        fn hook(n: usize, m: usize) -> Vec<usize> {
            if n == 0 {
                return Vec::new();
            }
            let mut parts = vec![n - m];
            parts.extend(std::iter::repeat_n(1, m));
            parts
        }
        match self {
            BipartitionShape::Hook { n, m } => {
                let arm = if n > m { vec![n - m] } else { Vec::new() };
                (arm, vec![1; *m])
            }
            BipartitionShape::ArmHook { n, m } => (hook(*n, *m), Vec::new()),
            BipartitionShape::LegHook { n, m } => (Vec::new(), hook(*n, *m)),
            BipartitionShape::General(a, b) => (a.clone(), b.clone()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let BipartitionShape::ArmHook { n, m } | BipartitionShape::LegHook { n, m } = self {
            if m >= n {
                return Err(Error::UnsupportedShape(format!("hook ({n}-{m},1^{m}) needs m < n")));
            }
        }
        if let BipartitionShape::Hook { n, m } = self {
            if m > n {
                return Err(Error::UnsupportedShape(format!("leg {m} longer than n = {n}")));
            }
        }
        let (a, b) = self.components();
        for parts in [&a, &b] {
            if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
                return Err(Error::UnsupportedShape(format!("parts {parts:?} not a partition")));
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        let (a, b) = self.components();
        a.iter().sum::<usize>() + b.iter().sum::<usize>()
    }

    pub fn contains(&self, node: Node) -> bool {
        let (a, b) = self.components();
        let parts = if node.comp == 1 { a } else { b };
        node.row >= 1 && node.row <= parts.len() && node.col >= 1 && node.col <= parts[node.row - 1]
    }

    /// Nodes of the diagram in column-initial order: down each column, columns
    /// left to right, second component before the first.
    pub fn column_initial_nodes(&self) -> Vec<Node> {
        let (a, b) = self.components();
        let mut out = Vec::with_capacity(self.size());
        for (comp, parts) in [(2, &b), (1, &a)] {
            let width = parts.first().copied().unwrap_or(0);
            for col in 1..=width {
                for (r, len) in parts.iter().enumerate() {
                    if *len >= col {
                        out.push(Node { row: r + 1, col, comp });
                    }
                }
            }
        }
        out
    }
}

/// A one-line permutation of `1..=n`; `images[k-1]` is the image of `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Product of disjoint or overlapping cycles, rightmost applied first.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for cycle in cycles.iter().rev() {
            let distinct: HashSet<_> = cycle.iter().collect();
            if distinct.len() != cycle.len() || cycle.iter().any(|&x| x == 0 || x > n) {
                return Err(Error::InvalidParams(format!("bad cycle {cycle:?} for n = {n}")));
            }
            let mut c = Permutation::identity(n);
            for (k, &x) in cycle.iter().enumerate() {
                c.images[x - 1] = cycle[(k + 1) % cycle.len()];
            }
            p = c.compose(&p);
        }
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        Permutation { images: rhs.images.iter().map(|&k| self.apply(k)).collect() }
    }

    pub fn inversions(&self) -> usize {
        let v = &self.images;
        (0..v.len())
            .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| v[i] > v[j])
            .count()
    }
}

/// A bijection from `{1..n}` to the nodes of a shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: BipartitionShape,
    positions: Vec<Node>,
}

impl Tableau {
    /// `positions[k-1]` is the node holding entry `k`.
    pub fn from_positions(shape: BipartitionShape, positions: Vec<Node>) -> Result<Self> {
        shape.validate()?;
        if positions.len() != shape.size() {
            return Err(Error::InvalidTableau(format!(
                "{} entries for a diagram of size {}",
                positions.len(),
                shape.size()
            )));
        }
        let mut seen = HashSet::new();
        for node in &positions {
            if !shape.contains(*node) {
                return Err(Error::InvalidTableau(format!("{node:?} is not in the diagram")));
            }
            if !seen.insert(*node) {
                return Err(Error::InvalidTableau(format!("{node:?} is filled twice")));
            }
        }
        Ok(Tableau { shape, positions })
    }

    pub fn column_initial(shape: BipartitionShape) -> Result<Self> {
        let nodes = shape.column_initial_nodes();
        Tableau::from_positions(shape, nodes)
    }

    /// The hook tableau with leg entries `legs`.
    pub fn hook(n: usize, legs: &LegSet) -> Result<Self> {
        let m = legs.len();
        let mut positions = vec![Node { row: 0, col: 0, comp: 0 }; n];
        let mut arm_col = 0;
        for k in 1..=n {
            positions[k - 1] = match legs.position(k) {
                Some(r) => Node { row: r + 1, col: 1, comp: 2 },
                None => {
                    arm_col += 1;
                    Node { row: 1, col: arm_col, comp: 1 }
                }
            };
        }
        Tableau::from_positions(BipartitionShape::Hook { n, m }, positions)
    }

    pub fn shape(&self) -> &BipartitionShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    pub fn node_of(&self, k: usize) -> Node {
        self.positions[k - 1]
    }

    pub fn entry_at(&self, node: Node) -> Option<usize> {
        self.positions.iter().position(|p| *p == node).map(|i| i + 1)
    }

    /// `w t`: the entry `k` is replaced by `w(k)`.
    pub fn permuted(&self, w: &Permutation) -> Result<Self> {
        if w.size() != self.size() {
            return Err(Error::DimensionMismatch { expected: self.size(), found: w.size() });
        }
        let mut positions = self.positions.clone();
        for k in 1..=self.size() {
            positions[w.apply(k) - 1] = self.positions[k - 1];
        }
        Ok(Tableau { shape: self.shape.clone(), positions })
    }

    pub fn is_standard(&self) -> bool {
        self.positions.iter().enumerate().all(|(k, node)| {
            let right = Node { col: node.col + 1, ..*node };
            let below = Node { row: node.row + 1, ..*node };
            [right, below]
                .into_iter()
                .filter(|nb| self.shape.contains(*nb))
                .all(|nb| self.entry_at(nb).unwrap() > k + 1)
        })
    }

    /// Whether `r+1` sits directly right of, or directly below, `r`.
    pub fn adjacent_in_row_or_column(&self, r: usize) -> bool {
        let (a, b) = (self.node_of(r), self.node_of(r + 1));
        a.comp == b.comp
            && ((a.row == b.row && a.col + 1 == b.col) || (a.col == b.col && a.row + 1 == b.row))
    }

    /// The leg set of a standard hook tableau.
    pub fn leg_set(&self) -> Option<LegSet> {
        match self.shape {
            BipartitionShape::Hook { .. } => {
                let mut legs: Vec<usize> = (1..=self.size())
                    .filter(|&k| self.node_of(k).comp == 2)
                    .collect();
                legs.sort_by_key(|&k| self.node_of(k).row);
                Some(LegSet(legs))
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResidueSeq(pub Vec<u32>);

impl ResidueSeq {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The sequence with positions `r` and `r+1` (1-based) exchanged.
    pub fn swapped(&self, r: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(r - 1, r);
        ResidueSeq(v)
    }

    /// Residue at 1-based position `k`.
    pub fn at(&self, k: usize) -> u32 {
        self.0[k - 1]
    }
}

impl fmt::Display for ResidueSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn residue_sequence(tableau: &Tableau, charge: &Charge) -> ResidueSeq {
    ResidueSeq((1..=tableau.size()).map(|k| residue(tableau.node_of(k), charge)).collect())
}

/// Sorted leg entries `a_1 < ... < a_m` of a standard hook tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LegSet(Vec<usize>);

impl LegSet {
    pub fn new(entries: Vec<usize>, n: usize, m: usize) -> Result<Self> {
        let ok = entries.len() == m
            && entries.windows(2).all(|w| w[0] < w[1])
            && entries.iter().all(|&a| a >= 1 && a <= n);
        if ok {
            Ok(LegSet(entries))
        } else {
            Err(Error::InvalidLegSet { legs: entries, n, m })
        }
    }

    /// Caller guarantees the entries are strictly increasing.
    pub(crate) fn from_sorted(entries: Vec<usize>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        LegSet(entries)
    }

    /// `{1, ..., m}`, the leg set of the column-initial tableau.
    pub fn initial(m: usize) -> Self {
        LegSet((1..=m).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// 0-based position of `x` among the leg entries.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.0.binary_search(&x).ok()
    }

    /// `a_r`, 1-based.
    pub fn a(&self, r: usize) -> usize {
        self.0[r - 1]
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Replace the entry `old` by `new`. The caller keeps the result sorted.
    pub fn replaced(&self, old: usize, new: usize) -> Self {
        LegSet(self.0.iter().map(|&a| if a == old { new } else { a }).collect())
    }

    pub fn with(&self, x: usize) -> Self {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&x) {
            v.insert(pos, x);
        }
        LegSet(v)
    }

    pub fn without(&self, x: usize) -> Self {
        LegSet(self.0.iter().copied().filter(|&a| a != x).collect())
    }
}

impl fmt::Display for LegSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "v({})", parts.join(","))
    }
}

/// Closed form: the `j`-th leg entry has residue `kappa_2 + 1 - j`, the `k`-th
/// arm entry has residue `kappa_1 + k - 1`.
pub fn residue_sequence_hook(params: &Params, legs: &LegSet) -> Result<ResidueSeq> {
    LegSet::new(legs.0.clone(), params.n, params.m)?;
    let (k1, k2) = (params.kappa[0] as i64, params.kappa[1] as i64);
    let mut arm = 0i64;
    let seq = (1..=params.n)
        .map(|x| match legs.position(x) {
            Some(j) => params.res(k2 - j as i64),
            None => {
                arm += 1;
                params.res(k1 + arm - 1)
            }
        })
        .collect();
    Ok(ResidueSeq(seq))
}

/// All `m`-subsets of `{1..n}` in lexicographic order.
pub fn enumerate_standard_hook(params: &Params) -> Vec<LegSet> {
    let (n, m) = (params.n, params.m);
    let mut out = Vec::with_capacity(binomial(n, m));
    let mut cur: Vec<usize> = (1..=m).collect();
    loop {
        out.push(LegSet(cur.clone()));
        let Some(pos) = (0..m).rev().find(|&i| cur[i] < n - (m - 1 - i)) else {
            break;
        };
        cur[pos] += 1;
        for j in pos + 1..m {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// A signed product `±ψ_{r_1} ψ_{r_2} ... ψ_{r_k}`. Letters are stored in
/// written order, so the last letter acts first on a vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenWord {
    pub sign: i8,
    pub letters: Vec<usize>,
}

impl GenWord {
    pub fn identity() -> Self {
        GenWord { sign: 1, letters: Vec::new() }
    }

    pub fn new(sign: i8, letters: Vec<usize>) -> Self {
        GenWord { sign: if sign < 0 { -1 } else { 1 }, letters }
    }

    /// `ψ_i ψ_{i+1} ... ψ_j`, empty when `j < i`.
    pub fn up(i: usize, j: usize) -> Self {
        GenWord::new(1, (i..=j).collect())
    }

    /// `ψ_j ψ_{j-1} ... ψ_i`, empty when `j < i`.
    pub fn down(j: usize, i: usize) -> Self {
        GenWord::new(1, (i..=j).rev().collect())
    }

    pub fn then(mut self, rhs: GenWord) -> Self {
        self.sign *= rhs.sign;
        self.letters.extend(rhs.letters);
        self
    }

    pub fn negated(mut self) -> Self {
        self.sign = -self.sign;
        self
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.letters.iter().find(|&&r| r == 0 || r >= n) {
            Some(&r) => Err(Error::GeneratorOutOfRange { index: r, max: n.saturating_sub(1) }),
            None => Ok(()),
        }
    }

    /// The permutation `s_{r_1} ... s_{r_k}` of `{1..size}`.
    pub fn permutation(&self, size: usize) -> Permutation {
        let mut p = Permutation::identity(size);
        for &r in &self.letters {
            // right multiplication by s_r
            p.images.swap(r - 1, r);
        }
        p
    }

    fn natural_size(&self) -> usize {
        self.letters.iter().max().map_or(1, |r| r + 1)
    }

    pub fn is_reduced(&self) -> bool {
        self.permutation(self.natural_size()).inversions() == self.len()
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|r| format!("psi{r}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `w_t = (s_{a_1-1}...s_1)(s_{a_2-1}...s_2)...(s_{a_m-1}...s_m)`.
pub fn leg_word(legs: &LegSet) -> GenWord {
    legs.0
        .iter()
        .enumerate()
        .fold(GenWord::identity(), |w, (j, &a)| w.then(GenWord::down(a - 1, j + 1)))
}

/// Words annihilating the Specht generator beyond the column relations.
pub fn garnir_relations(shape: &BipartitionShape) -> Result<Vec<GenWord>> {
    match *shape {
        BipartitionShape::Hook { n, m } if m <= n => Ok((1..n.saturating_sub(m))
            .map(|i| GenWord::new(1, vec![m + i]))
            .collect()),
        BipartitionShape::ArmHook { n, m } | BipartitionShape::LegHook { n, m } if m < n => {
            let mut words: Vec<GenWord> = (1..=n.saturating_sub(m + 2))
                .map(|i| GenWord::new(1, vec![m + i + 1]))
                .collect();
            if m + 1 < n {
                words.push(GenWord::up(1, m + 1));
            }
            Ok(words)
        }
        _ => Err(Error::UnsupportedShape(format!("{shape:?}"))),
    }
}

/// Bruhat order by subword search. Both words must be reduced.
pub fn bruhat_leq(u: &GenWord, w: &GenWord) -> Result<bool> {
    for word in [u, w] {
        if !word.is_reduced() {
            return Err(Error::NotReduced(word.letters.clone()));
        }
    }
    let size = u.natural_size().max(w.natural_size());
    let target = u.permutation(size);
    let k = u.len();
    if k > w.len() {
        return Ok(false);
    }
    let mut chosen: Vec<usize> = (0..k).collect();
    loop {
        let sub = GenWord::new(1, chosen.iter().map(|&i| w.letters[i]).collect());
        if sub.permutation(size) == target {
            return Ok(true);
        }
        let len = w.len();
        let Some(pos) = (0..k).rev().find(|&i| chosen[i] < len - (k - i)) else {
            return Ok(false);
        };
        chosen[pos] += 1;
        for j in pos + 1..k {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(e: u32, k: (i64, i64), n: usize, m: usize) -> Params {
        Params::new(e, k, n, m).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(Params::new(2, (0, 0), 3, 1).is_err());
        assert!(Params::new(3, (0, 0), 3, 4).is_err());
        assert_eq!(p(3, (-1, 5), 4, 1).kappa, [2, 2]);
        assert_eq!(p(4, (1, 0), 4, 1).d(), 3);
    }

    #[test]
    fn single_node_residues() {
        let c = Charge::new(3, (0, 1)).unwrap();
        assert_eq!(residue(Node::new(1, 1, 2).unwrap(), &c), 1);
        assert_eq!(residue(Node::new(1, 1, 1).unwrap(), &c), 0);
        assert_eq!(residue(Node::new(3, 1, 2).unwrap(), &c), 2);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = enumerate_standard_hook(&p(3, (0, 0), 5, 3));
        assert_eq!(all.len(), 10);
        assert_eq!(all[0].entries(), &[1, 2, 3]);
        assert_eq!(all[9].entries(), &[3, 4, 5]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_standard_hook(&p(3, (0, 0), 5, 0)), vec![LegSet::initial(0)]);
    }

    #[test]
    fn leg_words() {
        assert!(leg_word(&LegSet::initial(3)).is_empty());
        assert_eq!(leg_word(&LegSet(vec![2])).letters, vec![1]);
        assert_eq!(leg_word(&LegSet(vec![1, 3, 5])).letters, vec![2, 4, 3]);
    }

    #[test]
    fn garnir_words() {
        let hook = garnir_relations(&BipartitionShape::Hook { n: 5, m: 2 }).unwrap();
        assert_eq!(hook, vec![GenWord::new(1, vec![3]), GenWord::new(1, vec![4])]);
        let arm = garnir_relations(&BipartitionShape::ArmHook { n: 5, m: 1 }).unwrap();
        assert_eq!(
            arm,
            vec![GenWord::new(1, vec![3]), GenWord::new(1, vec![4]), GenWord::new(1, vec![1, 2])]
        );
        assert!(garnir_relations(&BipartitionShape::Hook { n: 5, m: 4 }).unwrap().is_empty());
        assert!(garnir_relations(&BipartitionShape::General(vec![2], vec![1])).is_err());
    }

    #[test]
    fn bruhat_small_cases() {
        let id = GenWord::identity();
        let w12 = GenWord::new(1, vec![1, 2]);
        let w21 = GenWord::new(1, vec![2, 1]);
        assert!(bruhat_leq(&id, &w12).unwrap());
        assert!(bruhat_leq(&GenWord::new(1, vec![1]), &w12).unwrap());
        assert!(!bruhat_leq(&w12, &w21).unwrap());
        assert!(!bruhat_leq(&w21, &w12).unwrap());
        assert!(bruhat_leq(&GenWord::new(1, vec![1, 1]), &w12).is_err());
    }

    #[test]
    fn cycles_compose_right_to_left() {
        let w = Permutation::from_cycles(4, &[vec![1, 2], vec![2, 3]]).unwrap();
        // (1 2)(2 3): 3 -> 2 -> 1
        assert_eq!(w.apply(3), 1);
        assert!(Permutation::from_cycles(3, &[vec![1, 1]]).is_err());
    }

    #[test]
    fn hook_tableau_round_trip() {
        let legs = LegSet(vec![2, 4]);
        let t = Tableau::hook(5, &legs).unwrap();
        assert!(t.is_standard());
        assert_eq!(t.leg_set().unwrap(), legs);
    }
}
