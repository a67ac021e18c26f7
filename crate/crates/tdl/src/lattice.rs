//! Periodic labelings of the infinite square, hexagonal, triangular and
//! cubic lattices, plus the infinite binary tree rule map.
//!
//! A periodic labeling stores labels on one fundamental domain of a
//! translation sublattice `L` of `Z^d`; validating every vertex of the
//! domain against its full (coordinate-reduced) neighborhood certifies the
//! infinite labeling by translation invariance.

// Column operations index two arrays at once; iterator forms read worse.
#![allow(clippy::needless_range_loop)]

use crate::labeling::ViolationKind;
use crate::wsr;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

pub type Coord = [i64; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    SingularBasis,
    /// Basis translations must leave the neighbor rule invariant (the
    /// hexagonal rule depends on coordinate parity).
    BasisBreaksNeighborRule(Coord),
    /// The provided labels do not hit every residue class exactly once.
    DomainMismatch(String),
    NonPositiveLabel(Coord),
    DomainTooLarge { cells: usize, max: usize },
    OutOfComputedRange(String),
    Parse { line: usize, message: String },
    BudgetExceeded,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::SingularBasis => write!(f, "basis matrix is singular"),
            LatticeError::BasisBreaksNeighborRule(t) => {
                write!(f, "translation {t:?} does not preserve the neighbor rule")
            }
            LatticeError::DomainMismatch(msg) => write!(f, "fundamental domain mismatch: {msg}"),
            LatticeError::NonPositiveLabel(c) => write!(f, "label at {c:?} must be positive"),
            LatticeError::DomainTooLarge { cells, max } => {
                write!(f, "domain of {cells} cells exceeds the supported {max}")
            }
            LatticeError::OutOfComputedRange(msg) => write!(f, "{msg}"),
            LatticeError::Parse { line, message } => {
                write!(f, "parse error on line {line}: {message}")
            }
            LatticeError::BudgetExceeded => write!(f, "time budget exceeded"),
        }
    }
}

impl std::error::Error for LatticeError {}

/// The four infinite lattices.
///
/// All live on integer coordinates. The hexagonal lattice is the
/// brick-wall subgraph of the square lattice: the vertical edge from
/// `(x, y)` to `(x, y+1)` is present iff `x + y` is even. The triangular
/// lattice adds the `(1, 1)` diagonal to the square lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LatticeModel {
    Square,
    Hexagonal,
    Triangular,
    Cubic,
}

impl LatticeModel {
    pub fn dim(self) -> usize {
        match self {
            LatticeModel::Cubic => 3,
            _ => 2,
        }
    }

    pub fn degree(self) -> usize {
        match self {
            LatticeModel::Square => 4,
            LatticeModel::Hexagonal => 3,
            LatticeModel::Triangular | LatticeModel::Cubic => 6,
        }
    }

    pub fn parse(name: &str) -> Option<LatticeModel> {
        match name {
            "square" => Some(LatticeModel::Square),
            "hex" | "hexagonal" => Some(LatticeModel::Hexagonal),
            "triangular" | "tri" => Some(LatticeModel::Triangular),
            "cubic" => Some(LatticeModel::Cubic),
            _ => None,
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            LatticeModel::Square => "square",
            LatticeModel::Hexagonal => "hexagonal",
            LatticeModel::Triangular => "triangular",
            LatticeModel::Cubic => "cubic",
        }
    }

    /// Neighbors of `c` in the infinite graph. Symmetric by construction.
    pub fn neighbors(self, c: Coord) -> Vec<Coord> {
        let [x, y, z] = c;
        match self {
            LatticeModel::Square => {
                vec![[x - 1, y, 0], [x + 1, y, 0], [x, y - 1, 0], [x, y + 1, 0]]
            }
            LatticeModel::Triangular => vec![
                [x - 1, y, 0],
                [x + 1, y, 0],
                [x, y - 1, 0],
                [x, y + 1, 0],
                [x + 1, y + 1, 0],
                [x - 1, y - 1, 0],
            ],
            LatticeModel::Hexagonal => {
                let mut out = vec![[x - 1, y, 0], [x + 1, y, 0]];
                if (x + y).rem_euclid(2) == 0 {
                    out.push([x, y + 1, 0]);
                } else {
                    out.push([x, y - 1, 0]);
                }
                out
            }
            LatticeModel::Cubic => vec![
                [x - 1, y, z],
                [x + 1, y, z],
                [x, y - 1, z],
                [x, y + 1, z],
                [x, y, z - 1],
                [x, y, z + 1],
            ],
        }
    }

    /// Half of the neighbor offsets, one per undirected edge orbit; each
    /// infinite edge is counted exactly once when scanning a fundamental
    /// domain with these.
    fn forward_neighbors(self, c: Coord) -> Vec<Coord> {
        let [x, y, z] = c;
        match self {
            LatticeModel::Square => vec![[x + 1, y, 0], [x, y + 1, 0]],
            LatticeModel::Triangular => vec![[x + 1, y, 0], [x, y + 1, 0], [x + 1, y + 1, 0]],
            LatticeModel::Hexagonal => {
                let mut out = vec![[x + 1, y, 0]];
                if (x + y).rem_euclid(2) == 0 {
                    out.push([x, y + 1, 0]);
                }
                out
            }
            LatticeModel::Cubic => vec![[x + 1, y, z], [x, y + 1, z], [x, y, z + 1]],
        }
    }

    /// Whether translating by `t` preserves the neighbor rule.
    pub fn translation_ok(self, t: Coord) -> bool {
        match self {
            LatticeModel::Hexagonal => (t[0] + t[1]).rem_euclid(2) == 0,
            _ => true,
        }
    }
}

/// Integer basis whose columns generate the translation sublattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basis {
    pub dim: usize,
    /// `cols[j]` is the j-th generator; unused entries are zero.
    pub cols: [Coord; 3],
}

impl Basis {
    pub fn new_2d(c0: [i64; 2], c1: [i64; 2]) -> Basis {
        Basis { dim: 2, cols: [[c0[0], c0[1], 0], [c1[0], c1[1], 0], [0, 0, 0]] }
    }

    pub fn new_3d(c0: Coord, c1: Coord, c2: Coord) -> Basis {
        Basis { dim: 3, cols: [c0, c1, c2] }
    }

    pub fn det(&self) -> i64 {
        let c = &self.cols;
        match self.dim {
            2 => c[0][0] * c[1][1] - c[1][0] * c[0][1],
            3 => {
                c[0][0] * (c[1][1] * c[2][2] - c[2][1] * c[1][2])
                    - c[1][0] * (c[0][1] * c[2][2] - c[2][1] * c[0][2])
                    + c[2][0] * (c[0][1] * c[1][2] - c[1][1] * c[0][2])
            }
            _ => 0,
        }
    }

    /// Lower-triangular column Hermite form of the same lattice: column `j`
    /// has zeros in rows above `j` and a positive diagonal. Residues then
    /// reduce coordinate by coordinate into the diagonal box.
    fn hermite(&self) -> Result<Basis, LatticeError> {
        if self.det() == 0 {
            return Err(LatticeError::SingularBasis);
        }
        let d = self.dim;
        let mut cols: Vec<Coord> = self.cols[..d].to_vec();
        for row in 0..d {
            // Eliminate row entries right of the pivot column by gcd steps.
            for j in row + 1..d {
                while cols[j][row] != 0 {
                    if cols[row][row] == 0 {
                        cols.swap(row, j);
                        continue;
                    }
                    let q = cols[j][row].div_euclid(cols[row][row]);
                    for r in 0..3 {
                        cols[j][r] -= q * cols[row][r];
                    }
                    if cols[j][row] != 0 {
                        cols.swap(row, j);
                    }
                }
            }
            if cols[row][row] < 0 {
                for r in 0..3 {
                    cols[row][r] = -cols[row][r];
                }
            }
        }
        let mut out = [[0i64; 3]; 3];
        out[..d].copy_from_slice(&cols);
        Ok(Basis { dim: d, cols: out })
    }
}

/// Labels on a fundamental domain of `Z^dim / L`, extended to all of
/// `Z^dim` by `L`-periodicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicLabeling {
    basis: Basis,
    hermite: Basis,
    labels: BTreeMap<Coord, u32>,
}

impl PeriodicLabeling {
    /// Builds a labeling from any transversal of the residue classes; the
    /// provided coordinates are reduced and must cover `Z^dim / L` exactly.
    pub fn new(
        basis: Basis,
        labels: impl IntoIterator<Item = (Coord, u32)>,
    ) -> Result<PeriodicLabeling, LatticeError> {
        let hermite = basis.hermite()?;
        let cells = basis.det().unsigned_abs() as usize;
        let mut reduced: BTreeMap<Coord, u32> = BTreeMap::new();
        for (c, label) in labels {
            if label == 0 {
                return Err(LatticeError::NonPositiveLabel(c));
            }
            let r = reduce(&hermite, c);
            if reduced.insert(r, label).is_some() {
                return Err(LatticeError::DomainMismatch(format!(
                    "{c:?} duplicates residue class {r:?}"
                )));
            }
        }
        if reduced.len() != cells {
            return Err(LatticeError::DomainMismatch(format!(
                "{} labels supplied for {} residue classes",
                reduced.len(),
                cells
            )));
        }
        Ok(PeriodicLabeling { basis, hermite, labels: reduced })
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn domain_size(&self) -> usize {
        self.labels.len()
    }

    /// Canonical residue representatives and their labels.
    pub fn cells(&self) -> impl Iterator<Item = (Coord, u32)> + '_ {
        self.labels.iter().map(|(&c, &l)| (c, l))
    }

    pub fn label_at(&self, c: Coord) -> u32 {
        self.labels[&reduce(&self.hermite, c)]
    }

    pub fn max_label(&self) -> u32 {
        self.labels.values().copied().max().unwrap_or(0)
    }
}

/// Reduces `v` modulo the lattice into the Hermite diagonal box.
fn reduce(hermite: &Basis, mut v: Coord) -> Coord {
    for i in 0..hermite.dim {
        let pivot = hermite.cols[i][i];
        let q = v[i].div_euclid(pivot);
        for r in 0..3 {
            v[r] -= q * hermite.cols[i][r];
        }
    }
    v
}

/// A violation of the infinite labeling, witnessed by lattice coordinates
/// (middle vertex second for the triple patterns).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeViolation {
    pub kind: ViolationKind,
    pub witness: Vec<Coord>,
}

fn check_basis(model: LatticeModel, basis: &Basis) -> Result<(), LatticeError> {
    for j in 0..basis.dim {
        if !model.translation_ok(basis.cols[j]) {
            return Err(LatticeError::BasisBreaksNeighborRule(basis.cols[j]));
        }
    }
    Ok(())
}

/// Validates the infinite labeling by checking one fundamental domain:
/// every edge orbit (adjacent-equal, double) and every path orbit through a
/// domain vertex (sandwich, staircase). An empty result certifies the
/// infinite labeling by translation invariance.
pub fn validate_periodic(
    model: LatticeModel,
    p: &PeriodicLabeling,
) -> Result<Vec<LatticeViolation>, LatticeError> {
    if model.dim() != p.basis.dim {
        return Err(LatticeError::DomainMismatch(format!(
            "{} lattice is {}-dimensional, basis is {}-dimensional",
            model.id(),
            model.dim(),
            p.basis.dim
        )));
    }
    check_basis(model, &p.basis)?;
    let mut out = Vec::new();
    for (v, fv) in p.cells() {
        for u in model.forward_neighbors(v) {
            let fu = p.label_at(u);
            if fv == fu {
                out.push(LatticeViolation {
                    kind: ViolationKind::AdjacentEqual,
                    witness: vec![v, u],
                });
            }
            if fv == 2 * fu || fu == 2 * fv {
                out.push(LatticeViolation { kind: ViolationKind::Double, witness: vec![v, u] });
            }
        }
        let nbrs = model.neighbors(v);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                let (fa, fb) = (p.label_at(a), p.label_at(b));
                if fa == fb {
                    out.push(LatticeViolation {
                        kind: ViolationKind::Sandwich,
                        witness: vec![a, v, b],
                    });
                } else if fa + fb == 2 * fv {
                    out.push(LatticeViolation {
                        kind: ViolationKind::Staircase,
                        witness: vec![a, v, b],
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The row labeling `f(v) = row[(coeffs . v) mod row.len()]`.
///
/// The periodic domain uses the kernel sublattice of the functional,
/// coarsened on the hexagonal lattice so its translations respect parity.
pub fn linear_functional_labeling(
    model: LatticeModel,
    row: &[u32],
    coeffs: &[i64],
) -> Result<PeriodicLabeling, LatticeError> {
    assert!(!row.is_empty(), "row must be nonempty");
    assert_eq!(coeffs.len(), model.dim(), "one coefficient per dimension");
    let m = row.len() as i64;
    let dim = model.dim();
    // Kernel lattice of v -> coeffs.v mod m, in Hermite-like column form:
    // (m, 0, 0), (-c1, 1, 0) scaled, (-c2, 0, 1) scaled... adjusted for the
    // leading coefficient. With coeffs[0] coprime to m this has index m;
    // in general fall back to the diagonal lattice m * I.
    let g = gcd(coeffs[0].rem_euclid(m), m);
    let mut basis = if g == 1 {
        // x-translation by m, and for each later axis a vector canceling
        // its coefficient against axis 0: c0 * a + ci == 0 mod m.
        let inv = mod_inverse(coeffs[0].rem_euclid(m), m).expect("coprime");
        let mut cols = [[0i64; 3]; 3];
        cols[0] = [m, 0, 0];
        for axis in 1..dim {
            let a = (-(coeffs[axis]) * inv).rem_euclid(m);
            cols[axis][0] = a;
            cols[axis][axis] = 1;
        }
        Basis { dim, cols }
    } else {
        let mut cols = [[0i64; 3]; 3];
        for (axis, col) in cols.iter_mut().enumerate().take(dim) {
            col[axis] = m;
        }
        Basis { dim, cols }
    };
    if model == LatticeModel::Hexagonal {
        // Coarsen to the parity-preserving sublattice: double any
        // generator with odd coordinate sum (after trying sums of pairs).
        let mut cols = basis.cols;
        for j in 0..dim {
            if !model.translation_ok(cols[j]) {
                // Try absorbing another odd generator first.
                let partner =
                    (0..dim).find(|&i| i != j && !model.translation_ok(cols[i]));
                if let Some(i) = partner {
                    for r in 0..3 {
                        cols[j][r] += cols[i][r];
                    }
                } else {
                    for r in 0..3 {
                        cols[j][r] *= 2;
                    }
                }
            }
        }
        basis = Basis { dim, cols };
    }
    let hermite = basis.hermite()?;
    let mut labels = Vec::new();
    for_each_box_cell(&hermite, |c| {
        let dot: i64 = (0..dim).map(|i| coeffs[i] * c[i]).sum();
        labels.push((c, row[dot.rem_euclid(m) as usize]));
    });
    PeriodicLabeling::new(basis, labels)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m, a.rem_euclid(m));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        None
    } else {
        Some(t.rem_euclid(m))
    }
}

fn for_each_box_cell(hermite: &Basis, mut f: impl FnMut(Coord)) {
    let d0 = hermite.cols[0][0];
    let d1 = if hermite.dim >= 2 { hermite.cols[1][1] } else { 1 };
    let d2 = if hermite.dim >= 3 { hermite.cols[2][2] } else { 1 };
    for x in 0..d0 {
        for y in 0..d1 {
            for z in 0..d2 {
                f([x, y, z]);
            }
        }
    }
}

/// Result of a periodic search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeriodicSearchOutcome {
    Found(PeriodicLabeling),
    NoneForBasis,
    BudgetExceeded,
}

/// Largest fundamental domain accepted by [`search_periodic`].
pub const MAX_SEARCH_CELLS: usize = 36;

/// Searches for a periodic labeling with labels `<= k` on the given basis,
/// by depth-first assignment over the fundamental domain with incremental
/// checking against the reduced neighborhood.
pub fn search_periodic(
    model: LatticeModel,
    k: u32,
    basis: &Basis,
    budget: Option<Duration>,
) -> Result<PeriodicSearchOutcome, LatticeError> {
    check_basis(model, basis)?;
    let hermite = basis.hermite()?;
    let cells_count = basis.det().unsigned_abs() as usize;
    if cells_count > MAX_SEARCH_CELLS {
        return Err(LatticeError::DomainTooLarge { cells: cells_count, max: MAX_SEARCH_CELLS });
    }
    let mut cells: Vec<Coord> = Vec::with_capacity(cells_count);
    for_each_box_cell(&hermite, |c| cells.push(c));
    let index: BTreeMap<Coord, usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let deadline = budget.map(|b| Instant::now() + b);

    struct Ctx<'a> {
        model: LatticeModel,
        hermite: &'a Basis,
        cells: &'a [Coord],
        index: &'a BTreeMap<Coord, usize>,
        labels: Vec<u32>,
        deadline: Option<Instant>,
        timed_out: bool,
        tick: u32,
    }
    impl Ctx<'_> {
        fn get(&self, c: Coord) -> u32 {
            self.labels[self.index[&reduce(self.hermite, c)]]
        }
        /// Checks every constraint whose last participant is `v`.
        fn consistent(&self, v: Coord) -> bool {
            let fv = self.get(v);
            let nbrs = self.model.neighbors(v);
            for (i, &a) in nbrs.iter().enumerate() {
                let fa = self.get(a);
                if fa != 0 {
                    if fa == fv || fa == 2 * fv || fv == 2 * fa {
                        return false;
                    }
                    // v as an endpoint: paths v - a - w.
                    for w in self.model.neighbors(a) {
                        if w == v {
                            continue;
                        }
                        let fw = self.get(w);
                        if fw != 0 && (fw == fv || fv + fw == 2 * fa) {
                            return false;
                        }
                    }
                }
                // v as the middle of a - v - b.
                if fa != 0 {
                    for &b in &nbrs[i + 1..] {
                        let fb = self.get(b);
                        if fb != 0 && (fa == fb || fa + fb == 2 * fv) {
                            return false;
                        }
                    }
                }
            }
            true
        }
        fn dfs(&mut self, depth: usize, k: u32) -> bool {
            if self.timed_out {
                return false;
            }
            self.tick = self.tick.wrapping_add(1);
            if self.tick.is_multiple_of(256) {
                if let Some(d) = self.deadline {
                    if Instant::now() >= d {
                        self.timed_out = true;
                        return false;
                    }
                }
            }
            if depth == self.cells.len() {
                return true;
            }
            for a in 1..=k {
                self.labels[depth] = a;
                if self.consistent(self.cells[depth]) && self.dfs(depth + 1, k) {
                    return true;
                }
            }
            self.labels[depth] = 0;
            false
        }
    }

    let mut ctx = Ctx {
        model,
        hermite: &hermite,
        cells: &cells,
        index: &index,
        labels: vec![0; cells_count],
        deadline,
        timed_out: false,
        tick: 0,
    };
    if ctx.dfs(0, k) {
        let labeled = cells.iter().map(|&c| (c, ctx.labels[index[&c]]));
        let p = PeriodicLabeling::new(*basis, labeled.collect::<Vec<_>>())?;
        debug_assert!(validate_periodic(model, &p)?.is_empty());
        Ok(PeriodicSearchOutcome::Found(p))
    } else if ctx.timed_out {
        Ok(PeriodicSearchOutcome::BudgetExceeded)
    } else {
        Ok(PeriodicSearchOutcome::NoneForBasis)
    }
}

/// All 2D sublattice bases in Hermite normal form with at most `max_cells`
/// residue classes, filtered to translations the model permits.
pub fn enumerate_bases(model: LatticeModel, max_cells: usize) -> Vec<Basis> {
    assert_eq!(model.dim(), 2, "basis enumeration is two-dimensional");
    let mut out = Vec::new();
    for a in 1..=max_cells as i64 {
        for b in 1..=(max_cells as i64) / a {
            for c in 0..a {
                let basis = Basis::new_2d([a, 0], [c, b]);
                if check_basis(model, &basis).is_ok() {
                    out.push(basis);
                }
            }
        }
    }
    out
}

/// Rule map for labeling the infinite complete binary tree: the root label
/// and, per label, the unordered pair of child labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRuleMap {
    pub root: u32,
    pub rules: BTreeMap<u32, (u32, u32)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TreeViolationKind {
    /// A reachable label has no rule.
    MissingRule,
    /// Both children of some vertex would share a label.
    EqualChildren,
    AdjacentEqual,
    Double,
    /// Two incident edges at a vertex would share a difference
    /// (a sandwich or staircase through that vertex).
    EqualEdgeDifference,
}

/// A violation of the tree rule map; the witness lists the labels of the
/// local configuration involved.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TreeViolation {
    pub kind: TreeViolationKind,
    pub witness: Vec<u32>,
}

/// Certifies the infinite tree labeling generated by a rule map.
///
/// Closure first: every label reachable from the root must have a rule.
/// Then every realizable local configuration is checked: a vertex's
/// neighborhood is determined by (parent label, own label), so the finite
/// rule graph covers the infinite tree.
pub fn validate_tree_rulemap(t: &TreeRuleMap) -> Vec<TreeViolation> {
    let mut out = Vec::new();
    // Reachability closure.
    let mut reachable = vec![t.root];
    let mut seen: std::collections::BTreeSet<u32> = [t.root].into();
    let mut i = 0;
    while i < reachable.len() {
        let l = reachable[i];
        i += 1;
        match t.rules.get(&l) {
            None => out.push(TreeViolation { kind: TreeViolationKind::MissingRule, witness: vec![l] }),
            Some(&(a, b)) => {
                for c in [a, b] {
                    if seen.insert(c) {
                        reachable.push(c);
                    }
                }
            }
        }
    }
    if !out.is_empty() {
        out.sort();
        out.dedup();
        return out; // configurations below are not well-defined without closure
    }

    let mut check_config = |parent: Option<u32>, own: u32| {
        let (a, b) = t.rules[&own];
        if a == b {
            out.push(TreeViolation {
                kind: TreeViolationKind::EqualChildren,
                witness: vec![own, a, b],
            });
        }
        let mut incident: Vec<u32> = vec![a, b];
        if let Some(p) = parent {
            incident.push(p);
        }
        for &other in &incident {
            if other == own {
                out.push(TreeViolation {
                    kind: TreeViolationKind::AdjacentEqual,
                    witness: vec![own, other],
                });
            }
            if other == 2 * own || own == 2 * other {
                out.push(TreeViolation { kind: TreeViolationKind::Double, witness: vec![own, other] });
            }
        }
        for (i, &x) in incident.iter().enumerate() {
            for &y in &incident[i + 1..] {
                if x.abs_diff(own) == y.abs_diff(own) {
                    out.push(TreeViolation {
                        kind: TreeViolationKind::EqualEdgeDifference,
                        witness: vec![x, own, y],
                    });
                }
            }
        }
    };

    check_config(None, t.root);
    // Realizable (parent, child) pairs: every rule entry can occur at
    // arbitrary depth, so check all of them.
    for (&parent, &(a, b)) in &t.rules {
        for child in [a, b] {
            check_config(Some(parent), child);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `E(delta^2 + 1)`: an upper bound on `chi_td` for any countable graph of
/// maximum degree `delta`, obtained by labeling greedily from a minimal
/// well-spaced row large enough to clear every radius-2 neighborhood.
pub fn generic_infinite_upper_bound(delta: usize) -> Result<u64, LatticeError> {
    const MAX_STATS: usize = 20;
    let needed = delta * delta + 1;
    if delta < 1 || needed > MAX_STATS {
        return Err(LatticeError::OutOfComputedRange(format!(
            "need E({needed}), computed table stops at E({MAX_STATS})"
        )));
    }
    Ok(wsr::chi_td_complete(needed))
}

/// Plain-text fixture format: `dim`, `basis` (columns, row-major within
/// each column), then one `x y [z] label` line per domain cell.
pub fn parse_fixture(text: &str) -> Result<(Basis, Vec<(Coord, u32)>), LatticeError> {
    let mut dim: Option<usize> = None;
    let mut basis: Option<Basis> = None;
    let mut labels: Vec<(Coord, u32)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let head = tokens.next().unwrap();
        let parse_i64 = |tok: Option<&str>, what: &str| -> Result<i64, LatticeError> {
            tok.ok_or_else(|| LatticeError::Parse { line, message: format!("missing {what}") })?
                .parse()
                .map_err(|_| LatticeError::Parse { line, message: format!("invalid {what}") })
        };
        match head {
            "dim" => {
                let d = parse_i64(tokens.next(), "dimension")?;
                if d != 2 && d != 3 {
                    return Err(LatticeError::Parse { line, message: "dim must be 2 or 3".into() });
                }
                dim = Some(d as usize);
            }
            "basis" => {
                let d = dim.ok_or(LatticeError::Parse {
                    line,
                    message: "dim must precede basis".into(),
                })?;
                let mut cols = [[0i64; 3]; 3];
                for col in cols.iter_mut().take(d) {
                    for entry in col.iter_mut().take(d) {
                        *entry = parse_i64(tokens.next(), "basis entry")?;
                    }
                }
                basis = Some(Basis { dim: d, cols });
            }
            _ => {
                let d = dim.ok_or(LatticeError::Parse {
                    line,
                    message: "dim must precede cells".into(),
                })?;
                let x: i64 = head
                    .parse()
                    .map_err(|_| LatticeError::Parse { line, message: "invalid coordinate".into() })?;
                let y = parse_i64(tokens.next(), "coordinate")?;
                let z = if d == 3 { parse_i64(tokens.next(), "coordinate")? } else { 0 };
                let label = parse_i64(tokens.next(), "label")?;
                if label < 1 {
                    return Err(LatticeError::Parse { line, message: "label must be positive".into() });
                }
                labels.push(([x, y, z], label as u32));
            }
        }
    }
    let basis = basis.ok_or(LatticeError::Parse { line: 1, message: "missing basis line".into() })?;
    Ok((basis, labels))
}

/// Loads a fixture file into a periodic labeling.
pub fn fixture_labeling(text: &str) -> Result<PeriodicLabeling, LatticeError> {
    let (basis, labels) = parse_fixture(text)?;
    PeriodicLabeling::new(basis, labels)
}

/// Emits a labeling in the fixture format.
pub fn emit_fixture(p: &PeriodicLabeling) -> String {
    let mut out = format!("dim {}\n", p.basis.dim);
    out.push_str("basis");
    for j in 0..p.basis.dim {
        for r in 0..p.basis.dim {
            out.push_str(&format!(" {}", p.basis.cols[j][r]));
        }
    }
    out.push('\n');
    for (c, l) in p.cells() {
        if p.basis.dim == 2 {
            out.push_str(&format!("{} {} {}\n", c[0], c[1], l));
        } else {
            out.push_str(&format!("{} {} {} {}\n", c[0], c[1], c[2], l));
        }
    }
    out
}

/// Parses a tree rule map: `root R` then one `label childA childB` line per
/// rule.
pub fn parse_tree_rules(text: &str) -> Result<TreeRuleMap, LatticeError> {
    let mut root: Option<u32> = None;
    let mut rules = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let parse_u32 = |tok: &str| -> Result<u32, LatticeError> {
            tok.parse().map_err(|_| LatticeError::Parse { line, message: "invalid label".into() })
        };
        if tokens[0] == "root" {
            if tokens.len() != 2 {
                return Err(LatticeError::Parse { line, message: "root takes one label".into() });
            }
            root = Some(parse_u32(tokens[1])?);
        } else {
            if tokens.len() != 3 {
                return Err(LatticeError::Parse {
                    line,
                    message: "expected `label childA childB`".into(),
                });
            }
            rules.insert(parse_u32(tokens[0])?, (parse_u32(tokens[1])?, parse_u32(tokens[2])?));
        }
    }
    let root = root.ok_or(LatticeError::Parse { line: 1, message: "missing root line".into() })?;
    Ok(TreeRuleMap { root, rules })
}
