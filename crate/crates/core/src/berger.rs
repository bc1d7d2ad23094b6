//! Berger matrices: affine-condition validation, star graphs from simply-laced
//! weight vectors, and the invariants listed for them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use petgraph::graph::UnGraph;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{int, rat, Rational};

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BergerError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("empty matrix")]
    Empty,
    #[error("size {0} is too large for the exhaustive minor check of a non-symmetric matrix")]
    TooLarge(usize),
    #[error("weight vector has no positive component")]
    NoPositive,
    #[error("weight vector {0} is not simply-laced")]
    NotSimplyLaced(String),
    #[error("unsupported dimension cy_dim={0}")]
    UnsupportedDim(i64),
    #[error("root vectors have unequal lengths")]
    DimensionMismatch,
}

// ---------------------------------------------------------------- determinants

/// Fraction-free elimination with row pivoting; None on i128 overflow.
fn bareiss_i128(m: &[Vec<i64>]) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].checked_mul(a[k][k])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = t / prev;
            }
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

fn bareiss_big(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut neg = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    neg = !neg;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if neg {
        -d
    } else {
        d
    }
}

/// Exact integer determinant.
pub fn int_det(m: &[Vec<i64>]) -> BigInt {
    bareiss_i128(m).map_or_else(|| bareiss_big(m), BigInt::from)
}

/// Sylvester test: every leading principal minor is positive (Bareiss pivots, no swaps).
fn positive_definite(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    true
}

fn principal(m: &[Vec<i64>], keep: &[usize]) -> IntMatrix {
    keep.iter().map(|&i| keep.iter().map(|&j| m[i][j]).collect()).collect()
}

fn without(m: &[Vec<i64>], drop: usize) -> IntMatrix {
    let keep: Vec<usize> = (0..m.len()).filter(|&i| i != drop).collect();
    principal(m, &keep)
}

// ---------------------------------------------------------------- validation

pub const EXHAUSTIVE_MINOR_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MinorMethod {
    /// every nonempty proper subset enumerated
    Exhaustive,
    /// symmetric: each single-node deletion tested positive definite
    Sylvester,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BergerMatrix {
    pub size: usize,
    pub entries: IntMatrix,
    pub max_diag: i64,
    pub diag_ok: bool,
    pub off_diag_nonpositive: bool,
    pub zero_symmetric: bool,
    pub det: String,
    pub det_zero: bool,
    pub minor_method: MinorMethod,
    pub proper_minors_positive: bool,
    /// A proper principal subset (0-based) whose minor is not positive.
    pub bad_minor: Option<Vec<usize>>,
}

impl BergerMatrix {
    pub fn passed(&self) -> bool {
        self.diag_ok && self.off_diag_nonpositive && self.zero_symmetric && self.det_zero && self.proper_minors_positive
    }

    pub fn failed_rules(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        for (ok, name) in [
            (self.diag_ok, "diagonal"),
            (self.off_diag_nonpositive, "off-diagonal sign"),
            (self.zero_symmetric, "zero symmetry"),
            (self.det_zero, "det = 0"),
            (self.proper_minors_positive, "proper principal minors"),
        ] {
            if !ok {
                v.push(name);
            }
        }
        v
    }
}

pub fn validate_berger(m: &[Vec<i64>]) -> Result<BergerMatrix, BergerError> {
    validate_berger_with(m, 3)
}

/// As `validate_berger`, allowing diagonal entries 2..=max_diag.
pub fn validate_berger_with(m: &[Vec<i64>], max_diag: i64) -> Result<BergerMatrix, BergerError> {
    let n = m.len();
    if n == 0 {
        return Err(BergerError::Empty);
    }
    if m.iter().any(|r| r.len() != n) {
        return Err(BergerError::NotSquare);
    }
    let diag_ok = (0..n).all(|i| (2..=max_diag.max(2)).contains(&m[i][i]));
    let off = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|i| (0..n).all(|j| i == j || f(i, j)));
    let off_diag_nonpositive = off(&|i, j| m[i][j] <= 0);
    let zero_symmetric = off(&|i, j| (m[i][j] == 0) == (m[j][i] == 0));
    let symmetric = off(&|i, j| m[i][j] == m[j][i]);
    let det = int_det(m);

    let (minor_method, bad_minor) = if n <= EXHAUSTIVE_MINOR_LIMIT {
        let full = (1u32 << n) - 1;
        let bad = (1..full).into_par_iter().find_first(|&mask| {
            let keep: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            !int_det(&principal(m, &keep)).is_positive()
        });
        (MinorMethod::Exhaustive, bad.map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect()))
    } else if symmetric {
        // every proper principal submatrix sits inside some single deletion
        let bad = (0..n).into_par_iter().find_first(|&i| !positive_definite(&without(m, i)));
        (MinorMethod::Sylvester, bad.map(|i| (0..n).filter(|&k| k != i).collect()))
    } else {
        return Err(BergerError::TooLarge(n));
    };

    Ok(BergerMatrix {
        size: n,
        entries: m.to_vec(),
        max_diag,
        diag_ok,
        off_diag_nonpositive,
        zero_symmetric,
        det: det.to_string(),
        det_zero: det.is_zero(),
        minor_method,
        proper_minors_positive: bad_minor.is_none(),
        bad_minor,
    })
}

// ---------------------------------------------------------------- weight vectors and stars

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightVector {
    pub k: Vec<u64>,
}

impl WeightVector {
    pub fn new(k: Vec<u64>) -> Result<Self, BergerError> {
        if k.iter().all(|&x| x == 0) {
            return Err(BergerError::NoPositive);
        }
        Ok(WeightVector { k })
    }

    pub fn degree(&self) -> u64 {
        self.k.iter().sum()
    }

    pub fn cy_dim(&self) -> i64 {
        self.k.len() as i64 - 2
    }

    pub fn positive(&self) -> Vec<u64> {
        self.k.iter().copied().filter(|&x| x > 0).collect()
    }

    pub fn is_simply_laced(&self) -> bool {
        let d = self.degree();
        self.positive().iter().all(|&k| d % k == 0 && d > k)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.k.iter().map(u64::to_string).collect();
        write!(f, "({})[{}]", parts.join(","), self.degree())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Leg {
    pub k: u64,
    /// node indices from the center outward
    pub nodes: Vec<usize>,
}

/// Node 0 is the center.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BergerGraph {
    pub weights: WeightVector,
    pub labels: Vec<i64>,
    pub diag: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
    pub legs: Vec<Leg>,
}

impl BergerGraph {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn matrix(&self) -> IntMatrix {
        let n = self.node_count();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = self.diag[i];
        }
        for &(a, b) in &self.edges {
            m[a][b] = -1;
            m[b][a] = -1;
        }
        m
    }

    pub fn to_petgraph(&self) -> UnGraph<i64, ()> {
        graph_from_matrix(&self.matrix())
    }
}

/// Undirected graph with node weight B_ii and an edge wherever B_ij ≠ 0.
pub fn graph_from_matrix(m: &[Vec<i64>]) -> UnGraph<i64, ()> {
    let mut g = UnGraph::new_undirected();
    let ix: Vec<_> = (0..m.len()).map(|i| g.add_node(m[i][i])).collect();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if m[i][j] != 0 || m[j][i] != 0 {
                g.add_edge(ix[i], ix[j], ());
            }
        }
    }
    g
}

pub fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let (ga, gb) = (graph_from_matrix(a), graph_from_matrix(b));
    petgraph::algo::is_isomorphic_matching(&ga, &gb, |x, y| x == y, |_, _| true)
}

pub const MAX_CY_DIM: i64 = 4;

/// Center with label d and diagonal cy_dim, one leg of d/k_i − 1 nodes per positive k_i.
pub fn build_star(w: &WeightVector) -> Result<(BergerGraph, BergerMatrix), BergerError> {
    if !w.is_simply_laced() {
        return Err(BergerError::NotSimplyLaced(w.to_string()));
    }
    let cy = w.cy_dim();
    if !(2..=MAX_CY_DIM).contains(&cy) {
        return Err(BergerError::UnsupportedDim(cy));
    }
    let d = w.degree() as i64;
    let mut labels = vec![d];
    let mut diag = vec![cy];
    let mut edges = Vec::new();
    let mut legs = Vec::new();
    for k in w.positive() {
        let mut prev = 0;
        let mut nodes = Vec::new();
        for j in 1..d / k as i64 {
            let id = labels.len();
            labels.push(d - j * k as i64);
            diag.push(2);
            edges.push((prev, id));
            nodes.push(id);
            prev = id;
        }
        legs.push(Leg { k, nodes });
    }
    let g = BergerGraph { weights: w.clone(), labels, diag, edges, legs };
    let m = validate_berger_with(&g.matrix(), cy.max(3))?;
    Ok((g, m))
}

/// (0, 1, …, 1) with n ones.
pub fn unit_family(n: usize) -> WeightVector {
    let mut k = vec![0];
    k.extend(std::iter::repeat_n(1, n));
    WeightVector::new(k).unwrap()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphInvariants {
    pub rank: usize,
    pub diag3_nodes: usize,
    pub rank_string: String,
    pub h: i64,
    pub casimir: i64,
    pub det_nonaffine: String,
    /// (leg k, determinant after deleting that leg's end node) for every leg
    pub deletion_dets: Vec<(u64, String)>,
    pub deletion_independent: bool,
    pub kernel_is_labels: bool,
}

/// det_nonaffine deletes the end node of the leg with the smallest k.
pub fn graph_invariants(g: &BergerGraph) -> GraphInvariants {
    let m = g.matrix();
    let rank = g.node_count() - 1;
    let diag3_nodes = g.diag.iter().filter(|&&x| x == 3).count();
    let rank_string = if diag3_nodes == 0 { rank.to_string() } else { format!("{diag3_nodes}_3+{}", rank - diag3_nodes) };
    let deletion: Vec<(u64, BigInt)> = g
        .legs
        .iter()
        .filter_map(|l| l.nodes.last().map(|&e| (l.k, int_det(&without(&m, e)))))
        .collect();
    let smallest = deletion.iter().min_by_key(|(k, _)| *k).map(|(_, d)| d.clone()).unwrap_or_default();
    let kernel_is_labels = m.iter().all(|r| r.iter().zip(&g.labels).map(|(a, b)| a * b).sum::<i64>() == 0);
    GraphInvariants {
        rank,
        diag3_nodes,
        rank_string,
        h: g.labels.iter().sum(),
        casimir: g.weights.cy_dim() * g.weights.degree() as i64,
        det_nonaffine: smallest.to_string(),
        deletion_independent: deletion.iter().all(|(_, d)| *d == smallest),
        deletion_dets: deletion.into_iter().map(|(k, d)| (k, d.to_string())).collect(),
        kernel_is_labels,
    }
}

// ---------------------------------------------------------------- affine ADE fixtures

fn from_edges(n: usize, edges: &[(usize, usize)]) -> IntMatrix {
    let mut m = vec![vec![0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in edges {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    m
}

/// Affine E6, E7, E8 Cartan matrices in a chain-plus-branch labeling.
pub fn affine_e(rank: usize) -> Option<IntMatrix> {
    match rank {
        6 => Some(from_edges(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 0)])),
        7 => Some(from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)])),
        8 => Some(from_edges(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)])),
        _ => None,
    }
}

// ---------------------------------------------------------------- roots

#[derive(Clone, Debug, PartialEq)]
pub struct GramReport {
    pub gram: Vec<Vec<Rational>>,
    pub kernel: Vec<Vec<Rational>>,
}

impl GramReport {
    pub fn to_int(&self) -> Option<IntMatrix> {
        self.gram
            .iter()
            .map(|r| r.iter().map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten()).collect())
            .collect()
    }

    pub fn annihilates(&self, v: &[Rational]) -> bool {
        self.gram.iter().all(|r| r.iter().zip(v).fold(int(0), |a, (x, y)| a + x * y).is_zero())
    }
}

/// Exact null space basis by reduced row echelon form.
fn kernel(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![int(0); cols];
            v[free] = int(1);
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[i][free].clone();
            }
            v
        })
        .collect()
}

pub fn roots_gram(roots: &[Vec<Rational>]) -> Result<GramReport, BergerError> {
    let len = roots.first().map_or(0, Vec::len);
    if roots.iter().any(|r| r.len() != len) {
        return Err(BergerError::DimensionMismatch);
    }
    let dot = |a: &[Rational], b: &[Rational]| a.iter().zip(b).fold(int(0), |s, (x, y)| s + x * y);
    let gram: Vec<Vec<Rational>> = roots.iter().map(|a| roots.iter().map(|b| dot(a, b)).collect()).collect();
    let kernel = kernel(&gram);
    Ok(GramReport { gram, kernel })
}

/// α1..α13 of the (0,1,1,1,1)[4] example in R^12.
pub fn example_roots() -> Vec<Vec<Rational>> {
    let e = |terms: &[(usize, i64)], den: i64| {
        let mut v = vec![int(0); 12];
        for &(i, c) in terms {
            v[i - 1] = rat(c, den);
        }
        v
    };
    vec![
        e(&[(1, 1), (2, -1)], 1),
        e(&[(2, 1), (3, -1)], 1),
        e(&[(3, 1), (4, -1)], 1),
        e(&[(4, 1), (5, -1), (9, -1)], 1),
        e(&[(5, 1), (6, -1)], 1),
        e(&[(6, 1), (7, -1)], 1),
        e(&[(7, 1), (8, -1)], 1),
        e(&[(9, 1), (10, -1)], 1),
        e(&[(9, -1), (10, 1), (1, -1), (2, -1), (3, -1), (4, -1), (11, -1), (12, 1)], 2),
        e(&[(11, 1), (12, -1)], 1),
        e(&[(9, 1), (10, 1)], 1),
        e(&[(9, -1), (10, -1), (5, 1), (6, 1), (7, 1), (8, 1), (11, -1), (12, -1)], 2),
        e(&[(11, 1), (12, 1)], 1),
    ]
}

/// Coefficients of α1..α12 and α0 in the displayed affine relation.
pub const EXAMPLE_RELATION: [i64; 13] = [1, 2, 3, 4, 3, 2, 1, 3, 2, 1, 3, 2, 1];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootsReport {
    pub diag: Vec<String>,
    pub kernel_dim: usize,
    /// relation with α13 in place of α0
    pub relation_in_kernel_alpha13: bool,
    /// relation read literally with α0 = −α13
    pub relation_in_kernel_alpha0: bool,
    pub matches_star: bool,
    pub gram_valid: bool,
}

pub fn example_roots_check() -> RootsReport {
    let g = roots_gram(&example_roots()).unwrap();
    let rel: Vec<Rational> = EXAMPLE_RELATION.iter().map(|&c| int(c)).collect();
    let mut lit = rel.clone();
    lit[12] = -lit[12].clone();
    let star = build_star(&WeightVector::new(vec![0, 1, 1, 1, 1]).unwrap()).unwrap().0.matrix();
    let gi = g.to_int();
    RootsReport {
        diag: (0..13).map(|i| g.gram[i][i].to_string()).collect(),
        kernel_dim: g.kernel.len(),
        relation_in_kernel_alpha13: g.annihilates(&rel),
        relation_in_kernel_alpha0: g.annihilates(&lit),
        matches_star: gi.as_ref().is_some_and(|m| isomorphic(m, &star)),
        gram_valid: gi.as_ref().is_some_and(|m| validate_berger(m).is_ok_and(|v| v.passed())),
    }
}

/// The displayed 13×13 matrix, verbatim.
pub fn printed_example_matrix() -> IntMatrix {
    let mut m = from_edges(13, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7), (7, 8), (8, 9), (3, 10), (10, 11)]);
    m[3][3] = 3;
    // last row couples back to node 12 but the entry above it is blank
    m[12][11] = -1;
    m
}

// ---------------------------------------------------------------- table

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrintedRow {
    pub k: &'static [u64],
    pub rank: &'static str,
    pub h: &'static str,
    pub casimir: i64,
    pub det: &'static str,
    pub supported: bool,
}

const fn row(k: &'static [u64], rank: &'static str, h: &'static str, casimir: i64, det: &'static str, supported: bool) -> PrintedRow {
    PrintedRow { k, rank, h, casimir, det, supported }
}

pub const TABLE1: [PrintedRow; 20] = [
    row(&[0, 1, 1, 1], "6 (E_6)", "12", 6, "3", true),
    row(&[0, 1, 1, 2], "7 (E_7)", "18", 8, "2", true),
    row(&[0, 1, 2, 3], "8 (E_8)", "30", 12, "1", true),
    row(&[0, 0, 1, 1, 1], "2_3+10+l", "18+3(l+1)", 9, "3^4", false),
    row(&[0, 0, 1, 1, 2], "2_3+13+l", "32+4(l+1)", 12, "4^3", false),
    row(&[0, 0, 1, 2, 3], "2_3+15l", "60+6(l-1)", 18, "6^2", false),
    row(&[0, 1, 1, 1, 1], "1_3+11", "28", 12, "16", true),
    row(&[0, 2, 3, 3, 4], "1_3+12", "90", 36, "8", true),
    row(&[0, 1, 1, 2, 2], "1_3+13", "48", 18, "9", true),
    row(&[0, 1, 1, 1, 3], "1_3+15", "54", 18, "12", true),
    row(&[0, 1, 1, 2, 4], "1_3+17", "80", 24, "8", true),
    row(&[0, 1, 2, 2, 5], "1_3+17", "100", 30, "5", true),
    row(&[0, 1, 3, 4, 4], "1_3+17", "120", 36, "3", true),
    row(&[0, 1, 2, 3, 6], "1_3+19", "132", 36, "6", true),
    row(&[0, 1, 4, 5, 10], "1_3+26", "290", 60, "2", true),
    row(&[0, 1, 1, 4, 6], "1_3+24", "162", 36, "6", true),
    row(&[0, 1, 2, 6, 9], "1_3+27", "270", 54, "3", true),
    row(&[0, 1, 3, 8, 12], "1_3+32", "420", 72, "2", true),
    row(&[0, 2, 3, 10, 15], "1_3+25", "420", 90, "4", true),
    row(&[0, 1, 6, 14, 21], "1_3+49", "1092", 126, "1", true),
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table1Row {
    pub vector: String,
    pub supported: bool,
    pub printed: (String, String, i64, String),
    pub computed: Option<GraphInvariants>,
    pub affine_ok: bool,
    pub rank_ok: bool,
    pub h_ok: bool,
    pub casimir_ok: bool,
    pub det_ok: bool,
    pub note: String,
}

impl Table1Row {
    pub fn matches(&self) -> bool {
        self.rank_ok && self.h_ok && self.casimir_ok && self.det_ok && self.affine_ok
    }
}

pub fn table1_report() -> Vec<Table1Row> {
    TABLE1
        .par_iter()
        .map(|r| {
            let w = WeightVector::new(r.k.to_vec()).unwrap();
            let printed = (r.rank.to_string(), r.h.to_string(), r.casimir, r.det.to_string());
            if !r.supported {
                return Table1Row {
                    vector: w.to_string(),
                    supported: false,
                    printed,
                    computed: None,
                    affine_ok: false,
                    rank_ok: false,
                    h_ok: false,
                    casimir_ok: false,
                    det_ok: false,
                    note: "double-zero series with free parameter l; not constructed".into(),
                };
            }
            let (g, m) = build_star(&w).expect("table vectors are simply-laced");
            let inv = graph_invariants(&g);
            let rank_ok = r.rank.split_whitespace().next() == Some(inv.rank_string.as_str());
            let note = if inv.deletion_independent {
                String::new()
            } else {
                let all: Vec<String> = inv.deletion_dets.iter().map(|(k, d)| format!("k={k}: {d}")).collect();
                format!("leg-end deletions give {}", all.join(", "))
            };
            Table1Row {
                vector: w.to_string(),
                supported: true,
                printed,
                affine_ok: m.passed(),
                rank_ok,
                h_ok: inv.h.to_string() == r.h,
                casimir_ok: inv.casimir == r.casimir,
                det_ok: inv.det_nonaffine == r.det,
                computed: Some(inv),
                note,
            }
        })
        .collect()
}
