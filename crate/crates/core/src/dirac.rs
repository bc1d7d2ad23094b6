//! Clifford-like matrix systems: Pauli and γ baselines, the ternary Q-matrices with
//! their η-relation, and the quaternary q-matrices.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cn_algebra::{expand_norm_form, Eps};
use crate::exactnum::{rat, zeta, Cyclotomic};
use crate::polyring::{Matrix, MultiPoly, PolyMatrix};

/// Named square matrices of a common size; `n` is the root-of-unity order of the entries.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixFamily {
    pub n: u32,
    pub dim: usize,
    pub members: Vec<(String, Matrix<Cyclotomic>)>,
}

impl MatrixFamily {
    fn new(n: u32, members: Vec<(&str, Matrix<Cyclotomic>)>) -> Self {
        let dim = members[0].1.dim();
        assert!(members.iter().all(|(_, m)| m.dim() == dim));
        MatrixFamily {
            n,
            dim,
            members: members.into_iter().map(|(s, m)| (s.to_string(), m)).collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Matrix<Cyclotomic>> {
        self.members.iter().find(|(s, _)| s == name).map(|(_, m)| m)
    }

    pub fn matrices(&self) -> Vec<Matrix<Cyclotomic>> {
        self.members.iter().map(|(_, m)| m.clone()).collect()
    }

    /// Rows rendered over ζ_n, one string per row.
    pub fn render(&self, name: &str) -> Option<Vec<String>> {
        let m = self.get(name)?;
        Some(
            m.rows()
                .iter()
                .map(|r| r.iter().map(|c| bare(c, self.n)).collect::<Vec<_>>().join(" "))
                .collect(),
        )
    }
}

/// A named exact identity and whether it holds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Relation {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Relation {
    fn new(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Relation {
            name: name.into(),
            holds,
            detail: detail.into(),
        }
    }
}

fn bare(c: &Cyclotomic, n: u32) -> String {
    let s = c.render_in(n);
    s.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .map_or(s.clone(), str::to_string)
}

fn u(n: u32, k: i64) -> Cyclotomic {
    zeta(n, k).unwrap()
}

/// Generalized permutation matrix with entry ζ_n^k at each (row, col, k).
fn gp(n: u32, dim: usize, entries: &[(usize, usize, i64)]) -> Matrix<Cyclotomic> {
    let mut rows = vec![vec![Cyclotomic::zero(); dim]; dim];
    for &(r, c, k) in entries {
        rows[r][c] = u(n, k);
    }
    Matrix::from_rows(rows).unwrap()
}

fn id(dim: usize) -> Matrix<Cyclotomic> {
    Matrix::identity(dim, &Cyclotomic::one())
}

fn anti(a: &Matrix<Cyclotomic>, b: &Matrix<Cyclotomic>) -> Matrix<Cyclotomic> {
    a.mul(b).add(&b.mul(a))
}

fn index_label(ix: &[usize]) -> String {
    ix.iter().map(|i| i.to_string()).collect()
}

// ---------------------------------------------------------------- Pauli / γ

/// σ₀..σ₃ with i = ζ₄.
pub fn pauli_family() -> MatrixFamily {
    let s0 = id(2);
    let s1 = gp(4, 2, &[(0, 1, 0), (1, 0, 0)]);
    let s2 = gp(4, 2, &[(0, 1, 3), (1, 0, 1)]);
    let s3 = gp(4, 2, &[(0, 0, 0), (1, 1, 2)]);
    MatrixFamily::new(4, vec![("s0", s0), ("s1", s1), ("s2", s2), ("s3", s3)])
}

pub fn pauli_relations() -> Vec<Relation> {
    let f = pauli_family();
    let s = f.matrices();
    let i = u(4, 1);
    let mut out = Vec::new();
    for k in 1..4 {
        out.push(Relation::new(format!("s{k}^2 = s0"), s[k].pow(2) == s[0], ""));
    }
    for m in 1..4 {
        for n in m..4 {
            let want = Matrix::scalar(2, &Cyclotomic::from_int(2 * (m == n) as i64));
            out.push(Relation::new(format!("s{m}s{n} + s{n}s{m} = 2 delta"), anti(&s[m], &s[n]) == want, ""));
        }
    }
    out.push(Relation::new("s1 s2 = i s3", s[1].mul(&s[2]) == s[3].scale(&i), ""));
    // the literal display form; i s1 s2 = −s3
    let lit = s[1].mul(&s[2]).scale(&i);
    out.push(Relation::new(
        "s3 = i s1 s2 (as displayed)",
        lit == s[3],
        if lit == s[3].scale(&Cyclotomic::from_int(-1)) { "i s1 s2 = -s3" } else { "" },
    ));
    out
}

/// A first-order operator raised to a power, compared with form·I.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorPower {
    pub label: String,
    pub power: PolyMatrix,
    pub form: MultiPoly,
}

impl OperatorPower {
    pub fn residual(&self) -> PolyMatrix {
        self.power.sub(&PolyMatrix::scalar(self.power.dim(), &self.form))
    }

    pub fn holds(&self) -> bool {
        self.residual().is_zero()
    }

    pub fn render_residual(&self) -> Vec<String> {
        self.residual()
            .rows()
            .iter()
            .map(|r| r.iter().map(|p| p.render()).collect::<Vec<_>>().join(" | "))
            .collect()
    }
}

fn sum_of_squares(n: usize) -> MultiPoly {
    MultiPoly::vars(n).iter().fold(MultiPoly::zero(n), |a, x| &a + &x.pow(2))
}

/// The D = 2, 3 Dirac squares and the D = 4 quaternionic factorization.
pub fn dirac_square_checks() -> Vec<OperatorPower> {
    let s = pauli_family().matrices();
    let i = u(4, 1);
    let mi = u(4, 3);
    let d2 = PolyMatrix::contract(&[s[1].clone(), s[2].clone()]).pow(2);
    let d3 = PolyMatrix::contract(&[s[1].clone(), s[2].clone(), s[3].clone()]).pow(2);
    let plus = PolyMatrix::contract(&[s[0].clone(), s[1].scale(&i), s[2].scale(&i), s[3].scale(&i)]);
    let minus = PolyMatrix::contract(&[s[0].clone(), s[1].scale(&mi), s[2].scale(&mi), s[3].scale(&mi)]);
    vec![
        OperatorPower {
            label: "D=2: (s1 t0 + s2 t1)^2".into(),
            power: d2,
            form: sum_of_squares(2),
        },
        OperatorPower {
            label: "D=3: (s1 t0 + s2 t1 + s3 t2)^2".into(),
            power: d3,
            form: sum_of_squares(3),
        },
        OperatorPower {
            label: "D=4: (s0 t0 + i s.t)(s0 t0 - i s.t)".into(),
            power: plus.mul(&minus),
            form: sum_of_squares(4),
        },
    ]
}

/// γ_m as Kronecker products of Pauli matrices.
pub fn gamma_family() -> MatrixFamily {
    let s = pauli_family().matrices();
    MatrixFamily::new(
        4,
        vec![
            ("g0", s[1].kron(&s[0])),
            ("g1", s[3].kron(&s[0])),
            ("g2", s[2].kron(&s[1])),
            ("g3", s[2].kron(&s[3])),
        ],
    )
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GammaReport {
    /// g_mn rendered, or None where the anticommutator is not scalar.
    pub metric: Vec<Vec<Option<String>>>,
    pub scalar_metric: bool,
    pub off_diagonal_zero: bool,
    pub signature: Vec<i64>,
}

pub fn gamma_signature() -> GammaReport {
    let g = gamma_family().matrices();
    let half = Cyclotomic::from_rational(rat(1, 2));
    let metric: Vec<Vec<Option<Cyclotomic>>> = (0..4)
        .map(|m| (0..4).map(|n| anti(&g[m], &g[n]).scale(&half).as_scalar()).collect())
        .collect();
    let scalar_metric = metric.iter().flatten().all(Option::is_some);
    let off_diagonal_zero = (0..4).all(|m| (0..4).all(|n| m == n || metric[m][n].as_ref().is_some_and(|c| c.is_zero())));
    let signature = (0..4)
        .map(|m| {
            metric[m][m]
                .as_ref()
                .and_then(Cyclotomic::to_rational)
                .map_or(0, |r| if r > rat(0, 1) { 1 } else if r < rat(0, 1) { -1 } else { 0 })
        })
        .collect();
    GammaReport {
        metric: metric
            .iter()
            .map(|r| r.iter().map(|c| c.as_ref().map(|c| bare(c, 4))).collect())
            .collect(),
        scalar_metric,
        off_diagonal_zero,
        signature,
    }
}

// ---------------------------------------------------------------- η tensors

/// η values keyed by 1-based index tuples; absent keys are zero. Tuples whose
/// defining sum is not a multiple of the identity are listed separately.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaTensor {
    pub n: usize,
    pub entries: BTreeMap<Vec<usize>, Cyclotomic>,
    pub non_scalar: Vec<Vec<usize>>,
}

impl EtaTensor {
    pub fn get(&self, ix: &[usize]) -> Cyclotomic {
        self.entries.get(ix).cloned().unwrap_or_else(Cyclotomic::zero)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EtaDiff {
    pub index: String,
    pub computed: String,
    pub printed: String,
}

fn eta_diffs(
    computed: &BTreeMap<Vec<usize>, Cyclotomic>,
    printed: &BTreeMap<Vec<usize>, Cyclotomic>,
    amb: u32,
) -> Vec<EtaDiff> {
    let zero = Cyclotomic::zero();
    let mut keys: Vec<_> = computed.keys().chain(printed.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|k| {
            let a = computed.get(&k).unwrap_or(&zero);
            let b = printed.get(&k).unwrap_or(&zero);
            (a != b).then(|| EtaDiff {
                index: index_label(&k),
                computed: bare(a, amb),
                printed: bare(b, amb),
            })
        })
        .collect()
}

/// Q₁, Q₂, Q₃ over j = ζ₃.
pub fn ternary_q_family() -> MatrixFamily {
    MatrixFamily::new(
        3,
        vec![
            ("Q1", gp(3, 3, &[(0, 1, 0), (1, 2, 0), (2, 0, 0)])),
            ("Q2", gp(3, 3, &[(0, 1, 0), (1, 2, 1), (2, 0, 2)])),
            ("Q3", gp(3, 3, &[(0, 1, 0), (1, 2, 2), (2, 0, 1)])),
        ],
    )
}

/// The listed ternary values: η_aaa = 1, η_123 (cyclic) = j, η_321 (cyclic) = j².
pub fn printed_ternary_eta() -> BTreeMap<Vec<usize>, Cyclotomic> {
    let mut m = BTreeMap::new();
    for a in 1..=3 {
        m.insert(vec![a, a, a], Cyclotomic::one());
    }
    for ix in [[1, 2, 3], [2, 3, 1], [3, 1, 2]] {
        m.insert(ix.to_vec(), u(3, 1));
    }
    for ix in [[3, 2, 1], [2, 1, 3], [1, 3, 2]] {
        m.insert(ix.to_vec(), u(3, 2));
    }
    m
}

#[derive(Clone, Debug, PartialEq)]
pub struct TernaryEtaReport {
    pub eta: EtaTensor,
    pub diffs: Vec<EtaDiff>,
    pub cyclic_invariant: bool,
}

impl TernaryEtaReport {
    pub fn matches_printed(&self) -> bool {
        self.diffs.is_empty() && self.eta.non_scalar.is_empty()
    }
}

/// Q_aQ_bQ_c + Q_bQ_cQ_a + Q_cQ_aQ_b = 3η_abc·I for all 27 triples.
pub fn ternary_eta() -> TernaryEtaReport {
    let q = ternary_q_family().matrices();
    let third = Cyclotomic::from_rational(rat(1, 3));
    let mut entries = BTreeMap::new();
    let mut non_scalar = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let s = q[a].mul(&q[b]).mul(&q[c])
                    .add(&q[b].mul(&q[c]).mul(&q[a]))
                    .add(&q[c].mul(&q[a]).mul(&q[b]));
                let key = vec![a + 1, b + 1, c + 1];
                match s.as_scalar() {
                    Some(v) if v.is_zero() => {}
                    Some(v) => {
                        entries.insert(key, &v * &third);
                    }
                    None => non_scalar.push(key),
                }
            }
        }
    }
    let eta = EtaTensor { n: 3, entries, non_scalar };
    let cyclic_invariant = (1..=3).all(|a| {
        (1..=3).all(|b| (1..=3).all(|c| eta.get(&[a, b, c]) == eta.get(&[b, c, a])))
    });
    let diffs = eta_diffs(&eta.entries, &printed_ternary_eta(), 3);
    TernaryEtaReport {
        eta,
        diffs,
        cyclic_invariant,
    }
}

/// (Q₁t₀+Q₂t₁+Q₃t₂)³ against the cubic norm form.
pub fn ternary_dirac_cube() -> OperatorPower {
    OperatorPower {
        label: "(Q1 t0 + Q2 t1 + Q3 t2)^3".into(),
        power: PolyMatrix::contract(&ternary_q_family().matrices()).pow(3),
        form: expand_norm_form(3, Eps::Plus).unwrap().form,
    }
}

pub fn ternary_relations() -> Vec<Relation> {
    let f = ternary_q_family();
    let q = f.matrices();
    let mut out: Vec<Relation> = f
        .members
        .iter()
        .map(|(s, m)| Relation::new(format!("{s} generalized permutation"), m.is_generalized_permutation(), ""))
        .collect();
    for (s, m) in &f.members {
        out.push(Relation::new(format!("{s}^3 = I"), m.pow(3) == id(3), ""));
    }
    let total = q[0].add(&q[1]).add(&q[2]);
    out.push(Relation::new("(Q1+Q2+Q3)^3 = 0", total.pow(3).is_zero(), ""));
    out
}

// ---------------------------------------------------------------- quaternary

/// q₁..q₄ over j = ζ₄.
pub fn quaternary_q_family() -> MatrixFamily {
    let lead = |k: [i64; 4]| gp(4, 4, &[(0, 1, k[0]), (1, 2, k[1]), (2, 3, k[2]), (3, 0, k[3])]);
    MatrixFamily::new(
        4,
        vec![
            ("q1", lead([0, 0, 0, 0])),
            ("q2", lead([0, 1, 2, 3])),
            ("q3", lead([0, 2, 0, 2])),
            ("q4", lead([0, 3, 2, 1])),
        ],
    )
}

/// q₉..q₁₂, the transposed-shape quartet.
pub fn second_quartet() -> MatrixFamily {
    let lead = |k: [i64; 4]| gp(4, 4, &[(0, 3, k[0]), (1, 0, k[1]), (2, 1, k[2]), (3, 2, k[3])]);
    MatrixFamily::new(
        4,
        vec![
            ("q9", lead([0, 0, 0, 0])),
            ("q10", lead([0, 1, 2, 3])),
            ("q11", lead([0, 2, 0, 2])),
            ("q12", lead([0, 3, 2, 1])),
        ],
    )
}

/// The listed quaternary values, keyed by sorted 1-based tuples.
pub fn printed_quaternary_eta() -> BTreeMap<Vec<usize>, Cyclotomic> {
    let c = Cyclotomic::from_int;
    [
        ([1, 1, 1, 1], 24),
        ([2, 2, 2, 2], -24),
        ([3, 3, 3, 3], 24),
        ([4, 4, 4, 4], -24),
        ([1, 1, 3, 3], 2),
        ([2, 2, 4, 4], -2),
        ([1, 1, 2, 3], -4),
        ([1, 2, 2, 3], 4),
        ([2, 3, 3, 4], -4),
        ([1, 3, 4, 4], 4),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_vec(), c(v)))
    .collect()
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&i| seen[i] = true);
                    if seen.iter().all(|&s| s) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Σ over all 24 orderings of q_a q_b q_c q_d (0-based indices).
pub fn symmetrized_product(q: &[Matrix<Cyclotomic>], ix: [usize; 4]) -> Matrix<Cyclotomic> {
    let mut acc = Matrix::scalar(q[0].dim(), &Cyclotomic::zero());
    for p in permutations4() {
        let t = q[ix[p[0]]].mul(&q[ix[p[1]]]).mul(&q[ix[p[2]]]).mul(&q[ix[p[3]]]);
        acc = acc.add(&t);
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuaternaryEtaReport {
    /// Raw symmetrized sums keyed by sorted 1-based tuples.
    pub eta: EtaTensor,
    pub tuples_swept: usize,
    pub diffs: Vec<EtaDiff>,
    pub symmetrizer_self_test: bool,
}

/// Sweep all 256 ordered tuples, optionally in parallel, and fold by sorted key.
pub fn quaternary_eta(parallel: bool, seed: u64) -> QuaternaryEtaReport {
    let q = quaternary_q_family().matrices();
    let tuples: Vec<[usize; 4]> = (0..256).map(|t| [t >> 6, (t >> 4) & 3, (t >> 2) & 3, t & 3]).collect();
    let work = |ix: &[usize; 4]| (*ix, symmetrized_product(&q, *ix));
    let sums: BTreeMap<[usize; 4], Matrix<Cyclotomic>> = if parallel {
        tuples.par_iter().map(work).collect::<Vec<_>>().into_iter().collect()
    } else {
        tuples.iter().map(work).collect()
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let perms = permutations4();
    let symmetrizer_self_test = (0..32).all(|_| {
        let ix = tuples[rng.gen_range(0..256)];
        let p = perms[rng.gen_range(0..24)];
        sums[&ix] == sums[&[ix[p[0]], ix[p[1]], ix[p[2]], ix[p[3]]]]
    });

    let mut entries = BTreeMap::new();
    let mut non_scalar = Vec::new();
    for (ix, s) in &sums {
        let mut key: Vec<usize> = ix.iter().map(|i| i + 1).collect();
        if !key.windows(2).all(|w| w[0] <= w[1]) {
            continue;
        }
        key.sort();
        match s.as_scalar() {
            Some(v) if v.is_zero() => {}
            Some(v) => {
                entries.insert(key, v);
            }
            None => non_scalar.push(key),
        }
    }
    let diffs = eta_diffs(&entries, &printed_quaternary_eta(), 4);
    QuaternaryEtaReport {
        eta: EtaTensor { n: 4, entries, non_scalar },
        tuples_swept: sums.len(),
        diffs,
        symmetrizer_self_test,
    }
}

/// (q₁t₀+q₂t₁+q₃t₂+q₄t₃)⁴ against the case-A quartic form.
pub fn quaternary_dirac_fourth() -> OperatorPower {
    OperatorPower {
        label: "(q1 t0 + q2 t1 + q3 t2 + q4 t3)^4".into(),
        power: PolyMatrix::contract(&quaternary_q_family().matrices()).pow(4),
        form: expand_norm_form(4, Eps::Plus).unwrap().form,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SecondQuartetReport {
    pub power: PolyMatrix,
    /// Some(form) when the fourth power is a multiple of the identity.
    pub scalar_form: Option<MultiPoly>,
    pub equals_case_a: bool,
    pub equals_case_b: bool,
}

/// Fourth power of q₉t₀+q₁₀t₁+q₁₁t₂+q₁₂t₃; recorded, never asserted.
pub fn second_quartet_fourth() -> SecondQuartetReport {
    let power = PolyMatrix::contract(&second_quartet().matrices()).pow(4);
    let scalar_form = power.as_scalar();
    let is = |eps| scalar_form.as_ref() == Some(&expand_norm_form(4, eps).unwrap().form);
    SecondQuartetReport {
        equals_case_a: is(Eps::Plus),
        equals_case_b: is(Eps::Minus),
        power,
        scalar_form,
    }
}

pub fn quaternary_relations() -> Vec<Relation> {
    let mut out = Vec::new();
    for f in [quaternary_q_family(), second_quartet()] {
        for (s, m) in &f.members {
            out.push(Relation::new(format!("{s} generalized permutation"), m.is_generalized_permutation(), ""));
            let p4 = m.pow(4);
            let sign = if p4 == id(4) { "I" } else if p4 == id(4).scale(&Cyclotomic::from_int(-1)) { "-I" } else { "" };
            out.push(Relation::new(format!("{s}^4 = +-I"), !sign.is_empty(), sign));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn c(k: i64) -> Cyclotomic {
        Cyclotomic::from_int(k)
    }

    #[test]
    fn pauli_baseline() {
        let rels = pauli_relations();
        for r in &rels[..rels.len() - 1] {
            assert!(r.holds, "{}", r.name);
        }
        // the literal display differs by a sign
        let last = rels.last().unwrap();
        assert!(!last.holds);
        assert_eq!(last.detail, "i s1 s2 = -s3");
        let s = pauli_family().matrices();
        assert!(anti(&s[1], &s[2]).is_zero());
    }

    #[test]
    fn dirac_squares_hold() {
        for op in dirac_square_checks() {
            assert!(op.holds(), "{}: {:?}", op.label, op.render_residual());
        }
    }

    #[test]
    fn gamma_metric_is_euclidean() {
        let g = gamma_family().matrices();
        assert!(anti(&g[0], &g[1]).is_zero());
        let r = gamma_signature();
        assert!(r.scalar_metric && r.off_diagonal_zero);
        assert_eq!(r.signature, vec![1, 1, 1, 1]);
        for m in &g {
            assert_eq!(m.pow(2), id(4));
        }
    }

    #[test]
    fn ternary_eta_is_conjugate_of_listing() {
        let r = ternary_eta();
        assert!(r.cyclic_invariant);
        assert!(r.eta.non_scalar.is_empty());
        assert_eq!(r.eta.entries.len(), 9);
        for a in 1..=3 {
            assert_eq!(r.eta.get(&[a, a, a]), c(1));
        }
        // oracle: Q1Q2Q3 = diag(j², j², j²) by direct multiplication
        let q = ternary_q_family().matrices();
        assert_eq!(q[0].mul(&q[1]).mul(&q[2]), Matrix::scalar(3, &u(3, 2)));
        assert_eq!(r.eta.get(&[1, 2, 3]), u(3, 2));
        assert_eq!(r.eta.get(&[3, 2, 1]), u(3, 1));
        assert_eq!(r.eta.get(&[1, 1, 2]), Cyclotomic::zero());
        assert_eq!(r.diffs.len(), 6);
        assert!(!r.matches_printed());
    }

    #[test]
    fn ternary_cube_is_the_cubic_form() {
        let op = ternary_dirac_cube();
        assert!(op.holds());
        assert_eq!(op.form, parse_poly("x0^3 + x1^3 + x2^3 - 3 x0 x1 x2", 3, 3).unwrap());
        assert!(ternary_relations().iter().all(|r| r.holds));
        // t1 = t2 = 0 specialization
        let q1 = ternary_q_family().matrices()[0].clone();
        assert_eq!(q1.pow(3), id(3));
    }

    #[test]
    fn quaternary_fourth_power_is_case_a_form() {
        let op = quaternary_dirac_fourth();
        assert!(op.holds(), "{:?}", op.render_residual());
        assert!(quaternary_relations().iter().all(|r| r.holds));
    }

    #[test]
    fn quaternary_symmetrized_sums() {
        let r = quaternary_eta(true, 42);
        assert_eq!(r.tuples_swept, 256);
        assert!(r.symmetrizer_self_test);
        assert!(r.eta.non_scalar.is_empty());
        assert_eq!(r.eta.get(&[1, 1, 1, 1]), c(24));
        assert_eq!(r.eta.get(&[2, 2, 2, 2]), c(-24));
        assert_eq!(r.eta.get(&[1, 1, 3, 3]), c(-8));
        assert_eq!(r.eta.get(&[1, 2, 3, 4]), Cyclotomic::zero());
        // oracle for one repeated tuple: q1²q3² orderings, 6 distinct words each counted 4 times
        let q = quaternary_q_family().matrices();
        let words = [[0, 0, 2, 2], [0, 2, 0, 2], [0, 2, 2, 0], [2, 0, 0, 2], [2, 0, 2, 0], [2, 2, 0, 0]];
        let mut acc = Matrix::scalar(4, &Cyclotomic::zero());
        for w in words {
            acc = acc.add(&q[w[0]].mul(&q[w[1]]).mul(&q[w[2]]).mul(&q[w[3]]));
        }
        assert_eq!(acc.scale(&c(4)), Matrix::scalar(4, &c(-8)));
        assert!(!r.diffs.is_empty());
        assert_eq!(quaternary_eta(false, 1).eta, r.eta);
    }

    #[test]
    fn second_quartet_is_recorded() {
        let r = second_quartet_fourth();
        assert_eq!(r.power.dim(), 4);
        assert_eq!(r.scalar_form.is_some(), r.power.as_scalar().is_some());
    }
}
