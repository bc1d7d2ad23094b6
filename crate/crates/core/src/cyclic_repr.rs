//! Character tables of C_N, the C_3 vector representation on R³ and the
//! DFT basis change that diagonalizes the cyclic generator.

use serde::Serialize;

use crate::cn_algebra::{expand_norm_form, CnError, CnNumber, Eps};
use crate::exactnum::{rat, zeta, Cyclotomic, MAX_ORDER};
use crate::polyring::{Matrix, MultiPoly, PolyMatrix};

/// Entry (k, α) is ζ_N^{kα}, indices from zero.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    pub n: usize,
    pub table: Matrix<Cyclotomic>,
}

pub fn char_table(n: usize) -> Result<CharacterTable, CnError> {
    if !(1..=MAX_ORDER as usize).contains(&n) {
        return Err(CnError::OrderOutOfRange(n));
    }
    let table = Matrix::from_fn(n, |k, a| zeta(n as u32, ((k * a) % n) as i64).unwrap());
    Ok(CharacterTable { n, table })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrthogonalityReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub row_failures: Vec<(usize, usize)>,
    pub column_failures: Vec<(usize, usize)>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.row_failures.is_empty() && self.column_failures.is_empty()
    }
}

impl CharacterTable {
    /// (1/N) Σ_α ξ^{(k)}_α · conj(ξ^{(l)}_α).
    pub fn row_pairing(&self, k: usize, l: usize) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for a in 0..self.n {
            acc = &acc + &(self.table.get(k, a) * &self.table.get(l, a).conj());
        }
        acc.scale(&rat(1, self.n as i64))
    }

    pub fn column_pairing(&self, a: usize, b: usize) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for k in 0..self.n {
            acc = &acc + &(self.table.get(k, a) * &self.table.get(k, b).conj());
        }
        acc.scale(&rat(1, self.n as i64))
    }

    pub fn orthogonality_check(&self) -> OrthogonalityReport {
        let delta = |i: usize, k: usize| Cyclotomic::from_int((i == k) as i64);
        let mut row_failures = Vec::new();
        let mut column_failures = Vec::new();
        for k in 0..self.n {
            for l in 0..self.n {
                if self.row_pairing(k, l) != delta(k, l) {
                    row_failures.push((k, l));
                }
                if self.column_pairing(k, l) != delta(k, l) {
                    column_failures.push((k, l));
                }
            }
        }
        OrthogonalityReport {
            n: self.n,
            pairs_checked: self.n * self.n,
            row_failures,
            column_failures,
        }
    }

    /// Rows as rendered strings over ζ_N, e.g. "1, j, j^2".
    pub fn render_rows(&self) -> Vec<String> {
        self.table
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| {
                        let s = c.render_in(self.n as u32);
                        s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).map_or(s.clone(), str::to_string)
                    })
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect()
    }
}

/// √3 inside the order-12 field.
pub fn sqrt3() -> Cyclotomic {
    &zeta(12, 1).unwrap() + &zeta(12, 11).unwrap()
}

/// R(q^0), R(q), R(q²): rotations about the x_0 axis by 0, 2π/3, 4π/3.
pub fn c3_vector_rep() -> [Matrix<Cyclotomic>; 3] {
    let h = Cyclotomic::from_rational(rat(-1, 2));
    let s = sqrt3().scale(&rat(1, 2));
    let rot = |sgn: i64| {
        let o = Cyclotomic::one();
        let z = Cyclotomic::zero();
        let sv = s.scale(&rat(sgn, 1));
        Matrix::from_rows(vec![
            vec![o, z.clone(), z.clone()],
            vec![z.clone(), h.clone(), sv.clone()],
            vec![z, -&sv, h.clone()],
        ])
        .unwrap()
    };
    [Matrix::identity(3, &Cyclotomic::zero()), rot(1), rot(-1)]
}

/// Traces of the vector representation on q^0, q, q².
pub fn vector_character() -> [Cyclotomic; 3] {
    c3_vector_rep().map(|m| m.trace())
}

/// Multiplicities ⟨ξ^V, ξ^{(i)}⟩ of the irreducible characters in ξ^V.
pub fn vector_multiplicities() -> Vec<Cyclotomic> {
    let t = char_table(3).unwrap();
    let chi = vector_character();
    (0..3)
        .map(|i| {
            let mut acc = Cyclotomic::zero();
            for (a, c) in chi.iter().enumerate() {
                acc = &acc + &(c * &t.table.get(i, a).conj());
            }
            acc.scale(&rat(1, 3))
        })
        .collect()
}

/// x̂ = Σ_i x_i R(q^i) as a symbolic matrix.
pub fn xhat() -> PolyMatrix {
    let reps = c3_vector_rep();
    let x = MultiPoly::vars(3);
    let mut acc = PolyMatrix::scalar(3, &MultiPoly::zero(3));
    for (m, xi) in reps.iter().zip(&x) {
        acc = acc.add(&m.to_poly(3).scale(xi));
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct XhatReport {
    pub det: String,
    pub matches_cubic_form: bool,
}

pub fn xhat_check() -> XhatReport {
    let d = xhat().det().unwrap();
    let f = expand_norm_form(3, Eps::Plus).unwrap().form;
    XhatReport {
        det: d.render(),
        matches_cubic_form: d == f,
    }
}

/// Unnormalized Ŝ with entries j^{kl}; Ŝ·Ŝ† = 3I.
pub fn s_hat() -> Matrix<Cyclotomic> {
    char_table(3).unwrap().table
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DftReport {
    pub unitary_up_to_three: bool,
    pub q1_diagonal: bool,
    pub q1_squared_diagonal: bool,
    pub identity_fixed: bool,
}

impl DftReport {
    pub fn passed(&self) -> bool {
        self.unitary_up_to_three && self.q1_diagonal && self.q1_squared_diagonal && self.identity_fixed
    }
}

/// Ŝ⁻¹ M Ŝ with Ŝ⁻¹ = Ŝ†/3.
pub fn dft_conjugate(m: &Matrix<Cyclotomic>) -> Matrix<Cyclotomic> {
    let s = s_hat();
    s.conj_transpose().mul(m).mul(&s).scale(&Cyclotomic::from_rational(rat(1, 3)))
}

pub fn dft_conjugation() -> DftReport {
    let s = s_hat();
    let one = Cyclotomic::one();
    let q1 = CnNumber::basis(3, Eps::Plus, 1, &one).unwrap().regular_rep();
    let diag = |e: [i64; 3]| {
        Matrix::from_fn(3, |i, k| if i == k { zeta(3, e[i]).unwrap() } else { Cyclotomic::zero() })
    };
    let id = Matrix::identity(3, &one);
    DftReport {
        unitary_up_to_three: s.mul(&s.conj_transpose()) == Matrix::scalar(3, &Cyclotomic::from_int(3)),
        q1_diagonal: dft_conjugate(&q1) == diag([0, 1, 2]),
        q1_squared_diagonal: dft_conjugate(&q1.mul(&q1)) == diag([0, 2, 1]),
        identity_fixed: dft_conjugate(&id) == id,
    }
}
