use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use super::{printed, CnError, CnNumber, Eps};
use crate::exactnum::Cyclotomic;
use crate::polyring::{parse_poly, Matrix, MultiPoly};

/// Degree-N form z·z̃·…·z^{(N−1)} in the variables x_0..x_{N−1}.
#[derive(Clone, Debug, PartialEq)]
pub struct NormForm {
    pub n: usize,
    pub eps: Eps,
    pub form: MultiPoly,
}

pub const MAX_NORM_FORM_ORDER: usize = 8;

/// Symbolic norm of the generic element, cached per (N, ε).
pub fn expand_norm_form(n: usize, eps: Eps) -> Result<NormForm, CnError> {
    if !(2..=MAX_NORM_FORM_ORDER).contains(&n) {
        return Err(CnError::OrderOutOfRange(n));
    }
    static CACHE: OnceLock<Mutex<HashMap<(usize, Eps), MultiPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&(n, eps)) {
        return Ok(NormForm { n, eps, form: f.clone() });
    }
    let form = CnNumber::symbolic(n, eps)?.norm();
    debug_assert!(form.is_homogeneous(n as u32));
    cache.lock().unwrap().insert((n, eps), form.clone());
    Ok(NormForm { n, eps, form })
}

/// One coefficient disagreement between two polynomials.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TermDiff {
    pub monomial: String,
    pub computed: String,
    pub printed: String,
}

/// Structured comparison of a printed polynomial against a computed one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolyDiff {
    pub label: String,
    pub computed_terms: usize,
    pub printed_terms: usize,
    pub mismatches: Vec<TermDiff>,
}

impl PolyDiff {
    pub fn new(label: &str, computed: &MultiPoly, printed: &MultiPoly) -> Self {
        let amb = computed.ambient_order();
        let mismatches = computed
            .diff_terms(printed)
            .into_iter()
            .map(|(e, a, b)| TermDiff {
                monomial: MultiPoly::monomial(e.len(), e, Cyclotomic::one()).render(),
                computed: a.render_in(amb),
                printed: b.render_in(amb),
            })
            .collect();
        PolyDiff {
            label: label.to_string(),
            computed_terms: computed.num_terms(),
            printed_terms: printed.num_terms(),
            mismatches,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Result of expanding a claimed factored form.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationReport {
    pub n: usize,
    pub eps: Eps,
    pub factors: Vec<MultiPoly>,
    pub product: MultiPoly,
    pub norm: MultiPoly,
    pub notes: Vec<String>,
}

impl FactorizationReport {
    pub fn equal(&self) -> bool {
        self.product == self.norm
    }

    pub fn diff(&self) -> PolyDiff {
        PolyDiff::new("factorization", &self.norm, &self.product)
    }
}

fn p(src: &str, n: usize) -> MultiPoly {
    parse_poly(src, n, n as u32).expect("built-in fixture parses")
}

/// Expand the claimed factorization for (N, ε) and compare with the norm form.
pub fn factorization_check(n: usize, eps: Eps) -> Result<FactorizationReport, CnError> {
    let mut notes = Vec::new();
    let factors: Vec<MultiPoly> = match (n, eps) {
        (3, Eps::Plus) => vec![
            p("x0 + x1 + x2", 3),
            p("x0^2 + x1^2 + x2^2 - x0 x1 - x1 x2 - x2 x0", 3),
        ],
        (4, Eps::Plus) => vec![p(printed::QUARTIC_A_FACTORED, 4)],
        (4, Eps::Minus) => vec![p(printed::QUARTIC_B_SQUARES, 4)],
        (6, Eps::Plus) => {
            notes.push("stray symbol x_6 removed from both linear factors".to_string());
            printed::SEXTIC_A_FACTORS
                .iter()
                .map(|s| p(&s.replace("+x_6", ""), 6))
                .collect()
        }
        _ => {
            return Err(CnError::Unsupported(format!(
                "no claimed factorization for N={n}, eps={eps}"
            )))
        }
    };
    let product = factors.iter().fold(MultiPoly::one(n), |a, f| &a * f);
    let norm = expand_norm_form(n, eps)?.form;
    Ok(FactorizationReport {
        n,
        eps,
        factors,
        product,
        norm,
        notes,
    })
}

/// Parse a printed polynomial fixture in N variables.
pub fn printed_form(src: &str, n: usize) -> MultiPoly {
    p(src, n)
}

/// Diffs of every printed quartic and sextic form against the computed norm forms.
pub fn printed_form_diffs() -> Vec<PolyDiff> {
    let f4a = expand_norm_form(4, Eps::Plus).unwrap().form;
    let f4b = expand_norm_form(4, Eps::Minus).unwrap().form;
    let f6a = expand_norm_form(6, Eps::Plus).unwrap().form;
    let f6b = expand_norm_form(6, Eps::Minus).unwrap().form;
    vec![
        PolyDiff::new("quartic A expansion", &f4a, &p(printed::QUARTIC_A, 4)),
        PolyDiff::new("quartic B expansion", &f4b, &p(printed::QUARTIC_B, 4)),
        PolyDiff::new("sextic A, z[] form", &f6a, &p(printed::SEXTIC_A_Z, 6)),
        PolyDiff::new("sextic A, x form", &f6a, &p(printed::SEXTIC_A_X, 6)),
        PolyDiff::new("sextic B, z[] form", &f6b, &p(printed::SEXTIC_B_Z, 6)),
        PolyDiff::new("sextic B, x form", &f6b, &p(printed::SEXTIC_B_X, 6)),
        PolyDiff::new("sextic B, orbit-sum form", &f6b, &p(printed::SEXTIC_B_SUM, 6)),
    ]
}

/// The displayed 6×6 matrix for q^6 = −1, built from its sign pattern.
pub fn sextic_b_display_matrix() -> Matrix<MultiPoly> {
    let x = MultiPoly::vars(6);
    Matrix::from_fn(6, |r, c| {
        let v = &x[(c + 6 - r) % 6];
        if printed::SEXTIC_B_MATRIX_SIGNS[r][c] < 0 {
            -v
        } else {
            v.clone()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rational};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cubic_and_binary_forms() {
        let f = expand_norm_form(3, Eps::Plus).unwrap().form;
        assert_eq!(f, p("x0^3 + x1^3 + x2^3 - 3 x0 x1 x2", 3));
        let g = expand_norm_form(2, Eps::Minus).unwrap().form;
        assert_eq!(g, p("x0^2 + x1^2", 2));
        assert_eq!(expand_norm_form(9, Eps::Plus), Err(CnError::OrderOutOfRange(9)));
    }

    #[test]
    fn quartic_forms_match_displays() {
        let d = printed_form_diffs();
        assert!(d[0].is_clean(), "{:?}", d[0]);
        assert!(d[1].is_clean(), "{:?}", d[1]);
    }

    #[test]
    fn basis_vectors_norm_to_signed_powers() {
        // form(e_k) = (ε·(−1)^{N−1})^k: the conjugate product of q^k is ζ^{k N(N−1)/2} ε^k.
        for n in 2..=6usize {
            for eps in [Eps::Plus, Eps::Minus] {
                let f = expand_norm_form(n, eps).unwrap().form;
                for k in 0..n {
                    let mut pt = vec![Cyclotomic::zero(); n];
                    pt[k] = Cyclotomic::one();
                    let s = eps.sign() * if n % 2 == 0 { -1 } else { 1 };
                    let expect = if k % 2 == 1 { s } else { 1 };
                    assert_eq!(f.eval(&pt).unwrap(), Cyclotomic::from_int(expect), "n={n} eps={eps} k={k}");
                }
            }
        }
    }

    #[test]
    fn factorizations_expand_to_the_norm() {
        for (n, eps) in [(3, Eps::Plus), (4, Eps::Plus), (4, Eps::Minus), (6, Eps::Plus)] {
            let r = factorization_check(n, eps).unwrap();
            assert!(r.equal(), "N={n} eps={eps}: {:?}", r.diff());
        }
        assert!(matches!(factorization_check(5, Eps::Plus), Err(CnError::Unsupported(_))));
    }

    #[test]
    fn determinant_of_regular_rep_is_the_norm() {
        for n in 2..=6usize {
            for eps in [Eps::Plus, Eps::Minus] {
                let z = CnNumber::symbolic(n, eps).unwrap();
                assert_eq!(z.regular_rep().det().unwrap(), expand_norm_form(n, eps).unwrap().form);
            }
        }
    }

    #[test]
    fn sextic_printed_forms() {
        let d = printed_form_diffs();
        assert!(d[2].is_clean());
        assert!(d[3].is_clean());
        assert!(d[4].is_clean());
        assert_eq!(d[5].mismatches.len(), 20);
        assert!(!d[6].is_clean());
        // the x-form for q^6 = −1 is the determinant of the displayed matrix, which is the
        // regular representation of (x0, −x1, …, −x5) rather than of z
        let disp = sextic_b_display_matrix();
        assert_eq!(disp.det().unwrap(), printed_form(printed::SEXTIC_B_X, 6));
        let x = MultiPoly::vars(6);
        let flipped: Vec<MultiPoly> = x.iter().enumerate().map(|(k, v)| if k == 0 { v.clone() } else { -v }).collect();
        assert_eq!(CnNumber::new(6, Eps::Minus, flipped).unwrap().regular_rep(), disp);
    }

    #[test]
    fn norm_is_multiplicative_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut sample = |n: usize, eps: Eps| -> CnNumber<Rational> {
            CnNumber::new(n, eps, (0..n).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect()).unwrap()
        };
        for (n, eps) in [(2, Eps::Minus), (3, Eps::Plus), (4, Eps::Plus), (4, Eps::Minus), (6, Eps::Minus)] {
            for _ in 0..10 {
                let a = sample(n, eps);
                let b = sample(n, eps);
                assert_eq!(a.mul(&b).norm_rational(), a.norm_rational() * b.norm_rational());
            }
        }
        let one = CnNumber::new(3, Eps::Plus, vec![int(1), int(0), int(0)]).unwrap();
        assert_eq!(one.norm_rational(), int(1));
    }
}
