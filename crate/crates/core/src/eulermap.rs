//! Floating-point Euler map exp(Σ φ_k q^k), the multi-sine functions, the
//! ternary logarithm and polar form, and the norm-preserving matrices.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::cn_algebra::{expand_norm_form, CnError, CnNumber, Eps, MAX_NORM_FORM_ORDER};
use crate::exactnum::{Cyclotomic, Rational};

/// Inputs φ_k are clamped to this magnitude.
pub const PHI_CLAMP: f64 = 20.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EulerError {
    #[error("norm {0} is not positive")]
    NonPositiveNorm(f64),
    #[error("z lies on an ideal plane: a conjugate linear combination vanishes")]
    SingularCombination,
    #[error("zero norm")]
    ZeroNorm,
    #[error("expected {expected} phases, got {got}")]
    PhaseCount { expected: usize, got: usize },
    #[error(transparent)]
    Algebra(#[from] CnError),
}

/// Components m_0..m_{N−1} of exp(Σ φ_k q^k).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MultiSine {
    pub n: usize,
    pub eps: Eps,
    pub m: Vec<f64>,
}

impl MultiSine {
    pub fn as_cn(&self) -> CnNumber<f64> {
        CnNumber::new(self.n, self.eps, self.m.clone()).unwrap()
    }

    /// Norm form at m minus one.
    pub fn unimodularity_residual(&self) -> f64 {
        norm_form_value(self.n, self.eps, &self.m) - 1.0
    }
}

/// Row-convention regular representation over f64.
pub fn regular_rep_f64(z: &CnNumber<f64>) -> DMatrix<f64> {
    let r = z.regular_rep();
    DMatrix::from_fn(z.n(), z.n(), |i, k| *r.get(i, k))
}

/// Degree-N norm form at x. The binary inputs are converted to exact rationals and the
/// expanded form is evaluated without rounding, so the result reflects x alone and not
/// the cancellation among large terms of the expansion.
pub fn norm_form_value(n: usize, eps: Eps, x: &[f64]) -> f64 {
    if n <= MAX_NORM_FORM_ORDER && x.iter().all(|v| v.is_finite()) {
        let pt: Vec<Cyclotomic> = x
            .iter()
            .map(|&v| Cyclotomic::from_rational(Rational::from_float(v).unwrap()))
            .collect();
        let val = expand_norm_form(n, eps).unwrap().form.eval(&pt).unwrap();
        val.to_rational().and_then(|r| r.to_f64()).unwrap_or(f64::NAN)
    } else {
        CnNumber::new(n, eps, x.to_vec()).unwrap().norm_f64()
    }
}

fn phases(n: usize, eps: Eps, phi: &[f64]) -> Result<CnNumber<f64>, EulerError> {
    if phi.len() != n.saturating_sub(1) {
        return Err(EulerError::PhaseCount {
            expected: n.saturating_sub(1),
            got: phi.len(),
        });
    }
    let mut g = vec![0.0];
    g.extend(phi.iter().map(|p| p.clamp(-PHI_CLAMP, PHI_CLAMP)));
    Ok(CnNumber::new(n, eps, g)?)
}

/// exp(φ_1 q + … + φ_{N−1} q^{N−1}) via the matrix exponential of the regular representation.
pub fn cn_exp(n: usize, eps: Eps, phi: &[f64]) -> Result<MultiSine, EulerError> {
    let g = phases(n, eps, phi)?;
    let e = regular_rep_f64(&g).exp();
    Ok(MultiSine {
        n,
        eps,
        m: e.row(0).iter().copied().collect(),
    })
}

/// O = regular representation of cn_exp(φ); x' = O x preserves the norm form.
pub fn invariance_matrix(n: usize, eps: Eps, phi: &[f64]) -> Result<DMatrix<f64>, EulerError> {
    Ok(regular_rep_f64(&cn_exp(n, eps, phi)?.as_cn()))
}

/// Each row is the previous one shifted right, with the wrapped entry multiplied by ε.
pub fn is_twisted_circulant(o: &DMatrix<f64>, eps: Eps) -> bool {
    let n = o.nrows();
    let s = eps.sign() as f64;
    (1..n).all(|r| {
        (0..n).all(|c| {
            let want = if c == 0 { s * o[(r - 1, n - 1)] } else { o[(r - 1, c - 1)] };
            o[(r, c)] == want
        })
    })
}

/// The displayed 6×6 matrix for q^6 = −1 built from multi-sines m: row r, column c
/// carries ±m_{(c−r) mod 6} with the printed sign pattern.
pub fn sextic_b_display(m: &[f64]) -> DMatrix<f64> {
    const SIGNS: [[i8; 6]; 6] = [
        [1, -1, 1, -1, 1, -1],
        [1, 1, -1, 1, -1, 1],
        [-1, 1, 1, -1, 1, -1],
        [1, -1, 1, 1, -1, 1],
        [-1, 1, -1, 1, 1, -1],
        [1, -1, 1, -1, 1, 1],
    ];
    DMatrix::from_fn(6, 6, |r, c| SIGNS[r][c] as f64 * m[(c + 6 - r) % 6])
}

/// Appell functions (c, s, t) from the eigenvalue sums with complex exponentials.
pub fn appell_closed_form(phi1: f64, phi2: f64) -> [f64; 3] {
    let j = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let j2 = j * j;
    let e0 = Complex64::new(phi1 + phi2, 0.0).exp();
    let e1 = (j * phi1 + j2 * phi2).exp();
    let e2 = (j2 * phi1 + j * phi2).exp();
    let c = (e0 + e1 + e2) / 3.0;
    let s = (e0 + j2 * e1 + j * e2) / 3.0;
    let t = (e0 + j * e1 + j2 * e2) / 3.0;
    [c.re, s.re, t.re]
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct So2Limit {
    pub c0: f64,
    pub s0: f64,
    pub t0: f64,
    /// c²+s²+t² − 1
    pub sum_squares_residual: f64,
    /// cs+st+tc
    pub pair_sum: f64,
    /// c³+s³+t³−3cst − 1
    pub cubic_residual: f64,
}

/// Compact one-parameter subgroup exp(α(q − q²)), with φ = √3 α.
pub fn so2_limit(alpha: f64) -> So2Limit {
    let phi = 3f64.sqrt() * alpha;
    let c0 = (1.0 + 2.0 * phi.cos()) / 3.0;
    let s0 = (1.0 + 2.0 * (phi - 2.0 * PI / 3.0).cos()) / 3.0;
    let t0 = (1.0 + 2.0 * (phi + 2.0 * PI / 3.0).cos()) / 3.0;
    So2Limit {
        c0,
        s0,
        t0,
        sum_squares_residual: c0 * c0 + s0 * s0 + t0 * t0 - 1.0,
        pair_sum: c0 * s0 + s0 * t0 + t0 * c0,
        cubic_residual: c0.powi(3) + s0.powi(3) + t0.powi(3) - 3.0 * c0 * s0 * t0 - 1.0,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct So11Limit {
    pub c: f64,
    pub s: f64,
    /// (c−s)²(c+2s) − 1
    pub residual: f64,
}

/// Non-compact subgroup exp(α(q + q²)).
pub fn so11_limit(alpha: f64) -> So11Limit {
    let (a, b) = ((2.0 * alpha).exp(), (-alpha).exp());
    let c = (a + 2.0 * b) / 3.0;
    let s = (a - b) / 3.0;
    So11Limit {
        c,
        s,
        residual: (c - s).powi(2) * (c + 2.0 * s) - 1.0,
    }
}

fn j3() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI / 3.0)
}

fn cubic_norm(z: [f64; 3]) -> f64 {
    z[0].powi(3) + z[1].powi(3) + z[2].powi(3) - 3.0 * z[0] * z[1] * z[2]
}

/// (a, w) = (x0+x1+x2, x0+j x1+j² x2), after checking the domain.
fn eigen_combinations(z: [f64; 3]) -> Result<(f64, Complex64), EulerError> {
    let nz = cubic_norm(z);
    let a = z[0] + z[1] + z[2];
    let w = z[0] + j3() * z[1] + j3() * j3() * z[2];
    let scale = z.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if w.norm() <= 1e-12 * scale {
        return Err(EulerError::SingularCombination);
    }
    if nz <= 0.0 || a <= 0.0 {
        return Err(EulerError::NonPositiveNorm(nz));
    }
    Ok((a, w))
}

/// ((ln z)_0, (ln z)_1, (ln z)_2) on the principal branch.
pub fn cn_log(z: [f64; 3]) -> Result<[f64; 3], EulerError> {
    let (a, w) = eigen_combinations(z)?;
    let lw = w.ln();
    let j = j3();
    let l0 = cubic_norm(z).ln() / 3.0;
    let l1 = (a.ln() + 2.0 * (j * j * lw).re) / 3.0;
    let l2 = (a.ln() + 2.0 * (j * lw).re) / 3.0;
    Ok([l0, l1, l2])
}

/// ρ·exp(φ_1 q + φ_2 q²) from a logarithm triple.
pub fn cn_exp_log(l: [f64; 3]) -> [f64; 3] {
    let m = cn_exp(3, Eps::Plus, &[l[1], l[2]]).unwrap().m;
    let rho = l[0].exp();
    [rho * m[0], rho * m[1], rho * m[2]]
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Polar {
    pub rho: f64,
    /// compact angle in [0, 2π/√3)
    pub theta: f64,
    pub phi: f64,
}

impl Polar {
    /// ρ·exp(θ(q − q²) + φ(q + q²)).
    pub fn reconstruct(&self) -> [f64; 3] {
        let m = cn_exp(3, Eps::Plus, &[self.theta + self.phi, self.phi - self.theta])
            .unwrap()
            .m;
        [self.rho * m[0], self.rho * m[1], self.rho * m[2]]
    }
}

pub fn polar_decompose(z: [f64; 3]) -> Result<Polar, EulerError> {
    let (a, w) = eigen_combinations(z)?;
    let rho = cubic_norm(z).cbrt();
    let period = 2.0 * PI / 3f64.sqrt();
    let theta = (w.arg() / 3f64.sqrt()).rem_euclid(period);
    Ok(Polar {
        rho,
        theta: if theta >= period { 0.0 } else { theta },
        phi: (a / rho).ln() / 2.0,
    })
}

/// z̄ = z̃·z̃̃ / ρ with ρ the cube root of the norm.
pub fn duality_map(z: [f64; 3]) -> Result<[f64; 3], EulerError> {
    let nz = cubic_norm(z);
    if nz == 0.0 {
        return Err(EulerError::ZeroNorm);
    }
    let [x0, x1, x2] = z;
    let rho = nz.cbrt();
    Ok([
        (x0 * x0 - x1 * x2) / rho,
        (x2 * x2 - x0 * x1) / rho,
        (x1 * x1 - x2 * x0) / rho,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * (1.0 + y.abs()))
    }

    #[test]
    fn zero_phase_is_identity() {
        for n in 2..=6 {
            for eps in [Eps::Plus, Eps::Minus] {
                let m = cn_exp(n, eps, &vec![0.0; n - 1]).unwrap().m;
                let mut e = vec![0.0; n];
                e[0] = 1.0;
                assert_eq!(m, e);
                let o = invariance_matrix(n, eps, &vec![0.0; n - 1]).unwrap();
                assert_eq!(o, DMatrix::identity(n, n));
            }
        }
        assert!(matches!(cn_exp(3, Eps::Plus, &[1.0]), Err(EulerError::PhaseCount { .. })));
    }

    #[test]
    fn appell_functions_agree_with_matrix_exponential() {
        for (p1, p2) in [(1.0, 0.0), (0.7, -0.2), (-1.3, 2.1)] {
            let m = cn_exp(3, Eps::Plus, &[p1, p2]).unwrap();
            assert!(close(&m.m, &appell_closed_form(p1, p2), 1e-12));
            assert!(m.unimodularity_residual().abs() < 1e-10);
        }
    }

    #[test]
    fn binary_case_is_euler_formula() {
        let m = cn_exp(2, Eps::Minus, &[0.9]).unwrap().m;
        assert!(close(&m, &[0.9f64.cos(), 0.9f64.sin()], 1e-14));
    }

    #[test]
    fn unimodular_and_homomorphic() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in [3usize, 4, 6] {
            for eps in [Eps::Plus, Eps::Minus] {
                for _ in 0..20 {
                    let a: Vec<f64> = (1..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
                    let b: Vec<f64> = (1..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
                    let ea = cn_exp(n, eps, &a).unwrap();
                    let eb = cn_exp(n, eps, &b).unwrap();
                    assert!(ea.unimodularity_residual().abs() < 1e-9);
                    let sum: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                    let eab = cn_exp(n, eps, &sum).unwrap();
                    assert!(close(ea.as_cn().mul(&eb.as_cn()).coeffs(), &eab.m, 1e-9));
                }
            }
        }
    }

    #[test]
    fn invariance_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for eps in [Eps::Plus, Eps::Minus] {
            let phi: Vec<f64> = (0..5).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let o = invariance_matrix(6, eps, &phi).unwrap();
            assert!((o.determinant() - 1.0).abs() < 1e-9);
            assert!(is_twisted_circulant(&o, eps));
            let g = regular_rep_f64(&CnNumber::new(6, eps, [0.0].iter().chain(&phi).copied().collect()).unwrap());
            assert!((&o - g.exp()).abs().max() < 1e-12);
            let x: Vec<f64> = (0..6).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let ox: Vec<f64> = (&o * nalgebra::DVector::from_vec(x.clone())).iter().copied().collect();
            let (f0, f1) = (norm_form_value(6, eps, &x), norm_form_value(6, eps, &ox));
            assert!((f0 - f1).abs() <= 1e-8 * f0.abs().max(1.0));
        }
    }

    #[test]
    fn sextic_b_display_is_the_conjugate_element() {
        let phi = [0.3, -0.4, 0.2, 0.5, -0.1];
        let m = cn_exp(6, Eps::Minus, &phi).unwrap();
        let disp = sextic_b_display(&m.m);
        let flipped: Vec<f64> = m.m.iter().enumerate().map(|(k, v)| if k % 2 == 1 { -v } else { *v }).collect();
        let o = regular_rep_f64(&CnNumber::new(6, Eps::Minus, flipped).unwrap());
        assert_eq!(disp, o);
        assert!((disp.determinant() - 1.0).abs() < 1e-9);
        // the printed pattern is not the plain regular representation of m
        assert_ne!(disp, invariance_matrix(6, Eps::Minus, &phi).unwrap());
    }

    #[test]
    fn so2_limit_identities() {
        assert!(close(&{ let s = so2_limit(0.0); [s.c0, s.s0, s.t0] }, &[1.0, 0.0, 0.0], 1e-15));
        for alpha in [-2.0, -0.3, 0.4, 1.7, 5.0] {
            let s = so2_limit(alpha);
            assert!(s.sum_squares_residual.abs() < 1e-12);
            assert!(s.pair_sum.abs() < 1e-12);
            assert!(s.cubic_residual.abs() < 1e-12);
            assert!((s.c0 + s.s0 + s.t0 - 1.0).abs() < 1e-12);
            let m = cn_exp(3, Eps::Plus, &[alpha, -alpha]).unwrap().m;
            assert!(close(&m, &[s.c0, s.s0, s.t0], 1e-10));
        }
    }

    #[test]
    fn so11_limit_identities() {
        let z = so11_limit(0.0);
        assert_eq!((z.c, z.s), (1.0, 0.0));
        let one = so11_limit(1.0);
        assert!((one.c - one.s - (-1f64).exp()).abs() < 1e-14);
        assert!((one.c + 2.0 * one.s - 2f64.exp()).abs() < 1e-13);
        for alpha in [-1.5, 0.2, 2.5] {
            let s = so11_limit(alpha);
            assert!(s.residual.abs() < 1e-12);
            let m = cn_exp(3, Eps::Plus, &[alpha, alpha]).unwrap().m;
            assert!(close(&m, &[s.c, s.s, s.s], 1e-10));
        }
    }

    #[test]
    fn logarithm_and_polar_form() {
        assert!(close(&cn_log([1.0, 0.0, 0.0]).unwrap(), &[0.0, 0.0, 0.0], 1e-15));
        let m = cn_exp(3, Eps::Plus, &[0.7, -0.2]).unwrap().m;
        let z = [2.0 * m[0], 2.0 * m[1], 2.0 * m[2]];
        assert!(close(&cn_log(z).unwrap(), &[2f64.ln(), 0.7, -0.2], 1e-9));
        assert_eq!(cn_log([1.0, 1.0, 1.0]), Err(EulerError::SingularCombination));
        let p = polar_decompose([2.0, 0.0, 0.0]).unwrap();
        assert!((p.rho - 2.0).abs() < 1e-15 && p.theta == 0.0 && p.phi.abs() < 1e-15);
        assert!(matches!(polar_decompose([1.0, -1.0, 0.0]), Err(EulerError::NonPositiveNorm(_))));
        let q = polar_decompose(z).unwrap();
        assert!(close(&q.reconstruct(), &z, 1e-9));
    }

    #[test]
    fn duality_flips_phases() {
        assert_eq!(duality_map([1.0, 0.0, 0.0]).unwrap(), [1.0, 0.0, 0.0]);
        assert_eq!(duality_map([1.0, 1.0, 1.0]), Err(EulerError::ZeroNorm));
        let (a, b) = (0.4, -1.1);
        let z = cn_exp(3, Eps::Plus, &[a, b]).unwrap().m;
        let d = duality_map([z[0], z[1], z[2]]).unwrap();
        assert!(close(&d, &cn_exp(3, Eps::Plus, &[-a, -b]).unwrap().m, 1e-9));
        let w = [3.0, 1.0, 0.5];
        let dw = duality_map(w).unwrap();
        assert!((cubic_norm(dw) - cubic_norm(w)).abs() < 1e-9 * cubic_norm(w));
        let l = cn_log(dw).unwrap();
        let lw = cn_log(w).unwrap();
        assert!(close(&l, &[lw[0], -lw[1], -lw[2]], 1e-9));
    }
}
