//! Conjugate-coordinate calculus on C_N^ε: the derivatives ∂/∂z_s, the
//! Cauchy–Riemann chains and the N-ary Laplace operators.
//!
//! With z_s = Σ_m ζ^{sm} x_m q^m one has x_m = (1/N) q^{−m} Σ_s ζ^{−sm} z_s, hence
//! ∂_{z_s} = (1/N) Σ_r ζ^{−sr} q^{−r} ∂_r with q^{−r} = ε q^{N−r} for r ≥ 1.

use serde::Serialize;
use thiserror::Error;

use crate::cn_algebra::{expand_norm_form, CnError, CnNumber, Eps};
use crate::exactnum::{rat, Cyclotomic};
use crate::polyring::{MultiPoly, PolyError};

pub const MAX_LAPLACIAN_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HoloError {
    #[error("conjugate index {s} out of range for N = {n}")]
    Index { s: usize, n: usize },
    #[error("holomorphy type {t} invalid for N = {n}; expected 1..={}", n - 1)]
    InvalidType { t: usize, n: usize },
    #[error("order N = {0} outside the supported range")]
    OrderOutOfRange(usize),
    #[error(transparent)]
    Algebra(#[from] CnError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// F = f_0 + f_1 q + … with each f_k a polynomial in x_0..x_{N−1}.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentFunction {
    pub f: CnNumber<MultiPoly>,
}

impl ComponentFunction {
    pub fn new(n: usize, eps: Eps, components: Vec<MultiPoly>) -> Result<Self, HoloError> {
        if components.iter().any(|c| c.nvars() != n) {
            return Err(PolyError::NvarsMismatch(n, components.iter().map(|c| c.nvars()).find(|&v| v != n).unwrap()).into());
        }
        Ok(ComponentFunction {
            f: CnNumber::new(n, eps, components)?,
        })
    }

    /// F = z^k for the generic z.
    pub fn z_power(n: usize, eps: Eps, k: u32) -> Result<Self, HoloError> {
        Ok(ComponentFunction {
            f: CnNumber::symbolic(n, eps)?.pow(k),
        })
    }

    pub fn n(&self) -> usize {
        self.f.n()
    }

    pub fn eps(&self) -> Eps {
        self.f.eps()
    }

    pub fn components(&self) -> &[MultiPoly] {
        self.f.coeffs()
    }

    /// ∂_r applied componentwise.
    pub fn coordinate_derivative(&self, r: usize) -> Result<Self, HoloError> {
        let cs = self
            .components()
            .iter()
            .map(|c| c.partial_derivative(r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ComponentFunction {
            f: CnNumber::new(self.n(), self.eps(), cs)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(MultiPoly::is_zero)
    }
}

/// Entry (s, r) of the Jacobian ∂_{z_s} = Σ_r J_{sr} ∂_r: a cyclotomic coefficient times q^power.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobianEntry {
    pub coeff: Cyclotomic,
    pub power: usize,
}

pub fn jacobian(n: usize, eps: Eps) -> Vec<Vec<JacobianEntry>> {
    let inv_n = rat(1, n as i64);
    (0..n)
        .map(|s| {
            (0..n)
                .map(|r| {
                    let twist = if r > 0 { eps.sign() } else { 1 };
                    let c = Cyclotomic::root(n as u32, -((s * r) as i64)).scale(&(&inv_n * rat(twist, 1)));
                    JacobianEntry {
                        coeff: c,
                        power: (n - r) % n,
                    }
                })
                .collect()
        })
        .collect()
}

/// ∂_{z_s} F expanded into components.
pub fn conj_derivative(f: &ComponentFunction, s: usize) -> Result<ComponentFunction, HoloError> {
    let (n, eps) = (f.n(), f.eps());
    if s >= n {
        return Err(HoloError::Index { s, n });
    }
    let row = &jacobian(n, eps)[s];
    let zero = MultiPoly::zero(n);
    let mut acc = CnNumber::new(n, eps, vec![zero.clone(); n])?;
    for (r, e) in row.iter().enumerate() {
        let dr = f.coordinate_derivative(r)?;
        let b = CnNumber::basis(n, eps, e.power, &zero)?.scale(&MultiPoly::constant(n, e.coeff.clone()));
        acc = acc.add(&dr.f.mul(&b));
    }
    Ok(ComponentFunction { f: acc })
}

/// One Cauchy–Riemann chain: the terms ε^{[r>k]} ∂_r f_k with r ≡ k − c (mod N), all of
/// which equal the c-th component of F'(z) when F is holomorphic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrChain {
    pub index: usize,
    pub labels: Vec<String>,
    pub holds: bool,
    /// Adjacent pairs that differ, as label pairs.
    pub failures: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrReport {
    pub n: usize,
    pub eps: Eps,
    pub holomorphy_type: usize,
    /// vanishing[s] is true when ∂_{z_s} F = 0.
    pub vanishing: Vec<bool>,
    /// Derivatives required to vanish: z_k..z_{N−1}.
    pub required: Vec<usize>,
    pub type_holds: bool,
    pub chains: Vec<CrChain>,
    pub chains_hold: bool,
}

impl CrReport {
    pub fn passed(&self) -> bool {
        self.type_holds && (self.holomorphy_type != 1 || self.chains_hold)
    }
}

pub fn cr_chains(f: &ComponentFunction) -> Result<Vec<CrChain>, HoloError> {
    let (n, eps) = (f.n(), f.eps());
    let mut chains = Vec::with_capacity(n);
    for c in 0..n {
        let mut labels = Vec::new();
        let mut vals = Vec::new();
        for k in 0..n {
            let r = (k + n - c) % n;
            let mut d = f.components()[k].partial_derivative(r)?;
            let neg = r > k && eps == Eps::Minus;
            if neg {
                d = -d;
            }
            labels.push(format!("{}d{r} f{k}", if neg { "-" } else { "" }));
            vals.push(d);
        }
        let failures: Vec<_> = (1..n)
            .filter(|&i| vals[i] != vals[i - 1])
            .map(|i| (labels[i - 1].clone(), labels[i].clone()))
            .collect();
        chains.push(CrChain {
            index: c,
            labels,
            holds: failures.is_empty(),
            failures,
        });
    }
    Ok(chains)
}

/// Holomorphy of type k: ∂_{z_k}, …, ∂_{z_{N−1}} vanish (type 1 is the first type).
pub fn cr_system_check(f: &ComponentFunction, holomorphy_type: usize) -> Result<CrReport, HoloError> {
    let n = f.n();
    if !(1..n).contains(&holomorphy_type) {
        return Err(HoloError::InvalidType { t: holomorphy_type, n });
    }
    let vanishing = (0..n)
        .map(|s| conj_derivative(f, s).map(|d| d.is_zero()))
        .collect::<Result<Vec<_>, _>>()?;
    let required: Vec<usize> = (holomorphy_type..n).collect();
    let type_holds = required.iter().all(|&s| vanishing[s]);
    let chains = cr_chains(f)?;
    let chains_hold = chains.iter().all(|c| c.holds);
    Ok(CrReport {
        n,
        eps: f.eps(),
        holomorphy_type,
        vanishing,
        required,
        type_holds,
        chains,
        chains_hold,
    })
}

/// Σ_s q^r ζ^{sr} ∂_{z_s} F, which must reproduce ∂_r F.
pub fn reconstruct_coordinate_derivative(f: &ComponentFunction, r: usize) -> Result<ComponentFunction, HoloError> {
    let (n, eps) = (f.n(), f.eps());
    let zero = MultiPoly::zero(n);
    let mut acc = CnNumber::new(n, eps, vec![zero.clone(); n])?;
    for s in 0..n {
        let d = conj_derivative(f, s)?;
        let w = Cyclotomic::root(n as u32, (s * r) as i64);
        let b = CnNumber::basis(n, eps, r, &zero)?.scale(&MultiPoly::constant(n, w));
        acc = acc.add(&d.f.mul(&b));
    }
    Ok(ComponentFunction { f: acc })
}

/// The norm form with x_r read as ∂_r.
pub fn nary_laplacian(n: usize, eps: Eps) -> Result<MultiPoly, HoloError> {
    if !(2..=MAX_LAPLACIAN_ORDER).contains(&n) {
        return Err(HoloError::OrderOutOfRange(n));
    }
    Ok(expand_norm_form(n, eps)?.form)
}

/// Replace each monomial ∂_0^{a_0}∂_1^{a_1}… of `op` by iterated derivatives of `f`.
pub fn apply_operator(op: &MultiPoly, f: &MultiPoly) -> Result<MultiPoly, HoloError> {
    if op.nvars() != f.nvars() {
        return Err(PolyError::NvarsMismatch(op.nvars(), f.nvars()).into());
    }
    let mut acc = MultiPoly::zero(f.nvars());
    for (exps, c) in op.terms() {
        let mut g = f.clone();
        for (v, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                if g.is_zero() {
                    break;
                }
                g = g.partial_derivative(v)?;
            }
        }
        acc = &acc + &g.scale(c);
    }
    Ok(acc)
}

/// Laplacian residual on every component of F.
pub fn laplacian_residuals(f: &ComponentFunction) -> Result<Vec<MultiPoly>, HoloError> {
    let op = nary_laplacian(f.n(), f.eps())?;
    f.components().iter().map(|c| apply_operator(&op, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::zeta;
    use crate::polyring::parse_poly;

    fn p(s: &str, n: usize) -> MultiPoly {
        parse_poly(s, n, n as u32).unwrap()
    }

    #[test]
    fn jacobian_rows_match_displays() {
        // N=3: (1, q², q), (1, j² q², j q), (1, j q², j² q), all over 3
        let j = jacobian(3, Eps::Plus);
        let third = |k: i64| zeta(3, k).unwrap().scale(&rat(1, 3));
        assert_eq!(j[1][1], JacobianEntry { coeff: third(2), power: 2 });
        assert_eq!(j[1][2], JacobianEntry { coeff: third(1), power: 1 });
        assert_eq!(j[2][1], JacobianEntry { coeff: third(1), power: 2 });
        // N=4 row 1: 1, −i q³, −q², i q over 4
        let j4 = jacobian(4, Eps::Plus);
        let i = zeta(4, 1).unwrap();
        let q = |c: Cyclotomic| c.scale(&rat(1, 4));
        assert_eq!(j4[1][1], JacobianEntry { coeff: q(-&i), power: 3 });
        assert_eq!(j4[1][2], JacobianEntry { coeff: q(Cyclotomic::from_int(-1)), power: 2 });
        assert_eq!(j4[1][3], JacobianEntry { coeff: q(i), power: 1 });
    }

    #[test]
    fn ternary_component_formula() {
        // ∂_{z_1}F, q^0 part: (∂0 f0 + j² ∂1 f1 + j ∂2 f2)/3, checked on an arbitrary F
        let f = ComponentFunction::new(3, Eps::Plus, vec![p("x0^2 x1", 3), p("x1 x2 + x0", 3), p("x2^3 - x0 x1", 3)]).unwrap();
        let d = conj_derivative(&f, 1).unwrap();
        let c = f.components();
        let d0 = |k: usize, r: usize| c[k].partial_derivative(r).unwrap();
        let want = &(&d0(0, 0) + &d0(1, 1).scale(&zeta(3, 2).unwrap())) + &d0(2, 2).scale(&zeta(3, 1).unwrap());
        assert_eq!(d.components()[0], want.scale(&Cyclotomic::from_rational(rat(1, 3))));
        assert!(matches!(conj_derivative(&f, 3), Err(HoloError::Index { .. })));
    }

    #[test]
    fn z_and_z_squared() {
        let z = ComponentFunction::z_power(3, Eps::Plus, 1).unwrap();
        assert!(conj_derivative(&z, 1).unwrap().is_zero());
        assert!(conj_derivative(&z, 2).unwrap().is_zero());
        let z2 = ComponentFunction::z_power(3, Eps::Plus, 2).unwrap();
        assert_eq!(z2.components()[0], p("x0^2 + 2 x1 x2", 3));
        assert_eq!(z2.components()[1], p("x2^2 + 2 x0 x1", 3));
        assert_eq!(z2.components()[2], p("x1^2 + 2 x0 x2", 3));
        assert!(conj_derivative(&z2, 1).unwrap().is_zero());
        let dz = conj_derivative(&z2, 0).unwrap();
        assert_eq!(dz.f, z.f.scale(&MultiPoly::constant(3, Cyclotomic::from_int(2))));
        let z3 = ComponentFunction::z_power(4, Eps::Plus, 3).unwrap();
        for s in 1..4 {
            assert!(conj_derivative(&z3, s).unwrap().is_zero());
        }
    }

    #[test]
    fn first_type_chains_for_powers() {
        for n in [3usize, 4] {
            for k in 1..=6 {
                let f = ComponentFunction::z_power(n, Eps::Plus, k).unwrap();
                let r = cr_system_check(&f, 1).unwrap();
                assert!(r.passed(), "N={n} k={k}: {r:?}");
                assert_eq!(r.chains.len(), n);
            }
        }
    }

    #[test]
    fn non_holomorphic_fails() {
        let f = ComponentFunction::new(3, Eps::Plus, vec![p("x0", 3), MultiPoly::zero(3), MultiPoly::zero(3)]).unwrap();
        let r = cr_system_check(&f, 1).unwrap();
        assert!(!r.passed());
        assert_eq!(r.chains[0].failures[0], ("d0 f0".to_string(), "d1 f1".to_string()));
        assert!(matches!(cr_system_check(&f, 3), Err(HoloError::InvalidType { .. })));
        assert!(matches!(cr_system_check(&f, 0), Err(HoloError::InvalidType { .. })));
    }

    #[test]
    fn binary_case_is_classical() {
        for k in 1..=5 {
            let f = ComponentFunction::z_power(2, Eps::Minus, k).unwrap();
            let r = cr_system_check(&f, 1).unwrap();
            assert!(r.passed());
            assert_eq!(r.chains[1].labels, vec!["-d1 f0", "d0 f1"]);
            assert!(laplacian_residuals(&f).unwrap().iter().all(MultiPoly::is_zero));
        }
        assert_eq!(nary_laplacian(2, Eps::Minus).unwrap(), p("x0^2 + x1^2", 2));
    }

    #[test]
    fn laplacians() {
        assert_eq!(nary_laplacian(3, Eps::Plus).unwrap(), p("x0^3+x1^3+x2^3-3x0x1x2", 3));
        let quartic = "x0^4-x1^4+x2^4-x3^4-2x0^2x2^2+2x1^2x3^2-4x0^2x1x3+4x1^2x0x2-4x2^2x1x3+4x3^2x0x2";
        assert_eq!(nary_laplacian(4, Eps::Plus).unwrap(), p(quartic, 4));
        assert!(nary_laplacian(7, Eps::Plus).is_err());
        let lap3 = nary_laplacian(3, Eps::Plus).unwrap();
        assert_eq!(apply_operator(&lap3, &p("x0^3", 3)).unwrap(), p("6", 3));
        for (n, ks) in [(3usize, 1..=6u32), (4, 1..=6)] {
            for k in ks {
                let f = ComponentFunction::z_power(n, Eps::Plus, k).unwrap();
                assert!(laplacian_residuals(&f).unwrap().iter().all(MultiPoly::is_zero));
            }
        }
    }

    #[test]
    fn cubic_laplacian_factorizes() {
        let f = p("(x0 + x1 + x2)(x0 + j x1 + j^2 x2)(x0 + j^2 x1 + j x2)", 3);
        assert_eq!(f, nary_laplacian(3, Eps::Plus).unwrap());
    }

    #[test]
    fn chain_rule_consistency() {
        let f = ComponentFunction::new(3, Eps::Plus, vec![p("x0^2 x2", 3), p("x1^3 + x0", 3), p("x0 x1 x2", 3)]).unwrap();
        for r in 0..3 {
            assert_eq!(reconstruct_coordinate_derivative(&f, r).unwrap(), f.coordinate_derivative(r).unwrap());
        }
        let g = ComponentFunction::new(4, Eps::Minus, vec![p("x0 x3", 4), p("x1^2", 4), p("x2", 4), p("x3 x0^2", 4)]).unwrap();
        for r in 0..4 {
            assert_eq!(reconstruct_coordinate_derivative(&g, r).unwrap(), g.coordinate_derivative(r).unwrap());
        }
    }

    #[test]
    fn products_of_holomorphic_functions() {
        let z2 = ComponentFunction::z_power(3, Eps::Plus, 2).unwrap();
        let z3 = ComponentFunction::z_power(3, Eps::Plus, 3).unwrap();
        let prod = ComponentFunction { f: z2.f.mul(&z3.f) };
        assert!(cr_system_check(&prod, 1).unwrap().passed());
    }

    #[test]
    fn twisted_algebras_are_holomorphic_too() {
        for n in [3usize, 4, 6] {
            let f = ComponentFunction::z_power(n, Eps::Minus, 3).unwrap();
            assert!(cr_system_check(&f, 1).unwrap().passed(), "N={n}");
        }
    }
}
