use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::CnError;
use crate::exactnum::{Cyclotomic, Rational, MAX_ORDER};
use crate::polyring::{Matrix, MultiPoly};
use crate::ring::{CycloScale, Ring};

/// The sign ε in q^N = ε. Case "A" is ε = +1, case "B" is ε = −1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Eps {
    Plus,
    Minus,
}

impl Eps {
    pub fn sign(self) -> i64 {
        match self {
            Eps::Plus => 1,
            Eps::Minus => -1,
        }
    }

    pub fn case_label(self) -> &'static str {
        match self {
            Eps::Plus => "A",
            Eps::Minus => "B",
        }
    }

    /// ε^k.
    pub fn pow(self, k: usize) -> i64 {
        if self == Eps::Minus && k % 2 == 1 {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Eps::Plus => "+1",
            Eps::Minus => "-1",
        })
    }
}

impl FromStr for Eps {
    type Err = CnError;
    fn from_str(s: &str) -> Result<Self, CnError> {
        match s.trim() {
            "+1" | "1" | "+" | "A" | "a" => Ok(Eps::Plus),
            "-1" | "-" | "B" | "b" => Ok(Eps::Minus),
            other => Err(CnError::Parse(format!("bad sign '{other}'"))),
        }
    }
}

/// Element x_0 + x_1 q + … + x_{N−1} q^{N−1} of R[q]/(q^N − ε).
#[derive(Clone, Debug, PartialEq)]
pub struct CnNumber<R> {
    n: usize,
    eps: Eps,
    coeffs: Vec<R>,
}

impl<R: Ring> CnNumber<R> {
    pub fn new(n: usize, eps: Eps, coeffs: Vec<R>) -> Result<Self, CnError> {
        if !(2..=MAX_ORDER as usize).contains(&n) {
            return Err(CnError::OrderOutOfRange(n));
        }
        if coeffs.len() != n {
            return Err(CnError::LengthMismatch {
                expected: n,
                got: coeffs.len(),
            });
        }
        Ok(CnNumber { n, eps, coeffs })
    }

    /// q^k (k taken mod N, with the ε twist) scaled into the ring of `template`.
    pub fn basis(n: usize, eps: Eps, k: usize, template: &R) -> Result<Self, CnError> {
        let mut cs = vec![template.zero_like(); n];
        let one = template.one_like();
        cs[k % n] = if eps.pow(k / n) == 1 { one } else { one.negate() };
        Self::new(n, eps, cs)
    }

    pub fn one(n: usize, eps: Eps, template: &R) -> Result<Self, CnError> {
        Self::basis(n, eps, 0, template)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eps(&self) -> Eps {
        self.eps
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn component(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> CnNumber<S> {
        CnNumber {
            n: self.n,
            eps: self.eps,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn same_algebra(&self, rhs: &Self) -> Result<(), CnError> {
        if self.n == rhs.n && self.eps == rhs.eps {
            Ok(())
        } else {
            Err(CnError::StructureMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, CnError> {
        self.same_algebra(rhs)?;
        Ok(CnNumber {
            n: self.n,
            eps: self.eps,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, CnError> {
        self.same_algebra(rhs)?;
        Ok(CnNumber {
            n: self.n,
            eps: self.eps,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.minus(b)).collect(),
        })
    }

    /// (ab)_m = Σ_{k+l ≡ m} ε^{⌊(k+l)/N⌋} a_k b_l.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, CnError> {
        self.same_algebra(rhs)?;
        let n = self.n;
        let mut out = vec![self.coeffs[0].zero_like(); n];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (l, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a.times(b);
                let m = k + l;
                out[m % n] = if m >= n && self.eps == Eps::Minus {
                    out[m % n].minus(&t)
                } else {
                    out[m % n].plus(&t)
                };
            }
        }
        Ok(CnNumber {
            n,
            eps: self.eps,
            coeffs: out,
        })
    }

    /// Panicking form of [`checked_add`](Self::checked_add).
    pub fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Panicking form of [`checked_mul`](Self::checked_mul).
    pub fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n, self.eps, &self.coeffs[0]).expect("valid algebra");
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Matrix of multiplication by z in the basis 1, q, …, q^{N−1}, row convention:
    /// row r holds the coefficients of z·q^r.
    pub fn regular_rep(&self) -> Matrix<R> {
        let n = self.n;
        Matrix::from_fn(n, |r, m| {
            if m >= r {
                self.coeffs[m - r].clone()
            } else {
                let c = &self.coeffs[m + n - r];
                if self.eps == Eps::Minus {
                    c.negate()
                } else {
                    c.clone()
                }
            }
        })
    }
}

impl<R: CycloScale> CnNumber<R> {
    /// The s-th conjugate: x_m ↦ ζ_N^{s·m} x_m.
    pub fn conjugate(&self, s: usize) -> Result<Self, CnError> {
        if s >= self.n {
            return Err(CnError::ConjugateIndex { s, n: self.n });
        }
        let n = self.n as u32;
        Ok(CnNumber {
            n: self.n,
            eps: self.eps,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, x)| {
                    if s * m % self.n == 0 {
                        x.clone()
                    } else {
                        x.scale_cyc(&Cyclotomic::root(n, (s * m) as i64))
                    }
                })
                .collect(),
        })
    }

    /// Product of all N conjugates as an element of the algebra.
    pub fn conjugate_product(&self) -> Self {
        (1..self.n).fold(self.clone(), |acc, s| acc.mul(&self.conjugate(s).expect("s < n")))
    }
}

/// Scalars whose Galois-invariance can be tested after a norm computation.
pub trait NormScalar: CycloScale {
    fn galois_fixed(&self) -> bool;
}

impl NormScalar for Cyclotomic {
    fn galois_fixed(&self) -> bool {
        self.is_rational()
    }
}

impl NormScalar for MultiPoly {
    fn galois_fixed(&self) -> bool {
        self.all_coeffs_rational()
    }
}

impl NormScalar for Complex64 {
    fn galois_fixed(&self) -> bool {
        true
    }
}

impl<R: NormScalar> CnNumber<R> {
    /// z·z̃·…: the q⁰ component of the product of all conjugates.
    ///
    /// Panics if the other components fail to cancel or the result is not
    /// Galois-fixed; either indicates a defect in this module, not bad input.
    pub fn norm(&self) -> R {
        let p = self.conjugate_product();
        assert!(
            p.coeffs[1..].iter().all(Ring::is_zero),
            "norm: non-constant components did not cancel"
        );
        let v = p.coeffs.into_iter().next().unwrap();
        assert!(v.galois_fixed(), "norm: result not fixed by the Galois group");
        v
    }
}

impl CnNumber<Rational> {
    pub fn to_cyclotomic(&self) -> CnNumber<Cyclotomic> {
        self.map(|r| Cyclotomic::from_rational(r.clone()))
    }

    pub fn norm_rational(&self) -> Rational {
        self.to_cyclotomic()
            .norm()
            .to_rational()
            .expect("norm of a rational element is rational")
    }
}

impl CnNumber<f64> {
    pub fn to_complex(&self) -> CnNumber<Complex64> {
        self.map(|&x| Complex64::new(x, 0.0))
    }

    pub fn norm_f64(&self) -> f64 {
        self.to_complex().norm().re
    }
}

impl CnNumber<MultiPoly> {
    /// The generic element x_0 + x_1 q + … with symbols x_k.
    pub fn symbolic(n: usize, eps: Eps) -> Result<Self, CnError> {
        Self::new(n, eps, MultiPoly::vars(n))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for CnNumber<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "N={},eps={}:[{}]", self.n, self.eps, cs.join(", "))
    }
}

impl FromStr for CnNumber<Rational> {
    type Err = CnError;

    /// Parses "N=3,eps=+1:[1, 1/2, 0]".
    fn from_str(s: &str) -> Result<Self, CnError> {
        let bad = |m: &str| CnError::Parse(format!("{m} in '{s}'"));
        let (head, body) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let mut n = None;
        let mut eps = None;
        for part in head.split(',') {
            let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            match k.trim() {
                "N" | "n" => n = Some(v.trim().parse::<usize>().map_err(|_| bad("bad N"))?),
                "eps" | "e" => eps = Some(v.parse::<Eps>()?),
                _ => return Err(bad("unknown key")),
            }
        }
        let body = body.trim();
        let inner = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| bad("coefficients must be in [...]"))?;
        let coeffs = inner
            .split(',')
            .map(|t| t.trim().parse::<Rational>().map_err(|_| bad("bad rational")))
            .collect::<Result<Vec<_>, _>>()?;
        CnNumber::new(
            n.ok_or_else(|| bad("missing N"))?,
            eps.ok_or_else(|| bad("missing eps"))?,
            coeffs,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, zeta};

    fn cn(n: usize, eps: Eps, xs: &[i64]) -> CnNumber<Rational> {
        CnNumber::new(n, eps, xs.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let a = cn(3, Eps::Plus, &[1, 1, 0]);
        let b = cn(3, Eps::Plus, &[1, 0, 1]);
        assert_eq!(a.mul(&b), cn(3, Eps::Plus, &[2, 1, 1]));
        let q2 = cn(4, Eps::Minus, &[0, 0, 1, 0]);
        let q3 = cn(4, Eps::Minus, &[0, 0, 0, 1]);
        assert_eq!(q2.mul(&q3), cn(4, Eps::Minus, &[0, -1, 0, 0]));
        let one = CnNumber::one(3, Eps::Plus, &int(0)).unwrap();
        assert_eq!(a.mul(&one), a);
    }

    #[test]
    fn q_to_the_n_is_eps() {
        for n in 2..=8 {
            for eps in [Eps::Plus, Eps::Minus] {
                let q = CnNumber::basis(n, eps, 1, &int(0)).unwrap();
                let mut expect = vec![0; n];
                expect[0] = eps.sign();
                assert_eq!(q.pow(n as u32), cn(n, eps, &expect));
            }
        }
    }

    #[test]
    fn structure_errors() {
        let a = cn(3, Eps::Plus, &[1, 0, 0]);
        let b = cn(3, Eps::Minus, &[1, 0, 0]);
        assert_eq!(a.checked_mul(&b), Err(CnError::StructureMismatch));
        assert_eq!(
            CnNumber::new(3, Eps::Plus, vec![int(1)]),
            Err(CnError::LengthMismatch { expected: 3, got: 1 })
        );
        assert_eq!(CnNumber::new(1, Eps::Plus, vec![int(1)]), Err(CnError::OrderOutOfRange(1)));
        assert!(matches!(a.to_cyclotomic().conjugate(3), Err(CnError::ConjugateIndex { .. })));
    }

    #[test]
    fn conjugate_examples() {
        let z = CnNumber::symbolic(3, Eps::Plus).unwrap();
        let t = z.conjugate(1).unwrap();
        let j = zeta(3, 1).unwrap();
        assert_eq!(t.component(1), &z.component(1).scale(&j));
        assert_eq!(t.component(2), &z.component(2).scale(&j.pow(2)));
        let z4 = CnNumber::symbolic(4, Eps::Plus).unwrap();
        let tt = z4.conjugate(2).unwrap();
        assert_eq!(tt.component(1), &-z4.component(1));
        assert_eq!(tt.component(3), &-z4.component(3));
        assert_eq!(tt.component(2), z4.component(2));
        assert_eq!(z4.conjugate(0).unwrap(), z4);
        // applying the single tilde twice equals conjugate(.,2)
        let once = z4.conjugate(1).unwrap();
        assert_eq!(once.conjugate(1).unwrap(), tt);
    }

    #[test]
    fn small_norms() {
        assert_eq!(cn(3, Eps::Plus, &[1, 1, 0]).norm_rational(), int(2));
        assert_eq!(cn(4, Eps::Minus, &[1, 0, 0, 0]).norm_rational(), int(1));
        assert_eq!(cn(2, Eps::Minus, &[3, 4]).norm_rational(), int(25));
        // N = 2, ε = −1: conjugate(·,1) is complex conjugation
        let c = cn(2, Eps::Minus, &[3, 4]).to_cyclotomic().conjugate(1).unwrap();
        assert_eq!(c.component(1), &Cyclotomic::from_int(-4));
    }

    #[test]
    fn regular_rep_rows() {
        let z = cn(3, Eps::Plus, &[1, 2, 3]);
        let m = z.regular_rep();
        let rows: Vec<Vec<Rational>> = m.rows();
        assert_eq!(rows[0], vec![int(1), int(2), int(3)]);
        assert_eq!(rows[1], vec![int(3), int(1), int(2)]);
        assert_eq!(rows[2], vec![int(2), int(3), int(1)]);
        let w = cn(3, Eps::Minus, &[1, 2, 3]);
        assert_eq!(w.regular_rep().rows()[1], vec![int(-3), int(1), int(2)]);
        let one = CnNumber::one(4, Eps::Minus, &int(0)).unwrap();
        assert_eq!(one.regular_rep(), Matrix::identity(4, &int(0)));
    }

    #[test]
    fn text_form() {
        let z: CnNumber<Rational> = "N=3,eps=+1:[1, 1, 0]".parse().unwrap();
        assert_eq!(z, cn(3, Eps::Plus, &[1, 1, 0]));
        assert_eq!(z.to_string(), "N=3,eps=+1:[1, 1, 0]");
        let w: CnNumber<Rational> = "N=2,eps=-1:[1/2, -3]".parse().unwrap();
        assert_eq!(w.eps(), Eps::Minus);
        assert!("N=3:[1,2,3]".parse::<CnNumber<Rational>>().is_err());
        assert!("N=3,eps=+1:[1,2]".parse::<CnNumber<Rational>>().is_err());
    }
}
