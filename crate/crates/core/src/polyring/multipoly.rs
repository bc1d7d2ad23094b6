use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::PolyError;
use crate::exactnum::{Cyclotomic, Rational};
use crate::ring::{CycloScale, Ring};

/// Sparse polynomial in `nvars` variables with cyclotomic coefficients.
/// Zero coefficients are never stored, so derived equality is canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Cyclotomic>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Cyclotomic::one())
    }

    pub fn constant(nvars: usize, c: Cyclotomic) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// The variable x_i. Panics when i >= nvars.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable x{i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Cyclotomic::one())
    }

    /// All variables x_0..x_{n-1}.
    pub fn vars(nvars: usize) -> Vec<Self> {
        (0..nvars).map(|i| Self::var(nvars, i)).collect()
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Cyclotomic) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length must equal nvars");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Cyclotomic)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length must equal nvars");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Cyclotomic {
        self.terms.get(exps).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    /// Constant term if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(Cyclotomic::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self, deg: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == deg)
    }

    pub fn all_coeffs_rational(&self) -> bool {
        self.terms.values().all(Cyclotomic::is_rational)
    }

    fn check(&self, rhs: &Self) -> Result<(), PolyError> {
        if self.nvars == rhs.nvars {
            Ok(())
        } else {
            Err(PolyError::NvarsMismatch(self.nvars, rhs.nvars))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check(rhs)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, x)| (e.clone(), x * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Self, PolyError> {
        if var >= self.nvars {
            return Err(PolyError::VarOutOfRange {
                index: var,
                nvars: self.nvars,
            });
        }
        Ok(Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
                let mut e2 = e.clone();
                e2[var] -= 1;
                (e2, c.scale(&Rational::from_integer(e[var].into())))
            }),
        ))
    }

    /// Exact evaluation.
    pub fn eval(&self, point: &[Cyclotomic]) -> Result<Cyclotomic, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::NvarsMismatch(self.nvars, point.len()));
        }
        let mut acc = Cyclotomic::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = &t * &x.pow(k);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Result<Complex64, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::NvarsMismatch(self.nvars, point.len()));
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.to_complex(), |t, (&k, x)| t * x.powu(k))
            })
            .sum())
    }

    /// Real part of the value at a real point; exact for rational coefficients.
    pub fn eval_f64(&self, point: &[f64]) -> Result<f64, PolyError> {
        let pt: Vec<Complex64> = point.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Ok(self.eval_complex(&pt)?.re)
    }

    /// Substitute polynomials (in a common variable count) for the variables.
    pub fn compose(&self, subs: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if subs.len() != self.nvars {
            return Err(PolyError::NvarsMismatch(self.nvars, subs.len()));
        }
        let m = subs.first().map_or(0, |s| s.nvars);
        if let Some(bad) = subs.iter().find(|s| s.nvars != m) {
            return Err(PolyError::NvarsMismatch(m, bad.nvars));
        }
        let mut acc = MultiPoly::zero(m);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(m, c.clone());
            for (s, &k) in subs.iter().zip(e) {
                if k > 0 {
                    t = &t * &s.pow(k);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Least common order of all coefficients.
    pub fn ambient_order(&self) -> u32 {
        self.terms.values().fold(1, |a, c| a.lcm(&c.order()))
    }

    /// Terms sorted graded-lexicographically, highest first.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Cyclotomic)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }

    pub fn render(&self) -> String {
        self.render_in(self.ambient_order())
    }

    /// Text form such as "3*x0^2*x1 + (j^2)*x2", with j = ζ_ambient.
    pub fn render_in(&self, ambient: u32) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (e, c) in self.sorted_terms() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                .collect();
            let mono = mono.join("*");
            let (neg, coef) = match c.to_rational() {
                Some(r) => (r.is_negative(), {
                    let m = r.abs();
                    if m.is_one() && !mono.is_empty() {
                        String::new()
                    } else {
                        m.to_string()
                    }
                }),
                None => (false, c.render_in(ambient)),
            };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match (coef.is_empty(), mono.is_empty()) {
                (true, _) => s.push_str(&mono),
                (false, true) => s.push_str(&coef),
                (false, false) => {
                    s.push_str(&coef);
                    s.push('*');
                    s.push_str(&mono);
                }
            }
        }
        s
    }

    /// Terms present in exactly one of the two polynomials or with different coefficients.
    pub fn diff_terms(&self, other: &MultiPoly) -> Vec<(Vec<u32>, Cyclotomic, Cyclotomic)> {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let a = self.coeff(k);
                let b = other.coeff(k);
                (a != b).then(|| (k.clone(), a, b))
            })
            .collect()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            /// Panics on a variable-count mismatch; use the checked form to recover.
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl CycloScale for MultiPoly {
    fn scale_cyc(&self, c: &Cyclotomic) -> Self {
        self.scale(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::zeta;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    fn c(k: i64, n: usize) -> MultiPoly {
        MultiPoly::constant(n, Cyclotomic::from_int(k))
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = (x(2, 0), x(2, 1));
        assert_eq!(&(&a + &b) * &(&a - &b), &a.pow(2) - &b.pow(2));
        assert!((&a * &MultiPoly::zero(2)).is_zero());
    }

    #[test]
    fn cubic_norm_from_linear_factors() {
        let [x0, x1, x2] = [x(3, 0), x(3, 1), x(3, 2)];
        let j = zeta(3, 1).unwrap();
        let j2 = zeta(3, 2).unwrap();
        let f1 = &(&x0 + &x1) + &x2;
        let f2 = &(&x0 + &x1.scale(&j)) + &x2.scale(&j2);
        let f3 = &(&x0 + &x1.scale(&j2)) + &x2.scale(&j);
        let prod = &(&f1 * &f2) * &f3;
        let expect = &(&(&x0.pow(3) + &x1.pow(3)) + &x2.pow(3)) - &(&(&x0 * &x1) * &x2).scale(&Cyclotomic::from_int(3));
        assert_eq!(prod, expect);
        assert!(prod.all_coeffs_rational());
        assert!(prod.is_homogeneous(3));
    }

    #[test]
    fn derivatives() {
        let [x0, x1, x2] = [x(3, 0), x(3, 1), x(3, 2)];
        assert_eq!(x0.pow(3).partial_derivative(0).unwrap(), &c(3, 3) * &x0.pow(2));
        let f = &x0.pow(2) + &(&c(2, 3) * &(&x1 * &x2));
        assert_eq!(f.partial_derivative(1).unwrap(), &c(2, 3) * &x2);
        assert!(c(7, 3).partial_derivative(2).unwrap().is_zero());
        assert_eq!(
            x0.partial_derivative(3),
            Err(PolyError::VarOutOfRange { index: 3, nvars: 3 })
        );
    }

    #[test]
    fn mismatch_is_an_error() {
        assert_eq!(x(2, 0).checked_add(&x(3, 0)), Err(PolyError::NvarsMismatch(2, 3)));
    }

    #[test]
    fn render_is_graded_lex() {
        let [x0, x1, x2] = [x(3, 0), x(3, 1), x(3, 2)];
        let j2 = zeta(3, 2).unwrap();
        let p = &(&(&c(3, 3) * &(&x0.pow(2) * &x1)) + &x2.scale(&j2)) - &c(1, 3);
        assert_eq!(p.render_in(3), "3*x0^2*x1 + (j^2)*x2 - 1");
        assert_eq!(MultiPoly::zero(2).render(), "0");
        assert_eq!((-&x0).render(), "-x0");
    }

    #[test]
    fn evaluation() {
        let [x0, x1] = [x(2, 0), x(2, 1)];
        let p = &x0.pow(2) + &x1.pow(2);
        let v = p.eval(&[Cyclotomic::from_int(3), Cyclotomic::from_int(4)]).unwrap();
        assert_eq!(v, Cyclotomic::from_int(25));
        assert!((p.eval_f64(&[0.6, 0.8]).unwrap() - 1.0).abs() < 1e-15);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..=3, n), -4i64..=4), 0..5).prop_map(
            move |ts| {
                MultiPoly::from_terms(n, ts.into_iter().map(|(e, k)| (e, Cyclotomic::from_int(k))))
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_axioms(a in arb_poly(4), b in arb_poly(4), c in arb_poly(4)) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert_eq!(&a * &MultiPoly::one(4), a);
        }

        #[test]
        fn mixed_partials_commute(a in arb_poly(4), i in 0usize..4, k in 0usize..4) {
            let l = a.partial_derivative(i).unwrap().partial_derivative(k).unwrap();
            let r = a.partial_derivative(k).unwrap().partial_derivative(i).unwrap();
            prop_assert_eq!(l, r);
        }
    }
}
