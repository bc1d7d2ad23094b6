use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExactError, Rational};

/// Largest order accepted by the public constructors. Internal lifting to a
/// common order (lcm of two operands) is not capped.
pub const MAX_ORDER: u32 = 24;

/// Integer coefficients of Φ_n, lowest degree first.
fn phi_int(n: u32) -> Vec<i64> {
    // x^n - 1
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = div_monic(&num, &phi_int(d));
        }
    }
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quo = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        quo[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

/// The n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<Rational> {
    assert!(n >= 1, "cyclotomic_poly needs n >= 1");
    phi_int(n)
        .into_iter()
        .map(|c| Rational::from_integer(BigInt::from(c)))
        .collect()
}

struct Field {
    deg: usize,
    /// powers[k] = ζ^k written in the basis 1, ζ, …, ζ^{deg-1}, for 0 <= k < order.
    powers: Vec<Vec<i64>>,
}

impl Field {
    fn new(n: u32) -> Field {
        let phi = phi_int(n);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by ζ and reduce the overflow with Φ_n (monic)
            let top = cur[deg - 1];
            let mut next = vec![0i64; deg];
            next[1..deg].copy_from_slice(&cur[..deg - 1]);
            if top != 0 {
                for i in 0..deg {
                    next[i] -= top * phi[i];
                }
            }
            cur = next;
        }
        Field { deg, powers }
    }
}

fn field(n: u32) -> Arc<Field> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().unwrap().get(&n) {
        return f.clone();
    }
    let f = Arc::new(Field::new(n));
    cache.write().unwrap().entry(n).or_insert(f).clone()
}

fn euler_phi(n: u32) -> usize {
    field(n).deg
}

/// Element of Q(ζ_N) stored as a polynomial in ζ_N of degree < φ(N).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

/// ζ_n^k. Fails when n lies outside 1..=MAX_ORDER.
pub fn zeta(n: u32, k: i64) -> Result<Cyclotomic, ExactError> {
    if n == 0 || n > MAX_ORDER {
        return Err(ExactError::OrderOutOfRange(n));
    }
    Ok(Cyclotomic::root(n, k))
}

impl Cyclotomic {
    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// ζ_n^k without the order cap; used internally for lifted orders.
    pub(crate) fn root(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let f = field(n);
        let coeffs = f.powers[e]
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        Cyclotomic { order: n, coeffs }.normalized()
    }

    /// Σ c_k ζ_n^k for an arbitrary-length coefficient list, reduced mod Φ_n.
    pub fn from_power_coeffs(n: u32, cs: &[Rational]) -> Result<Self, ExactError> {
        if n == 0 || n > MAX_ORDER {
            return Err(ExactError::OrderOutOfRange(n));
        }
        Ok(Self::reduce(n, cs.iter().enumerate().map(|(k, c)| (k, c.clone()))))
    }

    fn reduce(n: u32, terms: impl Iterator<Item = (usize, Rational)>) -> Self {
        let f = field(n);
        let mut out = vec![Rational::zero(); f.deg];
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            let row = &f.powers[k % n as usize];
            for (o, &p) in out.iter_mut().zip(row) {
                if p != 0 {
                    *o += &c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
        Cyclotomic { order: n, coeffs: out }.normalized()
    }

    /// Collapse to order 1 when the value is rational.
    fn normalized(mut self) -> Self {
        if self.order > 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.truncate(1);
            self.order = 1;
        }
        self
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Re-express in Q(ζ_m) where order | m.
    pub fn lift(&self, m: u32) -> Self {
        if m == self.order {
            return self.clone();
        }
        assert!(m % self.order == 0, "cannot lift order {} to {}", self.order, m);
        let step = (m / self.order) as usize;
        let f = field(m);
        let mut out = Self::reduce(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i * step, c.clone())),
        );
        // keep the requested order even if the value is rational
        if out.order != m {
            let mut cs = vec![Rational::zero(); f.deg];
            cs[0] = out.coeffs[0].clone();
            out = Cyclotomic { order: m, coeffs: cs };
        }
        out
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let m = a.order.lcm(&b.order);
        (a.lift(m), b.lift(m))
    }

    /// Substitute ζ → ζ^s and re-reduce. For gcd(s, N) = 1 this is a field automorphism.
    pub fn galois_map(&self, s: i64) -> Self {
        let n = self.order as i64;
        Self::reduce(
            self.order,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (((i as i64) * s).rem_euclid(n) as usize, c.clone())),
        )
    }

    /// Complex conjugation, ζ → ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois_map(-1)
    }

    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let ang = 2.0 * std::f64::consts::PI * i as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), ang)
            })
            .sum()
    }

    /// Field norm to Q: product of all Galois conjugates.
    pub fn field_norm(&self) -> Rational {
        let (prod, _) = self.norm_parts();
        prod
    }

    fn norm_parts(&self) -> (Rational, Cyclotomic) {
        let n = self.order as i64;
        let mut others = Cyclotomic::one();
        for s in 2..n {
            if s.gcd(&n) == 1 {
                others = &others * &self.galois_map(s);
            }
        }
        let full = self * &others;
        let r = full
            .to_rational()
            .expect("product over all Galois conjugates must be rational");
        (r, others)
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let (r, others) = self.norm_parts();
        Ok(others.scale(&r.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
        .normalized()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Cyclotomic::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Write this element in Q(ζ_m) if it lies there.
    pub fn express_in_order(&self, m: u32) -> Option<Self> {
        if m % self.order == 0 {
            return Some(self.lift(m).normalized());
        }
        // Solve Σ_i c_i ζ_m^i = self inside the common field.
        let big = m.lcm(&self.order);
        let target = self.lift(big);
        let dm = euler_phi(m);
        let cols: Vec<Cyclotomic> = (0..dm)
            .map(|i| Cyclotomic::root(m, i as i64).lift(big))
            .collect();
        let rows = target.coeffs.len();
        let mut aug: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(target.coeffs[r].clone());
                row
            })
            .collect();
        let sol = solve_consistent(&mut aug, dm)?;
        Some(Self::reduce(m, sol.into_iter().enumerate()))
    }

    /// The smallest order in which this element can be written.
    pub fn minimal_order(&self) -> Self {
        let n = self.order;
        let mut divs: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
        divs.sort_unstable();
        for d in divs {
            if let Some(x) = self.express_in_order(d) {
                return x;
            }
        }
        self.clone()
    }

    /// Text form in powers of j = ζ_ambient, e.g. "3", "-1/2", "(1 + 2*j^2)".
    pub fn render_in(&self, ambient: u32) -> String {
        if let Some(r) = self.to_rational() {
            return r.to_string();
        }
        let me = if ambient % self.order == 0 {
            self.lift(ambient)
        } else {
            self.clone()
        };
        // rational multiples of a single root print as r*j^k
        for k in 1..me.order as i64 {
            if let Some(r) = (&me * &Cyclotomic::root(me.order, -k)).to_rational() {
                let mono = if k == 1 { "j".to_string() } else { format!("j^{k}") };
                return if r.is_one() {
                    format!("({mono})")
                } else {
                    format!("({r}*{mono})")
                };
            }
        }
        let mut s = String::new();
        for (i, c) in me.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "j".to_string(),
                _ => format!("j^{i}"),
            };
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&body);
        }
        format!("({s})")
    }
}

/// Gaussian elimination on an augmented system; returns a solution if consistent.
fn solve_consistent(aug: &mut [Vec<Rational>], nvars: usize) -> Option<Vec<Rational>> {
    let rows = aug.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nvars {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].recip();
        for v in aug[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for k in 0..=nvars {
                    let t = &aug[r][k] * &f;
                    aug[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if aug[r..].iter().any(|row| !row[nvars].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); nvars];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = aug[i][nvars].clone();
    }
    Some(sol)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Cyclotomic::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_in(self.order))
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        Cyclotomic {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
        .normalized()
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        Cyclotomic {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
        .normalized()
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.order == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, b) = Cyclotomic::common(self, rhs);
        let n = a.order as usize;
        let mut acc = vec![Rational::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    acc[(i + k) % n] += x * y;
                }
            }
        }
        Cyclotomic::reduce(a.order, acc.into_iter().enumerate())
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use proptest::prelude::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        zeta(n, k).unwrap()
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![int(-1), int(1)]);
        assert_eq!(cyclotomic_poly(4), vec![int(1), int(0), int(1)]);
        assert_eq!(cyclotomic_poly(6), vec![int(1), int(-1), int(1)]);
        assert_eq!(cyclotomic_poly(12), vec![int(1), int(0), int(-1), int(0), int(1)]);
        assert_eq!(cyclotomic_poly(7).len(), 7);
    }

    #[test]
    fn root_identities() {
        assert!((z(3, 0) + z(3, 1) + z(3, 2)).is_zero());
        assert_eq!(z(6, 1) - z(6, 2), Cyclotomic::one());
        assert_eq!(z(4, 2), Cyclotomic::from_int(-1));
        assert!(z(5, 0).is_one());
        let sum6 = (0..6).fold(Cyclotomic::zero(), |a, k| a + z(6, k));
        assert!(sum6.is_zero());
    }

    #[test]
    fn order_cap() {
        assert_eq!(zeta(25, 1), Err(ExactError::OrderOutOfRange(25)));
        assert_eq!(zeta(0, 1), Err(ExactError::OrderOutOfRange(0)));
    }

    #[test]
    fn galois_examples() {
        assert_eq!(z(3, 1).galois_map(2), z(3, 2));
        let x = z(6, 1) + z(6, 5);
        assert_eq!(x.galois_map(5), x);
        // non-unit exponent: ζ6 -> ζ6^2 = ζ3
        assert_eq!(z(6, 1).galois_map(2), z(3, 1));
    }

    #[test]
    fn complex_values() {
        let c = z(6, 1).to_complex();
        assert!((c.re - 0.5).abs() < 1e-15 && (c.im - 0.8660254037844386).abs() < 1e-15);
        let c = z(4, 1).to_complex();
        assert!(c.re.abs() < 1e-15 && (c.im - 1.0).abs() < 1e-15);
        let c = (z(3, 1) + z(3, 2)).to_complex();
        assert!((c.re + 1.0).abs() < 1e-15 && c.im.abs() < 1e-15);
    }

    #[test]
    fn mixed_orders_and_sqrt3() {
        // ζ3 · ζ4 = ζ12^7
        assert_eq!(z(3, 1) * z(4, 1), z(12, 7));
        let s3 = z(12, 1) + z(12, 11);
        assert_eq!(&s3 * &s3, Cyclotomic::from_int(3));
        assert_eq!(z(3, 1) - z(3, 2), &s3 * &z(4, 1));
    }

    #[test]
    fn inverse_and_division() {
        let a = Cyclotomic::from_int(2) + z(5, 1);
        let ai = a.inv().unwrap();
        assert!((&a * &ai).is_one());
        assert_eq!(Cyclotomic::zero().inv(), Err(ExactError::DivisionByZero));
        assert_eq!(
            Cyclotomic::from_int(1).checked_div(&Cyclotomic::from_int(4)).unwrap(),
            Cyclotomic::from_rational(rat(1, 4))
        );
    }

    #[test]
    fn express_in_subfield() {
        let x = (z(12, 1) + z(12, 11)).pow(2);
        assert_eq!(x.express_in_order(1).unwrap(), Cyclotomic::from_int(3));
        let w = z(12, 4);
        let w3 = w.express_in_order(3).unwrap();
        assert_eq!(w3.order(), 3);
        assert_eq!(w3, z(3, 1));
        assert!(z(12, 1).express_in_order(3).is_none());
        assert_eq!(z(12, 3).minimal_order().order(), 4);
    }

    #[test]
    fn rendering() {
        assert_eq!(Cyclotomic::from_rational(rat(-1, 2)).to_string(), "-1/2");
        assert_eq!(z(3, 2).render_in(3), "(j^2)");
        assert_eq!((Cyclotomic::from_int(1) + z(3, 1).scale(&int(2))).render_in(3), "(1 + 2*j)");
        assert_eq!(z(3, 1).render_in(6), "(j^2)");
    }

    #[test]
    fn zeta_pairs_multiply_to_one() {
        for n in 1..=12u32 {
            for k in 0..n as i64 {
                assert!((z(n, k) * z(n, n as i64 - k)).is_one());
            }
        }
    }

    fn arb_cyc() -> impl Strategy<Value = Cyclotomic> {
        (1u32..=12, prop::collection::vec((-5i64..=5, 1i64..=4), 12)).prop_map(|(n, cs)| {
            let cs: Vec<Rational> = cs.into_iter().map(|(a, b)| rat(a, b)).collect();
            Cyclotomic::from_power_coeffs(n, &cs[..n as usize]).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn galois_is_homomorphism(a in arb_cyc(), b in arb_cyc(), s in 1i64..24) {
            let n = a.order().lcm(&b.order()) as i64;
            let (a, b) = Cyclotomic::common(&a, &b);
            if s.gcd(&n) == 1 {
                prop_assert_eq!((&a * &b).galois_map(s), &a.galois_map(s) * &b.galois_map(s));
                prop_assert_eq!((&a + &b).galois_map(s), &a.galois_map(s) + &b.galois_map(s));
            }
            prop_assert_eq!(a.galois_map(1), a.clone());
            prop_assert_eq!(a.conj().conj(), a);
        }

        #[test]
        fn rational_means_real(a in arb_cyc()) {
            let c = a.to_complex();
            if a.is_rational() {
                prop_assert!(c.im.abs() < 1e-12);
            }
            let r = (&a * &a.conj()).to_complex();
            prop_assert!(r.im.abs() < 1e-9);
        }
    }
}
