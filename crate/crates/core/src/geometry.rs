//! The cubic surface x0³+x1³+x2³−3x0x1x2 = ρ³, its tangent Jacobians and the
//! integer solutions of the cubic Pythagoras equation.

use std::f64::consts::PI;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("rho and a must be positive, got rho={rho}, a={a}")]
    NonPositive { rho: f64, a: f64 },
    #[error("tangent vectors are parallel")]
    Degenerate,
    #[error("search limit {0} out of range 1..=10000")]
    Limit(u64),
}

pub fn cubic_form(x: [f64; 3]) -> f64 {
    x[0].powi(3) + x[1].powi(3) + x[2].powi(3) - 3.0 * x[0] * x[1] * x[2]
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SurfacePoint {
    pub rho: f64,
    pub a: f64,
    pub theta: f64,
    pub x: [f64; 3],
}

pub fn surface_point(rho: f64, a: f64, theta: f64) -> Result<SurfacePoint, GeometryError> {
    if !(rho > 0.0 && a > 0.0) {
        return Err(GeometryError::NonPositive { rho, a });
    }
    let k = rho.powf(1.5) / a.sqrt() / 3.0;
    let (s, c) = theta.sin_cos();
    let r3 = 3f64.sqrt();
    let x = [a / 3.0 - 2.0 * k * c, a / 3.0 + k * (c + r3 * s), a / 3.0 + k * (c - r3 * s)];
    Ok(SurfacePoint { rho, a, theta, x })
}

impl SurfacePoint {
    /// (∂g/∂a, ∂g/∂θ).
    pub fn tangents(&self) -> ([f64; 3], [f64; 3]) {
        let (s, c) = self.theta.sin_cos();
        let r3 = 3f64.sqrt();
        let ka = self.rho.powf(1.5) / self.a.powf(1.5);
        let kt = self.rho.powf(1.5) / self.a.sqrt();
        let da = [
            1.0 / 3.0 + ka * c / 3.0,
            1.0 / 3.0 - ka * (c + r3 * s) / 6.0,
            1.0 / 3.0 - ka * (c - r3 * s) / 6.0,
        ];
        let dt = [2.0 * kt * s / 3.0, kt * (-s + r3 * c) / 3.0, kt * (-s - r3 * c) / 3.0];
        (da, dt)
    }

    /// Squared distance from x to the trisectrice. On the surface a·(3/2)·dist² = ρ³.
    pub fn r_squared(&self) -> f64 {
        let m = self.a / 3.0;
        self.x.iter().map(|v| (v - m).powi(2)).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Jacobians {
    pub j01: f64,
    pub j12: f64,
    pub j20: f64,
    pub j012: f64,
}

impl Jacobians {
    pub fn cubic(&self) -> f64 {
        cubic_form([self.j01, self.j12, self.j20])
    }
}

/// Projected areas of u∧v and the determinant with a row of ones.
fn wedge(u: [f64; 3], v: [f64; 3]) -> Jacobians {
    let j01 = u[0] * v[1] - u[1] * v[0];
    let j12 = u[1] * v[2] - u[2] * v[1];
    let j20 = u[2] * v[0] - u[0] * v[2];
    // expanding along the row (1,1,1)
    Jacobians { j01, j12, j20, j012: j01 + j12 + j20 }
}

pub fn jacobians(p: &SurfacePoint) -> Jacobians {
    let (da, dt) = p.tangents();
    wedge(da, dt)
}

/// ρ⁶ / (3√3 a³).
pub fn closed_form(rho: f64, a: f64) -> f64 {
    rho.powi(6) / (3.0 * 3f64.sqrt() * a.powi(3))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PythagorasReport {
    pub rho: f64,
    pub grid: usize,
    pub points: usize,
    pub max_abs_residual: f64,
    pub max_rel_residual: f64,
    /// Largest relative gap between J012³ and the closed form; zero only on a = ρ.
    pub max_rel_j012_cubed: f64,
    pub tolerance: f64,
}

impl PythagorasReport {
    pub fn passed(&self) -> bool {
        self.max_rel_residual < self.tolerance
    }
}

pub const PYTHAGORAS_TOL: f64 = 1e-8;

/// Sweep a ∈ [0.5, 5] (inclusive, `grid` steps) and θ ∈ [0, 2π) on a grid×grid lattice.
pub fn pythagoras_check(rho: f64, grid: usize) -> Result<PythagorasReport, GeometryError> {
    let grid = grid.max(1);
    let mut rep = PythagorasReport {
        rho,
        grid,
        points: 0,
        max_abs_residual: 0.0,
        max_rel_residual: 0.0,
        max_rel_j012_cubed: 0.0,
        tolerance: PYTHAGORAS_TOL,
    };
    for i in 0..grid {
        let a = if grid == 1 { 0.5 } else { 0.5 + 4.5 * i as f64 / (grid - 1) as f64 };
        for k in 0..grid {
            let theta = 2.0 * PI * k as f64 / grid as f64;
            let j = jacobians(&surface_point(rho, a, theta)?);
            let rhs = closed_form(rho, a);
            let res = (j.cubic() - rhs).abs();
            rep.points += 1;
            rep.max_abs_residual = rep.max_abs_residual.max(res);
            rep.max_rel_residual = rep.max_rel_residual.max(res / rhs.abs());
            rep.max_rel_j012_cubed = rep.max_rel_j012_cubed.max((j.j012.powi(3) - rhs).abs() / rhs.abs());
        }
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TetrahedronReport {
    pub s_a: f64,
    pub s_b: f64,
    pub s_c: f64,
    pub s_d: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Half-areas of the coordinate projections of u∧v against half the J012-style determinant.
pub fn tetrahedron_check(u: [f64; 3], v: [f64; 3], tol: f64) -> Result<TetrahedronReport, GeometryError> {
    let cross = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
    let scale = u.iter().chain(&v).map(|c| c.abs()).fold(0.0, f64::max).max(1e-300);
    if cross.iter().all(|c| c.abs() <= 1e-14 * scale * scale) {
        return Err(GeometryError::Degenerate);
    }
    let j = wedge(u, v);
    let (s_a, s_b, s_c, s_d) = (j.j01 / 2.0, j.j12 / 2.0, j.j20 / 2.0, j.j012 / 2.0);
    let lhs = cubic_form([s_a, s_b, s_c]);
    let rhs = s_d.powi(3);
    let holds = (lhs - rhs).abs() <= tol * rhs.abs().max(lhs.abs()).max(1e-300);
    Ok(TetrahedronReport { s_a, s_b, s_c, s_d, lhs, rhs, holds })
}

// ---------------------------------------------------------------- integer solutions

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CubicQuadruple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub primitive: bool,
}

pub fn cubic_form_int(a: u64, b: u64, c: u64) -> i128 {
    let (a, b, c) = (a as i128, b as i128, c as i128);
    a * a * a + b * b * b + c * c * c - 3 * a * b * c
}

/// Exact floor cube root of a non-negative integer.
pub fn icbrt(n: i128) -> i128 {
    if n <= 0 {
        return 0;
    }
    let mut r = (n as f64).cbrt().round() as i128;
    while r * r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub const MAX_SEARCH_LIMIT: u64 = 10_000;

/// All 1 ≤ a ≤ b ≤ c ≤ limit with a³+b³+c³−3abc = d³, d ≥ 1, sorted by (c, b, a).
pub fn diophantine_search(limit: u64) -> Result<Vec<CubicQuadruple>, GeometryError> {
    if !(1..=MAX_SEARCH_LIMIT).contains(&limit) {
        return Err(GeometryError::Limit(limit));
    }
    let mut out: Vec<CubicQuadruple> = (1..=limit)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut found = Vec::new();
            for b in 1..=c {
                for a in 1..=b {
                    if let Some(q) = quadruple(a, b, c) {
                        found.push(q);
                    }
                }
            }
            found
        })
        .collect();
    out.sort_by_key(|q| (q.c, q.b, q.a));
    Ok(out)
}

/// Some(quadruple) when the form at the sorted triple is a positive perfect cube.
pub fn quadruple(a: u64, b: u64, c: u64) -> Option<CubicQuadruple> {
    let mut t = [a, b, c];
    t.sort_unstable();
    let [a, b, c] = t;
    let v = cubic_form_int(a, b, c);
    let d = icbrt(v);
    (d >= 1 && d * d * d == v).then(|| CubicQuadruple {
        a,
        b,
        c,
        d: d as u64,
        primitive: a.gcd(&b).gcd(&c).gcd(&(d as u64)) == 1,
    })
}

/// The printed table rows (a, b, c, d).
pub const PRINTED_TABLE: [(u64, u64, u64, u64); 9] = [
    (2, 3, 3, 2),
    (2, 3, 4, 3),
    (3, 19, 27, 28),
    (3, 31, 38, 42),
    (4, 6, 6, 4),
    (4, 6, 8, 6),
    (5, 25, 42, 42),
    (6, 9, 9, 6),
    (6, 9, 12, 9),
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRowCheck {
    pub row: (u64, u64, u64, u64),
    pub exact: bool,
    pub in_search: bool,
    pub search_limit: u64,
}

/// Each printed row evaluated exactly and looked up in a search at `limit`,
/// widened to the row's own c where the row lies beyond `limit`.
pub fn table_check(limit: u64) -> Result<Vec<TableRowCheck>, GeometryError> {
    let base = diophantine_search(limit)?;
    let max_c = PRINTED_TABLE.iter().map(|r| r.2).max().unwrap();
    let wide = if max_c > limit { Some(diophantine_search(max_c)?) } else { None };
    Ok(PRINTED_TABLE
        .iter()
        .map(|&(a, b, c, d)| {
            let (list, lim) = match &wide {
                Some(w) if c > limit => (w, max_c),
                _ => (&base, limit),
            };
            TableRowCheck {
                row: (a, b, c, d),
                exact: cubic_form_int(a, b, c) == (d as i128).pow(3),
                in_search: list.iter().any(|q| (q.a, q.b, q.c, q.d) == (a, b, c, d)),
                search_limit: lim,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unit_point() {
        let p = surface_point(1.0, 1.0, 0.0).unwrap();
        let want = [-1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0];
        for k in 0..3 {
            assert!((p.x[k] - want[k]).abs() < 1e-15);
        }
        assert!((cubic_form(p.x) - 1.0).abs() < 1e-14);
        assert!(surface_point(0.0, 1.0, 0.0).is_err());
        assert!(surface_point(1.0, -1.0, 0.0).is_err());
        let q = surface_point(1.0, 1.0, 2.0 * PI).unwrap();
        assert!(p.x.iter().zip(q.x).all(|(u, v)| (u - v).abs() < 1e-14));
    }

    #[test]
    fn jacobian_identity_points() {
        let j = jacobians(&surface_point(1.0, 1.0, 0.0).unwrap());
        assert!((j.cubic() - 1.0 / (3.0 * 3f64.sqrt())).abs() < 1e-10);
        // doubling ρ multiplies by 2⁶
        let j2 = jacobians(&surface_point(2.0, 1.0, 0.0).unwrap());
        assert!((j2.cubic() / j.cubic() - 64.0).abs() < 1e-9);
        let far = jacobians(&surface_point(1.0, 1e6, 0.3).unwrap());
        assert!(far.cubic().abs() < 1e-15);
        let t0 = jacobians(&surface_point(1.0, 2.0, 0.0).unwrap()).cubic();
        let t1 = jacobians(&surface_point(1.0, 2.0, 1.0).unwrap()).cubic();
        assert!((t0 - t1).abs() < 1e-10);
    }

    #[test]
    fn grid_sweep() {
        for rho in [1.0, 2.0] {
            let r = pythagoras_check(rho, 20).unwrap();
            assert_eq!(r.points, 400);
            assert!(r.passed(), "{r:?}");
        }
        // J012³ agrees with the closed form only where a = ρ
        let r = pythagoras_check(1.0, 20).unwrap();
        assert!(r.max_rel_j012_cubed > 0.5);
        let j = jacobians(&surface_point(1.5, 1.5, 0.7).unwrap());
        assert!((j.j012.powi(3) - closed_form(1.5, 1.5)).abs() < 1e-12);
    }

    #[test]
    fn tetrahedron() {
        let (u, v) = surface_point(1.0, 1.0, 0.0).unwrap().tangents();
        assert!(tetrahedron_check(u, v, 1e-8).unwrap().holds);
        let s = tetrahedron_check(u.map(|c| 2.0 * c), v.map(|c| 2.0 * c), 1e-8).unwrap();
        let t = tetrahedron_check(u, v, 1e-8).unwrap();
        assert!((s.lhs / t.lhs - 64.0).abs() < 1e-9);
        let e = tetrahedron_check([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], 1e-8).unwrap();
        assert_eq!((e.s_a, e.s_b, e.s_c), (0.5, 0.0, 0.0));
        // a generic pair: 30.5 vs 8
        let g = tetrahedron_check([1.0, 2.0, 0.0], [0.0, 1.0, 3.0], 1e-8).unwrap();
        assert!(!g.holds);
        assert!((g.lhs - 30.5).abs() < 1e-12 && (g.rhs - 8.0).abs() < 1e-12);
        assert_eq!(tetrahedron_check([1.0, 1.0, 0.0], [2.0, 2.0, 0.0], 1e-8), Err(GeometryError::Degenerate));
    }

    #[test]
    fn cube_roots() {
        for n in [0i128, 1, 7, 8, 9, 26, 27, 74088, 74087, 10i128.pow(36), 10i128.pow(36) - 1] {
            let r = icbrt(n);
            assert!(r * r * r <= n.max(0) && (r + 1).pow(3) > n);
        }
    }

    #[test]
    fn search_table() {
        assert!(diophantine_search(1).unwrap().is_empty());
        assert!(diophantine_search(0).is_err());
        let s = diophantine_search(40).unwrap();
        let has = |a, b, c, d| s.iter().any(|q| (q.a, q.b, q.c, q.d) == (a, b, c, d));
        assert!(has(2, 3, 3, 2) && has(2, 3, 4, 3) && has(3, 19, 27, 28) && has(3, 31, 38, 42));
        let q = s.iter().find(|q| (q.a, q.b, q.c) == (4, 6, 6)).unwrap();
        assert!(!q.primitive);
        assert!(s.iter().all(|q| cubic_form_int(q.a, q.b, q.c) == (q.d as i128).pow(3)));
        assert!(s.windows(2).all(|w| (w[0].c, w[0].b, w[0].a) < (w[1].c, w[1].b, w[1].a)));
        let rows = table_check(40).unwrap();
        assert!(rows.iter().all(|r| r.exact && r.in_search), "{rows:?}");
        assert_eq!(rows[6].search_limit, 42);
        assert_eq!(cubic_form_int(5, 25, 42), 74088);
    }

    proptest! {
        #[test]
        fn surface_invariants(rho in 0.2f64..4.0, a in 0.5f64..5.0, th in 0.0f64..6.3) {
            let p = surface_point(rho, a, th).unwrap();
            prop_assert!((p.x.iter().sum::<f64>() - a).abs() < 1e-12 * a.max(1.0));
            let f = cubic_form(p.x);
            prop_assert!((f - rho.powi(3)).abs() < 1e-9 * rho.powi(3).max(p.x.iter().map(|v| v.abs().powi(3)).sum()));
            prop_assert!((p.r_squared() * 3.0 / 2.0 - rho.powi(3) / a).abs() < 1e-9 * (rho.powi(3) / a).max(1.0));
        }

        #[test]
        fn search_is_order_insensitive(a in 1u64..60, b in 1u64..60, c in 1u64..60) {
            prop_assert_eq!(quadruple(a, b, c), quadruple(c, a, b));
            prop_assert_eq!(quadruple(a, b, c), quadruple(b, c, a));
        }
    }
}
