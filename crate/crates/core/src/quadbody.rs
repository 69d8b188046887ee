//! Inhomogeneous quadratic forms with positive-definite quadratic part,
//! projections of their quadratic bodies onto coordinate subspaces, and
//! exhaustive enumeration of coset-lattice points inside the body.
//!
//! The projection of { Q <= 0 } to a subset S of the variables is again a
//! quadratic body: the eliminated variables are solved at the stationary
//! point of Q, which is the fiberwise minimum because the quadratic part is
//! positive definite. Enumeration proceeds inductively over prefixes
//! (x_1, ..., x_k), extending each prefix through the one-variable image of
//! the substituted form. All interval membership tests are exact sign
//! evaluations; endpoints are never materialized as floats.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::{ratio, sqrt_upper_bound, Rat};
use crate::error::{Error, Result};
use crate::matrix::QMat;

/// Q(x) = x^T quad x + lin.x + cst with quad symmetric positive definite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    quad: QMat,
    lin: Vec<Rat>,
    cst: Rat,
}

impl QuadraticForm {
    pub fn new(quad: QMat, lin: Vec<Rat>, cst: Rat) -> Result<Self> {
        if quad.rows() != quad.cols() || quad.rows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "quadratic part must be square and non-empty, got {}x{}",
                quad.rows(),
                quad.cols()
            )));
        }
        if lin.len() != quad.rows() {
            return Err(Error::DimensionMismatch(format!(
                "linear part has length {}, quadratic part is {}x{}",
                lin.len(),
                quad.rows(),
                quad.cols()
            )));
        }
        if !quad.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let sig = quad.symmetric_signature().map_err(|_| Error::NotPositiveDefinite)?;
        if sig != (quad.rows(), 0) {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(QuadraticForm { quad, lin, cst })
    }

    /// Internal constructor for forms already known to be valid
    /// (projections and substitutions of valid forms).
    fn trusted(quad: QMat, lin: Vec<Rat>, cst: Rat) -> Self {
        debug_assert!(quad.is_symmetric());
        QuadraticForm { quad, lin, cst }
    }

    pub fn nvars(&self) -> usize {
        self.quad.rows()
    }

    pub fn quad(&self) -> &QMat {
        &self.quad
    }

    pub fn lin(&self) -> &[Rat] {
        &self.lin
    }

    pub fn constant(&self) -> &Rat {
        &self.cst
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        assert_eq!(x.len(), self.nvars());
        let qx = self.quad.mul_vec(x);
        let quad_part: Rat = x.iter().zip(&qx).map(|(a, b)| a * b).sum();
        let lin_part: Rat = self.lin.iter().zip(x).map(|(a, b)| a * b).sum();
        quad_part + lin_part + &self.cst
    }

    /// Shift the constant term (used for equality targets).
    pub fn shifted(&self, delta: &Rat) -> QuadraticForm {
        QuadraticForm::trusted(self.quad.clone(), self.lin.clone(), &self.cst + delta)
    }

    /// Pin some variables to fixed rational values; returns the form in the
    /// remaining variables together with their original indices.
    pub fn substitute(&self, pinned: &[(usize, Rat)]) -> Result<(QuadraticForm, Vec<usize>)> {
        let n = self.nvars();
        let mut value: Vec<Option<Rat>> = vec![None; n];
        for (i, v) in pinned {
            if *i >= n {
                return Err(Error::DimensionMismatch(format!("variable {i} out of range")));
            }
            if value[*i].is_some() {
                return Err(Error::InvalidParameter(format!("variable {i} pinned twice")));
            }
            value[*i] = Some(v.clone());
        }
        let keep: Vec<usize> = (0..n).filter(|i| value[*i].is_none()).collect();
        if keep.is_empty() {
            return Err(Error::InvalidParameter(
                "substitution must leave at least one variable".into(),
            ));
        }
        let m = keep.len();
        let mut quad = QMat::zero(m, m);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                quad.set(a, b, self.quad.at(i, j).clone());
            }
        }
        let mut lin = Vec::with_capacity(m);
        for &j in &keep {
            let mut l = self.lin[j].clone();
            for (i, v) in value.iter().enumerate() {
                if let Some(v) = v {
                    l += ratio(2, 1) * self.quad.at(i, j) * v;
                }
            }
            lin.push(l);
        }
        let mut cst = self.cst.clone();
        for (i, vi) in value.iter().enumerate() {
            let Some(vi) = vi else { continue };
            cst += &self.lin[i] * vi;
            for (j, vj) in value.iter().enumerate() {
                if let Some(vj) = vj {
                    cst += self.quad.at(i, j) * vi * vj;
                }
            }
        }
        Ok((QuadraticForm::trusted(quad, lin, cst), keep))
    }

    /// Projection of Q to the variables in `keep` (strictly increasing
    /// indices): eliminates the others at the stationary point of Q, so the
    /// body of the result is the coordinate projection of the body of Q.
    pub fn project(&self, keep: &[usize]) -> Result<QuadraticForm> {
        Ok(self.project_with_map(keep)?.0)
    }

    /// Like `project`, but also returns the affine solutions xi of the
    /// eliminated variables: eliminated[i] = sum_j map[i][j] * x_keep[j] + map_const[i].
    pub fn project_with_map(&self, keep: &[usize]) -> Result<(QuadraticForm, EliminationMap)> {
        let n = self.nvars();
        if keep.is_empty() {
            return Err(Error::InvalidParameter("projection target is empty".into()));
        }
        if keep.windows(2).any(|w| w[0] >= w[1]) || *keep.last().unwrap() >= n {
            return Err(Error::InvalidParameter(
                "projection indices must be strictly increasing and in range".into(),
            ));
        }
        let in_keep = {
            let mut mask = vec![false; n];
            for &i in keep {
                mask[i] = true;
            }
            mask
        };
        let gone: Vec<usize> = (0..n).filter(|i| !in_keep[*i]).collect();
        if gone.is_empty() {
            return Ok((
                self.clone(),
                EliminationMap {
                    eliminated: vec![],
                    coeffs: QMat::zero(0, keep.len()),
                    consts: vec![],
                },
            ));
        }
        let t = gone.len();
        let s = keep.len();
        let mut a_tt = QMat::zero(t, t);
        for (a, &i) in gone.iter().enumerate() {
            for (b, &j) in gone.iter().enumerate() {
                a_tt.set(a, b, self.quad.at(i, j).clone());
            }
        }
        let mut a_ts = QMat::zero(t, s);
        for (a, &i) in gone.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                a_ts.set(a, b, self.quad.at(i, j).clone());
            }
        }
        // A_TT is positive definite, hence invertible.
        let w = a_tt
            .solve(&a_ts)
            .ok_or_else(|| Error::InvalidParameter("stationarity system singular".into()))?;
        let half = ratio(1, 2);
        let bt: Vec<Rat> = gone.iter().map(|&i| self.lin[i].clone()).collect();
        let mut bt_mat = QMat::zero(t, 1);
        for (a, v) in bt.iter().enumerate() {
            bt_mat.set(a, 0, v * &half);
        }
        let w0 = a_tt
            .solve(&bt_mat)
            .ok_or_else(|| Error::InvalidParameter("stationarity system singular".into()))?;

        // quad' = A_SS - A_ST W
        let mut quad = QMat::zero(s, s);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let mut v = self.quad.at(i, j).clone();
                for (c, &gi) in gone.iter().enumerate() {
                    v -= self.quad.at(i, gi) * w.at(c, b);
                    let _ = gi;
                }
                quad.set(a, b, v);
            }
        }
        // lin' = b_S - A_ST A_TT^{-1} b_T  = b_S - 2 A_ST w0
        let mut lin = Vec::with_capacity(s);
        for &j in keep.iter() {
            let mut v = self.lin[j].clone();
            for (c, &gi) in gone.iter().enumerate() {
                v -= ratio(2, 1) * self.quad.at(j, gi) * w0.at(c, 0);
            }
            lin.push(v);
        }
        // cst' = c - (1/4) b_T^T A_TT^{-1} b_T = c - b_T . w0 / 2
        let mut cst = self.cst.clone();
        for (c, v) in bt.iter().enumerate() {
            cst -= v * w0.at(c, 0) * &half;
        }

        // xi_i = -(W x_S + w0)
        let mut coeffs = QMat::zero(t, s);
        let mut consts = Vec::with_capacity(t);
        for a in 0..t {
            for b in 0..s {
                coeffs.set(a, b, -w.at(a, b).clone());
            }
            consts.push(-w0.at(a, 0).clone());
        }
        Ok((
            QuadraticForm::trusted(quad, lin, cst),
            EliminationMap {
                eliminated: gone,
                coeffs,
                consts,
            },
        ))
    }

    /// One-variable image: pins the assigned variables, projects everything
    /// else to X_nu, and returns the resulting quadratic in X_nu. Its
    /// nonpositivity locus is the image of the body on the X_nu axis.
    pub fn jpi(&self, nu: usize, pinned: &[(usize, Rat)]) -> Result<OneVarImage> {
        if nu >= self.nvars() {
            return Err(Error::DimensionMismatch(format!("variable {nu} out of range")));
        }
        if pinned.iter().any(|(i, _)| *i == nu) {
            return Err(Error::InvalidParameter(format!(
                "variable {nu} is pinned and cannot be projected to"
            )));
        }
        let (sub, keep) = if pinned.is_empty() {
            (self.clone(), (0..self.nvars()).collect::<Vec<_>>())
        } else {
            self.substitute(pinned)?
        };
        let pos = keep.iter().position(|&i| i == nu).expect("nu not pinned");
        let projected = sub.project(&[pos])?;
        Ok(OneVarImage {
            a: projected.quad.at(0, 0).clone(),
            b: projected.lin[0].clone(),
            c: projected.cst.clone(),
        })
    }

    /// Square completion along the last variable, repeated down to nothing:
    /// Q(x) = base + sum_k d_k (x_k - phi_k(x_1..x_{k-1}))^2 with d_k > 0.
    /// The partial sums through level k equal the projection of Q to the
    /// first k variables, which drives the inductive enumeration.
    fn peel(&self) -> Peeled {
        let n = self.nvars();
        let mut quad = self.quad.clone();
        let mut lin = self.lin.clone();
        let mut cst = self.cst.clone();
        let mut d = vec![Rat::zero(); n];
        let mut phi = vec![Vec::new(); n];
        let mut phi_c = vec![Rat::zero(); n];
        for k in (0..n).rev() {
            let dk = quad.at(k, k).clone();
            assert!(dk.is_positive(), "positive definiteness violated");
            let row_k: Vec<Rat> = (0..k).map(|j| quad.at(k, j).clone()).collect();
            let b_k = lin[k].clone();
            phi[k] = row_k.iter().map(|c| -(c / &dk)).collect();
            phi_c[k] = -&b_k / (&dk * ratio(2, 1));
            for i in 0..k {
                for j in 0..=i {
                    let v = quad.at(i, j) - &row_k[i] * &row_k[j] / &dk;
                    quad.set(i, j, v.clone());
                    quad.set(j, i, v);
                }
            }
            for j in 0..k {
                let v = &lin[j] - &row_k[j] * &b_k / &dk;
                lin[j] = v;
            }
            cst -= &b_k * &b_k / (&dk * ratio(4, 1));
            d[k] = dk;
        }
        Peeled {
            d,
            phi,
            phi_c,
            base: cst,
        }
    }

    /// Parses the plain-text form format: variable count, the quadratic
    /// matrix (rational entries like `3/2`), the linear vector, and the
    /// constant.
    pub fn from_text(text: &str) -> Result<QuadraticForm> {
        let mut tokens = text.split_whitespace();
        let mut next = |what: &str| -> Result<&str> {
            tokens
                .next()
                .ok_or_else(|| Error::Parse(format!("missing {what}")))
        };
        let n: usize = next("variable count")?
            .parse()
            .map_err(|_| Error::Parse("bad variable count".into()))?;
        if n == 0 {
            return Err(Error::Parse("variable count must be positive".into()));
        }
        let mut quad = QMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                quad.set(i, j, parse_rat(next("matrix entry")?)?);
            }
        }
        let mut lin = Vec::with_capacity(n);
        for _ in 0..n {
            lin.push(parse_rat(next("linear entry")?)?);
        }
        let cst = parse_rat(next("constant")?)?;
        QuadraticForm::new(quad, lin, cst)
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    s.parse::<Rat>()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

/// Affine solutions of the eliminated variables in a projection.
#[derive(Debug, Clone)]
pub struct EliminationMap {
    pub eliminated: Vec<usize>,
    pub coeffs: QMat,
    pub consts: Vec<Rat>,
}

impl EliminationMap {
    /// Values of the eliminated variables over a point of the kept ones.
    pub fn apply(&self, x_kept: &[Rat]) -> Vec<Rat> {
        (0..self.eliminated.len())
            .map(|i| {
                let mut v = self.consts[i].clone();
                for (j, x) in x_kept.iter().enumerate() {
                    v += self.coeffs.at(i, j) * x;
                }
                v
            })
            .collect()
    }
}

/// The image of a quadratic body on one axis: the locus a x^2 + b x + c <= 0
/// with a > 0, i.e. the closed interval between the two roots (possibly a
/// point or empty). Membership is decided by the exact sign of the quadratic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneVarImage {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl OneVarImage {
    pub fn center(&self) -> Rat {
        -&self.b / (&self.a * ratio(2, 1))
    }

    /// Squared half-width of the interval: (b^2 - 4ac) / (4a^2).
    /// Negative exactly when the interval is empty.
    pub fn squared_half_width(&self) -> Rat {
        (&self.b * &self.b - ratio(4, 1) * &self.a * &self.c) / (ratio(4, 1) * &self.a * &self.a)
    }

    pub fn is_empty(&self) -> bool {
        self.squared_half_width().is_negative()
    }

    pub fn contains(&self, t: &Rat) -> bool {
        !(&self.a * t * t + &self.b * t + &self.c).is_positive()
    }
}

/// All points of the coset rep + Z inside the interval, in ascending order.
pub fn interval_points(img: &OneVarImage, coset_rep: &Rat) -> Vec<Rat> {
    let center = img.center();
    let r = img.squared_half_width();
    coset_points_in_ball(&center, &r, coset_rep)
        .into_iter()
        .filter(|t| img.contains(t))
        .collect()
}

/// Candidate points t in rep + Z with (t - center)^2 <= r, over-approximated
/// by one unit on each side; callers re-test exactly.
fn coset_points_in_ball(center: &Rat, r: &Rat, rep: &Rat) -> Vec<Rat> {
    if r.is_negative() {
        return Vec::new();
    }
    let bound = sqrt_upper_bound(r);
    // t = rep + m, |t - center| <= sqrt(r): m in [center - rep - B, center - rep + B]
    let shift = center - rep;
    let lo = (&shift - Rat::from_integer(bound.clone())).ceil().to_integer();
    let hi = (&shift + Rat::from_integer(bound)).floor().to_integer();
    let mut out = Vec::new();
    let mut m = lo;
    while m <= hi {
        out.push(rep + Rat::from_integer(m.clone()));
        m += BigInt::one();
    }
    out
}

/// Per-variable coset constraints c_i + Z with c_i in {0, 1/2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetConstraint {
    reps: Vec<Rat>,
}

impl CosetConstraint {
    pub fn new(reps: Vec<Rat>) -> Result<Self> {
        let half = ratio(1, 2);
        for r in &reps {
            if !r.is_zero() && r != &half {
                return Err(Error::InvalidParameter(format!(
                    "coset representative must be 0 or 1/2, got {r}"
                )));
            }
        }
        Ok(CosetConstraint { reps })
    }

    pub fn all_integers(n: usize) -> Self {
        CosetConstraint {
            reps: vec![Rat::zero(); n],
        }
    }

    pub fn from_halves(halves: &[bool]) -> Self {
        CosetConstraint {
            reps: halves
                .iter()
                .map(|&h| if h { ratio(1, 2) } else { Rat::zero() })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Rat] {
        &self.reps
    }

    /// Parses a spec like `0,0,0,1/2,1/2`.
    pub fn parse(s: &str) -> Result<Self> {
        let reps = s
            .split(',')
            .map(|tok| parse_rat(tok.trim()))
            .collect::<Result<Vec<_>>>()?;
        CosetConstraint::new(reps)
    }
}

impl std::fmt::Display for CosetConstraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.reps.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Filter applied to enumerated points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    LeqZero,
    Equals(Rat),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumOutcome {
    /// Points in ascending lexicographic order.
    pub points: Vec<Vec<Rat>>,
    /// Partial assignments explored, a deterministic work measure.
    pub nodes: u64,
}

struct Peeled {
    d: Vec<Rat>,
    phi: Vec<Vec<Rat>>,
    phi_c: Vec<Rat>,
    base: Rat,
}

impl Peeled {
    fn center(&self, k: usize, prefix: &[Rat]) -> Rat {
        let mut c = self.phi_c[k].clone();
        for (j, x) in prefix.iter().enumerate() {
            c += &self.phi[k][j] * x;
        }
        c
    }

    /// Valid extensions (x, new_value) of a prefix with value g, ascending.
    fn extensions(&self, k: usize, prefix: &[Rat], g: &Rat, rep: &Rat) -> Vec<(Rat, Rat)> {
        let center = self.center(k, prefix);
        let r = -(g / &self.d[k]);
        coset_points_in_ball(&center, &r, rep)
            .into_iter()
            .filter_map(|x| {
                let diff = &x - &center;
                let val = g + &self.d[k] * &diff * &diff;
                if val.is_positive() {
                    None
                } else {
                    Some((x, val))
                }
            })
            .collect()
    }
}

/// Lists every point of the coset lattice in the quadratic body of Q
/// (mode `LeqZero`), or on the fiber Q = target (mode `Equals`), by
/// depth-first extension of prefixes in the natural variable order.
/// Top-level branches are independent and evaluated in parallel; the output
/// order is lexicographic regardless of scheduling.
pub fn enumerate(
    q: &QuadraticForm,
    cosets: &CosetConstraint,
    cmp: &Comparison,
) -> Result<EnumOutcome> {
    let n = q.nvars();
    if cosets.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} coset constraints for {} variables",
            cosets.len(),
            n
        )));
    }
    let shifted;
    let (form, exact) = match cmp {
        Comparison::LeqZero => (q, false),
        Comparison::Equals(t) => {
            shifted = q.shifted(&-t.clone());
            (&shifted, true)
        }
    };
    let peeled = form.peel();
    let top = peeled.extensions(0, &[], &peeled.base, &cosets.reps()[0]);
    let branches: Vec<(Vec<Vec<Rat>>, u64)> = top
        .into_par_iter()
        .map(|(x, val)| {
            let mut points = Vec::new();
            let mut nodes = 1u64;
            let mut prefix = vec![x];
            dfs(&peeled, cosets, exact, 1, &mut prefix, &val, &mut points, &mut nodes);
            (points, nodes)
        })
        .collect();
    let mut points = Vec::new();
    let mut nodes = 0u64;
    for (p, c) in branches {
        points.extend(p);
        nodes += c;
    }
    Ok(EnumOutcome { points, nodes })
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    peeled: &Peeled,
    cosets: &CosetConstraint,
    exact: bool,
    k: usize,
    prefix: &mut Vec<Rat>,
    g: &Rat,
    points: &mut Vec<Vec<Rat>>,
    nodes: &mut u64,
) {
    let n = peeled.d.len();
    if k == n {
        if !exact || g.is_zero() {
            points.push(prefix.clone());
        }
        return;
    }
    for (x, val) in peeled.extensions(k, prefix, g, &cosets.reps()[k]) {
        *nodes += 1;
        prefix.push(x);
        dfs(peeled, cosets, exact, k + 1, prefix, &val, points, nodes);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn form(quad: &[&[i64]], lin: &[i64], cst: (i64, i64)) -> QuadraticForm {
        let n = quad.len();
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, rat(quad[i][j]));
            }
        }
        QuadraticForm::new(
            m,
            lin.iter().map(|&x| rat(x)).collect(),
            ratio(cst.0, cst.1),
        )
        .unwrap()
    }

    #[test]
    fn rejects_indefinite() {
        let mut m = QMat::zero(2, 2);
        m.set(0, 0, rat(1));
        m.set(1, 1, rat(-1));
        assert!(QuadraticForm::new(m, vec![rat(0), rat(0)], rat(0)).is_err());
    }

    #[test]
    fn projection_to_all_is_identity() {
        let q = form(&[&[2, 1], &[1, 3]], &[1, -1], (-5, 1));
        let p = q.project(&[0, 1]).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn orthogonal_variable_drops_at_minimum() {
        // X1^2 + X2^2 - 1 projected to X1 is X1^2 - 1
        let q = form(&[&[1, 0], &[0, 1]], &[0, 0], (-1, 1));
        let p = q.project(&[0]).unwrap();
        assert_eq!(p.quad().at(0, 0), &rat(1));
        assert_eq!(p.lin()[0], rat(0));
        assert_eq!(p.constant(), &rat(-1));
    }

    #[test]
    fn projection_is_fiberwise_minimum() {
        let q = form(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 3]], &[1, 0, -2], (-3, 1));
        let (p, map) = q.project_with_map(&[0, 2]).unwrap();
        assert_eq!(map.eliminated, vec![1]);
        for x0 in -2..3i64 {
            for x2 in -2..3i64 {
                let kept = vec![rat(x0), rat(x2)];
                let elim = map.apply(&kept);
                let full = vec![kept[0].clone(), elim[0].clone(), kept[1].clone()];
                assert_eq!(p.eval(&kept), q.eval(&full));
                // the stationary value is the fiber minimum
                for dx in [-1i64, 1] {
                    let mut probe = full.clone();
                    probe[1] += rat(dx);
                    assert!(q.eval(&probe) >= p.eval(&kept));
                }
            }
        }
    }

    #[test]
    fn interval_points_examples() {
        // X^2 - 2 on Z -> {-1, 0, 1}; on Z + 1/2 -> {-1/2, 1/2}
        let img = OneVarImage {
            a: rat(1),
            b: rat(0),
            c: rat(-2),
        };
        let on_z = interval_points(&img, &rat(0));
        assert_eq!(on_z, vec![rat(-1), rat(0), rat(1)]);
        let on_half = interval_points(&img, &ratio(1, 2));
        assert_eq!(on_half, vec![ratio(-1, 2), ratio(1, 2)]);
        // empty interval
        let empty = OneVarImage {
            a: rat(1),
            b: rat(0),
            c: rat(1),
        };
        assert!(interval_points(&empty, &rat(0)).is_empty());
        // degenerate point interval [0, 0]
        let point = OneVarImage {
            a: rat(1),
            b: rat(0),
            c: rat(0),
        };
        assert_eq!(interval_points(&point, &rat(0)), vec![rat(0)]);
        assert!(interval_points(&point, &ratio(1, 2)).is_empty());
    }

    #[test]
    fn enumerate_disc() {
        // X1^2 + X2^2 - 2 <= 0 over Z^2: all nine points of {-1,0,1}^2
        let q = form(&[&[1, 0], &[0, 1]], &[0, 0], (-2, 1));
        let out = enumerate(&q, &CosetConstraint::all_integers(2), &Comparison::LeqZero).unwrap();
        assert_eq!(out.points.len(), 9);
        assert!(out.points.contains(&vec![rat(-1), rat(1)]));
        // equality fiber X1^2 + X2^2 = 2: the four corners
        let eq = enumerate(
            &q,
            &CosetConstraint::all_integers(2),
            &Comparison::Equals(rat(0)),
        )
        .unwrap();
        assert_eq!(eq.points.len(), 4);
        for p in &eq.points {
            assert_eq!(q.eval(p), rat(0));
        }
    }

    #[test]
    fn enumerate_respects_cosets() {
        let q = form(&[&[1, 0], &[0, 1]], &[0, 0], (-2, 1));
        let cs = CosetConstraint::parse("1/2,1/2").unwrap();
        let out = enumerate(&q, &cs, &Comparison::LeqZero).unwrap();
        // (+-1/2, +-1/2) and (+-1/2, +-3/2)? (1/2)^2+(3/2)^2 = 10/4 > 2: no
        assert_eq!(out.points.len(), 4);
        for p in &out.points {
            assert!(!q.eval(p).is_positive());
            assert!(!p[0].is_integer());
        }
    }

    #[test]
    fn lexicographic_order() {
        let q = form(&[&[1, 0], &[0, 1]], &[0, 0], (-4, 1));
        let out = enumerate(&q, &CosetConstraint::all_integers(2), &Comparison::LeqZero).unwrap();
        let mut sorted = out.points.clone();
        sorted.sort();
        assert_eq!(out.points, sorted);
    }

    #[test]
    fn form_text_roundtrip() {
        let text = "2\n1 0\n0 1\n0 0\n-2";
        let q = QuadraticForm::from_text(text).unwrap();
        assert_eq!(q.nvars(), 2);
        assert_eq!(q.constant(), &rat(-2));
        let bad = QuadraticForm::from_text("2\n1 0\n0 -1\n0 0\n0");
        assert!(bad.is_err());
    }
}
