//! The building blocks of the rank-22 lattices: hyperbolic planes U and
//! U^(p), the quaternion maximal-order lattice H^(p), Venkov lattices
//! V^(p)(r,s), standard ADE root lattices, and the four-line assembly of
//! the opposite Picard lattice together with its characterization checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{is_prime, jacobi};
use crate::error::{Error, Result};
use crate::lattice::{IntegerLattice, Signature};
use crate::matrix::{IntMat, QMat};
use crate::roots::AdeComponent;

/// Rank-2 even lattice with Gram [[0, k], [k, 0]]; k = 1 gives U and
/// k = p gives U^(p).
pub fn hyperbolic_plane(scale: u64) -> Result<IntegerLattice> {
    if scale == 0 {
        return Err(Error::InvalidParameter("hyperbolic scale must be positive".into()));
    }
    let mut g = IntMat::zero(2, 2);
    g.set(0, 1, BigInt::from(scale));
    g.set(1, 0, BigInt::from(scale));
    IntegerLattice::new(g, vec!["u1".into(), "u2".into()])
}

/// Extra congruences requested of the parameter gamma.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QuaternionFlags {
    /// gamma odd (used when p = 1 mod 4 to make t integral).
    pub odd_gamma: bool,
    /// gamma nonzero mod p (used when p = 3 mod 4).
    pub gamma_nonzero_mod_p: bool,
}

/// Parameters (q, gamma) of the quaternion maximal order: q a prime with
/// q = 3 mod 8 and (-q/p) = -1, and gamma^2 + p = 0 mod q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuaternionParams {
    pub p: u64,
    pub q: u64,
    pub gamma: u64,
    pub flags: QuaternionFlags,
}

impl QuaternionParams {
    pub fn validate(&self) -> Result<()> {
        let QuaternionParams { p, q, gamma, flags } = *self;
        if !is_prime(p) || p == 2 {
            return Err(Error::InvalidParameter(format!("p = {p} must be an odd prime")));
        }
        if !is_prime(q) {
            return Err(Error::InvalidParameter(format!("q = {q} must be prime")));
        }
        if q % 8 != 3 {
            return Err(Error::InvalidParameter(format!("q = {q} must be 3 mod 8")));
        }
        if jacobi(-(q as i64), p) != -1 {
            return Err(Error::InvalidParameter(format!(
                "-q must be a non-residue mod p, got (-{q}/{p}) != -1"
            )));
        }
        if (gamma as u128 * gamma as u128 + p as u128) % q as u128 != 0 {
            return Err(Error::InvalidParameter(format!(
                "gamma^2 + p must vanish mod q, got gamma = {gamma}"
            )));
        }
        if flags.odd_gamma && gamma % 2 == 0 {
            return Err(Error::InvalidParameter(format!("gamma = {gamma} must be odd")));
        }
        if flags.gamma_nonzero_mod_p && gamma % p == 0 {
            return Err(Error::InvalidParameter(format!(
                "gamma = {gamma} must be nonzero mod p = {p}"
            )));
        }
        Ok(())
    }
}

/// Deterministic parameter search: the smallest admissible prime q, then the
/// smallest gamma in [0, 2q) meeting the congruences and requested flags.
/// Explicit overrides are validated instead of searched.
pub fn quaternion_params(
    p: u64,
    flags: QuaternionFlags,
    over: Option<(u64, u64)>,
) -> Result<QuaternionParams> {
    if !is_prime(p) || p == 2 {
        return Err(Error::InvalidParameter(format!("p = {p} must be an odd prime")));
    }
    if let Some((q, gamma)) = over {
        let params = QuaternionParams { p, q, gamma, flags };
        params.validate()?;
        return Ok(params);
    }
    let mut q = 3u64;
    loop {
        if is_prime(q) && jacobi(-(q as i64), p) == -1 {
            break;
        }
        q += 8;
        if q > 1_000_000 {
            return Err(Error::InvalidParameter(format!("no admissible q found for p = {p}")));
        }
    }
    let gamma = (0..2 * q)
        .find(|&g| {
            (g as u128 * g as u128 + p as u128) % q as u128 == 0
                && (!flags.odd_gamma || g % 2 == 1)
                && (!flags.gamma_nonzero_mod_p || g % p != 0)
        })
        .ok_or_else(|| {
            Error::InvalidParameter(format!("no admissible gamma found for p = {p}, q = {q}"))
        })?;
    Ok(QuaternionParams { p, q, gamma, flags })
}

/// The Gram matrix of the maximal order of the quaternion algebra ramified
/// at p and infinity, under the reduced trace form; rank 4, even,
/// discriminant p^2, with p * M^{-1} integral.
pub fn quaternion_order_gram(params: &QuaternionParams) -> Result<IntegerLattice> {
    params.validate()?;
    let p = BigInt::from(params.p);
    let q = BigInt::from(params.q);
    let gamma = BigInt::from(params.gamma);
    let qq1: BigInt = (&q + 1) / 2;
    let two_norm: BigInt = (BigInt::from(2) * (&p + &gamma * &gamma)) / &q;
    let rows = vec![
        vec![BigInt::from(2), BigInt::one(), BigInt::zero(), BigInt::zero()],
        vec![BigInt::one(), qq1.clone(), BigInt::zero(), gamma.clone()],
        vec![BigInt::zero(), BigInt::zero(), &p * &qq1, p.clone()],
        vec![BigInt::zero(), gamma, p, two_norm],
    ];
    IntegerLattice::new(
        IntMat::from_rows(rows),
        vec!["a1".into(), "a2".into(), "a3".into(), "a4".into()],
    )
}

/// Parameters of a Venkov lattice: the glued even lattice inside the
/// diagonal lattice of rank r with s entries of norm p and r - s of norm 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VenkovSpec {
    pub p: u64,
    pub r: u32,
    pub s: u32,
}

impl VenkovSpec {
    pub fn new(p: u64, r: u32, s: u32) -> Result<Self> {
        if !is_prime(p) || p == 2 {
            return Err(Error::InvalidParameter(format!("p = {p} must be an odd prime")));
        }
        if r == 0 || s > r {
            return Err(Error::InvalidParameter(format!(
                "need 0 <= s <= r and r > 0, got (r, s) = ({r}, {s})"
            )));
        }
        if r % 2 != 0 {
            return Err(Error::InvalidParameter(format!("rank r = {r} must be even")));
        }
        let residue = (p * s as u64 + (r - s) as u64) % 8;
        if residue != 0 {
            return Err(Error::VenkovCongruence(residue));
        }
        Ok(VenkovSpec { p, r, s })
    }

    pub fn label(&self) -> String {
        format!("V({};{},{})", self.p, self.r, self.s)
    }
}

/// The fixed basis of V^(p)(r,s) expressed in w-coordinates:
/// v1 = w1 + w2, v2 = (w1 + ... + wr)/2, vj = w_{j-1} + w_j, vr = 2 wr.
/// For r = 2 the first two would be dependent, so the basis is (v2, 2 w2).
pub fn venkov_basis_w(spec: &VenkovSpec) -> QMat {
    let r = spec.r as usize;
    let half = crate::arith::ratio(1, 2);
    let one = crate::arith::rat(1);
    let mut b = QMat::zero(r, r);
    if r == 2 {
        b.set(0, 0, half.clone());
        b.set(0, 1, half);
        b.set(1, 1, crate::arith::rat(2));
        return b;
    }
    b.set(0, 0, one.clone());
    b.set(0, 1, one.clone());
    for j in 0..r {
        b.set(1, j, half.clone());
    }
    for i in 2..r - 1 {
        b.set(i, i - 1, one.clone());
        b.set(i, i, one.clone());
    }
    b.set(r - 1, r - 1, crate::arith::rat(2));
    b
}

/// Gram matrix of the Venkov lattice in the fixed basis, computed by
/// expanding the diagonal form on the w-coordinates.
pub fn venkov_gram(spec: &VenkovSpec) -> Result<IntegerLattice> {
    let r = spec.r as usize;
    let s = spec.s as usize;
    let b = venkov_basis_w(spec);
    let mut w = QMat::zero(r, r);
    for i in 0..r {
        let norm = if i < s { spec.p as i64 } else { 1 };
        w.set(i, i, crate::arith::rat(norm));
    }
    let gram_q = b.mul(&w).mul(&b.transpose());
    let gram = gram_q.to_int().ok_or_else(|| {
        Error::NonIntegralEntry(format!("Venkov Gram for {}", spec.label()))
    })?;
    let labels = (1..=r).map(|i| format!("v{i}")).collect();
    let lattice = IntegerLattice::new(gram, labels)?;
    debug_assert!(lattice.is_even());
    Ok(lattice)
}

/// Cartan Gram matrix of an irreducible ADE root lattice.
pub fn root_lattice_gram(kind: &AdeComponent) -> Result<IntegerLattice> {
    let n = kind.rank() as usize;
    let edges: Vec<(usize, usize)> = match kind {
        AdeComponent::A(l) if *l >= 1 => (0..n - 1).map(|i| (i, i + 1)).collect(),
        AdeComponent::D(m) if *m >= 4 => {
            let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 3, n - 1));
            e
        }
        AdeComponent::E(k) if (6..=8).contains(k) => {
            // chain 1-3-4-...-n with node 2 attached to node 4
            let mut e = vec![(0, 2), (1, 3)];
            for i in 2..n - 1 {
                e.push((i, i + 1));
            }
            e
        }
        other => return Err(Error::UnsupportedKind(other.to_string())),
    };
    let mut g = IntMat::zero(n, n);
    for i in 0..n {
        g.set(i, i, BigInt::from(2));
    }
    for (i, j) in edges {
        g.set(i, j, BigInt::from(-1));
        g.set(j, i, BigInt::from(-1));
    }
    let labels = (1..=n).map(|i| format!("r{i}")).collect();
    IntegerLattice::new(g, labels)
}

/// One of the four orthogonal decompositions of the opposite Picard lattice.
#[derive(Debug, Clone)]
pub struct LambdaDecomposition {
    pub p: u64,
    pub sigma: u32,
    pub line: u8,
    pub description: String,
    pub quaternion: Option<QuaternionParams>,
    pub venkov: VenkovSpec,
    pub lattice: IntegerLattice,
}

/// Whether a decomposition line applies to (p, sigma).
pub fn line_applies(line: u8, p: u64, sigma: u32) -> bool {
    let one_mod4 = p % 4 == 1;
    match line {
        1 => (one_mod4 && sigma > 1) || (!one_mod4 && sigma % 2 == 0),
        2 => (one_mod4 && sigma < 10) || (!one_mod4 && sigma % 2 == 1),
        3 => !one_mod4 && sigma % 2 == 0,
        4 => !one_mod4 && sigma % 2 == 1,
        _ => false,
    }
}

/// Deterministic default decomposition line for (p, sigma).
pub fn default_line(p: u64, sigma: u32) -> u8 {
    if p % 4 == 1 {
        if sigma < 10 {
            2
        } else {
            1
        }
    } else if sigma % 2 == 0 {
        3
    } else {
        4
    }
}

pub fn check_p_sigma(p: u64, sigma: u32) -> Result<()> {
    if !is_prime(p) || p == 2 {
        return Err(Error::InvalidParameter("p must be an odd prime".into()));
    }
    if !(1..=10).contains(&sigma) {
        return Err(Error::InvalidParameter(format!(
            "sigma must be between 1 and 10, got {sigma}"
        )));
    }
    Ok(())
}

/// Assembles a rank-22 lattice isomorphic to the opposite of the Picard
/// lattice of Artin invariant sigma in characteristic p.
pub fn lambda_minus(
    p: u64,
    sigma: u32,
    line_choice: Option<u8>,
    qgamma: Option<(u64, u64)>,
) -> Result<LambdaDecomposition> {
    check_p_sigma(p, sigma)?;
    let line = line_choice.unwrap_or_else(|| default_line(p, sigma));
    if !(1..=4).contains(&line) {
        return Err(Error::InvalidParameter(format!("line must be 1..4, got {line}")));
    }
    if !line_applies(line, p, sigma) {
        return Err(Error::InvalidParameter(format!(
            "line {line} does not apply to (p, sigma) = ({p}, {sigma})"
        )));
    }
    let venkov = match line {
        1 => VenkovSpec::new(p, 16, 2 * sigma - 4)?,
        2 => VenkovSpec::new(p, 16, 2 * sigma - 2)?,
        3 => VenkovSpec::new(p, 20, 2 * sigma - 2)?,
        4 => VenkovSpec::new(p, 20, 2 * sigma)?,
        _ => unreachable!(),
    };
    let v = venkov_gram(&venkov)?;
    let (lattice, quaternion, description) = match line {
        1 | 2 => {
            let scale = if line == 1 { p } else { 1 };
            let u = hyperbolic_plane(scale)?;
            let params = quaternion_params(p, QuaternionFlags::default(), qgamma)?;
            let h = quaternion_order_gram(&params)?;
            let lattice = IntegerLattice::direct_sum(&[&u, &h, &v])?;
            let uname = if line == 1 { format!("U({p})") } else { "U".into() };
            let desc = format!(
                "{uname} + H({p};q={},gamma={}) + {}",
                params.q,
                params.gamma,
                venkov.label()
            );
            (lattice, Some(params), desc)
        }
        3 | 4 => {
            if qgamma.is_some() {
                return Err(Error::InvalidParameter(
                    "lines 3 and 4 have no quaternion summand".into(),
                ));
            }
            let scale = if line == 3 { p } else { 1 };
            let u = hyperbolic_plane(scale)?;
            let lattice = IntegerLattice::direct_sum(&[&u, &v])?;
            let uname = if line == 3 { format!("U({p})") } else { "U".into() };
            (lattice, None, format!("{uname} + {}", venkov.label()))
        }
        _ => unreachable!(),
    };
    Ok(LambdaDecomposition {
        p,
        sigma,
        line,
        description,
        quaternion,
        venkov,
        lattice,
    })
}

/// Per-condition report of the three-property characterization: even,
/// signature (21, 1), discriminant group (Z/p)^{2 sigma}.
#[derive(Debug, Clone)]
pub struct LambdaReport {
    pub even: bool,
    pub signature: Signature,
    pub signature_ok: bool,
    pub disc_group_ok: bool,
    pub disc_group: String,
}

impl LambdaReport {
    pub fn pass(&self) -> bool {
        self.even && self.signature_ok && self.disc_group_ok
    }
}

pub fn verify_lambda(lattice: &IntegerLattice, p: u64, sigma: u32) -> Result<LambdaReport> {
    check_p_sigma(p, sigma)?;
    let even = lattice.is_even();
    let signature = lattice.signature()?;
    let signature_ok = signature == Signature { n_plus: 21, n_minus: 1 };
    let group = lattice.discriminant_group();
    let disc_group_ok = group.is_elementary(p, 2 * sigma as usize);
    Ok(LambdaReport {
        even,
        signature,
        signature_ok,
        disc_group_ok,
        disc_group: group.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::lattice::LatticeVector;

    #[test]
    fn hyperbolic_planes() {
        let u = hyperbolic_plane(1).unwrap();
        assert_eq!(u.discriminant(), &int(-1));
        let sig = u.signature().unwrap();
        assert_eq!((sig.n_plus, sig.n_minus), (1, 1));
        let u1 = LatticeVector::from_i64(&[1, 0]);
        let u2 = LatticeVector::from_i64(&[0, 1]);
        assert_eq!(u.bilinear(&u1, &u2).unwrap(), rat(1));
        let up = hyperbolic_plane(5).unwrap();
        assert_eq!(up.discriminant(), &int(-25));
        assert!(hyperbolic_plane(0).is_err());
    }

    #[test]
    fn quaternion_param_search() {
        let odd = QuaternionFlags { odd_gamma: true, ..Default::default() };
        let p41 = quaternion_params(41, odd, None).unwrap();
        assert_eq!((p41.q, p41.gamma), (3, 1));
        // q = 3 is excluded for 61 since 61 = 1 mod 3 makes -3 a residue
        let p61 = quaternion_params(61, odd, None).unwrap();
        assert_eq!((p61.q, p61.gamma), (11, 7));
        let p53 = quaternion_params(53, odd, Some((67, 9))).unwrap();
        assert_eq!((p53.q, p53.gamma), (67, 9));
        assert!(quaternion_params(53, odd, Some((67, 8))).is_err());
        assert!(quaternion_params(53, odd, Some((5, 1))).is_err());
        assert!(quaternion_params(9, odd, None).is_err());
    }

    #[test]
    fn quaternion_gram_41() {
        let params = quaternion_params(41, QuaternionFlags { odd_gamma: true, ..Default::default() }, None).unwrap();
        let h = quaternion_order_gram(&params).unwrap();
        let expected = IntMat::from_i64(&[
            &[2, 1, 0, 0],
            &[1, 2, 0, 1],
            &[0, 0, 82, 41],
            &[0, 1, 41, 28],
        ]);
        assert_eq!(h.gram(), &expected);
        // (q+1)/2 = 2 on the a2 diagonal
        let a2 = LatticeVector::from_i64(&[0, 1, 0, 0]);
        assert_eq!(h.bilinear(&a2, &a2).unwrap(), rat(2));
    }

    #[test]
    fn quaternion_gram_properties() {
        for p in crate::arith::odd_primes_below(60) {
            let params = quaternion_params(p, QuaternionFlags::default(), None).unwrap();
            let h = quaternion_order_gram(&params).unwrap();
            assert!(h.is_even(), "H({p}) even");
            assert_eq!(h.discriminant(), &int((p * p) as i64), "disc H({p})");
            assert!(h.discriminant_group().is_elementary(p, 2));
            let sig = h.signature().unwrap();
            assert_eq!((sig.n_plus, sig.n_minus), (4, 0));
            // p * M^{-1} integral
            let inv = h.gram().to_q().inverse().unwrap();
            for i in 0..4 {
                for j in 0..4 {
                    let scaled = inv.at(i, j) * rat(p as i64);
                    assert!(scaled.is_integer(), "p M^-1 entry ({i},{j}) for p = {p}");
                }
            }
        }
    }

    #[test]
    fn venkov_congruence_gate() {
        assert!(VenkovSpec::new(3, 4, 2).is_ok()); // 6 + 2 = 8
        assert!(matches!(VenkovSpec::new(3, 4, 1), Err(Error::VenkovCongruence(_))));
        assert!(VenkovSpec::new(7, 3, 1).is_err()); // odd rank
        assert!(VenkovSpec::new(5, 4, 1).is_ok()); // 5 + 3 = 8
    }

    #[test]
    fn venkov_gram_small() {
        let spec = VenkovSpec::new(3, 4, 2).unwrap();
        let v = venkov_gram(&spec).unwrap();
        // v2 . v2 = (ps + (r-s))/4 = 2
        assert_eq!(v.gram().at(1, 1), &int(2));
        // s >= 2: v1 . v1 = 2p
        assert_eq!(v.gram().at(0, 0), &int(6));
        assert_eq!(v.discriminant_group().invariant_factors, vec![int(3), int(3)]);
        let rank2 = venkov_gram(&VenkovSpec::new(7, 2, 1).unwrap()).unwrap();
        assert_eq!(rank2.discriminant().clone(), int(7));
        assert!(rank2.is_even());
    }

    #[test]
    fn venkov_disc_groups() {
        for p in [3u64, 5, 7, 11] {
            for r in (2..=12u32).step_by(2) {
                for s in 0..=r {
                    let Ok(spec) = VenkovSpec::new(p, r, s) else { continue };
                    let v = venkov_gram(&spec).unwrap();
                    assert!(v.is_even(), "V({p};{r},{s}) even");
                    assert!(
                        v.discriminant_group().is_elementary(p, s as usize),
                        "disc group of V({p};{r},{s})"
                    );
                    assert!(v.is_positive_definite());
                }
            }
        }
    }

    #[test]
    fn root_lattice_grams() {
        let a1 = root_lattice_gram(&AdeComponent::A(1)).unwrap();
        assert_eq!(a1.gram(), &IntMat::from_i64(&[&[2]]));
        let a4 = root_lattice_gram(&AdeComponent::A(4)).unwrap();
        assert_eq!(a4.discriminant(), &int(5));
        let d4 = root_lattice_gram(&AdeComponent::D(4)).unwrap();
        assert_eq!(d4.discriminant(), &int(4));
        let e6 = root_lattice_gram(&AdeComponent::E(6)).unwrap();
        assert_eq!(e6.discriminant(), &int(3));
        let e7 = root_lattice_gram(&AdeComponent::E(7)).unwrap();
        assert_eq!(e7.discriminant(), &int(2));
        let e8 = root_lattice_gram(&AdeComponent::E(8)).unwrap();
        assert_eq!(e8.discriminant(), &int(1));
        assert!(root_lattice_gram(&AdeComponent::D(3)).is_err());
        assert!(root_lattice_gram(&AdeComponent::E(9)).is_err());
    }

    #[test]
    fn lambda_lines() {
        let l = lambda_minus(5, 1, None, None).unwrap();
        assert_eq!(l.line, 2);
        assert_eq!((l.venkov.r, l.venkov.s), (16, 0));
        assert_eq!(l.lattice.rank(), 22);

        let l31 = lambda_minus(3, 1, None, None).unwrap();
        assert_eq!(l31.line, 4);
        assert_eq!((l31.venkov.r, l31.venkov.s), (20, 2));

        let l72 = lambda_minus(7, 2, None, None).unwrap();
        assert_eq!(l72.line, 3);
        assert_eq!((l72.venkov.r, l72.venkov.s), (20, 2));

        // line 1 with p = 1 mod 4 requires sigma > 1
        assert!(lambda_minus(5, 1, Some(1), None).is_err());
        assert!(lambda_minus(4, 1, None, None).is_err());
    }

    #[test]
    fn lambda_verification() {
        for (p, sigma) in [(41u64, 3u32), (7, 2), (3, 1), (5, 1), (13, 10)] {
            let l = lambda_minus(p, sigma, None, None).unwrap();
            let report = verify_lambda(&l.lattice, p, sigma).unwrap();
            assert!(report.pass(), "Lambda^-({p},{sigma}): {report:?}");
        }
        // wrong discriminant group fails condition (c)
        let u = hyperbolic_plane(1).unwrap();
        let a1 = root_lattice_gram(&AdeComponent::A(1)).unwrap();
        let parts: Vec<&IntegerLattice> = std::iter::once(&u)
            .chain(std::iter::repeat_n(&a1, 20))
            .collect();
        let bad = IntegerLattice::direct_sum(&parts).unwrap();
        let report = verify_lambda(&bad, 3, 1).unwrap();
        assert!(report.even && report.signature_ok && !report.disc_group_ok);
    }

    #[test]
    fn overlapping_lines_agree() {
        // p = 1 mod 4 with 1 < sigma < 10: lines 1 and 2 both apply
        for line in [1u8, 2] {
            let l = lambda_minus(13, 3, Some(line), None).unwrap();
            assert!(verify_lambda(&l.lattice, 13, 3).unwrap().pass());
        }
        // p = 3 mod 4, sigma even: lines 1 and 3
        for line in [1u8, 3] {
            let l = lambda_minus(7, 4, Some(line), None).unwrap();
            assert!(verify_lambda(&l.lattice, 7, 4).unwrap().pass());
        }
        // p = 3 mod 4, sigma odd: lines 2 and 4
        for line in [2u8, 4] {
            let l = lambda_minus(11, 3, Some(line), None).unwrap();
            assert!(verify_lambda(&l.lattice, 11, 3).unwrap().pass());
        }
    }
}
