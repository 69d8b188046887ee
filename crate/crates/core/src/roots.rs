//! Root enumeration in definite even lattices and classification of the
//! resulting root system into a formal ADE sum.
//!
//! A component of the root graph is classified by the pair (rank, root
//! count), which is a complete invariant for irreducible ADE systems: a
//! rank-n component with n(n+1) roots is A_n, with 2n(n-1) roots is D_n,
//! and 72/126/240 roots at ranks 6/7/8 are E6/E7/E8. The rank-3 collision
//! between A3 and D3 is resolved by the convention D3 = A3.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{rat, Rat};
use crate::constructions::{venkov_gram, VenkovSpec};
use crate::error::{Error, Result};
use crate::lattice::IntegerLattice;
use crate::matrix::IntMat;
use crate::quadbody::{enumerate, Comparison, CosetConstraint, QuadraticForm};

/// One irreducible symbol of an ADE sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdeComponent {
    A(u32),
    D(u32),
    E(u32),
}

impl AdeComponent {
    pub fn rank(&self) -> u32 {
        match self {
            AdeComponent::A(n) | AdeComponent::D(n) | AdeComponent::E(n) => *n,
        }
    }

    pub fn root_count(&self) -> usize {
        let n = self.rank() as usize;
        match self {
            AdeComponent::A(_) => n * (n + 1),
            AdeComponent::D(_) => 2 * n * (n - 1),
            AdeComponent::E(6) => 72,
            AdeComponent::E(7) => 126,
            AdeComponent::E(8) => 240,
            AdeComponent::E(_) => unreachable!("invalid E rank"),
        }
    }

    fn letter_order(&self) -> u8 {
        match self {
            AdeComponent::A(_) => 0,
            AdeComponent::D(_) => 1,
            AdeComponent::E(_) => 2,
        }
    }
}

impl PartialOrd for AdeComponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AdeComponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rank(), self.letter_order()).cmp(&(other.rank(), other.letter_order()))
    }
}

impl std::fmt::Display for AdeComponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AdeComponent::A(n) => write!(f, "A{n}"),
            AdeComponent::D(n) => write!(f, "D{n}"),
            AdeComponent::E(n) => write!(f, "E{n}"),
        }
    }
}

/// A formal multiset of ADE symbols, stored normalized: D3 becomes A3,
/// D2 becomes A1 + A1, and D1 = D0 = 0 disappear.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AdeType {
    comps: Vec<AdeComponent>,
}

impl AdeType {
    pub fn empty() -> Self {
        AdeType::default()
    }

    pub fn a(l: u32) -> Self {
        assert!(l >= 1, "A_l needs l >= 1");
        AdeType { comps: vec![AdeComponent::A(l)] }
    }

    pub fn d(m: u32) -> Self {
        match m {
            0 | 1 => AdeType::empty(),
            2 => AdeType { comps: vec![AdeComponent::A(1), AdeComponent::A(1)] },
            3 => AdeType::a(3),
            _ => AdeType { comps: vec![AdeComponent::D(m)] },
        }
    }

    pub fn e(n: u32) -> Self {
        assert!((6..=8).contains(&n), "E_n needs n in 6..8");
        AdeType { comps: vec![AdeComponent::E(n)] }
    }

    pub fn from_components<I: IntoIterator<Item = AdeComponent>>(iter: I) -> Self {
        let mut sum = AdeType::empty();
        for c in iter {
            let part = match c {
                AdeComponent::A(l) => AdeType::a(l),
                AdeComponent::D(m) => AdeType::d(m),
                AdeComponent::E(n) => AdeType::e(n),
            };
            sum = sum.add(&part);
        }
        sum
    }

    pub fn add(&self, other: &AdeType) -> AdeType {
        let mut comps = self.comps.clone();
        comps.extend(other.comps.iter().copied());
        comps.sort();
        AdeType { comps }
    }

    pub fn components(&self) -> &[AdeComponent] {
        &self.comps
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    /// Total Milnor number: the sum of the component ranks.
    pub fn milnor(&self) -> u32 {
        self.comps.iter().map(|c| c.rank()).sum()
    }

    pub fn root_count(&self) -> usize {
        self.comps.iter().map(|c| c.root_count()).sum()
    }
}

impl std::fmt::Display for AdeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.comps.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// The full set of roots (v with v.v = 2) of a positive definite even
/// lattice, partitioned into the connected components of the graph on
/// roots-up-to-sign with edges at nonzero pairing.
#[derive(Debug, Clone)]
pub struct RootInventory {
    pub roots: Vec<Vec<BigInt>>,
    pub components: Vec<RootComponent>,
}

#[derive(Debug, Clone)]
pub struct RootComponent {
    pub roots: Vec<Vec<BigInt>>,
    pub rank: usize,
}

impl RootInventory {
    pub fn count(&self) -> usize {
        self.roots.len()
    }
}

/// Groups a root list (closed under negation) into components and computes
/// component ranks from the Hermite form of the integer span.
pub fn inventory_from_roots(gram: &IntMat, roots: Vec<Vec<BigInt>>) -> RootInventory {
    let mut roots = roots;
    roots.sort();
    // representatives modulo +-: keep the lexicographically positive one
    let reps: Vec<&Vec<BigInt>> = roots
        .iter()
        .filter(|v| {
            v.iter()
                .find(|c| !c.is_zero())
                .map(|c| c > &BigInt::zero())
                .unwrap_or(false)
        })
        .collect();
    let n = reps.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    let pairings: Vec<Vec<BigInt>> = reps.iter().map(|v| gram.mul_vec(v)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let dot: BigInt = reps[i].iter().zip(&pairings[j]).map(|(a, b)| a * b).sum();
            if !dot.is_zero() {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut components: Vec<RootComponent> = groups
        .into_values()
        .map(|idxs| {
            let mut comp_roots: Vec<Vec<BigInt>> = Vec::with_capacity(2 * idxs.len());
            for &i in &idxs {
                comp_roots.push(reps[i].clone());
                comp_roots.push(reps[i].iter().map(|c| -c).collect());
            }
            comp_roots.sort();
            let rank = IntMat::from_rows(comp_roots.clone()).rank();
            RootComponent { roots: comp_roots, rank }
        })
        .collect();
    components.sort_by(|a, b| {
        (a.rank, a.roots.len(), &a.roots)
            .cmp(&(b.rank, b.roots.len(), &b.roots))
    });
    RootInventory { roots, components }
}

/// Enumerates every root of a positive definite even lattice by listing the
/// integer points on the fiber Q_T = 2 of the norm form.
pub fn enumerate_roots(lattice: &IntegerLattice) -> Result<RootInventory> {
    if !lattice.is_even() {
        return Err(Error::NotEven);
    }
    if !lattice.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let n = lattice.rank();
    let form = QuadraticForm::new(lattice.gram().to_q(), vec![Rat::zero(); n], rat(-2))?;
    let out = enumerate(&form, &CosetConstraint::all_integers(n), &Comparison::Equals(rat(0)))?;
    let roots: Vec<Vec<BigInt>> = out
        .points
        .into_iter()
        .map(|p| p.into_iter().map(|c| c.to_integer()).collect())
        .collect();
    Ok(inventory_from_roots(lattice.gram(), roots))
}

/// ADE type of an inventory via the (rank, root count) classification.
pub fn ade_type(inv: &RootInventory) -> Result<AdeType> {
    let mut comps = Vec::new();
    for c in &inv.components {
        let n = c.rank;
        let count = c.roots.len();
        let symbol = if count == n * (n + 1) {
            AdeComponent::A(n as u32)
        } else if n >= 4 && count == 2 * n * (n - 1) {
            AdeComponent::D(n as u32)
        } else if n == 6 && count == 72 {
            AdeComponent::E(6)
        } else if n == 7 && count == 126 {
            AdeComponent::E(7)
        } else if n == 8 && count == 240 {
            AdeComponent::E(8)
        } else {
            return Err(Error::UnclassifiableComponent { rank: n, count });
        };
        comps.push(symbol);
    }
    Ok(AdeType::from_components(comps))
}

pub fn ade_type_of_lattice(lattice: &IntegerLattice) -> Result<AdeType> {
    ade_type(&enumerate_roots(lattice)?)
}

/// The positive definite summand completing M to the full rank-22 lattice.
#[derive(Debug, Clone)]
pub enum DefiniteTail {
    Empty,
    Venkov(VenkovSpec),
    RootLattices(Vec<AdeComponent>),
}

impl DefiniteTail {
    pub fn rank(&self) -> u32 {
        match self {
            DefiniteTail::Empty => 0,
            DefiniteTail::Venkov(spec) => spec.r,
            DefiniteTail::RootLattices(kinds) => kinds.iter().map(|k| k.rank()).sum(),
        }
    }
}

/// ADE type of a Venkov lattice: D_{r-s} except for the five small
/// exceptional triples.
pub fn venkov_sigma(spec: &VenkovSpec) -> AdeType {
    match (spec.p, spec.r, spec.s) {
        (_, 8, 0) => AdeType::e(8),
        (7, 2, 1) => AdeType::a(1),
        (5, 4, 1) => AdeType::a(4),
        (3, 4, 2) => AdeType::a(2).add(&AdeType::a(2)),
        (3, 6, 1) => AdeType::e(6),
        _ => AdeType::d(spec.r - spec.s),
    }
}

/// ADE type of the definite summand. Venkov summands use the closed form
/// above, cross-validated by enumeration up to rank 16; root-lattice
/// summands return their defining type.
pub fn sigma_of_definite_tail(tail: &DefiniteTail) -> Result<AdeType> {
    match tail {
        DefiniteTail::Empty => Ok(AdeType::empty()),
        DefiniteTail::Venkov(spec) => {
            let formula = venkov_sigma(spec);
            if spec.r <= 16 {
                let enumerated = ade_type_of_lattice(&venkov_gram(spec)?)?;
                if enumerated != formula {
                    return Err(Error::CrossCheckMismatch(format!(
                        "{}: closed form {formula}, enumeration {enumerated}",
                        spec.label()
                    )));
                }
            }
            Ok(formula)
        }
        DefiniteTail::RootLattices(kinds) => Ok(AdeType::from_components(kinds.iter().copied())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::root_lattice_gram;
    use crate::lattice::IntegerLattice;

    #[test]
    fn ade_normalization() {
        assert_eq!(AdeType::d(3), AdeType::a(3));
        assert_eq!(AdeType::d(2).to_string(), "A1+A1");
        assert!(AdeType::d(1).is_empty());
        assert!(AdeType::d(0).is_empty());
        assert_eq!(AdeType::d(16).to_string(), "D16");
        let sum = AdeType::d(12).add(&AdeType::a(2)).add(&AdeType::a(1));
        assert_eq!(sum.to_string(), "A1+A2+D12");
        assert_eq!(sum.milnor(), 15);
        assert_eq!(AdeType::empty().to_string(), "0");
    }

    #[test]
    fn single_a1() {
        let l = IntegerLattice::with_default_labels(IntMat::from_i64(&[&[2]])).unwrap();
        let inv = enumerate_roots(&l).unwrap();
        assert_eq!(inv.count(), 2);
        assert_eq!(inv.components.len(), 1);
        assert_eq!(ade_type(&inv).unwrap(), AdeType::a(1));
    }

    #[test]
    fn a4_has_twenty_roots() {
        let l = root_lattice_gram(&AdeComponent::A(4)).unwrap();
        let inv = enumerate_roots(&l).unwrap();
        assert_eq!(inv.count(), 20);
        assert_eq!(ade_type(&inv).unwrap(), AdeType::a(4));
    }

    #[test]
    fn cartan_round_trips() {
        let mut kinds = Vec::new();
        for n in 1..=8 {
            kinds.push(AdeComponent::A(n));
        }
        for n in 4..=8 {
            kinds.push(AdeComponent::D(n));
        }
        for n in 6..=8 {
            kinds.push(AdeComponent::E(n));
        }
        for kind in kinds {
            let l = root_lattice_gram(&kind).unwrap();
            let inv = enumerate_roots(&l).unwrap();
            let t = ade_type(&inv).unwrap();
            assert_eq!(t, AdeType::from_components([kind]), "round trip for {kind}");
            assert_eq!(inv.count(), kind.root_count(), "root count for {kind}");
            assert_eq!(inv.components.len(), 1);
        }
    }

    #[test]
    fn direct_sum_additivity() {
        let a2 = root_lattice_gram(&AdeComponent::A(2)).unwrap();
        let d5 = root_lattice_gram(&AdeComponent::D(5)).unwrap();
        let sum = IntegerLattice::direct_sum(&[&a2, &d5]).unwrap();
        let t = ade_type_of_lattice(&sum).unwrap();
        assert_eq!(t, AdeType::a(2).add(&AdeType::d(5)));
    }

    #[test]
    fn rejects_indefinite_and_odd() {
        let u = crate::constructions::hyperbolic_plane(1).unwrap();
        assert!(matches!(enumerate_roots(&u), Err(Error::NotPositiveDefinite)));
        let odd = IntegerLattice::with_default_labels(IntMat::from_i64(&[&[1]])).unwrap();
        assert!(matches!(enumerate_roots(&odd), Err(Error::NotEven)));
    }

    #[test]
    fn venkov_exceptional_types() {
        let cases = [
            (3u64, 8u32, 0u32, AdeType::e(8)),
            (7, 2, 1, AdeType::a(1)),
            (5, 4, 1, AdeType::a(4)),
            (3, 4, 2, AdeType::a(2).add(&AdeType::a(2))),
            (3, 6, 1, AdeType::e(6)),
        ];
        for (p, r, s, expected) in cases {
            let spec = VenkovSpec::new(p, r, s).unwrap();
            let t = sigma_of_definite_tail(&DefiniteTail::Venkov(spec)).unwrap();
            assert_eq!(t, expected, "V({p};{r},{s})");
        }
    }

    #[test]
    fn venkov_generic_type() {
        // (7,8,4): 28 + 4 = 32 = 0 mod 8, not exceptional, so D4
        let spec = VenkovSpec::new(7, 8, 4).unwrap();
        assert_eq!(sigma_of_definite_tail(&DefiniteTail::Venkov(spec)).unwrap(), AdeType::d(4));
        // (3,6,1) enumerates to E6 with 72 roots
        let spec = VenkovSpec::new(3, 6, 1).unwrap();
        let inv = enumerate_roots(&venkov_gram(&spec).unwrap()).unwrap();
        assert_eq!(inv.count(), 72);
    }
}
