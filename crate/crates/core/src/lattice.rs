//! Integer lattices given by Gram matrices, and the exact invariants used
//! to identify them: discriminant, discriminant group, signature, and
//! saturated orthogonal complements.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::matrix::{kernel_of_dot, IntMat};

/// A non-degenerate lattice of finite rank, presented by a symmetric
/// integer Gram matrix with named basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    gram: IntMat,
    labels: Vec<String>,
    det: BigInt,
}

impl IntegerLattice {
    pub fn new(gram: IntMat, labels: Vec<String>) -> Result<Self> {
        if gram.rows() != gram.cols() || gram.rows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "gram must be square and non-empty, got {}x{}",
                gram.rows(),
                gram.cols()
            )));
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if labels.len() != gram.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for rank {}",
                labels.len(),
                gram.rows()
            )));
        }
        let det = gram.det();
        if det.is_zero() {
            return Err(Error::SingularGram);
        }
        Ok(IntegerLattice { gram, labels, det })
    }

    pub fn with_default_labels(gram: IntMat) -> Result<Self> {
        let labels = (1..=gram.rows()).map(|i| format!("b{i}")).collect();
        Self::new(gram, labels)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMat {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The opposite lattice: same module, negated form.
    pub fn opposite(&self) -> IntegerLattice {
        let n = self.rank();
        let mut g = IntMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, -self.gram.at(i, j).clone());
            }
        }
        IntegerLattice::new(g, self.labels.clone()).expect("negation preserves validity")
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram.at(i, i).is_even())
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.det
    }

    pub fn discriminant_group(&self) -> DiscriminantGroupShape {
        let diag = self.gram.smith_diagonal();
        let invariant_factors = diag
            .into_iter()
            .filter(|d| d > &BigInt::one())
            .collect::<Vec<_>>();
        DiscriminantGroupShape { invariant_factors }
    }

    pub fn signature(&self) -> Result<Signature> {
        let (n_plus, n_minus) = self.gram.to_q().symmetric_signature()?;
        Ok(Signature { n_plus, n_minus })
    }

    pub fn is_positive_definite(&self) -> bool {
        matches!(self.signature(), Ok(s) if s.n_minus == 0)
    }

    pub fn is_negative_definite(&self) -> bool {
        matches!(self.signature(), Ok(s) if s.n_plus == 0)
    }

    /// Orthogonal direct sum; Gram matrices are placed block-diagonally and
    /// basis labels concatenated.
    pub fn direct_sum(parts: &[&IntegerLattice]) -> Result<IntegerLattice> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("empty direct sum".into()));
        }
        let n: usize = parts.iter().map(|l| l.rank()).sum();
        let mut gram = IntMat::zero(n, n);
        let mut labels = Vec::with_capacity(n);
        let mut off = 0usize;
        for l in parts {
            let r = l.rank();
            for i in 0..r {
                for j in 0..r {
                    gram.set(off + i, off + j, l.gram.at(i, j).clone());
                }
            }
            labels.extend(l.labels.iter().cloned());
            off += r;
        }
        IntegerLattice::new(gram, labels)
    }

    /// The bilinear pairing x.y = x^T gram y, for rational coordinate vectors.
    pub fn bilinear(&self, x: &LatticeVector, y: &LatticeVector) -> Result<Rat> {
        let n = self.rank();
        if x.coords.len() != n || y.coords.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {} in rank-{} lattice",
                x.coords.len(),
                y.coords.len(),
                n
            )));
        }
        let gq = self.gram.to_q();
        let gy = gq.mul_vec(&y.coords);
        Ok(x.coords.iter().zip(&gy).map(|(a, b)| a * b).sum())
    }

    pub fn norm(&self, x: &LatticeVector) -> Result<Rat> {
        self.bilinear(x, x)
    }

    /// Saturated orthogonal complement of a nonzero lattice vector h:
    /// a basis of { u in L : u.h = 0 } (rows of the returned embedding
    /// matrix, in lattice coordinates) together with the induced Gram
    /// matrix. Errors if h is isotropic enough to make the complement
    /// degenerate.
    pub fn orthogonal_complement(
        &self,
        h: &LatticeVector,
    ) -> Result<(IntegerLattice, IntMat)> {
        let hz = h.integer_coords().ok_or(Error::NotInLattice)?;
        if hz.len() != self.rank() {
            return Err(Error::DimensionMismatch(
                "vector length differs from rank".into(),
            ));
        }
        if hz.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let v = self.gram.mul_vec(&hz);
        let (kernel, _, _) = kernel_of_dot(&v);
        let induced = kernel.mul(&self.gram).mul(&kernel.transpose());
        let labels = (1..=kernel.rows()).map(|i| format!("e{i}")).collect();
        match IntegerLattice::new(induced, labels) {
            Ok(l) => Ok((l, kernel)),
            Err(Error::SingularGram) => Err(Error::DegenerateComplement),
            Err(e) => Err(e),
        }
    }

    /// Plain-text serialization: rank, Gram rows, label line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.rank()));
        for i in 0..self.rank() {
            let row: Vec<String> = self.gram.row(i).iter().map(|x| x.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out.push_str(&self.labels.join(" "));
        out.push('\n');
        out
    }

    pub fn from_text(text: &str) -> Result<IntegerLattice> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let first = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank line: {first:?}")))?;
        let mut gram = IntMat::zero(n, n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {}", i + 1)))?;
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    entries.len()
                )));
            }
            for (j, e) in entries.iter().enumerate() {
                let v: BigInt = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer {e:?}")))?;
                gram.set(i, j, v);
            }
        }
        let labels = match lines.next() {
            Some(line) => {
                let ls: Vec<String> = line.split_whitespace().map(String::from).collect();
                if ls.len() != n {
                    return Err(Error::Parse(format!(
                        "label line has {} entries, expected {n}",
                        ls.len()
                    )));
                }
                ls
            }
            None => (1..=n).map(|i| format!("b{i}")).collect(),
        };
        IntegerLattice::new(gram, labels)
    }
}

/// A vector in L tensor (1/2)Z or more generally with rational coordinates
/// relative to the lattice basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeVector {
    pub coords: Vec<Rat>,
}

impl LatticeVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        LatticeVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector {
            coords: coords
                .iter()
                .map(|&c| Rat::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn from_ints(coords: Vec<BigInt>) -> Self {
        LatticeVector {
            coords: coords.into_iter().map(Rat::from_integer).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Member of the lattice itself (all coordinates integral).
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn integer_coords(&self) -> Option<Vec<BigInt>> {
        self.is_integral()
            .then(|| self.coords.iter().map(|c| c.to_integer()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, f: &Rat) -> LatticeVector {
        LatticeVector {
            coords: self.coords.iter().map(|c| c * f).collect(),
        }
    }
}

impl std::fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Invariant factors d_1 | d_2 | ... | d_k (> 1) of the discriminant group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantGroupShape {
    pub invariant_factors: Vec<BigInt>,
}

impl DiscriminantGroupShape {
    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors
            .iter()
            .fold(BigInt::one(), |acc, d| acc * d)
    }

    /// (Z/p)^k shape test.
    pub fn is_elementary(&self, p: u64, k: usize) -> bool {
        self.invariant_factors.len() == k
            && self.invariant_factors.iter().all(|d| d == &BigInt::from(p))
    }
}

impl std::fmt::Display for DiscriminantGroupShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub n_plus: usize,
    pub n_minus: usize,
}

impl Signature {
    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.n_plus, self.n_minus)
    }
}
