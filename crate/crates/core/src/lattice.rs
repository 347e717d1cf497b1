//! Integral quadratic lattices presented by Gram matrices.
//!
//! A [`GramLattice`] is a free Z-module with a chosen basis and the symmetric
//! integer matrix of pairwise products. Labels are metadata only: two
//! lattices are never compared structurally, isometry has to be exhibited by
//! an explicit operation. All arithmetic is exact.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Int, IntMatrix, QMatrix, Rat};

#[derive(Clone, Debug)]
pub struct GramLattice {
    labels: Vec<String>,
    gram: IntMatrix,
}

impl GramLattice {
    pub fn new(labels: Vec<String>, gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() || gram.rows() != labels.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for a {}x{} gram matrix",
                labels.len(),
                gram.rows(),
                gram.cols()
            )));
        }
        if !gram.is_symmetric() {
            return Err(Error::AsymmetricGram);
        }
        Ok(GramLattice { labels, gram })
    }

    pub fn from_rows(labels: &[&str], rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            labels.iter().map(|s| s.to_string()).collect(),
            IntMatrix::from_rows(rows),
        )
    }

    fn with_default_labels(prefix: &str, gram: IntMatrix) -> Self {
        let labels = (0..gram.rows()).map(|i| format!("{prefix}{i}")).collect();
        GramLattice { labels, gram }
    }

    /// Hyperbolic plane U with basis e, f.
    pub fn hyperbolic_plane() -> Self {
        GramLattice {
            labels: vec!["e".into(), "f".into()],
            gram: IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]),
        }
    }

    /// Root lattice A_n.
    pub fn root_a(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank {
                kind: "A".into(),
                rank: n,
            });
        }
        let gram = IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Int::from(2)
            } else if i.abs_diff(j) == 1 {
                Int::from(-1)
            } else {
                Int::zero()
            }
        });
        Ok(Self::with_default_labels("a", gram))
    }

    /// Root lattice D_n, n >= 3, simple roots numbered so that the chain is
    /// a_1 .. a_{n-2} with both a_{n-1} and a_n attached to a_{n-2}. For
    /// D_4 this gives a_1*a_2 = a_2*a_3 = a_2*a_4 = -1 and all other
    /// off-diagonal products zero.
    pub fn root_d(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidRank {
                kind: "D".into(),
                rank: n,
            });
        }
        let mut bonds: Vec<(usize, usize)> = (0..n.saturating_sub(2)).map(|i| (i, i + 1)).collect();
        bonds.push((n - 3, n - 1));
        Ok(Self::with_default_labels("a", simply_laced_gram(n, &bonds)))
    }

    /// Root lattice E_6, E_7 or E_8 in the standard numbering: the chain is
    /// 1-3-4-5-...-n with node 2 attached to node 4.
    pub fn root_e(n: usize) -> Result<Self> {
        if !(6..=8).contains(&n) {
            return Err(Error::InvalidRank {
                kind: "E".into(),
                rank: n,
            });
        }
        let mut bonds = vec![(0, 2), (1, 3)];
        for i in 2..n - 1 {
            bonds.push((i, i + 1));
        }
        Ok(Self::with_default_labels("d", simply_laced_gram(n, &bonds)))
    }

    /// Odd unimodular lattice I_{p,q} = diag(+1^p, -1^q).
    pub fn odd_unimodular(p: usize, q: usize) -> Self {
        let n = p + q;
        let gram = IntMatrix::from_fn(n, n, |i, j| {
            if i != j {
                Int::zero()
            } else if i < p {
                Int::one()
            } else {
                Int::from(-1)
            }
        });
        Self::with_default_labels("x", gram)
    }

    /// Dispatch by kind name, for the CLI: "U", "A3", "D4", "E8", "I21,2".
    pub fn standard(kind: &str) -> Result<Self> {
        let kind = kind.trim();
        if kind.eq_ignore_ascii_case("U") {
            return Ok(Self::hyperbolic_plane());
        }
        let parse_rank = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::UnknownKind(kind.to_string()))
        };
        match kind.chars().next() {
            Some('A') | Some('a') => Self::root_a(parse_rank(&kind[1..])?),
            Some('D') | Some('d') => Self::root_d(parse_rank(&kind[1..])?),
            Some('E') | Some('e') => Self::root_e(parse_rank(&kind[1..])?),
            Some('I') | Some('i') => {
                let (p, q) = kind[1..]
                    .split_once(',')
                    .ok_or_else(|| Error::UnknownKind(kind.to_string()))?;
                Ok(Self::odd_unimodular(parse_rank(p)?, parse_rank(q)?))
            }
            _ => Err(Error::UnknownKind(kind.to_string())),
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn det(&self) -> Int {
        self.gram.det()
    }

    pub fn is_degenerate(&self) -> bool {
        self.det().is_zero()
    }

    /// Signature `(positive, negative, zero)` by symmetric congruence
    /// diagonalization over the rationals.
    pub fn signature(&self) -> (usize, usize, usize) {
        self.gram.to_rational().symmetric_signature()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature() == (self.rank(), 0, 0)
    }

    /// A lattice is even iff every diagonal Gram entry is even.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram.at(i, i).is_multiple_of(&Int::from(2)))
    }

    pub fn inner(&self, x: &[Int], y: &[Int]) -> Int {
        assert_eq!(x.len(), self.rank());
        assert_eq!(y.len(), self.rank());
        let mut acc = Int::zero();
        for i in 0..self.rank() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank() {
                if !y[j].is_zero() {
                    acc += &x[i] * self.gram.at(i, j) * &y[j];
                }
            }
        }
        acc
    }

    pub fn norm(&self, x: &[Int]) -> Int {
        self.inner(x, x)
    }

    /// div(v): the positive generator of the ideal of pairings of v against
    /// the lattice, i.e. the gcd of the entries of G*v.
    pub fn divisibility(&self, v: &[Int]) -> Result<Int> {
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::ZeroVector);
        }
        if self.is_degenerate() {
            return Err(Error::DegenerateLattice);
        }
        let pairings = self.gram.mul_vec(v);
        let mut g = Int::zero();
        for p in pairings {
            g = g.gcd(&p);
        }
        Ok(g)
    }

    /// Matrix of the reflection `x -> x - 2 (x*v)/(v*v) v` on L tensor Q,
    /// together with the flag telling whether it preserves L (equivalently
    /// `v^2 | 2 div(v)`).
    pub fn reflection(&self, v: &[Int]) -> Result<Reflection> {
        let n2 = self.norm(v);
        if n2.is_zero() {
            return Err(Error::IsotropicVector);
        }
        let n = self.rank();
        let pair = self.gram.mul_vec(v); // (G v)_j = v . e_j
        let coeff = Rat::new(Int::from(-2), n2.clone());
        let mut m = QMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                let add = &coeff * Rat::from_integer(&v[i] * &pair[j]);
                let val = m.at(i, j) + add;
                m.set(i, j, val);
            }
        }
        let integral = m.is_integral();
        Ok(Reflection {
            matrix: m,
            integral,
        })
    }

    pub fn rescale(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroScale);
        }
        let gram = IntMatrix::from_fn(self.rank(), self.rank(), |i, j| {
            self.gram.at(i, j) * Int::from(k)
        });
        Ok(GramLattice {
            labels: self.labels.clone(),
            gram,
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        direct_sum(&[self, other])
    }

    /// Rows of the inverse Gram matrix: the dual basis expressed in the
    /// lattice's own basis.
    pub fn dual_basis(&self) -> Result<QMatrix> {
        self.gram
            .to_rational()
            .inverse()
            .ok_or(Error::DegenerateLattice)
    }

    /// The discriminant group L*/L from the Smith normal form of the Gram
    /// matrix, with generators carried as rational vectors in L's basis.
    pub fn discriminant_group(&self) -> Result<DiscriminantGroup> {
        if self.is_degenerate() {
            return Err(Error::DegenerateLattice);
        }
        let snf = self.gram.snf();
        let diag = snf.diagonal();
        let right = snf.right.to_rational();
        let mut orders = Vec::new();
        let mut generators = Vec::new();
        for (i, d) in diag.iter().enumerate() {
            if d > &Int::one() {
                orders.push(d.clone());
                let col: Vec<Rat> = (0..self.rank())
                    .map(|r| right.at(r, i) / Rat::from_integer(d.clone()))
                    .collect();
                generators.push(col);
            }
        }
        Ok(DiscriminantGroup {
            rank: self.rank(),
            orders,
            generators,
            left: snf.left,
            diagonal: diag,
        })
    }

    /// Check membership of a rational vector in the dual lattice.
    pub fn in_dual(&self, v: &[Rat]) -> bool {
        let g = self.gram.to_rational();
        g.mul_vec(v).iter().all(|x| x.is_integer())
    }
}

fn simply_laced_gram(n: usize, bonds: &[(usize, usize)]) -> IntMatrix {
    let mut gram = IntMatrix::zeros(n, n);
    for i in 0..n {
        gram.set(i, i, Int::from(2));
    }
    for &(a, b) in bonds {
        gram.set(a, b, Int::from(-1));
        gram.set(b, a, Int::from(-1));
    }
    gram
}

pub fn direct_sum(parts: &[&GramLattice]) -> GramLattice {
    let n: usize = parts.iter().map(|l| l.rank()).sum();
    let mut gram = IntMatrix::zeros(n, n);
    let mut labels = Vec::with_capacity(n);
    let mut seen = std::collections::HashSet::new();
    let mut offset = 0;
    for (idx, l) in parts.iter().enumerate() {
        for i in 0..l.rank() {
            for j in 0..l.rank() {
                gram.set(offset + i, offset + j, l.gram.at(i, j).clone());
            }
            let mut label = l.labels[i].clone();
            if !seen.insert(label.clone()) {
                label = format!("{}.{}", label, idx);
                seen.insert(label.clone());
            }
            labels.push(label);
        }
        offset += l.rank();
    }
    GramLattice { labels, gram }
}

#[derive(Clone, Debug)]
pub struct Reflection {
    pub matrix: QMatrix,
    pub integral: bool,
}

/// Finite abelian group L*/L presented by cyclic factors in Smith normal
/// form order, with generators as rational vectors in the basis of L.
#[derive(Clone, Debug)]
pub struct DiscriminantGroup {
    rank: usize,
    orders: Vec<Int>,
    generators: Vec<Vec<Rat>>,
    left: IntMatrix,
    diagonal: Vec<Int>,
}

impl DiscriminantGroup {
    pub fn orders(&self) -> &[Int] {
        &self.orders
    }

    pub fn generators(&self) -> &[Vec<Rat>] {
        &self.generators
    }

    pub fn order(&self) -> Int {
        self.orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn is_two_elementary(&self) -> bool {
        self.orders.iter().all(|d| *d == Int::from(2))
    }

    /// Representative of the class with the given coefficients over the
    /// generators, as a rational vector in the basis of L.
    pub fn representative(&self, coeffs: &[u64]) -> Vec<Rat> {
        assert_eq!(coeffs.len(), self.generators.len());
        let mut v = vec![Rat::zero(); self.rank];
        for (c, g) in coeffs.iter().zip(&self.generators) {
            if *c == 0 {
                continue;
            }
            let c = Rat::from_integer(Int::from(*c));
            for (vi, gi) in v.iter_mut().zip(g) {
                *vi += &c * gi;
            }
        }
        v
    }

    /// Coefficients over the generators of the class of a dual vector `w`
    /// (given in the basis of L). Errors if `w` does not pair integrally
    /// with L, i.e. is not in the dual lattice.
    pub fn class_of(&self, lattice: &GramLattice, w: &[Rat]) -> Result<Vec<u64>> {
        let gw = lattice.gram().to_rational().mul_vec(w);
        if !gw.iter().all(|x| x.is_integer()) {
            return Err(Error::InvalidInput(
                "vector is not in the dual lattice".into(),
            ));
        }
        let x: Vec<Int> = gw.into_iter().map(|r| r.to_integer()).collect();
        let ux = self.left.mul_vec(&x);
        let mut coeffs = Vec::new();
        for (i, d) in self.diagonal.iter().enumerate() {
            if d > &Int::one() {
                let c = ux[i].mod_floor(d);
                coeffs.push(u64::try_from(&c).expect("small coefficient"));
            }
        }
        Ok(coeffs)
    }

    /// Iterate over all coefficient tuples of the group. Intended for the
    /// small groups of this crate (order at most 2^10).
    pub fn all_coefficients(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for d in &self.orders {
            let d = u64::try_from(d).expect("small order");
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for tail in &out {
                for c in 0..d {
                    let mut t = tail.clone();
                    t.push(c);
                    next.push(t);
                }
            }
            out = next;
        }
        out
    }
}

/// A sublattice of an ambient lattice, given by the integer coordinates of
/// the images of the sublattice basis.
#[derive(Clone, Debug)]
pub struct LatticeEmbedding {
    pub sub: GramLattice,
    pub ambient: GramLattice,
    /// One row per basis vector of `sub`, in ambient coordinates.
    pub images: IntMatrix,
}

impl LatticeEmbedding {
    /// Validating constructor: the images must be linearly independent and
    /// reproduce the Gram matrix of `sub` under the ambient form.
    pub fn new(sub: GramLattice, ambient: GramLattice, images: IntMatrix) -> Result<Self> {
        if images.rows() != sub.rank() || images.cols() != ambient.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} image matrix for a rank-{} sublattice of a rank-{} lattice",
                images.rows(),
                images.cols(),
                sub.rank(),
                ambient.rank()
            )));
        }
        let recomputed = images.mul(&ambient.gram).mul(&images.transpose());
        if &recomputed != sub.gram() {
            return Err(Error::InvalidInput(
                "images do not reproduce the sublattice Gram matrix".into(),
            ));
        }
        if images.rank() != sub.rank() {
            return Err(Error::InvalidInput("images are linearly dependent".into()));
        }
        Ok(LatticeEmbedding {
            sub,
            ambient,
            images,
        })
    }

    /// Build the embedding whose sublattice Gram matrix is recomputed from
    /// the images.
    pub fn from_images(ambient: &GramLattice, images: IntMatrix) -> Result<Self> {
        if images.cols() != ambient.rank() {
            return Err(Error::DimensionMismatch(format!(
                "image vectors of length {} in a rank-{} lattice",
                images.cols(),
                ambient.rank()
            )));
        }
        if images.rank() != images.rows() {
            return Err(Error::InvalidInput("images are linearly dependent".into()));
        }
        let gram = images.mul(ambient.gram()).mul(&images.transpose());
        let labels = (0..images.rows()).map(|i| format!("s{i}")).collect();
        Ok(LatticeEmbedding {
            sub: GramLattice { labels, gram },
            ambient: ambient.clone(),
            images,
        })
    }

    /// The full orthogonal complement of the sublattice, computed through an
    /// integer kernel; the result is saturated by construction.
    pub fn orthogonal_complement(&self) -> Result<Self> {
        let pairings = self.images.mul(self.ambient.gram());
        let basis = pairings.kernel();
        Self::from_images(&self.ambient, basis)
    }

    /// Smallest primitive sublattice of the ambient lattice containing the
    /// image: the rational span intersected with the ambient lattice.
    pub fn saturation(&self) -> Result<Self> {
        let k = self.images.kernel();
        let sat = k.kernel();
        Self::from_images(&self.ambient, sat)
    }

    pub fn is_primitive(&self) -> Result<bool> {
        let sat = self.saturation()?;
        Ok(sat.images.row_space_hnf() == self.images.row_space_hnf())
    }

    /// Map a vector of the sublattice (sub coordinates) to ambient
    /// coordinates.
    pub fn push(&self, v: &[Int]) -> Vec<Int> {
        self.images.transpose().mul_vec(v)
    }
}

/// An overlattice of `l1 (+) l2` obtained by adjoining glue vectors.
#[derive(Clone, Debug)]
pub struct Overlattice {
    pub lattice: GramLattice,
    /// Rows: basis of the overlattice in the coordinates of l1 (+) l2.
    pub basis: QMatrix,
    /// Index of l1 (+) l2 in the overlattice.
    pub index: Int,
}

impl Overlattice {
    /// Coordinates of an `l1 (+) l2` vector in the overlattice basis, if the
    /// vector lies in the overlattice (it always does for integer input).
    pub fn coords_in_overlattice(&self, v: &[Rat]) -> Option<Vec<Int>> {
        let sol = self.basis.transpose().solve(v)?;
        if sol.iter().all(|x| x.is_integer()) {
            Some(sol.into_iter().map(|x| x.to_integer()).collect())
        } else {
            None
        }
    }
}

/// Glue two lattices along a graph of dual classes. Each pair gives one
/// glue vector (a, b) in (L1 (+) L2) tensor Q; the generated subgroup of
/// A_L1 x A_L2 must be isotropic for the sum of the discriminant bilinear
/// forms, which is exactly the condition that all pairings of the glue
/// vectors are integral.
pub fn glue_overlattice(
    l1: &GramLattice,
    l2: &GramLattice,
    graph: &[(Vec<Rat>, Vec<Rat>)],
) -> Result<Overlattice> {
    let (n1, n2) = (l1.rank(), l2.rank());
    let n = n1 + n2;
    let sum = l1.direct_sum(l2);
    let mut glue_vectors: Vec<Vec<Rat>> = Vec::new();
    for (a, b) in graph {
        if a.len() != n1 || b.len() != n2 {
            return Err(Error::DimensionMismatch(
                "glue vector of wrong length".into(),
            ));
        }
        if !l1.in_dual(a) || !l2.in_dual(b) {
            return Err(Error::NotIsotropicGraph);
        }
        let mut w = a.clone();
        w.extend_from_slice(b);
        glue_vectors.push(w);
    }
    let gsum = sum.gram().to_rational();
    for (i, v) in glue_vectors.iter().enumerate() {
        for w in glue_vectors.iter().skip(i) {
            let prod: Rat = gsum.mul_vec(v).iter().zip(w).map(|(a, b)| a * b).sum();
            if !prod.is_integer() {
                return Err(Error::NotIsotropicGraph);
            }
        }
    }
    // generator matrix: standard basis plus glue vectors, cleared of
    // denominators, reduced by HNF
    let mut den = Int::one();
    for v in &glue_vectors {
        for x in v {
            den = den.lcm(x.denom());
        }
    }
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n + glue_vectors.len());
    for i in 0..n {
        let mut r = vec![Int::zero(); n];
        r[i] = den.clone();
        rows.push(r);
    }
    for v in &glue_vectors {
        rows.push(
            v.iter()
                .map(|x| (x * Rat::from_integer(den.clone())).to_integer())
                .collect(),
        );
    }
    let hnf = IntMatrix::from_int_rows(&rows).row_space_hnf();
    if hnf.rows() != n {
        return Err(Error::NotIsotropicGraph);
    }
    let den_rat = Rat::from_integer(den.clone());
    let basis = QMatrix::from_fn(n, n, |i, j| {
        Rat::from_integer(hnf.at(i, j).clone()) / &den_rat
    });
    let gram_rat = basis.mul(&gsum).mul(&basis.transpose());
    let Some(gram) = gram_rat.to_integer() else {
        return Err(Error::NonIntegralOverlattice);
    };
    let det_basis = basis.det();
    let index_rat = (Rat::one() / det_basis).abs();
    debug_assert!(index_rat.is_integer());
    let labels = (0..n).map(|i| format!("b{i}")).collect();
    Ok(Overlattice {
        lattice: GramLattice { labels, gram },
        basis,
        index: index_rat.to_integer(),
    })
}

// --- JSON serialization -------------------------------------------------
//
// Lattices travel as {"labels": [...], "gram": [[int, ...], ...]};
// embeddings add {"images": [...], "ambient": {...}}. Entries are kept as
// plain JSON integers, which bounds them to i64 on the wire.

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    labels: Vec<String>,
    gram: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct EmbeddingJson {
    labels: Vec<String>,
    gram: Vec<Vec<i64>>,
    images: Vec<Vec<i64>>,
    ambient: LatticeJson,
}

fn int_rows_to_i64(m: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for j in 0..m.cols() {
            row.push(
                i64::try_from(m.at(i, j))
                    .map_err(|_| Error::InvalidInput("entry exceeds i64 range".into()))?,
            );
        }
        out.push(row);
    }
    Ok(out)
}

impl GramLattice {
    pub fn to_json(&self) -> Result<String> {
        let doc = LatticeJson {
            labels: self.labels.clone(),
            gram: int_rows_to_i64(&self.gram)?,
        };
        serde_json::to_string_pretty(&doc).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: LatticeJson =
            serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))?;
        GramLattice::new(doc.labels, IntMatrix::from_rows(&doc.gram))
    }
}

impl LatticeEmbedding {
    pub fn to_json(&self) -> Result<String> {
        let doc = EmbeddingJson {
            labels: self.sub.labels.clone(),
            gram: int_rows_to_i64(self.sub.gram())?,
            images: int_rows_to_i64(&self.images)?,
            ambient: LatticeJson {
                labels: self.ambient.labels.clone(),
                gram: int_rows_to_i64(self.ambient.gram())?,
            },
        };
        serde_json::to_string_pretty(&doc).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: EmbeddingJson =
            serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let sub = GramLattice::new(doc.labels, IntMatrix::from_rows(&doc.gram))?;
        let ambient =
            GramLattice::new(doc.ambient.labels, IntMatrix::from_rows(&doc.ambient.gram))?;
        LatticeEmbedding::new(sub, ambient, IntMatrix::from_rows(&doc.images))
    }
}

impl fmt::Display for GramLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "rank {} lattice [{}]",
            self.rank(),
            self.labels.join(", ")
        )?;
        for i in 0..self.rank() {
            let row: Vec<String> = (0..self.rank())
                .map(|j| self.gram.at(i, j).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
