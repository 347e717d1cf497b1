//! Short-vector enumeration in positive definite lattices and BFS closure of
//! reflection groups at small rank.
//!
//! Enumeration follows the Fincke-Pohst scheme on an exact LDL^T
//! decomposition of the Gram matrix; no floating point is involved anywhere,
//! the search bounds come from integer square roots of exact rationals.

use std::collections::HashSet;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::GramLattice;
use crate::matrix::{rat_ceil, rat_floor, Int, IntMatrix, Rat};

#[derive(Clone, Debug)]
pub struct ShortVectors {
    /// One representative per +-pair: the lexicographically positive member
    /// (first nonzero coordinate positive), sorted lexicographically.
    pub representatives: Vec<Vec<Int>>,
    /// Total number of vectors of the target norm, counting both signs.
    pub count_with_signs: u64,
}

struct Ldl {
    /// Strictly lower entries of the unit lower-triangular factor.
    l: Vec<Vec<Rat>>,
    /// Positive diagonal of the quadratic decomposition.
    d: Vec<Rat>,
}

/// Exact LDL^T of a symmetric matrix; fails unless positive definite.
fn ldl(l: &GramLattice) -> Result<Ldl> {
    let n = l.rank();
    let g = l.gram().to_rational();
    let mut lo = vec![vec![Rat::zero(); n]; n];
    let mut d = vec![Rat::zero(); n];
    for j in 0..n {
        let mut dj = g.at(j, j).clone();
        for k in 0..j {
            dj -= &lo[j][k] * &lo[j][k] * &d[k];
        }
        if !dj.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        for i in j + 1..n {
            let mut v = g.at(i, j).clone();
            for k in 0..j {
                v -= &lo[i][k] * &lo[j][k] * &d[k];
            }
            lo[i][j] = v / &dj;
        }
        d[j] = dj;
    }
    Ok(Ldl { l: lo, d })
}

/// Upper bound for the integer part of sqrt(x), x a nonnegative rational.
fn sqrt_upper(x: &Rat) -> Int {
    debug_assert!(!x.is_negative());
    // sqrt(p/q) = sqrt(p q)/q <= (isqrt(p q) + 1)/q
    let pq = x.numer() * x.denom();
    (pq.sqrt() + Int::from(1)).div_ceil(x.denom())
}

/// Complete enumeration of the vectors of a given positive norm, up to sign.
pub fn short_vectors(lattice: &GramLattice, norm: u64) -> Result<ShortVectors> {
    if norm == 0 {
        return Err(Error::InvalidParams("target norm must be positive".into()));
    }
    let n = lattice.rank();
    if n == 0 {
        return Ok(ShortVectors {
            representatives: vec![],
            count_with_signs: 0,
        });
    }
    let Ldl { l, d } = ldl(lattice)?;
    let target = Rat::from_integer(Int::from(norm));
    let mut reps: Vec<Vec<Int>> = Vec::new();
    let mut x = vec![Int::zero(); n];

    // at level i the remaining budget is target minus the contribution of
    // coordinates > i; each level contributes d_i (x_i + c_i)^2 with
    // c_i = sum_{j>i} L[j][i] x_j
    fn descend(
        i: usize,
        rem: Rat,
        x: &mut Vec<Int>,
        l: &[Vec<Rat>],
        d: &[Rat],
        reps: &mut Vec<Vec<Int>>,
    ) {
        let n = x.len();
        let mut c = Rat::zero();
        for j in i + 1..n {
            c += &l[j][i] * Rat::from_integer(x[j].clone());
        }
        let bound = &rem / &d[i];
        let radius = sqrt_upper(&bound);
        let lo = rat_ceil(&(-&c - Rat::from_integer(radius.clone())));
        let hi = rat_floor(&(-&c + Rat::from_integer(radius)));
        let mut xi = lo;
        while xi <= hi {
            let shifted = Rat::from_integer(xi.clone()) + &c;
            let val = &d[i] * &shifted * &shifted;
            if val <= rem {
                x[i] = xi.clone();
                if i == 0 {
                    if (&rem - val).is_zero() && x.iter().any(|v| !v.is_zero()) {
                        reps.push(x.clone());
                    }
                } else {
                    descend(i - 1, &rem - val, x, l, d, reps);
                }
                x[i] = Int::zero();
            }
            xi += 1;
        }
    }
    descend(n - 1, target, &mut x, &l, &d, &mut reps);

    let count_with_signs = reps.len() as u64;
    debug_assert!(count_with_signs.is_multiple_of(2));
    let mut reps: Vec<Vec<Int>> = reps
        .into_iter()
        .filter(|v| {
            v.iter()
                .find(|c| !c.is_zero())
                .map(|c| c.is_positive())
                .unwrap_or(false)
        })
        .collect();
    reps.sort();
    Ok(ShortVectors {
        representatives: reps,
        count_with_signs,
    })
}

/// Number of roots (norm-2 vectors), counting both signs.
pub fn root_count(lattice: &GramLattice) -> Result<u64> {
    Ok(short_vectors(lattice, 2)?.count_with_signs)
}

pub const DEFAULT_CLOSURE_CAP: usize = 200_000;

/// Integral reflection matrices in the given vectors, erroring when a
/// reflection does not preserve the lattice.
pub fn reflection_generators(
    lattice: &GramLattice,
    vectors: &[Vec<Int>],
) -> Result<Vec<IntMatrix>> {
    let mut out = Vec::with_capacity(vectors.len());
    for v in vectors {
        let r = lattice.reflection(v)?;
        if !r.integral {
            return Err(Error::NonIntegralReflection);
        }
        out.push(r.matrix.to_integer().expect("integral reflection"));
    }
    Ok(out)
}

/// Exact order of the matrix group generated by the given isometries, by BFS
/// over distinct matrices. Every generator must preserve the Gram form.
pub fn matrix_group_order(
    lattice: &GramLattice,
    generators: &[IntMatrix],
    cap: usize,
) -> Result<u64> {
    let n = lattice.rank();
    let gram = lattice.gram();
    for g in generators {
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch("generator size".into()));
        }
        if &g.transpose().mul(gram).mul(g) != gram {
            return Err(Error::InvalidInput(
                "generator does not preserve the Gram form".into(),
            ));
        }
    }
    let gens: Vec<Vec<i64>> = generators.iter().map(|g| to_i64(g, n)).collect();
    let identity: Vec<i64> = {
        let mut m = vec![0i64; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        m
    };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(m) = frontier.pop() {
        for g in &gens {
            let next = mul_i64(&m, g, n);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded);
                }
                frontier.push(next);
            }
        }
    }
    Ok(seen.len() as u64)
}

fn to_i64(m: &IntMatrix, n: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(i64::try_from(m.at(i, j)).expect("isometry entries fit in i64"));
        }
    }
    out
}

fn mul_i64(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = out[i * n + j]
                    .checked_add(aik.checked_mul(b[k * n + j]).expect("no overflow"))
                    .expect("no overflow");
            }
        }
    }
    out
}

/// Backtracking search for an isometry between two positive definite
/// lattices of equal rank and determinant: an integer matrix P with columns
/// the images of the first basis in the second lattice, P^T G2 P = G1.
pub fn lattice_isometry(g1: &GramLattice, g2: &GramLattice) -> Result<Option<IntMatrix>> {
    let n = g1.rank();
    if g2.rank() != n {
        return Ok(None);
    }
    if g1.det() != g2.det() {
        return Ok(None);
    }
    if !g1.is_positive_definite() || !g2.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    // candidates per norm: both signs
    let mut norms: Vec<u64> = Vec::new();
    for i in 0..n {
        norms.push(u64::try_from(g1.gram().at(i, i)).expect("positive diagonal"));
    }
    let mut candidates: std::collections::HashMap<u64, Vec<Vec<Int>>> =
        std::collections::HashMap::new();
    for &norm in &norms {
        if candidates.contains_key(&norm) {
            continue;
        }
        let sv = short_vectors(g2, norm)?;
        let mut with_signs = Vec::with_capacity(sv.representatives.len() * 2);
        for v in sv.representatives {
            with_signs.push(v.iter().map(|c| -c.clone()).collect());
            with_signs.push(v);
        }
        candidates.insert(norm, with_signs);
    }
    let mut images: Vec<Vec<Int>> = Vec::with_capacity(n);
    fn rec(
        level: usize,
        n: usize,
        g1: &GramLattice,
        g2: &GramLattice,
        norms: &[u64],
        candidates: &std::collections::HashMap<u64, Vec<Vec<Int>>>,
        images: &mut Vec<Vec<Int>>,
    ) -> bool {
        if level == n {
            return true;
        }
        'cands: for cand in &candidates[&norms[level]] {
            for (i, img) in images.iter().enumerate() {
                if &g2.inner(cand, img) != g1.gram().at(level, i) {
                    continue 'cands;
                }
            }
            images.push(cand.clone());
            if rec(level + 1, n, g1, g2, norms, candidates, images) {
                return true;
            }
            images.pop();
        }
        false
    }
    if rec(0, n, g1, g2, &norms, &candidates, &mut images) {
        let p = IntMatrix::from_fn(n, n, |i, j| images[j][i].clone());
        debug_assert_eq!(&p.transpose().mul(g2.gram()).mul(&p), g1.gram());
        Ok(Some(p))
    } else {
        Ok(None)
    }
}
