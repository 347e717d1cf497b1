//! The lattices attached to a cubic fourfold with an Eckardt point.
//!
//! The algebraic sublattice M is spanned by the classes `[F_0]`, ..., `[F_6]` of
//! the cone surfaces over a hyperplane section; h^2 = 3`[F_0]`-`[F_1]`-...-`[F_6]`
//! is the square of the hyperplane class. Its orthogonal complement T in the
//! odd unimodular lattice I_{21,2} is U^2 (+) D_4^3. This module constructs
//! both sides explicitly, glues them back to a unimodular lattice, realizes
//! the W(E_6) action, classifies the two kinds of special vectors in T, and
//! carries out the weight and multiplicity bookkeeping for the quasi-pullback
//! of the weight-12 form on II_{26,2}.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::discform::{BitMatrix, FiniteQuadraticForm, IsometryMode};
use crate::error::{Error, Result};
use crate::lattice::{
    direct_sum, glue_overlattice, DiscriminantGroup, GramLattice, LatticeEmbedding,
};
use crate::matrix::{int, rat, Int, IntMatrix, QMatrix, Rat};
use crate::roots::{lattice_isometry, matrix_group_order, root_count, short_vectors};

// --- The lattice M -------------------------------------------------------

/// The rank-7 positive definite lattice spanned by `[F_0]`, ..., `[F_6]`:
/// `[F_0]`^2 = 7, `[F_i]`^2 = 3, `[F_0]`.`[F_i]` = 3 and `[F_i]`.`[F_j]` = 1.
pub fn build_m() -> GramLattice {
    let gram: Vec<Vec<i64>> = (0..7)
        .map(|i| {
            (0..7)
                .map(|j| match (i, j) {
                    (0, 0) => 7,
                    (0, _) | (_, 0) => 3,
                    _ if i == j => 3,
                    _ => 1,
                })
                .collect()
        })
        .collect();
    GramLattice::from_rows(&["F0", "F1", "F2", "F3", "F4", "F5", "F6"], &gram)
        .expect("fixed symmetric matrix")
}

/// h^2 = 3`[F_0]` - `[F_1]` - ... - `[F_6]` in the basis of M.
pub fn h_squared() -> Vec<Int> {
    vec![int(3), int(-1), int(-1), int(-1), int(-1), int(-1), int(-1)]
}

/// The inverse Gram matrix of M: diagonal (4, 1, ..., 1), first row and
/// column -3/2, remaining off-diagonal entries 1/2.
pub fn expected_inverse_gram_m() -> QMatrix {
    QMatrix::from_fn(7, 7, |i, j| match (i, j) {
        (0, 0) => rat(4, 1),
        (0, _) | (_, 0) => rat(-3, 2),
        _ if i == j => rat(1, 1),
        _ => rat(1, 2),
    })
}

/// Dual basis vectors `[F_1]*`, ..., `[F_6]*` of M as columns of the inverse
/// Gram matrix; they form an F_2 basis of the discriminant group A_M.
pub fn m_dual_basis() -> Result<Vec<Vec<Rat>>> {
    let m = build_m();
    let inv = m.dual_basis()?;
    Ok((1..7)
        .map(|i| (0..7).map(|r| inv.at(r, i).clone()).collect())
        .collect())
}

/// The discriminant bilinear form of M on the basis {`[F_1]*`, ..., `[F_6]*`}:
/// zero diagonal, 1/2 off the diagonal.
pub fn expected_bilinear_form_m() -> Vec<Vec<Rat>> {
    (0..6)
        .map(|i| {
            (0..6)
                .map(|j| if i == j { rat(0, 1) } else { rat(1, 2) })
                .collect()
        })
        .collect()
}

/// b_M as a finite bilinear form on {`[F_1]*`, ..., `[F_6]*`}. M is odd, so no
/// quadratic refinement is emitted.
pub fn m_discriminant_form_on_dual_basis() -> Result<FiniteQuadraticForm> {
    let m = build_m();
    FiniteQuadraticForm::from_dual_vectors(&m, &m_dual_basis()?, vec![2; 6])
}

#[derive(Clone, Debug)]
pub struct IsotropyReport {
    pub elements_checked: usize,
    pub all_isotropic: bool,
    pub coset_identities_hold: bool,
}

/// Check that every element of A_M is isotropic for b_M, and that the class
/// of each subset-sum of the dual basis is half of the matching integral
/// vector from the 2-divisibility case list: h^2-`[F_i]`, `[F_i]`-`[F_j]`,
/// `[F_0]`-`[F_l]`-`[F_m]`-`[F_n]`, `[F_i]`+`[F_j]`-`[F_k]`-`[F_l]`, `[F_0]`-`[F_b]`, h^2-`[F_0]`.
pub fn verify_isotropy_of_am() -> Result<IsotropyReport> {
    let m = build_m();
    let duals = m_dual_basis()?;
    let h2 = h_squared();
    let mut all_isotropic = true;
    let mut identities = true;
    let mut checked = 0;

    for mask in 0u32..64 {
        let subset: Vec<usize> = (0..6).filter(|&i| mask >> i & 1 == 1).collect();
        let mut v = vec![Rat::zero(); 7];
        for &i in &subset {
            for (vr, dr) in v.iter_mut().zip(&duals[i]) {
                *vr += dr;
            }
        }
        checked += 1;
        let norm: Rat = m
            .gram()
            .to_rational()
            .mul_vec(&v)
            .iter()
            .zip(&v)
            .map(|(a, b)| a * b)
            .sum();
        if !norm.is_integer() {
            all_isotropic = false;
        }
        if subset.is_empty() {
            continue;
        }
        // case-list vector whose half must represent this class
        let fi = |i: usize| -> Vec<Int> {
            let mut e = vec![Int::zero(); 7];
            e[i + 1] = Int::one();
            e
        };
        let complement: Vec<usize> = (0..6).filter(|i| !subset.contains(i)).collect();
        let case: Vec<Int> = match subset.len() {
            1 => sub(&h2, &fi(subset[0])),
            2 => sub(&fi(subset[0]), &fi(subset[1])),
            3 => {
                let mut x = vec![Int::zero(); 7];
                x[0] = Int::one();
                for &c in &complement {
                    x[c + 1] = int(-1);
                }
                x
            }
            4 => {
                let mut x = vec![Int::zero(); 7];
                x[subset[0] + 1] = Int::one();
                x[subset[1] + 1] = Int::one();
                x[subset[2] + 1] = int(-1);
                x[subset[3] + 1] = int(-1);
                x
            }
            5 => {
                let mut x = vec![Int::zero(); 7];
                x[0] = Int::one();
                x[complement[0] + 1] = int(-1);
                x
            }
            6 => {
                let mut x = h2.clone();
                x[0] -= Int::one();
                x
            }
            _ => unreachable!(),
        };
        let ok = v
            .iter()
            .zip(&case)
            .all(|(vi, ci)| (vi - Rat::new(ci.clone(), int(2))).is_integer());
        if !ok {
            identities = false;
        }
    }
    Ok(IsotropyReport {
        elements_checked: checked,
        all_isotropic,
        coset_identities_hold: identities,
    })
}

fn sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

// --- (h^2)-perp in M ------------------------------------------------------

#[derive(Clone, Debug)]
pub struct H2PerpReport {
    /// Gram matrix on the basis `[F_2]`-`[F_1]`, ..., `[F_6]`-`[F_5]`,
    /// -`[F_0]`+`[F_1]`+`[F_2]`+`[F_3]`.
    pub gram: IntMatrix,
    pub matches_e6_times_two: bool,
    pub equals_full_complement: bool,
    pub det: Int,
    pub even: bool,
}

/// Basis of (h^2)-perp in M used for the E_6(2) identification.
pub fn h2_perp_basis() -> Vec<Vec<Int>> {
    let mut rows = Vec::new();
    for i in 1..6 {
        let mut r = vec![Int::zero(); 7];
        r[i] = int(-1);
        r[i + 1] = Int::one();
        rows.push(r);
    }
    rows.push(vec![
        int(-1),
        int(1),
        int(1),
        int(1),
        int(0),
        int(0),
        int(0),
    ]);
    rows
}

/// Compute (h^2)-perp in M on the stated basis and identify it with E_6(2):
/// reordering the basis as (b_1, b_6, b_2, b_3, b_4, b_5) must reproduce the
/// Gram matrix of E_6 scaled by two, on the nose.
pub fn primitive_part_h2() -> Result<H2PerpReport> {
    let m = build_m();
    let basis = h2_perp_basis();
    for b in &basis {
        debug_assert!(m.inner(b, &h_squared()).is_zero());
    }
    let images = IntMatrix::from_int_rows(&basis);
    let emb = LatticeEmbedding::from_images(&m, images.clone())?;
    let e6_2 = GramLattice::root_e(6)?.rescale(2)?;
    // node order: the chain b1..b5 with branch b6 on b3 is E6 with
    // (a1, a2, a3, a4, a5, a6) = (b1, b6, b2, b3, b4, b5)
    let perm = [0usize, 5, 1, 2, 3, 4];
    let permuted = IntMatrix::from_fn(6, 6, |i, j| emb.sub.gram().at(perm[i], perm[j]).clone());
    let matches = &permuted == e6_2.gram();

    let h2_emb = LatticeEmbedding::from_images(&m, IntMatrix::from_int_rows(&[h_squared()]))?;
    let complement = h2_emb.orthogonal_complement()?;
    let equals_full_complement = complement.images.row_space_hnf() == images.row_space_hnf();

    Ok(H2PerpReport {
        det: emb.sub.det(),
        even: emb.sub.is_even(),
        gram: emb.sub.gram().clone(),
        matches_e6_times_two: matches,
        equals_full_complement,
    })
}

// --- The lattice T --------------------------------------------------------

/// T = U (+) U (+) D_4 (+) D_4 (+) D_4 with basis
/// e1, f1, e2, f2, a1..a4, b1..b4, c1..c4.
pub fn build_t() -> GramLattice {
    let u = GramLattice::hyperbolic_plane();
    let d4 = GramLattice::root_d(4).expect("rank 4");
    let t = direct_sum(&[&u, &u, &d4, &d4, &d4]);
    let labels = [
        "e1", "f1", "e2", "f2", "a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "c1", "c2", "c3",
        "c4",
    ];
    GramLattice::new(
        labels.iter().map(|s| s.to_string()).collect(),
        t.gram().clone(),
    )
    .expect("same gram")
}

/// T with its discriminant group and quadratic form, built once and shared.
#[derive(Clone, Debug)]
pub struct TContext {
    pub lattice: GramLattice,
    pub group: DiscriminantGroup,
    pub form: FiniteQuadraticForm,
}

impl TContext {
    pub fn new() -> Result<Self> {
        let lattice = build_t();
        let group = lattice.discriminant_group()?;
        let form = FiniteQuadraticForm::on_generators(&lattice, &group)?;
        Ok(TContext {
            lattice,
            group,
            form,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VectorClass {
    /// Primitive, v^2 = 2, div(v) = 1.
    Nodal,
    /// Primitive, v^2 = 4, div(v) = 2.
    Tangential,
    Other,
}

#[derive(Clone, Debug)]
pub struct VectorTypeReport {
    pub class: VectorClass,
    pub primitive: bool,
    pub norm: Int,
    pub divisibility: Int,
    /// Class of v/div(v) in A_T over the group generators.
    pub vhat: Vec<u64>,
    /// q_T of that class.
    pub q_vhat: Rat,
}

/// Classify a vector of T by its complete stable-orbit invariant: the norm
/// together with the class of v/div(v) in the discriminant group.
pub fn classify_vector(ctx: &TContext, v: &[Int]) -> Result<VectorTypeReport> {
    if v.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let mut content = Int::zero();
    for x in v {
        content = content.gcd(x);
    }
    let primitive = content.is_one();
    let norm = ctx.lattice.norm(v);
    let divisibility = ctx.lattice.divisibility(v)?;
    let scaled: Vec<Rat> = v
        .iter()
        .map(|x| Rat::new(x.clone(), divisibility.clone()))
        .collect();
    let vhat = ctx.group.class_of(&ctx.lattice, &scaled)?;
    let q_vhat = ctx.form.quadratic_value(&vhat)?;
    let class = if primitive && norm == int(2) && divisibility.is_one() {
        debug_assert!(vhat.iter().all(|&c| c == 0));
        VectorClass::Nodal
    } else if primitive && norm == int(4) && divisibility == int(2) {
        VectorClass::Tangential
    } else {
        VectorClass::Other
    };
    Ok(VectorTypeReport {
        class,
        primitive,
        norm,
        divisibility,
        vhat,
        q_vhat,
    })
}

/// The 36 tangential-class representatives: a_i + a_j, b_k + b_l, c_s + c_t
/// over the outer-node pairs {1,3}, {1,4}, {3,4} of each D_4 copy, and
/// 2e_1 - 2f_1 + a_i + a_j + b_k + b_l + c_s + c_t.
pub fn type2_representatives() -> Vec<Vec<Int>> {
    // outer nodes of D_4 in local coordinates 0..3 (node 1 is the center)
    let pairs = [(0usize, 2usize), (0, 3), (2, 3)];
    let offsets = [4usize, 8, 12];
    let mut out = Vec::with_capacity(36);
    for &off in &offsets {
        for &(a, b) in &pairs {
            let mut v = vec![Int::zero(); 16];
            v[off + a] = Int::one();
            v[off + b] = Int::one();
            out.push(v);
        }
    }
    for &(a1, b1) in &pairs {
        for &(a2, b2) in &pairs {
            for &(a3, b3) in &pairs {
                let mut v = vec![Int::zero(); 16];
                v[0] = int(2);
                v[1] = int(-2);
                v[4 + a1] = Int::one();
                v[4 + b1] = Int::one();
                v[8 + a2] = Int::one();
                v[8 + b2] = Int::one();
                v[12 + a3] = Int::one();
                v[12 + b3] = Int::one();
                out.push(v);
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Type2Census {
    pub representatives: usize,
    pub all_tangential: bool,
    pub distinct_vhat: usize,
    pub vhat_equals_nonvanishing_locus: bool,
    pub single_orbit: bool,
}

/// Verify the tangential orbit story: the 36 representatives have norm 4 and
/// divisibility 2, their classes in A_T are pairwise distinct and exhaust the
/// locus where q_T is 1, and O(q_T) is transitive on that locus.
pub fn type2_orbit_census() -> Result<Type2Census> {
    let ctx = TContext::new()?;
    let reps = type2_representatives();
    let mut all_tangential = true;
    let mut masks = std::collections::BTreeSet::new();
    for v in &reps {
        let r = classify_vector(&ctx, v)?;
        if r.class != VectorClass::Tangential || !r.q_vhat.is_one() {
            all_tangential = false;
        }
        masks.insert(mask_of(&r.vhat));
    }
    let locus: std::collections::BTreeSet<u32> = (0u32..64)
        .filter(|&m| {
            let coeffs: Vec<u64> = (0..6).map(|i| u64::from(m >> i & 1)).collect();
            ctx.form
                .quadratic_value(&coeffs)
                .expect("q present")
                .is_one()
        })
        .collect();
    let vhat_equals_nonvanishing_locus = masks == locus;
    let group = ctx.form.orthogonal_group(None)?;
    let seed = *masks.iter().next().expect("36 classes");
    let single_orbit = group.orbit(seed) == locus;
    Ok(Type2Census {
        representatives: reps.len(),
        all_tangential,
        distinct_vhat: masks.len(),
        vhat_equals_nonvanishing_locus,
        single_orbit,
    })
}

pub fn mask_of(coeffs: &[u64]) -> u32 {
    coeffs
        .iter()
        .enumerate()
        .fold(0u32, |m, (i, &c)| if c & 1 == 1 { m | 1 << i } else { m })
}

// --- Gluing M and T back to I_{21,2} ---------------------------------------

#[derive(Clone, Debug)]
pub struct LambdaRealization {
    pub lambda: GramLattice,
    pub m_embedding: LatticeEmbedding,
    pub t_embedding: LatticeEmbedding,
    /// The anti-isometry (A_M, b_M) -> (A_T, b_T) used as glue.
    pub glue_map: BitMatrix,
    pub glue_index: Int,
    pub m_primitive: bool,
    pub t_primitive: bool,
    pub complements_match: bool,
    /// Congruence witness identifying the complement of T with M.
    pub complement_isometric_to_m: bool,
}

/// Find an anti-isometry between the discriminant bilinear forms of M and T,
/// glue along its graph and verify that the result is an odd unimodular
/// lattice of signature (21, 2) containing M and T as primitive mutual
/// orthogonal complements.
pub fn realize_lambda() -> Result<LambdaRealization> {
    let m = build_m();
    let t = build_t();
    let dm = m.discriminant_group()?;
    let dt = t.discriminant_group()?;
    let fm = FiniteQuadraticForm::on_generators(&m, &dm)?;
    let ft = FiniteQuadraticForm::on_generators(&t, &dt)?;
    let glue_map = fm
        .isometry_search(&ft, IsometryMode::AntiIsometry)?
        .ok_or(Error::GlueSearchFailed)?;
    let graph: Vec<(Vec<Rat>, Vec<Rat>)> = (0..6)
        .map(|i| {
            let a = dm.representative(&unit_coeffs(6, i));
            let img = glue_map.cols[i];
            let b_coeffs: Vec<u64> = (0..6).map(|j| u64::from(img >> j & 1)).collect();
            let b = dt.representative(&b_coeffs);
            (a, b)
        })
        .collect();
    let over = glue_overlattice(&m, &t, &graph)?;
    let lambda = over.lattice.clone();
    if lambda.det().abs() != Int::one() || lambda.is_even() || lambda.signature() != (21, 2, 0) {
        return Err(Error::GlueSearchFailed);
    }

    let embed = |range: std::ops::Range<usize>| -> Result<IntMatrix> {
        let mut rows = Vec::new();
        for i in range {
            let mut v = vec![Rat::zero(); 23];
            v[i] = Rat::one();
            let coords = over
                .coords_in_overlattice(&v)
                .ok_or(Error::GlueSearchFailed)?;
            rows.push(coords);
        }
        Ok(IntMatrix::from_int_rows(&rows))
    };
    let m_embedding = LatticeEmbedding::new(m.clone(), lambda.clone(), embed(0..7)?)?;
    let t_embedding = LatticeEmbedding::new(t.clone(), lambda.clone(), embed(7..23)?)?;
    let m_primitive = m_embedding.is_primitive()?;
    let t_primitive = t_embedding.is_primitive()?;
    let comp_of_m = m_embedding.orthogonal_complement()?;
    let comp_of_t = t_embedding.orthogonal_complement()?;
    let complements_match = comp_of_m.images.row_space_hnf() == t_embedding.images.row_space_hnf()
        && comp_of_t.images.row_space_hnf() == m_embedding.images.row_space_hnf();
    let complement_isometric_to_m = lattice_isometry(&comp_of_t.sub, &m)?.is_some();
    Ok(LambdaRealization {
        lambda,
        m_embedding,
        t_embedding,
        glue_map,
        glue_index: over.index,
        m_primitive,
        t_primitive,
        complements_match,
        complement_isometric_to_m,
    })
}

fn unit_coeffs(k: usize, i: usize) -> Vec<u64> {
    let mut c = vec![0u64; k];
    c[i] = 1;
    c
}

// --- The W(E6) action on M --------------------------------------------------

/// Pic of a smooth cubic surface: the odd unimodular lattice I_{1,6}.
fn pic_cubic_surface() -> GramLattice {
    GramLattice::odd_unimodular(1, 6)
}

/// The root basis of the anticanonical complement in Pic:
/// beta_1 = -e_0+e_1+e_2+e_3 and beta_j = e_j - e_{j-1} for 2 <= j <= 6.
pub fn beta_vectors() -> Vec<Vec<Int>> {
    let mut out = Vec::with_capacity(6);
    out.push(vec![
        int(-1),
        int(1),
        int(1),
        int(1),
        int(0),
        int(0),
        int(0),
    ]);
    for j in 2..7 {
        let mut v = vec![Int::zero(); 7];
        v[j] = Int::one();
        v[j - 1] = int(-1);
        out.push(v);
    }
    out
}

/// The transforms s_{beta_i} of M: `[C]` maps to `[C] + (Cbar . beta_i)[beta_i]`,
/// the pairing taken in Pic = I_{1,6}. Columns are images of the basis.
pub fn s_beta_matrices() -> Vec<IntMatrix> {
    let pic = pic_cubic_surface();
    beta_vectors()
        .iter()
        .map(|beta| {
            IntMatrix::from_fn(7, 7, |r, c| {
                let mut e = vec![Int::zero(); 7];
                e[c] = Int::one();
                let pairing = pic.inner(&e, beta);
                let mut val = if r == c { Int::one() } else { Int::zero() };
                val += &pairing * &beta[r];
                val
            })
        })
        .collect()
}

/// The matrix of s_{beta_1} as displayed: columns are images of the basis.
pub fn expected_s_beta1() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![2, 1, 1, 1, 0, 0, 0],
        vec![-1, 0, -1, -1, 0, 0, 0],
        vec![-1, -1, 0, -1, 0, 0, 0],
        vec![-1, -1, -1, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 1, 0, 0],
        vec![0, 0, 0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, 0, 0, 1],
    ])
}

/// The induced map of s*_{beta_1} on A_M in the basis {`[F_1]*`, ..., `[F_6]*`}.
pub fn expected_s_beta1_star() -> BitMatrix {
    BitMatrix::from_01_rows(&[
        vec![1, 0, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 0],
        vec![1, 1, 1, 1, 0, 0],
        vec![1, 1, 1, 0, 1, 0],
        vec![1, 1, 1, 0, 0, 1],
    ])
}

/// The basis change of A_T identifying the s*-action with the reflection
/// action on E_6/2E_6; columns are the new basis in terms of the `[F_i]*`.
pub fn expected_basis_change() -> BitMatrix {
    BitMatrix::from_01_rows(&[
        vec![0, 1, 0, 0, 0, 0],
        vec![0, 1, 1, 0, 0, 0],
        vec![0, 0, 1, 1, 0, 0],
        vec![1, 0, 0, 1, 1, 0],
        vec![1, 0, 0, 0, 1, 1],
        vec![1, 0, 0, 0, 0, 1],
    ])
}

/// Induced action of an isometry of M on A_M, in the F_2 basis
/// {`[F_1]*`, ..., `[F_6]*`}. Uses the relation `[F_0]*` = `[F_1]*` + ... + `[F_6]*`.
pub fn induced_disc_action(s: &IntMatrix) -> Result<BitMatrix> {
    let m = build_m();
    let duals = m_dual_basis()?;
    let g = m.gram().to_rational();
    let s_rat = s.to_rational();
    let two = int(2);
    let cols: Vec<u32> = (0..6)
        .map(|i| {
            // dual coordinates of s([F_{i+1}]*)
            let image = s_rat.mul_vec(&duals[i]);
            let dual_coords = g.mul_vec(&image);
            let ints: Vec<Int> = dual_coords
                .iter()
                .map(|x| {
                    debug_assert!(x.is_integer());
                    x.to_integer()
                })
                .collect();
            // class in the F2 basis: eps_k = c_k + c_0 (mod 2)
            let c0 = ints[0].mod_floor(&two);
            let mut mask = 0u32;
            for k in 0..6 {
                let bit = (&ints[k + 1] + &c0).mod_floor(&two);
                if bit.is_one() {
                    mask |= 1 << k;
                }
            }
            mask
        })
        .collect();
    Ok(BitMatrix::from_cols(6, cols))
}

/// F_2 matrix of the reflection r_{beta_i} acting on E_6/2E_6 in the basis
/// of the beta vectors themselves: beta_j maps to beta_j + (beta_i . beta_j)
/// beta_i, the pairing taken mod 2 in Pic.
pub fn beta_reflection_mod2(i: usize) -> BitMatrix {
    let pic = pic_cubic_surface();
    let betas = beta_vectors();
    let cols: Vec<u32> = (0..6)
        .map(|j| {
            let mut mask = 1u32 << j;
            if i != j {
                let pairing = pic.inner(&betas[i], &betas[j]);
                if pairing.is_odd() {
                    mask ^= 1 << i;
                }
            }
            mask
        })
        .collect();
    BitMatrix::from_cols(6, cols)
}

pub fn bitmatrix_inverse(m: &BitMatrix) -> Option<BitMatrix> {
    let k = m.k;
    let mut a: Vec<u64> = m
        .cols
        .iter()
        .enumerate()
        .map(|(j, &c)| u64::from(c) | (1u64 << (k + j)))
        .collect();
    // column elimination on [M; I] stacked bitwise
    for pivot in 0..k {
        let p = (pivot..k).find(|&j| a[j] >> pivot & 1 == 1)?;
        a.swap(pivot, p);
        for j in 0..k {
            if j != pivot && a[j] >> pivot & 1 == 1 {
                a[j] ^= a[pivot];
            }
        }
    }
    let cols = (0..k).map(|j| (a[j] >> k) as u32).collect();
    Some(BitMatrix::from_cols(k, cols))
}

#[derive(Clone, Debug)]
pub struct SBetaReport {
    pub all_preserve_gram: bool,
    pub all_fix_h2: bool,
    pub s_beta1_matches_display: bool,
    pub transpositions_ok: bool,
    pub induced_matches_display: bool,
    pub basis_change_conjugates: bool,
    pub group_order: u64,
}

/// Verify the displayed matrices and transformation rules for the s_{beta_i}
/// and their induced action on the discriminant group, and compute the order
/// of the group they generate on M.
pub fn verify_s_beta() -> Result<SBetaReport> {
    let m = build_m();
    let h2 = h_squared();
    let mats = s_beta_matrices();
    let mut all_preserve = true;
    let mut all_fix = true;
    for s in &mats {
        if &s.transpose().mul(m.gram()).mul(s) != m.gram() {
            all_preserve = false;
        }
        if s.mul_vec(&h2) != h2 {
            all_fix = false;
        }
        debug_assert_eq!(s.det().abs(), Int::one());
    }
    let s_beta1_matches_display = mats[0] == expected_s_beta1();
    let mut transpositions_ok = true;
    for (j, s) in mats.iter().enumerate().skip(1) {
        // s_{beta_j} swaps [F_{j-1}] and [F_j] (1-based among F_1..F_6)
        let expected = IntMatrix::from_fn(7, 7, |r, c| {
            let map = |c: usize| {
                if c == j {
                    j + 1
                } else if c == j + 1 {
                    j
                } else {
                    c
                }
            };
            int(i64::from(r == map(c)))
        });
        if s != &expected {
            transpositions_ok = false;
        }
    }
    let induced: Vec<BitMatrix> = mats
        .iter()
        .map(induced_disc_action)
        .collect::<Result<_>>()?;
    let mut induced_matches_display = induced[0] == expected_s_beta1_star();
    for (j, star) in induced.iter().enumerate().skip(1) {
        // transposition of [F_j]* and [F_{j+1}]* in 0-based dual indices j-1, j
        let mut cols: Vec<u32> = (0..6).map(|i| 1 << i).collect();
        cols.swap(j - 1, j);
        if star != &BitMatrix::from_cols(6, cols) {
            induced_matches_display = false;
        }
    }
    let b = expected_basis_change();
    let b_inv = bitmatrix_inverse(&b).ok_or(Error::InvalidInput(
        "displayed basis change is singular".into(),
    ))?;
    let mut basis_change_conjugates = true;
    for (i, star) in induced.iter().enumerate() {
        let conj = b_inv.compose(&star.compose(&b));
        if conj != beta_reflection_mod2(i) {
            basis_change_conjugates = false;
        }
    }
    let group_order = matrix_group_order(&m, &mats, crate::roots::DEFAULT_CLOSURE_CAP)?;
    Ok(SBetaReport {
        all_preserve_gram: all_preserve,
        all_fix_h2: all_fix,
        s_beta1_matches_display,
        transpositions_ok,
        induced_matches_display,
        basis_change_conjugates,
        group_order,
    })
}

// --- The embedding of T into II_{26,2} --------------------------------------

#[derive(Clone, Debug)]
pub struct Ii262Embedding {
    pub ambient: GramLattice,
    pub t_embedding: LatticeEmbedding,
    pub complement: LatticeEmbedding,
}

/// II_{26,2} realized as U (+) U (+) E_8 (+) E_8 (+) E_8.
pub fn build_ii262() -> GramLattice {
    let u = GramLattice::hyperbolic_plane();
    let e8 = GramLattice::root_e(8).expect("rank 8");
    direct_sum(&[&u, &u, &e8, &e8, &e8])
}

/// The stated generators of the orthogonal complement of <d2,d3,d4,d5> in
/// E_8: d7, d8, the highest root dtilde and the D_8 highest-root image d'.
pub fn d4_complement_generators_in_e8() -> Vec<Vec<Int>> {
    let unit = |i: usize| {
        let mut v = vec![Int::zero(); 8];
        v[i] = Int::one();
        v
    };
    let dtilde: Vec<Int> = [-2, -3, -4, -6, -5, -4, -3, -2]
        .iter()
        .map(|&c| int(c))
        .collect();
    let dprime: Vec<Int> = [2, 2, 3, 4, 3, 2, 1, 0].iter().map(|&c| int(c)).collect();
    vec![unit(6), unit(7), dtilde, dprime]
}

/// Embed each D_4 factor of T as <d2,d3,d4,d5> inside one E_8 factor of
/// II_{26,2} (the hyperbolic planes map identically), and return the
/// embedding together with its orthogonal complement.
pub fn embed_t_in_ii262() -> Result<Ii262Embedding> {
    let ii = build_ii262();
    let t = build_t();
    let unit = |i: usize| {
        let mut v = vec![Int::zero(); 28];
        v[i] = Int::one();
        v
    };
    let mut rows: Vec<Vec<Int>> = (0..4).map(unit).collect();
    for block in 0..3 {
        let base = 4 + 8 * block;
        // D_4 node order (a1, a2, a3, a4) = (d2, d4, d3, d5): the center of
        // the D_4 diagram is a2 and the center of <d2..d5> in E_8 is d4
        for &delta in &[1usize, 3, 2, 4] {
            rows.push(unit(base + delta));
        }
    }
    let t_embedding = LatticeEmbedding::new(t, ii.clone(), IntMatrix::from_int_rows(&rows))?;
    let complement = t_embedding.orthogonal_complement()?;
    Ok(Ii262Embedding {
        ambient: ii,
        t_embedding,
        complement,
    })
}

#[derive(Clone, Debug)]
pub struct Ii262Report {
    pub block_complements_match_stated_generators: bool,
    pub stated_generators_gram_is_d4: bool,
    pub block_complement_isometric_to_d4: bool,
    pub t_image_primitive: bool,
    pub complement_gram_is_d4_cubed: bool,
    pub complement_root_count: u64,
}

/// Verify the D_4-in-E_8 story block by block and the global complement.
pub fn verify_ii262_embedding(emb: &Ii262Embedding) -> Result<Ii262Report> {
    let e8 = GramLattice::root_e(8)?;
    let d4 = GramLattice::root_d(4)?;
    let stated = d4_complement_generators_in_e8();
    let stated_m = IntMatrix::from_int_rows(&stated);
    let stated_gram = stated_m.mul(e8.gram()).mul(&stated_m.transpose());
    let stated_generators_gram_is_d4 = &stated_gram == d4.gram();

    // complement of <d2..d5> inside a single E_8
    let unit8 = |i: usize| {
        let mut v = vec![Int::zero(); 8];
        v[i] = Int::one();
        v
    };
    let d4_in_e8 = LatticeEmbedding::from_images(
        &e8,
        IntMatrix::from_int_rows(&[unit8(1), unit8(2), unit8(3), unit8(4)]),
    )?;
    let block_comp = d4_in_e8.orthogonal_complement()?;
    let block_complements_match_stated_generators =
        block_comp.images.row_space_hnf() == stated_m.row_space_hnf();
    let block_complement_isometric_to_d4 = lattice_isometry(&block_comp.sub, &d4)?.is_some();

    let t_image_primitive = emb.t_embedding.is_primitive()?;

    // global complement: the 12 stated generators across the three blocks
    let mut rows = Vec::with_capacity(12);
    for block in 0..3 {
        let base = 4 + 8 * block;
        for g in &stated {
            let mut v = vec![Int::zero(); 28];
            for (i, c) in g.iter().enumerate() {
                v[base + i] = c.clone();
            }
            rows.push(v);
        }
    }
    let stated_global = IntMatrix::from_int_rows(&rows);
    let span_matches = stated_global.row_space_hnf() == emb.complement.images.row_space_hnf();
    let stated_gram_global = stated_global
        .mul(emb.ambient.gram())
        .mul(&stated_global.transpose());
    let d4_cubed = direct_sum(&[&d4, &d4, &d4]);
    let complement_gram_is_d4_cubed = span_matches && &stated_gram_global == d4_cubed.gram();
    let complement_root_count = root_count(&emb.complement.sub)?;

    Ok(Ii262Report {
        block_complements_match_stated_generators,
        stated_generators_gram_is_d4,
        block_complement_isometric_to_d4,
        t_image_primitive,
        complement_gram_is_d4_cubed,
        complement_root_count,
    })
}

// --- Vanishing orders along the special hyperplanes ------------------------

#[derive(Clone, Debug)]
pub struct RootDeltaReport {
    /// Minimal positive integer with m * delta in T (+) T-perp.
    pub m: u64,
    /// Generator of (Q delta (+) Q T-perp) cap T, in T coordinates.
    pub nu: Vec<Int>,
    pub nu_norm: Int,
    pub nu_divisibility: Int,
    pub nu_class: VectorTypeReport,
    /// Whether <delta, T-perp> was already saturated in II_{26,2}.
    pub span_was_saturated: bool,
    pub sat_root_count: u64,
    /// Vanishing order along the hyperplane: (|R(Sat)| - |R(T-perp)|) / 2.
    pub vanishing_order: u64,
}

/// Classify a root of II_{26,2} relative to the embedded T: compute the
/// minimal m with m*delta in T (+) T-perp, the primitive vector nu(delta)
/// cut out on the T side, and the root count of the saturation of
/// <delta, T-perp>.
pub fn classify_root_delta(emb: &Ii262Embedding, delta: &[Int]) -> Result<RootDeltaReport> {
    let ii = &emb.ambient;
    if ii.norm(delta) != int(2) {
        return Err(Error::NotARoot("delta must have norm 2".into()));
    }
    // exclude roots of the complement itself
    let comp_rows = emb.complement.images.clone();
    let comp_rational = comp_rows.to_rational();
    let delta_rat: Vec<Rat> = delta.iter().map(|x| Rat::from_integer(x.clone())).collect();
    if let Some(sol) = comp_rational.transpose().solve(&delta_rat) {
        if sol.iter().all(|x| x.is_integer()) {
            return Err(Error::NotARoot(
                "delta is a root of the orthogonal complement".into(),
            ));
        }
    }
    // span <delta, T-perp> must be positive definite
    let mut span_rows = vec![delta.to_vec()];
    span_rows.extend(comp_rows.row_vectors());
    let span = LatticeEmbedding::from_images(ii, IntMatrix::from_int_rows(&span_rows))
        .map_err(|_| Error::NotPositiveDefiniteSpan)?;
    if !span.sub.is_positive_definite() {
        return Err(Error::NotPositiveDefiniteSpan);
    }
    // m and the T-part
    let mut big_rows = emb.t_embedding.images.row_vectors();
    big_rows.extend(emb.complement.images.row_vectors());
    let big = IntMatrix::from_int_rows(&big_rows).to_rational();
    let sol = big
        .transpose()
        .solve(&delta_rat)
        .ok_or_else(|| Error::NotARoot("delta outside T (+) T-perp rationally".into()))?;
    let mut m_val = Int::one();
    for x in &sol {
        m_val = m_val.lcm(x.denom());
    }
    let m = u64::try_from(&m_val).expect("small m");
    assert!(
        [1u64, 2, 4].contains(&m),
        "m = {m} outside the proved range"
    );
    let v_t: Vec<Int> = sol[..16]
        .iter()
        .map(|x| (x * Rat::from_integer(m_val.clone())).to_integer())
        .collect();
    let mut content = Int::zero();
    for x in &v_t {
        content = content.gcd(x);
    }
    if content.is_zero() {
        return Err(Error::NotARoot("delta has no T component".into()));
    }
    let nu: Vec<Int> = v_t.iter().map(|x| x / &content).collect();
    let ctx = TContext::new()?;
    let nu_class = classify_vector(&ctx, &nu)?;

    let sat = span.saturation()?;
    let span_was_saturated = sat.images.row_space_hnf() == span.images.row_space_hnf();
    let sat_root_count = root_count(&sat.sub)?;
    let perp_root_count = root_count(&emb.complement.sub)?;
    let vanishing_order = (sat_root_count - perp_root_count) / 2;
    Ok(RootDeltaReport {
        m,
        nu_norm: ctx.lattice.norm(&nu),
        nu_divisibility: ctx.lattice.divisibility(&nu)?,
        nu,
        nu_class,
        span_was_saturated,
        sat_root_count,
        vanishing_order,
    })
}

#[derive(Clone, Debug)]
pub struct BorcherdsRelationReport {
    /// 12 + |R(T-perp)|/2.
    pub weight: u64,
    pub nodal: RootDeltaReport,
    pub tangential: RootDeltaReport,
    /// Coefficient of H_0 after halving along the reflective divisor.
    pub star_h0: Rat,
    /// Common coefficient of H_1, ..., H_36.
    pub star_ht: Rat,
    pub ramification_order: u64,
    /// (H_n, H_t) coefficients up to overall scale, normalized to (1, 2).
    pub plus_relation: (Rat, Rat),
}

/// Local monodromy order along the tangential divisor: the two interchanged
/// nodes each contribute a Weyl group of order 2 and the involution swapping
/// them doubles it once more.
pub const TANGENTIAL_RAMIFICATION_ORDER: u64 = 8;

/// Assemble the divisor relation of the quasi-pullback of the weight-12 form
/// on II_{26,2}: the weight, the multiplicities along the two kinds of
/// special hyperplanes (from explicit witnesses), and the descent of the
/// relation to the full orthogonal group side.
pub fn borcherds_relation() -> Result<BorcherdsRelationReport> {
    let emb = embed_t_in_ii262()?;
    let perp_roots = root_count(&emb.complement.sub)?;
    let weight = 12 + perp_roots / 2;

    // nodal witness: e_1 + f_1 of T pushed into II_{26,2}
    let mut v = vec![Int::zero(); 16];
    v[0] = Int::one();
    v[1] = Int::one();
    let delta_nodal = emb.t_embedding.push(&v);
    let nodal = classify_root_delta(&emb, &delta_nodal)?;

    // tangential witness: the first simple root of the first E_8 block
    let mut delta_t = vec![Int::zero(); 28];
    delta_t[4] = Int::one();
    let tangential = classify_root_delta(&emb, &delta_t)?;

    // H_0 is reflective: the quotient map ramifies with order 2 along it
    let star_h0 = Rat::new(Int::from(nodal.vanishing_order), Int::from(2));
    let star_ht = Rat::from_integer(Int::from(tangential.vanishing_order));
    let plus_hn = star_h0.clone();
    let plus_ht = &star_ht / Rat::from_integer(Int::from(TANGENTIAL_RAMIFICATION_ORDER));
    let scale = plus_hn.clone();
    let plus_relation = (&plus_hn / &scale, &plus_ht / &scale);
    Ok(BorcherdsRelationReport {
        weight,
        nodal,
        tangential,
        star_h0,
        star_ht,
        ramification_order: TANGENTIAL_RAMIFICATION_ORDER,
        plus_relation,
    })
}

// --- Remaining arithmetic checks -------------------------------------------

/// The evaluated cusp-form dimension sum and the resulting Picard rank.
pub fn bruinier_sum() -> (Rat, u64) {
    let value = rat(64, 1) + rat(64 * 8, 12) - rat(18, 1) - rat(65, 3) - rat(18, 1) - rat(28, 1);
    (value, 22)
}

#[derive(Clone, Debug)]
pub struct HInftyReport {
    pub candidates: usize,
    pub all_degenerate: bool,
    pub minor_bounds_consistent: bool,
}

/// No positive definite extension of M by a vector x with x.h^2 = 1 and
/// x^2 = 1 exists: every candidate pairing tuple makes the bordered Gram
/// matrix singular. The search bounds x.f_0 in {0,1,2} and x.f_i in {0,1},
/// which is itself forced by positive definiteness of the displayed 3x3
/// minors.
pub fn h_infinity_avoidance() -> HInftyReport {
    let m = build_m();
    let mut candidates = 0;
    let mut all_degenerate = true;
    for c0 in 0i64..=2 {
        for mask in 0u32..64 {
            let bits: Vec<i64> = (0..6).map(|i| i64::from(mask >> i & 1)).collect();
            if 3 * c0 - bits.iter().sum::<i64>() != 1 {
                continue;
            }
            candidates += 1;
            let mut pair = vec![c0];
            pair.extend(bits);
            let bordered = IntMatrix::from_fn(8, 8, |i, j| match (i, j) {
                (7, 7) => Int::one(),
                (7, j) => int(pair[j]),
                (i, 7) => int(pair[i]),
                (i, j) => m.gram().at(i, j).clone(),
            });
            if !bordered.det().is_zero() {
                all_degenerate = false;
            }
        }
    }

    // 3x3 minors <h^2, x, f_i> and <h^2, x, f_0>: positive definite exactly
    // on the claimed pairing ranges
    let minor = |a: i64, b: i64, c: i64, d: i64, e: i64, f: i64| {
        IntMatrix::from_rows(&[vec![a, b, c], vec![b, d, e], vec![c, e, f]])
    };
    let posdef = |m: &IntMatrix| {
        GramLattice::new(vec!["x".into(), "y".into(), "z".into()], m.clone())
            .map(|l| l.is_positive_definite())
            .unwrap_or(false)
    };
    let mut minor_bounds_consistent = true;
    for c in -3i64..=3 {
        let fi = posdef(&minor(3, 1, 1, 1, c, 3));
        if fi != (0..=1).contains(&c) {
            minor_bounds_consistent = false;
        }
        let f0 = posdef(&minor(3, 1, 3, 1, c, 7));
        if f0 != (0..=2).contains(&c) {
            minor_bounds_consistent = false;
        }
    }
    HInftyReport {
        candidates,
        all_degenerate,
        minor_bounds_consistent,
    }
}

#[derive(Clone, Debug)]
pub struct MilnorMatchReport {
    pub rank: usize,
    pub signature: (usize, usize, usize),
    pub even: bool,
    pub two_elementary_of_length_6: bool,
    pub q_isometric_to_v_cubed: bool,
}

/// Invariant matching for the Milnor lattice of the suspended cone
/// singularity: rank, signature, parity, discriminant group and quadratic
/// form all agree with T.
pub fn sigma_o16_invariant_match() -> Result<MilnorMatchReport> {
    let ctx = TContext::new()?;
    let t = &ctx.lattice;
    let v = FiniteQuadraticForm::v_form();
    let vvv = v.direct_sum(&v).direct_sum(&v);
    let witness = ctx.form.isometry_search(&vvv, IsometryMode::Isometry)?;
    let ok = match &witness {
        Some(w) => ctx.form.verify_witness(&vvv, w, IsometryMode::Isometry)?,
        None => false,
    };
    Ok(MilnorMatchReport {
        rank: t.rank(),
        signature: t.signature(),
        even: t.is_even(),
        two_elementary_of_length_6: ctx.group.is_two_elementary() && ctx.group.orders().len() == 6,
        q_isometric_to_v_cubed: ok,
    })
}

// --- Seeded orbit-invariance spot check -------------------------------------

/// Deterministic splitmix64 stream for reproducible spot checks.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

#[derive(Clone, Debug)]
pub struct OrbitInvarianceReport {
    pub seed: u64,
    pub samples: usize,
    pub labels_preserved: bool,
    pub eichler_invariant_preserved: bool,
    pub vhat_fixed_by_nodal_reflections: bool,
}

/// Spot-check that the vector classification is constant along orbits of
/// integral reflections: random reflection words preserve the label and the
/// invariant (v^2, q(vhat)), and words in reflections of nodal vectors fix
/// the discriminant class itself.
pub fn orbit_invariance_check(
    seed: u64,
    samples: usize,
    max_word: usize,
) -> Result<OrbitInvarianceReport> {
    let ctx = TContext::new()?;
    let t = &ctx.lattice;
    let mut rng = SplitMix64::new(seed);

    // pools of integral reflections
    let mut nodal_pool: Vec<IntMatrix> = Vec::new();
    let mut nodal_vectors: Vec<Vec<Int>> = vec![
        unit16(0, 1), // e1 + f1
        unit16(2, 3), // e2 + f2
    ];
    for base in [4usize, 8, 12] {
        for i in 0..4 {
            let mut v = vec![Int::zero(); 16];
            v[base + i] = Int::one();
            nodal_vectors.push(v);
        }
    }
    for v in &nodal_vectors {
        let r = t.reflection(v)?;
        debug_assert!(r.integral);
        nodal_pool.push(r.matrix.to_integer().expect("integral"));
    }
    let mut full_pool = nodal_pool.clone();
    for v in type2_representatives().into_iter().take(9) {
        let r = t.reflection(&v)?;
        debug_assert!(r.integral);
        full_pool.push(r.matrix.to_integer().expect("integral"));
    }

    let starts = [unit16(0, 1), {
        let mut v = vec![Int::zero(); 16];
        v[4] = Int::one();
        v[6] = Int::one();
        v
    }];

    let mut labels_preserved = true;
    let mut eichler_preserved = true;
    let mut vhat_fixed = true;
    for s in 0..samples {
        let start = &starts[s % 2];
        let base = classify_vector(&ctx, start)?;
        let mut v = start.clone();
        let word = 1 + rng.below(max_word);
        for _ in 0..word {
            let g = &full_pool[rng.below(full_pool.len())];
            v = g.mul_vec(&v);
        }
        let moved = classify_vector(&ctx, &v)?;
        if moved.class != base.class {
            labels_preserved = false;
        }
        if moved.norm != base.norm || moved.q_vhat != base.q_vhat {
            eichler_preserved = false;
        }
        // nodal-only words act trivially on A_T
        let mut w = start.clone();
        for _ in 0..word {
            let g = &nodal_pool[rng.below(nodal_pool.len())];
            w = g.mul_vec(&w);
        }
        let fixed = classify_vector(&ctx, &w)?;
        if fixed.vhat != base.vhat {
            vhat_fixed = false;
        }
    }
    Ok(OrbitInvarianceReport {
        seed,
        samples,
        labels_preserved,
        eichler_invariant_preserved: eichler_preserved,
        vhat_fixed_by_nodal_reflections: vhat_fixed,
    })
}

fn unit16(i: usize, j: usize) -> Vec<Int> {
    let mut v = vec![Int::zero(); 16];
    v[i] = Int::one();
    v[j] = Int::one();
    v
}

// --- O(q_T) ------------------------------------------------------------------

/// The quadratic refinement of b_M on the basis {`[F_1]*`, ..., `[F_6]*`}: the
/// displayed matrix read as the Gram matrix of a finite quadratic form, so
/// q vanishes on the basis vectors and has the half-integer cross terms of
/// b_M. Its bilinear form is b_M = -b_T = b_T and its Arf invariant is 1, so
/// it is a copy of q_T carried by A_M.
pub fn qt_on_am() -> Result<FiniteQuadraticForm> {
    FiniteQuadraticForm::new(
        vec![2; 6],
        expected_bilinear_form_m(),
        Some(vec![Rat::zero(); 6]),
    )
}

#[derive(Clone, Debug)]
pub struct WeylE6Report {
    pub full_group_order: u64,
    pub s_beta_closure_order: u64,
    pub qt_on_am_isometric_to_qt: bool,
    pub e6_quotient_isometric_to_qt: bool,
    pub root_classes_are_nonvanishing_locus: bool,
}

/// O(q_T) has order |W(E_6)| = 51840; the induced s*-maps preserve the
/// quadratic refinement carried by A_M and generate all of its orthogonal
/// group; the half-norm form on E_6/2E_6 is isometric to q_T; and the 36
/// classes where q is nonzero are exactly the reductions of the 72 roots of
/// E_6 in opposite pairs.
pub fn verify_weyl_e6() -> Result<WeylE6Report> {
    let ctx = TContext::new()?;
    let full = ctx.form.orthogonal_group(None)?;

    // the quadratic form rides on A_M itself; the induced maps must preserve
    // it on the nose
    let q_am = qt_on_am()?;
    let qt_witness = q_am.isometry_search(&ctx.form, IsometryMode::Isometry)?;
    let qt_on_am_isometric_to_qt = match &qt_witness {
        Some(w) => q_am.verify_witness(&ctx.form, w, IsometryMode::Isometry)?,
        None => false,
    };
    let mats = s_beta_matrices();
    let mut gens = Vec::with_capacity(6);
    for s in &mats {
        let on_am = induced_disc_action(s)?;
        if !q_am.verify_witness(&q_am, &on_am, IsometryMode::Isometry)? {
            return Err(Error::InvalidInput(
                "induced map does not preserve the quadratic refinement".into(),
            ));
        }
        gens.push(on_am);
    }
    let closure = q_am.orthogonal_group(Some(&gens))?;

    let e6q = FiniteQuadraticForm::e6_quotient_form();
    let witness = e6q.isometry_search(&ctx.form, IsometryMode::Isometry)?;
    let e6_ok = match &witness {
        Some(w) => e6q.verify_witness(&ctx.form, w, IsometryMode::Isometry)?,
        None => false,
    };

    // 72 roots of E6 reduce mod 2 to 36 distinct classes, exactly the
    // nonvanishing locus of the quotient form
    let e6 = GramLattice::root_e(6)?;
    let roots = short_vectors(&e6, 2)?;
    let mut classes = std::collections::BTreeSet::new();
    for r in &roots.representatives {
        let mask = r
            .iter()
            .enumerate()
            .fold(0u32, |m, (i, c)| if c.is_odd() { m | 1 << i } else { m });
        classes.insert(mask);
    }
    let locus: std::collections::BTreeSet<u32> = (0u32..64)
        .filter(|&m| {
            let coeffs: Vec<u64> = (0..6).map(|i| u64::from(m >> i & 1)).collect();
            e6q.quadratic_value(&coeffs).expect("q present").is_one()
        })
        .collect();
    let root_classes_ok = roots.count_with_signs == 72 && classes.len() == 36 && classes == locus;

    Ok(WeylE6Report {
        full_group_order: full.order(),
        s_beta_closure_order: closure.order(),
        qt_on_am_isometric_to_qt,
        e6_quotient_isometric_to_qt: e6_ok,
        root_classes_are_nonvanishing_locus: root_classes_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_invariants() {
        let m = build_m();
        assert_eq!(m.det(), int(64));
        assert!(m.is_positive_definite());
        assert!(!m.is_even());
        assert_eq!(m.dual_basis().unwrap(), expected_inverse_gram_m());
        let h2 = h_squared();
        assert_eq!(m.norm(&h2), int(3));
        let f0 = {
            let mut v = vec![Int::zero(); 7];
            v[0] = Int::one();
            v
        };
        assert_eq!(m.inner(&h2, &f0), int(3));
        for i in 1..7 {
            let mut fi = vec![Int::zero(); 7];
            fi[i] = Int::one();
            assert_eq!(m.inner(&h2, &fi), int(1));
        }
    }

    #[test]
    fn m_discriminant_group_and_form() {
        let m = build_m();
        let dg = m.discriminant_group().unwrap();
        assert_eq!(
            dg.orders(),
            &[int(2), int(2), int(2), int(2), int(2), int(2)]
        );
        let f = m_discriminant_form_on_dual_basis().unwrap();
        assert!(!f.has_quadratic());
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(f.bilinear_entry(i, j), &expected_bilinear_form_m()[i][j]);
            }
        }
    }

    #[test]
    fn isotropy_and_cosets() {
        let rep = verify_isotropy_of_am().unwrap();
        assert_eq!(rep.elements_checked, 64);
        assert!(rep.all_isotropic);
        assert!(rep.coset_identities_hold);
    }

    #[test]
    fn h2_perp_is_e6_times_2() {
        let rep = primitive_part_h2().unwrap();
        assert_eq!(rep.det, int(192));
        assert!(rep.even);
        assert!(rep.matches_e6_times_two);
        assert!(rep.equals_full_complement);
        for i in 0..6 {
            assert_eq!(*rep.gram.at(i, i), int(4));
        }
    }

    #[test]
    fn t_invariants() {
        let t = build_t();
        assert_eq!(t.rank(), 16);
        assert_eq!(t.signature(), (14, 2, 0));
        assert!(t.is_even());
        assert_eq!(t.det(), int(64));
    }

    #[test]
    fn nodal_and_tangential_witnesses() {
        let ctx = TContext::new().unwrap();
        let nodal = classify_vector(&ctx, &unit16(0, 1)).unwrap();
        assert_eq!(nodal.class, VectorClass::Nodal);
        assert_eq!(nodal.norm, int(2));
        assert!(nodal.vhat.iter().all(|&c| c == 0));

        let mut a13 = vec![Int::zero(); 16];
        a13[4] = Int::one();
        a13[6] = Int::one();
        let tang = classify_vector(&ctx, &a13).unwrap();
        assert_eq!(tang.class, VectorClass::Tangential);
        assert_eq!(tang.norm, int(4));
        assert_eq!(tang.divisibility, int(2));
        assert!(tang.q_vhat.is_one());

        // imprimitive vector
        let mut twice = vec![Int::zero(); 16];
        twice[0] = int(2);
        let other = classify_vector(&ctx, &twice).unwrap();
        assert_eq!(other.class, VectorClass::Other);
        assert!(!other.primitive);
        assert!(matches!(
            classify_vector(&ctx, &vec![Int::zero(); 16]),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn census_vector_norms() {
        let t = build_t();
        let reps = type2_representatives();
        assert_eq!(reps.len(), 36);
        for v in &reps {
            assert_eq!(t.norm(v), int(4));
            assert_eq!(t.divisibility(v).unwrap(), int(2));
        }
        // the long representative from the 27-family
        let v = &reps[9];
        assert_eq!(v[0], int(2));
        assert_eq!(v[1], int(-2));
    }

    #[test]
    fn bruinier_value() {
        let (value, rank) = bruinier_sum();
        assert!(value.is_integer());
        assert_eq!(value, rat(21, 1));
        assert_eq!(rank, 22);
    }

    #[test]
    fn h_infinity() {
        let rep = h_infinity_avoidance();
        assert_eq!(rep.candidates, 21);
        assert!(rep.all_degenerate);
        assert!(rep.minor_bounds_consistent);
    }

    #[test]
    fn beta_diagram_shape() {
        // the beta vectors form an E6 diagram: chain 2-3-4-5-6 with 1 on 4
        let pic = pic_cubic_surface();
        let betas = beta_vectors();
        for b in &betas {
            assert_eq!(pic.norm(b), int(-2));
        }
        let adjacent = |i: usize, j: usize| !pic.inner(&betas[i], &betas[j]).is_zero();
        assert!(adjacent(0, 3));
        assert!(adjacent(1, 2) && adjacent(2, 3) && adjacent(3, 4) && adjacent(4, 5));
        assert!(!adjacent(0, 1) && !adjacent(0, 2) && !adjacent(0, 4) && !adjacent(0, 5));
    }
}
