//! Finite bilinear and quadratic forms on discriminant groups.
//!
//! A [`FiniteQuadraticForm`] stores the Q/Z-valued bilinear form (and, when
//! the source lattice is even, the Q/2Z-valued quadratic form) on the
//! generators of a finite abelian group. Groups in this crate have at most
//! 2^10 elements, so every check is exhaustive: value distributions, the Arf
//! invariant, isometry search by backtracking and full orthogonal-group
//! enumeration.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{DiscriminantGroup, GramLattice};
use crate::matrix::{rat_floor, Int, Rat};

/// Canonical representative of a rational mod 1 in [0, 1).
pub fn mod1(x: &Rat) -> Rat {
    x - Rat::from_integer(rat_floor(x))
}

/// Canonical representative of a rational mod 2 in [0, 2).
pub fn mod2(x: &Rat) -> Rat {
    let half = x / Rat::from_integer(Int::from(2));
    x - Rat::from_integer(rat_floor(&half) * Int::from(2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    orders: Vec<u64>,
    /// b(g_i, g_j) mod 1, canonical in [0, 1).
    bilinear: Vec<Vec<Rat>>,
    /// q(g_i) mod 2, canonical in [0, 2); present iff the source lattice is
    /// even.
    quadratic: Option<Vec<Rat>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsometryMode {
    Isometry,
    AntiIsometry,
}

impl FiniteQuadraticForm {
    pub fn new(
        orders: Vec<u64>,
        bilinear: Vec<Vec<Rat>>,
        quadratic: Option<Vec<Rat>>,
    ) -> Result<Self> {
        let k = orders.len();
        if bilinear.len() != k || bilinear.iter().any(|r| r.len() != k) {
            return Err(Error::DimensionMismatch("bilinear table".into()));
        }
        if let Some(q) = &quadratic {
            if q.len() != k {
                return Err(Error::DimensionMismatch("quadratic table".into()));
            }
        }
        let bilinear = bilinear
            .iter()
            .map(|row| row.iter().map(mod1).collect())
            .collect();
        let quadratic = quadratic.map(|q| q.iter().map(mod2).collect());
        Ok(FiniteQuadraticForm {
            orders,
            bilinear,
            quadratic,
        })
    }

    /// Discriminant form of a nondegenerate lattice: b(x,y) = x*y mod 1 and,
    /// for even lattices, q(x) = x*x mod 2 on dual representatives.
    pub fn of_lattice(l: &GramLattice) -> Result<Self> {
        let group = l.discriminant_group()?;
        Self::on_generators(l, &group)
    }

    pub fn on_generators(l: &GramLattice, group: &DiscriminantGroup) -> Result<Self> {
        let gens = group.generators();
        let orders: Vec<u64> = group
            .orders()
            .iter()
            .map(|d| u64::try_from(d).expect("small order"))
            .collect();
        Self::from_dual_vectors(l, gens, orders)
    }

    /// Build the form from explicit dual-lattice representatives.
    pub fn from_dual_vectors(l: &GramLattice, gens: &[Vec<Rat>], orders: Vec<u64>) -> Result<Self> {
        for g in gens {
            if !l.in_dual(g) {
                return Err(Error::InvalidInput(
                    "generator is not in the dual lattice".into(),
                ));
            }
        }
        let g = l.gram().to_rational();
        let k = gens.len();
        let mut bilinear = vec![vec![Rat::zero(); k]; k];
        for i in 0..k {
            let gi = g.mul_vec(&gens[i]);
            for j in 0..k {
                let val: Rat = gi.iter().zip(&gens[j]).map(|(a, b)| a * b).sum();
                bilinear[i][j] = mod1(&val);
            }
        }
        let quadratic = if l.is_even() {
            Some(
                (0..k)
                    .map(|i| {
                        let gi = g.mul_vec(&gens[i]);
                        let val: Rat = gi.iter().zip(&gens[i]).map(|(a, b)| a * b).sum();
                        mod2(&val)
                    })
                    .collect(),
            )
        } else {
            None
        };
        Self::new(orders, bilinear, quadratic)
    }

    /// The form u = u_+^(2)(2): two generators with q = 0 and b = 1/2.
    pub fn u_form() -> Self {
        let half = Rat::new(Int::one(), Int::from(2));
        FiniteQuadraticForm {
            orders: vec![2, 2],
            bilinear: vec![vec![Rat::zero(), half.clone()], vec![half, Rat::zero()]],
            quadratic: Some(vec![Rat::zero(), Rat::zero()]),
        }
    }

    /// The form v = v_+^(2)(2), the discriminant quadratic form of D_4: two
    /// generators with q = 1 and b = 1/2.
    pub fn v_form() -> Self {
        let half = Rat::new(Int::one(), Int::from(2));
        FiniteQuadraticForm {
            orders: vec![2, 2],
            bilinear: vec![vec![Rat::zero(), half.clone()], vec![half, Rat::zero()]],
            quadratic: Some(vec![Rat::one(), Rat::one()]),
        }
    }

    /// (E_6/2E_6, q) with q the half-norm mod 2 of the E_6 form.
    pub fn e6_quotient_form() -> Self {
        let e6 = GramLattice::root_e(6).expect("rank 6 is valid");
        let g = e6.gram();
        let k = 6;
        let two = Rat::from_integer(Int::from(2));
        let bilinear = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| mod1(&(Rat::from_integer(g.at(i, j).clone()) / &two)))
                    .collect()
            })
            .collect();
        let quadratic = Some(
            (0..k)
                .map(|i| mod2(&(Rat::from_integer(g.at(i, i).clone()) / &two)))
                .collect(),
        );
        FiniteQuadraticForm {
            orders: vec![2; 6],
            bilinear,
            quadratic,
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let k1 = self.orders.len();
        let k2 = other.orders.len();
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        let mut bilinear = vec![vec![Rat::zero(); k1 + k2]; k1 + k2];
        for i in 0..k1 {
            for j in 0..k1 {
                bilinear[i][j] = self.bilinear[i][j].clone();
            }
        }
        for i in 0..k2 {
            for j in 0..k2 {
                bilinear[k1 + i][k1 + j] = other.bilinear[i][j].clone();
            }
        }
        let quadratic = match (&self.quadratic, &other.quadratic) {
            (Some(a), Some(b)) => {
                let mut q = a.clone();
                q.extend_from_slice(b);
                Some(q)
            }
            _ => None,
        };
        FiniteQuadraticForm {
            orders,
            bilinear,
            quadratic,
        }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn num_generators(&self) -> usize {
        self.orders.len()
    }

    pub fn group_order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn has_quadratic(&self) -> bool {
        self.quadratic.is_some()
    }

    pub fn is_two_elementary(&self) -> bool {
        self.orders.iter().all(|&d| d == 2)
    }

    fn require_two_elementary(&self) -> Result<usize> {
        if !self.is_two_elementary() {
            return Err(Error::NotTwoElementary);
        }
        Ok(self.orders.len())
    }

    pub fn bilinear_entry(&self, i: usize, j: usize) -> &Rat {
        &self.bilinear[i][j]
    }

    /// b on arbitrary coefficient tuples, mod 1.
    pub fn bilinear_value(&self, x: &[u64], y: &[u64]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.orders.len() {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.orders.len() {
                if y[j] == 0 {
                    continue;
                }
                acc += Rat::from_integer(Int::from(x[i] * y[j])) * &self.bilinear[i][j];
            }
        }
        mod1(&acc)
    }

    /// q on arbitrary coefficient tuples, mod 2; requires the quadratic part.
    pub fn quadratic_value(&self, x: &[u64]) -> Result<Rat> {
        let q = self.quadratic.as_ref().ok_or(Error::NonIntegerValues)?;
        let mut acc = Rat::zero();
        for i in 0..self.orders.len() {
            if x[i] == 0 {
                continue;
            }
            acc += Rat::from_integer(Int::from(x[i] * x[i])) * &q[i];
            for j in i + 1..self.orders.len() {
                if x[j] == 0 {
                    continue;
                }
                acc += Rat::from_integer(Int::from(2 * x[i] * x[j])) * &self.bilinear[i][j];
            }
        }
        Ok(mod2(&acc))
    }

    /// All coefficient tuples of the group, lexicographically.
    pub fn all_elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &d in &self.orders {
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

    /// Exact histogram of q-values (or of b(x,x)-values when no quadratic
    /// part is present) over all group elements.
    pub fn value_distribution(&self) -> BTreeMap<Rat, u64> {
        let mut hist = BTreeMap::new();
        for x in self.all_elements() {
            let v = match &self.quadratic {
                Some(_) => self.quadratic_value(&x).expect("quadratic part present"),
                None => self.bilinear_value(&x, &x),
            };
            *hist.entry(v).or_insert(0) += 1;
        }
        hist
    }

    /// Arf invariant of an integer-valued quadratic form on a 2-elementary
    /// group, by value counting: 1 iff q is 1 on more elements than it is 0.
    pub fn arf_invariant(&self) -> Result<u8> {
        self.require_two_elementary()?;
        if self.quadratic.is_none() {
            return Err(Error::NonIntegerValues);
        }
        let mut zeros = 0u64;
        let mut ones = 0u64;
        for x in self.all_elements() {
            let v = self.quadratic_value(&x)?;
            if v.is_zero() {
                zeros += 1;
            } else if v.is_one() {
                ones += 1;
            } else {
                return Err(Error::NonIntegerValues);
            }
        }
        Ok(u8::from(ones > zeros))
    }

    // -- 2-elementary fast tables ------------------------------------------

    /// q values indexed by bitmask; requires 2-elementary.
    fn mask_q_table(&self) -> Result<Vec<Rat>> {
        let k = self.require_two_elementary()?;
        let mut table = Vec::with_capacity(1 << k);
        for mask in 0u32..(1 << k) {
            let coeffs = mask_to_coeffs(mask, k);
            let v = match &self.quadratic {
                Some(_) => self.quadratic_value(&coeffs)?,
                None => self.bilinear_value(&coeffs, &coeffs),
            };
            table.push(v);
        }
        Ok(table)
    }

    fn mask_b_table(&self) -> Result<Vec<Vec<Rat>>> {
        let k = self.require_two_elementary()?;
        let mut table = vec![vec![Rat::zero(); 1 << k]; 1 << k];
        for m1 in 0u32..(1 << k) {
            let c1 = mask_to_coeffs(m1, k);
            for m2 in 0u32..(1 << k) {
                let c2 = mask_to_coeffs(m2, k);
                table[m1 as usize][m2 as usize] = self.bilinear_value(&c1, &c2);
            }
        }
        Ok(table)
    }

    /// Backtracking search for a group isomorphism matching the forms. In
    /// `AntiIsometry` mode the image must negate the bilinear form (and the
    /// quadratic form when both sides carry one). Both forms must live on
    /// 2-elementary groups of the same order; absence of a witness is a
    /// normal result, not an error.
    pub fn isometry_search(&self, other: &Self, mode: IsometryMode) -> Result<Option<BitMatrix>> {
        let k = self.require_two_elementary()?;
        let k2 = other.require_two_elementary()?;
        if k != k2 {
            return Ok(None);
        }
        let match_q = self.quadratic.is_some() && other.quadratic.is_some();
        let q1 = self.mask_q_table()?;
        let q2 = other.mask_q_table()?;
        let b1 = self.mask_b_table()?;
        let b2 = other.mask_b_table()?;
        let negate = mode == IsometryMode::AntiIsometry;
        let target_q = |v: &Rat| if negate { mod2(&-v) } else { v.clone() };
        let target_b = |v: &Rat| if negate { mod1(&-v) } else { v.clone() };

        let mut images: Vec<u32> = Vec::with_capacity(k);
        #[allow(clippy::too_many_arguments)]
        fn rec(
            level: usize,
            k: usize,
            images: &mut Vec<u32>,
            match_q: bool,
            q1: &[Rat],
            q2: &[Rat],
            b1: &[Vec<Rat>],
            b2: &[Vec<Rat>],
            target_q: &dyn Fn(&Rat) -> Rat,
            target_b: &dyn Fn(&Rat) -> Rat,
        ) -> bool {
            if level == k {
                return true;
            }
            let g = 1u32 << level;
            'candidates: for cand in 1u32..(1 << k) {
                if match_q && q2[cand as usize] != target_q(&q1[g as usize]) {
                    continue;
                }
                if !match_q
                    && b2[cand as usize][cand as usize] != target_b(&b1[g as usize][g as usize])
                {
                    continue;
                }
                for (i, &img) in images.iter().enumerate() {
                    let want = target_b(&b1[g as usize][1 << i]);
                    if b2[cand as usize][img as usize] != want {
                        continue 'candidates;
                    }
                }
                if !f2_independent(images, cand) {
                    continue;
                }
                images.push(cand);
                if rec(
                    level + 1,
                    k,
                    images,
                    match_q,
                    q1,
                    q2,
                    b1,
                    b2,
                    target_q,
                    target_b,
                ) {
                    return true;
                }
                images.pop();
            }
            false
        }
        let found = rec(
            0,
            k,
            &mut images,
            match_q,
            &q1,
            &q2,
            &b1,
            &b2,
            &target_q,
            &target_b,
        );
        Ok(found.then_some(BitMatrix { k, cols: images }))
    }

    /// Exhastive check that a bit-matrix witness really matches the forms.
    pub fn verify_witness(
        &self,
        other: &Self,
        map: &BitMatrix,
        mode: IsometryMode,
    ) -> Result<bool> {
        let k = self.require_two_elementary()?;
        other.require_two_elementary()?;
        if map.k != k || !map.is_invertible() {
            return Ok(false);
        }
        let b1 = self.mask_b_table()?;
        let b2 = other.mask_b_table()?;
        let negate = mode == IsometryMode::AntiIsometry;
        for x in 0u32..(1 << k) {
            for y in 0u32..(1 << k) {
                let want = if negate {
                    mod1(&-&b1[x as usize][y as usize])
                } else {
                    b1[x as usize][y as usize].clone()
                };
                if b2[map.apply(x) as usize][map.apply(y) as usize] != want {
                    return Ok(false);
                }
            }
        }
        if self.quadratic.is_some() && other.quadratic.is_some() {
            let q1 = self.mask_q_table()?;
            let q2 = other.mask_q_table()?;
            for x in 0u32..(1 << k) {
                let want = if negate {
                    mod2(&-&q1[x as usize])
                } else {
                    q1[x as usize].clone()
                };
                if q2[map.apply(x) as usize] != want {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Orthogonal group of the form. With `generators` the BFS closure of
    /// the generated subgroup is returned; without, every q-preserving
    /// automorphism is enumerated by backtracking. Bounded to groups of
    /// order at most 2^10.
    pub fn orthogonal_group(&self, generators: Option<&[BitMatrix]>) -> Result<OrthogonalGroup> {
        let k = self.require_two_elementary()?;
        if k > 10 {
            return Err(Error::EnumerationBoundExceeded);
        }
        match generators {
            Some(gens) => {
                for g in gens {
                    if g.k != k || !g.is_invertible() {
                        return Err(Error::InvalidInput(
                            "generator is not an invertible map of the group".into(),
                        ));
                    }
                }
                let mut seen: HashSet<Vec<u32>> = HashSet::new();
                let identity = BitMatrix::identity(k);
                seen.insert(identity.cols.clone());
                let mut frontier = vec![identity];
                let mut elements = frontier.clone();
                while let Some(m) = frontier.pop() {
                    for g in gens {
                        let next = g.compose(&m);
                        if seen.insert(next.cols.clone()) {
                            elements.push(next.clone());
                            frontier.push(next);
                        }
                    }
                }
                elements.sort_by(|a, b| a.cols.cmp(&b.cols));
                Ok(OrthogonalGroup { k, elements })
            }
            None => {
                let q = self.mask_q_table()?;
                let b = self.mask_b_table()?;
                let match_q = self.quadratic.is_some();
                let mut elements = Vec::new();
                let mut images: Vec<u32> = Vec::new();
                fn rec(
                    level: usize,
                    k: usize,
                    images: &mut Vec<u32>,
                    match_q: bool,
                    q: &[Rat],
                    b: &[Vec<Rat>],
                    out: &mut Vec<BitMatrix>,
                ) {
                    if level == k {
                        out.push(BitMatrix {
                            k,
                            cols: images.clone(),
                        });
                        return;
                    }
                    let g = 1u32 << level;
                    'candidates: for cand in 1u32..(1 << k) {
                        if match_q && q[cand as usize] != q[g as usize] {
                            continue;
                        }
                        if !match_q && b[cand as usize][cand as usize] != b[g as usize][g as usize]
                        {
                            continue;
                        }
                        for (i, &img) in images.iter().enumerate() {
                            if b[cand as usize][img as usize] != b[g as usize][1 << i] {
                                continue 'candidates;
                            }
                        }
                        if !f2_independent(images, cand) {
                            continue;
                        }
                        images.push(cand);
                        rec(level + 1, k, images, match_q, q, b, out);
                        images.pop();
                    }
                }
                rec(0, k, &mut images, match_q, &q, &b, &mut elements);
                elements.sort_by(|a, b| a.cols.cmp(&b.cols));
                Ok(OrthogonalGroup { k, elements })
            }
        }
    }

    /// JSON document {"orders": [...], "bilinear": [["p/q", ...]],
    /// "quadratic": [...] | null} with exact rationals as strings; the
    /// quadratic entry lists the values on the generators.
    pub fn to_json_value(&self) -> serde_json::Value {
        let k = self.num_generators();
        let bilinear: Vec<Vec<String>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| rational_string(&self.bilinear[i][j]))
                    .collect()
            })
            .collect();
        let quadratic: Option<Vec<String>> = self
            .quadratic
            .as_ref()
            .map(|q| q.iter().map(rational_string).collect());
        serde_json::json!({
            "orders": self.orders,
            "bilinear": bilinear,
            "quadratic": quadratic,
        })
    }
}

/// Exact rational as "p/q", or just "p" for integers.
pub fn rational_string(x: &Rat) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn mask_to_coeffs(mask: u32, k: usize) -> Vec<u64> {
    (0..k).map(|i| u64::from(mask >> i & 1)).collect()
}

/// Reduce `w` against an F2 basis built from `vecs`; nonzero remainder means
/// independent.
fn f2_independent(vecs: &[u32], w: u32) -> bool {
    let mut basis: Vec<u32> = Vec::with_capacity(vecs.len());
    for &v in vecs {
        let mut cur = v;
        for &b in &basis {
            cur = cur.min(cur ^ b);
        }
        if cur != 0 {
            basis.push(cur);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    let mut cur = w;
    for &b in &basis {
        cur = cur.min(cur ^ b);
    }
    cur != 0
}

/// An F2-linear map of a 2-elementary group, columns = images of the
/// generators as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    pub k: usize,
    pub cols: Vec<u32>,
}

impl BitMatrix {
    pub fn identity(k: usize) -> Self {
        BitMatrix {
            k,
            cols: (0..k).map(|i| 1 << i).collect(),
        }
    }

    pub fn from_cols(k: usize, cols: Vec<u32>) -> Self {
        assert_eq!(cols.len(), k);
        BitMatrix { k, cols }
    }

    /// Rows of 0/1 entries, row-major; columns remain the generator images.
    pub fn from_01_rows(rows: &[Vec<u8>]) -> Self {
        let k = rows.len();
        assert!(rows.iter().all(|r| r.len() == k));
        let cols = (0..k)
            .map(|j| {
                let mut m = 0u32;
                for (i, row) in rows.iter().enumerate() {
                    if row[j] & 1 == 1 {
                        m |= 1 << i;
                    }
                }
                m
            })
            .collect();
        BitMatrix { k, cols }
    }

    pub fn apply(&self, x: u32) -> u32 {
        let mut out = 0;
        for (i, c) in self.cols.iter().enumerate() {
            if x >> i & 1 == 1 {
                out ^= c;
            }
        }
        out
    }

    /// self after other: (self . other)(x) = self(other(x)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k);
        BitMatrix {
            k: self.k,
            cols: other.cols.iter().map(|&c| self.apply(c)).collect(),
        }
    }

    pub fn is_invertible(&self) -> bool {
        let mut basis: Vec<u32> = Vec::new();
        for &v in &self.cols {
            let mut cur = v;
            for &b in &basis {
                cur = cur.min(cur ^ b);
            }
            if cur == 0 {
                return false;
            }
            basis.push(cur);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
        true
    }
}

#[derive(Clone, Debug)]
pub struct OrthogonalGroup {
    k: usize,
    elements: Vec<BitMatrix>,
}

impl OrthogonalGroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[BitMatrix] {
        &self.elements
    }

    pub fn orbit(&self, x: u32) -> BTreeSet<u32> {
        self.elements.iter().map(|m| m.apply(x)).collect()
    }

    pub fn contains(&self, m: &BitMatrix) -> bool {
        assert_eq!(m.k, self.k);
        self.elements
            .binary_search_by(|e| e.cols.cmp(&m.cols))
            .is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::direct_sum;
    use crate::matrix::rat;

    #[test]
    fn d4_discriminant_form_is_v() {
        let d4 = GramLattice::root_d(4).unwrap();
        let f = FiniteQuadraticForm::of_lattice(&d4).unwrap();
        assert_eq!(f.orders(), &[2, 2]);
        let dist = f.value_distribution();
        let v = FiniteQuadraticForm::v_form();
        assert_eq!(dist, v.value_distribution());
        let w = f.isometry_search(&v, IsometryMode::Isometry).unwrap();
        assert!(w.is_some());
        assert!(f
            .verify_witness(&v, &w.unwrap(), IsometryMode::Isometry)
            .unwrap());
    }

    #[test]
    fn unimodular_form_is_trivial() {
        let e8 = GramLattice::root_e(8).unwrap();
        let f = FiniteQuadraticForm::of_lattice(&e8).unwrap();
        assert_eq!(f.num_generators(), 0);
        assert_eq!(f.value_distribution().get(&Rat::zero()), Some(&1));
    }

    #[test]
    fn arf_invariants_of_u_and_v() {
        let u = FiniteQuadraticForm::u_form();
        let v = FiniteQuadraticForm::v_form();
        assert_eq!(u.arf_invariant().unwrap(), 0);
        assert_eq!(v.arf_invariant().unwrap(), 1);
        let vvv = v.direct_sum(&v).direct_sum(&v);
        assert_eq!(vvv.arf_invariant().unwrap(), 1);
        let mut dist = BTreeMap::new();
        dist.insert(Rat::zero(), 28);
        dist.insert(Rat::one(), 36);
        assert_eq!(vvv.value_distribution(), dist);
        // trivial one-generator zero form
        let z = FiniteQuadraticForm::new(vec![2], vec![vec![rat(0, 1)]], Some(vec![rat(0, 1)]))
            .unwrap();
        assert_eq!(z.arf_invariant().unwrap(), 0);
    }

    #[test]
    fn u_and_v_are_not_isometric() {
        let u = FiniteQuadraticForm::u_form();
        let v = FiniteQuadraticForm::v_form();
        assert!(v
            .isometry_search(&u, IsometryMode::Isometry)
            .unwrap()
            .is_none());
    }

    #[test]
    fn isometry_search_finds_identity_on_self() {
        let v = FiniteQuadraticForm::v_form();
        let w = v
            .isometry_search(&v, IsometryMode::Isometry)
            .unwrap()
            .unwrap();
        assert!(v.verify_witness(&v, &w, IsometryMode::Isometry).unwrap());
    }

    #[test]
    fn t_form_distribution_and_witness() {
        let u = GramLattice::hyperbolic_plane();
        let d4 = GramLattice::root_d(4).unwrap();
        let t = direct_sum(&[&u, &u, &d4, &d4, &d4]);
        let f = FiniteQuadraticForm::of_lattice(&t).unwrap();
        assert!(f.is_two_elementary());
        assert_eq!(f.num_generators(), 6);
        let dist = f.value_distribution();
        assert_eq!(dist.get(&Rat::zero()), Some(&28));
        assert_eq!(dist.get(&Rat::one()), Some(&36));
        assert_eq!(f.arf_invariant().unwrap(), 1);
        let v = FiniteQuadraticForm::v_form();
        let vvv = v.direct_sum(&v).direct_sum(&v);
        let w = f.isometry_search(&vvv, IsometryMode::Isometry).unwrap();
        assert!(w.is_some());
        assert!(f
            .verify_witness(&vvv, &w.unwrap(), IsometryMode::Isometry)
            .unwrap());
    }

    #[test]
    fn e6_quotient_form_matches_t_form() {
        let q = FiniteQuadraticForm::e6_quotient_form();
        let dist = q.value_distribution();
        assert_eq!(dist.get(&Rat::zero()), Some(&28));
        assert_eq!(dist.get(&Rat::one()), Some(&36));
        assert!(q.quadratic_value(&[0; 6]).unwrap().is_zero());
    }

    #[test]
    fn orthogonal_group_of_v_form() {
        let v = FiniteQuadraticForm::v_form();
        // q = 1 on all three nonzero elements: full symmetric group S3
        let g = v.orthogonal_group(None).unwrap();
        assert_eq!(g.order(), 6);
        for m in g.elements() {
            assert!(v.verify_witness(&v, m, IsometryMode::Isometry).unwrap());
        }
        let trivial = FiniteQuadraticForm::new(vec![], vec![], Some(vec![])).unwrap();
        assert_eq!(trivial.orthogonal_group(None).unwrap().order(), 1);
    }

    #[test]
    fn rejects_non_two_elementary() {
        let a2 = GramLattice::root_a(2).unwrap();
        let f = FiniteQuadraticForm::of_lattice(&a2).unwrap();
        assert_eq!(f.orders(), &[3]);
        assert!(matches!(f.arf_invariant(), Err(Error::NotTwoElementary)));
    }
}
