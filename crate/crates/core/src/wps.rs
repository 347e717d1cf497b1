//! Weighted projective hypersurfaces of K3 type.
//!
//! For a Fermat hypersurface the Jacobian ideal is monomial, so the graded
//! dimensions of the Jacobian ring -- and with them the primitive Hodge
//! numbers -- reduce to counting bounded exponent tuples with a prescribed
//! weighted degree. That plus an exact unit-fraction partition search is
//! enough to classify all quasi-K3 Fermat fourfolds.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedHypersurface {
    pub weights: Vec<u64>,
    pub degree: u64,
}

impl WeightedHypersurface {
    pub fn new(weights: Vec<u64>, degree: u64) -> Result<Self> {
        if weights.is_empty() || weights.contains(&0) || degree == 0 {
            return Err(Error::InvalidParams(
                "weights and degree must be positive".into(),
            ));
        }
        Ok(WeightedHypersurface { weights, degree })
    }

    /// Sum of the weights.
    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Complex dimension of a hypersurface: number of weights minus two.
    pub fn dimension(&self) -> usize {
        self.weights.len() - 2
    }

    /// Well-formed: omitting any one weight leaves a coprime tuple.
    pub fn is_well_formed(&self) -> bool {
        (0..self.weights.len()).all(|skip| {
            let mut g = 0u64;
            for (i, &w) in self.weights.iter().enumerate() {
                if i != skip {
                    g = g.gcd(&w);
                }
            }
            g == 1
        })
    }

    /// A Fermat member exists iff every weight divides the degree with
    /// exponent at least 2.
    pub fn fermat_exists(&self) -> bool {
        self.weights
            .iter()
            .all(|&w| self.degree.is_multiple_of(w) && self.degree / w >= 2)
    }

    /// Middle cohomology of K3 type by weight bookkeeping:
    /// dim/2 * degree = sum of weights.
    pub fn is_quasi_k3(&self) -> bool {
        (self.dimension() as u64) * self.degree == 2 * self.weight_sum()
    }

    /// Fermat exponents n_j = degree / w_j.
    pub fn fermat_exponents(&self) -> Result<Vec<u64>> {
        if !self.fermat_exists() {
            return Err(Error::NoFermatMember(format!(
                "degree {} over weights {:?}",
                self.degree, self.weights
            )));
        }
        Ok(self.weights.iter().map(|&w| self.degree / w).collect())
    }

    /// Primitive Hodge numbers h^{m-1-j, j}_prim for j = 0..m-1 of the
    /// Fermat member, by counting monomials of the Jacobian ring: exponent
    /// tuples with e_i <= n_i - 2 and weighted degree (j+1) d - s.
    pub fn fermat_hodge_numbers(&self) -> Result<Vec<u64>> {
        let exponents = self.fermat_exponents()?;
        let caps: Vec<u64> = exponents.iter().map(|&n| n - 2).collect();
        let m = self.weights.len() - 1;
        let s = self.weight_sum();
        let d = self.degree;
        let mut out = Vec::with_capacity(m);
        for j in 0..m {
            let target = ((j as u64) + 1) * d;
            if target < s {
                out.push(0);
                continue;
            }
            out.push(count_weighted_tuples(&self.weights, &caps, target - s));
        }
        Ok(out)
    }

    /// Level-2 middle cohomology with one-dimensional extreme piece, read
    /// off the Fermat Hodge numbers: h^{n+1,n-1} = 1 and everything above
    /// level 2 vanishes.
    pub fn is_numerical_k3_fermat(&self) -> Result<bool> {
        let dim = self.dimension();
        if !dim.is_multiple_of(2) {
            return Err(Error::OddDimension);
        }
        let n = dim / 2;
        let h = self.fermat_hodge_numbers()?;
        Ok(h[n - 1] == 1 && h[..n - 1].iter().all(|&x| x == 0))
    }
}

/// Number of tuples 0 <= e_i <= caps[i] with sum of w_i e_i = target, by
/// dynamic programming over the weights.
fn count_weighted_tuples(weights: &[u64], caps: &[u64], target: u64) -> u64 {
    let t = target as usize;
    let mut dp = vec![0u64; t + 1];
    dp[0] = 1;
    for (&w, &cap) in weights.iter().zip(caps) {
        let mut next = vec![0u64; t + 1];
        for base in 0..=t {
            if dp[base] == 0 {
                continue;
            }
            let mut e = 0u64;
            loop {
                let v = base + (w * e) as usize;
                if v > t {
                    break;
                }
                next[v] += dp[base];
                if e == cap {
                    break;
                }
                e += 1;
            }
        }
        dp = next;
    }
    dp[t]
}

/// All nondecreasing tuples of `parts` integer denominators >= 2 with
/// 1/n_1 + ... + 1/n_k = target, by exact recursive search with the
/// standard bounds.
pub fn unit_fraction_partitions(target: &Rat, parts: u32) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(start: u64, parts: u32, rem: &Rat, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 0 {
            if rem.is_zero() {
                out.push(acc.clone());
            }
            return;
        }
        if !rem.is_positive() {
            return;
        }
        // 1/n <= rem  and  parts/n >= rem
        let lo_bound = (rem.denom().div_ceil(rem.numer())).max(Int::from(start));
        let mut n = lo_bound.max(Int::from(2u64));
        loop {
            let frac = Rat::new(Int::one(), n.clone());
            if &frac * Rat::from_integer(Int::from(parts)) < *rem {
                break;
            }
            let n_u = u64::try_from(&n).expect("denominator fits u64");
            acc.push(n_u);
            rec(n_u, parts - 1, &(rem - frac), acc, out);
            acc.pop();
            n += 1;
        }
    }
    if target.is_positive() && parts > 0 {
        rec(2, parts, target, &mut acc, &mut out);
    }
    out.sort();
    out
}

/// One classified family: the well-formed weighted space, the degree, the
/// Fermat exponents it came from and the primitive Hodge numbers of the
/// Fermat member.
#[derive(Clone, Debug, Serialize)]
pub struct ClassifiedFamily {
    pub case: String,
    pub weights: Vec<u64>,
    pub degree: u64,
    pub exponents: Vec<u64>,
    pub hodge: Vec<u64>,
    pub h22_prim: u64,
}

/// The 17 rows of the fourfold classification: (case, weights, degree,
/// h^{2,2}_prim).
pub const FOURFOLD_TABLE: [(&str, [u64; 6], u64, u64); 17] = [
    ("N1", [1, 1, 1, 1, 1, 1], 3, 20),
    ("N2", [1, 2, 2, 2, 2, 3], 6, 14),
    ("N3", [3, 3, 4, 4, 4, 6], 12, 2),
    ("N4", [1, 1, 1, 1, 2, 2], 4, 19),
    ("N5", [1, 1, 1, 3, 3, 3], 6, 19),
    ("N6", [1, 1, 4, 6, 6, 6], 12, 18),
    ("N7", [1, 1, 2, 4, 4, 4], 8, 17),
    ("N8", [1, 1, 2, 2, 3, 3], 6, 16),
    ("N9", [1, 2, 2, 5, 5, 5], 10, 14),
    ("N10", [1, 2, 6, 9, 9, 9], 18, 14),
    ("N11", [1, 2, 3, 6, 6, 6], 12, 13),
    ("N12", [1, 3, 8, 12, 12, 12], 24, 12),
    ("N13", [1, 3, 4, 4, 6, 6], 12, 10),
    ("N14", [1, 4, 5, 10, 10, 10], 20, 10),
    ("N15", [1, 6, 14, 21, 21, 21], 42, 10),
    ("N16", [2, 3, 3, 4, 6, 6], 12, 8),
    ("N17", [2, 3, 10, 15, 15, 15], 30, 8),
];

/// Iteratively apply the standard well-forming reductions: divide out a
/// common factor of all weights, and a prime dividing the degree and all
/// weights but one.
pub fn well_form_reduce(mut weights: Vec<u64>, mut degree: u64) -> (Vec<u64>, u64) {
    loop {
        let g = weights.iter().fold(0u64, |a, &b| a.gcd(&b));
        if g > 1 && degree.is_multiple_of(g) {
            for w in weights.iter_mut() {
                *w /= g;
            }
            degree /= g;
            continue;
        }
        let mut changed = false;
        'outer: for skip in 0..weights.len() {
            let mut g = 0u64;
            for (i, &w) in weights.iter().enumerate() {
                if i != skip {
                    g = g.gcd(&w);
                }
            }
            for p in small_prime_divisors(g) {
                if degree.is_multiple_of(p) {
                    for (i, w) in weights.iter_mut().enumerate() {
                        if i != skip {
                            *w /= p;
                        }
                    }
                    degree /= p;
                    changed = true;
                    break 'outer;
                }
            }
        }
        if !changed {
            break;
        }
    }
    (weights, degree)
}

fn small_prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Classify the quasi-K3 Fermat fourfolds: enumerate all exponent multisets
/// (n_0, ..., n_5) with sum of reciprocals 2, map each to its well-formed
/// weighted space of degree lcm(n_j), dedupe, and compute Hodge numbers.
/// Exactly the 17 families of [`FOURFOLD_TABLE`] come out.
pub fn classify_quasi_k3_fermat_fourfolds() -> Result<Vec<ClassifiedFamily>> {
    let two = Rat::from_integer(Int::from(2));
    let multisets = unit_fraction_partitions(&two, 6);
    let mut families: Vec<(Vec<u64>, u64, Vec<u64>)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for ns in &multisets {
        let d = ns.iter().fold(1u64, |a, &b| a.lcm(&b));
        let mut weights: Vec<u64> = ns.iter().map(|&n| d / n).collect();
        weights.sort_unstable();
        let (weights, d) = well_form_reduce(weights, d);
        if seen.insert((weights.clone(), d)) {
            families.push((weights, d, ns.clone()));
        }
    }
    families.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    let mut out = Vec::with_capacity(families.len());
    for (weights, degree, exponents) in families {
        let w = WeightedHypersurface::new(weights.clone(), degree)?;
        debug_assert!(w.is_well_formed());
        debug_assert!(w.is_quasi_k3());
        let hodge = w.fermat_hodge_numbers()?;
        let case = FOURFOLD_TABLE
            .iter()
            .find(|(_, tw, td, _)| tw[..] == weights[..] && *td == degree)
            .map(|(c, _, _, _)| c.to_string())
            .unwrap_or_else(|| "?".to_string());
        let h22_prim = hodge[2];
        out.push(ClassifiedFamily {
            case,
            weights,
            degree,
            exponents,
            hodge,
            h22_prim,
        });
    }
    out.sort_by_key(|f| {
        FOURFOLD_TABLE
            .iter()
            .position(|(c, ..)| *c == f.case)
            .unwrap_or(usize::MAX)
    });
    Ok(out)
}

/// Independent route to the same exponent multisets via the two structural
/// families: (2, 2) prepended to a partition of 1 into 4 unit fractions, or
/// the union of two partitions of 1 into 3.
pub fn fourfold_exponent_multisets_structural() -> Vec<Vec<u64>> {
    let one = Rat::one();
    let quads = unit_fraction_partitions(&one, 4);
    let triples = unit_fraction_partitions(&one, 3);
    let mut out = std::collections::BTreeSet::new();
    for q in &quads {
        let mut ns = vec![2u64, 2];
        ns.extend_from_slice(q);
        ns.sort_unstable();
        out.insert(ns);
    }
    for a in &triples {
        for b in &triples {
            let mut ns = a.clone();
            ns.extend_from_slice(b);
            ns.sort_unstable();
            out.insert(ns);
        }
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct InfiniteFamilyReport {
    pub weights: Vec<u64>,
    pub degree: u64,
    pub quasi_k3: bool,
    pub fermat_exists: bool,
}

/// The degree-2^d hypersurfaces in P(2^{d-2} x4, 2^{d-1}-e, 2^{d-1}+e):
/// quasi-K3 for every admissible e, never with a Fermat member.
pub fn infinite_family_check(d_exponent: u32, e: u64) -> Result<InfiniteFamilyReport> {
    if d_exponent < 3 {
        return Err(Error::InvalidParams("exponent must be at least 3".into()));
    }
    let half = 1u64 << (d_exponent - 1);
    if e == 0 || e >= half {
        return Err(Error::InvalidParams(
            "offset must satisfy 0 < e < 2^(d-1)".into(),
        ));
    }
    let quarter = 1u64 << (d_exponent - 2);
    let weights = vec![quarter, quarter, quarter, quarter, half - e, half + e];
    let degree = 1u64 << d_exponent;
    let w = WeightedHypersurface::new(weights.clone(), degree)?;
    Ok(InfiniteFamilyReport {
        weights,
        degree,
        quasi_k3: w.is_quasi_k3(),
        fermat_exists: w.fermat_exists(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenspaceCounts {
    pub invariant: u64,
    pub anti_invariant: u64,
    pub h31: u64,
}

/// Eigenspace dimensions of the involution on the middle primitive
/// cohomology of the cubic fourfold with an Eckardt point, by counting
/// cubic monomials standard with respect to the lead terms
/// {y0^2, y1^2, y2^2, y3^2, y4^2, y0 y5, y5^3} of its Jacobian ideal and
/// splitting by the parity of the y5 exponent.
pub fn eckardt_fermat_eigenspaces() -> EigenspaceCounts {
    let caps = [1u64, 1, 1, 1, 1, 2];
    let standard = |e: &[u64; 6]| -> bool {
        e.iter().zip(&caps).all(|(x, c)| x <= c) && !(e[0] >= 1 && e[5] >= 1)
    };
    let mut invariant = 0;
    let mut anti = 0;
    let mut h31 = 0;
    let count_degree = |deg: u64, invariant: &mut u64, anti: &mut u64, zero: &mut u64| {
        let mut e = [0u64; 6];
        #[allow(clippy::too_many_arguments)]
        fn rec(
            i: usize,
            left: u64,
            e: &mut [u64; 6],
            deg: u64,
            standard: &dyn Fn(&[u64; 6]) -> bool,
            invariant: &mut u64,
            anti: &mut u64,
            zero: &mut u64,
        ) {
            if i == 6 {
                if left == 0 && standard(e) {
                    if deg == 0 {
                        *zero += 1;
                    } else if e[5] % 2 == 1 {
                        *invariant += 1;
                    } else {
                        *anti += 1;
                    }
                }
                return;
            }
            for v in 0..=left {
                e[i] = v;
                rec(i + 1, left - v, e, deg, standard, invariant, anti, zero);
            }
            e[i] = 0;
        }
        rec(0, deg, &mut e, deg, &standard, invariant, anti, zero);
    };
    count_degree(3, &mut invariant, &mut anti, &mut h31);
    // h^{3,1} is the number of degree-0 standard monomials
    count_degree(0, &mut invariant, &mut anti, &mut h31);
    EigenspaceCounts {
        invariant,
        anti_invariant: anti,
        h31,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat;

    fn wh(weights: &[u64], degree: u64) -> WeightedHypersurface {
        WeightedHypersurface::new(weights.to_vec(), degree).unwrap()
    }

    #[test]
    fn weight_sum_and_wellformedness() {
        let n2 = wh(&[1, 2, 2, 2, 2, 3], 6);
        assert_eq!(n2.weight_sum(), 12);
        assert!(n2.is_well_formed());
        assert!(wh(&[1, 1, 1, 1, 1, 1], 3).is_well_formed());
        assert!(!wh(&[2, 2, 3], 6).is_well_formed());
    }

    #[test]
    fn quasi_k3_examples() {
        assert!(wh(&[1, 2, 2, 2, 2, 3], 6).is_quasi_k3());
        assert!(!wh(&[2, 3, 3, 4, 4, 6], 12).is_quasi_k3());
        assert!(!wh(&[1, 3, 5, 5], 15).is_quasi_k3());
        assert!(wh(&[1, 4, 5, 5, 10, 15], 20).is_quasi_k3());
    }

    #[test]
    fn fermat_existence() {
        assert!(wh(&[1, 2, 2, 2, 2, 3], 6).fermat_exists());
        assert!(!wh(&[1, 4, 5, 5, 10, 15], 20).fermat_exists());
        // degree/weight = 1 is not allowed
        assert!(!wh(&[1, 6], 6).fermat_exists());
    }

    #[test]
    fn hodge_numbers_of_named_cases() {
        assert_eq!(
            wh(&[1, 1, 1, 1, 1, 1], 3).fermat_hodge_numbers().unwrap(),
            vec![0, 1, 20, 1, 0]
        );
        assert_eq!(
            wh(&[1, 2, 2, 2, 2, 3], 6).fermat_hodge_numbers().unwrap(),
            vec![0, 1, 14, 1, 0]
        );
        assert_eq!(
            wh(&[1, 3, 5, 5], 15).fermat_hodge_numbers().unwrap(),
            vec![1, 14, 1]
        );
        assert_eq!(
            wh(&[2, 3, 3, 4, 4, 6], 12).fermat_hodge_numbers().unwrap(),
            vec![0, 1, 14, 1, 0]
        );
        assert!(matches!(
            wh(&[1, 4, 5, 5, 10, 15], 20).fermat_hodge_numbers(),
            Err(Error::NoFermatMember(_))
        ));
    }

    #[test]
    fn numerical_k3_examples() {
        assert!(wh(&[2, 3, 3, 4, 4, 6], 12)
            .is_numerical_k3_fermat()
            .unwrap());
        assert!(wh(&[1, 1, 1, 1, 1, 1], 3).is_numerical_k3_fermat().unwrap());
        assert!(wh(&[1, 3, 5, 5], 15).is_numerical_k3_fermat().unwrap());
        assert!(matches!(
            wh(&[1, 1, 1, 1, 1], 5).is_numerical_k3_fermat(),
            Err(Error::OddDimension)
        ));
    }

    #[test]
    fn partitions_of_one() {
        let p4 = unit_fraction_partitions(&rat(1, 1), 4);
        assert_eq!(p4.len(), 14);
        let expected: Vec<Vec<u64>> = vec![
            vec![2, 3, 7, 42],
            vec![2, 3, 8, 24],
            vec![2, 3, 9, 18],
            vec![2, 3, 10, 15],
            vec![2, 3, 12, 12],
            vec![2, 4, 5, 20],
            vec![2, 4, 6, 12],
            vec![2, 4, 8, 8],
            vec![2, 5, 5, 10],
            vec![2, 6, 6, 6],
            vec![3, 3, 4, 12],
            vec![3, 3, 6, 6],
            vec![3, 4, 4, 6],
            vec![4, 4, 4, 4],
        ];
        assert_eq!(p4, expected);
        let p3 = unit_fraction_partitions(&rat(1, 1), 3);
        assert_eq!(p3, vec![vec![2, 3, 6], vec![2, 4, 4], vec![3, 3, 3]]);
        assert!(unit_fraction_partitions(&rat(1, 1), 1).is_empty());
    }

    #[test]
    fn classification_matches_table() {
        let fams = classify_quasi_k3_fermat_fourfolds().unwrap();
        assert_eq!(fams.len(), 17);
        for (case, weights, degree, h22) in FOURFOLD_TABLE {
            let f = fams.iter().find(|f| f.case == case).unwrap();
            assert_eq!(f.weights, weights.to_vec());
            assert_eq!(f.degree, degree);
            assert_eq!(f.h22_prim, h22);
            assert_eq!(f.hodge[1], 1, "h31 of {case}");
            // palindromic Hodge vector
            let mut rev = f.hodge.clone();
            rev.reverse();
            assert_eq!(rev, f.hodge);
            // exponents recompute the reciprocal sum 2
            let sum: Rat = f
                .exponents
                .iter()
                .map(|&n| Rat::new(Int::one(), Int::from(n)))
                .sum();
            assert_eq!(sum, rat(2, 1));
        }
    }

    #[test]
    fn structural_route_agrees() {
        let direct = unit_fraction_partitions(&rat(2, 1), 6);
        let structural = fourfold_exponent_multisets_structural();
        assert_eq!(direct, structural);
        assert_eq!(direct.len(), 17);
    }

    #[test]
    fn infinite_family() {
        let r = infinite_family_check(5, 1).unwrap();
        assert!(r.quasi_k3 && !r.fermat_exists);
        let r = infinite_family_check(4, 3).unwrap();
        assert!(r.quasi_k3 && !r.fermat_exists);
        assert!(matches!(
            infinite_family_check(4, 0),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            infinite_family_check(4, 8),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn eigenspace_counts() {
        let e = eckardt_fermat_eigenspaces();
        assert_eq!(e.invariant, 6);
        assert_eq!(e.anti_invariant, 14);
        assert_eq!(e.h31, 1);
        let cubic = wh(&[1, 1, 1, 1, 1, 1], 3);
        let h = cubic.fermat_hodge_numbers().unwrap();
        assert_eq!(e.invariant + e.anti_invariant, h[2]);
    }

    #[test]
    fn well_forming_reduction() {
        // all weights share a factor
        let (w, d) = well_form_reduce(vec![2, 2, 2, 2], 8);
        assert_eq!((w, d), (vec![1, 1, 1, 1], 4));
        // a prime divides all weights but one and the degree
        let (w, d) = well_form_reduce(vec![1, 2, 2, 2], 4);
        assert_eq!((w, d), (vec![1, 1, 1, 1], 2));
        // already well formed: untouched
        let (w, d) = well_form_reduce(vec![1, 2, 2, 2, 2, 3], 6);
        assert_eq!((w, d), (vec![1, 2, 2, 2, 2, 3], 6));
    }
}
