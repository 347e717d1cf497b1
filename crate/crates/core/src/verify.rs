//! The aggregated verification report: one entry per checked claim, with a
//! stable id, a human-readable anchor, a pass/fail status and a witness.

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

type CheckResult = Result<(String, Option<Value>), String>;

use crate::cubic_pair as pair;
use crate::discform::{FiniteQuadraticForm, IsometryMode};
use crate::matrix::{rat, Int, Rat};
use crate::roots::root_count;
use crate::wps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub id: String,
    pub claim: String,
    pub paper_anchor: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub entries: Vec<ReportEntry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let mark = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("[{mark}] {}  {} ({})\n", e.id, e.claim, e.detail));
        }
        out.push_str(&format!(
            "{} checks: {} passed, {} failed\n",
            self.summary.total, self.summary.pass, self.summary.fail
        ));
        out
    }
}

struct Check {
    id: &'static str,
    claim: &'static str,
    anchor: &'static str,
    run: fn(u64) -> CheckResult,
}

fn ok(detail: impl Into<String>) -> CheckResult {
    Ok((detail.into(), None))
}

fn ok_with(detail: impl Into<String>, witness: Value) -> CheckResult {
    Ok((detail.into(), Some(witness)))
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn check_gram_m(_: u64) -> CheckResult {
    let m = pair::build_m();
    ensure(m.det() == Int::from(64), "det(M) != 64")?;
    ensure(m.is_positive_definite(), "M not positive definite")?;
    ensure(!m.is_even(), "M must be odd")?;
    let inv = m.dual_basis().map_err(|e| e.to_string())?;
    ensure(
        inv == pair::expected_inverse_gram_m(),
        "inverse Gram differs from the displayed matrix",
    )?;
    ok("det 64, positive definite, odd, inverse Gram matches entrywise")
}

fn check_disc_m(_: u64) -> CheckResult {
    let m = pair::build_m();
    let dg = m.discriminant_group().map_err(|e| e.to_string())?;
    ensure(
        dg.orders() == vec![Int::from(2); 6].as_slice(),
        "A_M is not (Z/2)^6",
    )?;
    let f = pair::m_discriminant_form_on_dual_basis().map_err(|e| e.to_string())?;
    let expected = pair::expected_bilinear_form_m();
    for i in 0..6 {
        for j in 0..6 {
            ensure(
                f.bilinear_entry(i, j) == &expected[i][j],
                "b_M differs from the displayed half-integer matrix",
            )?;
        }
    }
    ok("A_M = (Z/2)^6 and b_M matches the displayed matrix on [F_i]*")
}

fn check_isotropy(_: u64) -> CheckResult {
    let rep = pair::verify_isotropy_of_am().map_err(|e| e.to_string())?;
    ensure(rep.all_isotropic, "a class of A_M is not isotropic")?;
    ensure(rep.coset_identities_hold, "a coset identity fails")?;
    ok(format!(
        "{} classes isotropic; all six divisibility coset identities hold",
        rep.elements_checked
    ))
}

fn check_h2_perp(_: u64) -> CheckResult {
    let rep = pair::primitive_part_h2().map_err(|e| e.to_string())?;
    ensure(rep.matches_e6_times_two, "Gram does not match E6(2)")?;
    ensure(rep.det == Int::from(192), "det != 192")?;
    ensure(rep.even, "not even")?;
    ensure(
        rep.equals_full_complement,
        "stated basis does not span (h^2)-perp",
    )?;
    ok("(h^2)-perp in M is E6(2): Gram equality on the stated basis, det 192, even")
}

fn check_t_invariants(_: u64) -> CheckResult {
    let rep = pair::sigma_o16_invariant_match().map_err(|e| e.to_string())?;
    ensure(rep.rank == 16, "rank != 16")?;
    ensure(rep.signature == (14, 2, 0), "signature != (14,2)")?;
    ensure(rep.even, "T not even")?;
    ensure(rep.two_elementary_of_length_6, "A_T != (Z/2)^6")?;
    ensure(rep.q_isometric_to_v_cubed, "q_T not isometric to v+v+v")?;
    let ctx = pair::TContext::new().map_err(|e| e.to_string())?;
    let dist = ctx.form.value_distribution();
    ensure(
        dist.get(&Rat::zero()) == Some(&28) && dist.get(&Rat::one()) == Some(&36),
        "q_T value distribution is not {0:28, 1:36}",
    )?;
    ensure(
        ctx.form.arf_invariant().map_err(|e| e.to_string())? == 1,
        "Arf invariant != 1",
    )?;
    ok("signature (14,2), even, det 64, A_T=(Z/2)^6, q-values {0:28,1:36}, Arf 1, q = v+v+v")
}

fn check_glue(_: u64) -> CheckResult {
    let rep = pair::realize_lambda().map_err(|e| e.to_string())?;
    ensure(rep.lambda.det().abs() == Int::one(), "|det| != 1")?;
    ensure(!rep.lambda.is_even(), "glued lattice not odd")?;
    ensure(rep.lambda.signature() == (21, 2, 0), "signature != (21,2)")?;
    ensure(rep.glue_index == Int::from(64), "glue index != 64")?;
    ensure(rep.m_primitive && rep.t_primitive, "M or T not primitive")?;
    ensure(rep.complements_match, "M and T are not mutual complements")?;
    ensure(
        rep.complement_isometric_to_m,
        "no congruence witness for the complement",
    )?;
    let cols: Vec<u32> = rep.glue_map.cols.clone();
    ok_with(
        "odd unimodular (21,2) overlattice; M, T primitive mutual complements",
        json!({ "anti_isometry_columns": cols, "glue_index": 64 }),
    )
}

fn check_weyl(_: u64) -> CheckResult {
    let rep = pair::verify_weyl_e6().map_err(|e| e.to_string())?;
    ensure(rep.full_group_order == 51840, "|O(q_T)| != 51840")?;
    ensure(
        rep.s_beta_closure_order == 51840,
        "s* maps do not generate O(q_T)",
    )?;
    ensure(
        rep.qt_on_am_isometric_to_qt,
        "refinement on A_M not isometric to q_T",
    )?;
    ensure(
        rep.e6_quotient_isometric_to_qt,
        "(E6/2E6, q) not isometric to q_T",
    )?;
    ensure(
        rep.root_classes_are_nonvanishing_locus,
        "E6 root reductions do not give the 36 nonzero classes",
    )?;
    ok("|O(q_T)| = 51840 = closure of the six induced maps; E6/2E6 matches; 36 root classes")
}

fn check_s_beta(_: u64) -> CheckResult {
    let rep = pair::verify_s_beta().map_err(|e| e.to_string())?;
    ensure(
        rep.all_preserve_gram,
        "an s_beta does not preserve the form",
    )?;
    ensure(rep.all_fix_h2, "an s_beta moves h^2")?;
    ensure(
        rep.s_beta1_matches_display,
        "s_beta1 differs from the displayed matrix",
    )?;
    ensure(
        rep.transpositions_ok,
        "an s_beta_j is not the expected transposition",
    )?;
    ensure(
        rep.induced_matches_display,
        "induced discriminant action differs",
    )?;
    ensure(
        rep.basis_change_conjugates,
        "displayed basis change fails to conjugate",
    )?;
    ensure(
        rep.group_order == 51840,
        "group generated on M has wrong order",
    )?;
    ok("six isometries fixing h^2, displayed matrices verified, closure order 51840")
}

fn check_types(_: u64) -> CheckResult {
    let ctx = pair::TContext::new().map_err(|e| e.to_string())?;
    let mut v = vec![Int::from(0); 16];
    v[0] = Int::one();
    v[1] = Int::one();
    let nodal = pair::classify_vector(&ctx, &v).map_err(|e| e.to_string())?;
    ensure(nodal.class == pair::VectorClass::Nodal, "e1+f1 not Nodal")?;
    let census = pair::type2_orbit_census().map_err(|e| e.to_string())?;
    ensure(census.all_tangential, "a representative is not Tangential")?;
    ensure(
        census.distinct_vhat == 36,
        "vhat classes not pairwise distinct",
    )?;
    ensure(
        census.vhat_equals_nonvanishing_locus,
        "vhat classes differ from the q=1 locus",
    )?;
    ensure(
        census.single_orbit,
        "O(q_T) not transitive on the 36 classes",
    )?;
    ok("e1+f1 Nodal; 36 Tangential representatives cover the q=1 locus in a single orbit")
}

fn check_embedding(_: u64) -> CheckResult {
    let emb = pair::embed_t_in_ii262().map_err(|e| e.to_string())?;
    let rep = pair::verify_ii262_embedding(&emb).map_err(|e| e.to_string())?;
    ensure(
        rep.block_complements_match_stated_generators,
        "stated generators do not span the block complement",
    )?;
    ensure(
        rep.stated_generators_gram_is_d4,
        "stated generator Gram is not D4",
    )?;
    ensure(
        rep.block_complement_isometric_to_d4,
        "no isometry witness to D4",
    )?;
    ensure(rep.t_image_primitive, "T image not primitive")?;
    ensure(rep.complement_gram_is_d4_cubed, "complement is not D4^3")?;
    ensure(
        rep.complement_root_count == 72,
        "root count of T-perp != 72",
    )?;
    ok("D4 in E8 with stated complement generators; T primitive; |R(T-perp)| = 72")
}

fn check_borcherds(_: u64) -> CheckResult {
    let rep = pair::borcherds_relation().map_err(|e| e.to_string())?;
    ensure(rep.weight == 48, "weight != 48")?;
    ensure(
        rep.nodal.sat_root_count == 74,
        "nodal saturation root count != 74",
    )?;
    ensure(rep.nodal.vanishing_order == 1, "nodal vanishing order != 1")?;
    ensure(
        rep.nodal.span_was_saturated,
        "nodal span was not already saturated",
    )?;
    ensure(rep.star_h0 == rat(1, 2), "H_0 coefficient != 1/2")?;
    ensure(
        rep.tangential.sat_root_count == 88,
        "tangential saturation root count != 88",
    )?;
    ensure(rep.star_ht == rat(8, 1), "H_i coefficient != 8")?;
    ensure(rep.tangential.m == 2, "tangential witness has m != 2")?;
    ensure(
        rep.tangential.nu_class.class == pair::VectorClass::Tangential,
        "nu of the witness is not Tangential",
    )?;
    ensure(rep.ramification_order == 8, "ramification order != 8")?;
    ensure(
        rep.plus_relation == (rat(1, 1), rat(2, 1)),
        "descended relation is not lambda ~ H_n + 2 H_t",
    )?;
    ok_with(
        "weight 48; orders (1, 8) -> coefficients (1/2, 8); descent gives H_n + 2 H_t",
        json!({
            "weight": rep.weight,
            "nodal_sat_roots": rep.nodal.sat_root_count,
            "tangential_sat_roots": rep.tangential.sat_root_count,
        }),
    )
}

fn check_bruinier(_: u64) -> CheckResult {
    let (value, rank) = pair::bruinier_sum();
    ensure(value == rat(21, 1), "sum != 21")?;
    ensure(rank == 22, "picard rank != 22")?;
    ok("cusp-form dimension sum is exactly 21; Picard rank 22")
}

fn check_h_infinity(_: u64) -> CheckResult {
    let rep = pair::h_infinity_avoidance();
    ensure(rep.candidates == 21, "candidate count != 21")?;
    ensure(
        rep.all_degenerate,
        "a bordered Gram matrix is nondegenerate",
    )?;
    ensure(rep.minor_bounds_consistent, "3x3 minor bounds inconsistent")?;
    ok("all 21 pairing candidates give det 0; minor bounds are exactly {0,1} and {0,1,2}")
}

fn check_appendix(_: u64) -> CheckResult {
    let p4 = wps::unit_fraction_partitions(&rat(1, 1), 4);
    ensure(p4.len() == 14, "partitions(1,4) != 14")?;
    ensure(
        p4.contains(&vec![2, 3, 7, 42]) && p4.contains(&vec![4, 4, 4, 4]),
        "missing a displayed partition",
    )?;
    let p3 = wps::unit_fraction_partitions(&rat(1, 1), 3);
    ensure(
        p3 == vec![vec![2, 3, 6], vec![2, 4, 4], vec![3, 3, 3]],
        "partitions(1,3) differ",
    )?;
    let fams = wps::classify_quasi_k3_fermat_fourfolds().map_err(|e| e.to_string())?;
    ensure(fams.len() == 17, "classifier did not produce 17 families")?;
    for (case, weights, degree, h22) in wps::FOURFOLD_TABLE {
        let f = fams
            .iter()
            .find(|f| f.case == case)
            .ok_or_else(|| format!("case {case} missing"))?;
        ensure(
            f.weights == weights.to_vec() && f.degree == degree && f.h22_prim == h22,
            "a table row differs",
        )?;
        ensure(f.hodge[1] == 1, "h^{3,1} != 1 on a row")?;
    }
    let structural = wps::fourfold_exponent_multisets_structural();
    let direct = wps::unit_fraction_partitions(&rat(2, 1), 6);
    ensure(
        structural == direct,
        "structural and direct enumerations differ",
    )?;
    ok("14 + 3 partitions as displayed; 17 families matching the table row for row")
}

fn check_counterexamples(_: u64) -> CheckResult {
    let z = wps::WeightedHypersurface::new(vec![1, 3, 5, 5], 15).map_err(|e| e.to_string())?;
    ensure(
        !z.is_quasi_k3(),
        "P(1,3,5,5) degree 15 must not be quasi-K3",
    )?;
    ensure(
        z.is_numerical_k3_fermat().map_err(|e| e.to_string())?,
        "P(1,3,5,5) degree 15 must be numerical K3",
    )?;
    let h = z.fermat_hodge_numbers().map_err(|e| e.to_string())?;
    ensure(h[0] == 1, "h^{2,0} != 1")?;
    let z =
        wps::WeightedHypersurface::new(vec![2, 3, 3, 4, 4, 6], 12).map_err(|e| e.to_string())?;
    ensure(
        !z.is_quasi_k3(),
        "P(2,3,3,4,4,6) degree 12 must not be quasi-K3",
    )?;
    ensure(
        z.is_numerical_k3_fermat().map_err(|e| e.to_string())?,
        "P(2,3,3,4,4,6) degree 12 must be numerical K3",
    )?;
    let z =
        wps::WeightedHypersurface::new(vec![1, 4, 5, 5, 10, 15], 20).map_err(|e| e.to_string())?;
    ensure(
        z.is_quasi_k3(),
        "P(1,4,5,5,10,15) degree 20 must be quasi-K3",
    )?;
    ensure(
        !z.fermat_exists(),
        "P(1,4,5,5,10,15) degree 20 has no Fermat member",
    )?;
    for (d, e) in [(4u32, 1u64), (4, 3), (5, 1)] {
        let r = wps::infinite_family_check(d, e).map_err(|e| e.to_string())?;
        ensure(
            r.quasi_k3 && !r.fermat_exists,
            "infinite family spot check failed",
        )?;
    }
    ok("both non-quasi numerical K3s, the Fermat-free family, and three spot checks")
}

fn check_eigenspaces(_: u64) -> CheckResult {
    let e = wps::eckardt_fermat_eigenspaces();
    ensure(e.invariant == 6, "invariant count != 6")?;
    ensure(e.anti_invariant == 14, "anti-invariant count != 14")?;
    ensure(e.h31 == 1, "h^{3,1} != 1")?;
    let cubic = wps::WeightedHypersurface::new(vec![1; 6], 3).map_err(|e| e.to_string())?;
    let h = cubic.fermat_hodge_numbers().map_err(|e| e.to_string())?;
    ensure(
        e.invariant + e.anti_invariant == h[2],
        "eigenspace total differs from h^{2,2}",
    )?;
    ok("(invariant, anti-invariant, h^{3,1}) = (6, 14, 1), total 20")
}

fn check_milnor(_: u64) -> CheckResult {
    let rep = pair::sigma_o16_invariant_match().map_err(|e| e.to_string())?;
    ensure(
        rep.rank == 16
            && rep.signature == (14, 2, 0)
            && rep.even
            && rep.two_elementary_of_length_6
            && rep.q_isometric_to_v_cubed,
        "an invariant differs",
    )?;
    ok("rank 16, signature (14,2), even, A = (Z/2)^6, q = v+v+v: all match")
}

fn check_weight_recomputed(_: u64) -> CheckResult {
    let emb = pair::embed_t_in_ii262().map_err(|e| e.to_string())?;
    let rc = root_count(&emb.complement.sub).map_err(|e| e.to_string())?;
    ensure(12 + rc / 2 == 48, "recomputed weight differs")?;
    // the two standard forms that could be confused are told apart by Arf
    let u3 = {
        let u = FiniteQuadraticForm::u_form();
        u.direct_sum(&u).direct_sum(&u)
    };
    let v3 = {
        let v = FiniteQuadraticForm::v_form();
        v.direct_sum(&v).direct_sum(&v)
    };
    ensure(
        u3.arf_invariant().map_err(|e| e.to_string())? == 0
            && v3.arf_invariant().map_err(|e| e.to_string())? == 1,
        "Arf invariants of u^3 and v^3 must differ",
    )?;
    ensure(
        u3.isometry_search(&v3, IsometryMode::Isometry)
            .map_err(|e| e.to_string())?
            .is_none(),
        "u^3 and v^3 must not be isometric",
    )?;
    ok("weight 12 + |R(T-perp)|/2 = 48 recomputed from scratch; u^3 vs v^3 separated")
}

fn check_orbit_invariance(seed: u64) -> CheckResult {
    let rep = pair::orbit_invariance_check(seed, 100, 20).map_err(|e| e.to_string())?;
    ensure(rep.labels_preserved, "a reflection word changed the label")?;
    ensure(
        rep.eichler_invariant_preserved,
        "a reflection word changed the invariant",
    )?;
    ensure(
        rep.vhat_fixed_by_nodal_reflections,
        "a nodal reflection moved the discriminant class",
    )?;
    ok_with(
        format!(
            "{} seeded reflection words preserve labels and invariants",
            rep.samples
        ),
        json!({ "seed": rep.seed }),
    )
}

const CHECKS: &[Check] = &[
    Check {
        id: "01-gram-m",
        claim: "Gram matrix and inverse of M",
        anchor: "lattice M: determinant 64, displayed inverse",
        run: check_gram_m,
    },
    Check {
        id: "02-disc-m",
        claim: "discriminant group and bilinear form of M",
        anchor: "A_M = (Z/2)^6 with the displayed b_M",
        run: check_disc_m,
    },
    Check {
        id: "03-isotropy-am",
        claim: "isotropy of A_M and coset identities",
        anchor: "saturation case list for M",
        run: check_isotropy,
    },
    Check {
        id: "04-h2-perp",
        claim: "(h^2)-perp in M is E6(2)",
        anchor: "primitive part of M",
        run: check_h2_perp,
    },
    Check {
        id: "05-t-invariants",
        claim: "invariants of T = U^2 + D4^3",
        anchor: "transcendental lattice invariants",
        run: check_t_invariants,
    },
    Check {
        id: "06-glue-lambda",
        claim: "gluing M and T to an odd unimodular lattice",
        anchor: "realization inside I_{21,2}",
        run: check_glue,
    },
    Check {
        id: "07-weyl-e6",
        claim: "O(q_T) is the Weyl group of E6",
        anchor: "discriminant form orthogonal group",
        run: check_weyl,
    },
    Check {
        id: "08-s-beta",
        claim: "the six s_beta isometries of M",
        anchor: "W(E6) action fixing h^2",
        run: check_s_beta,
    },
    Check {
        id: "09-vector-types",
        claim: "nodal and tangential vector classes in T",
        anchor: "norm/divisibility orbit census",
        run: check_types,
    },
    Check {
        id: "10-embed-ii262",
        claim: "primitive embedding of T into II_{26,2}",
        anchor: "D4 inside E8 block by block",
        run: check_embedding,
    },
    Check {
        id: "11-borcherds",
        claim: "weight and Heegner coefficients of the quasi-pullback",
        anchor: "divisor relation lambda ~ H_n + 2 H_t",
        run: check_borcherds,
    },
    Check {
        id: "12-bruinier",
        claim: "cusp-form dimension sum and Picard rank",
        anchor: "dim S_8 = 21, rank 22",
        run: check_bruinier,
    },
    Check {
        id: "13-h-infinity",
        claim: "no positive definite extension over M",
        anchor: "hyperplane arrangement avoidance",
        run: check_h_infinity,
    },
    Check {
        id: "14-appendix-table",
        claim: "unit-fraction partitions and the 17 fourfold families",
        anchor: "quasi-K3 Fermat classification",
        run: check_appendix,
    },
    Check {
        id: "15-counterexamples",
        claim: "numerical-K3-not-quasi and Fermat-free families",
        anchor: "boundary examples of the classification",
        run: check_counterexamples,
    },
    Check {
        id: "16-eigenspaces",
        claim: "involution eigenspace dimensions on middle cohomology",
        anchor: "Jacobian ring monomial count (6, 14, 1)",
        run: check_eigenspaces,
    },
    Check {
        id: "17-milnor-match",
        claim: "invariant match with the Milnor lattice",
        anchor: "rank 16 suspension singularity",
        run: check_milnor,
    },
    Check {
        id: "18-weight-recomputed",
        claim: "weight recomputed from the root count",
        anchor: "12 + |R(T-perp)|/2",
        run: check_weight_recomputed,
    },
    Check {
        id: "19-orbit-invariance",
        claim: "classification constant along reflection orbits",
        anchor: "stable orbit invariant spot check",
        run: check_orbit_invariance,
    },
];

/// Run the verification suite. `only` filters by substring of the id or the
/// anchor; `seed` feeds the pseudorandom spot checks and is recorded in the
/// report.
pub fn run(seed: u64, only: Option<&str>) -> VerificationReport {
    let mut entries = Vec::new();
    for check in CHECKS {
        if let Some(filter) = only {
            if !check.id.contains(filter) && !check.anchor.contains(filter) {
                continue;
            }
        }
        let (status, detail, witness) = match (check.run)(seed) {
            Ok((detail, witness)) => (Status::Pass, detail, witness),
            Err(msg) => (Status::Fail, msg, None),
        };
        entries.push(ReportEntry {
            id: check.id.to_string(),
            claim: check.claim.to_string(),
            paper_anchor: check.anchor.to_string(),
            status,
            detail,
            witness,
        });
    }
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    let pass = entries.iter().filter(|e| e.status == Status::Pass).count();
    let fail = entries.len() - pass;
    VerificationReport {
        seed,
        entries,
        summary: Summary {
            pass,
            fail,
            total: pass + fail,
        },
    }
}
