//! Exhaustive verification suites shared by the test targets and the
//! command-line tool.
//!
//! Every suite walks a deterministic family of walls and stops at the first
//! counterexample, which is reported with the wall literal and a short reason.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{weight_sub_alpha, Index, LaurentPoly};
use crate::crystal::{e_tilde, f_tilde, satisfies_weight_identity, signature};
use crate::fock::{act_e, check_ef_relation, check_serre, divided_power_f, FockVector};
use crate::globalbasis::{a_basis, q_closed_form, GlobalBasis};
use crate::youngwall::{dominance, enumerate_walls, GroundState, YoungWall};

/// The first failing instance of a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub wall: String,
    pub reason: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.wall, self.reason)
    }
}

/// Number of checked instances, or the first counterexample.
pub type SuiteResult = Result<usize, Counterexample>;

fn fail(y: &YoungWall, reason: impl Into<String>) -> Counterexample {
    Counterexample { wall: y.to_string(), reason: reason.into() }
}

/// `[eᵢ, fⱼ]Y = δᵢⱼ [⟨hᵢ, wt Y⟩]ᵢ Y` for every proper wall with at most
/// `max_blocks` added blocks and every `(i, j)`.
pub fn ef_suite(g: GroundState, max_blocks: u32) -> SuiteResult {
    let mut n = 0;
    for y in enumerate_walls(g, max_blocks) {
        for i in Index::ALL {
            for j in Index::ALL {
                if !check_ef_relation(&y, i, j) {
                    return Err(fail(&y, format!("[e{i}, f{j}] relation fails")));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Both Serre forms for every ordered pair `i ≠ j`, applied to the ground
/// wall and the first `count` other walls of the enumeration.
pub fn serre_suite(g: GroundState, max_blocks: u32, count: usize) -> SuiteResult {
    let mut n = 0;
    let others = enumerate_walls(g, max_blocks).into_iter().filter(|y| !y.is_ground()).take(count);
    for y in core::iter::once(YoungWall::ground(g)).chain(others) {
        let v = FockVector::from_wall(&y);
        for i in Index::ALL {
            for j in Index::ALL.into_iter().filter(|&j| j != i) {
                if !check_serre(i, j, &v) {
                    return Err(fail(&y, format!("Serre relation ({i}, {j}) fails")));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Crystal axioms on every proper wall: `φᵢ = εᵢ + ⟨hᵢ, wt⟩`, `Ẽᵢ` and `F̃ᵢ`
/// are mutually inverse partial maps shifting `(εᵢ, φᵢ)` by `±1` and the
/// weight by `∓αᵢ`, and both preserve properness.
pub fn crystal_axioms_suite(g: GroundState, max_blocks: u32) -> SuiteResult {
    let mut n = 0;
    for y in enumerate_walls(g, max_blocks) {
        if !satisfies_weight_identity(&y) {
            return Err(fail(&y, "phi - eps differs from the weight pairing"));
        }
        for i in Index::ALL {
            let s = signature(&y, i);
            if let Some(z) = f_tilde(&y, i) {
                let t = signature(&z, i);
                if !z.is_proper() || e_tilde(&z, i).as_ref() != Some(&y) {
                    return Err(fail(&y, format!("E~{i} F~{i} is not the identity")));
                }
                if t.eps() != s.eps() + 1 || t.phi() + 1 != s.phi() || z.weight() != weight_sub_alpha(&y.weight(), i, 1) {
                    return Err(fail(&y, format!("F~{i} shifts eps/phi/wt incorrectly")));
                }
            } else if s.phi() != 0 {
                return Err(fail(&y, format!("F~{i} undefined although phi > 0")));
            }
            if let Some(z) = e_tilde(&y, i) {
                if !z.is_proper() || f_tilde(&z, i).as_ref() != Some(&y) {
                    return Err(fail(&y, format!("F~{i} E~{i} is not the identity")));
                }
            } else if s.eps() != 0 {
                return Err(fail(&y, format!("E~{i} undefined although eps > 0")));
            }
            n += 1;
        }
    }
    Ok(n)
}

/// Compatibility of the Fock action with the crystal at `q = 0`.
///
/// For `u` killed by `eᵢ`, Kashiwara's operator acts as
/// `F̃ᵢⁿ u = fᵢ^{(n)} u`. On every wall `Y` without removable `i`-blocks (so
/// `eᵢY = 0`) this checks `fᵢ^{(n)} Y ≡ F̃ᵢⁿ Y  (mod q ℤ[q])` for
/// `1 ≤ n ≤ φᵢ(Y)`, and `fᵢ^{(n)} Y ≡ 0` for `n = φᵢ(Y) + 1`.
pub fn crystal_compatibility_suite(g: GroundState, max_blocks: u32) -> SuiteResult {
    let mut n = 0;
    for y in enumerate_walls(g, max_blocks) {
        for i in Index::ALL {
            if !act_e(i, &FockVector::from_wall(&y)).is_zero() {
                continue;
            }
            let phi = signature(&y, i).phi() as u32;
            let mut target = Some(y.clone());
            for r in 1..=phi + 1 {
                target = target.and_then(|t| f_tilde(&t, i));
                let v = divided_power_f(i, r, &FockVector::from_wall(&y)).map_err(|e| fail(&y, e.to_string()))?;
                for (z, c) in v.iter() {
                    let leading = Some(z) == target.as_ref();
                    let ok = if leading { (c - &LaurentPoly::one()).in_q_zq() } else { c.in_q_zq() };
                    if !ok {
                        return Err(fail(&y, format!("coefficient {c} of {z} in f{i}^({r}) Y is not congruent to the crystal")));
                    }
                }
                if let Some(t) = &target {
                    if v.coeff(t).is_zero() {
                        return Err(fail(&y, format!("F~{i}^{r} Y = {t} is missing from f{i}^({r}) Y")));
                    }
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Reduced forms: `Y^R` is reduced, idempotent, of the same weight, and
/// `|Y^R| ⊵ |Y|`.
pub fn reduced_form_suite(g: GroundState, max_blocks: u32) -> SuiteResult {
    let mut n = 0;
    for y in enumerate_walls(g, max_blocks) {
        let r = y.reduced_form();
        if !r.is_reduced() || r.reduced_form() != r {
            return Err(fail(&y, format!("reduced form {r} is not a reduced fixed point")));
        }
        if r.weight() != y.weight() || !dominance(&r.partition(), &y.partition()) {
            return Err(fail(&y, format!("reduced form {r} changes the weight or is not dominant")));
        }
        n += 1;
    }
    Ok(n)
}

/// Peeling: the coefficient of `Y` in `fᵢ^{(r)} Ȳ` is 1 for every reduced,
/// non-ground wall.
pub fn peel_unit_suite(g: GroundState, max_blocks: u32) -> SuiteResult {
    let mut n = 0;
    for y in enumerate_walls(g, max_blocks).into_iter().filter(|y| y.is_reduced() && !y.is_ground()) {
        let (bar, i, r) = y.peel().map_err(|e| fail(&y, e.to_string()))?;
        if !bar.is_reduced() {
            return Err(fail(&y, format!("peeled wall {bar} is not reduced")));
        }
        let v = divided_power_f(i, r, &FockVector::from_wall(&bar)).map_err(|e| fail(&y, e.to_string()))?;
        if !v.coeff(&y).is_one() {
            return Err(fail(&y, format!("coefficient of Y in f{i}^({r}) {bar} is {}", v.coeff(&y))));
        }
        n += 1;
    }
    Ok(n)
}

/// The closed-form coefficients agree with direct divided powers for every
/// wall `Y`, colour `i`, `1 ≤ r ≤ max_r` and every `Z` in `fᵢ^{(r)} Y`.
pub fn closed_form_suite(g: GroundState, max_blocks: u32, max_r: u32) -> SuiteResult {
    closed_form_on(enumerate_walls(g, max_blocks).iter(), max_r)
}

/// [`closed_form_suite`] on an explicit family of walls.
pub fn closed_form_on<'a>(walls: impl Iterator<Item = &'a YoungWall>, max_r: u32) -> SuiteResult {
    let mut n = 0;
    for y in walls {
        for i in Index::ALL {
            for r in 1..=max_r {
                let v = divided_power_f(i, r, &FockVector::from_wall(y)).map_err(|e| fail(y, e.to_string()))?;
                for (z, c) in v.iter() {
                    let q = q_closed_form(y, z, i, r).map_err(|e| fail(y, e.to_string()))?;
                    if &q != c {
                        return Err(fail(y, format!("f{i}^({r}) coefficient of {z}: direct {c}, closed form {q}")));
                    }
                    n += 1;
                }
            }
        }
    }
    Ok(n)
}

/// Properties of `A(Y)` and `G(Y)` for every reduced wall with at most
/// `max_blocks` blocks:
///
/// * `A_{Y,Y} = 1`; `A_{Y,Z} ≠ 0` forces `wt Z = wt Y`, `|Y| ⊵ |Z^R|`, and
///   `|Z| = |Y| ⇒ Z = Y`;
/// * `G_{Y,Y} = 1`, `G_{Y,Z} ∈ qℤ[q]` otherwise, with the same support rule;
/// * every `γ` is bar-invariant and `A(Y) = G(Y) + Σ γ G(Z)` exactly;
/// * `G` does not depend on the tie-break among equal partitions.
pub fn gb_suite(g: GroundState, max_blocks: u32) -> SuiteResult {
    let mut solver = GlobalBasis::new();
    let mut reversed = GlobalBasis::with_reversed_tie_break();
    let mut n = 0;
    let reduced: Vec<YoungWall> = enumerate_walls(g, max_blocks).into_iter().filter(YoungWall::is_reduced).collect();
    for y in &reduced {
        let a = a_basis(y).map_err(|e| fail(y, e.to_string()))?;
        let gy = solver.g(y).map_err(|e| fail(y, e.to_string()))?;
        for (label, v) in [("A", &a.coeffs), ("G", &gy.coeffs)] {
            if !v.coeff(y).is_one() {
                return Err(fail(y, format!("{label}_(Y,Y) = {}", v.coeff(y))));
            }
            for (z, c) in v.iter().filter(|(z, _)| *z != y) {
                let support_ok = z.weight() == y.weight()
                    && z.partition() != y.partition()
                    && dominance(&y.partition(), &z.reduced_form().partition());
                if !support_ok {
                    return Err(fail(y, format!("{label} has a term {z} outside the triangular support")));
                }
                if label == "G" && !c.in_q_zq() {
                    return Err(fail(y, format!("G coefficient {c} of {z} is not in qZ[q]")));
                }
            }
        }
        let mut rebuilt = gy.coeffs.clone();
        for (z, c) in &gy.gamma {
            if !c.is_bar_invariant() {
                return Err(fail(y, format!("gamma {c} towards {z} is not bar-invariant")));
            }
            let gz = solver.g(z).map_err(|e| fail(y, e.to_string()))?;
            rebuilt.add_scaled(c, &gz.coeffs);
        }
        if rebuilt != a.coeffs {
            return Err(fail(y, "A(Y) differs from G(Y) + sum gamma G(Z)"));
        }
        if reversed.g(y).map_err(|e| fail(y, e.to_string()))?.coeffs != gy.coeffs {
            return Err(fail(y, "G(Y) depends on the tie-break"));
        }
        n += 1;
    }
    Ok(n)
}
