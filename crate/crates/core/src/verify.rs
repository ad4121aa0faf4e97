//! Named checks and the invariant suite behind `verify`.

use std::fmt;

use crate::character::{build_psi_p, verify_character_axioms};
use crate::correspondence::{cs_to_sis, dual_aon, dual_cs, dual_sis, sis_to_cs};
use crate::idempotent::{antiautomorphism, IdempotentSystem};
use crate::matrix::Matrix;
use crate::solid::{diagonal_equivalence, is_ao, is_normalized, is_solid, normalize};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        let outcome = if passed { Outcome::Pass } else { Outcome::Fail };
        Check {
            name: name.into(),
            outcome,
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            outcome: Outcome::Skipped(reason.into()),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => f.write_str("pass"),
            Outcome::Fail => f.write_str("fail"),
            Outcome::Skipped(why) => write!(f, "skipped ({why})"),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.outcome)
    }
}

/// True when no check failed.
pub fn all_passed(checks: &[Check]) -> bool {
    !checks.iter().any(Check::failed)
}

const SOLID_CHECKS: &[&str] = &[
    "inverse and transpose are solid",
    "normalization is idempotent",
    "normalization is diagonally equivalent",
    "system axioms",
    "dual system axioms",
    "canonical form recovers the normalization",
    "symmetry agrees with the AO test",
];

const AON_CHECKS: &[&str] = &[
    "first eigenmatrix is the normalization",
    "symmetry witness fixes every idempotent",
    "intersection numbers from products",
    "character algebra axioms",
    "character system eigenmatrix",
    "character system to idempotent system roundtrip",
    "idempotent system to character system roundtrip",
    "dual is an involution",
    "P P* = nu I",
    "dual character system eigenmatrix",
    "dual idempotent system eigenmatrix",
];

fn skip_all(out: &mut Vec<Check>, names: &[&str], reason: &str) {
    out.extend(names.iter().map(|n| Check::skipped(*n, reason)));
}

/// Runs every invariant applicable to `r`: the solid predicates and the
/// system axioms for solid input, and for almost orthogonal input also the
/// eigenmatrix identities, the bijection roundtrips, duality and the
/// bilinear-form identities on the normalized representative.
pub fn verify_matrix(r: &Matrix) -> Vec<Check> {
    let mut out = Vec::new();
    let inverse = r.inverse();
    out.push(Check::new("invertible", inverse.is_ok()));
    let Ok(inv) = inverse else {
        skip_all(&mut out, SOLID_CHECKS, "not invertible");
        skip_all(&mut out, AON_CHECKS, "not invertible");
        return out;
    };
    out.push(Check::new(
        "inverse",
        r.matmul(&inv).is_ok_and(|x| x.is_identity()),
    ));
    if !is_solid(r) {
        skip_all(&mut out, SOLID_CHECKS, "not solid");
        skip_all(&mut out, AON_CHECKS, "not solid");
        return out;
    }
    let p = normalize(r).expect("solid");
    let ao = is_ao(r);
    out.push(Check::new(
        "inverse and transpose are solid",
        is_solid(&inv) && is_solid(&r.transpose()),
    ));
    out.push(Check::new(
        "normalization is idempotent",
        is_normalized(&p) && normalize(&p).is_ok_and(|x| x == p),
    ));
    out.push(Check::new(
        "normalization is diagonally equivalent",
        diagonal_equivalence(r, &p).is_ok_and(|w| w.is_some()),
    ));
    let phi = IdempotentSystem::build_phi_r(r).expect("solid");
    out.push(Check::new("system axioms", phi.verify_axioms()));
    out.push(Check::new("dual system axioms", phi.dual().verify_axioms()));
    out.push(Check::new(
        "canonical form recovers the normalization",
        phi.canonical_form()
            .is_ok_and(|c| normalize(&c.r).is_ok_and(|x| x == p)),
    ));
    out.push(Check::new(
        "symmetry agrees with the AO test",
        phi.is_symmetric().is_ok_and(|s| s == ao),
    ));
    if !ao {
        skip_all(&mut out, AON_CHECKS, "not AO");
        out.push(Check::skipped("eigenmatrix identities", "not AO"));
        out.push(Check::skipped("bilinear form identities", "not AO"));
        return out;
    }
    out.extend(aon_checks(&p, &phi));
    out
}

fn aon_checks(p: &Matrix, phi: &IdempotentSystem) -> Vec<Check> {
    let mut out = Vec::new();
    let data = phi.eigendata();
    out.push(Check::new(
        "first eigenmatrix is the normalization",
        data.as_ref().is_ok_and(|d| d.p == *p),
    ));
    out.push(Check::new(
        "symmetry witness fixes every idempotent",
        phi.symmetry_witness().is_ok_and(|w| {
            w.is_some_and(|m| {
                phi.e()
                    .iter()
                    .chain(phi.estar())
                    .all(|a| antiautomorphism(&m, a).is_ok_and(|b| b == *a))
            })
        }),
    ));
    out.push(Check::new(
        "intersection numbers from products",
        phi.intersection_numbers_from_products()
            .is_ok_and(|x| data.as_ref().is_ok_and(|d| d.pnum == x)),
    ));
    out.push(Check::new(
        "character algebra axioms",
        data.as_ref()
            .is_ok_and(|d| verify_character_axioms(&d.pnum)),
    ));
    let cs = build_psi_p(p);
    out.push(Check::new(
        "character system eigenmatrix",
        cs.as_ref().is_ok_and(|c| c.eigenmatrix() == p),
    ));
    out.push(Check::new(
        "character system to idempotent system roundtrip",
        cs.as_ref()
            .is_ok_and(|c| cs_to_sis(c).is_ok_and(|x| x.roundtrip_equal)),
    ));
    out.push(Check::new(
        "idempotent system to character system roundtrip",
        sis_to_cs(phi).is_ok_and(|x| x.roundtrip_equal),
    ));
    let pstar = dual_aon(p);
    out.push(Check::new(
        "dual is an involution",
        pstar
            .as_ref()
            .is_ok_and(|s| dual_aon(s).is_ok_and(|x| x == *p)),
    ));
    out.push(Check::new(
        "P P* = nu I",
        pstar.as_ref().is_ok_and(|s| {
            let nu = p.inverse().expect("solid").get(0, 0).inv().expect("solid");
            p.matmul(s)
                .is_ok_and(|x| x == Matrix::identity(p.field(), p.size()).scale(&nu))
        }),
    ));
    out.push(Check::new(
        "dual character system eigenmatrix",
        cs.as_ref().is_ok_and(|c| {
            dual_cs(c).is_ok_and(|d| pstar.as_ref().is_ok_and(|s| d.eigenmatrix() == s))
        }),
    ));
    out.push(Check::new(
        "dual idempotent system eigenmatrix",
        dual_sis(phi)
            .and_then(|d| d.first_eigenmatrix())
            .is_ok_and(|x| pstar.as_ref().is_ok_and(|s| x == *s)),
    ));
    match &data {
        Ok(d) => out.extend(d.identity_checks()),
        Err(e) => out.push(Check::new(format!("eigenmatrix identities ({e})"), false)),
    }
    match cs
        .as_ref()
        .map_err(Clone::clone)
        .and_then(|c| c.form_checks())
    {
        Ok(checks) => out.extend(checks),
        Err(e) => out.push(Check::new(format!("bilinear form identities ({e})"), false)),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    #[test]
    fn d1_member_passes_everything() {
        let checks = verify_matrix(&Matrix::from_ints(q(), &[[1, 2], [1, -1]]).unwrap());
        assert!(checks.iter().all(Check::passed), "{checks:?}");
        assert!(checks.len() > 20);
    }

    #[test]
    fn unnormalized_ao_passes() {
        let checks = verify_matrix(&Matrix::from_ints(q(), &[[2, 2], [3, -3]]).unwrap());
        assert!(checks.iter().all(Check::passed), "{checks:?}");
    }

    #[test]
    fn solid_only_profile() {
        let r = Matrix::from_ints(q(), &[[1, 1, 1], [1, 2, 1], [1, 1, 2]]).unwrap();
        let checks = verify_matrix(&r);
        assert!(all_passed(&checks));
        let skipped: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
        assert!(!skipped.is_empty());
        assert!(skipped
            .iter()
            .all(|c| c.outcome == Outcome::Skipped("not AO".into())));
    }

    #[test]
    fn singular_fails() {
        let checks = verify_matrix(&Matrix::from_ints(q(), &[[1, 1], [1, 1]]).unwrap());
        assert!(!all_passed(&checks));
        assert_eq!(checks[0], Check::new("invertible", false));
    }

    #[test]
    fn identity_is_not_solid() {
        let checks = verify_matrix(&Matrix::identity(q(), 3));
        assert!(all_passed(&checks));
        assert!(checks
            .iter()
            .any(|c| c.outcome == Outcome::Skipped("not solid".into())));
    }
}
