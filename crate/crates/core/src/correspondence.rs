//! Bijections between AON matrices, symmetric idempotent systems and
//! character systems, and the duality maps on each of the three sets.
//!
//! Isomorphism classes are represented by their AON eigenmatrix, so every
//! roundtrip is compared by exact matrix equality.

use std::fmt;

use crate::character::{build_psi_p, CharacterAlgebra, CharacterSystem};
use crate::error::{Error, Result};
use crate::idempotent::IdempotentSystem;
use crate::matrix::Matrix;
use crate::solid::is_aon;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Aon,
    Sis,
    Cs,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Aon => "AON",
            Kind::Sis => "SIS",
            Kind::Cs => "CS",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Image {
    Aon(Matrix),
    Sis(IdempotentSystem),
    Cs(CharacterSystem),
}

impl Image {
    pub fn kind(&self) -> Kind {
        match self {
            Image::Aon(_) => Kind::Aon,
            Image::Sis(_) => Kind::Sis,
            Image::Cs(_) => Kind::Cs,
        }
    }

    /// The AON representative of the image's class.
    pub fn representative(&self) -> Result<Matrix> {
        match self {
            Image::Aon(p) => Ok(p.clone()),
            Image::Sis(phi) => phi.first_eigenmatrix(),
            Image::Cs(cs) => Ok(cs.eigenmatrix().clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub source: Kind,
    pub target: Kind,
    pub image: Image,
    /// Mapping the image back recovers the source's eigenmatrix.
    pub roundtrip_equal: bool,
}

/// The character system on the span of `{A_i}` with
/// primitive idempotents `{E_i}`.
pub fn psi_of_phi(phi: &IdempotentSystem) -> Result<CharacterSystem> {
    let data = phi.eigendata()?;
    CharacterSystem::new(CharacterAlgebra::new(data.pnum)?, data.p)
}

/// `Φ_P` for the eigenmatrix `P` of `sys`.
pub fn phi_of_psi(sys: &CharacterSystem) -> Result<IdempotentSystem> {
    IdempotentSystem::build_phi_r(sys.eigenmatrix())
}

/// `P* = ν·P⁻¹` where `ν⁻¹ = (P⁻¹)_{0,0}`.
pub fn dual_aon(p: &Matrix) -> Result<Matrix> {
    if !is_aon(p) {
        return Err(Error::NotAON);
    }
    let inv = p.inverse()?;
    let nu = inv.get(0, 0).inv().expect("solid");
    Ok(inv.scale(&nu))
}

pub fn dual_sis(phi: &IdempotentSystem) -> Result<IdempotentSystem> {
    if !phi.is_symmetric()? {
        return Err(Error::NotSymmetric);
    }
    Ok(phi.dual())
}

pub fn dual_cs(sys: &CharacterSystem) -> Result<CharacterSystem> {
    let p = sys.eigenmatrix();
    let dual = build_psi_p(&dual_aon(p)?)?;
    let product = p.matmul(dual.eigenmatrix())?;
    if product.scalar_multiple_of_identity().is_none() {
        return Err(Error::InvalidCharacterSystem("P P* is not scalar".into()));
    }
    Ok(dual)
}

fn report(
    source: Kind,
    image: Image,
    back: Result<Matrix>,
    original: &Matrix,
) -> CorrespondenceReport {
    CorrespondenceReport {
        source,
        target: image.kind(),
        image,
        roundtrip_equal: back.is_ok_and(|m| m == *original),
    }
}

pub fn aon_to_sis(p: &Matrix) -> Result<CorrespondenceReport> {
    if !is_aon(p) {
        return Err(Error::NotAON);
    }
    let phi = IdempotentSystem::build_phi_r(p)?;
    let back = phi.first_eigenmatrix();
    Ok(report(Kind::Aon, Image::Sis(phi), back, p))
}

pub fn aon_to_cs(p: &Matrix) -> Result<CorrespondenceReport> {
    let cs = build_psi_p(p)?;
    let back = Ok(cs.eigenmatrix().clone());
    Ok(report(Kind::Aon, Image::Cs(cs), back, p))
}

pub fn sis_to_cs(phi: &IdempotentSystem) -> Result<CorrespondenceReport> {
    let p = phi.first_eigenmatrix()?;
    let cs = psi_of_phi(phi)?;
    let back = phi_of_psi(&cs).and_then(|x| x.first_eigenmatrix());
    Ok(report(Kind::Sis, Image::Cs(cs), back, &p))
}

pub fn cs_to_sis(sys: &CharacterSystem) -> Result<CorrespondenceReport> {
    let phi = phi_of_psi(sys)?;
    let back = psi_of_phi(&phi).map(|cs| cs.eigenmatrix().clone());
    Ok(report(Kind::Cs, Image::Sis(phi), back, sys.eigenmatrix()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::verify_character_axioms;
    use crate::field::FieldSpec;
    use crate::solid::kron;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn d1(k: i64) -> Matrix {
        Matrix::from_ints(q(), &[[1, k], [1, -1]]).unwrap()
    }

    #[test]
    fn psi_of_phi_d1() {
        let phi = IdempotentSystem::build_phi_r(&d1(2)).unwrap();
        let cs = psi_of_phi(&phi).unwrap();
        assert_eq!(
            cs.algebra(),
            &CharacterAlgebra::d1(&q().from_i64(2)).unwrap()
        );
        assert_eq!(cs.eigenmatrix(), &d1(2));
    }

    #[test]
    fn psi_of_phi_kron() {
        let phi = IdempotentSystem::build_phi_r(&kron(&d1(1), &d1(1)).unwrap()).unwrap();
        let cs = psi_of_phi(&phi).unwrap();
        assert_eq!(cs.size(), 4);
        assert!(verify_character_axioms(cs.algebra().pnum()));
    }

    #[test]
    fn psi_of_phi_requires_symmetry() {
        let r = Matrix::from_ints(q(), &[[1, 1, 1], [1, 2, 1], [1, 1, 2]]).unwrap();
        let phi = IdempotentSystem::build_phi_r(&r).unwrap();
        assert_eq!(psi_of_phi(&phi), Err(Error::NotSymmetric));
        assert_eq!(dual_sis(&phi), Err(Error::NotSymmetric));
    }

    #[test]
    fn phi_of_psi_d1() {
        let cs = build_psi_p(&d1(2)).unwrap();
        assert_eq!(
            phi_of_psi(&cs).unwrap(),
            IdempotentSystem::build_phi_r(&d1(2)).unwrap()
        );
    }

    #[test]
    fn trivial_roundtrips() {
        let one = Matrix::identity(q(), 1);
        for r in [aon_to_sis(&one), aon_to_cs(&one)] {
            assert!(r.unwrap().roundtrip_equal);
        }
        assert_eq!(dual_aon(&one).unwrap(), one);
    }

    #[test]
    fn dual_aon_examples() {
        assert_eq!(dual_aon(&d1(2)).unwrap(), d1(2));
        let (a, b) = (d1(2), d1(3));
        let kr = kron(&a, &b).unwrap();
        let expected = kron(&dual_aon(&a).unwrap(), &dual_aon(&b).unwrap()).unwrap();
        assert_eq!(dual_aon(&kr).unwrap(), expected);
        assert_eq!(dual_aon(&Matrix::identity(q(), 2)), Err(Error::NotAON));
    }

    #[test]
    fn dual_maps_agree() {
        let p = kron(&d1(2), &d1(4)).unwrap();
        let cs = build_psi_p(&p).unwrap();
        let pstar = dual_aon(&p).unwrap();
        assert_eq!(dual_cs(&cs).unwrap().eigenmatrix(), &pstar);
        let phi = IdempotentSystem::build_phi_r(&p).unwrap();
        assert_eq!(dual_sis(&phi).unwrap().first_eigenmatrix().unwrap(), pstar);
        assert_eq!(dual_aon(&pstar).unwrap(), p);
    }

    #[test]
    fn reports_roundtrip() {
        let p = kron(&d1(3), &d1(1)).unwrap();
        let to_sis = aon_to_sis(&p).unwrap();
        assert!(to_sis.roundtrip_equal);
        assert_eq!((to_sis.source, to_sis.target), (Kind::Aon, Kind::Sis));
        let Image::Sis(phi) = &to_sis.image else {
            panic!("expected a system")
        };
        assert!(sis_to_cs(phi).unwrap().roundtrip_equal);
        let cs = build_psi_p(&p).unwrap();
        let back = cs_to_sis(&cs).unwrap();
        assert!(back.roundtrip_equal);
        assert_eq!(back.image.representative().unwrap(), p);
    }
}
