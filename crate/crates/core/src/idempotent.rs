//! Idempotent systems realized in `Mat_{d+1}(F)` and their eigendata.
//!
//! An idempotent system is a pair of families `{E_i}` and `{E*_i}` of
//! mutually orthogonal rank-1 idempotents summing to `I` with
//! `E_0·E*_i·E_0 ≠ 0` and `E*_0·E_i·E*_0 ≠ 0` for every `i`. Every system is
//! conjugate to the canonical `Φ_R = ({Δ_{i,i}}, {R·Δ_{i,i}·R⁻¹})` for some
//! solid `R`, and is symmetric exactly when that `R` is almost orthogonal.

use crate::character::IntersectionNumbers;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{check_idempotent_family, recover_diagonalizer, solve, Matrix, Solution};
use crate::solid::{check_ao, is_solid};
use crate::verify::Check;

#[derive(Clone, Debug)]
pub struct IdempotentSystem {
    e: Vec<Matrix>,
    estar: Vec<Matrix>,
    /// The `R` this system was built from, when it is `Φ_R`.
    source: Option<Matrix>,
}

impl PartialEq for IdempotentSystem {
    fn eq(&self, other: &Self) -> bool {
        self.e == other.e && self.estar == other.estar
    }
}

impl Eq for IdempotentSystem {}

/// `E_i = T·Δ_{i,i}·T⁻¹` and, after conjugating by `T⁻¹`,
/// `E*_i = R·Δ_{i,i}·R⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub conjugator: Matrix,
    pub r: Matrix,
}

/// Everything the first and second eigenmatrices determine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigendataReport {
    /// First eigenmatrix: transition matrix from `{E_i}` to `{A_i}`.
    pub p: Matrix,
    /// Second eigenmatrix: the first eigenmatrix of the dual system.
    pub q: Matrix,
    pub nu: Scalar,
    pub k: Vec<Scalar>,
    pub kstar: Vec<Scalar>,
    pub m: Vec<Scalar>,
    pub mstar: Vec<Scalar>,
    pub pnum: IntersectionNumbers,
}

impl IdempotentSystem {
    /// Wraps two families without checking anything.
    pub fn from_families(e: Vec<Matrix>, estar: Vec<Matrix>) -> Self {
        IdempotentSystem {
            e,
            estar,
            source: None,
        }
    }

    pub fn new(e: Vec<Matrix>, estar: Vec<Matrix>) -> Result<Self> {
        let phi = IdempotentSystem::from_families(e, estar);
        phi.check_axioms().map_err(Error::InvalidSystem)?;
        Ok(phi)
    }

    /// `Φ_R` for a solid `r`.
    pub fn build_phi_r(r: &Matrix) -> Result<Self> {
        if !is_solid(r) {
            return Err(Error::NotSolid);
        }
        let (field, n) = (r.field(), r.size());
        let r_inv = r.inverse()?;
        let e: Vec<Matrix> = (0..n).map(|i| Matrix::unit(field, n, i, i)).collect();
        let estar = (0..n).map(|i| r.conjugate_unit(&r_inv, i)).collect();
        Ok(IdempotentSystem {
            e,
            estar,
            source: Some(r.clone()),
        })
    }

    pub fn e(&self) -> &[Matrix] {
        &self.e
    }

    pub fn estar(&self) -> &[Matrix] {
        &self.estar
    }

    pub fn source_matrix(&self) -> Option<&Matrix> {
        self.source.as_ref()
    }

    pub fn size(&self) -> usize {
        self.e.len()
    }

    pub fn diameter(&self) -> usize {
        self.size().saturating_sub(1)
    }

    pub fn field(&self) -> FieldSpec {
        self.e
            .first()
            .map(Matrix::field)
            .unwrap_or(FieldSpec::Rational)
    }

    /// Describes the first violated axiom, if any.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        check_idempotent_family(&self.e).map_err(|m| format!("first family: {m}"))?;
        check_idempotent_family(&self.estar).map_err(|m| format!("second family: {m}"))?;
        let (e0, es0) = (&self.e[0], &self.estar[0]);
        let n = self.size();
        if self.estar.len() != n || es0.size() != e0.size() || es0.field() != e0.field() {
            return Err("families differ in length, size or field".into());
        }
        let r_data = self
            .source
            .as_ref()
            .map(|r| (r, r.inverse().expect("solid")));
        for i in 0..n {
            let inner = Matrix::product([e0, &self.estar[i], e0]).map_err(|e| e.to_string())?;
            let outer = Matrix::product([es0, &self.e[i], es0]).map_err(|e| e.to_string())?;
            if let Some((r, r_inv)) = &r_data {
                // entrywise criteria for Φ_R
                let inner_expected = !r.get(0, i).is_zero() && !r_inv.get(i, 0).is_zero();
                let outer_expected = !r.get(i, 0).is_zero() && !r_inv.get(0, i).is_zero();
                if inner_expected == inner.is_zero() || outer_expected == outer.is_zero() {
                    return Err(format!(
                        "entry criteria disagree with products at index {i}"
                    ));
                }
            }
            if inner.is_zero() {
                return Err(format!("E_0 E*_{i} E_0 = 0"));
            }
            if outer.is_zero() {
                return Err(format!("E*_0 E_{i} E*_0 = 0"));
            }
        }
        Ok(())
    }

    pub fn verify_axioms(&self) -> bool {
        self.check_axioms().is_ok()
    }

    /// The dual system with the two families swapped.
    pub fn dual(&self) -> IdempotentSystem {
        IdempotentSystem::from_families(self.estar.clone(), self.e.clone())
    }

    /// Image under `A ↦ T·A·T⁻¹`.
    pub fn conjugate(&self, t: &Matrix, t_inv: &Matrix) -> Result<IdempotentSystem> {
        let map = |fam: &[Matrix]| -> Result<Vec<Matrix>> {
            fam.iter().map(|a| a.conjugate(t, t_inv)).collect()
        };
        Ok(IdempotentSystem::from_families(
            map(&self.e)?,
            map(&self.estar)?,
        ))
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        self.check_axioms().map_err(Error::InvalidSystem)?;
        let t = recover_diagonalizer(&self.e)?;
        let t_inv = t.inverse()?;
        let estar = self
            .estar
            .iter()
            .map(|a| a.conjugate(&t_inv, &t))
            .collect::<Result<Vec<_>>>()?;
        let r = recover_diagonalizer(&estar)?;
        Ok(CanonicalForm { conjugator: t, r })
    }

    /// The matrix `M` of the antiautomorphism `A ↦ M·Aᵗ·M⁻¹` fixing every
    /// `E_i` and `E*_i`, or `None` when the system is not symmetric. For a
    /// system in canonical form `M` is the diagonal `K` of `Rᵗ = H·R⁻¹·K`.
    pub fn symmetry_witness(&self) -> Result<Option<Matrix>> {
        let CanonicalForm { conjugator: t, r } = self.canonical_form()?;
        let Some(w) = check_ao(&r)? else {
            return Ok(None);
        };
        let m = Matrix::product([&t, &w.k_matrix(), &t.transpose()])?;
        let fixes_all = self
            .e
            .iter()
            .chain(&self.estar)
            .all(|a| antiautomorphism(&m, a).is_ok_and(|b| b == *a));
        if !fixes_all {
            return Err(Error::InvalidSystem(
                "antiautomorphism from the AO witness does not fix the system".into(),
            ));
        }
        Ok(Some(m))
    }

    pub fn is_symmetric(&self) -> Result<bool> {
        Ok(self.symmetry_witness()?.is_some())
    }

    /// `m_i = tr(E*_0·E_i)` and the size `ν = m_0⁻¹`.
    pub fn multiplicities(&self) -> Result<(Vec<Scalar>, Scalar)> {
        self.check_axioms().map_err(Error::InvalidSystem)?;
        self.multiplicities_of_valid()
    }

    fn multiplicities_of_valid(&self) -> Result<(Vec<Scalar>, Scalar)> {
        let es0 = &self.estar[0];
        let m = self
            .e
            .iter()
            .map(|ei| es0.matmul(ei).map(|x| x.trace()))
            .collect::<Result<Vec<_>>>()?;
        if let Some(i) = m.iter().position(Scalar::is_zero) {
            return Err(Error::DegenerateSystem(i));
        }
        let total = m.iter().fold(self.field().zero(), |acc, x| acc + x);
        if !total.is_one() {
            return Err(Error::InvalidSystem(
                "multiplicities do not sum to 1".into(),
            ));
        }
        let nu = m[0].inv().expect("nonzero");
        Ok((m, nu))
    }

    /// Coordinates of each `A_i` in the basis `{E_j}`, found by solving
    /// `A_i·E*_0·E_0 = E*_i·E_0` over the span of the `E_j`.
    fn a_coordinates(&self) -> Result<Vec<Vec<Scalar>>> {
        self.require_symmetric()?;
        self.a_coordinates_of_symmetric()
    }

    fn require_symmetric(&self) -> Result<()> {
        if self.is_symmetric()? {
            Ok(())
        } else {
            Err(Error::NotSymmetric)
        }
    }

    fn a_coordinates_of_symmetric(&self) -> Result<Vec<Vec<Scalar>>> {
        let n = self.size();
        let es0_e0 = self.estar[0].matmul(&self.e[0])?;
        let columns: Vec<Matrix> = self
            .e
            .iter()
            .map(|ej| ej.matmul(&es0_e0))
            .collect::<Result<_>>()?;
        let coeffs: Vec<Vec<Scalar>> = (0..n * n)
            .map(|idx| {
                columns
                    .iter()
                    .map(|c| c.get(idx / n, idx % n).clone())
                    .collect()
            })
            .collect();
        let coords = (0..n)
            .map(|i| {
                let target = self.estar[i].matmul(&self.e[0])?;
                let rhs: Vec<Scalar> = (0..n * n)
                    .map(|idx| target.get(idx / n, idx % n).clone())
                    .collect();
                match solve(&coeffs, &rhs, n) {
                    Solution::Unique(c) => Ok(c),
                    Solution::Inconsistent => Err(Error::NoSolution(i)),
                    Solution::Underdetermined => Err(Error::NonUnique(i)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if coords[0].iter().any(|c| !c.is_one()) {
            return Err(Error::InvalidSystem("A_0 is not the identity".into()));
        }
        Ok(coords)
    }

    fn combine(&self, coords: &[Scalar]) -> Result<Matrix> {
        let n = self.size();
        self.e
            .iter()
            .zip(coords)
            .try_fold(Matrix::zeros(self.field(), n), |acc, (ej, c)| {
                acc.add(&ej.scale(c))
            })
    }

    /// The basis `{A_i}` of the span of `{E_i}`; `A_0 = I`.
    pub fn compute_a_basis(&self) -> Result<Vec<Matrix>> {
        self.a_coordinates()?
            .iter()
            .map(|c| self.combine(c))
            .collect()
    }

    /// First eigenmatrix `P`: column `j` holds the coordinates of `A_j`.
    pub fn first_eigenmatrix(&self) -> Result<Matrix> {
        self.transition_matrix(&self.a_coordinates()?)
    }

    fn transition_matrix(&self, coords: &[Vec<Scalar>]) -> Result<Matrix> {
        let n = self.size();
        let data = (0..n * n)
            .map(|idx| coords[idx % n][idx / n].clone())
            .collect();
        Matrix::new(self.field(), n, data)
    }

    pub fn eigendata(&self) -> Result<EigendataReport> {
        // the antiautomorphism fixing this system also fixes its dual
        self.require_symmetric()?;
        let dual = self.dual();
        let p = self.transition_matrix(&self.a_coordinates_of_symmetric()?)?;
        let q = dual.transition_matrix(&dual.a_coordinates_of_symmetric()?)?;
        let (m, nu) = self.multiplicities_of_valid()?;
        let (mstar, nu_star) = dual.multiplicities_of_valid()?;
        if nu != nu_star {
            return Err(Error::InvalidSystem(
                "the system and its dual differ in size".into(),
            ));
        }
        let k = mstar.iter().map(|x| &nu * x).collect();
        let kstar = m.iter().map(|x| &nu * x).collect();
        let pnum = IntersectionNumbers::from_eigenmatrix(&p)?;
        Ok(EigendataReport {
            p,
            q,
            nu,
            k,
            kstar,
            m,
            mstar,
            pnum,
        })
    }

    /// Intersection numbers obtained by expanding each `A_i·A_j` in the
    /// `A`-basis directly, independent of the eigenmatrix.
    pub fn intersection_numbers_from_products(&self) -> Result<IntersectionNumbers> {
        let a = self.compute_a_basis()?;
        let n = self.size();
        let field = self.field();
        let coeffs: Vec<Vec<Scalar>> = (0..n * n)
            .map(|idx| {
                a.iter()
                    .map(|ah| ah.get(idx / n, idx % n).clone())
                    .collect()
            })
            .collect();
        let mut expansions = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let prod = a[i].matmul(&a[j])?;
                let rhs: Vec<Scalar> = (0..n * n)
                    .map(|idx| prod.get(idx / n, idx % n).clone())
                    .collect();
                expansions[i][j] = match solve(&coeffs, &rhs, n) {
                    Solution::Unique(c) => c,
                    _ => return Err(Error::InvalidSystem("A_i A_j outside the A-span".into())),
                };
            }
        }
        Ok(IntersectionNumbers::from_fn(field, n, |h, i, j| {
            expansions[i][j][h].clone()
        }))
    }
}

/// `A ↦ M·Aᵗ·M⁻¹`.
pub fn antiautomorphism(m: &Matrix, a: &Matrix) -> Result<Matrix> {
    Matrix::product([m, &a.transpose(), &m.inverse()?])
}

impl EigendataReport {
    pub fn size(&self) -> usize {
        self.p.size()
    }

    fn k_matrix(&self, values: &[Scalar]) -> Matrix {
        Matrix::diagonal(self.p.field(), values).expect("nonempty")
    }

    /// Evaluates every identity the eigendata of a symmetric system obeys.
    pub fn identity_checks(&self) -> Vec<Check> {
        let field = self.p.field();
        let n = self.size();
        let sum = |v: &[Scalar]| v.iter().fold(field.zero(), |acc, x| acc + x);
        let p_inv = self.p.inverse().ok();
        let nu_inv = self.nu.inv().expect("nonzero size");
        let k = self.k_matrix(&self.k);
        let kstar = self.k_matrix(&self.kstar);
        let pq = self.p.matmul(&self.q).ok();
        let lhs = self.p.transpose().matmul(&kstar).ok();
        let rhs = k.matmul(&self.q).ok();
        let border = |f: &dyn Fn(&Matrix) -> bool| p_inv.as_ref().is_some_and(f);
        vec![
            Check::new("k_0 = 1", self.k[0].is_one()),
            Check::new("k*_0 = 1", self.kstar[0].is_one()),
            Check::new("nu = sum of k_i", sum(&self.k) == self.nu),
            Check::new(
                "sum of m_i = 1",
                sum(&self.m).is_one() && sum(&self.mstar).is_one(),
            ),
            Check::new(
                "P Q = nu I",
                pq.is_some_and(|x| x == Matrix::identity(field, n).scale(&self.nu)),
            ),
            Check::new("P^t K* = K Q", lhs.is_some() && lhs == rhs),
            Check::new("P_i0 = 1", (0..n).all(|i| self.p.get(i, 0).is_one())),
            Check::new("P_0j = k_j", (0..n).all(|j| *self.p.get(0, j) == self.k[j])),
            Check::new(
                "(P^-1)_i0 = 1/nu",
                border(&|pi| (0..n).all(|i| *pi.get(i, 0) == nu_inv)),
            ),
            Check::new(
                "(P^-1)_0j = k*_j / nu",
                border(&|pi| (0..n).all(|j| *pi.get(0, j) == &nu_inv * &self.kstar[j])),
            ),
            Check::new(
                "p^0_ij = delta_ij k_i",
                (0..n).all(|i| {
                    (0..n).all(|j| {
                        let expected = if i == j {
                            self.k[i].clone()
                        } else {
                            field.zero()
                        };
                        *self.pnum.get(0, i, j) == expected
                    })
                }),
            ),
            Check::new(
                "k_i k_j = sum_h p^h_ij k_h",
                (0..n).all(|i| {
                    (0..n).all(|j| {
                        let s = (0..n).fold(field.zero(), |acc, h| {
                            acc + self.pnum.get(h, i, j) * &self.k[h]
                        });
                        s == &self.k[i] * &self.k[j]
                    })
                }),
            ),
        ]
    }
}
