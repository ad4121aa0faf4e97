//! Character algebras given by structure constants, and character systems.
//!
//! A character algebra has a basis `x_0 = 1, x_1, …, x_d` with
//! `x_i·x_j = Σ_h p^h_{ij}·x_h`, valencies `k_i = p^0_{ii}`, and the trivial
//! character `φ(x_i) = k_i`. A character system adds the primitive
//! idempotents `e_0, …, e_d` with `e_0` carried by `φ`; the first eigenmatrix
//! `P` is the transition matrix from `{e_j}` to `{x_j}`.

use std::cmp::Ordering;

use crate::error::{Axiom, Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::poly::{charpoly, distinct_roots};
use crate::solid::is_aon;
use crate::verify::Check;

/// Structure constants `p^h_{ij}` indexed as `get(h, i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionNumbers {
    field: FieldSpec,
    n: usize,
    data: Vec<Scalar>,
}

impl IntersectionNumbers {
    pub fn from_fn(
        field: FieldSpec,
        n: usize,
        mut f: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for h in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let x = f(h, i, j);
                    assert_eq!(x.field(), field, "structure constant across fields");
                    data.push(x);
                }
            }
        }
        IntersectionNumbers { field, n, data }
    }

    /// From nested arrays in `[h][i][j]` order.
    pub fn from_nested(field: FieldSpec, nested: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let n = nested.len();
        if n == 0 {
            return Err(Error::AxiomViolation(Axiom::Shape));
        }
        let mut data = Vec::with_capacity(n * n * n);
        for plane in nested {
            if plane.len() != n {
                return Err(Error::AxiomViolation(Axiom::Shape));
            }
            for row in plane {
                if row.len() != n {
                    return Err(Error::AxiomViolation(Axiom::Shape));
                }
                for x in row {
                    if x.field() != field {
                        return Err(Error::FieldMismatch);
                    }
                    data.push(x);
                }
            }
        }
        Ok(IntersectionNumbers { field, n, data })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.n)
            .map(|h| {
                (0..self.n)
                    .map(|i| (0..self.n).map(|j| self.get(h, i, j).clone()).collect())
                    .collect()
            })
            .collect()
    }

    /// `p^h_{ij} = Σ_r (P⁻¹)_{h,r}·P_{r,i}·P_{r,j}`.
    pub fn from_eigenmatrix(p: &Matrix) -> Result<Self> {
        let p_inv = p.inverse()?;
        let field = p.field();
        Ok(IntersectionNumbers::from_fn(field, p.size(), |h, i, j| {
            (0..p.size()).fold(field.zero(), |acc, r| {
                acc + p_inv.get(h, r) * p.get(r, i) * p.get(r, j)
            })
        }))
    }

    pub fn get(&self, h: usize, i: usize, j: usize) -> &Scalar {
        &self.data[(h * self.n + i) * self.n + j]
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.n - 1
    }

    /// `k_i = p^0_{ii}`.
    pub fn valencies(&self) -> Vec<Scalar> {
        (0..self.n).map(|i| self.get(0, i, i).clone()).collect()
    }

    /// Matrix of multiplication by `x_i`: column `j` holds `x_i·x_j`.
    pub fn left_multiplication(&self, i: usize) -> Matrix {
        let data = (0..self.n * self.n)
            .map(|idx| self.get(idx / self.n, i, idx % self.n).clone())
            .collect();
        Matrix::new(self.field, self.n, data).expect("square")
    }
}

/// Reports the first axiom `pnum` violates.
pub fn check_axioms(pnum: &IntersectionNumbers) -> std::result::Result<(), Axiom> {
    let (n, field) = (pnum.size(), pnum.field());
    let delta = |a: usize, b: usize| if a == b { field.one() } else { field.zero() };
    let all3 = |f: &dyn Fn(usize, usize, usize) -> bool| {
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| f(a, b, c))))
    };
    let identity = (0..n).all(|h| {
        (0..n).all(|j| *pnum.get(h, 0, j) == delta(h, j) && *pnum.get(h, j, 0) == delta(h, j))
    });
    if !identity {
        return Err(Axiom::Identity);
    }
    if !all3(&|h, i, j| pnum.get(h, i, j) == pnum.get(h, j, i)) {
        return Err(Axiom::Commutativity);
    }
    // (x_i x_j) x_l = x_i (x_j x_l), coefficient of x_h
    let assoc = (0..n).all(|h| {
        all3(&|i, j, l| {
            let lhs = (0..n).fold(field.zero(), |a, m| {
                a + pnum.get(m, i, j) * pnum.get(h, m, l)
            });
            let rhs = (0..n).fold(field.zero(), |a, m| {
                a + pnum.get(m, j, l) * pnum.get(h, i, m)
            });
            lhs == rhs
        })
    });
    if !assoc {
        return Err(Axiom::Associativity);
    }
    let k = pnum.valencies();
    let trivial = k.iter().all(|x| !x.is_zero())
        && (0..n).all(|i| (0..n).all(|j| i == j || pnum.get(0, i, j).is_zero()));
    if !trivial {
        return Err(Axiom::TrivialCoefficients);
    }
    let hom = (0..n).all(|i| {
        (0..n).all(|j| {
            let s = (0..n).fold(field.zero(), |a, h| a + pnum.get(h, i, j) * &k[h]);
            s == &k[i] * &k[j]
        })
    });
    if !hom {
        return Err(Axiom::Homomorphism);
    }
    Ok(())
}

pub fn verify_character_axioms(pnum: &IntersectionNumbers) -> bool {
    check_axioms(pnum).is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterAlgebra {
    pnum: IntersectionNumbers,
}

impl CharacterAlgebra {
    pub fn new(pnum: IntersectionNumbers) -> Result<Self> {
        check_axioms(&pnum).map_err(Error::AxiomViolation)?;
        Ok(CharacterAlgebra { pnum })
    }

    /// The algebra with `p^0_{11} = k` and `p^1_{11} = k - 1`.
    pub fn d1(k: &Scalar) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::ZeroK);
        }
        let field = k.field();
        let pnum = IntersectionNumbers::from_fn(field, 2, |h, i, j| match (h, i, j) {
            (0, 1, 1) => k.clone(),
            (1, 1, 1) => k - &field.one(),
            (h, 0, x) | (h, x, 0) if h == x => field.one(),
            _ => field.zero(),
        });
        CharacterAlgebra::new(pnum)
    }

    pub fn pnum(&self) -> &IntersectionNumbers {
        &self.pnum
    }

    pub fn field(&self) -> FieldSpec {
        self.pnum.field()
    }

    pub fn size(&self) -> usize {
        self.pnum.size()
    }

    pub fn diameter(&self) -> usize {
        self.pnum.diameter()
    }

    pub fn valencies(&self) -> Vec<Scalar> {
        self.pnum.valencies()
    }

    /// `ν = Σ k_i`.
    pub fn size_parameter(&self) -> Scalar {
        self.valencies()
            .iter()
            .fold(self.field().zero(), |a, x| a + x)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let f = self.field();
        (0..self.size())
            .map(|j| if i == j { f.one() } else { f.zero() })
            .collect()
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.size();
        let f = self.field();
        (0..n)
            .map(|h| {
                let mut acc = f.zero();
                for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                        acc = acc + ui * vj * self.pnum.get(h, i, j);
                    }
                }
                acc
            })
            .collect()
    }

    /// `φ(u) = Σ u_i·k_i`.
    pub fn trivial_character(&self, u: &[Scalar]) -> Scalar {
        u.iter()
            .zip(self.valencies())
            .fold(self.field().zero(), |a, (x, k)| a + x * &k)
    }

    /// `⟨u, v⟩ = Σ u_i·v_i·k_i`.
    pub fn form(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let k = self.valencies();
        (0..self.size()).fold(self.field().zero(), |a, i| a + &u[i] * &v[i] * &k[i])
    }

    fn multiplication_by(&self, u: &[Scalar]) -> Matrix {
        let (f, n) = (self.field(), self.size());
        u.iter()
            .enumerate()
            .fold(Matrix::zeros(f, n), |acc, (i, c)| {
                acc.add(&self.pnum.left_multiplication(i).scale(c))
                    .expect("same shape")
            })
    }

    /// Splits the algebra into its primitive idempotents and returns the
    /// resulting character system. Each current block idempotent `e` is
    /// refined along the eigenspaces of multiplication by `x_i·e`, for every
    /// `i` in turn; the algebra is split semisimple exactly when these
    /// refinements reach `d + 1` blocks.
    pub fn semisimple_decompose(&self) -> Result<CharacterSystem> {
        let (f, n) = (self.field(), self.size());
        let mut blocks = vec![self.basis_vector(0)];
        for i in 1..n {
            if blocks.len() == n {
                break;
            }
            let xi = self.basis_vector(i);
            let mut refined = Vec::new();
            for e in &blocks {
                let m = self.multiplication_by(&self.multiply(&xi, e));
                let roots = distinct_roots(&charpoly(&m));
                let shifted: Vec<Matrix> = roots
                    .iter()
                    .map(|l| m.sub(&Matrix::identity(f, n).scale(l)).expect("square"))
                    .collect();
                let annihilates = Matrix::product(&shifted)
                    .map(|x| x.is_zero())
                    .unwrap_or(false);
                if !annihilates {
                    return Err(Error::NotSplitSemisimple);
                }
                for (a, la) in roots.iter().enumerate() {
                    let mut v = e.clone();
                    for (b, lb) in roots.iter().enumerate().filter(|(b, _)| *b != a) {
                        let denom = (la - lb).inv().expect("distinct roots");
                        v = shifted[b].apply(&v).iter().map(|x| x * &denom).collect();
                    }
                    if v.iter().any(|x| !x.is_zero()) {
                        refined.push(v);
                    }
                }
            }
            blocks = refined;
        }
        if blocks.len() != n {
            return Err(Error::NotSplitSemisimple);
        }
        let trivial = blocks
            .iter()
            .position(|e| self.trivial_character(e).is_one())
            .ok_or(Error::NotSplitSemisimple)?;
        let e0 = blocks.remove(trivial);
        blocks.sort_by(|a, b| lex_cmp(a, b));
        blocks.insert(0, e0);
        let data = (0..n * n)
            .map(|idx| blocks[idx % n][idx / n].clone())
            .collect();
        let p = Matrix::new(f, n, data)?.inverse()?;
        CharacterSystem::new(self.clone(), p)
    }
}

fn lex_cmp(a: &[Scalar], b: &[Scalar]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.partial_cmp(y).expect("same field"))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// The d=1 character algebra with parameter `k`.
pub fn build_d1_algebra(k: &Scalar) -> Result<CharacterAlgebra> {
    CharacterAlgebra::d1(k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSystem {
    algebra: CharacterAlgebra,
    p: Matrix,
    p_inv: Matrix,
}

/// Gram matrices of `⟨x_i, x_j⟩ = δ_{ij}·k_i` in both bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearFormTable {
    pub gram_x: Matrix,
    pub gram_e: Matrix,
    /// `⟨x_i, e_j⟩`.
    pub mixed: Matrix,
    pub nu: Scalar,
    pub m: Vec<Scalar>,
    pub kstar: Vec<Scalar>,
}

impl CharacterSystem {
    /// Pairs an algebra with the eigenmatrix `p`. Every row of `p` must be a
    /// character `x_j ↦ P_{r,j}`, row 0 the trivial one; the columns of `p⁻¹`
    /// are then the primitive idempotents `e_0, …, e_d`.
    pub fn new(algebra: CharacterAlgebra, p: Matrix) -> Result<Self> {
        let n = algebra.size();
        if p.size() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: p.size(),
            });
        }
        if p.field() != algebra.field() {
            return Err(Error::FieldMismatch);
        }
        let p_inv = p.inverse()?;
        let pnum = algebra.pnum();
        let f = algebra.field();
        for r in 0..n {
            let theta = p.row(r);
            if !theta[0].is_one() {
                return Err(Error::InvalidCharacterSystem(format!(
                    "row {r} does not fix 1"
                )));
            }
            for i in 1..n {
                for j in i..n {
                    let image = (0..n).fold(f.zero(), |a, h| a + pnum.get(h, i, j) * &theta[h]);
                    if image != &theta[i] * &theta[j] {
                        return Err(Error::InvalidCharacterSystem(format!(
                            "row {r} is not multiplicative on x_{i} x_{j}"
                        )));
                    }
                }
            }
        }
        if p.row(0) != algebra.valencies().as_slice() {
            return Err(Error::InvalidCharacterSystem(
                "row 0 is not the trivial character".into(),
            ));
        }
        Ok(CharacterSystem { algebra, p, p_inv })
    }

    pub fn algebra(&self) -> &CharacterAlgebra {
        &self.algebra
    }

    pub fn eigenmatrix(&self) -> &Matrix {
        &self.p
    }

    pub fn eigenmatrix_inverse(&self) -> &Matrix {
        &self.p_inv
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn size(&self) -> usize {
        self.algebra.size()
    }

    /// Coordinates of `e_j` in the `x`-basis.
    pub fn idempotent(&self, j: usize) -> Vec<Scalar> {
        self.p_inv.column(j)
    }

    pub fn nu(&self) -> Scalar {
        self.algebra.size_parameter()
    }

    /// `k*_j = ν·(P⁻¹)_{0,j}`.
    pub fn dual_valencies(&self) -> Vec<Scalar> {
        let nu = self.nu();
        self.p_inv.row(0).iter().map(|x| &nu * x).collect()
    }

    pub fn bilinear_form(&self) -> Result<BilinearFormTable> {
        let (f, n) = (self.field(), self.size());
        let a = &self.algebra;
        let x: Vec<_> = (0..n).map(|i| a.basis_vector(i)).collect();
        let e: Vec<_> = (0..n).map(|j| self.idempotent(j)).collect();
        let gram = |u: &[Vec<Scalar>], v: &[Vec<Scalar>]| {
            let data = (0..n * n)
                .map(|idx| a.form(&u[idx / n], &v[idx % n]))
                .collect();
            Matrix::new(f, n, data).expect("square")
        };
        let gram_e = gram(&e, &e);
        let m = gram_e.diagonal_entries();
        if let Some(j) = m.iter().position(Scalar::is_zero) {
            return Err(Error::DegenerateForm(j));
        }
        Ok(BilinearFormTable {
            gram_x: gram(&x, &x),
            gram_e,
            mixed: gram(&x, &e),
            nu: self.nu(),
            m,
            kstar: self.dual_valencies(),
        })
    }

    /// Evaluates the identities the form obeys on this system.
    pub fn form_checks(&self) -> Result<Vec<Check>> {
        let table = self.bilinear_form()?;
        let (f, n) = (self.field(), self.size());
        let a = &self.algebra;
        let k = a.valencies();
        let nu = &table.nu;
        let nu_inv = nu.inv().ok_or(Error::NotSplitSemisimple)?;
        let x: Vec<_> = (0..n).map(|i| a.basis_vector(i)).collect();
        let e: Vec<_> = (0..n).map(|j| self.idempotent(j)).collect();
        let mut probes = x.clone();
        probes.extend(e.iter().cloned());
        let sum_x: Vec<Scalar> = vec![f.one(); n];
        let nu_e0: Vec<Scalar> = e[0].iter().map(|c| nu * c).collect();
        let delta_all = |g: &Matrix, d: &dyn Fn(usize) -> Scalar| {
            (0..n).all(|i| (0..n).all(|j| *g.get(i, j) == if i == j { d(i) } else { f.zero() }))
        };
        Ok(vec![
            Check::new(
                "<x_i, x_j> = delta_ij k_i",
                delta_all(&table.gram_x, &|i| k[i].clone()),
            ),
            Check::new(
                "<u, v> = <uv, x_0>",
                x.iter().all(|u| {
                    x.iter()
                        .all(|v| a.form(u, v) == a.form(&a.multiply(u, v), &x[0]))
                }),
            ),
            Check::new(
                "<e_i, e_j> = delta_ij m_i",
                delta_all(&table.gram_e, &|i| table.m[i].clone()),
            ),
            Check::new(
                "m_j = k*_j / nu",
                (0..n).all(|j| table.m[j] == &table.kstar[j] * &nu_inv),
            ),
            Check::new(
                "<x_i, e_j> = P_ji k*_j / nu",
                (0..n).all(|i| {
                    (0..n).all(|j| {
                        *table.mixed.get(i, j) == &nu_inv * self.p.get(j, i) * &table.kstar[j]
                    })
                }),
            ),
            Check::new(
                "<x_i, e_j> = k_i (P^-1)_ij",
                (0..n).all(|i| {
                    (0..n).all(|j| *table.mixed.get(i, j) == &k[i] * self.p_inv.get(i, j))
                }),
            ),
            Check::new(
                "phi(u) = nu <u, e_0>",
                probes
                    .iter()
                    .all(|u| a.trivial_character(u) == nu * &a.form(u, &e[0])),
            ),
            Check::new("sum of x_i = nu e_0", sum_x == nu_e0),
        ])
    }
}

/// `Ψ_P` for a normalized almost orthogonal `p`.
pub fn build_psi_p(p: &Matrix) -> Result<CharacterSystem> {
    if !is_aon(p) {
        return Err(Error::NotAON);
    }
    let algebra = CharacterAlgebra::new(IntersectionNumbers::from_eigenmatrix(p)?)?;
    CharacterSystem::new(algebra, p.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn s(text: &str) -> Scalar {
        q().parse(text).unwrap()
    }

    #[test]
    fn d1_structure_constants() {
        let a = CharacterAlgebra::d1(&s("2")).unwrap();
        assert_eq!(a.pnum().get(0, 1, 1), &s("2"));
        assert_eq!(a.pnum().get(1, 1, 1), &s("1"));
        assert_eq!(a.valencies(), vec![s("1"), s("2")]);
        assert_eq!(CharacterAlgebra::d1(&s("0")), Err(Error::ZeroK));
    }

    #[test]
    fn d1_eigenmatrix() {
        for k in ["2", "3", "5", "-1/2", "7/3"] {
            let k = s(k);
            let cs = CharacterAlgebra::d1(&k)
                .unwrap()
                .semisimple_decompose()
                .unwrap();
            let expected =
                Matrix::from_rows(q(), vec![vec![s("1"), k.clone()], vec![s("1"), s("-1")]])
                    .unwrap();
            assert_eq!(cs.eigenmatrix(), &expected);
            let inv = expected.scale(&(&k + &s("1")).inv().unwrap());
            assert_eq!(cs.eigenmatrix_inverse(), &inv);
        }
    }

    #[test]
    fn d1_minus_one_is_not_semisimple() {
        let a = CharacterAlgebra::d1(&s("-1")).unwrap();
        assert_eq!(a.semisimple_decompose(), Err(Error::NotSplitSemisimple));
    }

    #[test]
    fn d1_over_f2_is_not_semisimple() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = CharacterAlgebra::d1(&f2.one()).unwrap();
        assert_eq!(a.semisimple_decompose(), Err(Error::NotSplitSemisimple));
    }

    #[test]
    fn trivial_algebra() {
        let pnum = IntersectionNumbers::from_fn(q(), 1, |_, _, _| q().one());
        let cs = CharacterAlgebra::new(pnum)
            .unwrap()
            .semisimple_decompose()
            .unwrap();
        assert_eq!(cs.eigenmatrix(), &Matrix::identity(q(), 1));
    }

    #[test]
    fn axiom_violations_are_named() {
        let base = CharacterAlgebra::d1(&s("3")).unwrap().pnum().clone();
        let tweak = |h0, i0, j0, v: &str| {
            IntersectionNumbers::from_fn(q(), 2, |h, i, j| {
                if (h, i, j) == (h0, i0, j0) {
                    s(v)
                } else {
                    base.get(h, i, j).clone()
                }
            })
        };
        assert_eq!(check_axioms(&tweak(1, 0, 1, "2")), Err(Axiom::Identity));
        assert_eq!(check_axioms(&tweak(1, 1, 1, "5")), Err(Axiom::Homomorphism));
        assert_eq!(check_axioms(&base), Ok(()));
        assert!(verify_character_axioms(&base));

        let non_comm = IntersectionNumbers::from_fn(q(), 3, |h, i, j| match (h, i, j) {
            (h, 0, x) | (h, x, 0) if h == x => q().one(),
            (0, 1, 1) | (0, 2, 2) => q().one(),
            (2, 1, 2) => q().one(),
            _ => q().zero(),
        });
        assert_eq!(check_axioms(&non_comm), Err(Axiom::Commutativity));
    }

    #[test]
    fn psi_p_matches_d1_algebra() {
        let p = Matrix::from_ints(q(), &[[1, 3], [1, -1]]).unwrap();
        let cs = build_psi_p(&p).unwrap();
        assert_eq!(cs.algebra(), &CharacterAlgebra::d1(&s("3")).unwrap());
        assert_eq!(cs.nu(), s("4"));
        assert_eq!(
            build_psi_p(&Matrix::from_ints(q(), &[[1, 1], [1, 2]]).unwrap()),
            Err(Error::NotAON)
        );
    }

    #[test]
    fn decomposition_with_more_idempotents_than_field_elements() {
        let f3 = FieldSpec::prime(3).unwrap();
        let h = Matrix::from_ints(f3, &[[1, 1], [1, -1]]).unwrap();
        let p = crate::solid::kron(&h, &h).unwrap();
        let cs = build_psi_p(&p).unwrap();
        let again = cs.algebra().semisimple_decompose().unwrap();
        // primitive idempotents agree up to the order of e_1, ..., e_d
        let mut rows: Vec<Vec<String>> = again
            .eigenmatrix()
            .rows()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        let mut expected: Vec<Vec<String>> = p
            .rows()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        assert_eq!(rows[0], expected[0]);
        rows.sort();
        expected.sort();
        assert_eq!(rows, expected);
    }

    #[test]
    fn bilinear_form_checks_on_d1() {
        let cs = CharacterAlgebra::d1(&s("5"))
            .unwrap()
            .semisimple_decompose()
            .unwrap();
        let table = cs.bilinear_form().unwrap();
        assert_eq!(
            table.gram_x,
            Matrix::diagonal(q(), &[s("1"), s("5")]).unwrap()
        );
        assert_eq!(table.m, vec![s("1/6"), s("5/6")]);
        for c in cs.form_checks().unwrap() {
            assert!(c.passed(), "{}", c.name);
        }
    }

    #[test]
    fn nested_round_trip() {
        let a = CharacterAlgebra::d1(&s("2")).unwrap();
        let nested = a.pnum().to_nested();
        assert_eq!(nested[0][1][1], s("2"));
        assert_eq!(
            IntersectionNumbers::from_nested(q(), nested).unwrap(),
            *a.pnum()
        );
        assert_eq!(
            IntersectionNumbers::from_nested(q(), vec![vec![vec![s("1")], vec![]]]),
            Err(Error::AxiomViolation(Axiom::Shape))
        );
    }
}
