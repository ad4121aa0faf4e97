//! Solid, normalized and almost orthogonal matrices, and diagonal
//! equivalence `S = H·R·K` with `H`, `K` invertible diagonal.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// Diagonals of invertible `H` and `K` with `S = H·R·K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalWitness {
    h: Vec<Scalar>,
    k: Vec<Scalar>,
}

impl DiagonalWitness {
    pub fn new(h: Vec<Scalar>, k: Vec<Scalar>) -> Result<Self> {
        if h.len() != k.len() || h.is_empty() {
            return Err(Error::SizeMismatch {
                left: h.len(),
                right: k.len(),
            });
        }
        if h.iter().chain(&k).any(Scalar::is_zero) {
            return Err(Error::Singular);
        }
        if h.iter().chain(&k).any(|x| x.field() != h[0].field()) {
            return Err(Error::FieldMismatch);
        }
        Ok(DiagonalWitness { h, k })
    }

    pub fn trivial(field: FieldSpec, n: usize) -> Self {
        DiagonalWitness {
            h: vec![field.one(); n],
            k: vec![field.one(); n],
        }
    }

    pub fn h(&self) -> &[Scalar] {
        &self.h
    }

    pub fn k(&self) -> &[Scalar] {
        &self.k
    }

    pub fn h_matrix(&self) -> Matrix {
        Matrix::diagonal(self.h[0].field(), &self.h).expect("nonempty")
    }

    pub fn k_matrix(&self) -> Matrix {
        Matrix::diagonal(self.k[0].field(), &self.k).expect("nonempty")
    }

    /// `H·r·K`.
    pub fn apply(&self, r: &Matrix) -> Result<Matrix> {
        if r.size() != self.h.len() {
            return Err(Error::SizeMismatch {
                left: r.size(),
                right: self.h.len(),
            });
        }
        if r.field() != self.h[0].field() {
            return Err(Error::FieldMismatch);
        }
        let n = r.size();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &(&self.h[i] * r.get(i, j)) * &self.k[j])
                    .collect()
            })
            .collect();
        Matrix::from_rows(r.field(), rows)
    }

    /// The witness for `R = H⁻¹·S·K⁻¹`.
    pub fn inverse(&self) -> DiagonalWitness {
        let inv = |v: &[Scalar]| v.iter().map(|x| x.inv().expect("nonzero")).collect();
        DiagonalWitness {
            h: inv(&self.h),
            k: inv(&self.k),
        }
    }

    /// Given `self: R → S` and `then: S → T`, the witness `R → T`.
    pub fn then(&self, then: &DiagonalWitness) -> DiagonalWitness {
        let mul = |a: &[Scalar], b: &[Scalar]| a.iter().zip(b).map(|(x, y)| x * y).collect();
        DiagonalWitness {
            h: mul(&then.h, &self.h),
            k: mul(&self.k, &then.k),
        }
    }
}

/// Flags produced by [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub invertible: bool,
    pub solid: bool,
    pub normalized: bool,
    pub ao: bool,
    pub ao_witness: Option<DiagonalWitness>,
}

fn border_nonzero(m: &Matrix) -> bool {
    let n = m.size();
    (0..n).all(|i| !m.get(0, i).is_zero() && !m.get(i, 0).is_zero())
}

/// Invertible with no zero in row 0 or column 0 of `r` or of `r⁻¹`.
/// Non-invertible input is simply not solid.
pub fn is_solid(r: &Matrix) -> bool {
    border_nonzero(r) && r.inverse().is_ok_and(|inv| border_nonzero(&inv))
}

/// Searches for `(H, K)` with `s = H·r·K`.
///
/// Entries are edges of the bipartite graph on column and row nodes; in each
/// connected component the lowest column (or the lone row, for an all-zero
/// row) gets multiplier 1 and `h_i·k_j = s_ij / r_ij` is propagated along a
/// breadth-first spanning tree. Every entry is then checked.
pub fn diagonal_equivalence(r: &Matrix, s: &Matrix) -> Result<Option<DiagonalWitness>> {
    if r.field() != s.field() {
        return Err(Error::FieldMismatch);
    }
    if r.size() != s.size() {
        return Err(Error::SizeMismatch {
            left: r.size(),
            right: s.size(),
        });
    }
    let n = r.size();
    let field = r.field();
    for i in 0..n {
        for j in 0..n {
            if r.get(i, j).is_zero() != s.get(i, j).is_zero() {
                return Ok(None);
            }
        }
    }
    // node j < n is column j; node n + i is row i
    let mut mult: Vec<Option<Scalar>> = vec![None; 2 * n];
    for start in 0..2 * n {
        if mult[start].is_some() {
            continue;
        }
        mult[start] = Some(field.one());
        let mut queue = VecDeque::from([start]);
        while let Some(node) = queue.pop_front() {
            let here = mult[node].clone().expect("visited");
            for other in 0..n {
                let (i, j, next) = if node < n {
                    (other, node, n + other)
                } else {
                    (node - n, other, other)
                };
                if r.get(i, j).is_zero() || mult[next].is_some() {
                    continue;
                }
                let ratio = s.get(i, j) / r.get(i, j);
                mult[next] = Some(&ratio / &here);
                queue.push_back(next);
            }
        }
    }
    let mult: Vec<Scalar> = mult
        .into_iter()
        .map(|m| m.expect("all nodes visited"))
        .collect();
    let witness = DiagonalWitness::new(mult[n..].to_vec(), mult[..n].to_vec())?;
    Ok((witness.apply(r)? == *s).then_some(witness))
}

/// Solid, column 0 all ones, column 0 of the inverse constant.
pub fn is_normalized(r: &Matrix) -> bool {
    let Ok(inv) = r.inverse() else {
        return false;
    };
    if !border_nonzero(r) || !border_nonzero(&inv) {
        return false;
    }
    let n = r.size();
    (0..n).all(|i| r.get(i, 0).is_one()) && (0..n).all(|i| inv.get(i, 0) == inv.get(0, 0))
}

/// The witness taking a solid `r` to its normalized representative, with
/// `K_{0,0} = 1`.
pub fn normalizing_witness(r: &Matrix) -> Result<DiagonalWitness> {
    if !is_solid(r) {
        return Err(Error::NotSolid);
    }
    let inv = r.inverse()?;
    let n = r.size();
    let h = (0..n).map(|i| r.get(i, 0).inv().expect("solid")).collect();
    let k = (0..n).map(|i| inv.get(i, 0) / inv.get(0, 0)).collect();
    DiagonalWitness::new(h, k)
}

/// The unique normalized matrix diagonally equivalent to a solid `r`.
pub fn normalize(r: &Matrix) -> Result<Matrix> {
    normalizing_witness(r)?.apply(r)
}

/// `Some((H, K))` with `rᵗ = H·r⁻¹·K` when `r` is almost orthogonal.
pub fn check_ao(r: &Matrix) -> Result<Option<DiagonalWitness>> {
    let inv = r.inverse()?;
    diagonal_equivalence(&inv, &r.transpose())
}

pub fn is_ao(r: &Matrix) -> bool {
    matches!(check_ao(r), Ok(Some(_)))
}

/// Almost orthogonal, normalized, solid, invertible.
pub fn is_aon(r: &Matrix) -> bool {
    is_normalized(r) && is_ao(r)
}

pub fn classify(r: &Matrix) -> ClassificationReport {
    let invertible = r.inverse().is_ok();
    let ao_witness = check_ao(r).ok().flatten();
    ClassificationReport {
        invertible,
        solid: is_solid(r),
        normalized: is_normalized(r),
        ao: ao_witness.is_some(),
        ao_witness,
    }
}

/// Kronecker product with row-major block order.
pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let (na, nb) = (a.size(), b.size());
    let n = na * nb;
    let data = (0..n * n)
        .map(|idx| {
            let (row, col) = (idx / n, idx % n);
            a.get(row / nb, col / nb) * b.get(row % nb, col % nb)
        })
        .collect();
    Matrix::new(a.field(), n, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn m(rows: &[[i64; 2]]) -> Matrix {
        Matrix::from_ints(q(), rows).unwrap()
    }

    fn non_ao() -> Matrix {
        Matrix::from_ints(q(), &[[1, 1, 1], [1, 2, 1], [1, 1, 2]]).unwrap()
    }

    #[test]
    fn solid_examples() {
        assert!(!is_solid(&Matrix::identity(q(), 2)));
        assert!(is_solid(&m(&[[1, 2], [1, -1]])));
        assert!(!is_solid(&m(&[[1, 1], [0, 1]])));
        assert!(!is_solid(&m(&[[1, 1], [1, 1]])));
    }

    #[test]
    fn equivalence_with_itself_is_trivial() {
        let r = m(&[[1, 1], [1, -1]]);
        let w = diagonal_equivalence(&r, &r).unwrap().unwrap();
        assert_eq!(w, DiagonalWitness::trivial(q(), 2));
    }

    #[test]
    fn equivalence_recovers_scaling() {
        let r = m(&[[1, 1], [1, -1]]);
        let s = Matrix::parse(q(), &[["2", "3"], ["1", "-3/2"]]).unwrap();
        let w = diagonal_equivalence(&r, &s).unwrap().unwrap();
        let two = q().from_i64(2);
        let three_halves = q().from_ratio(3, 2).unwrap();
        assert_eq!(w.h(), &[two, q().one()]);
        assert_eq!(w.k(), &[q().one(), three_halves]);
        let hrk = Matrix::product([&w.h_matrix(), &r, &w.k_matrix()]).unwrap();
        assert_eq!(hrk, s);
    }

    #[test]
    fn equivalence_fails_on_cycle_ratio() {
        // 2x2 oracle: S ~ R iff s00·s11·r01·r10 = s01·s10·r00·r11 (all nonzero)
        let r = m(&[[1, 1], [1, -1]]);
        let s = m(&[[1, 1], [1, 1]]);
        let lhs = s.get(0, 0) * s.get(1, 1) * r.get(0, 1) * r.get(1, 0);
        let rhs = s.get(0, 1) * s.get(1, 0) * r.get(0, 0) * r.get(1, 1);
        assert_ne!(lhs, rhs);
        assert_eq!(diagonal_equivalence(&r, &s).unwrap(), None);
    }

    #[test]
    fn equivalence_needs_matching_zero_pattern() {
        let r = m(&[[1, 0], [1, 1]]);
        let s = m(&[[1, 1], [1, 1]]);
        assert_eq!(diagonal_equivalence(&r, &s).unwrap(), None);
        // Disconnected components: each anchored independently.
        let r = m(&[[2, 0], [0, 3]]);
        let s = m(&[[5, 0], [0, 7]]);
        let w = diagonal_equivalence(&r, &s).unwrap().unwrap();
        assert_eq!(w.apply(&r).unwrap(), s);
    }

    #[test]
    fn equivalence_checks_operands() {
        let r = m(&[[1, 1], [1, -1]]);
        let f3 = FieldSpec::prime(3).unwrap();
        let s = Matrix::identity(f3, 2);
        assert_eq!(diagonal_equivalence(&r, &s), Err(Error::FieldMismatch));
    }

    #[test]
    fn normalized_examples() {
        assert!(is_normalized(&m(&[[1, 2], [1, -1]])));
        assert!(!is_normalized(&m(&[[2, 2], [2, -2]])));
        // Over F_3, [[1,1],[1,-1]] = [[1,1],[1,2]] has inverse [[2,2],[2,1]].
        let f3 = FieldSpec::prime(3).unwrap();
        let r = Matrix::from_ints(f3, &[[1, 1], [1, -1]]).unwrap();
        let inv = r.inverse().unwrap();
        assert_eq!(inv, Matrix::from_ints(f3, &[[2, 2], [2, 1]]).unwrap());
        assert!(is_normalized(&r));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize(&m(&[[2, 2], [2, -2]])).unwrap(),
            m(&[[1, 1], [1, -1]])
        );
        let r = m(&[[1, 2], [3, -3]]);
        let w = normalizing_witness(&r).unwrap();
        let third = q().from_ratio(1, 3).unwrap();
        assert_eq!(w.h(), &[q().one(), third]);
        assert_eq!(w.k(), &[q().one(), q().one()]);
        let p = m(&[[1, 2], [1, -1]]);
        assert_eq!(normalize(&r).unwrap(), p);
        assert_eq!(normalize(&p).unwrap(), p);
        assert_eq!(normalize(&Matrix::identity(q(), 2)), Err(Error::NotSolid));
    }

    #[test]
    fn ao_examples() {
        let p = m(&[[1, 2], [1, -1]]);
        let w = check_ao(&p).unwrap().unwrap();
        let rebuilt = w.apply(&p.inverse().unwrap()).unwrap();
        assert_eq!(rebuilt, p.transpose());
        // From Pᵗ K* = ν K P⁻¹: Pᵗ = (νK) P⁻¹ (K*)⁻¹ with K = K* = diag(1, 2), ν = 3.
        let alt = DiagonalWitness::new(
            vec![q().from_i64(3), q().from_i64(6)],
            vec![q().one(), q().from_ratio(1, 2).unwrap()],
        )
        .unwrap();
        assert_eq!(alt.apply(&p.inverse().unwrap()).unwrap(), p.transpose());

        let r = non_ao();
        let inv = r.inverse().unwrap();
        assert_eq!(
            inv,
            Matrix::from_ints(q(), &[[3, -1, -1], [-1, 1, 0], [-1, 0, 1]]).unwrap()
        );
        assert_eq!(check_ao(&r).unwrap(), None);

        let one = Matrix::identity(q(), 1);
        assert_eq!(
            check_ao(&one).unwrap(),
            Some(DiagonalWitness::trivial(q(), 1))
        );
        assert_eq!(check_ao(&m(&[[1, 1], [1, 1]])), Err(Error::Singular));
    }

    #[test]
    fn classify_examples() {
        let rep = classify(&m(&[[1, 2], [1, -1]]));
        assert!(rep.invertible && rep.solid && rep.normalized && rep.ao);
        assert!(rep.ao_witness.is_some());

        let rep = classify(&Matrix::identity(q(), 3));
        assert!(rep.invertible && !rep.solid && !rep.normalized && rep.ao);

        let rep = classify(&Matrix::zeros(q(), 2));
        assert_eq!(
            rep,
            ClassificationReport {
                invertible: false,
                solid: false,
                normalized: false,
                ao: false,
                ao_witness: None
            }
        );

        let rep = classify(&non_ao());
        assert!(rep.solid && !rep.ao && !rep.normalized);
    }

    #[test]
    fn kron_examples() {
        let b = m(&[[1, 2], [1, -1]]);
        assert_eq!(kron(&Matrix::identity(q(), 1), &b).unwrap(), b);
        let h = m(&[[1, 1], [1, -1]]);
        let hh = kron(&h, &h).unwrap();
        assert_eq!(hh.size(), 4);
        assert!(is_normalized(&hh) && is_ao(&hh));
        let d = Matrix::unit(q(), 2, 0, 0);
        assert_eq!(kron(&d, &d).unwrap(), Matrix::unit(q(), 4, 0, 0));
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(
            kron(&d, &Matrix::identity(f3, 2)),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn witness_composition() {
        let r = m(&[[1, 2], [1, -1]]);
        let w1 = DiagonalWitness::new(
            vec![q().from_i64(2), q().from_i64(3)],
            vec![q().from_i64(5), q().one()],
        )
        .unwrap();
        let w2 = DiagonalWitness::new(
            vec![q().from_i64(-1), q().from_i64(7)],
            vec![q().one(), q().from_i64(4)],
        )
        .unwrap();
        let s = w1.apply(&r).unwrap();
        let t = w2.apply(&s).unwrap();
        assert_eq!(w1.then(&w2).apply(&r).unwrap(), t);
        assert_eq!(w1.inverse().apply(&s).unwrap(), r);
        assert!(DiagonalWitness::new(vec![q().zero()], vec![q().one()]).is_err());
    }
}
