//! Exhaustive censuses over prime fields and the standard AON corpus.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::solid::{is_ao, is_normalized, kron};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub matrix: Matrix,
    pub ao: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub d: usize,
    pub p: u64,
    /// Number of candidates searched.
    pub candidates: u128,
    /// Normalized matrices in lexicographic order of their entries.
    pub normalized: Vec<CensusEntry>,
}

impl Census {
    pub fn aon(&self) -> impl Iterator<Item = &Matrix> {
        self.normalized.iter().filter(|e| e.ao).map(|e| &e.matrix)
    }

    pub fn aon_count(&self) -> usize {
        self.aon().count()
    }
}

/// Number of matrices in `Mat_{d+1}(F_p)` with column 0 all ones, or
/// `None` on overflow.
pub fn search_space(d: usize, p: u64) -> Option<u128> {
    let exponent = u32::try_from((d + 1).checked_mul(d)?).ok()?;
    u128::from(p).checked_pow(exponent)
}

/// Every normalized matrix of size `d + 1` over `F_p`, flagging the almost
/// orthogonal ones.
pub fn enumerate(d: usize, p: u64, budget: u128) -> Result<Census> {
    let field = FieldSpec::prime(p)?;
    let needed = search_space(d, p).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let n = d + 1;
    let elements: Vec<Scalar> = field.elements().expect("prime field").collect();
    let mut digits = vec![0usize; n * d];
    let mut normalized = Vec::new();
    loop {
        let data = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                if j == 0 {
                    field.one()
                } else {
                    elements[digits[i * d + j - 1]].clone()
                }
            })
            .collect();
        let m = Matrix::new(field, n, data)?;
        if is_normalized(&m) {
            let ao = is_ao(&m);
            normalized.push(CensusEntry { matrix: m, ao });
        }
        // odometer with the last entry fastest
        let Some(pos) = digits.iter().rposition(|&x| x + 1 < elements.len()) else {
            break;
        };
        digits[pos] += 1;
        digits[pos + 1..].iter_mut().for_each(|x| *x = 0);
    }
    Ok(Census {
        d,
        p,
        candidates: needed,
        normalized,
    })
}

/// `[[1, k], [1, -1]]`.
pub fn d1_member(k: &Scalar) -> Matrix {
    let f = k.field();
    Matrix::from_rows(f, vec![vec![f.one(), k.clone()], vec![f.one(), -f.one()]]).expect("square")
}

/// Rational parameters `k ∉ {0, -1}` used as the standard d=1 corpus.
pub fn rational_d1_parameters() -> Vec<Scalar> {
    let q = FieldSpec::rational();
    let texts = [
        "1", "2", "3", "4", "5", "6", "7", "10", "-2", "-3", "-1/2", "1/2", "1/3", "2/3", "-5/2",
        "7/4", "-4/3", "12", "-7", "100/7",
    ];
    texts.iter().map(|t| q.parse(t).expect("literal")).collect()
}

/// Kronecker products of d=1 members: every ordered pair, and every
/// triple taken in nondecreasing order.
pub fn kron_corpus(field: FieldSpec) -> Vec<Matrix> {
    let ks: Vec<Scalar> = match field {
        FieldSpec::Rational => ["1", "2", "1/2", "-3"]
            .iter()
            .map(|t| field.parse(t).unwrap())
            .collect(),
        FieldSpec::Prime(_) => field
            .elements()
            .expect("prime field")
            .filter(|k| !k.is_zero() && !(k + &field.one()).is_zero())
            .take(3)
            .collect(),
    };
    let members: Vec<Matrix> = ks.iter().map(d1_member).collect();
    let mut out = Vec::new();
    for a in &members {
        for b in &members {
            out.push(kron(a, b).expect("same field"));
        }
    }
    for i in 0..members.len() {
        for j in i..members.len() {
            for l in j..members.len() {
                let ab = kron(&members[i], &members[j]).expect("same field");
                out.push(kron(&ab, &members[l]).expect("same field"));
            }
        }
    }
    out
}
