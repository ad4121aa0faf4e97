//! Univariate polynomials over the base field: characteristic polynomials
//! and roots lying in the field itself.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{is_prime, FieldSpec, Scalar};
use crate::matrix::Matrix;

/// Coefficients from the constant term upward, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(c.field(), vec![c])
    }

    /// `x - a`.
    pub fn linear(a: &Scalar) -> Self {
        let f = a.field();
        Poly::new(f, vec![-a, f.one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_i64(i as i64))
            .collect();
        Poly::new(self.field, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(self.field, vec![]);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = self.field.zero();
        let coeffs = (0..len)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) - other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Poly::new(self.field, coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            Some(lead) => self.scale(&lead.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd]
            .inv()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                for (k, b) in divisor.coeffs.iter().enumerate() {
                    let idx = top - dd + k;
                    rem[idx] = &rem[idx] - &(&c * b);
                }
            }
            quot[top - dd] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Characteristic polynomial `det(xI - A)` via reduction to upper
/// Hessenberg form by similarity transforms.
pub fn charpoly(a: &Matrix) -> Poly {
    let n = a.size();
    let field = a.field();
    let mut h: Vec<Vec<Scalar>> = a.rows().map(<[Scalar]>::to_vec).collect();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let t_inv = h[m][m - 1].inv().expect("nonzero pivot");
        for i in m + 1..n {
            let u = &h[i][m - 1] * &t_inv;
            if u.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = &h[i][j] - &(&u * &h[m][j]);
                h[i][j] = v;
            }
            for row in h.iter_mut() {
                let v = &row[m] + &(&u * &row[i]);
                row[m] = v;
            }
        }
    }
    let mut p = vec![Poly::constant(field.one())];
    for m in 1..=n {
        let mut next = Poly::linear(&h[m - 1][m - 1]).mul(&p[m - 1]);
        let mut t = field.one();
        for i in 1..m {
            t = &t * &h[m - i][m - i - 1];
            let c = &t * &h[m - i - 1][m - 1];
            next = next.sub(&p[m - i - 1].scale(&c));
        }
        p.push(next);
    }
    p.pop().expect("n >= 1")
}

/// The distinct roots of `f` lying in its field, in ascending order.
///
/// Prime fields are searched exhaustively. Over ℚ the square-free part is
/// rescaled to a monic integer polynomial whose integer roots are found by
/// Hensel lifting from a prime of good reduction.
pub fn distinct_roots(f: &Poly) -> Vec<Scalar> {
    assert!(
        !f.is_zero(),
        "the zero polynomial has every element as a root"
    );
    // TODO: for large moduli, extract roots from gcd(f, x^p - x) with
    // equal-degree splitting instead of scanning every residue.
    if let Some(elems) = f.field.elements() {
        return elems.filter(|a| f.eval(a).is_zero()).collect();
    }
    let squarefree = f.div_rem(&f.gcd(&f.derivative())).0.monic();
    let n = squarefree.degree().expect("nonzero");
    if n == 0 {
        return Vec::new();
    }
    let den = squarefree.coeffs.iter().fold(BigInt::one(), |acc, c| {
        acc.lcm(c.as_rational().expect("rational coefficient").denom())
    });
    // g(y) = den^n f(y / den) is monic with integer coefficients.
    let g: Vec<BigInt> = squarefree
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let scaled = c.as_rational().unwrap()
                * num_rational::BigRational::from_integer(num_traits::pow(den.clone(), n - i));
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    let q = FieldSpec::rational();
    let den_q = q.from_bigint(&den);
    let mut roots: Vec<Scalar> = integer_roots(&g)
        .into_iter()
        .map(|y| &q.from_bigint(&y) / &den_q)
        .collect();
    roots.sort_by(|a, b| a.partial_cmp(b).expect("same field"));
    roots
}

fn eval_int(g: &[BigInt], x: &BigInt) -> BigInt {
    g.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn eval_mod(g: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    g.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

/// Integer roots of a monic square-free integer polynomial.
fn integer_roots(g: &[BigInt]) -> Vec<BigInt> {
    if g.len() <= 1 {
        return Vec::new();
    }
    if g[0].is_zero() {
        let mut roots = integer_roots(&g[1..]);
        roots.push(BigInt::zero());
        return roots;
    }
    let bound: BigInt = g.iter().map(|c| c.abs()).max().unwrap() + 1;
    let target = &bound * 2 + 1;
    let dg: Vec<BigInt> = g
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let ell = (2u64..)
        .filter(|&l| is_prime(l))
        .find(|&l| good_reduction(g, l))
        .expect("a square-free polynomial has a prime of good reduction");
    let ell_big = BigInt::from(ell);
    let mut roots = Vec::new();
    for r0 in 0..ell {
        let mut r = BigInt::from(r0);
        if !eval_mod(g, &r, &ell_big).is_zero() {
            continue;
        }
        let mut m = ell_big.clone();
        while m < target {
            m = &m * &m;
            let deriv = eval_mod(&dg, &r, &m);
            let ext = deriv.extended_gcd(&m);
            debug_assert!(ext.gcd.is_one());
            let correction = eval_mod(g, &r, &m) * ext.x;
            r = (r - correction).mod_floor(&m);
        }
        let half = &m / 2;
        let candidate = if r > half { r - &m } else { r };
        if eval_int(g, &candidate).is_zero() {
            roots.push(candidate);
        }
    }
    roots
}

fn good_reduction(g: &[BigInt], ell: u64) -> bool {
    let field = FieldSpec::prime(ell).expect("prime");
    let reduced = Poly::new(field, g.iter().map(|c| field.from_bigint(c)).collect());
    if reduced.degree() != Some(g.len() - 1) {
        return false;
    }
    reduced.gcd(&reduced.derivative()).degree() == Some(0)
}
