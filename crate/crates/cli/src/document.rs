//! JSON documents exchanged by the command-line tool.
//!
//! Scalars are always strings in the exact-scalar grammar (`-3`, `5/2`), so
//! nothing passes through floating point.

use idemsys::character::{CharacterAlgebra, IntersectionNumbers};
use idemsys::field::{FieldSpec, Scalar};
use idemsys::matrix::Matrix;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldDescriptor {
    Rational,
    Prime { p: u64 },
}

impl FieldDescriptor {
    pub fn spec(&self) -> Result<FieldSpec, CliError> {
        match *self {
            FieldDescriptor::Rational => Ok(FieldSpec::rational()),
            FieldDescriptor::Prime { p } => FieldSpec::prime(p).map_err(CliError::parse),
        }
    }
}

impl From<FieldSpec> for FieldDescriptor {
    fn from(f: FieldSpec) -> Self {
        match f.modulus() {
            None => FieldDescriptor::Rational,
            Some(p) => FieldDescriptor::Prime { p },
        }
    }
}

pub fn scalars_to_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

pub fn matrix_entries(m: &Matrix) -> Vec<Vec<String>> {
    m.rows().map(scalars_to_strings).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub field: FieldDescriptor,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &Matrix) -> Self {
        MatrixDocument {
            field: m.field().into(),
            entries: matrix_entries(m),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix, CliError> {
        let field = self.field.spec()?;
        let n = self.entries.len();
        if n == 0 {
            return Err(CliError::Parse("matrix has no rows".into()));
        }
        if let Some(i) = self.entries.iter().position(|r| r.len() != n) {
            return Err(CliError::Parse(format!(
                "row {i} does not have {n} entries"
            )));
        }
        Matrix::parse(field, &self.entries).map_err(CliError::parse)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub field: FieldDescriptor,
    pub d: usize,
    /// `pnum[h][i][j] = p^h_{ij}`.
    pub pnum: Vec<Vec<Vec<String>>>,
}

impl AlgebraDocument {
    pub fn from_algebra(a: &CharacterAlgebra) -> Self {
        let pnum = a
            .pnum()
            .to_nested()
            .iter()
            .map(|plane| plane.iter().map(|row| scalars_to_strings(row)).collect())
            .collect();
        AlgebraDocument {
            field: a.field().into(),
            d: a.diameter(),
            pnum,
        }
    }

    /// Parses the structure constants. Axioms are checked separately.
    pub fn to_intersection_numbers(&self) -> Result<IntersectionNumbers, CliError> {
        let field = self.field.spec()?;
        let n = self.d + 1;
        let shape_ok = self.pnum.len() == n
            && self
                .pnum
                .iter()
                .all(|plane| plane.len() == n && plane.iter().all(|row| row.len() == n));
        if !shape_ok {
            return Err(CliError::Parse(format!("pnum must be a {n}x{n}x{n} array")));
        }
        let nested = self
            .pnum
            .iter()
            .map(|plane| {
                plane
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|s| field.parse(s))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(CliError::parse)?;
        IntersectionNumbers::from_nested(field, nested).map_err(CliError::parse)
    }
}
