use std::fmt;

use thiserror::Error;

/// Axioms of a character algebra given by structure constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `x_0` is the multiplicative identity.
    Identity,
    /// `p^h_{ij} = p^h_{ji}`.
    Commutativity,
    /// The structure constants define an associative product.
    Associativity,
    /// `p^0_{ij} = δ_{ij} k_i` with every `k_i` nonzero.
    TrivialCoefficients,
    /// `x_i ↦ k_i` extends to an algebra homomorphism.
    Homomorphism,
    /// The tensor has the wrong shape or mixes fields.
    Shape,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Identity => "identity",
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::TrivialCoefficients => "trivial-coefficients",
            Axiom::Homomorphism => "homomorphism",
            Axiom::Shape => "shape",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("not a system of mutually orthogonal rank-1 idempotents summing to I: {0}")]
    NotAnIdempotentFamily(String),
    #[error("matrix is not solid")]
    NotSolid,
    #[error("not an idempotent system: {0}")]
    InvalidSystem(String),
    #[error("idempotent system is not symmetric")]
    NotSymmetric,
    #[error("degenerate system: m_{0} = 0")]
    DegenerateSystem(usize),
    #[error("linear system for A_{0} has no solution")]
    NoSolution(usize),
    #[error("linear system for A_{0} has more than one solution")]
    NonUnique(usize),
    #[error("k must be nonzero")]
    ZeroK,
    #[error("algebra does not split into primitive idempotents over the base field")]
    NotSplitSemisimple,
    #[error("character algebra axiom violated: {0}")]
    AxiomViolation(Axiom),
    #[error("invalid character system: {0}")]
    InvalidCharacterSystem(String),
    #[error("degenerate bilinear form: m_{0} = 0")]
    DegenerateForm(usize),
    #[error("matrix is not almost orthogonal normalized solid invertible")]
    NotAON,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("search space of {needed} candidates exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
