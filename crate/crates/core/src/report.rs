use crate::linear::Tensor;

/// A concrete failure of an identity: the basis element (or tuple of basis
/// elements) where it fails and the two sides evaluated there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub law: String,
    pub basis: Vec<usize>,
    pub lhs: Tensor,
    pub rhs: Tensor,
}

/// Outcome of a law check. Checks stop at the first counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub failure: Option<Counterexample>,
}

impl Report {
    pub fn pass(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            failure: None,
        }
    }

    pub fn fail(check: impl Into<String>, counterexample: Counterexample) -> Self {
        Self {
            check: check.into(),
            failure: Some(counterexample),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Runs `law` on each basis index in turn, stopping at the first failure.
    pub(crate) fn first_failure<I, F>(check: &str, law: &str, indices: I, mut sides: F) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
        F: FnMut(&[usize]) -> (Tensor, Tensor),
    {
        for basis in indices {
            let (lhs, rhs) = sides(&basis);
            if lhs != rhs {
                return Self::fail(
                    check,
                    Counterexample {
                        law: law.to_string(),
                        basis,
                        lhs,
                        rhs,
                    },
                );
            }
        }
        Self::pass(check)
    }

    /// Combines several reports under one name, keeping the first failure.
    pub fn all(check: impl Into<String>, parts: impl IntoIterator<Item = Report>) -> Self {
        let check = check.into();
        for r in parts {
            if let Some(cx) = r.failure {
                return Self::fail(check, cx);
            }
        }
        Self::pass(check)
    }
}
