use thiserror::Error;

#[derive(Debug, Error)]
pub enum SiltError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("pair-sum estimators require a uniform grid")]
    NonUniformGrid,
    #[error("quadrature for {context} did not converge: achieved {achieved:.3e}, requested {requested:.3e}{}",
            if partial.is_empty() { String::new() } else { format!(", partial results {partial:?}") })]
    Quadrature {
        context: &'static str,
        achieved: f64,
        requested: f64,
        partial: Vec<f64>,
    },
    #[error(transparent)]
    Path(#[from] gaussian_paths::PathError),
}

impl SiltError {
    pub(crate) fn from_quad(context: &'static str, err: gk_quad::QuadError, partial: Vec<f64>) -> Self {
        match err {
            gk_quad::QuadError::NonConvergence {
                achieved,
                requested,
                ..
            } => SiltError::Quadrature {
                context,
                achieved,
                requested,
                partial,
            },
            gk_quad::QuadError::NonFiniteIntegrand { at } => {
                SiltError::InvalidInput(format!("{context}: non-finite integrand at {at}"))
            }
        }
    }
}
