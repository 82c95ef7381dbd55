use thiserror::Error;

/// Errors raised while building or evaluating monoids, categories and functors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} does not belong to monoid {monoid}")]
    ForeignElement { element: String, monoid: String },
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("codomain mismatch: {0}")]
    CodomainMismatch(String),
    #[error("square does not commute: {0}")]
    NonCommutingSquare(String),
    #[error("morphism {0} does not belong to the category")]
    ForeignMorphism(String),
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("morphism {0} is not invertible")]
    NotInvertible(String),
    #[error("invalid category: {0}")]
    InvalidCategory(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("value outside the tabulated range: {0}")]
    OutOfTable(String),
    #[error("not found within depth {depth}: {what}")]
    DepthExhausted { what: String, depth: usize },
    #[error("document error at {path}: {message}")]
    Document { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn doc(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Document {
            path: path.into(),
            message: message.into(),
        }
    }
}
