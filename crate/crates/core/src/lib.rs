//! Rough-set rank measures and a supervised extractive multi-document summarizer.
//!
//! * [`rough`]: decision tables, indiscernibility, approximations, Pawlak
//!   membership, rank and aggregate rank measures.
//! * [`discretize`]: equal-width / equal-frequency binning of real columns.
//! * [`text`]: sentence splitting, tokenization, sentence features, word vectors.
//! * [`classifiers`]: KNN, fuzzy NN, fuzzy-rough NN, Gaussian naive Bayes, LEM1.
//! * [`rouge`]: ROUGE-N, ROUGE-L and ROUGE-SU scoring.
//! * [`pipeline`]: tagging, training, rank post-processing and summary assembly.
//! * [`cli`]: the `roughrank` command-line front end.

pub mod error;
pub mod classifiers;
pub mod cli;
pub mod discretize;
pub mod pipeline;
pub mod rouge;
pub mod rough;
pub mod text;

pub use error::{Error, Result};
