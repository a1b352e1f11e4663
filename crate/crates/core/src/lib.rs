//! Lyndon-Shirshov words, nonassociative Lyndon-Shirshov (NLSW) bracketings
//! and Gröbner-Shirshov bases for free Lie and free associative algebras over
//! the rationals.
//!
//! Words are compared deg-lex (`Ord for Word`); the Lyndon-Shirshov order, in
//! which a proper prefix is greater than its extensions, is
//! [`words::compare_shirshov_lex`].

pub mod alphabet;
pub mod bracketing;
pub mod completion;
pub mod error;
pub mod gsb_assoc;
pub mod gsb_lie;
pub mod poly;
pub mod text;
pub mod words;

pub use alphabet::Alphabet;
pub use bracketing::{
    bracket_down_up, bracket_std, is_nlsw, normal_s_word, special_bracket, NlswTree, NonassocWord,
    SpecialBracketing,
};
pub use completion::{CompletionOptions, GsbState, Overlap, OverlapKind, Status};
pub use error::{Error, Result};
pub use gsb_assoc::{complete_assoc, is_gsb_assoc, red_words, reduce_assoc};
pub use gsb_lie::{complete_lie, crosscheck_lie_assoc_gsb, is_gsb_lie, lie_reduce, red_nlsw};
pub use poly::{AssocPoly, Coeff, LiePoly};
pub use text::{Mode, Presentation};
pub use words::{is_alsw, lyndon_factorize, Letter, Word};
