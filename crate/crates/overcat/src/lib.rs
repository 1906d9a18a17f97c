//! Finite overcategories as explicit tables: fibers, cotensors,
//! overlimits and overcolimits, K-(co)equalizers, comma overcategories,
//! Freyd-style left overadjoints, overmonads with Beck-style monadicity
//! verdicts, monoidal overcategories, and free (over)monoid chains.
//!
//! Everything is verified by exhaustive enumeration under an explicit
//! budget; nothing is trusted beyond the finite tables supplied.

pub mod certificate;
pub mod cli;
pub mod comma;
pub mod derived;
pub mod fincat;
pub mod fixtures;
pub mod freemon;
pub mod functor;
pub mod instance;
pub mod limits;
pub mod monad;
pub mod monoidal;
pub mod overcat;
pub mod schema;
pub mod shapes;
