pub mod ambient;
pub mod cli;
pub mod clique;
pub mod decompose;
pub mod dual;
pub mod error;
pub mod family;
pub mod generators;
pub mod hyp;
pub mod hypset;
pub mod io;
pub mod realize;
pub mod report;
pub mod scope;
pub mod ubs;
pub mod wallspace;

pub use ambient::{Ambient, Dimension};
pub use error::{Error, Result};
pub use hyp::{Decided, HypRef, Relation, Side, TailSide};
pub use hypset::HypSet;
pub use scope::Scope;
