//! Convolutional entanglement distillation.
//!
//! Binary Laurent polynomials ([`laurent`]) carry the stabilizer algebra,
//! [`pauli`] maps polynomial vectors to Pauli sequences and computes the
//! shifted symplectic product, [`builder`] turns non-commuting generator sets
//! into commuting ones by appending catalytic-ebit columns, [`block`]
//! synthesizes encoders for entanglement-assisted block codes, and [`sim`]
//! runs Pauli-frame Monte-Carlo trials of the distillation protocol.

pub mod block;
pub mod builder;
pub mod error;
pub mod format;
pub mod laurent;
pub mod pauli;
pub mod sim;

pub use block::{
    decompose, decompose_traced, encoded_stabilizer, CliffordCircuit, EADecomposition, Gate, RowOp,
    SymplecticMatrix,
};
pub use builder::{
    augment_multi, augment_single, check_commuting, css_augment, css_gram_schmidt, import_gf4,
    noncatastrophic_check, protocol_yield, Construction, CssDecomposition, CssPair, GeneratorSet,
    Gf4, Gf4Generator, ProtocolYield, Triangle,
};
pub use error::{Error, Result};
pub use format::{read_code, write_paulivec, CodeFile, Format, ReadOptions};
pub use laurent::{LaurentGcd, LaurentPoly};
pub use pauli::{commutes_at_shift, shifted_symplectic, Pauli, PauliVec, PauliWindow};
pub use sim::{
    run_distillation, sample_errors, syndromes, ChannelKind, ChannelModel, DecoderKind,
    ErrorFrameSeq, Execution, SimReport, Simulator, SyndromeStream,
};
