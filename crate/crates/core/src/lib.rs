//! Training engine for multi-domain text classification with a conditional
//! adversarial alignment objective.
//!
//! The crate is organized in layers:
//!
//! - [`tensor`] — dense f64 tensors with tape-based reverse-mode automatic
//!   differentiation and a finite-difference gradient checker,
//! - [`networks`] — the shared extractor, per-domain extractors, classifier
//!   and conditional domain discriminator (MLP and text-CNN backends),
//! - [`objectives`] — classification and entropy-weighted adversarial losses,
//! - [`trainer`] — the two-optimizer minimax loop, evaluation, 5-fold
//!   cross-validation, multi-source adaptation and the lambda sweep,
//! - [`oracle`] — discrete-distribution certification of the optimal
//!   discriminator and the divergence identity it induces,
//! - [`data`] — dataset loading, vocabulary construction, fold splitting
//!   and synthetic domain generation.

pub mod checkpoint;
pub mod config;
pub mod data;
pub mod diagnostics;
pub mod error;
pub mod metrics;
pub mod networks;
pub mod objectives;
pub mod oracle;
pub mod rng;
pub mod tensor;
pub mod trainer;

pub use error::{Error, Result};
pub use metrics::EvalReport;
pub use networks::{Model, ModelConfig};
pub use rng::Rng;
pub use tensor::{Graph, NodeId, SharedTensor, Tensor};
pub use trainer::{Ablation, Mode, TrainingConfig};
