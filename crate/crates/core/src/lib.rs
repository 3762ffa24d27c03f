//! Sparse-sensing toolkit.
//!
//! Reconstructs signals from few pixel measurements under three strategies:
//!
//! - **OSP** — offline optimal sensor placement: a POD basis from training
//!   snapshots plus pivoted-QR sensor selection, reconstruction by linear
//!   least squares ([`linear_baselines`]).
//! - **VAE random sampling** — a convolutional VAE prior trained on the
//!   signal class; reconstruction optimizes a latent code so the decoded
//!   image matches random measurements ([`generative_prior`],
//!   [`reconstruction`]).
//! - **VAE-RL adaptive sampling** — a PPO-trained policy picks each next
//!   measurement location given the current partial reconstruction
//!   ([`adaptive_policy`]).
//!
//! The [`harness`] module orchestrates training and evaluation, persists
//! checkpoints and CSV results, and renders comparison plots. Classical
//! l1 compressed sensing over a DCT basis is included as an optional
//! baseline.

pub mod adaptive_policy;
pub mod dataset;
pub mod generative_prior;
pub mod harness;
pub mod linalg;
pub mod linear_baselines;
pub mod metrics;
pub mod nn;
pub mod reconstruction;

/// Pixels per image edge.
pub const IMAGE_SIDE: usize = 28;
/// Flattened signal dimension (28 x 28).
pub const SIGNAL_DIM: usize = IMAGE_SIDE * IMAGE_SIDE;
/// Latent dimension of the generative prior.
pub const LATENT_DIM: usize = 64;
/// Number of digit classes.
pub const NUM_CLASSES: usize = 10;
