//! Core kernels for a two-step (detect, then recognize) OCR pipeline.
//!
//! Everything in this crate is pure computation over in-memory values:
//! CTC loss/decoding, recognition and detection metrics, detection
//! post-processing, image resizing rules, a small fully-convolutional
//! recognizer trained with curriculum learning, and synthetic word-image
//! generation. File formats, the serving stack, and the CLI live in the
//! companion `ocrk` crate.
//!
//! The crate is `no_std`-compatible (with `alloc`); enable the `libm`
//! feature instead of `std` for float math on bare targets.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("ocrk-core requires either the `std` or the `libm` feature");

extern crate alloc;

pub mod alphabet;
pub mod ctc;
pub mod det_metrics;
pub mod det_post;
pub mod geom;
pub mod image;
pub mod lattice;
mod num;
pub mod preprocess;
pub mod rec_metrics;
pub mod recognizer;
pub mod synthdata;

pub use alphabet::{Alphabet, AlphabetError, LabelSequence};
pub use geom::{BoundingBox, ScoredBox};
pub use image::GrayImage;
pub use lattice::ProbLattice;
