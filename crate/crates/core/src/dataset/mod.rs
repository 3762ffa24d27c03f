//! MNIST-style dataset ingestion: IDX binary parsing, normalization,
//! seeded splitting, and the random-mask utilities shared by every
//! sensing method.
//!
//! Images are stored flattened row-major with intensities in `[0, 1]`;
//! reshaping to 28x28 happens only at network and plot boundaries.

mod idx;
pub mod synthetic;

pub use idx::{parse_idx_images, parse_idx_labels, serialize_idx_images, serialize_idx_labels};

use ndarray::{Array2, ArrayView1};
use rand::Rng;
use thiserror::Error;

/// Errors produced while ingesting or splitting a dataset.
#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("bad IDX magic: expected {expected:#010x}, found {found:#010x}")]
    BadMagic { expected: u32, found: u32 },
    #[error("truncated IDX payload: header promises {needed} bytes, got {got}")]
    Truncated { needed: usize, got: usize },
    #[error("bad label {value} at record {index}: labels must be in 0..=9")]
    BadLabel { index: usize, value: u8 },
    #[error("image/label count mismatch: {images} images vs {labels} labels")]
    CountMismatch { images: usize, labels: usize },
    #[error("measurement budget {m} exceeds signal dimension {n}")]
    BudgetExceedsDimension { m: usize, n: usize },
    #[error("dataset of {count} records is too small to split (need >= 3)")]
    TooSmallToSplit { count: usize },
}

/// A set of flattened grayscale images with intensities in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageSet {
    /// `count x (side * side)` matrix, one image per row.
    images: Array2<f32>,
    side: usize,
}

impl ImageSet {
    /// Wraps a `count x (side*side)` matrix. Panics if the row length is not
    /// `side * side` or any entry lies outside `[0, 1]`.
    pub fn new(images: Array2<f32>, side: usize) -> Self {
        assert_eq!(images.ncols(), side * side, "row length must be side^2");
        assert!(
            images.iter().all(|&v| (0.0..=1.0).contains(&v)),
            "pixel values must lie in [0, 1]"
        );
        Self { images, side }
    }

    pub fn count(&self) -> usize {
        self.images.nrows()
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn signal_dim(&self) -> usize {
        self.side * self.side
    }

    /// One image as a flat signal.
    pub fn image(&self, i: usize) -> ArrayView1<'_, f32> {
        self.images.row(i)
    }

    pub fn as_matrix(&self) -> &Array2<f32> {
        &self.images
    }

    /// New set holding the given rows, in order.
    pub fn subset(&self, indices: &[usize]) -> Self {
        let mut out = Array2::zeros((indices.len(), self.signal_dim()));
        for (row, &i) in indices.iter().enumerate() {
            out.row_mut(row).assign(&self.images.row(i));
        }
        Self {
            images: out,
            side: self.side,
        }
    }
}

/// Digit labels paired with an [`ImageSet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSet {
    labels: Vec<u8>,
}

impl LabelSet {
    /// Panics if any label is outside `0..=9`.
    pub fn new(labels: Vec<u8>) -> Self {
        assert!(labels.iter().all(|&l| l <= 9), "labels must be in 0..=9");
        Self { labels }
    }

    pub fn count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> u8 {
        self.labels[i]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.labels
    }

    pub fn subset(&self, indices: &[usize]) -> Self {
        Self {
            labels: indices.iter().map(|&i| self.labels[i]).collect(),
        }
    }
}

/// A train/val/test partition of a labelled image collection.
#[derive(Debug, Clone)]
pub struct DataSplit {
    pub train: (ImageSet, LabelSet),
    pub val: (ImageSet, LabelSet),
    pub test: (ImageSet, LabelSet),
    pub seed: u64,
}

/// Shuffles the full collection under `seed` and partitions it 5:1:1
/// (50k/10k/10k on full MNIST). Any count >= 3 is accepted for reduced
/// desk-scale runs; val and test each get at least one record.
pub fn make_split(
    images: &ImageSet,
    labels: &LabelSet,
    seed: u64,
) -> Result<DataSplit, DatasetError> {
    if images.count() != labels.count() {
        return Err(DatasetError::CountMismatch {
            images: images.count(),
            labels: labels.count(),
        });
    }
    let count = images.count();
    if count < 3 {
        return Err(DatasetError::TooSmallToSplit { count });
    }

    let val_count = (count / 7).max(1);
    let test_count = val_count;
    let train_count = count - val_count - test_count;

    let mut order: Vec<usize> = (0..count).collect();
    let mut rng = crate::dataset::split_rng(seed);
    shuffle(&mut order, &mut rng);

    let (train_idx, rest) = order.split_at(train_count);
    let (val_idx, test_idx) = rest.split_at(val_count);
    debug_assert_eq!(test_idx.len(), test_count);

    Ok(DataSplit {
        train: (images.subset(train_idx), labels.subset(train_idx)),
        val: (images.subset(val_idx), labels.subset(val_idx)),
        test: (images.subset(test_idx), labels.subset(test_idx)),
        seed,
    })
}

/// Draws `m` distinct indices from `0..n` uniformly without replacement.
pub fn sample_random_indices<R: Rng>(
    n: usize,
    m: usize,
    rng: &mut R,
) -> Result<Vec<usize>, DatasetError> {
    if m > n {
        return Err(DatasetError::BudgetExceedsDimension { m, n });
    }
    // Partial Fisher-Yates: after m swap steps the prefix is the sample.
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..m {
        let j = i + rng.gen_range(0..n - i);
        pool.swap(i, j);
    }
    pool.truncate(m);
    Ok(pool)
}

fn shuffle<R: Rng>(data: &mut [usize], rng: &mut R) {
    for i in (1..data.len()).rev() {
        let j = rng.gen_range(0..=i);
        data.swap(i, j);
    }
}

/// The seeded generator used for all dataset-level randomness.
pub fn split_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
