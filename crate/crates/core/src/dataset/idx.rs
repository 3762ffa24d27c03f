//! The MNIST IDX binary container, big-endian throughout.
//!
//! Image files carry magic `0x00000803` followed by count/rows/cols
//! headers and one byte per pixel; label files carry magic `0x00000801`,
//! a count, and one byte per label.

use ndarray::Array2;

use super::{DatasetError, ImageSet, LabelSet};

pub const IMAGES_MAGIC: u32 = 0x0000_0803;
pub const LABELS_MAGIC: u32 = 0x0000_0801;

fn read_u32_be(raw: &[u8], offset: usize) -> Result<u32, DatasetError> {
    let end = offset + 4;
    if raw.len() < end {
        return Err(DatasetError::Truncated {
            needed: end,
            got: raw.len(),
        });
    }
    Ok(u32::from_be_bytes([
        raw[offset],
        raw[offset + 1],
        raw[offset + 2],
        raw[offset + 3],
    ]))
}

/// Parses an IDX image file into normalized `[0, 1]` signals.
pub fn parse_idx_images(raw: &[u8]) -> Result<ImageSet, DatasetError> {
    let magic = read_u32_be(raw, 0)?;
    if magic != IMAGES_MAGIC {
        return Err(DatasetError::BadMagic {
            expected: IMAGES_MAGIC,
            found: magic,
        });
    }
    let count = read_u32_be(raw, 4)? as usize;
    let rows = read_u32_be(raw, 8)? as usize;
    let cols = read_u32_be(raw, 12)? as usize;
    assert_eq!(rows, cols, "only square images are supported");

    let pixels = rows * cols;
    let needed = 16 + count * pixels;
    if raw.len() < needed {
        return Err(DatasetError::Truncated {
            needed,
            got: raw.len(),
        });
    }

    let data = &raw[16..needed];
    let images = Array2::from_shape_fn((count, pixels), |(i, j)| {
        f32::from(data[i * pixels + j]) / 255.0
    });
    Ok(ImageSet::new(images, rows))
}

/// Parses an IDX label file; every label must be a digit in `0..=9`.
pub fn parse_idx_labels(raw: &[u8]) -> Result<LabelSet, DatasetError> {
    let magic = read_u32_be(raw, 0)?;
    if magic != LABELS_MAGIC {
        return Err(DatasetError::BadMagic {
            expected: LABELS_MAGIC,
            found: magic,
        });
    }
    let count = read_u32_be(raw, 4)? as usize;
    let needed = 8 + count;
    if raw.len() < needed {
        return Err(DatasetError::Truncated {
            needed,
            got: raw.len(),
        });
    }
    let mut labels = Vec::with_capacity(count);
    for (index, &value) in raw[8..needed].iter().enumerate() {
        if value > 9 {
            return Err(DatasetError::BadLabel { index, value });
        }
        labels.push(value);
    }
    Ok(LabelSet::new(labels))
}

/// Serializes images back to IDX bytes. Pixel values are written as
/// `round(v * 255)`, so sets that came out of [`parse_idx_images`]
/// round-trip bit-exactly.
pub fn serialize_idx_images(images: &ImageSet) -> Vec<u8> {
    let side = images.side();
    let mut out = Vec::with_capacity(16 + images.count() * side * side);
    out.extend_from_slice(&IMAGES_MAGIC.to_be_bytes());
    out.extend_from_slice(&(images.count() as u32).to_be_bytes());
    out.extend_from_slice(&(side as u32).to_be_bytes());
    out.extend_from_slice(&(side as u32).to_be_bytes());
    for i in 0..images.count() {
        for &v in images.image(i).iter() {
            out.push((v * 255.0).round() as u8);
        }
    }
    out
}

/// Serializes labels to IDX bytes.
pub fn serialize_idx_labels(labels: &LabelSet) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + labels.count());
    out.extend_from_slice(&LABELS_MAGIC.to_be_bytes());
    out.extend_from_slice(&(labels.count() as u32).to_be_bytes());
    out.extend_from_slice(labels.as_slice());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn image_header(count: u32, rows: u32, cols: u32) -> Vec<u8> {
        let mut raw = IMAGES_MAGIC.to_be_bytes().to_vec();
        raw.extend_from_slice(&count.to_be_bytes());
        raw.extend_from_slice(&rows.to_be_bytes());
        raw.extend_from_slice(&cols.to_be_bytes());
        raw
    }

    #[test]
    fn parses_and_scales_pixels() {
        let mut raw = image_header(1, 2, 2);
        raw.extend_from_slice(&[0, 255, 0, 255]);
        let set = parse_idx_images(&raw).unwrap();
        assert_eq!(set.count(), 1);
        assert_eq!(set.image(0).to_vec(), vec![0.0, 1.0, 0.0, 1.0]);
    }

    #[test]
    fn rejects_wrong_magic() {
        let mut raw = LABELS_MAGIC.to_be_bytes().to_vec();
        raw.extend_from_slice(&[0; 12]);
        assert!(matches!(
            parse_idx_images(&raw),
            Err(DatasetError::BadMagic {
                expected: IMAGES_MAGIC,
                found: LABELS_MAGIC,
            })
        ));
    }

    #[test]
    fn rejects_truncated_payload() {
        let mut raw = image_header(2, 2, 2);
        raw.extend_from_slice(&[1, 2, 3, 4]); // one image, header promises two
        assert!(matches!(
            parse_idx_images(&raw),
            Err(DatasetError::Truncated { .. })
        ));
    }

    #[test]
    fn parses_labels() {
        let mut raw = LABELS_MAGIC.to_be_bytes().to_vec();
        raw.extend_from_slice(&3u32.to_be_bytes());
        raw.extend_from_slice(&[7, 0, 9]);
        let labels = parse_idx_labels(&raw).unwrap();
        assert_eq!(labels.as_slice(), &[7, 0, 9]);
    }

    #[test]
    fn rejects_bad_label() {
        let mut raw = LABELS_MAGIC.to_be_bytes().to_vec();
        raw.extend_from_slice(&1u32.to_be_bytes());
        raw.push(12);
        assert!(matches!(
            parse_idx_labels(&raw),
            Err(DatasetError::BadLabel { index: 0, value: 12 })
        ));
    }

    #[test]
    fn empty_label_file_is_valid() {
        let mut raw = LABELS_MAGIC.to_be_bytes().to_vec();
        raw.extend_from_slice(&0u32.to_be_bytes());
        let labels = parse_idx_labels(&raw).unwrap();
        assert_eq!(labels.count(), 0);
    }

    proptest! {
        #[test]
        fn image_round_trip_is_bit_identical(
            count in 0usize..4,
            bytes in proptest::collection::vec(any::<u8>(), 64),
        ) {
            let mut raw = image_header(count as u32, 4, 4);
            raw.extend_from_slice(&bytes[..count * 16]);
            let parsed = parse_idx_images(&raw).unwrap();
            let reparsed = parse_idx_images(&serialize_idx_images(&parsed)).unwrap();
            prop_assert_eq!(parsed.as_matrix(), reparsed.as_matrix());
        }

        #[test]
        fn parsed_pixels_stay_in_unit_range(bytes in proptest::collection::vec(any::<u8>(), 16)) {
            let mut raw = image_header(1, 4, 4);
            raw.extend_from_slice(&bytes);
            let parsed = parse_idx_images(&raw).unwrap();
            for &v in parsed.image(0).iter() {
                prop_assert!((0.0..=1.0).contains(&v));
            }
        }

        #[test]
        fn label_round_trip(labels in proptest::collection::vec(0u8..10, 0..32)) {
            let set = LabelSet::new(labels);
            let reparsed = parse_idx_labels(&serialize_idx_labels(&set)).unwrap();
            prop_assert_eq!(set.as_slice(), reparsed.as_slice());
        }
    }
}
