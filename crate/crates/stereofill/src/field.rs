//! Shared grid containers: images, disparity maps, boolean masks, camera
//! parameters and loss weights.
//!
//! All values are stored as `f32` (matching the on-disk float formats);
//! every computation that accumulates over pixels promotes to `f64`.
//! Containers are immutable after construction and validated on creation.

use crate::error::{Error, Result};

/// H×W×C image with intensities in `[0, 1]`, row-major, channel-interleaved.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageField {
    height: usize,
    width: usize,
    channels: usize,
    data: Vec<f32>,
}

impl ImageField {
    /// Builds an image and checks all invariants.
    pub fn new(height: usize, width: usize, channels: usize, data: Vec<f32>) -> Result<Self> {
        let img = ImageField {
            height,
            width,
            channels,
            data,
        };
        img.validate()?;
        Ok(img)
    }

    pub fn from_fn(
        height: usize,
        width: usize,
        channels: usize,
        mut f: impl FnMut(usize, usize, usize) -> f32,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(height * width * channels);
        for i in 0..height {
            for j in 0..width {
                for c in 0..channels {
                    data.push(f(i, j, c));
                }
            }
        }
        Self::new(height, width, channels, data)
    }

    pub fn constant(height: usize, width: usize, channels: usize, value: f32) -> Result<Self> {
        Self::new(height, width, channels, vec![value; height * width * channels])
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, c: usize) -> f32 {
        debug_assert!(i < self.height && j < self.width && c < self.channels);
        self.data[(i * self.width + j) * self.channels + c]
    }

    /// Checks the type invariants; names the first offending index on failure.
    pub fn validate(&self) -> Result<()> {
        if self.channels != 1 && self.channels != 3 {
            return Err(Error::WrongChannelCount {
                expected: "1 or 3",
                actual: self.channels,
            });
        }
        let expected = self.height * self.width * self.channels;
        if self.data.len() != expected {
            return Err(Error::DimensionMismatch {
                context: "ImageField data length",
                expected: expected.to_string(),
                actual: self.data.len().to_string(),
            });
        }
        for (index, &v) in self.data.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteValue {
                    context: "ImageField",
                    index,
                    value: v as f64,
                });
            }
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::OutOfRange {
                    context: "ImageField",
                    index,
                    value: v as f64,
                    expected: "[0, 1]",
                });
            }
        }
        Ok(())
    }

    /// Rec. 601 luma conversion of a 3-channel image.
    pub fn to_grayscale(&self) -> Result<ImageField> {
        if self.channels != 3 {
            return Err(Error::WrongChannelCount {
                expected: "3",
                actual: self.channels,
            });
        }
        let mut data = Vec::with_capacity(self.height * self.width);
        for px in self.data.chunks_exact(3) {
            let y = 0.299 * px[0] as f64 + 0.587 * px[1] as f64 + 0.114 * px[2] as f64;
            // Weights sum to 1, but guard against rounding pushing past 1.
            data.push(y.clamp(0.0, 1.0) as f32);
        }
        ImageField::new(self.height, self.width, 1, data)
    }

    /// Single-channel view of the image: identity for 1-channel inputs,
    /// Rec. 601 luma for RGB.
    pub fn luma(&self) -> Result<ImageField> {
        if self.channels == 1 {
            Ok(self.clone())
        } else {
            self.to_grayscale()
        }
    }
}

/// H×W map of non-negative horizontal pixel shifts.
#[derive(Debug, Clone, PartialEq)]
pub struct DisparityMap {
    height: usize,
    width: usize,
    data: Vec<f32>,
}

impl DisparityMap {
    pub fn new(height: usize, width: usize, data: Vec<f32>) -> Result<Self> {
        let d = DisparityMap {
            height,
            width,
            data,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn from_fn(height: usize, width: usize, mut f: impl FnMut(usize, usize) -> f32) -> Result<Self> {
        let mut data = Vec::with_capacity(height * width);
        for i in 0..height {
            for j in 0..width {
                data.push(f(i, j));
            }
        }
        Self::new(height, width, data)
    }

    pub fn constant(height: usize, width: usize, value: f32) -> Result<Self> {
        Self::new(height, width, vec![value; height * width])
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f32 {
        debug_assert!(i < self.height && j < self.width);
        self.data[i * self.width + j]
    }

    pub fn validate(&self) -> Result<()> {
        let expected = self.height * self.width;
        if self.data.len() != expected {
            return Err(Error::DimensionMismatch {
                context: "DisparityMap data length",
                expected: expected.to_string(),
                actual: self.data.len().to_string(),
            });
        }
        for (index, &v) in self.data.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteValue {
                    context: "DisparityMap",
                    index,
                    value: v as f64,
                });
            }
            if v < 0.0 {
                return Err(Error::OutOfRange {
                    context: "DisparityMap",
                    index,
                    value: v as f64,
                    expected: ">= 0",
                });
            }
        }
        Ok(())
    }
}

/// H×W boolean grid; `true` marks textured ("active") pixels.
#[derive(Debug, Clone, PartialEq)]
pub struct ActiveMask {
    height: usize,
    width: usize,
    data: Vec<bool>,
}

impl ActiveMask {
    pub fn new(height: usize, width: usize, data: Vec<bool>) -> Result<Self> {
        let m = ActiveMask {
            height,
            width,
            data,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn from_fn(height: usize, width: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut data = Vec::with_capacity(height * width);
        for i in 0..height {
            for j in 0..width {
                data.push(f(i, j));
            }
        }
        Self::new(height, width, data)
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn data(&self) -> &[bool] {
        &self.data
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.height && j < self.width);
        self.data[i * self.width + j]
    }

    pub fn count_active(&self) -> usize {
        self.data.iter().filter(|&&a| a).count()
    }

    pub fn validate(&self) -> Result<()> {
        let expected = self.height * self.width;
        if self.data.len() != expected {
            return Err(Error::DimensionMismatch {
                context: "ActiveMask data length",
                expected: expected.to_string(),
                actual: self.data.len().to_string(),
            });
        }
        Ok(())
    }
}

/// Stereo camera geometry: depth = baseline * focal / disparity, clamped to
/// the `[depth_min_m, depth_max_m]` saturation range.
#[derive(Debug, Clone, PartialEq)]
pub struct CameraRig {
    pub baseline_m: f64,
    pub focal_px: f64,
    pub depth_min_m: f64,
    pub depth_max_m: f64,
}

impl CameraRig {
    /// Rig with the default 0–80 m saturation range.
    pub fn new(baseline_m: f64, focal_px: f64) -> Result<Self> {
        Self::with_depth_range(baseline_m, focal_px, 0.0, 80.0)
    }

    pub fn with_depth_range(
        baseline_m: f64,
        focal_px: f64,
        depth_min_m: f64,
        depth_max_m: f64,
    ) -> Result<Self> {
        if !(baseline_m > 0.0 && baseline_m.is_finite()) {
            return Err(Error::BadConfig(format!("baseline_m must be > 0, got {baseline_m}")));
        }
        if !(focal_px > 0.0 && focal_px.is_finite()) {
            return Err(Error::BadConfig(format!("focal_px must be > 0, got {focal_px}")));
        }
        if !(0.0 <= depth_min_m && depth_min_m < depth_max_m && depth_max_m.is_finite()) {
            return Err(Error::BadConfig(format!(
                "depth range must satisfy 0 <= min < max, got [{depth_min_m}, {depth_max_m}]"
            )));
        }
        Ok(CameraRig {
            baseline_m,
            focal_px,
            depth_min_m,
            depth_max_m,
        })
    }
}

/// Weights of the four loss terms plus the SSIM/L1 mixing factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossWeights {
    pub alpha_ap: f64,
    pub alpha_ds: f64,
    pub alpha_lr: f64,
    pub alpha_fd: f64,
    pub ssim_alpha: f64,
}

impl Default for LossWeights {
    fn default() -> Self {
        LossWeights {
            alpha_ap: 1.0,
            alpha_ds: 0.1,
            alpha_lr: 1.0,
            alpha_fd: 0.5,
            ssim_alpha: 0.85,
        }
    }
}

impl LossWeights {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("alpha_ap", self.alpha_ap),
            ("alpha_ds", self.alpha_ds),
            ("alpha_lr", self.alpha_lr),
            ("alpha_fd", self.alpha_fd),
        ] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::BadConfig(format!("{name} must be >= 0, got {v}")));
            }
        }
        if !(0.0..=1.0).contains(&self.ssim_alpha) {
            return Err(Error::BadConfig(format!(
                "ssim_alpha must be in [0, 1], got {}",
                self.ssim_alpha
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_gray_image() {
        let img = ImageField::constant(2, 2, 1, 0.5).unwrap();
        assert!(img.validate().is_ok());
    }

    #[test]
    fn negative_disparity_rejected() {
        let err = DisparityMap::new(2, 2, vec![0.0, 1.0, -1.0, 2.0]).unwrap_err();
        match err {
            Error::OutOfRange { index, .. } => assert_eq!(index, 2),
            other => panic!("expected OutOfRange, got {other:?}"),
        }
    }

    #[test]
    fn wrong_data_length_rejected() {
        let err = ImageField::new(2, 2, 1, vec![0.0, 0.5, 1.0]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn non_finite_image_rejected() {
        let err = ImageField::new(1, 2, 1, vec![0.5, f32::NAN]).unwrap_err();
        match err {
            Error::NonFiniteValue { index, .. } => assert_eq!(index, 1),
            other => panic!("expected NonFiniteValue, got {other:?}"),
        }
    }

    #[test]
    fn grayscale_weights() {
        let white = ImageField::constant(1, 1, 3, 1.0).unwrap();
        assert_eq!(white.to_grayscale().unwrap().get(0, 0, 0), 1.0);

        let black = ImageField::constant(1, 1, 3, 0.0).unwrap();
        assert_eq!(black.to_grayscale().unwrap().get(0, 0, 0), 0.0);

        let red = ImageField::new(1, 1, 3, vec![1.0, 0.0, 0.0]).unwrap();
        let y = red.to_grayscale().unwrap().get(0, 0, 0);
        assert!((y - 0.299).abs() < 1e-7, "luma of pure red was {y}");
    }

    #[test]
    fn grayscale_requires_three_channels() {
        let gray = ImageField::constant(2, 2, 1, 0.5).unwrap();
        assert!(matches!(
            gray.to_grayscale().unwrap_err(),
            Error::WrongChannelCount { .. }
        ));
    }

    #[test]
    fn grayscale_idempotent_on_replicated_channels() {
        for k in 0..=20 {
            let g = k as f32 / 20.0;
            let img = ImageField::constant(3, 3, 3, g).unwrap();
            let y = img.to_grayscale().unwrap().get(1, 1, 0);
            assert!((y - g).abs() < 2e-7, "gray({g},{g},{g}) = {y}");
        }
    }

    #[test]
    fn rig_invariants() {
        assert!(CameraRig::new(0.2, 100.0).is_ok());
        assert!(CameraRig::new(0.0, 100.0).is_err());
        assert!(CameraRig::with_depth_range(0.2, 100.0, 5.0, 5.0).is_err());
    }

    #[test]
    fn weight_invariants() {
        assert!(LossWeights::default().validate().is_ok());
        let mut w = LossWeights::default();
        w.alpha_fd = -0.1;
        assert!(w.validate().is_err());
        w = LossWeights::default();
        w.ssim_alpha = 1.5;
        assert!(w.validate().is_err());
    }
}
