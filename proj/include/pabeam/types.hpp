// Copyright (C) 2026 The pabeam authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PABEAM_TYPES_HPP
#define PABEAM_TYPES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pabeam {

/// Receive geometry of a uniform linear transducer array lying on the z = 0
/// line. Pixels and sources live at z > 0 (in front of the array face).
///
/// Construction validates all invariants and throws std::invalid_argument
/// naming the first violated one; instances are immutable afterwards and safe
/// to share across threads.
class ArrayGeometry {
 public:
  ArrayGeometry(std::vector<double> element_x, double pitch,
                double center_frequency, double fractional_bandwidth,
                double sampling_frequency, double sound_speed);

  /// Array of `num_elements` elements centered on x = 0. Element i sits at
  /// (i - (M-1)/2) * pitch, so mirror element pairs are exact negations of
  /// each other (bitwise), which keeps symmetric scenes symmetric.
  static ArrayGeometry uniform_linear(std::size_t num_elements, double pitch,
                                      double center_frequency,
                                      double fractional_bandwidth,
                                      double sampling_frequency,
                                      double sound_speed);

  std::size_t num_elements() const { return element_x_.size(); }
  const std::vector<double>& element_x() const { return element_x_; }
  double element_x(std::size_t i) const { return element_x_[i]; }
  /// Linear arrays have no elevation offset.
  double element_z(std::size_t) const { return 0.0; }

  double pitch() const { return pitch_; }
  double center_frequency() const { return center_frequency_; }
  double fractional_bandwidth() const { return fractional_bandwidth_; }
  double sampling_frequency() const { return sampling_frequency_; }
  double sound_speed() const { return sound_speed_; }
  double wavelength() const { return sound_speed_ / center_frequency_; }

  /// Same geometry with the assumed sound speed multiplied by `scale`
  /// (sound-speed mismatch experiments).
  ArrayGeometry with_sound_speed_scale(double scale) const;

 private:
  std::vector<double> element_x_;
  double pitch_;
  double center_frequency_;
  double fractional_bandwidth_;
  double sampling_frequency_;
  double sound_speed_;
};

/// Rectangular pixel grid in front of the array. Pixels sit at cell centers:
/// x(ix) = x_min + (ix + 0.5) * dx with dx = (x_max - x_min) / nx, and the
/// same along z. A 1x1 grid therefore has its single pixel at the region
/// center.
class ImagingGrid {
 public:
  ImagingGrid(double x_min, double x_max, double z_min, double z_max,
              std::size_t nx, std::size_t nz);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double z_min() const { return z_min_; }
  double z_max() const { return z_max_; }
  std::size_t nx() const { return nx_; }
  std::size_t nz() const { return nz_; }

  double dx() const { return (x_max_ - x_min_) / static_cast<double>(nx_); }
  double dz() const { return (z_max_ - z_min_) / static_cast<double>(nz_); }
  double pixel_x(std::size_t ix) const {
    return x_min_ + (static_cast<double>(ix) + 0.5) * dx();
  }
  double pixel_z(std::size_t iz) const {
    return z_min_ + (static_cast<double>(iz) + 0.5) * dz();
  }
  /// Index of the row whose center is nearest to `z`. `z` must lie inside
  /// [z_min, z_max].
  std::size_t nearest_row(double z) const;

  std::size_t num_pixels() const { return nx_ * nz_; }

 private:
  double x_min_, x_max_, z_min_, z_max_;
  std::size_t nx_, nz_;
};

/// One frame of multichannel RF data: `num_channels` x `num_samples` real
/// amplitudes, channel-major. Samples are stored as 32-bit floats, matching
/// the on-disk format bit for bit; all arithmetic on them is done in double.
class RfFrame {
 public:
  RfFrame(std::size_t num_channels, std::size_t num_samples,
          std::vector<float> samples, double sampling_frequency);

  std::size_t num_channels() const { return num_channels_; }
  std::size_t num_samples() const { return num_samples_; }
  double sampling_frequency() const { return sampling_frequency_; }

  float sample(std::size_t channel, std::size_t n) const {
    return samples_[channel * num_samples_ + n];
  }
  std::span<const float> channel(std::size_t c) const {
    return {samples_.data() + c * num_samples_, num_samples_};
  }
  const std::vector<float>& samples() const { return samples_; }

 private:
  std::size_t num_channels_;
  std::size_t num_samples_;
  std::vector<float> samples_;
  double sampling_frequency_;
};

/// Per-pixel, per-element one-way propagation delays in fractional samples,
/// laid out (nz, nx, M).
class DelayTable {
 public:
  DelayTable(std::size_t nz, std::size_t nx, std::size_t num_elements,
             std::vector<double> delays);

  std::size_t nz() const { return nz_; }
  std::size_t nx() const { return nx_; }
  std::size_t num_elements() const { return num_elements_; }

  double at(std::size_t iz, std::size_t ix, std::size_t element) const {
    return delays_[(iz * nx_ + ix) * num_elements_ + element];
  }
  std::span<const double> pixel(std::size_t iz, std::size_t ix) const {
    return {delays_.data() + (iz * nx_ + ix) * num_elements_, num_elements_};
  }

 private:
  std::size_t nz_, nx_, num_elements_;
  std::vector<double> delays_;
};

/// Minimum-variance estimator configuration: spatial subarray length L,
/// temporal half-window K (2K+1 snapshots are averaged), and the diagonal
/// loading factor delta (epsilon = delta * trace(R)).
struct MvConfig {
  std::size_t subarray_length = 1;
  std::size_t temporal_half_window = 0;
  double loading_factor = 1e-2;

  /// L = M/2, K = 5, delta = 1/(100 L).
  static MvConfig default_for(std::size_t num_elements);

  /// Throws std::invalid_argument if any field is out of range for an
  /// M-element aperture (1 <= L <= M/2, delta > 0).
  void validate(std::size_t num_elements) const;
};

enum class ImageStage { raw, envelope, log_compressed };

/// Scalar pixel grid at one of the three pipeline stages. Raw images are
/// signed, envelope images nonnegative, log-compressed images lie in
/// [-dynamic_range_db, 0].
struct BeamformedImage {
  ImagingGrid grid;
  ImageStage stage = ImageStage::raw;
  double dynamic_range_db = 0.0;  // meaningful for log_compressed only
  std::vector<double> pixels;     // nz x nx, row-major (depth rows)

  BeamformedImage(ImagingGrid g, ImageStage s)
      : grid(g), stage(s), pixels(g.num_pixels(), 0.0) {}

  double& at(std::size_t iz, std::size_t ix) {
    return pixels[iz * grid.nx() + ix];
  }
  double at(std::size_t iz, std::size_t ix) const {
    return pixels[iz * grid.nx() + ix];
  }
};

const char* to_string(ImageStage stage);

}  // namespace pabeam

#endif  // PABEAM_TYPES_HPP
