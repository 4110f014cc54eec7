#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace depthkit {

/// File could not be read, written, or parsed.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data makes the requested operation mathematically meaningless
/// (singular fit, degenerate quantile range, empty pixel set, ...).
class degenerate_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative optimization exceeded the blow-up guard.
class divergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// H x W single-precision depth field with optional per-pixel validity.
///
/// `values` is row-major with the top image row first. An empty `mask`
/// means every pixel is valid; otherwise mask[i] != 0 marks pixel i valid.
/// Valid values must be finite; metric depth additionally must be > 0,
/// which is enforced by the operations that require it.
struct DepthGrid {
  int width = 0;
  int height = 0;
  std::vector<float> values;
  std::vector<uint8_t> mask;  // empty => all valid

  DepthGrid() = default;
  DepthGrid(int w, int h, float fill = 0.0f)
      : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {}

  static DepthGrid fromValues(int w, int h, std::vector<float> v) {
    if (v.size() != static_cast<size_t>(w) * h)
      throw std::invalid_argument("value count does not match dimensions");
    DepthGrid g;
    g.width = w;
    g.height = h;
    g.values = std::move(v);
    return g;
  }

  size_t pixelCount() const { return static_cast<size_t>(width) * height; }

  float& at(int y, int x) { return values[static_cast<size_t>(y) * width + x]; }
  float at(int y, int x) const { return values[static_cast<size_t>(y) * width + x]; }

  bool isValid(int y, int x) const {
    return mask.empty() || mask[static_cast<size_t>(y) * width + x] != 0;
  }
  bool isValid(size_t i) const { return mask.empty() || mask[i] != 0; }

  void ensureMask() {
    if (mask.empty()) mask.assign(pixelCount(), 1);
  }
  void setValid(int y, int x, bool v) {
    ensureMask();
    mask[static_cast<size_t>(y) * width + x] = v ? 1 : 0;
  }

  bool fullyValid() const {
    if (mask.empty()) return true;
    for (uint8_t m : mask)
      if (!m) return false;
    return true;
  }

  size_t validCount() const {
    if (mask.empty()) return pixelCount();
    size_t n = 0;
    for (uint8_t m : mask) n += m ? 1 : 0;
    return n;
  }

  bool sameDims(const DepthGrid& o) const {
    return width == o.width && height == o.height;
  }
};

/// H' x W' x C dense feature field, row-major by pixel, channel-contiguous.
struct FeatureTensor {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<float> values;

  FeatureTensor() = default;
  FeatureTensor(int h, int w, int c, float fill = 0.0f)
      : height(h), width(w), channels(c),
        values(static_cast<size_t>(h) * w * c, fill) {}

  size_t pixelCount() const { return static_cast<size_t>(height) * width; }

  float& at(int y, int x, int c) {
    return values[(static_cast<size_t>(y) * width + x) * channels + c];
  }
  float at(int y, int x, int c) const {
    return values[(static_cast<size_t>(y) * width + x) * channels + c];
  }

  bool sameDims(const FeatureTensor& o) const {
    return height == o.height && width == o.width && channels == o.channels;
  }
};

/// Pinhole intrinsics in pixels. cx/cy follow the usual image convention:
/// 0 <= cx < width, 0 <= cy < height.
struct CameraIntrinsics {
  double fx = 0, fy = 0;
  double cx = 0, cy = 0;
  int width = 0, height = 0;

  void validate() const {
    if (!(fx > 0) || !(fy > 0)) throw std::invalid_argument("focal lengths must be positive");
    if (width <= 0 || height <= 0) throw std::invalid_argument("image size must be positive");
    if (!(cx >= 0 && cx < width)) throw std::invalid_argument("cx outside image");
    if (!(cy >= 0 && cy < height)) throw std::invalid_argument("cy outside image");
  }
};

/// Scale/shift pair mapping normalized relative depth onto metric depth.
struct AffineParams {
  double s = 1.0;
  double t = 0.0;
};

/// Per-pixel unit normals in the camera frame.
struct NormalGrid {
  int width = 0;
  int height = 0;
  std::vector<std::array<float, 3>> vectors;

  const std::array<float, 3>& at(int y, int x) const {
    return vectors[static_cast<size_t>(y) * width + x];
  }
  std::array<float, 3>& at(int y, int x) {
    return vectors[static_cast<size_t>(y) * width + x];
  }
};

namespace detail {

inline void requireSameDims(const DepthGrid& a, const DepthGrid& b, const char* what) {
  if (!a.sameDims(b)) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

inline void requireFullyValid(const DepthGrid& g, const char* what) {
  if (!g.fullyValid())
    throw std::invalid_argument(std::string(what) + ": invalid pixels present");
  for (float v : g.values)
    if (!std::isfinite(v))
      throw std::invalid_argument(std::string(what) + ": non-finite value present");
}

}  // namespace detail

}  // namespace depthkit
