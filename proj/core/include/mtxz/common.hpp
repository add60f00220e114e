// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtxz {

// Usage errors map to exit code 1, data errors to 2 (see tools/).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Row-major float32 matrix. The training and codec code addresses rows
/// directly, so storage is a single contiguous buffer.
struct DenseMatrix {
  int64_t rows = 0;
  int32_t dims = 0;
  std::vector<float> values;

  DenseMatrix() = default;
  DenseMatrix(int64_t r, int32_t d)
      : rows(r), dims(d), values(static_cast<size_t>(r) * d, 0.0f) {}

  float* row(int64_t i) { return values.data() + static_cast<size_t>(i) * dims; }
  const float* row(int64_t i) const {
    return values.data() + static_cast<size_t>(i) * dims;
  }
  std::span<float> row_span(int64_t i) { return {row(i), static_cast<size_t>(dims)}; }
  std::span<const float> row_span(int64_t i) const {
    return {row(i), static_cast<size_t>(dims)};
  }
};

inline double dot(const float* a, const float* b, int32_t d) {
  double s = 0;
  for (int32_t i = 0; i < d; i++) s += static_cast<double>(a[i]) * b[i];
  return s;
}

inline double squared_l2_dist(const float* a, const float* b, int32_t d) {
  double s = 0;
  for (int32_t i = 0; i < d; i++) {
    double t = static_cast<double>(a[i]) - b[i];
    s += t * t;
  }
  return s;
}

inline double l2_norm(const float* a, int32_t d) {
  double s = 0;
  for (int32_t i = 0; i < d; i++) s += static_cast<double>(a[i]) * a[i];
  return std::sqrt(s);
}

/// splitmix64 finalizer; used wherever an id needs to be scattered
/// (Bloom filter probes, hashed row addressing).
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace mtxz
