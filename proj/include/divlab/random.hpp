// Copyright 2026 The divlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIVLAB_RANDOM_HPP
#define DIVLAB_RANDOM_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>

namespace divlab {

/// Philox4x32-10 counter-based generator.
///
/// The stream is a pure function of (key, counter), so a generator can be
/// split into independent children by hashing a stream id into a new key.
/// All distributions below are implemented here rather than through
/// <random> so that outputs are bit-identical across standard libraries.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed) : key_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  std::uint64_t seed() const { return key_; }

  result_type operator()() {
    if (buffered_) {
      buffered_ = false;
      return buffer_;
    }
    const auto block = philox(key_, counter_++);
    buffer_ = (std::uint64_t(block[2]) << 32) | block[3];
    buffered_ = true;
    return (std::uint64_t(block[0]) << 32) | block[1];
  }

  /// Independent child stream.
  CounterRng split(std::uint64_t stream) const { return CounterRng(derive(key_, stream)); }

  /// Uniform on [0, 1).
  double uniform() { return double((*this)() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal (Box-Muller, both uniforms fresh).
  double normal() {
    double u1 = uniform();
    const double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Complex Gaussian with E|z|^2 = 1.
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : (*this)() % n; }

  /// Hash a parent key and a stream id into a child key.
  static std::uint64_t derive(std::uint64_t key, std::uint64_t stream) {
    const auto block = philox(key ^ 0x9E3779B97F4A7C15ULL, stream);
    return (std::uint64_t(block[0]) << 32) | block[1];
  }

  /// Key for a path of stream ids, e.g. derive_path(master, {point, sample}).
  static std::uint64_t derive_path(std::uint64_t key, std::initializer_list<std::uint64_t> path) {
    for (auto id : path) key = derive(key, id);
    return key;
  }

 private:
  static std::array<std::uint32_t, 4> philox(std::uint64_t key, std::uint64_t counter) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u, kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u, kWeyl1 = 0xBB67AE85u;
    std::array<std::uint32_t, 4> c{std::uint32_t(counter), std::uint32_t(counter >> 32), 0x243F6A88u,
                                   0x85A308D3u};
    std::uint32_t k0 = std::uint32_t(key), k1 = std::uint32_t(key >> 32);
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t(kMul0) * c[0];
      const std::uint64_t p1 = std::uint64_t(kMul1) * c[2];
      c = {std::uint32_t(p1 >> 32) ^ c[1] ^ k0, std::uint32_t(p1), std::uint32_t(p0 >> 32) ^ c[3] ^ k1,
           std::uint32_t(p0)};
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    return c;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::uint64_t buffer_ = 0;
  bool buffered_ = false;
};

}  // namespace divlab

#endif  // DIVLAB_RANDOM_HPP
