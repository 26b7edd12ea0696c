#pragma once

#include <cstdint>
#include <random>

namespace ras {

/// Deterministic random stream identified by (master_seed, stream_id).
///
/// Each stream is an independent mt19937_64 engine keyed through std::seed_seq
/// on both identifiers, so a Monte-Carlo trial can derive its own stream from
/// its index and trials may be evaluated in any order. The seeding algorithm and
/// the engine are fully specified by the standard, and the variate transforms
/// below are hand-written, so sequences are identical across platforms.
///
/// Not thread-safe: one consumer per instance.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  /// Standard normal via Box-Muller (caches the second variate).
  double normal();
  /// Unit-mean exponential.
  double exponential();
  /// Gamma(shape, 1) for a positive integer shape, as a sum of exponentials.
  double gamma_int(int shape);
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

RngStream derive_stream(std::uint64_t master_seed, std::uint64_t stream_id);

/// Tags combined with a trial index to form disjoint stream ids.
enum class StreamPurpose : std::uint64_t {
  kChannel = 0,
  kRowOrder = 1,
  kBoundSample = 2,
};

/// Stream id for (purpose, trial); purposes occupy the top 16 bits.
constexpr std::uint64_t stream_id_for(StreamPurpose purpose, std::uint64_t trial) {
  return (static_cast<std::uint64_t>(purpose) << 48) | (trial & ((std::uint64_t{1} << 48) - 1));
}

}  // namespace ras
