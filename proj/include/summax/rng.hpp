#pragma once

#include <array>
#include <cstdint>

namespace summax {

// Philox4x32-10 counter-based generator. A (seed, stream) pair plus a draw
// counter fully determines every output, so replications can be generated
// on any number of threads with identical results.
struct PhiloxBlock {
  std::array<std::uint32_t, 4> w;
};

PhiloxBlock philox4x32(std::uint64_t key, const std::array<std::uint32_t, 4>& counter);

// Stream purposes keep the draws used by different sampling stages disjoint.
enum class StreamPurpose : std::uint32_t {
  innovations = 1,
  coefficients = 2,
  atoms = 3,
  limit_assembly = 4,
  generic = 5,
};

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_id_(stream_id) {}

  // Uniform on (0,1), endpoints excluded.
  double next_uniform();
  // Standard normal via Box-Muller; consumes two uniforms per draw.
  double next_normal();
  // Exponential(1).
  double next_exponential();
  std::uint64_t next_bits();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t index_ = 0;   // 64-bit draw counter
  std::uint64_t cache_[2] = {0, 0};
  std::uint64_t cache_block_ = ~std::uint64_t{0};

  std::uint64_t bits_at(std::uint64_t index);
};

// Streams for replication `rep` of a given purpose. Distinct (purpose, rep)
// pairs never share counters.
RngStream make_stream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t rep);

}  // namespace summax
