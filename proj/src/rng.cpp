#include "summax/rng.hpp"

#include <cmath>

namespace summax {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t& c0, std::uint32_t& c1, std::uint32_t& c2,
                         std::uint32_t& c3, std::uint32_t k0, std::uint32_t k1) {
  const std::uint64_t p0 = std::uint64_t(kMul0) * c0;
  const std::uint64_t p1 = std::uint64_t(kMul1) * c2;
  const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
  const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
  const std::uint32_t n0 = hi1 ^ c1 ^ k0;
  const std::uint32_t n1 = lo1;
  const std::uint32_t n2 = hi0 ^ c3 ^ k1;
  const std::uint32_t n3 = lo0;
  c0 = n0;
  c1 = n1;
  c2 = n2;
  c3 = n3;
}

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;  // 2^-53
constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

PhiloxBlock philox4x32(std::uint64_t key, const std::array<std::uint32_t, 4>& counter) {
  std::uint32_t c0 = counter[0], c1 = counter[1], c2 = counter[2], c3 = counter[3];
  std::uint32_t k0 = std::uint32_t(key), k1 = std::uint32_t(key >> 32);
  for (int round = 0; round < 10; ++round) {
    philox_round(c0, c1, c2, c3, k0, k1);
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return PhiloxBlock{{c0, c1, c2, c3}};
}

std::uint64_t RngStream::bits_at(std::uint64_t index) {
  const std::uint64_t block = index >> 1;
  if (block != cache_block_) {
    const std::array<std::uint32_t, 4> ctr = {
        std::uint32_t(block), std::uint32_t(block >> 32),
        std::uint32_t(stream_id_), std::uint32_t(stream_id_ >> 32)};
    const PhiloxBlock out = philox4x32(seed_, ctr);
    cache_[0] = (std::uint64_t(out.w[1]) << 32) | out.w[0];
    cache_[1] = (std::uint64_t(out.w[3]) << 32) | out.w[2];
    cache_block_ = block;
  }
  return cache_[index & 1];
}

std::uint64_t RngStream::next_bits() { return bits_at(index_++); }

double RngStream::next_uniform() {
  // 53-bit mantissa offset by half an ulp: strictly inside (0,1).
  return (double(next_bits() >> 11) + 0.5) * kTwoPow53Inv;
}

double RngStream::next_normal() {
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double RngStream::next_exponential() { return -std::log(next_uniform()); }

RngStream make_stream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t rep) {
  // Stream id layout: purpose in the top 8 bits, replication index below.
  const std::uint64_t id =
      (std::uint64_t(static_cast<std::uint32_t>(purpose)) << 56) | (rep & 0x00FFFFFFFFFFFFFFull);
  return RngStream(seed, id);
}

}  // namespace summax
