#pragma once

#include <cstdint>

namespace mwext {

// Guards for definition-level brute force. Exceeding one is a hard error.
struct Limits {
  std::uint64_t max_enum = std::uint64_t{1} << 20;  // codewords enumerated (q^k)
  std::uint64_t max_ring = std::uint64_t{1} << 16;  // members of the cozero ring
  std::uint64_t max_search = 10'000'000;            // brute-force search space
};

// a^b, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

}  // namespace mwext
