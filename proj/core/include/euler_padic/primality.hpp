#pragma once

#include <cstdint>

namespace euler_padic {

// Deterministic Miller-Rabin over the first twelve prime bases.
// Correct for every n < 2^64.
bool is_prime(std::uint64_t n);

}  // namespace euler_padic
