#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bm/rational.hpp"

namespace bm {

/// Deterministic RNG wrapper. All draws go through the fixed-algorithm
/// helpers below instead of std distributions, whose output is
/// implementation-defined; identical seeds reproduce identical streams.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform integer in [lo, hi], inclusive. Rejection sampling, unbiased.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Uniform double in [0, 1).
    double uniform_real();

    /// Uniform rational numerator/denom with numerator in [-num_range, num_range].
    Rational uniform_rational(std::int64_t num_range, std::int64_t denom);

  private:
    std::mt19937_64 gen_;
};

/// Stream-splitting helper: independent child seed for worker `index`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// FNV-1a 64-bit content hash, hex-encoded; used for run-manifest input hashes.
std::string fnv1a_hex(const std::string& bytes);

/// Minimal `key = value` config-file parser ('#' comments, blank lines ok).
/// Values keep everything after '=' trimmed; repeated keys keep the last.
std::map<std::string, std::string> parse_key_value_file(const std::string& path);

/// Splits a value on whitespace/commas into tokens.
std::vector<std::string> split_tokens(const std::string& value);

}  // namespace bm
