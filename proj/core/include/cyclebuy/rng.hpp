#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cyclebuy {

// Name recorded in manifests so outputs can be reproduced elsewhere.
inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64; child(tag, i) = sm(sm(s ^ sm(fnv1a64(tag))) ^ sm(i + 0x632be59bd9b4e019)), "
    "sm = splitmix64; "
    "u01 = (x >> 11) * 2^-53; bounded = Lemire multiply-shift";

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view text);

// Master seed plus a deterministic derivation rule. Children derived with
// the same (tag, index) path are identical; different paths are
// statistically independent.
class SeedSpec {
 public:
  constexpr SeedSpec() = default;
  constexpr explicit SeedSpec(std::uint64_t master_seed) : value_(master_seed) {}

  constexpr std::uint64_t value() const { return value_; }

  SeedSpec child(std::string_view tag, std::uint64_t index = 0) const;

  friend constexpr bool operator==(const SeedSpec&, const SeedSpec&) = default;

 private:
  std::uint64_t value_ = 0;
};

// Thin wrapper giving platform-independent draws on top of mt19937_64.
class Rng {
 public:
  explicit Rng(SeedSpec seed) : engine_(seed.value()) {}
  // Engine for a named purpose derived from `seed`.
  Rng(SeedSpec seed, std::string_view purpose) : Rng(seed.child(purpose)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on [0, bound); bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace cyclebuy
