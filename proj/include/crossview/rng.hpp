#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace crossview {

// Deterministic random source. The engine is std::mt19937_64 (its output
// sequence is pinned by the standard), and all distributions are implemented
// here instead of via std::uniform_*_distribution so that streams are
// reproducible across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Uniform integer in [0, n), n >= 1. Rejection-free modulo bias is
    // negligible for the small n used here, but we reject anyway.
    std::uint64_t uniform_int(std::uint64_t n);

    // Standard normal via Box-Muller; one spare value is cached.
    double normal();

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Mixes a root seed with a tag and up to three integer keys into a new
// seed. Used to give every (epoch, sample) its own independent stream so
// that worker scheduling never changes results.
std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                          std::uint64_t k0 = 0, std::uint64_t k1 = 0,
                          std::uint64_t k2 = 0);

// FNV-1a over a byte string; also used for config hashing.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace crossview
