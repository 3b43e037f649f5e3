#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tautilt {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Malformed user input: bad partitions, bad quiver files, bad parameters.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A semi-decision procedure ran out of its resource budget (node caps,
// search boxes, recursion budgets).  The caller must treat the question as
// unanswered, never as decided.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A randomized certificate (indecomposability, isomorphism) could not be
// established within the retry budget.  Raised instead of guessing.
struct certification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// FNV-1a; used for content-addressed cache names and to derive deterministic
// seeds from module data, so randomized steps do not depend on thread timing.
struct Fnv64 {
  uint64_t h = 1469598103934665603ull;

  void feed_byte(uint8_t b) {
    h ^= b;
    h *= 1099511628211ull;
  }
  void feed(const void* data, size_t len) {
    const uint8_t* p = static_cast<const uint8_t*>(data);
    for (size_t i = 0; i < len; ++i) feed_byte(p[i]);
  }
  void feed_u64(uint64_t v) {
    for (int i = 0; i < 8; ++i) feed_byte(static_cast<uint8_t>(v >> (8 * i)));
  }
  void feed_str(const std::string& s) {
    feed(s.data(), s.size());
    feed_byte(0xff);  // length separator
  }
};

// splitmix64: small deterministic RNG seeded from content hashes.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t m) { return m ? next() % m : 0; }
};

}  // namespace tautilt
