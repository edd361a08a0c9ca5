#include "dsc/rng.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace dsc;

TEST_CASE("philox known-answer vectors") {
  // reference vectors for the 10-round 4x32 configuration
  CHECK(Philox::block({0, 0, 0, 0}, {0, 0}) ==
        Philox::Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(Philox::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                      {0xffffffffu, 0xffffffffu}) ==
        Philox::Block{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(Philox::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                      {0xa4093822u, 0x299f31d0u}) ==
        Philox::Block{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams are deterministic and distinct") {
  Philox a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  bool differs_c = false, differs_d = false;
  for (int i = 0; i < 256; ++i) {
    const std::uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
    differs_c |= va != c.next_u64();
    differs_d |= va != d.next_u64();
  }
  CHECK(differs_c);
  CHECK(differs_d);
}

TEST_CASE("first block matches the counter layout") {
  Philox rng(0, 0);
  const auto block = Philox::block({0, 0, 0, 0}, {0, 0});
  const std::uint64_t expected0 = std::uint64_t{block[0]} | (std::uint64_t{block[1]} << 32);
  const std::uint64_t expected1 = std::uint64_t{block[2]} | (std::uint64_t{block[3]} << 32);
  CHECK(rng.next_u64() == expected0);
  CHECK(rng.next_u64() == expected1);
}

TEST_CASE("uniform doubles stay in range") {
  Philox rng(1, 0);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
}

TEST_CASE("uniform_below is in range and roughly uniform") {
  Philox rng(5, 1);
  CHECK_THROWS_AS(rng.uniform_below(0), std::domain_error);
  CHECK(rng.uniform_below(1) == 0);
  std::uint64_t counts[7] = {};
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    const std::uint64_t v = rng.uniform_below(7);
    REQUIRE(v < 7);
    ++counts[v];
  }
  for (std::uint64_t c : counts) {
    CHECK(c > draws / 7 - 600);
    CHECK(c < draws / 7 + 600);
  }
}
