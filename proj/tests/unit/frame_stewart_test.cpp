#include <doctest.h>

#include "hanoi/errors.hpp"
#include "hanoi/frame_stewart.hpp"
#include "oracles.hpp"

using namespace hanoi;

TEST_CASE("f4 exponent table") {
  const int expected[] = {0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 6};
  for (std::uint64_t j = 1; j <= 22; ++j) CHECK(f4_exponent(j) == expected[j - 1]);
  CHECK_THROWS_AS(f4_exponent(0), InvalidArgument);
  const auto table = exponent_table(22);
  CHECK(table == std::vector<int>(std::begin(expected), std::end(expected)));
}

TEST_CASE("stewart count matches the triangular oracle") {
  const MoveCount first[] = {1, 3, 5, 9, 13, 17, 25, 33, 41, 49, 65, 81};
  for (int n = 1; n <= 12; ++n) CHECK(stewart_count(n) == first[n - 1]);
  CHECK(stewart_count(0) == 0);
  for (int n = 0; n <= 300; ++n) CHECK(stewart_count(n) == oracle::stewart(n));
  CHECK_THROWS_AS(stewart_count(5000), Overflow);
}

TEST_CASE("frame-stewart counts") {
  for (int k = 3; k <= 7; ++k) {
    for (int n = 0; n <= 30; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(frame_stewart_count(n, k) == oracle::frame_stewart(n, k));
    }
  }
  for (int n = 0; n <= 60; ++n) CHECK(frame_stewart_count(n, 4) == stewart_count(n));
  CHECK(frame_stewart_count(10, 3) == 1023);
  CHECK_THROWS_AS(frame_stewart_count(70, 3), Overflow);
  CHECK_THROWS_AS(frame_stewart_count(3, 2), InvalidArgument);
}

TEST_CASE("table marks overflow as missing") {
  const FrameStewartTable t(80, 4);
  CHECK(t.count(63, 3).has_value());
  CHECK_FALSE(t.count(64, 3).has_value());
  CHECK(t.count(80, 4).has_value());
}

TEST_CASE("optimal split takes the smallest minimizing t") {
  const SplitChoice s = optimal_split(5, 4);
  CHECK(s.t == 2);
  CHECK(s.cost == 13);
  for (int n = 1; n <= 20; ++n) {
    const SplitChoice c = optimal_split(n, 4);
    for (int t = 1; t < c.t; ++t) {
      CHECK(2 * frame_stewart_count(n - t, 4) + frame_stewart_count(t, 3) > c.cost);
    }
  }
  CHECK_THROWS_AS(optimal_split(5, 3), InvalidArgument);
}

TEST_CASE("generated solutions are legal minimal-count transfers") {
  for (int k = 3; k <= 6; ++k) {
    for (int n = 0; n <= 9; ++n) {
      const MoveSequence s = generate_solution(n, k, 0, k - 1);
      CHECK(s.size() == frame_stewart_count(n, k));
      CHECK(oracle::transfers_to(s, k - 1));
    }
  }
  CHECK_THROWS_AS(generate_solution(3, 4, 1, 1), InvalidArgument);
}

TEST_CASE("symmetric solutions mirror their demolishing phase") {
  for (int n = 1; n <= 10; ++n) {
    const MoveSequence s = generate_symmetric_solution(n, 0, 2);
    CHECK(s.size() == stewart_count(n));
    CHECK(oracle::transfers_to(s, 2));
    const std::size_t l = (s.size() + 1) / 2;
    CHECK(s.moves[l - 1].disk == n);
    const auto t = oracle::triples(s);
    for (std::size_t u = 1; u < l; ++u) {
      const auto& a = t[l - 1 - u];
      const auto& b = t[l - 1 + u];
      CHECK(b == oracle::Triple{a.disk, a.lands_on, a.was_on});
    }
  }
}

TEST_CASE("generated costs take the triangular shape") {
  // At most t(t+1)/2 disks cost <= 2^(t-1) once n is large enough.
  const MoveSequence s = generate_solution(15, 4, 0, 1);
  const CostProfile c = cost_profile(s);
  for (int t = 1; t <= 5; ++t) {
    const std::uint64_t limit = std::uint64_t{1} << (t - 1);
    int cheap = 0;
    for (auto v : c.counts) cheap += v <= limit;
    CHECK(cheap == t * (t + 1) / 2);
  }
}
