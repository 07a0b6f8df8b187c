#include <doctest.h>

#include "nichols/nichols.hpp"

using namespace nichols;

namespace {

Braiding braiding_of(const char* label) { return Braiding::from_roots(*generate_root_system(coxeter_from_label(label))); }

}  // namespace

TEST_CASE("quadratic cover of A2 equals B_W") {
  // [DERIVED] independent rank oracle over the 3-root system
  auto q = quadratic_hilbert_series(braiding_of("A2"), 6);
  q.resize(6);
  CHECK(q == std::vector<std::size_t>{1, 3, 4, 3, 1, 0});
}

TEST_CASE("quadratic cover of A3 in low degree") {
  // [DERIVED] (1+t)^2 (1+t+t^2)^2 (1+t+t^2+t^3)^2 expanded: 1, 6, 19, 42, ...
  auto q = quadratic_hilbert_series(braiding_of("A3"), 3);
  CHECK(q == std::vector<std::size_t>{1, 6, 19, 42});
}

TEST_CASE("quadratic cover of B2 exceeds B_W from degree 4") {
  auto q = quadratic_hilbert_series(braiding_of("B2"), 5);
  CHECK(q[0] == 1);
  CHECK(q[1] == 4);
  CHECK(q[2] == 8);
  CHECK(q[3] == 12);
  CHECK(q[4] > 14);
}

TEST_CASE("flip braidings give polynomial and exterior algebras") {
  CHECK(quadratic_hilbert_series(Braiding::flip(2), 4) == std::vector<std::size_t>{1, 2, 3, 4, 5});
  auto e = quadratic_hilbert_series(Braiding::minus_flip(3), 5);
  e.resize(5);
  CHECK(e == std::vector<std::size_t>{1, 3, 3, 1, 0});
}
