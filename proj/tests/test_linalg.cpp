#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "nichols/linalg.hpp"

using namespace nichols;

namespace {

SparseRow random_row(std::uint32_t ncols, int nnz, std::mt19937& rng) {
  std::map<std::uint32_t, std::int64_t> m;
  for (int k = 0; k < nnz; ++k) m[rng() % ncols] = static_cast<std::int64_t>(rng() % 9) - 4;
  SparseRow r;
  for (auto [c, v] : m)
    if (v) r.emplace_back(c, v);
  return r;
}

SparseRow combine(const SparseRow& a, const SparseRow& b, std::int64_t x, std::int64_t y) {
  std::map<std::uint32_t, std::int64_t> m;
  for (auto [c, v] : a) m[c] += x * v;
  for (auto [c, v] : b) m[c] += y * v;
  SparseRow r;
  for (auto [c, v] : m)
    if (v) r.emplace_back(c, v);
  return r;
}

std::vector<SparseRow> random_dependent_rows(std::mt19937& rng, int n, std::uint32_t ncols) {
  std::vector<SparseRow> rows;
  for (int k = 0; k < n; ++k) {
    if (rows.size() >= 2 && rng() % 3 == 0)
      rows.push_back(combine(rows[rng() % rows.size()], rows[rng() % rows.size()], 1 + rng() % 3,
                             static_cast<std::int64_t>(rng() % 5) - 2));
    else
      rows.push_back(random_row(ncols, 1 + rng() % 5, rng));
  }
  return rows;
}

}  // namespace

TEST_CASE("modular selection agrees with the exact reference") {
  std::mt19937 rng(21);
  for (int t = 0; t < 200; ++t) {
    auto rows = random_dependent_rows(rng, 2 + t % 25, 3 + t % 17);
    Selection exact = select_independent_exact(rows);
    Selection fast = select_independent(rows);
    CHECK(fast.selected == exact.selected);
    for (std::uint64_t p : kPrimes) CHECK(select_independent_mod_p(rows, p).selected == exact.selected);
    // every rejected row lies in the span of the kept rows before it
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (std::find(exact.selected.begin(), exact.selected.end(), k) == exact.selected.end())
        CHECK(solve_in_span(rows, exact.selected, exact.pivots, rows[k]).has_value());
  }
}

TEST_CASE("dependence visible only over Q is caught") {
  // rows independent mod nothing but dependent with a huge coefficient: r2 = p * r0 + r1 reduces to r1 mod p
  const std::int64_t p = static_cast<std::int64_t>(kPrimes[0]);
  std::vector<SparseRow> rows{{{0, 1}}, {{1, 1}}, {{0, p}, {1, 1}}, {{2, 1}}};
  CHECK(select_independent(rows).selected == select_independent_exact(rows).selected);
  // independent over Q but dependent mod p: (1, p) and (1, 0) -> mod p equal
  std::vector<SparseRow> rows2{{{0, 1}, {1, p}}, {{0, 1}}};
  CHECK(select_independent_mod_p(rows2, kPrimes[0]).selected.size() == 1);
  Selection s = select_independent(rows2);
  CHECK(s.selected.size() == 2);
  CHECK(s.selected == select_independent_exact(rows2).selected);
}

TEST_CASE("dense rational helpers") {
  RationalMatrix a{{1, 2}, {3, 4}};
  auto inv = invert(a);
  REQUIRE(inv);
  CHECK((*inv)[0][0] == Rational(-2));
  CHECK((*inv)[1][0] == Rational(3, 2));
  CHECK_FALSE(invert({{1, 2}, {2, 4}}).has_value());
  CHECK(rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
  auto ns = nullspace({{1, 1, 0}, {0, 1, 1}}, 3);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] - ns[0][1] + ns[0][2] == 3 * ns[0][0]);
  CHECK(primitive_integer_vector({Rational(1, 2), Rational(-1, 3)}) == std::vector<Integer>{3, -2});
  CHECK(primitive_integer_vector({Rational(-2), Rational(4)}) == std::vector<Integer>{1, -2});
}
