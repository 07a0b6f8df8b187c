#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nichols/coxeter.hpp"
#include "nichols/errors.hpp"

using namespace nichols;

TEST_CASE("labels") {
  CHECK(coxeter_from_label("A3").m == std::vector<std::vector<int>>{{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
  CHECK(coxeter_from_label("B2").m[0][1] == 4);
  CHECK(coxeter_from_label("G2").m[0][1] == 6);
  CHECK(coxeter_from_label("I2:7").m[0][1] == 7);
  CHECK(coxeter_from_label("I2(5)").m[0][1] == 5);
  CHECK(coxeter_from_label("H3").rank == 3);
  CHECK(coxeter_from_label("D4").rank == 4);
  CHECK_THROWS_AS(coxeter_from_label("Q3"), ParseError);
  CHECK_THROWS_AS(coxeter_from_label("I2:x"), ParseError);
}

TEST_CASE("matrix text") {
  auto cs = parse_coxeter_text("# B3\nrank: 3\nmatrix:\n1 3 2\n3 1 4\n2 4 1\n");
  CHECK(cs.rank == 3);
  CHECK(cs.m[1][2] == 4);
  CHECK(cs.canonical_text() == coxeter_from_label("B3").canonical_text());
  CHECK_THROWS_AS(parse_coxeter_text("rank: 2\nmatrix:\n1 3\n4 1\n"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_text("rank: 2\nmatrix:\n1 3\n"), ParseError);
  CHECK_THROWS(make_coxeter_system({{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(make_coxeter_system({{2, 3}, {3, 1}}), ParseError);
}

namespace {

int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

}  // namespace

TEST_CASE("Matsumoto section") {
  for (int n = 1; n <= 6; ++n) {
    auto sec = matsumoto_section(n);
    int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(static_cast<int>(sec.size()) == fact);
    std::set<std::vector<int>> perms;
    for (const auto& e : sec) {
      perms.insert(e.permutation);
      // [DERIVED] reduced: length equals the inversion count
      CHECK(static_cast<int>(e.word.size()) == inversions(e.permutation));
      // applying the transpositions as position swaps to the identity, rightmost
      // factor first, must yield the permutation or its inverse; both are
      // fine for a section as long as it is consistent
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      for (int s : e.word) std::swap(p[s], p[s + 1]);
      std::vector<int> inv(n);
      for (int i = 0; i < n; ++i) inv[p[i]] = i;
      CHECK((p == e.permutation || inv == e.permutation));
    }
    CHECK(static_cast<int>(perms.size()) == fact);
  }
  CHECK_THROWS_AS(matsumoto_section(10), BudgetExceeded);
}

TEST_CASE("dihedral Bruhat graph path counts") {
  // [DERIVED] m=2: square graph, 2 paths to v_2
  CHECK(DihedralBruhatGraph(2).paths_to(2).size() == 2);
  // [PAPER] 2^(l-1) paths
  CHECK(DihedralBruhatGraph(3).paths_to(3).size() == 4);
  CHECK(DihedralBruhatGraph(5).paths_to(-4).size() == 8);
  for (int m = 2; m <= 8; ++m) {
    DihedralBruhatGraph g(m);
    CHECK(g.paths_to(0).size() == 1);
    for (int l = 1; l < m; ++l) {
      CHECK(g.paths_to(l).size() == (std::size_t{1} << (l - 1)));
      CHECK(g.paths_to(-l).size() == (std::size_t{1} << (l - 1)));
    }
    CHECK(g.paths_to(m).size() == (std::size_t{1} << (m - 1)));
    for (const auto& e : g.edges()) {
      CHECK(e.label >= 0);
      CHECK(e.label < m);
    }
  }
  CHECK(DihedralBruhatGraph::normalise(-5, 5) == 5);
}
