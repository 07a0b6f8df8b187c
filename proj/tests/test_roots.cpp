#include <doctest.h>

#include <map>

#include "nichols/errors.hpp"
#include "nichols/group.hpp"
#include "nichols/roots.hpp"

using namespace nichols;

namespace {

std::shared_ptr<const RootSystem> rs_of(const char* label) { return generate_root_system(coxeter_from_label(label)); }

}  // namespace

TEST_CASE("positive root counts and orbits") {
  // [DERIVED] standard tables: |R+| = N, orbits = number of root lengths
  const std::map<std::string, std::pair<int, int>> expect{
      {"A1", {1, 1}}, {"A2", {3, 1}}, {"A3", {6, 1}}, {"A4", {10, 1}}, {"B2", {4, 2}}, {"B3", {9, 2}},
      {"G2", {6, 2}}, {"H3", {15, 1}}, {"I2:5", {5, 1}}, {"I2:7", {7, 1}}, {"I2:8", {8, 2}}, {"D4", {12, 1}}};
  for (const auto& [label, np] : expect) {
    auto rs = rs_of(label.c_str());
    CAPTURE(label);
    CHECK(rs->size() == np.first);
    CHECK(rs->orbit_count() == np.second);
  }
}

TEST_CASE("reflections act as signed permutations") {
  for (const char* label : {"A3", "B3", "H3", "G2"}) {
    auto rs = rs_of(label);
    for (int t = 0; t < rs->size(); ++t) {
      CHECK(rs->reflect(t, t) == SignedRoot{t, -1});
      for (int i = 0; i < rs->size(); ++i) {
        SignedRoot r = rs->reflect(t, i);
        CHECK(rs->reflect(t, r) == SignedRoot{i, 1});
        // [DERIVED] vector formula s_t(x) = x - 2 (x, t) t, with (t, t) = 1
        RootVector v = rs->reflect(t, rs->root(i));
        auto found = rs->find(v);
        REQUIRE(found);
        CHECK(*found == r);
      }
      CHECK(rs->inner(t, t) == FieldElement(rs->field(), 1));
    }
  }
}

TEST_CASE("heights and simple roots") {
  auto rs = rs_of("A3");
  for (int i = 0; i < 3; ++i) CHECK(rs->height(i) == FieldElement(rs->field(), 1));
  CHECK(rs->height(rs->size() - 1) == FieldElement(rs->field(), 3));
  CHECK_THROWS(generate_root_system(make_coxeter_system({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}), 50));
}

TEST_CASE("dihedral subsystems") {
  auto a3 = dihedral_subsystems(*rs_of("A3"));
  // [DERIVED] A3 planes: 4 of type A2 and 3 of type A1 x A1
  std::map<int, int> count;
  for (const auto& d : a3) ++count[d.m];
  CHECK(count[3] == 4);
  CHECK(count[2] == 3);
  CHECK(dihedral_subsystems(*rs_of("B2")).size() == 1);
  for (const char* label : {"B3", "H3", "G2", "I2:7"}) {
    auto rs = rs_of(label);
    for (const auto& d : dihedral_subsystems(*rs)) {
      // s_{gamma_i} gamma_j = gamma_{2i - j + m}
      for (int i = 0; i < d.m; ++i)
        for (int j = 0; j < d.m; ++j) {
          SignedRoot lhs = rs->reflect(d.gamma[i], d.gamma[j]);
          CHECK(lhs == dihedral_gamma(d, 2 * i - j + d.m));
        }
      CHECK(dihedral_gamma(d, d.m).sign == -1);
      CHECK(dihedral_gamma(d, d.m).index == d.gamma[0]);
    }
  }
}

TEST_CASE("group orders, lengths and exponents") {
  const std::map<std::string, std::pair<std::size_t, std::vector<int>>> expect{
      {"A1", {2, {1}}},       {"A2", {6, {1, 2}}},       {"A3", {24, {1, 2, 3}}}, {"B2", {8, {1, 3}}},
      {"B3", {48, {1, 3, 5}}}, {"G2", {12, {1, 5}}},     {"H3", {120, {1, 5, 9}}}, {"I2:7", {14, {1, 6}}},
      {"D4", {192, {1, 3, 3, 5}}}};
  for (const auto& [label, oe] : expect) {
    CAPTURE(label);
    auto rs = rs_of(label.c_str());
    auto g = ReflectionGroup::full(rs);
    CHECK(g.order() == oe.first);
    CHECK(g.exponents() == oe.second);
    std::size_t prod = 1;
    for (int e : oe.second) prod *= e + 1;
    CHECK(prod == g.order());
    CHECK(g.length(g.longest_index()) == rs->size());
    for (std::size_t i = 0; i < g.order(); ++i) {
      CHECK(g.length(i) == static_cast<int>(g.reduced_word(i).size()));
      CHECK(g.length_of(g.element(i)) == g.length(i));
      CHECK(g.multiply(i, g.inverse(i)) == g.identity_index());
    }
    if (g.order() <= 48)
      for (std::size_t v = 0; v < g.order(); ++v)
        for (std::size_t w = 0; w < g.order(); ++w) CHECK(g.length(g.multiply(v, w)) <= g.length(v) + g.length(w));
  }
}

TEST_CASE("reflection subgroups") {
  auto rs = rs_of("B2");
  std::vector<int> short_roots;
  for (int i = 0; i < rs->size(); ++i)
    if (rs->orbit(i) == rs->orbit(0)) short_roots.push_back(i);
  auto g = ReflectionGroup::generated_by(rs, short_roots);
  // [DERIVED] two orthogonal reflections generate A1 x A1
  CHECK(g.order() == 4);
  CHECK(g.simple_roots().size() == 2);
  CHECK_THROWS(ReflectionGroup::generated_by(rs, {0, 1}));
}
