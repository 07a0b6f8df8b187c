#include <doctest.h>

#include <random>

#include "nichols/braided.hpp"
#include "nichols/errors.hpp"
#include "nichols/group.hpp"

using namespace nichols;

namespace {

IntTensor random_int_tensor(int dim, int degree, int terms, std::mt19937& rng) {
  IntTensor t(degree);
  for (int k = 0; k < terms; ++k) {
    Word w;
    for (int i = 0; i < degree; ++i) w.push_back(static_cast<int>(rng() % dim));
    t.add(w, static_cast<std::int64_t>(rng() % 7) - 3);
  }
  return t;
}

Braiding braiding_of(const char* label) { return Braiding::from_roots(*generate_root_system(coxeter_from_label(label))); }

}  // namespace

TEST_CASE("words") {
  Word w{1, 2, 3};
  CHECK(w.size() == 3);
  CHECK(w.reversed() == Word{3, 2, 1});
  CHECK(w.with_front(0) == Word{0, 1, 2, 3});
  CHECK(w.prefix(2) + w.suffix_from(2) == w);
  CHECK(w.to_string() == "(2,3,4)");
  CHECK(parse_word("2,3,4", 5) == w);
  CHECK_THROWS_AS(parse_word("0,1", 5), ParseError);
  CHECK_THROWS_AS(parse_word("1,x", 5), ParseError);
  CHECK(Word{1} < Word{0, 0});
  Word big;
  for (int i = 0; i < kMaxDegree; ++i) big.push_back(1);
  CHECK_THROWS_AS(big.push_back(1), BudgetExceeded);
}

TEST_CASE("braid relation and inverse") {
  std::mt19937 rng(3);
  for (const char* label : {"A3", "B2", "G2", "H3"}) {
    Braiding b = braiding_of(label);
    IntTensor t = random_int_tensor(b.dimension(), 3, 10, rng);
    CHECK(braid_apply(b, 0, braid_apply(b, 1, braid_apply(b, 0, t))) ==
          braid_apply(b, 1, braid_apply(b, 0, braid_apply(b, 1, t))));
    CHECK(inverse_braid_apply(b, 1, braid_apply(b, 1, t)) == t);
    CHECK(braid_apply(b, 0, inverse_braid_apply(b, 0, t)) == t);
  }
}

TEST_CASE("factorised symmetriser equals the Matsumoto sum") {
  // [DERIVED] independent route: sum over one reduced word per permutation
  std::mt19937 rng(11);
  for (const char* label : {"A2", "B2", "I2:5", "A3"}) {
    Braiding b = braiding_of(label);
    for (int n = 1; n <= 5; ++n) {
      IntTensor t = random_int_tensor(b.dimension(), n, 4, rng);
      CHECK(symmetrise(b, t) == symmetrise_matsumoto(b, t));
    }
  }
}

TEST_CASE("flip and minus flip") {
  Braiding f = Braiding::flip(3), g = Braiding::minus_flip(3);
  IntTensor t(Word{0, 1}, 1);
  CHECK(braid_apply(f, 0, t) == IntTensor(Word{1, 0}, 1));
  CHECK(braid_apply(g, 0, t) == IntTensor(Word{1, 0}, -1));
  // [DERIVED] exterior algebra: [3]! of a word with a repeated letter vanishes
  CHECK(symmetrise(g, IntTensor(Word{0, 1, 0}, 1)).is_zero());
  CHECK(symmetrise(f, IntTensor(Word{0, 1, 2}, 1)).size() == 6);
}

TEST_CASE("braiding validation") {
  // a non-distributive table is rejected
  std::vector<std::vector<SignedRoot>> table{{{0, 1}, {0, 1}}, {{1, 1}, {1, 1}}};
  CHECK_THROWS(Braiding::custom(table));
  std::vector<std::vector<SignedRoot>> ok{{{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}};
  CHECK_NOTHROW(Braiding::custom(ok));
}

TEST_CASE("grading is braid invariant") {
  std::mt19937 rng(5);
  for (const char* label : {"A3", "B2", "G2"}) {
    Braiding b = braiding_of(label);
    Grading gr(b);
    for (int k = 0; k < 30; ++k) {
      IntTensor t = random_int_tensor(b.dimension(), 4, 1, rng);
      if (t.is_zero()) continue;
      const Word w = t.terms().begin()->first;
      for (int pos = 0; pos < 3; ++pos)
        for (const auto& [v, c] : braid_apply(b, pos, IntTensor(w, 1)).terms()) CHECK(gr.of(v) == gr.of(w));
    }
    CHECK(gr.of(Word{}) == gr.identity());
  }
}

TEST_CASE("group action commutes with the braiding") {
  auto rs = generate_root_system(coxeter_from_label("B3"));
  Braiding b = Braiding::from_roots(*rs);
  auto g = ReflectionGroup::full(rs);
  std::mt19937 rng(9);
  IntTensor t = random_int_tensor(b.dimension(), 3, 6, rng);
  for (std::size_t i = 0; i < g.order(); i += 7)
    CHECK(act_on_tensor(g.element(i), braid_apply(b, 1, t)) == braid_apply(b, 1, act_on_tensor(g.element(i), t)));
}

TEST_CASE("derivative and symmetriser") {
  // x in ker [n]! iff every x d_a lies in ker [n-1]!; checked on a symmetrised image
  std::mt19937 rng(13);
  Braiding b = braiding_of("A2");
  for (int n = 2; n <= 4; ++n) {
    IntTensor t = random_int_tensor(b.dimension(), n, 5, rng);
    IntTensor s = symmetrise(b, t);
    for (int a = 0; a < b.dimension(); ++a) {
      // [n]! = ([n-1]! (x) id) o sum_k (move letter k to the end), so
      // [n]! t = sum_a ([n-1]! ((t d_a)) ) (x) a
      IntTensor lhs(n - 1);
      for (const auto& [w, c] : s.terms())
        if (w[n - 1] == a) lhs.add(w.prefix(n - 1), c);
      CHECK(lhs == symmetrise(b, right_derivative(b, a, t)));
    }
  }
}
