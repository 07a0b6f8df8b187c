#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "nichols/errors.hpp"
#include "nichols/nichols.hpp"

using namespace nichols;

namespace {

std::shared_ptr<const RootSystem> rs_of(const char* label) { return generate_root_system(coxeter_from_label(label)); }

Tensor word_tensor(const Field& f, Word w, long c = 1) { return Tensor(w, FieldElement(f, c)); }

Tensor random_tensor(const Field& f, int dim, int degree, int terms, std::mt19937& rng) {
  Tensor t(degree);
  for (int k = 0; k < terms; ++k) {
    Word w;
    for (int i = 0; i < degree; ++i) w.push_back(static_cast<int>(rng() % dim));
    t.add(w, FieldElement(f, static_cast<long>(rng() % 5) - 2));
  }
  return t;
}

BuildOptions no_cache() { return BuildOptions{}; }

}  // namespace

TEST_CASE("Hilbert series of small Nichols algebras") {
  // [PAPER] A2: 1,3,4,3,1 ; B2: total 64
  auto a2 = NicholsAlgebra::of(*rs_of("A2"), no_cache());
  CHECK(a2->hilbert_series(10) == std::vector<std::size_t>{1, 3, 4, 3, 1, 0, 0});
  auto b2 = NicholsAlgebra::of(*rs_of("B2"), no_cache());
  CHECK(b2->hilbert_series(12) == std::vector<std::size_t>{1, 4, 8, 12, 14, 12, 8, 4, 1, 0, 0});
  auto a1 = NicholsAlgebra::of(*rs_of("A1"), no_cache());
  CHECK(a1->hilbert_series(5) == std::vector<std::size_t>{1, 1, 0, 0});
}

TEST_CASE("serial and parallel builds agree") {
  for (const char* label : {"A3", "G2", "I2:5"}) {
    BuildOptions serial;
    serial.parallel = false;
    BuildOptions par;
    par.threads = 2;
    auto x = NicholsAlgebra::of(*rs_of(label), serial);
    auto y = NicholsAlgebra::of(*rs_of(label), par);
    for (int n = 0; n <= 4; ++n) {
      CHECK(x->component(n).basis() == y->component(n).basis());
      for (std::size_t j = 0; j < x->component(n).dimension(); ++j) CHECK(x->component(n).image(j) == y->component(n).image(j));
    }
  }
}

TEST_CASE("basic relations in B_W") {
  auto rs = rs_of("A2");
  auto B = NicholsAlgebra::of(*rs, no_cache());
  const Field& f = B->field();
  // [alpha]^2 = 0
  for (int a = 0; a < 3; ++a) CHECK(B->element(word_tensor(f, Word{a, a})).is_zero());
  // simple-root braid relation [1][2][1] = [2][1][2] in the quotient
  CHECK(B->equal(B->element(word_tensor(f, Word{0, 1, 0})), B->element(word_tensor(f, Word{1, 0, 1}))));
  // [1][2] is not a multiple of [2][1]
  CHECK_FALSE(B->element(word_tensor(f, Word{0, 1})).is_zero());
  // associativity on random elements
  std::mt19937 rng(1);
  for (int t = 0; t < 5; ++t) {
    auto x = B->element(random_tensor(f, 3, 1, 2, rng));
    auto y = B->element(random_tensor(f, 3, 1, 2, rng));
    auto z = B->element(random_tensor(f, 3, 2, 3, rng));
    CHECK(B->equal(B->multiply(B->multiply(x, y), z), B->multiply(x, B->multiply(y, z))));
  }
}

TEST_CASE("normal form is well defined") {
  auto B = NicholsAlgebra::of(*rs_of("B2"), no_cache());
  const Field& f = B->field();
  std::mt19937 rng(2);
  for (int t = 0; t < 10; ++t) {
    const int n = 1 + t % 5;
    Tensor x = random_tensor(f, 4, n, 5, rng);
    auto e = B->element(x);
    Tensor rep = B->representative(e, n);
    // x - rep(x) is in ker [n]!
    CHECK(in_symmetriser_kernel(B->braiding(), x - rep));
    CHECK(B->equal(B->element(rep), e));
  }
}

TEST_CASE("pairing routes") {
  auto B = NicholsAlgebra::of(*rs_of("G2"), no_cache());
  const Field& f = B->field();
  std::mt19937 rng(4);
  for (int t = 0; t < 10; ++t) {
    const int n = 1 + t % 3;
    Tensor phi = random_tensor(f, 6, n, 4, rng), x = random_tensor(f, 6, n, 4, rng);
    FieldElement a = pairing_by_symmetriser(B->braiding(), phi, x);
    CHECK(a == pairing_by_derivatives(B->braiding(), phi, x));
    CHECK(a == B->pairing(B->element(phi), B->element(x)));
  }
}

TEST_CASE("constants are exactly the degree-0 part") {
  auto B = NicholsAlgebra::of(*rs_of("A2"), no_cache());
  const Field& f = B->field();
  NicholsElement one;
  one.parts[0] = {FieldElement(f, 1)};
  CHECK(B->is_constant(one));
  CHECK_FALSE(B->is_constant(B->element(word_tensor(f, Word{0, 1}))));
}

TEST_CASE("budget guard") {
  BuildOptions o;
  o.budget = 100;
  auto B = NicholsAlgebra::of(*rs_of("A3"), o);
  CHECK(B->fits_budget(2));
  CHECK_FALSE(B->fits_budget(3));
  CHECK_THROWS_AS(B->component(3), BudgetExceeded);
}

TEST_CASE("component cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "nichols-test-cache";
  std::filesystem::remove_all(dir);
  BuildOptions o;
  o.cache_dir = dir;
  auto rs = rs_of("B2");
  std::vector<std::size_t> first;
  {
    auto B = NicholsAlgebra::of(*rs, o);
    first = B->hilbert_series(10);
  }
  CHECK(cache::list(dir).size() >= 9);
  auto B2 = NicholsAlgebra::of(*rs, o);
  CHECK(B2->hilbert_series(10) == first);
  auto data = cache::load(dir, B2->cache_key(), 4);
  REQUIRE(data);
  CHECK(data->basis == B2->component(4).basis());
  // a corrupted file is ignored and rebuilt
  {
    std::ofstream bad(cache::path_for(dir, B2->cache_key(), 3));
    bad << "garbage";
  }
  CHECK_FALSE(cache::load(dir, B2->cache_key(), 3).has_value());
  CHECK(cache::clear(dir) >= 9);
  CHECK(cache::list(dir).empty());
}

TEST_CASE("flip and minus flip algebras") {
  const Field f = Field::for_conductor(1);
  NicholsAlgebra sym(Braiding::flip(3), f);
  NicholsAlgebra ext(Braiding::minus_flip(3), f);
  // [DERIVED] symmetric and exterior power dimensions
  CHECK(sym.hilbert_series(4) == std::vector<std::size_t>{1, 3, 6, 10, 15});
  CHECK(ext.hilbert_series(6) == std::vector<std::size_t>{1, 3, 3, 1, 0, 0});
}
