#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "nichols/errors.hpp"
#include "nichols/scalars.hpp"

using namespace nichols;

namespace {

int euler_phi(int n) {
  int r = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++r;
  return r;
}

double eval(const std::vector<Rational>& p, double x) {
  double s = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + it->get_d();
  return s;
}

FieldElement random_element(const Field& f, std::mt19937& rng) {
  std::vector<Rational> c;
  for (int i = 0; i < f.degree(); ++i) c.emplace_back(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
  return FieldElement(f, c);
}

}  // namespace

TEST_CASE("minimal polynomial of 2cos(pi/M)") {
  // [TRIVIAL] small conductors by hand
  CHECK(Field::for_conductor(1).minpoly() == std::vector<Rational>{2, 1});
  CHECK(Field::for_conductor(2).minpoly() == std::vector<Rational>{0, 1});
  CHECK(Field::for_conductor(3).minpoly() == std::vector<Rational>{-1, 1});
  CHECK(Field::for_conductor(4).minpoly() == std::vector<Rational>{-2, 0, 1});
  CHECK(Field::for_conductor(5).minpoly() == std::vector<Rational>{-1, -1, 1});
  CHECK(Field::for_conductor(6).minpoly() == std::vector<Rational>{-3, 0, 1});
  // [DERIVED] root check and degree phi(2M)/2, which forces irreducibility since
  // 2cos(pi/M) has exactly that many conjugates
  for (int M = 2; M <= 30; ++M) {
    Field f = Field::for_conductor(M);
    CHECK(f.degree() == euler_phi(2 * M) / 2);
    CHECK(std::abs(eval(f.minpoly(), 2 * std::cos(M_PI / M))) < 1e-9);
    CHECK(f.minpoly().back() == 1);
  }
}

TEST_CASE("field of a Coxeter matrix ignores rational cosines") {
  CHECK(Field::for_coxeter_matrix({{1, 3, 2}, {3, 1, 5}, {2, 5, 1}}).conductor() == 5);
  CHECK(Field::for_coxeter_matrix({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}).conductor() == 4);
  CHECK(Field::for_coxeter_matrix({{1, 3}, {3, 1}}).degree() == 1);
  CHECK(Field::for_coxeter_matrix({{1, 7}, {7, 1}}).degree() == 3);
}

TEST_CASE("cos(pi/m) values") {
  Field f = Field::for_conductor(12);
  for (int m : {1, 2, 3, 4, 6, 12}) CHECK(std::abs(cos_pi_over(f, m).to_double() - std::cos(M_PI / m)) < 1e-12);
  CHECK(cos_pi_over(f, 2).is_zero());
  CHECK(cos_pi_over(f, 3) == FieldElement(f, Rational(1, 2)));
  CHECK_THROWS_AS(cos_pi_over(f, 5), UnsupportedInput);
  Field g = Field::for_conductor(1);
  CHECK(cos_pi_over(g, 3) == FieldElement(g, Rational(1, 2)));
  // sqrt(2)^2 = 2
  Field h = Field::for_conductor(4);
  FieldElement r2 = cos_pi_over(h, 4) * Rational(2);
  CHECK(r2 * r2 == FieldElement(h, 2));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (int M : {4, 5, 7, 12, 15}) {
    Field f = Field::for_conductor(M);
    for (int t = 0; t < 20; ++t) {
      FieldElement a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(std::abs((a * b).to_double() - a.to_double() * b.to_double()) < 1e-6 * (1 + std::abs(a.to_double() * b.to_double())));
      if (!b.is_zero()) {
        CHECK((a / b) * b == a);
        CHECK(b * b.inverse() == FieldElement(f, 1));
      }
      CHECK(a - a == FieldElement(f, 0));
      const double d = a.to_double();
      if (std::abs(d) > 1e-9) CHECK(a.sign() == (d > 0 ? 1 : -1));
    }
  }
}

TEST_CASE("sign is exact for tiny nonzero values") {
  // 2cos(pi/5) = golden ratio; F_{n+1} - phi F_n -> 0 with alternating sign
  Field f = Field::for_conductor(5);
  FieldElement phi = FieldElement::generator(f);
  long a = 1, b = 1;
  for (int n = 0; n < 60; ++n) {
    long c = a + b;
    a = b;
    b = c;
    if (b > (1L << 50)) break;
    FieldElement x = FieldElement(f, b) - phi * FieldElement(f, a);
    CHECK(x.sign() == (n % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("field-less zero adopts a field") {
  Field f = Field::for_conductor(5);
  FieldElement z;
  CHECK(z.is_zero());
  z += FieldElement::generator(f);
  CHECK(z == FieldElement::generator(f));
  CHECK(FieldElement::generator(f).to_string() == "c");
  CHECK(is_zero(Rational(0)));
  CHECK_FALSE(is_zero(std::int64_t{3}));
}
