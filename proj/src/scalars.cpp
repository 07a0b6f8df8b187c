#include "nichols/scalars.hpp"

#include <mpfr.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

using IntPoly = std::vector<Integer>;

void strip(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; throws if the remainder is nonzero.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  strip(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw InvariantViolation("polynomial division underflow");
  IntPoly q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    Integer c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw InvariantViolation("inexact cyclotomic division");
  return q;
}

// 2cos(k t) as a polynomial in 2cos(t): C_0 = 2, C_1 = x, C_{k+1} = x C_k - C_{k-1}.
std::vector<IntPoly> chebyshev_table(int n) {
  std::vector<IntPoly> c(n + 1);
  c[0] = {2};
  if (n >= 1) c[1] = {0, 1};
  for (int k = 1; k < n; ++k) {
    IntPoly next(k + 2, 0);
    for (std::size_t i = 0; i < c[k].size(); ++i) next[i + 1] += c[k][i];
    for (std::size_t i = 0; i < c[k - 1].size(); ++i) next[i] -= c[k - 1][i];
    c[k + 1] = next;
  }
  return c;
}

std::vector<Rational> poly_mul_mod(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                   const std::vector<Rational>& mod) {
  const std::size_t d = mod.size() - 1;
  std::vector<Rational> prod(2 * d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t i = prod.size(); i-- > d;) {
    if (sgn(prod[i]) == 0) continue;
    Rational c = prod[i];
    for (std::size_t j = 0; j <= d; ++j) prod[i - d + j] -= c * mod[j];
  }
  prod.resize(d);
  return prod;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw UnsupportedInput("cyclotomic index must be positive");
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  return p;
}

std::vector<Integer> half_cyclotomic_polynomial(int M) {
  if (M < 1) throw UnsupportedInput("field conductor must be positive");
  if (M == 1) return {2, 1};  // 2cos(pi) = -2; Phi_2 has odd degree
  // Phi_{2M} is palindromic of degree 2d; x^{-d} Phi = a_d + sum_k a_{d+k} (x^k + x^{-k}).
  IntPoly phi = cyclotomic_polynomial(2 * M);
  const int d = static_cast<int>(phi.size() - 1) / 2;
  auto cheb = chebyshev_table(d);
  IntPoly out(d + 1, 0);
  out[0] += phi[d];
  for (int k = 1; k <= d; ++k)
    for (std::size_t i = 0; i < cheb[k].size(); ++i) out[i] += phi[d + k] * cheb[k][i];
  strip(out);
  return out;
}

Field Field::for_conductor(int M) {
  auto poly = half_cyclotomic_polynomial(M);
  auto data = std::make_shared<Data>();
  data->conductor = M;
  for (const auto& c : poly) data->minpoly.emplace_back(c);
  data->generator = 2.0 * std::cos(M_PI / M);
  return Field(data);
}

Field Field::for_coxeter_matrix(const std::vector<std::vector<int>>& m) {
  int M = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (i != j && m[i][j] > 3) M = std::lcm(M, m[i][j]);  // cos(pi/m) is rational for m <= 3
  return for_conductor(M);
}

FieldElement::FieldElement(const Field& f, const Rational& q)
    : field_(f.data_), coeffs_(f.degree(), 0) {
  coeffs_[0] = q;
  coeffs_[0].canonicalize();
}

FieldElement::FieldElement(const Field& f, std::vector<Rational> coeffs)
    : field_(f.data_), coeffs_(std::move(coeffs)) {
  // mpq_class(num, den) is not reduced on construction
  for (auto& c : coeffs_) c.canonicalize();
  if (coeffs_.size() > static_cast<std::size_t>(f.degree())) {
    // reduce a longer polynomial in c modulo the minimal polynomial
    std::vector<Rational> one(f.degree(), 0);
    one[0] = 1;
    std::vector<Rational> acc(f.degree(), 0);
    std::vector<Rational> power = one;
    std::vector<Rational> gen(f.degree(), 0);
    if (f.degree() > 1) gen[1] = 1;
    else gen[0] = -field_->minpoly[0];
    for (const auto& c : coeffs_) {
      for (int i = 0; i < f.degree(); ++i) acc[i] += c * power[i];
      power = poly_mul_mod(power, gen, field_->minpoly);
    }
    coeffs_ = std::move(acc);
  }
  coeffs_.resize(f.degree(), 0);
}

FieldElement FieldElement::generator(const Field& f) {
  std::vector<Rational> v(2, 0);
  v[1] = 1;
  return FieldElement(f, v);
}

Field FieldElement::field() const {
  if (!field_) throw InvariantViolation("field-less zero has no field");
  return Field(field_);
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw InvariantViolation("element is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

void FieldElement::adopt(const FieldElement& o) {
  if (field_ || !o.field_) {
    if (field_ && o.field_ && field_ != o.field_ && field_->conductor != o.field_->conductor)
      throw InvariantViolation("mixing elements of different fields");
    return;
  }
  field_ = o.field_;
  coeffs_.assign(field_->minpoly.size() - 1, 0);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  adopt(o);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  adopt(o);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  adopt(o);
  if (!field_) return *this;
  if (o.coeffs_.empty()) {
    for (auto& c : coeffs_) c = 0;
    return *this;
  }
  if (coeffs_.size() == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  coeffs_ = poly_mul_mod(coeffs_, o.coeffs_, field_->minpoly);
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rational a = i < coeffs_.size() ? coeffs_[i] : Rational(0);
    Rational b = i < o.coeffs_.size() ? o.coeffs_[i] : Rational(0);
    if (a != b) return false;
  }
  return true;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  const std::size_t d = coeffs_.size();
  if (d == 1) return FieldElement(Field(field_), Rational(1) / coeffs_[0]);
  // Solve (multiplication by *this) x = 1 by Gauss-Jordan on the d x d matrix.
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1, 0));
  std::vector<Rational> basis(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    std::fill(basis.begin(), basis.end(), 0);
    basis[j] = 1;
    auto col = poly_mul_mod(coeffs_, basis, field_->minpoly);
    for (std::size_t i = 0; i < d; ++i) a[i][j] = col[i];
  }
  a[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (sgn(a[p][c]) == 0) ++p;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (std::size_t k = c; k <= d; ++k) a[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k <= d; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = a[i][d];
  return FieldElement(Field(field_), x);
}

double FieldElement::to_double() const {
  if (!field_) return 0.0;
  double c = field_->generator, p = 1.0, s = 0.0;
  for (const auto& q : coeffs_) {
    s += q.get_d() * p;
    p *= c;
  }
  return s;
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coeffs_[0]);
  // Nonzero, so escalating precision eventually separates it from 0.
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    mpfr_t c, pw, acc, term, bound, absq;
    mpfr_inits2(prec, c, pw, acc, term, bound, absq, (mpfr_ptr)nullptr);
    mpfr_const_pi(c, MPFR_RNDN);
    mpfr_div_ui(c, c, field_->conductor, MPFR_RNDN);
    mpfr_cos(c, c, MPFR_RNDN);
    mpfr_mul_ui(c, c, 2, MPFR_RNDN);
    mpfr_set_ui(pw, 1, MPFR_RNDN);
    mpfr_set_ui(acc, 0, MPFR_RNDN);
    mpfr_set_ui(bound, 0, MPFR_RNDN);
    for (const auto& q : coeffs_) {
      mpfr_set_q(term, q.get_mpq_t(), MPFR_RNDN);
      mpfr_abs(absq, term, MPFR_RNDN);
      mpfr_mul(term, term, pw, MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
      mpfr_mul_ui(absq, absq, 3, MPFR_RNDN);
      mpfr_add(bound, bound, absq, MPFR_RNDN);
      mpfr_mul(pw, pw, c, MPFR_RNDN);
    }
    // |c| < 2, so each term carries relative error well under 2^{-(prec-8)}.
    mpfr_mul_2si(bound, bound, static_cast<long>(coeffs_.size()) * 2 - prec + 8, MPFR_RNDU);
    mpfr_abs(term, acc, MPFR_RNDN);
    int s = 0;
    if (mpfr_cmp(term, bound) > 0) s = mpfr_sgn(acc);
    mpfr_clears(c, pw, acc, term, bound, absq, (mpfr_ptr)nullptr);
    if (s != 0) return s > 0 ? 1 : -1;
    if (prec > (1 << 16)) throw InvariantViolation("sign determination did not converge");
  }
}

std::string FieldElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& q = coeffs_[i];
    if (sgn(q) == 0) continue;
    if (!first) os << (sgn(q) > 0 ? "+" : "-");
    else if (sgn(q) < 0) os << "-";
    Rational a = abs(q);
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "c";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::size_t FieldElement::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& q : coeffs_) {
    std::size_t v = std::hash<std::string>{}(q.get_str());
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

FieldElement cos_pi_over(const Field& f, int m) {
  if (m < 1) throw UnsupportedInput("cos(pi/m) needs m >= 1");
  if (m == 1) return FieldElement(f, Rational(-1));
  if (m == 2) return FieldElement(f, Rational(0));
  if (m == 3) return FieldElement(f, Rational(1, 2));
  if (f.conductor() % m != 0)
    throw UnsupportedInput("cos(pi/" + std::to_string(m) + ") is not in Q(2cos(pi/" +
                           std::to_string(f.conductor()) + "))");
  // 2cos(pi/m) = C_{M/m}(2cos(pi/M))
  auto cheb = chebyshev_table(f.conductor() / m);
  std::vector<Rational> v;
  for (const auto& c : cheb.back()) v.emplace_back(c);
  FieldElement r(f, v);
  return r * Rational(1, 2);
}

}  // namespace nichols
