#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace nichols {

using Integer = mpz_class;
using Rational = mpq_class;

// Integer polynomial helpers, coefficients low degree first.
std::vector<Integer> cyclotomic_polynomial(int n);
// Minimal polynomial of 2cos(pi/M) over Q, monic.
std::vector<Integer> half_cyclotomic_polynomial(int M);

class Field {
 public:
  // Q(2cos(pi/M)); M = 1 gives Q with generator -2.
  static Field for_conductor(int M);
  static Field for_coxeter_matrix(const std::vector<std::vector<int>>& m);

  int conductor() const { return data_->conductor; }
  int degree() const { return static_cast<int>(data_->minpoly.size()) - 1; }
  const std::vector<Rational>& minpoly() const { return data_->minpoly; }
  double generator_value() const { return data_->generator; }

  bool operator==(const Field& o) const { return conductor() == o.conductor(); }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  struct Data {
    int conductor;
    std::vector<Rational> minpoly;
    double generator;
  };
  explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
  friend class FieldElement;
};

// Element of Q(c) in the power basis 1, c, ..., c^{d-1}.  A default constructed
// element is a field-less zero that adopts the field of whatever it meets.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field& f, const Rational& q);
  FieldElement(const Field& f, long q) : FieldElement(f, Rational(q)) {}
  FieldElement(const Field& f, std::vector<Rational> coeffs);

  static FieldElement generator(const Field& f);

  bool has_field() const { return static_cast<bool>(field_); }
  Field field() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()
  int sign() const;
  double to_double() const;
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const Rational& q);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
  friend FieldElement operator*(const Rational& q, FieldElement a) { return a *= q; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void adopt(const FieldElement& o);
  std::shared_ptr<const Field::Data> field_;
  std::vector<Rational> coeffs_;  // empty means zero
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

// cos(pi/m) as an element of f; throws UnsupportedInput if it does not lie in f.
FieldElement cos_pi_over(const Field& f, int m);

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

}  // namespace nichols
