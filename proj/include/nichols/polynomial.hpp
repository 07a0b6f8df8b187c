#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nichols/roots.hpp"

namespace nichols {

using Exponent = std::array<std::uint8_t, 8>;

// Polynomial on h in the coordinates of the simple roots (S(h) = Q(c)[a_1..a_r]).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Field& f, int nvars) : field_(f), nvars_(nvars) {}
  static Polynomial constant(const Field& f, int nvars, const FieldElement& c);
  static Polynomial variable(const Field& f, int nvars, int i);
  static Polynomial linear(const Field& f, const RootVector& coords);  // sum coords_i a_i

  int nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::map<Exponent, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  FieldElement constant_term() const;
  FieldElement coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const FieldElement& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const FieldElement& s) const;
  Polynomial pow(int k) const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  bool operator==(const Polynomial& o) const;

  // Substitutes a_i -> images[i].
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  // Exact quotient by a nonzero linear form; throws InvariantViolation if inexact.
  Polynomial divide_by_linear(const RootVector& form) const;

  std::string to_string() const;

 private:
  Field field_ = Field::for_conductor(1);
  int nvars_ = 0;
  std::map<Exponent, FieldElement> terms_;
};

}  // namespace nichols
