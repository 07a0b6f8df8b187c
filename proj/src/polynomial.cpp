#include "nichols/polynomial.hpp"

#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

Polynomial Polynomial::constant(const Field& f, int nvars, const FieldElement& c) {
  Polynomial p(f, nvars);
  p.add_term(Exponent{}, c);
  return p;
}

Polynomial Polynomial::variable(const Field& f, int nvars, int i) {
  Polynomial p(f, nvars);
  Exponent e{};
  e[i] = 1;
  p.add_term(e, FieldElement(f, 1));
  return p;
}

Polynomial Polynomial::linear(const Field& f, const RootVector& coords) {
  Polynomial p(f, static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Exponent e{};
    e[i] = 1;
    p.add_term(e, coords[i]);
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < nvars_; ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < nvars_; ++i) s += e[i];
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

FieldElement Polynomial::constant_term() const { return coefficient(Exponent{}); }

FieldElement Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement(field_, 0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial p(field_, std::max(nvars_, o.nvars_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e{};
      for (int i = 0; i < 8; ++i) {
        int s = e1[i] + e2[i];
        if (s > 255) throw BudgetExceeded("polynomial exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      p.add_term(e, c1 * c2);
    }
  return p;
}

Polynomial Polynomial::scaled(const FieldElement& s) const {
  Polynomial p(field_, nvars_);
  for (const auto& [e, c] : terms_) p.add_term(e, c * s);
  return p;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r = constant(field_, nvars_, FieldElement(field_, 1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [e, c] : terms_) {
    auto it = o.terms_.find(e);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  // Powers of each image are shared across monomials.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(constant(field_, nvars_, FieldElement(field_, 1)));
  Polynomial out(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    Polynomial m = constant(field_, nvars_, c);
    for (int i = 0; i < nvars_; ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
      if (e[i]) m = m * powers[i][e[i]];
    }
    out += m;
  }
  return out;
}

Polynomial Polynomial::divide_by_linear(const RootVector& form) const {
  int v = -1;
  for (int i = 0; i < nvars_; ++i)
    if (!form[i].is_zero()) {
      v = i;
      break;
    }
  if (v < 0) throw InvariantViolation("division by the zero linear form");
  const FieldElement lead_inv = form[v].inverse();
  Polynomial rem = *this;
  Polynomial q(field_, nvars_);
  // Peel off the terms of highest a_v-degree; each step lowers that degree.
  while (!rem.is_zero()) {
    auto top = rem.terms_.begin();
    for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
      if (it->first[v] > top->first[v]) top = it;
    if (top->first[v] == 0) throw InvariantViolation("inexact division by a linear form");
    Exponent e = top->first;
    --e[v];
    FieldElement c = top->second * lead_inv;
    q.add_term(e, c);
    for (int i = 0; i < nvars_; ++i) {
      if (form[i].is_zero()) continue;
      Exponent f = e;
      ++f[i];
      rem.add_term(f, -(c * form[i]));
    }
  }
  return q;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    for (int i = 0; i < nvars_; ++i) {
      if (!it->first[i]) continue;
      os << "*a" << (i + 1);
      if (it->first[i] > 1) os << "^" << int(it->first[i]);
    }
  }
  return os.str();
}

}  // namespace nichols
