#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nichols/coxeter.hpp"
#include "nichols/group.hpp"
#include "nichols/roots.hpp"
#include "nichols/tensor.hpp"

namespace nichols {

// Rack-type braiding on V = span{[a]}:  Psi([a] (x) [b]) = sign [a > b] (x) [a],
// where act(a, b) = (a > b, sign).  For V_W, act(a, b) = s_a(b).
class Braiding {
 public:
  enum class Kind { Reflection, Flip, MinusFlip, Custom };

  static Braiding from_roots(const RootSystem& rs);
  static Braiding flip(int dim);
  static Braiding minus_flip(int dim);
  // Validates that each row is a signed permutation and that the table is
  // self-distributive: phi_{a>b} phi_a = phi_a phi_b.
  static Braiding custom(std::vector<std::vector<SignedRoot>> table, std::string name = "custom");

  int dimension() const { return static_cast<int>(table_.size()); }
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  SignedRoot act(int a, int b) const { return table_[a][b]; }
  // y with act(a, y) = sign * u
  SignedRoot act_inverse(int a, int u) const { return inverse_[a][u]; }
  int orbit(int a) const { return orbit_[a]; }
  int orbit_count() const { return orbit_count_; }

 private:
  Braiding() = default;
  void finish();
  Kind kind_ = Kind::Custom;
  std::string name_;
  std::vector<std::vector<SignedRoot>> table_;
  std::vector<std::vector<SignedRoot>> inverse_;
  std::vector<int> orbit_;
  int orbit_count_ = 0;
};

// Grading of T(V) preserved by Psi: the composite signed permutation
// phi_{a_1} .. phi_{a_n} together with the multiset of letter orbits.  Grades
// are interned as small integers; not thread safe, call from serial code.
class Grading {
 public:
  explicit Grading(const Braiding& b);
  int identity() const { return 0; }
  int left_multiply(int letter, int grade);  // grade of [letter] (x) w
  int of(const Word& w);
  std::size_t count() const { return keys_.size(); }

 private:
  struct Key {
    std::vector<SignedRoot> perm;
    std::vector<int> orbit_counts;
    bool operator<(const Key& o) const;
  };
  int intern(Key k);
  const Braiding* braiding_;
  std::vector<Key> keys_;
  std::map<Key, int> ids_;
  std::vector<std::vector<int>> next_;  // memoised left multiplication
};

template <class C>
TensorT<C> braid_apply(const Braiding& b, int pos, const TensorT<C>& t) {
  TensorT<C> out(t.degree());
  for (const auto& [w, c] : t.terms()) {
    Word v = w;
    SignedRoot r = b.act(w[pos], w[pos + 1]);
    v.set(pos, r.index);
    v.set(pos + 1, w[pos]);
    out.add(v, r.sign > 0 ? c : C(-c));
  }
  return out;
}

template <class C>
TensorT<C> inverse_braid_apply(const Braiding& b, int pos, const TensorT<C>& t) {
  TensorT<C> out(t.degree());
  for (const auto& [w, c] : t.terms()) {
    // Psi(x, y) = (x > y, x), so x = w[pos+1] and y solves x > y = +-w[pos].
    Word v = w;
    SignedRoot y = b.act_inverse(w[pos + 1], w[pos]);
    v.set(pos, w[pos + 1]);
    v.set(pos + 1, y.index);
    out.add(v, y.sign > 0 ? c : C(-c));
  }
  return out;
}

// Shifted braided integer acting on slots s..s+k-1 (zero-based s):
// 1 + Psi_s + Psi_{s+1} Psi_s + ... + Psi_{s+k-2} .. Psi_s.
template <class C>
TensorT<C> braided_integer(const Braiding& b, int k, int s, const TensorT<C>& t) {
  TensorT<C> acc = t;
  TensorT<C> cur = t;
  for (int j = s; j < s + k - 1; ++j) {
    cur = braid_apply(b, j, cur);
    acc += cur;
  }
  return acc;
}

// [n]_Psi ([a] (x) y): slide a to every position, applying a> to what it passes.
template <class C>
void insert_letter(const Braiding& b, int a, const Word& y, const C& c, TensorT<C>& out) {
  Word w = y.with_front(a);
  out.add(w, c);
  int sign = 1;
  for (int k = 0; k < y.size(); ++k) {
    SignedRoot r = b.act(a, y[k]);
    sign *= r.sign;
    w.set(k, r.index);
    w.set(k + 1, a);
    out.add(w, sign > 0 ? c : C(-c));
  }
}

// Woronowicz symmetriser [n]!_Psi via [n]! = [n]_Psi (id (x) [n-1]!).
template <class C>
TensorT<C> symmetrise(const Braiding& b, const TensorT<C>& t) {
  TensorT<C> cur = t;
  const int n = t.degree();
  for (int s = n - 2; s >= 0; --s) cur = braided_integer(b, n - s, s, cur);
  return cur;
}

// Reference symmetriser: sum over the Matsumoto section of S_n.
template <class C>
TensorT<C> symmetrise_matsumoto(const Braiding& b, const TensorT<C>& t, int max_n = 7) {
  const int n = t.degree();
  if (n <= 1) return t;
  TensorT<C> acc(n);
  for (const auto& e : matsumoto_section(n, max_n)) {
    TensorT<C> cur = t;
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) cur = braid_apply(b, *it, cur);
    acc += cur;
  }
  return acc;
}

// Letter-wise action of a group element, signs into coefficients.
template <class C>
TensorT<C> act_on_tensor(const GroupElement& g, const TensorT<C>& t) {
  TensorT<C> out(t.degree());
  for (const auto& [w, c] : t.terms()) {
    Word v = w;
    int sign = 1;
    for (int k = 0; k < w.size(); ++k) {
      SignedRoot r = g.apply(w[k]);
      v.set(k, r.index);
      sign *= r.sign;
    }
    out.add(v, sign > 0 ? c : C(-c));
  }
  return out;
}

// Right braided derivative of a tensor:
// (b_1..b_n) d_a = sum_{b_k = a} (b_1..b_{k-1}, a>(b_{k+1}..b_n)).
template <class C>
TensorT<C> right_derivative(const Braiding& b, int a, const TensorT<C>& t) {
  TensorT<C> out(std::max(t.degree() - 1, 0));
  for (const auto& [w, c] : t.terms()) {
    for (int k = 0; k < w.size(); ++k) {
      if (w[k] != a) continue;
      Word v = w.prefix(k);
      int sign = 1;
      for (int j = k + 1; j < w.size(); ++j) {
        SignedRoot r = b.act(a, w[j]);
        sign *= r.sign;
        v.push_back(r.index);
      }
      out.add(v, sign > 0 ? c : C(-c));
    }
  }
  return out;
}

// Reversed evaluation pairing (xi_n..xi_1 | v_1..v_n): word u pairs with reverse(u).
template <class C>
C reversed_pairing(const TensorT<C>& a, const TensorT<C>& b) {
  C s{};
  if (a.degree() != b.degree()) return s;
  for (const auto& [w, c] : a.terms()) {
    auto it = b.terms().find(w.reversed());
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

}  // namespace nichols
