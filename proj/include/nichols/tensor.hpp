#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nichols/errors.hpp"
#include "nichols/scalars.hpp"

namespace nichols {

inline constexpr int kMaxDegree = 30;

// A tensor word [b_1]..[b_n] of positive-root indices, one byte per letter.
class Word {
 public:
  Word() { bytes_.fill(0); }
  Word(std::initializer_list<int> letters) : Word() {
    for (int a : letters) push_back(a);
  }
  explicit Word(const std::vector<int>& letters) : Word() {
    for (int a : letters) push_back(a);
  }

  int size() const { return bytes_[kMaxDegree + 1]; }
  bool empty() const { return size() == 0; }
  int operator[](int i) const { return bytes_[i]; }
  void set(int i, int a) { bytes_[i] = static_cast<std::uint8_t>(a); }
  void push_back(int a) {
    if (size() >= kMaxDegree) throw BudgetExceeded("word degree exceeds " + std::to_string(kMaxDegree));
    if (a < 0 || a > 255) throw InvariantViolation("letter out of range");
    bytes_[size()] = static_cast<std::uint8_t>(a);
    ++bytes_[kMaxDegree + 1];
  }
  void pop_back() {
    --bytes_[kMaxDegree + 1];
    bytes_[size()] = 0;
  }
  Word prefix(int k) const;
  Word suffix_from(int k) const;
  Word reversed() const;
  Word with_front(int a) const;  // [a] followed by this
  Word operator+(const Word& o) const;
  std::vector<int> letters() const;
  std::string to_string(bool one_based = true) const;

  bool operator==(const Word& o) const { return bytes_ == o.bytes_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const {
    // length first, then lexicographic
    if (size() != o.size()) return size() < o.size();
    return std::memcmp(bytes_.data(), o.bytes_.data(), size()) < 0;
  }
  std::size_t hash() const {
    std::uint64_t w[4];
    std::memcpy(w, bytes_.data(), 32);
    std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ULL;
    h = (h ^ (h >> 29)) + w[1] * 0xBF58476D1CE4E5B9ULL;
    h = (h ^ (h >> 31)) + w[2] * 0x94D049BB133111EBULL;
    h = (h ^ (h >> 27)) + w[3] * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }

 private:
  std::array<std::uint8_t, 32> bytes_;  // letters, then length in the last byte
};
static_assert(kMaxDegree + 2 <= 32);

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

// Parses "1,2,3" (one-based letters) into a word.
Word parse_word(const std::string& text, int alphabet);

// Finite linear combination of words of one degree.  C is std::int64_t,
// Rational or FieldElement.
template <class C>
class TensorT {
 public:
  using Map = std::unordered_map<Word, C, WordHash>;

  TensorT() = default;
  explicit TensorT(int degree) : degree_(degree) {}
  TensorT(const Word& w, C c) : degree_(w.size()) { add(w, std::move(c)); }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  void add(const Word& w, const C& c) {
    if (nichols::is_zero(c)) return;
    if (degree_ < 0) degree_ = w.size();
    if (w.size() != degree_) throw InvariantViolation("tensor terms must share one degree");
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (nichols::is_zero(it->second)) terms_.erase(it);
    }
  }
  C coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C() : it->second;
  }
  TensorT& operator+=(const TensorT& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    if (degree_ < 0) degree_ = o.degree_;
    return *this;
  }
  TensorT& operator-=(const TensorT& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    if (degree_ < 0) degree_ = o.degree_;
    return *this;
  }
  template <class S>
  TensorT& scale(const S& s) {
    Map out;
    for (auto& [w, c] : terms_) {
      C v = c * s;
      if (!nichols::is_zero(v)) out.emplace(w, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }
  friend TensorT operator+(TensorT a, const TensorT& b) { return a += b; }
  friend TensorT operator-(TensorT a, const TensorT& b) { return a -= b; }
  bool operator==(const TensorT& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [w, c] : terms_) {
      auto it = o.terms_.find(w);
      if (it == o.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

  // Terms in word order, for deterministic output.
  std::vector<std::pair<Word, C>> sorted_terms() const {
    std::vector<std::pair<Word, C>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  // Concatenation product in the tensor algebra.
  friend TensorT operator*(const TensorT& a, const TensorT& b) {
    TensorT out(a.degree_ + b.degree_);
    for (const auto& [u, x] : a.terms_)
      for (const auto& [v, y] : b.terms_) out.add(u + v, x * y);
    return out;
  }

 private:
  int degree_ = -1;
  Map terms_;
};

using IntTensor = TensorT<std::int64_t>;
using Tensor = TensorT<FieldElement>;

template <class To, class From>
TensorT<To> convert_tensor(const TensorT<From>& t, const Field& f) {
  TensorT<To> out(t.degree());
  for (const auto& [w, c] : t.terms()) {
    if constexpr (std::is_same_v<To, FieldElement>) out.add(w, FieldElement(f, Rational(c)));
    else out.add(w, To(c));
  }
  return out;
}

inline Tensor to_field(const IntTensor& t, const Field& f) { return convert_tensor<FieldElement>(t, f); }

std::string tensor_to_string(const Tensor& t);

}  // namespace nichols
