#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "nichols/roots.hpp"

namespace nichols {

// A group element as the signed permutation it induces on the positive roots
// of the ambient root system.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<SignedRoot> images) : images_(std::move(images)) {}
  static GroupElement identity(int n);
  static GroupElement reflection(const RootSystem& rs, int t);

  SignedRoot apply(int i) const { return images_[i]; }
  SignedRoot apply(SignedRoot r) const {
    SignedRoot s = images_[r.index];
    s.sign *= r.sign;
    return s;
  }
  RootVector apply(const RootSystem& rs, const RootVector& v) const;  // linear extension
  GroupElement operator*(const GroupElement& o) const;                // (this * o)(x) = this(o(x))
  GroupElement inverse() const;
  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<SignedRoot>& images() const { return images_; }
  bool operator==(const GroupElement& o) const { return images_ == o.images_; }
  std::size_t hash() const;

 private:
  std::vector<SignedRoot> images_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

// Finite reflection group generated by the reflections in a positive-root
// subset that is closed under its own reflections.  The full Weyl group is
// the case subset = all positive roots.
class ReflectionGroup {
 public:
  static ReflectionGroup full(std::shared_ptr<const RootSystem> rs, std::size_t max_order = 2'000'000);
  static ReflectionGroup generated_by(std::shared_ptr<const RootSystem> rs, std::vector<int> positive_subset,
                                      std::size_t max_order = 2'000'000);

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system() const { return rs_; }
  const std::vector<int>& positive_roots() const { return positive_; }
  const std::vector<int>& simple_roots() const { return simple_; }  // ambient indices

  std::size_t order() const { return elements_.size(); }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  int length(std::size_t i) const { return lengths_[i]; }
  // Lexicographically least reduced word; letters index simple_roots().
  const std::vector<int>& reduced_word(std::size_t i) const { return words_[i]; }
  std::size_t index_of(const GroupElement& g) const;
  std::size_t identity_index() const { return 0; }
  std::size_t longest_index() const { return elements_.size() - 1; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  int length_of(const GroupElement& g) const;  // number of subset roots sent negative

  std::vector<std::int64_t> poincare_polynomial() const;
  std::vector<int> exponents() const;

 private:
  ReflectionGroup() = default;
  void build(std::size_t max_order);
  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> positive_;
  std::vector<int> simple_;
  std::vector<GroupElement> elements_;  // sorted by (length, reduced word)
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
};

// Degrees minus one from a Poincare polynomial of the form prod (1 + t + .. + t^{m_i}).
std::vector<int> exponents_from_poincare(const std::vector<std::int64_t>& poincare);

}  // namespace nichols
