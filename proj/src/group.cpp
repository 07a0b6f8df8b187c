#include "nichols/group.hpp"

#include <algorithm>
#include <deque>

#include "nichols/errors.hpp"

namespace nichols {

GroupElement GroupElement::identity(int n) {
  std::vector<SignedRoot> v(n);
  for (int i = 0; i < n; ++i) v[i] = {i, 1};
  return GroupElement(std::move(v));
}

GroupElement GroupElement::reflection(const RootSystem& rs, int t) {
  return GroupElement(rs.reflection_table()[t]);
}

RootVector GroupElement::apply(const RootSystem& rs, const RootVector& v) const {
  // Images of the simple roots determine the linear map.
  RootVector out(rs.rank(), FieldElement(rs.field(), 0));
  for (int i = 0; i < rs.rank(); ++i) {
    if (v[i].is_zero()) continue;
    SignedRoot r = images_[i];
    const RootVector& img = rs.root(r.index);
    for (int k = 0; k < rs.rank(); ++k) out[k] += v[i] * img[k] * Rational(r.sign);
  }
  return out;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  std::vector<SignedRoot> v(o.images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = apply(o.images_[i]);
  return GroupElement(std::move(v));
}

GroupElement GroupElement::inverse() const {
  std::vector<SignedRoot> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i].index] = {static_cast<int>(i), images_[i].sign};
  return GroupElement(std::move(v));
}

std::size_t GroupElement::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& r : images_) {
    h ^= static_cast<std::uint64_t>(r.index * 2 + (r.sign < 0));
    h *= 1099511628211ULL;
  }
  return h;
}

ReflectionGroup ReflectionGroup::full(std::shared_ptr<const RootSystem> rs, std::size_t max_order) {
  std::vector<int> all(rs->size());
  for (int i = 0; i < rs->size(); ++i) all[i] = i;
  return generated_by(std::move(rs), std::move(all), max_order);
}

ReflectionGroup ReflectionGroup::generated_by(std::shared_ptr<const RootSystem> rs, std::vector<int> subset,
                                              std::size_t max_order) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<char> in(rs->size(), 0);
  for (int i : subset) in[i] = 1;
  for (int a : subset)
    for (int b : subset)
      if (!in[rs->reflect(a, b).index]) throw InvariantViolation("root subset not closed under its reflections");
  ReflectionGroup g;
  g.rs_ = std::move(rs);
  g.positive_ = std::move(subset);
  for (int beta : g.positive_) {
    bool simple = true;
    for (int c : g.positive_)
      if (c != beta && g.rs_->reflect(beta, c).sign < 0) simple = false;
    if (simple) g.simple_.push_back(beta);
  }
  g.build(max_order);
  return g;
}

int ReflectionGroup::length_of(const GroupElement& w) const {
  int l = 0;
  for (int b : positive_)
    if (w.apply(b).sign < 0) ++l;
  return l;
}

void ReflectionGroup::build(std::size_t max_order) {
  const int n = rs_->size();
  std::vector<GroupElement> gens;
  for (int s : simple_) gens.push_back(GroupElement::reflection(*rs_, s));
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> seen;
  std::vector<GroupElement> found{GroupElement::identity(n)};
  seen.emplace(found[0], 0);
  for (std::size_t k = 0; k < found.size(); ++k)
    for (const auto& s : gens) {
      GroupElement h = s * found[k];
      if (seen.count(h)) continue;
      if (found.size() >= max_order)
        throw BudgetExceeded("group order exceeds " + std::to_string(max_order));
      seen.emplace(h, found.size());
      found.push_back(std::move(h));
    }

  // Lexicographically least reduced word: strip the smallest left descent.
  std::vector<std::vector<int>> words(found.size());
  std::vector<int> lengths(found.size());
  for (std::size_t k = 0; k < found.size(); ++k) {
    GroupElement w = found[k];
    std::vector<int> word;
    for (;;) {
      GroupElement winv = w.inverse();
      int d = -1;
      for (std::size_t i = 0; i < simple_.size(); ++i)
        if (winv.apply(simple_[i]).sign < 0) {
          d = static_cast<int>(i);
          break;
        }
      if (d < 0) break;
      word.push_back(d);
      w = gens[d] * w;
    }
    words[k] = std::move(word);
    lengths[k] = length_of(found[k]);
    if (lengths[k] != static_cast<int>(words[k].size()))
      throw InvariantViolation("reduced word length disagrees with inversion count");
  }
  std::vector<std::size_t> order(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
    return words[a] < words[b];
  });
  for (std::size_t k : order) {
    index_.emplace(found[k], elements_.size());
    elements_.push_back(found[k]);
    lengths_.push_back(lengths[k]);
    words_.push_back(words[k]);
  }
}

std::size_t ReflectionGroup::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw InvariantViolation("element not in group");
  return it->second;
}

std::size_t ReflectionGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(elements_[a] * elements_[b]);
}

std::size_t ReflectionGroup::inverse(std::size_t a) const { return index_of(elements_[a].inverse()); }

std::vector<std::int64_t> ReflectionGroup::poincare_polynomial() const {
  std::vector<std::int64_t> p(lengths_.back() + 1, 0);
  for (int l : lengths_) ++p[l];
  return p;
}

std::vector<int> exponents_from_poincare(const std::vector<std::int64_t>& poincare) {
  if (poincare.empty() || poincare[0] != 1) throw InvariantViolation("Poincare polynomial must start with 1");
  if (poincare.size() == 1) return {};
  // prod [d_i] (1 - t)^r = prod (1 - t^{d_i}) with r = coefficient of t.
  const std::int64_t r = poincare[1];
  std::vector<std::int64_t> q = poincare;
  for (std::int64_t k = 0; k < r; ++k) {
    std::vector<std::int64_t> next(q.size() + 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      next[i] += q[i];
      next[i + 1] -= q[i];
    }
    q = std::move(next);
  }
  auto trim = [](std::vector<std::int64_t>& v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
  };
  trim(q);
  std::vector<int> ex;
  while (q.size() > 1) {
    std::size_t k = 1;
    while (q[k] == 0) ++k;
    if (q[k] > 0) throw InvariantViolation("Poincare polynomial does not factor");
    // divide by (1 - t^k)
    std::vector<std::int64_t> quot(q.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) quot[i] = q[i] + (i >= k ? quot[i - k] : 0);
    for (std::size_t i = q.size() - k; i < q.size(); ++i)
      if (quot[i] != 0) throw InvariantViolation("Poincare polynomial does not factor");
    quot.resize(q.size() - k);
    q = std::move(quot);
    trim(q);
    ex.push_back(static_cast<int>(k) - 1);
  }
  if (q[0] != 1 || static_cast<std::int64_t>(ex.size()) != r)
    throw InvariantViolation("Poincare polynomial does not factor");
  std::sort(ex.begin(), ex.end());
  return ex;
}

std::vector<int> ReflectionGroup::exponents() const { return exponents_from_poincare(poincare_polynomial()); }

}  // namespace nichols
