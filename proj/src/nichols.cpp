#include "nichols/nichols.hpp"

#include <map>

namespace nichols {

bool NicholsElement::is_zero() const {
  for (const auto& [d, v] : parts)
    for (const auto& c : v)
      if (!c.is_zero()) return false;
  return true;
}

NicholsAlgebra::NicholsAlgebra(Braiding braiding, Field field, BuildOptions options, std::string cache_tag)
    : braiding_(std::move(braiding)),
      field_(std::move(field)),
      options_(std::move(options)),
      cache_tag_(std::move(cache_tag)),
      grading_(braiding_) {}

std::shared_ptr<NicholsAlgebra> NicholsAlgebra::of(const RootSystem& rs, BuildOptions options) {
  return std::make_shared<NicholsAlgebra>(Braiding::from_roots(rs), rs.field(), std::move(options),
                                          rs.coxeter().canonical_text());
}

std::string NicholsAlgebra::cache_key() const { return braiding_hash(braiding_); }

bool NicholsAlgebra::fits_budget(int n) const {
  unsigned __int128 p = 1;
  for (int i = 0; i < n; ++i) {
    p *= static_cast<unsigned>(braiding_.dimension());
    if (p > options_.budget) return false;
  }
  return true;
}

const GradedComponent& NicholsAlgebra::component(int n) {
  if (n < 0) throw InvariantViolation("negative degree");
  while (static_cast<int>(components_.size()) <= n) {
    const int k = static_cast<int>(components_.size());
    ComponentData data;
    if (k == 0) {
      data.degree = 0;
      data.basis = {Word()};
      data.images = {{{Word(), 1}}};
    } else if (components_.back()->dimension() == 0) {
      data.degree = k;
    } else {
      if (!fits_budget(k))
        throw BudgetExceeded("degree " + std::to_string(k) + " exceeds the tensor budget " +
                             std::to_string(options_.budget));
      std::optional<ComponentData> cached;
      if (!options_.cache_dir.empty()) cached = cache::load(options_.cache_dir, cache_key(), k);
      if (cached) {
        data = std::move(*cached);
      } else {
        data = build_component(braiding_, *components_.back(), grading_, options_);
        if (!options_.cache_dir.empty()) cache::store(options_.cache_dir, cache_key(), data);
      }
    }
    components_.push_back(std::make_unique<GradedComponent>(std::move(data), grading_));
  }
  return *components_[n];
}

std::vector<std::size_t> NicholsAlgebra::hilbert_series(int max_degree) {
  std::vector<std::size_t> dims;
  for (int n = 0; n <= max_degree; ++n) {
    dims.push_back(component(n).dimension());
    if (n >= 1 && dims[n] == 0 && dims[n - 1] == 0) break;
  }
  return dims;
}

NicholsElement NicholsAlgebra::element(const Tensor& t) {
  NicholsElement e;
  if (t.is_zero()) return e;
  e.parts[t.degree()] = component(t.degree()).coordinates(t, field_);
  return e;
}

NicholsElement NicholsAlgebra::element(const std::vector<Tensor>& pieces) {
  NicholsElement e;
  for (const auto& t : pieces) e = add(e, element(t));
  return e;
}

Tensor NicholsAlgebra::representative(const NicholsElement& x, int degree) const {
  Tensor t(degree);
  auto it = x.parts.find(degree);
  if (it == x.parts.end()) return t;
  const auto& comp = *components_.at(degree);
  for (std::size_t i = 0; i < it->second.size(); ++i) t.add(comp.basis()[i], it->second[i]);
  return t;
}

NicholsElement NicholsAlgebra::add(const NicholsElement& a, const NicholsElement& b) const {
  NicholsElement r = a;
  for (const auto& [d, v] : b.parts) {
    auto& slot = r.parts[d];
    if (slot.empty()) slot.assign(v.size(), FieldElement(field_, 0));
    for (std::size_t i = 0; i < v.size(); ++i) slot[i] += v[i];
  }
  return r;
}

NicholsElement NicholsAlgebra::scale(const NicholsElement& a, const FieldElement& s) const {
  NicholsElement r = a;
  for (auto& [d, v] : r.parts)
    for (auto& c : v) c *= s;
  return r;
}

NicholsElement NicholsAlgebra::multiply(const NicholsElement& a, const NicholsElement& b) {
  NicholsElement r;
  for (const auto& [p, ca] : a.parts)
    for (const auto& [q, cb] : b.parts) {
      const auto& left = component(p);
      const auto& right = component(q);
      Tensor t(p + q);
      for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].is_zero()) continue;
        for (std::size_t j = 0; j < cb.size(); ++j)
          if (!cb[j].is_zero()) t.add(left.basis()[i] + right.basis()[j], ca[i] * cb[j]);
      }
      r = add(r, element(t));
    }
  return r;
}

NicholsElement NicholsAlgebra::derivative(const NicholsElement& a, int letter) {
  NicholsElement r;
  for (const auto& [p, ca] : a.parts) {
    if (p == 0) continue;
    component(p);
    Tensor d = right_derivative(braiding_, letter, representative(a, p));
    if (d.is_zero()) continue;
    r = add(r, element(d));
  }
  return r;
}

FieldElement NicholsAlgebra::pairing(const NicholsElement& a, const NicholsElement& b) {
  FieldElement s(field_, 0);
  for (const auto& [p, ca] : a.parts) {
    auto it = b.parts.find(p);
    if (it == b.parts.end()) continue;
    s += component(p).pair(ca, it->second, field_);
  }
  return s;
}

bool NicholsAlgebra::is_constant(const NicholsElement& a) {
  for (int letter = 0; letter < dimension(); ++letter)
    if (!derivative(a, letter).is_zero()) return false;
  return true;
}

bool NicholsAlgebra::equal(const NicholsElement& a, const NicholsElement& b) const {
  return add(a, scale(b, FieldElement(field_, -1))).is_zero();
}

FieldElement pairing_by_symmetriser(const Braiding& b, const Tensor& phi, const Tensor& x) {
  if (phi.is_zero() || x.is_zero() || phi.degree() != x.degree()) return FieldElement();
  return reversed_pairing(phi, symmetrise(b, x));
}

FieldElement pairing_by_derivatives(const Braiding& b, const Tensor& phi, const Tensor& x) {
  FieldElement s;
  if (phi.is_zero() || x.is_zero() || phi.degree() != x.degree()) return s;
  // phi d_{v_1} .. d_{v_n}, sharing work along common prefixes of the words v.
  std::map<Word, Tensor> memo;
  memo.emplace(Word(), phi);
  for (const auto& [v, c] : x.sorted_terms()) {
    Word prefix;
    const Tensor* cur = &memo.at(Word());
    for (int k = 0; k < v.size(); ++k) {
      prefix.push_back(v[k]);
      auto it = memo.find(prefix);
      if (it == memo.end()) it = memo.emplace(prefix, right_derivative(b, v[k], *cur)).first;
      cur = &it->second;
    }
    s += cur->coefficient(Word()) * c;
  }
  return s;
}

bool in_symmetriser_kernel(const Braiding& b, const Tensor& x) { return symmetrise(b, x).is_zero(); }

}  // namespace nichols
