#include "nichols/nichols.hpp"

#include <omp.h>

#include <algorithm>
#include <map>

namespace nichols {

Image symmetrise_candidate(const Braiding& b, int letter, const Image& previous) {
  IntTensor acc(static_cast<int>(previous.empty() ? 1 : previous.front().first.size() + 1));
  for (const auto& [y, c] : previous) insert_letter<std::int64_t>(b, letter, y, c, acc);
  Image out(acc.terms().begin(), acc.terms().end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

GradedComponent::GradedComponent(ComponentData data, Grading& grading) : data_(std::move(data)) {
  const std::size_t d = data_.basis.size();
  grades_.resize(d);
  std::vector<int> reversed_grades(d);
  for (std::size_t j = 0; j < d; ++j) {
    grades_[j] = grading.of(data_.basis[j]);
    reversed_grades[j] = grading.of(data_.basis[j].reversed());
  }
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& [x, v] : data_.images[j]) dual_[x.reversed()].emplace_back(static_cast<std::uint32_t>(j), v);

  std::map<int, Block> by_grade;
  for (std::size_t j = 0; j < d; ++j) by_grade[grades_[j]].cols.push_back(static_cast<std::uint32_t>(j));
  for (std::size_t i = 0; i < d; ++i) by_grade[reversed_grades[i]].rows.push_back(static_cast<std::uint32_t>(i));
  for (auto& [g, blk] : by_grade) {
    if (blk.rows.size() != blk.cols.size()) throw InvariantViolation("pairing blocks are not square");
    const std::size_t r = blk.rows.size();
    std::unordered_map<std::uint32_t, std::size_t> col_slot;
    for (std::size_t k = 0; k < r; ++k) col_slot[blk.cols[k]] = k;
    RationalMatrix m(r, std::vector<Rational>(r, 0));  // m[j][i] = G[i][j]
    std::vector<SparseRow> sparse(r);
    for (std::size_t ii = 0; ii < r; ++ii) {
      auto it = dual_.find(data_.basis[blk.rows[ii]]);
      if (it == dual_.end()) continue;
      for (const auto& [j, v] : it->second) {
        auto s = col_slot.find(j);
        if (s == col_slot.end()) continue;
        m[s->second][ii] = v;
        sparse[ii].emplace_back(static_cast<std::uint32_t>(s->second), v);
      }
    }
    // full rank mod p already proves the block invertible over Q
    for (auto& row : sparse) std::sort(row.begin(), row.end());
    if (select_independent_mod_p(sparse, kPrimes[0]).selected.size() < r && !invert(m))
      throw InvariantViolation("pairing on B^n is degenerate; basis selection is wrong");
    blk.transposed = std::move(m);
    blocks_.push_back(std::move(blk));
  }
}

const RationalMatrix& GradedComponent::inverse(const Block& blk) const {
  std::call_once(blk.lazy->once, [&] {
    auto inv = invert(blk.transposed);
    if (!inv) throw InvariantViolation("pairing on B^n is degenerate; basis selection is wrong");
    blk.lazy->inverse = std::move(*inv);
  });
  return blk.lazy->inverse;
}

std::int64_t GradedComponent::gram(std::size_t i, std::size_t j) const {
  auto it = dual_.find(data_.basis[i]);
  if (it == dual_.end()) return 0;
  for (const auto& [k, v] : it->second)
    if (k == j) return v;
  return 0;
}

FieldElement GradedComponent::pair(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b,
                                   const Field& f) const {
  FieldElement s(f, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    auto it = dual_.find(data_.basis[i]);
    if (it == dual_.end()) continue;
    for (const auto& [j, v] : it->second)
      if (!b[j].is_zero()) s += a[i] * b[j] * Rational(v);
  }
  return s;
}

template <class C, class Out>
std::vector<Out> GradedComponent::solve(const std::unordered_map<std::uint32_t, C>& p, Out zero) const {
  std::vector<Out> c(dimension(), zero);
  for (const auto& blk : blocks_) {
    const std::size_t r = blk.rows.size();
    bool any = false;
    for (auto j : blk.cols)
      if (p.count(j)) any = true;
    if (!any) continue;
    const RationalMatrix& inv = inverse(blk);
    for (std::size_t ii = 0; ii < r; ++ii) {
      Out s = zero;
      for (std::size_t jj = 0; jj < r; ++jj) {
        auto it = p.find(blk.cols[jj]);
        if (it == p.end() || sgn(inv[ii][jj]) == 0) continue;
        s += Out(it->second) * inv[ii][jj];
      }
      c[blk.rows[ii]] = s;
    }
  }
  return c;
}

template <class C, class Out>
std::vector<Out> GradedComponent::coordinates_impl(const TensorT<C>& t, Out zero) const {
  if (!t.is_zero() && t.degree() != degree()) throw InvariantViolation("tensor degree does not match component");
  std::unordered_map<std::uint32_t, C> p;
  for (const auto& [u, coef] : t.terms()) {
    auto it = dual_.find(u);
    if (it == dual_.end()) continue;
    for (const auto& [j, v] : it->second) {
      auto [slot, fresh] = p.try_emplace(j, coef);
      if (fresh) slot->second = coef * Rational(v);
      else slot->second += coef * Rational(v);
    }
  }
  return solve<C, Out>(p, zero);
}

std::vector<FieldElement> GradedComponent::coordinates(const Tensor& t, const Field& f) const {
  return coordinates_impl<FieldElement, FieldElement>(t, FieldElement(f, 0));
}

std::vector<Rational> GradedComponent::coordinates(const IntTensor& t) const {
  TensorT<Rational> q(t.degree());
  for (const auto& [w, c] : t.terms()) q.add(w, Rational(c));
  return coordinates_impl<Rational, Rational>(q, Rational(0));
}

ComponentData build_component(const Braiding& b, const GradedComponent& previous, Grading& grading,
                              const BuildOptions& options, BuildStats* stats) {
  const int n = previous.degree() + 1;
  const int dim = b.dimension();
  struct Candidate {
    int letter;
    std::uint32_t prev;
  };
  std::vector<Candidate> cands;
  std::map<int, std::vector<std::uint32_t>> by_grade;
  for (int a = 0; a < dim; ++a)
    for (std::size_t j = 0; j < previous.dimension(); ++j) {
      const int g = grading.left_multiply(a, previous.grade(j));
      by_grade[g].push_back(static_cast<std::uint32_t>(cands.size()));
      cands.push_back({a, static_cast<std::uint32_t>(j)});
    }
  std::vector<std::vector<std::uint32_t>> groups;
  for (auto& [g, v] : by_grade) groups.push_back(std::move(v));

  std::vector<std::vector<std::pair<std::uint32_t, Image>>> kept(groups.size());
  std::vector<int> primes(groups.size(), 0);
  std::vector<char> fallback(groups.size(), 0);
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(threads) if (options.parallel)
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& members = groups[g];
    std::vector<Image> images(members.size());
    std::unordered_map<Word, std::uint32_t, WordHash> column;
    std::vector<SparseRow> rows(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Candidate& c = cands[members[k]];
      images[k] = symmetrise_candidate(b, c.letter, previous.image(c.prev));
      for (const auto& [w, v] : images[k]) {
        auto [it, fresh] = column.try_emplace(w, static_cast<std::uint32_t>(column.size()));
        rows[k].emplace_back(it->second, v);
      }
      std::sort(rows[k].begin(), rows[k].end());
    }
    Selection sel = select_independent(rows);
    primes[g] = sel.primes_used;
    fallback[g] = sel.exact_fallback;
    for (std::size_t k : sel.selected) kept[g].emplace_back(members[k], std::move(images[k]));
  }

  std::vector<std::pair<std::uint32_t, Image>> all;
  for (auto& v : kept)
    for (auto& e : v) all.push_back(std::move(e));
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  ComponentData out;
  out.degree = n;
  for (auto& [idx, img] : all) {
    const Candidate& c = cands[idx];
    out.basis.push_back(previous.basis()[c.prev].with_front(c.letter));
    out.images.push_back(std::move(img));
  }
  if (stats) {
    stats->candidates = cands.size();
    stats->blocks = groups.size();
    stats->max_primes = groups.empty() ? 0 : *std::max_element(primes.begin(), primes.end());
    stats->exact_fallbacks = static_cast<std::size_t>(std::count(fallback.begin(), fallback.end(), 1));
  }
  return out;
}

}  // namespace nichols
