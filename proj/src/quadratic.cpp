#include <map>

#include "nichols/nichols.hpp"

namespace nichols {

namespace {

using SparseQ = std::vector<std::pair<Word, Integer>>;

// Basis of ker(1 + Psi) on V (x) V, one homogeneous vector per solution on a Psi-cycle.
std::vector<SparseQ> quadratic_kernel(const Braiding& b) {
  const int n = b.dimension();
  std::vector<char> seen(n * n, 0);
  std::vector<SparseQ> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (seen[x * n + y]) continue;
      // Walk the cycle of Psi on 2-words, recording signs.
      std::vector<Word> cycle;
      std::vector<int> sign_to_next;
      Word w{x, y};
      do {
        seen[w[0] * n + w[1]] = 1;
        cycle.push_back(w);
        SignedRoot r = b.act(w[0], w[1]);
        sign_to_next.push_back(r.sign);
        w = Word{r.index, w[0]};
      } while (!(w == cycle.front()));
      const std::size_t L = cycle.size();
      // (1 + Psi) on span(cycle): column i maps e_i to e_i + s_i e_{i+1}.
      RationalMatrix m(L, std::vector<Rational>(L, 0));
      for (std::size_t i = 0; i < L; ++i) {
        m[i][i] += 1;
        m[(i + 1) % L][i] += sign_to_next[i];
      }
      for (const auto& v : nullspace(m, L)) {
        auto iv = primitive_integer_vector(v);
        SparseQ k;
        for (std::size_t i = 0; i < L; ++i)
          if (iv[i] != 0) k.emplace_back(cycle[i], iv[i]);
        out.push_back(std::move(k));
      }
    }
  return out;
}

}  // namespace

std::vector<std::size_t> quadratic_hilbert_series(const Braiding& b, int max_degree, std::uint64_t budget) {
  const int n = b.dimension();
  std::vector<std::size_t> dims{1};
  if (max_degree < 1) return dims;
  Grading grading(b);
  auto kernel = quadratic_kernel(b);
  // pair (a, b) -> (kernel index, coefficient)
  std::vector<std::vector<std::pair<std::size_t, Integer>>> by_pair(n * n);
  for (std::size_t k = 0; k < kernel.size(); ++k)
    for (const auto& [w, c] : kernel[k]) by_pair[w[0] * n + w[1]].emplace_back(k, c);

  struct Vec {
    SparseQ terms;
    int grade;
  };
  std::vector<Vec> q;
  for (int a = 0; a < n; ++a) q.push_back({{{Word{a}, Integer(1)}}, grading.of(Word{a})});
  dims.push_back(q.size());

  unsigned __int128 size = n;
  for (int k = 2; k <= max_degree; ++k) {
    size *= static_cast<unsigned>(n);
    if (size > budget) throw BudgetExceeded("quadratic cover degree " + std::to_string(k) + " exceeds budget");
    std::map<int, std::vector<std::pair<int, std::size_t>>> groups;  // grade -> unknowns (a, j)
    for (int a = 0; a < n; ++a)
      for (std::size_t j = 0; j < q.size(); ++j) groups[grading.left_multiply(a, q[j].grade)].emplace_back(a, j);
    std::vector<Vec> next;
    for (const auto& [g, unknowns] : groups) {
      // Constraint (kappa, tail): sum_{a,b} kappa[ab] x[a b tail] = 0.
      std::map<std::pair<std::size_t, Word>, std::size_t> row_of;
      RationalMatrix rows;
      const std::size_t cols = unknowns.size();
      for (std::size_t u = 0; u < cols; ++u) {
        const auto [a, j] = unknowns[u];
        for (const auto& [x, val] : q[j].terms) {
          Word tail = x.suffix_from(1);
          for (const auto& [kid, coef] : by_pair[a * n + x[0]]) {
            auto key = std::make_pair(kid, tail);
            auto it = row_of.find(key);
            if (it == row_of.end()) {
              it = row_of.emplace(key, rows.size()).first;
              rows.emplace_back(cols, Rational(0));
            }
            rows[it->second][u] += Rational(val * coef);
          }
        }
      }
      for (const auto& v : nullspace(std::move(rows), cols)) {
        auto iv = primitive_integer_vector(v);
        std::map<Word, Integer> acc;
        for (std::size_t u = 0; u < cols; ++u) {
          if (iv[u] == 0) continue;
          const auto [a, j] = unknowns[u];
          for (const auto& [x, val] : q[j].terms) acc[x.with_front(a)] += iv[u] * val;
        }
        Vec out{{}, g};
        for (auto& [w, c] : acc)
          if (c != 0) out.terms.emplace_back(w, c);
        next.push_back(std::move(out));
      }
    }
    q = std::move(next);
    dims.push_back(q.size());
    if (q.empty()) break;
  }
  return dims;
}

}  // namespace nichols
