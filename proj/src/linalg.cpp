#include "nichols/linalg.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMersenne61 = (1ULL << 61) - 1;

u64 mulmod(u64 a, u64 b, u64 p) {
  const u128 x = static_cast<u128>(a) * b;
  if (p == kMersenne61) {
    // 2^61 = 1: fold the high bits instead of a 128-bit division
    u64 r = static_cast<u64>(x & kMersenne61) + static_cast<u64>(x >> 61);
    r = (r & kMersenne61) + (r >> 61);
    return r >= p ? r - p : r;
  }
  return static_cast<u64>(x % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 reduce(std::int64_t v, u64 p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? static_cast<u64>(r + static_cast<std::int64_t>(p)) : static_cast<u64>(r);
}

std::uint32_t column_bound(const std::vector<SparseRow>& rows) {
  std::uint32_t n = 0;
  for (const auto& r : rows)
    if (!r.empty()) n = std::max(n, r.back().first + 1);
  return n;
}

// Column-ordered echelon of kept rows, each normalised to 1 at its pivot.
template <class Scalar>
struct EchelonRow {
  std::uint32_t pivot;
  std::vector<std::pair<std::uint32_t, Scalar>> entries;  // columns > pivot
};

// Solver for A lambda = target[pivots] with A = kept rows on the pivot columns.
class SpanSolver {
 public:
  SpanSolver(const std::vector<SparseRow>& rows, const std::vector<std::size_t>& basis,
             const std::vector<std::uint32_t>& pivots)
      : rows_(rows), basis_(basis), pivots_(pivots) {
    const std::size_t r = basis.size();
    RationalMatrix a(r, std::vector<Rational>(r, 0));
    std::unordered_map<std::uint32_t, std::size_t> where;
    for (std::size_t k = 0; k < r; ++k) where[pivots[k]] = k;
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& [c, v] : rows[basis[i]]) {
        auto it = where.find(c);
        if (it != where.end()) a[it->second][i] = v;
      }
    auto inv = invert(std::move(a));
    if (!inv) throw InvariantViolation("pivot submatrix is singular");
    inverse_ = std::move(*inv);
    for (std::size_t k = 0; k < r; ++k) pivot_slot_[pivots[k]] = k;
  }

  std::optional<std::vector<Rational>> solve(const SparseRow& target) const {
    const std::size_t r = basis_.size();
    std::vector<Rational> rhs(r, 0);
    for (const auto& [c, v] : target) {
      auto it = pivot_slot_.find(c);
      if (it != pivot_slot_.end()) rhs[it->second] = v;
    }
    std::vector<Rational> lambda(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k)
        if (sgn(rhs[k]) != 0 && sgn(inverse_[i][k]) != 0) lambda[i] += inverse_[i][k] * rhs[k];
    std::unordered_map<std::uint32_t, Rational> acc;
    for (const auto& [c, v] : target) acc[c] = v;
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(lambda[i]) == 0) continue;
      for (const auto& [c, v] : rows_[basis_[i]]) acc[c] -= lambda[i] * v;
    }
    for (const auto& [c, v] : acc)
      if (sgn(v) != 0) return std::nullopt;
    return lambda;
  }

 private:
  const std::vector<SparseRow>& rows_;
  const std::vector<std::size_t>& basis_;
  const std::vector<std::uint32_t>& pivots_;
  RationalMatrix inverse_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_slot_;
};

// Greedy elimination mod p.  With tracing, every row keeps its reduction
// steps (echelon index, factor) and kept rows their pivot value s, so that
// kept row j = s_j E_j + sum_i f_ji E_i over the normalised echelon rows E.
struct Trace {
  std::vector<std::vector<std::pair<std::uint32_t, u64>>> steps;  // per input row
  std::vector<u64> scale;                                          // per echelon row
  std::vector<u64> inverse_scale;
};

Selection eliminate_mod_p(const std::vector<SparseRow>& rows, u64 p, Trace* trace) {
  Selection out;
  out.primes_used = 1;
  const std::uint32_t ncols = column_bound(rows);
  std::vector<u64> acc(ncols, 0);
  std::vector<int> pivot_of(ncols, -1);
  std::vector<EchelonRow<u64>> echelon;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
  std::vector<std::uint32_t> touched;
  if (trace) trace->steps.assign(rows.size(), {});

  for (std::size_t k = 0; k < rows.size(); ++k) {
    touched.clear();
    for (const auto& [c, v] : rows[k]) {
      u64 x = reduce(v, p);
      if (!x) continue;
      acc[c] = x;
      touched.push_back(c);
      heap.push(c);
    }
    while (!heap.empty()) {
      std::uint32_t c = heap.top();
      heap.pop();
      if (acc[c] == 0) continue;
      int piv = pivot_of[c];
      if (piv < 0) {
        // New pivot: gather the surviving entries right of c.
        EchelonRow<u64> row;
        row.pivot = c;
        u64 inv = powmod(acc[c], p - 2, p);
        std::vector<std::uint32_t> rest;
        while (!heap.empty()) {
          rest.push_back(heap.top());
          heap.pop();
        }
        rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
        // the heap may hold c twice; a duplicate pivot entry would loop forever
        for (std::uint32_t d : rest)
          if (d != c && acc[d]) row.entries.emplace_back(d, mulmod(acc[d], inv, p));
        pivot_of[c] = static_cast<int>(echelon.size());
        if (trace) {
          trace->scale.push_back(acc[c]);
          trace->inverse_scale.push_back(inv);
        }
        echelon.push_back(std::move(row));
        out.selected.push_back(k);
        out.pivots.push_back(c);
        break;
      }
      const u64 f = acc[c];
      acc[c] = 0;
      if (trace) trace->steps[k].emplace_back(static_cast<std::uint32_t>(piv), f);
      for (const auto& [d, v] : echelon[piv].entries) {
        if (acc[d] == 0) {
          touched.push_back(d);
          heap.push(d);
        }
        u64 sub = mulmod(f, v, p);
        acc[d] = acc[d] >= sub ? acc[d] - sub : acc[d] + p - sub;
      }
    }
    while (!heap.empty()) heap.pop();
    for (std::uint32_t c : touched) acc[c] = 0;
  }
  return out;
}

// n/d with |n|, d <= sqrt(p/2) and n = a d mod p, if one exists.
std::optional<Rational> reconstruct(u64 a, u64 p) {
  using i128 = __int128;
  const i128 bound = static_cast<i128>(1) << 30;
  i128 r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 >= bound) {
    i128 q = r0 / r1;
    i128 r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  if (t1 == 0 || t1 >= bound || -t1 >= bound) return std::nullopt;
  if (t1 < 0) r1 = -r1, t1 = -t1;
  Rational q(static_cast<long>(r1), static_cast<long>(t1));
  q.canonicalize();
  return q;
}

// Exact test of target = sum lambda_i rows[basis[i]] after clearing denominators.
bool verify_combination(const std::vector<SparseRow>& rows, const std::vector<std::size_t>& basis,
                        const std::vector<Rational>& lambda, const SparseRow& target, bool small_entries) {
  using i128 = __int128;
  Integer den = 1;
  for (const auto& l : lambda)
    if (sgn(l) != 0) den = lcm(den, Integer(l.get_den()));
  std::vector<std::pair<std::size_t, Integer>> terms;
  bool small = small_entries && den.fits_slong_p() && abs(den) < (1L << 40);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(lambda[i]) == 0) continue;
    Integer m = lambda[i].get_num() * (den / lambda[i].get_den());
    if (!(abs(m) < (1L << 62))) small = false;
    terms.emplace_back(i, std::move(m));
  }
  if (small) {
    // |entries| < 2^31, |multipliers| < 2^62: far from overflowing 127 bits
    std::unordered_map<std::uint32_t, i128> acc;
    const i128 d = den.get_si();
    for (const auto& [c, v] : target) acc[c] = d * v;
    for (const auto& [i, m] : terms) {
      const i128 mi = m.get_si();
      for (const auto& [c, v] : rows[basis[i]]) acc[c] -= mi * v;
    }
    for (const auto& [c, v] : acc)
      if (v != 0) return false;
    return true;
  }
  std::unordered_map<std::uint32_t, Integer> acc;
  for (const auto& [c, v] : target) acc[c] = den * static_cast<long>(v);
  for (const auto& [i, m] : terms)
    for (const auto& [c, v] : rows[basis[i]]) acc[c] -= m * static_cast<long>(v);
  for (const auto& [c, v] : acc)
    if (sgn(v) != 0) return false;
  return true;
}

// lambda mod p for a rejected row from its reduction steps, by back-substitution
// through the kept rows' steps.
std::vector<u64> combination_mod_p(const Trace& trace, const Selection& s, std::size_t row, u64 p) {
  const std::size_t r = s.selected.size();
  std::vector<u64> g(r, 0);
  for (const auto& [i, f] : trace.steps[row]) g[i] = (g[i] + f) % p;
  std::vector<u64> lambda(r, 0);
  for (std::size_t j = r; j-- > 0;) {
    if (!g[j]) continue;
    lambda[j] = mulmod(g[j], trace.inverse_scale[j], p);
    for (const auto& [i, f] : trace.steps[s.selected[j]]) {
      u64 sub = mulmod(lambda[j], f, p);
      g[i] = g[i] >= sub ? g[i] - sub : g[i] + p - sub;
    }
  }
  return lambda;
}

}  // namespace

Selection select_independent_mod_p(const std::vector<SparseRow>& rows, std::uint64_t p) {
  return eliminate_mod_p(rows, p, nullptr);
}

Selection select_independent_exact(const std::vector<SparseRow>& rows) {
  Selection out;
  out.exact_fallback = true;
  std::map<std::uint32_t, EchelonRow<Rational>> echelon;  // keyed by pivot column
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [c, v] : rows[k])
      if (v) acc[c] = v;
    while (!acc.empty()) {
      auto first = acc.begin();
      auto it = echelon.find(first->first);
      if (it == echelon.end()) {
        EchelonRow<Rational> row;
        row.pivot = first->first;
        Rational inv = 1 / first->second;
        for (auto j = std::next(first); j != acc.end(); ++j) row.entries.emplace_back(j->first, j->second * inv);
        out.selected.push_back(k);
        out.pivots.push_back(row.pivot);
        echelon.emplace(row.pivot, std::move(row));
        break;
      }
      Rational f = first->second;
      acc.erase(first);
      for (const auto& [d, v] : it->second.entries) {
        Rational& slot = acc[d];
        slot -= f * v;
        if (sgn(slot) == 0) acc.erase(d);
      }
    }
  }
  return out;
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<SparseRow>& rows,
                                                   const std::vector<std::size_t>& basis,
                                                   const std::vector<std::uint32_t>& pivots,
                                                   const SparseRow& target) {
  SpanSolver solver(rows, basis, pivots);
  return solver.solve(target);
}

Selection select_independent(const std::vector<SparseRow>& rows) {
  int tried = 0;
  for (u64 p : kPrimes) {
    ++tried;
    Trace trace;
    Selection s = eliminate_mod_p(rows, p, &trace);
    s.primes_used = tried;
    if (s.selected.empty()) {
      bool all_zero = true;
      for (const auto& r : rows)
        for (const auto& e : r)
          if (e.second) all_zero = false;
      if (all_zero) return s;
      continue;
    }
    // Certify each rejected row: lift its combination mod p to Q and check it
    // exactly; the dense solver settles the rows where the lift fails.
    bool small_entries = true;
    for (const auto& r : rows)
      for (const auto& e : r)
        if (e.second >= (1L << 31) || -e.second >= (1L << 31)) small_entries = false;
    std::optional<SpanSolver> solver;
    std::size_t next = 0;
    bool ok = true;
    for (std::size_t k = 0; k < rows.size() && ok; ++k) {
      if (next < s.selected.size() && s.selected[next] == k) {
        ++next;
        continue;
      }
      std::vector<Rational> lambda;
      bool lifted = true;
      for (u64 x : combination_mod_p(trace, s, k, p)) {
        auto q = reconstruct(x, p);
        if (!q) {
          lifted = false;
          break;
        }
        lambda.push_back(*q);
      }
      if (lifted && verify_combination(rows, s.selected, lambda, rows[k], small_entries)) continue;
      if (!solver) solver.emplace(rows, s.selected, s.pivots);
      if (!solver->solve(rows[k])) ok = false;
    }
    if (ok) return s;
  }
  Selection s = select_independent_exact(rows);
  s.primes_used = tried;
  return s;
}

std::optional<RationalMatrix> invert(RationalMatrix a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n, 0);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (std::size_t k = c; k < 2 * n; ++k)
      if (sgn(a[c][k]) != 0) a[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k < 2 * n; ++k)
        if (sgn(a[c][k]) != 0) a[r][k] -= f * a[c][k];
    }
  }
  RationalMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (std::size_t k = c; k < ncols; ++k)
      if (sgn(a[row][k]) != 0) a[row][k] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (sgn(a[row][k]) != 0) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RationalMatrix a) {
  if (a.empty()) return 0;
  return static_cast<int>(rref(a, a[0].size()).size());
}

std::vector<std::vector<Rational>> nullspace(RationalMatrix a, std::size_t ncols) {
  auto piv = rref(a, ncols);
  std::vector<char> is_pivot(ncols, 0);
  for (auto c : piv) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v)
    if (sgn(q) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) return out;
  int sign = 0;
  for (const auto& x : out)
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  for (auto& x : out) x = x / g * sign;
  return out;
}

}  // namespace nichols
