#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nichols/scalars.hpp"

namespace nichols {

// Sparse integer row, sorted by column.
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

struct Selection {
  std::vector<std::size_t> selected;   // greedy: row k kept iff independent of kept rows before it
  std::vector<std::uint32_t> pivots;   // one column per kept row, A[pivots][selected] invertible
  int primes_used = 0;
  bool exact_fallback = false;
};

// Serial reference: exact greedy selection with rational elimination.
Selection select_independent_exact(const std::vector<SparseRow>& rows);

// Greedy selection modulo a 61-bit prime.  Independence mod p implies
// independence over Q; every rejected row is then confirmed to lie in the
// rational span of the kept rows.  If a confirmation fails another prime is
// tried, and after that the exact path is used.
Selection select_independent(const std::vector<SparseRow>& rows);

// Prediction only (no certification), exposed for tests and benchmarks.
Selection select_independent_mod_p(const std::vector<SparseRow>& rows, std::uint64_t prime);

// true iff target = sum lambda_i rows[basis[i]] for rationals lambda, which are returned.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<SparseRow>& rows,
                                                   const std::vector<std::size_t>& basis,
                                                   const std::vector<std::uint32_t>& pivots,
                                                   const SparseRow& target);

inline constexpr std::uint64_t kPrimes[] = {2305843009213693951ULL,   // 2^61 - 1
                                            2305843009213693921ULL, 2305843009213693907ULL};

// Dense rational matrices.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Inverse of a square matrix; nullopt if singular.
std::optional<RationalMatrix> invert(RationalMatrix a);
int rank(RationalMatrix a);
// Basis of {x : A x = 0}.
std::vector<std::vector<Rational>> nullspace(RationalMatrix a, std::size_t ncols);

// Clears denominators and divides by the content; sign normalised so the
// first nonzero entry is positive.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace nichols
