#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nichols/coxeter.hpp"
#include "nichols/scalars.hpp"

namespace nichols {

struct SignedRoot {
  int index = 0;  // positive-root index
  int sign = 1;   // +1 or -1
  bool operator==(const SignedRoot&) const = default;
};

using RootVector = std::vector<FieldElement>;  // coordinates in the simple roots

class RootSystem {
 public:
  const CoxeterSystem& coxeter() const { return cs_; }
  const Field& field() const { return field_; }
  int rank() const { return cs_.rank; }
  int size() const { return static_cast<int>(positive_.size()); }  // |R+|
  std::string label() const { return cs_.label; }

  const RootVector& root(int i) const { return positive_[i]; }
  // Gram matrix of the simple roots: (a_i, a_j) = -cos(pi/m_ij).
  const std::vector<std::vector<FieldElement>>& gram() const { return gram_; }
  FieldElement inner(const RootVector& x, const RootVector& y) const;
  FieldElement inner(int i, int j) const { return inner_[i][j]; }
  RootVector reflect(int t, const RootVector& v) const;
  SignedRoot reflect(int t, int i) const { return table_[t][i]; }
  SignedRoot reflect(int t, SignedRoot r) const {
    SignedRoot s = table_[t][r.index];
    s.sign *= r.sign;
    return s;
  }
  const std::vector<std::vector<SignedRoot>>& reflection_table() const { return table_; }
  std::optional<SignedRoot> find(const RootVector& v) const;

  // W-orbits on positive roots, numbered by first appearance.
  int orbit(int i) const { return orbit_[i]; }
  int orbit_count() const { return orbit_count_; }
  // Height in the simple roots, exact sum of coordinates.
  FieldElement height(int i) const;

 private:
  friend std::shared_ptr<const RootSystem> generate_root_system(const CoxeterSystem&, std::size_t);
  RootSystem(CoxeterSystem cs, Field f) : cs_(std::move(cs)), field_(std::move(f)) {}
  CoxeterSystem cs_;
  Field field_;
  std::vector<std::vector<FieldElement>> gram_;
  std::vector<RootVector> positive_;
  std::vector<std::vector<FieldElement>> inner_;
  std::vector<std::vector<SignedRoot>> table_;
  std::vector<int> orbit_;
  int orbit_count_ = 0;
  std::vector<std::pair<std::string, int>> lookup_;  // sorted key -> index
};

// Closure of the simple roots under simple reflections.  Throws BudgetExceeded
// when more than max_positive positive roots appear (infinite or too large).
std::shared_ptr<const RootSystem> generate_root_system(const CoxeterSystem& cs,
                                                       std::size_t max_positive = 200);

// Sign of a root vector: +1 if all coordinates >= 0, -1 if all <= 0.
int root_sign(const RootVector& v);
std::string root_key(const RootVector& v);

// Exact rank of a family of vectors over the field.
int field_rank(std::vector<std::vector<FieldElement>> rows);

// Rank-2 subsystem R+ cap span(a, b), with gamma_0..gamma_{m-1} ordered so that
// gamma_0, gamma_{m-1} are its simple roots and s_{gamma_i} gamma_j = gamma_{2i-j+m}.
struct DihedralSubsystem {
  int m = 0;
  std::vector<int> gamma;  // positive-root indices of the ambient system
};
std::vector<DihedralSubsystem> dihedral_subsystems(const RootSystem& rs);

// gamma index arithmetic modulo 2m: returns the signed root gamma_k.
SignedRoot dihedral_gamma(const DihedralSubsystem& d, int k);

}  // namespace nichols
