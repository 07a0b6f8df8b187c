#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "nichols/group.hpp"
#include "nichols/nichols.hpp"
#include "nichols/polynomial.hpp"

namespace nichols {

// Divided differences, Schubert classes and the pairing with the nilCoxeter
// algebra for a finite reflection group (full W or a reflection subgroup).
class SchubertCalculus {
 public:
  explicit SchubertCalculus(std::shared_ptr<const ReflectionGroup> g);

  const ReflectionGroup& group() const { return *group_; }
  const RootSystem& roots() const { return group_->roots(); }
  int nvars() const { return roots().rank(); }

  Polynomial root_form(int root) const;  // positive root as a linear polynomial
  Polynomial act(const GroupElement& w, const Polynomial& f) const;
  Polynomial reflect(int root, const Polynomial& f) const { return act(GroupElement::reflection(roots(), root), f); }
  // d_beta f = (f - s_beta f) / beta; the right action f d-bar_beta is the same operator.
  Polynomial divided_difference(int root, const Polynomial& f) const;
  // f d-bar_{s_1} d-bar_{s_2} ..., letters indexing group().simple_roots()
  Polynomial right_divided(const Polynomial& f, const std::vector<int>& word) const;

  Polynomial top_class() const;  // (1/|W|) prod of positive roots
  // Dual basis to {u_w} under <f, u_w> = eps(f u_w): X_w = X_{w0} u_{w0 w^-1}.
  const std::vector<Polynomial>& schubert_classes() const;
  FieldElement pairing(const Polynomial& f, std::size_t w) const;
  std::vector<FieldElement> schubert_coordinates(const Polynomial& f) const;
  Polynomial reynolds(const Polynomial& f) const;

 private:
  std::shared_ptr<const ReflectionGroup> group_;
  mutable std::vector<Polynomial> classes_;
};

// Element of the nilCoxeter algebra: group index -> coefficient.
struct NilCoxeterElement {
  std::map<std::size_t, FieldElement> terms;
};
NilCoxeterElement nilcoxeter_basis(const ReflectionGroup& g, std::size_t w, const Field& f);
NilCoxeterElement nilcoxeter_multiply(const ReflectionGroup& g, const NilCoxeterElement& a,
                                      const NilCoxeterElement& b);

// U = mu(h) for orbit-constant coefficients c.
struct ReflectionSubmodule {
  std::shared_ptr<const RootSystem> rs;
  std::vector<FieldElement> orbit_coeffs;  // per W-orbit
  std::vector<FieldElement> coeff;         // per positive root
  std::vector<int> support;                // positive roots with c != 0
  bool generic = false;
  std::shared_ptr<const ReflectionGroup> subgroup;  // W(supp)
};

ReflectionSubmodule reflection_submodule(std::shared_ptr<const RootSystem> rs, std::vector<FieldElement> orbit_coeffs);
ReflectionSubmodule canonical_submodule(std::shared_ptr<const RootSystem> rs);

// mu(x) = sum_{a in R} c_a (x, a) [a] = 2 sum_{a in R+} c_a (x, a) [a]
Tensor mu_linear(const ReflectionSubmodule& u, const RootVector& x);
// Tensor representative of mu(f): each monomial becomes mu(a_1)^{e_1} mu(a_2)^{e_2} ...
Tensor mu_tensor(const ReflectionSubmodule& u, const Polynomial& f, int degree);
// table[i][b] = coefficient of [b] in mu(a_i)
using MuTable = std::vector<std::vector<FieldElement>>;
MuTable mu_table(const ReflectionSubmodule& u);
// Coefficient of mu_tensor(f, deg w) at one word, without expanding the tensor.
FieldElement mu_coefficient(const MuTable& table, const Polynomial& f, const Word& w);
FieldElement mu_coefficient(const ReflectionSubmodule& u, const Polynomial& f, const Word& w);
NicholsElement mu_embed(NicholsAlgebra& B, const ReflectionSubmodule& u, const Polynomial& f);

// nu(u_w): product of simple-root generators along the lex-least reduced word.
Word nu_word(const ReflectionGroup& g, std::size_t w);
NicholsElement nu_embed(NicholsAlgebra& B, const ReflectionGroup& g, const NilCoxeterElement& a);

// theta([a]) = c_a [a]; needs all coefficients nonzero.
Tensor theta(const ReflectionSubmodule& u, const Tensor& t);
NicholsElement theta(NicholsAlgebra& B, const ReflectionSubmodule& u, const NicholsElement& a);

// <mu(f), word> in B_W by symmetrising the word; f homogeneous of the word's degree.
FieldElement pairing_mu_word(const Braiding& b, const ReflectionSubmodule& u, const Polynomial& f, const Word& w);

}  // namespace nichols
