#include "nichols/schubert.hpp"

#include "nichols/errors.hpp"

namespace nichols {

SchubertCalculus::SchubertCalculus(std::shared_ptr<const ReflectionGroup> g) : group_(std::move(g)) {}

Polynomial SchubertCalculus::root_form(int root) const {
  return Polynomial::linear(roots().field(), roots().root(root));
}

Polynomial SchubertCalculus::act(const GroupElement& w, const Polynomial& f) const {
  std::vector<Polynomial> images;
  for (int i = 0; i < nvars(); ++i) {
    RootVector e(nvars(), FieldElement(roots().field(), 0));
    e[i] = FieldElement(roots().field(), 1);
    images.push_back(Polynomial::linear(roots().field(), w.apply(roots(), e)));
  }
  return f.substitute(images);
}

Polynomial SchubertCalculus::divided_difference(int root, const Polynomial& f) const {
  Polynomial diff = f - reflect(root, f);
  return diff.divide_by_linear(roots().root(root));
}

Polynomial SchubertCalculus::right_divided(const Polynomial& f, const std::vector<int>& word) const {
  Polynomial g = f;
  for (int s : word) g = divided_difference(group_->simple_roots()[s], g);
  return g;
}

Polynomial SchubertCalculus::top_class() const {
  const Field& f = roots().field();
  Polynomial p = Polynomial::constant(f, nvars(), FieldElement(f, Rational(1, static_cast<long>(group_->order()))));
  for (int b : group_->positive_roots()) p = p * root_form(b);
  return p;
}

const std::vector<Polynomial>& SchubertCalculus::schubert_classes() const {
  if (!classes_.empty()) return classes_;
  const Polynomial top = top_class();
  const std::size_t w0 = group_->longest_index();
  for (std::size_t w = 0; w < group_->order(); ++w) {
    // X_w = X_{w0} d-bar along a reduced word of w0 w^{-1}
    std::size_t x = group_->multiply(w0, group_->inverse(w));
    classes_.push_back(right_divided(top, group_->reduced_word(x)));
  }
  return classes_;
}

FieldElement SchubertCalculus::pairing(const Polynomial& f, std::size_t w) const {
  return right_divided(f, group_->reduced_word(w)).constant_term();
}

std::vector<FieldElement> SchubertCalculus::schubert_coordinates(const Polynomial& f) const {
  std::vector<FieldElement> out;
  for (std::size_t w = 0; w < group_->order(); ++w) out.push_back(pairing(f, w));
  return out;
}

Polynomial SchubertCalculus::reynolds(const Polynomial& f) const {
  Polynomial acc(roots().field(), nvars());
  for (std::size_t w = 0; w < group_->order(); ++w) acc += act(group_->element(w), f);
  return acc.scaled(FieldElement(roots().field(), Rational(1, static_cast<long>(group_->order()))));
}

NilCoxeterElement nilcoxeter_basis(const ReflectionGroup&, std::size_t w, const Field& f) {
  NilCoxeterElement e;
  e.terms[w] = FieldElement(f, 1);
  return e;
}

NilCoxeterElement nilcoxeter_multiply(const ReflectionGroup& g, const NilCoxeterElement& a,
                                      const NilCoxeterElement& b) {
  NilCoxeterElement r;
  for (const auto& [v, x] : a.terms)
    for (const auto& [w, y] : b.terms) {
      std::size_t vw = g.multiply(v, w);
      if (g.length(vw) != g.length(v) + g.length(w)) continue;
      FieldElement& slot = r.terms[vw];
      slot += x * y;
      if (slot.is_zero()) r.terms.erase(vw);
    }
  return r;
}

ReflectionSubmodule reflection_submodule(std::shared_ptr<const RootSystem> rs, std::vector<FieldElement> orbit_coeffs) {
  if (static_cast<int>(orbit_coeffs.size()) != rs->orbit_count())
    throw InvariantViolation("one coefficient per W-orbit of roots is required");
  ReflectionSubmodule u;
  u.rs = rs;
  bool any = false;
  for (auto& c : orbit_coeffs) {
    if (!c.has_field()) c = FieldElement(rs->field(), 0);
    if (!c.is_zero()) any = true;
  }
  if (!any) throw UnsupportedInput("all orbit coefficients are zero");
  u.orbit_coeffs = std::move(orbit_coeffs);
  for (int i = 0; i < rs->size(); ++i) {
    u.coeff.push_back(u.orbit_coeffs[rs->orbit(i)]);
    if (!u.coeff.back().is_zero()) u.support.push_back(i);
  }
  u.generic = static_cast<int>(u.support.size()) == rs->size();
  u.subgroup = std::make_shared<ReflectionGroup>(ReflectionGroup::generated_by(rs, u.support));
  return u;
}

ReflectionSubmodule canonical_submodule(std::shared_ptr<const RootSystem> rs) {
  std::vector<FieldElement> c(rs->orbit_count(), FieldElement(rs->field(), 1));
  return reflection_submodule(std::move(rs), std::move(c));
}

Tensor mu_linear(const ReflectionSubmodule& u, const RootVector& x) {
  Tensor t(1);
  for (int b = 0; b < u.rs->size(); ++b) {
    if (u.coeff[b].is_zero()) continue;
    FieldElement v = u.coeff[b] * u.rs->inner(x, u.rs->root(b)) * Rational(2);
    t.add(Word{b}, v);
  }
  return t;
}

namespace {

std::vector<Tensor> variable_images(const ReflectionSubmodule& u) {
  std::vector<Tensor> out;
  const int r = u.rs->rank();
  for (int i = 0; i < r; ++i) {
    RootVector e(r, FieldElement(u.rs->field(), 0));
    e[i] = FieldElement(u.rs->field(), 1);
    out.push_back(mu_linear(u, e));
  }
  return out;
}

int total_degree(const Exponent& e) {
  int s = 0;
  for (auto x : e) s += x;
  return s;
}

}  // namespace

Tensor mu_tensor(const ReflectionSubmodule& u, const Polynomial& f, int degree) {
  auto images = variable_images(u);
  Tensor out(degree);
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) != degree) continue;
    Tensor m(Word(), c);
    for (int i = 0; i < f.nvars(); ++i)
      for (int k = 0; k < e[i]; ++k) m = m * images[i];
    out += m;
  }
  return out;
}

MuTable mu_table(const ReflectionSubmodule& u) {
  MuTable t;
  for (const auto& img : variable_images(u)) {
    std::vector<FieldElement> row(u.rs->size(), FieldElement(u.rs->field(), 0));
    for (const auto& [w, c] : img.terms()) row[w[0]] = c;
    t.push_back(std::move(row));
  }
  return t;
}

FieldElement mu_coefficient(const MuTable& table, const Polynomial& f, const Word& w) {
  FieldElement s(f.field(), 0);
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) != w.size()) continue;
    FieldElement prod = c;
    int pos = 0;
    for (int i = 0; i < f.nvars() && !prod.is_zero(); ++i)
      for (int k = 0; k < e[i]; ++k, ++pos) {
        const FieldElement& x = table[i][w[pos]];
        if (x.is_zero()) {
          prod = FieldElement(f.field(), 0);
          break;
        }
        prod *= x;
      }
    s += prod;
  }
  return s;
}

FieldElement mu_coefficient(const ReflectionSubmodule& u, const Polynomial& f, const Word& w) {
  return mu_coefficient(mu_table(u), f, w);
}

NicholsElement mu_embed(NicholsAlgebra& B, const ReflectionSubmodule& u, const Polynomial& f) {
  auto images = variable_images(u);
  std::vector<NicholsElement> gens;
  for (const auto& t : images) gens.push_back(B.element(t));
  std::map<Exponent, NicholsElement> memo;
  NicholsElement one;
  one.parts[0] = {FieldElement(B.field(), 1)};
  memo[Exponent{}] = one;
  // mu(a^e) = mu(a^{e - e_v}) mu(a_v), v the last variable present
  std::function<const NicholsElement&(const Exponent&)> power = [&](const Exponent& e) -> const NicholsElement& {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    int v = 7;
    while (e[v] == 0) --v;
    Exponent prev = e;
    --prev[v];
    NicholsElement r = B.multiply(power(prev), gens[v]);
    return memo.emplace(e, std::move(r)).first->second;
  };
  NicholsElement out;
  for (const auto& [e, c] : f.terms()) out = B.add(out, B.scale(power(e), c));
  return out;
}

Word nu_word(const ReflectionGroup& g, std::size_t w) {
  Word out;
  for (int s : g.reduced_word(w)) out.push_back(g.simple_roots()[s]);
  return out;
}

NicholsElement nu_embed(NicholsAlgebra& B, const ReflectionGroup& g, const NilCoxeterElement& a) {
  NicholsElement out;
  for (const auto& [w, c] : a.terms) out = B.add(out, B.element(Tensor(nu_word(g, w), c)));
  return out;
}

Tensor theta(const ReflectionSubmodule& u, const Tensor& t) {
  Tensor out(t.degree());
  for (const auto& [w, c] : t.terms()) {
    FieldElement s = c;
    for (int k = 0; k < w.size(); ++k) {
      if (u.coeff[w[k]].is_zero()) throw UnsupportedInput("theta needs nonzero orbit coefficients");
      s *= u.coeff[w[k]];
    }
    out.add(w, s);
  }
  return out;
}

NicholsElement theta(NicholsAlgebra& B, const ReflectionSubmodule& u, const NicholsElement& a) {
  NicholsElement out;
  for (const auto& [d, coords] : a.parts) out = B.add(out, B.element(theta(u, B.representative(a, d))));
  return out;
}

FieldElement pairing_mu_word(const Braiding& b, const ReflectionSubmodule& u, const Polynomial& f, const Word& w) {
  FieldElement s(u.rs->field(), 0);
  const MuTable table = mu_table(u);
  IntTensor sym = symmetrise(b, IntTensor(w, 1));
  for (const auto& [v, c] : sym.terms()) {
    FieldElement phi = mu_coefficient(table, f, v.reversed());
    if (!phi.is_zero()) s += phi * Rational(c);
  }
  return s;
}

}  // namespace nichols
