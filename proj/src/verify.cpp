#include "nichols/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <omp.h>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

using Clock = std::chrono::steady_clock;

struct Timed {
  CheckReport& r;
  Clock::time_point start = Clock::now();
  explicit Timed(CheckReport& rep) : r(rep) {}
  ~Timed() { r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count(); }
};

CheckReport start_report(const std::string& check, const std::string& group) {
  CheckReport r;
  r.check = check;
  r.group = group;
  return r;
}

std::shared_ptr<const RootSystem> dihedral(int m) {
  return generate_root_system(coxeter_from_label("I2:" + std::to_string(m)));
}

// Small deterministic draws; modulo keeps the stream identical across standard libraries.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int uniform(int lo, int hi) { return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1)); }
  int nonzero(int bound) {
    int v = uniform(1, bound);
    return (gen() & 1) ? v : -v;
  }
};

Tensor random_tensor(const Field& f, int dim, int degree, int terms, Rng& rng) {
  Tensor t(degree);
  for (int k = 0; k < terms; ++k) {
    Word w;
    for (int i = 0; i < degree; ++i) w.push_back(rng.uniform(0, dim - 1));
    t.add(w, FieldElement(f, rng.nonzero(3)));
  }
  return t;
}

Polynomial random_homogeneous(const Field& f, int nvars, int degree, int terms, Rng& rng) {
  Polynomial p(f, nvars);
  for (int k = 0; k < terms; ++k) {
    Exponent e{};
    for (int i = 0; i < degree; ++i) ++e[rng.uniform(0, nvars - 1)];
    p.add_term(e, FieldElement(f, rng.nonzero(3)));
  }
  return p;
}

std::string first_term(const Tensor& t) {
  if (t.is_zero()) return "0";
  auto terms = t.sorted_terms();
  std::ostringstream os;
  os << terms.front().second.to_string() << "*" << terms.front().first.to_string() << " (" << terms.size()
     << " terms)";
  return os.str();
}

std::string first_term(const IntTensor& t) {
  if (t.is_zero()) return "0";
  auto terms = t.sorted_terms();
  std::ostringstream os;
  os << terms.front().second << "*" << terms.front().first.to_string() << " (" << terms.size() << " terms)";
  return os.str();
}

Word alternating(int first, int second, int length) {
  Word w;
  for (int k = 0; k < length; ++k) w.push_back(k % 2 == 0 ? first : second);
  return w;
}

nlohmann::json coeffs_json(const ReflectionSubmodule& u) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : u.orbit_coeffs) a.push_back(c.to_string());
  return a;
}

bool is_canonical(const ReflectionSubmodule& u) {
  for (const auto& c : u.coeff)
    if (c != FieldElement(u.rs->field(), 1)) return false;
  return true;
}

std::shared_ptr<NicholsAlgebra> algebra(const VerifyContext& ctx) { return NicholsAlgebra::of(*ctx.rs, ctx.options); }

void require_degree(const NicholsAlgebra& B, int n) {
  if (!B.fits_budget(n))
    throw BudgetExceeded("degree " + std::to_string(n) + " needs |V|^n = " + std::to_string(B.dimension()) + "^" +
                         std::to_string(n) + " beyond budget " + std::to_string(B.options().budget));
}

}  // namespace

VerifyContext make_context(const CoxeterSystem& cs, BuildOptions options, std::uint64_t seed) {
  VerifyContext ctx;
  ctx.label = cs.label;
  ctx.rs = generate_root_system(cs);
  ctx.group = std::make_shared<ReflectionGroup>(ReflectionGroup::full(ctx.rs));
  ctx.options = std::move(options);
  ctx.seed = seed;
  return ctx;
}

VerifyContext make_context(const std::string& label, BuildOptions options, std::uint64_t seed) {
  return make_context(coxeter_from_label(label), std::move(options), seed);
}

ReflectionSubmodule random_generic_submodule(std::shared_ptr<const RootSystem> rs, std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<FieldElement> c;
  for (int o = 0; o < rs->orbit_count(); ++o) c.emplace_back(rs->field(), rng.nonzero(5));
  return reflection_submodule(std::move(rs), std::move(c));
}

CheckReport check_nilcoxeter_symmetriser(int m) {
  CheckReport r = start_report("symmetriser", "I2(" + std::to_string(m) + ")");
  r.params["m"] = m;
  Timed timer(r);
  if (m < 2) throw UnsupportedInput("m must be at least 2");
  auto rs = dihedral(m);
  Braiding b = Braiding::from_roots(*rs);
  IntTensor st = symmetrise(b, IntTensor(alternating(0, 1, m), 1));
  IntTensor ts = symmetrise(b, IntTensor(alternating(1, 0, m), 1));
  r.sizes["terms"] = st.size();
  if (st.is_zero()) r.fail("[m]! of the alternating word vanishes");
  if (!(st == ts)) r.fail("difference " + first_term(st - ts));
  return r;
}

CheckReport check_psi_generating(int m) {
  CheckReport r = start_report("paths", "I2(" + std::to_string(m) + ")");
  r.params["m"] = m;
  Timed timer(r);
  if (m < 2) throw UnsupportedInput("m must be at least 2");
  auto rs = dihedral(m);
  Braiding b = Braiding::from_roots(*rs);
  const DihedralSubsystem d = dihedral_subsystems(*rs).at(0);
  DihedralBruhatGraph graph(m);
  nlohmann::json counts = nlohmann::json::array();
  for (int l = 1; l <= m; ++l)
    for (int sign : {+1, -1}) {
      const int first = sign > 0 ? d.gamma[0] : d.gamma[m - 1];
      const int second = sign > 0 ? d.gamma[m - 1] : d.gamma[0];
      IntTensor lhs = symmetrise(b, IntTensor(alternating(first, second, l), 1));
      IntTensor rhs(l);
      auto paths = graph.paths_to(sign * l);
      for (const auto& p : paths) {
        Word w;
        for (int label : p) w.push_back(d.gamma[label]);
        rhs.add(w, 1);
      }
      counts.push_back({{"l", l}, {"sign", sign > 0 ? "+" : "-"}, {"paths", paths.size()}, {"terms", lhs.size()}});
      if (paths.size() != (std::size_t{1} << (l - 1)))
        r.fail("l=" + std::to_string(l) + " sign=" + (sign > 0 ? "+" : "-") + ": " + std::to_string(paths.size()) +
               " paths, expected 2^(l-1)");
      if (!(lhs == rhs))
        r.fail("l=" + std::to_string(l) + " sign=" + (sign > 0 ? "+" : "-") + ": [l]! t(omega) - P = " +
               first_term(lhs - rhs));
    }
  r.sizes["cases"] = counts;
  return r;
}

CheckReport check_dunkl_commutativity(const VerifyContext& ctx, const ReflectionSubmodule& u) {
  CheckReport r = start_report("dunkl", ctx.label);
  r.params["coeffs"] = coeffs_json(u);
  r.params["seed"] = ctx.seed;
  Timed timer(r);
  Braiding b = Braiding::from_roots(*ctx.rs);
  const int n = ctx.rs->rank();
  std::vector<Tensor> mu;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, FieldElement(ctx.rs->field(), 0));
    e[i] = FieldElement(ctx.rs->field(), 1);
    mu.push_back(mu_linear(u, e));
  }
  int pairs = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Tensor x = mu[i] * mu[j] - mu[j] * mu[i];
      Tensor y = x + braid_apply(b, 0, x);
      ++pairs;
      if (!y.is_zero()) r.fail("i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) + ": " + first_term(y));
    }
  r.sizes["pairs"] = pairs;
  return r;
}

CheckReport check_duality_identity(const VerifyContext& ctx, const ReflectionSubmodule& u, bool component_crosscheck) {
  CheckReport r = start_report(is_canonical(u) ? "duality" : "duality_generic", ctx.label);
  r.params["coeffs"] = coeffs_json(u);
  Timed timer(r);
  if (!u.generic) throw UnsupportedInput("duality needs a generic submodule");
  const ReflectionGroup& g = *ctx.group;
  SchubertCalculus sc(ctx.group);
  const auto& classes = sc.schubert_classes();
  Braiding b = Braiding::from_roots(*ctx.rs);
  const MuTable table = mu_table(u);
  const std::size_t N = g.order();
  const Field& F = ctx.rs->field();

  // row w of the transposed matrix: <mu(X_v), nu(u_w)> for every v of the same length
  std::vector<std::vector<FieldElement>> col(N, std::vector<FieldElement>(N, FieldElement(F, 0)));
  std::vector<std::size_t> sym_terms(N);
#pragma omp parallel for schedule(dynamic) num_threads(ctx.options.threads > 0 ? ctx.options.threads : omp_get_max_threads()) if (ctx.options.parallel)
  for (std::size_t w = 0; w < N; ++w) {
    IntTensor sym = symmetrise(b, IntTensor(nu_word(g, w), 1));
    sym_terms[w] = sym.size();
    for (std::size_t v = 0; v < N; ++v) {
      if (g.length(v) != g.length(w)) continue;
      FieldElement s(F, 0);
      for (const auto& [x, c] : sym.terms()) {
        FieldElement phi = mu_coefficient(table, classes[v], x.reversed());
        if (!phi.is_zero()) s += phi * Rational(c);
      }
      col[w][v] = s;
    }
  }
  std::size_t max_terms = 0;
  for (auto t : sym_terms) max_terms = std::max(max_terms, t);
  for (std::size_t v = 0; v < N && r.passed(); ++v)
    for (std::size_t w = 0; w < N; ++w) {
      FieldElement expect(F, 0);
      if (v == w) {
        expect = FieldElement(F, 1);
        for (int s : g.reduced_word(w)) expect *= u.coeff[g.simple_roots()[s]];
      }
      if (col[w][v] != expect) {
        r.fail("v=" + Word(g.reduced_word(v)).to_string() + " w=" + Word(g.reduced_word(w)).to_string() +
               ": pairing " + col[w][v].to_string() + ", expected " + expect.to_string());
        break;
      }
    }
  r.sizes["order"] = N;
  r.sizes["max_symmetriser_terms"] = max_terms;
  r.sizes["rank"] = r.passed() ? N : 0;

  if (component_crosscheck && r.passed()) {
    auto B = algebra(ctx);
    require_degree(*B, g.length(g.longest_index()));
    for (std::size_t v = 0; v < N && r.passed(); ++v) {
      NicholsElement mv = mu_embed(*B, u, classes[v]);
      for (std::size_t w = 0; w < N; ++w) {
        if (g.length(v) != g.length(w)) continue;
        FieldElement x = B->pairing(mv, nu_embed(*B, g, nilcoxeter_basis(g, w, F)));
        if (x != col[w][v]) {
          r.fail("normal-form pairing differs at v=" + Word(g.reduced_word(v)).to_string() +
                 " w=" + Word(g.reduced_word(w)).to_string() + ": " + x.to_string());
          break;
        }
      }
    }
    r.sizes["component_crosscheck"] = true;
  }
  return r;
}

CheckReport check_polynomial_duality(const VerifyContext& ctx) {
  CheckReport r = start_report("polynomial_duality", ctx.label);
  Timed timer(r);
  const ReflectionGroup& g = *ctx.group;
  SchubertCalculus sc(ctx.group);
  const auto& classes = sc.schubert_classes();
  const std::size_t N = g.order();
  const Field& F = ctx.rs->field();
  std::vector<std::string> bad(N);
#pragma omp parallel for schedule(dynamic) num_threads(ctx.options.threads > 0 ? ctx.options.threads : omp_get_max_threads()) if (ctx.options.parallel)
  for (std::size_t v = 0; v < N; ++v) {
    for (std::size_t w = 0; w < N && bad[v].empty(); ++w) {
      if (g.length(v) != g.length(w)) continue;
      FieldElement x = sc.pairing(classes[v], w);
      if (x != FieldElement(F, v == w ? 1 : 0))
        bad[v] = "v=" + Word(g.reduced_word(v)).to_string() + " w=" + Word(g.reduced_word(w)).to_string() + ": " +
                 x.to_string();
    }
  }
  for (const auto& s : bad)
    if (!s.empty()) r.fail(s);
  // classes of different degree pair to zero by grading; also the top class is Reynolds-free
  r.sizes["order"] = N;
  r.sizes["top_degree"] = classes.back().degree();
  return r;
}

CheckReport check_subalgebra_dimension(const VerifyContext& ctx, const ReflectionSubmodule& u) {
  CheckReport r = start_report("subalgebra", ctx.label);
  r.params["coeffs"] = coeffs_json(u);
  Timed timer(r);
  const ReflectionGroup& sub = *u.subgroup;
  SchubertCalculus sc(u.subgroup);
  const auto& classes = sc.schubert_classes();
  auto B = algebra(ctx);
  const int top = sub.length(sub.longest_index());
  require_degree(*B, top);
  std::map<int, std::vector<std::vector<FieldElement>>> rows;
  for (std::size_t w = 0; w < sub.order(); ++w) {
    NicholsElement e = mu_embed(*B, u, classes[w]);
    const int d = sub.length(w);
    auto it = e.parts.find(d);
    rows[d].push_back(it == e.parts.end() ? std::vector<FieldElement>(B->component(d).dimension(), FieldElement(ctx.rs->field(), 0))
                                          : it->second);
  }
  std::size_t total = 0;
  nlohmann::json per_degree = nlohmann::json::array();
  for (auto& [d, m] : rows) {
    const int rk = m.empty() || m.front().empty() ? 0 : field_rank(m);
    per_degree.push_back(rk);
    total += rk;
  }
  r.sizes["subgroup_order"] = sub.order();
  r.sizes["rank_per_degree"] = per_degree;
  r.sizes["dimension"] = total;
  if (total != sub.order())
    r.fail("rank of mu(Schubert classes of W(supp)) is " + std::to_string(total) + ", expected " +
           std::to_string(sub.order()));
  return r;
}

CheckReport check_bracket_relations(const VerifyContext& ctx) {
  CheckReport r = start_report("bracket", ctx.label);
  Timed timer(r);
  Braiding b = Braiding::from_roots(*ctx.rs);
  auto subsystems = dihedral_subsystems(*ctx.rs);
  int quadratic = 0;
  nlohmann::json four = nlohmann::json::array();
  bool expected_fail = false;
  for (const auto& d : subsystems) {
    const int m = d.m;
    for (int k = 0; k < m; ++k) {
      IntTensor t(2);
      for (int i = 0; i < m; ++i) {
        SignedRoot x = dihedral_gamma(d, i), y = dihedral_gamma(d, i + k);
        t.add(Word{x.index, y.index}, x.sign * y.sign);
      }
      IntTensor z = t + braid_apply(b, 0, t);
      ++quadratic;
      if (!z.is_zero())
        r.fail("m=" + std::to_string(m) + " k=" + std::to_string(k) + ": (1+Psi) sum = " + first_term(z));
    }
    // four-term sum [g_l][g_0..g_2l] + [g_0..g_2l][g_l] + [g_l][g_2l..g_0] + [g_2l..g_0][g_l]
    auto four_term = [&](int l) {
      Word up, down;
      for (int i = 0; i <= 2 * l; ++i) up.push_back(d.gamma[i]);
      down = up.reversed();
      const Word g{d.gamma[l]};
      IntTensor t(2 * l + 2);
      t.add(g + up, 1);
      t.add(up + g, 1);
      t.add(g + down, 1);
      t.add(down + g, 1);
      return symmetrise(b, t);
    };
    if (m == 4 || m == 5 || m == 6) {
      IntTensor s1 = four_term(1);
      nlohmann::json entry = {{"m", m}, {"l", 1}, {"vanishes", s1.is_zero()}};
      if (m == 4 && !s1.is_zero()) r.fail("m=4 four-term relation is not in ker [4]!: " + first_term(s1));
      if (m == 6) {
        expected_fail = true;
        entry["expected"] = "nonzero";
        if (s1.is_zero()) r.fail("m=6 four-term relation unexpectedly lies in ker [4]!");
        // l = m/2 - 1 = 2 as well, informational only
        entry["l2_vanishes"] = four_term(2).is_zero();
      }
      four.push_back(entry);
    }
  }
  r.params["expected_fail_relation"] = expected_fail;
  r.sizes["subsystems"] = subsystems.size();
  r.sizes["quadratic_relations"] = quadratic;
  r.sizes["four_term"] = four;
  return r;
}

CheckReport check_mu_kernel(const VerifyContext& ctx, const ReflectionSubmodule& u, int samples) {
  CheckReport r = start_report("mu_kernel", ctx.label);
  r.params["coeffs"] = coeffs_json(u);
  r.params["samples"] = samples;
  r.params["seed"] = ctx.seed;
  Timed timer(r);
  Braiding b = Braiding::from_roots(*ctx.rs);
  SchubertCalculus sub(u.subgroup);
  SchubertCalculus full(ctx.group);
  const int n = ctx.rs->rank();
  const Field& F = ctx.rs->field();
  const int top = u.subgroup->length(u.subgroup->longest_index());
  Rng rng(ctx.seed + 17);
  int invariant_checked = 0, nonzero_checked = 0, in_ideal = 0;
  for (int s = 0; s < samples; ++s) {
    const int d = 1 + s % 4;
    // (a) Reynolds average over W(supp) of a monomial
    Exponent e{};
    for (int i = 0; i < d; ++i) ++e[rng.uniform(0, n - 1)];
    Polynomial mono(F, n);
    mono.add_term(e, FieldElement(F, 1));
    Polynomial f = sub.reynolds(mono);
    Tensor t = symmetrise(b, mu_tensor(u, f, d));
    ++invariant_checked;
    if (!t.is_zero()) r.fail("sample " + std::to_string(s) + ": mu(Reynolds(" + mono.to_string() + ")) = " + first_term(t));
    // (b) random f outside the invariant ideal
    const int d2 = 1 + s % std::min(4, std::max(top, 1));
    Polynomial g = random_homogeneous(F, n, d2, 3, rng);
    auto coords = sub.schubert_coordinates(g);
    bool outside = std::any_of(coords.begin(), coords.end(), [](const FieldElement& x) { return !x.is_zero(); });
    if (!outside) {
      ++in_ideal;
      continue;
    }
    ++nonzero_checked;
    Tensor tg = symmetrise(b, mu_tensor(u, g, d2));
    if (tg.is_zero()) r.fail("sample " + std::to_string(s) + ": mu(" + g.to_string() + ") = 0 with nonzero Schubert coordinates");
  }
  r.sizes["invariants"] = invariant_checked;
  r.sizes["non_invariants"] = nonzero_checked;
  r.sizes["skipped_in_ideal"] = in_ideal;
  return r;
}

CheckReport check_hilbert_total(const VerifyContext& ctx, int max_degree, std::optional<std::size_t> expected_total) {
  CheckReport r = start_report("hilbert", ctx.label);
  r.params["max_degree"] = max_degree;
  if (expected_total) r.params["expected_total"] = *expected_total;
  Timed timer(r);
  auto B = algebra(ctx);
  std::vector<std::size_t> dims;
  for (int n = 0; n <= max_degree; ++n) {
    if (expected_total) require_degree(*B, n);
    else if (!B->fits_budget(n)) break;
    dims.push_back(B->component(n).dimension());
    if (n >= 1 && dims[n] == 0 && dims[n - 1] == 0) break;
  }
  std::size_t total = 0;
  for (auto x : dims) total += x;
  const bool finished = dims.size() >= 2 && dims.back() == 0 && dims[dims.size() - 2] == 0;
  r.sizes["dims"] = dims;
  r.sizes["total"] = total;
  r.sizes["terminated"] = finished;
  if (expected_total) {
    if (!finished) r.fail("series did not terminate by degree " + std::to_string(max_degree));
    else if (total != *expected_total)
      r.fail("total " + std::to_string(total) + ", expected " + std::to_string(*expected_total));
  }
  // Poincare duality of a finite Nichols algebra
  if (finished) {
    std::size_t top = dims.size() - 3;
    for (std::size_t k = 0; k <= top; ++k)
      if (dims[k] != dims[top - k]) r.fail("dims not palindromic at degree " + std::to_string(k));
  }
  return r;
}

CheckReport check_quadratic_agreement(const VerifyContext& ctx, int max_degree) {
  CheckReport r = start_report("quadratic", ctx.label);
  r.params["max_degree"] = max_degree;
  Timed timer(r);
  auto B = algebra(ctx);
  require_degree(*B, max_degree);
  Braiding b = Braiding::from_roots(*ctx.rs);
  auto quad = quadratic_hilbert_series(b, max_degree, ctx.options.budget);
  while (!quad.empty() && quad.back() == 0 && static_cast<int>(quad.size()) <= max_degree) quad.push_back(0);
  std::vector<std::size_t> dims;
  for (int n = 0; n <= max_degree; ++n) dims.push_back(B->component(n).dimension());
  r.sizes["nichols"] = dims;
  r.sizes["quadratic"] = quad;
  for (int n = 0; n <= max_degree; ++n)
    if (n >= static_cast<int>(quad.size()) || quad[n] != dims[n]) {
      r.fail("degree " + std::to_string(n) + ": B " + std::to_string(dims[n]) + " vs B_quad " +
             (n < static_cast<int>(quad.size()) ? std::to_string(quad[n]) : std::string("missing")));
      break;
    }
  return r;
}

CheckReport check_adjunction(const VerifyContext& ctx, int samples) {
  CheckReport r = start_report("adjunction", ctx.label);
  r.params["samples"] = samples;
  r.params["seed"] = ctx.seed;
  Timed timer(r);
  Braiding b = Braiding::from_roots(*ctx.rs);
  const Field& F = ctx.rs->field();
  const int dim = b.dimension();
  Rng rng(ctx.seed + 1);
  for (int s = 0; s < samples; ++s) {
    const int n = 1 + s % 3;
    Tensor phi = random_tensor(F, dim, n + 1, 6, rng);
    Tensor x = random_tensor(F, dim, n, 4, rng);
    const int v = rng.uniform(0, dim - 1);
    FieldElement lhs = pairing_by_symmetriser(b, right_derivative(b, v, phi), x);
    FieldElement rhs = pairing_by_symmetriser(b, phi, Tensor(Word{v}, FieldElement(F, 1)) * x);
    if (lhs != rhs)
      r.fail("sample " + std::to_string(s) + " letter " + std::to_string(v + 1) + ": " + lhs.to_string() + " vs " +
             rhs.to_string());
  }
  return r;
}

CheckReport check_pairing_routes(const VerifyContext& ctx, int samples) {
  CheckReport r = start_report("routes", ctx.label);
  r.params["samples"] = samples;
  r.params["seed"] = ctx.seed;
  Timed timer(r);
  auto B = algebra(ctx);
  const Braiding& b = B->braiding();
  const Field& F = ctx.rs->field();
  Rng rng(ctx.seed + 2);
  int normal_form = 0;
  for (int s = 0; s < samples; ++s) {
    const int n = 1 + s % 4;
    Tensor phi = random_tensor(F, b.dimension(), n, 5, rng);
    Tensor x = random_tensor(F, b.dimension(), n, 5, rng);
    FieldElement a = pairing_by_symmetriser(b, phi, x);
    FieldElement c = pairing_by_derivatives(b, phi, x);
    if (a != c) r.fail("sample " + std::to_string(s) + ": symmetriser " + a.to_string() + " vs derivatives " + c.to_string());
    if (n <= 3 && B->fits_budget(n)) {
      FieldElement nf = B->pairing(B->element(phi), B->element(x));
      ++normal_form;
      if (nf != a) r.fail("sample " + std::to_string(s) + ": normal form " + nf.to_string() + " vs " + a.to_string());
    }
  }
  r.sizes["normal_form_comparisons"] = normal_form;
  return r;
}

CheckReport check_leibniz(const VerifyContext& ctx, int samples) {
  CheckReport r = start_report("leibniz", ctx.label);
  r.params["samples"] = samples;
  r.params["seed"] = ctx.seed;
  Timed timer(r);
  auto B = algebra(ctx);
  const Braiding& b = B->braiding();
  const Field& F = ctx.rs->field();
  const int dim = b.dimension();
  SchubertCalculus sc(ctx.group);
  Rng rng(ctx.seed + 3);
  for (int s = 0; s < samples; ++s) {
    const int p = 1 + s % 2, q = 1 + (s / 2) % 2;
    const int a = rng.uniform(0, dim - 1);
    const GroupElement refl = GroupElement::reflection(*ctx.rs, a);
    // (xy) d_a = x (y d_a) + (x d_a)(s_a y), in T(V) and in B_W
    Tensor x = random_tensor(F, dim, p, 3, rng), y = random_tensor(F, dim, q, 3, rng);
    Tensor lhs = right_derivative(b, a, x * y);
    Tensor rhs = x * right_derivative(b, a, y) + right_derivative(b, a, x) * act_on_tensor(refl, y);
    if (!(lhs == rhs)) r.fail("tensor sample " + std::to_string(s) + ": " + first_term(lhs - rhs));
    if (B->fits_budget(p + q)) {
      NicholsElement X = B->element(x), Y = B->element(y);
      NicholsElement L = B->derivative(B->multiply(X, Y), a);
      NicholsElement R = B->add(B->multiply(X, B->derivative(Y, a)),
                                B->multiply(B->derivative(X, a), B->element(act_on_tensor(refl, B->representative(Y, q)))));
      if (!B->equal(L, R)) r.fail("quotient sample " + std::to_string(s) + " letter " + std::to_string(a + 1));
    }
    // d_a(fg) = (d_a f) g + (s_a f)(d_a g)
    Polynomial f = random_homogeneous(F, ctx.rs->rank(), p, 3, rng);
    Polynomial g = random_homogeneous(F, ctx.rs->rank(), q + 1, 3, rng);
    Polynomial pl = sc.divided_difference(a, f * g);
    Polynomial pr = sc.divided_difference(a, f) * g + sc.reflect(a, f) * sc.divided_difference(a, g);
    if (!(pl == pr)) r.fail("polynomial sample " + std::to_string(s) + ": " + (pl - pr).to_string());
  }
  return r;
}

CheckReport check_kernel_derivatives(const VerifyContext& ctx, int samples) {
  CheckReport r = start_report("kernel_derivatives", ctx.label);
  r.params["samples"] = samples;
  r.params["seed"] = ctx.seed;
  Timed timer(r);
  auto B = algebra(ctx);
  const Braiding& b = B->braiding();
  const Field& F = ctx.rs->field();
  Rng rng(ctx.seed + 4);
  int nonzero_kernel = 0;
  for (int s = 0; s < samples; ++s) {
    const int n = 2 + s % 2;
    require_degree(*B, n);
    Tensor x = random_tensor(F, b.dimension(), n, 6, rng);
    // x minus its normal-form representative lies in ker [n]!
    Tensor k = x - B->representative(B->element(x), n);
    if (!k.is_zero()) ++nonzero_kernel;
    if (!in_symmetriser_kernel(b, k)) r.fail("sample " + std::to_string(s) + ": x - NF(x) not in the kernel");
    for (int a = 0; a < b.dimension(); ++a) {
      Tensor d = right_derivative(b, a, k);
      if (!B->element(d).is_zero()) {
        r.fail("sample " + std::to_string(s) + " letter " + std::to_string(a + 1) + ": derivative " + first_term(d));
        break;
      }
    }
  }
  r.sizes["nonzero_kernel_samples"] = nonzero_kernel;
  return r;
}

CheckReport check_lemma56(const VerifyContext& ctx, const ReflectionSubmodule& u, int samples) {
  CheckReport r = start_report("lemma56", ctx.label);
  r.params["coeffs"] = coeffs_json(u);
  r.params["samples"] = samples;
  r.params["seed"] = ctx.seed;
  Timed timer(r);
  Braiding b = Braiding::from_roots(*ctx.rs);
  SchubertCalculus sc(ctx.group);
  const Field& F = ctx.rs->field();
  Rng rng(ctx.seed + 5);
  for (int s = 0; s < samples; ++s) {
    const int d = 1 + s % 3;
    Polynomial f = random_homogeneous(F, ctx.rs->rank(), d, 3, rng);
    Tensor mf = mu_tensor(u, f, d);
    for (int a = 0; a < ctx.rs->size(); ++a) {
      Tensor lhs = right_derivative(b, a, mf);
      Tensor rhs = mu_tensor(u, sc.divided_difference(a, f), d - 1);
      rhs.scale(u.coeff[a]);
      Tensor diff = symmetrise(b, lhs - rhs);
      if (!diff.is_zero()) {
        r.fail("sample " + std::to_string(s) + " f=" + f.to_string() + " root " + std::to_string(a + 1) + ": " +
               first_term(diff));
        break;
      }
    }
  }
  return r;
}

CheckReport check_theta(const VerifyContext& ctx, const ReflectionSubmodule& u, int samples) {
  CheckReport r = start_report("theta", ctx.label);
  r.params["coeffs"] = coeffs_json(u);
  r.params["samples"] = samples;
  r.params["seed"] = ctx.seed;
  Timed timer(r);
  if (!u.generic) throw UnsupportedInput("theta needs nonzero orbit coefficients");
  auto canon = canonical_submodule(ctx.rs);
  const Field& F = ctx.rs->field();
  Rng rng(ctx.seed + 6);
  auto B = algebra(ctx);
  for (int s = 0; s < samples; ++s) {
    const int d = 1 + s % 3;
    Polynomial f = random_homogeneous(F, ctx.rs->rank(), d, 3, rng);
    Tensor lhs = mu_tensor(u, f, d);
    Tensor rhs = theta(u, mu_tensor(canon, f, d));
    if (!(lhs == rhs)) r.fail("sample " + std::to_string(s) + ": mu_c(f) - theta(mu_1(f)) = " + first_term(lhs - rhs));
    // theta is multiplicative in B_W
    const int p = 1 + s % 2;
    if (B->fits_budget(2 * p)) {
      NicholsElement x = B->element(random_tensor(F, B->dimension(), p, 3, rng));
      NicholsElement y = B->element(random_tensor(F, B->dimension(), p, 3, rng));
      NicholsElement l = theta(*B, u, B->multiply(x, y));
      NicholsElement m = B->multiply(theta(*B, u, x), theta(*B, u, y));
      if (!B->equal(l, m)) r.fail("sample " + std::to_string(s) + ": theta(xy) != theta(x) theta(y)");
    }
  }
  return r;
}

CheckReport check_flip_oracles(int dim, int max_degree) {
  CheckReport r = start_report("flip_oracles", "V" + std::to_string(dim));
  r.params["dim"] = dim;
  r.params["max_degree"] = max_degree;
  Timed timer(r);
  const Field F = Field::for_conductor(1);
  auto binom = [](int n, int k) -> std::size_t {
    if (k < 0 || k > n) return 0;
    std::size_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
  };
  NicholsAlgebra sym(Braiding::flip(dim), F);
  NicholsAlgebra ext(Braiding::minus_flip(dim), F);
  std::vector<std::size_t> sd, ed;
  for (int n = 0; n <= max_degree; ++n) {
    sd.push_back(sym.component(n).dimension());
    ed.push_back(ext.component(n).dimension());
    if (sd[n] != binom(n + dim - 1, n)) r.fail("symmetric degree " + std::to_string(n) + ": " + std::to_string(sd[n]));
    if (ed[n] != binom(dim, n)) r.fail("exterior degree " + std::to_string(n) + ": " + std::to_string(ed[n]));
  }
  r.sizes["symmetric"] = sd;
  r.sizes["exterior"] = ed;
  return r;
}

std::vector<std::string> check_names() {
  return {"adjunction", "bracket",  "duality",  "duality_generic", "dunkl",   "flip_oracles", "hilbert",
          "kernel_derivatives", "leibniz", "lemma56", "mu_kernel", "paths", "polynomial_duality", "quadratic",
          "routes", "subalgebra", "symmetriser", "theta"};
}

namespace {

int dihedral_m(const VerifyContext& ctx, const nlohmann::json& params) {
  if (params.contains("m")) return params["m"].get<int>();
  if (ctx.rs && ctx.rs->rank() == 2) return ctx.rs->coxeter().m[0][1];
  throw UnsupportedInput("this check needs --m or a rank-2 group");
}

ReflectionSubmodule submodule_from(const VerifyContext& ctx, const nlohmann::json& params, bool generic_default) {
  if (params.contains("coeffs")) {
    std::vector<FieldElement> c;
    for (const auto& x : params["coeffs"]) c.emplace_back(ctx.rs->field(), x.get<long>());
    return reflection_submodule(ctx.rs, std::move(c));
  }
  return generic_default ? random_generic_submodule(ctx.rs, ctx.seed) : canonical_submodule(ctx.rs);
}

std::optional<std::size_t> known_total(const std::string& label) {
  if (label == "A1") return 2;
  if (label == "A2") return 12;
  if (label == "B2" || label == "C2") return 64;
  return std::nullopt;
}

int param_int(const nlohmann::json& params, const char* key, int fallback) {
  return params.contains(key) ? params[key].get<int>() : fallback;
}

}  // namespace

CheckReport run_check(const VerifyContext& ctx, const std::string& name, const nlohmann::json& params) {
  const int samples = param_int(params, "samples", 6);
  if (name == "symmetriser") return check_nilcoxeter_symmetriser(dihedral_m(ctx, params));
  if (name == "paths") return check_psi_generating(dihedral_m(ctx, params));
  if (name == "flip_oracles") return check_flip_oracles(param_int(params, "dim", 3), param_int(params, "max_degree", 4));
  if (!ctx.rs) throw UnsupportedInput("check '" + name + "' needs a group");
  if (name == "dunkl") return check_dunkl_commutativity(ctx, submodule_from(ctx, params, true));
  if (name == "duality") {
    auto u = submodule_from(ctx, params, false);
    return check_duality_identity(ctx, u, params.value("crosscheck", ctx.group->order() <= 8));
  }
  if (name == "duality_generic") return check_duality_identity(ctx, submodule_from(ctx, params, true), false);
  if (name == "polynomial_duality") return check_polynomial_duality(ctx);
  if (name == "subalgebra") return check_subalgebra_dimension(ctx, submodule_from(ctx, params, true));
  if (name == "bracket") return check_bracket_relations(ctx);
  if (name == "mu_kernel") return check_mu_kernel(ctx, submodule_from(ctx, params, true), samples);
  if (name == "hilbert") {
    std::optional<std::size_t> expected = known_total(ctx.label);
    if (params.contains("expected")) expected = params["expected"].get<std::size_t>();
    return check_hilbert_total(ctx, param_int(params, "max_degree", 30), expected);
  }
  if (name == "quadratic") return check_quadratic_agreement(ctx, param_int(params, "max_degree", 4));
  if (name == "adjunction") return check_adjunction(ctx, samples);
  if (name == "routes") return check_pairing_routes(ctx, samples);
  if (name == "leibniz") return check_leibniz(ctx, samples);
  if (name == "kernel_derivatives") return check_kernel_derivatives(ctx, samples);
  if (name == "lemma56") return check_lemma56(ctx, submodule_from(ctx, params, true), samples);
  if (name == "theta") return check_theta(ctx, submodule_from(ctx, params, true), samples);
  throw UnsupportedInput("unknown check '" + name + "'");
}

std::vector<CheckReport> run_suite(const VerifyContext& ctx) {
  std::vector<std::function<CheckReport()>> jobs;
  auto B = algebra(ctx);
  const ReflectionGroup& g = *ctx.group;
  const int top = g.length(g.longest_index());
  const auto generic = random_generic_submodule(ctx.rs, ctx.seed);
  const auto canon = canonical_submodule(ctx.rs);

  if (ctx.rs->rank() == 2) {
    const int m = ctx.rs->coxeter().m[0][1];
    jobs.push_back([m] { return check_nilcoxeter_symmetriser(m); });
    jobs.push_back([m] { return check_psi_generating(m); });
  }
  jobs.push_back([&] { return check_dunkl_commutativity(ctx, generic); });
  // tensor-level duality symmetrises words of length up to l(w0)
  if (top <= 7) {
    jobs.push_back([&] { return check_duality_identity(ctx, canon, g.order() <= 8); });
    jobs.push_back([&] { return check_duality_identity(ctx, generic, false); });
  }
  jobs.push_back([&] { return check_polynomial_duality(ctx); });
  // the subalgebra check needs B^n up to l(w0); past |V|^n = 2^17 that takes minutes
  // to hours (I2(7) degree 6 alone is about ten), so the suite leaves it to `verify`
  std::uint64_t tensor_size = 1;
  for (int n = 0; n < top && tensor_size <= (1ULL << 17); ++n) tensor_size *= static_cast<std::uint64_t>(B->dimension());
  if (B->fits_budget(top) && tensor_size <= (1ULL << 17)) {
    jobs.push_back([&] { return check_subalgebra_dimension(ctx, generic); });
    // zero out one orbit at a time when there are several
    if (ctx.rs->orbit_count() > 1)
      for (int o = 0; o < ctx.rs->orbit_count(); ++o)
        jobs.push_back([&, o] {
          std::vector<FieldElement> c(ctx.rs->orbit_count(), FieldElement(ctx.rs->field(), 1));
          c[o] = FieldElement(ctx.rs->field(), 0);
          auto r = check_subalgebra_dimension(ctx, reflection_submodule(ctx.rs, c));
          return r;
        });
  }
  if (ctx.rs->rank() >= 2) jobs.push_back([&] { return check_bracket_relations(ctx); });
  jobs.push_back([&] { return check_mu_kernel(ctx, generic, 4); });
  if (auto total = known_total(ctx.label)) jobs.push_back([&, total] { return check_hilbert_total(ctx, 30, total); });
  // B_W is quadratic only in the simply-laced case; B2 already needs a quartic relation
  bool simply_laced = true;
  for (const auto& row : ctx.rs->coxeter().m)
    for (int x : row) simply_laced = simply_laced && x <= 3;
  int qdeg = 0;
  while (qdeg < 5 && B->fits_budget(qdeg + 1)) ++qdeg;
  if (simply_laced) jobs.push_back([&, qdeg] { return check_quadratic_agreement(ctx, qdeg); });
  jobs.push_back([&] { return check_adjunction(ctx, 6); });
  jobs.push_back([&] { return check_pairing_routes(ctx, 6); });
  jobs.push_back([&] { return check_leibniz(ctx, 4); });
  jobs.push_back([&] { return check_kernel_derivatives(ctx, 4); });
  jobs.push_back([&] { return check_lemma56(ctx, generic, 3); });
  jobs.push_back([&] { return check_theta(ctx, generic, 3); });

  std::vector<CheckReport> out(jobs.size());
#pragma omp parallel for schedule(dynamic) num_threads(ctx.options.threads > 0 ? ctx.options.threads : omp_get_max_threads()) if (ctx.options.parallel)
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    try {
      out[k] = jobs[k]();
    } catch (const std::exception& e) {
      out[k].group = ctx.label;
      out[k].check = "job" + std::to_string(k);
      out[k].fail(std::string("error: ") + e.what());
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.check, a.params) < std::tie(b.check, b.params);
  });
  return out;
}

}  // namespace nichols
