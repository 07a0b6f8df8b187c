#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nichols/coxeter.hpp"
#include "nichols/nichols.hpp"
#include "nichols/report.hpp"
#include "nichols/schubert.hpp"

namespace nichols {

// Everything a check needs about one group; cheap to copy.
struct VerifyContext {
  std::string label;
  std::shared_ptr<const RootSystem> rs;
  std::shared_ptr<const ReflectionGroup> group;
  BuildOptions options;
  std::uint64_t seed = 0;
};

VerifyContext make_context(const CoxeterSystem& cs, BuildOptions options = {}, std::uint64_t seed = 0);
VerifyContext make_context(const std::string& label, BuildOptions options = {}, std::uint64_t seed = 0);

// Nonzero orbit coefficients in [-5, 5] drawn from the seed.
ReflectionSubmodule random_generic_submodule(std::shared_ptr<const RootSystem> rs, std::uint64_t seed);

CheckReport check_nilcoxeter_symmetriser(int m);
CheckReport check_psi_generating(int m);
CheckReport check_dunkl_commutativity(const VerifyContext& ctx, const ReflectionSubmodule& u);
// <mu(X_v), nu(u_w)> against delta_{vw} times the product of c over the reduced word
// (the identity matrix when c = 1).  component_crosscheck repeats it in B_W normal forms.
CheckReport check_duality_identity(const VerifyContext& ctx, const ReflectionSubmodule& u,
                                   bool component_crosscheck = false);
// sw_nw pairing of Schubert classes against u_w on the polynomial side only.
CheckReport check_polynomial_duality(const VerifyContext& ctx);
CheckReport check_subalgebra_dimension(const VerifyContext& ctx, const ReflectionSubmodule& u);
CheckReport check_bracket_relations(const VerifyContext& ctx);
CheckReport check_mu_kernel(const VerifyContext& ctx, const ReflectionSubmodule& u, int samples);
CheckReport check_hilbert_total(const VerifyContext& ctx, int max_degree, std::optional<std::size_t> expected_total);
CheckReport check_quadratic_agreement(const VerifyContext& ctx, int max_degree);

// Property suites.
CheckReport check_adjunction(const VerifyContext& ctx, int samples);
CheckReport check_pairing_routes(const VerifyContext& ctx, int samples);
CheckReport check_leibniz(const VerifyContext& ctx, int samples);
CheckReport check_kernel_derivatives(const VerifyContext& ctx, int samples);
CheckReport check_lemma56(const VerifyContext& ctx, const ReflectionSubmodule& u, int samples);
CheckReport check_theta(const VerifyContext& ctx, const ReflectionSubmodule& u, int samples);
CheckReport check_flip_oracles(int dim, int max_degree);

std::vector<std::string> check_names();
// Dispatch used by the CLI.  Parameters: m, samples, max_degree, coeffs (orbit list), expected.
CheckReport run_check(const VerifyContext& ctx, const std::string& name, const nlohmann::json& params);
// Every applicable check with default parameters, sorted by check name.
std::vector<CheckReport> run_suite(const VerifyContext& ctx);

}  // namespace nichols
