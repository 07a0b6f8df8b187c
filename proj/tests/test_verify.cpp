#include <doctest.h>

#include "nichols/errors.hpp"
#include "nichols/verify.hpp"

using namespace nichols;

TEST_CASE("dihedral checks") {
  for (int m = 2; m <= 6; ++m) {
    CHECK(check_nilcoxeter_symmetriser(m).passed());
    CHECK(check_psi_generating(m).passed());
  }
  auto r = check_psi_generating(3);
  // [PAPER] m=3, l=2: 2 paths
  bool seen = false;
  for (const auto& c : r.sizes["cases"])
    if (c["l"] == 2) {
      CHECK(c["paths"] == 2);
      CHECK(c["terms"] == 2);
      seen = true;
    }
  CHECK(seen);
  CHECK_THROWS_AS(check_nilcoxeter_symmetriser(1), UnsupportedInput);
}

TEST_CASE("group checks on A2 and B2") {
  for (const char* label : {"A2", "B2"}) {
    auto ctx = make_context(label);
    auto generic = random_generic_submodule(ctx.rs, 0);
    CHECK(check_dunkl_commutativity(ctx, generic).passed());
    auto d = check_duality_identity(ctx, canonical_submodule(ctx.rs), true);
    CHECK(d.passed());
    CHECK(d.check == "duality");
    CHECK(check_duality_identity(ctx, generic).passed());
    CHECK(check_polynomial_duality(ctx).passed());
    CHECK(check_mu_kernel(ctx, generic, 4).passed());
    CHECK(check_bracket_relations(ctx).passed());
  }
}

TEST_CASE("subalgebra dimensions") {
  auto ctx = make_context("B2");
  const Field& f = ctx.rs->field();
  // [DERIVED] long-orbit c = 0 gives |W(supp)| = 4; generic gives 8
  int long_orbit = ctx.rs->orbit(1);
  std::vector<FieldElement> c(2, FieldElement(f, 1));
  c[long_orbit] = FieldElement(f, 0);
  auto r = check_subalgebra_dimension(ctx, reflection_submodule(ctx.rs, c));
  CHECK(r.passed());
  CHECK(r.sizes["dimension"] == 4);
  auto g = check_subalgebra_dimension(ctx, random_generic_submodule(ctx.rs, 1));
  CHECK(g.sizes["dimension"] == 8);
  auto a2 = make_context("A2");
  CHECK(check_subalgebra_dimension(a2, canonical_submodule(a2.rs)).sizes["dimension"] == 6);
}

TEST_CASE("bracket relations: G2 four-term relation is expected to fail") {
  auto r = check_bracket_relations(make_context("G2"));
  CHECK(r.passed());
  CHECK(r.params["expected_fail_relation"] == true);
  CHECK(r.sizes["four_term"][0]["vanishes"] == false);
  auto b3 = check_bracket_relations(make_context("B3"));
  CHECK(b3.passed());
}

TEST_CASE("duality rejects a non-generic submodule") {
  auto ctx = make_context("B2");
  const Field& f = ctx.rs->field();
  CHECK_THROWS_AS(check_duality_identity(ctx, reflection_submodule(ctx.rs, {FieldElement(f, 0), FieldElement(f, 1)})),
                  UnsupportedInput);
}

TEST_CASE("property suites") {
  auto ctx = make_context("B2");
  auto generic = random_generic_submodule(ctx.rs, 3);
  CHECK(check_adjunction(ctx, 6).passed());
  CHECK(check_pairing_routes(ctx, 6).passed());
  CHECK(check_leibniz(ctx, 4).passed());
  CHECK(check_kernel_derivatives(ctx, 4).passed());
  CHECK(check_lemma56(ctx, generic, 3).passed());
  CHECK(check_theta(ctx, generic, 3).passed());
  CHECK(check_flip_oracles(3, 4).passed());
}

TEST_CASE("Hilbert checks") {
  auto ctx = make_context("A2");
  CHECK(check_hilbert_total(ctx, 10, 12).passed());
  CHECK_FALSE(check_hilbert_total(ctx, 10, 13).passed());
  auto bad = check_hilbert_total(ctx, 10, 13);
  CHECK_FALSE(bad.witness.empty());
  CHECK(check_quadratic_agreement(ctx, 5).passed());
  // B2 needs a quartic relation, so the quadratic cover differs: a real failure with a witness
  auto b2 = check_quadratic_agreement(make_context("B2"), 4);
  CHECK_FALSE(b2.passed());
  CHECK(b2.witness.find("degree 4") != std::string::npos);
}

TEST_CASE("reports round-trip through json") {
  auto r = check_bracket_relations(make_context("G2"));
  auto back = report_from_json(nlohmann::json::parse(to_json(r).dump()));
  CHECK(back == r);
  CheckReport f;
  f.check = "x";
  f.group = "A1";
  f.fail("witness text");
  CHECK(report_from_json(to_json(f)) == f);
  CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"check":"x"})")), ParseError);
}

TEST_CASE("suite and dispatch") {
  auto ctx = make_context("A2");
  auto reports = run_suite(ctx);
  CHECK(reports.size() >= 15);
  for (const auto& r : reports) {
    CAPTURE(r.check);
    CHECK(r.passed());
  }
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; }));
  CHECK_THROWS_AS(run_check(ctx, "nonsense", {}), UnsupportedInput);
  CHECK(run_check(VerifyContext{}, "paths", {{"m", 4}}).passed());
  // determinism: same seed, same reports apart from timings
  auto again = run_suite(ctx);
  REQUIRE(again.size() == reports.size());
  for (std::size_t k = 0; k < reports.size(); ++k) {
    CHECK(again[k].params == reports[k].params);
    CHECK(again[k].sizes == reports[k].sizes);
  }
}
