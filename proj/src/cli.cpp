#include "nichols/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "nichols/errors.hpp"
#include "nichols/report.hpp"
#include "nichols/verify.hpp"

namespace nichols {

namespace {

struct CliConfig {
  std::string group;
  std::string matrix_file;
  int max_degree = -1;  // -1: until the series terminates
  std::string format = "pretty";
  std::string cache_dir;
  bool no_cache = false;
  int threads = 0;
  std::uint64_t budget = 1ULL << 20;
  std::uint64_t seed = 0;
};

CoxeterSystem resolve_group(const CliConfig& c, const std::string& positional) {
  if (!c.matrix_file.empty()) return read_coxeter_file(c.matrix_file);
  const std::string label = !positional.empty() ? positional : c.group;
  if (label.empty()) throw UnsupportedInput("a group is required (--group or --matrix-file)");
  return coxeter_from_label(label);
}

BuildOptions build_options(const CliConfig& c) {
  BuildOptions o;
  o.budget = c.budget;
  o.threads = c.threads;
  o.parallel = c.threads != 1;
  if (!c.no_cache) o.cache_dir = c.cache_dir.empty() ? cache::default_dir() : std::filesystem::path(c.cache_dir);
  return o;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string root_text(const RootSystem& rs, int i) {
  std::string s = "(";
  for (int k = 0; k < rs.rank(); ++k) s += (k ? ", " : "") + rs.root(i)[k].to_string();
  return s + ")";
}

int cmd_group(const CliConfig& c, const std::string& g, std::ostream& out) {
  CoxeterSystem cs = resolve_group(c, g);
  auto rs = generate_root_system(cs);
  auto group = ReflectionGroup::full(rs);
  std::vector<std::size_t> ex;
  for (int e : group.exponents()) ex.push_back(static_cast<std::size_t>(e));
  Table t;
  t.header = {"property", "value"};
  t.rows = {{"group", cs.label},
            {"rank", std::to_string(cs.rank)},
            {"order", std::to_string(group.order())},
            {"exponents", join(ex)},
            {"positive_roots", std::to_string(rs->size())},
            {"orbits", std::to_string(rs->orbit_count())},
            {"longest_length", std::to_string(group.length(group.longest_index()))},
            {"field_conductor", std::to_string(rs->field().conductor())}};
  print_table(out, t, parse_format(c.format));
  return 0;
}

int cmd_roots(const CliConfig& c, const std::string& g, std::ostream& out) {
  auto rs = generate_root_system(resolve_group(c, g));
  Table t;
  t.header = {"index", "root", "height", "orbit"};
  t.meta["group"] = rs->label();
  for (int i = 0; i < rs->size(); ++i)
    t.rows.push_back({std::to_string(i + 1), root_text(*rs, i), rs->height(i).to_string(),
                      std::to_string(rs->orbit(i) + 1)});
  print_table(out, t, parse_format(c.format));
  return 0;
}

int cmd_hilbert(const CliConfig& c, const std::string& g, bool quadratic, std::ostream& out, std::ostream& err) {
  auto rs = generate_root_system(resolve_group(c, g));
  NicholsAlgebra B(Braiding::from_roots(*rs), rs->field(), build_options(c), rs->coxeter().canonical_text());
  const int limit = c.max_degree >= 0 ? c.max_degree : kMaxDegree;
  std::vector<std::size_t> dims;
  std::string budget_note;
  for (int n = 0; n <= limit; ++n) {
    if (!B.fits_budget(n)) {
      budget_note = "degree " + std::to_string(n) + " needs " + std::to_string(B.dimension()) + "^" +
                    std::to_string(n) + " words, beyond budget " + std::to_string(c.budget);
      break;
    }
    dims.push_back(B.component(n).dimension());
    if (c.max_degree < 0 && n >= 1 && dims[n] == 0 && dims[n - 1] == 0) break;
  }
  std::vector<std::size_t> quad;
  if (quadratic && !dims.empty())
    quad = quadratic_hilbert_series(B.braiding(), static_cast<int>(dims.size()) - 1, c.budget);
  while (!quad.empty() && quad.back() == 0 && quad.size() < dims.size()) quad.push_back(0);
  Table t;
  t.header = {"degree", "dim"};
  if (quadratic) {
    t.header.push_back("quadratic");
    t.header.push_back("match");
  }
  std::size_t total = 0;
  bool all_match = true;
  for (std::size_t n = 0; n < dims.size(); ++n) {
    total += dims[n];
    std::vector<std::string> row{std::to_string(n), std::to_string(dims[n])};
    if (quadratic) {
      const bool ok = n < quad.size() && quad[n] == dims[n];
      all_match = all_match && ok;
      row.push_back(n < quad.size() ? std::to_string(quad[n]) : "-");
      row.push_back(ok ? "true" : "false");
    }
    t.rows.push_back(row);
  }
  t.meta["group"] = rs->label();
  t.meta["total"] = total;
  print_table(out, t, parse_format(c.format));
  if (!budget_note.empty()) {
    err << "budget exceeded: " << budget_note << "\n";
    return 3;
  }
  return quadratic && !all_match ? 1 : 0;
}

int finish_reports(const std::vector<CheckReport>& reports, const CliConfig& c, std::ostream& out) {
  print_reports(out, reports, parse_format(c.format));
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

int cmd_verify(const CliConfig& c, const std::string& check, const std::string& g, const nlohmann::json& params,
               std::ostream& out) {
  const auto names = check_names();
  if (std::find(names.begin(), names.end(), check) == names.end())
    throw UnsupportedInput("unknown check '" + check + "'");
  VerifyContext ctx;
  const bool standalone = check == "symmetriser" || check == "paths" || check == "flip_oracles";
  if (!(standalone && g.empty() && c.group.empty() && c.matrix_file.empty()))
    ctx = make_context(resolve_group(c, g), build_options(c), c.seed);
  ctx.seed = c.seed;
  return finish_reports({run_check(ctx, check, params)}, c, out);
}

int cmd_pairing(const CliConfig& c, const std::string& g, const std::string& phi_text, const std::string& x_text,
                std::ostream& out) {
  auto rs = generate_root_system(resolve_group(c, g));
  NicholsAlgebra B(Braiding::from_roots(*rs), rs->field(), build_options(c), rs->coxeter().canonical_text());
  const Field& F = rs->field();
  Tensor phi(parse_word(phi_text, rs->size()), FieldElement(F, 1));
  Tensor x(parse_word(x_text, rs->size()), FieldElement(F, 1));
  Table t;
  t.header = {"route", "value"};
  t.meta["phi"] = phi_text;
  t.meta["x"] = x_text;
  t.rows.push_back({"symmetriser", pairing_by_symmetriser(B.braiding(), phi, x).to_string()});
  t.rows.push_back({"derivatives", pairing_by_derivatives(B.braiding(), phi, x).to_string()});
  if (B.fits_budget(phi.degree()))
    t.rows.push_back({"normal_form", B.pairing(B.element(phi), B.element(x)).to_string()});
  print_table(out, t, parse_format(c.format));
  return 0;
}

int cmd_schubert(const CliConfig& c, const std::string& g, std::ostream& out) {
  auto rs = generate_root_system(resolve_group(c, g));
  auto group = std::make_shared<ReflectionGroup>(ReflectionGroup::full(rs));
  SchubertCalculus sc(group);
  const auto& classes = sc.schubert_classes();
  Table t;
  t.header = {"element", "reduced_word", "length", "polynomial"};
  t.meta["group"] = rs->label();
  t.meta["variables"] = "a1..an are the simple roots";
  for (std::size_t w = 0; w < group->order(); ++w) {
    const auto& word = group->reduced_word(w);
    t.rows.push_back({std::to_string(w), word.empty() ? "e" : Word(word).to_string(), std::to_string(group->length(w)),
                      classes[w].to_string()});
  }
  print_table(out, t, parse_format(c.format));
  return 0;
}

int cmd_cache(const CliConfig& c, const std::string& action, std::ostream& out) {
  const std::filesystem::path dir = c.cache_dir.empty() ? cache::default_dir() : std::filesystem::path(c.cache_dir);
  if (action == "list") {
    Table t;
    t.header = {"file", "bytes"};
    t.meta["dir"] = dir.string();
    for (const auto& p : cache::list(dir))
      t.rows.push_back({p.filename().string(), std::to_string(std::filesystem::file_size(p))});
    print_table(out, t, parse_format(c.format));
    return 0;
  }
  if (action == "clear") {
    out << "removed " << cache::clear(dir) << " files from " << dir.string() << "\n";
    return 0;
  }
  if (action == "path") {
    out << dir.string() << "\n";
    return 0;
  }
  throw UnsupportedInput("cache action must be list, clear or path");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nichols-Woronowicz algebras of finite Coxeter groups", "nichols"};
  app.fallthrough();
  app.require_subcommand(1);
  CliConfig c;
  app.add_option("--group", c.group, "group label, e.g. A3, B2, G2, H3, I2:7");
  app.add_option("--matrix-file", c.matrix_file, "Coxeter matrix file")->check(CLI::ExistingFile);
  app.add_option("--max-degree", c.max_degree, "highest degree to compute");
  app.add_option("--format", c.format, "pretty, json or tsv")->check(CLI::IsMember({"pretty", "json", "tsv"}));
  app.add_option("--cache-dir", c.cache_dir, "component cache directory (default $NICHOLS_CACHE_DIR)");
  app.add_flag("--no-cache", c.no_cache, "do not read or write the component cache");
  app.add_option("--threads", c.threads, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", c.budget, "largest |V|^n a component may span");
  app.add_option("--seed", c.seed, "seed for random inputs");

  std::string group_pos;
  auto* group = app.add_subcommand("group", "order, exponents, roots and orbits");
  group->add_option("group", group_pos);
  auto* roots = app.add_subcommand("roots", "list positive roots");
  roots->add_option("group", group_pos);
  bool quadratic = false;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of B_W");
  hilbert->add_option("group", group_pos);
  hilbert->add_flag("--quadratic", quadratic, "also compute the quadratic cover");

  std::string check;
  int m = 0, samples = -1, dim = -1;
  std::vector<long> coeffs;
  long expected = -1;
  bool crosscheck = false;
  auto* verify = app.add_subcommand("verify", "run one named check");
  verify->add_option("check", check, "check name")->required();
  verify->add_option("group", group_pos);
  verify->add_option("--m", m, "dihedral order for symmetriser and paths");
  verify->add_option("--samples", samples, "random samples");
  verify->add_option("--coeffs", coeffs, "orbit coefficients")->delimiter(',');
  verify->add_option("--expected", expected, "expected Hilbert total");
  verify->add_option("--dim", dim, "dimension for flip_oracles");
  verify->add_flag("--crosscheck", crosscheck, "repeat duality in normal forms");
  auto* suite = app.add_subcommand("suite", "every applicable check");
  suite->add_option("group", group_pos);
  std::string phi_text, x_text;
  auto* pairing = app.add_subcommand("pairing", "pair two words in B_W");
  pairing->add_option("group", group_pos);
  pairing->add_option("--phi", phi_text, "1-based word, e.g. 1,2")->required();
  pairing->add_option("--x", x_text, "1-based word")->required();
  auto* schubert = app.add_subcommand("schubert", "Schubert classes");
  schubert->add_option("group", group_pos);
  std::string action = "list";
  auto* cachecmd = app.add_subcommand("cache", "manage the component cache");
  cachecmd->add_option("action", action, "list, clear or path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*group) return cmd_group(c, group_pos, out);
    if (*roots) return cmd_roots(c, group_pos, out);
    if (*hilbert) return cmd_hilbert(c, group_pos, quadratic, out, err);
    if (*verify) {
      nlohmann::json params = nlohmann::json::object();
      if (m > 0) params["m"] = m;
      if (samples > 0) params["samples"] = samples;
      if (dim > 0) params["dim"] = dim;
      if (c.max_degree >= 0) params["max_degree"] = c.max_degree;
      if (!coeffs.empty()) params["coeffs"] = coeffs;
      if (expected >= 0) params["expected"] = expected;
      if (crosscheck) params["crosscheck"] = true;
      return cmd_verify(c, check, group_pos, params, out);
    }
    if (*suite) {
      auto ctx = make_context(resolve_group(c, group_pos), build_options(c), c.seed);
      return finish_reports(run_suite(ctx), c, out);
    }
    if (*pairing) return cmd_pairing(c, group_pos, phi_text, x_text, out);
    if (*schubert) return cmd_schubert(c, group_pos, out);
    if (*cachecmd) return cmd_cache(c, action, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace nichols
