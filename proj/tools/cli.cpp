#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "nilharm/acceptance.hpp"
#include "nilharm/algebra_json.hpp"
#include "nilharm/catalog.hpp"
#include "nilharm/composition.hpp"
#include "nilharm/config.hpp"
#include "nilharm/error.hpp"
#include "nilharm/inversion.hpp"
#include "nilharm/orbits.hpp"
#include "nilharm/pfaffian.hpp"

namespace nilharm::cli {

namespace {

constexpr const char* kFamilies =
    "heisenberg:<n>:C|H|O, free2step:<n>:R|C, octdouble, abelian:<n>, "
    "catalog:<table>:<row>[:<param>...], file:<algebra.json>";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

int parse_positive(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (...) {
    used = 0;
  }
  if (used != s.size() || s.empty() || v <= 0) throw InvalidInput(what + " must be a positive integer, got '" + s + "'");
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (...) {
    used = 0;
  }
  if (used != s.size() || s.empty() || !std::isfinite(v)) throw InvalidInput(what + ": not a number: '" + s + "'");
  return v;
}

std::vector<double> parse_doubles(const std::string& s, const std::string& what) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_double(part, what));
  return out;
}

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt(std::complex<double> z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

std::string vec(const Eigen::VectorXd& x) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) s += (i ? ", " : "") + fmt(x(i));
  return s + ")";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::vector<std::string> labels_of(const LieAlgebraData& alg, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(alg.labels()[i]);
  return out;
}

void dump_into(const nlohmann::json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(it.key()).dump() + ": ";
        dump_into(it.value(), out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_into(j[i], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

// Settings shared by every subcommand.
struct Globals {
  bool json = false;
  std::string config_path;
  std::vector<std::string> overrides;

  Config config() const {
    Config c = Config::defaults();
    if (!config_path.empty()) {
      c = Config::load(config_path);
    } else if (std::filesystem::exists(NILHARM_DEFAULT_CONFIG)) {
      c = Config::load(NILHARM_DEFAULT_CONFIG);
    }
    for (const auto& kv : overrides) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw InvalidInput("--set expects key=value, got '" + kv + "'");
      c.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    return c;
  }
};

CommandResult make(Status s, nlohmann::json payload, std::string text) {
  CommandResult r;
  r.status = s;
  r.payload = std::move(payload);
  r.human_text = std::move(text);
  return r;
}

nlohmann::json entry_json(const CatalogEntry& e) {
  return {{"table", e.table_id}, {"row", e.row},        {"K", e.group_K},
          {"v", e.v_desc},       {"z", e.z_desc},       {"algebra", e.algebra_desc},
          {"constructible", e.constructible}, {"notes", e.notes}, {"parameters", e.parameters}};
}

std::string entry_line(const CatalogEntry& e) {
  std::string s = "table " + e.table_id + " row " + std::to_string(e.row) + ": K = " + e.group_K + ", v = " + e.v_desc +
                  ", z = " + e.z_desc;
  if (!e.algebra_desc.empty()) s += ", n = " + e.algebra_desc;
  s += e.constructible ? " [constructible" + (e.parameters.empty() ? "" : ": " + join(e.parameters, ", ")) + "]"
                       : " [bracket not specified]";
  if (!e.notes.empty()) s += " (" + e.notes + ")";
  return s;
}

CommandResult cmd_catalog_list(const std::optional<std::string>& table, bool constructible) {
  CatalogFilter f;
  f.table_id = table;
  f.constructible_only = constructible;
  nlohmann::json arr = nlohmann::json::array();
  std::string text;
  for (const auto& e : list_entries(f)) {
    arr.push_back(entry_json(e));
    text += entry_line(e) + "\n";
  }
  return make(Status::ok, {{"entries", arr}}, text);
}

CommandResult cmd_catalog_show(const std::string& table, int row, const std::vector<int>& params) {
  CatalogEntry e = get_entry(table, row);
  nlohmann::json j = {{"entry", entry_json(e)}};
  std::string text = entry_line(e) + "\n";
  if (e.constructible && e.parameters.size() == params.size()) {
    LieAlgebraData alg = construct(e, params);
    j["algebra"] = algebra_to_json(alg);
    text += "dim " + std::to_string(alg.dim()) + ", center " + join(labels_of(alg, alg.center_indices()), " ") + "\n";
  }
  return make(Status::ok, j, text);
}

CommandResult cmd_catalog_build(const std::string& table, int row, const std::vector<int>& params) {
  LieAlgebraData alg = construct(get_entry(table, row), params);
  nlohmann::json j = algebra_to_json(alg);
  return make(Status::ok, {{"algebra", j}}, dump(j) + "\n");
}

CommandResult cmd_check(const std::string& name) {
  LieAlgebraData alg = parse_algebra(name);
  Rational jac = jacobi_defect(alg);
  int cls = nilpotency_class(alg);
  RationalMatrix z = center(alg);
  bool derived_central = row_span_contains(z, derived_subalgebra(alg));
  bool split = is_two_step_split(alg);
  bool designated_is_center = split && rank(z) == alg.center_indices().size() &&
                              row_span_contains(z, coordinate_span(alg.dim(), alg.center_indices()));
  bool ok = sgn(jac) == 0 && cls == 2 && derived_central && split;
  nlohmann::json j = {{"algebra", name},
                      {"dim", alg.dim()},
                      {"jacobi_defect", to_fraction_string(jac)},
                      {"nilpotency_class", cls},
                      {"derived_in_center", derived_central},
                      {"two_step_split", split},
                      {"designated_center_is_center", designated_is_center},
                      {"center_dim", z.rows()}};
  std::string text = name + ": dim " + std::to_string(alg.dim()) + "\n" +
                     "jacobi defect: " + to_fraction_string(jac) + "\n" +
                     "nilpotency class: " + std::to_string(cls) + "\n" +
                     "derived algebra in center: " + (derived_central ? "true" : "false") + "\n" +
                     "designated split is 2-step: " + (split ? "true" : "false") + "\n" +
                     "center dim: " + std::to_string(z.rows()) + "\n";
  return make(ok ? Status::ok : Status::check_failed, j, text);
}

CommandResult cmd_pfaffian(const std::string& name, const std::string& at) {
  LieAlgebraData alg = parse_algebra(name);
  Polynomial pf = pf_polynomial(alg);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < alg.center_indices().size(); ++k) names.push_back("z" + std::to_string(k + 1));
  nlohmann::json vars = nlohmann::json::object();
  std::string legend;
  for (std::size_t k = 0; k < names.size(); ++k) {
    vars[names[k]] = alg.labels()[alg.center_indices()[k]];
    legend += "  " + names[k] + " = (" + alg.labels()[alg.center_indices()[k]] + ")*\n";
  }
  nlohmann::json j = {{"algebra", name}, {"pf", pf.to_string(names)}, {"degree", pf.total_degree()}, {"variables", vars}};
  std::string text = "Pf = " + pf.to_string(names) + "\n" + legend;
  if (!at.empty()) {
    RationalVector lam;
    for (const auto& part : split(at, ',')) lam.push_back(parse_rational(part));
    if (lam.size() != names.size())
      throw InvalidInput("--at needs " + std::to_string(names.size()) + " coordinates");
    Rational v = pfaffian(b_matrix(alg, std::span<const Rational>(lam)));
    j["value"] = to_fraction_string(v);
    text += "Pf(lambda) = " + to_fraction_string(v) + "\n";
  }
  return make(Status::ok, j, text);
}

CommandResult cmd_classify(const std::string& name) {
  LieAlgebraData alg = parse_algebra(name);
  auto si = is_square_integrable(alg);
  nlohmann::json j = {{"algebra", name}, {"square_integrable", si.square_integrable}, {"pf", si.pf.to_string()}};
  std::string text = std::string("square integrable: ") + (si.square_integrable ? "true" : "false");
  if (si.witness) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& c : *si.witness) w.push_back(to_fraction_string(c));
    j["witness"] = w;
  }
  if (!si.square_integrable) {
    auto search = find_codim_split(alg);
    bool found = search.split.has_value() && search.split->verification.all();
    j["stepwise_split_found"] = found;
    j["candidates_tried"] = search.candidates_tried;
    text += std::string("; stepwise split found: ") + (found ? "yes" : "no");
    if (found) {
      j["l2"] = labels_of(alg, search.split->l2_indices);
      text += " (l2 = " + join(labels_of(alg, search.split->l2_indices), ", ") + ")";
    }
  }
  return make(Status::ok, j, text + "\n");
}

nlohmann::json flags_json(const StepwiseFlags& f) {
  return {{"l1_is_ideal", f.l1_is_ideal},
          {"direct_sum", f.direct_sum},
          {"l2_abelian_subalgebra", f.l2_abelian_subalgebra},
          {"l1_square_integrable", f.l1_square_integrable}};
}

CommandResult cmd_decompose(const std::string& name, bool do_verify) {
  StepwiseDecomposition dec = parse_case(name);
  const auto& alg = dec.algebra;
  nlohmann::json j = {{"case", name},
                      {"algebra", algebra_to_json(alg)},
                      {"l1_indices", dec.l1_indices},
                      {"l2_indices", dec.l2_indices},
                      {"l1_labels", labels_of(alg, dec.l1_indices)},
                      {"l2_labels", labels_of(alg, dec.l2_indices)}};
  std::string text = "l1 = " + join(labels_of(alg, dec.l1_indices), " ") + "\nl2 = " +
                     join(labels_of(alg, dec.l2_indices), " ") + "\n";
  Status s = Status::ok;
  if (do_verify) {
    auto f = verify(dec);
    j["verification"] = flags_json(f);
    j["l1_pf"] = l1_pf_polynomial(dec).to_string();
    text += std::string("l1 is an ideal: ") + (f.l1_is_ideal ? "true" : "false") + "\n" +
            "direct sum: " + (f.direct_sum ? "true" : "false") + "\n" +
            "l2 abelian subalgebra: " + (f.l2_abelian_subalgebra ? "true" : "false") + "\n" +
            "l1 square integrable: " + (f.l1_square_integrable ? "true" : "false") + "\n" +
            "Pf on l1/z = " + l1_pf_polynomial(dec).to_string() + "\n";
    if (!f.all()) s = Status::check_failed;
  }
  return make(s, j, text);
}

CommandResult cmd_orbit(const std::string& name, const std::string& lambda_text) {
  auto parts = split(name, ':');
  ExceptionalCase c = parse_exceptional_case(parts[0]);
  auto lam = parse_doubles(lambda_text, "--lambda");
  auto rep = orbit_representative(c, lam);
  nlohmann::json j = {{"case", to_string(c)},
                      {"invariants", rep.invariants},
                      {"kernel_dim", rep.kernel_dim},
                      {"principal", "not decided"}};
  std::string inv;
  for (double v : rep.invariants) inv += (inv.empty() ? "" : ", ") + fmt(v);
  std::string text = "invariants: (" + inv + ")\nkernel dim: " + std::to_string(rep.kernel_dim) + "\n";
  if (c == ExceptionalCase::Case6) {
    j["last_phase"] = rep.last_phase;
    text += "last phase: " + fmt(rep.last_phase) + "\n";
  }
  if (c != ExceptionalCase::Case3) {
    int n = 0;
    std::size_t m = c == ExceptionalCase::Case6 ? lam.size() / 2 : lam.size();
    while (static_cast<std::size_t>(n * (n - 1) / 2) < m) ++n;
    auto nf = normal_form_functional(rep, n);
    j["normal_form"] = nf;
    std::string s;
    for (double v : nf) s += (s.empty() ? "" : ", ") + fmt(v);
    text += "normal form: (" + s + ")\n";
  }
  text += "principal: not decided\n";
  return make(Status::ok, j, text);
}

GaussianTestFunction parse_gaussian(const std::string& spec, Eigen::Index n) {
  auto at = spec.find('@');
  std::string head = spec.substr(0, at);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
  if (at != std::string::npos) {
    auto b = parse_doubles(spec.substr(at + 1), "gaussian mean");
    if (static_cast<Eigen::Index>(b.size()) != n)
      throw InvalidInput("gaussian mean needs " + std::to_string(n) + " entries");
    for (Eigen::Index i = 0; i < n; ++i) mean(i) = b[static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Ones(n);
  if (head != "gaussian") {
    if (head.rfind("gaussian:", 0) != 0) throw InvalidInput("--function must be gaussian[:q | :q1,...,qn][@b1,...,bn]");
    auto q = parse_doubles(head.substr(9), "gaussian precision");
    if (q.size() == 1) {
      diag.setConstant(q[0]);
    } else if (static_cast<Eigen::Index>(q.size()) == n) {
      for (Eigen::Index i = 0; i < n; ++i) diag(i) = q[static_cast<std::size_t>(i)];
    } else {
      throw InvalidInput("gaussian precision needs 1 or " + std::to_string(n) + " entries");
    }
  }
  return GaussianTestFunction::centered(diag.asDiagonal().toDenseMatrix(), mean);
}

std::vector<GroupPoint> parse_points(const std::string& spec, Eigen::Index n) {
  std::vector<GroupPoint> out;
  if (spec == "origin") {
    out.push_back(GroupPoint::Zero(n));
  } else if (spec.rfind("random:", 0) == 0) {
    int k = parse_positive(spec.substr(7), "random point count");
    std::mt19937_64 rng(seed_from_environment());
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int p = 0; p < k; ++p) {
      GroupPoint x(n);
      for (Eigen::Index i = 0; i < n; ++i) x(i) = u(rng);
      out.push_back(x);
    }
  } else {
    for (const auto& part : split(spec, ';')) {
      if (part == "origin") {
        out.push_back(GroupPoint::Zero(n));
        continue;
      }
      auto v = parse_doubles(part, "point");
      if (static_cast<Eigen::Index>(v.size()) != n) throw InvalidInput("points need " + std::to_string(n) + " coordinates");
      out.push_back(Eigen::Map<Eigen::VectorXd>(v.data(), n));
    }
  }
  return out;
}

CommandResult cmd_invert(const Globals& g, const std::string& target, const std::string& function,
                         const std::string& points, std::optional<double> tol, std::optional<int> nodes,
                         double accept, bool timing) {
  Config cfg = g.config();
  if (tol) cfg.set("quadrature.rel_tol", fmt(*tol));
  QuadratureSettings outer = cfg.quadrature();
  QuadratureSettings inner = cfg.inner_quadrature();
  if (tol) inner.rel_tol = *tol;
  if (nodes) {
    if (*nodes < 1) throw InvalidInput("--nodes must be positive");
    outer.initial_nodes = outer.max_nodes_per_axis = *nodes;
  }
  auto t0 = std::chrono::steady_clock::now();
  InversionReport report;
  report.algebra = target;
  report.settings = outer;
  std::string text;
  if (target.rfind("case", 0) == 0) {
    StepwiseContext ctx(parse_case(target));
    const auto n = static_cast<Eigen::Index>(ctx.decomposition().algebra.dim());
    auto f = parse_gaussian(function, n);
    report.formula = "stepwise";
    report.inner_settings = inner;
    report.prefactor = ctx.prefactor();
    for (const auto& x : parse_points(points, n)) report.records.push_back(invert_stepwise(ctx, f, x, outer, inner));
    text = "stepwise inversion on " + target + " (prefactor d!2^d (2pi)^{-dim l2/2} = " + fmt(report.prefactor) +
           "; f Gaussian in split coordinates)\n";
  } else {
    PlancherelData data(parse_algebra(target));
    const auto n = static_cast<Eigen::Index>(data.algebra().dim());
    auto f = parse_gaussian(function, n);
    report.formula = "flat";
    report.prefactor = data.constant();
    for (const auto& x : parse_points(points, n)) report.records.push_back(invert_flat(data, f, x, outer));
    text = "flat inversion on " + target + " (c = d!2^d = " + fmt(report.prefactor) + ")\n";
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = true;
  for (const auto& r : report.records) {
    ok = ok && r.rel_error <= accept;
    text += "x = " + vec(r.x) + ": f(x) = " + fmt(r.exact) + ", reconstructed = " + fmt(r.reconstructed) +
            ", rel error " + fmt(r.rel_error) + ", " + std::to_string(r.evaluations) + " evaluations" +
            (r.converged ? "" : " (not converged)") + "\n";
  }
  nlohmann::json j = to_json(report);
  if (!timing) j.erase("wall_seconds");  // identical invocations give identical JSON
  text += "wall time " + fmt(report.wall_seconds) + " s\n";
  j["function"] = function;
  j["accept_rel_error"] = accept;
  return make(ok ? Status::ok : Status::check_failed, j, text);
}

CommandResult cmd_octonion_mul(const std::string& a, const std::string& b) {
  auto parse = [](const std::string& s) -> std::size_t {
    if (s.size() != 2 || s[0] != 'e' || s[1] < '0' || s[1] > '7') throw InvalidInput("octonion basis element must be e0..e7, got '" + s + "'");
    return static_cast<std::size_t>(s[1] - '0');
  };
  auto p = multiply(CompositionElement::unit(CompositionKind::O, parse(a)),
                    CompositionElement::unit(CompositionKind::O, parse(b)));
  std::string r = to_string(p);
  return make(Status::ok, {{"left", a}, {"right", b}, {"product", r}}, r + "\n");
}

CommandResult cmd_octonion_table() {
  nlohmann::json rows = nlohmann::json::array();
  std::string text;
  for (std::size_t i = 0; i < 8; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < 8; ++j) {
      auto p = to_string(multiply(CompositionElement::unit(CompositionKind::O, i),
                                  CompositionElement::unit(CompositionKind::O, j)));
      row.push_back(p);
      std::string cell = p;
      cell.resize(4, ' ');
      text += cell;
    }
    rows.push_back(row);
    text += "\n";
  }
  return make(Status::ok, {{"table", rows}}, text);
}

CommandResult cmd_selftest(std::optional<int> only) {
  std::uint64_t seed = seed_from_environment();
  std::vector<CriterionResult> results;
  if (only)
    results.push_back(run_criterion(*only, seed));
  else
    results = run_acceptance(seed);
  nlohmann::json arr = nlohmann::json::array();
  std::string text = "selftest, seed " + std::to_string(seed) + "\n";
  bool ok = true;
  for (const auto& r : results) {
    auto jr = to_json(r);
    jr.erase("seconds");  // keeps the JSON reproducible
    arr.push_back(jr);
    text += format_line(r) + "\n";
    ok = ok && r.passed;
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  text += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
  return make(ok ? Status::ok : Status::check_failed, {{"seed", seed}, {"criteria", arr}, {"passed", passed}}, text);
}

}  // namespace

int exit_code(Status s) {
  switch (s) {
    case Status::ok:
      return 0;
    case Status::check_failed:
      return 1;
    case Status::error:
      return 2;
  }
  return 2;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::ok:
      return "ok";
    case Status::check_failed:
      return "check_failed";
    case Status::error:
      return "error";
  }
  return "error";
}

std::string dump(const nlohmann::json& j) {
  std::string out;
  dump_into(j, out, 0);
  return out;
}

LieAlgebraData parse_algebra(const std::string& name) {
  auto parts = split(name, ':');
  const std::string& fam = parts[0];
  auto bad = [&]() { return InvalidInput("unknown algebra '" + name + "'; available: " + kFamilies); };
  if (fam == "heisenberg" && parts.size() == 3) {
    int n = parse_positive(parts[1], "heisenberg n");
    if (parts[2].size() != 1 || std::string("CHO").find(parts[2]) == std::string::npos) throw bad();
    return heisenberg(n, parse_composition_kind(parts[2]));
  }
  if (fam == "free2step" && parts.size() == 3) {
    int n = parse_positive(parts[1], "free2step n");
    if (parts[2] == "R") return free_two_step(n, ScalarField::R);
    if (parts[2] == "C") return free_two_step(n, ScalarField::C);
    throw bad();
  }
  if (fam == "octdouble" && parts.size() == 1) return octonion_double();
  if (fam == "abelian" && parts.size() == 2) return abelian(parse_positive(parts[1], "abelian n"));
  if (fam == "catalog" && parts.size() >= 3) {
    std::vector<int> params;
    for (std::size_t i = 3; i < parts.size(); ++i) params.push_back(parse_positive(parts[i], "catalog parameter"));
    return construct(get_entry(parts[1], parse_positive(parts[2], "catalog row")), params);
  }
  if (fam == "file" && parts.size() >= 2) {
    std::string path = name.substr(5);
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(path + ": " + e.what());
    }
    return algebra_from_json(doc);
  }
  throw bad();
}

StepwiseDecomposition parse_case(const std::string& name) {
  auto parts = split(name, ':');
  ExceptionalCase c = parse_exceptional_case(parts[0]);
  if (parts.size() > 2 || (c == ExceptionalCase::Case3 && parts.size() != 1))
    throw InvalidInput("case names are case1[:n], case6[:n], case3");
  int n = parts.size() == 2 ? parse_positive(parts[1], "case n") : 3;
  return decompose(c, n);
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"nilharm: 2-step nilpotent Lie algebras, Pfaffians and Fourier inversion", "nilharm"};
  app.footer(std::string("Algebra names: ") + kFamilies + "\nCase names: case1[:n], case6[:n], case3 (n odd, default 3)\n" +
             "Exit codes: 0 ok, 1 check failed, 2 error. NILHARM_SEED fixes random choices (default 0).");
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print the JSON payload");
  app.add_option("--config", g.config_path, "key = value config file (default: the repository config)");
  app.add_option("--set", g.overrides, "Override a config key, key=value (repeatable)");

  std::function<CommandResult()> action;

  auto* catalog = app.add_subcommand("catalog", "Query Tables 2.1 / 2.2");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List rows");
  std::string list_table;
  bool constructible = false;
  cat_list->add_option("--table", list_table, "2.1 or 2.2");
  cat_list->add_flag("--constructible", constructible, "Only rows with a constructor");
  cat_list->callback([&] {
    action = [&] {
      return cmd_catalog_list(list_table.empty() ? std::nullopt : std::optional<std::string>(list_table), constructible);
    };
  });
  std::string show_table;
  int show_row = 0;
  std::vector<int> show_params;
  auto* cat_show = catalog->add_subcommand("show", "Show one row (and its algebra when parameters suffice)");
  cat_show->add_option("table", show_table)->required();
  cat_show->add_option("row", show_row)->required();
  cat_show->add_option("params", show_params);
  cat_show->callback([&] { action = [&] { return cmd_catalog_show(show_table, show_row, show_params); }; });
  auto* cat_build = catalog->add_subcommand("build", "Structure constants of a constructible row as JSON");
  cat_build->add_option("table", show_table)->required();
  cat_build->add_option("row", show_row)->required();
  cat_build->add_option("params", show_params);
  cat_build->callback([&] { action = [&] { return cmd_catalog_build(show_table, show_row, show_params); }; });

  std::string algebra_name;
  auto* check = app.add_subcommand("check", "Jacobi identity, nilpotency class, 2-step split");
  check->add_option("algebra", algebra_name)->required();
  check->callback([&] { action = [&] { return cmd_check(algebra_name); }; });

  std::string at;
  auto* pfaff = app.add_subcommand("pfaffian", "Pf(lambda) as a polynomial on z*");
  pfaff->add_option("algebra", algebra_name)->required();
  pfaff->add_option("--at", at, "Exact value at lambda = l1,l2,... (rationals)");
  pfaff->callback([&] { action = [&] { return cmd_pfaffian(algebra_name, at); }; });

  auto* classify = app.add_subcommand("classify", "Square integrability and stepwise split search");
  classify->add_option("algebra", algebra_name)->required();
  classify->callback([&] { action = [&] { return cmd_classify(algebra_name); }; });

  std::string case_name, lambda_text;
  auto* orbit = app.add_subcommand("orbit", "Orbit representative of a functional");
  orbit->add_option("case", case_name, "case1, case6 or case3")->required();
  orbit->add_option("--lambda", lambda_text, "Comma-separated coordinates on the center")->required();
  orbit->callback([&] { action = [&] { return cmd_orbit(case_name, lambda_text); }; });

  bool do_verify = false;
  auto* decomp = app.add_subcommand("decompose", "Stepwise split of an exceptional case");
  decomp->add_option("case", case_name)->required();
  decomp->add_flag("--verify", do_verify, "Check the four structural flags");
  decomp->callback([&] { action = [&] { return cmd_decompose(case_name, do_verify); }; });

  std::string target, function = "gaussian", points = "origin";
  std::optional<double> tol;
  std::optional<int> nodes;
  double accept = 1e-3;
  bool timing = false;
  auto* invert = app.add_subcommand("invert", "Numerical Fourier inversion (flat for algebras, stepwise for cases)");
  invert->add_option("target", target, "Algebra name or case name")->required();
  invert->add_option("--function", function, "gaussian[:q | :q1,...,qn][@b1,...,bn]");
  invert->add_option("--points", points, "origin, random:k, or x1,...,xn;y1,...");
  invert->add_option("--tol", tol, "Quadrature relative tolerance");
  invert->add_option("--nodes", nodes, "Fixed per-axis node count on the outer layer");
  invert->add_option("--accept", accept, "Relative error above which the run reports check_failed");
  invert->add_flag("--timing", timing, "Include wall time in the JSON report");
  invert->callback([&] { action = [&] { return cmd_invert(g, target, function, points, tol, nodes, accept, timing); }; });

  auto* octo = app.add_subcommand("octonion", "Octonion basis products");
  octo->require_subcommand(1);
  std::string ea, eb;
  auto* mul = octo->add_subcommand("mul", "Product of two basis elements");
  mul->add_option("left", ea)->required();
  mul->add_option("right", eb)->required();
  mul->callback([&] { action = [&] { return cmd_octonion_mul(ea, eb); }; });
  auto* table = octo->add_subcommand("table", "Full 8x8 table");
  table->callback([&] { action = [&] { return cmd_octonion_table(); }; });

  std::optional<int> only;
  auto* selftest = app.add_subcommand("selftest", "Run acceptance criteria 1-9");
  selftest->add_option("--criterion", only, "Run a single criterion");
  selftest->callback([&] { action = [&] { return cmd_selftest(only); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  CommandResult result;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return make(Status::ok, {{"help", app.help()}}, app.help());
  } catch (const CLI::CallForAllHelp&) {
    return make(Status::ok, {{"help", app.help()}}, app.help());
  } catch (const CLI::ParseError& e) {
    result = make(Status::error, {{"status", "error"}, {"error", e.what()}},
                  std::string("error: ") + e.what() + "\n\n" + app.help());
    result.json = g.json;
    return result;
  }
  try {
    Config cfg = g.config();  // validates --config / --set early
    result = action();
    result.payload["config"] = cfg.to_json();
  } catch (const std::exception& e) {
    result = make(Status::error, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n");
  }
  result.payload["status"] = to_string(result.status);
  result.json = g.json;
  return result;
}

}  // namespace nilharm::cli
