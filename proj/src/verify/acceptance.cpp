#include "nilharm/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "nilharm/catalog.hpp"
#include "nilharm/composition.hpp"
#include "nilharm/error.hpp"
#include "nilharm/inversion.hpp"
#include "nilharm/oracles.hpp"
#include "nilharm/orbits.hpp"
#include "nilharm/pfaffian.hpp"
#include "nilharm/stepwise.hpp"

namespace nilharm {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::string fixed(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << v;
  return os.str();
}

// Collects failures; the criterion passes iff none were recorded.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  std::string summary(const std::string& on_pass) const {
    if (failures.empty()) return on_pass;
    std::string s = std::to_string(failures.size()) + " failure(s): " + failures.front();
    for (std::size_t i = 1; i < std::min<std::size_t>(failures.size(), 4); ++i) s += "; " + failures[i];
    return s;
  }
};

// 1: octonion rules against the seven triples, listed here independently.
CriterionResult octonion_table(std::uint64_t) {
  static constexpr int triples[7][3] = {{1, 2, 3}, {3, 5, 6}, {6, 7, 1}, {1, 4, 5},
                                        {3, 4, 7}, {6, 4, 2}, {2, 5, 7}};
  const auto O = CompositionKind::O;
  auto e = [&](int i) { return CompositionElement::unit(O, static_cast<std::size_t>(i)); };
  Checker ck;
  int products = 0;
  for (const auto& t : triples)
    for (int r = 0; r < 3; ++r) {
      int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
      ck.expect(multiply(e(a), e(b)) == e(c), "e" + std::to_string(a) + "e" + std::to_string(b) + " != e" +
                                                  std::to_string(c));
      ++products;
    }
  for (int j = 1; j <= 7; ++j) ck.expect(multiply(e(j), e(j)) == -e(0), "e" + std::to_string(j) + "^2 != -e0");
  for (int j = 0; j <= 7; ++j) {
    ck.expect(multiply(e(0), e(j)) == e(j), "e0 e" + std::to_string(j));
    ck.expect(multiply(e(j), e(0)) == e(j), "e" + std::to_string(j) + " e0");
  }
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      if (i != j)
        ck.expect(multiply(e(i), e(j)) == -multiply(e(j), e(i)),
                  "e" + std::to_string(i) + ", e" + std::to_string(j) + " do not anticommute");
  return {1, "octonion table", ck.failures.empty() && products == 21,
          ck.summary("21 triple products, 7 squares, 16 identity laws, 42 anticommutations exact"), 0.0};
}

struct NamedAlgebra {
  std::string name;
  LieAlgebraData alg;
};

std::vector<NamedAlgebra> structural_family() {
  std::vector<NamedAlgebra> out;
  for (int n = 1; n <= 4; ++n) out.push_back({"heisenberg:" + std::to_string(n) + ":C", heisenberg(n, CompositionKind::C)});
  for (int n = 1; n <= 3; ++n) out.push_back({"heisenberg:" + std::to_string(n) + ":H", heisenberg(n, CompositionKind::H)});
  out.push_back({"heisenberg:1:O", heisenberg(1, CompositionKind::O)});
  for (int n = 2; n <= 5; ++n) {
    out.push_back({"free2step:" + std::to_string(n) + ":R", free_two_step(n, ScalarField::R)});
    out.push_back({"free2step:" + std::to_string(n) + ":C", free_two_step(n, ScalarField::C)});
  }
  out.push_back({"octdouble", octonion_double()});
  return out;
}

// 2: Jacobi, class 2, [n, n] inside the center.
CriterionResult structural_suite(std::uint64_t) {
  auto t0 = Clock::now();
  Checker ck;
  auto algs = structural_family();
  for (const auto& [name, alg] : algs) {
    ck.expect(sgn(jacobi_defect(alg)) == 0, name + ": Jacobi fails");
    ck.expect(nilpotency_class(alg) == 2, name + ": class != 2");
    ck.expect(row_span_contains(center(alg), derived_subalgebra(alg)), name + ": [n,n] not central");
  }
  double dt = since(t0);
  ck.expect(dt < 10.0, "took " + fixed(dt) + " s (limit 10 s)");
  return {2, "structural suite", ck.failures.empty(),
          ck.summary(std::to_string(algs.size()) + " algebras exact"), dt};
}

// lambda_a on the center of l1 with each listed label set to a polynomial.
std::vector<Polynomial> functional_on(const LieAlgebraData& l1, const std::vector<std::pair<std::string, Polynomial>>& parts,
                                      std::size_t nvars) {
  std::vector<Polynomial> lam(l1.center_indices().size(), Polynomial(nvars));
  for (const auto& [label, value] : parts) {
    std::size_t idx = l1.index_of(label);
    bool found = false;
    for (std::size_t c = 0; c < l1.center_indices().size(); ++c)
      if (l1.center_indices()[c] == idx) {
        lam[c] = value;
        found = true;
      }
    if (!found) throw InvalidInput(label + " is not central in l1");
  }
  return lam;
}

std::string wedge(int i, int j) { return "u" + std::to_string(i) + "∧u" + std::to_string(j); }

// 3: Pfaffian closed forms at lambda_a on l1 / z, symbolic in the a's.
CriterionResult pfaffian_closed_forms(std::uint64_t) {
  Checker ck;
  std::vector<std::string> passed;
  for (int m = 1; m <= 3; ++m) {
    auto dec = decompose(ExceptionalCase::Case1, 2 * m + 1);
    auto l1 = l1_algebra(dec);
    std::vector<std::pair<std::string, Polynomial>> parts;
    Polynomial expected = Polynomial::constant(m, 1);
    for (int k = 1; k <= m; ++k) {
      auto a = Polynomial::variable(m, k - 1);
      parts.emplace_back(wedge(2 * k - 1, 2 * k), a);
      expected = expected * a;
    }
    auto lam = functional_on(l1, parts, m);
    Polynomial pf = pfaffian(b_matrix(l1, std::span<const Polynomial>(lam)));
    bool ok = pf == expected || pf == -expected;
    ck.expect(ok, "case1 m=" + std::to_string(m) + ": Pf = " + pf.to_string());
    if (ok) passed.push_back("case1 m=" + std::to_string(m));
  }
  for (int m = 1; m <= 2; ++m) {
    auto dec = decompose(ExceptionalCase::Case6, 2 * m + 1);
    auto l1 = l1_algebra(dec);
    const std::size_t nv = 2 * static_cast<std::size_t>(m);
    std::vector<std::pair<std::string, Polynomial>> parts;
    Polynomial expected = Polynomial::constant(nv, 1);
    for (int k = 1; k <= m; ++k) {
      auto re = Polynomial::variable(nv, 2 * (k - 1));
      auto im = Polynomial::variable(nv, 2 * (k - 1) + 1);
      parts.emplace_back(wedge(2 * k - 1, 2 * k), re);
      parts.emplace_back("i(" + wedge(2 * k - 1, 2 * k) + ")", im);
      expected = expected * (re * re + im * im);
    }
    auto lam = functional_on(l1, parts, nv);
    Polynomial pf = pfaffian(b_matrix(l1, std::span<const Polynomial>(lam)));
    bool ok = pf == expected || pf == -expected;
    ck.expect(ok, "case6 m=" + std::to_string(m) + ": Pf = " + pf.to_string());
    if (ok) passed.push_back("case6 m=" + std::to_string(m));
  }
  {
    auto dec = decompose(ExceptionalCase::Case3);
    auto l1 = l1_algebra(dec);
    auto a1 = Polynomial::variable(3, 0), a2 = Polynomial::variable(3, 1), a3 = Polynomial::variable(3, 2);
    auto lam = functional_on(l1, {{"(e3,0)", a1}, {"(e6,0)", a2}, {"(e2,0)", a3}}, 3);
    Polynomial pf = pfaffian(b_matrix(l1, std::span<const Polynomial>(lam)));
    Polynomial expected = a1 * a2 * a3;
    bool ok = pf == expected || pf == -expected;
    ck.expect(ok, "case3: Pf(lambda_a) = " + pf.to_string({"a1", "a2", "a3"}) + ", expected +-a1*a2*a3");
    if (ok) passed.push_back("case3");
  }
  std::string all;
  for (const auto& p : passed) all += (all.empty() ? "" : ", ") + p;
  std::string detail = "exact: " + all;
  if (!ck.failures.empty()) detail += "; " + ck.summary("");
  return {3, "pfaffian closed forms", ck.failures.empty(), detail, 0.0};
}

// 4: square integrability and stepwise splits on the constructible families.
CriterionResult classification(std::uint64_t) {
  auto t0 = Clock::now();
  Checker ck;
  int checked = 0;
  for (const auto& [name, alg] : structural_family()) {
    bool odd_free = name.rfind("free2step:", 0) == 0 && (name[10] - '0') % 2 == 1;
    bool expect_si = name != "octdouble" && !odd_free;
    bool si = is_square_integrable(alg).square_integrable;
    ck.expect(si == expect_si, name + ": square integrable = " + (si ? "true" : "false"));
    bool split_found = false;
    try {
      auto search = find_codim_split(alg);
      split_found = search.split && search.split->verification.all();
    } catch (const NotApplicable&) {
    }
    ck.expect(split_found == !expect_si, name + ": stepwise split found = " + (split_found ? "yes" : "no"));
    ++checked;
  }
  return {4, "classification", ck.failures.empty(),
          ck.summary(std::to_string(checked) + " algebras classified, splits only for free2step odd n and octdouble"),
          since(t0)};
}

// 5: Pf^2 = det and Pf(Q M Q^T) = det(Q) Pf(M), exact, against the oracles.
CriterionResult pfaffian_oracles(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5050);
  Checker ck;
  int trials = 0;
  for (std::size_t n = 2; n <= 8; n += 2)
    for (int t = 0; t < 50; ++t) {
      RationalMatrix m = oracle::random_rational_skew(n, rng);
      Rational pf = pfaffian(to_skew_form(m));
      ck.expect(pf * pf == oracle::determinant(m), "Pf^2 != det at n=" + std::to_string(n));
      ck.expect(pf == oracle::pfaffian_expansion(m), "Pf differs from the expansion at n=" + std::to_string(n));
      ++trials;
    }
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 2 * (1 + static_cast<std::size_t>(t % 4));
    RationalMatrix m = oracle::random_rational_skew(n, rng);
    RationalMatrix q = oracle::random_rational_matrix(n, rng);
    RationalMatrix c = q * m * q.transpose();
    ck.expect(pfaffian(to_skew_form(c)) == oracle::determinant(q) * pfaffian(to_skew_form(m)),
              "Pf(QMQ^T) != det(Q)Pf(M) at n=" + std::to_string(n));
  }
  return {5, "pfaffian oracle equivalence", ck.failures.empty(),
          ck.summary(std::to_string(trials) + " Pf^2 = det trials and 20 congruence trials exact"), 0.0};
}

GaussianTestFunction test_gaussian(Eigen::Index n, std::mt19937_64& rng) {
  Eigen::MatrixXd q = oracle::random_spd(n, rng);
  Eigen::VectorXd b = oracle::random_uniform(n, 0.5, rng);
  return GaussianTestFunction::centered(q, b);
}

// 6: flat inversion on h_{1;C}.
CriterionResult flat_inversion(std::uint64_t seed) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(seed ^ 0x6060);
  PlancherelData data(heisenberg(1, CompositionKind::C));
  auto f = test_gaussian(3, rng);
  QuadratureSettings s;
  s.node_budget = 100000;
  Checker ck;
  double worst = 0.0;
  std::size_t most = 0;
  for (int p = 0; p < 5; ++p) {
    GroupPoint x = p == 0 ? GroupPoint::Zero(3) : GroupPoint(oracle::random_uniform(3, 1.0, rng));
    auto rec = invert_flat(data, f, x, s);
    worst = std::max(worst, rec.rel_error);
    most = std::max(most, rec.evaluations);
    ck.expect(rec.rel_error < 1e-6, "point " + std::to_string(p) + ": rel error " + sci(rec.rel_error));
    ck.expect(rec.evaluations <= 100000, "point " + std::to_string(p) + ": " + std::to_string(rec.evaluations) + " nodes");
  }
  double dt = since(t0);
  ck.expect(dt < 60.0, "took " + fixed(dt) + " s (limit 60 s)");
  return {6, "flat inversion h_{1;C}", ck.failures.empty(),
          ck.summary("max rel error " + sci(worst) + ", max " + std::to_string(most) + " nodes on z*"),
          dt};
}

// 7: stepwise inversion, case1 m=1 at 3 points and a case3 smoke run at 0.
CriterionResult stepwise_inversion(std::uint64_t seed) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(seed ^ 0x7070);
  Checker ck;
  StepwiseContext c1(decompose(ExceptionalCase::Case1, 3));
  auto f1 = test_gaussian(6, rng);
  QuadratureSettings outer;
  QuadratureSettings inner;
  double worst = 0.0;
  for (int p = 0; p < 3; ++p) {
    GroupPoint x = p == 0 ? GroupPoint::Zero(6) : GroupPoint(oracle::random_uniform(6, 1.0, rng));
    auto rec = invert_stepwise(c1, f1, x, outer, inner);
    worst = std::max(worst, rec.rel_error);
    ck.expect(rec.rel_error < 1e-3, "case1 point " + std::to_string(p) + ": rel error " + sci(rec.rel_error));
  }
  double dt1 = since(t0);
  ck.expect(dt1 < 600.0, "case1 took " + fixed(dt1) + " s (limit 600 s)");

  StepwiseContext c3(decompose(ExceptionalCase::Case3));
  auto f3 = test_gaussian(14, rng);
  QuadratureSettings coarse_inner;
  coarse_inner.initial_nodes = 2;
  coarse_inner.node_budget = 20000;
  auto rec3 = invert_stepwise(c3, f3, GroupPoint::Zero(14), outer, coarse_inner);
  ck.expect(rec3.rel_error < 1e-2, "case3 origin: rel error " + sci(rec3.rel_error));
  return {7, "stepwise inversion", ck.failures.empty(),
          ck.summary("case1 max rel error " + sci(worst) + "; case3 origin rel error " + sci(rec3.rel_error) +
                     " with " + std::to_string(rec3.evaluations) + " evaluations"),
          since(t0)};
}

// 8: closed-form flat pipeline against Euclidean inversion of (r_x f)_1 at 0.
CriterionResult flatness_identity(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x8080);
  Checker ck;
  double worst = 0.0;
  for (auto kind : {CompositionKind::C, CompositionKind::H}) {
    PlancherelData data(heisenberg(1, kind));
    const auto n = static_cast<Eigen::Index>(data.algebra().dim());
    auto f = test_gaussian(n, rng);
    for (int p = 0; p < 4; ++p) {
      GroupPoint x = p == 0 ? GroupPoint::Zero(n) : GroupPoint(oracle::random_uniform(n, 1.0, rng));
      auto pipeline = flat_inversion_closed_form(data, f, x);
      auto euclid = euclidean_inversion_at_zero(right_translate(data.structure(), f, x));
      double rel = std::abs(pipeline - euclid) / std::abs(euclid);
      worst = std::max(worst, rel);
      ck.expect(rel < 1e-10, std::string("h_{1;") + kind_letter(kind) + "} point " + std::to_string(p) + ": " + sci(rel));
    }
  }
  return {8, "flatness identity", ck.failures.empty(), ck.summary("max rel difference " + sci(worst)), 0.0};
}

std::vector<double> wedge_coordinates(const Eigen::MatrixXd& m) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double w = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
  return w;
}

// 9: spectrum invariance, case1 representatives, orbit-space identity.
CriterionResult orbit_machinery(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9090);
  std::normal_distribution<double> normal;
  Checker ck;
  double spec_worst = 0.0, oracle_worst = 0.0;
  for (Eigen::Index n = 1; n <= 8; ++n)
    for (int t = 0; t < 20; ++t) {
      Eigen::MatrixXd a(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = normal(rng);
      Eigen::MatrixXd m = a - a.transpose();
      Eigen::MatrixXd q = oracle::random_orthogonal(n, rng);
      auto s1 = skew_spectrum(m), s2 = skew_spectrum(q * m * q.transpose());
      spec_worst = std::max(spec_worst, max_diff(s1.a, s2.a));
      oracle_worst = std::max(oracle_worst, max_diff(s1.a, oracle::skew_moduli(m)));
    }
  ck.expect(spec_worst < 1e-9, "spectrum invariance " + sci(spec_worst));
  ck.expect(oracle_worst < 1e-9, "spectrum vs eigenvalue oracle " + sci(oracle_worst));

  double rep_worst = 0.0;
  for (int n : {3, 5, 7})
    for (int t = 0; t < 10; ++t) {
      Eigen::MatrixXd a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = normal(rng);
      Eigen::MatrixXd m = a - a.transpose();
      auto lam = wedge_coordinates(m);
      auto rep = orbit_representative(ExceptionalCase::Case1, lam);
      auto again = orbit_representative(ExceptionalCase::Case1, normal_form_functional(rep, n));
      rep_worst = std::max(rep_worst, max_diff(rep.invariants, again.invariants));
      Eigen::MatrixXd g = oracle::random_orthogonal(n, rng);
      auto rotated = orbit_representative(ExceptionalCase::Case1, wedge_coordinates(g * m * g.transpose()));
      rep_worst = std::max(rep_worst, max_diff(rep.invariants, rotated.invariants));
    }
  ck.expect(rep_worst < 1e-9, "case1 representative idempotence / rotation " + sci(rep_worst));

  auto report = orbit_space_quadrature_check(heisenberg(1, CompositionKind::H),
                                             [](double r) { return std::exp(-0.5 * r * r); }, 8.0, 96);
  ck.expect(report.rel_difference < 1e-6, "orbit-space identity " + sci(report.rel_difference));
  return {9, "orbit machinery", ck.failures.empty(),
          ck.summary("spectrum " + sci(spec_worst) + ", representatives " + sci(rep_worst) + ", orbit space " +
                     sci(report.rel_difference)),
          0.0};
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  static const std::vector<std::pair<std::string, std::function<CriterionResult(std::uint64_t)>>> table = {
      {"octonion table", octonion_table},         {"structural suite", structural_suite},
      {"pfaffian closed forms", pfaffian_closed_forms}, {"classification", classification},
      {"pfaffian oracle equivalence", pfaffian_oracles}, {"flat inversion h_{1;C}", flat_inversion},
      {"stepwise inversion", stepwise_inversion}, {"flatness identity", flatness_identity},
      {"orbit machinery", orbit_machinery}};
  if (id < 1 || id > static_cast<int>(table.size())) throw InvalidInput("no acceptance criterion " + std::to_string(id));
  const auto& [name, fn] = table[static_cast<std::size_t>(id - 1)];
  auto t0 = Clock::now();
  CriterionResult r;
  try {
    r = fn(seed);
  } catch (const std::exception& e) {
    r = {id, name, false, std::string("threw: ") + e.what(), 0.0};
  }
  r.seconds = since(t0);
  if (id == 1 && r.seconds >= 1.0) {
    r.passed = false;
    r.detail += "; took " + fixed(r.seconds) + " s (limit 1 s)";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::uint64_t seed_from_environment() {
  const char* s = std::getenv("NILHARM_SEED");
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw InvalidInput(std::string("NILHARM_SEED is not an unsigned integer: ") + s);
  return v;
}

std::string format_line(const CriterionResult& r) {
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + r.detail;
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}};
}

}  // namespace nilharm
