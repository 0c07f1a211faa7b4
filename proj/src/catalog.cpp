#include "nilharm/catalog.hpp"

#include <algorithm>

#include "nilharm/error.hpp"

namespace nilharm {

namespace {

std::string wedge_label(int i, int j) {
  return "u" + std::to_string(i) + "∧u" + std::to_string(j);
}

}  // namespace

LieAlgebraData heisenberg(int n, CompositionKind field) {
  if (n <= 0) throw InvalidInput("heisenberg: n must be positive");
  if (field == CompositionKind::O && n != 1)
    throw InvalidInput("heisenberg: only h_{1;O} is supported over the octonions");
  const std::size_t d = real_dimension(field);
  const std::size_t zdim = d - 1;
  const std::size_t dim = zdim + static_cast<std::size_t>(n) * d;

  std::vector<std::string> labels;
  std::vector<std::size_t> center_idx;
  for (std::size_t a = 1; a < d; ++a) {
    labels.push_back("z.e" + std::to_string(a));
    center_idx.push_back(a - 1);
  }
  for (int i = 1; i <= n; ++i)
    for (std::size_t a = 0; a < d; ++a)
      labels.push_back("u" + std::to_string(i) + ".e" + std::to_string(a));

  auto slot = [&](std::size_t i, std::size_t a) { return zdim + i * d + a; };
  LieAlgebraData::BracketTable table;
  // <u, v> only pairs equal slots, so [u_i.e_a, u_j.e_b] = 0 for i != j
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) {
        auto prod = im(multiply(CompositionElement::unit(field, a),
                                conj(CompositionElement::unit(field, b))));
        RationalVector coeffs(dim);
        for (std::size_t k = 1; k < d; ++k) coeffs[k - 1] = prod[k];
        table[{slot(i, a), slot(i, b)}] = std::move(coeffs);
      }
  LieAlgebraData alg(std::move(labels), std::move(center_idx), std::move(table));
  alg.set_metadata("family", std::string("heisenberg:") + std::to_string(n) + ":" +
                                 kind_letter(field));
  alg.set_metadata("hermitian_convention", "<u,v> = sum u_i conj(v_i)");
  return alg;
}

LieAlgebraData free_two_step(int n, ScalarField field) {
  if (n < 2) throw InvalidInput("free_two_step: n must be at least 2");
  const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  std::vector<std::string> labels;
  std::vector<std::size_t> center_idx;
  LieAlgebraData::BracketTable table;

  // pair index for i < j (0-based)
  auto pair_index = [n](int i, int j) {
    return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
  };

  if (field == ScalarField::R) {
    const std::size_t dim = pairs + static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) labels.push_back(wedge_label(i + 1, j + 1));
    for (std::size_t k = 0; k < pairs; ++k) center_idx.push_back(k);
    for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        RationalVector coeffs(dim);
        coeffs[pair_index(i, j)] = 1;
        table[{pairs + static_cast<std::size_t>(i), pairs + static_cast<std::size_t>(j)}] =
            std::move(coeffs);
      }
    LieAlgebraData alg(std::move(labels), std::move(center_idx), std::move(table));
    alg.set_metadata("family", "free2step:" + std::to_string(n) + ":R");
    return alg;
  }

  // Real basis: for every complex basis vector w, the pair (w, i w).
  const std::size_t zreal = 2 * pairs;
  const std::size_t dim = zreal + 2 * static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      labels.push_back(wedge_label(i + 1, j + 1));
      labels.push_back("i(" + wedge_label(i + 1, j + 1) + ")");
    }
  for (std::size_t k = 0; k < zreal; ++k) center_idx.push_back(k);
  for (int i = 0; i < n; ++i) {
    labels.push_back("u" + std::to_string(i + 1));
    labels.push_back("iu" + std::to_string(i + 1));
  }
  auto v_index = [zreal](int i, int part) {
    return zreal + 2 * static_cast<std::size_t>(i) + static_cast<std::size_t>(part);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::size_t re = 2 * pair_index(i, j);
      const std::size_t imag = re + 1;
      // (i^p u_i) ^ (i^q u_j) = i^(p+q) (u_i ^ u_j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
          RationalVector coeffs(dim);
          int power = p + q;
          if (power == 0)
            coeffs[re] = 1;
          else if (power == 1)
            coeffs[imag] = 1;
          else
            coeffs[re] = -1;
          table[{v_index(i, p), v_index(j, q)}] = std::move(coeffs);
        }
    }
  LieAlgebraData alg(std::move(labels), std::move(center_idx), std::move(table));
  alg.set_metadata("family", "free2step:" + std::to_string(n) + ":C");
  return alg;
}

LieAlgebraData octonion_double() {
  constexpr std::size_t dim = 14;
  std::vector<std::string> labels;
  std::vector<std::size_t> center_idx;
  for (std::size_t k = 1; k <= 7; ++k) {
    labels.push_back("(e" + std::to_string(k) + ",0)");
    center_idx.push_back(k - 1);
  }
  for (std::size_t k = 1; k <= 7; ++k) labels.push_back("(0,e" + std::to_string(k) + ")");
  LieAlgebraData::BracketTable table;
  for (std::size_t a = 1; a <= 7; ++a)
    for (std::size_t b = a + 1; b <= 7; ++b) {
      auto prod = im(multiply(CompositionElement::unit(CompositionKind::O, a),
                              conj(CompositionElement::unit(CompositionKind::O, b))));
      RationalVector coeffs(dim);
      for (std::size_t k = 1; k <= 7; ++k) coeffs[k - 1] = prod[k];
      table[{6 + a, 6 + b}] = std::move(coeffs);
    }
  LieAlgebraData alg(std::move(labels), std::move(center_idx), std::move(table));
  alg.set_metadata("family", "octdouble");
  alg.add_ordering("pfaffian_order", {7, 8, 9, 11, 12, 10, 13});
  return alg;
}

LieAlgebraData abelian(int n) {
  if (n <= 0) throw InvalidInput("abelian: n must be positive");
  std::vector<std::string> labels;
  std::vector<std::size_t> center_idx;
  for (int i = 0; i < n; ++i) {
    labels.push_back("a" + std::to_string(i + 1));
    center_idx.push_back(static_cast<std::size_t>(i));
  }
  LieAlgebraData alg(std::move(labels), std::move(center_idx), {});
  alg.set_metadata("family", "abelian:" + std::to_string(n));
  return alg;
}

LieAlgebraData direct_sum(const std::vector<LieAlgebraData>& blocks) {
  if (blocks.empty()) throw InvalidInput("direct_sum: no blocks");
  // new position of every (block, index): centers first, then complements
  std::vector<std::vector<std::size_t>> position(blocks.size());
  std::vector<std::string> labels;
  std::vector<std::size_t> center_idx;
  for (std::size_t b = 0; b < blocks.size(); ++b) position[b].assign(blocks[b].dim(), 0);
  auto prefix = [](std::size_t b) { return "B" + std::to_string(b + 1) + ":"; };
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto c : blocks[b].center_indices()) {
      position[b][c] = labels.size();
      center_idx.push_back(labels.size());
      labels.push_back(prefix(b) + blocks[b].labels()[c]);
    }
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto c : blocks[b].complement_indices()) {
      position[b][c] = labels.size();
      labels.push_back(prefix(b) + blocks[b].labels()[c]);
    }
  const std::size_t dim = labels.size();
  LieAlgebraData::BracketTable table;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (const auto& [key, coeffs] : blocks[b].brackets()) {
      RationalVector out(dim);
      for (std::size_t k = 0; k < coeffs.size(); ++k) out[position[b][k]] = coeffs[k];
      table[{position[b][key.first], position[b][key.second]}] = std::move(out);
    }
  LieAlgebraData alg(std::move(labels), std::move(center_idx), std::move(table));
  std::string family;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto it = blocks[b].metadata().find("family");
    family += (b ? " + " : "") + (it == blocks[b].metadata().end() ? "?" : it->second);
  }
  alg.set_metadata("family", family);
  return alg;
}

namespace {

using Builder = std::function<LieAlgebraData(const std::vector<int>&)>;

int need(const std::vector<int>& p, std::size_t i, const char* name) {
  if (i >= p.size()) throw InvalidInput(std::string("missing constructor parameter ") + name);
  return p[i];
}

LieAlgebraData hC(int n) { return heisenberg(n, CompositionKind::C); }
LieAlgebraData hH(int n) { return heisenberg(n, CompositionKind::H); }

CatalogEntry row21(int row, std::string k, std::string v, std::string z, std::string notes,
                   std::vector<std::string> params = {}, Builder builder = {}) {
  CatalogEntry e;
  e.table_id = "2.1";
  e.row = row;
  e.group_K = std::move(k);
  e.v_desc = std::move(v);
  e.z_desc = std::move(z);
  e.algebra_desc = e.z_desc + " + " + e.v_desc;
  e.notes = std::move(notes);
  e.constructible = static_cast<bool>(builder);
  e.parameters = std::move(params);
  e.builder = std::move(builder);
  return e;
}

CatalogEntry row22(int row, std::string k, std::string v, std::string nn, std::string alg,
                   std::vector<std::string> params = {}, Builder builder = {}) {
  CatalogEntry e;
  e.table_id = "2.2";
  e.row = row;
  e.group_K = std::move(k);
  e.v_desc = std::move(v);
  e.z_desc = std::move(nn);
  e.algebra_desc = std::move(alg);
  e.constructible = static_cast<bool>(builder);
  e.parameters = std::move(params);
  e.builder = std::move(builder);
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> t;
  // Table 2.1: maximal irreducible nilpotent Gelfand pairs
  t.push_back(row21(1, "SO(n)", "ℝ^n", "Λ²ℝ^n = so(n)", "", {"n"}, [](const auto& p) {
    int n = need(p, 0, "n");
    if (n < 3) throw InvalidInput("table 2.1 row 1 needs n >= 3");
    return free_two_step(n, ScalarField::R);
  }));
  t.push_back(row21(2, "Spin(7)", "ℝ^8 = 𝕆", "ℝ^7 = Im 𝕆", "", {},
                    [](const auto&) { return heisenberg(1, CompositionKind::O); }));
  t.push_back(row21(3, "G_2", "ℝ^7 = Im 𝕆", "ℝ^7 = Im 𝕆", "", {},
                    [](const auto&) { return octonion_double(); }));
  t.push_back(row21(4, "U(1)·SO(n)", "ℂ^n", "Im ℂ", "max: n≠4"));
  t.push_back(row21(5, "(U(1)·) SU(n)", "ℂ^n", "Λ²ℂ^n ⊕ Im ℂ", "U(1): n odd"));
  t.push_back(row21(6, "SU(n), n odd", "ℂ^n", "Λ²ℂ^n", "", {"n"}, [](const auto& p) {
    int n = need(p, 0, "n");
    if (n < 3 || n % 2 == 0) throw InvalidInput("table 2.1 row 6 needs odd n >= 3");
    return free_two_step(n, ScalarField::C);
  }));
  t.push_back(row21(7, "SU(n), n odd", "ℂ^n", "Im ℂ", ""));
  t.push_back(row21(8, "U(n)", "ℂ^n", "Im ℂ^{n×n} = u(n)", ""));
  t.push_back(row21(9, "(U(1)·) Sp(n)", "ℍ^n", "Re ℍ^{n×n}_0 ⊕ Im ℍ", ""));
  t.push_back(row21(10, "U(n)", "S²ℂ^n", "ℝ", ""));
  t.push_back(row21(11, "(U(1)·) SU(n), n ≧ 3", "Λ²ℂ^n", "ℝ", "U(1): n even"));
  t.push_back(row21(12, "U(1)·Spin(7)", "ℂ^8", "ℝ^7 ⊕ ℝ", ""));
  t.push_back(row21(13, "U(1)·Spin(9)", "ℂ^16", "ℝ", ""));
  t.push_back(row21(14, "(U(1)·) Spin(10)", "ℂ^16", "ℝ", ""));
  t.push_back(row21(15, "U(1)·G_2", "ℂ^7", "ℝ", ""));
  t.push_back(row21(16, "U(1)·E_6", "ℂ^27", "ℝ", ""));
  t.push_back(row21(17, "Sp(1)×Sp(n)", "ℍ^n", "Im ℍ = sp(1)", "max: n ≧ 2"));
  t.push_back(row21(18, "Sp(2)×Sp(n)", "ℍ^{2×n}", "Im ℍ^{2×2} = sp(2)", ""));
  t.push_back(row21(19, "(U(1)·) SU(m)×SU(n), m,n ≧ 3", "ℂ^m⊗ℂ^n", "ℝ", "U(1): m=n"));
  t.push_back(row21(20, "(U(1)·) SU(2)×SU(n)", "ℂ^2⊗ℂ^n", "Im ℂ^{2×2} = u(2)", "U(1): n=2"));
  t.push_back(row21(21, "(U(1)·) Sp(2)×SU(n)", "ℍ^2⊗ℂ^n", "ℝ", "U(1): n ≦ 4; max: n ≧ 3"));
  t.push_back(row21(22, "U(2)×Sp(n)", "ℂ^2⊗ℍ^n", "Im ℂ^{2×2} = u(2)", ""));
  t.push_back(row21(23, "U(3)×Sp(n)", "ℂ^3⊗ℍ^n", "ℝ", "max: n ≧ 2"));

  // Table 2.2: maximal indecomposable principal saturated pairs, K reducible on v
  t.push_back(row22(1, "U(n)", "ℂ^n ⊕ su(n)", "ℝ", "((h_{n;ℂ})) + su(n)", {"n"},
                    [](const auto& p) {
                      int n = need(p, 0, "n");
                      return direct_sum({hC(n), abelian(n * n - 1)});
                    }));
  t.push_back(row22(2, "U(4)", "ℂ^4 ⊕ ℝ^6", "Im ℂ ⊕ Λ²ℂ^4", "((Im ℂ + Λ²ℂ^4 + ℂ^4)) + ℝ^6"));
  t.push_back(row22(3, "U(1)×U(n)", "ℂ^n ⊕ Λ²ℂ^n", "ℝ ⊕ ℝ",
                    "((h_{n;ℂ})) + ((h_{n(n-1)/2;ℂ}))", {"n"}, [](const auto& p) {
                      int n = need(p, 0, "n");
                      if (n < 2) throw InvalidInput("table 2.2 row 3 needs n >= 2");
                      return direct_sum({hC(n), hC(n * (n - 1) / 2)});
                    }));
  t.push_back(row22(4, "SU(4)", "ℂ^4 ⊕ ℝ^6", "Im ℂ ⊕ Re ℍ^{2×2}",
                    "((Im ℂ + Re ℍ^{2×2} + ℂ^4)) + ℝ^6"));
  t.push_back(row22(5, "U(2)×U(4)", "ℂ^{2×4} ⊕ ℝ^6", "Im ℂ^{2×2}",
                    "((Im ℂ^{2×2} + ℂ^{2×4})) + ℝ^6"));
  t.push_back(row22(6, "S(U(4)×U(m))", "ℂ^{4×m} ⊕ ℝ^6", "ℝ", "((h_{4m;ℂ})) + ℝ^6", {"m"},
                    [](const auto& p) { return direct_sum({hC(4 * need(p, 0, "m")), abelian(6)}); }));
  t.push_back(row22(7, "U(m)×U(n)", "ℂ^{m×n} ⊕ ℂ^m", "ℝ ⊕ ℝ", "((h_{mn;ℂ})) + ((h_{m;ℂ}))",
                    {"m", "n"}, [](const auto& p) {
                      int m = need(p, 0, "m"), n = need(p, 1, "n");
                      return direct_sum({hC(m * n), hC(m)});
                    }));
  t.push_back(row22(8, "U(1)×Sp(n)×U(1)", "ℂ^{2n} ⊕ ℂ^{2n}", "ℝ ⊕ ℝ",
                    "((h_{2n;ℂ})) + ((h_{2n;ℂ}))", {"n"}, [](const auto& p) {
                      int n = need(p, 0, "n");
                      return direct_sum({hC(2 * n), hC(2 * n)});
                    }));
  t.push_back(row22(9, "Sp(1)×Sp(n)×U(1)", "ℍ^n ⊕ ℍ^n", "Im ℍ ⊕ ℝ",
                    "((h_{n;ℍ})) + ((h_{2n;ℂ}))", {"n"}, [](const auto& p) {
                      int n = need(p, 0, "n");
                      return direct_sum({hH(n), hC(2 * n)});
                    }));
  t.push_back(row22(10, "Sp(1)×Sp(n)×Sp(1)", "ℍ^n ⊕ ℍ^n", "Im ℍ ⊕ Im ℍ",
                    "((h_{n;ℍ})) + ((h_{n;ℍ}))", {"n"}, [](const auto& p) {
                      int n = need(p, 0, "n");
                      return direct_sum({hH(n), hH(n)});
                    }));
  t.push_back(row22(11, "Sp(n)×{Sp(1),U(1),{1}}×Sp(m)", "ℍ^n ⊕ ℍ^{n×m}", "Im ℍ",
                    "((h_{n;ℍ})) + ℍ^{n×m}", {"n", "m"}, [](const auto& p) {
                      int n = need(p, 0, "n"), m = need(p, 1, "m");
                      return direct_sum({hH(n), abelian(4 * n * m)});
                    }));
  t.push_back(row22(12, "Sp(n)×{Sp(1),U(1),{1}}", "ℍ^n ⊕ Re ℍ^{n×n}_0", "Im ℍ",
                    "((h_{n;ℍ})) + Re ℍ^{n×n}_0", {"n"}, [](const auto& p) {
                      int n = need(p, 0, "n");
                      if (n < 2) throw InvalidInput("table 2.2 row 12 needs n >= 2");
                      return direct_sum({hH(n), abelian(2 * n * n - n - 1)});
                    }));
  t.push_back(row22(13, "Spin(7)×{SO(2),{1}}", "(ℝ^8=𝕆) ⊕ ℝ^{7×2}", "ℝ^7 = Im 𝕆",
                    "((h_{1;𝕆})) + ℝ^{7×2}", {}, [](const auto&) {
                      return direct_sum({heisenberg(1, CompositionKind::O), abelian(14)});
                    }));
  t.push_back(row22(14, "U(1)×Spin(7)", "ℂ^7 ⊕ ℝ^8", "ℝ", "((h_{7;ℂ})) + ℝ^8", {},
                    [](const auto&) { return direct_sum({hC(7), abelian(8)}); }));
  t.push_back(row22(15, "U(1)×Spin(7)", "ℂ^8 ⊕ ℝ^7", "ℝ", "((h_{8;ℂ})) + ℝ^7", {},
                    [](const auto&) { return direct_sum({hC(8), abelian(7)}); }));
  t.push_back(row22(16, "U(1)×U(1)×Spin(8)", "ℂ^8_+ ⊕ ℂ^8_-", "ℝ ⊕ ℝ",
                    "((h_{8;ℂ})) + ((h_{8;ℂ}))", {},
                    [](const auto&) { return direct_sum({hC(8), hC(8)}); }));
  t.push_back(row22(17, "U(1)×Spin(10)", "ℂ^16 ⊕ ℝ^10", "ℝ", "((h_{16;ℂ})) + ℝ^10", {},
                    [](const auto&) { return direct_sum({hC(16), abelian(10)}); }));
  t.push_back(row22(18, "{SU(n),U(n),U(1)Sp(n/2)}×SU(2)", "ℂ^{n×2} ⊕ su(2)", "ℝ",
                    "((h_{2n;ℂ})) + su(2)", {"n"}, [](const auto& p) {
                      return direct_sum({hC(2 * need(p, 0, "n")), abelian(3)});
                    }));
  t.push_back(row22(19, "{SU(n),U(n),U(1)Sp(n/2)}×U(2)", "ℂ^{n×2} ⊕ ℂ^2", "ℝ ⊕ ℝ",
                    "((h_{2n;ℂ})) + ((h_{2;ℂ}))", {"n"}, [](const auto& p) {
                      return direct_sum({hC(2 * need(p, 0, "n")), hC(2)});
                    }));
  t.push_back(row22(20, "{SU(n),U(n),U(1)Sp(n/2)}×SU(2)×{SU(m),U(m),U(1)Sp(m/2)}",
                    "ℂ^{n×2} ⊕ ℂ^{2×m}", "ℝ ⊕ ℝ", "((h_{2n;ℂ})) + ((h_{2m;ℂ}))", {"n", "m"},
                    [](const auto& p) {
                      return direct_sum({hC(2 * need(p, 0, "n")), hC(2 * need(p, 1, "m"))});
                    }));
  t.push_back(row22(21, "{SU(n),U(n),U(1)Sp(n/2)}×SU(2)×U(4)", "ℂ^{n×2} ⊕ ℂ^{2×4} ⊕ ℝ^6",
                    "ℝ ⊕ ℝ", "((h_{2n;ℂ})) + ((h_{8;ℂ})) + ℝ^6", {"n"}, [](const auto& p) {
                      return direct_sum({hC(2 * need(p, 0, "n")), hC(8), abelian(6)});
                    }));
  t.push_back(row22(22, "U(4)×U(2)", "ℝ^6 ⊕ ℂ^{4×2} ⊕ su(2)", "ℝ",
                    "ℝ^6 + ((h_{8;ℂ})) + su(2)", {},
                    [](const auto&) { return direct_sum({abelian(6), hC(8), abelian(3)}); }));
  t.push_back(row22(23, "U(4)×U(2)×U(4)", "ℝ^6 ⊕ ℂ^{4×2} ⊕ ℂ^{2×4} ⊕ ℝ^6", "ℝ ⊕ ℝ",
                    "ℝ^6 + ((h_{8;ℂ})) + ((h_{8;ℂ})) + ℝ^6", {}, [](const auto&) {
                      return direct_sum({abelian(6), hC(8), hC(8), abelian(6)});
                    }));
  t.push_back(row22(24, "U(1)×U(1)×SU(4)", "ℂ^4 ⊕ ℂ^4 ⊕ ℝ^6", "ℝ ⊕ ℝ",
                    "((h_{4;ℂ})) + ((h_{4;ℂ})) + ℝ^6", {},
                    [](const auto&) { return direct_sum({hC(4), hC(4), abelian(6)}); }));
  t.push_back(row22(25, "(U(1)·)SU(4)(·SO(2))", "ℂ^4 ⊕ ℝ^{6×2}", "ℝ",
                    "((h_{4;ℂ})) + ℝ^{6×2}", {},
                    [](const auto&) { return direct_sum({hC(4), abelian(12)}); }));
  return t;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

}  // namespace

std::vector<CatalogEntry> list_entries(const CatalogFilter& filter) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog()) {
    if (filter.table_id && e.table_id != *filter.table_id) continue;
    if (filter.constructible_only && !e.constructible) continue;
    out.push_back(e);
  }
  return out;
}

CatalogEntry get_entry(const std::string& table_id, int row) {
  for (const auto& e : catalog())
    if (e.table_id == table_id && e.row == row) return e;
  throw InvalidInput("unknown catalog row: table " + table_id + " row " + std::to_string(row));
}

LieAlgebraData construct(const CatalogEntry& entry, const std::vector<int>& params) {
  if (!entry.constructible)
    throw BracketNotSpecified("table " + entry.table_id + " row " + std::to_string(entry.row) +
                              ": bracket not specified; the composition is defined only in an external reference");
  if (params.size() != entry.parameters.size())
    throw InvalidInput("table " + entry.table_id + " row " + std::to_string(entry.row) +
                       " expects " + std::to_string(entry.parameters.size()) + " parameter(s)");
  for (int p : params)
    if (p <= 0) throw InvalidInput("catalog parameters must be positive");
  return entry.builder(params);
}

}  // namespace nilharm
