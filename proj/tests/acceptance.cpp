// Acceptance suite: one pass/fail line per criterion, exact arithmetic throughout.
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qhaar/json_io.hpp"
#include "qhaar/verify.hpp"

using namespace qhaar;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool pass, double seconds) {
  std::printf("[%s] criterion %2d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", number, label.c_str(),
              seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <typename F>
void criterion(int number, const std::string& label, F&& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    pass = body();
  } catch (const std::exception& e) {
    std::printf("       exception: %s\n", e.what());
    pass = false;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, label, pass, seconds);
}

std::vector<HeckeSymmetry> builtins() {
  return {build_drinfeld_jimbo(1), build_drinfeld_jimbo(2), build_drinfeld_jimbo(3),
          build_manin_super(1, 1), build_manin_super(2, 1)};
}

KPoint point(std::vector<int> values) {
  KPoint pt;
  for (int v : values) pt.diag.push_back(Scalar(v));
  return pt;
}

}  // namespace

int main() {
  criterion(1, "symmetry axioms on all built-ins", [] {
    for (const auto& sym : builtins()) {
      ValidationReport r = validate(sym);
      if (!r.all_pass()) {
        std::printf("       %s fails\n", sym.name.c_str());
        return false;
      }
    }
    return true;
  });

  criterion(2, "idempotent suite, degrees up to 4", [] {
    SuiteReport r = run_suite_idempotents(build_manin_super(1, 1), 4);
    for (const auto& item : r.items)
      if (!item.pass) std::printf("       %s fails\n", item.name.c_str());
    return r.all_pass();
  });

  criterion(3, "central-operator recursion, degrees up to 3", [] {
    for (const auto& sym : {build_drinfeld_jimbo(1), build_drinfeld_jimbo(2),
                            build_manin_super(1, 1), build_manin_super(2, 1)}) {
      for (int n = 0; n <= 3; ++n) {
        if (!check_recursion(sym, n)) {
          std::printf("       %s n=%d fails\n", sym.name.c_str(), n);
          return false;
        }
      }
    }
    return true;
  });

  criterion(4, "one-dimensional oracle and the weight correction", [] {
    HeckeSymmetry g1 = build_drinfeld_jimbo(1);
    for (int n = 0; n <= 4; ++n) {
      Monomial m{MultiIndex(n, 1), MultiIndex(n, 1), MultiIndex(n, 1), MultiIndex(n, 1)};
      if (integrate_monomial(g1, m) != Scalar(1)) return false;
    }
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        if (a == b) continue;
        Monomial m{MultiIndex(a, 1), MultiIndex(a, 1), MultiIndex(b, 1), MultiIndex(b, 1)};
        if (integrate_monomial(g1, m) != Scalar(0)) return false;
      }
    // alternating-sign weight breaks the degree-2 normalization
    const IntegralTensor& t2 = integral_tensor(g1, 2);
    Scalar alt;
    for (size_t i = 0; i < t2.terms.size(); ++i) {
      Scalar w = t2.terms[i].weight;
      if (i == 1) w = -w;
      alt += w * t2.terms[i].a.at(0, 0) * t2.terms[i].b.at(0, 0);
    }
    return alt != Scalar(1);
  });

  criterion(5, "invariance conditions and the trace expansion", [] {
    for (const auto& sym : builtins()) {
      for (int n = 1; n <= 3; ++n) {
        if (!check_condition_i(sym, n)) {
          std::printf("       %s condition (i) n=%d fails\n", sym.name.c_str(), n);
          return false;
        }
        if (!check_condition_ii(sym, n)) {
          std::printf("       %s condition (ii) n=%d fails\n", sym.name.c_str(), n);
          return false;
        }
      }
      int cap_iii = sym.d >= 3 ? 2 : 3;
      for (int n = 1; n <= cap_iii; ++n) {
        if (!check_condition_iii(sym, n)) {
          std::printf("       %s condition (iii) n=%d fails\n", sym.name.c_str(), n);
          return false;
        }
      }
    }
    for (const auto& sym :
         {build_drinfeld_jimbo(1), build_drinfeld_jimbo(2), build_manin_super(1, 1)}) {
      for (int n = 2; n <= 4; ++n) {
        if (!check_trace_expansion(sym, n)) {
          std::printf("       %s trace expansion n=%d fails\n", sym.name.c_str(), n);
          return false;
        }
      }
    }
    return true;
  });

  criterion(6, "well-definedness: 50 strategy pairs and 50 relation sandwiches", [] {
    for (auto [sym, zcap] : std::vector<std::pair<HeckeSymmetry, int>>{
             {build_drinfeld_jimbo(1), 4}, {build_manin_super(1, 1), 4}}) {
      SuiteReport r = run_suite_welldefined(sym, 4, 7, 50, zcap);
      if (!r.all_pass()) {
        std::printf("       %s fails\n", sym.name.c_str());
        return false;
      }
    }
    return true;
  });

  criterion(7, "character-sum identity and hook-factored characters", [] {
    HeckeSymmetry g1 = build_drinfeld_jimbo(1);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> seeds1 = {
        {{2}, {5}}, {{7}, {3}}, {{4}, {9}}};
    for (const auto& [mv, nv] : seeds1)
      for (int n = 0; n <= 3; ++n)
        if (hciz_lhs(g1, point(mv), point(nv), n) != hciz_rhs(g1, point(mv), point(nv), n))
          return false;
    HeckeSymmetry g11 = build_manin_super(1, 1);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> seeds2 = {
        {{2, 3}, {5, 7}}, {{7, 2}, {3, 11}}, {{4, 9}, {8, 3}}};
    for (const auto& [mv, nv] : seeds2)
      for (int n = 1; n <= 3; ++n)
        if (hciz_lhs(g11, point(mv), point(nv), n) != hciz_rhs(g11, point(mv), point(nv), n)) {
          std::printf("       super case n=%d fails\n", n);
          return false;
        }
    for (const auto& [mv, nv] : seeds2) {
      for (int n = 1; n <= 3; ++n) {
        for (const auto& lam : omega_set(1, 1, n)) {
          if (hook_schur_factored(g11, lam, point(mv)) !=
              evaluate(g11, character(g11, lam), point(mv)))
            return false;
        }
      }
    }
    // d = 3 spot check
    HeckeSymmetry g21 = build_manin_super(2, 1);
    KPoint m3 = point({2, 3, 5}), n3 = point({7, 11, 13});
    if (hciz_lhs(g21, m3, n3, 2) != hciz_rhs(g21, m3, n3, 2)) {
      std::printf("       rank-(2,1) case n=2 fails\n");
      return false;
    }
    return true;
  });

  criterion(8, "quantum ranks vanish and orthogonality holds", [] {
    HeckeSymmetry g11 = build_manin_super(1, 1);
    for (int n = 1; n <= 3; ++n)
      for (const auto& lam : omega_set(1, 1, n))
        if (quantum_rank(g11, lam) != Scalar(0)) return false;
    for (int n = 1; n <= 2; ++n) {
      for (const auto& lam : gamma_set(1, 1, n)) {
        for (const auto& row : check_orthogonality(g11, lam)) {
          if (!row.equal) {
            std::printf("       super block fails at (%d,%d,%d,%d)\n", row.a, row.b, row.c, row.d);
            return false;
          }
        }
      }
    }
    HeckeSymmetry g1 = build_drinfeld_jimbo(1);
    for (int n = 1; n <= 3; ++n)
      for (const auto& row : check_orthogonality(g1, Partition({n})))
        if (!row.equal) return false;
    return true;
  });

  criterion(9, "combinatorial oracles", [] {
    for (int n = 0; n <= 6; ++n) {
      std::int64_t sum_sq = 0, fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      for (const auto& lam : partitions_of(n)) {
        if (d_lambda(lam) != static_cast<std::int64_t>(standard_tableaux(lam).size()))
          return false;
        sum_sq += d_lambda(lam) * d_lambda(lam);
      }
      if (sum_sq != fact) return false;
    }
    return poincare_prefix(build_drinfeld_jimbo(2), 3) == std::vector<int>({1, 2, 1, 0});
  });

  criterion(10, "deterministic reports", [] {
    auto run = [](const std::string& path) {
      std::string cmd = std::string(QHAAR_CLI_PATH) +
                        " verify --symmetry 'glq:1|1' --max-n 2 --suite all --seed 7 --out " +
                        path + " 2>/dev/null";
      return std::system(cmd.c_str());
    };
    std::string a = "acceptance_det_a.json", b = "acceptance_det_b.json";
    if (run(a) != 0 || run(b) != 0) return false;
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    std::remove(a.c_str());
    std::remove(b.c_str());
    return !sa.str().empty() && sa.str() == sb.str();
  });

  if (failures == 0) {
    std::printf("all criteria pass\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
