#include "qhaar/verify.hpp"

#include <random>

namespace qhaar {

SuiteReport run_suite_idempotents(const HeckeSymmetry& sym, int max_n) {
  SuiteReport report{"idempotents", {}};
  for (int n = 1; n <= max_n; ++n) {
    struct TabEntry {
      Partition shape;
      HeckeElement idem;
    };
    std::vector<TabEntry> entries;
    for (const Partition& lam : partitions_of(n))
      for (const StandardTableau& t : standard_tableaux(lam))
        entries.push_back({lam, dipper_james_idempotent(t)});
    bool idem_ok = true, tau_ok = true, murphy_ok = true;
    HeckeElement total(n);
    for (const auto& e : entries) {
      if (!(e.idem * e.idem == e.idem)) idem_ok = false;
      if (!(tau(e.idem) == k_lambda(e.shape))) tau_ok = false;
      total = total + e.idem;
    }
    // Murphy eigenvalues per tableau
    {
      size_t at = 0;
      for (const Partition& lam : partitions_of(n)) {
        for (const StandardTableau& t : standard_tableaux(lam)) {
          const HeckeElement& e = entries[at++].idem;
          for (int m = 1; m <= n; ++m) {
            HeckeElement lm = murphy(n, m);
            Scalar eig = q_int(t.content_of(m));
            if (!(lm * e == eig * e) || !(e * lm == eig * e)) murphy_ok = false;
          }
        }
      }
    }
    bool orth_ok = true;
    for (size_t i = 0; i < entries.size(); ++i)
      for (size_t j = 0; j < entries.size(); ++j)
        if (i != j && !(entries[i].idem * entries[j].idem).is_zero()) orth_ok = false;
    report.items.push_back({"square_n" + std::to_string(n), idem_ok, "E^2 = E, all tableaux"});
    report.items.push_back({"orthogonal_n" + std::to_string(n), orth_ok, "E_t E_t' = 0"});
    report.items.push_back(
        {"resolution_n" + std::to_string(n), total == HeckeElement::one(n), "sum E_t = 1"});
    report.items.push_back(
        {"murphy_eigenvalue_n" + std::to_string(n), murphy_ok, "L_m E = [content]_q E"});
    report.items.push_back({"schur_element_n" + std::to_string(n), tau_ok, "tau(E_t) = k_lambda"});
    // annihilation with the tight bound |k| <= n-1
    {
      HeckeElement prod = HeckeElement::one(n);
      HeckeElement ln = murphy(n, n);
      for (int k = -(n - 1); k <= n - 1; ++k)
        prod = prod * (ln - q_int(k) * HeckeElement::one(n));
      report.items.push_back({"murphy_annihilation_n" + std::to_string(n), prod.is_zero(),
                              "prod_{|k|<=n-1}(L_n - [k]_q) = 0"});
    }
    // ker(rho) is spanned by the blocks outside the hook region
    {
      const Rep& rep = Rep::get(sym, n);
      auto gamma = gamma_set(sym.birank_r, sym.birank_s, n);
      bool ok = true;
      for (const Partition& lam : partitions_of(n)) {
        bool in_gamma = std::find(gamma.begin(), gamma.end(), lam) != gamma.end();
        bool vanishes = rep.rho(central_idempotent(lam)).is_zero();
        if (in_gamma == vanishes) ok = false;
      }
      report.items.push_back(
          {"kernel_blocks_n" + std::to_string(n), ok, "rho(F_lambda) = 0 iff lambda outside hook"});
    }
  }
  return report;
}

SuiteReport run_suite_recursion(const HeckeSymmetry& sym, int max_n) {
  SuiteReport report{"recursion", {}};
  for (int n = 0; n <= max_n; ++n)
    report.items.push_back({"recursion_n" + std::to_string(n), check_recursion(sym, n),
                            "P_{n+1}(L_{n+1} - [s-r]_q) = P_n"});
  return report;
}

SuiteReport run_suite_conditions(const HeckeSymmetry& sym, int max_n, int max_n_condition_iii) {
  if (max_n_condition_iii < 0) max_n_condition_iii = max_n;
  SuiteReport report{"conditions", {}};
  for (int n = 1; n <= max_n; ++n) {
    report.items.push_back(
        {"condition_i_n" + std::to_string(n), check_condition_i(sym, n), "R-compatibility"});
    report.items.push_back({"condition_ii_n" + std::to_string(n), check_condition_ii(sym, n),
                            "contractions restrict to the lower degree"});
  }
  for (int n = 1; n <= max_n_condition_iii; ++n)
    report.items.push_back({"condition_iii_n" + std::to_string(n), check_condition_iii(sym, n),
                            "invariance via commutant pairing"});
  return report;
}

SuiteReport run_suite_trace_expansion(const HeckeSymmetry& sym, int max_n) {
  SuiteReport report{"trace_expansion", {}};
  for (int n = 2; n <= max_n; ++n)
    report.items.push_back({"expansion_n" + std::to_string(n), check_trace_expansion(sym, n),
                            "sum q^{-l} T_{w^-1} (x) h(T_w) = (L_n + trC)-form"});
  return report;
}

SuiteReport run_suite_casimir(int max_n) {
  SuiteReport report{"casimir", {}};
  for (int n = 2; n <= max_n; ++n)
    report.items.push_back({"intertwiner_n" + std::to_string(n), casimir_intertwines(n),
                            "(x (x) 1) Cas = Cas (1 (x) x)"});
  // tau-pairing duality at n = 2 for x = T_1
  {
    int n = 2;
    Permutation s1 = Permutation::adjacent(1, n);
    HeckeElement x = HeckeElement::basis(s1);
    HeckeElement recovered(n);
    for (const Permutation& w : all_permutations(n)) {
      Scalar pairing = tau(HeckeElement::basis(w) * x);
      if (pairing.is_zero()) continue;
      recovered = recovered + (Scalar::q_pow(-length(w)) * pairing) * HeckeElement::basis(w.inverse());
    }
    report.items.push_back({"tau_duality_n2", recovered == x,
                            "sum q^{-l(w)} T_{w^-1} (T_w, x) recovers x"});
  }
  return report;
}

SuiteReport run_suite_welldefined(const HeckeSymmetry& sym, int max_word_len,
                                  std::uint64_t seed, int trials, int max_z_degree) {
  SuiteReport report{"welldefined", {}};
  std::mt19937_64 rng(seed);
  auto random_symbol = [&]() {
    GenSymbol g;
    g.is_t = (rng() & 1) != 0;
    g.upper = static_cast<int>(rng() % sym.d) + 1;
    g.lower = static_cast<int>(rng() % sym.d) + 1;
    return g;
  };
  auto z_degree = [](const FreeWord& w) {
    int z = 0, t = 0;
    for (const auto& g : w) (g.is_t ? t : z)++;
    return std::max(z, t);
  };
  // strategy agreement
  {
    bool ok = true;
    for (int trial = 0; trial < trials; ++trial) {
      FreeWord w;
      int len = 2 + static_cast<int>(rng() % (max_word_len - 1));
      for (int i = 0; i < len; ++i) w.push_back(random_symbol());
      if (z_degree(w) > max_z_degree) continue;
      Scalar a = integrate_element(sym, FreeElement::word(w), ReorderStrategy::LeftmostFirst);
      Scalar b = integrate_element(sym, FreeElement::word(w), ReorderStrategy::RightmostFirst);
      if (a != b) {
        ok = false;
        break;
      }
    }
    report.items.push_back({"strategy_agreement", ok,
                            std::to_string(trials) + " seeded words, two reduction orders"});
  }
  // ideal annihilation
  {
    auto rels = all_relation_elements(sym);
    bool ok = true;
    int done = 0;
    while (done < trials) {
      const FreeElement& r = rels[rng() % rels.size()];
      FreeWord x, y;
      int lx = static_cast<int>(rng() % 3);
      int ly = static_cast<int>(rng() % 3);
      for (int i = 0; i < lx; ++i) x.push_back(random_symbol());
      for (int i = 0; i < ly; ++i) y.push_back(random_symbol());
      FreeElement sandwich = FreeElement::word(x) * r * FreeElement::word(y);
      int deg = 0;
      for (const auto& [w, c] : sandwich.terms()) deg = std::max(deg, z_degree(w));
      if (deg > max_z_degree) continue;
      ++done;
      if (!integrate_element(sym, sandwich).is_zero()) {
        ok = false;
        break;
      }
    }
    report.items.push_back({"ideal_annihilation", ok,
                            std::to_string(trials) + " seeded relation sandwiches"});
  }
  return report;
}

}  // namespace qhaar
