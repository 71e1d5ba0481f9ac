#pragma once

#include <cstdint>

#include "qhaar/characters.hpp"

namespace qhaar {

struct SuiteItem {
  std::string name;
  bool pass = false;
  std::string info;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteItem> items;
  bool all_pass() const {
    for (const auto& item : items)
      if (!item.pass) return false;
    return true;
  }
};

// E^2 = E, mutual orthogonality, sum = 1, Murphy eigenvalues [content]_q,
// tau(E_t) = k_lambda, Murphy annihilation with the tight bound, and
// ker(rho) = blocks outside the hook region
SuiteReport run_suite_idempotents(const HeckeSymmetry& sym, int max_n);

// P_{n+1}(L_{n+1} - [s-r]_q) = P_n, represented, n = 0..max_n
SuiteReport run_suite_recursion(const HeckeSymmetry& sym, int max_n);

// invariance conditions (i), (ii), (iii) on I_n
SuiteReport run_suite_conditions(const HeckeSymmetry& sym, int max_n,
                                 int max_n_condition_iii = -1);

SuiteReport run_suite_trace_expansion(const HeckeSymmetry& sym, int max_n);

// dual-basis behaviour: intertwiner identity and tau-pairing duality
SuiteReport run_suite_casimir(int max_n);

// seeded reorder-strategy agreement and relation-ideal annihilation
SuiteReport run_suite_welldefined(const HeckeSymmetry& sym, int max_word_len,
                                  std::uint64_t seed, int trials, int max_z_degree);

}  // namespace qhaar
