#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qhaar/combinatorics.hpp"

using namespace qhaar;

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0).front().parts.empty());
  auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({3}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1, 1}));
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(6).size() == 11);
}

TEST_CASE("hooks and contents") {
  auto single = hooks_and_contents(Partition({1}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].hook == 1);
  CHECK(single[0].content == 0);

  std::multiset<int> hooks21, contents21;
  for (auto& c : hooks_and_contents(Partition({2, 1}))) {
    hooks21.insert(c.hook);
    contents21.insert(c.content);
  }
  CHECK(hooks21 == std::multiset<int>({3, 1, 1}));
  CHECK(contents21 == std::multiset<int>({0, 1, -1}));

  std::multiset<int> hooks22;
  for (auto& c : hooks_and_contents(Partition({2, 2}))) hooks22.insert(c.hook);
  CHECK(hooks22 == std::multiset<int>({3, 2, 2, 1}));
}

TEST_CASE("tableau counts agree with the hook formula") {
  CHECK(d_lambda(Partition({4})) == 1);
  CHECK(d_lambda(Partition({2, 1})) == 2);
  CHECK(d_lambda(Partition({2, 2})) == 2);
  for (int n = 0; n <= 6; ++n) {
    std::int64_t sum_sq = 0;
    for (const auto& lam : partitions_of(n)) {
      auto tabs = standard_tableaux(lam);
      CHECK(d_lambda(lam) == static_cast<std::int64_t>(tabs.size()));
      sum_sq += d_lambda(lam) * d_lambda(lam);
    }
    std::int64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(sum_sq == fact);
  }
}

TEST_CASE("k_lambda") {
  Scalar q = Scalar::q_pow(1);
  CHECK(k_lambda(Partition({1})) == Scalar(1));
  CHECK(k_lambda(Partition({2})) == q_int(2).inverse());
  CHECK(k_lambda(Partition({1, 1})) == q / q_int(2));
}

TEST_CASE("hook-bounded partitions") {
  CHECK(gamma_set(1, 0, 3) == std::vector<Partition>{Partition({3})});
  CHECK(gamma_set(1, 1, 3) ==
        std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
  CHECK(gamma_set(2, 0, 2) == std::vector<Partition>{Partition({2}), Partition({1, 1})});
}

TEST_CASE("rectangle-containing partitions") {
  CHECK(omega_set(1, 1, 0).empty());
  CHECK(omega_set(1, 0, 2) == std::vector<Partition>{Partition({2})});
  CHECK(omega_set(1, 1, 2) == std::vector<Partition>{Partition({2}), Partition({1, 1})});

  // omega = {lambda in gamma : lambda_r >= s}; the rectangle decomposition
  // recombines to lambda
  for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {1, 1}, {2, 1}}) {
    for (int n = 0; n <= 6; ++n) {
      auto gamma = gamma_set(r, s, n);
      auto omega = omega_set(r, s, n);
      std::vector<Partition> expected;
      for (const auto& lam : gamma)
        if (r == 0 || s == 0 || lam.part(r) >= s) expected.push_back(lam);
      CHECK(omega == expected);
      for (const auto& lam : omega) {
        auto [mu, nu] = rectangle_decompose(lam, r, s);
        CHECK(mu.rows() <= r);
        CHECK(nu.rows() <= s);
        CHECK(lam.weight() == r * s + mu.weight() + nu.weight());
        std::vector<int> parts;
        for (int i = 1; i <= r; ++i)
          if (s + mu.part(i) > 0) parts.push_back(s + mu.part(i));
        Partition nu_conj = nu.conjugate();
        for (int i = 1; i <= nu_conj.rows(); ++i) parts.push_back(nu_conj.part(i));
        CHECK(Partition(parts) == lam);
      }
    }
  }
}

TEST_CASE("content bound keeps p_lambda denominators nonzero") {
  for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}}) {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& lam : gamma_set(r, s, n)) {
        for (const auto& c : hooks_and_contents(lam)) {
          if (c.row <= r && c.col <= s) continue;
          CHECK(c.content != s - r);
        }
      }
      for (const auto& lam : omega_set(r, s, n)) CHECK(!p_lambda(lam, r, s).is_zero());
    }
  }
}

TEST_CASE("p_lambda closed values") {
  Scalar q = Scalar::q_pow(1);
  CHECK(p_lambda(Partition({1}), 1, 1) == Scalar(1));
  CHECK(p_lambda(Partition({2}), 1, 0) == Scalar::q_pow(2) / q_int(2));
  CHECK(p_lambda(Partition({1}), 1, 0) == q);
}

TEST_CASE("standard tableaux and contents") {
  auto row = standard_tableaux(Partition({2}));
  REQUIRE(row.size() == 1);
  CHECK(row[0].content_of(2) == 1);
  auto col = standard_tableaux(Partition({1, 1}));
  REQUIRE(col.size() == 1);
  CHECK(col[0].content_of(2) == -1);
  auto hooked = standard_tableaux(Partition({2, 1}));
  REQUIRE(hooked.size() == 2);
  std::set<std::vector<int>> sequences;
  for (const auto& t : hooked)
    sequences.insert({t.content_of(1), t.content_of(2), t.content_of(3)});
  CHECK(sequences == std::set<std::vector<int>>({{0, 1, -1}, {0, -1, 1}}));
}

TEST_CASE("permutation tools") {
  Permutation id3 = Permutation::identity(3);
  CHECK(length(id3) == 0);
  CHECK(reduced_word(id3).empty());

  Permutation s1 = Permutation::transposition(1, 2, 2);
  CHECK(reduced_word(s1) == std::vector<int>{1});
  CHECK(length(s1) == 1);

  Permutation longest({3, 2, 1});
  CHECK(length(longest) == 3);
  CHECK(reduced_word(longest) == std::vector<int>{1, 2, 1});

  CHECK(all_permutations(0).size() == 1);
  CHECK(all_permutations(4).size() == 24);

  for (const auto& w : all_permutations(4)) {
    auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == length(w));
    Permutation acc = Permutation::identity(4);
    for (int letter : word) acc = acc.compose(Permutation::adjacent(letter, 4));
    CHECK(acc == w);
    CHECK(w.compose(w.inverse()) == Permutation::identity(4));
    CHECK(length(w.inverse()) == length(w));
  }
}
