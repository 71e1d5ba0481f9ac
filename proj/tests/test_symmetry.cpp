#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhaar/hecke.hpp"
#include "qhaar/json_io.hpp"
#include "qhaar/symmetry.hpp"

using namespace qhaar;

namespace {
Scalar q() { return Scalar::q_pow(1); }
}  // namespace

TEST_CASE("one-dimensional symmetry") {
  HeckeSymmetry sym = build_drinfeld_jimbo(1);
  CHECK(sym.R.at(0, 0) == q());
  CHECK(sym.P.at(0, 0) == q().inverse());
  CHECK(sym.C.at(0, 0) == Scalar::q_pow(-1));
  CHECK(sym.D.at(0, 0) == Scalar::q_pow(-1));
  CHECK(sym.C.trace() == -q_int(-1));
  CHECK(validate(sym).all_pass());
}

TEST_CASE("standard two-dimensional symmetry") {
  HeckeSymmetry sym = build_drinfeld_jimbo(2);
  // entries: q on matched diagonal, q-1 below, p on the flip
  CHECK(sym.r_entry(1, 1, 1, 1) == q());
  CHECK(sym.r_entry(2, 2, 2, 2) == q());
  CHECK(sym.r_entry(2, 1, 2, 1) == q() - Scalar(1));
  CHECK(sym.r_entry(1, 2, 1, 2) == Scalar(0));
  CHECK(sym.r_entry(2, 1, 1, 2) == Scalar::p_pow(1));
  CHECK(sym.r_entry(1, 2, 2, 1) == Scalar::p_pow(1));
  SMatrix id = SMatrix::identity(4);
  CHECK((sym.R - q() * id) * (sym.R + id) == SMatrix(4, 4));
  CHECK(validate(sym).all_pass());
  CHECK(sym.C.trace() == -q_int(-2));
}

TEST_CASE("super symmetry entries and axioms") {
  HeckeSymmetry sym = build_manin_super(1, 1);
  CHECK(sym.r_entry(1, 1, 1, 1) == q());
  CHECK(sym.r_entry(2, 2, 2, 2) == Scalar(-1));
  CHECK(sym.r_entry(1, 2, 1, 2) == q() - Scalar(1));  // k=i<j=l
  CHECK(sym.r_entry(2, 1, 2, 1) == Scalar(0));
  CHECK(sym.C.trace() == Scalar(0));  // -[0]_q
  CHECK(validate(sym).all_pass());

  HeckeSymmetry big = build_manin_super(2, 1);
  CHECK(validate(big).all_pass());
  CHECK(big.C.trace() == -q_int(-1));
  CHECK(big.C.trace() == Scalar::q_pow(-1));
}

TEST_CASE("corrupting one entry breaks the braid identity") {
  HeckeSymmetry sym = build_drinfeld_jimbo(2);
  sym.R.at(1, 1) += Scalar(1);
  ValidationReport report = validate(sym);
  bool ybe = true;
  for (const auto& c : report.checks)
    if (c.name == "yang_baxter") ybe = c.pass;
  CHECK(!ybe);
}

TEST_CASE("closure failure is reported") {
  // nilpotent matrix: the partial-transpose system is singular
  SMatrix r(4, 4);
  r.at(0, 1) = 1;
  CHECK_THROWS_AS(closure_inverse(r, 2), NotClosedError);
}

TEST_CASE("reflection product is scalar") {
  struct Expectation {
    HeckeSymmetry sym;
    int exponent;  // CD = DC = q^{exponent}
    bool matches_q_reading;
  };
  std::vector<Expectation> cases = {
      {build_drinfeld_jimbo(1), -2, false},
      {build_drinfeld_jimbo(2), -3, false},
      {build_drinfeld_jimbo(3), -4, false},
      {build_manin_super(1, 1), -1, true},  // r = s is the only match
      {build_manin_super(2, 1), -2, false},
  };
  for (const auto& c : cases) {
    CdReport rep = check_cd_relation(c.sym);
    CHECK(rep.commute);
    CHECK(rep.is_scalar);
    CHECK(rep.scalar == Scalar::q_pow(c.exponent));
    CHECK(rep.scalar == Scalar::q_pow(c.sym.birank_s - c.sym.birank_r - 1));
    CHECK(rep.matches_candidate == c.matches_q_reading);
  }
}

TEST_CASE("exterior power dimensions") {
  CHECK(poincare_prefix(build_drinfeld_jimbo(2), 3) == std::vector<int>({1, 2, 1, 0}));
  CHECK(poincare_prefix(build_drinfeld_jimbo(1), 2) == std::vector<int>({1, 1, 0}));
  CHECK(poincare_prefix(build_manin_super(1, 1), 3) == std::vector<int>({1, 2, 2, 2}));
}

TEST_CASE("reflection tensor powers centralize the braid action") {
  for (HeckeSymmetry sym : {build_manin_super(1, 1), build_drinfeld_jimbo(2)}) {
    for (int n = 2; n <= 3; ++n) {
      SMatrix cn = SMatrix::identity(1), dn = SMatrix::identity(1);
      for (int i = 0; i < n; ++i) {
        cn = kron(cn, sym.C);
        dn = kron(dn, sym.D);
      }
      for (int i = 1; i <= n - 1; ++i) {
        SMatrix ri = embed(sym.R, i, n, sym.d);
        CHECK(cn * ri == ri * cn);
        CHECK(dn * ri == ri * dn);
      }
    }
  }
}

TEST_CASE("symmetrizer and antisymmetrizer represent idempotently") {
  for (HeckeSymmetry sym : {build_manin_super(1, 1), build_drinfeld_jimbo(2)}) {
    for (int n = 2; n <= 3; ++n) {
      const Rep& rep = Rep::get(sym, n);
      SMatrix x = rep.rho(symmetrizer(n));
      SMatrix y = rep.rho(antisymmetrizer(n));
      CHECK(x * x == x);
      CHECK(y * y == y);
    }
  }
}

TEST_CASE("custom symmetry round-trips through the wire format") {
  HeckeSymmetry original = build_manin_super(1, 1);
  Json j = to_json(original);
  HeckeSymmetry loaded = symmetry_from_json(j);
  CHECK(loaded.R == original.R);
  CHECK(loaded.P == original.P);
  CHECK(loaded.C == original.C);
  CHECK(loaded.D == original.D);
  CHECK(loaded.parities == original.parities);
  CHECK(validate(loaded).all_pass());
}
