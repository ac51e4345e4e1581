#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fmm/bench.hpp"
#include "fmm/executor.hpp"
#include "fmm/norms.hpp"

using namespace fmm;

namespace {

DMat random_mat(std::size_t r, std::size_t c, std::uint64_t seed, double lo = -1, double hi = 1) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  DMat m(r, c);
  for (double& x : m.a) x = u(rng);
  return m;
}

DMat random_pm1(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> u(0, 2);
  DMat m(r, c);
  for (double& x : m.a) x = static_cast<double>(u(rng) - 1);
  return m;
}

double rel_err(const DMat& got, const DMat& expect) {
  double e = 0, scale = 0;
  for (std::size_t i = 0; i < got.a.size(); ++i) {
    e = std::max(e, std::abs(got.a[i] - expect.a[i]));
    scale = std::max(scale, std::abs(expect.a[i]));
  }
  return scale > 0 ? e / scale : e;
}

}  // namespace

TEST_CASE("classical_mm basics") {
  DMat I(4, 4);
  for (int i = 0; i < 4; ++i) I.at(i, i) = 1.0;
  DMat A = random_mat(4, 4, 1);
  DMat C = classical_mm(I, A);
  for (std::size_t i = 0; i < A.a.size(); ++i) CHECK(C.a[i] == A.a[i]);

  DMat x(1, 1), y(1, 1);
  x.at(0, 0) = 3.5;
  y.at(0, 0) = -2.0;
  CHECK(classical_mm(x, y).at(0, 0) == -7.0);

  SUBCASE("against the double-double reference on 64x64") {
    DMat A64 = random_mat(64, 64, 2), B64 = random_mat(64, 64, 3);
    DMat C64 = classical_mm(A64, B64);
    DMat R64 = reference_mm(A64, B64);
    double amax = 0, bmax = 0, err = 0;
    for (double v : A64.a) amax = std::max(amax, std::abs(v));
    for (double v : B64.a) bmax = std::max(bmax, std::abs(v));
    for (std::size_t i = 0; i < C64.a.size(); ++i)
      err = std::max(err, std::abs(C64.a[i] - R64.a[i]));
    CHECK(err <= 64 * 0x1p-53 * amax * bmax * 1.01);
  }
}

TEST_CASE("recursive_mm matches classical within 1e-11 relative") {
  for (const char* nm : {"strassen", "winograd", "accurate", "powers", "powrot", "approx0695",
                         "approx0661", "altbasis"}) {
    CAPTURE(nm);
    SchemeId id = *scheme_by_name(nm);
    for (std::size_t ell : {1u, 2u, 3u}) {
      std::size_t n = std::size_t(8) << ell;
      DMat A = random_mat(n, n, 7 * ell + 1), B = random_mat(n, n, 7 * ell + 2);
      RecursionPlan plan;
      plan.levels.assign(ell, id);
      DMat C = recursive_mm(plan, A, B);
      DMat ref = reference_mm(A, B);
      CHECK(rel_err(C, ref) <= 1e-11);
    }
  }
  SUBCASE("smirnov 3x3x6 on a rectangular size") {
    SchemeId id = *scheme_by_name("smirnov336acc");
    DMat A = random_mat(9, 9, 5), B = random_mat(9, 36, 6);
    RecursionPlan plan;
    plan.levels.assign(2, id);
    DMat C = recursive_mm(plan, A, B);
    DMat ref = reference_mm(A, B);
    CHECK(rel_err(C, ref) <= 1e-11);
  }
}

TEST_CASE("dyadic schemes are exact on small-integer inputs") {
  for (const char* nm : {"strassen", "winograd", "powers"}) {
    CAPTURE(nm);
    SchemeId id = *scheme_by_name(nm);
    for (std::size_t n : {16u, 64u}) {
      DMat A = random_pm1(n, n, n + 17), B = random_pm1(n, n, n + 18);
      RecursionPlan plan;
      plan.levels.assign(n == 16 ? 2 : 3, id);
      DMat C = recursive_mm(plan, A, B);
      DMat ref = classical_mm(A, B);
      for (std::size_t i = 0; i < C.a.size(); ++i) CHECK(C.a[i] == ref.a[i]);
    }
  }
}

TEST_CASE("measured error stays below the predicted bound") {
  for (const char* nm : {"strassen", "winograd", "accurate"}) {
    CAPTURE(nm);
    SchemeId id = *scheme_by_name(nm);
    const HMRep& rep = compile_scheme(id).rep;
    std::size_t n = 128, ell = 4;
    DMat A = random_mat(n, n, 21), B = random_mat(n, n, 22);
    RecursionPlan plan;
    plan.levels.assign(ell, id);
    DMat C = recursive_mm(plan, A, B);
    DMat ref = reference_mm(A, B);
    double err = 0, amax = 0, bmax = 0;
    for (std::size_t i = 0; i < C.a.size(); ++i) err = std::max(err, std::abs(C.a[i] - ref.a[i]));
    for (double v : A.a) amax = std::max(amax, std::abs(v));
    for (double v : B.a) bmax = std::max(bmax, std::abs(v));
    double e = error_bound(rep, NormId::Max, NormId::Max, ell, n >> ell).e_ell;
    CHECK(err <= e * amax * bmax * 0x1p-53);
  }
}

TEST_CASE("plan associativity is bitwise") {
  SchemeId s = *scheme_by_name("strassen");
  SchemeId w = *scheme_by_name("winograd");
  std::vector<SchemeId> all = {s, w, s};
  DMat A = random_mat(64, 64, 31), B = random_mat(64, 64, 32);
  RecursionPlan whole;
  whole.levels = all;
  DMat c1 = recursive_mm(whole, A, B);
  std::span<const SchemeId> span_all(all);
  DMat c2 = recursive_mm_split(span_all.subspan(0, 1), span_all.subspan(1), A, B);
  DMat c3 = recursive_mm_split(span_all.subspan(0, 2), span_all.subspan(2), A, B);
  for (std::size_t i = 0; i < c1.a.size(); ++i) {
    CHECK(c1.a[i] == c2.a[i]);
    CHECK(c1.a[i] == c3.a[i]);
  }
}

TEST_CASE("mixed rectangular schedule") {
  // 54x54 inputs: first 6x3x3, then 3x3x6, then 3x6x3 on the leaves.
  SchemeId m336 = *scheme_by_name("smirnov336acc");
  DMat A = random_mat(54, 54, 41), B = random_mat(54, 54, 42);
  RecursionPlan plan;
  plan.levels = {m336, m336};  // 54 = 3*3*6: two 3x3x6 levels leave 6x6 x 6x(54/36)...
  // dimensions must factor exactly; 3x3x6 twice needs N divisible by 36
  CHECK_THROWS_AS((void)recursive_mm(plan, A, B), std::invalid_argument);
  plan.levels = {m336};
  DMat C = recursive_mm(plan, A, B);
  DMat ref = reference_mm(A, B);
  CHECK(rel_err(C, ref) <= 1e-11);
}

TEST_CASE("altbasis_mm") {
  AltPlan plan;
  plan.cob = bundled_cob_triple();
  SUBCASE("zero levels degrades to classical") {
    plan.levels = 0;
    DMat A = random_mat(8, 8, 51), B = random_mat(8, 8, 52);
    DMat C = altbasis_mm(plan, A, B);
    DMat ref = classical_mm(A, B);
    for (std::size_t i = 0; i < C.a.size(); ++i) CHECK(C.a[i] == ref.a[i]);
  }
  SUBCASE("matches the plain executor within 1e-11") {
    SchemeId acc = *scheme_by_name("accurate");
    for (std::size_t ell : {1u, 2u, 3u}) {
      plan.levels = ell;
      std::size_t n = std::size_t(8) << ell;
      DMat A = random_mat(n, n, 60 + ell), B = random_mat(n, n, 70 + ell);
      DMat C = altbasis_mm(plan, A, B);
      RecursionPlan rp;
      rp.levels.assign(ell, acc);
      DMat P = recursive_mm(rp, A, B);
      CHECK(rel_err(C, P) <= 1e-11);
      DMat ref = reference_mm(A, B);
      CHECK(rel_err(C, ref) <= 1e-10);
    }
  }
}
