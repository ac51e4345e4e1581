#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fmm/norms.hpp"
#include "fmm/slp.hpp"
#include "fmm/sparsify.hpp"

using namespace fmm;

namespace {
HMRep get(const char* name) { return load_scheme(*scheme_by_name(name)); }

long core_adds(const CoBTriple& c) {
  return static_cast<long>(c.Ls.nnz() + c.Rs.nnz() + c.Ps.nnz()) -
         static_cast<long>(c.Ls.rows() + c.Rs.rows() + c.Ps.rows());
}
}  // namespace

TEST_CASE("bundled change-of-basis fixture factors the accurate scheme exactly") {
  HMRep acc = get("accurate");
  CoBTriple cob = bundled_cob_triple();
  CHECK(verify_factorization(acc, cob));
  CHECK(cob.core_zpm1);
  CHECK(core_adds(cob) == 12);
  SUBCASE("perturbed core entry fails") {
    CoBTriple bad = cob;
    bad.Ls.at(0, 0) = bad.Ls.at(0, 0) + Coeff(1);
    CHECK_FALSE(verify_factorization(acc, bad));
  }
  SUBCASE("identity triple verifies on conventional") {
    HMRep conv = load_scheme(SchemeId::conventional(2, 2, 2));
    CoBTriple id;
    id.phi = id.psi = id.nu = CoeffMatrix(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      id.phi.at(i, i) = Coeff(1);
      id.psi.at(i, i) = Coeff(1);
      id.nu.at(i, i) = Coeff(1);
    }
    id.Ls = conv.L;
    id.Rs = conv.R;
    id.Ps = conv.P;
    CHECK(verify_factorization(conv, id));
  }
}

TEST_CASE("sparsify(accurate) reaches a 12-addition {0,±1} core with gamma2 = 7+3sqrt2") {
  HMRep acc = get("accurate");
  CoBTriple c = sparsify(acc);
  CHECK(c.core_zpm1);
  CHECK(verify_factorization(acc, c));
  CHECK(core_adds(c) == 12);
  HMRep core = core_as_rep(c, 2, 2, 2);
  CHECK(gamma2(core) == doctest::Approx(7 + 3 * std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("sparsify(winograd) reaches a 12-addition {0,±1} core") {
  HMRep w = get("winograd");
  CoBTriple c = sparsify(w);
  CHECK(c.core_zpm1);
  CHECK(verify_factorization(w, c));
  CHECK(core_adds(c) == 12);
}

TEST_CASE("sparsify(conventional) keeps the identity basis") {
  HMRep conv = load_scheme(SchemeId::conventional(2, 2, 2));
  CoBTriple c = sparsify(conv);
  CHECK(c.core_zpm1);
  CHECK(verify_factorization(conv, c));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(c.phi.at(i, j) == (i == j ? Coeff(1) : Coeff(0)));
      CHECK(c.nu.at(i, j) == (i == j ? Coeff(1) : Coeff(0)));
    }
  CHECK(c.Ls == conv.L);
  CHECK(c.Ps == conv.P);
}

TEST_CASE("core operation count never exceeds the original naive count") {
  for (const char* nm : {"strassen", "winograd", "accurate", "powers"}) {
    HMRep h = get(nm);
    CoBTriple c = sparsify(h);
    CHECK(verify_factorization(h, c));
    long naive = static_cast<long>(h.L.nnz() + h.R.nnz() + h.P.nnz()) -
                 static_cast<long>(h.L.rows() + h.R.rows() + h.P.rows());
    CHECK(core_adds(c) <= naive);
  }
}

TEST_CASE("cob quality") {
  SUBCASE("identity triple has factor 1") {
    HMRep conv = load_scheme(SchemeId::conventional(2, 2, 2));
    CoBTriple id;
    id.phi = id.psi = id.nu = CoeffMatrix(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      id.phi.at(i, i) = Coeff(1);
      id.psi.at(i, i) = Coeff(1);
      id.nu.at(i, i) = Coeff(1);
    }
    id.Ls = conv.L;
    id.Rs = conv.R;
    id.Ps = conv.P;
    CHECK(cob_quality(id, NormId::Max, NormId::Max).factor == doctest::Approx(1.0));
  }
  SUBCASE("bundled triple: gamma(mmab) = gamma(ab) * norm product") {
    CoBTriple cob = bundled_cob_triple();
    auto q = cob_quality(cob, NormId::Max, NormId::Max);
    HMRep core = core_as_rep(cob, 2, 2, 2);
    CHECK(q.gamma_mmab ==
          doctest::Approx(growth_factor(core, NormId::Max, NormId::Max) * q.factor)
              .epsilon(1e-12));
    CHECK(q.factor > 1.0);
  }
}
