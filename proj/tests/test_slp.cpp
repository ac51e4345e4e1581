#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fmm/schemes.hpp"
#include "fmm/slp.hpp"

using namespace fmm;

namespace {

HMRep get(const char* name) { return load_scheme(*scheme_by_name(name)); }

CoeffMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size(), c = rows.begin()->size();
  CoeffMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = Coeff(v);
    ++i;
  }
  return m;
}

std::vector<Coeff> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Coeff> v(n);
  for (auto& x : v) x = Coeff(num(rng), den(rng));
  return v;
}

std::vector<Coeff> matvec(const CoeffMatrix& m, const std::vector<Coeff>& x) {
  std::vector<Coeff> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) y[i] += m.at(i, j) * x[j];
  return y;
}

void check_equiv(const Slp& s, const CoeffMatrix& m, int trials = 100, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  REQUIRE(s.n_in == static_cast<int>(m.cols()));
  REQUIRE(s.n_out == static_cast<int>(m.rows()));
  for (int t = 0; t < trials; ++t) {
    auto x = random_vec(m.cols(), rng);
    auto expect = matvec(m, x);
    auto got = eval_slp(s, x);
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(got[i] == expect[i]);
  }
}

}  // namespace

TEST_CASE("naive slp") {
  SUBCASE("identity has no operations") {
    Slp s = naive_slp({from_ints({{1, 0}, {0, 1}}), LinOp::Tag::Generic});
    CHECK(s.counts().adds == 0);
    CHECK(s.counts().muldiv() == 0);
    check_equiv(s, from_ints({{1, 0}, {0, 1}}));
  }
  SUBCASE("strassen L: adds = nnz - rows") {
    HMRep st = get("strassen");
    Slp s = naive_slp({st.L, LinOp::Tag::L});
    CHECK(s.counts().adds == static_cast<long>(st.L.nnz()) - 7);
    CHECK(s.counts().adds == 5);
    check_equiv(s, st.L);
  }
  SUBCASE("mult counting excludes units") {
    CoeffMatrix m(1, 2);
    m.at(0, 0) = Coeff(3);
    m.at(0, 1) = Coeff(-1);
    Slp s = naive_slp({m, LinOp::Tag::Generic});
    CHECK(s.counts().adds == 1);
    CHECK(s.counts().mults == 1);
    check_equiv(s, m);
  }
}

TEST_CASE("cancellation-free elimination") {
  SUBCASE("colinear rows share one addition") {
    CoeffMatrix m = from_ints({{1, 1}, {1, 1}});
    Slp s = cancellation_free({m, LinOp::Tag::Generic});
    CHECK(s.counts().adds == 1);
    check_equiv(s, m);
  }
  SUBCASE("scaled colinear pair: 1 add + 2 mults") {
    CoeffMatrix m = from_ints({{1, 2}, {3, 6}});
    Slp s = cancellation_free({m, LinOp::Tag::Generic});
    CHECK(s.counts().adds == 1);
    CHECK(s.counts().muldiv() == 2);
    check_equiv(s, m);
  }
  SUBCASE("never worse than naive on all bundled parts") {
    for (const auto& nm : bundled_scheme_names()) {
      HMRep h = load_scheme(*scheme_by_name(nm));
      for (const CoeffMatrix* m : {&h.L, &h.R, &h.P}) {
        Slp nv = naive_slp({*m, LinOp::Tag::Generic});
        Slp cf = cancellation_free({*m, LinOp::Tag::Generic});
        CHECK(cf.counts().adds <= nv.counts().adds);
        CHECK(cf.counts().muldiv() <= nv.counts().muldiv());
        check_equiv(cf, *m, 20, 1234);
      }
    }
  }
  SUBCASE("phase-1 fixpoint: no colinear pair is left on rows with two entries") {
    // [[1,1,0],[1,1,1],[0,2,2],[1,0,1]] has (c0,c1) colinear in rows 0,1
    CoeffMatrix m = from_ints({{1, 1, 0}, {1, 1, 1}, {0, 2, 2}, {1, 0, 1}});
    Slp s = cancellation_free({m, LinOp::Tag::Generic});
    check_equiv(s, m);
    CHECK(s.counts().adds <= 4);
  }
}

TEST_CASE("kernel decomposition") {
  SUBCASE("dependent third row") {
    CoeffMatrix m = from_ints({{1, 0}, {0, 1}, {1, 1}});
    Slp s = kernel_decompose({m, LinOp::Tag::Generic});
    CHECK(s.counts().adds == 1);
    check_equiv(s, m);
  }
  SUBCASE("full rank square falls back to cancellation-free") {
    CoeffMatrix m = from_ints({{2, 1}, {1, 1}});
    Slp a = kernel_decompose({m, LinOp::Tag::Generic});
    Slp b = cancellation_free({m, LinOp::Tag::Generic});
    CHECK(a.counts().adds == b.counts().adds);
    CHECK(a.counts().muldiv() == b.counts().muldiv());
    check_equiv(a, m);
  }
  SUBCASE("oracle equivalence on bundled P matrices") {
    for (const char* nm : {"strassen", "winograd", "accurate", "powers"}) {
      HMRep h = get(nm);
      Slp s = kernel_decompose({h.P.transposed(), LinOp::Tag::Generic});
      check_equiv(s, h.P.transposed(), 25, 77);
    }
  }
}

TEST_CASE("tellegen transposition") {
  std::mt19937_64 rng(5);
  SUBCASE("transpose of identity naive slp") {
    Slp id = naive_slp({from_ints({{1, 0}, {0, 1}}), LinOp::Tag::Generic});
    Slp t = transpose_slp(id);
    CHECK(t.counts().adds == 0);
    check_equiv(t, from_ints({{1, 0}, {0, 1}}));
  }
  SUBCASE("transposition computes the transposed operator") {
    for (const char* nm : {"strassen", "accurate", "powers"}) {
      HMRep h = get(nm);
      for (const CoeffMatrix* m : {&h.L, &h.P}) {
        Slp s = kernel_decompose({*m, LinOp::Tag::Generic});
        Slp t = transpose_slp(s);
        check_equiv(t, m->transposed(), 20, 99);
      }
    }
  }
  SUBCASE("count identity: adds grows by n_out - n_in of the source") {
    for (const char* nm : {"strassen", "winograd", "accurate", "powers", "approx0661"}) {
      HMRep h = get(nm);
      for (const CoeffMatrix* m : {&h.L, &h.R, &h.P}) {
        for (int variant = 0; variant < 3; ++variant) {
          Slp s = variant == 0   ? naive_slp({*m, LinOp::Tag::Generic})
                  : variant == 1 ? cancellation_free({*m, LinOp::Tag::Generic})
                                 : kernel_decompose({*m, LinOp::Tag::Generic});
          Slp t = transpose_slp(s);
          CHECK(t.counts().adds - s.counts().adds == s.n_out - s.n_in);
          CHECK(t.counts().muldiv() == s.counts().muldiv());
        }
      }
    }
  }
  SUBCASE("double transposition restores counts and semantics") {
    HMRep h = get("accurate");
    Slp s = kernel_decompose({h.L, LinOp::Tag::L});
    Slp tt = transpose_slp(transpose_slp(s));
    CHECK(tt.counts().adds == s.counts().adds);
    CHECK(tt.counts().muldiv() == s.counts().muldiv());
    check_equiv(tt, h.L, 30, 13);
  }
  SUBCASE("inner-product duality <Mx,y> = <x,M^T y>") {
    HMRep h = get("powers");
    Slp s = best_of({h.L, LinOp::Tag::L});
    Slp t = transpose_slp(s);
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_vec(h.L.cols(), rng);
      auto y = random_vec(h.L.rows(), rng);
      auto mx = eval_slp(s, x);
      auto mty = eval_slp(t, y);
      Coeff lhs, rhs;
      for (std::size_t i = 0; i < mx.size(); ++i) lhs += mx[i] * y[i];
      for (std::size_t j = 0; j < mty.size(); ++j) rhs += x[j] * mty[j];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("best_of reaches the published operation counts") {
  auto total = [](const HMRep& h) {
    Slp::Counts t;
    for (const CoeffMatrix* m : {&h.L, &h.R, &h.P}) {
      Slp s = best_of({*m, LinOp::Tag::Generic});
      check_equiv(s, *m, 100, 4242);
      auto c = s.counts();
      t.adds += c.adds;
      t.mults += c.mults;
      t.div2 += c.div2;
    }
    return t;
  };
  SUBCASE("strassen in 18 additions") {
    auto c = total(get("strassen"));
    CHECK(c.adds <= 18);
    CHECK(c.muldiv() == 0);
  }
  SUBCASE("winograd in 15 additions") {
    auto c = total(get("winograd"));
    CHECK(c.adds <= 15);
    CHECK(c.muldiv() == 0);
  }
  SUBCASE("accurate variant in 24 additions and 12 mul/div") {
    auto c = total(get("accurate"));
    CHECK(c.adds <= 24);
    CHECK(c.muldiv() <= 12);
  }
  SUBCASE("powers variant in 27 additions and 6 halvings") {
    auto c = total(get("powers"));
    CHECK(c.adds <= 27);
    CHECK(c.div2 <= 6);
    CHECK(c.mults == 0);
  }
  SUBCASE("monotonicity vs naive everywhere") {
    for (const auto& nm : bundled_scheme_names()) {
      HMRep h = load_scheme(*scheme_by_name(nm));
      for (const CoeffMatrix* m : {&h.L, &h.R, &h.P}) {
        auto nv = naive_slp({*m, LinOp::Tag::Generic}).counts();
        auto bst = best_of({*m, LinOp::Tag::Generic}).counts();
        CHECK(bst.adds <= nv.adds);
        CHECK(bst.muldiv() <= nv.muldiv());
      }
    }
  }
}

TEST_CASE("codegen report") {
  OperationCountReport rep = codegen_report(get("strassen"));
  CHECK(rep.lines.size() == 3);
  CHECK(rep.best_total.adds <= 18);
  CHECK(rep.naive_total.adds == 5 + 5 + 8);
  std::string csv = rep.to_csv();
  CHECK(csv.find("part,naive_adds") == 0);
  CHECK(csv.find("total,") != std::string::npos);
  SUBCASE("conventional 2x2x2: P side has 4 adds, L/R none") {
    OperationCountReport c = codegen_report(load_scheme(SchemeId::conventional(2, 2, 2)));
    CHECK(c.lines[0].best.adds == 0);
    CHECK(c.lines[1].best.adds == 0);
    CHECK(c.lines[2].best.adds == 4);
  }
}

TEST_CASE("slp text form") {
  HMRep h = get("accurate");
  Slp s = best_of({h.L, LinOp::Tag::L});
  std::string text = s.to_text();
  CHECK(text.find(":=") != std::string::npos);
  CHECK(text.find("sqrt3*") != std::string::npos);
  CHECK(text.find("o0 :=") != std::string::npos);
}

TEST_CASE("eval_slp float path tracks the exact projection") {
  HMRep h = get("accurate");
  Slp s = best_of({h.L, LinOp::Tag::L});
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    auto x = random_vec(h.L.cols(), rng);
    std::vector<double> xd(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xd[i] = x[i].to_double();
    auto exact = eval_slp(s, x);
    auto fp = eval_slp(s, xd);
    for (std::size_t i = 0; i < exact.size(); ++i)
      CHECK(std::abs(exact[i].to_double() - fp[i]) <=
            1e-12 * (1.0 + std::abs(exact[i].to_double())));
  }
}
