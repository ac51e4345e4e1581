#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fmm/isotropy.hpp"
#include "fmm/norms.hpp"

using namespace fmm;

namespace {
HMRep get(const char* name) { return load_scheme(*scheme_by_name(name)); }

Isotropy random_isotropy(std::mt19937_64& rng, std::size_t m, std::size_t k, std::size_t n) {
  std::normal_distribution<double> g(0, 1);
  auto mk = [&](std::size_t s) {
    while (true) {
      Eigen::MatrixXd a(s, s);
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = g(rng);
      if (std::abs(a.determinant()) > 1e-3) return a;
    }
  };
  return Isotropy(mk(m), mk(k), mk(n));
}

Isotropy random_rotation(std::mt19937_64& rng, std::size_t m, std::size_t k, std::size_t n) {
  std::normal_distribution<double> g(0, 1);
  auto mk = [&](std::size_t s) {
    Eigen::MatrixXd a(s, s);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = g(rng);
    Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
    return q;
  };
  return Isotropy(mk(m), mk(k), mk(n));
}

double max_entry_diff(const CoeffMatrix& a, const CoeffMatrix& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      d = std::max(d, std::abs(a.at(i, j).to_double() - b.at(i, j).to_double()));
  return d;
}
}  // namespace

TEST_CASE("identity isotropy is a fixed point") {
  HMRep s = get("strassen");
  HMRep t = act(Isotropy::identity(2, 2, 2), s);
  CHECK(max_entry_diff(s.L, t.L) == 0.0);
  CHECK(max_entry_diff(s.R, t.R) == 0.0);
  CHECK(max_entry_diff(s.P, t.P) == 0.0);
  CHECK_FALSE(t.exact);
}

TEST_CASE("isotropy action preserves the matmul identity") {
  std::mt19937_64 rng(11);
  for (const char* nm : {"strassen", "winograd", "accurate"}) {
    HMRep h = get(nm);
    for (int t = 0; t < 10; ++t) {
      Isotropy g = random_isotropy(rng, 2, 2, 2);
      HMRep out = act(g, h);
      auto rep = validate_matmul(out);
      CHECK(rep.valid());
      CHECK(out.r == h.r);
    }
  }
  SUBCASE("3x3x6 as well") {
    HMRep h = get("smirnov336acc");
    Isotropy g = random_isotropy(rng, 3, 3, 6);
    CHECK(validate_matmul(act(g, h)).valid());
  }
}

TEST_CASE("the known optimal point reaches 2*sqrt2 + 16/sqrt3 on strassen") {
  HMRep s = get("strassen");
  double rho = std::pow(4.0 / 3.0, 0.25), xi = -0.5;
  Eigen::MatrixXd u(2, 2);
  u << rho, rho * xi, 0, 1 / rho;
  HMRep t = act(Isotropy(u, u, u), s);
  double expect = 2 * std::sqrt(2.0) + 16 / std::sqrt(3.0);
  CHECK(gamma2(t) == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("undoing the known diagonal isotropy recovers the original smirnov growth factor") {
  // The accurate 3x3x6 scheme is d . original with d = (I, I, diag(1/4,2,2,2,1/4,2));
  // undoing d must keep validity and land on the original gamma_2 = 395.03.
  HMRep sm = get("smirnov336acc");
  Eigen::VectorXd d(6);
  d << 0.25, 2, 2, 2, 0.25, 2;
  Eigen::MatrixXd wd = d.asDiagonal();
  Isotropy fwd(Eigen::MatrixXd::Identity(3, 3), Eigen::MatrixXd::Identity(3, 3), wd);
  Isotropy bwd(Eigen::MatrixXd::Identity(3, 3), Eigen::MatrixXd::Identity(3, 3),
               Eigen::MatrixXd(wd.inverse()));
  HMRep h1 = act(fwd, sm), h2 = act(bwd, sm);
  CHECK(validate_matmul(h1).valid());
  CHECK(validate_matmul(h2).valid());
  double target = 395.03;
  double got = std::min(std::abs(gamma2(h1) - target), std::abs(gamma2(h2) - target));
  CHECK(got < 0.4);
}

TEST_CASE("compose") {
  std::mt19937_64 rng(5);
  HMRep s = get("strassen");
  Isotropy g1 = random_isotropy(rng, 2, 2, 2);
  Isotropy g2 = random_isotropy(rng, 2, 2, 2);
  SUBCASE("identity is neutral") {
    Isotropy id = Isotropy::identity(2, 2, 2);
    Isotropy c = compose(id, g1);
    CHECK((c.U - g1.U).norm() < 1e-12);
  }
  SUBCASE("inverse composes to identity") {
    Isotropy ginv(g1.U.inverse(), g1.V.inverse(), g1.W.inverse());
    Isotropy c = compose(g1, ginv);
    CHECK((c.U - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-9);
    CHECK((c.V - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-9);
  }
  SUBCASE("action is compatible with composition") {
    HMRep a = act(compose(g1, g2), s);
    HMRep b = act(g1, act(g2, s));
    CHECK(max_entry_diff(a.L, b.L) < 1e-9);
    CHECK(max_entry_diff(a.R, b.R) < 1e-9);
    CHECK(max_entry_diff(a.P, b.P) < 1e-9);
  }
}

TEST_CASE("iwasawa parametrization") {
  SUBCASE("all-one rho, zero xi is the identity") {
    Isotropy g = iwasawa(IwasawaPoint::identity(2, 2, 2));
    CHECK((g.U - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-15);
  }
  SUBCASE("2x2 factor structure") {
    IwasawaPoint pt = IwasawaPoint::identity(2, 2, 2);
    pt.rho[0] = {1.5};
    pt.xi[0] = {-0.25};
    Isotropy g = iwasawa(pt);
    CHECK(g.U(0, 0) == doctest::Approx(1.5));
    CHECK(g.U(0, 1) == doctest::Approx(1.5 * -0.25));
    CHECK(g.U(1, 0) == doctest::Approx(0));
    CHECK(g.U(1, 1) == doctest::Approx(1 / 1.5));
    CHECK(g.U.determinant() == doctest::Approx(1).epsilon(1e-12));
  }
  SUBCASE("parameter counts follow (s+2)(s-1)/2 per dimension") {
    IwasawaPoint p336 = IwasawaPoint::identity(3, 3, 6);
    CHECK(p336.param_count() == 5 + 5 + 20);
    CHECK(IwasawaPoint::identity(2, 2, 2).param_count() == 6);
  }
  SUBCASE("non-positive rho rejected") {
    IwasawaPoint pt = IwasawaPoint::identity(2, 2, 2);
    pt.rho[0] = {0.0};
    CHECK_THROWS_AS((void)iwasawa(pt), std::invalid_argument);
  }
}

TEST_CASE("gamma2 invariances") {
  std::mt19937_64 rng(17);
  HMRep s = get("strassen");
  double g0 = gamma2(s);
  SUBCASE("orthogonal triple invariance") {
    for (int t = 0; t < 10; ++t) {
      Isotropy q = random_rotation(rng, 2, 2, 2);
      CHECK(gamma2(act(q, s)) == doctest::Approx(g0).epsilon(1e-9));
    }
  }
  SUBCASE("scalar rescaling is absorbed by determinant normalization") {
    Isotropy g1 = random_isotropy(rng, 2, 2, 2);
    Isotropy g2(g1.U * 7.5, g1.V, g1.W);
    CHECK(gamma2(act(g2, s)) == doctest::Approx(gamma2(act(g1, s))).epsilon(1e-9));
  }
}

TEST_CASE("restricted uuu scan finds the known optimum on strassen") {
  UuuScanResult r = restricted_uuu_scan(get("strassen"));
  CHECK(r.gamma2 == doctest::Approx(12.066032).epsilon(1e-5));
  CHECK(r.rho == doctest::Approx(std::pow(4.0 / 3.0, 0.25)).epsilon(1e-3));
  CHECK(r.xi == doctest::Approx(-0.5).epsilon(2e-3));
  SUBCASE("conventional stays at 8") {
    UuuScanResult c = restricted_uuu_scan(load_scheme(SchemeId::conventional(2, 2, 2)));
    CHECK(c.gamma2 == doctest::Approx(8).epsilon(1e-6));
  }
  SUBCASE("the accurate scheme is already optimal in this family") {
    UuuScanResult a = restricted_uuu_scan(get("accurate"));
    CHECK(a.gamma2 == doctest::Approx(12.0660).epsilon(1e-4));
  }
}

TEST_CASE("minimize_gamma2 descends and never worsens") {
  DescentOptions fast;
  fast.restarts = 8;
  fast.max_evals_per_restart = 4000;
  fast.seed = 99;
  SUBCASE("strassen reaches the orbit optimum region") {
    DescentResult r = minimize_gamma2(get("strassen"), fast);
    CHECK(r.gamma2 <= 12.07);
    CHECK(r.gamma2 >= 11.7554696);  // the lower bound is never crossed
    CHECK(validate_matmul(r.transformed).valid());
  }
  SUBCASE("already-optimal starting point does not move much") {
    HMRep acc = get("accurate");
    DescentResult r = minimize_gamma2(acc, fast);
    CHECK(r.gamma2 <= gamma2(acc) + 1e-12);
    CHECK(gamma2(acc) - r.gamma2 < 1e-4);
  }
  SUBCASE("monotone in budget") {
    DescentOptions small = fast, large = fast;
    small.restarts = 2;
    large.restarts = 6;
    double a = minimize_gamma2(get("winograd"), small).gamma2;
    double b = minimize_gamma2(get("winograd"), large).gamma2;
    CHECK(b <= a + 1e-12);
  }
  SUBCASE("snap keeps the value") {
    DescentOptions snap = fast;
    snap.snap = true;
    DescentResult r = minimize_gamma2(get("strassen"), snap);
    CHECK(r.gamma2 <= 12.07);
  }
}
