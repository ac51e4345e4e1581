#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>

#include "fmm/schemes.hpp"
#include "fmm/sms.hpp"

using namespace fmm;

TEST_CASE("coefficient arithmetic in Q(sqrt3)") {
  Coeff half(1, 2);
  Coeff s3 = Coeff::sqrt_term(Rational(1), 3);
  CHECK((s3 * s3) == Coeff(3));
  CHECK((half + half) == Coeff(1));
  Coeff x = half + Coeff::sqrt_term(Rational(1, 3), 3);  // 1/2 + sqrt3/3
  Coeff inv = Coeff(1) / x;
  CHECK((x * inv) == Coeff(1));
  CHECK(x.sign() == 1);
  CHECK((-x).sign() == -1);
  // sign with opposite-sign parts: 1 - (2/3)sqrt3 < 0 since 3*(4/9) > 1
  Coeff y = Coeff(1) + Coeff::sqrt_term(Rational(-2, 3), 3);
  CHECK(y.sign() == -1);
  CHECK(y.to_double() == doctest::Approx(1.0 - 2.0 / std::sqrt(3.0)).epsilon(1e-15));
  // d in {0,1} folds to a pure rational
  Coeff unit(Rational(1, 2), Rational(1, 4), 1);
  CHECK(unit == Coeff(3, 4));
  CHECK(unit.is_rational());
}

TEST_CASE("(x+y)-y == x on random Q(sqrt3) pairs") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int t = 0; t < 10000; ++t) {
    Coeff x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 3);
    Coeff y(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 3);
    CHECK(((x + y) - y) == x);
  }
}

TEST_CASE("sms parsing") {
  CoeffMatrix m = parse_sms("2 2 M\n1 1 1\n2 2 -1\n0 0 0\n");
  CHECK(m.rows() == 2);
  CHECK(m.at(0, 0) == Coeff(1));
  CHECK(m.at(0, 1) == Coeff(0));
  CHECK(m.at(1, 1) == Coeff(-1));

  SUBCASE("comments, CRLF, fractions") {
    CoeffMatrix f = parse_sms("# header comment\r\n2 3 M\r\n1 2 -4/6\r\n0 0 0\r\n");
    CHECK(f.at(0, 1) == Coeff(-2, 3));
  }
  SUBCASE("index out of range") {
    CHECK_THROWS_WITH_AS(parse_sms("2 2 M\n3 1 1\n0 0 0\n"), doctest::Contains("out of range"),
                         SmsError);
    try {
      parse_sms("2 2 M\n3 1 1\n0 0 0\n");
    } catch (const SmsError& e) {
      CHECK(e.kind == SmsError::Kind::IndexOutOfRange);
    }
  }
  SUBCASE("distinct error kinds") {
    auto kind_of = [](const char* text) {
      try {
        parse_sms(text);
      } catch (const SmsError& e) {
        return e.kind;
      }
      return SmsError::Kind::SurdEntry;  // placeholder: parse unexpectedly passed
    };
    CHECK(kind_of("x 2 M\n0 0 0\n") == SmsError::Kind::MalformedHeader);
    CHECK(kind_of("2 2 Z\n0 0 0\n") == SmsError::Kind::UnknownFieldTag);
    CHECK(kind_of("2 2 M\n1 1 1\n1 1 2\n0 0 0\n") == SmsError::Kind::DuplicateEntry);
    CHECK(kind_of("2 2 M\n1 1 1\n") == SmsError::Kind::MissingTerminator);
    CHECK(kind_of("2 2 M\n1 1 one\n0 0 0\n") == SmsError::Kind::MalformedEntry);
  }
}

TEST_CASE("sms writing") {
  CoeffMatrix id(2, 2);
  id.at(0, 0) = Coeff(1);
  id.at(1, 1) = Coeff(1);
  CHECK(write_sms(id) == "2 2 M\n1 1 1\n2 2 1\n0 0 0\n");

  SUBCASE("round trip on strassen L") {
    HMRep s = load_scheme(*scheme_by_name("strassen"));
    std::string text = write_sms(s.L);
    CHECK(parse_sms(text) == s.L);
    CHECK(s.L.nnz() == 12);  // nonzero count of the left matrix
  }
  SUBCASE("surd entries rejected without the decimal flag") {
    CoeffMatrix m(1, 1);
    m.at(0, 0) = Coeff::sqrt_term(Rational(1, 2), 3);
    CHECK_THROWS_AS((void)write_sms(m), SmsError);
    SmsWriteOptions o;
    o.decimal_export = true;
    CHECK(write_sms(m, o).find("0.8660254") != std::string::npos);
  }
}

TEST_CASE("round trip property on random rational matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int t = 0; t < 40; ++t) {
    CoeffMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (num(rng) % 3 == 0) m.at(i, j) = Coeff(num(rng), den(rng));
    CHECK(parse_sms(write_sms(m)) == m);
  }
}

TEST_CASE("bundled schemes load with expected shapes") {
  HMRep s = load_scheme(*scheme_by_name("strassen"));
  CHECK(s.r == 7);
  CHECK(s.m == 2);
  // brown row: L row 5 = vec([[1,0],[0,0]])
  CHECK(s.L.at(4, 0) == Coeff(1));
  CHECK(s.L.row_weight(4) == 1);

  HMRep sm = load_scheme(*scheme_by_name("smirnov336acc"));
  CHECK(sm.r == 40);
  CHECK(sm.m == 3);
  CHECK(sm.k == 3);
  CHECK(sm.n == 6);

  HMRep conv = load_scheme(SchemeId::conventional(2, 2, 2));
  CHECK(conv.r == 8);
  for (std::size_t i = 0; i < conv.L.rows(); ++i)
    for (std::size_t j = 0; j < conv.L.cols(); ++j) {
      const Coeff& c = conv.L.at(i, j);
      CHECK((c.is_zero() || c.is_one()));
    }
}

TEST_CASE("apply_bilinear against the classical product") {
  HMRep s = load_scheme(*scheme_by_name("strassen"));
  SUBCASE("identity inputs") {
    DMat I2(2, 2);
    I2.at(0, 0) = I2.at(1, 1) = 1.0;
    DMat C = apply_bilinear(s, I2, I2);
    CHECK(C.at(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(C.at(0, 1) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(C.at(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("random inputs vs classical oracle") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 100; ++t) {
      DMat A(2, 2), B(2, 2);
      for (double& x : A.a) x = u(rng);
      for (double& x : B.a) x = u(rng);
      DMat C = apply_bilinear(s, A, B);
      double amax = 0, bmax = 0;
      for (double x : A.a) amax = std::max(amax, std::abs(x));
      for (double x : B.a) bmax = std::max(bmax, std::abs(x));
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          double expect = A.at(i, 0) * B.at(0, j) + A.at(i, 1) * B.at(1, j);
          CHECK(std::abs(C.at(i, j) - expect) <= 1e-13 * amax * bmax * 2);
        }
    }
  }
  SUBCASE("conventional is bit-for-bit classical") {
    HMRep conv = load_scheme(SchemeId::conventional(2, 2, 2));
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1, 1);
    DMat A(2, 2), B(2, 2);
    for (double& x : A.a) x = u(rng);
    for (double& x : B.a) x = u(rng);
    DMat C = apply_bilinear(conv, A, B);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(C.at(i, j) == A.at(i, 0) * B.at(0, j) + A.at(i, 1) * B.at(1, j));
  }
}

TEST_CASE("double-precision evaluation tracks exact arithmetic within 8 k eps") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1, 1);
  const double eps = std::numeric_limits<double>::epsilon();
  for (const char* name : {"strassen", "winograd", "accurate", "powers"}) {
    HMRep h = load_scheme(*scheme_by_name(name));
    double worst = 0;
    for (int t = 0; t < 2500; ++t) {
      DMat A(2, 2), B(2, 2);
      for (double& x : A.a) x = u(rng);
      for (double& x : B.a) x = u(rng);
      std::vector<Coeff> va(4), vb(4);
      double amax = 0, bmax = 0;
      for (int i = 0; i < 4; ++i) {
        va[i] = Coeff::from_double(A.a[i]);
        vb[i] = Coeff::from_double(B.a[i]);
        amax = std::max(amax, std::abs(A.a[i]));
        bmax = std::max(bmax, std::abs(B.a[i]));
      }
      DMat C = apply_bilinear(h, A, B);
      auto exact = apply_bilinear_exact(h, va, vb);
      for (int j = 0; j < 4; ++j)
        worst = std::max(worst, std::abs(C.a[j] - exact[j].to_double()) / (amax * bmax));
    }
    CAPTURE(name);
    CHECK(worst <= 8 * 2 * eps);
  }
}

TEST_CASE("validate_matmul") {
  for (const char* name : {"strassen", "winograd", "accurate", "powers", "powrot", "approx0695",
                           "approx0661", "altbasis", "smirnov336acc"}) {
    CAPTURE(name);
    HMRep h = load_scheme(*scheme_by_name(name));
    CHECK(validate_matmul(h).valid());
  }
  SUBCASE("sign flip is caught") {
    HMRep s = load_scheme(*scheme_by_name("strassen"));
    s.P.at(0, 0) = -s.P.at(0, 0);
    auto rep = validate_matmul(s);
    CHECK_FALSE(rep.valid());
    CHECK(rep.failures.size() >= 1);
  }
  SUBCASE("the bare alternative-basis core is not a matmul scheme") {
    HMRep core = load_scheme(*scheme_by_name("altcore"));
    CHECK_FALSE(validate_matmul(core).valid());
  }
}

TEST_CASE("external scheme loader enforces shape compatibility") {
  HMRep s = load_scheme(*scheme_by_name("strassen"));
  std::string lp = "/tmp/fmm_test_L.sms", rp = "/tmp/fmm_test_R.sms", pp = "/tmp/fmm_test_P.sms";
  {
    std::ofstream(lp) << write_sms(s.L);
    std::ofstream(rp) << write_sms(s.R);
    std::ofstream(pp) << write_sms(s.P);
  }
  HMRep h = load_scheme(SchemeId::external(lp, rp, pp, 2, 2, 2));
  CHECK(validate_matmul(h).valid());
  // mismatched shape: pass P in place of R
  CHECK_THROWS_AS((void)load_scheme(SchemeId::external(lp, pp, rp, 2, 2, 2)),
                  std::invalid_argument);
}
