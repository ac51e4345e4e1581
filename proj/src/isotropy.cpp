#include "fmm/isotropy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fmm {
namespace {

Eigen::MatrixXd det_normalize(Eigen::MatrixXd a) {
  double det = a.determinant();
  if (det == 0.0 || !std::isfinite(det)) throw std::invalid_argument("Isotropy: singular factor");
  double s = std::pow(std::abs(det), -1.0 / static_cast<double>(a.rows()));
  return a * s;
}

// Row-major Kronecker product: (X (x) Y)[(i q2 + k), (j q2 + l)] = X(i,j) Y(k,l).
Eigen::MatrixXd kron(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  Eigen::MatrixXd out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}

Eigen::MatrixXd to_eigen(const CoeffMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).to_double();
  return out;
}

CoeffMatrix from_eigen(const Eigen::MatrixXd& m) {
  CoeffMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          Coeff::from_double(m(i, j));
  return out;
}

struct TransformCache {
  Eigen::MatrixXd L, R, P;  // float projections of the rep
  std::size_t m, k, n, r;
};

double gamma2_transformed(const TransformCache& t, const Isotropy& g) {
  Eigen::MatrixXd ta = kron(g.U.inverse(), g.V.transpose());
  Eigen::MatrixXd tb = kron(g.V.inverse(), g.W.transpose());
  Eigen::MatrixXd tc = kron(g.U, g.W.transpose().inverse());
  Eigen::MatrixXd L2 = t.L * ta, R2 = t.R * tb, P2 = tc * t.P;
  double gsum = 0;
  for (std::size_t i = 0; i < t.r; ++i)
    gsum += L2.row(static_cast<Eigen::Index>(i)).norm() *
            R2.row(static_cast<Eigen::Index>(i)).norm() *
            P2.col(static_cast<Eigen::Index>(i)).norm();
  return gsum;
}

// Best rational approximation with denominator <= 64 (continued fractions),
// plus the special constants the optima are known to hit.
double snap_value(double x) {
  double best = x;
  double err = std::numeric_limits<double>::infinity();
  auto consider = [&](double v) {
    double e = std::abs(v - x);
    if (e < err) { err = e; best = v; }
  };
  double p0 = 0, q0 = 1, p1 = 1, q1 = 0, a = x;
  for (int it = 0; it < 32; ++it) {
    double ai = std::floor(a);
    double p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > 64) break;
    consider(p2 / q2);
    // best intermediate fraction with denominator capped at 64
    if (q1 > 0) {
      double amax = std::floor((64 - q0) / q1);
      if (amax >= 1 && amax < ai) {
        double pm = amax * p1 + p0, qm = amax * q1 + q0;
        consider(pm / qm);
      }
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = a - ai;
    if (frac < 1e-12) break;
    a = 1.0 / frac;
  }
  const double kQuartic = std::pow(4.0 / 3.0, 0.25);
  const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
  for (double s : {kQuartic, -kQuartic, 0.5, -0.5, kInvSqrt3, -kInvSqrt3}) consider(s);
  return best;
}

}  // namespace

Isotropy::Isotropy(Eigen::MatrixXd u, Eigen::MatrixXd v, Eigen::MatrixXd w)
    : U(det_normalize(std::move(u))), V(det_normalize(std::move(v))),
      W(det_normalize(std::move(w))) {
  for (const auto* f : {&U, &V, &W}) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(*f);
    if (!lu.isInvertible()) throw std::invalid_argument("Isotropy: singular factor");
    if (std::abs(std::abs(f->determinant()) - 1.0) > 1e-9)
      throw std::invalid_argument("Isotropy: determinant normalization failed");
  }
}

Isotropy Isotropy::identity(std::size_t m, std::size_t k, std::size_t n) {
  return Isotropy(Eigen::MatrixXd::Identity(m, m), Eigen::MatrixXd::Identity(k, k),
                  Eigen::MatrixXd::Identity(n, n));
}

HMRep act(const Isotropy& g, const HMRep& h) {
  if (static_cast<std::size_t>(g.U.rows()) != h.m || static_cast<std::size_t>(g.V.rows()) != h.k ||
      static_cast<std::size_t>(g.W.rows()) != h.n)
    throw std::invalid_argument("act: dimension mismatch");
  Eigen::MatrixXd L = to_eigen(h.L), R = to_eigen(h.R), P = to_eigen(h.P);
  HMRep out;
  out.m = h.m; out.k = h.k; out.n = h.n; out.r = h.r;
  out.L = from_eigen(L * kron(g.U.inverse(), g.V.transpose()));
  out.R = from_eigen(R * kron(g.V.inverse(), g.W.transpose()));
  out.P = from_eigen(kron(g.U, g.W.transpose().inverse()) * P);
  out.name = h.name + "+isotropy";
  out.provenance = "isotropy action on " + h.name;
  out.exact = false;
  return out;
}

Isotropy compose(const Isotropy& g1, const Isotropy& g2) {
  return Isotropy(g1.U * g2.U, g1.V * g2.V, g1.W * g2.W);
}

IwasawaPoint IwasawaPoint::identity(std::size_t m, std::size_t k, std::size_t n) {
  IwasawaPoint pt;
  pt.m = m; pt.k = k; pt.n = n;
  const std::size_t dims[3] = {m, k, n};
  for (int d = 0; d < 3; ++d) {
    pt.rho[d].assign(dims[d] - 1, 1.0);
    pt.xi[d].assign(dims[d] * (dims[d] - 1) / 2, 0.0);
  }
  return pt;
}

std::size_t IwasawaPoint::param_count() const {
  std::size_t c = 0;
  for (int d = 0; d < 3; ++d) c += rho[d].size() + xi[d].size();
  return c;
}

std::vector<double> IwasawaPoint::pack() const {
  std::vector<double> x;
  for (int d = 0; d < 3; ++d) {
    for (double r : rho[d]) x.push_back(std::log(r));
    for (double v : xi[d]) x.push_back(v);
  }
  return x;
}

IwasawaPoint IwasawaPoint::unpack(std::size_t m, std::size_t k, std::size_t n,
                                  const std::vector<double>& x) {
  IwasawaPoint pt = identity(m, k, n);
  std::size_t at = 0;
  for (int d = 0; d < 3; ++d) {
    for (double& r : pt.rho[d]) r = std::exp(x.at(at++));
    for (double& v : pt.xi[d]) v = x.at(at++);
  }
  if (at != x.size()) throw std::invalid_argument("IwasawaPoint: bad parameter vector");
  return pt;
}

Isotropy iwasawa(const IwasawaPoint& pt) {
  auto build = [](const std::vector<double>& rho, const std::vector<double>& xi, std::size_t s) {
    for (double r : rho)
      if (!(r > 0)) throw std::invalid_argument("iwasawa: rho entries must be positive");
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(s, s);
    double prod = 1.0;
    for (std::size_t i = 0; i + 1 < s; ++i) { h(i, i) = rho[i]; prod *= rho[i]; }
    h(s - 1, s - 1) = 1.0 / prod;
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(s, s);
    std::size_t at = 0;
    for (std::size_t i = 0; i + 1 < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j) p(i, j) = xi[at++];
    return Eigen::MatrixXd(h * p);
  };
  return Isotropy(build(pt.rho[0], pt.xi[0], pt.m), build(pt.rho[1], pt.xi[1], pt.k),
                  build(pt.rho[2], pt.xi[2], pt.n));
}

std::pair<std::vector<double>, double> nelder_mead(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
    double step, int max_evals, double tol) {
  const std::size_t n = x0.size();
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  std::vector<std::pair<double, std::vector<double>>> simplex;
  simplex.reserve(n + 1);
  simplex.emplace_back(eval(x0), x0);
  for (std::size_t i = 0; i < n; ++i) {
    auto x = x0;
    x[i] += step;
    simplex.emplace_back(eval(x), x);
  }
  auto center = [&](std::size_t excl) {
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i == excl) continue;
      for (std::size_t j = 0; j < n; ++j) c[j] += simplex[i].second[j];
    }
    for (double& v : c) v /= static_cast<double>(n);
    return c;
  };
  while (evals < max_evals) {
    std::sort(simplex.begin(), simplex.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    double diam = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        diam = std::max(diam, std::abs(simplex[i].second[j] - simplex[0].second[j]));
    if (diam < tol) break;
    auto c = center(n);
    std::vector<double> xr(n);
    for (std::size_t j = 0; j < n; ++j) xr[j] = c[j] + alpha * (c[j] - simplex[n].second[j]);
    double fr = eval(xr);
    if (fr < simplex[0].first) {
      std::vector<double> xe(n);
      for (std::size_t j = 0; j < n; ++j) xe[j] = c[j] + gamma * (xr[j] - c[j]);
      double fe = eval(xe);
      simplex[n] = fe < fr ? std::make_pair(fe, xe) : std::make_pair(fr, xr);
    } else if (fr < simplex[n - 1].first) {
      simplex[n] = {fr, xr};
    } else {
      std::vector<double> xc(n);
      bool outside = fr < simplex[n].first;
      const auto& base = outside ? xr : simplex[n].second;
      for (std::size_t j = 0; j < n; ++j) xc[j] = c[j] + rho * (base[j] - c[j]);
      double fc = eval(xc);
      if (fc < (outside ? fr : simplex[n].first)) {
        simplex[n] = {fc, xc};
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 0; j < n; ++j)
            simplex[i].second[j] =
                simplex[0].second[j] + sigma * (simplex[i].second[j] - simplex[0].second[j]);
          simplex[i].first = eval(simplex[i].second);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return {simplex[0].second, simplex[0].first};
}

DescentResult minimize_gamma2(const HMRep& h, const DescentOptions& opts) {
  TransformCache cache{to_eigen(h.L), to_eigen(h.R), to_eigen(h.P), h.m, h.k, h.n, h.r};
  auto objective = [&](const std::vector<double>& x) {
    IwasawaPoint pt = IwasawaPoint::unpack(h.m, h.k, h.n, x);
    return gamma2_transformed(cache, iwasawa(pt));
  };
  const std::size_t np = IwasawaPoint::identity(h.m, h.k, h.n).param_count();
  const double g_id = objective(std::vector<double>(np, 0.0));

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, opts.sigma);
  std::vector<double> best_x(np, 0.0);
  double best = g_id;
  for (int rs = 0; rs < opts.restarts; ++rs) {
    std::vector<double> x0(np, 0.0);
    if (rs > 0)
      for (double& v : x0) v = gauss(rng);
    auto [x, fx] = nelder_mead(objective, x0, 0.25, opts.max_evals_per_restart, opts.simplex_tol);
    if (fx < best) { best = fx; best_x = x; }
  }
  if (opts.snap) {
    std::vector<double> snapped(np);
    IwasawaPoint pt = IwasawaPoint::unpack(h.m, h.k, h.n, best_x);
    std::size_t at = 0;
    for (int d = 0; d < 3; ++d) {
      for (double r : pt.rho[d]) {
        double sv = std::abs(snap_value(r));
        snapped[at++] = std::log(sv > 0 ? sv : r);
      }
      for (double v : pt.xi[d]) snapped[at++] = snap_value(v);
    }
    double fs = objective(snapped);
    if (fs <= best + 1e-12) { best = fs; best_x = snapped; }
  }
  DescentResult res;
  res.point = IwasawaPoint::unpack(h.m, h.k, h.n, best_x);
  res.gamma2 = best;
  res.transformed = act(iwasawa(res.point), h);
  return res;
}

UuuScanResult restricted_uuu_scan(const HMRep& h) {
  if (h.m != 2 || h.k != 2 || h.n != 2)
    throw std::invalid_argument("restricted_uuu_scan: requires a 2x2x2 representation");
  TransformCache cache{to_eigen(h.L), to_eigen(h.R), to_eigen(h.P), h.m, h.k, h.n, h.r};
  auto value = [&](double logrho, double xi) {
    Eigen::MatrixXd u(2, 2);
    double r = std::exp(logrho);
    u << r, r * xi, 0, 1.0 / r;
    return gamma2_transformed(cache, Isotropy(u, u, u));
  };
  double bl = 0, bx = 0, bv = value(0, 0);
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      double lr = -0.7 + 1.4 * i / 40.0;  // rho in ~[0.5, 2]
      double xi = -1.0 + 2.0 * j / 40.0;
      double v = value(lr, xi);
      if (v < bv) { bv = v; bl = lr; bx = xi; }
    }
  auto [x, fx] = nelder_mead([&](const std::vector<double>& p) { return value(p[0], p[1]); },
                             {bl, bx}, 0.05, 20000, 1e-12);
  UuuScanResult res;
  if (fx <= bv) {
    res.rho = std::exp(x[0]);
    res.xi = x[1];
    res.gamma2 = fx;
  } else {
    res.rho = std::exp(bl);
    res.xi = bx;
    res.gamma2 = bv;
  }
  return res;
}

}  // namespace fmm
