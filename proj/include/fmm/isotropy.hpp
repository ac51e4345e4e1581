#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "fmm/hmrep.hpp"

namespace fmm {

// Isotropy (U,V,W) acting on HM representations. Factors are normalized to
// |det| = 1 on construction and must be invertible.
struct Isotropy {
  Eigen::MatrixXd U, V, W;

  Isotropy(Eigen::MatrixXd u, Eigen::MatrixXd v, Eigen::MatrixXd w);
  static Isotropy identity(std::size_t m, std::size_t k, std::size_t n);
};

// g . H = (L (U^-1 x V^T), R (V^-1 x W^T), (U x W^-T) P); float-backed result.
HMRep act(const Isotropy& g, const HMRep& h);
Isotropy compose(const Isotropy& g1, const Isotropy& g2);

// Iwasawa-style parametrization: per dimension s, U_s = H_s(rho) P_s(xi) with
// H_s = diag(rho_1..rho_{s-1}, 1/prod rho) and P_s unit upper triangular.
struct IwasawaPoint {
  std::size_t m = 2, k = 2, n = 2;
  std::array<std::vector<double>, 3> rho;  // lengths s-1, entries > 0
  std::array<std::vector<double>, 3> xi;   // lengths s(s-1)/2

  static IwasawaPoint identity(std::size_t m, std::size_t k, std::size_t n);
  std::size_t param_count() const;
  std::vector<double> pack() const;    // rho packed as log(rho)
  static IwasawaPoint unpack(std::size_t m, std::size_t k, std::size_t n,
                             const std::vector<double>& x);
};

Isotropy iwasawa(const IwasawaPoint& pt);

struct DescentOptions {
  int restarts = 32;
  int max_evals_per_restart = 20000;
  double sigma = 0.3;
  double simplex_tol = 1e-10;
  std::uint64_t seed = 1;
  bool snap = false;
};

struct DescentResult {
  IwasawaPoint point;
  HMRep transformed;
  double gamma2 = 0;
};

// Nelder-Mead descent of gamma_2 over the Iwasawa parameters; never returns a
// value worse than gamma_2(H) (identity is always a candidate).
DescentResult minimize_gamma2(const HMRep& h, const DescentOptions& opts = {});

struct UuuScanResult {
  double rho = 1, xi = 0, gamma2 = 0;
};
// Two-parameter minimization over isotropies (U(rho,xi))^{x3}, for 2x2x2 reps.
UuuScanResult restricted_uuu_scan(const HMRep& h);

// Hand-rolled Nelder-Mead; returns best point found within the budget.
std::pair<std::vector<double>, double> nelder_mead(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
    double step, int max_evals, double tol);

}  // namespace fmm
