#include "fmm/hmrep.hpp"

#include <cmath>
#include <stdexcept>

namespace fmm {

void HMRep::check_shapes() const {
  if (L.rows() != r || L.cols() != m * k || R.rows() != r || R.cols() != k * n ||
      P.rows() != m * n || P.cols() != r)
    throw std::invalid_argument("HMRep: inconsistent shapes for " + name);
}

DMat apply_bilinear(const HMRep& h, const DMat& A, const DMat& B) {
  if (A.rows != h.m || A.cols != h.k || B.rows != h.k || B.cols != h.n)
    throw std::invalid_argument("apply_bilinear: dimension mismatch");
  std::vector<double> Ld = h.L.to_doubles(), Rd = h.R.to_doubles(), Pd = h.P.to_doubles();
  std::vector<double> prod(h.r);
  for (std::size_t i = 0; i < h.r; ++i) {
    double u = 0.0, v = 0.0;
    for (std::size_t j = 0; j < h.m * h.k; ++j) u += Ld[i * h.m * h.k + j] * A.a[j];
    for (std::size_t j = 0; j < h.k * h.n; ++j) v += Rd[i * h.k * h.n + j] * B.a[j];
    prod[i] = u * v;
  }
  DMat C(h.m, h.n);
  for (std::size_t j = 0; j < h.m * h.n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.r; ++i) s += Pd[j * h.r + i] * prod[i];
    C.a[j] = s;
  }
  return C;
}

std::vector<Coeff> apply_bilinear_exact(const HMRep& h, const std::vector<Coeff>& vecA,
                                        const std::vector<Coeff>& vecB) {
  if (vecA.size() != h.m * h.k || vecB.size() != h.k * h.n)
    throw std::invalid_argument("apply_bilinear_exact: dimension mismatch");
  std::vector<Coeff> prod(h.r);
  for (std::size_t i = 0; i < h.r; ++i) {
    Coeff u, v;
    for (std::size_t j = 0; j < vecA.size(); ++j)
      if (!h.L.at(i, j).is_zero() && !vecA[j].is_zero()) u += h.L.at(i, j) * vecA[j];
    for (std::size_t j = 0; j < vecB.size(); ++j)
      if (!h.R.at(i, j).is_zero() && !vecB[j].is_zero()) v += h.R.at(i, j) * vecB[j];
    prod[i] = u * v;
  }
  std::vector<Coeff> out(h.m * h.n);
  for (std::size_t j = 0; j < out.size(); ++j)
    for (std::size_t i = 0; i < h.r; ++i)
      if (!h.P.at(j, i).is_zero() && !prod[i].is_zero()) out[j] += h.P.at(j, i) * prod[i];
  return out;
}

ValidationReport validate_matmul(const HMRep& h) {
  h.check_shapes();
  ValidationReport rep;
  rep.exact_mode = h.exact;
  const std::size_t mk = h.m * h.k, kn = h.k * h.n;
  for (std::size_t ab = 0; ab < mk; ++ab) {
    std::size_t a = ab / h.k, b = ab % h.k;
    for (std::size_t cd = 0; cd < kn; ++cd) {
      std::size_t c = cd / h.n, d = cd % h.n;
      if (h.exact) {
        std::vector<Coeff> ea(mk), eb(kn);
        ea[ab] = Coeff(1);
        eb[cd] = Coeff(1);
        auto out = apply_bilinear_exact(h, ea, eb);
        for (std::size_t jj = 0; jj < out.size(); ++jj) {
          Coeff expect = (b == c && jj == a * h.n + d) ? Coeff(1) : Coeff(0);
          if (out[jj] != expect) {
            Coeff res = out[jj] - expect;
            rep.failures.push_back({a, b, c, d, jj, res.to_double()});
          }
        }
      } else {
        DMat A(h.m, h.k), B(h.k, h.n);
        A.at(a, b) = 1.0;
        B.at(c, d) = 1.0;
        DMat C = apply_bilinear(h, A, B);
        for (std::size_t jj = 0; jj < C.a.size(); ++jj) {
          double expect = (b == c && jj == a * h.n + d) ? 1.0 : 0.0;
          double res = C.a[jj] - expect;
          if (std::abs(res) > 1e-9) rep.failures.push_back({a, b, c, d, jj, res});
        }
      }
    }
  }
  return rep;
}

}  // namespace fmm
