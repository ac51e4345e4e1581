#include "fmm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fmm {
namespace {

std::vector<double> row_norms(const CoeffMatrix& m, NormId p) {
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double x = m.at(i, j).to_double();
      switch (p) {
        case NormId::One: s += std::abs(x); break;
        case NormId::Two: s += x * x; break;
        case NormId::Max: s = std::max(s, std::abs(x)); break;
      }
    }
    out[i] = (p == NormId::Two) ? std::sqrt(s) : s;
  }
  return out;
}

bool is_validated_matmul(const HMRep& h) { return validate_matmul(h).valid(); }

}  // namespace

NormId dual(NormId p) {
  switch (p) {
    case NormId::Two: return NormId::Two;
    case NormId::Max: return NormId::One;
    case NormId::One: return NormId::Max;
  }
  throw std::logic_error("dual: bad norm");
}

double vector_norm(std::span<const double> v, NormId p) {
  double s = 0.0;
  for (double x : v) {
    switch (p) {
      case NormId::One: s += std::abs(x); break;
      case NormId::Two: s += x * x; break;
      case NormId::Max: s = std::max(s, std::abs(x)); break;
    }
  }
  return (p == NormId::Two) ? std::sqrt(s) : s;
}

std::size_t hamming_weight(const CoeffMatrix& m, std::size_t row) { return m.row_weight(row); }

double growth_factor(const HMRep& h, NormId p, NormId q) {
  NormId qs = dual(q);
  auto ln = row_norms(h.L, qs), rn = row_norms(h.R, qs);
  std::vector<double> per_out(h.P.rows(), 0.0);
  for (std::size_t j = 0; j < h.P.rows(); ++j)
    for (std::size_t i = 0; i < h.r; ++i) {
      const Coeff& pj = h.P.at(j, i);
      if (!pj.is_zero()) per_out[j] += ln[i] * rn[i] * std::abs(pj.to_double());
    }
  return vector_norm(per_out, p);
}

double gamma2(const HMRep& h) {
  auto ln = row_norms(h.L, NormId::Two), rn = row_norms(h.R, NormId::Two);
  auto pn = row_norms(h.P.transposed(), NormId::Two);
  double g = 0.0;
  for (std::size_t i = 0; i < h.r; ++i) g += ln[i] * rn[i] * pn[i];
  return g;
}

long q0(const HMRep& h) {
  long best = 0;
  for (std::size_t j = 0; j < h.P.rows(); ++j) {
    long pw = static_cast<long>(h.P.row_weight(j));
    long mx = 0;
    for (std::size_t i = 0; i < h.r; ++i)
      if (!h.P.at(j, i).is_zero())
        mx = std::max(mx, static_cast<long>(h.L.row_weight(i) + h.R.row_weight(i)));
    best = std::max(best, pw + mx);
  }
  return best;
}

double amplification(NormId p, NormId q, std::size_t k, bool is_matmul, double gamma) {
  if (!is_matmul) return gamma;
  double kd = static_cast<double>(k);
  if (p == NormId::Max && q == NormId::Max) return kd;
  if (p == NormId::Two && q == NormId::Two) return 1.0;
  if (p == NormId::Max && q == NormId::Two) return 1.0;
  if (p == NormId::Two && q == NormId::Max) return std::pow(kd, 1.5);
  throw std::invalid_argument("amplification: unsupported norm pair");
}

double classical_gamma(NormId p, NormId q, std::size_t k) {
  double kd = static_cast<double>(k);
  if (p == NormId::Max && q == NormId::Max) return kd * kd;
  if (p == NormId::Two && q == NormId::Two) return kd;
  if (p == NormId::Max && q == NormId::Two) return kd;
  if (p == NormId::Two && q == NormId::Max) return std::pow(kd, 2.5);
  throw std::invalid_argument("classical_gamma: unsupported norm pair");
}

BoundReport error_bound(const HMRep& h, NormId p, NormId q, std::size_t ell, std::size_t k0) {
  BoundReport rep;
  rep.p = p; rep.q = q; rep.ell = ell; rep.k0 = k0;
  rep.gamma = growth_factor(h, p, q);
  rep.q0 = q0(h);
  const double k = static_cast<double>(h.k);
  const double k0d = static_cast<double>(k0);
  const bool mm = is_validated_matmul(h);
  rep.amp = amplification(p, q, h.k, mm, rep.gamma);
  rep.amp0 = amplification(p, q, k0, mm, rep.gamma);
  rep.exponent = std::log(rep.gamma) / std::log(k);

  if (mm && ell == 0) {
    // recurrence base: E^(0) regardless of the growth factor
    rep.e0 = (p == NormId::Max && q == NormId::Max)   ? k0d * k0d
             : (p == NormId::Two && q == NormId::Max) ? std::pow(k0d, 2.5)
                                                      : k0d;
    rep.e_ell = rep.e0;
    rep.leading_coeff = rep.e0;
    return rep;
  }
  if (mm) {
    if (rep.gamma <= rep.amp)
      throw std::domain_error("error_bound: growth factor <= amplification, closed form invalid");
    auto qfac = [&](double a) { return static_cast<double>(rep.q0) * rep.gamma / (rep.gamma - a); };
    double gl = std::pow(rep.gamma, static_cast<double>(ell));
    if (p == NormId::Max && q == NormId::Max) {
      rep.e0 = k0d * k0d;
      double qk = qfac(k);
      rep.leading_coeff = k0d * k0d + k0d * qk;
      rep.e_ell = gl * rep.leading_coeff - k0d * std::pow(k, static_cast<double>(ell)) * qk;
    } else if (p == NormId::Two && q == NormId::Two) {
      rep.e0 = k0d;
      double q1 = qfac(1.0);
      rep.leading_coeff = k0d + q1;
      rep.e_ell = gl * rep.leading_coeff - q1;
    } else if (p == NormId::Max && q == NormId::Two) {
      rep.e0 = k0d;
      double q1 = qfac(1.0);
      rep.leading_coeff = k0d + q1;
      rep.e_ell = gl * rep.leading_coeff - q1;
    } else {  // p = Two, q = Max
      rep.e0 = std::pow(k0d, 2.5);
      double qk32 = qfac(std::pow(k, 1.5));
      rep.leading_coeff = std::pow(k0d, 1.5) * (k0d + qk32);
      rep.e_ell = gl * rep.leading_coeff -
                  qk32 * std::pow(k0d * std::pow(k, static_cast<double>(ell)), 1.5);
    }
  } else {
    // general tensor: E = gamma^ell (E0 + ell Q0 gamma0); classical base case
    rep.e0 = (p == NormId::Max && q == NormId::Max) ? k0d * k0d
             : (p == NormId::Two && q == NormId::Max) ? std::pow(k0d, 2.5)
                                                      : k0d;
    rep.leading_coeff =
        rep.e0 + static_cast<double>(ell) * static_cast<double>(rep.q0) * rep.amp0;
    rep.e_ell = std::pow(rep.gamma, static_cast<double>(ell)) * rep.leading_coeff;
  }
  return rep;
}

double operator_norm(const CoeffMatrix& a, NormId q) {
  auto rn = row_norms(a, dual(q));
  return vector_norm(rn, q);
}

BoundReport altbasis_bound(const HMRep& core, const CoBTriple& cob, NormId p, NormId q,
                           std::size_t ell, std::size_t k0) {
  if (cob.phi.rows() != core.L.cols() || cob.psi.rows() != core.R.cols() ||
      cob.nu.rows() != core.P.rows())
    throw std::invalid_argument("altbasis_bound: CoB shapes incompatible with core");
  BoundReport rep;
  rep.p = p; rep.q = q; rep.ell = ell; rep.k0 = k0;
  double gab = growth_factor(core, p, q);
  double factor = operator_norm(cob.phi, q) * operator_norm(cob.psi, q) *
                  operator_norm(cob.nu.transposed(), p);
  rep.gamma = gab * factor;
  long qphi = 0, qpsi = 0, qnut = 0;
  for (std::size_t i = 0; i < cob.phi.rows(); ++i)
    qphi = std::max(qphi, static_cast<long>(cob.phi.row_weight(i)));
  for (std::size_t i = 0; i < cob.psi.rows(); ++i)
    qpsi = std::max(qpsi, static_cast<long>(cob.psi.row_weight(i)));
  CoeffMatrix nut = cob.nu.transposed();
  for (std::size_t i = 0; i < nut.rows(); ++i)
    qnut = std::max(qnut, static_cast<long>(nut.row_weight(i)));
  rep.q0 = q0(core) + qphi + qpsi + qnut;

  const double k0d = static_cast<double>(k0);
  rep.e0 = (p == NormId::Max && q == NormId::Max) ? k0d * k0d
           : (p == NormId::Two && q == NormId::Max) ? std::pow(k0d, 2.5)
                                                    : k0d;
  // base case is a true k0-dim matrix product
  rep.amp0 = amplification(p, q, k0, true, 0.0);
  rep.amp = rep.gamma;
  rep.exponent = std::log(rep.gamma) / std::log(static_cast<double>(core.k));
  rep.leading_coeff = rep.e0 + static_cast<double>(ell) * static_cast<double>(rep.q0) * rep.amp0;
  rep.e_ell = std::pow(rep.gamma, static_cast<double>(ell)) * rep.leading_coeff;
  return rep;
}

double norm_2s(const CoeffMatrix& m, double s) {
  if (s == 0.0) throw std::invalid_argument("norm_2s: s must be nonzero");
  auto rn = row_norms(m, NormId::Two);
  double acc = 0.0;
  for (double x : rn) acc += std::pow(x, s);
  return std::pow(acc, 1.0 / s);
}

NormTable norm_table(const HMRep& h) {
  NormTable t;
  t.gamma2 = gamma2(h);
  CoeffMatrix pt = h.P.transposed();
  t.l23_product = norm_2s(h.L, 3) * norm_2s(h.R, 3) * norm_2s(pt, 3);
  t.frob_product = norm_2s(h.L, 2) * norm_2s(h.R, 2) * norm_2s(pt, 2);
  return t;
}

}  // namespace fmm
