#pragma once

#include <cstddef>
#include <span>

#include "fmm/schemes.hpp"

namespace fmm {

enum class NormId { Two, Max, One };  // One is used internally for duals

NormId dual(NormId p);

double vector_norm(std::span<const double> v, NormId p);
std::size_t hamming_weight(const CoeffMatrix& m, std::size_t row);

// Growth factor gamma_{p,q} (Def. of the norm-dependent growth constant):
// || ( sum_i ||L_i||_{q*} ||R_i||_{q*} |p_{j,i}| )_j ||_p  with q* = dual(q).
double growth_factor(const HMRep& h, NormId p, NormId q);

// Relaxed growth factor gamma_2 = sum_i ||L_i||_2 ||R_i||_2 ||P col_i||_2.
double gamma2(const HMRep& h);

// Sparsity constant Q0 = max_j ( ||P_j||_0 + max_{i: p_{j,i} != 0} (||L_i||_0 + ||R_i||_0) ).
long q0(const HMRep& h);

// Amplification factor A_{p,q}: tight constants for genuine matrix products,
// otherwise the growth factor itself.
double amplification(NormId p, NormId q, std::size_t k, bool is_matmul, double gamma);

// Effective per-level growth of the classical algorithm, i.e. the rate whose
// ell-th power reproduces the exact classical error factors K^2, K, K, K^{5/2}.
// The comparison tables list these for the "classic" row; the Def.-5 formula
// applied to the conventional HM representation gives different (and for
// (inf,inf) smaller) constants because its products never cancel.
double classical_gamma(NormId p, NormId q, std::size_t k);

struct BoundReport {
  NormId p = NormId::Max, q = NormId::Max;
  std::size_t ell = 0, k0 = 1;
  double gamma = 0, amp = 0, amp0 = 0, e0 = 0;
  long q0 = 0;
  double e_ell = 0;
  double exponent = 0;       // log_k gamma
  double leading_coeff = 0;  // coefficient of K^exponent in the closed form
};

// Closed-form forward error factor E^(ell) for the recursive algorithm with
// base-case inner dimension k0 (matmul cases, or the general-tensor formula
// when the scheme does not validate as a matrix product).
BoundReport error_bound(const HMRep& h, NormId p, NormId q, std::size_t ell, std::size_t k0);

// Alternative-basis bound: gamma(mmab) = gamma(ab)*||phi||_q*||psi||_q*||nu^T||_p
// and E^(ell) = gamma(mmab)^ell * (E0 + A0 * ell * (Q0+Qphi+Qpsi+QnuT)).
BoundReport altbasis_bound(const HMRep& core, const CoBTriple& cob, NormId p, NormId q,
                           std::size_t ell, std::size_t k0);

// Row-based operator norm ||A||_q = || ( ||A_i||_{q*} )_i ||_q.
double operator_norm(const CoeffMatrix& a, NormId q);

struct NormTable {
  double gamma2 = 0;
  double l23_product = 0;   // ||L||_{2,3} ||R||_{2,3} ||P'||_{2,3}
  double frob_product = 0;  // ||L||_F ||R||_F ||P'||_F
};
NormTable norm_table(const HMRep& h);

// Generalized (2,s)-norm of one matrix: ( sum_i ||row_i||_2^s )^(1/s); for
// negative s this is the generalized power mean over rows (s != 0).
double norm_2s(const CoeffMatrix& m, double s);

}  // namespace fmm
