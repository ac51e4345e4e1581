#pragma once

#include "fmm/norms.hpp"
#include "fmm/schemes.hpp"

namespace fmm {

struct SparsifyOptions {
  // cap on basis subsets inspected per matrix (kept exhaustive for the 2x2x2
  // family; greedy cut-off for larger ranks)
  std::size_t subset_budget = 200000;
};

// Factors H into changes of basis times a sparse core (L = Ls phi, R = Rs psi,
// P = nu^T Ps). Basis candidates are rows of the operand, optionally rescaled
// by their leading coefficient; among all-{0,+-1} cores the result minimizes
// total addition count, then the core growth factor gamma_2. When no such
// core exists in the search space, returns the sparsest fallback with
// core_zpm1 = false.
CoBTriple sparsify(const HMRep& h, const SparsifyOptions& opts = {});

bool verify_factorization(const HMRep& h, const CoBTriple& c);

struct CobQuality {
  double factor = 0;      // ||phi||_q ||psi||_q ||nu^T||_p
  double gamma_mmab = 0;  // growth factor of the alternative-basis algorithm
};
CobQuality cob_quality(const CoBTriple& c, NormId p, NormId q);

// Core triple packaged as an HM-shaped bilinear map (not a matmul scheme).
HMRep core_as_rep(const CoBTriple& c, std::size_t m, std::size_t k, std::size_t n);

}  // namespace fmm
