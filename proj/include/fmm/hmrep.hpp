#pragma once

#include <string>
#include <vector>

#include "fmm/matrix.hpp"

namespace fmm {

// Hopcroft-Musinski representation of a bilinear algorithm: three matrices
// L (r x mk), R (r x kn), P (mn x r) with row-major vectorization, so that
// vec(C) = P * ((L vec A) .* (R vec B)).
struct HMRep {
  std::size_t m = 0, k = 0, n = 0, r = 0;
  CoeffMatrix L, R, P;
  std::string name;
  std::string provenance;
  bool exact = true;  // false for float-backed reps produced by isotropy action

  void check_shapes() const;
};

// One bilinear evaluation in double precision, left to right.
DMat apply_bilinear(const HMRep& h, const DMat& A, const DMat& B);

// Exact evaluation on coefficient vectors (used by validation and oracles).
std::vector<Coeff> apply_bilinear_exact(const HMRep& h, const std::vector<Coeff>& vecA,
                                        const std::vector<Coeff>& vecB);

struct ValidationFailure {
  std::size_t a, b, c, d;  // canonical input pair e_{ab}, e_{cd}
  std::size_t out;         // failing output index
  double residual;
};

struct ValidationReport {
  bool exact_mode = true;
  std::vector<ValidationFailure> failures;
  bool valid() const { return failures.empty(); }
};

// Checks the matmul-tensor identity on every canonical input pair. Exact
// coefficient arithmetic and zero tolerance for exact reps; float-backed reps
// are checked in doubles against a 1e-9 relative tolerance.
ValidationReport validate_matmul(const HMRep& h);

}  // namespace fmm
