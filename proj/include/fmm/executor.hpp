#pragma once

#include <span>
#include <vector>

#include "fmm/schemes.hpp"
#include "fmm/slp.hpp"

namespace fmm {

// Base-case product: fixed i-k-j loop order for deterministic rounding.
DMat classical_mm(const DMat& A, const DMat& B);

// Recursion plan: level i uses levels[i]; below the last level the classical
// product runs on the remaining block. Dimensions must factor exactly.
struct RecursionPlan {
  std::vector<SchemeId> levels;
};

DMat recursive_mm(const RecursionPlan& plan, const DMat& A, const DMat& B);

// Same recursion driven by a span of levels; `tail` (when nonempty) is run
// once `head` is exhausted. Exposed so plan-splitting tests can check the
// bitwise associativity contract.
DMat recursive_mm_split(std::span<const SchemeId> head, std::span<const SchemeId> tail,
                        const DMat& A, const DMat& B);

struct AltPlan {
  CoBTriple cob;
  std::size_t levels = 1;
  std::size_t m = 2, k = 2, n = 2;  // dimensions of the underlying scheme
};

// Alternative-basis multiplication: recursive changes of basis on both inputs,
// sparse-core recursion, recursive product change of basis on the output.
DMat altbasis_mm(const AltPlan& plan, const DMat& A, const DMat& B);

// Compiled linear phases of one scheme (cached by the executor).
struct CompiledScheme {
  HMRep rep;
  Slp l_slp, r_slp, p_slp;
};
const CompiledScheme& compile_scheme(const SchemeId& id);

}  // namespace fmm
