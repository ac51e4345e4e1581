#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmm/hmrep.hpp"

namespace fmm {

// Change-of-basis triple for alternative-basis multiplication:
//   L = Ls * phi,  R = Rs * psi,  P = nu^T * Ps   (all exact).
struct CoBTriple {
  CoeffMatrix phi, psi, nu;  // e x e, f x f, g x g, invertible
  CoeffMatrix Ls, Rs, Ps;    // sparse core: r x e, r x f, g x r
  bool core_zpm1 = true;     // core entries all in {0,+1,-1}
};

struct SchemeId {
  enum class Kind {
    Conventional,
    Strassen,
    Winograd,
    AccurateSqrt3,      // gamma2-optimal variant over Q(sqrt3)
    Powers,             // power-of-two approximation of AccurateSqrt3
    PowRot,             // orthogonal optimization of Powers
    Approx0695,         // rational approximation, gamma2 = 12.0695
    Approx0661,         // rational approximation, gamma2 = 12.0661
    AltBasisCore,       // sparse {0,±1} triple (a bilinear map, not matmul)
    AltBasisCoB,        // change of basis composed with the sparse core
    Smirnov336Accurate, // appendix <3,3,6> accurate
    External,           // three SMS files
  };
  Kind kind = Kind::Strassen;
  std::size_t m = 2, k = 2, n = 2;            // Conventional / External dims
  std::string path_L, path_R, path_P;         // External

  static SchemeId conventional(std::size_t m, std::size_t k, std::size_t n) {
    SchemeId id;
    id.kind = Kind::Conventional;
    id.m = m; id.k = k; id.n = n;
    return id;
  }
  static SchemeId external(std::string l, std::string r, std::string p, std::size_t m,
                           std::size_t k, std::size_t n) {
    SchemeId id;
    id.kind = Kind::External;
    id.path_L = std::move(l); id.path_R = std::move(r); id.path_P = std::move(p);
    id.m = m; id.k = k; id.n = n;
    return id;
  }
};

HMRep load_scheme(const SchemeId& id);

// Parses a bundled scheme name as used by the CLI (e.g. "strassen",
// "winograd", "accurate", "powers", "powrot", "approx0695", "approx0661",
// "altcore", "altbasis", "smirnov336acc", "conventional:MxKxN").
std::optional<SchemeId> scheme_by_name(const std::string& name);
std::vector<std::string> bundled_scheme_names();

// The bundled change-of-basis fixture that factors AccurateSqrt3.
CoBTriple bundled_cob_triple();

// Recombines a CoB triple into the plain HM representation it factors.
HMRep compose_altbasis(const CoBTriple& cob, std::size_t m, std::size_t k, std::size_t n,
                       const std::string& name = "altbasis-composed");

}  // namespace fmm
