#include "fmm/schemes.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fmm/scheme_data.hpp"
#include "fmm/sms.hpp"

namespace fmm {
namespace {

HMRep make(std::size_t m, std::size_t k, std::size_t n, const char* l, const char* r,
           const char* p, std::string name, std::string prov) {
  HMRep h;
  h.m = m; h.k = k; h.n = n;
  h.L = detail::parse_sms_ext(l);
  h.R = detail::parse_sms_ext(r);
  h.P = detail::parse_sms_ext(p);
  h.r = h.L.rows();
  h.name = std::move(name);
  h.provenance = std::move(prov);
  h.check_shapes();
  return h;
}

HMRep conventional(std::size_t m, std::size_t k, std::size_t n) {
  HMRep h;
  h.m = m; h.k = k; h.n = n;
  h.r = m * k * n;
  h.L = CoeffMatrix(h.r, m * k);
  h.R = CoeffMatrix(h.r, k * n);
  h.P = CoeffMatrix(m * n, h.r);
  std::size_t t = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t kk = 0; kk < k; ++kk)
      for (std::size_t j = 0; j < n; ++j, ++t) {
        h.L.at(t, i * k + kk) = Coeff(1);
        h.R.at(t, kk * n + j) = Coeff(1);
        h.P.at(i * n + j, t) = Coeff(1);
      }
  std::ostringstream nm;
  nm << "conventional:" << m << "x" << k << "x" << n;
  h.name = nm.str();
  h.provenance = "canonical basis products";
  return h;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

HMRep load_scheme(const SchemeId& id) {
  using K = SchemeId::Kind;
  switch (id.kind) {
    case K::Conventional:
      return conventional(id.m, id.k, id.n);
    case K::Strassen:
      return make(2, 2, 2, data::strassen_L, data::strassen_R, data::strassen_P, "strassen",
                  "Strassen 1969");
    case K::Winograd:
      return make(2, 2, 2, data::winograd_L, data::winograd_R, data::winograd_P, "winograd",
                  "Winograd 1977 variant");
    case K::AccurateSqrt3:
      return make(2, 2, 2, data::asopt_L, data::asopt_R, data::asopt_P, "accurate",
                  "gamma2-optimal 2x2x2 variant over Q(sqrt3)");
    case K::Powers:
      return make(2, 2, 2, data::powers_L, data::powers_R, data::powers_P, "powers",
                  "power-of-two approximation of the accurate variant");
    case K::PowRot:
      return make(2, 2, 2, data::powrot_L, data::powrot_R, data::powrot_P, "powrot",
                  "orthogonal optimization of the powers variant");
    case K::Approx0695:
      return make(2, 2, 2, data::a0695_L, data::a0695_R, data::a0695_P, "approx0695",
                  "rational approximation, growth factor 12.0695");
    case K::Approx0661:
      return make(2, 2, 2, data::a0661_L, data::a0661_R, data::a0661_P, "approx0661",
                  "rational approximation, growth factor 12.0661");
    case K::AltBasisCore:
      return make(2, 2, 2, data::altcore_L, data::altcore_R, data::altcore_P, "altcore",
                  "sparse alternative-basis core of the accurate variant");
    case K::AltBasisCoB:
      return compose_altbasis(bundled_cob_triple(), 2, 2, 2, "altbasis");
    case K::Smirnov336Accurate:
      return make(3, 3, 6, data::smirnov336acc_L, data::smirnov336acc_R, data::smirnov336acc_P,
                  "smirnov336acc", "accurate variant of Smirnov 3x3x6");
    case K::External: {
      HMRep h;
      h.m = id.m; h.k = id.k; h.n = id.n;
      h.L = parse_sms(slurp(id.path_L));
      h.R = parse_sms(slurp(id.path_R));
      h.P = parse_sms(slurp(id.path_P));
      h.r = h.L.rows();
      h.name = "external";
      h.provenance = id.path_L + "," + id.path_R + "," + id.path_P;
      h.check_shapes();
      return h;
    }
  }
  throw std::logic_error("load_scheme: bad kind");
}

std::optional<SchemeId> scheme_by_name(const std::string& name) {
  using K = SchemeId::Kind;
  SchemeId id;
  if (name == "strassen") id.kind = K::Strassen;
  else if (name == "winograd") id.kind = K::Winograd;
  else if (name == "accurate" || name == "accuratesqrt3") id.kind = K::AccurateSqrt3;
  else if (name == "powers") id.kind = K::Powers;
  else if (name == "powrot") id.kind = K::PowRot;
  else if (name == "approx0695") id.kind = K::Approx0695;
  else if (name == "approx0661") id.kind = K::Approx0661;
  else if (name == "altcore") id.kind = K::AltBasisCore;
  else if (name == "altbasis") id.kind = K::AltBasisCoB;
  else if (name == "smirnov336acc") id.kind = K::Smirnov336Accurate;
  else if (name.rfind("conventional", 0) == 0) {
    std::size_t m = 2, k = 2, n = 2;
    auto colon = name.find(':');
    if (colon != std::string::npos) {
      if (std::sscanf(name.c_str() + colon + 1, "%zux%zux%zu", &m, &k, &n) != 3)
        return std::nullopt;
    }
    return SchemeId::conventional(m, k, n);
  } else
    return std::nullopt;
  return id;
}

std::vector<std::string> bundled_scheme_names() {
  return {"conventional:2x2x2", "strassen", "winograd", "accurate",      "powers",
          "powrot",             "approx0695", "approx0661", "altcore",   "altbasis",
          "smirnov336acc"};
}

CoBTriple bundled_cob_triple() {
  CoBTriple c;
  c.phi = detail::parse_sms_ext(data::altcob_L);
  c.psi = detail::parse_sms_ext(data::altcob_R);
  c.nu = detail::parse_sms_ext(data::altcob_P);
  c.Ls = detail::parse_sms_ext(data::altcore_L);
  c.Rs = detail::parse_sms_ext(data::altcore_R);
  c.Ps = detail::parse_sms_ext(data::altcore_P);
  c.core_zpm1 = true;
  return c;
}

HMRep compose_altbasis(const CoBTriple& cob, std::size_t m, std::size_t k, std::size_t n,
                       const std::string& name) {
  HMRep h;
  h.m = m; h.k = k; h.n = n;
  h.L = cob.Ls * cob.phi;
  h.R = cob.Rs * cob.psi;
  h.P = cob.nu.transposed() * cob.Ps;
  h.r = h.L.rows();
  h.name = name;
  h.provenance = "change-of-basis composition";
  h.check_shapes();
  return h;
}

}  // namespace fmm
