#include "fmm/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fmm {
namespace {

bool invert(const CoeffMatrix& b, CoeffMatrix& inv) {
  std::size_t e = b.rows();
  CoeffMatrix m(e, 2 * e);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) m.at(i, j) = b.at(i, j);
    m.at(i, e + i) = Coeff(1);
  }
  for (std::size_t c = 0; c < e; ++c) {
    std::size_t p = c;
    while (p < e && m.at(p, c).is_zero()) ++p;
    if (p == e) return false;
    if (p != c)
      for (std::size_t j = 0; j < 2 * e; ++j) std::swap(m.at(p, j), m.at(c, j));
    Coeff pv = m.at(c, c);
    for (std::size_t j = 0; j < 2 * e; ++j) m.at(c, j) = m.at(c, j) / pv;
    for (std::size_t r = 0; r < e; ++r) {
      if (r == c || m.at(r, c).is_zero()) continue;
      Coeff f = m.at(r, c);
      for (std::size_t j = 0; j < 2 * e; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  inv = CoeffMatrix(e, e);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) inv.at(i, j) = m.at(i, e + j);
  return true;
}

bool all_zpm1(const CoeffMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Coeff& c = m.at(i, j);
      if (!c.is_zero() && !c.is_unit()) return false;
    }
  return true;
}

struct Candidate {
  CoeffMatrix basis;  // e x e
  CoeffMatrix core;   // rows x e
  bool zpm1;
  std::size_t nnz;
};

// All spanning subsets of candidate basis rows, scored by core sparsity.
std::vector<Candidate> sparsify_matrix(const CoeffMatrix& m, std::size_t budget) {
  const std::size_t e = m.cols();
  std::vector<std::vector<Coeff>> cands;
  auto push = [&](std::vector<Coeff> v) {
    for (const auto& prev : cands)
      if (prev == v) return;
    cands.push_back(std::move(v));
  };
  // identity first so already-sparse inputs keep their basis
  for (std::size_t j = 0; j < e; ++j) {
    std::vector<Coeff> id(e);
    id[j] = Coeff(1);
    push(std::move(id));
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Coeff> row(e);
    bool nz = false;
    for (std::size_t j = 0; j < e; ++j) {
      row[j] = m.at(i, j);
      nz |= !row[j].is_zero();
    }
    if (!nz) continue;
    std::size_t lead = 0;
    while (row[lead].is_zero()) ++lead;
    if (!row[lead].is_unit()) {
      std::vector<Coeff> scaled(e);
      for (std::size_t j = 0; j < e; ++j) scaled[j] = row[j] / row[lead];
      push(std::move(scaled));
    }
    push(std::move(row));
  }

  std::vector<Candidate> out;
  std::vector<std::size_t> idx(e);
  std::size_t seen = 0;
  // enumerate combinations of candidate rows
  std::vector<std::size_t> stack;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (seen > budget) return;
    if (stack.size() == e) {
      ++seen;
      CoeffMatrix b(e, e);
      for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) b.at(i, j) = cands[stack[i]][j];
      CoeffMatrix binv;
      if (!invert(b, binv)) return;
      CoeffMatrix core = m * binv;
      out.push_back({b, core, all_zpm1(core), core.nnz()});
      return;
    }
    for (std::size_t c = start; c < cands.size(); ++c) {
      stack.push_back(c);
      rec(c + 1);
      stack.pop_back();
      if (seen > budget) return;
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.zpm1 != b.zpm1) return a.zpm1 > b.zpm1;
    return a.nnz < b.nnz;
  });
  return out;
}

double core_gamma2(const CoeffMatrix& ls, const CoeffMatrix& rs, const CoeffMatrix& psT) {
  double g = 0;
  for (std::size_t i = 0; i < ls.rows(); ++i) {
    double a = 0, b = 0, c = 0;
    for (std::size_t j = 0; j < ls.cols(); ++j) {
      double x = ls.at(i, j).to_double();
      a += x * x;
    }
    for (std::size_t j = 0; j < rs.cols(); ++j) {
      double x = rs.at(i, j).to_double();
      b += x * x;
    }
    for (std::size_t j = 0; j < psT.cols(); ++j) {
      double x = psT.at(i, j).to_double();
      c += x * x;
    }
    g += std::sqrt(a) * std::sqrt(b) * std::sqrt(c);
  }
  return g;
}

}  // namespace

CoBTriple sparsify(const HMRep& h, const SparsifyOptions& opts) {
  if (!h.exact) throw std::invalid_argument("sparsify: requires an exact representation");
  CoeffMatrix pt = h.P.transposed();
  auto cl = sparsify_matrix(h.L, opts.subset_budget);
  auto cr = sparsify_matrix(h.R, opts.subset_budget);
  auto cp = sparsify_matrix(pt, opts.subset_budget);
  if (cl.empty() || cr.empty() || cp.empty())
    throw std::runtime_error("sparsify: no invertible basis found");

  auto top = [](std::vector<Candidate>& v) {
    // keep only the {0,±1} candidates tied on minimal nnz (or, failing that,
    // the sparsest fallback)
    std::vector<Candidate> keep;
    bool zp = v.front().zpm1;
    std::size_t best = v.front().nnz;
    for (auto& c : v)
      if (c.zpm1 == zp && c.nnz == best) keep.push_back(std::move(c));
    return keep;
  };
  auto tl = top(cl), tr = top(cr), tp = top(cp);
  const Candidate* bl = nullptr;
  const Candidate* br = nullptr;
  const Candidate* bp = nullptr;
  double bg = 0;
  for (const auto& a : tl)
    for (const auto& b : tr)
      for (const auto& c : tp) {
        double g = core_gamma2(a.core, b.core, c.core);
        if (bl == nullptr || g < bg - 1e-12) {
          bl = &a; br = &b; bp = &c; bg = g;
        }
      }
  CoBTriple res;
  res.phi = bl->basis;
  res.psi = br->basis;
  res.nu = bp->basis;
  res.Ls = bl->core;
  res.Rs = br->core;
  res.Ps = bp->core.transposed();
  res.core_zpm1 = bl->zpm1 && br->zpm1 && bp->zpm1;
  return res;
}

bool verify_factorization(const HMRep& h, const CoBTriple& c) {
  if (!(c.Ls * c.phi == h.L)) return false;
  if (!(c.Rs * c.psi == h.R)) return false;
  if (!(c.nu.transposed() * c.Ps == h.P)) return false;
  // re-validate the recombined scheme as a matrix product
  HMRep recomposed = compose_altbasis(c, h.m, h.k, h.n);
  return validate_matmul(recomposed).valid();
}

CobQuality cob_quality(const CoBTriple& c, NormId p, NormId q) {
  CobQuality out;
  out.factor = operator_norm(c.phi, q) * operator_norm(c.psi, q) *
               operator_norm(c.nu.transposed(), p);
  // core growth factor in (p,q)
  HMRep core;
  core.m = core.k = core.n = 0;  // norms only need the matrices
  core.L = c.Ls;
  core.R = c.Rs;
  core.P = c.Ps;
  core.r = c.Ls.rows();
  out.gamma_mmab = growth_factor(core, p, q) * out.factor;
  return out;
}

HMRep core_as_rep(const CoBTriple& c, std::size_t m, std::size_t k, std::size_t n) {
  HMRep core;
  core.m = m; core.k = k; core.n = n;
  core.L = c.Ls;
  core.R = c.Rs;
  core.P = c.Ps;
  core.r = c.Ls.rows();
  core.name = "sparse-core";
  core.provenance = "alternative-basis core";
  return core;
}

}  // namespace fmm
