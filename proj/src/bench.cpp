#include "fmm/bench.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fmm {
namespace {

constexpr double kUnitRoundoff = 0x1p-53;

struct DD {
  double hi = 0, lo = 0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

inline DD dd_add(DD x, double y) {
  DD s = two_sum(x.hi, y);
  s.lo += x.lo;
  DD t = two_sum(s.hi, s.lo);
  return t;
}

std::uint64_t mix_seed(Dist dist, std::size_t m, std::size_t n, std::uint64_t seed) {
  std::uint64_t h = seed;
  auto mix = [&](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(dist) + 1);
  mix(m);
  mix(n);
  return h;
}

double max_abs(const DMat& a) {
  double m = 0;
  for (double x : a.a) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::string dist_name(Dist d) {
  switch (d) {
    case Dist::Uniform11: return "uniform";
    case Dist::Normal01: return "normal";
    case Dist::RandSvd: return "randsvd";
  }
  return "?";
}

DMat gen_matrix(Dist dist, std::size_t m, std::size_t n, std::uint64_t seed, double cond) {
  std::mt19937_64 rng(mix_seed(dist, m, n, seed));
  DMat out(m, n);
  if (dist == Dist::Uniform11) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double& x : out.a) x = u(rng);
  } else if (dist == Dist::Normal01) {
    std::normal_distribution<double> g(0.0, 1.0);
    for (double& x : out.a) x = g(rng);
  } else {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd gu(m, m), gv(n, n);
    for (Eigen::Index i = 0; i < gu.rows(); ++i)
      for (Eigen::Index j = 0; j < gu.cols(); ++j) gu(i, j) = g(rng);
    for (Eigen::Index i = 0; i < gv.rows(); ++i)
      for (Eigen::Index j = 0; j < gv.cols(); ++j) gv(i, j) = g(rng);
    Eigen::MatrixXd qu = Eigen::HouseholderQR<Eigen::MatrixXd>(gu).householderQ();
    Eigen::MatrixXd qv = Eigen::HouseholderQR<Eigen::MatrixXd>(gv).householderQ();
    std::size_t r = std::min(m, n);
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(m, n);
    for (std::size_t i = 0; i < r; ++i)
      s(i, i) = std::pow(cond, -(static_cast<double>(i) / static_cast<double>(r - 1 ? r - 1 : 1)));
    Eigen::MatrixXd a = qu * s * qv.transpose();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) = a(i, j);
  }
  return out;
}

DMat reference_mm(const DMat& A, const DMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("reference_mm: dimension mismatch");
  DMat C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < B.cols; ++j) {
      DD acc;
      for (std::size_t k = 0; k < A.cols; ++k) {
        DD p = two_prod(A.at(i, k), B.at(k, j));
        acc = dd_add(acc, p.hi);
        acc.lo += p.lo;
      }
      C.at(i, j) = acc.hi + acc.lo;
    }
  return C;
}

bool BenchResult::all_within_bound() const {
  for (const auto& r : records)
    if (!(r.ratio <= 1.0)) return false;
  return true;
}

namespace {

struct PreparedEntry {
  const BenchEntry* entry;
  std::size_t ell = 0;
  double ebound = 0;
  HMRep rep;  // Plain / AltBasis
};

}  // namespace

BenchResult run_bench(const BenchConfig& cfg) {
  BenchResult res;
  for (const auto& size : cfg.sizes) {
    std::size_t M = size[0], K = size[1], N = size[2];
    // prepare every runnable entry for this size
    std::vector<PreparedEntry> prepared;
    for (const auto& entry : cfg.entries) {
      PreparedEntry pe;
      pe.entry = &entry;
      bool ok = true;
      if (entry.plan == PlanKind::Plain || entry.plan == PlanKind::AltBasis) {
        pe.rep = compile_scheme(entry.scheme).rep;
        std::size_t bm = M, bk = K, bn = N;
        if (cfg.levels > 0) {
          pe.ell = cfg.levels;
          for (std::size_t l = 0; l < pe.ell && ok; ++l) {
            if (bm % pe.rep.m || bk % pe.rep.k || bn % pe.rep.n) ok = false;
            bm /= pe.rep.m; bk /= pe.rep.k; bn /= pe.rep.n;
          }
        } else {
          while (bm % pe.rep.m == 0 && bk % pe.rep.k == 0 && bn % pe.rep.n == 0 &&
                 bm / pe.rep.m >= cfg.min_base && bk / pe.rep.k >= cfg.min_base &&
                 bn / pe.rep.n >= cfg.min_base) {
            bm /= pe.rep.m; bk /= pe.rep.k; bn /= pe.rep.n;
            ++pe.ell;
          }
          ok = pe.ell > 0;
        }
        if (ok && entry.plan == PlanKind::Plain) ok = validate_matmul(pe.rep).valid();
      } else if (entry.plan == PlanKind::Mixed) {
        std::size_t bm = M, bk = K, bn = N;
        for (const auto& sid : entry.schedule) {
          const HMRep& h = compile_scheme(sid).rep;
          if (bm % h.m || bk % h.k || bn % h.n) { ok = false; break; }
          bm /= h.m; bk /= h.k; bn /= h.n;
        }
        pe.ell = entry.schedule.size();
      }
      if (!ok) {
        res.skipped.push_back(entry.label + " at " + std::to_string(M) + "x" + std::to_string(K) +
                              "x" + std::to_string(N));
        continue;
      }
      if (entry.plan == PlanKind::Classical) {
        pe.ebound = static_cast<double>(K) * static_cast<double>(K);
      } else if (entry.plan == PlanKind::Plain) {
        std::size_t k0 = K;
        for (std::size_t l = 0; l < pe.ell; ++l) k0 /= pe.rep.k;
        pe.ebound = error_bound(pe.rep, NormId::Max, NormId::Max, pe.ell, k0).e_ell;
      } else if (entry.plan == PlanKind::AltBasis) {
        std::size_t k0 = K;
        for (std::size_t l = 0; l < pe.ell; ++l) k0 /= pe.rep.k;
        CoBTriple cob = bundled_cob_triple();
        HMRep core;
        core.m = pe.rep.m; core.k = pe.rep.k; core.n = pe.rep.n;
        core.L = cob.Ls; core.R = cob.Rs; core.P = cob.Ps;
        core.r = cob.Ls.rows();
        pe.ebound = altbasis_bound(core, cob, NormId::Max, NormId::Max, pe.ell, k0).e_ell;
      } else {
        double gprod = 1, qsum = 0, k0 = static_cast<double>(K);
        for (const auto& sid : entry.schedule) {
          const HMRep& h = compile_scheme(sid).rep;
          gprod *= growth_factor(h, NormId::Max, NormId::Max);
          qsum += static_cast<double>(q0(h));
          k0 /= static_cast<double>(h.k);
        }
        pe.ebound = gprod * (k0 * k0 + k0 * qsum);
      }
      prepared.push_back(std::move(pe));
    }
    if (prepared.empty()) continue;

    for (std::size_t trial = 0; trial < cfg.trials; ++trial)
      for (Dist dist : cfg.dists) {
        std::uint64_t tseed = cfg.seed ^ trial;
        DMat A = gen_matrix(dist, M, K, tseed, cfg.cond);
        DMat B = gen_matrix(dist, K, N, tseed + 0x5851f42d4c957f2dULL, cfg.cond);
        DMat ref = reference_mm(A, B);
        double scale = max_abs(A) * max_abs(B);
        for (const auto& pe : prepared) {
          const BenchEntry& entry = *pe.entry;
          DMat C;
          switch (entry.plan) {
            case PlanKind::Classical: C = classical_mm(A, B); break;
            case PlanKind::Plain: {
              RecursionPlan plan;
              plan.levels.assign(pe.ell, entry.scheme);
              C = recursive_mm(plan, A, B);
              break;
            }
            case PlanKind::AltBasis: {
              AltPlan plan;
              plan.cob = bundled_cob_triple();
              plan.levels = pe.ell;
              plan.m = pe.rep.m; plan.k = pe.rep.k; plan.n = pe.rep.n;
              C = altbasis_mm(plan, A, B);
              break;
            }
            case PlanKind::Mixed: {
              RecursionPlan plan;
              plan.levels = entry.schedule;
              C = recursive_mm(plan, A, B);
              break;
            }
          }
          double err = 0;
          for (std::size_t t = 0; t < C.a.size(); ++t)
            err = std::max(err, std::abs(C.a[t] - ref.a[t]));
          double bound_abs = pe.ebound * scale * kUnitRoundoff;
          BenchRecord rec;
          rec.scheme = entry.label;
          switch (entry.plan) {
            case PlanKind::Plain: rec.plan = "plain"; break;
            case PlanKind::AltBasis: rec.plan = "altbasis"; break;
            case PlanKind::Classical: rec.plan = "classical"; break;
            case PlanKind::Mixed: rec.plan = "mixed"; break;
          }
          rec.m = M; rec.k = K; rec.n = N;
          rec.levels = pe.ell;
          rec.dist = dist_name(dist);
          rec.trial = trial;
          rec.err_max = err;
          rec.rel_err = scale > 0 ? err / scale : err;
          rec.bound = bound_abs;
          rec.ratio = bound_abs > 0 ? err / bound_abs : 0.0;
          rec.seed = tseed;
          res.records.push_back(rec);
        }
      }
  }
  std::stable_sort(res.records.begin(), res.records.end(),
                   [](const BenchRecord& a, const BenchRecord& b) {
                     if (a.scheme != b.scheme) return a.scheme < b.scheme;
                     if (a.m != b.m) return a.m < b.m;
                     if (a.k != b.k) return a.k < b.k;
                     if (a.n != b.n) return a.n < b.n;
                     if (a.dist != b.dist) return a.dist < b.dist;
                     return a.trial < b.trial;
                   });
  return res;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream o;
  o << "scheme,plan,m,k,n,levels,dist,trial,err_max,rel_err,bound,ratio,seed\n";
  char buf[64];
  auto f = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  for (const auto& r : records)
    o << r.scheme << ',' << r.plan << ',' << r.m << ',' << r.k << ',' << r.n << ',' << r.levels
      << ',' << r.dist << ',' << r.trial << ',' << f(r.err_max) << ',' << f(r.rel_err) << ','
      << f(r.bound) << ',' << f(r.ratio) << ',' << r.seed << '\n';
  return o.str();
}

BenchConfig default_bench(std::uint64_t seed) {
  BenchConfig cfg;
  cfg.seed = seed;
  cfg.trials = 10;
  cfg.dists = {Dist::Uniform11, Dist::Normal01};
  for (std::size_t n : {32, 64, 128, 256}) cfg.sizes.push_back({n, n, n});
  auto add = [&](const char* name, PlanKind plan) {
    BenchEntry e;
    e.scheme = *scheme_by_name(name);
    e.plan = plan;
    e.label = name;
    cfg.entries.push_back(e);
  };
  add("winograd", PlanKind::Plain);
  add("strassen", PlanKind::Plain);
  add("powers", PlanKind::Plain);
  add("accurate", PlanKind::Plain);
  BenchEntry conv;
  conv.scheme = SchemeId::conventional(2, 2, 2);
  conv.plan = PlanKind::Classical;
  conv.label = "conventional";
  cfg.entries.push_back(conv);
  BenchEntry alt;
  alt.scheme = *scheme_by_name("accurate");
  alt.plan = PlanKind::AltBasis;
  alt.label = "accurate-altb";
  cfg.entries.push_back(alt);
  return cfg;
}

}  // namespace fmm
