// Command-line front end: validation, growth factors and error bounds, orbit
// descent, SLP optimization, sparsification, recursive multiplication and the
// accuracy benchmark.
#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>

#include "fmm/bench.hpp"
#include "fmm/isotropy.hpp"
#include "fmm/sms.hpp"
#include "fmm/sparsify.hpp"

using namespace fmm;

namespace {

SchemeId resolve_scheme(const std::string& name, const std::vector<std::string>& ext,
                        std::size_t m, std::size_t k, std::size_t n) {
  if (!ext.empty()) {
    if (ext.size() != 3) throw CLI::ValidationError("--input needs three SMS paths (L R P)");
    return SchemeId::external(ext[0], ext[1], ext[2], m, k, n);
  }
  auto id = scheme_by_name(name);
  if (!id) throw CLI::ValidationError("unknown scheme '" + name + "'");
  return *id;
}

NormId parse_norm(const std::string& s) {
  if (s == "2" || s == "two") return NormId::Two;
  if (s == "inf" || s == "max") return NormId::Max;
  throw CLI::ValidationError("norm must be '2' or 'inf'");
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fast recursive matrix multiplication toolkit"};
  app.require_subcommand(1);

  std::string scheme = "strassen", pn = "inf", qn = "inf", out, mode = "best";
  std::vector<std::string> ext_paths;
  std::size_t m = 2, k = 2, n = 2, size = 128, levels = 0, trials = 10;
  std::uint64_t seed = 0;
  bool have_seed = false, snap = false, altbasis = false, emit_slp = false;
  int restarts = 32, budget = 20000;
  std::string dist = "uniform";
  std::vector<std::string> schedule;

  auto add_scheme_opts = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", scheme, "bundled scheme name");
    cmd->add_option("--input", ext_paths, "three external SMS files (L R P)")->expected(3);
    cmd->add_option("--m", m);
    cmd->add_option("--k", k);
    cmd->add_option("--n", n);
  };

  auto* validate = app.add_subcommand("validate", "check the matmul tensor identity");
  add_scheme_opts(validate);

  auto* gamma = app.add_subcommand("gamma", "growth factors and norm table");
  add_scheme_opts(gamma);
  gamma->add_option("--p", pn);
  gamma->add_option("--q", qn);
  gamma->add_option("--out", out, "CSV output path");

  auto* bounds = app.add_subcommand("bounds", "closed-form forward error bounds");
  add_scheme_opts(bounds);
  bounds->add_option("--levels", levels);
  std::size_t k0 = 1;
  bounds->add_option("--k0", k0);
  bounds->add_option("--out", out);

  auto* orbit = app.add_subcommand("orbit", "gamma_2 descent along the isotropy orbit");
  add_scheme_opts(orbit);
  orbit->add_option("--restarts", restarts);
  orbit->add_option("--budget", budget, "objective evaluations per restart");
  orbit->add_option("--seed", seed)->required();
  orbit->add_flag("--snap", snap, "snap parameters to simple constants");
  orbit->add_flag("--emit", emit_slp, "print the transformed rep as SMS with decimals");

  auto* optimize = app.add_subcommand("optimize", "straight-line program synthesis");
  std::string opt_input;
  optimize->add_option("--input", opt_input, "SMS file of the linear operator")->required();
  optimize->add_option("--mode", mode, "direct|kernel|transpose|best");
  std::string emit = "text-slp";
  optimize->add_option("--emit", emit, "text-slp|csv-counts");

  auto* transpose = app.add_subcommand("transpose", "Tellegen transposition of an operator SLP");
  transpose->add_option("--input", opt_input, "SMS file of the linear operator")->required();

  auto* sparsifyc = app.add_subcommand("sparsify", "alternative-basis sparsification");
  add_scheme_opts(sparsifyc);
  sparsifyc->add_option("--out", out);

  auto* mm = app.add_subcommand("mm", "recursive multiplication accuracy check");
  add_scheme_opts(mm);
  mm->add_option("--size", size);
  mm->add_option("--levels", levels);
  mm->add_option("--dist", dist, "uniform|normal|randsvd");
  mm->add_option("--seed", seed)->required();
  mm->add_flag("--altbasis", altbasis);
  mm->add_option("--schedule", schedule, "scheme names applied per level");

  auto* bench = app.add_subcommand("bench", "accuracy benchmark, CSV output");
  bench->add_option("--seed", seed)->required();
  bench->add_option("--trials", trials);
  bench->add_option("--out", out);
  bench->add_option("--dist", dist, "uniform|normal|randsvd|both");

  auto* catalog = app.add_subcommand("catalog", "list bundled schemes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      HMRep h = load_scheme(resolve_scheme(scheme, ext_paths, m, k, n));
      auto rep = validate_matmul(h);
      if (rep.valid()) {
        std::printf("%s: valid (%zu canonical pairs, %s)\n", h.name.c_str(),
                    h.m * h.k * h.k * h.n, rep.exact_mode ? "exact" : "1e-9 tolerance");
        return 0;
      }
      std::printf("%s: INVALID, %zu failing quadruples\n", h.name.c_str(), rep.failures.size());
      for (std::size_t i = 0; i < rep.failures.size() && i < 8; ++i) {
        const auto& f = rep.failures[i];
        std::printf("  (a%zu%zu, b%zu%zu) -> out %zu residual %g\n", f.a + 1, f.b + 1, f.c + 1,
                    f.d + 1, f.out, f.residual);
      }
      return 1;
    }

    if (gamma->parsed()) {
      HMRep h = load_scheme(resolve_scheme(scheme, ext_paths, m, k, n));
      NormId p = parse_norm(pn), q = parse_norm(qn);
      double g = growth_factor(h, p, q);
      NormTable t = norm_table(h);
      std::printf("scheme %s\n", h.name.c_str());
      std::printf("gamma_{%s,%s} = %.10g\n", pn.c_str(), qn.c_str(), g);
      std::printf("gamma_2 = %.10g   |.|_{2,3} = %.10g   |.|_F = %.10g\n", t.gamma2,
                  t.l23_product, t.frob_product);
      std::printf("Q0 = %ld\n", q0(h));
      if (!out.empty()) {
        char buf[256];
        std::string csv = "scheme,p,q,gamma,amp,q0,exponent,leading_coeff\n";
        bool mm = validate_matmul(h).valid();
        double amp = amplification(p, q, h.k, mm, g);
        double expo = std::log(g) / std::log(static_cast<double>(h.k));
        double lead = std::numeric_limits<double>::quiet_NaN();
        try {
          lead = error_bound(h, p, q, 1, 1).leading_coeff;
        } catch (const std::domain_error&) {
        }
        std::snprintf(buf, sizeof buf, "%s,%s,%s,%.17g,%.17g,%ld,%.17g,%.17g\n", h.name.c_str(),
                      pn.c_str(), qn.c_str(), g, amp, q0(h), expo, lead);
        write_out(out, csv + buf);
      }
      return 0;
    }

    if (bounds->parsed()) {
      HMRep h = load_scheme(resolve_scheme(scheme, ext_paths, m, k, n));
      std::string csv = "scheme,p,q,gamma,amp,q0,exponent,leading_coeff\n";
      std::printf("%-10s %4s %4s %10s %8s %4s %9s %12s\n", "scheme", "p", "q", "gamma", "amp",
                  "Q0", "exponent", "lead_coeff");
      for (NormId p : {NormId::Max, NormId::Two})
        for (NormId q : {NormId::Max, NormId::Two}) {
          BoundReport b = error_bound(h, p, q, levels, k0);
          const char* ps = p == NormId::Max ? "inf" : "2";
          const char* qs = q == NormId::Max ? "inf" : "2";
          std::printf("%-10s %4s %4s %10.4f %8.3f %4ld %9.4f %12.4f\n", h.name.c_str(), ps, qs,
                      b.gamma, b.amp, b.q0, b.exponent, b.leading_coeff);
          char buf[256];
          std::snprintf(buf, sizeof buf, "%s,%s,%s,%.17g,%.17g,%ld,%.17g,%.17g\n", h.name.c_str(),
                        ps, qs, b.gamma, b.amp, b.q0, b.exponent, b.leading_coeff);
          csv += buf;
        }
      if (!out.empty()) write_out(out, csv);
      return 0;
    }

    if (orbit->parsed()) {
      HMRep h = load_scheme(resolve_scheme(scheme, ext_paths, m, k, n));
      DescentOptions opts;
      opts.restarts = restarts;
      opts.max_evals_per_restart = budget;
      opts.seed = seed;
      opts.snap = snap;
      DescentResult res = minimize_gamma2(h, opts);
      std::printf("gamma_2: %.9f -> %.9f\n", gamma2(h), res.gamma2);
      std::printf("parameters:");
      for (double x : res.point.pack()) std::printf(" %.6g", x);
      std::printf("\n");
      if (emit_slp) {
        SmsWriteOptions w;
        w.decimal_export = true;
        std::printf("%s%s%s", write_sms(res.transformed.L, w).c_str(),
                    write_sms(res.transformed.R, w).c_str(),
                    write_sms(res.transformed.P, w).c_str());
      }
      return 0;
    }

    if (optimize->parsed() || transpose->parsed()) {
      std::ifstream f(opt_input, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + opt_input);
      std::stringstream ss;
      ss << f.rdbuf();
      LinOp op{parse_sms(ss.str()), LinOp::Tag::Generic};
      Slp s;
      if (transpose->parsed()) {
        s = transpose_slp(best_of(op));
      } else if (mode == "direct") {
        s = cancellation_free(op);
      } else if (mode == "kernel") {
        s = kernel_decompose(op);
      } else if (mode == "transpose") {
        s = transpose_slp(kernel_decompose({op.M.transposed(), op.tag}));
      } else {
        s = best_of(op);
      }
      auto c = s.counts();
      if (optimize->parsed() && emit == "csv-counts") {
        std::printf("adds,mults,div2\n%ld,%ld,%ld\n", c.adds, c.mults, c.div2);
      } else {
        std::printf("# adds=%ld mults=%ld div2=%ld\n%s", c.adds, c.mults, c.div2,
                    s.to_text().c_str());
      }
      return 0;
    }

    if (sparsifyc->parsed()) {
      HMRep h = load_scheme(resolve_scheme(scheme, ext_paths, m, k, n));
      CoBTriple c = sparsify(h);
      bool okf = verify_factorization(h, c);
      auto quality = cob_quality(c, NormId::Max, NormId::Max);
      HMRep core = core_as_rep(c, h.m, h.k, h.n);
      long adds = static_cast<long>(c.Ls.nnz() + c.Rs.nnz() + c.Ps.nnz()) -
                  static_cast<long>(c.Ls.rows() + c.Rs.rows() + c.Ps.rows());
      std::printf("# core {0,+-1}: %s, factorization %s, core additions %ld\n",
                  c.core_zpm1 ? "yes" : "no", okf ? "exact" : "FAILED", adds);
      std::printf("# core gamma_2 = %.9f, cob factor = %.6f, gamma_mmab(inf,inf) = %.4f\n",
                  gamma2(core), quality.factor, quality.gamma_mmab);
      std::string blocks;
      for (const CoeffMatrix* mp : {&c.phi, &c.psi, &c.nu, &c.Ls, &c.Rs, &c.Ps}) {
        SmsWriteOptions w;
        w.decimal_export = true;
        blocks += write_sms(*mp, w);
      }
      write_out(out, blocks);
      return okf ? 0 : 1;
    }

    if (mm->parsed()) {
      SchemeId id = resolve_scheme(scheme, ext_paths, m, k, n);
      Dist d = dist == "normal" ? Dist::Normal01
               : dist == "randsvd" ? Dist::RandSvd
                                   : Dist::Uniform11;
      const HMRep& rep = compile_scheme(id).rep;
      std::size_t M = size, K = size, N = size;
      DMat A = gen_matrix(d, M, K, seed);
      DMat B = gen_matrix(d, K, N, seed + 0x5851f42d4c957f2dULL);
      DMat C;
      std::size_t ell = levels;
      if (!schedule.empty()) {
        RecursionPlan plan;
        for (const auto& sname : schedule) {
          auto sid = scheme_by_name(sname);
          if (!sid) throw CLI::ValidationError("unknown scheme in schedule: " + sname);
          plan.levels.push_back(*sid);
        }
        C = recursive_mm(plan, A, B);
        ell = plan.levels.size();
      } else if (altbasis) {
        AltPlan plan;
        plan.cob = bundled_cob_triple();
        plan.levels = ell ? ell : 3;
        plan.m = rep.m; plan.k = rep.k; plan.n = rep.n;
        ell = plan.levels;
        C = altbasis_mm(plan, A, B);
      } else {
        RecursionPlan plan;
        plan.levels.assign(ell ? ell : 3, id);
        ell = plan.levels.size();
        C = recursive_mm(plan, A, B);
      }
      DMat ref = reference_mm(A, B);
      double err = 0, amax = 0, bmax = 0;
      for (std::size_t t = 0; t < C.a.size(); ++t) err = std::max(err, std::abs(C.a[t] - ref.a[t]));
      for (double x : A.a) amax = std::max(amax, std::abs(x));
      for (double x : B.a) bmax = std::max(bmax, std::abs(x));
      std::size_t kk0 = K;
      for (std::size_t l = 0; l < ell; ++l) kk0 /= rep.k;
      double eb = validate_matmul(rep).valid()
                      ? error_bound(rep, NormId::Max, NormId::Max, ell, kk0).e_ell
                      : 0;
      double bound = eb * amax * bmax * 0x1p-53;
      std::printf("max-norm error %.3e  predicted bound %.3e  ratio %.3f\n", err, bound,
                  bound > 0 ? err / bound : 0.0);
      return (bound == 0 || err <= bound) ? 0 : 1;
    }

    if (bench->parsed()) {
      BenchConfig cfg = default_bench(seed);
      cfg.trials = trials;
      if (dist == "normal") cfg.dists = {Dist::Normal01};
      else if (dist == "randsvd") cfg.dists = {Dist::RandSvd};
      else if (dist == "uniform") cfg.dists = {Dist::Uniform11};
      BenchResult res = run_bench(cfg);
      write_out(out, bench_csv(res.records));
      for (const auto& s : res.skipped) std::fprintf(stderr, "skipped: %s\n", s.c_str());
      // per-(scheme,size) medians
      std::map<std::string, std::vector<double>> med;
      for (const auto& r : res.records)
        med[r.scheme + " " + std::to_string(r.m) + " " + r.dist].push_back(r.err_max);
      for (auto& [key, v] : med) {
        std::sort(v.begin(), v.end());
        std::fprintf(stderr, "median %-28s %.3e\n", key.c_str(), v[v.size() / 2]);
      }
      if (!res.all_within_bound()) {
        std::fprintf(stderr, "BOUND VIOLATION\n");
        return 1;
      }
      return 0;
    }

    if (catalog->parsed()) {
      for (const auto& nm : bundled_scheme_names()) {
        HMRep h = load_scheme(*scheme_by_name(nm));
        bool valid = validate_matmul(h).valid();
        std::printf("%-20s %zux%zux%zu r=%-3zu %s\n", nm.c_str(), h.m, h.k, h.n, h.r,
                    valid ? "matmul" : "bilinear core");
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
