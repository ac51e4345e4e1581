#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fmm/executor.hpp"
#include "fmm/norms.hpp"

namespace fmm {

enum class Dist { Uniform11, Normal01, RandSvd };

std::string dist_name(Dist d);

// Deterministic per (dist, m, n, seed). RandSvd uses log-spaced singular
// values from 1 down to 1/cond with orthogonal factors from QR of Gaussians.
DMat gen_matrix(Dist dist, std::size_t m, std::size_t n, std::uint64_t seed, double cond = 1e12);

// Double-double (compensated) reference product; per-entry error O(k eps^2).
DMat reference_mm(const DMat& A, const DMat& B);

enum class PlanKind { Plain, AltBasis, Classical, Mixed };

struct BenchEntry {
  SchemeId scheme;
  PlanKind plan = PlanKind::Plain;
  std::string label;                  // CSV scheme column
  std::vector<SchemeId> schedule;     // Mixed only
};

struct BenchConfig {
  std::vector<BenchEntry> entries;
  std::vector<std::array<std::size_t, 3>> sizes;  // (M, K, N)
  std::vector<Dist> dists = {Dist::Uniform11};
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  double cond = 1e12;
  std::size_t min_base = 8;  // recursion stops at blocks >= this when levels=0
  std::size_t levels = 0;    // 0 = auto
};

struct BenchRecord {
  std::string scheme;
  std::string plan;
  std::size_t m, k, n;
  std::size_t levels;
  std::string dist;
  std::size_t trial;
  double err_max;
  double rel_err;
  double bound;
  double ratio;
  std::uint64_t seed;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<std::string> skipped;  // per-scheme divisibility failures
  bool all_within_bound() const;
};

BenchResult run_bench(const BenchConfig& cfg);
std::string bench_csv(const std::vector<BenchRecord>& records);

// Default configuration behind the accuracy experiments: the 2x2x2 family on
// square sizes with uniform and normal inputs.
BenchConfig default_bench(std::uint64_t seed);

}  // namespace fmm
