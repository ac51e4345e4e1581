#pragma once

#include <string>
#include <vector>

#include "fmm/matrix.hpp"

namespace fmm {

// Straight-line program over a linear operator. Instructions form a DAG in
// single-assignment form: operands reference strictly earlier instructions.
struct Instr {
  enum class Op { Load, Zero, Add, Sub, Mul, Store };
  Op op;
  int a = -1, b = -1;  // operand instruction indices
  Coeff c;             // Mul constant
  int io = -1;         // Load: input index; Store: output index
};

struct Slp {
  int n_in = 0, n_out = 0;
  std::vector<Instr> instrs;

  struct Counts {
    long adds = 0;
    long mults = 0;  // non-unit constants that are not dyadic halvings
    long div2 = 0;   // |c| = 2^-t
    long muldiv() const { return mults + div2; }
  };
  Counts counts() const;
  void check() const;  // single-assignment / store-once structural checks
  std::string to_text() const;
};

template <typename T>
std::vector<T> eval_slp(const Slp& s, const std::vector<T>& x);

// Row-by-row realization: adds = nnz - rows with support, mults = entries
// outside {0, +-1}.
struct LinOp {
  CoeffMatrix M;
  enum class Tag { L, R, P, Generic } tag = Tag::Generic;
};

struct CfOptions {
  int branch_budget = 64;
};

Slp naive_slp(const LinOp& op);
Slp cancellation_free(const LinOp& op, const CfOptions& opts = {});
Slp kernel_decompose(const LinOp& op, const CfOptions& opts = {});
Slp transpose_slp(const Slp& s);
Slp best_of(const LinOp& op, const CfOptions& opts = {});

struct OperationCountReport {
  struct Line {
    std::string part;  // "L", "R", "P"
    Slp::Counts naive, best;
  };
  std::vector<Line> lines;
  Slp::Counts naive_total, best_total;
  std::string to_csv() const;
};

struct HMRep;  // defined in hmrep.hpp
OperationCountReport codegen_report(const HMRep& h, const CfOptions& opts = {});

}  // namespace fmm
