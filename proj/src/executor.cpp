#include "fmm/executor.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace fmm {
namespace {

// Block value for evaluating linear SLPs over submatrices.
struct Block {
  DMat m;
  Block() = default;
  explicit Block(DMat d) : m(std::move(d)) {}
  Block operator+(const Block& o) const {
    Block r(DMat(m.rows, m.cols));
    for (std::size_t i = 0; i < m.a.size(); ++i) r.m.a[i] = m.a[i] + o.m.a[i];
    return r;
  }
  Block operator-(const Block& o) const {
    Block r(DMat(m.rows, m.cols));
    for (std::size_t i = 0; i < m.a.size(); ++i) r.m.a[i] = m.a[i] - o.m.a[i];
    return r;
  }
  Block scaled(double c) const {
    Block r(DMat(m.rows, m.cols));
    for (std::size_t i = 0; i < m.a.size(); ++i) r.m.a[i] = c * m.a[i];
    return r;
  }
};

std::vector<Block> eval_block_slp(const Slp& s, const std::vector<Block>& in, std::size_t br,
                                  std::size_t bc) {
  std::vector<Block> val(s.instrs.size());
  std::vector<Block> out(static_cast<std::size_t>(s.n_out));
  for (std::size_t t = 0; t < s.instrs.size(); ++t) {
    const auto& ins = s.instrs[t];
    switch (ins.op) {
      case Instr::Op::Load: val[t] = in[static_cast<std::size_t>(ins.io)]; break;
      case Instr::Op::Zero: val[t] = Block(DMat(br, bc)); break;
      case Instr::Op::Add: val[t] = val[ins.a] + val[ins.b]; break;
      case Instr::Op::Sub: val[t] = val[ins.a] - val[ins.b]; break;
      case Instr::Op::Mul: val[t] = val[ins.a].scaled(ins.c.to_double()); break;
      case Instr::Op::Store: out[static_cast<std::size_t>(ins.io)] = val[ins.a]; break;
    }
  }
  return out;
}

std::vector<Block> split_blocks(const DMat& a, std::size_t gr, std::size_t gc) {
  std::size_t br = a.rows / gr, bc = a.cols / gc;
  std::vector<Block> out(gr * gc, Block(DMat(br, bc)));
  for (std::size_t i = 0; i < gr; ++i)
    for (std::size_t j = 0; j < gc; ++j) {
      DMat& b = out[i * gc + j].m;
      for (std::size_t r = 0; r < br; ++r)
        for (std::size_t c = 0; c < bc; ++c) b.at(r, c) = a.at(i * br + r, j * bc + c);
    }
  return out;
}

DMat join_blocks(const std::vector<Block>& blocks, std::size_t gr, std::size_t gc) {
  std::size_t br = blocks[0].m.rows, bc = blocks[0].m.cols;
  DMat out(gr * br, gc * bc);
  for (std::size_t i = 0; i < gr; ++i)
    for (std::size_t j = 0; j < gc; ++j) {
      const DMat& b = blocks[i * gc + j].m;
      for (std::size_t r = 0; r < br; ++r)
        for (std::size_t c = 0; c < bc; ++c) out.at(i * br + r, j * bc + c) = b.at(r, c);
    }
  return out;
}

std::string scheme_key(const SchemeId& id) {
  std::string k = std::to_string(static_cast<int>(id.kind));
  if (id.kind == SchemeId::Kind::Conventional || id.kind == SchemeId::Kind::External)
    k += ":" + std::to_string(id.m) + "x" + std::to_string(id.k) + "x" + std::to_string(id.n) +
         ":" + id.path_L;
  return k;
}

DMat run_levels(std::span<const SchemeId> head, std::span<const SchemeId> tail, const DMat& A,
                const DMat& B) {
  if (head.empty()) {
    if (tail.empty()) return classical_mm(A, B);
    return run_levels(tail, {}, A, B);
  }
  const CompiledScheme& cs = compile_scheme(head.front());
  const HMRep& h = cs.rep;
  if (A.rows % h.m != 0 || A.cols % h.k != 0 || B.rows % h.k != 0 || B.cols % h.n != 0)
    throw std::invalid_argument("recursive_mm: dimensions do not factor by scheme " + h.name);
  auto ablocks = split_blocks(A, h.m, h.k);
  auto bblocks = split_blocks(B, h.k, h.n);
  std::size_t abr = A.rows / h.m, abc = A.cols / h.k;
  std::size_t bbr = B.rows / h.k, bbc = B.cols / h.n;
  auto left = eval_block_slp(cs.l_slp, ablocks, abr, abc);
  auto right = eval_block_slp(cs.r_slp, bblocks, bbr, bbc);
  std::vector<Block> prods(h.r);
  for (std::size_t i = 0; i < h.r; ++i)
    prods[i] = Block(run_levels(head.subspan(1), tail, left[i].m, right[i].m));
  auto cblocks = eval_block_slp(cs.p_slp, prods, abr, bbc);
  return join_blocks(cblocks, h.m, h.n);
}

}  // namespace

DMat classical_mm(const DMat& A, const DMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("classical_mm: dimension mismatch");
  DMat C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      double aik = A.at(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

const CompiledScheme& compile_scheme(const SchemeId& id) {
  static std::map<std::string, CompiledScheme> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = scheme_key(id);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  CompiledScheme cs;
  cs.rep = load_scheme(id);
  if (cs.rep.exact && !validate_matmul(cs.rep).valid())
    throw std::invalid_argument("compile_scheme: " + cs.rep.name + " is not a matmul scheme");
  cs.l_slp = best_of({cs.rep.L, LinOp::Tag::L});
  cs.r_slp = best_of({cs.rep.R, LinOp::Tag::R});
  cs.p_slp = best_of({cs.rep.P, LinOp::Tag::P});
  return cache.emplace(std::move(key), std::move(cs)).first->second;
}

DMat recursive_mm(const RecursionPlan& plan, const DMat& A, const DMat& B) {
  return run_levels(plan.levels, {}, A, B);
}

DMat recursive_mm_split(std::span<const SchemeId> head, std::span<const SchemeId> tail,
                        const DMat& A, const DMat& B) {
  return run_levels(head, tail, A, B);
}

namespace {

// Recursive change of basis: out-block a = sum_b T(a,b) * rec(block_b).
DMat cob_apply(const CoeffMatrix& t, const DMat& A, std::size_t gr, std::size_t gc,
               std::size_t ell) {
  if (ell == 0) return A;
  if (A.rows % gr != 0 || A.cols % gc != 0)
    throw std::invalid_argument("altbasis_mm: dimensions do not factor");
  auto blocks = split_blocks(A, gr, gc);
  std::vector<Block> rec(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    rec[b] = Block(cob_apply(t, blocks[b].m, gr, gc, ell - 1));
  std::vector<Block> out(t.rows(), Block(DMat(rec[0].m.rows, rec[0].m.cols)));
  for (std::size_t a = 0; a < t.rows(); ++a) {
    bool first = true;
    for (std::size_t b = 0; b < t.cols(); ++b) {
      const Coeff& c = t.at(a, b);
      if (c.is_zero()) continue;
      Block term = c.is_one() ? rec[b] : rec[b].scaled(c.to_double());
      out[a] = first ? term : out[a] + term;
      first = false;
    }
  }
  return join_blocks(out, gr, gc);
}

struct CompiledCore {
  Slp l_slp, r_slp, p_slp;
};

DMat core_recursion(const CompiledCore& cc, const CoBTriple& cob, std::size_t m, std::size_t k,
                    std::size_t n, std::size_t ell, const DMat& A, const DMat& B) {
  if (ell == 0) return classical_mm(A, B);
  auto ablocks = split_blocks(A, m, k);
  auto bblocks = split_blocks(B, k, n);
  std::size_t abr = A.rows / m, abc = A.cols / k;
  std::size_t bbr = B.rows / k, bbc = B.cols / n;
  auto left = eval_block_slp(cc.l_slp, ablocks, abr, abc);
  auto right = eval_block_slp(cc.r_slp, bblocks, bbr, bbc);
  std::size_t r = cob.Ls.rows();
  std::vector<Block> prods(r);
  for (std::size_t i = 0; i < r; ++i)
    prods[i] = Block(core_recursion(cc, cob, m, k, n, ell - 1, left[i].m, right[i].m));
  auto cblocks = eval_block_slp(cc.p_slp, prods, abr, bbc);
  return join_blocks(cblocks, m, n);
}

}  // namespace

DMat altbasis_mm(const AltPlan& plan, const DMat& A, const DMat& B) {
  if (plan.levels == 0) return classical_mm(A, B);
  CompiledCore cc;
  cc.l_slp = best_of({plan.cob.Ls, LinOp::Tag::L});
  cc.r_slp = best_of({plan.cob.Rs, LinOp::Tag::R});
  cc.p_slp = best_of({plan.cob.Ps, LinOp::Tag::P});
  DMat abar = cob_apply(plan.cob.phi, A, plan.m, plan.k, plan.levels);
  DMat bbar = cob_apply(plan.cob.psi, B, plan.k, plan.n, plan.levels);
  DMat cbar = core_recursion(cc, plan.cob, plan.m, plan.k, plan.n, plan.levels, abar, bbar);
  return cob_apply(plan.cob.nu.transposed(), cbar, plan.m, plan.n, plan.levels);
}

}  // namespace fmm
