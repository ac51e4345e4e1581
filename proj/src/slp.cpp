#include "fmm/slp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fmm/hmrep.hpp"

namespace fmm {
namespace {

bool is_div2(const Coeff& c) {
  if (!c.is_rational()) return false;
  Rational a = c.rat();
  if (a == 0) return false;
  mpz_class num = ::abs(a.get_num()), den = a.get_den();
  if (num != 1 || den == 1) return false;
  // den a power of two?
  return mpz_scan1(den.get_mpz_t(), 0) == mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
}

}  // namespace

Slp::Counts Slp::counts() const {
  Counts c;
  for (const auto& ins : instrs) {
    if (ins.op == Instr::Op::Add || ins.op == Instr::Op::Sub) ++c.adds;
    if (ins.op == Instr::Op::Mul && !ins.c.is_unit()) {
      if (is_div2(ins.c))
        ++c.div2;
      else
        ++c.mults;
    }
  }
  return c;
}

void Slp::check() const {
  std::vector<bool> stored(static_cast<std::size_t>(n_out), false);
  for (std::size_t t = 0; t < instrs.size(); ++t) {
    const auto& ins = instrs[t];
    auto ref_ok = [&](int idx) { return idx >= 0 && static_cast<std::size_t>(idx) < t; };
    switch (ins.op) {
      case Instr::Op::Load:
        if (ins.io < 0 || ins.io >= n_in) throw std::logic_error("slp: bad input index");
        break;
      case Instr::Op::Zero:
        break;
      case Instr::Op::Add:
      case Instr::Op::Sub:
        if (!ref_ok(ins.a) || !ref_ok(ins.b)) throw std::logic_error("slp: forward reference");
        break;
      case Instr::Op::Mul:
        if (!ref_ok(ins.a)) throw std::logic_error("slp: forward reference");
        break;
      case Instr::Op::Store:
        if (!ref_ok(ins.a)) throw std::logic_error("slp: forward reference");
        if (ins.io < 0 || ins.io >= n_out) throw std::logic_error("slp: bad output index");
        if (stored[static_cast<std::size_t>(ins.io)]) throw std::logic_error("slp: output stored twice");
        stored[static_cast<std::size_t>(ins.io)] = true;
        break;
    }
  }
  for (bool s : stored)
    if (!s) throw std::logic_error("slp: missing output");
}

namespace {

template <typename T>
T scale(const Coeff& c, const T& v);
template <>
double scale(const Coeff& c, const double& v) { return c.to_double() * v; }
template <>
Coeff scale(const Coeff& c, const Coeff& v) { return c * v; }

}  // namespace

template <typename T>
std::vector<T> eval_slp(const Slp& s, const std::vector<T>& x) {
  if (x.size() != static_cast<std::size_t>(s.n_in))
    throw std::invalid_argument("eval_slp: wrong input size");
  std::vector<T> val(s.instrs.size());
  std::vector<T> out(static_cast<std::size_t>(s.n_out), T());
  for (std::size_t t = 0; t < s.instrs.size(); ++t) {
    const auto& ins = s.instrs[t];
    switch (ins.op) {
      case Instr::Op::Load: val[t] = x[static_cast<std::size_t>(ins.io)]; break;
      case Instr::Op::Zero: val[t] = T(); break;
      case Instr::Op::Add: val[t] = val[ins.a] + val[ins.b]; break;
      case Instr::Op::Sub: val[t] = val[ins.a] - val[ins.b]; break;
      case Instr::Op::Mul: val[t] = scale(ins.c, val[ins.a]); break;
      case Instr::Op::Store: out[static_cast<std::size_t>(ins.io)] = val[ins.a]; break;
    }
  }
  return out;
}

template std::vector<double> eval_slp<double>(const Slp&, const std::vector<double>&);
template std::vector<Coeff> eval_slp<Coeff>(const Slp&, const std::vector<Coeff>&);

std::string Slp::to_text() const {
  std::ostringstream o;
  for (std::size_t t = 0; t < instrs.size(); ++t) {
    const auto& ins = instrs[t];
    switch (ins.op) {
      case Instr::Op::Load: o << "t" << t << " := x" << ins.io << "\n"; break;
      case Instr::Op::Zero: o << "t" << t << " := 0\n"; break;
      case Instr::Op::Add: o << "t" << t << " := t" << ins.a << " + t" << ins.b << "\n"; break;
      case Instr::Op::Sub: o << "t" << t << " := t" << ins.a << " - t" << ins.b << "\n"; break;
      case Instr::Op::Mul: o << "t" << t << " := " << ins.c.str() << " * t" << ins.a << "\n"; break;
      case Instr::Op::Store: o << "o" << ins.io << " := t" << ins.a << "\n"; break;
    }
  }
  return o.str();
}

// ---------------------------------------------------------------------------
// Working matrix for the cancellation-free pass. Columns 0..n_in-1 are the
// inputs; every extracted subexpression becomes a def row producing a new
// column, and def rows take part in the later phases exactly like real rows.
namespace {

struct WorkRow {
  std::vector<Coeff> e;   // dense over current columns
  bool is_def = false;
  int def_col = -1;       // column this def row feeds
  int out_index = -1;     // real rows: output index
};

struct Work {
  int n_in = 0;
  int n_cols = 0;
  std::vector<WorkRow> rows;

  static Work from_matrix(const CoeffMatrix& m) {
    Work w;
    w.n_in = static_cast<int>(m.cols());
    w.n_cols = w.n_in;
    w.rows.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      w.rows[i].e.assign(m.cols(), Coeff());
      for (std::size_t j = 0; j < m.cols(); ++j) w.rows[i].e[j] = m.at(i, j);
      w.rows[i].out_index = static_cast<int>(i);
    }
    return w;
  }

  int add_def_row(std::vector<Coeff> entries) {
    int col = n_cols++;
    for (auto& r : rows) r.e.resize(static_cast<std::size_t>(n_cols));
    WorkRow d;
    entries.resize(static_cast<std::size_t>(n_cols));
    d.e = std::move(entries);
    d.is_def = true;
    d.def_col = col;
    rows.push_back(std::move(d));
    return col;
  }

  std::size_t nnz() const {
    std::size_t t = 0;
    for (const auto& r : rows)
      for (const auto& c : r.e) t += !c.is_zero();
    return t;
  }
};

struct PairKey {
  int i, j;
  // ratio e_j / e_i identifies the direction class
  Coeff ratio;
  bool operator<(const PairKey& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    if (ratio.rat() != o.ratio.rat()) return ratio.rat() < o.ratio.rat();
    return ratio.surd() < o.ratio.surd();
  }
};

std::map<PairKey, std::vector<std::size_t>> collect_colinear(const Work& w) {
  std::map<PairKey, std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < w.rows.size(); ++r) {
    const auto& row = w.rows[r].e;
    std::vector<int> nz;
    for (int j = 0; j < w.n_cols; ++j)
      if (!row[static_cast<std::size_t>(j)].is_zero()) nz.push_back(j);
    for (std::size_t a = 0; a < nz.size(); ++a)
      for (std::size_t b = a + 1; b < nz.size(); ++b) {
        int i = nz[a], j = nz[b];
        Coeff ratio = row[static_cast<std::size_t>(j)] / row[static_cast<std::size_t>(i)];
        groups[PairKey{i, j, ratio}].push_back(r);
      }
  }
  for (auto it = groups.begin(); it != groups.end();) {
    if (it->second.size() < 2)
      it = groups.erase(it);
    else
      ++it;
  }
  return groups;
}

int count_nonunit(const Coeff& c) { return (c.is_zero() || c.is_unit()) ? 0 : 1; }

// Apply one colinear extraction; representative chosen to minimize the number
// of non-unit constants it introduces.
void apply_colinear(Work& w, const PairKey& key, const std::vector<std::size_t>& members) {
  std::size_t ci = static_cast<std::size_t>(key.i), cj = static_cast<std::size_t>(key.j);
  struct Rep { Coeff a, b; int cost; };
  std::vector<Rep> reps;
  for (std::size_t r : members) {
    Coeff a = w.rows[r].e[ci], b = w.rows[r].e[cj];
    reps.push_back({a, b, 0});
  }
  reps.push_back({Coeff(1), key.ratio, 0});  // normalized direction
  for (auto& rep : reps) {
    rep.cost = count_nonunit(rep.a) + count_nonunit(rep.b);
    for (std::size_t r : members) {
      Coeff lam = w.rows[r].e[ci] / rep.a;
      rep.cost += count_nonunit(lam);
    }
  }
  const Rep* best = &reps[0];
  for (const auto& rep : reps)
    if (rep.cost < best->cost) best = &rep;

  std::vector<Coeff> def(static_cast<std::size_t>(w.n_cols));
  def[ci] = best->a;
  def[cj] = best->b;
  Coeff ra = best->a;
  int col = w.add_def_row(std::move(def));
  for (std::size_t r : members) {
    Coeff lam = w.rows[r].e[ci] / ra;
    w.rows[r].e[ci] = Coeff();
    w.rows[r].e[cj] = Coeff();
    w.rows[r].e[static_cast<std::size_t>(col)] = lam;
  }
}

// Phases 2-4 are deterministic; phase 1 may branch on ties within the budget.
void multiplier_phases(Work& w) {
  // defs introduced here, keyed for reuse
  std::map<std::pair<int, std::pair<std::string, std::string>>, int> scal_defs;
  auto scaled_def = [&](int col, const Coeff& v) {
    auto key = std::make_pair(col, std::make_pair(v.rat().get_str(), v.surd().get_str()));
    auto it = scal_defs.find(key);
    if (it != scal_defs.end()) return it->second;
    std::vector<Coeff> def(static_cast<std::size_t>(w.n_cols));
    def[static_cast<std::size_t>(col)] = v;
    int c = w.add_def_row(std::move(def));
    scal_defs[key] = c;
    return c;
  };

  // -- multipliers by columns
  for (int j = 0; j < w.n_cols; ++j) {
    // group rows by |value| for non-unit entries in column j
    std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> groups;
    std::map<std::pair<std::string, std::string>, Coeff> vals;
    for (std::size_t r = 0; r < w.rows.size(); ++r) {
      const Coeff& c = w.rows[r].e[static_cast<std::size_t>(j)];
      if (c.is_zero() || c.is_unit()) continue;
      Coeff av = c.abs();
      auto key = std::make_pair(av.rat().get_str(), av.surd().get_str());
      groups[key].push_back(r);
      vals.emplace(key, av);
    }
    for (auto& [key, members] : groups) {
      if (members.size() < 2) continue;
      Coeff v = vals.at(key);
      int col = scaled_def(j, v);
      for (std::size_t r : members) {
        if (w.rows[r].is_def && w.rows[r].def_col == col) continue;  // the def itself
        int sign = w.rows[r].e[static_cast<std::size_t>(j)].sign();
        w.rows[r].e[static_cast<std::size_t>(j)] = Coeff();
        w.rows[r].e[static_cast<std::size_t>(col)] = Coeff(sign);
      }
    }
  }

  // -- multipliers by triangle relations: m[i][j] = +- m[i][k] * m[r][j]
  for (int guard = 0; guard < 256; ++guard) {
    bool found = false;
    for (std::size_t i = 0; i < w.rows.size() && !found; ++i) {
      for (int j = 0; j < w.n_cols && !found; ++j) {
        const Coeff mij = w.rows[i].e[static_cast<std::size_t>(j)];
        if (mij.is_zero() || mij.is_unit()) continue;
        for (int k = 0; k < w.n_cols && !found; ++k) {
          if (k == j) continue;
          const Coeff mik = w.rows[i].e[static_cast<std::size_t>(k)];
          if (mik.is_zero() || mik.is_unit()) continue;
          for (std::size_t r = 0; r < w.rows.size() && !found; ++r) {
            if (r == i) continue;
            const Coeff mrj = w.rows[r].e[static_cast<std::size_t>(j)];
            if (mrj.is_zero() || mrj.is_unit()) continue;
            Coeff prod = mik * mrj;
            int sign;
            if (prod == mij) sign = 1;
            else if (prod == -mij) sign = -1;
            else continue;
            int col = scaled_def(j, mrj.abs());
            int rs = mrj.sign();
            w.rows[i].e[static_cast<std::size_t>(j)] = Coeff();
            w.rows[i].e[static_cast<std::size_t>(col)] = Coeff(sign * rs) * mik;
            if (!(w.rows[r].is_def && w.rows[r].def_col == col)) {
              w.rows[r].e[static_cast<std::size_t>(j)] = Coeff();
              w.rows[r].e[static_cast<std::size_t>(col)] = Coeff(rs);
            }
            found = true;
          }
        }
      }
    }
    if (!found) break;
  }

  // -- multipliers by rows
  std::map<std::tuple<int, int, int>, int> pair_defs;
  for (std::size_t r = 0; r < w.rows.size(); ++r) {
    bool changed = true;
    while (changed) {
      changed = false;
      const auto& row = w.rows[r].e;
      for (int j = 0; j < w.n_cols && !changed; ++j) {
        const Coeff cj = row[static_cast<std::size_t>(j)];
        if (cj.is_zero() || cj.is_unit()) continue;
        for (int k = j + 1; k < w.n_cols && !changed; ++k) {
          const Coeff ck = row[static_cast<std::size_t>(k)];
          if (ck.is_zero() || ck.is_unit()) continue;
          int sgn;
          if (ck == cj) sgn = 1;
          else if (ck == -cj) sgn = -1;
          else continue;
          auto key = std::make_tuple(j, k, sgn);
          int col;
          auto it = pair_defs.find(key);
          if (it != pair_defs.end()) {
            col = it->second;
          } else {
            std::vector<Coeff> def(static_cast<std::size_t>(w.n_cols));
            def[static_cast<std::size_t>(j)] = Coeff(1);
            def[static_cast<std::size_t>(k)] = Coeff(sgn);
            col = w.add_def_row(std::move(def));
            pair_defs[key] = col;
          }
          w.rows[r].e[static_cast<std::size_t>(j)] = Coeff();
          w.rows[r].e[static_cast<std::size_t>(k)] = Coeff();
          w.rows[r].e[static_cast<std::size_t>(col)] = cj;
          changed = true;
        }
      }
    }
  }
}

Slp::Counts work_counts(const Work& w) {
  Slp::Counts c;
  for (const auto& r : w.rows) {
    std::size_t nz = 0;
    for (const auto& e : r.e) {
      if (e.is_zero()) continue;
      ++nz;
      if (!e.is_unit()) {
        if (is_div2(e)) ++c.div2; else ++c.mults;
      }
    }
    if (nz > 1) c.adds += static_cast<long>(nz) - 1;
  }
  return c;
}

// Emit the SLP for a finished work matrix. Def rows are emitted in
// def-dependency order, then the real rows; `input_vals`, when given, maps
// input columns to existing instruction indices (used when inlining).
void emit_work(const Work& w, Slp& slp, const std::vector<int>& input_vals,
               std::vector<int>& out_vals) {
  std::vector<int> col_val(static_cast<std::size_t>(w.n_cols), -1);
  for (int j = 0; j < w.n_in; ++j) col_val[static_cast<std::size_t>(j)] = input_vals[static_cast<std::size_t>(j)];

  auto emit_term = [&](const Coeff& c, int val) {
    if (c.is_one()) return val;
    Instr mul;
    mul.op = Instr::Op::Mul;
    mul.a = val;
    mul.c = c;
    slp.instrs.push_back(mul);
    return static_cast<int>(slp.instrs.size()) - 1;
  };
  auto emit_row = [&](const WorkRow& row) {
    // fold the row's nonzeros left to right; prefer starting on a +-1 entry
    std::vector<int> nzs;
    for (int j = 0; j < w.n_cols; ++j)
      if (!row.e[static_cast<std::size_t>(j)].is_zero()) nzs.push_back(j);
    if (nzs.empty()) {
      slp.instrs.push_back({Instr::Op::Zero});
      return static_cast<int>(slp.instrs.size()) - 1;
    }
    std::stable_sort(nzs.begin(), nzs.end(), [&](int x, int y) {
      bool ux = row.e[static_cast<std::size_t>(x)].is_one();
      bool uy = row.e[static_cast<std::size_t>(y)].is_one();
      return ux > uy;
    });
    int acc = -1;
    bool first = true;
    for (int j : nzs) {
      const Coeff& c = row.e[static_cast<std::size_t>(j)];
      int src = col_val[static_cast<std::size_t>(j)];
      if (src < 0) throw std::logic_error("emit_work: unresolved column");
      if (first) {
        acc = emit_term(c, src);  // includes Mul(-1) when needed, free
        first = false;
      } else if (c.is_unit()) {
        slp.instrs.push_back({c.is_one() ? Instr::Op::Add : Instr::Op::Sub, acc, src});
        acc = static_cast<int>(slp.instrs.size()) - 1;
      } else {
        Coeff ab = c.abs();
        int t = emit_term(ab, src);
        slp.instrs.push_back({c.sign() > 0 ? Instr::Op::Add : Instr::Op::Sub, acc, t});
        acc = static_cast<int>(slp.instrs.size()) - 1;
      }
    }
    return acc;
  };

  // topological order of def rows by column dependencies
  std::vector<std::size_t> def_rows;
  for (std::size_t r = 0; r < w.rows.size(); ++r)
    if (w.rows[r].is_def) def_rows.push_back(r);
  std::vector<bool> done(w.rows.size(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t r : def_rows) {
      if (done[r]) continue;
      bool ready = true;
      for (int j = 0; j < w.n_cols && ready; ++j)
        if (!w.rows[r].e[static_cast<std::size_t>(j)].is_zero() &&
            col_val[static_cast<std::size_t>(j)] < 0)
          ready = false;
      if (!ready) continue;
      col_val[static_cast<std::size_t>(w.rows[r].def_col)] = emit_row(w.rows[r]);
      done[r] = true;
      progress = true;
    }
  }
  for (std::size_t r : def_rows)
    if (!done[r]) throw std::logic_error("emit_work: cyclic defs");

  for (const auto& row : w.rows) {
    if (row.is_def) continue;
    out_vals[static_cast<std::size_t>(row.out_index)] = emit_row(row);
  }
}

struct CfResult {
  Work work;
  Slp::Counts counts;
};

void colinear_fixpoint(Work w, int depth, int& budget, std::optional<CfResult>& best);

void finish_and_score(Work w, int& budget, std::optional<CfResult>& best) {
  multiplier_phases(w);
  Slp::Counts c = work_counts(w);
  auto better = [](const Slp::Counts& x, const Slp::Counts& y) {
    if (x.adds != y.adds) return x.adds < y.adds;
    return x.muldiv() < y.muldiv();
  };
  if (!best || better(c, best->counts)) best = CfResult{std::move(w), c};
}

void colinear_fixpoint(Work w, int depth, int& budget, std::optional<CfResult>& best) {
  while (true) {
    auto groups = collect_colinear(w);
    if (groups.empty()) break;
    std::size_t maxcnt = 0;
    for (auto& [k, v] : groups) maxcnt = std::max(maxcnt, v.size());
    std::vector<const std::pair<const PairKey, std::vector<std::size_t>>*> cands;
    for (auto& g : groups)
      if (g.second.size() == maxcnt) cands.push_back(&g);
    if (cands.size() > 1) {
      // rank ties by resulting matrix density, then lexicographic column pair
      std::vector<std::pair<std::size_t, std::size_t>> scored;  // (density, idx)
      for (std::size_t c = 0; c < cands.size(); ++c) {
        Work probe = w;
        apply_colinear(probe, cands[c]->first, cands[c]->second);
        scored.emplace_back(probe.nnz(), c);
      }
      std::stable_sort(scored.begin(), scored.end(),
                       [&](const auto& x, const auto& y) {
                         if (x.first != y.first) return x.first < y.first;
                         const PairKey& a = cands[x.second]->first;
                         const PairKey& b = cands[y.second]->first;
                         if (a.i != b.i) return a.i < b.i;
                         return a.j < b.j;
                       });
      if (budget > 1) {
        for (std::size_t s = 0; s < scored.size(); ++s) {
          if (s > 0 && budget <= 0) break;
          if (s > 0) --budget;
          Work child = w;
          apply_colinear(child, cands[scored[s].second]->first, cands[scored[s].second]->second);
          colinear_fixpoint(std::move(child), depth + 1, budget, best);
        }
        return;
      }
      apply_colinear(w, cands[scored[0].second]->first, cands[scored[0].second]->second);
      continue;
    }
    apply_colinear(w, cands[0]->first, cands[0]->second);
  }
  finish_and_score(std::move(w), budget, best);
}

Slp emit_standalone(const Work& w, int n_out) {
  Slp slp;
  slp.n_in = w.n_in;
  slp.n_out = n_out;
  std::vector<int> inputs(static_cast<std::size_t>(w.n_in));
  for (int j = 0; j < w.n_in; ++j) {
    Instr ld;
    ld.op = Instr::Op::Load;
    ld.io = j;
    slp.instrs.push_back(ld);
    inputs[static_cast<std::size_t>(j)] = static_cast<int>(slp.instrs.size()) - 1;
  }
  std::vector<int> outs(static_cast<std::size_t>(n_out), -1);
  emit_work(w, slp, inputs, outs);
  for (int o = 0; o < n_out; ++o) {
    Instr st;
    st.op = Instr::Op::Store;
    st.a = outs[static_cast<std::size_t>(o)];
    st.io = o;
    slp.instrs.push_back(st);
  }
  slp.check();
  return slp;
}

Work cf_work(const CoeffMatrix& m, const CfOptions& opts) {
  std::optional<CfResult> best;
  int budget = std::max(1, opts.branch_budget);
  colinear_fixpoint(Work::from_matrix(m), 0, budget, best);
  return std::move(best->work);
}

// Exact greedy rank profile: rows ordered by ascending Hamming weight then
// index; returns selected row indices and, for each unselected row, its
// combination over the selected ones.
struct RankProfile {
  std::vector<std::size_t> independent;
  std::vector<std::size_t> dependent;
  CoeffMatrix K;  // |dependent| x |independent|
};

RankProfile rank_profile(const CoeffMatrix& m) {
  std::vector<std::size_t> order(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row_weight(a) < m.row_weight(b);
  });

  struct BasisVec {
    std::vector<Coeff> v;      // reduced vector
    std::vector<Coeff> combo;  // combination over selected original rows
    std::size_t pivot;
  };
  std::vector<BasisVec> basis;
  RankProfile rp;
  std::vector<std::pair<std::size_t, std::vector<Coeff>>> dep_combos;

  for (std::size_t oi : order) {
    std::vector<Coeff> v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m.at(oi, j);
    std::vector<Coeff> combo(rp.independent.size() + 1);
    // reduce against basis
    for (const auto& b : basis) {
      if (v[b.pivot].is_zero()) continue;
      Coeff f = v[b.pivot];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!b.v[j].is_zero()) v[j] -= f * b.v[j];
      for (std::size_t t = 0; t < b.combo.size(); ++t)
        if (!b.combo[t].is_zero()) {
          if (combo.size() <= t) combo.resize(t + 1);
          combo[t] += f * b.combo[t];
        }
    }
    std::size_t piv = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) { piv = j; break; }
    if (piv == v.size()) {
      dep_combos.emplace_back(oi, combo);
      continue;
    }
    // new independent row
    std::size_t selfpos = rp.independent.size();
    rp.independent.push_back(oi);
    // basis vector = (row - combo.selected) / pivot ; combo tracks row in terms of selected
    std::vector<Coeff> bcombo(selfpos + 1);
    for (std::size_t t = 0; t < combo.size() && t < selfpos; ++t) bcombo[t] = -combo[t];
    bcombo[selfpos] = Coeff(1);
    Coeff pv = v[piv];
    for (auto& x : v) x = x / pv;
    for (auto& x : bcombo) x = x / pv;
    basis.push_back({std::move(v), std::move(bcombo), piv});
    // re-reduce previous basis vectors against the new one to keep RREF
    for (std::size_t bi = 0; bi + 1 < basis.size(); ++bi) {
      auto& bv = basis[bi];
      const auto& nb = basis.back();
      if (bv.v[nb.pivot].is_zero()) continue;
      Coeff f = bv.v[nb.pivot];
      for (std::size_t j = 0; j < bv.v.size(); ++j)
        if (!nb.v[j].is_zero()) bv.v[j] -= f * nb.v[j];
      if (bv.combo.size() < nb.combo.size()) bv.combo.resize(nb.combo.size());
      for (std::size_t t = 0; t < nb.combo.size(); ++t)
        if (!nb.combo[t].is_zero()) bv.combo[t] -= f * nb.combo[t];
    }
  }
  rp.K = CoeffMatrix(dep_combos.size(), rp.independent.size());
  for (std::size_t d = 0; d < dep_combos.size(); ++d) {
    rp.dependent.push_back(dep_combos[d].first);
    const auto& combo = dep_combos[d].second;
    for (std::size_t t = 0; t < combo.size(); ++t) {
      if (t < rp.independent.size())
        rp.K.at(d, t) = combo[t];
      else if (!combo[t].is_zero())
        throw std::logic_error("rank_profile: dependent combo out of basis range");
    }
  }
  return rp;
}

}  // namespace

Slp naive_slp(const LinOp& op) {
  Work w = Work::from_matrix(op.M);
  return emit_standalone(w, static_cast<int>(op.M.rows()));
}

Slp cancellation_free(const LinOp& op, const CfOptions& opts) {
  Work w = cf_work(op.M, opts);
  return emit_standalone(w, static_cast<int>(op.M.rows()));
}

Slp kernel_decompose(const LinOp& op, const CfOptions& opts) {
  RankProfile rp = rank_profile(op.M);
  if (rp.dependent.empty()) return cancellation_free(op, opts);

  CoeffMatrix mi(rp.independent.size(), op.M.cols());
  for (std::size_t t = 0; t < rp.independent.size(); ++t)
    for (std::size_t j = 0; j < op.M.cols(); ++j) mi.at(t, j) = op.M.at(rp.independent[t], j);

  Work w1 = cf_work(mi, opts);
  Work w2 = cf_work(rp.K, opts);

  Slp slp;
  slp.n_in = static_cast<int>(op.M.cols());
  slp.n_out = static_cast<int>(op.M.rows());
  std::vector<int> inputs(op.M.cols());
  for (std::size_t j = 0; j < op.M.cols(); ++j) {
    Instr ld;
    ld.op = Instr::Op::Load;
    ld.io = static_cast<int>(j);
    slp.instrs.push_back(ld);
    inputs[j] = static_cast<int>(slp.instrs.size()) - 1;
  }
  std::vector<int> ind_vals(rp.independent.size(), -1);
  emit_work(w1, slp, inputs, ind_vals);
  std::vector<int> dep_vals(rp.dependent.size(), -1);
  emit_work(w2, slp, ind_vals, dep_vals);
  for (std::size_t t = 0; t < rp.independent.size(); ++t) {
    Instr st;
    st.op = Instr::Op::Store;
    st.a = ind_vals[t];
    st.io = static_cast<int>(rp.independent[t]);
    slp.instrs.push_back(st);
  }
  for (std::size_t t = 0; t < rp.dependent.size(); ++t) {
    Instr st;
    st.op = Instr::Op::Store;
    st.a = dep_vals[t];
    st.io = static_cast<int>(rp.dependent[t]);
    slp.instrs.push_back(st);
  }
  slp.check();
  return slp;
}

Slp transpose_slp(const Slp& s) {
  s.check();
  struct Contribution {
    int src;      // instruction index in the transposed program
    int sign;     // +1 / -1
    const Coeff* c;  // optional scale
  };
  Slp t;
  t.n_in = s.n_out;
  t.n_out = s.n_in;
  std::vector<int> yload(static_cast<std::size_t>(s.n_out), -1);
  for (int o = 0; o < s.n_out; ++o) {
    Instr ld;
    ld.op = Instr::Op::Load;
    ld.io = o;
    t.instrs.push_back(ld);
    yload[static_cast<std::size_t>(o)] = static_cast<int>(t.instrs.size()) - 1;
  }
  std::vector<std::vector<Contribution>> contrib(s.instrs.size());
  std::vector<std::vector<Contribution>> xadj(static_cast<std::size_t>(s.n_in));

  auto fold = [&](const std::vector<Contribution>& list) -> int {
    if (list.empty()) {
      t.instrs.push_back({Instr::Op::Zero});
      return static_cast<int>(t.instrs.size()) - 1;
    }
    int acc = -1;
    bool first = true;
    for (const auto& ct : list) {
      int val = ct.src;
      Coeff mag = ct.c != nullptr ? ct.c->abs() : Coeff(1);
      int sg = ct.sign * (ct.c != nullptr ? ct.c->sign() : 1);
      if (first) {
        Coeff lead = sg < 0 ? -mag : mag;
        if (!lead.is_one()) {
          Instr mul;
          mul.op = Instr::Op::Mul;
          mul.a = val;
          mul.c = lead;
          t.instrs.push_back(mul);
          val = static_cast<int>(t.instrs.size()) - 1;
        }
        acc = val;
        first = false;
      } else {
        if (!mag.is_one()) {
          Instr mul;
          mul.op = Instr::Op::Mul;
          mul.a = val;
          mul.c = mag;
          t.instrs.push_back(mul);
          val = static_cast<int>(t.instrs.size()) - 1;
        }
        t.instrs.push_back({sg > 0 ? Instr::Op::Add : Instr::Op::Sub, acc, val});
        acc = static_cast<int>(t.instrs.size()) - 1;
      }
    }
    return acc;
  };

  // seed with stores, then process in reverse
  for (const auto& ins : s.instrs)
    if (ins.op == Instr::Op::Store)
      contrib[static_cast<std::size_t>(ins.a)].push_back(
          {yload[static_cast<std::size_t>(ins.io)], 1, nullptr});

  for (std::size_t ri = s.instrs.size(); ri-- > 0;) {
    const auto& ins = s.instrs[ri];
    if (ins.op == Instr::Op::Store || ins.op == Instr::Op::Zero) continue;
    int adj = fold(contrib[ri]);
    switch (ins.op) {
      case Instr::Op::Load:
        xadj[static_cast<std::size_t>(ins.io)].push_back({adj, 1, nullptr});
        break;
      case Instr::Op::Add:
        contrib[static_cast<std::size_t>(ins.a)].push_back({adj, 1, nullptr});
        contrib[static_cast<std::size_t>(ins.b)].push_back({adj, 1, nullptr});
        break;
      case Instr::Op::Sub:
        contrib[static_cast<std::size_t>(ins.a)].push_back({adj, 1, nullptr});
        contrib[static_cast<std::size_t>(ins.b)].push_back({adj, -1, nullptr});
        break;
      case Instr::Op::Mul:
        contrib[static_cast<std::size_t>(ins.a)].push_back({adj, 1, &ins.c});
        break;
      default:
        throw std::invalid_argument("transpose_slp: non-linear instruction");
    }
  }
  for (int i = 0; i < s.n_in; ++i) {
    int v = fold(xadj[static_cast<std::size_t>(i)]);
    Instr st;
    st.op = Instr::Op::Store;
    st.a = v;
    st.io = i;
    t.instrs.push_back(st);
  }
  t.check();
  return t;
}

Slp best_of(const LinOp& op, const CfOptions& opts) {
  std::vector<Slp> cands;
  cands.push_back(cancellation_free(op, opts));
  cands.push_back(kernel_decompose(op, opts));
  LinOp tr{op.M.transposed(), op.tag};
  cands.push_back(transpose_slp(kernel_decompose(tr, opts)));
  auto better = [](const Slp& a, const Slp& b) {
    auto ca = a.counts(), cb = b.counts();
    if (ca.adds != cb.adds) return ca.adds < cb.adds;
    return ca.muldiv() < cb.muldiv();
  };
  std::size_t bi = 0;
  for (std::size_t i = 1; i < cands.size(); ++i)
    if (better(cands[i], cands[bi])) bi = i;
  return cands[bi];
}

std::string OperationCountReport::to_csv() const {
  std::ostringstream o;
  o << "part,naive_adds,naive_muldiv,best_adds,best_mults,best_div2\n";
  for (const auto& l : lines)
    o << l.part << ',' << l.naive.adds << ',' << l.naive.muldiv() << ',' << l.best.adds << ','
      << l.best.mults << ',' << l.best.div2 << '\n';
  o << "total," << naive_total.adds << ',' << naive_total.muldiv() << ',' << best_total.adds << ','
    << best_total.mults << ',' << best_total.div2 << '\n';
  return o.str();
}

OperationCountReport codegen_report(const HMRep& h, const CfOptions& opts) {
  OperationCountReport rep;
  auto run = [&](const char* part, const CoeffMatrix& m, LinOp::Tag tag) {
    LinOp op{m, tag};
    Slp nv = naive_slp(op);
    Slp bt = best_of(op, opts);
    OperationCountReport::Line line{part, nv.counts(), bt.counts()};
    rep.lines.push_back(line);
    rep.naive_total.adds += line.naive.adds;
    rep.naive_total.mults += line.naive.mults;
    rep.naive_total.div2 += line.naive.div2;
    rep.best_total.adds += line.best.adds;
    rep.best_total.mults += line.best.mults;
    rep.best_total.div2 += line.best.div2;
  };
  run("L", h.L, LinOp::Tag::L);
  run("R", h.R, LinOp::Tag::R);
  run("P", h.P, LinOp::Tag::P);
  return rep;
}

}  // namespace fmm
