#include "fmm/sms.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace fmm {
namespace {

using Kind = SmsError::Kind;

bool parse_long(const std::string& s, long& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stol(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

// value: [-]digits[/digits] with optional trailing 's' in the extended dialect
bool parse_value(const std::string& tok, bool allow_surd, Coeff& out) {
  std::string s = tok;
  bool surd = false;
  if (!s.empty() && s.back() == 's') {
    if (!allow_surd) return false;
    surd = true;
    s.pop_back();
  }
  auto slash = s.find('/');
  std::string ns = s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (ns.empty() || ds.empty()) return false;
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (!(std::isdigit(static_cast<unsigned char>(ns[i])) || (i == 0 && ns[i] == '-'))) return false;
  for (char c : ds)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  Rational q(ns + "/" + ds);
  q.canonicalize();
  out = surd ? Coeff::sqrt_term(q, 3) : Coeff(q);
  return true;
}

CoeffMatrix parse_impl(const std::string& text, bool allow_surd) {
  std::istringstream in(text);
  std::string line;
  long rows = -1, cols = -1;
  CoeffMatrix m;
  std::vector<bool> seen;
  bool terminated = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string t1, t2, t3;
    if (!(ls >> t1)) continue;       // blank line
    if (t1[0] == '#') continue;      // comment
    ls >> t2 >> t3;
    std::string extra;
    if (ls >> extra)
      throw SmsError(Kind::MalformedEntry, "line " + std::to_string(lineno) + ": trailing tokens");
    if (rows < 0) {
      long r, c;
      if (!parse_long(t1, r) || !parse_long(t2, c) || r <= 0 || c <= 0)
        throw SmsError(Kind::MalformedHeader, "line " + std::to_string(lineno) + ": bad header");
      if (t3 != "M")
        throw SmsError(Kind::UnknownFieldTag,
                       "line " + std::to_string(lineno) + ": unsupported field tag '" + t3 + "'");
      rows = r;
      cols = c;
      m = CoeffMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
      seen.assign(static_cast<std::size_t>(rows * cols), false);
      continue;
    }
    if (terminated)
      throw SmsError(Kind::MalformedEntry, "line " + std::to_string(lineno) + ": data after terminator");
    long i, j;
    Coeff v;
    if (!parse_long(t1, i) || !parse_long(t2, j) || !parse_value(t3, allow_surd, v))
      throw SmsError(Kind::MalformedEntry, "line " + std::to_string(lineno) + ": bad entry");
    if (i == 0 && j == 0 && v.is_zero()) {
      terminated = true;
      continue;
    }
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw SmsError(Kind::IndexOutOfRange,
                     "line " + std::to_string(lineno) + ": index (" + std::to_string(i) + "," +
                         std::to_string(j) + ") out of range");
    std::size_t flat = static_cast<std::size_t>((i - 1) * cols + (j - 1));
    if (seen[flat])
      throw SmsError(Kind::DuplicateEntry, "line " + std::to_string(lineno) + ": duplicate entry");
    seen[flat] = true;
    m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
  }
  if (rows < 0) throw SmsError(Kind::MalformedHeader, "empty input");
  if (!terminated) throw SmsError(Kind::MissingTerminator, "missing \"0 0 0\" terminator");
  return m;
}

}  // namespace

CoeffMatrix parse_sms(const std::string& text) { return parse_impl(text, false); }

namespace detail {
CoeffMatrix parse_sms_ext(const std::string& text) { return parse_impl(text, true); }
}  // namespace detail

std::string write_sms(const CoeffMatrix& m, const SmsWriteOptions& opts) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << " M\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Coeff& c = m.at(i, j);
      if (c.is_zero()) continue;
      out << (i + 1) << ' ' << (j + 1) << ' ';
      if (c.is_rational()) {
        out << c.rat().get_str();
      } else if (opts.decimal_export) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", c.to_double());
        out << buf;
      } else {
        throw SmsError(SmsError::Kind::SurdEntry,
                       "surd entry at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") requires decimal export");
      }
      out << '\n';
    }
  out << "0 0 0\n";
  return out.str();
}

}  // namespace fmm
