#pragma once

#include <stdexcept>
#include <string>

#include "fmm/matrix.hpp"

namespace fmm {

// SMS exchange format:
//   <rows> <cols> M
//   <i> <j> <value>     (1-based, value an integer or reduced fraction p/q)
//   0 0 0
// '#' starts a comment line; LF and CRLF both accepted.
struct SmsError : std::runtime_error {
  enum class Kind {
    MalformedHeader,
    UnknownFieldTag,
    MalformedEntry,
    IndexOutOfRange,
    DuplicateEntry,
    MissingTerminator,
    SurdEntry,  // write side: surd coefficient without decimal export
  };
  Kind kind;
  SmsError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

CoeffMatrix parse_sms(const std::string& text);

struct SmsWriteOptions {
  bool decimal_export = false;  // allow surd entries, printed as decimals
};
std::string write_sms(const CoeffMatrix& m, const SmsWriteOptions& opts = {});

namespace detail {
// Extended dialect used for the bundled scheme tables: a value may carry a
// trailing 's' multiplying it by sqrt(3) (e.g. "-2/3s").
CoeffMatrix parse_sms_ext(const std::string& text);
}  // namespace detail

}  // namespace fmm
