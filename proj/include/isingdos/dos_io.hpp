#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "isingdos/histogram.hpp"

namespace isingdos {

inline constexpr int kDoSFormatVersion = 1;

/// Malformed DoS file; `line()` is 1-based (0 when no line applies).
class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// CSV layout:
///
///   # rows=4 cols=4 depth=1 J=1 N=16 B=32 version=1
///   count,M,E
///   1,16,-32
///   ...
///
/// One row per nonzero cell, M descending then E ascending. E is in units of J.
void write_dos_csv(std::ostream& out, const DoSHistogram& dos);

/// The same data as a single JSON object with a "cells" array of [count, M, E].
void write_dos_json(std::ostream& out, const DoSHistogram& dos);

/// Reads either format (JSON when the first non-blank character is '{').
/// Throws FormatError on malformed input, naming the offending line for CSV.
DoSHistogram read_dos(std::istream& in);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace isingdos
