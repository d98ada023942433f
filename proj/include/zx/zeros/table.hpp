// table.hpp
//
// Tables of non-trivial zeros rho = beta + i gamma (gamma > 0) and their
// ingestion from text. Each entry stands for the conjugate pair rho, conj(rho).

#pragma once

#include "zx/mp/hreal.hpp"

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zx::zeros {

using mp::HComplex;
using mp::HReal;

struct ZeroEntry {
  HReal beta;
  HReal gamma;
  HComplex rho() const { return {beta, gamma}; }
};

class ZeroTable {
 public:
  // Validates 0 < beta < 1, gamma > 0 and ascending gamma. Equal ordinates are
  // accepted only for entries with different beta (an explicit off-line group).
  ZeroTable(std::string label, std::vector<ZeroEntry> entries, std::string source, int entry_precision);

  std::string const& label() const { return label_; }
  std::vector<ZeroEntry> const& entries() const { return entries_; }
  std::string const& source() const { return source_; }
  int entry_precision() const { return entry_precision_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  ZeroEntry const& operator[](std::size_t i) const { return entries_[i]; }
  // True when every beta equals 1/2.
  bool on_critical_line() const;
  // First k entries as a new table.
  ZeroTable prefix(std::size_t k) const;

 private:
  std::string label_;
  std::vector<ZeroEntry> entries_;
  std::string source_;
  int entry_precision_;
};

enum class ZeroFormat { plain, csv };

// Parse failures carry the 1-based line number.
class ZeroParseError : public std::runtime_error {
 public:
  ZeroParseError(std::size_t line, std::string const& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Plain: one ordinate per line, beta = 1/2. CSV: header "beta,gamma".
// Lines starting with '#' are comments; "# label: <id>" names the table.
// LF and CRLF line ends are both accepted.
ZeroTable load_zeros(std::istream& in, ZeroFormat format, std::string const& source = "<stream>");
// Format chosen by extension (.csv) unless given explicitly.
ZeroTable load_zeros_file(std::string const& path);
ZeroTable load_zeros_file(std::string const& path, ZeroFormat format);

// First 100 ordinates of zeta, 15 decimals.
ZeroTable embedded_zeta_zeros();

}  // namespace zx::zeros
