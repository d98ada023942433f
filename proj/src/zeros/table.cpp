#include "zx/zeros/table.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace zx::zeros {

namespace {

char const kEmbedded[] =
#include "embedded.inc"
    ;

std::regex const& decimal_pattern() {
  static std::regex const re(R"(^\+?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
  return re;
}

std::string trim(std::string s) {
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int fractional_digits(std::string const& literal) {
  auto const dot = literal.find('.');
  if (dot == std::string::npos) return 0;
  auto const end = literal.find_first_of("eE", dot);
  return static_cast<int>((end == std::string::npos ? literal.size() : end) - dot - 1);
}

HReal parse_decimal(std::string const& text, std::size_t line, char const* what) {
  if (!std::regex_match(text, decimal_pattern())) {
    throw ZeroParseError(line, std::string("unparsable ") + what + " '" + text + "'");
  }
  return mp::from_string(text);
}

}  // namespace

ZeroParseError::ZeroParseError(std::size_t line, std::string const& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

ZeroTable::ZeroTable(std::string label, std::vector<ZeroEntry> entries, std::string source, int entry_precision)
    : label_(std::move(label)), entries_(std::move(entries)), source_(std::move(source)), entry_precision_(entry_precision) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto const& e = entries_[i];
    if (!(e.beta > 0 && e.beta < 1)) throw std::domain_error("zero table: beta outside (0, 1) at entry " + std::to_string(i + 1));
    if (!(e.gamma > 0)) throw std::domain_error("zero table: non-positive ordinate at entry " + std::to_string(i + 1));
    if (i == 0) continue;
    auto const& prev = entries_[i - 1];
    if (e.gamma < prev.gamma || (e.gamma == prev.gamma && e.beta == prev.beta)) {
      throw std::domain_error("zero table: ordinates not ascending at entry " + std::to_string(i + 1));
    }
  }
}

bool ZeroTable::on_critical_line() const {
  HReal const half(0.5);
  return std::all_of(entries_.begin(), entries_.end(), [&](ZeroEntry const& e) { return e.beta == half; });
}

ZeroTable ZeroTable::prefix(std::size_t k) const {
  k = std::min(k, entries_.size());
  return ZeroTable(label_, std::vector<ZeroEntry>(entries_.begin(), entries_.begin() + static_cast<long>(k)), source_,
                   entry_precision_);
}

ZeroTable load_zeros(std::istream& in, ZeroFormat format, std::string const& source) {
  std::string label = "zeta";
  std::vector<ZeroEntry> entries;
  int precision = -1;
  bool header_seen = false;
  std::string raw;
  std::size_t line_no = 0;
  HReal const half(0.5);
  while (std::getline(in, raw)) {
    ++line_no;
    std::string const line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      static std::regex const label_re(R"(^#\s*label:\s*(\S+)\s*$)");
      std::smatch m;
      if (std::regex_match(line, m, label_re)) label = m[1];
      continue;
    }
    std::string gamma_text;
    HReal beta = half;
    if (format == ZeroFormat::csv) {
      if (!header_seen) {
        std::string header = line;
        header.erase(std::remove(header.begin(), header.end(), ' '), header.end());
        if (header != "beta,gamma") throw ZeroParseError(line_no, "expected CSV header 'beta,gamma'");
        header_seen = true;
        continue;
      }
      auto const comma = line.find(',');
      if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
        throw ZeroParseError(line_no, "expected two columns 'beta,gamma'");
      }
      beta = parse_decimal(trim(line.substr(0, comma)), line_no, "beta");
      if (!(beta > 0 && beta < 1)) throw ZeroParseError(line_no, "beta outside (0, 1)");
      gamma_text = trim(line.substr(comma + 1));
    } else {
      gamma_text = line;
    }
    HReal const gamma = parse_decimal(gamma_text, line_no, "ordinate");
    if (!(gamma > 0)) throw ZeroParseError(line_no, "ordinate must be positive");
    if (!entries.empty()) {
      auto const& prev = entries.back();
      bool const strict = format == ZeroFormat::plain;
      if (gamma < prev.gamma || (gamma == prev.gamma && (strict || beta == prev.beta))) {
        throw ZeroParseError(line_no, "non-monotone ordinates (" + gamma_text + " after " + mp::to_string(prev.gamma, 20) + ")");
      }
    }
    int const digits = fractional_digits(gamma_text);
    precision = precision < 0 ? digits : std::min(precision, digits);
    entries.push_back({beta, gamma});
  }
  if (format == ZeroFormat::csv && !header_seen) throw ZeroParseError(line_no, "missing CSV header 'beta,gamma'");
  return ZeroTable(label, std::move(entries), source, std::max(precision, 0));
}

ZeroTable load_zeros_file(std::string const& path, ZeroFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open zero table '" + path + "'");
  return load_zeros(in, format, path);
}

ZeroTable load_zeros_file(std::string const& path) {
  bool const csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  return load_zeros_file(path, csv ? ZeroFormat::csv : ZeroFormat::plain);
}

ZeroTable embedded_zeta_zeros() {
  std::istringstream in(kEmbedded);
  return load_zeros(in, ZeroFormat::plain, "embedded: first 100 zeta ordinates");
}

}  // namespace zx::zeros
