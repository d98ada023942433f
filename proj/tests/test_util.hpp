#pragma once

#include "zx/mp/hreal.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace zx::test {

using mp::HReal;

inline HReal hr(char const* decimal) { return mp::from_string(decimal); }

inline HReal abs_diff(HReal const& a, HReal const& b) { return boost::multiprecision::abs(a - b); }

inline bool near(HReal const& a, HReal const& b, HReal const& tol) { return abs_diff(a, b) <= tol; }

inline bool rel_near(HReal const& a, HReal const& b, HReal const& tol) {
  return abs_diff(a, b) <= tol * boost::multiprecision::abs(b);
}

inline std::string data_path(std::string const& name) { return std::string(ZX_TEST_DATA_DIR) + "/" + name; }

}  // namespace zx::test
