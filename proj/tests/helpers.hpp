#pragma once

#include "gvcp/exterior.hpp"

#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

namespace testing {

inline gvcp::ExteriorForm form(int dim, int degree, std::vector<std::pair<std::vector<int>, double>> terms) {
  return gvcp::ExteriorForm::from_terms(dim, degree, terms);
}

inline gvcp::ExteriorForm blade(int dim, std::vector<int> indices) {
  const int k = static_cast<int>(indices.size());
  return gvcp::ExteriorForm::from_terms(dim, k, {{indices, 1.0}});
}

/// Every basis blade e_I of R^n, all degrees.
inline std::vector<gvcp::ExteriorForm> all_blades(int dim) {
  std::vector<gvcp::ExteriorForm> out;
  for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
    gvcp::ExteriorForm f(dim, std::popcount(mask));
    f.add_term(gvcp::Blade(static_cast<std::uint16_t>(mask)), 1.0);
    out.push_back(f);
  }
  return out;
}

}  // namespace testing
