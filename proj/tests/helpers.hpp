#pragma once

#include <string>
#include <vector>

#include "vps/form.hpp"
#include "vps/ideal.hpp"

namespace vps::test {

inline Form sx(int n, const std::string& s) { return parse_form(s, n, Ring::S); }
inline Form ty(int n, const std::string& s) { return parse_form(s, n, Ring::T); }

inline GradedIdeal ideal(int n, const std::vector<std::string>& gens) {
  return GradedIdeal::from_strings(n, gens, Ring::S);
}

inline std::vector<long> hf(const GradedIdeal& i, int upto) {
  std::vector<long> out;
  for (int d = 0; d <= upto; ++d) out.push_back(i.hilbert(d));
  return out;
}

inline const std::vector<std::string> kEx11 = {"x1*x3 - x2^2", "x2*x3 - x1*x4", "x2*x4", "x3*x4", "x4^2", "x3^2"};
inline const std::vector<std::string> kEx11Limit = {"x2^4",   "x4^2",          "x2*x4", "x3*x4",
                                                    "x1^2*x4", "x2*x3 - x1*x4", "x3^2",  "x1*x3"};
inline const std::vector<std::string> kEqIdeal = {"x1*x3", "x2*x3 - x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2"};

}  // namespace vps::test
