#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hk/ideal.hpp"

namespace hk {

inline std::string join_polys(const std::vector<Polynomial>& polys) {
  std::ostringstream os;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) os << ", ";
    os << polys[i].to_string();
  }
  return os.str();
}

inline std::string vector_string(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

/// Session-file text declaring R and an ideal named `name`; parses back to the
/// same ring and ideal.
inline std::string session_text(const QuotientRing& R, const Ideal& I, const std::string& name = "q") {
  std::ostringstream os;
  os << "ring " << R.field().characteristic() << " [";
  const auto& names = R.ambient()->names();
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
  os << "]\n";
  if (!R.defining_generators().empty()) os << "mod " << join_polys(R.defining_generators()) << "\n";
  os << "ideal " << name << " = " << join_polys(I.generators()) << "\n";
  return os.str();
}

}  // namespace hk
