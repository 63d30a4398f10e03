#include "zeta_arr/subset.hpp"

#include <sstream>

#include "zeta_arr/errors.hpp"

namespace zeta_arr {

Subset subset_from_labels(std::span<const int> labels, int n) {
  Subset s = 0;
  for (int label : labels) {
    if (label < 1 || label > n) {
      throw PreconditionError("element " + std::to_string(label) + " outside 1.." +
                              std::to_string(n));
    }
    s |= singleton(label - 1);
  }
  return s;
}

std::vector<int> subset_labels(Subset s) {
  std::vector<int> labels;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1U) labels.push_back(i + 1);
  }
  return labels;
}

std::string format_subset(Subset s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int label : subset_labels(s)) {
    if (!first) out << ",";
    out << label;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace zeta_arr
