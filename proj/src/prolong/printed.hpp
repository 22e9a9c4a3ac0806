#ifndef F4PROLONG_PROLONG_PRINTED_HPP
#define F4PROLONG_PROLONG_PRINTED_HPP

#include <string>
#include <utility>
#include <vector>

namespace f4prolong::printed {

/// coefficient text, field name ("dz11" for d/dz11, "X1", "X12", "Z", ...)
using Term = std::pair<std::string, std::string>;

struct Display {
  std::string label;
  /// displayed bracket [zeta_i, zeta_j] (1-based)
  std::size_t i, j;
  std::vector<Term> terms;
};

/// zeta_1..zeta_4 as transcribed from the generator lemma.
const std::vector<std::vector<Term>>& generators();

/// Intermediate displays in the proof of the bracket relations.
const std::vector<Display>& displays();

}  // namespace f4prolong::printed

#endif  // F4PROLONG_PROLONG_PRINTED_HPP
