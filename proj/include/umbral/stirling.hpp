#pragma once

#include <cstddef>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

enum class StirlingKind { FirstSigned, FirstUnsigned, Second };

/// Triangular table of Stirling numbers, values(n, l) for 0 <= l <= n <= max_n.
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, std::size_t max_n);

  StirlingKind kind() const { return kind_; }
  std::size_t max_n() const { return max_n_; }
  /// Zero outside the triangle (but n must not exceed max_n).
  const Integer& operator()(std::size_t n, std::size_t l) const;

 private:
  StirlingKind kind_;
  std::size_t max_n_;
  std::vector<std::vector<Integer>> rows_;
};

// Signed first kind: coefficients of the falling factorial (x)_n.
Integer stirling1(long n, long l);
// Second kind.
Integer stirling2(long n, long l);
// Unsigned first kind: coefficients of the rising factorial.
Integer stirling1_unsigned(long n, long l);

/// S2(n, l) read off (n!/l!) [t^n] (e^t - 1)^l. Independent of the recurrence.
Integer stirling2_via_series(long n, long l);

}  // namespace umbral
