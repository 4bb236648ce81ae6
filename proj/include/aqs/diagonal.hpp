#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "aqs/errors.hpp"
#include "aqs/types.hpp"

namespace aqs {

// Real diagonal of a 2^n x 2^n operator, stored as its diagonal entries.
// Holds database operators, bit operators and problem Hamiltonian diagonals.
struct DiagonalOperator {
  RVector diag;

  DiagonalOperator() = default;

  explicit DiagonalOperator(RVector d) : diag(std::move(d)) {
    if (!is_power_of_two(diag.size()))
      throw ValidationError("diagonal operator: length " + std::to_string(diag.size()) +
                            " is not a power of two");
    for (std::size_t i = 0; i < diag.size(); ++i)
      if (!std::isfinite(diag[i]))
        throw ValidationError("diagonal operator: non-finite entry at index " + std::to_string(i));
  }

  std::size_t dim() const { return diag.size(); }
  double operator[](std::size_t i) const { return diag[i]; }

  double min_entry() const {
    double m = diag[0];
    for (double v : diag) m = std::min(m, v);
    return m;
  }

  double max_entry() const {
    double m = diag[0];
    for (double v : diag) m = std::max(m, v);
    return m;
  }

  std::size_t argmin() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < diag.size(); ++i)
      if (diag[i] < diag[best]) best = i;
    return best;
  }
};

// Entrywise 1 - d for a binary diagonal (the bar operator on bit operators).
inline DiagonalOperator complement(const DiagonalOperator& op) {
  RVector out(op.dim());
  for (std::size_t i = 0; i < op.dim(); ++i) {
    double d = op[i];
    if (d != 0.0 && d != 1.0)
      throw BoundsError("complement: entry " + std::to_string(d) + " at index " +
                        std::to_string(i) + " is not binary");
    out[i] = 1.0 - d;
  }
  return DiagonalOperator(std::move(out));
}

}  // namespace aqs
