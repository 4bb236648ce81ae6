#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace aqs {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;
using RVector = std::vector<double>;

inline bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace aqs
