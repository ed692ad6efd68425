#pragma once

#include <triquad/lehmer.hpp>

#include <vector>

namespace triquad {

// Brute-force ground truth, independent of the solver: enumerate y in
// [2, y_max] and n in n_set, walk x upward while 3x^2 < y^n, and keep every
// row with (y^n - 3x^2)/2 a perfect square d^2, gcd(x, y) = 1, and d = p^b a
// prime power with p <= p_max.  Exhaustive within its bounds.
std::vector<Solution> oracle_enumerate(u64 y_max, const std::vector<unsigned>& n_set,
                                       u64 p_max);

}  // namespace triquad
