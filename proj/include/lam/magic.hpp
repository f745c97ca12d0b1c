#pragma once

#include <vector>

#include "lam/graph.hpp"

namespace lam {

struct MagicSquare {
    int n = 0;
    std::vector<std::vector<long long>> entries;
};

// (n^3 + n) / 2
long long magic_constant(int n);

// Deterministic square of order n >= 3: Siamese for odd n, complement
// pattern for doubly even n, LUX for singly even n.
MagicSquare magic_square(int n);

// Omega_i = Omega + (i-1) n^2 J, 1 <= i <= q.
std::vector<std::vector<long long>> shifted_block(const MagicSquare& omega,
                                                  long long i, long long q);

// Permutation of [1,n^2] plus all 2n+2 line sums equal to the magic constant.
bool is_magic(const MagicSquare& s);

}  // namespace lam
