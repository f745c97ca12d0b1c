#include "lam/magic.hpp"

#include <algorithm>

namespace lam {

long long magic_constant(int n) {
    long long m = n;
    return (m * m * m + m) / 2;
}

namespace {

// Siamese method, 1 placed top-middle, moving up-right with wraparound.
MagicSquare siamese(int n) {
    MagicSquare s{n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0))};
    int r = 0, c = n / 2;
    for (long long v = 1; v <= static_cast<long long>(n) * n; ++v) {
        s.entries[r][c] = v;
        int nr = (r - 1 + n) % n, nc = (c + 1) % n;
        if (s.entries[nr][nc] != 0) {
            nr = (r + 1) % n;
            nc = c;
        }
        r = nr;
        c = nc;
    }
    return s;
}

// Doubly even: row-major fill, complement on the diagonal 4x4 sub-pattern.
MagicSquare doubly_even(int n) {
    MagicSquare s{n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0))};
    long long nn = static_cast<long long>(n) * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long v = static_cast<long long>(i) * n + j + 1;
            bool flip = (i % 4 == j % 4) || ((i % 4) + (j % 4) == 3);
            s.entries[i][j] = flip ? nn + 1 - v : v;
        }
    return s;
}

// Conway's LUX method for n = 4k+2.
MagicSquare lux(int n) {
    int k = (n - 2) / 4;
    int m = 2 * k + 1;
    MagicSquare odd = siamese(m);

    // 0 = L, 1 = U, 2 = X
    std::vector<std::vector<int>> letter(m, std::vector<int>(m, 0));
    for (int j = 0; j < m; ++j) {
        letter[k + 1][j] = 1;
        for (int i = k + 2; i < m; ++i) letter[i][j] = 2;
    }
    std::swap(letter[k][k], letter[k + 1][k]);  // center U moves up

    static const int pat[3][2][2] = {
        {{4, 1}, {2, 3}},  // L
        {{1, 4}, {2, 3}},  // U
        {{1, 4}, {3, 2}},  // X
    };
    MagicSquare s{n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0))};
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            long long base = 4 * (odd.entries[r][c] - 1);
            const auto& q = pat[letter[r][c]];
            for (int dr = 0; dr < 2; ++dr)
                for (int dc = 0; dc < 2; ++dc)
                    s.entries[2 * r + dr][2 * c + dc] = base + q[dr][dc];
        }
    return s;
}

}  // namespace

MagicSquare magic_square(int n) {
    if (n < 3) throw Error("invalid-order", "magic square needs n >= 3");
    if (n % 2 == 1) return siamese(n);
    if (n % 4 == 0) return doubly_even(n);
    return lux(n);
}

std::vector<std::vector<long long>> shifted_block(const MagicSquare& omega,
                                                  long long i, long long q) {
    if (i < 1 || i > q) throw Error("invalid-label", "block index outside [1,q]");
    long long shift = (i - 1) * omega.n * omega.n;
    auto out = omega.entries;
    for (auto& row : out)
        for (auto& v : row) v += shift;
    return out;
}

bool is_magic(const MagicSquare& s) {
    int n = s.n;
    long long nn = static_cast<long long>(n) * n;
    std::vector<char> seen(nn + 1, 0);
    for (const auto& row : s.entries)
        for (long long v : row) {
            if (v < 1 || v > nn || seen[v]) return false;
            seen[v] = 1;
        }
    long long k = magic_constant(n);
    long long d1 = 0, d2 = 0;
    for (int i = 0; i < n; ++i) {
        long long rs = 0, cs = 0;
        for (int j = 0; j < n; ++j) {
            rs += s.entries[i][j];
            cs += s.entries[j][i];
        }
        if (rs != k || cs != k) return false;
        d1 += s.entries[i][i];
        d2 += s.entries[i][n - 1 - i];
    }
    return d1 == k && d2 == k;
}

}  // namespace lam
