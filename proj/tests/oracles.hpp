#pragma once

// Test-only oracles. Each one is an independent route to a value the library
// computes some other way; none of them call the code path they check.

#include <random>
#include <vector>

#include "qperm/matrix.hpp"
#include "qperm/partition.hpp"
#include "qperm/rational.hpp"

namespace qperm::test {

// Catalan numbers by the convolution recurrence C_{m} = Σ C_i C_{m-1-i}.
inline std::vector<BigInt> catalan_numbers(int count) {
    std::vector<BigInt> c{BigInt(1)};
    for (int m = 1; m <= count; ++m) {
        BigInt v(0);
        for (int i = 0; i < m; ++i) v += c[i] * c[m - 1 - i];
        c.push_back(v);
    }
    return c;  // c[k] = C_k
}

// Bell numbers by the Bell triangle.
inline std::vector<BigInt> bell_numbers(int count) {
    std::vector<BigInt> bells{BigInt(1)};
    std::vector<BigInt> row{BigInt(1)};
    for (int m = 1; m <= count; ++m) {
        std::vector<BigInt> next{row.back()};
        for (const BigInt& v : row) next.push_back(next.back() + v);
        row = std::move(next);
        bells.push_back(row.front());
    }
    return bells;  // bells[k] = B_k
}

// Narayana number N(k,j) = C(k,j-1)·C(k,j)/k.
inline BigInt narayana(int k, int j) {
    BigRational v(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j - 1)) *
                      binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)),
                  BigInt(k));
    return v.numerator();  // exact: the denominator always cancels
}

// Literal a<b<c<d crossing scan, the defining condition.
inline bool has_crossing_quadruple(const Partition& p) {
    const auto& g = p.growth();
    const int k = p.k();
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            for (int c = b + 1; c < k; ++c) {
                for (int d = c + 1; d < k; ++d) {
                    if (g[a] == g[c] && g[b] == g[d] && g[a] != g[b]) return true;
                }
            }
        }
    }
    return false;
}

// Cofactor-expansion determinant; fine for the small matrices tests use.
inline BigRational cofactor_determinant(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    BigRational det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        RationalMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(r - 1, cc++) = m.at(r, j);
            }
        }
        BigRational term = m.at(0, c) * cofactor_determinant(minor);
        if (c % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

// Deterministic rational fuzz values.
class RationalSource {
public:
    explicit RationalSource(unsigned seed) : rng_(seed) {}

    BigRational next(long num_bound = 50, long den_bound = 20) {
        std::uniform_int_distribution<long> num(-num_bound, num_bound);
        std::uniform_int_distribution<long> den(1, den_bound);
        return BigRational(num(rng_), den(rng_));
    }

    long next_int(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

private:
    std::mt19937 rng_;
};

}  // namespace qperm::test
