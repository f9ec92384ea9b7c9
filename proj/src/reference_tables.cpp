#include "qperm/reference_tables.hpp"

#include <array>

#include "qperm/errors.hpp"

namespace qperm::reference {

namespace {

// Entries are recorded as coefficient-of-n^e tables: value = c * n^e with
// c an integer, scaled by an overall prefactor afterwards.
struct Monomial {
    long coefficient;
    unsigned exponent;
};

BigRational eval(const Monomial& m, int n) {
    return BigRational(m.coefficient) * BigRational(int_pow(BigInt(n), m.exponent));
}

template <std::size_t D>
RationalMatrix build(const std::array<std::array<Monomial, D>, D>& cells, int n,
                     const BigRational& prefactor) {
    RationalMatrix m(D, D);
    for (std::size_t r = 0; r < D; ++r) {
        for (std::size_t c = 0; c < D; ++c) m.at(r, c) = prefactor * eval(cells[r][c], n);
    }
    return m;
}

constexpr Monomial kOne{1, 0};
constexpr Monomial kN{1, 1};
constexpr Monomial kN2{1, 2};
constexpr Monomial kN3{1, 3};

void require_dimension(int n, int at_least) {
    if (n < at_least) throw InvalidArgumentError("reference table undefined at this n");
}

}  // namespace

RationalMatrix gram_k2(int n) {
    require_dimension(n, 1);
    std::array<std::array<Monomial, 2>, 2> cells{{
        {{kOne, kOne}},
        {{kOne, kN}},
    }};
    return build(cells, n, BigRational(static_cast<long>(n)));
}

RationalMatrix gram_inverse_k2(int n) {
    require_dimension(n, 2);
    std::array<std::array<Monomial, 2>, 2> cells{{
        {{kN, {-1, 0}}},
        {{{-1, 0}, kOne}},
    }};
    return build(cells, n, BigRational(1L, static_cast<long>(n) * (n - 1)));
}

RationalMatrix gram_k3(int n) {
    require_dimension(n, 1);
    std::array<std::array<Monomial, 5>, 5> cells{{
        {{kN, kOne, kOne, kOne, kN}},
        {{kOne, kOne, kOne, kOne, kOne}},
        {{kOne, kOne, kN, kOne, kN}},
        {{kOne, kOne, kOne, kN, kN}},
        {{kN, kOne, kN, kN, kN2}},
    }};
    return build(cells, n, BigRational(static_cast<long>(n)));
}

RationalMatrix gram_inverse_k3(int n) {
    require_dimension(n, 3);
    RationalMatrix m(5, 5);
    const BigRational pref(1L, static_cast<long>(n) * (n - 1) * (n - 2));
    const BigRational N(static_cast<long>(n));
    const BigRational one(1), two(2);
    const BigRational nm = N - one;  // n-1
    const BigRational table[5][5] = {
        {nm, -N, one, one, -one},
        {-N, N * N, -N, -N, two},
        {one, -N, nm, one, -one},
        {one, -N, one, nm, -one},
        {-one, two, -one, -one, one},
    };
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 5; ++c) m.at(r, c) = pref * table[r][c];
    }
    return m;
}

RationalMatrix gram_k4(int n) {
    require_dimension(n, 1);
    std::array<std::array<Monomial, 14>, 14> cells{{
        {{kN, kN, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kN, kN}},
        {{kN, kN2, kN, kN, kOne, kN, kOne, kOne, kN, kN, kOne, kN, kN, kN2}},
        {{kOne, kN, kN, kOne, kOne, kN, kOne, kOne, kOne, kOne, kOne, kN, kOne, kN}},
        {{kOne, kN, kOne, kN, kOne, kOne, kOne, kOne, kN, kN, kOne, kOne, kOne, kN}},
        {{kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne}},
        {{kOne, kN, kN, kOne, kOne, kN2, kN, kOne, kN, kN, kOne, kN, kN, kN2}},
        {{kOne, kOne, kOne, kOne, kOne, kN, kN, kOne, kN, kOne, kOne, kOne, kN, kN}},
        {{kOne, kOne, kOne, kOne, kOne, kOne, kOne, kN, kN, kOne, kOne, kN, kOne, kN}},
        {{kOne, kN, kOne, kN, kOne, kN, kN, kN, kN2, kN, kOne, kN, kN, kN2}},
        {{kOne, kN, kOne, kN, kOne, kN, kOne, kOne, kN, kN2, kN, kN, kN, kN2}},
        {{kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kOne, kN, kN, kN, kN, kN}},
        {{kOne, kN, kN, kOne, kOne, kN, kOne, kN, kN, kN, kN, kN2, kN, kN2}},
        {{kN, kN, kOne, kOne, kOne, kN, kN, kOne, kN, kN, kN, kN, kN2, kN2}},
        {{kN, kN2, kN, kN, kOne, kN2, kN, kN, kN2, kN2, kN, kN2, kN2, kN3}},
    }};
    return build(cells, n, BigRational(static_cast<long>(n)));
}

}  // namespace qperm::reference
