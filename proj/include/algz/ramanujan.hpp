#ifndef ALGZ_RAMANUJAN_HPP
#define ALGZ_RAMANUJAN_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "algz/partition.hpp"

namespace algz
{

// Exponents of a, b, z and the q-weight carried by a quintuple.
struct Statistics {
    long a_exp = 0;
    long b_exp = 0;
    long z_exp = 0;
    Part weight = 0;
    friend bool operator==(const Statistics &, const Statistics &) = default;
    friend auto operator<=>(const Statistics &, const Statistics &) = default;
};

/// Left-hand objects for the coefficient of z^N, N >= 0.
///
/// alpha distinct positive, beta positive, gamma distinct nonnegative with
/// l(gamma) <= n, lambda distinct with parts <= n - 1, mu with parts <= n - 1.
/// N = n - l(gamma), a-exponent l(lambda) - l(alpha) - l(gamma), b-exponent
/// l(gamma) + l(mu).
struct QuintupleA {
    std::size_t n = 0;
    Partition alpha, beta, gamma, lambda, mu;

    // Empty optional when valid; otherwise the first violated condition.
    std::optional<std::string> violation() const;
    bool valid() const { return !violation(); }
    friend bool operator==(const QuintupleA &, const QuintupleA &) = default;
};

/// Right-hand objects: A, C distinct nonnegative; B, D arbitrary; E distinct
/// positive. N = l(C) + l(D) - l(E), a-exponent l(C) - l(A) - l(E),
/// b-exponent l(A) + l(B).
struct QuintupleB {
    Partition A, B, C, D, E;

    std::optional<std::string> violation() const;
    bool valid() const { return !violation(); }
    friend bool operator==(const QuintupleB &, const QuintupleB &) = default;
};

/// Left-hand objects for the coefficient of z^{-m}, m >= 1.
///
/// alpha distinct positive ending in the staircase (m, ..., 1); beta positive;
/// gamma with l distinct nonnegative parts; lambda distinct with parts
/// <= l - 1; mu with parts <= l - 1. With s = l - l(lambda):
/// gamma_s - gamma_{s+1} >= m + 1 when 0 < l(lambda) < l, and gamma_l >= m
/// when lambda is empty.
struct QuintupleC {
    Part m = 1;
    std::size_t l = 0;
    Partition alpha, beta, gamma, lambda, mu;

    std::optional<std::string> violation() const;
    bool valid() const { return !violation(); }
    friend bool operator==(const QuintupleC &, const QuintupleC &) = default;
};

/// Right-hand objects for z^{-m}: A distinct with parts >= m, C distinct
/// nonnegative, E distinct positive, l(C) + l(D) - l(E) = -m.
struct QuintupleD {
    Part m = 1;
    Partition A, B, C, D, E;

    std::optional<std::string> violation() const;
    bool valid() const { return !violation(); }
    friend bool operator==(const QuintupleD &, const QuintupleD &) = default;
};

// Throw InvalidArgument on an invalid quintuple.
Statistics statistics(const QuintupleA &x);
Statistics statistics(const QuintupleB &y);
Statistics statistics(const QuintupleC &x);
Statistics statistics(const QuintupleD &y);

QuintupleB forward_pos(const QuintupleA &x);
QuintupleA backward_pos(const QuintupleB &y);

QuintupleC backward_neg(const QuintupleD &y);
QuintupleD forward_neg(const QuintupleC &x);

} // namespace algz

#endif
