#ifndef ALGZ_QSERIES_HPP
#define ALGZ_QSERIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "algz/execution.hpp"
#include "algz/partition.hpp"

namespace algz
{

using Rational = mpq_class;

// Accepts "p/q", "p" or "-p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational &r);

// Inversion of a series whose constant term vanishes.
class NonUnitError : public InvalidArgument
{
public:
    using InvalidArgument::InvalidArgument;
};

/// Power series in q truncated after q^qmax, with exact rational
/// coefficients. Results of binary operations carry the smaller qmax of the
/// operands, so no operation ever reads a discarded order.
class QSeries
{
public:
    explicit QSeries(int qmax = 0);
    QSeries(std::vector<Rational> coeffs);

    static QSeries constant(const Rational &c, int qmax);
    static QSeries monomial(const Rational &c, int power, int qmax);

    int qmax() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational &operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    Rational &coeff(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    QSeries truncated(int qmax) const;

    // Multiplies by q^power (power >= 0).
    QSeries shifted(int power) const;

    // In-place multiplication by (1 + c q^power).
    void mul_binomial(const Rational &c, int power);

    QSeries &operator+=(const QSeries &o);
    QSeries &operator-=(const QSeries &o);
    QSeries &operator*=(const QSeries &o);
    QSeries &operator*=(const Rational &c);

    friend QSeries operator+(QSeries x, const QSeries &y) { return x += y; }
    friend QSeries operator-(QSeries x, const QSeries &y) { return x -= y; }
    friend QSeries operator*(const QSeries &x, const QSeries &y);
    friend QSeries operator*(QSeries x, const Rational &c) { return x *= c; }
    friend QSeries operator-(QSeries x) { return x *= Rational(-1); }

    // Coefficientwise up to the smaller qmax.
    friend bool operator==(const QSeries &x, const QSeries &y);

    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

// Throws NonUnitError when the constant term is zero.
QSeries invert(const QSeries &x);

/// prod_{i >= 0} (1 - c q^{start + i}) truncated at qmax. For (-x; q)_inf
/// pass c = -x.
QSeries pochhammer_inf(const Rational &c, int start, int qmax);

/// (c; q)_n. For n = -k < 0 this is the power series
/// (-1/c)^k q^{k(k+1)/2} / (q/c; q)_k, defined for c != 0.
QSeries pochhammer_fin(const Rational &c, long n, int qmax);

/// (x; q)_n / (y; q)_n for any integer n. Negative n uses
/// prod_{i=1}^{k} (q^i - y) / (q^i - x), which needs x != 0.
QSeries pochhammer_ratio(const Rational &x, const Rational &y, long n, int qmax);

// (q; q)_n = prod_{i=1}^{n} (1 - q^i)
QSeries q_factorial(long n, int qmax);

// Gaussian binomial [n choose k]; qmax defaults to its degree k (n - k).
QSeries gauss_binomial(long n, long k, std::optional<int> qmax = std::nullopt);

/// prod_{i=0}^{n-1} (x + y q^i). Under this convention the Cauchy polynomial
/// P_n(b, -a) is cauchy_poly(n, b, a).
QSeries cauchy_poly(long n, const Rational &x, const Rational &y, int qmax);

// sum_k [n choose k] y^k q^{k(k-1)/2} x^{n-k}
QSeries cauchy_poly_sum(long n, const Rational &x, const Rational &y, int qmax);

/// Laurent polynomial in z whose coefficients are QSeries, stored on the
/// window [zmin, zmax]. The caller decides which window is exact; see
/// guard_band.
class ZLaurentSeries
{
public:
    ZLaurentSeries(long zmin, long zmax, int qmax);

    long zmin() const noexcept { return zmin_; }
    long zmax() const noexcept { return zmax_; }
    int qmax() const noexcept { return qmax_; }
    bool contains(long e) const noexcept { return e >= zmin_ && e <= zmax_; }

    const QSeries &operator[](long e) const;
    QSeries &term(long e);

    ZLaurentSeries restricted(long zmin, long zmax) const;
    ZLaurentSeries &operator*=(const QSeries &c);

    // In-place multiplication by (1 + c q^power z^zpower), zpower = +-1.
    void mul_linear(const Rational &c, int power, int zpower);
    // In-place division by (1 - c q^power z), z >= 0 windows only.
    void div_linear(const Rational &c, int power);

private:
    long zmin_;
    long zmax_;
    int qmax_;
    std::vector<QSeries> terms_;
};

// Product materialized on [zmin, zmax]: every pair of stored terms whose
// exponents sum into the window contributes.
ZLaurentSeries mul(const ZLaurentSeries &x, const ZLaurentSeries &y, long zmin, long zmax,
                   Execution exec = Execution::parallel);

// Smallest G with G (G + 1) / 2 > qmax.
int guard_band(int qmax);

enum class Side {
    lhs_1psi1,
    rhs_1psi1,
    lhs_qbinomial,
    rhs_qbinomial,
    lhs_sec3,
    rhs_sec3,
    lhs_negN,
    rhs_negN,
    euler,
    euler_sum,
};

Side parse_side(std::string_view name);
std::string side_name(Side side);

struct SeriesParams {
    Rational a{2};
    Rational b{1, 3};
    int qmax = 12;
    long zmax = 3;
    // z^{-m} for the negative-N sides; q^m shift for the Euler sides.
    long m = 1;
    std::optional<int> guard;
};

class GuardViolation : public InvalidArgument
{
public:
    using InvalidArgument::InvalidArgument;
};

/// Expands one side of an identity. The result window is the reporting
/// window: [-zmax, zmax] for the bilateral sides, [0, zmax] for the
/// q-binomial sides, [-zmax, 0] for the Euler sides, {-m} for the negative-N
/// sides and {0} for the z-free sides. Every stored coefficient is exact.
ZLaurentSeries expand_side(Side side, const SeriesParams &p);

enum class Identity { qbinomial, sec3, psi1, negN, euler, gauss_relation, cauchy_forms };

Identity parse_identity(std::string_view name);
std::string identity_name(Identity id);

struct Mismatch {
    long z = 0;
    int q = 0;
    Rational lhs;
    Rational rhs;
    std::string where;
};

struct VerifyReport {
    Identity identity{};
    SeriesParams params;
    long zmin = 0;
    long zmax = 0;
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
};

/// Expands both sides independently and compares them exactly on the
/// reporting window. For gauss-relation and cauchy-forms, zmax bounds i + j
/// and n respectively.
VerifyReport verify_identity(Identity which, const SeriesParams &p);

// First differing (z, q) between two expansions on their common window.
std::optional<Mismatch> compare(const ZLaurentSeries &lhs, const ZLaurentSeries &rhs);

} // namespace algz

#endif
