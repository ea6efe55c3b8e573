#include "algz/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace algz
{

Rational parse_rational(std::string_view text)
{
    const std::string s(text);
    if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos
        || std::count(s.begin(), s.end(), '/') > 1) {
        throw InvalidArgument("malformed rational '" + s + "'");
    }
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw InvalidArgument("malformed rational '" + s + "'");
    }
    if (r.get_den() == 0) {
        throw InvalidArgument("zero denominator in '" + s + "'");
    }
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &r)
{
    return r.get_str();
}

// ---------------------------------------------------------------- QSeries

QSeries::QSeries(int qmax)
{
    if (qmax < 0) {
        throw InvalidArgument("negative truncation order");
    }
    coeffs_.assign(static_cast<std::size_t>(qmax) + 1, Rational(0));
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw InvalidArgument("a series needs at least the constant coefficient");
    }
}

QSeries QSeries::constant(const Rational &c, int qmax)
{
    QSeries s(qmax);
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::monomial(const Rational &c, int power, int qmax)
{
    QSeries s(qmax);
    if (power < 0) {
        throw InvalidArgument("negative q-power in a power series");
    }
    if (power <= qmax) {
        s.coeffs_[static_cast<std::size_t>(power)] = c;
    }
    return s;
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

QSeries QSeries::truncated(int qmax) const
{
    if (qmax > this->qmax()) {
        throw InvalidArgument("cannot extend a truncated series");
    }
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + qmax + 1));
}

QSeries QSeries::shifted(int power) const
{
    QSeries r(qmax());
    for (int k = power; k <= qmax(); ++k) {
        r.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k - power)];
    }
    return r;
}

void QSeries::mul_binomial(const Rational &c, int power)
{
    if (power == 0) {
        *this *= Rational(1 + c);
        return;
    }
    for (int k = qmax(); k >= power; --k) {
        coeffs_[static_cast<std::size_t>(k)] += c * coeffs_[static_cast<std::size_t>(k - power)];
    }
}

QSeries &QSeries::operator+=(const QSeries &o)
{
    coeffs_.resize(static_cast<std::size_t>(std::min(qmax(), o.qmax())) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &o)
{
    coeffs_.resize(static_cast<std::size_t>(std::min(qmax(), o.qmax())) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
}

QSeries operator*(const QSeries &x, const QSeries &y)
{
    const int n = std::min(x.qmax(), y.qmax());
    QSeries r(n);
    for (int i = 0; i <= n; ++i) {
        const Rational &xi = x.coeffs_[static_cast<std::size_t>(i)];
        if (xi == 0) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            r.coeffs_[static_cast<std::size_t>(i + j)] += xi * y.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

QSeries &QSeries::operator*=(const QSeries &o)
{
    *this = *this * o;
    return *this;
}

QSeries &QSeries::operator*=(const Rational &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

bool operator==(const QSeries &x, const QSeries &y)
{
    const auto n = static_cast<std::size_t>(std::min(x.qmax(), y.qmax()));
    for (std::size_t k = 0; k <= n; ++k) {
        if (x.coeffs_[k] != y.coeffs_[k]) {
            return false;
        }
    }
    return true;
}

std::string QSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= qmax(); ++k) {
        const Rational &c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '(' << c.get_str() << ")q^" << k;
    }
    if (first) {
        os << '0';
    }
    os << " + O(q^" << qmax() + 1 << ')';
    return os.str();
}

QSeries invert(const QSeries &x)
{
    if (x[0] == 0) {
        throw NonUnitError("cannot invert a series with zero constant term");
    }
    const int n = x.qmax();
    QSeries r(n);
    const Rational c0 = 1 / x[0];
    r.coeff(0) = c0;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) {
            if (x[i] != 0) {
                acc += x[i] * r[k - i];
            }
        }
        r.coeff(k) = -acc * c0;
    }
    return r;
}

// ------------------------------------------------------- special products

QSeries pochhammer_inf(const Rational &c, int start, int qmax)
{
    if (start < 0) {
        throw InvalidArgument("pochhammer_inf start must be nonnegative");
    }
    QSeries r = QSeries::constant(1, qmax);
    if (c == 0) {
        return r;
    }
    for (int e = start; e <= qmax; ++e) {
        r.mul_binomial(-c, e);
    }
    return r;
}

QSeries pochhammer_fin(const Rational &c, long n, int qmax)
{
    QSeries r = QSeries::constant(1, qmax);
    if (n >= 0) {
        // factors with i > qmax are 1 + O(q^{qmax+1})
        for (long i = 0; i < n && i <= qmax; ++i) {
            r.mul_binomial(-c, static_cast<int>(i));
        }
        return r;
    }
    if (c == 0) {
        throw NonUnitError("(0; q)_n is undefined for negative n");
    }
    const long k = -n;
    const Rational inv = 1 / c;
    QSeries den = QSeries::constant(1, qmax);
    for (long i = 1; i <= k && i <= qmax; ++i) {
        den.mul_binomial(-inv, static_cast<int>(i));
    }
    Rational lead = 1;
    for (long i = 0; i < k; ++i) {
        lead *= -inv;
    }
    const long deg = k * (k + 1) / 2;
    if (deg > qmax) {
        return QSeries(qmax);
    }
    return QSeries::monomial(lead, static_cast<int>(deg), qmax) * invert(den);
}

QSeries pochhammer_ratio(const Rational &x, const Rational &y, long n, int qmax)
{
    if (n >= 0) {
        return pochhammer_fin(x, n, qmax) * invert(pochhammer_fin(y, n, qmax));
    }
    if (x == 0) {
        throw NonUnitError("(x; q)_n / (y; q)_n with x = 0 and n < 0 has a non-unit denominator");
    }
    QSeries num = QSeries::constant(1, qmax);
    QSeries den = QSeries::constant(1, qmax);
    for (long i = 1; i <= -n; ++i) {
        QSeries fn = QSeries::constant(-y, qmax);
        QSeries fd = QSeries::constant(-x, qmax);
        if (i <= qmax) {
            fn.coeff(static_cast<int>(i)) += 1;
            fd.coeff(static_cast<int>(i)) += 1;
        }
        num *= fn;
        den *= fd;
    }
    return num * invert(den);
}

QSeries q_factorial(long n, int qmax)
{
    if (n < 0) {
        throw InvalidArgument("q_factorial of a negative index");
    }
    QSeries r = QSeries::constant(1, qmax);
    for (long i = 1; i <= n && i <= qmax; ++i) {
        r.mul_binomial(-1, static_cast<int>(i));
    }
    return r;
}

QSeries gauss_binomial(long n, long k, std::optional<int> qmax)
{
    if (n < 0 || k < 0 || k > n) {
        throw InvalidArgument("gauss_binomial needs 0 <= k <= n");
    }
    const long degree = k * (n - k);
    const long cap = qmax ? *qmax : degree;
    // Pascal recurrence [r, j] = [r-1, j-1] + q^j [r-1, j] over integer polynomials.
    std::vector<std::vector<mpz_class>> row(static_cast<std::size_t>(k) + 1);
    row[0] = {1};
    for (long r = 1; r <= n; ++r) {
        for (long j = std::min(r, k); j >= 1; --j) {
            auto &cur = row[static_cast<std::size_t>(j)];
            const auto &prev = row[static_cast<std::size_t>(j - 1)];
            std::vector<mpz_class> next(static_cast<std::size_t>(j * (r - j)) + 1, 0);
            for (std::size_t e = 0; e < prev.size() && e < next.size(); ++e) {
                next[e] += prev[e];
            }
            for (std::size_t e = 0; e < cur.size(); ++e) {
                const std::size_t at = e + static_cast<std::size_t>(j);
                if (at < next.size()) {
                    next[at] += cur[e];
                }
            }
            cur = std::move(next);
        }
    }
    QSeries out(static_cast<int>(cap));
    const auto &poly = row[static_cast<std::size_t>(k)];
    for (std::size_t e = 0; e < poly.size() && static_cast<long>(e) <= cap; ++e) {
        out.coeff(static_cast<int>(e)) = Rational(poly[e]);
    }
    return out;
}

QSeries cauchy_poly(long n, const Rational &x, const Rational &y, int qmax)
{
    if (n < 0) {
        throw InvalidArgument("cauchy_poly of a negative index");
    }
    QSeries r = QSeries::constant(1, qmax);
    for (long i = 0; i < n; ++i) {
        QSeries f = QSeries::constant(x, qmax);
        if (i <= qmax) {
            f.coeff(static_cast<int>(i)) += y;
        }
        r *= f;
    }
    return r;
}

QSeries cauchy_poly_sum(long n, const Rational &x, const Rational &y, int qmax)
{
    if (n < 0) {
        throw InvalidArgument("cauchy_poly_sum of a negative index");
    }
    QSeries r(qmax);
    Rational ypow = 1;
    for (long k = 0; k <= n; ++k) {
        const long shift = k * (k - 1) / 2;
        if (shift <= qmax) {
            Rational coef = ypow;
            for (long i = 0; i < n - k; ++i) {
                coef *= x;
            }
            r += gauss_binomial(n, k, qmax).shifted(static_cast<int>(shift)) * coef;
        }
        ypow *= y;
    }
    return r;
}

// --------------------------------------------------------- ZLaurentSeries

ZLaurentSeries::ZLaurentSeries(long zmin, long zmax, int qmax) : zmin_(zmin), zmax_(zmax), qmax_(qmax)
{
    if (zmax < zmin) {
        throw InvalidArgument("empty z-window");
    }
    terms_.assign(static_cast<std::size_t>(zmax - zmin + 1), QSeries(qmax));
}

const QSeries &ZLaurentSeries::operator[](long e) const
{
    if (!contains(e)) {
        throw std::out_of_range("z-exponent " + std::to_string(e) + " outside the window");
    }
    return terms_[static_cast<std::size_t>(e - zmin_)];
}

QSeries &ZLaurentSeries::term(long e)
{
    if (!contains(e)) {
        throw std::out_of_range("z-exponent " + std::to_string(e) + " outside the window");
    }
    return terms_[static_cast<std::size_t>(e - zmin_)];
}

ZLaurentSeries ZLaurentSeries::restricted(long zmin, long zmax) const
{
    if (zmin < zmin_ || zmax > zmax_) {
        throw InvalidArgument("restriction window exceeds the stored window");
    }
    ZLaurentSeries r(zmin, zmax, qmax_);
    for (long e = zmin; e <= zmax; ++e) {
        r.term(e) = (*this)[e];
    }
    return r;
}

ZLaurentSeries &ZLaurentSeries::operator*=(const QSeries &c)
{
    for (auto &t : terms_) {
        t *= c;
    }
    return *this;
}

void ZLaurentSeries::mul_linear(const Rational &c, int power, int zpower)
{
    if (power > qmax_) {
        return;
    }
    if (zpower == 1) {
        for (long e = zmax_; e > zmin_; --e) {
            term(e) += (*this)[e - 1].shifted(power) * c;
        }
    } else if (zpower == -1) {
        for (long e = zmin_; e < zmax_; ++e) {
            term(e) += (*this)[e + 1].shifted(power) * c;
        }
    } else {
        throw InvalidArgument("mul_linear expects z^1 or z^-1");
    }
}

void ZLaurentSeries::div_linear(const Rational &c, int power)
{
    if (zmin_ < 0) {
        throw InvalidArgument("div_linear needs a window bounded below by z^0");
    }
    if (power > qmax_) {
        return;
    }
    for (long e = zmin_ + 1; e <= zmax_; ++e) {
        term(e) += (*this)[e - 1].shifted(power) * c;
    }
}

namespace
{

QSeries product_term(const ZLaurentSeries &x, const ZLaurentSeries &y, long e, int qmax)
{
    QSeries acc(qmax);
    const long lo = std::max(x.zmin(), e - y.zmax());
    const long hi = std::min(x.zmax(), e - y.zmin());
    for (long i = lo; i <= hi; ++i) {
        const QSeries &xi = x[i];
        if (xi.is_zero()) {
            continue;
        }
        acc += xi * y[e - i];
    }
    return acc;
}

} // namespace

ZLaurentSeries mul(const ZLaurentSeries &x, const ZLaurentSeries &y, long zmin, long zmax, Execution exec)
{
    const int qmax = std::min(x.qmax(), y.qmax());
    ZLaurentSeries r(zmin, zmax, qmax);
    if (exec == Execution::serial) {
        for (long e = zmin; e <= zmax; ++e) {
            r.term(e) = product_term(x, y, e, qmax);
        }
        return r;
    }
#pragma omp parallel for schedule(dynamic)
    for (long e = zmin; e <= zmax; ++e) {
        r.term(e) = product_term(x, y, e, qmax);
    }
    return r;
}

int guard_band(int qmax)
{
    int g = 0;
    while (g * (g + 1) / 2 <= qmax) {
        ++g;
    }
    return g;
}

} // namespace algz
