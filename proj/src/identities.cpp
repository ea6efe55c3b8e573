#include <array>
#include <string>
#include <utility>

#include "algz/qseries.hpp"

namespace algz
{

namespace
{

constexpr std::array<std::pair<Side, const char *>, 10> side_names{{
    {Side::lhs_1psi1, "lhs-1psi1"},
    {Side::rhs_1psi1, "rhs-1psi1"},
    {Side::lhs_qbinomial, "lhs-qbinomial"},
    {Side::rhs_qbinomial, "rhs-qbinomial"},
    {Side::lhs_sec3, "lhs-sec3-identity"},
    {Side::rhs_sec3, "rhs-sec3-identity"},
    {Side::lhs_negN, "lhs-negN"},
    {Side::rhs_negN, "rhs-negN"},
    {Side::euler, "euler"},
    {Side::euler_sum, "euler-sum"},
}};

constexpr std::array<std::pair<Identity, const char *>, 7> identity_names{{
    {Identity::qbinomial, "qbinomial"},
    {Identity::sec3, "sec3"},
    {Identity::psi1, "1psi1"},
    {Identity::negN, "negN"},
    {Identity::euler, "euler"},
    {Identity::gauss_relation, "gauss-relation"},
    {Identity::cauchy_forms, "cauchy-forms"},
}};

void require_nonzero(const Rational &a, const char *name)
{
    if (a == 0) {
        throw InvalidArgument(std::string(name) + " must be nonzero");
    }
}

int effective_guard(const SeriesParams &p)
{
    if (!p.guard) {
        return guard_band(p.qmax);
    }
    const int g = *p.guard;
    if (g < 0 || g * (g + 1) / 2 <= p.qmax) {
        throw GuardViolation("guard band " + std::to_string(g) + " too small for qmax " + std::to_string(p.qmax)
                             + "; need G(G+1)/2 > qmax");
    }
    return g;
}

QSeries one(int qmax)
{
    return QSeries::constant(1, qmax);
}

// (-az; q)_inf (-q/(az); q)_inf / (z; q)_inf on [lo, hi].
ZLaurentSeries theta_over_z(const Rational &a, int qmax, long lo, long hi)
{
    ZLaurentSeries jacobi(lo, hi, qmax);
    jacobi.term(0) = one(qmax);
    for (int i = 0; i <= qmax; ++i) {
        jacobi.mul_linear(a, i, 1);
    }
    const Rational inv = 1 / a;
    for (int i = 1; i <= qmax; ++i) {
        jacobi.mul_linear(inv, i, -1);
    }
    ZLaurentSeries geometric(0, hi, qmax);
    for (long k = 0; k <= hi; ++k) {
        geometric.term(k) = invert(q_factorial(k, qmax));
    }
    return mul(jacobi, geometric, lo, hi);
}

ZLaurentSeries lhs_1psi1(const SeriesParams &p)
{
    require_nonzero(p.a, "a");
    const int q = p.qmax;
    const long g = effective_guard(p);
    const long lo = -p.zmax - g;
    const long hi = p.zmax + g;

    // (-b/(az); q)_inf, supported on z <= 0.
    ZLaurentSeries damped(lo, 0, q);
    damped.term(0) = one(q);
    const Rational ratio = p.b / p.a;
    for (int i = 0; i <= q; ++i) {
        damped.mul_linear(ratio, i, -1);
    }
    ZLaurentSeries bilateral(lo, hi, q);
    for (long n = lo; n <= hi; ++n) {
        bilateral.term(n) = pochhammer_ratio(-p.a, p.b, n, q);
    }
    ZLaurentSeries out = mul(damped, bilateral, lo, hi);
    out *= pochhammer_inf(-1 / p.a, 1, q) * invert(pochhammer_inf(1, 1, q));
    return out.restricted(-p.zmax, p.zmax);
}

ZLaurentSeries rhs_1psi1(const SeriesParams &p)
{
    require_nonzero(p.a, "a");
    const int q = p.qmax;
    const long g = effective_guard(p);
    ZLaurentSeries out = theta_over_z(p.a, q, -p.zmax - g, p.zmax + g);
    out *= pochhammer_inf(-p.b / p.a, 0, q) * invert(pochhammer_inf(p.b, 0, q));
    return out.restricted(-p.zmax, p.zmax);
}

ZLaurentSeries lhs_qbinomial(const SeriesParams &p)
{
    ZLaurentSeries out(0, p.zmax, p.qmax);
    for (long n = 0; n <= p.zmax; ++n) {
        out.term(n) = cauchy_poly(n, p.b, p.a, p.qmax) * invert(q_factorial(n, p.qmax));
    }
    return out;
}

ZLaurentSeries rhs_qbinomial(const SeriesParams &p)
{
    ZLaurentSeries out(0, p.zmax, p.qmax);
    out.term(0) = one(p.qmax);
    for (int i = 0; i <= p.qmax; ++i) {
        out.mul_linear(p.a, i, 1);
        out.div_linear(p.b, i);
    }
    return out;
}

ZLaurentSeries single(long e, QSeries s)
{
    ZLaurentSeries out(e, e, s.qmax());
    out.term(e) = std::move(s);
    return out;
}

ZLaurentSeries lhs_sec3(const SeriesParams &p)
{
    return single(0, pochhammer_inf(-p.a, 0, p.qmax) * invert(pochhammer_inf(p.b, 0, p.qmax)));
}

ZLaurentSeries rhs_sec3(const SeriesParams &p)
{
    const int q = p.qmax;
    QSeries sum(q);
    for (long n = 0; n * (n - 1) / 2 <= q; ++n) {
        const QSeries den = q_factorial(n, q) * pochhammer_fin(p.b, n, q);
        sum += cauchy_poly(n, p.a, p.b, q).shifted(static_cast<int>(n * (n - 1) / 2)) * invert(den);
    }
    return single(0, std::move(sum));
}

void require_m(const SeriesParams &p)
{
    if (p.m < 1) {
        throw InvalidArgument("the negative-N sides need m >= 1");
    }
}

ZLaurentSeries lhs_negN(const SeriesParams &p)
{
    require_nonzero(p.a, "a");
    require_m(p);
    const int q = p.qmax;
    const long m = p.m;
    const Rational ratio = p.b / p.a;

    QSeries sum(q);
    for (long l = 0; l * (l - 1) / 2 <= q; ++l) {
        // P_l(b q^m / a, -b) = prod_{i<l} (b q^m / a + b q^i)
        QSeries cauchy = one(q);
        for (long i = 0; i < l; ++i) {
            QSeries f(q);
            if (m <= q) {
                f.coeff(static_cast<int>(m)) += ratio;
            }
            if (i <= q) {
                f.coeff(static_cast<int>(i)) += p.b;
            }
            cauchy *= f;
        }
        const QSeries den = pochhammer_fin(p.b, l, q) * q_factorial(l, q);
        sum += cauchy.shifted(static_cast<int>(l * (l - 1) / 2)) * invert(den);
    }
    Rational lead = 1;
    for (long i = 0; i < m; ++i) {
        lead /= p.a;
    }
    const long shift = m * (m + 1) / 2;
    QSeries pre(q);
    if (shift <= q) {
        pre = pochhammer_inf(-1 / p.a, static_cast<int>(m + 1), q).shifted(static_cast<int>(shift)) * lead
              * invert(pochhammer_inf(1, 1, q));
    }
    return single(-m, pre * sum);
}

ZLaurentSeries rhs_negN(const SeriesParams &p)
{
    require_nonzero(p.a, "a");
    require_m(p);
    const int q = p.qmax;
    const long g = effective_guard(p);
    const long m = p.m;
    ZLaurentSeries out = theta_over_z(p.a, q, -m - g, m + g);
    const QSeries zfree =
        (m <= q ? pochhammer_inf(-p.b / p.a, static_cast<int>(m), q) : one(q)) * invert(pochhammer_inf(p.b, 0, q));
    return single(-m, out[-m] * zfree);
}

void require_euler_m(const SeriesParams &p)
{
    if (p.m < 0) {
        throw InvalidArgument("the Euler sides need m >= 0");
    }
}

// (-(b/a) q^m / z; q)_inf
ZLaurentSeries euler_product(const SeriesParams &p)
{
    require_nonzero(p.a, "a");
    require_euler_m(p);
    ZLaurentSeries out(-p.zmax, 0, p.qmax);
    out.term(0) = one(p.qmax);
    const Rational ratio = p.b / p.a;
    for (long i = 0; p.m + i <= p.qmax; ++i) {
        out.mul_linear(ratio, static_cast<int>(p.m + i), -1);
    }
    return out;
}

// sum_n (b/(az))^n q^{mn + n(n-1)/2} / (q; q)_n
ZLaurentSeries euler_sum(const SeriesParams &p)
{
    require_nonzero(p.a, "a");
    require_euler_m(p);
    ZLaurentSeries out(-p.zmax, 0, p.qmax);
    const Rational ratio = p.b / p.a;
    Rational pw = 1;
    for (long n = 0; n <= p.zmax; ++n) {
        const long shift = p.m * n + n * (n - 1) / 2;
        if (shift <= p.qmax) {
            out.term(-n) = invert(q_factorial(n, p.qmax)).shifted(static_cast<int>(shift)) * pw;
        }
        pw *= ratio;
    }
    return out;
}

VerifyReport from_sides(Identity id, const SeriesParams &p, Side lhs, Side rhs)
{
    const ZLaurentSeries l = expand_side(lhs, p);
    const ZLaurentSeries r = expand_side(rhs, p);
    VerifyReport rep;
    rep.identity = id;
    rep.params = p;
    rep.zmin = l.zmin();
    rep.zmax = l.zmax();
    rep.first_mismatch = compare(l, r);
    rep.pass = !rep.first_mismatch;
    return rep;
}

std::optional<Mismatch> first_difference(const QSeries &l, const QSeries &r, long z, std::string where)
{
    const int n = std::min(l.qmax(), r.qmax());
    for (int k = 0; k <= n; ++k) {
        if (l[k] != r[k]) {
            return Mismatch{z, k, l[k], r[k], std::move(where)};
        }
    }
    return std::nullopt;
}

VerifyReport gauss_relation(const SeriesParams &p)
{
    VerifyReport rep;
    rep.identity = Identity::gauss_relation;
    rep.params = p;
    rep.zmin = 0;
    rep.zmax = p.zmax;
    for (long total = 0; total <= p.zmax && !rep.first_mismatch; ++total) {
        const QSeries inv_total = invert(q_factorial(total, p.qmax));
        for (long i = 0; i <= total && !rep.first_mismatch; ++i) {
            const QSeries lhs = gauss_binomial(total, i, p.qmax) * inv_total;
            const QSeries rhs = invert(q_factorial(i, p.qmax) * q_factorial(total - i, p.qmax));
            rep.first_mismatch = first_difference(lhs, rhs, total,
                                                  "i=" + std::to_string(i) + ",j=" + std::to_string(total - i));
        }
    }
    rep.pass = !rep.first_mismatch;
    return rep;
}

VerifyReport cauchy_forms(const SeriesParams &p)
{
    VerifyReport rep;
    rep.identity = Identity::cauchy_forms;
    rep.params = p;
    rep.zmin = 0;
    rep.zmax = p.zmax;
    for (long n = 0; n <= p.zmax && !rep.first_mismatch; ++n) {
        rep.first_mismatch = first_difference(cauchy_poly(n, p.b, p.a, p.qmax), cauchy_poly_sum(n, p.b, p.a, p.qmax),
                                              n, "n=" + std::to_string(n));
    }
    rep.pass = !rep.first_mismatch;
    return rep;
}

} // namespace

Side parse_side(std::string_view name)
{
    for (const auto &[side, text] : side_names) {
        if (name == text) {
            return side;
        }
    }
    throw InvalidArgument("unknown identity side '" + std::string(name) + "'");
}

std::string side_name(Side side)
{
    for (const auto &[s, text] : side_names) {
        if (s == side) {
            return text;
        }
    }
    return "?";
}

Identity parse_identity(std::string_view name)
{
    for (const auto &[id, text] : identity_names) {
        if (name == text) {
            return id;
        }
    }
    throw InvalidArgument("unknown identity '" + std::string(name) + "'");
}

std::string identity_name(Identity id)
{
    for (const auto &[i, text] : identity_names) {
        if (i == id) {
            return text;
        }
    }
    return "?";
}

ZLaurentSeries expand_side(Side side, const SeriesParams &p)
{
    if (p.qmax < 0 || p.zmax < 0) {
        throw InvalidArgument("qmax and zmax must be nonnegative");
    }
    switch (side) {
    case Side::lhs_1psi1: return lhs_1psi1(p);
    case Side::rhs_1psi1: return rhs_1psi1(p);
    case Side::lhs_qbinomial: return lhs_qbinomial(p);
    case Side::rhs_qbinomial: return rhs_qbinomial(p);
    case Side::lhs_sec3: return lhs_sec3(p);
    case Side::rhs_sec3: return rhs_sec3(p);
    case Side::lhs_negN: return lhs_negN(p);
    case Side::rhs_negN: return rhs_negN(p);
    case Side::euler: return euler_product(p);
    case Side::euler_sum: return euler_sum(p);
    }
    throw InvalidArgument("unknown side");
}

std::optional<Mismatch> compare(const ZLaurentSeries &lhs, const ZLaurentSeries &rhs)
{
    const long lo = std::max(lhs.zmin(), rhs.zmin());
    const long hi = std::min(lhs.zmax(), rhs.zmax());
    for (long e = lo; e <= hi; ++e) {
        if (auto d = first_difference(lhs[e], rhs[e], e, {})) {
            return d;
        }
    }
    return std::nullopt;
}

VerifyReport verify_identity(Identity which, const SeriesParams &p)
{
    switch (which) {
    case Identity::qbinomial: return from_sides(which, p, Side::lhs_qbinomial, Side::rhs_qbinomial);
    case Identity::sec3: return from_sides(which, p, Side::lhs_sec3, Side::rhs_sec3);
    case Identity::psi1: return from_sides(which, p, Side::lhs_1psi1, Side::rhs_1psi1);
    case Identity::negN: return from_sides(which, p, Side::lhs_negN, Side::rhs_negN);
    case Identity::euler: return from_sides(which, p, Side::euler, Side::euler_sum);
    case Identity::gauss_relation: return gauss_relation(p);
    case Identity::cauchy_forms: return cauchy_forms(p);
    }
    throw InvalidArgument("unknown identity");
}

} // namespace algz
