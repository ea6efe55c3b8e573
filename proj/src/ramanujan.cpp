#include "algz/ramanujan.hpp"

#include <stdexcept>

#include "algz/algorithm_z.hpp"
#include "algz/variant.hpp"

namespace algz
{

namespace
{

bool positive(const Partition &p)
{
    return p.empty() || p.smallest() > 0;
}

// Every part <= bound; bound may be -1, which forces p to be empty.
bool bounded(const Partition &p, long bound)
{
    return p.empty() || p.largest() <= bound;
}

long len(const Partition &p)
{
    return static_cast<long>(p.length());
}

template <typename Q>
void require_valid(const Q &q, const char *what)
{
    if (auto v = q.violation()) {
        throw InvalidArgument(std::string(what) + ": " + *v);
    }
}

template <typename Q>
void check_output(const Q &q, const char *what)
{
    if (auto v = q.violation()) {
        throw std::logic_error(std::string(what) + " produced an invalid quintuple: " + *v);
    }
}

// D-tilde: D-bar plus the staircase (n-1, ..., 0), then m + 1 on the first `count` parts.
Partition lift_d(const Partition &d_bar, std::size_t n, std::size_t count, Part m)
{
    return add_staircase(d_bar, static_cast<Part>(n) - 1, n).shift_prefix(count, m + 1);
}

} // namespace

std::optional<std::string> QuintupleA::violation() const
{
    const long top = static_cast<long>(n) - 1;
    if (!alpha.is_distinct() || !positive(alpha)) {
        return "alpha must have distinct positive parts";
    }
    if (!positive(beta)) {
        return "beta must have positive parts";
    }
    if (!gamma.is_distinct()) {
        return "gamma must have distinct parts";
    }
    if (gamma.length() > n) {
        return "l(gamma) exceeds n";
    }
    if (!lambda.is_distinct() || !bounded(lambda, top)) {
        return "lambda must have distinct parts <= n - 1";
    }
    if (!bounded(mu, top)) {
        return "mu must have parts <= n - 1";
    }
    return std::nullopt;
}

std::optional<std::string> QuintupleB::violation() const
{
    if (!A.is_distinct()) {
        return "A must have distinct parts";
    }
    if (!C.is_distinct()) {
        return "C must have distinct parts";
    }
    if (!E.is_distinct() || !positive(E)) {
        return "E must have distinct positive parts";
    }
    return std::nullopt;
}

std::optional<std::string> QuintupleC::violation() const
{
    if (m < 1) {
        return "m must be at least 1";
    }
    const auto mm = static_cast<std::size_t>(m);
    if (!alpha.is_distinct() || !positive(alpha)) {
        return "alpha must have distinct positive parts";
    }
    if (alpha.length() < mm || alpha[alpha.length() - mm] != m) {
        return "alpha must end in the staircase (m, ..., 1)";
    }
    if (!positive(beta)) {
        return "beta must have positive parts";
    }
    if (gamma.length() != l || !gamma.is_distinct()) {
        return "gamma must have l distinct parts";
    }
    const long top = static_cast<long>(l) - 1;
    if (!lambda.is_distinct() || !bounded(lambda, top)) {
        return "lambda must have distinct parts <= l - 1";
    }
    if (!bounded(mu, top)) {
        return "mu must have parts <= l - 1";
    }
    const std::size_t s = l - lambda.length();
    if (lambda.empty() && l > 0 && gamma[l - 1] < m) {
        return "gamma_l must be >= m when lambda is empty";
    }
    if (!lambda.empty() && s > 0 && gamma[s - 1] - gamma[s] < m + 1) {
        return "gamma_s - gamma_{s+1} must be >= m + 1";
    }
    return std::nullopt;
}

std::optional<std::string> QuintupleD::violation() const
{
    if (m < 1) {
        return "m must be at least 1";
    }
    if (!A.is_distinct() || (!A.empty() && A.smallest() < m)) {
        return "A must have distinct parts >= m";
    }
    if (!C.is_distinct()) {
        return "C must have distinct parts";
    }
    if (!E.is_distinct() || !positive(E)) {
        return "E must have distinct positive parts";
    }
    if (len(C) + len(D) - len(E) != -m) {
        return "l(C) + l(D) - l(E) must equal -m";
    }
    return std::nullopt;
}

Statistics statistics(const QuintupleA &x)
{
    require_valid(x, "statistics");
    return {len(x.lambda) - len(x.alpha) - len(x.gamma), len(x.gamma) + len(x.mu),
            static_cast<long>(x.n) - len(x.gamma),
            x.alpha.weight() + x.beta.weight() + x.gamma.weight() + x.lambda.weight() + x.mu.weight()};
}

Statistics statistics(const QuintupleB &y)
{
    require_valid(y, "statistics");
    return {len(y.C) - len(y.A) - len(y.E), len(y.A) + len(y.B), len(y.C) + len(y.D) - len(y.E),
            y.A.weight() + y.B.weight() + y.C.weight() + y.D.weight() + y.E.weight()};
}

Statistics statistics(const QuintupleC &x)
{
    require_valid(x, "statistics");
    return {len(x.lambda) - len(x.alpha) - len(x.gamma), len(x.gamma) + len(x.mu), -static_cast<long>(x.m),
            x.alpha.weight() + x.beta.weight() + x.gamma.weight() + x.lambda.weight() + x.mu.weight()};
}

Statistics statistics(const QuintupleD &y)
{
    require_valid(y, "statistics");
    return {len(y.C) - len(y.A) - len(y.E), len(y.A) + len(y.B), -static_cast<long>(y.m),
            y.A.weight() + y.B.weight() + y.C.weight() + y.D.weight() + y.E.weight()};
}

QuintupleB forward_pos(const QuintupleA &x)
{
    require_valid(x, "forward_pos");
    const auto N = static_cast<Part>(x.n - x.gamma.length());
    const VariantParams shift{N, 0};

    // Step 1: the parts of lambda that are >= N are extracted from gamma.
    auto [lambda_hi, F] = split_at_threshold(x.lambda, N);
    auto [A, b_bar] = varphi_inv(x.gamma, lambda_hi, shift);
    Partition B = merge(b_bar, x.mu);

    // Step 2: the head of beta is inserted into alpha, its tail is conjugated.
    const std::size_t s = x.alpha.length();
    const std::size_t t = longest_prefix_above(x.beta, N + static_cast<Part>(s));
    const std::size_t l = s + t;
    const Partition d_bar = conjugate(x.beta.tail(t)).padded(static_cast<std::size_t>(N) + l);
    auto [E, f_bar] = varphi(x.alpha, x.beta.head(t), shift);
    if (!E.empty() && !strict_image(E)) {
        throw std::logic_error("forward_pos: E = " + E.str() + " is not positive");
    }
    const Partition c_bar = merge(F, f_bar);

    auto [C, D] = phi_inv(d_bar, c_bar);
    QuintupleB y{std::move(A), std::move(B), std::move(C), std::move(D), std::move(E)};
    check_output(y, "forward_pos");
    return y;
}

QuintupleA backward_pos(const QuintupleB &y)
{
    require_valid(y, "backward_pos");
    const long z = len(y.C) + len(y.D) - len(y.E);
    if (z < 0) {
        throw InvalidArgument("backward_pos: l(C) + l(D) - l(E) = " + std::to_string(z) + " is negative");
    }
    const auto N = static_cast<Part>(z);
    const VariantParams shift{N, 0};

    const std::size_t s = y.A.length();
    const std::size_t t = longest_prefix_above(y.B, N + static_cast<Part>(s) - 1);
    auto [gamma, lambda_hi] = varphi(y.A, y.B.head(t), shift);
    Partition mu = y.B.tail(t);

    auto [d_bar, c_bar] = phi(y.C, y.D);
    auto [f_bar, F] = split_at_threshold(c_bar, N);
    auto [alpha, beta_head] = varphi_inv(y.E, f_bar, shift);

    QuintupleA x;
    x.n = static_cast<std::size_t>(N) + gamma.length();
    x.alpha = std::move(alpha);
    x.beta = merge(beta_head, conjugate(d_bar));
    x.gamma = std::move(gamma);
    x.lambda = merge(lambda_hi, F);
    x.mu = std::move(mu);
    check_output(x, "backward_pos");
    return x;
}

QuintupleC backward_neg(const QuintupleD &y)
{
    require_valid(y, "backward_neg");
    const Part m = y.m;

    // Step 1: split B by the maximal rule and insert its head into A.
    const std::size_t s = y.A.length();
    const std::size_t t = longest_prefix_above(y.B, static_cast<Part>(s) - 1);
    auto [gamma, lambda] = varphi(y.A, y.B.head(t), {0, m});
    Partition mu = y.B.tail(t);

    // Step 2.
    auto [d_bar, c_bar] = phi(y.C, y.D);
    const std::size_t n = y.C.length() + y.D.length();
    const auto nm = n + static_cast<std::size_t>(m);
    if (y.E.length() != nm) {
        throw InvalidArgument("backward_neg: l(E) must equal n + m");
    }

    // Step 3.
    const Partition e_bar = conjugate(subtract_staircase(y.E, static_cast<Part>(nm), nm));
    const Partition c_tilde = c_bar.shift_prefix(c_bar.length(), m + 1);
    const Partition d_tilde = lift_d(d_bar, n, y.D.length(), m);
    auto [alpha_head, beta_head] = varphi_inv(d_tilde, c_tilde, {m + 1, m + 1});

    QuintupleC x;
    x.m = m;
    x.l = gamma.length();
    x.alpha = merge(alpha_head, staircase(m, static_cast<std::size_t>(m)));
    x.beta = merge(beta_head, e_bar);
    x.gamma = std::move(gamma);
    x.lambda = std::move(lambda);
    x.mu = std::move(mu);
    check_output(x, "backward_neg");
    return x;
}

QuintupleD forward_neg(const QuintupleC &x)
{
    require_valid(x, "forward_neg");
    const Part m = x.m;

    const Partition alpha_head = x.alpha.head(x.alpha.length() - static_cast<std::size_t>(m));
    const std::size_t s = alpha_head.length();
    const std::size_t t = longest_prefix_above(x.beta, static_cast<Part>(s) + m);
    const std::size_t n = s + t;
    const auto nm = n + static_cast<std::size_t>(m);

    auto [d_tilde, c_tilde] = varphi(alpha_head, x.beta.head(t), {m + 1, m + 1});
    const Partition c_bar = c_tilde.shift_prefix(c_tilde.length(), -(m + 1));
    const Partition d_bar =
        subtract_staircase(d_tilde.shift_prefix(s, -(m + 1)), static_cast<Part>(n) - 1, n);
    auto [C, D] = phi_inv(d_bar, c_bar);

    const Partition e_cols = conjugate(x.beta.tail(t));
    if (e_cols.length() > nm) {
        throw std::logic_error("forward_neg: beta tail does not fit n + m columns");
    }
    Partition E = add_staircase(e_cols, static_cast<Part>(nm), nm);

    auto [A, b_head] = varphi_inv(x.gamma, x.lambda, {0, m});

    QuintupleD y;
    y.m = m;
    y.A = std::move(A);
    y.B = merge(b_head, x.mu);
    y.C = std::move(C);
    y.D = std::move(D);
    y.E = std::move(E);
    check_output(y, "forward_neg");
    return y;
}

} // namespace algz
