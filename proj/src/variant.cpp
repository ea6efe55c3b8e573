#include "algz/variant.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace algz
{

namespace
{

void check_params(VariantParams p)
{
    if (p.k < 0 || p.m < 0) {
        throw InvalidArgument("variant parameters k and m must be nonnegative");
    }
}

Part beta_floor(VariantParams p, std::size_t s, std::size_t t)
{
    return p.k + static_cast<Part>(s + t) - 1;
}

} // namespace

bool in_varphi_domain(const Partition &alpha, const Partition &beta, VariantParams params)
{
    if (!alpha.is_distinct()) {
        return false;
    }
    if (!alpha.empty() && alpha.smallest() < params.m) {
        return false;
    }
    return beta.empty() || beta.smallest() >= beta_floor(params, alpha.length(), beta.length());
}

bool in_varphi_image(const Partition &mu, const Partition &nu, VariantParams params)
{
    if (nu.length() > mu.length()) {
        return false;
    }
    const std::size_t t = nu.length();
    const std::size_t s = mu.length() - t;
    if (!mu.is_distinct() || !nu.is_distinct()) {
        return false;
    }
    if (t == 0) {
        return mu.empty() || mu.smallest() >= params.m;
    }
    if (nu.smallest() < params.k || nu.largest() > beta_floor(params, s, t)) {
        return false;
    }
    return s == 0 || mu[s - 1] - mu[s] >= params.m + 1;
}

ZResult varphi(const Partition &alpha, const Partition &beta, VariantParams params)
{
    check_params(params);
    const std::size_t s = alpha.length();
    const std::size_t t = beta.length();
    if (!in_varphi_domain(alpha, beta, params)) {
        throw InvalidArgument("varphi: (" + alpha.str() + ", " + beta.str() + ") outside the domain for k="
                              + std::to_string(params.k) + ", m=" + std::to_string(params.m));
    }

    std::vector<Part> delta;
    delta.reserve(s + t);
    for (auto a : alpha.parts()) {
        delta.push_back(a - params.m + static_cast<Part>(t));
    }
    std::vector<Part> record(t);
    const Part top = beta_floor(params, s, t);
    for (std::size_t j = 0; j < t; ++j) {
        const Part v = beta[j] - params.k - static_cast<Part>(s + j);
        // delta is strictly decreasing, so the entries above v form a prefix.
        std::size_t above = 0;
        while (above < delta.size() && delta[above] > v) {
            ++above;
        }
        for (std::size_t i = above; i < delta.size(); ++i) {
            --delta[i];
        }
        delta.insert(delta.begin() + static_cast<std::ptrdiff_t>(above), v);
        record[j] = top - static_cast<Part>(above);
    }
    for (std::size_t i = 0; i < s; ++i) {
        delta[i] += params.m;
    }
    return {Partition(std::move(delta)), Partition(std::move(record))};
}

ZPair varphi_inv(const Partition &mu, const Partition &nu, VariantParams params)
{
    check_params(params);
    if (!in_varphi_image(mu, nu, params)) {
        throw InvalidArgument("varphi_inv: (" + mu.str() + ", " + nu.str() + ") outside the image for k="
                              + std::to_string(params.k) + ", m=" + std::to_string(params.m));
    }
    const std::size_t t = nu.length();
    const std::size_t s = mu.length() - t;
    const Part top = beta_floor(params, s, t);

    std::vector<Part> delta = mu.vec();
    for (std::size_t i = 0; i < s; ++i) {
        delta[i] -= params.m;
    }
    std::vector<Part> beta(t);
    for (std::size_t i = t; i-- > 0;) {
        const auto pos = static_cast<std::size_t>(top - nu[i]);
        if (pos >= delta.size()) {
            throw InvalidArgument("varphi_inv: record " + std::to_string(nu[i]) + " addresses no entry");
        }
        const Part v = delta[pos];
        delta.erase(delta.begin() + static_cast<std::ptrdiff_t>(pos));
        for (std::size_t j = pos; j < delta.size(); ++j) {
            ++delta[j];
        }
        beta[i] = v + params.k + static_cast<Part>(s + i);
    }
    for (auto &d : delta) {
        d += params.m - static_cast<Part>(t);
    }
    ZPair out{Partition(std::move(delta)), Partition(std::move(beta))};
    if (!in_varphi_domain(out.alpha, out.beta, params)) {
        throw std::logic_error("varphi_inv produced " + out.alpha.str() + ", " + out.beta.str()
                               + " outside the domain");
    }
    return out;
}

bool strict_image(const Partition &mu)
{
    if (mu.empty()) {
        throw InvalidArgument("strict_image needs a nonempty partition");
    }
    return mu.smallest() > 0;
}

SplitInsertResult split_insert(const Partition &alpha, const Partition &beta)
{
    if (!alpha.is_distinct()) {
        throw InvalidArgument("split_insert requires distinct alpha, got " + alpha.str());
    }
    const std::size_t s = alpha.length();
    const std::size_t t = longest_prefix_above(beta, static_cast<Part>(s) - 1);
    auto [mu, nu] = varphi(alpha, beta.head(t), {});
    return {s + t, std::move(mu), std::move(nu), beta.tail(t)};
}

ZPair split_insert_inv(std::size_t n, const Partition &mu, const Partition &nu, const Partition &gamma)
{
    if (mu.length() != n) {
        throw InvalidArgument("split_insert_inv: l(mu) = " + std::to_string(mu.length()) + " but n = "
                              + std::to_string(n));
    }
    if (!gamma.empty() && gamma.largest() > static_cast<Part>(n) - 1) {
        throw InvalidArgument("split_insert_inv: gamma part exceeds n - 1");
    }
    if (nu.empty()) {
        if (!mu.is_distinct()) {
            throw InvalidArgument("split_insert_inv: mu must be distinct");
        }
        return {mu, gamma};
    }
    auto [alpha, head] = varphi_inv(mu, nu, {});
    std::vector<Part> beta = head.vec();
    beta.insert(beta.end(), gamma.parts().begin(), gamma.parts().end());
    return {std::move(alpha), Partition(std::move(beta))};
}

} // namespace algz
