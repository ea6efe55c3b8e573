#include "algz/algorithm_z.hpp"

#include <string>
#include <vector>

namespace algz
{

namespace
{

// Works on raw vectors so that a full insertion does not revalidate the
// receiver after every step.
Part insert_value(std::vector<Part> &r, Part v)
{
    const std::size_t len = r.size();
    std::size_t d = 0;
    while (d < len && v - static_cast<Part>(d) > r[len - d - 1]) {
        ++d;
    }
    r.insert(r.begin() + static_cast<std::ptrdiff_t>(len - d), v - static_cast<Part>(d));
    return static_cast<Part>(d);
}

} // namespace

InsertStep z_insert_one(const Partition &receiver, Part v)
{
    if (v < 0) {
        throw InvalidArgument("cannot insert a negative value");
    }
    std::vector<Part> r = receiver.vec();
    const Part d = insert_value(r, v);
    return {Partition(std::move(r)), d};
}

ZResult z_insert(const Partition &alpha, const Partition &beta)
{
    std::vector<Part> r = alpha.vec();
    r.reserve(alpha.length() + beta.length());
    std::vector<Part> records;
    records.reserve(beta.length());
    for (auto v : beta.parts()) {
        records.push_back(insert_value(r, v));
    }
    return {Partition(std::move(r)), Partition(std::move(records))};
}

ZPair z_extract(const Partition &mu, const Partition &nu)
{
    if (nu.length() > mu.length()) {
        throw InvalidArgument("record " + nu.str() + " longer than insertion partition " + mu.str());
    }
    const auto base = static_cast<Part>(mu.length() - nu.length());
    if (nu.largest() > base) {
        throw InvalidArgument("record entry " + std::to_string(nu.largest()) + " exceeds l(mu) - l(nu) = "
                              + std::to_string(base));
    }
    std::vector<Part> r = mu.vec();
    std::vector<Part> beta(nu.length());
    for (std::size_t i = nu.length(); i-- > 0;) {
        const Part d = nu[i];
        const auto len = static_cast<Part>(r.size()) - 1;
        if (d > len) {
            throw InvalidArgument("record " + std::to_string(d) + " addresses a position outside the partition");
        }
        const auto pos = static_cast<std::size_t>(len - d);
        beta[i] = checked_add(r[pos], d);
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return {Partition(std::move(r)), Partition(std::move(beta))};
}

ZResult phi(const Partition &alpha, const Partition &beta)
{
    if (!alpha.is_distinct()) {
        throw InvalidArgument("phi requires distinct parts in alpha, got " + alpha.str());
    }
    const std::size_t i = alpha.length();
    const auto top = static_cast<Part>(i) - 1;
    const Partition flat = subtract_staircase(alpha, top, i);
    auto [mu, record] = z_insert(beta, flat);
    return {std::move(mu), add_staircase(record, top, i)};
}

ZPair phi_inv(const Partition &mu, const Partition &nu)
{
    if (!nu.is_distinct()) {
        throw InvalidArgument("phi_inv requires a distinct record, got " + nu.str());
    }
    if (nu.length() > mu.length()) {
        throw InvalidArgument("record " + nu.str() + " longer than " + mu.str());
    }
    if (!nu.empty() && nu.largest() > static_cast<Part>(mu.length()) - 1) {
        throw InvalidArgument("record entry " + std::to_string(nu.largest()) + " exceeds l(mu) - 1");
    }
    const std::size_t i = nu.length();
    const auto top = static_cast<Part>(i) - 1;
    const Partition flat = subtract_staircase(nu, top, i);
    auto [beta, inserted] = z_extract(mu, flat);
    return {add_staircase(inserted, top, i), std::move(beta)};
}

} // namespace algz
