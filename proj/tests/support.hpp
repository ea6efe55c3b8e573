#ifndef ALGZ_TESTS_SUPPORT_HPP
#define ALGZ_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "algz/partition.hpp"

namespace testing
{

// Plain recursive generator used as an independent reference: every
// partition with parts in [lo, hi] (lo >= 1), weight <= max_weight.
inline void positive_partitions(std::int64_t max_weight, std::int64_t lo, std::int64_t hi, bool distinct,
                                const std::function<void(const std::vector<std::int64_t> &)> &f)
{
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rem, std::int64_t top) {
        f(cur);
        for (std::int64_t p = std::min(top, rem); p >= lo; --p) {
            cur.push_back(p);
            rec(rem - p, distinct ? p - 1 : p);
            cur.pop_back();
        }
    };
    rec(max_weight, hi);
}

inline std::int64_t sum(const std::vector<std::int64_t> &v)
{
    std::int64_t s = 0;
    for (auto x : v) {
        s += x;
    }
    return s;
}

} // namespace testing

#endif
