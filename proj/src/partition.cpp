#include "algz/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace algz
{

Part checked_add(Part a, Part b)
{
    Part r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("part arithmetic overflow");
    }
    return r;
}

Part checked_sub(Part a, Part b)
{
    Part r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("part arithmetic overflow");
    }
    return r;
}

Part checked_mul(Part a, Part b)
{
    Part r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("part arithmetic overflow");
    }
    return r;
}

namespace
{

void check_shape(const std::vector<Part> &v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) {
            throw InvalidArgument("negative part at index " + std::to_string(i + 1));
        }
        if (i + 1 < v.size() && v[i] < v[i + 1]) {
            throw InvalidArgument("parts not weakly decreasing at index " + std::to_string(i + 1));
        }
    }
}

} // namespace

Partition::Partition(std::initializer_list<Part> parts) : parts_(parts)
{
    check_shape(parts_);
}

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts))
{
    check_shape(parts_);
}

Partition Partition::from_multiset(std::vector<Part> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>{});
    return Partition(std::move(parts));
}

Part Partition::weight() const
{
    Part w = 0;
    for (auto x : parts_) {
        w = checked_add(w, x);
    }
    return w;
}

Part Partition::at(std::size_t i) const
{
    if (i == 0 || i > parts_.size()) {
        throw std::out_of_range("partition index " + std::to_string(i) + " out of range");
    }
    return parts_[i - 1];
}

bool Partition::is_distinct() const noexcept
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::size_t Partition::count_zeros() const noexcept
{
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), Part{0}));
}

Partition Partition::head(std::size_t n) const
{
    n = std::min(n, parts_.size());
    Partition r;
    r.parts_.assign(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(n));
    return r;
}

Partition Partition::tail(std::size_t from) const
{
    from = std::min(from, parts_.size());
    Partition r;
    r.parts_.assign(parts_.begin() + static_cast<std::ptrdiff_t>(from), parts_.end());
    return r;
}

Partition Partition::without_zeros() const
{
    Partition r;
    r.parts_.assign(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(parts_.size() - count_zeros()));
    return r;
}

Partition Partition::padded(std::size_t len) const
{
    if (len < parts_.size()) {
        throw InvalidArgument("cannot pad partition of length " + std::to_string(parts_.size()) + " to "
                              + std::to_string(len));
    }
    Partition r = *this;
    r.parts_.resize(len, 0);
    return r;
}

Partition Partition::shift_prefix(std::size_t count, Part delta) const
{
    if (count > parts_.size()) {
        throw InvalidArgument("prefix shift longer than partition");
    }
    std::vector<Part> v = parts_;
    for (std::size_t i = 0; i < count; ++i) {
        v[i] = checked_add(v[i], delta);
    }
    return Partition(std::move(v));
}

std::string Partition::str() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Partition &p)
{
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) {
            os << ',';
        }
        os << p[i];
    }
    return os << ')';
}

void PartitionPredicate::validate() const
{
    if (min_part && max_part && *min_part > *max_part) {
        throw InvalidArgument("predicate with min_part > max_part");
    }
    if (min_part && *min_part < 0) {
        throw InvalidArgument("predicate with negative min_part");
    }
}

bool PartitionPredicate::matches(const Partition &p) const
{
    if (distinct && !p.is_distinct()) {
        return false;
    }
    if (fixed_length && p.length() != *fixed_length) {
        return false;
    }
    if (max_length && p.length() > *max_length) {
        return false;
    }
    if (p.empty()) {
        return true;
    }
    const Part lo = min_part.value_or(1);
    if (p.smallest() < lo) {
        return false;
    }
    return !max_part || p.largest() <= *max_part;
}

Partition conjugate(const Partition &p)
{
    const Part top = p.largest();
    std::vector<Part> out(static_cast<std::size_t>(top), 0);
    for (auto x : p.parts()) {
        for (Part i = 0; i < x; ++i) {
            ++out[static_cast<std::size_t>(i)];
        }
    }
    return Partition(std::move(out));
}

Partition add_staircase(const Partition &p, Part top, std::size_t count)
{
    if (p.length() > count) {
        throw InvalidArgument("staircase shorter than partition");
    }
    if (count > 0 && top - static_cast<Part>(count) + 1 < 0) {
        throw InvalidArgument("staircase floor " + std::to_string(top - static_cast<Part>(count) + 1)
                              + " is negative");
    }
    std::vector<Part> v(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        const Part base = i < p.length() ? p[i] : 0;
        v[i] = checked_add(base, top - static_cast<Part>(i));
    }
    return Partition(std::move(v));
}

Partition subtract_staircase(const Partition &p, Part top, std::size_t count)
{
    if (count != p.length()) {
        throw InvalidArgument("staircase length " + std::to_string(count) + " differs from partition length "
                              + std::to_string(p.length()));
    }
    std::vector<Part> v(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        const Part step = top - static_cast<Part>(i);
        if (p[i] < step) {
            throw StaircaseError(i + 1, "staircase subtraction goes negative at index " + std::to_string(i + 1) + " ("
                                            + std::to_string(p[i]) + " < " + std::to_string(step) + ")");
        }
        v[i] = p[i] - step;
    }
    return Partition(std::move(v));
}

Partition staircase(Part top, std::size_t count)
{
    return add_staircase(Partition{}, top, count);
}

Partition merge(const Partition &p, const Partition &q)
{
    std::vector<Part> v;
    v.reserve(p.length() + q.length());
    std::merge(p.parts().begin(), p.parts().end(), q.parts().begin(), q.parts().end(), std::back_inserter(v),
               std::greater<>{});
    return Partition(std::move(v));
}

std::pair<Partition, Partition> split_at_threshold(const Partition &p, Part threshold)
{
    std::size_t cut = 0;
    while (cut < p.length() && p[cut] >= threshold) {
        ++cut;
    }
    return {p.head(cut), p.tail(cut)};
}

std::size_t longest_prefix_above(const Partition &p, Part offset)
{
    std::size_t j = 0;
    while (j < p.length() && p[j] >= offset + static_cast<Part>(j) + 1) {
        ++j;
    }
    return j;
}

} // namespace algz
