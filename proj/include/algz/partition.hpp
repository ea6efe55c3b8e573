#ifndef ALGZ_PARTITION_HPP
#define ALGZ_PARTITION_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algz
{

using Part = std::int64_t;

// Raised for inputs outside an operation's domain.
class InvalidArgument : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Checked integer arithmetic on parts: overflow throws instead of wrapping.
Part checked_add(Part a, Part b);
Part checked_sub(Part a, Part b);
Part checked_mul(Part a, Part b);

/// A finite weakly decreasing sequence of nonnegative integers.
///
/// Zero entries are significant: (2,1,0) and (2,1) are different partitions
/// with lengths 3 and 2. Values are immutable once constructed.
class Partition
{
public:
    Partition() = default;
    Partition(std::initializer_list<Part> parts);
    explicit Partition(std::vector<Part> parts);

    // Sorts the entries into weakly decreasing order first.
    static Partition from_multiset(std::vector<Part> parts);

    std::span<const Part> parts() const noexcept { return parts_; }
    const std::vector<Part> &vec() const noexcept { return parts_; }

    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Part weight() const;

    // 0-based access; at() is 1-based to match the usual λ_i notation.
    Part operator[](std::size_t i) const noexcept { return parts_[i]; }
    Part at(std::size_t i) const;

    Part largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    Part smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    bool is_distinct() const noexcept;
    std::size_t count_zeros() const noexcept;

    Partition head(std::size_t n) const;
    Partition tail(std::size_t from) const;
    Partition without_zeros() const;
    Partition padded(std::size_t len) const;

    // Adds delta to the first `count` entries.
    Partition shift_prefix(std::size_t count, Part delta) const;

    std::string str() const;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<Part> parts_;
};

std::ostream &operator<<(std::ostream &os, const Partition &p);

/// Side conditions on a partition. Zero parts are admitted only when
/// min_part is 0; a distinct partition then has at most one zero.
struct PartitionPredicate {
    bool distinct = false;
    std::optional<Part> min_part;
    std::optional<Part> max_part;
    std::optional<std::size_t> fixed_length;
    std::optional<std::size_t> max_length;

    bool matches(const Partition &p) const;
    void validate() const;
};

// Counts positive parts ≥ i; zero entries are ignored. l(p') = p_1.
Partition conjugate(const Partition &p);

// Entry i (1-based) becomes p_i + (top - i + 1); p is zero-padded to `count`.
Partition add_staircase(const Partition &p, Part top, std::size_t count);

class StaircaseError : public InvalidArgument
{
public:
    StaircaseError(std::size_t index, const std::string &what) : InvalidArgument(what), index_(index) {}
    // 1-based index of the first entry that would go negative.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Entry i becomes p_i - (top - i + 1). Requires count == l(p).
Partition subtract_staircase(const Partition &p, Part top, std::size_t count);

// The staircase (top, top-1, ..., top-count+1).
Partition staircase(Part top, std::size_t count);

Partition merge(const Partition &p, const Partition &q);

// (entries >= threshold, entries < threshold)
std::pair<Partition, Partition> split_at_threshold(const Partition &p, Part threshold);

// Length of the longest prefix with p_j >= offset + j (1-based j). The
// admissible j form a prefix because the left side decreases and the right
// side increases in j; the bijections use this to separate head from tail.
std::size_t longest_prefix_above(const Partition &p, Part offset);

} // namespace algz

#endif
