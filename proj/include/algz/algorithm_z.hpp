#ifndef ALGZ_ALGORITHM_Z_HPP
#define ALGZ_ALGORITHM_Z_HPP

#include "algz/partition.hpp"

namespace algz
{

/// Output of an insertion: mu is the insertion partition, nu the record
/// partition that makes the merge reversible.
struct ZResult {
    Partition mu;
    Partition nu;
    friend bool operator==(const ZResult &, const ZResult &) = default;
};

/// A pair of partitions on the insertion side.
struct ZPair {
    Partition alpha;
    Partition beta;
    friend bool operator==(const ZPair &, const ZPair &) = default;
};

/// One insertion step: the enlarged receiver and the record d.
struct InsertStep {
    Partition receiver;
    Part record;
};

/// Inserts a single value v into a receiver of length L. The record d is the
/// smallest value in {0, ..., L} with d == L or v - d <= receiver_{L-d}; the
/// value v - d is placed directly after position L - d and the entries after
/// it are kept unchanged.
InsertStep z_insert_one(const Partition &receiver, Part v);

/// Algorithm Z: inserts beta_1, beta_2, ... into alpha in that order.
/// l(mu) = l(alpha) + l(beta), l(nu) = l(beta), |mu| + |nu| = |alpha| + |beta|.
ZResult z_insert(const Partition &alpha, const Partition &beta);

/// Exact inverse of z_insert. Records are consumed last to first; record d on
/// a partition of length L + 1 removes entry L - d + 1 and returns it plus d.
/// Throws InvalidArgument when a record addresses a position that does not
/// exist or when nu exceeds l(mu) - l(nu).
ZPair z_extract(const Partition &mu, const Partition &nu);

/// The bijection between (alpha distinct with i parts, beta with j parts) and
/// (mu with i + j parts, nu distinct with parts <= i + j - 1). alpha is
/// flattened by the staircase (i-1, ..., 0), inserted into beta, and the
/// staircase is put back onto the record.
ZResult phi(const Partition &alpha, const Partition &beta);

ZPair phi_inv(const Partition &mu, const Partition &nu);

} // namespace algz

#endif
