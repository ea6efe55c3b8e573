#ifndef ALGZ_VARIANT_HPP
#define ALGZ_VARIANT_HPP

#include <cstddef>

#include "algz/algorithm_z.hpp"
#include "algz/partition.hpp"

namespace algz
{

// Shift parameters of the variant insertion. The counts s and t are the
// lengths of alpha and beta (or l(mu) - l(nu) and l(nu) on the inverse side).
struct VariantParams {
    Part k = 0;
    Part m = 0;
};

/// Variant insertion. Domain: alpha has s distinct parts, each >= m; beta has
/// t parts, each >= k + s + t - 1. Image: mu has s + t distinct parts with
/// mu_s - mu_{s+1} >= m + 1, nu has t distinct parts in [k, k + s + t - 1].
/// |mu| + |nu| = |alpha| + |beta|.
///
/// The degenerate shapes come out of the same loop: with t == 0 mu is alpha,
/// with s == 0 mu_j = beta_j - k - j + 1 and nu = (k+t-1, ..., k).
ZResult varphi(const Partition &alpha, const Partition &beta, VariantParams params);

/// Inverse of varphi; s and t are read off from l(mu) and l(nu). Rejects
/// pairs outside the image.
ZPair varphi_inv(const Partition &mu, const Partition &nu, VariantParams params);

// True iff the last entry of mu is positive. For t >= 1 this is equivalent
// to alpha_s > m and beta_t > k + s + t - 1 on the preimage.
bool strict_image(const Partition &mu);

// Predicates describing the two sides of varphi for a given (s, t).
bool in_varphi_domain(const Partition &alpha, const Partition &beta, VariantParams params);
bool in_varphi_image(const Partition &mu, const Partition &nu, VariantParams params);

struct SplitInsertResult {
    std::size_t n = 0;
    Partition mu;
    Partition nu;
    Partition gamma;
    friend bool operator==(const SplitInsertResult &, const SplitInsertResult &) = default;
};

/// (alpha distinct, beta arbitrary) -> (n; mu, nu, gamma). n is the largest
/// integer with beta_{n - l(alpha)} >= n - 1; the head of beta is inserted
/// with k = m = 0 and the tail becomes gamma (parts <= n - 1). Without such
/// an n: n = l(alpha), mu = alpha, gamma = beta, nu empty.
SplitInsertResult split_insert(const Partition &alpha, const Partition &beta);

ZPair split_insert_inv(std::size_t n, const Partition &mu, const Partition &nu, const Partition &gamma);

} // namespace algz

#endif
