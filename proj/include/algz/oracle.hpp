#ifndef ALGZ_ORACLE_HPP
#define ALGZ_ORACLE_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "algz/algorithm_z.hpp"
#include "algz/execution.hpp"
#include "algz/partition.hpp"
#include "algz/qseries.hpp"
#include "algz/ramanujan.hpp"
#include "algz/variant.hpp"

namespace algz
{

/// Every partition of weight <= max_weight matching pred, each exactly once,
/// in reverse lexicographic order within each weight. Zero parts are
/// produced only when pred.min_part is 0; a non-distinct predicate then
/// needs a length bound. A max_part below the minimum admits only ().
std::vector<Partition> enum_partitions(Part max_weight, const PartitionPredicate &pred);

// Same, restricted to weight exactly `weight`.
std::vector<Partition> enum_partitions_exact(Part weight, const PartitionPredicate &pred);

enum class Family {
    A,
    B,
    C,
    D,
    pair_z,
    pair_phi,
    pair_varphi,
    pair_split,
    image_z,
    image_phi,
    image_varphi,
    image_split,
};

Family parse_family(std::string_view name);
std::string family_name(Family f);

struct SliceKey {
    Part weight = 0;
    long a_exp = 0;
    long b_exp = 0;
    long z_exp = 0;
    friend bool operator==(const SliceKey &, const SliceKey &) = default;
    friend auto operator<=>(const SliceKey &, const SliceKey &) = default;
};

/// Bounds for one enumeration run.
///
/// A and B range over N in [param_min, param_max]; C and D over m. The pair
/// families use max_len_a and max_len_b as bounds on l(alpha) and l(beta)
/// (s and t for varphi), and their images the matching bounds. b_max caps
/// the b exponent of the quintuple families, which is what keeps families
/// with free zero parts finite; with zero_free_mu the mu of A and C carries
/// no zeros and b_max may be omitted for those two.
struct FamilySpec {
    Family family = Family::A;
    Part max_weight = 0;
    long param_min = 0;
    long param_max = 0;
    std::optional<std::size_t> b_max;
    bool zero_free_mu = false;
    std::size_t max_len_a = 4;
    std::size_t max_len_b = 4;
    Part k_min = 0;
    Part k_max = 0;
    Part m_min = 0;
    Part m_max = 0;

    void validate() const;
};

// The pair families hold ZPair, the images ZResult or SplitInsertResult.
using FamilyValue =
    std::variant<QuintupleA, QuintupleB, QuintupleC, QuintupleD, ZPair, ZResult, SplitInsertResult>;

struct FamilyMember {
    SliceKey key;
    VariantParams params;
    FamilyValue value;
};

std::vector<FamilyMember> enum_family(const FamilySpec &spec, Execution exec = Execution::parallel);

// Slices are merged over all parameter values; see gf_count_by_param.
std::map<SliceKey, long> gf_count(const FamilySpec &spec, Execution exec = Execution::parallel);

// Per (k, m) for pair_varphi and image_varphi; a single entry otherwise.
std::map<std::pair<Part, Part>, std::map<SliceKey, long>> gf_count_by_param(const FamilySpec &spec,
                                                                             Execution exec = Execution::parallel);

/// Sums count * a^aExp * b^bExp per (zExp, weight). With zero_completion
/// every slice with zExp >= 1 or bExp >= 1 is multiplied by 1 / (1 - b),
/// which adds back the zero parts of mu that a zero_free_mu enumeration of
/// A or C leaves out.
std::map<std::pair<long, Part>, Rational> specialize(const std::map<SliceKey, long> &counts, const Rational &a,
                                                     const Rational &b, bool zero_completion);

/// Rebuilds the bilateral left side on z in [-max_abs_n, max_abs_n] and q up
/// to max_weight from enumeration alone: z^N for N >= 0 from A, z^{-m} from
/// C scaled by (-b/a; q)_m. Both families run with zero-free mu and zero
/// completion, so no b cap is involved.
ZLaurentSeries psi1_from_families(Part max_weight, long max_abs_n, const Rational &a, const Rational &b,
                                  Execution exec = Execution::parallel);

enum class MapName { z, phi, varphi, split_insert, pos, neg };

MapName parse_map(std::string_view name);
std::string map_name(MapName m);

// Domain family of a map; pos runs forward_pos over A, neg backward_neg over D.
Family domain_family(MapName m);
Family codomain_family(MapName m);

struct Violation {
    std::string element;
    std::string message;
};

struct SliceMismatch {
    VariantParams params;
    SliceKey key;
    long image = 0;
    long codomain = 0;
};

struct BijectionReport {
    MapName map{};
    FamilySpec spec;
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    std::vector<Violation> violations;
    std::vector<SliceMismatch> slice_mismatches;
    // Findings that are logged but do not fail the run.
    std::vector<std::string> witnesses;
    std::size_t witness_count = 0;
    std::map<std::string, std::size_t> branches;

    bool pass() const { return violations.empty() && slice_mismatches.empty(); }
};

/// Runs the map over every element of spec's domain: forward succeeds, the
/// output satisfies the codomain predicates, statistics are preserved and
/// the inverse returns the input. The forward images are then counted per
/// slice against an independent enumeration of the codomain. Violations are
/// collected, never thrown. spec.family is replaced by domain_family(map).
BijectionReport check_bijection(MapName map, FamilySpec spec, Execution exec = Execution::parallel);

std::string describe(const FamilyMember &member);

} // namespace algz

#endif
