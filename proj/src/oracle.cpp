#include "algz/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace algz
{

namespace
{

constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

// Generator state derived from a PartitionPredicate.
struct Shape {
    bool distinct = false;
    bool zeros = false;
    Part lo = 1;
    std::optional<Part> hi;
    std::size_t max_len = unbounded;
    std::optional<std::size_t> fixed;
};

Shape shape_of(const PartitionPredicate &pred)
{
    Shape g;
    g.distinct = pred.distinct;
    const Part lo = pred.min_part.value_or(1);
    if (lo < 0) {
        throw InvalidArgument("enumeration with a negative minimum part");
    }
    g.zeros = lo == 0 && (!pred.max_part || *pred.max_part >= 0);
    g.lo = std::max<Part>(lo, 1);
    g.hi = pred.max_part;
    if (pred.max_length) {
        g.max_len = *pred.max_length;
    }
    if (pred.fixed_length) {
        g.fixed = pred.fixed_length;
        g.max_len = std::min(g.max_len, *pred.fixed_length);
    }
    if (g.zeros && !g.distinct && g.max_len == unbounded) {
        throw InvalidArgument("zero parts without a length bound give infinitely many partitions");
    }
    return g;
}

template <typename F>
void emit(const Shape &g, std::vector<Part> &cur, F &f)
{
    std::size_t z_lo = 0;
    std::size_t z_hi = 0;
    if (g.zeros) {
        z_hi = g.distinct ? std::min<std::size_t>(1, g.max_len - cur.size()) : g.max_len - cur.size();
    }
    if (g.fixed) {
        if (*g.fixed < cur.size()) {
            return;
        }
        z_lo = *g.fixed - cur.size();
        if (z_lo > z_hi) {
            return;
        }
        z_hi = z_lo;
    }
    for (std::size_t z = 0; z < z_lo; ++z) {
        cur.push_back(0);
    }
    for (std::size_t z = z_lo;; ++z) {
        f(Partition(cur));
        if (z == z_hi) {
            break;
        }
        cur.push_back(0);
    }
    cur.resize(cur.size() - z_hi);
}

template <typename F>
void grow(const Shape &g, std::vector<Part> &cur, Part remaining, Part hi, bool exact, F &f)
{
    if (!exact || remaining == 0) {
        emit(g, cur, f);
    }
    if (cur.size() >= g.max_len) {
        return;
    }
    for (Part p = std::min(hi, remaining); p >= g.lo; --p) {
        cur.push_back(p);
        grow(g, cur, remaining - p, g.distinct ? p - 1 : p, exact, f);
        cur.pop_back();
    }
}

template <typename F>
void each(Part budget, bool exact, const PartitionPredicate &pred, F &&f)
{
    if (budget < 0) {
        return;
    }
    const Shape g = shape_of(pred);
    std::vector<Part> cur;
    grow(g, cur, budget, g.hi.value_or(budget), exact, f);
}

PartitionPredicate pred(bool distinct, Part min_part, std::optional<Part> max_part = std::nullopt,
                        std::optional<std::size_t> max_length = std::nullopt,
                        std::optional<std::size_t> fixed_length = std::nullopt)
{
    PartitionPredicate p;
    p.distinct = distinct;
    p.min_part = min_part;
    p.max_part = max_part;
    p.max_length = max_length;
    p.fixed_length = fixed_length;
    return p;
}

long len(const Partition &p)
{
    return static_cast<long>(p.length());
}

std::optional<std::size_t> remaining_length(const std::optional<std::size_t> &cap, std::size_t used)
{
    if (!cap) {
        return std::nullopt;
    }
    return *cap >= used ? *cap - used : 0;
}

struct Task {
    VariantParams params;
    long param = 0;
    Part weight = 0;
};

using Sink = std::function<void(FamilyMember &&)>;

bool is_quintuple(Family f)
{
    return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

bool is_varphi(Family f)
{
    return f == Family::pair_varphi || f == Family::image_varphi;
}

std::vector<Task> tasks_for(const FamilySpec &spec)
{
    std::vector<Task> tasks;
    for (Part w = 0; w <= spec.max_weight; ++w) {
        if (is_quintuple(spec.family)) {
            for (long p = spec.param_min; p <= spec.param_max; ++p) {
                tasks.push_back({{}, p, w});
            }
        } else if (is_varphi(spec.family)) {
            for (Part k = spec.k_min; k <= spec.k_max; ++k) {
                for (Part m = spec.m_min; m <= spec.m_max; ++m) {
                    tasks.push_back({{k, m}, 0, w});
                }
            }
        } else {
            tasks.push_back({{}, 0, w});
        }
    }
    return tasks;
}

void enum_A(const FamilySpec &spec, long N, Part w, const Sink &out)
{
    each(w, false, pred(true, 0), [&](const Partition &gamma) {
        if (spec.b_max && gamma.length() > *spec.b_max) {
            return;
        }
        const long n = N + len(gamma);
        const Part r1 = w - gamma.weight();
        each(r1, false, pred(true, 0, n - 1), [&](const Partition &lambda) {
            const Part r2 = r1 - lambda.weight();
            const auto mu_pred =
                pred(false, spec.zero_free_mu ? 1 : 0, n - 1, remaining_length(spec.b_max, gamma.length()));
            each(r2, false, mu_pred, [&](const Partition &mu) {
                const Part r3 = r2 - mu.weight();
                each(r3, false, pred(true, 1), [&](const Partition &alpha) {
                    each(r3 - alpha.weight(), true, pred(false, 1), [&](const Partition &beta) {
                        QuintupleA x{static_cast<std::size_t>(n), alpha, beta, gamma, lambda, mu};
                        const Statistics st = statistics(x);
                        out({{st.weight, st.a_exp, st.b_exp, st.z_exp}, {}, std::move(x)});
                    });
                });
            });
        });
    });
}

// B for m = 0, D for m >= 1; the z exponent is N = -m in the latter case.
void enum_BD(const FamilySpec &spec, long N, Part m, Part w, const Sink &out)
{
    each(w, false, pred(true, m, std::nullopt, spec.b_max), [&](const Partition &A) {
        const Part r1 = w - A.weight();
        each(r1, false, pred(false, 0, std::nullopt, remaining_length(spec.b_max, A.length())),
             [&](const Partition &B) {
                 const Part r2 = r1 - B.weight();
                 each(r2, false, pred(true, 0), [&](const Partition &C) {
                     const Part r3 = r2 - C.weight();
                     each(r3, false, pred(true, 1), [&](const Partition &E) {
                         const long lD = N + len(E) - len(C);
                         if (lD < 0) {
                             return;
                         }
                         const auto d_pred =
                             pred(false, 0, std::nullopt, std::nullopt, static_cast<std::size_t>(lD));
                         each(r3 - E.weight(), true, d_pred, [&](const Partition &D) {
                             if (m == 0) {
                                 QuintupleB y{A, B, C, D, E};
                                 const Statistics st = statistics(y);
                                 out({{st.weight, st.a_exp, st.b_exp, st.z_exp}, {}, std::move(y)});
                             } else {
                                 QuintupleD y{m, A, B, C, D, E};
                                 const Statistics st = statistics(y);
                                 out({{st.weight, st.a_exp, st.b_exp, st.z_exp}, {}, std::move(y)});
                             }
                         });
                     });
                 });
             });
    });
}

bool gamma_condition(const Partition &gamma, const Partition &lambda, Part m)
{
    const std::size_t l = gamma.length();
    if (lambda.empty()) {
        return l == 0 || gamma[l - 1] >= m;
    }
    const std::size_t s = l - lambda.length();
    return s == 0 || gamma[s - 1] - gamma[s] >= m + 1;
}

void enum_C(const FamilySpec &spec, Part m, Part w, const Sink &out)
{
    const Partition tail = staircase(m, static_cast<std::size_t>(m));
    const Part r0 = w - tail.weight();
    each(r0, false, pred(true, 0), [&](const Partition &gamma) {
        const std::size_t l = gamma.length();
        if (spec.b_max && l > *spec.b_max) {
            return;
        }
        const Part top = static_cast<Part>(l) - 1;
        const Part r1 = r0 - gamma.weight();
        each(r1, false, pred(true, 0, top), [&](const Partition &lambda) {
            if (!gamma_condition(gamma, lambda, m)) {
                return;
            }
            const Part r2 = r1 - lambda.weight();
            const auto mu_pred = pred(false, spec.zero_free_mu ? 1 : 0, top, remaining_length(spec.b_max, l));
            each(r2, false, mu_pred, [&](const Partition &mu) {
                const Part r3 = r2 - mu.weight();
                each(r3, false, pred(true, m + 1), [&](const Partition &head) {
                    const Partition alpha = merge(head, tail);
                    each(r3 - head.weight(), true, pred(false, 1), [&](const Partition &beta) {
                        QuintupleC x{m, l, alpha, beta, gamma, lambda, mu};
                        const Statistics st = statistics(x);
                        out({{st.weight, st.a_exp, st.b_exp, st.z_exp}, {}, std::move(x)});
                    });
                });
            });
        });
    });
}

void enum_pair(const FamilySpec &spec, bool distinct_alpha, Part w, const Sink &out)
{
    each(w, false, pred(distinct_alpha, 0, std::nullopt, spec.max_len_a), [&](const Partition &alpha) {
        each(w - alpha.weight(), true, pred(false, 0, std::nullopt, spec.max_len_b), [&](const Partition &beta) {
            out({{w, len(alpha), len(beta), 0}, {}, ZPair{alpha, beta}});
        });
    });
}

void enum_pair_varphi(const FamilySpec &spec, VariantParams p, Part w, const Sink &out)
{
    for (std::size_t s = 0; s <= spec.max_len_a; ++s) {
        for (std::size_t t = 0; t <= spec.max_len_b; ++t) {
            const Part floor = std::max<Part>(0, p.k + static_cast<Part>(s + t) - 1);
            each(w, false, pred(true, p.m, std::nullopt, std::nullopt, s), [&](const Partition &alpha) {
                each(w - alpha.weight(), true, pred(false, floor, std::nullopt, std::nullopt, t),
                     [&](const Partition &beta) {
                         out({{w, static_cast<long>(s), static_cast<long>(t), 0}, p, ZPair{alpha, beta}});
                     });
            });
        }
    }
}

void enum_image_z(const FamilySpec &spec, Part w, const Sink &out)
{
    for (std::size_t r = 0; r <= spec.max_len_b; ++r) {
        for (std::size_t i = 0; i <= spec.max_len_a; ++i) {
            const std::size_t s = i + r;
            each(w, false, pred(false, 0, static_cast<Part>(i), std::nullopt, r), [&](const Partition &nu) {
                each(w - nu.weight(), true, pred(false, 0, std::nullopt, std::nullopt, s),
                     [&](const Partition &mu) {
                         out({{w, static_cast<long>(i), static_cast<long>(r), 0}, {}, ZResult{mu, nu}});
                     });
            });
        }
    }
}

void enum_image_phi(const FamilySpec &spec, Part w, const Sink &out)
{
    for (std::size_t i = 0; i <= spec.max_len_a; ++i) {
        for (std::size_t j = 0; j <= spec.max_len_b; ++j) {
            const auto top = static_cast<Part>(i + j) - 1;
            each(w, false, pred(true, 0, top, std::nullopt, i), [&](const Partition &nu) {
                each(w - nu.weight(), true, pred(false, 0, std::nullopt, std::nullopt, i + j),
                     [&](const Partition &mu) {
                         out({{w, static_cast<long>(i), static_cast<long>(j), 0}, {}, ZResult{mu, nu}});
                     });
            });
        }
    }
}

// (mu, nu) with t = l(nu) distinct records in [k, k+s+t-1] and the gap after mu_s.
bool varphi_codomain(const Partition &mu, const Partition &nu, std::size_t s, VariantParams p)
{
    const std::size_t t = nu.length();
    if (mu.length() != s + t || !mu.is_distinct() || !nu.is_distinct()) {
        return false;
    }
    if (t == 0) {
        return mu.empty() || mu.smallest() >= p.m;
    }
    for (std::size_t i = 1; i <= t; ++i) {
        const Part lo = p.k + static_cast<Part>(t - i);
        const Part hi = p.k + static_cast<Part>(s + t - i);
        if (nu.at(i) < lo || nu.at(i) > hi) {
            return false;
        }
    }
    return s == 0 || mu.at(s) - mu.at(s + 1) >= p.m + 1;
}

void enum_image_varphi(const FamilySpec &spec, VariantParams p, Part w, const Sink &out)
{
    for (std::size_t s = 0; s <= spec.max_len_a; ++s) {
        for (std::size_t t = 0; t <= spec.max_len_b; ++t) {
            const auto top = p.k + static_cast<Part>(s + t) - 1;
            const auto nu_pred = t == 0 ? pred(true, 0, std::nullopt, std::nullopt, 0)
                                        : pred(true, p.k, top, std::nullopt, t);
            each(w, false, nu_pred, [&](const Partition &nu) {
                each(w - nu.weight(), true, pred(true, 0, std::nullopt, std::nullopt, s + t),
                     [&](const Partition &mu) {
                         if (varphi_codomain(mu, nu, s, p)) {
                             out({{w, static_cast<long>(s), static_cast<long>(t), 0}, p, ZResult{mu, nu}});
                         }
                     });
            });
        }
    }
}

void enum_image_split(const FamilySpec &spec, Part w, const Sink &out)
{
    for (std::size_t n = 0; n <= spec.max_len_a + spec.max_len_b; ++n) {
        const auto top = static_cast<Part>(n) - 1;
        for (std::size_t r = 0; r <= std::min(n, spec.max_len_b); ++r) {
            if (n - r > spec.max_len_a) {
                continue;
            }
            each(w, false, pred(true, 0, top, std::nullopt, r), [&](const Partition &nu) {
                const Part r1 = w - nu.weight();
                each(r1, false, pred(true, 0, std::nullopt, std::nullopt, n), [&](const Partition &mu) {
                    each(r1 - mu.weight(), true, pred(false, 0, top, spec.max_len_b - r), [&](const Partition &gamma) {
                        const SliceKey key{w, static_cast<long>(n - r), static_cast<long>(r + gamma.length()), 0};
                        out({key, {}, SplitInsertResult{n, mu, nu, gamma}});
                    });
                });
            });
        }
    }
}

void run_task(const FamilySpec &spec, const Task &task, const Sink &out)
{
    switch (spec.family) {
    case Family::A: enum_A(spec, task.param, task.weight, out); break;
    case Family::B: enum_BD(spec, task.param, 0, task.weight, out); break;
    case Family::C: enum_C(spec, task.param, task.weight, out); break;
    case Family::D: enum_BD(spec, -task.param, task.param, task.weight, out); break;
    case Family::pair_z: enum_pair(spec, false, task.weight, out); break;
    case Family::pair_phi: enum_pair(spec, true, task.weight, out); break;
    case Family::pair_split: enum_pair(spec, true, task.weight, out); break;
    case Family::pair_varphi: enum_pair_varphi(spec, task.params, task.weight, out); break;
    case Family::image_z: enum_image_z(spec, task.weight, out); break;
    case Family::image_phi: enum_image_phi(spec, task.weight, out); break;
    case Family::image_varphi: enum_image_varphi(spec, task.params, task.weight, out); break;
    case Family::image_split: enum_image_split(spec, task.weight, out); break;
    }
}

// Runs body(i) for every task index. Exceptions are captured per task and the
// first one, in task order, is rethrown after the loop.
template <typename Body>
void for_tasks(std::size_t count, Execution exec, Body &&body)
{
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<long>(count);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < n; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    } else {
        for (long i = 0; i < n; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

using ParamKey = std::pair<Part, Part>;

ParamKey param_key(VariantParams p)
{
    return {p.k, p.m};
}

using Counts = std::map<ParamKey, std::map<SliceKey, long>>;

void add_counts(Counts &into, const Counts &from)
{
    for (const auto &[p, slices] : from) {
        auto &dst = into[p];
        for (const auto &[k, c] : slices) {
            dst[k] += c;
        }
    }
}

Counts count_family(const FamilySpec &spec, Execution exec)
{
    const std::vector<Task> tasks = tasks_for(spec);
    std::vector<Counts> partial(tasks.size());
    for_tasks(tasks.size(), exec, [&](std::size_t i) {
        run_task(spec, tasks[i], [&](FamilyMember &&m) { ++partial[i][param_key(m.params)][m.key]; });
    });
    Counts total;
    for (const auto &c : partial) {
        add_counts(total, c);
    }
    return total;
}

// Per-element verdict of check_bijection.
struct Outcome {
    std::optional<std::string> problem;
    SliceKey image;
    std::string branch;
    std::optional<std::string> witness;
};

SliceKey key_of(const Statistics &st)
{
    return {st.weight, st.a_exp, st.b_exp, st.z_exp};
}

Part pair_weight(const Partition &x, const Partition &y)
{
    return checked_add(x.weight(), y.weight());
}

Outcome check_z(const ZPair &x)
{
    Outcome o;
    const ZResult r = z_insert(x.alpha, x.beta);
    o.image = {pair_weight(r.mu, r.nu), len(r.mu) - len(r.nu), len(r.nu), 0};
    if (r.mu.length() != x.alpha.length() + x.beta.length() || r.nu.length() != x.beta.length()) {
        o.problem = "lengths of (mu, nu) do not match";
    } else if (!r.nu.empty() && r.nu.largest() > len(x.alpha)) {
        o.problem = "record entry exceeds l(alpha)";
    } else if (o.image.weight != pair_weight(x.alpha, x.beta)) {
        o.problem = "weight not conserved";
    } else if (!(z_extract(r.mu, r.nu) == x)) {
        o.problem = "z_extract does not invert z_insert";
    }
    return o;
}

Outcome check_phi(const ZPair &x)
{
    Outcome o;
    const ZResult r = phi(x.alpha, x.beta);
    o.image = {pair_weight(r.mu, r.nu), len(r.nu), len(r.mu) - len(r.nu), 0};
    if (r.mu.length() != x.alpha.length() + x.beta.length() || r.nu.length() != x.alpha.length()) {
        o.problem = "lengths of (mu, nu) do not match";
    } else if (!r.nu.is_distinct() || (!r.nu.empty() && r.nu.largest() > len(r.mu) - 1)) {
        o.problem = "record must be distinct with entries <= l(mu) - 1";
    } else if (o.image.weight != pair_weight(x.alpha, x.beta)) {
        o.problem = "weight not conserved";
    } else if (!(phi_inv(r.mu, r.nu) == x)) {
        o.problem = "phi_inv does not invert phi";
    }
    return o;
}

Outcome check_varphi(const ZPair &x, VariantParams p)
{
    Outcome o;
    const std::size_t s = x.alpha.length();
    const std::size_t t = x.beta.length();
    o.branch = t == 0 ? "t=0" : (s == 0 ? "s=0" : "s,t>0");
    const ZResult r = varphi(x.alpha, x.beta, p);
    o.image = {pair_weight(r.mu, r.nu), static_cast<long>(s), static_cast<long>(t), 0};
    if (!varphi_codomain(r.mu, r.nu, s, p)) {
        o.problem = "output outside the record window or gap condition";
    } else if (!in_varphi_image(r.mu, r.nu, p)) {
        o.problem = "in_varphi_image rejects the output";
    } else if (o.image.weight != pair_weight(x.alpha, x.beta)) {
        o.problem = "weight not conserved";
    } else if (!(varphi_inv(r.mu, r.nu, p) == x)) {
        o.problem = "varphi_inv does not invert varphi";
    }
    return o;
}

Outcome check_split(const ZPair &x)
{
    Outcome o;
    const SplitInsertResult r = split_insert(x.alpha, x.beta);
    o.branch = r.nu.empty() ? "no-n" : "n";
    const long n = static_cast<long>(r.n);
    o.image = {r.mu.weight() + r.nu.weight() + r.gamma.weight(), n - len(r.nu), len(r.nu) + len(r.gamma), 0};
    if (r.mu.length() != r.n || !r.mu.is_distinct()) {
        o.problem = "mu must have n distinct parts";
    } else if (!r.nu.is_distinct() || (!r.nu.empty() && r.nu.largest() > n - 1) || r.nu.length() > r.n) {
        o.problem = "nu must be distinct with entries <= n - 1";
    } else if (!r.gamma.empty() && r.gamma.largest() > n - 1) {
        o.problem = "gamma parts must be <= n - 1";
    } else if (o.image.weight != pair_weight(x.alpha, x.beta)) {
        o.problem = "weight not conserved";
    } else if (!(split_insert_inv(r.n, r.mu, r.nu, r.gamma) == x)) {
        o.problem = "split_insert_inv does not invert split_insert";
    }
    return o;
}

template <typename In, typename Out, typename Fwd, typename Bwd>
Outcome check_quintuple(const In &x, Fwd forward, Bwd backward)
{
    Outcome o;
    const Out y = forward(x);
    if (auto v = y.violation()) {
        o.problem = "image outside the codomain: " + *v;
        return o;
    }
    const Statistics st = statistics(y);
    o.image = key_of(st);
    if (!(st == statistics(x))) {
        o.problem = "statistics not preserved";
    } else if (!(backward(y) == x)) {
        o.problem = "inverse does not return the input";
    }
    return o;
}

Outcome check_member(MapName map, const FamilyMember &m)
{
    switch (map) {
    case MapName::z: return check_z(std::get<ZPair>(m.value));
    case MapName::phi: return check_phi(std::get<ZPair>(m.value));
    case MapName::varphi: return check_varphi(std::get<ZPair>(m.value), m.params);
    case MapName::split_insert: return check_split(std::get<ZPair>(m.value));
    case MapName::pos:
        return check_quintuple<QuintupleA, QuintupleB>(std::get<QuintupleA>(m.value), forward_pos, backward_pos);
    case MapName::neg: {
        Outcome o = check_quintuple<QuintupleD, QuintupleC>(std::get<QuintupleD>(m.value), backward_neg,
                                                            forward_neg);
        if (!o.problem) {
            const QuintupleC x = backward_neg(std::get<QuintupleD>(m.value));
            if (!x.gamma.empty() && x.gamma.smallest() == 0) {
                o.witness = "gamma with a zero part: " + describe({o.image, {}, x}) + " from " + describe(m);
            }
        }
        return o;
    }
    }
    throw std::logic_error("unknown map");
}

struct TaskReport {
    std::size_t domain = 0;
    std::vector<Violation> violations;
    Counts image;
    std::map<std::string, std::size_t> branches;
    std::vector<std::string> witnesses;
    std::size_t witness_count = 0;
};

constexpr std::size_t witness_limit = 20;

std::string join(const Partition &p)
{
    return p.str();
}

} // namespace

std::vector<Partition> enum_partitions(Part max_weight, const PartitionPredicate &pred)
{
    std::vector<Partition> out;
    for (Part w = 0; w <= max_weight; ++w) {
        each(w, true, pred, [&](const Partition &p) { out.push_back(p); });
    }
    return out;
}

std::vector<Partition> enum_partitions_exact(Part weight, const PartitionPredicate &pred)
{
    std::vector<Partition> out;
    each(weight, true, pred, [&](const Partition &p) { out.push_back(p); });
    return out;
}

namespace
{

constexpr std::array<std::pair<Family, const char *>, 12> family_names{{
    {Family::A, "A"},
    {Family::B, "B"},
    {Family::C, "C"},
    {Family::D, "D"},
    {Family::pair_z, "pair-Z"},
    {Family::pair_phi, "pair-phi"},
    {Family::pair_varphi, "pair-varphi"},
    {Family::pair_split, "pair-split"},
    {Family::image_z, "image-Z"},
    {Family::image_phi, "image-phi"},
    {Family::image_varphi, "image-varphi"},
    {Family::image_split, "image-split"},
}};

constexpr std::array<std::pair<MapName, const char *>, 6> map_names{{
    {MapName::z, "z"},
    {MapName::phi, "phi"},
    {MapName::varphi, "varphi"},
    {MapName::split_insert, "split-insert"},
    {MapName::pos, "pos"},
    {MapName::neg, "neg"},
}};

} // namespace

Family parse_family(std::string_view name)
{
    if (name == "pair-z") {
        return Family::pair_z;
    }
    if (name == "image-z") {
        return Family::image_z;
    }
    for (const auto &[f, text] : family_names) {
        if (name == text) {
            return f;
        }
    }
    throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

std::string family_name(Family f)
{
    for (const auto &[x, text] : family_names) {
        if (x == f) {
            return text;
        }
    }
    return "?";
}

MapName parse_map(std::string_view name)
{
    if (name == "split_insert") {
        return MapName::split_insert;
    }
    for (const auto &[m, text] : map_names) {
        if (name == text) {
            return m;
        }
    }
    throw InvalidArgument("unknown map '" + std::string(name) + "'");
}

std::string map_name(MapName m)
{
    for (const auto &[x, text] : map_names) {
        if (x == m) {
            return text;
        }
    }
    return "?";
}

Family domain_family(MapName m)
{
    switch (m) {
    case MapName::z: return Family::pair_z;
    case MapName::phi: return Family::pair_phi;
    case MapName::varphi: return Family::pair_varphi;
    case MapName::split_insert: return Family::pair_split;
    case MapName::pos: return Family::A;
    case MapName::neg: return Family::D;
    }
    throw std::logic_error("unknown map");
}

Family codomain_family(MapName m)
{
    switch (m) {
    case MapName::z: return Family::image_z;
    case MapName::phi: return Family::image_phi;
    case MapName::varphi: return Family::image_varphi;
    case MapName::split_insert: return Family::image_split;
    case MapName::pos: return Family::B;
    case MapName::neg: return Family::C;
    }
    throw std::logic_error("unknown map");
}

void FamilySpec::validate() const
{
    if (max_weight < 0) {
        throw InvalidArgument("max_weight must be nonnegative");
    }
    if (param_min > param_max) {
        throw InvalidArgument("empty parameter range");
    }
    switch (family) {
    case Family::A:
    case Family::B:
        if (param_min < 0) {
            throw InvalidArgument("N must be nonnegative for families A and B");
        }
        break;
    case Family::C:
    case Family::D:
        if (param_min < 1) {
            throw InvalidArgument("m must be at least 1 for families C and D");
        }
        break;
    default: break;
    }
    const bool needs_b_max = family == Family::B || family == Family::D
                             || ((family == Family::A || family == Family::C) && !zero_free_mu);
    if (needs_b_max && !b_max) {
        throw InvalidArgument("family " + family_name(family) + " has free zero parts and needs b_max");
    }
    if (is_varphi(family) && (k_min < 0 || m_min < 0 || k_min > k_max || m_min > m_max)) {
        throw InvalidArgument("varphi parameter ranges must be nonempty and nonnegative");
    }
}

std::vector<FamilyMember> enum_family(const FamilySpec &spec, Execution exec)
{
    spec.validate();
    const std::vector<Task> tasks = tasks_for(spec);
    std::vector<std::vector<FamilyMember>> partial(tasks.size());
    for_tasks(tasks.size(), exec,
              [&](std::size_t i) { run_task(spec, tasks[i], [&](FamilyMember &&m) { partial[i].push_back(std::move(m)); }); });
    std::vector<FamilyMember> out;
    for (auto &p : partial) {
        std::move(p.begin(), p.end(), std::back_inserter(out));
    }
    return out;
}

std::map<std::pair<Part, Part>, std::map<SliceKey, long>> gf_count_by_param(const FamilySpec &spec, Execution exec)
{
    spec.validate();
    return count_family(spec, exec);
}

std::map<SliceKey, long> gf_count(const FamilySpec &spec, Execution exec)
{
    std::map<SliceKey, long> out;
    for (const auto &[p, slices] : gf_count_by_param(spec, exec)) {
        for (const auto &[k, c] : slices) {
            out[k] += c;
        }
    }
    return out;
}

namespace
{

Rational power(const Rational &x, long e)
{
    if (e < 0 && x == 0) {
        throw InvalidArgument("negative power of zero");
    }
    Rational out = 1;
    const Rational base = e < 0 ? Rational(1 / x) : x;
    for (long i = 0; i < std::abs(e); ++i) {
        out *= base;
    }
    return out;
}

} // namespace

std::map<std::pair<long, Part>, Rational> specialize(const std::map<SliceKey, long> &counts, const Rational &a,
                                                     const Rational &b, bool zero_completion)
{
    if (zero_completion && b == 1) {
        throw InvalidArgument("zero completion needs b != 1");
    }
    std::map<std::pair<long, Part>, Rational> out;
    for (const auto &[k, c] : counts) {
        Rational term = Rational(c) * power(a, k.a_exp) * power(b, k.b_exp);
        if (zero_completion && (k.z_exp >= 1 || k.b_exp >= 1)) {
            term /= 1 - b;
        }
        out[{k.z_exp, k.weight}] += term;
    }
    return out;
}

ZLaurentSeries psi1_from_families(Part max_weight, long max_abs_n, const Rational &a, const Rational &b,
                                  Execution exec)
{
    if (max_weight < 0 || max_abs_n < 0) {
        throw InvalidArgument("bounds must be nonnegative");
    }
    if (a == 0) {
        throw InvalidArgument("a must be nonzero");
    }
    const int qmax = static_cast<int>(max_weight);
    ZLaurentSeries out(-max_abs_n, max_abs_n, qmax);

    FamilySpec spec;
    spec.max_weight = max_weight;
    spec.zero_free_mu = true;
    spec.family = Family::A;
    spec.param_min = 0;
    spec.param_max = max_abs_n;
    for (const auto &[zw, v] : specialize(gf_count(spec, exec), a, b, true)) {
        out.term(zw.first).coeff(static_cast<int>(zw.second)) += v;
    }
    if (max_abs_n >= 1) {
        spec.family = Family::C;
        spec.param_min = 1;
        for (const auto &[zw, v] : specialize(gf_count(spec, exec), a, b, true)) {
            out.term(zw.first).coeff(static_cast<int>(zw.second)) += v;
        }
        for (long m = 1; m <= max_abs_n; ++m) {
            out.term(-m) = out[-m] * pochhammer_fin(-b / a, m, qmax);
        }
    }
    return out;
}

std::string describe(const FamilyMember &member)
{
    std::ostringstream os;
    struct Visitor {
        std::ostringstream &os;
        void operator()(const QuintupleA &x) const
        {
            os << "A{n=" << x.n << "; " << x.alpha << ", " << x.beta << ", " << x.gamma << ", " << x.lambda << ", "
               << x.mu << "}";
        }
        void operator()(const QuintupleB &y) const
        {
            os << "B{" << y.A << ", " << y.B << ", " << y.C << ", " << y.D << ", " << y.E << "}";
        }
        void operator()(const QuintupleC &x) const
        {
            os << "C{m=" << x.m << ", l=" << x.l << "; " << x.alpha << ", " << x.beta << ", " << x.gamma << ", "
               << x.lambda << ", " << x.mu << "}";
        }
        void operator()(const QuintupleD &y) const
        {
            os << "D{m=" << y.m << "; " << y.A << ", " << y.B << ", " << y.C << ", " << y.D << ", " << y.E << "}";
        }
        void operator()(const ZPair &p) const { os << "(" << join(p.alpha) << ", " << join(p.beta) << ")"; }
        void operator()(const ZResult &r) const { os << "(" << join(r.mu) << ", " << join(r.nu) << ")"; }
        void operator()(const SplitInsertResult &r) const
        {
            os << "(n=" << r.n << "; " << r.mu << ", " << r.nu << ", " << r.gamma << ")";
        }
    };
    std::visit(Visitor{os}, member.value);
    if (member.params.k != 0 || member.params.m != 0) {
        os << " [k=" << member.params.k << ", m=" << member.params.m << "]";
    }
    return os.str();
}

BijectionReport check_bijection(MapName map, FamilySpec spec, Execution exec)
{
    spec.family = domain_family(map);
    spec.validate();
    FamilySpec codomain = spec;
    codomain.family = codomain_family(map);
    codomain.validate();

    BijectionReport report;
    report.map = map;
    report.spec = spec;

    const std::vector<Task> tasks = tasks_for(spec);
    std::vector<TaskReport> partial(tasks.size());
    for_tasks(tasks.size(), exec, [&](std::size_t i) {
        TaskReport &tr = partial[i];
        run_task(spec, tasks[i], [&](FamilyMember &&m) {
            ++tr.domain;
            Outcome o;
            try {
                o = check_member(map, m);
            } catch (const std::exception &e) {
                o.problem = std::string("exception: ") + e.what();
            }
            if (o.problem) {
                tr.violations.push_back({describe(m), *o.problem});
                return;
            }
            ++tr.image[param_key(m.params)][o.image];
            if (!o.branch.empty()) {
                ++tr.branches[o.branch];
            }
            if (o.witness) {
                if (tr.witnesses.size() < witness_limit) {
                    tr.witnesses.push_back(*o.witness);
                }
                ++tr.witness_count;
            }
        });
    });

    Counts image;
    for (auto &tr : partial) {
        report.domain_size += tr.domain;
        std::move(tr.violations.begin(), tr.violations.end(), std::back_inserter(report.violations));
        add_counts(image, tr.image);
        for (const auto &[b, c] : tr.branches) {
            report.branches[b] += c;
        }
        for (auto &w : tr.witnesses) {
            if (report.witnesses.size() < witness_limit) {
                report.witnesses.push_back(std::move(w));
            }
        }
        report.witness_count += tr.witness_count;
    }

    const Counts target = count_family(codomain, exec);
    std::map<std::pair<ParamKey, SliceKey>, std::pair<long, long>> joined;
    for (const auto &[p, slices] : image) {
        for (const auto &[k, c] : slices) {
            joined[{p, k}].first = c;
        }
    }
    for (const auto &[p, slices] : target) {
        for (const auto &[k, c] : slices) {
            joined[{p, k}].second = c;
            report.codomain_size += static_cast<std::size_t>(c);
        }
    }
    for (const auto &[pk, counts] : joined) {
        if (counts.first != counts.second) {
            report.slice_mismatches.push_back(
                {VariantParams{pk.first.first, pk.first.second}, pk.second, counts.first, counts.second});
        }
    }
    return report;
}

} // namespace algz
