#include "algz/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "algz/algorithm_z.hpp"
#include "algz/oracle.hpp"
#include "algz/partition.hpp"
#include "algz/qseries.hpp"
#include "algz/ramanujan.hpp"
#include "algz/variant.hpp"

#ifndef ALGZ_FIXTURE_DIR
#define ALGZ_FIXTURE_DIR "fixtures"
#endif

namespace algz::cli
{

namespace
{

using nlohmann::json;

enum class Map {
    z,
    phi,
    varphi,
    split_insert,
    psi1_forward,
    psi1_backward,
    psi1_neg_forward,
    psi1_neg_backward,
};

Map parse_cli_map(const std::string &name)
{
    static const std::vector<std::pair<std::string, Map>> names{
        {"z", Map::z},
        {"phi", Map::phi},
        {"varphi", Map::varphi},
        {"split-insert", Map::split_insert},
        {"psi1", Map::psi1_forward},
        {"psi1-forward", Map::psi1_forward},
        {"psi1-backward", Map::psi1_backward},
        {"psi1-neg", Map::psi1_neg_forward},
        {"psi1-neg-forward", Map::psi1_neg_forward},
        {"psi1-neg-backward", Map::psi1_neg_backward},
    };
    for (const auto &[text, m] : names) {
        if (text == name) {
            return m;
        }
    }
    throw InvalidArgument("unknown map '" + name + "'");
}

// Flag values that take precedence over the same fields in the input object.
struct Overrides {
    std::optional<Part> k;
    std::optional<Part> m;
};

const json &object(const json &j)
{
    if (!j.is_object()) {
        throw InvalidArgument("input must be a JSON object");
    }
    return j;
}

Part integer(const json &v, const std::string &key)
{
    if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<Part>::max())) {
            throw InvalidArgument("field '" + key + "' holds an integer beyond 64 bits");
        }
        return static_cast<Part>(u);
    }
    if (v.is_number_integer()) {
        return v.get<std::int64_t>();
    }
    throw InvalidArgument("field '" + key + "' must hold integers");
}

std::optional<Part> integer_field(const json &j, const std::string &key)
{
    const auto it = object(j).find(key);
    if (it == j.end()) {
        return std::nullopt;
    }
    return integer(*it, key);
}

Part required_integer(const json &j, const std::string &key)
{
    if (auto v = integer_field(j, key)) {
        return *v;
    }
    throw InvalidArgument("missing field '" + key + "'");
}

Partition partition_field(const json &j, const std::string &key)
{
    const auto it = object(j).find(key);
    if (it == j.end()) {
        throw InvalidArgument("missing field '" + key + "'");
    }
    if (!it->is_array()) {
        throw InvalidArgument("field '" + key + "' must be an array of integers");
    }
    std::vector<Part> parts;
    parts.reserve(it->size());
    for (const auto &v : *it) {
        parts.push_back(integer(v, key));
    }
    try {
        return Partition(std::move(parts));
    } catch (const InvalidArgument &e) {
        throw InvalidArgument("field '" + key + "': " + e.what());
    }
}

json encode(const Partition &p)
{
    return json(p.vec());
}

json encode(const ZPair &p)
{
    return {{"alpha", encode(p.alpha)}, {"beta", encode(p.beta)}};
}

json encode(const ZResult &r)
{
    return {{"mu", encode(r.mu)}, {"nu", encode(r.nu)}};
}

json encode(const SplitInsertResult &r)
{
    return {{"n", r.n}, {"mu", encode(r.mu)}, {"nu", encode(r.nu)}, {"gamma", encode(r.gamma)}};
}

json encode(const QuintupleA &x)
{
    return {{"n", x.n},
            {"alpha", encode(x.alpha)},
            {"beta", encode(x.beta)},
            {"gamma", encode(x.gamma)},
            {"lambda", encode(x.lambda)},
            {"mu", encode(x.mu)}};
}

json encode(const QuintupleB &y)
{
    return {{"A", encode(y.A)}, {"B", encode(y.B)}, {"C", encode(y.C)}, {"D", encode(y.D)}, {"E", encode(y.E)}};
}

json encode(const QuintupleC &x)
{
    return {{"m", x.m},
            {"l", x.l},
            {"alpha", encode(x.alpha)},
            {"beta", encode(x.beta)},
            {"gamma", encode(x.gamma)},
            {"lambda", encode(x.lambda)},
            {"mu", encode(x.mu)}};
}

json encode(const QuintupleD &y)
{
    return {{"m", y.m},      {"A", encode(y.A)}, {"B", encode(y.B)},
            {"C", encode(y.C)}, {"D", encode(y.D)}, {"E", encode(y.E)}};
}

std::size_t nonnegative(Part v, const char *what)
{
    if (v < 0) {
        throw InvalidArgument(std::string(what) + " must be nonnegative");
    }
    return static_cast<std::size_t>(v);
}

ZPair decode_pair(const json &j)
{
    return {partition_field(j, "alpha"), partition_field(j, "beta")};
}

ZResult decode_result(const json &j)
{
    return {partition_field(j, "mu"), partition_field(j, "nu")};
}

SplitInsertResult decode_split(const json &j)
{
    return {nonnegative(required_integer(j, "n"), "n"), partition_field(j, "mu"), partition_field(j, "nu"),
            partition_field(j, "gamma")};
}

QuintupleA decode_a(const json &j)
{
    return {nonnegative(required_integer(j, "n"), "n"), partition_field(j, "alpha"), partition_field(j, "beta"),
            partition_field(j, "gamma"), partition_field(j, "lambda"), partition_field(j, "mu")};
}

QuintupleB decode_b(const json &j)
{
    return {partition_field(j, "A"), partition_field(j, "B"), partition_field(j, "C"), partition_field(j, "D"),
            partition_field(j, "E")};
}

Part m_value(const json &j, const Overrides &o)
{
    if (o.m) {
        return *o.m;
    }
    return integer_field(j, "m").value_or(1);
}

QuintupleC decode_c(const json &j, const Overrides &o)
{
    QuintupleC x;
    x.m = m_value(j, o);
    x.alpha = partition_field(j, "alpha");
    x.beta = partition_field(j, "beta");
    x.gamma = partition_field(j, "gamma");
    x.lambda = partition_field(j, "lambda");
    x.mu = partition_field(j, "mu");
    x.l = nonnegative(integer_field(j, "l").value_or(static_cast<Part>(x.gamma.length())), "l");
    return x;
}

QuintupleD decode_d(const json &j, const Overrides &o)
{
    return {m_value(j, o), partition_field(j, "A"), partition_field(j, "B"), partition_field(j, "C"),
            partition_field(j, "D"), partition_field(j, "E")};
}

VariantParams variant_params(const json &j, const Overrides &o)
{
    VariantParams p;
    p.k = o.k ? *o.k : integer_field(j, "k").value_or(0);
    p.m = o.m ? *o.m : integer_field(j, "m").value_or(0);
    return p;
}

json forward(Map map, const json &in, const Overrides &o)
{
    switch (map) {
    case Map::z: {
        const ZPair p = decode_pair(in);
        return encode(z_insert(p.alpha, p.beta));
    }
    case Map::phi: {
        const ZPair p = decode_pair(in);
        return encode(phi(p.alpha, p.beta));
    }
    case Map::varphi: {
        const ZPair p = decode_pair(in);
        return encode(varphi(p.alpha, p.beta, variant_params(in, o)));
    }
    case Map::split_insert: {
        const ZPair p = decode_pair(in);
        return encode(split_insert(p.alpha, p.beta));
    }
    case Map::psi1_forward: return encode(forward_pos(decode_a(in)));
    case Map::psi1_backward: return encode(backward_pos(decode_b(in)));
    case Map::psi1_neg_forward: return encode(forward_neg(decode_c(in, o)));
    case Map::psi1_neg_backward: return encode(backward_neg(decode_d(in, o)));
    }
    throw InvalidArgument("unknown map");
}

json backward(Map map, const json &in, const Overrides &o)
{
    switch (map) {
    case Map::z: {
        const ZResult r = decode_result(in);
        return encode(z_extract(r.mu, r.nu));
    }
    case Map::phi: {
        const ZResult r = decode_result(in);
        return encode(phi_inv(r.mu, r.nu));
    }
    case Map::varphi: {
        const ZResult r = decode_result(in);
        return encode(varphi_inv(r.mu, r.nu, variant_params(in, o)));
    }
    case Map::split_insert: {
        const SplitInsertResult r = decode_split(in);
        return encode(split_insert_inv(r.n, r.mu, r.nu, r.gamma));
    }
    case Map::psi1_forward: return encode(backward_pos(decode_b(in)));
    case Map::psi1_backward: return encode(forward_pos(decode_a(in)));
    case Map::psi1_neg_forward: return encode(backward_neg(decode_d(in, o)));
    case Map::psi1_neg_backward: return encode(forward_neg(decode_c(in, o)));
    }
    throw InvalidArgument("unknown map");
}

// Re-encodes an input of `forward` (domain) or `backward` (codomain) in canonical form.
json canonical(Map map, const json &in, const Overrides &o, bool domain)
{
    const bool a_side = (map == Map::psi1_forward) == domain;
    const bool c_side = (map == Map::psi1_neg_forward) == domain;
    switch (map) {
    case Map::z:
    case Map::phi:
    case Map::varphi: return domain ? encode(decode_pair(in)) : encode(decode_result(in));
    case Map::split_insert: return domain ? encode(decode_pair(in)) : encode(decode_split(in));
    case Map::psi1_forward:
    case Map::psi1_backward: return a_side ? encode(decode_a(in)) : encode(decode_b(in));
    case Map::psi1_neg_forward:
    case Map::psi1_neg_backward: return c_side ? encode(decode_c(in, o)) : encode(decode_d(in, o));
    }
    throw InvalidArgument("unknown map");
}

json error_json(const std::string &message)
{
    return {{"error", message}};
}

class Failure : public std::runtime_error
{
public:
    Failure(json report) : std::runtime_error("failure"), report_(std::move(report)) {}
    const json &report() const noexcept { return report_; }

private:
    json report_;
};

json read_input(const std::string &inline_json, const std::string &file, std::istream &in)
{
    std::string text;
    if (!inline_json.empty()) {
        text = inline_json;
    } else if (!file.empty()) {
        std::ifstream f(file);
        if (!f) {
            throw InvalidArgument("cannot read '" + file + "'");
        }
        text.assign(std::istreambuf_iterator<char>(f), {});
    } else {
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidArgument(std::string("malformed JSON input: ") + e.what());
    }
}

// Runs one direction and checks that the opposite direction restores the input.
json run_map(Map map, const json &in, Overrides o, bool apply)
{
    // The opposite direction reads no k, m from the output, so pin them here.
    if (map == Map::varphi) {
        const VariantParams p = variant_params(in, o);
        o = {p.k, p.m};
    }
    const json out = apply ? forward(map, in, o) : backward(map, in, o);
    const json back = apply ? backward(map, out, o) : forward(map, out, o);
    const json expected = canonical(map, in, o, apply);
    if (back != expected) {
        throw Failure{{{"error", "round-trip failure"}, {"input", expected}, {"output", out}, {"restored", back}}};
    }
    return out;
}

json mismatch_json(const Mismatch &m)
{
    json j{{"z", m.z}, {"q", m.q}, {"lhs", to_string(m.lhs)}, {"rhs", to_string(m.rhs)}};
    if (!m.where.empty()) {
        j["where"] = m.where;
    }
    return j;
}

json report_json(const VerifyReport &r)
{
    json params{{"a", to_string(r.params.a)},
                {"b", to_string(r.params.b)},
                {"qmax", r.params.qmax},
                {"zmax", r.params.zmax},
                {"m", r.params.m}};
    if (r.params.guard) {
        params["guard"] = *r.params.guard;
    }
    json j{{"identity", identity_name(r.identity)},
           {"params", params},
           {"window", json::array({r.zmin, r.zmax})},
           {"status", r.pass ? "pass" : "fail"}};
    if (r.first_mismatch) {
        j["firstMismatch"] = mismatch_json(*r.first_mismatch);
    }
    return j;
}

json key_json(const SliceKey &k)
{
    return {{"weight", k.weight}, {"aExp", k.a_exp}, {"bExp", k.b_exp}, {"zExp", k.z_exp}};
}

json spec_json(const FamilySpec &s)
{
    json j{{"family", family_name(s.family)},
           {"maxWeight", s.max_weight},
           {"paramMin", s.param_min},
           {"paramMax", s.param_max},
           {"zeroFreeMu", s.zero_free_mu},
           {"maxAlphaLength", s.max_len_a},
           {"maxBetaLength", s.max_len_b},
           {"k", json::array({s.k_min, s.k_max})},
           {"m", json::array({s.m_min, s.m_max})}};
    if (s.b_max) {
        j["bMax"] = *s.b_max;
    }
    return j;
}

json bijection_json(const BijectionReport &r)
{
    json violations = json::array();
    for (const auto &v : r.violations) {
        violations.push_back({{"element", v.element}, {"message", v.message}});
    }
    json mismatches = json::array();
    for (const auto &m : r.slice_mismatches) {
        mismatches.push_back({{"k", m.params.k},
                              {"m", m.params.m},
                              {"slice", key_json(m.key)},
                              {"image", m.image},
                              {"codomain", m.codomain}});
    }
    return {{"map", map_name(r.map)},
            {"spec", spec_json(r.spec)},
            {"domainSize", r.domain_size},
            {"codomainSize", r.codomain_size},
            {"violations", violations},
            {"sliceMismatches", mismatches},
            {"branches", r.branches},
            {"witnesses", r.witnesses},
            {"witnessCount", r.witness_count},
            {"status", r.pass() ? "pass" : "fail"}};
}

struct OracleOptions {
    Part max_weight = 6;
    long min_n = 0;
    long max_n = 0;
    std::optional<long> min_m;
    std::optional<long> max_m;
    Part min_k = 0;
    Part max_k = 0;
    std::optional<std::size_t> b_max;
    std::size_t max_alpha_len = 4;
    std::size_t max_beta_len = 4;
    bool zero_free_mu = false;
    bool serial = false;
};

FamilySpec make_spec(Family family, const OracleOptions &o, bool needs_cap = false)
{
    FamilySpec s;
    s.family = family;
    s.max_weight = o.max_weight;
    s.b_max = o.b_max;
    s.zero_free_mu = o.zero_free_mu;
    // Free zero parts need a cap on the b exponent; default to two above the weight bound.
    const bool zero_free = o.zero_free_mu && (family == Family::A || family == Family::C);
    if (!s.b_max && (needs_cap || family == Family::B || family == Family::D ||
                     ((family == Family::A || family == Family::C) && !zero_free))) {
        s.b_max = static_cast<std::size_t>(o.max_weight) + 2;
    }
    s.max_len_a = o.max_alpha_len;
    s.max_len_b = o.max_beta_len;
    s.k_min = o.min_k;
    s.k_max = o.max_k;
    if (family == Family::C || family == Family::D) {
        s.param_min = o.min_m.value_or(1);
        s.param_max = o.max_m.value_or(std::max(s.param_min, 1L));
    } else {
        s.param_min = o.min_n;
        s.param_max = o.max_n;
    }
    s.m_min = o.min_m.value_or(0);
    s.m_max = o.max_m.value_or(s.m_min);
    return s;
}

struct FixtureResult {
    json entries = json::array();
    bool pass = true;
};

void run_fixture_file(const std::filesystem::path &path, FixtureResult &result)
{
    std::ifstream f(path);
    if (!f) {
        throw InvalidArgument("cannot read fixture '" + path.string() + "'");
    }
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error &e) {
        throw InvalidArgument("malformed fixture '" + path.string() + "': " + e.what());
    }
    const std::string name = doc.value("name", path.stem().string());
    std::size_t index = 0;
    for (const auto &c : doc.at("cases")) {
        json entry{{"file", path.filename().string()}, {"name", name}, {"case", index++}};
        Overrides o;
        if (c.contains("params")) {
            o.k = integer_field(c["params"], "k");
            o.m = integer_field(c["params"], "m");
        }
        const Map map = parse_cli_map(c.at("map").get<std::string>());
        const json &input = c.at("input");
        const json &expected = c.at("expected");
        try {
            const json got = forward(map, input, o);
            const json back = backward(map, expected, o);
            if (got != expected) {
                entry["status"] = "fail";
                entry["detail"] = {{"expected", expected}, {"got", got}};
            } else if (back != canonical(map, input, o, true)) {
                entry["status"] = "fail";
                entry["detail"] = {{"inverse", back}};
            } else {
                entry["status"] = "pass";
            }
        } catch (const std::exception &e) {
            entry["status"] = "fail";
            entry["detail"] = e.what();
        }
        result.pass = result.pass && entry["status"] == "pass";
        result.entries.push_back(std::move(entry));
    }
}

int emit(std::ostream &out, const json &j, int code)
{
    out << j.dump() << '\n';
    return code;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out)
{
    CLI::App app{"Partition bijections, q-series identities and enumeration oracles with JSON I/O", "algz"};
    app.require_subcommand(1);

    std::string map_text;
    std::string inline_json;
    std::string file;
    std::optional<Part> flag_k;
    std::optional<Part> flag_m;

    auto add_map_options = [&](CLI::App *sub) {
        sub->add_option("--map", map_text,
                        "z | phi | varphi | split-insert | psi1[-forward|-backward] | psi1-neg[-forward|-backward]")
            ->required();
        sub->add_option("--input", inline_json, "inline JSON input");
        sub->add_option("--file", file, "JSON input file");
        sub->add_option("--k", flag_k, "varphi shift k");
        sub->add_option("--m", flag_m, "varphi floor m, or m of the negative-N quintuples");
    };
    CLI::App *apply_cmd = app.add_subcommand("apply", "run a bijection forward");
    add_map_options(apply_cmd);
    CLI::App *invert_cmd = app.add_subcommand("invert", "run a bijection backward");
    add_map_options(invert_cmd);

    std::string identity;
    std::string a_text = "2";
    std::string b_text = "1/3";
    SeriesParams series;
    std::optional<int> guard;
    CLI::App *verify_cmd = app.add_subcommand("verify", "compare both sides of an identity");
    verify_cmd->add_option("--identity", identity, "qbinomial | sec3 | 1psi1 | negN | euler | gauss-relation | cauchy-forms")
        ->required();
    verify_cmd->add_option("--a", a_text, "rational a as p/q")->capture_default_str();
    verify_cmd->add_option("--b", b_text, "rational b as p/q")->capture_default_str();
    verify_cmd->add_option("--qmax", series.qmax, "q truncation order")->capture_default_str();
    verify_cmd->add_option("--zmax", series.zmax, "z reporting window")->capture_default_str();
    verify_cmd->add_option("--m", series.m, "m of negN, or the q^m shift of euler")->capture_default_str();
    verify_cmd->add_option("--guard", guard, "guard band override");

    OracleOptions oo;
    bool as_json = false;
    std::string oracle_map;
    std::string family_text;
    std::optional<std::string> gf_a;
    std::optional<std::string> gf_b;
    bool zero_completion = false;
    CLI::App *oracle_cmd = app.add_subcommand("oracle", "exhaustive enumeration checks");
    oracle_cmd->require_subcommand(1);
    auto add_bounds = [&](CLI::App *sub) {
        sub->add_option("--max-weight", oo.max_weight)->capture_default_str();
        sub->add_option("--min-n", oo.min_n)->capture_default_str();
        sub->add_option("--max-n", oo.max_n)->capture_default_str();
        sub->add_option("--min-m", oo.min_m);
        sub->add_option("--max-m", oo.max_m);
        sub->add_option("--min-k", oo.min_k)->capture_default_str();
        sub->add_option("--max-k", oo.max_k)->capture_default_str();
        sub->add_option("--b-max", oo.b_max, "cap on the b exponent (default max-weight + 2 where zero parts are free)");
        sub->add_option("--max-alpha-len", oo.max_alpha_len)->capture_default_str();
        sub->add_option("--max-beta-len", oo.max_beta_len)->capture_default_str();
        sub->add_flag("--zero-free-mu", oo.zero_free_mu);
        sub->add_flag("--serial", oo.serial, "use the serial reference kernels");
    };
    CLI::App *check_cmd = oracle_cmd->add_subcommand("check", "check a bijection over a bounded domain");
    check_cmd->add_option("--map", oracle_map, "z | phi | varphi | split-insert | pos | neg")->required();
    check_cmd->add_flag("--json", as_json, "print the full JSON report");
    add_bounds(check_cmd);
    CLI::App *gf_cmd = oracle_cmd->add_subcommand("gf", "per-slice counts of a family");
    gf_cmd->add_option("--family", family_text, "A | B | C | D | pair-* | image-*")->required();
    gf_cmd->add_option("--a", gf_a, "specialize a");
    gf_cmd->add_option("--b", gf_b, "specialize b");
    gf_cmd->add_flag("--zero-completion", zero_completion, "divide slices with zero-part room by (1 - b)");
    add_bounds(gf_cmd);

    Part cross_weight = 8;
    long cross_n = 2;
    std::string cross_a = "2";
    std::string cross_b = "1/3";
    bool cross_serial = false;
    CLI::App *cross_cmd =
        oracle_cmd->add_subcommand("cross-check", "enumeration counts against the bilateral left side");
    cross_cmd->add_option("--max-weight", cross_weight)->capture_default_str();
    cross_cmd->add_option("--max-n", cross_n, "bound on |N|")->capture_default_str();
    cross_cmd->add_option("--a", cross_a)->capture_default_str();
    cross_cmd->add_option("--b", cross_b)->capture_default_str();
    cross_cmd->add_flag("--serial", cross_serial);

    std::string fixture_dir = ALGZ_FIXTURE_DIR;
    CLI::App *fixtures_cmd = app.add_subcommand("fixtures", "run the stored worked examples");
    fixtures_cmd->add_option("--dir", fixture_dir, "fixture directory")->capture_default_str();

    std::vector<const char *> argv{"algz"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        return emit(out, error_json(e.what()), invalid_input);
    }

    try {
        if (apply_cmd->parsed() || invert_cmd->parsed()) {
            const Map map = parse_cli_map(map_text);
            const json input = read_input(inline_json, file, in);
            return emit(out, run_map(map, input, {flag_k, flag_m}, apply_cmd->parsed()), ok);
        }
        if (verify_cmd->parsed()) {
            series.a = parse_rational(a_text);
            series.b = parse_rational(b_text);
            series.guard = guard;
            const VerifyReport r = verify_identity(parse_identity(identity), series);
            return emit(out, report_json(r), r.pass ? ok : mismatch);
        }
        if (check_cmd->parsed()) {
            const MapName map = parse_map(oracle_map);
            const bool quintuple = map == MapName::pos || map == MapName::neg;
            const FamilySpec spec = make_spec(domain_family(map), oo, quintuple);
            const BijectionReport r =
                check_bijection(map, spec, oo.serial ? Execution::serial : Execution::parallel);
            const int code = r.pass() ? ok : mismatch;
            if (as_json) {
                return emit(out, bijection_json(r), code);
            }
            out << "map=" << map_name(r.map) << " domain=" << r.domain_size << " codomain=" << r.codomain_size
                << " violations=" << r.violations.size() << " slice-mismatches=" << r.slice_mismatches.size()
                << " witnesses=" << r.witness_count << ' ' << (r.pass() ? "PASS" : "FAIL") << '\n';
            return code;
        }
        if (gf_cmd->parsed()) {
            const FamilySpec spec = make_spec(parse_family(family_text), oo);
            const auto counts = gf_count(spec, oo.serial ? Execution::serial : Execution::parallel);
            json slices = json::array();
            for (const auto &[k, c] : counts) {
                json s = key_json(k);
                s["count"] = c;
                slices.push_back(std::move(s));
            }
            json j{{"spec", spec_json(spec)}, {"slices", slices}};
            if (gf_a || gf_b) {
                if (!gf_a || !gf_b) {
                    throw InvalidArgument("specialization needs both --a and --b");
                }
                json values = json::array();
                for (const auto &[zw, v] :
                     specialize(counts, parse_rational(*gf_a), parse_rational(*gf_b), zero_completion)) {
                    values.push_back({{"zExp", zw.first}, {"weight", zw.second}, {"value", to_string(v)}});
                }
                j["specialized"] = values;
            }
            return emit(out, j, ok);
        }
        if (cross_cmd->parsed()) {
            SeriesParams p;
            p.a = parse_rational(cross_a);
            p.b = parse_rational(cross_b);
            p.qmax = static_cast<int>(cross_weight);
            p.zmax = cross_n;
            const ZLaurentSeries counted = psi1_from_families(
                cross_weight, cross_n, p.a, p.b, cross_serial ? Execution::serial : Execution::parallel);
            const auto diff = compare(counted, expand_side(Side::lhs_1psi1, p));
            json j{{"params", {{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"maxWeight", cross_weight}}},
                   {"window", json::array({-cross_n, cross_n})},
                   {"status", diff ? "fail" : "pass"}};
            if (diff) {
                j["firstMismatch"] = mismatch_json(*diff);
            }
            return emit(out, j, diff ? mismatch : ok);
        }
        if (fixtures_cmd->parsed()) {
            namespace fs = std::filesystem;
            if (!fs::is_directory(fixture_dir)) {
                throw InvalidArgument("fixture directory '" + fixture_dir + "' not found");
            }
            std::vector<fs::path> files;
            for (const auto &e : fs::directory_iterator(fixture_dir)) {
                if (e.path().extension() == ".json") {
                    files.push_back(e.path());
                }
            }
            std::sort(files.begin(), files.end());
            if (files.empty()) {
                throw InvalidArgument("no fixtures in '" + fixture_dir + "'");
            }
            FixtureResult result;
            for (const auto &p : files) {
                run_fixture_file(p, result);
            }
            return emit(out, {{"fixtures", result.entries}, {"status", result.pass ? "pass" : "fail"}},
                        result.pass ? ok : mismatch);
        }
    } catch (const Failure &f) {
        return emit(out, f.report(), mismatch);
    } catch (const std::invalid_argument &e) {
        return emit(out, error_json(e.what()), invalid_input);
    } catch (const std::overflow_error &e) {
        return emit(out, error_json(e.what()), invalid_input);
    } catch (const json::exception &e) {
        return emit(out, error_json(e.what()), invalid_input);
    } catch (const std::out_of_range &e) {
        return emit(out, error_json(e.what()), invalid_input);
    } catch (const std::logic_error &e) {
        return emit(out, error_json(std::string("internal invariant failure: ") + e.what()), mismatch);
    }
    return emit(out, error_json("no command"), invalid_input);
}

int run(int argc, const char *const *argv, std::istream &in, std::ostream &out)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, in, out);
}

} // namespace algz::cli
