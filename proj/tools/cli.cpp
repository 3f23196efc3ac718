#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qdt/acceptance.hpp"
#include "qdt/grobner.hpp"
#include "qdt/json_io.hpp"
#include "qdt/lieword.hpp"
#include "qdt/motivic.hpp"
#include "qdt/partitions.hpp"
#include "qdt/quiver.hpp"

namespace qdt::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Quiver load_quiver(const std::string& source) {
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '[' || source[first] == '{')) return parse_quiver(source);
    std::ifstream in(source);
    if (!in) throw InputError("cannot read quiver file '" + source + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_quiver(text.str());
}

Json quiver_json(const Quiver& q) { return Json(q.matrix()); }

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

int verdict_exit(const Verdict& v) { return v ? kExitOk : kExitCheckFailed; }

struct Options {
    std::string quiver;
    int order = 4;
    std::string format = "json";
    bool json() const { return format == "json"; }
};

int cmd_dt(const Options& o, std::ostream& out) {
    const Quiver q = load_quiver(o.quiver);
    const DTResult r = dt_invariants(q, o.order);
    if (o.json()) {
        Json j;
        j["quiver"] = quiver_json(q);
        j["order"] = o.order;
        j["dt"] = dt_result_to_json(r);
        emit(out, j);
        return kExitOk;
    }
    for (const auto& e : r.entries) {
        out << e.d.to_string() << "  DT = " << laurent_to_string(e.dt, Notation::Q) << "  kernel dims:";
        for (const auto& [n, k] : e.ker_dims) out << " " << n << ":" << k.get_str();
        out << "\n";
    }
    return kExitOk;
}

int cmd_series(const Options& o, const std::string& kind, std::ostream& out) {
    const Quiver q = load_quiver(o.quiver);
    MSeries s = kind == "motivic"    ? motivic_series(q, o.order)
                : kind == "poincare" ? poincare_A(q, o.order)
                                     : g_character(q, o.order);
    if (o.json()) {
        Json j;
        j["quiver"] = quiver_json(q);
        j["order"] = o.order;
        j["kind"] = kind;
        j["coefficients"] = mseries_to_json(s, Notation::U);
        emit(out, j);
        return kExitOk;
    }
    for (const auto& [d, c] : s.terms()) out << d.to_string() << "  " << qrat_to_string(c, Notation::U) << "\n";
    return kExitOk;
}

int report_checks(const Options& o, std::ostream& out, const Quiver& q,
                  const std::vector<std::pair<std::string, Verdict>>& checks) {
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.second.ok;
    if (o.json()) {
        Json j;
        j["quiver"] = quiver_json(q);
        j["order"] = o.order;
        for (const auto& [name, v] : checks) j[name] = verdict_to_json(v);
        j["ok"] = ok;
        emit(out, j);
    } else {
        for (const auto& [name, v] : checks) out << name << ": " << v.describe() << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_koszul(const Options& o, std::ostream& out) {
    const Quiver q = load_quiver(o.quiver);
    return report_checks(o, out, q,
                         {{"koszul", check_numerical_koszulness(q, o.order)},
                          {"change_of_variables", check_change_of_variables(q, o.order)}});
}

int cmd_grobner(const Options& o, long cap, const std::string& tie_break, std::ostream& out) {
    const Quiver q = load_quiver(o.quiver);
    const VertexTieBreak tb = tie_break == "ascending" ? VertexTieBreak::Ascending : VertexTieBreak::Descending;
    if (cap <= 0) cap = default_degree_cap(q);
    const Verdict v = check_quadratic_gb(q, cap, tb);
    const auto n = almost_n_regular(q);
    if (o.json()) {
        Json j;
        j["quiver"] = quiver_json(q);
        j["degree_cap"] = cap;
        j["tie_break"] = tb == VertexTieBreak::Ascending ? "ascending" : "descending";
        j["quadratic_gb"] = verdict_to_json(v);
        j["almost_n_regular"] = n ? Json(*n) : Json(nullptr);
        j["almost_0_regular"] = almost_0_regular(q);
        emit(out, j);
    } else {
        out << "quadratic GB up to degree " << cap << ": " << v.describe() << "\n";
        out << "almost N-regular: " << (n ? std::to_string(*n) : std::string("no")) << "\n";
        out << "almost 0-regular: " << (almost_0_regular(q) ? "yes" : "no") << "\n";
    }
    return verdict_exit(v);
}

int cmd_basis(const Options& o, int m, int len, int level, std::ostream& out) {
    if (m < 0 || len < 1 || level < 0) throw InputError("basis: need m >= 0, len >= 1, level >= 0");
    const auto words = one_vertex_basis(m, len, level);
    const long degree_max = complete_degree(m, level);
    const Verdict v = check_basis_character(m, len, level, degree_max);
    if (o.json()) {
        Json j;
        j["m"] = m;
        j["len"] = len;
        j["level"] = level;
        Json list = Json::array();
        for (const auto& w : words) list.push_back({{"word", w.to_string()}, {"degree", w.degree()}, {"parity", w.parity()}});
        j["words"] = std::move(list);
        j["character_check"] = verdict_to_json(v);
        j["complete_degree"] = degree_max;
        emit(out, j);
    } else {
        for (const auto& w : words) out << w.to_string() << "  degree " << w.degree() << "\n";
        out << "character check up to degree " << degree_max << ": " << v.describe() << "\n";
    }
    return verdict_exit(v);
}

int cmd_partitions(const Options& o, int m, int len, int level, const std::string& rule_name, std::ostream& out) {
    if (m < 1 || len < 1 || level < 0) throw InputError("partitions: need m >= 1, len >= 1, level >= 0");
    const PrefixRule rule = rule_name == "smaller" ? PrefixRule::PrefixSmaller : PrefixRule::PrefixLarger;
    const Verdict v = check_partition_bijection(m, len, level, rule);
    if (o.json()) {
        Json j;
        j["m"] = m;
        j["len"] = len;
        j["level"] = level;
        j["prefix_rule"] = rule_name;
        j["bijection"] = verdict_to_json(v);
        emit(out, j);
    } else {
        out << "partition bijection: " << v.describe() << "\n";
    }
    return verdict_exit(v);
}

int cmd_selftest(std::ostream& out) {
    const auto results = run_acceptance(&out);
    for (const auto& r : results)
        if (!r.pass) return kExitCheckFailed;
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact DT invariants and Koszul-dual checks for symmetric quivers", "quiver-dt"};
    app.require_subcommand(1);

    Options o;
    auto add_quiver = [&](CLI::App* sub) {
        sub->add_option("--quiver,-q", o.quiver, "Adjacency matrix as JSON, or a path to a JSON file")->required();
    };
    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order,-n", o.order, "Truncation order |d| <= n")->check(CLI::Range(0, 64));
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* dt = app.add_subcommand("dt", "DT invariants and kernel dimensions");
    add_quiver(dt);
    add_order(dt);
    add_format(dt);

    std::string kind = "motivic";
    auto* series = app.add_subcommand("series", "Generating series coefficients");
    add_quiver(series);
    add_order(series);
    add_format(series);
    series->add_option("--kind", kind, "motivic, poincare or character")
        ->check(CLI::IsMember({"motivic", "poincare", "character"}));

    auto* koszul = app.add_subcommand("koszul", "Numerical Koszulness and change-of-variables checks");
    add_quiver(koszul);
    add_order(koszul);
    add_format(koszul);

    long cap = 0;
    std::string tie_break = "descending";
    auto* grobner = app.add_subcommand("grobner", "Quadratic Groebner basis check");
    add_quiver(grobner);
    add_format(grobner);
    grobner->add_option("--cap", cap, "Degree cap (default 6 max m + 8)")->check(CLI::NonNegativeNumber);
    grobner->add_option("--tie-break", tie_break, "Vertex order at equal level")
        ->check(CLI::IsMember({"ascending", "descending"}));

    int m = 1, len = 3, level = 4;
    std::string rule = "larger";
    auto* basis = app.add_subcommand("basis", "Lyndon basis words of the one-vertex dual algebra");
    basis->add_option("--m", m, "Number of loops")->required();
    basis->add_option("--len", len, "Maximum word length");
    basis->add_option("--level", level, "Maximum letter level");
    add_format(basis);

    auto* partitions = app.add_subcommand("partitions", "Partition-word bijection check");
    partitions->add_option("--m", m, "Number of loops")->required();
    partitions->add_option("--len", len, "Maximum word length");
    partitions->add_option("--level", level, "Maximum letter level");
    partitions->add_option("--prefix-rule", rule, "Order of a partition against its prefixes")
        ->check(CLI::IsMember({"larger", "smaller"}));
    add_format(partitions);

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (*dt) return cmd_dt(o, out);
        if (*series) return cmd_series(o, kind, out);
        if (*koszul) return cmd_koszul(o, out);
        if (*grobner) return cmd_grobner(o, cap, tie_break, out);
        if (*basis) return cmd_basis(o, m, len, level, out);
        if (*partitions) return cmd_partitions(o, m, len, level, rule, out);
        if (*selftest) return cmd_selftest(out);
    } catch (const QuiverError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const IntegrityError& e) {
        err << "integrity failure: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInputError;
}

}  // namespace qdt::cli
