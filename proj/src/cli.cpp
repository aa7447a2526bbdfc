#include "hookswap/cli.hpp"

#include "hookswap/bijections.hpp"
#include "hookswap/enumeration.hpp"
#include "hookswap/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>

namespace hookswap {

namespace {

struct Options {
    std::string partition;
    std::string cell;
    std::string format = "tsv";
    bool trace = false;
    int arm2 = 0;
    int target2 = 0;
    int n = 0;
    std::string kind = "hp";
    int a = 0, l = 0, m = 0;
    int degree = 40;
    std::vector<std::string> checks;
    int max_n = -1;
    int max_failures = 10;
    bool serial = false;
};

void print_row(std::ostream& out, const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
        out << (i ? "\t" : "") << cells[i];
    out << '\n';
}

void print_pointed(std::ostream& out, const Options& o, const PointedPartition& pp)
{
    if (o.format == "json") {
        out << to_json(pp).dump() << '\n';
        return;
    }
    print_row(out, {"partition", "cell"});
    print_row(out, {to_string(pp.partition()), to_string(pp.cell())});
}

PointedPartition input_pointed(const Options& o)
{
    return PointedPartition(parse_partition(o.partition), parse_cell(o.cell));
}

int cmd_stats(const Options& o, std::ostream& out)
{
    const StatTuple s = stats(input_pointed(o));
    if (o.format == "json") {
        out << to_json(s).dump() << '\n';
        return exit_ok;
    }
    print_row(out, {"arm", "leg", "coarm", "coleg", "hook", "part"});
    print_row(out, {std::to_string(s.arm), std::to_string(s.leg), std::to_string(s.coarm), std::to_string(s.coleg),
                    std::to_string(s.hook), std::to_string(s.part_len)});
    return exit_ok;
}

int cmd_phi(const Options& o, std::ostream& out)
{
    const PointedPartition pp = input_pointed(o);
    if (!o.trace) {
        print_pointed(out, o, phi(pp));
        return exit_ok;
    }
    const PhiTrace t = phi_trace(pp);
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    steps.push_back({{"step", "quintuple"}, {"object", to_json(t.quintuple)}});
    steps.push_back({{"step", "tilde_quintuple"}, {"object", to_json(t.tilde)}});
    steps.push_back({{"step", "rho"}, {"object", to_json(t.rho_image)}});
    steps.push_back({{"step", "inverse_quintuple"}, {"object", to_json(t.back)}});
    steps.push_back({{"step", "result"}, {"object", to_json(t.result)}});
    if (o.format == "json") {
        nlohmann::ordered_json doc = to_json(t.result);
        doc["trace"] = std::move(steps);
        out << doc.dump() << '\n';
        return exit_ok;
    }
    print_pointed(out, o, t.result);
    out << '\n';
    print_row(out, {"step", "object"});
    for (const auto& s : steps)
        print_row(out, {s["step"].get<std::string>(), s["object"].dump()});
    return exit_ok;
}

int cmd_tau(const Options& o, std::ostream& out)
{
    print_pointed(out, o, tau(input_pointed(o), o.arm2, o.target2));
    return exit_ok;
}

int cmd_zeta(const Options& o, std::ostream& out)
{
    print_pointed(out, o, zeta(input_pointed(o), o.arm2, o.target2));
    return exit_ok;
}

int cmd_table(const Options& o, std::ostream& out)
{
    if (o.n < 0)
        throw ValidationError("table requires n >= 0");
    const DistTable t = distribution(o.n, parse_stat_key(o.kind), o.serial ? Exec::serial : Exec::parallel);
    out << (o.format == "json" ? t.to_json() + "\n" : t.to_tsv());
    return exit_ok;
}

int cmd_gf(const Options& o, std::ostream& out)
{
    if (o.a < 0 || o.l < 0 || o.m < 0)
        throw ValidationError("gf requires a, l, m >= 0");
    const QSeries s = gf_f(o.a, o.l, o.m, o.degree);
    if (o.format == "json") {
        nlohmann::ordered_json doc{{"a", o.a}, {"l", o.l}, {"m", o.m}};
        const nlohmann::ordered_json series = to_json(s);
        for (const auto& [k, v] : series.items())
            doc[k] = v;
        out << doc.dump() << '\n';
        return exit_ok;
    }
    print_row(out, {"degree", "coeff"});
    for (int d = 0; d <= s.max_degree(); ++d)
        print_row(out, {std::to_string(d), std::to_string(s[d])});
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    VerifyOptions vo;
    vo.max_failures = static_cast<std::size_t>(std::max(o.max_failures, 0));
    vo.exec = o.serial ? Exec::serial : Exec::parallel;
    const auto bound = [&](int fallback) { return o.max_n >= 0 ? o.max_n : fallback; };

    const std::vector<std::pair<std::string, std::function<VerifyReport()>>> suites{
        {"involution", [&] { return verify_involution(bound(14), vo); }},
        {"symmetry", [&] { return verify_symmetry(bound(14), vo); }},
        {"supersymmetry", [&] { return verify_supersymmetry(bound(14), vo); }},
        {"zeta", [&] { return verify_zeta(bound(12), 4, vo); }},
        {"gf", [&] { return verify_gf(3, 3, 3, bound(25), vo); }},
        {"pealing", [&] { return verify_pealing(bound(18), 4, 4, vo); }},
        {"remark", [&] { return verify_remark(5, 5, 40, vo); }},
    };
    std::vector<std::string> wanted = o.checks;
    if (wanted.empty() || std::find(wanted.begin(), wanted.end(), "all") != wanted.end()) {
        wanted.clear();
        for (const auto& s : suites)
            wanted.push_back(s.first);
    }
    for (const auto& name : wanted) {
        if (std::none_of(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; }))
            throw ValidationError("unknown check \"" + name
                                  + "\" (expected involution, symmetry, supersymmetry, zeta, gf, pealing, remark, all)");
    }

    bool all_passed = true;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& [name, run] : suites) {
        if (std::find(wanted.begin(), wanted.end(), name) == wanted.end())
            continue;
        const VerifyReport r = run();
        all_passed = all_passed && r.passed;
        if (o.format == "json")
            reports.push_back({{"check", r.check_name},
                               {"range", r.range},
                               {"checked", r.checked},
                               {"passed", r.passed},
                               {"failures", r.failures}});
        else
            out << r.summary() << '\n';
    }
    if (o.format == "json")
        out << reports.dump() << '\n';
    return all_passed ? exit_ok : exit_counterexample;
}

void add_pointed_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--partition", o.partition, "partition, e.g. \"5,3,1\"")->required();
    cmd->add_option("--cell", o.cell, "cell \"x,y\" (column, part index), 1-based")->required();
}

void add_format_flag(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hook length / part length involution on pointed partitions"};
    app.require_subcommand(1);
    Options o;

    auto* stats_cmd = app.add_subcommand("stats", "print arm, leg, coarm, coleg, hook and part length of a cell");
    add_pointed_flags(stats_cmd, o);
    add_format_flag(stats_cmd, o);

    auto* phi_cmd = app.add_subcommand("phi", "apply the involution to a pointed partition");
    add_pointed_flags(phi_cmd, o);
    add_format_flag(phi_cmd, o);
    phi_cmd->add_flag("--trace", o.trace, "also print every intermediate quintuple");

    auto* tau_cmd = app.add_subcommand("tau", "move the cell along its row to a new (arm, coarm)");
    add_pointed_flags(tau_cmd, o);
    add_format_flag(tau_cmd, o);
    tau_cmd->add_option("--arm", o.arm2, "target arm")->required();
    tau_cmd->add_option("--coarm", o.target2, "target coarm")->required();

    auto* zeta_cmd = app.add_subcommand("zeta", "map to a cell with a new (arm, leg) of the same sum");
    add_pointed_flags(zeta_cmd, o);
    add_format_flag(zeta_cmd, o);
    zeta_cmd->add_option("--arm", o.arm2, "target arm")->required();
    zeta_cmd->add_option("--leg", o.target2, "target leg")->required();

    auto* table_cmd = app.add_subcommand("table", "joint distribution of a statistic over all pointed partitions of n");
    table_cmd->add_option("--n", o.n, "weight")->required();
    table_cmd->add_option("--kind", o.kind, "statistic tuple")->check(CLI::IsMember({"alm", "hp", "am", "al"}));
    table_cmd->add_flag("--serial", o.serial, "use the serial kernels");
    add_format_flag(table_cmd, o);

    auto* gf_cmd = app.add_subcommand("gf", "coefficients of the generating function of f_n(a,l,m)");
    gf_cmd->add_option("--a", o.a)->required();
    gf_cmd->add_option("--l", o.l)->required();
    gf_cmd->add_option("--m", o.m)->required();
    gf_cmd->add_option("--max-degree", o.degree, "truncation degree")->check(CLI::NonNegativeNumber);
    add_format_flag(gf_cmd, o);

    auto* verify_cmd = app.add_subcommand("verify", "run exhaustive verification suites");
    verify_cmd->add_option("--checks", o.checks, "comma-separated suite names")->delimiter(',');
    verify_cmd->add_option("--max-n", o.max_n, "override the weight bound of every suite");
    verify_cmd->add_option("--max-failures", o.max_failures, "counterexamples kept per suite");
    verify_cmd->add_flag("--serial", o.serial, "use the serial kernels");
    add_format_flag(verify_cmd, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (stats_cmd->parsed())
            return cmd_stats(o, out);
        if (phi_cmd->parsed())
            return cmd_phi(o, out);
        if (tau_cmd->parsed())
            return cmd_tau(o, out);
        if (zeta_cmd->parsed())
            return cmd_zeta(o, out);
        if (table_cmd->parsed())
            return cmd_table(o, out);
        if (gf_cmd->parsed())
            return cmd_gf(o, out);
        if (verify_cmd->parsed())
            return cmd_verify(o, out);
    } catch (const ValidationError& e) {
        err << "error: invariant violated: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace hookswap
