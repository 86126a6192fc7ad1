#include "fairgather/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "fairgather/analysis.hpp"
#include "fairgather/codec.hpp"
#include "fairgather/coloring.hpp"
#include "fairgather/satisfaction.hpp"
#include "fairgather/verify.hpp"

namespace fairgather {

std::string format_schedule_csv(const std::vector<std::vector<NodeId>>& happy_sets)
{
    std::ostringstream os;
    os << "holiday,happy\n";
    for (std::size_t i = 0; i < happy_sets.size(); ++i) {
        os << i + 1 << ',';
        for (std::size_t k = 0; k < happy_sets[i].size(); ++k) os << (k ? ";" : "") << happy_sets[i][k];
        os << '\n';
    }
    return os.str();
}

std::string format_schedule_csv(const Schedule& s, Holiday holidays)
{
    std::vector<std::vector<NodeId>> sets;
    sets.reserve(holidays);
    for (Holiday t = 1; t <= holidays; ++t) sets.push_back(s.happy_set(t));
    return format_schedule_csv(sets);
}

RecordedSchedule parse_schedule_csv(std::string_view text, const ConflictGraph& g)
{
    std::vector<std::vector<NodeId>> sets;
    std::size_t line_no = 0;
    bool header = false;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.starts_with('#')) continue;
        if (!header) {
            if (line != "holiday,happy") throw ParseError(line_no, "expected header 'holiday,happy'");
            header = true;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string_view::npos) throw ParseError(line_no, "expected 'holiday,ids'");

        auto number = [&](std::string_view tok, auto& out) {
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError(line_no, "bad number '" + std::string(tok) + "'");
        };
        Holiday t = 0;
        number(line.substr(0, comma), t);
        if (t != sets.size() + 1)
            throw ParseError(line_no, "expected holiday " + std::to_string(sets.size() + 1));

        std::vector<NodeId> set;
        std::string_view ids = line.substr(comma + 1);
        while (!ids.empty()) {
            auto semi = ids.find(';');
            NodeId v = 0;
            number(ids.substr(0, semi), v);
            if (!g.has_node(v)) throw ParseError(line_no, "node " + std::to_string(v) + " is not in the graph");
            set.push_back(v);
            ids = semi == std::string_view::npos ? std::string_view{} : ids.substr(semi + 1);
        }
        sets.push_back(std::move(set));
    }
    if (!header) throw ParseError(line_no, "missing header 'holiday,happy'");
    return RecordedSchedule(g.nodes(), std::move(sets));
}

namespace cli {
namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path + "'");
    f << text;
}

std::string fmt_double(double x)
{
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

struct Options {
    std::string input;
    std::string output;
    std::string schedule;
    std::string events;
    std::string mode = "greedy";
    std::string algorithm = "elias";
    std::string coloring = "greedy";
    std::string gap_bound = "none";
    std::string kind = "er";
    std::uint64_t seed = 0;
    std::uint64_t holidays = 0;
    std::uint64_t window = 0;
    std::uint64_t max_color = 0;
    std::size_t n = 0;
    double p = 0.1;
    double threshold = kDefaultRecolorThreshold;
};

Coloring initial_coloring(const ConflictGraph& g, const Options& o)
{
    if (o.coloring == "random") return local_random_color(g, default_palettes(g), o.seed).coloring;
    return greedy_color(g);
}

int cmd_color(const Options& o, std::ostream& out)
{
    const auto g = from_edge_list(read_file(o.input));
    std::ostringstream os;
    if (o.mode == "random") {
        auto r = local_random_color(g, default_palettes(g), o.seed);
        for (const auto& [v, c] : r.coloring) os << v << ' ' << c << '\n';
        os << "# rounds=" << r.log.rounds << '\n';
    } else {
        for (const auto& [v, c] : greedy_color(g)) os << v << ' ' << c << '\n';
    }
    emit(os.str(), o.output, out);
    return kExitOk;
}

int cmd_schedule(const Options& o, std::ostream& out)
{
    const auto g = from_edge_list(read_file(o.input));
    std::optional<Schedule> s;
    if (o.algorithm == "phased")
        s = phased_greedy(g, initial_coloring(g, o), o.holidays);
    else if (o.algorithm == "elias")
        s = elias_schedule(g, initial_coloring(g, o));
    else if (o.algorithm == "slots")
        s = slot_schedule(degree_slots_sequential(g));
    else
        s = slot_schedule(degree_slots_distributed(g, o.seed).slots, Algorithm::slots_distributed);
    emit(format_schedule_csv(*s, o.holidays), o.output, out);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto g = from_edge_list(read_file(o.input));
    Schedule s(parse_schedule_csv(read_file(o.schedule), g), Algorithm::recorded);
    const Holiday horizon = *s.horizon();
    if (horizon == 0) throw Error("schedule has no holidays");
    const Holiday last = o.window ? o.window : horizon;
    const auto r = report(g, s, 1, last);

    std::vector<GapViolation> violations;
    if (o.gap_bound == "degree+1")
        violations = check_gap_bounds(g, r, [&](NodeId v) { return g.degree(v) + 1; });
    else if (o.gap_bound == "2deg")
        violations = check_gap_bounds(g, r, [&](NodeId v) { return 2 * std::max<std::uint64_t>(g.degree(v), 1); });

    std::ostringstream os;
    os << "node,degree,happy,first_happy,mul,max_gap,period\n";
    for (const auto& nr : r.nodes) {
        os << nr.node << ',' << g.degree(nr.node) << ',' << nr.happy.size() << ','
           << (nr.first_happy ? std::to_string(*nr.first_happy) : "-") << ',' << nr.mul << ',' << nr.max_gap << ','
           << nr.detected_period << '\n';
    }
    for (Holiday t : r.dependent_holidays) os << "# not independent at holiday " << t << '\n';
    for (const auto& v : violations)
        os << "# gap violation node " << v.node << ": " << v.gap << " > " << v.bound << '\n';
    os << "# holidays=" << last << " dependent=" << r.dependent_holidays.size()
       << " gap_violations=" << violations.size() << '\n';
    emit(os.str(), o.output, out);
    return r.all_independent() && violations.empty() ? kExitOk : kExitViolation;
}

int cmd_satisfy(const Options& o, std::ostream& out)
{
    const auto g = from_edge_list(read_file(o.input));
    const auto r = max_satisfaction(g);
    std::ostringstream os;
    os << "# satisfied=" << r.satisfied << '\n';
    for (const auto& [e, head] : r.orientation) os << (head == e.u ? e.v : e.u) << "->" << head << '\n';
    emit(os.str(), o.output, out);
    return kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out)
{
    std::ostringstream os;
    os << "color,rho,period,phi,upper_bound\n";
    for (std::uint64_t c = 1; c <= o.max_color; ++c) {
        const auto len = rho(c);
        const auto b = elias_period_bound(c);
        os << c << ',' << len << ',' << lsb_pattern(omega_encode(c)).period() << ',' << fmt_double(b.phi_value)
           << ',' << fmt_double(b.upper_bound) << '\n';
    }
    emit(os.str(), o.output, out);
    return kExitOk;
}

int cmd_dynamic(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto g = from_edge_list(read_file(o.input));
    const auto events = parse_events(read_file(o.events));
    const auto run = run_dynamic(g, initial_coloring(g, o), events, o.holidays, o.threshold);
    for (const auto& rc : run.recolorings)
        err << "# holiday " << rc.holiday << ": node " << rc.node << " color " << rc.from << " -> " << rc.to << '\n';
    emit(format_schedule_csv(run.happy_sets), o.output, out);
    return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out)
{
    ConflictGraph g;
    if (o.kind == "path")
        g = path_graph(o.n);
    else if (o.kind == "cycle")
        g = cycle_graph(o.n);
    else if (o.kind == "clique")
        g = clique_graph(o.n);
    else if (o.kind == "star")
        g = star_graph(o.n);
    else if (o.kind == "edgeless")
        g = edgeless_graph(o.n);
    else
        g = erdos_renyi(o.n, o.p, o.seed);
    emit(g.to_edge_list(), o.output, out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fair holiday scheduling over conflict graphs", "fairgather"};
    app.require_subcommand(1);
    Options o;

    auto seed_opt = [&](CLI::App* sub) { return sub->add_option("--seed", o.seed, "Random seed (default $FAIRGATHER_SEED or 0)"); };
    auto input_opt = [&](CLI::App* sub) {
        sub->add_option("--input", o.input, "Edge-list graph file")->required()->check(CLI::ExistingFile);
    };
    auto output_opt = [&](CLI::App* sub) { sub->add_option("--output", o.output, "Output file (default stdout)"); };
    auto coloring_opt = [&](CLI::App* sub) {
        sub->add_option("--coloring", o.coloring, "Initial coloring")->check(CLI::IsMember({"greedy", "random"}));
    };

    std::vector<CLI::Option*> seeds;

    auto* color = app.add_subcommand("color", "Color the conflict graph");
    input_opt(color);
    output_opt(color);
    color->add_option("--mode", o.mode, "greedy or random")->check(CLI::IsMember({"greedy", "random"}));
    seeds.push_back(seed_opt(color));

    auto* schedule = app.add_subcommand("schedule", "Write a schedule CSV");
    input_opt(schedule);
    output_opt(schedule);
    coloring_opt(schedule);
    schedule->add_option("--algorithm", o.algorithm, "phased, elias, slots or slots-dist")
        ->check(CLI::IsMember({"phased", "elias", "slots", "slots-dist"}));
    schedule->add_option("--holidays", o.holidays, "Number of holidays")->required()->check(CLI::PositiveNumber);
    seeds.push_back(seed_opt(schedule));

    auto* verify = app.add_subcommand("verify", "Check a schedule CSV against a graph");
    input_opt(verify);
    output_opt(verify);
    verify->add_option("--schedule", o.schedule, "Schedule CSV")->required()->check(CLI::ExistingFile);
    verify->add_option("--window", o.window, "Check holidays 1..T (default: whole file)");
    verify->add_option("--gap-bound", o.gap_bound, "Gap bound to enforce: none, degree+1 or 2deg")
        ->check(CLI::IsMember({"none", "degree+1", "2deg"}));

    auto* satisfy = app.add_subcommand("satisfy", "Maximum satisfaction orientation");
    input_opt(satisfy);
    output_opt(satisfy);

    auto* bounds = app.add_subcommand("bounds", "Elias periods against the color bound");
    bounds->add_option("--max-color", o.max_color, "Largest color")->required()->check(CLI::PositiveNumber);
    output_opt(bounds);

    auto* dynamic = app.add_subcommand("dynamic", "Elias schedule under edge insertions and deletions");
    input_opt(dynamic);
    output_opt(dynamic);
    coloring_opt(dynamic);
    dynamic->add_option("--events", o.events, "Event log ('t + u v' / 't - u v')")->required()->check(CLI::ExistingFile);
    dynamic->add_option("--holidays", o.holidays, "Number of holidays")->required()->check(CLI::PositiveNumber);
    dynamic->add_option("--threshold", o.threshold, "Recolor when color > threshold * (degree + 1)")
        ->check(CLI::PositiveNumber);
    seeds.push_back(seed_opt(dynamic));

    auto* gen = app.add_subcommand("gen", "Generate a test graph");
    gen->add_option("--kind", o.kind, "path, cycle, clique, star, edgeless or er")
        ->check(CLI::IsMember({"path", "cycle", "clique", "star", "edgeless", "er"}));
    gen->add_option("--n", o.n, "Node count (leaf count for star)")->required();
    gen->add_option("--p", o.p, "Edge probability for er")->check(CLI::Range(0.0, 1.0));
    output_opt(gen);
    seeds.push_back(seed_opt(gen));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const bool seed_given = std::any_of(seeds.begin(), seeds.end(), [](CLI::Option* s) { return s->count() > 0; });
    if (!seed_given) {
        if (const char* env = std::getenv("FAIRGATHER_SEED"); env && *env) {
            std::string_view sv(env);
            auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), o.seed);
            if (ec != std::errc{} || ptr != sv.data() + sv.size()) {
                err << "error: FAIRGATHER_SEED must be a non-negative integer\n";
                return kExitUsage;
            }
        }
    }

    try {
        if (color->parsed()) return cmd_color(o, out);
        if (schedule->parsed()) return cmd_schedule(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (satisfy->parsed()) return cmd_satisfy(o, out);
        if (bounds->parsed()) return cmd_bounds(o, out);
        if (dynamic->parsed()) return cmd_dynamic(o, out, err);
        if (gen->parsed()) return cmd_gen(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cli
}  // namespace fairgather
