#include "fairgather/schedulers.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <string>

#include "fairgather/random.hpp"

namespace fairgather {

const char* to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::phased: return "phased";
    case Algorithm::elias: return "elias";
    case Algorithm::slots: return "slots";
    case Algorithm::slots_distributed: return "slots-dist";
    case Algorithm::recorded: return "recorded";
    }
    return "unknown";
}

unsigned slot_exponent(std::size_t degree) { return static_cast<unsigned>(std::bit_width(degree)); }

namespace {

[[noreturn]] void unknown_node(NodeId v) { throw ScheduleError("node " + std::to_string(v) + " is not scheduled"); }

void check_holiday(Holiday t)
{
    if (t == 0) throw ScheduleError("holidays are numbered from 1");
}

template <class Map>
std::vector<NodeId> keys_of(const Map& m)
{
    std::vector<NodeId> out;
    out.reserve(m.size());
    for (const auto& kv : m) out.push_back(kv.first);
    return out;
}

}  // namespace

// --- PhasedSchedule ---------------------------------------------------------

bool PhasedSchedule::happy(NodeId v, Holiday t) const
{
    check_holiday(t);
    if (t > horizon_)
        throw ScheduleError("holiday " + std::to_string(t) + " is past the replay horizon " +
                            std::to_string(horizon_));
    const auto& times = happy_times(v);
    return std::binary_search(times.begin(), times.end(), t);
}

const std::vector<Holiday>& PhasedSchedule::happy_times(NodeId v) const
{
    auto it = happy_times_.find(v);
    if (it == happy_times_.end()) unknown_node(v);
    return it->second;
}

std::vector<NodeId> PhasedSchedule::nodes() const { return keys_of(happy_times_); }

// --- EliasSchedule ----------------------------------------------------------

EliasSchedule::EliasSchedule(ConflictGraph graph, Coloring coloring)
    : graph_(std::move(graph)), coloring_(std::move(coloring))
{
    for (NodeId v : graph_.nodes()) {
        auto it = coloring_.find(v);
        if (it == coloring_.end()) throw ScheduleError("node " + std::to_string(v) + " has no color");
        if (it->second == 0) throw ScheduleError("colors must be >= 1");
        patterns_[v] = lsb_pattern(omega_encode(it->second));
    }
    if (coloring_.size() != graph_.node_count()) throw ScheduleError("coloring names nodes outside the graph");
    if (auto bad = find_conflict(graph_, coloring_))
        throw ScheduleError("coloring is not proper on edge " + std::to_string(bad->u) + "-" +
                            std::to_string(bad->v));
}

bool EliasSchedule::happy(NodeId v, Holiday t) const
{
    check_holiday(t);
    auto it = patterns_.find(v);
    if (it == patterns_.end()) unknown_node(v);
    return it->second.matches(t);
}

Color EliasSchedule::color(NodeId v) const
{
    auto it = coloring_.find(v);
    if (it == coloring_.end()) unknown_node(v);
    return it->second;
}

std::uint64_t EliasSchedule::period(NodeId v) const
{
    auto it = patterns_.find(v);
    if (it == patterns_.end()) unknown_node(v);
    return it->second.period();
}

std::vector<NodeId> EliasSchedule::nodes() const { return keys_of(coloring_); }

// --- SlotSchedule -----------------------------------------------------------

bool SlotSchedule::happy(NodeId v, Holiday t) const
{
    check_holiday(t);
    auto it = slots_.find(v);
    if (it == slots_.end()) unknown_node(v);
    return it->second.happy(t);
}

std::vector<NodeId> SlotSchedule::nodes() const { return keys_of(slots_); }

// --- RecordedSchedule -------------------------------------------------------

RecordedSchedule::RecordedSchedule(std::vector<NodeId> nodes, std::vector<std::vector<NodeId>> happy_sets)
    : nodes_(std::move(nodes)), happy_sets_(std::move(happy_sets))
{
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    for (auto& set : happy_sets_) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (NodeId v : set)
            if (!std::binary_search(nodes_.begin(), nodes_.end(), v)) unknown_node(v);
    }
}

const std::vector<NodeId>& RecordedSchedule::happy_set(Holiday t) const
{
    check_holiday(t);
    if (t > happy_sets_.size())
        throw ScheduleError("holiday " + std::to_string(t) + " is past the recorded horizon " +
                            std::to_string(happy_sets_.size()));
    return happy_sets_[t - 1];
}

bool RecordedSchedule::happy(NodeId v, Holiday t) const
{
    if (!std::binary_search(nodes_.begin(), nodes_.end(), v)) unknown_node(v);
    const auto& set = happy_set(t);
    return std::binary_search(set.begin(), set.end(), v);
}

// --- Schedule ---------------------------------------------------------------

bool Schedule::happy(NodeId v, Holiday t) const
{
    return std::visit([&](const auto& s) { return s.happy(v, t); }, impl_);
}

std::vector<NodeId> Schedule::happy_set(Holiday t) const
{
    if (const auto* rec = std::get_if<RecordedSchedule>(&impl_)) return rec->happy_set(t);
    std::vector<NodeId> out;
    for (NodeId v : nodes())
        if (happy(v, t)) out.push_back(v);
    return out;
}

std::vector<NodeId> Schedule::nodes() const
{
    return std::visit([](const auto& s) -> std::vector<NodeId> { return s.nodes(); }, impl_);
}

std::optional<Holiday> Schedule::horizon() const
{
    if (const auto* p = std::get_if<PhasedSchedule>(&impl_)) return p->horizon();
    if (const auto* r = std::get_if<RecordedSchedule>(&impl_)) return r->horizon();
    return std::nullopt;
}

// --- Builders ---------------------------------------------------------------

Schedule phased_greedy(const ConflictGraph& g, const Coloring& init, Holiday horizon)
{
    for (NodeId v : g.nodes()) {
        auto it = init.find(v);
        if (it == init.end()) throw ScheduleError("initial coloring misses node " + std::to_string(v));
        if (it->second == 0) throw ScheduleError("initial colors must be >= 1");
    }
    if (init.size() != g.node_count()) throw ScheduleError("initial coloring names nodes outside the graph");
    if (auto bad = find_conflict(g, init))
        throw ScheduleError("initial coloring is not proper on edge " + std::to_string(bad->u) + "-" +
                            std::to_string(bad->v));

    Coloring color = init;
    std::map<Color, std::vector<NodeId>> pending;  // color -> nodes holding it
    for (const auto& [v, c] : color) pending[c].push_back(v);

    std::map<NodeId, std::vector<Holiday>> happy_times;
    for (NodeId v : g.nodes()) happy_times[v];

    std::vector<Color> taken;
    for (Holiday i = 1; i <= horizon; ++i) {
        auto bucket = pending.find(i);
        if (bucket == pending.end()) continue;
        std::vector<NodeId> hosts = std::move(bucket->second);
        pending.erase(bucket);
        std::sort(hosts.begin(), hosts.end());

        // Hosts form an independent set, so no host reads another host's color;
        // computing all new colors before applying them keeps the phase
        // order-independent.
        std::vector<std::pair<NodeId, Color>> moves;
        moves.reserve(hosts.size());
        for (NodeId p : hosts) {
            happy_times[p].push_back(i);
            const Color limit = i + g.degree(p) + 1;
            taken.clear();
            for (NodeId q : g.neighbors(p)) {
                Color c = color.at(q);
                if (c > i && c <= limit) taken.push_back(c);
            }
            std::sort(taken.begin(), taken.end());
            Color s = i + 1;
            for (Color c : taken) {
                if (c == s)
                    ++s;
                else if (c > s)
                    break;
            }
            if (s > limit) throw std::logic_error("phased greedy: no free color in range");
            moves.emplace_back(p, s);
        }
        for (auto [p, s] : moves) {
            color[p] = s;
            pending[s].push_back(p);
        }
    }
    return Schedule(PhasedSchedule(std::move(happy_times), std::move(color), horizon), Algorithm::phased);
}

Schedule elias_schedule(const ConflictGraph& g, const Coloring& coloring)
{
    return Schedule(EliasSchedule(g, coloring), Algorithm::elias);
}

SlotAssignment degree_slots_sequential(const ConflictGraph& g)
{
    std::vector<NodeId> order = g.nodes();
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });

    SlotAssignment slots;
    std::vector<bool> blocked;
    for (NodeId v : order) {
        const unsigned j = slot_exponent(g.degree(v));
        const std::uint64_t range = std::uint64_t{1} << j;
        blocked.assign(range, false);
        for (NodeId w : g.neighbors(v))
            if (auto it = slots.find(w); it != slots.end()) blocked[it->second.offset & (range - 1)] = true;
        auto free = std::find(blocked.begin(), blocked.end(), false);
        if (free == blocked.end())
            throw std::logic_error("degree slots: no free residue for node " + std::to_string(v));
        slots[v] = Slot{static_cast<std::uint64_t>(free - blocked.begin()), j};
    }
    return slots;
}

DistributedSlots degree_slots_distributed(const ConflictGraph& g, std::uint64_t seed)
{
    DistributedSlots out;
    const unsigned top = slot_exponent(g.max_degree());
    for (unsigned i = top + 1; i-- > 0;) {
        const std::uint64_t range = std::uint64_t{1} << i;
        PaletteMap palettes;
        for (NodeId v : g.nodes()) {
            if (slot_exponent(g.degree(v)) != i) continue;
            std::vector<bool> blocked(range, false);
            for (NodeId w : g.neighbors(v))
                if (auto it = out.slots.find(w); it != out.slots.end())
                    blocked[it->second.offset & (range - 1)] = true;
            auto& palette = palettes[v];
            for (std::uint64_t x = 0; x < range; ++x)
                if (!blocked[x]) palette.push_back(x);
        }
        if (palettes.empty()) continue;
        ++out.phases;
        auto phase = local_random_color(g, palettes, mix64(seed, i));
        out.log += phase.log;
        for (const auto& [v, x] : phase.coloring) out.slots[v] = Slot{x, i};
    }
    return out;
}

Schedule slot_schedule(SlotAssignment slots, Algorithm tag)
{
    return Schedule(SlotSchedule(std::move(slots)), tag);
}

// --- Dynamic updates --------------------------------------------------------

namespace {

const EliasSchedule& require_elias(const Schedule& s)
{
    const auto* e = s.get_if<EliasSchedule>();
    if (!e) throw ScheduleError("dynamic updates apply to Elias schedules only");
    return *e;
}

}  // namespace

Schedule dynamic_insert(const Schedule& s, NodeId u, NodeId v)
{
    const auto& elias = require_elias(s);
    if (u == v) throw GraphError("self-loop on node " + std::to_string(u));
    ConflictGraph g = elias.graph();
    Coloring coloring = elias.coloring();
    g.insert_edge(u, v);
    for (NodeId w : {std::min(u, v), std::max(u, v)})
        if (!coloring.contains(w)) coloring[w] = smallest_free_color(g, coloring, w);
    if (coloring.at(u) == coloring.at(v)) {
        const NodeId mover = std::max(u, v);
        coloring.erase(mover);
        coloring[mover] = smallest_free_color(g, coloring, mover);
    }
    return elias_schedule(g, coloring);
}

Schedule dynamic_remove(const Schedule& s, NodeId u, NodeId v, double recolor_threshold)
{
    const auto& elias = require_elias(s);
    ConflictGraph g = elias.graph();
    Coloring coloring = elias.coloring();
    g.remove_edge(u, v);
    for (NodeId w : {std::min(u, v), std::max(u, v)}) {
        const double allowance = recolor_threshold * static_cast<double>(g.degree(w) + 1);
        if (static_cast<double>(coloring.at(w)) > allowance) {
            coloring.erase(w);
            coloring[w] = smallest_free_color(g, coloring, w);
        }
    }
    return elias_schedule(g, coloring);
}

std::vector<EdgeEvent> parse_events(std::string_view text)
{
    std::vector<EdgeEvent> events;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        std::vector<std::string_view> toks;
        for (std::size_t i = 0; i < line.size();) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) toks.push_back(line.substr(i, j - i));
            i = j;
        }
        if (toks.empty() || toks[0].starts_with('#')) continue;
        if (toks.size() != 4 || (toks[1] != "+" && toks[1] != "-"))
            throw ParseError(line_no, "expected 't + u v' or 't - u v'");

        auto number = [&](std::string_view tok, auto& out) {
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError(line_no, "bad number '" + std::string(tok) + "'");
        };
        EdgeEvent e{0, toks[1] == "+", 0, 0};
        number(toks[0], e.holiday);
        number(toks[2], e.u);
        number(toks[3], e.v);
        if (e.holiday == 0) throw ParseError(line_no, "holidays are numbered from 1");
        if (!events.empty() && e.holiday < events.back().holiday)
            throw ParseError(line_no, "events must be ordered by holiday");
        events.push_back(e);
    }
    return events;
}

DynamicRun run_dynamic(const ConflictGraph& g, const Coloring& coloring, std::span<const EdgeEvent> events,
                       Holiday holidays, double recolor_threshold)
{
    DynamicRun run{{}, {}, elias_schedule(g, coloring)};
    run.happy_sets.reserve(holidays);
    std::size_t next = 0;
    for (Holiday t = 1; t <= holidays; ++t) {
        for (; next < events.size() && events[next].holiday <= t; ++next) {
            const EdgeEvent& e = events[next];
            const Coloring before = run.final_schedule.get_if<EliasSchedule>()->coloring();
            run.final_schedule = e.insert ? dynamic_insert(run.final_schedule, e.u, e.v)
                                          : dynamic_remove(run.final_schedule, e.u, e.v, recolor_threshold);
            const Coloring& after = run.final_schedule.get_if<EliasSchedule>()->coloring();
            for (const auto& [w, c] : after) {
                auto it = before.find(w);
                if (it != before.end() && it->second != c) run.recolorings.push_back({t, w, it->second, c});
            }
        }
        run.happy_sets.push_back(run.final_schedule.happy_set(t));
    }
    return run;
}

}  // namespace fairgather
