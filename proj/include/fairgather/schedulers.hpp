#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "fairgather/codec.hpp"
#include "fairgather/coloring.hpp"
#include "fairgather/graph.hpp"

namespace fairgather {

using Holiday = std::uint64_t;  // holidays are numbered from 1

class ScheduleError : public Error {
public:
    using Error::Error;
};

enum class Algorithm { phased, elias, slots, slots_distributed, recorded };

const char* to_string(Algorithm a);

/// Node is happy exactly on holidays t with t mod 2^exponent == offset.
struct Slot {
    std::uint64_t offset = 0;
    unsigned exponent = 0;

    std::uint64_t period() const { return std::uint64_t{1} << exponent; }
    bool happy(Holiday t) const { return (t & (period() - 1)) == offset; }
    friend bool operator==(const Slot&, const Slot&) = default;
};

using SlotAssignment = std::map<NodeId, Slot>;

/// ceil(log2(d + 1)), the slot exponent for a node of degree d.
unsigned slot_exponent(std::size_t degree);

/// Replayed phased greedy recoloring, frozen at its horizon.
class PhasedSchedule {
public:
    PhasedSchedule(std::map<NodeId, std::vector<Holiday>> happy_times, Coloring final_colors, Holiday horizon)
        : happy_times_(std::move(happy_times)), final_colors_(std::move(final_colors)), horizon_(horizon)
    {
    }

    bool happy(NodeId v, Holiday t) const;
    Holiday horizon() const { return horizon_; }
    const std::vector<Holiday>& happy_times(NodeId v) const;
    /// Colors (next hosting holidays) after the last replayed phase.
    const Coloring& final_colors() const { return final_colors_; }
    std::vector<NodeId> nodes() const;

private:
    std::map<NodeId, std::vector<Holiday>> happy_times_;
    Coloring final_colors_;
    Holiday horizon_;
};

/// Color-bound periodic schedule: v is happy on t iff the low bits of t spell
/// omega(color(v)) read from the least significant end.
class EliasSchedule {
public:
    EliasSchedule(ConflictGraph graph, Coloring coloring);

    bool happy(NodeId v, Holiday t) const;
    const ConflictGraph& graph() const { return graph_; }
    const Coloring& coloring() const { return coloring_; }
    Color color(NodeId v) const;
    /// 2^rho(color(v)).
    std::uint64_t period(NodeId v) const;
    std::vector<NodeId> nodes() const;

private:
    ConflictGraph graph_;
    Coloring coloring_;
    std::map<NodeId, LsbPattern> patterns_;
};

class SlotSchedule {
public:
    explicit SlotSchedule(SlotAssignment slots) : slots_(std::move(slots)) {}

    bool happy(NodeId v, Holiday t) const;
    const SlotAssignment& slots() const { return slots_; }
    std::vector<NodeId> nodes() const;

private:
    SlotAssignment slots_;
};

/// Explicit happy sets for holidays 1..horizon, e.g. loaded from a CSV file.
class RecordedSchedule {
public:
    RecordedSchedule(std::vector<NodeId> nodes, std::vector<std::vector<NodeId>> happy_sets);

    bool happy(NodeId v, Holiday t) const;
    Holiday horizon() const { return happy_sets_.size(); }
    const std::vector<NodeId>& happy_set(Holiday t) const;
    const std::vector<NodeId>& nodes() const { return nodes_; }

private:
    std::vector<NodeId> nodes_;
    std::vector<std::vector<NodeId>> happy_sets_;  // index t - 1, each sorted
};

/// Any of the schedule kinds behind one query interface. Immutable.
class Schedule {
public:
    using Variant = std::variant<PhasedSchedule, EliasSchedule, SlotSchedule, RecordedSchedule>;

    Schedule(Variant impl, Algorithm algorithm) : impl_(std::move(impl)), algorithm_(algorithm) {}

    Algorithm algorithm() const { return algorithm_; }
    /// Throws ScheduleError for t == 0, t past a finite horizon, or an unknown node.
    bool happy(NodeId v, Holiday t) const;
    std::vector<NodeId> happy_set(Holiday t) const;
    std::vector<NodeId> nodes() const;
    /// Last answerable holiday for replayed/recorded schedules; nullopt if unbounded.
    std::optional<Holiday> horizon() const;

    template <class T>
    const T* get_if() const
    {
        return std::get_if<T>(&impl_);
    }

private:
    Variant impl_;
    Algorithm algorithm_;
};

/// Phased greedy recoloring: at holiday i the nodes colored i are happy and each
/// moves to the smallest s in (i, i + degree + 1] not held by a neighbor.
/// Throws ScheduleError if `init` is not a proper coloring with colors >= 1.
Schedule phased_greedy(const ConflictGraph& g, const Coloring& init, Holiday horizon);

Schedule elias_schedule(const ConflictGraph& g, const Coloring& coloring);

/// Nodes in decreasing degree order (ties by id) take the smallest offset in
/// [0, 2^j) not congruent mod 2^j to an already-assigned neighbor's offset.
SlotAssignment degree_slots_sequential(const ConflictGraph& g);

struct DistributedSlots {
    SlotAssignment slots;
    RoundLog log;
    unsigned phases = 0;  // phases with at least one participant
};

/// Phase i = max exponent down to 0: nodes with exponent i run the randomized
/// palette colorer over [0, 2^i) minus residues already taken by neighbors.
DistributedSlots degree_slots_distributed(const ConflictGraph& g, std::uint64_t seed);

Schedule slot_schedule(SlotAssignment slots, Algorithm tag = Algorithm::slots);

inline constexpr double kDefaultRecolorThreshold = 2.0;

/// Adds edge u-v to an Elias schedule. Endpoints new to the graph get the
/// smallest free color; if both endpoints then share a color, the higher id
/// is recolored to the smallest color unused among its neighbors.
Schedule dynamic_insert(const Schedule& s, NodeId u, NodeId v);

/// Removes edge u-v. An endpoint whose color exceeds threshold * (degree + 1)
/// is recolored to the smallest color unused among its neighbors.
Schedule dynamic_remove(const Schedule& s, NodeId u, NodeId v,
                        double recolor_threshold = kDefaultRecolorThreshold);

struct EdgeEvent {
    Holiday holiday;  // applied before this holiday
    bool insert;
    NodeId u;
    NodeId v;
    friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

/// Event log lines: "t + u v" or "t - u v"; '#' comments and blank lines
/// skipped; holidays must be >= 1 and non-decreasing.
std::vector<EdgeEvent> parse_events(std::string_view text);

struct Recoloring {
    Holiday holiday;
    NodeId node;
    Color from;
    Color to;
};

struct DynamicRun {
    std::vector<std::vector<NodeId>> happy_sets;  // index t - 1
    std::vector<Recoloring> recolorings;
    Schedule final_schedule;
};

/// Runs an Elias schedule for holidays 1..holidays, applying each event just
/// before its holiday. Events past the last holiday are ignored.
DynamicRun run_dynamic(const ConflictGraph& g, const Coloring& coloring, std::span<const EdgeEvent> events,
                       Holiday holidays, double recolor_threshold = kDefaultRecolorThreshold);

}  // namespace fairgather
