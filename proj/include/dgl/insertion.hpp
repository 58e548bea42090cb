#ifndef DGL_INSERTION_HPP
#define DGL_INSERTION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dgl/digraph.hpp"
#include "dgl/extremal.hpp"

namespace dgl {

/// Path with both endpoints on a host cycle and at least one internal
/// vertex off it. gap is the arc-distance from start to end along the cycle.
struct Bypass {
    int start = 0;
    int end = 0;
    std::vector<int> internals;
    int gap = 0;

    bool operator==(const Bypass&) const = default;
};

struct ExtensionStep {
    std::string rule;  // "insert" or "bypass"
    int inserted = 0;                // insert rule
    std::optional<Bypass> bypass;    // bypass rule
    std::vector<int> cycle_after;
};

struct ExtensionState {
    VertexSequence cycle;
    std::vector<int> off_cycle;
    std::vector<ExtensionStep> trace;
};

ExtensionState make_state(const Digraph& d, const VertexSequence& cycle);

/// Smallest i in [1,m-1] with x_i -> x and x -> x_{i+1}, 1-based position.
std::optional<int> find_partner(const Digraph& d, const VertexSequence& path, int x);

std::optional<VertexSequence> insert_vertex(const Digraph& d,
                                            const VertexSequence& path, int x);

/// For an off-cycle x with d(x,C) >= m+1: one witness cycle through x per
/// length k in [2, m+1]. Rejects the call when the degree bound fails.
std::map<int, VertexSequence> lemma1_spectrum(const Digraph& d,
                                              const VertexSequence& cycle, int x);

struct Lemma3Result {
    bool pattern_found = false;  // some x_i -> x and y -> x_{i+1}
    bool satisfied = true;       // bound asserted only when pattern absent
    int lhs = 0;                 // d^-(x,P) + d^+(y,P)
    int rhs = 0;                 // m + epsilon
};

Lemma3Result lemma3_bound(const Digraph& d, const VertexSequence& path, int x, int y);

std::optional<Bypass> find_min_gap_bypass(const Digraph& d,
                                          const VertexSequence& cycle,
                                          bool three_vertex_only = false);

/// One strictly lengthening step: vertex insertion first, then a splice of
/// the minimum-gap bypass when its internals outnumber the gap interior.
std::optional<ExtensionState> extend_cycle(const Digraph& d,
                                           const ExtensionState& state);

struct LongCycleResult {
    enum class Outcome { Hamiltonian, NearCycle, Extremal, NoLongCycle, Unresolved };
    Outcome outcome = Outcome::Unresolved;
    std::optional<VertexSequence> witness;
    std::optional<ExtremalClass> extremal;
    std::vector<ExtensionStep> trace;
};

/// Extremal recognition, then seeded heuristic extension, then an exact
/// oracle fallback while n fits the budget.
LongCycleResult find_long_cycle(const Digraph& d, int oracle_budget = 14);

nlohmann::json to_json(const Bypass& b);
nlohmann::json to_json(const std::vector<ExtensionStep>& trace);
nlohmann::json to_json(const LongCycleResult& r);

}  // namespace dgl

#endif
