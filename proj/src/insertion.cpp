#include "dgl/insertion.hpp"

#include <algorithm>
#include <queue>

#include "dgl/oracle.hpp"

namespace dgl {

namespace {

void require_valid(const Digraph& d, const VertexSequence& s, const char* what) {
    auto check = validate_sequence(d, s);
    if (!check.ok) throw GraphError(std::string(what) + ": " + check.reason);
}

void require_off(const VertexSequence& s, int x, const char* what) {
    if (std::find(s.vertices.begin(), s.vertices.end(), x) != s.vertices.end())
        throw GraphError(std::string(what) + ": vertex " + std::to_string(x) +
                         " lies on the sequence");
}

}  // namespace

std::optional<int> find_partner(const Digraph& d, const VertexSequence& path, int x) {
    require_valid(d, path, "find_partner");
    require_off(path, x, "find_partner");
    const auto& vs = path.vertices;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (d.has_arc(vs[i], x) && d.has_arc(x, vs[i + 1]))
            return static_cast<int>(i) + 1;
    return std::nullopt;
}

std::optional<VertexSequence> insert_vertex(const Digraph& d,
                                            const VertexSequence& path, int x) {
    auto i = find_partner(d, path, x);
    if (!i) return std::nullopt;
    VertexSequence out = path;
    out.vertices.insert(out.vertices.begin() + *i, x);
    return out;
}

std::map<int, VertexSequence> lemma1_spectrum(const Digraph& d,
                                              const VertexSequence& cycle, int x) {
    if (cycle.kind != VertexSequence::Kind::Cycle)
        throw GraphError("lemma1_spectrum needs a cycle");
    require_valid(d, cycle, "lemma1_spectrum");
    require_off(cycle, x, "lemma1_spectrum");
    const auto& vs = cycle.vertices;
    const int m = cycle.length();
    int deg = d.degrees_masked(x, to_mask(vs)).total();
    if (deg < m + 1)
        throw GraphError("lemma1_spectrum: d(x,C) = " + std::to_string(deg) +
                         " below the required " + std::to_string(m + 1));
    std::map<int, VertexSequence> result;
    for (int q = 0; q < m; ++q) {
        if (!d.has_arc(x, vs[q])) continue;
        for (int p = 0; p < m; ++p) {
            if (!d.has_arc(vs[p], x)) continue;
            int k = (p - q + m) % m + 2;
            if (result.count(k)) continue;
            VertexSequence w{VertexSequence::Kind::Cycle, {x}};
            for (int i = q;; i = (i + 1) % m) {
                w.vertices.push_back(vs[i]);
                if (i == p) break;
            }
            result.emplace(k, std::move(w));
        }
    }
    return result;
}

Lemma3Result lemma3_bound(const Digraph& d, const VertexSequence& path, int x, int y) {
    require_valid(d, path, "lemma3_bound");
    require_off(path, x, "lemma3_bound");
    require_off(path, y, "lemma3_bound");
    const auto& vs = path.vertices;
    Lemma3Result r;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (d.has_arc(vs[i], x) && d.has_arc(y, vs[i + 1])) {
            r.pattern_found = true;
            break;
        }
    std::uint64_t pmask = to_mask(vs);
    r.lhs = d.degrees_masked(x, pmask).in + d.degrees_masked(y, pmask).out;
    r.rhs = path.length() + (d.has_arc(vs.back(), x) ? 1 : 0);
    r.satisfied = r.pattern_found || r.lhs <= r.rhs;
    return r;
}

std::optional<Bypass> find_min_gap_bypass(const Digraph& d,
                                          const VertexSequence& cycle,
                                          bool three_vertex_only) {
    if (cycle.kind != VertexSequence::Kind::Cycle)
        throw GraphError("find_min_gap_bypass needs a cycle");
    require_valid(d, cycle, "find_min_gap_bypass");
    const auto& vs = cycle.vertices;
    const int m = cycle.length();
    std::vector<int> off = from_mask(d.vertex_bits() & ~to_mask(vs));
    if (off.empty())
        throw GraphError("find_min_gap_bypass: the cycle spans every vertex");

    // Candidate endpoint pairs by (gap, start label, end label).
    struct Cand {
        int gap, start, end;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < m; ++i)
        for (int g = 1; g < m; ++g) cands.push_back({g, vs[i], vs[(i + g) % m]});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return std::tie(a.gap, a.start, a.end) < std::tie(b.gap, b.start, b.end);
    });

    const std::uint64_t off_mask = to_mask(off);
    for (const auto& c : cands) {
        if (three_vertex_only) {
            std::uint64_t mid = d.out_bits(c.start) & d.in_bits(c.end) & off_mask;
            if (mid) return Bypass{c.start, c.end, {from_mask(mid).front()}, c.gap};
            continue;
        }
        // BFS through off-cycle vertices from start toward end; smallest
        // labels first so the internal path is reproducible.
        std::vector<int> pred(d.order() + 1, 0);
        std::vector<int> frontier = from_mask(d.out_bits(c.start) & off_mask);
        for (int v : frontier) pred[v] = c.start;
        std::uint64_t seen = to_mask(frontier);
        while (!frontier.empty()) {
            for (int v : frontier)
                if (d.has_arc(v, c.end)) {
                    std::vector<int> internals;
                    for (int u = v; u != c.start; u = pred[u]) internals.push_back(u);
                    std::reverse(internals.begin(), internals.end());
                    return Bypass{c.start, c.end, std::move(internals), c.gap};
                }
            std::vector<int> next;
            for (int v : frontier) {
                std::uint64_t fresh = d.out_bits(v) & off_mask & ~seen;
                seen |= fresh;
                for (int u : from_mask(fresh)) {
                    pred[u] = v;
                    next.push_back(u);
                }
            }
            std::sort(next.begin(), next.end());
            frontier = std::move(next);
        }
    }
    return std::nullopt;
}

ExtensionState make_state(const Digraph& d, const VertexSequence& cycle) {
    if (cycle.kind != VertexSequence::Kind::Cycle)
        throw GraphError("make_state needs a cycle");
    require_valid(d, cycle, "make_state");
    ExtensionState st;
    st.cycle = cycle;
    st.off_cycle = from_mask(d.vertex_bits() & ~to_mask(cycle.vertices));
    return st;
}

std::optional<ExtensionState> extend_cycle(const Digraph& d,
                                           const ExtensionState& state) {
    require_valid(d, state.cycle, "extend_cycle");
    if (state.off_cycle.empty())
        throw GraphError("extend_cycle: no off-cycle vertices remain");
    const auto& vs = state.cycle.vertices;
    const int m = state.cycle.length();

    // Rule (a): insert the smallest insertable off-cycle vertex at its
    // first cyclic partner arc.
    for (int x : state.off_cycle)
        for (int i = 0; i < m; ++i)
            if (d.has_arc(vs[i], x) && d.has_arc(x, vs[(i + 1) % m])) {
                ExtensionState next = state;
                next.cycle.vertices.insert(next.cycle.vertices.begin() + i + 1, x);
                next.off_cycle.erase(
                    std::find(next.off_cycle.begin(), next.off_cycle.end(), x));
                next.trace.push_back(
                    {"insert", x, std::nullopt, next.cycle.vertices});
                return next;
            }

    // Rule (b): splice the minimum-gap bypass when it strictly lengthens.
    auto bp = find_min_gap_bypass(d, state.cycle);
    if (bp && static_cast<int>(bp->internals.size()) > bp->gap - 1) {
        int start_pos = int(std::find(vs.begin(), vs.end(), bp->start) - vs.begin());
        std::vector<int> next_cycle{bp->start};
        next_cycle.insert(next_cycle.end(), bp->internals.begin(),
                          bp->internals.end());
        for (int i = (start_pos + bp->gap) % m; vs[i] != bp->start; i = (i + 1) % m)
            next_cycle.push_back(vs[i]);
        ExtensionState next;
        next.cycle = {VertexSequence::Kind::Cycle, std::move(next_cycle)};
        next.off_cycle = from_mask(d.vertex_bits() & ~to_mask(next.cycle.vertices));
        next.trace = state.trace;
        next.trace.push_back({"bypass", 0, *bp, next.cycle.vertices});
        return next;
    }
    return std::nullopt;
}

namespace {

std::vector<VertexSequence> seed_cycles(const Digraph& d, std::size_t cap) {
    std::vector<VertexSequence> seeds;
    const int n = d.order();
    for (int x = 1; x <= n && seeds.size() < cap; ++x)
        for (int y = x + 1; y <= n && seeds.size() < cap; ++y)
            if (d.has_arc(x, y) && d.has_arc(y, x))
                seeds.push_back({VertexSequence::Kind::Cycle, {x, y}});
    for (int x = 1; x <= n && seeds.size() < cap; ++x)
        for (int u = x + 1; u <= n && seeds.size() < cap; ++u) {
            if (!d.has_arc(x, u)) continue;
            for (int v = x + 1; v <= n && seeds.size() < cap; ++v)
                if (v != u && d.has_arc(u, v) && d.has_arc(v, x))
                    seeds.push_back({VertexSequence::Kind::Cycle, {x, u, v}});
        }
    return seeds;
}

}  // namespace

LongCycleResult find_long_cycle(const Digraph& d, int oracle_budget) {
    const int n = d.order();
    if (n < 4) throw GraphError("find_long_cycle needs n >= 4");
    if (!d.is_strong()) throw GraphError("find_long_cycle needs a strong digraph");

    LongCycleResult result;
    ExtremalClass cls = recognize(d);
    if (cls.is_balanced_bipartite()) {
        result.outcome = LongCycleResult::Outcome::Extremal;
        result.extremal = cls;
        return result;
    }

    std::optional<ExtensionState> best;
    for (const auto& seed : seed_cycles(d, 200)) {
        ExtensionState st = make_state(d, seed);
        while (!st.off_cycle.empty()) {
            auto next = extend_cycle(d, st);
            if (!next) break;
            st = std::move(*next);
        }
        if (!best || st.cycle.length() > best->cycle.length()) best = std::move(st);
        if (best->cycle.length() == n) break;
    }
    if (best) result.trace = best->trace;

    if (best && best->cycle.length() == n) {
        result.outcome = LongCycleResult::Outcome::Hamiltonian;
        result.witness = best->cycle;
        return result;
    }
    if (n <= oracle_budget) {
        if (auto w = has_cycle_of_length(d, n)) {
            result.outcome = LongCycleResult::Outcome::Hamiltonian;
            result.witness = *w;
        } else if (auto w1 = has_cycle_of_length(d, n - 1)) {
            result.outcome = LongCycleResult::Outcome::NearCycle;
            result.witness = *w1;
        } else {
            result.outcome = LongCycleResult::Outcome::NoLongCycle;
        }
        return result;
    }
    if (best && best->cycle.length() == n - 1) {
        result.outcome = LongCycleResult::Outcome::NearCycle;
        result.witness = best->cycle;
        return result;
    }
    result.outcome = LongCycleResult::Outcome::Unresolved;
    return result;
}

nlohmann::json to_json(const Bypass& b) {
    return {{"start", b.start},
            {"end", b.end},
            {"internals", b.internals},
            {"gap", b.gap}};
}

nlohmann::json to_json(const std::vector<ExtensionStep>& trace) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& step : trace) {
        nlohmann::json j{{"rule", step.rule}, {"cycle_after", step.cycle_after}};
        if (step.rule == "insert")
            j["vertex"] = step.inserted;
        else if (step.bypass)
            j["bypass"] = to_json(*step.bypass);
        arr.push_back(std::move(j));
    }
    return arr;
}

nlohmann::json to_json(const LongCycleResult& r) {
    const char* name = nullptr;
    switch (r.outcome) {
        case LongCycleResult::Outcome::Hamiltonian: name = "hamiltonian"; break;
        case LongCycleResult::Outcome::NearCycle: name = "near_cycle"; break;
        case LongCycleResult::Outcome::Extremal: name = "extremal"; break;
        case LongCycleResult::Outcome::NoLongCycle: name = "no_long_cycle"; break;
        case LongCycleResult::Outcome::Unresolved: name = "unresolved"; break;
    }
    nlohmann::json j{{"outcome", name}, {"trace", to_json(r.trace)}};
    if (r.witness) j["witness"] = r.witness->vertices;
    if (r.extremal) {
        j["extremal"] = {{"p", r.extremal->p},
                         {"q", r.extremal->q},
                         {"minus_arc", r.extremal->tag ==
                                           ExtremalClass::Tag::CompleteBipartiteMinusArc}};
    }
    return j;
}

}  // namespace dgl
