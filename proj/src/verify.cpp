#include "dgl/verify.hpp"

#include <chrono>

#include "dgl/conditions.hpp"
#include "dgl/extremal.hpp"
#include "dgl/oracle.hpp"

namespace dgl {

namespace {

bool is_directed_n_cycle(const Digraph& d) {
    const int n = d.order();
    if (d.arc_count() != n) return false;
    for (int v = 1; v <= n; ++v)
        if (d.degrees(v).out != 1) return false;
    return d.is_strong();
}

bool hypothesis(TheoremId id, const Digraph& d) {
    if (!d.is_strong()) return false;
    switch (id) {
        case TheoremId::T1:
            return min_semidegree(d).value >= 2 && check_star(d).holds;
        case TheoremId::T2:
            return !is_directed_n_cycle(d) && check_star_star(d).holds;
        case TheoremId::ConjectureC:
            return check_theorem_c(d).holds;
    }
    return false;
}

// Extremal classes that excuse a missing (n-1)-cycle. Theorem 2 does not
// admit the minus-arc class; the conjecture explorer admits none.
bool extremal_excuse(TheoremId id, const Digraph& d) {
    if (id == TheoremId::ConjectureC) return false;
    ExtremalClass cls = recognize(d);
    if (cls.p != cls.q) return false;
    if (cls.tag == ExtremalClass::Tag::CompleteBipartite) return true;
    return id == TheoremId::T1 &&
           cls.tag == ExtremalClass::Tag::CompleteBipartiteMinusArc;
}

void classify(TheoremId id, const Digraph& d, VerificationReport& report) {
    ++report.digraphs_considered;
    if (!hypothesis(id, d)) return;
    ++report.hypothesis_satisfying;
    if (has_cycle_of_length(d, d.order() - 1)) {
        ++report.conclusion_holds;
    } else if (extremal_excuse(id, d)) {
        ++report.extremal_hits;
    } else {
        report.counterexamples.push_back(d.arcs());
    }
}

std::uint64_t mix_seed(std::uint64_t seed, long long i) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (std::uint64_t(i) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

VerificationReport run_campaign(TheoremId id, int n, const VerifyMode& mode) {
    if (n < 4) throw GraphError("verification needs n >= 4");
    VerificationReport report;
    report.theorem = id;
    report.n = n;
    report.mode = mode;
    auto t0 = std::chrono::steady_clock::now();
    if (mode.exhaustive) {
        enumerate_digraphs(n, [&](const Digraph& d) { classify(id, d, report); });
    } else {
        if (mode.samples < 1) throw GraphError("sampled mode needs samples >= 1");
        if (mode.densities.empty()) throw GraphError("sampled mode needs densities");
        for (long long i = 0; i < mode.samples; ++i) {
            double p = mode.densities[i % mode.densities.size()];
            classify(id, random_strong_digraph(n, p, mix_seed(mode.seed, i)), report);
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace

int code_bits(int n) { return n * (n - 1); }

Digraph digraph_from_code(int n, std::uint64_t code) {
    std::vector<std::pair<int, int>> arcs;
    int bit = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (u == v) continue;
            if ((code >> bit) & 1) arcs.emplace_back(u, v);
            ++bit;
        }
    return Digraph::build(n, arcs);
}

long long enumerate_digraphs(int n, const std::function<void(const Digraph&)>& visit) {
    if (n < 1) throw GraphError("enumerate_digraphs needs n >= 1");
    if (n > 5)
        throw GraphError("exhaustive enumeration is limited to n <= 5 (got n = " +
                         std::to_string(n) + ")");
    const std::uint64_t total = std::uint64_t{1} << code_bits(n);
    for (std::uint64_t code = 0; code < total; ++code)
        visit(digraph_from_code(n, code));
    return static_cast<long long>(total);
}

Digraph random_strong_digraph(int n, double arc_probability, std::uint64_t seed) {
    if (!(arc_probability > 0.0 && arc_probability < 1.0))
        throw GraphError("arc probability must lie strictly between 0 and 1");
    std::uint64_t state = mix_seed(seed, 0);
    if (state == 0) state = 1;  // xorshift fixed point
    auto next_unit = [&state]() {
        // xorshift-style; fixed here so fixtures do not depend on the
        // standard library's distribution internals
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return double(state >> 11) * 0x1.0p-53;
    };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<int, int>> arcs;
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v)
                if (u != v && next_unit() < arc_probability) arcs.emplace_back(u, v);
        Digraph d = Digraph::build(n, arcs);
        if (d.is_strong()) return d;
    }
    throw GraphError(
        "no strong digraph after 1000 draws; raise the arc probability");
}

VerificationReport verify_theorem_1(int n, const VerifyMode& mode) {
    return run_campaign(TheoremId::T1, n, mode);
}

VerificationReport verify_theorem_2(int n, const VerifyMode& mode) {
    return run_campaign(TheoremId::T2, n, mode);
}

VerificationReport explore_conjecture(int n, const VerifyMode& mode) {
    return run_campaign(TheoremId::ConjectureC, n, mode);
}

bool revalidate_counterexample(TheoremId theorem,
                               const std::vector<std::pair<int, int>>& arcs, int n) {
    Digraph d = Digraph::build(n, arcs);
    return hypothesis(theorem, d) && !has_cycle_of_length(d, n - 1) &&
           !extremal_excuse(theorem, d);
}

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "T1";
        case TheoremId::T2: return "T2";
        case TheoremId::ConjectureC: return "ConjectureC";
    }
    return "?";
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json mode;
    if (r.mode.exhaustive) {
        mode = {{"kind", "exhaustive"}};
    } else {
        mode = {{"kind", "sampled"},
                {"samples", r.mode.samples},
                {"seed", r.mode.seed},
                {"densities", r.mode.densities}};
    }
    nlohmann::json cex = nlohmann::json::array();
    for (const auto& arcs : r.counterexamples) {
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : arcs) edges.push_back({u, v});
        cex.push_back(edges);
    }
    return {{"theorem", theorem_name(r.theorem)},
            {"n", r.n},
            {"mode", mode},
            {"digraphs_considered", r.digraphs_considered},
            {"hypothesis_satisfying", r.hypothesis_satisfying},
            {"conclusion_holds", r.conclusion_holds},
            {"extremal_hits", r.extremal_hits},
            {"counterexamples", cex}};
}

}  // namespace dgl
