#include "dgl/oracle.hpp"

#include <algorithm>
#include <bit>

namespace dgl {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point at;
    std::uint64_t ticks = 0;

    void tick() {
        if ((++ticks & 0xFFFF) == 0 && Clock::now() > at)
            throw OracleTimeout("cycle search exceeded its time budget");
    }
};

// Per-start table: dp[sub] is the bitmask (0-based vertex bits) of possible
// path ends over the compressed subset sub of vertices above the start.
struct StartDp {
    int s = 0;
    std::vector<std::uint64_t> dp;

    std::uint64_t actual(std::uint64_t sub) const { return sub << (s + 1); }
};

void build_dp(const std::vector<std::uint64_t>& out, int n, int s, StartDp& table,
              Deadline& deadline) {
    const int t = n - 1 - s;
    table.s = s;
    table.dp.assign(std::size_t{1} << t, 0);
    const std::uint64_t allowed = ((t == 0 ? 0 : (~std::uint64_t{0} >> (64 - t))) << (s + 1));
    std::uint64_t first = out[s] & allowed;
    while (first) {
        int e = std::countr_zero(first);
        first &= first - 1;
        table.dp[std::uint64_t{1} << (e - s - 1)] |= std::uint64_t{1} << e;
    }
    const std::uint64_t limit = std::uint64_t{1} << t;
    for (std::uint64_t sub = 1; sub < limit; ++sub) {
        deadline.tick();
        std::uint64_t ends = table.dp[sub];
        if (!ends) continue;
        const std::uint64_t used = table.actual(sub);
        while (ends) {
            int e = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint64_t ext = out[e] & allowed & ~used;
            while (ext) {
                int v = std::countr_zero(ext);
                ext &= ext - 1;
                table.dp[sub | (std::uint64_t{1} << (v - s - 1))] |=
                    std::uint64_t{1} << v;
            }
        }
    }
}

// Walks the dp table backwards, always taking the smallest valid
// predecessor, and returns the cycle starting at s.
VertexSequence reconstruct(const std::vector<std::uint64_t>& in, const StartDp& table,
                           std::uint64_t sub, int e) {
    std::vector<int> rev{e};
    while (true) {
        std::uint64_t prev_sub = sub & ~(std::uint64_t{1} << (e - table.s - 1));
        if (prev_sub == 0) break;
        std::uint64_t cands = table.dp[prev_sub] & in[e];
        int p = std::countr_zero(cands);  // nonempty by dp construction
        sub = prev_sub;
        e = p;
        rev.push_back(p);
    }
    rev.push_back(table.s);
    std::reverse(rev.begin(), rev.end());
    for (int& v : rev) ++v;  // back to 1-based labels
    return {VertexSequence::Kind::Cycle, std::move(rev)};
}

struct Graph0 {
    int n;
    std::vector<std::uint64_t> out, in;
    explicit Graph0(const Digraph& d) : n(d.order()), out(n), in(n) {
        for (int v = 1; v <= n; ++v) {
            out[v - 1] = d.out_bits(v);
            in[v - 1] = d.in_bits(v);
        }
    }
};

}  // namespace

std::optional<VertexSequence> has_cycle_of_length(const Digraph& d, int k,
                                                  const OracleOptions& opts) {
    const int n = d.order();
    if (k < 2 || k > n)
        throw GraphError("cycle length " + std::to_string(k) + " outside [2," +
                         std::to_string(n) + "]");
    Graph0 g(d);
    Deadline deadline{Clock::now() + opts.budget};
    StartDp table;
    for (int s = 0; s + k <= n; ++s) {
        build_dp(g.out, n, s, table, deadline);
        const std::uint64_t limit = std::uint64_t{1} << (n - 1 - s);
        for (std::uint64_t sub = 1; sub < limit; ++sub) {
            if (std::popcount(sub) != k - 1) continue;
            std::uint64_t closing = table.dp[sub] & g.in[s];
            if (closing)
                return reconstruct(g.in, table, sub, std::countr_zero(closing));
        }
    }
    return std::nullopt;
}

CycleSpectrum spectrum(const Digraph& d, const OracleOptions& opts) {
    const int n = d.order();
    CycleSpectrum result;
    result.n = n;
    if (n < 2) return result;
    Graph0 g(d);
    Deadline deadline{Clock::now() + opts.budget};
    StartDp table;
    for (int s = 0; s < n - 1; ++s) {
        if (static_cast<int>(result.present.size()) == n - 1) break;
        build_dp(g.out, n, s, table, deadline);
        const std::uint64_t limit = std::uint64_t{1} << (n - 1 - s);
        for (std::uint64_t sub = 1; sub < limit; ++sub) {
            std::uint64_t closing = table.dp[sub] & g.in[s];
            if (!closing) continue;
            int k = std::popcount(sub) + 1;
            if (result.present.insert(k).second)
                result.witnesses.emplace(
                    k, reconstruct(g.in, table, sub, std::countr_zero(closing)));
        }
    }
    return result;
}

std::optional<VertexSequence> longest_non_hamiltonian_cycle(
    const Digraph& d, const OracleOptions& opts) {
    CycleSpectrum sp = spectrum(d, opts);
    for (auto it = sp.present.rbegin(); it != sp.present.rend(); ++it)
        if (*it <= d.order() - 1) return sp.witnesses.at(*it);
    return std::nullopt;
}

bool is_hamiltonian(const Digraph& d, const OracleOptions& opts) {
    if (d.order() < 2) return false;
    return has_cycle_of_length(d, d.order(), opts).has_value();
}

bool is_pancyclic(const Digraph& d, const OracleOptions& opts) {
    if (d.order() < 3) return false;
    CycleSpectrum sp = spectrum(d, opts);
    for (int k = 3; k <= d.order(); ++k)
        if (!sp.present.count(k)) return false;
    return true;
}

}  // namespace dgl
