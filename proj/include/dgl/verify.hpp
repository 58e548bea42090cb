#ifndef DGL_VERIFY_HPP
#define DGL_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dgl/digraph.hpp"

namespace dgl {

enum class TheoremId { T1, T2, ConjectureC };

struct VerifyMode {
    bool exhaustive = true;
    long long samples = 0;           // sampled mode
    std::uint64_t seed = 0;          // sampled mode
    std::vector<double> densities{0.3, 0.5, 0.7, 0.9};
};

inline VerifyMode exhaustive_mode() { return {}; }
inline VerifyMode sampled_mode(long long samples, std::uint64_t seed) {
    VerifyMode m;
    m.exhaustive = false;
    m.samples = samples;
    m.seed = seed;
    return m;
}

struct VerificationReport {
    TheoremId theorem = TheoremId::T1;
    int n = 0;
    VerifyMode mode;
    long long digraphs_considered = 0;
    long long hypothesis_satisfying = 0;
    long long conclusion_holds = 0;  // the (n-1)-cycle exists
    long long extremal_hits = 0;     // saved by the extremal class instead
    // For the conjecture these are candidate exceptional digraphs, not
    // refutations; the counts always partition hypothesis_satisfying.
    std::vector<std::vector<std::pair<int, int>>> counterexamples;
    double elapsed_seconds = 0.0;
};

/// Visits every labeled loop-free digraph on n vertices once, in integer
/// encoding order (one bit per ordered pair, row-major). n <= 5 only.
long long enumerate_digraphs(int n, const std::function<void(const Digraph&)>& visit);

/// Encoding helpers matching enumerate_digraphs' bit order.
Digraph digraph_from_code(int n, std::uint64_t code);
int code_bits(int n);

/// Independent arcs with the given probability, resampled until strong.
/// Deterministic in the seed; gives up after 1000 non-strong draws.
Digraph random_strong_digraph(int n, double arc_probability, std::uint64_t seed);

VerificationReport verify_theorem_1(int n, const VerifyMode& mode);
VerificationReport verify_theorem_2(int n, const VerifyMode& mode);
VerificationReport explore_conjecture(int n, const VerifyMode& mode);

/// Re-checks a serialized counterexample/candidate from scratch: hypothesis
/// must hold and the (n-1)-cycle must be absent.
bool revalidate_counterexample(TheoremId theorem,
                               const std::vector<std::pair<int, int>>& arcs, int n);

/// Elapsed time is deliberately left out so identical runs serialize to
/// identical bytes.
nlohmann::json to_json(const VerificationReport& r);

std::string theorem_name(TheoremId id);

}  // namespace dgl

#endif
