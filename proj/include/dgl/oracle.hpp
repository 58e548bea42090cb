#ifndef DGL_ORACLE_HPP
#define DGL_ORACLE_HPP

#include <chrono>
#include <map>
#include <optional>
#include <set>

#include "dgl/digraph.hpp"

namespace dgl {

/// Exact search exceeded its wall-clock budget. Never silently mapped to
/// "no cycle".
class OracleTimeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    std::chrono::milliseconds budget{10000};
};

struct CycleSpectrum {
    int n = 0;
    std::set<int> present;
    std::map<int, VertexSequence> witnesses;  // one per present length
};

/// Exact k-cycle existence via per-start subset dynamic programming over
/// vertices larger than the start, so each cycle is found rooted at its
/// minimum vertex. Deterministic witness choice.
std::optional<VertexSequence> has_cycle_of_length(const Digraph& d, int k,
                                                  const OracleOptions& opts = {});

CycleSpectrum spectrum(const Digraph& d, const OracleOptions& opts = {});

std::optional<VertexSequence> longest_non_hamiltonian_cycle(
    const Digraph& d, const OracleOptions& opts = {});

bool is_hamiltonian(const Digraph& d, const OracleOptions& opts = {});
bool is_pancyclic(const Digraph& d, const OracleOptions& opts = {});

}  // namespace dgl

#endif
