#ifndef DGL_CONDITIONS_HPP
#define DGL_CONDITIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dgl/digraph.hpp"

namespace dgl {

/// Non-adjacent pair {x,y} (x < y) with its common-neighbour witnesses.
/// A witness is the smallest qualifying label of its kind.
struct GoodPair {
    int x = 0;
    int y = 0;
    std::optional<int> common_in;
    std::optional<int> common_out;

    bool operator==(const GoodPair&) const = default;
};

enum class PairMode { InOnly, InOrOut };

/// All unordered non-adjacent pairs with at least one witness of the
/// requested kind, lexicographic by (x,y).
std::vector<GoodPair> good_pairs(const Digraph& d, PairMode mode);

enum class ConditionId { Meyniel, Star, StarStar, TheoremC };

struct Violation {
    GoodPair pair;
    // name -> measured quantity, e.g. {"d_x", 4}; std::map keeps JSON stable
    std::map<std::string, int> measurements;
};

struct ConditionReport {
    ConditionId condition = ConditionId::Star;
    bool holds = true;
    int pairs_checked = 0;
    std::vector<Violation> violations;
};

/// (*): d(x)+d(y) >= 2n-1 and min{d(x),d(y)} >= n-1 over in-witnessed pairs.
ConditionReport check_star(const Digraph& d);
/// (**): min{d+(x)+d-(y), d-(x)+d+(y)} >= n over in- or out-witnessed pairs.
ConditionReport check_star_star(const Digraph& d);
/// min-sum >= n-1 and d(x)+d(y) >= 2n-1 over in- or out-witnessed pairs.
ConditionReport check_theorem_c(const Digraph& d);
/// d(x)+d(y) >= 2n-1 over every non-adjacent pair, no witness needed.
ConditionReport check_meyniel(const Digraph& d);

enum class DegreeSide { Out, In };

struct MinSemidegree {
    int value = 0;
    int vertex = 0;
    DegreeSide side = DegreeSide::Out;
};

MinSemidegree min_semidegree(const Digraph& d);

std::string condition_name(ConditionId id);
nlohmann::json to_json(const ConditionReport& r);

}  // namespace dgl

#endif
