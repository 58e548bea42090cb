#include "dgl/conditions.hpp"

#include <bit>

namespace dgl {

namespace {

std::optional<int> smallest_bit(std::uint64_t mask) {
    if (!mask) return std::nullopt;
    return std::countr_zero(mask) + 1;
}

GoodPair make_pair(const Digraph& d, int x, int y) {
    GoodPair p{x, y, {}, {}};
    p.common_in = smallest_bit(d.in_bits(x) & d.in_bits(y));
    p.common_out = smallest_bit(d.out_bits(x) & d.out_bits(y));
    return p;
}

template <typename CheckFn>
ConditionReport check_good_pairs(const Digraph& d, ConditionId id, PairMode mode,
                                 CheckFn&& check) {
    ConditionReport r;
    r.condition = id;
    for (const auto& p : good_pairs(d, mode)) {
        ++r.pairs_checked;
        if (auto measurements = check(p); !measurements.empty())
            r.violations.push_back({p, std::move(measurements)});
    }
    r.holds = r.violations.empty();
    return r;
}

}  // namespace

std::vector<GoodPair> good_pairs(const Digraph& d, PairMode mode) {
    std::vector<GoodPair> out;
    for (int x = 1; x <= d.order(); ++x)
        for (int y = x + 1; y <= d.order(); ++y) {
            if (d.adjacency_count(x, y) != 0) continue;
            GoodPair p = make_pair(d, x, y);
            bool wanted = mode == PairMode::InOnly
                              ? p.common_in.has_value()
                              : p.common_in.has_value() || p.common_out.has_value();
            if (wanted) out.push_back(std::move(p));
        }
    return out;
}

ConditionReport check_star(const Digraph& d) {
    const int n = d.order();
    return check_good_pairs(d, ConditionId::Star, PairMode::InOnly,
                            [&](const GoodPair& p) -> std::map<std::string, int> {
                                int dx = d.degrees(p.x).total();
                                int dy = d.degrees(p.y).total();
                                if (dx + dy >= 2 * n - 1 && std::min(dx, dy) >= n - 1)
                                    return {};
                                return {{"d_x", dx}, {"d_y", dy}};
                            });
}

ConditionReport check_star_star(const Digraph& d) {
    const int n = d.order();
    return check_good_pairs(d, ConditionId::StarStar, PairMode::InOrOut,
                            [&](const GoodPair& p) -> std::map<std::string, int> {
                                Degrees dx = d.degrees(p.x);
                                Degrees dy = d.degrees(p.y);
                                if (std::min(dx.out + dy.in, dx.in + dy.out) >= n)
                                    return {};
                                return {{"dout_x", dx.out},
                                        {"din_x", dx.in},
                                        {"dout_y", dy.out},
                                        {"din_y", dy.in}};
                            });
}

ConditionReport check_theorem_c(const Digraph& d) {
    const int n = d.order();
    return check_good_pairs(d, ConditionId::TheoremC, PairMode::InOrOut,
                            [&](const GoodPair& p) -> std::map<std::string, int> {
                                Degrees dx = d.degrees(p.x);
                                Degrees dy = d.degrees(p.y);
                                bool ok =
                                    std::min(dx.out + dy.in, dx.in + dy.out) >= n - 1 &&
                                    dx.total() + dy.total() >= 2 * n - 1;
                                if (ok) return {};
                                return {{"dout_x", dx.out},
                                        {"din_x", dx.in},
                                        {"dout_y", dy.out},
                                        {"din_y", dy.in}};
                            });
}

ConditionReport check_meyniel(const Digraph& d) {
    const int n = d.order();
    ConditionReport r;
    r.condition = ConditionId::Meyniel;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) {
            if (d.adjacency_count(x, y) != 0) continue;
            ++r.pairs_checked;
            int dx = d.degrees(x).total();
            int dy = d.degrees(y).total();
            if (dx + dy >= 2 * n - 1) continue;
            r.violations.push_back(
                {make_pair(d, x, y), {{"d_x", dx}, {"d_y", dy}}});
        }
    r.holds = r.violations.empty();
    return r;
}

MinSemidegree min_semidegree(const Digraph& d) {
    MinSemidegree best{d.order() + 1, 0, DegreeSide::Out};
    for (int v = 1; v <= d.order(); ++v) {
        Degrees deg = d.degrees(v);
        if (deg.out < best.value) best = {deg.out, v, DegreeSide::Out};
        if (deg.in < best.value) best = {deg.in, v, DegreeSide::In};
    }
    return best;
}

std::string condition_name(ConditionId id) {
    switch (id) {
        case ConditionId::Meyniel: return "Meyniel";
        case ConditionId::Star: return "Star";
        case ConditionId::StarStar: return "StarStar";
        case ConditionId::TheoremC: return "TheoremC";
    }
    return "?";
}

nlohmann::json to_json(const ConditionReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations) {
        nlohmann::json witness = nullptr;
        std::string kind = "none";
        if (v.pair.common_in) {
            witness = *v.pair.common_in;
            kind = "common_in";
        } else if (v.pair.common_out) {
            witness = *v.pair.common_out;
            kind = "common_out";
        }
        violations.push_back({{"x", v.pair.x},
                              {"y", v.pair.y},
                              {"witness", witness},
                              {"kind", kind},
                              {"measurements", v.measurements}});
    }
    return {{"condition", condition_name(r.condition)},
            {"holds", r.holds},
            {"pairs_checked", r.pairs_checked},
            {"violations", violations}};
}

}  // namespace dgl
