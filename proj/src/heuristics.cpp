#include "desim/heuristics.hpp"

#include "desim/common.hpp"

namespace desim {

namespace {

const char* const kNames[kHeuristicCount] = {"RA", "CT", "CV", "CE", "FE", "LA"};

} // namespace

const char* heuristic_name(Heuristic h) {
    return kNames[static_cast<int>(h)];
}

Heuristic heuristic_from_string(const std::string& s) {
    for (int i = 0; i < kHeuristicCount; ++i)
        if (s == kNames[i]) return static_cast<Heuristic>(i);
    fail("unknown heuristic '", s, "'");
}

double dist_to_nearest(const RegionGraph& graph, std::size_t from,
                       const std::vector<char>& flags) {
    double best = kInf;
    for (std::size_t j = 0; j < graph.size(); ++j) {
        if (!flags[j]) continue;
        const double d = graph.hop_dist(from, j);
        if (d < best) best = d;
    }
    return best;
}

namespace {

// First neighbor (ascending id) maximizing `value`; strict comparison
// keeps ties at the lowest id.
int argbest(const RegionGraph& graph, int current,
            const std::function<double(std::size_t)>& value) {
    const auto& nbrs = graph.neighbors(current);
    int best_id = nbrs.front();
    double best = value(graph.index_of(best_id));
    for (std::size_t i = 1; i < nbrs.size(); ++i) {
        const double v = value(graph.index_of(nbrs[i]));
        if (v > best) {
            best = v;
            best_id = nbrs[i];
        }
    }
    return best_id;
}

std::vector<char> entrance_flags(const RegionGraph& graph) {
    std::vector<char> f(graph.size(), 0);
    for (std::size_t i = 0; i < graph.size(); ++i)
        f[i] = graph.region_at(i).is_entrance ? 1 : 0;
    return f;
}

std::vector<char> target_flags(const TransitionContext& ctx,
                               const RegionGraph& graph) {
    std::vector<char> f(graph.size(), 0);
    for (std::size_t i = 0; i < graph.size(); ++i)
        f[i] = ctx.target_in(i) ? 1 : 0;
    return f;
}

bool any_set(const std::vector<char>& flags) {
    for (char c : flags)
        if (c) return true;
    return false;
}

} // namespace

int heuristic_next(Heuristic kind, const TransitionContext& ctx,
                   const RegionGraph& graph, Rng& rng) {
    const auto& nbrs = graph.neighbors(ctx.current);
    if (nbrs.empty()) fail("heuristic_next: region ", ctx.current,
                           " has no neighbors");

    auto uniform = [&]() {
        return nbrs[rng.uniform_int(nbrs.size())];
    };

    switch (kind) {
        case Heuristic::RA:
            return uniform();
        case Heuristic::CT: {
            const auto flags = target_flags(ctx, graph);
            if (!any_set(flags)) return uniform();
            return argbest(graph, ctx.current, [&](std::size_t i) {
                return -dist_to_nearest(graph, i, flags);
            });
        }
        case Heuristic::CV: {
            if (ctx.previous < 0) return uniform();
            return argbest(graph, ctx.current, [&](std::size_t i) {
                return direction_similarity(ctx, i, graph);
            });
        }
        case Heuristic::CE:
        case Heuristic::FE: {
            const auto flags = entrance_flags(graph);
            if (!any_set(flags)) return uniform();
            const double sign = kind == Heuristic::CE ? -1.0 : 1.0;
            return argbest(graph, ctx.current, [&](std::size_t i) {
                return sign * dist_to_nearest(graph, i, flags);
            });
        }
        case Heuristic::LA:
            return argbest(graph, ctx.current, [&](std::size_t i) {
                return graph.region_at(i).area;
            });
    }
    fail("bad heuristic kind");
}

} // namespace desim
