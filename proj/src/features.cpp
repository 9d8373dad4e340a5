#include "desim/features.hpp"

#include <algorithm>
#include <cmath>

#include "desim/common.hpp"

namespace desim {

double direction_similarity(const TransitionContext& ctx, std::size_t cand_idx,
                            const RegionGraph& graph) {
    if (ctx.previous < 0) return 0.0;
    const Region& prev = graph.region(ctx.previous);
    const Region& cur = graph.region(ctx.current);
    const Region& cand = graph.region_at(cand_idx);
    const double ux = cur.cx - prev.cx, uy = cur.cy - prev.cy;
    const double vx = cand.cx - cur.cx, vy = cand.cy - cur.cy;
    const double nu = std::sqrt(ux * ux + uy * uy);
    const double nv = std::sqrt(vx * vx + vy * vy);
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return (ux * vx + uy * vy) / (nu * nv);
}

double recency(const TransitionContext& ctx, std::size_t cand_idx) {
    const double last = ctx.last_visit(cand_idx);
    if (last < 0.0) return 0.0;
    const double dt = std::max(0.0, ctx.elapsed_s - last);
    return std::exp(-dt / kRecencyTau);
}

void FeatureRegistry::add(FeatureDef def) {
    for (const auto& d : defs_)
        if (d.name == def.name) fail("duplicate feature '", def.name, "'");
    defs_.push_back(std::move(def));
}

const FeatureDef& FeatureRegistry::get(const std::string& name) const {
    for (const auto& d : defs_)
        if (d.name == name) return d;
    fail("unknown feature '", name, "'");
}

std::vector<std::string> FeatureRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(defs_.size());
    for (const auto& d : defs_) out.push_back(d.name);
    return out;
}

FeatureRegistry FeatureRegistry::standard() {
    FeatureRegistry r;
    r.add({"direction_similarity", true,
           [](const TransitionContext& c, std::size_t i, const RegionGraph& g) {
               return direction_similarity(c, i, g);
           }});
    r.add({"recency", true,
           [](const TransitionContext& c, std::size_t i, const RegionGraph&) {
               return recency(c, i);
           }});
    r.add({"has_target", true,
           [](const TransitionContext& c, std::size_t i, const RegionGraph&) {
               return c.target_in(i) ? 1.0 : 0.0;
           }});
    r.add({"betweenness", false,
           [](const TransitionContext&, std::size_t i, const RegionGraph& g) {
               return g.betweenness(i);
           }});
    r.add({"is_entrance", false,
           [](const TransitionContext&, std::size_t i, const RegionGraph& g) {
               return g.region_at(i).is_entrance ? 1.0 : 0.0;
           }});
    r.add({"is_outside", false,
           [](const TransitionContext&, std::size_t i, const RegionGraph& g) {
               return g.region_at(i).is_outside ? 1.0 : 0.0;
           }});
    r.add({"degree", false,
           [](const TransitionContext&, std::size_t i, const RegionGraph& g) {
               std::size_t max_deg = 1;
               for (std::size_t j = 0; j < g.size(); ++j)
                   max_deg = std::max(max_deg, g.out_indices(j).size());
               return static_cast<double>(g.out_indices(i).size()) /
                      static_cast<double>(max_deg);
           }});
    r.add({"closeness", false,
           [](const TransitionContext&, std::size_t i, const RegionGraph& g) {
               return g.closeness(i);
           }});
    r.add({"area_norm", false,
           [](const TransitionContext&, std::size_t i, const RegionGraph& g) {
               return g.region_at(i).area / g.max_area();
           }});
    r.add({"same_floor", true,
           [](const TransitionContext& c, std::size_t i, const RegionGraph& g) {
               return g.region_at(i).floor == g.region(c.current).floor ? 1.0
                                                                        : 0.0;
           }});
    return r;
}

std::vector<double> compute_features(const TransitionContext& ctx,
                                     int candidate_id,
                                     const RegionGraph& graph,
                                     const FeatureRegistry& registry) {
    const auto& nbrs = graph.neighbors(ctx.current);
    if (std::find(nbrs.begin(), nbrs.end(), candidate_id) == nbrs.end())
        fail("candidate ", candidate_id, " not adjacent to ", ctx.current);
    const std::size_t idx = graph.index_of(candidate_id);
    std::vector<double> out;
    out.reserve(registry.all().size());
    for (const auto& d : registry.all()) out.push_back(d.fn(ctx, idx, graph));
    return out;
}

Eigen::MatrixXd default_static_features(const RegionGraph& graph) {
    const auto n = static_cast<Eigen::Index>(graph.size());
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n, kDefaultStaticWidth);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Region& r = graph.region_at(static_cast<std::size_t>(i));
        X(i, static_cast<int>(r.group)) = 1.0;
        X(i, kGroupCount + 0) = graph.betweenness(static_cast<std::size_t>(i));
        X(i, kGroupCount + 1) = r.area / graph.max_area();
        X(i, kGroupCount + 2) = r.is_entrance ? 1.0 : 0.0;
        X(i, kGroupCount + 3) = r.is_outside ? 1.0 : 0.0;
        X(i, kGroupCount + 4) = static_cast<double>(r.floor);
    }
    return X;
}

Eigen::MatrixXd registry_static_features(const RegionGraph& graph,
                                         const FeatureRegistry& registry,
                                         const std::vector<std::string>& names) {
    const auto n = static_cast<Eigen::Index>(graph.size());
    if (names.empty()) return Eigen::MatrixXd::Ones(n, 1);

    TransitionContext dummy;
    dummy.current = graph.region_at(0).id;
    Eigen::MatrixXd X(n, static_cast<Eigen::Index>(names.size()));
    for (std::size_t f = 0; f < names.size(); ++f) {
        const FeatureDef& def = registry.get(names[f]);
        if (def.dynamic)
            fail("feature '", def.name, "' is dynamic, not a node attribute");
        for (Eigen::Index i = 0; i < n; ++i)
            X(i, static_cast<Eigen::Index>(f)) =
                def.fn(dummy, static_cast<std::size_t>(i), graph);
    }
    return X;
}

} // namespace desim
