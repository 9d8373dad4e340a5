#include "desim/region_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <iostream>
#include <queue>
#include <set>

#include "desim/common.hpp"
#include "json.hpp"

namespace desim {

namespace {

const char* const kGroupNames[kGroupCount] = {"classroom", "hallway", "common",
                                              "stairwell", "entrance", "outdoor"};

} // namespace

Group group_from_string(const std::string& s) {
    for (int i = 0; i < kGroupCount; ++i)
        if (s == kGroupNames[i]) return static_cast<Group>(i);
    fail("unknown region group '", s, "'");
}

const char* group_name(Group g) {
    return kGroupNames[static_cast<int>(g)];
}

std::size_t RegionGraph::index_of(int id) const {
    const auto it = id_to_idx_.find(id);
    if (it == id_to_idx_.end()) fail("unknown region id ", id);
    return it->second;
}

RegionGraph RegionGraph::build(std::vector<Region> regions,
                               std::vector<std::pair<int, int>> directed_edges) {
    RegionGraph g;
    g.regions_ = std::move(regions);
    for (std::size_t i = 0; i < g.regions_.size(); ++i) {
        const Region& r = g.regions_[i];
        if (r.id < 0) fail("region id must be non-negative, got ", r.id);
        if (!g.id_to_idx_.emplace(r.id, i).second)
            fail("duplicate region id ", r.id);
        if (!(r.area > 0.0)) fail("region ", r.id, ": area must be positive");
        if (r.is_outside && r.group != Group::outdoor)
            fail("region ", r.id, ": is_outside requires group outdoor");
        if (r.is_entrance && r.group != Group::entrance)
            fail("region ", r.id, ": is_entrance requires group entrance");
    }

    const std::size_t n = g.regions_.size();
    std::vector<std::set<int>> adj(n);
    for (const auto& [from, to] : directed_edges) {
        if (!g.has_region(from)) fail("edge references unknown region id ", from);
        if (!g.has_region(to)) fail("edge references unknown region id ", to);
        if (from == to) continue;
        adj[g.index_of(from)].insert(to);
    }

    g.out_ids_.resize(n);
    g.out_idx_.resize(n);
    g.in_idx_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.out_ids_[i].assign(adj[i].begin(), adj[i].end());
        for (int id : g.out_ids_[i]) {
            const std::size_t j = g.index_of(id);
            g.out_idx_[i].push_back(j);
            g.in_idx_[j].push_back(i);
            ++g.edge_count_;
        }
    }
    for (auto& ins : g.in_idx_) std::sort(ins.begin(), ins.end());

    g.finalize();
    return g;
}

void RegionGraph::finalize() {
    compute_hops();
    compute_euclid();
    compute_betweenness();

    const std::size_t n = regions_.size();
    closeness_.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const int h = hops(i, j);
            if (h > 0) acc += 1.0 / h;
        }
        closeness_[i] = n > 1 ? acc / static_cast<double>(n - 1) : 0.0;
    }

    max_area_ = 0.0;
    for (const Region& r : regions_) max_area_ = std::max(max_area_, r.area);

    for (std::size_t i = 0; i < n; ++i) {
        if (!regions_[i].is_outside && out_idx_[i].empty())
            std::cerr << "warning: region " << regions_[i].id
                      << " has no outgoing edges\n";
    }
}

void RegionGraph::compute_hops() {
    const std::size_t n = regions_.size();
    hop_.assign(n * n, -1);
    diameter_ = 0;
    std::deque<std::size_t> q;
    for (std::size_t s = 0; s < n; ++s) {
        int* row = hop_.data() + s * n;
        row[s] = 0;
        q.clear();
        q.push_back(s);
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop_front();
            for (std::size_t v : out_idx_[u]) {
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    diameter_ = std::max(diameter_, row[v]);
                    q.push_back(v);
                }
            }
        }
    }
}

void RegionGraph::compute_euclid() {
    const std::size_t n = regions_.size();
    euclid_.assign(n * n, kInf);
    auto edge_len = [this](std::size_t a, std::size_t b) {
        const double dx = regions_[a].cx - regions_[b].cx;
        const double dy = regions_[a].cy - regions_[b].cy;
        return std::sqrt(dx * dx + dy * dy);
    };
    using Item = std::pair<double, std::size_t>;
    for (std::size_t s = 0; s < n; ++s) {
        double* row = euclid_.data() + s * n;
        row[s] = 0.0;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        pq.emplace(0.0, s);
        while (!pq.empty()) {
            const auto [d, u] = pq.top();
            pq.pop();
            if (d > row[u]) continue;
            for (std::size_t v : out_idx_[u]) {
                const double nd = d + edge_len(u, v);
                if (nd < row[v]) {
                    row[v] = nd;
                    pq.emplace(nd, v);
                }
            }
        }
    }
}

// Brandes' algorithm over ordered source-target pairs; scores divide by
// (n-1)(n-2), the number of such pairs excluding the node itself.
void RegionGraph::compute_betweenness() {
    const std::size_t n = regions_.size();
    betweenness_.assign(n, 0.0);
    if (n < 3) return;

    std::vector<double> sigma(n), delta(n);
    std::vector<int> dist(n);
    std::vector<std::vector<std::size_t>> pred(n);
    std::vector<std::size_t> order;
    order.reserve(n);
    std::deque<std::size_t> q;

    for (std::size_t s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        for (auto& p : pred) p.clear();
        order.clear();
        sigma[s] = 1.0;
        dist[s] = 0;
        q.clear();
        q.push_back(s);
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop_front();
            order.push_back(u);
            for (std::size_t v : out_idx_[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
                if (dist[v] == dist[u] + 1) {
                    sigma[v] += sigma[u];
                    pred[v].push_back(u);
                }
            }
        }
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::size_t w = *it;
            for (std::size_t v : pred[w])
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) betweenness_[w] += delta[w];
        }
    }

    const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2);
    for (double& b : betweenness_) b /= norm;
}

namespace {

using nlohmann::json;

double num_field(const json& obj, const char* key, int id) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail("region ", id, ": missing field '", key, "'");
    if (!it->is_number()) fail("region ", id, ": field '", key, "' not numeric");
    return it->get<double>();
}

} // namespace

RegionGraph RegionGraph::from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail("layout parse error: ", e.what());
    }
    if (!doc.is_object() || !doc.contains("regions") || !doc.contains("edges"))
        fail("layout document needs top-level 'regions' and 'edges'");

    std::vector<Region> regions;
    for (const auto& item : doc["regions"]) {
        if (!item.is_object()) fail("layout: region entry is not an object");
        Region r;
        if (!item.contains("id") || !item["id"].is_number_integer())
            fail("layout: region missing integer 'id'");
        r.id = item["id"].get<int>();
        if (!item.contains("group") || !item["group"].is_string())
            fail("region ", r.id, ": missing string 'group'");
        r.group = group_from_string(item["group"].get<std::string>());
        r.name = item.value("name", msg("r", r.id));
        r.floor = item.contains("floor")
                      ? static_cast<int>(num_field(item, "floor", r.id))
                      : 0;
        if (item.contains("centroid")) {
            const auto& c = item["centroid"];
            if (!c.is_array() || c.size() != 2)
                fail("region ", r.id, ": centroid must be [x, y]");
            r.cx = c[0].get<double>();
            r.cy = c[1].get<double>();
        }
        r.area = num_field(item, "area", r.id);
        r.is_entrance = item.value("is_entrance", r.group == Group::entrance);
        r.is_outside = item.value("is_outside", r.group == Group::outdoor);
        regions.push_back(std::move(r));
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        int from, to;
        bool directed = false;
        if (e.is_array() && e.size() == 2) {
            from = e[0].get<int>();
            to = e[1].get<int>();
        } else if (e.is_object()) {
            if (!e.contains("from") || !e.contains("to"))
                fail("layout: edge object needs 'from' and 'to'");
            from = e["from"].get<int>();
            to = e["to"].get<int>();
            directed = e.value("directed", false);
        } else {
            fail("layout: edge must be [from, to] or an object");
        }
        edges.emplace_back(from, to);
        if (!directed) edges.emplace_back(to, from);
    }

    return build(std::move(regions), std::move(edges));
}

RegionGraph RegionGraph::load_file(const std::string& path) {
    return from_json(read_file(path));
}

} // namespace desim
