#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace desim {

enum class Group { classroom, hallway, common, stairwell, entrance, outdoor };
inline constexpr int kGroupCount = 6;

Group group_from_string(const std::string& s);
const char* group_name(Group g);

struct Region {
    int id = 0;
    std::string name;
    Group group = Group::classroom;
    int floor = 0;
    double cx = 0.0, cy = 0.0;
    double area = 0.0;
    bool is_entrance = false;
    bool is_outside = false;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Immutable after construction; derived metrics (hop matrix, euclidean
// matrix, betweenness, closeness) are computed eagerly so the graph can be
// shared read-only across rollout workers.
class RegionGraph {
public:
    static RegionGraph from_json(const std::string& text);
    static RegionGraph load_file(const std::string& path);
    // Programmatic construction for tests and synthetic worlds. Edges are
    // directed pairs of region ids; use both directions for doorways.
    static RegionGraph build(std::vector<Region> regions,
                             std::vector<std::pair<int, int>> directed_edges);

    std::size_t size() const { return regions_.size(); }
    const Region& region_at(std::size_t idx) const { return regions_[idx]; }
    const Region& region(int id) const { return regions_[index_of(id)]; }
    std::size_t index_of(int id) const;
    bool has_region(int id) const { return id_to_idx_.count(id) != 0; }

    // Out-neighbor ids, ascending. Ascending id is the canonical order used
    // for tie-breaking everywhere downstream.
    const std::vector<int>& neighbors(int id) const {
        return out_ids_[index_of(id)];
    }
    const std::vector<std::size_t>& out_indices(std::size_t idx) const {
        return out_idx_[idx];
    }
    const std::vector<std::size_t>& in_indices(std::size_t idx) const {
        return in_idx_[idx];
    }
    std::size_t edge_count() const { return edge_count_; }

    // Minimum hop count, -1 when unreachable.
    int hops(std::size_t i, std::size_t j) const {
        return hop_[i * regions_.size() + j];
    }
    // Hop distance as a double, +inf when unreachable.
    double hop_dist(std::size_t i, std::size_t j) const {
        const int h = hops(i, j);
        return h < 0 ? kInf : static_cast<double>(h);
    }
    // Shortest path weighted by centroid-to-centroid edge lengths (meters),
    // +inf when unreachable.
    double euclid_dist(std::size_t i, std::size_t j) const {
        return euclid_[i * regions_.size() + j];
    }
    // Largest finite hop distance.
    int diameter() const { return diameter_; }

    double betweenness(std::size_t idx) const { return betweenness_[idx]; }
    // Harmonic form so disconnected pairs contribute zero.
    double closeness(std::size_t idx) const { return closeness_[idx]; }
    double max_area() const { return max_area_; }

private:
    void finalize();
    void compute_hops();
    void compute_euclid();
    void compute_betweenness();

    std::vector<Region> regions_;
    std::unordered_map<int, std::size_t> id_to_idx_;
    std::vector<std::vector<int>> out_ids_;
    std::vector<std::vector<std::size_t>> out_idx_;
    std::vector<std::vector<std::size_t>> in_idx_;
    std::size_t edge_count_ = 0;
    std::vector<int> hop_;
    std::vector<double> euclid_;
    std::vector<double> betweenness_;
    std::vector<double> closeness_;
    int diameter_ = 0;
    double max_area_ = 0.0;
};

} // namespace desim
