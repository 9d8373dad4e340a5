#include "desim/moments.hpp"

#include <algorithm>
#include <cmath>

#include "desim/common.hpp"
#include "json.hpp"

namespace desim {

namespace {

const char* const kOutcomeNames[kOutcomeCount] = {"time", "shots", "victims"};
const char* const kLevelNames[3] = {"region", "group", "global"};

struct Accum {
    long long n = 0;
    double sum = 0.0;
    double sumsq = 0.0;
    double max = 0.0;

    void add(double x) {
        ++n;
        sum += x;
        sumsq += x * x;
        max = std::max(max, x);
    }

    MomentCell cell() const {
        MomentCell c;
        c.n = n;
        if (n > 0) c.mean = sum / static_cast<double>(n);
        if (n > 1) {
            // Two-pass form is not available here; guard the subtraction.
            const double ss = sumsq - sum * sum / static_cast<double>(n);
            c.var = std::max(0.0, ss / static_cast<double>(n - 1));
        }
        c.max = max;
        return c;
    }
};

struct RateAccum {
    double dwell = 0.0;
    double shots = 0.0;
    double victims = 0.0;

    RateCell cell() const {
        RateCell r;
        if (dwell > 0.0) {
            r.shot_rate = shots / dwell;
            r.victim_rate = victims / dwell;
        }
        return r;
    }
};

} // namespace

const char* outcome_name(OutcomeKind o) {
    return kOutcomeNames[static_cast<int>(o)];
}

OutcomeKind outcome_from_string(const std::string& s) {
    for (int i = 0; i < kOutcomeCount; ++i)
        if (s == kOutcomeNames[i]) return static_cast<OutcomeKind>(i);
    fail("unknown outcome '", s, "'");
}

const char* level_name(PoolLevel l) {
    return kLevelNames[static_cast<int>(l)];
}

PoolLevel level_from_string(const std::string& s) {
    for (int i = 0; i < 3; ++i)
        if (s == kLevelNames[i]) return static_cast<PoolLevel>(i);
    fail("unknown pooling level '", s, "'");
}

const MomentCell& MomentTable::cell(PoolLevel level, std::size_t region_idx,
                                    Group g, OutcomeKind o) const {
    const int oi = static_cast<int>(o);
    switch (level) {
        case PoolLevel::region: return region[region_idx][oi];
        case PoolLevel::group: return group[static_cast<int>(g)][oi];
        case PoolLevel::global: return global[oi];
    }
    fail("bad pooling level");
}

const RateCell& MomentTable::rate(PoolLevel level, std::size_t region_idx,
                                  Group g) const {
    switch (level) {
        case PoolLevel::region: return region_rate[region_idx];
        case PoolLevel::group: return group_rate[static_cast<int>(g)];
        case PoolLevel::global: return global_rate;
    }
    fail("bad pooling level");
}

MomentTable pool_moments(const Corpus& corpus, const RegionGraph& graph) {
    if (corpus.episodes.empty()) fail("pool_moments: empty corpus");

    const std::size_t n = graph.size();
    std::vector<std::array<Accum, kOutcomeCount>> region_acc(n);
    std::array<std::array<Accum, kOutcomeCount>, kGroupCount> group_acc{};
    std::array<Accum, kOutcomeCount> global_acc{};
    std::vector<RateAccum> region_rate_acc(n);
    std::array<RateAccum, kGroupCount> group_rate_acc{};
    RateAccum global_rate_acc;

    for (const auto& ep : corpus.episodes) {
        for (const auto& v : ep.visits) {
            if (!v.has_dwell()) continue; // external sequences: timing unknown
            const std::size_t idx = graph.index_of(v.region_id);
            const int gi = static_cast<int>(graph.region_at(idx).group);
            const double vals[kOutcomeCount] = {v.dwell_s, v.shots, v.victims};
            for (int o = 0; o < kOutcomeCount; ++o) {
                region_acc[idx][o].add(vals[o]);
                group_acc[gi][o].add(vals[o]);
                global_acc[o].add(vals[o]);
            }
            auto feed = [&v](RateAccum& r) {
                r.dwell += v.dwell_s;
                r.shots += v.shots;
                r.victims += v.victims;
            };
            feed(region_rate_acc[idx]);
            feed(group_rate_acc[gi]);
            feed(global_rate_acc);
        }
    }

    MomentTable t;
    t.region.resize(n);
    t.region_rate.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (int o = 0; o < kOutcomeCount; ++o)
            t.region[i][o] = region_acc[i][o].cell();
        t.region_rate[i] = region_rate_acc[i].cell();
    }
    for (int g = 0; g < kGroupCount; ++g) {
        for (int o = 0; o < kOutcomeCount; ++o)
            t.group[g][o] = group_acc[g][o].cell();
        t.group_rate[g] = group_rate_acc[g].cell();
    }
    for (int o = 0; o < kOutcomeCount; ++o) t.global[o] = global_acc[o].cell();
    t.global_rate = global_rate_acc.cell();
    return t;
}

namespace {

using nlohmann::json;

json cell_to_json(const MomentCell& c) {
    return json{{"n", c.n}, {"mean", c.mean}, {"var", c.var}, {"max", c.max}};
}

MomentCell cell_from_json(const json& j) {
    MomentCell c;
    c.n = j.at("n").get<long long>();
    c.mean = j.at("mean").get<double>();
    c.var = j.at("var").get<double>();
    c.max = j.at("max").get<double>();
    return c;
}

} // namespace

std::string moment_table_to_json(const MomentTable& table,
                                 const RegionGraph& graph) {
    json doc;
    doc["format"] = "moment-table-v1";
    json regions = json::object();
    for (std::size_t i = 0; i < table.region.size(); ++i) {
        json entry;
        for (int o = 0; o < kOutcomeCount; ++o)
            entry[kOutcomeNames[o]] = cell_to_json(table.region[i][o]);
        entry["shot_rate"] = table.region_rate[i].shot_rate;
        entry["victim_rate"] = table.region_rate[i].victim_rate;
        regions[std::to_string(graph.region_at(i).id)] = std::move(entry);
    }
    doc["region"] = std::move(regions);
    json groups = json::object();
    for (int g = 0; g < kGroupCount; ++g) {
        json entry;
        for (int o = 0; o < kOutcomeCount; ++o)
            entry[kOutcomeNames[o]] = cell_to_json(table.group[g][o]);
        entry["shot_rate"] = table.group_rate[g].shot_rate;
        entry["victim_rate"] = table.group_rate[g].victim_rate;
        groups[group_name(static_cast<Group>(g))] = std::move(entry);
    }
    doc["group"] = std::move(groups);
    json glob;
    for (int o = 0; o < kOutcomeCount; ++o)
        glob[kOutcomeNames[o]] = cell_to_json(table.global[o]);
    glob["shot_rate"] = table.global_rate.shot_rate;
    glob["victim_rate"] = table.global_rate.victim_rate;
    doc["global"] = std::move(glob);
    return doc.dump(2);
}

MomentTable moment_table_from_json(const std::string& text,
                                   const RegionGraph& graph) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail("moment table parse error: ", e.what());
    }
    if (doc.value("format", "") != "moment-table-v1")
        fail("moment table: unknown format tag");

    MomentTable t;
    t.region.resize(graph.size());
    t.region_rate.resize(graph.size());
    for (const auto& [key, entry] : doc.at("region").items()) {
        const std::size_t idx = graph.index_of(std::stoi(key));
        for (int o = 0; o < kOutcomeCount; ++o)
            t.region[idx][o] = cell_from_json(entry.at(kOutcomeNames[o]));
        t.region_rate[idx].shot_rate = entry.at("shot_rate").get<double>();
        t.region_rate[idx].victim_rate = entry.at("victim_rate").get<double>();
    }
    for (int g = 0; g < kGroupCount; ++g) {
        const auto& entry = doc.at("group").at(group_name(static_cast<Group>(g)));
        for (int o = 0; o < kOutcomeCount; ++o)
            t.group[g][o] = cell_from_json(entry.at(kOutcomeNames[o]));
        t.group_rate[g].shot_rate = entry.at("shot_rate").get<double>();
        t.group_rate[g].victim_rate = entry.at("victim_rate").get<double>();
    }
    const auto& glob = doc.at("global");
    for (int o = 0; o < kOutcomeCount; ++o)
        t.global[o] = cell_from_json(glob.at(kOutcomeNames[o]));
    t.global_rate.shot_rate = glob.at("shot_rate").get<double>();
    t.global_rate.victim_rate = glob.at("victim_rate").get<double>();
    return t;
}

} // namespace desim
