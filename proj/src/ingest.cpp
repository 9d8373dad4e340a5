#include "desim/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>

#include "desim/csv.hpp"
#include "desim/common.hpp"

namespace desim {

namespace {

int region_field(const std::string& s, const RegionGraph& graph,
                 std::size_t row) {
    const long long id = parse_i64(s);
    if (!graph.has_region(static_cast<int>(id)))
        fail("trace row ", row, ": unknown region ", id);
    return static_cast<int>(id);
}

} // namespace

std::vector<TickRecord> parse_trace(const std::string& text,
                                    const RegionGraph& graph) {
    if (strip(text).empty()) {
        std::cerr << "warning: empty trace document\n";
        return {};
    }
    const CsvTable t = read_csv_text(text, "trace");
    const std::size_t c_ep = t.col("episode_id"), c_tick = t.col("tick"),
                      c_reg = t.col("region_id"), c_shots = t.col("shots_cum"),
                      c_victims = t.col("victims_cum");
    const bool robot_cols = t.has_col("robot1_region");
    const std::size_t c_r1 = robot_cols ? t.col("robot1_region") : 0;
    const std::size_t c_r2 = robot_cols ? t.col("robot2_region") : 0;
    const std::size_t c_sr = robot_cols ? t.col("smoke_region") : 0;
    const std::size_t c_si = robot_cols ? t.col("smoke_intensity") : 0;

    std::vector<TickRecord> recs;
    recs.reserve(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const std::size_t row_no = i + 2;
        const auto& row = t.rows[i];
        TickRecord r;
        r.episode_id = parse_i64(row[c_ep]);
        r.tick = parse_i64(row[c_tick]);
        if (r.tick < 0) fail("trace row ", row_no, ": negative tick");
        r.region_id = region_field(row[c_reg], graph, row_no);
        r.shots_cum = parse_i64(row[c_shots]);
        r.victims_cum = parse_i64(row[c_victims]);
        if (r.shots_cum < 0 || r.victims_cum < 0)
            fail("trace row ", row_no, ": negative cumulative counter");
        if (robot_cols) {
            r.robot1_region = static_cast<int>(parse_i64(row[c_r1]));
            r.robot2_region = static_cast<int>(parse_i64(row[c_r2]));
            r.smoke_region = static_cast<int>(parse_i64(row[c_sr]));
            r.smoke_intensity = parse_f64(row[c_si]);
        }
        recs.push_back(r);
    }

    std::stable_sort(recs.begin(), recs.end(),
                     [](const TickRecord& a, const TickRecord& b) {
                         if (a.episode_id != b.episode_id)
                             return a.episode_id < b.episode_id;
                         return a.tick < b.tick;
                     });

    for (std::size_t i = 1; i < recs.size(); ++i) {
        if (recs[i].episode_id != recs[i - 1].episode_id) continue;
        if (recs[i].tick == recs[i - 1].tick)
            fail("trace: episode ", recs[i].episode_id, " has duplicate tick ",
                 recs[i].tick);
        if (recs[i].shots_cum < recs[i - 1].shots_cum)
            fail("trace: episode ", recs[i].episode_id, " tick ", recs[i].tick,
                 ": shots_cum decreases");
        if (recs[i].victims_cum < recs[i - 1].victims_cum)
            fail("trace: episode ", recs[i].episode_id, " tick ", recs[i].tick,
                 ": victims_cum decreases");
    }
    return recs;
}

std::vector<TickRecord> parse_trace_file(const std::string& path,
                                         const RegionGraph& graph) {
    return parse_trace(read_file(path), graph);
}

Corpus extract_visits(const std::vector<TickRecord>& ticks) {
    Corpus corpus;
    corpus.provenance = Provenance::ingested;

    std::size_t i = 0;
    while (i < ticks.size()) {
        const long long ep_id = ticks[i].episode_id;
        Episode ep;
        ep.id = ep_id;
        long long prev_shots = 0, prev_victims = 0;
        int seq = 0;
        std::size_t run_start = i;
        while (run_start < ticks.size() &&
               ticks[run_start].episode_id == ep_id) {
            std::size_t run_end = run_start;
            while (run_end + 1 < ticks.size() &&
                   ticks[run_end + 1].episode_id == ep_id &&
                   ticks[run_end + 1].region_id == ticks[run_start].region_id)
                ++run_end;
            const TickRecord& last = ticks[run_end];
            VisitEvent v;
            v.episode_id = ep_id;
            v.seq = seq++;
            v.region_id = ticks[run_start].region_id;
            v.dwell_s = static_cast<double>(run_end - run_start + 1) * kTickSeconds;
            v.shots = static_cast<double>(last.shots_cum - prev_shots);
            v.victims = static_cast<double>(last.victims_cum - prev_victims);
            prev_shots = last.shots_cum;
            prev_victims = last.victims_cum;
            ep.visits.push_back(v);
            run_start = run_end + 1;
        }
        for (std::size_t j = i; j < run_start; ++j) {
            if (ticks[j].smoke_region >= 0 && ticks[j].smoke_intensity > 0.0) {
                ep.smoke.push_back({static_cast<double>(ticks[j].tick) * kTickSeconds,
                                    ticks[j].smoke_region,
                                    ticks[j].smoke_intensity});
                corpus.condition = Condition::robot_present;
            }
            if (ticks[j].robot1_region >= 0 || ticks[j].robot2_region >= 0)
                corpus.condition = Condition::robot_present;
        }
        i = run_start;
        corpus.episodes.push_back(std::move(ep));
    }
    return corpus;
}

std::vector<TickRecord> to_ticks(const Corpus& corpus) {
    std::vector<TickRecord> out;
    for (const auto& ep : corpus.episodes) {
        long long tick = 0;
        long long shots_cum = 0, victims_cum = 0;
        auto smoke_it = ep.smoke.begin();
        for (const auto& v : ep.visits) {
            if (!v.has_dwell())
                fail("to_ticks: episode ", ep.id, " has a visit without dwell");
            long long n = std::llround(v.dwell_s / kTickSeconds);
            if (n < 1) n = 1;
            shots_cum += std::llround(v.shots);
            victims_cum += std::llround(v.victims);
            for (long long t = 0; t < n; ++t) {
                TickRecord r;
                r.episode_id = ep.id;
                r.tick = tick;
                r.region_id = v.region_id;
                // Deltas land on the final tick of the run.
                r.shots_cum = (t == n - 1) ? shots_cum
                                           : shots_cum - std::llround(v.shots);
                r.victims_cum = (t == n - 1)
                                    ? victims_cum
                                    : victims_cum - std::llround(v.victims);
                const double now = static_cast<double>(tick) * kTickSeconds;
                if (smoke_it != ep.smoke.end() && smoke_it->t <= now) {
                    r.smoke_region = smoke_it->region_id;
                    r.smoke_intensity = smoke_it->amount;
                    ++smoke_it;
                }
                out.push_back(r);
                ++tick;
            }
        }
    }
    return out;
}

std::string trace_to_csv(const std::vector<TickRecord>& ticks) {
    bool robot_cols = false;
    for (const auto& r : ticks)
        if (r.robot1_region >= 0 || r.robot2_region >= 0 || r.smoke_region >= 0)
            robot_cols = true;

    std::vector<std::string> header = {"episode_id", "tick", "region_id",
                                       "shots_cum", "victims_cum"};
    if (robot_cols) {
        header.insert(header.end(), {"robot1_region", "robot2_region",
                                     "smoke_region", "smoke_intensity"});
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(ticks.size());
    for (const auto& r : ticks) {
        std::vector<std::string> row = {
            std::to_string(r.episode_id), std::to_string(r.tick),
            std::to_string(r.region_id), std::to_string(r.shots_cum),
            std::to_string(r.victims_cum)};
        if (robot_cols) {
            row.push_back(std::to_string(r.robot1_region));
            row.push_back(std::to_string(r.robot2_region));
            row.push_back(std::to_string(r.smoke_region));
            row.push_back(fmt_g(r.smoke_intensity));
        }
        rows.push_back(std::move(row));
    }
    return to_csv(header, rows);
}

Corpus parse_visits(const std::string& text, const RegionGraph& graph) {
    Corpus corpus;
    if (strip(text).empty()) {
        std::cerr << "warning: empty visit document\n";
        return corpus;
    }
    const CsvTable t = read_csv_text(text, "visits");
    const std::size_t c_ep = t.col("episode_id"), c_seq = t.col("seq"),
                      c_reg = t.col("region_id"), c_dwell = t.col("dwell_s"),
                      c_shots = t.col("shots"), c_victims = t.col("victims");

    std::map<long long, Episode> by_ep;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        VisitEvent v;
        v.episode_id = parse_i64(row[c_ep]);
        v.seq = static_cast<int>(parse_i64(row[c_seq]));
        v.region_id = region_field(row[c_reg], graph, i + 2);
        v.dwell_s = row[c_dwell] == "null"
                        ? std::numeric_limits<double>::quiet_NaN()
                        : parse_f64(row[c_dwell]);
        if (v.has_dwell() && v.dwell_s <= 0.0)
            fail("visit row ", i + 2, ": dwell must be positive");
        v.shots = parse_f64(row[c_shots]);
        v.victims = parse_f64(row[c_victims]);
        if (v.shots < 0.0 || v.victims < 0.0)
            fail("visit row ", i + 2, ": negative outcome");
        auto& ep = by_ep[v.episode_id];
        ep.id = v.episode_id;
        ep.visits.push_back(v);
    }
    for (auto& [id, ep] : by_ep) {
        std::sort(ep.visits.begin(), ep.visits.end(),
                  [](const VisitEvent& a, const VisitEvent& b) {
                      return a.seq < b.seq;
                  });
        for (std::size_t s = 0; s < ep.visits.size(); ++s) {
            if (ep.visits[s].seq != static_cast<int>(s))
                fail("episode ", id, ": seq not contiguous from 0");
        }
        corpus.episodes.push_back(std::move(ep));
    }
    return corpus;
}

Corpus parse_visits_file(const std::string& path, const RegionGraph& graph) {
    return parse_visits(read_file(path), graph);
}

std::string visits_to_csv(const Corpus& corpus) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& ep : corpus.episodes) {
        for (const auto& v : ep.visits) {
            rows.push_back({std::to_string(v.episode_id), std::to_string(v.seq),
                            std::to_string(v.region_id),
                            v.has_dwell() ? fmt_g(v.dwell_s, 12) : "null",
                            fmt_g(v.shots, 12), fmt_g(v.victims, 12)});
        }
    }
    return to_csv({"episode_id", "seq", "region_id", "dwell_s", "shots",
                   "victims"},
                  rows);
}

std::vector<FoldPair> kfold_split(const Corpus& corpus, std::size_t k,
                                  std::uint64_t seed) {
    const std::size_t n = corpus.episodes.size();
    if (k < 2) fail("kfold_split: k must be at least 2");
    if (k > n) fail("kfold_split: k exceeds episode count ", n);

    Rng rng(seed);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);

    std::vector<FoldPair> folds(k);
    for (std::size_t f = 0; f < k; ++f) {
        folds[f].train.provenance = corpus.provenance;
        folds[f].train.condition = corpus.condition;
        folds[f].test.provenance = corpus.provenance;
        folds[f].test.condition = corpus.condition;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t f = i % k;
        for (std::size_t g = 0; g < k; ++g) {
            auto& dst = (g == f) ? folds[g].test : folds[g].train;
            dst.episodes.push_back(corpus.episodes[order[i]]);
        }
    }
    return folds;
}

} // namespace desim
