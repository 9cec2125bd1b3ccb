#include "gaussdiag/enumeration.hpp"

#include "gaussdiag/codec.hpp"
#include "gaussdiag/smoothing.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <set>
#include <thread>

namespace gaussdiag::enumeration {

using nlohmann::json;

namespace {

constexpr auto unset = std::numeric_limits<std::size_t>::max();

void extend(std::vector<std::size_t>& w, std::size_t next,
            const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::size_t first = 0;
    while (first < w.size() && w[first] != unset) ++first;
    if (first == w.size()) {
        visit(w);
        return;
    }
    w[first] = next;
    for (std::size_t j = first + 1; j < w.size(); ++j) {
        if (w[j] != unset) continue;
        w[j] = next;
        extend(w, next + 1, visit);
        w[j] = unset;
    }
    w[first] = unset;
}

unsigned effective_workers(unsigned requested) { return std::max(1u, requested); }

}  // namespace

void for_each_matching(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit,
                       const std::vector<std::size_t>& partners) {
    std::vector<std::size_t> w(2 * n, unset);
    if (n == 0) {
        visit(w);
        return;
    }
    if (partners.empty()) {
        extend(w, 0, visit);
        return;
    }
    w[0] = 0;
    for (auto j : partners) {
        if (j == 0 || j >= w.size()) continue;
        w[j] = 0;
        extend(w, 1, visit);
        w[j] = unset;
    }
}

std::vector<ChordDiagram> enumerate_canonical(std::size_t n, unsigned workers) {
    std::set<CanonicalForm> seen;
    if (n == 0) {
        seen.insert(CanonicalForm{});
    } else {
        // Shard on the partner of position 0; each shard keeps its own seen-set and the
        // sets are merged afterwards, so no locking is needed.
        const unsigned k = std::min<unsigned>(effective_workers(workers), 2 * n - 1);
        std::vector<std::set<CanonicalForm>> shards(k);
        auto run = [&](unsigned s) {
            std::vector<std::size_t> partners;
            for (std::size_t j = 1 + s; j < 2 * n; j += k) partners.push_back(j);
            for_each_matching(
                n, [&](const auto& w) { shards[s].insert(canonicalize(ChordDiagram::from_sequence(w))); },
                partners);
        };
        if (k == 1) {
            run(0);
        } else {
            std::vector<std::jthread> threads;
            for (unsigned s = 0; s < k; ++s) threads.emplace_back(run, s);
        }
        for (auto& s : shards) seen.merge(s);
    }
    std::vector<ChordDiagram> out;
    out.reserve(seen.size());
    for (const auto& c : seen) out.push_back(c.to_diagram());
    return out;
}

bool has_no_isolated_chord(const ChordDiagram& d) {
    const auto x = interlacement(d);
    for (ChordIndex c = 0; c < x.size(); ++c) {
        if (x.degree(c) == 0) return false;
    }
    return true;
}

std::size_t SweepReport::disagreement_count() const {
    std::size_t total = 0;
    for (const auto& l : levels) total += l.disagreements.size();
    return total;
}

namespace {

struct Outcome {
    RealizabilityReport report;
    bool even = false;
    bool smoothing_only_realizable = false;
};

bool smoothings_even(const ChordDiagram& d) {
    std::vector<ChordIndex> isolated;
    const auto x = interlacement(d);
    for (ChordIndex c = 0; c < x.size(); ++c) {
        if (x.degree(c) == 0) isolated.push_back(c);
    }
    const auto core = d.without(isolated);
    for (ChordIndex c = 0; c < core.chord_count(); ++c) {
        if (!even_condition(smooth_by_word(core, c).result).holds()) return false;
    }
    return true;
}

Outcome evaluate(const ChordDiagram& d) {
    Outcome o;
    o.report = is_realizable(d);
    attach_cross_check(o.report, d);
    o.even = even_condition(d).holds();
    o.smoothing_only_realizable = smoothings_even(d);
    return o;
}

std::vector<ChordDiagram> level_diagrams(std::size_t n, const SweepConfig& config) {
    auto all = enumerate_canonical(n, config.workers);
    if (!config.require_non_isolated) return all;
    std::vector<ChordDiagram> kept;
    for (auto& d : all) {
        if (has_no_isolated_chord(d)) kept.push_back(std::move(d));
    }
    return kept;
}

void check_config(const SweepConfig& config) {
    if (config.max_chords == 0) throw Error("max_chords must be at least 1");
}

}  // namespace

SweepReport enumerate_levels(const SweepConfig& config) {
    check_config(config);
    SweepReport report;
    report.max_chords = config.max_chords;
    report.require_non_isolated = config.require_non_isolated;
    for (std::size_t n = 1; n <= config.max_chords; ++n) {
        const auto start = std::chrono::steady_clock::now();
        LevelReport level;
        level.chords = n;
        level.total = level_diagrams(n, config).size();
        level.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.levels.push_back(std::move(level));
    }
    return report;
}

SweepReport cross_validate(const SweepConfig& config) {
    check_config(config);
    SweepReport report;
    report.max_chords = config.max_chords;
    report.require_non_isolated = config.require_non_isolated;
    const unsigned workers = effective_workers(config.workers);

    for (std::size_t n = 1; n <= config.max_chords; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const auto diagrams = level_diagrams(n, config);
        std::vector<Outcome> outcomes(diagrams.size());
        auto run = [&](unsigned s) {
            for (std::size_t i = s; i < diagrams.size(); i += workers) outcomes[i] = evaluate(diagrams[i]);
        };
        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::jthread> threads;
            for (unsigned s = 0; s < workers; ++s) threads.emplace_back(run, s);
        }

        LevelReport level;
        level.chords = n;
        level.total = diagrams.size();
        for (std::size_t i = 0; i < diagrams.size(); ++i) {
            const auto& o = outcomes[i];
            const bool criterion = o.report.verdict == Verdict::Realizable;
            const bool truth = o.report.cross_check->oracle_realizable;
            (criterion ? level.realizable : level.non_realizable) += 1;
            level.oracle_realizable += truth;
            level.even_condition_holds += o.even;
            level.smoothing_only_disagreements += o.smoothing_only_realizable != truth;
            if (criterion != truth) level.disagreements.push_back({canonicalize(diagrams[i]), o.report});
        }
        level.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.levels.push_back(std::move(level));
    }
    if (config.output_path) write_sweep_outputs(report, *config.output_path);
    return report;
}

json sweep_to_json(const SweepReport& report, bool include_timing) {
    json doc;
    doc["schema_version"] = codec::schema_version;
    doc["max_chords"] = report.max_chords;
    doc["require_non_isolated"] = report.require_non_isolated;
    json levels = json::array();
    for (const auto& l : report.levels) {
        json entry = {{"chords", l.chords},
                      {"total", l.total},
                      {"realizable", l.realizable},
                      {"non_realizable", l.non_realizable},
                      {"oracle_realizable", l.oracle_realizable},
                      {"even_condition_holds", l.even_condition_holds},
                      {"smoothing_only_disagreements", l.smoothing_only_disagreements}};
        json dis = json::array();
        for (const auto& d : l.disagreements) {
            dis.push_back(codec::report_to_json(d.diagram.to_diagram(), d.report));
        }
        entry["disagreements"] = dis;
        if (include_timing) entry["wall_seconds"] = l.wall_seconds;
        levels.push_back(entry);
    }
    doc["levels"] = levels;
    doc["disagreement_count"] = report.disagreement_count();
    return doc;
}

void write_sweep_outputs(const SweepReport& report, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());

    std::ofstream json_out(dir / "sweep_report.json");
    std::ofstream batch_out(dir / "disagreements.txt");
    if (!json_out || !batch_out) throw Error("cannot write sweep outputs into " + dir.string());
    json_out << sweep_to_json(report).dump(2) << '\n';

    batch_out << "# criterion/oracle disagreements up to " << report.max_chords << " chords\n";
    for (const auto& l : report.levels) {
        for (const auto& d : l.disagreements) {
            const auto diagram = d.diagram.to_diagram();
            auto check = d.report;
            auto oracle_side = check.cross_check;
            check.cross_check.reset();
            batch_out << "# criterion: " << codec::emit_report(diagram, check, codec::Format::Text);
            batch_out << "# oracle: "
                      << codec::emit_oracle(diagram, oracle_side ? oracle_side->embedding : std::nullopt,
                                            codec::Format::Text);
            codec::write_batch_line(batch_out, diagram.to_word());
        }
    }
}

}  // namespace gaussdiag::enumeration
