#ifndef GAUSSDIAG_ENUMERATION_HPP
#define GAUSSDIAG_ENUMERATION_HPP

#include "gaussdiag/core.hpp"
#include "gaussdiag/realizability.hpp"

#include <json.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

namespace gaussdiag::enumeration {

/// Calls `visit` on every first-occurrence word with n chords (each perfect matching of
/// 2n points once), given as a chord-id sequence. Only matchings whose position 0 is
/// paired with a position in `partners` are produced when that list is non-empty.
void for_each_matching(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit,
                       const std::vector<std::size_t>& partners = {});

/// One representative per rotation/reflection/relabel orbit, sorted by canonical form.
/// Each representative is the diagram of its canonical word.
std::vector<ChordDiagram> enumerate_canonical(std::size_t n, unsigned workers = 1);

/// Every chord crosses at least one other chord.
bool has_no_isolated_chord(const ChordDiagram& d);

struct SweepConfig {
    std::size_t max_chords = 7;
    bool require_non_isolated = false;
    unsigned workers = 1;
    /// Directory receiving sweep_report.json and disagreements.txt.
    std::optional<std::filesystem::path> output_path;
};

/// The criterion and the oracle disagree on `diagram`.
struct Disagreement {
    CanonicalForm diagram;
    /// Criterion verdict and witness, with the oracle outcome attached as cross_check.
    RealizabilityReport report;
};

struct LevelReport {
    std::size_t chords = 0;
    std::size_t total = 0;
    /// By the criterion; realizable + non_realizable == total.
    std::size_t realizable = 0;
    std::size_t non_realizable = 0;
    std::size_t oracle_realizable = 0;
    std::size_t even_condition_holds = 0;
    /// Diagrams where dropping the even condition on the diagram itself and keeping only
    /// the condition on its smoothings would change the verdict against the oracle.
    std::size_t smoothing_only_disagreements = 0;
    std::vector<Disagreement> disagreements;
    double wall_seconds = 0;
};

struct SweepReport {
    std::size_t max_chords = 0;
    bool require_non_isolated = false;
    std::vector<LevelReport> levels;

    std::size_t disagreement_count() const;
};

/// Throws Error if max_chords is 0 or the config's output directory cannot be written.
SweepReport cross_validate(const SweepConfig& config);

/// Enumeration only: per-level totals, verdict fields left at zero.
SweepReport enumerate_levels(const SweepConfig& config);

/// Wall time is left out unless asked for so equal configs give identical documents.
nlohmann::json sweep_to_json(const SweepReport& report, bool include_timing = false);

/// Writes `dir`/sweep_report.json and `dir`/disagreements.txt (batch format, each word
/// preceded by '#' lines carrying both verdicts and witnesses).
void write_sweep_outputs(const SweepReport& report, const std::filesystem::path& dir);

}  // namespace gaussdiag::enumeration

#endif
