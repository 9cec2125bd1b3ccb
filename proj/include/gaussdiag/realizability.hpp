#ifndef GAUSSDIAG_REALIZABILITY_HPP
#define GAUSSDIAG_REALIZABILITY_HPP

#include "gaussdiag/core.hpp"
#include "gaussdiag/oracle.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace gaussdiag {

class WitnessMismatch : public Error {
public:
    using Error::Error;
};

/// Either a chord crossed by an odd number of chords, or a non-crossing pair
/// sharing an odd number of crossing chords.
struct EvenViolation {
    enum class Kind { OddChord, OddPair };
    Kind kind = Kind::OddChord;
    ChordIndex first = 0;
    ChordIndex second = 0;  // OddPair only
    /// The odd set itself: first's crossing set, or the common crossing set of the pair.
    std::vector<ChordIndex> odd_set;

    friend bool operator==(const EvenViolation&, const EvenViolation&) = default;
};

struct EvenConditionReport {
    /// Chord violations in index order, then pair violations in (first, second) order.
    std::vector<EvenViolation> violations;

    bool holds() const { return violations.empty(); }
};

EvenConditionReport even_condition(const ChordDiagram& d);
EvenConditionReport even_condition(const Interlacement& x);

enum class Verdict { Realizable, NonRealizable };

struct EvenConditionViolation {
    EvenConditionReport report;
};

/// The even condition fails after smoothing `chord`. Violation indices refer to the
/// input diagram, not to the smoothed one.
struct SmoothingViolation {
    ChordIndex chord = 0;
    EvenConditionReport report;
};

using Witness = std::variant<std::monostate, EvenConditionViolation, SmoothingViolation>;

struct CrossCheck {
    bool oracle_realizable = false;
    std::optional<oracle::EmbeddingWitness> embedding;
};

struct RealizabilityReport {
    Verdict verdict = Verdict::Realizable;
    Witness witness;
    /// Isolated chords deleted before applying the criterion (input indices).
    std::vector<ChordIndex> removed_kinks;
    std::optional<CrossCheck> cross_check;
};

/// Realizable iff the even condition holds for the diagram and for each single smoothing.
/// Isolated chords are removed first.
RealizabilityReport is_realizable(const ChordDiagram& d);

/// Attaches the brute-force verdict to a report.
void attach_cross_check(RealizabilityReport& report, const ChordDiagram& d, unsigned workers = 1);

/// Recomputes only the violation the report names. Returns true or throws WitnessMismatch.
bool verify_witness(const ChordDiagram& d, const RealizabilityReport& report);

}  // namespace gaussdiag

#endif
