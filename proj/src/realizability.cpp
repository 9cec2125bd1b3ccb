#include "gaussdiag/realizability.hpp"

#include "gaussdiag/smoothing.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace gaussdiag {

EvenConditionReport even_condition(const Interlacement& x) {
    const auto n = x.size();
    EvenConditionReport report;
    for (ChordIndex c = 0; c < n; ++c) {
        if (x.degree(c) % 2 != 0) {
            report.violations.push_back({EvenViolation::Kind::OddChord, c, c, x.crossing_set(c)});
        }
    }
    for (ChordIndex a = 0; a < n; ++a) {
        for (ChordIndex b = a + 1; b < n; ++b) {
            if (x.cross(a, b)) continue;
            if (x.common_count(a, b) % 2 != 0) {
                report.violations.push_back({EvenViolation::Kind::OddPair, a, b, x.common(a, b)});
            }
        }
    }
    return report;
}

EvenConditionReport even_condition(const ChordDiagram& d) {
    return even_condition(interlacement(d));
}

namespace {

// Renames violations into the input's indices and restores the report ordering there.
EvenConditionReport translate(EvenConditionReport r, const std::vector<ChordIndex>& origin) {
    for (auto& v : r.violations) {
        v.first = origin[v.first];
        v.second = origin[v.second];
        if (v.second < v.first) std::swap(v.first, v.second);
        for (auto& c : v.odd_set) c = origin[c];
        std::sort(v.odd_set.begin(), v.odd_set.end());
    }
    std::sort(r.violations.begin(), r.violations.end(), [](const auto& x, const auto& y) {
        return std::tie(x.kind, x.first, x.second) < std::tie(y.kind, y.first, y.second);
    });
    return r;
}

std::vector<ChordIndex> isolated_chords(const Interlacement& x) {
    std::vector<ChordIndex> out;
    for (ChordIndex c = 0; c < x.size(); ++c) {
        if (x.degree(c) == 0) out.push_back(c);
    }
    return out;
}

}  // namespace

RealizabilityReport is_realizable(const ChordDiagram& d) {
    RealizabilityReport report;

    // Deleting an isolated chord leaves every other crossing untouched, so one pass
    // removes all of them.
    report.removed_kinks = isolated_chords(interlacement(d));
    std::vector<ChordIndex> origin;
    const ChordDiagram core = d.without(report.removed_kinks, &origin);

    auto base = even_condition(core);
    if (!base.holds()) {
        report.verdict = Verdict::NonRealizable;
        report.witness = EvenConditionViolation{translate(std::move(base), origin)};
        return report;
    }
    for (ChordIndex c = 0; c < core.chord_count(); ++c) {
        auto smoothed = smooth_by_word(core, c);
        auto after = even_condition(smoothed.result);
        if (after.holds()) continue;
        for (auto& o : smoothed.origin) o = origin[o];
        report.verdict = Verdict::NonRealizable;
        report.witness = SmoothingViolation{origin[c], translate(std::move(after), smoothed.origin)};
        return report;
    }
    report.verdict = Verdict::Realizable;
    return report;
}

void attach_cross_check(RealizabilityReport& report, const ChordDiagram& d, unsigned workers) {
    CrossCheck check;
    check.embedding = oracle::oracle_realizable(d, workers);
    check.oracle_realizable = check.embedding.has_value();
    report.cross_check = std::move(check);
}

namespace {

[[noreturn]] void mismatch(const std::string& why) { throw WitnessMismatch(why); }

void check_violation(const Interlacement& x, const EvenViolation& v,
                     const std::vector<ChordIndex>& to_local, const ChordDiagram& input) {
    auto local = [&](ChordIndex c) {
        if (c >= to_local.size() || to_local[c] >= x.size()) {
            mismatch("violation names chord index " + std::to_string(c) +
                     " which is not present in the checked diagram");
        }
        return to_local[c];
    };
    if (v.kind == EvenViolation::Kind::OddChord) {
        auto c = local(v.first);
        if (x.degree(c) % 2 == 0) {
            mismatch("chord " + input.label(v.first) + " crosses an even number of chords");
        }
        return;
    }
    auto a = local(v.first);
    auto b = local(v.second);
    if (a == b) mismatch("pair violation names the same chord twice");
    if (x.cross(a, b)) {
        mismatch("chords " + input.label(v.first) + " and " + input.label(v.second) + " cross");
    }
    if (x.common_count(a, b) % 2 == 0) {
        mismatch("chords " + input.label(v.first) + " and " + input.label(v.second) +
                 " share an even number of crossing chords");
    }
}

}  // namespace

bool verify_witness(const ChordDiagram& d, const RealizabilityReport& report) {
    if (report.verdict == Verdict::Realizable) {
        if (!std::holds_alternative<std::monostate>(report.witness)) {
            mismatch("realizable verdict carries a violation witness");
        }
        if (report.cross_check && report.cross_check->embedding &&
            !oracle::verify_embedding(d, *report.cross_check->embedding)) {
            mismatch("embedding witness does not trace to a genus-0 map");
        }
        return true;
    }

    if (const auto* w = std::get_if<EvenConditionViolation>(&report.witness)) {
        if (w->report.holds()) mismatch("even-condition witness lists no violation");
        std::vector<ChordIndex> identity(d.chord_count());
        for (ChordIndex c = 0; c < identity.size(); ++c) identity[c] = c;
        const auto x = interlacement(d);
        for (const auto& v : w->report.violations) check_violation(x, v, identity, d);
        return true;
    }
    if (const auto* w = std::get_if<SmoothingViolation>(&report.witness)) {
        if (!d.contains(w->chord)) mismatch("smoothed chord is not in the diagram");
        if (w->report.holds()) mismatch("smoothing witness lists no violation");
        auto smoothed = smooth_by_word(d, w->chord);
        constexpr auto absent = static_cast<ChordIndex>(-1);
        std::vector<ChordIndex> to_local(d.chord_count(), absent);
        for (ChordIndex i = 0; i < smoothed.origin.size(); ++i) to_local[smoothed.origin[i]] = i;
        const auto x = interlacement(smoothed.result);
        for (const auto& v : w->report.violations) check_violation(x, v, to_local, d);
        return true;
    }
    mismatch("non-realizable verdict without a witness");
}

}  // namespace gaussdiag
