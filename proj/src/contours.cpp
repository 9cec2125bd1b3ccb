#include "gaussdiag/contours.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace gaussdiag {

bool ContourRegion::is_boundary(Position p) const {
    return std::find(boundary.begin(), boundary.end(), p) != boundary.end();
}

Color ArcColoring::at(Position p) const {
    const auto& c = segment.at(p);
    if (!c) throw Error("position " + std::to_string(p) + " lies on the contour");
    return *c;
}

namespace {

ContourRegion empty_region(std::size_t len) {
    ContourRegion r;
    r.inside_position.assign(len, 0);
    r.inside_segment.assign(len, 0);
    return r;
}

// Marks the arc running up the circle from endpoint `from` to endpoint `to`.
void mark_arc(ContourRegion& r, Position from, Position to) {
    const auto len = r.inside_position.size();
    for (Position p = from; p != to; p = (p + 1) % len) {
        r.inside_segment[p] = 1;
        if (p != from) r.inside_position[p] = 1;
    }
}

void classify(const ChordDiagram& d, const ContourRegion& r, std::span<const ChordIndex> own,
              std::vector<ChordIndex>& members, std::vector<ChordIndex>& doors) {
    for (ChordIndex c = 0; c < d.chord_count(); ++c) {
        if (std::find(own.begin(), own.end(), c) != own.end()) continue;
        const auto [p, q] = d.endpoints(c);
        int inside = r.is_inside(p) + r.is_inside(q);
        if (inside == 2) members.push_back(c);
        if (inside == 1) doors.push_back(c);
    }
}

void require_chord(const ChordDiagram& d, ChordIndex c) {
    if (!d.contains(c)) throw UnknownChord("chord index " + std::to_string(c) + " out of range");
}

void require_arc(int arc) {
    if (arc != 0 && arc != 1) throw Error("arc selector must be 0 or 1");
}

}  // namespace

CContour build_c_contour(const ChordDiagram& d, ChordIndex a, int arc) {
    require_chord(d, a);
    require_arc(arc);
    const auto [p, q] = d.endpoints(a);
    CContour c;
    c.chord = a;
    c.arc = arc;
    c.region = empty_region(d.length());
    c.region.boundary = {p, q};
    if (arc == 0) mark_arc(c.region, p, q);
    else mark_arc(c.region, q, p);
    const std::array<ChordIndex, 1> own{a};
    classify(d, c.region, own, c.members, c.doors);
    return c;
}

XContour build_x_contour(const ChordDiagram& d, ChordIndex a, ChordIndex b, int arc) {
    require_chord(d, a);
    require_chord(d, b);
    require_arc(arc);
    if (!d.crosses(a, b)) {
        throw ChordsDoNotCross("chords " + d.label(a) + " and " + d.label(b) + " do not cross");
    }
    XContour x;
    x.first = std::min(a, b);
    x.second = std::max(a, b);
    x.arc = arc;
    std::array<Position, 4> ends{d.endpoints(a).first, d.endpoints(a).second,
                                 d.endpoints(b).first, d.endpoints(b).second};
    std::sort(ends.begin(), ends.end());
    x.region = empty_region(d.length());
    x.region.boundary.assign(ends.begin(), ends.end());
    if (arc == 0) {
        mark_arc(x.region, ends[0], ends[1]);
        mark_arc(x.region, ends[2], ends[3]);
    } else {
        mark_arc(x.region, ends[1], ends[2]);
        mark_arc(x.region, ends[3], ends[0]);
    }
    const std::array<ChordIndex, 2> own{x.first, x.second};
    classify(d, x.region, own, x.members, x.doors);
    x.non_degenerate = !x.doors.empty() && x.members.size() + 2 < d.chord_count();
    return x;
}

namespace {

const ContourRegion& region_of(const Contour& c) {
    return std::visit([](const auto& k) -> const ContourRegion& { return k.region; }, c);
}

const std::vector<ChordIndex>& doors_of(const Contour& c) {
    return std::visit([](const auto& k) -> const std::vector<ChordIndex>& { return k.doors; }, c);
}

}  // namespace

ArcColoring color_complement(const ChordDiagram& d, const Contour& contour, DoorFlipRule rule) {
    if (const auto* x = std::get_if<XContour>(&contour); x && !x->non_degenerate) {
        throw DegenerateContour("X-contour of chords " + d.label(x->first) + " and " +
                                d.label(x->second) + " is degenerate");
    }
    const auto& region = region_of(contour);
    const auto len = d.length();

    std::vector<std::uint8_t> is_door(d.chord_count(), 0);
    for (auto c : doors_of(contour)) is_door[c] = 1;

    ArcColoring coloring;
    coloring.rule = rule;
    coloring.segment.assign(len, std::nullopt);
    coloring.walk_start = *std::min_element(region.boundary.begin(), region.boundary.end());

    Color color = Color::A;
    for (std::size_t k = 0; k < len; ++k) {
        Position p = (coloring.walk_start + k) % len;
        if (is_door[d.chord_at(p)] && (rule == DoorFlipRule::AllEndpoints || region.is_outside(p))) {
            color = color == Color::A ? Color::B : Color::A;
            ++coloring.flips;
        }
        if (!region.inside_segment[p]) coloring.segment[p] = color;
    }
    return coloring;
}

std::vector<ChordIndex> colorful_chords(const ChordDiagram& d, const Contour& contour,
                                        const ArcColoring& coloring) {
    const auto& region = region_of(contour);
    std::vector<ChordIndex> out;
    for (ChordIndex c = 0; c < d.chord_count(); ++c) {
        const auto [p, q] = d.endpoints(c);
        if (!region.is_outside(p) || !region.is_outside(q)) continue;
        if (coloring.at(p) != coloring.at(q)) out.push_back(c);
    }
    return out;
}

std::optional<ColorfulWitness> exists_colorful_witness(const ChordDiagram& d, DoorFlipRule rule) {
    const auto n = d.chord_count();
    for (ChordIndex a = 0; a < n; ++a) {
        for (ChordIndex b = a + 1; b < n; ++b) {
            if (!d.crosses(a, b)) continue;
            for (int arc = 0; arc < 2; ++arc) {
                auto x = build_x_contour(d, a, b, arc);
                if (!x.non_degenerate) continue;
                auto coloring = color_complement(d, x, rule);
                auto colorful = colorful_chords(d, x, coloring);
                if (colorful.empty()) continue;
                return ColorfulWitness{std::move(x), colorful.front(), std::move(coloring)};
            }
        }
    }
    return std::nullopt;
}

std::optional<TransferredWitness> transfer_to_smoothing(const ChordDiagram& d,
                                                        const ColorfulWitness& witness,
                                                        TransferScope scope) {
    auto smoothing = smooth_by_word(d, witness.contour.second);
    const auto& g = smoothing.result;
    std::optional<ChordIndex> a;
    std::optional<ChordIndex> c;
    for (ChordIndex i = 0; i < smoothing.origin.size(); ++i) {
        if (smoothing.origin[i] == witness.contour.first) a = i;
        if (smoothing.origin[i] == witness.chord) c = i;
    }
    if (!a || !c) return std::nullopt;

    for (ChordIndex x = 0; x < g.chord_count(); ++x) {
        if (x == *c) continue;
        if (scope == TransferScope::ContourChord && x != *a) continue;
        for (int arc = 0; arc < 2; ++arc) {
            auto contour = build_c_contour(g, x, arc);
            const auto [p, q] = g.endpoints(*c);
            if (!contour.region.is_outside(p) || !contour.region.is_outside(q)) continue;
            auto coloring = color_complement(g, contour, witness.coloring.rule);
            auto colorful = colorful_chords(g, contour, coloring);
            if (std::find(colorful.begin(), colorful.end(), *c) == colorful.end()) continue;
            return TransferredWitness{std::move(smoothing), std::move(contour), *c,
                                      std::move(coloring)};
        }
    }
    return std::nullopt;
}

}  // namespace gaussdiag
