#ifndef GAUSSDIAG_CONTOURS_HPP
#define GAUSSDIAG_CONTOURS_HPP

#include "gaussdiag/core.hpp"
#include "gaussdiag/smoothing.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace gaussdiag {

class ChordsDoNotCross : public Error {
public:
    using Error::Error;
};

class DegenerateContour : public Error {
public:
    using Error::Error;
};

/// Which part of the circle a contour occupies. Segment k joins positions k and k + 1.
struct ContourRegion {
    /// Chord endpoints that bound the contour arcs.
    std::vector<Position> boundary;
    /// 1 for positions strictly inside a contour arc.
    std::vector<std::uint8_t> inside_position;
    /// 1 for segments lying on a contour arc.
    std::vector<std::uint8_t> inside_segment;

    bool is_inside(Position p) const { return inside_position[p] != 0; }
    bool is_boundary(Position p) const;
    bool is_outside(Position p) const { return !is_inside(p) && !is_boundary(p); }
};

/// Chord `chord` with one of its two arcs: arc 0 runs from the first endpoint to the
/// second in increasing position order, arc 1 is the other one.
struct CContour {
    ChordIndex chord = 0;
    int arc = 0;
    std::vector<ChordIndex> members;
    std::vector<ChordIndex> doors;
    ContourRegion region;
};

/// Crossing chords a < b with a pair of disjoint arcs. With the four endpoints sorted as
/// x1 < x2 < x3 < x4, arc 0 selects [x1,x2] and [x3,x4], arc 1 selects [x2,x3] and [x4,x1].
struct XContour {
    ChordIndex first = 0;
    ChordIndex second = 0;
    int arc = 0;
    std::vector<ChordIndex> members;
    std::vector<ChordIndex> doors;
    bool non_degenerate = false;
    ContourRegion region;
};

using Contour = std::variant<CContour, XContour>;

enum class Color : std::uint8_t { A, B };

/// When the coloring walk changes color.
enum class DoorFlipRule {
    /// At the door endpoints met on the painted (outside) segments only.
    OutsideEndpoints,
    /// At every door endpoint, including those on contour arcs.
    AllEndpoints,
};

struct ArcColoring {
    /// Color per segment; empty for contour segments.
    std::vector<std::optional<Color>> segment;
    Position walk_start = 0;
    DoorFlipRule rule = DoorFlipRule::OutsideEndpoints;
    /// Number of color changes over one full turn.
    std::size_t flips = 0;
    /// flips is even, so the walk ends with the color it started with.
    bool consistent() const { return flips % 2 == 0; }
    /// Color seen at a chord endpoint lying outside the contour.
    Color at(Position p) const;
};

/// Throws UnknownChord; arc must be 0 or 1.
CContour build_c_contour(const ChordDiagram& d, ChordIndex a, int arc);
/// Throws UnknownChord, ChordsDoNotCross; chords may be given in either order.
XContour build_x_contour(const ChordDiagram& d, ChordIndex a, ChordIndex b, int arc);

/// Walks up the circle from the smallest boundary position starting with color A.
/// Throws DegenerateContour for a degenerate X-contour.
ArcColoring color_complement(const ChordDiagram& d, const Contour& contour,
                             DoorFlipRule rule = DoorFlipRule::OutsideEndpoints);

/// Chords with both endpoints outside the contour whose endpoints carry different colors.
std::vector<ChordIndex> colorful_chords(const ChordDiagram& d, const Contour& contour,
                                        const ArcColoring& coloring);

struct ColorfulWitness {
    XContour contour;
    ChordIndex chord = 0;
    ArcColoring coloring;
};

/// Least (a, b, arc, chord) over all non-degenerate X-contours, if any.
std::optional<ColorfulWitness> exists_colorful_witness(
    const ChordDiagram& d, DoorFlipRule rule = DoorFlipRule::OutsideEndpoints);

/// A colorful X(a,b) chord carried over to a colorful C-contour chord of the smoothing at b.
/// Indices in `contour` and `chord` refer to `smoothing.result`.
struct TransferredWitness {
    SmoothingResult smoothing;
    CContour contour;
    ChordIndex chord = 0;
    ArcColoring coloring;
};

enum class TransferScope {
    /// Only C(a), the other X-contour chord.
    ContourChord,
    /// Any chord of the smoothed diagram.
    AnyChord,
};

/// Smooths the witness contour's second chord and looks for a C-contour (arc not holding
/// the colorful chord) that keeps the chord colorful.
std::optional<TransferredWitness> transfer_to_smoothing(
    const ChordDiagram& d, const ColorfulWitness& witness,
    TransferScope scope = TransferScope::ContourChord);

}  // namespace gaussdiag

#endif
