#ifndef GAUSSDIAG_SMOOTHING_HPP
#define GAUSSDIAG_SMOOTHING_HPP

#include "gaussdiag/core.hpp"

#include <vector>

namespace gaussdiag {

enum class SmoothingConstruction { WordSurgery, InterlacementToggle };

/// Conway smoothing of one chord. `origin[i]` is the parent index of chord i of `result`.
struct SmoothingResult {
    ChordDiagram result;
    ChordIndex smoothed_chord = 0;
    std::vector<ChordIndex> origin;
    SmoothingConstruction provenance = SmoothingConstruction::WordSurgery;

    /// Crossing relation of `result` indexed like the parent with the smoothed chord dropped
    /// (parent index i maps to i, or i - 1 when i > smoothed_chord).
    Interlacement inherited_interlacement() const;
};

/// Writes the word as W1 c W2 c W3 with W1 starting at position 0 and returns W1 W2^R W3.
/// Throws UnknownChord.
SmoothingResult smooth_by_word(const ChordDiagram& d, ChordIndex c);

/// Deletes c and flips the crossing relation for every pair inside c's crossing set.
/// Indexed like SmoothingResult::inherited_interlacement. Throws UnknownChord.
Interlacement smooth_by_toggle(const ChordDiagram& d, ChordIndex c);
Interlacement smooth_by_toggle(const Interlacement& x, ChordIndex c);

}  // namespace gaussdiag

#endif
