#include "gaussdiag/smoothing.hpp"

#include <algorithm>
#include <string>

namespace gaussdiag {

namespace {

std::size_t inherited(ChordIndex parent, ChordIndex smoothed) {
    return parent > smoothed ? parent - 1 : parent;
}

}  // namespace

Interlacement SmoothingResult::inherited_interlacement() const {
    const auto n = result.chord_count();
    Interlacement own = interlacement(result);
    Interlacement out(n);
    for (ChordIndex i = 0; i < n; ++i) {
        for (ChordIndex j = i + 1; j < n; ++j) {
            out.set(inherited(origin[i], smoothed_chord), inherited(origin[j], smoothed_chord),
                    own.cross(i, j));
        }
    }
    return out;
}

SmoothingResult smooth_by_word(const ChordDiagram& d, ChordIndex c) {
    if (!d.contains(c)) throw UnknownChord("chord index " + std::to_string(c) + " out of range");
    const auto [p, q] = d.endpoints(c);
    const auto& seq = d.sequence();

    std::vector<std::size_t> word;
    word.reserve(seq.size() - 2);
    word.insert(word.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(p));
    word.insert(word.end(), seq.rbegin() + static_cast<std::ptrdiff_t>(seq.size() - q),
                seq.rend() - static_cast<std::ptrdiff_t>(p + 1));
    word.insert(word.end(), seq.begin() + static_cast<std::ptrdiff_t>(q + 1), seq.end());

    SmoothingResult r;
    r.smoothed_chord = c;
    r.result = ChordDiagram::from_sequence(word, d.labels(), &r.origin);
    r.provenance = SmoothingConstruction::WordSurgery;
    return r;
}

Interlacement smooth_by_toggle(const Interlacement& x, ChordIndex c) {
    const auto n = x.size();
    if (c >= n) throw UnknownChord("chord index " + std::to_string(c) + " out of range");
    Interlacement out(n - 1);
    for (ChordIndex i = 0; i < n; ++i) {
        if (i == c) continue;
        for (ChordIndex j = i + 1; j < n; ++j) {
            if (j == c) continue;
            bool flip = x.cross(c, i) && x.cross(c, j);
            out.set(inherited(i, c), inherited(j, c), x.cross(i, j) != flip);
        }
    }
    return out;
}

Interlacement smooth_by_toggle(const ChordDiagram& d, ChordIndex c) {
    if (!d.contains(c)) throw UnknownChord("chord index " + std::to_string(c) + " out of range");
    return smooth_by_toggle(interlacement(d), c);
}

}  // namespace gaussdiag
