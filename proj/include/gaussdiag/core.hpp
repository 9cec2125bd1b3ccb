#ifndef GAUSSDIAG_CORE_HPP
#define GAUSSDIAG_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gaussdiag {

/// Index of a chord inside one ChordDiagram, assigned by first occurrence.
using ChordIndex = std::size_t;
/// Position of an endpoint on the 2n-point circle.
using Position = std::size_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedWord : public Error {
public:
    using Error::Error;
};

class UnknownChord : public Error {
public:
    using Error::Error;
};

/// A cyclic double-occurrence word: 2n opaque labels, each appearing exactly twice.
class GaussWord {
public:
    GaussWord() = default;
    /// Throws MalformedWord if some label does not occur exactly twice.
    explicit GaussWord(std::vector<std::string> symbols);

    const std::vector<std::string>& symbols() const { return symbols_; }
    std::size_t length() const { return symbols_.size(); }
    std::size_t chord_count() const { return symbols_.size() / 2; }
    bool empty() const { return symbols_.empty(); }

    friend bool operator==(const GaussWord&, const GaussWord&) = default;

private:
    std::vector<std::string> symbols_;
};

/// Chords on a circle of 2n points. Chord i has endpoints first < second.
struct Endpoints {
    Position first = 0;
    Position second = 0;
    friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

class ChordDiagram {
public:
    ChordDiagram() = default;

    static ChordDiagram from_word(const GaussWord& word);

    /// Builds a diagram from a sequence of arbitrary chord ids (each exactly twice).
    /// `labels[id]` names chord id; ids are renumbered by first occurrence.
    /// If `origin` is given it receives, for each new chord index, the id it came from.
    static ChordDiagram from_sequence(std::span<const std::size_t> sequence,
                                      std::span<const std::string> labels,
                                      std::vector<std::size_t>* origin = nullptr);

    /// Numeric labels: chord id k is labelled "k+1".
    static ChordDiagram from_sequence(std::span<const std::size_t> sequence);

    std::size_t chord_count() const { return endpoints_.size(); }
    std::size_t length() const { return chord_at_.size(); }
    bool empty() const { return endpoints_.empty(); }

    ChordIndex chord_at(Position p) const { return chord_at_.at(p); }
    const std::vector<ChordIndex>& sequence() const { return chord_at_; }
    const Endpoints& endpoints(ChordIndex c) const { return endpoints_.at(c); }
    const std::string& label(ChordIndex c) const { return labels_.at(c); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Throws UnknownChord.
    ChordIndex index_of(const std::string& label) const;
    std::optional<ChordIndex> find(const std::string& label) const;

    bool contains(ChordIndex c) const { return c < endpoints_.size(); }

    /// Strict interleaving of endpoints; irreflexive.
    bool crosses(ChordIndex a, ChordIndex b) const;

    /// Word with the original labels.
    GaussWord to_word() const;

    /// Drops the given chords, keeping the order of the remaining endpoints.
    ChordDiagram without(std::span<const ChordIndex> removed,
                         std::vector<ChordIndex>* origin = nullptr) const;

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

private:
    std::vector<ChordIndex> chord_at_;
    std::vector<Endpoints> endpoints_;
    std::vector<std::string> labels_;
};

/// Symmetric, irreflexive crossing relation of a diagram.
class Interlacement {
public:
    Interlacement() = default;
    explicit Interlacement(std::size_t n) : n_(n), cells_(n * n, 0) {}

    std::size_t size() const { return n_; }
    bool cross(ChordIndex a, ChordIndex b) const { return cells_[a * n_ + b] != 0; }
    void set(ChordIndex a, ChordIndex b, bool value);

    std::size_t degree(ChordIndex c) const;
    std::vector<ChordIndex> crossing_set(ChordIndex c) const;
    /// |a_x ∩ b_x|
    std::size_t common_count(ChordIndex a, ChordIndex b) const;
    std::vector<ChordIndex> common(ChordIndex a, ChordIndex b) const;

    friend bool operator==(const Interlacement&, const Interlacement&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> cells_;
};

Interlacement interlacement(const ChordDiagram& d);

/// First-occurrence-relabeled word, 1-based, minimal over rotations and reflections.
struct CanonicalForm {
    std::vector<std::uint16_t> word;

    std::string to_string() const;
    ChordDiagram to_diagram() const;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonicalize(const ChordDiagram& d);

/// The dihedral symmetry reading the word from `start`, backwards when `reflect`.
ChordDiagram apply_symmetry(const ChordDiagram& d, std::size_t start, bool reflect);

}  // namespace gaussdiag

#endif
