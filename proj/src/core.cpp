#include "gaussdiag/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace gaussdiag {

GaussWord::GaussWord(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& s : symbols_) {
        if (s.empty()) throw MalformedWord("empty label");
        ++counts[s];
    }
    for (const auto& s : symbols_) {
        auto k = counts[s];
        if (k != 2) {
            throw MalformedWord("label '" + s + "' occurs " + std::to_string(k) +
                                " time" + (k == 1 ? "" : "s") + ", expected 2");
        }
    }
}

ChordDiagram ChordDiagram::from_word(const GaussWord& word) {
    std::unordered_map<std::string, std::size_t> ids;
    std::vector<std::string> labels;
    std::vector<std::size_t> seq;
    seq.reserve(word.length());
    for (const auto& s : word.symbols()) {
        auto [it, inserted] = ids.try_emplace(s, labels.size());
        if (inserted) labels.push_back(s);
        seq.push_back(it->second);
    }
    return from_sequence(seq, labels);
}

ChordDiagram ChordDiagram::from_sequence(std::span<const std::size_t> sequence,
                                         std::span<const std::string> labels,
                                         std::vector<std::size_t>* origin) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    if (sequence.size() % 2 != 0) throw MalformedWord("odd word length");

    std::size_t max_id = 0;
    for (auto id : sequence) max_id = std::max(max_id, id);
    std::vector<std::size_t> renumber(sequence.empty() ? 0 : max_id + 1, unset);
    std::vector<std::size_t> seen(renumber.size(), 0);

    ChordDiagram d;
    d.chord_at_.reserve(sequence.size());
    std::vector<std::size_t> from;
    for (Position p = 0; p < sequence.size(); ++p) {
        auto id = sequence[p];
        if (++seen[id] > 2) {
            throw MalformedWord("chord id " + std::to_string(id) + " occurs more than twice");
        }
        if (renumber[id] == unset) {
            renumber[id] = d.endpoints_.size();
            d.endpoints_.push_back({p, p});
            from.push_back(id);
            d.labels_.push_back(id < labels.size() ? labels[id] : std::to_string(id + 1));
        } else {
            d.endpoints_[renumber[id]].second = p;
        }
        d.chord_at_.push_back(renumber[id]);
    }
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (seen[from[i]] != 2) throw MalformedWord("label '" + d.labels_[i] + "' occurs once");
    }
    if (origin) *origin = std::move(from);
    return d;
}

ChordDiagram ChordDiagram::from_sequence(std::span<const std::size_t> sequence) {
    return from_sequence(sequence, std::span<const std::string>{});
}

std::optional<ChordIndex> ChordDiagram::find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<ChordIndex>(it - labels_.begin());
}

ChordIndex ChordDiagram::index_of(const std::string& label) const {
    if (auto c = find(label)) return *c;
    throw UnknownChord("no chord labelled '" + label + "'");
}

bool ChordDiagram::crosses(ChordIndex a, ChordIndex b) const {
    if (a == b) return false;
    const auto& ea = endpoints_.at(a);
    const auto& eb = endpoints_.at(b);
    bool first_inside = ea.first < eb.first && eb.first < ea.second;
    bool second_inside = ea.first < eb.second && eb.second < ea.second;
    return first_inside != second_inside;
}

GaussWord ChordDiagram::to_word() const {
    std::vector<std::string> symbols;
    symbols.reserve(chord_at_.size());
    for (auto c : chord_at_) symbols.push_back(labels_[c]);
    return GaussWord(std::move(symbols));
}

ChordDiagram ChordDiagram::without(std::span<const ChordIndex> removed,
                                   std::vector<ChordIndex>* origin) const {
    std::vector<std::uint8_t> drop(chord_count(), 0);
    for (auto c : removed) {
        if (!contains(c)) throw UnknownChord("chord index " + std::to_string(c) + " out of range");
        drop[c] = 1;
    }
    std::vector<std::size_t> seq;
    for (auto c : chord_at_) {
        if (!drop[c]) seq.push_back(c);
    }
    return from_sequence(seq, labels_, origin);
}

void Interlacement::set(ChordIndex a, ChordIndex b, bool value) {
    cells_[a * n_ + b] = value;
    cells_[b * n_ + a] = value;
}

std::size_t Interlacement::degree(ChordIndex c) const {
    std::size_t k = 0;
    for (ChordIndex j = 0; j < n_; ++j) k += cells_[c * n_ + j];
    return k;
}

std::vector<ChordIndex> Interlacement::crossing_set(ChordIndex c) const {
    std::vector<ChordIndex> out;
    for (ChordIndex j = 0; j < n_; ++j) {
        if (cells_[c * n_ + j]) out.push_back(j);
    }
    return out;
}

std::size_t Interlacement::common_count(ChordIndex a, ChordIndex b) const {
    std::size_t k = 0;
    for (ChordIndex j = 0; j < n_; ++j) k += cells_[a * n_ + j] & cells_[b * n_ + j];
    return k;
}

std::vector<ChordIndex> Interlacement::common(ChordIndex a, ChordIndex b) const {
    std::vector<ChordIndex> out;
    for (ChordIndex j = 0; j < n_; ++j) {
        if (cells_[a * n_ + j] && cells_[b * n_ + j]) out.push_back(j);
    }
    return out;
}

Interlacement interlacement(const ChordDiagram& d) {
    const auto n = d.chord_count();
    Interlacement x(n);
    // A chord opened and not yet closed when chord b opens crosses b iff it closes before b does.
    std::vector<ChordIndex> open;
    for (Position p = 0; p < d.length(); ++p) {
        auto c = d.chord_at(p);
        if (d.endpoints(c).first == p) {
            open.push_back(c);
            continue;
        }
        auto it = std::find(open.begin(), open.end(), c);
        for (auto later = it + 1; later != open.end(); ++later) x.set(c, *later, true);
        open.erase(it);
    }
    return x;
}

namespace {

// Relabels the symmetric reading into `out`; returns early once it is known not to beat `best`.
// Returns -1, 0, 1 comparing the reading with best (0 only when equal).
int read_and_compare(const std::vector<ChordIndex>& seq, std::size_t start, bool reflect,
                     std::vector<std::uint16_t>& relabel, std::vector<std::uint16_t>& out,
                     const std::vector<std::uint16_t>* best) {
    const auto len = seq.size();
    std::fill(relabel.begin(), relabel.end(), 0);
    std::uint16_t next = 1;
    int order = best ? 0 : -1;
    for (std::size_t k = 0; k < len; ++k) {
        std::size_t p = reflect ? (start + len - k) % len : (start + k) % len;
        auto& l = relabel[seq[p]];
        if (l == 0) l = next++;
        out[k] = l;
        if (order == 0) {
            if (out[k] < (*best)[k]) order = -1;
            else if (out[k] > (*best)[k]) return 1;
        }
    }
    return order;
}

}  // namespace

CanonicalForm canonicalize(const ChordDiagram& d) {
    const auto len = d.length();
    CanonicalForm form;
    if (len == 0) return form;
    std::vector<std::uint16_t> relabel(d.chord_count());
    std::vector<std::uint16_t> scratch(len);
    form.word.assign(len, 0);
    bool have = false;
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (std::size_t start = 0; start < len; ++start) {
            int order = read_and_compare(d.sequence(), start, reflect != 0, relabel, scratch,
                                         have ? &form.word : nullptr);
            if (order < 0) {
                form.word.swap(scratch);
                have = true;
            }
        }
    }
    return form;
}

std::string CanonicalForm::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << ' ';
        os << word[i];
    }
    return os.str();
}

ChordDiagram CanonicalForm::to_diagram() const {
    std::vector<std::size_t> seq(word.begin(), word.end());
    for (auto& s : seq) s -= 1;
    return ChordDiagram::from_sequence(seq);
}

ChordDiagram apply_symmetry(const ChordDiagram& d, std::size_t start, bool reflect) {
    const auto len = d.length();
    if (len == 0) return d;
    std::vector<std::size_t> seq(len);
    for (std::size_t k = 0; k < len; ++k) {
        std::size_t p = reflect ? (start + len - k) % len : (start + k) % len;
        seq[k] = d.chord_at(p);
    }
    return ChordDiagram::from_sequence(seq, d.labels());
}

}  // namespace gaussdiag
