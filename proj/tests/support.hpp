#ifndef GAUSSDIAG_TESTS_SUPPORT_HPP
#define GAUSSDIAG_TESTS_SUPPORT_HPP

// Helpers shared by the unit tests. The brute-force routines here work on raw label
// sequences and deliberately avoid the library's own algorithms.

#include "gaussdiag/codec.hpp"
#include "gaussdiag/core.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing_support {

inline gaussdiag::ChordDiagram diagram(const std::string& text) {
    return gaussdiag::ChordDiagram::from_word(gaussdiag::codec::parse_gauss_code(text));
}

inline std::string text(const gaussdiag::ChordDiagram& d) {
    return gaussdiag::codec::format_gauss_code(d);
}

/// Label indices for a list of labels in d.
inline std::vector<gaussdiag::ChordIndex> indices(const gaussdiag::ChordDiagram& d,
                                                  const std::vector<std::string>& labels) {
    std::vector<gaussdiag::ChordIndex> out;
    for (const auto& l : labels) out.push_back(d.index_of(l));
    return out;
}

inline std::vector<std::string> labels(const gaussdiag::ChordDiagram& d,
                                       const std::vector<gaussdiag::ChordIndex>& chords) {
    std::vector<std::string> out;
    for (auto c : chords) out.push_back(d.label(c));
    return out;
}

/// Uniformly shuffled word with n chords labelled 1..n.
inline std::vector<int> random_word(std::size_t n, std::mt19937& rng) {
    std::vector<int> w;
    for (std::size_t c = 1; c <= n; ++c) {
        w.push_back(static_cast<int>(c));
        w.push_back(static_cast<int>(c));
    }
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

inline gaussdiag::ChordDiagram from_ints(const std::vector<int>& w) {
    std::vector<std::string> s;
    for (int x : w) s.push_back(std::to_string(x));
    return gaussdiag::ChordDiagram::from_word(gaussdiag::GaussWord(s));
}

/// Every label sequence where each of 1..n appears twice (all (2n)!/2^n of them).
inline std::vector<std::vector<int>> all_words(std::size_t n) {
    std::vector<int> w;
    for (std::size_t c = 1; c <= n; ++c) {
        w.push_back(static_cast<int>(c));
        w.push_back(static_cast<int>(c));
    }
    std::vector<std::vector<int>> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Positions of label x in w.
inline std::pair<std::size_t, std::size_t> positions(const std::vector<int>& w, int x) {
    std::size_t a = w.size(), b = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != x) continue;
        if (a == w.size()) a = i;
        else b = i;
    }
    return {a, b};
}

/// Crossing straight from the definition: exactly one endpoint of y strictly between
/// the endpoints of x.
inline bool brute_cross(const std::vector<int>& w, int x, int y) {
    if (x == y) return false;
    auto [a, b] = positions(w, x);
    auto [p, q] = positions(w, y);
    int inside = (a < p && p < b) + (a < q && q < b);
    return inside == 1;
}

/// Relabels by first occurrence, 1-based.
inline std::vector<int> normalize(const std::vector<int>& w) {
    std::map<int, int> rename;
    std::vector<int> out;
    for (int x : w) {
        auto it = rename.find(x);
        if (it == rename.end()) it = rename.emplace(x, static_cast<int>(rename.size()) + 1).first;
        out.push_back(it->second);
    }
    return out;
}

/// Least normalized word over every rotation of w and of its reverse.
inline std::vector<int> brute_canonical(const std::vector<int>& w) {
    std::vector<int> best;
    for (int reflect = 0; reflect < 2; ++reflect) {
        std::vector<int> base = w;
        if (reflect) std::reverse(base.begin(), base.end());
        for (std::size_t s = 0; s < base.size(); ++s) {
            std::vector<int> r(base.begin() + static_cast<long>(s), base.end());
            r.insert(r.end(), base.begin(), base.begin() + static_cast<long>(s));
            auto n = normalize(r);
            if (best.empty() || n < best) best = n;
        }
    }
    return best;
}

inline std::size_t brute_orbit_count(std::size_t n) {
    std::set<std::vector<int>> seen;
    for (const auto& w : all_words(n)) seen.insert(brute_canonical(w));
    return seen.size();
}

/// W1 c W2 c W3 -> W1 W2^R W3 on raw labels.
inline std::vector<std::string> brute_smooth(const std::vector<std::string>& w,
                                             const std::string& c) {
    auto a = std::find(w.begin(), w.end(), c);
    auto b = std::find(a + 1, w.end(), c);
    std::vector<std::string> out(w.begin(), a);
    out.insert(out.end(), std::make_reverse_iterator(b), std::make_reverse_iterator(a + 1));
    out.insert(out.end(), b + 1, w.end());
    return out;
}

}  // namespace testing_support

#endif
