#include "gaussdiag/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <thread>

namespace gaussdiag::oracle {

FourValentMap build_map(const ChordDiagram& d) {
    const auto n = d.chord_count();
    if (n == 0) throw EmptyDiagram("a diagram without chords has no crossing graph");
    const auto len = d.length();

    FourValentMap m;
    m.vertex_count = n;
    m.edge_count = len;
    m.twin.resize(2 * len);
    m.vertex_of.resize(2 * len);
    m.strands.resize(n);
    for (Position p = 0; p < len; ++p) {
        Position next = (p + 1) % len;
        m.twin[outgoing(p)] = incoming(next);
        m.twin[incoming(next)] = outgoing(p);
        m.vertex_of[incoming(p)] = d.chord_at(p);
        m.vertex_of[outgoing(p)] = d.chord_at(p);
    }
    for (ChordIndex c = 0; c < n; ++c) {
        const auto [p, q] = d.endpoints(c);
        m.strands[c] = {incoming(p), outgoing(p), incoming(q), outgoing(q)};
    }
    return m;
}

std::vector<Dart> rotation_successor(const FourValentMap& m, const RotationSystem& r) {
    std::vector<Dart> next(m.twin.size());
    for (std::size_t v = 0; v < m.vertex_count; ++v) {
        const auto [in1, out1, in2, out2] = m.strands[v];
        std::array<Dart, 4> cycle = r.handedness[v] ? std::array<Dart, 4>{in1, out2, out1, in2}
                                                    : std::array<Dart, 4>{in1, in2, out1, out2};
        for (std::size_t k = 0; k < 4; ++k) next[cycle[k]] = cycle[(k + 1) % 4];
    }
    return next;
}

std::vector<std::vector<Dart>> trace_faces(const FourValentMap& m, const RotationSystem& r) {
    const auto next = rotation_successor(m, r);
    std::vector<std::uint8_t> used(m.twin.size(), 0);
    std::vector<std::vector<Dart>> faces;
    for (Dart start = 0; start < m.twin.size(); ++start) {
        if (used[start]) continue;
        std::vector<Dart> face;
        for (Dart h = start; !used[h]; h = next[m.twin[h]]) {
            used[h] = 1;
            face.push_back(h);
        }
        faces.push_back(std::move(face));
    }
    return faces;
}

std::size_t count_faces(const FourValentMap& m, const RotationSystem& r) {
    const auto next = rotation_successor(m, r);
    std::vector<std::uint8_t> used(m.twin.size(), 0);
    std::size_t faces = 0;
    for (Dart start = 0; start < m.twin.size(); ++start) {
        if (used[start]) continue;
        ++faces;
        for (Dart h = start; !used[h]; h = next[m.twin[h]]) used[h] = 1;
    }
    return faces;
}

namespace {

RotationSystem rotation_from_rank(std::size_t n, std::uint64_t rank) {
    RotationSystem r;
    r.handedness.resize(n);
    for (std::size_t v = 0; v < n; ++v) r.handedness[v] = (rank >> (n - 1 - v)) & 1u;
    return r;
}

}  // namespace

std::optional<EmbeddingWitness> oracle_realizable(const ChordDiagram& d, unsigned workers) {
    const auto n = d.chord_count();
    if (n == 0) return EmbeddingWitness{{}, {}, 2};
    if (n >= 63) throw Error("oracle enumeration limited to fewer than 63 chords");

    const auto m = build_map(d);
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::size_t planar_faces = n + 2;
    constexpr auto none = std::numeric_limits<std::uint64_t>::max();

    // Strided ranks per worker; the smallest hit wins, others stop once past it.
    std::atomic<std::uint64_t> best{none};
    auto search = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t rank = first; rank < total; rank += stride) {
            if (rank > best.load(std::memory_order_relaxed)) return;
            if (count_faces(m, rotation_from_rank(n, rank)) == planar_faces) {
                auto seen = best.load();
                while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
                }
                return;
            }
        }
    };

    workers = std::max(1u, workers);
    if (workers == 1 || total < 64) {
        search(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(search, w, workers);
        for (auto& t : pool) t.join();
    }

    if (best.load() == none) return std::nullopt;
    EmbeddingWitness w;
    w.rotation = rotation_from_rank(n, best.load());
    w.faces = trace_faces(m, w.rotation);
    w.euler_characteristic = static_cast<long>(n) - static_cast<long>(m.edge_count) +
                             static_cast<long>(w.faces.size());
    return w;
}

bool verify_embedding(const ChordDiagram& d, const EmbeddingWitness& w) {
    const auto n = d.chord_count();
    if (n == 0) return true;
    if (w.rotation.handedness.size() != n) return false;
    const auto m = build_map(d);
    const auto faces = trace_faces(m, w.rotation);
    const long chi = static_cast<long>(n) - static_cast<long>(m.edge_count) +
                     static_cast<long>(faces.size());
    if (chi != 2 || w.euler_characteristic != chi) return false;
    return w.faces.empty() || w.faces == faces;
}

}  // namespace gaussdiag::oracle
