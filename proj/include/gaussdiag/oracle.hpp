#ifndef GAUSSDIAG_ORACLE_HPP
#define GAUSSDIAG_ORACLE_HPP

#include "gaussdiag/core.hpp"

#include <array>
#include <optional>
#include <vector>

// Brute-force planarity of a curve shadow: the diagram is read as a 4-valent graph
// (one vertex per chord, one edge per circle segment) and every transversal rotation
// system is tried until one has Euler characteristic 2.

namespace gaussdiag::oracle {

class EmptyDiagram : public Error {
public:
    using Error::Error;
};

/// Half-edge id. Position p owns dart 2p (arriving along segment p-1) and 2p+1
/// (leaving along segment p).
using Dart = std::size_t;

constexpr Dart incoming(Position p) { return 2 * p; }
constexpr Dart outgoing(Position p) { return 2 * p + 1; }

struct FourValentMap {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    /// twin[d] is the other half of d's edge.
    std::vector<Dart> twin;
    /// Per vertex: first passage in/out, second passage in/out.
    std::vector<std::array<Dart, 4>> strands;
    /// vertex_of[d]
    std::vector<std::size_t> vertex_of;
};

/// handedness[v] == false: cyclic order (in1, in2, out1, out2); true: (in1, out2, out1, in2).
/// Either way the two strands alternate around the vertex.
struct RotationSystem {
    std::vector<bool> handedness;
};

struct EmbeddingWitness {
    RotationSystem rotation;
    std::vector<std::vector<Dart>> faces;
    long euler_characteristic = 0;
};

/// Throws EmptyDiagram for n = 0.
FourValentMap build_map(const ChordDiagram& d);

/// next[d]: successor of d in the cyclic order around its vertex.
std::vector<Dart> rotation_successor(const FourValentMap& m, const RotationSystem& r);

std::vector<std::vector<Dart>> trace_faces(const FourValentMap& m, const RotationSystem& r);
std::size_t count_faces(const FourValentMap& m, const RotationSystem& r);

/// Lexicographically least handedness vector (false < true, vertex 0 first) giving genus 0.
/// The empty diagram yields an empty witness. `workers` > 1 splits the search space.
std::optional<EmbeddingWitness> oracle_realizable(const ChordDiagram& d, unsigned workers = 1);

/// Re-traces the faces, checks V - E + F = 2 and, when recorded, that the faces match.
bool verify_embedding(const ChordDiagram& d, const EmbeddingWitness& w);

}  // namespace gaussdiag::oracle

#endif
