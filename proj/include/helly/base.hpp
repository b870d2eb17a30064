#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace helly {

// Every distance, radius and function value in this library is a half-integer
// stored doubled, so all arithmetic is exact int64. A plain graph edge has
// doubled length 2; a subdivision edge has doubled length 1.
using Dist2 = long long;

// A vertex is a coordinate tuple: finite graphs use a single component (the
// vertex id), lattice families use d components. Lexicographic order on the
// tuple is the canonical vertex order used by every deterministic enumeration.
using Vertex = std::vector<long long>;

// A clique is kept sorted ascending and duplicate-free.
using Clique = std::vector<Vertex>;

struct Budget {
    int max_vertices = 32;           // hard cap on enumerated vertex sets
    long long max_nodes = 1 << 20;   // search tree node cap
    int max_word_len = 4;            // group-element word length per factor
    int window = 16;                 // displacement verification window
    int a_max = 8;                   // largest automorphism power tried
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input graph is not connected; all operations assume connectivity.
struct DisconnectedGraph : Error {
    DisconnectedGraph() : Error("graph is not connected") {}
};

// A search or enumeration hit its node/size cap. `partial` reports how much
// work completed, so callers can distinguish "no" from "don't know".
struct BudgetExceeded : Error {
    long long partial;
    explicit BudgetExceeded(long long done)
        : Error("budget exceeded after " + std::to_string(done) + " nodes"),
          partial(done) {}
};

// An operation that requires the Helly property detected its absence
// (for example, a ball intersection that should be nonempty is empty).
struct NotHelly : Error {
    NotHelly() : Error("graph is not Helly") {}
};

// Two cliques do not have a well-defined transverse distance, or it is not
// the multiple of L the caller asked for.
struct NotTransverse : Error {
    explicit NotTransverse(const std::string& what) : Error(what) {}
};

// A ball intersection in a path construction came out empty.
struct EmptyIntersection : Error {
    EmptyIntersection() : Error("ball intersection is empty") {}
};

// Half-integer points were not enough to carry out the computation; a finer
// subdivision would be needed.
struct SubdivisionInsufficient : Error {
    SubdivisionInsufficient() : Error("no half-integer witness exists") {}
};

// A complete search ran out of states without reaching its goal.
struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& what) : Error(what) {}
};

// Malformed input file; line/column are 1-based.
struct ParseError : Error {
    int line, col;
    ParseError(int ln, int cl, const std::string& what)
        : Error("line " + std::to_string(ln) + ", column " +
                std::to_string(cl) + ": " + what),
          line(ln), col(cl) {}
};

}  // namespace helly
