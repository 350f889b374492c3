#pragma once

// Frozen expected values for the test and acceptance suites.
//
// These tables were transcribed by hand from worked reference examples
// and are the ground truth the library is checked against.  They must never
// be regenerated from library output.

#include <array>
#include <string>
#include <vector>

namespace frozen {

// A monomial as a list of (i, k, exponent) entries sorted by (k, i).
struct Factor {
  int i;
  long long k;
  long long e;
};
using MonoSpec = std::vector<Factor>;

struct LabeledEdge {
  int src;
  int label;
  int dst;
};

// ---------------------------------------------------------------------------
// The 10-vertex crystal graph generated from Y(0,1)^-3 Y(1,0)^3 at n = 3
// (complete data: every node and all 18 arrows, 6 per label).
// ---------------------------------------------------------------------------

inline const std::array<MonoSpec, 10> kM13Nodes = {{
    /* 0 */ {{0, 0, 3}, {2, 1, -3}},
    /* 1 */ {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, -1}, {1, 1, -1}, {2, 1, -1}},
    /* 2 */ {{0, 0, 2}, {1, 0, 1}, {0, 1, -1}, {2, 1, -2}},
    /* 3 */ {{0, 0, 1}, {2, 0, 2}, {1, 1, -2}, {2, 1, -1}},
    /* 4 */ {{1, 0, 3}, {0, 1, -3}},
    /* 5 */ {{1, 0, 2}, {2, 0, 1}, {0, 1, -2}, {1, 1, -1}},
    /* 6 */ {{0, 0, 2}, {2, 0, 1}, {1, 1, -1}, {2, 1, -2}},
    /* 7 */ {{2, 0, 3}, {1, 1, -3}},
    /* 8 */ {{0, 0, 1}, {1, 0, 2}, {0, 1, -2}, {2, 1, -1}},
    /* 9 */ {{1, 0, 1}, {2, 0, 2}, {0, 1, -1}, {1, 1, -2}},
}};

inline const std::array<LabeledEdge, 18> kM13Edges = {{
    // label 0
    {8, 0, 4},
    {0, 0, 2},
    {2, 0, 8},
    {1, 0, 5},
    {3, 0, 9},
    {6, 0, 1},
    // label 1
    {4, 1, 5},
    {5, 1, 9},
    {9, 1, 7},
    {8, 1, 1},
    {1, 1, 3},
    {2, 1, 6},
    // label 2
    {6, 2, 0},
    {5, 2, 8},
    {1, 2, 2},
    {7, 2, 3},
    {3, 2, 6},
    {9, 2, 1},
}};

// The three individually named arrows of acceptance criterion 1 (indices into
// kM13Nodes): node_4 -(1)-> node_5, node_8 -(0)-> node_4, node_7 -(2)-> node_3.
inline const std::array<LabeledEdge, 3> kM13NamedEdges = {{
    {4, 1, 5},
    {8, 0, 4},
    {7, 2, 3},
}};

// ---------------------------------------------------------------------------
// Ungraded character of the 6-element monomial crystal at n = 3, s = 2
// (six distinct terms, each with coefficient 1).
// ---------------------------------------------------------------------------

inline const std::array<MonoSpec, 6> kCharacterM12 = {{
    {{2, 0, 2}, {1, 1, -2}},
    {{0, 0, 1}, {2, 0, 1}, {1, 1, -1}, {2, 1, -1}},
    {{0, 0, 1}, {1, 0, 1}, {0, 1, -1}, {2, 1, -1}},
    {{1, 0, 2}, {0, 1, -2}},
    {{0, 0, 2}, {2, 1, -2}},
    {{1, 0, 1}, {2, 0, 1}, {0, 1, -1}, {1, 1, -1}},
}};

// ---------------------------------------------------------------------------
// Replayed interactive-session checks: seed monomial, rank, expected closure
// size, and the tensor factor sizes (s values, in fold order) of the KR
// tensor product the closure must be isomorphic to.
// ---------------------------------------------------------------------------

struct Replay {
  int n;
  MonoSpec seed;
  long long size;
  std::vector<long long> tensor_s;  // fold B^{1,s_1} (x) B^{1,s_2} (x) ...
};

inline const std::array<Replay, 3> kReplays = {{
    {5, {{1, 0, 2}, {0, 1, -2}}, 15, {2}},
    {5, {{1, 0, 2}, {0, 1, -2}, {1, 1, 1}, {0, 2, -1}}, 75, {2, 1}},
    {3, {{1, 0, 1}, {0, 1, -1}, {1, 1, 2}, {0, 2, -2}}, 18, {1, 2}},
}};

// ---------------------------------------------------------------------------
// Tensor-square counts at n = 3, s = 1: the product graph (left) and the
// capacity-two monomial crystal (right).
// ---------------------------------------------------------------------------

inline constexpr int kTensorSquareVertices = 9;
inline constexpr int kTensorSquareEdges = 12;
inline constexpr int kM12Vertices = 6;
inline constexpr int kM12Edges = 9;

// The three elements of the s = 1 monomial crystal at n = 3 (also the 3-term
// character), in canonical (k, i) order per monomial.
inline const std::array<MonoSpec, 3> kM11Nodes = {{
    {{1, 0, 1}, {0, 1, -1}},
    {{2, 0, 1}, {1, 1, -1}},
    {{0, 0, 1}, {2, 1, -1}},
}};

}  // namespace frozen
