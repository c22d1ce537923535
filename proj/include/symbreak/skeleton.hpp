#pragma once

#include "symbreak/graph.hpp"

namespace symbreak {

// Boolean square: edge xy iff x != y and N(x) and N(y) meet; a loop sits at
// every non-isolated vertex. Loops never enter Graph, they live in the flag
// set here.
struct BooleanSquare {
  Graph base;
  VertexSet loop_vertices;
};

BooleanSquare boolean_square(const Graph& g);

// An edge xy of the Boolean square is dispensable if it is a loop (x == y),
// or some z satisfies both
//   (1) N(x)&N(y) < N(x)&N(z)  or  N(x) < N(z) < N(y)
//   (2) N(y)&N(x) < N(y)&N(z)  or  N(y) < N(z) < N(x)
// with < strict inclusion and z ranging over all vertices.
bool is_dispensable(const Graph& g, int x, int y);

// Boolean square minus all dispensable edges (loops drop out by definition).
Graph cartesian_skeleton(const Graph& g);

}  // namespace symbreak
