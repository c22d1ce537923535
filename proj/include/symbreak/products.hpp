#pragma once

#include <array>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

// Flattening between tuple coordinates and flat product indices,
// row-major: (g, h) -> g * |V(H)| + h.
struct ProductVertexMap {
  std::vector<int> factor_dims;

  long size() const {
    long s = 1;
    for (int d : factor_dims) s *= d;
    return s;
  }
  long flatten(std::span<const int> coords) const;
  std::vector<int> unflatten(long index) const;
};

enum class ProductKind { kronecker, cartesian };

Graph kronecker(const Graph& g, const Graph& h);
Graph cartesian(const Graph& g, const Graph& h);
Graph product_power(ProductKind kind, const Graph& g, int k);

// The two vertex sets (V0xW0)u(V1xW1) and (V0xW1)u(V1xW0) of G x H as flat
// indices. For connected bipartite factors these are exactly the two
// connected components; exact_components is false when a factor is
// disconnected (components may split further).
struct BipartiteSplit {
  std::array<std::vector<int>, 2> classes;
  bool exact_components = true;
};
BipartiteSplit bipartite_split(const Graph& g, const Graph& h);

// Kronecker connectivity: connected iff both factors connected and at least
// one non-bipartite; two components when both connected and bipartite.
struct WeichselPrediction {
  bool connected;
  int component_count;  // -1 when the rule gives no exact count
};
WeichselPrediction weichsel_prediction(const Graph& g, const Graph& h);

}  // namespace symbreak
