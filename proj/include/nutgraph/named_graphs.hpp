#pragma once

#include <span>
#include <string_view>

#include "nutgraph/graph.hpp"

namespace nut::named {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph petersen();

// Hamiltonian cycle 0..n-1 plus chords i -- i+shift[i mod |shifts|].
Graph lcf(int n, std::span<const int> shifts);

// Cubic, asymmetric, order 12.
Graph frucht();

// Two copies of K5 minus an edge {v1,v2}, plus a centre joined to the four
// ends of the missing edges.  4-regular, order 11.
Graph g288_regular();

// Two copies of K5 joined by the 4-cycle a1 v1 a2 v2.  Order 10, 24 edges.
// Vertices 0..4 are v1..v5, 5..9 are a1..a5.
Graph g288_nut();

// Generators of the order-288 group realised by both graphs above, in
// 1-based cycle notation on 10 points.
inline constexpr std::string_view kG288Generators =
    "(1,2,3)(4,5)(6,7,8);(1,8)(2,7)(3,6)(4,9)(5,10);(7,8)";

}  // namespace nut::named
