#include "nutgraph/named_graphs.hpp"

#include <vector>

namespace nut::named {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph lcf(int n, std::span<const int> shifts) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    int j = ((i + shifts[i % shifts.size()]) % n + n) % n;
    if (i < j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph frucht() {
  static constexpr int shifts[] = {-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2};
  return lcf(12, shifts);
}

Graph g288_regular() {
  std::vector<Edge> e;
  // K5 minus {0,1} on 0..4 and minus {5,6} on 5..9.
  for (int base : {0, 5})
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (!(i == 0 && j == 1)) e.emplace_back(base + i, base + j);
  for (int v : {0, 1, 5, 6}) e.emplace_back(v, 10);
  return Graph(11, e);
}

Graph g288_nut() {
  std::vector<Edge> e;
  for (int base : {0, 5})
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) e.emplace_back(base + i, base + j);
  // a1 - v1 - a2 - v2 - a1
  e.insert(e.end(), {{5, 0}, {0, 6}, {6, 1}, {1, 5}});
  return Graph(10, e);
}

}  // namespace nut::named
