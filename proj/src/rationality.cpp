#include "weyld/rationality.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace weyld {

namespace {

// Scratch buffers for the hot path; sized for the largest supported rank.
struct GraphScratch {
  Root vertices[kMaxPositiveRoots];
  Root preimages[kMaxPositiveRoots];
  std::uint8_t arc[kMaxPositiveRoots][kMaxPositiveRoots];
};

// Collects nu_0 with preimages in source order. Returns -1 after pushing all
// vertices, or the index at which a self-loop u^{-1}(v) <= v was found.
int collect_vertices(const SignedPerm& u, GraphScratch& scratch, int& count) {
  const int r = u.rank();
  count = 0;
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 1; i < r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        const Root beta = kind == 0 ? minus_root(i, j) : plus_root(i, j);
        const Root image = u.apply(beta);
        if (image.sign < 0) continue;
        scratch.vertices[count] = image;
        scratch.preimages[count] = beta;
        if (root_leq(beta, image, r)) return count;
        ++count;
      }
  return -1;
}

bool has_cycle(const GraphScratch& scratch, int n) {
  // Iterative three-color DFS over the canonical vertex order.
  std::uint8_t color[kMaxPositiveRoots] = {0};
  int stack[kMaxPositiveRoots];
  int next_child[kMaxPositiveRoots];
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    int top = 0;
    stack[top] = start;
    next_child[top] = 0;
    color[start] = 1;
    while (top >= 0) {
      const int node = stack[top];
      int child = next_child[top];
      while (child < n && scratch.arc[node][child] == 0) ++child;
      if (child == n) {
        color[node] = 2;
        --top;
        continue;
      }
      next_child[top] = child + 1;
      if (color[child] == 1) return true;
      if (color[child] == 0) {
        ++top;
        stack[top] = child;
        next_child[top] = 0;
        color[child] = 1;
      }
    }
  }
  return false;
}

}  // namespace

int RationalityGraph::arc_count() const {
  int total = 0;
  for (const auto& targets : arcs) total += static_cast<int>(targets.size());
  return total;
}

std::optional<int> RationalityGraph::vertex_position(const Root& root) const {
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    if (vertices[i] == root) return i;
  return std::nullopt;
}

bool RationalityGraph::has_arc(int from, int to) const {
  const auto& targets = arcs[from];
  return std::binary_search(targets.begin(), targets.end(), to);
}

std::vector<Root> nu0(const SignedPerm& u) {
  const int r = u.rank();
  std::vector<Root> result;
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 1; i < r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        const Root beta = kind == 0 ? minus_root(i, j) : plus_root(i, j);
        const Root image = u.apply(beta);
        if (image.sign > 0) result.push_back(image);
      }
  sort_roots(result, r);
  return result;
}

NuSequence nu_sequence(const SignedPerm& u) {
  const int r = u.rank();
  NuSequence seq;
  seq.levels.push_back(nu0(u));
  const int cap = r * (r - 1);
  while (!seq.levels.back().empty()) {
    const std::vector<Root>& prev = seq.levels.back();
    std::vector<Root> next;
    for (const Root& gamma : adj(prev, r)) {
      const Root image = u.apply(gamma);
      if (image.sign > 0) next.push_back(image);
    }
    sort_roots(next, r);
    const bool stabilized = next == prev;
    seq.levels.push_back(std::move(next));
    if (stabilized) break;
    if (static_cast<int>(seq.levels.size()) > cap)
      throw std::logic_error("nu sequence failed to stabilize within #Pi_+ steps");
  }
  return seq;
}

RationalityGraph build_graph(const SignedPerm& u) {
  const int r = u.rank();
  RationalityGraph graph;
  graph.rank = r;
  graph.vertices = nu0(u);
  const SignedPerm uinv = u.inverse();
  const int n = static_cast<int>(graph.vertices.size());
  graph.preimages.reserve(n);
  for (const Root& vertex : graph.vertices) {
    Root pre = uinv.apply(vertex);
    pre.sign = +1;  // members of nu_0 have positive preimages by construction
    graph.preimages.push_back(pre);
  }
  graph.arcs.assign(n, {});
  for (int from = 0; from < n; ++from)
    for (int to = 0; to < n; ++to)
      if (root_leq(graph.preimages[from], graph.vertices[to], r))
        graph.arcs[from].push_back(to);
  return graph;
}

bool is_rational(const SignedPerm& u) {
  const int r = u.rank();
  static thread_local GraphScratch scratch;
  int n = 0;
  if (collect_vertices(u, scratch, n) >= 0) return false;
  for (int from = 0; from < n; ++from) {
    const Root& pre = scratch.preimages[from];
    for (int to = 0; to < n; ++to) {
      const bool arc = root_leq(pre, scratch.vertices[to], r);
      scratch.arc[from][to] = arc;
      if (arc && to < from && scratch.arc[to][from]) return false;  // two-cycle
    }
  }
  return !has_cycle(scratch, n);
}

std::optional<Certificate> find_certificate(const SignedPerm& u) {
  const RationalityGraph graph = build_graph(u);
  const int n = static_cast<int>(graph.vertices.size());
  for (int i = 0; i < n; ++i)
    if (graph.has_arc(i, i))
      return Certificate{Certificate::Kind::Loop, {graph.vertices[i]}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (graph.has_arc(i, j) && graph.has_arc(j, i))
        return Certificate{Certificate::Kind::TwoCycle,
                           {graph.vertices[i], graph.vertices[j]}};
  // No loop or two-cycle: any remaining cycle has length >= 3. First back
  // edge in DFS order closes the cycle along the current stack.
  std::vector<std::uint8_t> color(n, 0);
  std::vector<int> stack, next_child;
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    stack = {start};
    next_child = {0};
    color[start] = 1;
    while (!stack.empty()) {
      const int node = stack.back();
      const auto& targets = graph.arcs[node];
      int& cursor = next_child.back();
      if (cursor == static_cast<int>(targets.size())) {
        color[node] = 2;
        stack.pop_back();
        next_child.pop_back();
        continue;
      }
      const int child = targets[cursor++];
      if (color[child] == 1) {
        std::vector<Root> cycle;
        const auto begin = std::find(stack.begin(), stack.end(), child);
        for (auto it = begin; it != stack.end(); ++it)
          cycle.push_back(graph.vertices[*it]);
        return Certificate{Certificate::Kind::Cycle, std::move(cycle)};
      }
      if (color[child] == 0) {
        stack.push_back(child);
        next_child.push_back(0);
        color[child] = 1;
      }
    }
  }
  return std::nullopt;
}

bool certificate_holds(const SignedPerm& u, const Certificate& cert) {
  const int r = u.rank();
  const std::size_t count = cert.roots.size();
  switch (cert.kind) {
    case Certificate::Kind::Loop:
      if (count != 1) return false;
      break;
    case Certificate::Kind::TwoCycle:
      if (count != 2) return false;
      break;
    case Certificate::Kind::Cycle:
      if (count < 3) return false;
      break;
  }
  const SignedPerm uinv = u.inverse();
  for (std::size_t t = 0; t < count; ++t) {
    const Root& vertex = cert.roots[t];
    if (vertex.sign < 0) return false;
    Root pre = uinv.apply(vertex);
    if (pre.sign < 0) return false;  // vertex not in nu_0(u)
    if (!root_leq(pre, cert.roots[(t + 1) % count], r)) return false;
  }
  return true;
}

std::vector<int> rational_ascents(const SignedPerm& u) {
  if (!is_rational(u))
    throw std::invalid_argument("rational_ascents requires a rational element");
  const int r = u.rank();
  const SignedPerm uinv = u.inverse();
  std::vector<int> ascents;
  for (int a = 1; a <= r; ++a) {
    if (uinv.apply(simple_root(a, r)).sign < 0) continue;
    if (is_rational(simple_reflection(a, r).compose(u))) ascents.push_back(a);
  }
  return ascents;
}

std::string certificate_to_json(const Certificate& cert) {
  nlohmann::json out;
  switch (cert.kind) {
    case Certificate::Kind::Loop:
      out["kind"] = "loop";
      out["root"] = root_to_string(cert.roots.front());
      break;
    case Certificate::Kind::TwoCycle:
    case Certificate::Kind::Cycle: {
      out["kind"] = cert.kind == Certificate::Kind::TwoCycle ? "two_cycle" : "cycle";
      std::vector<std::string> roots;
      for (const Root& root : cert.roots) roots.push_back(root_to_string(root));
      out["roots"] = roots;
      break;
    }
  }
  return out.dump();
}

}  // namespace weyld
