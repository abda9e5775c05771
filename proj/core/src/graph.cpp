#include "tailspec/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tailspec {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 1 || v > g.n)
        throw std::invalid_argument(std::string(what) + ": vertex " +
                                    std::to_string(v) + " outside [1," +
                                    std::to_string(g.n) + "]");
}

}  // namespace

Graph::Graph(int vertex_count) : n(vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("Graph: negative vertex count");
}

void Graph::add_edge(int i, int j) {
    check_vertex(*this, i, "add_edge");
    check_vertex(*this, j, "add_edge");
    if (i == j) throw std::invalid_argument("add_edge: self-loop rejected");
    edges.insert({std::min(i, j), std::max(i, j)});
}

bool Graph::has_edge(int i, int j) const {
    return edges.count({std::min(i, j), std::max(i, j)}) > 0;
}

int Graph::degree(int v) const {
    check_vertex(*this, v, "degree");
    int d = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(*this, v, "neighbors");
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void FamilySpec::validate() const {
    if (kappa.empty()) throw std::invalid_argument("FamilySpec: empty kappa");
    for (int k : kappa) {
        if (k < 1) throw std::invalid_argument("FamilySpec: k_j must be >= 1");
        if (family == Family::flower && k < 2)
            throw std::invalid_argument(
                "FamilySpec: flower petals need k_j >= 2 (a cycle has at least "
                "3 vertices)");
    }
}

bool FamilySpec::is_trivial_star() const {
    return family == Family::star && kappa.size() == 2 && kappa[0] == 1 &&
           kappa[1] == 1;
}

int FamilySpec::vertex_count() const {
    int total = 1;
    for (int k : kappa) total += k;
    return total;
}

Graph build_path(int m) {
    if (m < 1) throw std::invalid_argument("build_path: need m >= 1");
    Graph g(m);
    for (int i = 1; i < m; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph build_multistar(const std::vector<int>& kappa) {
    FamilySpec spec{Family::star, kappa};
    spec.validate();
    Graph g(spec.vertex_count());
    int next = 2;  // root is vertex 1
    for (int k : kappa) {
        int prev = 1;
        for (int step = 0; step < k; ++step) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    g.anchor = 1;
    return g;
}

Graph build_flower(const std::vector<int>& kappa) {
    FamilySpec spec{Family::flower, kappa};
    spec.validate();
    Graph g(spec.vertex_count());
    int next = 2;
    for (int k : kappa) {
        int first = next;
        int prev = 1;
        for (int step = 0; step < k; ++step) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
        (void)first;
    }
    g.anchor = 1;
    return g;
}

Graph couple(const Graph& g1, const Graph& g2) {
    if (!g1.anchor || !g2.anchor)
        throw std::invalid_argument("couple: both anchors must be set");
    Graph g(g1.n + g2.n);
    for (const auto& [a, b] : g1.edges) g.add_edge(a, b);
    for (const auto& [a, b] : g2.edges) g.add_edge(a + g1.n, b + g1.n);
    g.add_edge(*g1.anchor, *g2.anchor + g1.n);
    g.anchor = *g1.anchor;
    return g;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& drop) {
    std::vector<bool> gone(g.n + 1, false);
    for (int v : drop) {
        check_vertex(g, v, "delete_vertices");
        gone[v] = true;
    }
    // order-preserving relabeling of the survivors
    std::vector<int> relabel(g.n + 1, 0);
    int next = 1;
    for (int v = 1; v <= g.n; ++v)
        if (!gone[v]) relabel[v] = next++;
    Graph out(next - 1);
    for (const auto& [a, b] : g.edges)
        if (!gone[a] && !gone[b]) out.add_edge(relabel[a], relabel[b]);
    if (g.anchor && !gone[*g.anchor]) out.anchor = relabel[*g.anchor];
    return out;
}

std::vector<std::vector<int>> simple_cycles_through(const Graph& g, int v) {
    check_vertex(g, v, "simple_cycles_through");
    std::vector<std::vector<int>> cycles;
    std::vector<bool> on_path(g.n + 1, false);
    std::vector<int> path{v};
    on_path[v] = true;

    // Each cycle is traversed in two directions; keeping only closures
    // with path[1] < path.back() reports it once.
    auto dfs = [&](auto&& self, int u) -> void {
        for (int w : g.neighbors(u)) {
            if (w == v) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    std::vector<int> cyc = path;
                    std::sort(cyc.begin(), cyc.end());
                    cycles.push_back(std::move(cyc));
                }
                continue;
            }
            if (on_path[w]) continue;
            on_path[w] = true;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on_path[w] = false;
        }
    };
    dfs(dfs, v);
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

bool connected_from(const Graph& g, int from) {
    if (g.n == 0) return true;
    check_vertex(g, from, "connected_from");
    std::vector<bool> seen(g.n + 1, false);
    std::vector<int> stack{from};
    seen[from] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.n;
}

}  // namespace tailspec
