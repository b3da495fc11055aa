#include "morseconf/plane_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace morseconf {

PlaneTree PlaneTree::parse(const std::string& text) {
    PlaneTree t;
    std::vector<int> stack;
    int depth_zero_groups = 0;
    for (char c : text) {
        if (c == '(') {
            int id = static_cast<int>(t.parent_.size());
            int par = stack.empty() ? -1 : stack.back();
            t.parent_.push_back(par);
            t.children_.emplace_back();
            if (par >= 0)
                t.children_[par].push_back(id);
            else if (id > 0)
                throw std::invalid_argument("plane tree: more than one outermost vertex");
            stack.push_back(id);
        } else if (c == ')') {
            if (stack.empty())
                throw std::invalid_argument("plane tree: unbalanced ')'");
            if (stack.size() == 1) ++depth_zero_groups;
            stack.pop_back();
        } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            continue;
        } else {
            throw std::invalid_argument("plane tree: unexpected character");
        }
    }
    if (!stack.empty())
        throw std::invalid_argument("plane tree: unbalanced '('");
    if (t.parent_.empty())
        throw std::invalid_argument("plane tree: empty input");
    (void)depth_zero_groups;
    if (t.children_[0].size() != 1)
        throw std::invalid_argument("plane tree: root must have exactly one child");
    t.index_walks();
    return t;
}

std::string PlaneTree::attach_pendant_root(const std::string& text) {
    return "(" + text + ")";
}

void PlaneTree::index_walks() {
    int n = vertex_count();
    tin_.assign(n, 0);
    tout_.assign(n, 0);
    int timer = 0;
    // iterative DFS in plane order; vertex ids already equal visit order
    std::vector<std::pair<int, size_t>> st;
    st.emplace_back(0, 0);
    tin_[0] = timer++;
    while (!st.empty()) {
        auto& [v, ci] = st.back();
        if (ci < children_[v].size()) {
            int c = children_[v][ci++];
            tin_[c] = timer++;
            st.emplace_back(c, 0);
        } else {
            tout_[v] = timer++;
            st.pop_back();
        }
    }
}

int PlaneTree::degree(int v) const {
    int d = static_cast<int>(children_[v].size()) + (v == 0 ? 0 : 1);
    for (const auto& [a, b] : deleted_edges_)
        if (a == v || b == v) ++d;
    return d;
}

int PlaneTree::essential_count() const {
    int m = 0;
    for (int v = 0; v < vertex_count(); ++v)
        if (degree(v) >= 3) ++m;
    return m;
}

std::vector<int> PlaneTree::essential_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (degree(v) >= 3) out.push_back(v);
    return out;
}

void PlaneTree::add_deleted_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("deleted edge: bad endpoints");
    if (u > v) std::swap(u, v);
    deleted_edges_.emplace_back(u, v);
}

bool PlaneTree::is_ancestor(int u, int v) const {
    return tin_[u] <= tin_[v] && tout_[v] <= tout_[u];
}

int PlaneTree::g(int v, int w) const {
    if (v == w) return 0;
    if (v == 0) return 1;
    // Find the edge at v toward w: a child edge when w sits in that
    // child's subtree, the parent edge (label 0) otherwise.
    for (size_t k = 0; k < children_[v].size(); ++k)
        if (is_ancestor(children_[v][k], w))
            return static_cast<int>(k) + 1;
    return 0;
}

int PlaneTree::meet(int u, int v) const {
    while (!is_ancestor(u, v)) u = parent_[u];
    return u;
}

bool PlaneTree::vertex_less(int u, int v) const {
    if (u == v) return false;
    int w = meet(u, v);
    if (u == w) return true;
    if (v == w) return false;
    return g(w, u) < g(w, v);
}

std::pair<int, int> PlaneTree::root_edge(int v) const {
    if (v == 0)
        throw std::invalid_argument("e(v) is undefined for the root");
    return {parent_[v], v};
}

std::vector<int> PlaneTree::neighbors(int v) const {
    std::vector<int> out;
    if (v != 0) out.push_back(parent_[v]);
    for (int c : children_[v]) out.push_back(c);
    for (const auto& [a, b] : deleted_edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

bool PlaneTree::adjacent(int u, int v) const {
    if (u == v) return false;
    if (parent_[u] == v || parent_[v] == u) return true;
    for (const auto& [a, b] : deleted_edges_)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

namespace {

// Maximal segments whose interior vertices all have degree 2.  Each is a
// (top vertex, edge list) pair; edges listed as (parent, child) top-down.
struct Segment {
    std::vector<std::pair<int, int>> edges;
};

void collect_segments(const PlaneTree& t, std::vector<Segment>& out) {
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (v != 0 && t.degree(v) == 2) continue;
        for (int c : t.children(v)) {
            Segment s;
            int prev = v, cur = c;
            s.edges.emplace_back(prev, cur);
            while (t.degree(cur) == 2 && !t.children(cur).empty()) {
                prev = cur;
                cur = t.children(cur)[0];
                s.edges.emplace_back(prev, cur);
            }
            out.push_back(std::move(s));
        }
    }
}

std::string serialize(const PlaneTree& t, int v, const std::vector<int>& extra) {
    std::string body;
    for (int c : t.children(v)) {
        std::string sub = serialize(t, c, extra);
        for (int k = 0; k < extra[c]; ++k) sub = "(" + sub + ")";
        body += sub;
    }
    return "(" + body + ")";
}

}  // namespace

bool PlaneTree::sufficiently_subdivided(int n) const {
    std::vector<Segment> segs;
    collect_segments(*this, segs);
    for (const auto& s : segs)
        if (static_cast<int>(s.edges.size()) < n - 1) return false;
    return true;
}

PlaneTree PlaneTree::subdivided_for(int n) const {
    if (!deleted_edges_.empty())
        throw std::invalid_argument("subdivision supports trees only");
    if (n < 2)
        throw std::invalid_argument("subdivision needs n >= 2");
    std::vector<Segment> segs;
    collect_segments(*this, segs);
    // extra[c] = number of fresh degree-2 vertices to insert into edge
    // (parent(c), c), just above c
    std::vector<int> extra(vertex_count(), 0);
    for (const auto& s : segs) {
        int have = static_cast<int>(s.edges.size());
        int deficit = (n - 1) - have;
        for (int k = 0; k < deficit; ++k)
            ++extra[s.edges[k % have].second];
    }
    return parse(serialize(*this, 0, extra));
}

std::string PlaneTree::to_parenthesis() const {
    std::vector<int> extra(vertex_count(), 0);
    return serialize(*this, 0, extra);
}

}  // namespace morseconf
