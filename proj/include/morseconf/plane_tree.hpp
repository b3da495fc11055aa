#ifndef MORSECONF_PLANE_TREE_HPP
#define MORSECONF_PLANE_TREE_HPP

#include <string>
#include <utility>
#include <vector>

namespace morseconf {

/// Rooted plane tree (optionally a spanning tree of a graph, with the
/// non-tree edges kept aside as "deleted" edges).
///
/// Vertices are indexed 0..V-1 in the order of first visit of the plane
/// walk that starts at the root and always takes the left-most branch.
/// The root is vertex 0 and has degree one inside the tree.  Edge labels,
/// the meet operation and the total vertex order are all derived from
/// this numbering.
class PlaneTree {
public:
    /// Parses the balanced-parenthesis format: each "(" opens a vertex,
    /// the matching ")" closes it, children appear in nesting order.
    /// The outermost vertex is the root and must have exactly one child.
    /// Throws std::invalid_argument on malformed input.
    static PlaneTree parse(const std::string& text);

    /// Wraps a parenthesis string in one more layer, turning its former
    /// root into the single child of a fresh degree-one root.  Handy when
    /// the natural root of a tree is an essential vertex.
    static std::string attach_pendant_root(const std::string& text);

    int vertex_count() const { return static_cast<int>(parent_.size()); }
    int root() const { return 0; }

    /// Parent in the rooted tree; -1 for the root.
    int parent(int v) const { return parent_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }

    /// Degree within the graph (tree edges plus deleted edges).
    int degree(int v) const;
    bool is_essential(int v) const { return degree(v) >= 3; }
    int essential_count() const;
    std::vector<int> essential_vertices() const;

    int edge_count() const { return vertex_count() - 1 + static_cast<int>(deleted_edges_.size()); }
    const std::vector<std::pair<int, int>>& deleted_edges() const { return deleted_edges_; }
    void add_deleted_edge(int u, int v);

    /// Label at v of the first edge on the vw-path; g(w,w) = 0.
    /// Labels at a vertex are 0..d(v)-1 with 0 pointing toward the root;
    /// the root's single edge carries label 1.
    int g(int v, int w) const;

    /// Deepest common vertex of the two root paths (the wedge operation).
    int meet(int u, int v) const;

    /// Total vertex order evaluated from g and meet.  Agrees with plain
    /// index comparison; both are kept so tests can cross-check.
    bool vertex_less(int u, int v) const;

    /// e(v): the edge (parent(v), v) carrying label 0 at v.  v must not
    /// be the root.
    std::pair<int, int> root_edge(int v) const;

    bool is_ancestor(int u, int v) const;  // u on the 0v-path (u == v counts)

    /// Neighbours of v in the graph: parent, children, deleted-edge ends.
    std::vector<int> neighbors(int v) const;
    bool adjacent(int u, int v) const;

    /// Homeomorphic tree in which every path between distinct vertices of
    /// degree != 2 has at least n-1 edges.  Inserts exactly the deficit,
    /// spread evenly over each deficient segment, then renumbers by the
    /// plane walk.  Rejects trees carrying deleted edges.
    PlaneTree subdivided_for(int n) const;
    bool sufficiently_subdivided(int n) const;

    std::string to_parenthesis() const;

private:
    PlaneTree() = default;
    void index_walks();

    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> tin_, tout_;  // plane-walk intervals for subtree tests
    std::vector<std::pair<int, int>> deleted_edges_;
};

}  // namespace morseconf

#endif
