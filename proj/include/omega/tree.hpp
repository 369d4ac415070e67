#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omega/globset.hpp"

namespace omega {

// Finite planar level tree, encoded as nested child lists. [] is the point,
// [[],[]] the two-edge path star(2), [[[]]] the 2-globe.
struct PlanarTree {
    std::vector<PlanarTree> children;

    int vertices() const;
    int height() const;
    int cells() const { return 2 * vertices() - 1; }
    std::string to_string() const;
    static std::optional<PlanarTree> parse(const std::string& s);
    bool operator==(const PlanarTree& o) const { return children == o.children; }
};

// A tree in the globular sense: a finite non-empty globular set whose
// generated preorder is a total order. Stored canonically: cells appear in
// order position p0..p{2V-2}, so two trees are isomorphic iff their dimension
// paths are equal.
class Tree {
public:
    static Tree from_planar(const PlanarTree& p);
    static Tree globe_tree(int n);
    static Tree star(int k);
    // Canonical form of a tree-shaped globular set plus the isomorphism
    // canonical -> g; nullopt if g is not a tree.
    static std::optional<std::pair<Tree, GlobularMap>> canonicalize(const GSetPtr& g);

    const GSetPtr& gset() const { return gset_; }
    const PlanarTree& planar() const { return planar_; }
    const std::vector<int>& path() const { return path_; }
    std::string key() const;  // dotted dimension path, e.g. "0.1.0"

    int cells() const { return gset_->size(); }
    int height() const { return height_; }
    bool linear() const { return cells() == 2 * height_ + 1; }

    // Sector bookkeeping: cell i sits at (vertex, gap).
    const std::string& vertex_of(int cell) const;
    int gap_of(int cell) const;
    int cell_at(const std::string& vertex, int gap) const;
    int child_count(const std::string& vertex) const;

    bool operator==(const Tree& o) const { return path_ == o.path_; }
    bool operator!=(const Tree& o) const { return !(*this == o); }

private:
    Tree() = default;
    PlanarTree planar_;
    std::vector<int> path_;
    GSetPtr gset_;
    int height_ = 0;
    std::vector<std::pair<std::string, int>> sector_;       // per cell
    std::map<std::pair<std::string, int>, int> sector_idx_;
    std::map<std::string, int> children_;                   // per vertex
};

// Canonical enumeration order: (cell count, path lexicographic).
bool tree_less(const Tree& a, const Tree& b);

bool is_tree(const GlobularSet& g);

// (height, linear)
std::pair<int, bool> classify(const Tree& t);

// All isomorphism classes with at most max_cells cells, in canonical order.
std::vector<Tree> enumerate_trees(int max_cells);
std::vector<Tree> enumerate_trees_bounded(int max_cells, int max_height);

struct SubtreeEntry {
    Tree tree;
    GlobularMap inclusion;       // tree.gset() -> host
    std::vector<int> host_cells; // image, ascending host indices
};

// Face-closed sub-globular-sets of t that are trees, ordered by
// (size, cell-index set).
std::vector<SubtreeEntry> subtrees(const Tree& t, bool proper_only);

// Union of all proper subtrees inside t, with its inclusion.
std::pair<GSetPtr, GlobularMap> boundary_union(const Tree& t);

struct Truncation {
    Tree tree;
    GlobularMap src_embed;  // tree.gset() -> t
    GlobularMap tgt_embed;
};

// Planar chop of t at level k with the min/max embeddings back into t.
Truncation truncate_tree(const Tree& t, int k);

// True iff the images of the family jointly contain every cell of t.
bool is_cover(const std::vector<GlobularMap>& family, const Tree& t);

struct CoverCheck {
    bool ok = false;
    GlobularMap comparison;  // colim of the globe diagram -> t
};

// Rebuilds t as the colimit of all globes over it and checks the induced
// map is an isomorphism.
CoverCheck globe_cover_check(const Tree& t);

}  // namespace omega
