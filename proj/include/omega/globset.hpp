#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace omega {

// A cell of a globular set. src/tgt are indices into the owning set's cell
// vector, -1 exactly when dim == 0.
struct Cell {
    std::string id;
    int dim = 0;
    int src = -1;
    int tgt = -1;
};

class GlobularSet {
public:
    GlobularSet() = default;
    explicit GlobularSet(std::vector<Cell> cells);

    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    const Cell& cell(int i) const { return cells_.at(static_cast<size_t>(i)); }
    const std::vector<Cell>& cells() const { return cells_; }

    // -1 if the id is unknown.
    int index_of(const std::string& id) const;

    int max_dim() const;
    std::vector<int> cells_of_dim(int d) const;

    // Indices sorted by (dim, insertion index); the canonical cell ordering
    // used for deterministic enumeration output.
    std::vector<int> canonical_order() const;

    // Iterated source/target of a cell, k steps down (k <= cell dim).
    int face_iter(int cell_idx, int steps, bool source_side) const;

private:
    std::vector<Cell> cells_;
    std::map<std::string, int> by_id_;
};

using GSetPtr = std::shared_ptr<const GlobularSet>;

GSetPtr make_gset(std::vector<Cell> cells);

// A dimension- and face-preserving assignment between globular sets.
struct GlobularMap {
    GSetPtr source;
    GSetPtr target;
    std::vector<int> assign;  // by source cell index

    int operator()(int i) const { return assign.at(static_cast<size_t>(i)); }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg);
};

ValidationReport validate(const GlobularSet& g);
ValidationReport validate(const GlobularMap& f);

// The representable globular set: two cells per dimension k < n, one at n.
GSetPtr globe(int n);

// The boundary of globe(n) together with its inclusion; sphere(0) is empty.
std::pair<GSetPtr, GlobularMap> sphere(int n);

GlobularMap identity_map(const GSetPtr& x);
GlobularMap compose(const GlobularMap& g, const GlobularMap& f);  // g after f
bool maps_equal(const GlobularMap& f, const GlobularMap& g);
bool is_mono(const GlobularMap& f);
bool is_isomorphism(const GlobularMap& f);

// All globular maps x -> y in lexicographic order of assignments under the
// canonical cell ordering of x.
std::vector<GlobularMap> hom_enumerate(const GSetPtr& x, const GSetPtr& y);

// A finite diagram of globular sets; edges carry the assignment vectors of
// validated maps nodes[from] -> nodes[to].
struct Diagram {
    struct Edge {
        int from = 0;
        int to = 0;
        std::vector<int> assign;
    };
    std::vector<GSetPtr> nodes;
    std::vector<Edge> edges;
};

struct ColimitResult {
    GSetPtr object;
    std::vector<GlobularMap> cocone;  // one per node
};

// Levelwise colimit of sets: disjoint union quotiented by the edge-generated
// equivalence. Class order follows first occurrence in (node, cell) order.
ColimitResult colimit(const Diagram& d);

// Reflexive-transitive closure of s*(x) <= x <= t*(x).
struct Preorder {
    std::vector<std::string> carrier;       // cell ids, insertion order
    std::vector<std::vector<bool>> le;      // le[i][j] iff cell i <= cell j
    bool total = false;                     // antisymmetric + all comparable

    bool leq(int i, int j) const { return le[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
};

Preorder preorder_closure(const GlobularSet& g);

}  // namespace omega
