#include "omega/globset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace omega {

GlobularSet::GlobularSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
    for (int i = 0; i < size(); ++i) {
        auto [it, fresh] = by_id_.emplace(cells_[static_cast<size_t>(i)].id, i);
        if (!fresh) throw std::invalid_argument("duplicate cell id: " + cells_[static_cast<size_t>(i)].id);
    }
}

int GlobularSet::index_of(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? -1 : it->second;
}

int GlobularSet::max_dim() const {
    int m = -1;
    for (const auto& c : cells_) m = std::max(m, c.dim);
    return m;
}

std::vector<int> GlobularSet::cells_of_dim(int d) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (cells_[static_cast<size_t>(i)].dim == d) out.push_back(i);
    return out;
}

std::vector<int> GlobularSet::canonical_order() const {
    std::vector<int> idx(cells_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [this](int a, int b) {
        return cells_[static_cast<size_t>(a)].dim < cells_[static_cast<size_t>(b)].dim;
    });
    return idx;
}

int GlobularSet::face_iter(int cell_idx, int steps, bool source_side) const {
    int c = cell_idx;
    for (int k = 0; k < steps; ++k) {
        const Cell& cc = cell(c);
        c = source_side ? cc.src : cc.tgt;
        if (c < 0) throw std::invalid_argument("face_iter below dimension 0");
    }
    return c;
}

GSetPtr make_gset(std::vector<Cell> cells) {
    return std::make_shared<const GlobularSet>(std::move(cells));
}

void ValidationReport::fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
}

ValidationReport validate(const GlobularSet& g) {
    ValidationReport r;
    for (int i = 0; i < g.size(); ++i) {
        const Cell& c = g.cell(i);
        if (c.dim < 0) {
            r.fail("cell " + c.id + ": negative dimension");
            continue;
        }
        if (c.dim == 0) {
            if (c.src != -1 || c.tgt != -1) r.fail("cell " + c.id + ": 0-cell with a face");
            continue;
        }
        if (c.src < 0 || c.src >= g.size() || c.tgt < 0 || c.tgt >= g.size()) {
            r.fail("cell " + c.id + ": missing face");
            continue;
        }
        if (g.cell(c.src).dim != c.dim - 1 || g.cell(c.tgt).dim != c.dim - 1)
            r.fail("cell " + c.id + ": face dimension mismatch");
        if (c.dim >= 2) {
            const Cell& s = g.cell(c.src);
            const Cell& t = g.cell(c.tgt);
            if (s.src != t.src) r.fail("cell " + c.id + ": ss != ts");
            if (t.tgt != s.tgt) r.fail("cell " + c.id + ": tt != st");
        }
    }
    return r;
}

ValidationReport validate(const GlobularMap& f) {
    ValidationReport r;
    if (!f.source || !f.target) {
        r.fail("map without endpoints");
        return r;
    }
    if (static_cast<int>(f.assign.size()) != f.source->size()) {
        r.fail("assignment size mismatch");
        return r;
    }
    for (int i = 0; i < f.source->size(); ++i) {
        const Cell& c = f.source->cell(i);
        int j = f.assign[static_cast<size_t>(i)];
        if (j < 0 || j >= f.target->size()) {
            r.fail("cell " + c.id + ": image out of range");
            continue;
        }
        const Cell& d = f.target->cell(j);
        if (c.dim != d.dim) r.fail("cell " + c.id + ": dimension not preserved");
        if (c.dim >= 1) {
            if (f.assign[static_cast<size_t>(c.src)] != d.src)
                r.fail("cell " + c.id + ": does not commute with src");
            if (f.assign[static_cast<size_t>(c.tgt)] != d.tgt)
                r.fail("cell " + c.id + ": does not commute with tgt");
        }
    }
    return r;
}

GSetPtr globe(int n) {
    if (n < 0) throw std::invalid_argument("globe: negative dimension");
    // Cells in path order p0..p2n: dims 0,1,...,n,...,1,0. A cell of dim d >= 1
    // has src at position d-1 and tgt at position 2n-(d-1).
    std::vector<Cell> cells(static_cast<size_t>(2 * n + 1));
    for (int j = 0; j <= 2 * n; ++j) {
        int d = j <= n ? j : 2 * n - j;
        Cell c;
        c.id = "p" + std::to_string(j);
        c.dim = d;
        if (d > 0) {
            c.src = d - 1;
            c.tgt = 2 * n - (d - 1);
        }
        cells[static_cast<size_t>(j)] = c;
    }
    return make_gset(std::move(cells));
}

std::pair<GSetPtr, GlobularMap> sphere(int n) {
    GSetPtr g = globe(n);
    std::vector<Cell> cells;
    std::vector<int> incl;
    for (int i = 0; i < g->size(); ++i) {
        if (g->cell(i).dim == n) continue;  // drop the top cell
        cells.push_back(g->cell(i));
        incl.push_back(i);
    }
    // Re-index faces inside the boundary.
    std::map<int, int> back;
    for (size_t k = 0; k < incl.size(); ++k) back[incl[k]] = static_cast<int>(k);
    for (auto& c : cells) {
        if (c.dim > 0) {
            c.src = back.at(c.src);
            c.tgt = back.at(c.tgt);
        }
    }
    GSetPtr b = make_gset(std::move(cells));
    return {b, GlobularMap{b, g, incl}};
}

GlobularMap identity_map(const GSetPtr& x) {
    std::vector<int> a(static_cast<size_t>(x->size()));
    std::iota(a.begin(), a.end(), 0);
    return GlobularMap{x, x, std::move(a)};
}

GlobularMap compose(const GlobularMap& g, const GlobularMap& f) {
    if (f.target.get() != g.source.get() && f.target->size() != g.source->size())
        throw std::invalid_argument("compose: endpoint mismatch");
    std::vector<int> a(f.assign.size());
    for (size_t i = 0; i < f.assign.size(); ++i)
        a[i] = g.assign[static_cast<size_t>(f.assign[i])];
    return GlobularMap{f.source, g.target, std::move(a)};
}

bool maps_equal(const GlobularMap& f, const GlobularMap& g) {
    return f.assign == g.assign;
}

bool is_mono(const GlobularMap& f) {
    // Injective in every dimension; dimensions never mix, so plain injectivity.
    std::vector<int> seen;
    seen = f.assign;
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool is_isomorphism(const GlobularMap& f) {
    return f.source->size() == f.target->size() && is_mono(f);
}

std::vector<GlobularMap> hom_enumerate(const GSetPtr& x, const GSetPtr& y) {
    std::vector<int> order = x->canonical_order();  // lower dims first
    int ymax = y->max_dim();
    std::vector<std::vector<int>> candidates(static_cast<size_t>(ymax < 0 ? 0 : ymax + 1));
    for (int d = 0; d <= ymax; ++d) candidates[static_cast<size_t>(d)] = y->cells_of_dim(d);

    std::vector<GlobularMap> out;
    std::vector<int> assign(static_cast<size_t>(x->size()), -1);

    auto backtrack = [&](auto&& self, size_t pos) -> void {
        if (pos == order.size()) {
            out.push_back(GlobularMap{x, y, assign});
            return;
        }
        int c = order[pos];
        const Cell& cc = x->cell(c);
        if (cc.dim > ymax) return;  // no candidates of this dimension
        for (int j : candidates[static_cast<size_t>(cc.dim)]) {
            if (cc.dim >= 1) {
                const Cell& d = y->cell(j);
                if (assign[static_cast<size_t>(cc.src)] != d.src) continue;
                if (assign[static_cast<size_t>(cc.tgt)] != d.tgt) continue;
            }
            assign[static_cast<size_t>(c)] = j;
            self(self, pos + 1);
            assign[static_cast<size_t>(c)] = -1;
        }
    };
    backtrack(backtrack, 0);
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

ColimitResult colimit(const Diagram& d) {
    std::vector<int> offset(d.nodes.size() + 1, 0);
    for (size_t i = 0; i < d.nodes.size(); ++i)
        offset[i + 1] = offset[i] + d.nodes[i]->size();
    int total = offset.back();

    UnionFind uf(static_cast<size_t>(total));
    for (const auto& e : d.edges) {
        const auto& src = d.nodes[static_cast<size_t>(e.from)];
        GlobularMap m{src, d.nodes[static_cast<size_t>(e.to)], e.assign};
        auto rep = validate(m);
        if (!rep.ok) throw std::invalid_argument("colimit: invalid edge map: " + rep.violations.front());
        for (int i = 0; i < src->size(); ++i)
            uf.unite(offset[static_cast<size_t>(e.from)] + i,
                     offset[static_cast<size_t>(e.to)] + e.assign[static_cast<size_t>(i)]);
    }

    // Classes ordered by least member = first occurrence in (node, cell) order.
    std::map<int, int> class_index;
    std::vector<int> reps;
    for (int g = 0; g < total; ++g) {
        int r = uf.find(g);
        if (class_index.emplace(r, static_cast<int>(reps.size())).second) reps.push_back(g);
    }

    auto locate = [&](int global) -> std::pair<int, int> {
        int node = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), global) - offset.begin()) - 1;
        return {node, global - offset[static_cast<size_t>(node)]};
    };

    std::vector<Cell> cells(reps.size());
    for (size_t k = 0; k < reps.size(); ++k) {
        auto [node, idx] = locate(reps[k]);
        const Cell& c = d.nodes[static_cast<size_t>(node)]->cell(idx);
        Cell out;
        out.id = "q" + std::to_string(k);
        out.dim = c.dim;
        if (c.dim > 0) {
            out.src = class_index.at(uf.find(offset[static_cast<size_t>(node)] + c.src));
            out.tgt = class_index.at(uf.find(offset[static_cast<size_t>(node)] + c.tgt));
        }
        cells[k] = out;
    }
    // Dimensions must agree across each class.
    for (int g = 0; g < total; ++g) {
        auto [node, idx] = locate(g);
        int cls = class_index.at(uf.find(g));
        if (d.nodes[static_cast<size_t>(node)]->cell(idx).dim != cells[static_cast<size_t>(cls)].dim)
            throw std::invalid_argument("colimit: identified cells of different dimension");
    }

    GSetPtr obj = make_gset(std::move(cells));
    auto rep = validate(*obj);
    if (!rep.ok) throw std::logic_error("colimit: result not globular: " + rep.violations.front());

    ColimitResult res;
    res.object = obj;
    for (size_t n = 0; n < d.nodes.size(); ++n) {
        std::vector<int> a(static_cast<size_t>(d.nodes[n]->size()));
        for (int i = 0; i < d.nodes[n]->size(); ++i)
            a[static_cast<size_t>(i)] = class_index.at(uf.find(offset[n] + i));
        res.cocone.push_back(GlobularMap{d.nodes[n], obj, std::move(a)});
    }
    return res;
}

Preorder preorder_closure(const GlobularSet& g) {
    size_t n = static_cast<size_t>(g.size());
    Preorder p;
    p.carrier.reserve(n);
    for (int i = 0; i < g.size(); ++i) p.carrier.push_back(g.cell(i).id);
    p.le.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) p.le[i][i] = true;
    for (int i = 0; i < g.size(); ++i) {
        const Cell& c = g.cell(i);
        if (c.dim >= 1) {
            p.le[static_cast<size_t>(c.src)][static_cast<size_t>(i)] = true;
            p.le[static_cast<size_t>(i)][static_cast<size_t>(c.tgt)] = true;
        }
    }
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i) {
            if (!p.le[i][k]) continue;
            for (size_t j = 0; j < n; ++j)
                if (p.le[k][j]) p.le[i][j] = true;
        }
    p.total = true;
    for (size_t i = 0; i < n && p.total; ++i)
        for (size_t j = 0; j < n && p.total; ++j) {
            if (i != j && p.le[i][j] && p.le[j][i]) p.total = false;  // antisymmetry
            if (!p.le[i][j] && !p.le[j][i]) p.total = false;         // comparability
        }
    return p;
}

}  // namespace omega
