#include "amodlab/cubes.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace amod {

AdmissibleSurface Cube::top() const {
    AdmissibleSurface t = base;
    for (const auto& a : additions) t = t.with_polygon(a);
    return t;
}

CubeFragment::CubeFragment(TreeFamily family, std::set<AdmissibleSurface> vertices)
    : family_(family), vertices_(std::move(vertices)) {
    for (const auto& v : vertices_)
        if (v.family() != family_)
            throw Error(Errc::BadInput, "vertex from a different family");
}

bool CubeFragment::has_cube(const AdmissibleSurface& base,
                            const std::vector<PolygonAddress>& additions) const {
    size_t k = additions.size();
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        AdmissibleSurface v = base;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) v = v.with_polygon(additions[i]);
        if (!has_vertex(v)) return false;
    }
    return true;
}

std::vector<Cube> CubeFragment::cubes_among(const std::set<AdmissibleSurface>& subset) const {
    std::vector<Cube> out;
    for (const auto& base : subset) {
        // candidate directions: adjacent polygons whose addition stays inside
        std::vector<PolygonAddress> cand;
        for (const auto& h : base.adjacent_polygons())
            if (subset.count(base.with_polygon(h))) cand.push_back(h);

        std::vector<PolygonAddress> cur;
        std::function<void(size_t)> extend = [&](size_t start) {
            out.push_back(Cube{base, cur});
            for (size_t i = start; i < cand.size(); ++i) {
                // all vertices of the extended cube must be present
                bool ok = true;
                for (size_t mask = 0; mask < (size_t(1) << cur.size()) && ok; ++mask) {
                    AdmissibleSurface v = base.with_polygon(cand[i]);
                    for (size_t b = 0; b < cur.size(); ++b)
                        if (mask & (size_t(1) << b)) v = v.with_polygon(cur[b]);
                    ok = subset.count(v) > 0;
                }
                if (!ok) continue;
                cur.push_back(cand[i]);
                extend(i + 1);
                cur.pop_back();
            }
        };
        extend(0);
    }
    return out;
}

std::vector<Cube> CubeFragment::cubes() const { return cubes_among(vertices_); }

HomologyReport CubeFragment::reduced_homology() const {
    if (vertices_.empty()) throw Error(Errc::EmptyComplex, "homology of the empty fragment");
    std::vector<Cube> cells = cubes();
    int dim = 0;
    for (const Cube& c : cells) dim = std::max(dim, c.dim());

    std::vector<std::map<Cube, int>> index(dim + 1);
    for (const Cube& c : cells) {
        auto& m = index[c.dim()];
        int id = static_cast<int>(m.size());
        m.emplace(c, id);
    }

    std::vector<SparseColMatrix> boundaries(dim + 1);
    boundaries[0] = SparseColMatrix::zero(1, static_cast<int>(index[0].size()));
    for (const auto& [cell, j] : index[0]) (void)cell, boundaries[0].add_entry(0, j, 1);
    for (int d = 1; d <= dim; ++d) {
        boundaries[d] = SparseColMatrix::zero(static_cast<int>(index[d - 1].size()),
                                              static_cast<int>(index[d].size()));
        for (const auto& [cell, j] : index[d]) {
            for (int i = 0; i < d; ++i) {
                std::vector<PolygonAddress> rest;
                for (int b = 0; b < d; ++b)
                    if (b != i) rest.push_back(cell.additions[b]);
                int sign = i % 2 == 0 ? 1 : -1;
                Cube upper{cell.base.with_polygon(cell.additions[i]), rest};
                Cube lower{cell.base, rest};
                boundaries[d].add_entry(index[d - 1].at(upper), j, sign);
                boundaries[d].add_entry(index[d - 1].at(lower), j, -sign);
            }
        }
    }
    return homology_from_boundaries(boundaries);
}

namespace {

std::string surface_key(const AdmissibleSurface& s) {
    std::string key;
    for (const auto& a : s.polygons()) {
        if (!key.empty()) key.push_back(';');
        key += a.to_string();
    }
    return key;
}

} // namespace

std::string CubeFragment::serialize() const {
    std::map<AdmissibleSurface, int> ids;
    std::string out;
    for (const auto& v : vertices_) {
        int id = static_cast<int>(ids.size());
        ids.emplace(v, id);
        out += surface_key(v);
        out.push_back('\n');
    }
    out += "cubes\n";
    std::vector<Cube> all = cubes();
    // keep only cubes that are faces of no larger cube
    for (const Cube& c : all) {
        bool maximal = true;
        for (const Cube& d : all) {
            if (d.dim() <= c.dim()) continue;
            bool base_between = c.base.subset_of(d.top()) && d.base.subset_of(c.base);
            if (!base_between) continue;
            bool adds_included = std::includes(d.additions.begin(), d.additions.end(),
                                               c.additions.begin(), c.additions.end());
            bool face = adds_included;
            for (const auto& extra : c.base.polygons())
                if (!d.base.contains(extra) &&
                    !std::binary_search(d.additions.begin(), d.additions.end(), extra))
                    face = false;
            if (face) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        std::set<int> vs;
        size_t k = c.additions.size();
        for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
            AdmissibleSurface v = c.base;
            for (size_t i = 0; i < k; ++i)
                if (mask & (size_t(1) << i)) v = v.with_polygon(c.additions[i]);
            vs.insert(ids.at(v));
        }
        std::string line;
        for (int id : vs) {
            if (!line.empty()) line.push_back(' ');
            line += std::to_string(id);
        }
        out += line;
        out.push_back('\n');
    }
    return out;
}

CubeFragment build_interval(const std::vector<AdmissibleSurface>& dominated,
                            const AdmissibleSurface& sigma) {
    if (dominated.empty()) throw Error(Errc::BadInput, "empty dominated set");
    for (const auto& s : dominated)
        if (!s.subset_of(sigma))
            throw Error(Errc::NotDominated, "surface not contained in the apex:\n" + s.serialize());

    std::set<AdmissibleSurface> vertices;
    std::vector<AdmissibleSurface> queue;
    for (const auto& s : dominated) {
        if (vertices.insert(s).second) queue.push_back(s);
    }
    while (!queue.empty()) {
        AdmissibleSurface cur = queue.back();
        queue.pop_back();
        for (const auto& h : cur.adjacent_polygons()) {
            if (!sigma.contains(h)) continue;
            AdmissibleSurface next = cur.with_polygon(h);
            if (vertices.insert(next).second) queue.push_back(next);
        }
    }
    return CubeFragment(sigma.family(), std::move(vertices));
}

std::vector<CollapseStep> morse_collapse(CubeFragment x, const AdmissibleSurface& sigma) {
    if (!x.has_vertex(sigma)) throw Error(Errc::BadInput, "apex missing from fragment");
    for (const auto& v : x.vertices())
        if (!v.subset_of(sigma))
            throw Error(Errc::BadInput, "fragment vertex not below the apex");

    std::set<AdmissibleSurface> vertices = x.vertices();
    std::vector<CollapseStep> trace;
    while (vertices.size() > 1) {
        const AdmissibleSurface* min_v = nullptr;
        for (const auto& v : vertices) {
            if (!min_v || v.height() < min_v->height() ||
                (v.height() == min_v->height() && v.serialize() < min_v->serialize()))
                min_v = &v;
        }
        AdmissibleSurface cur = *min_v;
        std::vector<PolygonAddress> ascending;
        for (const auto& h : cur.adjacent_polygons())
            if (vertices.count(cur.with_polygon(h))) ascending.push_back(h);

        // the paper's claim: the whole cube over the ascending directions
        // lies in the fragment
        CubeFragment snapshot(x.family(), vertices);
        if (!snapshot.has_cube(cur, ascending))
            throw Error(Errc::ClaimViolation,
                        "ascending cube missing at\n" + cur.serialize());

        trace.push_back(CollapseStep{cur, static_cast<int>(ascending.size())});
        vertices.erase(cur);
    }
    if (*vertices.begin() != sigma)
        throw Error(Errc::ClaimViolation, "collapse terminated away from the apex");
    return trace;
}

CubeFragment tau_closure(const CubeFragment& f) {
    std::set<AdmissibleSurface> vertices = f.vertices();
    std::vector<AdmissibleSurface> queue(vertices.begin(), vertices.end());
    while (!queue.empty()) {
        AdmissibleSurface cur = queue.back();
        queue.pop_back();
        if (central_height(cur) == 0) continue;
        AdmissibleSurface next = tau_step(cur);
        if (vertices.insert(next).second) queue.push_back(next);
    }
    return CubeFragment(f.family(), std::move(vertices));
}

CubeFragment spine_retract(const CubeFragment& f) {
    const TreeFamily& fam = f.family();
    if (fam.is_lamplighter() || fam.m() == fam.n() + 1)
        throw Error(Errc::BadInput,
                    "spine retraction needs a Higman family with a distinguished center");
    CubeFragment closure = tau_closure(f);
    std::set<AdmissibleSurface> vertices = closure.vertices();
    while (true) {
        int max_ch = 0;
        for (const auto& v : vertices) max_ch = std::max(max_ch, central_height(v));
        if (max_ch == 0) break;
        std::set<AdmissibleSurface> layer;
        for (const auto& v : vertices)
            if (central_height(v) == max_ch) layer.insert(v);
#ifndef NDEBUG
        // each layer cube extends by tau to a cube of the closure
        CubeFragment whole(fam, vertices);
        for (const Cube& c : whole.cubes_among(layer)) {
            std::vector<PolygonAddress> ext = c.additions;
            ext.push_back(c.base.root().parent());
            std::sort(ext.begin(), ext.end());
            assert(whole.has_cube(c.base, ext));
        }
#endif
        for (const auto& v : layer) vertices.erase(v);
    }
    return CubeFragment(fam, std::move(vertices));
}

DescendingLinkParams descending_link_params(const TreeFamily& f, int k) {
    if (f.is_lamplighter())
        throw Error(Errc::Unsupported, "descending-link parameters need a Higman family");
    if (k <= f.m())
        throw Error(Errc::HeightTooSmall, "need height k >= m + 1");
    return DescendingLinkParams{k, f.m() + (k - 1) * (f.n() - 1), f.n() - 1};
}

namespace {

using BigInt = boost::multiprecision::cpp_int;
using Poly = std::vector<BigInt>;  // truncated power series, poly[d] = #subtrees of size d

Poly poly_mul(const Poly& a, const Poly& b, int max_deg) {
    Poly out(max_deg + 1, 0);
    for (int i = 0; i <= max_deg; ++i) {
        if (i >= static_cast<int>(a.size()) || a[i] == 0) continue;
        for (int j = 0; i + j <= max_deg; ++j) {
            if (j >= static_cast<int>(b.size())) break;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Generating polynomial of rooted subtrees: P_state = x * prod_c (1 + P_c).
struct CensusStates {
    std::vector<std::vector<int>> children;  // state -> child states
    int root = 0;
};

CensusStates census_states(const TreeFamily& f) {
    CensusStates cs;
    if (f.is_lamplighter()) {
        // 0 root, 1 west line, 2 east line, 3 ray
        cs.children = {{1, 2, 3}, {3, 1}, {2, 3}, {3}};
    } else {
        // 0 center (m children), 1 generic (n children)
        cs.children = {std::vector<int>(f.m(), 1), std::vector<int>(f.n(), 1)};
    }
    return cs;
}

// P_state has zero constant term, so the degree-d coefficient only needs
// child coefficients below d; fill all states degree by degree.
std::vector<Poly> census_polys(const CensusStates& cs, int max_deg) {
    std::vector<Poly> p(cs.children.size(), Poly(max_deg + 1, 0));
    for (int d = 1; d <= max_deg; ++d) {
        std::vector<BigInt> coeff(cs.children.size());
        for (size_t s = 0; s < cs.children.size(); ++s) {
            Poly acc(max_deg + 1, 0);
            acc[0] = 1;
            for (int c : cs.children[s]) {
                Poly one_plus = p[c];
                one_plus[0] += 1;
                acc = poly_mul(acc, one_plus, d - 1);
            }
            coeff[s] = acc[d - 1];
        }
        for (size_t s = 0; s < cs.children.size(); ++s) p[s][d] = coeff[s];
    }
    return p;
}

} // namespace

std::vector<std::pair<int, unsigned long long>> spine_sublevel_census(const TreeFamily& f,
                                                                      int max_height) {
    if (max_height < 1) throw Error(Errc::BadInput, "need max_height >= 1");
    CensusStates cs = census_states(f);
    Poly root = census_polys(cs, max_height)[cs.root];
    std::vector<std::pair<int, unsigned long long>> out;
    for (int h = 1; h <= max_height; ++h) {
        if (root[h] > BigInt(std::numeric_limits<unsigned long long>::max()))
            throw Error(Errc::BadInput, "census count overflows 64 bits");
        out.emplace_back(h, root[h].convert_to<unsigned long long>());
    }
    return out;
}

SimplicialComplex skeleton_descending_link(const AdmissibleSurface& sigma) {
    if (!sigma.contains_center() || sigma.height() < 2)
        throw Error(Errc::BadInput, "need a spine surface of height >= 2");
    std::vector<PolygonAddress> removable;
    for (const auto& h : sigma.polygons()) {
        if (h.is_center()) continue;
        bool leaf = true;
        for (const auto& other : sigma.polygons())
            if (!other.is_center() && other.parent() == h) leaf = false;
        if (leaf) removable.push_back(h);
    }
    std::vector<std::vector<int>> facets;
    size_t k = removable.size();
    for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
        std::set<PolygonAddress> removed;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) removed.insert(removable[i]);
        if (removed.size() >= sigma.polygons().size()) continue;
        // remainder must stay connected through the center, and every removed
        // polygon must stay adjacent to it
        bool ok = true;
        for (const auto& h : removed)
            if (removed.count(h.parent())) ok = false;
        if (!ok) continue;
        std::set<PolygonAddress> rest;
        for (const auto& p : sigma.polygons())
            if (!removed.count(p)) rest.insert(p);
        bool connected = true;
        for (const auto& p : rest)
            if (!p.is_center() && !rest.count(p.parent())) connected = false;
        if (!connected) continue;
        std::vector<int> simplex;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) simplex.push_back(static_cast<int>(i));
        facets.push_back(std::move(simplex));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex noflag_counterexample_link() {
    // Three squares around a common corner v, pairwise sharing one edge.
    const char* squares[3][4] = {
        {"v", "a", "ab", "b"},
        {"v", "b", "bc", "c"},
        {"v", "a", "ac", "c"},
    };
    std::map<std::string, int> edge_ids;  // edges at v, in first-seen order
    std::vector<std::vector<int>> link_facets;
    for (const auto& sq : squares) {
        // corners adjacent to v in the square: positions 1 and 3
        int e1 = edge_ids.emplace(sq[1], static_cast<int>(edge_ids.size())).first->second;
        int e2 = edge_ids.emplace(sq[3], static_cast<int>(edge_ids.size())).first->second;
        link_facets.push_back({e1, e2});
    }
    return SimplicialComplex::from_facets(std::move(link_facets));
}

} // namespace amod
