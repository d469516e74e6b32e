#include "amodlab/simplicial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace amod {

bool HomologyReport::trivial() const {
    for (long long b : betti)
        if (b != 0) return false;
    return torsion.empty();
}

long long HomologyReport::rank(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(betti.size())) return 0;
    return betti[dim];
}

bool HomologyReport::torsion_free(int dim) const {
    for (const auto& [d, f] : torsion)
        if (d == dim && !f.empty()) return false;
    return true;
}

bool same_homology(const HomologyReport& a, const HomologyReport& b) {
    size_t dims = std::max(a.betti.size(), b.betti.size());
    for (size_t d = 0; d < dims; ++d)
        if (a.rank(static_cast<int>(d)) != b.rank(static_cast<int>(d))) return false;
    auto factors = [](const HomologyReport& h, int d) {
        for (const auto& [dim, f] : h.torsion)
            if (dim == d) return f;
        return std::vector<long long>{};
    };
    for (size_t d = 0; d < dims; ++d)
        if (factors(a, static_cast<int>(d)) != factors(b, static_cast<int>(d))) return false;
    return true;
}

nlohmann::ordered_json HomologyReport::to_json() const {
    nlohmann::ordered_json j;
    j["betti"] = betti;
    nlohmann::ordered_json tor = nlohmann::ordered_json::array();
    for (const auto& [dim, factors] : torsion) {
        tor.push_back(nlohmann::ordered_json::array({dim, factors}));
    }
    j["torsion"] = tor;
    return j;
}

HomologyReport homology_from_boundaries(const std::vector<SparseColMatrix>& boundaries) {
#ifndef NDEBUG
    for (size_t k = 1; k < boundaries.size(); ++k)
        assert(multiply(boundaries[k - 1], boundaries[k]).is_zero());
#endif
    HomologyReport report;
    int top = static_cast<int>(boundaries.size()) - 1;
    std::vector<std::vector<Int>> factors(boundaries.size());
    for (size_t k = 0; k < boundaries.size(); ++k)
        factors[k] = smith_invariant_factors(boundaries[k]);
    for (int k = 0; k <= top; ++k) {
        long long cells = boundaries[k].cols;
        long long rank_k = static_cast<long long>(factors[k].size());
        long long rank_up = k == top ? 0 : static_cast<long long>(factors[k + 1].size());
        report.betti.push_back(cells - rank_k - rank_up);
        if (k < top) {
            std::vector<long long> tor;
            for (const Int& d : factors[k + 1])
                if (d > 1) tor.push_back(d.convert_to<long long>());
            if (!tor.empty()) report.torsion.emplace_back(k, tor);
        }
    }
    return report;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<int>> facets) {
    SimplicialComplex k;
    std::set<std::vector<int>> cleaned;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0) throw Error(Errc::BadInput, "vertex ids must be nonnegative");
        if (!f.empty()) cleaned.insert(std::move(f));
    }
    // keep only inclusion-maximal faces
    for (const auto& f : cleaned) {
        bool dominated = false;
        for (const auto& g : cleaned) {
            if (&f != &g && f.size() < g.size() &&
                std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) k.facets_.insert(f);
    }
    return k;
}

SimplicialComplex SimplicialComplex::parse(const std::string& text) {
    std::vector<std::vector<int>> facets;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> f;
        long long v;
        while (ls >> v) {
            if (v < 0) throw Error(Errc::BadInput, "vertex ids must be nonnegative");
            f.push_back(static_cast<int>(v));
        }
        if (!ls.eof()) throw Error(Errc::BadInput, "bad facet line: " + line);
        if (!f.empty()) facets.push_back(std::move(f));
    }
    return from_facets(std::move(facets));
}

std::string SimplicialComplex::serialize() const {
    std::string out;
    for (const auto& f : facets_) {
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(f[i]);
        }
        out.push_back('\n');
    }
    return out;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::set<int> SimplicialComplex::vertices() const {
    std::set<int> out;
    for (const auto& f : facets_) out.insert(f.begin(), f.end());
    return out;
}

namespace {

void enumerate_subsets(const std::vector<int>& facet, size_t size, size_t start,
                       std::vector<int>& cur, std::set<std::vector<int>>& out) {
    if (cur.size() == size) {
        out.insert(cur);
        return;
    }
    for (size_t i = start; i + (size - cur.size()) <= facet.size(); ++i) {
        cur.push_back(facet[i]);
        enumerate_subsets(facet, size, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> SimplicialComplex::faces_of_dim(int d) const {
    std::set<std::vector<int>> out;
    if (d < 0) return {};
    std::vector<int> cur;
    for (const auto& f : facets_) {
        if (static_cast<int>(f.size()) >= d + 1)
            enumerate_subsets(f, static_cast<size_t>(d) + 1, 0, cur, out);
    }
    return {out.begin(), out.end()};
}

long long SimplicialComplex::face_count(int d) const {
    return static_cast<long long>(faces_of_dim(d).size());
}

bool SimplicialComplex::contains(std::vector<int> simplex) const {
    std::sort(simplex.begin(), simplex.end());
    for (const auto& f : facets_)
        if (std::includes(f.begin(), f.end(), simplex.begin(), simplex.end())) return true;
    return false;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * face_count(d);
    return chi;
}

SimplicialComplex SimplicialComplex::link(const std::vector<int>& simplex) const {
    std::vector<int> s = simplex;
    std::sort(s.begin(), s.end());
    if (!contains(s)) throw Error(Errc::AbsentSimplex, "simplex not in complex");
    std::vector<std::vector<int>> link_facets;
    for (const auto& f : facets_) {
        if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
        std::vector<int> rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        if (!rest.empty()) link_facets.push_back(std::move(rest));
    }
    return from_facets(std::move(link_facets));
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::set<int> va = a.vertices(), vb = b.vertices();
    std::vector<int> overlap;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty())
        throw Error(Errc::OverlappingVertices,
                    "vertex " + std::to_string(overlap.front()) + " on both sides");
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<std::vector<int>> facets;
    for (const auto& fa : a.facets_) {
        for (const auto& fb : b.facets_) {
            std::vector<int> u = fa;
            u.insert(u.end(), fb.begin(), fb.end());
            facets.push_back(std::move(u));
        }
    }
    return from_facets(std::move(facets));
}

namespace {

// Bron-Kerbosch with pivoting over the 1-skeleton.
void maximal_cliques(const std::vector<int>& verts,
                     const std::map<int, std::set<int>>& adj, std::set<int>& R,
                     std::set<int> P, std::set<int> X,
                     std::vector<std::vector<int>>& out) {
    if (P.empty() && X.empty()) {
        out.emplace_back(R.begin(), R.end());
        return;
    }
    int pivot = -1;
    size_t best = 0;
    for (int u : P) {
        size_t deg = adj.count(u) ? adj.at(u).size() : 0;
        if (pivot < 0 || deg > best) pivot = u, best = deg;
    }
    for (int u : X) {
        size_t deg = adj.count(u) ? adj.at(u).size() : 0;
        if (pivot < 0 || deg > best) pivot = u, best = deg;
    }
    std::vector<int> candidates;
    const std::set<int>* pivot_adj = adj.count(pivot) ? &adj.at(pivot) : nullptr;
    for (int v : P)
        if (!pivot_adj || !pivot_adj->count(v)) candidates.push_back(v);
    for (int v : candidates) {
        std::set<int> nP, nX;
        const std::set<int>& nv = adj.at(v);
        for (int w : P)
            if (nv.count(w)) nP.insert(w);
        for (int w : X)
            if (nv.count(w)) nX.insert(w);
        R.insert(v);
        maximal_cliques(verts, adj, R, std::move(nP), std::move(nX), out);
        R.erase(v);
        P.erase(v);
        X.insert(v);
    }
}

} // namespace

bool SimplicialComplex::is_flag() const {
    std::set<int> vs = vertices();
    std::map<int, std::set<int>> adj;
    for (int v : vs) adj[v];
    for (const auto& e : faces_of_dim(1)) {
        adj[e[0]].insert(e[1]);
        adj[e[1]].insert(e[0]);
    }
    std::vector<int> verts(vs.begin(), vs.end());
    std::vector<std::vector<int>> cliques;
    std::set<int> R;
    maximal_cliques(verts, adj, R, vs, {}, cliques);
    for (const auto& c : cliques)
        if (!contains(c)) return false;
    return true;
}

std::vector<SparseColMatrix> boundary_matrices(const SimplicialComplex& k) {
    if (k.empty()) throw Error(Errc::EmptyComplex, "boundary matrices of the empty complex");
    int dim = k.dimension();
    std::vector<std::vector<std::vector<int>>> faces(dim + 1);
    std::vector<std::map<std::vector<int>, int>> index(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        faces[d] = k.faces_of_dim(d);
        for (size_t i = 0; i < faces[d].size(); ++i) index[d][faces[d][i]] = static_cast<int>(i);
    }
    std::vector<SparseColMatrix> boundaries(dim + 1);
    boundaries[0] = SparseColMatrix::zero(1, static_cast<int>(faces[0].size()));
    for (int j = 0; j < boundaries[0].cols; ++j) boundaries[0].add_entry(0, j, 1);
    for (int d = 1; d <= dim; ++d) {
        boundaries[d] = SparseColMatrix::zero(static_cast<int>(faces[d - 1].size()),
                                              static_cast<int>(faces[d].size()));
        for (size_t j = 0; j < faces[d].size(); ++j) {
            const auto& f = faces[d][j];
            for (size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> sub;
                sub.reserve(f.size() - 1);
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                boundaries[d].add_entry(index[d - 1][sub], static_cast<int>(j),
                                        drop % 2 == 0 ? 1 : -1);
            }
        }
    }
    return boundaries;
}

HomologyReport SimplicialComplex::reduced_homology() const {
    return homology_from_boundaries(boundary_matrices(*this));
}

bool SimplicialComplex::homologically_connected(int d) const {
    if (d < -1) return true;
    if (empty()) return false;
    if (d == -1) return true;
    HomologyReport h = reduced_homology();
    for (int i = 0; i <= d; ++i)
        if (h.rank(i) != 0 || !h.torsion_free(i)) return false;
    return true;
}

} // namespace amod
