#include "amodlab/arcs.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace amod {

SeparationRelation SeparationRelation::r_separation(int q, int r) {
    if (q < 1 || r < 0) throw Error(Errc::BadInput, "need q >= 1, r >= 0");
    std::vector<std::vector<bool>> rel(q, std::vector<bool>(q, false));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            int d = std::abs(i - j);
            d = std::min(d, q - d);
            rel[i][j] = i != j && d > r;
        }
    }
    return SeparationRelation(q, std::move(rel));
}

SeparationRelation SeparationRelation::from_matrix(std::vector<std::vector<bool>> related) {
    int q = static_cast<int>(related.size());
    if (q < 1) throw Error(Errc::BadInput, "need q >= 1");
    for (int i = 0; i < q; ++i) {
        if (static_cast<int>(related[i].size()) != q)
            throw Error(Errc::BadInput, "relation matrix must be square");
        if (related[i][i]) throw Error(Errc::BadInput, "relation must be irreflexive");
        for (int j = 0; j < q; ++j)
            if (related[i][j] != related[j][i])
                throw Error(Errc::BadInput, "relation must be symmetric");
    }
    return SeparationRelation(q, std::move(related));
}

namespace {

void maximal_related_sets(const SeparationRelation& rel, std::vector<int>& current,
                          std::vector<int> candidates, std::vector<int> excluded,
                          const std::function<void(const std::vector<int>&)>& emit) {
    if (candidates.empty() && excluded.empty()) {
        emit(current);
        return;
    }
    std::vector<int> cands = candidates;
    for (int v : cands) {
        std::vector<int> nc, nx;
        for (int w : candidates)
            if (rel.related(v, w)) nc.push_back(w);
        for (int w : excluded)
            if (rel.related(v, w)) nx.push_back(w);
        current.push_back(v);
        maximal_related_sets(rel, current, nc, nx, emit);
        current.pop_back();
        candidates.erase(std::find(candidates.begin(), candidates.end(), v));
        excluded.push_back(v);
    }
}

void for_each_maximal_related_set(const SeparationRelation& rel,
                                  const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> all(rel.q());
    for (int i = 0; i < rel.q(); ++i) all[i] = i;
    std::vector<int> current;
    maximal_related_sets(rel, current, all, {}, emit);
}

} // namespace

int min_related(const SeparationRelation& rel) {
    int best = rel.q() + 1;
    for_each_maximal_related_set(rel, [&](const std::vector<int>& clique) {
        best = std::min(best, static_cast<int>(clique.size()));
    });
    return best;
}

int separation_min_formula(int q, int r) {
    if (q < 1 || r < 0) throw Error(Errc::BadInput, "need q >= 1, r >= 0");
    return q / (r + 1);
}

int connectivity_bound(int p, int q, int r) {
    if (p < 2) throw Error(Errc::BadInput, "need p >= 2");
    return (p + separation_min_formula(q, r)) / 3 - 2;
}

int general_bound(int p_count, const SeparationRelation& rel) {
    if (p_count < 2) throw Error(Errc::BadInput, "need at least 2 punctures");
    return (p_count + min_related(rel)) / 3 - 2;
}

int conjectured_bouquet_dimension(int p, int q, int r) {
    return std::min(p, separation_min_formula(q, r)) - 1;
}

SimplicialComplex fundamental_domain(int q, int r, std::optional<int> cap) {
    SeparationRelation rel = SeparationRelation::r_separation(q, r);
    std::vector<std::vector<int>> facets;
    for_each_maximal_related_set(rel, [&](const std::vector<int>& clique) {
        if (!cap || static_cast<int>(clique.size()) <= *cap) {
            facets.push_back(clique);
            return;
        }
        // puncture budget: only sub-collections of size <= cap are simplices
        std::vector<int> pick;
        std::function<void(size_t)> choose = [&](size_t start) {
            if (static_cast<int>(pick.size()) == *cap) {
                facets.push_back(pick);
                return;
            }
            for (size_t i = start; i < clique.size(); ++i) {
                pick.push_back(clique[i]);
                choose(i + 1);
                pick.pop_back();
            }
        };
        if (*cap >= 1) choose(0);
    });
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex sphere_witness(int k, int j) {
    if (k < 1 || j < 1) throw Error(Errc::BadInput, "need k >= 1, j >= 1");
    std::vector<std::vector<int>> facets;
    std::vector<int> cur;
    std::function<void(int)> pick = [&](int i) {
        if (i > k) {
            facets.push_back(cur);
            return;
        }
        for (int g : {j, j + 1}) {
            cur.push_back(SymbolicArc{i, g}.vertex_id(k));
            pick(i + 1);
            cur.pop_back();
        }
    };
    pick(1);
    return SimplicialComplex::from_facets(std::move(facets));
}

bool witness_disjointness(int k, int j1, int j2) {
    if (k < 1 || j1 < 1 || j2 < 1) throw Error(Errc::BadInput, "need k, j1, j2 >= 1");
    return j1 + 1 < j2 || j2 + 1 < j1;
}

int puncture_budget(int k) {
    if (k < 1) throw Error(Errc::BadInput, "need k >= 1");
    return 2 * k;
}

} // namespace amod
