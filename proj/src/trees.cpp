#include "amodlab/trees.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <tuple>

namespace amod {

TreeFamily TreeFamily::higman(int n, int m) {
    if (n < 1 || m < 1)
        throw Error(Errc::BadInput, "higman requires n >= 1, m >= 1");
    return TreeFamily(Kind::Higman, n, m);
}

TreeFamily TreeFamily::regular(int n) {
    if (n < 2)
        throw Error(Errc::BadInput, "regular requires n >= 2");
    return higman(n, n + 1);
}

TreeFamily TreeFamily::star(int n) {
    if (n < 1)
        throw Error(Errc::BadInput, "star requires n >= 1");
    return higman(1, n);
}

TreeFamily TreeFamily::lamplighter() { return TreeFamily(Kind::Lamplighter, 0, 0); }

int TreeFamily::n() const {
    if (kind_ != Kind::Higman)
        throw Error(Errc::Unsupported, "branching parameter is Higman-specific");
    return n_;
}

int TreeFamily::m() const {
    if (kind_ != Kind::Higman)
        throw Error(Errc::Unsupported, "central valence is Higman-specific");
    return m_;
}

std::string TreeFamily::to_string() const {
    if (kind_ == Kind::Lamplighter) return "lamplighter";
    if (n_ == 1) return "star " + std::to_string(m_);
    if (m_ == n_ + 1) return "regular " + std::to_string(n_);
    return "higman " + std::to_string(n_) + " " + std::to_string(m_);
}

namespace {

TreeFamily family_from_tokens(const std::vector<std::string>& tok, const std::string& text) {
    auto to_int = [&](const std::string& s) {
        try {
            size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw Error(Errc::BadInput, "bad family parameter in '" + text + "'");
        }
    };
    if (tok.empty()) throw Error(Errc::BadInput, "empty family string");
    if (tok[0] == "lamplighter" && tok.size() == 1) return TreeFamily::lamplighter();
    if (tok[0] == "higman" && tok.size() == 3)
        return TreeFamily::higman(to_int(tok[1]), to_int(tok[2]));
    if (tok[0] == "regular" && tok.size() == 2) return TreeFamily::regular(to_int(tok[1]));
    if (tok[0] == "star" && tok.size() == 2) return TreeFamily::star(to_int(tok[1]));
    throw Error(Errc::BadInput, "unrecognized family '" + text + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

TreeFamily TreeFamily::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tok;
    std::string t;
    while (in >> t) tok.push_back(t);
    return family_from_tokens(tok, text);
}

TreeFamily TreeFamily::parse_flag(const std::string& text) {
    return family_from_tokens(split(text, ':'), text);
}

PolygonAddress PolygonAddress::parent() const {
    if (is_center()) throw Error(Errc::BadInput, "central polygon has no parent");
    PolygonAddress p{path};
    p.path.pop_back();
    return p;
}

PolygonAddress PolygonAddress::child(int index) const {
    PolygonAddress c{path};
    c.path.push_back(index);
    return c;
}

std::string PolygonAddress::to_string() const {
    std::string out;
    for (size_t i = 0; i < path.size(); ++i) {
        if (i) out.push_back('/');
        out += std::to_string(path[i]);
    }
    return out;
}

PolygonAddress PolygonAddress::parse(const std::string& text) {
    PolygonAddress a;
    if (text.empty()) return a;
    for (const std::string& tok : split(text, '/')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            a.path.push_back(v);
        } catch (const std::exception&) {
            throw Error(Errc::BadInput, "bad polygon address '" + text + "'");
        }
    }
    return a;
}

namespace {

// Planar vertex kinds of the lamplighter tree. Child lists are in the
// clockwise order after the parent edge:
//   root (line vertex):   left line, right line, ray below
//   west-going line:      ray below, next line west
//   east-going line:      next line east, ray below
//   ray vertex:           next ray down
enum class LampKind { Root, LineW, LineE, Ray };

LampKind lamp_child_kind(LampKind k, int index) {
    switch (k) {
        case LampKind::Root:
            if (index == 0) return LampKind::LineW;
            if (index == 1) return LampKind::LineE;
            return LampKind::Ray;
        case LampKind::LineW:
            return index == 0 ? LampKind::Ray : LampKind::LineW;
        case LampKind::LineE:
            return index == 0 ? LampKind::LineE : LampKind::Ray;
        case LampKind::Ray:
            return LampKind::Ray;
    }
    return LampKind::Ray;
}

int lamp_child_count(LampKind k) {
    switch (k) {
        case LampKind::Root: return 3;
        case LampKind::LineW:
        case LampKind::LineE: return 2;
        case LampKind::Ray: return 1;
    }
    return 0;
}

// Kind of the vertex at `addr`; nullopt if the address is invalid.
std::optional<LampKind> lamp_kind(const PolygonAddress& addr) {
    LampKind k = LampKind::Root;
    for (int idx : addr.path) {
        if (idx < 0 || idx >= lamp_child_count(k)) return std::nullopt;
        k = lamp_child_kind(k, idx);
    }
    return k;
}

} // namespace

int child_count(const TreeFamily& f, const PolygonAddress& addr) {
    if (f.is_lamplighter()) {
        auto k = lamp_kind(addr);
        if (!k) throw Error(Errc::BadInput, "invalid address " + addr.to_string());
        return lamp_child_count(*k);
    }
    if (!address_valid(f, addr))
        throw Error(Errc::BadInput, "invalid address " + addr.to_string());
    return addr.is_center() ? f.m() : f.n();
}

int valence(const TreeFamily& f, const PolygonAddress& addr) {
    return child_count(f, addr) + (addr.is_center() ? 0 : 1);
}

bool address_valid(const TreeFamily& f, const PolygonAddress& addr) {
    if (f.is_lamplighter()) return lamp_kind(addr).has_value();
    for (size_t d = 0; d < addr.path.size(); ++d) {
        int budget = d == 0 ? f.m() : f.n();
        if (addr.path[d] < 0 || addr.path[d] >= budget) return false;
    }
    return true;
}

AdmissibleSurface::AdmissibleSurface(TreeFamily family, std::set<PolygonAddress> polygons)
    : family_(family), polygons_(std::move(polygons)) {
    if (polygons_.empty())
        throw Error(Errc::BadInput, "admissible surface must be nonempty");
    for (const auto& a : polygons_) {
        if (!address_valid(family_, a))
            throw Error(Errc::BadInput, "invalid address " + a.to_string());
        if (!a.is_center() && a != *polygons_.begin() && polygons_.count(a.parent()) == 0)
            throw Error(Errc::BadInput, "disconnected surface at " + a.to_string());
    }
}

AdmissibleSurface AdmissibleSurface::with_polygon(const PolygonAddress& a) const {
    std::set<PolygonAddress> p = polygons_;
    p.insert(a);
    return AdmissibleSurface(family_, std::move(p));
}

AdmissibleSurface AdmissibleSurface::without_polygon(const PolygonAddress& a) const {
    std::set<PolygonAddress> p = polygons_;
    p.erase(a);
    return AdmissibleSurface(family_, std::move(p));
}

bool AdmissibleSurface::subset_of(const AdmissibleSurface& other) const {
    return family_ == other.family_ &&
           std::includes(other.polygons_.begin(), other.polygons_.end(), polygons_.begin(),
                         polygons_.end());
}

std::vector<PolygonAddress> AdmissibleSurface::adjacent_polygons() const {
    std::set<PolygonAddress> out;
    for (const auto& v : polygons_) {
        int cc = child_count(family_, v);
        for (int j = 0; j < cc; ++j) {
            PolygonAddress c = v.child(j);
            if (!contains(c)) out.insert(c);
        }
    }
    if (!root().is_center()) out.insert(root().parent());
    return {out.begin(), out.end()};
}

bool AdmissibleSurface::is_adjacent(const PolygonAddress& a) const {
    if (contains(a) || !address_valid(family_, a)) return false;
    if (!a.is_center() && contains(a.parent())) return true;
    return !root().is_center() && root().parent() == a;
}

std::string AdmissibleSurface::serialize() const {
    std::string out;
    for (const auto& a : polygons_) {
        out += a.to_string();
        out.push_back('\n');
    }
    return out;
}

AdmissibleSurface AdmissibleSurface::parse(const TreeFamily& f, const std::string& text) {
    std::set<PolygonAddress> polys;
    std::vector<std::string> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty() && text.ends_with('\n')) lines.pop_back();
    for (const auto& line : lines) polys.insert(PolygonAddress::parse(line));
    return AdmissibleSurface(f, std::move(polys));
}

int height(const AdmissibleSurface& s) { return s.height(); }

namespace {

// Ports of a polygon in planar cyclic order: the parent arc first for
// non-central polygons, then the child arcs in address order.
PolygonAddress neighbor_of_port(const PolygonAddress& v, int port) {
    if (!v.is_center()) return port == 0 ? v.parent() : v.child(port - 1);
    return v.child(port);
}

int port_toward(const TreeFamily& f, const PolygonAddress& v, const PolygonAddress& target) {
    if (!v.is_center() && v.parent() == target) return 0;
    assert(target.depth() == v.depth() + 1);
    (void)f;
    return target.path.back() + (v.is_center() ? 0 : 1);
}

void boundary_walk(const AdmissibleSurface& s, const PolygonAddress& v, int enter_port,
                   std::vector<FrontierArc>& out) {
    int deg = valence(s.family(), v);
    for (int k = enter_port < 0 ? 0 : 1; k < deg; ++k) {
        int p = enter_port < 0 ? k : (enter_port + k) % deg;
        PolygonAddress u = neighbor_of_port(v, p);
        if (s.contains(u)) {
            boundary_walk(s, u, port_toward(s.family(), u, v), out);
        } else {
            out.push_back(FrontierArc{v, p, 0});
        }
    }
}

} // namespace

std::vector<FrontierArc> frontier_arcs(const AdmissibleSurface& s) {
    std::vector<FrontierArc> arcs;
    boundary_walk(s, s.root(), -1, arcs);

    long long expected = -2LL * (s.height() - 1);
    for (const auto& v : s.polygons()) expected += valence(s.family(), v);
    assert(static_cast<long long>(arcs.size()) == expected);

    auto least = std::min_element(arcs.begin(), arcs.end(),
                                  [](const FrontierArc& a, const FrontierArc& b) {
                                      return std::tie(a.owner, a.slot) < std::tie(b.owner, b.slot);
                                  });
    std::rotate(arcs.begin(), least, arcs.end());
    for (size_t i = 0; i < arcs.size(); ++i) arcs[i].cyclic_position = static_cast<int>(i);
    return arcs;
}

namespace {

enum class TriState { Equal, Unequal, Unknown };

// Depth-bounded comparison of two complement components of the lamplighter
// tree, each given as (root vertex, neighbor the component must not cross),
// as rooted planar trees.
TriState lamp_compare(const TreeFamily& f, const PolygonAddress& u1, const PolygonAddress& b1,
                      const PolygonAddress& u2, const PolygonAddress& b2, int depth) {
    if (u1 == u2 && b1 == b2) return TriState::Equal;
    if (depth <= 0) return TriState::Unknown;
    int deg1 = valence(f, u1);
    int deg2 = valence(f, u2);
    if (deg1 != deg2) return TriState::Unequal;
    int p1 = port_toward(f, u1, b1);
    int p2 = port_toward(f, u2, b2);
    bool unknown = false;
    for (int k = 1; k < deg1; ++k) {
        PolygonAddress c1 = neighbor_of_port(u1, (p1 + k) % deg1);
        PolygonAddress c2 = neighbor_of_port(u2, (p2 + k) % deg2);
        switch (lamp_compare(f, c1, u1, c2, u2, depth - 1)) {
            case TriState::Unequal: return TriState::Unequal;
            case TriState::Unknown: unknown = true; break;
            case TriState::Equal: break;
        }
    }
    return unknown ? TriState::Unknown : TriState::Equal;
}

} // namespace

long long rotation_order(const AdmissibleSurface& s, int lamplighter_depth) {
    std::vector<FrontierArc> arcs = frontier_arcs(s);
    long long c = static_cast<long long>(arcs.size());
    if (c == 1) return 1;

    const TreeFamily& f = s.family();
    std::function<TriState(int, int)> eq;
    if (!f.is_lamplighter()) {
        // Complement components are n-branching rooted trees, all isomorphic,
        // except the one containing the center when the central valence is
        // distinguished (m != n+1).
        bool has_special = !s.contains_center() && f.m() != f.n() + 1;
        PolygonAddress rootward_owner = s.root();
        eq = [&, has_special, rootward_owner](int i, int j) {
            auto special = [&](const FrontierArc& a) {
                return has_special && a.owner == rootward_owner && a.slot == 0;
            };
            return special(arcs[i]) == special(arcs[j]) ? TriState::Equal : TriState::Unequal;
        };
    } else {
        eq = [&](int i, int j) {
            PolygonAddress u1 = neighbor_of_port(arcs[i].owner, arcs[i].slot);
            PolygonAddress u2 = neighbor_of_port(arcs[j].owner, arcs[j].slot);
            return lamp_compare(f, u1, arcs[i].owner, u2, arcs[j].owner, lamplighter_depth);
        };
    }

    long long definite = 1;  // k = 0
    long long possible = 1;
    for (long long k = 1; k < c; ++k) {
        bool unknown = false, dead = false;
        for (long long i = 0; i < c && !dead; ++i) {
            switch (eq(static_cast<int>(i), static_cast<int>((i + k) % c))) {
                case TriState::Unequal: dead = true; break;
                case TriState::Unknown: unknown = true; break;
                case TriState::Equal: break;
            }
        }
        if (dead) continue;
        possible++;
        if (!unknown) definite++;
    }
    if (definite != possible)
        throw Error(Errc::Undecided,
                    "depth-bounded comparison cannot certify the rotation group of\n" +
                        s.serialize());
    return definite >= 2 ? definite : 0;
}

int central_height(const AdmissibleSurface& s) { return s.root().depth(); }

AdmissibleSurface tau_step(const AdmissibleSurface& s) {
    if (s.contains_center()) return s;
    return s.with_polygon(s.root().parent());
}

TreeFamily collapse_edge(const TreeFamily& f) {
    if (f.is_lamplighter())
        throw Error(Errc::Unsupported, "edge collapse is not defined for the lamplighter family");
    return TreeFamily::higman(f.n(), f.m() + f.n() - 1);
}

} // namespace amod
