#pragma once

// Finite discrete category dynamical systems: a contravariant action of
// a finite category on finite nonempty point sets, the dynamical
// predicates (topological freeness, minimality, faithfulness), the
// induced kernel congruence, and the construction from partially
// defined dynamical systems.

#include <skewcat/category.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace skewcat {

/// A validated finite category dynamical system. pointmap[n] sends
/// space(cod(n)) into space(dom(n)); contravariance means
/// pointmap(mn) = pointmap(n) o pointmap(m) for composable (m, n).
struct DynSys {
    Category cat;
    std::vector<std::vector<std::string>> space;  // per object, sorted point names
    std::vector<std::vector<int>> pointmap;       // per morphism: space(cod) -> space(dom)

    int space_size(int e) const { return static_cast<int>(space[e].size()); }

    int point_index(int e, const std::string& name) const {
        auto it = std::lower_bound(space[e].begin(), space[e].end(), name);
        if (it == space[e].end() || *it != name)
            throw Error("UnknownPoint",
                        "no point '" + name + "' in space of '" + cat.objects[e] + "'");
        return static_cast<int>(it - space[e].begin());
    }
};

/// Raw space/map assignment, keyed by names (mirrors the JSON file).
struct DynSysSpec {
    std::map<std::string, std::vector<std::string>> spaces;           // object -> points
    std::map<std::string, std::map<std::string, std::string>> maps;   // morphism -> point -> point
};

inline DynSys validate_dynsys(const Category& g, const DynSysSpec& spec) {
    DynSys d;
    d.cat = g;
    d.space.resize(g.n_obj());
    for (int e = 0; e < g.n_obj(); ++e) {
        auto it = spec.spaces.find(g.objects[e]);
        if (it == spec.spaces.end() || it->second.empty())
            throw Error("EmptySpace", "object '" + g.objects[e] + "' has an empty space");
        d.space[e] = it->second;
        std::sort(d.space[e].begin(), d.space[e].end());
        if (std::adjacent_find(d.space[e].begin(), d.space[e].end()) != d.space[e].end())
            throw Error("DuplicateName", "duplicate point in space of '" + g.objects[e] + "'");
    }

    d.pointmap.resize(g.n_mor());
    for (int n = 0; n < g.n_mor(); ++n) {
        auto it = spec.maps.find(g.morphisms[n]);
        if (it == spec.maps.end())
            throw Error("MapTypeMismatch", "no point map for morphism '" + g.morphisms[n] + "'");
        const int from = g.cod[n], to = g.dom[n];
        auto& pm = d.pointmap[n];
        pm.assign(d.space_size(from), -1);
        for (const auto& [src, dst] : it->second) {
            const int x = d.point_index(from, src);
            pm[x] = d.point_index(to, dst);
        }
        for (int x = 0; x < d.space_size(from); ++x)
            if (pm[x] < 0)
                throw Error("MapTypeMismatch", "map of '" + g.morphisms[n] + "' undefined at '" +
                                                   d.space[from][x] + "'");
    }

    for (int e = 0; e < g.n_obj(); ++e) {
        const int id = g.identity[e];
        for (int x = 0; x < d.space_size(e); ++x)
            if (d.pointmap[id][x] != x)
                throw Error("IdentityNotIdentity",
                            "identity of '" + g.objects[e] + "' does not act as the identity");
    }

    // contravariant functoriality on every composable pair and point
    for (int m = 0; m < g.n_mor(); ++m)
        for (int n = 0; n < g.n_mor(); ++n) {
            if (!g.composable(m, n)) continue;
            const int mn = g.compose(m, n);
            for (int x = 0; x < d.space_size(g.cod[m]); ++x)
                if (d.pointmap[mn][x] != d.pointmap[n][d.pointmap[m][x]])
                    throw Error("NotFunctorial",
                                "pair (" + g.morphisms[m] + ", " + g.morphisms[n] +
                                    ") fails at point '" + d.space[g.cod[m]][x] + "'");
        }
    return d;
}

/// Points of space(e) fixed by no nonidentity endomorphism.
inline std::vector<int> aperiodic_points(const DynSys& d, int e) {
    if (e < 0 || e >= d.cat.n_obj()) throw Error("UnknownObject", "object index out of range");
    std::vector<int> out;
    const auto ge = d.cat.endos(e);
    for (int x = 0; x < d.space_size(e); ++x) {
        bool periodic = false;
        for (int n : ge)
            if (!d.cat.is_identity(n) && d.pointmap[n][x] == x) periodic = true;
        if (!periodic) out.push_back(x);
    }
    return out;
}

/// Finite discrete spaces: dense = everything, so topological freeness
/// means every point of every space is aperiodic.
inline bool is_topologically_free(const DynSys& d) {
    for (int e = 0; e < d.cat.n_obj(); ++e)
        if (static_cast<int>(aperiodic_points(d, e).size()) != d.space_size(e)) return false;
    return true;
}

/// Closure of {x} under the endomorphism monoid action at e.
inline std::vector<bool> orbit_closure(const DynSys& d, int e, int x) {
    const auto ge = d.cat.endos(e);
    std::vector<bool> in(d.space_size(e), false);
    std::vector<int> stack{x};
    in[x] = true;
    while (!stack.empty()) {
        const int y = stack.back();
        stack.pop_back();
        for (int n : ge) {
            const int z = d.pointmap[n][y];
            if (!in[z]) {
                in[z] = true;
                stack.push_back(z);
            }
        }
    }
    return in;
}

struct MinimalityResult {
    bool minimal = true;
    int object = -1;
    std::vector<int> invariant_subset;  // nonempty proper invariant witness
};

/// Orbit-closure minimality test: the system is minimal iff every
/// singleton's closure under G_e is the whole space. A proper closure is
/// itself the returned invariant witness.
inline MinimalityResult is_minimal(const DynSys& d) {
    MinimalityResult out;
    for (int e = 0; e < d.cat.n_obj(); ++e)
        for (int x = 0; x < d.space_size(e); ++x) {
            const auto cl = orbit_closure(d, e, x);
            std::vector<int> members;
            for (int y = 0; y < d.space_size(e); ++y)
                if (cl[y]) members.push_back(y);
            if (static_cast<int>(members.size()) < d.space_size(e)) {
                out.minimal = false;
                out.object = e;
                out.invariant_subset = std::move(members);
                return out;
            }
        }
    return out;
}

struct FaithfulnessResult {
    bool faithful = true;
    int object = -1;
    int morphism = -1;  // nonidentity endomorphism acting as the identity
};

inline FaithfulnessResult is_faithful(const DynSys& d) {
    FaithfulnessResult out;
    for (int e = 0; e < d.cat.n_obj(); ++e)
        for (int n : d.cat.endos(e)) {
            if (d.cat.is_identity(n)) continue;
            bool moves = false;
            for (int x = 0; x < d.space_size(e); ++x)
                if (d.pointmap[n][x] != x) moves = true;
            if (!moves) {
                out.faithful = false;
                out.object = e;
                out.morphism = n;
                return out;
            }
        }
    return out;
}

/// The kernel congruence of the induced functor on function rings. On
/// finite discrete spaces indicator functions separate points, so two
/// parallel morphisms are related exactly when their point maps agree.
inline Congruence sigma_kernel(const DynSys& d) {
    const Category& g = d.cat;
    std::vector<int> raw(g.n_mor());
    for (int m = 0; m < g.n_mor(); ++m) {
        raw[m] = m;
        for (int n = 0; n < m; ++n)
            if (g.dom[n] == g.dom[m] && g.cod[n] == g.cod[m] && d.pointmap[n] == d.pointmap[m]) {
                raw[m] = raw[n];
                break;
            }
    }
    return detail::canonical_congruence(g, std::move(raw));
}

/// G_e-simplicity of the function ring at e. Ideals of a finite product
/// of fields are vanishing ideals of point subsets, and invariance of
/// the vanishing ideal corresponds to invariance of the subset, so the
/// question reduces to the absence of a nonempty proper invariant
/// subset; the minimal candidates are the orbit closures.
inline bool is_Ge_simple(const DynSys& d, int e) {
    if (e < 0 || e >= d.cat.n_obj()) throw Error("UnknownObject", "object index out of range");
    for (int x = 0; x < d.space_size(e); ++x) {
        const auto cl = orbit_closure(d, e, x);
        if (std::count(cl.begin(), cl.end(), true) != d.space_size(e)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Partially defined dynamical systems
// ---------------------------------------------------------------------------

/// A family of functions between subsets of an ambient finite set,
/// closed under composition and containing the identities of every
/// domain and codomain that occurs.
struct PartialSystem {
    std::vector<std::string> ambient;  // sorted point names
    struct Piece {
        std::string name;
        std::vector<int> dom, cod;  // sorted ambient indices, nonempty
        std::map<int, int> map;     // per dom element -> ambient index in cod
    };
    std::vector<Piece> pieces;

    int ambient_index(const std::string& p) const {
        auto it = std::lower_bound(ambient.begin(), ambient.end(), p);
        if (it == ambient.end() || *it != p)
            throw Error("UnknownPoint", "no ambient point '" + p + "'");
        return static_cast<int>(it - ambient.begin());
    }
};

namespace detail {

inline bool piece_is_identity(const PartialSystem::Piece& p) {
    if (p.dom != p.cod) return false;
    for (const auto& [x, y] : p.map)
        if (x != y) return false;
    return true;
}

inline std::string subset_label(const PartialSystem& ps, const std::vector<int>& subset) {
    std::string out = "{";
    for (size_t i = 0; i < subset.size(); ++i) {
        if (i) out += ",";
        out += ps.ambient[subset[i]];
    }
    return out + "}";
}

}  // namespace detail

/// Checks closure: identities of all domains/codomains present, and the
/// composite of any matching pair present (as a function).
inline void validate_partial_system(const PartialSystem& ps) {
    auto find_piece = [&](const std::vector<int>& dom, const std::vector<int>& cod,
                          const std::map<int, int>& map) {
        for (const auto& q : ps.pieces)
            if (q.dom == dom && q.cod == cod && q.map == map) return true;
        return false;
    };
    for (const auto& p : ps.pieces) {
        if (p.dom.empty() || p.cod.empty())
            throw Error("EmptySpace", "piece '" + p.name + "' has an empty domain or codomain");
        for (const auto& [x, y] : p.map)
            if (!std::binary_search(p.cod.begin(), p.cod.end(), y))
                throw Error("MapTypeMismatch", "piece '" + p.name + "' leaves its codomain");
        for (const std::vector<int>& s : {p.dom, p.cod}) {
            std::map<int, int> id;
            for (int x : s) id[x] = x;
            if (!find_piece(s, s, id))
                throw Error("MissingIdentity",
                            "identity of " + detail::subset_label(ps, s) + " is missing");
        }
    }
    for (const auto& f : ps.pieces)
        for (const auto& g : ps.pieces) {
            if (f.dom != g.cod) continue;
            std::map<int, int> comp;
            for (const auto& [x, y] : g.map) comp[x] = f.map.at(y);
            if (!find_piece(g.dom, f.cod, comp))
                throw Error("NotClosed",
                            "composite '" + f.name + "' o '" + g.name + "' is not in the system");
        }
}

/// Builds the category dynamical system of a partially defined system:
/// the category is the opposite of the function category, so for the
/// morphism arising from a function f its codomain object is f's
/// original domain and the point map is f itself.
inline DynSys from_partial_system(const PartialSystem& ps) {
    validate_partial_system(ps);

    std::map<std::vector<int>, std::string> object_of;
    for (const auto& p : ps.pieces) {
        object_of[p.dom] = detail::subset_label(ps, p.dom);
        object_of[p.cod] = detail::subset_label(ps, p.cod);
    }

    CategorySpec cs;
    for (const auto& [subset, label] : object_of) cs.objects.push_back(label);
    for (const auto& p : ps.pieces)
        // opposite orientation: dom of the G-morphism = f's codomain
        cs.morphisms.push_back({p.name, object_of.at(p.cod), object_of.at(p.dom)});
    for (const auto& p : ps.pieces)
        if (detail::piece_is_identity(p)) cs.identities[object_of.at(p.dom)] = p.name;

    auto piece_index = [&](const std::vector<int>& dom, const std::vector<int>& cod,
                           const std::map<int, int>& map) -> const PartialSystem::Piece& {
        for (const auto& q : ps.pieces)
            if (q.dom == dom && q.cod == cod && q.map == map) return q;
        throw Error("NotClosed", "composite missing");  // unreachable after validation
    };
    // composition in G reverses: m * n (dom(m) = cod(n)) corresponds to
    // the function composite n_f o m_f
    for (const auto& m : ps.pieces)
        for (const auto& n : ps.pieces) {
            if (n.dom != m.cod) continue;
            std::map<int, int> comp;
            for (const auto& [x, y] : m.map) comp[x] = n.map.at(y);
            cs.composition.emplace_back(m.name, n.name,
                                        piece_index(m.dom, n.cod, comp).name);
        }

    DynSysSpec ds;
    for (const auto& [subset, label] : object_of) {
        std::vector<std::string> pts;
        for (int x : subset) pts.push_back(ps.ambient[x]);
        ds.spaces[label] = pts;
    }
    for (const auto& p : ps.pieces) {
        std::map<std::string, std::string> m;
        for (const auto& [x, y] : p.map) m[ps.ambient[x]] = ps.ambient[y];
        ds.maps[p.name] = m;
    }
    return validate_dynsys(validate_category(cs), ds);
}

// Predicates of a partial system in their own terms; used to cross-check
// that the induced category dynamical system preserves them.

inline bool partial_topologically_free(const PartialSystem& ps) {
    for (int x = 0; x < static_cast<int>(ps.ambient.size()); ++x)
        for (const auto& f : ps.pieces)
            if (f.dom == f.cod && !detail::piece_is_identity(f)) {
                auto it = f.map.find(x);
                if (it != f.map.end() && it->second == x) return false;
            }
    return true;
}

inline bool partial_minimal(const PartialSystem& ps) {
    for (const auto& g : ps.pieces) {
        const auto& y = g.dom;
        std::vector<const PartialSystem::Piece*> endos;
        for (const auto& f : ps.pieces)
            if (f.dom == y && f.cod == y) endos.push_back(&f);
        // closure of each singleton inside Y
        for (int x0 : y) {
            std::set<int> closure{x0};
            std::vector<int> stack{x0};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (const auto* f : endos) {
                    int z = f->map.at(x);
                    if (closure.insert(z).second) stack.push_back(z);
                }
            }
            if (closure.size() < y.size()) return false;
        }
    }
    return true;
}

inline bool partial_faithful(const PartialSystem& ps) {
    for (const auto& f : ps.pieces) {
        if (f.dom != f.cod || detail::piece_is_identity(f)) continue;
        bool moves = false;
        for (const auto& [x, y] : f.map)
            if (x != y) moves = true;
        if (!moves) return false;
    }
    return true;
}

}  // namespace skewcat
