#pragma once

// Finite small categories with explicit composition tables, congruence
// relations, and the structural predicates used by the simplicity
// analysis (connectedness, inverse connectedness, groupoid, local
// group/abelian structure, locally trivial kernels).

#include <skewcat/rational.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace skewcat {

/// Raw, unvalidated category description (mirrors the JSON instance file).
struct CategorySpec {
    std::vector<std::string> objects;
    struct Mor {
        std::string name, dom, cod;
    };
    std::vector<Mor> morphisms;
    std::map<std::string, std::string> identities;                         // object -> morphism
    std::vector<std::tuple<std::string, std::string, std::string>> composition;  // (m, n, mn)
};

/// A validated finite category. Objects and morphisms are indexed after
/// lexicographic sort of their identifiers, so all derived data is
/// deterministic. Immutable after validation.
struct Category {
    std::vector<std::string> objects;    // sorted
    std::vector<std::string> morphisms;  // sorted
    std::vector<int> dom, cod;           // per morphism
    std::vector<int> identity;           // per object -> morphism index
    std::vector<int> comp;               // comp[m * n_mor + n] = mn, or -1

    int n_obj() const { return static_cast<int>(objects.size()); }
    int n_mor() const { return static_cast<int>(morphisms.size()); }

    /// compose(m, n) = mn, defined exactly when dom(m) == cod(n).
    int compose(int m, int n) const { return comp[m * n_mor() + n]; }
    bool composable(int m, int n) const { return dom[m] == cod[n]; }

    bool is_identity(int m) const { return identity[dom[m]] == m && dom[m] == cod[m]; }

    std::vector<int> hom(int e, int f) const {
        std::vector<int> out;
        for (int m = 0; m < n_mor(); ++m)
            if (dom[m] == e && cod[m] == f) out.push_back(m);
        return out;
    }

    /// Endomorphism monoid G_e.
    std::vector<int> endos(int e) const { return hom(e, e); }

    int object_index(const std::string& name) const {
        auto it = std::lower_bound(objects.begin(), objects.end(), name);
        if (it == objects.end() || *it != name)
            throw Error("UnknownObject", "no object named '" + name + "'");
        return static_cast<int>(it - objects.begin());
    }

    int morphism_index(const std::string& name) const {
        auto it = std::lower_bound(morphisms.begin(), morphisms.end(), name);
        if (it == morphisms.end() || *it != name)
            throw Error("UnknownMorphism", "no morphism named '" + name + "'");
        return static_cast<int>(it - morphisms.begin());
    }
};

inline Category validate_category(const CategorySpec& spec) {
    if (spec.objects.empty())
        throw Error("EmptyCategory", "a category must have at least one object");

    Category cat;
    cat.objects = spec.objects;
    std::sort(cat.objects.begin(), cat.objects.end());
    if (std::adjacent_find(cat.objects.begin(), cat.objects.end()) != cat.objects.end())
        throw Error("DuplicateName", "duplicate object identifier");

    for (const auto& m : spec.morphisms) cat.morphisms.push_back(m.name);
    std::sort(cat.morphisms.begin(), cat.morphisms.end());
    if (std::adjacent_find(cat.morphisms.begin(), cat.morphisms.end()) != cat.morphisms.end())
        throw Error("DuplicateName", "duplicate morphism identifier");

    const int no = cat.n_obj(), nm = cat.n_mor();
    cat.dom.assign(nm, -1);
    cat.cod.assign(nm, -1);
    for (const auto& m : spec.morphisms) {
        const int i = cat.morphism_index(m.name);
        cat.dom[i] = cat.object_index(m.dom);
        cat.cod[i] = cat.object_index(m.cod);
    }

    cat.identity.assign(no, -1);
    for (const auto& [obj, mor] : spec.identities) {
        const int e = cat.object_index(obj);
        const int m = cat.morphism_index(mor);
        if (cat.dom[m] != e || cat.cod[m] != e)
            throw Error("MissingIdentity",
                        "identity of '" + obj + "' must be an endomorphism of it");
        cat.identity[e] = m;
    }
    for (int e = 0; e < no; ++e)
        if (cat.identity[e] < 0)
            throw Error("MissingIdentity", "object '" + cat.objects[e] + "' has no identity");

    cat.comp.assign(static_cast<size_t>(nm) * nm, -1);
    for (const auto& [ms, ns, rs] : spec.composition) {
        const int m = cat.morphism_index(ms);
        const int n = cat.morphism_index(ns);
        const int r = cat.morphism_index(rs);
        if (!cat.composable(m, n))
            throw Error("BadComposite",
                        "entry (" + ms + ", " + ns + "): dom(" + ms + ") != cod(" + ns + ")");
        if (cat.dom[r] != cat.dom[n] || cat.cod[r] != cat.cod[m])
            throw Error("BadComposite",
                        "entry (" + ms + ", " + ns + ") = " + rs + ": endpoint mismatch");
        cat.comp[m * nm + n] = r;
    }
    for (int m = 0; m < nm; ++m)
        for (int n = 0; n < nm; ++n)
            if (cat.composable(m, n) && cat.compose(m, n) < 0)
                throw Error("PartialComposition", "no composite for composable pair (" +
                                                      cat.morphisms[m] + ", " + cat.morphisms[n] + ")");

    // unit laws
    for (int m = 0; m < nm; ++m) {
        if (cat.compose(m, cat.identity[cat.dom[m]]) != m ||
            cat.compose(cat.identity[cat.cod[m]], m) != m)
            throw Error("MissingIdentity",
                        "identity law fails at morphism '" + cat.morphisms[m] + "'");
    }

    // exhaustive associativity scan over composable triples
    for (int m = 0; m < nm; ++m)
        for (int n = 0; n < nm; ++n) {
            if (!cat.composable(m, n)) continue;
            const int mn = cat.compose(m, n);
            for (int p = 0; p < nm; ++p) {
                if (!cat.composable(n, p)) continue;
                if (cat.compose(mn, p) != cat.compose(m, cat.compose(n, p)))
                    throw Error("NonAssociative",
                                "witness triple (" + cat.morphisms[m] + ", " + cat.morphisms[n] +
                                    ", " + cat.morphisms[p] + ")");
            }
        }
    return cat;
}

struct StructurePredicates {
    bool connected = false;
    bool groupoid = false;
    bool locally_group = false;
    bool locally_abelian = false;
};

inline std::optional<int> two_sided_inverse(const Category& g, int m) {
    for (int n = 0; n < g.n_mor(); ++n) {
        if (g.dom[n] != g.cod[m] || g.cod[n] != g.dom[m]) continue;
        if (g.compose(m, n) == g.identity[g.cod[m]] && g.compose(n, m) == g.identity[g.dom[m]])
            return n;
    }
    return std::nullopt;
}

inline StructurePredicates structure_predicates(const Category& g) {
    StructurePredicates out;

    // connectivity of the underlying undirected object graph
    std::vector<int> parent(g.n_obj());
    for (int i = 0; i < g.n_obj(); ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int m = 0; m < g.n_mor(); ++m) parent[find(g.dom[m])] = find(g.cod[m]);
    out.connected = true;
    for (int i = 1; i < g.n_obj(); ++i)
        if (find(i) != find(0)) out.connected = false;

    out.groupoid = true;
    for (int m = 0; m < g.n_mor() && out.groupoid; ++m)
        if (!two_sided_inverse(g, m)) out.groupoid = false;

    out.locally_group = true;
    out.locally_abelian = true;
    for (int e = 0; e < g.n_obj(); ++e) {
        const auto ge = g.endos(e);
        for (int m : ge) {
            bool has_inv = false;
            for (int n : ge)
                if (g.compose(m, n) == g.identity[e] && g.compose(n, m) == g.identity[e])
                    has_inv = true;
            if (!has_inv) out.locally_group = false;
            for (int n : ge)
                if (g.compose(m, n) != g.compose(n, m)) out.locally_abelian = false;
        }
    }
    return out;
}

struct InverseConnectedness {
    bool holds = false;
    /// On success: per ordered object pair (e, f), morphisms (m, n) with
    /// dom(m) = cod(n) = f and mn = identity(e).
    std::map<std::pair<int, int>, std::pair<int, int>> witness;
    /// On failure: the first pair with no such factorization.
    std::pair<int, int> failure{-1, -1};
};

/// G is inverse connected when every identity factors through every object.
inline InverseConnectedness is_inverse_connected(const Category& g) {
    InverseConnectedness out;
    out.holds = true;
    for (int e = 0; e < g.n_obj(); ++e)
        for (int f = 0; f < g.n_obj(); ++f) {
            bool found = false;
            for (int m = 0; m < g.n_mor() && !found; ++m) {
                if (g.dom[m] != f || g.cod[m] != e) continue;
                for (int n = 0; n < g.n_mor(); ++n) {
                    if (g.cod[n] != f || g.dom[n] != e) continue;
                    if (g.compose(m, n) == g.identity[e]) {
                        out.witness[{e, f}] = {m, n};
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                out.holds = false;
                out.failure = {e, f};
                return out;
            }
        }
    return out;
}

/// A congruence relation: equivalence relations on each hom-set,
/// compatible with composition. Stored as a class id per morphism; the
/// class id is the smallest morphism index in the class.
struct Congruence {
    std::vector<int> cls;  // per morphism index

    bool related(int m, int n) const { return cls[m] == cls[n]; }

    std::vector<std::vector<int>> classes() const {
        std::map<int, std::vector<int>> by_id;
        for (int m = 0; m < static_cast<int>(cls.size()); ++m) by_id[cls[m]].push_back(m);
        std::vector<std::vector<int>> out;
        for (auto& [id, members] : by_id) out.push_back(std::move(members));
        return out;
    }

    bool is_equality() const {
        for (int m = 0; m < static_cast<int>(cls.size()); ++m)
            if (cls[m] != m) return false;
        return true;
    }
};

namespace detail {

inline Congruence canonical_congruence(const Category& g, std::vector<int> raw) {
    // remap each class id to the smallest member index
    std::map<int, int> smallest;
    for (int m = 0; m < g.n_mor(); ++m) {
        auto it = smallest.find(raw[m]);
        if (it == smallest.end() || m < it->second) smallest[raw[m]] = m;
    }
    Congruence c;
    c.cls.resize(g.n_mor());
    for (int m = 0; m < g.n_mor(); ++m) c.cls[m] = smallest[raw[m]];
    return c;
}

}  // namespace detail

/// Validates partition data as a congruence. Morphisms omitted from the
/// class list form singleton classes. Compatibility is verified by an
/// exhaustive left/right translation scan over related pairs.
inline Congruence validate_congruence(const Category& g,
                                      const std::vector<std::vector<std::string>>& classes) {
    std::vector<int> raw(g.n_mor());
    for (int m = 0; m < g.n_mor(); ++m) raw[m] = m;
    std::vector<bool> seen(g.n_mor(), false);
    for (const auto& cl : classes) {
        if (cl.empty()) throw Error("NotAPartition", "empty congruence class");
        const int first = g.morphism_index(cl.front());
        for (const auto& name : cl) {
            const int m = g.morphism_index(name);
            if (seen[m]) throw Error("NotAPartition", "morphism '" + name + "' listed twice");
            seen[m] = true;
            if (g.dom[m] != g.dom[first] || g.cod[m] != g.cod[first])
                throw Error("NotAPartition",
                            "class mixes hom-sets: '" + cl.front() + "' and '" + name + "'");
            raw[m] = first;
        }
    }
    Congruence c = detail::canonical_congruence(g, std::move(raw));

    for (int m = 0; m < g.n_mor(); ++m)
        for (int m2 = 0; m2 < g.n_mor(); ++m2) {
            if (!c.related(m, m2) || m == m2) continue;
            for (int p = 0; p < g.n_mor(); ++p) {
                if (g.composable(p, m) && !c.related(g.compose(p, m), g.compose(p, m2)))
                    throw Error("NotCompatible",
                                "witness (" + g.morphisms[p] + "*" + g.morphisms[m] + ", " +
                                    g.morphisms[p] + "*" + g.morphisms[m2] + ")");
                if (g.composable(m, p) && !c.related(g.compose(m, p), g.compose(m2, p)))
                    throw Error("NotCompatible",
                                "witness (" + g.morphisms[m] + "*" + g.morphisms[p] + ", " +
                                    g.morphisms[m2] + "*" + g.morphisms[p] + ")");
            }
        }
    return c;
}

/// True iff the congruence restricts to equality on every hom(e, e).
inline bool is_locally_trivial(const Category& g, const Congruence& c) {
    for (int m = 0; m < g.n_mor(); ++m)
        for (int n = 0; n < m; ++n)
            if (c.related(m, n) && g.dom[m] == g.cod[m] && g.dom[m] == g.dom[n] &&
                g.cod[n] == g.dom[n])
                return false;
    return true;
}

}  // namespace skewcat
