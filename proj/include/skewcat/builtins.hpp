#pragma once

// Built-in instances: small named systems used as CLI built-ins, test
// fixtures and deterministic witnesses in the verification corpus.
//
//   swap      Z_2 acting freely on two points (a 2x2 matrix algebra).
//   pairN     pair groupoid on N objects, singleton spaces (M_N).
//   triv2     Z_2 acting trivially on one point (group algebra of Z_2).
//   prod      Z_2 x Z_2 on two points; only the first factor acts.
//   abs       the square / square-root / absolute-value system on the
//             three-point line {-1, 0, 1} with image {0, 1}.
//   subsets2  all maps between all nonempty subsets of a two-point set.
//   arrow     two objects joined by a single non-invertible arrow.
//   fix3      Z_2 on three points, swapping two and fixing one.
//   twoswap   disjoint union of two copies of swap (disconnected).

#include <skewcat/dynsys.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace skewcat::builtins {

inline DynSys make_swap() {
    CategorySpec cs;
    cs.objects = {"e"};
    cs.morphisms = {{"1", "e", "e"}, {"g", "e", "e"}};
    cs.identities = {{"e", "1"}};
    cs.composition = {{"1", "1", "1"}, {"1", "g", "g"}, {"g", "1", "g"}, {"g", "g", "1"}};
    DynSysSpec ds;
    ds.spaces = {{"e", {"p", "q"}}};
    ds.maps = {{"1", {{"p", "p"}, {"q", "q"}}}, {"g", {{"p", "q"}, {"q", "p"}}}};
    return validate_dynsys(validate_category(cs), ds);
}

inline DynSys make_triv2() {
    CategorySpec cs;
    cs.objects = {"e"};
    cs.morphisms = {{"1", "e", "e"}, {"g", "e", "e"}};
    cs.identities = {{"e", "1"}};
    cs.composition = {{"1", "1", "1"}, {"1", "g", "g"}, {"g", "1", "g"}, {"g", "g", "1"}};
    DynSysSpec ds;
    ds.spaces = {{"e", {"p"}}};
    ds.maps = {{"1", {{"p", "p"}}}, {"g", {{"p", "p"}}}};
    return validate_dynsys(validate_category(cs), ds);
}

inline DynSys make_fix3() {
    CategorySpec cs;
    cs.objects = {"e"};
    cs.morphisms = {{"1", "e", "e"}, {"g", "e", "e"}};
    cs.identities = {{"e", "1"}};
    cs.composition = {{"1", "1", "1"}, {"1", "g", "g"}, {"g", "1", "g"}, {"g", "g", "1"}};
    DynSysSpec ds;
    ds.spaces = {{"e", {"a", "b", "c"}}};
    ds.maps = {{"1", {{"a", "a"}, {"b", "b"}, {"c", "c"}}},
               {"g", {{"a", "b"}, {"b", "a"}, {"c", "c"}}}};
    return validate_dynsys(validate_category(cs), ds);
}

/// Pair groupoid on n objects with singleton spaces; the algebra is the
/// full n x n matrix algebra with u_{a_i_j} as matrix units.
inline DynSys make_pair(int n) {
    CategorySpec cs;
    auto obj = [](int i) { return "o" + std::to_string(i); };
    auto mor = [](int i, int j) { return "a" + std::to_string(i) + std::to_string(j); };
    for (int i = 1; i <= n; ++i) cs.objects.push_back(obj(i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) cs.morphisms.push_back({mor(i, j), obj(j), obj(i)});
    for (int i = 1; i <= n; ++i) cs.identities[obj(i)] = mor(i, i);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                cs.composition.emplace_back(mor(i, j), mor(j, k), mor(i, k));
    DynSysSpec ds;
    for (int i = 1; i <= n; ++i) ds.spaces[obj(i)] = {"x"};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) ds.maps[mor(i, j)] = {{"x", "x"}};
    return validate_dynsys(validate_category(cs), ds);
}

/// Z_2 x Z_2 acting on two points through its first factor only; the
/// second factor acts as the identity, so the action is minimal but not
/// faithful.
inline DynSys make_prod() {
    CategorySpec cs;
    cs.objects = {"e"};
    auto mor = [](int a, int b) { return "g" + std::to_string(a) + std::to_string(b); };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) cs.morphisms.push_back({mor(a, b), "e", "e"});
    cs.identities = {{"e", mor(0, 0)}};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    cs.composition.emplace_back(mor(a, b), mor(c, d), mor(a ^ c, b ^ d));
    DynSysSpec ds;
    ds.spaces = {{"e", {"p", "q"}}};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            ds.maps[mor(a, b)] = a == 0
                                     ? std::map<std::string, std::string>{{"p", "p"}, {"q", "q"}}
                                     : std::map<std::string, std::string>{{"p", "q"}, {"q", "p"}};
    return validate_dynsys(validate_category(cs), ds);
}

inline DynSys make_arrow() {
    CategorySpec cs;
    cs.objects = {"e", "f"};
    cs.morphisms = {{"1e", "e", "e"}, {"1f", "f", "f"}, {"m", "e", "f"}};
    cs.identities = {{"e", "1e"}, {"f", "1f"}};
    cs.composition = {{"1e", "1e", "1e"}, {"1f", "1f", "1f"}, {"m", "1e", "m"}, {"1f", "m", "m"}};
    DynSysSpec ds;
    ds.spaces = {{"e", {"x"}}, {"f", {"y"}}};
    ds.maps = {{"1e", {{"x", "x"}}}, {"1f", {{"y", "y"}}}, {"m", {{"y", "x"}}}};
    return validate_dynsys(validate_category(cs), ds);
}

inline DynSys make_twoswap() {
    CategorySpec cs;
    cs.objects = {"e", "f"};
    cs.morphisms = {{"1e", "e", "e"}, {"ge", "e", "e"}, {"1f", "f", "f"}, {"gf", "f", "f"}};
    cs.identities = {{"e", "1e"}, {"f", "1f"}};
    cs.composition = {{"1e", "1e", "1e"}, {"1e", "ge", "ge"}, {"ge", "1e", "ge"},
                      {"ge", "ge", "1e"}, {"1f", "1f", "1f"}, {"1f", "gf", "gf"},
                      {"gf", "1f", "gf"}, {"gf", "gf", "1f"}};
    DynSysSpec ds;
    ds.spaces = {{"e", {"p", "q"}}, {"f", {"r", "s"}}};
    ds.maps = {{"1e", {{"p", "p"}, {"q", "q"}}},
               {"ge", {{"p", "q"}, {"q", "p"}}},
               {"1f", {{"r", "r"}, {"s", "s"}}},
               {"gf", {{"r", "s"}, {"s", "r"}}}};
    return validate_dynsys(validate_category(cs), ds);
}

/// The partially defined system generating the square / square-root /
/// absolute-value composition table, on the smallest point sets closed
/// under the three maps with all five maps distinct: X = {-1, 0, 1},
/// Y = {0, 1}.
inline PartialSystem make_abs_partial() {
    PartialSystem ps;
    ps.ambient = {"-1", "0", "1"};
    const int m1 = 0, z = 1, p1 = 2;  // indices after sort: "-1","0","1"
    const std::vector<int> X{m1, z, p1}, Y{z, p1};
    ps.pieces.push_back({"id_X", X, X, {{m1, m1}, {z, z}, {p1, p1}}});
    ps.pieces.push_back({"id_Y", Y, Y, {{z, z}, {p1, p1}}});
    ps.pieces.push_back({"sqr", X, Y, {{m1, p1}, {z, z}, {p1, p1}}});
    ps.pieces.push_back({"sqrt", Y, X, {{z, z}, {p1, p1}}});
    ps.pieces.push_back({"abs", X, X, {{m1, p1}, {z, z}, {p1, p1}}});
    return ps;
}

inline DynSys make_abs() { return from_partial_system(make_abs_partial()); }

/// All maps between all nonempty subsets of a k-point set. The empty
/// subset is excluded: its function ring would be the zero ring, which
/// has no unit.
inline PartialSystem make_subsets_partial(int k) {
    PartialSystem ps;
    for (int i = 0; i < k; ++i) ps.ambient.push_back(std::to_string(i));
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) s.push_back(i);
        subsets.push_back(std::move(s));
    }
    for (const auto& dom : subsets)
        for (const auto& cod : subsets) {
            // enumerate all |cod|^|dom| functions
            std::vector<int> choice(dom.size(), 0);
            for (;;) {
                PartialSystem::Piece p;
                p.dom = dom;
                p.cod = cod;
                std::string tag;
                for (size_t i = 0; i < dom.size(); ++i) {
                    p.map[dom[i]] = cod[choice[i]];
                    tag += std::to_string(cod[choice[i]]);
                }
                p.name = "f" + detail::subset_label(ps, dom) + detail::subset_label(ps, cod) +
                         "[" + tag + "]";
                ps.pieces.push_back(std::move(p));
                size_t i = 0;
                while (i < choice.size() && ++choice[i] == static_cast<int>(cod.size()))
                    choice[i++] = 0;
                if (i == choice.size()) break;
            }
        }
    return ps;
}

inline DynSys make_subsets(int k) { return from_partial_system(make_subsets_partial(k)); }

inline const std::map<std::string, std::function<DynSys()>>& registry() {
    static const std::map<std::string, std::function<DynSys()>> reg = {
        {"abs", make_abs},
        {"pair2", [] { return make_pair(2); }},
        {"pair3", [] { return make_pair(3); }},
        {"pair4", [] { return make_pair(4); }},
        {"pair5", [] { return make_pair(5); }},
        {"pair6", [] { return make_pair(6); }},
        {"swap", make_swap},
        {"triv2", make_triv2},
        {"prod", make_prod},
        {"subsets2", [] { return make_subsets(2); }},
        {"arrow", make_arrow},
        {"fix3", make_fix3},
        {"twoswap", make_twoswap},
    };
    return reg;
}

inline DynSys by_name(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error("UnknownBuiltin", "no builtin named '" + name + "'");
    return it->second();
}

}  // namespace skewcat::builtins
