#pragma once

// Randomized verification harness: generates finite instances inside the
// theorems' hypothesis classes, evaluates every statement as an
// executable check with exact arithmetic, shrinks failing instances, and
// aggregates campaign summaries.

#include <skewcat/builtins.hpp>
#include <skewcat/json_io.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace skewcat {

struct Bounds {
    int max_dim = 64;     // algebra dimension cap
    int oracle_cap = 36;  // enveloping-rank oracle cap
    int max_components = 2;
    int max_objects_per_component = 3;
    int max_ambient = 4;    // partial-system ambient set size
    int max_pieces = 40;    // partial-system closure cap
    int ideal_samples = 10;
    int congruence_samples = 3;
};

struct Instance {
    DynSys sys;
    std::optional<PartialSystem> partial;  // present for partial-system instances
    bool is_groupoid = false;
    bool is_locally_abelian = false;
    std::string source;  // "builtin:NAME", "groupoid", "groupoid-nonabelian", "partial"
    std::uint64_t seed = 0;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    json witness = json::object();
    double seconds = 0;
};

/// Which conjunct, if any, to drop from the right-hand side of the
/// simplicity equivalence for locally abelian groupoids. Used for
/// mutation testing: any drop must make the campaign fail.
enum class Mutation { None, DropInverseConnected, DropMinimal, DropFaithful };

// ---------------------------------------------------------------------------
// Finite groups for isotropy

namespace detail {

struct FiniteGroup {
    int n = 1;
    std::vector<int> mul{0};  // n*n table
    bool abelian = true;

    int op(int a, int b) const { return mul[a * n + b]; }
    int inv(int a) const {
        for (int b = 0; b < n; ++b)
            if (op(a, b) == 0 && op(b, a) == 0) return b;
        return -1;
    }
};

/// Direct product of cyclic groups, elements in mixed radix, identity 0.
inline FiniteGroup abelian_group(const std::vector<int>& orders) {
    FiniteGroup g;
    g.n = 1;
    for (int o : orders) g.n *= o;
    g.mul.assign(static_cast<size_t>(g.n) * g.n, 0);
    auto digits = [&](int x) {
        std::vector<int> d;
        for (int o : orders) {
            d.push_back(x % o);
            x /= o;
        }
        return d;
    };
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            auto da = digits(a), db = digits(b);
            int v = 0, base = 1;
            for (size_t i = 0; i < orders.size(); ++i) {
                v += ((da[i] + db[i]) % orders[i]) * base;
                base *= orders[i];
            }
            g.mul[a * g.n + b] = v;
        }
    return g;
}

/// The symmetric group on 3 letters, elements as the 6 permutations of
/// {0,1,2}; op(a, b) = a after b. Used to probe the one-directional
/// implication on groupoids with non-abelian isotropy.
inline const FiniteGroup& s3() {
    static const FiniteGroup g = [] {
        const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        FiniteGroup out;
        out.n = 6;
        out.abelian = false;
        out.mul.assign(36, -1);
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                int comp[3];
                for (int i = 0; i < 3; ++i) comp[i] = perm[a][perm[b][i]];
                for (int c = 0; c < 6; ++c)
                    if (comp[0] == perm[c][0] && comp[1] == perm[c][1] && comp[2] == perm[c][2])
                        out.mul[a * 6 + b] = c;
            }
        return out;
    }();
    return g;
}

inline const std::vector<std::vector<int>>& s3_perms() {
    static const std::vector<std::vector<int>> p = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    return p;
}

/// All subgroups of a group whose subgroups are at most 2-generated
/// (true for products of two cyclic groups), as sorted element lists.
inline std::vector<std::vector<int>> subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found;
    auto closure = [&](std::vector<int> gens) {
        std::set<int> s{0};
        for (;;) {
            std::set<int> next = s;
            for (int a : s)
                for (int x : gens) next.insert(g.op(a, x));
            for (int a : s)
                for (int b : s) next.insert(g.op(a, b));
            if (next == s) break;
            s = std::move(next);
        }
        return std::vector<int>(s.begin(), s.end());
    };
    for (int x = 0; x < g.n; ++x)
        for (int y = x; y < g.n; ++y) found.insert(closure({x, y}));
    return {found.begin(), found.end()};
}

/// Left multiplication action of g on the coset space {h K}; a group
/// homomorphism into the symmetric group of the cosets.
inline std::vector<std::vector<int>> coset_action(const FiniteGroup& g, const std::vector<int>& k) {
    std::vector<int> coset_of(g.n, -1);
    int ncos = 0;
    for (int h = 0; h < g.n; ++h) {
        if (coset_of[h] >= 0) continue;
        for (int x : k) coset_of[g.op(h, x)] = ncos;
        ++ncos;
    }
    std::vector<int> rep(ncos, -1);
    for (int h = g.n - 1; h >= 0; --h) rep[coset_of[h]] = h;
    std::vector<std::vector<int>> act(g.n, std::vector<int>(ncos));
    for (int a = 0; a < g.n; ++a)
        for (int c = 0; c < ncos; ++c) act[a][c] = coset_of[g.op(a, rep[c])];
    return act;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generators

/// One connected groupoid component: pair groupoid on k objects times an
/// isotropy group acting on a shared point set through the permutations
/// in `act` (a homomorphism image), twisted by per-object relabelings.
namespace detail {

struct Component {
    int k = 1;
    FiniteGroup group;
    std::vector<std::vector<int>> act;      // per group element: permutation of points
    std::vector<std::vector<int>> twist;    // per object: relabeling permutation t_i
    int points() const { return static_cast<int>(act[0].size()); }
    int dim() const { return k * k * group.n * points(); }
};

inline void append_component(CategorySpec& cs, DynSysSpec& ds, const Component& c, int tag) {
    const std::string pre = "c" + std::to_string(tag);
    auto obj = [&](int i) { return pre + "o" + std::to_string(i); };
    auto mor = [&](int i, int j, int h) {
        return pre + "m" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(h);
    };
    const int np = c.points();
    auto pt = [&](int i, int x) { return pre + "o" + std::to_string(i) + "x" + std::to_string(x); };

    std::vector<std::vector<int>> tinv(c.k, std::vector<int>(np));  // inverse of twist
    for (int i = 0; i < c.k; ++i)
        for (int x = 0; x < np; ++x) tinv[i][c.twist[i][x]] = x;

    for (int i = 0; i < c.k; ++i) {
        cs.objects.push_back(obj(i));
        cs.identities[obj(i)] = mor(i, i, 0);
        std::vector<std::string> space;
        for (int x = 0; x < np; ++x) space.push_back(pt(i, x));
        ds.spaces[obj(i)] = space;
    }
    const int n = c.group.n;
    for (int i = 0; i < c.k; ++i)
        for (int j = 0; j < c.k; ++j)
            for (int h = 0; h < n; ++h) {
                cs.morphisms.push_back({mor(i, j, h), obj(j), obj(i)});
                // point map space(cod)=space(i) -> space(dom)=space(j):
                // x |-> t_j(act(h^{-1})(t_i^{-1}(x)))
                const auto& rho = c.act[c.group.inv(h)];
                std::map<std::string, std::string> mp;
                for (int x = 0; x < np; ++x) mp[pt(i, x)] = pt(j, c.twist[j][rho[tinv[i][x]]]);
                ds.maps[mor(i, j, h)] = mp;
            }
    for (int i = 0; i < c.k; ++i)
        for (int j = 0; j < c.k; ++j)
            for (int l = 0; l < c.k; ++l)
                for (int h = 0; h < n; ++h)
                    for (int h2 = 0; h2 < n; ++h2)
                        cs.composition.emplace_back(mor(i, j, h), mor(j, l, h2),
                                                    mor(i, l, c.group.op(h, h2)));
}

}  // namespace detail

/// Random groupoid system whose isotropy groups are abelian (products of
/// at most two cyclic groups of order <= 6), built by the structure
/// theorem: disjoint union of (pair groupoid x isotropy) components with
/// coset-space actions and random per-object relabelings. Functorial by
/// construction; revalidated anyway.
inline Instance gen_locally_abelian_groupoid_system(std::uint64_t seed, const Bounds& bounds) {
    if (bounds.max_dim < 1) throw Error("BoundsExceeded", "dimension bound below 1");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };

    CategorySpec cs;
    DynSysSpec ds;
    int budget = bounds.max_dim;
    const int ncomp = pick(1, bounds.max_components);
    int built = 0;
    for (int t = 0; t < ncomp; ++t) {
        detail::Component c;
        c.k = pick(1, bounds.max_objects_per_component);
        std::vector<int> orders;
        for (int f = pick(0, 2); f > 0; --f) orders.push_back(pick(2, 6));
        c.group = detail::abelian_group(orders);
        int max_pts = budget / (c.k * c.k * c.group.n);
        if (max_pts < 1) {
            c.k = 1;
            c.group = detail::abelian_group({});
            max_pts = budget;
            if (max_pts < 1) break;
        }
        // points: disjoint union of coset orbits of random subgroups
        const auto subs = detail::subgroups(c.group);
        c.act.assign(c.group.n, {});
        while (c.points() < max_pts) {
            const auto& k = subs[rng() % subs.size()];
            const auto orbit = detail::coset_action(c.group, k);
            const int sz = static_cast<int>(orbit[0].size());
            if (c.points() + sz > max_pts) break;
            const int off = c.points();
            for (int a = 0; a < c.group.n; ++a)
                for (int x : orbit[a]) c.act[a].push_back(off + x);
            if (pick(0, 2) == 0) break;  // occasionally stop early
        }
        if (c.points() == 0) {  // budget too tight for any orbit: one fixed point
            for (int a = 0; a < c.group.n; ++a) c.act[a] = {0};
        }
        c.twist.assign(c.k, {});
        for (int i = 0; i < c.k; ++i) {
            c.twist[i].resize(c.points());
            std::iota(c.twist[i].begin(), c.twist[i].end(), 0);
            std::shuffle(c.twist[i].begin(), c.twist[i].end(), rng);
        }
        detail::append_component(cs, ds, c, built++);
        budget -= c.dim();
        if (budget < 1) break;
    }
    if (built == 0) throw Error("BoundsExceeded", "bounds admit no component");

    Instance inst;
    inst.sys = validate_dynsys(validate_category(cs), ds);
    inst.source = "groupoid";
    inst.seed = seed;
    const auto sp = structure_predicates(inst.sys.cat);
    if (!sp.groupoid || !sp.locally_abelian)
        throw Error("GeneratorInvariant", "generated system is not a locally abelian groupoid");
    inst.is_groupoid = true;
    inst.is_locally_abelian = true;
    return inst;
}

/// Groupoid probe with non-abelian isotropy (S3 acting naturally or
/// trivially). Only the one-directional implication is asserted on these.
inline Instance gen_nonabelian_groupoid_system(std::uint64_t seed, const Bounds& bounds) {
    std::mt19937_64 rng(seed);
    detail::Component c;
    c.group = detail::s3();
    const bool natural = (rng() % 2 == 0);
    c.k = natural ? 1 : 1 + static_cast<int>(rng() % 2);
    const int np = natural ? 3 : 1;
    if (c.k * c.k * c.group.n * np > bounds.max_dim)
        throw Error("BoundsExceeded", "non-abelian probe exceeds dimension bound");
    c.act.assign(6, std::vector<int>(np, 0));
    if (natural)
        for (int a = 0; a < 6; ++a) c.act[a] = detail::s3_perms()[a];
    c.twist.assign(c.k, std::vector<int>(np));
    for (int i = 0; i < c.k; ++i) {
        std::iota(c.twist[i].begin(), c.twist[i].end(), 0);
        std::shuffle(c.twist[i].begin(), c.twist[i].end(), rng);
    }
    CategorySpec cs;
    DynSysSpec ds;
    detail::append_component(cs, ds, c, 0);
    Instance inst;
    inst.sys = validate_dynsys(validate_category(cs), ds);
    inst.source = "groupoid-nonabelian";
    inst.seed = seed;
    inst.is_groupoid = true;
    inst.is_locally_abelian = structure_predicates(inst.sys.cat).locally_abelian;
    return inst;
}

/// Random partially defined system: random functions between random
/// nonempty subsets of a small ambient set, closed under composition and
/// completed with the needed identity maps.
inline Instance gen_partial_system(std::uint64_t seed, const Bounds& bounds) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };

    PartialSystem ps;
    const int amb = pick(1, bounds.max_ambient);
    for (int i = 0; i < amb; ++i) ps.ambient.push_back(std::to_string(i));
    auto random_subset = [&] {
        const unsigned mask = 1 + static_cast<unsigned>(rng() % ((1u << amb) - 1));
        std::vector<int> s;
        for (int b = 0; b < amb; ++b)
            if (mask & (1u << b)) s.push_back(b);
        return s;
    };

    using Key = std::tuple<std::vector<int>, std::vector<int>, std::map<int, int>>;
    std::set<Key> seen;
    auto add = [&](PartialSystem::Piece p) {
        Key k{p.dom, p.cod, p.map};
        if (!seen.insert(k).second) return false;
        std::string tag;
        for (int x : p.dom) tag += std::to_string(p.map.at(x));
        p.name = "f" + detail::subset_label(ps, p.dom) + detail::subset_label(ps, p.cod) + "[" +
                 tag + "]";
        ps.pieces.push_back(std::move(p));
        return true;
    };
    auto add_identity = [&](const std::vector<int>& s) {
        PartialSystem::Piece p;
        p.dom = p.cod = s;
        for (int x : s) p.map[x] = x;
        add(std::move(p));
    };

    const int initial = pick(1, 3);
    for (int t = 0; t < initial; ++t) {
        PartialSystem::Piece p;
        p.dom = random_subset();
        p.cod = random_subset();
        for (int x : p.dom) p.map[x] = p.cod[rng() % p.cod.size()];
        add_identity(p.dom);
        add_identity(p.cod);
        add(std::move(p));
    }

    // close under composition: f: A -> B, g: B -> C gives g o f: A -> C
    for (bool grew = true; grew;) {
        grew = false;
        const size_t count = ps.pieces.size();
        for (size_t i = 0; i < count; ++i)
            for (size_t j = 0; j < count; ++j) {
                const auto& f = ps.pieces[i];
                const auto& g = ps.pieces[j];
                if (f.cod != g.dom) continue;
                PartialSystem::Piece p;
                p.dom = f.dom;
                p.cod = g.cod;
                for (int x : f.dom) p.map[x] = g.map.at(f.map.at(x));
                if (add(std::move(p))) grew = true;
                if (static_cast<int>(ps.pieces.size()) > bounds.max_pieces)
                    throw Error("ClosureExplosion", "composition closure exceeded the piece cap");
            }
    }

    int dim = 0;
    for (const auto& p : ps.pieces) dim += static_cast<int>(p.dom.size());
    if (dim > bounds.max_dim)
        throw Error("ClosureExplosion", "closed system exceeds the dimension bound");

    Instance inst;
    inst.sys = from_partial_system(ps);
    inst.partial = std::move(ps);
    inst.source = "partial";
    inst.seed = seed;
    const auto sp = structure_predicates(inst.sys.cat);
    inst.is_groupoid = sp.groupoid;
    inst.is_locally_abelian = sp.locally_abelian;
    return inst;
}

// ---------------------------------------------------------------------------
// Checks

namespace detail {

inline json instance_witness(const Instance& inst, const Report& r) {
    json w;
    w["source"] = inst.source;
    w["seed"] = inst.seed;
    w["instance"] = instance_to_json(inst.sys);
    w["report"] = report_to_json(inst.sys, r);
    return w;
}

/// Translation closure of a set of merges inside an existing congruence:
/// the smallest congruence containing them. Merging pairs from ker(sigma)
/// keeps the result inside ker(sigma).
inline Congruence congruence_closure(const Category& g, std::vector<std::pair<int, int>> merges) {
    std::vector<int> parent(g.n_mor());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    };
    for (auto [a, b] : merges) unite(a, b);
    for (bool grew = true; grew;) {
        grew = false;
        for (int m = 0; m < g.n_mor(); ++m)
            for (int n = m + 1; n < g.n_mor(); ++n) {
                if (find(m) != find(n)) continue;
                for (int p = 0; p < g.n_mor(); ++p) {
                    if (g.composable(p, m) && unite(g.compose(p, m), g.compose(p, n))) grew = true;
                    if (g.composable(m, p) && unite(g.compose(m, p), g.compose(n, p))) grew = true;
                }
            }
    }
    std::vector<int> raw(g.n_mor());
    for (int m = 0; m < g.n_mor(); ++m) raw[m] = find(m);
    return canonical_congruence(g, raw);
}

}  // namespace detail

/// Ring axioms and grading: associativity (exhaustive up to dim 20,
/// otherwise 10^4 seeded random triples), unit laws, strong grading.
inline std::vector<CheckResult> check_axioms(const Instance& inst, const Algebra& a) {
    std::vector<CheckResult> out;
    CheckResult assoc{"axiom-associativity"};
    if (a.dim <= 20) {
        assoc.pass = product_table_associative(a);
    } else {
        std::mt19937_64 rng(inst.seed ^ 0x5ca1ab1eULL);
        for (int t = 0; t < 10000 && assoc.pass; ++t) {
            const int i = static_cast<int>(rng() % a.dim), j = static_cast<int>(rng() % a.dim),
                      k = static_cast<int>(rng() % a.dim);
            const int ij = a.product(i, j), jk = a.product(j, k);
            const int left = ij < 0 ? -1 : a.product(ij, k);
            const int right = jk < 0 ? -1 : a.product(i, jk);
            if (left != right) {
                assoc.pass = false;
                assoc.witness = {{"i", a.basis_name(i)}, {"j", a.basis_name(j)},
                                 {"k", a.basis_name(k)}};
            }
        }
    }
    out.push_back(assoc);
    out.push_back({"axiom-unit", unit_is_two_sided_identity(a)});
    out.push_back({"axiom-strong-grading", is_strongly_graded(a)});
    return out;
}

/// The main equivalence: simplicity implies inverse connectedness,
/// minimality and faithfulness on every instance; on locally abelian
/// groupoids the converse holds too. `mutation` weakens the right-hand
/// side of the equivalence for sensitivity testing.
inline std::vector<CheckResult> check_simplicity_equivalence(const Instance& inst, const Report& r,
                                               Mutation mutation = Mutation::None) {
    std::vector<CheckResult> out;
    const bool triple_a = r.inverse_connected && r.minimal && r.faithful;
    CheckResult a{"simplicity-implies-dynamics"};
    if (r.simple && !triple_a) {
        a.pass = false;
        a.witness = detail::instance_witness(inst, r);
    }
    out.push_back(a);

    if (inst.is_groupoid && inst.is_locally_abelian) {
        bool rhs = true;
        if (mutation != Mutation::DropInverseConnected) rhs = rhs && r.inverse_connected;
        if (mutation != Mutation::DropMinimal) rhs = rhs && r.minimal;
        if (mutation != Mutation::DropFaithful) rhs = rhs && r.faithful;
        CheckResult b{"simplicity-equivalence-locally-abelian"};
        if (r.simple != rhs) {
            b.pass = false;
            b.witness = detail::instance_witness(inst, r);
        }
        out.push_back(b);
    }
    return out;
}

/// All supporting propositions on one instance. `rng_seed` drives the
/// ideal and congruence sampling.
inline std::vector<CheckResult> check_propositions(const Instance& inst, const Algebra& a,
                                                   const Report& r, const Bounds& bounds,
                                                   std::uint64_t rng_seed) {
    const DynSys& d = a.sys;
    const Category& g = d.cat;
    std::vector<CheckResult> out;
    auto fail_with_report = [&](CheckResult& c) {
        c.pass = false;
        c.witness = detail::instance_witness(inst, r);
    };

    const bool all_ge_simple =
        std::all_of(r.ge_simple.begin(), r.ge_simple.end(), [](bool b) { return b; });
    const bool all_corner_fields = std::all_of(r.corner_center_dims.begin(),
                                               r.corner_center_dims.end(),
                                               [](int n) { return n == 1; });

    CheckResult simp_a{"simplicity-necessary-conditions"};
    if (r.simple && !(r.inverse_connected && all_ge_simple && all_corner_fields &&
                      r.kernel_locally_trivial))
        fail_with_report(simp_a);
    out.push_back(simp_a);

    if (inst.is_groupoid) {
        CheckResult comm_b{"simplicity-equivalence-groupoid"};
        const bool rhs = r.inverse_connected && all_ge_simple && all_corner_fields &&
                         r.kernel_locally_trivial && r.maximal_commutative;
        if (r.simple != rhs) fail_with_report(comm_b);
        out.push_back(comm_b);

        CheckResult pajo{"freeness-iff-maximal-commutative"};
        if (r.top_free != r.maximal_commutative) fail_with_report(pajo);
        out.push_back(pajo);

        CheckResult inv{"groupoid-structure-invariants"};
        // invertible point maps are bijections; connectedness matches
        // inverse connectedness on groupoids
        for (int m = 0; m < g.n_mor() && inv.pass; ++m) {
            std::vector<bool> hit(d.space_size(g.dom[m]), false);
            for (int x = 0; x < d.space_size(g.cod[m]); ++x) hit[d.pointmap[m][x]] = true;
            const bool bij = d.space_size(g.dom[m]) == d.space_size(g.cod[m]) &&
                             std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
            if (!bij) {
                inv.pass = false;
                inv.witness = {{"morphism", g.morphisms[m]}};
            }
        }
        if (inv.pass && r.structure.connected != r.inverse_connected) fail_with_report(inv);
        out.push_back(inv);
    }

    CheckResult pmin{"minimal-iff-all-ge-simple"};
    if (r.minimal != all_ge_simple) fail_with_report(pmin);
    out.push_back(pmin);

    CheckResult pfaith{"faithful-iff-kernel-locally-trivial"};
    if (r.faithful != r.kernel_locally_trivial) fail_with_report(pfaith);
    out.push_back(pfaith);

    // intersection clauses on sampled generated ideals
    {
        CheckResult pint{"ideal-component-intersections"};
        std::mt19937_64 rng(rng_seed ^ 0x1dea1ULL);
        std::vector<Element> gens;
        for (int e = 0; e < std::min(2, g.n_obj()); ++e) gens.push_back(u_element(a, g.identity[e]));
        gens.push_back(a.unit);
        while (static_cast<int>(gens.size()) < bounds.ideal_samples) {
            Element v = zero_element(a);
            const int terms = 1 + static_cast<int>(rng() % 3);
            for (int t = 0; t < terms; ++t) {
                const int i = static_cast<int>(rng() % a.dim);
                const int num = 1 + static_cast<int>(rng() % 3);
                v[i] += (rng() % 2 ? Rational(num) : Rational(-num));
            }
            gens.push_back(std::move(v));
        }
        for (size_t gi = 0; gi < gens.size() && pint.pass; ++gi) {
            const Subspace ideal = ideal_generated(a, {gens[gi]});
            const bool whole = ideal.dim() == a.dim;
            bool all_full = true, some_full = true;
            if (!whole) {
                // full intersections are automatic for the whole algebra;
                // the propositions' content is the proper-ideal case.
                // I cap A_e = A_e iff every basis vector of A_e lies in I,
                // which avoids computing the intersection itself
                some_full = false;
                for (int e = 0; e < g.n_obj(); ++e) {
                    bool full = true;
                    for (int i : a.component[e])
                        if (!subspace_contains(ideal, basis_element(a, i))) {
                            full = false;
                            break;
                        }
                    all_full = all_full && full;
                    some_full = some_full || full;
                }
            }
            bool ok = (whole == all_full);
            if (r.inverse_connected) ok = ok && (whole == some_full);
            if (!ok) {
                pint.pass = false;
                pint.witness = detail::instance_witness(inst, r);
                pint.witness["generator"] = element_to_json(a, gens[gi]);
                pint.witness["ideal_dim"] = ideal.dim();
            }
        }
        out.push_back(pint);
    }

    // radical is a nilpotent two-sided ideal
    {
        CheckResult prad{"radical-nilpotent-ideal"};
        const Subspace rad = radical(a);
        RowSpace span(a.dim);
        for (const auto& row : rad.rows) span.insert(row);
        bool closed = true;
        for (const auto& row : rad.rows)
            for (int i = 0; i < a.dim && closed; ++i)
                if (!span.contains(left_mul_basis(a, i, row)) ||
                    !span.contains(right_mul_basis(a, row, i)))
                    closed = false;
        if (!closed) fail_with_report(prad);
        if (prad.pass) {
            std::vector<Vec> power(rad.rows);
            for (int k = 1; !power.empty() && k <= a.dim; ++k) {
                RowSpace next(a.dim);
                for (const auto& x : power)
                    for (const auto& y : rad.rows) next.insert(multiply(a, x, y));
                power = next.to_subspace().rows;
            }
            if (!power.empty()) fail_with_report(prad);
        }
        out.push_back(prad);
    }

    // class-sum-zero generators stay disjoint from the diagonal, for
    // ker(sigma) and random sub-congruences of it
    {
        CheckResult pest{"kernel-congruence-ideals-avoid-diagonal"};
        const Congruence ker = sigma_kernel(d);
        std::vector<Congruence> rs{ker};
        std::mt19937_64 rng(rng_seed ^ 0xc049ULL);
        std::vector<std::pair<int, int>> related;
        for (int m = 0; m < g.n_mor(); ++m)
            for (int n = m + 1; n < g.n_mor(); ++n)
                if (ker.cls[m] == ker.cls[n]) related.emplace_back(m, n);
        for (int t = 0; t < bounds.congruence_samples && !related.empty(); ++t) {
            std::vector<std::pair<int, int>> merges;
            const int picks = 1 + static_cast<int>(rng() % 2);
            for (int p = 0; p < picks; ++p) merges.push_back(related[rng() % related.size()]);
            rs.push_back(detail::congruence_closure(g, merges));
        }
        for (const auto& cong : rs)
            if (!class_sum_ideals_avoid_diagonal(a, cong)) {
                fail_with_report(pest);
                break;
            }
        out.push_back(pest);
    }

    // independent simplicity oracle within the cap
    if (a.dim <= bounds.oracle_cap) {
        CheckResult por{"oracle-agreement"};
        int rank = 0;
        if (enveloping_rank_oracle(a, bounds.oracle_cap, &rank) != r.simple) {
            fail_with_report(por);
            por.witness["oracle_rank"] = rank;
        }
        out.push_back(por);
    }

    // partial-system predicates agree with the categorical ones
    if (inst.partial) {
        CheckResult pp{"partial-predicate-agreement"};
        if (partial_minimal(*inst.partial) != r.minimal ||
            partial_faithful(*inst.partial) != r.faithful ||
            partial_topologically_free(*inst.partial) != r.top_free)
            fail_with_report(pp);
        out.push_back(pp);
    }
    return out;
}

inline std::vector<CheckResult> check_instance(const Instance& inst, const Bounds& bounds,
                                               Mutation mutation = Mutation::None) {
    const auto t0 = std::chrono::steady_clock::now();
    Algebra a = build_algebra(inst.sys, bounds.max_dim);
    Report r = analyze(inst.sys, bounds.max_dim);
    std::vector<CheckResult> out = check_axioms(inst, a);
    for (auto& c : check_simplicity_equivalence(inst, r, mutation)) out.push_back(std::move(c));
    for (auto& c : check_propositions(inst, a, r, bounds, inst.seed)) out.push_back(std::move(c));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto& c : out) c.seconds = secs / static_cast<double>(out.size());
    return out;
}

// ---------------------------------------------------------------------------
// Shrinking

namespace detail {

inline std::optional<DynSys> drop_object(const DynSys& d, int e) {
    const Category& g = d.cat;
    if (g.n_obj() <= 1) return std::nullopt;
    CategorySpec cs;
    DynSysSpec ds;
    for (int o = 0; o < g.n_obj(); ++o)
        if (o != e) {
            cs.objects.push_back(g.objects[o]);
            cs.identities[g.objects[o]] = g.morphisms[g.identity[o]];
            ds.spaces[g.objects[o]] = d.space[o];
        }
    for (int m = 0; m < g.n_mor(); ++m) {
        if (g.dom[m] == e || g.cod[m] == e) continue;
        cs.morphisms.push_back({g.morphisms[m], g.objects[g.dom[m]], g.objects[g.cod[m]]});
        std::map<std::string, std::string> mp;
        for (int x = 0; x < d.space_size(g.cod[m]); ++x)
            mp[d.space[g.cod[m]][x]] = d.space[g.dom[m]][d.pointmap[m][x]];
        ds.maps[g.morphisms[m]] = mp;
        for (int n = 0; n < g.n_mor(); ++n)
            if (g.composable(m, n) && g.dom[n] != e && g.cod[n] != e)
                cs.composition.emplace_back(g.morphisms[m], g.morphisms[n],
                                            g.morphisms[g.compose(m, n)]);
    }
    try {
        return validate_dynsys(validate_category(cs), ds);
    } catch (const Error&) {
        return std::nullopt;
    }
}

inline std::optional<DynSys> drop_point(const DynSys& d, int e, int x) {
    const Category& g = d.cat;
    if (d.space_size(e) <= 1) return std::nullopt;
    // only removable if nothing maps onto x from a surviving input
    for (int m = 0; m < g.n_mor(); ++m) {
        if (g.dom[m] != e) continue;
        for (int y = 0; y < d.space_size(g.cod[m]); ++y) {
            if (g.cod[m] == e && y == x) continue;  // that input is removed too
            if (d.pointmap[m][y] == x) return std::nullopt;
        }
    }
    CategorySpec cs;
    DynSysSpec ds;
    for (int o = 0; o < g.n_obj(); ++o) {
        cs.objects.push_back(g.objects[o]);
        cs.identities[g.objects[o]] = g.morphisms[g.identity[o]];
        std::vector<std::string> space;
        for (int y = 0; y < d.space_size(o); ++y)
            if (!(o == e && y == x)) space.push_back(d.space[o][y]);
        ds.spaces[g.objects[o]] = space;
    }
    for (int m = 0; m < g.n_mor(); ++m) {
        cs.morphisms.push_back({g.morphisms[m], g.objects[g.dom[m]], g.objects[g.cod[m]]});
        std::map<std::string, std::string> mp;
        for (int y = 0; y < d.space_size(g.cod[m]); ++y) {
            if (g.cod[m] == e && y == x) continue;
            mp[d.space[g.cod[m]][y]] = d.space[g.dom[m]][d.pointmap[m][y]];
        }
        ds.maps[g.morphisms[m]] = mp;
        for (int n = 0; n < g.n_mor(); ++n)
            if (g.composable(m, n))
                cs.composition.emplace_back(g.morphisms[m], g.morphisms[n],
                                            g.morphisms[g.compose(m, n)]);
    }
    try {
        return validate_dynsys(validate_category(cs), ds);
    } catch (const Error&) {
        return std::nullopt;
    }
}

inline Instance with_sys(const Instance& inst, DynSys sys) {
    Instance out;
    out.sys = std::move(sys);
    out.source = inst.source + ":shrunk";
    out.seed = inst.seed;
    const auto sp = structure_predicates(out.sys.cat);
    out.is_groupoid = sp.groupoid;
    out.is_locally_abelian = sp.locally_abelian;
    return out;
}

}  // namespace detail

/// Greedy object/point removal while `still_fails` holds; every candidate
/// is revalidated before being tested.
inline Instance shrink(Instance inst, const std::function<bool(const Instance&)>& still_fails) {
    if (!still_fails(inst)) return inst;
    for (bool progress = true; progress;) {
        progress = false;
        for (int e = 0; e < inst.sys.cat.n_obj(); ++e) {
            auto cand = detail::drop_object(inst.sys, e);
            if (!cand) continue;
            Instance smaller = detail::with_sys(inst, std::move(*cand));
            if (still_fails(smaller)) {
                inst = std::move(smaller);
                progress = true;
                break;
            }
        }
        if (progress) continue;
        for (int e = 0; e < inst.sys.cat.n_obj() && !progress; ++e)
            for (int x = 0; x < inst.sys.space_size(e) && !progress; ++x) {
                auto cand = detail::drop_point(inst.sys, e, x);
                if (!cand) continue;
                Instance smaller = detail::with_sys(inst, std::move(*cand));
                if (still_fails(smaller)) {
                    inst = std::move(smaller);
                    progress = true;
                }
            }
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Campaign driver

struct CampaignConfig {
    std::uint64_t seed = 1;
    int groupoid_trials = 300;
    int partial_trials = 300;
    int nonabelian_every = 10;  // extra necessity-only nonabelian probe per N groupoid trials
    bool include_builtins = true;
    Bounds bounds;
    Mutation mutation = Mutation::None;
};

struct CampaignSummary {
    int instances = 0;
    int checks_run = 0;
    int failures = 0;
    int oracle_checked = 0;       // instances within the oracle cap
    int locally_abelian_groupoids = 0;
    int partial_instances = 0;
    std::vector<json> failure_reports;
    std::vector<std::string> seed_lines;  // "source seed" per generated instance
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t i) {
    std::uint64_t x = master ^ (stream * 0x9e3779b97f4a7c15ULL) ^ (i + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

inline void run_one(const Instance& inst, const CampaignConfig& cfg, CampaignSummary& sum) {
    ++sum.instances;
    if (inst.source == "groupoid") ++sum.locally_abelian_groupoids;
    if (inst.source == "partial") ++sum.partial_instances;
    std::vector<CheckResult> results = check_instance(inst, cfg.bounds, cfg.mutation);
    bool counted_oracle = false;
    for (auto& c : results) {
        ++sum.checks_run;
        if (c.name == "oracle-agreement" && !counted_oracle) {
            ++sum.oracle_checked;
            counted_oracle = true;
        }
        if (c.pass) continue;
        ++sum.failures;
        const std::string failing = c.name;
        Instance small = shrink(inst, [&](const Instance& cand) {
            try {
                for (const auto& rc : check_instance(cand, cfg.bounds, cfg.mutation))
                    if (rc.name == failing && !rc.pass) return true;
            } catch (const Error&) {
            }
            return false;
        });
        json rep;
        rep["check"] = failing;
        rep["source"] = inst.source;
        rep["seed"] = inst.seed;
        rep["witness"] = c.witness;
        rep["shrunk_instance"] = instance_to_json(small.sys);
        sum.failure_reports.push_back(std::move(rep));
    }
}

}  // namespace detail

inline CampaignSummary run_campaign(const CampaignConfig& cfg) {
    CampaignSummary sum;
    if (cfg.include_builtins) {
        for (const char* name : {"swap", "pair2", "pair3", "triv2", "prod", "abs", "subsets2",
                                 "arrow", "fix3", "twoswap"}) {
            Instance inst;
            inst.sys = builtins::by_name(name);
            inst.source = std::string("builtin:") + name;
            const auto sp = structure_predicates(inst.sys.cat);
            inst.is_groupoid = sp.groupoid;
            inst.is_locally_abelian = sp.locally_abelian;
            if (std::string(name) == "abs") inst.partial = builtins::make_abs_partial();
            if (std::string(name) == "subsets2") inst.partial = builtins::make_subsets_partial(2);
            detail::run_one(inst, cfg, sum);
        }
    }
    for (int i = 0; i < cfg.groupoid_trials; ++i) {
        const std::uint64_t s = detail::mix_seed(cfg.seed, 1, static_cast<std::uint64_t>(i));
        Instance inst = gen_locally_abelian_groupoid_system(s, cfg.bounds);
        sum.seed_lines.push_back("groupoid " + std::to_string(s));
        detail::run_one(inst, cfg, sum);
        if (cfg.nonabelian_every > 0 && i % cfg.nonabelian_every == 0) {
            const std::uint64_t s2 = detail::mix_seed(cfg.seed, 2, static_cast<std::uint64_t>(i));
            Instance probe = gen_nonabelian_groupoid_system(s2, cfg.bounds);
            sum.seed_lines.push_back("groupoid-nonabelian " + std::to_string(s2));
            detail::run_one(probe, cfg, sum);
        }
    }
    for (int i = 0, made = 0; made < cfg.partial_trials && i < cfg.partial_trials * 20; ++i) {
        const std::uint64_t s = detail::mix_seed(cfg.seed, 3, static_cast<std::uint64_t>(i));
        try {
            Instance inst = gen_partial_system(s, cfg.bounds);
            sum.seed_lines.push_back("partial " + std::to_string(s));
            detail::run_one(inst, cfg, sum);
            ++made;
        } catch (const Error& e) {
            if (std::string(e.code()) != "ClosureExplosion") throw;
        }
    }
    return sum;
}

}  // namespace skewcat
