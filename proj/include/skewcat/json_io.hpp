#pragma once

// JSON wire format: instance files (category + spaces + point maps),
// sparse element records, and analysis reports. nlohmann::json objects
// are backed by std::map, so serialized keys are always sorted and
// round-trips are canonical.

#include <skewcat/algebra.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace skewcat {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Instance files
//
// {
//   "objects": ["e", ...],
//   "morphisms": [{"name": "m", "dom": "e", "cod": "f"}, ...],
//   "identities": {"e": "id_e", ...},
//   "composition": [["m", "n", "mn"], ...],     // defined iff dom(m) == cod(n)
//   "spaces": {"e": ["x", ...], ...},
//   "maps": {"m": {"x": "y", ...}, ...}          // space(cod m) -> space(dom m)
// }

inline DynSys parse_instance(const json& j) {
    if (!j.is_object()) throw Error("InvalidInstance", "top-level JSON value must be an object");
    for (const char* key : {"objects", "morphisms", "identities", "composition", "spaces", "maps"})
        if (!j.contains(key))
            throw Error("InvalidInstance", std::string("missing required key '") + key + "'");
    try {
        CategorySpec cs;
        cs.objects = j.at("objects").get<std::vector<std::string>>();
        for (const auto& m : j.at("morphisms"))
            cs.morphisms.push_back({m.at("name").get<std::string>(), m.at("dom").get<std::string>(),
                                    m.at("cod").get<std::string>()});
        cs.identities = j.at("identities").get<std::map<std::string, std::string>>();
        for (const auto& t : j.at("composition")) {
            if (!t.is_array() || t.size() != 3)
                throw Error("InvalidInstance", "composition entries must be [m, n, mn] triples");
            cs.composition.emplace_back(t[0].get<std::string>(), t[1].get<std::string>(),
                                        t[2].get<std::string>());
        }
        DynSysSpec ds;
        ds.spaces = j.at("spaces").get<std::map<std::string, std::vector<std::string>>>();
        ds.maps = j.at("maps").get<std::map<std::string, std::map<std::string, std::string>>>();
        return validate_dynsys(validate_category(cs), ds);
    } catch (const json::exception& e) {
        throw Error("InvalidInstance", e.what());
    }
}

inline json instance_to_json(const DynSys& d) {
    const Category& g = d.cat;
    json j;
    j["objects"] = g.objects;
    j["morphisms"] = json::array();
    for (int m = 0; m < g.n_mor(); ++m)
        j["morphisms"].push_back(
            {{"name", g.morphisms[m]}, {"dom", g.objects[g.dom[m]]}, {"cod", g.objects[g.cod[m]]}});
    for (int e = 0; e < g.n_obj(); ++e)
        j["identities"][g.objects[e]] = g.morphisms[g.identity[e]];
    j["composition"] = json::array();
    for (int m = 0; m < g.n_mor(); ++m)
        for (int n = 0; n < g.n_mor(); ++n)
            if (g.composable(m, n))
                j["composition"].push_back(
                    {g.morphisms[m], g.morphisms[n], g.morphisms[g.compose(m, n)]});
    for (int e = 0; e < g.n_obj(); ++e) j["spaces"][g.objects[e]] = d.space[e];
    for (int m = 0; m < g.n_mor(); ++m) {
        json mp = json::object();
        for (int x = 0; x < d.space_size(g.cod[m]); ++x)
            mp[d.space[g.cod[m]][x]] = d.space[g.dom[m]][d.pointmap[m][x]];
        j["maps"][g.morphisms[m]] = mp;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Sparse elements: [{"morphism": "m", "point": "x", "coeff": "p/q"}, ...]

inline json element_to_json(const Algebra& a, const Element& v) {
    json out = json::array();
    for (int i = 0; i < a.dim; ++i) {
        if (v[i] == 0) continue;
        const auto& k = a.basis[i];
        out.push_back({{"morphism", a.sys.cat.morphisms[k.morphism]},
                       {"point", a.sys.space[a.sys.cat.cod[k.morphism]][k.point]},
                       {"coeff", format_rational(v[i])}});
    }
    return out;
}

inline Element parse_element(const Algebra& a, const json& j) {
    if (!j.is_array()) throw Error("InvalidElement", "element must be an array of terms");
    Element v = zero_element(a);
    try {
        for (const auto& t : j) {
            const int m = a.sys.cat.morphism_index(t.at("morphism").get<std::string>());
            const int x = a.sys.point_index(a.sys.cat.cod[m], t.at("point").get<std::string>());
            Rational c(1);
            if (t.contains("coeff")) c = parse_rational(t.at("coeff").get<std::string>());
            v[a.index_of(m, x)] += c;
        }
    } catch (const json::exception& e) {
        throw Error("InvalidElement", e.what());
    }
    return v;
}

// ---------------------------------------------------------------------------
// Analysis report

struct Report {
    int dim = 0;
    int radical_dim = 0;
    int center_dim = 0;
    bool simple = false;
    bool inverse_connected = false;
    bool minimal = false;
    bool faithful = false;
    bool top_free = false;
    bool maximal_commutative = false;
    bool kernel_locally_trivial = false;
    StructurePredicates structure;
    std::vector<bool> ge_simple;          // per object
    std::vector<int> corner_center_dims;  // per object
    json witnesses = json::object();
};

/// Full analysis of one instance. Every negative verdict on the report
/// carries a witness that the library can re-check.
inline Report analyze(const DynSys& d, int max_dim = 0) {
    const Category& g = d.cat;
    Algebra a = build_algebra(d, max_dim);
    Report r;
    r.dim = a.dim;
    r.structure = structure_predicates(g);

    const SimplicityResult s = is_simple_over_C(a);
    r.simple = s.simple;
    r.radical_dim = s.radical_dim;
    r.center_dim = s.center_dim;
    if (!s.simple) {
        if (s.radical_dim > 0) {
            r.witnesses["radical_element"] = element_to_json(a, s.radical_space.rows[0]);
        } else if (s.central_witness) {
            r.witnesses["central_element"] = element_to_json(a, *s.central_witness);
            if (auto w = rational_ideal_witness(a, *s.central_witness))
                r.witnesses["proper_ideal_generator"] = element_to_json(a, *w);
        }
    }

    const InverseConnectedness ic = is_inverse_connected(g);
    r.inverse_connected = ic.holds;
    if (!ic.holds)
        r.witnesses["not_inverse_connected"] = {{"from", g.objects[ic.failure.first]},
                                                {"to", g.objects[ic.failure.second]}};

    const MinimalityResult mn = is_minimal(d);
    r.minimal = mn.minimal;
    if (!mn.minimal) {
        json pts = json::array();
        for (int x : mn.invariant_subset) pts.push_back(d.space[mn.object][x]);
        r.witnesses["invariant_subset"] = {{"object", g.objects[mn.object]}, {"points", pts}};
    }

    const FaithfulnessResult ff = is_faithful(d);
    r.faithful = ff.faithful;
    if (!ff.faithful)
        r.witnesses["identity_acting_morphism"] = {{"object", g.objects[ff.object]},
                                                   {"morphism", g.morphisms[ff.morphism]}};

    r.top_free = is_topologically_free(d);
    if (!r.top_free) {
        for (int e = 0; e < g.n_obj() && !r.witnesses.contains("periodic_point"); ++e) {
            const auto ap = aperiodic_points(d, e);
            std::vector<bool> is_ap(d.space_size(e), false);
            for (int x : ap) is_ap[x] = true;
            for (int x = 0; x < d.space_size(e); ++x)
                if (!is_ap[x]) {
                    r.witnesses["periodic_point"] = {{"object", g.objects[e]},
                                                     {"point", d.space[e][x]}};
                    break;
                }
        }
    }

    r.maximal_commutative = is_A_maximal_commutative(a);
    if (!r.maximal_commutative) {
        const Subspace diag = diagonal_subspace(a);
        const Subspace comm = commutant(a, diag);
        for (const auto& row : comm.rows)
            if (!subspace_contains(diag, row)) {
                r.witnesses["commuting_element_outside_diagonal"] = element_to_json(a, row);
                break;
            }
    }

    const Congruence ker = sigma_kernel(d);
    r.kernel_locally_trivial = is_locally_trivial(g, ker);
    if (!r.kernel_locally_trivial) {
        for (int m = 0; m < g.n_mor(); ++m)
            for (int n = 0; n < m; ++n)
                if (ker.cls[m] == ker.cls[n] && g.dom[m] == g.cod[m] && g.dom[n] == g.cod[n] &&
                    g.dom[m] == g.dom[n] && !r.witnesses.contains("kernel_related_loops"))
                    r.witnesses["kernel_related_loops"] = {g.morphisms[n], g.morphisms[m]};
    }

    for (int e = 0; e < g.n_obj(); ++e) {
        r.ge_simple.push_back(is_Ge_simple(d, e));
        r.corner_center_dims.push_back(center(corner_algebra(a, e).algebra).dim());
    }
    return r;
}

inline json report_to_json(const DynSys& d, const Report& r) {
    json j;
    j["dim"] = r.dim;
    j["radical_dim"] = r.radical_dim;
    j["center_dim"] = r.center_dim;
    j["simple"] = r.simple;
    j["inverse_connected"] = r.inverse_connected;
    j["minimal"] = r.minimal;
    j["faithful"] = r.faithful;
    j["top_free"] = r.top_free;
    j["maximal_commutative"] = r.maximal_commutative;
    j["kernel_locally_trivial"] = r.kernel_locally_trivial;
    j["connected"] = r.structure.connected;
    j["groupoid"] = r.structure.groupoid;
    j["locally_abelian"] = r.structure.locally_abelian;
    for (int e = 0; e < d.cat.n_obj(); ++e) {
        j["ge_simple"][d.cat.objects[e]] = static_cast<bool>(r.ge_simple[e]);
        j["corner_center_dim"][d.cat.objects[e]] = r.corner_center_dims[e];
    }
    j["witnesses"] = r.witnesses;
    return j;
}

/// Ideal report fragment: dimension, properness, and the per-object
/// component intersections of the two-sided ideal the element generates.
inline json ideal_report(const Algebra& a, const Element& gen) {
    const Subspace ideal = ideal_generated(a, {gen});
    json j;
    j["generator"] = element_to_json(a, gen);
    j["ideal_dim"] = ideal.dim();
    j["proper"] = ideal.dim() < a.dim;
    const auto inter = intersect_with_components(a, ideal);
    for (int e = 0; e < a.sys.cat.n_obj(); ++e) {
        j["component_intersection_dims"][a.sys.cat.objects[e]] = inter[e].dim();
        j["component_full"][a.sys.cat.objects[e]] =
            inter[e].dim() == static_cast<int>(a.component[e].size());
    }
    return j;
}

}  // namespace skewcat
