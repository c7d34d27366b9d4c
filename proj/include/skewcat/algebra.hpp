#pragma once

// The skew category algebra of a finite category dynamical system, as a
// structure-constant algebra over exact rationals. The basis is indexed
// by pairs (morphism n, point x of space(cod n)), representing the
// element delta_x u_n; the product of two basis elements is again a
// basis element or zero, so the whole multiplication table is a single
// sparse index map.
//
// Ring-theoretic analyses: graded components, two-sided ideal closure,
// center, Jacobson radical via the trace bilinear form (characteristic
// zero), commutants, corner algebras, and simplicity of the
// complexified algebra (radical zero and one-dimensional center, both
// invariant under scalar extension in characteristic zero).

#include <skewcat/dynsys.hpp>
#include <skewcat/linalg.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace skewcat {

using Element = Vec;  // dense coefficient vector over the algebra basis

struct Algebra {
    DynSys sys;

    struct BasisKey {
        int morphism;  // index in sys.cat
        int point;     // index in space(cod(morphism))
    };
    std::vector<BasisKey> basis;
    int dim = 0;
    std::vector<int32_t> prod;  // prod[i * dim + j] = basis index of e_i e_j, or -1
    Element unit;
    std::vector<std::vector<int>> grading;          // per morphism: basis indices of T_n
    std::vector<std::vector<int>> component;        // per object: basis indices of A_e
    std::vector<int> basis_index;                   // flat lookup: offset(morphism) + point

    int product(int i, int j) const { return prod[static_cast<size_t>(i) * dim + j]; }

    int index_of(int morphism, int point) const { return grading[morphism][point]; }

    std::string basis_name(int i) const {
        const auto& k = basis[i];
        return "d_" + sys.space[sys.cat.cod[k.morphism]][k.point] + " u_" +
               sys.cat.morphisms[k.morphism];
    }
};

inline Algebra build_algebra(const DynSys& d, int max_dim = 0) {
    Algebra a;
    a.sys = d;
    const Category& g = d.cat;

    a.grading.resize(g.n_mor());
    for (int n = 0; n < g.n_mor(); ++n) {
        const int e = g.cod[n];
        for (int x = 0; x < d.space_size(e); ++x) {
            a.grading[n].push_back(a.dim);
            a.basis.push_back({n, x});
            ++a.dim;
        }
    }
    if (max_dim > 0 && a.dim > max_dim)
        throw Error("DimensionCapExceeded", "algebra dimension " + std::to_string(a.dim) +
                                                " exceeds cap " + std::to_string(max_dim));

    a.component.resize(g.n_obj());
    for (int e = 0; e < g.n_obj(); ++e) a.component[e] = a.grading[g.identity[e]];

    // (delta_x u_m)(delta_y u_n) = delta_x u_{mn} iff dom(m) = cod(n) and
    // pointmap(m)(x) = y
    a.prod.assign(static_cast<size_t>(a.dim) * a.dim, -1);
    for (int i = 0; i < a.dim; ++i) {
        const int m = a.basis[i].morphism;
        const int x = a.basis[i].point;
        for (int j = 0; j < a.dim; ++j) {
            const int n = a.basis[j].morphism;
            if (!g.composable(m, n)) continue;
            if (d.pointmap[m][x] != a.basis[j].point) continue;
            a.prod[static_cast<size_t>(i) * a.dim + j] = a.index_of(g.compose(m, n), x);
        }
    }

    a.unit.assign(a.dim, Rational(0));
    for (int e = 0; e < g.n_obj(); ++e)
        for (int i : a.component[e]) a.unit[i] = 1;
    return a;
}

inline Element zero_element(const Algebra& a) { return Element(a.dim, Rational(0)); }

inline Element basis_element(const Algebra& a, int i) {
    Element v = zero_element(a);
    v[i] = 1;
    return v;
}

/// u_n = sum over points of delta_x u_n.
inline Element u_element(const Algebra& a, int morphism) {
    Element v = zero_element(a);
    for (int i : a.grading[morphism]) v[i] = 1;
    return v;
}

inline Element multiply(const Algebra& a, const Element& x, const Element& y) {
    Element out = zero_element(a);
    for (int i = 0; i < a.dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < a.dim; ++j) {
            if (y[j] == 0) continue;
            const int k = a.product(i, j);
            if (k >= 0) out[k] += x[i] * y[j];
        }
    }
    return out;
}

/// e_g * v, as the sparse column action of the product table.
inline Element left_mul_basis(const Algebra& a, int g, const Element& v) {
    Element out = zero_element(a);
    for (int j = 0; j < a.dim; ++j) {
        if (v[j] == 0) continue;
        const int k = a.product(g, j);
        if (k >= 0) out[k] += v[j];
    }
    return out;
}

inline Element right_mul_basis(const Algebra& a, const Element& v, int g) {
    Element out = zero_element(a);
    for (int i = 0; i < a.dim; ++i) {
        if (v[i] == 0) continue;
        const int k = a.product(i, g);
        if (k >= 0) out[k] += v[i];
    }
    return out;
}

/// Smallest subspace containing the generators and closed under left and
/// right multiplication by every basis element.
///
/// Because the product of two basis elements is a basis element or zero,
/// left and right basis multiplications act on a generator v by pushing
/// its support along partial maps, and they commute; the ideal of v is
/// exactly span{e_a v e_b}. Each push is computed with integer table
/// lookups and deduplicated before any rational row reduction is paid.
/// Stops early once the whole algebra is reached.
inline Subspace ideal_generated(const Algebra& a, const std::vector<Element>& gens) {
    RowSpace span(a.dim);
    // right factors with a nonzero product, per basis element; the table
    // is sparse, so this replaces full-row scans below
    std::vector<std::vector<int>> succ(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (a.product(i, j) >= 0) succ[i].push_back(j);
    for (const auto& gen : gens) {
        if (span.dim() == a.dim) break;
        std::vector<int> supp;
        for (int i = 0; i < a.dim; ++i)
            if (gen[i] != 0) supp.push_back(i);
        if (supp.empty()) continue;
        const size_t s = supp.size();
        std::set<std::vector<int>> seen;
        auto visit = [&](const std::vector<int>& t) {
            if (std::all_of(t.begin(), t.end(), [](int k) { return k < 0; })) return;
            if (!seen.insert(t).second) return;
            Vec v(a.dim, Rational(0));
            for (size_t i = 0; i < s; ++i)
                if (t[i] >= 0) v[t[i]] += gen[supp[i]];
            span.insert(std::move(v));
        };
        std::vector<int> ta(s), t(s), cand;
        for (int lft = 0; lft <= a.dim && span.dim() < a.dim; ++lft) {
            // lft == a.dim stands for no left factor (v e_b alone)
            bool any = false;
            for (size_t i = 0; i < s; ++i) {
                ta[i] = lft == a.dim ? supp[i] : a.product(lft, supp[i]);
                any = any || ta[i] >= 0;
            }
            if (!any) continue;
            visit(ta);
            cand.clear();
            for (size_t i = 0; i < s; ++i)
                if (ta[i] >= 0) cand.insert(cand.end(), succ[ta[i]].begin(), succ[ta[i]].end());
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            for (int rgt : cand) {
                if (span.dim() == a.dim) break;
                for (size_t i = 0; i < s; ++i) t[i] = ta[i] < 0 ? -1 : a.product(ta[i], rgt);
                visit(t);
            }
        }
    }
    return span.to_subspace();
}

inline bool is_whole_algebra(const Algebra& a, const Subspace& s) { return s.dim() == a.dim; }

/// Exact intersection of an ideal with each component A_e.
inline std::vector<Subspace> intersect_with_components(const Algebra& a, const Subspace& ideal) {
    std::vector<Subspace> out;
    for (int e = 0; e < a.sys.cat.n_obj(); ++e) {
        std::vector<bool> keep(a.dim, false);
        for (int i : a.component[e]) keep[i] = true;
        out.push_back(subspace_intersect_coords(ideal, keep));
    }
    return out;
}

/// The diagonal subalgebra A = direct sum of the A_e, as a subspace.
inline Subspace diagonal_subspace(const Algebra& a) {
    RowSpace rs(a.dim);
    for (int e = 0; e < a.sys.cat.n_obj(); ++e)
        for (int i : a.component[e]) rs.insert(basis_element(a, i));
    return rs.to_subspace();
}

/// Center: solution space of the commutation constraints z e_j = e_j z
/// against every basis element. Constraint rows are assembled sparsely
/// and folded into an incremental RREF before the kernel is taken.
inline Subspace center(const Algebra& a) {
    // row (j, i): sum_k c_k ([e_k e_j = e_i] - [e_j e_k = e_i]) = 0
    RowSpace constraints(a.dim);
    for (int j = 0; j < a.dim; ++j) {
        std::map<int, Vec> rows;  // result index i -> coefficient row over k
        for (int k = 0; k < a.dim; ++k) {
            const int kj = a.product(k, j);
            if (kj >= 0) {
                auto& r = rows.try_emplace(kj, a.dim, Rational(0)).first->second;
                r[k] += 1;
            }
            const int jk = a.product(j, k);
            if (jk >= 0) {
                auto& r = rows.try_emplace(jk, a.dim, Rational(0)).first->second;
                r[k] -= 1;
            }
        }
        for (auto& [i, r] : rows) constraints.insert(std::move(r));
    }
    Matrix m(a.dim);
    for (const auto& r : constraints.to_subspace().rows) m.add_row(r);
    return kernel(m);
}

/// Jacobson radical via the trace form (characteristic zero): the
/// radical is the kernel of (x, y) -> trace(L_{xy}). Since products of
/// basis elements are basis elements, the Gram matrix only needs the
/// traces of the left regular representation of each basis element.
inline Subspace radical(const Algebra& a) {
    std::vector<Rational> tr(a.dim, Rational(0));
    for (int k = 0; k < a.dim; ++k) {
        long fixed = 0;
        for (int l = 0; l < a.dim; ++l)
            if (a.product(k, l) == l) ++fixed;
        tr[k] = fixed;
    }
    Matrix gram(a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            const int k = a.product(i, j);
            if (k >= 0) gram.rows[i][j] = tr[k];
        }
    return kernel(gram);
}

/// Corner algebra u_e R u_e at an object: the span of delta_x u_n for
/// n in G_e. Returned as a standalone algebra together with the parent
/// basis indices of its basis.
struct CornerAlgebra {
    Algebra algebra;      // product table re-indexed to the corner basis
    std::vector<int> parent_index;
};

inline CornerAlgebra corner_algebra(const Algebra& a, int e) {
    if (e < 0 || e >= a.sys.cat.n_obj())
        throw Error("UnknownObject", "object index out of range");
    CornerAlgebra c;
    c.algebra.sys = a.sys;
    std::vector<int> local(a.dim, -1);
    for (int n : a.sys.cat.endos(e))
        for (int i : a.grading[n]) {
            local[i] = static_cast<int>(c.parent_index.size());
            c.parent_index.push_back(i);
            c.algebra.basis.push_back(a.basis[i]);
        }
    c.algebra.dim = static_cast<int>(c.parent_index.size());
    c.algebra.prod.assign(static_cast<size_t>(c.algebra.dim) * c.algebra.dim, -1);
    for (int i = 0; i < c.algebra.dim; ++i)
        for (int j = 0; j < c.algebra.dim; ++j) {
            const int k = a.product(c.parent_index[i], c.parent_index[j]);
            // closed under multiplication: composable endomorphisms compose
            c.algebra.prod[static_cast<size_t>(i) * c.algebra.dim + j] = k < 0 ? -1 : local[k];
        }
    c.algebra.unit.assign(c.algebra.dim, Rational(0));
    for (int i : a.component[e]) c.algebra.unit[local[i]] = 1;
    // grading/component views restricted to the corner
    c.algebra.grading.assign(a.sys.cat.n_mor(), {});
    for (int n : a.sys.cat.endos(e))
        for (int i : a.grading[n]) c.algebra.grading[n].push_back(local[i]);
    c.algebra.component.assign(a.sys.cat.n_obj(), {});
    for (int i : a.component[e]) c.algebra.component[e].push_back(local[i]);
    return c;
}

/// Commutant of a subspace: all z with z s = s z for every basis vector
/// s of S.
inline Subspace commutant(const Algebra& a, const Subspace& s) {
    RowSpace constraints(a.dim);
    for (const auto& sv : s.rows) {
        std::map<int, Vec> rows;  // result index -> coefficients over z components
        for (int l = 0; l < a.dim; ++l) {
            if (sv[l] == 0) continue;
            for (int k = 0; k < a.dim; ++k) {
                const int kl = a.product(k, l);
                if (kl >= 0) {
                    auto& r = rows.try_emplace(kl, a.dim, Rational(0)).first->second;
                    r[k] += sv[l];
                }
                const int lk = a.product(l, k);
                if (lk >= 0) {
                    auto& r = rows.try_emplace(lk, a.dim, Rational(0)).first->second;
                    r[k] -= sv[l];
                }
            }
        }
        for (auto& [i, r] : rows) constraints.insert(std::move(r));
    }
    Matrix m(a.dim);
    for (const auto& r : constraints.to_subspace().rows) m.add_row(r);
    if (m.nrows() == 0) return rref(Matrix::identity(a.dim)).first;
    return kernel(m);
}

/// Maximal commutativity of the diagonal subalgebra: its commutant in
/// the whole algebra equals itself.
inline bool is_A_maximal_commutative(const Algebra& a) {
    const Subspace diag = diagonal_subspace(a);
    return commutant(a, diag) == diag;
}

struct SimplicityResult {
    bool simple = false;
    int radical_dim = 0;
    int center_dim = 0;
    Subspace radical_space;
    Subspace center_space;
    /// Non-simplicity witness: the radical when nonzero, otherwise a
    /// central element independent of the unit.
    std::optional<Element> central_witness;
};

/// Simplicity of the complexified algebra: radical zero and center of
/// dimension one. Both invariants are stable under scalar extension in
/// characteristic zero, so they can be decided exactly over Q.
inline SimplicityResult is_simple_over_C(const Algebra& a) {
    SimplicityResult r;
    r.radical_space = radical(a);
    r.center_space = center(a);
    r.radical_dim = r.radical_space.dim();
    r.center_dim = r.center_space.dim();
    r.simple = r.radical_dim == 0 && r.center_dim == 1;
    if (!r.simple && r.radical_dim == 0) {
        // pick a central basis vector not proportional to the unit
        for (const auto& row : r.center_space.rows) {
            // proportional to unit? unit has all-equal support on identity
            // components and nothing else
            bool proportional = false;
            for (int i = 0; i < a.dim; ++i)
                if (a.unit[i] != 0 && row[i] != 0) {
                    Rational f = row[i] / a.unit[i];
                    Element diff(a.dim, Rational(0));
                    bool zero = true;
                    for (int j = 0; j < a.dim; ++j)
                        if (row[j] - f * a.unit[j] != 0) zero = false;
                    proportional = zero;
                    break;
                }
            if (!proportional) {
                r.central_witness = row;
                break;
            }
        }
    }
    return r;
}

/// Burnside-style independent oracle: the complexified algebra is simple
/// iff its regular bimodule is irreducible, i.e. the span of all
/// products L_a R_b of left/right multiplications has full dimension
/// dim^2. Each such operator is a 0/1 matrix, handled sparsely.
inline bool enveloping_rank_oracle(const Algebra& a, int cap = 36, int* rank_out = nullptr) {
    if (a.dim > cap)
        throw Error("DimensionCapExceeded", "oracle cap " + std::to_string(cap) +
                                                " exceeded by dimension " + std::to_string(a.dim));
    std::set<std::vector<int64_t>> seen;
    SparseRank ranker;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            // operator x -> e_i x e_j, vectorized over (result, argument)
            std::vector<int64_t> support;
            for (int k = 0; k < a.dim; ++k) {
                const int ik = a.product(i, k);
                if (ik < 0) continue;
                const int res = a.product(ik, j);
                if (res < 0) continue;
                support.push_back(static_cast<int64_t>(res) * a.dim + k);
            }
            if (support.empty()) continue;
            std::sort(support.begin(), support.end());
            if (!seen.insert(support).second) continue;
            SparseRank::Row row;
            for (int64_t idx : support) row.emplace_back(idx, Rational(1));
            ranker.insert(std::move(row));
        }
    if (rank_out) *rank_out = ranker.rank();
    return ranker.rank() == a.dim * a.dim;
}

// ---------------------------------------------------------------------------
// Congruence-driven ideal generators (class-sum-zero elements)
// ---------------------------------------------------------------------------

/// Generators delta_x (u_{id_e} - u_m) for every loop m related to the
/// identity; these span all elements supported on the classes [id_e]
/// whose class coefficient sums vanish pointwise.
inline std::vector<Element> class_sum_zero_generators(const Algebra& a, const Congruence& r) {
    const Category& g = a.sys.cat;
    std::vector<Element> out;
    for (int e = 0; e < g.n_obj(); ++e) {
        const int id = g.identity[e];
        for (int m = 0; m < g.n_mor(); ++m) {
            if (m == id || !r.related(m, id)) continue;
            for (int x = 0; x < a.sys.space_size(e); ++x) {
                Element v = zero_element(a);
                v[a.index_of(id, x)] = 1;
                v[a.index_of(m, x)] -= 1;
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

/// Verifies that every constructed class-sum-zero generator produces an
/// ideal meeting the diagonal A trivially. The congruence must be
/// contained in the kernel of the induced functor.
inline bool class_sum_ideals_avoid_diagonal(const Algebra& a, const Congruence& r) {
    const Category& g = a.sys.cat;
    const Congruence ker = sigma_kernel(a.sys);
    for (int m = 0; m < g.n_mor(); ++m)
        for (int n = 0; n < m; ++n)
            if (r.related(m, n) && !ker.related(m, n))
                throw Error("NotContainedInKernel",
                            "congruence relates (" + g.morphisms[m] + ", " + g.morphisms[n] +
                                ") outside the kernel");
    std::vector<bool> diag_mask(a.dim, false);
    for (int e = 0; e < g.n_obj(); ++e)
        for (int i : a.component[e]) diag_mask[i] = true;
    for (const auto& gen : class_sum_zero_generators(a, r)) {
        const Subspace ideal = ideal_generated(a, {gen});
        if (subspace_intersect_coords(ideal, diag_mask).dim() != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Best-effort rational witnesses
// ---------------------------------------------------------------------------

/// Monic minimal polynomial of an element, low degree first; returned as
/// coefficient vector c_0..c_d with c_d = 1.
inline std::vector<Rational> minimal_polynomial(const Algebra& a, const Element& z) {
    std::vector<Element> powers{a.unit};
    RowSpace span(a.dim);
    span.insert(a.unit);
    Element cur = a.unit;
    for (;;) {
        cur = multiply(a, cur, z);
        Vec reduced = cur;
        span.reduce(reduced);
        if (is_zero(reduced)) break;
        span.insert(cur);
        powers.push_back(cur);
    }
    const int d = static_cast<int>(powers.size());
    // solve sum_i c_i z^i = -z^d
    Matrix m(a.dim, d);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < d; ++j) m.rows[i][j] = powers[j][i];
    Matrix aug(a.dim, d + 1);
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < d; ++j) aug.rows[i][j] = m.rows[i][j];
        aug.rows[i][d] = cur[i];
    }
    auto [ech, rank] = rref(aug);
    // the solve gives z^d = sum_j t_j z^j, so the monic polynomial is
    // z^d - sum_j t_j z^j
    std::vector<Rational> coeffs(d + 1, Rational(0));
    coeffs[d] = 1;
    for (const auto& row : ech.rows) {
        int c = 0;
        while (row[c] == 0) ++c;
        if (c < d) coeffs[c] = -row[d];
    }
    return coeffs;
}

/// Tries to find a rational eigenvalue of a central element and, from
/// it, a proper ideal with rational generators. Best effort: gives up
/// when the constant term is too large to factor quickly.
inline std::optional<Element> rational_ideal_witness(const Algebra& a, const Element& central) {
    auto poly = minimal_polynomial(a, central);
    // clear denominators
    BigInt l = 1;
    for (const auto& c : poly)
        if (c != 0) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    std::vector<BigInt> ipoly;
    for (const auto& c : poly) ipoly.push_back(boost::multiprecision::numerator(Rational(c * l)));
    const BigInt a0 = ipoly.front(), lead = ipoly.back();
    if (a0 == 0) {
        // zero is a root: the ideal of `central` itself works
        return central;
    }
    if (boost::multiprecision::abs(a0) > 1000000000000LL) return std::nullopt;
    auto divisors = [](BigInt n) {
        n = boost::multiprecision::abs(n);
        std::vector<BigInt> out;
        for (BigInt d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        return out;
    };
    auto eval = [&](const Rational& x) {
        Rational acc = 0;
        for (int i = static_cast<int>(ipoly.size()) - 1; i >= 0; --i)
            acc = acc * x + Rational(ipoly[i]);
        return acc;
    };
    for (const BigInt& p : divisors(a0))
        for (const BigInt& q : divisors(lead))
            for (int sign : {1, -1}) {
                Rational root(p * sign, q);
                if (eval(root) == 0) {
                    Element w = central;
                    for (int i = 0; i < a.dim; ++i) w[i] -= root * a.unit[i];
                    return w;
                }
            }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Axiom checks (used by the verification harness and tests)
// ---------------------------------------------------------------------------

inline bool unit_is_two_sided_identity(const Algebra& a) {
    for (int i = 0; i < a.dim; ++i) {
        const Element e = basis_element(a, i);
        if (multiply(a, a.unit, e) != e || multiply(a, e, a.unit) != e) return false;
    }
    return true;
}

inline bool product_table_associative(const Algebra& a) {
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            const int ij = a.product(i, j);
            for (int k = 0; k < a.dim; ++k) {
                const int jk = a.product(j, k);
                const int left = ij < 0 ? -1 : a.product(ij, k);
                const int right = jk < 0 ? -1 : a.product(i, jk);
                if (left != right) return false;
            }
        }
    return true;
}

/// Strong grading: T_m T_n = T_{mn} as subspaces for composable pairs
/// and zero otherwise.
inline bool is_strongly_graded(const Algebra& a) {
    const Category& g = a.sys.cat;
    for (int m = 0; m < g.n_mor(); ++m)
        for (int n = 0; n < g.n_mor(); ++n) {
            std::set<int> products;
            for (int i : a.grading[m])
                for (int j : a.grading[n]) {
                    const int k = a.product(i, j);
                    if (k >= 0) products.insert(k);
                }
            if (!g.composable(m, n)) {
                if (!products.empty()) return false;
                continue;
            }
            const auto& target = a.grading[g.compose(m, n)];
            if (products != std::set<int>(target.begin(), target.end())) return false;
        }
    return true;
}

}  // namespace skewcat
