#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wkac/poly.hpp"
#include "wkac/rational.hpp"

namespace wkac {

// Roots live in the orthogonal plane spanned by {theta, u}: alpha = a*theta + b*u,
// with (theta|theta) = 2, (theta|u) = 0 and (u|u) = y_norm a per-algebra rational.
// For the two algebras whose natural y-axis normalization is irrational the u-axis
// is rescaled so that every coordinate and every pairing stays rational.
//
// charge_tag resolves the two-dimensional odd root spaces of psl(2|2): the tag is
// additive under root addition and zero on even roots.
struct RootVec {
    Rat a;  // theta-coordinate
    Rat b;  // u-coordinate
    bool odd = false;
    int tag = 0;
    int mult = 1;

    bool same_vector(const RootVec& o) const { return a == o.a && b == o.b; }
    bool operator==(const RootVec& o) const {
        return a == o.a && b == o.b && odd == o.odd && tag == o.tag;
    }
    RootVec operator-() const { return RootVec{-a, -b, odd, -tag, mult}; }
};

enum class AlgebraName {
    osp_1_2,
    sl_2_1,
    sl_3,
    osp_3_2,
    so_5,
    psl_2_2,
    g_2,
    osp_1_4,
};

// Per-algebra continuous/discrete twist family: how the user-facing parameters
// map onto the simple-root assignments.
enum class TwistFamilyKind { none, eps, eps_sigma, eps_eps };

struct AlgebraData {
    AlgebraName id;
    std::string name;
    int rank = 1;
    Rat y_norm;              // (u|u)
    Rat charge_unit;         // charge(alpha) = charge_unit * b(alpha)
    Rat metric_q;            // (lam|mu) on h-natural* = q(lam)*q(mu)*metric_q
    Rat dual_coxeter_stored; // h-check
    std::vector<RootVec> positive_roots;  // theta last by convention
    std::vector<int> simple_indices;      // indices into positive_roots
    TwistFamilyKind family = TwistFamilyKind::none;
    int even_dim = 0;
    int odd_dim = 0;

    RootVec theta() const { return RootVec{Rat(1), Rat(0), false, 0, 1}; }

    Rat bilinear(const RootVec& x, const RootVec& y) const {
        return Rat(2) * x.a * y.a + y_norm * x.b * y.b;
    }
    /// Half-integer grade of a root under the grading by the highest-root direction.
    Rat grade(const RootVec& x) const { return x.a; }
    /// Charge in the units used by the current normalization of the algebra.
    Rat charge(const RootVec& x) const { return charge_unit * x.b; }
    /// Projection orthogonal to theta, reported as a charge value.
    Rat natural_charge(const RootVec& x) const { return charge(x); }

    std::vector<RootVec> all_roots() const {
        std::vector<RootVec> r = positive_roots;
        for (const auto& p : positive_roots) r.push_back(-p);
        return r;
    }

    bool is_root(const RootVec& v) const {
        for (const auto& r : all_roots())
            if (r.same_vector(v) && r.tag == v.tag) return true;
        return false;
    }

    std::optional<int> positive_index(const RootVec& v) const {
        for (size_t i = 0; i < positive_roots.size(); ++i)
            if (positive_roots[i].same_vector(v) && positive_roots[i].tag == v.tag)
                return static_cast<int>(i);
        return std::nullopt;
    }

    bool has_theta_half() const {
        for (const auto& r : positive_roots)
            if (r.a == rat(1, 2) && r.b == 0) return true;
        return false;
    }

    /// Multiplicity-weighted super-dimension of the grade-1/2 subspace.
    Rat sdim_half() const {
        Rat s(0);
        for (const auto& r : positive_roots)
            if (grade(r) == rat(1, 2)) s += Rat(r.odd ? -r.mult : r.mult);
        return s;
    }
    Rat sdim() const { return Rat(even_dim - odd_dim); }
};

struct GradationData {
    std::vector<int> delta0;          // indices of grade-0 positive roots
    std::vector<int> delta_half;      // indices of grade-1/2 positive roots
    std::vector<int> delta0_plus;     // = delta0 (positive side)
    std::vector<int> delta_half_plus; // charge > 0
    std::vector<int> delta_half_minus;// charge < 0
    std::optional<int> theta_half;    // index of theta/2 when present
    bool has_theta_half = false;
};

namespace detail {

inline RootVec rv(long an, long ad, long bn, long bd, bool odd, int tag = 0) {
    return RootVec{rat(an, ad), rat(bn, bd), odd, tag, 1};
}

inline AlgebraData make_algebra(AlgebraName id) {
    AlgebraData A;
    A.id = id;
    switch (id) {
        case AlgebraName::osp_1_2:
            A.name = "osp(1|2)";
            A.rank = 1;
            A.y_norm = rat(1, 2);
            A.charge_unit = 0;
            A.metric_q = 0;
            A.dual_coxeter_stored = rat(3, 2);
            A.positive_roots = {rv(1, 2, 0, 1, true), rv(1, 1, 0, 1, false)};
            A.simple_indices = {0};
            A.family = TwistFamilyKind::eps;
            break;
        case AlgebraName::sl_2_1:
            A.name = "sl(2|1)";
            A.rank = 2;
            A.y_norm = rat(-1, 2);
            A.charge_unit = -1;
            A.metric_q = rat(-1, 2);
            A.dual_coxeter_stored = 1;
            A.positive_roots = {rv(1, 2, -1, 1, true), rv(1, 2, 1, 1, true),
                                rv(1, 1, 0, 1, false)};
            A.simple_indices = {0, 1};
            A.family = TwistFamilyKind::eps;
            break;
        case AlgebraName::sl_3:
            A.name = "sl(3)";
            A.rank = 2;
            A.y_norm = rat(3, 2);
            A.charge_unit = 1;
            A.metric_q = rat(3, 2);
            A.dual_coxeter_stored = 3;
            A.positive_roots = {rv(1, 2, 1, 1, false), rv(1, 2, -1, 1, false),
                                rv(1, 1, 0, 1, false)};
            A.simple_indices = {0, 1};
            A.family = TwistFamilyKind::eps;
            break;
        case AlgebraName::osp_3_2:
            A.name = "osp(3|2)";
            A.rank = 2;
            A.y_norm = rat(-1, 2);
            A.charge_unit = -1;
            A.metric_q = rat(-1, 2);
            A.dual_coxeter_stored = rat(1, 2);
            // alpha1, alpha2, alpha3 = alpha1+2*alpha2, alpha4 = alpha1+alpha2, theta
            A.positive_roots = {rv(1, 2, 1, 1, true), rv(0, 1, -1, 1, false),
                                rv(1, 2, -1, 1, true), rv(1, 2, 0, 1, true),
                                rv(1, 1, 0, 1, false)};
            A.simple_indices = {0, 1};
            A.family = TwistFamilyKind::eps_sigma;
            break;
        case AlgebraName::so_5:
            A.name = "so(5)";
            A.rank = 2;
            A.y_norm = rat(1, 2);
            A.charge_unit = rat(1, 2);
            A.metric_q = 2;
            A.dual_coxeter_stored = 3;
            // alpha1, alpha2, alpha3 = alpha1+alpha2, theta = 2*alpha1+alpha2
            A.positive_roots = {rv(1, 2, -1, 1, false), rv(0, 1, 2, 1, false),
                                rv(1, 2, 1, 1, false), rv(1, 1, 0, 1, false)};
            A.simple_indices = {0, 1};
            A.family = TwistFamilyKind::eps;
            break;
        case AlgebraName::psl_2_2:
            A.name = "psl(2|2)";
            A.rank = 2;
            A.y_norm = rat(-1, 2);
            A.charge_unit = rat(-1, 2);
            A.metric_q = -2;
            A.dual_coxeter_stored = 0;
            // alpha1/alpha2 share coordinates (tags +1/-1), likewise alpha4/alpha5.
            A.positive_roots = {rv(1, 2, 1, 1, true, +1), rv(1, 2, 1, 1, true, -1),
                                rv(0, 1, -2, 1, false, 0), rv(1, 2, -1, 1, true, +1),
                                rv(1, 2, -1, 1, true, -1), rv(1, 1, 0, 1, false, 0)};
            A.simple_indices = {0, 1, 2};
            A.family = TwistFamilyKind::eps_eps;
            break;
        case AlgebraName::g_2:
            A.name = "G_2";
            A.rank = 2;
            A.y_norm = rat(1, 6);
            A.charge_unit = rat(1, 2);
            A.metric_q = rat(2, 3);
            A.dual_coxeter_stored = 4;
            // alpha1, alpha2, alpha3 = alpha1+alpha2, alpha4 = 2a1+a2,
            // alpha5 = 3a1+a2, theta = 3a1+2a2
            A.positive_roots = {rv(0, 1, 2, 1, false), rv(1, 2, -3, 1, false),
                                rv(1, 2, -1, 1, false), rv(1, 2, 1, 1, false),
                                rv(1, 2, 3, 1, false), rv(1, 1, 0, 1, false)};
            A.simple_indices = {0, 1};
            A.family = TwistFamilyKind::eps_sigma;
            break;
        case AlgebraName::osp_1_4:
            A.name = "osp(1|4)";
            A.rank = 2;
            A.y_norm = rat(1, 2);
            A.charge_unit = rat(1, 2);
            A.metric_q = 2;
            A.dual_coxeter_stored = rat(5, 2);
            // alpha1, alpha2, alpha3 = a1+a2 (= theta/2), alpha4 = 2a1+a2,
            // alpha5 = 2a1, theta = 2a1+2a2
            A.positive_roots = {rv(0, 1, 1, 1, true), rv(1, 2, -1, 1, false),
                                rv(1, 2, 0, 1, true), rv(1, 2, 1, 1, false),
                                rv(0, 1, 2, 1, false), rv(1, 1, 0, 1, false)};
            A.simple_indices = {0, 1};
            A.family = TwistFamilyKind::eps_sigma;
            break;
    }
    A.even_dim = A.rank;
    A.odd_dim = 0;
    for (const auto& r : A.positive_roots) {
        if (r.odd)
            A.odd_dim += 2 * r.mult;
        else
            A.even_dim += 2 * r.mult;
    }
    return A;
}

}  // namespace detail

inline const std::vector<std::string>& algebra_names() {
    static const std::vector<std::string> names = {"osp(1|2)", "sl(2|1)",  "sl(3)",
                                                   "osp(3|2)", "so(5)",    "psl(2|2)",
                                                   "G_2",      "osp(1|4)"};
    return names;
}

inline const AlgebraData& load_algebra(AlgebraName id) {
    static const std::map<AlgebraName, AlgebraData> catalog = [] {
        std::map<AlgebraName, AlgebraData> m;
        for (auto id : {AlgebraName::osp_1_2, AlgebraName::sl_2_1, AlgebraName::sl_3,
                        AlgebraName::osp_3_2, AlgebraName::so_5, AlgebraName::psl_2_2,
                        AlgebraName::g_2, AlgebraName::osp_1_4})
            m.emplace(id, detail::make_algebra(id));
        return m;
    }();
    return catalog.at(id);
}

inline const AlgebraData& load_algebra(const std::string& name) {
    static const std::map<std::string, AlgebraName> lookup = {
        {"osp(1|2)", AlgebraName::osp_1_2}, {"sl(2|1)", AlgebraName::sl_2_1},
        {"sl(3)", AlgebraName::sl_3},       {"osp(3|2)", AlgebraName::osp_3_2},
        {"so(5)", AlgebraName::so_5},       {"psl(2|2)", AlgebraName::psl_2_2},
        {"G_2", AlgebraName::g_2},          {"G2", AlgebraName::g_2},
        {"osp(1|4)", AlgebraName::osp_1_4}};
    auto it = lookup.find(name);
    if (it == lookup.end()) {
        std::string valid;
        for (const auto& n : algebra_names()) valid += (valid.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unknown algebra '" + name + "' (valid: " + valid + ")");
    }
    return load_algebra(it->second);
}

inline GradationData minimal_gradation(const AlgebraData& A) {
    GradationData G;
    for (size_t i = 0; i < A.positive_roots.size(); ++i) {
        const auto& r = A.positive_roots[i];
        Rat gr = A.grade(r);
        if (gr == 0) {
            G.delta0.push_back(static_cast<int>(i));
            G.delta0_plus.push_back(static_cast<int>(i));
        } else if (gr == rat(1, 2)) {
            G.delta_half.push_back(static_cast<int>(i));
            if (r.b == 0) {
                G.theta_half = static_cast<int>(i);
                G.has_theta_half = true;
            } else if (A.charge(r) > 0) {
                G.delta_half_plus.push_back(static_cast<int>(i));
            } else {
                G.delta_half_minus.push_back(static_cast<int>(i));
            }
        } else if (gr != 1) {
            throw std::logic_error(A.name + ": root with grade outside {0,1/2,1}");
        }
    }
    return G;
}

struct WeylVectors {
    RootVec rho;            // for the full positive system, weighted by parity and mult
    RootVec rho0;           // grade-0 part
    RootVec rho_half;       // positive grade-1/2 part
    Rat rho_half_nat;       // natural projection of rho_half, as a charge value
};

namespace detail {
inline RootVec half_signed_sum(const std::vector<const RootVec*>& roots) {
    Rat a(0), b(0);
    for (const auto* r : roots) {
        Rat w = Rat(r->mult) * (r->odd ? Rat(-1) : Rat(1));
        a += w * r->a;
        b += w * r->b;
    }
    return RootVec{a / 2, b / 2, false, 0, 1};
}
}  // namespace detail

inline WeylVectors weyl_vectors(const AlgebraData& A) {
    GradationData G = minimal_gradation(A);
    std::vector<const RootVec*> all, zero, half_plus;
    for (const auto& r : A.positive_roots) all.push_back(&r);
    for (int i : G.delta0_plus) zero.push_back(&A.positive_roots[i]);
    for (int i : G.delta_half_plus) half_plus.push_back(&A.positive_roots[i]);
    WeylVectors W;
    W.rho = detail::half_signed_sum(all);
    W.rho0 = detail::half_signed_sum(zero);
    W.rho_half = detail::half_signed_sum(half_plus);
    W.rho_half_nat = A.charge(W.rho_half);
    return W;
}

inline Rat dual_coxeter(const AlgebraData& A) {
    WeylVectors W = weyl_vectors(A);
    Rat h = A.bilinear(W.rho, A.theta()) + 1;
    if (h != A.dual_coxeter_stored)
        throw std::logic_error(A.name + ": dual Coxeter recomputation mismatch");
    return h;
}

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        lines.push_back({name, pass, detail});
    }
};

// Structural identities: the grade-1/2 super-dimension relation, the vanishing
// of the quadratic residue R built from the rho vectors, and the invariance of
// (rho|rho) under flipping the negative grade-1/2 roots into the positive system.
inline CheckReport structural_checks(const AlgebraData& A) {
    CheckReport rep;
    GradationData G = minimal_gradation(A);
    WeylVectors W = weyl_vectors(A);
    Rat hv = dual_coxeter(A);

    Rat sdh = A.sdim_half();
    rep.add(A.name + ": sdim(g_1/2) = 2h'-4", sdh == 2 * hv - 4,
            rat_str(sdh) + " vs " + rat_str(2 * hv - 4));

    Rat sigma = A.has_theta_half() ? Rat(1) : Rat(0);
    RootVec rh_nat{Rat(0), W.rho_half.b, false, 0, 1};
    RootVec sum{rh_nat.a + W.rho0.a, rh_nat.b + W.rho0.b, false, 0, 1};
    Rat R = 4 * A.bilinear(rh_nat, sum) - rat(3, 8) * sigma - hv * (hv - 2) / 2;
    rep.add(A.name + ": R = 0", R == 0, "R = " + rat_str(R));

    // flipped positive system: delta0+, delta_half+, -(delta_half-), theta, theta/2
    Rat fa(0), fb(0);
    auto acc = [&](const RootVec& r, int sign) {
        Rat w = Rat(sign * r.mult) * (r.odd ? Rat(-1) : Rat(1));
        fa += w * r.a;
        fb += w * r.b;
    };
    for (int i : G.delta0_plus) acc(A.positive_roots[i], 1);
    for (int i : G.delta_half_plus) acc(A.positive_roots[i], 1);
    for (int i : G.delta_half_minus) acc(A.positive_roots[i], -1);
    acc(A.theta(), 1);
    if (G.theta_half) acc(A.positive_roots[*G.theta_half], 1);
    RootVec rho_bar{fa / 2, fb / 2, false, 0, 1};
    Rat lhs = A.bilinear(rho_bar, rho_bar);
    Rat rhs = A.bilinear(W.rho, W.rho);
    rep.add(A.name + ": (rho_bar|rho_bar) = (rho|rho)", lhs == rhs,
            rat_str(lhs) + " vs " + rat_str(rhs));
    return rep;
}

}  // namespace wkac
