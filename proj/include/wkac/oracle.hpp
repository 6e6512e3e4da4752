#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wkac/determinant.hpp"

namespace wkac {

// Brute-force ground truth: the two superconformal algebras realized as mode
// algebras with exact structure constants, Verma modules built over them, and
// contravariant Gram matrices computed by straightening annihilators through
// creation monomials. Everything is polynomial in {h, q, c, g}.

enum class OracleKind { N1, N2 };

enum OGen : int { GEN_J = 0, GEN_L = 1, GEN_GM = 2, GEN_GP = 3 };
// GEN_GM is the single supercurrent of the N=1 algebra and the charge -1 current
// G^- of the N=2 algebra; GEN_GP exists only for N=2.

struct Op {
    int gen;
    Rat mode;
    bool operator<(const Op& o) const { return std::tie(gen, mode) < std::tie(o.gen, o.mode); }
    bool operator==(const Op& o) const { return gen == o.gen && mode == o.mode; }
};

using Mono = std::vector<Op>;            // creation ops in canonical order
using State = std::map<Mono, Poly>;      // linear combination applied to |q, h>

struct BracketTerm {
    Poly coeff;
    std::optional<Op> op;  // nullopt: central/scalar contribution
};

class ModeAlgebra {
  public:
    // eps parameterizes the supercurrent mode lattice: G^-: eps + 1/2 + Z,
    // G^+: -eps + 1/2 + Z. The untwisted sector is eps = 0, the half-twisted
    // one eps = 1/2.
    ModeAlgebra(OracleKind kind, const Rat& eps) : kind_(kind), eps_(eps) {}

    OracleKind kind() const { return kind_; }
    bool n2() const { return kind_ == OracleKind::N2; }
    Rat eps() const { return eps_; }
    bool ramond() const { return eps_ == rat(1, 2); }

    bool odd(int gen) const { return gen == GEN_GM || gen == GEN_GP; }
    /// charge drop of the weight when the operator is applied
    Rat charge_drop(int gen) const {
        if (!n2()) return Rat(0);
        if (gen == GEN_GM) return Rat(1);
        if (gen == GEN_GP) return Rat(-1);
        return Rat(0);
    }
    Rat mode_offset(int gen) const {
        if (gen == GEN_GM) return mod1(eps_ + rat(1, 2));
        if (gen == GEN_GP) return mod1(-eps_ + rat(1, 2));
        return Rat(0);
    }
    std::vector<int> generators() const {
        if (n2()) return {GEN_J, GEN_L, GEN_GM, GEN_GP};
        return {GEN_L, GEN_GM};
    }

    /// graded bracket [a, b} as a finite list of terms
    std::vector<BracketTerm> bracket(const Op& a, const Op& b) const {
        std::vector<BracketTerm> out;
        Poly c3 = poly_c() * Rat(rat(1, 3));
        auto add = [&](const Poly& coeff, std::optional<Op> op) {
            if (!coeff.is_zero()) out.push_back({coeff, op});
        };
        int x = a.gen, y = b.gen;
        const Rat &m = a.mode, &n = b.mode;
        if (x == GEN_L && y == GEN_L) {
            add(Poly(m - n), Op{GEN_L, m + n});
            if (m + n == 0) add(poly_c() * Rat(m * (m * m - 1) / 12), std::nullopt);
        } else if (x == GEN_L && y == GEN_J) {
            add(Poly(-n), Op{GEN_J, m + n});
        } else if (x == GEN_J && y == GEN_L) {
            add(Poly(m), Op{GEN_J, m + n});
        } else if (x == GEN_L && (y == GEN_GM || y == GEN_GP)) {
            add(Poly(m / 2 - n), Op{y, m + n});
        } else if ((x == GEN_GM || x == GEN_GP) && y == GEN_L) {
            add(Poly(m - n / 2), Op{x, m + n});
        } else if (x == GEN_J && y == GEN_J) {
            if (m + n == 0) add(c3 * m, std::nullopt);
        } else if (x == GEN_J && (y == GEN_GM || y == GEN_GP)) {
            add(Poly(y == GEN_GP ? Rat(1) : Rat(-1)), Op{y, m + n});
        } else if ((x == GEN_GM || x == GEN_GP) && y == GEN_J) {
            add(Poly(x == GEN_GP ? Rat(-1) : Rat(1)), Op{x, m + n});
        } else if (odd(x) && odd(y)) {
            if (n2() && x == y) return out;  // {G+-, G+-} = 0
            // N=1: {G_m, G_n}; N=2: {G+_r, G-_s} with r the G^+ index
            Rat r = (x == GEN_GP) ? m : n;
            Rat s = (x == GEN_GP) ? n : m;
            if (!n2()) {
                add(Poly(2), Op{GEN_L, m + n});
                if (m + n == 0) add(c3 * (m * m - rat(1, 4)), std::nullopt);
            } else {
                add(Poly(2), Op{GEN_L, m + n});
                add(Poly(r - s), Op{GEN_J, m + n});
                if (m + n == 0) add(c3 * (r * r - rat(1, 4)), std::nullopt);
            }
        } else {
            throw std::logic_error("bracket: unsupported generator pair");
        }
        return out;
    }

    Op omega(const Op& op) const {
        Op o = op;
        o.mode = -op.mode;
        if (n2() && op.gen == GEN_GM) o.gen = GEN_GP;
        else if (n2() && op.gen == GEN_GP) o.gen = GEN_GM;
        return o;
    }

    bool is_creation(const Op& op) const {
        if (op.mode < 0) return true;
        if (op.mode > 0) return false;
        // zero modes
        if (n2() && op.gen == GEN_GM && ramond()) return true;
        return false;
    }

    /// action of a non-creation zero mode / positive mode on the highest weight
    std::optional<Poly> highest_weight_eigenvalue(const Op& op) const {
        if (op.mode > 0) return Poly(0);
        if (op.gen == GEN_L) return poly_h();
        if (op.gen == GEN_J) return poly_q();
        if (!n2() && op.gen == GEN_GM) return poly_g();  // diagonal fermionic zero mode
        if (n2() && op.gen == GEN_GP) return Poly(0);
        return std::nullopt;
    }

    // --- straightening ---------------------------------------------------------

    State push(const Op& x, const Mono& mono) const {
        State out;
        if (is_creation(x)) {
            if (mono.empty() || x < mono.front()) {
                Mono m2;
                m2.reserve(mono.size() + 1);
                m2.push_back(x);
                m2.insert(m2.end(), mono.begin(), mono.end());
                out[m2] = Poly(1);
                return out;
            }
            if (x == mono.front() && !odd(x.gen)) {
                Mono m2;
                m2.reserve(mono.size() + 1);
                m2.push_back(x);
                m2.insert(m2.end(), mono.begin(), mono.end());
                out[m2] = Poly(1);
                return out;
            }
            if (x == mono.front() && odd(x.gen)) {
                // X X M' = (1/2){X, X} M'
                Mono rest(mono.begin() + 1, mono.end());
                for (const auto& term : bracket(x, x))
                    accumulate(out, apply_term(term, rest), Poly(rat(1, 2)));
                return out;
            }
        } else if (mono.empty()) {
            auto eig = highest_weight_eigenvalue(x);
            if (!eig) throw std::logic_error("push: unhandled zero mode");
            if (!eig->is_zero()) out[Mono{}] = *eig;
            return out;
        }
        if (mono.empty()) {
            // out-of-order creation op cannot reach here; annihilators handled above
            throw std::logic_error("push: empty monomial fell through");
        }
        // exchange x past the front
        Op y = mono.front();
        Mono rest(mono.begin() + 1, mono.end());
        Rat sign = (odd(x.gen) && odd(y.gen)) ? Rat(-1) : Rat(1);
        State deeper = push(x, rest);
        for (const auto& [m2, coeff] : deeper)
            accumulate(out, push(y, m2), coeff * Poly(sign));
        for (const auto& term : bracket(x, y))
            accumulate(out, apply_term(term, rest), Poly(1));
        return out;
    }

    State apply(const Op& x, const State& s) const {
        State out;
        for (const auto& [mono, coeff] : s) accumulate(out, push(x, mono), coeff);
        return out;
    }

  private:
    State apply_term(const BracketTerm& term, const Mono& mono) const {
        State s;
        if (!term.op) {
            s[mono] = term.coeff;
            return s;
        }
        State pushed = push(*term.op, mono);
        for (auto& [m2, c] : pushed) c *= term.coeff;
        return pushed;
    }
    static void accumulate(State& into, const State& from, const Poly& scale) {
        for (const auto& [mono, coeff] : from) {
            Poly add = coeff * scale;
            auto it = into.find(mono);
            if (it == into.end()) {
                if (!add.is_zero()) into.emplace(mono, add);
            } else {
                it->second += add;
                if (it->second.is_zero()) into.erase(it);
            }
        }
    }

    OracleKind kind_;
    Rat eps_;
};

// --- Verma module -------------------------------------------------------------

struct VermaBasis {
    Eta eta;
    std::vector<Mono> monomials;  // canonical order, deterministic
};

/// All canonical creation monomials at charge drop eta.charge and level eta.level.
inline VermaBasis verma_basis(const ModeAlgebra& alg, const Eta& eta) {
    std::vector<Op> candidates;
    for (int gen : alg.generators()) {
        // modes of the family live on off + Z; walk the negative part upward
        Rat off = alg.mode_offset(gen);
        for (Rat mode = off - Rat(rat_floor(eta.level + off)) - 1;; mode += 1) {
            if (mode > 0) break;
            if (-mode > eta.level) continue;
            Op op{gen, mode};
            if (!alg.is_creation(op)) continue;
            candidates.push_back(op);
        }
    }
    std::sort(candidates.begin(), candidates.end());

    VermaBasis basis;
    basis.eta = eta;
    Mono current;
    std::function<void(size_t, Rat, Rat)> rec = [&](size_t idx, Rat charge, Rat level) {
        if (charge == 0 && level == 0) basis.monomials.push_back(current);
        if (idx == candidates.size()) return;
        for (size_t i = idx; i < candidates.size(); ++i) {
            const Op& op = candidates[i];
            Rat lv = -op.mode == 0 ? Rat(0) : -op.mode;
            if (lv > level) continue;
            if (alg.odd(op.gen) && !current.empty() && current.back() == op) continue;
            Rat ch = charge - alg.charge_drop(op.gen);
            Rat rem = level - lv;
            if (rem < 0) continue;
            current.push_back(op);
            rec(alg.odd(op.gen) ? i + 1 : i, ch, rem);
            current.pop_back();
        }
    };
    rec(0, eta.charge, eta.level);
    std::sort(basis.monomials.begin(), basis.monomials.end());
    return basis;
}

struct GramMatrix {
    VermaBasis basis;
    std::vector<std::vector<Poly>> entries;  // reduced: no g powers above 1
};

inline GramMatrix gram_matrix(const ModeAlgebra& alg, const Eta& eta) {
    GramMatrix G;
    G.basis = verma_basis(alg, eta);
    size_t d = G.basis.monomials.size();
    G.entries.assign(d, std::vector<Poly>(d, Poly(0)));
    std::vector<State> columns(d);
    for (size_t j = 0; j < d; ++j) {
        State s;
        s[G.basis.monomials[j]] = Poly(1);
        columns[j] = s;
    }
    for (size_t i = 0; i < d; ++i) {
        const Mono& vi = G.basis.monomials[i];
        for (size_t j = 0; j < d; ++j) {
            State s = columns[j];
            // omega(a1...al) w = omega(al)...omega(a1) w: apply omega(a1) first
            for (const Op& op : vi) s = alg.apply(alg.omega(op), s);
            auto it = s.find(Mono{});
            G.entries[i][j] = (it == s.end()) ? Poly(0) : reduce_zero_mode(it->second);
        }
    }
    return G;
}

/// Fraction-free exact determinant.
inline Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) return Poly(1);
    Poly prev(1);
    Rat sign(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return Poly(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = num.divide_exact(prev);
                if (!q) throw std::logic_error("fraction-free elimination: inexact division");
                m[i][j] = *q;
            }
        prev = m[k][k];
    }
    return m[n - 1][n - 1] * sign;
}

/// Gram determinant with the zero-mode square reduced away; polynomial in {h, q, c}.
inline Poly gram_determinant(const ModeAlgebra& alg, const Eta& eta) {
    GramMatrix G = gram_matrix(alg, eta);
    Poly det = reduce_zero_mode(bareiss_determinant(G.entries));
    if (det.depends_on(VG))
        throw std::logic_error("Gram determinant kept a bare zero-mode factor");
    return det;
}

// --- comparison with the factored formula ---------------------------------------

inline const AlgebraData& oracle_source_algebra(OracleKind kind) {
    return load_algebra(kind == OracleKind::N1 ? AlgebraName::osp_1_2
                                               : AlgebraName::sl_2_1);
}

struct CompareResult {
    Eta eta;
    bool match = false;
    std::string oracle_str;
    std::string formula_str;
    std::string ratio_str;
    size_t dim = 0;
};

/// Substitutes c -> c(k) and compares the Gram determinant with the assembled
/// factored determinant, as polynomials in {h, q, k} up to a rational constant
/// and a power of (k + h_dual). The twist assignment must describe the same
/// sector as the mode algebra's eps.
inline CompareResult compare_with_formula(OracleKind kind, const ModeAlgebra& alg,
                                          const TwistAssignment& t, const Eta& eta,
                                          PartitionTable& table) {
    const AlgebraData& A = oracle_source_algebra(kind);
    DetContext ctx = make_det_context(A, t);
    Rat hv = dual_coxeter(A);

    CompareResult res;
    res.eta = eta;
    res.dim = verma_basis(alg, eta).monomials.size();

    Poly det = gram_determinant(alg, eta);
    RatFunc c = central_charge(A);
    auto [det_k, den_pow] = det.substitute_fraction(VC, c.num(), c.den());
    (void)den_pow;

    FactoredDeterminant f = assemble_determinant(ctx, eta, table);
    Poly formula = f.expanded();

    Poly lhs = strip_level_divisors(det_k, hv);
    Poly rhs = strip_level_divisors(formula, hv);
    res.match = (lhs == rhs);

    std::ostringstream fs;
    for (const auto& fac : f.factors)
        fs << "(" << fac.canonical.str() << ")^" << fac.exponent.get_str() << " ";
    fs << "(k+h')^" << f.prefactor_exponent.get_str();
    res.formula_str = fs.str();
    res.oracle_str = det.str();
    if (res.match && !lhs.is_zero()) {
        Rat ratio = det_k.content() / formula.content();
        res.ratio_str = rat_str(ratio) + " * (k+h')^power";
    }
    return res;
}

inline CompareResult compare_with_formula(OracleKind kind, bool ramond, const Eta& eta,
                                          PartitionTable& table) {
    const AlgebraData& A = oracle_source_algebra(kind);
    ModeAlgebra alg(kind, ramond ? rat(1, 2) : Rat(0));
    TwistAssignment t = ramond ? ramond_sector(A) : ns_sector(A);
    return compare_with_formula(kind, alg, t, eta, table);
}

/// Weight spaces with states at level <= max_level for the oracle's sector.
inline std::vector<Eta> oracle_weight_spaces(OracleKind kind, bool ramond,
                                             const Rat& max_level) {
    ModeAlgebra alg(kind, ramond ? rat(1, 2) : Rat(0));
    std::vector<Eta> out;
    Rat step = ramond ? Rat(1) : rat(1, 2);
    for (Rat lev(0); lev <= max_level; lev += step) {
        Rat span = 2 * lev + 1;
        for (Rat ch = -span; ch <= span; ch += 1) {
            if (kind == OracleKind::N1 && ch != 0) continue;
            Eta e{ch, lev};
            if (!verma_basis(alg, e).monomials.empty()) out.push_back(e);
        }
    }
    return out;
}

}  // namespace wkac
