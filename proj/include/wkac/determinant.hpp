#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wkac/fixtures.hpp"
#include "wkac/partitions.hpp"
#include "wkac/weights.hpp"

namespace wkac {

// Everything the factor displays need, precomputed for one algebra/sector pair.
// Weights enter symbolically: q is the charge eigenvalue of the module highest
// weight, h its conformal weight, k the level.
struct DetContext {
    const AlgebraData* A;
    TwistAssignment t;
    GradationData G;
    Rat hv;
    Rat rho_t_theta;  // (rho_tilde | theta)
    Rat rho_t_nat;    // q-value of the natural part of rho_tilde
    Rat shift_q;      // q-value of (lambda_nat - Lambda)
    Rat h_ch, h_ne;
    Rat eps_sum;      // sum (-1)^p eps(1-eps) over positive roots
};

inline DetContext make_det_context(const AlgebraData& A, const TwistAssignment& t) {
    DetContext ctx{&A, t, minimal_gradation(A), dual_coxeter(A), Rat(0), Rat(0),
                   Rat(0), Rat(0), Rat(0), Rat(0)};
    TwistedRho tr = twisted_rho(A, t);
    ctx.rho_t_theta = A.bilinear(tr.rho_tilde, A.theta());
    ctx.rho_t_nat = tr.rho_tilde_nat;
    ctx.shift_q = natural_shift_q(A, t);
    VacuumShifts V = vacuum_shifts(A, t);
    ctx.h_ch = V.h_ch;
    ctx.h_ne = V.h_ne;
    ctx.eps_sum = eps_casimir_sum(A, t);
    return ctx;
}

/// strips every (k + h_dual) divisor and normalizes to a primitive polynomial
inline Poly strip_level_divisors(Poly p, const Rat& hv) {
    if (p.is_zero()) return p;
    Poly lin = (poly_k() + Poly(hv)).primitive();
    while (true) {
        auto q = p.divide_exact(lin);
        if (!q) break;
        p = *q;
    }
    return p.primitive();
}

// A determinant factor, held as a polynomial numerator over (4(k+h_dual))^den_pow.
struct RawFactor {
    Poly num;
    int den_pow = 0;
    Rat hv;

    /// Canonical comparison unit: content and (k+h_dual) divisors stripped,
    /// sign fixed by the lex-leading coefficient.
    Poly canonical() const { return strip_level_divisors(num, hv); }
};

namespace detfactor {

inline Poly K_poly(const DetContext& ctx) { return poly_k() + Poly(ctx.hv); }

/// lambda_nat expressed through the module charge: q + shift_q.
inline Poly lambda_nat_q(const DetContext& ctx) { return poly_q() + Poly(ctx.shift_q); }

inline Poly pairing_with(const DetContext& ctx, const Rat& charge) {
    // (lambda_nat + rho_tilde_nat | root of the given charge)
    return Poly(ctx.A->metric_q * charge) * (lambda_nat_q(ctx) + Poly(ctx.rho_t_nat));
}

inline Poly lambda_square_term(const DetContext& ctx) {
    // 2 (lambda_nat | lambda_nat + 2 rho_tilde_nat)
    Poly l = lambda_nat_q(ctx);
    return Poly(2 * ctx.A->metric_q) * l * (l + Poly(2 * ctx.rho_t_nat));
}

inline Poly common_tail(const DetContext& ctx) {
    Poly K = K_poly(ctx);
    Poly shifted = K - Poly(ctx.rho_t_theta);
    return lambda_square_term(ctx) - shifted * shifted +
           Poly(2 * ctx.eps_sum) * poly_k();
}

}  // namespace detfactor

/// Factor for a grade-0 root of the given charge and norm at indices (n, m).
inline RawFactor factor_delta0(const DetContext& ctx, const Rat& charge, const Rat& nrm,
                               const Rat& n, const Rat& m) {
    Poly num = detfactor::pairing_with(ctx, charge) + Poly(m) * detfactor::K_poly(ctx) -
               Poly(n * nrm / 2);
    return {num, 0, ctx.hv};
}

/// Factor for a grade-1/2 root of the given charge and norm at indices (n, m);
/// monic in h once divided by 4(k + h_dual).
inline RawFactor factor_delta_half(const DetContext& ctx, const Rat& charge,
                                   const Rat& nrm, const Rat& n, const Rat& m) {
    Poly K = detfactor::K_poly(ctx);
    Poly inner = Poly(2) * detfactor::pairing_with(ctx, charge) +
                 Poly(2 * m) * K - Poly(n * nrm);
    Poly num = poly_h() * 4 * K - inner * inner - detfactor::common_tail(ctx) -
               Poly(4 * (ctx.h_ch + ctx.h_ne)) * K;
    return {num, 1, ctx.hv};
}

/// Factor for the highest root; rational n supports the half-root merged lattice.
inline RawFactor factor_theta(const DetContext& ctx, const Rat& n, const Rat& m) {
    Poly K = detfactor::K_poly(ctx);
    Poly inner = Poly(m) * K - Poly(n);
    Poly num = poly_h() * 4 * K - inner * inner - detfactor::common_tail(ctx) -
               Poly(4 * (ctx.h_ch + ctx.h_ne)) * K;
    return {num, 1, ctx.hv};
}

/// Merged factor on the lattice m - n in 2Z + 2 eps(theta/2); equals the theta
/// factor at half the first index.
inline RawFactor merged_half_root_factor(const DetContext& ctx, long n, long m) {
    if (!ctx.G.has_theta_half)
        throw std::invalid_argument(ctx.A->name + ": no half of the highest root");
    Rat eps_th = ctx.t.eps[*ctx.G.theta_half];
    if (mod1(Rat(m - n) / 2 - eps_th) != 0)
        throw std::invalid_argument("merged factor: m - n violates the sector parity");
    return factor_theta(ctx, Rat(n) / 2, Rat(m));
}

/// Affine-side linear factor (lambda + rho_tilde | alpha) + m(k+h') - n(alpha|alpha)/2,
/// with the imaginary-root case alpha = 0 giving k + h'.
inline Poly affine_phi(const DetContext& ctx, const std::optional<RootVec>& alpha,
                       const Rat& n, const Rat& m, const AffineWeight& w) {
    const AlgebraData& A = *ctx.A;
    Poly K = detfactor::K_poly(ctx);
    if (!alpha) return K;  // imaginary root
    TwistedRho tr = twisted_rho(A, ctx.t);
    Rat pairing = A.metric_q * (w.lambda_nat_q + tr.rho_tilde_nat) * A.charge(*alpha) +
                  (w.lambda_theta + A.bilinear(tr.rho_tilde, A.theta())) * alpha->a;
    return Poly(pairing) + Poly(m) * K - Poly(n * A.bilinear(*alpha, *alpha) / 2);
}

// --- assembly -----------------------------------------------------------------

struct AssembledFactor {
    Poly canonical;
    Int exponent;
    std::string label;
};

struct FactoredDeterminant {
    Eta eta;
    std::vector<AssembledFactor> factors;
    Int prefactor_exponent;  // power of (k + h_dual)

    Poly expanded() const {
        Poly p(1);
        for (const auto& f : factors)
            for (Int i = 0; i < f.exponent; ++i) p *= f.canonical;
        return p;
    }
    Int h_degree() const {
        Int d = 0;
        for (const auto& f : factors) d += Int(f.canonical.degree(VH)) * f.exponent;
        return d;
    }
};

namespace detail {

class FactorAccumulator {
  public:
    void add(const RawFactor& f, const Int& exponent, const std::string& label) {
        if (exponent == 0) return;
        Poly c = f.canonical();
        if (c.is_constant())
            throw std::logic_error("assembled factor degenerated to a constant");
        auto it = index_.find(c);
        if (it == index_.end()) {
            index_.emplace(c, factors_.size());
            factors_.push_back({c, exponent, label});
        } else {
            factors_[it->second].exponent += exponent;
        }
    }
    std::vector<AssembledFactor> take() { return std::move(factors_); }

  private:
    std::map<Poly, size_t> index_;
    std::vector<AssembledFactor> factors_;
};

inline std::string idx_label(const std::string& family, const Rat& n, const Rat& m) {
    return family + "[n=" + rat_str(n) + ",m=" + rat_str(m) + "]";
}

}  // namespace detail

// Full factored determinant on the weight space (Lambda - eta_charge, h + eta_level).
// Exponents are partition counts over the sector's W-algebra positive roots;
// isotropic odd roots enter through exclusion counts at first index 1, the half
// root (and the odd half of a grade-0 root) through the merged lattices.
inline FactoredDeterminant assemble_determinant(const DetContext& ctx, const Eta& eta,
                                                PartitionTable& table) {
    const AlgebraData& A = *ctx.A;
    const Rat& lev = eta.level;
    if (lev < 0) return {eta, {}, 0};
    table.ensure_level(lev);
    detail::FactorAccumulator acc;
    Int prefactor = 0;

    // level prefactor and highest-root family
    for (long n = 1; Rat(n) <= lev * 2; ++n)
        for (long m = 1; Rat(m * n) <= lev * 2; ++m) {
            if (Rat(m * n) <= lev)
                prefactor += Int(A.rank - 1) * table.count({eta.charge, lev - Rat(m * n)});
            if (ctx.G.has_theta_half) {
                Rat eps_th = ctx.t.eps[*ctx.G.theta_half];
                if (mod1(Rat(m - n) / 2 - eps_th) != 0) continue;
                Rat drop = Rat(m * n) / 2;
                if (drop > lev) continue;
                Int e = table.count({eta.charge, lev - drop});
                acc.add(factor_theta(ctx, Rat(n) / 2, Rat(m)), e,
                        detail::idx_label("nu", Rat(n), Rat(m)));
            } else if (Rat(m * n) <= lev) {
                Int e = table.count({eta.charge, lev - Rat(m * n)});
                acc.add(factor_theta(ctx, Rat(n), Rat(m)), e,
                        detail::idx_label("theta", Rat(n), Rat(m)));
            }
        }

    Rat span = Rat(0);
    for (const auto& r : table.roots()) {
        Rat ac = r.charge >= 0 ? r.charge : -r.charge;
        if (ac > span) span = ac;
    }
    span = span * (2 * lev + 2) + 2;  // most negative reachable charge at this level
    auto n_bound = [&](const Rat& x, const Rat& m) -> long {
        if (m > 0) return to_long(rat_floor(lev / m));
        Rat b = (eta.charge + span) / x;
        return b < 0 ? 0 : to_long(rat_floor(b));
    };

    // grade-0 families
    for (int i : ctx.G.delta0_plus) {
        const RootVec& beta = A.positive_roots[i];
        Rat x = A.charge(beta), nrm = A.bilinear(beta, beta);
        Rat eps = ctx.t.eps[i];
        RootVec half_of{beta.a / 2, beta.b / 2, true, 0, 1};
        bool is_double = A.is_root(half_of);
        if (is_double) continue;  // handled inside the odd half's merged family
        if (!beta.odd) {
            for (int side = 0; side < 2; ++side) {
                Rat sx = side ? -x : x;
                Rat base = side ? mod1(-eps) : mod1(eps);
                if (side && base == 0) base = 1;
                for (Rat m = base; m <= lev; m += 1) {
                    long nb = n_bound(x, m);
                    for (long n = 1; n <= nb; ++n) {
                        Int e = table.count({eta.charge - Rat(n) * sx, lev - Rat(n) * m});
                        acc.add(factor_delta0(ctx, sx, nrm, Rat(n), m), e,
                                detail::idx_label((side ? "-" : "+") + root_label(A, i),
                                                  Rat(n), m));
                    }
                }
            }
        } else {
            // Odd non-isotropic grade-0 root: its factors at even first index
            // cancel against part of the even-double family. What survives is
            // the root's own factors at odd n plus the double's factors on the
            // opposite parity class of its mode lattice.
            RootVec dbl{beta.a * 2, beta.b * 2, false, 0, 1};
            if (!A.is_root(dbl))
                throw std::logic_error(A.name + ": odd grade-0 root without even double");
            Rat nrm2 = A.bilinear(dbl, dbl);
            for (int side = 0; side < 2; ++side) {
                Rat sx = side ? -x : x;
                Rat base = side ? mod1(-eps) : mod1(eps);
                if (side && base == 0) base = 1;
                for (Rat m = base; m <= lev; m += 1) {
                    long nb = n_bound(x, m);
                    for (long n = 1; n <= nb; n += 2) {
                        Int e = table.count({eta.charge - Rat(n) * sx, lev - Rat(n) * m});
                        acc.add(factor_delta0(ctx, sx, nrm, Rat(n), m), e,
                                detail::idx_label((side ? "-" : "+") + root_label(A, i),
                                                  Rat(n), m));
                    }
                }
                Rat eps_eff = side ? -eps : eps;
                Rat base2 = mod1(2 * eps_eff);
                if (side && base2 == 0) base2 = 1;
                for (Rat m = base2; m <= lev; m += 1) {
                    if (mod1((m - 2 * eps_eff - 1) / 2) != 0) continue;  // cancelled class
                    long nb = n_bound(2 * x, m);
                    for (long n = 1; n <= nb; ++n) {
                        Int e = table.count(
                            {eta.charge - Rat(2 * n) * sx, lev - Rat(n) * m});
                        acc.add(factor_delta0(ctx, 2 * sx, nrm2, Rat(n), m), e,
                                detail::idx_label((side ? "-2*" : "+2*") + root_label(A, i),
                                                  Rat(n), m));
                    }
                }
            }
        }
    }

    // grade-1/2 families (theta/2 handled above)
    std::vector<int> half;
    for (int i : ctx.G.delta_half_plus) half.push_back(i);
    for (int i : ctx.G.delta_half_minus) half.push_back(i);
    for (int i : half) {
        const RootVec& alpha = A.positive_roots[i];
        Rat x = A.charge(alpha), nrm = A.bilinear(alpha, alpha);
        bool plus = std::find(ctx.G.delta_half_plus.begin(), ctx.G.delta_half_plus.end(),
                              i) != ctx.G.delta_half_plus.end();
        Rat base = mod1(ctx.t.eps[i] + rat(1, 2));
        if (base == 0 && !plus) base = 1;
        if (nrm == 0) {
            for (Rat m = base; m <= lev; m += 1) {
                WRoot excl{x, m, true, alpha.mult};
                Int e = table.count_excluding(excl, {eta.charge - x, lev - m});
                acc.add(factor_delta_half(ctx, x, nrm, Rat(1), m), e,
                        detail::idx_label(root_label(A, i), Rat(1), m));
            }
        } else {
            for (Rat m = base; m <= lev; m += 1) {
                long nb = n_bound(x, m);
                for (long n = 1; n <= nb; ++n) {
                    Int e = table.count({eta.charge - Rat(n) * x, lev - Rat(n) * m});
                    acc.add(factor_delta_half(ctx, x, nrm, Rat(n), m), e,
                            detail::idx_label(root_label(A, i), Rat(n), m));
                }
            }
        }
    }

    FactoredDeterminant out;
    out.eta = eta;
    out.factors = acc.take();
    out.prefactor_exponent = prefactor;
    return out;
}

// --- closed-form certification --------------------------------------------------

/// Engine factor matching one fixture family at indices (n, m).
inline RawFactor engine_factor_for(const DetContext& ctx, const FixtureFamily& fam,
                                   const Rat& n, const Rat& m) {
    const AlgebraData& A = *ctx.A;
    using T = FixtureFamily::Target;
    switch (fam.target) {
        case T::theta:
            return factor_theta(ctx, n, m);
        case T::theta_merged:
            return factor_theta(ctx, n / 2, m);
        case T::delta0: {
            const RootVec& beta = A.positive_roots[fam.root_index];
            Rat x = A.charge(beta) * (fam.negative ? -1 : 1);
            return factor_delta0(ctx, x, A.bilinear(beta, beta), n, m);
        }
        case T::delta0_merged: {
            const RootVec& beta = A.positive_roots[fam.root_index];
            RootVec dbl{beta.a * 2, beta.b * 2, false, 0, 1};
            Rat x = 2 * A.charge(beta) * (fam.negative ? -1 : 1);
            return factor_delta0(ctx, x, A.bilinear(dbl, dbl), n / 2, m);
        }
        case T::half: {
            const RootVec& alpha = A.positive_roots[fam.root_index];
            return factor_delta_half(ctx, A.charge(alpha), A.bilinear(alpha, alpha), n, m);
        }
    }
    throw std::logic_error("unreachable");
}

/// Compares every generic factor against the literal per-algebra display over
/// index ranges n, m <= max_index, as exact polynomial identities.
inline CheckReport closed_form_check(const AlgebraData& A, bool ramond,
                                     int max_index = 3) {
    TwistAssignment t = ramond ? ramond_sector(A) : ns_sector(A);
    DetContext ctx = make_det_context(A, t);
    CheckReport rep;
    for (const auto& fam : fixture_families(A, ramond)) {
        bool ok = true;
        std::string detail;
        for (long n = 1; n <= max_index && ok; ++n) {
            if (fam.n_is_one && n > 1) break;
            for (Rat m = fam.m_base; m <= max_index && ok; m += 1) {
                if (fam.mn_parity) {
                    if (!is_integer(m) ||
                        ((m.get_num().get_si() - n) % 2 + 2) % 2 != *fam.mn_parity)
                        continue;
                }
                Poly engine = engine_factor_for(ctx, fam, Rat(n), m).canonical();
                Poly fixture = RawFactor{fam.num(Rat(n), m), fam.den_pow, ctx.hv}.canonical();
                if (engine != fixture) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + ", m=" + rat_str(m) + ": " +
                             engine.str() + " vs " + fixture.str();
                }
            }
        }
        rep.add(A.name + (ramond ? " [ramond] " : " [ns] ") + fam.label, ok, detail);
    }
    return rep;
}

// Sector-specialization identity: the general-twist displays reduce to the
// untwisted and half-twisted closed forms.
inline CheckReport specialization_check(const AlgebraData& A, int max_index = 2) {
    CheckReport rep;
    WeylVectors W = weyl_vectors(A);
    Rat hv = dual_coxeter(A);
    Poly K = poly_k() + Poly(hv);
    Poly kp1 = poly_k() + Poly(1);

    for (int ramond = 0; ramond <= 1; ++ramond) {
        TwistAssignment t = ramond ? ramond_sector(A) : ns_sector(A);
        DetContext ctx = make_det_context(A, t);
        Rat shift = ramond ? W.rho_half_nat : Rat(0);
        Rat extra = ramond ? (hv - 2) / 8 : Rat(0);
        Poly lam = poly_q() + Poly(shift);
        Poly rho0q = Poly(A.charge(W.rho0));
        Poly lamsq = Poly(2 * A.metric_q) * lam * (lam + 2 * rho0q);
        auto pairing = [&](const Rat& x) { return Poly(A.metric_q * x) * (lam + rho0q); };

        GradationData G = minimal_gradation(A);
        bool ok = true;
        std::string detail;
        auto check = [&](const Poly& general, const Poly& display, const std::string& at) {
            if (ok && general != display) {
                ok = false;
                detail = at + ": " + general.str() + " vs " + display.str();
            }
        };
        for (long n = 1; n <= max_index; ++n)
            for (long m = 0; m <= max_index; ++m) {
                Rat rn(n), rm(m);
                // theta display
                Poly inner = Poly(rm) * K - Poly(rn);
                Poly disp = poly_h() * 4 * K -
                            (inner * inner + lamsq - kp1 * kp1) + Poly(4 * extra) * K;
                check(factor_theta(ctx, rn, rm).num, disp, A.name + " theta");
                for (int i : G.delta0) {
                    const RootVec& b = A.positive_roots[i];
                    Poly d0 = pairing(A.charge(b)) + Poly(rm) * K -
                              Poly(rn * A.bilinear(b, b) / 2);
                    check(factor_delta0(ctx, A.charge(b), A.bilinear(b, b), rn, rm).num,
                          d0, A.name + " delta0 " + root_label(A, i));
                }
                for (int i : G.delta_half) {
                    const RootVec& a = A.positive_roots[i];
                    Poly in2 = Poly(2) * pairing(A.charge(a)) + Poly(2 * rm) * K -
                               Poly(rn * A.bilinear(a, a));
                    Poly dh = poly_h() * 4 * K -
                              (in2 * in2 + lamsq - kp1 * kp1) + Poly(4 * extra) * K;
                    check(factor_delta_half(ctx, A.charge(a), A.bilinear(a, a), rn, rm).num,
                          dh, A.name + " half " + root_label(A, i));
                }
            }
        rep.add(A.name + (ramond ? " [ramond]" : " [ns]") + ": general display specializes",
                ok, detail);
    }
    return rep;
}

}  // namespace wkac
