#pragma once

#include <map>

#include "wkac/twist.hpp"

namespace wkac {

// Affine highest weight (lambda, k) with lambda = lambda_nat + (lambda|theta)/2 * theta.
// The natural part is held as its charge value in the algebra's q-normalization.
struct AffineWeight {
    Rat lambda_theta;  // (lambda|theta)
    Rat lambda_nat_q;  // q-value of the natural projection
};

struct WWeight {
    Rat q;      // charge eigenvalue of the module's highest weight
    RatFunc h;  // conformal weight as an exact rational function of k
};

struct VacuumShifts {
    Rat h_ch;
    Rat h_ne;
    std::map<int, Rat> kappa;  // per grade-1/2 positive root index
};

namespace detail {
inline Rat theta_fn(const Rat& x) {  // step function with theta(0) = 1/2
    if (x > 0) return Rat(1);
    if (x == 0) return rat(1, 2);
    return Rat(0);
}
}  // namespace detail

inline VacuumShifts vacuum_shifts(const AlgebraData& A, const TwistAssignment& t) {
    GradationData G = minimal_gradation(A);
    VacuumShifts V;
    V.h_ch = 0;
    V.h_ne = 0;
    for (int i : G.delta_half) {
        const auto& r = A.positive_roots[i];
        Rat e = t.eps[i];
        Rat sign = Rat(r.mult) * (r.odd ? Rat(-1) : Rat(1));
        V.h_ch += sign * e * e / 2;
        V.h_ne -= sign * (e - 1) * (e - 2 * detail::theta_fn(e - rat(1, 2))) / 4;

        Rat kap(0);
        if (e > rat(1, 2))
            kap = 1;
        else if (e == rat(1, 2)) {
            bool plus = std::find(G.delta_half_plus.begin(), G.delta_half_plus.end(), i) !=
                        G.delta_half_plus.end();
            kap = plus ? Rat(1) : Rat(0);
        }
        V.kappa[i] = kap;
    }
    return V;
}

/// q-value of the shift between the affine and W-algebra natural weights:
/// lambda_nat = Lambda + (1/2) sum over grade-1/2 roots of (-1)^p alpha (eps + kappa).
inline Rat natural_shift_q(const AlgebraData& A, const TwistAssignment& t) {
    GradationData G = minimal_gradation(A);
    VacuumShifts V = vacuum_shifts(A, t);
    Rat s(0);
    for (int i : G.delta_half) {
        const auto& r = A.positive_roots[i];
        Rat sign = Rat(r.mult) * (r.odd ? Rat(-1) : Rat(1));
        s += sign * A.charge(r) * (t.eps[i] + V.kappa[i]) / 2;
    }
    return s;
}

/// sum over positive roots of (-1)^p eps(1-eps), multiplicity weighted
inline Rat eps_casimir_sum(const AlgebraData& A, const TwistAssignment& t) {
    Rat s(0);
    for (size_t i = 0; i < A.positive_roots.size(); ++i) {
        const auto& r = A.positive_roots[i];
        Rat sign = Rat(r.mult) * (r.odd ? Rat(-1) : Rat(1));
        s += sign * t.eps[i] * (1 - t.eps[i]);
    }
    return s;
}

inline WWeight lambda_to_weights(const AlgebraData& A, const TwistAssignment& t,
                                 const AffineWeight& w) {
    Rat hv = dual_coxeter(A);
    TwistedRho tr = twisted_rho(A, t);
    VacuumShifts V = vacuum_shifts(A, t);

    // (lambda | lambda + 2 rho_tilde)
    Rat lam_sq = A.metric_q * w.lambda_nat_q * w.lambda_nat_q +
                 w.lambda_theta * w.lambda_theta / 2;
    Rat cross = 2 * (A.metric_q * w.lambda_nat_q * tr.rho_tilde_nat +
                     w.lambda_theta * tr.rho_tilde.a);
    Poly num = Poly(lam_sq + cross) + Poly(eps_casimir_sum(A, t)) * poly_k();
    Poly den = Poly(2) * (poly_k() + Poly(hv));

    WWeight out;
    out.q = w.lambda_nat_q - natural_shift_q(A, t);
    out.h = RatFunc(num, den) + RatFunc(V.h_ch + V.h_ne - w.lambda_theta / 2);
    return out;
}

/// Specializes h at numeric k; the critical level is a pole.
inline Rat specialize_h(const AlgebraData& A, const WWeight& w, const Rat& kval) {
    if (kval == -dual_coxeter(A))
        throw std::domain_error(A.name + ": critical level k = " + rat_str(kval));
    return w.h.eval(kval);
}

inline RatFunc central_charge(const AlgebraData& A) {
    Rat hv = dual_coxeter(A);
    RatFunc k = RatFunc::k();
    RatFunc sug = RatFunc(poly_k() * A.sdim(), poly_k() + Poly(hv));
    return sug - RatFunc(Rat(6)) * k + RatFunc(A.sdim_half() / 2 - 2);
}

inline Rat central_charge_at(const AlgebraData& A, const Rat& kval) {
    if (kval == -dual_coxeter(A))
        throw std::domain_error(A.name + ": critical level k = " + rat_str(kval));
    return central_charge(A).eval(kval);
}

// Closed forms for the two distinguished sectors, used to cross-check the
// general map.
inline WWeight ns_weights_closed_form(const AlgebraData& A, const AffineWeight& w) {
    Rat hv = dual_coxeter(A);
    WeylVectors W = weyl_vectors(A);
    Rat lam_sq = A.metric_q * w.lambda_nat_q * w.lambda_nat_q +
                 w.lambda_theta * w.lambda_theta / 2;
    Rat cross = 2 * (A.metric_q * w.lambda_nat_q * A.charge(W.rho) +
                     w.lambda_theta * W.rho.a);
    WWeight out;
    out.q = w.lambda_nat_q;
    out.h = RatFunc(Poly(lam_sq + cross), Poly(2) * (poly_k() + Poly(hv))) +
            RatFunc(-w.lambda_theta / 2);
    return out;
}

inline WWeight ramond_weights_closed_form(const AlgebraData& A, const AffineWeight& w) {
    Rat hv = dual_coxeter(A);
    WeylVectors W = weyl_vectors(A);
    Rat lam_sq = A.metric_q * w.lambda_nat_q * w.lambda_nat_q +
                 w.lambda_theta * w.lambda_theta / 2;
    Rat cross = 2 * (A.metric_q * w.lambda_nat_q * A.charge(W.rho0) +
                     w.lambda_theta * W.rho0.a);
    Rat sd = A.sdim_half();
    Poly K = poly_k() + Poly(hv);
    WWeight out;
    out.q = w.lambda_nat_q - W.rho_half_nat;
    out.h = RatFunc(Poly(lam_sq + cross), Poly(2) * K) + RatFunc(sd / 16) +
            RatFunc(Poly(sd) * poly_k(), Poly(8) * K) -
            RatFunc(Poly(w.lambda_theta / 2) * (K - Poly(1)), K);
    return out;
}

}  // namespace wkac
