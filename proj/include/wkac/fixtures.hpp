#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wkac/catalog.hpp"
#include "wkac/poly.hpp"

// Frozen per-algebra closed forms: central charges, determinant factor families
// in the (k, q, h) normalization of each algebra, and the positive-root rows of
// the partition generating functions for the untwisted and half-twisted sectors.
// These are the external reference surface the generic machinery is checked
// against, so they are written out literally rather than derived.

namespace wkac {

inline RatFunc central_charge_fixture(const AlgebraData& A) {
    Poly k = poly_k();
    auto frac = [&](long num_scale, const Rat& shift) {
        return RatFunc(k * Rat(num_scale), k + Poly(shift));
    };
    RatFunc lin = RatFunc(k * Rat(-6));
    switch (A.id) {
        case AlgebraName::osp_1_2: return frac(1, rat(3, 2)) + lin + RatFunc(rat(-5, 2));
        case AlgebraName::sl_2_1:  return lin + RatFunc(Rat(-3));
        case AlgebraName::sl_3:    return frac(8, Rat(3)) + lin + RatFunc(Rat(-1));
        case AlgebraName::osp_3_2: return lin + RatFunc(rat(-7, 2));
        case AlgebraName::so_5:    return frac(10, Rat(3)) + lin + RatFunc(Rat(-1));
        case AlgebraName::psl_2_2: return lin + RatFunc(Rat(-6));
        case AlgebraName::g_2:     return frac(14, Rat(4)) + lin;
        case AlgebraName::osp_1_4: return frac(6, rat(5, 2)) + lin + RatFunc(rat(-3, 2));
    }
    throw std::logic_error("unreachable");
}

// --- partition generating function rows --------------------------------------

/// One factor family of a sector generating product: a root at levels
/// first_level, first_level+1, ... with the given charge and parity.
struct GfRow {
    bool odd;
    int mult;
    Rat charge;
    Rat first_level;
};

inline std::vector<GfRow> gf_rows_fixture(const AlgebraData& A, bool ramond) {
    auto h = [&](long n, long d = 1) { return rat(n, d); };
    Rat half = rat(1, 2);
    std::vector<GfRow> rows;
    auto imag = [&](int mult) { rows.push_back({false, mult, Rat(0), Rat(1)}); };
    switch (A.id) {
        case AlgebraName::osp_1_2:
            imag(1);
            rows.push_back({true, 1, Rat(0), ramond ? Rat(1) : half});
            break;
        case AlgebraName::sl_2_1:
            imag(2);
            rows.push_back({true, 1, Rat(1), ramond ? Rat(0) : half});
            rows.push_back({true, 1, Rat(-1), ramond ? Rat(1) : half});
            break;
        case AlgebraName::sl_3:
            imag(2);
            rows.push_back({false, 1, Rat(1), ramond ? Rat(0) : half});
            rows.push_back({false, 1, Rat(-1), ramond ? Rat(1) : half});
            break;
        case AlgebraName::osp_3_2:
            imag(2);
            rows.push_back({true, 1, Rat(1), ramond ? Rat(0) : half});
            rows.push_back({true, 1, Rat(-1), ramond ? Rat(1) : half});
            rows.push_back({true, 1, Rat(0), ramond ? Rat(1) : half});
            rows.push_back({false, 1, Rat(1), Rat(0)});
            rows.push_back({false, 1, Rat(-1), Rat(1)});
            break;
        case AlgebraName::so_5:
            imag(2);
            rows.push_back({false, 1, half, ramond ? Rat(0) : half});
            rows.push_back({false, 1, -half, ramond ? Rat(1) : half});
            rows.push_back({false, 1, Rat(1), Rat(0)});
            rows.push_back({false, 1, Rat(-1), Rat(1)});
            break;
        case AlgebraName::psl_2_2:
            imag(2);
            rows.push_back({true, 2, half, ramond ? Rat(0) : half});
            rows.push_back({true, 2, -half, ramond ? Rat(1) : half});
            rows.push_back({false, 1, Rat(1), Rat(0)});
            rows.push_back({false, 1, Rat(-1), Rat(1)});
            break;
        case AlgebraName::g_2:
            imag(2);
            rows.push_back({false, 1, h(3, 2), ramond ? Rat(0) : half});
            rows.push_back({false, 1, h(-3, 2), ramond ? Rat(1) : half});
            rows.push_back({false, 1, half, ramond ? Rat(0) : half});
            rows.push_back({false, 1, -half, ramond ? Rat(1) : half});
            rows.push_back({false, 1, Rat(1), Rat(0)});
            rows.push_back({false, 1, Rat(-1), Rat(1)});
            break;
        case AlgebraName::osp_1_4:
            imag(2);
            rows.push_back({true, 1, half, Rat(0)});
            rows.push_back({true, 1, -half, Rat(1)});
            rows.push_back({true, 1, Rat(0), ramond ? Rat(1) : half});
            rows.push_back({false, 1, half, ramond ? Rat(0) : half});
            rows.push_back({false, 1, -half, ramond ? Rat(1) : half});
            rows.push_back({false, 1, Rat(1), Rat(0)});
            rows.push_back({false, 1, Rat(-1), Rat(1)});
            break;
    }
    return rows;
}

// --- determinant factor families ----------------------------------------------

struct FixtureFamily {
    std::string label;
    enum class Target { theta, theta_merged, delta0, delta0_merged, half } target;
    int root_index = -1;   // positive-root index for delta0/half targets
    bool negative = false; // negative grade-0 side
    bool n_is_one = false; // isotropic families carry n = 1 only
    Rat m_base;            // first admissible m
    std::optional<int> mn_parity;  // merged lattices: (m - n) mod 2 constraint
    int exponent_mult = 1;
    std::function<Poly(const Rat& n, const Rat& m)> num;
    int den_pow = 0;  // power of 4(k + h_dual) cleared into num
};

namespace fixdetail {

inline Poly P(const Rat& r) { return Poly(r); }
inline Poly P(long v) { return Poly(Rat(v)); }

}  // namespace fixdetail

/// Literal factor displays per algebra, at sector parameter eps (= 0 untwisted,
/// 1/2 half-twisted) resp. sigma for the algebras with a discrete parameter.
inline std::vector<FixtureFamily> fixture_families(const AlgebraData& A, bool ramond) {
    using fixdetail::P;
    using T = FixtureFamily::Target;
    Poly h = poly_h(), q = poly_q(), k = poly_k();
    Rat half = rat(1, 2);
    std::vector<FixtureFamily> fams;

    switch (A.id) {
        case AlgebraName::osp_1_2: {
            Rat eps = ramond ? half : Rat(0);
            Poly K = k + P(rat(3, 2));
            fams.push_back({"nu", T::theta_merged, -1, false, false, Rat(1),
                            ramond ? 1 : 0, 1,
                            [=](const Rat& n, const Rat& m) {
                                Poly inner = P(m) * K - P(n / 2);
                                return h * 4 * K - (inner * inner - (k + P(1)) * (k + P(1)))
                                       - P(eps / 8) * 4 * K;
                            },
                            1});
            break;
        }
        case AlgebraName::sl_2_1: {
            Rat eps = ramond ? half : Rat(0);
            Poly K = k + P(1);
            Poly qe = q - P(eps);
            fams.push_back({"theta", T::theta, -1, false, false, Rat(1), std::nullopt, 1,
                            [=](const Rat& n, const Rat& m) {
                                Poly inner = P(m) * K - P(n);
                                return h * 4 * K -
                                       (inner * inner - qe * qe - (k + P(1)) * (k + P(1))) -
                                       P(eps * eps / 2) * 4 * K;
                            },
                            1});
            auto iso = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    (void)n;
                    Poly v = h - P(m) * (P(m) * K - P(Rat(sign)) * qe) -
                             P(eps * eps / 2) + P(rat(1, 4)) * K;
                    return v * 4 * K;
                };
            };
            fams.push_back({"alpha1", T::half, 0, false, true, half - eps, std::nullopt, 1,
                            iso(+1), 1});
            fams.push_back({"alpha2", T::half, 1, false, true, half + eps, std::nullopt, 1,
                            iso(-1), 1});
            break;
        }
        case AlgebraName::sl_3: {
            Rat eps = ramond ? half : Rat(0);
            Poly K = k + P(3);
            Poly qe = q + P(eps);
            Poly tail = P(3) * qe * qe - (k + P(1)) * (k + P(1));
            auto shared = [=](Poly inner) {
                return h * 4 * K - (inner * inner + tail) + P(eps * eps / 2) * 4 * K;
            };
            fams.push_back({"theta", T::theta, -1, false, false, Rat(1), std::nullopt, 1,
                            [=](const Rat& n, const Rat& m) {
                                return shared(P(m) * K - P(n));
                            },
                            1});
            auto wing = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    return shared(P(2 * m) * K - P(2 * n) + P(Rat(3 * sign)) * qe);
                };
            };
            fams.push_back({"alpha1", T::half, 0, false, false, half - eps, std::nullopt, 1,
                            wing(+1), 1});
            fams.push_back({"alpha2", T::half, 1, false, false, half + eps, std::nullopt, 1,
                            wing(-1), 1});
            break;
        }
        case AlgebraName::osp_3_2: {
            Rat sig = ramond ? half : Rat(0);
            Poly K = k + P(half);
            Poly qs = q + P(half - sig);
            Poly outer = P(rat(1, 4)) * k + P(3 * (1 - sig) / 8);
            fams.push_back({"nu", T::theta_merged, -1, false, false, Rat(1),
                            ramond ? 1 : 0, 1,
                            [=](const Rat& n, const Rat& m) {
                                Poly inner = P(m) * K - P(n / 2);
                                return (h + outer) * 4 * K - (inner * inner - qs * qs);
                            },
                            1});
            auto iso = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    (void)n;
                    Poly v = h - P(m * m) * K - P(Rat(sign)) * P(m) * qs + outer;
                    return v * 4 * K;
                };
            };
            fams.push_back({"alpha3", T::half, 2, false, true, half - sig, std::nullopt, 1,
                            iso(-1), 1});
            fams.push_back({"alpha1", T::half, 0, false, true, half + sig, std::nullopt, 1,
                            iso(+1), 1});
            auto zero = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    return P(Rat(-sign)) * qs * half + P(m) * K + P(n / 4);
                };
            };
            fams.push_back({"+alpha2", T::delta0, 1, false, false, Rat(0), std::nullopt, 1,
                            zero(+1), 0});
            fams.push_back({"-alpha2", T::delta0, 1, true, false, Rat(1), std::nullopt, 1,
                            zero(-1), 0});
            break;
        }
        case AlgebraName::so_5: {
            Rat eps = ramond ? half : Rat(0);
            Poly K = k + P(3);
            Poly qe = P(2) * q + P(1 + eps);
            Poly tail = qe * qe - k * k - P(2) * k - P(2);
            auto shared = [=](Poly inner) {
                return h * 4 * K - (inner * inner + tail) + P(eps * eps / 2) * 4 * K;
            };
            fams.push_back({"theta", T::theta, -1, false, false, Rat(1), std::nullopt, 1,
                            [=](const Rat& n, const Rat& m) {
                                return shared(P(m) * K - P(n));
                            },
                            1});
            auto wing = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    return shared(P(Rat(-sign)) * qe + P(2 * m) * K - P(n));
                };
            };
            fams.push_back({"alpha1", T::half, 0, false, false, half + eps, std::nullopt, 1,
                            wing(+1), 1});
            fams.push_back({"alpha3", T::half, 2, false, false, half - eps, std::nullopt, 1,
                            wing(-1), 1});
            auto zero = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    return P(Rat(sign)) * qe + P(m) * K - P(n);
                };
            };
            fams.push_back({"+alpha2", T::delta0, 1, false, false, Rat(0), std::nullopt, 1,
                            zero(+1), 0});
            fams.push_back({"-alpha2", T::delta0, 1, true, false, Rat(1), std::nullopt, 1,
                            zero(-1), 0});
            break;
        }
        case AlgebraName::psl_2_2: {
            Rat eps = ramond ? half : Rat(0);
            Poly K = k;
            Poly qe = q + P(half - eps);
            Poly outer = P(rat(1, 4)) * (k + P(2)) - P(eps * eps);
            fams.push_back({"theta", T::theta, -1, false, false, Rat(1), std::nullopt, 1,
                            [=](const Rat& n, const Rat& m) {
                                Poly inner = k * P(m) - P(n);
                                return (h + outer) * 4 * K -
                                       (inner * inner - P(4) * qe * qe);
                            },
                            1});
            auto iso = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    (void)n;
                    Poly v = h - P(m) * (k * P(m) + P(Rat(2 * sign)) * qe) + outer;
                    return v * 4 * K;
                };
            };
            fams.push_back({"alpha1", T::half, 0, false, true, half + eps, std::nullopt, 2,
                            iso(+1), 1});
            fams.push_back({"alpha4", T::half, 3, false, true, half - eps, std::nullopt, 2,
                            iso(-1), 1});
            auto zero = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    return P(Rat(-2 * sign)) * qe + k * P(m) + P(n);
                };
            };
            fams.push_back({"+alpha3", T::delta0, 2, false, false, Rat(0), std::nullopt, 1,
                            zero(+1), 0});
            fams.push_back({"-alpha3", T::delta0, 2, true, false, Rat(1), std::nullopt, 1,
                            zero(-1), 0});
            break;
        }
        case AlgebraName::g_2: {
            Rat sig = ramond ? half : Rat(0);
            Poly K = k + P(4);
            Poly qs = q + P(2 * sig);
            Poly tail = P(rat(4, 3)) * qs * (qs + P(1)) - (k + P(1)) * (k + P(1));
            auto shared = [=](Poly inner) {
                return h * 4 * K - (inner * inner + tail) + P(sig * sig) * 4 * K;
            };
            fams.push_back({"theta", T::theta, -1, false, false, Rat(1), std::nullopt, 1,
                            [=](const Rat& n, const Rat& m) {
                                return shared(P(m) * K - P(n));
                            },
                            1});
            auto long_wing = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    Poly inner = P(2) * (P(m) * K - P(n) -
                                         P(Rat(sign)) * (qs + P(half)));
                    return shared(inner);
                };
            };
            fams.push_back({"alpha2", T::half, 1, false, false, half + sig, std::nullopt, 1,
                            long_wing(+1), 1});
            fams.push_back({"alpha5", T::half, 4, false, false, half - sig, std::nullopt, 1,
                            long_wing(-1), 1});
            auto short_wing = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    Poly inner = P(2) * (P(m) * K - P(n / 3) -
                                         P(rat(sign, 3)) * (qs + P(half)));
                    return shared(inner);
                };
            };
            fams.push_back({"alpha3", T::half, 2, false, false, half + sig, std::nullopt, 1,
                            short_wing(+1), 1});
            fams.push_back({"alpha4", T::half, 3, false, false, half - sig, std::nullopt, 1,
                            short_wing(-1), 1});
            auto zero = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    return P(rat(2 * sign, 3)) * (qs + P(half)) + P(m) * K - P(n / 3);
                };
            };
            fams.push_back({"+alpha1", T::delta0, 0, false, false, Rat(0), std::nullopt, 1,
                            zero(+1), 0});
            fams.push_back({"-alpha1", T::delta0, 0, true, false, Rat(1), std::nullopt, 1,
                            zero(-1), 0});
            break;
        }
        case AlgebraName::osp_1_4: {
            Rat sig = ramond ? half : Rat(0);
            Poly K = k + P(rat(5, 2));
            Poly qs = P(2) * q + P(sig);
            Poly tail = qs * (qs + P(1)) - (k + P(1)) * (k + P(1));
            fams.push_back({"nu", T::theta_merged, -1, false, false, Rat(1),
                            ramond ? 1 : 0, 1,
                            [=](const Rat& n, const Rat& m) {
                                Poly inner = P(m) * K - P(n / 2);
                                return h * 4 * K - (inner * inner + tail) +
                                       P(sig * sig / 4) * 4 * K;
                            },
                            1});
            auto wing = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    Poly inner = P(2 * m) * K - P(n) + P(Rat(sign)) * (qs + P(half));
                    return h * 4 * K - (inner * inner + tail) + P(sig * sig / 4) * 4 * K;
                };
            };
            fams.push_back({"alpha4", T::half, 3, false, false, half - sig, std::nullopt, 1,
                            wing(+1), 1});
            fams.push_back({"alpha2", T::half, 1, false, false, half + sig, std::nullopt, 1,
                            wing(-1), 1});
            auto zero = [=](int sign) {
                return [=](const Rat& n, const Rat& m) {
                    return P(Rat(sign)) * (qs + P(half)) + P(m) * K - P(n / 2);
                };
            };
            fams.push_back({"+alpha5", T::delta0_merged, 0, false, false, Rat(0), 1, 1,
                            zero(+1), 0});
            fams.push_back({"-alpha5", T::delta0_merged, 0, true, false, Rat(1), 1, 1,
                            zero(-1), 0});
            break;
        }
    }
    return fams;
}

}  // namespace wkac
