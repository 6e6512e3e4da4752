#include <catch2/catch_amalgamated.hpp>

#include "wkac/determinant.hpp"

using namespace wkac;

namespace {
DetContext ctx_for(const std::string& name, bool ramond) {
    const auto& A = load_algebra(name);
    return make_det_context(A, ramond ? ramond_sector(A) : ns_sector(A));
}
}  // namespace

TEST_CASE("affine linear factors") {
    const auto& osp12 = load_algebra("osp(1|2)");
    AffineWeight zero{Rat(0), Rat(0)};
    // untwisted, highest root, n = m = 1: k + 2h' - 2
    DetContext ns = ctx_for("osp(1|2)", false);
    Poly phi = affine_phi(ns, osp12.theta(), Rat(1), Rat(1), zero);
    CHECK(phi == poly_k() + Poly(Rat(2) * dual_coxeter(osp12) - 2));
    // half-twisted: (rho_tilde|theta) = 1 gives k + h'
    DetContext ram = ctx_for("osp(1|2)", true);
    Poly phir = affine_phi(ram, osp12.theta(), Rat(1), Rat(1), zero);
    CHECK(phir == poly_k() + Poly(dual_coxeter(osp12)));
    // imaginary root
    CHECK(affine_phi(ns, std::nullopt, Rat(1), Rat(1), zero) ==
          poly_k() + Poly(dual_coxeter(osp12)));
}

TEST_CASE("factor pair product identity") {
    // N_{n,m} * (-(k+h')(a|th)^2) = phi^a_{n,m-(a|th)/2} * phi^abar_{n,m+(a|th)/2}
    // after the weight map, checked numerically on a rational grid
    for (const std::string name : {"sl(2|1)", "so(5)", "G_2"}) {
        const auto& A = load_algebra(name);
        GradationData G = minimal_gradation(A);
        for (int ramond = 0; ramond <= 1; ++ramond) {
            TwistAssignment t = ramond ? ramond_sector(A) : ns_sector(A);
            DetContext ctx = make_det_context(A, t);
            TwistedRho tr = twisted_rho(A, t);
            for (int i : G.delta_half) {
                const RootVec& alpha = A.positive_roots[i];
                Rat at = A.bilinear(alpha, A.theta());
                RootVec bar{alpha.a - at, alpha.b, alpha.odd, alpha.tag, 1};
                for (const AffineWeight& w :
                     {AffineWeight{rat(1, 2), Rat(1)}, AffineWeight{Rat(2), rat(-1, 2)}}) {
                    WWeight ww = lambda_to_weights(A, t, w);
                    Rat n = 2, m = rat(3, 2);
                    Poly phi1 = affine_phi(ctx, alpha, n, m - at / 2, w);
                    Poly phi2 = affine_phi(ctx, bar, n, m + at / 2, w);
                    RawFactor fac =
                        factor_delta_half(ctx, A.charge(alpha), A.bilinear(alpha, alpha), n, m);
                    Poly sub = fac.num.substitute(VQ, Poly(ww.q));
                    // fac.num = 4(k+h') N and N (k+h') (a|th)^2 = -phi1 phi2
                    for (const Rat& kv : {rat(1, 3), Rat(2), rat(-5, 2)}) {
                        if (kv == -dual_coxeter(A)) continue;
                        std::array<Rat, kNumVars> pt{};
                        pt[VK] = kv;
                        pt[VH] = ww.h.eval(kv);
                        INFO(name << " ramond=" << ramond << " root " << root_label(A, i)
                                  << " k=" << rat_str(kv));
                        CHECK(sub.eval(pt) * (at * at) ==
                              Rat(-4) * phi1.eval(pt) * phi2.eval(pt));
                    }
                }
            }
        }
    }
}

TEST_CASE("sl(2|1) level one-half factors") {
    DetContext ns = ctx_for("sl(2|1)", false);
    // alpha1 at n=1, m=1/2: h + q/2; alpha2 gives h - q/2
    RawFactor f1 = factor_delta_half(ns, Rat(1), Rat(0), Rat(1), rat(1, 2));
    RawFactor f2 = factor_delta_half(ns, Rat(-1), Rat(0), Rat(1), rat(1, 2));
    CHECK(f1.canonical() == (poly_h() + Poly(rat(1, 2)) * poly_q()).primitive());
    CHECK(f2.canonical() == (poly_h() - Poly(rat(1, 2)) * poly_q()).primitive());
}

TEST_CASE("merged half-root factor") {
    DetContext ns = ctx_for("osp(1|2)", false);
    CHECK(merged_half_root_factor(ns, 1, 1).canonical() == poly_h());
    CHECK_THROWS_AS(merged_half_root_factor(ns, 1, 2), std::invalid_argument);
    DetContext ram = ctx_for("osp(1|2)", true);
    // nu_{2,1} = h - ((k+1/2)^2 - (k+1)^2)/(4(k+3/2)) - 1/16
    RawFactor nu21 = merged_half_root_factor(ram, 2, 1);
    Poly K = poly_k() + Poly(rat(3, 2));
    Poly inner = K - Poly(1);
    Poly kp1 = poly_k() + Poly(1);
    Poly expect = poly_h() * 4 * K - (inner * inner - kp1 * kp1) - Poly(rat(1, 16)) * 4 * K;
    CHECK(nu21.canonical() == expect.primitive());
    CHECK_THROWS_AS(merged_half_root_factor(ram, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(merged_half_root_factor(ctx_for("sl(2|1)", false), 1, 1),
                    std::invalid_argument);
}

TEST_CASE("assembled determinants at small weight spaces") {
    const auto& osp12 = load_algebra("osp(1|2)");
    DetContext ns = ctx_for("osp(1|2)", false);
    PartitionTable table(osp12, ns_sector(osp12), Rat(4));

    FactoredDeterminant d0 = assemble_determinant(ns, {Rat(0), Rat(0)}, table);
    CHECK(d0.factors.empty());
    CHECK(d0.prefactor_exponent == 0);

    FactoredDeterminant d = assemble_determinant(ns, {Rat(0), rat(1, 2)}, table);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].canonical == poly_h());
    CHECK(d.factors[0].exponent == 1);
    CHECK(d.prefactor_exponent == 0);  // rank 1

    const auto& sl21 = load_algebra("sl(2|1)");
    DetContext ns2 = ctx_for("sl(2|1)", false);
    PartitionTable table2(sl21, ns_sector(sl21), Rat(4));
    FactoredDeterminant dp = assemble_determinant(ns2, {Rat(1), rat(1, 2)}, table2);
    REQUIRE(dp.factors.size() == 1);
    CHECK(dp.factors[0].canonical == (Poly(2) * poly_h() + poly_q()).primitive());
    FactoredDeterminant dm = assemble_determinant(ns2, {Rat(-1), rat(1, 2)}, table2);
    REQUIRE(dm.factors.size() == 1);
    CHECK(dm.factors[0].canonical == (Poly(2) * poly_h() - poly_q()).primitive());
}

TEST_CASE("assembled exponents are positive and factors h-regular") {
    for (const auto& name : algebra_names()) {
        const auto& A = load_algebra(name);
        for (int ram = 0; ram <= 1; ++ram) {
            TwistAssignment t = ram ? ramond_sector(A) : ns_sector(A);
            DetContext ctx = make_det_context(A, t);
            PartitionTable table(A, t, Rat(3));
            for (Rat lev(0); lev <= 2; lev += rat(1, 2))
                for (Rat ch(-2); ch <= 2; ch += rat(1, 2)) {
                    FactoredDeterminant f = assemble_determinant(ctx, {ch, lev}, table);
                    for (const auto& fac : f.factors) {
                        INFO(name << " ram=" << ram << " (" << rat_str(ch) << ","
                                  << rat_str(lev) << ") " << fac.label);
                        CHECK(fac.exponent > 0);
                        int dh = fac.canonical.degree(VH);
                        CHECK((dh == 0 || dh == 1));
                    }
                    CHECK(f.prefactor_exponent >= 0);
                }
        }
    }
}

TEST_CASE("closed-form factor certification") {
    for (const auto& name : algebra_names())
        for (int ram = 0; ram <= 1; ++ram) {
            CheckReport rep = closed_form_check(load_algebra(name), ram != 0, 3);
            CHECK(!rep.lines.empty());
            for (const auto& line : rep.lines) {
                INFO(line.name << " :: " << line.detail);
                CHECK(line.pass);
            }
        }
}

TEST_CASE("general displays specialize to the sector closed forms") {
    for (const auto& name : algebra_names()) {
        CheckReport rep = specialization_check(load_algebra(name), 2);
        for (const auto& line : rep.lines) {
            INFO(line.name << " :: " << line.detail);
            CHECK(line.pass);
        }
    }
}

TEST_CASE("grade-0 factors appear on both sides of the root") {
    // the determinant carries two grade-0 products, one per sign of the root;
    // both must be populated on a weight space that admits either drop
    const auto& so5 = load_algebra("so(5)");
    DetContext ctx = ctx_for("so(5)", false);
    PartitionTable table(so5, ns_sector(so5), Rat(3));
    FactoredDeterminant f = assemble_determinant(ctx, {Rat(0), Rat(2)}, table);
    bool plus = false, minus = false;
    for (const auto& fac : f.factors) {
        if (fac.label.rfind("+alpha2", 0) == 0) plus = true;
        if (fac.label.rfind("-alpha2", 0) == 0) minus = true;
        if (fac.canonical.degree(VH) == 0) {
            // grade-0 factors are independent of h and linear in q
            CHECK(fac.canonical.degree(VQ) == 1);
        }
    }
    CHECK(plus);
    CHECK(minus);
}

TEST_CASE("isotropic collapse equals the alternating partition sum") {
    // sum over n of (-1)^(n+1) P(eta - n*root) telescopes into the exclusion
    // count P^root(eta - root) for an isotropic odd root
    for (const std::string name : {"sl(2|1)", "psl(2|2)", "osp(3|2)"}) {
        const auto& A = load_algebra(name);
        for (int ram = 0; ram <= 1; ++ram) {
            TwistAssignment t = ram ? ramond_sector(A) : ns_sector(A);
            PartitionTable table(A, t, Rat(4));
            for (const WRoot& r : positive_w_roots(A, t, Rat(2))) {
                if (!r.odd || r.charge == 0) continue;
                for (Rat lev(0); lev <= 2; lev += rat(1, 2))
                    for (Rat ch(-2); ch <= 2; ch += rat(1, 2)) {
                        Eta e{ch, lev};
                        Int alternating = 0;
                        for (long n = 1;; ++n) {
                            Eta shifted{ch - Rat(n) * r.charge, lev - Rat(n) * r.level};
                            if (shifted.level < 0 && r.level > 0) break;
                            if (r.level == 0 && n > 12) break;
                            Int p = table.count(shifted);
                            alternating += (n % 2 == 1) ? p : -p;
                        }
                        Eta first{ch - r.charge, lev - r.level};
                        INFO(name << " ram=" << ram << " root=(" << rat_str(r.charge) << ","
                                  << rat_str(r.level) << ") eta=(" << rat_str(ch) << ","
                                  << rat_str(lev) << ")");
                        CHECK(alternating == table.count_excluding(r, first));
                    }
            }
        }
    }
}

TEST_CASE("merged families equal the raw signed product") {
    // accumulate the unmerged factors with their parity signs; cancellations
    // happen where canonical forms collide, and the survivors must reproduce
    // the assembled determinant exactly
    for (const std::string name : {"osp(1|2)", "osp(3|2)", "osp(1|4)"}) {
        const auto& A = load_algebra(name);
        GradationData G = minimal_gradation(A);
        for (int ram = 0; ram <= 1; ++ram) {
            TwistAssignment t = ram ? ramond_sector(A) : ns_sector(A);
            DetContext ctx = make_det_context(A, t);
            PartitionTable table(A, t, Rat(4));
            for (Rat lev(0); lev <= 2; lev += rat(1, 2))
                for (Rat ch(-1); ch <= 1; ch += rat(1, 2)) {
                    Eta eta{ch, lev};
                    std::map<Poly, Int> raw;
                    auto accum = [&](const RawFactor& f, const Int& e) {
                        if (e == 0) return;
                        raw[f.canonical()] += e;
                        if (raw[f.canonical()] == 0) raw.erase(f.canonical());
                    };
                    // highest-root and half-root families, raw
                    for (long n = 1; Rat(n) <= 2 * lev + 2; ++n)
                        for (long m = 1; Rat(m) <= 2 * lev + 2; ++m) {
                            if (Rat(n * m) <= lev)
                                accum(factor_theta(ctx, Rat(n), Rat(m)),
                                      table.count({ch, lev - Rat(n * m)}));
                        }
                    if (G.theta_half) {
                        int i = *G.theta_half;
                        const RootVec& th2 = A.positive_roots[i];
                        Rat base = mod1(t.eps[i] + rat(1, 2));
                        if (base == 0) base = 1;  // theta/2 never sits on the plus side
                        for (Rat m = base; m <= lev * 2 + 2; m += 1)
                            for (long n = 1; Rat(n) * m <= lev; ++n) {
                                Int p = table.count({ch, lev - Rat(n) * m});
                                accum(factor_delta_half(ctx, Rat(0),
                                                        A.bilinear(th2, th2), Rat(n), m),
                                      (n % 2 == 1) ? p : -p);
                            }
                    }
                    // grade-0 families, raw (odd roots signed, doubles unrestricted)
                    for (int i : G.delta0_plus) {
                        const RootVec& beta = A.positive_roots[i];
                        Rat x = A.charge(beta), nrm = A.bilinear(beta, beta);
                        for (int side = 0; side < 2; ++side) {
                            Rat sx = side ? -x : x;
                            Rat base = side ? mod1(-t.eps[i]) : mod1(t.eps[i]);
                            if (side && base == 0) base = 1;
                            for (Rat m = base; m <= lev; m += 1)
                                for (long n = 1; Rat(n) * m <= lev + 6; ++n) {
                                    if (m == 0 && n > 12) break;
                                    if (m > 0 && Rat(n) * m > lev) break;
                                    Int p = table.count(
                                        {ch - Rat(n) * sx, lev - Rat(n) * m});
                                    Int e = (!beta.odd || n % 2 == 1) ? p : -p;
                                    accum(factor_delta0(ctx, sx, nrm, Rat(n), m), e);
                                }
                        }
                    }
                    // half families other than theta/2 (isotropic via exclusion,
                    // even ones plain), mirroring the assembler
                    std::vector<int> half;
                    for (int i : G.delta_half_plus) half.push_back(i);
                    for (int i : G.delta_half_minus) half.push_back(i);
                    for (int i : half) {
                        const RootVec& alpha = A.positive_roots[i];
                        Rat x = A.charge(alpha), nrm = A.bilinear(alpha, alpha);
                        bool plus = std::find(G.delta_half_plus.begin(),
                                              G.delta_half_plus.end(),
                                              i) != G.delta_half_plus.end();
                        Rat base = mod1(t.eps[i] + rat(1, 2));
                        if (base == 0 && !plus) base = 1;
                        for (Rat m = base; m <= lev; m += 1) {
                            if (nrm == 0) {
                                WRoot excl{x, m, true, alpha.mult};
                                accum(factor_delta_half(ctx, x, nrm, Rat(1), m),
                                      table.count_excluding(excl, {ch - x, lev - m}));
                            } else {
                                for (long n = 1; m > 0 && Rat(n) * m <= lev; ++n)
                                    accum(factor_delta_half(ctx, x, nrm, Rat(n), m),
                                          table.count({ch - Rat(n) * x, lev - Rat(n) * m}));
                                if (m == 0)
                                    for (long n = 1; n <= 12; ++n)
                                        accum(factor_delta_half(ctx, x, nrm, Rat(n), m),
                                              table.count({ch - Rat(n) * x, lev}));
                            }
                        }
                    }

                    FactoredDeterminant f = assemble_determinant(ctx, eta, table);
                    std::map<Poly, Int> merged;
                    for (const auto& fac : f.factors) merged[fac.canonical] += fac.exponent;
                    INFO(name << " ram=" << ram << " eta=(" << rat_str(ch) << ","
                              << rat_str(lev) << ")");
                    CHECK(raw == merged);
                }
        }
    }
}
