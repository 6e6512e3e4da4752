#include <catch2/catch_amalgamated.hpp>

#include "wkac/weights.hpp"

using namespace wkac;

TEST_CASE("vacuum shifts") {
    const auto& osp12 = load_algebra("osp(1|2)");
    VacuumShifts ns = vacuum_shifts(osp12, ns_sector(osp12));
    CHECK(ns.h_ch == 0);
    CHECK(ns.h_ne == 0);
    VacuumShifts r = vacuum_shifts(osp12, ramond_sector(osp12));
    CHECK(r.h_ch == rat(-1, 8));
    CHECK(r.h_ne == rat(1, 16));

    const auto& so5 = load_algebra("so(5)");
    VacuumShifts r5 = vacuum_shifts(so5, ramond_sector(so5));
    CHECK(r5.h_ne == rat(-1, 8));
}

TEST_CASE("kappa follows the half-twist splitting") {
    const auto& sl21 = load_algebra("sl(2|1)");
    GradationData g = minimal_gradation(sl21);
    VacuumShifts v = vacuum_shifts(sl21, ramond_sector(sl21));
    for (int i : g.delta_half_plus) CHECK(v.kappa.at(i) == 1);
    for (int i : g.delta_half_minus) CHECK(v.kappa.at(i) == 0);
    VacuumShifts ns = vacuum_shifts(sl21, ns_sector(sl21));
    for (auto& [i, k] : ns.kappa) CHECK(k == 0);
}

TEST_CASE("central charges match the catalog closed forms") {
    const std::map<std::string, std::pair<Rat, Rat>> probe = {
        // c at k = 1 and k = -3 (regular points for every algebra except checks below)
        {"sl(2|1)", {Rat(-9), Rat(15)}},
        {"psl(2|2)", {Rat(-12), Rat(12)}},
    };
    for (const auto& [name, vals] : probe) {
        const auto& A = load_algebra(name);
        CHECK(central_charge_at(A, Rat(1)) == vals.first);
        CHECK(central_charge_at(A, Rat(-3)) == vals.second);
    }
    const auto& osp12 = load_algebra("osp(1|2)");
    CHECK(central_charge_at(osp12, Rat(1)) == rat(2, 5) - 6 - rat(5, 2));
    CHECK_THROWS_AS(central_charge_at(osp12, rat(-3, 2)), std::domain_error);
}

TEST_CASE("weight map closed forms") {
    // untwisted with zero weight: everything vanishes
    for (const auto& name : algebra_names()) {
        const auto& A = load_algebra(name);
        WWeight w = lambda_to_weights(A, ns_sector(A), {Rat(0), Rat(0)});
        CHECK(w.q == 0);
        CHECK(w.h.is_zero());
    }
    // osp(1|2) half-twisted vacuum: h = -1/16 - k/(8(k+3/2))
    {
        const auto& A = load_algebra("osp(1|2)");
        WWeight w = lambda_to_weights(A, ramond_sector(A), {Rat(0), Rat(0)});
        RatFunc expect = RatFunc(rat(-1, 16)) -
                         RatFunc(poly_k(), Poly(8) * (poly_k() + Poly(rat(3, 2))));
        CHECK(w.h == expect);
    }
    // sl(2|1) half-twisted vacuum: Lambda has charge +1/2
    {
        const auto& A = load_algebra("sl(2|1)");
        WWeight w = lambda_to_weights(A, ramond_sector(A), {Rat(0), Rat(0)});
        CHECK(w.q == rat(1, 2));
        RatFunc expect = RatFunc(rat(-1, 8)) -
                         RatFunc(poly_k(), Poly(4) * (poly_k() + Poly(1)));
        CHECK(w.h == expect);
    }
}

TEST_CASE("general map specializes to the sector closed forms") {
    std::vector<AffineWeight> samples = {
        {Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {rat(1, 2), Rat(1)},
        {Rat(2), rat(-1, 2)}, {rat(-3, 2), rat(3, 4)}};
    for (const auto& name : algebra_names()) {
        const auto& A = load_algebra(name);
        for (const auto& w : samples) {
            WWeight general_ns = lambda_to_weights(A, ns_sector(A), w);
            WWeight closed_ns = ns_weights_closed_form(A, w);
            CHECK(general_ns.q == closed_ns.q);
            CHECK(general_ns.h == closed_ns.h);
            WWeight general_r = lambda_to_weights(A, ramond_sector(A), w);
            WWeight closed_r = ramond_weights_closed_form(A, w);
            CHECK(general_r.q == closed_r.q);
            CHECK(general_r.h == closed_r.h);
        }
    }
}

TEST_CASE("untwisted h is quadratic with the Sugawara leading form") {
    const auto& so5 = load_algebra("so(5)");
    // h(t*lambda) at fixed direction: leading coefficient (lambda|lambda)/(2(k+h'))
    AffineWeight base{Rat(2), Rat(1)};
    Rat lamsq = so5.metric_q * base.lambda_nat_q * base.lambda_nat_q +
                base.lambda_theta * base.lambda_theta / 2;
    auto h_at = [&](long t) {
        AffineWeight w{base.lambda_theta * t, base.lambda_nat_q * t};
        return lambda_to_weights(so5, ns_sector(so5), w).h.eval(Rat(2));
    };
    // finite differences: second difference / 2 = quadratic coefficient
    Rat second = (h_at(2) - 2 * h_at(1) + h_at(0)) / 2;
    CHECK(second == lamsq / (2 * (Rat(2) + dual_coxeter(so5))));
}

TEST_CASE("mirror family reflects the weight-map shift") {
    // exchanging eps with 1 - eps on the pair (alpha, theta - alpha) mirrors the
    // charge axis; kappa makes the natural-weight shift exactly odd under it
    const auto& sl21 = load_algebra("sl(2|1)");
    auto shift = [&](const Rat& e) {
        return natural_shift_q(sl21,
                               make_sector(sl21, SectorFamily{e, Rat(0), Rat(0), false, false}));
    };
    for (long n : {1L, 2L, 3L}) CHECK(shift(rat(n, 8)) == -shift(Rat(1) - rat(n, 8)));
    CHECK(shift(rat(1, 8)) == rat(1, 8) - 1);  // direct evaluation of the kappa table
    CHECK(shift(rat(1, 2)) == rat(-1, 2));     // continuous through the half-twisted point
}
