#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include <nlohmann/json.hpp>

#include "wkac/catalog.hpp"
#include "wkac/weights.hpp"

using namespace wkac;

TEST_CASE("load by name and alias") {
    CHECK(load_algebra("sl(2|1)").name == "sl(2|1)");
    CHECK(load_algebra("G2").name == "G_2");
    CHECK_THROWS_AS(load_algebra("e8"), std::invalid_argument);
}

TEST_CASE("root counts and parities") {
    const auto& sl21 = load_algebra("sl(2|1)");
    int even = 0, odd = 0;
    for (const auto& r : sl21.all_roots()) (r.odd ? odd : even) += r.mult;
    CHECK(even == 2);
    CHECK(odd == 4);

    const auto& g2 = load_algebra("G_2");
    CHECK(g2.all_roots().size() == 12);
    CHECK(g2.bilinear(g2.positive_roots[0], g2.positive_roots[0]) == rat(2, 3));
    CHECK(g2.bilinear(g2.positive_roots[1], g2.positive_roots[1]) == 2);
    CHECK(g2.bilinear(g2.positive_roots[0], g2.positive_roots[1]) == -1);

    const auto& psl = load_algebra("psl(2|2)");
    even = odd = 0;
    for (const auto& r : psl.all_roots()) (r.odd ? odd : even) += r.mult;
    CHECK(even == 4);
    CHECK(odd == 8);
    CHECK(psl.even_dim == 6);
    CHECK(psl.odd_dim == 8);
}

TEST_CASE("bilinear form basics") {
    for (const auto& name : algebra_names()) {
        const auto& A = load_algebra(name);
        CHECK(A.bilinear(A.theta(), A.theta()) == 2);
        RootVec zero{Rat(0), Rat(0), false, 0, 1};
        for (const auto& r : A.positive_roots) CHECK(A.bilinear(r, zero) == 0);
    }
    const auto& sl21 = load_algebra("sl(2|1)");
    CHECK(sl21.bilinear(sl21.positive_roots[0], sl21.positive_roots[1]) == 1);
}

TEST_CASE("grades land in the half-integer window") {
    for (const auto& name : algebra_names()) {
        const auto& A = load_algebra(name);
        for (const auto& r : A.all_roots()) {
            Rat g = A.grade(r);
            bool in_window = g == -1 || g == rat(-1, 2) || g == 0 || g == rat(1, 2) || g == 1;
            CHECK(in_window);
        }
        CHECK(A.grade(A.theta()) == 1);
    }
    const auto& sl21 = load_algebra("sl(2|1)");
    CHECK(sl21.grade(sl21.positive_roots[0]) == rat(1, 2));
    const auto& so5 = load_algebra("so(5)");
    CHECK(so5.grade(so5.positive_roots[1]) == 0);
}

TEST_CASE("minimal gradation splits match the catalog conventions") {
    const auto& sl21 = load_algebra("sl(2|1)");
    GradationData g = minimal_gradation(sl21);
    REQUIRE(g.delta_half_plus.size() == 1);
    CHECK(root_label(sl21, g.delta_half_plus[0]) == "alpha1");
    CHECK(g.delta0.empty());

    const auto& osp12 = load_algebra("osp(1|2)");
    GradationData g2 = minimal_gradation(osp12);
    CHECK(g2.delta0.empty());
    CHECK(g2.has_theta_half);
    CHECK(g2.delta_half.size() == 1);

    const auto& so5 = load_algebra("so(5)");
    GradationData g3 = minimal_gradation(so5);
    CHECK(g3.delta_half.size() == 2);
    CHECK(g3.delta0_plus.size() == 1);

    // positive grade-0 and grade-1/2 roots carry positive charge
    for (const auto& name : algebra_names()) {
        const auto& A = load_algebra(name);
        GradationData gr = minimal_gradation(A);
        for (int i : gr.delta0_plus) CHECK(A.charge(A.positive_roots[i]) > 0);
        for (int i : gr.delta_half_plus) CHECK(A.charge(A.positive_roots[i]) > 0);
        for (int i : gr.delta_half_minus) CHECK(A.charge(A.positive_roots[i]) < 0);
        // mirror rule: alpha in Delta_1/2 pairs with theta - alpha
        for (int i : gr.delta_half) {
            const auto& r = A.positive_roots[i];
            RootVec mirror{1 - r.a, -r.b, r.odd, 0, 1};
            bool found = false;
            for (int j : gr.delta_half)
                if (A.positive_roots[j].same_vector(mirror)) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("weyl vectors") {
    const auto& osp32 = load_algebra("osp(3|2)");
    WeylVectors w = weyl_vectors(osp32);
    // rho0 = (1/2) alpha2 as a vector; alpha2 = (0, -1) in the stored basis
    CHECK(w.rho0.a == 0);
    CHECK(w.rho0.b == rat(-1, 2));
    // rho_{1/2} = -(1/2) alpha3 with alpha3 = (1/2, -1)
    CHECK(w.rho_half.a == rat(-1, 4));
    CHECK(w.rho_half.b == rat(1, 2));

    const auto& so5 = load_algebra("so(5)");
    WeylVectors w2 = weyl_vectors(so5);
    // rho_{1/2}^nat = (1/2) alpha3^nat; alpha3 = (1/2, 1), charge 1/2
    CHECK(w2.rho_half_nat == rat(1, 4));

    const auto& g2 = load_algebra("G_2");
    WeylVectors w3 = weyl_vectors(g2);
    // rho_{1/2} = (alpha4 + alpha5)/2 = (1/2, 2)
    CHECK(w3.rho_half.a == rat(1, 2));
    CHECK(w3.rho_half.b == 2);

    // recomputing rho from the stored positive system is the identity
    for (const auto& name : algebra_names()) {
        const auto& A = load_algebra(name);
        WeylVectors v = weyl_vectors(A);
        Rat a(0), b(0);
        for (const auto& r : A.positive_roots) {
            Rat wgt = Rat(r.mult) * (r.odd ? Rat(-1) : Rat(1));
            a += wgt * r.a;
            b += wgt * r.b;
        }
        CHECK(v.rho.a == a / 2);
        CHECK(v.rho.b == b / 2);
    }
}

TEST_CASE("dual Coxeter numbers") {
    const std::map<std::string, Rat> expected = {
        {"osp(1|2)", rat(3, 2)}, {"sl(2|1)", Rat(1)},  {"sl(3)", Rat(3)},
        {"osp(3|2)", rat(1, 2)}, {"so(5)", Rat(3)},    {"psl(2|2)", Rat(0)},
        {"G_2", Rat(4)},         {"osp(1|4)", rat(5, 2)}};
    for (const auto& [name, hv] : expected) CHECK(dual_coxeter(load_algebra(name)) == hv);
}

TEST_CASE("simple roots satisfy the finite Weyl-vector property") {
    for (const auto& name : algebra_names()) {
        const auto& A = load_algebra(name);
        WeylVectors w = weyl_vectors(A);
        for (int i : A.simple_indices) {
            const auto& s = A.positive_roots[i];
            CHECK(2 * A.bilinear(w.rho, s) == A.bilinear(s, s));
        }
    }
}

TEST_CASE("structural identities hold for the whole catalog") {
    CHECK(load_algebra("osp(1|2)").sdim_half() == -1);
    CHECK(load_algebra("so(5)").sdim_half() == 2);
    CHECK(load_algebra("psl(2|2)").sdim_half() == -4);
    for (const auto& name : algebra_names()) {
        CheckReport rep = structural_checks(load_algebra(name));
        for (const auto& line : rep.lines) {
            INFO(line.name << ": " << line.detail);
            CHECK(line.pass);
        }
    }
}

TEST_CASE("root system closure respects parity and tags") {
    for (const auto& name : algebra_names()) {
        const auto& A = load_algebra(name);
        auto all = A.all_roots();
        for (const auto& x : all)
            for (const auto& y : all) {
                RootVec sum{x.a + y.a, x.b + y.b, false, x.tag + y.tag, 1};
                for (const auto& z : all)
                    if (z.same_vector(sum) && z.tag == sum.tag)
                        CHECK(z.odd == (x.odd != y.odd));
            }
    }
}

TEST_CASE("catalog fixture file round-trips") {
    std::ifstream in(std::string(WKAC_DATA_DIR) + "/catalog_fixtures.json");
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    REQUIRE(j.at("algebras").size() == 8);
    auto as_rat = [](const nlohmann::json& v) {
        return parse_rat(v.at("num").get<std::string>() + "/" +
                         v.at("den").get<std::string>());
    };
    for (const auto& ja : j.at("algebras")) {
        const auto& A = load_algebra(ja.at("name").get<std::string>());
        CHECK(ja.at("rank").get<int>() == A.rank);
        CHECK(as_rat(ja.at("y_norm")) == A.y_norm);
        CHECK(as_rat(ja.at("dual_coxeter")) == dual_coxeter(A));
        CHECK(as_rat(ja.at("sdim_half")) == A.sdim_half());
        CHECK(ja.at("central_charge").get<std::string>() == central_charge(A).str());
        REQUIRE(ja.at("positive_roots").size() == A.positive_roots.size());
        for (size_t i = 0; i < A.positive_roots.size(); ++i) {
            const auto& jr = ja.at("positive_roots")[i];
            const auto& r = A.positive_roots[i];
            CHECK(as_rat(jr.at("theta_coord")) == r.a);
            CHECK(as_rat(jr.at("u_coord")) == r.b);
            CHECK((jr.at("parity").get<std::string>() == "odd") == r.odd);
            CHECK(jr.at("tag").get<int>() == r.tag);
            CHECK(jr.at("mult").get<int>() == r.mult);
        }
    }
}
