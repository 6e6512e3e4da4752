// wkac: exact structure data and factored Kac-type determinants for minimal
// W-algebras, with a brute-force Verma-module cross-check.
//
//   wkac list                                     catalog overview
//   wkac show <algebra> [--json]                  roots, gradation, invariants
//   wkac weights <algebra> --sector S --lambda a,b [--k RAT] [--json]
//   wkac partitions <algebra> --sector S --max-level N [--gf] [--json]
//   wkac det <algebra> --sector S --eta c,l [--k RAT] [--json]
//   wkac oracle <N1|N2> --sector S --max-level N [--compare] [--json]
//   wkac fixtures [-o FILE]                       catalog fixture JSON
//   wkac verify [--quick]                         full certification battery
//
// Sectors: "ns", "ramond", or "general:eps=1/8[,sigma=1/2][,eps2=1/4]".
// All rationals are exact strings ("3/2"); JSON carries {"num": .., "den": ..}.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wkac/verify.hpp"

using json = nlohmann::ordered_json;
using namespace wkac;

namespace {

json rat_json(const Rat& r) {
    json j;
    j["num"] = r.get_num().get_str();
    j["den"] = r.get_den().get_str();
    return j;
}

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> options;
    bool flag(const std::string& name) const { return options.count(name) > 0; }
    std::string get(const std::string& name, const std::string& fallback = "") const {
        auto it = options.find(name);
        return it == options.end() ? fallback : it->second;
    }
    std::string require(const std::string& name) const {
        auto it = options.find(name);
        if (it == options.end() || it->second.empty())
            throw std::invalid_argument("missing required option --" + name);
        return it->second;
    }
};

Args parse_args(int argc, char** argv, int from) {
    Args a;
    for (int i = from; i < argc; ++i) {
        std::string s = argv[i];
        if (s.rfind("--", 0) == 0) {
            std::string key = s.substr(2);
            auto eq = key.find('=');
            if (eq != std::string::npos) {
                a.options[key.substr(0, eq)] = key.substr(eq + 1);
            } else if (i + 1 < argc && std::string(argv[i + 1]).rfind("--", 0) != 0) {
                a.options[key] = argv[++i];
            } else {
                a.options[key] = "";
            }
        } else if (s == "-o" && i + 1 < argc) {
            a.options["out"] = argv[++i];
        } else {
            a.positional.push_back(s);
        }
    }
    return a;
}

TwistAssignment sector_from_args(const AlgebraData& A, const Args& args) {
    return make_sector(A, parse_sector_spec(args.get("sector", "ns")));
}

std::pair<Rat, Rat> parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected 'a,b' rational pair, got '" + s + "'");
    return {parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
}

int usage(std::ostream& out, int code) {
    out << "usage: wkac <list|show|weights|partitions|det|oracle|fixtures|verify> ...\n"
           "  wkac list\n"
           "  wkac show <algebra> [--json]\n"
           "  wkac weights <algebra> --sector S --lambda a,b [--k RAT] [--json]\n"
           "  wkac partitions <algebra> --sector S --max-level N [--gf] [--json]\n"
           "  wkac det <algebra> --sector S --eta c,l [--k RAT] [--json]\n"
           "  wkac oracle <N1|N2> --sector S --max-level N [--compare] [--json]\n"
           "  wkac fixtures [-o FILE]\n"
           "  wkac verify [--quick]\n"
           "sectors: ns | ramond | general:eps=1/8[,sigma=1/2][,eps2=1/4]\n";
    return code;
}

json algebra_json(const AlgebraData& A) {
    json j;
    j["name"] = A.name;
    j["rank"] = A.rank;
    j["y_norm"] = rat_json(A.y_norm);
    j["charge_unit"] = rat_json(A.charge_unit);
    j["dual_coxeter"] = rat_json(dual_coxeter(A));
    j["sdim"] = rat_json(A.sdim());
    j["sdim_half"] = rat_json(A.sdim_half());
    j["central_charge"] = central_charge(A).str();
    json roots = json::array();
    for (size_t i = 0; i < A.positive_roots.size(); ++i) {
        const auto& r = A.positive_roots[i];
        json jr;
        jr["label"] = root_label(A, static_cast<int>(i));
        jr["theta_coord"] = rat_json(r.a);
        jr["u_coord"] = rat_json(r.b);
        jr["parity"] = r.odd ? "odd" : "even";
        jr["tag"] = r.tag;
        jr["mult"] = r.mult;
        jr["charge"] = rat_json(A.charge(r));
        jr["grade"] = rat_json(A.grade(r));
        roots.push_back(jr);
    }
    j["positive_roots"] = roots;
    json simple = json::array();
    for (int i : A.simple_indices) simple.push_back(root_label(A, i));
    j["simple_roots"] = simple;
    return j;
}

int cmd_list() {
    std::cout << "algebra    rank  h'     central charge\n";
    for (const auto& name : algebra_names()) {
        const auto& A = load_algebra(name);
        std::printf("%-10s %-5d %-6s %s\n", A.name.c_str(), A.rank,
                    rat_str(dual_coxeter(A)).c_str(), central_charge(A).str().c_str());
    }
    return 0;
}

int cmd_show(const Args& args) {
    const auto& A = load_algebra(args.positional.at(0));
    if (args.flag("json")) {
        std::cout << algebra_json(A).dump(2) << "\n";
        return 0;
    }
    std::cout << A.name << ": rank " << A.rank << ", h' = " << rat_str(dual_coxeter(A))
              << ", sdim = " << rat_str(A.sdim()) << ", sdim(g_1/2) = "
              << rat_str(A.sdim_half()) << "\n";
    std::cout << "c(k) = " << central_charge(A).str() << "\n";
    std::cout << "positive roots (theta-coord, u-coord | parity charge grade):\n";
    for (size_t i = 0; i < A.positive_roots.size(); ++i) {
        const auto& r = A.positive_roots[i];
        std::printf("  %-8s (%s, %s)%s  %-4s charge=%-5s grade=%s\n",
                    root_label(A, static_cast<int>(i)).c_str(), rat_str(r.a).c_str(),
                    rat_str(r.b).c_str(), r.tag ? (r.tag > 0 ? " [+]" : " [-]") : "",
                    r.odd ? "odd" : "even", rat_str(A.charge(r)).c_str(),
                    rat_str(A.grade(r)).c_str());
    }
    WeylVectors w = weyl_vectors(A);
    std::cout << "rho = (" << rat_str(w.rho.a) << ", " << rat_str(w.rho.b) << "), rho0 = ("
              << rat_str(w.rho0.a) << ", " << rat_str(w.rho0.b) << "), rho_half = ("
              << rat_str(w.rho_half.a) << ", " << rat_str(w.rho_half.b) << ")\n";
    CheckReport rep = structural_checks(A);
    for (const auto& line : rep.lines)
        std::cout << (line.pass ? "  [ok] " : "  [FAIL] ") << line.name << "\n";
    return rep.all_pass() ? 0 : 1;
}

int cmd_weights(const Args& args) {
    const auto& A = load_algebra(args.positional.at(0));
    TwistAssignment t = sector_from_args(A, args);
    auto [lt, lq] = parse_pair(args.require("lambda"));
    WWeight w = lambda_to_weights(A, t, {lt, lq});
    std::string kopt = args.get("k", "sym");
    if (args.flag("json")) {
        json j;
        j["algebra"] = A.name;
        j["sector"] = t.label;
        j["Lambda"] = rat_json(w.q);
        if (kopt == "sym") {
            j["h_num"] = w.h.num().str();
            j["h_den"] = w.h.den().str();
        } else {
            j["k"] = rat_json(parse_rat(kopt));
            j["h"] = rat_json(specialize_h(A, w, parse_rat(kopt)));
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "Lambda (charge) = " << rat_str(w.q) << "\n";
    if (kopt == "sym")
        std::cout << "h(k) = " << w.h.str() << "\n";
    else
        std::cout << "h(" << kopt << ") = " << rat_str(specialize_h(A, w, parse_rat(kopt)))
                  << "\n";
    return 0;
}

int cmd_partitions(const Args& args) {
    const auto& A = load_algebra(args.positional.at(0));
    TwistAssignment t = sector_from_args(A, args);
    Rat level = parse_rat(args.get("max-level", std::to_string(default_max_level())));
    PartitionTable table(A, t, level);
    if (args.flag("gf")) {
        for (const auto& r : positive_w_roots(A, t, level)) {
            if (r.odd)
                std::printf("(1 + x^{%s} y^{%s})^%d\n", rat_str(r.charge).c_str(),
                            rat_str(r.level).c_str(), r.mult);
            else
                std::printf("(1 - x^{%s} y^{%s})^-%d\n", rat_str(r.charge).c_str(),
                            rat_str(r.level).c_str(), r.mult);
        }
        return 0;
    }
    json rows = json::array();
    if (!args.flag("json")) std::printf("%-10s %-10s count\n", "charge", "level");
    long cd = table.series().charge_denom(), ld = table.series().level_denom();
    for (Rat lev(0); lev <= level; lev += rat(1, ld))
        for (Rat ch = -level * 2 - 1; ch <= level * 2 + 1; ch += rat(1, cd)) {
            Int c = table.count({ch, lev});
            if (c == 0) continue;
            if (args.flag("json")) {
                json row;
                row["charge"] = rat_json(ch);
                row["level"] = rat_json(lev);
                row["count"] = c.get_str();
                rows.push_back(row);
            } else {
                std::printf("%-10s %-10s %s\n", rat_str(ch).c_str(), rat_str(lev).c_str(),
                            c.get_str().c_str());
            }
        }
    if (args.flag("json")) std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_det(const Args& args) {
    const auto& A = load_algebra(args.positional.at(0));
    TwistAssignment t = sector_from_args(A, args);
    auto [ch, lev] = parse_pair(args.require("eta"));
    DetContext ctx = make_det_context(A, t);
    PartitionTable table(A, t, lev + 1);
    FactoredDeterminant f = assemble_determinant(ctx, {ch, lev}, table);
    std::string kopt = args.get("k", "sym");
    auto render = [&](const Poly& p) {
        if (kopt == "sym") return p.str();
        Poly out;
        Rat kv = parse_rat(kopt);
        for (const auto& [e, c] : p.terms()) {
            Rat scaled = c;
            for (int j = 0; j < e[VK]; ++j) scaled *= kv;
            Expo e2 = e;
            e2[VK] = 0;
            out += Poly::term(scaled, e2);
        }
        return out.str();
    };
    if (args.flag("json")) {
        json j;
        j["algebra"] = A.name;
        j["sector"] = t.label;
        j["eta"] = {{"charge", rat_json(ch)}, {"level", rat_json(lev)}};
        j["level_prefactor_exponent"] = f.prefactor_exponent.get_str();
        json facs = json::array();
        for (const auto& fac : f.factors) {
            json jf;
            jf["factor"] = fac.canonical.str();
            jf["exponent"] = fac.exponent.get_str();
            jf["from"] = fac.label;
            json coeffs = json::array();
            for (const auto& [e, c] : fac.canonical.terms()) {
                json term;
                term["h"] = e[VH];
                term["q"] = e[VQ];
                term["k"] = e[VK];
                term["coeff"] = rat_json(c);
                coeffs.push_back(term);
            }
            jf["terms"] = coeffs;
            facs.push_back(jf);
        }
        j["factors"] = facs;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << A.name << " [" << t.label << "] eta=(" << rat_str(ch) << ", "
              << rat_str(lev) << ")\n";
    std::cout << "(k + " << rat_str(dual_coxeter(A)) << ")^"
              << f.prefactor_exponent.get_str() << "\n";
    for (const auto& fac : f.factors)
        std::cout << "(" << render(fac.canonical) << ")^" << fac.exponent.get_str()
                  << "    [" << fac.label << "]\n";
    if (f.factors.empty()) std::cout << "1\n";
    return 0;
}

int cmd_oracle(const Args& args) {
    std::string which = args.positional.at(0);
    OracleKind kind;
    if (which == "N1" || which == "n1")
        kind = OracleKind::N1;
    else if (which == "N2" || which == "n2")
        kind = OracleKind::N2;
    else
        throw std::invalid_argument("oracle expects N1 or N2, got '" + which + "'");
    std::string sector = args.get("sector", "ns");
    bool ramond = sector == "ramond" || sector == "r" || sector == "R";
    if (!ramond && sector != "ns" && sector != "NS")
        throw std::invalid_argument("oracle sectors are ns | ramond");
    Rat max_level = parse_rat(args.get("max-level", kind == OracleKind::N1 ? "2" : "3/2"));
    bool compare = args.flag("compare");

    const AlgebraData& A = oracle_source_algebra(kind);
    TwistAssignment t = ramond ? ramond_sector(A) : ns_sector(A);
    PartitionTable table(A, t, max_level + 1);
    ModeAlgebra alg(kind, ramond ? rat(1, 2) : Rat(0));

    bool all_match = true;
    json rows = json::array();
    for (const Eta& e : oracle_weight_spaces(kind, ramond, max_level)) {
        if (compare) {
            CompareResult r = compare_with_formula(kind, ramond, e, table);
            all_match = all_match && r.match;
            if (args.flag("json")) {
                json row;
                row["eta"] = {{"charge", rat_json(e.charge)}, {"level", rat_json(e.level)}};
                row["dim"] = r.dim;
                row["match"] = r.match;
                row["oracle"] = r.oracle_str;
                row["formula"] = r.formula_str;
                rows.push_back(row);
            } else {
                std::printf("eta=(%s,%s) dim=%zu %s\n", rat_str(e.charge).c_str(),
                            rat_str(e.level).c_str(), r.dim,
                            r.match ? "match" : "MISMATCH");
                if (!r.match)
                    std::printf("  oracle:  %s\n  formula: %s\n", r.oracle_str.c_str(),
                                r.formula_str.c_str());
            }
        } else {
            Poly det = gram_determinant(alg, e);
            if (args.flag("json")) {
                json row;
                row["eta"] = {{"charge", rat_json(e.charge)}, {"level", rat_json(e.level)}};
                row["gram_determinant"] = det.str();
                rows.push_back(row);
            } else {
                std::printf("eta=(%s,%s): %s\n", rat_str(e.charge).c_str(),
                            rat_str(e.level).c_str(), det.str().c_str());
            }
        }
    }
    if (args.flag("json")) std::cout << rows.dump(2) << "\n";
    return all_match ? 0 : 1;
}

int cmd_fixtures(const Args& args) {
    json j;
    json algebras = json::array();
    for (const auto& name : algebra_names())
        algebras.push_back(algebra_json(load_algebra(name)));
    j["algebras"] = algebras;
    std::string out = args.get("out");
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write '" + out + "'");
        f << j.dump(2) << "\n";
    }
    return 0;
}

CheckReport check_fixture_file(const std::string& path) {
    CheckReport rep;
    std::ifstream in(path);
    if (!in.good()) {
        rep.add("fixture file readable: " + path, false, "cannot open");
        return rep;
    }
    json j;
    in >> j;
    auto as_rat = [](const json& v) {
        return parse_rat(v.at("num").get<std::string>() + "/" +
                         v.at("den").get<std::string>());
    };
    for (const auto& ja : j.at("algebras")) {
        const auto& A = load_algebra(ja.at("name").get<std::string>());
        bool ok = ja.at("rank").get<int>() == A.rank &&
                  as_rat(ja.at("dual_coxeter")) == dual_coxeter(A) &&
                  as_rat(ja.at("sdim_half")) == A.sdim_half() &&
                  ja.at("central_charge").get<std::string>() == central_charge(A).str() &&
                  ja.at("positive_roots").size() == A.positive_roots.size();
        for (size_t i = 0; ok && i < A.positive_roots.size(); ++i) {
            const auto& jr = ja.at("positive_roots")[i];
            ok = as_rat(jr.at("theta_coord")) == A.positive_roots[i].a &&
                 as_rat(jr.at("u_coord")) == A.positive_roots[i].b;
        }
        rep.add(A.name + ": matches fixture file", ok, "");
    }
    return rep;
}

int cmd_verify(const Args& args) {
    bool quick = args.flag("quick");
    struct Section {
        std::string name;
        CheckReport rep;
    };
    std::vector<Section> sections;
    if (args.flag("fixtures"))
        sections.push_back({"fixture file", check_fixture_file(args.require("fixtures"))});
    sections.push_back({"catalog identities", check_catalog()});
    sections.push_back({"central charges", check_central_charges()});
    sections.push_back({"twisted rho closed forms", check_twisted_rho_closed_forms()});
    sections.push_back({"weyl vector property", check_rho_conjecture()});
    sections.push_back({"partition engine", check_partitions(quick ? Rat(2) : Rat(4))});
    sections.push_back({"closed-form factors", check_closed_forms(quick ? 2 : 3)});
    sections.push_back({"sector specialization", check_specialization(2)});
    OracleRanges ranges;
    if (quick) {
        ranges.n1_ns = Rat(2);
        ranges.n1_ramond = Rat(2);
        ranges.n2_ns = rat(3, 2);
        ranges.n2_ramond = Rat(1);
    }
    sections.push_back({"oracle certification", check_oracle(ranges)});
    if (!quick) sections.push_back({"vanishing locus", check_vanishing_locus(20)});

    bool all = true;
    for (const auto& s : sections) {
        bool pass = s.rep.all_pass();
        all = all && pass;
        std::printf("[%s] %s (%zu checks)\n", pass ? "ok" : "FAIL", s.name.c_str(),
                    s.rep.lines.size());
        if (!pass)
            for (const auto& line : s.rep.lines)
                if (!line.pass) {
                    std::printf("  first failure: %s -- %s\n", line.name.c_str(),
                                line.detail.c_str());
                    break;
                }
    }
    std::printf("%s\n", all ? "all checks passed" : "verification FAILED");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) return usage(std::cerr, 2);
    std::string cmd = argv[1];
    try {
        Args args = parse_args(argc, argv, 2);
        if (cmd == "list") return cmd_list();
        if (cmd == "show") return cmd_show(args);
        if (cmd == "weights") return cmd_weights(args);
        if (cmd == "partitions") return cmd_partitions(args);
        if (cmd == "det") return cmd_det(args);
        if (cmd == "oracle") return cmd_oracle(args);
        if (cmd == "fixtures") return cmd_fixtures(args);
        if (cmd == "verify") return cmd_verify(args);
        if (cmd == "help" || cmd == "--help" || cmd == "-h") return usage(std::cout, 0);
        std::cerr << "unknown subcommand '" << cmd << "'\n";
        return usage(std::cerr, 2);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n\n";
        return usage(std::cerr, 2);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (...) {
        std::cerr << "error: unexpected failure\n";
        return 1;
    }
}
