// flatsolv command line: every subcommand goes through the shared library's
// C interface and prints either a human-readable rendering or the raw JSON
// payload (--json). Exit codes: 0 ok, 2 no lattice exists, 1 error.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flatsolv.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct CString {
    char* ptr = nullptr;
    ~CString() { fsv_string_free(ptr); }
    char** out() { return &ptr; }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct SpectrumHandle {
    fsv_spectrum* ptr = nullptr;
    ~SpectrumHandle() { fsv_spectrum_free(ptr); }
};

bool g_json = false;

int finish(fsv_status status, const std::string& payload,
           const std::function<void(const json&)>& pretty) {
    if (g_json) {
        json result{{"status", status == FSV_OK            ? "ok"
                               : status == FSV_OBSTRUCTION ? "obstruction"
                                                           : "error"}};
        result["payload"] = payload.empty() ? json(nullptr) : json::parse(payload);
        std::cout << result.dump(2) << "\n";
    } else if (status == FSV_ERROR) {
        json j = payload.empty() ? json{{"error", "unknown error"}} : json::parse(payload);
        std::cerr << "error: " << j.value("error", payload) << "\n";
    } else {
        pretty(json::parse(payload));
    }
    return static_cast<int>(status);
}

int parse_spectrum_arg(const std::string& text, SpectrumHandle& sp) {
    CString err;
    if (fsv_spectrum_parse(text.c_str(), &sp.ptr, err.out()) != FSV_OK)
        return finish(FSV_ERROR, err.str(), {});
    return -1;
}

void print_group(const json& g) { std::cout << g.at("display").get<std::string>(); }

void print_spectrum_line(const json& sp) {
    std::cout << sp.at("text").get<std::string>() << "  (ambient dim "
              << sp.at("ambient_dim").get<int>() << ", group dim " << sp.at("group_dim").get<int>()
              << ")";
}

void print_matrix(const json& m, const std::string& indent) {
    for (const auto& row : m) {
        std::cout << indent << "[";
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) std::cout << ", ";
            if (row[i].is_number_float())
                std::printf("% .6f", row[i].get<double>());
            else
                std::cout << row[i];
        }
        std::cout << "]\n";
    }
}

void print_witness(const json& spec) {
    bool first = true;
    for (const auto& block : spec.at("blocks")) {
        if (!first) std::cout << " x ";
        first = false;
        const std::string type = block.at("type");
        if (type == "almost_abelian")
            std::cout << "block[" << block.at("spectrum").at("text").get<std::string>() << "]";
        else if (type == "e2")
            std::cout << "e2[" << block.at("fraction").get<std::string>() << "]";
        else
            std::cout << "T^" << block.at("dim").get<int>();
    }
    std::cout << "  (dim " << spec.at("dimension").get<int>() << ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flat solvmanifolds: lattices, holonomy, enumeration"};
    app.require_subcommand(0, 1);
    app.add_flag("--json", g_json, "emit machine-readable JSON");
    bool seed_check = false;
    app.add_flag("--seed-check", seed_check, "run the embedded golden-table self-test");

    uint64_t n = 0;
    std::string spectrum_text;
    double tol = 1e-9;
    unsigned dim = 0;
    uint64_t cyclic_order = 0;
    std::vector<uint64_t> abelian_orders;
    bool kahler = false;

    auto* phi = app.add_subcommand("phi", "Euler totient");
    phi->add_option("n", n, "argument")->required();

    auto* hiller = app.add_subcommand("hiller-phi", "additive totient for minimal dimensions");
    hiller->add_option("n", n, "argument")->required();

    auto* cyclo = app.add_subcommand("cyclotomic", "n-th cyclotomic polynomial");
    cyclo->add_option("n", n, "index")->required();

    auto* check = app.add_subcommand("check", "decide lattice existence for a spectrum");
    check->add_option("spectrum", spectrum_text, "e.g. \"s=0;f=1/4\"")->required();

    auto* hol = app.add_subcommand("holonomy", "holonomy group of a certified spectrum");
    hol->add_option("spectrum", spectrum_text, "e.g. \"s=0;f=1/4,1/6\"")->required();

    auto* lattice = app.add_subcommand("lattice", "certified lattice with integer model");
    lattice->add_option("spectrum", spectrum_text, "e.g. \"s=0;f=1/5,2/5\"")->required();
    lattice->add_option("--tol", tol, "residual tolerance (default 1e-9)");

    auto* mindim = app.add_subcommand("min-dim", "minimal dimension with holonomy Z_n");
    mindim->add_option("n", n, "cyclic order, n >= 2")->required();

    auto* construct = app.add_subcommand("construct", "witness with prescribed holonomy");
    auto* opt_cyclic = construct->add_option("--cyclic", cyclic_order, "cyclic order n >= 2");
    auto* opt_abelian =
        construct->add_option("--abelian", abelian_orders, "cyclic orders d1,d2,...")
            ->delimiter(',');
    construct->add_flag("--kahler", kahler, "pad odd dimension with a circle factor");
    opt_cyclic->excludes(opt_abelian);

    auto* enumerate = app.add_subcommand("enumerate", "possible holonomy groups per dimension");
    enumerate->add_option("--dim", dim, "manifold dimension, 3..6")->required();

    auto* platy = app.add_subcommand("platycosms", "the ten compact flat 3-manifolds");

    auto* pairs = app.add_subcommand("pairs-dim5", "admissible two-plane fraction pairs");

    CLI11_PARSE(app, argc, argv);

    if (seed_check) {
        CString out;
        const fsv_status st = fsv_seed_check(out.out());
        return finish(st, out.str(), [](const json& j) {
            for (const auto& c : j.at("checks"))
                std::cout << (c.at("ok").get<bool>() ? "[ ok ] " : "[FAIL] ")
                          << c.at("name").get<std::string>() << "\n";
            std::cout << (j.at("ok").get<bool>() ? "self-test passed" : "self-test FAILED")
                      << "\n";
        });
    }

    if (phi->parsed() || hiller->parsed()) {
        uint64_t out = 0;
        const fsv_status st =
            phi->parsed() ? fsv_euler_phi(n, &out) : fsv_hiller_phi(n, &out);
        const std::string name = phi->parsed() ? "phi" : "hiller_phi";
        if (st != FSV_OK) return finish(st, "{\"error\":\"argument must be >= 1\"}", {});
        json payload{{"n", n}, {name, out}};
        return finish(st, payload.dump(), [&](const json&) { std::cout << out << "\n"; });
    }

    if (cyclo->parsed()) {
        CString out;
        const fsv_status st = fsv_cyclotomic(n, out.out());
        return finish(st, out.str(), [](const json& j) {
            std::cout << "Phi_" << j.at("n").get<uint64_t>() << "(x) = "
                      << j.at("text").get<std::string>() << "\n";
        });
    }

    if (check->parsed() || hol->parsed() || lattice->parsed()) {
        SpectrumHandle sp;
        const int early = parse_spectrum_arg(spectrum_text, sp);
        if (early >= 0) return early;
        CString out;
        fsv_status st;
        if (check->parsed())
            st = fsv_spectrum_check(sp.ptr, out.out());
        else if (hol->parsed())
            st = fsv_spectrum_holonomy(sp.ptr, out.out());
        else
            st = fsv_spectrum_lattice(sp.ptr, tol, out.out());

        return finish(st, out.str(), [&](const json& j) {
            if (j.contains("obstruction")) {
                std::cout << "no lattice: "
                          << j.at("obstruction").at("message").get<std::string>() << "\n";
                return;
            }
            if (check->parsed()) {
                std::cout << "lattice exists for ";
                print_spectrum_line(j.at("spectrum"));
                std::cout << "\n  orbits:";
                for (const auto& orbit : j.at("certificate").at("orbits"))
                    std::cout << " PHI_" << orbit.at("q").get<uint64_t>() << "^"
                              << orbit.at("multiplicity").get<unsigned>();
                std::cout << "\n  char poly: "
                          << j.at("certificate").at("char_poly").at("text").get<std::string>()
                          << "\n";
            } else if (hol->parsed()) {
                std::cout << "holonomy(";
                std::cout << j.at("spectrum").at("text").get<std::string>() << ") = ";
                print_group(j.at("holonomy"));
                std::cout << "\n";
            } else {
                std::cout << "lattice for ";
                print_spectrum_line(j.at("spectrum"));
                std::cout << "\n  holonomy order: " << j.at("order") << "\n  generators: "
                          << j.at("generators").get<std::string>() << "\n  integer model E:\n";
                print_matrix(j.at("integer_model"), "    ");
                std::cout << "  conjugator P:\n";
                print_matrix(j.at("conjugator"), "    ");
                std::cout << "  residual |P^-1 phi P - E| = " << j.at("residual").get<double>()
                          << "\n";
            }
        });
    }

    if (mindim->parsed()) {
        uint64_t out = 0;
        const fsv_status st = fsv_min_dim(n, &out);
        if (st != FSV_OK) return finish(st, "{\"error\":\"n must be >= 2\"}", {});
        json payload{{"n", n}, {"min_dim", out}};
        return finish(st, payload.dump(), [&](const json&) { std::cout << out << "\n"; });
    }

    if (construct->parsed()) {
        CString out;
        fsv_status st;
        if (*opt_cyclic) {
            st = fsv_construct_cyclic(cyclic_order, out.out());
        } else if (*opt_abelian) {
            st = fsv_construct_abelian(abelian_orders.data(), abelian_orders.size(),
                                       kahler ? 1 : 0, out.out());
        } else {
            return finish(FSV_ERROR, "{\"error\":\"construct needs --cyclic or --abelian\"}", {});
        }
        return finish(st, out.str(), [&](const json& j) {
            if (j.contains("spectrum")) {
                std::cout << "holonomy ";
                print_group(j.at("holonomy"));
                std::cout << " realized by ";
                print_spectrum_line(j.at("spectrum"));
                std::cout << "\n";
            } else {
                std::cout << "holonomy ";
                print_group(j.at("holonomy"));
                std::cout << " realized by ";
                print_witness(j.at("witness"));
                std::cout << "\n";
            }
        });
    }

    if (enumerate->parsed()) {
        CString out;
        const fsv_status st = fsv_enumerate(dim, out.out());
        return finish(st, out.str(), [](const json& j) {
            std::cout << "possible holonomy groups in dimension " << j.at("dim") << ":\n";
            std::cout << "  almost abelian quotients:\n";
            for (const auto& gw : j.at("almost_abelian")) {
                std::cout << "    " << gw.at("group").at("display").get<std::string>()
                          << "  via  ";
                print_witness(gw.at("witness"));
                std::cout << "\n";
            }
            if (!j.at("products").empty()) {
                std::cout << "  plane-motion products:\n";
                for (const auto& gw : j.at("products")) {
                    std::cout << "    " << gw.at("group").at("display").get<std::string>()
                              << "  via  ";
                    print_witness(gw.at("witness"));
                    std::cout << "\n";
                }
            }
        });
    }

    if (platy->parsed()) {
        CString out;
        const fsv_status st = fsv_platycosms(out.out());
        return finish(st, out.str(), [](const json& j) {
            std::printf("%-4s %-8s %-10s %-6s %-7s %-20s %s\n", "name", "holonomy", "H1",
                        "orient", "symbol", "cosm", "realizable");
            for (const auto& row : j.at("platycosms")) {
                std::printf("%-4s %-8s %-10s %-6s %-7s %-20s %s",
                            row.at("wolf_name").get<std::string>().c_str(),
                            row.at("holonomy").at("display").get<std::string>().c_str(),
                            row.at("h1").get<std::string>().c_str(),
                            row.at("orientable").get<bool>() ? "yes" : "no",
                            row.at("symbol").get<std::string>().c_str(),
                            row.at("cosm_name").get<std::string>().c_str(),
                            row.at("realizable").get<bool>() ? "yes" : "no");
                if (row.contains("witness")) {
                    std::cout << "  via ";
                    print_witness(row.at("witness"));
                }
                std::cout << "\n";
            }
        });
    }

    if (pairs->parsed()) {
        CString out;
        const fsv_status st = fsv_admissible_pairs_dim5(out.out());
        return finish(st, out.str(), [](const json& j) {
            std::cout << "admissible fraction pairs (two planes, no center):\n";
            for (const auto& p : j.at("pairs")) {
                std::cout << "  {" << p.at("fractions")[0].get<std::string>() << ", "
                          << p.at("fractions")[1].get<std::string>() << "}  order "
                          << p.at("order") << "  cos = "
                          << p.at("cosines")[0].at("text").get<std::string>() << ", "
                          << p.at("cosines")[1].at("text").get<std::string>() << "\n";
            }
        });
    }

    std::cout << app.help();
    return 0;
}
