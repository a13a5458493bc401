#include "flatsolv/serialize.hpp"

#include <charconv>

namespace flatsolv {

namespace {

Json int_to_json(const Int& n) {
    // JSON numbers stay exact up to 2^53; beyond that fall back to a string.
    if (n.fits_slong_p()) {
        const long v = n.get_si();
        if (v <= (1L << 53) && v >= -(1L << 53)) return Json(v);
    }
    return Json(n.get_str());
}

}  // namespace

RotationSpectrum parse_spectrum(const std::string& text) {
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("bad spectrum '" + text + "': " + why +
                          " (expected s=<int>;f=<p>/<q>,...)");
    };
    std::string_view rest(text);
    auto strip = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    rest = strip(rest);
    if (!rest.starts_with("s=")) throw fail("missing 's='");
    rest.remove_prefix(2);

    const size_t semi = rest.find(';');
    std::string_view s_part = strip(rest.substr(0, semi));
    unsigned center = 0;
    {
        auto [ptr, ec] = std::from_chars(s_part.data(), s_part.data() + s_part.size(), center);
        if (ec != std::errc{} || ptr != s_part.data() + s_part.size())
            throw fail("center dimension is not a non-negative integer");
    }

    std::vector<TurnFraction> fractions;
    if (semi != std::string_view::npos) {
        rest = strip(rest.substr(semi + 1));
        if (!rest.starts_with("f=")) throw fail("expected 'f=' after ';'");
        rest.remove_prefix(2);
        rest = strip(rest);
        while (!rest.empty()) {
            const size_t comma = rest.find(',');
            std::string_view item = strip(rest.substr(0, comma));
            const size_t slash = item.find('/');
            if (slash == std::string_view::npos || slash == 0 || slash + 1 == item.size())
                throw fail("fraction must be written p/q");
            long num = 0, den = 0;
            auto [p1, e1] = std::from_chars(item.data(), item.data() + slash, num);
            auto [p2, e2] =
                std::from_chars(item.data() + slash + 1, item.data() + item.size(), den);
            if (e1 != std::errc{} || p1 != item.data() + slash || e2 != std::errc{} ||
                p2 != item.data() + item.size())
                throw fail("fraction must be written p/q with integer p, q");
            if (den <= 0) throw fail("fraction denominator must be positive");
            if (num <= 0 || num >= den)
                throw fail("fraction must lie strictly between 0 and 1");
            fractions.emplace_back(Rational(num, den));
            if (comma == std::string_view::npos) break;
            rest = strip(rest.substr(comma + 1));
            if (rest.empty()) throw fail("trailing comma");
        }
    }
    return RotationSpectrum(center, std::move(fractions));
}

Json to_json(const Rational& r) {
    return Json(r.get_num().get_str() + "/" + r.get_den().get_str());
}

Json to_json(const TurnFraction& f) { return Json(f.text()); }

Json to_json(const RotationSpectrum& sp) {
    Json fr = Json::array();
    for (const TurnFraction& f : sp.fractions()) fr.push_back(f.text());
    return Json{{"center_dim", sp.center_dim()},
                {"fractions", fr},
                {"ambient_dim", sp.ambient_dim()},
                {"group_dim", sp.group_dim()},
                {"text", sp.text()}};
}

Json to_json(const IntPolynomial& p) {
    Json coeffs = Json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(int_to_json(c));
    return Json{{"coefficients", coeffs}, {"degree", p.degree()}, {"text", p.text()}};
}

Json to_json(const OrbitCertificate& cert) {
    Json orbits = Json::array();
    for (const auto& [q, mult] : cert.orbits)
        orbits.push_back(Json{{"q", q}, {"multiplicity", mult}});
    return Json{{"orbits", orbits}, {"char_poly", to_json(cert.char_poly)}};
}

Json to_json(const Obstruction& obs) {
    Json j{{"kind", obs.kind == Obstruction::Kind::IrrationalAngle ? "IrrationalAngle"
                                                                   : "IncompleteOrbit"},
           {"message", obs.message()}};
    if (obs.kind == Obstruction::Kind::IncompleteOrbit) {
        j["q"] = obs.q;
        j["missing_residues"] = obs.missing_residues;
    }
    return j;
}

Json to_json(const FiniteAbelianGroup& g) {
    Json factors = Json::array();
    for (const Int& d : g.invariant_factors()) factors.push_back(int_to_json(d));
    return Json{{"invariant_factors", factors},
                {"order", int_to_json(g.order())},
                {"display", g.display()}};
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (unsigned i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (unsigned j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const RealMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const LatticeDescriptor& lat) {
    return Json{{"spectrum", to_json(lat.spectrum)},
                {"order", int_to_json(lat.order_d)},
                {"certificate", to_json(lat.certificate)},
                {"integer_model", to_json(lat.integer_model)},
                {"conjugator", to_json(lat.conjugator)},
                {"residual", lat.residual},
                {"generators", lat.generators}};
}

Json to_json(const SolvmanifoldSpec& spec) {
    Json blocks = Json::array();
    for (const Block& b : spec.blocks()) {
        if (const auto* aa = std::get_if<AlmostAbelianBlock>(&b))
            blocks.push_back(Json{{"type", "almost_abelian"}, {"spectrum", to_json(aa->spectrum)}});
        else if (const auto* e2 = std::get_if<E2Factor>(&b))
            blocks.push_back(Json{{"type", "e2"}, {"fraction", e2->fraction.text()}});
        else if (const auto* t = std::get_if<TorusFactor>(&b))
            blocks.push_back(Json{{"type", "torus"}, {"dim", t->dim}});
    }
    return Json{{"blocks", blocks}, {"dimension", spec.dimension()}};
}

Json to_json(const GroupWitness& gw) {
    return Json{{"group", to_json(gw.group)}, {"witness", to_json(gw.witness)}};
}

Json to_json(const DimensionReport& report) {
    Json aa = Json::array();
    for (const GroupWitness& gw : report.almost_abelian) aa.push_back(to_json(gw));
    Json prod = Json::array();
    for (const GroupWitness& gw : report.products) prod.push_back(to_json(gw));
    return Json{{"dim", report.dim}, {"almost_abelian", aa}, {"products", prod}};
}

Json to_json(const PlatycosmRow& row) {
    Json j{{"wolf_name", row.wolf_name}, {"holonomy", to_json(row.holonomy)},
           {"h1", row.h1},               {"orientable", row.orientable},
           {"symbol", row.symbol},       {"cosm_name", row.cosm_name},
           {"realizable", row.realizable}};
    if (row.witness) j["witness"] = to_json(*row.witness);
    return j;
}

Json to_json(const AdmissiblePair& pair) {
    return Json{{"fractions", Json::array({pair.high.text(), pair.low.text()})},
                {"cosines",
                 Json::array({Json{{"text", pair.cos_high.text()}, {"value", pair.cos_high.value()}},
                              Json{{"text", pair.cos_low.text()}, {"value", pair.cos_low.value()}}})},
                {"order", int_to_json(pair.order)}};
}

namespace {

std::vector<std::string> group_displays(const std::vector<GroupWitness>& gws) {
    std::vector<std::string> out;
    for (const GroupWitness& gw : gws) out.push_back(gw.group.display());
    return out;
}

}  // namespace

Json seed_check_report() {
    Json checks = Json::array();
    bool all_ok = true;
    auto add = [&](const std::string& name, bool ok, const Json& detail) {
        checks.push_back(Json{{"name", name}, {"ok", ok}, {"detail", detail}});
        all_ok = all_ok && ok;
    };

    static const std::map<unsigned, std::vector<std::string>> kExpectedAA = {
        {3, {"{e}", "Z2", "Z3", "Z4", "Z6"}},
        {4, {"{e}", "Z2", "Z3", "Z4", "Z6"}},
        {5, {"{e}", "Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z10", "Z12"}},
        {6, {"{e}", "Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z10", "Z12"}},
    };
    for (const auto& [dim, expected] : kExpectedAA) {
        auto got = group_displays(dimension_report(dim).almost_abelian);
        add("dimension_" + std::to_string(dim) + "_almost_abelian", got == expected,
            Json{{"expected", expected}, {"got", got}});
    }

    static const std::vector<std::string> kExpectedProducts = {
        "Z2+Z2", "Z6", "Z2+Z4", "Z2+Z6", "Z3+Z3", "Z12", "Z3+Z6", "Z4+Z4", "Z2+Z12", "Z6+Z6"};
    {
        auto got = group_displays(dimension_report(6).products);
        std::vector<std::string> expected = kExpectedProducts;
        std::sort(expected.begin(), expected.end());
        std::vector<std::string> got_sorted = got;
        std::sort(got_sorted.begin(), got_sorted.end());
        add("dimension_6_products", got_sorted == expected,
            Json{{"expected", expected}, {"got", got}});
    }

    {
        static const std::vector<std::pair<std::string, bool>> kRealizability = {
            {"G1", true},  {"G2", true},  {"G3", true},  {"G4", true},  {"G5", true},
            {"G6", false}, {"B1", false}, {"B2", false}, {"B3", false}, {"B4", false}};
        bool ok = true;
        for (const auto& [name, realizable] : kRealizability) {
            const auto& table = platycosm_table();
            auto it = std::find_if(table.begin(), table.end(),
                                   [&](const PlatycosmRow& r) { return r.wolf_name == name; });
            ok = ok && it != table.end() && it->realizable == realizable;
        }
        add("platycosm_realizability", ok, Json::object());
    }

    {
        static const std::vector<unsigned long> kMinDims = {
            3, 3, 3, 5, 3, 7, 5, 7, 5, 11, 5, 13, 7, 7, 9, 17, 7, 19, 7};
        bool ok = true;
        for (unsigned long n = 2; n <= 20; ++n)
            ok = ok && min_dim_solv(Int(static_cast<long>(n))) ==
                           Int(static_cast<long>(kMinDims[n - 2]));
        add("min_dim_2_to_20", ok, Json::object());
    }

    add("admissible_pairs_dim5_count", admissible_pairs_dim5().size() == 14, Json::object());

    return Json{{"ok", all_ok}, {"checks", checks}};
}

}  // namespace flatsolv
