#include "flatsolv.h"

#include <cstdlib>
#include <cstring>

#include "flatsolv/serialize.hpp"

using namespace flatsolv;

struct fsv_spectrum {
    RotationSpectrum value;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** json_out, const Json& j) {
    if (json_out) *json_out = dup_string(j.dump());
}

fsv_status emit_error(char** json_out, const std::string& message) {
    emit(json_out, Json{{"error", message}});
    return FSV_ERROR;
}

// Uniform exception wall: obstructions map to their own status, everything
// else to FSV_ERROR with a message document.
template <typename Fn>
fsv_status guarded(char** json_out, Fn&& fn) {
    try {
        return fn();
    } catch (const ObstructionError& e) {
        emit(json_out, Json{{"obstruction", to_json(e.obstruction())}});
        return FSV_OBSTRUCTION;
    } catch (const std::exception& e) {
        return emit_error(json_out, e.what());
    } catch (...) {
        return emit_error(json_out, "unknown error");
    }
}

Int to_int(uint64_t n) {
    Int v;
    mpz_import(v.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return v;
}

}  // namespace

extern "C" {

const char* fsv_version(void) { return "1.0.0"; }

void fsv_string_free(char* s) { std::free(s); }

fsv_status fsv_euler_phi(uint64_t n, uint64_t* out) {
    return guarded(nullptr, [&]() {
        if (!out) return FSV_ERROR;
        *out = euler_phi(to_int(n)).get_ui();
        return FSV_OK;
    });
}

fsv_status fsv_hiller_phi(uint64_t n, uint64_t* out) {
    return guarded(nullptr, [&]() {
        if (!out) return FSV_ERROR;
        *out = hiller_phi(to_int(n)).get_ui();
        return FSV_OK;
    });
}

fsv_status fsv_cyclotomic(uint64_t n, char** json_out) {
    return guarded(json_out, [&]() {
        if (n < 1) return emit_error(json_out, "cyclotomic index must be >= 1");
        Json j = to_json(cyclotomic_poly(static_cast<unsigned long>(n)));
        j["n"] = n;
        emit(json_out, j);
        return FSV_OK;
    });
}

fsv_status fsv_spectrum_parse(const char* text, fsv_spectrum** out, char** error_out) {
    return guarded(error_out, [&]() {
        if (!text || !out) return emit_error(error_out, "null argument");
        *out = new fsv_spectrum{parse_spectrum(text)};
        return FSV_OK;
    });
}

void fsv_spectrum_free(fsv_spectrum* sp) { delete sp; }

char* fsv_spectrum_text(const fsv_spectrum* sp) {
    if (!sp) return nullptr;
    return dup_string(sp->value.text());
}

fsv_status fsv_spectrum_check(const fsv_spectrum* sp, char** json_out) {
    return guarded(json_out, [&]() {
        if (!sp) return emit_error(json_out, "null spectrum");
        const OrbitOutcome outcome = orbit_check(sp->value);
        if (const auto* obs = std::get_if<Obstruction>(&outcome)) {
            emit(json_out, Json{{"spectrum", to_json(sp->value)},
                                {"lattice_exists", false},
                                {"obstruction", to_json(*obs)}});
            return FSV_OBSTRUCTION;
        }
        emit(json_out, Json{{"spectrum", to_json(sp->value)},
                            {"lattice_exists", true},
                            {"certificate", to_json(std::get<OrbitCertificate>(outcome))}});
        return FSV_OK;
    });
}

fsv_status fsv_spectrum_holonomy(const fsv_spectrum* sp, char** json_out) {
    return guarded(json_out, [&]() {
        if (!sp) return emit_error(json_out, "null spectrum");
        const FiniteAbelianGroup g = holonomy_of_block(sp->value);
        emit(json_out, Json{{"spectrum", to_json(sp->value)}, {"holonomy", to_json(g)}});
        return FSV_OK;
    });
}

fsv_status fsv_spectrum_lattice(const fsv_spectrum* sp, double tolerance, char** json_out) {
    return guarded(json_out, [&]() {
        if (!sp) return emit_error(json_out, "null spectrum");
        emit(json_out, to_json(build_lattice(sp->value, tolerance)));
        return FSV_OK;
    });
}

fsv_status fsv_min_dim(uint64_t n, uint64_t* out) {
    return guarded(nullptr, [&]() {
        if (!out) return FSV_ERROR;
        *out = min_dim_solv(to_int(n)).get_ui();
        return FSV_OK;
    });
}

fsv_status fsv_construct_cyclic(uint64_t n, char** json_out) {
    return guarded(json_out, [&]() {
        const RotationSpectrum sp = minimal_cyclic_witness(to_int(n));
        emit(json_out, Json{{"n", n},
                            {"spectrum", to_json(sp)},
                            {"dimension", sp.group_dim()},
                            {"holonomy", to_json(holonomy_of_block(sp))}});
        return FSV_OK;
    });
}

fsv_status fsv_construct_abelian(const uint64_t* orders, size_t count, int kahler,
                                 char** json_out) {
    return guarded(json_out, [&]() {
        if (!orders && count > 0) return emit_error(json_out, "null orders");
        std::vector<Int> v;
        for (size_t i = 0; i < count; ++i) v.push_back(to_int(orders[i]));
        const FiniteAbelianGroup a = FiniteAbelianGroup::from_orders(v);
        const SolvmanifoldSpec spec = abelian_witness(a, kahler != 0);
        emit(json_out, Json{{"group", to_json(a)},
                            {"kahler", kahler != 0},
                            {"witness", to_json(spec)},
                            {"holonomy", to_json(holonomy_of_spec(spec))}});
        return FSV_OK;
    });
}

fsv_status fsv_enumerate(uint32_t dim, char** json_out) {
    return guarded(json_out, [&]() {
        emit(json_out, to_json(dimension_report(dim)));
        return FSV_OK;
    });
}

fsv_status fsv_platycosms(char** json_out) {
    return guarded(json_out, [&]() {
        Json rows = Json::array();
        for (const PlatycosmRow& row : platycosm_table()) rows.push_back(to_json(row));
        emit(json_out, Json{{"platycosms", rows}});
        return FSV_OK;
    });
}

fsv_status fsv_admissible_pairs_dim5(char** json_out) {
    return guarded(json_out, [&]() {
        Json pairs = Json::array();
        for (const AdmissiblePair& p : admissible_pairs_dim5()) pairs.push_back(to_json(p));
        emit(json_out, Json{{"pairs", pairs}});
        return FSV_OK;
    });
}

fsv_status fsv_seed_check(char** json_out) {
    return guarded(json_out, [&]() {
        const Json report = seed_check_report();
        emit(json_out, report);
        return report.at("ok").get<bool>() ? FSV_OK : FSV_ERROR;
    });
}

}  // extern "C"
