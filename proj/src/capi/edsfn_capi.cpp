#include "edsfn/edsfn.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "golden.hpp"

struct edsfn_curve {
    edsfn::AnyCurve curve;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_error_name;

edsfn_status status_for(edsfn::ErrorCode code) {
    using edsfn::ErrorCode;
    if (edsfn::is_assumption_violation(code)) return EDSFN_ERR_ASSUMPTION;
    switch (code) {
        case ErrorCode::ParseError:
            return EDSFN_ERR_PARSE;
        case ErrorCode::Io:
            return EDSFN_ERR_IO;
        case ErrorCode::InvalidArgument:
        case ErrorCode::PointNotOnCurve:
        case ErrorCode::SingularCurve:
        case ErrorCode::ZeroInput:
            return EDSFN_ERR_INVALID_ARGUMENT;
        default:
            return EDSFN_ERR_COMPUTATION;
    }
}

edsfn_status fail(edsfn_status s, const char* name, const std::string& msg) {
    last_error = msg;
    last_error_name = name;
    return s;
}

// Runs body, turning exceptions into status codes.
template <class Body>
edsfn_status guarded(Body&& body) {
    try {
        last_error.clear();
        last_error_name.clear();
        body();
        return EDSFN_OK;
    } catch (const edsfn::Error& e) {
        return fail(status_for(e.code()), edsfn::error_code_name(e.code()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(EDSFN_ERR_PARSE, "ParseError", e.what());
    } catch (const std::bad_alloc&) {
        return fail(EDSFN_ERR_INTERNAL, "OutOfMemory", "out of memory");
    } catch (const std::exception& e) {
        return fail(EDSFN_ERR_INTERNAL, "Internal", e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

edsfn_status null_argument(const char* what) {
    return fail(EDSFN_ERR_INVALID_ARGUMENT, "InvalidArgument", std::string(what) + " must not be NULL");
}

}  // namespace

extern "C" {

const char* edsfn_version(void) { return "1.0.0"; }

edsfn_status edsfn_curve_load_file(const char* path, edsfn_curve** out) {
    if (!path || !out) return null_argument("path and out");
    return guarded([&] { *out = new edsfn_curve{edsfn::load_curve(edsfn::read_config_file(path))}; });
}

edsfn_status edsfn_curve_load_text(const char* text, edsfn_curve** out) {
    if (!text || !out) return null_argument("text and out");
    return guarded([&] { *out = new edsfn_curve{edsfn::load_curve(edsfn::parse_config_text(text))}; });
}

edsfn_status edsfn_curve_load_fixture(const char* id, const char* dir, edsfn_curve** out) {
    if (!id || !out) return null_argument("id and out");
    return guarded([&] {
        *out = new edsfn_curve{edsfn::load_fixture_curve(id, dir ? dir : edsfn::default_fixture_dir())};
    });
}

void edsfn_curve_free(edsfn_curve* curve) { delete curve; }

edsfn_status edsfn_curve_canonical(const edsfn_curve* curve, char** out_text) {
    if (!curve || !out_text) return null_argument("curve and out_text");
    return guarded([&] { *out_text = dup_string(edsfn::print_config(edsfn::canonical_config(curve->curve))); });
}

edsfn_status edsfn_run(const edsfn_curve* curve, const char* command, long nmax, long depth, char** out_json) {
    if (!curve || !command || !out_json) return null_argument("curve, command and out_json");
    return guarded([&] {
        const edsfn::Json j = edsfn::run_command(command, curve->curve, {nmax, depth});
        *out_json = dup_string(j.dump(2));
    });
}

edsfn_status edsfn_repro(const char* id, const char* dir, int* out_pass, char** out_json) {
    if (!id || !out_pass || !out_json) return null_argument("id, out_pass and out_json");
    return guarded([&] {
        const edsfn::ReproResult r = edsfn::run_repro(id, dir ? dir : edsfn::default_fixture_dir());
        *out_json = dup_string(edsfn::repro_json(r).dump(2));
        *out_pass = r.pass ? 1 : 0;
    });
}

edsfn_status edsfn_render(const char* json, char** out_text) {
    if (!json || !out_text) return null_argument("json and out_text");
    return guarded([&] { *out_text = dup_string(edsfn::render_text(edsfn::Json::parse(json))); });
}

size_t edsfn_fixture_count(void) { return edsfn::fixture_ids().size(); }

const char* edsfn_fixture_id(size_t index) {
    const auto& ids = edsfn::fixture_ids();
    return index < ids.size() ? ids[index].c_str() : nullptr;
}

const char* edsfn_last_error(void) { return last_error.c_str(); }

const char* edsfn_last_error_name(void) { return last_error_name.c_str(); }

void edsfn_string_free(char* s) { std::free(s); }

}  // extern "C"
