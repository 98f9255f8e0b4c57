#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "bounds.hpp"
#include "charp.hpp"

namespace edsfn {

namespace {

template <class F>
const Point<F>& require_point(const LoadedCurve<F>& lc, std::string_view command) {
    if (!lc.point) raise(ErrorCode::InvalidArgument, std::string(command) + " needs point.x and point.y in the curve file");
    return *lc.point;
}

Json rows_json(const std::vector<BoundReport>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json row{{"name", r.name}, {"value", r.value}, {"assumptions", r.assumptions}};
        row["satisfied"] = r.satisfied ? Json(*r.satisfied) : Json(nullptr);
        out.push_back(std::move(row));
    }
    return out;
}

template <class F>
Json header(std::string_view command, const LoadedCurve<F>& lc) {
    return Json{{"command", command}, {"label", lc.label}, {"field", lc.curve.field().name()}, {"curve", lc.curve.to_string()}};
}

template <class F>
Json fibres_json(const LoadedCurve<F>& lc) {
    const AnalyzedCurve<F> e(lc.curve);
    const SurfaceData<F> s = e.surface_data();
    Json j = header("fibres", lc);
    j["chi"] = s.chi;
    j["genus"] = s.genus;
    j["disc_degree"] = s.disc_degree;
    j["conductor_degree"] = s.conductor_degree;
    j["szpiro"] = rational_text(s.szpiro);
    j["j"] = lc.curve.inv().j.to_string();
    j["insep"] = insep_degree_j(lc.curve);
    long euler = 0;
    Json fibres = Json::array();
    for (const auto& f : s.fibres) {
        euler += f.e_v * f.place.degree();
        fibres.push_back({{"place", f.place.to_string()},
                          {"degree", f.place.degree()},
                          {"type", f.type.name()},
                          {"vDelta", f.vDelta},
                          {"vC4", f.vC4},
                          {"vC6", f.vC6},
                          {"components", f.m_v},
                          {"euler", f.e_v},
                          {"conductor_exponent", f.type.conductor_exponent()},
                          {"group", f.group}});
    }
    j["euler_sum"] = euler;
    j["fibres"] = std::move(fibres);
    return j;
}

template <class F>
Json eds_json(const LoadedCurve<F>& lc, const RunOptions& o) {
    const Point<F>& p = require_point(lc, "eds");
    const AnalyzedCurve<F> e(lc.curve);
    const EdsResult<F> eds = eds_generate(e, p, o.nmax);
    Json j = header("eds", lc);
    j["nmax"] = o.nmax;
    Json rows = Json::array();
    for (const auto& r : eds.records) {
        Json fresh = Json::array();
        for (const auto& v : r.new_places) fresh.push_back(v.to_string());
        rows.push_back({{"n", r.n},
                        {"divisor", r.divisor.to_string()},
                        {"degree", r.degree},
                        {"primitive", r.primitive},
                        {"new_places", std::move(fresh)}});
    }
    j["rows"] = std::move(rows);
    Json meetings = Json::array();
    for (const auto& m : eds.meetings) meetings.push_back({{"place", m.place.to_string()}, {"m", m.m}});
    j["meetings"] = std::move(meetings);
    j["nonPrimitiveSet"] = eds.non_primitive();
    return j;
}

template <class F>
Json height_json(const LoadedCurve<F>& lc, const RunOptions& o) {
    const Point<F>& p = require_point(lc, "height");
    const AnalyzedCurve<F> e(lc.curve);
    const SurfaceData<F> s = e.surface_data();
    const HeightCertificate<F> cert = height_certificate(e, s, p, o.depth);
    Json j = header("height", lc);
    j["pairing"] = rational_text(cert.pairing);
    j["canonical_height"] = rational_text(cert.canonical);
    j["chi"] = s.chi;
    j["naive_degree"] = cert.naive_degree;
    j["correction_total"] = rational_text(cert.total);
    j["exponent_lcm"] = cert.exponent_lcm;
    j["depth"] = cert.depth;
    j["identity_component"] = identity_component_test(cert);
    Json places = Json::array();
    for (const auto& pc : cert.per_place) {
        places.push_back({{"place", pc.place.to_string()},
                          {"degree", pc.place.degree()},
                          {"type", pc.type.name()},
                          {"singular", pc.singular},
                          {"c", rational_text(pc.c)},
                          {"candidates", pc.candidates},
                          {"unique", pc.unique}});
    }
    j["places"] = std::move(places);
    return j;
}

Json hasse_json(const LoadedCurve<PrimeField>& lc, const RunOptions& o) {
    const AnalyzedCurve<PrimeField> e(lc.curve);
    const SurfaceData<PrimeField> s = e.surface_data();
    const HasseProfile prof = hasse_profile(e, s);
    const long p = static_cast<long>(lc.curve.characteristic());
    Json j = header("hasse", lc);
    j["H"] = prof.globalH.to_string();
    j["chi"] = s.chi;
    j["ordinary"] = prof.ordinary;
    j["tame"] = prof.tame;
    j["verdict"] = !prof.ordinary ? "non-ordinary" : (prof.tame ? "tame" : "wild");
    long sum = 0;
    Json places = Json::array();
    for (const auto& [v, h] : prof.perPlace) {
        sum += h * v.degree();
        places.push_back({{"place", v.to_string()}, {"degree", v.degree()}, {"h", h}});
    }
    j["places"] = std::move(places);
    j["checksum"] = (p - 1) * s.chi;
    j["sum"] = prof.ordinary ? Json(sum) : Json(nullptr);
    if (!lc.point || !prof.ordinary) return j;

    // With a point: the order recursion, meeting constraints and W ledger.
    const Point<PrimeField>& pt = *lc.point;
    const EdsResult<PrimeField> eds = eds_generate(e, pt, o.nmax, profile_polys(prof));
    const mpq_class hhat = canonical_pairing(e, s, pt) / 2;
    j["nmax"] = o.nmax;
    j["recursion_checks"] = verify_ord_recursion(prof, eds, s.chi, hhat).size();
    Json meets = Json::array();
    for (const auto& m : meeting_constraints(e, prof, eds)) {
        meets.push_back({{"place", m.place.to_string()}, {"h", m.h}, {"reduction", m.reduction}, {"m", m.m_v}, {"ok", m.ok}});
    }
    j["meetings"] = std::move(meets);
    Json ledger = Json::array();
    for (long n = p; n <= o.nmax; n += p) {
        const WLedger w = w_ledger(e, prof, eds, s.chi, hhat, n);
        ledger.push_back({{"n", w.n}, {"e", w.e}, {"degW", w.degW}, {"bound", rational_text(w.bound)}, {"tame", w.tame}});
    }
    j["w_ledger"] = std::move(ledger);
    return j;
}

template <class F>
Json bounds_json(const LoadedCurve<F>& lc) {
    const AnalyzedCurve<F> e(lc.curve);
    const SurfaceData<F> s = e.surface_data();
    const BoundContext ctx = bound_context(e, s);
    Json j = header("bounds", lc);
    j["chi"] = ctx.chi;
    j["genus"] = ctx.genus;
    j["p"] = ctx.p;
    j["insep"] = ctx.insep;
    j["disc_degree"] = ctx.disc_degree;
    j["conductor_degree"] = ctx.conductor_degree;
    j["szpiro"] = rational_text(ctx.szpiro);

    std::optional<mpq_class> pairing;
    if (lc.point) pairing = canonical_pairing(e, s, *lc.point);
    j["pairing"] = pairing ? Json(rational_text(*pairing)) : Json(nullptr);

    std::vector<BoundReport> rows;
    const mpz_class lang = lang_bound(ctx.chi);
    rows.push_back({"lang_bound", lang.get_str(), {"point of infinite order", "checks 1/<P,P>"},
                    pairing ? std::optional<bool>(1 / *pairing <= mpq_class(lang)) : std::nullopt});
    const long ps = pesenti_szpiro(ctx);
    rows.push_back({"pesenti_szpiro", std::to_string(ps), {ctx.p ? "char p, p^r = " + std::to_string(ctx.insep) : "char 0"},
                    ctx.disc_degree <= ps});
    const HeightFloor floor = height_floor(ctx);
    char buf[64];
    std::snprintf(buf, sizeof buf, "10^%g", floor.log10);
    std::optional<bool> above;
    if (pairing) above = std::log10(mpq_class(*pairing / 2 / ctx.chi).get_d()) >= floor.log10;
    rows.push_back({"height_floor", buf, {floor.regime}, above});
    const Interval th = theta(static_cast<long>(ctx.p));
    rows.push_back({"theta", th.lo.get_str() + " .. " + th.hi.get_str(),
                    {ctx.p ? "2 - (1+1/p) zeta(2)" : "2 - zeta(2)"}, sgn(th.lo) > 0});
    j["perBoundRows"] = rows_json(rows);
    return j;
}

template <class F>
Json report_json(const LoadedCurve<F>& lc, const RunOptions& o) {
    const Point<F>& p = require_point(lc, "report");
    const AnalyzedCurve<F> e(lc.curve);
    const PrimitivityReport<F> r = primitivity_report(e, p, o.nmax, o.depth);
    Json j = header("report", lc);
    j["chi"] = r.chi;
    j["genus"] = r.genus;
    j["pairing"] = rational_text(r.pairing);
    j["status"] = r.status;
    j["ordinary"] = r.ordinary;
    j["tame"] = r.tame;
    j["nmax"] = r.nmax;
    j["nonPrimitiveSet"] = r.nonPrimitive;
    j["unresolved"] = r.unresolved;
    j["threshold"] = r.threshold ? Json(*r.threshold) : Json(nullptr);
    j["scanLimit"] = r.scanLimit;
    j["exactCorrections"] = r.exactCorrections;
    j["perBoundRows"] = rows_json(r.rows);
    return j;
}

template <class F>
Json dispatch(std::string_view command, const LoadedCurve<F>& lc, const RunOptions& o) {
    if (command == "fibres") return fibres_json(lc);
    if (command == "eds") return eds_json(lc, o);
    if (command == "height") return height_json(lc, o);
    if (command == "bounds") return bounds_json(lc);
    if (command == "report") return report_json(lc, o);
    if (command == "hasse") {
        if constexpr (std::is_same_v<F, PrimeField>) {
            return hasse_json(lc, o);
        } else {
            raise(ErrorCode::BadCharacteristic, "the Hasse invariant needs a finite constant field");
        }
    }
    raise(ErrorCode::InvalidArgument, "unknown command \"" + std::string(command) + "\"");
}

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

// Fixed-width table from an array of objects and the chosen columns.
std::string table(const Json& rows, const std::vector<std::string>& cols) {
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        width[c] = cols[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], cell(r[cols[c]]).size());
    }
    std::ostringstream out;
    for (std::size_t c = 0; c < cols.size(); ++c) out << pad(cols[c], width[c] + 2);
    out << "\n";
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < cols.size(); ++c) out << pad(cell(r[cols[c]]), width[c] + 2);
        out << "\n";
    }
    return out.str();
}

}  // namespace

std::string rational_text(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

const std::vector<std::string>& report_commands() {
    static const std::vector<std::string> names{"fibres", "eds", "height", "hasse", "bounds", "report"};
    return names;
}

Json run_command(std::string_view command, const AnyCurve& curve, const RunOptions& opts) {
    if (opts.nmax < 1) raise(ErrorCode::InvalidArgument, "nmax must be positive");
    if (opts.depth < 0) raise(ErrorCode::InvalidArgument, "depth must be nonnegative");
    return std::visit([&](const auto& lc) { return dispatch(command, lc, opts); }, curve);
}

std::string render_text(const Json& j) {
    std::ostringstream out;
    const std::string cmd = j.value("command", "");
    if (cmd == "repro") {
        out << "repro " << cell(j["id"]) << ": " << (j.value("pass", false) ? "all facts match" : "MISMATCH") << "\n";
        for (const auto& f : j["facts"]) {
            const bool ok = f.value("pass", false);
            out << "  " << (ok ? "ok  " : "FAIL") << " [" << cell(f["provenance"]) << "] " << cell(f["key"]) << " = "
                << f["actual"].dump();
            if (!ok) out << "  (expected " << f["expected"].dump() << ")";
            out << "\n";
        }
        return out.str();
    }
    out << "curve " << cell(j["curve"]) << " over " << cell(j["field"]) << "\n";
    auto line = [&](const char* key) {
        if (j.contains(key)) out << key << " = " << cell(j[key]) << "\n";
    };
    if (cmd == "fibres") {
        for (const char* k : {"chi", "genus", "disc_degree", "conductor_degree", "szpiro", "j", "insep", "euler_sum"}) line(k);
        out << table(j["fibres"], {"place", "degree", "type", "vDelta", "vC4", "vC6", "components", "euler", "group"});
    } else if (cmd == "eds") {
        out << table(j["rows"], {"n", "divisor", "degree", "primitive"});
        line("nonPrimitiveSet");
    } else if (cmd == "height") {
        for (const char* k : {"pairing", "canonical_height", "chi", "correction_total", "exponent_lcm", "depth"}) line(k);
        out << table(j["places"], {"place", "type", "singular", "c", "candidates", "unique"});
    } else if (cmd == "hasse") {
        for (const char* k : {"H", "chi", "verdict", "checksum", "sum"}) line(k);
        out << table(j["places"], {"place", "degree", "h"});
        if (j.contains("meetings")) {
            line("recursion_checks");
            out << table(j["meetings"], {"place", "h", "reduction", "m", "ok"});
            out << table(j["w_ledger"], {"n", "e", "degW", "bound"});
        }
    } else if (cmd == "bounds") {
        for (const char* k : {"chi", "p", "insep", "disc_degree", "conductor_degree", "szpiro", "pairing"}) line(k);
        out << table(j["perBoundRows"], {"name", "value", "satisfied"});
    } else if (cmd == "report") {
        for (const char* k : {"chi", "pairing", "status", "nmax", "nonPrimitiveSet", "threshold", "scanLimit"}) line(k);
        out << table(j["perBoundRows"], {"name", "value", "satisfied"});
    }
    return out.str();
}

}  // namespace edsfn
