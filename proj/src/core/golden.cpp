#include "golden.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <algorithm>
#include <map>

#include "bounds.hpp"
#include "charp.hpp"
#include "parse.hpp"

#ifndef EDSFN_FIXTURE_DIR
#define EDSFN_FIXTURE_DIR "tests/fixtures"
#endif

namespace edsfn {

namespace {

using Facts = std::map<std::string, Json>;
using PC = PlaceClass<PF>;
using R = RatFunc<PF>;

const LoadedCurve<PF>& prime_curve(const AnyCurve& c, const std::string& id) {
    const auto* lc = std::get_if<LoadedCurve<PF>>(&c);
    if (!lc || !lc->point) raise(ErrorCode::InvalidArgument, "fixture " + id + " must be a GF(p) curve with a point");
    return *lc;
}

R var(const PF& f) { return parse_ratfunc(f, "t"); }

PC finite(const PF& f, std::initializer_list<long long> ascending) { return PC::finite(Poly<PF>::from_ints(f, ascending)); }

Json type_map(const SurfaceData<PF>& s) {
    Json out = Json::object();
    for (const auto& fb : s.fibres) out[fb.place.to_string()] = fb.type.name();
    return out;
}

// Nonzero c_v(P, P) by place.
Json correction_map(const HeightCertificate<PF>& cert) {
    Json out = Json::object();
    for (const auto& pc : cert.per_place) {
        if (sgn(pc.c) != 0) out[pc.place.to_string()] = rational_text(pc.c);
    }
    return out;
}

mpq_class corrections_at(const HeightCertificate<PF>& cert, long k) {
    mpq_class c = 0;
    for (const auto& pc : cert.per_place) {
        c += pc.place.degree() * correction_value(pc.type, component_multiple(pc.type, pc.candidates.front(), k));
    }
    return c;
}

// 2 deg D_n = n^2 <P,P> - 2 chi + sum_v c_v(nP, nP) for every computed n.
bool shioda_identity(const EdsResult<PF>& eds, const HeightCertificate<PF>& cert, long chi, long upto) {
    for (const auto& r : eds.records) {
        if (r.n > upto) break;
        if (2 * r.degree != r.n * r.n * cert.pairing - 2 * chi + corrections_at(cert, r.n)) return false;
    }
    return true;
}

Facts char7_facts(const LoadedCurve<PF>& lc) {
    const PF& f = lc.curve.field();
    const AnalyzedCurve<PF> e(lc.curve);
    const SurfaceData<PF> s = e.surface_data();
    const Point<PF>& p = *lc.point;
    Facts out;
    out["fibres"] = type_map(s);
    out["chi"] = s.chi;
    out["j"] = lc.curve.inv().j.to_string();
    out["insep"] = insep_degree_j(lc.curve);

    const HeightCertificate<PF> cert = height_certificate(e, s, p);
    out["pairing"] = rational_text(cert.pairing);
    out["corrections"] = correction_map(cert);

    const HasseProfile prof = hasse_profile(e, s);
    const EdsResult<PF> eds = eds_generate(e, p, 98, profile_polys(prof));
    const EdsResult<PF> plain = eds_generate(e, p, 14);
    Json first = Json::array();
    for (long n = 1; n <= 8; ++n) first.push_back(plain.records[static_cast<std::size_t>(n - 1)].divisor.to_string());
    out["eds_1_8"] = first;
    const Divisor<PF>& d14 = plain.records[13].divisor;
    const PC t0 = finite(f, {0, 1});
    const PC inf = PC::infinity(f);
    out["d14_ord_t"] = multiplicity_on(d14, t0);
    out["d14_ord_inf"] = multiplicity_on(d14, inf);
    out["d14_degree"] = d14.degree();

    Json hs = Json::object();
    long hsum = 0;
    for (const auto& [v, h] : prof.perPlace) {
        hs[v.to_string()] = h;
        hsum += h * v.degree();
    }
    out["hasse_h"] = hs;
    out["hasse_sum"] = hsum;
    out["verdict"] = !prof.ordinary ? "non-ordinary" : (prof.tame ? "tame" : "wild");
    out["meeting_t"] = eds.meeting_index(t0);
    out["meeting_inf"] = eds.meeting_index(inf);

    const PrimitivityReport<PF> rep = primitivity_report(e, p, 50);
    out["nonPrimitiveSet"] = rep.nonPrimitive;
    out["threshold"] = rep.threshold ? Json(*rep.threshold) : Json(nullptr);

    out["shioda_identity_n_le_30"] = shioda_identity(eds, cert, s.chi, 30);
    const mpq_class hhat = cert.pairing / 2;
    bool recursion = true;
    try {
        verify_ord_recursion(prof, eds, s.chi, hhat);
    } catch (const Error&) {
        recursion = false;
    }
    out["ord_recursion_n_le_98"] = recursion;
    const WLedger w49 = w_ledger(e, prof, eds, s.chi, hhat, 49);
    out["w_ledger_49"] = Json{{"degW", w49.degW}, {"bound", rational_text(w49.bound)}};
    return out;
}

Facts family_facts(const LoadedCurve<PF>& lc) {
    const AnalyzedCurve<PF> e(lc.curve);
    const SurfaceData<PF> s = e.surface_data();
    const Point<PF>& q = *lc.point;
    Facts out;
    const HeightCertificate<PF> cert = height_certificate(e, s, q);
    out["pairing"] = rational_text(cert.pairing);
    out["corrections"] = correction_map(cert);
    const EdsResult<PF> eds = eds_generate(e, q, 12);
    Json degs = Json::array();
    for (long k = 1; k <= 10; ++k) degs.push_back(eds.records[static_cast<std::size_t>(k - 1)].degree);
    out["eds_degrees_1_10"] = degs;
    out["x_2Q"] = multiply(lc.curve, 2, q).x.to_string();
    std::vector<long> np;
    for (long n : eds.non_primitive()) {
        if (n >= 2 && n <= 12) np.push_back(n);
    }
    out["nonPrimitive_2_12"] = np;
    long euler = 0;
    for (const auto& fb : s.fibres) euler += fb.e_v * fb.place.degree();
    out["euler_sum"] = euler;
    out["chi"] = s.chi;
    out["fibres"] = type_map(s);
    out["shioda_identity_n_le_12"] = shioda_identity(eds, cert, s.chi, 12);
    return out;
}

Facts kummer_facts(const LoadedCurve<PF>& lc) {
    const AnalyzedCurve<PF> e(lc.curve);
    const SurfaceData<PF> s = e.surface_data();
    const Point<PF>& p = *lc.point;
    Facts out;
    out["hasse_zero"] = hasse_invariant(lc.curve).is_zero();
    const EdsResult<PF> eds = eds_generate(e, p, 25);
    out["d1"] = eds.records[0].divisor.to_string();
    out["d5"] = eds.records[4].divisor.to_string();
    out["d25"] = eds.records[24].divisor.to_string();
    const Point<PF> p5 = multiply(lc.curve, 5, p);
    const Point<PF> p25 = multiply(lc.curve, 25, p);
    out["x_5P"] = p5.x.to_string();
    out["y_5P"] = p5.y.to_string();
    out["x_25P"] = p25.x.to_string();
    out["minimal_x_pole_inf_5P_25P"] = Json::array({2 * eds.records[4].degree, 2 * eds.records[24].degree});
    out["status"] = primitivity_report(e, p, 25).status;
    return out;
}

Facts char2_facts(const LoadedCurve<PF>& lc) {
    const PF& f = lc.curve.field();
    const AnalyzedCurve<PF> e(lc.curve);
    const Point<PF>& p = *lc.point;
    const R t = var(f);
    const R one = R::from_int(f, 1);
    Facts out;
    bool map_ok = true;
    for (long k : {1, 2, 3, 5}) {
        const Point<PF> qk = multiply(lc.curve, k, p);
        const Point<PF> q2 = multiply(lc.curve, 2, qk);
        if (!(q2.x == (one + qk.x.pow(4)) / t.pow(2))) map_ok = false;
    }
    out["x_double_map"] = map_ok;
    out["x_2P"] = multiply(lc.curve, 2, p).x.to_string();

    const EdsResult<PF> eds = eds_generate(e, p, 16);
    const PC t0 = finite(f, {0, 1});
    Json ords = Json::array(), poles = Json::array(), supports = Json::array();
    bool formula = true;
    for (long l = 2; l <= 4; ++l) {
        const Divisor<PF>& d = eds.records[static_cast<std::size_t>((1L << l) - 1)].divisor;
        ords.push_back(multiplicity_on(d, t0));
        supports.push_back(d.support() == std::vector<PC>{t0});
        poles.push_back(-ord_at(multiply(lc.curve, 1L << l, p).x, t0));
    }
    for (long l = 1; l <= 5; ++l) {
        R num(f);
        for (long j = 1; j <= l - 1; ++j) {
            long ex = 0;
            for (long k = j; k <= l - 2; ++k) ex += 1L << (2 * k + 1);
            num = num + t.pow(ex);
        }
        const long den = 2 * ((1L << (2 * l - 2)) - 1) / 3;
        if (!(multiply(lc.curve, 1L << l, p).x == num / t.pow(den))) formula = false;
    }
    out["ord_t_d_2l_l2_4"] = ords;
    out["x_pole_t_2l_l2_4"] = poles;
    out["x_2lP_formula_l1_5"] = formula;
    out["support_2l_is_t_l2_4"] = supports;
    const std::vector<long> np = eds.non_primitive();
    out["nonprimitive_8_16"] = Json::array({std::count(np.begin(), np.end(), 8L) == 1, std::count(np.begin(), np.end(), 16L) == 1});
    return out;
}

Facts char3_facts(const LoadedCurve<PF>& lc) {
    const PF& f = lc.curve.field();
    const AnalyzedCurve<PF> e(lc.curve);
    const Point<PF>& p = *lc.point;
    const R t = var(f);
    const R a = (t + R::from_int(f, 1)) * (t + R::from_int(f, 2));
    Facts out;
    bool map_ok = true;
    for (long k : {1, 2, 4}) {
        const Point<PF> qk = multiply(lc.curve, k, p);
        const R expect = qk.x.pow(9) / a.pow(4) + R::from_int(f, 2) * t.pow(2) / a;
        if (!(multiply(lc.curve, 3, qk).x == expect)) map_ok = false;
    }
    out["x_triple_map"] = map_ok;
    const EdsResult<PF> eds = eds_generate(e, p, 9);
    const std::vector<PC> allowed{finite(f, {1, 1}), finite(f, {2, 1})};
    out["support_3l_in_t1_t2_l1_2"] =
        Json::array({eds.records[2].divisor.support_contained(allowed), eds.records[8].divisor.support_contained(allowed)});
    out["d3"] = eds.records[2].divisor.to_string();
    out["d9"] = eds.records[8].divisor.to_string();
    const std::vector<long> np = eds.non_primitive();
    out["nonprimitive_9"] = std::count(np.begin(), np.end(), 9L) == 1;
    return out;
}

Facts compute_facts(const std::string& id, const AnyCurve& c) {
    const LoadedCurve<PF>& lc = prime_curve(c, id);
    if (id == "char7") return char7_facts(lc);
    if (id == "family-m1") return family_facts(lc);
    if (id == "family-m2") return family_facts(lc);
    if (id == "kummer-ss") return kummer_facts(lc);
    if (id == "char2") return char2_facts(lc);
    if (id == "char3") return char3_facts(lc);
    raise(ErrorCode::InvalidArgument, "unknown fixture \"" + id + "\"");
}

bool same_ratfunc(const AnyCurve& c, const Json& expected, const Json& actual) {
    if (!expected.is_string() || !actual.is_string()) return false;
    return std::visit(
        [&](const auto& lc) {
            const auto& f = lc.curve.field();
            return parse_ratfunc(f, expected.get<std::string>()) == parse_ratfunc(f, actual.get<std::string>());
        },
        c);
}

// Object comparison independent of key order.
nlohmann::json unordered(const Json& j) { return nlohmann::json::parse(j.dump()); }

}  // namespace

const std::vector<std::string>& fixture_ids() {
    static const std::vector<std::string> ids{"char7", "family-m1", "family-m2", "kummer-ss", "char2", "char3"};
    return ids;
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("EDSFN_FIXTURE_DIR"); env && *env) return env;
    return EDSFN_FIXTURE_DIR;
}

AnyCurve load_fixture_curve(const std::string& id, const std::string& dir) {
    if (std::find(fixture_ids().begin(), fixture_ids().end(), id) == fixture_ids().end()) {
        raise(ErrorCode::InvalidArgument, "unknown fixture \"" + id + "\"");
    }
    return load_curve(read_config_file(dir + "/" + id + ".curve"));
}

ReproResult run_repro(const std::string& id, const std::string& dir) {
    const auto start = std::chrono::steady_clock::now();
    const AnyCurve curve = load_fixture_curve(id, dir);
    const std::string path = dir + "/" + id + ".facts.json";
    std::ifstream in(path);
    if (!in) raise(ErrorCode::Io, "cannot read " + path);
    Json spec;
    try {
        spec = Json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        raise(ErrorCode::ParseError, path + ": " + ex.what());
    }
    const Facts actual = compute_facts(id, curve);

    ReproResult r{id, {}, true, 0};
    for (const auto& fact : spec.at("facts")) {
        FactResult fr;
        fr.key = fact.at("key").get<std::string>();
        fr.provenance = fact.at("provenance").get<std::string>();
        fr.note = fact.value("note", "");
        fr.expected = fact.at("expected");
        auto it = actual.find(fr.key);
        fr.actual = it == actual.end() ? Json("<not computed>") : it->second;
        if (it != actual.end()) {
            fr.pass = fact.value("kind", "") == "ratfunc" ? same_ratfunc(curve, fr.expected, fr.actual)
                                                                 : unordered(fr.expected) == unordered(fr.actual);
        }
        r.pass = r.pass && fr.pass;
        r.facts.push_back(std::move(fr));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Json repro_json(const ReproResult& r) {
    Json facts = Json::array();
    for (const auto& f : r.facts) {
        facts.push_back({{"key", f.key},
                         {"provenance", f.provenance},
                         {"expected", f.expected},
                         {"actual", f.actual},
                         {"pass", f.pass},
                         {"note", f.note}});
    }
    return Json{{"command", "repro"}, {"id", r.id}, {"pass", r.pass}, {"seconds", r.seconds}, {"facts", std::move(facts)}};
}

}  // namespace edsfn
