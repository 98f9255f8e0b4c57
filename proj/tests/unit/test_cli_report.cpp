#include "config.hpp"
#include "doctest.h"
#include "golden.hpp"
#include "report.hpp"

using namespace edsfn;

namespace {

std::string parse_error_of(std::string_view text) {
    try {
        load_curve(parse_config_text(text));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        return e.what();
    }
    return "";
}

const char* kChar7 =
    "# the char 7 example\n"
    "field = GF(7)\n"
    "label = \"char 7 # quoted\"\n"
    "a4 = -t^3\n"
    "a6 = t   # trailing comment\n"
    "point.x = 3*t + 2\n"
    "point.y = 2*t^2 + t + 1\n";

}  // namespace

TEST_CASE("config parsing: comments, quotes and defaults") {
    const CurveConfig cfg = parse_config_text(kChar7);
    CHECK(cfg.field == "GF(7)");
    CHECK(cfg.label == "char 7 # quoted");
    CHECK(cfg.a[0] == "0");
    CHECK(cfg.a[3] == "-t^3");
    CHECK(cfg.a[4] == "t");
    REQUIRE(cfg.px.has_value());
    CHECK(cfg.where.at("a4").line == 4);
    CHECK(cfg.where.at("a4").column == 6);
}

TEST_CASE("config round trip through the canonical form") {
    for (const auto& id : fixture_ids()) {
        CAPTURE(id);
        const AnyCurve c = load_fixture_curve(id, default_fixture_dir());
        const std::string once = print_config(canonical_config(c));
        const std::string twice = print_config(canonical_config(load_curve(parse_config_text(once))));
        CHECK(once == twice);
    }
    const std::string q = print_config(canonical_config(load_curve(parse_config_text("a4 = t/2\na6 = (t^2+1)/3\n"))));
    CHECK(q == print_config(canonical_config(load_curve(parse_config_text(q)))));
}

TEST_CASE("config errors carry line and column") {
    CHECK(parse_error_of("field = GF(7)\na4 = t^^2\n").find("line 2, column 8") != std::string::npos);
    CHECK(parse_error_of("a4 = t\nb4 = 1\n").find("line 2, column 1: unknown key") != std::string::npos);
    CHECK(parse_error_of("a4 = t\n  a4 = 1\n").find("line 2, column 3: duplicate key") != std::string::npos);
    CHECK(parse_error_of("a4 = t\na6 = 1\npoint.x = 0\n").find("together") != std::string::npos);
    CHECK(parse_error_of("field = GF(x)\n").find("line 1, column 9") != std::string::npos);
    CHECK(parse_error_of("field = GF(8)\na4 = t\n").find("line 1") != std::string::npos);
    CHECK(parse_error_of("a4\n").find("expected key = value") != std::string::npos);
    CHECK(parse_error_of("a4 = \"t\n").find("unterminated") != std::string::npos);
}

TEST_CASE("a point off the curve is rejected") {
    try {
        load_curve(parse_config_text("field = GF(7)\na4 = -t^3\na6 = t\npoint.x = 1\npoint.y = 1\n"));
        FAIL("expected PointNotOnCurve");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PointNotOnCurve);
    }
}

TEST_CASE("run_command emits the documented keys") {
    const AnyCurve c = load_curve(parse_config_text(kChar7));
    const Json fib = run_command("fibres", c, {});
    for (const char* k : {"chi", "genus", "disc_degree", "conductor_degree", "fibres"}) CHECK(fib.contains(k));
    CHECK(fib["chi"] == 1);
    const Json eds = run_command("eds", c, {20, 0});
    CHECK(eds["rows"].size() == 20);
    CHECK(eds["nonPrimitiveSet"] == Json::array({2, 3, 4}));
    const Json h = run_command("height", c, {});
    CHECK(h["pairing"] == "1/14");
    const Json hs = run_command("hasse", c, {14, 0});
    CHECK(hs["H"] == "3*t");
    CHECK(hs.contains("w_ledger"));
    const Json b = run_command("bounds", c, {});
    CHECK(b.contains("perBoundRows"));
    const Json r = run_command("report", c, {});
    for (const char* k : {"chi", "genus", "pairing", "nonPrimitiveSet", "threshold", "perBoundRows"}) CHECK(r.contains(k));
    CHECK(r["threshold"] == 5);
    for (const auto& j : {fib, eds, h, hs, b, r}) CHECK_FALSE(render_text(j).empty());
    CHECK_THROWS_AS(run_command("nope", c, {}), Error);
}

TEST_CASE("hasse command refuses characteristic 0") {
    const AnyCurve c = load_curve(parse_config_text("a4 = -t^3\na6 = t\n"));
    try {
        run_command("hasse", c, {});
        FAIL("expected BadCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadCharacteristic);
    }
}

TEST_CASE("rational text") {
    CHECK(rational_text(mpq_class(1, 14)) == "1/14");
    CHECK(rational_text(mpq_class(4)) == "4");
    CHECK(rational_text(mpq_class(-3, 2)) == "-3/2");
}

TEST_CASE("repro of the char 7 fixture passes every fact") {
    const ReproResult r = run_repro("char7", default_fixture_dir());
    CHECK(r.pass);
    CHECK(r.facts.size() >= 10);
    const Json j = repro_json(r);
    CHECK(j["command"] == "repro");
    CHECK_FALSE(render_text(j).empty());
    CHECK_THROWS_AS(run_repro("no-such-fixture", default_fixture_dir()), Error);
}
