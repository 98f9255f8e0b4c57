// Exercises the shared library through its C header only.

#include <cstring>
#include <string>
#include <thread>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "edsfn/edsfn.h"

namespace {

const char* kChar7 = "field = GF(7)\na4 = -t^3\na6 = t\npoint.x = 3*t+2\npoint.y = 2*t^2+t+1\n";

struct Curve {
    edsfn_curve* p = nullptr;
    ~Curve() { edsfn_curve_free(p); }
};

struct Text {
    char* p = nullptr;
    ~Text() { edsfn_string_free(p); }
};

}  // namespace

TEST_CASE("load, run and render through the C API") {
    Curve c;
    REQUIRE(edsfn_curve_load_text(kChar7, &c.p) == EDSFN_OK);
    Text json;
    REQUIRE(edsfn_run(c.p, "report", 30, 0, &json.p) == EDSFN_OK);
    CHECK(std::string(json.p).find("\"threshold\": 5") != std::string::npos);
    Text text;
    REQUIRE(edsfn_render(json.p, &text.p) == EDSFN_OK);
    CHECK(std::strlen(text.p) > 0);
    Text canon;
    REQUIRE(edsfn_curve_canonical(c.p, &canon.p) == EDSFN_OK);
    CHECK(std::string(canon.p).rfind("field = GF(7)\n", 0) == 0);
}

TEST_CASE("status codes") {
    Curve c;
    CHECK(edsfn_curve_load_text("a4 = t^^2\n", &c.p) == EDSFN_ERR_PARSE);
    CHECK(std::string(edsfn_last_error_name()) == "ParseError");
    CHECK(edsfn_curve_load_file("/nonexistent/curve.txt", &c.p) == EDSFN_ERR_IO);
    CHECK(edsfn_curve_load_text("field = GF(7)\na4 = 1\na6 = 1\n", &c.p) == EDSFN_OK);
    Text json;
    // Constant curve: smooth fibration, a standing assumption fails.
    CHECK(edsfn_run(c.p, "fibres", 10, 0, &json.p) == EDSFN_ERR_ASSUMPTION);
    CHECK(edsfn_run(c.p, "unknown", 10, 0, &json.p) == EDSFN_ERR_INVALID_ARGUMENT);
    CHECK(edsfn_run(nullptr, "fibres", 10, 0, &json.p) == EDSFN_ERR_INVALID_ARGUMENT);
    Curve off;
    CHECK(edsfn_curve_load_text("field = GF(7)\na4 = -t^3\na6 = t\npoint.x = 1\npoint.y = 1\n", &off.p) ==
          EDSFN_ERR_INVALID_ARGUMENT);
    Text r;
    CHECK(edsfn_render("{not json", &r.p) == EDSFN_ERR_PARSE);
}

TEST_CASE("last error is per thread") {
    Curve c;
    REQUIRE(edsfn_curve_load_text("a4 = t^^2\n", &c.p) == EDSFN_ERR_PARSE);
    std::string other;
    std::thread([&] { other = edsfn_last_error(); }).join();
    CHECK(other.empty());
    CHECK(std::strlen(edsfn_last_error()) > 0);
}

TEST_CASE("fixtures and repro") {
    REQUIRE(edsfn_fixture_count() == 6);
    CHECK(std::string(edsfn_fixture_id(0)) == "char7");
    CHECK(edsfn_fixture_id(6) == nullptr);
    Curve c;
    REQUIRE(edsfn_curve_load_fixture("family-m1", nullptr, &c.p) == EDSFN_OK);
    int pass = 0;
    Text json;
    REQUIRE(edsfn_repro("char7", nullptr, &pass, &json.p) == EDSFN_OK);
    CHECK(pass == 1);
}
