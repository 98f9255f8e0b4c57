#include "config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "group_law.hpp"
#include "parse.hpp"

namespace edsfn {

namespace {

constexpr std::array<const char*, 5> kCoefficientKeys{"a1", "a2", "a3", "a4", "a6"};

[[noreturn]] void fail_at(SourceLocation at, const std::string& msg) {
    raise(ErrorCode::ParseError, "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + msg);
}

std::string_view trim(std::string_view s, std::size_t& lead) {
    lead = 0;
    while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
    std::size_t end = s.size();
    while (end > lead && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(lead, end - lead);
}

// Cuts the line at the first '#' outside double quotes.
std::string_view strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

std::uint64_t parse_field_modulus(const std::string& spec, SourceLocation at) {
    if (spec.size() < 5 || spec.compare(0, 3, "GF(") != 0 || spec.back() != ')') {
        fail_at(at, "field must be \"Q\" or \"GF(p)\", got \"" + spec + "\"");
    }
    const std::string digits = spec.substr(3, spec.size() - 4);
    if (digits.empty() || digits.size() > 10) fail_at(at, "bad modulus in \"" + spec + "\"");
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail_at(at, "bad modulus in \"" + spec + "\"");
    }
    return std::stoull(digits);
}

SourceLocation location(const CurveConfig& cfg, const std::string& key) {
    auto it = cfg.where.find(key);
    return it == cfg.where.end() ? SourceLocation{} : it->second;
}

template <class F>
RatFunc<F> parse_value(const F& field, const CurveConfig& cfg, const std::string& key, const std::string& text) {
    SourceLocation at = location(cfg, key);
    try {
        return parse_ratfunc(field, text);
    } catch (const SyntaxError& e) {
        at.column += static_cast<int>(e.offset());
        fail_at(at, key + ": " + std::string(e.what()).substr(std::string("ParseError: ").size()));
    } catch (const Error& e) {
        fail_at(at, key + ": " + e.what());
    }
}

template <class F>
LoadedCurve<F> load_over(const F& field, const CurveConfig& cfg) {
    std::array<RatFunc<F>, 5> a{RatFunc<F>(field), RatFunc<F>(field), RatFunc<F>(field), RatFunc<F>(field),
                                RatFunc<F>(field)};
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = parse_value(field, cfg, kCoefficientKeys[i], cfg.a[i]);
    LoadedCurve<F> out{cfg.label, Curve<F>(a[0], a[1], a[2], a[3], a[4]), std::nullopt};
    if (cfg.px) {
        Point<F> p = Point<F>::affine(parse_value(field, cfg, "point.x", *cfg.px), parse_value(field, cfg, "point.y", *cfg.py));
        require_on_curve(out.curve, p);
        out.point = std::move(p);
    }
    return out;
}

}  // namespace

CurveConfig parse_config_text(std::string_view text) {
    CurveConfig cfg;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::size_t lead = 0;
        const std::string_view body = trim(strip_comment(raw), lead);
        if (body.empty()) continue;
        const std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) fail_at({lineno, static_cast<int>(lead) + 1}, "expected key = value");
        std::size_t klead = 0, vlead = 0;
        const std::string key(trim(body.substr(0, eq), klead));
        std::string_view value = trim(body.substr(eq + 1), vlead);
        SourceLocation at{lineno, static_cast<int>(lead + eq + 1 + vlead) + 1};
        if (key.empty()) fail_at({lineno, static_cast<int>(lead) + 1}, "missing key");
        if (!value.empty() && value.front() == '"') {
            if (value.size() < 2 || value.back() != '"') fail_at(at, "unterminated quote");
            value = value.substr(1, value.size() - 2);
            ++at.column;
        }
        if (cfg.where.count(key)) fail_at({lineno, static_cast<int>(lead) + 1}, "duplicate key \"" + key + "\"");
        if (value.empty()) fail_at(at, "empty value for \"" + key + "\"");
        cfg.where[key] = at;

        const std::string v(value);
        bool known = true;
        if (key == "field") {
            if (v != "Q") parse_field_modulus(v, at);
            cfg.field = v;
        } else if (key == "label") {
            cfg.label = v;
        } else if (key == "point.x") {
            cfg.px = v;
        } else if (key == "point.y") {
            cfg.py = v;
        } else {
            known = false;
            for (std::size_t i = 0; i < kCoefficientKeys.size(); ++i) {
                if (key == kCoefficientKeys[i]) {
                    cfg.a[i] = v;
                    known = true;
                }
            }
        }
        if (!known) fail_at({lineno, static_cast<int>(lead) + 1}, "unknown key \"" + key + "\"");
    }
    if (cfg.px.has_value() != cfg.py.has_value()) {
        fail_at({lineno, 1}, "point.x and point.y must be given together");
    }
    return cfg;
}

CurveConfig read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::Io, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

AnyCurve load_curve(const CurveConfig& cfg) {
    if (cfg.field == "Q") return load_over(RationalField{}, cfg);
    const SourceLocation at = location(cfg, "field");
    const std::uint64_t p = parse_field_modulus(cfg.field, at);
    try {
        return load_over(PrimeField(p), cfg);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidArgument) throw;
        fail_at(at, e.what());
    }
}

CurveConfig canonical_config(const AnyCurve& c) {
    return std::visit(
        [](const auto& lc) {
            CurveConfig cfg;
            cfg.field = lc.curve.field().name();
            cfg.label = lc.label;
            for (std::size_t i = 0; i < cfg.a.size(); ++i) cfg.a[i] = lc.curve.coefficients()[i].to_string();
            if (lc.point) {
                cfg.px = lc.point->x.to_string();
                cfg.py = lc.point->y.to_string();
            }
            return cfg;
        },
        c);
}

std::string print_config(const CurveConfig& cfg) {
    std::string out = "field = " + cfg.field + "\n";
    if (!cfg.label.empty()) out += "label = " + cfg.label + "\n";
    for (std::size_t i = 0; i < cfg.a.size(); ++i) out += std::string(kCoefficientKeys[i]) + " = " + cfg.a[i] + "\n";
    if (cfg.px) out += "point.x = " + *cfg.px + "\npoint.y = " + *cfg.py + "\n";
    return out;
}

}  // namespace edsfn
