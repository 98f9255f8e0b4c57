#ifndef EDSFN_CORE_CONFIG_HPP
#define EDSFN_CORE_CONFIG_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "curve.hpp"

namespace edsfn {

struct SourceLocation {
    int line = 0;
    int column = 0;
};

/// Text form of a curve file. Lines are `key = value`; `#` starts a comment;
/// values may be double-quoted. Keys: field, label, a1 a2 a3 a4 a6, point.x,
/// point.y. Absent coefficients are 0.
struct CurveConfig {
    std::string field = "Q";
    std::string label;
    std::array<std::string, 5> a{"0", "0", "0", "0", "0"};
    std::optional<std::string> px, py;
    std::map<std::string, SourceLocation> where;  // value positions, for diagnostics
};

/// Syntax only; coefficients are checked by load_curve. ParseError messages
/// start with "line L, column C".
CurveConfig parse_config_text(std::string_view text);

/// Io when the file cannot be read.
CurveConfig read_config_file(const std::string& path);

template <class F>
struct LoadedCurve {
    std::string label;
    Curve<F> curve;
    std::optional<Point<F>> point;
};

using AnyCurve = std::variant<LoadedCurve<RationalField>, LoadedCurve<PrimeField>>;

/// Exact parse of the coefficients and the point. Raises ParseError with the
/// value's position, SingularCurve, or PointNotOnCurve.
AnyCurve load_curve(const CurveConfig& cfg);

/// The config of a loaded curve with every value in normal form.
CurveConfig canonical_config(const AnyCurve& c);

/// One `key = value` line per key in fixed order; stable under
/// parse -> load -> canonical -> print.
std::string print_config(const CurveConfig& cfg);

}  // namespace edsfn

#endif
