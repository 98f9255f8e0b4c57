#ifndef EDSFN_CORE_PARSE_HPP
#define EDSFN_CORE_PARSE_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "ratfunc.hpp"

namespace edsfn {

/// ParseError carrying the byte offset where parsing stopped.
class SyntaxError : public Error {
   public:
    SyntaxError(const std::string& what, std::size_t offset) : Error(ErrorCode::ParseError, what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
};

/// Parses an expression in t with integer literals, + - * / ^ and
/// parentheses, e.g. "t^3 - 1/2*t + 7". Exponents are integer literals,
/// possibly negative. Whitespace is ignored.
template <class F>
RatFunc<F> parse_ratfunc(const F& field, std::string_view text);

}  // namespace edsfn

#endif
