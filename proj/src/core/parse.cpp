#include "parse.hpp"

#include <cctype>
#include <string>

namespace edsfn {

namespace {

template <class F>
class Parser {
   public:
    using R = RatFunc<F>;

    Parser(const F& field, std::string_view text) : field_(field), text_(text) {}

    R run() {
        R r = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"", pos_);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    R expr() {
        R acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    R term() {
        R acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                R d = unary();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    R unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    R power() {
        R base = atom();
        if (!accept('^')) return base;
        bool negative = accept('-');
        skip();
        mpz_class e = digits();
        if (e > 1000000) fail("exponent too large");
        long k = e.get_si();
        if (negative && base.is_zero()) fail("negative power of zero");
        return base.pow(negative ? -k : k);
    }

    mpz_class digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    R atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            R r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (c == 't') {
            ++pos_;
            return R::variable(field_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return R::constant(field_, field_.from_rational(mpq_class(digits())));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const F& field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

template <class F>
RatFunc<F> parse_ratfunc(const F& field, std::string_view text) {
    return Parser<F>(field, text).run();
}

template RatFunc<RationalField> parse_ratfunc(const RationalField&, std::string_view);
template RatFunc<PrimeField> parse_ratfunc(const PrimeField&, std::string_view);

}  // namespace edsfn
