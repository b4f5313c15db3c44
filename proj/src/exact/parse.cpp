#include "fockforge/exact/parse.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace fockforge::exact {

namespace {

class Parser {
  public:
    Parser(std::string_view text, const VarSpec& vars) : text_(text), vars_(vars) {}

    RationalFunction parse() {
        RationalFunction value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction value = term();
        while (true) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    RationalFunction term() {
        RationalFunction value = unary();
        while (true) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                RationalFunction d = unary();
                if (d.is_zero()) fail("division by zero");
                value /= d;
            } else {
                return value;
            }
        }
    }

    RationalFunction unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected nonnegative integer exponent");
            int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
            return base.pow(e);
        }
        return base;
    }

    RationalFunction atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction value = expr();
            if (!accept(')')) fail("expected ')'");
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return RationalFunction(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            auto k = vars_.index_of(name);
            if (!k) fail("unknown variable '" + name + "'");
            return RationalFunction::var(*k);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const VarSpec& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, const VarSpec& vars) {
    return Parser(text, vars).parse();
}

}  // namespace fockforge::exact
