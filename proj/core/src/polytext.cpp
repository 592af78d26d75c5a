#include "vkl/polytext.hpp"

#include <cctype>
#include <sstream>

#include "vkl/errors.hpp"

namespace vkl {

namespace {

std::string monomial_text(const PolyRing& ring, const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.vars()[i];
        if (e[i] >= 2) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string coeff_text(const GaussRat& c) {
    if (c.is_rational()) return rational_str(c.re());
    if (c.re() == 0) {
        if (c.im() == 1) return "I";
        if (c.im() == -1) return "-I";
        return rational_str(c.im()) + "*I";
    }
    return c.str();   // parenthesized (re+im*I) form
}

std::string term_text(const PolyRing& ring, const Exponents& e, const GaussRat& c) {
    std::string mono = monomial_text(ring, e);
    if (mono.empty()) return coeff_text(c);
    if (c.is_one()) return mono;
    if (c.is_rational() && c.re() == -1) return "-" + mono;
    return coeff_text(c) + "*" + mono;
}

} // namespace

std::string poly_to_text(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // Term map is stored descending; print ascending.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string t = term_text(*p.ring(), it->first, it->second);
        if (out.empty())
            out = t;
        else if (!t.empty() && t[0] == '-')
            out += t;
        else
            out += "+" + t;
    }
    return out;
}

std::string ratfun_to_text(const RatFun& f) {
    if (f.is_polynomial()) return poly_to_text(f.num());
    return "(" + poly_to_text(f.num()) + ")/(" + poly_to_text(f.den()) + ")";
}

std::string MPoly::str() const { return poly_to_text(*this); }
std::string RatFun::str() const { return ratfun_to_text(*this); }

std::string UnitNormalized::str() const {
    if (den.is_one()) return poly_to_text(num);
    return "(" + poly_to_text(num) + ")/(" + poly_to_text(den) + ")";
}

namespace {

class Parser {
public:
    Parser(PolyRingPtr ring, const std::string& text) : ring_(std::move(ring)), s_(text) {}

    RatFun parse() {
        RatFun v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial syntax error at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RatFun expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        RatFun v = term();
        if (neg) v = -v;
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFun term() {
        RatFun v = factor();
        while (true) {
            if (eat('*'))
                v *= factor();
            else if (eat('/'))
                v /= factor();
            else
                return v;
        }
    }

    RatFun factor() {
        RatFun v = primary();
        if (eat('^')) {
            bool neg = eat('-');
            long k = integer();
            v = v.pow(static_cast<int>(neg ? -k : k));
        }
        return v;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    RatFun primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFun v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpq_class q(s_.substr(start, pos_ - start));
            return RatFun::constant(ring_, GaussRat(q));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "I") return RatFun::constant(ring_, GaussRat::i());
            auto idx = ring_->index_of(name);
            if (!idx) fail("unknown variable '" + name + "'");
            return RatFun::variable(ring_, *idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    PolyRingPtr ring_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

RatFun parse_ratfun(const PolyRingPtr& ring, const std::string& text) {
    return Parser(ring, text).parse();
}

MPoly parse_poly(const PolyRingPtr& ring, const std::string& text) {
    RatFun f = parse_ratfun(ring, text);
    if (!f.is_polynomial())
        throw ParseError("expected a polynomial, got a proper rational function");
    return f.num();
}

} // namespace vkl
