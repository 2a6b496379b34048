#include "ajtorus/parse.hpp"

#include <cctype>

#include "ajtorus/errors.hpp"

namespace ajt {

namespace {

LPolynomial add(LPolynomial a, const LPolynomial& b, bool negate) {
    for (const auto& [e, c] : b) {
        RationalFunction s = negate ? a[e] - c : a[e] + c;
        if (s.is_zero()) {
            a.erase(e);
        } else {
            a[e] = std::move(s);
        }
    }
    return a;
}

LPolynomial mul(const LPolynomial& a, const LPolynomial& b) {
    LPolynomial r;
    for (const auto& [i, x] : a) {
        for (const auto& [j, y] : b) {
            RationalFunction s = r[i + j] + x * y;
            if (s.is_zero()) {
                r.erase(i + j);
            } else {
                r[i + j] = std::move(s);
            }
        }
    }
    return r;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    LPolynomial parse() {
        LPolynomial v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    int exponent() {
        bool paren = accept('(');
        bool neg = accept('-');
        if (!neg) accept('+');
        mpz_class v = integer();
        if (!v.fits_sint_p()) fail("exponent out of range");
        if (paren && !accept(')')) fail("expected ')'");
        int e = static_cast<int>(v.get_si());
        return neg ? -e : e;
    }

    LPolynomial expr() {
        LPolynomial acc;
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        acc = add(std::move(acc), term(), negate);
        while (true) {
            if (accept('+')) {
                acc = add(std::move(acc), term(), false);
            } else if (accept('-')) {
                acc = add(std::move(acc), term(), true);
            } else {
                return acc;
            }
        }
    }

    LPolynomial term() {
        LPolynomial acc = factor();
        while (true) {
            if (accept('*')) {
                acc = mul(acc, factor());
            } else if (accept('/')) {
                acc = mul(acc, invert(factor()));
            } else {
                return acc;
            }
        }
    }

    LPolynomial invert(const LPolynomial& v) {
        if (v.empty()) fail("division by zero");
        if (v.size() != 1) fail("division by an expression involving L");
        return {{-v.begin()->first, v.begin()->second.inverse()}};
    }

    LPolynomial factor() {
        LPolynomial base = atom();
        if (!accept('^')) return base;
        int e = exponent();
        if (e < 0) {
            base = invert(base);
            e = -e;
        }
        LPolynomial r{{0, RationalFunction(1)}};
        for (int k = 0; k < e; ++k) r = mul(r, base);
        return r;
    }

    LPolynomial atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            LPolynomial v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = integer();
            if (v == 0) return {};
            return {{0, RationalFunction(BLaurent(v))}};
        }
        ++pos_;
        switch (c) {
            case 't':
                return {{0, rf_t(1)}};
            case 'M':
                return {{0, rf_m(1)}};
            case 'L':
                return {{1, RationalFunction(1)}};
            default:
                --pos_;
                fail(std::string("unknown symbol '") + c + "'");
        }
    }
};

}  // namespace

LPolynomial parse_l_polynomial(std::string_view text) { return Parser(text).parse(); }

RationalFunction parse_rational_function(std::string_view text) {
    LPolynomial v = parse_l_polynomial(text);
    if (v.empty()) return RationalFunction();
    if (v.size() != 1 || v.begin()->first != 0) throw ParseError("unexpected L in \"" + std::string(text) + "\"");
    return v.begin()->second;
}

BLaurent parse_laurent(std::string_view text) {
    RationalFunction r = parse_rational_function(text);
    if (!r.is_polynomial()) throw ParseError("not a Laurent polynomial: \"" + std::string(text) + "\"");
    return r.num();
}

std::string render_l_polynomial(const std::map<int, std::string>& coeffs, const std::string& var) {
    if (coeffs.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        const int e = it->first;
        std::string c = it->second;
        bool simple = c.find_first_of("+/") == std::string::npos && c.find(" - ") == std::string::npos;
        bool negative = simple && !c.empty() && c[0] == '-';
        if (negative) c.erase(0, 1);
        if (!first) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        first = false;
        std::string power = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
        if (power.empty()) {
            out += simple ? c : "(" + c + ")";
        } else if (simple && c == "1") {
            out += power;
        } else {
            out += (simple ? c : "(" + c + ")") + "*" + power;
        }
    }
    return out;
}

}  // namespace ajt
