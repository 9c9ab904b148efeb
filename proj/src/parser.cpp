#include "sing/parser.hpp"

#include <cctype>

#include "sing/errors.hpp"

namespace sing {
namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }
};

struct Parser {
    Lexer lx;
    const std::vector<std::string>& vars;
    int nvars;

    Parser(const std::string& text, const std::vector<std::string>& v)
        : lx{text}, vars(v), nvars(static_cast<int>(v.size())) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (!lx.eof()) throw ParseError("trailing input", lx.pos);
        return p;
    }

    Polynomial expr() {
        bool neg = false;
        if (lx.accept('-'))
            neg = true;
        else
            lx.accept('+');
        Polynomial p = term();
        if (neg) p = -p;
        for (;;) {
            if (lx.accept('+'))
                p = p + term();
            else if (lx.accept('-'))
                p = p - term();
            else
                break;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (lx.accept('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (lx.accept('^')) {
            unsigned long k = nat("as exponent");
            return b.pow(static_cast<unsigned>(k));
        }
        return b;
    }

    Polynomial base() {
        char c = lx.peek();
        if (c == '(') {
            lx.accept('(');
            Polynomial p = expr();
            lx.expect(')', "to close parenthesis");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError("expected a rational, identifier or '('", lx.pos);
    }

    Polynomial rational() {
        std::size_t at = lx.pos;
        bool neg = lx.accept('-');
        mpz_class num = integer_digits("as numerator");
        if (neg) num = -num;
        mpz_class den = 1;
        if (lx.accept('/')) {
            std::size_t dpos = lx.pos;
            den = integer_digits("as denominator");
            if (den == 0) throw ParseError("zero denominator in rational literal", dpos);
        }
        (void)at;
        Rat r(num, den);
        r.canonicalize();
        return Polynomial::constant(nvars, r);
    }

    unsigned long nat(const char* what) {
        lx.skip_ws();
        std::size_t at = lx.pos;
        if (at >= lx.s.size() || !std::isdigit(static_cast<unsigned char>(lx.s[at])))
            throw ParseError(std::string("expected a natural number ") + what, at);
        mpz_class v = integer_digits(what);
        if (v > 1000000) throw ParseError("exponent too large", at);
        return v.get_ui();
    }

    mpz_class integer_digits(const char* what) {
        lx.skip_ws();
        std::size_t at = lx.pos;
        std::string digits;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
            digits += lx.s[lx.pos++];
        if (digits.empty())
            throw ParseError(std::string("expected digits ") + what, at);
        return mpz_class(digits);
    }

    Polynomial identifier() {
        lx.skip_ws();
        std::size_t at = lx.pos;
        std::string name;
        while (lx.pos < lx.s.size() &&
               (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
            name += lx.s[lx.pos++];
        for (int i = 0; i < nvars; ++i)
            if (vars[i] == name) return Polynomial::variable(nvars, i);
        throw ParseError("unknown variable '" + name + "'", at);
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    Parser p(text, vars);
    return p.parse();
}

}  // namespace sing
