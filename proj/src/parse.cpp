#include "quadff/parse.hpp"

#include "quadff/errors.hpp"

#include <cctype>
#include <map>

namespace quadff {

namespace {

constexpr int kMaxExponent = 1 << 20;

struct Parser {
    const FieldSpec& field;
    std::string_view text;
    const std::string& var;
    const std::string& gen;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    bool consume(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    bool consume_word(const std::string& w) {
        skip_ws();
        if (text.substr(pos, w.size()) != w) return false;
        pos += w.size();
        return true;
    }

    bool digit_ahead() {
        skip_ws();
        return std::isdigit(static_cast<unsigned char>(peek()));
    }

    // Digits reduced mod p on the fly, so the literal's size is unbounded.
    uint32_t integer_mod_p() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        uint64_t p = field.characteristic();
        uint64_t acc = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            acc = (acc * 10 + uint64_t(text[pos] - '0')) % p;
            ++pos;
        }
        return static_cast<uint32_t>(acc);
    }

    int exponent() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a nonnegative exponent");
        size_t start = pos;
        int64_t acc = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            acc = acc * 10 + (text[pos] - '0');
            if (acc > kMaxExponent) {
                pos = start;
                fail("exponent too large");
            }
            ++pos;
        }
        return static_cast<int>(acc);
    }

    // VAR ['^' e], the symbol already consumed.
    int power_tail() { return consume('^') ? exponent() : 1; }

    // Parenthesized polynomial in the generator, evaluated to an element.
    FieldElement generator_coeff() {
        size_t open = pos;
        ++pos;  // '('
        FieldElement acc = ff_zero(field);
        bool negative = consume('-');
        while (true) {
            uint32_t c;
            int e;
            skip_ws();
            size_t sym = pos;
            if (digit_ahead()) {
                c = integer_mod_p();
                bool star = consume('*');
                skip_ws();
                sym = pos;
                if (consume_word(gen))
                    e = power_tail();
                else if (star)
                    fail("expected the generator symbol after '*'");
                else
                    e = 0;
            } else if (consume_word(gen)) {
                c = 1;
                e = power_tail();
            } else {
                fail("expected a coefficient term");
            }
            if (e >= static_cast<int>(field.degree())) {
                pos = sym;
                fail("generator power outside the field basis");
            }
            FieldElement term = ff_zero(field);
            term[size_t(e)] = c;
            if (negative) term = ff_neg(field, term);
            acc = ff_add(field, acc, term);
            if (consume('+'))
                negative = false;
            else if (consume('-'))
                negative = true;
            else
                break;
        }
        if (!consume(')')) {
            pos = open;
            fail("unbalanced '('");
        }
        return acc;
    }

    Polynomial parse() {
        if (field.degree() > 1 && var == gen)
            throw std::invalid_argument("variable and generator symbols must differ");
        std::map<int, FieldElement> terms;
        bool negative = consume('-');
        while (true) {
            FieldElement c = ff_one(field);
            bool have_coeff = false;
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                FieldElement v = ff_zero(field);
                v[0] = integer_mod_p();
                c = v;
                have_coeff = true;
            } else if (peek() == '(') {
                if (field.degree() == 1) fail("parenthesized coefficients need an extension field");
                c = generator_coeff();
                have_coeff = true;
            }
            int e = 0;
            if (have_coeff) {
                bool star = consume('*');
                if (consume_word(var))
                    e = power_tail();
                else if (star)
                    fail("expected the variable after '*'");
            } else if (consume_word(var)) {
                e = power_tail();
            } else {
                fail("expected a term");
            }
            if (negative) c = ff_neg(field, c);
            auto [it, fresh] = terms.emplace(e, c);
            if (!fresh) it->second = ff_add(field, it->second, c);
            if (consume('+'))
                negative = false;
            else if (consume('-'))
                negative = true;
            else
                break;
        }
        if (!at_end()) fail("trailing characters after the polynomial");

        int deg = terms.empty() ? -1 : terms.rbegin()->first;
        std::vector<FieldElement> coeffs(size_t(deg + 1), ff_zero(field));
        for (const auto& [e, c] : terms) coeffs[size_t(e)] = c;
        return poly_from_coeffs(field, std::move(coeffs));
    }
};

}  // namespace

Polynomial poly_parse(const FieldSpec& k, std::string_view text, const std::string& var,
                      const std::string& gen) {
    Parser parser{k, text, var, gen};
    return parser.parse();
}

}  // namespace quadff
