#include "qtoric/cli/parser.hpp"

#include <cctype>

namespace qtoric {

namespace {

class Parser {
public:
    Parser(const std::string& text, const FieldPtr& field, const std::string& vars)
        : s_(text), field_(field), vars_(vars) {}

    TriPoly run() {
        skip_ws();
        if (pos_ >= s_.size()) fail("empty expression");
        TriPoly r = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected token");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string tok = pos_ < s_.size() ? std::string(1, s_[pos_]) : std::string("end of input");
        size_t e = pos_;
        while (e < s_.size() && std::isalnum(static_cast<unsigned char>(s_[e]))) ++e;
        if (e > pos_ + 1) tok = s_.substr(pos_, e - pos_);
        throw Error(ErrorKind::SyntaxError, what + " at line " + std::to_string(line) + ", column " +
                                                std::to_string(col) + " near '" + tok + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Int integer() {
        skip_ws();
        size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected integer");
        return Int(s_.substr(b, pos_ - b));
    }

    TriPoly expr() {
        TriPoly r = term();
        while (true) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }

    TriPoly term() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        TriPoly r = power();
        while (accept('*')) r *= power();
        return neg ? -r : r;
    }

    TriPoly power() {
        TriPoly a = atom();
        if (accept('^')) {
            Int e = integer();
            if (!e.fits_uint_p() || e > 100000) fail("exponent too large");
            a = a.pow(static_cast<unsigned>(e.get_ui()));
            if (peek('^')) fail("chained exponent");
        }
        return a;
    }

    FieldElem root_of_unity(unsigned m) {
        if (m == 0) fail("w{0} is not a root of unity");
        if (m == 1) return FieldElem(1);
        if (!field_) throw Error(ErrorKind::UnknownConstant, "w" + std::to_string(m) + " needs a cyclotomic field");
        if (m == 2) return FieldElem(-1);
        if (field_->n() % m != 0)
            throw Error(ErrorKind::UnknownConstant,
                        "w" + std::to_string(m) + " is not in " + field_->describe());
        return FieldElem::root_of_unity(field_, m);
    }

    TriPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            TriPoly r = expr();
            expect(')');
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = integer();
            Rat v(n);
            size_t save = pos_;
            if (accept('/')) {
                skip_ws();
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    Int d = integer();
                    if (d == 0) fail("zero denominator");
                    v = Rat(n, d);
                    v.canonicalize();
                } else {
                    pos_ = save;
                    fail("division is only allowed between integer literals");
                }
            }
            return TriPoly(FieldElem(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t b = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string word = s_.substr(b, pos_ - b);
            if (word == "rad") {
                if (!field_ || !field_->has_radical()) {
                    pos_ = b;
                    throw Error(ErrorKind::UnknownConstant, "rad needs a field with a radical layer");
                }
                return TriPoly(FieldElem::gen_b(field_));
            }
            if (word == "w") {
                Int m;
                if (pos_ < s_.size() && s_[pos_] == '{') {
                    ++pos_;
                    m = integer();
                    expect('}');
                } else {
                    m = integer();
                }
                if (!m.fits_uint_p()) fail("root of unity order too large");
                return TriPoly(root_of_unity(static_cast<unsigned>(m.get_ui())));
            }
            if (word.size() == 1) {
                auto idx = vars_.find(word[0]);
                if (idx != std::string::npos && idx < 3) return TriPoly::var(static_cast<Var>(idx));
            }
            pos_ = b;
            fail("unknown identifier");
        }
        fail("unexpected token");
    }

    const std::string& s_;
    FieldPtr field_;
    std::string vars_;
    size_t pos_ = 0;
};

}  // namespace

TriPoly parse_expression(const std::string& text, const FieldPtr& field, const std::string& vars) {
    return Parser(text, field, vars).run();
}

FieldElem parse_constant(const std::string& text, const FieldPtr& field) {
    TriPoly p = parse_expression(text, field, "");
    return p.constant_value();
}

UPoly parse_upoly(const std::string& text) {
    TriPoly p = parse_expression(text, nullptr, "t");
    std::vector<Rat> c(std::max(0, p.degree() + 1));
    for (const auto& [key, v] : p.terms()) c[unpack(key)[0]] = v.rational_value();
    return UPoly(std::move(c));
}

AlexPoly parse_alexander(const std::string& text) { return alex_from_upoly(parse_upoly(text)); }

}  // namespace qtoric
