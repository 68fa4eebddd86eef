#pragma once

#include <cctype>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "../ideal.hpp"
#include "../poly.hpp"

namespace nfilt::cli {

struct Token {
    enum class Kind { ident, number, symbol, newline, end };
    Kind kind = Kind::end;
    std::string text;
    int line = 1;
    int col = 1;
};

inline Error parse_error(int line, int col, const std::string& msg, Errc code = Errc::parse_error) {
    return Error(code, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (c == '\n' || c == ';') {
            out.push_back({Token::Kind::newline, std::string(1, c), line, col});
            advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        std::size_t j = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            t.kind = Token::Kind::ident;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Token::Kind::number;
        } else if (std::string_view("+-*/^=,()<>").find(c) != std::string_view::npos) {
            j = i + 1;
            t.kind = Token::Kind::symbol;
        } else {
            throw parse_error(line, col, std::string("unexpected character '") + c + "'");
        }
        t.text = src.substr(i, j - i);
        out.push_back(t);
        advance(j - i);
    }
    out.push_back({Token::Kind::end, "", line, col});
    return out;
}

// a tuple slot is either a bare polynomial or an ideal
using Item = std::variant<Poly, Ideal>;

struct Tuple {
    std::vector<Item> items;

    bool all_polys() const {
        return std::all_of(items.begin(), items.end(), [](const Item& x) { return std::holds_alternative<Poly>(x); });
    }
    std::vector<Poly> polys() const {
        std::vector<Poly> v;
        for (const auto& x : items) v.push_back(std::get<Poly>(x));
        return v;
    }
    IdealTuple ideals() const {
        std::vector<Ideal> v;
        for (const auto& x : items) v.push_back(std::holds_alternative<Poly>(x) ? Ideal::principal(std::get<Poly>(x)) : std::get<Ideal>(x));
        return IdealTuple(std::move(v));
    }
};

struct WeightsRef {};  // `filtration = w`

using Value = std::variant<Poly, Ideal, Tuple, std::vector<int>, WeightsRef>;

struct Request {
    std::vector<std::string> vars;
    std::map<std::string, Value> values;
    std::vector<std::string> order;  // definition order

    std::size_t dim() const { return vars.size(); }
    bool has(const std::string& name) const { return values.count(name) > 0; }
};

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

    Request run() {
        for (;;) {
            skip_newlines();
            if (peek().kind == Token::Kind::end) break;
            statement();
            if (peek().kind != Token::Kind::newline && peek().kind != Token::Kind::end)
                throw error(peek(), "expected end of statement, found '" + peek().text + "'");
        }
        return std::move(req_);
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int depth_ = 0;  // newlines are plain whitespace inside brackets
    Request req_;

    const Token& peek(std::size_t k = 0) {
        std::size_t p = pos_;
        for (std::size_t seen = 0;; ++p) {
            if (depth_ > 0)
                while (toks_[p].kind == Token::Kind::newline) ++p;
            if (seen == k || toks_[p].kind == Token::Kind::end) return toks_[p];
            ++seen;
        }
    }

    Token next() {
        if (depth_ > 0)
            while (toks_[pos_].kind == Token::Kind::newline) ++pos_;
        Token t = toks_[pos_];
        if (t.kind != Token::Kind::end) ++pos_;
        return t;
    }

    static Error error(const Token& t, const std::string& msg, Errc code = Errc::parse_error) {
        return parse_error(t.line, t.col, msg, code);
    }

    bool at(const char* sym) {
        const auto& t = peek();
        return t.kind == Token::Kind::symbol && t.text == sym;
    }

    Token expect(const char* sym) {
        if (!at(sym)) {
            const auto& t = peek();
            throw error(t, std::string("expected '") + sym + "', found " + (t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'"));
        }
        return next();
    }

    void skip_newlines() {
        while (toks_[pos_].kind == Token::Kind::newline) ++pos_;
    }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < req_.vars.size(); ++i)
            if (req_.vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    void statement() {
        Token head = next();
        if (head.kind != Token::Kind::ident) throw error(head, "expected a statement");
        if (head.text == "vars") {
            if (!req_.vars.empty()) throw error(head, "variables already declared");
            for (;;) {
                Token v = next();
                if (v.kind != Token::Kind::ident) throw error(v, "expected a variable name");
                if (var_index(v.text) >= 0) throw error(v, "duplicate variable '" + v.text + "'");
                if (v.text == "vars" || v.text == "w") throw error(v, "reserved name '" + v.text + "'");
                req_.vars.push_back(v.text);
                if (!at(",")) break;
                next();
            }
            if (req_.vars.size() > kMaxDim) throw error(head, "at most 6 variables", Errc::dimension_mismatch);
            return;
        }
        if (req_.vars.empty()) throw error(head, "variables must be declared first with 'vars'");
        if (var_index(head.text) >= 0) throw error(head, "cannot assign to variable '" + head.text + "'");
        expect("=");
        Value v;
        if (head.text == "w") {
            v = weights(head);
        } else if (head.text == "filtration" && peek().kind == Token::Kind::ident && peek().text == "w" && !req_.has("w") &&
                   is_statement_end(peek(1))) {
            throw error(peek(), "weights 'w' are not defined", Errc::unknown_variable);
        } else if (head.text == "filtration" && peek().kind == Token::Kind::ident && peek().text == "w" && is_statement_end(peek(1))) {
            next();
            v = WeightsRef{};
        } else {
            v = expression();
        }
        if (!req_.has(head.text)) req_.order.push_back(head.text);
        req_.values[head.text] = std::move(v);
    }

    static bool is_statement_end(const Token& t) { return t.kind == Token::Kind::newline || t.kind == Token::Kind::end; }

    std::vector<int> weights(const Token& head) {
        Token open = expect("(");
        ++depth_;
        std::vector<int> w;
        for (;;) {
            Token t = next();
            if (t.kind != Token::Kind::number) throw error(t, "expected a positive integer weight");
            if (t.text.size() > 9) throw error(t, "weight too large");
            w.push_back(std::stoi(t.text));
            if (!at(",")) break;
            next();
        }
        --depth_;
        expect(")");
        if (w.size() != req_.dim()) throw error(head, "weight vector length differs from the number of variables", Errc::dimension_mismatch);
        (void)open;
        return w;
    }

    // '(' opens a tuple when a comma sits at its top level and the matching ')' ends the statement
    bool paren_is_tuple() {
        int d = 0;
        bool comma = false;
        for (std::size_t p = pos_; toks_[p].kind != Token::Kind::end; ++p) {
            const auto& t = toks_[p];
            if (t.kind != Token::Kind::symbol) continue;
            if (t.text == "(" || t.text == "<") ++d;
            if (t.text == ")" || t.text == ">") {
                if (--d == 0) {
                    std::size_t q = p + 1;
                    return comma && is_statement_end(toks_[q]);
                }
            }
            if (t.text == "," && d == 1) comma = true;
        }
        return false;
    }

    Value expression() {
        if (at("(") && paren_is_tuple()) {
            Token open = next();
            ++depth_;
            Tuple T;
            for (;;) {
                T.items.push_back(item());
                if (!at(",")) break;
                next();
            }
            --depth_;
            expect(")");
            if (T.items.size() != req_.dim())
                throw error(open, "tuple has " + std::to_string(T.items.size()) + " entries for " + std::to_string(req_.dim()) + " variables",
                            Errc::dimension_mismatch);
            return T;
        }
        if (at("<")) return ideal();
        const auto& t = peek();
        if (t.kind == Token::Kind::ident && req_.has(t.text) && is_statement_end(peek(1))) return req_.values.at(next().text);
        return poly();
    }

    Item item() {
        if (at("<")) return ideal();
        const auto& t = peek();
        if (t.kind == Token::Kind::ident && req_.has(t.text)) {
            const auto& after = peek(1);
            if (after.kind == Token::Kind::symbol && (after.text == "," || after.text == ")")) {
                Token name = next();
                const auto& v = req_.values.at(name.text);
                if (auto* p = std::get_if<Poly>(&v)) return *p;
                if (auto* I = std::get_if<Ideal>(&v)) return *I;
                throw error(name, "'" + name.text + "' is not a polynomial or an ideal");
            }
        }
        return poly();
    }

    Ideal ideal() {
        Token open = expect("<");
        ++depth_;
        if (at(">")) throw error(peek(), "empty ideal");
        std::vector<Poly> gens;
        for (;;) {
            gens.push_back(poly());
            if (!at(",")) break;
            next();
        }
        --depth_;
        expect(">");
        (void)open;
        return Ideal(req_.dim(), std::move(gens));
    }

    Poly poly() {
        Poly acc(req_.dim());
        bool first = true;
        for (;;) {
            int sign = 1;
            if (at("+") || at("-")) {
                sign = next().text == "-" ? -1 : 1;
            } else if (!first) {
                break;
            }
            Poly t = term();
            acc += sign < 0 ? t.scaled(-1) : t;
            first = false;
        }
        return acc;
    }

    bool starts_factor() {
        const auto& t = peek();
        return t.kind == Token::Kind::ident || t.kind == Token::Kind::number || (t.kind == Token::Kind::symbol && t.text == "(");
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (at("*")) {
                next();
                acc = acc * factor();
            } else if (at("/")) {
                next();
                Token d = next();
                if (d.kind != Token::Kind::number) throw error(d, "only integer divisors are allowed");
                Rational q(d.text);
                if (q == 0) throw error(d, "division by zero");
                acc = acc.scaled(Rational(1) / q);
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (at("^")) {
            next();
            Token e = next();
            if (e.kind != Token::Kind::number) throw error(e, "expected a nonnegative integer exponent");
            if (e.text.size() > 4) throw error(e, "exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
        }
        return base;
    }

    Poly atom() {
        Token t = next();
        const std::size_t n = req_.dim();
        if (t.kind == Token::Kind::number) return Poly::monomial(ExpVec(n), Rational(t.text));
        if (t.kind == Token::Kind::ident) {
            int i = var_index(t.text);
            if (i >= 0) return Poly::monomial(ExpVec::unit(n, static_cast<std::size_t>(i)));
            if (req_.has(t.text)) {
                if (auto* p = std::get_if<Poly>(&req_.values.at(t.text))) return *p;
                throw error(t, "'" + t.text + "' is not a polynomial");
            }
            throw error(t, "unknown variable '" + t.text + "'", Errc::unknown_variable);
        }
        if (t.kind == Token::Kind::symbol && t.text == "(") {
            ++depth_;
            Poly p = poly();
            --depth_;
            expect(")");
            return p;
        }
        if (t.kind == Token::Kind::end) throw error(t, "unexpected end of input");
        if (t.kind == Token::Kind::newline) throw error(t, "unexpected end of statement");
        throw error(t, "unexpected '" + t.text + "'");
    }
};

inline Request parse(const std::string& text) { return Parser(text).run(); }

// parses a lone polynomial in the given variables
inline Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    std::string src = "vars ";
    for (std::size_t i = 0; i < vars.size(); ++i) src += (i ? "," : "") + vars[i];
    auto req = parse(src + "\n_p = " + text);
    if (!req.has("_p")) throw Error(Errc::parse_error, "no polynomial");
    return std::get<Poly>(req.values.at("_p"));
}

}// namespace nfilt::cli
