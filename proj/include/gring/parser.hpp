#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gring/polynomial.hpp"

namespace gring {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

template <class F>
using Bindings = std::map<std::string, Polynomial<F>, std::less<>>;

namespace detail {

/// Recursive-descent parser for the grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := ('+'|'-') factor | primary ('^' natural)?
///   primary:= rational | identifier | '(' expr ')'
/// Identifiers resolve to ring variables first, then to bound names.
template <class F>
class PolyParser {
public:
    PolyParser(std::string_view text, RingPtr<F> ring, const Bindings<F>* bindings)
        : text_(text), ring_(std::move(ring)), bindings_(bindings) {}

    Polynomial<F> run() {
        Polynomial<F> p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    Polynomial<F> expr() {
        Polynomial<F> acc = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial<F> term() {
        Polynomial<F> acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial<F> factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        if (peek() == '+') {
            ++pos_;
            return factor();
        }
        Polynomial<F> base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            return base.pow(natural());
        }
        return base;
    }

    Polynomial<F> primary() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial<F> inner = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError("expected a number, variable, or '('", pos_);
    }

    Polynomial<F> number() {
        BigInt num = integer();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected denominator digits", pos_);
            BigInt den = integer();
            if (den == 0) throw ParseError("zero denominator", pos_);
            return Polynomial<F>::constant(ring_, ring_->field().from_ratio(num, den));
        }
        return Polynomial<F>::constant(ring_, ring_->field().from_ratio(num, 1));
    }

    Polynomial<F> identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (auto idx = ring_->index_of(name)) return Polynomial<F>::variable(ring_, *idx);
        if (bindings_) {
            auto it = bindings_->find(name);
            if (it != bindings_->end()) {
                if (!compatible(it->second.ring(), ring_))
                    throw ParseError("binding '" + std::string(name) + "' uses a different ring",
                                     start);
                return it->second;
            }
        }
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }

    BigInt integer() {
        BigInt v = 0;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected digits", pos_);
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    unsigned natural() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a natural-number exponent", pos_);
        unsigned long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
            if (v > 100000) throw ParseError("exponent out of range", pos_);
            ++pos_;
        }
        return static_cast<unsigned>(v);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string_view text_;
    std::size_t pos_ = 0;
    RingPtr<F> ring_;
    const Bindings<F>* bindings_;
};

}  // namespace detail

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring,
                               const Bindings<F>& bindings) {
    return detail::PolyParser<F>(text, ring, &bindings).run();
}

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
    return detail::PolyParser<F>(text, ring, nullptr).run();
}

/// Field-independent form of a ring declaration line,
/// e.g. "ring x0:1 x1:1 y:2 over GF(32003)".
struct RingDecl {
    std::vector<std::string> names;
    std::vector<int> weights;
    FieldSpec field;
};

inline RingDecl parse_ring_decl(std::string_view line) {
    RingDecl decl;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    };
    const auto word = [&]() -> std::string_view {
        skip_ws();
        const std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        return line.substr(start, pos - start);
    };
    if (word() != "ring") throw ParseError("ring declaration must start with 'ring'", 0);
    while (true) {
        const std::size_t start = pos;
        const std::string_view w = word();
        if (w.empty()) throw ParseError("ring declaration ended before 'over <field>'", pos);
        if (w == "over") break;
        const auto colon = w.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("expected '<name>:<weight>'", start);
        const std::string_view name = w.substr(0, colon), digits = w.substr(colon + 1);
        if (digits.empty()) throw ParseError("missing weight", start);
        int weight = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad weight '" + std::string(digits) + "'", start);
            weight = weight * 10 + (c - '0');
            if (weight > 1000000) throw ParseError("weight out of range", start);
        }
        decl.names.emplace_back(name);
        decl.weights.push_back(weight);
    }
    const std::string_view field_text = word();
    if (field_text.empty()) throw ParseError("missing field after 'over'", pos);
    decl.field = FieldSpec::parse(field_text);
    skip_ws();
    if (pos != line.size()) throw ParseError("unexpected trailing input", pos);
    if (decl.names.empty()) throw ParseError("ring declaration has no variables", 0);
    return decl;
}

template <class F>
RingPtr<F> realize_ring(const RingDecl& decl, const F& field) {
    if (field.spec() != decl.field)
        throw std::invalid_argument("field instance does not match the declaration '" +
                                    decl.field.name() + "'");
    return make_ring<F>(decl.names, decl.weights, field);
}

}  // namespace gring
