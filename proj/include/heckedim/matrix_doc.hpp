#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heckedim/gw.hpp"
#include "heckedim/hecke.hpp"

namespace heckedim {

// Input language for matrices over RW:
//
//   document := header row+
//   header   := "basis" ("group"|"tau") "size" INT "x" INT
//   row      := "[" expr ("," expr)* "]"
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := RATIONAL | atom | "(" expr ")" | factor "^" SINT
//   atom     := "e" | "s" | "t" | "Ts" | "Tt"
//
// Whitespace is insignificant; "Ts"/"Tt" are legal only under basis tau;
// powers apply to atoms and parenthesized expressions.

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, std::size_t col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}

    std::size_t line, col;
};

enum class AtomKind : std::uint8_t { e, s, t, Ts, Tt };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind : std::uint8_t { number, atom, add, sub, mul, pow };

    Kind kind;
    Rational value;          // number
    AtomKind atom{};         // atom
    ExprPtr lhs, rhs;        // add/sub/mul, pow base in lhs
    std::int64_t exponent{}; // pow
    std::size_t line = 0, col = 0;
};

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprNode::Kind::number: return a->value == b->value;
        case ExprNode::Kind::atom: return a->atom == b->atom;
        case ExprNode::Kind::pow:
            return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
        default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

struct MatrixDocument {
    HBasis basis = HBasis::group;
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<ExprPtr>> entries;

    friend bool operator==(const MatrixDocument& a, const MatrixDocument& b) {
        if (a.basis != b.basis || a.rows != b.rows || a.cols != b.cols) return false;
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t j = 0; j < a.cols; ++j)
                if (!expr_equal(a.entries[i][j], b.entries[i][j])) return false;
        return true;
    }
};

namespace parser_detail {

struct Token {
    enum class Kind : std::uint8_t { ident, integer, sym, end };

    Kind kind = Kind::end;
    std::string text;
    std::size_t line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) return t;
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::ident;
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
                t.text += take();
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::integer;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                t.text += take();
            return t;
        }
        if (std::string_view("[],+-*/^()").find(c) != std::string_view::npos) {
            t.kind = Token::Kind::sym;
            t.text = take();
            return t;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

private:
    char take() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) take();
    }

    std::string_view src_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { advance(); }

    MatrixDocument document() {
        MatrixDocument doc;
        expect_ident("basis");
        const Token bt = expect(Token::Kind::ident, "basis name 'group' or 'tau'");
        if (bt.text == "group") doc.basis = HBasis::group;
        else if (bt.text == "tau") doc.basis = HBasis::tau;
        else throw ParseError(bt.line, bt.col, "expected 'group' or 'tau', got '" + bt.text + "'");
        expect_ident("size");
        doc.rows = expect_size();
        expect_ident("x");
        doc.cols = expect_size();
        if (doc.rows == 0 || doc.cols == 0)
            throw ParseError(cur_.line, cur_.col, "matrix dimensions must be positive");
        for (std::size_t i = 0; i < doc.rows; ++i) doc.entries.push_back(row(doc));
        if (cur_.kind != Token::Kind::end)
            throw ParseError(cur_.line, cur_.col,
                             "expected end of input after " + std::to_string(doc.rows) + " rows");
        return doc;
    }

private:
    void advance() { cur_ = lex_.next(); }

    bool at_sym(char c) const {
        return cur_.kind == Token::Kind::sym && cur_.text.size() == 1 && cur_.text[0] == c;
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (cur_.kind != kind)
            throw ParseError(cur_.line, cur_.col, "expected " + what + ", got '" + cur_.text + "'");
        Token t = cur_;
        advance();
        return t;
    }

    void expect_ident(const std::string& word) {
        if (cur_.kind != Token::Kind::ident || cur_.text != word)
            throw ParseError(cur_.line, cur_.col,
                             "expected '" + word + "', got '" + cur_.text + "'");
        advance();
    }

    void expect_sym(char c) {
        if (!at_sym(c))
            throw ParseError(cur_.line, cur_.col,
                             std::string("expected '") + c + "', got '" + cur_.text + "'");
        advance();
    }

    std::size_t expect_size() {
        const Token t = expect(Token::Kind::integer, "an integer");
        try {
            return static_cast<std::size_t>(std::stoull(t.text));
        } catch (const std::exception&) {
            throw ParseError(t.line, t.col, "dimension out of range");
        }
    }

    std::vector<ExprPtr> row(const MatrixDocument& doc) {
        expect_sym('[');
        std::vector<ExprPtr> out;
        out.push_back(expr(doc));
        while (at_sym(',')) {
            advance();
            out.push_back(expr(doc));
        }
        const Token closing = cur_;
        expect_sym(']');
        if (out.size() != doc.cols)
            throw ParseError(closing.line, closing.col,
                             "row has " + std::to_string(out.size()) + " entries, expected " +
                                 std::to_string(doc.cols));
        return out;
    }

    ExprPtr expr(const MatrixDocument& doc) {
        ExprPtr lhs = term(doc);
        while (at_sym('+') || at_sym('-')) {
            const bool plus = cur_.text[0] == '+';
            const Token op = cur_;
            advance();
            auto node = std::make_shared<ExprNode>();
            node->kind = plus ? ExprNode::Kind::add : ExprNode::Kind::sub;
            node->lhs = lhs;
            node->rhs = term(doc);
            node->line = op.line;
            node->col = op.col;
            lhs = node;
        }
        return lhs;
    }

    ExprPtr term(const MatrixDocument& doc) {
        ExprPtr lhs = factor(doc);
        while (at_sym('*')) {
            const Token op = cur_;
            advance();
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Kind::mul;
            node->lhs = lhs;
            node->rhs = factor(doc);
            node->line = op.line;
            node->col = op.col;
            lhs = node;
        }
        return lhs;
    }

    ExprPtr factor(const MatrixDocument& doc) {
        ExprPtr base = primary(doc);
        while (at_sym('^')) {
            const Token caret = cur_;
            advance();
            bool neg = false;
            if (at_sym('-')) {
                neg = true;
                advance();
            }
            const Token e = expect(Token::Kind::integer, "an integer exponent");
            std::int64_t mag = 0;
            try {
                mag = static_cast<std::int64_t>(std::stoll(e.text));
            } catch (const std::exception&) {
                throw ParseError(e.line, e.col, "exponent out of range");
            }
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Kind::pow;
            node->lhs = base;
            node->exponent = mag * (neg ? -1 : 1);
            node->line = caret.line;
            node->col = caret.col;
            base = node;
        }
        return base;
    }

    ExprPtr primary(const MatrixDocument& doc) {
        if (cur_.kind == Token::Kind::integer) {
            const Token n = cur_;
            advance();
            mpz_class num(n.text), den(1);
            if (at_sym('/')) {
                advance();
                const Token d = expect(Token::Kind::integer, "a denominator");
                den = mpz_class(d.text);
                if (den == 0) throw ParseError(d.line, d.col, "zero denominator");
            }
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Kind::number;
            node->value = Rational(num, den);
            node->line = n.line;
            node->col = n.col;
            return node;
        }
        if (cur_.kind == Token::Kind::ident) {
            const Token a = cur_;
            advance();
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Kind::atom;
            node->line = a.line;
            node->col = a.col;
            if (a.text == "e") node->atom = AtomKind::e;
            else if (a.text == "s") node->atom = AtomKind::s;
            else if (a.text == "t") node->atom = AtomKind::t;
            else if (a.text == "Ts") node->atom = AtomKind::Ts;
            else if (a.text == "Tt") node->atom = AtomKind::Tt;
            else throw ParseError(a.line, a.col, "unknown atom '" + a.text + "'");
            if ((node->atom == AtomKind::Ts || node->atom == AtomKind::Tt) &&
                doc.basis == HBasis::group)
                throw ParseError(a.line, a.col, "'" + a.text + "' requires basis tau");
            return node;
        }
        if (at_sym('(')) {
            advance();
            ExprPtr inner = expr(doc);
            expect_sym(')');
            return inner;
        }
        throw ParseError(cur_.line, cur_.col, "expected an entry expression, got '" + cur_.text + "'");
    }

    Lexer lex_;
    Token cur_;
};

}  // namespace parser_detail

inline MatrixDocument parse_matrix(std::string_view text) {
    parser_detail::Parser p(text);
    return p.document();
}

// --- evaluation -------------------------------------------------------------

struct EvalError : std::runtime_error {
    EvalError(std::size_t line, std::size_t col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg) {}
};

namespace parser_detail {

// Inverse of a one-term element.  Group monomials invert by inverting the
// word; a tau monomial inverts letter by letter via
// tau_g^-1 = (tau_g - (q_g - 1))/q_g.
inline HeckeElem invert_monomial(const HeckeElem& x, const Params* p, std::size_t line,
                                 std::size_t col) {
    if (x.term_count() != 1)
        throw EvalError(line, col, "negative power of a non-invertible expression");
    const auto& [w, c] = *x.coeffs().begin();
    if (x.basis() == HBasis::group)
        return HeckeElem::monomial(HBasis::group, word_inverse(w), c.inv());
    HeckeElem out = HeckeElem::unit(HBasis::tau);
    auto letters = reduced_letters(w);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        const Rational q = q_gen(*p, *it);
        HeckeElem gi(HBasis::tau);
        gi.add_term(kIdentity, (Rational(1) - q) / q);
        gi.add_term(gen_word(*it), q.inv());
        out = hecke_mul(out, gi, *p);
    }
    return c.inv() * out;
}

inline HeckeElem eval_expr(const ExprPtr& node, HBasis basis, const Params* p) {
    switch (node->kind) {
        case ExprNode::Kind::number:
            return HeckeElem::monomial(basis, kIdentity, node->value);
        case ExprNode::Kind::atom:
            switch (node->atom) {
                case AtomKind::e: return HeckeElem::unit(basis);
                case AtomKind::s:
                case AtomKind::t: {
                    const Gen g = node->atom == AtomKind::s ? Gen::s : Gen::t;
                    if (basis == HBasis::group)
                        return HeckeElem::monomial(HBasis::group, gen_word(g));
                    if (p == nullptr)
                        throw EvalError(node->line, node->col,
                                        "tau-basis evaluation needs parameters");
                    return group_gen_in_tau(g, *p);
                }
                case AtomKind::Ts: return HeckeElem::monomial(HBasis::tau, kGenS);
                default: return HeckeElem::monomial(HBasis::tau, kGenT);
            }
        case ExprNode::Kind::add:
            return eval_expr(node->lhs, basis, p) + eval_expr(node->rhs, basis, p);
        case ExprNode::Kind::sub:
            return eval_expr(node->lhs, basis, p) - eval_expr(node->rhs, basis, p);
        case ExprNode::Kind::mul: {
            const HeckeElem a = eval_expr(node->lhs, basis, p);
            const HeckeElem b = eval_expr(node->rhs, basis, p);
            if (basis == HBasis::group) return group_mul(a, b);
            if (p == nullptr)
                throw EvalError(node->line, node->col, "tau-basis evaluation needs parameters");
            return hecke_mul(a, b, *p);
        }
        case ExprNode::Kind::pow: {
            HeckeElem base = eval_expr(node->lhs, basis, p);
            std::int64_t e = node->exponent;
            if (e < 0) {
                if (basis == HBasis::tau && p == nullptr)
                    throw EvalError(node->line, node->col,
                                    "tau-basis evaluation needs parameters");
                base = invert_monomial(base, p, node->line, node->col);
                e = -e;
            }
            HeckeElem out = HeckeElem::unit(basis);
            for (std::int64_t i = 0; i < e; ++i) {
                if (basis == HBasis::group) out = group_mul(out, base);
                else out = hecke_mul(out, base, *p);
            }
            return out;
        }
    }
    throw std::logic_error("eval_expr: unhandled node kind");
}

}  // namespace parser_detail

// Evaluates the document to a matrix of algebra elements.  Group-basis
// documents never need parameters; tau-basis documents do, because the tau
// multiplication rules depend on q.
inline HeckeMatrix eval_document(const MatrixDocument& doc, const Params* p) {
    HeckeMatrix m(doc.rows, doc.cols, doc.basis);
    for (std::size_t i = 0; i < doc.rows; ++i)
        for (std::size_t j = 0; j < doc.cols; ++j)
            m.set(i, j, parser_detail::eval_expr(doc.entries[i][j], doc.basis, p));
    return m;
}

// --- printing ----------------------------------------------------------------

namespace parser_detail {

inline int precedence(ExprNode::Kind k) {
    switch (k) {
        case ExprNode::Kind::add:
        case ExprNode::Kind::sub: return 0;
        case ExprNode::Kind::mul: return 1;
        case ExprNode::Kind::pow: return 2;
        default: return 3;
    }
}

inline void print_expr(std::string& out, const ExprPtr& node, int parent_prec) {
    const int prec = precedence(node->kind);
    const bool parens = prec < parent_prec;
    if (parens) out += "(";
    switch (node->kind) {
        case ExprNode::Kind::number: out += node->value.str(); break;
        case ExprNode::Kind::atom:
            switch (node->atom) {
                case AtomKind::e: out += "e"; break;
                case AtomKind::s: out += "s"; break;
                case AtomKind::t: out += "t"; break;
                case AtomKind::Ts: out += "Ts"; break;
                default: out += "Tt"; break;
            }
            break;
        case ExprNode::Kind::add:
        case ExprNode::Kind::sub:
            print_expr(out, node->lhs, prec);
            out += node->kind == ExprNode::Kind::add ? " + " : " - ";
            // right operand needs the next precedence level to keep
            // a - (b + c) distinguishable from a - b + c
            print_expr(out, node->rhs, prec + 1);
            break;
        case ExprNode::Kind::mul:
            print_expr(out, node->lhs, prec);
            out += "*";
            print_expr(out, node->rhs, prec + 1);
            break;
        case ExprNode::Kind::pow:
            print_expr(out, node->lhs, prec + 1);
            out += "^" + std::to_string(node->exponent);
            break;
    }
    if (parens) out += ")";
}

}  // namespace parser_detail

inline std::string print_document(const MatrixDocument& doc) {
    std::string out = "basis ";
    out += basis_str(doc.basis);
    out += " size " + std::to_string(doc.rows) + " x " + std::to_string(doc.cols) + "\n";
    for (std::size_t i = 0; i < doc.rows; ++i) {
        out += "[ ";
        for (std::size_t j = 0; j < doc.cols; ++j) {
            if (j) out += " , ";
            parser_detail::print_expr(out, doc.entries[i][j], 0);
        }
        out += " ]\n";
    }
    return out;
}

// FNV-1a digest of the raw document text; identifies inputs in reports.
inline std::string text_digest(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace heckedim
