#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "chern/bundle.hpp"
#include "chern/errors.hpp"
#include "chern/partition.hpp"
#include "chern/polynomial.hpp"
#include "chern/rational.hpp"

namespace chern {

/// Outcome of parsing: expressions containing chern/euler/schur atoms become
/// a ClassExpr, everything else (including bare constants) a Polynomial.
/// The two kinds cannot be mixed in one expression.
using ParsedExpression = std::variant<Polynomial, ClassExpr>;

namespace detail {

struct Token {
    enum class Type {
        Number,
        Variable,
        Name,
        Plus,
        Minus,
        Star,
        Slash,
        Caret,
        LParen,
        RParen,
        LBracket,
        RBracket,
        Comma,
        End
    };

    Type type = Type::End;
    std::size_t offset = 0;  // 1-based byte offset of the first character
    mpz_class number;
    std::optional<VarId> var;
    std::string name;

    std::string describe() const {
        switch (type) {
            case Type::Number: return "'" + number.get_str() + "'";
            case Type::Variable: return "'" + var->name() + "'";
            case Type::Name: return "'" + name + "'";
            case Type::Plus: return "'+'";
            case Type::Minus: return "'-'";
            case Type::Star: return "'*'";
            case Type::Slash: return "'/'";
            case Type::Caret: return "'^'";
            case Type::LParen: return "'('";
            case Type::RParen: return "')'";
            case Type::LBracket: return "'['";
            case Type::RBracket: return "']'";
            case Type::Comma: return "','";
            case Type::End: return "end of input";
        }
        return "?";
    }
};

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    auto at = [&](std::size_t pos) { return pos < text.size() ? text[pos] : '\0'; };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t offset = i + 1;
        if (c >= '0' && c <= '9') {
            std::size_t start = i;
            while (at(i) >= '0' && at(i) <= '9') ++i;
            Token t;
            t.type = Token::Type::Number;
            t.offset = offset;
            t.number = mpz_class(std::string(text.substr(start, i - start)), 10);
            tokens.push_back(std::move(t));
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            std::size_t start = i;
            while ((at(i) >= 'a' && at(i) <= 'z') || (at(i) >= 'A' && at(i) <= 'Z')) ++i;
            std::string word(text.substr(start, i - start));
            bool digits_follow = at(i) >= '0' && at(i) <= '9';
            if ((word == "x" || word == "y" || word == "z") && digits_follow) {
                std::size_t digit_offset = i + 1;
                std::size_t digit_start = i;
                while (at(i) >= '0' && at(i) <= '9') ++i;
                mpz_class index(std::string(text.substr(digit_start, i - digit_start)), 10);
                if (index == 0)
                    throw ParseError(digit_offset, "variable index must be at least 1");
                if (index > 4294967295UL)
                    throw ParseError(digit_offset, "variable index too large");
                Alphabet a = word == "x" ? Alphabet::X : word == "y" ? Alphabet::Y
                                                                     : Alphabet::Z;
                Token t;
                t.type = Token::Type::Variable;
                t.offset = offset;
                t.var = VarId(a, static_cast<std::uint32_t>(index.get_ui()));
                tokens.push_back(std::move(t));
                continue;
            }
            if (word == "x" || word == "y")
                throw ParseError(i + 1, "variable index expected after '" + word + "'");
            if (word == "z") {
                Token t;
                t.type = Token::Type::Variable;
                t.offset = offset;
                t.var = VarId::z();
                tokens.push_back(std::move(t));
                continue;
            }
            Token t;
            t.type = Token::Type::Name;
            t.offset = offset;
            t.name = std::move(word);
            tokens.push_back(std::move(t));
            continue;
        }
        Token t;
        t.offset = offset;
        switch (c) {
            case '+': t.type = Token::Type::Plus; break;
            case '-': t.type = Token::Type::Minus; break;
            case '*': t.type = Token::Type::Star; break;
            case '/': t.type = Token::Type::Slash; break;
            case '^': t.type = Token::Type::Caret; break;
            case '(': t.type = Token::Type::LParen; break;
            case ')': t.type = Token::Type::RParen; break;
            case '[': t.type = Token::Type::LBracket; break;
            case ']': t.type = Token::Type::RBracket; break;
            case ',': t.type = Token::Type::Comma; break;
            default:
                throw ParseError(offset, "unexpected character '" + std::string(1, c) + "'");
        }
        tokens.push_back(std::move(t));
        ++i;
    }
    Token end;
    end.type = Token::Type::End;
    end.offset = text.size() + 1;
    tokens.push_back(std::move(end));
    return tokens;
}

/// Neutral syntax tree produced by the grammar, before deciding whether the
/// whole expression is a polynomial or a characteristic class.
struct ExprNode {
    enum class Kind {
        Number,
        Variable,
        ChernAtom,
        EulerAtom,
        SchurAtom,
        Sum,
        Difference,
        Negate,
        Product,
        PowerOf
    };

    Kind kind;
    std::size_t offset = 0;
    Rational value;
    std::optional<VarId> var;
    long index = 0;
    std::uint32_t exponent = 0;
    Partition partition;
    std::optional<BundleExpr> bundle;
    std::unique_ptr<ExprNode> lhs;
    std::unique_ptr<ExprNode> rhs;
};

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : tokens_(lex(text)) {}

    std::unique_ptr<ExprNode> parse() {
        auto node = parse_expr();
        if (peek().type != Token::Type::End)
            throw ParseError(peek().offset, {"'+'", "'-'", "'*'", "'^'", "end of input"},
                             peek().describe());
        return node;
    }

private:
    using NodePtr = std::unique_ptr<ExprNode>;

    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(Token::Type type) {
        if (peek().type != type) return false;
        ++pos_;
        return true;
    }

    void expect(Token::Type type, const std::string& what) {
        if (!accept(type))
            throw ParseError(peek().offset, {what}, peek().describe());
    }

    std::uint32_t parse_nat(const std::string& what) {
        if (peek().type != Token::Type::Number)
            throw ParseError(peek().offset, {what}, peek().describe());
        const Token& t = advance();
        if (t.number > 4294967295UL)
            throw ParseError(t.offset, "number too large; at most 2^32-1 is supported");
        return static_cast<std::uint32_t>(t.number.get_ui());
    }

    NodePtr make(ExprNode::Kind kind, std::size_t offset) {
        auto n = std::make_unique<ExprNode>();
        n->kind = kind;
        n->offset = offset;
        return n;
    }

    NodePtr parse_expr() {
        NodePtr node;
        if (peek().type == Token::Type::Minus) {
            std::size_t offset = advance().offset;
            node = make(ExprNode::Kind::Negate, offset);
            node->lhs = parse_term();
        } else {
            accept(Token::Type::Plus);
            node = parse_term();
        }
        while (peek().type == Token::Type::Plus || peek().type == Token::Type::Minus) {
            const Token& op = advance();
            auto parent = make(op.type == Token::Type::Plus ? ExprNode::Kind::Sum
                                                            : ExprNode::Kind::Difference,
                               op.offset);
            parent->lhs = std::move(node);
            parent->rhs = parse_term();
            node = std::move(parent);
        }
        return node;
    }

    NodePtr parse_term() {
        NodePtr node = parse_factor();
        while (peek().type == Token::Type::Star) {
            std::size_t offset = advance().offset;
            auto parent = make(ExprNode::Kind::Product, offset);
            parent->lhs = std::move(node);
            parent->rhs = parse_factor();
            node = std::move(parent);
        }
        return node;
    }

    NodePtr parse_factor() {
        NodePtr node = parse_atom();
        if (peek().type == Token::Type::Caret) {
            std::size_t offset = advance().offset;
            std::uint32_t e = parse_nat("an exponent");
            auto parent = make(ExprNode::Kind::PowerOf, offset);
            parent->lhs = std::move(node);
            parent->exponent = e;
            node = std::move(parent);
        }
        return node;
    }

    NodePtr parse_atom() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::Number: {
                const Token& num = advance();
                mpz_class denominator(1);
                if (peek().type == Token::Type::Slash) {
                    advance();
                    if (peek().type != Token::Type::Number)
                        throw ParseError(peek().offset, {"a denominator"},
                                         peek().describe());
                    const Token& den = advance();
                    if (den.number == 0)
                        throw ParseError(den.offset, "zero denominator");
                    denominator = den.number;
                }
                auto node = make(ExprNode::Kind::Number, num.offset);
                node->value = Rational(num.number, denominator);
                return node;
            }
            case Token::Type::Variable: {
                const Token& var = advance();
                auto node = make(ExprNode::Kind::Variable, var.offset);
                node->var = var.var;
                return node;
            }
            case Token::Type::LParen: {
                advance();
                NodePtr inner = parse_expr();
                expect(Token::Type::RParen, "')'");
                return inner;
            }
            case Token::Type::Name: {
                if (t.name == "c") {
                    std::size_t offset = advance().offset;
                    expect(Token::Type::LParen, "'(' after 'c'");
                    std::uint32_t index = parse_nat("a Chern class index");
                    expect(Token::Type::Comma, "','");
                    BundleExpr b = parse_bundle();
                    expect(Token::Type::RParen, "')'");
                    auto node = make(ExprNode::Kind::ChernAtom, offset);
                    node->index = static_cast<long>(index);
                    node->bundle = b;
                    return node;
                }
                if (t.name == "euler") {
                    std::size_t offset = advance().offset;
                    expect(Token::Type::LParen, "'(' after 'euler'");
                    BundleExpr b = parse_bundle();
                    expect(Token::Type::RParen, "')'");
                    auto node = make(ExprNode::Kind::EulerAtom, offset);
                    node->bundle = b;
                    return node;
                }
                if (t.name == "schur") {
                    std::size_t offset = advance().offset;
                    expect(Token::Type::LParen, "'(' after 'schur'");
                    Partition lambda = parse_partition();
                    expect(Token::Type::Comma, "','");
                    BundleExpr b = parse_bundle();
                    expect(Token::Type::RParen, "')'");
                    auto node = make(ExprNode::Kind::SchurAtom, offset);
                    node->partition = lambda;
                    node->bundle = b;
                    return node;
                }
                break;
            }
            default: break;
        }
        throw ParseError(t.offset,
                         {"a number", "a variable", "'('", "'c('", "'euler('", "'schur('"},
                         t.describe());
    }

    BundleExpr parse_bundle() {
        const Token& t = peek();
        if (t.type == Token::Type::Name) {
            if (t.name == "S") {
                advance();
                return BundleExpr::S();
            }
            if (t.name == "Q") {
                advance();
                return BundleExpr::Q();
            }
            if (t.name == "dual") {
                advance();
                expect(Token::Type::LParen, "'(' after 'dual'");
                BundleExpr inner = parse_bundle();
                expect(Token::Type::RParen, "')'");
                return BundleExpr::dual(inner);
            }
            if (t.name == "sym") {
                advance();
                expect(Token::Type::LParen, "'(' after 'sym'");
                const Token& num = peek();
                std::uint32_t m = parse_nat("a symmetric power");
                if (m == 0) throw ParseError(num.offset, "symmetric power must be at least 1");
                expect(Token::Type::Comma, "','");
                BundleExpr inner = parse_bundle();
                expect(Token::Type::RParen, "')'");
                return BundleExpr::sym(m, inner);
            }
            if (t.name == "tensor") {
                advance();
                expect(Token::Type::LParen, "'(' after 'tensor'");
                BundleExpr a = parse_bundle();
                expect(Token::Type::Comma, "','");
                BundleExpr b = parse_bundle();
                expect(Token::Type::RParen, "')'");
                return BundleExpr::tensor(a, b);
            }
            if (t.name == "wedge") {
                advance();
                expect(Token::Type::LParen, "'(' after 'wedge'");
                const Token& num = peek();
                std::uint32_t m = parse_nat("an exterior power");
                if (m == 0) throw ParseError(num.offset, "exterior power must be at least 1");
                expect(Token::Type::Comma, "','");
                BundleExpr inner = parse_bundle();
                expect(Token::Type::RParen, "')'");
                return BundleExpr::wedge(m, inner);
            }
        }
        throw ParseError(t.offset,
                         {"'S'", "'Q'", "'dual('", "'sym('", "'tensor('", "'wedge('"},
                         t.describe());
    }

    Partition parse_partition() {
        expect(Token::Type::LBracket, "'['");
        std::vector<std::uint32_t> parts;
        std::vector<std::size_t> offsets;
        offsets.push_back(peek().offset);
        parts.push_back(parse_nat("a partition part"));
        while (accept(Token::Type::Comma)) {
            offsets.push_back(peek().offset);
            parts.push_back(parse_nat("a partition part"));
        }
        expect(Token::Type::RBracket, "']'");
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i - 1] < parts[i])
                throw ParseError(offsets[i], "partition parts must be weakly decreasing");
        return Partition(std::move(parts));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

inline const ExprNode* find_class_atom(const ExprNode& node) {
    switch (node.kind) {
        case ExprNode::Kind::ChernAtom:
        case ExprNode::Kind::EulerAtom:
        case ExprNode::Kind::SchurAtom: return &node;
        default: break;
    }
    if (node.lhs)
        if (const ExprNode* found = find_class_atom(*node.lhs)) return found;
    if (node.rhs)
        if (const ExprNode* found = find_class_atom(*node.rhs)) return found;
    return nullptr;
}

inline const ExprNode* find_variable(const ExprNode& node) {
    if (node.kind == ExprNode::Kind::Variable) return &node;
    if (node.lhs)
        if (const ExprNode* found = find_variable(*node.lhs)) return found;
    if (node.rhs)
        if (const ExprNode* found = find_variable(*node.rhs)) return found;
    return nullptr;
}

inline Polynomial lower_polynomial(const ExprNode& node) {
    switch (node.kind) {
        case ExprNode::Kind::Number: return Polynomial(node.value);
        case ExprNode::Kind::Variable: return Polynomial::variable(*node.var);
        case ExprNode::Kind::Sum:
            return lower_polynomial(*node.lhs) + lower_polynomial(*node.rhs);
        case ExprNode::Kind::Difference:
            return lower_polynomial(*node.lhs) - lower_polynomial(*node.rhs);
        case ExprNode::Kind::Negate: return -lower_polynomial(*node.lhs);
        case ExprNode::Kind::Product:
            return lower_polynomial(*node.lhs) * lower_polynomial(*node.rhs);
        case ExprNode::Kind::PowerOf: return lower_polynomial(*node.lhs).pow(node.exponent);
        default: break;
    }
    throw ParseError(node.offset, "bundle classes are not allowed in this expression");
}

inline ClassExpr lower_class(const ExprNode& node) {
    switch (node.kind) {
        case ExprNode::Kind::Number: return ClassExpr::constant(node.value);
        case ExprNode::Kind::ChernAtom: return ClassExpr::chern(node.index, *node.bundle);
        case ExprNode::Kind::EulerAtom: return ClassExpr::euler(*node.bundle);
        case ExprNode::Kind::SchurAtom:
            return ClassExpr::schur_class(node.partition, *node.bundle);
        case ExprNode::Kind::Sum:
            return ClassExpr::sum(lower_class(*node.lhs), lower_class(*node.rhs));
        case ExprNode::Kind::Difference:
            return ClassExpr::sum(
                lower_class(*node.lhs),
                ClassExpr::product(ClassExpr::constant(Rational(-1)),
                                   lower_class(*node.rhs)));
        case ExprNode::Kind::Negate:
            return ClassExpr::product(ClassExpr::constant(Rational(-1)),
                                      lower_class(*node.lhs));
        case ExprNode::Kind::Product:
            return ClassExpr::product(lower_class(*node.lhs), lower_class(*node.rhs));
        case ExprNode::Kind::PowerOf:
            return ClassExpr::power(lower_class(*node.lhs), node.exponent);
        case ExprNode::Kind::Variable: break;
    }
    throw ParseError(node.offset,
                     "variables cannot be mixed with bundle classes in one expression");
}

}  // namespace detail

/// Parses the expression grammar shared by all commands.  Expressions with
/// chern/euler/schur atoms yield a ClassExpr and may not contain raw
/// variables; everything else yields a Polynomial.
inline ParsedExpression parse_expression(std::string_view text) {
    detail::ExpressionParser parser(text);
    std::unique_ptr<detail::ExprNode> node = parser.parse();
    if (detail::find_class_atom(*node)) {
        if (const detail::ExprNode* var = detail::find_variable(*node))
            throw ParseError(var->offset,
                             "variables cannot be mixed with bundle classes in one expression");
        return detail::lower_class(*node);
    }
    return detail::lower_polynomial(*node);
}

/// Parses input that must be a plain polynomial; bundle-class atoms are
/// rejected with a ParseError at their position.
inline Polynomial parse_polynomial(std::string_view text) {
    detail::ExpressionParser parser(text);
    std::unique_ptr<detail::ExprNode> node = parser.parse();
    if (const detail::ExprNode* atom = detail::find_class_atom(*node))
        throw ParseError(atom->offset,
                         "bundle classes are not allowed here; expected a plain polynomial");
    return detail::lower_polynomial(*node);
}

}  // namespace chern
