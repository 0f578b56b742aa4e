#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hzoo/poly.hpp"
#include "hzoo/rational.hpp"

namespace hzoo {

/// Grammar (no implicit multiplication):
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := '(' expr ')' | rational | var | '-' factor
///   rational := int ('/' uint)?
///   var      := 'x' uint
struct ExprAst {
    struct Var {
        std::uint32_t index;  // 1-based, as written in the source
    };
    struct Lit {
        Rational value;
    };
    struct Neg {
        std::unique_ptr<ExprAst> operand;
    };
    struct Bin {
        char op;  // '+', '-', '*'
        std::unique_ptr<ExprAst> lhs;
        std::unique_ptr<ExprAst> rhs;
    };
    struct Pow {
        std::unique_ptr<ExprAst> base;
        std::uint32_t exponent;
    };

    std::variant<Var, Lit, Neg, Bin, Pow> node;
};

struct ParseError {
    std::size_t offset = 0;
    std::string message;
    std::vector<std::string> expected;

    std::string to_string() const {
        std::string s = "parse error at byte " + std::to_string(offset) + ": " + message;
        if (!expected.empty()) {
            s += " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) s += ", ";
                s += expected[i];
            }
            s += ")";
        }
        return s;
    }
};

struct ParseResult {
    std::unique_ptr<ExprAst> ast;
    std::optional<ParseError> error;

    bool ok() const { return ast != nullptr; }
};

namespace detail {

inline constexpr std::uint32_t kMaxExponent = 9999;
inline constexpr int kMaxNesting = 500;

class ExprParser {
public:
    ExprParser(std::string_view src, int arity) : src_(src), arity_(arity) {}

    ParseResult run() {
        ParseResult result;
        if (arity_ < 0) {
            result.error = ParseError{0, "negative arity", {}};
            return result;
        }
        try {
            auto ast = parse_expr();
            skip_ws();
            if (pos_ != src_.size()) {
                fail("trailing input", {"'+'", "'-'", "'*'", "end of input"});
            }
            result.ast = std::move(ast);
        } catch (Abort&) {
            result.error = std::move(err_);
        }
        return result;
    }

private:
    struct Abort {};

    [[noreturn]] void fail(std::string message, std::vector<std::string> expected) {
        err_ = ParseError{pos_, std::move(message), std::move(expected)};
        throw Abort{};
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                src_[pos_] == '\r')) {
            ++pos_;
        }
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    std::uint32_t small_uint(const char* what) {
        skip_ws();
        const std::string ds = digits();
        if (ds.empty()) fail(std::string("expected ") + what, {what});
        if (ds.size() > 4)  // cap keeps lowering tractable; exponents here never exceed it
            fail(std::string(what) + " too large (max " + std::to_string(kMaxExponent) + ")",
                 {what});
        return static_cast<std::uint32_t>(std::stoul(ds));
    }

    std::unique_ptr<ExprAst> parse_expr() {
        Nesting guard(this);
        auto lhs = parse_term();
        while (true) {
            skip_ws();
            if (consume('+')) {
                auto rhs = parse_term();
                lhs = make(ExprAst::Bin{'+', std::move(lhs), std::move(rhs)});
            } else if (consume('-')) {
                auto rhs = parse_term();
                lhs = make(ExprAst::Bin{'-', std::move(lhs), std::move(rhs)});
            } else {
                return lhs;
            }
        }
    }

    std::unique_ptr<ExprAst> parse_term() {
        auto lhs = parse_factor();
        while (consume('*')) {
            auto rhs = parse_factor();
            lhs = make(ExprAst::Bin{'*', std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    std::unique_ptr<ExprAst> parse_factor() {
        auto base = parse_base();
        if (consume('^')) {
            const std::uint32_t e = small_uint("integer exponent");
            return make(ExprAst::Pow{std::move(base), e});
        }
        return base;
    }

    std::unique_ptr<ExprAst> parse_base() {
        Nesting guard(this);
        skip_ws();
        if (pos_ >= src_.size()) {
            fail("unexpected end of input", {"'('", "rational", "variable", "'-'"});
        }
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            skip_ws();
            if (!consume(')')) fail("missing ')'", {"')'"});
            return inner;
        }
        if (c == '-') {
            ++pos_;
            auto operand = parse_factor();
            return make(ExprAst::Neg{std::move(operand)});
        }
        if (c == 'x') {
            ++pos_;
            const std::size_t at = pos_;
            const std::string ds = digits();
            if (ds.empty()) fail("expected variable index after 'x'", {"variable index"});
            if (ds.size() > 9) {
                pos_ = at;
                fail("variable index out of range", {"variable index <= arity"});
            }
            const unsigned long idx = std::stoul(ds);
            if (idx < 1 || idx > static_cast<unsigned long>(arity_)) {
                pos_ = at;
                fail("variable index " + ds + " out of range for arity " +
                         std::to_string(arity_),
                     {"variable index in [1, " + std::to_string(arity_) + "]"});
            }
            return make(ExprAst::Var{static_cast<std::uint32_t>(idx)});
        }
        if (c >= '0' && c <= '9') {
            const Integer n = integer_from_digits(digits());
            Integer d(1);
            if (consume('/')) {
                skip_ws();
                const std::string den = digits();
                if (den.empty()) fail("malformed rational: expected denominator", {"uint"});
                d = integer_from_digits(den);
                if (d == 0) fail("malformed rational: zero denominator", {"nonzero uint"});
            }
            return make(ExprAst::Lit{Rational(n, d)});
        }
        fail(std::string("unexpected character '") + c + "'",
             {"'('", "rational", "variable", "'-'"});
    }

    template <typename Node>
    static std::unique_ptr<ExprAst> make(Node&& n) {
        auto ast = std::make_unique<ExprAst>();
        ast->node = std::forward<Node>(n);
        return ast;
    }

    struct Nesting {
        explicit Nesting(ExprParser* p) : parser(p) {
            if (++parser->depth_ > kMaxNesting)
                parser->fail("expression nesting too deep", {});
        }
        ~Nesting() { --parser->depth_; }
        ExprParser* parser;
    };

    std::string_view src_;
    int arity_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    ParseError err_;
};

}  // namespace detail

/// Parses the textual polynomial format. Never throws: every input yields
/// either an AST or a ParseError with byte offset and expected-token set.
inline ParseResult parse(std::string_view src, int arity) {
    return detail::ExprParser(src, arity).run();
}

/// Lowers a well-formed AST to an exact polynomial. No floating point is
/// involved at any stage.
inline RatPoly lower(const ExprAst& ast, int arity) {
    struct Visitor {
        int arity;
        RatPoly operator()(const ExprAst::Var& v) const {
            if (v.index < 1 || static_cast<int>(v.index) > arity)
                throw std::invalid_argument("lower: variable index out of range");
            return RatPoly::variable(arity, static_cast<int>(v.index) - 1);
        }
        RatPoly operator()(const ExprAst::Lit& l) const {
            return RatPoly::constant(arity, l.value);
        }
        RatPoly operator()(const ExprAst::Neg& n) const {
            return -lower(*n.operand, arity);
        }
        RatPoly operator()(const ExprAst::Bin& b) const {
            RatPoly l = lower(*b.lhs, arity);
            RatPoly r = lower(*b.rhs, arity);
            switch (b.op) {
                case '+': return l + r;
                case '-': return l - r;
                default: return l * r;
            }
        }
        RatPoly operator()(const ExprAst::Pow& p) const {
            return pow(lower(*p.base, arity), p.exponent);
        }
    };
    return std::visit(Visitor{arity}, ast.node);
}

/// Convenience: parse then lower; throws std::invalid_argument carrying the
/// parse diagnostics on malformed input.
inline RatPoly parse_poly(std::string_view src, int arity) {
    ParseResult r = parse(src, arity);
    if (!r.ok()) throw std::invalid_argument(r.error->to_string());
    return lower(*r.ast, arity);
}

}  // namespace hzoo
