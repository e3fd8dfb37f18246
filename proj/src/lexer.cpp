#include "rddl/lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <unordered_set>

namespace rddl {

namespace {

const std::unordered_set<std::string_view>& keyword_set() {
    static const std::unordered_set<std::string_view> kw = {
        // blocks and sections
        "domain", "instance", "non-fluents", "requirements", "types",
        "pvariables", "cpfs", "reward", "state-invariants",
        "action-preconditions", "termination", "state-action-constraints",
        "objects", "init-state", "max-nondef-actions", "horizon", "discount",
        // fluent classes and ranges
        "non-fluent", "state-fluent", "action-fluent", "interm-fluent",
        "derived-fluent", "observ-fluent", "object", "bool", "int", "real",
        "default", "level",
        // expression syntax
        "if", "then", "else", "true", "false", "pos-inf", "neg-inf",
        "NEXT", "PREV",
        // distributions
        "KronDelta", "DiracDelta", "Bernoulli", "Discrete", "Uniform",
        "Normal", "Exponential", "Poisson", "Gamma", "Beta", "Binomial",
        "Student", "MultivariateNormal", "Dirichlet", "Multinomial",
    };
    return kw;
}

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool ident_body(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

bool is_reserved_keyword(std::string_view word) {
    return keyword_set().count(word) > 0;
}

std::string Token::description() const {
    switch (kind) {
        case TokenKind::Keyword: return "keyword '" + lexeme + "'";
        case TokenKind::Identifier:
            return "identifier '" + lexeme + (primed ? "'" : "") + "'";
        case TokenKind::Parameter: return "parameter '?" + lexeme + "'";
        case TokenKind::EnumLiteral: return "enum literal '@" + lexeme + "'";
        case TokenKind::IntLit: return "integer '" + lexeme + "'";
        case TokenKind::RealLit: return "real '" + lexeme + "'";
        case TokenKind::Punct: return "'" + lexeme + "'";
        case TokenKind::EndOfInput: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    size_t i = 0;
    int line = 1;
    int col = 1;

    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto peek = [&](size_t off = 0) -> char {
        return i + off < src.size() ? src[i + off] : '\0';
    };

    // Identifier tail: letters, digits, '_' and '-' when followed by a letter
    // (hyphenated names like pos-inf; "x - 1" still lexes as subtraction).
    auto read_name = [&]() {
        std::string text;
        while (i < src.size()) {
            char c = src[i];
            if (ident_body(c)) {
                text.push_back(c);
                advance(1);
            } else if (c == '-' && ident_start(peek(1))) {
                text.push_back(c);
                advance(1);
            } else {
                break;
            }
        }
        return text;
    };

    while (i < src.size()) {
        char c = src[i];
        SourceLocation loc{line, col};

        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && peek(1) == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }

        Token tok;
        tok.loc = loc;

        if (ident_start(c)) {
            tok.lexeme = read_name();
            if (peek() == '\'') {
                tok.primed = true;
                advance(1);
            }
            tok.kind = (!tok.primed && is_reserved_keyword(tok.lexeme))
                           ? TokenKind::Keyword
                           : TokenKind::Identifier;
            out.push_back(std::move(tok));
            continue;
        }
        if (c == '?' || c == '@') {
            advance(1);
            if (!ident_start(peek())) {
                throw RddlError(ErrorCode::Lexical,
                                std::string("expected a name after '") + c + "'",
                                loc);
            }
            tok.kind = c == '?' ? TokenKind::Parameter : TokenKind::EnumLiteral;
            tok.lexeme = read_name();
            out.push_back(std::move(tok));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::string num;
            bool is_real = false;
            while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                num.push_back(peek());
                advance(1);
            }
            if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1))) != 0) {
                is_real = true;
                num.push_back('.');
                advance(1);
                while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                    num.push_back(peek());
                    advance(1);
                }
            }
            if (peek() == 'e' || peek() == 'E') {
                char sign = peek(1);
                size_t digits_at = (sign == '+' || sign == '-') ? 2 : 1;
                if (std::isdigit(static_cast<unsigned char>(peek(digits_at))) != 0) {
                    is_real = true;
                    num.push_back(peek());
                    advance(1);
                    if (sign == '+' || sign == '-') {
                        num.push_back(peek());
                        advance(1);
                    }
                    while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                        num.push_back(peek());
                        advance(1);
                    }
                }
            }
            tok.lexeme = num;
            if (is_real) {
                tok.kind = TokenKind::RealLit;
                tok.real_value = std::strtod(num.c_str(), nullptr);
            } else {
                tok.kind = TokenKind::IntLit;
                auto res = std::from_chars(num.data(), num.data() + num.size(),
                                           tok.int_value);
                if (res.ec != std::errc{}) {
                    throw RddlError(ErrorCode::Lexical,
                                    "integer literal out of range: " + num, loc);
                }
            }
            out.push_back(std::move(tok));
            continue;
        }

        // multi-char operators first
        static const std::array<std::string_view, 6> two_plus = {
            "<=>", "==", "~=", "<=", ">=", "=>"};
        std::string_view rest = src.substr(i);
        std::string_view matched;
        for (auto op : two_plus) {
            if (rest.substr(0, op.size()) == op) {
                matched = op;
                break;
            }
        }
        if (!matched.empty()) {
            tok.kind = TokenKind::Punct;
            tok.lexeme = std::string(matched);
            advance(matched.size());
            out.push_back(std::move(tok));
            continue;
        }
        static const std::string_view singles = "{}()[],;:=<>+-*/^|~";
        if (singles.find(c) != std::string_view::npos) {
            tok.kind = TokenKind::Punct;
            tok.lexeme = std::string(1, c);
            advance(1);
            out.push_back(std::move(tok));
            continue;
        }

        throw RddlError(ErrorCode::Lexical,
                        std::string("illegal character '") + c + "'", loc);
    }

    Token eof;
    eof.kind = TokenKind::EndOfInput;
    eof.lexeme = "<eof>";
    eof.loc = {line, col};
    out.push_back(std::move(eof));
    return out;
}

}  // namespace rddl
