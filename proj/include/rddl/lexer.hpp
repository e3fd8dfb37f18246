#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rddl/error.hpp"

namespace rddl {

enum class TokenKind : uint8_t {
    Keyword,     // reserved word (block names, classes, if/then/else, ...)
    Identifier,  // may contain '-' and '_', may end with a prime '
    Parameter,   // ?name
    EnumLiteral, // @name
    IntLit,
    RealLit,
    Punct,       // operators and punctuation
    EndOfInput,
};

struct Token {
    TokenKind kind = TokenKind::EndOfInput;
    std::string lexeme;   // keyword/ident text without sigils; punct spelling
    bool primed = false;  // identifier carried a trailing '
    int64_t int_value = 0;
    double real_value = 0.0;
    SourceLocation loc{};

    bool is_punct(std::string_view p) const {
        return kind == TokenKind::Punct && lexeme == p;
    }
    bool is_keyword(std::string_view k) const {
        return kind == TokenKind::Keyword && lexeme == k;
    }
    bool is_ident(std::string_view k) const {
        return kind == TokenKind::Identifier && lexeme == k && !primed;
    }
    std::string description() const;
};

bool is_reserved_keyword(std::string_view word);

// Strips // comments; every other character must belong to a token.
// Throws RddlError(Lexical) on illegal characters or malformed numbers.
std::vector<Token> tokenize(std::string_view source);

}  // namespace rddl
