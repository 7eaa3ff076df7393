#pragma once

// Shared lexer for the DSL. Internal to the library.

#include <cctype>
#include <string>
#include <string_view>

#include "uag/errors.hpp"

namespace uag::detail {

enum class Tok { Ident, Int, Punct, End };

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    Tok kind() const { return kind_; }
    const std::string& value() const { return value_; }
    int line() const { return tok_line_; }
    int col() const { return tok_col_; }

    bool at(Tok k, std::string_view v = {}) const {
        return kind_ == k && (v.empty() || value_ == v);
    }
    bool at_end() const { return kind_ == Tok::End; }

    /// Consumes the current token if it matches.
    bool accept(Tok k, std::string_view v = {}) {
        if (!at(k, v)) return false;
        advance();
        return true;
    }

    void expect(Tok k, std::string_view v, std::string_view what) {
        if (!accept(k, v)) fail("expected " + std::string(what));
    }

    std::string expect_ident(std::string_view what) {
        if (kind_ != Tok::Ident) fail("expected " + std::string(what));
        std::string out = value_;
        advance();
        return out;
    }

    long expect_int(std::string_view what) {
        bool neg = false;
        if (at(Tok::Punct, "-")) {
            neg = true;
            advance();
        }
        if (kind_ != Tok::Int) fail("expected " + std::string(what));
        long v = std::stol(value_);
        advance();
        return neg ? -v : v;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + (kind_ == Tok::End ? " at end of input"
                                                  : " near '" + value_ + "'"),
                         tok_line_, tok_col_);
    }

    void advance() {
        skip_space();
        tok_line_ = line_;
        tok_col_ = col_;
        if (pos_ >= text_.size()) {
            kind_ = Tok::End;
            value_.clear();
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                step();
            kind_ = Tok::Ident;
            value_ = std::string(text_.substr(start, pos_ - start));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                step();
            kind_ = Tok::Int;
            value_ = std::string(text_.substr(start, pos_ - start));
        } else {
            kind_ = Tok::Punct;
            value_ = std::string(1, c);
            step();
        }
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') { // line comment
                while (pos_ < text_.size() && text_[pos_] != '\n') step();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                step();
            } else {
                break;
            }
        }
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Tok kind_ = Tok::End;
    std::string value_;
    int tok_line_ = 1, tok_col_ = 1;
};

} // namespace uag::detail
