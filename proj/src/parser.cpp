#include "yablo/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace yablo {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
    std::string out;
    for (size_t i = 0; i < expected.size(); ++i) {
        if (i) out += expected.size() == 2 ? " or " : (i + 1 == expected.size() ? ", or " : ", ");
        out += expected[i];
    }
    return out;
}

}  // namespace

ParseError::ParseError(int line_, int col_, const std::string& what_,
                       std::vector<std::string> expected_)
    : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + what_ +
            (expected_.empty() ? "" : "; expected " + join_expected(expected_))),
      line(line_),
      col(col_),
      expected(std::move(expected_)) {}

namespace {

enum class Tok {
    End, LParen, RParen, Comma, Dot, Equal, Amp, Pipe, Tilde,
    Arrow, Iff, Forall, Exists, SSym, RSym, Var,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

const char* describe(Tok k) {
    switch (k) {
        case Tok::End: return "end of input";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Dot: return "'.'";
        case Tok::Equal: return "'='";
        case Tok::Amp: return "'&'";
        case Tok::Pipe: return "'|'";
        case Tok::Tilde: return "'~'";
        case Tok::Arrow: return "'->'";
        case Tok::Iff: return "'<->'";
        case Tok::Forall: return "'forall'";
        case Tok::Exists: return "'exists'";
        case Tok::SSym: return "'s'";
        case Tok::RSym: return "'R'";
        case Tok::Var: return "variable";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            const int line = line_, col = col_;
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", line, col});
                return out;
            }
            const char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string word = read_word();
                Tok kind;
                if (word == "forall") kind = Tok::Forall;
                else if (word == "exists") kind = Tok::Exists;
                else if (word == "s") kind = Tok::SSym;
                else if (word == "R") kind = Tok::RSym;
                else if (std::islower(static_cast<unsigned char>(word[0]))) kind = Tok::Var;
                else
                    throw ParseError(line, col, "invalid identifier '" + word + "'",
                                     {"'R'", "a lowercase variable"});
                out.push_back({kind, std::move(word), line, col});
                continue;
            }
            switch (c) {
                case '(': single(out, Tok::LParen, line, col); break;
                case ')': single(out, Tok::RParen, line, col); break;
                case ',': single(out, Tok::Comma, line, col); break;
                case '.': single(out, Tok::Dot, line, col); break;
                case '=': single(out, Tok::Equal, line, col); break;
                case '&': single(out, Tok::Amp, line, col); break;
                case '|': single(out, Tok::Pipe, line, col); break;
                case '~': single(out, Tok::Tilde, line, col); break;
                case '-':
                    advance();
                    if (pos_ >= text_.size() || text_[pos_] != '>')
                        throw ParseError(line, col, "stray '-'", {"'->'"});
                    advance();
                    out.push_back({Tok::Arrow, "->", line, col});
                    break;
                case '<':
                    advance();
                    if (pos_ + 1 >= text_.size() || text_[pos_] != '-' || text_[pos_ + 1] != '>')
                        throw ParseError(line, col, "stray '<'", {"'<->'"});
                    advance();
                    advance();
                    out.push_back({Tok::Iff, "<->", line, col});
                    break;
                default:
                    throw ParseError(line, col,
                                     std::string("unexpected character '") + c + "'", {});
            }
        }
    }

private:
    void single(std::vector<Token>& out, Tok kind, int line, int col) {
        out.push_back({kind, std::string(1, text_[pos_]), line, col});
        advance();
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') advance();
            else break;
        }
    }

    std::string read_word() {
        size_t start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') advance();
            else break;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    FormulaPtr run() {
        FormulaPtr f = formula();
        expect(Tok::End, {"end of input"});
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.col, "unexpected " + got, std::move(expected));
    }

    Token expect(Tok kind, std::vector<std::string> expected) {
        if (peek().kind != kind) fail(std::move(expected));
        return take();
    }

    FormulaPtr formula() { return iff_chain(); }

    FormulaPtr iff_chain() {
        FormulaPtr f = imp();
        while (peek().kind == Tok::Iff) {
            take();
            f = iff(std::move(f), imp());
        }
        return f;
    }

    FormulaPtr imp() {
        FormulaPtr f = or_chain();
        if (peek().kind == Tok::Arrow) {
            take();
            return implies(std::move(f), imp());  // right-associative
        }
        return f;
    }

    FormulaPtr or_chain() {
        FormulaPtr f = and_chain();
        while (peek().kind == Tok::Pipe) {
            take();
            f = disj(std::move(f), and_chain());
        }
        return f;
    }

    FormulaPtr and_chain() {
        FormulaPtr f = unary();
        while (peek().kind == Tok::Amp) {
            take();
            f = conj(std::move(f), unary());
        }
        return f;
    }

    FormulaPtr unary() {
        switch (peek().kind) {
            case Tok::Tilde:
                take();
                return neg(unary());
            case Tok::LParen: {
                take();
                FormulaPtr f = formula();
                expect(Tok::RParen, {"')'"});
                return f;
            }
            case Tok::Forall:
            case Tok::Exists: {
                const bool universal = take().kind == Tok::Forall;
                Token var = expect(Tok::Var, {"variable"});
                expect(Tok::Dot, {"'.'"});
                FormulaPtr body = formula();  // extends maximally right
                return universal ? forall(var.text, std::move(body))
                                 : exists(var.text, std::move(body));
            }
            case Tok::RSym: {
                take();
                expect(Tok::LParen, {"'('"});
                Term a = term();
                expect(Tok::Comma, {"','"});
                Term b = term();
                expect(Tok::RParen, {"')'"});
                return rel(std::move(a), std::move(b));
            }
            case Tok::Var:
            case Tok::SSym: {
                Term a = term();
                expect(Tok::Equal, {"'='"});
                Term b = term();
                return eq(std::move(a), std::move(b));
            }
            default:
                fail({"'~'", "'('", "'forall'", "'exists'", "'R'", "a term"});
        }
    }

    Term term() {
        if (peek().kind == Tok::SSym) {
            take();
            expect(Tok::LParen, {"'('"});
            Term t = term();
            expect(Tok::RParen, {"')'"});
            ++t.wraps;
            return t;
        }
        Token var = expect(Tok::Var, {"a term (variable or 's(...)')"});
        return Term{var.text, 0};
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
    return Parser(Lexer(text).run()).run();
}

}  // namespace yablo
