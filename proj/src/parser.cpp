#include "sci/parse.hpp"

#include <cctype>
#include <vector>

namespace sci {

namespace {

enum class Tok : std::uint8_t {
    ConstTrue, ConstFalse, Variable, Not, BoxOp, AndOp, OrOp, ImpOp, IffOp,
    EquivOp, LParen, RParen, End
};

struct Token {
    Tok kind;
    unsigned var = 0;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        cur_.pos = i_;
        if (i_ >= text_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = text_[i_];
        switch (c) {
            case 'T': cur_.kind = Tok::ConstTrue; ++i_; return;
            case 'F': cur_.kind = Tok::ConstFalse; ++i_; return;
            case '~': cur_.kind = Tok::Not; ++i_; return;
            case '&': cur_.kind = Tok::AndOp; ++i_; return;
            case '|': cur_.kind = Tok::OrOp; ++i_; return;
            case '(': cur_.kind = Tok::LParen; ++i_; return;
            case ')': cur_.kind = Tok::RParen; ++i_; return;
            case '[':
                if (i_ + 1 < text_.size() && text_[i_ + 1] == ']') {
                    cur_.kind = Tok::BoxOp;
                    i_ += 2;
                    return;
                }
                throw ParseError(i_, "expected \"[]\"");
            case '-':
                if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
                    cur_.kind = Tok::ImpOp;
                    i_ += 2;
                    return;
                }
                throw ParseError(i_, "expected \"->\"");
            case '<':
                if (i_ + 2 < text_.size() && text_[i_ + 1] == '-' && text_[i_ + 2] == '>') {
                    cur_.kind = Tok::IffOp;
                    i_ += 3;
                    return;
                }
                throw ParseError(i_, "expected \"<->\"");
            case '=':
                if (i_ + 1 < text_.size() && text_[i_ + 1] == '=') {
                    cur_.kind = Tok::EquivOp;
                    i_ += 2;
                    return;
                }
                throw ParseError(i_, "expected \"==\"");
            case 'x': {
                std::size_t j = i_ + 1;
                if (j >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[j])))
                    throw ParseError(i_, "variable needs a numeric index");
                unsigned long v = 0;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
                    v = v * 10 + static_cast<unsigned long>(text_[j] - '0');
                    if (v > 1000000) throw ParseError(i_, "variable index too large");
                    ++j;
                }
                cur_.kind = Tok::Variable;
                cur_.var = static_cast<unsigned>(v);
                i_ = j;
                return;
            }
            default:
                throw ParseError(i_, std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token cur_;
};

class Parser {
public:
    Parser(std::string_view text, Language lang) : lex_(text), lang_(lang) {}

    Formula run() {
        Formula f = parse_equiv_level();
        if (lex_.peek().kind != Tok::End)
            throw ParseError(lex_.peek().pos, "trailing input after formula");
        return f;
    }

private:
    Formula parse_equiv_level() {
        Formula a = parse_iff_level();
        if (lex_.peek().kind == Tok::EquivOp) {
            lex_.take();
            Formula b = parse_iff_level();
            if (lex_.peek().kind == Tok::EquivOp)
                throw ParseError(lex_.peek().pos, "\"==\" is non-associative");
            return Formula::equiv_in(lang_, a, b);
        }
        return a;
    }

    Formula parse_iff_level() {
        Formula a = parse_imp_level();
        if (lex_.peek().kind == Tok::IffOp) {
            lex_.take();
            Formula b = parse_imp_level();
            if (lex_.peek().kind == Tok::IffOp)
                throw ParseError(lex_.peek().pos, "\"<->\" is non-associative");
            return Formula::iff(a, b);
        }
        return a;
    }

    Formula parse_imp_level() {
        Formula a = parse_or_level();
        if (lex_.peek().kind == Tok::ImpOp) {
            lex_.take();
            // right-associative
            Formula b = parse_imp_level();
            return Formula::imp(a, b);
        }
        return a;
    }

    Formula parse_or_level() {
        Formula a = parse_and_level();
        while (lex_.peek().kind == Tok::OrOp) {
            lex_.take();
            a = Formula::disj(a, parse_and_level());
        }
        return a;
    }

    Formula parse_and_level() {
        Formula a = parse_unary();
        while (lex_.peek().kind == Tok::AndOp) {
            lex_.take();
            a = Formula::conj(a, parse_unary());
        }
        return a;
    }

    Formula parse_unary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Not: return Formula::neg(parse_unary());
            case Tok::BoxOp: return Formula::box_in(lang_, parse_unary());
            case Tok::ConstTrue: return Formula::top();
            case Tok::ConstFalse: return Formula::bot();
            case Tok::Variable: return Formula::var(t.var);
            case Tok::LParen: {
                Formula f = parse_equiv_level();
                if (lex_.peek().kind != Tok::RParen)
                    throw ParseError(lex_.peek().pos, "expected ')'");
                lex_.take();
                return f;
            }
            case Tok::End: throw ParseError(t.pos, "unexpected end of input");
            default: throw ParseError(t.pos, "unexpected token");
        }
    }

    Lexer lex_;
    Language lang_;
};

void print_rec(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Kind::Var:
            out += 'x';
            out += std::to_string(f.var_index());
            return;
        case Kind::Bot: out += 'F'; return;
        case Kind::Top: out += 'T'; return;
        case Kind::Neg:
            out += '~';
            print_rec(f.lhs(), out);
            return;
        case Kind::Box:
            out += "[] ";
            print_rec(f.lhs(), out);
            return;
        case Kind::And:
        case Kind::Or:
        case Kind::Imp:
        case Kind::Equiv: {
            const char* op = f.kind() == Kind::And   ? " & "
                             : f.kind() == Kind::Or  ? " | "
                             : f.kind() == Kind::Imp ? " -> "
                                                     : " == ";
            out += '(';
            print_rec(f.lhs(), out);
            out += op;
            print_rec(f.rhs(), out);
            out += ')';
            return;
        }
    }
}

}  // namespace

Formula parse(std::string_view text, Language lang) {
    Formula f = Parser(text, lang).run();
    // Expansion at parse time keeps trees language-pure by construction.
    if (lang == Language::Sci && f.contains_box())
        throw std::logic_error("parser produced a Box node in the identity language");
    if (lang == Language::Modal && f.contains_equiv())
        throw std::logic_error("parser produced an Equiv node in the modal language");
    return f;
}

std::string print(const Formula& f) {
    std::string out;
    print_rec(f, out);
    return out;
}

}  // namespace sci
