#include "gorlink/parser.hpp"

#include <cctype>
#include <sstream>

namespace gorlink {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Caret, LParen, RParen, Comma, Eq, Sep, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        // skip spaces and comments; newlines are separators
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        int line = line_, col = col_;
        if (pos_ >= s_.size()) {
            tok_ = {Tok::End, "", line, col};
            return;
        }
        char c = s_[pos_];
        auto single = [&](Tok k) {
            tok_ = {k, std::string(1, c), line, col};
            ++pos_;
            ++col_;
        };
        if (c == '\n') {
            tok_ = {Tok::Sep, "\n", line, col};
            ++pos_;
            ++line_;
            col_ = 1;
            return;
        }
        if (c == ';') { single(Tok::Sep); return; }
        if (c == '+') { single(Tok::Plus); return; }
        if (c == '-') { single(Tok::Minus); return; }
        if (c == '*') { single(Tok::Star); return; }
        if (c == '^') { single(Tok::Caret); return; }
        if (c == '(') { single(Tok::LParen); return; }
        if (c == ')') { single(Tok::RParen); return; }
        if (c == ',') { single(Tok::Comma); return; }
        if (c == '=') { single(Tok::Eq); return; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num += s_[pos_++];
                ++col_;
            }
            tok_ = {Tok::Int, num, line, col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                id += s_[pos_++];
                ++col_;
            }
            tok_ = {Tok::Ident, id, line, col};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Tok::End, "", 1, 1};
};

class ExprParser {
public:
    ExprParser(Lexer& lex, const RingPtr& ring) : lex_(lex), ring_(ring) {}

    Polynomial expr() {
        bool neg = false;
        while (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) {
            if (lex_.take().kind == Tok::Minus) neg = !neg;
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Tok op = lex_.take().kind;
            Polynomial t = term();
            acc = op == Tok::Plus ? acc + t : acc - t;
        }
        return acc;
    }

private:
    bool starts_factor() const {
        Tok k = lex_.peek().kind;
        return k == Tok::Ident || k == Tok::Int || k == Tok::LParen;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (lex_.peek().kind == Tok::Star) {
                lex_.take();
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor(); // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Token t = lex_.take();
        Polynomial base;
        switch (t.kind) {
            case Tok::Int:
                base = Polynomial::scalar(ring_, Scalar::from_string(ring_->field(), t.text));
                break;
            case Tok::Ident: {
                int v = ring_->var_index(t.text);
                if (v < 0) throw ParseError("unknown identifier '" + t.text + "'", t.line, t.col);
                base = Polynomial::variable(ring_, v);
                break;
            }
            case Tok::LParen: {
                base = expr();
                Token close = lex_.take();
                if (close.kind != Tok::RParen)
                    throw ParseError("expected ')'", close.line, close.col);
                break;
            }
            case Tok::Minus:
                return -factor();
            default:
                throw ParseError("expected a polynomial factor", t.line, t.col);
        }
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Tok::Int) throw ParseError("expected an integer exponent", e.line, e.col);
            long long n = std::stoll(e.text);
            if (n < 0 || n > 0xFFFF) throw ParseError("exponent out of range", e.line, e.col);
            Polynomial pw = Polynomial::constant(ring_, 1);
            for (long long i = 0; i < n; ++i) pw = pw * base;
            base = std::move(pw);
        }
        return base;
    }

    Lexer& lex_;
    const RingPtr& ring_;
};

void skip_seps(Lexer& lex) {
    while (lex.peek().kind == Tok::Sep) lex.take();
}

} // namespace

const Polynomial* InputDocument::find_poly(const std::string& name) const {
    for (const auto& [n, p] : polys)
        if (n == name) return &p;
    return nullptr;
}

const Ideal* InputDocument::find_ideal(const std::string& name) const {
    for (const auto& [n, i] : ideals)
        if (n == name) return &i;
    return nullptr;
}

std::string InputDocument::render() const {
    std::ostringstream os;
    os << "field " << (field.is_rational() ? "rational" : "gf " + std::to_string(field.p)) << ";\n";
    os << "ring";
    for (const auto& n : ring->var_names()) os << " " << n;
    os << ";\n";
    if (!ring->standard_graded()) {
        os << "degrees";
        for (int w : ring->weights()) os << " " << w;
        os << ";\n";
    }
    for (const auto& [n, p] : polys) os << "poly " << n << " = " << p.str() << ";\n";
    for (const auto& [n, i] : ideals) {
        os << "ideal " << n << " =";
        for (std::size_t k = 0; k < i.gens().size(); ++k)
            os << (k ? ", " : " ") << i.gens()[k].str();
        os << ";\n";
    }
    return os.str();
}

InputDocument parse_input(const std::string& text) {
    Lexer lex(text);
    InputDocument doc;
    bool have_field = false;
    std::vector<std::string> ring_names;
    std::vector<int> weights;
    bool ring_done = false;

    auto build_ring = [&](const Token& at) {
        if (doc.ring) return;
        if (ring_names.empty()) throw ParseError("ring declaration required first", at.line, at.col);
        if (!have_field) throw ParseError("field declaration required first", at.line, at.col);
        doc.ring = PolyRing::make(doc.field, ring_names, weights);
        ring_done = true;
    };

    skip_seps(lex);
    while (lex.peek().kind != Tok::End) {
        Token head = lex.take();
        if (head.kind != Tok::Ident)
            throw ParseError("expected a statement keyword", head.line, head.col);
        if (head.text == "field") {
            Token ft = lex.take();
            if (ft.kind == Tok::Ident && ft.text == "rational") {
                doc.field = Field::rational();
            } else if (ft.kind == Tok::Ident && ft.text == "gf") {
                Token p = lex.take();
                if (p.kind != Tok::Int)
                    throw ParseError("expected a prime after 'gf'", p.line, p.col);
                try {
                    doc.field = Field::prime(std::stoll(p.text));
                } catch (const PrecondFailed& e) {
                    throw ParseError(e.what(), p.line, p.col);
                }
            } else {
                throw ParseError("expected 'rational' or 'gf <p>'", ft.line, ft.col);
            }
            have_field = true;
        } else if (head.text == "ring") {
            while (lex.peek().kind == Tok::Ident) ring_names.push_back(lex.take().text);
            if (ring_names.empty())
                throw ParseError("ring needs at least one variable", head.line, head.col);
        } else if (head.text == "degrees") {
            if (ring_done)
                throw ParseError("degrees must precede polynomial definitions", head.line, head.col);
            while (lex.peek().kind == Tok::Int) weights.push_back(std::stoi(lex.take().text));
        } else if (head.text == "poly" || head.text == "ideal") {
            Token name = lex.take();
            if (name.kind != Tok::Ident) throw ParseError("expected a name", name.line, name.col);
            Token eq = lex.take();
            if (eq.kind != Tok::Eq) throw ParseError("expected '='", eq.line, eq.col);
            build_ring(head);
            ExprParser ep(lex, doc.ring);
            if (head.text == "poly") {
                if (doc.find_poly(name.text))
                    throw ParseError("duplicate polynomial '" + name.text + "'", name.line, name.col);
                Polynomial p = ep.expr();
                if (!p.is_zero() && !p.homogeneous_degree())
                    throw ParseError("polynomial '" + name.text + "' is not homogeneous",
                                     name.line, name.col);
                doc.polys.emplace_back(name.text, std::move(p));
            } else {
                if (doc.find_ideal(name.text))
                    throw ParseError("duplicate ideal '" + name.text + "'", name.line, name.col);
                std::vector<Polynomial> gens;
                gens.push_back(ep.expr());
                while (lex.peek().kind == Tok::Comma) {
                    lex.take();
                    gens.push_back(ep.expr());
                }
                for (const auto& g : gens)
                    if (!g.is_zero() && !g.homogeneous_degree())
                        throw ParseError("ideal '" + name.text + "' has an inhomogeneous generator",
                                         name.line, name.col);
                doc.ideals.emplace_back(name.text, Ideal::make(doc.ring, std::move(gens)));
            }
        } else {
            throw ParseError("unknown statement '" + head.text + "'", head.line, head.col);
        }
        if (lex.peek().kind != Tok::End) {
            Token sep = lex.take();
            if (sep.kind != Tok::Sep)
                throw ParseError("expected ';' or a newline", sep.line, sep.col);
            skip_seps(lex);
        }
    }
    if (!have_field) throw ParseError("missing field declaration", 1, 1);
    if (ring_names.empty()) throw ParseError("missing ring declaration", 1, 1);
    build_ring(Token{Tok::End, "", 1, 1});
    return doc;
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    Lexer lex(text);
    ExprParser ep(lex, ring);
    Polynomial p = ep.expr();
    if (lex.peek().kind != Tok::End)
        throw ParseError("trailing input after polynomial", lex.peek().line, lex.peek().col);
    return p;
}

} // namespace gorlink
