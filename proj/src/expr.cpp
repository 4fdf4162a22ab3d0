#include "freefield/expr.hpp"

#include <cctype>

#include "freefield/errors.hpp"

namespace freefield {

ExprPtr RatExpr::scalar(Rational value) {
    auto e = std::shared_ptr<RatExpr>(new RatExpr(ExprKind::Scalar));
    e->scalar_ = std::move(value);
    return e;
}

ExprPtr RatExpr::gen(Letter letter) {
    auto e = std::shared_ptr<RatExpr>(new RatExpr(ExprKind::Gen));
    e->letter_ = letter;
    return e;
}

ExprPtr RatExpr::sum(std::vector<ExprPtr> children) {
    auto e = std::shared_ptr<RatExpr>(new RatExpr(ExprKind::Sum));
    e->children_ = std::move(children);
    return e;
}

ExprPtr RatExpr::product(std::vector<ExprPtr> children) {
    auto e = std::shared_ptr<RatExpr>(new RatExpr(ExprKind::Product));
    e->children_ = std::move(children);
    return e;
}

ExprPtr RatExpr::neg(ExprPtr child) {
    auto e = std::shared_ptr<RatExpr>(new RatExpr(ExprKind::Neg));
    e->children_ = {std::move(child)};
    return e;
}

ExprPtr RatExpr::star(ExprPtr child, bool trusted) {
    auto e = std::shared_ptr<RatExpr>(new RatExpr(ExprKind::Star));
    e->children_ = {std::move(child)};
    e->trusted_star_ = trusted;
    return e;
}

ExprPtr RatExpr::inverse(ExprPtr child) {
    auto e = std::shared_ptr<RatExpr>(new RatExpr(ExprKind::Inverse));
    e->children_ = {std::move(child)};
    return e;
}

bool RatExpr::is_star_rational() const {
    if (kind_ == ExprKind::Inverse) return false;
    for (const ExprPtr& c : children_)
        if (!c->is_star_rational()) return false;
    return true;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case ExprKind::Scalar: return a->scalar_value() == b->scalar_value();
        case ExprKind::Gen: return a->letter() == b->letter();
        default: break;
    }
    if (a->children().size() != b->children().size()) return false;
    for (std::size_t i = 0; i < a->children().size(); ++i)
        if (!expr_equal(a->children()[i], b->children()[i])) return false;
    return true;
}

namespace {

bool is_scalar(const ExprPtr& e, long v) {
    return e->kind() == ExprKind::Scalar && e->scalar_value() == v;
}

} // namespace

ExprPtr simplified_sum(std::vector<ExprPtr> parts) {
    std::vector<ExprPtr> flat;
    Rational scalar_acc = 0;
    bool saw_scalar = false;
    for (ExprPtr& p : parts) {
        if (p->kind() == ExprKind::Sum) {
            for (const ExprPtr& c : p->children()) {
                if (c->kind() == ExprKind::Scalar) {
                    scalar_acc += c->scalar_value();
                    saw_scalar = true;
                } else {
                    flat.push_back(c);
                }
            }
        } else if (p->kind() == ExprKind::Scalar) {
            scalar_acc += p->scalar_value();
            saw_scalar = true;
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (saw_scalar && scalar_acc != 0) flat.insert(flat.begin(), RatExpr::scalar(scalar_acc));
    if (flat.empty()) return RatExpr::scalar(0);
    if (flat.size() == 1) return flat[0];
    return RatExpr::sum(std::move(flat));
}

ExprPtr simplified_product(std::vector<ExprPtr> parts) {
    std::vector<ExprPtr> flat;
    Rational scalar_acc = 1;
    for (ExprPtr& p : parts) {
        if (p->kind() == ExprKind::Product) {
            for (const ExprPtr& c : p->children()) {
                if (c->kind() == ExprKind::Scalar)
                    scalar_acc *= c->scalar_value();
                else
                    flat.push_back(c);
            }
        } else if (p->kind() == ExprKind::Scalar) {
            scalar_acc *= p->scalar_value();
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (scalar_acc == 0) return RatExpr::scalar(0);
    if (scalar_acc != 1) flat.insert(flat.begin(), RatExpr::scalar(scalar_acc));
    if (flat.empty()) return RatExpr::scalar(1);
    if (flat.size() == 1) return flat[0];
    return RatExpr::product(std::move(flat));
}

ExprPtr simplified_star(ExprPtr child, bool trusted) {
    if (is_scalar(child, 0)) return RatExpr::scalar(1);
    return RatExpr::star(std::move(child), trusted);
}

ExprPtr monomial_expr(const GroupElement& g) {
    if (g.is_identity()) return RatExpr::scalar(1);
    std::vector<ExprPtr> parts;
    parts.reserve(g.length());
    for (const Letter& l : g.word()) parts.push_back(RatExpr::gen(l));
    return parts.size() == 1 ? parts[0] : RatExpr::product(std::move(parts));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
    enum Kind { Name, Int, Plus, Minus, Slash, LParen, RParen, StarOp, InvOp, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ == text_.size()) {
            tok_ = {Token::End, "", start};
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
                s += text_[i_++];
            tok_ = {Token::Int, s, start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (i_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
                s += text_[i_++];
            tok_ = {Token::Name, s, start};
            return;
        }
        switch (c) {
            case '+': tok_ = {Token::Plus, "+", start}; ++i_; return;
            case '-': tok_ = {Token::Minus, "-", start}; ++i_; return;
            case '/': tok_ = {Token::Slash, "/", start}; ++i_; return;
            case '(': tok_ = {Token::LParen, "(", start}; ++i_; return;
            case ')': tok_ = {Token::RParen, ")", start}; ++i_; return;
            case '\'': tok_ = {Token::InvOp, "'", start}; ++i_; return;
            case '^':
                if (text_.compare(i_, 2, "^*") == 0) {
                    tok_ = {Token::StarOp, "^*", start};
                    i_ += 2;
                    return;
                }
                if (text_.compare(i_, 3, "^-1") == 0) {
                    tok_ = {Token::InvOp, "^-1", start};
                    i_ += 3;
                    return;
                }
                throw ParseError("expected ^* or ^-1 after '^'", start);
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& text_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, const Alphabet& alphabet) : lex_(text), alphabet_(alphabet) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
        return e;
    }

private:
    ExprPtr parse_expr() {
        std::vector<ExprPtr> terms;
        bool negate_first = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            negate_first = true;
        }
        ExprPtr first = parse_term();
        terms.push_back(negate_first ? RatExpr::neg(first) : first);
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.take().kind == Token::Minus;
            ExprPtr t = parse_term();
            terms.push_back(minus ? RatExpr::neg(t) : t);
        }
        return terms.size() == 1 ? terms[0] : RatExpr::sum(std::move(terms));
    }

    bool starts_factor(const Token& t) const {
        return t.kind == Token::Name || t.kind == Token::Int || t.kind == Token::LParen;
    }

    ExprPtr parse_term() {
        std::vector<ExprPtr> factors;
        factors.push_back(parse_factor());
        while (starts_factor(lex_.peek())) factors.push_back(parse_factor());
        return factors.size() == 1 ? factors[0] : RatExpr::product(std::move(factors));
    }

    ExprPtr parse_factor() {
        ExprPtr e = parse_atom();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Token::StarOp) {
                lex_.take();
                e = RatExpr::star(e);
            } else if (t.kind == Token::InvOp) {
                lex_.take();
                if (e->kind() == ExprKind::Gen)
                    e = RatExpr::gen(e->letter().inverse());
                else
                    e = RatExpr::inverse(e);
            } else {
                break;
            }
        }
        return e;
    }

    ExprPtr parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Int: {
                Integer num(t.text);
                if (lex_.peek().kind == Token::Slash) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.kind != Token::Int) throw ParseError("expected denominator", d.pos);
                    return RatExpr::scalar(make_rational(num, Integer(d.text)));
                }
                return RatExpr::scalar(make_rational(num, Integer(1)));
            }
            case Token::Name: return lower_name(t);
            case Token::LParen: {
                ExprPtr e = parse_expr();
                Token close = lex_.take();
                if (close.kind != Token::RParen) throw ParseError("expected ')'", close.pos);
                return e;
            }
            default: throw ParseError("expected a name, number, or '('", t.pos);
        }
    }

    // A name token is a single generator or a juxtaposed run of generator
    // names (greedy longest match), e.g. "yx" over alphabet {x, y}.
    ExprPtr lower_name(const Token& t) {
        std::size_t whole = alphabet_.find(t.text);
        if (whole != alphabet_.size())
            return RatExpr::gen(Letter(static_cast<std::uint32_t>(whole), false));
        std::vector<ExprPtr> gens;
        std::size_t pos = 0;
        while (pos < t.text.size()) {
            std::size_t best = 0, best_idx = alphabet_.size();
            for (std::size_t g = 0; g < alphabet_.size(); ++g) {
                const std::string& n = alphabet_.name(g);
                if (n.size() > best && t.text.compare(pos, n.size(), n) == 0) {
                    best = n.size();
                    best_idx = g;
                }
            }
            if (best_idx == alphabet_.size())
                throw ParseError("unknown generator name: " + t.text.substr(pos), t.pos + pos);
            gens.push_back(RatExpr::gen(Letter(static_cast<std::uint32_t>(best_idx), false)));
            pos += best;
        }
        return gens.size() == 1 ? gens[0] : RatExpr::product(std::move(gens));
    }

    Lexer lex_;
    const Alphabet& alphabet_;
};

int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::Sum: return 0;
        case ExprKind::Neg: return 0;
        case ExprKind::Product: return 1;
        default: return 2;
    }
}

void format_rec(const ExprPtr& e, const Alphabet& alphabet, int parent_prec, std::string& out) {
    bool paren = precedence(e->kind()) < parent_prec;
    if (paren) out += '(';
    switch (e->kind()) {
        case ExprKind::Scalar: out += rational_to_string(e->scalar_value()); break;
        case ExprKind::Gen: out += alphabet.letter_to_string(e->letter()); break;
        case ExprKind::Sum:
            for (std::size_t i = 0; i < e->children().size(); ++i) {
                const ExprPtr& c = e->children()[i];
                if (i == 0) {
                    format_rec(c, alphabet, 1, out);
                } else if (c->kind() == ExprKind::Neg) {
                    out += " - ";
                    format_rec(c->child(), alphabet, 1, out);
                } else {
                    out += " + ";
                    format_rec(c, alphabet, 1, out);
                }
            }
            break;
        case ExprKind::Product:
            for (std::size_t i = 0; i < e->children().size(); ++i) {
                if (i) out += ' ';
                format_rec(e->children()[i], alphabet, 2, out);
            }
            break;
        case ExprKind::Neg:
            out += '-';
            format_rec(e->child(), alphabet, 2, out);
            break;
        case ExprKind::Star:
            format_rec(e->child(), alphabet, 3, out);
            out += "^*";
            break;
        case ExprKind::Inverse:
            format_rec(e->child(), alphabet, 3, out);
            out += "^-1";
            break;
    }
    if (paren) out += ')';
}

} // namespace

ExprPtr parse_expression(const std::string& text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse();
}

std::string format_expression(const ExprPtr& e, const Alphabet& alphabet) {
    std::string out;
    format_rec(e, alphabet, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// GroupPolynomial

GroupPolynomial GroupPolynomial::monomial(const GroupElement& g, const Rational& c) {
    GroupPolynomial p;
    p.add(g, c);
    return p;
}

void GroupPolynomial::add(const GroupElement& g, const Rational& c) {
    if (c == 0) return;
    auto it = coeffs_.find(g);
    if (it == coeffs_.end()) {
        coeffs_.emplace(g, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

GroupPolynomial& GroupPolynomial::operator+=(const GroupPolynomial& other) {
    for (const auto& [g, c] : other.coeffs_) add(g, c);
    return *this;
}

GroupPolynomial GroupPolynomial::scaled(const Rational& c) const {
    GroupPolynomial out;
    if (c == 0) return out;
    for (const auto& [g, k] : coeffs_) out.coeffs_.emplace(g, k * c);
    return out;
}

GroupPolynomial GroupPolynomial::operator*(const GroupPolynomial& other) const {
    GroupPolynomial out;
    for (const auto& [g, c] : coeffs_)
        for (const auto& [h, d] : other.coeffs_) out.add(group_mul(g, h), c * d);
    return out;
}

Rational GroupPolynomial::coefficient(const GroupElement& g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::optional<GroupPolynomial> as_group_polynomial(const ExprPtr& e) {
    switch (e->kind()) {
        case ExprKind::Scalar:
            return GroupPolynomial::monomial(GroupElement(), e->scalar_value());
        case ExprKind::Gen:
            return GroupPolynomial::monomial(GroupElement::from_reduced(Word{e->letter()}),
                                             Rational(1));
        case ExprKind::Sum: {
            GroupPolynomial acc;
            for (const ExprPtr& c : e->children()) {
                auto p = as_group_polynomial(c);
                if (!p) return std::nullopt;
                acc += *p;
            }
            return acc;
        }
        case ExprKind::Product: {
            GroupPolynomial acc = GroupPolynomial::monomial(GroupElement(), Rational(1));
            for (const ExprPtr& c : e->children()) {
                auto p = as_group_polynomial(c);
                if (!p) return std::nullopt;
                acc = acc * *p;
            }
            return acc;
        }
        case ExprKind::Neg: {
            auto p = as_group_polynomial(e->child());
            if (!p) return std::nullopt;
            return p->scaled(Rational(-1));
        }
        default: return std::nullopt;
    }
}

} // namespace freefield
