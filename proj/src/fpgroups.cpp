#include "pinwheel_forge/fpgroups.hpp"

#include "pinwheel_forge/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace pwf::fpg {

Word free_reduce(const std::vector<Letter>& letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    Word w;
    w = Word(std::move(out));
    return w;
}

Word::Word(std::vector<Letter> letters) {
    bool reduced = true;
    for (std::size_t i = 0; i < letters.size(); ++i)
        if (letters[i].exp == 0 || (i > 0 && letters[i - 1].gen == letters[i].gen)) reduced = false;
    if (reduced)
        letters_ = std::move(letters);
    else
        letters_ = free_reduce(letters).letters_;
}

Word Word::gen(int g, long exp) { return Word(std::vector<Letter>{{g, exp}}); }

std::size_t Word::length() const {
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(std::labs(l.exp));
    return n;
}

Word Word::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.exp = -l.exp;
    return Word(std::move(out));
}

Word Word::pow(long n) const {
    if (letters_.size() == 1) {
        const Letter& l = letters_.front();
        if (n != 0 && std::labs(l.exp) > std::numeric_limits<long>::max() / std::labs(n))
            throw std::overflow_error("Word::pow: exponent overflow");
        return gen(l.gen, l.exp * n);
    }
    Word base = n < 0 ? inverse() : *this;
    Word out;
    for (long i = 0; i < std::labs(n); ++i) out = out * base;
    return out;
}

Word Word::operator*(const Word& o) const {
    std::vector<Letter> all = letters_;
    all.insert(all.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(all));
}

std::vector<int> Word::expanded() const {
    std::vector<int> out;
    out.reserve(length());
    for (const auto& l : letters_) {
        int code = l.exp > 0 ? l.gen : -(l.gen + 1);
        for (long i = 0; i < std::labs(l.exp); ++i) out.push_back(code);
    }
    return out;
}

Word commutator(const Word& u, const Word& v, CommutatorConvention conv) {
    if (conv == CommutatorConvention::UVUinvVinv) return u * v * u.inverse() * v.inverse();
    return u.inverse() * v.inverse() * u * v;
}

int Presentation::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) { advance_token(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance_token();
        return t;
    }

private:
    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void advance_token() {
        for (;;) {
            while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
            if (pos_ < s_.size() && s_[pos_] == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') bump();
                continue;
            }
            break;
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) return;
        unsigned char c = static_cast<unsigned char>(s_[pos_]);
        if (std::isalpha(c) || c == '_') {
            tok_.kind = Token::Kind::Ident;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                tok_.text.push_back(s_[pos_]);
                bump();
            }
        } else if (std::isdigit(c)) {
            tok_.kind = Token::Kind::Int;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                tok_.text.push_back(s_[pos_]);
                bump();
            }
        } else if (std::string_view("[](),;:=^*-+").find(static_cast<char>(c)) != std::string_view::npos) {
            tok_.kind = Token::Kind::Punct;
            tok_.text.push_back(static_cast<char>(c));
            bump();
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line_, col_);
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

class Parser {
public:
    Parser(std::string_view text, CommutatorConvention conv) : lex_(text), conv_(conv) {}

    Presentation parse() {
        keyword("gens");
        punct(":");
        while (lex_.peek().kind == Token::Kind::Ident) {
            Token t = lex_.take();
            if (pres_.index_of(t.text) >= 0) throw ParseError("duplicate generator '" + t.text + "'", t.line, t.col);
            pres_.generators.push_back(t.text);
        }
        if (pres_.generators.empty()) fail("expected generator name");
        punct(";");
        keyword("rels");
        punct(":");
        if (!at_end() && !is_punct(";")) {
            pres_.relators.push_back(relation());
            while (is_punct(",")) {
                lex_.take();
                pres_.relators.push_back(relation());
            }
        }
        if (is_punct(";")) lex_.take();
        if (!at_end()) fail("unexpected '" + lex_.peek().text + "'");
        return pres_;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, lex_.peek().line, lex_.peek().col); }

    bool at_end() const { return lex_.peek().kind == Token::Kind::End; }
    bool is_punct(std::string_view p) const {
        return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == p;
    }
    void punct(std::string_view p) {
        if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
        lex_.take();
    }
    void keyword(std::string_view k) {
        if (lex_.peek().kind != Token::Kind::Ident || lex_.peek().text != k) fail("expected '" + std::string(k) + "'");
        lex_.take();
    }

    bool starts_atom() const {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Ident) return true;
        if (t.kind == Token::Kind::Int) return t.text == "1";
        return t.kind == Token::Kind::Punct && (t.text == "[" || t.text == "(");
    }

    Word relation() {
        Word lhs = word();
        if (is_punct("=")) {
            lex_.take();
            Word rhs = word();
            return lhs * rhs.inverse();
        }
        return lhs;
    }

    Word word() {
        if (!starts_atom()) fail("expected word");
        Word w;
        while (starts_atom()) {
            w = w * term();
            if (is_punct("*")) {
                lex_.take();
                if (!starts_atom()) fail("expected word after '*'");
            }
        }
        return w;
    }

    Word term() {
        Word a = atom();
        if (!is_punct("^")) return a;
        lex_.take();
        bool neg = false;
        if (is_punct("-") || is_punct("+")) neg = lex_.take().text == "-";
        if (lex_.peek().kind != Token::Kind::Int) fail("expected exponent");
        Token t = lex_.take();
        long e = 0;
        for (char c : t.text) {
            if (e > (std::numeric_limits<long>::max() - 9) / 10) throw ParseError("exponent too large", t.line, t.col);
            e = e * 10 + (c - '0');
        }
        return a.pow(neg ? -e : e);
    }

    Word atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Int) {
            lex_.take();
            return Word();
        }
        if (t.kind == Token::Kind::Ident) {
            int g = pres_.index_of(t.text);
            if (g < 0) fail("undeclared generator '" + t.text + "'");
            lex_.take();
            return Word::gen(g);
        }
        if (is_punct("(")) {
            lex_.take();
            Word w = word();
            punct(")");
            return w;
        }
        punct("[");
        Word u = word();
        punct(",");
        Word v = word();
        punct("]");
        return commutator(u, v, conv_);
    }

    Lexer lex_;
    CommutatorConvention conv_;
    Presentation pres_;
};

}  // namespace

Presentation parse_presentation(std::string_view text, CommutatorConvention conv) {
    return Parser(text, conv).parse();
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& l : w.letters()) {
        os << (first ? "" : " ") << names.at(static_cast<std::size_t>(l.gen));
        if (l.exp != 1) os << "^" << l.exp;
        first = false;
    }
    return os.str();
}

std::string to_dsl(const Presentation& p) {
    std::ostringstream os;
    os << "gens:";
    for (const auto& g : p.generators) os << " " << g;
    os << " ; rels:";
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        os << (i ? ", " : " ") << to_string(p.relators[i], p.generators);
    return os.str();
}

std::vector<Int> abelianization(const Presentation& p) {
    const std::size_t ng = p.generators.size();
    const std::size_t nr = p.relators.size();
    zlin::IntMatrix m(nr, ng);
    for (std::size_t r = 0; r < nr; ++r)
        for (const auto& l : p.relators[r].letters()) m(r, static_cast<std::size_t>(l.gen)) += l.exp;
    std::vector<Int> out;
    std::size_t nonzero = 0;
    if (nr > 0 && ng > 0) {
        for (const Int& d : zlin::smith_diagonal(m)) {
            if (d == 0) continue;
            ++nonzero;
            if (d != 1) out.push_back(d);
        }
    }
    for (std::size_t i = nonzero; i < ng; ++i) out.push_back(0);
    return out;
}

std::size_t default_max_cosets() {
    constexpr std::size_t fallback = 1000000;
    const char* env = std::getenv("PINWHEEL_FORGE_MAX_COSETS");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) return fallback;
    return static_cast<std::size_t>(v);
}

namespace {

std::string xi_text(const FamilyParams& p) {
    return p.xi_as_generators ? "xi" : "(y0 [a2,y0] y0^-1)";
}

// b = [b',a^-1]^n or the equivalent b [a^-1,b']^n.
std::string twisted(const FamilyParams& p, const std::string& b, const std::string& bp, const std::string& a) {
    std::string n = std::to_string(p.n);
    if (p.twist_as_product) return b + " [" + a + "^-1," + bp + "]^" + n;
    return b + " = [" + bp + "," + a + "^-1]^" + n;
}

void add_xi_block(const FamilyParams& p, std::vector<std::string>& rels) {
    if (p.xi_as_generators) {
        rels.push_back("eta = [a2,y0]");
        rels.push_back("xi = y0 eta y0^-1");
    }
    rels.push_back("b2 = y0^2 " + xi_text(p) + "^" + std::to_string(p.kappa));
}

std::string assemble(const std::vector<std::string>& gens, const std::vector<std::string>& rels) {
    std::ostringstream os;
    os << "gens:";
    for (const auto& g : gens) os << " " << g;
    os << " ;\nrels:\n";
    for (std::size_t i = 0; i < rels.size(); ++i) os << "  " << rels[i] << (i + 1 < rels.size() ? ",\n" : "\n");
    return os.str();
}

}  // namespace

bool family_uses_kappa(int k) { return k == 2 || k == 4; }

std::string family_presentation_text(const FamilyParams& p) {
    if (p.n < 1) throw PreconditionError("family presentation: n must be >= 1");
    std::vector<std::string> gens;
    std::vector<std::string> rels;
    switch (p.k) {
        case 3: {
            gens = {"a0", "a1", "a2", "b0", "b1", "b2"};
            for (int i = 0; i < 3; ++i) {
                std::string ai = "a" + std::to_string(i), bi = "b" + std::to_string(i);
                int im = (i + 2) % 3;
                std::string am = "a" + std::to_string(im), bm = "b" + std::to_string(im);
                rels.push_back("[" + ai + "," + bi + "]");
                rels.push_back("[" + am + "," + ai + "]");
                rels.push_back("[" + bm + "," + ai + "]");
                rels.push_back(am + " = [" + bm + "^-1," + bi + "^-1]");
                if (im == 1)
                    rels.push_back(twisted(p, bm, bi, am));
                else
                    rels.push_back(bm + " = [" + bi + "," + am + "^-1]");
            }
            break;
        }
        case 2: {
            gens = {"a0", "a1", "a2", "b0", "b1", "b2", "y0"};
            if (p.xi_as_generators) {
                gens.push_back("eta");
                gens.push_back("xi");
            }
            // A
            rels.push_back("a1 [b2^-1,b1^-1]");
            rels.push_back(twisted(p, "b1", "b2", "a1"));
            rels.push_back("[a1,a2]");
            rels.push_back("[b1,a2]");
            // A-hat
            rels.push_back("a0 [b1^-1,b0^-1]");
            rels.push_back("b0 [a0^-1,b1]");
            rels.push_back("[a0,a1]");
            rels.push_back("[b0,a1]");
            rels.push_back("[a0,b0]");
            // I_0
            rels.push_back("a2 [b0^-1,y0^-1]");
            rels.push_back("y0 [a2^-1,b0]");
            rels.push_back("[a2,a0]");
            rels.push_back("[y0,a0]");
            rels.push_back("[b2,a0]");
            add_xi_block(p, rels);
            break;
        }
        case 4: {
            gens = {"a0", "a2", "b0", "b2", "y0", "mu"};
            if (p.xi_as_generators) {
                gens.push_back("eta");
                gens.push_back("xi");
            }
            // A-hat_(3)
            rels.push_back("a0 [b2^-1,b0^-1]");
            rels.push_back(twisted(p, "b0", "b2", "a0"));
            rels.push_back("[a0,a2]");
            rels.push_back("[b0,a2]");
            rels.push_back("[a0,b0]");
            // I_0
            rels.push_back("a2 [b0^-1,y0^-1]");
            rels.push_back("y0 [a2^-1,b0]");
            rels.push_back("[a2,a0]");
            rels.push_back("[y0,a0]");
            rels.push_back("[b2,a0]");
            add_xi_block(p, rels);
            rels.push_back("mu = [a2,b2]");
            break;
        }
        case 7: {
            gens = {"a", "b", "mu0", "mu1"};
            rels.push_back("a [b^-1,b^-1]");
            rels.push_back(twisted(p, "b", "b", "a"));
            rels.push_back("[a,b]");
            rels.push_back("mu0 = [a,b]");
            rels.push_back("mu1 = [a,b]");
            break;
        }
        default:
            throw PreconditionError("family presentation: unsupported k = " + std::to_string(p.k));
    }
    return assemble(gens, rels);
}

Presentation build_family_presentation(const FamilyParams& p) {
    return parse_presentation(family_presentation_text(p), p.conv);
}

TrivialityResult verify_trivial(const Presentation& p, std::size_t max_cosets) {
    TrivialityResult r;
    r.h1 = abelianization(p);
    if (!r.h1.empty()) {
        r.kind = TrivialityResult::Kind::NontrivialH1;
        return r;
    }
    r.enumeration = todd_coxeter(p, max_cosets);
    if (r.enumeration.status == EnumResult::Status::Inconclusive)
        r.kind = TrivialityResult::Kind::Inconclusive;
    else if (r.enumeration.order == 1)
        r.kind = TrivialityResult::Kind::Trivial;
    else
        r.kind = TrivialityResult::Kind::NontrivialFinite;
    return r;
}

std::string to_string(TrivialityResult::Kind k) {
    switch (k) {
        case TrivialityResult::Kind::Trivial: return "Trivial";
        case TrivialityResult::Kind::NontrivialH1: return "NontrivialH1";
        case TrivialityResult::Kind::NontrivialFinite: return "NontrivialFinite";
        case TrivialityResult::Kind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

}  // namespace pwf::fpg
