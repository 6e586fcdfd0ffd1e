#include "plurikit/parse.hpp"

#include <cctype>

namespace plurikit {

namespace {

class Parser {
public:
    Parser(const std::string& src, const Ambient& ambient)
        : src_(src), amb_(ambient) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != src_.size())
            fail("trailing input at position " + std::to_string(pos_));
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        raise(ErrorCode::BadInput, "parse error: " + msg + " in '" + src_ + "'");
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = false;
        skip_ws();
        while (eat('-')) neg = !neg;
        Poly p = term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            if (eat('*')) p = p * factor();
            else if (eat('/')) {
                Poly d = factor();
                if (d.degree_in(VarFamily::T) > 0 || !d.uses_only(VarFamily::T) ||
                    d.total_degree() > 0)
                    fail("divisor must be free of variables");
                KappaRational c = d.constant_term();
                if (c.is_zero()) fail("division by zero");
                p = p.scaled(c.inverse());
            } else {
                return p;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer();
            if (neg) {
                if (base.total_degree() > 0) fail("negative power of a variable");
                KappaRational c = base.constant_term();
                if (c.is_zero()) fail("negative power of zero");
                return Poly::constant(c.pow(static_cast<int>(-e)), amb_);
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(src_.substr(start, pos_ - start));
    }

    Poly atom() {
        skip_ws();
        if (eat('(')) {
            Poly p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (eat('-')) return -atom();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            BigRational v = BigRational::from_string(src_.substr(start, pos_ - start));
            return Poly::constant(KappaRational(v), amb_);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        fail("unexpected character");
    }

    Poly variable() {
        size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        if (name == "k" || name == "kappa" || name == "s")
            return Poly::constant(KappaRational::variable(), amb_);
        VarId v = parse_var(name);
        amb_.check_var(v);
        return Poly::var(v, amb_);
    }

    VarId parse_var(const std::string& name) const {
        static const std::pair<const char*, VarFamily> tags[] = {
            {"u1", VarFamily::U1}, {"u2", VarFamily::U2},
            {"v1", VarFamily::V1}, {"v2", VarFamily::V2},
            {"t", VarFamily::T},   {"s", VarFamily::S},
            {"x", VarFamily::X},   {"w", VarFamily::W},
        };
        for (const auto& [tag, fam] : tags) {
            std::string t = tag;
            if (name.size() <= t.size() || name.compare(0, t.size(), t) != 0) continue;
            std::string rest = name.substr(t.size());
            std::vector<int> idx;
            if (rest[0] == '_') {
                size_t p = 1;
                while (p <= rest.size()) {
                    size_t q = rest.find('_', p);
                    std::string part = rest.substr(p, q == std::string::npos ? q : q - p);
                    if (part.empty()) fail("bad variable '" + name + "'");
                    idx.push_back(std::stoi(part));
                    if (q == std::string::npos) break;
                    p = q + 1;
                }
            } else {
                for (char d : rest) {
                    if (!std::isdigit(static_cast<unsigned char>(d)))
                        fail("bad variable '" + name + "'");
                    idx.push_back(d - '0');
                }
            }
            if (fam == VarFamily::S) {
                if (idx.size() != 1) fail("bad series variable '" + name + "'");
                return VarId::s(idx[0]);
            }
            if (idx.size() == 1 &&
                (fam == VarFamily::U1 || fam == VarFamily::U2 ||
                 fam == VarFamily::V1 || fam == VarFamily::V2))
                return VarId::make(fam, 1, idx[0]);
            if (idx.size() == 2) {
                if (rest[0] != '_' && idx.size() == 2 && rest.size() > 2)
                    fail("ambiguous variable '" + name + "'");
                return VarId::make(fam, idx[0], idx[1]);
            }
            fail("bad variable '" + name + "'");
        }
        fail("unknown variable '" + name + "'");
    }

    const std::string& src_;
    Ambient amb_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& src, const Ambient& ambient) {
    return Parser(src, ambient).parse();
}

KappaRational parse_kappa(const std::string& src) {
    Poly p = parse_poly(src, Ambient{});
    if (p.total_degree() > 0)
        raise(ErrorCode::BadInput, "expected a variable-free expression: " + src);
    return p.constant_term();
}

}  // namespace plurikit
