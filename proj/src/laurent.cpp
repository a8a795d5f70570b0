#include "orbcc/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace orbcc {

ExponentVector::ExponentVector(std::vector<int> xs, std::vector<int> ys)
    : x(std::move(xs)), y(std::move(ys)) {
    if (x.size() != y.size())
        throw std::runtime_error("exponent vector: x/y length mismatch");
    for (int e : y)
        if (e < 0)
            throw std::runtime_error("exponent vector: negative y exponent");
}

bool ExponentVector::operator<(const ExponentVector &o) const {
    if (y != o.y)
        return y < o.y;
    return x < o.x;
}

ExponentVector ExponentVector::operator+(const ExponentVector &o) const {
    ExponentVector r = *this;
    for (std::size_t i = 0; i < x.size(); ++i) {
        r.x[i] += o.x[i];
        r.y[i] += o.y[i];
    }
    return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector &o) const {
    ExponentVector r = *this;
    for (std::size_t i = 0; i < x.size(); ++i) {
        r.x[i] -= o.x[i];
        r.y[i] -= o.y[i];
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::monomial(const Coeff &c, const ExponentVector &e) {
    LaurentPolynomial p(e.n());
    if (c != 0)
        p.terms_[e] = c;
    return p;
}

LaurentPolynomial LaurentPolynomial::constant(int n, const Coeff &c) {
    return monomial(c, ExponentVector(n));
}

Coeff LaurentPolynomial::coeff(const ExponentVector &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void LaurentPolynomial::check_same_n(const LaurentPolynomial &o) const {
    if (n_ != o.n_)
        throw std::runtime_error("laurent: dimension mismatch (" + std::to_string(n_) +
                                 " vs " + std::to_string(o.n_) + ")");
}

void LaurentPolynomial::add_term(const ExponentVector &e, const Coeff &c) {
    if (e.n() != n_)
        throw std::runtime_error("laurent: term dimension mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0)
            terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial &o) const {
    check_same_n(o);
    LaurentPolynomial r = *this;
    for (const auto &[e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial &o) const {
    check_same_n(o);
    LaurentPolynomial r = *this;
    for (const auto &[e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial &o) const {
    check_same_n(o);
    LaurentPolynomial r(n_);
    for (const auto &[e1, c1] : terms_)
        for (const auto &[e2, c2] : o.terms_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial &o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

LaurentPolynomial LaurentPolynomial::specialize_y_to_one() const {
    LaurentPolynomial r(n_);
    for (const auto &[e, c] : terms_) {
        ExponentVector e2 = e;
        std::fill(e2.y.begin(), e2.y.end(), 0);
        r.add_term(e2, c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::y_degree_zero_part() const {
    LaurentPolynomial r(n_);
    for (const auto &[e, c] : terms_) {
        bool zero = true;
        for (int v : e.y)
            if (v != 0)
                zero = false;
        if (zero)
            r.add_term(e, c);
    }
    return r;
}

namespace {

void append_factor(std::ostringstream &os, bool &first, const std::string &var, int exp) {
    if (exp == 0)
        return;
    if (!first)
        os << "*";
    first = false;
    os << var;
    if (exp != 1)
        os << "^" << exp;
}

std::string term_text(const ExponentVector &e, const Coeff &c_in) {
    Coeff c = c_in;
    std::ostringstream os;
    bool constant = true;
    for (int v : e.x)
        if (v != 0)
            constant = false;
    for (int v : e.y)
        if (v != 0)
            constant = false;
    if (constant) {
        os << c;
        return os.str();
    }
    bool first = true;
    if (c == -1) {
        os << "-";
    } else if (c != 1) {
        os << c;
        first = false;
    }
    for (int i = 0; i < e.n(); ++i)
        append_factor(os, first, "x" + std::to_string(i + 1), e.x[i]);
    for (int i = 0; i < e.n(); ++i)
        append_factor(os, first, "y" + std::to_string(i + 1), e.y[i]);
    return os.str();
}

} // namespace

std::string LaurentPolynomial::canonical_text() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        std::string t = term_text(e, c < 0 ? -c : c);
        if (first) {
            if (c < 0 && t[0] != '-')
                os << "-";
            os << (c < 0 ? term_text(e, c) : t);
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ") << t;
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string &s;
    std::size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
};

Coeff parse_integer(Cursor &c) {
    std::string digits;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        digits.push_back(c.s[c.i++]);
    if (digits.empty())
        throw std::runtime_error("polynomial parse: expected digits at offset " +
                                 std::to_string(c.i));
    return Coeff(digits);
}

int parse_small_int(Cursor &c) {
    bool neg = false;
    if (!c.done() && (c.peek() == '-' || c.peek() == '+')) {
        neg = c.peek() == '-';
        ++c.i;
    }
    std::string digits;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        digits.push_back(c.s[c.i++]);
    if (digits.empty())
        throw std::runtime_error("polynomial parse: expected exponent at offset " +
                                 std::to_string(c.i));
    int v = std::stoi(digits);
    return neg ? -v : v;
}

} // namespace

LaurentPolynomial parse_polynomial(const std::string &text, int n) {
    LaurentPolynomial p(n);
    Cursor c{text};
    c.skip_ws();
    if (c.done())
        throw std::runtime_error("polynomial parse: empty input");
    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.done())
            break;
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = c.peek() == '-' ? -1 : 1;
            ++c.i;
            c.skip_ws();
        } else if (!first) {
            throw std::runtime_error("polynomial parse: expected +/- between terms");
        }
        first = false;
        Coeff coeff = 1;
        ExponentVector e(n);
        bool saw_factor = false;
        if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = parse_integer(c);
            saw_factor = true;
        }
        while (true) {
            c.skip_ws();
            if (saw_factor) {
                if (c.done() || c.peek() != '*')
                    break;
                ++c.i;
                c.skip_ws();
            }
            if (c.done() || (c.peek() != 'x' && c.peek() != 'y'))
                throw std::runtime_error("polynomial parse: expected variable at offset " +
                                         std::to_string(c.i));
            char kind = c.peek();
            ++c.i;
            std::string digits;
            while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
                digits.push_back(c.s[c.i++]);
            if (digits.empty())
                throw std::runtime_error("polynomial parse: variable index missing");
            int idx = std::stoi(digits);
            if (idx < 1 || idx > n)
                throw std::runtime_error("polynomial parse: variable index out of range");
            int exp = 1;
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                exp = parse_small_int(c);
            }
            if (kind == 'x') {
                e.x[idx - 1] += exp;
            } else {
                if (exp < 0)
                    throw std::runtime_error("polynomial parse: negative y exponent");
                e.y[idx - 1] += exp;
            }
            saw_factor = true;
        }
        if (!saw_factor)
            throw std::runtime_error("polynomial parse: empty term");
        p.add_term(e, sign * coeff);
    }
    return p;
}

std::string format_int_vector(const std::vector<int> &v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

} // namespace orbcc
