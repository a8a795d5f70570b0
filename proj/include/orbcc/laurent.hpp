#ifndef ORBCC_LAURENT_HPP
#define ORBCC_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace orbcc {

using Coeff = boost::multiprecision::cpp_int;

// Exponents of a single monomial in x_1..x_n (integer exponents) and
// y_1..y_n (non-negative exponents).
struct ExponentVector {
    std::vector<int> x;
    std::vector<int> y;

    ExponentVector() = default;
    explicit ExponentVector(int n) : x(n, 0), y(n, 0) {}
    ExponentVector(std::vector<int> xs, std::vector<int> ys);

    int n() const { return static_cast<int>(x.size()); }

    // Term order used for serialization: y lexicographic first, then x.
    bool operator<(const ExponentVector &o) const;
    bool operator==(const ExponentVector &o) const { return x == o.x && y == o.y; }

    ExponentVector operator+(const ExponentVector &o) const;
    ExponentVector operator-(const ExponentVector &o) const;
};

// Integer-coefficient Laurent polynomial in x_1..x_n, y_1..y_n.
// Invariant: no stored coefficient is zero; all keys share the same n.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(int n) : n_(n) {}

    static LaurentPolynomial monomial(const Coeff &c, const ExponentVector &e);
    static LaurentPolynomial constant(int n, const Coeff &c);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExponentVector, Coeff> &terms() const { return terms_; }

    Coeff coeff(const ExponentVector &e) const;

    LaurentPolynomial operator+(const LaurentPolynomial &o) const;
    LaurentPolynomial operator-(const LaurentPolynomial &o) const;
    LaurentPolynomial operator*(const LaurentPolynomial &o) const;
    bool operator==(const LaurentPolynomial &o) const;
    bool operator!=(const LaurentPolynomial &o) const { return !(*this == o); }

    void add_term(const ExponentVector &e, const Coeff &c);

    // Sets every y_i to 1, collapsing terms that differ only in y.
    LaurentPolynomial specialize_y_to_one() const;

    // The sub-polynomial of terms with all y-exponents zero.
    LaurentPolynomial y_degree_zero_part() const;

    std::string canonical_text() const;

  private:
    int n_ = 0;
    std::map<ExponentVector, Coeff> terms_;
    void check_same_n(const LaurentPolynomial &o) const;
};

// Parses the grammar produced by canonical_text (also accepts redundant
// "+x1"-style leading signs).  Throws std::runtime_error on bad input.
LaurentPolynomial parse_polynomial(const std::string &text, int n);

std::string format_int_vector(const std::vector<int> &v);

} // namespace orbcc

#endif
