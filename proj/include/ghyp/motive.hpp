#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghyp/graph.hpp"

namespace ghyp {

// Integer polynomial in the torus class T (the class of the punctured affine
// line). The Lefschetz class is L = T + 1; conversions are display-only.
class ClassPoly {
  public:
    ClassPoly() = default;
    explicit ClassPoly(std::vector<std::int64_t> coeffs);  // index i = coefficient of T^i

    static ClassPoly constant(std::int64_t c);
    static ClassPoly monomial(int power, std::int64_t c);

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t coeff(int i) const;
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

    std::string to_string(char var = 'T') const;

    friend bool operator==(const ClassPoly&, const ClassPoly&) = default;

  private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

ClassPoly operator+(const ClassPoly& a, const ClassPoly& b);
ClassPoly operator-(const ClassPoly& a, const ClassPoly& b);
ClassPoly operator-(const ClassPoly& a);
ClassPoly operator*(const ClassPoly& a, const ClassPoly& b);
ClassPoly operator*(std::int64_t c, const ClassPoly& a);

std::int64_t evaluate(const ClassPoly& a, std::int64_t x);

// Throws std::logic_error on a nonzero remainder; an inexact division here
// always signals an implementation defect.
ClassPoly divide_exact(const ClassPoly& num, const ClassPoly& den);

// [A^n] = (T+1)^n
ClassPoly affine_class(int n);

// [P^n] = 1 + L + ... + L^n, expressed in T
ClassPoly projective_class(int n);

// Class of the union of coordinate hyperplanes in P^(n-1):
// sum over 0 < i < n of binom(n,i) T^(n-1-i).
ClassPoly sigma_class(int n);

// Hyperplane-section operator: g |-> (g(T) - g(-1)) / (T + 1).
ClassPoly hyperplane_section(const ClassPoly& g);

// Class of the intersection of the hyperplane t1+...+tn = 0 with the
// coordinate hyperplanes; computed as a hyperplane section of sigma_class and
// cross-checked against the two-term closed form.
ClassPoly line_sigma_class(int n);

// Class of that hyperplane minus the coordinate hyperplanes:
// (T^(n-1) - (-1)^(n-1)) / (T + 1), verified exactly.
ClassPoly banana_off_sigma_class(int n);

// Points of P^(n-1) with at least two vanishing coordinates.
ClassPoly sn_class(int n);

// Graph-hypersurface classes of the four families.
ClassPoly family_class(FamilyKind kind, int n);

// Counting specialization T -> q - 1.
std::int64_t evaluate_at_q(const ClassPoly& c, std::int64_t q);

// Coefficients with respect to powers of L = T + 1 (for rendering).
ClassPoly in_lefschetz_basis(const ClassPoly& c);

// Value at T = q-1 of the alternate banana expression whose middle term has
// denominator T instead of T+1. Rejected by the counting oracle (it gives 2
// instead of 3 at n=3, q=2); kept so the regression stays pinned. Throws when
// the expression is not an integer at the given q.
std::int64_t banana_class_alt_at_q(int n, std::int64_t q);

}  // namespace ghyp
