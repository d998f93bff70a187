#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghyp/graph.hpp"

namespace ghyp {

// Multilinear integer polynomial: each term is an edge subset with a nonzero
// exact coefficient. Exponents are 0/1 by construction.
class SubsetPoly {
  public:
    SubsetPoly() : var_count_(0) {}
    explicit SubsetPoly(int var_count);

    static SubsetPoly constant(int var_count, std::int64_t c);
    static SubsetPoly monomial(int var_count, EdgeSubset vars, std::int64_t c = 1);

    int var_count() const { return var_count_; }
    const std::map<EdgeSubset, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::int64_t coeff(EdgeSubset vars) const;
    EdgeSubset support_vars() const;  // union of all term masks

    // Accumulates into the term map; prunes the term when the sum is zero.
    void add_term(EdgeSubset vars, std::int64_t c);

    // Terms ascending by bitmask, "t3" style variables, explicit '+'.
    std::string to_string() const;

    friend bool operator==(const SubsetPoly&, const SubsetPoly&) = default;

  private:
    int var_count_;
    std::map<EdgeSubset, std::int64_t> terms_;
};

SubsetPoly add(const SubsetPoly& p, const SubsetPoly& q);
SubsetPoly scale(const SubsetPoly& p, std::int64_t c);

// Product of polynomials with disjoint variable supports. General
// multiplication is deliberately unsupported: it would leave the
// multilinear representation.
SubsetPoly mul_disjoint(const SubsetPoly& p, const SubsetPoly& q);

std::int64_t evaluate_mod(const SubsetPoly& p, const std::vector<std::int64_t>& point,
                          std::int64_t q);

// (t1*...*tn) * p(1/t): each term maps to its subset complement.
SubsetPoly reciprocal_transform(const SubsetPoly& p);

int degree(const SubsetPoly& p);
bool is_homogeneous(const SubsetPoly& p);

// Splits p into two nonconstant variable-disjoint factors when possible.
// Exhaustive over bipartitions of the support variables.
std::optional<std::pair<SubsetPoly, SubsetPoly>> find_disjoint_factorization(const SubsetPoly& p);

}  // namespace ghyp
