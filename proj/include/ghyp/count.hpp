#pragma once

#include <cstdint>
#include <functional>

#include "ghyp/embedding.hpp"
#include "ghyp/motive.hpp"
#include "ghyp/multipoly.hpp"

namespace ghyp {

struct StrataCount {
    std::int64_t total = 0;
    std::int64_t off_sigma = 0;  // zeros with every coordinate nonzero
    std::int64_t on_sigma = 0;
};

struct CountOptions {
    double max_bits = 24.0;  // guard: n * log2(q) must stay at or below this
};

// Visits the (q^n - 1)/(q - 1) canonical representatives of projective
// (n-1)-space over the q-element field: first nonzero coordinate normalized
// to 1, enumerated in ascending lexicographic order.
void for_each_projective_point(int n, std::int64_t q,
                               const std::function<void(const std::vector<std::int64_t>&)>& fn,
                               const CountOptions& opt = {});

// Brute-force zero count of p over projective space, stratified by whether
// any coordinate vanishes.
StrataCount count_zeros(const SubsetPoly& p, std::int64_t q, const CountOptions& opt = {});

// Points with at least k vanishing coordinates.
std::int64_t count_multi_vanishing(int n, int k, std::int64_t q, const CountOptions& opt = {});

struct VerifyClassReport {
    std::int64_t q = 0;
    StrataCount counts;
    std::int64_t class_value = 0;
    bool pass = false;
};

// Compares the counting specialization of a class against the brute count.
VerifyClassReport verify_class(const ClassPoly& c, const SubsetPoly& p, std::int64_t q,
                               const CountOptions& opt = {});

struct CremonaReport {
    std::int64_t q = 0;
    std::int64_t primal_off_sigma = 0;
    std::int64_t dual_off_sigma = 0;
    bool bijection = false;
    bool pass = false;
};

// Applies coordinate-wise inversion to every zero of the primal polynomial
// with all coordinates nonzero and checks that the image is exactly the
// corresponding zero set for the dual graph.
CremonaReport cremona_point_check(const RotationSystem& r, std::int64_t q,
                                  const CountOptions& opt = {});

}  // namespace ghyp
