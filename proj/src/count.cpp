#include "ghyp/count.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ghyp/checked.hpp"
#include "ghyp/kirchhoff.hpp"

namespace ghyp {

namespace {

void check_domain(int n, std::int64_t q, const CountOptions& opt) {
    if (n < 1) throw invalid_input("need at least one variable");
    if (!is_prime(q)) throw invalid_input("q not prime");
    if (static_cast<double>(n) * std::log2(static_cast<double>(q)) > opt.max_bits)
        throw size_limit_error("domain too large");
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t q) {
    std::int64_t r = 1;
    b %= q;
    while (e > 0) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t q) { return mod_pow(a, q - 2, q); }

// flattened term list; coefficients already reduced mod q
struct EvalPlan {
    std::vector<std::pair<EdgeSubset, std::int64_t>> terms;

    EvalPlan(const SubsetPoly& p, std::int64_t q) {
        for (const auto& [vars, c] : p.terms()) {
            std::int64_t cc = ((c % q) + q) % q;
            if (cc) terms.emplace_back(vars, cc);
        }
    }

    std::int64_t eval(const std::vector<std::int64_t>& pt, std::int64_t q) const {
        std::int64_t acc = 0;
        for (const auto& [vars, c] : terms) {
            std::int64_t term = c;
            EdgeSubset rest = vars;
            while (rest && term) {
                int i = std::countr_zero(rest);
                rest &= rest - 1;
                term = term * pt[static_cast<size_t>(i)] % q;
            }
            acc = (acc + term) % q;
        }
        return acc;
    }
};

}  // namespace

void for_each_projective_point(int n, std::int64_t q,
                               const std::function<void(const std::vector<std::int64_t>&)>& fn,
                               const CountOptions& opt) {
    check_domain(n, q, opt);
    std::vector<std::int64_t> pt(static_cast<size_t>(n), 0);
    for (int lead = n - 1; lead >= 0; --lead) {
        std::fill(pt.begin(), pt.end(), 0);
        pt[static_cast<size_t>(lead)] = 1;
        while (true) {
            fn(pt);
            int pos = n - 1;
            while (pos > lead && pt[static_cast<size_t>(pos)] == q - 1) {
                pt[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos == lead) break;
            ++pt[static_cast<size_t>(pos)];
        }
    }
}

StrataCount count_zeros(const SubsetPoly& p, std::int64_t q, const CountOptions& opt) {
    const int n = p.var_count();
    check_domain(n, q, opt);
    EvalPlan plan(p, q);
    StrataCount sc;
    for_each_projective_point(
        n, q,
        [&](const std::vector<std::int64_t>& pt) {
            if (plan.eval(pt, q) != 0) return;
            ++sc.total;
            bool off = std::none_of(pt.begin(), pt.end(), [](std::int64_t x) { return x == 0; });
            if (off)
                ++sc.off_sigma;
            else
                ++sc.on_sigma;
        },
        opt);
    return sc;
}

std::int64_t count_multi_vanishing(int n, int k, std::int64_t q, const CountOptions& opt) {
    if (k < 1 || k > n) throw invalid_input("need 1 <= k <= n");
    check_domain(n, q, opt);
    std::int64_t count = 0;
    for_each_projective_point(
        n, q,
        [&](const std::vector<std::int64_t>& pt) {
            int zeros = static_cast<int>(std::count(pt.begin(), pt.end(), 0));
            if (zeros >= k) ++count;
        },
        opt);
    return count;
}

VerifyClassReport verify_class(const ClassPoly& c, const SubsetPoly& p, std::int64_t q,
                               const CountOptions& opt) {
    VerifyClassReport rep;
    rep.q = q;
    rep.counts = count_zeros(p, q, opt);
    rep.class_value = evaluate_at_q(c, q);
    rep.pass = rep.class_value == rep.counts.total;
    return rep;
}

CremonaReport cremona_point_check(const RotationSystem& r, std::int64_t q,
                                  const CountOptions& opt) {
    const Multigraph& g = r.graph();
    const int n = g.edge_count();
    check_domain(n, q, opt);
    SubsetPoly primal = psi(g);
    SubsetPoly dual_poly = psi(dual(r).graph());
    EvalPlan primal_plan(primal, q);
    EvalPlan dual_plan(dual_poly, q);

    // points with every coordinate nonzero have canonical form (1, x2, .., xn)
    std::vector<std::vector<std::int64_t>> primal_zeros;
    std::set<std::vector<std::int64_t>> dual_zeros;
    std::vector<std::int64_t> pt(static_cast<size_t>(n), 1);
    while (true) {
        if (primal_plan.eval(pt, q) == 0) primal_zeros.push_back(pt);
        if (dual_plan.eval(pt, q) == 0) dual_zeros.insert(pt);
        int pos = n - 1;
        while (pos > 0 && pt[static_cast<size_t>(pos)] == q - 1) {
            pt[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos == 0) break;
        ++pt[static_cast<size_t>(pos)];
    }

    // invert coordinate-wise; the first coordinate stays 1, so the image is canonical
    std::set<std::vector<std::int64_t>> image;
    for (const auto& z : primal_zeros) {
        std::vector<std::int64_t> w(z.size());
        for (size_t i = 0; i < z.size(); ++i) w[i] = mod_inv(z[i], q);
        image.insert(std::move(w));
    }

    CremonaReport rep;
    rep.q = q;
    rep.primal_off_sigma = static_cast<std::int64_t>(primal_zeros.size());
    rep.dual_off_sigma = static_cast<std::int64_t>(dual_zeros.size());
    rep.bijection = image.size() == primal_zeros.size() && image == dual_zeros;
    rep.pass = rep.bijection;
    return rep;
}

}  // namespace ghyp
