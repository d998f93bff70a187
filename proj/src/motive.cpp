#include "ghyp/motive.hpp"

#include <stdexcept>

#include "ghyp/checked.hpp"

namespace ghyp {

ClassPoly::ClassPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void ClassPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ClassPoly ClassPoly::constant(std::int64_t c) { return ClassPoly({c}); }

ClassPoly ClassPoly::monomial(int power, std::int64_t c) {
    if (power < 0) throw invalid_input("negative power");
    std::vector<std::int64_t> v(static_cast<size_t>(power) + 1, 0);
    v.back() = c;
    return ClassPoly(std::move(v));
}

std::int64_t ClassPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

std::string ClassPoly::to_string(char var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        std::int64_t c = coeff(i);
        if (c == 0) continue;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::int64_t mag = c < 0 ? -c : c;
        if (i == 0)
            out += std::to_string(mag);
        else {
            if (mag != 1) out += std::to_string(mag);
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

ClassPoly operator+(const ClassPoly& a, const ClassPoly& b) {
    std::vector<std::int64_t> v(static_cast<size_t>(std::max(a.degree(), b.degree()) + 1), 0);
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = checked_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return ClassPoly(std::move(v));
}

ClassPoly operator-(const ClassPoly& a) { return -1 * a; }

ClassPoly operator-(const ClassPoly& a, const ClassPoly& b) { return a + (-b); }

ClassPoly operator*(const ClassPoly& a, const ClassPoly& b) {
    if (a.is_zero() || b.is_zero()) return ClassPoly();
    std::vector<std::int64_t> v(static_cast<size_t>(a.degree() + b.degree() + 1), 0);
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j)
            v[static_cast<size_t>(i + j)] = checked_add(
                v[static_cast<size_t>(i + j)], checked_mul(a.coeff(i), b.coeff(j)));
    return ClassPoly(std::move(v));
}

ClassPoly operator*(std::int64_t c, const ClassPoly& a) {
    std::vector<std::int64_t> v(a.coeffs());
    for (auto& x : v) x = checked_mul(x, c);
    return ClassPoly(std::move(v));
}

std::int64_t evaluate(const ClassPoly& a, std::int64_t x) {
    std::int64_t acc = 0;
    for (int i = a.degree(); i >= 0; --i) acc = checked_add(checked_mul(acc, x), a.coeff(i));
    return acc;
}

ClassPoly divide_exact(const ClassPoly& num, const ClassPoly& den) {
    if (den.is_zero()) throw std::logic_error("division by the zero class");
    std::vector<std::int64_t> rem(num.coeffs());
    const int dd = den.degree();
    const std::int64_t lead = den.coeff(dd);
    std::vector<std::int64_t> quot;
    int rd = static_cast<int>(rem.size()) - 1;
    while (rd >= 0 && rem[static_cast<size_t>(rd)] == 0) --rd;
    if (rd >= dd) quot.assign(static_cast<size_t>(rd - dd + 1), 0);
    while (rd >= dd) {
        if (rem[static_cast<size_t>(rd)] % lead != 0)
            throw std::logic_error("inexact class division");
        std::int64_t f = rem[static_cast<size_t>(rd)] / lead;
        quot[static_cast<size_t>(rd - dd)] = f;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(rd - dd + i)] =
                checked_sub(rem[static_cast<size_t>(rd - dd + i)], checked_mul(f, den.coeff(i)));
        while (rd >= 0 && rem[static_cast<size_t>(rd)] == 0) --rd;
    }
    if (rd >= 0) throw std::logic_error("inexact class division");
    return ClassPoly(std::move(quot));
}

ClassPoly affine_class(int n) {
    if (n < 0) throw invalid_input("affine_class needs n >= 0");
    std::vector<std::int64_t> v(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<size_t>(i)] = binomial(n, i);
    return ClassPoly(std::move(v));
}

ClassPoly projective_class(int n) {
    if (n < 0) throw invalid_input("projective_class needs n >= 0");
    std::vector<std::int64_t> v(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<size_t>(i)] = binomial(n + 1, i + 1);
    return ClassPoly(std::move(v));
}

ClassPoly sigma_class(int n) {
    if (n < 1) throw invalid_input("sigma_class needs n >= 1");
    std::vector<std::int64_t> v(static_cast<size_t>(std::max(n - 1, 0)), 0);
    for (int i = 0; i <= n - 2; ++i) v[static_cast<size_t>(i)] = binomial(n, i + 1);
    return ClassPoly(std::move(v));
}

ClassPoly hyperplane_section(const ClassPoly& g) {
    ClassPoly num = g - ClassPoly::constant(evaluate(g, -1));
    return divide_exact(num, ClassPoly({1, 1}));
}

ClassPoly line_sigma_class(int n) {
    if (n < 2) throw invalid_input("line_sigma_class needs n >= 2");
    ClassPoly h = hyperplane_section(sigma_class(n));
    // closed form: [P^(n-2)] - (T^(n-1) - (-1)^(n-1)) / (T+1)
    ClassPoly num = ClassPoly::monomial(n - 1, 1) - ClassPoly::constant((n - 1) % 2 ? -1 : 1);
    ClassPoly alt = projective_class(n - 2) - divide_exact(num, ClassPoly({1, 1}));
    if (h != alt) throw std::logic_error("hyperplane-section consistency failure");
    return h;
}

ClassPoly banana_off_sigma_class(int n) {
    if (n < 2) throw invalid_input("banana_off_sigma_class needs n >= 2");
    ClassPoly r = projective_class(n - 2) - line_sigma_class(n);
    ClassPoly num = ClassPoly::monomial(n - 1, 1) - ClassPoly::constant((n - 1) % 2 ? -1 : 1);
    if (r * ClassPoly({1, 1}) != num) throw std::logic_error("off-hyperplane class inconsistency");
    return r;
}

ClassPoly sn_class(int n) {
    if (n < 2) throw invalid_input("sn_class needs n >= 2");
    return sigma_class(n) - ClassPoly::monomial(n - 2, n);
}

ClassPoly family_class(FamilyKind kind, int n) {
    if (n < 1) throw invalid_input("family size must be positive");
    if ((kind == FamilyKind::Polygon || kind == FamilyKind::Banana) && n < 2)
        throw invalid_input(family_name(kind) + " requires n >= 2");
    switch (kind) {
        case FamilyKind::Star: return ClassPoly();
        case FamilyKind::Flower: return sigma_class(n);
        case FamilyKind::Polygon: return projective_class(n - 2);
        case FamilyKind::Banana: return banana_off_sigma_class(n) + sn_class(n);
    }
    throw invalid_input("unknown family kind");
}

std::int64_t evaluate_at_q(const ClassPoly& c, std::int64_t q) {
    if (q < 2) throw invalid_input("q must be at least 2");
    return evaluate(c, q - 1);
}

ClassPoly in_lefschetz_basis(const ClassPoly& c) {
    // substitute T = L - 1 and collect powers of L
    const ClassPoly base({-1, 1});
    ClassPoly acc;
    for (int i = c.degree(); i >= 0; --i)
        acc = acc * base + ClassPoly::constant(c.coeff(i));
    return acc;
}

std::int64_t banana_class_alt_at_q(int n, std::int64_t q) {
    if (n < 2) throw invalid_input("needs n >= 2");
    if (q < 2) throw invalid_input("q must be at least 2");
    const std::int64_t t = q - 1;
    auto ipow = [](std::int64_t b, int e) {
        std::int64_t r = 1;
        for (int i = 0; i < e; ++i) r = checked_mul(r, b);
        return r;
    };
    std::int64_t a = (ipow(q, n) - 1) / (q - 1);
    std::int64_t bnum = checked_sub(ipow(t, n), n % 2 ? -1 : 1);
    if (bnum % t != 0) throw invalid_input("alternate expression is not an integer at this q");
    std::int64_t b = bnum / t;
    std::int64_t c = checked_mul(n, ipow(t, n - 2));
    return checked_sub(checked_sub(a, b), c);
}

}  // namespace ghyp
