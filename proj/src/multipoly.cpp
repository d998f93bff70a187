#include "ghyp/multipoly.hpp"

#include <numeric>

#include "ghyp/checked.hpp"

namespace ghyp {

SubsetPoly::SubsetPoly(int var_count) : var_count_(var_count) {
    if (var_count < 0 || var_count > 64) throw invalid_input("var_count must be in 0..64");
}

SubsetPoly SubsetPoly::constant(int var_count, std::int64_t c) {
    SubsetPoly p(var_count);
    p.add_term(0, c);
    return p;
}

SubsetPoly SubsetPoly::monomial(int var_count, EdgeSubset vars, std::int64_t c) {
    SubsetPoly p(var_count);
    p.add_term(vars, c);
    return p;
}

bool SubsetPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::int64_t SubsetPoly::coeff(EdgeSubset vars) const {
    auto it = terms_.find(vars);
    return it == terms_.end() ? 0 : it->second;
}

EdgeSubset SubsetPoly::support_vars() const {
    EdgeSubset s = 0;
    for (const auto& [vars, c] : terms_) s |= vars;
    return s;
}

void SubsetPoly::add_term(EdgeSubset vars, std::int64_t c) {
    if (vars & ~all_edges_mask(var_count_))
        throw invalid_input("term uses variables outside 1..var_count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(vars, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

std::string SubsetPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [vars, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string varpart;
        EdgeSubset rest = vars;
        while (rest) {
            int id = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            if (!varpart.empty()) varpart += "*";
            varpart += "t" + std::to_string(id);
        }
        if (varpart.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += varpart;
        else if (c == -1)
            out += "-" + varpart;
        else
            out += std::to_string(c) + "*" + varpart;
    }
    return out;
}

SubsetPoly add(const SubsetPoly& p, const SubsetPoly& q) {
    if (p.var_count() != q.var_count()) throw invalid_input("var_count mismatch");
    SubsetPoly r = p;
    for (const auto& [vars, c] : q.terms()) r.add_term(vars, c);
    return r;
}

SubsetPoly scale(const SubsetPoly& p, std::int64_t c) {
    SubsetPoly r(p.var_count());
    if (c == 0) return r;
    for (const auto& [vars, pc] : p.terms()) r.add_term(vars, checked_mul(pc, c));
    return r;
}

SubsetPoly mul_disjoint(const SubsetPoly& p, const SubsetPoly& q) {
    if (p.var_count() != q.var_count()) throw invalid_input("var_count mismatch");
    if (p.support_vars() & q.support_vars()) throw invalid_input("not variable-disjoint");
    SubsetPoly r(p.var_count());
    for (const auto& [sp, cp] : p.terms())
        for (const auto& [sq, cq] : q.terms()) r.add_term(sp | sq, checked_mul(cp, cq));
    return r;
}

std::int64_t evaluate_mod(const SubsetPoly& p, const std::vector<std::int64_t>& point,
                          std::int64_t q) {
    if (!is_prime(q)) throw invalid_input("q not prime");
    if (static_cast<int>(point.size()) != p.var_count())
        throw invalid_input("point length must equal var_count");
    std::vector<std::int64_t> pt(point.size());
    for (size_t i = 0; i < point.size(); ++i) pt[i] = ((point[i] % q) + q) % q;
    std::int64_t acc = 0;
    for (const auto& [vars, c] : p.terms()) {
        std::int64_t term = ((c % q) + q) % q;
        EdgeSubset rest = vars;
        while (rest && term) {
            int id = std::countr_zero(rest);
            rest &= rest - 1;
            term = term * pt[static_cast<size_t>(id)] % q;
        }
        acc = (acc + term) % q;
    }
    return acc;
}

SubsetPoly reciprocal_transform(const SubsetPoly& p) {
    const EdgeSubset full = all_edges_mask(p.var_count());
    SubsetPoly r(p.var_count());
    for (const auto& [vars, c] : p.terms()) r.add_term(full ^ vars, c);
    return r;
}

int degree(const SubsetPoly& p) {
    if (p.is_zero()) throw invalid_input("degree of zero polynomial");
    int d = 0;
    for (const auto& [vars, c] : p.terms()) d = std::max(d, subset_size(vars));
    return d;
}

bool is_homogeneous(const SubsetPoly& p) {
    int d = -1;
    for (const auto& [vars, c] : p.terms()) {
        int k = subset_size(vars);
        if (d < 0) d = k;
        if (k != d) return false;
    }
    return true;
}

namespace {

// Attempts to write p as a product of integer polynomials supported exactly on
// the variable sets a_vars and b_vars. The coefficient grid indexed by the two
// term projections must be a rank-one integer matrix; the primitive column
// gives one factor and the matching row ratio gives the other.
std::optional<std::pair<SubsetPoly, SubsetPoly>> try_split(const SubsetPoly& p, EdgeSubset a_vars,
                                                           EdgeSubset b_vars) {
    std::map<EdgeSubset, int> ia, ib;
    for (const auto& [s, c] : p.terms()) {
        ia.emplace(s & a_vars, 0);
        ib.emplace(s & b_vars, 0);
    }
    if (ia.size() * ib.size() != p.terms().size()) return std::nullopt;
    int k = 0;
    for (auto& [s, idx] : ia) idx = k++;
    k = 0;
    for (auto& [s, idx] : ib) idx = k++;

    const size_t rows = ia.size(), cols = ib.size();
    std::vector<std::int64_t> m(rows * cols, 0);
    for (const auto& [s, c] : p.terms())
        m[static_cast<size_t>(ia[s & a_vars]) * cols + static_cast<size_t>(ib[s & b_vars])] = c;
    for (std::int64_t v : m)
        if (v == 0) return std::nullopt;  // some product of projections is missing

    std::vector<std::int64_t> a(rows), b(cols);
    std::int64_t content = 0;
    for (size_t i = 0; i < rows; ++i) content = std::gcd(content, m[i * cols]);
    for (size_t i = 0; i < rows; ++i) a[i] = m[i * cols] / content;
    if (a[0] < 0)
        for (auto& v : a) v = -v;
    for (size_t j = 0; j < cols; ++j) {
        if (m[j] % a[0] != 0) return std::nullopt;
        b[j] = m[j] / a[0];
    }
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (checked_mul(a[i], b[j]) != m[i * cols + j]) return std::nullopt;

    SubsetPoly pa(p.var_count()), pb(p.var_count());
    for (const auto& [s, idx] : ia) pa.add_term(s, a[static_cast<size_t>(idx)]);
    for (const auto& [s, idx] : ib) pb.add_term(s, b[static_cast<size_t>(idx)]);
    return std::make_pair(std::move(pa), std::move(pb));
}

}  // namespace

std::optional<std::pair<SubsetPoly, SubsetPoly>> find_disjoint_factorization(const SubsetPoly& p) {
    if (p.is_zero() || p.is_constant()) throw invalid_input("factorization needs a nonconstant polynomial");
    const EdgeSubset support = p.support_vars();
    std::vector<int> vars;
    for (int id = 1; id <= p.var_count(); ++id)
        if (support & edge_bit(id)) vars.push_back(id);
    const int vn = static_cast<int>(vars.size());
    if (vn < 2) return std::nullopt;
    if (vn > 30) throw size_limit_error("too many support variables for factor search");

    // fix vars[0] on the A side so each bipartition is visited once
    const std::uint64_t limit = std::uint64_t{1} << (vn - 1);
    for (std::uint64_t pick = 0; pick + 1 < limit; ++pick) {
        EdgeSubset a_vars = edge_bit(vars[0]);
        for (int i = 1; i < vn; ++i)
            if (pick & (std::uint64_t{1} << (i - 1))) a_vars |= edge_bit(vars[static_cast<size_t>(i)]);
        EdgeSubset b_vars = support & ~a_vars;
        if (auto split = try_split(p, a_vars, b_vars)) return split;
    }
    return std::nullopt;
}

}  // namespace ghyp
