#pragma once

// Exact sparse polynomials in alpha_1..alpha_n and the hook identities: the
// product of 1/beta over Phi_+^w against the sum over seeds of the products
// of 1/wt(mu_j), and its specialization alpha_i = 1.

#include "okseed/cluster.hpp"
#include "okseed/rational.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace okseed {

class SparsePoly {
public:
    using Terms = std::map<IntVector, Rational>;

    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {}

    static SparsePoly constant(int nvars, const Rational& c) {
        SparsePoly p(nvars);
        if (c != 0) p.terms_[IntVector(nvars, 0)] = c;
        return p;
    }

    static SparsePoly variable(int nvars, int i) {
        SparsePoly p(nvars);
        IntVector e(nvars, 0);
        e.at(i) = 1;
        p.terms_[e] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const IntVector& exps, const Rational& c) {
        if (static_cast<int>(exps.size()) != nvars_) throw InvalidArgument("monomial has wrong arity");
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(exps, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        a.check(b);
        SparsePoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                IntVector e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    bool operator==(const SparsePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Rational evaluate(const RatVector& x) const {
        Rational s = 0;
        for (const auto& [e, c] : terms_) {
            Rational m = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int p = 0; p < e[i]; ++p) m *= x.at(i);
            s += m;
        }
        return s;
    }

    // Canonical text form; terms in increasing exponent order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            os << (first ? "" : " + ") << to_pq(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) os << "*a" << i + 1 << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
            first = false;
        }
        return os.str();
    }

private:
    void check(const SparsePoly& o) const {
        if (nvars_ != o.nvars_) throw InvalidArgument("polynomials in different rings");
    }

    int nvars_ = 0;
    Terms terms_;
};

inline SparsePoly power(const SparsePoly& p, int e) {
    SparsePoly r = SparsePoly::constant(p.nvars(), 1);
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

// sum_i c_i alpha_i with c_i >= 0, not all zero.
struct LinearForm {
    IntVector coeffs;

    bool operator==(const LinearForm&) const = default;
    auto operator<=>(const LinearForm&) const = default;

    SparsePoly to_poly() const {
        SparsePoly p(static_cast<int>(coeffs.size()));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            IntVector e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(e, coeffs[i]);
        }
        return p;
    }

    int value_at_ones() const { return height(coeffs); }
};

inline std::string to_string(const LinearForm& f) {
    std::string s;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (f.coeffs[i] != 1) s += std::to_string(f.coeffs[i]);
        s += "a" + std::to_string(i + 1);
    }
    return s;
}

inline LinearForm make_linear_form(const IntVector& coeffs) {
    bool nonzero = false;
    for (int c : coeffs) {
        if (c < 0) throw InvalidArgument("linear form with a negative coefficient");
        nonzero |= c != 0;
    }
    if (!nonzero) throw InvalidArgument("zero linear form");
    return {coeffs};
}

// Weight of a valuation vector, wt(c) = sum_k c_k beta_k.
inline LinearForm weight_linear_form(const SeedContext& ctx, const IntVector& c) {
    for (int x : c)
        if (x < 0) throw InvalidArgument("weight_linear_form: negative entry");
    return make_linear_form(ctx.wt(c));
}

inline LinearForm weight_linear_form(const CartanData& cd, const DominantWord& mu) {
    return make_linear_form(mu.word().weight(cd.rank));
}

// Sum of terms prod_f 1/f, one multiset of forms per term.
struct ReciprocalProductSum {
    int nvars = 0;
    std::vector<std::vector<LinearForm>> terms;
};

struct SumCertificate {
    std::vector<std::pair<LinearForm, int>> denominator;  // distinct forms, max multiplicity
    std::size_t lhs_terms = 0, rhs_terms = 0;             // monomials in the expanded numerators
    std::size_t lhs_hash = 0, rhs_hash = 0;
};

struct SumComparison {
    bool equal = false;
    SumCertificate certificate;
};

namespace detail {

inline std::map<LinearForm, int> multiplicities(const std::vector<LinearForm>& term) {
    std::map<LinearForm, int> m;
    for (const auto& f : term) ++m[f];
    return m;
}

inline SparsePoly numerator_over(const ReciprocalProductSum& s, const std::map<LinearForm, int>& denom, int nvars) {
    SparsePoly total(nvars);
    for (const auto& term : s.terms) {
        auto mult = multiplicities(term);
        SparsePoly num = SparsePoly::constant(nvars, 1);
        for (const auto& [f, m] : denom) {
            auto it = mult.find(f);
            num *= power(f.to_poly(), m - (it == mult.end() ? 0 : it->second));
        }
        total += num;
    }
    return total;
}

}  // namespace detail

// Decides lhs == rhs in Q(alpha) by clearing the common denominator and
// comparing expanded numerators.
inline SumComparison sum_equals(const ReciprocalProductSum& lhs, const ReciprocalProductSum& rhs) {
    if (lhs.nvars != rhs.nvars) throw InvalidArgument("sum_equals: sums in different rings");
    std::map<LinearForm, int> denom;
    for (const auto* side : {&lhs, &rhs})
        for (const auto& term : side->terms) {
            for (const auto& f : term)
                if (static_cast<int>(f.coeffs.size()) != lhs.nvars) throw InvalidArgument("form has wrong arity");
            for (const auto& [f, m] : detail::multiplicities(term)) denom[f] = std::max(denom[f], m);
        }
    SparsePoly nl = detail::numerator_over(lhs, denom, lhs.nvars);
    SparsePoly nr = detail::numerator_over(rhs, denom, rhs.nvars);
    SumComparison out;
    out.equal = nl == nr;
    out.certificate.denominator.assign(denom.begin(), denom.end());
    out.certificate.lhs_terms = nl.terms().size();
    out.certificate.rhs_terms = nr.terms().size();
    out.certificate.lhs_hash = std::hash<std::string>{}(nl.to_string());
    out.certificate.rhs_hash = std::hash<std::string>{}(nr.to_string());
    return out;
}

class IncompleteEnumeration : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

inline void require_complete(const Enumeration& e) {
    if (!e.finite)
        throw IncompleteEnumeration("seed enumeration hit its cap; the hook identities need every seed");
}

inline ReciprocalProductSum product_side(const SeedContext& ctx) {
    ReciprocalProductSum s{ctx.cartan.rank, {}};
    std::vector<LinearForm> term;
    for (const auto& beta : ctx.betas) term.push_back(make_linear_form(beta));
    s.terms.push_back(std::move(term));
    return s;
}

inline ReciprocalProductSum seed_side(const SeedContext& ctx, const std::vector<Seed>& seeds) {
    ReciprocalProductSum s{ctx.cartan.rank, {}};
    for (const auto& seed : seeds) {
        std::vector<LinearForm> term;
        for (const auto& p : seed.psi) term.push_back(weight_linear_form(ctx, p));
        s.terms.push_back(std::move(term));
    }
    return s;
}

struct ProphookReport {
    bool verdict = false;
    ReciprocalProductSum product;
    ReciprocalProductSum seed_sum;
    SumCertificate certificate;
};

inline ProphookReport verify_prophook(const SeedContext& ctx, const Enumeration& e) {
    require_complete(e);
    ProphookReport r;
    r.product = product_side(ctx);
    r.seed_sum = seed_side(ctx, e.seeds);
    auto cmp = sum_equals(r.product, r.seed_sum);
    r.verdict = cmp.equal;
    r.certificate = cmp.certificate;
    return r;
}

inline Rational hook_value(const SeedContext& ctx) {
    Rational v = factorial(ctx.size());
    for (int h : ctx.lambda) v /= h;
    return v;
}

// sum over the given seeds of N! / prod_j |mu_j|, complete or not.
inline Rational seed_hook_sum(const SeedContext& ctx, const std::vector<Seed>& seeds) {
    Rational total = 0, nf = factorial(ctx.size());
    for (const auto& seed : seeds) {
        Rational t = nf;
        for (const auto& p : seed.psi) t /= ctx.degree(p);
        total += t;
    }
    return total;
}

struct CorhookReport {
    bool verdict = false;
    Rational seed_sum;  // sum_S N!/prod_j |mu_j^S|
    Rational hook;      // N!/prod_beta ht(beta)
};

inline CorhookReport verify_corhook(const SeedContext& ctx, const Enumeration& e) {
    require_complete(e);
    CorhookReport r;
    r.seed_sum = seed_hook_sum(ctx, e.seeds);
    r.hook = hook_value(ctx);
    r.verdict = r.seed_sum == r.hook;
    return r;
}

struct PartialHookSum {
    Rational seed_sum;
    std::size_t seeds = 0;
    bool finite = false;
};

// For enumerations that hit the cap: the sum so far, with no verdict.
inline PartialHookSum partial_hook_sum(const SeedContext& ctx, const Enumeration& e) {
    return {seed_hook_sum(ctx, e.seeds), e.seeds.size(), e.finite};
}

struct PetersonProctorReport {
    Rational hook;
    BigInt reduced_words;
    bool match = false;
};

inline PetersonProctorReport peterson_proctor_report(const SeedContext& ctx) {
    PetersonProctorReport r;
    r.hook = hook_value(ctx);
    r.reduced_words = count_reduced_expressions(ctx.cartan, ctx.w);
    r.match = r.hook == Rational(r.reduced_words);
    return r;
}

}  // namespace okseed
