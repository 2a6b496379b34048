#include "ajtorus/skew_operator.hpp"

#include "ajtorus/errors.hpp"
#include "ajtorus/parse.hpp"

namespace ajt {

namespace {

void accumulate(SkewOperator::Coeffs& acc, int e, const RationalFunction& c) {
    auto it = acc.find(e);
    if (it == acc.end()) {
        if (!c.is_zero()) acc.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

BLaurent lcm(const BLaurent& a, const BLaurent& b) {
    BLaurent g = gcd(a, b);
    return detail::exact_quotient(a, g) * b;
}

}  // namespace

SkewOperator::SkewOperator(RationalFunction c) {
    if (!c.is_zero()) c_.emplace(0, std::move(c));
}

SkewOperator SkewOperator::monomial(RationalFunction c, int l_exp) {
    SkewOperator r;
    if (!c.is_zero()) r.c_.emplace(l_exp, std::move(c));
    return r;
}

SkewOperator SkewOperator::from_coeffs(Coeffs c) {
    SkewOperator r;
    for (auto& [e, x] : c) {
        if (!x.is_zero()) r.c_.emplace(e, std::move(x));
    }
    return r;
}

RationalFunction SkewOperator::coeff(int l_exp) const {
    auto it = c_.find(l_exp);
    return it == c_.end() ? RationalFunction() : it->second;
}

std::pair<int, int> SkewOperator::l_degree() const {
    if (c_.empty()) throw ZeroOperator();
    return {c_.begin()->first, c_.rbegin()->first};
}

SkewOperator SkewOperator::operator-() const {
    SkewOperator r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
}

SkewOperator operator+(const SkewOperator& a, const SkewOperator& b) {
    SkewOperator r = a;
    for (const auto& [e, c] : b.c_) accumulate(r.c_, e, c);
    return r;
}

SkewOperator operator*(const SkewOperator& a, const SkewOperator& b) {
    SkewOperator r;
    for (const auto& [j, f] : a.c_) {
        for (const auto& [k, g] : b.c_) accumulate(r.c_, j + k, f * shift_m(g, j));
    }
    return r;
}

SkewOperator SkewOperator::left_scaled(const RationalFunction& c) const {
    SkewOperator r;
    if (c.is_zero()) return r;
    for (const auto& [e, x] : c_) r.c_.emplace(e, c * x);
    return r;
}

std::string SkewOperator::to_string() const {
    std::map<int, std::string> parts;
    for (const auto& [e, c] : c_) parts[e] = ajt::to_string(c);
    return render_l_polynomial(parts);
}

SkewOperator SkewOperator::parse(std::string_view text) { return from_coeffs(parse_l_polynomial(text)); }

URational apply(const SkewOperator& p, const Sequence& s, long n) {
    URational acc;
    for (const auto& [e, c] : p.coeffs()) {
        ULaurent v = s(n + e);
        if (v.is_zero()) continue;
        acc += eval_m(c, n) * URational(std::move(v));
    }
    return acc;
}

SkewOperator normalize(const SkewOperator& p) {
    auto [lo, hi] = p.l_degree();
    (void)hi;
    // L^(-lo) * P moves the span to start at 0 and twists the coefficients.
    std::map<int, BLaurent> nums;
    BLaurent common(1);
    std::map<int, RationalFunction> shifted;
    for (const auto& [e, c] : p.coeffs()) {
        RationalFunction s = shift_m(c, -lo);
        common = lcm(common, s.den());
        shifted.emplace(e - lo, std::move(s));
    }
    for (const auto& [e, c] : shifted) {
        nums.emplace(e, c.num() * detail::exact_quotient(common, c.den()));
    }
    BLaurent g;
    for (const auto& [e, x] : nums) {
        g = g.is_zero() ? x.primitive_part() : gcd(g, x);
        if (g.is_constant()) break;
    }
    // g is primitive with no monomial factor; also strip the rational content
    // and the common monomial of the quotients.
    mpq_class content = 0;
    int min_t = 0, min_m = 0;
    bool first = true;
    for (auto& [e, x] : nums) {
        if (!g.is_constant()) x = detail::exact_quotient(x, g);
        mpq_class c = x.content();
        if (first) {
            content = abs(c);
            min_t = x.min_t();
            min_m = x.min_m();
            first = false;
        } else {
            mpz_class num, den;
            mpz_gcd(num.get_mpz_t(), content.get_num_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), content.get_den_mpz_t(), c.get_den_mpz_t());
            content = mpq_class(num, den);
            content.canonicalize();
            min_t = std::min(min_t, x.min_t());
            min_m = std::min(min_m, x.min_m());
        }
    }
    const BLaurent& lead = nums.rbegin()->second;
    // Sign: the lexicographically smallest monomial of the leading coefficient
    // is the first stored term.
    mpq_class scale = 1 / content;
    if (sgn(lead.terms().front().c) < 0) scale = -scale;
    SkewOperator::Coeffs out;
    for (auto& [e, x] : nums) out.emplace(e, RationalFunction(x.mul_monomial(-min_t, -min_m).scaled(scale)));
    return SkewOperator::from_coeffs(std::move(out));
}

std::map<int, URational> eval_operator_at_t_minus1(const SkewOperator& p) {
    std::map<int, URational> out;
    for (const auto& [e, c] : p.coeffs()) {
        Limit lim = limit_at_t_minus1(c);
        if (!lim.finite()) throw PoleAtMinusOne(e);
        if (!lim.value.is_zero()) out.emplace(e, std::move(lim.value));
    }
    return out;
}

}  // namespace ajt
