#include "ajtorus/ratfunc.hpp"

namespace ajt {

RationalFunction shift_m(const RationalFunction& x, int j) {
    if (j == 0 || x.is_zero()) return x;
    // M -> t^(2j) M maps the normalized denominator to t^a * (normalized polynomial),
    // and preserves coprimality, so only unit normalization is needed.
    return RationalFunction::raw(x.num().shift_m(j), x.den().shift_m(j));
}

std::pair<ULaurent, ULaurent> eval_m_unreduced(const RationalFunction& x, long n) {
    ULaurent d = x.den().eval_m(n);
    if (d.is_zero()) throw DenominatorCollapse(n);
    return {x.num().eval_m(n), std::move(d)};
}

URational eval_m(const RationalFunction& x, long n) {
    auto [num, den] = eval_m_unreduced(x, n);
    return URational(std::move(num), std::move(den));
}

namespace {

const ULaurent& t_plus_one() {
    static const ULaurent p = ULaurent::from_dense(0, {mpz_class(1), mpz_class(1)});
    return p;
}

BLaurent divide_t_plus_one(const BLaurent& p) {
    std::vector<BLaurent::Term> terms;
    for (const auto& [m, u] : p.by_m()) {
        ULaurent q;
        if (!t_plus_one().divides_into(u.scaled(mpq_class(u.denominator())), q)) {
            throw InexactDivision("t + 1 does not divide");
        }
        int e = q.lo();
        for (const auto& c : q.numerators()) {
            if (sgn(c) != 0) terms.push_back({mono_key(e, m), c});
            ++e;
        }
    }
    return BLaurent::from_terms(std::move(terms), p.denominator());
}

}  // namespace

int t_plus_one_order(const BLaurent& p, BLaurent* cofactor) {
    if (p.is_zero()) throw ZeroPolynomial();
    BLaurent cur = p;
    int order = 0;
    while (cur.at_t_minus1().is_zero()) {
        cur = divide_t_plus_one(cur);
        ++order;
    }
    if (cofactor) *cofactor = std::move(cur);
    return order;
}

Limit limit_at_t_minus1(const RationalFunction& x) {
    Limit out;
    if (x.is_zero()) return out;
    BLaurent n = x.num(), d = x.den();
    ULaurent dv = d.at_t_minus1();
    while (dv.is_zero()) {
        if (!n.at_t_minus1().is_zero()) {
            out.kind = Limit::Kind::InfiniteLimit;
            out.pole_order = t_plus_one_order(d);
            return out;
        }
        n = divide_t_plus_one(n);
        d = divide_t_plus_one(d);
        dv = d.at_t_minus1();
    }
    out.value = URational(n.at_t_minus1(), dv);
    return out;
}

RationalFunction rf_t(int e) { return RationalFunction(BLaurent::t_pow(e)); }

RationalFunction rf_m(int e) { return RationalFunction(BLaurent::m_pow(e)); }

RationalFunction rf_monomial(const mpq_class& c, int t_exp, int m_exp) {
    return RationalFunction(BLaurent::monomial(c, t_exp, m_exp));
}

std::string to_string(const RationalFunction& x) {
    if (x.is_polynomial()) return x.num().to_string();
    return "(" + x.num().to_string() + ")/(" + x.den().to_string() + ")";
}

std::string to_string(const URational& x, const std::string& var) {
    if (x.is_polynomial()) return x.num().to_string(var);
    return "(" + x.num().to_string(var) + ")/(" + x.den().to_string(var) + ")";
}

}  // namespace ajt
