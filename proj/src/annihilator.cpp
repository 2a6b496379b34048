#include "ajtorus/annihilator.hpp"

#include <algorithm>
#include <set>

#include "ajtorus/errors.hpp"
#include "ajtorus/parse.hpp"

namespace ajt {

namespace {

RationalFunction mono(int m_exp, int t_exp) { return rf_monomial(1, t_exp, m_exp); }
RationalFunction delta(const TorusKnot& k, int j) { return DeltaSpec{k.p, k.q, j}.to_rational(); }
// [n + j] and [2n + j].
RationalFunction br(int j) { return bracket_symbolic(1, j); }
RationalFunction br2(int j) { return bracket_symbolic(2, j); }

const RationalFunction& t2_minus_tm2() {
    static const RationalFunction d = rf_t(2) - rf_t(-2);
    return d;
}

SkewOperator S(RationalFunction c) { return SkewOperator(std::move(c)); }
SkewOperator L(int k = 1) { return SkewOperator::L(k); }
SkewOperator coeff_l(RationalFunction c, int k) { return SkewOperator::monomial(std::move(c), k); }

RationalFunction checked_inverse(const RationalFunction& x, const std::string& name) {
    if (x.is_zero()) throw AuxVanishes("auxiliary function " + name + " vanishes identically");
    return x.inverse();
}

SkewOperator chain(std::initializer_list<SkewOperator> factors) {
    SkewOperator r(1L);
    for (const auto& f : factors) r = r * f;
    return r;
}

int sign(int x) { return x > 0 ? 1 : -1; }

// q, b > 2 and pq != ab, or pq = ab with p != a (then f = phi / psi).
void build_two_deltas(CandidateAnnihilator& c) {
    const TorusKnot &k1 = c.k1, &k2 = c.k2;
    const int P = k1.p * k1.q, A = k2.p * k2.q;
    const RationalFunction dp0 = delta(k1, 0), dp2 = delta(k1, 2), da0 = delta(k2, 0), da2 = delta(k2, 2);
    RationalFunction f;
    if (P != A) {
        f = mono(P - 3 * A, 6 * P - 10 * A) * dp2 / da2 - mono(-P - A, -2 * P - 2 * A) * dp0 / da0;
    } else {
        const RationalFunction tt2 = t2_minus_tm2() * t2_minus_tm2();
        RationalFunction phi = tt2 * (dp2 * da0 - dp0 * da2);
        RationalFunction psi = tt2 * mono(2 * A, 4 * A) * da2 * da0;
        f = phi / psi;
        c.aux["phi"] = phi;
        c.aux["psi"] = psi;
    }
    c.aux["f"] = f;
    const RationalFunction finv = checked_inverse(f, "f");
    const RationalFunction h = finv * (mono(P - 2 * A, 6 * P - 8 * A) * dp2 * da0 / da2 + mono(P, 6 * P) * dp2);
    const RationalFunction g = mono(-A, -2 * A) * da0 + shift_m(h, 2) - mono(-2 * A, -4 * A) * h;
    c.aux["g"] = g;
    c.op = chain({L() - S(1), S(checked_inverse(t2_minus_tm2() * g, "g")), L(2) - S(mono(-2 * A, -4 * A)), S(finv),
                  L(2) - S(mono(-2 * P, -4 * P)), S(mono(2 * P + A, 4 * P + 2 * A) / da0),
                  coeff_l(br(2), 2) - S(mono(-2 * P - 2 * A, -4 * P - 4 * A) * br(0))});
}

void build_equal(CandidateAnnihilator& c) {
    const int P = c.k1.p * c.k1.q;
    const RationalFunction dp0 = delta(c.k1, 0), dp2 = delta(c.k1, 2);
    const RationalFunction f = mono(-P, -2 * P) * dp0 + mono(P, 6 * P) * dp2;
    c.aux["f"] = f;
    c.op = chain({L() - S(1), S(checked_inverse(t2_minus_tm2() * f, "f")), L(2) - S(mono(-2 * P, -4 * P)),
                  S(mono(3 * P, 6 * P) / dp0), coeff_l(br(2), 2) - S(mono(-4 * P, -8 * P) * br(0))});
}

// The C7 closed forms of phi and psi with g = phi / psi.
void add_phi_psi_c7(CandidateAnnihilator& c) {
    const int a = c.k2.p, s = c.k1.p + c.k1.q, d = c.k1.q - c.k1.p;
    auto f_at = [&](int k) {  // (t^2 - t^-2) f(t, t^(2k) M)
        const int u = 2 * k + 1;  // [2n+3] and [2n+1] shifted by k
        return mono(-5 * a + 2, -10 * a * (1 + k) + 2 * u + 4) - mono(-5 * a - 2, -10 * a * (1 + k) - 2 * u - 4) -
               mono(-7 * a + 2, -14 * a * (1 + k) + 2 * u) + mono(-7 * a - 2, -14 * a * (1 + k) - 2 * u);
    };
    auto delta_num = [&](int k) {  // (t^2 - t^-2) delta(p, q, n + k) written out
        return mono(s, 2 * s * (k + 1) + 2) + mono(-s, -2 * s * (k + 1) + 2) - mono(d, 2 * d * (k + 1) - 2) -
               mono(-d, -2 * d * (k + 1) - 2);
    };
    RationalFunction psi = f_at(2) * f_at(0);
    RationalFunction phi = mono(-10 * a, -44 * a) * delta_num(2) * f_at(0) - mono(-10 * a, -20 * a) * delta_num(0) * f_at(2);
    c.aux["phi"] = phi;
    c.aux["psi"] = psi;
}

// q > 2, b = 2 (both pq != 2a and pq = 2a).
void build_mixed(CandidateAnnihilator& c) {
    const int P = c.k1.p * c.k1.q, a = c.k2.p;
    const RationalFunction dp0 = delta(c.k1, 0), dp2 = delta(c.k1, 2);
    const RationalFunction f = mono(-2 * P - a, -4 * P - 2 * a) * br2(3) - mono(-2 * P - 3 * a, -4 * P - 6 * a) * br2(1);
    c.aux["f"] = f;
    const RationalFunction finv = checked_inverse(f, "f");
    const RationalFunction finv4 = shift_m(finv, 2);
    const RationalFunction g = finv4 * mono(-P - 8 * a, -6 * P - 32 * a) * dp2 - mono(-3 * P - 4 * a, -6 * P - 8 * a) * finv * dp0;
    c.aux["g"] = g;
    const RationalFunction rest =
        mono(-P, -2 * P) * dp0 - finv4 * mono(-P - 7 * a, -6 * P - 30 * a) * dp2 * br2(1) +
        finv4 * mono(-P - 5 * a, -6 * P - 26 * a) * dp2 * br2(3) +
        finv4 * (mono(-P - a, -6 * P - 6 * a) * br2(7) - mono(-P - 3 * a, -6 * P - 18 * a) * br2(5)) * dp2 -
        mono(-2 * P, -4 * P) * finv * (mono(-P - a, -2 * P - 2 * a) * br2(3) - mono(-P - 3 * a, -2 * P - 6 * a) * br2(1)) * dp0;
    const RationalFunction ginv = checked_inverse(g, "g");
    const RationalFunction h = mono(-a, 0) * br2(1) + shift_m(ginv * rest, 1) + mono(-2 * a, -2 * a) * ginv * rest;
    c.aux["h"] = h;
    if (c.id == CaseId::C7) add_phi_psi_c7(c);
    c.op = chain({L() - S(1), S(checked_inverse(t2_minus_tm2() * h, "h")), L() + S(mono(-2 * a, -2 * a)), S(ginv),
                  L(2) - S(mono(-2 * P, -4 * P)), S(finv),
                  coeff_l(br(2), 2) - S(mono(-2 * P - 4 * a, -4 * P - 8 * a) * br(0))});
}

void build_two_q2(CandidateAnnihilator& c) {
    const int p = c.k1.p, a = c.k2.p;
    const RationalFunction div = mono(-p - a, -2 * a) - mono(p - 3 * a, 4 * p - 6 * a);
    c.aux["d"] = div;
    const RationalFunction dinv = checked_inverse(div, "d");
    const RationalFunction rest = (mono(p - 2 * a, 4 * p - 4 * a) * br2(1) - mono(p, 4 * p) * br2(3)) * dinv;
    const RationalFunction g = mono(-a, 0) * br2(1) + shift_m(rest, 1) + mono(-2 * a, -2 * a) * rest;
    c.aux["g"] = g;
    c.op = chain({L() - S(1), S(checked_inverse(t2_minus_tm2() * g, "g")), L() + S(mono(-2 * a, -2 * a)), S(dinv),
                  L() + S(mono(-2 * p, -2 * p)), S(mono(2 * p + a, 2 * p) / br2(1)),
                  coeff_l(br(1), 1) - S(mono(-2 * p - 2 * a, -2 * p - 2 * a) * br(0))});
}

void build_equal_q2(CandidateAnnihilator& c) {
    const int p = c.k1.p;
    const RationalFunction g = mono(-p, 0) * br2(1) - mono(p, 4 * p) * br2(3);
    c.aux["g"] = g;
    c.op = chain({L() - S(1), S(checked_inverse(t2_minus_tm2() * g, "g")), L() + S(mono(-2 * p, -2 * p)),
                  S(mono(3 * p, 2 * p) / br2(1)), coeff_l(br(1), 1) - S(mono(-4 * p, -4 * p) * br(0))});
}

std::vector<int> root_exponent_candidates(const MLPolynomial& p) {
    // A root L = +-M^k makes the top M-degrees of two bands cancel.
    std::set<int> ks;
    for (auto i = p.begin(); i != p.end(); ++i) {
        for (auto j = std::next(i); j != p.end(); ++j) {
            const int num = i->second.highest_degree() - j->second.highest_degree();
            const int den = j->first - i->first;
            if (num % den == 0) ks.insert(num / den);
        }
    }
    return {ks.begin(), ks.end()};
}

bool is_root(const MLPolynomial& p, int k, int s) {
    ULaurent acc;
    for (const auto& [e, c] : p) {
        ULaurent term = c.shifted(k * e);
        if (s < 0 && e % 2 != 0) term = -term;
        acc += term;
    }
    return acc.is_zero();
}

// Quotient by L - s*M^k, assuming exact divisibility.
MLPolynomial divide_linear(const MLPolynomial& p, int k, int s) {
    MLPolynomial q;
    const int lo = p.begin()->first, hi = p.rbegin()->first;
    ULaurent carry;
    for (int e = hi; e > lo; --e) {
        auto it = p.find(e);
        ULaurent c = it == p.end() ? ULaurent() : it->second;
        carry = c + carry.shifted(k).scaled(s);
        if (!carry.is_zero()) q.emplace(e - 1, carry);
    }
    return q;
}

std::string render_linear(int k, int s, int mult_exp) {
    MLPolynomial band = mult_exp == 2 ? MLPolynomial{{2, ULaurent(1)}, {0, ULaurent::monomial(-1, 2 * k)}}
                                      : MLPolynomial{{1, ULaurent(1)}, {0, ULaurent::monomial(-s, k)}};
    return ml_to_string(band);
}

}  // namespace

std::string to_string(CaseId id) {
    static const char* names[] = {"C3", "C4", "C5", "C6", "C7", "C8", "C9"};
    return names[static_cast<int>(id)];
}

CaseId case_from_string(const std::string& s) {
    for (int i = 0; i < 7; ++i) {
        if (to_string(static_cast<CaseId>(i)) == s) return static_cast<CaseId>(i);
    }
    throw ParseError("unknown case \"" + s + "\"");
}

int expected_l_degree(CaseId id) {
    static const int degrees[] = {7, 5, 7, 6, 6, 4, 3};
    return degrees[static_cast<int>(id)];
}

Classification classify(const TorusKnot& k1, const TorusKnot& k2) {
    if (sign(k1.p) != sign(k2.p)) throw OppositeSigns();
    if (k1.q == 2 && k2.q > 2) return classify(k2, k1);
    const int pq = k1.p * k1.q, ab = k2.p * k2.q;
    if (k1.q > 2 && k2.q > 2) {
        if (k1 == k2) return {CaseId::C4, k1, k2};
        return {pq == ab ? CaseId::C5 : CaseId::C3, k1, k2};
    }
    if (k1.q > 2) return {pq == 2 * k2.p ? CaseId::C7 : CaseId::C6, k1, k2};
    return {k1.p == k2.p ? CaseId::C9 : CaseId::C8, k1, k2};
}

CandidateAnnihilator build_candidate(CaseId id, const TorusKnot& k1, const TorusKnot& k2) {
    Classification cl = classify(k1, k2);
    if (cl.id != id) {
        throw CaseMismatch(KnotExpr::sum(k1, k2).to_string() + " belongs to case " + to_string(cl.id) + ", not " +
                           to_string(id));
    }
    CandidateAnnihilator c;
    c.id = id;
    c.k1 = cl.k1;
    c.k2 = cl.k2;
    c.expected_l_degree = expected_l_degree(id);
    switch (id) {
        case CaseId::C3:
        case CaseId::C5:
            build_two_deltas(c);
            break;
        case CaseId::C4:
            build_equal(c);
            break;
        case CaseId::C6:
        case CaseId::C7:
            build_mixed(c);
            break;
        case CaseId::C8:
            build_two_q2(c);
            break;
        case CaseId::C9:
            build_equal_q2(c);
            break;
    }
    return c;
}

CandidateAnnihilator build_candidate(const TorusKnot& k1, const TorusKnot& k2) {
    return build_candidate(classify(k1, k2).id, k1, k2);
}

AnnihilationCheck check_annihilation(const SkewOperator& op, const Sequence& s, long n_lo, long n_hi,
                                     bool skip_collapse) {
    AnnihilationCheck r;
    for (long n = n_lo; n <= n_hi; ++n) {
        try {
            URational v = apply(op, s, n);
            if (!v.is_zero()) {
                r.ok = false;
                r.failing_n = n;
                r.residual = std::move(v);
                return r;
            }
        } catch (const DenominatorCollapse&) {
            if (!skip_collapse) throw;
            r.skipped.push_back(n);
        }
    }
    return r;
}

AnnihilationCheck check_annihilation(const CandidateAnnihilator& c, long n_lo, long n_hi, bool skip_collapse) {
    JonesSequence seq(c.knot());
    return check_annihilation(c.op, [&seq](long n) { return seq(n); }, n_lo, n_hi, skip_collapse);
}

LinearSplit split_linear_factors(const MLPolynomial& p) {
    LinearSplit out;
    MLPolynomial cur = p;
    bool found = true;
    while (found && cur.size() > 1) {
        found = false;
        for (int k : root_exponent_candidates(cur)) {
            for (int s : {1, -1}) {
                if (!is_root(cur, k, s)) continue;
                cur = divide_linear(cur, k, s);
                auto it = std::find_if(out.factors.begin(), out.factors.end(),
                                       [&](const LinearFactor& f) { return f.k == k && f.sign == s; });
                if (it == out.factors.end()) {
                    out.factors.push_back({k, s, 1});
                } else {
                    ++it->multiplicity;
                }
                found = true;
                break;
            }
            if (found) break;
        }
    }
    out.cofactor = cur;
    return out;
}

std::vector<std::string> render_linear_factors(const std::vector<LinearFactor>& fs) {
    std::vector<std::string> out;
    std::vector<bool> used(fs.size(), false);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        int band = 1;
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            if (!used[j] && fs[j].k == fs[i].k && fs[j].sign == -fs[i].sign &&
                fs[j].multiplicity == fs[i].multiplicity) {
                used[j] = true;
                band = 2;
                break;
            }
        }
        std::string s = render_linear(fs[i].k, fs[i].sign, band);
        if (fs[i].multiplicity > 1) s = "(" + s + ")^" + std::to_string(fs[i].multiplicity);
        out.push_back(s);
    }
    return out;
}

std::string render_alpha_at_minus1(const std::map<int, URational>& alpha) {
    std::map<int, std::string> parts;
    for (const auto& [e, c] : alpha) parts[e] = to_string(c, "M");
    return render_l_polynomial(parts);
}

AJComparison evaluate_and_compare(const CandidateAnnihilator& c) {
    AJComparison r;
    const auto span = c.op.l_degree();
    r.alpha_at_minus1 = eval_operator_at_t_minus1(c.op);
    if (r.alpha_at_minus1.empty() || r.alpha_at_minus1.begin()->first != span.first ||
        r.alpha_at_minus1.rbegin()->first != span.second) {
        throw DegreeDrop("L-degree drops at t = -1 for " + c.knot().to_string());
    }
    // Clear denominators, then the common factor in M.
    ULaurent common(1);
    for (const auto& [e, x] : r.alpha_at_minus1) {
        ULaurent g = gcd(common, x.den());
        ULaurent q;
        g.divides_into(x.den(), q);
        common = common * q;
    }
    MLPolynomial cleared;
    ULaurent content;
    for (const auto& [e, x] : r.alpha_at_minus1) {
        ULaurent q;
        x.den().divides_into(common, q);
        ULaurent v = x.num() * q;
        content = content.is_zero() ? v.primitive_part() : gcd(content, v);
        cleared.emplace(e, std::move(v));
    }
    for (auto& [e, v] : cleared) {
        ULaurent q;
        content.divides_into(v, q);
        v = std::move(q);
    }
    r.alpha_cleared = ml_unit_normalize(cleared);
    r.split = split_linear_factors(r.alpha_cleared);
    MLPolynomial sqf{{0, ULaurent(1)}};
    for (const auto& f : r.split.factors) {
        if (f.multiplicity > 1) r.repeated.push_back(f);
        sqf = ml_mul(sqf, MLPolynomial{{1, ULaurent(1)}, {0, ULaurent::monomial(-f.sign, f.k)}});
    }
    r.squarefree_part = sqf;
    r.a_polynomial = apoly_sum_lemma(c.k1, c.k2);
    auto unit = ml_unit_ratio(sqf, r.a_polynomial.expansion());
    r.match = r.split.complete() && unit.has_value();
    if (unit) r.unit = ULaurent::monomial(unit->first, unit->second).to_string("M");
    return r;
}

}  // namespace ajt
