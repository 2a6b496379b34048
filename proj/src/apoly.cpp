#include "ajtorus/apoly.hpp"

#include <algorithm>
#include <cstdlib>

#include "ajtorus/errors.hpp"
#include "ajtorus/parse.hpp"

namespace ajt {

namespace {

void accumulate(MLPolynomial& acc, int e, const ULaurent& c) {
    if (c.is_zero()) return;
    auto it = acc.find(e);
    if (it == acc.end()) {
        acc.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

std::vector<BinomialFactor> pm(int r) { return {{r, 1}, {r, -1}}; }

APoly from_parts(std::initializer_list<std::vector<BinomialFactor>> parts) {
    APoly a;
    for (const auto& p : parts) a.factors.insert(a.factors.end(), p.begin(), p.end());
    return a;
}

}  // namespace

MLPolynomial ml_mul(const MLPolynomial& a, const MLPolynomial& b) {
    MLPolynomial r;
    for (const auto& [i, x] : a) {
        for (const auto& [j, y] : b) accumulate(r, i + j, x * y);
    }
    return r;
}

MLPolynomial ml_unit_normalize(const MLPolynomial& a) {
    if (a.empty()) return a;
    mpz_class num = 0, den = 1;
    for (const auto& [e, c] : a) {
        mpq_class k = abs(c.content());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), k.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), k.get_den_mpz_t());
    }
    mpq_class scale(den, num);
    scale.canonicalize();
    const ULaurent& top = a.rbegin()->second;
    if (top.coeff(top.highest_degree()) < 0) scale = -scale;
    const int shift = -a.begin()->second.lowest_degree();
    MLPolynomial r;
    for (const auto& [e, c] : a) r.emplace(e, c.scaled(scale).shifted(shift));
    return r;
}

bool ml_equal_up_to_unit(const MLPolynomial& a, const MLPolynomial& b) {
    return ml_unit_normalize(a) == ml_unit_normalize(b);
}

std::optional<std::pair<mpq_class, int>> ml_unit_ratio(const MLPolynomial& a, const MLPolynomial& b) {
    if (a.empty() || b.empty() || a.size() != b.size()) return std::nullopt;
    const ULaurent& x = a.begin()->second;
    const ULaurent& y = b.begin()->second;
    const int k = x.lowest_degree() - y.lowest_degree();
    mpq_class c = x.coeff(x.lowest_degree()) / y.coeff(y.lowest_degree());
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first || ia->second != ib->second.scaled(c).shifted(k)) return std::nullopt;
    }
    return std::make_pair(c, k);
}

std::string ml_to_string(const MLPolynomial& a) {
    std::map<int, std::string> parts;
    for (const auto& [e, c] : a) parts[e] = c.to_string("M");
    return render_l_polynomial(parts);
}

MLPolynomial BinomialFactor::expansion() const {
    if (delta != 1 && delta != -1) throw NonBinomialInput("binomial factor with delta = " + std::to_string(delta));
    return {{0, ULaurent(-delta)}, {1, ULaurent::monomial(1, r)}};
}

std::vector<BinomialFactor> squarefree_binomials(const std::vector<BinomialFactor>& factors) {
    std::vector<BinomialFactor> out;
    for (const auto& f : factors) {
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    return out;
}

MLPolynomial APoly::expansion() const {
    MLPolynomial r{{0, ULaurent(1)}};
    for (const auto& f : factors) r = ml_mul(r, f.expansion());
    return r;
}

std::string APoly::factored() const { return render_binomials(factors); }

std::string render_binomials(const std::vector<BinomialFactor>& factors) {
    if (factors.empty()) return "1";
    std::string out;
    std::vector<bool> used(factors.size(), false);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        MLPolynomial band = factors[i].expansion();
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            if (!used[j] && factors[j].r == factors[i].r && factors[j].delta == -factors[i].delta) {
                used[j] = true;
                band = ml_mul(band, factors[j].expansion());
                break;
            }
        }
        if (!out.empty()) out += "*";
        out += "(" + ml_to_string(band) + ")";
    }
    return out;
}

APoly apoly_torus(const TorusKnot& k) {
    if (k.q == 2) return APoly{{{0, 1}, {2 * k.p, -1}}};
    return from_parts({{{0, 1}}, pm(k.p * k.q)});
}

APoly apoly_sum_general(const APoly& a1, const APoly& a2) {
    std::vector<BinomialFactor> all;
    for (const auto& f : a1.factors) {
        for (const auto& g : a2.factors) {
            if (std::abs(f.delta) != 1 || std::abs(g.delta) != 1) throw NonBinomialInput("factor is not L*M^r -+ 1");
            all.push_back({f.r + g.r, f.delta * g.delta});
        }
    }
    return APoly{squarefree_binomials(all)};
}

std::string to_string(SumCase c) {
    static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
    return names[static_cast<int>(c)];
}

SumCase sum_case(const TorusKnot& k1, const TorusKnot& k2) {
    if (k1.q == 2 && k2.q > 2) return sum_case(k2, k1);
    const long pq = static_cast<long>(k1.p) * k1.q, ab = static_cast<long>(k2.p) * k2.q;
    if (k1.q > 2 && k2.q > 2) return pq == ab ? SumCase::II : pq == -ab ? SumCase::III : SumCase::I;
    if (k1.q > 2) return pq == 2L * k2.p ? SumCase::V : pq == -2L * k2.p ? SumCase::VI : SumCase::IV;
    return k1.p == k2.p ? SumCase::VIII : k1.p == -k2.p ? SumCase::IX : SumCase::VII;
}

APoly apoly_sum_lemma(const TorusKnot& k1, const TorusKnot& k2) {
    if (k1.q == 2 && k2.q > 2) return apoly_sum_lemma(k2, k1);
    const int p = k1.p, pq = k1.p * k1.q, a = k2.p, ab = k2.p * k2.q;
    switch (sum_case(k1, k2)) {
        case SumCase::I:
            return from_parts({{{0, 1}}, pm(pq), pm(ab), pm(pq + ab)});
        case SumCase::II:
            return from_parts({{{0, 1}}, pm(ab), pm(2 * ab)});
        case SumCase::III:
            return from_parts({pm(0), pm(-ab), pm(ab)});
        case SumCase::IV:
            return from_parts({{{0, 1}}, pm(pq), {{2 * a, -1}}, pm(pq + 2 * a)});
        case SumCase::V:
            return from_parts({{{0, 1}}, pm(2 * a), pm(4 * a)});
        case SumCase::VI:
            return from_parts({pm(0), pm(-2 * a), {{2 * a, -1}}});
        case SumCase::VII:
            return APoly{{{0, 1}, {2 * p, -1}, {2 * a, -1}, {2 * p + 2 * a, 1}}};
        case SumCase::VIII:
            return APoly{{{0, 1}, {2 * p, -1}, {4 * p, 1}}};
        case SumCase::IX:
            return APoly{{{0, 1}, {2 * p, -1}, {-2 * p, -1}}};
    }
    return {};
}

APoly apoly(const KnotExpr& k) {
    switch (k.kind) {
        case KnotExpr::Kind::Unknot:
            return APoly{{{0, 1}}};
        case KnotExpr::Kind::Torus:
            return apoly_torus(k.k1);
        case KnotExpr::Kind::Sum:
            return apoly_sum_lemma(k.k1, k.k2);
    }
    return {};
}

}  // namespace ajt
