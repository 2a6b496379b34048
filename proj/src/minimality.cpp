#include "ajtorus/minimality.hpp"

#include <functional>

#include "ajtorus/errors.hpp"

namespace ajt {

namespace {

// M^e as a univariate Laurent polynomial.
ULaurent m(int e) { return ULaurent::monomial(1, e); }

RationalFunction mono(int m_exp, int t_exp) { return rf_monomial(1, t_exp, m_exp); }
RationalFunction br(int j) { return bracket_symbolic(1, j); }
RationalFunction br2(int j) { return bracket_symbolic(2, j); }
RationalFunction tt() { return rf_t(2) - rf_t(-2); }
RationalFunction in_m(const ULaurent& u) { return RationalFunction(BLaurent::from_univariate(u, false)); }

std::string short_render(const RationalFunction& x) {
    std::string s = to_string(x);
    if (s.size() <= 160) return s;
    return "rational function with " + std::to_string(x.num().term_count()) + "-term numerator and " +
           std::to_string(x.den().term_count()) + "-term denominator";
}

std::string linear_form(long c1, long c0) {
    std::string s = std::to_string(c1) + "*n";
    if (c0 > 0) s += " + " + std::to_string(c0);
    if (c0 < 0) s += " - " + std::to_string(-c0);
    return s;
}

class Builder {
public:
    explicit Builder(MinimalityCertificate& c) : c_(c) {}

    void matrix(const std::string& name, LaurentMatrix mat) { c_.matrices.emplace_back(name, std::move(mat)); }

    // Determinant of a (sub)system, optionally against a stated closed form.
    void det(const std::string& name, const LaurentMatrix& mat, std::optional<ULaurent> stated = std::nullopt) {
        ULaurent d = determinant(mat);
        c_.determinants.push_back(d);
        CertificateItem it;
        it.name = name;
        it.value = d.to_string("M");
        it.nonzero = !d.is_zero();
        if (stated) {
            it.stated = stated->to_string("M");
            it.matches_stated = d == *stated || d == -*stated;
        }
        c_.items.push_back(std::move(it));
    }

    void nonzero(const std::string& name, const ULaurent& v) {
        c_.items.push_back({name, v.to_string("M"), !v.is_zero(), std::nullopt, std::nullopt});
    }

    void nonzero(const std::string& name, const RationalFunction& v, std::optional<RationalFunction> stated = std::nullopt) {
        CertificateItem it{name, short_render(v), !v.is_zero(), std::nullopt, std::nullopt};
        if (stated) {
            it.stated = short_render(*stated);
            it.matches_stated = v == *stated;
        }
        c_.items.push_back(std::move(it));
    }

    // Extremal t-degree of poly(t, t^(2n)) as a linear form in n: the lowest
    // one (lexicographically smallest (M, t) term) or the highest.
    void extremal_degree(const std::string& name, const RationalFunction& x, bool lowest, long c1, long c0) {
        CertificateItem it;
        it.name = name;
        it.stated = linear_form(c1, c0);
        if (!x.is_polynomial() || x.is_zero()) {
            it.value = x.is_zero() ? "0" : "not a Laurent polynomial";
            it.matches_stated = false;
        } else {
            const auto& terms = x.num().terms();
            const auto& tm = lowest ? terms.front() : terms.back();
            it.value = linear_form(2L * tm.m(), tm.t());
            it.nonzero = true;
            it.matches_stated = 2L * tm.m() == c1 && tm.t() == c0;
        }
        c_.items.push_back(std::move(it));
    }

private:
    MinimalityCertificate& c_;
};

void cert_c3(Builder& b, int P, int A) {
    const int S = P + A;
    const ULaurent nine = m(-4 * S) + m(-4 * P - 2 * A) + m(-4 * P) + m(-2 * P - 4 * A) + m(-4 * A) + m(-2 * S) +
                          m(-2 * P) + m(-2 * A) + m(0);
    const ULaurent four = m(-2 * S) + m(-2 * P) + m(-2 * A) + m(0);
    // Columns D6, D5, ..., D0; rows E6, ..., E0.
    LaurentMatrix sys = {
        {0, m(-4 * S), 0, m(-2 * S), 0, 1, 0},
        {m(-6 * S), 0, m(-4 * S), 0, m(-2 * S), 0, 1},
        {0, m(-2 * S) + m(-2 * P), 0, 1, 0, 0, 0},
        {m(-4 * S) + m(-4 * P - 2 * A) + m(-4 * P), 0, m(-2 * S) + m(-2 * P), 0, 1, 0, 0},
        {0, m(-2 * S) + m(-2 * A), 0, 1, 0, 0, 0},
        {m(-4 * S) + m(-2 * P - 4 * A) + m(-4 * A), 0, m(-2 * S) + m(-2 * A), 0, 1, 0, 0},
        {nine, four, four, 1, 1, 0, 0},
    };
    b.matrix("E6..E0 in D6..D0", sys);
    b.det("det(E4, E2; D5, D3)", submatrix(sys, {2, 4}, {1, 3}), m(-2 * P) - m(-2 * A));
    b.det("det(E5, E3, E1, E0; D6, D4, D2, D0)", submatrix(sys, {1, 3, 5, 6}, {0, 2, 4, 6}),
          (m(-2 * P) - m(-2 * A)) * (m(-2 * P - 2 * A) - 1));
    b.det("det(full system)", sys);
}

void cert_c4(Builder& b, int P) {
    LaurentMatrix sys = {
        {0, m(-4 * P), 0, 1, 0},
        {m(-8 * P), 0, m(-4 * P), 0, 1},
        {0, 1, 0, 0, 0},
        {m(-4 * P) + m(-2 * P), 0, 1, 0, 0},
        {m(-4 * P) + 2 * m(-2 * P) + 1, 1, 1, 0, 0},
    };
    b.matrix("E4..E0 in D4..D0", sys);
    b.det("det(full system)", sys);
}

void cert_c5(Builder& b, int p, int q, int a, int bb) {
    const int ab = a * bb;
    auto dp = [&](int j) { return DeltaSpec{p, q, j}.to_rational(); };
    auto da = [&](int j) { return DeltaSpec{a, bb, j}.to_rational(); };
    auto x = [&](const std::function<RationalFunction(int)>& d) {
        return mono(-7 * ab, -44 * ab) * d(1) + mono(-5 * ab, -32 * ab) * d(3);
    };
    const RationalFunction den1 = br(5) * br(3);
    const RationalFunction det1 = (x(da) * dp(1) - x(dp) * da(1)) * mono(-3 * ab, -12 * ab) / den1;
    const RationalFunction det1_stated = mono(-8 * ab, -44 * ab) * (da(3) * dp(1) - dp(3) * da(1)) / den1;
    b.nonzero("det(E4, E2; D5, D3)", det1, det1_stated);

    auto mm = [](std::initializer_list<std::pair<int, int>> terms) {
        ULaurent u;
        for (auto [c, e] : terms) u += ULaurent::monomial(c, e);
        return in_m(u);
    };
    const RationalFunction det2 =
        (mono(-11 * ab, -70 * ab) * da(0) + mono(-9 * ab, -62 * ab) * da(2) + mono(-7 * ab, -46 * ab) * da(4)) *
            mm({{1, -2 * ab}, {1, 0}}) / br(6) -
        (mono(-7 * ab, -30 * ab) * da(0) + mono(-5 * ab, -22 * ab) * da(2)) *
            mm({{1, -6 * ab}, {2, -4 * ab}, {2, -2 * ab}, {1, 0}}) / br(4) +
        mono(-3 * ab, -6 * ab) * da(0) * mm({{1, -8 * ab}, {2, -6 * ab}, {2, -4 * ab}, {1, -2 * ab}}) / br(2);
    b.nonzero("det(E3, E0; D6, D4)", det2);

    const RationalFunction phi = det2 * tt() * tt() * tt() * br(6) * br(4) * br(2);
    if (a > 0) {
        b.extremal_degree("lowest t-degree of phi(t, t^(2n))", phi, true, -(4L + 26L * ab + 2L * a + 2L * bb),
                          -10L - 70L * ab - 2L * a - 2L * bb);
    } else {
        b.extremal_degree("highest t-degree of phi(t, t^(2n))", phi, false, -(4L + 26L * ab + 2L * a - 2L * bb),
                          -14L - 70L * ab - 2L * a + 2L * bb);
    }
}

void cert_c6(Builder& b, int P, int a) {
    const ULaurent x5 = m(-3 * P - 9 * a) + m(-P - 9 * a) + m(-3 * P - 5 * a) - m(-3 * P - 7 * a) + m(-3 * P - a) -
                        m(-3 * P - 3 * a) - m(-P - 7 * a) + m(-P - 5 * a) + m(-P - a) - m(-P - 3 * a);
    const ULaurent x4 = m(-3 * P - 5 * a) - m(-3 * P - 7 * a) + m(-3 * P - a) - m(-3 * P - 3 * a) - m(-P - 7 * a) +
                        m(-P - 5 * a) + m(-P - a) - m(-P - 3 * a);
    const ULaurent x3 = m(-P - 5 * a) + m(-P - a) - m(-P - 3 * a);
    const ULaurent x2 = m(-P - a) - m(-P - 3 * a);
    // Columns D5, ..., D0.
    LaurentMatrix sys = {
        {m(-4 * P - 8 * a), 0, m(-2 * P - 4 * a), 0, 1, 0},
        {0, m(-4 * P - 8 * a), 0, m(-2 * P - 4 * a), 0, 1},
        {m(-2 * P - 4 * a) + m(-2 * P), 0, 1, 0, 0, 0},
        {0, m(-2 * P - 4 * a) + m(-2 * P), 0, 1, 0, 0},
        {-m(-2 * P - 6 * a) - m(-6 * a), m(-2 * P - 4 * a) + m(-4 * a), -m(-2 * a), 1, 0, 0},
        {x5, x4, x3, x2, 0, 0},
    };
    b.matrix("E5..E0 in D5..D0", sys);
    b.det("det(E3..E0; D3, D2, D5, D4)", submatrix(sys, {2, 3, 4, 5}, {2, 3, 0, 1}),
          (m(-4 * a) - m(-2 * P)) * (m(-3 * P - 5 * a) - m(-P - a)));
    b.det("det(full system)", sys);
}

void cert_c7(Builder& b, int a) {
    // Columns D5, D4, D3, D2 after D1, D0 are eliminated.
    LaurentMatrix sys = {
        {0, m(-8 * a) + m(-4 * a), 0, 1},
        {-m(-10 * a) - m(-6 * a), m(-8 * a) + m(-4 * a), -m(-2 * a), 1},
        {m(-15 * a) + 2 * m(-11 * a) - m(-13 * a) + 2 * m(-7 * a) - 2 * m(-9 * a) + m(-3 * a) - m(-5 * a),
         m(-11 * a) - m(-13 * a) + 2 * m(-7 * a) - 2 * m(-9 * a) + m(-3 * a) - m(-5 * a),
         m(-7 * a) + m(-3 * a) - m(-5 * a), m(-3 * a) - m(-5 * a)},
    };
    b.matrix("E2, E1, E0 in D5..D2", sys);
    const RationalFunction inner = mono(-6 * a, -36 * a) * br2(9) - mono(-8 * a, -52 * a) * br2(7) +
                                   mono(-10 * a, -64 * a) * br2(5) - mono(-12 * a, -72 * a) * br2(3);
    const RationalFunction d5 = br2(5) - mono(-2 * a, -8 * a) * br2(3);
    const RationalFunction head = -mono(-10 * a, 0) - mono(-6 * a, 0);
    const RationalFunction x = head + br(3) * inner / (br(5) * d5);
    b.nonzero("coefficient of D5", x);
    const RationalFunction num = (head * br(5) * d5 + br(3) * inner) * tt() * tt();
    if (a > 0) {
        b.extremal_degree("lowest t-degree of its numerator at M = t^(2n)", num, true, -24L * a - 6, -72L * a - 12);
    } else {
        // No closed form is given for this sign; only non-vanishing is required.
        b.nonzero("numerator of the coefficient of D5", num);
    }
    b.nonzero("coefficient of D4", -m(-9 * a) + m(-7 * a) + m(-3 * a) - m(-5 * a));
}

void cert_c8(Builder& b, int p, int a) {
    const int s = p + a;
    auto e21 = [](int x, int y) {
        return std::vector<ULaurent>{-m(-4 * x - 4 * y) + m(-4 * x - 2 * y) + m(-4 * x), -m(-2 * x - 2 * y) + m(-2 * x), 1, 0};
    };
    LaurentMatrix sys = {
        {m(-6 * s), m(-4 * s), m(-2 * s), 1},
        e21(p, a),
        e21(a, p),
        {m(-4 * s) - m(-4 * p - 2 * a) - m(-4 * a - 2 * p) + m(-2 * s) + m(-4 * p) - m(-2 * p) + m(-4 * a) - m(-2 * a) + 1,
         m(-2 * s) - m(-2 * p) - m(-2 * a) + 1, 1, 0},
    };
    b.matrix("E3..E0 in D3..D0", sys);
    const ULaurent stated = -2 * m(-6 * p - 2 * a) + m(-4 * p - 2 * a) + 2 * m(-6 * p) - 2 * m(-4 * p) +
                            2 * m(-2 * p - 6 * a) - 2 * m(-6 * a) + 2 * m(-4 * a) + m(-2 * p) - m(-2 * p - 4 * a) -
                            m(-2 * a);
    b.det("det(E2, E1, E0; D3, D2, D1)", submatrix(sys, {1, 2, 3}, {0, 1, 2}), stated);
    b.det("det(full system)", sys);
}

void cert_c9(Builder& b, int p) {
    LaurentMatrix sys = {
        {m(-8 * p), m(-4 * p), 1},
        {-m(-4 * p) + m(-2 * p), 1, 0},
        {m(-4 * p) - 2 * m(-2 * p) + 1, 1, 0},
    };
    b.matrix("E2..E0 in D2..D0", sys);
    b.det("det(full system)", sys, -2 * m(-4 * p) + 3 * m(-2 * p) - 1);
}

}  // namespace

LaurentMatrix submatrix(const LaurentMatrix& mat, const std::vector<int>& rows, const std::vector<int>& cols) {
    LaurentMatrix out;
    for (int r : rows) {
        std::vector<ULaurent> row;
        for (int c : cols) row.push_back(mat.at(r).at(c));
        out.push_back(std::move(row));
    }
    return out;
}

ULaurent determinant(const LaurentMatrix& in) {
    const std::size_t n = in.size();
    for (const auto& row : in) {
        if (row.size() != n) throw InvalidParams("determinant of a non-square matrix");
    }
    if (n == 0) return ULaurent(1);
    LaurentMatrix a = in;
    ULaurent prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) return ULaurent();
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ULaurent v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                ULaurent q;
                if (!prev.divides_into(v, q)) throw InexactDivision("Bareiss step is not exact");
                a[i][j] = std::move(q);
            }
            a[i][k] = ULaurent();
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

MinimalityCertificate build_certificate(CaseId id, int p, int q, int a, int b) {
    MinimalityCertificate c;
    c.id = id;
    Builder bld(c);
    switch (id) {
        case CaseId::C3:
            cert_c3(bld, p * q, a * b);
            break;
        case CaseId::C4:
            cert_c4(bld, p * q);
            break;
        case CaseId::C5:
            cert_c5(bld, p, q, a, b);
            break;
        case CaseId::C6:
            cert_c6(bld, p * q, a);
            break;
        case CaseId::C7:
            cert_c7(bld, a);
            break;
        case CaseId::C8:
            cert_c8(bld, p, a);
            break;
        case CaseId::C9:
            cert_c9(bld, p);
            break;
    }
    c.verdict = true;
    for (const auto& it : c.items) c.verdict = c.verdict && it.nonzero;
    return c;
}

MinimalityCertificate minimality_certificate(CaseId id, const TorusKnot& k1, const TorusKnot& k2) {
    MinimalityCertificate c = build_certificate(id, k1.p, k1.q, k2.p, k2.q);
    if (!c.verdict) {
        for (const auto& it : c.items) {
            if (!it.nonzero) {
                throw CertificateFailure(to_string(id) + " certificate for " + KnotExpr::sum(k1, k2).to_string() +
                                         ": " + it.name + " vanishes");
            }
        }
    }
    return c;
}

}  // namespace ajt
