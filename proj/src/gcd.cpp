#include "ajtorus/gcd.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace ajt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::atomic<unsigned long> g_univariate_calls{0};
std::atomic<unsigned long> g_bivariate_calls{0};
std::atomic<unsigned long> g_bivariate_nontrivial{0};

const std::vector<u64>& prime_list() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        mpz_class p = mpz_class(1) << 62;
        for (int i = 0; i < 96; ++i) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            out.push_back(mpz_get_ui(p.get_mpz_t()));
        }
        return out;
    }();
    return primes;
}

struct Zp {
    u64 p;
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
    u64 add(u64 a, u64 b) const {
        u64 r = a + b;
        return r >= p ? r - p : r;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
            e >>= 1u;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
    u64 of(const mpz_class& x) const { return mpz_fdiv_ui(x.get_mpz_t(), p); }
};

using PolyP = std::vector<u64>;  // coefficient of x^k at index k, trimmed

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a <- a mod b (b nonzero, trimmed)
void rem_inplace(PolyP& a, const PolyP& b, const Zp& f) {
    trim(a);
    if (a.size() < b.size()) return;
    u64 inv_lead = f.inv(b.back());
    std::size_t nb = b.size();
    for (std::size_t k = a.size() - 1;; --k) {
        u64 c = a[k];
        if (c != 0) {
            u64 q = f.mul(c, inv_lead);
            std::size_t off = k - (nb - 1);
            for (std::size_t i = 0; i < nb; ++i) a[off + i] = f.sub(a[off + i], f.mul(q, b[i]));
        }
        if (k == nb - 1) break;
    }
    a.resize(nb - 1);
    trim(a);
}

// Monic gcd of two polynomials mod p.
PolyP gcd_mod(PolyP a, PolyP b, const Zp& f) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        rem_inplace(a, b, f);
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = f.inv(a.back());
        for (auto& x : a) x = f.mul(x, inv);
    }
    return a;
}

mpz_class symmetric(const mpz_class& x, const mpz_class& modulus) {
    mpz_class half = modulus / 2;
    if (x > half) return x - modulus;
    return x;
}

// Chinese remaindering of (acc mod P) with (v mod p) into range [0, P p).
mpz_class crt(const mpz_class& acc, const mpz_class& P, u64 v, const Zp& f, u64 p_inv_of_P) {
    u64 a = f.of(acc);
    u64 k = f.mul(f.sub(v, a), p_inv_of_P);
    mpz_class r = acc;
    mpz_class kk(static_cast<unsigned long>(k));
    mpz_addmul(r.get_mpz_t(), P.get_mpz_t(), kk.get_mpz_t());
    return r;
}

// Integer polynomial (x^0 based) image mod p.
PolyP image(const ULaurent& a, const Zp& f) {
    PolyP r(a.numerators().size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = f.of(a.numerators()[k]);
    return r;
}

// Normalizes a Laurent polynomial to an integer polynomial without monomial
// factor, content 1 and positive leading coefficient.
ULaurent unit_normal(const ULaurent& a) { return a.primitive_part(); }

}  // namespace

GcdStats gcd_stats() {
    return {g_univariate_calls.load(), g_bivariate_calls.load(), g_bivariate_nontrivial.load()};
}

ULaurent gcd(const ULaurent& a, const ULaurent& b) {
    ++g_univariate_calls;
    if (a.is_zero()) return b.is_zero() ? ULaurent() : unit_normal(b);
    if (b.is_zero()) return unit_normal(a);
    ULaurent A = unit_normal(a), B = unit_normal(b);
    if (A.size() == 1 || B.size() == 1) return ULaurent(1);
    if (A == B) return A;
    if (A.size() < B.size()) std::swap(A, B);
    const mpz_class& la = A.numerators().back();
    const mpz_class& lb = B.numerators().back();
    mpz_class gamma = gcd(la, lb);

    std::size_t dmin = B.size();  // degree + 1 of the best image so far
    std::vector<mpz_class> acc;
    mpz_class modulus = 1;
    std::vector<mpz_class> last_lift;
    for (u64 p : prime_list()) {
        Zp f{p};
        if (f.of(la) == 0 || f.of(lb) == 0) continue;
        PolyP g = gcd_mod(image(A, f), image(B, f), f);
        if (g.size() <= 1) return ULaurent(1);
        if (g.size() > dmin) continue;
        u64 gm = f.of(gamma);
        for (auto& x : g) x = f.mul(x, gm);
        if (g.size() < dmin || acc.empty()) {
            dmin = g.size();
            acc.assign(g.size(), 0);
            for (std::size_t k = 0; k < g.size(); ++k) acc[k] = static_cast<unsigned long>(g[k]);
            modulus = static_cast<unsigned long>(p);
        } else {
            u64 pinv = f.inv(f.of(modulus));
            for (std::size_t k = 0; k < g.size(); ++k) acc[k] = crt(acc[k], modulus, g[k], f, pinv);
            modulus *= static_cast<unsigned long>(p);
        }
        std::vector<mpz_class> lift(acc.size());
        for (std::size_t k = 0; k < acc.size(); ++k) lift[k] = symmetric(acc[k], modulus);
        if (lift == last_lift) continue;  // already tested and rejected
        last_lift = lift;
        ULaurent cand = ULaurent::from_dense(0, lift).primitive_part();
        ULaurent q;
        if (cand.divides_into(A, q) && cand.divides_into(B, q)) return cand;
    }
    throw std::runtime_error("univariate gcd: modular lifting did not converge");
}

// ---------------------------------------------------------------- bivariate

namespace {

// Bivariate integer polynomial with nonnegative exponents, viewed as a
// polynomial in a main variable x with coefficients in Z[y].
struct XY {
    struct Term {
        int x, y;
        mpz_class c;
    };
    std::vector<Term> terms;
    int dx = 0, dy = 0;
};

XY to_xy(const BLaurent& a, bool t_main) {
    XY r;
    for (const auto& tm : a.terms()) {
        int x = t_main ? tm.t() : tm.m();
        int y = t_main ? tm.m() : tm.t();
        r.terms.push_back({x, y, tm.c});
        r.dx = std::max(r.dx, x);
        r.dy = std::max(r.dy, y);
    }
    return r;
}

BLaurent from_xy(const std::map<std::pair<int, int>, mpz_class>& h, bool t_main) {
    std::vector<BLaurent::Term> terms;
    for (const auto& [k, c] : h) {
        if (sgn(c) == 0) continue;
        int t = t_main ? k.first : k.second;
        int m = t_main ? k.second : k.first;
        terms.push_back({mono_key(t, m), c});
    }
    return BLaurent::from_terms(std::move(terms));
}

// Coefficient of x^k as an integer polynomial in y.
std::map<int, ULaurent> x_coefficients(const XY& a) {
    std::map<int, std::map<int, mpz_class>> groups;
    for (const auto& tm : a.terms) groups[tm.x][tm.y] += tm.c;
    std::map<int, ULaurent> out;
    for (const auto& [x, ys] : groups) {
        int lo = ys.begin()->first, hi = ys.rbegin()->first;
        std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [y, v] : ys) c[static_cast<std::size_t>(y - lo)] = v;
        out.emplace(x, ULaurent::from_dense(lo, std::move(c)));
    }
    return out;
}

// Content with respect to x: gcd of the Z[y] coefficients (as a polynomial in y).
ULaurent content_x(const XY& a) {
    auto coeffs = x_coefficients(a);
    int ylo = a.dy;
    for (const auto& [x, u] : coeffs) ylo = std::min(ylo, u.lowest_degree());
    ULaurent g;
    for (const auto& [x, u] : coeffs) {
        g = g.is_zero() ? u.primitive_part() : gcd(g, u);
        if (g.size() == 1) break;
    }
    return g.shifted(ylo);
}

XY swap_xy(const XY& a) {
    XY r;
    for (const auto& tm : a.terms) r.terms.push_back({tm.y, tm.x, tm.c});
    r.dx = a.dy;
    r.dy = a.dx;
    return r;
}

// Image of a at y = y0 as a polynomial in x, mod p; ypow[k] = y0^k.
PolyP eval_y(const XY& a, const std::vector<u64>& ypow, const Zp& f) {
    PolyP r(static_cast<std::size_t>(a.dx) + 1, 0);
    for (const auto& tm : a.terms) {
        r[static_cast<std::size_t>(tm.x)] = f.add(r[static_cast<std::size_t>(tm.x)], f.mul(f.of(tm.c), ypow[static_cast<std::size_t>(tm.y)]));
    }
    return r;
}

std::vector<u64> powers(u64 y0, int n, const Zp& f) {
    std::vector<u64> r(static_cast<std::size_t>(n) + 1);
    r[0] = 1;
    for (std::size_t k = 1; k < r.size(); ++k) r[k] = f.mul(r[k - 1], y0);
    return r;
}

// Degree in x of gcd(A(x, y0), B(x, y0)) for a y0 that keeps both x-degrees.
int specialized_gcd_degree(const XY& A, const XY& B, const Zp& f) {
    int dy = std::max(A.dy, B.dy);
    for (u64 y0 = 2; y0 < 2000; ++y0) {
        auto pw = powers(y0, dy, f);
        PolyP a = eval_y(A, pw, f), b = eval_y(B, pw, f);
        if (a.back() == 0 || b.back() == 0) continue;
        PolyP g = gcd_mod(std::move(a), std::move(b), f);
        return static_cast<int>(g.size()) - 1;
    }
    return std::min(A.dx, B.dx);  // no good point found: report an upper bound
}

u64 eval_u(const ULaurent& u, u64 y0, const Zp& f) {
    // u has nonnegative exponents here
    u64 acc = 0;
    const auto& c = u.numerators();
    for (std::size_t k = c.size(); k-- > 0;) acc = f.add(f.mul(acc, y0), f.of(c[k]));
    return f.mul(acc, f.pow(y0, static_cast<u64>(u.lo())));
}

// Exact quotient of an XY polynomial by a polynomial in y.
XY divide_by_y_poly(const XY& a, const ULaurent& c) {
    XY r;
    for (const auto& [x, u] : x_coefficients(a)) {
        ULaurent q;
        if (!c.divides_into(u, q)) throw std::logic_error("content division failed");
        int e = q.lo();
        for (const auto& v : q.numerators()) {
            if (sgn(v) != 0) {
                r.terms.push_back({x, e, v});
                r.dx = std::max(r.dx, x);
                r.dy = std::max(r.dy, e);
            }
            ++e;
        }
    }
    return r;
}

BLaurent xy_to_blaurent(const XY& a, bool t_main) {
    std::map<std::pair<int, int>, mpz_class> h;
    for (const auto& tm : a.terms) h[{tm.x, tm.y}] += tm.c;
    return from_xy(h, t_main);
}

BLaurent normalize_gcd(const BLaurent& g) {
    if (g.is_zero()) return g;
    return g.mul_monomial(-g.min_t(), -g.min_m()).primitive_part();
}

// Brown's algorithm on A, B primitive with respect to x, both of positive x-degree.
// Returns the primitive gcd, verified by exact division of the inputs.
BLaurent brown(const XY& A, const XY& B, const BLaurent& Ab, const BLaurent& Bb, bool t_main) {
    auto ca = x_coefficients(A), cb = x_coefficients(B);
    const ULaurent& lcA = ca.rbegin()->second;
    const ULaurent& lcB = cb.rbegin()->second;
    // gcd of the leading coefficients in Z[y], integer content included:
    // the leading coefficient of the gcd divides it.
    mpz_class int_content;
    mpz_gcd(int_content.get_mpz_t(), mpq_class(abs(lcA.content())).get_num_mpz_t(),
            mpq_class(abs(lcB.content())).get_num_mpz_t());
    ULaurent gamma = gcd(lcA, lcB).shifted(std::min(lcA.lo(), lcB.lo())).scaled(int_content);
    int gamma_deg = gamma.highest_degree();
    int bound = gamma_deg + std::min(A.dy, B.dy) + 1;  // points that determine H for sure
    int dy = std::max(A.dy, B.dy);

    std::map<std::pair<int, int>, mpz_class> acc;  // CRT accumulator, values in [0, modulus)
    mpz_class modulus = 1;
    int acc_dx = -1;
    BLaurent last_candidate;
    int prime_index = 0;
    for (u64 p : prime_list()) {
        ++prime_index;
        Zp f{p};
        if (f.of(lcA.numerators().back()) == 0 || f.of(lcB.numerators().back()) == 0) continue;
        // After a few failed early-terminated primes, insist on the full point count.
        bool complete_mode = prime_index > 6;
        std::vector<PolyP> H;  // H[j] = coefficient of x^j, dense in y
        PolyP q{1};            // prod (y - y_k)
        int dmin = std::min(A.dx, B.dx) + 1;
        int points = 0;
        bool stable = false;
        for (u64 y0 = 1; y0 < p && points <= bound + 2; ++y0) {
            u64 la = eval_u(lcA, y0, f), lb = eval_u(lcB, y0, f);
            if (la == 0 || lb == 0) continue;
            auto pw = powers(y0, dy, f);
            PolyP g = gcd_mod(eval_y(A, pw, f), eval_y(B, pw, f), f);
            int d = static_cast<int>(g.size()) - 1;
            if (d == 0) return BLaurent(1);
            if (d > dmin) continue;
            if (d < dmin) {
                dmin = d;
                H.assign(static_cast<std::size_t>(d) + 1, PolyP{});
                q = PolyP{1};
                points = 0;
            }
            if (H.empty()) H.assign(static_cast<std::size_t>(d) + 1, PolyP{});
            u64 gv = eval_u(gamma, y0, f);
            u64 qv = 0;
            for (std::size_t k = q.size(); k-- > 0;) qv = f.add(f.mul(qv, y0), q[k]);
            u64 qinv = f.inv(qv);
            bool changed = false;
            for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j) {
                u64 target = f.mul(g[j], gv);
                u64 h = 0;
                for (std::size_t k = H[j].size(); k-- > 0;) h = f.add(f.mul(h, y0), H[j][k]);
                u64 diff = f.sub(target, h);
                if (diff == 0) continue;
                changed = true;
                u64 s = f.mul(diff, qinv);
                if (H[j].size() < q.size()) H[j].resize(q.size(), 0);
                for (std::size_t k = 0; k < q.size(); ++k) H[j][k] = f.add(H[j][k], f.mul(s, q[k]));
            }
            // q <- q * (y - y0)
            q.push_back(0);
            for (std::size_t k = q.size() - 1; k > 0; --k) q[k] = f.sub(q[k - 1], f.mul(q[k], y0));
            q[0] = f.sub(0, f.mul(q[0], y0));
            ++points;
            if (!changed && points >= 2 && !complete_mode) {
                stable = true;
                break;
            }
            if (points > bound) {
                stable = true;
                break;
            }
        }
        if (!stable) continue;
        // fold this prime's image into the accumulator
        if (acc_dx != dmin) {
            acc.clear();
            modulus = 1;
            acc_dx = dmin;
        }
        u64 pinv = f.inv(f.of(modulus));
        std::map<std::pair<int, int>, u64> img;
        for (std::size_t j = 0; j < H.size(); ++j) {
            for (std::size_t k = 0; k < H[j].size(); ++k) {
                if (H[j][k] != 0) img[{static_cast<int>(j), static_cast<int>(k)}] = H[j][k];
            }
        }
        for (auto& [key, v] : acc) {
            auto it = img.find(key);
            v = crt(v, modulus, it == img.end() ? 0 : it->second, f, pinv);
        }
        for (const auto& [key, v] : img) {
            if (acc.count(key)) continue;
            acc[key] = crt(0, modulus, v, f, pinv);
        }
        modulus *= static_cast<unsigned long>(p);
        std::map<std::pair<int, int>, mpz_class> lifted;
        for (const auto& [key, v] : acc) {
            mpz_class s = symmetric(v, modulus);
            if (sgn(s) != 0) lifted[key] = s;
        }
        if (lifted.empty()) continue;
        XY cand_xy;
        for (const auto& [key, v] : lifted) {
            cand_xy.terms.push_back({key.first, key.second, v});
            cand_xy.dx = std::max(cand_xy.dx, key.first);
            cand_xy.dy = std::max(cand_xy.dy, key.second);
        }
        ULaurent cont = content_x(cand_xy);
        XY prim = divide_by_y_poly(cand_xy, cont);
        BLaurent cand = normalize_gcd(xy_to_blaurent(prim, t_main));
        if (cand == last_candidate) continue;
        last_candidate = cand;
        BLaurent quo;
        if (cand.divides_into(Ab, quo) && cand.divides_into(Bb, quo)) return cand;
    }
    throw std::runtime_error("bivariate gcd: modular lifting did not converge");
}

}  // namespace

BLaurent gcd(const BLaurent& a, const BLaurent& b) {
    ++g_bivariate_calls;
    if (a.is_zero()) return normalize_gcd(b);
    if (b.is_zero()) return normalize_gcd(a);
    BLaurent A = normalize_gcd(a), B = normalize_gcd(b);
    if (A.is_constant() || B.is_constant()) return BLaurent(1);
    if (A == B) return A;

    int dtA = A.max_t(), dmA = A.max_m(), dtB = B.max_t(), dmB = B.max_m();
    // Pure polynomials in one variable: univariate gcd after grouping.
    double cost_t = static_cast<double>(std::min(dmA, dmB) + 1) * std::max(dtA, dtB) * std::max(dtA, dtB);
    double cost_m = static_cast<double>(std::min(dtA, dtB) + 1) * std::max(dmA, dmB) * std::max(dmA, dmB);
    bool t_main = cost_t <= cost_m;
    XY ax = to_xy(A, t_main), bx = to_xy(B, t_main);

    Zp f{prime_list()[0]};
    int gx = (ax.dx == 0 || bx.dx == 0) ? 0 : specialized_gcd_degree(ax, bx, f);
    XY ay = swap_xy(ax), by = swap_xy(bx);
    int gy = (ay.dx == 0 || by.dx == 0) ? 0 : specialized_gcd_degree(ay, by, f);
    if (gx == 0 && gy == 0) return BLaurent(1);
    ++g_bivariate_nontrivial;
    if (gx == 0) {
        // gcd lives in Z[y]: it divides the x-contents.
        ULaurent g = gcd(content_x(ax), content_x(bx));
        return normalize_gcd(BLaurent::from_univariate(g, !t_main));
    }
    if (gy == 0) {
        ULaurent g = gcd(content_x(ay), content_x(by));
        return normalize_gcd(BLaurent::from_univariate(g, t_main));
    }
    ULaurent cA = content_x(ax), cB = content_x(bx);
    ULaurent cg = gcd(cA, cB);
    XY pa = divide_by_y_poly(ax, cA), pb = divide_by_y_poly(bx, cB);
    BLaurent Ap = xy_to_blaurent(pa, t_main), Bp = xy_to_blaurent(pb, t_main);
    BLaurent core = (pa.dx == 0 || pb.dx == 0) ? BLaurent(1) : brown(pa, pb, Ap, Bp, t_main);
    return normalize_gcd(core * BLaurent::from_univariate(cg, !t_main));
}

}  // namespace ajt
