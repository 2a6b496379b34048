#include <algorithm>
#include <cstdint>
#include <random>

#include "ajtorus/errors.hpp"
#include "ajtorus/minimality.hpp"

namespace ajt {

namespace {

using u64 = std::uint64_t;
constexpr u64 kPrime = 2147483647;  // 2^31 - 1

u64 add(u64 a, u64 b) {
    u64 s = a + b;
    return s >= kPrime ? s - kPrime : s;
}
u64 sub(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }
u64 mul(u64 a, u64 b) { return a * b % kPrime; }
u64 pw(u64 a, u64 e) {
    u64 r = 1;
    for (; e; e >>= 1, a = mul(a, a)) {
        if (e & 1) r = mul(r, a);
    }
    return r;
}
u64 inv(u64 a) { return pw(a, kPrime - 2); }
// a^e for any integer e (a nonzero).
u64 ipow(u64 a, long e) { return e >= 0 ? pw(a, static_cast<u64>(e)) : pw(inv(a), static_cast<u64>(-e)); }
u64 reduce(const mpz_class& z) {
    mpz_class r = z % static_cast<unsigned long>(kPrime);
    if (r < 0) r += static_cast<unsigned long>(kPrime);
    return r.get_ui();
}

// ---- colored Jones values at t = theta in F_p -----------------------------

class ModJones {
public:
    ModJones(const KnotExpr& k, u64 theta, long n_max) : theta_(theta) {
        const u64 d = sub(ipow(theta, 2), ipow(theta, -2));
        if (d == 0) {
            ok_ = false;
            return;
        }
        dinv_ = inv(d);
        brackets_.assign(n_max + 1, 0);
        for (long n = 1; n <= n_max; ++n) {
            brackets_[n] = qint(n);
            if (brackets_[n] == 0) ok_ = false;
        }
        switch (k.kind) {
            case KnotExpr::Kind::Unknot:
                values_ = brackets_;
                break;
            case KnotExpr::Kind::Torus:
                values_ = torus(k.k1, n_max);
                break;
            case KnotExpr::Kind::Sum: {
                auto a = torus(k.k1, n_max), b = torus(k.k2, n_max);
                values_.assign(n_max + 1, 0);
                for (long n = 1; n <= n_max && ok_; ++n) values_[n] = mul(mul(a[n], b[n]), inv(brackets_[n]));
                break;
            }
        }
    }

    bool ok() const { return ok_; }
    u64 operator()(long n) const { return values_.at(n); }

private:
    u64 theta_;
    u64 dinv_ = 0;
    bool ok_ = true;
    std::vector<u64> brackets_, values_;

    u64 qint(long n) const { return mul(sub(ipow(theta_, 2 * n), ipow(theta_, -2 * n)), dinv_); }

    std::vector<u64> torus(const TorusKnot& k, long n_max) const {
        std::vector<u64> j(n_max + 2, 0);
        const long p = k.p, q = k.q;
        j[1] = 1;
        if (q == 2) {
            for (long n = 1; n + 1 <= n_max; ++n) {
                j[n + 1] = add(mul(kPrime - 1, mul(ipow(theta_, -4 * p * n - 2 * p), j[n])),
                               mul(ipow(theta_, -2 * p * n), qint(2 * n + 1)));
            }
        } else {
            const long s = p + q, d = q - p;
            for (long n = 0; n + 2 <= n_max; ++n) {
                u64 delta = sub(add(ipow(theta_, 2 * s * (n + 1) + 2), ipow(theta_, -2 * s * (n + 1) + 2)),
                                add(ipow(theta_, 2 * d * (n + 1) - 2), ipow(theta_, -2 * d * (n + 1) - 2)));
                delta = mul(delta, dinv_);
                j[n + 2] = add(mul(ipow(theta_, -4 * p * q * (n + 1)), j[n]),
                               mul(ipow(theta_, -2 * p * q * (n + 1)), delta));
            }
        }
        j.resize(n_max + 1);
        return j;
    }
};

// ---- kernels of the evaluated system --------------------------------------

struct Layout {
    int d = 0;
    int k_lo = 0;
    int width = 0;  // number of M-exponents
    int unknowns() const { return (d + 1) * width; }
    int index(int i, int k) const { return i * width + (k - k_lo); }
};

// Basis of the kernel of rows n in [lo, hi] of sum c_{i,k} theta^(2kn) J(n+i).
std::vector<std::vector<u64>> kernel_at(const Layout& lay, const ModJones& j, u64 theta, long lo, long hi) {
    const int cols = lay.unknowns();
    std::vector<std::vector<u64>> a;
    a.reserve(hi - lo + 1);
    for (long n = lo; n <= hi; ++n) {
        std::vector<u64> row(cols);
        const u64 x = ipow(theta, 2 * n);
        for (int i = 0; i <= lay.d; ++i) {
            u64 v = mul(ipow(x, lay.k_lo), j(n + i));
            for (int k = 0; k < lay.width; ++k, v = mul(v, x)) row[i * lay.width + k] = v;
        }
        a.push_back(std::move(row));
    }
    // Reduced row echelon form.
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        const u64 s = inv(a[r][c]);
        for (int x = c; x < cols; ++x) a[r][x] = mul(a[r][x], s);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const u64 f = kPrime - a[i][c];
            u64* dst = a[i].data();
            const u64* src = a[r].data();
            for (int x = c; x < cols; ++x) dst[x] = (dst[x] + f * src[x]) % kPrime;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<u64>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<u64> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = sub(0, a[i][f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---- univariate polynomials over F_p (coefficients low to high) -----------

using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % kPrime;
    }
    trim(r);
    return r;
}

Poly psub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
}

// Quotient and remainder; b nonzero.
std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b) {
    trim(a);
    if (deg(a) < deg(b)) return {{}, a};
    const u64 li = inv(b.back());
    Poly q(a.size() - b.size() + 1, 0);
    for (int i = deg(a); i >= deg(b); --i) {
        const u64 c = mul(a[i], li);
        q[i - deg(b)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= deg(b); ++j) a[i - deg(b) + j] = sub(a[i - deg(b) + j], mul(c, b[j]));
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly monic(Poly a) {
    trim(a);
    if (a.empty()) return a;
    const u64 li = inv(a.back());
    for (auto& c : a) c = mul(c, li);
    return a;
}

Poly pgcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = pdivmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

u64 peval(const Poly& a, u64 x) {
    u64 r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = add(mul(r, x), *it);
    return r;
}

struct RationalPoly {
    Poly num, den;
};

// num/den with deg num < n/2, deg den <= n/2 agreeing with the samples.
RationalPoly rational_reconstruct(const Poly& modulus, const Poly& u, std::size_t n) {
    Poly r0 = modulus, r1 = u, t0, t1{1};
    while (!r1.empty() && static_cast<std::size_t>(deg(r1)) >= (n + 1) / 2) {
        auto [q, r] = pdivmod(r0, r1);
        Poly t2 = psub(t0, pmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.empty()) return {{}, {1}};
    const u64 li = inv(t1.back());
    for (auto& c : r1) c = mul(c, li);
    for (auto& c : t1) c = mul(c, li);
    return {r1, t1};
}

// a/b = c mod p with |a|, b below sqrt(p/2).
bool rational_lift(u64 c, long& num, long& den) {
    const long bound = 32767;
    long r0 = static_cast<long>(kPrime), r1 = static_cast<long>(c), s0 = 0, s1 = 1;
    while (r1 > bound) {
        long q = r0 / r1;
        long r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (s1 == 0 || std::labs(s1) > bound) return false;
    num = s1 < 0 ? -r1 : r1;
    den = std::labs(s1);
    return true;
}

// ---- sampling --------------------------------------------------------------

class Sampler {
public:
    Sampler(const KnotExpr& k, const Layout& lay, long lo, long hi, unsigned long long seed)
        : knot_(k), lay_(lay), lo_(lo), hi_(hi), rng_(seed) {}

    // A fresh admissible point with its Jones values.
    std::pair<u64, ModJones> point(long n_max) {
        for (;;) {
            u64 theta = 2 + rng_() % (kPrime - 3);
            ModJones j(knot_, theta, n_max);
            if (j.ok()) return {theta, std::move(j)};
        }
    }

    // Kernel dimension at a fresh point.
    std::vector<std::vector<u64>> kernel() {
        auto [theta, j] = point(hi_ + lay_.d);
        return kernel_at(lay_, j, theta, lo_, hi_);
    }

    // A sample (theta, kernel vector scaled to v[j0] = 1) or nothing when the
    // kernel is not one-dimensional there or v[j0] = 0.
    std::optional<std::pair<u64, std::vector<u64>>> sample(int j0) {
        auto [theta, j] = point(hi_ + lay_.d);
        auto ker = kernel_at(lay_, j, theta, lo_, hi_);
        if (ker.size() != 1 || ker[0][j0] == 0) return std::nullopt;
        const u64 s = inv(ker[0][j0]);
        for (auto& c : ker[0]) c = mul(c, s);
        return std::make_pair(theta, std::move(ker[0]));
    }

private:
    KnotExpr knot_;
    Layout lay_;
    long lo_, hi_;
    std::mt19937_64 rng_;
};

// Newton interpolation through fixed nodes; the inverted node differences
// are shared by every coordinate.
class Interpolator {
public:
    explicit Interpolator(std::vector<u64> xs) : xs_(std::move(xs)) {
        const std::size_t n = xs_.size();
        inv_diff_.assign(n, std::vector<u64>(n, 0));
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = j; i < n; ++i) inv_diff_[j][i] = inv(sub(xs_[i], xs_[i - j]));
        }
        modulus_ = Poly{1};
        for (u64 x : xs_) modulus_ = pmul(modulus_, Poly{sub(0, x), 1});
    }

    const Poly& modulus() const { return modulus_; }
    std::size_t size() const { return xs_.size(); }

    Poly operator()(std::vector<u64> c) const {
        const std::size_t n = xs_.size();
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = n - 1; i >= j; --i) c[i] = mul(sub(c[i], c[i - 1]), inv_diff_[j][i]);
        }
        Poly r{c[n - 1]};
        for (std::size_t i = n - 1; i-- > 0;) {
            // r = r * (t - xs[i]) + c[i]
            Poly nr(r.size() + 1, 0);
            for (std::size_t k = 0; k < r.size(); ++k) {
                nr[k + 1] = add(nr[k + 1], r[k]);
                nr[k] = sub(nr[k], mul(r[k], xs_[i]));
            }
            nr[0] = add(nr[0], c[i]);
            r = std::move(nr);
        }
        trim(r);
        return r;
    }

private:
    std::vector<u64> xs_;
    std::vector<std::vector<u64>> inv_diff_;
    Poly modulus_;
};

using Sample = std::pair<u64, std::vector<u64>>;

bool draw(Sampler& sampler, int j0, std::size_t count, std::vector<Sample>& out) {
    for (int misses = 0; count > 0;) {
        auto s = sampler.sample(j0);
        if (!s) {
            if (++misses > 64) return false;
            continue;
        }
        out.push_back(std::move(*s));
        --count;
    }
    return true;
}

// Interpolates the one-dimensional kernel over F_p(t) as a primitive vector
// of polynomials in t; empty on failure.
std::vector<Poly> interpolate_kernel(Sampler& sampler, int cols, int j0) {
    constexpr std::size_t kMaxSamples = 4096;
    std::vector<Sample> samples, held;
    if (!draw(sampler, j0, 4, held)) return {};
    std::vector<RationalPoly> rec(cols);
    int first = 0;  // coordinate that failed last, tried first next time
    for (std::size_t target = 48;; target += target / 2) {
        if (target > kMaxSamples) return {};
        if (!draw(sampler, j0, target - samples.size(), samples)) return {};
        std::vector<u64> xs;
        for (const auto& s : samples) xs.push_back(s.first);
        Interpolator interp(xs);
        bool all_ok = true;
        for (int step = 0; step < cols && all_ok; ++step) {
            const int c = (first + step) % cols;
            std::vector<u64> ys(xs.size());
            for (std::size_t s = 0; s < xs.size(); ++s) ys[s] = samples[s].second[c];
            RationalPoly r = rational_reconstruct(interp.modulus(), interp(ys), xs.size());
            for (const auto& [x, v] : held) {
                const u64 dv = peval(r.den, x);
                if (dv == 0 || mul(peval(r.num, x), inv(dv)) != v[c]) {
                    all_ok = false;
                    first = c;
                    break;
                }
            }
            rec[c] = std::move(r);
        }
        if (all_ok) break;
    }
    Poly common{1};
    for (const auto& r : rec) {
        if (r.num.empty()) continue;
        common = pdivmod(pmul(common, r.den), pgcd(common, r.den)).first;
    }
    std::vector<Poly> w(cols);
    Poly g;
    for (int c = 0; c < cols; ++c) {
        if (rec[c].num.empty()) continue;
        w[c] = pmul(rec[c].num, pdivmod(common, rec[c].den).first);
        g = g.empty() ? monic(w[c]) : pgcd(g, w[c]);
    }
    for (auto& p : w) {
        if (!p.empty()) p = pdivmod(p, g).first;
    }
    return w;
}

// Lifts an F_p-vector of polynomials (up to scalar) to a primitive integer
// operator sum_{i,k} w_{i,k}(t) M^k L^i.
std::optional<SkewOperator> lift(const std::vector<Poly>& w, const Layout& lay) {
    u64 lead = 0;
    for (const auto& p : w) {
        for (u64 c : p) {
            if (c != 0) {
                lead = c;
                break;
            }
        }
        if (lead) break;
    }
    if (lead == 0) return std::nullopt;
    const u64 s = inv(lead);
    std::vector<std::vector<std::pair<long, long>>> fr(w.size());
    mpz_class den_lcm = 1;
    for (std::size_t c = 0; c < w.size(); ++c) {
        for (u64 x : w[c]) {
            long a = 0, b = 1;
            if (!rational_lift(mul(x, s), a, b)) return std::nullopt;
            fr[c].push_back({a, b});
            mpz_lcm_ui(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), static_cast<unsigned long>(b));
        }
    }
    SkewOperator::Coeffs coeffs;
    for (int i = 0; i <= lay.d; ++i) {
        std::vector<BLaurent::Term> terms;
        for (int k = lay.k_lo; k < lay.k_lo + lay.width; ++k) {
            const auto& f = fr[lay.index(i, k)];
            for (std::size_t e = 0; e < f.size(); ++e) {
                if (f[e].first == 0) continue;
                mpz_class c = den_lcm / f[e].second * f[e].first;
                terms.push_back({mono_key(static_cast<int>(e), k), c});
            }
        }
        BLaurent b = BLaurent::from_terms(std::move(terms));
        if (!b.is_zero()) coeffs.emplace(i, RationalFunction(b));
    }
    if (coeffs.empty()) return std::nullopt;
    return normalize(SkewOperator::from_coeffs(std::move(coeffs)));
}

// Checks the witness modulo p at a fresh point for n in [lo, hi].
bool mod_check(const SkewOperator& op, Sampler& sampler, long lo, long hi, int d) {
    auto [theta, j] = sampler.point(hi + d);
    for (long n = lo; n <= hi; ++n) {
        const u64 x = ipow(theta, 2 * n);
        u64 acc = 0;
        for (const auto& [i, c] : op.coeffs()) {
            u64 v = 0;
            for (const auto& tm : c.num().terms()) {
                v = add(v, mul(reduce(tm.c), mul(ipow(theta, tm.t()), ipow(x, tm.m()))));
            }
            acc = add(acc, mul(v, j(n + i)));
        }
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace

std::pair<int, int> support_m_window(const SkewOperator& op) {
    SkewOperator n = normalize(op);
    if (n.is_zero()) throw ZeroOperator();
    int lo = INT32_MAX, hi = INT32_MIN;
    for (const auto& [i, c] : n.coeffs()) {
        lo = std::min(lo, c.num().min_m());
        hi = std::max(hi, c.num().max_m());
    }
    return {lo, hi};
}

ScanReport minimality_scan(const KnotExpr& knot, const ScanOptions& opt) {
    if (opt.d < 0) throw InvalidParams("scan degree must be nonnegative");
    ScanReport rep;
    rep.knot = knot;
    rep.l_degree_bound = opt.d;
    rep.m_window = opt.m_window;
    if (opt.m_window.first > opt.m_window.second) {
        rep.n_range = opt.n_range;
        rep.note = "empty M-window: no unknowns";
        return rep;
    }
    Layout lay{opt.d, opt.m_window.first, opt.m_window.second - opt.m_window.first + 1};
    rep.unknowns = lay.unknowns();
    rep.n_range = opt.n_range;
    if (rep.n_range.first > rep.n_range.second) rep.n_range = {1, lay.unknowns() + 8L};
    if (rep.n_range.first < 1) throw InvalidParams("scan range must start at n >= 1");
    const long len = rep.n_range.second - rep.n_range.first + 1;
    const long ext_hi = rep.n_range.first + (3 * len + 1) / 2 - 1;

    Sampler sampler(knot, lay, rep.n_range.first, rep.n_range.second, opt.seed);
    // Rank can only drop at special points, so the smaller kernel of two
    // independent points bounds the generic one.
    auto k0 = sampler.kernel();
    if (!k0.empty()) {
        auto k1 = sampler.kernel();
        if (k1.size() < k0.size()) k0 = std::move(k1);
    }
    rep.kernel_dimension = static_cast<int>(k0.size());
    if (rep.kernel_dimension == 0) {
        rep.note = "no annihilator with this support on the tested range";
        return rep;
    }
    if (rep.kernel_dimension > 1) {
        rep.note = "kernel is not one-dimensional; no witness extracted";
        return rep;
    }
    int j0 = lay.unknowns() - 1;
    while (j0 > 0 && k0[0][j0] == 0) --j0;
    auto w = interpolate_kernel(sampler, lay.unknowns(), j0);
    auto op = w.empty() ? std::nullopt : lift(w, lay);
    if (!op) {
        rep.note = "kernel vector could not be reconstructed over Z[t, M]";
        return rep;
    }
    rep.witness = *op;
    if (mod_check(*op, sampler, rep.n_range.first, ext_hi, opt.d)) rep.verified_up_to = ext_hi;
    JonesSequence seq(knot);
    auto exact = check_annihilation(*op, [&seq](long n) { return seq(n); }, 1, opt.exact_check_n);
    rep.witness_exact = exact.ok;
    if (!rep.verified_up_to || !exact.ok) rep.note = "reconstructed witness failed verification";
    return rep;
}

}  // namespace ajt
