#include "ajtorus/jones.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

#include "ajtorus/errors.hpp"

namespace ajt {

namespace {

const ULaurent& t2_minus_tm2() {
    static const ULaurent d = ULaurent::monomial(1, 2) - ULaurent::monomial(1, -2);
    return d;
}

ULaurent exact_div(const ULaurent& num, const ULaurent& den) {
    ULaurent q;
    if (!den.divides_into(num, q)) throw InexactDivision("quotient is not a Laurent polynomial");
    return q;
}

int checked_int(long v) {
    if (v > INT32_MAX || v < INT32_MIN) throw InvalidParams("exponent out of range");
    return static_cast<int>(v);
}

class TextCursor {
public:
    explicit TextCursor(std::string_view s) : s_(s) {}
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    int integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_ || pos_ - start > 9) fail("expected an integer");
        int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }
    bool at_end() {
        skip_ws();
        return pos_ == s_.size();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("knot expression \"" + std::string(s_) + "\": " + what);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

TorusKnot parse_torus(TextCursor& c) {
    c.expect('T');
    c.expect('(');
    int p = c.integer();
    c.expect(',');
    int q = c.integer();
    c.expect(')');
    try {
        return TorusKnot(p, q);
    } catch (const InvalidParams& e) {
        c.fail(e.what());
    }
}

long parity_term(long n, long x) { return n % 2 == 0 ? x : 0; }

std::pair<long, long> torus_degrees(const TorusKnot& k, long n) {
    const long p = k.p, q = k.q;
    if (p > q) {
        return {-p * q * n * n + p * q + parity_term(n, (p - 2) * (q - 2)), 2 * (p + q - p * q) * n + 2 * (p * q - p - q)};
    }
    return {2 * (p - q - p * q) * n + 2 * (p * q - p + q), -p * q * n * n + p * q + parity_term(n, (p + 2) * (q - 2))};
}

}  // namespace

TorusKnot::TorusKnot(int p_, int q_) : p(p_), q(q_) {
    if (q < 2 || std::abs(p) <= q || std::gcd(std::abs(p), q) != 1) {
        throw InvalidParams("T(" + std::to_string(p) + "," + std::to_string(q) +
                            ") is not a torus knot with gcd(|p|,q) = 1 and |p| > q >= 2");
    }
}

std::string TorusKnot::to_string() const { return "T(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

KnotExpr KnotExpr::parse(std::string_view text) {
    TextCursor c(text);
    KnotExpr k;
    if (c.accept('U')) {
        if (!c.at_end()) c.fail("trailing characters");
        return k;
    }
    k.k1 = parse_torus(c);
    k.kind = Kind::Torus;
    if (c.accept('#')) {
        k.k2 = parse_torus(c);
        k.kind = Kind::Sum;
    }
    if (!c.at_end()) c.fail("trailing characters");
    return k;
}

std::string KnotExpr::to_string() const {
    switch (kind) {
        case Kind::Unknot:
            return "U";
        case Kind::Torus:
            return k1.to_string();
        case Kind::Sum:
            return k1.to_string() + "#" + k2.to_string();
    }
    return "";
}

ULaurent bracket(long n) {
    if (n == 0) return ULaurent();
    if (n < 0) return -bracket(-n);
    std::vector<mpz_class> c(static_cast<std::size_t>(4 * (n - 1) + 1));
    for (std::size_t k = 0; k < c.size(); k += 4) c[k] = 1;
    return ULaurent::from_dense(checked_int(-2 * (n - 1)), std::move(c));
}

ULaurent delta_value(int p, int q, long n) {
    const long s = p + q, d = q - p;
    ULaurent num = ULaurent::monomial(1, checked_int(2 * s * (n + 1) + 2)) +
                   ULaurent::monomial(1, checked_int(-2 * s * (n + 1) + 2)) -
                   ULaurent::monomial(1, checked_int(2 * d * (n + 1) - 2)) -
                   ULaurent::monomial(1, checked_int(-2 * d * (n + 1) - 2));
    return exact_div(num, t2_minus_tm2());
}

RationalFunction bracket_symbolic(int k, int j) {
    BLaurent num = BLaurent::monomial(1, 2 * j, k) - BLaurent::monomial(1, -2 * j, -k);
    return RationalFunction(num, BLaurent::t_pow(2) - BLaurent::t_pow(-2));
}

RationalFunction DeltaSpec::to_rational() const {
    BLaurent num = BLaurent::monomial(1, 2 * (p + q + 1), p + q) + BLaurent::monomial(1, -2 * (p + q - 1), -p - q) -
                   BLaurent::monomial(1, 2 * (q - p - 1), q - p) - BLaurent::monomial(1, -2 * (q - p + 1), p - q);
    return shift_m(RationalFunction(num, BLaurent::t_pow(2) - BLaurent::t_pow(-2)), j);
}

JonesSequence::JonesSequence(KnotExpr knot) : knot_(knot) {
    if (knot_.kind == KnotExpr::Kind::Sum) {
        c1_ = std::make_shared<JonesSequence>(KnotExpr::torus(knot_.k1));
        c2_ = knot_.k2 == knot_.k1 ? c1_ : std::make_shared<JonesSequence>(KnotExpr::torus(knot_.k2));
    }
}

ULaurent JonesSequence::operator()(long n) const {
    if (n == 0) return ULaurent();
    if (n < 0) return -(*this)(-n);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    ULaurent v = compute(n);
    cache_.emplace(n, v);
    return v;
}

void JonesSequence::preload(long n, ULaurent value) {
    std::lock_guard<std::mutex> lock(mu_);
    cache_[n] = std::move(value);
}

std::vector<std::pair<long, ULaurent>> JonesSequence::materialized() const {
    std::lock_guard<std::mutex> lock(mu_);
    return {cache_.begin(), cache_.end()};
}

ULaurent JonesSequence::compute(long n) const {
    switch (knot_.kind) {
        case KnotExpr::Kind::Unknot:
            return bracket(n);
        case KnotExpr::Kind::Torus:
            return torus_value(n);
        case KnotExpr::Kind::Sum:
            return exact_div((*c1_)(n) * (*c2_)(n), bracket(n));
    }
    return ULaurent();
}

// Runs the recurrence forward from the nearest materialized value (mu_ held).
ULaurent JonesSequence::torus_value(long n) const {
    const long p = knot_.k1.p, q = knot_.k1.q;
    const long step = q == 2 ? 1 : 2;
    long m = n % step == 0 ? 0 : 1;  // base: J(0) = 0, J(1) = 1
    ULaurent cur = m == 0 ? ULaurent() : ULaurent(1);
    for (auto it = cache_.upper_bound(n); it != cache_.begin();) {
        --it;
        if ((n - it->first) % step == 0) {
            if (it->first > m) {
                m = it->first;
                cur = it->second;
            }
            break;
        }
    }
    while (m < n) {
        if (q == 2) {
            cur = cur * ULaurent::monomial(-1, checked_int(-4 * p * m - 2 * p)) +
                  bracket(2 * m + 1).shifted(checked_int(-2 * p * m));
        } else {
            cur = cur.shifted(checked_int(-4 * p * q * (m + 1))) +
                  delta_value(static_cast<int>(p), static_cast<int>(q), m).shifted(checked_int(-2 * p * q * (m + 1)));
        }
        m += step;
        cache_.emplace(m, cur);
    }
    return cur;
}

ULaurent jones_torus(const TorusKnot& k, long n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<JonesSequence>> registry;
    std::shared_ptr<JonesSequence> seq;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = registry[{k.p, k.q}];
        if (!slot) slot = std::make_shared<JonesSequence>(KnotExpr::torus(k));
        seq = slot;
    }
    return (*seq)(n);
}

ULaurent jones_connected_sum(const TorusKnot& k1, const TorusKnot& k2, long n) {
    if (n == 0) return ULaurent();
    return exact_div(jones_torus(k1, n) * jones_torus(k2, n), bracket(n));
}

std::pair<long, long> degree_bounds(const KnotExpr& k, long n) {
    if (n < 1) throw InvalidParams("degree formulas need n >= 1");
    switch (k.kind) {
        case KnotExpr::Kind::Unknot:
            throw UnsupportedSignPattern("no degree formula for the unknot");
        case KnotExpr::Kind::Torus:
            return torus_degrees(k.k1, n);
        case KnotExpr::Kind::Sum: {
            // The formulas for the two components simply add; the mixed
            // pattern is covered in either order since # is commutative.
            auto a = torus_degrees(k.k1, n), b = torus_degrees(k.k2, n);
            return {a.first + b.first, a.second + b.second};
        }
    }
    return {0, 0};
}

}  // namespace ajt
