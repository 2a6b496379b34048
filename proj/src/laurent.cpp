#include "ajtorus/laurent.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>

#include "ajtorus/errors.hpp"

namespace ajt {

namespace {

// gcd of den with every entry of range; stops early at 1.
template <class It, class Get>
mpz_class content_gcd(mpz_class g, It first, It last, Get get) {
    for (; first != last && g != 1; ++first) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), get(*first).get_mpz_t());
    }
    return g;
}

std::string format_coeff_term(const mpq_class& c, const std::string& mono, bool first) {
    std::string out;
    mpq_class a = abs(c);
    if (first) {
        if (sgn(c) < 0) out += "-";
    } else {
        out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
        out += a.get_str();
    } else if (a == 1) {
        out += mono;
    } else {
        out += a.get_str() + "*" + mono;
    }
    return out;
}

std::string power_str(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

constexpr int kLimbBits = GMP_NUMB_BITS;

// Writes |v| into limbs[offset .. offset+width).
void put_limbs(std::vector<mp_limb_t>& limbs, std::size_t offset, const mpz_class& v) {
    std::size_t n = mpz_size(v.get_mpz_t());
    const mp_limb_t* src = mpz_limbs_read(v.get_mpz_t());
    std::memcpy(limbs.data() + offset, src, n * sizeof(mp_limb_t));
}

mpz_class from_limbs(const std::vector<mp_limb_t>& limbs) {
    mpz_class r;
    std::size_t n = limbs.size();
    while (n > 0 && limbs[n - 1] == 0) --n;
    if (n == 0) return r;
    mp_limb_t* dst = mpz_limbs_write(r.get_mpz_t(), static_cast<mp_size_t>(n));
    std::memcpy(dst, limbs.data(), n * sizeof(mp_limb_t));
    mpz_limbs_finish(r.get_mpz_t(), static_cast<mp_size_t>(n));
    return r;
}

// Evaluates sum a[k] 2^(slot*k) exactly (slot is a multiple of the limb size).
mpz_class kronecker_pack(const std::vector<mpz_class>& a, std::size_t slot_limbs) {
    std::vector<mp_limb_t> pos(a.size() * slot_limbs + 1, 0), neg(a.size() * slot_limbs + 1, 0);
    bool any_neg = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        int s = sgn(a[k]);
        if (s > 0) {
            put_limbs(pos, k * slot_limbs, a[k]);
        } else if (s < 0) {
            put_limbs(neg, k * slot_limbs, a[k]);
            any_neg = true;
        }
    }
    mpz_class r = from_limbs(pos);
    if (any_neg) r -= from_limbs(neg);
    return r;
}

std::vector<mpz_class> kronecker_unpack(const mpz_class& z, std::size_t count, std::size_t slot_limbs) {
    std::vector<mpz_class> out(count);
    int sign = sgn(z);
    if (sign == 0) return out;
    std::size_t n = mpz_size(z.get_mpz_t());
    const mp_limb_t* src = mpz_limbs_read(z.get_mpz_t());
    mpz_class half, full, digit;
    mpz_ui_pow_ui(full.get_mpz_t(), 2, slot_limbs * kLimbBits);
    half = full / 2;
    int carry = 0;
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t begin = k * slot_limbs;
        if (begin < n) {
            std::size_t len = std::min(slot_limbs, n - begin);
            std::size_t used = len;
            while (used > 0 && src[begin + used - 1] == 0) --used;
            if (used == 0) {
                digit = 0;
            } else {
                mp_limb_t* dst = mpz_limbs_write(digit.get_mpz_t(), static_cast<mp_size_t>(used));
                std::memcpy(dst, src + begin, used * sizeof(mp_limb_t));
                mpz_limbs_finish(digit.get_mpz_t(), static_cast<mp_size_t>(used));
            }
        } else {
            digit = 0;
        }
        if (carry) digit += carry;
        if (digit >= half) {
            digit -= full;
            carry = 1;
        } else {
            carry = 0;
        }
        out[k] = sign > 0 ? digit : mpz_class(-digit);
    }
    return out;
}

std::size_t max_bits(const std::vector<mpz_class>& a) {
    std::size_t b = 0;
    for (const auto& x : a) b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
    return b;
}

}  // namespace

std::vector<mpz_class> mul_dense(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t na = a.size(), nb = b.size();
    if (std::min(na, nb) < 48) {
        std::vector<mpz_class> r(na + nb - 1);
        for (std::size_t i = 0; i < na; ++i) {
            if (sgn(a[i]) == 0) continue;
            for (std::size_t j = 0; j < nb; ++j) {
                mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
            }
        }
        return r;
    }
    // Coefficients of the product are bounded by max|a| max|b| min(na, nb);
    // one extra bit leaves room for the signed-digit representation.
    std::size_t bits = max_bits(a) + max_bits(b) + mpz_sizeinbase(mpz_class(std::min(na, nb)).get_mpz_t(), 2) + 2;
    std::size_t slot_limbs = (bits + kLimbBits - 1) / kLimbBits;
    mpz_class x = kronecker_pack(a, slot_limbs);
    mpz_class y = kronecker_pack(b, slot_limbs);
    mpz_class z = x * y;
    return kronecker_unpack(z, na + nb - 1, slot_limbs);
}

// ---------------------------------------------------------------- ULaurent

ULaurent::ULaurent(long c) {
    if (c != 0) c_.emplace_back(c);
}

ULaurent::ULaurent(const mpz_class& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

ULaurent::ULaurent(const mpq_class& c) {
    if (sgn(c) != 0) {
        c_.push_back(c.get_num());
        den_ = c.get_den();
    }
}

ULaurent ULaurent::monomial(const mpq_class& c, int e) {
    ULaurent r(c);
    if (!r.is_zero()) r.lo_ = e;
    return r;
}

ULaurent ULaurent::from_dense(int lo, std::vector<mpz_class> coeffs, mpz_class den) {
    ULaurent r;
    r.lo_ = lo;
    r.c_ = std::move(coeffs);
    r.den_ = std::move(den);
    r.canonicalize();
    return r;
}

ULaurent ULaurent::from_terms(const std::map<int, mpq_class>& terms) {
    ULaurent r;
    for (const auto& [e, c] : terms) r += monomial(c, e);
    return r;
}

void ULaurent::canonicalize() {
    if (sgn(den_) == 0) throw std::domain_error("zero denominator");
    std::size_t first = 0;
    while (first < c_.size() && sgn(c_[first]) == 0) ++first;
    if (first == c_.size()) {
        c_.clear();
        lo_ = 0;
        den_ = 1;
        return;
    }
    std::size_t last = c_.size();
    while (sgn(c_[last - 1]) == 0) --last;
    if (first > 0 || last < c_.size()) {
        c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(last), c_.end());
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
        lo_ += static_cast<int>(first);
    }
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& x : c_) x = -x;
    }
    if (den_ != 1) {
        mpz_class g = content_gcd(den_, c_.begin(), c_.end(), [](const mpz_class& x) -> const mpz_class& { return x; });
        if (g != 1) {
            for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
    }
}

bool ULaurent::is_constant() const { return c_.empty() || (c_.size() == 1 && lo_ == 0); }

bool ULaurent::is_monomial() const { return c_.size() == 1; }

int ULaurent::lowest_degree() const {
    if (is_zero()) throw ZeroPolynomial();
    return lo_;
}

int ULaurent::highest_degree() const {
    if (is_zero()) throw ZeroPolynomial();
    return lo_ + static_cast<int>(c_.size()) - 1;
}

mpq_class ULaurent::coeff(int e) const {
    if (e < lo_ || e >= lo_ + static_cast<int>(c_.size())) return 0;
    mpq_class r(c_[e - lo_], den_);
    r.canonicalize();
    return r;
}

std::map<int, mpq_class> ULaurent::terms() const {
    std::map<int, mpq_class> out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        mpq_class r(c_[k], den_);
        r.canonicalize();
        out.emplace(lo_ + static_cast<int>(k), r);
    }
    return out;
}

std::size_t ULaurent::term_count() const {
    std::size_t n = 0;
    for (const auto& x : c_) n += sgn(x) != 0;
    return n;
}

ULaurent ULaurent::operator-() const {
    ULaurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ULaurent& ULaurent::operator+=(const ULaurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    mpz_class sa = 1, sb = 1;
    if (den_ != o.den_) {
        mpz_class g = gcd(den_, o.den_);
        sa = o.den_ / g;
        sb = den_ / g;
        den_ *= sa;
    }
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(highest_degree(), o.highest_degree());
    std::vector<mpz_class> r(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        auto& dst = r[static_cast<std::size_t>(lo_ - lo) + k];
        if (sa == 1) dst = c_[k]; else dst = c_[k] * sa;
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        auto& dst = r[static_cast<std::size_t>(o.lo_ - lo) + k];
        if (sb == 1) dst += o.c_[k]; else mpz_addmul(dst.get_mpz_t(), o.c_[k].get_mpz_t(), sb.get_mpz_t());
    }
    lo_ = lo;
    c_ = std::move(r);
    canonicalize();
    return *this;
}

ULaurent& ULaurent::operator-=(const ULaurent& o) { return *this += -o; }

ULaurent operator*(const ULaurent& a, const ULaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return ULaurent::from_dense(a.lo_ + b.lo_, mul_dense(a.c_, b.c_), a.den_ * b.den_);
}

ULaurent& ULaurent::operator*=(const ULaurent& o) { return *this = *this * o; }

ULaurent ULaurent::scaled(const mpq_class& s) const {
    if (sgn(s) == 0 || is_zero()) return {};
    ULaurent r = *this;
    if (s.get_num() != 1) {
        for (auto& x : r.c_) x *= s.get_num();
    }
    r.den_ *= s.get_den();
    r.canonicalize();
    return r;
}

ULaurent ULaurent::shifted(int k) const {
    ULaurent r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
}

ULaurent ULaurent::substitute_monomial(const mpq_class& s, int k) const {
    if (k == 0) return ULaurent(evaluate(s));
    std::map<int, mpq_class> out;
    mpq_class sp;
    for (const auto& [e, c] : terms()) {
        mpq_class f;
        mpz_pow_ui(f.get_num_mpz_t(), s.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
        mpz_pow_ui(f.get_den_mpz_t(), s.get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
        f.canonicalize();
        if (e < 0) f = 1 / f;
        out[e * k] += c * f;
    }
    return from_terms(out);
}

mpq_class ULaurent::evaluate(const mpq_class& x) const {
    if (is_zero()) return 0;
    mpq_class acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc = acc * x + mpq_class(c_[k]);
    }
    mpq_class xp = 1;
    int e = lo_;
    if (e != 0) {
        mpq_class base = e > 0 ? x : 1 / x;
        mpz_pow_ui(xp.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
        mpz_pow_ui(xp.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
        xp.canonicalize();
    }
    mpq_class r = acc * xp / mpq_class(den_);
    return r;
}

ULaurent ULaurent::pow(unsigned e) const {
    ULaurent result(1), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

bool ULaurent::divides_into(const ULaurent& num, ULaurent& quotient) const {
    if (is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) {
        quotient = ULaurent();
        return true;
    }
    const std::vector<mpz_class>& d = c_;
    std::size_t nd = d.size(), nn = num.c_.size();
    if (nn < nd) return false;
    std::size_t nq = nn - nd + 1;
    const mpz_class& lead = d.back();
    int scale = lo_;  // divisor x^lo; quotient picks up x^(num.lo - lo)
    if (lead == 1 || lead == -1) {
        std::vector<mpz_class> r = num.c_;
        std::vector<mpz_class> q(nq);
        for (std::size_t k = nq; k-- > 0;) {
            mpz_class qk = r[k + nd - 1];
            if (lead == -1) qk = -qk;
            if (sgn(qk) == 0) continue;
            for (std::size_t i = 0; i < nd; ++i) {
                mpz_submul(r[k + i].get_mpz_t(), qk.get_mpz_t(), d[i].get_mpz_t());
            }
            q[k] = qk;
        }
        for (std::size_t i = 0; i + 1 < nd; ++i) {
            if (sgn(r[i]) != 0) return false;
        }
        quotient = from_dense(num.lo_ - scale, std::move(q), num.den_);
        quotient = quotient.scaled(mpq_class(den_));
        return true;
    }
    std::vector<mpq_class> r(num.c_.begin(), num.c_.end());
    std::vector<mpq_class> q(nq);
    mpq_class lq(lead);
    for (std::size_t k = nq; k-- > 0;) {
        if (sgn(r[k + nd - 1]) == 0) continue;
        mpq_class qk = r[k + nd - 1] / lq;
        for (std::size_t i = 0; i < nd; ++i) r[k + i] -= qk * mpq_class(d[i]);
        q[k] = qk;
    }
    for (std::size_t i = 0; i + 1 < nd; ++i) {
        if (sgn(r[i]) != 0) return false;
    }
    mpz_class common = 1;
    for (const auto& x : q) common = lcm(common, mpz_class(x.get_den()));
    std::vector<mpz_class> qi(nq);
    for (std::size_t k = 0; k < nq; ++k) qi[k] = q[k].get_num() * (common / q[k].get_den());
    quotient = from_dense(num.lo_ - scale, std::move(qi), num.den_ * common);
    quotient = quotient.scaled(mpq_class(den_));
    return true;
}

mpq_class ULaurent::content() const {
    if (is_zero()) return 0;
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(c_.back()) < 0) g = -g;
    mpq_class r(g, den_);
    r.canonicalize();
    return r;
}

ULaurent ULaurent::primitive_part() const {
    if (is_zero()) return {};
    mpq_class ct = content();
    ULaurent r;
    r.lo_ = 0;
    r.c_ = c_;
    mpz_class g = ct.get_num();  // den_ cancels: numerators / (g / den) * (1 / den)
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    r.den_ = 1;
    return r;
}

std::string ULaurent::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (sgn(c_[k]) == 0) continue;
        mpq_class c(c_[k], den_);
        c.canonicalize();
        out += format_coeff_term(c, power_str(var, lo_ + static_cast<int>(k)), first);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- BLaurent

BLaurent::BLaurent(long c) {
    if (c != 0) terms_.push_back({mono_key(0, 0), mpz_class(c)});
}

BLaurent::BLaurent(const mpz_class& c) {
    if (sgn(c) != 0) terms_.push_back({mono_key(0, 0), c});
}

BLaurent::BLaurent(const mpq_class& c) {
    if (sgn(c) != 0) {
        terms_.push_back({mono_key(0, 0), c.get_num()});
        den_ = c.get_den();
    }
}

BLaurent BLaurent::monomial(const mpq_class& c, int t_exp, int m_exp) {
    BLaurent r(c);
    if (!r.is_zero()) r.terms_[0].key = mono_key(t_exp, m_exp);
    return r;
}

BLaurent BLaurent::from_terms(std::vector<Term> terms, mpz_class den) {
    BLaurent r;
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
    for (auto& tm : terms) {
        if (!r.terms_.empty() && r.terms_.back().key == tm.key) {
            r.terms_.back().c += tm.c;
        } else {
            r.terms_.push_back(std::move(tm));
        }
    }
    r.den_ = std::move(den);
    r.canonicalize();
    return r;
}

BLaurent BLaurent::from_univariate(const ULaurent& u, bool var_is_t) {
    std::vector<Term> terms;
    int e = u.lo();
    for (const auto& c : u.numerators()) {
        if (sgn(c) != 0) terms.push_back({var_is_t ? mono_key(e, 0) : mono_key(0, e), c});
        ++e;
    }
    return from_terms(std::move(terms), u.denominator());
}

void BLaurent::canonicalize() {
    if (sgn(den_) == 0) throw std::domain_error("zero denominator");
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& x) { return sgn(x.c) == 0; }),
                 terms_.end());
    if (terms_.empty()) {
        den_ = 1;
        return;
    }
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& x : terms_) x.c = -x.c;
    }
    if (den_ != 1) {
        mpz_class g = content_gcd(den_, terms_.begin(), terms_.end(), [](const Term& x) -> const mpz_class& { return x.c; });
        if (g != 1) {
            for (auto& x : terms_) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
    }
}

bool BLaurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].key == mono_key(0, 0));
}

mpq_class BLaurent::coeff(int t_exp, int m_exp) const {
    MonoKey k = mono_key(t_exp, m_exp);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& a, MonoKey b) { return a.key < b; });
    if (it == terms_.end() || it->key != k) return 0;
    mpq_class r(it->c, den_);
    r.canonicalize();
    return r;
}

int BLaurent::min_t() const {
    if (is_zero()) throw ZeroPolynomial();
    int r = terms_[0].t();
    for (const auto& x : terms_) r = std::min(r, x.t());
    return r;
}

int BLaurent::max_t() const {
    if (is_zero()) throw ZeroPolynomial();
    int r = terms_[0].t();
    for (const auto& x : terms_) r = std::max(r, x.t());
    return r;
}

int BLaurent::min_m() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.front().m();
}

int BLaurent::max_m() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.back().m();
}

BLaurent BLaurent::operator-() const {
    BLaurent r = *this;
    for (auto& x : r.terms_) x.c = -x.c;
    return r;
}

BLaurent& BLaurent::operator+=(const BLaurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    mpz_class sa = 1, sb = 1;
    if (den_ != o.den_) {
        mpz_class g = gcd(den_, o.den_);
        sa = o.den_ / g;
        sb = den_ / g;
        den_ *= sa;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key < o.terms_[j].key)) {
            out.push_back({terms_[i].key, sa == 1 ? terms_[i].c : mpz_class(terms_[i].c * sa)});
            ++i;
        } else if (i == terms_.size() || o.terms_[j].key < terms_[i].key) {
            out.push_back({o.terms_[j].key, sb == 1 ? o.terms_[j].c : mpz_class(o.terms_[j].c * sb)});
            ++j;
        } else {
            mpz_class c = sa == 1 ? terms_[i].c : mpz_class(terms_[i].c * sa);
            mpz_addmul(c.get_mpz_t(), o.terms_[j].c.get_mpz_t(), sb.get_mpz_t());
            if (sgn(c) != 0) out.push_back({terms_[i].key, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    canonicalize();
    return *this;
}

BLaurent& BLaurent::operator-=(const BLaurent& o) { return *this += -o; }

BLaurent operator*(const BLaurent& a, const BLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const BLaurent& x = a.terms_.size() <= b.terms_.size() ? a : b;
    const BLaurent& y = a.terms_.size() <= b.terms_.size() ? b : a;
    constexpr MonoKey bias = 0x80000000LL;
    if (x.terms_.size() == 1) {
        BLaurent r;
        r.terms_.reserve(y.terms_.size());
        for (const auto& ty : y.terms_) r.terms_.push_back({x.terms_[0].key + ty.key - bias, x.terms_[0].c * ty.c});
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }
    std::unordered_map<MonoKey, mpz_class> acc;
    acc.reserve(x.terms_.size() * y.terms_.size() / 2 + 16);
    for (const auto& tx : x.terms_) {
        for (const auto& ty : y.terms_) {
            mpz_class& dst = acc[tx.key + ty.key - bias];
            mpz_addmul(dst.get_mpz_t(), tx.c.get_mpz_t(), ty.c.get_mpz_t());
        }
    }
    std::vector<BLaurent::Term> terms;
    terms.reserve(acc.size());
    for (auto& [k, c] : acc) {
        if (sgn(c) != 0) terms.push_back({k, std::move(c)});
    }
    std::sort(terms.begin(), terms.end(), [](const BLaurent::Term& p, const BLaurent::Term& q) { return p.key < q.key; });
    BLaurent r;
    r.terms_ = std::move(terms);
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

bool operator==(const BLaurent& a, const BLaurent& b) {
    if (a.den_ != b.den_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].c != b.terms_[i].c) return false;
    }
    return true;
}

BLaurent BLaurent::scaled(const mpq_class& s) const {
    if (sgn(s) == 0 || is_zero()) return {};
    BLaurent r = *this;
    if (s.get_num() != 1) {
        for (auto& x : r.terms_) x.c *= s.get_num();
    }
    r.den_ *= s.get_den();
    r.canonicalize();
    return r;
}

BLaurent BLaurent::mul_monomial(int t_exp, int m_exp) const {
    BLaurent r = *this;
    MonoKey d = mono_key(t_exp, m_exp) - 0x80000000LL;
    for (auto& x : r.terms_) x.key += d;
    return r;
}

BLaurent BLaurent::pow(unsigned e) const {
    BLaurent result(1), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

BLaurent BLaurent::shift_m(int j) const {
    if (j == 0) return *this;
    BLaurent r = *this;
    for (auto& x : r.terms_) x.key = mono_key(x.t() + 2 * j * x.m(), x.m());
    // Within a fixed M-exponent all t-exponents move by the same amount, so order is kept.
    return r;
}

ULaurent BLaurent::eval_m(long n) const {
    if (is_zero()) return {};
    long lo = 0, hi = 0;
    bool first = true;
    for (const auto& x : terms_) {
        long e = x.t() + 2 * n * x.m();
        if (first) {
            lo = hi = e;
            first = false;
        } else {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
    }
    std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& x : terms_) c[static_cast<std::size_t>(x.t() + 2 * n * x.m() - lo)] += x.c;
    return ULaurent::from_dense(static_cast<int>(lo), std::move(c), den_);
}

ULaurent BLaurent::at_t_minus1() const {
    if (is_zero()) return {};
    int lo = min_m(), hi = max_m();
    std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& x : terms_) {
        auto& dst = c[static_cast<std::size_t>(x.m() - lo)];
        if (x.t() % 2 == 0) dst += x.c; else dst -= x.c;
    }
    return ULaurent::from_dense(lo, std::move(c), den_);
}

mpq_class BLaurent::evaluate(const mpq_class& t, const mpq_class& m) const {
    mpq_class acc = 0;
    for (const auto& [e, u] : by_m()) {
        mpq_class v = u.evaluate(t);
        ULaurent mono = ULaurent::monomial(1, e);
        acc += v * mono.evaluate(m);
    }
    return acc;
}

std::map<int, ULaurent> BLaurent::by_t() const {
    std::map<int, std::vector<Term>> groups;
    for (const auto& x : terms_) groups[x.t()].push_back(x);
    std::map<int, ULaurent> out;
    for (auto& [e, ts] : groups) {
        int lo = ts.front().m(), hi = ts.back().m();
        std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& x : ts) c[static_cast<std::size_t>(x.m() - lo)] = x.c;
        out.emplace(e, ULaurent::from_dense(lo, std::move(c), den_));
    }
    return out;
}

std::map<int, ULaurent> BLaurent::by_m() const {
    std::map<int, ULaurent> out;
    std::size_t i = 0;
    while (i < terms_.size()) {
        std::size_t j = i;
        int m = terms_[i].m();
        while (j < terms_.size() && terms_[j].m() == m) ++j;
        int lo = terms_[i].t(), hi = terms_[j - 1].t();
        std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t k = i; k < j; ++k) c[static_cast<std::size_t>(terms_[k].t() - lo)] = terms_[k].c;
        out.emplace(m, ULaurent::from_dense(lo, std::move(c), den_));
        i = j;
    }
    return out;
}

namespace {

template <class Coeff>
bool sparse_divide(const std::vector<BLaurent::Term>& num, const std::vector<BLaurent::Term>& den,
                   int t_lo, int t_hi, int m_lo, int m_hi, std::vector<std::pair<MonoKey, Coeff>>& q) {
    constexpr MonoKey bias = 0x80000000LL;
    std::map<MonoKey, Coeff> rem;
    for (const auto& x : num) rem.emplace(x.key, Coeff(x.c));
    const auto& lead = den.back();
    Coeff lc(lead.c);
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        MonoKey qk = it->first - lead.key + bias;
        int qt = key_t(qk), qm = key_m(qk);
        if (qt < t_lo || qt > t_hi || qm < m_lo || qm > m_hi) return false;
        Coeff qc;
        if constexpr (std::is_same_v<Coeff, mpz_class>) {
            if (!mpz_divisible_p(it->second.get_mpz_t(), lc.get_mpz_t())) return false;
            qc = it->second;
            mpz_divexact(qc.get_mpz_t(), qc.get_mpz_t(), lc.get_mpz_t());
        } else {
            qc = it->second / lc;
        }
        rem.erase(it);
        for (std::size_t i = 0; i + 1 < den.size(); ++i) {
            MonoKey k = qk + den[i].key - bias;
            auto [pos, inserted] = rem.try_emplace(k);
            if constexpr (std::is_same_v<Coeff, mpz_class>) {
                mpz_submul(pos->second.get_mpz_t(), qc.get_mpz_t(), den[i].c.get_mpz_t());
            } else {
                pos->second -= qc * Coeff(den[i].c);
            }
            if (sgn(pos->second) == 0) rem.erase(pos);
        }
        q.emplace_back(qk, std::move(qc));
    }
    return true;
}

}  // namespace

bool BLaurent::divides_into(const BLaurent& num, BLaurent& quotient) const {
    if (is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) {
        quotient = BLaurent();
        return true;
    }
    int t_lo = num.min_t() - min_t(), t_hi = num.max_t() - max_t();
    int m_lo = num.min_m() - min_m(), m_hi = num.max_m() - max_m();
    if (t_lo > t_hi || m_lo > m_hi) return false;
    // quotient = (num numerators / den numerators) * (den_ / num.den_)
    std::vector<Term> qterms;
    mpz_class qden = 1;
    const mpz_class& lc = terms_.back().c;
    if (lc == 1 || lc == -1 || terms_.size() == 1) {
        std::vector<std::pair<MonoKey, mpz_class>> q;
        if (!sparse_divide<mpz_class>(num.terms_, terms_, t_lo, t_hi, m_lo, m_hi, q)) {
            if (terms_.size() != 1) return false;
            std::vector<std::pair<MonoKey, mpq_class>> qq;
            if (!sparse_divide<mpq_class>(num.terms_, terms_, t_lo, t_hi, m_lo, m_hi, qq)) return false;
            for (const auto& [k, c] : qq) qden = lcm(qden, mpz_class(c.get_den()));
            for (auto& [k, c] : qq) qterms.push_back({k, c.get_num() * (qden / c.get_den())});
        } else {
            for (auto& [k, c] : q) qterms.push_back({k, std::move(c)});
        }
    } else {
        std::vector<std::pair<MonoKey, mpq_class>> qq;
        if (!sparse_divide<mpq_class>(num.terms_, terms_, t_lo, t_hi, m_lo, m_hi, qq)) return false;
        for (const auto& [k, c] : qq) qden = lcm(qden, mpz_class(c.get_den()));
        for (auto& [k, c] : qq) qterms.push_back({k, c.get_num() * (qden / c.get_den())});
    }
    quotient = from_terms(std::move(qterms), qden * num.den_);
    quotient = quotient.scaled(mpq_class(den_));
    return true;
}

mpq_class BLaurent::content() const {
    if (is_zero()) return 0;
    mpz_class g = 0;
    for (const auto& x : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.c.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(terms_.front().c) < 0) g = -g;
    mpq_class r(g, den_);
    r.canonicalize();
    return r;
}

BLaurent BLaurent::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = 0;
    for (const auto& x : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.c.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(terms_.front().c) < 0) g = -g;
    BLaurent r;
    r.terms_ = terms_;
    if (g != 1) {
        for (auto& x : r.terms_) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), g.get_mpz_t());
    }
    return r;
}

BLaurent BLaurent::integer_scaled() const {
    BLaurent r = *this;
    r.den_ = 1;
    return r;
}

std::string BLaurent::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpq_class c(it->c, den_);
        c.canonicalize();
        std::string mono = power_str("t", it->t());
        std::string mp = power_str("M", it->m());
        if (!mono.empty() && !mp.empty()) mono += "*";
        mono += mp;
        out += format_coeff_term(c, mono, first);
        first = false;
    }
    return out;
}

}  // namespace ajt
