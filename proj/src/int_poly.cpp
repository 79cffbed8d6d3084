#include "rswt/int_poly.hpp"

#include <algorithm>
#include <sstream>

namespace rswt {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    c_.reserve(ascending.size());
    for (long v : ascending) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(mpz_class c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(int deg, mpz_class coeff) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(deg) + 1, 0);
        p.c_.back() = std::move(coeff);
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const mpz_class& k) const {
    if (k == 0) return IntPoly{};
    IntPoly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly{};
    std::vector<mpz_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero() || k == 0) return k >= 0 ? *this : IntPoly{};
    std::vector<mpz_class> r(c_.size() + static_cast<size_t>(k), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reciprocal() const {
    std::vector<mpz_class> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeff(i);
        if (c == 0) continue;
        mpz_class a = c < 0 ? mpz_class(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? '-' : '+');
        }
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str();
            out << var;
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw VerificationError("polynomial division by zero");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree())
        throw VerificationError("exact division failed: deg(a) < deg(b)");

    std::vector<mpz_class> rem(a.coeffs());
    const int dq = a.degree() - b.degree();
    std::vector<mpz_class> q(static_cast<size_t>(dq) + 1, 0);
    const mpz_class& lb = b.leading();
    for (int k = dq; k >= 0; --k) {
        mpz_class& top = rem[static_cast<size_t>(k + b.degree())];
        if (top == 0) continue;
        mpz_class qk, r;
        mpz_tdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        if (r != 0) throw VerificationError("exact division failed: non-integer quotient step");
        q[static_cast<size_t>(k)] = qk;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= qk * b.coeff(i);
    }
    for (const auto& c : rem)
        if (c != 0) throw VerificationError("exact division failed: nonzero remainder");
    return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    try {
        (void)div_exact(a, b);
        return true;
    } catch (const VerificationError&) {
        return false;
    }
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw VerificationError("pseudo_rem by zero");
    if (a.degree() < b.degree()) return a;

    std::vector<mpz_class> rem(a.coeffs());
    int dr = a.degree();
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    while (dr >= db) {
        const mpz_class top = rem[static_cast<size_t>(dr)];
        for (auto& c : rem) c *= lb;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= top * b.coeff(i);
        while (dr >= 0 && rem[static_cast<size_t>(dr)] == 0) --dr;
        if (dr < 0) break;
    }
    rem.resize(static_cast<size_t>(dr + 1));
    return IntPoly(std::move(rem));
}

mpz_class content(const IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    mpz_class g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<mpz_class> r(p.coeffs());
    for (auto& c : r) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        c = q;
    }
    return IntPoly(std::move(r));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;

    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());

    IntPoly u = primitive_part(a);
    IntPoly v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = primitive_part(pseudo_rem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return u * cont;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw VerificationError("squarefree_part of zero polynomial");
    if (p.degree() == 0) return IntPoly{{1}};
    const IntPoly g = poly_gcd(p, p.derivative());
    IntPoly q = div_exact(p, g);
    return primitive_part(q);
}

int root_multiplicity(const IntPoly& p, const mpz_class& root) {
    if (p.is_zero()) throw VerificationError("root_multiplicity of zero polynomial");
    const IntPoly lin(std::vector<mpz_class>{mpz_class(-root), mpz_class(1)});
    IntPoly cur = p;
    int mult = 0;
    while (cur.eval(root) == 0) {
        cur = div_exact(cur, lin);
        ++mult;
        if (cur.is_zero()) break;
    }
    return mult;
}

} // namespace rswt
