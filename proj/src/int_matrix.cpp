#include "rswt/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace rswt {

IntMatrix IntMatrix::identity(int64_t n) {
    IntMatrix m(n);
    for (int64_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const mpz_class& v) { return v == 0; });
}

mpz_class IntMatrix::trace() const {
    mpz_class t = 0;
    for (int64_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(n_);
    for (int64_t i = 0; i < n_; ++i)
        for (int64_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw ConstructionError("matrix size mismatch in multiply");
    IntMatrix r(n_);
    for (int64_t i = 0; i < n_; ++i) {
        for (int64_t k = 0; k < n_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int64_t j = 0; j < n_; ++j) {
                const mpz_class& b = o.at(k, j);
                if (b != 0) r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (n_ != o.n_) throw ConstructionError("matrix size mismatch in add");
    IntMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (n_ != o.n_) throw ConstructionError("matrix size mismatch in subtract");
    IntMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const mpz_class& k) const {
    IntMatrix r = *this;
    for (auto& v : r.e_) v *= k;
    return r;
}

IntMatrix IntMatrix::pow(int e) const {
    IntMatrix acc = identity(n_);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

IntMatrix IntMatrix::minor_without(int64_t idx) const {
    IntMatrix r(n_ - 1);
    for (int64_t i = 0, ri = 0; i < n_; ++i) {
        if (i == idx) continue;
        for (int64_t j = 0, rj = 0; j < n_; ++j) {
            if (j == idx) continue;
            r.at(ri, rj) = at(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

std::string IntMatrix::to_grid() const {
    size_t width = 1;
    for (const auto& v : e_) width = std::max(width, v.get_str().size());
    std::ostringstream out;
    for (int64_t i = 0; i < n_; ++i) {
        for (int64_t j = 0; j < n_; ++j) {
            const std::string s = at(i, j).get_str();
            out << std::string(width - s.size() + (j ? 1 : 0), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

mpz_class bareiss_det(const IntMatrix& m) {
    const int64_t n = m.size();
    if (n == 0) return 1;
    IntMatrix w = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int64_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int64_t p = -1;
            for (int64_t i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int64_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int64_t i = k + 1; i < n; ++i) {
            for (int64_t j = k + 1; j < n; ++j) {
                mpz_class num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                w.at(i, j) = q;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : mpz_class(-w.at(n - 1, n - 1));
}

IntMatrix eval_poly_at(const IntPoly& p, const IntMatrix& m) {
    const int64_t n = m.size();
    IntMatrix acc(n);
    if (p.is_zero()) return acc;
    for (int64_t i = 0; i < n; ++i) acc.at(i, i) = p.leading();
    for (int k = p.degree() - 1; k >= 0; --k) {
        acc = acc * m;
        const mpz_class& c = p.coeff(k);
        if (c != 0)
            for (int64_t i = 0; i < n; ++i) acc.at(i, i) += c;
    }
    return acc;
}

int64_t SparseIntMatrix::nonzero_count() const {
    int64_t c = 0;
    for (const auto& r : rows) c += static_cast<int64_t>(r.size());
    return c;
}

IntMatrix to_dense(const SparseIntMatrix& s) {
    IntMatrix m(s.n);
    for (int64_t i = 0; i < s.n; ++i)
        for (const auto& [j, v] : s.rows[static_cast<size_t>(i)]) m.at(i, j) = static_cast<long>(v);
    return m;
}

SparseIntMatrix to_sparse(const IntMatrix& m) {
    SparseIntMatrix s(m.size());
    for (int64_t i = 0; i < m.size(); ++i)
        for (int64_t j = 0; j < m.size(); ++j) {
            const mpz_class& v = m.at(i, j);
            if (v != 0) {
                if (v < -1 || v > 2)
                    throw ConstructionError("sparse conversion only supports entries in {-1,0,1,2}");
                s.rows[static_cast<size_t>(i)].emplace_back(j, static_cast<int8_t>(v.get_si()));
            }
        }
    return s;
}

IntMatrix mul_dense_sparse(const IntMatrix& a, const SparseIntMatrix& b) {
    if (a.size() != b.n) throw ConstructionError("size mismatch in dense*sparse");
    const int64_t n = a.size();
    IntMatrix r(n);
    for (int64_t i = 0; i < n; ++i)
        for (int64_t k = 0; k < n; ++k) {
            const mpz_class& av = a.at(i, k);
            if (av == 0) continue;
            for (const auto& [j, v] : b.rows[static_cast<size_t>(k)]) {
                if (v == 1)
                    r.at(i, j) += av;
                else if (v == -1)
                    r.at(i, j) -= av;
                else
                    r.at(i, j) += av * static_cast<long>(v);
            }
        }
    return r;
}

IntMatrix eval_poly_at_sparse(const IntPoly& p, const SparseIntMatrix& m) {
    const int64_t n = m.n;
    IntMatrix acc(n);
    if (p.is_zero()) return acc;
    for (int64_t i = 0; i < n; ++i) acc.at(i, i) = p.leading();
    for (int k = p.degree() - 1; k >= 0; --k) {
        acc = mul_dense_sparse(acc, m);
        const mpz_class& c = p.coeff(k);
        if (c != 0)
            for (int64_t i = 0; i < n; ++i) acc.at(i, i) += c;
    }
    return acc;
}

} // namespace rswt
