#include "dcla/matrix.hpp"

#include <algorithm>

#include "dcla/qpolynomial.hpp"

namespace dcla {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
    for (auto& x : a_) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
        }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw PreconditionError("matrix/vector shape mismatch");
    Vector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

Vector row_times(const Vector& v, const Matrix& a) {
    if (a.rows() != v.size()) throw PreconditionError("vector/matrix shape mismatch");
    Vector r(a.cols());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(k, j).is_zero()) r[j] += v[k] * a(k, j);
    }
    return r;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

EchelonForm rref(Matrix m) {
    EchelonForm out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    Matrix red(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) red(i, j) = m(i, j);
    out.reduced = std::move(red);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m) {
    EchelonForm e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    EchelonForm e = rref(std::move(aug));
    Vector x(a.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, a.cols());
    }
    return x;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        Vector v(ambient);
        v[i] = 1;
        s.basis_.push_back(std::move(v));
        s.pivots_.push_back(i);
    }
    return s;
}

Vector Subspace::reduce(Vector v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        Rational f = v[pivots_[k]];
        if (f.is_zero()) continue;
        for (std::size_t j = pivots_[k]; j < n_; ++j)
            if (!basis_[k][j].is_zero()) v[j] -= f * basis_[k][j];
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::insert(const Vector& v) {
    if (v.size() != n_) throw PreconditionError("vector length differs from ambient dimension");
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p].is_zero()) ++p;
    if (p == n_) return false;
    Rational inv = r[p].inverse();
    for (std::size_t j = p; j < n_; ++j) r[j] *= inv;
    for (auto& b : basis_) {
        Rational f = b[p];
        if (f.is_zero()) continue;
        for (std::size_t j = p; j < n_; ++j)
            if (!r[j].is_zero()) b[j] -= f * r[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(r));
    return true;
}

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) throw PreconditionError("vector is not in the subspace");
    Vector c(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (o.n_ != n_) throw PreconditionError("ambient dimension mismatch");
    std::size_t a = dim(), b = o.dim();
    Matrix m(n_, a + b);
    for (std::size_t k = 0; k < a; ++k)
        for (std::size_t j = 0; j < n_; ++j) m(j, k) = basis_[k][j];
    for (std::size_t k = 0; k < b; ++k)
        for (std::size_t j = 0; j < n_; ++j) m(j, a + k) = -o.basis_[k][j];
    Subspace out(n_);
    for (const auto& x : kernel(m)) {
        Vector v(n_);
        for (std::size_t k = 0; k < a; ++k)
            if (!x[k].is_zero())
                for (std::size_t j = 0; j < n_; ++j) v[j] += x[k] * basis_[k][j];
        out.insert(v);
    }
    return out;
}

void to_json(nlohmann::json& j, const Matrix& m) {
    j = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(m.row(i));
}

void from_json(const nlohmann::json& j, Matrix& m) {
    std::vector<Vector> rows = j.get<std::vector<Vector>>();
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ValidationError("ragged matrix");
    m = Matrix::from_rows(rows, cols);
}

}  // namespace dcla
