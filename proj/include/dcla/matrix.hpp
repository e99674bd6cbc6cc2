#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rational.hpp"

namespace dcla {

using Vector = std::vector<Rational>;

// Dense exact rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);  // 0-based E_ij
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;

    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
    friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    Matrix transpose() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
// Row vector times matrix.
Vector row_times(const Vector& v, const Matrix& a);
bool is_zero(const Vector& v);

struct EchelonForm {
    Matrix reduced;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

EchelonForm rref(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of the null space {x : m x = 0}.
std::vector<Vector> kernel(const Matrix& m);
// Some x with a x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Subspace of Q^n kept as a reduced row echelon basis; coordinates of a member
// vector are read off at the pivot columns.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : n_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Reduces v against the basis; zero iff v is in the subspace.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
    // Adds v; returns false if it was already in the span.
    bool insert(const Vector& v);
    // Coordinates of a member vector in the basis.
    Vector coordinates(const Vector& v) const;
    Subspace intersect(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    std::size_t n_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

void to_json(nlohmann::json& j, const Matrix& m);
void from_json(const nlohmann::json& j, Matrix& m);

}  // namespace dcla
