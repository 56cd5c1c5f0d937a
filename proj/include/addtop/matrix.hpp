#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "addtop/field.hpp"

namespace addtop {

// Dense exact matrix, row-major. All entries share one field.
class Matrix {
public:
    Matrix() : field_(Field::rationals()) {}
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix zero(const Field& f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
    // Row-major integer literals, reduced into the field.
    static Matrix ofInts(const Field& f, std::size_t rows, std::size_t cols,
                         const std::vector<long>& entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool isZero() const;

    Matrix col(std::size_t j) const;
    Matrix hstack(const Matrix& o) const; // same rows
    Matrix vstack(const Matrix& o) const; // same cols
    Matrix subCols(std::size_t from, std::size_t to) const; // [from, to)

    std::string str() const;

private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;

    void checkField(const Matrix& o) const;
};

// Reduced row echelon form; pivotCols lists pivot columns left to right.
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivotCols;
};

Echelon rowReduce(const Matrix& m);

std::size_t rank(const Matrix& m);

// Columns form a basis of the right null space (deterministic: free
// variables in increasing column order, canonical unit completion).
Matrix kernelBasis(const Matrix& m);

// Some x with m*x = b (b may have several columns), or nullopt.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

// Canonical basis of the column span: reduced column echelon form with
// zero columns dropped. Equal spans yield identical matrices.
Matrix colSpanBasis(const Matrix& m);

struct SpanOps {
    Matrix sum;          // canonical basis of span(a) + span(b)
    Matrix intersection; // canonical basis of span(a) ∩ span(b)
    bool containment;    // span(a) ⊆ span(b)
    bool equality;
};

SpanOps spanOps(const Matrix& a, const Matrix& b);

bool spanContains(const Matrix& sub, const Matrix& sup); // span(sub) ⊆ span(sup)

// Canonical basis of the preimage of span(target) under m, i.e.
// {x : m*x ∈ span(target)}.
Matrix preimage(const Matrix& m, const Matrix& target);

// All vectors of F_p^d in lexicographic coordinate order (includes zero).
std::vector<Matrix> allVectors(const Field& f, std::size_t d);

// All subspaces of F_p^d as canonical column-span bases, ordered by
// dimension then lexicographically. Throws Unsupported over Q.
std::vector<Matrix> allSubspaces(const Field& f, std::size_t d);

} // namespace addtop
