#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "maxplus/scalar.hpp"

namespace maxplus {

/// Column vector over the max-plus semiring.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n, const Scalar& fill = Scalar::epsilon()) : entries_(n, fill) {}
    Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}
    explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    Scalar& operator[](std::size_t i) { return entries_[i]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// True when every entry is epsilon.
    bool is_zero() const;

    std::string to_string() const;

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<Scalar> entries_;
};

/**
 * Dense square matrix over the max-plus semiring.
 *
 * Indices are 0-based in code; files and reports use 1-based indices.
 * Entry (i, j) is the arc j -> i of the associated digraph.
 */
class Matrix {
public:
    /// n x n matrix filled with `fill` (epsilon by default). Throws DimensionMismatch for n == 0.
    explicit Matrix(std::size_t n, const Scalar& fill = Scalar::epsilon());
    /// Row-wise literal; throws DimensionMismatch unless square and non-empty.
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    /// Max-plus identity: 0 on the diagonal, epsilon elsewhere.
    static Matrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    Vector column(std::size_t j) const;
    Matrix transposed() const;

    /// Canonical single-line serialization; equal matrices give equal keys.
    std::string key() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_;
    std::vector<Scalar> entries_;
};

/// Entrywise max.
Matrix oplus(const Matrix& a, const Matrix& b);
/// (AB)(i,j) = max_k a(i,k) + b(k,j).
Matrix otimes(const Matrix& a, const Matrix& b);
Vector otimes(const Matrix& a, const Vector& x);

/// l-fold product, l >= 1.
Matrix power(const Matrix& a, unsigned long l);

/// Adds `shift` to every finite entry. Throws NullScalar if shift is epsilon.
Matrix otimes(const Scalar& shift, const Matrix& a);
Vector otimes(const Scalar& shift, const Vector& x);

/// Multi-line rendering used in reports: one row per line, tokens padded.
std::string to_string(const Matrix& a);

}  // namespace maxplus
