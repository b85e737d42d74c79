#include "maxplus/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxplus/errors.hpp"

namespace maxplus {

bool Vector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_epsilon(); });
}

std::string Vector::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ", ";
        out += entries_[i].to_string();
    }
    return out + "]";
}

Matrix::Matrix(std::size_t n, const Scalar& fill) : n_(n), entries_(n * n, fill) {
    if (n == 0) throw DimensionMismatch("matrix dimension must be positive");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : Matrix(from_rows(std::vector<std::vector<Scalar>>(rows.begin(), rows.end()))) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw DimensionMismatch("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(rows.size()));
        std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * m.n_));
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::zero();
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(n_);
    for (std::size_t i = 0; i < n_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::string Matrix::key() const {
    std::string out = std::to_string(n_);
    for (const auto& s : entries_) {
        out += ' ';
        out += s.to_string();
    }
    return out;
}

namespace {

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b)
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Matrix oplus(const Matrix& a, const Matrix& b) {
    require_same_size(a.size(), b.size());
    Matrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = oplus(a(i, j), b(i, j));
    return c;
}

Matrix otimes(const Matrix& a, const Matrix& b) {
    require_same_size(a.size(), b.size());
    const std::size_t n = a.size();
    Matrix c(n);
    Rational sum;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar best;
            for (std::size_t k = 0; k < n; ++k) {
                if (a(i, k).is_epsilon() || b(k, j).is_epsilon()) continue;
                sum = a(i, k).value() + b(k, j).value();
                if (best.is_epsilon() || sum > best.value()) best = Scalar(sum);
            }
            c(i, j) = std::move(best);
        }
    }
    return c;
}

Vector otimes(const Matrix& a, const Vector& x) {
    require_same_size(a.size(), x.size());
    Vector y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Scalar best;
        for (std::size_t k = 0; k < a.size(); ++k) best = oplus(best, otimes(a(i, k), x[k]));
        y[i] = std::move(best);
    }
    return y;
}

Matrix power(const Matrix& a, unsigned long l) {
    if (l == 0) throw std::invalid_argument("matrix power exponent must be at least 1");
    // Square-and-multiply; all powers of a commute so the order is irrelevant.
    Matrix result = a;
    Matrix base = a;
    unsigned long rest = l - 1;
    while (rest > 0) {
        if (rest & 1UL) result = otimes(result, base);
        rest >>= 1;
        if (rest) base = otimes(base, base);
    }
    return result;
}

Matrix otimes(const Scalar& shift, const Matrix& a) {
    if (shift.is_epsilon()) throw NullScalar("cannot scale a matrix by epsilon");
    Matrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = otimes(shift, a(i, j));
    return c;
}

Vector otimes(const Scalar& shift, const Vector& x) {
    if (shift.is_epsilon()) throw NullScalar("cannot scale a vector by epsilon");
    Vector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = otimes(shift, x[i]);
    return y;
}

std::string to_string(const Matrix& a) {
    std::size_t width = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) width = std::max(width, a(i, j).to_string().size());
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            auto token = a(i, j).to_string();
            if (j) out += ' ';
            out += std::string(width - token.size(), ' ') + token;
        }
        out += '\n';
    }
    return out;
}

}  // namespace maxplus
