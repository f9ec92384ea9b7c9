#include "qperm/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "qperm/errors.hpp"

namespace qperm {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw InvalidArgumentError("matrix dimensions must be positive");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BigRational(1);
    return m;
}

std::string RationalMatrix::to_json_string() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < rows_; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < cols_; ++c) row.push_back(at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string RationalMatrix::to_csv_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out += ',';
            out += at(r, c).to_string();
        }
        out += '\n';
    }
    return out;
}

RationalMatrix RationalMatrix::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array() || j.empty()) {
        throw InvalidArgumentError("malformed matrix JSON");
    }
    std::size_t cols = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty()) throw InvalidArgumentError("malformed matrix JSON");
        if (cols == 0) cols = row.size();
        if (row.size() != cols) throw InvalidArgumentError("ragged matrix JSON");
    }
    RationalMatrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_string()) throw InvalidArgumentError("malformed matrix JSON");
            m.at(r, c) = BigRational::from_string(j[r][c].get<std::string>());
        }
    }
    return m;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgumentError("matmul dimension mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

BigRational trace(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw InvalidArgumentError("trace requires a square matrix");
    BigRational t;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a.at(i, i);
    return t;
}

namespace {

// Exact by the Bareiss minor identity; the remainder is checked, not assumed.
void divide_exact(BigInt& value, const BigInt& divisor) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
    if (sgn(r) != 0) throw std::logic_error("fraction-free elimination: inexact division");
    value = std::move(q);
}

}  // namespace

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != a.cols()) throw InvalidArgumentError("solve requires a square system");
    if (b.rows() != a.rows()) throw InvalidArgumentError("solve: right-hand side row mismatch");
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    const std::size_t w = n + m;

    // Clear denominators row by row; row scalings leave the solution intact.
    std::vector<BigInt> work(n * w);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt scale(1);
        for (std::size_t j = 0; j < n; ++j) scale = lcm(scale, a.at(i, j).denominator());
        for (std::size_t j = 0; j < m; ++j) scale = lcm(scale, b.at(i, j).denominator());
        for (std::size_t j = 0; j < n; ++j) {
            work[i * w + j] = a.at(i, j).numerator() * (scale / a.at(i, j).denominator());
        }
        for (std::size_t j = 0; j < m; ++j) {
            work[i * w + n + j] = b.at(i, j).numerator() * (scale / b.at(i, j).denominator());
        }
    }

    BigInt previous_pivot(1);
    BigInt t;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && sgn(work[pivot_row * w + k]) == 0) ++pivot_row;
        if (pivot_row == n) {
            throw SingularMatrixError(k, "singular system: no pivot in column " +
                                             std::to_string(k));
        }
        if (pivot_row != k) {
            for (std::size_t j = 0; j < w; ++j) {
                std::swap(work[pivot_row * w + j], work[k * w + j]);
            }
        }
        const BigInt& pivot = work[k * w + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            BigInt& lead = work[i * w + k];
            for (std::size_t j = k + 1; j < w; ++j) {
                t = pivot * work[i * w + j] - lead * work[k * w + j];
                divide_exact(t, previous_pivot);
                work[i * w + j] = t;
            }
            lead = 0;
        }
        previous_pivot = pivot;
    }

    RationalMatrix x(n, m);
    for (std::size_t i = n; i-- > 0;) {
        BigRational diagonal(work[i * w + i]);
        for (std::size_t c = 0; c < m; ++c) {
            BigRational acc(work[i * w + n + c]);
            for (std::size_t j = i + 1; j < n; ++j) {
                acc -= BigRational(work[i * w + j]) * x.at(j, c);
            }
            x.at(i, c) = acc / diagonal;
        }
    }
    return x;
}

RationalMatrix inverse(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw InvalidArgumentError("inverse requires a square matrix");
    return solve(a, RationalMatrix::identity(a.rows()));
}

}  // namespace qperm
