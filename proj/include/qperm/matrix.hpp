#pragma once

#include <string>
#include <vector>

#include "qperm/rational.hpp"

namespace qperm {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigRational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigRational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    // Cells are "p/q" (or "p") in both formats; JSON is an array of row
    // arrays, CSV one row per line. from_json_string round-trips the former.
    std::string to_json_string() const;
    std::string to_csv_string() const;
    static RationalMatrix from_json_string(const std::string& text);

private:
    std::size_t rows_, cols_;
    std::vector<BigRational> entries_;
};

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
BigRational trace(const RationalMatrix& a);

// Exact X with A·X = B via fraction-free (Bareiss) elimination; pivots are
// chosen deterministically as the first nonzero entry in the column, rows in
// order. On integer input the eliminated entries stay integral (they are
// minors of the augmented matrix) and no denominator in X exceeds |det A|.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix inverse(const RationalMatrix& a);

}  // namespace qperm
