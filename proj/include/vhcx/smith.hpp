#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vhcx/perm_group.hpp"  // BigInt

namespace vhcx {

  // Dense integer matrix with exact entries.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}
    IntMatrix(std::vector<std::vector<long long>> const& rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    BigInt& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    BigInt const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    IntMatrix operator*(IntMatrix const& other) const;
    bool      operator==(IntMatrix const&) const = default;

    // Exact determinant (fraction-free Bareiss); square matrices only.
    BigInt determinant() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += q * row j
    void add_row_multiple(std::size_t i, std::size_t j, BigInt const& q);
    // col i += q * col j
    void add_col_multiple(std::size_t i, std::size_t j, BigInt const& q);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

   private:
    std::size_t         _rows = 0;
    std::size_t         _cols = 0;
    std::vector<BigInt> _data;
  };

  struct SmithForm {
    IntMatrix           left;      // U, unimodular
    IntMatrix           diagonal;  // D
    IntMatrix           right;     // V, unimodular; M = U * D * V
    std::vector<BigInt> invariant_factors;  // nonzero diagonal, d1 | d2 | ...
    std::size_t         rank = 0;
  };

  // Elementary row/column operations with the pivot of least absolute value.
  SmithForm smith_normal_form(IntMatrix const& m);

}  // namespace vhcx
