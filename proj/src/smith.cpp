#include "vhcx/smith.hpp"

#include <utility>

#include "vhcx/error.hpp"

namespace vhcx {

  IntMatrix::IntMatrix(std::vector<std::vector<long long>> const& rows)
      : _rows(rows.size()), _cols(rows.empty() ? 0 : rows[0].size()) {
    _data.reserve(_rows * _cols);
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw StructureError("ragged matrix rows");
      }
      for (auto x : r) {
        _data.emplace_back(x);
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::operator*(IntMatrix const& o) const {
    if (_cols != o._rows) {
      throw StructureError("matrix dimension mismatch");
    }
    IntMatrix out(_rows, o._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        auto const& a = (*this)(i, k);
        if (a == 0) {
          continue;
        }
        for (std::size_t j = 0; j < o._cols; ++j) {
          out(i, j) += a * o(k, j);
        }
      }
    }
    return out;
  }

  BigInt IntMatrix::determinant() const {
    if (_rows != _cols) {
      throw StructureError("determinant of a non-square matrix");
    }
    auto   a    = *this;
    auto   n    = _rows;
    BigInt prev = 1;
    int    sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t r = k + 1;
        while (r < n && a(r, k) == 0) {
          ++r;
        }
        if (r == n) {
          return 0;
        }
        a.swap_rows(k, r);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
      }
      prev = a(k, k);
    }
    return n == 0 ? BigInt(1) : sign * a(n - 1, n - 1);
  }

  void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < _cols; ++k) {
      std::swap((*this)(i, k), (*this)(j, k));
    }
  }

  void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < _rows; ++k) {
      std::swap((*this)(k, i), (*this)(k, j));
    }
  }

  void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, BigInt const& q) {
    for (std::size_t k = 0; k < _cols; ++k) {
      if ((*this)(j, k) != 0) {
        (*this)(i, k) += q * (*this)(j, k);
      }
    }
  }

  void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, BigInt const& q) {
    for (std::size_t k = 0; k < _rows; ++k) {
      if ((*this)(k, j) != 0) {
        (*this)(k, i) += q * (*this)(k, j);
      }
    }
  }

  void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < _cols; ++k) {
      (*this)(i, k) = -(*this)(i, k);
    }
  }

  void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t k = 0; k < _rows; ++k) {
      (*this)(k, i) = -(*this)(k, i);
    }
  }

  namespace {

    // Keeps M = U * D * V while D is transformed. A row operation E on D is
    // compensated by the inverse column operation on U; a column operation on
    // D by the inverse row operation on V.
    struct Reducer {
      IntMatrix d, u, v;

      void swap_rows(std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        u.swap_cols(i, j);
      }
      void swap_cols(std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        v.swap_rows(i, j);
      }
      // row i += q row j
      void add_row(std::size_t i, std::size_t j, BigInt const& q) {
        d.add_row_multiple(i, j, q);
        u.add_col_multiple(j, i, -q);
      }
      // col i += q col j
      void add_col(std::size_t i, std::size_t j, BigInt const& q) {
        d.add_col_multiple(i, j, q);
        v.add_row_multiple(j, i, -q);
      }
      void negate_row(std::size_t i) {
        d.negate_row(i);
        u.negate_col(i);
      }
    };

    BigInt babs(BigInt const& x) {
      return x < 0 ? BigInt(-x) : x;
    }

  }  // namespace

  SmithForm smith_normal_form(IntMatrix const& m) {
    Reducer r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    auto&   d     = r.d;
    auto    rows  = m.rows();
    auto    cols  = m.cols();
    auto    limit = std::min(rows, cols);

    std::size_t t = 0;
    for (; t < limit; ++t) {
      // pivot: least nonzero |entry| in the trailing block
      auto find_min = [&](bool whole_block) {
        std::pair<std::size_t, std::size_t> best{rows, cols};
        BigInt                              bv = 0;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (!whole_block && i != t && j != t) {
              continue;
            }
            if (d(i, j) != 0 && (bv == 0 || babs(d(i, j)) < bv)) {
              bv   = babs(d(i, j));
              best = {i, j};
            }
          }
        }
        return best;
      };
      auto [pi, pj] = find_min(true);
      if (pi == rows) {
        break;
      }
      while (true) {
        if (pi != t) {
          r.swap_rows(t, pi);
        }
        if (pj != t) {
          r.swap_cols(t, pj);
        }
        auto const p = d(t, t);
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (d(i, t) != 0) {
            BigInt q = d(i, t) / p;
            r.add_row(i, t, -q);
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(t, j) != 0) {
            BigInt q = d(t, j) / p;
            r.add_col(j, t, -q);
          }
        }
        // remainders smaller than the pivot left in row/column t?
        std::tie(pi, pj) = find_min(false);
        if (pi != t || pj != t) {
          continue;
        }
        // divisibility of the trailing block by the pivot
        bool fixed = false;
        for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (d(i, j) % d(t, t) != 0) {
              r.add_row(t, i, 1);
              fixed = true;
              break;
            }
          }
        }
        if (!fixed) {
          break;
        }
        std::tie(pi, pj) = find_min(false);
      }
      if (d(t, t) < 0) {
        r.negate_row(t);
      }
    }

    SmithForm out;
    out.rank = t;
    for (std::size_t i = 0; i < t; ++i) {
      out.invariant_factors.push_back(d(i, i));
    }
    out.left     = std::move(r.u);
    out.diagonal = std::move(r.d);
    out.right    = std::move(r.v);
    if (out.left * out.diagonal * out.right != m) {
      throw Error("internal error: Smith form does not reproduce its input");
    }
    return out;
  }

}  // namespace vhcx
