#pragma once

#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <algorithm>

#include "vhcx/complex.hpp"
#include "vhcx/perm_group.hpp"

namespace test {

  inline vhcx::SquareComplex corpus(std::string const& name) {
    return vhcx::read_complex_file(std::string(VHCX_CORPUS_DIR) + "/" + name + ".vh");
  }

  inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20040420);
    return g;
  }

  using Images = std::vector<unsigned>;

  // (i)^(p*q) = q[p[i]]
  inline Images compose(Images const& p, Images const& q) {
    Images r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] = q[p[i]];
    }
    return r;
  }

  // Closure of the generators by breadth-first multiplication.
  inline std::set<Images> brute_closure(std::vector<Images> const& gens, std::size_t degree) {
    Images id(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      id[i] = static_cast<unsigned>(i);
    }
    std::set<Images>    seen{id};
    std::vector<Images> todo{id};
    while (!todo.empty()) {
      auto x = todo.back();
      todo.pop_back();
      for (auto const& g : gens) {
        auto y = compose(x, g);
        if (seen.insert(y).second) {
          todo.push_back(std::move(y));
        }
      }
    }
    return seen;
  }

  struct Run {
    int         code = -1;
    std::string out;
  };

  inline Run run_cli(std::string const& args) {
    std::string cmd = std::string(VHCX_CLI) + " " + args + " 2>/dev/null";
    Run         r;
    FILE*       f = popen(cmd.c_str(), "r");
    if (f == nullptr) {
      return r;
    }
    char buf[4096];
    while (auto n = fread(buf, 1, sizeof buf, f)) {
      r.out.append(buf, n);
    }
    int status = pclose(f);
    r.code     = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  using Mat = std::vector<std::vector<long long>>;

  // Plain fraction-free elimination on a small square matrix.
  inline vhcx::BigInt det(std::vector<std::vector<vhcx::BigInt>> a) {
    auto   n    = a.size();
    vhcx::BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t r = k + 1;
        while (r < n && a[r][k] == 0) {
          ++r;
        }
        if (r == n) {
          return 0;
        }
        std::swap(a[k], a[r]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
      }
      prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
  }

  inline vhcx::BigInt minor(Mat const& m, std::vector<std::size_t> const& rows,
               std::vector<std::size_t> const& cols) {
    std::vector<std::vector<vhcx::BigInt>> a;
    for (auto r : rows) {
      std::vector<vhcx::BigInt> row;
      for (auto c : cols) {
        row.push_back(m[r][c]);
      }
      a.push_back(row);
    }
    return det(a);
  }

  // gcd of the k x k minors over (at most `limit`) row subsets.
  inline vhcx::BigInt minor_gcd(Mat const& m, std::size_t k, std::size_t limit) {
    auto                     R = m.size(), C = m[0].size();
    vhcx::BigInt                   g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::vector<bool>        rsel(R, false), csel(C, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    std::size_t seen = 0;
    do {
      rows.clear();
      for (std::size_t i = 0; i < R; ++i) {
        if (rsel[i]) {
          rows.push_back(i);
        }
      }
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        cols.clear();
        for (std::size_t j = 0; j < C; ++j) {
          if (csel[j]) {
            cols.push_back(j);
          }
        }
        auto d = minor(m, rows, cols);
        g      = boost::multiprecision::gcd(g, d < 0 ? vhcx::BigInt(-d) : d);
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (++seen < limit && std::prev_permutation(rsel.begin(), rsel.end()));
    return g;
  }

  // gcd of k x k minors on the first k columns over random row subsets.
  inline vhcx::BigInt sampled_minor_gcd(Mat const& m, std::size_t k, std::size_t samples) {
    std::vector<std::size_t> rows(m.size()), cols(k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i] = i;
    }
    for (std::size_t j = 0; j < k; ++j) {
      cols[j] = j;
    }
    vhcx::BigInt g = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      std::shuffle(rows.begin(), rows.end(), rng());
      std::vector<std::size_t> pick(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(k));
      auto d = minor(m, pick, cols);
      g      = boost::multiprecision::gcd(g, d < 0 ? vhcx::BigInt(-d) : d);
    }
    return g;
  }

}  // namespace test
