#include "vhcx/todd_coxeter.hpp"

#include <algorithm>
#include <sstream>

#include "vhcx/error.hpp"
#include "vhcx/reidemeister_schreier.hpp"

namespace vhcx {

  std::string to_string(Strategy s) {
    return s == Strategy::hlt ? "hlt" : "felsch";
  }

  ////////////////////////////////////////////////////////////////////////
  // CosetTable
  ////////////////////////////////////////////////////////////////////////

  CosetTable::CosetTable(std::size_t                ngens,
                         std::size_t                index,
                         std::vector<std::uint32_t> table,
                         EnumerationStats           stats)
      : _ngens(ngens), _index(index), _table(std::move(table)), _stats(stats) {}

  namespace {

    // Breadth-first renumbering from coset 0. `raw` rows are indexed by the
    // old coset numbers listed in `live`; entries are old numbers.
    std::vector<std::uint32_t>
    standardize(std::size_t                        ncols,
                std::vector<std::int64_t> const&   raw,
                std::vector<std::int64_t> const&   live,
                std::int64_t                       start,
                std::size_t                        old_rows) {
      std::vector<std::int64_t> renum(old_rows, -1);
      std::vector<std::int64_t> order;
      order.reserve(live.size());
      renum[start] = 0;
      order.push_back(start);
      for (std::size_t k = 0; k < order.size(); ++k) {
        for (std::size_t x = 0; x < ncols; ++x) {
          auto d = raw[order[k] * ncols + x];
          if (d < 0) {
            throw StructureError("coset table is incomplete");
          }
          if (renum[d] < 0) {
            renum[d] = static_cast<std::int64_t>(order.size());
            order.push_back(d);
          }
        }
      }
      if (order.size() != live.size()) {
        throw StructureError("coset table is not transitive");
      }
      std::vector<std::uint32_t> out(order.size() * ncols);
      for (std::size_t k = 0; k < order.size(); ++k) {
        for (std::size_t x = 0; x < ncols; ++x) {
          out[k * ncols + x]
              = static_cast<std::uint32_t>(renum[raw[order[k] * ncols + x]]);
        }
      }
      return out;
    }

  }  // namespace

  CosetTable
  CosetTable::from_action(std::vector<std::vector<std::uint32_t>> const& images,
                          EnumerationStats                               stats) {
    auto ngens = images.size();
    auto n     = ngens == 0 ? std::size_t{1} : images[0].size();
    auto ncols = 2 * ngens;
    std::vector<std::int64_t> raw(n * ncols, -1);
    for (std::size_t g = 0; g < ngens; ++g) {
      if (images[g].size() != n) {
        throw StructureError("generator actions of different sizes");
      }
      for (std::size_t c = 0; c < n; ++c) {
        auto d = images[g][c];
        if (d >= n || raw[d * ncols + 2 * g + 1] >= 0) {
          throw StructureError("generator action is not a permutation");
        }
        raw[c * ncols + 2 * g]     = d;
        raw[d * ncols + 2 * g + 1] = static_cast<std::int64_t>(c);
      }
    }
    std::vector<std::int64_t> live(n);
    for (std::size_t c = 0; c < n; ++c) {
      live[c] = static_cast<std::int64_t>(c);
    }
    auto table = standardize(ncols, raw, live, 0, n);
    if (stats.total_defined == 0) {
      stats.total_defined = n;
      stats.max_live      = n;
    }
    return CosetTable(ngens, n, std::move(table), stats);
  }

  std::uint32_t CosetTable::trace(std::uint32_t coset, Word const& w) const {
    for (auto x : w.letters()) {
      coset = (*this)(coset, column(x));
    }
    return coset;
  }

  bool CosetTable::verify(Presentation const&      p,
                          std::vector<Word> const& subgens) const {
    if (p.num_generators() != _ngens) {
      return false;
    }
    for (std::size_t x = 0; x < num_columns(); ++x) {
      std::vector<bool> hit(_index, false);
      for (std::size_t c = 0; c < _index; ++c) {
        auto d = (*this)(c, x);
        if (d >= _index || hit[d] || (*this)(d, x ^ 1) != c) {
          return false;
        }
        hit[d] = true;
      }
    }
    for (auto const& r : p.relators()) {
      for (std::uint32_t c = 0; c < _index; ++c) {
        if (trace(c, r) != c) {
          return false;
        }
      }
    }
    for (auto const& w : subgens) {
      if (trace(0, w) != 0) {
        return false;
      }
    }
    return true;
  }

  std::string CosetTable::to_tsv(std::vector<std::string> const& names) const {
    std::ostringstream out;
    out << "coset";
    for (std::size_t g = 0; g < _ngens; ++g) {
      auto nm = g < names.size() ? names[g] : "g" + std::to_string(g + 1);
      out << '\t' << nm << '\t' << nm << "^-1";
    }
    out << '\n';
    for (std::size_t c = 0; c < _index; ++c) {
      out << c + 1;
      for (std::size_t x = 0; x < num_columns(); ++x) {
        out << '\t' << (*this)(c, x) + 1;
      }
      out << '\n';
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumerator
  ////////////////////////////////////////////////////////////////////////

  class Enumerator {
   public:
    Enumerator(Presentation const&       p,
               std::vector<Word> const&  subgens,
               EnumerationOptions const& opts)
        : _ncols(2 * p.num_generators()), _opts(opts) {
      _stats.strategy = opts.strategy;
      for (auto const& r : p.relators()) {
        if (!r.empty()) {
          _rels.push_back(columns(r));
        }
      }
      for (auto const& w : subgens) {
        if (!w.empty()) {
          _subgens.push_back(columns(w));
        }
      }
      if (opts.strategy == Strategy::felsch) {
        _conjugates.resize(_ncols);
        for (auto const& r : p.relators()) {
          if (r.empty()) {
            continue;
          }
          for (auto const& w : {r, r.inverse()}) {
            for (std::size_t i = 0; i < w.length(); ++i) {
              auto rot = columns(w.rotated(i));
              auto& bucket = _conjugates[rot[0]];
              if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) {
                bucket.push_back(std::move(rot));
              }
            }
          }
        }
      }
      new_coset();
    }

    EnumerationResult run() {
      EnumerationResult res;
      res.cap = _opts.cap;
      bool ok = _opts.strategy == Strategy::hlt ? run_hlt() : run_felsch();
      res.stats = _stats;
      if (ok) {
        res.table = finish();
      }
      return res;
    }

   private:
    using coset_type = std::int64_t;
    static constexpr coset_type undefined = -1;

    enum class Status { ok, no_room };

    static std::vector<std::size_t> columns(Word const& w) {
      std::vector<std::size_t> out;
      for (auto x : w.letters()) {
        out.push_back(CosetTable::column(x));
      }
      return out;
    }

    coset_type& entry(coset_type c, std::size_t x) {
      return _table[static_cast<std::size_t>(c) * _ncols + x];
    }

    bool live(coset_type c) const {
      return _parent[c] == c;
    }

    coset_type rep(coset_type c) {
      auto r = c;
      while (_parent[r] != r) {
        r = _parent[r];
      }
      while (_parent[c] != r) {
        auto next  = _parent[c];
        _parent[c] = r;
        c          = next;
      }
      return r;
    }

    coset_type new_coset() {
      auto d = static_cast<coset_type>(_parent.size());
      _parent.push_back(d);
      _table.resize(_table.size() + _ncols, undefined);
      ++_live;
      ++_stats.total_defined;
      _stats.max_live = std::max(_stats.max_live, _live);
      return d;
    }

    bool full() const {
      return _parent.size() >= _opts.cap;
    }

    Status define(coset_type c, std::size_t x) {
      if (full()) {
        return Status::no_room;
      }
      auto d              = new_coset();
      entry(c, x)         = d;
      entry(d, x ^ 1)     = c;
      if (_opts.strategy == Strategy::felsch) {
        _deductions.emplace_back(c, x);
      }
      return Status::ok;
    }

    void set_entry(coset_type c, std::size_t x, coset_type d) {
      entry(c, x)     = d;
      entry(d, x ^ 1) = c;
      if (_opts.strategy == Strategy::felsch) {
        _deductions.emplace_back(c, x);
      }
    }

    void merge(coset_type a, coset_type b, std::vector<coset_type>& queue) {
      a = rep(a);
      b = rep(b);
      if (a == b) {
        return;
      }
      if (b < a) {
        std::swap(a, b);
      }
      _parent[b] = a;
      --_live;
      queue.push_back(b);
    }

    void coincidence(coset_type a, coset_type b) {
      std::vector<coset_type> queue;
      merge(a, b, queue);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        auto g = queue[i];
        for (std::size_t x = 0; x < _ncols; ++x) {
          auto d = entry(g, x);
          if (d == undefined) {
            continue;
          }
          entry(d, x ^ 1) = undefined;
          auto mu         = rep(g);
          auto nu         = rep(d);
          if (entry(mu, x) != undefined) {
            merge(nu, entry(mu, x), queue);
          } else if (entry(nu, x ^ 1) != undefined) {
            merge(mu, entry(nu, x ^ 1), queue);
          } else {
            set_entry(mu, x, nu);
          }
        }
      }
    }

    // Traces w from both ends of coset a. Fills a single gap by deduction,
    // detects coincidences, and (when `fill`) defines new cosets until the
    // relator closes.
    Status scan(coset_type a, std::vector<std::size_t> const& w, bool fill) {
      std::size_t r = w.size();
      coset_type  f = a, b = a;
      std::size_t i = 0, j = r;  // w[i..j) still untraced
      while (true) {
        while (i < j && entry(f, w[i]) != undefined) {
          f = entry(f, w[i]);
          ++i;
        }
        if (i == j) {
          if (f != b) {
            coincidence(f, b);
          }
          return Status::ok;
        }
        while (j > i && entry(b, w[j - 1] ^ 1) != undefined) {
          b = entry(b, w[j - 1] ^ 1);
          --j;
        }
        if (i == j) {
          coincidence(f, b);
          return Status::ok;
        }
        if (j == i + 1) {
          set_entry(f, w[i], b);
          return Status::ok;
        }
        if (!fill) {
          return Status::ok;
        }
        if (define(f, w[i]) == Status::no_room) {
          return Status::no_room;
        }
      }
    }

    // Non-defining pass over every live coset and relator.
    void lookahead() {
      for (coset_type c = 0; c < static_cast<coset_type>(_parent.size()); ++c) {
        for (auto const& r : _rels) {
          if (!live(c)) {
            break;
          }
          scan(c, r, false);
        }
      }
      _deductions.clear();
    }

    // Renumbers live cosets contiguously, preserving order. Returns the new
    // number of the first live coset >= `pos`.
    coset_type compact(coset_type pos) {
      std::vector<coset_type> renum(_parent.size(), undefined);
      coset_type              next = 0;
      for (std::size_t c = 0; c < _parent.size(); ++c) {
        if (_parent[c] == static_cast<coset_type>(c)) {
          renum[c] = next++;
        }
      }
      std::vector<coset_type> table(static_cast<std::size_t>(next) * _ncols,
                                    undefined);
      coset_type              new_pos = next;
      for (std::size_t c = 0; c < _parent.size(); ++c) {
        if (renum[c] == undefined) {
          continue;
        }
        if (new_pos == next && static_cast<coset_type>(c) >= pos) {
          new_pos = renum[c];
        }
        for (std::size_t x = 0; x < _ncols; ++x) {
          auto d = _table[c * _ncols + x];
          if (d != undefined) {
            table[renum[c] * _ncols + x] = renum[rep(d)];
          }
        }
      }
      _table = std::move(table);
      _parent.resize(static_cast<std::size_t>(next));
      for (coset_type c = 0; c < next; ++c) {
        _parent[c] = c;
      }
      std::vector<std::pair<coset_type, std::size_t>> deds;
      for (auto [c, x] : _deductions) {
        if (renum[c] != undefined) {
          deds.emplace_back(renum[c], x);
        }
      }
      _deductions = std::move(deds);
      return new_pos;
    }

    // Called when the table is full; false if no room could be recovered.
    bool recover(coset_type& pos) {
      if (_opts.strategy == Strategy::hlt) {
        lookahead();
      } else {
        process_deductions();
      }
      pos = compact(pos);
      return !full();
    }

    bool scan_subgroup_generators() {
      for (std::size_t k = 0; k < _subgens.size(); ++k) {
        coset_type pos = 0;
        if (scan(0, _subgens[k], true) == Status::no_room) {
          if (!recover(pos)) {
            return false;
          }
          --k;  // rescan
          continue;
        }
        process_deductions();
      }
      return true;
    }

    bool run_hlt() {
      if (!scan_subgroup_generators()) {
        return false;
      }
      coset_type a = 0;
      while (a < static_cast<coset_type>(_parent.size())) {
        if (!live(a)) {
          ++a;
          continue;
        }
        bool restart = false;
        for (auto const& r : _rels) {
          if (scan(a, r, true) == Status::no_room) {
            if (!recover(a)) {
              return false;
            }
            restart = true;
            break;
          }
          if (!live(a)) {
            break;
          }
        }
        if (restart) {
          continue;
        }
        for (std::size_t x = 0; x < _ncols && live(a); ++x) {
          if (entry(a, x) == undefined && define(a, x) == Status::no_room) {
            if (!recover(a)) {
              return false;
            }
            restart = true;
            break;
          }
        }
        if (!restart) {
          ++a;
        }
      }
      return true;
    }

    void process_deductions() {
      if (_opts.strategy != Strategy::felsch) {
        _deductions.clear();
        return;
      }
      while (!_deductions.empty()) {
        auto [c, x] = _deductions.back();
        _deductions.pop_back();
        if (!live(c) || entry(c, x) == undefined) {
          continue;
        }
        for (auto const& w : _conjugates[x]) {
          if (!live(c)) {
            break;
          }
          scan(c, w, false);
        }
        if (!live(c) || entry(c, x) == undefined) {
          continue;
        }
        auto d = entry(c, x);
        for (auto const& w : _conjugates[x ^ 1]) {
          if (!live(d)) {
            break;
          }
          scan(d, w, false);
        }
      }
    }

    bool run_felsch() {
      if (!scan_subgroup_generators()) {
        return false;
      }
      coset_type a = 0;
      while (a < static_cast<coset_type>(_parent.size())) {
        if (!live(a)) {
          ++a;
          continue;
        }
        bool restart = false;
        for (std::size_t x = 0; x < _ncols && live(a); ++x) {
          if (entry(a, x) != undefined) {
            continue;
          }
          if (define(a, x) == Status::no_room) {
            if (!recover(a)) {
              return false;
            }
            restart = true;
            break;
          }
          process_deductions();
        }
        if (!restart) {
          ++a;
        }
      }
      return true;
    }

    CosetTable finish() {
      std::vector<coset_type> live_list;
      for (std::size_t c = 0; c < _parent.size(); ++c) {
        if (live(static_cast<coset_type>(c))) {
          live_list.push_back(static_cast<coset_type>(c));
        }
      }
      auto table = standardize(_ncols, _table, live_list, 0, _parent.size());
      return CosetTable(_ncols / 2, live_list.size(), std::move(table), _stats);
    }

    std::size_t                              _ncols;
    EnumerationOptions                       _opts;
    EnumerationStats                         _stats;
    std::vector<std::vector<std::size_t>>    _rels;
    std::vector<std::vector<std::size_t>>    _subgens;
    std::vector<std::vector<std::vector<std::size_t>>> _conjugates;
    std::vector<coset_type>                  _table;
    std::vector<coset_type>                  _parent;
    std::vector<std::pair<coset_type, std::size_t>> _deductions;
    std::size_t                              _live = 0;
  };

  EnumerationResult enumerate(Presentation const&       p,
                              std::vector<Word> const&  subgens,
                              EnumerationOptions const& opts) {
    if (opts.cap < 1) {
      throw StructureError("coset cap must be at least 1");
    }
    Enumerator e(p, subgens, opts);
    auto       res = e.run();
    if (res.table && !res.table->verify(p, subgens)) {
      throw Error("internal error: enumeration produced an invalid table");
    }
    return res;
  }

  NormalClosureResult normal_closure_index(Presentation const&       p,
                                           Word const&               w,
                                           EnumerationOptions const& opts) {
    NormalClosureResult out{p, {}};
    out.quotient.add_relator(w);
    out.enumeration = enumerate(out.quotient, {}, opts);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite quotients
  ////////////////////////////////////////////////////////////////////////

  FiniteQuotient quotient_structure(CosetTable const&   t,
                                    Presentation const& quotient) {
    if (!t.verify(quotient, {})) {
      throw StructureError("coset table does not belong to the presentation");
    }
    FiniteQuotient q;
    q.order           = t.index();
    q.representatives = schreier_transversal(t).representatives;
    auto n            = q.order;
    q.multiplication.assign(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        q.multiplication[i][j] = t.trace(i, q.representatives[j]);
      }
    }
    // Coset i is the element g_i with 0 . g_i = i; the table is the regular
    // action exactly when left multiplication by g_i is well defined, which
    // is what the checks below confirm.
    q.inverse.assign(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (q.multiplication[0][i] != i || q.multiplication[i][0] != i) {
        throw StructureError("quotient has no two-sided identity");
      }
      auto it = std::find(q.multiplication[i].begin(),
                          q.multiplication[i].end(), 0u);
      if (it == q.multiplication[i].end()) {
        throw StructureError("quotient element without inverse");
      }
      auto j = static_cast<std::uint32_t>(it - q.multiplication[i].begin());
      if (q.multiplication[j][i] != 0) {
        throw StructureError("quotient element without two-sided inverse");
      }
      q.inverse[i] = j;
    }
    // associativity: exhaustive for small orders, a deterministic sample
    // otherwise
    std::size_t step = n <= 64 ? 1 : n / 17 + 1;
    for (std::size_t i = 0; i < n; i += step) {
      for (std::size_t j = 0; j < n; j += step) {
        for (std::size_t k = 0; k < n; k += step) {
          auto lhs = q.multiplication[q.multiplication[i][j]][k];
          auto rhs = q.multiplication[i][q.multiplication[j][k]];
          if (lhs != rhs) {
            throw StructureError("quotient multiplication is not associative");
          }
        }
      }
    }
    q.abelian = true;
    for (std::size_t i = 0; i < n && q.abelian; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (q.multiplication[i][j] != q.multiplication[j][i]) {
          q.abelian = false;
          break;
        }
      }
    }
    if (q.abelian) {
      auto inv = abelianization(quotient);
      BigInt prod = 1;
      for (auto const& d : inv.torsion) {
        prod *= d;
      }
      if (inv.free_rank != 0 || prod != n) {
        throw Error("internal error: abelian invariants disagree with the "
                    "quotient order");
      }
      q.invariants = std::move(inv);
    }
    return q;
  }

}  // namespace vhcx
