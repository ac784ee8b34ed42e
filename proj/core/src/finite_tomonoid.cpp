#include "tnorm/finite_tomonoid.hpp"

#include <algorithm>  // for max, min, find_if
#include <string>     // for to_string

namespace tnorm {

  bool AxiomReport::has(std::string const& axiom) const {
    return std::find_if(violations.begin(),
                        violations.end(),
                        [&axiom](AxiomViolation const& v) {
                          return v.axiom == axiom;
                        })
           != violations.end();
  }

  namespace {
    std::string structural_error(Table const& t) {
      if (t.empty()) {
        return "table is empty";
      }
      std::size_t const n = t.size();
      for (std::size_t a = 0; a < n; ++a) {
        if (t[a].size() != n) {
          return "row " + std::to_string(a) + " has " + std::to_string(t[a].size())
                 + " entries, expected " + std::to_string(n);
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (t[a][b] >= n) {
            return "entry (" + std::to_string(a) + "," + std::to_string(b)
                   + ") = " + std::to_string(t[a][b]) + " is out of range";
          }
        }
      }
      return {};
    }

    bool associative(Table const& t) {
      std::size_t const n = t.size();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (t[t[a][b]][c] != t[a][t[b][c]]) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  AxiomReport check_axioms(Table const& t) {
    AxiomReport report;
    report.structural = structural_error(t);
    if (!report.structural.empty()) {
      return report;
    }
    std::size_t const n   = t.size();
    auto              add = [&report](char const* name, std::vector<std::size_t> w) {
      if (!report.has(name)) {
        report.violations.push_back({name, std::move(w)});
      }
    };

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (t[a][b] != t[b][a]) {
          add("commutativity", {a, b});
        }
        if (t[a][b] > std::min(a, b)) {
          add("negativity", {a, b});
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            add("associativity", {a, b, c});
          }
        }
      }
      if (t[a][n - 1] != a || t[n - 1][a] != a) {
        add("identity", {a});
      }
    }
    for (std::size_t a = 0; a + 1 < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t[a][c] > t[a + 1][c]) {
          add("monotonicity", {a, a + 1, c});
        }
        if (t[c][a] > t[c][a + 1]) {
          add("monotonicity", {c, a, a + 1});
        }
      }
    }
    return report;
  }

  FiniteTomonoid::FiniteTomonoid(Table table) : _table(std::move(table)) {
    AxiomReport r = check_axioms(_table);
    if (!r.structural.empty()) {
      throw Error("malformed table: " + r.structural);
    }
    if (!r.ok()) {
      throw Error("table violates " + r.violations.front().axiom);
    }
  }

  FiniteTomonoid FiniteTomonoid::lukasiewicz(std::size_t n) {
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = a + b >= n - 1 ? a + b - (n - 1) : 0;
      }
    }
    return FiniteTomonoid(std::move(t));
  }

  FiniteTomonoid FiniteTomonoid::minimum(std::size_t n) {
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = std::min(a, b);
      }
    }
    return FiniteTomonoid(std::move(t));
  }

  std::size_t Congruence::class_of(std::size_t a) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].first <= a && a <= classes[i].second) {
        return i;
      }
    }
    throw Error("element " + std::to_string(a) + " is not covered by the congruence");
  }

  std::vector<std::size_t> idempotents(FiniteTomonoid const& t) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < t.size(); ++a) {
      if (t(a, a) == a) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<Filter> filters(FiniteTomonoid const& t) {
    // d^< filters would need d to be the infimum of the elements above it,
    // which never happens on a finite chain.
    std::vector<Filter> out;
    for (std::size_t d : idempotents(t)) {
      out.push_back({d, t.size()});
    }
    return out;
  }

  Congruence congruence_by_filter(FiniteTomonoid const& t, Filter const& f) {
    std::size_t const n = t.size();
    // a < b are related iff b * g <= a for some g in F; g = low suffices
    // since translations are monotone.
    auto related = [&](std::size_t a, std::size_t b) {
      return t(b, f.low) <= a;
    };
    Congruence c;
    std::size_t start = 0;
    for (std::size_t a = 1; a <= n; ++a) {
      if (a == n || !related(a - 1, a)) {
        c.classes.emplace_back(start, a - 1);
        start = a;
      }
    }
    return c;
  }

  FiniteTomonoid quotient(FiniteTomonoid const& t, Filter const& f) {
    Congruence  c = congruence_by_filter(t, f);
    std::size_t m = c.classes.size();
    Table       q(m, std::vector<std::size_t>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t k = c.class_of(t(c.classes[i].first, c.classes[j].first));
        // well-definedness: every representative pair lands in class k
        for (std::size_t a = c.classes[i].first; a <= c.classes[i].second; ++a) {
          for (std::size_t b = c.classes[j].first; b <= c.classes[j].second; ++b) {
            if (c.class_of(t(a, b)) != k) {
              throw Error("filter congruence is not compatible with the operation");
            }
          }
        }
        q[i][j] = k;
      }
    }
    return FiniteTomonoid(std::move(q));
  }

  std::size_t residuum(FiniteTomonoid const& t, std::size_t a, std::size_t b) {
    std::size_t c = t.top();
    while (t(a, c) > b) {
      --c;  // t(a, 0) = 0 <= b stops the loop
    }
    return c;
  }

  std::pair<std::size_t, std::size_t>
  maximal_pair(FiniteTomonoid const& t, std::size_t r, std::size_t u) {
    std::size_t s    = t(r, u);
    std::size_t rbar = residuum(t, u, s);
    std::size_t ubar = residuum(t, rbar, s);
    return {rbar, ubar};
  }

  bool is_maximal_pair(FiniteTomonoid const& t, std::size_t r, std::size_t u) {
    return maximal_pair(t, r, u) == std::pair<std::size_t, std::size_t>(r, u);
  }

  std::vector<std::vector<std::size_t>> cayley(FiniteTomonoid const& t) {
    return t.table();
  }

  bool is_archimedean(FiniteTomonoid const& t) {
    std::size_t const n = t.size();
    for (std::size_t b = 0; b + 1 < n; ++b) {
      // b^n; powers of b stabilise within n steps
      std::size_t p = b;
      for (std::size_t k = 1; k < n; ++k) {
        p = t(p, b);
      }
      for (std::size_t a = 0; a < b; ++a) {
        if (p > a) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_semilattice(FiniteTomonoid const& t) {
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        if (t(a, b) != std::min(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    struct Enumerator {
      std::size_t                                      n;
      Table                                            t;
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      std::vector<FiniteTomonoid>                      out;

      void run(std::size_t i) {
        if (i == cells.size()) {
          if (associative(t)) {
            out.emplace_back(t);
          }
          return;
        }
        auto [a, b]    = cells[i];
        std::size_t lo = 0;
        if (a > 0) {
          lo = std::max(lo, t[a - 1][b]);
        }
        if (b > 0) {
          lo = std::max(lo, t[a][b - 1]);
        }
        for (std::size_t v = lo; v <= a; ++v) {
          t[a][b] = t[b][a] = v;
          run(i + 1);
        }
      }
    };
  }  // namespace

  std::vector<FiniteTomonoid> enumerate_tomonoids(std::size_t n) {
    if (n == 0) {
      throw Error("enumeration needs a non-empty chain");
    }
    if (n > max_enumeration_size) {
      throw Error("enumeration is limited to chains of size "
                  + std::to_string(max_enumeration_size));
    }
    Enumerator e{n, Table(n, std::vector<std::size_t>(n, 0)), {}, {}};
    for (std::size_t a = 0; a < n; ++a) {
      e.t[a][n - 1] = e.t[n - 1][a] = a;
    }
    // upper triangle, row-major: this order makes the output
    // lexicographic on the full row-major table
    for (std::size_t a = 0; a + 1 < n; ++a) {
      for (std::size_t b = a; b + 1 < n; ++b) {
        e.cells.emplace_back(a, b);
      }
    }
    e.run(0);
    return std::move(e.out);
  }

}  // namespace tnorm
