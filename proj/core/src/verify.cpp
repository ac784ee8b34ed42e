#include "tnorm/verify.hpp"

#include <algorithm>  // for sort, unique, max, min, minmax
#include <cmath>      // for abs, ldexp, nextafter
#include <thread>     // for thread, hardware_concurrency

namespace tnorm {

  namespace {
    // a <= b throughout; the closed forms are stated for (larger, smaller).
    // Pieces are rearranged around their class borders so that small
    // differences are taken exactly, and a piece whose exact value lies
    // strictly inside an open class is kept there after rounding.

    double above(double x, double lo) {
      return x > lo ? x : std::nextafter(lo, 2.0);
    }

    double below(double x, double hi) {
      return x < hi ? x : std::nextafter(hi, -1.0);
    }

    double odot1(double a, double b) {
      return sum_at_most_one(a, b) ? 0.0 : b;
    }

    double odot2(double b, double a) {
      constexpr double f1 = 0.2, f2 = 0.4, f3 = 0.6, f4 = 0.8;
      if (a >= f4) {
        return std::max(a - (1 - b), f4);
      }
      if (b >= f4) {
        if ((a > f1 && a < f2) || (a > f3 && a < f4)) {
          return a;
        }
        if (a >= f2 && a <= f3) {
          return std::max(a - 3 * (1 - b), f2);
        }
        return std::max(a - 2 * (1 - b), 0.0);
      }
      if (b > f3) {
        if (a > f3) {
          return a;
        }
        if (a >= f2) {
          return f2;
        }
        if (a > f1) {
          return sum_at_most_one(a, b) ? 0.0 : a;
        }
        return 0;
      }
      if (a >= f2) {
        return std::max(2.0 / 3.0 * (a - (1 - b)), 0.0);
      }
      return 0;
    }

    double odot3(double b, double a) {
      double const db = b - 0.75;
      if (a > 0.75) {
        // 4ab - 3a - 3b + 3
        return above(0.75 + 4 * db * (a - 0.75), 0.75);
      }
      if (b > 0.75) {
        if (a > 0.5) {
          // 4ab - 3a - 2b + 2
          return above(0.5 + 4 * db * (a - 0.5), 0.5);
        }
        if (a > 0.25) {
          // 4ab - 3a - b + 1
          return above(0.25 + 4 * db * (a - 0.25), 0.25);
        }
        // (a + b - 1) / (4b - 3), which is 1/4 at a = 1/4
        if (a == 0.25) {
          return 0.25;
        }
        return below(std::max(((a - 0.25) + db) / (4 * db), 0.0), 0.25);
      }
      if (b > 0.5) {
        if (a > 0.5) {
          // 2/3 (2ab - a - b + 7/8)
          return above(0.25 + 4.0 / 3.0 * (a - 0.5) * (b - 0.5), 0.25);
        }
        if (a > 0.25) {
          // 1/4 (1 - 1 / (4 (4a - 1)(2b - 1)))
          return below(std::max(0.25 - 1 / (128 * (a - 0.25) * (b - 0.5)), 0.0), 0.25);
        }
      }
      return 0;
    }

    double odot4(double b, double a) {
      if (a > 0.75) {
        return a;
      }
      if (b > 0.75) {
        if (a > 0.5) {
          return std::min(a, b - 0.25);
        }
        if (a > 0.25) {
          return std::min(a, b - 0.5);
        }
        if (a == 0.25) {
          // no closed-form piece covers this point; monotonicity forces 1/4
          return 0.25;
        }
        return sum_at_most_one(a, b) ? 0.0 : a;
      }
      if (a > 0.5) {
        return std::min({a - 0.25, b - 0.25, 7.0 / 16.0});
      }
      if (b > 0.625 && a > 0.375) {
        return 0.125;
      }
      return 0;
    }

    using Closed = double (*)(double, double);

    Closed lookup(std::string const& name) {
      if (name == "odot1") {
        return odot1;
      }
      if (name == "odot2") {
        return odot2;
      }
      if (name == "odot3") {
        return odot3;
      }
      if (name == "odot4") {
        return odot4;
      }
      throw Error("unknown oracle '" + name + "'");
    }

    unsigned worker_count() {
      unsigned const n = std::thread::hardware_concurrency();
      return n == 0 ? 1 : n;
    }

    // Runs body(i, report) for i in [0, count) on all workers and merges.
    template <class Body>
    GridReport parallel(std::string const& axiom, double tol, std::size_t count, Body body) {
      unsigned const          workers = std::min<std::size_t>(worker_count(), count);
      std::vector<GridReport> parts(workers);
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          for (std::size_t i = w; i < count; i += workers) {
            body(i, parts[w]);
          }
        });
      }
      for (std::thread& t : threads) {
        t.join();
      }
      GridReport out;
      out.axiom = axiom;
      out.tol   = tol;
      for (GridReport const& r : parts) {
        out.merge(r);
      }
      return out;
    }

    std::vector<double> open_aware_samples(ClassShape const& c) {
      std::vector<double> s = sample_class(c, 7);
      if (!c.is_singleton()) {
        double const w = c.hi - c.lo;
        if (!c.leftClosed) {
          s.push_back(c.lo + 1e-6 * w);
        }
        if (!c.rightClosed) {
          s.push_back(c.hi - 1e-6 * w);
        }
      }
      return s;
    }
  }  // namespace

  std::vector<std::string> const& oracle_names() {
    static std::vector<std::string> const names{"odot1", "odot2", "odot3", "odot4"};
    return names;
  }

  double oracle(std::string const& name, double a, double b) {
    Closed const f = lookup(name);
    if (!(a >= 0 && a <= 1 && b >= 0 && b <= 1)) {
      throw Error("oracle arguments must lie in [0,1]");
    }
    auto const [lo, hi] = std::minmax(a, b);
    return f(hi, lo);
  }

  TnormFn oracle_fn(std::string const& name) {
    Closed const f = lookup(name);
    return [f](double a, double b) {
      auto const [lo, hi] = std::minmax(a, b);
      return f(hi, lo);
    };
  }

  std::vector<double> oracle_boundaries(std::string const& name) {
    lookup(name);
    if (name == "odot1") {
      return {0, 0.5, 1};
    }
    if (name == "odot2") {
      return {0, 0.2, 0.4, 0.6, 0.8, 1};
    }
    if (name == "odot3") {
      return {0, 0.25, 0.5, 0.75, 1};
    }
    return {0, 0.25, 0.375, 0.5, 0.625, 0.75, 1};
  }

  std::vector<double> grid_points(std::size_t n, std::vector<double> const& boundaries) {
    if (n < 2) {
      throw Error("grid resolution must be at least 2");
    }
    std::vector<double> g;
    for (std::size_t k = 0; k < n; ++k) {
      g.push_back(static_cast<double>(k) / static_cast<double>(n - 1));
    }
    double const probe = std::ldexp(1.0, -30);
    for (double b : boundaries) {
      for (double x : {b - probe, b, b + probe}) {
        if (x >= 0 && x <= 1) {
          g.push_back(x);
        }
      }
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
  }

  std::vector<GridReport> check_axioms_grid(TnormFn const&             f,
                                            std::size_t                n,
                                            double                     tol,
                                            std::vector<double> const& boundaries) {
    std::vector<double> const g = grid_points(n, boundaries);
    std::size_t const         m = g.size();

    // tabulate once; products that leave the grid are evaluated directly
    std::vector<double> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = f(g[i], g[j]);
      }
    }
    auto at = [&](std::size_t i, std::size_t j) { return table[i * m + j]; };

    GridReport assoc = parallel("associativity", tol, m, [&](std::size_t i, GridReport& r) {
      for (std::size_t j = 0; j < m; ++j) {
        double const xy = at(i, j);
        for (std::size_t k = 0; k < m; ++k) {
          double const lhs = f(xy, g[k]);
          double const rhs = f(g[i], at(j, k));
          double const dev = std::abs(lhs - rhs);
          if (dev > r.maxDeviation || r.witness.empty() || dev != dev) {
            r.record(dev, {g[i], g[j], g[k]});
          }
        }
        r.samples += m;
      }
    });

    GridReport comm;
    comm.axiom = "commutativity";
    comm.tol   = tol;
    GridReport ident;
    ident.axiom = "identity";
    ident.tol   = tol;
    GridReport mono;
    mono.axiom = "monotonicity";
    mono.tol   = tol;
    for (std::size_t i = 0; i < m; ++i) {
      ident.record(std::max(std::abs(f(g[i], 1) - g[i]), std::abs(f(1, g[i]) - g[i])), {g[i]});
      ++ident.samples;
      for (std::size_t j = 0; j < m; ++j) {
        comm.record(std::abs(at(i, j) - at(j, i)), {g[i], g[j]});
        ++comm.samples;
        if (i + 1 < m) {
          // no decrease from a to the next grid point, in either argument
          double const d1 = at(i, j) - at(i + 1, j);
          double const d2 = at(j, i) - at(j, i + 1);
          mono.record(std::max({d1, d2, 0.0}), {g[i], g[i + 1], g[j]});
          ++mono.samples;
        }
      }
    }
    return {assoc, comm, ident, mono};
  }

  GridReport check_left_continuity(TnormFn const&             f,
                                   std::vector<double> const& boundaries,
                                   double                     tol,
                                   std::vector<double> const& points) {
    std::vector<double> as = boundaries;
    as.insert(as.end(), points.begin(), points.end());
    std::vector<double> const bs = grid_points(101, boundaries);

    GridReport rep;
    rep.axiom = "left-continuity";
    rep.tol   = tol;
    for (double a : as) {
      if (!(a > 0 && a <= 1)) {
        continue;  // only a in (0,1] is constrained
      }
      for (double b : bs) {
        // x_k = a - 2^-k for k = 10..40; the limit is extrapolated from
        // the last two terms, which removes the first-order slope
        double const value = f(a, b);
        double       prev  = value;
        double       last  = value;
        for (int k = 10; k <= 40; ++k) {
          double const x = a - std::ldexp(1.0, -k);
          if (x >= 0) {
            prev = last;
            last = f(x, b);
          }
        }
        double const limit = 2 * last - prev;
        rep.record(std::abs(limit - value), {a, b});
        ++rep.samples;
      }
    }
    return rep;
  }

  FiniteTomonoid recover_quotient(TnormFn const& f, IntervalPartition const& p) {
    std::size_t const n = p.size();
    std::vector<std::vector<double>> samples;
    for (ClassShape const& c : p.classes) {
      samples.push_back(open_aware_samples(c));
    }
    Table table(n, std::vector<std::size_t>(n));
    for (std::size_t R = 0; R < n; ++R) {
      for (std::size_t T = 0; T < n; ++T) {
        bool        first = true;
        std::size_t cls   = 0;
        for (double r : samples[R]) {
          for (double t : samples[T]) {
            std::size_t const c = locate(p, f(r, t)).cls;
            if (first) {
              cls   = c;
              first = false;
            } else if (c != cls) {
              throw Error("classes " + std::to_string(R) + " and " + std::to_string(T)
                          + " multiply into both class " + std::to_string(cls) + " and class "
                          + std::to_string(c) + ", e.g. at (" + std::to_string(r) + ","
                          + std::to_string(t) + ")");
            }
          }
        }
        table[R][T] = cls;
      }
    }
    return FiniteTomonoid(std::move(table));
  }

  GridReport compare(TnormFn const&             f,
                     TnormFn const&             g,
                     std::size_t                n,
                     std::vector<double> const& boundaries) {
    std::vector<double> const pts = grid_points(n, boundaries);
    return parallel("compare", 0, pts.size(), [&](std::size_t i, GridReport& r) {
      for (double b : pts) {
        double const dev = std::abs(f(pts[i], b) - g(pts[i], b));
        if (dev > r.maxDeviation || r.witness.empty() || dev != dev) {
          r.record(dev, {pts[i], b});
        }
      }
      r.samples += pts.size();
    });
  }

  GridReport commuting_report(TnormFn const&           f,
                              IntervalPartition const& p,
                              std::size_t              sampleCount) {
    GridReport rep;
    rep.axiom = "commuting-action";
    if (p.classes.empty()) {
      return rep;
    }
    std::vector<double> fs;
    for (double x : sample_class(p.classes.back(), sampleCount)) {
      fs.push_back(x);
    }
    std::vector<double> pts;
    for (ClassShape const& c : p.classes) {
      std::vector<double> s = sample_class(c, sampleCount);
      pts.insert(pts.end(), s.begin(), s.end());
    }
    for (double phi : fs) {
      for (double r : pts) {
        for (double t : pts) {
          double const lhs = f(f(r, phi), t);
          double const rhs = f(f(r, t), phi);
          rep.record(std::abs(lhs - rhs), {phi, r, t});
          ++rep.samples;
        }
      }
    }
    return rep;
  }

}  // namespace tnorm
