// Command-line front end. Exit status: 0 success, 1 verification failure,
// 2 usage or parse error.

#include <cstdio>    // for printf
#include <fstream>   // for ofstream
#include <iostream>  // for cout, cerr
#include <string>    // for string

#include <CLI11.hpp>

#include "tnorm/finite_tomonoid.hpp"
#include "tnorm/spec_io.hpp"
#include "tnorm/verify.hpp"

namespace {

  using namespace tnorm;

  constexpr int ok          = 0;
  constexpr int failed      = 1;
  constexpr int usage_error = 2;

  struct UsageError : Error {
    using Error::Error;
  };

  std::string witness_str(std::vector<double> const& w) {
    std::string s;
    for (double x : w) {
      s += (s.empty() ? "" : " ") + format_double(x);
    }
    return s;
  }

  void print_table(Table const& t) {
    for (auto const& row : t) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        std::cout << (j ? " " : "") << row[j];
      }
      std::cout << '\n';
    }
  }

  LoadedSpec load_coextension(std::string const& path) {
    LoadedSpec s = load_spec_file(path);
    if (!s.is_coextension()) {
      throw UsageError(path + " is a tomonoid table, not a coextension spec");
    }
    return s;
  }

  int cmd_check(std::string const& path) {
    SpecDocument const doc = read_spec_file(path);
    if (!doc.tomonoid) {
      throw UsageError(path + " has no tomonoid section");
    }
    AxiomReport const rep = check_axioms(*doc.tomonoid);
    if (!rep.structural.empty()) {
      std::cout << "malformed table: " << rep.structural << '\n';
      return failed;
    }
    for (char const* axiom :
         {"associativity", "commutativity", "identity", "negativity", "monotonicity"}) {
      std::string line = std::string(axiom) + ": ok";
      for (AxiomViolation const& v : rep.violations) {
        if (v.axiom == axiom) {
          line = std::string(axiom) + ": violated at";
          for (std::size_t x : v.witness) {
            line += " " + std::to_string(x);
          }
        }
      }
      std::cout << line << '\n';
    }
    return rep.ok() ? ok : failed;
  }

  int cmd_filters(std::string const& path) {
    FiniteTomonoid const t = tomonoid_of(read_spec_file(path));
    for (Filter const& f : filters(t)) {
      Congruence const c = congruence_by_filter(t, f);
      std::cout << "filter [" << f.low << "," << f.n - 1 << "] classes:";
      for (auto const& [lo, hi] : c.classes) {
        std::cout << " {" << lo << ".." << hi << "}";
      }
      std::cout << "\nquotient\n";
      print_table(quotient(t, f).table());
    }
    return ok;
  }

  int cmd_build(std::string const& path) {
    LoadedSpec const         s = load_coextension(path);
    IntervalPartition const& p = s.partition();
    QuotientModel const&     q = s.quotient();
    std::cout << "classes\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
      ClassShape const& c    = p[i];
      CompositionKind   kind = s.arch ? s.arch->kind(i) : s.semi->kind(i);
      std::cout << "  " << i << "  ";
      if (c.is_singleton()) {
        std::cout << "{" << format_double(c.lo) << "}";
      } else {
        std::cout << (c.leftClosed ? '[' : '(') << format_double(c.lo) << ","
                  << format_double(c.hi) << (c.rightClosed ? ']' : ')');
      }
      std::cout << "  " << (i + 1 == p.size() ? "filter" : c.chain ? "chain" : to_string(kind))
                << '\n';
    }
    std::cout << "pairs (R,T -> S: case)\n";
    auto thin = [&p](std::size_t i) { return p[i].is_singleton() || p[i].chain; };
    std::size_t const F = p.size() - 1;
    for (std::size_t R = 0; R < F; ++R) {
      for (std::size_t T = 0; T <= R; ++T) {
        if (thin(R) || thin(T)) {
          continue;
        }
        std::size_t const S = q.class_product(R, T);
        FamilyId          fam = FamilyId::trivial;
        for (PairFamily const& pf : s.doc.pairs) {
          if (pf.R == R && pf.T == T) {
            fam = pf.family;
          }
        }
        std::cout << "  " << R << "," << T << " -> " << S << ": "
                  << (q.is_maximal(R, T) ? to_string(fam) : "trivial (not maximal)") << '\n';
      }
    }
    return ok;
  }

  int cmd_eval(std::string const& path, double a, double b) {
    LoadedSpec const s = load_coextension(path);
    if (!(a >= 0 && a <= 1 && b >= 0 && b <= 1)) {
      throw UsageError("arguments must lie in [0,1]");
    }
    std::printf("%.15g\n", s.fn()(a, b));
    return ok;
  }

  int cmd_grid(std::string const& path, std::size_t n, std::string const& out) {
    LoadedSpec const          s   = load_coextension(path);
    TnormFn const             f   = s.fn();
    std::vector<double> const pts = grid_points(n);
    std::ofstream             os(out);
    if (!os) {
      throw UsageError("cannot write " + out);
    }
    os << "a,b,value\n";
    for (double a : pts) {
      for (double b : pts) {
        os << format_double(a) << ',' << format_double(b) << ',' << format_double(f(a, b))
           << '\n';
      }
    }
    std::cout << "wrote " << pts.size() * pts.size() << " rows to " << out << '\n';
    return ok;
  }

  int cmd_verify(std::string const& path, std::size_t n, double tol, std::string const& csv) {
    LoadedSpec const          s      = load_coextension(path);
    TnormFn const             f      = s.fn();
    std::vector<double> const bounds = boundaries(s.partition());
    std::vector<GridReport>   reps   = check_axioms_grid(f, n, tol, bounds);
    reps.push_back(check_left_continuity(f, bounds, 1e-7, grid_points(n)));
    bool all = true;
    for (GridReport const& r : reps) {
      all = all && r.pass();
      std::cout << (r.pass() ? "PASS " : "FAIL ") << r.axiom
                << "  max deviation " << format_double(r.maxDeviation) << " (tol "
                << format_double(r.tol) << ", " << r.samples << " samples)";
      if (!r.pass()) {
        std::cout << " at " << witness_str(r.witness);
      }
      std::cout << '\n';
    }
    if (!csv.empty()) {
      std::ofstream os(csv);
      if (!os) {
        throw UsageError("cannot write " + csv);
      }
      os << "axiom,max_deviation,tol,samples,pass,witness\n";
      for (GridReport const& r : reps) {
        os << r.axiom << ',' << format_double(r.maxDeviation) << ',' << format_double(r.tol)
           << ',' << r.samples << ',' << (r.pass() ? 1 : 0) << ',' << witness_str(r.witness)
           << '\n';
      }
    }
    return all ? ok : failed;
  }

  int cmd_oracle_compare(std::string const&   path,
                         std::string const&   name,
                         std::size_t          n,
                         std::optional<double> tol) {
    LoadedSpec const s = load_coextension(path);
    TnormFn    g;
    try {
      g = oracle_fn(name);
    } catch (Error const& e) {
      throw UsageError(e.what());
    }
    std::vector<double> bounds = boundaries(s.partition());
    for (double x : oracle_boundaries(name)) {
      bounds.push_back(x);
    }
    GridReport const r = compare(s.fn(), g, n, bounds);
    std::cout << "max deviation " << format_double(r.maxDeviation) << " at "
              << witness_str(r.witness) << " (" << r.samples << " samples)\n";
    return tol && r.maxDeviation > *tol ? failed : ok;
  }

  int cmd_enumerate(std::size_t n) {
    std::vector<FiniteTomonoid> const all = enumerate_tomonoids(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::cout << (i ? "\n" : "") << "# " << i + 1 << '\n';
      print_table(all[i].table());
    }
    std::cout << "# total " << all.size() << '\n';
    return ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real coextensions of finite tomonoids and the t-norms they produce"};
  app.require_subcommand(1);

  std::string           spec, oracleName, out, csv;
  double                a = 0, b = 0, tol = 1e-9;
  std::size_t           n = 201;
  std::optional<double> cmpTol;

  auto* check = app.add_subcommand("check", "Check the axioms of a tomonoid table");
  check->add_option("spec", spec, "Spec file")->required();
  auto* filt = app.add_subcommand("filters", "List filters and quotients of a tomonoid");
  filt->add_option("spec", spec, "Spec file")->required();
  auto* build = app.add_subcommand("build", "Validate a coextension spec and list its cases");
  build->add_option("spec", spec, "Spec file")->required();
  auto* eval = app.add_subcommand("eval", "Evaluate a coextension at (a,b)");
  eval->add_option("spec", spec, "Spec file")->required();
  eval->add_option("a", a)->required();
  eval->add_option("b", b)->required();
  auto* grid = app.add_subcommand("grid", "Write the operation on a grid as CSV a,b,value");
  grid->add_option("spec", spec, "Spec file")->required();
  grid->add_option("--n", n, "Grid resolution")->check(CLI::Range(2, 100000));
  grid->add_option("--out", out, "Output path")->required();
  auto* verify = app.add_subcommand("verify", "Grid-check the t-norm axioms");
  verify->add_option("spec", spec, "Spec file")->required();
  verify->add_option("--n", n, "Grid resolution")->check(CLI::Range(2, 100000));
  verify->add_option("--tol", tol, "Tolerance");
  verify->add_option("--csv", csv, "Also write the reports as CSV");
  auto* cmp = app.add_subcommand("oracle-compare", "Compare with a closed-form t-norm");
  cmp->add_option("spec", spec, "Spec file")->required();
  cmp->add_option("--oracle", oracleName, "odot1 .. odot4")->required();
  cmp->add_option("--n", n, "Grid resolution")->check(CLI::Range(2, 100000));
  cmp->add_option("--tol", cmpTol, "Exit 1 when the deviation exceeds this");
  auto* enumerate = app.add_subcommand("enumerate", "List all tomonoids on an n-chain");
  enumerate->add_option("--n", n, "Chain size")->required()->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*check) {
      return cmd_check(spec);
    }
    if (*filt) {
      return cmd_filters(spec);
    }
    if (*build) {
      return cmd_build(spec);
    }
    if (*eval) {
      return cmd_eval(spec, a, b);
    }
    if (*grid) {
      return cmd_grid(spec, n, out);
    }
    if (*verify) {
      return cmd_verify(spec, n, tol, csv);
    }
    if (*cmp) {
      return cmd_oracle_compare(spec, oracleName, n, cmpTol);
    }
    return cmd_enumerate(n);
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return usage_error;
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_error;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return failed;
  }
}
