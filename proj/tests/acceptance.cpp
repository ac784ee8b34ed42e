// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes or fails only in one of the
// documented, unattainable ways listed in `known`; 1 otherwise.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "tnorm/finite_tomonoid.hpp"
#include "tnorm/verify.hpp"

using namespace tnorm;
using namespace tnorm::testing;

namespace {

  using Clock = std::chrono::steady_clock;

  // Criteria whose literal statement cannot hold; see the README.
  std::set<std::string> const known = {"3a", "3b"};

  int hard_failures = 0;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  void line(std::string const& id, bool pass, std::string const& what) {
    char const* tag = pass ? "PASS" : known.contains(id) ? "FAIL (known, see README)" : "FAIL";
    std::printf("[%s] %-4s %s\n", tag, id.c_str(), what.c_str());
    std::fflush(stdout);
    if (!pass && !known.contains(id)) {
      ++hard_failures;
    }
  }

  std::string fmt(char const* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
  }

  std::vector<double> all_boundaries(LoadedSpec const& s, std::string const& oracleName) {
    std::vector<double> b = boundaries(s.partition());
    for (double x : oracle_boundaries(oracleName)) {
      b.push_back(x);
    }
    return b;
  }

  // 1. evaluator against closed form, 1001 x 1001 grid plus borders
  void oracle_equivalence() {
    for (int k = 1; k <= 4; ++k) {
      std::string const name = "odot" + std::to_string(k);
      auto const        t0   = Clock::now();
      LoadedSpec const  s    = load(name + ".spec");
      GridReport const  r    = compare(s.fn(), oracle_fn(name), 1001, all_boundaries(s, name));
      double const      secs = seconds_since(t0);
      line("1",
           r.maxDeviation <= 1e-12 && secs < 10,
           name + ": max deviation " + fmt("%.3g", r.maxDeviation) + " <= 1e-12 over "
               + std::to_string(r.samples) + " points, " + fmt("%.2f", secs) + " s < 10 s");
    }
  }

  // 2. axiom grids for oracle and evaluator, left continuity at borders
  void axiom_suite() {
    for (int k = 1; k <= 4; ++k) {
      std::string const name = "odot" + std::to_string(k);
      LoadedSpec const  s    = load(name + ".spec");
      std::vector<double> const b = all_boundaries(s, name);
      std::vector<std::pair<std::string, TnormFn>> const subjects = {
          {name + " oracle", oracle_fn(name)}, {name + " evaluator", s.fn()}};
      for (auto const& [label, f] : subjects) {
        auto const              t0   = Clock::now();
        std::vector<GridReport> reps = check_axioms_grid(f, 201, 1e-9, b);
        double const            secs = seconds_since(t0);
        std::string             detail;
        bool                    pass = secs < 60;
        for (GridReport const& r : reps) {
          pass = pass && r.pass();
          detail += " " + r.axiom + "=" + fmt("%.2g", r.maxDeviation);
        }
        line("2", pass,
             label + " axioms n=201 tol=1e-9 (" + std::to_string(reps[0].samples)
                 + " triples, " + fmt("%.1f", secs) + " s < 60 s):" + detail);
        GridReport const lc = check_left_continuity(f, b, 1e-7);
        line("2", lc.pass(),
             label + " left continuity at borders: max deviation "
                 + fmt("%.2g", lc.maxDeviation) + " <= 1e-7");
      }
    }
  }

  // 3. quotient recovery
  void quotient_recovery() {
    LoadedSpec const one = load("odot1.spec");
    IntervalPartition const literal = {{ClassShape::point(0),
                                        ClassShape::interval(0, 0.5, false, true),
                                        ClassShape::interval(0.5, 1, false, true)}};
    try {
      bool const eq = recover_quotient(one.fn(), literal) == FiniteTomonoid::lukasiewicz(3);
      line("3a", eq, "odot1 with {0},(0,1/2],(1/2,1] gives the 3-element Lukasiewicz chain");
    } catch (Error const& e) {
      line("3a", false,
           std::string("odot1 with {0},(0,1/2],(1/2,1]: not a congruence: ") + e.what());
    }
    try {
      bool const eq = recover_quotient(one.fn(), one.partition()) == FiniteTomonoid::lukasiewicz(3);
      line("3a'", eq, "odot1 with [0,1/2),{1/2},(1/2,1] gives the 3-element Lukasiewicz chain");
    } catch (Error const& e) {
      line("3a'", false, e.what());
    }

    LoadedSpec const two = load("odot2.spec");
    try {
      FiniteTomonoid const q = recover_quotient(two.fn(), two.partition());
      line("3b", q.size() == 5, "odot2 with its 5 classes gives a 5-element table");
    } catch (Error const& e) {
      line("3b", false, std::string("odot2 with its 5 classes: not a congruence: ") + e.what());
    }

    // The quotient odot2 is built over is the t-norm odot1: collapsing the
    // Lukasiewicz classes to their anchors must turn odot2 into odot1.
    QuotientModel const&    q    = two.quotient();
    IntervalPartition const p    = two.partition();
    TnormFn const           f    = two.fn();
    std::vector<double> const pts = grid_points(401, all_boundaries(two, "odot2"));
    double                  dev  = 0;
    for (double a : pts) {
      for (double b : pts) {
        double const lhs = q.collapse(locate(p, f(a, b)));
        double const rhs = oracle("odot1", q.collapse(locate(p, a)), q.collapse(locate(p, b)));
        dev              = std::max(dev, std::abs(lhs - rhs));
      }
    }
    line("3b'", dev <= 1e-12,
         "odot2 collapsed class by class equals odot1: max deviation " + fmt("%.2g", dev));

    for (char const* name : {"odot3.spec", "odot4.spec"}) {
      LoadedSpec const s = load(name);
      bool const eq = recover_quotient(s.fn(), s.partition()) == s.quotient().finite();
      line("3c", eq, std::string(name) + " recovers the table it was built over");
    }
  }

  // 4. exhaustive finite algebra
  void finite_algebra() {
    auto const  t0 = Clock::now();
    std::size_t tomonoids = 0, quotients = 0, badQuotient = 0, badCount = 0, badAdjoint = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      for (FiniteTomonoid const& t : enumerate_tomonoids(n)) {
        ++tomonoids;
        std::vector<Filter> const fs = filters(t);
        badCount += fs.size() != idempotents(t).size();
        for (Filter const& f : fs) {
          ++quotients;
          badQuotient += !check_axioms(quotient(t, f).table()).ok();
        }
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            std::size_t const r = residuum(t, a, b);
            for (std::size_t c = 0; c < n; ++c) {
              badAdjoint += (t(a, c) <= b) != (c <= r);
            }
          }
        }
      }
    }
    double const secs = seconds_since(t0);
    line("4", badQuotient == 0 && badCount == 0 && badAdjoint == 0 && secs < 30,
         std::to_string(tomonoids) + " tomonoids of size <= 5, " + std::to_string(quotients)
             + " quotients: " + std::to_string(badQuotient) + " bad quotients, "
             + std::to_string(badCount) + " filter/idempotent mismatches, "
             + std::to_string(badAdjoint) + " adjointness failures, " + fmt("%.2f", secs)
             + " s < 30 s");
  }

  // 5. classification table, and the validator on realised specs
  void classification() {
    using CK = CompositionKind;
    using O  = PairCase::Outcome;
    struct Expect {
      CK       R, S;
      O        outcome;
      FamilyId family;
    };
    // product filter
    std::vector<Expect> const table = {
        {CK::lukasiewicz, CK::lukasiewicz, O::family, FamilyId::lukLuk},
        {CK::lukasiewicz, CK::product, O::impossible, FamilyId::trivial},
        {CK::lukasiewicz, CK::reversedProduct, O::family, FamilyId::lukRprod},
        {CK::lukasiewicz, CK::power, O::impossible, FamilyId::trivial},
        {CK::product, CK::lukasiewicz, O::family, FamilyId::prodLuk},
        {CK::product, CK::product, O::family, FamilyId::prodProd},
        {CK::product, CK::reversedProduct, O::family, FamilyId::prodRprod},
        {CK::product, CK::power, O::family, FamilyId::prodPow},
        {CK::reversedProduct, CK::lukasiewicz, O::trivial, FamilyId::trivial},
        {CK::reversedProduct, CK::product, O::impossible, FamilyId::trivial},
        {CK::reversedProduct, CK::reversedProduct, O::family, FamilyId::rprodRprod},
        {CK::reversedProduct, CK::power, O::impossible, FamilyId::trivial},
        {CK::power, CK::lukasiewicz, O::trivial, FamilyId::trivial},
        {CK::power, CK::product, O::impossible, FamilyId::trivial},
        {CK::power, CK::reversedProduct, O::family, FamilyId::powRprod},
        {CK::power, CK::power, O::family, FamilyId::powPow},
    };
    int tableMismatch = 0, impossible = 0, families = 0, trivial = 0;
    for (Expect const& e : table) {
      tableMismatch += pair_case(e.R, e.S, FilterKind::productFilter, PairContext::maximal)
                       != PairCase{e.outcome, e.family};
      bool const ll = e.R == CK::lukasiewicz && e.S == CK::lukasiewicz;
      tableMismatch += pair_case(e.R, e.S, FilterKind::lukasiewiczFilter, PairContext::maximal)
                       != (ll ? PairCase{O::family, FamilyId::lukLuk} : PairCase{O::kindMismatch});
      impossible += e.outcome == O::impossible;
      families += e.outcome == O::family;
      trivial += e.outcome == O::trivial;
    }
    line("5", tableMismatch == 0 && impossible == 5 && families == 9 && trivial == 2,
         "4x4 kinds x 2 filters: " + std::to_string(tableMismatch) + " mismatches; "
             + std::to_string(impossible) + " impossible, " + std::to_string(families)
             + " families under a product filter, 1 under a Lukasiewicz filter, "
             + std::to_string(trivial) + " trivial");

    // Through validate_spec: build a spec in which each kind pair occurs
    // as a maximal diagonal pair and look at what is said about that pair.
    int wrong = 0, realised = 0;
    std::string firstWrong;
    auto run = [&](Expect const& e, FilterKind filter) {
      auto const rp = realize_pair(e.R, e.S, filter);
      if (!rp) {
        ++wrong;
        firstWrong = firstWrong.empty() ? std::string("no realisation for ") + to_string(e.R)
                                              + " -> " + to_string(e.S)
                                        : firstWrong;
        return;
      }
      ++realised;
      ArchCoextensionSpec spec = rp->spec;
      if (e.outcome == O::family) {
        spec.pairs.push_back(
            {rp->R, rp->R, e.family, std::nullopt, ZMap::affine(interior_parameter(e.family), 0), {}});
      }
      ValidationReport const rep = validate_spec(spec);
      std::string const      at  = "pair (" + std::to_string(rp->R) + "," + std::to_string(rp->R) + "): ";
      bool const saysImpossible  = rep.mentions(at + "impossible combination");
      bool const saysWrongKind   = rep.mentions(at + "class kinds do not fit")
                                 || rep.mentions(at + "does not match the class kinds")
                                 || rep.mentions(at + "missing family")
                                 || rep.mentions(at + "pair is trivial");
      bool const good = e.outcome == O::impossible ? saysImpossible : !saysImpossible && !saysWrongKind;
      if (!good) {
        ++wrong;
        if (firstWrong.empty()) {
          firstWrong = std::string(to_string(e.R)) + " -> " + to_string(e.S) + ": " + rep.str();
        }
      }
    };
    for (Expect const& e : table) {
      run(e, FilterKind::productFilter);
    }
    // A finite quotient cannot carry a Lukasiewicz filter: every class would
    // be closed, and [0,1] is no finite union of two or more disjoint closed
    // sets. The shipped odot2 is such a coextension over a t-norm base, with
    // (2,2) maximal and both 2 and 2 * 2 = 0 of Lukasiewicz kind.
    {
      ArchCoextensionSpec const spec = load("odot2.spec").arch->spec();
      ValidationReport const    rep  = validate_spec(spec);
      ++realised;
      if (!rep.ok()) {
        ++wrong;
        firstWrong = firstWrong.empty() ? "lukasiewicz -> lukasiewicz: " + rep.str() : firstWrong;
      }
    }
    line("5", wrong == 0,
         "validate_spec on " + std::to_string(realised)
             + " realised specs: impossible pairs rejected, families and trivial pairs accepted"
             + (firstWrong.empty() ? "" : " (" + firstWrong + ")"));
  }

  // 6. intertwining relation for every legal family and alpha pair
  void intertwining_all() {
    std::vector<double> const alphas = {0.5, 1, 2, 3};
    double                    worst  = 0;
    std::size_t               combos = 0, triples = 0, redraws = 0;
    std::uint64_t             seed   = 1;
    for (FamilyCase const& c : all_families()) {
      for (double aR : alphas) {
        for (double aS : alphas) {
          if (c.filter == FilterKind::lukasiewiczFilter && (aR < 1 || aS < 1)) {
            continue;
          }
          IntertwineResult const r = intertwining(c, aR, aS, 100, seed++);
          worst                    = std::max(worst, r.maxDeviation);
          triples += r.triples;
          redraws += r.redraws;
          ++combos;
        }
      }
    }
    line("6", worst <= 1e-12,
         std::to_string(combos) + " (family, alphaR, alphaS) combinations, "
             + std::to_string(triples) + " triples: max deviation " + fmt("%.2g", worst)
             + " <= 1e-12 (" + std::to_string(redraws) + " draws left a class and were redrawn)");
  }

  // 7. semilattice suite
  void semilattice() {
    std::mt19937_64 rng(20240611);
    int             accepted = 0, bad = 0;
    for (int trial = 0; trial < 100000 && accepted < 100; ++trial) {
      FixpointSet const E = random_fixpoint_set(rng);
      if (!validate_E(E).ok()) {
        continue;
      }
      ++accepted;
      std::vector<double> xs;
      for (int i = 0; i <= 512; ++i) {
        xs.push_back(i / 512.0);
      }
      for (ClassShape const& c : E.parts) {
        for (double x : {c.lo, c.hi}) {
          xs.push_back(x);
          xs.push_back(std::nextafter(x, -1.0));
          xs.push_back(std::nextafter(x, 2.0));
        }
      }
      for (double x : xs) {
        if (!E.host.contains(x)) {
          continue;
        }
        try {
          double const y = idempotent_apply(E, x);
          bad += (y == x) != E.contains(x) || !E.contains(y) || idempotent_apply(E, y) != y;
        } catch (Error const&) {
          ++bad;
        }
      }
    }
    line("7", accepted == 100 && bad == 0,
         std::to_string(accepted) + " random valid fixpoint sets: fixpoint set of the translation"
             + " equals E, " + std::to_string(bad) + " mismatches");

    LoadedSpec const          four = load("odot4.spec");
    TnormFn const             e    = four.fn();
    ClassShape const&         F    = four.partition()[four.partition().size() - 1];
    std::uniform_real_distribution<double> unit(0, 1);
    double                    dev  = 0;
    for (int i = 0; i < 10000; ++i) {
      double const f = F.lo + (F.hi - F.lo) * (1 - unit(rng));
      double const x = unit(rng);
      double const y = e(f, x);
      dev            = std::max(dev, std::abs(e(f, y) - y));
    }
    line("7", dev <= 1e-12,
         "odot4 filter elements act idempotently at 10^4 points: max deviation "
             + fmt("%.2g", dev) + " <= 1e-12");
  }

}  // namespace

int main() {
  try {
    oracle_equivalence();
    axiom_suite();
    quotient_recovery();
    finite_algebra();
    classification();
    intertwining_all();
    semilattice();
  } catch (std::exception const& e) {
    std::printf("[FAIL] aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d unexpected failure(s)\n", hard_failures);
  return hard_failures == 0 ? 0 : 1;
}
