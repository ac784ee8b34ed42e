#pragma once

// Numerical checks of t-norm axioms on grids, left-continuity probing,
// quotient recovery, closed-form reference t-norms and function comparison.

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "tnorm/finite_tomonoid.hpp"     // for FiniteTomonoid
#include "tnorm/interval_partition.hpp"  // for IntervalPartition
#include "tnorm/quotient_model.hpp"      // for TnormFn
#include "tnorm/report.hpp"              // for GridReport

namespace tnorm {

  //! Names accepted by oracle().
  std::vector<std::string> const& oracle_names();

  //! Closed forms odot1 .. odot4, evaluated on (max, min) so that the
  //! result is exactly commutative. Throws Error for an unknown name or
  //! arguments outside [0,1].
  double oracle(std::string const& name, double a, double b);

  //! Callable wrapper around oracle(name, ., .).
  TnormFn oracle_fn(std::string const& name);

  //! Class borders of the partition each oracle is built on.
  std::vector<double> oracle_boundaries(std::string const& name);

  //! k/(n-1) for k < n, plus every boundary and boundary +- 2^-30 inside
  //! [0,1]; sorted, deduplicated. Throws Error for n < 2.
  std::vector<double> grid_points(std::size_t n, std::vector<double> const& boundaries = {});

  //! Associativity, commutativity, identity and monotonicity reports, in
  //! that order. Associativity runs on all hardware threads.
  std::vector<GridReport> check_axioms_grid(TnormFn const&             f,
                                            std::size_t                n,
                                            double                     tol,
                                            std::vector<double> const& boundaries = {});

  //! At every a in `points` (plus the boundaries) and b on a 101-point grid
  //! plus the boundaries, compares f(a,b) with f(a - 2^-k, b) for k = 10..40.
  //! The deviation is taken at k = 40.
  GridReport check_left_continuity(TnormFn const&             f,
                                   std::vector<double> const& boundaries,
                                   double                     tol,
                                   std::vector<double> const& points = {});

  //! Finite tomonoid induced on the classes of p. Throws Error if sampled
  //! products of two classes straddle several classes or the induced table
  //! is not a tomonoid.
  FiniteTomonoid recover_quotient(TnormFn const& f, IntervalPartition const& p);

  //! max |f - g| over grid_points(n, boundaries) squared.
  GridReport compare(TnormFn const&             f,
                     TnormFn const&             g,
                     std::size_t                n,
                     std::vector<double> const& boundaries = {});

  //! For filter elements f and class elements r, t: |(r*f)*t - (r*t)*f|.
  GridReport commuting_report(TnormFn const&           f,
                              IntervalPartition const& p,
                              std::size_t              sampleCount);

}  // namespace tnorm
