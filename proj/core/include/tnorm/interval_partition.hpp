#pragma once

// Partitions of [0,1] into singleton and interval classes, the affine
// coordinate maps onto each class's unit interval, and the composition
// kind a class can carry.

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "tnorm/finite_tomonoid.hpp"  // for Error
#include "tnorm/report.hpp"           // for ValidationReport

namespace tnorm {

  enum class ShapeKind { singleton, interval };

  struct ClassShape {
    ShapeKind kind        = ShapeKind::interval;
    double    lo          = 0;
    double    hi          = 1;
    bool      leftClosed  = true;
    bool      rightClosed = true;
    // An interval made of singleton filter classes; only meaningful when
    // the quotient is itself a t-norm (see QuotientModel).
    bool chain = false;

    static ClassShape point(double x) {
      return {ShapeKind::singleton, x, x, true, true, false};
    }
    static ClassShape interval(double lo, double hi, bool lc, bool rc) {
      return {ShapeKind::interval, lo, hi, lc, rc, false};
    }

    bool is_singleton() const noexcept {
      return kind == ShapeKind::singleton;
    }
    bool contains(double x) const noexcept;
    bool has_min() const noexcept {
      return is_singleton() || leftClosed;
    }
    bool has_max() const noexcept {
      return is_singleton() || rightClosed;
    }

    bool operator==(ClassShape const&) const = default;
  };

  struct IntervalPartition {
    std::vector<ClassShape> classes;

    std::size_t size() const noexcept {
      return classes.size();
    }
    ClassShape const& operator[](std::size_t i) const {
      return classes[i];
    }
    bool operator==(IntervalPartition const&) const = default;
  };

  enum class CompositionKind {
    lukasiewicz,
    product,
    reversedProduct,
    power,
    goedel,
    reversedGoedel,
    trivialSingleton
  };

  char const* to_string(CompositionKind k) noexcept;

  enum class Orientation { preserving, reversing };

  //! Throws Error on an empty class list.
  ValidationReport validate(IntervalPartition const& p);

  CompositionKind archimedean_kind(ClassShape const& s) noexcept;

  //! Throws Error for a reversing orientation on a left-open class.
  CompositionKind semilattice_kind(ClassShape const& s, Orientation o);

  struct Located {
    std::size_t cls;
    double      local;

    bool operator==(Located const&) const = default;
  };

  //! Local coordinate (x - lo) / (hi - lo); 0 on singletons.
  //! Throws Error if x is outside [0,1] or not covered.
  Located locate(IntervalPartition const& p, double x);

  double to_global(ClassShape const& s, double local) noexcept;
  double to_global(IntervalPartition const& p, Located const& l);

  //! The unit interval a kind lives on: [0,1], (0,1], [0,1) or (0,1).
  struct UnitInterval {
    bool leftClosed;
    bool rightClosed;

    bool contains(double u) const noexcept {
      return (leftClosed ? u >= 0 : u > 0) && (rightClosed ? u <= 1 : u < 1);
    }
  };

  UnitInterval canonical_interval(CompositionKind k) noexcept;

  //! Closed endpoints of s plus `interior` evenly spaced inner points;
  //! just the point for a singleton.
  std::vector<double> sample_class(ClassShape const& s, std::size_t interior);

  //! Closed ends of u, points 1e-9 inside open ends, and `interior`
  //! evenly spaced inner points.
  std::vector<double> sample_unit(UnitInterval u, std::size_t interior);

  //! Class borders plus 0 and 1, sorted and deduplicated.
  std::vector<double> boundaries(IntervalPartition const& p);

}  // namespace tnorm
