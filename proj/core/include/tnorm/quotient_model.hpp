#pragma once

// Pieces shared by the Archimedean and the semilattice coextensions:
// the quotient a coextension is built over, pair families with their
// parameter maps, and the class-level dispatch of a product.

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "tnorm/finite_tomonoid.hpp"     // for FiniteTomonoid
#include "tnorm/interval_partition.hpp"  // for IntervalPartition, Located

namespace tnorm {

  //! A binary operation on [0,1].
  using TnormFn = std::function<double(double, double)>;

  enum class FamilyId {
    trivial,
    lukLuk,
    lukRprod,
    prodLuk,
    prodProd,
    prodRprod,
    prodPow,
    rprodRprod,
    powRprod,
    powPow,
    goedelGoedel,
    goedelRgoedel,
    rgoedelRgoedel
  };

  char const*             to_string(FamilyId f) noexcept;
  std::optional<FamilyId> family_from_string(std::string const& s) noexcept;

  //! How t in T selects its map inside a pair family.
  struct ZMap {
    enum class Kind { affine, step };

    Kind kind = Kind::affine;
    // affine: c0 + c1 t; step: a for t <= c0, b for t > c0
    double c0 = 0;
    double c1 = 0;
    double a  = 0;
    double b  = 0;

    static ZMap affine(double c0, double c1) {
      return {Kind::affine, c0, c1, 0, 0};
    }
    static ZMap step(double threshold, double low, double high) {
      return {Kind::step, threshold, 0, low, high};
    }

    double operator()(double t) const noexcept {
      if (kind == Kind::affine) {
        return c0 + c1 * t;
      }
      return t <= c0 ? a : b;
    }
    bool monotone() const noexcept {
      return kind == Kind::affine ? c1 >= 0 : a <= b;
    }
    bool operator==(ZMap const&) const = default;
  };

  struct PairFamily {
    std::size_t R      = 0;
    std::size_t T      = 0;
    FamilyId    family = FamilyId::trivial;
    // Cap on the parameter; the selected parameter is zmap(t) ^ m.
    std::optional<double> m;
    ZMap                  zmap;
    // Admissible parameters for the goedel -> reversed-goedel family.
    // Empty means every point of the target class.
    std::vector<double> sprime;

    bool operator==(PairFamily const&) const = default;
  };

  //! The quotient of a coextension: either a finite tomonoid with one
  //! element per class, or a t-norm on [0,1] of which some points are
  //! expanded into classes and the gaps are chain classes.
  class QuotientModel {
   public:
    QuotientModel() = default;
    explicit QuotientModel(FiniteTomonoid t);
    //! anchors[i] is the base point of class i; ignored for chain classes.
    QuotientModel(TnormFn base, std::vector<double> anchors, IntervalPartition const& p);

    bool is_finite() const noexcept {
      return _finite.has_value();
    }
    FiniteTomonoid const& finite() const {
      return *_finite;
    }
    TnormFn const& base() const noexcept {
      return _base;
    }
    std::vector<double> const& anchors() const noexcept {
      return _anchors;
    }
    std::size_t size() const noexcept {
      return _classes;
    }

    //! Product at the quotient level. For chain targets the local
    //! coordinate is the position inside the chain class, otherwise 0.
    Located multiply(Located const& x, Located const& y) const;

    //! Product class of two non-chain classes.
    std::size_t class_product(std::size_t R, std::size_t T) const;
    bool        is_maximal(std::size_t R, std::size_t T) const;

    //! Base coordinate of a point of the expanded chain.
    double collapse(Located const& x) const;

   private:
    Located uncollapse(double s) const;

    std::optional<FiniteTomonoid>  _finite;
    TnormFn                        _base;
    std::vector<double>            _anchors;
    std::vector<bool>              _chain;
    std::size_t                    _classes = 0;
    std::vector<std::vector<char>> _maximal;
  };

  //! Outcome of locating a product at the class level.
  struct Dispatch {
    enum class Kind {
      value,         // result fully determined: see value
      filterFilter,  // both arguments in the filter class
      filterAction,  // r is a filter element acting on class T at t
      bottom,        // smallest element of class S
      pair           // maximal pair (R,T) -> S, non-singleton classes
    };
    Kind        kind  = Kind::value;
    double      value = 0;
    std::size_t R = 0, T = 0, S = 0;
    double      r = 0, t = 0;
  };

  //! Class-level case analysis of a * b, with the larger argument taken
  //! as the R side so that the result is commutative by construction.
  Dispatch dispatch(QuotientModel const&     q,
                    IntervalPartition const& p,
                    double                   a,
                    double                   b);

  //! Clamp a local coordinate into [0,1] when the excursion is at most
  //! 1e-12; larger excursions throw Error.
  double clamp_local(double u);

  //! Global point of class s at a local coordinate. A result that rounding
  //! pushed onto an open end of s is moved to the nearest double inside s.
  double place(ClassShape const& s, double local);

  //! Largest rounding excursion place() absorbs; beyond it throws Error.
  constexpr double clamp_width = 1e-12;

  //! Width of the band in which x + y is treated as equal to 1.
  constexpr double tie_slack = 1e-13;

  //! x + y <= 1, with near-ties resolved toward the lower branch so that a
  //! point on a discontinuity line gets its left-limit value even after
  //! rounding of class coordinates.
  inline bool sum_at_most_one(double x, double y) noexcept {
    return x + y <= 1 + tie_slack;
  }

  //! Evaluates f on sample points of every class pair and checks that each
  //! product lands in the class the quotient predicts. Returns the first
  //! problem found, or an empty string.
  std::string quotient_consistency(QuotientModel const&     q,
                                   IntervalPartition const& p,
                                   TnormFn const&           f);

}  // namespace tnorm
