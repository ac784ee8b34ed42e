#pragma once

// Semilattice real coextensions: the filter acts by idempotent maps whose
// fixpoint sets are parametrised, class by class, by an order-preserving
// or order-reversing bijection from the filter.

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "tnorm/interval_partition.hpp"  // for ClassShape, Orientation
#include "tnorm/quotient_model.hpp"      // for QuotientModel, PairFamily
#include "tnorm/report.hpp"              // for ValidationReport

namespace tnorm {

  //! A finite union of intervals and points inside a host interval.
  struct FixpointSet {
    ClassShape              host = ClassShape::interval(0, 1, true, true);
    std::vector<ClassShape> parts;

    bool contains(double x) const noexcept;
  };

  //! max { e in E : e <= a }. Throws Error if the maximum does not exist.
  double idempotent_apply(FixpointSet const& E, double a);

  //! Closure under suprema, suprema at left limit points, and a member
  //! below every element of the host.
  ValidationReport validate_E(FixpointSet const& E);

  //! preserving: r ^ f; reversing: 0 if r <= 1 - f, else r.
  double goedel_apply(Orientation o, double f, double r);

  enum class SemiContext { maximal, nonMaximal, singletonR, singletonS };

  //! trivial or one of goedelGoedel, goedelRgoedel, rgoedelRgoedel.
  //! Throws Error for non-semilattice kinds.
  FamilyId pair_case_semilattice(CompositionKind R, CompositionKind S, SemiContext ctx);

  //! Throws Error if z lies outside [0,1] or r outside [0,1].
  double lambda_rs_semilattice(FamilyId family, double z, double r);

  struct SemiCoextensionSpec {
    QuotientModel                           quotient;
    IntervalPartition                       partition;
    std::vector<std::optional<Orientation>> nu;  // per class
    std::vector<PairFamily>                 pairs;
  };

  ValidationReport validate_spec(SemiCoextensionSpec const& spec);

  class SemiCoextension {
   public:
    //! Throws Error listing every issue if validate_spec fails.
    explicit SemiCoextension(SemiCoextensionSpec spec);

    double operator()(double a, double b) const {
      return evaluate(a, b);
    }
    double evaluate(double a, double b) const;

    SemiCoextensionSpec const& spec() const noexcept {
      return _spec;
    }
    CompositionKind kind(std::size_t cls) const noexcept {
      return _kinds[cls];
    }

    //! Fixpoint set of the translation by the filter element with local
    //! coordinate f, restricted to class cls.
    FixpointSet fixpoints(double f, std::size_t cls) const;

   private:
    struct Unchecked {};
    SemiCoextension(SemiCoextensionSpec spec, Unchecked);
    void compile();

    friend ValidationReport validate_spec(SemiCoextensionSpec const&);

    SemiCoextensionSpec           _spec;
    std::vector<CompositionKind>  _kinds;
    std::vector<std::vector<int>> _pairIndex;
  };

}  // namespace tnorm
